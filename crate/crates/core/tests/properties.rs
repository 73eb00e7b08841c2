use num_bigint::BigInt;
use plethygen::combinat::{partitions_of, Partition};
use plethygen::sl2::{self, SpletMethod};
use plethygen::{glnp, ptop, qehr, FactoredRational};
use proptest::prelude::*;

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (1..=max_size).prop_flat_map(|w| {
        let all = partitions_of(w).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn conjugation_is_an_involution(mu in partition(12)) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn splet_is_a_character(mu in partition(4), h in 0u32..5) {
        let f = sl2::splet(&mu, h, SpletMethod::Ssyt).unwrap();
        prop_assert!(f.is_symmetric());
        let d = sl2::decompose_qint(&f).unwrap();
        prop_assert_eq!(d.to_laurent(), f);
    }

    #[test]
    fn qehr_series_matches_tableau_sums(mu in partition(4), h in 0u32..4) {
        let series = qehr::qehr_mu(&mu).unwrap().series(h);
        let direct = sl2::splet(&mu, h, SpletMethod::Ssyt).unwrap();
        prop_assert_eq!(series.coeff(h), &direct);
    }

    #[test]
    fn a_mu_collects_top_weights(mu in partition(4), h in 0u32..4) {
        let a = ptop::compute_a(&mu, None).unwrap();
        let d = sl2::decompose_qint(&sl2::splet(&mu, h, SpletMethod::Ssyt).unwrap()).unwrap();
        let s = a.series(h);
        prop_assert_eq!(s.coeff(h), &d.top_weights());
    }

    #[test]
    fn json_round_trip(mu in partition(4)) {
        let a = ptop::compute_a(&mu, None).unwrap();
        let back = FactoredRational::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), a.to_json());
        prop_assert!(back.equals(&a));
    }

    #[test]
    fn plethysm_conserves_weight(nu in partition(3), mu in partition(3), n in 1usize..=3) {
        prop_assume!(nu.size() * mu.size() <= 6);
        let e = glnp::schur_decompose(&glnp::plethysm_poly(&nu, &mu, n).unwrap()).unwrap();
        for (lambda, c) in e.iter() {
            prop_assert_eq!(lambda.size(), nu.size() * mu.size());
            prop_assert!(lambda.len() <= n);
            prop_assert!(*c > BigInt::from(0));
        }
    }
}

#[test]
fn plethysm_dimension_matches_tableau_count() {
    // The specialisation x_i = 1 counts semistandard tableaux of the outer
    // shape over the monomials of the inner Schur polynomial.
    for (nu, mu, n) in [("2", "2", 2), ("2,1", "1,1", 3), ("3", "2", 2)] {
        let nu: Partition = nu.parse().unwrap();
        let mu: Partition = mu.parse().unwrap();
        let p = glnp::plethysm_poly(&nu, &mu, n).unwrap();
        let total: BigInt = p.terms().values().sum();
        let inner = plethygen::combinat::ssyt_count(&mu, n as u32);
        let expect = plethygen::combinat::ssyt_count(&nu, u32::try_from(inner).unwrap());
        assert_eq!(total, expect, "{nu}[{mu}]");
    }
}
