//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use plethygen::verify::{run, Suite, SuiteParams, VerificationReport};

struct Criterion {
    name: &'static str,
    budget: Duration,
    suites: &'static [(Suite, SuiteParams)],
}

const fn max(m: u32) -> SuiteParams {
    SuiteParams {
        max: Some(m),
        n: None,
        w: None,
        h: None,
    }
}

const DEFAULT: SuiteParams = SuiteParams {
    max: None,
    n: None,
    w: None,
    h: None,
};

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "table of A_mu for |mu| <= 4",
        budget: Duration::from_secs(30),
        suites: &[(Suite::Table1, DEFAULT)],
    },
    Criterion {
        name: "size-5 sums and conjugate reciprocity",
        budget: Duration::from_secs(300),
        suites: &[(Suite::AppendixA, DEFAULT)],
    },
    Criterion {
        name: "ssyt, qehr and gauss methods agree",
        budget: Duration::from_secs(120),
        suites: &[(Suite::QehrOracle, DEFAULT)],
    },
    Criterion {
        name: "recurrences for w, h <= 8",
        budget: Duration::from_secs(60),
        suites: &[(Suite::Recurrences, max(8))],
    },
    Criterion {
        name: "geometry identities for w <= 4, h <= 5",
        budget: Duration::from_secs(180),
        suites: &[(Suite::Geometry, DEFAULT)],
    },
    Criterion {
        name: "Heine and Carlitz",
        budget: Duration::from_secs(60),
        suites: &[(Suite::Heine, max(6)), (Suite::Carlitz, max(4))],
    },
    Criterion {
        name: "reciprocity for |mu| <= 6",
        budget: Duration::from_secs(300),
        suites: &[(Suite::Reciprocity, max(6)), (Suite::HookReciprocity, max(6))],
    },
    Criterion {
        name: "denominator d_w for |mu| <= 6",
        budget: Duration::from_secs(300),
        suites: &[(Suite::DenominatorThm, max(6))],
    },
    Criterion {
        name: "KM series through n = 20",
        budget: Duration::from_secs(10),
        suites: &[(
            Suite::Km,
            SuiteParams {
                max: None,
                n: Some(20),
                w: None,
                h: None,
            },
        )],
    },
    Criterion {
        name: "h* palindromicity and inequalities for |mu| <= 6",
        budget: Duration::from_secs(120),
        suites: &[(Suite::HStar, max(6))],
    },
    Criterion {
        name: "GL_n plethysm against SL2 coefficients",
        budget: Duration::from_secs(120),
        suites: &[(Suite::GlnSl2, DEFAULT)],
    },
    Criterion {
        name: "conjectured denominators for |mu| <= 7 (reported)",
        budget: Duration::from_secs(300),
        suites: &[(Suite::DenominatorConj, max(7))],
    },
];

/// A non-blocking suite passes when every case ran; its failures are listed.
fn judge(r: &VerificationReport) -> (bool, Vec<String>) {
    let notes: Vec<String> = r
        .failures()
        .map(|c| match c.diagnostic.as_str() {
            "" => c.input.clone(),
            d => format!("{} ({d})", c.input),
        })
        .collect();
    let ran = r.cases.iter().all(|c| !c.diagnostic.starts_with("error:"));
    (r.passed() && ran, notes)
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let mut pass = true;
        let mut notes = Vec::new();
        for (suite, params) in c.suites {
            match run(*suite, params) {
                Ok(r) => {
                    let (ok, n) = judge(&r);
                    pass &= ok;
                    notes.extend(n.into_iter().map(|n| format!("{suite}: {n}")));
                }
                Err(e) => {
                    pass = false;
                    notes.push(format!("{suite}: {e}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            notes.push(format!("over budget of {}s", c.budget.as_secs()));
        }
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2}. {} ({:.1}s)", i + 1, c.name, elapsed.as_secs_f64());
        for n in notes {
            println!("        {n}");
        }
        failed += usize::from(!pass);
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
