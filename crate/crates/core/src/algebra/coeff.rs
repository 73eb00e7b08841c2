//! Exact coefficient rings.
//!
//! Everything in [`crate::algebra`] is generic over a [`Coeff`]. The library
//! itself works over [`BigInt`]; [`BigRational`] is used where a field is
//! needed (univariate GCDs, recurrence fitting), and the machine integers are
//! handy for cheap cross-checks in tests. Floating point types deliberately do
//! not implement the trait.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

pub trait Coeff:
    Signed
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + Send
    + Sync
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// `self / rhs` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every coefficient ring contains the integers")
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += &a.mul_ref(b);
    }
}

impl Coeff for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

macro_rules! machine_coeff {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn mul_ref(&self, rhs: &Self) -> Self {
                self.checked_mul(*rhs).expect("coefficient overflow")
            }

            fn div_exact(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }
        }
    )*};
}

machine_coeff!(i64, i128);
