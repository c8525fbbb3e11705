//! Scalar types for valuations, metrics and probabilities.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::Num;

/// Numeric carrier for lattice valuations.
///
/// Rationals compare exactly; floats compare within a relative tolerance.
pub trait Scalar: Clone + PartialOrd + Num + Debug + Display + Send + Sync + 'static {
    fn approx_eq(&self, other: &Self) -> bool;

    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_usize(n: usize) -> Self {
        Self::from_ratio(n as i64, 1)
    }

    fn approx_le(&self, other: &Self) -> bool {
        self < other || self.approx_eq(other)
    }
}

impl Scalar for Ratio<i64> {
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn approx_eq(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }

            fn from_ratio(numer: i64, denom: i64) -> Self {
                numer as $t / denom as $t
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-5);
