//! Scalar abstraction for the floating-point lane of the crate.
//!
//! Everything that sums spectra or evaluates transforms is generic over
//! [`Real`]; `f64` is the type actually used by the CLI and the test suite,
//! and the stated accuracy targets (1e-12 relative on regulators, etc.)
//! assume it. `f32` satisfies the trait but is only as accurate as `f32`.

use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::str::FromStr;

pub trait Real:
    Float + FromPrimitive + FromStr + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Convert an `f64` constant into the scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 constant")
    }

    /// Lossy view as `f64`, for error messages and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + FromStr + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
}

/// Compensated (Kahan) accumulator.
///
/// Long spectral sums must agree between differently-grouped routes to
/// 1e-12 relative; plain left-to-right summation of 10⁵ terms does not
/// guarantee that, compensation does.
#[derive(Clone, Copy, Debug)]
pub struct KahanSum<F: Real> {
    sum: F,
    carry: F,
}

impl<F: Real> KahanSum<F> {
    pub fn new() -> Self {
        KahanSum {
            sum: F::zero(),
            carry: F::zero(),
        }
    }

    pub fn add(&mut self, x: F) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> F {
        self.sum
    }
}

impl<F: Real> Default for KahanSum<F> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_small_terms() {
        let mut acc = KahanSum::<f64>::new();
        acc.add(1.0);
        for _ in 0..1_000_000 {
            acc.add(1e-16);
        }
        let plain: f64 = {
            let mut s = 1.0f64;
            for _ in 0..1_000_000 {
                s += 1e-16;
            }
            s
        };
        assert!((acc.value() - (1.0 + 1e-10)).abs() < 1e-14);
        // the plain sum loses every term below the ulp of 1.0
        assert_eq!(plain, 1.0);
    }

    #[test]
    fn of_round_trips_constants() {
        assert_eq!(f64::of(1.5), 1.5);
        assert_eq!(f32::of(0.25), 0.25f32);
    }
}
