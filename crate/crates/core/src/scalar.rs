//! Scalar abstraction shared by every exact and floating-point code path.
//!
//! Formal-series identities are checked over [`Rational`](crate::Rational)
//! (arbitrary precision); operator models whose entries need irrational square
//! roots fall back to `f64`.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// A field element usable as a series coefficient, Jacobi parameter or
/// matrix entry.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `true` when arithmetic is exact, so comparisons must be equalities.
    const EXACT: bool;

    /// Square root inside the field, if it exists there.
    fn exact_sqrt(&self) -> Option<Self>;

    /// Nearest "simple" element to a float. Rationals use a bounded-denominator
    /// continued-fraction approximation; floats are returned unchanged.
    fn snap_f64(x: f64) -> Option<Self>;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Equality for exact types, relative closeness (scale `max(1, |a|, |b|)`)
    /// otherwise.
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let a = self.to_f64_lossy();
            let b = other.to_f64_lossy();
            let scale = 1f64.max(a.abs()).max(b.abs());
            (a - b).abs() <= tol * scale
        }
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64_exact(num) / Self::from_i64_exact(den)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn snap_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn snap_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x as f32)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| Ratio::new(n, d))
    }

    fn snap_f64(x: f64) -> Option<Self> {
        // 10^6 bounds the denominator; callers verify the snapped value exactly.
        let r = Ratio::<i64>::approximate_float(x)?;
        let bounded = best_rational(x, 1_000_000).unwrap_or(r);
        Some(BigRational::new(BigInt::from(*bounded.numer()), BigInt::from(*bounded.denom())))
    }
}

fn best_rational(x: f64, max_den: i64) -> Option<Ratio<i64>> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-12 || ((h1 as f64 / k1 as f64) - x).abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    (k1 != 0).then(|| Ratio::new(h1, k1))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).ok()?;
        let q = BigInt::from_str(q.trim()).ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_val = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).ok()?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_val = BigInt::from_str(frac).ok()?;
        let magnitude = int_val.abs() * &scale + frac_val;
        let signed = if negative { -magnitude } else { magnitude };
        return Some(BigRational::new(signed, scale));
    }
    BigInt::from_str(t).ok().map(BigRational::from_integer)
}

/// `"p/q"` for non-integers, `"p"` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact rational `num/den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts between scalar types through `f64` (or exactly, rational to rational).
pub fn convert<S: Scalar, T: Scalar>(x: &S) -> T {
    T::from_f64(x.to_f64_lossy()).expect("finite value")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_only_for_squares() {
        assert_eq!(rat(9, 4).exact_sqrt(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).exact_sqrt(), None);
        assert_eq!(rat(-1, 1).exact_sqrt(), None);
        assert_eq!(rat(0, 1).exact_sqrt(), Some(rat(0, 1)));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-7"), Some(rat(-7, 1)));
        assert_eq!(parse_rational("-0.25"), Some(rat(-1, 4)));
        assert_eq!(parse_rational("1.5"), Some(rat(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(format_rational(&rat(-4, 6)), "-2/3");
        assert_eq!(format_rational(&rat(5, 1)), "5");
    }

    #[test]
    fn snapping_recovers_simple_fractions() {
        assert_eq!(BigRational::snap_f64(0.375), Some(rat(3, 8)));
        assert_eq!(BigRational::snap_f64(-1.0 / 3.0), Some(rat(-1, 3)));
        assert_eq!(BigRational::snap_f64(2.0), Some(rat(2, 1)));
    }

    #[test]
    fn float_closeness_is_relative() {
        assert!(1e9f64.close_to(&(1e9 + 0.5), 1e-9));
        assert!(!1.0f64.close_to(&1.001, 1e-9));
        assert!(!rat(1, 3).close_to(&rat(1, 3 + 1), 1.0));
    }
}
