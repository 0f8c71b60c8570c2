//! Outward-rounded interval arithmetic over f64 endpoints.
//!
//! Every operation returns an interval that contains the exact real result
//! for any choice of members of the operands. Directed rounding is emulated
//! by nudging endpoints to the next representable float, which is sound
//! because the underlying IEEE operations are correctly rounded.

mod complex;
pub mod elem;
mod special;

pub use complex::ComplexInterval;
pub use special::{gamma_fn, hurwitz_zeta, riemann_zeta};

use crate::error::Error;

/// Closed real interval `[lo, hi]` with outward-rounded endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

pub(crate) fn next_down(x: f64) -> f64 {
    if x.is_infinite() && x < 0.0 {
        x
    } else {
        x.next_down()
    }
}

pub(crate) fn next_up(x: f64) -> f64 {
    if x.is_infinite() && x > 0.0 {
        x
    } else {
        x.next_up()
    }
}

/// Endpoint sum with the exact rounding residual; nudging happens only when
/// the operation was inexact, so exact arithmetic (zeros, dyadics) stays exact.
#[inline]
fn sum_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s.is_infinite() {
        return if s > 0.0 { f64::MAX } else { s };
    }
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    if err < 0.0 {
        next_down(s)
    } else {
        s
    }
}

#[inline]
fn sum_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s.is_infinite() {
        return if s < 0.0 { f64::MIN } else { s };
    }
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    if err > 0.0 {
        next_up(s)
    } else {
        s
    }
}

/// Endpoint product with exact residual via FMA and the convention
/// `0 * inf = 0` (an infinite endpoint stands for an unbounded set of finite
/// numbers, so products with the point 0 are 0).
#[inline]
fn prod_residual(a: f64, b: f64) -> (f64, f64) {
    if a == 0.0 || b == 0.0 {
        return (0.0, 0.0);
    }
    let p = a * b;
    if !p.is_finite() {
        return (p, 0.0);
    }
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Interval enclosing pi.
    pub fn pi() -> Interval {
        // f64 PI rounds down from the true value.
        Interval::new(std::f64::consts::PI, std::f64::consts::PI.next_up())
    }

    /// Interval enclosing 2*pi.
    pub fn two_pi() -> Interval {
        Interval::new(
            (2.0 * std::f64::consts::PI).next_down(),
            (2.0 * std::f64::consts::PI).next_up(),
        )
    }

    /// Interval enclosing ln 2.
    pub fn ln_2() -> Interval {
        // f64 LN_2 rounds down from the true value.
        Interval::new(std::f64::consts::LN_2, std::f64::consts::LN_2.next_up())
    }

    pub fn new(lo: f64, hi: f64) -> Interval {
        debug_assert!(!lo.is_nan() && !hi.is_nan(), "NaN endpoint");
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Interval {
        debug_assert!(!x.is_nan());
        Interval { lo: x, hi: x }
    }

    /// Smallest interval containing both `x` and the rounding slack of its
    /// decimal or extended-precision source.
    pub fn with_ulps(x: f64, ulps: u32) -> Interval {
        let mut lo = x;
        let mut hi = x;
        for _ in 0..ulps {
            lo = next_down(lo);
            hi = next_up(hi);
        }
        Interval { lo, hi }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn rad(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0.0 && 0.0 <= self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    /// `|x|` for all members.
    pub fn abs(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            -*self
        } else {
            Interval {
                lo: 0.0,
                hi: self.hi.max(-self.lo),
            }
        }
    }

    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn min(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    /// Checked division; errors when the divisor contains zero.
    pub fn try_div(&self, rhs: &Interval) -> Result<Interval, Error> {
        if rhs.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        // quotient with a directed correction from the FMA residual:
        // a/b = q + r/b with r = a - q*b computed exactly
        let q_down = |a: f64, b: f64| -> f64 {
            if a == 0.0 {
                return 0.0;
            }
            let q = a / b;
            if !q.is_finite() {
                return if q > 0.0 { f64::MAX } else { q };
            }
            let r = f64::mul_add(-q, b, a); // a - q*b
            if r == 0.0 || (r > 0.0) == (b > 0.0) {
                q
            } else {
                next_down(q)
            }
        };
        let q_up = |a: f64, b: f64| -> f64 {
            if a == 0.0 {
                return 0.0;
            }
            let q = a / b;
            if !q.is_finite() {
                return if q < 0.0 { f64::MIN } else { q };
            }
            let r = f64::mul_add(-q, b, a);
            if r == 0.0 || (r > 0.0) != (b > 0.0) {
                q
            } else {
                next_up(q)
            }
        };
        let pairs = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let lo = pairs
            .iter()
            .map(|&(a, b)| q_down(a, b))
            .fold(f64::INFINITY, f64::min);
        let hi = pairs
            .iter()
            .map(|&(a, b)| q_up(a, b))
            .fold(f64::NEG_INFINITY, f64::max);
        Ok(Interval { lo, hi })
    }

    /// Reciprocal; errors when the interval contains zero.
    pub fn recip(&self) -> Result<Interval, Error> {
        Interval::ONE.try_div(self)
    }

    /// `x^n` with exact sign analysis; sound for intervals containing zero.
    pub fn powi(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::ONE;
        }
        let mut acc = Interval::ONE;
        let mut base = *self;
        let mut k = n;
        // binary powering keeps widths tame; fix sign at the end for even n
        loop {
            if k & 1 == 1 {
                acc = acc * base;
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base * base;
        }
        if n % 2 == 0 && acc.lo < 0.0 {
            // even powers are nonnegative
            acc.lo = 0.0;
        }
        acc
    }

    /// Square root; requires a nonnegative interval.
    pub fn sqrt(&self) -> Result<Interval, Error> {
        if self.lo < 0.0 {
            return Err(Error::Domain("sqrt of negative interval"));
        }
        Ok(Interval {
            lo: next_down(self.lo.sqrt()).max(0.0),
            hi: next_up(self.hi.sqrt()),
        })
    }

    /// Square root of a quantity known nonnegative by construction; the lower
    /// endpoint is clamped to zero before rounding.
    pub fn sqrt_nonneg(&self) -> Interval {
        if self.hi < 0.0 {
            return Interval::ZERO;
        }
        Interval {
            lo: next_down(self.lo.max(0.0).sqrt()).max(0.0),
            hi: next_up(self.hi.sqrt()),
        }
    }

    /// Scale by an exact power of two (exact except at range boundaries).
    pub fn scale2(&self, k: i32) -> Interval {
        let f = |x: f64| {
            let y = x * f64::powi(2.0, k);
            y
        };
        // powers of two are exact multiplications unless the result is
        // subnormal or overflows; nudge outward to stay sound there
        let lo = f(self.lo);
        let hi = f(self.hi);
        let exact = k.abs() < 1000 && lo.is_finite() && hi.is_finite() && lo.abs() > f64::MIN_POSITIVE && hi.abs() > f64::MIN_POSITIVE;
        if exact && lo != 0.0 && hi != 0.0 {
            Interval { lo, hi }
        } else {
            Interval {
                lo: next_down(lo.min(hi)),
                hi: next_up(lo.max(hi)),
            }
        }
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: sum_down(self.lo, rhs.lo),
            hi: sum_up(self.hi, rhs.hi),
        }
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: sum_down(self.lo, -rhs.hi),
            hi: sum_up(self.hi, -rhs.lo),
        }
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let p = [
            prod_residual(self.lo, rhs.lo),
            prod_residual(self.lo, rhs.hi),
            prod_residual(self.hi, rhs.lo),
            prod_residual(self.hi, rhs.hi),
        ];
        let lo = p
            .iter()
            .map(|&(v, e)| if e < 0.0 { next_down(v) } else { v })
            .fold(f64::INFINITY, f64::min);
        let hi = p
            .iter()
            .map(|&(v, e)| if e > 0.0 { next_up(v) } else { v })
            .fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }
}

/// Panicking division used in formulas whose denominators are guarded
/// elsewhere; use `try_div` on unguarded paths.
impl std::ops::Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Interval) -> Interval {
        self.try_div(&rhs)
            .expect("interval division by zero-containing divisor")
    }
}

impl std::ops::Add<f64> for Interval {
    type Output = Interval;
    fn add(self, rhs: f64) -> Interval {
        self + Interval::point(rhs)
    }
}

impl std::ops::Mul<f64> for Interval {
    type Output = Interval;
    fn mul(self, rhs: f64) -> Interval {
        self * Interval::point(rhs)
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_exact_endpoints() {
        let a = Interval::new(1.0, 2.0);
        let b = Interval::new(3.0, 4.0);
        let c = a + b;
        assert!(c.contains(4.0) && c.contains(6.0));
        // endpoints exact up to one nudge each
        assert!(c.lo() >= 4.0 - 4.0 * f64::EPSILON && c.hi() <= 6.0 + 8.0 * f64::EPSILON);
    }

    #[test]
    fn mul_sign_analysis() {
        let a = Interval::new(-1.0, 1.0);
        let c = a * a;
        assert!(c.contains(-1.0) && c.contains(1.0));
        assert!(c.lo >= -1.0 - 1e-15 && c.hi <= 1.0 + 1e-15);
    }

    #[test]
    fn div_one_third_width() {
        let c = Interval::ONE / Interval::point(3.0);
        assert!(c.contains(1.0 / 3.0));
        // hi - lo <= 2 ulp of 1/3
        assert!(c.width() <= 2.0 * (1.0f64 / 3.0).next_up().next_up() - 2.0 * (1.0 / 3.0));
        let third = 1.0f64 / 3.0;
        assert!(c.width() <= 2.0 * (third.next_up() - third));
    }

    #[test]
    fn div_by_zero_is_error() {
        let a = Interval::new(1.0, 2.0);
        assert!(a.try_div(&Interval::new(-1.0, 1.0)).is_err());
        assert!(a.try_div(&Interval::new(0.0, 1.0)).is_err());
    }

    #[test]
    fn powi_even_contains_zero() {
        let a = Interval::new(-2.0, 1.0);
        let sq = a.powi(2);
        assert!(sq.lo <= 0.0 + 1e-300 && sq.lo >= 0.0);
        assert!(sq.contains(4.0));
        let cube = a.powi(3);
        assert!(cube.contains(-8.0) && cube.contains(1.0));
    }

    #[test]
    fn width_control_point_ops() {
        let xs = [1.0, -0.37, 3.75e5, 1.7e-8];
        for &x in &xs {
            for &y in &xs {
                let a = Interval::point(x);
                let b = Interval::point(y);
                let ulp = |v: f64| v.abs().next_up() - v.abs();
                for (r, m) in [
                    (a + b, x + y),
                    (a - b, x - y),
                    (a * b, x * y),
                    (a / b, x / y),
                ] {
                    assert!(r.contains(m));
                    assert!(r.width() <= 4.0 * ulp(m).max(f64::MIN_POSITIVE));
                }
            }
        }
    }

    #[test]
    fn inclusion_monotonicity() {
        let a = Interval::new(0.5, 1.5);
        let a2 = Interval::new(0.25, 2.0);
        let b = Interval::new(-3.0, -1.0);
        let b2 = Interval::new(-4.0, -0.5);
        assert!((a2 + b2).contains_interval(&(a + b)));
        assert!((a2 * b2).contains_interval(&(a * b)));
        assert!((a2 - b2).contains_interval(&(a - b)));
        assert!(a2.try_div(&b2).unwrap().contains_interval(&a.try_div(&b).unwrap()));
    }
}
