//! Intervals with double-double endpoints.
//!
//! Outward rounding is emulated by nudging each computed endpoint by a
//! conservative multiple of the double-double rounding error (published
//! bounds are a few units of 2^-106; we use 2^-99 plus an absolute guard
//! against subnormal effects).

use super::{sincos_kernel_iv, Dd, DdComplex};
use crate::interval::{ComplexInterval, Interval};

const EPS_REL: f64 = 1.6e-30; // 2^-99
const EPS_ABS: f64 = 1e-300;

/// Closed interval with double-double endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DdInterval {
    lo: Dd,
    hi: Dd,
}

fn nudge_down(x: Dd) -> Dd {
    x - Dd::from_f64(x.hi.abs() * EPS_REL + EPS_ABS)
}

fn nudge_up(x: Dd) -> Dd {
    x + Dd::from_f64(x.hi.abs() * EPS_REL + EPS_ABS)
}

impl DdInterval {
    pub const ZERO: DdInterval = DdInterval {
        lo: Dd::ZERO,
        hi: Dd::ZERO,
    };
    pub const ONE: DdInterval = DdInterval {
        lo: Dd::ONE,
        hi: Dd::ONE,
    };

    /// Enclosure of pi.
    pub fn pi() -> DdInterval {
        let err = Dd::from_f64(4e-33);
        DdInterval {
            lo: Dd::PI - err,
            hi: Dd::PI + err,
        }
    }

    pub fn new(lo: Dd, hi: Dd) -> DdInterval {
        debug_assert!(lo.le(hi));
        DdInterval { lo, hi }
    }

    pub fn point(x: Dd) -> DdInterval {
        DdInterval { lo: x, hi: x }
    }

    pub fn from_f64(x: f64) -> DdInterval {
        DdInterval::point(Dd::from_f64(x))
    }

    pub fn from_interval(x: Interval) -> DdInterval {
        DdInterval {
            lo: Dd::from_f64(x.lo()),
            hi: Dd::from_f64(x.hi()),
        }
    }

    pub fn lo(&self) -> Dd {
        self.lo
    }

    pub fn hi(&self) -> Dd {
        self.hi
    }

    /// Outward conversion to an f64-endpoint interval.
    pub fn to_interval(&self) -> Interval {
        let lo = if self.lo.lo >= 0.0 {
            self.lo.hi
        } else {
            crate::interval::next_down(self.lo.hi)
        };
        let hi = if self.hi.lo <= 0.0 {
            self.hi.hi
        } else {
            crate::interval::next_up(self.hi.hi)
        };
        Interval::new(lo, hi)
    }

    pub fn contains(&self, x: Dd) -> bool {
        self.lo.le(x) && x.le(self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(Dd::ZERO)
    }

    pub fn width_f64(&self) -> f64 {
        (self.hi - self.lo).to_f64()
    }

    /// Upper bound of |x| over the interval.
    pub fn abs_upper(&self) -> Dd {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn abs(&self) -> DdInterval {
        if !self.lo.is_negative() {
            *self
        } else if self.hi.is_negative() || self.hi.is_zero() {
            -*self
        } else {
            DdInterval {
                lo: Dd::ZERO,
                hi: self.abs_upper(),
            }
        }
    }

    pub fn hull(&self, other: &DdInterval) -> DdInterval {
        DdInterval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Exact scaling by a power of two.
    pub fn scale2(&self, k: i32) -> DdInterval {
        DdInterval {
            lo: self.lo.scale2(k),
            hi: self.hi.scale2(k),
        }
    }

    pub fn mul_f64(&self, s: f64) -> DdInterval {
        if s >= 0.0 {
            DdInterval {
                lo: nudge_down(self.lo * s),
                hi: nudge_up(self.hi * s),
            }
        } else {
            DdInterval {
                lo: nudge_down(self.hi * s),
                hi: nudge_up(self.lo * s),
            }
        }
    }

    pub fn div_f64(&self, s: f64) -> DdInterval {
        assert!(s != 0.0);
        let d = Dd::from_f64(s);
        if s > 0.0 {
            DdInterval {
                lo: nudge_down(self.lo / d),
                hi: nudge_up(self.hi / d),
            }
        } else {
            DdInterval {
                lo: nudge_down(self.hi / d),
                hi: nudge_up(self.lo / d),
            }
        }
    }

    pub fn powi(&self, n: u32) -> DdInterval {
        let mut acc = DdInterval::ONE;
        for _ in 0..n {
            acc = acc * *self;
        }
        if n % 2 == 0 && acc.lo.is_negative() {
            acc.lo = Dd::ZERO;
        }
        acc
    }
}

impl std::ops::Neg for DdInterval {
    type Output = DdInterval;
    fn neg(self) -> DdInterval {
        DdInterval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl std::ops::Add for DdInterval {
    type Output = DdInterval;
    fn add(self, rhs: DdInterval) -> DdInterval {
        DdInterval {
            lo: nudge_down(self.lo + rhs.lo),
            hi: nudge_up(self.hi + rhs.hi),
        }
    }
}

impl std::ops::Sub for DdInterval {
    type Output = DdInterval;
    fn sub(self, rhs: DdInterval) -> DdInterval {
        self + (-rhs)
    }
}

impl std::ops::Mul for DdInterval {
    type Output = DdInterval;
    fn mul(self, rhs: DdInterval) -> DdInterval {
        let p1 = self.lo * rhs.lo;
        let p2 = self.lo * rhs.hi;
        let p3 = self.hi * rhs.lo;
        let p4 = self.hi * rhs.hi;
        let lo = p1.min(p2).min(p3.min(p4));
        let hi = p1.max(p2).max(p3.max(p4));
        DdInterval {
            lo: nudge_down(lo),
            hi: nudge_up(hi),
        }
    }
}

/// Rectangular complex interval with double-double endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DdComplexInterval {
    pub re: DdInterval,
    pub im: DdInterval,
}

impl DdComplexInterval {
    pub const ZERO: DdComplexInterval = DdComplexInterval {
        re: DdInterval::ZERO,
        im: DdInterval::ZERO,
    };

    pub fn new(re: DdInterval, im: DdInterval) -> DdComplexInterval {
        DdComplexInterval { re, im }
    }

    pub fn from_dd(z: DdComplex) -> DdComplexInterval {
        DdComplexInterval {
            re: DdInterval::point(z.re),
            im: DdInterval::point(z.im),
        }
    }

    pub fn from_real(re: DdInterval) -> DdComplexInterval {
        DdComplexInterval {
            re,
            im: DdInterval::ZERO,
        }
    }

    pub fn conj(&self) -> DdComplexInterval {
        DdComplexInterval {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn scale(&self, s: DdInterval) -> DdComplexInterval {
        DdComplexInterval {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn mul_f64(&self, s: f64) -> DdComplexInterval {
        DdComplexInterval {
            re: self.re.mul_f64(s),
            im: self.im.mul_f64(s),
        }
    }

    pub fn mul_i(&self) -> DdComplexInterval {
        DdComplexInterval {
            re: -self.im,
            im: self.re,
        }
    }

    pub fn to_complex_interval(&self) -> ComplexInterval {
        ComplexInterval::new(self.re.to_interval(), self.im.to_interval())
    }

    /// f64 upper bound of |z| over the rectangle.
    pub fn mag_upper(&self) -> f64 {
        self.to_complex_interval().mag_upper()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.re == DdInterval::ZERO && self.im == DdInterval::ZERO
    }
}

impl std::ops::Add for DdComplexInterval {
    type Output = DdComplexInterval;
    fn add(self, rhs: DdComplexInterval) -> DdComplexInterval {
        DdComplexInterval {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl std::ops::Sub for DdComplexInterval {
    type Output = DdComplexInterval;
    fn sub(self, rhs: DdComplexInterval) -> DdComplexInterval {
        DdComplexInterval {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl std::ops::Mul for DdComplexInterval {
    type Output = DdComplexInterval;
    fn mul(self, rhs: DdComplexInterval) -> DdComplexInterval {
        DdComplexInterval {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl std::ops::Neg for DdComplexInterval {
    type Output = DdComplexInterval;
    fn neg(self) -> DdComplexInterval {
        DdComplexInterval {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Rigorous enclosure of (sin 2 pi t, cos 2 pi t) for a narrow dd interval;
/// falls back to the f64 enclosures when the interval is wide.
pub fn sincos_2pi_iv(t: DdInterval) -> (DdInterval, DdInterval) {
    if t.width_f64() > 1e-6 {
        let two_pi_t = crate::interval::Interval::two_pi() * t.to_interval();
        let s = crate::interval::elem::sin(two_pi_t);
        let c = crate::interval::elem::cos(two_pi_t);
        return (DdInterval::from_interval(s), DdInterval::from_interval(c));
    }
    // narrow case: reduce around the midpoint fraction
    let mid = t.lo;
    let n = mid.round();
    let f = t - DdInterval::point(Dd::from_f64(n)); // exact shift
    let q = (f.lo * 4.0).round();
    let red = f - DdInterval::from_f64(q * 0.25);
    let u = red * DdInterval::pi().scale2(1);
    let (su, cu) = sincos_kernel_iv(u);
    match (q as i64).rem_euclid(4) {
        0 => (su, cu),
        1 => (cu, -su),
        2 => (-su, -cu),
        _ => (-cu, su),
    }
}

/// e^{2 pi i t} as a rigorous rectangle.
pub fn exp_2pi_i_iv(t: DdInterval) -> DdComplexInterval {
    let (s, c) = sincos_2pi_iv(t);
    DdComplexInterval { re: c, im: s }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_containment() {
        let a = DdInterval::new(Dd::from_f64(1.0), Dd::from_f64(1.0) + Dd::from_f64(1e-25));
        let b = DdInterval::from_f64(3.0);
        let c = a * b;
        assert!(c.contains(Dd::from_f64(3.0)));
        assert!(c.width_f64() < 1e-24);
        let d = a - a;
        assert!(d.contains_zero());
    }

    #[test]
    fn conversion_outward() {
        let x = DdInterval::point(Dd::from_f64(1.0) + Dd::from_f64(1e-20));
        let iv = x.to_interval();
        assert!(iv.lo() <= 1.0 + 1e-20 && 1.0 + 1e-20 <= iv.hi());
        assert!(iv.width() < 1e-15);
    }

    #[test]
    fn twist_magnitude_one() {
        for k in [1i64, 7, 100, 1023] {
            let theta = (Dd::from_f64(5.0).sqrt() - Dd::ONE).scale2(-1);
            let t = DdInterval::point(theta * (k as f64));
            let z = exp_2pi_i_iv(t);
            let m2 = z.re * z.re + z.im * z.im;
            assert!(m2.contains(Dd::ONE), "k={k}");
            assert!(m2.width_f64() < 1e-27, "k={k} w={}", m2.width_f64());
            // cross-check against the point evaluation
            let zp = DdComplex::exp_2pi_i(theta * (k as f64));
            assert!(z.re.contains(zp.re) || (z.re.to_interval().mid() - zp.re.to_f64()).abs() < 1e-29);
        }
    }

    #[test]
    fn wide_angle_falls_back() {
        let t = DdInterval::new(Dd::from_f64(0.0), Dd::from_f64(0.3));
        let (s, c) = sincos_2pi_iv(t);
        // sin over [0, 0.6 pi] spans [0, 1]
        assert!(s.to_interval().hi() >= 0.999999);
        assert!(s.to_interval().lo() <= 1e-6);
        assert!(c.to_interval().hi() >= 0.999999);
    }
}
