//! Rectangular complex intervals: the coefficient type of every rigorous
//! Fourier object in this crate.

use super::{elem, Interval};

/// Rectangle `re x im` containing the exact complex result of any operation
/// on members.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub const ZERO: ComplexInterval = ComplexInterval {
        re: Interval::ZERO,
        im: Interval::ZERO,
    };
    pub const ONE: ComplexInterval = ComplexInterval {
        re: Interval::ONE,
        im: Interval::ZERO,
    };

    pub fn new(re: Interval, im: Interval) -> ComplexInterval {
        ComplexInterval { re, im }
    }

    pub fn point(re: f64, im: f64) -> ComplexInterval {
        ComplexInterval {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    pub fn from_real(re: Interval) -> ComplexInterval {
        ComplexInterval {
            re,
            im: Interval::ZERO,
        }
    }

    /// e^{i theta}.
    pub fn exp_i(theta: Interval) -> ComplexInterval {
        ComplexInterval {
            re: elem::cos(theta),
            im: elem::sin(theta),
        }
    }

    pub fn conj(&self) -> ComplexInterval {
        ComplexInterval {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn scale(&self, s: Interval) -> ComplexInterval {
        ComplexInterval {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn mul_i(&self) -> ComplexInterval {
        ComplexInterval {
            re: -self.im,
            im: self.re,
        }
    }

    pub fn contains(&self, re: f64, im: f64) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_rect(&self, other: &ComplexInterval) -> bool {
        self.re.contains_interval(&other.re) && self.im.contains_interval(&other.im)
    }

    pub fn hull(&self, other: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re.hull(&other.re),
            im: self.im.hull(&other.im),
        }
    }

    /// Enclosure of |z| over the rectangle.
    pub fn mag(&self) -> Interval {
        let re_abs = self.re.abs();
        let im_abs = self.im.abs();
        let hi = (Interval::point(re_abs.hi()).powi(2) + Interval::point(im_abs.hi()).powi(2))
            .sqrt_nonneg();
        let lo = (Interval::point(re_abs.lo()).powi(2) + Interval::point(im_abs.lo()).powi(2))
            .sqrt_nonneg();
        Interval::new(lo.lo().min(hi.lo()), hi.hi())
    }

    /// Upper bound of |z| over the rectangle.
    pub fn mag_upper(&self) -> f64 {
        self.mag().hi()
    }

    pub fn width(&self) -> f64 {
        self.re.width().max(self.im.width())
    }
}

impl std::ops::Add for ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, rhs: ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl std::ops::Sub for ComplexInterval {
    type Output = ComplexInterval;
    fn sub(self, rhs: ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl std::ops::Mul for ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, rhs: ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl std::ops::Neg for ComplexInterval {
    type Output = ComplexInterval;
    fn neg(self) -> ComplexInterval {
        ComplexInterval {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl ComplexInterval {
    /// Checked division by a rectangle not containing zero.
    pub fn try_div(&self, rhs: &ComplexInterval) -> Result<ComplexInterval, crate::error::Error> {
        let d = rhs.re * rhs.re + rhs.im * rhs.im;
        let num_re = self.re * rhs.re + self.im * rhs.im;
        let num_im = self.im * rhs.re - self.re * rhs.im;
        Ok(ComplexInterval {
            re: num_re.try_div(&d)?,
            im: num_im.try_div(&d)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_contains_exact() {
        let a = ComplexInterval::point(1.0, 2.0);
        let b = ComplexInterval::point(-0.5, 3.0);
        let c = a * b;
        // (1+2i)(-0.5+3i) = -0.5 + 3i - i + 6i^2 = -6.5 + 2i
        assert!(c.contains(-6.5, 2.0));
    }

    #[test]
    fn mag_on_rectangle() {
        let z = ComplexInterval::new(Interval::new(-1.0, 2.0), Interval::new(0.5, 1.0));
        let m = z.mag();
        // farthest corner (2, 1), nearest point (0, 0.5)
        assert!(m.hi() >= (5.0f64).sqrt() && m.hi() < (5.0f64).sqrt() + 1e-12);
        assert!(m.lo() <= 0.5 && m.lo() > 0.5 - 1e-12);
    }

    #[test]
    fn div_roundtrip() {
        let a = ComplexInterval::point(0.3, -1.7);
        let b = ComplexInterval::point(2.0, 0.25);
        let q = a.try_div(&b).unwrap();
        let back = q * b;
        assert!(back.contains(0.3, -1.7));
    }

    #[test]
    fn exp_i_unit_modulus() {
        for k in 0..16 {
            let th = Interval::point(k as f64 * 0.41);
            let z = ComplexInterval::exp_i(th);
            let m = z.mag();
            assert!(m.contains(1.0));
            assert!(m.width() < 1e-12);
        }
    }
}
