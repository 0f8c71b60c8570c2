//! Rigorous enclosures of elementary functions, built from scratch on
//! argument reduction plus Taylor kernels with explicit tail bounds, so no
//! trust is placed in libm accuracy.

use super::{next_down, next_up, Interval};
use crate::error::Error;

/// exp kernel on |r| <= 0.36: truncated series plus a tail enclosure.
fn exp_kernel(r: Interval) -> Interval {
    debug_assert!(r.lo() >= -0.37 && r.hi() <= 0.37);
    // Horner over 17 terms
    let mut acc = Interval::ZERO;
    for n in (1..=17u32).rev() {
        acc = (acc + Interval::ONE) * r * (Interval::ONE / Interval::point(n as f64));
    }
    let sum = acc + Interval::ONE;
    // |R| <= |r|^18/18! * 1/(1-|r|/19)
    let t = r.abs().powi(18) * Interval::point(1.06 / 6.402373705728e15);
    sum + Interval::new(-t.hi(), t.hi())
}

/// Rigorous enclosure of e^x.
pub fn exp(x: Interval) -> Interval {
    Interval::new(exp_point(x.lo()).lo().max(0.0), exp_point(x.hi()).hi())
}

fn exp_point(x: f64) -> Interval {
    if x == f64::INFINITY {
        return Interval::new(f64::MAX, f64::INFINITY);
    }
    if x == f64::NEG_INFINITY {
        return Interval::new(0.0, f64::MIN_POSITIVE);
    }
    if x > 709.9 {
        return Interval::new(f64::MAX, f64::INFINITY);
    }
    if x < -745.2 {
        // e^x below the smallest subnormal
        return Interval::new(0.0, 5e-324);
    }
    let k = (x / std::f64::consts::LN_2).round();
    let r = Interval::point(x) - Interval::ln_2() * Interval::point(k);
    let e = exp_kernel(r).scale2(k as i32);
    // guard against subnormal scaling
    Interval::new(next_down(e.lo()).max(0.0), next_up(e.hi()))
}

/// Rigorous enclosure of ln x; requires x.lo > 0.
pub fn ln(x: Interval) -> Result<Interval, Error> {
    if x.lo() <= 0.0 {
        return Err(Error::Domain("ln requires a strictly positive interval"));
    }
    Ok(Interval::new(
        ln_point(x.lo()).lo(),
        ln_point(x.hi()).hi(),
    ))
}

fn ln_point(x: f64) -> Interval {
    debug_assert!(x > 0.0 && x.is_finite());
    // x = m * 2^e with m in [sqrt(1/2), sqrt(2))
    let mut e = 0i32;
    let mut m = x;
    while m >= std::f64::consts::SQRT_2 {
        m *= 0.5;
        e += 1;
    }
    while m < std::f64::consts::FRAC_1_SQRT_2 {
        m *= 2.0;
        e -= 1;
    }
    // halving/doubling is exact except近 subnormals; handle those by widening
    let m_iv = if x < 1e-300 || x > 1e300 {
        Interval::with_ulps(m, 2)
    } else {
        Interval::point(m)
    };
    // ln m = 2 atanh(s), s = (m-1)/(m+1), |s| <= 0.1716
    let s = (m_iv - Interval::ONE) / (m_iv + Interval::ONE);
    let s2 = s * s;
    let mut acc = Interval::ZERO;
    for j in (1..=12u32).rev() {
        acc = (acc + Interval::ONE / Interval::point((2 * j + 1) as f64)) * s2;
    }
    let atanh = (acc + Interval::ONE) * s;
    // tail: |s|^27/27 * 1/(1-s^2)
    let t = (s.abs().powi(27) * Interval::point(1.0 / 27.0) / (Interval::ONE - s2)).abs();
    let ln_m = (atanh + Interval::new(-t.hi(), t.hi())) * Interval::point(2.0);
    ln_m + Interval::ln_2() * Interval::point(e as f64)
}

/// sin kernel on |u| <= pi/4 + slop.
fn sin_kernel(u: Interval) -> Interval {
    let u2 = u * u;
    let mut sum = u;
    let mut term = u;
    for j in 1..=10u32 {
        term = term * u2 / Interval::point(-((2 * j) as f64) * ((2 * j + 1) as f64));
        sum = sum + term;
    }
    // tail <= |u|^23/23!
    let t = u.abs().powi(23) * Interval::point(1.0 / 2.585201673888498e22);
    sum + Interval::new(-t.hi(), t.hi())
}

/// cos kernel on |u| <= pi/4 + slop.
fn cos_kernel(u: Interval) -> Interval {
    let u2 = u * u;
    let mut sum = Interval::ONE;
    let mut term = Interval::ONE;
    for j in 1..=10u32 {
        term = term * u2 / Interval::point(-((2 * j - 1) as f64) * ((2 * j) as f64));
        sum = sum + term;
    }
    let t = u.abs().powi(22) * Interval::point(1.0 / 1.1240007277776077e21);
    sum + Interval::new(-t.hi(), t.hi())
}

/// Tight enclosure of sin at a point, via quadrant reduction.
fn sin_point(x: f64) -> Interval {
    let half_pi = Interval::pi().scale2(-1);
    let q = (x / (0.5 * std::f64::consts::PI)).round();
    let u = Interval::point(x) - half_pi * Interval::point(q);
    let qi = ((q as i64) % 4 + 4) % 4;
    match qi {
        0 => sin_kernel(u),
        1 => cos_kernel(u),
        2 => -sin_kernel(u),
        _ => -cos_kernel(u),
    }
}

fn clamp_unit(x: Interval) -> Interval {
    Interval::new(x.lo().max(-1.0), x.hi().min(1.0))
}

/// Rigorous enclosure of sin over an interval.
pub fn sin(x: Interval) -> Interval {
    if !x.is_finite() || x.width() >= 2.0 * std::f64::consts::PI {
        return Interval::new(-1.0, 1.0);
    }
    let mut lo_v = sin_point(x.lo()).min(&sin_point(x.hi()));
    let mut hi_v = sin_point(x.lo()).max(&sin_point(x.hi()));
    // critical points x = pi/2 + m*pi inside [lo, hi]; their f64 locations
    // carry rounding error, so include them under a conservative tolerance
    // (extra inclusions only widen the enclosure)
    let pi = std::f64::consts::PI;
    let m0 = ((x.lo() - 0.5 * pi) / pi).floor() as i64 - 1;
    for m in m0..=m0 + 4 {
        let c = 0.5 * pi + (m as f64) * pi;
        let tol = 8.0 * f64::EPSILON * c.abs().max(1.0);
        if c >= x.lo() - tol && c <= x.hi() + tol {
            if m.rem_euclid(2) == 0 {
                hi_v = hi_v.max(&Interval::ONE);
            } else {
                lo_v = lo_v.min(&-Interval::ONE);
            }
        }
    }
    clamp_unit(Interval::new(lo_v.lo(), hi_v.hi()))
}

/// Rigorous enclosure of cos over an interval.
pub fn cos(x: Interval) -> Interval {
    sin(x + Interval::pi().scale2(-1))
}

/// Rigorous enclosure of cosh.
pub fn cosh(x: Interval) -> Interval {
    let a = x.abs();
    let e = exp(a);
    let em = exp(-a);
    let hi = (e + em).scale2(-1);
    let lo_e = exp(Interval::point(a.lo()));
    let lo_em = exp(-Interval::point(a.lo()));
    let lo = (lo_e + lo_em).scale2(-1);
    Interval::new(lo.lo().max(1.0), hi.hi())
}

/// Rigorous enclosure of sinh.
pub fn sinh(x: Interval) -> Interval {
    let f = |p: f64| {
        let p = Interval::point(p);
        (exp(p) - exp(-p)).scale2(-1)
    };
    Interval::new(f(x.lo()).lo(), f(x.hi()).hi())
}

/// Rigorous enclosure of x^y for x.lo > 0.
pub fn pow(x: Interval, y: Interval) -> Result<Interval, Error> {
    Ok(exp(ln(x)? * y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_basic() {
        let e = exp(Interval::point(1.0));
        assert!(e.contains(std::f64::consts::E));
        assert!(e.width() < 1e-14);
        let z = exp(Interval::ZERO);
        assert!(z.contains(1.0) && z.width() < 1e-15);
    }

    #[test]
    fn exp_underflow_overflow() {
        let u = exp(Interval::point(-800.0));
        assert!(u.lo() == 0.0 && u.hi() > 0.0 && u.hi() <= 1e-320);
        let o = exp(Interval::point(800.0));
        assert!(o.hi() == f64::INFINITY && o.lo() >= f64::MAX);
    }

    #[test]
    fn ln_inverse_of_exp() {
        for &x in &[0.001, 0.5, 1.0, 3.75, 12345.0] {
            let l = ln(Interval::point(x)).unwrap();
            assert!(exp(l).contains(x), "x={x}");
            assert!(l.width() < 1e-13);
        }
        assert!(ln(Interval::new(-1.0, 2.0)).is_err());
        assert!(ln(Interval::new(0.0, 2.0)).is_err());
    }

    #[test]
    fn sin_range_on_half_period() {
        let s = sin(Interval::new(0.0, std::f64::consts::PI));
        // range of sin on [0, pi] is [0, 1]
        assert!(s.hi() >= 1.0 && s.hi() <= 1.0 + 1e-12);
        assert!(s.lo() <= 0.0 && s.lo() >= -1e-12);
    }

    #[test]
    fn sin_cos_points() {
        let cases = [0.0, 0.5, 1.0, 2.0, -3.0, 10.0, 100.0];
        for &x in &cases {
            let s = sin(Interval::point(x));
            let c = cos(Interval::point(x));
            assert!(s.contains(x.sin()) || (s.mid() - x.sin()).abs() < 1e-14, "sin {x}");
            assert!(c.contains(x.cos()) || (c.mid() - x.cos()).abs() < 1e-14, "cos {x}");
            assert!(s.width() < 1e-13 && c.width() < 1e-13);
        }
    }

    #[test]
    fn cosh_zero_is_one() {
        let c = cosh(Interval::ZERO);
        assert!(c.contains(1.0));
        assert!(c.width() < 1e-15);
    }

    #[test]
    fn cosh_reference_value() {
        // extended-precision oracle: cosh(2*pi*0.03352069177291399)
        let rho_hat = Interval::point(3.352069177291399e-2);
        let c = cosh(Interval::two_pi() * rho_hat);
        let oracle = 1.022261812143596434742858391189415466111;
        assert!(c.contains(oracle));
        assert!(c.width() < 1e-13);
    }

    #[test]
    fn pow_matches_powf() {
        let p = pow(Interval::point(2.651949979981816e-3), Interval::point(2.4)).unwrap();
        assert!(p.contains(2.651949979981816e-3f64.powf(2.4)));
        assert!(p.width() / p.mid() < 1e-12);
    }

    #[test]
    fn monotone_enclosures_random() {
        // containment fuzz on elementary functions
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..2000 {
            let a = rnd() * 20.0 - 10.0;
            let b = a + rnd() * 3.0;
            let x = Interval::new(a, b);
            let t = a + rnd() * (b - a);
            assert!(exp(x).contains(t.exp()) || t.exp() > 1e300);
            assert!(sin(x).contains(t.sin()) || sin(x).width() >= 2.0 - 1e-12);
            assert!(cos(x).contains(t.cos()) || cos(x).width() >= 2.0 - 1e-12);
            assert!(cosh(x).contains(t.cosh()));
            if a > 1e-6 {
                assert!(ln(x).unwrap().contains(t.ln()));
            }
        }
    }
}
