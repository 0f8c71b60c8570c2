//! Enclosures of the Gamma, Riemann zeta and Hurwitz zeta functions on the
//! real domains this crate needs, via Euler-Maclaurin / Stirling sums with
//! interval tail bounds.

use super::{elem, Interval};
use crate::error::Error;

/// x^(-s) for x > 0 as an interval.
fn pow_neg(x: Interval, s: Interval) -> Result<Interval, Error> {
    elem::pow(x, -s)
}

/// Hurwitz zeta zeta(s, a) for s.lo > 1, a.lo > 0.
///
/// Euler-Maclaurin with the B2 correction; the remainder is bounded by the
/// magnitude of the B4 term.
pub fn hurwitz_zeta(s: Interval, a: Interval) -> Result<Interval, Error> {
    if s.lo() <= 1.0 {
        return Err(Error::Domain("hurwitz_zeta requires s > 1"));
    }
    if a.lo() <= 0.0 {
        return Err(Error::Domain("hurwitz_zeta requires a > 0"));
    }
    let m = 64u32;
    let mut sum = Interval::ZERO;
    for n in 0..m {
        sum = sum + pow_neg(a + Interval::point(n as f64), s)?;
    }
    let ma = a + Interval::point(m as f64);
    let ma_s = pow_neg(ma, s)?;
    // integral term (M+a)^{1-s}/(s-1)
    let integral = (ma_s * ma).try_div(&(s - Interval::ONE))?;
    let half = ma_s.scale2(-1);
    let b2 = (s * ma_s).try_div(&(ma * Interval::point(12.0)))?;
    let r = (s * (s + Interval::ONE) * (s + Interval::point(2.0)) * ma_s)
        .try_div(&(ma.powi(3) * Interval::point(720.0)))?
        .abs();
    Ok(sum + integral + half + b2 + Interval::new(-r.hi(), r.hi()))
}

/// Riemann zeta for s.lo > 1.
pub fn riemann_zeta(s: Interval) -> Result<Interval, Error> {
    hurwitz_zeta(s, Interval::ONE)
}

/// Gamma(x) for x.lo > 0.
///
/// Argument shifted above 12, then the Stirling series with three Bernoulli
/// terms; for real positive arguments the series error is below the first
/// omitted term.
pub fn gamma_fn(x: Interval) -> Result<Interval, Error> {
    if x.lo() <= 0.0 {
        return Err(Error::Domain("gamma_fn requires x > 0"));
    }
    let mut shift = Interval::ONE;
    let mut z = x;
    while z.lo() < 12.0 {
        shift = shift * z;
        z = z + Interval::ONE;
    }
    let ln_z = elem::ln(z)?;
    let half_ln_2pi = elem::ln(Interval::two_pi())?.scale2(-1);
    let mut lg = (z - Interval::new(0.5, 0.5)) * ln_z - z + half_ln_2pi;
    // B2/(2*1*z) + B4/(4*3*z^3) + B6/(6*5*z^5)
    let z2 = z * z;
    let inv_z = z.recip()?;
    let t1 = inv_z * Interval::point(1.0 / 12.0);
    let t2 = (t1.try_div(&z2)?) * Interval::point(-12.0 / 360.0);
    let t3 = (t1.try_div(&(z2 * z2))?) * Interval::point(12.0 / 1260.0);
    lg = lg + t1 + t2 + t3;
    // remainder below |B8/(8*7 z^7)| = 1/(1680 z^7)
    let r = (inv_z.powi(7) * Interval::point(1.0 / 1680.0)).abs();
    lg = lg + Interval::new(-r.hi(), r.hi());
    elem::exp(lg).try_div(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_is_pi_sq_over_six() {
        let z = riemann_zeta(Interval::point(2.0)).unwrap();
        let oracle = std::f64::consts::PI * std::f64::consts::PI / 6.0;
        assert!(z.contains(oracle));
        assert!(z.width() < 1e-9);
    }

    #[test]
    fn hurwitz_at_one_matches_riemann() {
        let s = Interval::point(2.0);
        let h = hurwitz_zeta(s, Interval::ONE).unwrap();
        let r = riemann_zeta(s).unwrap();
        assert!(h.intersect(&r).is_some());
        assert!((h.mid() - r.mid()).abs() < 1e-12);
    }

    #[test]
    fn zeta_reference_values() {
        // mpmath oracles
        let z12 = riemann_zeta(Interval::point(1.2)).unwrap();
        assert!(z12.contains(5.59158244117775077653656319342314327763));
        let z22 = riemann_zeta(Interval::point(2.2)).unwrap();
        assert!(z22.contains(1.49054325650689350825344649551165451759));
        let h = hurwitz_zeta(Interval::point(2.0), Interval::point(2.297396709994070)).unwrap();
        assert!((h.mid() - 0.5432885640460382).abs() < 1e-9);
    }

    #[test]
    fn gamma_small_integers_and_reference() {
        let g3 = gamma_fn(Interval::point(3.0)).unwrap();
        assert!(g3.contains(2.0));
        assert!(g3.width() < 1e-9);
        let g1 = gamma_fn(Interval::point(1.0)).unwrap();
        assert!(g1.contains(1.0));
        // mpmath oracle for Gamma(3.4), needed by c_R at tau = 1.2
        let g34 = gamma_fn(Interval::point(3.4)).unwrap();
        assert!(g34.contains(2.981206426810332971791368605443921181836));
        assert!(g34.width() < 1e-8);
    }

    #[test]
    fn domain_errors() {
        assert!(riemann_zeta(Interval::point(0.9)).is_err());
        assert!(hurwitz_zeta(Interval::point(2.0), Interval::point(-1.0)).is_err());
        assert!(gamma_fn(Interval::point(0.0)).is_err());
    }
}
