//! Discrete-Fourier-transform approximation error bounds for analytic
//! periodic functions: the per-coefficient aliasing factor s_N and the
//! function-norm factor C_N = S^1 + S^2 + S^3.
//!
//! All formulas are evaluated in a negative-exponent arrangement so that no
//! intermediate overflows even at N = 2048 and wide strips.

use crate::error::Error;
use crate::interval::{elem, Interval};

/// s_N(k, rho_t): certified factor in |g~_k - g^_k| <= s_N(k, rho_t) ||g||_{rho_t}.
///
/// Evaluated as (e^{a-b} + e^{-a-b})/(1 - e^{-b}) with a = 2 pi rho_t |k|,
/// b = 2 pi rho_t N, so every exponent is nonpositive.
pub fn aliasing_coefficient_bound(k: i64, n: usize, rho_t: Interval) -> Interval {
    assert!(rho_t.lo() > 0.0, "aliasing bound requires rho_t > 0");
    assert!(n >= 2 && (k.unsigned_abs() as usize) <= n / 2);
    let a = Interval::two_pi() * rho_t * Interval::point(k.unsigned_abs() as f64);
    let b = Interval::two_pi() * rho_t * Interval::point(n as f64);
    let num = elem::exp(a - b) + elem::exp(-a - b);
    let den = Interval::ONE - elem::exp(-b);
    num.try_div(&den)
        .expect("1 - e^{-b} > 0 for b > 0")
}

/// coth(pi x) * (1 - e^{-pi N x}) for x >= 0; bounded above by N so the
/// expression stays finite when x touches zero.
fn coth_damped(x: Interval, n: usize) -> Interval {
    let cap = Interval::new(0.0, n as f64);
    if x.lo() <= 0.0 {
        return cap;
    }
    let pi = Interval::pi();
    let d = elem::exp(-(pi * x).scale2(1)); // e^{-2 pi x}
    let damp = Interval::ONE - elem::exp(-(pi * x) * Interval::point(n as f64));
    let coth = (Interval::ONE + d) / (Interval::ONE - d);
    let v = coth * damp;
    v.intersect(&cap).unwrap_or(cap)
}

/// C_N(rho, rho_t): certified factor in ||g~ - g||_rho <= C_N ||g||_{rho_t}.
///
/// Degenerates to an infinite upper bound when rho = rho_t (the S^3 term has
/// a vanishing denominator); the enclosure stays sound.
pub fn dft_function_error_bound(rho: Interval, rho_t: Interval, n: usize) -> Result<Interval, Error> {
    if rho.lo() < 0.0 || rho_t.lo() <= 0.0 {
        return Err(Error::Domain("dft error bound requires 0 <= rho, 0 < rho_t"));
    }
    if rho.hi() > rho_t.hi() {
        return Err(Error::Domain("dft error bound requires rho <= rho_t"));
    }
    let pi = Interval::pi();
    let nf = Interval::point(n as f64);
    let b = Interval::two_pi() * rho_t * nf; // 2 pi rho_t N
    let t_den = Interval::ONE - elem::exp(-b);
    let sum = rho_t + rho;
    let dif = (rho_t - rho).max(&Interval::ZERO);

    // S^1 = e^{-pi N (rho_t - rho)} (1 - e^{-pi N (rho_t + rho)}) (1 + e^{-2 pi s}) /
    //       ((1 - e^{-2 pi rho_t N})(1 - e^{-2 pi s}))
    let es = elem::exp(-(pi * sum).scale2(1));
    let s1 = (elem::exp(-(pi * dif) * nf)
        * (Interval::ONE - elem::exp(-(pi * sum) * nf))
        * (Interval::ONE + es))
        .try_div(&(t_den * (Interval::ONE - es)))?;

    // S^2 = e^{-2 pi rho_t N}/(1 - e^{-2 pi rho_t N}) * coth(pi (rho_t - rho)) (1 - e^{-pi N (rho_t-rho)})
    let s2 = (elem::exp(-b).try_div(&t_den)?) * coth_damped(dif, n);

    // S^3 = coth(pi (rho_t - rho)) e^{-pi N (rho_t - rho)}, infinite at rho = rho_t
    let coth_decay = |x: Interval| -> Interval {
        let d = elem::exp(-(pi * x).scale2(1));
        let decay = elem::exp(-(pi * x) * nf);
        ((Interval::ONE + d) * decay)
            .try_div(&(Interval::ONE - d))
            .unwrap_or_else(|_| Interval::new(0.0, f64::INFINITY))
    };
    let s3 = if dif.lo() > 0.0 {
        coth_decay(dif)
    } else {
        let finite_lo = coth_decay(Interval::point(dif.hi())).lo().max(0.0);
        Interval::new(finite_lo, f64::INFINITY)
    };

    Ok(s1 + s2 + s3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_n_at_zero_mode() {
        // k = 0: 2 e^{-2 pi rho_t N}/(1 - e^{-2 pi rho_t N})
        let rho_t = Interval::point(0.05);
        let n = 16;
        let s = aliasing_coefficient_bound(0, n, rho_t);
        let b = 2.0 * std::f64::consts::PI * 0.05 * 16.0;
        let oracle = 2.0 * (-b).exp() / (1.0 - (-b).exp());
        assert!(s.contains(oracle));
        assert!(s.width() / oracle < 1e-12);
    }

    #[test]
    fn s_n_monotone_in_n() {
        let rho_t = Interval::point(0.07);
        let k = 3;
        let s16 = aliasing_coefficient_bound(k, 16, rho_t);
        let s32 = aliasing_coefficient_bound(k, 32, rho_t);
        let s64 = aliasing_coefficient_bound(k, 64, rho_t);
        assert!(s32.hi() < s16.lo());
        assert!(s64.hi() < s32.lo());
    }

    #[test]
    fn s_n_underflow_gives_certified_upper_bound() {
        // paper-scale parameters push s_N below 1e-700
        let rho_t = Interval::point(0.1272935990391272);
        let s = aliasing_coefficient_bound(0, 2048, rho_t);
        assert!(s.lo() >= 0.0);
        assert!(s.hi() > 0.0 && s.hi() < 1e-300);
    }

    #[test]
    fn c_n_decay_rate() {
        let rho = Interval::point(0.01);
        let rho_t = Interval::point(0.1);
        let n = 64;
        let c1 = dft_function_error_bound(rho, rho_t, n).unwrap();
        let c2 = dft_function_error_bound(rho, rho_t, 2 * n).unwrap();
        // ratio below e^{-pi N (rho_t - rho)} * 1.01
        let rate = (-(std::f64::consts::PI) * n as f64 * 0.09).exp();
        assert!(c2.hi() <= c1.hi() * rate * 1.01);
    }

    #[test]
    fn c_n_degenerate_equal_strips() {
        let rho = Interval::point(0.05);
        let c = dft_function_error_bound(rho, rho, 32).unwrap();
        assert!(c.hi().is_infinite());
        assert!(c.lo() >= 0.0);
        assert!(dft_function_error_bound(Interval::point(0.06), rho, 32).is_err());
    }
}
