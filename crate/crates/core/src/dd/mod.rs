//! Double-double arithmetic.
//!
//! `Dd` is an unevaluated sum of two f64s (~32 significant digits), used for
//! candidate generation where plain f64 residuals would dominate the
//! certified error budget. `DdInterval` (submodule) wraps it with outward
//! rounding for the rigorous conjugacy-error pipeline.

mod interval;

pub use interval::{exp_2pi_i_iv, sincos_2pi_iv, DdComplexInterval, DdInterval};

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// pi to double-double accuracy (error ~2.3e-33, see interval::PI_ERR).
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };

    /// ln 2 to double-double accuracy (error ~5.7e-34).
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 9.417232121458176e-18,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    pub fn lt(self, other: Dd) -> bool {
        self.hi < other.hi || (self.hi == other.hi && self.lo < other.lo)
    }

    pub fn le(self, other: Dd) -> bool {
        self.hi < other.hi || (self.hi == other.hi && self.lo <= other.lo)
    }

    pub fn min(self, other: Dd) -> Dd {
        if self.le(other) {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Dd) -> Dd {
        if self.le(other) {
            other
        } else {
            self
        }
    }

    /// Integer scaling by a power of two (exact in the normal range).
    pub fn scale2(self, k: i32) -> Dd {
        let f = f64::powi(2.0, k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.is_zero() {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0);
        // one Newton step on the f64 seed doubles precision
        let x0 = self.hi.sqrt();
        let x0d = Dd::from_f64(x0);
        let delta = (self - x0d * x0d) * Dd::from_f64(0.5 / x0);
        x0d + delta
    }

    /// Nearest integer (exact for |x| < 2^52).
    pub fn round(self) -> f64 {
        let r = self.hi.round();
        let diff = self - Dd::from_f64(r);
        if diff.hi > 0.5 || (diff.hi == 0.5 && diff.lo > 0.0) {
            r + 1.0
        } else if diff.hi < -0.5 || (diff.hi == -0.5 && diff.lo < 0.0) {
            r - 1.0
        } else {
            r
        }
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi + self.lo * rhs.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        debug_assert!(rhs.hi != 0.0);
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}

impl std::ops::Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * rhs);
        Dd { hi, lo }
    }
}

/// Fractional part x - round(x), in [-1/2, 1/2].
pub fn frac_centered(x: Dd) -> Dd {
    let n = x.round();
    x - Dd::from_f64(n)
}

/// sin(2 pi t) and cos(2 pi t) for a double-double t (point arithmetic).
pub fn sincos_2pi(t: Dd) -> (Dd, Dd) {
    // angle = 2 pi (f - q/4) + q pi/2 with f = centered fraction of t
    let f = frac_centered(t);
    let q = (f * 4.0).round();
    let red = f - Dd::from_f64(q * 0.25);
    let u = red * Dd::PI.scale2(1);
    let (su, cu) = sincos_kernel(u);
    match (q as i64).rem_euclid(4) {
        0 => (su, cu),
        1 => (cu, -su),
        2 => (-su, -cu),
        _ => (-cu, su),
    }
}

/// Interval Taylor kernels on |u| <= pi/4 + eps, with explicit tails.
pub(crate) fn sincos_kernel_iv(u: DdInterval) -> (DdInterval, DdInterval) {
    let u2 = u * u;
    let mut s = u;
    let mut term = u;
    for j in 1..=14u32 {
        term = term * u2;
        term = term.div_f64(-((2 * j) as f64 * (2 * j + 1) as f64));
        s = s + term;
    }
    let mut c = DdInterval::ONE;
    let mut termc = DdInterval::ONE;
    for j in 1..=14u32 {
        termc = termc * u2;
        termc = termc.div_f64(-((2 * j - 1) as f64 * (2 * j) as f64));
        c = c + termc;
    }
    // tails: |u|^31/31! and |u|^30/30!, enlarged for safety
    let au = u.abs().hi().to_f64().min(1.0);
    let t_s = au.powi(31) / 8.22e33 * 2.0;
    let t_c = au.powi(30) / 2.65e32 * 2.0;
    let widen = |x: DdInterval, t: f64| {
        DdInterval::new(x.lo() - Dd::from_f64(t), x.hi() + Dd::from_f64(t))
    };
    (widen(s, t_s), widen(c, t_c))
}

/// Taylor kernels on |u| <= pi/4 + eps. Divisors stay exact integers so the
/// terms keep full double-double accuracy.
fn sincos_kernel(u: Dd) -> (Dd, Dd) {
    let u2 = u * u;
    let mut s = u;
    let mut term = u;
    for j in 1..=14u32 {
        term = -(term * u2) / Dd::from_f64((2 * j) as f64 * (2 * j + 1) as f64);
        s = s + term;
    }
    let mut c = Dd::ONE;
    let mut termc = Dd::ONE;
    for j in 1..=14u32 {
        termc = -(termc * u2) / Dd::from_f64((2 * j - 1) as f64 * (2 * j) as f64);
        c = c + termc;
    }
    (s, c)
}

/// Complex double-double.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    pub fn new(re: Dd, im: Dd) -> DdComplex {
        DdComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> DdComplex {
        DdComplex {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    /// e^{2 pi i t}.
    pub fn exp_2pi_i(t: Dd) -> DdComplex {
        let (s, c) = sincos_2pi(t);
        DdComplex { re: c, im: s }
    }

    pub fn conj(self) -> DdComplex {
        DdComplex {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn scale(self, s: Dd) -> DdComplex {
        DdComplex {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn abs_sq(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.abs_sq().to_f64().max(0.0).sqrt()
    }
}

impl std::ops::Add for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn add(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl std::ops::Sub for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn sub(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl std::ops::Mul for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn mul(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl std::ops::Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl std::ops::Div for DdComplex {
    type Output = DdComplex;
    fn div(self, rhs: DdComplex) -> DdComplex {
        let d = rhs.abs_sq();
        let num = self * rhs.conj();
        DdComplex {
            re: num.re / d,
            im: num.im / d,
        }
    }
}

/// In-place radix-2 FFT over double-double complexes (point arithmetic,
/// candidate generation only). `sign` = -1 gives the forward transform
/// without normalization.
pub fn fft_dd(buf: &mut [DdComplex], sign: i32) {
    let n = buf.len();
    assert!(n.is_power_of_two());
    // bit reversal
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let ang_step = Dd::from_f64(sign as f64) / Dd::from_f64(len as f64);
        let half = len / 2;
        // twiddle table for this stage
        let tw: Vec<DdComplex> = (0..half)
            .map(|m| DdComplex::exp_2pi_i(ang_step * (m as f64)))
            .collect();
        let mut i = 0;
        while i < n {
            for m in 0..half {
                let u = buf[i + m];
                let v = buf[i + m + half] * tw[m];
                buf[i + m] = u + v;
                buf[i + m + half] = u - v;
            }
            i += len;
        }
        len <<= 1;
    }
}

/// Format a double-double as a decimal with ~36 significant digits.
pub fn dd_to_string(x: Dd) -> String {
    if x.is_zero() {
        return "0.0e0".to_string();
    }
    let neg = x.is_negative();
    let mut v = x.abs();
    let mut e10 = v.hi.abs().log10().floor() as i32;
    // normalize into [1, 10)
    let ten = Dd::from_f64(10.0);
    let mut scale = Dd::ONE;
    let mut k = e10;
    while k > 0 {
        scale = scale * ten;
        k -= 1;
    }
    while k < 0 {
        scale = scale / ten;
        k += 1;
    }
    v = v / scale;
    if v.hi >= 10.0 {
        v = v / ten;
        e10 += 1;
    }
    if v.hi < 1.0 {
        v = v * ten;
        e10 -= 1;
    }
    let mut digits = String::new();
    for i in 0..36 {
        let d = (v.hi.floor() as i64).clamp(0, 9);
        digits.push((b'0' + d as u8) as char);
        v = (v - Dd::from_f64(d as f64)) * ten;
        if i == 0 {
            digits.push('.');
        }
    }
    format!("{}{}e{}", if neg { "-" } else { "" }, digits, e10)
}

/// Parse a decimal string into a double-double.
pub fn dd_from_str(s: &str) -> Result<Dd, crate::error::Error> {
    let s = s.trim();
    let bad = || crate::error::Error::Parse(format!("invalid decimal: {s}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mant, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (body, 0),
    };
    let mut acc = Dd::ZERO;
    let mut frac_digits = 0i32;
    let mut seen_point = false;
    let mut seen_digit = false;
    for ch in mant.chars() {
        match ch {
            '0'..='9' => {
                acc = acc * Dd::from_f64(10.0) + Dd::from_f64((ch as u8 - b'0') as f64);
                if seen_point {
                    frac_digits += 1;
                }
                seen_digit = true;
            }
            '.' if !seen_point => seen_point = true,
            _ => return Err(bad()),
        }
    }
    if !seen_digit {
        return Err(bad());
    }
    let mut k = exp - frac_digits;
    let ten = Dd::from_f64(10.0);
    while k > 0 {
        acc = acc * ten;
        k -= 1;
    }
    while k < 0 {
        acc = acc / ten;
        k += 1;
    }
    Ok(if neg { -acc } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_mul_precision() {
        let a = Dd::from_f64(1.0) / Dd::from_f64(3.0);
        let three = Dd::from_f64(3.0);
        let r = a * three - Dd::ONE;
        assert!(r.to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_five() {
        let s = Dd::from_f64(5.0).sqrt();
        let back = s * s - Dd::from_f64(5.0);
        assert!(back.to_f64().abs() < 1e-30);
    }

    #[test]
    fn sincos_identity() {
        for k in 0..40 {
            let t = Dd::from_f64(k as f64 * 0.0731 - 1.3);
            let (s, c) = sincos_2pi(t);
            let one = s * s + c * c - Dd::ONE;
            assert!(one.to_f64().abs() < 1e-30, "k={k} err={}", one.to_f64());
            let ref_s = (2.0 * std::f64::consts::PI * t.to_f64()).sin();
            assert!((s.to_f64() - ref_s).abs() < 1e-14);
        }
    }

    #[test]
    fn fft_roundtrip() {
        let n = 64;
        let mut buf: Vec<DdComplex> = (0..n)
            .map(|i| DdComplex::from_f64((i as f64 * 0.37).sin(), (i as f64 * 0.91).cos()))
            .collect();
        let orig = buf.clone();
        fft_dd(&mut buf, -1);
        fft_dd(&mut buf, 1);
        let inv_n = Dd::ONE / Dd::from_f64(n as f64);
        for (a, b) in buf.iter().zip(orig.iter()) {
            let r = a.scale(inv_n) - *b;
            assert!(r.abs() < 1e-29);
        }
    }

    #[test]
    fn fft_single_harmonic() {
        let n = 16usize;
        let mut buf: Vec<DdComplex> = (0..n)
            .map(|j| {
                let t = Dd::from_f64(j as f64 / n as f64);
                let (s, _) = sincos_2pi(t);
                DdComplex::new(s, Dd::ZERO)
            })
            .collect();
        fft_dd(&mut buf, -1);
        // sin(2 pi x): coefficient at k=1 should be -i n/2
        assert!((buf[1].im.to_f64() + n as f64 / 2.0).abs() < 1e-28);
        assert!(buf[1].re.to_f64().abs() < 1e-28);
        assert!((buf[n - 1].im.to_f64() - n as f64 / 2.0).abs() < 1e-28);
    }

    #[test]
    fn decimal_roundtrip() {
        let xs = [
            Dd::PI,
            Dd::from_f64(1.0) / Dd::from_f64(7.0),
            Dd::from_f64(-2.5e-19) + Dd::from_f64(1.0e-35),
            Dd::from_f64(6.02e23),
        ];
        for &x in &xs {
            let s = dd_to_string(x);
            let y = dd_from_str(&s).unwrap();
            let err = (x - y).abs();
            let rel = err.to_f64() / x.abs().to_f64().max(1e-300);
            assert!(rel < 1e-30, "{s} rel={rel}");
        }
    }

    #[test]
    fn round_halfway() {
        assert_eq!(Dd::from_f64(2.5).round(), 3.0); // f64 half away from zero
        assert_eq!((Dd::from_f64(2.0) + Dd::from_f64(1e-20)).round(), 2.0);
        assert_eq!((Dd::from_f64(3.0) - Dd::from_f64(1e-20)).round(), 3.0);
    }
}
