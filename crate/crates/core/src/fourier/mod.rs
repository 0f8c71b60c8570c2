//! Trigonometric polynomials with interval coefficients, the rigorous DFT,
//! analytic norms on strips, and the approximation bounds of the DFT.

mod bounds;
mod fft;

pub use bounds::{aliasing_coefficient_bound, dft_function_error_bound};
pub use fft::fft_interval;

use crate::error::Error;
use crate::interval::{elem, ComplexInterval, Interval};
use std::io::{BufRead, Write};

/// Trigonometric polynomial of degree < N/2 with complex interval
/// coefficients, indexed k = -N/2 .. N/2-1.
#[derive(Clone, Debug)]
pub struct TrigPoly {
    n: usize,
    coeffs: Vec<ComplexInterval>, // coeffs[i] is the coefficient of k = i - n/2
    real_symmetric: bool,
    zero_average: bool,
}

/// Samples of a periodic function at the uniform nodes x_j = j/N.
#[derive(Clone, Debug)]
pub struct GridSamples {
    pub values: Vec<ComplexInterval>,
}

impl GridSamples {
    pub fn new(values: Vec<ComplexInterval>) -> GridSamples {
        GridSamples { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl TrigPoly {
    pub fn zeros(n: usize) -> TrigPoly {
        assert!(n.is_power_of_two() && n >= 2);
        TrigPoly {
            n,
            coeffs: vec![ComplexInterval::ZERO; n],
            real_symmetric: true,
            zero_average: true,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_k(&self) -> i64 {
        -((self.n / 2) as i64)
    }

    pub fn max_k(&self) -> i64 {
        (self.n / 2) as i64 - 1
    }

    pub fn coeff(&self, k: i64) -> ComplexInterval {
        if k < self.min_k() || k > self.max_k() {
            ComplexInterval::ZERO
        } else {
            self.coeffs[(k + (self.n / 2) as i64) as usize]
        }
    }

    pub fn set_coeff(&mut self, k: i64, v: ComplexInterval) {
        assert!(k >= self.min_k() && k <= self.max_k(), "mode out of range");
        let idx = (k + (self.n / 2) as i64) as usize;
        self.coeffs[idx] = v;
        self.real_symmetric = false;
        self.zero_average = false;
    }

    pub fn is_real_symmetric(&self) -> bool {
        self.real_symmetric
    }

    pub fn is_zero_average(&self) -> bool {
        self.zero_average
    }

    /// Verifies and marks the real-analytic symmetry coeff(-k) = conj(coeff(k))
    /// (rectangles must intersect) and coeff(-N/2) = 0.
    pub fn check_real_symmetry(&mut self) -> bool {
        let half = (self.n / 2) as i64;
        let lowest = self.coeff(-half);
        let mut ok = lowest == ComplexInterval::ZERO;
        for k in 1..half {
            let a = self.coeff(k);
            let b = self.coeff(-k).conj();
            ok &= a.re.intersect(&b.re).is_some() && a.im.intersect(&b.im).is_some();
        }
        ok &= self.coeff(0).im.contains(0.0);
        self.real_symmetric = ok;
        ok
    }

    pub fn check_zero_average(&mut self) -> bool {
        let ok = self.coeff(0) == ComplexInterval::ZERO;
        self.zero_average = ok;
        ok
    }

    pub(crate) fn mark(&mut self, real_symmetric: bool, zero_average: bool) {
        self.real_symmetric = real_symmetric;
        self.zero_average = zero_average;
    }

    /// Derivative: coefficient k scaled by 2 pi i k.
    pub fn derivative(&self) -> TrigPoly {
        let mut out = TrigPoly::zeros(self.n);
        let half = (self.n / 2) as i64;
        for k in -half..half {
            let factor = Interval::two_pi() * Interval::point(k as f64);
            let c = self.coeff(k).mul_i().scale(factor);
            out.coeffs[(k + half) as usize] = c;
        }
        out.mark(self.real_symmetric, true);
        out
    }

    /// Weighted l1 coefficient norm sum_k |c_k| e^{2 pi |k| rho}; an upper
    /// bound for the sup norm on the strip of width rho.
    pub fn fourier_norm(&self, rho: Interval) -> Interval {
        let half = (self.n / 2) as i64;
        let mut sum = Interval::ZERO;
        for k in -half..half {
            let c = self.coeff(k);
            if c == ComplexInterval::ZERO {
                continue;
            }
            let w = elem::exp(Interval::two_pi() * rho * Interval::point(k.unsigned_abs() as f64));
            sum = sum + c.mag() * w;
        }
        sum
    }

    /// Fourier norm of the derivative: sum_k 2 pi |k| |c_k| e^{2 pi |k| rho}.
    pub fn fourier_norm_derivative(&self, rho: Interval) -> Interval {
        let half = (self.n / 2) as i64;
        let mut sum = Interval::ZERO;
        for k in -half..half {
            let c = self.coeff(k);
            if c == ComplexInterval::ZERO || k == 0 {
                continue;
            }
            let w = elem::exp(Interval::two_pi() * rho * Interval::point(k.unsigned_abs() as f64));
            sum = sum + c.mag() * w * Interval::two_pi() * Interval::point(k.unsigned_abs() as f64);
        }
        sum
    }

    /// Samples of the polynomial on the boundary component Im x = rho:
    /// coefficient k is damped by e^{-2 pi k rho}, then an inverse DFT.
    pub fn strip_boundary_samples(&self, rho: Interval) -> GridSamples {
        let mut twisted = TrigPoly::zeros(self.n);
        let half = (self.n / 2) as i64;
        for k in -half..half {
            let w = elem::exp(-Interval::two_pi() * rho * Interval::point(k as f64));
            twisted.coeffs[(k + half) as usize] = self.coeff(k).scale(w);
        }
        idft(&twisted)
    }

    /// Evaluation at a complex point x + i y (tests and oracles).
    pub fn eval_complex(&self, x: Interval, y: Interval) -> ComplexInterval {
        let half = (self.n / 2) as i64;
        let mut acc = ComplexInterval::ZERO;
        for k in -half..half {
            let c = self.coeff(k);
            if c == ComplexInterval::ZERO {
                continue;
            }
            let kf = Interval::point(k as f64);
            let damp = elem::exp(-Interval::two_pi() * y * kf);
            let rot = ComplexInterval::exp_i(Interval::two_pi() * x * kf);
            acc = acc + c * rot.scale(damp);
        }
        acc
    }

    /// Product on a doubled grid, truncated back to degree N/2; returns the
    /// truncated polynomial and the Fourier-norm (at rho) of the dropped tail.
    pub fn mul_with_tail(&self, other: &TrigPoly, rho: Interval) -> Result<(TrigPoly, Interval), Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.n, other.n)));
        }
        let n2 = self.n * 2;
        let up = |p: &TrigPoly| {
            let mut big = TrigPoly::zeros(n2);
            for k in p.min_k()..=p.max_k() {
                big.coeffs[(k + (n2 / 2) as i64) as usize] = p.coeff(k);
            }
            big
        };
        let a = idft(&up(self));
        let b = idft(&up(other));
        let prod = GridSamples::new(
            a.values
                .iter()
                .zip(b.values.iter())
                .map(|(x, y)| *x * *y)
                .collect(),
        );
        let big = dft(&prod)?;
        let mut out = TrigPoly::zeros(self.n);
        let half = (self.n / 2) as i64;
        let mut tail = Interval::ZERO;
        for k in big.min_k()..=big.max_k() {
            let c = big.coeff(k);
            if k >= -half && k < half {
                out.coeffs[(k + half) as usize] = c;
            } else {
                let w = elem::exp(Interval::two_pi() * rho * Interval::point(k.unsigned_abs() as f64));
                tail = tail + c.mag() * w;
            }
        }
        out.mark(false, false);
        Ok((out, tail))
    }
}

/// Forward rigorous DFT: interval FFT with 1/N normalization.
pub fn dft(samples: &GridSamples) -> Result<TrigPoly, Error> {
    let n = samples.len();
    if !n.is_power_of_two() || n < 2 {
        return Err(Error::SizeMismatch(format!("grid size {n} not a power of two")));
    }
    let mut buf = samples.values.clone();
    fft_interval(&mut buf, -1);
    let inv_n = Interval::point(1.0 / n as f64); // exact for power-of-two n
    let mut out = TrigPoly::zeros(n);
    let half = (n / 2) as i64;
    for idx in 0..n {
        let k = if idx < n / 2 {
            idx as i64
        } else {
            idx as i64 - n as i64
        };
        out.coeffs[(k + half) as usize] = buf[idx].scale(inv_n);
    }
    out.mark(false, false);
    Ok(out)
}

/// Inverse rigorous DFT (no normalization): values at x_j = j/N.
pub fn idft(poly: &TrigPoly) -> GridSamples {
    let n = poly.n;
    let mut buf = vec![ComplexInterval::ZERO; n];
    for idx in 0..n {
        let k = if idx < n / 2 {
            idx as i64
        } else {
            idx as i64 - n as i64
        };
        buf[idx] = poly.coeff(k);
    }
    fft_interval(&mut buf, 1);
    GridSamples::new(buf)
}

/// Text serialization: header `N <size> REAL <0|1>`, then one line per
/// coefficient `k re_lo re_hi im_lo im_hi`.
pub fn write_trig_poly<W: Write>(w: &mut W, p: &TrigPoly) -> Result<(), Error> {
    writeln!(w, "N {} REAL {}", p.n, if p.real_symmetric { 1 } else { 0 })?;
    for k in p.min_k()..=p.max_k() {
        let c = p.coeff(k);
        writeln!(
            w,
            "{} {:.16e} {:.16e} {:.16e} {:.16e}",
            k,
            c.re.lo(),
            c.re.hi(),
            c.im.lo(),
            c.im.hi()
        )?;
    }
    Ok(())
}

pub fn read_trig_poly<R: BufRead>(r: &mut R) -> Result<TrigPoly, Error> {
    let mut header = String::new();
    r.read_line(&mut header)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "N" || parts[2] != "REAL" {
        return Err(Error::Parse(format!("bad TrigPoly header: {header:?}")));
    }
    let n: usize = parts[1]
        .parse()
        .map_err(|_| Error::Parse("bad size".into()))?;
    let real: u8 = parts[3]
        .parse()
        .map_err(|_| Error::Parse("bad REAL flag".into()))?;
    let mut out = TrigPoly::zeros(n);
    let half = (n / 2) as i64;
    for _ in 0..n {
        let mut line = String::new();
        r.read_line(&mut line)?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 5 {
            return Err(Error::Parse(format!("bad coefficient line: {line:?}")));
        }
        let k: i64 = f[0].parse().map_err(|_| Error::Parse("bad mode".into()))?;
        let nums: Result<Vec<f64>, _> = f[1..].iter().map(|s| s.parse::<f64>()).collect();
        let nums = nums.map_err(|_| Error::Parse("bad endpoint".into()))?;
        out.coeffs[(k + half) as usize] = ComplexInterval::new(
            Interval::new(nums[0], nums[1]),
            Interval::new(nums[2], nums[3]),
        );
    }
    let zero_avg = out.coeff(0) == ComplexInterval::ZERO;
    out.mark(real == 1, zero_avg);
    Ok(out)
}
