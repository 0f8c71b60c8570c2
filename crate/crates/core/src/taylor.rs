//! Fourier-Taylor models: polynomials in (theta - theta0) whose coefficients
//! are trigonometric polynomials, plus an interval remainder jet. These hold
//! the conjugacy h(x,theta), its derivatives, and every enclosed quantity the
//! hypothesis checks consume.

use crate::error::Error;
use crate::fourier::{dft, idft, GridSamples, TrigPoly};
use crate::interval::{elem, ComplexInterval, Interval};
use num_complex::Complex64;

/// Model F(x, theta) = sum_{s<=m} F^[s](x) (theta-theta0)^s
///                     + remainder(x) [-1,1] rad^{m+1}.
#[derive(Clone, Debug)]
pub struct FourierTaylorModel {
    pub theta0: Interval,
    pub rad: Interval,
    pub jets: Vec<TrigPoly>,
    pub remainder: TrigPoly,
}

/// Scalar jet in (theta - theta0): holds alpha(theta) and scalar by-products.
#[derive(Clone, Debug)]
pub struct ScalarJet {
    pub theta0: Interval,
    pub rad: Interval,
    pub coeffs: Vec<Interval>,
    pub remainder: Interval,
}

impl ScalarJet {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Enclosure of the jet over theta in B.
    pub fn eval_over_b(&self) -> Interval {
        let db = Interval::new(-self.rad.hi(), self.rad.hi());
        let mut acc = Interval::ZERO;
        for (s, c) in self.coeffs.iter().enumerate() {
            acc = acc + *c * db.powi(s as u32);
        }
        acc + self.remainder * db.powi(self.coeffs.len() as u32)
    }

    /// Enclosure of the derivative alpha'(B).
    pub fn derivative_over_b(&self) -> Interval {
        let db = Interval::new(-self.rad.hi(), self.rad.hi());
        let mut acc = Interval::ZERO;
        for (s, c) in self.coeffs.iter().enumerate().skip(1) {
            acc = acc + *c * Interval::point(s as f64) * db.powi(s as u32 - 1);
        }
        let m1 = self.coeffs.len();
        acc + self.remainder * Interval::point(m1 as f64) * db.powi(m1 as u32 - 1)
    }
}

impl FourierTaylorModel {
    /// Zero model of the given order and grid size.
    pub fn zero(theta0: Interval, rad: Interval, order: usize, n: usize) -> FourierTaylorModel {
        FourierTaylorModel {
            theta0,
            rad,
            jets: vec![TrigPoly::zeros(n); order + 1],
            remainder: TrigPoly::zeros(n),
        }
    }

    pub fn order(&self) -> usize {
        self.jets.len() - 1
    }

    pub fn n(&self) -> usize {
        self.jets[0].n()
    }

    pub fn is_real_symmetric(&self) -> bool {
        self.jets.iter().all(|j| j.is_real_symmetric()) && self.remainder.is_real_symmetric()
    }

    /// Enclosing interval function: collapse the theta dependence into
    /// interval coefficients over B.
    pub fn enclose(&self) -> TrigPoly {
        let n = self.n();
        let db = Interval::new(-self.rad.hi(), self.rad.hi());
        let mut out = TrigPoly::zeros(n);
        let half = (n / 2) as i64;
        let mp1 = self.jets.len() as u32;
        let rad_pow = db.powi(mp1);
        for k in -half..half {
            let mut acc = ComplexInterval::ZERO;
            for (s, jet) in self.jets.iter().enumerate() {
                let c = jet.coeff(k);
                if c != ComplexInterval::ZERO {
                    acc = acc + c.scale(db.powi(s as u32));
                }
            }
            let r = self.remainder.coeff(k);
            if r != ComplexInterval::ZERO {
                acc = acc + r.scale(rad_pow);
            }
            if acc != ComplexInterval::ZERO {
                out.set_coeff(k, acc);
            }
        }
        out.mark(self.is_real_symmetric(), false);
        out
    }

    /// d/dx: every jet coefficient k is scaled by 2 pi i k.
    pub fn jet_derivative_x(&self) -> FourierTaylorModel {
        FourierTaylorModel {
            theta0: self.theta0,
            rad: self.rad,
            jets: self.jets.iter().map(|j| j.derivative()).collect(),
            remainder: self.remainder.derivative(),
        }
    }

    /// d/dtheta: jets shift down with factor (s+1); the remainder propagates
    /// with factor (m+1).
    pub fn jet_derivative_theta(&self) -> Result<FourierTaylorModel, Error> {
        let m = self.order();
        if m == 0 {
            return Err(Error::Domain("theta derivative needs order >= 1"));
        }
        let n = self.n();
        let mut jets = Vec::with_capacity(m);
        for s in 0..m {
            let src = &self.jets[s + 1];
            let mut jet = TrigPoly::zeros(n);
            let half = (n / 2) as i64;
            for k in -half..half {
                let c = src.coeff(k);
                if c != ComplexInterval::ZERO {
                    jet.set_coeff(k, c.scale(Interval::point((s + 1) as f64)));
                }
            }
            jet.mark(src.is_real_symmetric(), src.is_zero_average());
            jets.push(jet);
        }
        let mut rem = TrigPoly::zeros(n);
        let half = (n / 2) as i64;
        for k in -half..half {
            let c = self.remainder.coeff(k);
            if c != ComplexInterval::ZERO {
                rem.set_coeff(k, c.scale(Interval::point((m + 1) as f64)));
            }
        }
        rem.mark(self.remainder.is_real_symmetric(), self.remainder.is_zero_average());
        Ok(FourierTaylorModel {
            theta0: self.theta0,
            rad: self.rad,
            jets,
            remainder: rem,
        })
    }

    /// Pointwise evaluation at (x, theta) in T x B (tests and oracles).
    pub fn eval(&self, x: Interval, theta: Interval) -> ComplexInterval {
        let dt = theta - self.theta0;
        let mut acc = ComplexInterval::ZERO;
        for (s, jet) in self.jets.iter().enumerate() {
            acc = acc + jet.eval_complex(x, Interval::ZERO).scale(dt.powi(s as u32));
        }
        let mp1 = self.jets.len() as u32;
        let box_term = Interval::new(-1.0, 1.0) * self.rad.powi(mp1);
        acc + self
            .remainder
            .eval_complex(x, Interval::ZERO)
            .scale(box_term)
    }
}

/// Grid maxima of the enclosed function on Im x = rho plus the global
/// derivative slack (1/2N) ||F_B'||^F_rho.
pub fn max_modulus_bound(model: &FourierTaylorModel, rho: Interval) -> Result<Interval, Error> {
    if !model.is_real_symmetric() {
        return Err(Error::Domain(
            "max-modulus estimator requires a real-symmetric model",
        ));
    }
    let enclosed = model.enclose();
    let n = model.n();
    let samples = enclosed.strip_boundary_samples(rho);
    let mut grid_max = Interval::ZERO;
    for v in &samples.values {
        grid_max = grid_max.max(&v.mag());
    }
    let slack = enclosed.fourier_norm_derivative(rho) * Interval::point(1.0 / (2 * n) as f64);
    Ok(grid_max + slack)
}

/// Grid minima minus the derivative slack; may be nonpositive, which signals
/// a failed invertibility certificate rather than an error.
pub fn min_modulus_bound(model: &FourierTaylorModel, rho: Interval) -> Result<Interval, Error> {
    if !model.is_real_symmetric() {
        return Err(Error::Domain(
            "min-modulus estimator requires a real-symmetric model",
        ));
    }
    let enclosed = model.enclose();
    let n = model.n();
    let samples = enclosed.strip_boundary_samples(rho);
    let mut grid_min = Interval::point(f64::INFINITY);
    for v in &samples.values {
        grid_min = grid_min.min(&v.mag());
    }
    let slack = enclosed.fourier_norm_derivative(rho) * Interval::point(1.0 / (2 * n) as f64);
    Ok(grid_min - slack)
}

/// Jets of H(x, theta) = theta + P(x + theta, theta) for a periodic model P
/// (P plays the role of h - id, so H = h(x+theta, theta) - x).
///
/// The new jets combine x-derivatives with the shift by theta0; the remainder
/// encloses both the order-(m+1) Taylor coefficient over B and the shifted
/// input remainder.
pub fn shifted_composition_jets(model: &FourierTaylorModel) -> FourierTaylorModel {
    let m = model.order();
    let n = model.n();
    let half = (n / 2) as i64;
    let two_pi = Interval::two_pi();

    // d^j p^[s-j]/dx^j (x + theta0) for 0 <= j <= s <= m
    let mut jets = Vec::with_capacity(m + 1);
    for s in 0..=m {
        let mut jet = TrigPoly::zeros(n);
        for k in -half..half {
            let mut acc = ComplexInterval::ZERO;
            let twist = ComplexInterval::exp_i(two_pi * model.theta0 * Interval::point(k as f64));
            let ik = ComplexInterval::new(Interval::ZERO, two_pi * Interval::point(k as f64));
            let mut ik_pow = ComplexInterval::ONE;
            let mut fact = 1.0f64;
            for j in 0..=s {
                if j > 0 {
                    ik_pow = ik_pow * ik;
                    fact *= j as f64;
                }
                let c = model.jets[s - j].coeff(k);
                if c != ComplexInterval::ZERO {
                    acc = acc + (c * ik_pow * twist).scale(Interval::point(1.0 / fact));
                }
            }
            if acc != ComplexInterval::ZERO {
                jet.set_coeff(k, acc);
            }
        }
        jet.mark(model.jets[s].is_real_symmetric(), false);
        jets.push(jet);
    }
    // affine part theta = theta0 + (theta - theta0)
    let mut j0 = jets[0].clone();
    let sym0 = j0.is_real_symmetric();
    j0.set_coeff(0, j0.coeff(0) + ComplexInterval::from_real(model.theta0));
    j0.mark(sym0, false);
    jets[0] = j0;
    if m >= 1 {
        let mut j1 = jets[1].clone();
        let sym1 = j1.is_real_symmetric();
        j1.set_coeff(0, j1.coeff(0) + ComplexInterval::ONE);
        j1.mark(sym1, false);
        jets[1] = j1;
    }

    // remainder: sum_{j=1}^{m+1} (1/j!) d^j p^[m+1-j]/dx^j (x + B), plus the
    // input remainder shifted over B
    let b_angle = model.theta0 + Interval::new(-model.rad.hi(), model.rad.hi());
    let mut rem = TrigPoly::zeros(n);
    for k in -half..half {
        let twist_b = ComplexInterval::exp_i(two_pi * b_angle * Interval::point(k as f64));
        let ik = ComplexInterval::new(Interval::ZERO, two_pi * Interval::point(k as f64));
        let mut acc = ComplexInterval::ZERO;
        let mut ik_pow = ComplexInterval::ONE;
        let mut fact = 1.0f64;
        for j in 1..=m + 1 {
            ik_pow = ik_pow * ik;
            fact *= j as f64;
            let c = model.jets[m + 1 - j].coeff(k);
            if c != ComplexInterval::ZERO {
                acc = acc + (c * ik_pow).scale(Interval::point(1.0 / fact));
            }
        }
        acc = acc * twist_b;
        let r = model.remainder.coeff(k);
        if r != ComplexInterval::ZERO {
            acc = acc + r * twist_b;
        }
        if acc != ComplexInterval::ZERO {
            rem.set_coeff(k, acc);
        }
    }
    rem.mark(model.remainder.is_real_symmetric() && model.is_real_symmetric(), false);

    FourierTaylorModel {
        theta0: model.theta0,
        rad: model.rad,
        jets,
        remainder: rem,
    }
}

/// Float-only solver of the cohomological equation
/// phi(x + theta) - phi(x) = eta(x) with the normalization <h' phi> = 0.
///
/// Returns the zero-average solution R eta (coefficients indexed like the
/// input, k = -N/2..N/2-1) and the average phi_0 = -<h' R eta>. Used only in
/// candidate generation; never inside certification.
pub fn solve_cohomological(
    eta: &[Complex64],
    theta: f64,
    h_prime: &[Complex64],
    tau: f64,
    divisor_floor: f64,
) -> Result<(Vec<Complex64>, f64), Error> {
    let n = eta.len();
    assert!(n.is_power_of_two());
    let half = (n / 2) as i64;
    let idx = |k: i64| (k + half) as usize;
    if eta[idx(0)].norm() > 1e-13 * (1.0 + eta.iter().map(|c| c.norm()).sum::<f64>()) {
        return Err(Error::Domain("cohomological rhs must be zero-average"));
    }
    let mut phi = vec![Complex64::new(0.0, 0.0); n];
    // the -N/2 mode is pinned to zero by the representation and is skipped
    for k in -half + 1..half {
        if k == 0 || eta[idx(k)].norm() == 0.0 {
            continue;
        }
        let div = (Complex64::new(0.0, 2.0 * std::f64::consts::PI * k as f64 * theta)).exp()
            - Complex64::new(1.0, 0.0);
        let floor = divisor_floor * (k.unsigned_abs() as f64).powf(-tau);
        if div.norm() < floor {
            return Err(Error::ResonantDivisor { k });
        }
        phi[idx(k)] = eta[idx(k)] / div;
    }
    // <h' R eta> = sum_k hp_k (R eta)_{-k}
    let mut avg = Complex64::new(0.0, 0.0);
    for k in -half..half {
        if -k >= -half && -k < half {
            avg += h_prime[idx(k)] * phi[idx(-k)];
        }
    }
    Ok((phi, -avg.re))
}
