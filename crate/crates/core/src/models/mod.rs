//! Catalog of characteristic exponents with analytic continuation.
//!
//! Every model evaluates `psi0`, the drift-free part of the characteristic
//! exponent in the convention `E[exp(i xi X_t)] = exp(-t psi(xi))`,
//! `psi(xi) = -i mu xi + psi0(xi)`, with branch cuts confined to
//! `i(-inf, mu_-] U i[mu_+, +inf)`. All powers and logarithms of affine
//! expressions are taken as principal branches of shifted arguments, and
//! `(alpha^2 - (beta + i xi)^2)^p` is evaluated in the factored form
//! `(alpha - beta - i xi)^p (alpha + beta + i xi)^p` to obtain the two-cut
//! structure.

pub mod meta;
mod regularity;
mod serde_impl;

pub use meta::{AngleCone, ExtOrder, SinhType, Strip};

use crate::error::{LevyError, Result};
use crate::special::{beta_complex, lgamma_complex};
use num_complex::Complex64;
use std::f64::consts::PI;

/// One exponential-jump component `p * alpha * exp(-alpha x)` (positive side)
/// of a hyper-exponential or meromorphic model.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ExpJump {
    pub p: f64,
    pub alpha: f64,
}

/// Subordinator wrapper: a model constrained to non-negative drift and
/// support on `[0, inf)`, exposing the Laplace exponent `Psi(q) = psi(i q)`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum SubordinatorModel {
    /// A catalog model that is itself a subordinator.
    Model(Box<LevyModel>),
    /// Brownian subordinand of a symmetric process:
    /// `Psi(q) = psi(sqrt(q) + i beta) - psi(i beta)`.
    BmOfModel { x: Box<LevyModel>, beta: f64 },
    /// Discrete Stieltjes data: `Psi(q) = 2 sum p_a q / (lambda_a^2 + q)`.
    DiscreteAtoms { atoms: Vec<(f64, f64)> },
}

/// Tagged union over the model families of the catalog.
#[derive(Debug, Clone, PartialEq)]
pub enum LevyModel {
    Bm {
        sigma2: f64,
        mu: f64,
    },
    Merton {
        sigma2: f64,
        mu: f64,
        lambda: f64,
        m: f64,
        s: f64,
    },
    /// Hyper-exponential jump diffusion; negative weights give the
    /// mixed-exponential (MEJD) variant.
    Hejd {
        sigma2: f64,
        mu: f64,
        pos: Vec<ExpJump>,
        neg: Vec<ExpJump>,
    },
    VarianceGamma {
        c: f64,
        alpha: f64,
        beta: f64,
        mu: f64,
    },
    /// Normal tempered stable; `nu = 1` is NIG.
    Nts {
        delta: f64,
        nu: f64,
        alpha: f64,
        beta: f64,
        mu: f64,
    },
    Meixner {
        delta: f64,
        a: f64,
        b: f64,
        mu: f64,
    },
    /// Tempered-stable (KoBoL/CGMY) family; `nu` in {0, 1} switches to the
    /// special log forms.
    Kobol {
        nu_plus: f64,
        nu_minus: f64,
        c_plus: f64,
        c_minus: f64,
        lambda_minus: f64,
        lambda_plus: f64,
        mu: f64,
        sigma2: f64,
    },
    /// Beta-family exponent built from Beta-function differences.
    Beta {
        sigma2: f64,
        mu: f64,
        c1: f64,
        alpha1: f64,
        beta1: f64,
        gamma1: f64,
        c2: f64,
        alpha2: f64,
        beta2: f64,
        gamma2: f64,
    },
    /// Meromorphic exponent stored truncated to finitely many atoms, with an
    /// explicit bound on the dropped tail of `sum p_j / alpha_j^2`.
    Meromorphic {
        sigma2: f64,
        mu: f64,
        pos: Vec<ExpJump>,
        neg: Vec<ExpJump>,
        tail_bound: f64,
    },
    /// Generalized hyperbolic infinitely divisible distribution (exponent of
    /// the unit-time law).
    GenHyperbolic {
        alpha: f64,
        beta: f64,
        delta: f64,
        lambda: f64,
        mu: f64,
    },
    /// Esscher tilt of an inner model: `psi_a(xi) = psi(xi + i a) - psi(i a)`.
    Esscher {
        inner: Box<LevyModel>,
        alpha: f64,
    },
    /// Independent mixture `sum_j a_j X^j`: `psi(xi) = sum_j psi^j(a_j xi)`.
    Mixture {
        components: Vec<(f64, LevyModel)>,
    },
    /// Subordinated process `Y_{Z_t}`: `psi(xi) = Psi_Z(psi_Y(xi))`.
    Subordinated {
        y: Box<LevyModel>,
        z: SubordinatorModel,
    },
}

fn ix(xi: Complex64) -> Complex64 {
    Complex64::new(-xi.im, xi.re)
}

/// log cosh(z) analytic on `C` minus the cuts `i [pi/2, inf)` and reflections:
/// `z + log(1 + exp(-2z)) - log 2` on `Re z > 0`, extended by evenness, and by
/// the real formula on the imaginary axis.
fn log_cosh(z: Complex64) -> Result<Complex64> {
    if z.re < 0.0 {
        return log_cosh(-z);
    }
    if z.re == 0.0 {
        let c = z.im.cos();
        if c <= 0.0 {
            return Err(LevyError::Cut(format!(
                "log cosh evaluated on the cut at z = {z}"
            )));
        }
        return Ok(Complex64::new(c.ln(), 0.0));
    }
    let w = (-2.0 * z).exp();
    Ok(z + (Complex64::new(1.0, 0.0) + w).ln() - std::f64::consts::LN_2)
}

impl LevyModel {
    /// Linear drift `mu` of `psi(xi) = -i mu xi + psi0(xi)`; composite
    /// wrappers fold their drift into `psi0`.
    pub fn mu(&self) -> f64 {
        match self {
            LevyModel::Bm { mu, .. }
            | LevyModel::Merton { mu, .. }
            | LevyModel::Hejd { mu, .. }
            | LevyModel::VarianceGamma { mu, .. }
            | LevyModel::Nts { mu, .. }
            | LevyModel::Meixner { mu, .. }
            | LevyModel::Kobol { mu, .. }
            | LevyModel::Beta { mu, .. }
            | LevyModel::Meromorphic { mu, .. }
            | LevyModel::GenHyperbolic { mu, .. } => *mu,
            _ => 0.0,
        }
    }

    /// Diffusion coefficient sigma^2 (0 where absent).
    pub fn sigma2(&self) -> f64 {
        match self {
            LevyModel::Bm { sigma2, .. }
            | LevyModel::Merton { sigma2, .. }
            | LevyModel::Hejd { sigma2, .. }
            | LevyModel::Kobol { sigma2, .. }
            | LevyModel::Beta { sigma2, .. }
            | LevyModel::Meromorphic { sigma2, .. } => *sigma2,
            LevyModel::Esscher { inner, .. } => inner.sigma2(),
            LevyModel::Mixture { components } => components
                .iter()
                .map(|(a, m)| a * a * m.sigma2())
                .sum(),
            LevyModel::Subordinated { y, z } => match z {
                SubordinatorModel::Model(zm) => zm.mu() * y.sigma2(),
                SubordinatorModel::BmOfModel { x, .. } => 0.0 * x.sigma2(),
                SubordinatorModel::DiscreteAtoms { .. } => 0.0,
            },
            _ => 0.0,
        }
    }

    /// Imaginary positions `t` (as in `xi = i t`) of the poles of `psi0`
    /// nearest to the strip, for contour clearance. Branch-cut families
    /// return the cut endpoints.
    pub fn poles(&self) -> Vec<f64> {
        match self {
            LevyModel::Hejd { pos, neg, .. } | LevyModel::Meromorphic { pos, neg, .. } => {
                let mut v: Vec<f64> = pos.iter().map(|j| -j.alpha).collect();
                v.extend(neg.iter().map(|j| j.alpha));
                v
            }
            LevyModel::Beta {
                alpha1,
                beta1,
                alpha2,
                beta2,
                ..
            } => {
                let mut v = Vec::new();
                for n in 0..4 {
                    v.push(-beta1 * (alpha1 + n as f64));
                    v.push(beta2 * (alpha2 + n as f64));
                }
                v
            }
            LevyModel::Esscher { inner, alpha } => {
                inner.poles().iter().map(|t| t - alpha).collect()
            }
            _ => Vec::new(),
        }
    }

    /// Validation diagnostics; the empty list means all family constraints
    /// hold. Each entry names the violated constraint.
    pub fn validate(&self) -> Vec<String> {
        let mut d = Vec::new();
        match self {
            LevyModel::Bm { sigma2, .. } => {
                if *sigma2 < 0.0 {
                    d.push("sigma2 >= 0 violated".into());
                }
            }
            LevyModel::Merton {
                sigma2, lambda, s, ..
            } => {
                if *sigma2 < 0.0 {
                    d.push("sigma2 >= 0 violated".into());
                }
                if *lambda <= 0.0 {
                    d.push("lambda > 0 violated".into());
                }
                if *s <= 0.0 {
                    d.push("s > 0 violated".into());
                }
            }
            LevyModel::Hejd {
                sigma2, pos, neg, ..
            } => {
                if *sigma2 < 0.0 {
                    d.push("sigma2 >= 0 violated".into());
                }
                for (side, list) in [("positive", pos), ("negative", neg)] {
                    if list.iter().any(|j| j.alpha <= 0.0) {
                        d.push(format!("{side}-side alpha > 0 violated"));
                    }
                    if list.iter().any(|j| j.p < 0.0) {
                        // mixed-exponential: check admissibility
                        let mut sorted = list.clone();
                        sorted.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
                        if sorted.first().map(|j| j.p <= 0.0).unwrap_or(false) {
                            d.push(format!("{side}-side p_1 > 0 violated"));
                        }
                        let mut acc = 0.0;
                        for j in &sorted {
                            acc += j.p * j.alpha;
                            if acc < 0.0 {
                                d.push(format!(
                                    "{side}-side partial sums of p_j alpha_j >= 0 violated"
                                ));
                                break;
                            }
                        }
                    }
                }
            }
            LevyModel::VarianceGamma { c, alpha, beta, .. } => {
                if *c <= 0.0 {
                    d.push("c > 0 violated".into());
                }
                if !(*alpha > beta.abs()) {
                    d.push("alpha > |beta| violated".into());
                }
            }
            LevyModel::Nts {
                delta,
                nu,
                alpha,
                beta,
                ..
            } => {
                if *delta <= 0.0 {
                    d.push("delta > 0 violated".into());
                }
                if !(*nu > 0.0 && *nu < 2.0) {
                    d.push("nu in (0,2) violated".into());
                }
                if !(*alpha > beta.abs()) {
                    d.push("alpha > |beta| violated".into());
                }
            }
            LevyModel::Meixner { delta, a, b, .. } => {
                if *delta <= 0.0 {
                    d.push("delta > 0 violated".into());
                }
                if *a <= 0.0 {
                    d.push("a > 0 violated".into());
                }
                if !(b.abs() < PI) {
                    d.push("b in (-pi, pi) violated".into());
                }
            }
            LevyModel::Kobol {
                nu_plus,
                nu_minus,
                c_plus,
                c_minus,
                lambda_minus,
                lambda_plus,
                sigma2,
                ..
            } => {
                if *sigma2 < 0.0 {
                    d.push("sigma2 >= 0 violated".into());
                }
                if *c_plus < 0.0 || *c_minus < 0.0 {
                    d.push("c+- >= 0 violated".into());
                }
                if *c_plus + *c_minus + *sigma2 <= 0.0 {
                    d.push("degenerate model: c+ = c- = sigma2 = 0".into());
                }
                for (side, nu, c) in [("+", nu_plus, c_plus), ("-", nu_minus, c_minus)] {
                    if *c > 0.0 && !(*nu >= 0.0 && *nu < 2.0) {
                        d.push(format!("nu{side} in [0,2) violated"));
                    }
                }
                if !(*lambda_minus <= 0.0 && *lambda_plus >= 0.0) {
                    d.push("lambda- <= 0 <= lambda+ violated".into());
                }
                if *lambda_minus == 0.0 && *lambda_plus == 0.0 {
                    d.push("strip degenerates; stable case unsupported".into());
                }
                if !(*lambda_minus < *lambda_plus) {
                    d.push("lambda- < lambda+ violated".into());
                }
                if *c_plus > 0.0 && *nu_plus == 0.0 && *lambda_minus == 0.0 {
                    d.push("nu+ = 0 requires lambda- < 0".into());
                }
                if *c_minus > 0.0 && *nu_minus == 0.0 && *lambda_plus == 0.0 {
                    d.push("nu- = 0 requires lambda+ > 0".into());
                }
            }
            LevyModel::Beta {
                sigma2,
                c1,
                alpha1,
                beta1,
                gamma1,
                c2,
                alpha2,
                beta2,
                gamma2,
                ..
            } => {
                if *sigma2 < 0.0 {
                    d.push("sigma2 >= 0 violated".into());
                }
                if *c1 < 0.0 || *c2 < 0.0 {
                    d.push("c_j >= 0 violated".into());
                }
                if *c1 + *c2 + *sigma2 <= 0.0 {
                    d.push("degenerate model: c1 = c2 = sigma2 = 0".into());
                }
                for (j, a, b, g, c) in [
                    (1, alpha1, beta1, gamma1, c1),
                    (2, alpha2, beta2, gamma2, c2),
                ] {
                    if *c == 0.0 {
                        continue;
                    }
                    if *a <= 0.0 || *b <= 0.0 {
                        d.push(format!("alpha{j}, beta{j} > 0 violated"));
                    }
                    if !(*g > 0.0 && *g < 3.0) || (g - 1.0).abs() < 1e-9 || (g - 2.0).abs() < 1e-9 {
                        d.push(format!("gamma{j} in (0,3) \\ {{1,2}} violated"));
                    }
                }
            }
            LevyModel::Meromorphic {
                sigma2,
                pos,
                neg,
                tail_bound,
                ..
            } => {
                if *sigma2 < 0.0 {
                    d.push("sigma2 >= 0 violated".into());
                }
                if *tail_bound < 0.0 {
                    d.push("tail_bound >= 0 violated".into());
                }
                for (side, list) in [("positive", pos), ("negative", neg)] {
                    if list.iter().any(|j| j.alpha <= 0.0) {
                        d.push(format!("{side}-side alpha > 0 violated"));
                    }
                }
            }
            LevyModel::GenHyperbolic {
                alpha, beta, delta, ..
            } => {
                if !(*alpha > beta.abs()) {
                    d.push("alpha > |beta| violated".into());
                }
                if *delta < 0.0 {
                    d.push("delta >= 0 violated".into());
                }
                if *delta == 0.0 {
                    d.push("delta = 0 degenerates to the variance-gamma limit".into());
                }
            }
            LevyModel::Esscher { inner, alpha } => {
                d.extend(inner.validate());
                let st = inner.sinh_type();
                if let Ok(st) = st {
                    if !st.strip.contains(*alpha) {
                        d.push("esscher alpha outside the inner strip".into());
                    }
                }
            }
            LevyModel::Mixture { components } => {
                if components.is_empty() {
                    d.push("mixture needs at least one component".into());
                }
                for (a, m) in components {
                    if *a <= 0.0 {
                        d.push("mixture weights a_j > 0 violated".into());
                    }
                    d.extend(m.validate());
                }
            }
            LevyModel::Subordinated { y, z } => {
                d.extend(y.validate());
                d.extend(z.validate());
            }
        }
        d
    }

    fn require_valid(&self) -> Result<()> {
        let d = self.validate();
        if d.is_empty() {
            Ok(())
        } else {
            Err(LevyError::Parameter(d.join("; ")))
        }
    }

    /// Is `xi` on a branch cut / pole line of this model?
    fn on_cut(&self, xi: Complex64) -> bool {
        if xi.re != 0.0 {
            return false;
        }
        let t = xi.im;
        match self.sinh_type() {
            Ok(st) => t <= st.strip.mu_minus || t >= st.strip.mu_plus,
            Err(_) => false,
        }
    }

    /// Drift-free part of the characteristic exponent, analytically continued
    /// to the model's strip-and-cone domain. `psi0(0) = 0` exactly.
    pub fn psi0(&self, xi: Complex64) -> Result<Complex64> {
        self.require_valid()?;
        if xi == Complex64::new(0.0, 0.0) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if self.on_cut(xi) {
            return Err(LevyError::Domain(format!(
                "xi = {xi} lies on a branch cut of the exponent"
            )));
        }
        match self {
            LevyModel::Bm { sigma2, .. } => Ok(0.5 * sigma2 * xi * xi),
            LevyModel::Merton {
                sigma2, lambda, m, s, ..
            } => {
                let jump = Complex64::new(1.0, 0.0)
                    - (Complex64::new(0.0, *m) * xi - 0.5 * s * s * xi * xi).exp();
                Ok(0.5 * sigma2 * xi * xi + lambda * jump)
            }
            LevyModel::Hejd {
                sigma2, pos, neg, ..
            }
            | LevyModel::Meromorphic {
                sigma2, pos, neg, ..
            } => {
                let mut v = 0.5 * sigma2 * xi * xi;
                let ixi = ix(xi);
                for j in pos {
                    v += j.p * (-ixi) / (j.alpha - ixi);
                }
                for j in neg {
                    v += j.p * ixi / (j.alpha + ixi);
                }
                Ok(v)
            }
            LevyModel::VarianceGamma { c, alpha, beta, .. } => {
                let ixi = ix(xi);
                let lhs = (alpha - beta - ixi).ln() + (alpha + beta + ixi).ln();
                Ok(c * (lhs - (alpha * alpha - beta * beta).ln()))
            }
            LevyModel::Nts {
                delta,
                nu,
                alpha,
                beta,
                ..
            } => {
                let ixi = ix(xi);
                let h = 0.5 * nu;
                let prod = (alpha - beta - ixi).powc(Complex64::new(h, 0.0))
                    * (alpha + beta + ixi).powc(Complex64::new(h, 0.0));
                Ok(delta * (prod - (alpha * alpha - beta * beta).powf(h)))
            }
            LevyModel::Meixner { delta, a, b, .. } => {
                let z = (a * xi - Complex64::new(0.0, *b)) / 2.0;
                let lc = log_cosh(z)?;
                Ok(2.0 * delta * (lc - (0.5 * b).cos().ln()))
            }
            LevyModel::Kobol { .. } => self.kobol_psi0(xi),
            LevyModel::Beta {
                sigma2,
                c1,
                alpha1,
                beta1,
                gamma1,
                c2,
                alpha2,
                beta2,
                gamma2,
                ..
            } => {
                let ixi = ix(xi);
                let mut v = 0.5 * sigma2 * xi * xi;
                if *c1 > 0.0 {
                    let y = Complex64::new(1.0 - gamma1, 0.0);
                    v += c1 / beta1
                        * (beta_complex(Complex64::new(*alpha1, 0.0), y)
                            - beta_complex(alpha1 - ixi / beta1, y));
                }
                if *c2 > 0.0 {
                    let y = Complex64::new(1.0 - gamma2, 0.0);
                    v += c2 / beta2
                        * (beta_complex(Complex64::new(*alpha2, 0.0), y)
                            - beta_complex(alpha2 + ixi / beta2, y));
                }
                Ok(v)
            }
            LevyModel::GenHyperbolic { .. } => self.gh_psi0(xi),
            LevyModel::Esscher { inner, alpha } => {
                let shift = Complex64::new(0.0, *alpha);
                Ok(inner.psi(xi + shift)? - inner.psi(shift)?)
            }
            LevyModel::Mixture { components } => {
                let mut v = Complex64::new(0.0, 0.0);
                for (a, m) in components {
                    v += m.psi(*a * xi)?;
                }
                Ok(v)
            }
            LevyModel::Subordinated { y, z } => {
                let w = y.psi(xi)?;
                z.laplace_exponent(w)
            }
        }
    }

    /// Full characteristic exponent `psi(xi) = -i mu xi + psi0(xi)`.
    pub fn psi(&self, xi: Complex64) -> Result<Complex64> {
        Ok(-Complex64::new(0.0, self.mu()) * xi + self.psi0(xi)?)
    }

    fn kobol_psi0(&self, xi: Complex64) -> Result<Complex64> {
        let LevyModel::Kobol {
            nu_plus,
            nu_minus,
            c_plus,
            c_minus,
            lambda_minus,
            lambda_plus,
            sigma2,
            ..
        } = self
        else {
            unreachable!()
        };
        let ixi = ix(xi);
        let mut v = 0.5 * sigma2 * xi * xi;
        if *c_plus > 0.0 {
            v += c_plus * kobol_side(*nu_plus, -lambda_minus, -ixi);
        }
        if *c_minus > 0.0 {
            v += c_minus * kobol_side(*nu_minus, *lambda_plus, ixi);
        }
        Ok(v)
    }

    /// Generalized hyperbolic exponent via a path-continued log of
    /// K_lambda along the segment from the base point, switching to the
    /// asymptotic expansion for large argument.
    fn gh_psi0(&self, xi: Complex64) -> Result<Complex64> {
        let LevyModel::GenHyperbolic {
            alpha,
            beta,
            delta,
            lambda,
            ..
        } = self
        else {
            unreachable!()
        };
        let ixi = ix(xi);
        let lw = (alpha - beta - ixi).ln() + (alpha + beta + ixi).ln();
        let lw0 = 2.0 * (alpha * alpha - beta * beta).sqrt().ln();
        let z = delta * (0.5 * lw).exp();
        let z0 = Complex64::new(delta * (alpha * alpha - beta * beta).sqrt(), 0.0);
        let lnk = log_bessel_k(*lambda, z)?;
        let lnk0 = log_bessel_k(*lambda, z0)?;
        Ok(0.5 * lambda * (lw - lw0) - lnk + lnk0)
    }
}

/// One tempered-stable side: `Gamma(-nu) (lam^nu - (lam + u)^nu)` for
/// `nu != 0, 1`, with the log forms at `nu = 1` and `nu = 0`.
/// `u` is `-i xi` for the positive side and `i xi` for the negative side,
/// `lam > 0` (or `lam = 0` for the one-sided order-1 case).
fn kobol_side(nu: f64, lam: f64, u: Complex64) -> Complex64 {
    let lamu = lam + u;
    if nu == 1.0 {
        let t0 = if lam > 0.0 { lam * lam.ln() } else { 0.0 };
        t0 - lamu * lamu.ln()
    } else if nu == 0.0 {
        lamu.ln() - lam.ln()
    } else {
        let g = crate::special::gamma_real(-nu);
        g * (lam.powf(nu) - lamu.powc(Complex64::new(nu, 0.0)))
    }
}

/// Analytic branch of log K_lambda(z) on Re z > 0: asymptotic expansion for
/// |z| >= 28, otherwise a log continued along the segment from a real anchor
/// (the segment stays in the right half-plane, where K is zero-free).
pub(crate) fn log_bessel_k(lambda: f64, z: Complex64) -> Result<Complex64> {
    if z.re <= 0.0 {
        return Err(LevyError::Domain(format!(
            "log K_lambda needs Re z > 0, got {z}"
        )));
    }
    if z.norm() >= 28.0 {
        // log of sqrt(pi/2z) e^{-z} [1 + A_1/z + ...]
        let mut sum = Complex64::new(1.0, 0.0);
        let mut a = 1.0f64;
        let mut zp = Complex64::new(1.0, 0.0);
        let l2 = 4.0 * lambda * lambda;
        let mut last = f64::INFINITY;
        for s in 1..24 {
            let odd = (2 * s - 1) as f64;
            a *= (l2 - odd * odd) / (s as f64 * 8.0);
            zp /= z;
            let term = a * zp;
            if term.norm() > last {
                break;
            }
            last = term.norm();
            sum += term;
        }
        return Ok(0.5 * ((PI / 2.0).ln() - z.ln()) - z + sum.ln());
    }
    // anchor on the real axis at the same modulus
    let r = z.norm();
    let anchor = Complex64::new(r, 0.0);
    let k0 = crate::special::bessel_k(lambda, anchor, 1e-13)?;
    let mut acc = k0.ln(); // real positive value, principal log exact
    let steps = ((z - anchor).norm() / 1.5).ceil().max(1.0) as usize;
    let mut prev = k0;
    for j in 1..=steps {
        let zj = anchor + (z - anchor) * (j as f64 / steps as f64);
        let kj = crate::special::bessel_k(lambda, zj, 1e-13)?;
        acc += (kj / prev).ln();
        prev = kj;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn cgmy(c: f64, nu: f64, lm: f64, lp: f64) -> LevyModel {
        LevyModel::Kobol {
            nu_plus: nu,
            nu_minus: nu,
            c_plus: c,
            c_minus: c,
            lambda_minus: lm,
            lambda_plus: lp,
            mu: 0.0,
            sigma2: 0.0,
        }
    }

    fn assert_c_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol * (1.0 + b.norm()), "{a} vs {b}");
    }

    #[test]
    fn bm_quadratic() {
        let m = LevyModel::Bm { sigma2: 2.0, mu: 0.0 };
        let v = m.psi0(Complex64::new(3.0, 0.0)).unwrap();
        assert_c_close(v, Complex64::new(9.0, 0.0), 1e-15);
    }

    #[test]
    fn psi0_vanishes_at_zero_exactly() {
        for m in crate::test_fixtures::catalog() {
            let v = m.psi0(Complex64::new(0.0, 0.0)).unwrap();
            assert_eq!(v, Complex64::new(0.0, 0.0), "{m:?}");
        }
    }

    #[test]
    fn cgmy_value_at_one() {
        // Gamma(-1/2) [ 4^{1/2} - (4-i)^{1/2} + 8^{1/2} - (8+i)^{1/2} ]
        let m = cgmy(1.0, 0.5, -4.0, 8.0);
        let v = m.psi0(Complex64::new(1.0, 0.0)).unwrap();
        assert_c_close(
            v,
            Complex64::new(0.073_829_693_399_638_96, -0.254_044_485_965_949_78),
            1e-13,
        );
    }

    #[test]
    fn nig_value_at_one() {
        let m = LevyModel::Nts {
            delta: 1.0,
            nu: 1.0,
            alpha: 2.0,
            beta: 0.5,
            mu: 0.1,
        };
        let v = m.psi(Complex64::new(1.0, 0.0)).unwrap();
        assert_c_close(
            v,
            Complex64::new(0.254_868_858_590_802_47, -0.328_168_753_050_127_06),
            1e-13,
        );
    }

    #[test]
    fn drift_only_model() {
        let m = LevyModel::Bm { sigma2: 0.0, mu: 1.0 };
        let v = m.psi(Complex64::new(5.0, 0.0)).unwrap();
        assert_c_close(v, Complex64::new(0.0, -5.0), 1e-15);
    }

    #[test]
    fn vg_log_divergence_at_cut_endpoint() {
        let m = LevyModel::VarianceGamma {
            c: 1.0,
            alpha: 2.0,
            beta: 0.0,
            mu: 0.0,
        };
        // xi = i t, t -> 2: psi0 real, increasing to +inf logarithmically
        let mut prev = 0.0;
        for &t in &[1.9, 1.99, 1.999, 1.9999] {
            let v = m.psi0(Complex64::new(0.0, t)).unwrap();
            assert!(v.im.abs() < 1e-12);
            assert!(v.re > prev);
            prev = v.re;
        }
        // slope vs log(2 - t) is asymptotically -c
        let v1 = m.psi0(Complex64::new(0.0, 2.0 - 1e-6)).unwrap().re;
        let v2 = m.psi0(Complex64::new(0.0, 2.0 - 1e-8)).unwrap().re;
        let slope = (v2 - v1) / ((1e-6f64).ln() - (1e-8f64).ln()) * -1.0;
        assert!((slope - 1.0).abs() < 0.05, "log slope {slope}");
    }

    #[test]
    fn meixner_continuation_matches_strip_values() {
        let m = LevyModel::Meixner {
            delta: 1.0,
            a: 1.0,
            b: 0.3,
            mu: 0.0,
        };
        let v = m.psi0(Complex64::new(2.0, 0.0)).unwrap();
        // 2 [ln cosh((2 - 0.3 i)/2) - ln cos 0.15], principal value, |Im z| < pi/2
        let z = Complex64::new(1.0, -0.15);
        let expect = 2.0 * (z.cosh().ln() - (0.15f64).cos().ln());
        assert_c_close(v, expect, 1e-13);
        // cut rejection
        assert!(m.psi0(Complex64::new(0.0, 3.0)).is_err());
    }

    #[test]
    fn mejd_validation() {
        let bad = LevyModel::Hejd {
            sigma2: 0.1,
            mu: 0.0,
            pos: vec![
                ExpJump { p: -0.5, alpha: 3.0 },
                ExpJump { p: 1.0, alpha: 7.0 },
            ],
            neg: vec![ExpJump { p: 1.0, alpha: 5.0 }],
        };
        let d = bad.validate();
        assert!(d.iter().any(|s| s.contains("p_1 > 0")), "{d:?}");
        let kobol_degenerate = LevyModel::Kobol {
            nu_plus: 0.5,
            nu_minus: 0.5,
            c_plus: 1.0,
            c_minus: 1.0,
            lambda_minus: 0.0,
            lambda_plus: 0.0,
            mu: 0.0,
            sigma2: 0.0,
        };
        assert!(kobol_degenerate
            .validate()
            .iter()
            .any(|s| s.contains("stable case unsupported")));
        let nig = LevyModel::Nts {
            delta: 1.0,
            nu: 1.0,
            alpha: 2.0,
            beta: 0.5,
            mu: 0.0,
        };
        assert!(nig.validate().is_empty());
    }

    #[test]
    fn gh_reduces_to_nig_at_lambda_minus_half() {
        let gh = LevyModel::GenHyperbolic {
            alpha: 2.0,
            beta: 0.4,
            delta: 1.3,
            lambda: -0.5,
            mu: 0.0,
        };
        let nig = LevyModel::Nts {
            delta: 1.3,
            nu: 1.0,
            alpha: 2.0,
            beta: 0.4,
            mu: 0.0,
        };
        for &(re, im) in &[(0.7, 0.2), (-3.0, 0.9), (40.0, -1.0), (0.05, -1.1)] {
            let xi = Complex64::new(re, im);
            let a = gh.psi0(xi).unwrap();
            let b = nig.psi0(xi).unwrap();
            assert_c_close(a, b, 1e-9);
        }
    }
}
