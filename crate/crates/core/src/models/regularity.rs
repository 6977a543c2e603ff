//! Per-family regularity metadata: strip and cone of analyticity, growth
//! sub-cone, extended order, and the stabilizing asymptotic coefficient
//! `c_inf` with `psi0(rho e^{i phi}) ~ c_inf(phi) rho^nu`.

use super::meta::{AngleCone, ExtOrder, SinhType, Strip};
use super::{LevyModel, SubordinatorModel};
use crate::error::{LevyError, Result};
use crate::special::gamma_real;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

const INF: f64 = f64::INFINITY;

fn expi(phi: f64) -> Complex64 {
    Complex64::new(phi.cos(), phi.sin())
}

impl LevyModel {
    /// Cheap strip bounds (mu_minus, mu_plus) without the full metadata
    /// computation; used for cut checks during evaluation.
    pub(crate) fn strip_bounds_quick(&self) -> (f64, f64) {
        match self {
            LevyModel::Bm { .. } | LevyModel::Merton { .. } => (-INF, INF),
            LevyModel::Hejd { pos, neg, .. } | LevyModel::Meromorphic { pos, neg, .. } => {
                let lo = pos
                    .iter()
                    .map(|j| j.alpha)
                    .fold(INF, f64::min);
                let hi = neg
                    .iter()
                    .map(|j| j.alpha)
                    .fold(INF, f64::min);
                (-lo, hi)
            }
            LevyModel::VarianceGamma { alpha, beta, .. }
            | LevyModel::Nts { alpha, beta, .. }
            | LevyModel::GenHyperbolic { alpha, beta, .. } => (beta - alpha, beta + alpha),
            LevyModel::Meixner { a, b, .. } => ((-PI + b) / a, (PI + b) / a),
            LevyModel::Kobol {
                c_plus,
                c_minus,
                lambda_minus,
                lambda_plus,
                ..
            } => {
                let lo = if *c_plus > 0.0 { *lambda_minus } else { -INF };
                let hi = if *c_minus > 0.0 { *lambda_plus } else { INF };
                (lo, hi)
            }
            LevyModel::Beta {
                c1,
                alpha1,
                beta1,
                c2,
                alpha2,
                beta2,
                ..
            } => {
                let lo = if *c1 > 0.0 { -beta1 * alpha1 } else { -INF };
                let hi = if *c2 > 0.0 { beta2 * alpha2 } else { INF };
                (lo, hi)
            }
            LevyModel::Esscher { inner, alpha } => {
                let (lo, hi) = inner.strip_bounds_quick();
                (lo - alpha, hi - alpha)
            }
            LevyModel::Mixture { components } => {
                let mut lo = -INF;
                let mut hi = INF;
                for (a, m) in components {
                    let (l, h) = m.strip_bounds_quick();
                    lo = lo.max(l / a);
                    hi = hi.min(h / a);
                }
                (lo, hi)
            }
            LevyModel::Subordinated { y, .. } => y.strip_bounds_quick(),
        }
    }

    /// Full regularity metadata per the family case analysis.
    pub fn sinh_type(&self) -> Result<SinhType> {
        let (lo, hi) = self.strip_bounds_quick();
        let strip = Strip::new(lo, hi);
        match self {
            LevyModel::Bm { .. } => Ok(SinhType {
                strip,
                cone_c: AngleCone::FullPlane,
                cone_cplus: AngleCone::TwoSided {
                    gm: -FRAC_PI_4,
                    gp: FRAC_PI_4,
                },
                order: (ExtOrder::Numeric(2.0), ExtOrder::Numeric(2.0)),
            }),
            LevyModel::Merton { .. } => Ok(SinhType {
                strip,
                cone_c: AngleCone::TwoSided {
                    gm: -FRAC_PI_4,
                    gp: FRAC_PI_4,
                },
                cone_cplus: AngleCone::TwoSided {
                    gm: -FRAC_PI_4,
                    gp: FRAC_PI_4,
                },
                order: (ExtOrder::Numeric(2.0), ExtOrder::Numeric(2.0)),
            }),
            LevyModel::Hejd {
                sigma2, pos, neg, ..
            }
            | LevyModel::Meromorphic {
                sigma2, pos, neg, ..
            } => {
                let cone_c = if pos.is_empty() {
                    AngleCone::LowerOneSided { gamma: PI }
                } else if neg.is_empty() {
                    AngleCone::UpperOneSided { gamma: PI }
                } else {
                    AngleCone::SLASH_IR
                };
                if *sigma2 > 0.0 {
                    Ok(SinhType {
                        strip,
                        cone_c,
                        cone_cplus: AngleCone::TwoSided {
                            gm: -FRAC_PI_4,
                            gp: FRAC_PI_4,
                        },
                        order: (ExtOrder::Numeric(2.0), ExtOrder::Numeric(2.0)),
                    })
                } else if let LevyModel::Meromorphic { .. } = self {
                    self.meromorphic_fitted_type(strip, cone_c)
                } else {
                    // finite-activity jump part: bounded exponent
                    Ok(SinhType {
                        strip,
                        cone_c,
                        cone_cplus: cone_c,
                        order: (ExtOrder::ZeroPlus, ExtOrder::ZeroPlus),
                    })
                }
            }
            LevyModel::VarianceGamma { .. } => Ok(SinhType {
                strip,
                cone_c: AngleCone::SLASH_IR,
                cone_cplus: AngleCone::SLASH_IR,
                order: (ExtOrder::ZeroPlus, ExtOrder::ZeroPlus),
            }),
            LevyModel::Nts { nu, .. } => {
                let g = (1.0f64).min(1.0 / nu) * FRAC_PI_2;
                Ok(SinhType {
                    strip,
                    cone_c: AngleCone::SLASH_IR,
                    cone_cplus: AngleCone::TwoSided { gm: -g, gp: g },
                    order: (ExtOrder::Numeric(*nu), ExtOrder::Numeric(*nu)),
                })
            }
            LevyModel::Meixner { .. } => Ok(SinhType {
                strip,
                cone_c: AngleCone::SLASH_IR,
                cone_cplus: AngleCone::SLASH_IR,
                order: (ExtOrder::Numeric(1.0), ExtOrder::Numeric(1.0)),
            }),
            LevyModel::Kobol { .. } => self.kobol_type(strip),
            LevyModel::Beta { .. } => self.beta_type(strip),
            LevyModel::GenHyperbolic { .. } => Ok(SinhType {
                strip,
                cone_c: AngleCone::SLASH_IR,
                cone_cplus: AngleCone::SLASH_IR,
                order: (ExtOrder::Numeric(1.0), ExtOrder::Numeric(1.0)),
            }),
            LevyModel::Esscher { inner, .. } => {
                let st = inner.sinh_type()?;
                Ok(SinhType { strip, ..st })
            }
            LevyModel::Mixture { components } => {
                let mut cone_c = AngleCone::FullPlane;
                let mut cone_cplus = AngleCone::FullPlane;
                let mut lo_ord = ExtOrder::Numeric(2.0);
                let mut hi_ord = ExtOrder::ZeroPlus;
                for (_, m) in components {
                    let st = m.sinh_type()?;
                    cone_c = cone_c.intersect(&st.cone_c).ok_or_else(|| {
                        LevyError::EmptyIntersection("mixture cones of analyticity".into())
                    })?;
                    cone_cplus = cone_cplus.intersect(&st.cone_cplus).ok_or_else(|| {
                        LevyError::EmptyIntersection("mixture growth cones".into())
                    })?;
                    if st.order.0 < lo_ord {
                        lo_ord = st.order.0;
                    }
                    if st.order.1 > hi_ord {
                        hi_ord = st.order.1;
                    }
                }
                if !strip.is_valid() {
                    return Err(LevyError::EmptyIntersection("mixture strips".into()));
                }
                Ok(SinhType {
                    strip,
                    cone_c,
                    cone_cplus,
                    order: (lo_ord, hi_ord),
                })
            }
            LevyModel::Subordinated { y, z } => self.subordinated_type(y, z),
        }
    }

    fn kobol_type(&self, strip: Strip) -> Result<SinhType> {
        let LevyModel::Kobol {
            nu_plus,
            nu_minus,
            c_plus,
            c_minus,
            sigma2,
            ..
        } = self
        else {
            unreachable!()
        };
        let sp = *c_plus > 0.0;
        let sn = *c_minus > 0.0;
        let cone_c = if sp && sn {
            AngleCone::SLASH_IR
        } else if sp {
            AngleCone::UpperOneSided { gamma: PI }
        } else {
            AngleCone::LowerOneSided { gamma: PI }
        };
        if *sigma2 > 0.0 {
            return Ok(SinhType {
                strip,
                cone_c,
                cone_cplus: AngleCone::TwoSided {
                    gm: -FRAC_PI_4,
                    gp: FRAC_PI_4,
                },
                order: (ExtOrder::Numeric(2.0), ExtOrder::Numeric(2.0)),
            });
        }
        let ord_of = |nu: f64| -> ExtOrder {
            if nu == 0.0 {
                ExtOrder::ZeroPlus
            } else if nu == 1.0 {
                ExtOrder::OnePlus
            } else {
                ExtOrder::Numeric(nu)
            }
        };
        let op = ord_of(*nu_plus);
        let on = ord_of(*nu_minus);
        let (order, cone_cplus) = if sp && sn {
            if op > on {
                (op, kobol_pos_cplus(*nu_plus, true))
            } else if on > op {
                (on, kobol_neg_cplus(*nu_minus, true))
            } else {
                match op {
                    ExtOrder::ZeroPlus => (ExtOrder::ZeroPlus, AngleCone::SLASH_IR),
                    ExtOrder::OnePlus => {
                        if c_plus > c_minus {
                            (
                                ExtOrder::OnePlus,
                                AngleCone::TwoSided {
                                    gm: -FRAC_PI_2,
                                    gp: 0.0,
                                },
                            )
                        } else if c_minus > c_plus {
                            (
                                ExtOrder::OnePlus,
                                AngleCone::TwoSided {
                                    gm: 0.0,
                                    gp: FRAC_PI_2,
                                },
                            )
                        } else {
                            // log terms cancel; linear growth with full cone
                            (ExtOrder::Numeric(1.0), AngleCone::SLASH_IR)
                        }
                    }
                    ExtOrder::Numeric(nu) => {
                        // C+ = { phi : Re c_inf(phi) > 0 } from the combined coefficient
                        let a = -gamma_real(-nu)
                            * (c_plus * expi(-FRAC_PI_2 * nu) + c_minus * expi(FRAC_PI_2 * nu));
                        let th = a.im.atan2(a.re);
                        let gm = ((-FRAC_PI_2 - th) / nu).max(-FRAC_PI_2);
                        let gp = ((FRAC_PI_2 - th) / nu).min(FRAC_PI_2);
                        (ExtOrder::Numeric(nu), AngleCone::TwoSided { gm, gp })
                    }
                }
            }
        } else if sp {
            (op, kobol_pos_cplus(*nu_plus, false))
        } else {
            (on, kobol_neg_cplus(*nu_minus, false))
        };
        let cone_cplus = cone_cplus
            .intersect(&cone_c)
            .unwrap_or(cone_cplus);
        let lower = match order {
            // adjacent-cone order-1+ cases have linear lower growth
            ExtOrder::OnePlus => ExtOrder::Numeric(1.0),
            o => o,
        };
        Ok(SinhType {
            strip,
            cone_c,
            cone_cplus,
            order: (lower, order),
        })
    }

    fn beta_type(&self, strip: Strip) -> Result<SinhType> {
        let LevyModel::Beta {
            sigma2,
            c1,
            beta1,
            gamma1,
            c2,
            beta2,
            gamma2,
            ..
        } = self
        else {
            unreachable!()
        };
        let sp = *c1 > 0.0;
        let sn = *c2 > 0.0;
        let cone_c = if sp && sn {
            AngleCone::SLASH_IR
        } else if sp {
            AngleCone::UpperOneSided { gamma: PI }
        } else {
            AngleCone::LowerOneSided { gamma: PI }
        };
        if *sigma2 > 0.0 {
            return Ok(SinhType {
                strip,
                cone_c,
                cone_cplus: AngleCone::TwoSided {
                    gm: -FRAC_PI_4,
                    gp: FRAC_PI_4,
                },
                order: (ExtOrder::Numeric(2.0), ExtOrder::Numeric(2.0)),
            });
        }
        let g1 = if sp { *gamma1 } else { 0.0 };
        let g2 = if sn { *gamma2 } else { 0.0 };
        let gmax = g1.max(g2);
        if gmax <= 1.0 {
            return Err(LevyError::Unsupported(
                "beta model with sigma2 = 0 and gamma_j < 1 is compound Poisson".into(),
            ));
        }
        let nu = gmax - 1.0;
        let cone_cplus = if sp && sn && (g1 - g2).abs() < 1e-12 {
            // equal-gamma case: rotate the one-sided interval by the argument
            // of the combined coefficient
            let g = g1;
            let a = -gamma_real(1.0 - g)
                * (c1 / beta1 * expi(-(g - 1.0) * FRAC_PI_2)
                    + c2 / beta2 * expi((g - 1.0) * FRAC_PI_2));
            let phi0 = a.im.atan2(a.re);
            let gm = (-FRAC_PI_2 / nu - phi0).max(-FRAC_PI_2);
            let gp = (FRAC_PI_2 / nu - phi0).min(FRAC_PI_2);
            AngleCone::TwoSided { gm, gp }
        } else if g1 > g2 {
            if g1 < 2.0 {
                AngleCone::TwoSided {
                    gm: (1.0 - 1.0 / nu).max(-1.0) * FRAC_PI_2,
                    gp: FRAC_PI_2,
                }
            } else {
                AngleCone::TwoSided {
                    gm: (1.0 - 3.0 / nu).max(-1.0) * FRAC_PI_2,
                    gp: (1.0 - 1.0 / nu) * FRAC_PI_2,
                }
            }
        } else {
            if g2 < 2.0 {
                AngleCone::TwoSided {
                    gm: -FRAC_PI_2,
                    gp: (1.0f64).min(1.0 / nu - 1.0) * FRAC_PI_2,
                }
            } else {
                AngleCone::TwoSided {
                    gm: (1.0 / nu - 1.0) * FRAC_PI_2,
                    gp: (1.0f64).min(3.0 / nu - 1.0) * FRAC_PI_2,
                }
            }
        };
        Ok(SinhType {
            strip,
            cone_c,
            cone_cplus,
            order: (ExtOrder::Numeric(nu), ExtOrder::Numeric(nu)),
        })
    }

    /// Order metadata for driftless meromorphic exponents is only provided
    /// when the atoms follow a recognizable power pattern on a uniform or
    /// geometric grid.
    fn meromorphic_fitted_type(&self, strip: Strip, cone_c: AngleCone) -> Result<SinhType> {
        let LevyModel::Meromorphic { pos, neg, .. } = self else {
            unreachable!()
        };
        let fit_side = |list: &[super::ExpJump]| -> Option<f64> {
            if list.len() < 4 {
                return None;
            }
            let mut s = list.to_vec();
            s.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
            let gaps: Vec<f64> = s.windows(2).map(|w| w[1].alpha - w[0].alpha).collect();
            let ratio = gaps.iter().cloned().fold(0.0f64, f64::max)
                / gaps.iter().cloned().fold(INF, f64::min);
            let uniform = ratio < 1.5;
            let geometric = s
                .windows(2)
                .map(|w| w[1].alpha / w[0].alpha)
                .collect::<Vec<_>>()
                .windows(2)
                .all(|r| (r[1] / r[0] - 1.0).abs() < 0.2);
            if !uniform && !geometric {
                return None;
            }
            // least-squares slope of ln p against ln alpha
            let n = s.len() as f64;
            let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
            for j in &s {
                if j.p <= 0.0 {
                    return None;
                }
                let x = j.alpha.ln();
                let y = j.p.ln();
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            Some(if uniform { slope } else { slope + 1.0 })
        };
        let mut exps = Vec::new();
        for list in [pos, neg] {
            if list.is_empty() {
                continue;
            }
            match fit_side(list) {
                Some(a) if (-1.0..0.0).contains(&(a + 1.0)) || (-1.0..0.0).contains(&a) => {
                    exps.push(a)
                }
                _ => {
                    return Err(LevyError::Unsupported(
                        "driftless meromorphic model without a recognized atom pattern".into(),
                    ))
                }
            }
        }
        let a = exps.iter().cloned().fold(-INF, f64::max);
        // a_1-type side measure with atom exponent a: order a + 2 in (0,1)
        let nu = (a + 2.0).clamp(0.05, 1.95);
        Ok(SinhType {
            strip,
            cone_c,
            cone_cplus: cone_c,
            order: (ExtOrder::Numeric(nu), ExtOrder::Numeric(nu)),
        })
    }

    fn subordinated_type(&self, y: &LevyModel, z: &SubordinatorModel) -> Result<SinhType> {
        let sty = y.sinh_type()?;
        let cut = z.laplace_cut(); // Psi_Z analytic on C \ (-inf, cut]
        let mut lo = sty.strip.mu_minus;
        let mut hi = sty.strip.mu_plus;
        // boundary limits of psi_Y on its strip, with the concave map
        // t |-> psi_Y(i t); solve psi_Y(i mu') = cut where the boundary dips
        // below the cut of the Laplace exponent
        let psi_it = |t: f64| -> f64 { y.psi(Complex64::new(0.0, t)).map(|v| v.re).unwrap_or(-INF) };
        if lo.is_finite() {
            let b = psi_it(lo + 1e-9 * (hi - lo).min(1.0));
            if b < cut {
                lo = bisect_concave(&psi_it, lo, 0.0, cut);
            }
        }
        if hi.is_finite() {
            let b = psi_it(hi - 1e-9 * (hi - lo).min(1.0));
            if b < cut {
                hi = bisect_concave(&psi_it, hi, 0.0, cut);
            }
        }
        let strip = Strip::new(lo, hi);
        let (muz, nuz) = (z.drift(), z.order());
        let nuy = sty.order.1;
        let order = if muz > 0.0 {
            nuy
        } else {
            match (nuz, nuy) {
                (ExtOrder::ZeroPlus, _) => ExtOrder::ZeroPlus,
                (ExtOrder::Numeric(nz), ExtOrder::Numeric(ny)) => {
                    if ny >= 1.0 || y.mu() == 0.0 {
                        ExtOrder::Numeric(nz * ny)
                    } else {
                        ExtOrder::Numeric(nz)
                    }
                }
                (o, _) => o,
            }
        };
        // empirical growth cone: probe rays for positive stabilized real part
        let (tc_lo, tc_hi) = sty.cone_cplus.tilt_interval();
        let probe = |phi: f64| -> bool {
            let mut prev = 0.0;
            for &r in &[300.0, 3000.0] {
                let xi = r * expi(phi);
                match self.psi0(xi) {
                    Ok(v) if v.re > prev && v.re > 0.0 => prev = v.re,
                    _ => return false,
                }
            }
            true
        };
        let n_probe = 17;
        let mut angles = Vec::new();
        for k in 0..n_probe {
            let phi = tc_lo + (tc_hi - tc_lo) * (k as f64 + 0.5) / n_probe as f64;
            if probe(phi) {
                angles.push(phi);
            }
        }
        let cone_cplus = if angles.is_empty() {
            sty.cone_cplus
        } else {
            AngleCone::TwoSided {
                gm: angles.iter().cloned().fold(INF, f64::min) - 0.02,
                gp: angles.iter().cloned().fold(-INF, f64::max) + 0.02,
            }
        };
        Ok(SinhType {
            strip,
            cone_c: sty.cone_c,
            cone_cplus,
            order: (order, order),
        })
    }

    /// Stabilizing asymptotic coefficient: `psi0(rho e^{i phi})` behaves as
    /// `c_inf(phi) rho^nu` (or `c_inf(phi) rho ln rho` for order `1+`).
    /// Undefined for logarithmic-order models; see [`LevyModel::log_coeff`].
    pub fn c_inf(&self, phi: f64) -> Result<Complex64> {
        let st = self.sinh_type()?;
        if !st.cone_c.contains_angle(phi) {
            return Err(LevyError::Domain(format!(
                "phi = {phi} not strictly inside the cone of analyticity"
            )));
        }
        match self {
            LevyModel::Bm { sigma2, .. } | LevyModel::Merton { sigma2, .. } => {
                Ok(0.5 * sigma2 * expi(2.0 * phi))
            }
            LevyModel::Hejd { sigma2, .. } | LevyModel::Meromorphic { sigma2, .. } => {
                if *sigma2 > 0.0 {
                    Ok(0.5 * sigma2 * expi(2.0 * phi))
                } else {
                    Err(LevyError::Unsupported(
                        "no power asymptotic coefficient for a bounded exponent".into(),
                    ))
                }
            }
            LevyModel::VarianceGamma { .. } => Err(LevyError::Unsupported(
                "logarithmic order; use log_coeff".into(),
            )),
            LevyModel::Nts { delta, nu, .. } => Ok(*delta * expi(phi * nu)),
            LevyModel::Meixner { delta, a, .. } => Ok(a * delta * expi(phi)),
            LevyModel::GenHyperbolic { delta, .. } => Ok(*delta * expi(phi)),
            LevyModel::Kobol {
                nu_plus,
                nu_minus,
                c_plus,
                c_minus,
                sigma2,
                ..
            } => {
                if *sigma2 > 0.0 {
                    return Ok(0.5 * sigma2 * expi(2.0 * phi));
                }
                let sp = *c_plus > 0.0;
                let sn = *c_minus > 0.0;
                let pos_c = |nu: f64| -> Result<Complex64> {
                    if nu == 1.0 {
                        Ok(c_plus * expi(FRAC_PI_2 + phi))
                    } else if nu == 0.0 {
                        Err(LevyError::Unsupported("logarithmic order".into()))
                    } else {
                        Ok(-c_plus * gamma_real(-nu) * expi((-FRAC_PI_2 + phi) * nu))
                    }
                };
                let neg_c = |nu: f64| -> Result<Complex64> {
                    if nu == 1.0 {
                        Ok(c_minus * expi(-FRAC_PI_2 + phi))
                    } else if nu == 0.0 {
                        Err(LevyError::Unsupported("logarithmic order".into()))
                    } else {
                        Ok(-c_minus * gamma_real(-nu) * expi((FRAC_PI_2 + phi) * nu))
                    }
                };
                if sp && sn {
                    if nu_plus > nu_minus {
                        pos_c(*nu_plus)
                    } else if nu_minus > nu_plus {
                        neg_c(*nu_minus)
                    } else if *nu_plus == 1.0 {
                        if c_plus != c_minus {
                            // coefficient of rho ln rho
                            Ok(Complex64::new(0.0, c_plus - c_minus) * expi(phi))
                        } else {
                            // log terms cancel; linear term survives
                            Ok(0.5 * PI * (c_plus + c_minus) * expi(phi))
                        }
                    } else {
                        Ok(pos_c(*nu_plus)? + neg_c(*nu_minus)?)
                    }
                } else if sp {
                    pos_c(*nu_plus)
                } else {
                    neg_c(*nu_minus)
                }
            }
            LevyModel::Beta {
                sigma2,
                c1,
                beta1,
                gamma1,
                c2,
                beta2,
                gamma2,
                ..
            } => {
                if *sigma2 > 0.0 {
                    return Ok(0.5 * sigma2 * expi(2.0 * phi));
                }
                let g1 = if *c1 > 0.0 { *gamma1 } else { 0.0 };
                let g2 = if *c2 > 0.0 { *gamma2 } else { 0.0 };
                let t1 = || -c1 / beta1 * gamma_real(1.0 - gamma1) * expi((-FRAC_PI_2 + phi) * (gamma1 - 1.0));
                let t2 = || -c2 / beta2 * gamma_real(1.0 - gamma2) * expi((FRAC_PI_2 + phi) * (gamma2 - 1.0));
                if (g1 - g2).abs() < 1e-12 {
                    Ok(t1() + t2())
                } else if g1 > g2 {
                    Ok(t1())
                } else {
                    Ok(t2())
                }
            }
            LevyModel::Esscher { inner, .. } => inner.c_inf(phi),
            LevyModel::Mixture { components } => {
                let hi = self.sinh_type()?.order.1;
                let mut v = Complex64::new(0.0, 0.0);
                for (a, m) in components {
                    let st = m.sinh_type()?;
                    if !(st.order.1 < hi) {
                        let exponent = match hi {
                            ExtOrder::Numeric(nu) => nu,
                            ExtOrder::OnePlus => 1.0,
                            ExtOrder::ZeroPlus => 0.0,
                        };
                        v += a.powf(exponent) * m.c_inf(phi)?;
                    }
                }
                Ok(v)
            }
            LevyModel::Subordinated { .. } => {
                // empirical stabilized coefficient along the ray
                let st = self.sinh_type()?;
                let rho = 1.0e4;
                let xi = rho * expi(phi);
                let v = self.psi0(xi)?;
                Ok(v / st.order.1.growth(rho))
            }
        }
    }

    /// Coefficient `c` of the logarithmic growth `psi0 ~ c ln |xi|` for
    /// order-`0+` models.
    pub fn log_coeff(&self) -> Option<f64> {
        match self {
            LevyModel::VarianceGamma { c, .. } => Some(2.0 * c),
            LevyModel::Kobol {
                nu_plus,
                nu_minus,
                c_plus,
                c_minus,
                sigma2,
                ..
            } if *sigma2 == 0.0 => {
                let mut acc = 0.0;
                if *c_plus > 0.0 {
                    if *nu_plus != 0.0 {
                        return None;
                    }
                    acc += c_plus;
                }
                if *c_minus > 0.0 {
                    if *nu_minus != 0.0 {
                        return None;
                    }
                    acc += c_minus;
                }
                Some(acc)
            }
            LevyModel::Esscher { inner, .. } => inner.log_coeff(),
            _ => None,
        }
    }
}

fn kobol_pos_cplus(nu: f64, two_sided: bool) -> AngleCone {
    if nu == 1.0 {
        AngleCone::TwoSided {
            gm: -FRAC_PI_2,
            gp: 0.0,
        }
    } else if nu == 0.0 {
        if two_sided {
            AngleCone::SLASH_IR
        } else {
            AngleCone::UpperOneSided { gamma: PI }
        }
    } else if nu < 1.0 {
        AngleCone::UpperOneSided {
            gamma: (1.0f64).min(1.0 / (2.0 * nu)) * PI,
        }
    } else {
        AngleCone::TwoSided {
            gm: (1.0 - 3.0 / nu).max(-1.0) * FRAC_PI_2,
            gp: (1.0 - 1.0 / nu) * FRAC_PI_2,
        }
    }
}

fn kobol_neg_cplus(nu: f64, two_sided: bool) -> AngleCone {
    if nu == 1.0 {
        AngleCone::TwoSided {
            gm: 0.0,
            gp: FRAC_PI_2,
        }
    } else if nu == 0.0 {
        if two_sided {
            AngleCone::SLASH_IR
        } else {
            AngleCone::LowerOneSided { gamma: PI }
        }
    } else if nu < 1.0 {
        AngleCone::LowerOneSided {
            gamma: (1.0f64).min(1.0 / (2.0 * nu)) * PI,
        }
    } else {
        AngleCone::TwoSided {
            gm: (1.0 / nu - 1.0) * FRAC_PI_2,
            gp: (3.0 / nu - 1.0).min(1.0) * FRAC_PI_2,
        }
    }
}

/// Bisection for `psi_Y(i mu') = target` on the segment from a strip end
/// towards 0, using concavity of `t -> psi_Y(i t)`.
fn bisect_concave(f: &dyn Fn(f64) -> f64, end: f64, zero: f64, target: f64) -> f64 {
    let mut a = end;
    let mut b = zero;
    // f(a) < target <= f(b) = 0
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if f(m) < target {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cgmy(c: f64, nu: f64, lm: f64, lp: f64) -> LevyModel {
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

    #[test]
    fn cgmy_half_order_full_growth_cone() {
        let st = cgmy(1.0, 0.5, -4.0, 8.0).sinh_type().unwrap();
        assert_eq!(st.order, (ExtOrder::Numeric(0.5), ExtOrder::Numeric(0.5)));
        let (gm, gp) = st.cone_cplus.tilt_interval();
        assert!((gm + FRAC_PI_2).abs() < 1e-12 && (gp - FRAC_PI_2).abs() < 1e-12);
        // Re c_inf(0) = -2 c Gamma(-nu) cos(nu pi / 2) > 0
        let c0 = cgmy(1.0, 0.5, -4.0, 8.0).c_inf(0.0).unwrap();
        let expect = -2.0 * gamma_real(-0.5) * (0.25 * PI).cos();
        assert!((c0.re - expect).abs() < 1e-12 && c0.im.abs() < 1e-14);
        assert!(c0.re > 0.0);
    }

    #[test]
    fn spectrally_positive_order_one_kobol() {
        let m = LevyModel::Kobol {
            nu_plus: 1.0,
            nu_minus: 0.0,
            c_plus: 1.0,
            c_minus: 0.0,
            lambda_minus: -2.0,
            lambda_plus: 0.0,
            mu: 0.0,
            sigma2: 0.0,
        };
        let st = m.sinh_type().unwrap();
        assert_eq!(st.order.1, ExtOrder::OnePlus);
        assert_eq!(
            st.cone_cplus,
            AngleCone::TwoSided {
                gm: -FRAC_PI_2,
                gp: 0.0
            }
        );
        assert_eq!(st.strip.mu_minus, -2.0);
        assert_eq!(st.strip.mu_plus, INF);
    }

    #[test]
    fn hejd_strip_from_nearest_poles() {
        let m = LevyModel::Hejd {
            sigma2: 0.3,
            mu: 0.0,
            pos: vec![
                super::super::ExpJump { p: 0.4, alpha: 3.0 },
                super::super::ExpJump { p: 0.2, alpha: 7.0 },
            ],
            neg: vec![super::super::ExpJump { p: 0.5, alpha: 5.0 }],
        };
        let st = m.sinh_type().unwrap();
        assert_eq!(st.strip, Strip::new(-3.0, 5.0));
        assert_eq!(st.order.1, ExtOrder::Numeric(2.0));
    }

    #[test]
    fn beta_one_sided_gamma_large() {
        let m = LevyModel::Beta {
            sigma2: 0.0,
            mu: 0.0,
            c1: 1.0,
            alpha1: 1.0,
            beta1: 1.5,
            gamma1: 2.5,
            c2: 0.0,
            alpha2: 1.0,
            beta2: 1.0,
            gamma2: 0.5,
        };
        let st = m.sinh_type().unwrap();
        assert_eq!(st.order.1, ExtOrder::Numeric(1.5));
        let (gm, gp) = st.cone_cplus.tilt_interval();
        assert!((gm - (-3.0 / 1.5 + 1.0).max(-1.0) * FRAC_PI_2).abs() < 1e-12);
        assert!((gp - (1.0 - 1.0 / 1.5) * FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn bm_asymptotic_coefficient() {
        let m = LevyModel::Bm { sigma2: 1.0, mu: 0.0 };
        let v = m.c_inf(0.4).unwrap();
        let expect = 0.5 * expi(0.8);
        assert!((v - expect).norm() < 1e-14);
    }

    #[test]
    fn meixner_linear_coefficient() {
        let m = LevyModel::Meixner {
            delta: 2.0,
            a: 1.5,
            b: 0.1,
            mu: 0.0,
        };
        let v = m.c_inf(0.3).unwrap();
        assert!((v - 3.0 * expi(0.3)).norm() < 1e-14);
    }

    #[test]
    fn asymptotic_coefficient_matches_large_rho_evaluation() {
        // |psi0(rho e^{i phi}) / growth(rho) - c_inf(phi)| shrinks with rho
        for m in crate::test_fixtures::catalog() {
            let st = m.sinh_type().unwrap();
            let (lo, hi) = st.cone_c.tilt_interval();
            let phi = 0.5 * (lo + hi) + 0.1 * (hi - lo);
            let cinf = match m.c_inf(phi) {
                Ok(c) => c,
                Err(_) => continue, // logarithmic order
            };
            let mut prev = INF;
            for &rho in &[1e2, 1e3, 1e4] {
                let xi = rho * expi(phi);
                let v = m.psi0(xi).unwrap() / st.order.1.growth(rho);
                let err = (v - cinf).norm();
                assert!(
                    err < prev * 1.05 + 1e-14,
                    "{m:?} rho={rho} err={err} prev={prev}"
                );
                prev = err;
            }
            assert!(prev < 0.2 * (1.0 + cinf.norm()), "{m:?}: residual {prev}");
        }
    }
}
