//! Regularity metadata: extended orders, cones of analyticity/growth, strips.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};

/// Extended growth order: a numeric exponent in (0, 2], `0+` (logarithmic
/// growth) or `1+` (rho log rho growth).
///
/// The ordering is total: `0+` below everything, `1 < 1+ < nu` for every
/// numeric `nu > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExtOrder {
    ZeroPlus,
    Numeric(f64),
    OnePlus,
}

impl ExtOrder {
    /// Rank used by the total order: `0+` -> -inf side, `1+` sits just above 1.
    fn key(self) -> (u8, f64) {
        match self {
            ExtOrder::ZeroPlus => (0, 0.0),
            ExtOrder::Numeric(v) => {
                if v <= 1.0 {
                    (1, v)
                } else {
                    (3, v)
                }
            }
            ExtOrder::OnePlus => (2, 1.0),
        }
    }

    /// Numeric exponent when the order is `Numeric`.
    pub fn as_numeric(self) -> Option<f64> {
        match self {
            ExtOrder::Numeric(v) => Some(v),
            _ => None,
        }
    }

    /// Growth of rho^order, with the `0+`/`1+` conventions of the catalog:
    /// log(rho) and rho log(rho) for rho > 1.
    pub fn growth(self, rho: f64) -> f64 {
        match self {
            ExtOrder::ZeroPlus => rho.max(1.0 + 1e-12).ln(),
            ExtOrder::OnePlus => rho * rho.max(1.0 + 1e-12).ln(),
            ExtOrder::Numeric(v) => rho.powf(v),
        }
    }
}

impl PartialOrd for ExtOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (ka, va) = self.key();
        let (kb, vb) = other.key();
        if ka != kb {
            return Some(ka.cmp(&kb));
        }
        va.partial_cmp(&vb)
    }
}

/// Strip of analyticity around the real axis; ends may be infinite for
/// spectrally one-sided processes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strip {
    pub mu_minus: f64,
    pub mu_plus: f64,
}

impl Strip {
    pub fn new(mu_minus: f64, mu_plus: f64) -> Self {
        Strip { mu_minus, mu_plus }
    }

    pub fn contains(&self, s: f64) -> bool {
        self.mu_minus < s && s < self.mu_plus
    }

    pub fn is_valid(&self) -> bool {
        self.mu_minus < self.mu_plus && self.mu_minus <= 0.0 && self.mu_plus >= 0.0
    }
}

/// A cone of directions.
///
/// `TwoSided { gm, gp }` is the set of directions `(gm, gp) U (pi-gp, pi-gm)`
/// with `-pi/2 <= gm <= 0 <= gp <= pi/2`; `gm = -pi/2, gp = pi/2` encodes
/// `C \ iR`. `UpperOneSided { gamma }` / `LowerOneSided { gamma }` are the
/// cones `i C_gamma` / `-i C_gamma` of spectrally one-sided processes
/// (`gamma` up to `pi`), and `FullPlane` is an entire exponent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum AngleCone {
    TwoSided { gm: f64, gp: f64 },
    UpperOneSided { gamma: f64 },
    LowerOneSided { gamma: f64 },
    FullPlane,
}

impl AngleCone {
    pub const SLASH_IR: AngleCone = AngleCone::TwoSided {
        gm: -FRAC_PI_2,
        gp: FRAC_PI_2,
    };

    /// Does the cone contain the direction `phi` (strictly)?
    pub fn contains_angle(&self, phi: f64) -> bool {
        let phi = normalize_angle(phi);
        match *self {
            AngleCone::FullPlane => true,
            AngleCone::TwoSided { gm, gp } => {
                let refl = normalize_angle(PI - phi);
                (phi > gm && phi < gp) || (refl > gm && refl < gp)
            }
            AngleCone::UpperOneSided { gamma } => phi > FRAC_PI_2 - gamma && phi < FRAC_PI_2 + gamma,
            AngleCone::LowerOneSided { gamma } => {
                phi > -FRAC_PI_2 - gamma && phi < -FRAC_PI_2 + gamma
            }
        }
    }

    /// Admissible sinh tilts: the open interval of angles `w` in
    /// (-pi/2, pi/2) such that both wing directions `w` and `pi - w` lie in
    /// the cone.
    pub fn tilt_interval(&self) -> (f64, f64) {
        match *self {
            AngleCone::FullPlane => (-FRAC_PI_2, FRAC_PI_2),
            AngleCone::TwoSided { gm, gp } => (gm, gp),
            AngleCone::UpperOneSided { gamma } => ((FRAC_PI_2 - gamma).max(-FRAC_PI_2), FRAC_PI_2),
            AngleCone::LowerOneSided { gamma } => (-FRAC_PI_2, (gamma - FRAC_PI_2).min(FRAC_PI_2)),
        }
    }

    /// Intersection, clamped to the two-sided representation when mixing
    /// one-sided cones with `C \ iR`-type cones.
    pub fn intersect(&self, other: &AngleCone) -> Option<AngleCone> {
        let (a_lo, a_hi) = self.tilt_interval();
        let (b_lo, b_hi) = other.tilt_interval();
        let lo = a_lo.max(b_lo);
        let hi = a_hi.min(b_hi);
        if lo >= hi {
            return None;
        }
        match (self, other) {
            (AngleCone::FullPlane, c) => Some(*c),
            (c, AngleCone::FullPlane) => Some(*c),
            _ => Some(AngleCone::TwoSided { gm: lo, gp: hi }),
        }
    }

    /// True when the cone (viewed through its tilt interval) is contained in
    /// the other.
    pub fn within(&self, outer: &AngleCone) -> bool {
        let (lo, hi) = self.tilt_interval();
        let (olo, ohi) = outer.tilt_interval();
        olo <= lo + 1e-12 && ohi >= hi - 1e-12
    }
}

fn normalize_angle(phi: f64) -> f64 {
    let mut p = phi % (2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    if p < -PI {
        p += 2.0 * PI;
    }
    p
}

/// Full regularity descriptor of a model: strip, cone of analyticity,
/// sub-cone of growth, and the (lower, upper) extended order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SinhType {
    pub strip: Strip,
    pub cone_c: AngleCone,
    pub cone_cplus: AngleCone,
    pub order: (ExtOrder, ExtOrder),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_total_ordering() {
        use ExtOrder::*;
        assert!(ZeroPlus < Numeric(0.1));
        assert!(ZeroPlus < OnePlus);
        assert!(Numeric(1.0) < OnePlus);
        assert!(OnePlus < Numeric(1.0 + 1e-9));
        assert!(Numeric(0.99) < OnePlus);
        assert!(Numeric(1.5) > OnePlus);
        assert!(Numeric(0.5) < Numeric(0.7));
        assert!(OnePlus == OnePlus);
    }

    #[test]
    fn cone_membership() {
        let c = AngleCone::TwoSided {
            gm: -FRAC_PI_2,
            gp: FRAC_PI_2,
        };
        assert!(c.contains_angle(0.3));
        assert!(c.contains_angle(PI - 0.3));
        assert!(c.contains_angle(-PI + 0.3));
        assert!(!c.contains_angle(FRAC_PI_2));
        let up = AngleCone::UpperOneSided { gamma: 0.75 * PI };
        assert!(up.contains_angle(FRAC_PI_2));
        assert!(up.contains_angle(0.1)); // dips below the real axis
        assert!(!up.contains_angle(-FRAC_PI_2));
        let (lo, hi) = up.tilt_interval();
        assert!(lo < 0.0 && hi == FRAC_PI_2);
    }
}
