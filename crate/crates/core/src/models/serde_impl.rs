//! JSON model files: a `family` discriminator plus the per-family parameter
//! names of the type definitions. Unknown fields and unknown families are
//! rejected.

use super::{ExpJump, LevyModel, SubordinatorModel};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

macro_rules! params {
    ($name:ident { $($field:ident : $ty:ty),* $(,)? }) => {
        #[derive(Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        struct $name {
            $(pub $field: $ty),*
        }
    };
}

params!(BmP { sigma2: f64, mu: f64 });
params!(MertonP { sigma2: f64, mu: f64, lambda: f64, m: f64, s: f64 });
params!(HejdP { sigma2: f64, mu: f64, pos: Vec<ExpJump>, neg: Vec<ExpJump> });
params!(VgP { c: f64, alpha: f64, beta: f64, mu: f64 });
params!(NtsP { delta: f64, nu: f64, alpha: f64, beta: f64, mu: f64 });
params!(MeixnerP { delta: f64, a: f64, b: f64, mu: f64 });
params!(KobolP {
    nu_plus: f64,
    nu_minus: f64,
    c_plus: f64,
    c_minus: f64,
    lambda_minus: f64,
    lambda_plus: f64,
    mu: f64,
    sigma2: f64,
});
params!(BetaP {
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
});
params!(MeroP {
    sigma2: f64,
    mu: f64,
    pos: Vec<ExpJump>,
    neg: Vec<ExpJump>,
    tail_bound: f64,
});
params!(GhP { alpha: f64, beta: f64, delta: f64, lambda: f64, mu: f64 });

fn to_map<T: Serialize>(family: &str, p: &T) -> Value {
    let mut m: Map<String, Value> = serde_json::to_value(p)
        .expect("parameter struct serializes")
        .as_object()
        .cloned()
        .unwrap_or_default();
    m.insert("family".into(), Value::String(family.into()));
    Value::Object(m)
}

impl LevyModel {
    pub fn to_json(&self) -> Value {
        match self {
            LevyModel::Bm { sigma2, mu } => to_map("bm", &BmP { sigma2: *sigma2, mu: *mu }),
            LevyModel::Merton { sigma2, mu, lambda, m, s } => to_map(
                "merton",
                &MertonP { sigma2: *sigma2, mu: *mu, lambda: *lambda, m: *m, s: *s },
            ),
            LevyModel::Hejd { sigma2, mu, pos, neg } => to_map(
                "hejd",
                &HejdP { sigma2: *sigma2, mu: *mu, pos: pos.clone(), neg: neg.clone() },
            ),
            LevyModel::VarianceGamma { c, alpha, beta, mu } => to_map(
                "vg",
                &VgP { c: *c, alpha: *alpha, beta: *beta, mu: *mu },
            ),
            LevyModel::Nts { delta, nu, alpha, beta, mu } => to_map(
                "nts",
                &NtsP { delta: *delta, nu: *nu, alpha: *alpha, beta: *beta, mu: *mu },
            ),
            LevyModel::Meixner { delta, a, b, mu } => to_map(
                "meixner",
                &MeixnerP { delta: *delta, a: *a, b: *b, mu: *mu },
            ),
            LevyModel::Kobol {
                nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, mu, sigma2,
            } => to_map(
                "kobol",
                &KobolP {
                    nu_plus: *nu_plus,
                    nu_minus: *nu_minus,
                    c_plus: *c_plus,
                    c_minus: *c_minus,
                    lambda_minus: *lambda_minus,
                    lambda_plus: *lambda_plus,
                    mu: *mu,
                    sigma2: *sigma2,
                },
            ),
            LevyModel::Beta {
                sigma2, mu, c1, alpha1, beta1, gamma1, c2, alpha2, beta2, gamma2,
            } => to_map(
                "beta",
                &BetaP {
                    sigma2: *sigma2,
                    mu: *mu,
                    c1: *c1,
                    alpha1: *alpha1,
                    beta1: *beta1,
                    gamma1: *gamma1,
                    c2: *c2,
                    alpha2: *alpha2,
                    beta2: *beta2,
                    gamma2: *gamma2,
                },
            ),
            LevyModel::Meromorphic { sigma2, mu, pos, neg, tail_bound } => to_map(
                "meromorphic",
                &MeroP {
                    sigma2: *sigma2,
                    mu: *mu,
                    pos: pos.clone(),
                    neg: neg.clone(),
                    tail_bound: *tail_bound,
                },
            ),
            LevyModel::GenHyperbolic { alpha, beta, delta, lambda, mu } => to_map(
                "gen_hyperbolic",
                &GhP { alpha: *alpha, beta: *beta, delta: *delta, lambda: *lambda, mu: *mu },
            ),
            LevyModel::Esscher { inner, alpha } => json!({
                "family": "esscher",
                "alpha": alpha,
                "inner": inner.to_json(),
            }),
            LevyModel::Mixture { components } => json!({
                "family": "mixture",
                "components": components
                    .iter()
                    .map(|(w, m)| json!({"weight": w, "model": m.to_json()}))
                    .collect::<Vec<_>>(),
            }),
            LevyModel::Subordinated { y, z } => json!({
                "family": "subordinated",
                "y": y.to_json(),
                "z": serde_json::to_value(z).expect("subordinator serializes"),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("model must be a JSON object")?;
        let family = obj
            .get("family")
            .and_then(Value::as_str)
            .ok_or("missing string field `family`")?
            .to_string();
        let mut rest = obj.clone();
        rest.remove("family");
        let rest = Value::Object(rest);
        let err = |e: serde_json::Error| format!("family `{family}`: {e}");
        match family.as_str() {
            "bm" => {
                let p: BmP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Bm { sigma2: p.sigma2, mu: p.mu })
            }
            "merton" => {
                let p: MertonP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Merton {
                    sigma2: p.sigma2,
                    mu: p.mu,
                    lambda: p.lambda,
                    m: p.m,
                    s: p.s,
                })
            }
            "hejd" => {
                let p: HejdP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Hejd { sigma2: p.sigma2, mu: p.mu, pos: p.pos, neg: p.neg })
            }
            "vg" => {
                let p: VgP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::VarianceGamma { c: p.c, alpha: p.alpha, beta: p.beta, mu: p.mu })
            }
            "nts" => {
                let p: NtsP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Nts {
                    delta: p.delta,
                    nu: p.nu,
                    alpha: p.alpha,
                    beta: p.beta,
                    mu: p.mu,
                })
            }
            "meixner" => {
                let p: MeixnerP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Meixner { delta: p.delta, a: p.a, b: p.b, mu: p.mu })
            }
            "kobol" => {
                let p: KobolP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Kobol {
                    nu_plus: p.nu_plus,
                    nu_minus: p.nu_minus,
                    c_plus: p.c_plus,
                    c_minus: p.c_minus,
                    lambda_minus: p.lambda_minus,
                    lambda_plus: p.lambda_plus,
                    mu: p.mu,
                    sigma2: p.sigma2,
                })
            }
            "beta" => {
                let p: BetaP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Beta {
                    sigma2: p.sigma2,
                    mu: p.mu,
                    c1: p.c1,
                    alpha1: p.alpha1,
                    beta1: p.beta1,
                    gamma1: p.gamma1,
                    c2: p.c2,
                    alpha2: p.alpha2,
                    beta2: p.beta2,
                    gamma2: p.gamma2,
                })
            }
            "meromorphic" => {
                let p: MeroP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::Meromorphic {
                    sigma2: p.sigma2,
                    mu: p.mu,
                    pos: p.pos,
                    neg: p.neg,
                    tail_bound: p.tail_bound,
                })
            }
            "gen_hyperbolic" => {
                let p: GhP = serde_json::from_value(rest).map_err(err)?;
                Ok(LevyModel::GenHyperbolic {
                    alpha: p.alpha,
                    beta: p.beta,
                    delta: p.delta,
                    lambda: p.lambda,
                    mu: p.mu,
                })
            }
            "esscher" => {
                let alpha = rest
                    .get("alpha")
                    .and_then(Value::as_f64)
                    .ok_or("esscher: missing numeric `alpha`")?;
                let inner = rest.get("inner").ok_or("esscher: missing `inner`")?;
                if rest.as_object().map(|o| o.len()) != Some(2) {
                    return Err("esscher: unknown fields present".into());
                }
                Ok(LevyModel::Esscher { inner: Box::new(LevyModel::from_json(inner)?), alpha })
            }
            "mixture" => {
                let comps = rest
                    .get("components")
                    .and_then(Value::as_array)
                    .ok_or("mixture: missing array `components`")?;
                if rest.as_object().map(|o| o.len()) != Some(1) {
                    return Err("mixture: unknown fields present".into());
                }
                let mut components = Vec::new();
                for c in comps {
                    let w = c
                        .get("weight")
                        .and_then(Value::as_f64)
                        .ok_or("mixture component: missing numeric `weight`")?;
                    let m = c.get("model").ok_or("mixture component: missing `model`")?;
                    components.push((w, LevyModel::from_json(m)?));
                }
                Ok(LevyModel::Mixture { components })
            }
            "subordinated" => {
                let y = rest.get("y").ok_or("subordinated: missing `y`")?;
                let zv = rest.get("z").ok_or("subordinated: missing `z`")?;
                if rest.as_object().map(|o| o.len()) != Some(2) {
                    return Err("subordinated: unknown fields present".into());
                }
                // `z` is either a plain catalog model or a serialized
                // SubordinatorModel variant
                let z = if zv.get("family").is_some() {
                    SubordinatorModel::Model(Box::new(LevyModel::from_json(zv)?))
                } else {
                    serde_json::from_value(zv.clone()).map_err(|e| format!("z: {e}"))?
                };
                Ok(LevyModel::Subordinated { y: Box::new(LevyModel::from_json(y)?), z })
            }
            other => Err(format!("unknown model family `{other}`")),
        }
    }
}

impl Serialize for LevyModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LevyModel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        LevyModel::from_json(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_unknown_field_rejection() {
        let m: LevyModel = serde_json::from_str(
            r#"{"family":"nts","delta":1.0,"nu":1.0,"alpha":2.0,"beta":0.5,"mu":0.1}"#,
        )
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        let back: LevyModel = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);

        let bad = serde_json::from_str::<LevyModel>(
            r#"{"family":"nts","delta":1.0,"nu":1.0,"alpha":2.0,"beta":0.5,"mu":0.1,"extra":3}"#,
        );
        assert!(bad.is_err());
        let unknown = serde_json::from_str::<LevyModel>(r#"{"family":"heston","v0":0.04}"#);
        assert!(unknown.is_err());
    }

    #[test]
    fn nested_composite_round_trip() {
        let m = LevyModel::Esscher {
            inner: Box::new(LevyModel::Kobol {
                nu_plus: 0.5,
                nu_minus: 0.5,
                c_plus: 1.0,
                c_minus: 1.0,
                lambda_minus: 0.0,
                lambda_plus: 4.0,
                mu: 0.0,
                sigma2: 0.0,
            }),
            alpha: 1.0,
        };
        let s = serde_json::to_string(&m).unwrap();
        let back: LevyModel = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);
    }
}
