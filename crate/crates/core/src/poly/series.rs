use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rat;

/// Truncated power series Σ c_k t^k for k < order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    #[serde(with = "rat_vec")]
    coeffs: Vec<Rat>,
}

mod rat_vec {
    use crate::arith::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse::<Rat>().map_err(serde::de::Error::custom))
            .collect()
    }
}

impl Series {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_integers()?.iter().map(|c| c.to_i64()).collect()
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn scale(&self, q: &Rat) -> Series {
        Series::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Coefficient list joined by commas, as printed by the CLI.
    pub fn coeff_string(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Sparse human form such as `1+2t^4+t^6`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            let unit = a == Rat::from_integer(1.into());
            match k {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&a.to_string());
                    }
                    out.push('t');
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl std::ops::Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}
