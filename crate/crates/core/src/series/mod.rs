//! Poincaré series engines: the Cramer system, the Molien oracle, closed forms,
//! Tchebychev polynomials and the restriction/induction proportionality.

mod closed;
mod determinant;
mod molien;
mod proportion;
mod tcheb;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{RatFun, Series};

pub use closed::{
    binomial, closed_form_cartan_det, closed_form_invariants, closed_form_text, cyclic_closed_form, dihedral_closed_forms,
    dicyclic_closed_form, exponent_closed_form, exponent_product, exponent_product_raw, ExponentSet,
};
pub use determinant::{cramer_system, denominator_by_characters, series_by_determinant, series_with_orientation, Orientation, ORIENTATION};
pub use molien::{molien_bundle, molien_series, MolienResult};
pub use proportion::{proportionality_check, root_lengths, trivial_agree, Proportionality, VertexMatch};
pub use tcheb::{a_poly, c_poly, chebyshev_at_joukowski, tcheb, tcheb_identity_suite, Tcheb, TchebKind};

/// Which engine produced a bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Determinant,
    Molien,
    ClosedForm,
    ExponentProduct,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Determinant => "determinant",
            Method::Molien => "molien",
            Method::ClosedForm => "closed_form",
            Method::ExponentProduct => "exponent_product",
        }
    }
}

/// One rational function per module label; label 0 is the trivial module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesBundle {
    pub labels: Vec<String>,
    pub series: Vec<RatFun>,
    pub method: Method,
}

impl SeriesBundle {
    pub fn expand(&self, order: usize) -> Result<Vec<Series>> {
        self.series.iter().map(|f| f.expand(order)).collect()
    }

    pub fn trivial(&self) -> &RatFun {
        &self.series[0]
    }

    pub fn get(&self, label: &str) -> Option<&RatFun> {
        self.labels.iter().position(|l| l == label).map(|i| &self.series[i])
    }
}
