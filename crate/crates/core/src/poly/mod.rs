//! Polynomials in t, rational functions, truncated series and polynomial matrices.

mod cyclo_poly;
mod int_poly;
mod poly_matrix;
mod ratfun;
mod series;

pub use cyclo_poly::CycloPoly;
pub use int_poly::IntPoly;
pub use poly_matrix::{cramer_all, cramer_replace_det, det_bareiss, det_cofactor, eval_at_one, polymat_det, PolyMatrix};
pub use ratfun::{ratfun_normalize, series_expand, RatFun};
pub use series::Series;

/// Default truncation order for series views.
pub const DEFAULT_ORDER: usize = 64;
