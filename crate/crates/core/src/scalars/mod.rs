//! Exact scalars: `Q(i)`, Laurent polynomials, the field `Q(i)(q)` and the
//! square-root tower ring.

mod gaussian;
pub mod json;
mod laurent;
pub mod pretty;
mod ratfunc;
mod tower;

pub use gaussian::GaussianRational;
pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use tower::{
    alpha_coeff, indices_mask, mask_indices, neg_inv_qint, p_poly, qint, qint_poly, TowerElem,
    MAX_GENERATOR,
};
