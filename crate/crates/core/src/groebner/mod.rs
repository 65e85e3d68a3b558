//! Gröbner bases, ideal membership, saturation, intersection, and a
//! degree-by-degree linear-algebra oracle for homogeneous ideals.

mod buchberger;
mod ideal;
mod slice;

pub use buchberger::{buchberger, is_groebner_basis, normal_form_by, s_polynomial, GroebnerBasis};
pub use ideal::{intersect, saturate_by_variable, saturate_by_variables, Ideal, IdealGb};
pub use slice::{graded_slice, hilbert_function_from_slices, GradedSlice, SliceBlock};
