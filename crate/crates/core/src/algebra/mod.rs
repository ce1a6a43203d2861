//! Simple components of `QG`: descriptors, invariants and exceptionality.

mod amitsur;
mod descriptor;
mod field;
mod invariants;
mod verdict;

#[cfg(test)]
mod tests;

pub use amitsur::{
    amitsur_nz_check, amitsur_z_criteria, is_amitsur_group, is_z_group, metacyclic_shape, q_g_a_division_check,
    AmitsurReport,
};
pub use descriptor::{component_descriptor, SimpleComponentDescriptor, Twist};
pub use field::{classify_field, FieldClass, FixedFieldDescriptor};
pub use invariants::{component_invariants, ComponentInvariants};
pub use verdict::{
    amitsur_division, classify_component, classify_exceptional, component_name, schur_index_options, ExceptionalTag,
    ExceptionalVerdict,
};
