//! Standard modules, their Gram matrices, and restriction data.

mod filtration;
mod gram;
mod oracle;
mod presentation;
mod standard;
mod weight;

pub use filtration::{
    induction_projection, induction_support, restriction_bottom_weight, restriction_filtration,
    restriction_top_weights, FiltrationLayer, FiltrationReport, LayerRole, ProjectionReport,
};
pub(crate) use filtration::rotate_down;
pub use gram::{gram_determinant, gram_determinant_at, gram_matrix, GramMatrix, GRAM_SYMBOLIC_GUARD};
pub use oracle::{oracle_regular_realization, RegularRealization, ORACLE_GUARD};
pub use presentation::ModulePresentation;
pub use standard::{half_diagram_count, half_diagrams, ModuleVector, StandardModule};
pub use weight::{label_tuples, weights, Weight, WeightLattice};
