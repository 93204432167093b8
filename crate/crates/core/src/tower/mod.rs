//! Localisation and globalisation functors, homomorphism spaces,
//! semisimplicity certificates and the tower axiom checks.

mod axioms;
mod functors;
mod hom;
mod semisimple;

pub use axioms::{check_all, check_axiom, Axiom, AxiomReport, AXIOM_GUARD};
pub use functors::{globalise, intertwiners, isomorphism, localise};
pub use hom::{hom_space, hom_space_direct, HomSpace};
pub use semisimple::{semisimplicity_certificate, simple_labels, GramValue, SemisimplicityCertificate, SimpleLabel};
