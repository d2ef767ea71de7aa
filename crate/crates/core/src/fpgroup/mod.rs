//! Finitely presented groups over a fixed free group: words, the braid
//! action, relator constructors, abelianization, coset enumeration,
//! subgroup presentations, Tietze simplification and finite-quotient
//! searches.

pub mod coset;
pub mod homs;
pub mod presentation;
pub mod rschreier;
pub mod snf;
pub mod tietze;
pub mod word;

pub use coset::{
    coset_enumerate, cyclic_kernel_table, CosetError, CosetTable, Strategy, TcOptions,
};
pub use homs::{count_homomorphisms, HomSearch};
pub use presentation::{center_reduce, Presentation, Provenance, Relator};
pub use rschreier::reidemeister_schreier;
pub use snf::{abelian_invariants, smith_normal_form, AbelianInvariants, IntMat, Snf};
pub use tietze::{tietze_simplify, TietzeBudget};
pub use word::{alpha, braid_act, braid_relator, rho, BraidGen, BraidWord, Word};
