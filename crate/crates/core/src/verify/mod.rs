//! Statement checks over a deterministic corpus.

pub mod ara;
pub mod checks;
pub mod corpus;
pub mod simplicial;

pub use ara::{ara_bound, monomial_cd, AraBound};
pub use checks::{verify, verify_all, verify_with, CheckResult, Context, Verdict, VerifyOptions, STATEMENTS};
pub use corpus::{corpus, Instance, Kind};
pub use simplicial::{hochster_dim, SimplicialComplex};
