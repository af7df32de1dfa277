//! Exact regularity, local cohomology and cohomological dimension for
//! finitely generated graded modules over `k[y_1..y_m][x_1..x_t]`.

pub mod error;
pub mod cech;
pub mod ext;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use module::{FreeModule, GenDegree, ModuleOrder, Presentation, VTerm, Vector};
pub use monomial::{Monomial, MultiDegree};
pub use poly::{Degree, DegreeMode, Polynomial};
pub use ring::{MonomialOrder, Regime, Ring, RingSpec};
pub use scalar::{Field, Scalar};
