//! Exact computational toolkit for arcs of `V_k(F_q)` (equivalently, linear
//! MDS codes): certification matrices bounding the largest arc containing a
//! given arc, recovery of co-secant hyperplanes, and the dual hypersurface
//! of an arc.

pub mod arcfile;
pub mod arcgeom;
pub mod certifier;
pub mod gf;
pub mod hypersurf;
pub mod matrix;
pub mod subsets;
pub mod tangentfns;

pub use arcfile::{ArcFile, ArcFileError};
pub use arcgeom::{ArcConfig, ArcError, LinearForm};
pub use certifier::{CertError, CertMatrix, MnAnalysis};
pub use gf::{Elem, GaloisField, GfError};
pub use hypersurf::{DualSurface, HyperError};
pub use matrix::{GfMatrix, LeftNullBasis, MatrixError};
pub use subsets::Subset;
