//! Exact spectral tools for cubic graphs.

pub mod canon;
pub mod covers;
pub mod decomp;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod spectra;
pub mod sturm;
pub mod transforms;

pub use canon::{are_isomorphic, canonical_form, canonical_graph6, CanonicalForm};
pub use families::{FamilyTag, SporadicEntry};
pub use graph::{Bipartition, Graph, GraphError, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use poly::{BigRat, IntPoly, PolyError};
pub use spectra::{certify_gap, char_poly, GapCertificate, ObstructionWitness};
pub use sturm::{count_roots_open, SturmChain};
pub use transforms::Geometry;
