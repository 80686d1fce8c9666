//! Matroid families with their canonical witnesses.
//!
//! Every family implements [`matroid_core::Matroid`]. Witness functions are
//! pure functions of the queried set (and the value order where the
//! construction scans elements by value).

mod error;
mod flow;
mod gammoid;
mod graphic;
mod laminar;
mod line;
mod linear;
mod matching;
mod spec;
mod transversal;
mod uniform;
mod union_find;

pub use error::ZooError;
pub use gammoid::{ArcGammoidInstance, GammoidInstance};
pub use graphic::{canonical_orientation, GraphicInstance, HypergraphicInstance, HYPERGRAPHIC_VERTEX_LIMIT};
pub use laminar::LaminarInstance;
pub use line::{pre_nex, LineOrder};
pub use linear::{FramedExtension, SparseLinearInstance};
pub use matching::MatchingInstance;
pub use spec::{Family, Instance, InstanceSpec, SpecError};
pub use transversal::TransversalInstance;
pub use uniform::{PartitionMatroid, UniformMatroid};
