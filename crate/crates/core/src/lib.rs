//! Exact combinatorics of simplicial complexes around polyhedral joins.
//!
//! * [`complex`]: finite abstract simplicial complexes stored by facets,
//!   with joins, deletions and facet partitions of pairs.
//! * [`shelling`]: shelling-order verification and an exhaustive,
//!   memoized backtracking search that either returns a certificate or
//!   proves that none exists.
//! * [`polyjoin`]: the polyhedral join `Z*_M(K, L)` of a family of pairs,
//!   built from its facet description and cross-checked by brute force.
//! * [`graph`]: graphs, independence complexes, the generalized
//!   lexicographic product `G[H; U]`, and well-coveredness.
//! * [`verify`]: executable statements about all of the above, a fixture
//!   corpus and seeded random campaigns.
//!
//! ```
//! use shellable::complex::SimplicialComplex;
//! use shellable::shelling::is_shellable;
//!
//! let k = SimplicialComplex::from_facets(
//!     ["a", "b", "c", "d"],
//!     [vec!["a", "b"], vec!["c", "d"]],
//! ).unwrap();
//! assert!(!is_shellable(&k).unwrap());
//! ```

pub mod complex;
pub mod error;
pub mod graph;
pub mod json;
pub mod polyjoin;
pub mod shelling;
pub mod simplex;
pub mod verify;

pub use complex::{ComplexPair, FacetPartition, SimplicialComplex, VertexTable};
pub use error::{Error, Result};
pub use graph::Graph;
pub use polyjoin::{PairFamily, ProductSimplex};
pub use shelling::{OrderConstraint, SearchOutcome, ShellingCertificate, ShellingSearch};
pub use simplex::Simplex;
