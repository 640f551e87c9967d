//! Smooth and singular components of Springer fibers over `x² = 0`.
//!
//! Components are indexed by maximal link patterns. [`tableau`] holds the
//! tableau side and the `ρ ≤ 3` smoothness test, [`orbitgraph`] the
//! degree-based description of the singular locus, and [`singdirect`]
//! the construction of its components from admissible pairs of arcs.
//!
//! ```
//! use springer_sing::{sing_direct, LinkPattern};
//!
//! let sigma: LinkPattern = "n=6 (2,3)(4,5)".parse().unwrap();
//! let report = sing_direct(&sigma).unwrap();
//! assert_eq!(report.components[0].pattern.to_string(), "n=6 (1,6)(2,5)");
//! ```

pub mod error;
pub mod linkpattern;
pub mod orbitgraph;
pub mod render;
pub mod singdirect;
pub mod tableau;

pub use error::{Error, ParseError, Result, TableauError};
pub use linkpattern::{involution_count, Arc, ArcStatistics, LinkPattern, Projection, RankMatrix};
pub use orbitgraph::{
    predecessors, successors, GeometryNumbers, OrbitGraph, Oracle, SingularLocus, DEFAULT_MAX_N,
};
pub use singdirect::{
    find_admissible_pairs, find_admissible_pairs_naive, is_admissible, sing, sing_any,
    sing_by_graph, sing_direct, AdmissiblePair, Method, SingComponent, SingReport,
};
pub use tableau::{dim_springer_fiber, TwoColumnTableau};
