//! Enumeration of seclusion-maximal connected `F`-free secluded subgraphs.
//!
//! A vertex set `C` is *k-secluded* when at most `k` vertices outside `C`
//! have a neighbor in it. Among the connected sets `C` with `S ⊆ C` and
//! `C ∩ T = ∅` whose induced subgraph avoids a finite family `F` of induced
//! patterns, the *seclusion-maximal* ones are those that cannot be enlarged
//! without enlarging their neighborhood. For `F = ∅` these are exactly the
//! important separators, and there are at most `4^k` of them; for any finite
//! `F` there are still only `2^O(k)`.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`]: graphs with stable vertex ids, neighborhoods, reachability.
//! - [`subiso`]: forbidden families, induced embeddings, enrichments.
//! - [`separators`]: minimum left-restricted separators and their extremal
//!   representatives.
//! - [`enumerator`]: the branching enumeration and its post-filter.
//! - [`solvers`]: maximum-weight secluded subgraphs and deletion to
//!   scattered classes.
//! - [`oracle`]: exponential brute-force references for testing.
//! - [`io`]: text formats and the preset pattern library.
//!
//! ```
//! use secluded::{enumerate_all, filter_seclusion_maximal, EnumParams, ForbiddenFamily, Graph, VertexSet};
//!
//! // claw with center 0; keep it claw-free while cutting at most one vertex
//! let g = Graph::star(3);
//! let family = ForbiddenFamily::new(&[Graph::star(3)])?;
//! let (s, t) = (VertexSet::from([0]), VertexSet::new());
//! let (raw, _stats) = enumerate_all(EnumParams::new(&g, &s, &t, 1, &family))?;
//! let best: Vec<_> = filter_seclusion_maximal(&raw).into_iter().map(|c| c.members).collect();
//! assert_eq!(best, vec![[0, 1, 2].into(), [0, 1, 3].into(), [0, 2, 3].into()]);
//! # Ok::<(), secluded::Error>(())
//! ```

pub mod enumerator;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod separators;
pub mod solvers;
pub mod subiso;

#[cfg(doctest)]
mod book;

pub use enumerator::{
    choose_pivot, enumerate, enumerate_all, enumerate_observed, filter_seclusion_maximal, measure,
    Candidate, EnumParams, NodeView, Observer, RecursionStats, Step,
};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use separators::{analyze, ExtremalSeparators, Lambda, SeparatorAnalysis};
pub use solvers::{
    max_weight_secluded, scattered_deletion, verify_scattered, ScatteredInstance, WeightedInstance,
};
pub use subiso::{ForbiddenFamily, PatternGraph};
