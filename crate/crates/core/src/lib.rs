//! List coloring and choosability with a bounded color palette.
//!
//! The crate is organised in four layers:
//!
//! * [`graph`] — simple undirected graphs with stable string identifiers,
//!   named-family builders (cycles, thetas, grids, ...), cores, block
//!   decompositions and structural classifiers.
//! * [`listcolor`] — exact and polynomial list-coloring algorithms over a
//!   palette `{1..k}`.
//! * [`choosability`] — exhaustive `[f,k]`-choosability deciders with
//!   symmetry breaking, criticality checks and the polynomial recognizers
//!   for 2- and `[2,3]`-choosability.
//! * [`gadgets`] — the reduction constructions (variable gadgets, path
//!   transmitters, the double-diamond gadget, hypergraph 2-colorability
//!   instances, ...) together with their role labels and canonical list
//!   assignments.
//!
//! Everything is deterministic: vertex order is the declared order, all
//! searches break ties canonically, and witnesses are reproducible
//! bit-for-bit.

pub mod choosability;
pub mod gadgets;
pub mod graph;
pub mod listcolor;

pub use graph::{Graph, GridGraph, NamedGraph};
pub use listcolor::{Coloring, ListAssignment, SizeFunction};
