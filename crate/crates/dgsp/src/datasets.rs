//! Bundled experiment datasets, compiled into the binary.

use crate::digraph::{DiGraph, GraphSignal};
use crate::error::Result;
use crate::scalar::Real;

/// US state adjacency graph: 50 vertices in alphabetical state order, one
/// directed edge per land border running from the lower-latitude state to the
/// higher-latitude one. Alaska and Hawaii are isolated (no land borders).
pub const US_TEMPERATURE_EDGES: &str = include_str!("../data/us_temperature.edges");

/// Long-term average temperatures (°F) for the 50 states, in the same
/// alphabetical vertex order as [`US_TEMPERATURE_EDGES`].
pub const US_TEMPERATURE_SIGNAL: &str = include_str!("../data/us_temperature.signal");

/// Macaque cortical connectome surrogate: 47 regions, 505 directed unit-weight
/// connections with the bidirectionality profile of the published network.
pub const MACAQUE_EDGES: &str = include_str!("../data/macaque.edges");

pub fn us_temperature_graph<T: Real>() -> Result<DiGraph<T>> {
    DiGraph::parse_edge_list(US_TEMPERATURE_EDGES)
}

pub fn us_temperature_signal<T: Real>() -> Result<GraphSignal<T>> {
    GraphSignal::parse_signal(US_TEMPERATURE_SIGNAL, 50)
}

pub fn macaque_graph<T: Real>() -> Result<DiGraph<T>> {
    DiGraph::parse_edge_list(MACAQUE_EDGES)
}
