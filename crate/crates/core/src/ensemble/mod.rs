//! Random simple regular graphs, edge weights and short-cycle counts.

mod cycles;
mod graph;
mod io;
mod weights;

pub use cycles::{count_cycles, count_cycles_capped, CycleCensus, DEFAULT_CYCLE_CAP};
pub use graph::{sample_regular_graph, RegularGraph, Sampler, DEFAULT_MAX_ATTEMPTS};
pub use io::{parse_edge_list, write_edge_list, EdgeListFile, GraphHeader};
pub use weights::{assign_weights, weight_moments, WeightSpec, WeightedGraph};
