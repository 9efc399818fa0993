//! Text formats for graphs, polynomials and reports.

pub mod edge_list;
pub mod graph6;
pub mod json;

pub use edge_list::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
