//! Parsing and rendering: element text, JSON documents and Graphviz.

pub mod dot;
pub mod element;
pub mod json;

pub use dot::emit_dot;
pub use element::{format_element, parse_element};
pub use json::{parse_graph, parse_spline};
