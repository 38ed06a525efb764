//! A brute-force evaluator of the framed invariant on arbitrary oriented
//! diagrams, used as the oracle for identities the Hecke algebra cannot
//! express directly.
//!
//! # Diagram text format
//!
//! One crossing per line, `X <iu> <io> <ou> <oo> <sign>`: the edges entering
//! and leaving along the under strand and along the over strand, then `+` or
//! `-`. A line `loop` adds a crossingless circle. `#` starts a comment.
//! Every edge id must enter exactly one crossing end and leave exactly one.

mod builder;
mod diagram;
mod evaluate;

pub use builder::{
    closure_of_braid, closure_with_meridian, decorated_closure, evaluate_decorated, reversed_meridian_diagram, Decorated,
    DiagramBuilder, Meridian, DECORATION_MAX_STRANDS,
};
pub use diagram::{Component, Crossing, PlanarDiagram, Strand};
pub(crate) use diagram::parse_pd_lines;
pub use evaluate::{delta_power, evaluate, evaluate_with, Policy};
