//! Alliances in graphs and the domination, monopoly and diffusion parameters
//! they characterise.
//!
//! * [`graph`]: simple graphs, vertex sets, edge-list I/O, generators, powers.
//! * [`intset`]: the symbolic integer sets used as `D` and `O`.
//! * [`alliance`]: the `(D,O)`-alliance predicate and the named-parameter catalog.
//! * [`direct`]: each parameter evaluated from its own definition.
//! * [`solvers`]: exhaustive and branch-and-bound extremal search.
//! * [`harness`]: exhaustive agreement checks between [`direct`] and [`alliance`].
//! * [`cli`]: the `alliance` command-line tool.

pub mod alliance;
pub mod cli;
pub mod direct;
mod error;
pub mod graph;
pub mod harness;
pub mod intset;
pub mod solvers;

pub use error::{Error, Result};
