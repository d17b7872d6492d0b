//! Interval and unit-interval representations of graphs built from vertex covers.
//!
//! A graph with a minimal vertex cover of size `t` on `n` vertices is the
//! intersection of at most `⌊t/2⌋ + 1` interval graphs and of at most
//! `t + ⌈log₂(n − t)⌉ − 1` unit interval graphs; bipartite graphs with sides
//! `n1 <= n2` (and `n1 >= 3`) need at most `⌈n1/2⌉` interval graphs. This crate
//! builds those representations explicitly with exact integer endpoints,
//! checks them, and compares them against brute-force boxicity and cubicity
//! on small graphs.

pub mod bounds;
pub mod boxrep;
pub mod coloring;
pub mod cover;
pub mod cub;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod recognition;
pub mod report;
pub mod survey;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph};
pub use interval::{IntervalAssignment, Kind, Representation, VerificationReport};
