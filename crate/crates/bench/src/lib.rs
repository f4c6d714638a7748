//! Benchmarks for the visibility index, rotation search and interval DP.
//!
//! Run with `cargo bench -p compat-bench`.
