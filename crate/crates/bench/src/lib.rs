//! Criterion benchmarks for the exact solvers; see `benches/`.
