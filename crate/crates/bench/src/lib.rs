//! Criterion benchmarks for the `grassclique` kernels live in `benches/`.
