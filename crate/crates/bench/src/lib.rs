//! Criterion benchmarks for `eulersum-core`; see `benches/`.
