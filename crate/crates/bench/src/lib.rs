//! Criterion benchmarks for `specgap`; see `benches/`.
