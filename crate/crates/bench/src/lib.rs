//! Criterion benchmarks for the toricseq pipeline live in `benches/`.
