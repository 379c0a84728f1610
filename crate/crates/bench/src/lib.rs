//! Criterion benchmarks for `schwarzian-lab`; see `benches/`.
