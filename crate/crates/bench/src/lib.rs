//! Criterion benchmarks for qcpn-core; see `benches/`.
