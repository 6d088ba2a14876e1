//! Benchmark-only crate. `cargo bench -p proca-bench` times field evaluation,
//! stress assembly, tetrad construction, the numeric eigensolve, RK4 flow
//! lines and a small eigenvalue map.
