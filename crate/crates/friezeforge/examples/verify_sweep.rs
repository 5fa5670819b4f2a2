//! Enumerate every triangulation and rigid sub-dissection of small
//! polygons and run the full invariant suite over them: category sanity,
//! lattice reductions, generalized friezes, Condition F, and the
//! multiplication formula with its brute-force oracles.
//!
//! Run with: `cargo run --example verify_sweep`

use friezeforge::harness::{enumerate_configs, run_suites, Suite, DEFAULT_SEED};

fn main() {
    let enumeration = enumerate_configs(4, None, DEFAULT_SEED);
    println!(
        "enumerated {} configurations up to rank {} (seed {:#x})\n",
        enumeration.configs.len(),
        enumeration.n_max,
        enumeration.seed
    );
    let report = run_suites(&enumeration, &Suite::ALL, 2);
    print!("{}", report.render());
    std::process::exit(if report.pass() { 0 } else { 1 });
}
