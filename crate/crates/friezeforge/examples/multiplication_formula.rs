//! Walk the multiplication formula ρ(r)ρ(m) = ρ(a) + ρ(b) step by step:
//! resolve a crossing with a rigid arc into its two nonsplit triangles,
//! evaluate both sides independently, and compare with the recursive
//! evaluator.
//!
//! Run with: `cargo run --example multiplication_formula`

use friezeforge::config::ConfigFile;
use friezeforge::polygon::{crosses, resolve_crossing, Arc};

fn main() -> friezeforge::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/octagon.json");
    let ctx = ConfigFile::from_path(std::path::Path::new(path))?.context()?;

    for (i, j) in [(4, 6), (3, 8), (1, 4)] {
        let m = Arc::new(8, i, j);
        let Some(r) = ctx.rigid().arcs().iter().find(|r| crosses(r, &m)).copied() else {
            println!("{m} crosses nothing in R, so ρ({m}) = α({m}) = {}\n", ctx.alpha(&m)?);
            continue;
        };
        let (a, b) = resolve_crossing(&m, &r)?;
        println!("{m} crosses {r} ∈ R, giving triangles {m} → {a} → {r} and {r} → {b} → {m}");

        let rho_r = ctx.rho_direct(&r)?;
        let rho_m = ctx.rho_direct(&m)?;
        let rho_a = ctx.rho_direct_sum(&a)?;
        let rho_b = ctx.rho_direct_sum(&b)?;
        println!("  ρ({r}) · ρ({m}) = {rho_r} · ({rho_m}) = {}", rho_r.mul(&rho_m));
        println!("  ρ({a}) + ρ({b}) = ({rho_a}) + ({rho_b}) = {}", rho_a.add(&rho_b));

        let recursive = ctx.rho_multiplicative(&m)?;
        println!(
            "  recursive evaluator: ρ({m}) = {recursive}  (matches direct: {})\n",
            recursive == rho_m
        );
    }
    Ok(())
}
