//! Verify the generalized frieze property X(τx)·X(x) − X(middle) ∈ {0, 1}
//! over every AR triangle, for both the Laurent-valued ρ and the integer
//! map π, then render the π values as a grid and check its diamonds.
//!
//! Run with: `cargo run --example generalized_frieze`

use friezeforge::config::ConfigFile;
use friezeforge::engine::FriezeMap;
use friezeforge::frieze::DiamondRule;

fn main() -> friezeforge::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/octagon.json");
    let ctx = ConfigFile::from_path(std::path::Path::new(path))?.context()?;

    for map in [FriezeMap::Rho, FriezeMap::Pi] {
        let report = ctx.check_generalized_frieze(map)?;
        let zeros = report
            .records
            .iter()
            .filter(|r| r.difference.is_zero())
            .count();
        println!(
            "{map:?}: {} AR triangles checked, all differences in {{0,1}}: {} ({} zeros, {} ones)",
            report.records.len(),
            report.pass(),
            zeros,
            report.records.len() - zeros
        );
        for record in report.records.iter().take(3) {
            println!(
                "  {}  gives  {} − {} = {}",
                record.triangle, record.lhs, record.rhs, record.difference
            );
        }
    }

    println!("\nπ values on the AR strip:");
    let grid = ctx.pi_grid()?;
    print!("{}", grid.render());
    let check = grid.check(DiamondRule::Generalized);
    println!(
        "generalized diamond rule over {} diamonds: {}",
        check.diamonds_checked,
        if check.pass() { "PASS" } else { "FAIL" }
    );
    Ok(())
}
