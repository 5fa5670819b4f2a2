//! Check the bundled Conway-Coxeter frieze against the determinant rule,
//! then corrupt one entry and watch the checker locate the damage.
//!
//! Run with: `cargo run --example conway_coxeter`

use friezeforge::frieze::{DiamondRule, FriezeGrid};

fn main() -> friezeforge::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/a7_frieze.txt");
    let text = std::fs::read_to_string(path)?;
    let grid = FriezeGrid::parse(&text)?;

    println!("{} rows on a strip of width {}:\n", grid.row_count(), grid.width());
    print!("{}", grid.render());

    let report = grid.check(DiamondRule::Strict);
    println!(
        "\nβη − αδ = 1 on all {} diamonds (boundary rows and glide wraps included): {}",
        report.diamonds_checked,
        if report.pass() { "PASS" } else { "FAIL" }
    );

    let perturbed = text.replacen(" 7 ", " 8 ", 1);
    let bad = FriezeGrid::parse(&perturbed)?;
    let report = bad.check(DiamondRule::Strict);
    println!("\nafter corrupting one entry, {} diamonds fail:", report.diamond_failures.len());
    for f in &report.diamond_failures {
        println!(
            "  diamond at x={}, y={}: β={} η={} α={:?} δ={:?} gives {}",
            f.x, f.y, f.beta, f.eta, f.alpha, f.delta, f.det
        );
    }
    Ok(())
}
