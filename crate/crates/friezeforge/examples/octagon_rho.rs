//! Build the octagon configuration by hand and evaluate the Laurent-valued
//! map ρ on every diagonal, laid out on the AR-quiver strip.
//!
//! Run with: `cargo run --example octagon_rho`

use friezeforge::engine::CCContext;
use friezeforge::laurent::{EpsilonAssignment, Monomial};
use friezeforge::polygon::{arc_at, Arc, Dissection, Triangulation};

fn main() -> friezeforge::Result<()> {
    let arc = |i, j| Arc::new(8, i, j);

    // A triangulation T of the octagon, a rigid sub-dissection R, and an
    // exponential map sending the quotient basis to u, v, z.
    let tri = Triangulation::from_arcs(
        8,
        [arc(1, 7), arc(2, 4), arc(2, 5), arc(2, 7), arc(5, 7)],
    )?;
    let rigid = Dissection::new(8, [arc(2, 5), arc(2, 7)])?;
    let eps = EpsilonAssignment::new([
        (arc(1, 7), Monomial::var("u")),
        (arc(2, 4), Monomial::var("v")),
        (arc(5, 7), Monomial::var("z")),
        (arc(2, 5), Monomial::one()),
        (arc(2, 7), Monomial::one()),
    ]);
    let ctx = CCContext::new(tri, rigid, eps)?;

    println!("ρ on the 20 diagonals of the octagon (AR-quiver layout):\n");
    let size = usize::from(ctx.polygon_size());
    for y in (0..ctx.n()).rev() {
        let mut cells = Vec::new();
        let mut x = y % 2;
        while x <= size {
            let (xx, yy) = if x == size { (0, ctx.n() - 1 - y) } else { (x, y) };
            let a = arc_at(ctx.polygon_size(), xx, yy);
            cells.push(format!("{}", ctx.rho_direct(&a)?));
            x += 2;
        }
        let indent = if y % 2 == 1 { "        " } else { "" };
        println!("{indent}{}", cells.join("      "));
    }

    println!("\nSelected values:");
    for (i, j) in [(4, 6), (2, 5), (3, 8), (1, 5)] {
        let a = arc(i, j);
        println!("  ρ({a}) = {}", ctx.rho_direct(&a)?);
    }
    Ok(())
}
