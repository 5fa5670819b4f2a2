//! The lattice side of the construction: exchange triangles, the subgroup
//! N they span, canonical coset representatives, indices, and the maps
//! α and β built from the exponential map.
//!
//! Run with: `cargo run --example index_and_quotient`

use friezeforge::category::index;
use friezeforge::config::ConfigFile;
use friezeforge::ktheory::{exchange_triangles, theta_bar};
use friezeforge::polygon::Arc;

fn main() -> friezeforge::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/octagon.json");
    let ctx = ConfigFile::from_path(std::path::Path::new(path))?.context()?;
    let basis = ctx.basis();
    let tri = ctx.triangulation();

    println!("Exchange triangles of the arcs of S = T \\ R:");
    for s in ctx.s_arcs() {
        let (first, second) = exchange_triangles(tri, s)?;
        println!("  {first}    and    {second}");
        println!("    θ̄([S̄_{s}]) = {}", basis.render(&theta_bar(basis, tri, s)?));
    }

    let n = ctx.subgroup();
    println!("\nN has echelon basis:");
    for row in n.reduced_basis() {
        println!("  {}", basis.render(row));
    }
    println!("quotient free rank: {}", n.quotient_free_rank());

    println!("\nIndices and α (ε applied to the reduced index):");
    for (i, j) in [(2, 5), (2, 4), (2, 6), (4, 6), (3, 8)] {
        let c = Arc::new(8, i, j);
        let ind = index(basis, tri, &c)?;
        let reduced = n.reduce(&ind);
        println!(
            "  ind({c}) = {:<18} ≡ {:<12} (mod N)   α({c}) = {}",
            basis.render(&ind),
            basis.render(reduced.residue()),
            ctx.alpha(&c)?
        );
    }

    println!("\nβ on the simples of R:");
    for r in ctx.rigid().arcs() {
        let e = ctx.rbasis().simple(r)?;
        println!("  β([S_{r}]) = {}", ctx.beta(&e));
    }
    Ok(())
}
