//! Modules over the rigid subcategory: supports, forcing relations,
//! submodule lattices, Grassmannian point counts, and the integer map π.
//!
//! Run with: `cargo run --example submodule_lattices`

use friezeforge::config::ConfigFile;
use friezeforge::gmodules::{g_module, grassmannian_counts, pi, submodules};
use friezeforge::polygon::Arc;

fn main() -> friezeforge::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/octagon.json");
    let ctx = ConfigFile::from_path(std::path::Path::new(path))?.context()?;
    let rigid = ctx.rigid();
    let rbasis = ctx.rbasis();

    for (i, j) in [(2, 6), (4, 6), (3, 8), (1, 4)] {
        let c = Arc::new(8, i, j);
        let module = g_module(rigid, &c);
        println!("G{c}:");
        if module.is_zero() {
            println!("  the zero module (no arc of R crosses {c}); π({c}) = {}\n", pi(rigid, &c)?);
            continue;
        }
        let support: Vec<String> = module.support().iter().map(|r| r.to_string()).collect();
        println!("  support {{{}}}", support.join(", "));
        for (from, to) in module.forcing_pairs() {
            println!("  forcing: {} ⇒ {}", module.support()[from], module.support()[to]);
        }
        let subs = submodules(&module)?;
        println!("  {} submodules:", subs.len());
        for subset in subs.subsets() {
            let names: Vec<String> = subset.iter().map(|r| format!("S_{r}")).collect();
            println!("    {{{}}}", names.join(", "));
        }
        println!("  Grassmannian point counts by class:");
        for (class, count) in grassmannian_counts(&module, rbasis)? {
            println!("    χ(Gr_{{{}}}) = {count}", rbasis.render(&class));
        }
        println!("  π({c}) = {}\n", pi(rigid, &c)?);
    }
    Ok(())
}
