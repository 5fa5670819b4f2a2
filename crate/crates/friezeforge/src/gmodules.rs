//! Finite-length modules over a rigid subcategory: the functor
//! `c ↦ Hom(-, Σc)|_R`, their submodule lattices, point counts of
//! submodule Grassmannians, the integer map `π`, and kernel classes of
//! induced maps.
//!
//! Over a dissection every such module is multiplicity-free, so a module
//! is a support set together with a one-step forcing relation, and a
//! submodule is a forcing-closed subset. Euler characteristics reduce to
//! cardinalities of these finite sets.

use std::collections::BTreeMap;

use crate::category::{composition_nonzero, hom_dim};
use crate::error::{Error, Result};
use crate::ktheory::{K0flRVector, RBasis};
use crate::polygon::{crosses, Arc, ArcSum, Dissection};

/// Largest support size for which submodule enumeration is attempted.
pub const SUPPORT_BOUND: usize = 20;

/// The module `Gc` for a target arc `c`, encoded by its support inside
/// `indec R` and the forcing relation between support elements.
#[derive(Clone, Debug)]
pub struct RModule {
    target: Arc,
    support: Vec<Arc>,
    /// `forcing[k]` lists the indices forced by support element `k`:
    /// any submodule containing `k` must contain them.
    forcing: Vec<Vec<usize>>,
}

impl RModule {
    pub fn target(&self) -> &Arc {
        &self.target
    }

    /// Support arcs in canonical order; `dim Gc(r)` is 1 on the support
    /// and 0 elsewhere.
    pub fn support(&self) -> &[Arc] {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn forcing_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forcing
            .iter()
            .enumerate()
            .flat_map(|(k, out)| out.iter().map(move |&j| (k, j)))
    }

    /// Class `[Gc]` in `K_0(fl R)`.
    pub fn class(&self, rbasis: &RBasis) -> Result<K0flRVector> {
        rbasis.class_of_support(&self.support)
    }
}

/// Compute `Gc` over the rigid dissection: the support is the set of arcs
/// of `R` crossing `c`, and `r ⇒ r'` iff the structure map
/// `Gc(r) → Gc(r')` is nonzero, i.e. the composite `r' → r → Σc` of
/// canonical maps is nonzero.
pub fn g_module(rigid: &Dissection, c: &Arc) -> RModule {
    let support: Vec<Arc> = rigid.arcs().iter().filter(|r| crosses(r, c)).copied().collect();
    let sigma_c = c.suspend(1);
    let forcing = support
        .iter()
        .map(|r| {
            support
                .iter()
                .enumerate()
                .filter(|(_, r2)| {
                    *r2 != r
                        && hom_dim(r2, r) == 1
                        && composition_nonzero(r2, r, &sigma_c)
                            .expect("support arcs map nonzero to Σc")
                })
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    RModule { target: *c, support, forcing }
}

/// All submodules of a module, as forcing-closed support subsets.
#[derive(Clone, Debug)]
pub struct SubmoduleSet {
    support: Vec<Arc>,
    /// Bitmasks over the support, sorted ascending; always contains the
    /// empty set and the full support.
    masks: Vec<u32>,
}

impl SubmoduleSet {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn subsets(&self) -> impl Iterator<Item = Vec<Arc>> + '_ {
        self.masks.iter().map(move |&mask| {
            self.support
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, a)| *a)
                .collect()
        })
    }

    /// K₀-class of each submodule.
    pub fn classes(&self, rbasis: &RBasis) -> Result<Vec<K0flRVector>> {
        self.subsets().map(|s| rbasis.class_of_support(&s)).collect()
    }
}

/// Enumerate the forcing-closed subsets of the support by branching on
/// undecided elements and propagating both closure directions.
pub fn submodules(module: &RModule) -> Result<SubmoduleSet> {
    let k = module.support.len();
    if k > SUPPORT_BOUND {
        return Err(Error::SupportTooLarge { got: k, bound: SUPPORT_BOUND });
    }
    let mut forced_by = vec![Vec::new(); k]; // reverse edges
    for (i, j) in module.forcing_pairs() {
        forced_by[j].push(i);
    }
    let mut out = Vec::new();
    let mut decided_in: u32 = 0;
    let mut decided_out: u32 = 0;
    enumerate(module, &forced_by, 0, &mut decided_in, &mut decided_out, &mut out);
    out.sort_unstable();
    Ok(SubmoduleSet { support: module.support.clone(), masks: out })
}

fn enumerate(
    module: &RModule,
    forced_by: &[Vec<usize>],
    next: usize,
    decided_in: &mut u32,
    decided_out: &mut u32,
    out: &mut Vec<u32>,
) {
    let k = module.support.len();
    let mut cursor = next;
    while cursor < k && (*decided_in | *decided_out) & (1 << cursor) != 0 {
        cursor += 1;
    }
    if cursor == k {
        out.push(*decided_in);
        return;
    }
    let (save_in, save_out) = (*decided_in, *decided_out);

    // include `cursor`: pull in everything it forces, transitively
    let mut stack = vec![cursor];
    let mut ok = true;
    while let Some(v) = stack.pop() {
        if *decided_out & (1 << v) != 0 {
            ok = false;
            break;
        }
        if *decided_in & (1 << v) == 0 {
            *decided_in |= 1 << v;
            stack.extend(module.forcing[v].iter().copied());
        }
    }
    if ok {
        enumerate(module, forced_by, cursor + 1, decided_in, decided_out, out);
    }
    *decided_in = save_in;
    *decided_out = save_out;

    // exclude `cursor`: everything forcing it must stay out too
    let mut stack = vec![cursor];
    let mut ok = true;
    while let Some(v) = stack.pop() {
        if *decided_in & (1 << v) != 0 {
            ok = false;
            break;
        }
        if *decided_out & (1 << v) == 0 {
            *decided_out |= 1 << v;
            stack.extend(forced_by[v].iter().copied());
        }
    }
    if ok {
        enumerate(module, forced_by, cursor + 1, decided_in, decided_out, out);
    }
    *decided_in = save_in;
    *decided_out = save_out;
}

/// Point counts of the submodule Grassmannians, grouped by K₀-class: the
/// Euler characteristic of each `Gr_e` is the number of closed subsets of
/// class `e`.
pub fn grassmannian_counts(module: &RModule, rbasis: &RBasis) -> Result<BTreeMap<K0flRVector, u64>> {
    let subs = submodules(module)?;
    let mut counts = BTreeMap::new();
    for class in subs.classes(rbasis)? {
        *counts.entry(class).or_insert(0u64) += 1;
    }
    Ok(counts)
}

/// The integer map `π`: the total number of submodules of `Gc`.
pub fn pi(rigid: &Dissection, c: &Arc) -> Result<u64> {
    if c.is_edge() {
        return Ok(1);
    }
    Ok(submodules(&g_module(rigid, c))?.len() as u64)
}

/// `π` on a direct sum: the product over the summands.
pub fn pi_sum(rigid: &Dissection, sum: &ArcSum) -> Result<u64> {
    let mut acc = 1u64;
    for arc in sum.iter() {
        acc *= pi(rigid, arc)?;
    }
    Ok(acc)
}

/// Class of the kernel of `Gμ` for the canonical map `μ: m → a`: the sum
/// of `[S_r]` over support elements of `Gm` killed by every component,
/// i.e. those `r` whose composite `r → Σm → Σa_i` vanishes for all `i`.
pub fn kernel_class(rigid: &Dissection, rbasis: &RBasis, m: &Arc, a: &ArcSum) -> Result<K0flRVector> {
    for ai in a.iter() {
        if hom_dim(m, ai) != 1 {
            return Err(Error::CompositionPrecondition { x: *m, y: *ai, z: *ai });
        }
    }
    let module = g_module(rigid, m);
    let sigma_m = m.suspend(1);
    let mut kernel = Vec::new();
    for r in module.support() {
        let mut killed = true;
        for ai in a.iter() {
            if composition_nonzero(r, &sigma_m, &ai.suspend(1))? {
                killed = false;
                break;
            }
        }
        if killed {
            kernel.push(*r);
        }
    }
    rbasis.class_of_support(&kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory::RBasis;

    fn a(i: u16, j: u16) -> Arc {
        Arc::new(8, i, j)
    }

    fn octagon_r() -> (Dissection, RBasis) {
        let rigid = Dissection::new(8, [a(2, 5), a(2, 7)]).unwrap();
        let rbasis = RBasis::new(&rigid);
        (rigid, rbasis)
    }

    #[test]
    fn modules_over_the_octagon_dissection() {
        let (rigid, _) = octagon_r();
        assert!(g_module(&rigid, &a(2, 6)).is_zero());
        assert!(g_module(&rigid, &a(2, 5)).is_zero());
        assert!(g_module(&rigid, &a(2, 4)).is_zero());

        let m = g_module(&rigid, &a(4, 6));
        assert_eq!(m.support(), &[a(2, 5)]);
        assert_eq!(m.forcing_pairs().count(), 0);

        let m = g_module(&rigid, &a(3, 8));
        assert_eq!(m.support(), &[a(2, 5), a(2, 7)]);
        let pairs: Vec<_> = m.forcing_pairs().collect();
        // {2,7} forces {2,5}
        assert_eq!(pairs, vec![(1, 0)]);
    }

    #[test]
    fn submodule_enumeration() {
        let (rigid, _) = octagon_r();
        let zero = g_module(&rigid, &a(2, 5));
        assert_eq!(submodules(&zero).unwrap().masks(), &[0]);

        let simple = g_module(&rigid, &a(4, 6));
        assert_eq!(submodules(&simple).unwrap().masks(), &[0b0, 0b1]);

        let chain = g_module(&rigid, &a(3, 8));
        // {2,7} alone is not closed under forcing
        assert_eq!(submodules(&chain).unwrap().masks(), &[0b00, 0b01, 0b11]);
    }

    #[test]
    fn grassmannian_point_counts() {
        let (rigid, rbasis) = octagon_r();
        let counts = grassmannian_counts(&g_module(&rigid, &a(2, 5)), &rbasis).unwrap();
        assert_eq!(counts.len(), 1);
        assert_eq!(counts[&rbasis.zero()], 1);

        let counts = grassmannian_counts(&g_module(&rigid, &a(4, 6)), &rbasis).unwrap();
        assert_eq!(counts[&rbasis.zero()], 1);
        assert_eq!(counts[&rbasis.simple(&a(2, 5)).unwrap()], 1);
        assert_eq!(counts.len(), 2);

        let counts = grassmannian_counts(&g_module(&rigid, &a(3, 8)), &rbasis).unwrap();
        let both = rbasis.simple(&a(2, 5)).unwrap().add(&rbasis.simple(&a(2, 7)).unwrap());
        assert_eq!(counts[&both], 1);
        assert_eq!(counts.len(), 3);
    }

    #[test]
    fn pi_values() {
        let (rigid, _) = octagon_r();
        assert_eq!(pi(&rigid, &a(2, 7)).unwrap(), 1);
        assert_eq!(pi(&rigid, &a(4, 6)).unwrap(), 2);
        assert_eq!(pi(&rigid, &a(3, 8)).unwrap(), 3);
        // exponential over sums
        let sum = ArcSum::from_arcs([a(4, 6), a(3, 8)]);
        assert_eq!(pi_sum(&rigid, &sum).unwrap(), 6);
        assert_eq!(pi_sum(&rigid, &ArcSum::zero()).unwrap(), 1);
    }

    #[test]
    fn oversized_supports_are_refused() {
        // a fan of 21 arcs in the 28-gon all crossing one long diagonal
        let size = 28;
        let rigid = Dissection::new(size, (4..=24).map(|j| Arc::new(size, 2, j))).unwrap();
        let module = g_module(&rigid, &Arc::new(size, 3, 27));
        assert_eq!(module.support().len(), 21);
        assert!(matches!(
            submodules(&module),
            Err(crate::error::Error::SupportTooLarge { got: 21, bound: 20 })
        ));
    }

    #[test]
    fn kernel_classes() {
        let (rigid, rbasis) = octagon_r();
        // Gm = 0 forces a zero kernel
        let k = kernel_class(&rigid, &rbasis, &a(2, 6), &ArcSum::from_arcs([a(2, 7)])).unwrap();
        assert!(k.is_zero());

        // triangle {4,6} → {2,4} → {2,5}: G of the middle is zero, so the
        // kernel is all of G({4,6})
        let k = kernel_class(&rigid, &rbasis, &a(4, 6), &ArcSum::from_arcs([a(2, 4)])).unwrap();
        assert_eq!(k, rbasis.simple(&a(2, 5)).unwrap());

        // triangle r → b → m with G(r) = 0 has zero kernel: r = {2,5},
        // b = {2,6}, m = {4,6}
        let k = kernel_class(&rigid, &rbasis, &a(2, 5), &ArcSum::from_arcs([a(2, 6)])).unwrap();
        assert!(k.is_zero());
    }
}
