//! Hom spaces between arcs, nonvanishing of composites, minimal
//! approximations by a triangulation, and the index.
//!
//! Hom spaces here are at most one-dimensional, so a morphism between two
//! indecomposables is determined up to scalar and all that matters is
//! whether canonical maps and their composites vanish. Both questions are
//! answered by cyclic-interval "hammock" windows attached to each arc.

use crate::error::{Error, Result};
use crate::ktheory::{K0Basis, K0SplitVector};
use crate::polygon::{Arc, ArcSum, Triangulation, Vertex};

/// Closed cyclic interval `[from, to]` taken anticlockwise.
#[derive(Clone, Copy, Debug)]
pub struct CyclicInterval {
    size: u16,
    from: Vertex,
    to: Vertex,
}

impl CyclicInterval {
    pub fn new(size: u16, from: Vertex, to: Vertex) -> Self {
        CyclicInterval { size, from, to }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        let d = |x: Vertex, y: Vertex| (i64::from(x) - i64::from(y)).rem_euclid(i64::from(self.size));
        d(v, self.from) <= d(self.to, self.from)
    }
}

/// The Hom-hammock of a source arc `x = {a, b}`: an arc `y` receives a
/// nonzero map from `x` iff `y` has one endpoint in `[a, b-2]` and the
/// other in `[b, a-2]`.
#[derive(Clone, Copy, Debug)]
pub struct HomWindow {
    a: Vertex,
    b: Vertex,
    size: u16,
    first: CyclicInterval,
    second: CyclicInterval,
}

impl HomWindow {
    pub fn of(x: &Arc) -> Self {
        debug_assert!(!x.is_edge());
        let size = x.size();
        let (a, b) = x.endpoints();
        let back = |v: Vertex| (((i64::from(v) - 3).rem_euclid(i64::from(size))) + 1) as Vertex;
        HomWindow {
            a,
            b,
            size,
            first: CyclicInterval::new(size, a, back(b)),
            second: CyclicInterval::new(size, b, back(a)),
        }
    }

    /// Endpoints of the source arc, in the orientation the ranges use.
    pub fn source(&self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    /// If `Hom(x, y)` is nonzero, label the endpoints of `y` as
    /// `(a'', b'')` with `a''` in the first range and `b''` in the second.
    /// The two ranges are disjoint, so the labelling is unique.
    pub fn label(&self, y: &Arc) -> Option<(Vertex, Vertex)> {
        if y.is_edge() {
            return None;
        }
        let (c, d) = y.endpoints();
        if self.first.contains(c) && self.second.contains(d) {
            Some((c, d))
        } else if self.first.contains(d) && self.second.contains(c) {
            Some((d, c))
        } else {
            None
        }
    }

    /// The window cut down by a factorization through `y` labelled
    /// `(a'', b'')`: composites `x → y → z` are nonzero exactly for `z`
    /// with one endpoint in `[a'', b-2]` and the other in `[b'', a-2]`.
    fn shrink(&self, a2: Vertex, b2: Vertex) -> HomWindow {
        HomWindow {
            first: CyclicInterval::new(self.size, a2, self.first.to),
            second: CyclicInterval::new(self.size, b2, self.second.to),
            ..*self
        }
    }
}

/// Dimension of `Hom(x, y)`, which is `0` or `1`; edges give `0`.
pub fn hom_dim(x: &Arc, y: &Arc) -> u8 {
    if x.is_edge() || y.is_edge() {
        return 0;
    }
    u8::from(HomWindow::of(x).label(y).is_some())
}

/// Whether the composite of the canonical nonzero maps `x → y → z` is
/// nonzero. Errors if either canonical map is itself zero.
pub fn composition_nonzero(x: &Arc, y: &Arc, z: &Arc) -> Result<bool> {
    let precondition = Error::CompositionPrecondition { x: *x, y: *y, z: *z };
    if x.is_edge() || y.is_edge() || z.is_edge() {
        return Err(precondition);
    }
    let window = HomWindow::of(x);
    let Some((a2, b2)) = window.label(y) else {
        return Err(precondition);
    };
    if hom_dim(y, z) == 0 {
        return Err(precondition);
    }
    Ok(window.shrink(a2, b2).label(z).is_some())
}

/// Survivors of the factoring filter: drop every candidate for which
/// `redundant(candidate, witness)` holds for some other candidate, after
/// checking the relation is acyclic.
fn prune_factoring(
    candidates: Vec<Arc>,
    redundant: impl Fn(&Arc, &Arc) -> Result<bool>,
) -> Result<Vec<Arc>> {
    let k = candidates.len();
    let mut edges = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            if i != j && redundant(&candidates[i], &candidates[j])? {
                edges[i * k + j] = true;
            }
        }
    }
    // cycle in the redundancy relation would make the filter ill-defined
    let mut state = vec![0u8; k]; // 0 unseen, 1 on stack, 2 done
    fn dfs(v: usize, k: usize, edges: &[bool], state: &mut [u8]) -> bool {
        state[v] = 1;
        for w in 0..k {
            if edges[v * k + w] && (state[w] == 1 || (state[w] == 0 && dfs(w, k, edges, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    for v in 0..k {
        if state[v] == 0 && dfs(v, k, &edges, &mut state) {
            return Err(Error::ApproximationCycle);
        }
    }
    Ok(candidates
        .iter()
        .enumerate()
        .filter(|(i, _)| (0..k).all(|j| !edges[i * k + j]))
        .map(|(_, arc)| *arc)
        .collect())
}

/// Minimal right approximation of `c` by the triangulation: the arcs of
/// `T` mapping nonzero to `c` whose map does not factor through another
/// such arc, each with multiplicity one. For `c ∈ T` this is `{c}`; for an
/// edge it is `0`.
pub fn minimal_right_approx(tri: &Triangulation, c: &Arc) -> Result<ArcSum> {
    if c.is_edge() {
        return Ok(ArcSum::zero());
    }
    let candidates: Vec<Arc> = tri.arcs().iter().filter(|t| hom_dim(t, c) == 1).copied().collect();
    let survivors = prune_factoring(candidates, |t, via| {
        if hom_dim(t, via) == 1 {
            composition_nonzero(t, via, c)
        } else {
            Ok(false)
        }
    })?;
    Ok(ArcSum::from_arcs(survivors))
}

/// Minimal left approximation of `x` by the triangulation: dual to
/// [`minimal_right_approx`], dropping arcs reached through another one.
pub fn minimal_left_approx(tri: &Triangulation, x: &Arc) -> Result<ArcSum> {
    if x.is_edge() {
        return Ok(ArcSum::zero());
    }
    let candidates: Vec<Arc> = tri.arcs().iter().filter(|t| hom_dim(x, t) == 1).copied().collect();
    let survivors = prune_factoring(candidates, |t, via| {
        if hom_dim(via, t) == 1 {
            composition_nonzero(x, via, t)
        } else {
            Ok(false)
        }
    })?;
    Ok(ArcSum::from_arcs(survivors))
}

/// The index of `c` with respect to the triangulation, read off the
/// approximation triangle: `[right approx of c] - [left approx of Σ⁻¹c]`.
pub fn index(basis: &K0Basis, tri: &Triangulation, c: &Arc) -> Result<K0SplitVector> {
    if c.is_edge() {
        return Ok(basis.zero());
    }
    let right = minimal_right_approx(tri, c)?;
    let left = minimal_left_approx(tri, &c.suspend(-1))?;
    Ok(basis.class_of_sum(&right)?.sub(&basis.class_of_sum(&left)?))
}

/// Index of a direct sum, extended additively.
pub fn index_of_sum(basis: &K0Basis, tri: &Triangulation, sum: &ArcSum) -> Result<K0SplitVector> {
    let mut acc = basis.zero();
    for arc in sum.iter() {
        acc = acc.add(&index(basis, tri, arc)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::{all_diagonals, crosses, Triangulation};

    fn a(i: u16, j: u16) -> Arc {
        Arc::new(8, i, j)
    }

    fn octagon() -> (Triangulation, K0Basis) {
        let tri = Triangulation::from_arcs(8, [a(1, 7), a(2, 4), a(2, 5), a(2, 7), a(5, 7)]).unwrap();
        let basis = K0Basis::new(&tri);
        (tri, basis)
    }

    #[test]
    fn hom_dims() {
        assert_eq!(hom_dim(&a(2, 5), &a(2, 7)), 1);
        assert_eq!(hom_dim(&a(2, 7), &a(2, 5)), 0);
        for x in all_diagonals(5) {
            assert_eq!(hom_dim(&x, &x), 1, "identity on {x}");
        }
    }

    #[test]
    fn hom_matches_the_crossing_rule() {
        // Ext¹(x, y) = Hom(x, Σy) must equal the crossing number
        for x in all_diagonals(5) {
            for y in all_diagonals(5) {
                let ext = hom_dim(&x, &y.suspend(1));
                assert_eq!(ext == 1, crosses(&x, &y), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn composites() {
        assert!(composition_nonzero(&a(2, 4), &a(2, 5), &a(2, 6)).unwrap());
        // x → y → x with y ≠ x would force y = x, so the composite vanishes;
        // the diameters {1,5}, {3,7} have Homs both ways
        assert_eq!(hom_dim(&a(1, 5), &a(3, 7)), 1);
        assert_eq!(hom_dim(&a(3, 7), &a(1, 5)), 1);
        assert!(!composition_nonzero(&a(1, 5), &a(3, 7), &a(1, 5)).unwrap());
        // composing with the identity changes nothing
        assert!(composition_nonzero(&a(2, 5), &a(2, 5), &a(2, 7)).unwrap());
        // zero Hom spaces break the precondition
        assert!(composition_nonzero(&a(2, 7), &a(2, 5), &a(2, 4)).is_err());
        assert!(composition_nonzero(&a(2, 5), &a(2, 6), &a(2, 5)).is_err());
    }

    #[test]
    fn right_approximations() {
        let (tri, _) = octagon();
        assert_eq!(minimal_right_approx(&tri, &a(2, 6)).unwrap(), a(2, 5).into());
        assert_eq!(minimal_right_approx(&tri, &a(2, 5)).unwrap(), a(2, 5).into());
        assert_eq!(minimal_right_approx(&tri, &a(4, 6)).unwrap(), ArcSum::zero());
    }

    #[test]
    fn left_approximations() {
        let (tri, _) = octagon();
        assert_eq!(minimal_left_approx(&tri, &a(5, 7)).unwrap(), a(5, 7).into());
        assert_eq!(minimal_left_approx(&tri, &a(3, 7)).unwrap(), a(5, 7).into());
        assert_eq!(minimal_left_approx(&tri, &a(3, 6)).unwrap(), ArcSum::zero());
    }

    #[test]
    fn octagon_indices() {
        let (tri, basis) = octagon();
        let ind = |c: &Arc| basis.render(&index(&basis, &tri, c).unwrap());
        assert_eq!(ind(&a(2, 5)), "[2,5]");
        assert_eq!(ind(&a(2, 4)), "[2,4]");
        assert_eq!(ind(&a(2, 6)), "[2,5]-[5,7]");
        assert_eq!(ind(&a(4, 6)), "-[5,7]");
    }

    #[test]
    fn index_on_the_triangulation_and_its_shift() {
        let (tri, basis) = octagon();
        for t in tri.arcs() {
            assert_eq!(index(&basis, &tri, t).unwrap(), basis.class_of(t).unwrap());
            assert_eq!(
                index(&basis, &tri, &t.suspend(1)).unwrap(),
                basis.class_of(t).unwrap().neg()
            );
        }
    }
}
