//! The polygon model: arcs of a regular polygon, crossings, dissections,
//! triangulations, suspension and the distinguished triangles they induce.
//!
//! An arc joining non-adjacent vertices of the `(n+3)`-gon stands for an
//! indecomposable object; an edge of the polygon stands for the zero object.
//! Vertices are residues mod `n+3`, displayed with representatives
//! `1..=n+3` and listed anticlockwise.

use std::fmt;

use crate::error::{Error, Result};

/// Polygon vertex label, `1..=size`.
pub type Vertex = u16;

/// Reduce an integer to a vertex label in `1..=size`.
fn norm(size: u16, v: i64) -> Vertex {
    ((v - 1).rem_euclid(i64::from(size)) + 1) as Vertex
}

/// True iff `v` lies strictly inside the anticlockwise open interval
/// `(a, b)`, i.e. `v` is one of `a+1, ..., b-1` mod `size`.
pub fn in_open_interval(size: u16, v: Vertex, a: Vertex, b: Vertex) -> bool {
    let d = |x: Vertex, y: Vertex| (i64::from(x) - i64::from(y)).rem_euclid(i64::from(size));
    let dv = d(v, a);
    dv > 0 && dv < d(b, a)
}

/// An unordered pair of distinct vertices of the polygon.
///
/// Stored in canonical order (smaller label first). Arcs whose endpoints
/// are adjacent are edges of the polygon and denote the zero object.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    size: u16,
    a: Vertex,
    b: Vertex,
}

impl Arc {
    /// Build the arc `{i, j}` of the polygon with `size` vertices.
    ///
    /// Labels are taken mod `size`; panics if the endpoints coincide.
    pub fn new(size: u16, i: impl Into<i64>, j: impl Into<i64>) -> Self {
        assert!(size >= 3, "polygon needs at least 3 vertices");
        let (i, j) = (norm(size, i.into()), norm(size, j.into()));
        assert_ne!(i, j, "arc endpoints must be distinct");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        Arc { size, a, b }
    }

    pub fn size(&self) -> u16 {
        self.size
    }

    /// Endpoint labels in canonical order.
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    /// True iff the endpoints are adjacent, i.e. the arc is a polygon edge
    /// (the zero object).
    pub fn is_edge(&self) -> bool {
        self.b - self.a == 1 || self.b - self.a == self.size - 1
    }

    pub fn has_endpoint(&self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        other.has_endpoint(self.a) || other.has_endpoint(self.b)
    }

    /// Apply the suspension functor `k` times: rotate both endpoints `k`
    /// vertices clockwise, `Σ^k {i,j} = {i-k, j-k}`. Negative `k` rotates
    /// the other way; `suspend(-1)` is `Σ^{-1}`. The AR translation is
    /// `τ = Σ`.
    pub fn suspend(&self, k: i64) -> Arc {
        Arc::new(self.size, i64::from(self.a) - k, i64::from(self.b) - k)
    }

    /// Position of the arc in the fundamental strip of the AR quiver.
    ///
    /// Coordinates `(x, y)` satisfy `0 <= x < size`, `0 <= y < size-3`,
    /// `x ≡ y (mod 2)`; `τ` moves an arc from `(x, y)` to `(x-2, y)` and
    /// the strip wraps by the glide `(x+size, y) ~ (x, size-4-y)`.
    pub fn ar_position(&self) -> (usize, usize) {
        let n = usize::from(self.size) - 3;
        let (i, j) = (usize::from(self.a), usize::from(self.b));
        let mut y = j - i - 2;
        let mut x = i + j - 4;
        if x >= usize::from(self.size) {
            x -= usize::from(self.size);
            y = n - 1 - y;
        }
        (x, y)
    }
}

/// The arc sitting at position `(x, y)` of the AR-quiver strip.
pub fn arc_at(size: u16, x: usize, y: usize) -> Arc {
    debug_assert_eq!(x % 2, y % 2, "strip positions have matching parity");
    let p = (x as i64 - y as i64) / 2 + 1;
    let q = (x as i64 + y as i64) / 2 + 3;
    Arc::new(size, p, q)
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}@{}", self.a, self.b, self.size)
    }
}

/// True iff the arcs cross in the interior of the polygon.
///
/// Equivalent to `dim Ext^1` between the corresponding indecomposables
/// being one. Arcs sharing an endpoint do not cross, and edges never
/// cross anything.
pub fn crosses(x: &Arc, y: &Arc) -> bool {
    debug_assert_eq!(x.size, y.size, "arcs must live on the same polygon");
    if x.is_edge() || y.is_edge() || x.shares_endpoint(y) {
        return false;
    }
    in_open_interval(x.size, y.a, x.a, x.b) != in_open_interval(x.size, y.b, x.a, x.b)
}

/// A formal direct sum of indecomposables: a finite multiset of non-edge
/// arcs. Edges are collapsed to zero on construction; the empty sum is the
/// zero object.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArcSum {
    terms: Vec<Arc>,
}

impl ArcSum {
    pub fn zero() -> Self {
        ArcSum { terms: Vec::new() }
    }

    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Self {
        let mut terms: Vec<Arc> = arcs.into_iter().filter(|a| !a.is_edge()).collect();
        terms.sort();
        ArcSum { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Arc] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc> {
        self.terms.iter()
    }

    pub fn suspend(&self, k: i64) -> ArcSum {
        ArcSum::from_arcs(self.terms.iter().map(|a| a.suspend(k)))
    }
}

impl From<Arc> for ArcSum {
    fn from(a: Arc) -> Self {
        ArcSum::from_arcs([a])
    }
}

impl fmt::Display for ArcSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Which distinguished triangle a [`TriangleSpec`] records.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleKind {
    Ar,
    Exchange,
    Resolution,
    Shift,
}

/// A distinguished triangle `x → y → z → Σx`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleSpec {
    pub x: ArcSum,
    pub y: ArcSum,
    pub z: ArcSum,
    pub kind: TriangleKind,
}

impl fmt::Display for TriangleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} → {}", self.x, self.y, self.z)
    }
}

/// The Auslander-Reiten triangle ending in the non-edge arc `x = {i,j}`:
/// `{i-1,j-1} → {i-1,j} ⊕ {i,j-1} → {i,j}`, with edge summands dropped.
pub fn ar_triangle(x: &Arc) -> TriangleSpec {
    debug_assert!(!x.is_edge(), "AR triangles end in nonzero objects");
    let (i, j) = x.endpoints();
    let tau = x.suspend(1);
    let middle = ArcSum::from_arcs([
        Arc::new(x.size, i64::from(i) - 1, i64::from(j)),
        Arc::new(x.size, i64::from(i), i64::from(j) - 1),
    ]);
    TriangleSpec {
        x: tau.into(),
        y: middle,
        z: (*x).into(),
        kind: TriangleKind::Ar,
    }
}

/// Resolve a crossing of `x` and `y` into the middle terms of the two
/// nonsplit triangles linking them.
///
/// Writing `x = {p,r}` and `y = {q,s}` in cyclic order `p < q < r < s`,
/// the returned pair is `({q,r} ⊕ {s,p}, {p,q} ⊕ {r,s})`: the first is
/// the middle of `x → · → y → Σx`, the second the middle of
/// `y → · → x → Σy`. Edge summands are dropped.
pub fn resolve_crossing(x: &Arc, y: &Arc) -> Result<(ArcSum, ArcSum)> {
    if !crosses(x, y) {
        return Err(Error::NotCrossing { x: *x, y: *y });
    }
    let (p, r) = x.endpoints();
    let (q, s) = if in_open_interval(x.size, y.a, p, r) {
        (y.a, y.b)
    } else {
        (y.b, y.a)
    };
    let middle_xy = ArcSum::from_arcs([Arc::new(x.size, q, r), Arc::new(x.size, s, p)]);
    let middle_yx = ArcSum::from_arcs([Arc::new(x.size, p, q), Arc::new(x.size, r, s)]);
    Ok((middle_xy, middle_yx))
}

/// A set of pairwise non-crossing diagonals of the polygon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dissection {
    size: u16,
    arcs: Vec<Arc>,
}

impl Dissection {
    pub fn new(size: u16, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort();
        for (k, x) in arcs.iter().enumerate() {
            if x.size() != size {
                return Err(Error::Invalid(format!("arc {x} not on a {size}-gon")));
            }
            if x.is_edge() {
                return Err(Error::Invalid(format!("{x} is an edge, not a diagonal")));
            }
            for y in &arcs[k + 1..] {
                if x == y {
                    return Err(Error::Invalid(format!("duplicate arc {x}")));
                }
                if crosses(x, y) {
                    return Err(Error::Invalid(format!("{x} crosses {y}")));
                }
            }
        }
        Ok(Dissection { size, arcs })
    }

    pub fn size(&self) -> u16 {
        self.size
    }

    /// Arcs in canonical order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }
}

/// A maximal dissection: exactly `n = size - 3` pairwise non-crossing
/// diagonals, modelling a cluster tilting subcategory.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangulation {
    diss: Dissection,
}

impl Triangulation {
    pub fn new(diss: Dissection) -> Result<Self> {
        let want = usize::from(diss.size()) - 3;
        if diss.len() != want {
            return Err(Error::Invalid(format!(
                "a triangulation of the {}-gon has {} diagonals, got {}",
                diss.size(),
                want,
                diss.len()
            )));
        }
        Ok(Triangulation { diss })
    }

    pub fn from_arcs(size: u16, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        Triangulation::new(Dissection::new(size, arcs)?)
    }

    pub fn size(&self) -> u16 {
        self.diss.size()
    }

    pub fn arcs(&self) -> &[Arc] {
        self.diss.arcs()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.diss.contains(arc)
    }

    pub fn as_dissection(&self) -> &Dissection {
        &self.diss
    }

    /// The apex of the triangle of this triangulation lying on the open
    /// side `(a, b)` of the arc `{a, b}`: the unique vertex of that side
    /// joined to both endpoints by arcs of the triangulation or edges.
    fn apex(&self, a: Vertex, b: Vertex) -> Vertex {
        let size = self.size();
        let connected = |u: Vertex, v: Vertex| {
            let arc = Arc::new(size, u, v);
            arc.is_edge() || self.contains(&arc)
        };
        let mut v = a;
        loop {
            v = norm(size, i64::from(v) + 1);
            debug_assert_ne!(v, b, "no apex found; not a triangulation");
            if connected(a, v) && connected(v, b) {
                return v;
            }
        }
    }
}

/// Flip the arc `t` of a triangulation: replace it by the other diagonal
/// `t*` of the quadrilateral formed by the two adjacent triangles.
///
/// `t*` crosses `t` and nothing else in `T`; flipping is an involution.
pub fn flip(tri: &Triangulation, t: &Arc) -> Result<(Arc, Triangulation)> {
    if !tri.contains(t) {
        return Err(Error::NotInTriangulation { arc: *t });
    }
    let (a, b) = t.endpoints();
    let t_star = Arc::new(tri.size(), tri.apex(a, b), tri.apex(b, a));
    let arcs = tri.arcs().iter().filter(|x| *x != t).copied().chain([t_star]);
    Ok((t_star, Triangulation::from_arcs(tri.size(), arcs)?))
}

/// All non-edge arcs of the `(n+3)`-gon; there are `(n+3)n/2` of them.
pub fn all_diagonals(n: usize) -> Vec<Arc> {
    assert!(n >= 1);
    let size = (n + 3) as u16;
    let mut out = Vec::with_capacity((n + 3) * n / 2);
    for i in 1..=size {
        for j in (i + 1)..=size {
            let arc = Arc::new(size, i, j);
            if !arc.is_edge() {
                out.push(arc);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(size: u16, i: u16, j: u16) -> Arc {
        Arc::new(size, i, j)
    }

    #[test]
    fn open_interval_membership() {
        assert!(in_open_interval(8, 3, 2, 5));
        assert!(!in_open_interval(8, 5, 2, 5));
        assert!(in_open_interval(8, 8, 5, 2));
        assert!(!in_open_interval(8, 2, 2, 5));
        assert!(in_open_interval(8, 1, 5, 2));
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(&a(8, 2, 6), &a(8, 5, 7)));
        assert!(!crosses(&a(8, 2, 6), &a(8, 2, 5)));
        // both endpoints of {2,6} inside (1,7): nested, no crossing
        assert!(!crosses(&a(8, 1, 7), &a(8, 2, 6)));
        // edges never cross
        assert!(!crosses(&a(8, 1, 2), &a(8, 8, 3)));
    }

    #[test]
    fn suspension_rotates_clockwise() {
        assert_eq!(a(8, 2, 6).suspend(1), a(8, 1, 5));
        assert_eq!(a(8, 5, 7).suspend(-1), a(8, 6, 8));
        assert_eq!(a(8, 1, 3).suspend(8), a(8, 1, 3));
    }

    #[test]
    fn ar_triangles_drop_edge_summands() {
        let t = ar_triangle(&a(8, 2, 4));
        assert_eq!(t.x, a(8, 1, 3).into());
        assert_eq!(t.y, a(8, 1, 4).into());
        assert_eq!(t.z, a(8, 2, 4).into());

        let t = ar_triangle(&a(8, 2, 6));
        assert_eq!(t.x, a(8, 1, 5).into());
        assert_eq!(t.y, ArcSum::from_arcs([a(8, 1, 6), a(8, 2, 5)]));
        assert_eq!(t.z, a(8, 2, 6).into());

        let t = ar_triangle(&a(8, 1, 3));
        assert_eq!(t.x, a(8, 2, 8).into());
        assert_eq!(t.y, a(8, 3, 8).into());
        assert_eq!(t.z, a(8, 1, 3).into());
    }

    #[test]
    fn resolving_a_crossing() {
        let (xy, yx) = resolve_crossing(&a(8, 5, 7), &a(8, 2, 6)).unwrap();
        assert_eq!(xy, a(8, 2, 5).into());
        assert_eq!(yx, a(8, 2, 7).into());

        let (xy, yx) = resolve_crossing(&a(8, 2, 4), &a(8, 3, 5)).unwrap();
        assert_eq!(xy, a(8, 2, 5).into());
        assert_eq!(yx, ArcSum::zero());

        assert!(resolve_crossing(&a(8, 2, 4), &a(8, 2, 5)).is_err());
    }

    fn octagon_t() -> Triangulation {
        Triangulation::from_arcs(
            8,
            [a(8, 1, 7), a(8, 2, 4), a(8, 2, 5), a(8, 2, 7), a(8, 5, 7)],
        )
        .unwrap()
    }

    #[test]
    fn flips_in_the_octagon() {
        let t = octagon_t();
        let (s, t1) = flip(&t, &a(8, 2, 5)).unwrap();
        assert_eq!(s, a(8, 4, 7));
        assert!(crosses(&s, &a(8, 2, 5)));
        assert!(t.arcs().iter().filter(|x| **x != a(8, 2, 5)).all(|x| !crosses(&s, x)));
        // involution
        let (back, t2) = flip(&t1, &s).unwrap();
        assert_eq!(back, a(8, 2, 5));
        assert_eq!(t2, t);

        assert_eq!(flip(&t, &a(8, 5, 7)).unwrap().0, a(8, 2, 6));
        assert_eq!(flip(&t, &a(8, 1, 7)).unwrap().0, a(8, 2, 8));
        assert!(flip(&t, &a(8, 3, 6)).is_err());
    }

    #[test]
    fn diagonal_counts() {
        assert_eq!(all_diagonals(1).len(), 2);
        assert_eq!(all_diagonals(2).len(), 5);
        assert_eq!(all_diagonals(5).len(), 20);
    }

    #[test]
    fn dissection_rejects_crossings_and_edges() {
        assert!(Dissection::new(8, [a(8, 2, 5), a(8, 3, 6)]).is_err());
        assert!(Dissection::new(8, [a(8, 1, 2)]).is_err());
        assert!(Dissection::new(8, [a(8, 2, 5), a(8, 2, 5)]).is_err());
    }

    #[test]
    fn ar_positions_round_trip() {
        // spot checks against the quiver layout of the octagon
        assert_eq!(a(8, 1, 3).ar_position(), (0, 0));
        assert_eq!(a(8, 2, 7).ar_position(), (5, 3));
        assert_eq!(a(8, 4, 8).ar_position(), (0, 2));
        assert_eq!(a(8, 6, 8).ar_position(), (2, 4));
        for arc in all_diagonals(5) {
            let (x, y) = arc.ar_position();
            assert_eq!(arc_at(8, x, y), arc);
        }
    }

    prop_compose! {
        fn arb_arc()(size in 5u16..=12)(
            size in Just(size),
            i in 1u16..=size.saturating_sub(0),
            d in 1i64..,
        ) -> Arc {
            let d = 1 + (d.rem_euclid(i64::from(size) - 1));
            Arc::new(size, i, i64::from(i) + d)
        }
    }

    proptest! {
        #[test]
        fn suspend_round_trips(arc in arb_arc(), k in -20i64..20) {
            prop_assert_eq!(arc.suspend(k).suspend(-k), arc);
        }

        #[test]
        fn crossing_is_symmetric_and_shift_invariant(x in arb_arc(), d in 1i64.., k in -8i64..8) {
            let size = x.size();
            let y = {
                let shift = d.rem_euclid(i64::from(size));
                let (a, b) = x.endpoints();
                let p = norm(size, i64::from(a) + shift);
                let q = norm(size, i64::from(b) + shift + 1);
                if p == q { return Ok(()); }
                Arc::new(size, p, q)
            };
            prop_assert_eq!(crosses(&x, &y), crosses(&y, &x));
            prop_assert_eq!(crosses(&x, &y), crosses(&x.suspend(k), &y.suspend(k)));
            prop_assert!(!crosses(&x, &x));
        }
    }
}
