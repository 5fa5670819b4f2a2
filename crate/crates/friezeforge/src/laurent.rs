//! Exact multivariate Laurent polynomial arithmetic over the integers,
//! and exponential maps from the quotient group into the Laurent ring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;

use crate::error::{Error, Result};
use crate::ktheory::{CosetRep, K0Basis, K0SplitVector, SubgroupN};
use crate::polygon::Arc;

/// A Laurent monomial: finitely many variables with integer (possibly
/// negative) exponents. The empty monomial is `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<String, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: impl Into<String>) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(name.into(), 1);
        Monomial { exps }
    }

    pub fn from_exps(exps: impl IntoIterator<Item = (String, i64)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in exps {
            if e != 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        m.retain(|_, e| *e != 0);
        Monomial { exps: m }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &BTreeMap<String, i64> {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let slot = exps.entry(v.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                exps.remove(v);
            }
        }
        Monomial { exps }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|(v, e)| (v.clone(), e * k)).collect() }
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Parse strings like `"1"`, `"u"`, `"v*z^-1"`, `"x1^2*y"`.
    pub fn parse(input: &str) -> Result<Monomial> {
        let bad = |reason: &str| Error::MonomialParse { input: input.to_string(), reason: reason.to_string() };
        let s = input.trim();
        if s.is_empty() {
            return Err(bad("empty string"));
        }
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut exps: BTreeMap<String, i64> = BTreeMap::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp.trim().parse().map_err(|_| bad("exponent is not an integer"))?;
                    (name.trim(), exp)
                }
                None => (factor, 1),
            };
            if name.is_empty()
                || !name.chars().next().unwrap().is_ascii_alphabetic()
                || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(bad("variable names start with a letter"));
            }
            let slot = exps.entry(name.to_string()).or_insert(0);
            *slot += exp;
            if *slot == 0 {
                exps.remove(name);
            }
        }
        Ok(Monomial { exps })
    }
}

/// Render a monomial whose exponents are all nonnegative; single-letter
/// variables are juxtaposed (`uv`, `u^2z`), longer names joined by `*`.
fn render_positive(m: &Monomial) -> String {
    debug_assert!(m.exps.values().all(|&e| e > 0));
    let plain = m.exps.keys().all(|v| v.len() == 1);
    let mut out = String::new();
    for (v, &e) in &m.exps {
        if !out.is_empty() && !plain {
            out.push('*');
        }
        out.push_str(v);
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let rendered: Vec<String> = self
            .exps
            .iter()
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", rendered.join("*"))
    }
}

/// An integer-coefficient Laurent polynomial in canonical form: no zero
/// coefficients, terms ordered by monomial. Equality is structural.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn var(name: impl Into<String>) -> Self {
        LaurentPoly::from_monomial(Monomial::var(name))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The monomial if the polynomial is a single term with coefficient 1.
    pub fn as_unit_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if c.is_one() {
                return Some(m);
            }
        }
        None
    }

    fn add_term(&mut self, m: &Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(&m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> LaurentPoly {
        self.mul(&LaurentPoly::constant(c))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    /// Exact division by a single-term unit (`±1` times a monomial).
    pub fn div_unit(&self, unit: &LaurentPoly) -> Result<LaurentPoly> {
        if unit.terms.len() != 1 {
            return Err(Error::NonUnitDivisor(unit.to_string()));
        }
        let (m, c) = unit.terms.iter().next().unwrap();
        if !c.is_one() && *c != -BigInt::one() {
            return Err(Error::NonUnitDivisor(unit.to_string()));
        }
        let quot = self.mul_monomial(&m.inv());
        Ok(if c.is_one() { quot } else { quot.neg() })
    }

    /// Serialize as the canonical sorted term list
    /// `[{"coeff": "...", "exps": {"v": e, ...}}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "exps": m.exps.iter().map(|(v, e)| (v.clone(), serde_json::json!(e))).collect::<serde_json::Map<_, _>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LaurentPoly> {
        let arr = value.as_array().ok_or_else(|| serde_json::Error::custom("expected an array of terms"))?;
        let mut p = LaurentPoly::zero();
        for term in arr {
            let coeff = term
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| serde_json::Error::custom("term without a string coeff"))?;
            let coeff: BigInt = coeff.parse().map_err(|_| serde_json::Error::custom("bad integer coefficient"))?;
            let exps = term
                .get("exps")
                .and_then(|e| e.as_object())
                .ok_or_else(|| serde_json::Error::custom("term without exps"))?;
            let mono = Monomial::from_exps(
                exps.iter()
                    .map(|(v, e)| {
                        e.as_i64()
                            .map(|e| (v.clone(), e))
                            .ok_or_else(|| serde_json::Error::custom("bad exponent"))
                    })
                    .collect::<std::result::Result<Vec<_>, serde_json::Error>>()?,
            );
            p.add_term(&mono, &coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    /// Fraction-style rendering with a single shared denominator holding
    /// all negative exponents: `(1+vz)/z`, `u+z`, `1/u`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut denom_exps: BTreeMap<String, i64> = BTreeMap::new();
        for m in self.terms.keys() {
            for (v, &e) in &m.exps {
                if e < 0 {
                    let slot = denom_exps.entry(v.clone()).or_insert(0);
                    *slot = (*slot).max(-e);
                }
            }
        }
        let denom = Monomial::from_exps(denom_exps);
        let numer = self.mul_monomial(&denom);
        let mut body = String::new();
        for (m, c) in &numer.terms {
            let negative = c.is_negative();
            let abs = c.abs();
            if body.is_empty() {
                if negative {
                    body.push('-');
                }
            } else {
                body.push(if negative { '-' } else { '+' });
            }
            if m.is_one() {
                body.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    body.push_str(&abs.to_string());
                }
                body.push_str(&render_positive(m));
            }
        }
        if denom.is_one() {
            write!(f, "{body}")
        } else if numer.terms.len() == 1 && !body.starts_with('-') {
            write!(f, "{body}/{}", render_positive(&denom))
        } else {
            write!(f, "({body})/{}", render_positive(&denom))
        }
    }
}

/// An exponential map out of the quotient group, given on the basis of the
/// split Grothendieck group as one monomial per triangulation arc.
///
/// The assignment is only meaningful once [`EpsilonAssignment::validate`]
/// has certified that every generator of `N` maps to `1`, so that the map
/// factors through the quotient regardless of torsion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsilonAssignment {
    assign: BTreeMap<Arc, Monomial>,
}

impl EpsilonAssignment {
    pub fn new(assign: impl IntoIterator<Item = (Arc, Monomial)>) -> Self {
        EpsilonAssignment { assign: assign.into_iter().collect() }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (&Arc, &Monomial)> {
        self.assign.iter()
    }

    pub fn monomial_for(&self, arc: &Arc) -> Option<&Monomial> {
        self.assign.get(arc)
    }

    /// Check the assignment covers the whole basis and kills every
    /// generator of `N`, i.e. genuinely defines a map on the quotient.
    pub fn validate(&self, basis: &K0Basis, subgroup: &SubgroupN) -> Result<()> {
        for arc in basis.arcs() {
            if !self.assign.contains_key(arc) {
                return Err(Error::InvalidConfig(format!("no monomial assigned to {arc}")));
            }
        }
        for (source, gen) in subgroup.generators() {
            let image = self.eval_vector(basis, gen);
            if !image.is_one() {
                return Err(Error::EpsilonNotWellDefined { arc: *source, monomial: image.to_string() });
            }
        }
        Ok(())
    }

    /// The monomial `∏ ε(t)^{x_t}`.
    pub fn eval_vector(&self, basis: &K0Basis, x: &K0SplitVector) -> Monomial {
        let mut acc = Monomial::one();
        for (arc, &c) in basis.arcs().iter().zip(x.coeffs()) {
            if c != 0 {
                acc = acc.mul(&self.assign[arc].pow(c));
            }
        }
        acc
    }

    /// Evaluate on a vector, landing in the Laurent ring.
    pub fn eval(&self, basis: &K0Basis, x: &K0SplitVector) -> LaurentPoly {
        LaurentPoly::from_monomial(self.eval_vector(basis, x))
    }

    /// Evaluate on a canonical coset representative.
    pub fn eval_coset(&self, basis: &K0Basis, x: &CosetRep) -> LaurentPoly {
        self.eval(basis, x.residue())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory::{K0Basis, SubgroupN};
    use crate::polygon::Triangulation;
    use proptest::prelude::*;

    fn v(name: &str) -> LaurentPoly {
        LaurentPoly::var(name)
    }

    #[test]
    fn ring_op_examples() {
        let z = v("z");
        let vz_inv = v("v").add(&LaurentPoly::from_monomial(Monomial::var("z").inv()));
        let product = vz_inv.mul(&z);
        assert_eq!(product, LaurentPoly::one().add(&v("v").mul(&z)));
        assert_eq!(product.to_string(), "1+vz");

        let p = v("u").add(&LaurentPoly::constant(3));
        assert_eq!(p.add(&LaurentPoly::zero()), p);
        let q = LaurentPoly::one().add(&v("v").mul(&v("z")));
        assert!(q.mul(&LaurentPoly::one()).sub(&q).is_zero());
    }

    #[test]
    fn division_by_units_only() {
        let q = LaurentPoly::one().add(&v("v").mul(&v("z")));
        assert_eq!(q.div_unit(&v("z")).unwrap().to_string(), "(1+vz)/z");
        assert!(q.div_unit(&q).is_err());
        assert!(q.div_unit(&v("z").scale(2)).is_err());
        assert_eq!(q.div_unit(&v("z").neg()).unwrap(), q.div_unit(&v("z")).unwrap().neg());
    }

    #[test]
    fn display_matches_the_fraction_style() {
        let u = v("u");
        let z = v("z");
        assert_eq!(u.add(&z).to_string(), "u+z");
        assert_eq!(u.add(&z).div_unit(&u.mul(&z)).unwrap().to_string(), "(u+z)/uz");
        assert_eq!(LaurentPoly::from_monomial(Monomial::var("u").inv()).to_string(), "1/u");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::constant(-2).mul(&u).to_string(), "-2u");
        let uv = Monomial::var("u").mul(&Monomial::var("v"));
        let big = LaurentPoly::one().add(&LaurentPoly::from_monomial(uv)).add(&v("v").mul(&z));
        assert_eq!(big.to_string(), "1+uv+vz");
    }

    #[test]
    fn monomial_parsing() {
        assert_eq!(Monomial::parse("1").unwrap(), Monomial::one());
        assert_eq!(Monomial::parse("u").unwrap(), Monomial::var("u"));
        assert_eq!(
            Monomial::parse("v*z^-1").unwrap(),
            Monomial::var("v").mul(&Monomial::var("z").inv())
        );
        assert_eq!(Monomial::parse("x1^2*y").unwrap().to_string(), "x1^2*y");
        assert!(Monomial::parse("2u").is_err());
        assert!(Monomial::parse("u^x").is_err());
        assert!(Monomial::parse("").is_err());
    }

    fn octagon_epsilon() -> (Triangulation, K0Basis, SubgroupN, EpsilonAssignment) {
        let a = |i, j| Arc::new(8, i, j);
        let tri = Triangulation::from_arcs(8, [a(1, 7), a(2, 4), a(2, 5), a(2, 7), a(5, 7)]).unwrap();
        let basis = K0Basis::new(&tri);
        let n = SubgroupN::new(&basis, &tri, &[a(1, 7), a(2, 4), a(5, 7)]).unwrap();
        let eps = EpsilonAssignment::new([
            (a(1, 7), Monomial::var("u")),
            (a(2, 4), Monomial::var("v")),
            (a(5, 7), Monomial::var("z")),
            (a(2, 5), Monomial::one()),
            (a(2, 7), Monomial::one()),
        ]);
        (tri, basis, n, eps)
    }

    #[test]
    fn epsilon_validation() {
        let (_, basis, n, eps) = octagon_epsilon();
        eps.validate(&basis, &n).unwrap();

        let a = |i, j| Arc::new(8, i, j);
        let bad = EpsilonAssignment::new([
            (a(1, 7), Monomial::var("u")),
            (a(2, 4), Monomial::var("v")),
            (a(5, 7), Monomial::var("z")),
            (a(2, 5), Monomial::var("u")),
            (a(2, 7), Monomial::one()),
        ]);
        assert!(matches!(
            bad.validate(&basis, &n),
            Err(Error::EpsilonNotWellDefined { .. })
        ));

        let trivial_n = SubgroupN::from_generators(basis.len(), vec![]);
        bad.validate(&basis, &trivial_n).unwrap();
    }

    #[test]
    fn epsilon_evaluation() {
        let (_, basis, n, eps) = octagon_epsilon();
        let a = |i, j| Arc::new(8, i, j);
        let x = basis.class_of(&a(2, 4)).unwrap().add(&basis.class_of(&a(5, 7)).unwrap());
        assert_eq!(eps.eval(&basis, &x).to_string(), "vz");
        let y = basis.class_of(&a(5, 7)).unwrap().neg();
        assert_eq!(eps.eval(&basis, &y).to_string(), "1/z");
        assert!(eps.eval(&basis, &basis.zero()).is_one());
        // exponentiality and compatibility with reduction
        let sum = eps.eval(&basis, &x.add(&y));
        assert_eq!(sum, eps.eval(&basis, &x).mul(&eps.eval(&basis, &y)));
        assert_eq!(eps.eval_coset(&basis, &n.reduce(&x)), eps.eval(&basis, &x));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let mono = proptest::collection::btree_map("[uvz]", -3i64..=3, 0..3)
            .prop_map(Monomial::from_exps);
        proptest::collection::vec((mono, -4i64..=4), 0..5).prop_map(|terms| {
            LaurentPoly::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.add(&q), q.add(&p));
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            prop_assert!(p.sub(&p).is_zero());
        }

        #[test]
        fn json_round_trip(p in arb_poly()) {
            let json = p.to_json();
            prop_assert_eq!(LaurentPoly::from_json(&json).unwrap(), p.clone());
            // canonical ordering makes re-serialization byte-identical
            let text = serde_json::to_string(&json).unwrap();
            let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(serde_json::to_string(&reparsed).unwrap(), text);
        }
    }
}
