//! Formal `ℤ[q,t]`-linear combinations of basis keys.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::key::{BasisKey, KeyJson};
use crate::monoid::MonoidId;
use crate::poly::{Monomial, QtPoly};

/// A finite linear combination with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, QtPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: QtPoly) -> Self {
        let mut l = Self::zero();
        l.add(k, &c);
        l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> QtPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, QtPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Adds `c·k`.
    pub fn add(&mut self, k: K, c: &QtPoly) {
        self.add_scaled(k, c, Monomial::ONE, 1);
    }

    /// Adds `sign·m·c·k`.
    pub fn add_scaled(&mut self, k: K, c: &QtPoly, m: Monomial, sign: i64) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_scaled(c, m, sign);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.mul_monomial(m, sign));
            }
        }
    }

    /// Adds `sign·m·k`.
    pub fn add_monomial(&mut self, k: K, m: Monomial, sign: i64) {
        if sign == 0 {
            return;
        }
        match self.terms.entry(k) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_term(m, sign);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(QtPoly::term(m, sign));
            }
        }
    }

    /// Adds `c·other`.
    pub fn add_comb(&mut self, other: &LinComb<K>, c: &QtPoly) {
        for (k, v) in other.iter() {
            let prod = v * c;
            self.add(k.clone(), &prod);
        }
    }

    pub fn scale(&self, c: &QtPoly) -> Self {
        let mut out = Self::zero();
        out.add_comb(self, c);
        out
    }

    /// `c1·a + c2·b`.
    pub fn combine(a: &Self, b: &Self, c1: &QtPoly, c2: &QtPoly) -> Self {
        let mut out = a.scale(c1);
        out.add_comb(b, c2);
        out
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QtPoly) -> QtPoly) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.add(k.clone(), &f(v));
        }
        out
    }

    /// Specializes `q` and/or `t` to 1 in every coefficient.
    pub fn specialize(&self, q_to_one: bool, t_to_one: bool) -> Self {
        if !q_to_one && !t_to_one {
            return self.clone();
        }
        self.map_coeffs(|c| c.specialize(q_to_one, t_to_one))
    }
}

impl<K: Ord + Clone> FromIterator<(K, QtPoly)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, QtPoly)>>(iter: I) -> Self {
        let mut l = Self::zero();
        for (k, c) in iter {
            l.add(k, &c);
        }
        l
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

/// `Σ coeff(k)·f(k)`; `f` returning `None` means it is undefined on `k`.
pub fn linear_extend<K, K2, F>(x: &LinComb<K>, mut f: F) -> Result<LinComb<K2>>
where
    K: Ord + Clone + fmt::Debug,
    K2: Ord + Clone,
    F: FnMut(&K) -> Option<LinComb<K2>>,
{
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        let image = f(k).ok_or_else(|| Error::Unsupported(format!("map undefined on key {k:?}")))?;
        out.add_comb(&image, c);
    }
    Ok(out)
}

/// An element of `g[G]` for a monoid `g` of the catalog.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    monoid: MonoidId,
    graph: Arc<Graph>,
    terms: LinComb<BasisKey>,
}

impl Element {
    pub fn new(monoid: MonoidId, graph: Arc<Graph>, terms: LinComb<BasisKey>) -> Self {
        debug_assert!(terms.keys().all(|k| k.kind() == monoid.key_kind()));
        Element { monoid, graph, terms }
    }

    pub fn zero(monoid: MonoidId, graph: Arc<Graph>) -> Self {
        Element::new(monoid, graph, LinComb::zero())
    }

    pub fn basis_element(monoid: MonoidId, graph: Arc<Graph>, key: BasisKey) -> Self {
        Element::new(monoid, graph, LinComb::single(key, QtPoly::one()))
    }

    pub fn monoid(&self) -> MonoidId {
        self.monoid
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn terms(&self) -> &LinComb<BasisKey> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<BasisKey> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, k: &BasisKey) -> QtPoly {
        self.terms.coeff(k)
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.monoid != other.monoid {
            return Err(Error::Mismatch(format!("monoids {} and {}", self.monoid, other.monoid)));
        }
        if self.graph != other.graph {
            return Err(Error::Mismatch("elements live on different graphs".into()));
        }
        Ok(())
    }

    /// `c1·a + c2·b`.
    pub fn combine(a: &Element, b: &Element, c1: &QtPoly, c2: &QtPoly) -> Result<Element> {
        a.check_same(b)?;
        Ok(Element::new(a.monoid, a.graph.clone(), LinComb::combine(&a.terms, &b.terms, c1, c2)))
    }

    pub fn scale(&self, c: &QtPoly) -> Element {
        Element::new(self.monoid, self.graph.clone(), self.terms.scale(c))
    }

    /// Terms sorted by the literal of their key.
    pub fn sorted_terms(&self) -> Vec<(String, &BasisKey, &QtPoly)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (k.to_literal(&self.graph), k, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            monoid: self.monoid.name().into(),
            graph: self.graph.compact(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(_, k, c)| TermJson {
                    key: KeyJson::new(k, &self.graph),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// Parses and validates an element from its JSON form.
    pub fn from_json(j: &ElementJson) -> Result<Element> {
        let monoid: MonoidId = j.monoid.parse()?;
        let graph = Arc::new(Graph::parse_compact(&j.graph)?);
        let mut terms = LinComb::zero();
        for t in &j.terms {
            let key = t.key.to_key(&graph)?;
            if key.kind() != monoid.key_kind() {
                return Err(Error::InvalidKey(format!("{} key in a {} element", key.kind(), monoid)));
            }
            crate::hopf::validate_key(monoid, &graph, &key)?;
            if t.coeff.is_zero() {
                return Err(Error::InvalidKey("zero coefficient stored".into()));
            }
            terms.add(key, &t.coeff);
        }
        Ok(Element::new(monoid, graph, terms))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lit, _, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "[{lit}]")?;
            } else if c.len() == 1 {
                write!(f, "{c}·[{lit}]")?;
            } else {
                write!(f, "({c})·[{lit}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}, {:?}, {})", self.monoid, self.graph, self)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub key: KeyJson,
    pub coeff: QtPoly,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub monoid: String,
    pub graph: String,
    pub terms: Vec<TermJson>,
}

/// An element of `g[G_S] ⊗ g[G_T]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    monoid: MonoidId,
    left: Arc<Graph>,
    right: Arc<Graph>,
    terms: LinComb<(BasisKey, BasisKey)>,
}

impl TensorElement {
    pub fn new(monoid: MonoidId, left: Arc<Graph>, right: Arc<Graph>, terms: LinComb<(BasisKey, BasisKey)>) -> Self {
        TensorElement {
            monoid,
            left,
            right,
            terms,
        }
    }

    pub fn monoid(&self) -> MonoidId {
        self.monoid
    }

    pub fn left_graph(&self) -> &Arc<Graph> {
        &self.left
    }

    pub fn right_graph(&self) -> &Arc<Graph> {
        &self.right
    }

    pub fn terms(&self) -> &LinComb<(BasisKey, BasisKey)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, left: &BasisKey, right: &BasisKey) -> QtPoly {
        self.terms.coeff(&(left.clone(), right.clone()))
    }

    pub fn sorted_terms(&self) -> Vec<(String, String, &QtPoly)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|((a, b), c)| (a.to_literal(&self.left), b.to_literal(&self.right), c))
            .collect();
        v.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "monoid": self.monoid.name(),
            "left_graph": self.left.compact(),
            "right_graph": self.right.compact(),
            "terms": self.terms.iter().map(|((a, b), c)| serde_json::json!({
                "left": KeyJson::new(a, &self.left),
                "right": KeyJson::new(b, &self.right),
                "coeff": c,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, b, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "[{a}]⊗[{b}]")?;
            } else {
                write!(f, "({c})·[{a}]⊗[{b}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({}, {})", self.monoid, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn ab() -> BasisKey {
        BasisKey::LinearOrder(vec![0, 1])
    }
    fn ba() -> BasisKey {
        BasisKey::LinearOrder(vec![1, 0])
    }

    #[test]
    fn combine_examples() {
        let g = Arc::new(fixtures::complete(2));
        let a = Element::basis_element(MonoidId::L, g.clone(), ab());
        let z = Element::combine(&a, &a, &QtPoly::one(), &QtPoly::constant(-1)).unwrap();
        assert!(z.is_zero());

        let b = Element::basis_element(MonoidId::L, g.clone(), ba());
        let s = Element::combine(&a, &b, &QtPoly::one(), &QtPoly::q()).unwrap();
        assert_eq!(s.terms().len(), 2);
        assert_eq!(s.coeff(&ba()), QtPoly::q());
        assert_eq!(s.to_string(), "[a<b] + q·[b<a]");

        assert!(a.scale(&QtPoly::zero()).is_zero());

        let other = Element::basis_element(MonoidId::Sigma, g, BasisKey::SetComposition(vec![]));
        assert!(Element::combine(&a, &other, &QtPoly::one(), &QtPoly::one()).is_err());
    }

    #[test]
    fn linear_extend_examples() {
        let zero: LinComb<BasisKey> = LinComb::zero();
        let id = |k: &BasisKey| Some(LinComb::single(k.clone(), QtPoly::one()));
        assert!(linear_extend(&zero, id).unwrap().is_zero());

        let x = LinComb::single(ab(), QtPoly::one());
        assert_eq!(linear_extend(&x, id).unwrap(), x);

        let mut y = LinComb::zero();
        y.add(ab(), &QtPoly::q());
        y.add(ba(), &QtPoly::t());
        let m = BasisKey::Unit;
        let image = linear_extend(&y, |_| Some(LinComb::single(m.clone(), QtPoly::one()))).unwrap();
        assert_eq!(image.coeff(&m), QtPoly::q() + QtPoly::t());

        let undefined = linear_extend(&y, |k: &BasisKey| (k == &ab()).then(|| LinComb::<BasisKey>::single(m.clone(), QtPoly::one())));
        assert!(undefined.is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Arc::new(fixtures::path3());
        let mut terms = LinComb::zero();
        terms.add(BasisKey::LinearOrder(vec![2, 1, 0]), &QtPoly::monomial(2, 1, -1));
        terms.add(BasisKey::LinearOrder(vec![0, 1, 2]), &QtPoly::from_terms([(0, 0, 3), (1, 0, 1)]));
        let e = Element::new(MonoidId::L, g, terms);
        let j = e.to_json();
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"monoid":"L","graph":"a,b,c|a-b,b-c","terms":[{"key":{"kind":"LinearOrder","literal":"a<b<c"},"coeff":[[0,0,3],[1,0,1]]},{"key":{"kind":"LinearOrder","literal":"c<b<a"},"coeff":[[2,1,-1]]}]}"#
        );
        let back = Element::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn json_rejects_invalid_keys() {
        let j = ElementJson {
            monoid: "AO".into(),
            graph: "a,b,c|a-b,b-c,a-c".into(),
            terms: vec![TermJson {
                key: KeyJson {
                    kind: "AcyclicOrientation".into(),
                    literal: "a>b,b>c,c>a".into(),
                },
                coeff: QtPoly::one(),
            }],
        };
        assert!(Element::from_json(&j).is_err());
    }

    fn arb_comb() -> impl Strategy<Value = LinComb<u8>> {
        prop::collection::vec((0u8..5, 0u32..3, 0u32..3, -3i64..=3), 0..8)
            .prop_map(|v| v.into_iter().map(|(k, q, t, c)| (k, QtPoly::monomial(q, t, c))).collect())
    }

    proptest! {
        #[test]
        fn normalization_and_linearity(a in arb_comb(), b in arb_comb()) {
            prop_assert!(a.iter().all(|(_, c)| !c.is_zero()));
            let s = LinComb::combine(&a, &b, &QtPoly::one(), &QtPoly::one());
            let d = LinComb::combine(&s, &b, &QtPoly::one(), &QtPoly::constant(-1));
            prop_assert_eq!(d, a.clone());
            let id = linear_extend(&a, |k| Some(LinComb::single(*k, QtPoly::one()))).unwrap();
            prop_assert_eq!(id, a);
        }
    }
}
