//! Exact arithmetic in `ℤ[q,t]`.
//!
//! Coefficients are `i64` with checked arithmetic; an overflow panics rather
//! than wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `q^q t^t` with coefficient 1. Every structure constant of the catalog is
/// a monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    pub q: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Monomial { q, t }
    }

    pub fn swap(self) -> Self {
        Monomial { q: self.t, t: self.q }
    }

    /// Sets `q` and/or `t` to 1.
    pub fn specialize(self, q_to_one: bool, t_to_one: bool) -> Self {
        Monomial {
            q: if q_to_one { 0 } else { self.q },
            t: if t_to_one { 0 } else { self.t },
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            q: self.q + rhs.q,
            t: self.t + rhs.t,
        }
    }
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in Z[q,t] coefficient arithmetic")
}

/// An element of `ℤ[q,t]`: terms sorted by `(q-exponent, t-exponent)`, no
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QtPoly {
    terms: Vec<(Monomial, i64)>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        QtPoly::monomial(0, 0, 1)
    }

    pub fn q() -> Self {
        QtPoly::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        QtPoly::monomial(0, 1, 1)
    }

    pub fn constant(c: i64) -> Self {
        QtPoly::monomial(0, 0, c)
    }

    /// `c·q^qexp·t^texp`, or zero when `c == 0`.
    pub fn monomial(qexp: u32, texp: u32, c: i64) -> Self {
        QtPoly::term(Monomial::new(qexp, texp), c)
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        if c == 0 {
            QtPoly::zero()
        } else {
            QtPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary `(q, t, c)` triples, merging
    /// repeated exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, i64)>) -> Self {
        let mut p = QtPoly::zero();
        for (q, t, c) in terms {
            p.add_term(Monomial::new(q, t), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(Monomial::ONE, 1)]
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> i64 {
        match self.terms.binary_search_by_key(&m, |&(k, _)| k) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.binary_search_by_key(&m, |&(k, _)| k) {
            Ok(i) => {
                let v = checked(self.terms[i].1.checked_add(c));
                if v == 0 {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = v;
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }

    /// Adds `c·m·other` in place.
    pub fn add_scaled(&mut self, other: &QtPoly, m: Monomial, c: i64) {
        for &(k, v) in &other.terms {
            self.add_term(k * m, checked(v.checked_mul(c)));
        }
    }

    pub fn mul_monomial(&self, m: Monomial, c: i64) -> QtPoly {
        if c == 0 {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|&(k, v)| (k * m, checked(v.checked_mul(c)))).collect(),
        }
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> QtPoly {
        QtPoly::from_terms(self.terms.iter().map(|&(m, c)| (m.t, m.q, c)))
    }

    /// Sets `q = 1` and/or `t = 1`.
    pub fn specialize(&self, q_to_one: bool, t_to_one: bool) -> QtPoly {
        QtPoly::from_terms(self.terms.iter().map(|&(m, c)| {
            (if q_to_one { 0 } else { m.q }, if t_to_one { 0 } else { m.t }, c)
        }))
    }

    pub fn is_q_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.q == 0)
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.t == 0)
    }

    /// Exact evaluation at rational `q`, `t`.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for &(m, c) in &self.terms {
            let mut v = BigRational::from_integer(BigInt::from(c));
            v *= pow(q, m.q);
            v *= pow(t, m.t);
            acc += v;
        }
        acc
    }

    /// Evaluation at integer points, exact in arbitrary precision.
    pub fn eval_int(&self, q: i64, t: i64) -> BigInt {
        let r = self.eval(&BigRational::from_integer(q.into()), &BigRational::from_integer(t.into()));
        r.to_integer()
    }

    /// `[[q, t, c], ..]` in canonical order.
    pub fn to_triples(&self) -> Vec<(u32, u32, i64)> {
        self.terms.iter().map(|&(m, c)| (m.q, m.t, c)).collect()
    }
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    let mut r = BigRational::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

impl From<Monomial> for QtPoly {
    fn from(m: Monomial) -> Self {
        QtPoly::term(m, 1)
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for &(m, c) in &rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &QtPoly) {
        for &(m, c) in &rhs.terms {
            self.add_term(m, checked(c.checked_neg()));
        }
    }
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut r = QtPoly::zero();
        for &(m, c) in &self.terms {
            r.add_scaled(rhs, m, c);
        }
        r
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        self.mul_monomial(Monomial::ONE, -1)
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl $tr for QtPoly {
            type Output = QtPoly;
            fn $f(self, rhs: QtPoly) -> QtPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest degree first reads naturally
        for (i, &(m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < 0;
            let abs = c.unsigned_abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut var = String::new();
            for (name, e) in [("q", m.q), ("t", m.t)] {
                match e {
                    0 => {}
                    1 => var.push_str(name),
                    e => var.push_str(&format!("{name}^{e}")),
                }
            }
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                f.write_str(&var)?;
            } else {
                write!(f, "{abs}{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoly({self})")
    }
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples: Vec<(u32, u32, i64)> = Vec::deserialize(d)?;
        let p = QtPoly::from_terms(triples.iter().copied());
        if p.to_triples() != triples {
            return Err(D::Error::custom("polynomial terms are not in canonical form"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(QtPoly::q() + QtPoly::t(), QtPoly::from_terms([(1, 0, 1), (0, 1, 1)]));
        assert_eq!(QtPoly::monomial(1, 1, 1) * QtPoly::q(), QtPoly::monomial(2, 1, 1));
        let z = QtPoly::q() - QtPoly::q();
        assert!(z.is_zero());
        assert_eq!(z.to_triples(), vec![]);
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(QtPoly::monomial(10, 0, -1).to_string(), "-q^10");
        assert!(QtPoly::monomial(0, 0, 1).is_one());
        assert_eq!(QtPoly::monomial(2, 1, -1).to_string(), "-q^2t");
        assert!(QtPoly::monomial(3, 3, 0).is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(QtPoly::monomial(2, 1, 1).eval(&r(1), &r(1)), r(1));
        assert_eq!((QtPoly::q() + QtPoly::t()).eval(&r(2), &r(3)), r(5));
        assert_eq!(QtPoly::monomial(10, 0, -1).eval(&r(1), &r(1)), r(-1));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(QtPoly::monomial(2, 0, 4).eval(&half, &r(7)), r(1));
    }

    #[test]
    fn display_and_json() {
        let p = QtPoly::from_terms([(0, 0, 3), (2, 1, -2), (1, 0, 1)]);
        assert_eq!(p.to_string(), "-2q^2t + q + 3");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[0,0,3],[1,0,1],[2,1,-2]]");
        let back: QtPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<QtPoly>("[[1,0,1],[0,0,3]]").is_err());
        assert!(serde_json::from_str::<QtPoly>("[[1,0,0]]").is_err());
        assert_eq!(serde_json::to_string(&QtPoly::zero()).unwrap(), "[]");
    }

    #[test]
    fn specialization_and_swap() {
        let p = QtPoly::from_terms([(2, 1, 1), (1, 2, -1), (0, 0, 5)]);
        assert_eq!(p.swap_qt(), QtPoly::from_terms([(1, 2, 1), (2, 1, -1), (0, 0, 5)]));
        assert_eq!(p.specialize(false, true), QtPoly::from_terms([(2, 0, 1), (1, 0, -1), (0, 0, 5)]));
        assert_eq!(p.specialize(true, true), QtPoly::constant(5));
        assert!(!p.is_t_free());
        assert!(p.specialize(false, true).is_t_free());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_a_hard_failure() {
        let big = QtPoly::constant(i64::MAX);
        let _ = &big + &QtPoly::one();
    }

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..6).prop_map(QtPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &QtPoly::one(), a.clone());
        }

        #[test]
        fn canonical_form_is_unique(a in arb_poly(), b in arb_poly()) {
            let sa = serde_json::to_string(&a).unwrap();
            let sb = serde_json::to_string(&b).unwrap();
            prop_assert_eq!(a == b, sa == sb);
        }

        #[test]
        fn eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in -3i64..4, y in -3i64..4) {
            let (x, y) = (r(x), r(y));
            prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
            prop_assert_eq!((&a + &b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
        }
    }
}
