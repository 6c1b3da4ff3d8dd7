//! Bigraded polynomial arithmetic over F2.
//!
//! A [`Ring`] is a polynomial algebra over F2 on finitely many generators,
//! each carrying a bidegree `(q)[p]` (weight `q`, cohomological degree `p`).
//! The coefficient ring of mod-2 motivic cohomology over an algebraically
//! closed field is `F2[t]` with `t` in bidegree `(1)[0]`, so every motivic
//! ring here is an ordinary polynomial ring that happens to contain `t`.
//!
//! Monomials are ordered by graded reverse lexicographic order, graded by the
//! combined degree `p + q`. Ties are broken by generator list order with `t`
//! moved to the very end, which makes `t` the cheapest variable.

mod parse;
mod ring_map;

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

pub use parse::parse_poly;
pub use ring_map::{apply_map, MapKind, RingMap};

/// Name of the weight-one, degree-zero coefficient generator.
pub const TAU: &str = "t";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("generator `{0}` has bidegree (0)[0]")]
    ZeroBidegree(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("generator `t` must have bidegree (1)[0], got {0}")]
    BadTau(Bidegree),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("ring mismatch")]
    RingMismatch,
    #[error("ring map needs {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("ring map image of `{gen}` has the wrong degree")]
    MapDegree { gen: String },
}

/// Bidegree `(q)[p]`: `p` is the cohomological degree, `q` the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: u32,
    pub q: u32,
}

impl Bidegree {
    pub const fn new(p: u32, q: u32) -> Self {
        Bidegree { p, q }
    }

    /// The bidegree `([i/2])[i]` carried by the subtle class `u_i`.
    pub const fn subtle(i: u32) -> Self {
        Bidegree { p: i, q: i / 2 }
    }

    pub const fn combined(self) -> u32 {
        self.p + self.q
    }
}

impl std::ops::Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})[{}]", self.q, self.p)
    }
}

/// Result of asking a polynomial for its bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial lies in every bidegree.
    Zero,
    Homogeneous(Bidegree),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn bidegree(self) -> Option<Bidegree> {
        match self {
            Homogeneity::Homogeneous(b) => Some(b),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub bidegree: Bidegree,
}

/// A bigraded polynomial ring over F2.
///
/// Generators are kept in the order given by the caller (this is the order
/// used when printing factors). Internally exponent vectors are stored in
/// *tie-break order*, which is the caller's order with `t` moved last.
#[derive(Debug)]
pub struct Ring {
    generators: Vec<Generator>,
    // internal slot of the generator at list position i
    slot_of: Vec<usize>,
    // list position of the generator stored at internal slot s
    gen_at: Vec<usize>,
    // combined degree per internal slot
    weights: Vec<u32>,
    by_name: HashMap<String, usize>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        std::ptr::eq(self, other) || self.generators == other.generators
    }
}

impl Eq for Ring {}

pub type RingRef = Arc<Ring>;

fn valid_name(name: &str) -> bool {
    if name == TAU {
        return true;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some('u' | 'w' | 'v' | 'x' | 'y') => {
            let rest = chars.as_str();
            !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) && rest.parse::<u32>().is_ok()
        }
        _ => false,
    }
}

impl Ring {
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, Bidegree)>) -> Result<RingRef, PolyError> {
        let generators: Vec<Generator> = gens
            .into_iter()
            .map(|(name, bidegree)| Generator { name: name.into(), bidegree })
            .collect();
        let mut by_name = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if !valid_name(&g.name) {
                return Err(PolyError::InvalidName(g.name.clone()));
            }
            if g.bidegree.combined() == 0 {
                return Err(PolyError::ZeroBidegree(g.name.clone()));
            }
            if g.name == TAU && g.bidegree != Bidegree::new(0, 1) {
                return Err(PolyError::BadTau(g.bidegree));
            }
            if by_name.insert(g.name.clone(), i).is_some() {
                return Err(PolyError::DuplicateName(g.name.clone()));
            }
        }
        let mut gen_at: Vec<usize> = (0..generators.len()).filter(|&i| generators[i].name != TAU).collect();
        if let Some(&t) = by_name.get(TAU) {
            gen_at.push(t);
        }
        let mut slot_of = vec![0; generators.len()];
        for (slot, &i) in gen_at.iter().enumerate() {
            slot_of[i] = slot;
        }
        let weights = gen_at.iter().map(|&i| generators[i].bidegree.combined()).collect();
        Ok(Arc::new(Ring { generators, slot_of, gen_at, weights, by_name }))
    }

    /// The coefficient field F2, a ring with no generators.
    pub fn field() -> RingRef {
        Ring::new(Vec::<(String, Bidegree)>::new()).expect("empty ring is valid")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// List position of a generator by name.
    pub fn position(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn has_tau(&self) -> bool {
        self.by_name.contains_key(TAU)
    }

    pub(crate) fn slot_bidegree(&self, slot: usize) -> Bidegree {
        self.generators[self.gen_at[slot]].bidegree
    }

    /// The unit monomial of this ring.
    pub fn unit_monomial(&self) -> Monomial {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, self.generators.len()) }
    }

    /// Monomial `gen^e` for the generator at list `position`.
    pub fn generator_monomial(&self, position: usize, e: u32) -> Monomial {
        let mut m = self.unit_monomial();
        let slot = self.slot_of[position];
        m.exps[slot] = e;
        m.deg = u64::from(e) * u64::from(self.weights[slot]);
        m
    }

    /// Builds a monomial from exponents given in generator list order.
    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.generators.len(), "exponent vector length");
        let mut m = self.unit_monomial();
        for (pos, &e) in exps.iter().enumerate() {
            let slot = self.slot_of[pos];
            m.exps[slot] = e;
            m.deg += u64::from(e) * u64::from(self.weights[slot]);
        }
        m
    }

    /// Exponents of `m` in generator list order.
    pub fn exponents(&self, m: &Monomial) -> Vec<u32> {
        (0..self.generators.len()).map(|pos| m.exps[self.slot_of[pos]]).collect()
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> Bidegree {
        let mut b = Bidegree::default();
        for (slot, &e) in m.exps.iter().enumerate() {
            if e > 0 {
                let g = self.slot_bidegree(slot);
                b.p += e * g.p;
                b.q += e * g.q;
            }
        }
        b
    }

    /// Every monomial of the given bidegree, in descending monomial order.
    pub fn monomials_of_bidegree(&self, target: Bidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.generators.len()];
        self.enumerate_rec(0, target, &mut exps, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn enumerate_rec(&self, slot: usize, rest: Bidegree, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot == exps.len() {
            if rest == Bidegree::default() {
                let mut m = self.unit_monomial();
                for (s, &e) in exps.iter().enumerate() {
                    m.exps[s] = e;
                    m.deg += u64::from(e) * u64::from(self.weights[s]);
                }
                out.push(m);
            }
            return;
        }
        let g = self.slot_bidegree(slot);
        let mut e = 0u32;
        loop {
            let used = Bidegree::new(g.p * e, g.q * e);
            if used.p > rest.p || used.q > rest.q {
                break;
            }
            exps[slot] = e;
            self.enumerate_rec(slot + 1, Bidegree::new(rest.p - used.p, rest.q - used.q), exps, out);
            e += 1;
        }
        exps[slot] = 0;
    }

    pub(crate) fn fmt_monomial(&self, m: &Monomial, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (pos, g) in self.generators.iter().enumerate() {
            let e = m.exps[self.slot_of[pos]];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&g.name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

/// An exponent vector in tie-break order together with its combined degree.
///
/// `Ord` is the ring's monomial order: combined degree first, then reverse
/// lexicographic from the last slot down. Monomials from different rings
/// must not be compared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u64,
    exps: SmallVec<[u32; 16]>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    /// Combined degree `p + q`.
    pub fn degree(&self) -> u64 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub(crate) fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        let mut exps = self.exps.clone();
        for (a, &b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(b).ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(Monomial { deg: self.deg + other.deg, exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { deg: self.deg - other.deg, exps }
    }

    pub fn lcm(&self, other: &Monomial, ring: &Ring) -> Monomial {
        let exps: SmallVec<[u32; 16]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().zip(ring.weights.iter()).map(|(&e, &w)| u64::from(e) * u64::from(w)).sum();
        Monomial { deg, exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Quotient by a monomial, flooring exponents at zero (the colon `(m) : other`).
    pub fn colon(&self, other: &Monomial, ring: &Ring) -> Monomial {
        let exps: SmallVec<[u32; 16]> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a.saturating_sub(*b)).collect();
        let deg = exps.iter().zip(ring.weights.iter()).map(|(&e, &w)| u64::from(e) * u64::from(w)).sum();
        Monomial { deg, exps }
    }
}

/// A polynomial over F2 in a [`Ring`]: a set of monomials, kept sorted in
/// strictly descending monomial order.
#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    terms: Vec<Monomial>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            self.ring.fmt_monomial(m, f)?;
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Poly {
        Poly { ring: ring.clone(), terms: vec![ring.unit_monomial()] }
    }

    pub fn monomial(ring: &RingRef, m: Monomial) -> Poly {
        Poly { ring: ring.clone(), terms: vec![m] }
    }

    /// The generator named `name`.
    pub fn var(ring: &RingRef, name: &str) -> Result<Poly, PolyError> {
        let pos = ring.position(name).ok_or_else(|| PolyError::UnknownGenerator(name.to_string()))?;
        Ok(Poly::monomial(ring, ring.generator_monomial(pos, 1)))
    }

    /// Builds a polynomial from arbitrary monomials, cancelling pairs.
    pub fn from_monomials(ring: &RingRef, monomials: impl IntoIterator<Item = Monomial>) -> Poly {
        let mut set: HashSet<Monomial> = HashSet::new();
        for m in monomials {
            if !set.remove(&m) {
                set.insert(m);
            }
        }
        let mut terms: Vec<Monomial> = set.into_iter().collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from monomials already sorted descending without duplicates.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<Monomial>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0] > w[1]));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// Largest combined degree among the terms.
    pub fn max_degree(&self) -> u64 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn bidegree(&self) -> Homogeneity {
        let mut it = self.terms.iter().map(|m| self.ring.monomial_bidegree(m));
        let Some(first) = it.next() else {
            return Homogeneity::Zero;
        };
        if it.all(|b| b == first) {
            Homogeneity::Homogeneous(first)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        self.ring == other.ring
    }

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        Ok(Poly { ring: self.ring.clone(), terms: merge_xor(&self.terms, &other.terms) })
    }

    pub fn add_assign(&mut self, other: &Poly) {
        assert!(self.same_ring(other), "adding polynomials from different rings");
        if other.terms.is_empty() {
            return;
        }
        self.terms = merge_xor(&self.terms, &other.terms);
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0]);
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0]);
        }
        let mut set: HashSet<Monomial> = HashSet::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mul(b)?;
                if !set.remove(&m) {
                    set.insert(m);
                }
            }
        }
        let mut terms: Vec<Monomial> = set.into_iter().collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    /// Multiplication by a monomial keeps the order, so no sorting is needed.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Poly, PolyError> {
        let terms = self.terms.iter().map(|t| t.mul(m)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, mut e: u32) -> Result<Poly, PolyError> {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Frobenius: over F2 squaring doubles every exponent.
    pub fn square(&self) -> Result<Poly, PolyError> {
        let terms = self.terms.iter().map(|t| t.mul(t)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    /// Keeps the terms of the given bidegree.
    pub fn component(&self, b: Bidegree) -> Poly {
        let terms = self.terms.iter().filter(|m| self.ring.monomial_bidegree(m) == b).cloned().collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Splits into bihomogeneous components.
    pub fn components(&self) -> Vec<(Bidegree, Poly)> {
        let mut map: std::collections::BTreeMap<Bidegree, Vec<Monomial>> = Default::default();
        for m in &self.terms {
            map.entry(self.ring.monomial_bidegree(m)).or_default().push(m.clone());
        }
        map.into_iter().map(|(b, terms)| (b, Poly { ring: self.ring.clone(), terms })).collect()
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("adding polynomials from different rings")
    }
}

/// Symmetric difference of two descending-sorted monomial lists.
fn merge_xor(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Convenience constructor for the motivic ring `F2[t, u_lo, ..., u_hi]`.
pub fn subtle_ring(lo: u32, hi: u32, extra: &[(String, Bidegree)]) -> RingRef {
    let mut gens: Vec<(String, Bidegree)> = vec![(TAU.to_string(), Bidegree::new(0, 1))];
    gens.extend((lo..=hi).map(|i| (format!("u{i}"), Bidegree::subtle(i))));
    gens.extend(extra.iter().cloned());
    Ring::new(gens).expect("subtle class names are distinct")
}

/// The topological ring `F2[w_lo, ..., w_hi]` with `w_i` in bidegree `(0)[i]`.
pub fn topological_ring(lo: u32, hi: u32, extra: &[(String, Bidegree)]) -> RingRef {
    let mut gens: Vec<(String, Bidegree)> = (lo..=hi).map(|i| (format!("w{i}"), Bidegree::new(i, 0))).collect();
    gens.extend(extra.iter().cloned());
    Ring::new(gens).expect("Stiefel-Whitney class names are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bso(n: u32) -> RingRef {
        subtle_ring(2, n, &[])
    }

    #[test]
    fn ring_for_bso3() {
        let r = Ring::new([
            ("t", Bidegree::new(0, 1)),
            ("u2", Bidegree::new(2, 1)),
            ("u3", Bidegree::new(3, 1)),
        ])
        .unwrap();
        assert_eq!(r.num_generators(), 3);
        assert!(r.has_tau());
    }

    #[test]
    fn empty_ring_is_field() {
        let f = Ring::field();
        assert_eq!(f.num_generators(), 0);
        assert_eq!(Poly::one(&f).to_string(), "1");
        assert_eq!(Poly::zero(&f).to_string(), "0");
    }

    #[test]
    fn ring_errors() {
        let dup = Ring::new([("u2", Bidegree::new(2, 1)), ("u2", Bidegree::new(2, 1))]);
        assert_eq!(dup.unwrap_err(), PolyError::DuplicateName("u2".into()));
        let zero = Ring::new([("x1", Bidegree::new(0, 0))]);
        assert_eq!(zero.unwrap_err(), PolyError::ZeroBidegree("x1".into()));
        assert!(matches!(Ring::new([("z", Bidegree::new(1, 0))]), Err(PolyError::InvalidName(_))));
        assert!(matches!(Ring::new([("t", Bidegree::new(1, 0))]), Err(PolyError::BadTau(_))));
    }

    #[test]
    fn order_puts_tau_last() {
        let r = bso(5);
        let t = Poly::var(&r, "t").unwrap();
        let u2 = Poly::var(&r, "u2").unwrap();
        // t^2 and u2 share combined degree 2 + 1 = 3 only with t^3
        let t3 = t.pow(3).unwrap();
        let s = &t3 + &u2;
        assert_eq!(s.to_string(), "u2+t^3");
    }

    #[test]
    fn bidegrees() {
        let r = bso(7);
        let theta2 = parse_poly(&r, "u2*u3+u5").unwrap();
        assert_eq!(theta2.bidegree(), Homogeneity::Homogeneous(Bidegree::new(5, 2)));
        assert_eq!(parse_poly(&r, "u2+u3").unwrap().bidegree(), Homogeneity::Inhomogeneous);
        assert_eq!(parse_poly(&r, "t").unwrap().bidegree(), Homogeneity::Homogeneous(Bidegree::new(0, 1)));
        assert_eq!(Poly::zero(&r).bidegree(), Homogeneity::Zero);
        let x = parse_poly(&r, "t*u3^2").unwrap();
        assert_eq!(x.bidegree().bidegree(), Some(Bidegree::new(6, 3)));
    }

    #[test]
    fn overflow_is_an_error() {
        let r = bso(3);
        let big = r.generator_monomial(1, u32::MAX);
        let p = Poly::monomial(&r, big);
        assert_eq!(p.mul(&p).unwrap_err(), PolyError::ExponentOverflow);
    }

    #[test]
    fn monomials_of_bidegree_counts() {
        let r = bso(7);
        // (2)[5]: u2*u3, u5
        let ms = r.monomials_of_bidegree(Bidegree::new(5, 2));
        assert_eq!(ms.len(), 2);
        let p = Poly::from_sorted(&r, ms);
        assert_eq!(p.to_string(), "u2*u3+u5");
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Poly::one(&bso(3));
        let b = Poly::one(&bso(4));
        assert_eq!(a.try_add(&b).unwrap_err(), PolyError::RingMismatch);
        assert_eq!(a.mul(&b).unwrap_err(), PolyError::RingMismatch);
    }
}
