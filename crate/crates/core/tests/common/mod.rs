//! Test-only oracles that do not go through the Gröbner or Steenrod code
//! paths they check.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use subtle_core::poly::{Bidegree, Monomial, Poly, RingRef};

// ---------- F2 linear algebra on bitsets ----------

/// Row-reduced span over F2; vectors are bitsets of `words` u64s.
pub struct Span {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    pub fn new() -> Self {
        Span { rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (pivot, row) in &self.rows {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        v
    }

    /// Adds `v`; returns true if it was independent.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = (0..v.len() * 64).find(|&i| v[i / 64] >> (i % 64) & 1 == 1) else { return false };
        for (_, row) in self.rows.iter_mut() {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a ^= b;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn contains(&self, v: Vec<u64>) -> bool {
        self.reduce(v).iter().all(|&w| w == 0)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn sub(a: Bidegree, b: Bidegree) -> Option<Bidegree> {
    Some(Bidegree::new(a.p.checked_sub(b.p)?, a.q.checked_sub(b.q)?))
}

/// The degree-`b` piece of the ideal generated by bihomogeneous `gens`,
/// together with the monomial basis of `R_b` used to index it.
pub struct MacaulayPiece {
    index: HashMap<Monomial, usize>,
    pub span: Span,
    pub dim_ambient: usize,
}

impl MacaulayPiece {
    pub fn new(ring: &RingRef, gens: &[Poly], b: Bidegree) -> Self {
        let basis = ring.monomials_of_bidegree(b);
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut piece = MacaulayPiece { index, span: Span::new(), dim_ambient: basis.len() };
        for g in gens {
            let Some(gb) = g.bidegree().bidegree() else { continue };
            let Some(rest) = sub(b, gb) else { continue };
            for m in ring.monomials_of_bidegree(rest) {
                let v = piece.vector(&g.mul_monomial(&m).unwrap());
                piece.span.insert(v);
            }
        }
        piece
    }

    fn vector(&self, x: &Poly) -> Vec<u64> {
        let mut v = vec![0u64; self.dim_ambient.div_ceil(64).max(1)];
        for t in x.terms() {
            let i = self.index[t];
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    pub fn contains(&self, x: &Poly) -> bool {
        self.span.contains(self.vector(x))
    }

    /// `dim (R/I)_b`.
    pub fn quotient_dim(&self) -> usize {
        self.dim_ambient - self.span.rank()
    }
}

/// Ideal membership decided degree by degree; `None` if a component lies
/// above combined degree `max_d`.
pub fn macaulay_member(ring: &RingRef, gens: &[Poly], x: &Poly, max_d: u32) -> Option<bool> {
    let mut all = true;
    for (b, part) in x.components() {
        if b.combined() > max_d {
            return None;
        }
        all &= MacaulayPiece::new(ring, gens, b).contains(&part);
    }
    Some(all)
}

/// `dim (R/I)_{(p,q)}` for every `p + q <= max_d`.
pub fn macaulay_hilbert(ring: &RingRef, gens: &[Poly], max_d: u32) -> Vec<(i64, u32, u32)> {
    let mut out = Vec::new();
    for p in 0..=max_d {
        for q in 0..=max_d - p {
            let d = MacaulayPiece::new(ring, gens, Bidegree::new(p, q)).quotient_dim();
            if d != 0 {
                out.push((d as i64, p, q));
            }
        }
    }
    out
}

// ---------- Steenrod squares, computed naively ----------

/// C(n, k) mod 2 from Pascal's triangle.
pub fn pascal_mod2(n: i64, k: i64) -> bool {
    if n < 0 || k < 0 || k > n {
        return false;
    }
    let (n, k) = (n as usize, k as usize);
    let mut row = vec![true];
    for _ in 0..n {
        let mut next = vec![true; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] ^ row[i];
        }
        row = next;
    }
    row[k]
}

/// A ring of characteristic classes with letter `u` (motivic) or `w`.
pub struct Naive {
    pub ring: RingRef,
    pub letter: char,
}

impl Naive {
    fn class(&self, i: u32) -> Poly {
        if i == 0 {
            return Poly::one(&self.ring);
        }
        Poly::var(&self.ring, &format!("{}{i}", self.letter)).unwrap_or_else(|_| Poly::zero(&self.ring))
    }

    fn tau(&self) -> Option<Poly> {
        Poly::var(&self.ring, "t").ok()
    }

    fn wu(&self, k: u32, m: u32) -> Poly {
        let mut acc = Poly::zero(&self.ring);
        if k > m {
            return acc;
        }
        if k == m {
            return self.class(m).square().unwrap();
        }
        for j in 0..=k {
            if pascal_mod2(i64::from(m + j) - i64::from(k) - 1, i64::from(j)) {
                acc.add_assign(&self.class(k - j).mul(&self.class(m + j)).unwrap());
            }
        }
        acc
    }

    /// `Sq^a` of a single generator (by name).
    fn sq_gen(&self, a: u32, name: &str) -> Poly {
        if name == "t" {
            return if a == 0 { self.tau().unwrap() } else { Poly::zero(&self.ring) };
        }
        let m: u32 = name[1..].parse().unwrap();
        if a == 0 {
            self.class(m)
        } else {
            self.wu(a, m)
        }
    }

    fn twist(&self, x: Poly, a: u32, b: u32) -> Poly {
        match self.tau() {
            Some(t) if a % 2 == 1 && b % 2 == 1 => x.mul(&t).unwrap(),
            _ => x,
        }
    }

    /// `Sq^k` of a monomial written as a list of generator names with repetition.
    fn sq_factors(&self, k: u32, factors: &[String]) -> Poly {
        // dp[c] = Sq^c of the product of the factors seen so far
        let mut dp: Vec<Poly> = vec![Poly::zero(&self.ring); k as usize + 1];
        dp[0] = Poly::one(&self.ring);
        for f in factors {
            let mut next = vec![Poly::zero(&self.ring); k as usize + 1];
            for c in 0..=k {
                for a in 0..=c {
                    let left = &dp[(c - a) as usize];
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.sq_gen(a, f);
                    next[c as usize].add_assign(&self.twist(left.mul(&right).unwrap(), c - a, a));
                }
            }
            dp = next;
        }
        dp.swap_remove(k as usize)
    }

    pub fn sq(&self, k: u32, x: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.ring);
        for m in x.terms() {
            let mut factors = Vec::new();
            for (pos, e) in self.ring.exponents(m).into_iter().enumerate() {
                for _ in 0..e {
                    factors.push(self.ring.generators()[pos].name.clone());
                }
            }
            acc.add_assign(&self.sq_factors(k, &factors));
        }
        acc
    }
}

// ---------- random inputs ----------

/// A random nonzero bihomogeneous polynomial of bidegree `b`, or `None`
/// when `R_b = 0`.
pub fn random_of_bidegree<R: Rng>(ring: &RingRef, b: Bidegree, rng: &mut R, max_terms: usize) -> Option<Poly> {
    let basis = ring.monomials_of_bidegree(b);
    if basis.is_empty() {
        return None;
    }
    let count = rng.gen_range(1..=max_terms.min(basis.len()));
    let pick: Vec<Monomial> = basis.choose_multiple(rng, count).cloned().collect();
    Some(Poly::from_monomials(ring, pick))
}

/// A random nonzero bihomogeneous polynomial with `p <= max_p`.
pub fn random_bihomogeneous<R: Rng>(ring: &RingRef, rng: &mut R, max_p: u32, max_q: u32, max_terms: usize) -> Poly {
    loop {
        let b = Bidegree::new(rng.gen_range(0..=max_p), rng.gen_range(0..=max_q));
        if b.combined() == 0 {
            continue;
        }
        if let Some(x) = random_of_bidegree(ring, b, rng, max_terms) {
            return x;
        }
    }
}
