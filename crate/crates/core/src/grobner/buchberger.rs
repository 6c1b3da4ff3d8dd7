//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer–Möller pair update (coprime and chain criteria).

use super::{reduce_full, support_mask, Budget, GroebnerError};
use crate::poly::{Monomial, Poly, RingRef};

struct Entry {
    poly: Poly,
    lt: Monomial,
    mask: u64,
    sugar: u64,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

pub(super) struct Engine {
    ring: RingRef,
    budget: Budget,
    steps: u64,
    entries: Vec<Entry>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    pub(super) fn new(ring: &RingRef, budget: Budget) -> Self {
        Engine { ring: ring.clone(), budget, steps: 0, entries: Vec::new(), active: Vec::new(), pairs: Vec::new() }
    }

    /// `known` must already be a Gröbner basis; `extra` are new generators.
    pub(super) fn run(mut self, known: &[Poly], extra: &[Poly]) -> Result<Vec<Poly>, GroebnerError> {
        for g in known.iter().filter(|g| !g.is_zero()) {
            self.push_entry(g.clone(), g.max_degree());
        }
        let mut fresh: Vec<&Poly> = extra.iter().filter(|g| !g.is_zero()).collect();
        fresh.sort_by(|a, b| a.leading().cmp(&b.leading()));
        for g in fresh {
            let (h, _) = self.reduce(g);
            if !h.is_zero() {
                let sugar = g.max_degree();
                self.insert(h, sugar);
            }
        }
        while let Some(pair) = self.select() {
            if self.steps >= self.budget.max_pair_reductions {
                return Err(GroebnerError::BudgetExceeded { steps: self.steps });
            }
            self.steps += 1;
            let s = self.spoly(&pair)?;
            let (h, red_sugar) = self.reduce(&s);
            if !h.is_zero() {
                self.insert(h, pair.sugar.max(red_sugar));
            }
        }
        Ok(self.finish())
    }

    fn push_entry(&mut self, poly: Poly, sugar: u64) -> usize {
        let lt = poly.leading().expect("nonzero").clone();
        let mask = support_mask(&lt);
        self.entries.push(Entry { poly, lt, mask, sugar });
        self.active.push(true);
        self.entries.len() - 1
    }

    fn reduce(&self, f: &Poly) -> (Poly, u64) {
        let reducers: Vec<&Poly> =
            self.entries.iter().zip(&self.active).filter(|(_, &a)| a).map(|(e, _)| &e.poly).collect();
        reduce_full(f, &reducers)
    }

    fn spoly(&self, pair: &Pair) -> Result<Poly, GroebnerError> {
        let a = &self.entries[pair.i];
        let b = &self.entries[pair.j];
        let fa = a.poly.mul_monomial(&pair.lcm.div(&a.lt))?;
        let fb = b.poly.mul_monomial(&pair.lcm.div(&b.lt))?;
        Ok(&fa + &fb)
    }

    fn pair_of(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (&self.entries[i], &self.entries[j]);
        let lcm = a.lt.lcm(&b.lt, &self.ring);
        let sugar = (a.sugar + lcm.degree() - a.lt.degree()).max(b.sugar + lcm.degree() - b.lt.degree());
        Pair { i, j, lcm, sugar }
    }

    /// Smallest sugar first, then smallest lcm.
    fn select(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| x.sugar.cmp(&y.sugar).then_with(|| x.lcm.cmp(&y.lcm)))
            .map(|(i, _)| i)?;
        Some(self.pairs.swap_remove(best))
    }

    fn insert(&mut self, h: Poly, sugar: u64) {
        let hi = self.push_entry(h, sugar);
        let h_lt = self.entries[hi].lt.clone();
        let h_mask = self.entries[hi].mask;

        let mut candidates: Vec<Pair> = (0..hi).filter(|&g| self.active[g]).map(|g| self.pair_of(hi, g)).collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = h_lt.coprime(&self.entries[p.j].lt);
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // coprime leading terms: the S-polynomial reduces to zero
        kept.retain(|p| !h_lt.coprime(&self.entries[p.j].lt));

        // old pairs made redundant by h
        let entries = &self.entries;
        let ring = &self.ring;
        self.pairs.retain(|p| {
            if !(h_mask & !support_mask(&p.lcm) == 0 && h_lt.divides(&p.lcm)) {
                return true;
            }
            let li = entries[p.i].lt.lcm(&h_lt, ring);
            let lj = entries[p.j].lt.lcm(&h_lt, ring);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(kept);

        for g in 0..hi {
            if self.active[g] && h_mask & !self.entries[g].mask == 0 && h_lt.divides(&self.entries[g].lt) {
                self.active[g] = false;
            }
        }
    }

    fn finish(self) -> Vec<Poly> {
        let mut minimal: Vec<Poly> = self
            .entries
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(e, _)| e.poly)
            .collect();
        minimal.sort_by(|a, b| a.leading().cmp(&b.leading()));
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<&Poly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g).collect();
            let lt = minimal[i].leading().expect("nonzero").clone();
            let tail = Poly::from_sorted(minimal[i].ring(), minimal[i].terms()[1..].to_vec());
            let (reduced_tail, _) = reduce_full(&tail, &others);
            let mut terms = vec![lt];
            terms.extend(reduced_tail.into_terms());
            out.push(Poly::from_sorted(minimal[i].ring(), terms));
        }
        out
    }
}
