//! Gröbner bases over F2 and everything computed from them: normal forms,
//! ideal membership, bigraded Hilbert series, Krull dimension and
//! certification of regular sequences.

mod buchberger;
mod hilbert;
mod regular;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::poly::{Monomial, Poly, PolyError, RingRef};

pub use hilbert::{HilbertSeries, SeriesPoly};
pub use regular::{is_nonzerodivisor, is_regular_sequence, IncrementalIdeal, RegularityVerdict};

/// Default number of S-pair reductions a single basis computation may spend.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pair_reductions: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pair_reductions: DEFAULT_BUDGET }
    }
}

impl Budget {
    pub fn new(max_pair_reductions: u64) -> Self {
        Budget { max_pair_reductions }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("budget exceeded after {steps} pair reductions")]
    BudgetExceeded { steps: u64 },
    #[error("element {index} is not bihomogeneous")]
    Inhomogeneous { index: usize },
    #[error("element {index} is a nonzero constant")]
    DegreeZero { index: usize },
}

/// A reduced Gröbner basis, sorted by ascending leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    generators: Vec<Poly>,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `gens` (zeros are dropped).
    pub fn new(ring: &RingRef, gens: &[Poly], budget: Budget) -> Result<GroebnerBasis, GroebnerError> {
        for g in gens {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch.into());
            }
        }
        let generators = buchberger::Engine::new(ring, budget).run(&[], gens)?;
        Ok(GroebnerBasis { ring: ring.clone(), generators })
    }

    /// The zero ideal.
    pub fn zero(ring: &RingRef) -> GroebnerBasis {
        GroebnerBasis { ring: ring.clone(), generators: Vec::new() }
    }

    /// Basis of the ideal generated by `self` and `extra`, reusing the
    /// pairs already known to reduce to zero.
    pub fn extend(&self, extra: &[Poly], budget: Budget) -> Result<GroebnerBasis, GroebnerError> {
        for g in extra {
            if g.ring() != &self.ring {
                return Err(PolyError::RingMismatch.into());
            }
        }
        let generators = buchberger::Engine::new(&self.ring, budget).run(&self.generators, extra)?;
        Ok(GroebnerBasis { ring: self.ring.clone(), generators })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Poly::is_one)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading().cloned()).collect()
    }

    /// The unique fully reduced remainder of `x`.
    pub fn normal_form(&self, x: &Poly) -> Result<Poly, GroebnerError> {
        if x.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let reducers: Vec<&Poly> = self.generators.iter().collect();
        Ok(reduce_full(x, &reducers).0)
    }

    pub fn contains(&self, x: &Poly) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(x)?.is_zero())
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries, GroebnerError> {
        hilbert::of_basis(self)
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        hilbert::krull_dimension(self)
    }
}

pub fn groebner_basis(ring: &RingRef, gens: &[Poly], budget: Budget) -> Result<GroebnerBasis, GroebnerError> {
    GroebnerBasis::new(ring, gens, budget)
}

pub fn normal_form(x: &Poly, gb: &GroebnerBasis) -> Result<Poly, GroebnerError> {
    gb.normal_form(x)
}

pub fn ideal_member(x: &Poly, gb: &GroebnerBasis) -> Result<bool, GroebnerError> {
    gb.contains(x)
}

pub fn hilbert_series(gb: &GroebnerBasis) -> Result<HilbertSeries, GroebnerError> {
    gb.hilbert_series()
}

pub fn krull_dimension(gb: &GroebnerBasis) -> i64 {
    gb.krull_dimension()
}

fn support_mask(m: &Monomial) -> u64 {
    m.exps().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

/// Full reduction of `x` by `reducers`; also returns the largest
/// `deg(multiplier) + max_degree(reducer)` used, for sugar bookkeeping.
pub(crate) fn reduce_full(x: &Poly, reducers: &[&Poly]) -> (Poly, u64) {
    let ring = x.ring().clone();
    let leads: Vec<(&Monomial, u64, &Poly)> = reducers
        .iter()
        .filter_map(|g| g.leading().map(|lt| (lt, support_mask(lt), *g)))
        .collect();
    let mut work: BTreeSet<Monomial> = x.terms().iter().cloned().collect();
    let mut rem: Vec<Monomial> = Vec::new();
    let mut sugar = 0;
    while let Some(lt) = work.pop_last() {
        let mask = support_mask(&lt);
        let hit = leads.iter().find(|(m, gm, _)| gm & !mask == 0 && m.divides(&lt));
        match hit {
            Some((m, _, g)) => {
                let q = lt.div(m);
                sugar = sugar.max(q.degree() + g.max_degree());
                for t in &g.terms()[1..] {
                    let prod = t.mul(&q).expect("divisor multiple stays below the reduced term");
                    if !work.remove(&prod) {
                        work.insert(prod);
                    }
                }
            }
            None => rem.push(lt),
        }
    }
    (Poly::from_sorted(&ring, rem), sugar)
}
