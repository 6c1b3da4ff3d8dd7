//! Bigraded Hilbert series of quotients by monomial ideals, and Krull dimension.
//!
//! `T` tracks cohomological degree and `S` tracks weight. The series of
//! `R/I` is stored as `numerator / prod_g (1 - T^{p_g} S^{q_g})`, with the
//! product over the generators of `R`. The numerator of the leading-term
//! ideal is computed by the usual pivot recursion
//! `N(I) = N(I + (x^e)) + T^.. S^.. N(I : x^e)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GroebnerBasis, GroebnerError};
use crate::poly::{Bidegree, Homogeneity};

/// Integer polynomial in `T` and `S`, keyed by the exponent pair `(p, q)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeriesPoly(BTreeMap<(u32, u32), i64>);

impl SeriesPoly {
    pub fn one() -> Self {
        SeriesPoly::monomial(1, Bidegree::default())
    }

    pub fn monomial(c: i64, b: Bidegree) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert((b.p, b.q), c);
        }
        SeriesPoly(m)
    }

    /// `1 - T^p S^q`
    pub fn one_minus(b: Bidegree) -> Self {
        let mut s = SeriesPoly::one();
        s.add_term(-1, b);
        s
    }

    pub fn add_term(&mut self, c: i64, b: Bidegree) {
        let e = self.0.entry((b.p, b.q)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&(b.p, b.q));
        }
    }

    pub fn add(&self, other: &SeriesPoly) -> SeriesPoly {
        let mut out = self.clone();
        for (&(p, q), &c) in &other.0 {
            out.add_term(c, Bidegree::new(p, q));
        }
        out
    }

    pub fn mul(&self, other: &SeriesPoly) -> SeriesPoly {
        let mut out = SeriesPoly::default();
        for (&(p1, q1), &c1) in &self.0 {
            for (&(p2, q2), &c2) in &other.0 {
                out.add_term(c1 * c2, Bidegree::new(p1 + p2, q1 + q2));
            }
        }
        out
    }

    pub fn shift(&self, b: Bidegree) -> SeriesPoly {
        SeriesPoly(self.0.iter().map(|(&(p, q), &c)| ((p + b.p, q + b.q), c)).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Bidegree)> + '_ {
        self.0.iter().map(|(&(p, q), &c)| (c, Bidegree::new(p, q)))
    }

    pub fn coefficient(&self, b: Bidegree) -> i64 {
        self.0.get(&(b.p, b.q)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Exact bigraded Hilbert series `numerator / prod (1 - T^p S^q)`.
#[derive(Debug, Clone)]
pub struct HilbertSeries {
    numerator: SeriesPoly,
    denominator: Vec<Bidegree>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    numerator: Vec<(i64, u32, u32)>,
    denominator: Vec<(u32, u32)>,
}

impl HilbertSeries {
    pub fn new(numerator: SeriesPoly, denominator: Vec<Bidegree>) -> Self {
        HilbertSeries { numerator, denominator }
    }

    /// Series of the free polynomial algebra on generators of these bidegrees.
    pub fn free(generators: &[Bidegree]) -> Self {
        HilbertSeries::new(SeriesPoly::one(), generators.to_vec())
    }

    pub fn numerator(&self) -> &SeriesPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Bidegree] {
        &self.denominator
    }

    fn denominator_poly(&self) -> SeriesPoly {
        self.denominator.iter().fold(SeriesPoly::one(), |acc, &b| acc.mul(&SeriesPoly::one_minus(b)))
    }

    /// Rational-function equality, by cross-multiplying numerators with the
    /// other side's denominator.
    pub fn same_as(&self, other: &HilbertSeries) -> bool {
        self.numerator.mul(&other.denominator_poly()) == other.numerator.mul(&self.denominator_poly())
    }

    /// The series multiplied by `1 - T^p S^q`.
    pub fn times_one_minus(&self, b: Bidegree) -> HilbertSeries {
        HilbertSeries::new(self.numerator.mul(&SeriesPoly::one_minus(b)), self.denominator.clone())
    }

    /// The series divided by `1 - T^p S^q` (adjoining a free generator).
    pub fn over_one_minus(&self, b: Bidegree) -> HilbertSeries {
        let mut denominator = self.denominator.clone();
        denominator.push(b);
        HilbertSeries::new(self.numerator.clone(), denominator)
    }

    /// Power-series coefficients for every `(p, q)` with `p + q <= max_d`,
    /// as `(dim, p, q)` sorted by `(p, q)`, zeros omitted.
    pub fn expand(&self, max_d: u32) -> Vec<(i64, u32, u32)> {
        let side = max_d as usize + 1;
        let mut c = vec![0i64; side * side];
        for (coeff, b) in self.numerator.terms() {
            if b.combined() <= max_d {
                c[b.p as usize * side + b.q as usize] += coeff;
            }
        }
        for &g in &self.denominator {
            // multiply by 1/(1 - T^p S^q); indices grow in (p, q) order
            let (gp, gq) = (g.p as usize, g.q as usize);
            for p in 0..side {
                for q in 0..side - p {
                    if p >= gp && q >= gq && (gp, gq) != (0, 0) {
                        c[p * side + q] += c[(p - gp) * side + (q - gq)];
                    }
                }
            }
        }
        let mut out = Vec::new();
        for p in 0..side {
            for q in 0..side - p {
                let v = c[p * side + q];
                if v != 0 {
                    out.push((v, p as u32, q as u32));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = SeriesJson {
            numerator: self.numerator.terms().map(|(c, b)| (c, b.p, b.q)).collect(),
            denominator: self.denominator.iter().map(|b| (b.p, b.q)).collect(),
        };
        serde_json::to_value(json).expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<HilbertSeries, serde_json::Error> {
        let json: SeriesJson = serde_json::from_value(value.clone())?;
        let mut numerator = SeriesPoly::default();
        for (c, p, q) in json.numerator {
            numerator.add_term(c, Bidegree::new(p, q));
        }
        let denominator = json.denominator.into_iter().map(|(p, q)| Bidegree::new(p, q)).collect();
        Ok(HilbertSeries::new(numerator, denominator))
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

pub(super) fn of_basis(gb: &GroebnerBasis) -> Result<HilbertSeries, GroebnerError> {
    for (index, g) in gb.generators().iter().enumerate() {
        if let Homogeneity::Inhomogeneous = g.bidegree() {
            return Err(GroebnerError::Inhomogeneous { index });
        }
    }
    let ring = gb.ring();
    let slot_degrees: Vec<Bidegree> = (0..ring.num_generators()).map(|s| ring.slot_bidegree(s)).collect();
    let gens: Vec<Vec<u32>> = gb.leading_monomials().iter().map(|m| m.exps().to_vec()).collect();
    let numerator = monomial_numerator(gens, &slot_degrees);
    let denominator = ring.generators().iter().map(|g| g.bidegree).collect();
    Ok(HilbertSeries::new(numerator, denominator))
}

fn exps_bidegree(e: &[u32], degrees: &[Bidegree]) -> Bidegree {
    e.iter().zip(degrees).fold(Bidegree::default(), |acc, (&k, d)| Bidegree::new(acc.p + k * d.p, acc.q + k * d.q))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `R / (gens)` for monomial generators.
pub(crate) fn monomial_numerator(gens: Vec<Vec<u32>>, degrees: &[Bidegree]) -> SeriesPoly {
    let gens = minimize(gens);
    if gens.is_empty() {
        return SeriesPoly::one();
    }
    let nvars = degrees.len();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (v, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let (pivot_var, &max_count) = counts.iter().enumerate().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v))).expect("nonempty");
    if max_count <= 1 {
        // pairwise coprime generators form a regular sequence
        return gens
            .iter()
            .fold(SeriesPoly::one(), |acc, g| acc.mul(&SeriesPoly::one_minus(exps_bidegree(g, degrees))));
    }
    let e = gens.iter().map(|g| g[pivot_var]).filter(|&e| e > 0).min().expect("pivot occurs");
    let mut pivot = vec![0u32; nvars];
    pivot[pivot_var] = e;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot_var] = h[pivot_var].saturating_sub(e);
            h
        })
        .collect();
    let shift = exps_bidegree(&pivot, degrees);
    monomial_numerator(with_pivot, degrees).add(&monomial_numerator(colon, degrees).shift(shift))
}

/// Maximum size of a set of variables containing no leading-term support.
pub(super) fn krull_dimension(gb: &GroebnerBasis) -> i64 {
    let n = gb.ring().num_generators();
    if gb.is_unit() {
        return -1;
    }
    let supports: Vec<Vec<usize>> = minimize(gb.leading_monomials().iter().map(|m| m.exps().to_vec()).collect())
        .into_iter()
        .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v).collect())
        .collect();
    // dimension = n - (minimum set of variables hitting every support)
    let mut best = n;
    let mut chosen = vec![false; n];
    min_hitting_set(&supports, &mut chosen, 0, &mut best);
    (n - best) as i64
}

fn min_hitting_set(supports: &[Vec<usize>], chosen: &mut Vec<bool>, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some(unhit) = supports.iter().find(|s| !s.iter().any(|&v| chosen[v])) else {
        *best = size;
        return;
    };
    for &v in unhit {
        chosen[v] = true;
        min_hitting_set(supports, chosen, size + 1, best);
        chosen[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::Budget;
    use crate::poly::{parse_poly, Poly, Ring, RingRef};

    fn ring_u23() -> RingRef {
        Ring::new([("u2", Bidegree::new(2, 1)), ("u3", Bidegree::new(3, 1))]).unwrap()
    }

    fn basis(r: &RingRef, gens: &[&str]) -> GroebnerBasis {
        let gens: Vec<Poly> = gens.iter().map(|s| parse_poly(r, s).unwrap()).collect();
        GroebnerBasis::new(r, &gens, Budget::default()).unwrap()
    }

    #[test]
    fn free_algebra() {
        let r = ring_u23();
        let hs = basis(&r, &[]).hilbert_series().unwrap();
        assert!(hs.same_as(&HilbertSeries::free(&[Bidegree::new(2, 1), Bidegree::new(3, 1)])));
        assert_eq!(hs.numerator(), &SeriesPoly::one());
    }

    #[test]
    fn principal_ideal() {
        let r = ring_u23();
        let hs = basis(&r, &["u2*u3"]).hilbert_series().unwrap();
        assert_eq!(hs.numerator(), &SeriesPoly::one_minus(Bidegree::new(5, 2)));
    }

    #[test]
    fn pivot_recursion_matches_inclusion_exclusion() {
        // (x^2, x*y) in F2[x, y]: N = 1 - T^2 - T^2 + T^3 ... checked against counting
        let degrees = [Bidegree::new(1, 0), Bidegree::new(1, 0)];
        let n = monomial_numerator(vec![vec![2, 0], vec![1, 1]], &degrees);
        let hs = HilbertSeries::new(n, degrees.to_vec());
        // quotient basis: 1, x, y, y^2, y^3, ... so dims 1, 2, 1, 1, ...
        let exp = hs.expand(4);
        assert_eq!(exp, vec![(1, 0, 0), (2, 1, 0), (1, 2, 0), (1, 3, 0), (1, 4, 0)]);
    }

    #[test]
    fn json_shape() {
        let hs = HilbertSeries::new(SeriesPoly::one_minus(Bidegree::new(5, 2)), vec![Bidegree::new(2, 1)]);
        let v = hs.to_json();
        assert_eq!(v, serde_json::json!({"numerator": [[1, 0, 0], [-1, 5, 2]], "denominator": [[2, 1]]}));
        assert!(HilbertSeries::from_json(&v).unwrap().same_as(&hs));
    }

    #[test]
    fn krull() {
        let r = Ring::new([("x1", Bidegree::new(1, 0)), ("y1", Bidegree::new(1, 0))]).unwrap();
        assert_eq!(basis(&r, &["x1*y1"]).krull_dimension(), 1);
        let r4 = Ring::new([
            ("x1", Bidegree::new(1, 0)),
            ("y1", Bidegree::new(1, 0)),
            ("x2", Bidegree::new(1, 0)),
            ("y2", Bidegree::new(1, 0)),
        ])
        .unwrap();
        assert_eq!(basis(&r4, &[]).krull_dimension(), 4);
        assert_eq!(basis(&r4, &["1"]).krull_dimension(), -1);
    }
}
