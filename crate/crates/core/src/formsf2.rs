//! Bilinear forms over F2, their right radicals, Frobenius-twisted sequences
//! `B(x, y^{2^l})`, and the Quillen forms that control the regular sequences
//! in `H(BSO_n)` once `t` is killed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Bidegree, MapKind, Monomial, Poly, PolyError, Ring, RingMap, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormsError {
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: u32, min: u32 },
    #[error("field degree {0} is outside 1..=16")]
    FieldDegree(u32),
    #[error("matrix is not square or has entries other than 0/1")]
    BadMatrix,
    #[error("vector length {got} does not match ambient dimension {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("element {0} does not lie in the field")]
    NotInField(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `B(x, y) = x^T M y` over F2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearFormF2 {
    dim: usize,
    matrix: Vec<Vec<u8>>,
}

impl BilinearFormF2 {
    pub fn new(matrix: Vec<Vec<u8>>) -> Result<Self, FormsError> {
        let dim = matrix.len();
        if matrix.iter().any(|r| r.len() != dim || r.iter().any(|&b| b > 1)) {
            return Err(FormsError::BadMatrix);
        }
        Ok(BilinearFormF2 { dim, matrix })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearFormF2 { dim, matrix: vec![vec![0; dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.matrix[i][j] == 1
    }

    fn set(&mut self, i: usize, j: usize, v: bool) {
        self.matrix[i][j] = u8::from(v);
    }

    pub fn eval(&self, x: &[u8], y: &[u8]) -> bool {
        let mut acc = false;
        for (i, &xi) in x.iter().enumerate().take(self.dim) {
            for (j, &yj) in y.iter().enumerate().take(self.dim) {
                acc ^= self.get(i, j) && xi == 1 && yj == 1;
            }
        }
        acc
    }
}

/// `GF(2^e)` with elements as bit patterns of polynomials modulo a fixed
/// irreducible of degree `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf2e {
    e: u32,
    modulus: u32,
}

/// Irreducible polynomials over F2 indexed by degree (bit i = coefficient of x^i).
const MODULI: [u32; 17] = [
    0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1011011, 0b10000011, 0b100011101, 0b1000010001, 0b10001101111,
    0b100000000101, 0b1000011101011, 0b10000000011011, 0b100000010101001, 0b1000000000110101, 0b10000000000101101,
];

impl Gf2e {
    pub fn new(e: u32) -> Result<Self, FormsError> {
        if !(1..=16).contains(&e) {
            return Err(FormsError::FieldDegree(e));
        }
        Ok(Gf2e { e, modulus: MODULI[e as usize] })
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        1 << self.e
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut prod: u64 = 0;
        for i in 0..self.e {
            if b >> i & 1 == 1 {
                prod ^= u64::from(a) << i;
            }
        }
        for i in (self.e..2 * self.e).rev() {
            if prod >> i & 1 == 1 {
                prod ^= u64::from(self.modulus) << (i - self.e);
            }
        }
        prod as u32
    }

    pub fn pow(&self, mut a: u32, mut k: u64) -> u32 {
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        self.pow(a, u64::from(self.order()) - 2)
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.mul(a, a)
    }
}

/// A subspace of `GF(2^e)^d`, kept as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Gf2e,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Gf2e, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self, FormsError> {
        let mut w = Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() };
        for v in vectors {
            w.check(v)?;
            w.insert(v.clone());
        }
        Ok(w)
    }

    /// Span over F2 of 0/1 vectors.
    pub fn span_f2(ambient: usize, vectors: &[Vec<u8>]) -> Result<Self, FormsError> {
        let vs: Vec<Vec<u32>> = vectors.iter().map(|v| v.iter().map(|&b| u32::from(b)).collect()).collect();
        Subspace::span(Gf2e::new(1)?, ambient, &vs)
    }

    fn check(&self, v: &[u32]) -> Result<(), FormsError> {
        if v.len() != self.ambient {
            return Err(FormsError::Dimension { expected: self.ambient, got: v.len() });
        }
        match v.iter().find(|&&a| !self.field.contains(a)) {
            Some(&a) => Err(FormsError::NotInField(a)),
            None => Ok(()),
        }
    }

    fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a ^= self.field.mul(c, b);
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<u32>) {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&a| a != 0) else { return };
        let inv = self.field.inv(v[p]);
        for a in v.iter_mut() {
            *a = self.field.mul(*a, inv);
        }
        for row in self.basis.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (a, &b) in row.iter_mut().zip(&v) {
                    *a ^= self.field.mul(c, b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.basis.insert(at, v);
        self.pivots.insert(at, p);
    }

    pub fn field(&self) -> Gf2e {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool, FormsError> {
        self.check(v)?;
        Ok(self.reduce(v.to_vec()).iter().all(|&a| a == 0))
    }
}

/// `{ y : B(x, y) = 0 for all x }`, the null space of the matrix.
pub fn right_radical(b: &BilinearFormF2) -> Subspace {
    let d = b.dim();
    let words = d.div_ceil(64).max(1);
    let bit = |row: &[u64], c: usize| row[c / 64] >> (c % 64) & 1 == 1;
    // row-reduce M as packed bit rows; free columns give the null space
    let mut rows: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut row = vec![0u64; words];
            for c in (0..d).filter(|&c| b.get(i, c)) {
                row[c / 64] |= 1 << (c % 64);
            }
            row
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(k) = (r..d).find(|&k| bit(&rows[k], c)) else { continue };
        rows.swap(r, k);
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && bit(row, c) {
                row.iter_mut().zip(&pivot_row).for_each(|(a, b)| *a ^= b);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut null = Vec::new();
    for free in (0..d).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u8; d];
        v[free] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = u8::from(bit(&rows[i], free));
        }
        null.push(v);
    }
    Subspace::span_f2(d, &null).expect("well-formed null space")
}

/// The form governing `H(BSO_n)` modulo `t`: on `V = F2^{m-1}` with
/// `B = sum_{i != j} x_i y_j` for `n = 2m`, and on `V = F2^m` with
/// `B = sum_{i<m} (x_i + x_m) y_i` for `n = 2m + 1`.
pub fn quillen_form(n: u32) -> Result<BilinearFormF2, FormsError> {
    if n < 4 {
        return Err(FormsError::TooSmall { n, min: 4 });
    }
    let m = (n / 2) as usize;
    if n % 2 == 0 {
        let mut b = BilinearFormF2::zero(m - 1);
        for i in 0..m - 1 {
            for j in 0..m - 1 {
                b.set(i, j, i != j);
            }
        }
        Ok(b)
    } else {
        let mut b = BilinearFormF2::zero(m);
        for i in 0..m - 1 {
            b.set(i, i, true);
            b.set(m - 1, i, true);
        }
        Ok(b)
    }
}

/// `F2[x_1..x_d, y_1..y_d]`, every variable in degree `[1]`.
pub fn twisted_ring(d: usize) -> RingRef {
    let mut gens: Vec<(String, Bidegree)> = (1..=d).map(|i| (format!("x{i}"), Bidegree::new(1, 0))).collect();
    gens.extend((1..=d).map(|i| (format!("y{i}"), Bidegree::new(1, 0))));
    Ring::new(gens).expect("valid names")
}

/// `[B(x, y), B(x, y^2), ..., B(x, y^{2^{count-1}})]` in `twisted_ring(dim B)`.
pub fn twisted_sequence(b: &BilinearFormF2, count: u32) -> Result<Vec<Poly>, FormsError> {
    let d = b.dim();
    let ring = twisted_ring(d);
    let mut out = Vec::with_capacity(count as usize);
    for l in 0..count {
        let e = 1u32.checked_shl(l).ok_or(PolyError::ExponentOverflow)?;
        let mut terms: Vec<Monomial> = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if b.get(i, j) {
                    let mut exps = vec![0u32; 2 * d];
                    exps[i] = 1;
                    exps[d + j] = e;
                    terms.push(ring.monomial(&exps));
                }
            }
        }
        out.push(Poly::from_monomials(&ring, terms));
    }
    Ok(out)
}

/// Whether coordinatewise squaring maps `W` into itself.
pub fn frobenius_stable(w: &Subspace) -> bool {
    let f = w.field();
    w.basis().iter().all(|v| {
        let sq: Vec<u32> = v.iter().map(|&a| f.frobenius(a)).collect();
        w.contains(&sq).expect("same ambient space")
    })
}

/// Closed-form length of the regular sequence `t, theta_0, ..., theta_{h-1}`.
pub fn h_expected(n: u32) -> Result<u32, FormsError> {
    if n < 2 {
        return Err(FormsError::TooSmall { n, min: 2 });
    }
    let l = (n - 1) / 8;
    Ok(match (n - 1) % 8 + 1 {
        1 => 4 * l,
        2..=4 => 4 * l + 1,
        5 => 4 * l + 2,
        _ => 4 * l + 3,
    })
}

/// `h(n) = dim V - dim rad_r(B) + 1` from the Quillen form; `h(2) = h(3) = 1`.
pub fn h_of(n: u32) -> Result<u32, FormsError> {
    match n {
        0 | 1 => Err(FormsError::TooSmall { n, min: 2 }),
        2 | 3 => Ok(1),
        _ => {
            let b = quillen_form(n)?;
            Ok((b.dim() - right_radical(&b).dim()) as u32 + 1)
        }
    }
}

/// Target of `beta_n`: `F2[x_1, y_1, ..., x_m, y_m]` (plus `x_{m+1}` for odd `n`)
/// with `x_i` in `[1]` and `y_i` in `(1)[2]`.
pub fn beta_target(n: u32) -> RingRef {
    let m = n / 2;
    let mut gens: Vec<(String, Bidegree)> = Vec::new();
    for i in 1..=m {
        gens.push((format!("x{i}"), Bidegree::new(1, 0)));
        gens.push((format!("y{i}"), Bidegree::new(2, 1)));
    }
    if n % 2 == 1 {
        gens.push((format!("x{}", m + 1), Bidegree::new(1, 0)));
    }
    Ring::new(gens).expect("valid names")
}

/// `beta_n : F2[t, u_1..u_n] -> beta_target(n)`, killing `t`,
/// `u_{2j} -> sigma_j(y)` and `u_{2j+1} -> sum_i x_i sigma_j(y with y_i omitted)`
/// (plus `x_{m+1} sigma_j(y)` when `n = 2m + 1`).
pub fn beta_map(source: &RingRef, n: u32) -> Result<RingMap, FormsError> {
    if n < 1 {
        return Err(FormsError::TooSmall { n, min: 1 });
    }
    let target = beta_target(n);
    let m = (n / 2) as usize;
    let ys: Vec<Poly> = (1..=m).map(|i| Poly::var(&target, &format!("y{i}"))).collect::<Result<_, _>>()?;
    let x = |i: usize| Poly::var(&target, &format!("x{i}"));
    let sigma = |j: usize, skip: Option<usize>| -> Result<Poly, PolyError> {
        // elementary symmetric polynomials by the product prod (1 + y_i)
        let mut e = vec![Poly::one(&target)];
        for (i, y) in ys.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            e.push(Poly::zero(&target));
            for k in (1..e.len()).rev() {
                let term = e[k - 1].mul(y)?;
                e[k].add_assign(&term);
            }
        }
        Ok(e.get(j).cloned().unwrap_or_else(|| Poly::zero(&target)))
    };
    let mut images: Vec<(String, Poly)> = Vec::new();
    for g in source.generators() {
        let Some(rest) = g.name.strip_prefix('u') else { continue };
        let i: usize = rest.parse().map_err(|_| PolyError::InvalidName(g.name.clone()))?;
        let j = i / 2;
        let img = if i % 2 == 0 {
            sigma(j, None)?
        } else {
            let mut acc = Poly::zero(&target);
            for k in 0..m {
                acc.add_assign(&x(k + 1)?.mul(&sigma(j, Some(k))?)?);
            }
            if n % 2 == 1 {
                acc.add_assign(&x(m + 1)?.mul(&sigma(j, None)?)?);
            }
            acc
        };
        images.push((g.name.clone(), img));
    }
    let named: Vec<(&str, Poly)> = images.iter().map(|(s, p)| (s.as_str(), p.clone())).collect();
    Ok(RingMap::from_names(source, &target, &named, MapKind::PDegree)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, subtle_ring};

    #[test]
    fn quillen_small_cases() {
        assert_eq!(quillen_form(8).unwrap().matrix(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(quillen_form(7).unwrap().matrix(), &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]);
        assert_eq!(quillen_form(4).unwrap().matrix(), &[vec![0]]);
        assert!(quillen_form(3).is_err());
    }

    #[test]
    fn radicals() {
        assert_eq!(right_radical(&quillen_form(10).unwrap()).dim(), 0);
        let r = right_radical(&quillen_form(12).unwrap());
        assert_eq!(r.basis(), &[vec![1u32; 5]]);
        let r = right_radical(&quillen_form(9).unwrap());
        assert_eq!(r.basis(), &[vec![0, 0, 0, 1]]);
    }

    #[test]
    fn h_values() {
        assert_eq!(h_of(7).unwrap(), 3);
        assert_eq!(h_of(4).unwrap(), 1);
        assert_eq!(h_of(12).unwrap(), 5);
        for n in 2..=40 {
            assert_eq!(h_of(n).unwrap(), h_expected(n).unwrap(), "n = {n}");
        }
        assert!(h_of(1).is_err());
    }

    #[test]
    fn twisted() {
        let b = BilinearFormF2::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let s = twisted_sequence(&b, 2).unwrap();
        let strs: Vec<String> = s.iter().map(ToString::to_string).collect();
        let r = s[0].ring();
        assert_eq!(s[0], parse_poly(r, "x1*y2+x2*y1").unwrap());
        assert_eq!(s[1], parse_poly(r, "x1*y2^2+x2*y1^2").unwrap(), "{strs:?}");
        assert_eq!(twisted_sequence(&b, 1).unwrap().len(), 1);
    }

    #[test]
    fn field_arithmetic() {
        let f = Gf2e::new(2).unwrap();
        // w^2 = w + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.inv(2), 3);
        assert!(Gf2e::new(0).is_err());
        assert!(Gf2e::new(17).is_err());
    }

    #[test]
    fn moduli_are_irreducible() {
        for e in 1..=16u32 {
            let f = MODULI[e as usize];
            assert_eq!(32 - f.leading_zeros() - 1, e);
            for d in 1..=e / 2 {
                for g in (1u32 << d)..(1u32 << (d + 1)) {
                    assert_ne!(poly_rem(f, g), 0, "degree {e} modulus divisible by {g:b}");
                }
            }
        }
    }

    fn poly_rem(mut a: u32, b: u32) -> u32 {
        let db = 31 - b.leading_zeros();
        while a != 0 && 31 - a.leading_zeros() >= db {
            a ^= b << (31 - a.leading_zeros() - db);
        }
        a
    }

    #[test]
    fn frobenius_examples() {
        let f4 = Gf2e::new(2).unwrap();
        let full = Subspace::span(f4, 2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(frobenius_stable(&full));
        let line = Subspace::span(f4, 2, &[vec![1, 2]]).unwrap();
        assert!(!frobenius_stable(&line));
        let rational = Subspace::span(f4, 2, &[vec![1, 1]]).unwrap();
        assert!(frobenius_stable(&rational));
        assert!(Subspace::span(f4, 2, &[vec![1, 4]]).is_err());
    }

    #[test]
    fn beta_on_generators() {
        let s = subtle_ring(1, 4, &[]);
        let b = beta_map(&s, 4).unwrap();
        let t = b.target().clone();
        assert_eq!(b.apply(&parse_poly(&s, "u2").unwrap()).unwrap(), parse_poly(&t, "y1+y2").unwrap());
        assert_eq!(b.apply(&parse_poly(&s, "u3").unwrap()).unwrap(), parse_poly(&t, "x1*y2+x2*y1").unwrap());
        assert_eq!(b.apply(&parse_poly(&s, "u1").unwrap()).unwrap(), parse_poly(&t, "x1+x2").unwrap());
        assert_eq!(b.apply(&parse_poly(&s, "u4").unwrap()).unwrap(), parse_poly(&t, "y1*y2").unwrap());
        assert!(b.apply(&parse_poly(&s, "t").unwrap()).unwrap().is_zero());
        let s5 = subtle_ring(1, 5, &[]);
        let b5 = beta_map(&s5, 5).unwrap();
        let t5 = b5.target().clone();
        assert_eq!(b5.apply(&parse_poly(&s5, "u5").unwrap()).unwrap(), parse_poly(&t5, "x3*y1*y2").unwrap());
    }
}
