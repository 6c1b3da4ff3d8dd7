//! Steenrod squares on rings of subtle (or topological) Stiefel-Whitney classes.
//!
//! On a generator `u_m` the Wu formula gives
//! `Sq^k u_m = sum_j C(m+j-k-1, j) u_{k-j} u_{m+j}` for `k < m`,
//! `u_m^2` for `k = m` and zero above. Products follow the Cartan rule
//! `Sq^k(xy) = sum_{a+b=k} t^e Sq^a x Sq^b y` where `e = 1` exactly when
//! `a` and `b` are both odd; this is the placement that makes `Sq^k` shift
//! bidegree by `([k/2])[k]`. The action on `F2[t]` is trivial.
//! In the topological flavor there is no `t` and the rule is the classical one.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{subtle_ring, topological_ring, Bidegree, Monomial, Poly, PolyError, RingRef, TAU};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteenrodError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Steenrod squares are not defined on generator `{0}`")]
    UnsupportedGenerator(String),
    #[error("generator `{name}` does not belong to the {flavor:?} flavor with n = {n}")]
    BadRing { name: String, flavor: Flavor, n: u32 },
    #[error("the ring has no second class")]
    NoSecondClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// Subtle classes `u_1..u_n` over `F2[t]`.
    Bo,
    /// As `Bo` with `u_1 = 0`.
    Bso,
    /// Topological classes `w_i` over F2 (no `t`).
    Topological,
}

impl Flavor {
    fn letter(self) -> char {
        match self {
            Flavor::Topological => 'w',
            _ => 'u',
        }
    }
}

enum Gen {
    Tau,
    Class(u32),
    Other,
}

/// A ring of characteristic classes together with the data the Wu formula needs.
pub struct SteenrodContext {
    ring: RingRef,
    n: u32,
    flavor: Flavor,
    // list position of the class of index i, if it is a generator
    class: Vec<Option<usize>>,
    tau: Option<usize>,
    memo: Mutex<HashMap<(usize, u32, u32), Poly>>,
}

impl std::fmt::Debug for SteenrodContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SteenrodContext").field("n", &self.n).field("flavor", &self.flavor).finish()
    }
}

impl SteenrodContext {
    /// Wraps an existing ring. Generators must be `t` (motivic flavors
    /// only), classes of the flavor's letter with index at most `n`, or
    /// inert `v`/`x`/`y` generators that `sq` refuses to act on.
    pub fn new(ring: &RingRef, n: u32, flavor: Flavor) -> Result<Self, SteenrodError> {
        let mut class = vec![None; 2 * n as usize + 2];
        let mut tau = None;
        for (pos, g) in ring.generators().iter().enumerate() {
            let bad = || SteenrodError::BadRing { name: g.name.clone(), flavor, n };
            if g.name == TAU {
                if flavor == Flavor::Topological {
                    return Err(bad());
                }
                tau = Some(pos);
                continue;
            }
            let letter = g.name.chars().next().unwrap_or(' ');
            if letter == flavor.letter() {
                let i: u32 = g.name[1..].parse().map_err(|_| bad())?;
                let expected = if flavor == Flavor::Topological {
                    Bidegree::new(i, 0)
                } else {
                    Bidegree::subtle(i)
                };
                if i == 0 || i > n || (i == 1 && flavor == Flavor::Bso) || g.bidegree != expected {
                    return Err(bad());
                }
                class[i as usize] = Some(pos);
            } else if !matches!(letter, 'v' | 'x' | 'y') {
                return Err(bad());
            }
        }
        Ok(SteenrodContext { ring: ring.clone(), n, flavor, class, tau, memo: Mutex::new(HashMap::new()) })
    }

    /// `H(BO_n) = F2[t, u_1..u_n]`.
    pub fn bo(n: u32) -> Self {
        SteenrodContext::new(&subtle_ring(1, n, &[]), n, Flavor::Bo).expect("standard ring")
    }

    /// `H(BSO_n) = F2[t, u_2..u_n]`.
    pub fn bso(n: u32) -> Self {
        SteenrodContext::new(&subtle_ring(2, n, &[]), n, Flavor::Bso).expect("standard ring")
    }

    /// `H_top(BSO_n) = F2[w_2..w_n]`.
    pub fn topological(n: u32) -> Self {
        SteenrodContext::new(&topological_ring(2, n, &[]), n, Flavor::Topological).expect("standard ring")
    }

    /// `H_top(BO_n) = F2[w_1..w_n]`.
    pub fn topological_bo(n: u32) -> Self {
        SteenrodContext::new(&topological_ring(1, n, &[]), n, Flavor::Topological).expect("standard ring")
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The class of index `i` as a polynomial (`1` for `i = 0`, zero if absent).
    pub fn class(&self, i: u32) -> Poly {
        if i == 0 {
            return Poly::one(&self.ring);
        }
        match self.class.get(i as usize).copied().flatten() {
            Some(pos) => Poly::monomial(&self.ring, self.ring.generator_monomial(pos, 1)),
            None => Poly::zero(&self.ring),
        }
    }

    fn tau_power(&self, e: u32) -> Option<Monomial> {
        match self.tau {
            Some(pos) if e > 0 => Some(self.ring.generator_monomial(pos, e)),
            _ => None,
        }
    }

    /// `t * x` when both Cartan indices are odd (motivic flavors only).
    fn twist(&self, x: Poly, a: u32, b: u32) -> Result<Poly, PolyError> {
        if a % 2 == 1 && b % 2 == 1 {
            if let Some(t) = self.tau_power(1) {
                return x.mul_monomial(&t);
            }
        }
        Ok(x)
    }

    fn classify(&self, pos: usize) -> Gen {
        if Some(pos) == self.tau {
            return Gen::Tau;
        }
        let name = &self.ring.generators()[pos].name;
        if name.starts_with(self.flavor.letter()) {
            Gen::Class(name[1..].parse().expect("validated at construction"))
        } else {
            Gen::Other
        }
    }

    /// Wu formula on the class of index `m`.
    fn wu(&self, k: u32, m: u32) -> Result<Poly, PolyError> {
        if k == 0 {
            return Ok(self.class(m));
        }
        if k == m {
            return self.class(m).square();
        }
        if k > m {
            return Ok(Poly::zero(&self.ring));
        }
        let mut acc = Poly::zero(&self.ring);
        for j in 0..=k {
            if !binomial_mod2(i64::from(m + j) - i64::from(k) - 1, i64::from(j)) {
                continue;
            }
            let term = self.class(k - j).mul(&self.class(m + j))?;
            acc.add_assign(&term);
        }
        Ok(acc)
    }

    /// `Sq^b (g^e)` for the generator at list position `pos`.
    fn sq_power(&self, pos: usize, e: u32, b: u32) -> Result<Poly, SteenrodError> {
        if b == 0 {
            return Ok(Poly::monomial(&self.ring, self.ring.generator_monomial(pos, e)));
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&(pos, e, b)) {
            return Ok(hit.clone());
        }
        let out = match self.classify(pos) {
            Gen::Tau => Poly::zero(&self.ring),
            Gen::Other => {
                return Err(SteenrodError::UnsupportedGenerator(self.ring.generators()[pos].name.clone()));
            }
            Gen::Class(m) if e == 1 => self.wu(b, m)?,
            Gen::Class(_) if e % 2 == 0 => {
                // Sq^b(x^2): cross terms cancel in pairs, leaving t^[b/2 odd] (Sq^{b/2} x)^2
                if b % 2 == 1 {
                    Poly::zero(&self.ring)
                } else {
                    let half = self.sq_power(pos, e / 2, b / 2)?.square()?;
                    self.twist(half, b / 2, b / 2)?
                }
            }
            Gen::Class(_) => {
                let mut acc = Poly::zero(&self.ring);
                for a in 0..=b {
                    let x = self.sq_power(pos, 1, a)?;
                    if x.is_zero() {
                        continue;
                    }
                    let y = self.sq_power(pos, e - 1, b - a)?;
                    acc.add_assign(&self.twist(x.mul(&y)?, a, b - a)?);
                }
                acc
            }
        };
        self.memo.lock().expect("memo lock").insert((pos, e, b), out.clone());
        Ok(out)
    }

    fn sq_monomial(&self, k: u32, m: &Monomial) -> Result<Poly, SteenrodError> {
        let exps = self.ring.exponents(m);
        let mut acc: Vec<Poly> = vec![Poly::zero(&self.ring); k as usize + 1];
        acc[0] = Poly::one(&self.ring);
        let mut reach = 0u32;
        for (pos, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let top = match self.classify(pos) {
                Gen::Class(i) => i * e,
                Gen::Tau => 0,
                Gen::Other => {
                    return Err(SteenrodError::UnsupportedGenerator(self.ring.generators()[pos].name.clone()));
                }
            };
            let squares: Vec<Poly> =
                (0..=k.min(top)).map(|b| self.sq_power(pos, e, b)).collect::<Result<_, _>>()?;
            let new_reach = (reach + top).min(k);
            let mut next: Vec<Poly> = vec![Poly::zero(&self.ring); k as usize + 1];
            for a in 0..=reach {
                if acc[a as usize].is_zero() {
                    continue;
                }
                for (b, sq) in squares.iter().enumerate() {
                    let b = b as u32;
                    if a + b > k || sq.is_zero() {
                        continue;
                    }
                    let prod = self.twist(acc[a as usize].mul(sq)?, a, b)?;
                    next[(a + b) as usize].add_assign(&prod);
                }
            }
            acc = next;
            reach = new_reach;
        }
        Ok(acc.swap_remove(k as usize))
    }

    /// `Sq^k x`, extended F2-linearly over the terms of `x`.
    pub fn sq(&self, k: u32, x: &Poly) -> Result<Poly, SteenrodError> {
        if x.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let mut terms: Vec<Monomial> = Vec::new();
        for m in x.terms() {
            terms.extend(self.sq_monomial(k, m)?.into_terms());
        }
        Ok(Poly::from_monomials(&self.ring, terms))
    }

    /// `theta_0 = u_2`, `theta_{j+1} = Sq^{2^j} theta_j` (with `w_2` in the
    /// topological flavor, where these are usually written `rho_j`).
    pub fn theta(&self, j: u32) -> Result<Poly, SteenrodError> {
        Ok(self.theta_sequence(j + 1)?.pop().expect("nonempty"))
    }

    /// `[theta_0, ..., theta_{count-1}]`.
    pub fn theta_sequence(&self, count: u32) -> Result<Vec<Poly>, SteenrodError> {
        if self.class.get(2).copied().flatten().is_none() {
            return Err(SteenrodError::NoSecondClass);
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut cur = self.class(2);
        for j in 0..count {
            if j > 0 {
                let shift = 1u32.checked_shl(j - 1).ok_or(PolyError::ExponentOverflow)?;
                cur = self.sq(shift, &cur)?;
            }
            out.push(cur.clone());
        }
        Ok(out)
    }
}

/// `C(top, bottom) mod 2` by Lucas: odd iff the bits of `bottom` are a subset
/// of those of `top`. Negative `top` (or `bottom`) gives zero.
pub fn binomial_mod2(top: i64, bottom: i64) -> bool {
    top >= 0 && bottom >= 0 && bottom <= top && (top & bottom) == bottom
}

pub fn sq(ctx: &SteenrodContext, k: u32, x: &Poly) -> Result<Poly, SteenrodError> {
    ctx.sq(k, x)
}

pub fn theta(ctx: &SteenrodContext, j: u32) -> Result<Poly, SteenrodError> {
    ctx.theta(j)
}

/// `w * alpha` for the Thom class `alpha` of the affine-quadric fibration
/// over the ring of `ctx`. With `N = ctx.n()` (that is, `n + 1`), `alpha`
/// sits in bidegree `([N/2])[N]` and `Sq^m alpha = u_m alpha` for `m <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomModuleElement {
    pub coefficient: Poly,
}

impl ThomModuleElement {
    pub fn new(coefficient: Poly) -> Self {
        ThomModuleElement { coefficient }
    }

    pub fn thom_class(ctx: &SteenrodContext) -> Self {
        ThomModuleElement { coefficient: Poly::one(ctx.ring()) }
    }

    pub fn alpha_bidegree(ctx: &SteenrodContext) -> Bidegree {
        match ctx.flavor() {
            Flavor::Topological => Bidegree::new(ctx.n(), 0),
            _ => Bidegree::subtle(ctx.n()),
        }
    }
}

/// Cartan expansion of `Sq^k (w alpha)`.
pub fn thom_sq(ctx: &SteenrodContext, k: u32, e: &ThomModuleElement) -> Result<ThomModuleElement, SteenrodError> {
    let mut acc = Poly::zero(ctx.ring());
    for b in 0..=k.min(ctx.n()) {
        let sq_alpha = ctx.class(b);
        if sq_alpha.is_zero() {
            continue;
        }
        let a = k - b;
        let sq_w = ctx.sq(a, &e.coefficient)?;
        if sq_w.is_zero() {
            continue;
        }
        acc.add_assign(&ctx.twist(sq_w.mul(&sq_alpha)?, a, b)?);
    }
    Ok(ThomModuleElement { coefficient: acc })
}
