//! Relations among subtle classes over the Čech simplicial scheme of a
//! quadratic form in `I^3`: `u_2` and every Chern class `t^{i mod 2} u_i^2`
//! vanish, and `theta_{j+1}` collapses to `sum_h u_{2^j-h} u_{2^j+1+h}`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::SpacesError;
use crate::poly::{Monomial, Poly};
use crate::steenrod::SteenrodContext;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsorRow {
    pub j: u32,
    pub relation: String,
    pub verified: bool,
}

/// Generators of the monomial ideal `(u_2, u_{2i}^2, t u_{2i+1}^2)` as monomials.
fn chern_generators(ctx: &SteenrodContext) -> Vec<Monomial> {
    let ring = ctx.ring();
    let mut gens = Vec::new();
    let u2 = ctx.class(2);
    gens.extend(u2.terms().iter().cloned());
    let tau = Poly::var(ring, crate::poly::TAU).ok();
    for i in 2..=ctx.n() {
        let sq = ctx.class(i).square().expect("small exponent");
        let c = if i % 2 == 1 {
            match &tau {
                Some(t) => sq.mul(t).expect("small exponent"),
                None => sq,
            }
        } else {
            sq
        };
        gens.extend(c.terms().iter().cloned());
    }
    gens
}

/// Membership in the Chern monomial ideal, term by term.
pub fn chern_ideal_contains(ctx: &SteenrodContext, x: &Poly) -> bool {
    let gens = chern_generators(ctx);
    x.terms().iter().all(|m| gens.iter().any(|g| g.divides(m)))
}

/// `sum_{h=0}^{2^j} u_{2^j-h} u_{2^j+1+h}` with `u_0 = 1`, `u_1 = 0` and `u_i = 0` above `n`.
pub fn torsor_relation(ctx: &SteenrodContext, j: u32) -> Result<Poly, SpacesError> {
    let a = 1u32 << j;
    let mut acc = Poly::zero(ctx.ring());
    for h in 0..=a {
        acc.add_assign(&ctx.class(a - h).mul(&ctx.class(a + 1 + h))?);
    }
    Ok(acc)
}

/// The relations for every `j <= max_j` with `2^j + 1 <= n`, each checked
/// against `theta_{j+1}` modulo the Chern ideal.
pub fn torsor_relations(n: u32, max_j: u32) -> Result<Vec<TorsorRow>, SpacesError> {
    if n < 3 {
        return Err(SpacesError::TooSmall { n, min: 3 });
    }
    let ctx = SteenrodContext::bso(n);
    let js: Vec<u32> = (0..=max_j).take_while(|&j| (1u64 << j) < u64::from(n)).collect();
    let Some(&top) = js.last() else { return Ok(Vec::new()) };
    let thetas = ctx.theta_sequence(top + 2)?;
    let mut out = Vec::new();
    for j in js {
        let rel = torsor_relation(&ctx, j)?;
        let diff = &thetas[j as usize + 1] + &rel;
        out.push(TorsorRow { j, relation: rel.to_string(), verified: chern_ideal_contains(&ctx, &diff) });
    }
    Ok(out)
}

/// `{ 2^{j-1} : j >= 1, 2^j + 1 <= n }`.
pub fn j_lower_bound(n: u32) -> Result<BTreeSet<u64>, SpacesError> {
    if n < 3 {
        return Err(SpacesError::TooSmall { n, min: 3 });
    }
    Ok((1..32).take_while(|&j| (1u64 << j) < u64::from(n)).map(|j| 1u64 << (j - 1)).collect())
}
