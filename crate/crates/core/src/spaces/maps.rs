//! Comparison maps between the motivic ring `F2[t, u_i]` and the topological
//! ring `F2[w_i]`: `t` forgets the weight (`t -> 1`, `u_i -> w_i`), `i` is the
//! naive section `w_i -> u_i`, and `h` corrects `i` by the power of `t` that
//! puts each monomial on the slope-2 line.

use crate::poly::{Bidegree, MapKind, Monomial, Poly, PolyError, Ring, RingMap, RingRef, TAU};

fn class_index(name: &str, letter: char) -> Result<u32, PolyError> {
    name.strip_prefix(letter)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| PolyError::UnknownGenerator(name.to_string()))
}

/// `F2[w_i]` with the same indices as the `u_i` of `motivic`.
fn topological_of(motivic: &RingRef) -> Result<RingRef, PolyError> {
    let mut gens = Vec::new();
    for g in motivic.generators() {
        if g.name == TAU {
            continue;
        }
        let i = class_index(&g.name, 'u')?;
        gens.push((format!("w{i}"), Bidegree::new(i, 0)));
    }
    Ring::new(gens)
}

/// `F2[t, u_i]` with the same indices as the `w_i` of `top`.
fn motivic_of(top: &RingRef) -> Result<RingRef, PolyError> {
    let mut gens = vec![(TAU.to_string(), Bidegree::new(0, 1))];
    for g in top.generators() {
        let i = class_index(&g.name, 'w')?;
        gens.push((format!("u{i}"), Bidegree::subtle(i)));
    }
    Ring::new(gens)
}

/// `t -> 1`, `u_i -> w_i`.
pub fn t_map(x: &Poly) -> Result<Poly, PolyError> {
    let source = x.ring();
    let target = topological_of(source)?;
    let images: Vec<Poly> = source
        .generators()
        .iter()
        .map(|g| {
            if g.name == TAU {
                Ok(Poly::one(&target))
            } else {
                Poly::var(&target, &format!("w{}", &g.name[1..]))
            }
        })
        .collect::<Result<_, _>>()?;
    RingMap::new(source, &target, images, MapKind::PDegree)?.apply(x)
}

/// `w_i -> u_i`.
pub fn i_map(x: &Poly) -> Result<Poly, PolyError> {
    let source = x.ring();
    let target = motivic_of(source)?;
    let images: Vec<Poly> = source
        .generators()
        .iter()
        .map(|g| Poly::var(&target, &format!("u{}", &g.name[1..])))
        .collect::<Result<_, _>>()?;
    RingMap::new(source, &target, images, MapKind::PDegree)?.apply(x)
}

/// `i` followed by multiplication of each monomial `z` by `t^{[p/2] - q}`.
pub fn h_map(x: &Poly) -> Result<Poly, PolyError> {
    let source = x.ring();
    let target = motivic_of(source)?;
    let mut terms: Vec<Monomial> = Vec::with_capacity(x.len());
    for m in x.terms() {
        let exps = source.exponents(m);
        let mut out = vec![0u32; target.num_generators()];
        let (mut p, mut q) = (0u64, 0u64);
        for (pos, &e) in exps.iter().enumerate() {
            let i = class_index(&source.generators()[pos].name, 'w')?;
            out[pos + 1] = e;
            p += u64::from(i) * u64::from(e);
            q += u64::from(i / 2) * u64::from(e);
        }
        // [p/2] >= sum of [i/2] e_i for every monomial
        let shift = (p / 2).checked_sub(q).expect("floor is superadditive");
        out[0] = u32::try_from(shift).map_err(|_| PolyError::ExponentOverflow)?;
        terms.push(target.monomial(&out));
    }
    Ok(Poly::from_monomials(&target, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, subtle_ring, topological_ring};
    use crate::steenrod::SteenrodContext;

    #[test]
    fn t_map_forgets_tau() {
        let r = subtle_ring(2, 5, &[]);
        let img = t_map(&parse_poly(&r, "t*u5+u2*u3").unwrap()).unwrap();
        assert_eq!(img, parse_poly(&topological_ring(2, 5, &[]), "w5+w2*w3").unwrap());
    }

    #[test]
    fn h_map_values() {
        let w = topological_ring(2, 7, &[]);
        let img = h_map(&parse_poly(&w, "w3").unwrap()).unwrap();
        assert_eq!(img, parse_poly(&subtle_ring(2, 7, &[]), "u3").unwrap());
        let img = h_map(&parse_poly(&w, "w3^2").unwrap()).unwrap();
        assert_eq!(img.to_string(), "t*u3^2");
        assert_eq!(i_map(&parse_poly(&w, "w3^2").unwrap()).unwrap().to_string(), "u3^2");
    }

    #[test]
    fn h_inverts_t_on_theta2() {
        let ctx = SteenrodContext::bso(7);
        let theta = ctx.theta(2).unwrap();
        assert_eq!(h_map(&t_map(&theta).unwrap()).unwrap(), theta);
    }

    #[test]
    fn rejects_foreign_generators() {
        let r = subtle_ring(2, 3, &[("v4".into(), Bidegree::subtle(4))]);
        assert!(t_map(&parse_poly(&r, "v4").unwrap()).is_err());
    }
}
