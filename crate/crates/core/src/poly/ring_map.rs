use std::collections::HashMap;

use super::{Homogeneity, Monomial, Poly, PolyError, RingRef};

/// What a ring map promises about degrees; checked by [`RingMap::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    /// Every generator goes to a bihomogeneous image of the same bidegree.
    Bigraded,
    /// Cohomological degree is preserved; weights may change (e.g. `t -> 1`).
    PDegree,
    Unchecked,
}

/// A ring homomorphism given by the images of the source generators.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    // indexed by source generator list position
    images: Vec<Poly>,
    kind: MapKind,
}

impl RingMap {
    pub fn new(source: &RingRef, target: &RingRef, images: Vec<Poly>, kind: MapKind) -> Result<RingMap, PolyError> {
        if images.len() != source.num_generators() {
            return Err(PolyError::ImageCount { expected: source.num_generators(), got: images.len() });
        }
        for (g, img) in source.generators().iter().zip(&images) {
            if img.ring() != target {
                return Err(PolyError::RingMismatch);
            }
            let ok = match (kind, img.bidegree()) {
                (MapKind::Unchecked, _) | (_, Homogeneity::Zero) => true,
                (MapKind::Bigraded, Homogeneity::Homogeneous(b)) => b == g.bidegree,
                (MapKind::PDegree, Homogeneity::Homogeneous(b)) => b.p == g.bidegree.p,
                (MapKind::PDegree, Homogeneity::Inhomogeneous) => {
                    img.terms().iter().all(|m| target.monomial_bidegree(m).p == g.bidegree.p)
                }
                (MapKind::Bigraded, Homogeneity::Inhomogeneous) => false,
            };
            if !ok {
                return Err(PolyError::MapDegree { gen: g.name.clone() });
            }
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images, kind })
    }

    /// Builds a map from `(source generator name, image text)` pairs; unnamed generators go to zero.
    pub fn from_names(
        source: &RingRef,
        target: &RingRef,
        images: &[(&str, Poly)],
        kind: MapKind,
    ) -> Result<RingMap, PolyError> {
        let mut all = vec![Poly::zero(target); source.num_generators()];
        for (name, img) in images {
            let pos = source.position(name).ok_or_else(|| PolyError::UnknownGenerator(name.to_string()))?;
            all[pos] = img.clone();
        }
        RingMap::new(source, target, all, kind)
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn image_of(&self, name: &str) -> Option<&Poly> {
        self.source.position(name).map(|p| &self.images[p])
    }

    /// Image of `x` under the homomorphism.
    pub fn apply(&self, x: &Poly) -> Result<Poly, PolyError> {
        if x.ring() != &self.source {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut acc: Vec<Monomial> = Vec::new();
        for m in x.terms() {
            let mut img = Poly::one(&self.target);
            for (pos, e) in self.source.exponents(m).into_iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = match powers.get(&(pos, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = self.images[pos].pow(e)?;
                        powers.insert((pos, e), p.clone());
                        p
                    }
                };
                img = img.mul(&pw)?;
                if img.is_zero() {
                    break;
                }
            }
            acc.extend(img.into_terms());
        }
        Ok(Poly::from_monomials(&self.target, acc))
    }
}

/// Free function form of [`RingMap::apply`].
pub fn apply_map(f: &RingMap, x: &Poly) -> Result<Poly, PolyError> {
    f.apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, subtle_ring, topological_ring};

    #[test]
    fn t_map_sends_tau_to_one() {
        let src = subtle_ring(2, 5, &[]);
        let dst = topological_ring(2, 5, &[]);
        let mut imgs = vec![("t", Poly::one(&dst))];
        let names: Vec<String> = (2..=5).map(|i| format!("u{i}")).collect();
        let w: Vec<Poly> = (2..=5).map(|i| Poly::var(&dst, &format!("w{i}")).unwrap()).collect();
        for (n, p) in names.iter().zip(w) {
            imgs.push((n.as_str(), p));
        }
        let t = RingMap::from_names(&src, &dst, &imgs, MapKind::PDegree).unwrap();
        let x = parse_poly(&src, "t*u5+u2*u3").unwrap();
        assert_eq!(apply_map(&t, &x).unwrap(), parse_poly(&dst, "w5+w2*w3").unwrap());
        let other = subtle_ring(2, 6, &[]);
        assert_eq!(t.apply(&Poly::one(&other)).unwrap_err(), PolyError::RingMismatch);
    }

    #[test]
    fn degree_checks() {
        let src = subtle_ring(2, 3, &[]);
        let dst = topological_ring(2, 3, &[]);
        let bad = RingMap::from_names(&src, &dst, &[("u2", Poly::var(&dst, "w3").unwrap())], MapKind::PDegree);
        assert!(matches!(bad, Err(PolyError::MapDegree { .. })));
        let count = RingMap::new(&src, &dst, vec![], MapKind::Unchecked);
        assert!(matches!(count, Err(PolyError::ImageCount { .. })));
    }
}
