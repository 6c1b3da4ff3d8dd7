use std::collections::BTreeMap;
use std::sync::Arc;

use super::tables::k_expected;
use super::{Family, Presentation, SpacesError};
use crate::grobner::{Budget, GroebnerBasis};
use crate::poly::{subtle_ring, topological_ring, Bidegree, Ring};
use crate::steenrod::SteenrodContext;

/// One family of classifying spaces.
pub trait SpaceFamily: Send + Sync {
    fn family(&self) -> Family;

    /// Whether the family is indexed by `n`.
    fn takes_n(&self) -> bool {
        true
    }

    fn present(&self, n: Option<u32>, budget: Budget) -> Result<Presentation, SpacesError>;

    /// Steenrod action on the ambient ring, when one is defined.
    fn steenrod_context(&self, n: u32) -> Option<SteenrodContext>;
}

fn require_n(family: Family, n: Option<u32>) -> Result<u32, SpacesError> {
    let n = n.ok_or_else(|| SpacesError::Unsupported { family: family.to_string(), detail: "needs n".into() })?;
    if n < 2 {
        return Err(SpacesError::TooSmall { n, min: 2 });
    }
    Ok(n)
}

struct Orthogonal {
    special: bool,
    topological: bool,
}

impl SpaceFamily for Orthogonal {
    fn family(&self) -> Family {
        match (self.special, self.topological) {
            (false, false) => Family::Bo,
            (true, false) => Family::Bso,
            (false, true) => Family::BoTop,
            (true, true) => Family::BsoTop,
        }
    }

    fn present(&self, n: Option<u32>, _budget: Budget) -> Result<Presentation, SpacesError> {
        let n = require_n(self.family(), n)?;
        let lo = if self.special { 2 } else { 1 };
        let ring = if self.topological { topological_ring(lo, n, &[]) } else { subtle_ring(lo, n, &[]) };
        Ok(Presentation { family: self.family(), n: Some(n), relations: GroebnerBasis::zero(&ring), ring, k: None })
    }

    fn steenrod_context(&self, n: u32) -> Option<SteenrodContext> {
        Some(match (self.special, self.topological) {
            (false, false) => SteenrodContext::bo(n),
            (true, false) => SteenrodContext::bso(n),
            (false, true) => SteenrodContext::topological_bo(n),
            (true, true) => SteenrodContext::topological(n),
        })
    }
}

struct Spin {
    topological: bool,
}

impl SpaceFamily for Spin {
    fn family(&self) -> Family {
        if self.topological {
            Family::BSpinTop
        } else {
            Family::BSpin
        }
    }

    fn present(&self, n: Option<u32>, budget: Budget) -> Result<Presentation, SpacesError> {
        let n = require_n(self.family(), n)?;
        let k = k_expected(n)?;
        let v_deg = 1u32 << k;
        let v = (format!("v{v_deg}"), if self.topological { Bidegree::new(v_deg, 0) } else { Bidegree::subtle(v_deg) });
        if n == 2 {
            // the spin double cover of SO_2 is G_m again
            let mut gens = Vec::new();
            if !self.topological {
                gens.push(("t".to_string(), Bidegree::new(0, 1)));
            }
            gens.push(v);
            let ring = Ring::new(gens)?;
            return Ok(Presentation {
                family: self.family(),
                n: Some(n),
                relations: GroebnerBasis::zero(&ring),
                ring,
                k: Some(k),
            });
        }
        let (ring, ctx) = if self.topological {
            let ring = topological_ring(2, n, &[v]);
            let ctx = SteenrodContext::new(&ring, n, crate::steenrod::Flavor::Topological)?;
            (ring, ctx)
        } else {
            let ring = subtle_ring(2, n, &[v]);
            let ctx = SteenrodContext::new(&ring, n, crate::steenrod::Flavor::Bso)?;
            (ring, ctx)
        };
        let thetas = ctx.theta_sequence(k)?;
        let relations = GroebnerBasis::new(&ring, &thetas, budget).map_err(|e| SpacesError::at(e, n, k))?;
        Ok(Presentation { family: self.family(), n: Some(n), ring, relations, k: Some(k) })
    }

    fn steenrod_context(&self, _n: u32) -> Option<SteenrodContext> {
        None
    }
}

struct G2;

impl SpaceFamily for G2 {
    fn family(&self) -> Family {
        Family::Bg2
    }

    fn takes_n(&self) -> bool {
        false
    }

    fn present(&self, n: Option<u32>, _budget: Budget) -> Result<Presentation, SpacesError> {
        if let Some(n) = n {
            return Err(SpacesError::Unsupported { family: "BG2".into(), detail: format!("takes no n (got {n})") });
        }
        let ring = Ring::new([
            ("t", Bidegree::new(0, 1)),
            ("u4", Bidegree::subtle(4)),
            ("u6", Bidegree::subtle(6)),
            ("u7", Bidegree::subtle(7)),
        ])?;
        Ok(Presentation { family: Family::Bg2, n: None, relations: GroebnerBasis::zero(&ring), ring, k: None })
    }

    fn steenrod_context(&self, _n: u32) -> Option<SteenrodContext> {
        None
    }
}

/// Families looked up by name.
#[derive(Clone, Default)]
pub struct FamilyRegistry {
    entries: BTreeMap<String, Arc<dyn SpaceFamily>>,
}

impl FamilyRegistry {
    pub fn new() -> Self {
        FamilyRegistry::default()
    }

    pub fn with_defaults() -> Self {
        let mut r = FamilyRegistry::new();
        r.register("bo", Arc::new(Orthogonal { special: false, topological: false }));
        r.register("bso", Arc::new(Orthogonal { special: true, topological: false }));
        r.register("bspin", Arc::new(Spin { topological: false }));
        r.register("bg2", Arc::new(G2));
        r.register("bo_top", Arc::new(Orthogonal { special: false, topological: true }));
        let top: Arc<dyn SpaceFamily> = Arc::new(Orthogonal { special: true, topological: true });
        r.register("bso_top", top.clone());
        r.register("top", top);
        r.register("bspin_top", Arc::new(Spin { topological: true }));
        r
    }

    pub fn register(&mut self, name: &str, family: Arc<dyn SpaceFamily>) {
        self.entries.insert(name.to_ascii_lowercase(), family);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn SpaceFamily>, SpacesError> {
        self.entries.get(&name.to_ascii_lowercase()).cloned().ok_or_else(|| SpacesError::UnknownFamily(name.into()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn by_family(&self, family: Family) -> Option<Arc<dyn SpaceFamily>> {
        self.entries.values().find(|f| f.family() == family).cloned()
    }
}

/// Presentation of `family` (and `n` where the family is indexed).
pub fn present(family: Family, n: Option<u32>, budget: Budget) -> Result<Presentation, SpacesError> {
    let registry = FamilyRegistry::with_defaults();
    let f = registry.by_family(family).expect("every family is registered");
    f.present(n, budget)
}
