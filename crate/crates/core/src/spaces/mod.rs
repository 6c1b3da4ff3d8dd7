//! Presentations of the motivic cohomology of classifying spaces, and the
//! computations built on them: the `k(n)` table, regularity of the
//! `theta` sequence, torsor relations, grading maps and the `G_2` check.

mod g2;
mod maps;
mod registry;
mod tables;
mod torsor;

use serde::Serialize;
use thiserror::Error;

use crate::formsf2::FormsError;
use crate::grobner::{GroebnerBasis, GroebnerError, HilbertSeries};
use crate::poly::{Poly, PolyError, RingRef};
use crate::steenrod::SteenrodError;

pub use g2::{g2_gysin_check, g2_gysin_check_with, p_ranks, poincare, G2Report, Poincare};
pub use maps::{h_map, i_map, t_map};
pub use registry::{present, FamilyRegistry, SpaceFamily};
pub use tables::{
    h_table, k_computed, k_expected, k_table_row, verify_mq1, KComputation, Mq1Report, TableReport, TableRow,
};
pub use torsor::{chern_ideal_contains, j_lower_bound, torsor_relation, torsor_relations, TorsorRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpacesError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Steenrod(#[from] SteenrodError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error("budget exceeded at n = {n}, step {step}: {source}")]
    Budget { n: u32, step: u32, source: GroebnerError },
    #[error(transparent)]
    Groebner(GroebnerError),
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: u32, min: u32 },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} {detail}")]
    Unsupported { family: String, detail: String },
    #[error("n = {n}: theta_{j} is neither in I_{j} nor a nonzerodivisor modulo it")]
    NoStableLength { n: u32, j: u32 },
}

impl From<GroebnerError> for SpacesError {
    fn from(e: GroebnerError) -> Self {
        SpacesError::Groebner(e)
    }
}

impl SpacesError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            SpacesError::Budget { .. } | SpacesError::Groebner(GroebnerError::BudgetExceeded { .. })
        )
    }

    /// Attaches `(n, step)` to budget failures.
    pub(crate) fn at(e: GroebnerError, n: u32, step: u32) -> Self {
        match e {
            GroebnerError::BudgetExceeded { .. } => SpacesError::Budget { n, step, source: e },
            other => SpacesError::Groebner(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "BO")]
    Bo,
    #[serde(rename = "BSO")]
    Bso,
    #[serde(rename = "BSpin")]
    BSpin,
    #[serde(rename = "BG2")]
    Bg2,
    #[serde(rename = "BO_top")]
    BoTop,
    #[serde(rename = "BSO_top")]
    BsoTop,
    #[serde(rename = "BSpin_top")]
    BSpinTop,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Bo => "BO",
            Family::Bso => "BSO",
            Family::BSpin => "BSpin",
            Family::Bg2 => "BG2",
            Family::BoTop => "BO_top",
            Family::BsoTop => "BSO_top",
            Family::BSpinTop => "BSpin_top",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// An ambient polynomial ring with a Gröbner basis of relations.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub family: Family,
    pub n: Option<u32>,
    pub ring: RingRef,
    pub relations: GroebnerBasis,
    /// `k(n)` for the spin families.
    pub k: Option<u32>,
}

#[derive(Serialize)]
struct GeneratorJson<'a> {
    name: &'a str,
    p: u32,
    q: u32,
}

impl Presentation {
    pub fn series(&self) -> Result<HilbertSeries, GroebnerError> {
        self.relations.hilbert_series()
    }

    pub fn normal_form(&self, x: &Poly) -> Result<Poly, GroebnerError> {
        self.relations.normal_form(x)
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.generators().iter().map(ToString::to_string).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<GeneratorJson<'_>> = self
            .ring
            .generators()
            .iter()
            .map(|g| GeneratorJson { name: &g.name, p: g.bidegree.p, q: g.bidegree.q })
            .collect();
        serde_json::json!({
            "family": self.family,
            "n": self.n,
            "generators": gens,
            "relations": self.relation_strings(),
            "k": self.k,
        })
    }
}
