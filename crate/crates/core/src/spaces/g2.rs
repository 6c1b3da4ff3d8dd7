use std::collections::BTreeMap;

use serde::Serialize;

use super::registry::present;
use super::{Family, Presentation, SpacesError};
use crate::grobner::{is_nonzerodivisor, Budget, HilbertSeries};
use crate::poly::{parse_poly, Bidegree, Poly};

#[derive(Debug, Clone)]
pub struct Poincare {
    pub series: HilbertSeries,
    /// `(dim, p, q)` for `p + q <= max_d`.
    pub expansion: Vec<(i64, u32, u32)>,
}

impl Poincare {
    pub fn to_json(&self) -> serde_json::Value {
        let exp: Vec<_> = self.expansion.iter().map(|&(d, p, q)| serde_json::json!({"p": p, "q": q, "dim": d})).collect();
        serde_json::json!({ "series": self.series.to_json(), "expansion": exp })
    }
}

pub fn poincare(pres: &Presentation, max_d: u32) -> Result<Poincare, SpacesError> {
    let series = pres.series()?;
    let expansion = series.expand(max_d);
    Ok(Poincare { series, expansion })
}

/// Ranks over `F2[t]` by cohomological degree, `p = 0..=max_p`: the series
/// with one factor `1/(1 - S)` removed and `S` set to 1. Only meaningful when
/// the quotient is free over `F2[t]`.
pub fn p_ranks(series: &HilbertSeries, max_p: u32) -> Result<Vec<i64>, SpacesError> {
    let tau = Bidegree::new(0, 1);
    let mut denominator = series.denominator().to_vec();
    let at = denominator.iter().position(|&b| b == tau).ok_or_else(|| SpacesError::Unsupported {
        family: "series".into(),
        detail: "has no t factor in its denominator".into(),
    })?;
    denominator.remove(at);
    if denominator.iter().any(|b| b.p == 0) {
        return Err(SpacesError::Unsupported {
            family: "series".into(),
            detail: "has a second degree-zero factor".into(),
        });
    }
    let len = max_p as usize + 1;
    let mut c = vec![0i64; len];
    let mut by_p: BTreeMap<u32, i64> = BTreeMap::new();
    for (coeff, b) in series.numerator().terms() {
        *by_p.entry(b.p).or_default() += coeff;
    }
    for (p, coeff) in by_p {
        if (p as usize) < len {
            c[p as usize] += coeff;
        }
    }
    for b in denominator {
        let step = b.p as usize;
        for p in step..len {
            c[p] += c[p - step];
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct G2Report {
    pub v8_regular: bool,
    pub series_identity: bool,
}

/// The Gysin sequence for `G_2 -> Spin_7`: `v8` acts injectively on
/// `H(BSpin_7)` and `HS(BG_2) = HS(BSpin_7) (1 - T^8 S^4)`.
pub fn g2_gysin_check(budget: Budget) -> Result<G2Report, SpacesError> {
    g2_gysin_check_with(&[], budget)
}

/// As [`g2_gysin_check`] with extra relations (in the `BSpin_7` ring) added.
pub fn g2_gysin_check_with(extra: &[&str], budget: Budget) -> Result<G2Report, SpacesError> {
    let mut spin7 = present(Family::BSpin, Some(7), budget)?;
    if !extra.is_empty() {
        let more: Vec<Poly> = extra.iter().map(|s| parse_poly(&spin7.ring, s)).collect::<Result<_, _>>()?;
        spin7.relations = spin7.relations.extend(&more, budget).map_err(|e| SpacesError::at(e, 7, 0))?;
    }
    let g2 = present(Family::Bg2, None, budget)?;
    let v8 = Poly::var(&spin7.ring, "v8")?;
    let v8_regular = is_nonzerodivisor(&spin7.relations, &v8, budget).map_err(|e| SpacesError::at(e, 7, 0))?;
    let series_identity = g2.series()?.same_as(&spin7.series()?.times_one_minus(Bidegree::subtle(8)));
    Ok(G2Report { v8_regular, series_identity })
}
