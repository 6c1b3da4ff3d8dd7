use serde::Serialize;

use super::SpacesError;
use crate::formsf2::{h_expected, h_of};
use crate::grobner::{Budget, IncrementalIdeal};
use crate::poly::{Poly, TAU};
use crate::steenrod::SteenrodContext;

/// Quillen's table: the length of the regular `theta` sequence in `H(BSO_n)`.
pub fn k_expected(n: u32) -> Result<u32, SpacesError> {
    if n < 2 {
        return Err(SpacesError::TooSmall { n, min: 2 });
    }
    let l = (n - 1) / 8;
    Ok(match (n - 1) % 8 + 1 {
        1 => 4 * l,
        2 => 4 * l + 1,
        3 | 4 => 4 * l + 2,
        _ => 4 * l + 3,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KComputation {
    pub n: u32,
    pub k: u32,
}

/// The `k` with `theta_0, ..., theta_{k-1}` regular in `H(BSO_n)` and
/// `theta_k` in `I_k`, each step certified by a Hilbert-series drop.
pub fn k_computed(n: u32, budget: Budget) -> Result<KComputation, SpacesError> {
    if n < 2 {
        return Err(SpacesError::TooSmall { n, min: 2 });
    }
    let ctx = SteenrodContext::bso(n);
    let mut ideal = IncrementalIdeal::new(ctx.ring(), budget)?;
    let mut theta = ctx.class(2);
    for j in 0.. {
        if j > 0 {
            theta = ctx.sq(1 << (j - 1), &theta)?;
        }
        if ideal.contains(&theta)? {
            return Ok(KComputation { n, k: j });
        }
        if !ideal.push(&theta).map_err(|e| SpacesError::at(e, n, j))? {
            return Err(SpacesError::NoStableLength { n, j });
        }
    }
    unreachable!("the loop only exits by returning")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mq1Report {
    pub n: u32,
    pub k: u32,
    pub h: u32,
    /// `theta_0, ..., theta_{k-1}` is a regular sequence.
    pub regular: bool,
    /// 1-based position of the first element that is a zero divisor.
    pub witness: Option<usize>,
    #[serde(rename = "theta_k_in_Ik")]
    pub theta_k_in_ik: bool,
    /// `t, theta_0, ..., theta_{h-1}` is a regular sequence.
    pub tau_prefix_regular: bool,
}

impl Mq1Report {
    pub fn all_true(&self) -> bool {
        self.regular && self.theta_k_in_ik && self.tau_prefix_regular
    }
}

pub fn verify_mq1(n: u32, k: u32, budget: Budget) -> Result<Mq1Report, SpacesError> {
    if n < 2 {
        return Err(SpacesError::TooSmall { n, min: 2 });
    }
    let h = h_of(n)?;
    let ctx = SteenrodContext::bso(n);
    let thetas = ctx.theta_sequence(k.max(h) + 1)?;

    let mut ideal = IncrementalIdeal::new(ctx.ring(), budget)?;
    let mut witness = None;
    for (j, theta) in thetas[..k as usize].iter().enumerate() {
        let ok = ideal.push(theta).map_err(|e| SpacesError::at(e, n, j as u32))?;
        if !ok && witness.is_none() {
            witness = Some(j + 1);
        }
    }
    let theta_k_in_ik = ideal.contains(&thetas[k as usize])?;

    let mut prefix = IncrementalIdeal::new(ctx.ring(), budget)?;
    let tau = Poly::var(ctx.ring(), TAU)?;
    let mut tau_prefix_regular = true;
    for (j, f) in std::iter::once(&tau).chain(&thetas[..h as usize]).enumerate() {
        if !prefix.push(f).map_err(|e| SpacesError::at(e, n, j as u32))? {
            tau_prefix_regular = false;
            break;
        }
    }
    Ok(Mq1Report { n, k, h, regular: witness.is_none(), witness, theta_k_in_ik, tau_prefix_regular })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub expected: u32,
    pub computed: Option<u32>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TableRow {
    pub fn new(n: u32, expected: u32, computed: Result<u32, String>) -> Self {
        match computed {
            Ok(c) => TableRow { n, expected, computed: Some(c), ok: c == expected, error: None },
            Err(e) => TableRow { n, expected, computed: None, ok: false, error: Some(e) },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TableReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

/// One row of the `k` table. Budget exhaustion is returned as an error so
/// callers can tell it apart from a mismatch.
pub fn k_table_row(n: u32, budget: Budget) -> Result<TableRow, SpacesError> {
    let expected = k_expected(n)?;
    match k_computed(n, budget) {
        Ok(c) => Ok(TableRow::new(n, expected, Ok(c.k))),
        Err(e) if e.is_budget() => Err(e),
        Err(SpacesError::NoStableLength { j, .. }) => {
            Ok(TableRow::new(n, expected, Err(format!("theta_{j} is a zero divisor outside I_{j}"))))
        }
        Err(e) => Err(e),
    }
}

/// `h(n)` from radicals against the closed form.
pub fn h_table(from: u32, to: u32) -> Result<TableReport, SpacesError> {
    let mut rows = Vec::new();
    for n in from..=to {
        rows.push(TableRow::new(n, h_expected(n)?, Ok(h_of(n)?)));
    }
    Ok(TableReport { rows, notes: Vec::new() })
}
