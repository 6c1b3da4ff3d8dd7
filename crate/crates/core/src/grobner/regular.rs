//! Regular-sequence certification by exact Hilbert-series drops.
//!
//! For bihomogeneous `f` of bidegree `b` with `p + q > 0`, multiplication by
//! `f` on `R/I` is injective iff `HS(R/(I + f)) = (1 - T^p S^q) HS(R/I)`,
//! since the difference of the two sides is `T^p S^q HS(ann(f))`.

use super::{Budget, GroebnerBasis, GroebnerError, HilbertSeries};
use crate::poly::{Homogeneity, Poly, PolyError, RingRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub regular: bool,
    /// 1-based index of the first element that fails to drop the series.
    pub witness: Option<usize>,
}

impl RegularityVerdict {
    fn ok() -> Self {
        RegularityVerdict { regular: true, witness: None }
    }

    fn fail(index: usize) -> Self {
        RegularityVerdict { regular: false, witness: Some(index) }
    }
}

/// An ideal grown one generator at a time, tracking its Gröbner basis and
/// Hilbert series.
#[derive(Debug, Clone)]
pub struct IncrementalIdeal {
    basis: GroebnerBasis,
    series: HilbertSeries,
    budget: Budget,
}

impl IncrementalIdeal {
    pub fn new(ring: &RingRef, budget: Budget) -> Result<Self, GroebnerError> {
        let basis = GroebnerBasis::zero(ring);
        let series = basis.hilbert_series()?;
        Ok(IncrementalIdeal { basis, series, budget })
    }

    pub fn from_basis(basis: GroebnerBasis, budget: Budget) -> Result<Self, GroebnerError> {
        let series = basis.hilbert_series()?;
        Ok(IncrementalIdeal { basis, series, budget })
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn series(&self) -> &HilbertSeries {
        &self.series
    }

    pub fn contains(&self, x: &Poly) -> Result<bool, GroebnerError> {
        self.basis.contains(x)
    }

    /// Adds `f` to the ideal and reports whether `f` was a nonzerodivisor
    /// on the previous quotient. Zero is never regular.
    pub fn push(&mut self, f: &Poly) -> Result<bool, GroebnerError> {
        let b = match f.bidegree() {
            Homogeneity::Zero => return Ok(false),
            Homogeneity::Inhomogeneous => return Err(GroebnerError::Inhomogeneous { index: 0 }),
            Homogeneity::Homogeneous(b) => b,
        };
        if b.combined() == 0 {
            return Err(GroebnerError::DegreeZero { index: 0 });
        }
        let basis = self.basis.extend(std::slice::from_ref(f), self.budget)?;
        let series = basis.hilbert_series()?;
        let regular = series.same_as(&self.series.times_one_minus(b));
        self.basis = basis;
        self.series = series;
        Ok(regular)
    }
}

/// Checks whether `seq` is a regular sequence in `ring`.
pub fn is_regular_sequence(ring: &RingRef, seq: &[Poly], budget: Budget) -> Result<RegularityVerdict, GroebnerError> {
    for (i, f) in seq.iter().enumerate() {
        if f.ring() != ring {
            return Err(PolyError::RingMismatch.into());
        }
        match f.bidegree() {
            Homogeneity::Inhomogeneous => return Err(GroebnerError::Inhomogeneous { index: i + 1 }),
            Homogeneity::Homogeneous(b) if b.combined() == 0 => return Err(GroebnerError::DegreeZero { index: i + 1 }),
            _ => {}
        }
    }
    let mut ideal = IncrementalIdeal::new(ring, budget)?;
    for (i, f) in seq.iter().enumerate() {
        if !ideal.push(f)? {
            return Ok(RegularityVerdict::fail(i + 1));
        }
    }
    Ok(RegularityVerdict::ok())
}

/// Whether `f` is a nonzerodivisor on `R / (gb)`.
pub fn is_nonzerodivisor(gb: &GroebnerBasis, f: &Poly, budget: Budget) -> Result<bool, GroebnerError> {
    IncrementalIdeal::from_basis(gb.clone(), budget)?.push(f)
}
