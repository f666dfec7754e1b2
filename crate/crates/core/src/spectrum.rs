//! Spectrum observations shared by the lattice, transfer and random-matrix
//! modules.

use crate::error::{Error, Result};

/// Where a spectrum sample came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    Transfer,
    Goe,
    ModifiedGoe,
    LimitMatrix,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Direct => "direct",
            Provenance::Transfer => "transfer",
            Provenance::Goe => "goe",
            Provenance::ModifiedGoe => "modified-goe",
            Provenance::LimitMatrix => "limit-matrix",
        }
    }
}

/// A sorted list of real eigenvalues (or secular-function zeros) with a
/// provenance tag.
#[derive(Debug, Clone)]
pub struct SpectrumSample {
    values: Vec<f64>,
    provenance: Provenance,
}

impl SpectrumSample {
    /// Sorts ascending; rejects non-finite entries.
    pub fn new(mut values: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::EmptyInput {
                what: "spectrum contains non-finite values",
            });
        }
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { values, provenance })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Eigenvalues lying in the closed window [lo, hi].
    pub fn restrict(&self, lo: f64, hi: f64) -> Vec<f64> {
        self.values
            .iter()
            .copied()
            .filter(|&x| x >= lo && x <= hi)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_on_construction() {
        let s = SpectrumSample::new(vec![2.0, -1.0, 0.5], Provenance::Direct).unwrap();
        assert_eq!(s.values(), &[-1.0, 0.5, 2.0]);
        assert_eq!(s.provenance().as_str(), "direct");
    }

    #[test]
    fn rejects_nan() {
        assert!(SpectrumSample::new(vec![0.0, f64::NAN], Provenance::Goe).is_err());
    }

    #[test]
    fn window_restriction() {
        let s = SpectrumSample::new(vec![-2.0, -1.0, 0.0, 1.0, 2.0], Provenance::Direct).unwrap();
        assert_eq!(s.restrict(-1.0, 1.0), vec![-1.0, 0.0, 1.0]);
    }
}
