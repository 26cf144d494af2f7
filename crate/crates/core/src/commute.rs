//! Commutativity, centralizers and the maximal-commutativity verdict.
//!
//! A commutative subalgebra is maximal exactly when its centralizer in `M_n(F)`
//! coincides with itself. Centralizing the generators centralizes the algebra they
//! generate, so the centralizer is the kernel of the stacked maps `X ↦ XG - GX`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::length::algebra_closure;
use crate::matrix::{commutator, Matrix};
use crate::scalar::{Field, Scalar};
use crate::subspace::{Echelon, Subspace};
use crate::system::GeneratingSystem;

/// Index pair `(a, b)`, `a < b`, of the first two matrices that do not commute,
/// scanning pairs in input order. `None` when all commute.
pub fn first_noncommuting_pair(mats: &[Matrix]) -> Result<Option<(usize, usize)>> {
    for (a, x) in mats.iter().enumerate() {
        for (b, y) in mats.iter().enumerate().skip(a + 1) {
            if !commutator(x, y)?.is_zero() {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

pub fn is_commutative(mats: &[Matrix]) -> Result<bool> {
    Ok(first_noncommuting_pair(mats)?.is_none())
}

/// Equations `(XG - GX)_{i,j} = 0` over the `n²` unknowns `x_{a,b}`.
fn commutation_equations(g: &Matrix) -> Vec<Vec<Scalar>> {
    let n = g.n();
    let field = g.field();
    let entry = |i: usize, j: usize| &g.as_slice()[i * n + j];
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Scalar::zero(field); n * n];
            // Σ_c x_{i,c} G_{c,j}
            for c in 0..n {
                let v = entry(c, j);
                if !v.is_zero() {
                    row[i * n + c] = &row[i * n + c] + v;
                }
            }
            // - Σ_c G_{i,c} x_{c,j}
            for c in 0..n {
                let v = entry(i, c);
                if !v.is_zero() {
                    row[c * n + j] = &row[c * n + j] - v;
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

/// `{X : XG = GX for every G in mats}`.
pub fn centralizer(field: Field, n: usize, mats: &[Matrix]) -> Result<Subspace> {
    for g in mats {
        if g.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: g.n() });
        }
        if g.field() != field {
            return Err(Error::FieldMismatch { left: field, right: g.field() });
        }
    }
    // Reduce the equations incrementally so at most n² of them are ever stored.
    let mut system = Echelon::new(field, n * n);
    for g in mats {
        for row in commutation_equations(g) {
            system.insert(row)?;
        }
    }
    crate::subspace::kernel(field, n * n, system.into_subspace().basis().iter().cloned())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// Two generators, by label, that do not commute.
    NonCommutingPair(String, String),
    /// A matrix commuting with every generator but lying outside the algebra.
    CentralizerElement(Matrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityVerdict {
    pub algebra_dim: usize,
    pub centralizer_dim: usize,
    pub is_commutative: bool,
    pub is_maximal: bool,
    pub counterexample: Option<Counterexample>,
    pub algebra: Subspace,
    pub centralizer: Subspace,
}

impl Serialize for Counterexample {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(2))?;
        match self {
            Counterexample::NonCommutingPair(a, b) => {
                map.serialize_entry("kind", "non_commuting_pair")?;
                map.serialize_entry("labels", &[a, b])?;
            }
            Counterexample::CentralizerElement(m) => {
                map.serialize_entry("kind", "centralizer_element")?;
                let entries: Vec<(usize, usize, String)> =
                    m.nonzero_entries().map(|(i, j, v)| (i, j, v.to_string())).collect();
                map.serialize_entry("entries", &entries)?;
            }
        }
        map.end()
    }
}

pub fn is_maximal_commutative(s: &GeneratingSystem) -> Result<MaximalityVerdict> {
    if s.is_empty() && !s.admit_empty_word() {
        return Err(Error::EmptySystem);
    }
    let mats: Vec<Matrix> = s.matrices().cloned().collect();
    let algebra = algebra_closure(s)?;
    let centralizer = centralizer(s.field(), s.n(), &mats)?;
    let pair = first_noncommuting_pair(&mats)?;
    let (is_commutative, is_maximal, counterexample) = match pair {
        Some((a, b)) => {
            let labels: Vec<&str> = s.labels().collect();
            (
                false,
                false,
                Some(Counterexample::NonCommutingPair(labels[a].to_string(), labels[b].to_string())),
            )
        }
        None => {
            let mut outside = None;
            for m in centralizer.basis_matrices()? {
                if !algebra.contains(&m)? {
                    outside = Some(Counterexample::CentralizerElement(m));
                    break;
                }
            }
            let maximal = outside.is_none() && algebra == centralizer;
            (true, maximal, outside)
        }
    };
    Ok(MaximalityVerdict {
        algebra_dim: algebra.dim(),
        centralizer_dim: centralizer.dim(),
        is_commutative,
        is_maximal,
        counterexample,
        algebra,
        centralizer,
    })
}
