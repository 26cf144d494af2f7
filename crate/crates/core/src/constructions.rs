//! Generator families of the maximal commutative subalgebras `B_{k,m,l}` and `B_{k,m}`.
//!
//! `B_{k,m,l} ⊂ M_n(F)` is generated by the identity, two shift chains
//!
//! ```text
//! B1 = E_{m,m+1} + … + E_{m+k,m+k+1}
//! B2 = E_{l,l+1} + … + E_{l+k,l+k+1}
//! ```
//!
//! and the units `E_{i,j}` with `i ∈ W = {1..m} ∪ {l}` and
//! `j ∈ M = {m+k+1..l-1} ∪ {l+k+1..n}`. `B_{k,m}` keeps a single chain `B` and the
//! units `E_{i,j}` with `1 ≤ i ≤ m < m+k+1 ≤ j ≤ n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::system::GeneratingSystem;

/// Parameters `(n, m, l, k)` of `B_{k,m,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub k: usize,
}

impl ConstructionParams {
    /// Requires `k ≥ 1`, `m ≥ 1`, `l > m+k+1` and `l+k+1 ≤ n`.
    pub fn new(n: usize, m: usize, l: usize, k: usize) -> Result<ConstructionParams> {
        let p = ConstructionParams { n, m, l, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ConstructionParams { n, m, l, k } = *self;
        if k < 1 {
            return Err(Error::InvalidParams("k >= 1".into()));
        }
        if m < 1 {
            return Err(Error::InvalidParams("m >= 1".into()));
        }
        if l <= m + k + 1 {
            return Err(Error::InvalidParams("l > m+k+1".into()));
        }
        if l + k + 1 > n {
            return Err(Error::InvalidParams("l+k+1 <= n".into()));
        }
        Ok(())
    }

    /// Every valid tuple with the given side, ordered by `(m, l, k)`.
    pub fn all_for_side(n: usize) -> Vec<ConstructionParams> {
        let mut out = Vec::new();
        for m in 1..=n {
            for l in 1..=n {
                for k in 1..=n {
                    if let Ok(p) = ConstructionParams::new(n, m, l, k) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, l={}, k={})", self.n, self.m, self.l, self.k)
    }
}

/// Parameters `(n, m, k)` of `B_{k,m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BkmParams {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

impl BkmParams {
    /// Requires `k ≥ 1`, `m ≥ 1` and `k+m+1 ≤ n`.
    pub fn new(n: usize, m: usize, k: usize) -> Result<BkmParams> {
        let p = BkmParams { n, m, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let BkmParams { n, m, k } = *self;
        if k < 1 {
            return Err(Error::InvalidParams("k >= 1".into()));
        }
        if m < 1 {
            return Err(Error::InvalidParams("m >= 1".into()));
        }
        if k + m + 1 > n {
            return Err(Error::InvalidParams("k+m+1 <= n".into()));
        }
        Ok(())
    }

    pub fn all_for_side(n: usize) -> Vec<BkmParams> {
        let mut out = Vec::new();
        for m in 1..=n {
            for k in 1..=n {
                if let Ok(p) = BkmParams::new(n, m, k) {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for BkmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, k={})", self.n, self.m, self.k)
    }
}

/// The row set `W` and column set `M` of the unit generators, both sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSets {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl IndexSets {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().flat_map(move |&i| self.cols.iter().map(move |&j| (i, j)))
    }
}

pub fn index_sets(p: &ConstructionParams) -> Result<IndexSets> {
    p.validate()?;
    let ConstructionParams { n, m, l, k } = *p;
    let rows: Vec<usize> = (1..=m).chain(std::iter::once(l)).collect();
    let cols: Vec<usize> = (m + k + 1..l).chain(l + k + 1..=n).collect();
    debug_assert!(rows.iter().all(|i| !cols.contains(i)));
    Ok(IndexSets { rows, cols })
}

pub fn bkm_index_sets(p: &BkmParams) -> Result<IndexSets> {
    p.validate()?;
    Ok(IndexSets { rows: (1..=p.m).collect(), cols: (p.m + p.k + 1..=p.n).collect() })
}

/// `Σ_{h=0}^{k} E_{start+h, start+h+1}`.
pub fn shift_matrix(field: Field, n: usize, start: usize, k: usize) -> Result<Matrix> {
    if start < 1 || start + k + 1 > n {
        return Err(Error::IndexOutOfRange { i: start + k, j: start + k + 1, n });
    }
    Matrix::from_entries(field, n, (0..=k).map(|h| (start + h, start + h + 1, Scalar::one(field))))
}

/// Closed form of the `s`-th power of [`shift_matrix`]:
/// `Σ_{h=0}^{k-s+1} E_{start+h, start+h+s}` for `1 ≤ s ≤ k+1`, zero beyond.
pub fn shift_power(field: Field, n: usize, start: usize, k: usize, s: usize) -> Result<Matrix> {
    shift_matrix(field, n, start, k)?;
    if s == 0 {
        return Ok(Matrix::identity(field, n));
    }
    if s > k + 1 {
        return Ok(Matrix::zeros(field, n));
    }
    Matrix::from_entries(
        field,
        n,
        (0..=k + 1 - s).map(|h| (start + h, start + h + s, Scalar::one(field))),
    )
}

pub fn unit_label(i: usize, j: usize) -> String {
    format!("E_{i}_{j}")
}

fn labeled_units(
    field: Field,
    n: usize,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> Result<Vec<(String, Matrix)>> {
    pairs.map(|(i, j)| Ok((unit_label(i, j), Matrix::unit(field, n, i, j)?))).collect()
}

/// `{E_n, B1, B2} ∪ {E_{i,j} : i ∈ W, j ∈ M}`, labeled `I`, `B1`, `B2`, `E_i_j`.
pub fn build_bkml(p: &ConstructionParams, field: Field) -> Result<GeneratingSystem> {
    let sets = index_sets(p)?;
    let mut members = vec![
        ("I".to_string(), Matrix::identity(field, p.n)),
        ("B1".to_string(), shift_matrix(field, p.n, p.m, p.k)?),
        ("B2".to_string(), shift_matrix(field, p.n, p.l, p.k)?),
    ];
    members.extend(labeled_units(field, p.n, sets.pairs())?);
    GeneratingSystem::from_labeled(field, p.n, members, true)
}

/// `{E_n, B} ∪ {E_{i,j} : 1 ≤ i ≤ m, m+k+1 ≤ j ≤ n}`, labeled `I`, `B`, `E_i_j`.
pub fn build_bkm(p: &BkmParams, field: Field) -> Result<GeneratingSystem> {
    let sets = bkm_index_sets(p)?;
    let mut members = vec![
        ("I".to_string(), Matrix::identity(field, p.n)),
        ("B".to_string(), shift_matrix(field, p.n, p.m, p.k)?),
    ];
    members.extend(labeled_units(field, p.n, sets.pairs())?);
    GeneratingSystem::from_labeled(field, p.n, members, true)
}

/// The length-forcing system for `B_{k,m,l}`: both chains plus every unit except
/// `E_{m,m+k+1} = B1^{k+1}` and `E_{l,l+k+1} = B2^{k+1}`. The identity enters as the
/// empty word.
pub fn witness_system(p: &ConstructionParams, field: Field) -> Result<GeneratingSystem> {
    let sets = index_sets(p)?;
    let skip = [(p.m, p.m + p.k + 1), (p.l, p.l + p.k + 1)];
    let mut members = vec![
        ("B1".to_string(), shift_matrix(field, p.n, p.m, p.k)?),
        ("B2".to_string(), shift_matrix(field, p.n, p.l, p.k)?),
    ];
    members.extend(labeled_units(field, p.n, sets.pairs().filter(|ij| !skip.contains(ij)))?);
    GeneratingSystem::from_labeled(field, p.n, members, true)
}

/// The analogous system for `B_{k,m}`: `B` plus every unit except `E_{m,m+k+1} = B^{k+1}`.
pub fn bkm_witness_system(p: &BkmParams, field: Field) -> Result<GeneratingSystem> {
    let sets = bkm_index_sets(p)?;
    let skip = (p.m, p.m + p.k + 1);
    let mut members = vec![("B".to_string(), shift_matrix(field, p.n, p.m, p.k)?)];
    members.extend(labeled_units(field, p.n, sets.pairs().filter(|&ij| ij != skip))?);
    GeneratingSystem::from_labeled(field, p.n, members, true)
}

/// Keys of the general element: `gamma`, `alpha_1..alpha_{k+1}`,
/// `lambda_1..lambda_{k+1}`, then `mu_i_j` for `(i, j) ∈ W × M`.
pub fn coefficient_keys(p: &ConstructionParams) -> Result<Vec<String>> {
    let sets = index_sets(p)?;
    let mut keys = vec!["gamma".to_string()];
    keys.extend((1..=p.k + 1).map(|s| format!("alpha_{s}")));
    keys.extend((1..=p.k + 1).map(|t| format!("lambda_{t}")));
    keys.extend(sets.pairs().map(|(i, j)| format!("mu_{i}_{j}")));
    Ok(keys)
}

/// `γE_n + Σ α_s B1^s + Σ λ_t B2^t + Σ μ_{i,j} E_{i,j}`.
///
/// `coeffs` must supply exactly the keys of [`coefficient_keys`].
pub fn assemble_element(
    p: &ConstructionParams,
    field: Field,
    coeffs: &BTreeMap<String, Scalar>,
) -> Result<Matrix> {
    let keys = coefficient_keys(p)?;
    if let Some(extra) = coeffs.keys().find(|key| !keys.contains(key)) {
        return Err(Error::UnknownCoefficientKey(extra.clone()));
    }
    let sets = index_sets(p)?;
    let coeff = |key: &str| -> Result<&Scalar> {
        let c = coeffs.get(key).ok_or_else(|| Error::MissingCoefficientKey(key.to_string()))?;
        if c.field() != field {
            return Err(Error::FieldMismatch { left: field, right: c.field() });
        }
        Ok(c)
    };
    let mut acc = Matrix::identity(field, p.n).scale(coeff("gamma")?)?;
    for s in 1..=p.k + 1 {
        let term = shift_power(field, p.n, p.m, p.k, s)?.scale(coeff(&format!("alpha_{s}"))?)?;
        acc = acc.add(&term)?;
    }
    for t in 1..=p.k + 1 {
        let term = shift_power(field, p.n, p.l, p.k, t)?.scale(coeff(&format!("lambda_{t}"))?)?;
        acc = acc.add(&term)?;
    }
    for (i, j) in sets.pairs() {
        let c = coeff(&format!("mu_{i}_{j}"))?;
        let cur = acc.get(i, j)?.clone();
        acc.set(i, j, &cur + c)?;
    }
    Ok(acc)
}

/// `1 + 2k + (m+1)·((l-m-k-1) + (n-l-k))`, the dimension of `B_{k,m,l}`.
pub fn dimension_formula(p: &ConstructionParams) -> Result<usize> {
    p.validate()?;
    let ConstructionParams { n, m, l, k } = *p;
    Ok(1 + 2 * k + (m + 1) * ((l - m - k - 1) + (n - l - k)))
}

/// `1 + k + m·(n-m-k)`, the dimension of `B_{k,m}`.
pub fn bkm_dimension_formula(p: &BkmParams) -> Result<usize> {
    p.validate()?;
    let BkmParams { n, m, k } = *p;
    Ok(1 + k + m * (n - m - k))
}

/// Either construction, so that reports and sweeps can treat both alike.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Bkml(ConstructionParams),
    Bkm(BkmParams),
}

impl Family {
    pub fn k(&self) -> usize {
        match self {
            Family::Bkml(p) => p.k,
            Family::Bkm(p) => p.k,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Family::Bkml(p) => p.n,
            Family::Bkm(p) => p.n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Bkml(_) => "bkml",
            Family::Bkm(_) => "bkm",
        }
    }

    pub fn generators(&self, field: Field) -> Result<GeneratingSystem> {
        match self {
            Family::Bkml(p) => build_bkml(p, field),
            Family::Bkm(p) => build_bkm(p, field),
        }
    }

    pub fn witness(&self, field: Field) -> Result<GeneratingSystem> {
        match self {
            Family::Bkml(p) => witness_system(p, field),
            Family::Bkm(p) => bkm_witness_system(p, field),
        }
    }

    pub fn expected_dimension(&self) -> Result<usize> {
        match self {
            Family::Bkml(p) => dimension_formula(p),
            Family::Bkm(p) => bkm_dimension_formula(p),
        }
    }

    /// The length the family is known to have: `k + 1`.
    pub fn certified_length(&self) -> usize {
        self.k() + 1
    }

    /// The expected nilpotency index of the radical: `k + 2`.
    pub fn expected_nilpotency(&self) -> usize {
        self.k() + 2
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Bkml(p) => write!(f, "bkml{p}"),
            Family::Bkm(p) => write!(f, "bkm{p}"),
        }
    }
}
