//! Linear spans kept in reduced row-echelon form.
//!
//! Every [`Subspace`] stores the unique RREF basis of its span, so two subspaces are
//! equal exactly when their bases are identical. Spans of matrices live in the
//! `n²`-dimensional row-major vectorization of `M_n(F)`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// Incremental Gauss-Jordan elimination.
///
/// Rows are kept fully reduced at all times: every stored row has a leading 1 in its
/// pivot column and zeros in every other row's pivot column. Pivots are the leftmost
/// nonzero coordinate of each incoming vector after reduction, which makes the final
/// basis independent of the insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Echelon {
        Echelon { field, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Echelon {
        Echelon {
            field: s.field,
            width: s.width,
            rows: s.rows.clone(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.width {
            return Err(Error::DimensionMismatch { left: self.width, right: v.len() });
        }
        if let Some(bad) = v.iter().find(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch { left: self.field, right: bad.field() });
        }
        Ok(())
    }

    fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            axpy(v, &c, row);
        }
    }

    /// Remainder of `v` after elimination against the current rows.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check(v)?;
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        Ok(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Result<bool> {
        self.check(&v)?;
        let mut v = v;
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inv().expect("pivot is nonzero");
        for c in v.iter_mut().skip(p) {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            axpy(row, &c, &v);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace {
            field: self.field,
            width: self.width,
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { field: self.field, width: self.width, rows: self.rows, pivots: self.pivots }
    }
}

/// `v -= c * row`, skipping zero coordinates of `row`.
fn axpy(v: &mut [Scalar], c: &Scalar, row: &[Scalar]) {
    for (x, r) in v.iter_mut().zip(row) {
        if r.is_zero() {
            continue;
        }
        *x = &*x - &(c * r);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, width: usize) -> Subspace {
        Subspace { field, width, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The whole coordinate space.
    pub fn full(field: Field, width: usize) -> Subspace {
        let rows = (0..width)
            .map(|p| {
                let mut v = vec![Scalar::zero(field); width];
                v[p] = Scalar::one(field);
                v
            })
            .collect();
        Subspace { field, width, rows, pivots: (0..width).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of coordinates of the ambient space.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Side length `n` when the ambient space is a vectorized `M_n(F)`.
    pub fn matrix_side(&self) -> Option<usize> {
        let n = (self.width as f64).sqrt().round() as usize;
        (n >= 1 && n * n == self.width).then_some(n)
    }

    fn side_for(&self, m: &Matrix) -> Result<usize> {
        if m.n() * m.n() != self.width {
            return Err(Error::DimensionMismatch { left: self.width, right: m.n() * m.n() });
        }
        if m.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field, right: m.field() });
        }
        Ok(m.n())
    }

    /// Basis rows reshaped into matrices.
    pub fn basis_matrices(&self) -> Result<Vec<Matrix>> {
        let n = self.matrix_side().ok_or(Error::InvalidInput(format!(
            "width {} is not a perfect square",
            self.width
        )))?;
        self.rows
            .iter()
            .map(|r| Matrix::from_vector(self.field, n, r.clone()))
            .collect()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        Echelon::from_subspace(self).contains(v)
    }

    /// Membership of `vectorize(m)`.
    pub fn contains(&self, m: &Matrix) -> Result<bool> {
        self.side_for(m)?;
        self.contains_vector(m.as_slice())
    }

    /// Coordinates of `v` with respect to the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains_vector(v)? {
            return Ok(None);
        }
        // In RREF the coefficient of basis row r is the entry of v at r's pivot.
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.width != other.width {
            return Err(Error::DimensionMismatch { left: self.width, right: other.width });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        let mut e = Echelon::from_subspace(self);
        for r in &other.rows {
            e.insert(r.clone())?;
        }
        Ok(e.into_subspace())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        let e = Echelon::from_subspace(other);
        for r in &self.rows {
            if !e.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the product of every ordered pair of basis matrices stays inside.
    pub fn is_multiplicatively_closed(&self) -> Result<bool> {
        let mats = self.basis_matrices()?;
        let e = Echelon::from_subspace(self);
        for a in &mats {
            for b in &mats {
                if !e.contains(a.mul_unchecked(b).as_slice())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Canonical RREF basis of the span of `rows`, each of length `width`.
pub fn rref(field: Field, width: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Result<Subspace> {
    let mut e = Echelon::new(field, width);
    for r in rows {
        e.insert(r)?;
    }
    Ok(e.into_subspace())
}

/// Span of matrices in `M_n(F)`.
pub fn span_of(field: Field, n: usize, mats: &[Matrix]) -> Result<Subspace> {
    let mut e = Echelon::new(field, n * n);
    for m in mats {
        if m.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: m.n() });
        }
        e.insert(m.vectorize())?;
    }
    Ok(e.into_subspace())
}

/// Null space of the homogeneous system whose coefficient rows are `equations`,
/// each with `width` columns.
pub fn kernel(
    field: Field,
    width: usize,
    equations: impl IntoIterator<Item = Vec<Scalar>>,
) -> Result<Subspace> {
    let system = rref(field, width, equations)?;
    let mut is_pivot = vec![false; width];
    for &p in &system.pivots {
        is_pivot[p] = true;
    }
    let null_vectors = (0..width).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vec![Scalar::zero(field); width];
        v[f] = Scalar::one(field);
        for (row, &p) in system.rows.iter().zip(&system.pivots) {
            v[p] = -&row[f];
        }
        v
    });
    rref(field, width, null_vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn vec_of(field: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(field, x)).collect()
    }

    #[test]
    fn scalar_multiple_collapses() {
        let s = rref(Q, 3, [vec_of(Q, &[0, 2, 4]), vec_of(Q, &[0, 4, 8])]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], vec_of(Q, &[0, 1, 2]));
        assert_eq!(s.pivots(), &[1]);
    }

    #[test]
    fn empty_span() {
        let s = rref(Q, 4, std::iter::empty()).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s, Subspace::zero(Q, 4));
        assert!(s.contains_vector(&vec_of(Q, &[0, 0, 0, 0])).unwrap());
    }

    #[test]
    fn rref_is_fully_reduced() {
        let s = rref(
            Q,
            4,
            [vec_of(Q, &[1, 2, 3, 4]), vec_of(Q, &[2, 4, 7, 9]), vec_of(Q, &[0, 0, 1, 5])],
        )
        .unwrap();
        assert_eq!(s.pivots(), &[0, 2, 3]);
        for (r, &p) in s.basis().iter().zip(s.pivots()) {
            assert!(r[p].is_one());
            for &q in s.pivots().iter().filter(|&&q| q != p) {
                assert!(r[q].is_zero());
            }
        }
    }

    #[test]
    fn identity_span_and_duplicates() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(span_of(Q, 3, &[id]).unwrap().dim(), 1);
        let e12 = Matrix::unit(Q, 3, 1, 2).unwrap();
        assert_eq!(span_of(Q, 3, &[e12.clone(), e12]).unwrap().dim(), 1);
    }

    #[test]
    fn membership() {
        let b = Matrix::from_entries(Q, 3, [(1, 2, Scalar::one(Q)), (2, 3, Scalar::one(Q))]).unwrap();
        let s = span_of(Q, 3, std::slice::from_ref(&b)).unwrap();
        assert!(s.contains(&b.scale(&Scalar::from_int(Q, 5)).unwrap()).unwrap());
        assert!(!s.contains(&b.pow(2)).unwrap());
        assert!(Subspace::zero(Q, 9).contains(&Matrix::zeros(Q, 3)).unwrap());
        assert!(s.contains(&Matrix::zeros(Q, 4)).is_err());
    }

    #[test]
    fn sums() {
        let a = span_of(Q, 3, &[Matrix::unit(Q, 3, 1, 2).unwrap()]).unwrap();
        let b = span_of(Q, 3, &[Matrix::unit(Q, 3, 2, 3).unwrap()]).unwrap();
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.sum(&Subspace::zero(Q, 9)).unwrap(), a);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert!(a.is_subspace_of(&a.sum(&b).unwrap()).unwrap());
        assert!(!a.sum(&b).unwrap().is_subspace_of(&a).unwrap());
    }

    #[test]
    fn kernels() {
        let zero_map = (0..4).map(|_| vec_of(Q, &[0, 0, 0, 0]));
        assert_eq!(kernel(Q, 4, zero_map).unwrap(), Subspace::full(Q, 4));
        let identity_map = (0..4).map(|i| {
            let mut v = vec_of(Q, &[0, 0, 0, 0]);
            v[i] = Scalar::one(Q);
            v
        });
        assert_eq!(kernel(Q, 4, identity_map).unwrap().dim(), 0);
        // x + y + z = 0 over GF(2)
        let f = Field::Prime(2);
        let k = kernel(f, 3, [vec_of(f, &[1, 1, 1])]).unwrap();
        assert_eq!(k.dim(), 2);
        assert!(k.contains_vector(&vec_of(f, &[1, 1, 0])).unwrap());
        assert!(!k.contains_vector(&vec_of(f, &[1, 0, 0])).unwrap());
    }

    #[test]
    fn coordinates_recover_combination() {
        let s = rref(Q, 3, [vec_of(Q, &[1, 0, 1]), vec_of(Q, &[0, 1, 1])]).unwrap();
        let c = s.coordinates(&vec_of(Q, &[2, -3, -1])).unwrap().unwrap();
        assert_eq!(c, vec_of(Q, &[2, -3]));
        assert!(s.coordinates(&vec_of(Q, &[0, 0, 1])).unwrap().is_none());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let mut e = Echelon::new(Q, 2);
        assert!(matches!(
            e.insert(vec_of(Field::Prime(7), &[1, 0])),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(e.insert(vec_of(Q, &[1])), Err(Error::DimensionMismatch { .. })));
    }
}
