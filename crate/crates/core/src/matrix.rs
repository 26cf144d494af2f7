//! Dense square matrices over a [`Field`], addressed with 1-based `(i, j)` indices.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    field: Field,
    /// Row-major; entry `(i, j)` lives at `(i - 1) * n + (j - 1)`.
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, n: usize) -> Matrix {
        assert!(n >= 1, "matrix side must be positive");
        Matrix {
            n,
            field,
            entries: vec![Scalar::zero(field); n * n],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one(field);
        }
        m
    }

    /// The matrix unit `E_{i,j}`: a single 1 at `(i, j)`.
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Result<Matrix> {
        check_index(n, i, j)?;
        let mut m = Matrix::zeros(field, n);
        m.entries[(i - 1) * n + (j - 1)] = Scalar::one(field);
        Ok(m)
    }

    /// Rebuilds a matrix from its row-major vectorization.
    pub fn from_vector(field: Field, n: usize, coords: Vec<Scalar>) -> Result<Matrix> {
        if coords.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: coords.len() });
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(Matrix { n, field, entries: coords })
    }

    /// Builds a matrix from sparse 1-based `(i, j, value)` triples. Later triples
    /// overwrite earlier ones at the same position.
    pub fn from_entries(
        field: Field,
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, n);
        for (i, j, v) in entries {
            m.set(i, j, v)?;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Scalar> {
        check_index(self.n, i, j)?;
        Ok(&self.entries[(i - 1) * self.n + (j - 1)])
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<()> {
        check_index(self.n, i, j)?;
        if v.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field, right: v.field() });
        }
        self.entries[(i - 1) * self.n + (j - 1)] = v;
        Ok(())
    }

    /// Nonzero entries as 1-based triples in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / self.n + 1, idx % self.n + 1, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Row-major coordinates over 1-based `(i, j)`: `(1,1), (1,2), …, (n,n)`.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_vector(self) -> Vec<Scalar> {
        self.entries
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        Ok(())
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(self.field, n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let c = &mut out.entries[i * n + j];
                    *c = &*c + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            n: self.n,
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Matrix> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field, right: c.field() });
        }
        Ok(Matrix {
            n: self.n,
            field: self.field,
            entries: self.entries.iter().map(|a| a * c).collect(),
        })
    }

    /// `self^e`, with `self^0` the identity.
    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.n);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n).is_zero()
    }
}

/// `AB - BA`.
pub fn commutator(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    ab.sub(&ba)
}

fn check_index(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    Ok(())
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
