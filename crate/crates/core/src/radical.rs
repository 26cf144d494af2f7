//! Radicals of local algebras `A = F·1 + J` and the length bound `ℓ(S) ≤ N - 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::length::{algebra_closure, length_of_system};
use crate::matrix::Matrix;
use crate::subspace::{rref, Echelon, Subspace};
use crate::system::GeneratingSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub radical_dim: usize,
    pub nilpotency_index: usize,
    /// `dim J, dim J², …, 0`.
    pub power_dims: Vec<usize>,
    pub length: usize,
    pub bound_holds: bool,
}

/// The radical `J` of an algebra of the form `F·1 + J`.
///
/// The RREF basis of `A` is re-based so that `E_n` replaces the first basis vector
/// carrying a nonzero identity coordinate; the remaining basis vectors span the
/// candidate radical. Each must be nilpotent and their span closed under products,
/// otherwise `A` is reported as not of local form.
pub fn radical_span(a: &Subspace) -> Result<Subspace> {
    let n = a
        .matrix_side()
        .ok_or_else(|| Error::InvalidInput("not a matrix subspace".into()))?;
    let field = a.field();
    let id = Matrix::identity(field, n);
    let coords = a.coordinates(id.as_slice())?.ok_or(Error::MissingIdentity)?;
    if !a.is_multiplicatively_closed()? {
        return Err(Error::NotASubalgebra);
    }
    let replaced = coords.iter().position(|c| !c.is_zero()).expect("identity is nonzero");
    let complement: Vec<Matrix> = a
        .basis_matrices()?
        .into_iter()
        .enumerate()
        .filter(|&(idx, _)| idx != replaced)
        .map(|(_, m)| m)
        .collect();
    for (idx, m) in complement.iter().enumerate() {
        if !m.is_nilpotent() {
            return Err(Error::NotLocalForm(format!(
                "complement basis element {} is not nilpotent",
                idx + 1
            )));
        }
    }
    let j = rref(field, n * n, complement.iter().map(Matrix::vectorize))?;
    if !j.is_multiplicatively_closed()? {
        return Err(Error::NotLocalForm("complement is not closed under products".into()));
    }
    Ok(j)
}

/// `span{ x·y : x ∈ basis(left), y ∈ basis(right) }`.
pub fn product_span(left: &Subspace, right: &Subspace) -> Result<Subspace> {
    let mut e = Echelon::new(left.field(), left.width());
    let rs = right.basis_matrices()?;
    for x in left.basis_matrices()? {
        for y in &rs {
            e.insert(x.mul(y)?.into_vector())?;
        }
    }
    Ok(e.into_subspace())
}

/// `dim J, dim J², …` down to the first zero power, with `J^{i+1} = J^i · J`.
pub fn power_dims(j: &Subspace) -> Result<Vec<usize>> {
    if j.dim() > 0 && !j.is_multiplicatively_closed()? {
        return Err(Error::NotASubalgebra);
    }
    let mut dims = vec![j.dim()];
    let mut power = j.clone();
    while power.dim() > 0 {
        let next = product_span(&power, j)?;
        if next.dim() >= power.dim() {
            return Err(Error::NotNilpotent(power.dim()));
        }
        dims.push(next.dim());
        power = next;
    }
    Ok(dims)
}

/// Least `N` with `J^N = 0`; the zero subspace has index 1.
pub fn nilpotency_index(j: &Subspace) -> Result<usize> {
    // entry i is dim J^{i+1}, ending at the first zero power
    Ok(power_dims(j)?.len())
}

/// Length of `S`, nilpotency index of the radical of the algebra it generates, and
/// whether `ℓ(S) ≤ N - 1`.
pub fn bound_check(s: &GeneratingSystem) -> Result<RadicalReport> {
    let a = algebra_closure(s)?;
    let j = radical_span(&a)?;
    let power_dims = power_dims(&j)?;
    let nilpotency_index = power_dims.len();
    let length = length_of_system(s, &a)?;
    Ok(RadicalReport {
        radical_dim: j.dim(),
        nilpotency_index,
        power_dims,
        length,
        bound_holds: length < nilpotency_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_bkml, witness_system, ConstructionParams};
    use crate::scalar::Field;
    use crate::subspace::span_of;

    const Q: Field = Field::Rational;

    fn p8() -> ConstructionParams {
        ConstructionParams::new(8, 1, 5, 2).unwrap()
    }

    #[test]
    fn radical_of_example_algebra() {
        let a = algebra_closure(&build_bkml(&p8(), Q).unwrap()).unwrap();
        let j = radical_span(&a).unwrap();
        assert_eq!(j.dim(), 8);
        assert_eq!(nilpotency_index(&j).unwrap(), 4);
        assert_eq!(power_dims(&j).unwrap(), vec![8, 4, 2, 0]);
    }

    #[test]
    fn scalar_algebra_has_zero_radical() {
        let a = span_of(Q, 3, &[Matrix::identity(Q, 3)]).unwrap();
        let j = radical_span(&a).unwrap();
        assert_eq!(j.dim(), 0);
        assert_eq!(nilpotency_index(&j).unwrap(), 1);
    }

    #[test]
    fn full_matrix_algebra_is_not_local() {
        let a = Subspace::full(Q, 4);
        assert!(matches!(radical_span(&a), Err(Error::NotLocalForm(_))));
    }

    #[test]
    fn square_zero_unit() {
        let j = span_of(Q, 2, &[Matrix::unit(Q, 2, 1, 2).unwrap()]).unwrap();
        assert_eq!(nilpotency_index(&j).unwrap(), 2);
    }

    #[test]
    fn idempotent_is_not_nilpotent() {
        let j = span_of(Q, 2, &[Matrix::unit(Q, 2, 1, 1).unwrap()]).unwrap();
        assert_eq!(nilpotency_index(&j), Err(Error::NotNilpotent(1)));
    }

    #[test]
    fn missing_identity() {
        let a = span_of(Q, 2, &[Matrix::unit(Q, 2, 1, 2).unwrap()]).unwrap();
        assert_eq!(radical_span(&a), Err(Error::MissingIdentity));
    }

    #[test]
    fn bound_on_example_witness() {
        let r = bound_check(&witness_system(&p8(), Q).unwrap()).unwrap();
        assert_eq!((r.length, r.nilpotency_index), (3, 4));
        assert!(r.bound_holds);
        assert_eq!(r.radical_dim, 8);
    }

    #[test]
    fn bound_on_identity_system() {
        let s = GeneratingSystem::from_labeled(Q, 3, [("I".to_string(), Matrix::identity(Q, 3))], true)
            .unwrap();
        let r = bound_check(&s).unwrap();
        assert_eq!((r.length, r.nilpotency_index, r.radical_dim), (0, 1, 0));
        assert_eq!(r.power_dims, vec![0]);
        assert!(r.bound_holds);
    }
}
