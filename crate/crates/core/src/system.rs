use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub matrix: Matrix,
}

/// An ordered, labeled set of generators in `M_n(F)`.
///
/// When `admit_empty_word` is set the identity counts as the word of length 0, so
/// unital algebras do not need to list `E_n` explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSystem {
    field: Field,
    n: usize,
    members: Vec<Generator>,
    admit_empty_word: bool,
}

impl GeneratingSystem {
    pub fn new(
        field: Field,
        n: usize,
        members: Vec<Generator>,
        admit_empty_word: bool,
    ) -> Result<GeneratingSystem> {
        let mut seen = HashSet::new();
        for g in &members {
            if g.matrix.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.matrix.n() });
            }
            if g.matrix.field() != field {
                return Err(Error::FieldMismatch { left: field, right: g.matrix.field() });
            }
            if !seen.insert(g.label.as_str()) {
                return Err(Error::DuplicateLabel(g.label.clone()));
            }
        }
        Ok(GeneratingSystem { field, n, members, admit_empty_word })
    }

    /// Convenience constructor from `(label, matrix)` pairs.
    pub fn from_labeled(
        field: Field,
        n: usize,
        members: impl IntoIterator<Item = (String, Matrix)>,
        admit_empty_word: bool,
    ) -> Result<GeneratingSystem> {
        let members = members
            .into_iter()
            .map(|(label, matrix)| Generator { label, matrix })
            .collect();
        GeneratingSystem::new(field, n, members, admit_empty_word)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn admit_empty_word(&self) -> bool {
        self.admit_empty_word
    }

    pub fn members(&self) -> &[Generator] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(|g| g.label.as_str())
    }

    pub fn matrices(&self) -> impl Iterator<Item = &Matrix> {
        self.members.iter().map(|g| &g.matrix)
    }

    pub fn get(&self, label: &str) -> Option<&Matrix> {
        self.members.iter().find(|g| g.label == label).map(|g| &g.matrix)
    }

    /// Appends a generator, rejecting a clashing label or shape.
    pub fn push(&mut self, label: impl Into<String>, matrix: Matrix) -> Result<()> {
        let label = label.into();
        if matrix.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: matrix.n() });
        }
        if matrix.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field, right: matrix.field() });
        }
        if self.get(&label).is_some() {
            return Err(Error::DuplicateLabel(label));
        }
        self.members.push(Generator { label, matrix });
        Ok(())
    }
}
