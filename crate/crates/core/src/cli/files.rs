//! JSON wire formats.
//!
//! Matrices travel as sparse `[i, j, "value"]` triples with 1-based indices and
//! string values (an integer or `num/den`), so rationals and residues share one
//! schema. All output is pretty-printed with sorted keys and a trailing newline.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::system::GeneratingSystem;

pub type Entry = (usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub label: String,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSetFile {
    pub n: usize,
    pub field: String,
    pub admit_empty_word: bool,
    pub generators: Vec<GeneratorEntry>,
}

pub fn matrix_entries(m: &Matrix) -> Vec<Entry> {
    m.nonzero_entries().map(|(i, j, v)| (i, j, v.to_string())).collect()
}

impl GeneratorSetFile {
    /// Generators are written sorted by label.
    pub fn from_system(s: &GeneratingSystem) -> GeneratorSetFile {
        let mut generators: Vec<GeneratorEntry> = s
            .members()
            .iter()
            .map(|g| GeneratorEntry { label: g.label.clone(), entries: matrix_entries(&g.matrix) })
            .collect();
        generators.sort_by(|a, b| a.label.cmp(&b.label));
        GeneratorSetFile {
            n: s.n(),
            field: s.field().to_string(),
            admit_empty_word: s.admit_empty_word(),
            generators,
        }
    }

    pub fn parse(text: &str) -> Result<GeneratorSetFile> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("generator file: {e}")))
    }

    pub fn declared_field(&self) -> Result<Field> {
        self.field.parse()
    }

    /// Builds the system, reading values in `field` (the declared field by default).
    pub fn to_system(&self, field: Option<Field>) -> Result<GeneratingSystem> {
        let field = match field {
            Some(f) => f,
            None => self.declared_field()?,
        };
        if self.n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        let mut labels = HashSet::new();
        let mut members = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if !labels.insert(g.label.as_str()) {
                return Err(Error::DuplicateLabel(g.label.clone()));
            }
            let mut seen = HashSet::new();
            let mut entries = Vec::with_capacity(g.entries.len());
            for (i, j, v) in &g.entries {
                if !seen.insert((*i, *j)) {
                    return Err(Error::InvalidInput(format!(
                        "generator `{}` lists ({i}, {j}) twice",
                        g.label
                    )));
                }
                entries.push((*i, *j, Scalar::parse(field, v)?));
            }
            members.push((g.label.clone(), Matrix::from_entries(field, self.n, entries)?));
        }
        GeneratingSystem::from_labeled(field, self.n, members, self.admit_empty_word)
    }
}

/// Sorted-key, pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    // round-trip through Value: its object map is ordered by key
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_bkml, ConstructionParams};

    #[test]
    fn keys_and_labels_are_sorted() {
        let s = build_bkml(&ConstructionParams::new(8, 1, 5, 2).unwrap(), Field::Rational).unwrap();
        let file = GeneratorSetFile::from_system(&s);
        let labels: Vec<_> = file.generators.iter().map(|g| g.label.as_str()).collect();
        assert_eq!(labels, vec!["B1", "B2", "E_1_4", "E_1_8", "E_5_4", "E_5_8", "I"]);
        let text = to_json(&file);
        let a = text.find("\"admit_empty_word\"").unwrap();
        let f = text.find("\"field\"").unwrap();
        let g = text.find("\"generators\"").unwrap();
        let n = text.find("\"n\"").unwrap();
        assert!(a < f && f < g && g < n);
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn rejects_malformed_files() {
        let bad_index = r#"{"n": 2, "field": "rational", "admit_empty_word": true,
            "generators": [{"label": "A", "entries": [[3, 1, "1"]]}]}"#;
        assert!(matches!(
            GeneratorSetFile::parse(bad_index).unwrap().to_system(None),
            Err(Error::IndexOutOfRange { .. })
        ));
        let dup_entry = r#"{"n": 2, "field": "rational", "admit_empty_word": true,
            "generators": [{"label": "A", "entries": [[1, 1, "1"], [1, 1, "2"]]}]}"#;
        assert!(GeneratorSetFile::parse(dup_entry).unwrap().to_system(None).is_err());
        let dup_label = r#"{"n": 2, "field": "rational", "admit_empty_word": true,
            "generators": [{"label": "A", "entries": []}, {"label": "A", "entries": []}]}"#;
        assert_eq!(
            GeneratorSetFile::parse(dup_label).unwrap().to_system(None),
            Err(Error::DuplicateLabel("A".into()))
        );
        let bad_value = r#"{"n": 2, "field": "gf:7", "admit_empty_word": true,
            "generators": [{"label": "A", "entries": [[1, 1, "1/7"]]}]}"#;
        assert!(GeneratorSetFile::parse(bad_value).unwrap().to_system(None).is_err());
        let bad_field = r#"{"n": 2, "field": "gf:9", "admit_empty_word": true, "generators": []}"#;
        assert_eq!(
            GeneratorSetFile::parse(bad_field).unwrap().to_system(None),
            Err(Error::NotPrime(9))
        );
        assert!(GeneratorSetFile::parse("{\"n\": 2}").is_err());
    }

    #[test]
    fn values_are_read_in_the_requested_field() {
        let text = r#"{"n": 2, "field": "rational", "admit_empty_word": false,
            "generators": [{"label": "A", "entries": [[1, 2, "-1/2"]]}]}"#;
        let file = GeneratorSetFile::parse(text).unwrap();
        let q = file.to_system(None).unwrap();
        assert_eq!(q.get("A").unwrap().get(1, 2).unwrap().to_string(), "-1/2");
        let f7 = file.to_system(Some(Field::Prime(7))).unwrap();
        // -1/2 = -4 = 3 mod 7
        assert_eq!(f7.get("A").unwrap().get(1, 2).unwrap().to_string(), "3");
    }
}
