//! Verification reports aggregating the maximality, length and radical checks.

use std::time::Instant;

use serde::Serialize;

use crate::commute::{is_maximal_commutative, Counterexample};
use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::length::{
    enumerate_words, filtration, length_of_system, length_unchecked, powers_escape_filtration,
    sample_generating_systems,
};
use crate::radical::{nilpotency_index, power_dims, radical_span};
use crate::scalar::Field;
use crate::subspace::{span_of, Subspace};
use crate::system::GeneratingSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsJson {
    pub family: &'static str,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub k: usize,
}

impl From<&Family> for ParamsJson {
    fn from(f: &Family) -> ParamsJson {
        match f {
            Family::Bkml(p) => ParamsJson { family: "bkml", n: p.n, m: p.m, l: Some(p.l), k: p.k },
            Family::Bkm(p) => ParamsJson { family: "bkm", n: p.n, m: p.m, l: None, k: p.k },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSummary {
    pub count: usize,
    pub seed: u64,
    pub lengths: Vec<usize>,
    pub max_length: Option<usize>,
    pub all_within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: Option<ParamsJson>,
    pub field: String,
    pub algebra_dim: usize,
    pub expected_dim: Option<usize>,
    pub commutative: bool,
    pub maximal: bool,
    pub centralizer_dim: usize,
    pub counterexample: Option<Counterexample>,
    /// `k + 1` for the constructed families, absent for arbitrary input.
    pub length_certified: Option<usize>,
    /// Which system the length was measured on: `witness` or `input`.
    pub measured_system: &'static str,
    pub measured_labels: Vec<String>,
    pub length_witness: Option<usize>,
    pub li_dims: Vec<usize>,
    /// Whether the chain was cross-checked against brute-force word enumeration.
    pub oracle_checked: bool,
    pub powers_escape: Option<bool>,
    pub radical_dim: Option<usize>,
    pub radical_power_dims: Option<Vec<usize>>,
    pub radical_n: Option<usize>,
    pub bound_holds: Option<bool>,
    pub samples: Option<SampleSummary>,
    pub failures: Vec<String>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub word_budget: u64,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { samples: 25, seed: 0, word_budget: crate::length::DEFAULT_WORD_BUDGET }
    }
}

/// Runs every check on a constructed family: maximality of the full generator set,
/// the witness length and its power certificate, the radical index and the length
/// bound for the witness and for sampled systems.
pub fn verify_family(family: &Family, field: Field, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let generators = family.generators(field)?;
    let witness = family.witness(field)?;
    let mut report = verify_parts(&generators, &witness, "witness", opts)?;
    report.params = Some(family.into());
    report.expected_dim = Some(family.expected_dimension()?);
    report.length_certified = Some(family.certified_length());

    let levels = filtration(&witness)?;
    let chains: &[&str] = match family {
        Family::Bkml(_) => &["B1", "B2"],
        Family::Bkm(_) => &["B"],
    };
    let mut escape = true;
    for label in chains {
        let b = witness.get(label).expect("witness contains its chains");
        escape &= powers_escape_filtration(&levels, b, family.k() + 1)?;
    }
    report.powers_escape = Some(escape);

    let k = family.k();
    let mut failures = std::mem::take(&mut report.failures);
    if report.expected_dim != Some(report.algebra_dim) {
        failures.push(format!(
            "algebra dimension {} differs from the closed form {:?}",
            report.algebra_dim, report.expected_dim
        ));
    }
    if report.length_witness != Some(k + 1) {
        failures.push(format!("witness length {:?}, expected {}", report.length_witness, k + 1));
    }
    if report.radical_n.is_some() && report.radical_n != Some(k + 2) {
        failures.push(format!("nilpotency index {:?}, expected {}", report.radical_n, k + 2));
    }
    if !escape {
        failures.push("a chain power lies in a lower filtration level".into());
    }
    report.failures = failures;
    report.passed = report.failures.is_empty();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks an arbitrary system: maximality, its own length and the length bound.
pub fn verify_system(system: &GeneratingSystem, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = verify_parts(system, system, "input", opts)?;
    report.passed = report.failures.is_empty();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn verify_parts(
    generators: &GeneratingSystem,
    measured: &GeneratingSystem,
    measured_name: &'static str,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let mut failures = Vec::new();
    let verdict = is_maximal_commutative(generators)?;
    if !verdict.is_commutative {
        failures.push("generators do not commute".to_string());
    } else if !verdict.is_maximal {
        failures.push(format!(
            "centralizer has dimension {} > algebra dimension {}",
            verdict.centralizer_dim, verdict.algebra_dim
        ));
    }
    let algebra = verdict.algebra.clone();

    let levels = filtration(measured)?;
    let li_dims: Vec<usize> = levels.iter().map(Subspace::dim).collect();
    let oracle_checked = oracle_agrees(measured, &levels, opts.word_budget)?;
    if oracle_checked == Some(false) {
        failures.push("filtration disagrees with word enumeration".into());
    }
    let length_witness = match length_of_system(measured, &algebra) {
        Ok(l) => Some(l),
        Err(Error::NotGenerating { .. }) => {
            failures.push(format!("{measured_name} system does not generate the algebra"));
            None
        }
        Err(Error::NotASubalgebra) => None,
        Err(e) => return Err(e),
    };

    let (mut radical_dim, mut radical_power_dims, mut radical_n, mut bound_holds) =
        (None, None, None, None);
    let mut samples = None;
    match radical_span(&algebra) {
        Ok(j) => {
            let dims = power_dims(&j)?;
            let n = nilpotency_index(&j)?;
            radical_dim = Some(j.dim());
            radical_power_dims = Some(dims);
            radical_n = Some(n);
            if let Some(l) = length_witness {
                bound_holds = Some(l < n);
                if l >= n {
                    failures.push(format!("length {l} exceeds N - 1 = {}", n - 1));
                }
            }
            if opts.samples > 0 {
                let systems = sample_generating_systems(&algebra, opts.samples, opts.seed)?;
                let lengths = systems
                    .iter()
                    // the algebra is a closure, so it is a subalgebra by construction
                    .map(|s| length_unchecked(s, &algebra))
                    .collect::<Result<Vec<usize>>>()?;
                let all_within_bound = lengths.iter().all(|&l| l < n);
                if !all_within_bound {
                    failures.push("a sampled system exceeds N - 1".into());
                }
                samples = Some(SampleSummary {
                    count: lengths.len(),
                    seed: opts.seed,
                    max_length: lengths.iter().copied().max(),
                    lengths,
                    all_within_bound,
                });
            }
        }
        Err(
            e @ (Error::NotLocalForm(_)
            | Error::MissingIdentity
            | Error::NotASubalgebra
            | Error::NotNilpotent(_)),
        ) => failures.push(format!("radical: {e}")),
        Err(e) => return Err(e),
    }

    Ok(VerificationReport {
        params: None,
        field: generators.field().to_string(),
        algebra_dim: verdict.algebra_dim,
        expected_dim: None,
        commutative: verdict.is_commutative,
        maximal: verdict.is_maximal,
        centralizer_dim: verdict.centralizer_dim,
        counterexample: verdict.counterexample,
        length_certified: None,
        measured_system: measured_name,
        measured_labels: measured.labels().map(str::to_string).collect(),
        length_witness,
        li_dims,
        oracle_checked: oracle_checked.is_some(),
        powers_escape: None,
        radical_dim,
        radical_power_dims,
        radical_n,
        bound_holds,
        samples,
        passed: failures.is_empty(),
        failures,
        elapsed_ms: 0,
    })
}

/// Compares each filtration level with the span of enumerated words, when the
/// enumeration fits in `budget`. `None` when it does not.
fn oracle_agrees(s: &GeneratingSystem, levels: &[Subspace], budget: u64) -> Result<Option<bool>> {
    let words = match enumerate_words(s, levels.len() - 1, budget) {
        Ok(w) => w,
        Err(Error::BudgetExceeded { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let r = s.len();
    let mut count = usize::from(s.admit_empty_word());
    let mut layer = 1usize;
    for (i, level) in levels.iter().enumerate() {
        if i > 0 {
            layer *= r;
            count += layer;
        }
        if &span_of(s.field(), s.n(), &words[..count])? != level {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}
