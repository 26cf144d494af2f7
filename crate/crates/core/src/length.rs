//! Word filtrations `L_0 ⊆ L_1 ⊆ …` of a generating system and its length.
//!
//! `L_i(S)` is the span of all words of length at most `i` over `S`. Every word of
//! length `i+1` factors as `g · w` with `g ∈ S` and `|w| = i`, so the chain is grown
//! by left multiplication only, and only by the vectors that entered at the previous
//! step: if `L_i = L_{i-1} + span(F_i)` then `S·L_i ⊆ L_i + S·F_i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::subspace::{Echelon, Subspace};
use crate::system::GeneratingSystem;

pub const DEFAULT_WORD_BUDGET: u64 = 1_000_000;
pub const DEFAULT_SAMPLING_RETRIES: usize = 1000;

/// `ℓ(S)` or the marker for a system whose chain stops short of the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    NotGenerating,
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(v) => s.serialize_u64(*v as u64),
            Length::NotGenerating => s.serialize_str("not generating"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    /// `dim L_0, dim L_1, …, dim L_s` where `s` is the stabilization step.
    pub dims: Vec<usize>,
    /// First `s ≥ 1` with `L_s = L_{s+1}`; the chain is constant from here on.
    pub stabilization_step: usize,
    pub length: Length,
    pub target_dim: usize,
}

/// The full filtration of `S`, one subspace per step, up to and including the
/// stabilization step (and never shorter than `L_0, L_1`).
pub fn filtration(s: &GeneratingSystem) -> Result<Vec<Subspace>> {
    Chain::new(s)?.run()
}

/// Drives the frontier iteration one level at a time.
struct Chain<'a> {
    system: &'a GeneratingSystem,
    echelon: Echelon,
    frontier: Vec<Matrix>,
    level: usize,
}

impl<'a> Chain<'a> {
    fn new(system: &'a GeneratingSystem) -> Result<Chain<'a>> {
        if system.is_empty() && !system.admit_empty_word() {
            return Err(Error::EmptySystem);
        }
        let (field, n) = (system.field(), system.n());
        let mut echelon = Echelon::new(field, n * n);
        let mut frontier = Vec::new();
        if system.admit_empty_word() {
            let id = Matrix::identity(field, n);
            echelon.insert(id.vectorize())?;
            frontier.push(id);
        }
        Ok(Chain { system, echelon, frontier, level: 0 })
    }

    /// Advances to the next level; returns whether the span grew.
    fn step(&mut self) -> Result<bool> {
        let mut next = Vec::new();
        let mut candidates: Vec<Matrix> = Vec::new();
        if self.level == 0 {
            candidates.extend(self.system.matrices().cloned());
        }
        for g in self.system.matrices() {
            for w in &self.frontier {
                candidates.push(g.mul_unchecked(w));
            }
        }
        for c in candidates {
            if self.echelon.insert(c.vectorize())? {
                next.push(c);
            }
        }
        self.level += 1;
        let grew = !next.is_empty();
        self.frontier = next;
        Ok(grew)
    }

    fn run(mut self) -> Result<Vec<Subspace>> {
        let mut levels = vec![self.echelon.to_subspace()];
        loop {
            let grew = self.step()?;
            if !grew && levels.len() >= 2 {
                return Ok(levels);
            }
            levels.push(self.echelon.to_subspace());
            if !grew {
                return Ok(levels);
            }
        }
    }
}

/// Dimensions of the filtration and the length of `S` measured against its own closure.
pub fn li_chain(s: &GeneratingSystem) -> Result<LengthReport> {
    let levels = filtration(s)?;
    let dims: Vec<usize> = levels.iter().map(Subspace::dim).collect();
    let top = *dims.last().expect("nonempty chain");
    let length = dims.iter().position(|&d| d == top).expect("top is attained");
    Ok(LengthReport {
        stabilization_step: dims.len() - 1,
        length: Length::Finite(length),
        target_dim: top,
        dims,
    })
}

/// The full chain report against an explicit `target`.
pub fn length_report(s: &GeneratingSystem, target: &Subspace) -> Result<LengthReport> {
    check_target(s, target)?;
    length_report_unchecked(s, target)
}

/// [`length_report`] for a target already known to be a subalgebra of matching shape.
pub(crate) fn length_report_unchecked(s: &GeneratingSystem, target: &Subspace) -> Result<LengthReport> {
    let levels = filtration(s)?;
    let dims: Vec<usize> = levels.iter().map(Subspace::dim).collect();
    let length = match levels.iter().position(|l| l == target) {
        Some(i) => Length::Finite(i),
        None => Length::NotGenerating,
    };
    Ok(LengthReport {
        stabilization_step: dims.len() - 1,
        length,
        target_dim: target.dim(),
        dims,
    })
}

fn check_target(s: &GeneratingSystem, target: &Subspace) -> Result<()> {
    let width = s.n() * s.n();
    if target.width() != width {
        return Err(Error::DimensionMismatch { left: width, right: target.width() });
    }
    if target.field() != s.field() {
        return Err(Error::FieldMismatch { left: s.field(), right: target.field() });
    }
    if !target.is_multiplicatively_closed()? {
        return Err(Error::NotASubalgebra);
    }
    Ok(())
}

/// `ℓ(S)` with respect to `target`: the least `i` with `L_i(S) = target`.
pub fn length_of_system(s: &GeneratingSystem, target: &Subspace) -> Result<usize> {
    check_target(s, target)?;
    length_unchecked(s, target)
}

pub(crate) fn length_unchecked(s: &GeneratingSystem, target: &Subspace) -> Result<usize> {
    let report = length_report_unchecked(s, target)?;
    match report.length {
        Length::Finite(v) => Ok(v),
        Length::NotGenerating => Err(Error::NotGenerating {
            stabilized: *report.dims.last().expect("nonempty chain"),
            target: target.dim(),
        }),
    }
}

/// The algebra generated by `S`: the span of all words.
pub fn algebra_closure(s: &GeneratingSystem) -> Result<Subspace> {
    Ok(filtration(s)?.pop().expect("nonempty chain"))
}

/// Whether `b^s ∉ L_{s-1}` for every `2 ≤ s ≤ max_power`, where `levels` is a
/// filtration as returned by [`filtration`] (levels past its end equal the last one).
pub fn powers_escape_filtration(levels: &[Subspace], b: &Matrix, max_power: usize) -> Result<bool> {
    let top = levels.last().expect("nonempty chain");
    let mut power = b.clone();
    for s in 2..=max_power {
        power = b.mul(&power)?;
        if levels.get(s - 1).unwrap_or(top).contains(&power)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every word of length `≤ max_len`, in shortlex order of index sequences
/// (the empty word first when admitted, then `g_1, g_2, …, g_1 g_1, g_1 g_2, …`).
///
/// Exponential; intended as a brute-force oracle. Fails with
/// [`Error::BudgetExceeded`] rather than truncating.
pub fn enumerate_words(s: &GeneratingSystem, max_len: usize, budget: u64) -> Result<Vec<Matrix>> {
    let r = s.len() as u128;
    let start = if s.admit_empty_word() { 0 } else { 1 };
    let mut total: u128 = 0;
    for t in start..=max_len {
        total = total.saturating_add(r.saturating_pow(t as u32));
    }
    if total > u128::from(budget) {
        return Err(Error::BudgetExceeded { words: total, budget });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut layer = vec![Matrix::identity(s.field(), s.n())];
    if s.admit_empty_word() {
        out.push(layer[0].clone());
    }
    for _ in 1..=max_len {
        // words of length t+1 are g_i · w with the leading index varying slowest
        let mut next = Vec::with_capacity(layer.len() * s.len());
        for g in s.matrices() {
            for w in &layer {
                next.push(g.mul_unchecked(w));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// Seeded random generating systems of `target`.
///
/// Each sample draws a random invertible recombination of the target basis
/// (rejecting singular draws), keeps a random-size prefix of it, and then appends
/// further recombined vectors that are not yet in the generated algebra until the
/// algebra equals `target`. The empty word is admitted. Samples are independent
/// streams of one seed, so the result does not depend on scheduling.
pub fn sample_generating_systems(
    target: &Subspace,
    count: usize,
    seed: u64,
) -> Result<Vec<GeneratingSystem>> {
    sample_generating_systems_with(target, count, seed, DEFAULT_SAMPLING_RETRIES)
}

pub fn sample_generating_systems_with(
    target: &Subspace,
    count: usize,
    seed: u64,
    max_rejections: usize,
) -> Result<Vec<GeneratingSystem>> {
    let n = target
        .matrix_side()
        .ok_or_else(|| Error::InvalidInput("target is not a matrix subspace".into()))?;
    if !target.contains(&Matrix::identity(target.field(), n))? {
        return Err(Error::MissingIdentity);
    }
    if !target.is_multiplicatively_closed()? {
        return Err(Error::NotASubalgebra);
    }
    (0..count)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64);
            sample_one(target, n, &mut rng, max_rejections)
        })
        .collect()
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => Scalar::from_int(field, rng.gen_range(-3..=3)),
        Field::Prime(p) => Scalar::from_int(field, rng.gen_range(0..p) as i64),
    }
}

fn sample_one(
    target: &Subspace,
    n: usize,
    rng: &mut ChaCha8Rng,
    max_rejections: usize,
) -> Result<GeneratingSystem> {
    let field = target.field();
    let d = target.dim();
    let basis = target.basis();
    let mut rejections = 0;
    let recombined = loop {
        let coeffs: Vec<Vec<Scalar>> =
            (0..d).map(|_| (0..d).map(|_| random_scalar(field, rng)).collect()).collect();
        let rank = crate::subspace::rref(field, d, coeffs.iter().cloned())?.dim();
        if rank == d {
            break coeffs
                .iter()
                .map(|row| {
                    let mut v = vec![Scalar::zero(field); target.width()];
                    for (c, b) in row.iter().zip(basis) {
                        if c.is_zero() {
                            continue;
                        }
                        for (x, y) in v.iter_mut().zip(b) {
                            *x = &*x + &(c * y);
                        }
                    }
                    Matrix::from_vector(field, n, v)
                })
                .collect::<Result<Vec<Matrix>>>()?;
        }
        rejections += 1;
        if rejections >= max_rejections {
            return Err(Error::SamplingExhausted(rejections));
        }
    };

    let prefix = rng.gen_range(1..=d);
    let mut closure = IncrementalClosure::new(field, n)?;
    let mut chosen = Vec::new();
    for (idx, m) in recombined.into_iter().enumerate() {
        if closure.dim() == d && idx >= prefix {
            break;
        }
        if idx >= prefix && closure.contains(&m)? {
            continue;
        }
        closure.add_generator(m.clone())?;
        chosen.push((format!("g{}", chosen.len() + 1), m));
    }
    debug_assert_eq!(closure.dim(), d);
    GeneratingSystem::from_labeled(field, n, chosen, true)
}

/// Unital closure maintained while generators are added one at a time.
///
/// Invariant: the span is closed under left multiplication by every generator added
/// so far. Adding `g` seeds `g` and `g·V`, then propagates the new vectors through
/// all generators.
struct IncrementalClosure {
    echelon: Echelon,
    basis: Vec<Matrix>,
    generators: Vec<Matrix>,
}

impl IncrementalClosure {
    fn new(field: Field, n: usize) -> Result<IncrementalClosure> {
        let id = Matrix::identity(field, n);
        let mut echelon = Echelon::new(field, n * n);
        echelon.insert(id.vectorize())?;
        Ok(IncrementalClosure { echelon, basis: vec![id], generators: Vec::new() })
    }

    fn dim(&self) -> usize {
        self.echelon.rank()
    }

    fn contains(&self, m: &Matrix) -> Result<bool> {
        self.echelon.contains(m.as_slice())
    }

    fn add_generator(&mut self, g: Matrix) -> Result<()> {
        let mut frontier = Vec::new();
        let seeds: Vec<Matrix> = self.basis.iter().map(|b| g.mul_unchecked(b)).collect();
        self.generators.push(g);
        for c in seeds {
            if self.echelon.insert(c.vectorize())? {
                frontier.push(c);
            }
        }
        while !frontier.is_empty() {
            self.basis.extend(frontier.iter().cloned());
            let mut next = Vec::new();
            for h in &self.generators {
                for w in &frontier {
                    let c = h.mul_unchecked(w);
                    if self.echelon.insert(c.vectorize())? {
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        Ok(())
    }
}
