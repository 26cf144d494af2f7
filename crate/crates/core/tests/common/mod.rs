//! Independent brute-force oracle over GF(p) on plain `u64` arrays.
//!
//! Shares no code with the library beyond reading matrix entries, so agreement with
//! it is evidence rather than tautology.

#![allow(dead_code)]

use commalg::constructions::{BkmParams, ConstructionParams, Family};
use commalg::{GeneratingSystem, Matrix};

pub const ORACLE_P: u64 = 32003;

pub type Dense = Vec<u64>;

pub fn to_dense(m: &Matrix, p: u64) -> Dense {
    m.as_slice()
        .iter()
        .map(|x| {
            let v = x.to_i64().expect("integer entries");
            v.rem_euclid(p as i64) as u64
        })
        .collect()
}

pub fn identity(n: usize) -> Dense {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub fn mul(a: &Dense, b: &Dense, n: usize, p: u64) -> Dense {
    let mut c = vec![0u64; n * n];
    for i in 0..n {
        for t in 0..n {
            let x = a[i * n + t];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] = (c[i * n + j] + x * b[t * n + j]) % p;
            }
        }
    }
    c
}

fn inv(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut e, mut r) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// Row-echelon basis accumulated one vector at a time.
#[derive(Clone)]
pub struct Basis {
    p: u64,
    rows: Vec<(usize, Dense)>,
}

impl Basis {
    pub fn new(p: u64) -> Basis {
        Basis { p, rows: Vec::new() }
    }

    fn reduce(&self, mut v: Dense) -> Dense {
        for (piv, r) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + self.p - c * y % self.p) % self.p;
                }
            }
        }
        v
    }

    pub fn insert(&mut self, v: Dense) -> bool {
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let c = inv(v[piv], self.p);
        for x in v.iter_mut() {
            *x = *x * c % self.p;
        }
        self.rows.push((piv, v));
        true
    }

    pub fn contains(&self, v: &Dense) -> bool {
        self.reduce(v.clone()).iter().all(|&x| x == 0)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Dense> {
        self.rows.iter().map(|(_, r)| r)
    }
}

/// `dim L_0, dim L_1, …` up to and including the first step where the chain stops
/// growing (at least two entries), by left-multiplying a basis of each level.
pub fn filtration_dims(gens: &[Dense], n: usize, admit_empty: bool, p: u64) -> Vec<usize> {
    let mut level = Basis::new(p);
    if admit_empty {
        level.insert(identity(n));
    }
    let mut dims = vec![level.dim()];
    // L_1 adds the generators themselves
    let mut next = level.clone();
    for g in gens {
        next.insert(g.clone());
    }
    loop {
        dims.push(next.dim());
        if next.dim() == level.dim() {
            return dims;
        }
        level = next;
        next = level.clone();
        let current: Vec<Dense> = level.vectors().cloned().collect();
        for g in gens {
            for v in &current {
                next.insert(mul(g, v, n, p));
            }
        }
    }
}

/// The same chain as [`filtration_dims`] without the repeated last entry.
pub fn chain_dims(gens: &[Dense], n: usize, admit_empty: bool, p: u64) -> Vec<usize> {
    let mut dims = filtration_dims(gens, n, admit_empty, p);
    if dims.len() > 2 {
        dims.pop();
    }
    dims
}

pub fn closure(gens: &[Dense], n: usize, admit_empty: bool, p: u64) -> Basis {
    let mut level = Basis::new(p);
    if admit_empty {
        level.insert(identity(n));
    }
    for g in gens {
        level.insert(g.clone());
    }
    loop {
        let before = level.dim();
        let current: Vec<Dense> = level.vectors().cloned().collect();
        for g in gens {
            for v in &current {
                level.insert(mul(g, v, n, p));
            }
        }
        if level.dim() == before {
            return level;
        }
    }
}

/// `n² - rank` of the stacked linear maps `X ↦ XG - GX`.
pub fn centralizer_dim(gens: &[Dense], n: usize, p: u64) -> usize {
    let mut eqs = Basis::new(p);
    for g in gens {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0u64; n * n];
                for c in 0..n {
                    row[i * n + c] = (row[i * n + c] + g[c * n + j]) % p;
                    row[c * n + j] = (row[c * n + j] + p - g[i * n + c]) % p;
                }
                eqs.insert(row);
            }
        }
    }
    n * n - eqs.dim()
}

pub fn system_dense(s: &GeneratingSystem, p: u64) -> Vec<Dense> {
    s.matrices().map(|m| to_dense(m, p)).collect()
}

/// Every valid `B_{k,m,l}` with `n ≤ max_n`.
pub fn bkml_grid(max_n: usize) -> Vec<ConstructionParams> {
    (1..=max_n).flat_map(ConstructionParams::all_for_side).collect()
}

pub fn bkm_grid(max_n: usize) -> Vec<BkmParams> {
    (1..=max_n).flat_map(BkmParams::all_for_side).collect()
}

pub fn spot_n12() -> Vec<ConstructionParams> {
    [(12, 1, 5, 2), (12, 2, 7, 3), (12, 3, 6, 1), (12, 1, 7, 4)]
        .into_iter()
        .map(|(n, m, l, k)| ConstructionParams::new(n, m, l, k).unwrap())
        .collect()
}

pub fn all_families(max_n: usize) -> Vec<Family> {
    bkml_grid(max_n)
        .into_iter()
        .map(Family::Bkml)
        .chain(bkm_grid(max_n).into_iter().map(Family::Bkm))
        .collect()
}
