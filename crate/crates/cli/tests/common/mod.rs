//! Shared helpers for the acceptance suite: deterministic random ideals and
//! small combinatorial utilities.
#![allow(dead_code)] // each test binary uses its own slice of these

use rand::Rng;
use startrans_core::*;

pub fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(dim, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

pub fn ev(exps: &[u32]) -> ExponentVector {
    ExponentVector::new(exps.to_vec())
}

pub fn seq(dim: usize, dirs: &[usize]) -> DirectionSequence {
    DirectionSequence::new(dim, dirs.to_vec()).unwrap()
}

/// Random m-primary monomial ideal: pure powers in every variable plus a few
/// mixed generators.
pub fn random_m_primary<R: Rng>(rng: &mut R, d: usize, max_exp: u32) -> MonomialIdeal {
    let mut gens: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut v = vec![0u32; d];
            v[i] = rng.gen_range(1..=max_exp);
            v
        })
        .collect();
    for _ in 0..rng.gen_range(0..=d) {
        let extra: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=max_exp)).collect();
        if extra.iter().any(|&e| e > 0) {
            gens.push(extra);
        }
    }
    MonomialIdeal::from_exponents(d, gens).unwrap()
}

pub fn random_complete<R: Rng>(rng: &mut R, d: usize, max_exp: u32) -> MonomialIdeal {
    integral_closure(&random_m_primary(rng, d, max_exp)).unwrap()
}

/// Draws a dimension from {2, 3, 4} with matching exponent budget, biased
/// away from the expensive four-dimensional cases.
pub fn random_shape<R: Rng>(rng: &mut R) -> (usize, u32) {
    match rng.gen_range(0..5) {
        0 | 1 => (2, 6),
        2 | 3 => (3, 5),
        _ => (4, 3),
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All direction sequences of the given length with a change of direction at
/// every consecutive pair (adjacent directions distinct).
pub fn alternating_sequences(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..d).map(|j| vec![j]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for s in &out {
            for j in 0..d {
                if j != *s.last().unwrap() {
                    let mut t = s.clone();
                    t.push(j);
                    next.push(t);
                }
            }
        }
        out = next;
    }
    out
}
