//! Monomial local quadratic transformations.
//!
//! A transform in direction `j` sends the ring to its blowup chart where
//! variable `j` survives and every other variable `w` becomes `w/x_j`.  On
//! exponent vectors the transform of an m-primary ideal of order `r` maps a
//! generator `a` to `a'` with `a'_j = |a| - r` and `a'_k = a_k` otherwise.
//! The complete inverse transform runs the other way: it is the unique
//! complete ideal, not a *-multiple of the maximal ideal, whose transform in
//! the chosen first-neighborhood point is the given ideal.

use crate::error::{Error, Result};
use crate::ideal::{antichain, ExponentVector, MonomialIdeal, BOX_LIMIT};
use crate::newton::{integral_closure, is_complete, WeightVector};

/// Directions of a chain `R_0 ⊂ R_1 ⊂ … ⊂ R_n` of monomial local quadratic
/// transformations; entry `i` is the variable index blown up at step `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectionSequence {
    dim: usize,
    dirs: Vec<usize>,
}

impl DirectionSequence {
    pub fn new(dim: usize, dirs: Vec<usize>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        for &j in &dirs {
            if j >= dim {
                return Err(Error::DirectionOutOfRange { dir: j, dim });
            }
        }
        Ok(Self { dim, dirs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dirs(&self) -> &[usize] {
        &self.dirs
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    /// The subchain `R_from ⊂ … ⊂ R_to`.
    pub fn segment(&self, from: usize, to: usize) -> Result<Self> {
        if from > to || to > self.len() {
            return Err(Error::StageOutOfRange {
                stage: to,
                len: self.len(),
            });
        }
        Self::new(self.dim, self.dirs[from..to].to_vec())
    }
}

/// Integer matrix expressing the original variables as monomials in the
/// variables of the last ring of a chain; row `i` holds the exponents of
/// original variable `i`.  Always unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionMatrix {
    dim: usize,
    rows: Vec<Vec<u64>>,
}

impl ExpansionMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| u64::from(i == j)).collect())
            .collect();
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Total degree of each original variable in the final variables; this
    /// is the weight table of the final order valuation `ord_{R_n}`.
    pub fn row_sums(&self) -> Result<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut acc = 0u64;
                for &x in r {
                    acc = acc
                        .checked_add(x)
                        .ok_or_else(|| Error::TooLarge("expansion degree overflow".into()))?;
                }
                Ok(acc)
            })
            .collect()
    }
}

/// One blowup step in direction `j`, applied on the right:
/// variable `j` stays `e_j`, every other variable `w` becomes `e_w + e_j`.
fn step_apply(rows: &mut [Vec<u64>], j: usize) -> Result<()> {
    for row in rows.iter_mut() {
        let mut extra = 0u64;
        for (w, &e) in row.iter().enumerate() {
            if w != j {
                extra = extra
                    .checked_add(e)
                    .ok_or_else(|| Error::TooLarge("expansion overflow".into()))?;
            }
        }
        row[j] = row[j]
            .checked_add(extra)
            .ok_or_else(|| Error::TooLarge("expansion overflow".into()))?;
    }
    Ok(())
}

/// Composes the substitutions along the chain.
pub fn expansion_matrix(seq: &DirectionSequence) -> Result<ExpansionMatrix> {
    let mut m = ExpansionMatrix::identity(seq.dim());
    for &j in seq.dirs() {
        step_apply(&mut m.rows, j)?;
    }
    Ok(m)
}

/// Inverse expansion: row `i` writes final variable `i` as a Laurent
/// monomial in the original variables.
fn inverse_rows(seq: &DirectionSequence) -> Result<Vec<Vec<i64>>> {
    let d = seq.dim();
    let mut rows: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    // one step inverse: j stays, w becomes e_w - e_j; compose in reverse
    for &j in seq.dirs().iter().rev() {
        for row in rows.iter_mut() {
            let mut extra = 0i64;
            for (w, &e) in row.iter().enumerate() {
                if w != j {
                    extra = extra
                        .checked_add(e)
                        .ok_or_else(|| Error::TooLarge("expansion overflow".into()))?;
                }
            }
            row[j] = row[j]
                .checked_sub(extra)
                .ok_or_else(|| Error::TooLarge("expansion overflow".into()))?;
        }
    }
    Ok(rows)
}

/// Weights of the order valuation `ord_{R_i}` on the original variables.
pub fn ord_weights(seq: &DirectionSequence, stage: usize) -> Result<WeightVector> {
    if stage > seq.len() {
        return Err(Error::StageOutOfRange {
            stage,
            len: seq.len(),
        });
    }
    let prefix = seq.segment(0, stage)?;
    let sums = expansion_matrix(&prefix)?.row_sums()?;
    WeightVector::new(sums)
}

/// Change of direction between the ends of the chain: the original maximal
/// ideal lands inside the square of the final one, i.e. every original
/// variable expands with total degree at least 2.
pub fn is_change_of_direction(seq: &DirectionSequence) -> Result<bool> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(expansion_matrix(seq)?.row_sums()?.iter().all(|&s| s >= 2))
}

/// Whether the last ring of the chain is dominated by the order valuation
/// ring of the first: every final variable, as a Laurent monomial in the
/// original variables, has nonnegative total degree.
pub fn is_proximate(seq: &DirectionSequence) -> Result<bool> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let rows = inverse_rows(seq)?;
    Ok(rows.iter().all(|r| r.iter().sum::<i64>() >= 0))
}

fn check_direction(dim: usize, j: usize) -> Result<()> {
    if j >= dim {
        return Err(Error::DirectionOutOfRange { dir: j, dim });
    }
    Ok(())
}

/// Transform of an m-primary monomial ideal in the first-neighborhood point
/// of direction `j`: divide the extension by `x_j^{ord}`.  The result is the
/// unit ideal or a monomial ideal of the next ring.
pub fn transform_dir(ideal: &MonomialIdeal, j: usize) -> Result<MonomialIdeal> {
    check_direction(ideal.dim(), j)?;
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let r = ideal.ord();
    let gens = ideal
        .gens()
        .iter()
        .map(|a| {
            let mut exps = a.exps().to_vec();
            let lifted = a.total_degree() - r;
            exps[j] = u32::try_from(lifted)
                .map_err(|_| Error::TooLarge("transform exponent overflow".into()))?;
            Ok(ExponentVector::new(exps))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.dim(), gens)
}

/// `δ(I_1)` in direction `j`: the largest excess of the non-`j` degree over
/// the `j`-exponent among the minimal generators.  For complete ideals this
/// equals the largest pure-power exponent of the non-`j` variables.
pub fn delta(ideal: &MonomialIdeal, j: usize) -> Result<u64> {
    check_direction(ideal.dim(), j)?;
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let best = ideal
        .gens()
        .iter()
        .map(|a| {
            let rest: i64 = a
                .exps()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, &e)| i64::from(e))
                .sum();
            rest - i64::from(a.exp(j))
        })
        .max()
        .expect("antichain is nonempty");
    Ok(u64::try_from(best.max(0)).unwrap())
}

/// Generators of the inverse-transform seed ideal: `x_j^δ · Δ(I_1)` written
/// back in the lower ring, together with the pure powers `w^δ` of every
/// other variable.
fn cit_seed(ideal: &MonomialIdeal, j: usize, d_val: u64) -> Result<Vec<ExponentVector>> {
    let d = ideal.dim();
    let mut gens = Vec::with_capacity(ideal.mu() + d - 1);
    for a in ideal.gens() {
        let rest: u64 = a
            .exps()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, &e)| u64::from(e))
            .sum();
        let down = d_val + u64::from(a.exp(j)) - rest;
        let mut exps = a.exps().to_vec();
        exps[j] = u32::try_from(down)
            .map_err(|_| Error::TooLarge("inverse transform exponent overflow".into()))?;
        gens.push(ExponentVector::new(exps));
    }
    let delta32 = u32::try_from(d_val).map_err(|_| Error::TooLarge("delta overflow".into()))?;
    for w in 0..d {
        if w != j {
            gens.push(ExponentVector::axis(d, w, delta32));
        }
    }
    Ok(gens)
}

/// The complete inverse transform of a complete m-primary monomial ideal in
/// direction `j`: the integral closure of the seed ideal.
pub fn cit(ideal: &MonomialIdeal, j: usize) -> Result<MonomialIdeal> {
    check_direction(ideal.dim(), j)?;
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    if !is_complete(ideal)? {
        return Err(Error::NotComplete);
    }
    cit_known_complete(ideal, j)
}

/// [`cit`] without the completeness check, for callers holding an ideal that
/// is a closure by construction.
pub(crate) fn cit_known_complete(ideal: &MonomialIdeal, j: usize) -> Result<MonomialIdeal> {
    let d_val = delta(ideal, j)?;
    let seed = MonomialIdeal::new(ideal.dim(), cit_seed(ideal, j, d_val)?)?;
    integral_closure(&seed)
}

/// The complete inverse transform computed by the membership route: a
/// monomial lies in the result iff its total degree is at least `δ` and its
/// pullback lies in the input ideal.  Serves as an independent check of
/// [`cit`].
pub fn cit_via_membership(ideal: &MonomialIdeal, j: usize) -> Result<MonomialIdeal> {
    check_direction(ideal.dim(), j)?;
    let pure = ideal.pure_power_exponents().ok_or(Error::NotMPrimary)?;
    if ideal.is_unit() {
        return Err(Error::NotMPrimary);
    }
    if !is_complete(ideal)? {
        return Err(Error::NotComplete);
    }
    let d = ideal.dim();
    let d_val = delta(ideal, j)?;
    // minimal generators fit in the box: non-j exponents at most δ, the
    // j-exponent at most n_j + δ
    let mut bounds = vec![d_val; d];
    bounds[j] = d_val + u64::from(pure[j]);
    let mut size = 1u64;
    for &b in &bounds {
        size = size
            .checked_mul(b + 1)
            .filter(|&s| s <= BOX_LIMIT)
            .ok_or_else(|| Error::TooLarge("inverse transform box".into()))?;
    }
    let bounds: Vec<u32> = bounds
        .iter()
        .map(|&b| u32::try_from(b).map_err(|_| Error::TooLarge("delta overflow".into())))
        .collect::<Result<_>>()?;
    let mut members = Vec::new();
    let mut cur = vec![0u32; d];
    loop {
        let point = ExponentVector::new(cur.clone());
        let deg = point.total_degree();
        if deg >= d_val {
            // pullback: the j-exponent becomes |a| - δ
            let mut up = cur.clone();
            up[j] = u32::try_from(deg - d_val)
                .map_err(|_| Error::TooLarge("inverse transform overflow".into()))?;
            if ideal.contains(&ExponentVector::new(up))? {
                members.push(point);
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                let gens = antichain(members);
                return MonomialIdeal::new(d, gens);
            }
            cur[i] += 1;
            if cur[i] <= bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}
