//! Monomials as exponent vectors and monomial-ideal arithmetic.
//!
//! A monomial ideal is stored as the antichain of its minimal monomial
//! generators, canonically ordered, so two ideals are equal exactly when
//! their representations are equal.

use crate::error::{Error, Result};

/// Bound on the number of lattice points any enumeration is allowed to scan.
pub(crate) const BOX_LIMIT: u64 = 1 << 24;

/// A point of the free commutative monoid `N^d`: the monomial
/// `x_0^{a_0} x_1^{a_1} ... x_{d-1}^{a_{d-1}}`.
///
/// The derived `Ord` is lexicographic; divisibility is the componentwise
/// partial order and is queried through [`ExponentVector::divides`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    exps: Vec<u32>,
}

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The monomial `1` (all exponents zero).
    pub fn one(dim: usize) -> Self {
        Self { exps: vec![0; dim] }
    }

    /// The pure power `x_i^e`.
    pub fn axis(dim: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; dim];
        exps[i] = e;
        Self { exps }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree, i.e. the order valuation of the monomial.
    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise `<=`: this monomial divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product of monomials.
    pub fn times(&self, other: &Self) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .ok_or_else(|| Error::TooLarge("exponent overflow in product".into()))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Self { exps })
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn join(&self, other: &Self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Self { exps }
    }

    /// Componentwise `max(self - other, 0)`, the generator of `(self : other)`.
    pub fn quotient_by(&self, other: &Self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Self { exps }
    }
}

/// Keeps only the componentwise-minimal elements, deduplicated.
///
/// A vector can only be dominated by one of strictly smaller total degree
/// (or an equal duplicate), so candidates are bucketed by degree.
pub(crate) fn antichain(mut vecs: Vec<ExponentVector>) -> Vec<ExponentVector> {
    vecs.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then(a.cmp(b)));
    vecs.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    let mut last_degree: Option<u64> = None;
    let mut smaller_prefix = 0usize;
    for v in vecs {
        let deg = v.total_degree();
        if last_degree != Some(deg) {
            smaller_prefix = kept.len();
            last_degree = Some(deg);
        }
        if kept[..smaller_prefix].iter().any(|g| g.divides(&v)) {
            continue;
        }
        kept.push(v);
    }
    kept
}

/// A monomial ideal of a fixed `d`-dimensional regular local ring, given by
/// the antichain of its minimal monomial generators in descending
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds an ideal from any generating set: keeps the minimal generators
    /// and orders them canonically.
    pub fn new(dim: usize, raw: Vec<ExponentVector>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &raw {
            if g.dim() != dim {
                return Err(Error::GeneratorLength {
                    expected: dim,
                    found: g.dim(),
                });
            }
        }
        let mut gens = antichain(raw);
        gens.sort_by(|a, b| b.cmp(a));
        Ok(Self { dim, gens })
    }

    pub fn from_exponents(dim: usize, raw: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(dim, raw.into_iter().map(ExponentVector::new).collect())
    }

    /// The maximal ideal `m = (x_0, ..., x_{d-1})`.
    pub fn maximal(dim: usize) -> Result<Self> {
        Self::new(
            dim,
            (0..dim).map(|i| ExponentVector::axis(dim, i, 1)).collect(),
        )
    }

    /// The unit ideal, represented by the single generator `1`.
    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(dim, vec![ExponentVector::one(dim)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The antichain of minimal generators, descending lexicographic.
    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Monomial membership: some minimal generator divides `a`.
    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: a.dim(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(a)))
    }

    /// Ideal inclusion `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut raw = self.gens.clone();
        raw.extend(other.gens.iter().cloned());
        Self::new(self.dim, raw)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.times(b)?);
            }
        }
        Self::new(self.dim, raw)
    }

    /// Plain `k`-th power; the zeroth power is the unit ideal.
    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(self.dim)?;
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.join(b));
            }
        }
        Self::new(self.dim, raw)
    }

    /// The colon ideal `(self : other)`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let by_g = Self::new(
                self.dim,
                self.gens.iter().map(|h| h.quotient_by(g)).collect(),
            )?;
            acc = Some(match acc {
                None => by_g,
                Some(i) => i.intersect(&by_g)?,
            });
        }
        Ok(acc.expect("antichain is nonempty"))
    }

    /// The order `ord_R(I)`: minimal total degree of a generator.
    pub fn ord(&self) -> u64 {
        self.gens
            .iter()
            .map(ExponentVector::total_degree)
            .min()
            .expect("antichain is nonempty")
    }

    /// Number of minimal generators `μ(I)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// True when the ideal is proper and contains a pure power of every
    /// variable.
    pub fn is_m_primary(&self) -> bool {
        self.is_proper() && self.pure_power_exponents().is_some()
    }

    /// For each variable, the exponent of its pure-power minimal generator.
    ///
    /// `None` when some variable has no pure power among the generators.
    pub fn pure_power_exponents(&self) -> Option<Vec<u32>> {
        let mut out = vec![0u32; self.dim];
        for (i, slot) in out.iter_mut().enumerate() {
            let e = self.gens.iter().find_map(|g| {
                let ok = g.exp(i) >= 1 && (0..self.dim).all(|j| j == i || g.exp(j) == 0);
                ok.then(|| g.exp(i))
            })?;
            *slot = e;
        }
        Some(out)
    }

    /// The index of the ideal: the least `s` with `m^s ⊆ I`.
    ///
    /// Monomials outside an m-primary ideal all lie below its pure-power
    /// generators, so the index is one more than the largest total degree of
    /// a monomial not in the ideal; that box is searched directly.
    pub fn index(&self) -> Result<u64> {
        let pure = self.pure_power_exponents().ok_or(Error::NotMPrimary)?;
        if self.is_unit() {
            return Err(Error::NotMPrimary);
        }
        let mut size = 1u64;
        for &n in &pure {
            size = size
                .checked_mul(u64::from(n))
                .filter(|&s| s <= BOX_LIMIT)
                .ok_or_else(|| Error::TooLarge("index gap box".into()))?;
        }
        let mut cur = vec![0u32; self.dim];
        let mut best: Option<u64> = None;
        loop {
            let v = ExponentVector::new(cur.clone());
            if !self.contains(&v)? {
                let deg = v.total_degree();
                if best.is_none_or(|b| deg > b) {
                    best = Some(deg);
                }
            }
            // mixed-radix increment over the box below the pure powers
            let mut i = 0;
            loop {
                if i == self.dim {
                    let gap = best.expect("1 is outside every proper ideal");
                    return Ok(gap + 1);
                }
                cur[i] += 1;
                if cur[i] < pure[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// All monomials of the given total degree, i.e. the generators of `m^s`.
    pub fn maximal_power(dim: usize, s: u32) -> Result<Self> {
        Self::maximal(dim)?.power(s)
    }
}

/// The pair (index, order) attached to an m-primary ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexOrderPair {
    pub index: u64,
    pub order: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(3, &[&[2, 0, 0], &[2, 1, 0], &[0, 3, 0]]);
        assert_eq!(i.gens().len(), 2);
        assert!(i.gens().contains(&ExponentVector::new(vec![2, 0, 0])));
        assert!(i.gens().contains(&ExponentVector::new(vec![0, 3, 0])));
    }

    #[test]
    fn minimalize_keeps_antichain() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(i.gens().len(), 3);
        assert_eq!(i, MonomialIdeal::maximal(3).unwrap());
    }

    // Brute-force oracle: direct O(n^2) antichain filter, independent of the
    // bucketed implementation.
    fn brute_antichain(vecs: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        'outer: for v in vecs {
            for w in vecs {
                if w != v && w.iter().zip(v).all(|(a, b)| a <= b) {
                    continue 'outer;
                }
            }
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    #[test]
    fn minimalize_of_degree_thirteen_expansion() {
        // (x^12, y^7 z^5) + m^13, minimal generators counted by brute force
        let mut raw: Vec<Vec<u32>> = vec![vec![12, 0, 0], vec![0, 7, 5]];
        for a in 0..=13u32 {
            for b in 0..=13 - a {
                raw.push(vec![a, b, 13 - a - b]);
            }
        }
        let expected = brute_antichain(&raw);
        assert_eq!(expected.len(), 101);
        let i = MonomialIdeal::from_exponents(3, raw).unwrap();
        assert_eq!(i.mu(), expected.len());
        for g in expected {
            assert!(i.gens().contains(&ExponentVector::new(g)));
        }
    }

    #[test]
    fn minimalize_is_idempotent() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[2, 2, 2]]);
        let again = MonomialIdeal::new(3, i.gens().to_vec()).unwrap();
        assert_eq!(i, again);
    }

    #[test]
    fn empty_and_mismatched_inputs_error() {
        assert_eq!(
            MonomialIdeal::from_exponents(3, vec![]).unwrap_err(),
            Error::EmptyGenerators
        );
        assert_eq!(
            MonomialIdeal::from_exponents(3, vec![vec![1, 0]]).unwrap_err(),
            Error::GeneratorLength {
                expected: 3,
                found: 2
            }
        );
        assert_eq!(
            MonomialIdeal::from_exponents(1, vec![vec![1]]).unwrap_err(),
            Error::DimensionTooSmall(1)
        );
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(i.contains(&ExponentVector::new(vec![3, 0, 0])).unwrap());
        assert!(!i.contains(&ExponentVector::new(vec![1, 0, 0])).unwrap());
        // Lipman's example: (x^3,y^3,z^3,xy,xz,yz) contains xy
        let l = ideal(
            3,
            &[
                &[3, 0, 0],
                &[0, 3, 0],
                &[0, 0, 3],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
            ],
        );
        assert!(l.contains(&ExponentVector::new(vec![1, 1, 0])).unwrap());
        assert!(l.contains(&ExponentVector::new(vec![1, 1])).is_err());
    }

    #[test]
    fn product_of_maximal_ideal() {
        let m = MonomialIdeal::maximal(3).unwrap();
        let m2 = m.product(&m).unwrap();
        assert_eq!(m2.mu(), 6);
        assert_eq!(m2, m.power(2).unwrap());
        assert_eq!(m2.ord(), 2);
    }

    #[test]
    fn ord_examples() {
        let l = ideal(
            3,
            &[
                &[3, 0, 0],
                &[0, 3, 0],
                &[0, 0, 3],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
            ],
        );
        assert_eq!(l.ord(), 2);
        assert_eq!(MonomialIdeal::maximal(3).unwrap().ord(), 1);
        assert_eq!(MonomialIdeal::unit(3).unwrap().ord(), 0);
    }

    #[test]
    fn mu_stars_and_bars() {
        // μ(m^r) = C(d + r - 1, r)
        let m4 = MonomialIdeal::maximal_power(3, 4).unwrap();
        assert_eq!(m4.mu(), 15);
        let i = ideal(
            3,
            &[
                &[3, 0, 0],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2],
                &[2, 1, 0],
                &[2, 0, 1],
            ],
        );
        assert_eq!(i.mu(), 6);
    }

    #[test]
    fn primary_detection() {
        assert!(ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]).is_m_primary());
        assert!(!ideal(2, &[&[1, 1]]).is_m_primary());
        assert!(ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]).is_m_primary());
        assert!(!MonomialIdeal::unit(3).unwrap().is_m_primary());
    }

    #[test]
    fn index_examples() {
        assert_eq!(
            MonomialIdeal::maximal_power(3, 4).unwrap().index().unwrap(),
            4
        );
        // (x^{n+1}, y, z) has index n + 1
        let i = ideal(3, &[&[5, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(i.index().unwrap(), 5);
        assert_eq!(i.ord(), 1);
        assert_eq!(
            ideal(2, &[&[1, 1]]).index().unwrap_err(),
            Error::NotMPrimary
        );
    }

    #[test]
    fn index_bounds_ord() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 1, 1]]);
        let (s, r) = (i.index().unwrap(), i.ord());
        assert!(s >= r);
        // m^s ⊆ I ⊆ m^r, both tight
        let ms = MonomialIdeal::maximal_power(3, s as u32).unwrap();
        let mr = MonomialIdeal::maximal_power(3, r as u32).unwrap();
        assert!(i.contains_ideal(&ms).unwrap());
        assert!(mr.contains_ideal(&i).unwrap());
        if s > 1 {
            let ms1 = MonomialIdeal::maximal_power(3, (s - 1) as u32).unwrap();
            assert!(!i.contains_ideal(&ms1).unwrap());
        }
    }

    #[test]
    fn colon_and_product_identities() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]);
        let j = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let q = i.colon(&j).unwrap();
        // (I : J) J ⊆ I and I ⊆ (I : J) for J ⊆ m
        assert!(i.contains_ideal(&q.product(&j).unwrap()).unwrap());
        assert!(q.contains_ideal(&i).unwrap());
    }

    #[test]
    fn intersect_simple() {
        let a = ideal(2, &[&[2, 0]]);
        let b = ideal(2, &[&[0, 3]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[2, 3]]));
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let m = MonomialIdeal::maximal(2).unwrap();
        let exps: Vec<&[u32]> = m.gens().iter().map(|g| g.exps()).collect();
        assert_eq!(exps, vec![&[1, 0][..], &[0, 1][..]]);
    }
}
