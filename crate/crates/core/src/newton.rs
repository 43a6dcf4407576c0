//! Newton polyhedra of monomial ideals: integral closure, completeness,
//! *-products and Rees valuations.
//!
//! The Newton polyhedron of `I` is `conv(Δ(I)) + R_{>=0}^d`; the integral
//! closure of `I` is exactly the set of lattice points of that polyhedron.
//! Membership is decided without any floating point or external solver:
//! a point lies in the polyhedron iff it dominates a convex combination of
//! at most `d + 1` generators (Carathéodory), and each such candidate
//! combination is checked by exact integer elimination on a small linear
//! system.

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, BOX_LIMIT};
use crate::solve::{self, MAX_K};

/// Facet enumeration is restricted to ambient dimensions up to this bound
/// unless overridden; general convex hulls in high dimension are out of
/// scope.
pub const DEFAULT_FACET_DIM_LIMIT: usize = 4;

/// Default exponent bound `K` for the bounded power test
/// [`power_test_membership`].
pub const DEFAULT_POWER_TEST_BOUND: u32 = 8;

/// A monomial valuation: positive integer weights on the `d` variables.
///
/// Its value on a monomial is the weighted degree, and on an ideal the
/// minimum over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    weights: Vec<u64>,
}

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::DimensionTooSmall(weights.len()));
        }
        Ok(Self { weights })
    }

    /// The coordinate valuation `x_i`-adic direction as a facet normal.
    pub fn axis(dim: usize, i: usize) -> Self {
        let mut weights = vec![0; dim];
        weights[i] = 1;
        Self { weights }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Weighted degree of a monomial.
    pub fn value(&self, a: &ExponentVector) -> Result<u64> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: a.dim(),
            });
        }
        let mut acc: u128 = 0;
        for (w, e) in self.weights.iter().zip(a.exps()) {
            acc += u128::from(*w) * u128::from(*e);
        }
        u64::try_from(acc).map_err(|_| Error::TooLarge("weight value overflow".into()))
    }

    /// Value on an ideal: minimum over the minimal generators.
    pub fn value_on_ideal(&self, ideal: &MonomialIdeal) -> Result<u64> {
        let mut best = u64::MAX;
        for g in ideal.gens() {
            best = best.min(self.value(g)?);
        }
        Ok(best)
    }
}

fn entry_guard(vs: &[&[u32]]) -> Result<()> {
    for v in vs {
        for &e in *v {
            if i128::from(e) > solve::ENTRY_LIMIT {
                return Err(Error::TooLarge(format!(
                    "exponent {e} exceeds the exact-solver bound"
                )));
            }
        }
    }
    Ok(())
}

/// Carathéodory membership of `a` in `conv(gens) + R_{>=0}^d`.
///
/// A feasible point exists iff some vertex of the polytope
/// `{λ >= 0, Σλ = 1, Σ λ_i v_i <= a}` does, and every vertex is cut out by a
/// nonsingular square subsystem built from at most `d + 1` generators and a
/// set of tight coordinates.  All candidate subsystems are solved exactly by
/// Cramer's rule over the integers.
fn member(gens: &[ExponentVector], a: &ExponentVector) -> Result<bool> {
    Ok(member_witness(gens, a)?.is_some())
}

/// A feasible basis certifying membership: a generator subset and the tight
/// coordinates that cut out the witnessing convex combination.  A witness
/// found for one query point usually certifies its neighbours on the same
/// facet, so callers scanning many points keep a small cache of them.
#[derive(Debug, Clone)]
struct Witness {
    sel: Vec<usize>,
    tight: Vec<usize>,
    with_norm: bool,
}

/// Re-solves a cached basis for a new query point; exact in both directions.
fn witness_certifies(gens: &[ExponentVector], a: &ExponentVector, w: &Witness) -> Result<bool> {
    if w.sel.iter().any(|&gi| gi >= gens.len()) {
        return Ok(false);
    }
    if w.sel.len() == 1 {
        return Ok(gens[w.sel[0]].divides(a));
    }
    solve_basis(gens, a, &w.sel, &w.tight, w.with_norm, a.dim())
}

/// Feasibility of one candidate basis: the square system of the tight
/// coordinates (plus the normalization row when `with_norm`), solved by
/// Cramer's rule; on success every coordinate of the combination is checked
/// against `a`.
fn solve_basis(
    gens: &[ExponentVector],
    a: &ExponentVector,
    sel: &[usize],
    tight: &[usize],
    with_norm: bool,
    d: usize,
) -> Result<bool> {
    let k = sel.len();
    let overflow = || Error::TooLarge("membership verification overflow".into());
    let mut m = [[0i128; MAX_K]; MAX_K];
    let mut b = [0i128; MAX_K];
    for (r, &c) in tight.iter().enumerate() {
        for (col, &gi) in sel.iter().enumerate() {
            m[r][col] = i128::from(gens[gi].exp(c));
        }
        b[r] = i128::from(a.exp(c));
    }
    if with_norm {
        for cell in m[k - 1].iter_mut().take(k) {
            *cell = 1;
        }
        b[k - 1] = 1;
    }
    let (det, nums) = solve::cramer(&m, &b, k)?;
    if det == 0 {
        return Ok(false);
    }
    let sign = det.signum();
    // λ_i >= 0
    if nums[..k].iter().any(|&n| n * sign < 0) {
        return Ok(false);
    }
    // Σ λ_i = 1
    if !with_norm {
        let total: i128 = nums[..k].iter().sum();
        if total != det {
            return Ok(false);
        }
    }
    // every coordinate satisfied: Σ λ_i v_i[c] <= a[c]
    for c in 0..d {
        let mut lhs: i128 = 0;
        for (i, &gi) in sel.iter().enumerate() {
            lhs = lhs
                .checked_add(
                    nums[i]
                        .checked_mul(i128::from(gens[gi].exp(c)))
                        .ok_or_else(overflow)?,
                )
                .ok_or_else(overflow)?;
        }
        let rhs = det.checked_mul(i128::from(a.exp(c))).ok_or_else(overflow)?;
        let ok = if det > 0 { lhs <= rhs } else { lhs >= rhs };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Precomputed minima of a battery of nonnegative functionals over a
/// generating set.  Every line is a valid inequality of the polyhedron, so a
/// violated line certifies non-membership without running the exact search;
/// the battery never certifies membership.
struct Battery {
    lines: Vec<(Vec<u64>, u128)>,
}

impl Battery {
    const WEIGHTS: [u64; 10] = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89];

    fn new(gens: &[ExponentVector]) -> Self {
        let d = gens[0].dim();
        let mut lines = Vec::new();
        if d <= 4 {
            let mut w = vec![0usize; d];
            loop {
                let line: Vec<u64> = w.iter().map(|&i| Self::WEIGHTS[i]).collect();
                let min = gens
                    .iter()
                    .map(|v| {
                        (0..d)
                            .map(|c| u128::from(line[c]) * u128::from(v.exp(c)))
                            .sum::<u128>()
                    })
                    .min()
                    .expect("nonempty");
                lines.push((line, min));
                let mut i = 0;
                while i < d {
                    w[i] += 1;
                    if w[i] < Self::WEIGHTS.len() {
                        break;
                    }
                    w[i] = 0;
                    i += 1;
                }
                if i == d {
                    break;
                }
            }
        }
        Self { lines }
    }

    fn rejects(&self, a: &ExponentVector) -> bool {
        let d = a.dim();
        self.lines.iter().any(|(line, min)| {
            let val: u128 = (0..d)
                .map(|c| u128::from(line[c]) * u128::from(a.exp(c)))
                .sum();
            val < *min
        })
    }
}

/// Full Carathéodory search; returns the witnessing basis when `a` lies in
/// the polyhedron.
fn member_witness(gens: &[ExponentVector], a: &ExponentVector) -> Result<Option<Witness>> {
    let d = a.dim();
    // quick accept: a is a multiple of a generator (the k = 1 bases)
    if let Some(i) = gens.iter().position(|g| g.divides(a)) {
        return Ok(Some(Witness {
            sel: vec![i],
            tight: Vec::new(),
            with_norm: true,
        }));
    }
    // quick rejects: valid inequalities of the polyhedron
    let deg = a.total_degree();
    if deg
        < gens
            .iter()
            .map(ExponentVector::total_degree)
            .min()
            .unwrap_or(0)
    {
        return Ok(None);
    }
    for c in 0..d {
        if gens.iter().map(|g| g.exp(c)).min().unwrap_or(0) > a.exp(c) {
            return Ok(None);
        }
    }
    // coordinates where a dominates every generator are never binding, so
    // they never appear in a tight set
    let active: Vec<usize> = (0..d)
        .filter(|&c| gens.iter().any(|g| g.exp(c) > a.exp(c)))
        .collect();
    let dd = active.len();
    let n = gens.len();
    let mut found: Option<Witness> = None;
    for k in 2..=(dd + 1).min(n).min(MAX_K - 1) {
        solve::any_combination(n, k, |sel| {
            for with_norm in [true, false] {
                let tight = if with_norm { k - 1 } else { k };
                if tight > dd {
                    continue;
                }
                solve::any_combination(dd, tight, |tsel| {
                    let coords: Vec<usize> = tsel.iter().map(|&t| active[t]).collect();
                    if solve_basis(gens, a, sel, &coords, with_norm, d)? {
                        found = Some(Witness {
                            sel: sel.to_vec(),
                            tight: coords,
                            with_norm,
                        });
                        return Ok(true);
                    }
                    Ok(false)
                })?;
                if found.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        })?;
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

/// Membership of the monomial `a` in the Newton polyhedron of `I`, i.e. in
/// the integral closure of `I`.
pub fn in_newton_polyhedron(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<bool> {
    if a.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            left: ideal.dim(),
            right: a.dim(),
        });
    }
    let mut rows: Vec<&[u32]> = ideal.gens().iter().map(ExponentVector::exps).collect();
    rows.push(a.exps());
    entry_guard(&rows)?;
    member(ideal.gens(), a)
}

/// Shrinks a generating set to a small subset spanning the same polyhedron.
///
/// Seeds with generators minimizing a battery of strictly positive
/// functionals, lexicographically tie-broken: each such minimizer is a
/// vertex of the polyhedron, so it can never be redundant.  A build pass
/// then adds every remaining generator not already in the hull of the kept
/// set, and a filter pass drops the non-seed survivors that became
/// redundant.  Every skipped or dropped element was verified to lie in the
/// polyhedron of the kept ones, so the polyhedron is unchanged.
fn vertex_reduce(gens: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    let d = gens[0].dim();
    let mut kept: Vec<ExponentVector> = Vec::new();

    // rotated lexicographic minima (pure corners)
    for rot in 0..d {
        let best = gens
            .iter()
            .min_by(|a, b| {
                let ka: Vec<u32> = (0..d).map(|i| a.exp((i + rot) % d)).collect();
                let kb: Vec<u32> = (0..d).map(|i| b.exp((i + rot) % d)).collect();
                ka.cmp(&kb)
            })
            .expect("nonempty");
        if !kept.contains(best) {
            kept.push(best.clone());
        }
    }
    // weighted minima over a lattice of positive weights; the tie-break by
    // lex order keeps the minimizer a genuine vertex
    const WEIGHTS: [u64; 8] = [1, 2, 3, 5, 8, 13, 21, 34];
    if d <= 4 {
        let mut w = vec![0usize; d];
        loop {
            let best = gens
                .iter()
                .min_by(|a, b| {
                    let va: u128 = (0..d)
                        .map(|i| u128::from(WEIGHTS[w[i]]) * u128::from(a.exp(i)))
                        .sum();
                    let vb: u128 = (0..d)
                        .map(|i| u128::from(WEIGHTS[w[i]]) * u128::from(b.exp(i)))
                        .sum();
                    va.cmp(&vb).then_with(|| a.cmp(b))
                })
                .expect("nonempty");
            if !kept.contains(best) {
                kept.push(best.clone());
            }
            let mut i = 0;
            while i < d {
                w[i] += 1;
                if w[i] < WEIGHTS.len() {
                    break;
                }
                w[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    let seeds = kept.len();

    let mut order: Vec<&ExponentVector> = gens.iter().collect();
    order.sort_by_key(|g| g.total_degree());
    // the battery turns "clearly outside the current hull" into a cheap
    // test, the witness cache does the same for "inside along a known facet"
    let mut battery = Battery::new(&kept);
    let mut cache: Vec<Witness> = Vec::new();
    'build: for g in order {
        if kept.contains(g) {
            continue;
        }
        if battery.rejects(g) {
            kept.push(g.clone());
            battery = Battery::new(&kept);
            continue;
        }
        for i in 0..cache.len() {
            if witness_certifies(&kept, g, &cache[i])? {
                let w = cache.remove(i);
                cache.insert(0, w);
                continue 'build;
            }
        }
        match member_witness(&kept, g)? {
            Some(w) => {
                cache.insert(0, w);
                cache.truncate(12);
            }
            None => {
                kept.push(g.clone());
                battery = Battery::new(&kept);
            }
        }
    }
    // filter pass over the non-seed survivors
    let mut i = seeds;
    while i < kept.len() {
        let v = kept.remove(i);
        if member(&kept, &v)? {
            continue;
        }
        kept.insert(i, v);
        i += 1;
    }
    Ok(kept)
}

struct FaceBox {
    bounds: Vec<u32>,
}

impl FaceBox {
    fn next(&self, p: &mut [u32]) -> bool {
        for i in (0..p.len()).rev() {
            if p[i] < self.bounds[i] {
                p[i] += 1;
                return true;
            }
            p[i] = 0;
        }
        false
    }
}

/// Exact minimum of the fiber coordinate over the polyhedron points with
/// the given exponents in the other coordinates, rounded up to an integer;
/// `None` when the profile lies outside the shadow of the polyhedron.
///
/// This is a tiny linear program over the convex multipliers.  Its optimum
/// is attained at a basic solution cut out by at most `d` generators, every
/// candidate basis is solved exactly by Cramer's rule, and rounding commutes
/// with the minimum, so only ceiled values are ever compared.
fn fiber_minimum(verts: &[ExponentVector], fiber: usize, profile: &[u32]) -> Result<Option<u64>> {
    let d = verts[0].dim();
    let coords: Vec<usize> = (0..d).filter(|&c| c != fiber).collect();
    let profile_at = |c: usize| -> u32 {
        let pos = coords
            .iter()
            .position(|&cc| cc == c)
            .expect("profile coord");
        profile[pos]
    };
    let active: Vec<usize> = coords
        .iter()
        .copied()
        .filter(|&c| verts.iter().any(|v| v.exp(c) > profile_at(c)))
        .collect();
    let n = verts.len();
    let mut best: Option<u64> = None;

    // single-generator bases
    for v in verts {
        if active.iter().all(|&c| v.exp(c) <= profile_at(c)) {
            let x = u64::from(v.exp(fiber));
            if best.is_none_or(|b| x < b) {
                best = Some(x);
            }
        }
    }

    let overflow = || Error::TooLarge("fiber minimum overflow".into());
    for k in 2..=(active.len() + 1).min(n).min(MAX_K - 1) {
        solve::any_combination(n, k, |sel| {
            for with_norm in [true, false] {
                let tight = if with_norm { k - 1 } else { k };
                if tight > active.len() {
                    continue;
                }
                solve::any_combination(active.len(), tight, |tsel| {
                    let mut m = [[0i128; MAX_K]; MAX_K];
                    let mut b = [0i128; MAX_K];
                    for (r, &ti) in tsel.iter().enumerate() {
                        let c = active[ti];
                        for (col, &gi) in sel.iter().enumerate() {
                            m[r][col] = i128::from(verts[gi].exp(c));
                        }
                        b[r] = i128::from(profile_at(c));
                    }
                    if with_norm {
                        for cell in m[k - 1].iter_mut().take(k) {
                            *cell = 1;
                        }
                        b[k - 1] = 1;
                    }
                    let (det, nums) = solve::cramer(&m, &b, k)?;
                    if det == 0 {
                        return Ok(false);
                    }
                    let sign = det.signum();
                    if nums[..k].iter().any(|&v| v * sign < 0) {
                        return Ok(false);
                    }
                    if !with_norm {
                        let total: i128 = nums[..k].iter().sum();
                        if total != det {
                            return Ok(false);
                        }
                    }
                    for &c in &active {
                        let mut lhs: i128 = 0;
                        for (i, &gi) in sel.iter().enumerate() {
                            lhs = lhs
                                .checked_add(
                                    nums[i]
                                        .checked_mul(i128::from(verts[gi].exp(c)))
                                        .ok_or_else(overflow)?,
                                )
                                .ok_or_else(overflow)?;
                        }
                        let rhs = det
                            .checked_mul(i128::from(profile_at(c)))
                            .ok_or_else(overflow)?;
                        let ok = if det > 0 { lhs <= rhs } else { lhs >= rhs };
                        if !ok {
                            return Ok(false);
                        }
                    }
                    // feasible basic solution: ceil of its fiber value
                    let mut num: i128 = 0;
                    for (i, &gi) in sel.iter().enumerate() {
                        num = num
                            .checked_add(
                                nums[i]
                                    .checked_mul(i128::from(verts[gi].exp(fiber)))
                                    .ok_or_else(overflow)?,
                            )
                            .ok_or_else(overflow)?;
                    }
                    let den = det * sign;
                    let num = num * sign;
                    debug_assert!(num >= 0 && den > 0);
                    let ceiled = u64::try_from((num + den - 1) / den).map_err(|_| overflow())?;
                    if best.is_none_or(|b| ceiled < b) {
                        best = Some(ceiled);
                    }
                    Ok(false)
                })?;
            }
            Ok(false)
        })?;
    }
    Ok(best)
}

/// The integral closure of a monomial ideal.
///
/// The minimal generators of the closure live in the box bounded by the
/// componentwise maxima of the input generators: a minimal lattice point of
/// the polyhedron that exceeded the box in coordinate `i` would stay above
/// its witnessing convex combination after subtracting one from that
/// coordinate, contradicting minimality.  Within the box the generators are
/// collected fiber by fiber along the widest coordinate, taking the exact
/// least feasible exponent over each profile of the remaining coordinates.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let d = ideal.dim();
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let rows: Vec<&[u32]> = ideal.gens().iter().map(ExponentVector::exps).collect();
    entry_guard(&rows)?;
    let bounds: Vec<u32> = (0..d)
        .map(|c| ideal.gens().iter().map(|g| g.exp(c)).max().unwrap_or(0))
        .collect();
    let mut size = 1u64;
    for &b in &bounds {
        size = size
            .checked_mul(u64::from(b) + 1)
            .filter(|&s| s <= BOX_LIMIT)
            .ok_or_else(|| Error::TooLarge("closure candidate box".into()))?;
    }
    let verts = vertex_reduce(ideal.gens())?;

    let fiber = (0..d).max_by_key(|&c| bounds[c]).unwrap();
    let face = FaceBox {
        bounds: (0..d).filter(|&c| c != fiber).map(|c| bounds[c]).collect(),
    };
    let mut profile = vec![0u32; d - 1];
    let mut out: Vec<ExponentVector> = Vec::new();
    loop {
        if let Some(x) = fiber_minimum(&verts, fiber, &profile)? {
            if x <= u64::from(bounds[fiber]) {
                let mut exps = Vec::with_capacity(d);
                let mut pi = 0;
                for c in 0..d {
                    if c == fiber {
                        exps.push(u32::try_from(x).expect("within box"));
                    } else {
                        exps.push(profile[pi]);
                        pi += 1;
                    }
                }
                out.push(ExponentVector::new(exps));
            }
        }
        if !face.next(&mut profile) {
            break;
        }
    }
    MonomialIdeal::new(d, out)
}

/// Whether the ideal equals its integral closure.
pub fn is_complete(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(&integral_closure(ideal)? == ideal)
}

/// The *-product: the integral closure of the plain product.
pub fn star_product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    integral_closure(&a.product(b)?)
}

/// Bounded power test: is there `k <= bound` with `x^{k a} ∈ I^k`?
///
/// A positive answer certifies membership of `a` in the closure of `I`.
/// The test is exact for witnesses of denominator at most `bound`, so it is
/// one-sided in general and agrees with [`in_newton_polyhedron`] on small
/// instances.
pub fn power_test_membership(
    ideal: &MonomialIdeal,
    a: &ExponentVector,
    bound: u32,
) -> Result<bool> {
    if a.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            left: ideal.dim(),
            right: a.dim(),
        });
    }
    let d = ideal.dim();
    let cap: Vec<u64> = a
        .exps()
        .iter()
        .map(|&e| u64::from(e) * u64::from(bound))
        .collect();
    let gens: Vec<Vec<u64>> = ideal
        .gens()
        .iter()
        .map(|g| g.exps().iter().map(|&e| u64::from(e)).collect())
        .collect();
    let fits = |s: &[u64], k: u64| (0..d).all(|c| s[c] <= u64::from(a.exp(c)) * k);
    let mut sums: Vec<Vec<u64>> = gens
        .iter()
        .filter(|g| (0..d).all(|c| g[c] <= cap[c]))
        .cloned()
        .collect();
    for k in 1..=u64::from(bound) {
        if sums.iter().any(|s| fits(s, k)) {
            return Ok(true);
        }
        if k == u64::from(bound) {
            break;
        }
        let mut next: Vec<Vec<u64>> = Vec::new();
        for s in &sums {
            for g in &gens {
                let t: Vec<u64> = (0..d).map(|c| s[c] + g[c]).collect();
                if (0..d).all(|c| t[c] <= cap[c]) {
                    next.push(t);
                }
            }
        }
        // keep only componentwise-minimal partial sums
        next.sort();
        next.dedup();
        let mut kept: Vec<Vec<u64>> = Vec::new();
        'outer: for t in next {
            for u in &kept {
                if (0..d).all(|c| u[c] <= t[c]) {
                    continue 'outer;
                }
            }
            kept.push(t);
        }
        sums = kept;
        if sums.is_empty() {
            return Ok(false);
        }
    }
    Ok(false)
}

/// A facet of a Newton polyhedron: `{ p : normal · p >= offset }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: WeightVector,
    pub offset: u64,
}

/// The Newton polyhedron of an m-primary monomial ideal with its facet
/// description: the bounded facets (primitive strictly positive normals,
/// the Rees valuations) plus the `d` coordinate facets.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        Self::of_ideal_with_limit(ideal, DEFAULT_FACET_DIM_LIMIT)
    }

    pub fn of_ideal_with_limit(ideal: &MonomialIdeal, limit: usize) -> Result<Self> {
        let d = ideal.dim();
        if !ideal.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        if d > limit {
            return Err(Error::FacetDimension { dim: d, limit });
        }
        let closure = integral_closure(ideal)?;
        let mut facets = bounded_facets(&closure)?;
        for i in 0..d {
            let normal = WeightVector::axis(d, i);
            let offset = normal.value_on_ideal(&closure)?;
            facets.push(Facet { normal, offset });
        }
        Ok(Self {
            dim: d,
            vertices: closure.gens().to_vec(),
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Membership via the facet inequalities.
    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        for f in &self.facets {
            if f.normal.value(a)? < f.offset {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Primitive strictly positive normals of the bounded (d-1)-dimensional
/// facets, found by scanning d-subsets of the vertices of the closure.
fn bounded_facets(closure: &MonomialIdeal) -> Result<Vec<Facet>> {
    let d = closure.dim();
    let all = closure.gens();
    let rows: Vec<&[u32]> = all.iter().map(ExponentVector::exps).collect();
    entry_guard(&rows)?;
    // every facet contains d affinely independent vertices, and every vertex
    // of the polyhedron is a minimal generator
    let gens = vertex_reduce(all)?;
    let mut found: Vec<Facet> = Vec::new();
    solve::any_combination(gens.len(), d, |sel| {
        let Some(normal) = facet_normal(&gens, sel)? else {
            return Ok(false);
        };
        let offset_val = dot(&normal, &gens[sel[0]]);
        // supporting: every generator on or above the hyperplane
        for g in all {
            if dot(&normal, g) < offset_val {
                return Ok(false);
            }
        }
        let weights: Vec<u64> = normal
            .iter()
            .map(|&x| u64::try_from(x).map_err(|_| Error::TooLarge("facet normal".into())))
            .collect::<Result<_>>()?;
        let offset =
            u64::try_from(offset_val).map_err(|_| Error::TooLarge("facet offset".into()))?;
        let facet = Facet {
            normal: WeightVector::new(weights)?,
            offset,
        };
        if !found.contains(&facet) {
            found.push(facet);
        }
        Ok(false) // keep scanning
    })?;
    found.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(found)
}

fn dot(w: &[i128], g: &ExponentVector) -> i128 {
    w.iter()
        .zip(g.exps())
        .map(|(&a, &b)| a * i128::from(b))
        .sum()
}

/// Normal of the hyperplane through the selected d points, reduced to a
/// primitive integer vector with all entries >= 1; `None` when the points do
/// not affinely span a hyperplane or the normal is not strictly positive.
fn facet_normal(gens: &[ExponentVector], sel: &[usize]) -> Result<Option<Vec<i128>>> {
    let d = sel.len();
    let base = &gens[sel[0]];
    // generalized cross product of the d-1 difference vectors
    let mut normal = vec![0i128; d];
    for (c, slot) in normal.iter_mut().enumerate() {
        let mut m = [[0i128; MAX_K]; MAX_K];
        for (r, &gi) in sel[1..].iter().enumerate() {
            let mut col = 0;
            for cc in 0..d {
                if cc == c {
                    continue;
                }
                m[r][col] = i128::from(gens[gi].exp(cc)) - i128::from(base.exp(cc));
                col += 1;
            }
        }
        let minor = solve::det(&mut m, d - 1)?;
        *slot = if c % 2 == 0 { minor } else { -minor };
    }
    if normal.iter().all(|&x| x == 0) {
        return Ok(None);
    }
    if normal.iter().all(|&x| x <= 0) {
        for x in &mut normal {
            *x = -*x;
        }
    }
    if normal.iter().any(|&x| x <= 0) {
        return Ok(None);
    }
    let mut g = 0i128;
    for &x in &normal {
        g = gcd(g, x);
    }
    for x in &mut normal {
        *x /= g;
    }
    Ok(Some(normal))
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The Rees valuations of an m-primary monomial ideal: the primitive
/// strictly positive normals of the bounded facets of its Newton polyhedron.
///
/// This facet characterization is standard for monomial ideals; it is
/// cross-validated in the test suite against the membership route by the
/// reconstruction identity `closure(I) = { a : w(a) >= w(I) for all facet
/// normals w }`.
pub fn rees_valuations(ideal: &MonomialIdeal) -> Result<Vec<WeightVector>> {
    rees_valuations_with_limit(ideal, DEFAULT_FACET_DIM_LIMIT)
}

pub fn rees_valuations_with_limit(
    ideal: &MonomialIdeal,
    limit: usize,
) -> Result<Vec<WeightVector>> {
    let poly = NewtonPolyhedron::of_ideal_with_limit(ideal, limit)?;
    Ok(poly
        .facets()
        .iter()
        .filter(|f| f.normal.weights().iter().all(|&w| w >= 1))
        .map(|f| f.normal.clone())
        .collect())
}
