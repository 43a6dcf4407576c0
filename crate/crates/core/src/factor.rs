//! Base point trees, point bases, special *-simple ideals and Lipman
//! *-factorization.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::{IndexOrderPair, MonomialIdeal};
use crate::newton::{integral_closure, is_complete};
use crate::transform::{transform_dir, DirectionSequence};

/// Depth budget for base point trees unless the caller overrides it.
pub const DEFAULT_MAX_DEPTH: usize = 12;

/// One infinitely near point in the tree of transforms of an ideal.
#[derive(Debug, Clone)]
pub struct TreeNode {
    /// Direction path from the root; the root has the empty path.
    pub path: Vec<usize>,
    /// The local transform of the root ideal at this point.
    pub ideal: MonomialIdeal,
    /// Its order: the point basis entry at this point.
    pub order: u64,
    pub parent: Option<usize>,
    /// Children as (direction, node index) pairs.
    pub children: Vec<(usize, usize)>,
}

/// Rooted d-ary tree of the base points of a finitely supported ideal.
///
/// Node identity is the direction path: two distinct paths are distinct
/// base points even when the attached ideals coincide.
#[derive(Debug, Clone)]
pub struct BasePointTree {
    dim: usize,
    nodes: Vec<TreeNode>,
}

impl BasePointTree {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn node_by_path(&self, path: &[usize]) -> Option<&TreeNode> {
        self.nodes.iter().find(|n| n.path == path)
    }

    /// Point basis entries keyed by path.
    pub fn orders(&self) -> BTreeMap<Vec<usize>, u64> {
        self.nodes
            .iter()
            .map(|n| (n.path.clone(), n.order))
            .collect()
    }
}

/// Expands the base point tree of a complete m-primary monomial ideal
/// breadth-first, keeping proper transforms.
///
/// Errors when a proper transform survives at the depth budget, or when a
/// proper transform fails to be m-primary: either way the ideal has no
/// finite base point tree within reach.
pub fn base_point_tree(ideal: &MonomialIdeal, max_depth: usize) -> Result<BasePointTree> {
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    if !is_complete(ideal)? {
        return Err(Error::NotComplete);
    }
    let d = ideal.dim();
    let mut nodes = vec![TreeNode {
        path: Vec::new(),
        ideal: ideal.clone(),
        order: ideal.ord(),
        parent: None,
        children: Vec::new(),
    }];
    let mut cursor = 0;
    while cursor < nodes.len() {
        let depth = nodes[cursor].path.len();
        if !nodes[cursor].ideal.is_m_primary() {
            // a proper non-primary transform has infinitely many base points
            return Err(Error::NotFinitelySupported { max_depth });
        }
        for j in 0..d {
            let t = transform_dir(&nodes[cursor].ideal, j)?;
            if t.is_unit() {
                continue;
            }
            if depth == max_depth {
                return Err(Error::NotFinitelySupported { max_depth });
            }
            let mut path = nodes[cursor].path.clone();
            path.push(j);
            let order = t.ord();
            nodes.push(TreeNode {
                path,
                ideal: t,
                order,
                parent: Some(cursor),
                children: Vec::new(),
            });
            let child = nodes.len() - 1;
            nodes[cursor].children.push((j, child));
        }
        cursor += 1;
    }
    Ok(BasePointTree { dim: d, nodes })
}

/// The point basis: the family of orders of the transforms at the base
/// points, keyed by direction path.
pub fn point_basis(ideal: &MonomialIdeal, max_depth: usize) -> Result<BTreeMap<Vec<usize>, u64>> {
    Ok(base_point_tree(ideal, max_depth)?.orders())
}

/// The chain of special *-simple ideals along a direction sequence:
/// entry `i` lives in the `i`-th ring of the chain and the last entry is
/// the maximal ideal.  Built by iterating the complete inverse transform
/// down the chain.
pub fn special_p_chain(seq: &DirectionSequence) -> Result<Vec<MonomialIdeal>> {
    let mut chain = vec![MonomialIdeal::maximal(seq.dim())?];
    for &j in seq.dirs().iter().rev() {
        // each stage is an integral closure, so the completeness
        // precondition of the inverse transform holds by construction
        let next = crate::transform::cit_known_complete(chain.last().expect("nonempty"), j)?;
        chain.push(next);
    }
    chain.reverse();
    Ok(chain)
}

/// The special *-simple complete ideal attached to a direction sequence;
/// the maximal ideal for the empty sequence.
pub fn special_p(seq: &DirectionSequence) -> Result<MonomialIdeal> {
    Ok(special_p_chain(seq)?.remove(0))
}

/// The (index, order) pair of an m-primary ideal.
pub fn index_order(ideal: &MonomialIdeal) -> Result<IndexOrderPair> {
    Ok(IndexOrderPair {
        index: ideal.index()?,
        order: ideal.ord(),
    })
}

/// Levels of the tree of (index, order) pairs of special *-simple monomial
/// ideals: root (1,1), single child (2,1), and below each node (s,r) the
/// children (s+r, s) (change of direction) and (s+r, r) (no change).
pub fn index_order_tree(depth: usize) -> Vec<Vec<IndexOrderPair>> {
    let mut levels = vec![vec![IndexOrderPair { index: 1, order: 1 }]];
    for level in 1..=depth {
        if level == 1 {
            levels.push(vec![IndexOrderPair { index: 2, order: 1 }]);
            continue;
        }
        let prev = &levels[level - 1];
        let mut next = Vec::with_capacity(prev.len() * 2);
        for p in prev {
            next.push(IndexOrderPair {
                index: p.index + p.order,
                order: p.index,
            });
            next.push(IndexOrderPair {
                index: p.index + p.order,
                order: p.order,
            });
        }
        levels.push(next);
    }
    levels
}

/// A Lipman *-factorization: integer exponents on the base point tree with
/// `(Π_{n<0} P^{-n}) * I = Π_{n>0} P^{n}` verified by reconstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    exponents: BTreeMap<Vec<usize>, i64>,
}

impl FactorizationResult {
    /// Exponent of the special *-simple factor at each tree node.
    pub fn exponents(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.exponents
    }

    pub fn exponent(&self, path: &[usize]) -> i64 {
        self.exponents.get(path).copied().unwrap_or(0)
    }

    /// The witness path when the factorization is a single factor with
    /// exponent one, i.e. the ideal is special *-simple.
    pub fn single_positive_factor(&self) -> Option<&[usize]> {
        let mut nonzero = self.exponents.iter().filter(|&(_, &e)| e != 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((path, &1)), None) => Some(path),
            _ => None,
        }
    }
}

/// Factors a finitely supported complete m-primary monomial ideal as a
/// *-product of special *-simple ideals with integer exponents.
///
/// Point bases of the candidate factors are additive along the tree, so the
/// exponents solve a unitriangular linear system against the point basis of
/// the input; the solution is then certified by rebuilding both sides of
/// the factorization identity, and an exact mismatch is an error.
pub fn lipman_factor(ideal: &MonomialIdeal, max_depth: usize) -> Result<FactorizationResult> {
    let tree = base_point_tree(ideal, max_depth)?;
    let d = tree.dim();
    let n = tree.len();

    // point basis of the special ideal of each node, supported on its path
    let mut factor_basis: Vec<BTreeMap<Vec<usize>, u64>> = Vec::with_capacity(n);
    for node in tree.nodes() {
        let seq = DirectionSequence::new(d, node.path.clone())?;
        let chain = special_p_chain(&seq)?;
        let mut basis = BTreeMap::new();
        for (i, p) in chain.iter().enumerate() {
            basis.insert(node.path[..i].to_vec(), p.ord());
        }
        factor_basis.push(basis);
    }

    // back-substitution from the deepest nodes: the matrix is unitriangular
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(tree.nodes()[i].path.len()));
    let mut exponents: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for &i in &order {
        let node = &tree.nodes()[i];
        let mut rhs =
            i64::try_from(node.order).map_err(|_| Error::TooLarge("point basis entry".into()))?;
        for (k, other) in tree.nodes().iter().enumerate() {
            if k == i || !other.path.starts_with(&node.path) {
                continue;
            }
            if let Some(&coeff) = factor_basis[k].get(&node.path) {
                let e = exponents.get(&other.path).copied().unwrap_or(0);
                rhs -= e
                    .checked_mul(
                        i64::try_from(coeff)
                            .map_err(|_| Error::TooLarge("point basis entry".into()))?,
                    )
                    .ok_or_else(|| Error::TooLarge("factor exponent".into()))?;
            }
        }
        exponents.insert(node.path.clone(), rhs);
    }

    // reconstruction: (Π_{n<0} P^{-n}) I = Π_{n>0} P^{n} up to closure
    let mut lhs = ideal.clone();
    let mut rhs: Option<MonomialIdeal> = None;
    for node in tree.nodes() {
        let e = exponents[&node.path];
        if e == 0 {
            continue;
        }
        let seq = DirectionSequence::new(d, node.path.clone())?;
        let p = special_p(&seq)?;
        let power = p.power(
            u32::try_from(e.unsigned_abs())
                .map_err(|_| Error::TooLarge("factor exponent".into()))?,
        )?;
        if e < 0 {
            lhs = lhs.product(&power)?;
        } else {
            rhs = Some(match rhs {
                None => power,
                Some(r) => r.product(&power)?,
            });
        }
    }
    let rhs = rhs.ok_or(Error::ReconstructionFailed)?;
    if integral_closure(&lhs)? != integral_closure(&rhs)? {
        return Err(Error::ReconstructionFailed);
    }
    Ok(FactorizationResult { exponents })
}

/// Recognition of special *-simple ideals: the factorization consists of a
/// single factor with exponent one.  Returns the witness path.
pub fn is_special_star_simple(
    ideal: &MonomialIdeal,
    max_depth: usize,
) -> Result<Option<Vec<usize>>> {
    let f = lipman_factor(ideal, max_depth)?;
    Ok(f.single_positive_factor().map(<[usize]>::to_vec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::star_product;

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn seq(dim: usize, dirs: &[usize]) -> DirectionSequence {
        DirectionSequence::new(dim, dirs.to_vec()).unwrap()
    }

    fn lipman_example() -> MonomialIdeal {
        ideal(
            3,
            &[
                &[3, 0, 0],
                &[0, 3, 0],
                &[0, 0, 3],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
            ],
        )
    }

    #[test]
    fn tree_of_maximal_power_is_root_only() {
        let m3 = MonomialIdeal::maximal_power(3, 3).unwrap();
        let tree = base_point_tree(&m3, 12).unwrap();
        assert_eq!(tree.len(), 1);
        assert_eq!(tree.root().order, 3);
    }

    #[test]
    fn tree_of_lipman_example() {
        let tree = base_point_tree(&lipman_example(), 12).unwrap();
        assert_eq!(tree.len(), 4);
        let basis = tree.orders();
        assert_eq!(basis[&vec![]], 2);
        for j in 0..3 {
            assert_eq!(basis[&vec![j]], 1);
        }
    }

    #[test]
    fn tree_rejects_unbounded_ideals() {
        // CIT of (x, y^2, yz, z^2) is not finitely supported
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
        assert_eq!(
            base_point_tree(&i, 12).unwrap_err(),
            Error::NotFinitelySupported { max_depth: 12 }
        );
    }

    #[test]
    fn special_p_basic_shapes() {
        assert_eq!(
            special_p(&seq(3, &[])).unwrap(),
            MonomialIdeal::maximal(3).unwrap()
        );
        assert_eq!(
            special_p(&seq(3, &[0])).unwrap(),
            ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        // constant direction: (x^{n+1}, y, z)
        for n in 1..=4usize {
            let p = special_p(&seq(3, &vec![0; n])).unwrap();
            let mut gens: Vec<Vec<u32>> = vec![vec![n as u32 + 1, 0, 0]];
            gens.push(vec![0, 1, 0]);
            gens.push(vec![0, 0, 1]);
            assert_eq!(p, MonomialIdeal::from_exponents(3, gens).unwrap());
        }
    }

    #[test]
    fn index_order_examples() {
        let p = special_p(&seq(3, &[0, 1])).unwrap();
        let io = index_order(&p).unwrap();
        assert_eq!((io.index, io.order), (3, 2));
        let m4 = MonomialIdeal::maximal_power(3, 4).unwrap();
        let io = index_order(&m4).unwrap();
        assert_eq!((io.index, io.order), (4, 4));
    }

    #[test]
    fn pair_tree_levels() {
        let levels = index_order_tree(3);
        assert_eq!(levels[0], vec![IndexOrderPair { index: 1, order: 1 }]);
        assert_eq!(levels[1], vec![IndexOrderPair { index: 2, order: 1 }]);
        let mut level3 = levels[3].clone();
        level3.sort();
        let mut expected = vec![
            IndexOrderPair { index: 5, order: 3 },
            IndexOrderPair { index: 5, order: 2 },
            IndexOrderPair { index: 4, order: 3 },
            IndexOrderPair { index: 4, order: 1 },
        ];
        expected.sort();
        assert_eq!(level3, expected);
    }

    #[test]
    fn pair_tree_coprime_and_unique() {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let levels = index_order_tree(8);
        let mut seen = std::collections::HashSet::new();
        for level in &levels {
            for p in level {
                assert!(p.index >= p.order);
                assert_eq!(gcd(p.index, p.order), 1);
                assert!(seen.insert((p.index, p.order)), "duplicate {p:?}");
            }
        }
    }

    #[test]
    fn factor_maximal_power() {
        let m4 = MonomialIdeal::maximal_power(3, 4).unwrap();
        let f = lipman_factor(&m4, 12).unwrap();
        assert_eq!(f.exponent(&[]), 4);
        assert_eq!(f.exponents().len(), 1);
    }

    #[test]
    fn factor_lipman_example() {
        let f = lipman_factor(&lipman_example(), 12).unwrap();
        assert_eq!(f.exponent(&[]), -1);
        for j in 0..3 {
            assert_eq!(f.exponent(&[j]), 1);
        }
        assert!(is_special_star_simple(&lipman_example(), 12)
            .unwrap()
            .is_none());
    }

    #[test]
    fn special_recognition_of_chain_ideal() {
        let p = special_p(&seq(3, &[0, 1])).unwrap();
        let witness = is_special_star_simple(&p, 12).unwrap();
        assert_eq!(witness, Some(vec![0, 1]));
    }

    #[test]
    fn point_basis_additive_on_small_star_product() {
        let a = special_p(&seq(3, &[0])).unwrap();
        let b = special_p(&seq(3, &[1])).unwrap();
        let prod = star_product(&a, &b).unwrap();
        let basis = point_basis(&prod, 12).unwrap();
        let mut expected = BTreeMap::new();
        expected.insert(vec![], 2u64);
        expected.insert(vec![0], 1);
        expected.insert(vec![1], 1);
        assert_eq!(basis, expected);
    }
}
