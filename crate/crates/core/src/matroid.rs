//! Ground sets, matroids with rank oracles, and the Greedy algorithm.
//!
//! Two matroid families are supported: graphic matroids (edge sets of an
//! undirected multigraph, independent iff acyclic) and uniform matroids
//! (independent iff the cardinality is at most `K`).

use std::fmt;

use crate::error::{Error, Result};

/// A subset of the ground set, stored as a fixed-length bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    words: Vec<u64>,
    len: usize,
}

impl Solution {
    /// The empty set over a ground set of `len` elements.
    pub fn empty(len: usize) -> Self {
        Solution {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.set(i, true);
        }
        s
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
    }

    /// Parses a string of `0`/`1` characters, element 0 first.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut out = Self::empty(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => out.set(i, true),
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "element {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "element {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "element {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Cardinality `|x|`.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Size of the symmetric difference `|x ⊗ y|`.
    pub fn hamming(&self, other: &Solution) -> usize {
        assert_eq!(self.len, other.len, "solutions over different ground sets");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Indices of the selected elements in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Solution({})", self.to_bitstring())
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    rank: usize,
}

impl GraphicMatroid {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edge endpoints, 0-based.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of connected components of `(V, x)`, isolated vertices included.
    pub fn components(&self, x: &Solution) -> usize {
        let mut dsu = DisjointSets::new(self.vertex_count);
        let merged = x
            .ones()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                dsu.union(u, v)
            })
            .count();
        self.vertex_count - merged
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    m: usize,
    capacity: usize,
}

impl UniformMatroid {
    pub fn capacity(&self) -> usize {
        self.capacity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matroid {
    Graphic(GraphicMatroid),
    Uniform(UniformMatroid),
}

impl Matroid {
    /// Graphic matroid over `vertex_count` vertices. Endpoints are 0-based;
    /// parallel edges are allowed, self-loops are rejected.
    pub fn graphic(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidMatroid("graph has no vertices".into()));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidMatroid(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidMatroid(format!("edge {i} is a self-loop at {u}")));
            }
        }
        let mut g = GraphicMatroid {
            vertex_count,
            edges,
            rank: 0,
        };
        let all = Solution::from_indices(g.edges.len(), 0..g.edges.len());
        g.rank = vertex_count - g.components(&all);
        Ok(Matroid::Graphic(g))
    }

    /// Uniform matroid `U(K, m)`: independent sets are those with at most `capacity` elements.
    pub fn uniform(m: usize, capacity: usize) -> Result<Self> {
        if capacity > m {
            return Err(Error::InvalidMatroid(format!(
                "capacity {capacity} exceeds ground set size {m}"
            )));
        }
        Ok(Matroid::Uniform(UniformMatroid { m, capacity }))
    }

    /// Ground set size `m`.
    pub fn ground_size(&self) -> usize {
        match self {
            Matroid::Graphic(g) => g.edges.len(),
            Matroid::Uniform(u) => u.m,
        }
    }

    /// Rank of the full ground set `n`.
    pub fn full_rank(&self) -> usize {
        match self {
            Matroid::Graphic(g) => g.rank,
            Matroid::Uniform(u) => u.capacity,
        }
    }

    fn check_len(&self, x: &Solution) -> Result<()> {
        if x.len() != self.ground_size() {
            return Err(Error::LengthMismatch {
                expected: self.ground_size(),
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn rank(&self, x: &Solution) -> Result<usize> {
        self.check_len(x)?;
        Ok(self.rank_unchecked(x))
    }

    pub(crate) fn rank_unchecked(&self, x: &Solution) -> usize {
        match self {
            Matroid::Graphic(g) => g.vertex_count - g.components(x),
            Matroid::Uniform(u) => x.count().min(u.capacity),
        }
    }

    pub fn is_base(&self, x: &Solution) -> Result<bool> {
        self.check_len(x)?;
        let n = self.full_rank();
        Ok(x.count() == n && self.rank_unchecked(x) == n)
    }

    pub(crate) fn independence(&self) -> Independence<'_> {
        match self {
            Matroid::Graphic(g) => Independence::Graphic {
                dsu: DisjointSets::new(g.vertex_count),
                edges: &g.edges,
            },
            Matroid::Uniform(u) => Independence::Uniform {
                count: 0,
                capacity: u.capacity,
            },
        }
    }
}

/// Incremental independence test used by Greedy.
pub(crate) enum Independence<'a> {
    Graphic {
        dsu: DisjointSets,
        edges: &'a [(usize, usize)],
    },
    Uniform {
        count: usize,
        capacity: usize,
    },
}

impl Independence<'_> {
    /// Adds `e` if the current set stays independent.
    fn try_add(&mut self, e: usize) -> bool {
        match self {
            Independence::Graphic { dsu, edges } => {
                let (u, v) = edges[e];
                dsu.union(u, v)
            }
            Independence::Uniform { count, capacity } => {
                if *count < *capacity {
                    *count += 1;
                    true
                } else {
                    false
                }
            }
        }
    }
}

/// Runs Greedy on an explicit element order and returns the resulting base.
pub fn greedy_by_order(matroid: &Matroid, order: &[usize]) -> Result<Solution> {
    let m = matroid.ground_size();
    if order.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: order.len(),
        });
    }
    let n = matroid.full_rank();
    let mut x = Solution::empty(m);
    let mut picked = 0;
    let mut ind = matroid.independence();
    for &e in order {
        if picked == n {
            break;
        }
        if ind.try_add(e) {
            x.set(e, true);
            picked += 1;
        }
    }
    Ok(x)
}

/// Minimum weight base under the total preorder given by `keys`.
///
/// Elements are scanned by ascending key, equal keys by ascending index, and
/// each one is kept iff the selection stays independent.
pub fn greedy_min_base<K: Ord>(matroid: &Matroid, keys: &[K]) -> Result<Solution> {
    let m = matroid.ground_size();
    if keys.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: keys.len(),
        });
    }
    let mut order: Vec<usize> = (0..m).collect();
    // stable sort keeps ascending index among equal keys
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    greedy_by_order(matroid, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Matroid {
        Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn brute_min(m: &Matroid, keys: &[i64]) -> i64 {
        let size = m.ground_size();
        (0u32..1 << size)
            .map(|mask| Solution::from_indices(size, (0..size).filter(|i| mask >> i & 1 == 1)))
            .filter(|x| m.is_base(x).unwrap())
            .map(|x| x.ones().map(|e| keys[e]).sum::<i64>())
            .min()
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        let t = triangle();
        assert_eq!(t.rank(&Solution::empty(3)).unwrap(), 0);
        assert_eq!(t.rank(&Solution::from_indices(3, [0, 1])).unwrap(), 2);
        let u = Matroid::uniform(5, 2).unwrap();
        assert_eq!(u.rank(&Solution::from_indices(5, [0, 1, 3, 4])).unwrap(), 2);
        assert!(matches!(
            t.rank(&Solution::empty(4)),
            Err(Error::LengthMismatch { expected: 3, got: 4 })
        ));
    }

    #[test]
    fn base_examples() {
        let t = triangle();
        assert!(t.is_base(&Solution::from_indices(3, [0, 1])).unwrap());
        assert!(!t.is_base(&Solution::from_indices(3, [0, 1, 2])).unwrap());
        assert!(!t.is_base(&Solution::empty(3)).unwrap());
        assert!(!Matroid::uniform(4, 2)
            .unwrap()
            .is_base(&Solution::empty(4))
            .unwrap());
    }

    #[test]
    fn greedy_examples() {
        let t = triangle();
        assert_eq!(greedy_min_base(&t, &[1, 3, 2]).unwrap(), Solution::from_indices(3, [0, 2]));
        let u = Matroid::uniform(3, 2).unwrap();
        assert_eq!(greedy_min_base(&u, &[3, 1, 2]).unwrap(), Solution::from_indices(3, [1, 2]));
        assert_eq!(greedy_min_base(&t, &[7, 7, 7]).unwrap(), Solution::from_indices(3, [0, 1]));
        assert_eq!(brute_min(&t, &[1, 3, 2]), 3);
    }

    #[test]
    fn degenerate_rank_zero() {
        let u = Matroid::uniform(3, 0).unwrap();
        assert_eq!(greedy_min_base(&u, &[1, 2, 3]).unwrap(), Solution::empty(3));
        let g = Matroid::graphic(1, vec![]).unwrap();
        assert_eq!(g.full_rank(), 0);
        assert_eq!(greedy_min_base::<u8>(&g, &[]).unwrap(), Solution::empty(0));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Matroid::graphic(3, vec![(0, 0)]).is_err());
        assert!(Matroid::graphic(3, vec![(0, 3)]).is_err());
        assert!(Matroid::uniform(3, 4).is_err());
    }

    #[test]
    fn rank_counts_isolated_vertices() {
        // two disjoint components: {0,1} and {2,3}, vertex 4 isolated
        let g = Matroid::graphic(5, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.full_rank(), 2);
        if let Matroid::Graphic(gm) = &g {
            assert_eq!(gm.components(&Solution::from_indices(2, [0, 1])), 3);
        }
    }

    #[test]
    fn solution_bits() {
        let mut s = Solution::from_indices(130, [0, 64, 129]);
        assert_eq!(s.count(), 3);
        assert_eq!(s.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        s.flip(64);
        assert!(!s.get(64));
        let t = Solution::from_indices(130, [0, 1]);
        assert_eq!(s.hamming(&t), 2);
        let bits = Solution::from_bitstring("0110").unwrap();
        assert_eq!(bits.to_bitstring(), "0110");
        assert!(Solution::from_bitstring("01x").is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matroid() -> impl Strategy<Value = Matroid> {
            prop_oneof![
                (2usize..7).prop_flat_map(|v| {
                    proptest::collection::vec((0..v, 0..v), 1..12).prop_map(move |raw| {
                        let edges = raw.into_iter().filter(|(a, b)| a != b).collect::<Vec<_>>();
                        Matroid::graphic(v, edges).unwrap()
                    })
                }),
                (1usize..12).prop_flat_map(|m| (0..=m).prop_map(move |k| Matroid::uniform(m, k).unwrap())),
            ]
        }

        fn matroid_with_keys() -> impl Strategy<Value = (Matroid, Vec<i64>)> {
            small_matroid().prop_flat_map(|m| {
                let size = m.ground_size();
                (Just(m), proptest::collection::vec(-5i64..20, size))
            })
        }

        fn matroid_with_subsets() -> impl Strategy<Value = (Matroid, Vec<bool>, Vec<bool>, usize)> {
            small_matroid().prop_flat_map(|m| {
                let size = m.ground_size();
                (
                    Just(m),
                    proptest::collection::vec(any::<bool>(), size),
                    proptest::collection::vec(any::<bool>(), size),
                    0..size.max(1),
                )
            })
        }

        proptest! {
            #[test]
            fn greedy_is_optimal_base((m, keys) in matroid_with_keys()) {
                let x = greedy_min_base(&m, &keys).unwrap();
                prop_assert!(m.is_base(&x).unwrap());
                let total: i64 = x.ones().map(|e| keys[e]).sum();
                prop_assert_eq!(total, brute_min(&m, &keys));
                prop_assert_eq!(greedy_min_base(&m, &keys).unwrap(), x);
            }

            #[test]
            fn rank_axioms((m, a, b, e) in matroid_with_subsets()) {
                let x = Solution::from_bools(&a);
                let y = Solution::from_bools(&b);
                let rx = m.rank(&x).unwrap();
                prop_assert!(rx <= x.count());
                prop_assert!(rx <= m.full_rank());
                if m.ground_size() > 0 {
                    let mut bigger = x.clone();
                    bigger.set(e, true);
                    prop_assert!(m.rank(&bigger).unwrap() >= rx);
                }
                let union = Solution::from_bools(&a.iter().zip(&b).map(|(p, q)| *p || *q).collect::<Vec<_>>());
                let inter = Solution::from_bools(&a.iter().zip(&b).map(|(p, q)| *p && *q).collect::<Vec<_>>());
                let ry = m.rank(&y).unwrap();
                prop_assert!(m.rank(&union).unwrap() + m.rank(&inter).unwrap() <= rx + ry);
            }
        }
    }
}
