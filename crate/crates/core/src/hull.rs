//! Exact facets of the dominance hull `conv(Y) + ℝᵏ≥0` of integer points.
//!
//! Every facet of that polyhedron is spanned by `j ≥ 1` points of `Y` and
//! `k − j` coordinate directions. Candidates are enumerated exhaustively,
//! which is fine for `k ≤ 4` and the few dozen points seen in practice.

use itertools::Itertools;
use num::integer::Integer;

/// A supporting hyperplane `normal · y ≥ offset` with a primitive,
/// coordinatewise non-negative integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i128>,
    pub offset: i128,
}

impl Facet {
    pub fn contains(&self, point: &[i64]) -> bool {
        dot(&self.normal, point) == self.offset
    }
}

fn dot(n: &[i128], p: &[i64]) -> i128 {
    n.iter().zip(p).map(|(a, &b)| a * b as i128).sum()
}

/// Bareiss fraction-free determinant.
fn determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Vector orthogonal to the `k − 1` rows of `rows` (generalised cross product).
fn orthogonal(rows: &[Vec<i128>], k: usize) -> Vec<i128> {
    (0..k)
        .map(|col| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != col)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let d = determinant(minor);
            if col % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn primitive(mut v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    v
}

/// All facets of `conv(points) + ℝᵏ≥0`, sorted and deduplicated.
///
/// `points` must be non-empty and share a dimension `k ≥ 1`.
pub fn dominance_hull_facets(points: &[Vec<i64>]) -> Vec<Facet> {
    assert!(!points.is_empty(), "hull of an empty point set");
    let k = points[0].len();
    let pts: Vec<Vec<i64>> = points.iter().cloned().sorted().dedup().collect();
    let mut facets = Vec::new();
    for j in 1..=k.min(pts.len()) {
        for chosen in (0..pts.len()).combinations(j) {
            let base = &pts[chosen[0]];
            let diffs: Vec<Vec<i128>> = chosen[1..]
                .iter()
                .map(|&p| {
                    pts[p]
                        .iter()
                        .zip(base)
                        .map(|(a, b)| (*a - *b) as i128)
                        .collect()
                })
                .collect();
            for dirs in (0..k).combinations(k - j) {
                let mut rows = diffs.clone();
                rows.extend(dirs.iter().map(|&d| {
                    let mut e = vec![0i128; k];
                    e[d] = 1;
                    e
                }));
                let raw = orthogonal(&rows, k);
                if raw.iter().all(|&c| c == 0) {
                    continue;
                }
                let normal = if raw.iter().all(|&c| c >= 0) {
                    raw
                } else if raw.iter().all(|&c| c <= 0) {
                    raw.into_iter().map(|c| -c).collect()
                } else {
                    continue;
                };
                let normal = primitive(normal);
                let offset = dot(&normal, base);
                if pts.iter().all(|p| dot(&normal, p) >= offset) {
                    facets.push(Facet { normal, offset });
                }
            }
        }
    }
    facets.sort();
    facets.dedup();
    facets
}

/// Points of `points` that are vertices of the dominance hull, i.e. lie on at
/// least `k` facets with linearly independent normals.
pub fn dominance_hull_vertices(points: &[Vec<i64>], facets: &[Facet]) -> Vec<Vec<i64>> {
    let k = points.first().map_or(0, |p| p.len());
    points
        .iter()
        .filter(|p| {
            let incident: Vec<Vec<i128>> = facets
                .iter()
                .filter(|f| f.contains(p))
                .map(|f| f.normal.clone())
                .collect();
            rank(incident) == k
        })
        .cloned()
        .collect()
}

fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                let g = a.gcd(&b);
                let (fa, fb) = (b / g, a / g);
                let pivot = rows[r].clone();
                rows[i] = primitive(
                    rows[i]
                        .iter()
                        .zip(&pivot)
                        .map(|(x, y)| x * fb - y * fa)
                        .collect(),
                );
            }
        }
        r += 1;
    }
    r
}
