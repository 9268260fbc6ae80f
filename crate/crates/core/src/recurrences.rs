//! DP evaluators for the counting triangles and the generating-tree engine.

use std::collections::BTreeMap;

use crate::closed_forms::{dyck_last, Triangle};
use crate::core::InvSeq;

fn ck_add(a: u64, b: u64) -> u64 {
    a.checked_add(b).expect("count overflow")
}

/// A triply indexed count table `(n, m, l) -> u64` over `0 <= m < l <= n`,
/// stored dense.
#[derive(Debug, Clone)]
pub struct IndexedTriangle {
    nmax: usize,
    vals: Vec<Vec<Vec<u64>>>,
}

impl IndexedTriangle {
    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// `0` outside the index range.
    pub fn get(&self, n: usize, m: usize, l: usize) -> u64 {
        if n == 0 || n > self.nmax || l > n || m >= l {
            return 0;
        }
        self.vals[n][m][l]
    }

    /// Sum over the full (n, ., .) slice, the `m = 0` seed row included.
    pub fn total(&self, n: usize) -> u64 {
        let mut s = 0u64;
        for m in 0..n {
            for l in m + 1..=n {
                s = ck_add(s, self.vals[n][m][l]);
            }
        }
        s
    }

    pub fn totals(&self) -> Vec<u64> {
        (1..=self.nmax).map(|n| self.total(n)).collect()
    }

    /// All in-range cells as `(n, m, l, value)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize, u64)> + '_ {
        (1..=self.nmax).flat_map(move |n| {
            (0..n).flat_map(move |m| (m + 1..=n).map(move |l| (n, m, l, self.vals[n][m][l])))
        })
    }
}

fn empty_cube(nmax: usize) -> Vec<Vec<Vec<u64>>> {
    (0..=nmax)
        .map(|_| vec![vec![0u64; nmax + 1]; nmax + 1])
        .collect()
}

/// `a_{n,m,l}`: the number of (110,102)-avoiding inversion sequences of
/// length `n` whose largest entry `m` first occurs at position `l`.
///
/// Recurrence: `a_{n,m,l} = d_{n-1,m} - d_{l-1,m} + d_{l-1,m-1} -
/// chi(m=1, l=2) + sum_{j<m} sum_{k=l-1}^{n-1} a_{n-1,j,k}`, with seeds
/// `a_{n,0,l} = delta_{l,1}`. The inner sum runs over `j <= m-1`, matching
/// the case analysis that derives it.
#[allow(clippy::needless_range_loop)]
pub fn a_triangle(nmax: usize) -> IndexedTriangle {
    assert!(nmax >= 1);
    let d = dyck_last(nmax.max(2));
    let mut vals = empty_cube(nmax);
    for n in 1..=nmax {
        vals[n][0][1] = 1;
        for m in 1..n {
            for l in m + 1..=n {
                let mut v = d.get(n - 1, m) - d.get(l - 1, m);
                v = ck_add(v, d.get(l - 1, m - 1));
                if m == 1 && l == 2 {
                    v -= 1;
                }
                for j in 0..m {
                    for k in l - 1..=n - 1 {
                        v = ck_add(v, vals[n - 1][j][k]);
                    }
                }
                vals[n][m][l] = v;
            }
        }
    }
    IndexedTriangle { nmax, vals }
}

/// `b_{n,m,l}`: as `a` but for the (102,120)-avoiding class.
///
/// Recurrence: `b_{n,m,l} = d_{l,m-1} + sum_{j=1}^{m} sum_{k=l}^{n-1}
/// b_{n-1,j,k}` with seeds `b_{n,0,l} = delta_{l,1}`.
#[allow(clippy::needless_range_loop)]
pub fn b_triangle(nmax: usize) -> IndexedTriangle {
    assert!(nmax >= 1);
    let d = dyck_last(nmax.max(2));
    let mut vals = empty_cube(nmax);
    for n in 1..=nmax {
        vals[n][0][1] = 1;
        for m in 1..n {
            for l in m + 1..=n {
                let mut v = d.get(l, m - 1);
                for j in 1..=m {
                    for k in l..=n - 1 {
                        v = ck_add(v, vals[n - 1][j][k]);
                    }
                }
                vals[n][m][l] = v;
            }
        }
    }
    IndexedTriangle { nmax, vals }
}

/// `c_{n,m,l}`: (011,201)-avoiding inversion sequences of length `n` with
/// `e_l = m` as the unique largest entry.
///
/// Recurrence: `c_{n,m,l} = sum_{j=0}^{m-1} sum_{i=j+1}^{l} c_{n-1,j,i}` with
/// seeds `c_{n,0,l} = delta_{1,l}`.
#[allow(clippy::needless_range_loop)]
pub fn c_triangle(nmax: usize) -> IndexedTriangle {
    assert!(nmax >= 1);
    let mut vals = empty_cube(nmax);
    for n in 1..=nmax {
        vals[n][0][1] = 1;
        for m in 1..n {
            for l in m + 1..=n {
                let mut v = 0u64;
                for j in 0..m {
                    for i in j + 1..=l {
                        v = ck_add(v, vals[n - 1][j][i]);
                    }
                }
                vals[n][m][l] = v;
            }
        }
    }
    IndexedTriangle { nmax, vals }
}

/// `z_{n,k} = |{e in I_n(101,110) : zero(e) = k}|` by its recurrence
/// `z_{n,k} = z_{n-1,k-1} + k z_{n-1,k} + sum_{j=k+1}^{n-1} z_{n-1,j}`,
/// `z_{1,i} = delta_{1,i}`.
pub fn z_triangle(nmax: usize) -> Triangle {
    assert!(nmax >= 1);
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for n in 2..=nmax {
        let prev = rows[n - 2].clone();
        let at = |k: usize| -> u64 {
            if k >= 1 && k <= prev.len() {
                prev[k - 1]
            } else {
                0
            }
        };
        let mut row = vec![0u64; n];
        for k in 1..=n {
            let mut v = at(k - 1);
            v = ck_add(v, (k as u64).checked_mul(at(k)).expect("count overflow"));
            for j in k + 1..=n - 1 {
                v = ck_add(v, at(j));
            }
            row[k - 1] = v;
        }
        rows.push(row);
    }
    Triangle::from_rows(nmax, 1, rows)
}

/// Generating-tree parameters `(p, q)` of a sequence: with `m1, m2` the two
/// largest values of `{e_i} U {-1}`, `p = n - m1` and `q = m1 - m2`.
pub fn gentree_parameters(e: &InvSeq) -> (u32, u32) {
    let n = e.len() as i64;
    let mut m1: i64 = -1;
    let mut m2: i64 = -1;
    for &x in e.entries() {
        let x = x as i64;
        if x > m1 {
            m2 = m1;
            m1 = x;
        } else if x < m1 && x > m2 {
            m2 = x;
        }
    }
    ((n - m1) as u32, (m1 - m2) as u32)
}

/// One level of the generating tree: multiplicity of each label `(p, q)`.
pub type GenTreeLevel = BTreeMap<(u32, u32), u64>;

/// Levels `1..=nmax` of the generating tree for `(!=,>=,>=)`-avoiding
/// inversion sequences. The root is `(1,1)`; a node `(p,q)` has the
/// `p + q` children `(p+1,q), (p+1,q-1), ..., (p+1,1)` and
/// `(p,1), (p-1,2), ..., (1,p)`.
pub fn gentree_levels(nmax: usize) -> Vec<GenTreeLevel> {
    assert!(nmax >= 1);
    let mut levels = Vec::with_capacity(nmax);
    let mut level: GenTreeLevel = BTreeMap::new();
    level.insert((1, 1), 1);
    levels.push(level);
    for _ in 1..nmax {
        let prev = levels.last().unwrap();
        let mut next: GenTreeLevel = BTreeMap::new();
        for (&(p, q), &cnt) in prev {
            for i in 1..=q {
                let slot = next.entry((p + 1, i)).or_insert(0);
                *slot = ck_add(*slot, cnt);
            }
            for i in 1..=p {
                let slot = next.entry((p + 1 - i, i)).or_insert(0);
                *slot = ck_add(*slot, cnt);
            }
        }
        levels.push(next);
    }
    levels
}

/// Total node counts per level; level `n` equals `|I_n(!=,>=,>=)|`.
pub fn gentree_counts(nmax: usize) -> Vec<u64> {
    gentree_levels(nmax)
        .iter()
        .map(|lvl| lvl.values().fold(0u64, |a, &b| ck_add(a, b)))
        .collect()
}
