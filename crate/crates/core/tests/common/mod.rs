#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specgap::{Graph, IntPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Graphs on `lo..=hi` vertices from an edge bitmask.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

pub fn eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

/// Real roots of `p` from the companion matrix.
pub fn real_roots(p: &IntPoly) -> Vec<f64> {
    let c: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|x| x.to_string().parse().unwrap())
        .collect();
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = c[d];
    let m = DMatrix::from_fn(d, d, |i, j| {
        if i == 0 {
            -c[d - 1 - j] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() < 1e-7 * (1.0 + z.re.abs()))
        .map(|z| z.re)
        .collect()
}

/// Exhaustive isomorphism test.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(g: &Graph, h: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
        let n = perm.len();
        if k == n {
            return true;
        }
        for i in k..n {
            perm.swap(k, i);
            let ok = (0..k).all(|j| g.has_edge(j, k) == h.has_edge(perm[j], perm[k]));
            if ok && rec(g, h, perm, k + 1) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    rec(g, h, &mut perm, 0)
}
