//! Automorphism groups and Kronecker-cover inversion.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, is_automorphism, search, Perm};
use crate::graph::{bits, Bipartition, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("permutation is not an automorphism")]
    NotAutomorphism,
    #[error("involution fails: {0}")]
    BadInvolution(&'static str),
    #[error("quotient would have a multiple edge between orbits of {0} and {1}")]
    MultiEdge(usize, usize),
}

/// Groups up to this size are listed element by element.
pub const MAX_LISTED_GROUP: usize = 1 << 20;

/// Every automorphism when `n <= 32` and the group has at most
/// [`MAX_LISTED_GROUP`] elements; otherwise a generating set.
pub fn automorphisms(g: &Graph) -> Vec<Perm> {
    let res = search(g, None);
    let small = g.order() <= 32 && res.group_order <= num_bigint::BigUint::from(MAX_LISTED_GROUP);
    if !small {
        return res.generators;
    }
    close_group(g.order(), &res.generators)
}

fn compose(p: &[usize], q: &[usize]) -> Perm {
    // apply p, then q
    p.iter().map(|&x| q[x]).collect()
}

/// All products of the generators, identity first.
pub fn close_group(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for gen in gens {
            let q = compose(&p, gen);
            if seen.insert(q.clone()) {
                out.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    out
}

/// A vertex permutation of order two with recomputed flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Involution {
    pub perm: Perm,
    pub fixed_point_free: bool,
    pub swaps_colour_classes: bool,
    pub no_vertex_adjacent_to_image: bool,
}

impl Involution {
    /// Flags are computed from `g`; fails unless `perm` is an involutive
    /// automorphism.
    pub fn new(g: &Graph, perm: Perm) -> Result<Self, CoverError> {
        if !is_automorphism(g, &perm) {
            return Err(CoverError::NotAutomorphism);
        }
        if perm.iter().enumerate().any(|(v, &u)| perm[u] != v) {
            return Err(CoverError::BadInvolution("not of order two"));
        }
        let colours = g.bipartition();
        Ok(Involution {
            fixed_point_free: perm.iter().enumerate().all(|(v, &u)| u != v),
            swaps_colour_classes: colours.as_ref().is_some_and(|b: &Bipartition| {
                perm.iter()
                    .enumerate()
                    .all(|(v, &u)| b.colour(v) != b.colour(u))
            }),
            no_vertex_adjacent_to_image: perm.iter().enumerate().all(|(v, &u)| !g.has_edge(v, u)),
            perm,
        })
    }

    pub fn is_kronecker(&self) -> bool {
        self.fixed_point_free && self.swaps_colour_classes && self.no_vertex_adjacent_to_image
    }

    /// Cycle notation such as `(0 5)(1 4)(2 3)`; fixed points are omitted.
    pub fn cycle_notation(&self) -> String {
        let mut s = String::new();
        for (v, &u) in self.perm.iter().enumerate() {
            if v < u {
                s.push_str(&format!("({v} {u})"));
            }
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

fn check_cover_input(g: &Graph) -> Result<Bipartition, CoverError> {
    if !g.is_connected() {
        return Err(CoverError::NotConnected);
    }
    g.bipartition().ok_or(CoverError::NotBipartite)
}

struct InvSearch<'a> {
    g: &'a Graph,
    colours: Bipartition,
    sigma: Vec<Option<usize>>,
    out: Vec<Perm>,
}

impl InvSearch<'_> {
    fn consistent(&self, v: usize, u: usize) -> bool {
        for (x, sx) in self.sigma.iter().enumerate() {
            let Some(sx) = *sx else { continue };
            if self.g.has_edge(v, x) != self.g.has_edge(u, sx) {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, v: usize, u: usize) -> bool {
        if v == u || self.g.has_edge(v, u) || self.colours.colour(v) == self.colours.colour(u) {
            return false;
        }
        if !self.consistent(v, u) || !self.consistent(u, v) {
            return false;
        }
        self.sigma[v] = Some(u);
        self.sigma[u] = Some(v);
        true
    }

    fn run(&mut self) {
        let n = self.g.order();
        // Next vertex: an unassigned neighbour of an assigned vertex, so
        // its image is one of at most deg candidates.
        let mut next = None;
        for x in 0..n {
            if let Some(sx) = self.sigma[x] {
                if let Some(v) = bits(self.g.row(x)).find(|&v| self.sigma[v].is_none()) {
                    next = Some((v, self.g.row(sx)));
                    break;
                }
            }
        }
        let (v, cands) = match next {
            Some(c) => c,
            None => {
                if let Some(v) = (0..n).find(|&v| self.sigma[v].is_none()) {
                    (v, u64::MAX >> (64 - n))
                } else {
                    self.out
                        .push(self.sigma.iter().map(|s| s.expect("complete")).collect());
                    return;
                }
            }
        };
        for u in bits(cands) {
            if self.sigma[u].is_some() {
                continue;
            }
            if self.assign(v, u) {
                self.run();
                self.sigma[v] = None;
                self.sigma[u] = None;
            }
        }
    }
}

/// Every fixed-point-free colour-swapping involutive automorphism `σ` with
/// `v ≁ σ(v)`, found by backtracking over partial matchings.
pub fn kronecker_involutions(g: &Graph) -> Result<Vec<Involution>, CoverError> {
    let colours = check_cover_input(g)?;
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let mut s = InvSearch {
        g,
        colours,
        sigma: vec![None; g.order()],
        out: Vec::new(),
    };
    s.run();
    let mut perms = s.out;
    perms.sort();
    perms.dedup();
    perms
        .into_iter()
        .map(|p| {
            let inv = Involution::new(g, p)?;
            debug_assert!(inv.is_kronecker());
            Ok(inv)
        })
        .collect()
}

/// Quotient by the orbits of `sigma`; orbit `i` is the `i`-th orbit by its
/// smallest vertex.
pub fn quotient(g: &Graph, sigma: &Involution) -> Result<Graph, CoverError> {
    let fresh = Involution::new(g, sigma.perm.clone())?;
    if !fresh.fixed_point_free {
        return Err(CoverError::BadInvolution("has a fixed point"));
    }
    if !fresh.swaps_colour_classes {
        return Err(CoverError::BadInvolution(
            "does not swap the colour classes",
        ));
    }
    if !fresh.no_vertex_adjacent_to_image {
        return Err(CoverError::BadInvolution("maps a vertex to a neighbour"));
    }
    let n = g.order();
    let mut orbit = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if orbit[v] == usize::MAX {
            orbit[v] = count;
            orbit[fresh.perm[v]] = count;
            count += 1;
        }
    }
    let mut q = Graph::empty(count).expect("fewer vertices than g");
    for v in 0..n {
        let mut seen = 0u64;
        for u in g.neighbors(v) {
            let o = orbit[u];
            if seen >> o & 1 == 1 {
                return Err(CoverError::MultiEdge(v, u));
            }
            seen |= 1 << o;
            if !q.has_edge(orbit[v], o) {
                q.add_edge(orbit[v], o).expect("orbits differ");
            }
        }
    }
    Ok(q)
}

/// Non-bipartite cubic graphs whose bipartite double is `g`, one per
/// isomorphism class, ordered by canonical form.
pub fn preimages(g: &Graph) -> Result<Vec<Graph>, CoverError> {
    check_cover_input(g)?;
    if !g.is_cubic() {
        return Err(CoverError::NotCubic);
    }
    let mut out: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for sigma in kronecker_involutions(g)? {
        let Ok(h) = quotient(g, &sigma) else { continue };
        out.entry(canonical_form(&h).bytes).or_insert(h);
    }
    Ok(out.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::{cube, guo_mohar, heawood, kollar_sarnak, petersen};
    use crate::transforms::bipartite_double;

    #[test]
    fn group_sizes() {
        assert_eq!(automorphisms(&Graph::complete(4).unwrap()).len(), 24);
        assert_eq!(automorphisms(&petersen()).len(), 120);
        assert_eq!(automorphisms(&cube()).len(), 48);
        for k in 3..=6 {
            assert_eq!(
                automorphisms(&guo_mohar(k).unwrap()).len(),
                (1 << k) * 2 * k
            );
        }
    }

    #[test]
    fn cube_covers_k4() {
        let pre = preimages(&cube()).unwrap();
        assert_eq!(pre.len(), 1);
        assert!(are_isomorphic(&pre[0], &Graph::complete(4).unwrap()));
    }

    #[test]
    fn guo_mohar_preimages() {
        for k in 2..=4 {
            let pre = preimages(&guo_mohar(2 * k).unwrap()).unwrap();
            assert_eq!(pre.len(), 1);
            assert!(are_isomorphic(&pre[0], &kollar_sarnak(k).unwrap()));
        }
        for k in [3, 5, 7] {
            assert!(kronecker_involutions(&guo_mohar(k).unwrap())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn involution_flags() {
        let h = heawood();
        for s in kronecker_involutions(&h).unwrap() {
            assert!(s.is_kronecker());
            let q = quotient(&h, &s).unwrap();
            assert!(are_isomorphic(&bipartite_double(&q).unwrap(), &h));
        }
        assert_eq!(
            kronecker_involutions(&petersen()),
            Err(CoverError::NotBipartite)
        );
        let two = Graph::empty(2).unwrap();
        assert_eq!(kronecker_involutions(&two), Err(CoverError::NotConnected));
    }

    #[test]
    fn cycle_notation() {
        let c = cube();
        let s = Involution::new(&c, (0..8).map(|v| v ^ 7).collect()).unwrap();
        assert!(s.is_kronecker());
        assert_eq!(s.cycle_notation(), "(0 7)(1 6)(2 5)(3 4)");
    }
}
