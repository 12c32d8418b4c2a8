//! Canonical labelling, isomorphism testing and automorphism generators.
//!
//! Individualisation-refinement search over ordered partitions. Every node
//! of the search tree is an equitable ordered partition; a node branches on
//! the vertices of its first non-singleton cell. Each leaf (a discrete
//! partition) yields a relabelled adjacency matrix, and the canonical form
//! is the lexicographically smallest one.
//!
//! Two leaves with the same relabelled matrix give an automorphism. Those
//! are used to prune exactly as in McKay's scheme: a subtree is abandoned
//! once one of its leaves is found equivalent to the first leaf or to the
//! current best leaf, and children of first-path nodes are skipped when
//! they share an orbit (under the generators found so far that fix the
//! path) with an already explored child. The generators found this way
//! generate the whole automorphism group, and the group order is the
//! product of the first-path orbit sizes.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::graph::{bits, low_mask, Graph};
use crate::graph6::to_graph6;

/// A permutation of `0..n`, stored as images: `perm[v]` is the image of `v`.
pub type Perm = Vec<usize>;

/// Label-invariant encoding of a graph (optionally vertex-coloured).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    /// graph6 of the canonical relabelling, followed (for coloured input)
    /// by the sorted colour sequence.
    pub bytes: Vec<u8>,
    /// `relabeling[v]` is the canonical position of vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    /// The canonical bytes as a string; for uncoloured graphs this is the
    /// graph6 of the canonical relabelling.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).unwrap_or("")
    }
}

/// Everything the search learns about one graph.
#[derive(Debug, Clone)]
pub struct SearchResult {
    /// `labeling[v]` is the canonical position of `v`.
    pub labeling: Vec<usize>,
    pub canonical: Graph,
    /// Generators of the (colour-preserving) automorphism group.
    pub generators: Vec<Perm>,
    pub group_order: BigUint,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let res = search(g, None);
    CanonicalForm {
        bytes: to_graph6(&res.canonical).into_bytes(),
        relabeling: res.labeling,
    }
}

/// Canonical form of a vertex-coloured graph. Isomorphisms must map each
/// vertex to one of the same colour.
pub fn canonical_form_coloured(g: &Graph, colours: &[u32]) -> CanonicalForm {
    assert_eq!(colours.len(), g.order(), "one colour per vertex");
    let res = search(g, Some(colours));
    let mut bytes = to_graph6(&res.canonical).into_bytes();
    let mut sorted = colours.to_vec();
    sorted.sort_unstable();
    bytes.push(b'|');
    for c in sorted {
        bytes.extend_from_slice(&c.to_le_bytes());
    }
    CanonicalForm {
        bytes,
        relabeling: res.labeling,
    }
}

/// Canonical graph6 string.
pub fn canonical_graph6(g: &Graph) -> String {
    to_graph6(&search(g, None).canonical)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    search(g, None).canonical == search(h, None).canonical
}

/// Run the full search. `colours`, when given, fixes the initial partition.
pub fn search(g: &Graph, colours: Option<&[u32]>) -> SearchResult {
    let n = g.order();
    let cells = initial_partition(n, colours);
    let mut cells = cells;
    let queue: VecDeque<u64> = cells.iter().copied().collect();
    refine(g, &mut cells, queue);

    let mut s = Searcher {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
        order: BigUint::from(1u32),
    };
    let mut path = Vec::new();
    s.descend(cells, &mut path);

    let best = s.best.expect("search always reaches a leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in best.lab.iter().enumerate() {
        labeling[v] = pos;
    }
    SearchResult {
        labeling,
        canonical: Graph::from_rows(best.rows).expect("relabelled graph is valid"),
        generators: s.generators,
        group_order: s.order,
    }
}

fn initial_partition(n: usize, colours: Option<&[u32]>) -> Vec<u64> {
    match colours {
        None => {
            if n == 0 {
                Vec::new()
            } else {
                vec![low_mask(n)]
            }
        }
        Some(cs) => {
            let mut values: Vec<u32> = cs.to_vec();
            values.sort_unstable();
            values.dedup();
            values
                .iter()
                .map(|&c| {
                    cs.iter()
                        .enumerate()
                        .filter(|(_, &x)| x == c)
                        .fold(0u64, |m, (v, _)| m | 1 << v)
                })
                .collect()
        }
    }
}

/// Refine an ordered partition to the coarsest equitable refinement
/// reachable from the splitters in `queue`. Cells are split by the number
/// of neighbours inside the splitter; fragments are ordered by ascending
/// count and replace the original cell in place, so the outcome depends
/// only on cell positions and is therefore label-invariant.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let n = g.order();
    let rows = g.rows();
    let mut count = [0u32; 64];
    let mut frags: Vec<(u32, u64)> = Vec::with_capacity(8);
    while let Some(w) = queue.pop_front() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & x.wrapping_sub(1) == 0 {
                i += 1;
                continue;
            }
            let mut lo = u32::MAX;
            let mut hi = 0;
            for v in bits(x) {
                let c = (rows[v] & w).count_ones();
                count[v] = c;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            frags.clear();
            for v in bits(x) {
                let c = count[v];
                match frags.iter_mut().find(|(k, _)| *k == c) {
                    Some((_, m)) => *m |= 1 << v,
                    None => frags.push((c, 1 << v)),
                }
            }
            frags.sort_unstable_by_key(|&(k, _)| k);
            let k = frags.len();
            cells.splice(i..=i, frags.iter().map(|&(_, m)| m));
            queue.extend(frags.iter().map(|&(_, m)| m));
            i += k;
        }
    }
}

struct Leaf {
    /// position -> vertex
    lab: Vec<usize>,
    rows: Vec<u64>,
    path: Vec<usize>,
}

struct Searcher<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
    order: BigUint,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Searcher<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let on_first_path = match &self.first {
            None => true,
            Some(z) => z.path.len() > depth && z.path[..depth] == path[..],
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cells[t]) {
            if on_first_path && !explored.is_empty() && self.shares_orbit(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest = child[t] & !(1 << v);
            child[t] = 1 << v;
            child.insert(t + 1, rest);
            refine(self.g, &mut child, VecDeque::from([1u64 << v]));
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        if on_first_path {
            let first_child = self.first.as_ref().expect("leaf reached").path[depth];
            let orbit = self.orbit_of(first_child, path);
            self.order *= BigUint::from(orbit.count_ones());
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = cells.len();
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| bits(self.g.row(v)).fold(0u64, |r, u| r | 1 << pos[u]))
            .collect();

        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab: lab.clone(),
                rows: rows.clone(),
                path: path.to_vec(),
            };
            self.first = Some(Leaf {
                lab,
                rows,
                path: path.to_vec(),
            });
            self.best = Some(leaf);
            return None;
        };
        if rows == first.rows {
            let gamma = map_between(&first.lab, &lab);
            let level = common_prefix(path, &first.path);
            self.generators.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        match rows.cmp(&best.rows) {
            Ordering::Equal => {
                let gamma = map_between(&best.lab, &lab);
                let level = common_prefix(path, &best.path);
                self.generators.push(gamma);
                Some(level)
            }
            Ordering::Less => {
                self.best = Some(Leaf {
                    lab,
                    rows,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Greater => None,
        }
    }

    /// Orbit (as a bitmask) of `v` under the generators fixing `path` pointwise.
    fn orbit_of(&self, v: usize, path: &[usize]) -> u64 {
        let gens: Vec<&Perm> = self
            .generators
            .iter()
            .filter(|p| path.iter().all(|&x| p[x] == x))
            .collect();
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                for p in &gens {
                    next |= 1 << p[u];
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        orbit
    }

    fn shares_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let orbit = self.orbit_of(v, path);
        explored.iter().any(|&u| orbit >> u & 1 == 1)
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Perm {
    let mut p = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        p[a] = b;
    }
    p
}

/// Orbits of the group generated by `gens` on `0..n`, as a representative
/// map: `rep[v]` is the smallest vertex in the orbit of `v`.
pub fn orbit_representatives(n: usize, gens: &[Perm]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in gens {
        for v in 0..n {
            let a = find(&mut parent, v);
            let b = find(&mut parent, p[v]);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    perm.len() == g.order()
        && (0..g.order())
            .all(|v| bits(g.row(v)).fold(0u64, |r, u| r | 1 << perm[u]) == g.row(perm[v]))
}
