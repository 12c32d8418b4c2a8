//! Isomorph-free generation of connected cubic graphs and the gap
//! classification run.
//!
//! Generation is canonical augmentation with two operations.
//!
//! * Edge insertion: subdivide two distinct edges and join the two new
//!   vertices. Its inverse removes an edge `xy` and joins the remaining
//!   neighbours pairwise; it applies when `xy` is not a bridge, the other two
//!   neighbours of `x` are non-adjacent, likewise for `y`, and the two pairs
//!   differ.
//! * Diamond insertion: replace an edge `uv` by a path `u p`, `q v` through a
//!   diamond (`K4` minus the edge `pq`). Its inverse needs `u != v` and
//!   `u`, `v` non-adjacent.
//!
//! A graph is reduced by edge removal whenever possible, otherwise by
//! diamond removal. Graphs admitting neither are `K4` and trees whose
//! internal vertices are plain and whose leaves carry a diamond on a loop;
//! below 22 vertices these are the two- and three-leaf trees on 10 and 16
//! vertices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, search, Perm};
use crate::families::{identify, sporadic, FamilyTag};
use crate::graph::{bits, Graph};
use crate::graph6::to_graph6;
use crate::spectra::{certify_gap, GapCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("no cubic graph has an odd number of vertices ({0})")]
    OddOrder(usize),
    #[error("order {0} is outside the supported range 4..=20")]
    OutOfRange(usize),
    #[error("could not build a thread pool: {0}")]
    ThreadPool(String),
}

/// Restrictions applied to the generated graphs. Connectivity is implied.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CubicFilter {
    pub bipartite_only: bool,
    pub min_girth: usize,
}

impl CubicFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.bipartite_only || g.is_bipartite())
            && (self.min_girth <= 3 || g.girth().is_some_and(|x| x >= self.min_girth))
    }
}

pub const MAX_ORDER: usize = 20;

/// Ring of `k` diamonds (`K4` minus an edge), the degree-2 vertices of
/// consecutive diamonds joined.
pub fn diamond_necklace(k: usize) -> Graph {
    let mut g = Graph::empty(4 * k).expect("at most 64 vertices");
    for i in 0..k {
        let (p, a, b, q) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        for (u, v) in [
            (p, a),
            (p, b),
            (a, b),
            (a, q),
            (b, q),
            (q, (4 * i + 4) % (4 * k)),
        ] {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

fn is_bridge(g: &Graph, x: usize, y: usize) -> bool {
    let mut seen = 1u64 << x;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            let mut row = g.row(v);
            if v == x {
                row &= !(1 << y);
            }
            next |= row;
        }
        frontier = next & !seen;
        seen |= frontier;
        if seen >> y & 1 == 1 {
            return false;
        }
    }
    true
}

/// Whether the reduction at edge `xy` yields a simple connected cubic graph.
pub fn is_reducible(g: &Graph, x: usize, y: usize) -> bool {
    let rx = g.row(x) & !(1 << y);
    let ry = g.row(y) & !(1 << x);
    let pair = |r: u64| {
        let a = r.trailing_zeros() as usize;
        let b = 63 - r.leading_zeros() as usize;
        (a, b)
    };
    let (a, b) = pair(rx);
    let (c, d) = pair(ry);
    !g.has_edge(a, b) && !g.has_edge(c, d) && rx != ry && !is_bridge(g, x, y)
}

pub fn reducible_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(x, y)| is_reducible(g, x, y))
        .collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.0[hi] = lo;
        }
    }
}

fn edge_index(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        idx[u * n + v] = i;
        idx[v * n + u] = i;
    }
    idx
}

/// Subdivide `ab` with `x = n`, `cd` with `y = n + 1`, and join `x y`.
fn insert_edge(p: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> Graph {
    let n = p.order();
    let mut rows = p.rows().to_vec();
    rows.extend([0, 0]);
    let (x, y) = (n, n + 1);
    let mut link = |u: usize, v: usize, on: bool| {
        if on {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        } else {
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
        }
    };
    link(a, b, false);
    link(c, d, false);
    link(a, x, true);
    link(b, x, true);
    link(c, y, true);
    link(d, y, true);
    link(x, y, true);
    Graph::from_rows(rows).expect("insertion keeps the graph simple")
}

/// Replace `uv` by `u p`, diamond `p a b q` with middle `ab`, and `q v`.
fn insert_diamond(g: &Graph, (u, v): (usize, usize)) -> Graph {
    let n = g.order();
    let mut rows = g.rows().to_vec();
    rows.extend([0; 4]);
    let (p, a, b, q) = (n, n + 1, n + 2, n + 3);
    rows[u] &= !(1 << v);
    rows[v] &= !(1 << u);
    for (x, y) in [(u, p), (p, a), (p, b), (a, b), (a, q), (b, q), (q, v)] {
        rows[x] |= 1 << y;
        rows[y] |= 1 << x;
    }
    Graph::from_rows(rows).expect("insertion keeps the graph simple")
}

/// Middle edges `ab` of diamonds `p a b q` whose removal is defined: the
/// outer neighbours of `p` and `q` are distinct and non-adjacent.
pub fn reducible_diamonds(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        let common = g.row(a) & g.row(b);
        if common.count_ones() != 2 {
            continue;
        }
        let p = common.trailing_zeros() as usize;
        let q = 63 - common.leading_zeros() as usize;
        if g.has_edge(p, q) {
            continue;
        }
        let inner = (1u64 << a) | (1u64 << b);
        let (pu, qv) = (g.row(p) & !inner, g.row(q) & !inner);
        if pu.count_ones() != 1 || qv.count_ones() != 1 {
            continue;
        }
        let (u, v) = (pu.trailing_zeros() as usize, qv.trailing_zeros() as usize);
        if u != v && !g.has_edge(u, v) {
            out.push((a, b));
        }
    }
    out
}

/// Whether `e` and the candidate with the smallest canonical key lie in
/// the same `Aut(child)` edge orbit. Returns the canonically labelled
/// child on success.
fn in_canonical_orbit(
    child: &Graph,
    e: (usize, usize),
    candidates: &[(usize, usize)],
) -> Option<Graph> {
    let res = search(child, None);
    let lab = &res.labeling;
    let key = |(u, v): (usize, usize)| {
        let (p, q) = (lab[u], lab[v]);
        if p < q {
            (p, q)
        } else {
            (q, p)
        }
    };
    let best = *candidates.iter().min_by_key(|&&c| key(c))?;
    if key(best) == key(e) {
        return Some(res.canonical);
    }
    if res.generators.is_empty() {
        return None;
    }
    let n = child.order();
    let edges = child.edges();
    let idx = edge_index(n, &edges);
    let mut uf = UnionFind::new(edges.len());
    for gen in &res.generators {
        for (i, &(u, v)) in edges.iter().enumerate() {
            uf.union(i, idx[gen[u] * n + gen[v]]);
        }
    }
    if uf.find(idx[e.0 * n + e.1]) == uf.find(idx[best.0 * n + best.1]) {
        Some(res.canonical)
    } else {
        None
    }
}

/// Edge-insertion child: the new edge `(x, y)` must be in the orbit of the
/// canonical reducible edge.
fn accept_edge(child: &Graph, x: usize, y: usize) -> Option<Graph> {
    in_canonical_orbit(child, (x, y), &reducible_edges(child))
}

/// Diamond-insertion child: no reducible edge may exist and the new
/// diamond must be in the orbit of the canonical reducible diamond.
fn accept_diamond(child: &Graph, middle: (usize, usize)) -> Option<Graph> {
    if child
        .edges()
        .into_iter()
        .any(|(x, y)| is_reducible(child, x, y))
    {
        return None;
    }
    in_canonical_orbit(child, middle, &reducible_diamonds(child))
}

/// Representatives of the `Aut(p)` orbits on edges.
fn edge_orbits(p: &Graph, gens: &[Perm]) -> Vec<(usize, usize)> {
    let n = p.order();
    let edges = p.edges();
    let idx = edge_index(n, &edges);
    let mut uf = UnionFind::new(edges.len());
    for gen in gens {
        for (i, &(u, v)) in edges.iter().enumerate() {
            uf.union(i, idx[gen[u] * n + gen[v]]);
        }
    }
    (0..edges.len())
        .filter(|&i| uf.find(i) == i)
        .map(|i| edges[i])
        .collect()
}

/// Representatives of the `Aut(p)` orbits on unordered pairs of distinct
/// edges.
fn edge_pair_orbits(p: &Graph, gens: &[Perm]) -> Vec<((usize, usize), (usize, usize))> {
    let n = p.order();
    let edges = p.edges();
    let m = edges.len();
    let idx = edge_index(n, &edges);
    let pair = |i: usize, j: usize| if i < j { i * m + j } else { j * m + i };
    let mut uf = UnionFind::new(m * m);
    for gen in gens {
        let image: Vec<usize> = edges
            .iter()
            .map(|&(u, v)| idx[gen[u] * n + gen[v]])
            .collect();
        for i in 0..m {
            for j in i + 1..m {
                uf.union(pair(i, j), pair(image[i], image[j]));
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if uf.find(pair(i, j)) == pair(i, j) {
                out.push((edges[i], edges[j]));
            }
        }
    }
    out
}

/// Children on `n + 2` vertices under canonical edge insertion.
pub fn edge_children(p: &Graph) -> Vec<Graph> {
    let res = search(p, None);
    let n = p.order();
    edge_pair_orbits(p, &res.generators)
        .into_iter()
        .filter_map(|(e1, e2)| accept_edge(&insert_edge(p, e1, e2), n, n + 1))
        .collect()
}

/// Children on `n + 4` vertices under canonical diamond insertion.
pub fn diamond_children(p: &Graph) -> Vec<Graph> {
    let res = search(p, None);
    let n = p.order();
    edge_orbits(p, &res.generators)
        .into_iter()
        .filter_map(|e| accept_diamond(&insert_diamond(p, e), (n + 1, n + 2)))
        .collect()
}

fn sort_dedup(mut gs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = gs.drain(..).map(|g| (to_graph6(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// A vertex `u` whose other two edges lead to the tips of a diamond.
/// Returns the index of `u`; the block occupies `base..base + 5`.
fn pendant_block(g: &mut Graph, base: usize) -> usize {
    let (u, p, a, b, q) = (base, base + 1, base + 2, base + 3, base + 4);
    for (x, y) in [(u, p), (u, q), (p, a), (p, b), (a, b), (a, q), (b, q)] {
        g.add_edge(x, y).expect("in range");
    }
    u
}

/// Trees of pendant blocks: two blocks joined by a bridge (10 vertices),
/// or three blocks around a central vertex (16 vertices).
pub fn pendant_block_tree(leaves: usize) -> Option<Graph> {
    match leaves {
        2 => {
            let mut g = Graph::empty(10).expect("10 vertices");
            let a = pendant_block(&mut g, 0);
            let b = pendant_block(&mut g, 5);
            g.add_edge(a, b).expect("in range");
            Some(g)
        }
        3 => {
            let mut g = Graph::empty(16).expect("16 vertices");
            for i in 0..3 {
                let u = pendant_block(&mut g, 1 + 5 * i);
                g.add_edge(0, u).expect("in range");
            }
            Some(g)
        }
        _ => None,
    }
}

fn roots(n: usize) -> Vec<Graph> {
    let r = match n {
        4 => Graph::complete(4).ok(),
        10 => pendant_block_tree(2),
        16 => pendant_block_tree(3),
        _ => None,
    };
    r.into_iter().map(|g| search(&g, None).canonical).collect()
}

fn check_order(n: usize) -> Result<(), EnumError> {
    if n % 2 == 1 {
        return Err(EnumError::OddOrder(n));
    }
    if !(4..=MAX_ORDER).contains(&n) {
        return Err(EnumError::OutOfRange(n));
    }
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, EnumError> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| EnumError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// All connected cubic graphs on `4, 6, ..., n_max` vertices, one per
/// isomorphism class, canonically labelled and sorted by graph6. `jobs`
/// fixes the number of worker threads (`None`: the global pool).
pub fn cubic_graphs_by_order(
    n_max: usize,
    jobs: Option<usize>,
) -> Result<BTreeMap<usize, Vec<Graph>>, EnumError> {
    check_order(n_max)?;
    with_jobs(jobs, || {
        let mut levels: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        levels.insert(4, roots(4));
        for n in (6..=n_max).step_by(2) {
            let mut next: Vec<Graph> = levels[&(n - 2)]
                .par_iter()
                .flat_map_iter(edge_children)
                .collect();
            if let Some(prev) = levels.get(&(n - 4)) {
                next.par_extend(prev.par_iter().flat_map_iter(diamond_children));
            }
            next.extend(roots(n));
            levels.insert(n, sort_dedup(next));
        }
        levels
    })
}

pub fn cubic_graphs(n: usize, filter: CubicFilter) -> Result<Vec<Graph>, EnumError> {
    cubic_graphs_jobs(n, filter, None)
}

pub fn cubic_graphs_jobs(
    n: usize,
    filter: CubicFilter,
    jobs: Option<usize>,
) -> Result<Vec<Graph>, EnumError> {
    let mut levels = cubic_graphs_by_order(n, jobs)?;
    let gs = levels.remove(&n).unwrap_or_default();
    Ok(gs.into_iter().filter(|g| filter.accepts(g)).collect())
}

/// Independent oracle: every labelled cubic graph up to the symmetry of
/// untouched vertices, deduplicated by canonical form. Practical for
/// `n <= 10`.
pub fn cubic_graphs_brute_force(n: usize) -> Vec<Graph> {
    fn rec(rows: &mut Vec<u64>, n: usize, out: &mut BTreeMap<Vec<u8>, Graph>) {
        let Some(v) = (0..n).find(|&v| rows[v].count_ones() < 3) else {
            let g = Graph::from_rows(rows.clone()).expect("valid");
            if g.is_connected() {
                let c = canonical_form(&g);
                out.entry(c.bytes)
                    .or_insert_with(|| search(&g, None).canonical);
            }
            return;
        };
        let need = 3 - rows[v].count_ones() as usize;
        let candidates: Vec<usize> = (v + 1..n)
            .filter(|&u| rows[u].count_ones() < 3 && rows[v] >> u & 1 == 0)
            .collect();
        let untouched: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&u| rows[u] == 0)
            .collect();
        let mut choice = Vec::with_capacity(need);
        choose(
            rows,
            n,
            v,
            &candidates,
            &untouched,
            0,
            need,
            &mut choice,
            out,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        rows: &mut Vec<u64>,
        n: usize,
        v: usize,
        cands: &[usize],
        untouched: &[usize],
        start: usize,
        need: usize,
        choice: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<u8>, Graph>,
    ) {
        if choice.len() == need {
            // untouched vertices are interchangeable: only their smallest
            // members may be used, in order
            let used: Vec<usize> = choice
                .iter()
                .copied()
                .filter(|u| untouched.contains(u))
                .collect();
            if used.iter().zip(untouched).any(|(a, b)| a != b) {
                return;
            }
            for &u in choice.iter() {
                rows[v] |= 1 << u;
                rows[u] |= 1 << v;
            }
            rec(rows, n, out);
            for &u in choice.iter() {
                rows[v] &= !(1 << u);
                rows[u] &= !(1 << v);
            }
            return;
        }
        for i in start..cands.len() {
            choice.push(cands[i]);
            choose(rows, n, v, cands, untouched, i + 1, need, choice, out);
            choice.pop();
        }
    }

    if n % 2 == 1 || !(4..=64).contains(&n) {
        return Vec::new();
    }
    let mut out = BTreeMap::new();
    rec(&mut vec![0u64; n], n, &mut out);
    sort_dedup(out.into_values().collect())
}

/// A graph surviving the gap test.
#[derive(Debug, Clone, Serialize)]
pub struct Survivor {
    pub graph6: String,
    #[serde(serialize_with = "tag_text")]
    pub tag: Option<FamilyTag>,
    pub certificate: GapCertificate,
}

fn tag_text<S: serde::Serializer>(tag: &Option<FamilyTag>, s: S) -> Result<S::Ok, S::Error> {
    match tag {
        Some(t) => s.serialize_str(&t.to_string()),
        None => s.serialize_str("unclassified"),
    }
}

impl Survivor {
    pub fn label(&self) -> String {
        match self.tag {
            None => "unclassified".to_string(),
            Some(FamilyTag::Sporadic(id)) => {
                let desc = sporadic(id).map(|e| e.description).unwrap_or("");
                format!("sporadic #{id}: {desc}")
            }
            Some(t) => t.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    pub n: usize,
    pub generated: usize,
    pub survivors: Vec<Survivor>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub orders: Vec<OrderReport>,
    pub total_generated: usize,
    pub total_survivors: usize,
}

impl GapReport {
    pub fn survivors(&self) -> impl Iterator<Item = &Survivor> {
        self.orders.iter().flat_map(|o| o.survivors.iter())
    }

    pub fn unclassified(&self) -> usize {
        self.survivors().filter(|s| s.tag.is_none()).count()
    }

    /// Human-readable table: vertices, bipartite mark, identification.
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>8}  {:>9}  {:<10}  Description",
            "Vertices", "Bipartite", "graph6"
        );
        for o in &self.orders {
            for v in &o.survivors {
                let bip = crate::graph6::parse_graph6(&v.graph6)
                    .map(|g| g.is_bipartite())
                    .unwrap_or(false);
                let _ = writeln!(
                    s,
                    "{:>8}  {:>9}  {:<10}  {}",
                    o.n,
                    if bip { "yes" } else { "" },
                    v.graph6,
                    v.label()
                );
            }
        }
        let _ = writeln!(s);
        for o in &self.orders {
            let _ = writeln!(
                s,
                "n = {:>2}: {:>5} generated, {} survivors",
                o.n,
                o.generated,
                o.survivors.len()
            );
        }
        let _ = writeln!(
            s,
            "total: {} generated, {} survivors",
            self.total_generated, self.total_survivors
        );
        s
    }
}

/// Generate every connected cubic graph up to `n_max` vertices, certify
/// each, and identify the survivors.
pub fn classify_gap(n_max: usize, jobs: Option<usize>) -> Result<GapReport, EnumError> {
    let levels = cubic_graphs_by_order(n_max, jobs)?;
    with_jobs(jobs, || {
        let orders: Vec<OrderReport> = levels
            .iter()
            .map(|(&n, gs)| {
                let survivors: Vec<Survivor> = gs
                    .par_iter()
                    .map(certify_gap)
                    .zip(gs.par_iter())
                    .filter(|(c, _)| c.verdict)
                    .map(|(certificate, g)| Survivor {
                        graph6: certificate.graph6.clone(),
                        tag: identify(g),
                        certificate,
                    })
                    .collect();
                OrderReport {
                    n,
                    generated: gs.len(),
                    survivors,
                }
            })
            .collect();
        GapReport {
            total_generated: orders.iter().map(|o| o.generated).sum(),
            total_survivors: orders.iter().map(|o| o.survivors.len()).sum(),
            orders,
        }
    })
}
