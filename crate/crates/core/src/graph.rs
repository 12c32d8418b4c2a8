//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row: bit `u` of row `v` is set iff
//! `{u, v}` is an edge. Rows are kept symmetric and loop-free, and bits at
//! positions `>= n` are always clear.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, the limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("permutation of length {got} does not match {n} vertices")]
    BadPermutation { got: usize, n: usize },
}

/// Iterate over the set bits of a word, lowest first.
#[inline]
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// Bitmask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for v in 0..n {
            g.adj[v] = mask & !(1u64 << v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Vertex sets of the connected components, each as a bitmask, ordered
    /// by smallest member.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    /// The empty graph and K1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// A proper 2-colouring, one component at a time. The smallest vertex
    /// of each component lands in the first class.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut colour = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        let mut classes = [0u64; 2];
        for (v, &c) in colour.iter().enumerate() {
            classes[c as usize] |= 1 << v;
        }
        Some(Bipartition { classes })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation {
                got: perm.len(),
                n: self.n,
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(GraphError::BadPermutation {
                    got: perm.len(),
                    n: self.n,
                });
            }
            seen |= 1 << p;
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = 0u64;
            for u in bits(self.adj[v]) {
                row |= 1 << perm[u];
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Graph induced on `vertices` (relabelled `0..k` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|v| {
                (0..self.n)
                    .map(|u| i64::from(self.has_edge(v, u)))
                    .collect()
            })
            .collect()
    }

    /// Number of common neighbours of `u` and `v` (walks of length two).
    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }
}

/// A 2-colouring; every edge joins the two classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    classes: [u64; 2],
}

impl Bipartition {
    pub fn class_mask(&self, i: usize) -> u64 {
        self.classes[i]
    }

    pub fn class(&self, i: usize) -> Vec<usize> {
        bits(self.classes[i]).collect()
    }

    /// 0 or 1.
    pub fn colour(&self, v: usize) -> usize {
        usize::from(self.classes[1] >> v & 1 == 1)
    }

    pub fn sizes(&self) -> (usize, usize) {
        (
            self.classes[0].count_ones() as usize,
            self.classes[1].count_ones() as usize,
        )
    }
}
