//! Triangles and triangle decompositions (exact cover of the edge set).

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_form_coloured, CanonicalForm};
use crate::graph::{bits, Graph};
use crate::transforms::{incidence_graph, Geometry};

pub type Triangle = [usize; 3];

/// All triangles `[a, b, c]` with `a < b < c`, sorted.
pub fn triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        let up = g.row(a) & !(u64::MAX >> (63 - a));
        for b in bits(up) {
            let common = up & g.row(b) & !(u64::MAX >> (63 - b));
            for c in bits(common) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleDecomposition {
    pub host: Graph,
    pub triangles: Vec<Triangle>,
}

impl TriangleDecomposition {
    /// Edge-disjoint and covering every edge of the host exactly once.
    pub fn is_valid(&self) -> bool {
        let mut rows = self.host.rows().to_vec();
        for &[a, b, c] in &self.triangles {
            for (u, v) in [(a, b), (a, c), (b, c)] {
                if u >= rows.len() || v >= rows.len() || rows[u] >> v & 1 == 0 {
                    return false;
                }
                rows[u] &= !(1 << v);
                rows[v] &= !(1 << u);
            }
        }
        rows.iter().all(|&r| r == 0)
    }

    pub fn to_geometry(&self) -> Geometry {
        decomposition_to_geometry(self)
    }

    /// Key identifying the decomposition up to automorphisms of the host:
    /// the coloured canonical form of its point-line incidence graph.
    pub fn orbit_key(&self) -> CanonicalForm {
        let geom = self.to_geometry();
        let inc = incidence_graph(&geom).expect("decomposition is a partial linear space");
        let colours: Vec<u32> = (0..inc.order())
            .map(|v| u32::from(v >= geom.points))
            .collect();
        canonical_form_coloured(&inc, &colours)
    }
}

pub fn decomposition_to_geometry(d: &TriangleDecomposition) -> Geometry {
    Geometry::new(d.host.order(), d.triangles.clone())
        .expect("edge-disjoint triangles never share two points")
}

struct Search<'a> {
    host: &'a Graph,
    limit: Option<usize>,
    chosen: Vec<Triangle>,
    out: Vec<TriangleDecomposition>,
}

impl Search<'_> {
    fn run(&mut self, rows: &mut [u64]) {
        if self.limit.is_some_and(|l| self.out.len() >= l) {
            return;
        }
        // Edge with the fewest triangles still available.
        let mut best: Option<(u32, usize, usize)> = None;
        for u in 0..rows.len() {
            for v in bits(rows[u] & !(u64::MAX >> (63 - u))) {
                let k = (rows[u] & rows[v]).count_ones();
                if best.is_none_or(|(bk, _, _)| k < bk) {
                    best = Some((k, u, v));
                    if k == 0 {
                        return;
                    }
                }
            }
        }
        let Some((_, u, v)) = best else {
            let mut t = self.chosen.clone();
            t.sort_unstable();
            self.out.push(TriangleDecomposition {
                host: self.host.clone(),
                triangles: t,
            });
            return;
        };
        for w in bits(rows[u] & rows[v]) {
            let mut tri = [u, v, w];
            tri.sort_unstable();
            for (a, b) in [(u, v), (u, w), (v, w)] {
                rows[a] &= !(1 << b);
                rows[b] &= !(1 << a);
            }
            self.chosen.push(tri);
            self.run(rows);
            self.chosen.pop();
            for (a, b) in [(u, v), (u, w), (v, w)] {
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
            }
        }
    }
}

/// Triangle decompositions of `g`, at most `limit` of them. With
/// `up_to_automorphism` one representative per `Aut(g)` orbit is kept,
/// ordered by canonical key.
pub fn triangle_decompositions(
    g: &Graph,
    limit: Option<usize>,
    up_to_automorphism: bool,
) -> Vec<TriangleDecomposition> {
    if !g.edge_count().is_multiple_of(3) {
        return Vec::new();
    }
    let mut s = Search {
        host: g,
        limit,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    let mut rows = g.rows().to_vec();
    s.run(&mut rows);
    if !up_to_automorphism {
        return s.out;
    }
    let mut reps: BTreeMap<Vec<u8>, TriangleDecomposition> = BTreeMap::new();
    for d in s.out {
        reps.entry(d.orbit_key().bytes).or_insert(d);
    }
    reps.into_values().collect()
}

/// Incidence graphs of all triangle decompositions of a 6-regular host,
/// one per isomorphism class, ordered by canonical form.
pub fn girth6_pipeline(host: &Graph) -> Vec<Graph> {
    let mut out: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for d in triangle_decompositions(host, None, true) {
        let Ok(inc) = incidence_graph(&d.to_geometry()) else {
            continue;
        };
        out.entry(canonical_form(&inc).bytes).or_insert(inc);
    }
    out.into_values().collect()
}
