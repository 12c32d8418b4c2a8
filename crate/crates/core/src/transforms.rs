//! Derived graphs: bipartite double, 2-distance graph, line graph, and
//! incidence graphs of point-line geometries.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{bits, Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("line {line} has a point outside 0..{points}")]
    PointOutOfRange { line: usize, points: usize },
    #[error("line {0} repeats a point")]
    RepeatedPoint(usize),
    #[error("line {0} duplicates an earlier line")]
    DuplicateLine(usize),
    #[error("points {0} and {1} lie on two common lines")]
    NotPartialLinear(usize, usize),
    #[error("point {point} lies on {count} lines, expected 3")]
    PointDegree { point: usize, count: usize },
    #[error("incidence graph needs {0} vertices")]
    TooLarge(usize),
    #[error("geometry text: {0}")]
    Parse(String),
}

/// A point-line incidence structure with three points per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    pub points: usize,
    pub lines: Vec<[usize; 3]>,
}

impl Geometry {
    pub fn new(points: usize, lines: Vec<[usize; 3]>) -> Result<Self, GeometryError> {
        let g = Geometry { points, lines };
        g.validate()?;
        Ok(g)
    }

    /// Check the partial-linear-space axioms.
    pub fn validate(&self) -> Result<(), GeometryError> {
        let mut seen_lines = HashSet::new();
        let mut seen_pairs = HashSet::new();
        for (i, line) in self.lines.iter().enumerate() {
            if line.iter().any(|&p| p >= self.points) {
                return Err(GeometryError::PointOutOfRange {
                    line: i,
                    points: self.points,
                });
            }
            let mut s = *line;
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(GeometryError::RepeatedPoint(i));
            }
            if !seen_lines.insert(s) {
                return Err(GeometryError::DuplicateLine(i));
            }
            for (a, b) in [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])] {
                if !seen_pairs.insert((a, b)) {
                    return Err(GeometryError::NotPartialLinear(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn point_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.points];
        for line in &self.lines {
            for &p in line {
                d[p] += 1;
            }
        }
        d
    }

    pub fn check_three_regular(&self) -> Result<(), GeometryError> {
        match self.point_degrees().iter().position(|&c| c != 3) {
            Some(point) => Err(GeometryError::PointDegree {
                point,
                count: self.point_degrees()[point],
            }),
            None => Ok(()),
        }
    }

    /// Parse `p l` followed by `l` lines of three point indices.
    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        let bad = |m: &str| GeometryError::Parse(m.to_string());
        let mut rows = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let head: Vec<usize> = rows
            .next()
            .ok_or_else(|| bad("missing header"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("header is not two integers")))
            .collect::<Result<_, _>>()?;
        let [p, l] = head[..] else {
            return Err(bad("header is not two integers"));
        };
        let mut lines = Vec::with_capacity(l);
        for (i, row) in rows.enumerate() {
            let pts: Vec<usize> = row
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| bad(&format!("line {}: not an integer", i + 1)))
                })
                .collect::<Result<_, _>>()?;
            let [a, b, c] = pts[..] else {
                return Err(bad(&format!("line {} does not have three points", i + 1)));
            };
            lines.push([a, b, c]);
        }
        if lines.len() != l {
            return Err(bad(&format!("expected {l} lines, found {}", lines.len())));
        }
        Geometry::new(p, lines)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.points, self.lines.len())?;
        for [a, b, c] in &self.lines {
            writeln!(f, "{a} {b} {c}")?;
        }
        Ok(())
    }
}

/// The Fano plane with lines `{i, i+1, i+3}` mod 7.
pub fn fano_plane() -> Geometry {
    let lines = (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]).collect();
    Geometry::new(7, lines).expect("Fano plane is a linear space")
}

/// `G x K2`: vertex `(x, i)` gets index `2x + i`, edges `(u,i)(v,1-i)`.
pub fn bipartite_double(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    let mut h = Graph::empty(2 * n)?;
    for (u, v) in g.edges() {
        h.add_edge(2 * u, 2 * v + 1)?;
        h.add_edge(2 * u + 1, 2 * v)?;
    }
    Ok(h)
}

/// Vertices at distance exactly two become adjacent.
pub fn distance_two_graph(g: &Graph) -> Graph {
    let rows = (0..g.order())
        .map(|v| {
            let reach = bits(g.row(v)).fold(0u64, |acc, u| acc | g.row(u));
            reach & !g.row(v) & !(1u64 << v)
        })
        .collect();
    Graph::from_rows(rows).expect("distance-two relation is symmetric")
}

/// Vertices are the edges of `g` in sorted order; adjacent when they share
/// an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges = g.edges();
    let mut h = Graph::empty(edges.len())?;
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for j in i + 1..edges.len() {
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                h.add_edge(i, j)?;
            }
        }
    }
    Ok(h)
}

/// Points are vertices `0..p`, line `i` is vertex `p + i`.
pub fn incidence_graph(geom: &Geometry) -> Result<Graph, GeometryError> {
    geom.validate()?;
    let n = geom.points + geom.lines.len();
    if n > MAX_VERTICES {
        return Err(GeometryError::TooLarge(n));
    }
    let mut g = Graph::empty(n).expect("size checked");
    for (i, line) in geom.lines.iter().enumerate() {
        for &p in line {
            g.add_edge(p, geom.points + i).expect("indices checked");
        }
    }
    Ok(g)
}
