use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// Finite simple graph with named vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Self {
        let mut g = Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    /// Graph whose vertices appear in order of first mention.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut g = Graph::new(Vec::<String>::new());
        for (a, b) in edges {
            g.add_vertex(a.as_ref());
            g.add_vertex(b.as_ref());
            g.add_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(g)
    }

    /// Adds the vertex if absent; returns its index.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        match self.vertices.iter().position(|v| *v == name) {
            Some(i) => i,
            None => {
                self.vertices.push(name);
                self.vertices.len() - 1
            }
        }
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let ia = self.index(a)?;
        let ib = self.index(b)?;
        if ia == ib {
            return Err(Error::GraphLoop(a.to_string()));
        }
        let e = (ia.min(ib), ia.max(ib));
        if let Err(pos) = self.edges.binary_search(&e) {
            self.edges.insert(pos, e);
        }
        Ok(())
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Disjoint union; vertex names must not clash.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.clone();
        for v in &other.vertices {
            if g.vertices.contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
            g.vertices.push(v.clone());
        }
        let shift = self.vertices.len();
        g.edges
            .extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        g.edges.sort_unstable();
        Ok(g)
    }

    /// Cycle `C_n` on vertices `{prefix}1 .. {prefix}n`.
    pub fn cycle(prefix: &str, n: usize) -> Graph {
        let mut g = Graph::new((1..=n).map(|i| format!("{prefix}{i}")));
        for i in 0..n {
            let (a, b) = (i, (i + 1) % n);
            let e = (a.min(b), a.max(b));
            if a != b && !g.edges.contains(&e) {
                g.edges.push(e);
            }
        }
        g.edges.sort_unstable();
        g
    }

    /// Complete graph `K_n` on vertices `{prefix}1 .. {prefix}n`.
    pub fn complete(prefix: &str, n: usize) -> Graph {
        let mut g = Graph::new((1..=n).map(|i| format!("{prefix}{i}")));
        for a in 0..n {
            for b in a + 1..n {
                g.edges.push((a, b));
            }
        }
        g
    }
}

/// `I(G) = (x_i x_j : {i, j} ∈ E(G))` in the ring on all vertices of `G`.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    let ring = AmbientRing::new(g.vertices.iter().cloned())?;
    let n = ring.len();
    minimalize(
        &ring,
        g.edges.iter().map(|&(a, b)| {
            let mut e = vec![0; n];
            e[a] = 1;
            e[b] = 1;
            Monomial::new(e)
        }),
    )
}

/// Connected components that contain at least one edge.
pub fn graph_component_count(g: &Graph) -> Result<usize> {
    if g.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    let mut uf = super::UnionFind::new(g.vertices.len());
    for &(a, b) in &g.edges {
        uf.union(a, b);
    }
    let mut roots: Vec<usize> = g.edges.iter().map(|&(a, _)| uf.find(a)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}

/// Eventual v-function of `I(G)`: slope 2, intercept `c(G) - 2`.
pub fn edge_v_asymptotic(g: &Graph) -> Result<(i64, i64)> {
    let c = graph_component_count(g)? as i64;
    Ok((2, c - 2))
}
