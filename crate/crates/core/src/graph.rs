//! Finite simple graphs whose edges carry ideals of a common ring.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{Ideal, RingElement, RingSpec};

/// An undirected edge stored with its endpoints in vertex declaration order
/// (`tail < head`), which is also the default orientation of GKM matrix rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    tail: usize,
    head: usize,
    label: Ideal,
}

impl Edge {
    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.tail, self.head)
    }

    pub fn label(&self) -> &Ideal {
        &self.label
    }

    /// The endpoint opposite to `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.tail {
            Some(self.head)
        } else if w == self.head {
            Some(self.tail)
        } else {
            None
        }
    }
}

/// Input form of an edge: two vertex ids and a generator list for its ideal.
#[derive(Clone, Debug)]
pub struct EdgeInput {
    pub u: String,
    pub v: String,
    pub generators: Vec<RingElement>,
}

impl EdgeInput {
    pub fn new(u: impl Into<String>, v: impl Into<String>, generators: Vec<RingElement>) -> Self {
        EdgeInput {
            u: u.into(),
            v: v.into(),
            generators,
        }
    }

    pub fn principal(u: impl Into<String>, v: impl Into<String>, generator: RingElement) -> Self {
        Self::new(u, v, vec![generator])
    }
}

/// The pair `(G, alpha)`: a graph together with an edge labeling by ideals.
///
/// Vertex declaration order is semantic. It fixes BFS order, matrix columns
/// and the default orientation of every edge.
#[derive(Clone, Debug)]
pub struct EdgeLabeledGraph {
    ring: RingSpec,
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for EdgeLabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for EdgeLabeledGraph {}

impl EdgeLabeledGraph {
    pub fn build<S: Into<String>>(
        ring: RingSpec,
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = EdgeInput>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut labeled = Vec::new();
        for e in edges {
            let a = *index.get(&e.u).ok_or_else(|| Error::UnknownVertex(e.u.clone()))?;
            let b = *index.get(&e.v).ok_or_else(|| Error::UnknownVertex(e.v.clone()))?;
            if a == b {
                return Err(Error::SelfLoop(e.u));
            }
            let label = Ideal::new(e.generators)?;
            if label.ring() != ring {
                return Err(Error::RingMismatch {
                    expected: ring,
                    found: label.ring(),
                });
            }
            labeled.push((a, b, label));
        }
        Self::from_parts(ring, vertices, labeled)
    }

    /// Builds from vertex indices and already-canonical ideals.
    fn from_parts(ring: RingSpec, vertices: Vec<String>, labeled: Vec<(usize, usize, Ideal)>) -> Result<Self> {
        let index: HashMap<String, usize> = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let mut edges = Vec::with_capacity(labeled.len());
        let mut edge_lookup = HashMap::with_capacity(labeled.len());
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (a, b, label) in labeled {
            let (tail, head) = (a.min(b), a.max(b));
            let id = edges.len();
            if edge_lookup.insert((tail, head), id).is_some() {
                return Err(Error::DuplicateEdge(vertices[tail].clone(), vertices[head].clone()));
            }
            adjacency[tail].push((head, id));
            adjacency[head].push((tail, id));
            edges.push(Edge { tail, head, label });
        }
        Ok(EdgeLabeledGraph {
            ring,
            vertices,
            index,
            edges,
            edge_lookup,
            adjacency,
        })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require_vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    /// Index of the edge joining `a` and `b`, in either order.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_lookup.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn edge_ids(&self, e: usize) -> (&str, &str) {
        let edge = &self.edges[e];
        (&self.vertices[edge.tail], &self.vertices[edge.head])
    }

    /// `(neighbor, edge index)` pairs in edge declaration order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    /// Connected components as vertex-index lists, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(w) = stack.pop() {
                for &(n, _) in self.neighbors(w) {
                    if !seen[n] {
                        seen[n] = true;
                        comp.push(n);
                        stack.push(n);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected {
                components: comps
                    .into_iter()
                    .map(|c| c.into_iter().map(|i| self.vertices[i].clone()).collect())
                    .collect(),
            });
        }
        Ok(())
    }

    /// Subgraph on `vertices` with the listed edges and the restricted labeling.
    /// Vertex and edge order follow this graph's declaration order.
    pub fn restrict<S: AsRef<str>>(&self, vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut keep = vec![false; self.vertex_count()];
        for v in vertices {
            keep[self.require_vertex(v.as_ref())?] = true;
        }
        let mut keep_edge = vec![false; self.edge_count()];
        for (a, b) in edges {
            let (ia, ib) = (self.require_vertex(a.as_ref())?, self.require_vertex(b.as_ref())?);
            let e = self
                .edge_between(ia, ib)
                .ok_or_else(|| Error::UnknownEdge(a.as_ref().into(), b.as_ref().into()))?;
            if !keep[ia] || !keep[ib] {
                return Err(Error::NotASubgraph(format!(
                    "edge {}-{} has an endpoint outside the vertex subset",
                    a.as_ref(),
                    b.as_ref()
                )));
            }
            keep_edge[e] = true;
        }
        Ok(self.restrict_by_mask(&keep, &keep_edge))
    }

    /// Spanning subgraph containing exactly the edges with the given indices.
    pub fn spanning_subgraph(&self, edge_indices: &[usize]) -> Self {
        let mut keep_edge = vec![false; self.edge_count()];
        for &e in edge_indices {
            keep_edge[e] = true;
        }
        self.restrict_by_mask(&vec![true; self.vertex_count()], &keep_edge)
    }

    /// Induced subgraph on the given vertex indices.
    pub fn induced(&self, vertex_indices: &[usize]) -> Self {
        let mut keep = vec![false; self.vertex_count()];
        for &v in vertex_indices {
            keep[v] = true;
        }
        let keep_edge: Vec<bool> = self.edges.iter().map(|e| keep[e.tail] && keep[e.head]).collect();
        self.restrict_by_mask(&keep, &keep_edge)
    }

    fn restrict_by_mask(&self, keep: &[bool], keep_edge: &[bool]) -> Self {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                new_index[i] = vertices.len();
                vertices.push(v.clone());
            }
        }
        let labeled = self
            .edges
            .iter()
            .zip(keep_edge)
            .filter(|(_, &k)| k)
            .map(|(e, _)| (new_index[e.tail], new_index[e.head], e.label.clone()))
            .collect();
        Self::from_parts(self.ring, vertices, labeled).expect("subgraph of a valid graph")
    }

    /// Removes every edge labeled by the unit ideal; vertices are unchanged.
    pub fn erase_unit_edges(&self) -> Self {
        let keep_edge: Vec<bool> = self.edges.iter().map(|e| !e.label.is_unit()).collect();
        self.restrict_by_mask(&vec![true; self.vertex_count()], &keep_edge)
    }

    /// `G1 ⊔ G2`. When the id sets overlap, every id is prefixed by its
    /// component index (`0:` or `1:`).
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        let collide = other.vertices.iter().any(|v| self.index.contains_key(v));
        let rename = |k: usize, v: &String| if collide { format!("{k}:{v}") } else { v.clone() };
        let n1 = self.vertex_count();
        let vertices = self
            .vertices
            .iter()
            .map(|v| rename(0, v))
            .chain(other.vertices.iter().map(|v| rename(1, v)))
            .collect();
        let labeled = self
            .edges
            .iter()
            .map(|e| (e.tail, e.head, e.label.clone()))
            .chain(other.edges.iter().map(|e| (e.tail + n1, e.head + n1, e.label.clone())))
            .collect();
        Self::from_parts(self.ring, vertices, labeled)
    }

    /// `rα`: every edge label replaced by `r·I`.
    pub fn scaled_labeling(&self, r: &RingElement) -> Result<Self> {
        if r.ring() != self.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: r.ring(),
            });
        }
        let labeled = self
            .edges
            .iter()
            .map(|e| Ok((e.tail, e.head, e.label.scaled(r)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(self.ring, self.vertices.clone(), labeled)
    }

    /// Checks that `self` is a subgraph of `host` with the restricted labeling,
    /// returning the host indices of its vertices and edges.
    pub fn embedding_into(&self, host: &Self) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.ring != host.ring {
            return Err(Error::RingMismatch {
                expected: host.ring,
                found: self.ring,
            });
        }
        let vmap = self
            .vertices
            .iter()
            .map(|v| {
                host.vertex_index(v)
                    .ok_or_else(|| Error::NotASubgraph(format!("vertex `{v}` is not in the host")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut emap = Vec::with_capacity(self.edge_count());
        for e in &self.edges {
            let (a, b) = (vmap[e.tail], vmap[e.head]);
            let he = host.edge_between(a, b).ok_or_else(|| {
                Error::NotASubgraph(format!(
                    "edge {}-{} is not in the host",
                    self.vertices[e.tail], self.vertices[e.head]
                ))
            })?;
            if host.edges[he].label != e.label {
                return Err(Error::NotASubgraph(format!(
                    "edge {}-{} carries {} but the host has {}",
                    self.vertices[e.tail], self.vertices[e.head], e.label, host.edges[he].label
                )));
            }
            emap.push(he);
        }
        Ok((vmap, emap))
    }

    /// `true` iff the graph is a single path; returns the vertex order starting
    /// from the endpoint declared first.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 || self.edge_count() + 1 != n || !self.is_connected() {
            return None;
        }
        if n == 1 {
            return Some(vec![0]);
        }
        if (0..n).any(|v| self.neighbors(v).len() > 2) {
            return None;
        }
        let start = (0..n).find(|&v| self.neighbors(v).len() == 1)?;
        Some(self.walk_from(start, None))
    }

    /// For a cycle graph, the vertex order `v1..vn` starting at the first
    /// declared vertex and continuing toward its earlier-declared neighbor.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n < 3 || self.edge_count() != n || !self.is_connected() {
            return None;
        }
        if (0..n).any(|v| self.neighbors(v).len() != 2) {
            return None;
        }
        let first = self.neighbors(0).iter().map(|&(w, _)| w).min()?;
        Some(self.walk_from(0, Some(first)))
    }

    fn walk_from(&self, start: usize, second: Option<usize>) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = match second {
            Some(s) => s,
            None => self.neighbors(start)[0].0,
        };
        while cur != start {
            order.push(cur);
            match self.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
            if order.len() > self.vertex_count() {
                break;
            }
        }
        order
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.edge_count() + 1 == self.vertex_count() && self.is_connected()
    }
}
