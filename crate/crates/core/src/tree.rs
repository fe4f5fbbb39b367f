//! Spanning trees, tree paths and fundamental cycles of an edge-labeled graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;

/// A rooted spanning tree of a host graph, stored by vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSkeleton {
    vertices: Vec<String>,
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    /// Vertices in BFS order from the root (ties by neighbor declaration order).
    bfs_order: Vec<usize>,
    /// `(tail, head)` pairs of the tree edges, in host edge declaration order.
    tree_edges: Vec<(usize, usize)>,
}

impl TreeSkeleton {
    /// Breadth-first spanning tree rooted at the first declared vertex.
    pub fn bfs(g: &EdgeLabeledGraph) -> Result<Self> {
        if g.vertex_count() == 0 {
            return Err(Error::NotSpanning("graph has no vertices".into()));
        }
        Self::bfs_from(g, 0)
    }

    pub fn bfs_from_id(g: &EdgeLabeledGraph, root: &str) -> Result<Self> {
        Self::bfs_from(g, g.require_vertex(root)?)
    }

    pub fn bfs_from(g: &EdgeLabeledGraph, root: usize) -> Result<Self> {
        g.require_connected()?;
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut used = vec![false; g.edge_count()];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(w) = queue.pop_front() {
            for &(x, e) in g.neighbors(w) {
                if !seen[x] {
                    seen[x] = true;
                    parent[x] = Some(w);
                    used[e] = true;
                    queue.push_back(x);
                }
            }
        }
        let edges = (0..g.edge_count()).filter(|&e| used[e]).collect::<Vec<_>>();
        Self::from_edge_indices(g, root, &edges)
    }

    /// Wraps an explicit set of host edges, which must form a spanning tree.
    pub fn from_edge_indices(g: &EdgeLabeledGraph, root: usize, edges: &[usize]) -> Result<Self> {
        let n = g.vertex_count();
        if root >= n {
            return Err(Error::NotSpanning("root is not a vertex of the graph".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::NotSpanning(format!(
                "{} edges cannot span {} vertices as a tree",
                edges.len(),
                n
            )));
        }
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() || sorted.last().is_some_and(|&e| e >= g.edge_count()) {
            return Err(Error::NotSpanning("tree edges are not distinct host edges".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &e in &sorted {
            let (a, b) = g.edges()[e].endpoints();
            adj[a].push(b);
            adj[b].push(a);
        }
        // host adjacency order keeps BFS deterministic
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_by_key(|&w| g.neighbors(v).iter().position(|&(x, _)| x == w).unwrap_or(usize::MAX));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(w) = queue.pop_front() {
            order.push(w);
            for &x in &adj[w] {
                if !seen[x] {
                    seen[x] = true;
                    parent[x] = Some(w);
                    depth[x] = depth[w] + 1;
                    queue.push_back(x);
                }
            }
        }
        if order.len() != n {
            return Err(Error::NotSpanning("tree edges do not connect every vertex".into()));
        }
        Ok(TreeSkeleton {
            vertices: g.vertices().to_vec(),
            root,
            parent,
            depth,
            bfs_order: order,
            tree_edges: sorted.iter().map(|&e| g.edges()[e].endpoints()).collect(),
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_id(&self) -> &str {
        &self.vertices[self.root]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.parent[a] == Some(b) || self.parent[b] == Some(a)
    }

    /// Host edge indices of the tree edges; fails if `g` is not the host.
    pub fn edge_indices(&self, g: &EdgeLabeledGraph) -> Result<Vec<usize>> {
        self.check_host(g)?;
        Ok(self
            .tree_edges
            .iter()
            .map(|&(a, b)| g.edge_between(a, b).expect("checked host"))
            .collect())
    }

    pub(crate) fn check_host(&self, g: &EdgeLabeledGraph) -> Result<()> {
        if g.vertices() != self.vertices.as_slice() {
            return Err(Error::NotSpanning("tree and graph have different vertex sets".into()));
        }
        if let Some(&(a, b)) = self.tree_edges.iter().find(|&&(a, b)| g.edge_between(a, b).is_none()) {
            return Err(Error::NotSpanning(format!(
                "tree edge {}-{} is not in the graph",
                self.vertices[a], self.vertices[b]
            )));
        }
        Ok(())
    }

    /// The unique tree path `u -> v` as vertex indices; `path(u, u) = [u]`.
    pub fn path_indices(&self, u: usize, v: usize) -> Vec<usize> {
        let mut left = vec![u];
        let mut right = vec![v];
        let (mut a, mut b) = (u, v);
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("non-root has a parent");
            left.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("non-root has a parent");
            right.push(b);
        }
        while a != b {
            a = self.parent[a].expect("non-root has a parent");
            b = self.parent[b].expect("non-root has a parent");
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        left
    }

    pub fn tree_path(&self, u: &str, v: &str) -> Result<Vec<String>> {
        let find = |id: &str| {
            self.vertices
                .iter()
                .position(|x| x == id)
                .ok_or_else(|| Error::UnknownVertex(id.to_string()))
        };
        let (iu, iv) = (find(u)?, find(v)?);
        Ok(self
            .path_indices(iu, iv)
            .into_iter()
            .map(|i| self.vertices[i].clone())
            .collect())
    }

    /// One fundamental cycle per non-tree edge, in edge declaration order.
    pub fn fundamental_cycles(&self, g: &EdgeLabeledGraph) -> Result<Vec<CycleDescriptor>> {
        self.check_host(g)?;
        Ok(g.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| !self.contains_edge(e.tail(), e.head()))
            .map(|(idx, e)| {
                let (tail, head) = e.endpoints();
                let mut seq = vec![tail];
                seq.extend(self.path_indices(head, tail));
                CycleDescriptor {
                    chord: idx,
                    vertex_sequence: seq,
                }
            })
            .collect())
    }
}

/// The cycle `C_e` closed by a chord `e` in `T ∪ {e}`.
///
/// `vertex_sequence` starts at the chord's tail, crosses the chord first and
/// returns to the tail along the tree: `[tail, head, ..., tail]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDescriptor {
    pub chord: usize,
    pub vertex_sequence: Vec<usize>,
}

impl CycleDescriptor {
    /// `(edge index, sign)` for each traversed edge, chord first. The sign is
    /// `+1` when the edge is walked from its tail to its head.
    pub fn signed_edges(&self, g: &EdgeLabeledGraph) -> Vec<(usize, i64)> {
        self.vertex_sequence
            .windows(2)
            .map(|w| {
                let e = g
                    .edge_between(w[0], w[1])
                    .expect("consecutive cycle vertices are adjacent");
                let sign = if g.edges()[e].tail() == w[0] { 1 } else { -1 };
                (e, sign)
            })
            .collect()
    }

    pub fn vertex_ids(&self, g: &EdgeLabeledGraph) -> Vec<String> {
        self.vertex_sequence
            .iter()
            .map(|&v| g.vertex_id(v).to_string())
            .collect()
    }

    /// Distinct vertices on the cycle, in traversal order.
    pub fn cycle_vertices(&self) -> &[usize] {
        &self.vertex_sequence[..self.vertex_sequence.len() - 1]
    }
}
