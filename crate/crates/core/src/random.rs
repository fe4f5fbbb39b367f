//! Seeded random graphs, labels and tuples for the checking batteries.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeInput, EdgeLabeledGraph};
use crate::ring::{RingElement, RingSpec};
use crate::spline::Spline;

/// Deterministic source of instances; equal seeds give equal streams.
pub struct InstanceGen {
    rng: ChaCha8Rng,
}

impl InstanceGen {
    pub fn new(seed: u64) -> Self {
        InstanceGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A random element, kept small so that products stay readable.
    /// Polynomials have degree at most `max_degree` and coefficients in `-3..=3`.
    pub fn element(&mut self, ring: RingSpec, max_degree: usize) -> RingElement {
        match ring {
            RingSpec::Integers => RingElement::int(self.rng.gen_range(-12..=12)),
            RingSpec::IntegersMod(m) => {
                RingElement::residue(self.rng.gen_range(0..m.get()), m.get()).expect("valid modulus")
            }
            RingSpec::PolyRational => {
                let deg = self.rng.gen_range(0..=max_degree);
                let mut c: Vec<i64> = (0..=deg).map(|_| self.rng.gen_range(-3..=3)).collect();
                if c[deg] == 0 {
                    c[deg] = 1;
                }
                RingElement::poly(&c)
            }
        }
    }

    pub fn nonzero_element(&mut self, ring: RingSpec, max_degree: usize) -> RingElement {
        loop {
            let x = self.element(ring, max_degree);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// An edge label: over `Z/m` any residue (zero and units included), over
    /// `Z` and `Q[x]` a nonzero generator unless `allow_zero` fires.
    pub fn label(&mut self, ring: RingSpec, max_degree: usize, allow_zero: bool) -> RingElement {
        match ring {
            RingSpec::IntegersMod(_) => self.element(ring, max_degree),
            _ if allow_zero && self.rng.gen_ratio(1, 10) => ring.zero(),
            RingSpec::Integers => RingElement::int(self.rng.gen_range(1..=9)),
            RingSpec::PolyRational => self.nonzero_element(ring, max_degree),
        }
    }

    /// A random spanning tree on `n` vertices named `v1..vn`, as vertex-index pairs.
    pub fn tree_shape(&mut self, n: usize) -> Vec<(usize, usize)> {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut self.rng);
        (1..n)
            .map(|i| {
                let j = self.rng.gen_range(0..i);
                let (a, b) = (order[i], order[j]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// A connected simple graph with `n` vertices and up to `max_edges` edges
    /// (at least a spanning tree), edges in random order.
    pub fn connected_shape(&mut self, n: usize, max_edges: usize) -> Vec<(usize, usize)> {
        let mut edges = self.tree_shape(n);
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|e| !edges.contains(e))
            .collect();
        rest.shuffle(&mut self.rng);
        let budget = max_edges.saturating_sub(edges.len());
        let extra = if budget == 0 {
            0
        } else {
            self.rng.gen_range(0..=budget.min(rest.len()))
        };
        edges.extend(rest.into_iter().take(extra));
        edges.shuffle(&mut self.rng);
        edges
    }

    pub fn build(
        &mut self,
        ring: RingSpec,
        n: usize,
        shape: &[(usize, usize)],
        max_degree: usize,
        allow_zero: bool,
    ) -> EdgeLabeledGraph {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<EdgeInput> = shape
            .iter()
            .map(|&(a, b)| {
                EdgeInput::principal(
                    names[a].clone(),
                    names[b].clone(),
                    self.label(ring, max_degree, allow_zero),
                )
            })
            .collect();
        EdgeLabeledGraph::build(ring, names, edges).expect("generated graphs are simple")
    }

    /// A connected graph with `1..=max_vertices` vertices and at most `max_edges` edges.
    pub fn connected_graph(
        &mut self,
        ring: RingSpec,
        max_vertices: usize,
        max_edges: usize,
        max_degree: usize,
    ) -> EdgeLabeledGraph {
        let n = self.rng.gen_range(1..=max_vertices);
        let shape = self.connected_shape(n, max_edges);
        self.build(ring, n, &shape, max_degree, false)
    }

    pub fn tree(&mut self, ring: RingSpec, max_vertices: usize, max_degree: usize) -> EdgeLabeledGraph {
        let n = self.rng.gen_range(1..=max_vertices);
        let shape = self.tree_shape(n);
        self.build(ring, n, &shape, max_degree, false)
    }

    /// A cycle `v1..vn` with `3 <= n <= max_vertices`.
    pub fn cycle(&mut self, ring: RingSpec, max_vertices: usize, max_degree: usize) -> EdgeLabeledGraph {
        let n = self.rng.gen_range(3..=max_vertices.max(3));
        let shape: Vec<(usize, usize)> = (0..n)
            .map(|i| (i, (i + 1) % n))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        self.build(ring, n, &shape, max_degree, false)
    }

    pub fn tuple(&mut self, ring: RingSpec, n: usize, max_degree: usize) -> Spline {
        Spline::new((0..n).map(|_| self.element(ring, max_degree)).collect())
    }

    /// A tuple that is a spline on `g` more often than chance: a random base
    /// value plus, at each vertex, a random multiple of a random incident label.
    pub fn near_spline(&mut self, g: &EdgeLabeledGraph, max_degree: usize) -> Spline {
        let ring = g.ring();
        let base = self.element(ring, max_degree);
        let values = (0..g.vertex_count())
            .map(|v| {
                let nbrs = g.neighbors(v);
                if nbrs.is_empty() || self.rng.gen_ratio(1, 4) {
                    return base.clone();
                }
                let (_, e) = nbrs[self.rng.gen_range(0..nbrs.len())];
                let c = self.element(ring, 1);
                let shift = c.try_mul(g.edges()[e].label().canonical()).expect("same ring");
                base.try_add(&shift).expect("same ring")
            })
            .collect();
        Spline::new(values)
    }
}
