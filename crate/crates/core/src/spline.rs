//! Vertex labelings, the GKM condition and the ring/module structure of `R_G`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;
use crate::ring::RingElement;

/// A candidate spline: one ring element per vertex, in the host graph's
/// vertex declaration order. Membership in `R_G` is checked by [`verify`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spline {
    values: Vec<RingElement>,
}

impl Spline {
    pub fn new(values: Vec<RingElement>) -> Self {
        Spline { values }
    }

    /// The constant spline `r·1` on `g`.
    pub fn constant(g: &EdgeLabeledGraph, r: RingElement) -> Self {
        Spline {
            values: vec![r; g.vertex_count()],
        }
    }

    pub fn zero(g: &EdgeLabeledGraph) -> Self {
        Self::constant(g, g.ring().zero())
    }

    pub fn one(g: &EdgeLabeledGraph) -> Self {
        Self::constant(g, g.ring().one())
    }

    /// Builds from a vertex-id map, which must cover exactly the vertices of `g`.
    pub fn from_map(g: &EdgeLabeledGraph, mut map: HashMap<String, RingElement>) -> Result<Self> {
        let mut values = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let x = map
                .remove(v)
                .ok_or_else(|| Error::SplineMismatch(format!("no value for vertex `{v}`")))?;
            values.push(x);
        }
        if let Some(extra) = map.keys().next() {
            return Err(Error::SplineMismatch(format!("`{extra}` is not a vertex of the graph")));
        }
        let s = Spline { values };
        s.check_host(g)?;
        Ok(s)
    }

    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    pub fn value(&self, v: usize) -> &RingElement {
        &self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn check_host(&self, g: &EdgeLabeledGraph) -> Result<()> {
        if self.values.len() != g.vertex_count() {
            return Err(Error::SplineMismatch(format!(
                "{} values for {} vertices",
                self.values.len(),
                g.vertex_count()
            )));
        }
        if let Some(x) = self.values.iter().find(|x| x.ring() != g.ring()) {
            return Err(Error::RingMismatch {
                expected: g.ring(),
                found: x.ring(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RingElement, &RingElement) -> Result<RingElement>) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SplineMismatch(format!(
                "{} values against {}",
                self.len(),
                other.len()
            )));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(Spline { values })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, RingElement::try_add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, RingElement::try_sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, RingElement::try_mul)
    }

    /// `r·p`, the module action of `R` on `R_G`.
    pub fn scalar_mul(&self, r: &RingElement) -> Result<Self> {
        let values = self.values.iter().map(|x| r.try_mul(x)).collect::<Result<_>>()?;
        Ok(Spline { values })
    }

    /// Nontrivial means not in `R·1`, i.e. not constant.
    pub fn is_nontrivial(&self) -> bool {
        self.values.windows(2).any(|w| w[0] != w[1])
    }

    /// Restriction to a subgraph of `host`.
    pub fn restrict_to(&self, host: &EdgeLabeledGraph, sub: &EdgeLabeledGraph) -> Result<Self> {
        self.check_host(host)?;
        let (vmap, _) = sub.embedding_into(host)?;
        Ok(Spline {
            values: vmap.into_iter().map(|i| self.values[i].clone()).collect(),
        })
    }

    pub fn to_map(&self, g: &EdgeLabeledGraph) -> Vec<(String, RingElement)> {
        g.vertices().iter().cloned().zip(self.values.iter().cloned()).collect()
    }
}

/// An edge that fails the GKM condition, with `p_tail - p_head`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub edge: usize,
    pub difference: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Checks the GKM condition `p_u - p_v ∈ α(uv)` on every edge, reporting every
/// failing edge in edge declaration order.
pub fn verify(g: &EdgeLabeledGraph, p: &Spline) -> Result<VerificationReport> {
    p.check_host(g)?;
    let mut violations = Vec::new();
    for (idx, e) in g.edges().iter().enumerate() {
        let diff = p.value(e.tail()).try_sub(p.value(e.head()))?;
        if !e.label().contains(&diff)? {
            violations.push(Violation {
                edge: idx,
                difference: diff,
            });
        }
    }
    Ok(VerificationReport {
        ok: violations.is_empty(),
        violations,
    })
}

pub fn is_spline(g: &EdgeLabeledGraph, p: &Spline) -> Result<bool> {
    Ok(verify(g, p)?.ok)
}

pub(crate) fn require_spline(g: &EdgeLabeledGraph, p: &Spline) -> Result<()> {
    let report = verify(g, p)?;
    if !report.ok {
        return Err(Error::NotASpline {
            violations: report.violations.len(),
        });
    }
    Ok(())
}

/// Splits a spline on a connected graph as `p = r·1 + p'` with `p'_v = 0`.
pub fn decompose_at_vertex(g: &EdgeLabeledGraph, p: &Spline, v: &str) -> Result<(RingElement, Spline)> {
    let vi = g.require_vertex(v)?;
    g.require_connected()?;
    require_spline(g, p)?;
    let r = p.value(vi).clone();
    let part = p.try_sub(&Spline::constant(g, r.clone()))?;
    Ok((r, part))
}

/// Moves a spline along a vertex bijection `source -> target` that preserves
/// edges and their (canonical) labels.
pub fn transport(
    source: &EdgeLabeledGraph,
    target: &EdgeLabeledGraph,
    p: &Spline,
    map: &HashMap<String, String>,
) -> Result<Spline> {
    p.check_host(source)?;
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch {
            expected: source.ring(),
            found: target.ring(),
        });
    }
    if source.vertex_count() != target.vertex_count()
        || source.edge_count() != target.edge_count()
        || map.len() != source.vertex_count()
    {
        return Err(Error::NotAnIsomorphism("sizes differ".into()));
    }
    let mut image = vec![usize::MAX; source.vertex_count()];
    let mut hit = vec![false; target.vertex_count()];
    for (i, v) in source.vertices().iter().enumerate() {
        let w = map
            .get(v)
            .ok_or_else(|| Error::NotAnIsomorphism(format!("`{v}` is not mapped")))?;
        let j = target
            .vertex_index(w)
            .ok_or_else(|| Error::NotAnIsomorphism(format!("`{w}` is not a target vertex")))?;
        if std::mem::replace(&mut hit[j], true) {
            return Err(Error::NotAnIsomorphism(format!("`{w}` is hit twice")));
        }
        image[i] = j;
    }
    for e in source.edges() {
        let (a, b) = (image[e.tail()], image[e.head()]);
        let te = target.edge_between(a, b).ok_or_else(|| {
            Error::NotAnIsomorphism(format!(
                "edge {}-{} has no image",
                source.vertex_id(e.tail()),
                source.vertex_id(e.head())
            ))
        })?;
        if target.edges()[te].label() != e.label() {
            return Err(Error::NotAnIsomorphism(format!(
                "edge {}-{} changes label",
                source.vertex_id(e.tail()),
                source.vertex_id(e.head())
            )));
        }
    }
    let mut values = vec![target.ring().zero(); target.vertex_count()];
    for (i, &j) in image.iter().enumerate() {
        values[j] = p.value(i).clone();
    }
    Ok(Spline::new(values))
}

/// `p1 ⊕ p2` on `G1 ⊔ G2`.
pub fn direct_sum(
    g1: &EdgeLabeledGraph,
    p1: &Spline,
    g2: &EdgeLabeledGraph,
    p2: &Spline,
) -> Result<(EdgeLabeledGraph, Spline)> {
    p1.check_host(g1)?;
    p2.check_host(g2)?;
    let g = g1.disjoint_union(g2)?;
    let values = p1.values().iter().chain(p2.values()).cloned().collect();
    Ok((g, Spline::new(values)))
}

/// The labeling `rα` together with a flag for the cases where the
/// correspondence with `(G, α)` is not guaranteed (`r = 0`, or zero divisors).
#[derive(Clone, Debug)]
pub struct ScaledLabeling {
    pub graph: EdgeLabeledGraph,
    pub degenerate: bool,
}

pub fn scaled_labeling(g: &EdgeLabeledGraph, r: &RingElement) -> Result<ScaledLabeling> {
    let graph = g.scaled_labeling(r)?;
    Ok(ScaledLabeling {
        graph,
        degenerate: r.is_zero() || !g.ring().is_integral_domain(),
    })
}
