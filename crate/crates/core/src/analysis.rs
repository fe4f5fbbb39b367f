//! Exhaustive enumeration over `Z/m` and the checks built on it: intersection
//! decompositions of `R_G`, direct-sum counts and triangular families.

use rand::Rng;

use crate::construct::{flow_up_family, GeneratingFamily};
use crate::error::{Error, Result};
use crate::gkm::GkmRow;
use crate::graph::EdgeLabeledGraph;
use crate::random::InstanceGen;
use crate::ring::{RingElement, RingSpec};
use crate::spline::{verify, Spline};
use crate::tree::TreeSkeleton;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// All splines on a graph over `Z/m`, as residue tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplineSet {
    pub modulus: u64,
    pub members: Vec<Vec<u64>>,
}

impl SplineSet {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, tuple: &[u64]) -> bool {
        self.members.binary_search_by(|m| m.as_slice().cmp(tuple)).is_ok()
    }

    pub fn spline(&self, i: usize) -> Spline {
        to_spline(&self.members[i], self.modulus)
    }

    /// Members of both sets, still sorted.
    pub fn intersect(&self, other: &SplineSet) -> SplineSet {
        SplineSet {
            modulus: self.modulus,
            members: self.members.iter().filter(|m| other.contains(m)).cloned().collect(),
        }
    }
}

pub fn to_spline(tuple: &[u64], m: u64) -> Spline {
    Spline::new(
        tuple
            .iter()
            .map(|&v| RingElement::residue(v, m).expect("modulus at least 2"))
            .collect(),
    )
}

fn modulus_of(g: &EdgeLabeledGraph) -> Result<u64> {
    g.ring().modulus().ok_or(Error::InfiniteRing(g.ring()))
}

/// `m^n`, or an error when it exceeds `budget`.
pub fn check_budget(m: u64, n: usize, budget: u64) -> Result<u64> {
    let total = u32::try_from(n).ok().and_then(|n| m.checked_pow(n));
    match total {
        Some(t) if t <= budget => Ok(t),
        _ => Err(Error::BudgetExceeded {
            needed: format!("{m}^{n}"),
            budget,
        }),
    }
}

/// `d` with `α(e) = dZ/mZ`, so `x ∈ α(e)` iff `d | x`.
fn edge_divisors(g: &EdgeLabeledGraph, m: u64) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|e| {
            let c = e.label().canonical().as_residue().expect("modular ring").value();
            if c == 0 {
                m
            } else {
                num_integer::gcd(c, m)
            }
        })
        .collect()
}

/// Every spline on `g` over `Z/m`, by depth-first search in vertex order.
/// An edge is tested as soon as both endpoints are assigned.
pub fn enumerate_splines(g: &EdgeLabeledGraph, budget: u64) -> Result<SplineSet> {
    let m = modulus_of(g)?;
    let n = g.vertex_count();
    check_budget(m, n, budget)?;
    let divisors = edge_divisors(g, m);
    // back_edges[v]: (earlier endpoint, divisor) for edges whose later endpoint is v.
    let mut back_edges: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for (e, d) in g.edges().iter().zip(&divisors) {
        back_edges[e.head()].push((e.tail(), *d));
    }
    let mut members = Vec::new();
    let mut cur = vec![0u64; n];
    fn go(v: usize, m: u64, back: &[Vec<(usize, u64)>], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if v == cur.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..m {
            if back[v].iter().all(|&(u, d)| ((cur[u] + m - x) % m).is_multiple_of(d)) {
                cur[v] = x;
                go(v + 1, m, back, cur, out);
            }
        }
    }
    go(0, m, &back_edges, &mut cur, &mut members);
    Ok(SplineSet { modulus: m, members })
}

/// Every tuple in `(Z/m)^n` in lexicographic order.
pub fn all_tuples(m: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = m.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = k % m;
            k /= m;
        }
        t
    })
}

/// Which decomposition of `R_G` a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `R_G = ∩ R_{G_i}` for spanning subgraphs whose edges cover `G`.
    Union,
    /// The union claim for a cover by spanning trees.
    SpanningTrees,
    /// `R_G = R_T ∩ ∩_e R_{C_e'}` over the chords of a spanning tree.
    TreePlusCycles,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Union => "union",
            Claim::SpanningTrees => "spanning-trees",
            Claim::TreePlusCycles => "tree-plus-cycles",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive { budget: u64 },
    Sampled { seed: u64, samples: usize },
}

impl CheckMode {
    /// Exhaustive over finite rings, sampled otherwise.
    pub fn auto(ring: RingSpec, seed: u64, samples: usize, budget: u64) -> Self {
        if ring.is_finite() {
            CheckMode::Exhaustive { budget }
        } else {
            CheckMode::Sampled { seed, samples }
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub claim: Claim,
    pub mode: CheckMode,
    /// Edge index sets of the spanning subgraphs on the right-hand side.
    pub subgraphs: Vec<Vec<usize>>,
    pub verdict: bool,
    /// A tuple lying on exactly one side of the claimed equality.
    pub counterexample: Option<Spline>,
    /// Tuples examined: `|(Z/m)^V|`-sized sets in exhaustive mode, candidates otherwise.
    pub checked: usize,
}

/// Checks `R_G = ∩ R_{G_i}` for spanning subgraphs `G_i` given by edge sets.
pub fn check_union_decomposition(
    g: &EdgeLabeledGraph,
    subgraphs: &[Vec<usize>],
    mode: CheckMode,
) -> Result<DecompositionReport> {
    let mut covered = vec![false; g.edge_count()];
    for s in subgraphs {
        for &e in s {
            let slot = covered
                .get_mut(e)
                .ok_or_else(|| Error::NotACover(format!("edge index {e} is out of range")))?;
            *slot = true;
        }
    }
    if let Some(e) = covered.iter().position(|c| !c) {
        let (u, v) = g.edge_ids(e);
        return Err(Error::NotACover(format!("edge {u}-{v} is in no subgraph")));
    }
    check_intersection(g, Claim::Union, subgraphs, mode)
}

fn check_intersection(
    g: &EdgeLabeledGraph,
    claim: Claim,
    subgraphs: &[Vec<usize>],
    mode: CheckMode,
) -> Result<DecompositionReport> {
    let parts: Vec<EdgeLabeledGraph> = subgraphs.iter().map(|s| g.spanning_subgraph(s)).collect();
    let (verdict, counterexample, checked) = match mode {
        CheckMode::Exhaustive { budget } => {
            let whole = enumerate_splines(g, budget)?;
            let mut meet: Option<SplineSet> = None;
            for p in &parts {
                let s = enumerate_splines(p, budget)?;
                meet = Some(match meet {
                    None => s,
                    Some(acc) => acc.intersect(&s),
                });
            }
            let meet = match meet {
                Some(s) => s,
                None => enumerate_splines(&g.spanning_subgraph(&[]), budget)?,
            };
            let odd = whole
                .members
                .iter()
                .find(|t| !meet.contains(t))
                .or_else(|| meet.members.iter().find(|t| !whole.contains(t)));
            (
                odd.is_none(),
                odd.map(|t| to_spline(t, whole.modulus)),
                whole.count().max(meet.count()),
            )
        }
        CheckMode::Sampled { seed, samples } => {
            let candidates = sample_candidates(g, &parts, seed, samples)?;
            let mut odd = None;
            for c in &candidates {
                let on_g = verify(g, c)?.ok;
                let mut on_all = true;
                for p in &parts {
                    on_all &= verify(p, c)?.ok;
                }
                if on_g != on_all {
                    odd = Some(c.clone());
                    break;
                }
            }
            (odd.is_none(), odd, candidates.len())
        }
    };
    Ok(DecompositionReport {
        claim,
        mode,
        subgraphs: subgraphs.to_vec(),
        verdict,
        counterexample,
        checked,
    })
}

/// Candidate tuples for the sampled checks: combinations of flow-up members of
/// `G` and of each part, perturbed tuples, and raw random tuples.
fn sample_candidates(
    g: &EdgeLabeledGraph,
    parts: &[EdgeLabeledGraph],
    seed: u64,
    samples: usize,
) -> Result<Vec<Spline>> {
    let mut gen = InstanceGen::new(seed);
    let ring = g.ring();
    let mut families: Vec<GeneratingFamily> = Vec::new();
    for h in std::iter::once(g).chain(parts) {
        if h.vertex_count() > 0 && h.is_connected() {
            families.push(flow_up_family(h, 0)?);
        }
    }
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let c = match (i % 3, families.is_empty()) {
            (0, false) | (1, false) => {
                let f = &families[if i % 3 == 0 {
                    0
                } else {
                    gen.rng().gen_range(0..families.len())
                }];
                let coeffs: Vec<RingElement> = (0..f.len()).map(|_| gen.element(ring, 1)).collect();
                let s = f.combination(&coeffs)?;
                if i % 6 == 1 {
                    perturb(&mut gen, s)?
                } else {
                    s
                }
            }
            _ => gen.near_spline(g, 2),
        };
        out.push(c);
    }
    Ok(out)
}

fn perturb(gen: &mut InstanceGen, s: Spline) -> Result<Spline> {
    let ring = s.values()[0].ring();
    let v = gen.rng().gen_range(0..s.len());
    let mut values = s.values().to_vec();
    values[v] = values[v].try_add(&gen.nonzero_element(ring, 1))?;
    Ok(Spline::new(values))
}

/// A BFS tree plus, for each chord, the BFS tree with the chord swapped in
/// for the first tree edge of its cycle. Edge sets cover `g`.
pub fn spanning_tree_cover(g: &EdgeLabeledGraph) -> Result<Vec<Vec<usize>>> {
    let t = TreeSkeleton::bfs(g)?;
    let base = t.edge_indices(g)?;
    let mut cover = vec![base.clone()];
    for c in t.fundamental_cycles(g)? {
        let dropped = c.signed_edges(g)[1].0;
        let mut edges: Vec<usize> = base.iter().copied().filter(|&e| e != dropped).collect();
        edges.push(c.chord);
        edges.sort_unstable();
        cover.push(edges);
    }
    Ok(cover)
}

pub fn check_spanning_tree_decomposition(g: &EdgeLabeledGraph, mode: CheckMode) -> Result<DecompositionReport> {
    let cover = spanning_tree_cover(g)?;
    let mut report = check_union_decomposition(g, &cover, mode)?;
    report.claim = Claim::SpanningTrees;
    Ok(report)
}

/// One single-edge spanning subgraph per edge.
pub fn edge_cover(g: &EdgeLabeledGraph) -> Vec<Vec<usize>> {
    (0..g.edge_count()).map(|e| vec![e]).collect()
}

/// Checks `R_G = R_T ∩ ∩_e R_{C_e'}`, where `C_e'` is the fundamental cycle of
/// the chord `e` together with every other vertex of `G` left isolated.
pub fn check_cycle_decomposition(
    g: &EdgeLabeledGraph,
    t: &TreeSkeleton,
    mode: CheckMode,
) -> Result<DecompositionReport> {
    let mut subgraphs = vec![t.edge_indices(g)?];
    for c in t.fundamental_cycles(g)? {
        let mut edges: Vec<usize> = c.signed_edges(g).into_iter().map(|(e, _)| e).collect();
        edges.sort_unstable();
        subgraphs.push(edges);
    }
    check_intersection(g, Claim::TreePlusCycles, &subgraphs, mode)
}

/// Upper-triangular with nonzero diagonal, for a well-formed family.
pub fn check_triangular_family(f: &GeneratingFamily) -> bool {
    let n = f.host.vertex_count();
    let mut seen = vec![false; n];
    let order_ok = f.vertex_order.len() == n
        && f.vertex_order
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true));
    order_ok
        && f.pivots.len() == f.members.len()
        && f.pivots.iter().all(|&v| v < n)
        && f.members.iter().all(|m| m.len() == n)
        && f.is_triangular()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectSumCount {
    pub modulus: u64,
    pub total: usize,
    pub anchored: usize,
}

impl DirectSumCount {
    /// `|R_G| = m · |{p : p_v = 0}|`
    pub fn holds(&self) -> bool {
        self.total as u64 == self.modulus * self.anchored as u64
    }
}

pub fn count_direct_sum(g: &EdgeLabeledGraph, v: &str, budget: u64) -> Result<DirectSumCount> {
    let vi = g.require_vertex(v)?;
    g.require_connected()?;
    let set = enumerate_splines(g, budget)?;
    Ok(DirectSumCount {
        modulus: set.modulus,
        total: set.count(),
        anchored: set.members.iter().filter(|t| t[vi] == 0).count(),
    })
}

/// Solves a row system `coeffs · p = Σ c_e q_e` for `q`, given `p`, and
/// reports whether the forced `q` exists and has `q_e ∈ α(e)` for every edge.
///
/// Rows are consumed whenever they mention at most one undetermined `q_e`
/// with a unit coefficient; GKM rows and their tree reductions always allow
/// this, so `q` is unique when it exists.
pub fn admits_valid_slots(g: &EdgeLabeledGraph, rows: &[GkmRow], p: &Spline) -> Result<bool> {
    let ring = g.ring();
    let mut q: Vec<Option<RingElement>> = vec![None; g.edge_count()];
    let mut done = vec![false; rows.len()];
    loop {
        let mut progressed = false;
        for (i, row) in rows.iter().enumerate() {
            if done[i] {
                continue;
            }
            let unknown: Vec<_> = row.terms.iter().filter(|t| q[t.edge].is_none()).collect();
            if unknown.len() > 1 {
                continue;
            }
            let mut rest = row.lhs_value(ring, p)?;
            for t in row.terms.iter().filter(|t| q[t.edge].is_some()) {
                let known = q[t.edge].as_ref().expect("filtered");
                rest = rest.try_sub(&RingElement::from_i64(ring, t.coeff).try_mul(known)?)?;
            }
            match unknown.first() {
                None if !rest.is_zero() => return Ok(false),
                None => {}
                Some(t) if t.coeff == 1 => q[t.edge] = Some(rest),
                Some(t) if t.coeff == -1 => q[t.edge] = Some(-&rest),
                Some(_) => {
                    return Err(Error::UnsupportedRing {
                        op: "admits_valid_slots",
                        ring,
                    })
                }
            }
            done[i] = true;
            progressed = true;
        }
        if done.iter().all(|&d| d) {
            break;
        }
        if !progressed {
            return Err(Error::UnsupportedRing {
                op: "admits_valid_slots",
                ring,
            });
        }
    }
    for (e, x) in g.edges().iter().zip(&q) {
        match x {
            Some(x) if !e.label().contains(x)? => return Ok(false),
            Some(_) => {}
            // An edge no row mentions constrains nothing.
            None => {}
        }
    }
    Ok(true)
}

/// `{p : ∃ valid q, rows(p) = q}` over `Z/m`, in lexicographic order.
pub fn solution_set(g: &EdgeLabeledGraph, rows: &[GkmRow], budget: u64) -> Result<SplineSet> {
    let m = modulus_of(g)?;
    check_budget(m, g.vertex_count(), budget)?;
    let mut members = Vec::new();
    for t in all_tuples(m, g.vertex_count()) {
        if admits_valid_slots(g, rows, &to_spline(&t, m))? {
            members.push(t);
        }
    }
    Ok(SplineSet { modulus: m, members })
}
