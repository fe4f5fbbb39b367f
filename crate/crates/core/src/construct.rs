//! Explicit spline constructions: cycle splines, path and tree families,
//! extension by zero and flow-up families.

use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;
use crate::ring::{Ideal, RingElement, RingSpec};
use crate::spline::{require_spline, Spline};
use crate::tree::TreeSkeleton;

/// An ordered family of splines on `host` with a triangularity certificate.
///
/// Member `i` is paired with the vertex `pivots[i]`. The family is triangular
/// when `member_i(pivots[i]) != 0` and `member_i` vanishes at every vertex
/// that comes after `pivots[i]` in `vertex_order`.
#[derive(Clone, Debug)]
pub struct GeneratingFamily {
    pub host: EdgeLabeledGraph,
    pub members: Vec<Spline>,
    pub vertex_order: Vec<usize>,
    pub pivots: Vec<usize>,
    /// The factor `N` used to build each member; `1` where none was needed.
    pub scaling_factors: Vec<RingElement>,
    /// Members whose factor is zero, so they carry no rank information.
    pub flagged: Vec<bool>,
}

impl GeneratingFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_triangular(&self) -> bool {
        let rank: Vec<usize> = {
            let mut r = vec![0; self.host.vertex_count()];
            for (i, &v) in self.vertex_order.iter().enumerate() {
                r[v] = i;
            }
            r
        };
        self.members.iter().zip(&self.pivots).all(|(m, &pv)| {
            !m.value(pv).is_zero() && self.vertex_order[rank[pv] + 1..].iter().all(|&w| m.value(w).is_zero())
        })
    }

    /// The diagonal `member_i(pivots[i])`.
    pub fn diagonal(&self) -> Vec<RingElement> {
        self.members
            .iter()
            .zip(&self.pivots)
            .map(|(m, &pv)| m.value(pv).clone())
            .collect()
    }

    /// The product of the diagonal, which is the determinant of the member
    /// matrix when the family is triangular.
    pub fn determinant(&self) -> Result<RingElement> {
        self.diagonal()
            .iter()
            .try_fold(self.host.ring().one(), |acc, d| acc.try_mul(d))
    }

    /// `Σ c_i · member_i`
    pub fn combination(&self, coeffs: &[RingElement]) -> Result<Spline> {
        if coeffs.len() != self.members.len() {
            return Err(Error::WrongLength {
                expected: self.members.len(),
                found: coeffs.len(),
            });
        }
        let mut acc = Spline::zero(&self.host);
        for (c, m) in coeffs.iter().zip(&self.members) {
            acc = acc.try_add(&m.scalar_mul(c)?)?;
        }
        Ok(acc)
    }
}

pub fn trivial_spline(g: &EdgeLabeledGraph, r: RingElement) -> Result<Spline> {
    if r.ring() != g.ring() {
        return Err(Error::RingMismatch {
            expected: g.ring(),
            found: r.ring(),
        });
    }
    Ok(Spline::constant(g, r))
}

fn check_choice(g: &EdgeLabeledGraph, edge: usize, x: &RingElement) -> Result<()> {
    if !g.edges()[edge].label().contains(x)? {
        let (u, v) = g.edge_ids(edge);
        return Err(Error::InvalidChoice(format!("{x} is not in the ideal of {u}-{v}")));
    }
    Ok(())
}

/// Elements chosen from the edge ideals of a cycle `v1..vn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleChoices {
    /// From the ideal of the closing edge `v1 vn`.
    pub chord: RingElement,
    /// `steps[i]` from the ideal of `v_{i+1} v_{i+2}`.
    pub steps: Vec<RingElement>,
}

/// The cycle vertex order `v1..vn` with the edge indices of
/// `v1v2, ..., v_{n-1}v_n` and of the closing edge `v1 vn`.
pub fn cycle_layout(g: &EdgeLabeledGraph) -> Result<(Vec<usize>, Vec<usize>, usize)> {
    let order = g.cycle_order().ok_or(Error::NotACycle)?;
    let steps = order
        .windows(2)
        .map(|w| g.edge_between(w[0], w[1]).expect("consecutive cycle vertices"))
        .collect();
    let chord = g
        .edge_between(order[0], *order.last().expect("nonempty"))
        .expect("cycle closes");
    Ok((order, steps, chord))
}

fn resolve_cycle_choices(g: &EdgeLabeledGraph, choices: Option<&CycleChoices>) -> Result<(Vec<usize>, CycleChoices)> {
    let (order, steps, chord) = cycle_layout(g)?;
    let canonical = |e: usize| g.edges()[e].label().canonical().clone();
    let choices = match choices {
        Some(c) => {
            if c.steps.len() != steps.len() {
                return Err(Error::WrongLength {
                    expected: steps.len(),
                    found: c.steps.len(),
                });
            }
            check_choice(g, chord, &c.chord)?;
            for (&e, x) in steps.iter().zip(&c.steps) {
                check_choice(g, e, x)?;
            }
            c.clone()
        }
        None => CycleChoices {
            chord: canonical(chord),
            steps: steps.iter().map(|&e| canonical(e)).collect(),
        },
    };
    Ok((order, choices))
}

/// `p_{v1} = base` and `p_{v_k} = base + chord · Σ_{i<k} steps[i]`.
/// Choices default to the canonical generators.
pub fn cycle_spline(g: &EdgeLabeledGraph, base: &RingElement, choices: Option<&CycleChoices>) -> Result<Spline> {
    let (order, c) = resolve_cycle_choices(g, choices)?;
    let mut values = vec![g.ring().zero(); g.vertex_count()];
    let mut partial = g.ring().zero();
    values[order[0]] = base.clone();
    for (k, step) in c.steps.iter().enumerate() {
        partial = partial.try_add(step)?;
        values[order[k + 1]] = base.try_add(&c.chord.try_mul(&partial)?)?;
    }
    Ok(Spline::new(values))
}

/// The unit spline followed by `chord · steps[k-2] · [0,..,0,1,..,1]` with the
/// ones starting at `v_k`, for `k = 2..n`.
pub fn cycle_generating_family(g: &EdgeLabeledGraph, choices: Option<&CycleChoices>) -> Result<GeneratingFamily> {
    let (order, c) = resolve_cycle_choices(g, choices)?;
    let ring = g.ring();
    if ring.is_integral_domain() && (c.chord.is_zero() || c.steps.iter().any(RingElement::is_zero)) {
        return Err(Error::InvalidChoice("cycle family needs nonzero choices".into()));
    }
    let n = order.len();
    let mut members = vec![Spline::one(g)];
    let mut factors = vec![ring.one()];
    for k in 1..n {
        let f = c.chord.try_mul(&c.steps[k - 1])?;
        let mut values = vec![ring.zero(); n];
        for &v in &order[k..] {
            values[v] = f.clone();
        }
        members.push(Spline::new(values));
        factors.push(f);
    }
    let flagged = factors.iter().map(RingElement::is_zero).collect();
    Ok(GeneratingFamily {
        host: g.clone(),
        members,
        vertex_order: order.iter().rev().copied().collect(),
        pivots: order,
        scaling_factors: factors,
        flagged,
    })
}

/// For a tree rooted at `root`: the unit spline, then for each non-root
/// vertex `v` in BFS order the spline `α(parent(v) v) · 1_{subtree(v)}`.
///
/// `choices[e]`, indexed by edge, override the canonical generators.
pub fn tree_generating_family(
    g: &EdgeLabeledGraph,
    root: usize,
    choices: Option<&[RingElement]>,
) -> Result<GeneratingFamily> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let t = TreeSkeleton::bfs_from(g, root)?;
    let ring = g.ring();
    let n = g.vertex_count();
    let choice = |e: usize| -> Result<RingElement> {
        match choices {
            Some(cs) => {
                let x = cs.get(e).ok_or(Error::WrongLength {
                    expected: g.edge_count(),
                    found: cs.len(),
                })?;
                check_choice(g, e, x)?;
                Ok(x.clone())
            }
            None => Ok(g.edges()[e].label().canonical().clone()),
        }
    };
    if let Some(cs) = choices {
        if cs.len() != g.edge_count() {
            return Err(Error::WrongLength {
                expected: g.edge_count(),
                found: cs.len(),
            });
        }
    }
    let mut members = vec![Spline::one(g)];
    let mut factors = vec![ring.one()];
    let mut pivots = vec![root];
    for &v in &t.bfs_order()[1..] {
        let parent = t.parent(v).expect("non-root");
        let f = choice(g.edge_between(parent, v).expect("tree edge"))?;
        let values = (0..n)
            .map(|w| {
                if is_descendant(&t, w, v) {
                    f.clone()
                } else {
                    ring.zero()
                }
            })
            .collect();
        members.push(Spline::new(values));
        factors.push(f);
        pivots.push(v);
    }
    let flagged = factors.iter().map(RingElement::is_zero).collect();
    Ok(GeneratingFamily {
        host: g.clone(),
        members,
        vertex_order: t.bfs_order().iter().rev().copied().collect(),
        pivots,
        scaling_factors: factors,
        flagged,
    })
}

fn is_descendant(t: &TreeSkeleton, mut w: usize, v: usize) -> bool {
    loop {
        if w == v {
            return true;
        }
        match t.parent(w) {
            Some(p) => w = p,
            None => return false,
        }
    }
}

/// The family ℬ of a path `v1..vn`: the unit spline, then
/// `α_{i,i+1} · [1,..,1,0,..,0]` (ones on `v1..vi`) for `i = n-1` down to `1`.
pub fn path_generating_family(g: &EdgeLabeledGraph, choices: Option<&[RingElement]>) -> Result<GeneratingFamily> {
    let order = g.path_order().ok_or(Error::NotAPath)?;
    tree_generating_family(g, *order.last().expect("nonempty path"), choices)
}

/// `p_{v_j} - p_{v_i}` split along the tree path into per-edge differences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub from: usize,
    pub to: usize,
    /// `(edge, summand)` in path order; the summands add up to `p_to - p_from`.
    pub summands: Vec<(usize, RingElement)>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeMembership {
    pub holds: bool,
    pub witnesses: Vec<PairWitness>,
}

/// Decides `p ∈ R_T` for a tree `T` pair by pair: `p_{v_j} - p_{v_i}` must be
/// a sum of one element from each ideal on the path from `v_i` to `v_j`.
pub fn tree_membership(g: &EdgeLabeledGraph, p: &Spline) -> Result<TreeMembership> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    p.check_host(g)?;
    let t = TreeSkeleton::bfs(g)?;
    let n = g.vertex_count();
    let mut witnesses = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let path = t.path_indices(i, j);
            let mut summands = Vec::with_capacity(path.len() - 1);
            let mut holds = true;
            for w in path.windows(2) {
                let e = g.edge_between(w[0], w[1]).expect("tree path edge");
                let s = p.value(w[1]).try_sub(p.value(w[0]))?;
                holds &= g.edges()[e].label().contains(&s)?;
                summands.push((e, s));
            }
            witnesses.push(PairWitness {
                from: i,
                to: j,
                summands,
                holds,
            });
        }
    }
    Ok(TreeMembership {
        holds: witnesses.iter().all(|w| w.holds),
        witnesses,
    })
}

/// `N · p` on the vertices of `sub` and `0` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroExtension {
    pub spline: Spline,
    pub factor: RingElement,
    /// `N = 0`: the result is the zero spline and says nothing about rank.
    pub flagged: bool,
}

/// Host edges that are not edges of `sub`, in declaration order.
pub fn excluded_edges(g: &EdgeLabeledGraph, sub: &EdgeLabeledGraph) -> Result<Vec<usize>> {
    let (_, emap) = sub.embedding_into(g)?;
    let mut inside = vec![false; g.edge_count()];
    for e in emap {
        inside[e] = true;
    }
    Ok((0..g.edge_count()).filter(|&e| !inside[e]).collect())
}

/// Extends a spline on the subgraph `sub` by zero, scaled by the product `N` of
/// one element from each excluded edge ideal. `choices`, aligned with
/// [`excluded_edges`], default to the canonical generators.
pub fn extend_by_zero(
    g: &EdgeLabeledGraph,
    sub: &EdgeLabeledGraph,
    p: &Spline,
    choices: Option<&[RingElement]>,
) -> Result<ZeroExtension> {
    let excluded = excluded_edges(g, sub)?;
    let picks: Vec<RingElement> = match choices {
        Some(cs) => {
            if cs.len() != excluded.len() {
                return Err(Error::WrongLength {
                    expected: excluded.len(),
                    found: cs.len(),
                });
            }
            for (&e, x) in excluded.iter().zip(cs) {
                check_choice(g, e, x)?;
            }
            cs.to_vec()
        }
        None => excluded
            .iter()
            .map(|&e| g.edges()[e].label().canonical().clone())
            .collect(),
    };
    let n = picks.iter().try_fold(g.ring().one(), |acc, x| acc.try_mul(x))?;
    extend_with_factor(g, sub, p, n)
}

/// Extension by zero with any `N` lying in every excluded edge ideal.
pub fn extend_with_factor(
    g: &EdgeLabeledGraph,
    sub: &EdgeLabeledGraph,
    p: &Spline,
    n: RingElement,
) -> Result<ZeroExtension> {
    require_spline(sub, p)?;
    let (vmap, _) = sub.embedding_into(g)?;
    for e in excluded_edges(g, sub)? {
        check_choice(g, e, &n)?;
    }
    let mut values = vec![g.ring().zero(); g.vertex_count()];
    for (i, &v) in vmap.iter().enumerate() {
        values[v] = n.try_mul(p.value(i))?;
    }
    Ok(ZeroExtension {
        spline: Spline::new(values),
        flagged: n.is_zero(),
        factor: n,
    })
}

/// `lcm` of the canonical generators of the edges outside `sub`; `1` if none.
pub fn lcm_scaling_factor(g: &EdgeLabeledGraph, sub: &EdgeLabeledGraph) -> Result<RingElement> {
    if !g.ring().is_euclidean() {
        return Err(Error::UnsupportedRing {
            op: "lcm_scaling_factor",
            ring: g.ring(),
        });
    }
    let mut acc = g.ring().one();
    for e in excluded_edges(g, sub)? {
        let gen = g.edges()[e].label().canonical();
        acc = if gen.is_zero() {
            gen.clone()
        } else if acc.is_zero() {
            acc
        } else {
            acc.lcm(gen)?
        };
    }
    Ok(acc)
}

/// Vertices sorted by BFS distance from the root, ties by declaration order.
pub fn flow_up_order(t: &TreeSkeleton) -> Vec<usize> {
    let mut order: Vec<usize> = (0..t.vertex_count()).collect();
    order.sort_by_key(|&v| (t.depth(v), v));
    order
}

/// For each vertex `v` (in flow-up order), the unit spline on the tree path
/// from `root` to `v`, extended by zero to all of `g`.
pub fn flow_up_family(g: &EdgeLabeledGraph, root: usize) -> Result<GeneratingFamily> {
    let t = TreeSkeleton::bfs_from(g, root)?;
    let order = flow_up_order(&t);
    let mut members = Vec::with_capacity(order.len());
    let mut factors = Vec::with_capacity(order.len());
    let mut flagged = Vec::with_capacity(order.len());
    for &v in &order {
        let path = t.path_indices(root, v);
        let ids: Vec<&str> = path.iter().map(|&w| g.vertex_id(w)).collect();
        let edges: Vec<(&str, &str)> = ids.windows(2).map(|w| (w[0], w[1])).collect();
        let sub = g.restrict(&ids, &edges)?;
        let ext = extend_by_zero(g, &sub, &Spline::one(&sub), None)?;
        members.push(ext.spline);
        factors.push(ext.factor);
        flagged.push(ext.flagged);
    }
    Ok(GeneratingFamily {
        host: g.clone(),
        members,
        pivots: order.clone(),
        vertex_order: order,
        scaling_factors: factors,
        flagged,
    })
}

/// Looks for a spline outside `R·1`.
///
/// Vertices joined by zero-ideal edges must carry equal values, so the
/// witness is `N · 1_K` for a connected component `K` of the zero-ideal
/// edges, with `N` built from the ideals on the edges leaving `K`. Over an
/// integral domain the answer is exact: `false` only when the zero-ideal
/// edges connect every vertex (in particular for a single vertex).
pub fn is_nontrivial_exists(g: &EdgeLabeledGraph) -> Result<Option<Spline>> {
    let zero_edges: Vec<usize> = (0..g.edge_count())
        .filter(|&e| g.edges()[e].label().is_zero())
        .collect();
    let rigid = g.spanning_subgraph(&zero_edges);
    let comps = rigid.components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let ring = g.ring();
    for comp in &comps {
        let mut inside = vec![false; g.vertex_count()];
        for &v in comp {
            inside[v] = true;
        }
        let leaving: Vec<&Ideal> = g
            .edges()
            .iter()
            .filter(|e| inside[e.tail()] != inside[e.head()])
            .map(|e| e.label())
            .collect();
        let n = common_element(ring, &leaving)?;
        if !n.is_zero() {
            let values = (0..g.vertex_count())
                .map(|v| if inside[v] { n.clone() } else { ring.zero() })
                .collect();
            return Ok(Some(Spline::new(values)));
        }
    }
    Ok(None)
}

/// A nonzero element of every ideal in `ideals` where one is easy to name:
/// the product of generators, or for `Z/m` the lcm of the divisors of `m`.
fn common_element(ring: RingSpec, ideals: &[&Ideal]) -> Result<RingElement> {
    match ring.modulus() {
        Some(m) => {
            let mut l: u64 = 1;
            for i in ideals {
                let c = i.canonical().as_residue().expect("modular ring").value();
                let d = if c == 0 { m } else { num_integer::gcd(c, m) };
                l = num_integer::lcm(l, d);
            }
            RingElement::residue(l % m, m)
        }
        None => ideals.iter().try_fold(ring.one(), |acc, i| acc.try_mul(i.canonical())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::EdgeInput;
    use crate::spline::verify;

    fn z(n: i64) -> RingElement {
        RingElement::int(n)
    }

    fn zs(v: &[i64]) -> Spline {
        Spline::new(v.iter().map(|&x| z(x)).collect())
    }

    fn graph(ring: RingSpec, n: usize, edges: &[(usize, usize, RingElement)]) -> EdgeLabeledGraph {
        let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        EdgeLabeledGraph::build(
            ring,
            vs.clone(),
            edges
                .iter()
                .map(|(a, b, x)| EdgeInput::principal(vs[a - 1].clone(), vs[b - 1].clone(), x.clone())),
        )
        .unwrap()
    }

    fn c3_235() -> EdgeLabeledGraph {
        graph(RingSpec::Integers, 3, &[(1, 2, z(2)), (2, 3, z(3)), (1, 3, z(5))])
    }

    fn p3_23() -> EdgeLabeledGraph {
        graph(RingSpec::Integers, 3, &[(1, 2, z(2)), (2, 3, z(3))])
    }

    fn all_verify(f: &GeneratingFamily) -> bool {
        f.members.iter().all(|m| verify(&f.host, m).unwrap().ok)
    }

    #[test]
    fn trivial_splines() {
        let k4 = fixtures::k4();
        let one = trivial_spline(&k4, RingElement::poly(&[1])).unwrap();
        assert!(verify(&k4, &one).unwrap().ok);
        assert_eq!(trivial_spline(&k4, RingElement::poly(&[])).unwrap(), Spline::zero(&k4));
        assert!(trivial_spline(&k4, z(1)).is_err());
    }

    #[test]
    fn cycle_spline_examples() {
        let g = c3_235();
        let p = cycle_spline(&g, &z(0), None).unwrap();
        assert_eq!(p, zs(&[0, 10, 25]));
        assert!(verify(&g, &p).unwrap().ok);

        let zero = CycleChoices {
            chord: z(0),
            steps: vec![z(0), z(0)],
        };
        assert_eq!(cycle_spline(&g, &z(7), Some(&zero)).unwrap(), zs(&[7, 7, 7]));
        let bad = CycleChoices {
            chord: z(3),
            steps: vec![z(2), z(3)],
        };
        assert!(matches!(
            cycle_spline(&g, &z(0), Some(&bad)),
            Err(Error::InvalidChoice(_))
        ));
        assert_eq!(cycle_spline(&p3_23(), &z(0), None).unwrap_err(), Error::NotACycle);

        let c4 = fixtures::k4_bold_c4();
        let p = cycle_spline(&c4, &RingElement::poly(&[]), None).unwrap();
        assert_eq!(p, fixtures::c4_tuple());
        assert!(verify(&c4, &p).unwrap().ok);
    }

    #[test]
    fn cycle_family_examples() {
        let f = cycle_generating_family(&c3_235(), None).unwrap();
        assert_eq!(f.members, vec![zs(&[1, 1, 1]), zs(&[0, 10, 10]), zs(&[0, 0, 15])]);
        assert!(all_verify(&f));
        assert!(f.is_triangular());
        assert_eq!(f.determinant().unwrap(), z(150));

        let units = graph(RingSpec::Integers, 3, &[(1, 2, z(1)), (2, 3, z(1)), (1, 3, z(1))]);
        let f = cycle_generating_family(&units, None).unwrap();
        assert_eq!(f.members, vec![zs(&[1, 1, 1]), zs(&[0, 1, 1]), zs(&[0, 0, 1])]);

        let zero = CycleChoices {
            chord: z(0),
            steps: vec![z(2), z(3)],
        };
        assert!(cycle_generating_family(&c3_235(), Some(&zero)).is_err());
    }

    #[test]
    fn path_family_examples() {
        let f = path_generating_family(&p3_23(), None).unwrap();
        assert_eq!(f.members, vec![zs(&[1, 1, 1]), zs(&[3, 3, 0]), zs(&[2, 0, 0])]);
        assert_eq!(f.vertex_order, vec![0, 1, 2]);
        assert!(f.is_triangular());
        assert!(all_verify(&f));
        let combo = f.combination(&[z(4), z(-2), z(9)]).unwrap();
        assert!(verify(&f.host, &combo).unwrap().ok);

        let p2 = graph(RingSpec::PolyRational, 2, &[(1, 2, RingElement::poly(&[1, 1]))]);
        let f = path_generating_family(&p2, None).unwrap();
        assert_eq!(
            f.members,
            vec![
                Spline::new(vec![RingElement::poly(&[1]), RingElement::poly(&[1])]),
                Spline::new(vec![RingElement::poly(&[1, 1]), RingElement::poly(&[])]),
            ]
        );
        assert_eq!(path_generating_family(&c3_235(), None).unwrap_err(), Error::NotAPath);
    }

    #[test]
    fn tree_family_on_a_star() {
        let star = graph(RingSpec::Integers, 4, &[(1, 2, z(2)), (1, 3, z(3)), (1, 4, z(5))]);
        let f = tree_generating_family(&star, 0, None).unwrap();
        assert_eq!(
            f.members,
            vec![
                zs(&[1, 1, 1, 1]),
                zs(&[0, 2, 0, 0]),
                zs(&[0, 0, 3, 0]),
                zs(&[0, 0, 0, 5])
            ]
        );
        assert!(f.is_triangular());
        assert!(all_verify(&f));
    }

    #[test]
    fn tree_membership_examples() {
        let g = p3_23();
        let m = tree_membership(&g, &zs(&[0, 2, 5])).unwrap();
        assert!(m.holds);
        let w = m.witnesses.iter().find(|w| (w.from, w.to) == (0, 2)).unwrap();
        assert_eq!(w.summands, vec![(0, z(2)), (1, z(3))]);
        assert!(!tree_membership(&g, &zs(&[0, 1, 1])).unwrap().holds);
        let c = tree_membership(&g, &zs(&[4, 4, 4])).unwrap();
        assert!(c.holds);
        assert!(c.witnesses.iter().all(|w| w.summands.iter().all(|(_, s)| s.is_zero())));
        assert_eq!(
            tree_membership(&c3_235(), &zs(&[0, 0, 0])).unwrap_err(),
            Error::NotATree
        );
    }

    #[test]
    fn extension_examples() {
        let k4 = fixtures::k4();
        let c4 = fixtures::k4_bold_c4();
        let p = fixtures::c4_tuple();
        let m = lcm_scaling_factor(&k4, &c4).unwrap();
        let expected = fixtures::x_pow_plus_one(5)
            .try_mul(&fixtures::x_pow_plus_one(6))
            .unwrap();
        assert_eq!(m, expected);
        let ext = extend_with_factor(&k4, &c4, &p, m).unwrap();
        assert!(verify(&k4, &ext.spline).unwrap().ok);
        let prod = extend_by_zero(&k4, &c4, &p, None).unwrap();
        assert_eq!(prod.factor, expected);

        let same = extend_by_zero(&k4, &k4, &fixtures::k4_spline(), None).unwrap();
        assert_eq!(same.factor, RingElement::poly(&[1]));
        assert_eq!(same.spline, fixtures::k4_spline());
        assert_eq!(lcm_scaling_factor(&k4, &k4).unwrap(), RingElement::poly(&[1]));

        let single = k4.restrict::<&str>(&["v2"], &[]).unwrap();
        let ext = extend_by_zero(&k4, &single, &Spline::one(&single), None).unwrap();
        assert!(verify(&k4, &ext.spline).unwrap().ok);
        assert!(ext.spline.value(0).is_zero() && !ext.spline.value(1).is_zero());

        assert!(matches!(
            extend_by_zero(&k4, &c4, &fixtures::p4_tuple(), None),
            Err(Error::NotASpline { .. })
        ));
    }

    #[test]
    fn lcm_of_four_and_six() {
        let g = graph(RingSpec::Integers, 3, &[(1, 2, z(4)), (2, 3, z(6))]);
        let sub = g.restrict::<&str>(&["v1"], &[]).unwrap();
        assert_eq!(lcm_scaling_factor(&g, &sub).unwrap(), z(12));
        let gm = graph(
            RingSpec::integers_mod(6).unwrap(),
            2,
            &[(1, 2, RingElement::residue(2, 6).unwrap())],
        );
        let sub = gm.restrict::<&str>(&["v1"], &[]).unwrap();
        assert!(matches!(
            lcm_scaling_factor(&gm, &sub),
            Err(Error::UnsupportedRing { .. })
        ));
    }

    #[test]
    fn zero_ideal_extension_is_flagged() {
        let g = graph(RingSpec::Integers, 2, &[(1, 2, z(0))]);
        let sub = g.restrict::<&str>(&["v1"], &[]).unwrap();
        let ext = extend_by_zero(&g, &sub, &Spline::one(&sub), None).unwrap();
        assert!(ext.flagged);
        assert_eq!(ext.spline, zs(&[0, 0]));
    }

    #[test]
    fn flow_up_examples() {
        let f = flow_up_family(&p3_23(), 0).unwrap();
        assert_eq!(f.members, vec![zs(&[6, 0, 0]), zs(&[3, 3, 0]), zs(&[1, 1, 1])]);
        assert_eq!(f.diagonal(), vec![z(6), z(3), z(1)]);
        assert!(f.is_triangular());

        let single = graph(RingSpec::Integers, 1, &[]);
        assert_eq!(flow_up_family(&single, 0).unwrap().members, vec![zs(&[1])]);

        let star = graph(RingSpec::Integers, 4, &[(1, 2, z(2)), (1, 3, z(2)), (1, 4, z(2))]);
        let f = flow_up_family(&star, 0).unwrap();
        assert_eq!(f.members[0], zs(&[8, 0, 0, 0]));
        for (i, m) in f.members.iter().enumerate().skip(1) {
            let mut want = vec![0; 4];
            want[0] = 4;
            want[i] = 4;
            assert_eq!(m, &zs(&want));
        }
        assert!(all_verify(&f) && f.is_triangular());

        let k4 = fixtures::k4();
        let f = flow_up_family(&k4, 0).unwrap();
        assert!(all_verify(&f) && f.is_triangular());
        assert!(!f.determinant().unwrap().is_zero());
    }

    #[test]
    fn nontrivial_existence() {
        let p2 = graph(RingSpec::Integers, 2, &[(1, 2, z(7))]);
        let w = is_nontrivial_exists(&p2).unwrap().unwrap();
        assert!(verify(&p2, &w).unwrap().ok && w.is_nontrivial());
        assert!(is_nontrivial_exists(&graph(RingSpec::Integers, 1, &[]))
            .unwrap()
            .is_none());
        let k4 = fixtures::k4();
        let w = is_nontrivial_exists(&k4).unwrap().unwrap();
        assert!(verify(&k4, &w).unwrap().ok && w.is_nontrivial());

        let rigid = graph(RingSpec::Integers, 3, &[(1, 2, z(0)), (2, 3, z(0)), (1, 3, z(5))]);
        assert!(is_nontrivial_exists(&rigid).unwrap().is_none());
        let split = graph(RingSpec::Integers, 3, &[(1, 2, z(0)), (2, 3, z(5))]);
        let w = is_nontrivial_exists(&split).unwrap().unwrap();
        assert!(verify(&split, &w).unwrap().ok && w.is_nontrivial());
    }
}
