//! The extended GKM matrix `[M_G | q_e α_e]` and its invertible row reductions.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;
use crate::ring::{RingElement, RingSpec};
use crate::spline::Spline;
use crate::tree::TreeSkeleton;

/// `coeff · q_edge`, where `q_edge` stands for an element of the edge's ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotTerm {
    pub edge: usize,
    pub coeff: i64,
}

/// A row `coeffs · p = Σ terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmRow {
    /// The edge this row started as.
    pub edge: usize,
    pub coeffs: Vec<i64>,
    pub terms: Vec<SlotTerm>,
}

impl GkmRow {
    fn negate(&mut self) {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self.terms.iter_mut().for_each(|t| t.coeff = -t.coeff);
    }

    fn add_multiple(&mut self, source: &GkmRow, factor: i64) {
        for (c, s) in self.coeffs.iter_mut().zip(&source.coeffs) {
            *c += factor * s;
        }
        for t in &source.terms {
            match self.terms.iter_mut().find(|x| x.edge == t.edge) {
                Some(x) => x.coeff += factor * t.coeff,
                None => self.terms.push(SlotTerm {
                    edge: t.edge,
                    coeff: factor * t.coeff,
                }),
            }
        }
        self.terms.retain(|t| t.coeff != 0);
    }

    pub fn is_zero_in_vertex_columns(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Σ coeff · q[edge]`, where `q` is indexed by host edge.
    pub fn rhs_value(&self, ring: RingSpec, q: &[RingElement]) -> Result<RingElement> {
        let mut acc = ring.zero();
        for t in &self.terms {
            acc = acc.try_add(&RingElement::from_i64(ring, t.coeff).try_mul(&q[t.edge])?)?;
        }
        Ok(acc)
    }

    /// `Σ coeffs · p`
    pub fn lhs_value(&self, ring: RingSpec, p: &Spline) -> Result<RingElement> {
        let mut acc = ring.zero();
        for (c, x) in self.coeffs.iter().zip(p.values()) {
            if *c != 0 {
                acc = acc.try_add(&RingElement::from_i64(ring, *c).try_mul(x)?)?;
            }
        }
        Ok(acc)
    }
}

/// An invertible row operation over any commutative ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    Negate(usize),
    /// `row[target] += factor · row[source]` with `factor = ±1`.
    AddMultiple {
        target: usize,
        source: usize,
        factor: i64,
    },
}

impl RowOp {
    pub fn inverse(self) -> RowOp {
        match self {
            RowOp::AddMultiple { target, source, factor } => RowOp::AddMultiple {
                target,
                source,
                factor: -factor,
            },
            op => op,
        }
    }

    pub fn apply(self, rows: &mut [GkmRow]) {
        match self {
            RowOp::Swap(a, b) => rows.swap(a, b),
            RowOp::Negate(a) => rows[a].negate(),
            RowOp::AddMultiple { target, source, factor } => {
                debug_assert!(target != source && factor.abs() == 1);
                let src = rows[source].clone();
                rows[target].add_multiple(&src, factor);
            }
        }
    }
}

/// `[M_G | q_e α_e]`: one row per directed edge, one column per vertex.
#[derive(Clone, Debug)]
pub struct GkmMatrix {
    graph: EdgeLabeledGraph,
    /// Whether each edge is directed head -> tail instead of the default.
    reversed: Vec<bool>,
    rows: Vec<GkmRow>,
}

/// Builds `M_G` with each edge directed earlier -> later vertex, except where
/// `reversed[e]` is set.
pub fn build_gkm_matrix(g: &EdgeLabeledGraph, reversed: Option<&[bool]>) -> Result<GkmMatrix> {
    let reversed = match reversed {
        Some(r) if r.len() != g.edge_count() => {
            return Err(Error::WrongLength {
                expected: g.edge_count(),
                found: r.len(),
            })
        }
        Some(r) => r.to_vec(),
        None => vec![false; g.edge_count()],
    };
    let rows = g
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            let mut coeffs = vec![0; g.vertex_count()];
            let (t, h) = if reversed[idx] {
                (e.head(), e.tail())
            } else {
                (e.tail(), e.head())
            };
            coeffs[t] = 1;
            coeffs[h] = -1;
            GkmRow {
                edge: idx,
                coeffs,
                terms: vec![SlotTerm { edge: idx, coeff: 1 }],
            }
        })
        .collect();
    Ok(GkmMatrix {
        graph: g.clone(),
        reversed,
        rows,
    })
}

impl GkmMatrix {
    pub fn graph(&self) -> &EdgeLabeledGraph {
        &self.graph
    }

    pub fn rows(&self) -> &[GkmRow] {
        &self.rows
    }

    pub fn columns(&self) -> &[String] {
        self.graph.vertices()
    }

    pub fn is_reversed(&self, edge: usize) -> bool {
        self.reversed[edge]
    }

    /// `(tail, head)` of an edge under this matrix's orientation.
    pub fn directed(&self, edge: usize) -> (usize, usize) {
        let e = &self.graph.edges()[edge];
        if self.reversed[edge] {
            (e.head(), e.tail())
        } else {
            (e.tail(), e.head())
        }
    }

    /// `true` iff `M·p = q`, with `q[e] ∈ α(e)` checked for every edge.
    pub fn solves(&self, p: &Spline, q: &[RingElement]) -> Result<bool> {
        check_slots(&self.graph, q)?;
        p.check_host(&self.graph)?;
        rows_solved(self.graph.ring(), &self.rows, p, q)
    }

    pub fn render_rhs(&self, row: &GkmRow) -> String {
        render_terms(self, &row.terms)
    }
}

fn check_slots(g: &EdgeLabeledGraph, q: &[RingElement]) -> Result<()> {
    if q.len() != g.edge_count() {
        return Err(Error::WrongLength {
            expected: g.edge_count(),
            found: q.len(),
        });
    }
    for (idx, (e, x)) in g.edges().iter().zip(q).enumerate() {
        if !e.label().contains(x)? {
            let (u, v) = g.edge_ids(idx);
            return Err(Error::OutsideIdeal(u.to_string(), v.to_string()));
        }
    }
    Ok(())
}

fn rows_solved(ring: RingSpec, rows: &[GkmRow], p: &Spline, q: &[RingElement]) -> Result<bool> {
    for row in rows {
        if row.lhs_value(ring, p)? != row.rhs_value(ring, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn render_terms(m: &GkmMatrix, terms: &[SlotTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (a, b) = m.directed(t.edge);
        let g = m.graph.edges()[t.edge].label().canonical().to_string();
        let g = if g.trim_start_matches('-').contains(['+', '-', '/']) {
            format!("({g})")
        } else {
            g
        };
        let mag = t.coeff.unsigned_abs();
        let sign = match (i, t.coeff < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sign);
        if mag != 1 {
            let _ = write!(out, "{mag}·");
        }
        let _ = write!(out, "q_{{{},{}}}·{}", m.graph.vertex_id(a), m.graph.vertex_id(b), g);
    }
    out
}

/// The outcome of reducing `[M_G | q_e α_e]` along a spanning tree.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    matrix: GkmMatrix,
    pub tree_rows: Vec<GkmRow>,
    /// One row per chord; zero in every vertex column.
    pub cycle_rows: Vec<GkmRow>,
    /// Operations that turn the rows of `M_G`, in edge order, into
    /// `tree_rows ++ cycle_rows`.
    pub transform_log: Vec<RowOp>,
}

impl ReducedSystem {
    pub fn matrix(&self) -> &GkmMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> impl Iterator<Item = &GkmRow> {
        self.tree_rows.iter().chain(&self.cycle_rows)
    }

    pub fn solves(&self, p: &Spline, q: &[RingElement]) -> Result<bool> {
        check_slots(&self.matrix.graph, q)?;
        p.check_host(&self.matrix.graph)?;
        let rows: Vec<GkmRow> = self.rows().cloned().collect();
        rows_solved(self.matrix.graph.ring(), &rows, p, q)
    }

    pub fn render_rhs(&self, row: &GkmRow) -> String {
        self.matrix.render_rhs(row)
    }
}

/// Applies `ops` to the rows of a freshly built matrix.
pub fn replay(m: &GkmMatrix, ops: &[RowOp]) -> Vec<GkmRow> {
    let mut rows = m.rows.clone();
    for op in ops {
        op.apply(&mut rows);
    }
    rows
}

/// Moves the rows listed in `order` to the front, in that order, by swaps.
fn reorder(rows: &mut [GkmRow], order: &[usize], log: &mut Vec<RowOp>) {
    for (slot, &edge) in order.iter().enumerate() {
        let at = rows.iter().position(|r| r.edge == edge).expect("every edge has a row");
        if at != slot {
            let op = RowOp::Swap(slot, at);
            op.apply(rows);
            log.push(op);
        }
    }
}

/// Eliminates the vertex columns of every chord row with tree rows, leaving
/// `q_e + Σ c_j q_j` over the chord's fundamental cycle.
pub fn reduce_via_tree(m: &GkmMatrix, t: &TreeSkeleton) -> Result<ReducedSystem> {
    let g = &m.graph;
    let tree_edges = t.edge_indices(g)?;
    let cycles = t.fundamental_cycles(g)?;
    let mut log = Vec::new();
    let mut rows = m.rows.clone();
    let order: Vec<usize> = tree_edges
        .iter()
        .copied()
        .chain(cycles.iter().map(|c| c.chord))
        .collect();
    reorder(&mut rows, &order, &mut log);
    let row_of = |edge: usize| order.iter().position(|&e| e == edge).expect("ordered");

    for cycle in &cycles {
        let target = row_of(cycle.chord);
        let (t0, _) = m.directed(cycle.chord);
        let mut seq = cycle.vertex_sequence.clone();
        // Walk the cycle in the chord row's own direction, chord first.
        if seq[0] != t0 {
            seq.reverse();
            seq.insert(0, t0);
            seq.pop();
        }
        for w in seq.windows(2).skip(1) {
            let e = g.edge_between(w[0], w[1]).expect("cycle edge");
            let factor = if m.directed(e).0 == w[0] { 1 } else { -1 };
            let op = RowOp::AddMultiple {
                target,
                source: row_of(e),
                factor,
            };
            op.apply(&mut rows);
            log.push(op);
        }
        debug_assert!(rows[target].is_zero_in_vertex_columns());
    }
    let cycle_rows = rows.split_off(tree_edges.len());
    Ok(ReducedSystem {
        matrix: m.clone(),
        tree_rows: rows,
        cycle_rows,
        transform_log: log,
    })
}

/// `true` iff every fundamental-cycle signed sum of `q` vanishes, i.e. the
/// system `M_G p = q` is consistent (for connected `G`).
pub fn syzygy_check(g: &EdgeLabeledGraph, t: &TreeSkeleton, q: &[RingElement]) -> Result<bool> {
    check_slots(g, q)?;
    for cycle in t.fundamental_cycles(g)? {
        let mut acc = g.ring().zero();
        for (e, sign) in cycle.signed_edges(g) {
            acc = if sign > 0 {
                acc.try_add(&q[e])?
            } else {
                acc.try_sub(&q[e])?
            };
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a path `v1..vn`, rewrites row `i` as `e_i - e_n` with the suffix sum
/// `q_{n-1,n} + ... + q_{i,i+1}` on the right.
pub fn path_reduced_form(m: &GkmMatrix) -> Result<ReducedSystem> {
    let g = &m.graph;
    let order = g.path_order().ok_or(Error::NotAPath)?;
    let path_edges: Vec<usize> = order
        .windows(2)
        .map(|w| g.edge_between(w[0], w[1]).expect("consecutive path vertices"))
        .collect();
    let mut log = Vec::new();
    let mut rows = m.rows.clone();
    reorder(&mut rows, &path_edges, &mut log);
    for (i, w) in order.windows(2).enumerate() {
        if m.directed(path_edges[i]).0 != w[0] {
            let op = RowOp::Negate(i);
            op.apply(&mut rows);
            log.push(op);
        }
    }
    for i in (0..path_edges.len().saturating_sub(1)).rev() {
        let op = RowOp::AddMultiple {
            target: i,
            source: i + 1,
            factor: 1,
        };
        op.apply(&mut rows);
        log.push(op);
    }
    // Present suffix sums from the far end of the path inward.
    for row in &mut rows {
        row.terms
            .sort_by_key(|t| std::cmp::Reverse(path_edges.iter().position(|&e| e == t.edge)));
    }
    Ok(ReducedSystem {
        matrix: m.clone(),
        tree_rows: rows,
        cycle_rows: Vec::new(),
        transform_log: log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::EdgeInput;

    fn path(labels: &[RingElement]) -> EdgeLabeledGraph {
        let n = labels.len() + 1;
        let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let es = labels
            .iter()
            .enumerate()
            .map(|(i, a)| EdgeInput::principal(vs[i].clone(), vs[i + 1].clone(), a.clone()));
        EdgeLabeledGraph::build(labels[0].ring(), vs.clone(), es).unwrap()
    }

    fn p3() -> EdgeLabeledGraph {
        path(&[fixtures::x_pow_plus_one(1), fixtures::x_pow_plus_one(2)])
    }

    fn z(n: i64) -> RingElement {
        RingElement::int(n)
    }

    #[test]
    fn p3_matrix() {
        let m = build_gkm_matrix(&p3(), None).unwrap();
        let coeffs: Vec<_> = m.rows().iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![1, -1, 0], vec![0, 1, -1]]);
        assert_eq!(m.render_rhs(&m.rows()[0]), "q_{v1,v2}·(x+1)");
        assert_eq!(m.render_rhs(&m.rows()[1]), "q_{v2,v3}·(x^2+1)");
    }

    #[test]
    fn k4_matrix_rows_sum_to_zero() {
        let m = build_gkm_matrix(&fixtures::k4(), None).unwrap();
        assert_eq!(m.rows().len(), 6);
        let expected = [
            [1, -1, 0, 0],
            [1, 0, -1, 0],
            [1, 0, 0, -1],
            [0, 1, -1, 0],
            [0, 1, 0, -1],
            [0, 0, 1, -1],
        ];
        for (row, want) in m.rows().iter().zip(expected) {
            assert_eq!(row.coeffs, want);
            assert_eq!(row.coeffs.iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn reorienting_negates_one_row() {
        let g = fixtures::k4();
        let a = build_gkm_matrix(&g, None).unwrap();
        let b = build_gkm_matrix(&g, Some(&[false, false, true, false, false, false])).unwrap();
        for (i, (ra, rb)) in a.rows().iter().zip(b.rows()).enumerate() {
            let neg: Vec<i64> = ra.coeffs.iter().map(|c| -c).collect();
            if i == 2 {
                assert_eq!(rb.coeffs, neg);
            } else {
                assert_eq!(rb.coeffs, ra.coeffs);
            }
        }
        assert!(build_gkm_matrix(&g, Some(&[true])).is_err());
    }

    #[test]
    fn solves_examples() {
        let g = p3();
        let m = build_gkm_matrix(&g, None).unwrap();
        let p = Spline::new(vec![
            RingElement::poly(&[2, 1, 1]),
            RingElement::poly(&[1, 0, 1]),
            RingElement::poly(&[]),
        ]);
        let q = [fixtures::x_pow_plus_one(1), fixtures::x_pow_plus_one(2)];
        assert!(m.solves(&p, &q).unwrap());
        let zero = [RingElement::poly(&[]), RingElement::poly(&[])];
        assert!(m.solves(&Spline::zero(&g), &zero).unwrap());
        assert!(matches!(
            m.solves(&p, &[RingElement::poly(&[1]), RingElement::poly(&[])]),
            Err(Error::OutsideIdeal(_, _))
        ));

        let p2 =
            EdgeLabeledGraph::build(RingSpec::Integers, ["a", "b"], [EdgeInput::principal("a", "b", z(2))]).unwrap();
        let m = build_gkm_matrix(&p2, None).unwrap();
        assert_eq!(m.rows()[0].coeffs, vec![1, -1]);
        assert!(!m.solves(&Spline::new(vec![z(1), z(0)]), &[z(2)]).unwrap());
    }

    #[test]
    fn triangle_reduction() {
        let k4 = fixtures::k4();
        let tri = k4
            .restrict(&["v1", "v2", "v4"], &[("v1", "v2"), ("v1", "v4"), ("v2", "v4")])
            .unwrap();
        let m = build_gkm_matrix(&tri, None).unwrap();
        // Tree {v1v2, v2v4}: the chord is v1v4.
        let t = TreeSkeleton::from_edge_indices(&tri, 0, &[0, 2]).unwrap();
        let r = reduce_via_tree(&m, &t).unwrap();
        assert_eq!(r.tree_rows.len(), 2);
        assert_eq!(r.cycle_rows.len(), 1);
        let row = &r.cycle_rows[0];
        assert!(row.is_zero_in_vertex_columns());
        assert_eq!(
            r.render_rhs(row),
            "q_{v1,v4}·(x^4+1) - q_{v2,v4}·(x^6+1) - q_{v1,v2}·(x+1)"
        );
        assert_eq!(replay(&m, &r.transform_log), r.rows().cloned().collect::<Vec<_>>());
    }

    #[test]
    fn k4_star_reduction() {
        let k4 = fixtures::k4();
        let m = build_gkm_matrix(&k4, None).unwrap();
        let t = TreeSkeleton::bfs_from_id(&k4, "v4").unwrap();
        let r = reduce_via_tree(&m, &t).unwrap();
        let sums: Vec<Vec<(String, i64)>> = r
            .cycle_rows
            .iter()
            .map(|row| {
                let mut v: Vec<_> = row
                    .terms
                    .iter()
                    .map(|t| {
                        let (a, b) = k4.edge_ids(t.edge);
                        (format!("{a}{b}"), t.coeff)
                    })
                    .collect();
                v.sort();
                v
            })
            .collect();
        let s = |x: &str, c| (x.to_string(), c);
        assert_eq!(
            sums,
            vec![
                vec![s("v1v2", 1), s("v1v4", -1), s("v2v4", 1)],
                vec![s("v1v3", 1), s("v1v4", -1), s("v3v4", 1)],
                vec![s("v2v3", 1), s("v2v4", -1), s("v3v4", 1)],
            ]
        );
    }

    #[test]
    fn reduction_with_reversed_chord_and_tree_edges() {
        let k4 = fixtures::k4();
        let m = build_gkm_matrix(&k4, Some(&[true, false, true, true, false, true])).unwrap();
        let t = TreeSkeleton::bfs(&k4).unwrap();
        let r = reduce_via_tree(&m, &t).unwrap();
        for row in &r.cycle_rows {
            assert!(row.is_zero_in_vertex_columns());
            assert_eq!(
                row.terms[0],
                SlotTerm {
                    edge: row.edge,
                    coeff: 1
                }
            );
        }
        assert_eq!(replay(&m, &r.transform_log), r.rows().cloned().collect::<Vec<_>>());
    }

    #[test]
    fn tree_input_has_no_cycle_rows() {
        let g = p3();
        let m = build_gkm_matrix(&g, None).unwrap();
        let r = reduce_via_tree(&m, &TreeSkeleton::bfs(&g).unwrap()).unwrap();
        assert!(r.cycle_rows.is_empty());
        assert_eq!(r.tree_rows, m.rows());
        assert!(r.transform_log.is_empty());
    }

    #[test]
    fn inverse_ops_undo() {
        let m = build_gkm_matrix(&fixtures::k4(), None).unwrap();
        let r = reduce_via_tree(&m, &TreeSkeleton::bfs(m.graph()).unwrap()).unwrap();
        let mut rows = replay(&m, &r.transform_log);
        for op in r.transform_log.iter().rev() {
            op.inverse().apply(&mut rows);
        }
        assert_eq!(rows, m.rows());
    }

    #[test]
    fn syzygy_examples() {
        let c3 = EdgeLabeledGraph::build(
            RingSpec::Integers,
            ["v1", "v2", "v3"],
            [
                EdgeInput::principal("v1", "v2", z(2)),
                EdgeInput::principal("v2", "v3", z(3)),
                EdgeInput::principal("v1", "v3", z(5)),
            ],
        )
        .unwrap();
        let t = TreeSkeleton::bfs(&c3).unwrap();
        // Along v1 -> v2 -> v3 -> v1 the signed terms are 2, 3, -5.
        assert!(syzygy_check(&c3, &t, &[z(2), z(3), z(5)]).unwrap());
        assert!(!syzygy_check(&c3, &t, &[z(2), z(3), z(-5)]).unwrap());
        assert!(syzygy_check(&c3, &t, &[z(0), z(0), z(0)]).unwrap());
        assert!(matches!(
            syzygy_check(&c3, &t, &[z(1), z(0), z(0)]),
            Err(Error::OutsideIdeal(_, _))
        ));
    }

    #[test]
    fn path_forms() {
        let m = build_gkm_matrix(&p3(), None).unwrap();
        let r = path_reduced_form(&m).unwrap();
        let coeffs: Vec<_> = r.tree_rows.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![1, 0, -1], vec![0, 1, -1]]);
        assert_eq!(r.render_rhs(&r.tree_rows[0]), "q_{v2,v3}·(x^2+1) + q_{v1,v2}·(x+1)");
        assert_eq!(r.render_rhs(&r.tree_rows[1]), "q_{v2,v3}·(x^2+1)");

        let p2 = path(&[z(2)]);
        let m2 = build_gkm_matrix(&p2, None).unwrap();
        assert_eq!(path_reduced_form(&m2).unwrap().tree_rows, m2.rows());

        let p4 = path(&[z(2), z(3), z(5)]);
        let r4 = path_reduced_form(&build_gkm_matrix(&p4, None).unwrap()).unwrap();
        let lens: Vec<_> = r4.tree_rows.iter().map(|r| r.terms.len()).collect();
        assert_eq!(lens, vec![3, 2, 1]);

        let m = build_gkm_matrix(&fixtures::k4(), None).unwrap();
        assert_eq!(path_reduced_form(&m).unwrap_err(), Error::NotAPath);
    }
}
