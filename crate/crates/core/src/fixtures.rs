//! The running `K4` example over `Q[x]` and the splines drawn on it.
//!
//! Vertices `v1..v4` run clockwise from the upper-left corner. Edge labels:
//! `v1v2 <x+1>`, `v2v3 <x^2+1>`, `v3v4 <x^3+1>`, `v1v4 <x^4+1>`,
//! `v1v3 <x^5+1>`, `v2v4 <x^6+1>`.

use crate::graph::{EdgeInput, EdgeLabeledGraph};
use crate::ring::{RingElement, RingSpec};
use crate::spline::Spline;

/// `x^k + 1`
pub fn x_pow_plus_one(k: usize) -> RingElement {
    let mut c = vec![0; k + 1];
    c[0] = 1;
    c[k] += 1;
    RingElement::poly(&c)
}

fn mul(a: &RingElement, b: &RingElement) -> RingElement {
    a.try_mul(b).expect("same ring")
}

fn add(a: &RingElement, b: &RingElement) -> RingElement {
    a.try_add(b).expect("same ring")
}

/// `(u, v, k)` meaning the edge `uv` is labeled `<x^k+1>`, rows in the order
/// of the 6x4 GKM matrix for `K4`.
pub const K4_EDGES: [(&str, &str, usize); 6] = [
    ("v1", "v2", 1),
    ("v1", "v3", 5),
    ("v1", "v4", 4),
    ("v2", "v3", 2),
    ("v2", "v4", 6),
    ("v3", "v4", 3),
];

pub fn k4() -> EdgeLabeledGraph {
    EdgeLabeledGraph::build(
        RingSpec::PolyRational,
        ["v1", "v2", "v3", "v4"],
        K4_EDGES
            .iter()
            .map(|&(u, v, k)| EdgeInput::principal(u, v, x_pow_plus_one(k))),
    )
    .expect("valid fixture")
}

/// The non-constant spline on `K4`: `(0, A, A+B, A+B+C)` where
/// `A, B, C = (x^k+1)(x^5+1)(x^6+1)(x^4+1)` for `k = 1, 2, 3`.
pub fn k4_spline() -> Spline {
    let common = mul(&mul(&x_pow_plus_one(5), &x_pow_plus_one(6)), &x_pow_plus_one(4));
    let a = mul(&x_pow_plus_one(1), &common);
    let b = mul(&x_pow_plus_one(2), &common);
    let c = mul(&x_pow_plus_one(3), &common);
    let ab = add(&a, &b);
    let abc = add(&ab, &c);
    Spline::new(vec![RingElement::poly(&[]), a, ab, abc])
}

/// The path `v1 v2 v3 v4` along the top, right and bottom sides.
pub fn k4_bold_p4() -> EdgeLabeledGraph {
    k4().restrict(&["v1", "v2", "v3", "v4"], &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")])
        .expect("subgraph of K4")
}

/// The Hamiltonian cycle `v1 v2 v3 v4`.
pub fn k4_bold_c4() -> EdgeLabeledGraph {
    k4().restrict(
        &["v1", "v2", "v3", "v4"],
        &[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v1", "v4")],
    )
    .expect("subgraph of K4")
}

/// `(0, x+1, x^2+x+2, x^3+x^2+x+3)`: a spline on the bold path only.
pub fn p4_tuple() -> Spline {
    Spline::new(vec![
        RingElement::poly(&[]),
        RingElement::poly(&[1, 1]),
        RingElement::poly(&[2, 1, 1]),
        RingElement::poly(&[3, 1, 1, 1]),
    ])
}

/// `(x^4+1)` times the path tuple: a spline on the bold cycle only.
pub fn c4_tuple() -> Spline {
    p4_tuple().scalar_mul(&x_pow_plus_one(4)).expect("same ring")
}
