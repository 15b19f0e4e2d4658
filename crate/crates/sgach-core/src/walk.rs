//! Path and cycle witnesses: balance, unbalanced P3s, and antipodal
//! unbalanced C4s.
//!
//! A path or cycle is unbalanced when it carries an odd number of negative
//! edges, balanced otherwise.

use crate::bitset::Bits;
use crate::graph::{Graph2EC, GraphError};
use crate::sign::Sign;
use crate::switching::SignedClass;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("witness is not a cycle of the graph: {0}")]
    NotACycle(&'static str),
}

/// An ordered path in a graph, with the sign product along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub sign: Sign,
}

/// An ordered cycle (closing edge implicit), with the sign product along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub sign: Sign,
}

impl CycleWitness {
    /// Builds a witness from a vertex sequence, validating that it is a
    /// cycle of `g`, and computes its sign product.
    pub fn in_graph(g: &Graph2EC, vertices: Vec<usize>) -> Result<CycleWitness, WalkError> {
        let sign = cycle_sign(g, &vertices)?;
        Ok(CycleWitness { vertices, sign })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Balance {
    Balanced,
    Unbalanced,
}

fn cycle_sign(g: &Graph2EC, vertices: &[usize]) -> Result<Sign, WalkError> {
    if vertices.len() < 3 {
        return Err(WalkError::NotACycle("fewer than 3 vertices"));
    }
    for &v in vertices {
        g.check_vertex(v)?;
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vertices.len() {
        return Err(WalkError::NotACycle("repeated vertex"));
    }
    let mut sign = Sign::Positive;
    for i in 0..vertices.len() {
        let u = vertices[i];
        let v = vertices[(i + 1) % vertices.len()];
        match g.sign(u, v) {
            Some(s) => sign = sign * s,
            None => return Err(WalkError::NotACycle("consecutive vertices not adjacent")),
        }
    }
    Ok(sign)
}

/// Whether a cycle of `g` is balanced (even number of negative edges).
/// Errors if the witness is not a cycle of `g`.
pub fn cycle_balance(g: &Graph2EC, c: &CycleWitness) -> Result<Balance, WalkError> {
    match cycle_sign(g, &c.vertices)? {
        Sign::Positive => Ok(Balance::Balanced),
        Sign::Negative => Ok(Balance::Unbalanced),
    }
}

/// A common neighbor `w` of `u` and `v` with `sign(uw) != sign(wv)`, i.e.
/// `u` and `v` are the end vertices of an unbalanced P3. Returns the
/// lowest-id witness.
pub fn up3_between(g: &Graph2EC, u: usize, v: usize) -> Result<Option<PathWitness>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    let w = match (
        g.pos_row(u).first_common(g.neg_row(v)),
        g.neg_row(u).first_common(g.pos_row(v)),
    ) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(w.map(|w| PathWitness {
        vertices: vec![u, w, v],
        sign: Sign::Negative,
    }))
}

// Common neighbors of u,v split by the product sign(uw)*sign(wv):
// (product-positive set, product-negative set).
pub(crate) fn common_neighbor_products(g: &Graph2EC, u: usize, v: usize) -> (Bits, Bits) {
    let n = g.n();
    let mut same = Bits::new(n);
    let mut diff = Bits::new(n);
    for w in g.adj_row(u).iter_ones() {
        if w == u || w == v {
            continue;
        }
        match (g.sign(u, w), g.sign(w, v)) {
            (Some(a), Some(b)) if a == b => same.set(w),
            (Some(_), Some(_)) => diff.set(w),
            _ => {}
        }
    }
    (same, diff)
}

/// For non-adjacent `u != v` in a signed graph: common neighbors `w != w'`
/// with `sign(uw)·sign(wv) != sign(uw')·sign(w'v)` in the representative.
/// The products are switching-invariant, so the answer is a property of the
/// class; the returned cycle `u w v w'` is an unbalanced C4 in the
/// representative. Adjacent pairs are rejected.
pub fn uc4_antipodal(
    sc: &SignedClass,
    u: usize,
    v: usize,
) -> Result<Option<CycleWitness>, GraphError> {
    let g = sc.representative();
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Err(GraphError::AdjacentPair {
            u: u.min(v),
            v: u.max(v),
        });
    }
    let (same, diff) = common_neighbor_products(g, u, v);
    let w = same.iter_ones().next();
    let w2 = diff.iter_ones().next();
    Ok(match (w, w2) {
        (Some(w), Some(w2)) => Some(CycleWitness {
            vertices: vec![u, w, v, w2],
            sign: Sign::Negative,
        }),
        _ => None,
    })
}
