//! Twin vertices (identical colored neighborhoods) and equal-neighborhood
//! classes of the underlying graph.

use crate::graph::{Graph2EC, GraphError};
use crate::switching::SignedClass;

/// Two distinct vertices are 2-edge-colored twins when every other vertex
/// is joined to both by edges of the same sign, or to neither. Adjacent
/// pairs are never twins (the shared edge would have to be a loop).
pub fn twins_2ec(g: &Graph2EC, u: usize, v: usize) -> Result<bool, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Ok(false);
    }
    // Non-adjacent and loop-free, so the rows carry no u/v bits to mask off.
    Ok(g.pos_row(u) == g.pos_row(v) && g.neg_row(u) == g.neg_row(v))
}

/// Twins in a signed graph: twins in the representative, or in the
/// representative re-signed at `u` (i.e. twins up to re-signing one of
/// them).
pub fn twins_signed(sc: &SignedClass, u: usize, v: usize) -> Result<bool, GraphError> {
    let g = sc.representative();
    Ok(twins_2ec(g, u, v)? || twins_2ec(&g.resign_at(u)?, u, v)?)
}

/// Partition of the vertices into equal-open-neighborhood classes of the
/// underlying graph (signs ignored). Classes are listed by their lowest
/// member, members ascending.
pub fn rc_classes(g: &Graph2EC) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let rows: Vec<_> = (0..g.n()).map(|u| g.adj_row(u)).collect();
    for u in 0..g.n() {
        match classes.iter_mut().find(|c| rows[c[0]] == rows[u]) {
            Some(c) => c.push(u),
            None => classes.push(vec![u]),
        }
    }
    classes
}
