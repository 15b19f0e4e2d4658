//! 2-edge-colored and signed cliques, and the positive-apex construction
//! linking them.
//!
//! A 2-edge-colored clique has no identifiable pair: every two vertices are
//! adjacent or joined by an unbalanced P3. A signed clique additionally may
//! not become mergeable under re-signing: every non-adjacent pair must be
//! antipodal on an unbalanced C4. Both pair tests reduce to neighborhood
//! bitset intersections, and both are invariant under switching.

use crate::graph::Graph2EC;
use crate::guard::{caps, GuardError, Limits};
use crate::switching::SignedClass;
use rayon::prelude::*;

fn up3_joined(g: &Graph2EC, u: usize, v: usize) -> bool {
    g.pos_row(u).intersects(g.neg_row(v)) || g.neg_row(u).intersects(g.pos_row(v))
}

/// True iff every vertex pair is adjacent or joined by an unbalanced P3 —
/// equivalently, no pair is identifiable without re-signing.
pub fn is_2ec_clique(g: &Graph2EC, limits: &Limits) -> Result<bool, GuardError> {
    limits.check("vertices", g.n(), caps::CLIQUE)?;
    Ok((0..g.n())
        .into_par_iter()
        .all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) || up3_joined(g, u, v))))
}

/// True iff every non-adjacent pair of the representative is antipodal on
/// an unbalanced C4: among common neighbors `w`, the products
/// `sign(uw)·sign(wv)` take both values. The test is switching-invariant.
pub fn is_signed_clique(sc: &SignedClass, limits: &Limits) -> Result<bool, GuardError> {
    let g = sc.representative();
    limits.check("vertices", g.n(), caps::CLIQUE)?;
    Ok((0..g.n()).into_par_iter().all(|u| {
        (u + 1..g.n()).all(|v| {
            if g.has_edge(u, v) {
                return true;
            }
            let same =
                g.pos_row(u).intersects(g.pos_row(v)) || g.neg_row(u).intersects(g.neg_row(v));
            same && up3_joined(g, u, v)
        })
    }))
}

/// Adds a universal positive neighbor (named `z`, or `z0`, `z1`, … if
/// taken) and returns the resulting switching class. The graph is a
/// 2-edge-colored clique exactly when the extension is a signed clique.
pub fn apex_extend(g: &Graph2EC) -> SignedClass {
    let mut names: Vec<String> = g.names().to_vec();
    let mut apex = "z".to_string();
    let mut i = 0usize;
    while names.contains(&apex) {
        apex = format!("z{i}");
        i += 1;
    }
    names.push(apex);
    let z = g.n();
    let mut h = Graph2EC::with_names(names).expect("apex name chosen fresh");
    for (u, v, s) in g.edges() {
        h.add_edge(u, v, s).expect("copy of a simple graph");
    }
    for u in 0..g.n() {
        h.add_edge(u, z, crate::sign::Sign::Positive)
            .expect("apex edges are new");
    }
    SignedClass::from_graph(&h)
}
