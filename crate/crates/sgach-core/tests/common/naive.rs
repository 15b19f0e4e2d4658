//! Deliberately naive reference implementations used to cross-check the
//! library. Everything here follows the definitions word for word and
//! favors directness over speed: partitions are materialized, re-signing
//! enumerates all vertex subsets, and clique tests are triple loops.

use rand::Rng;
use sgach_core::graph::Graph2EC;
use sgach_core::sign::Sign;

/// Every partition of `{0..n}` as a restricted-growth color vector.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, assign: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        if assign.len() == n {
            out.push(assign.clone());
            return;
        }
        for c in 0..=next {
            assign.push(c);
            rec(n, assign, next.max(c + 1), out);
            assign.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), 0, &mut out);
    out
}

pub fn num_classes(assign: &[usize]) -> usize {
    assign.iter().max().map_or(0, |m| m + 1)
}

/// Identify same-colored vertices. `None` when a loop (edge inside a class)
/// or a digon (two signs between two classes) would arise.
pub fn quotient(g: &Graph2EC, assign: &[usize]) -> Option<Graph2EC> {
    let k = num_classes(assign);
    let mut sign_of: Vec<Vec<Option<Sign>>> = vec![vec![None; k]; k];
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if let Some(s) = g.sign(u, v) {
                let (cu, cv) = (assign[u], assign[v]);
                if cu == cv {
                    return None;
                }
                match sign_of[cu][cv] {
                    None => {
                        sign_of[cu][cv] = Some(s);
                        sign_of[cv][cu] = Some(s);
                    }
                    Some(t) if t != s => return None,
                    _ => {}
                }
            }
        }
    }
    let mut q = Graph2EC::new(k);
    for (i, row) in sign_of.iter().enumerate() {
        for (j, cell) in row.iter().enumerate().skip(i + 1) {
            if let Some(s) = *cell {
                q.add_edge(i, j, s).unwrap();
            }
        }
    }
    Some(q)
}

pub fn valid(g: &Graph2EC, assign: &[usize]) -> bool {
    quotient(g, assign).is_some()
}

/// Two vertices are ends of an UP3 iff some middle vertex sees them with
/// different signs.
pub fn up3_ends(g: &Graph2EC, u: usize, v: usize) -> bool {
    (0..g.n()).any(|w| {
        w != u && w != v && matches!((g.sign(u, w), g.sign(w, v)), (Some(a), Some(b)) if a != b)
    })
}

/// The products `sign(uw) * sign(wv)` over all common neighbors `w`.
fn common_products(g: &Graph2EC, u: usize, v: usize) -> Vec<Sign> {
    (0..g.n())
        .filter(|&w| w != u && w != v)
        .filter_map(|w| match (g.sign(u, w), g.sign(w, v)) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        })
        .collect()
}

/// Antipodal in an unbalanced four-cycle: two common neighbors with
/// differing products.
pub fn uc4_antipodal(g: &Graph2EC, u: usize, v: usize) -> bool {
    let prods = common_products(g, u, v);
    prods.contains(&Sign::Positive) && prods.contains(&Sign::Negative)
}

pub fn is_2ec_clique(g: &Graph2EC) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) || up3_ends(g, u, v)))
}

pub fn is_signed_clique(g: &Graph2EC) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) || uc4_antipodal(g, u, v)))
}

pub fn identifiable_2ec(g: &Graph2EC, u: usize, v: usize) -> bool {
    !g.has_edge(u, v) && !up3_ends(g, u, v)
}

/// Identifiable after re-signing one of them if needed: not adjacent and
/// not UC4-antipodal (both facts are invariant under re-signing).
pub fn identifiable_signed(g: &Graph2EC, u: usize, v: usize) -> bool {
    !g.has_edge(u, v) && !uc4_antipodal(g, u, v)
}

/// Re-sign at every vertex of `members`, by the literal rule: an edge flips
/// iff exactly one endpoint is in the set.
pub fn switch(g: &Graph2EC, members: &[usize]) -> Graph2EC {
    let mut out = Graph2EC::new(g.n());
    for (u, v, s) in g.edges() {
        let flip = members.contains(&u) != members.contains(&v);
        out.add_edge(u, v, if flip { s.flip() } else { s }).unwrap();
    }
    out
}

/// All `2^n` re-signings of `g` (with repetitions across equivalent ones).
pub fn all_switchings(g: &Graph2EC) -> Vec<Graph2EC> {
    let n = g.n();
    (0..(1usize << n))
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            switch(g, &members)
        })
        .collect()
}

/// All `2^|E|` signatures on the underlying graph of `g`.
pub fn all_signatures(g: &Graph2EC) -> Vec<Graph2EC> {
    let edges = g.edges();
    (0..(1usize << edges.len()))
        .map(|mask| {
            let mut out = Graph2EC::new(g.n());
            for (j, &(u, v, _)) in edges.iter().enumerate() {
                let s = if mask >> j & 1 == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                out.add_edge(u, v, s).unwrap();
            }
            out
        })
        .collect()
}

pub fn psi2(g: &Graph2EC) -> usize {
    all_partitions(g.n())
        .iter()
        .filter_map(|a| quotient(g, a).filter(is_2ec_clique).map(|_| num_classes(a)))
        .max()
        .unwrap_or(0)
}

pub fn chi2(g: &Graph2EC) -> usize {
    all_partitions(g.n())
        .iter()
        .filter(|a| valid(g, a))
        .map(|a| num_classes(a))
        .min()
        .unwrap_or(0)
}

/// Largest order of a signed clique reached from ANY representative.
pub fn psis(g: &Graph2EC) -> usize {
    all_switchings(g)
        .iter()
        .map(|m| {
            all_partitions(m.n())
                .iter()
                .filter_map(|a| {
                    quotient(m, a)
                        .filter(is_signed_clique)
                        .map(|_| num_classes(a))
                })
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

pub fn chis(g: &Graph2EC) -> usize {
    all_switchings(g).iter().map(chi2).min().unwrap_or(0)
}

pub fn psi_max_class(g: &Graph2EC) -> usize {
    all_switchings(g).iter().map(psi2).max().unwrap_or(0)
}

pub fn psi_min_class(g: &Graph2EC) -> usize {
    all_switchings(g).iter().map(psi2).min().unwrap_or(0)
}

pub fn psi_max_graph(g: &Graph2EC) -> usize {
    all_signatures(g).iter().map(psi2).max().unwrap_or(0)
}

pub fn psi_min_graph(g: &Graph2EC) -> usize {
    all_signatures(g).iter().map(psi2).min().unwrap_or(0)
}

pub fn psi_max_signed(g: &Graph2EC) -> usize {
    all_signatures(g).iter().map(psis).max().unwrap_or(0)
}

pub fn psi_min_signed(g: &Graph2EC) -> usize {
    all_signatures(g).iter().map(psis).min().unwrap_or(0)
}

/// The ordinary achromatic number: signs ignored, a complete coloring just
/// needs every color pair on some edge.
pub fn psi_ordinary(g: &Graph2EC) -> usize {
    all_partitions(g.n())
        .iter()
        .filter(|a| {
            let k = num_classes(a);
            let mut joined = vec![vec![false; k]; k];
            for (u, v, _) in g.edges() {
                if a[u] == a[v] {
                    return false;
                }
                joined[a[u]][a[v]] = true;
                joined[a[v]][a[u]] = true;
            }
            (0..k).all(|i| (i + 1..k).all(|j| joined[i][j]))
        })
        .map(|a| num_classes(a))
        .max()
        .unwrap_or(0)
}

/// No four vertices inducing exactly five edges.
pub fn diamond_free(g: &Graph2EC) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(quad[i], quad[j]) {
                                edges += 1;
                            }
                        }
                    }
                    if edges == 5 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Twins by the letter of the definition: identical signed neighborhoods.
pub fn twins_2ec(g: &Graph2EC, u: usize, v: usize) -> bool {
    (0..g.n()).all(|w| {
        if w == u || w == v {
            return true;
        }
        g.sign(u, w) == g.sign(v, w)
    }) && g.sign(u, v).is_none()
}

/// Twins in some representative: as-is, or after re-signing at `u`.
pub fn twins_signed(g: &Graph2EC, u: usize, v: usize) -> bool {
    twins_2ec(g, u, v) || twins_2ec(&switch(g, &[u]), u, v)
}

/// An Erdos-Renyi style random 2-edge-colored graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> Graph2EC {
    let mut g = Graph2EC::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                let s = if rng.random_bool(0.5) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                g.add_edge(u, v, s).unwrap();
            }
        }
    }
    g
}
