//! Exact computation of the chromatic and achromatic-style parameters by
//! exhaustive search, plus verification of complete colorings.
//!
//! Partition search enumerates restricted-growth strings (the first vertex
//! of color i precedes the first vertex of color i+1), which kills
//! color-relabeling symmetry. Partial partitions are pruned on the first
//! monochromatic edge or the first sign conflict between two classes;
//! completeness is only decided on full partitions, since conflict counts
//! are not monotone under refinement.
//!
//! Searches over signatures or switchings enumerate an outer mask space
//! that may be split across threads; extrema are reduced on
//! `(value, mask)` with ties to the lowest mask, so results do not depend
//! on thread count or schedule. Within one mask the first-found record of
//! the sequential scan is the lexicographically smallest partition.

use crate::cliques::{is_2ec_clique, is_signed_clique};
use crate::graph::Graph2EC;
use crate::guard::{caps, GuardError, Limits};
use crate::morphism::{quotient, Coloring};
use crate::sign::Sign;
use crate::switching::{
    free_switch_vertices, mask_to_switching, switch_by_mask, SignedClass, SwitchingSet,
};
use rayon::prelude::*;

/// Which parameter a result reports. `token()` is the stable CLI spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Psi,
    Psi2,
    Psis,
    PsiMaxClass,
    PsiMinClass,
    PsiMaxGraph,
    PsiMinGraph,
    PsiMaxSignedGraph,
    PsiMinSignedGraph,
    Chi2,
    Chis,
}

impl Param {
    pub fn token(self) -> &'static str {
        match self {
            Param::Psi => "psi",
            Param::Psi2 => "psi2",
            Param::Psis => "psis",
            Param::PsiMaxClass => "psi-max-class",
            Param::PsiMinClass => "psi-min-class",
            Param::PsiMaxGraph => "psi-max",
            Param::PsiMinGraph => "psi-min",
            Param::PsiMaxSignedGraph => "psi-max-signed",
            Param::PsiMinSignedGraph => "psi-min-signed",
            Param::Chi2 => "chi2",
            Param::Chis => "chis",
        }
    }

    pub fn from_token(s: &str) -> Option<Param> {
        Some(match s {
            "psi" => Param::Psi,
            "psi2" => Param::Psi2,
            "psis" => Param::Psis,
            "psi-max-class" => Param::PsiMaxClass,
            "psi-min-class" => Param::PsiMinClass,
            "psi-max" => Param::PsiMaxGraph,
            "psi-min" => Param::PsiMinGraph,
            "psi-max-signed" => Param::PsiMaxSignedGraph,
            "psi-min-signed" => Param::PsiMinSignedGraph,
            "chi2" => Param::Chi2,
            "chis" => Param::Chis,
            _ => return None,
        })
    }

    /// What the witness quotient must satisfy.
    fn completeness(self) -> Completeness {
        match self {
            Param::Chi2 | Param::Chis => Completeness::ValidOnly,
            Param::Psi
            | Param::Psi2
            | Param::PsiMaxClass
            | Param::PsiMinClass
            | Param::PsiMaxGraph
            | Param::PsiMinGraph => Completeness::Clique2EC,
            Param::Psis | Param::PsiMaxSignedGraph | Param::PsiMinSignedGraph => {
                Completeness::CliqueSigned
            }
        }
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Completeness {
    ValidOnly,
    Clique2EC,
    CliqueSigned,
}

/// The concrete coloring certifying a parameter value.
///
/// `graph` is the 2-edge-colored graph the coloring colors directly: the
/// input itself for `psi2`/`chi2`, the all-positive underlying graph for
/// `psi`, and the found signature/representative for the class, signature
/// and signed parameters. For signed parameters `coloring` carries the
/// switching set leading from the canonical representative of `graph`'s
/// class to `graph`.
#[derive(Debug, Clone)]
pub struct Witness {
    pub graph: Graph2EC,
    pub coloring: Coloring,
    pub quotient: Graph2EC,
}

#[derive(Debug, Clone)]
pub struct ParamResult {
    pub param: Param,
    pub value: usize,
    pub witness: Witness,
}

impl ParamResult {
    /// Re-derives the value from the witness: the coloring must use exactly
    /// `value` colors, its quotient must match the certificate, and the
    /// certificate must pass the parameter's completeness test.
    pub fn verify(&self) -> bool {
        let w = &self.witness;
        if w.coloring.k() != self.value {
            return false;
        }
        match quotient(&w.graph, &w.coloring) {
            Ok(q) if q == w.quotient => match self.param.completeness() {
                Completeness::ValidOnly => true,
                Completeness::Clique2EC => {
                    is_2ec_clique(&q, &Limits::unbounded()).expect("unbounded")
                }
                Completeness::CliqueSigned => {
                    is_signed_clique(&SignedClass::from_graph(&q), &Limits::unbounded())
                        .expect("unbounded")
                }
            },
            _ => false,
        }
    }
}

/// True iff `col` is valid on `g` and its quotient is a 2-edge-colored
/// clique — i.e. every pair of colors is adjacent or UP3-joined in the
/// quotient.
pub fn verify_complete_2ec(g: &Graph2EC, col: &Coloring) -> bool {
    match quotient(g, col) {
        Ok(q) => is_2ec_clique(&q, &Limits::unbounded()).expect("unbounded"),
        Err(_) => false,
    }
}

/// Signed version: the coloring's switching set is applied to the
/// canonical representative first (no set means the empty set); the
/// quotient's switching class must be a signed clique.
pub fn verify_complete_signed(sc: &SignedClass, col: &Coloring) -> bool {
    let rep = sc.representative();
    let colored = match col.switching() {
        Some(s) => match rep.apply_switching(s) {
            Ok(g) => g,
            Err(_) => return false,
        },
        None => rep.clone(),
    };
    match quotient(&colored, col) {
        Ok(q) => {
            is_signed_clique(&SignedClass::from_graph(&q), &Limits::unbounded()).expect("unbounded")
        }
        Err(_) => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    TwoEC,
    Signed,
}

/// Restricted-growth partition search with an incremental class-pair sign
/// matrix. `pair[min(i,j)*n + max(i,j)]` holds the sign joining classes i
/// and j, if any; `undo` records entries set along the current branch.
struct Search<'a> {
    g: &'a Graph2EC,
    kind: Kind,
    n: usize,
    assign: Vec<usize>,
    pair: Vec<Option<Sign>>,
    undo: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph2EC, kind: Kind) -> Search<'a> {
        let n = g.n();
        Search {
            g,
            kind,
            n,
            assign: vec![0; n],
            pair: vec![None; n * n],
            undo: Vec::new(),
        }
    }

    fn pair_at(&self, a: usize, b: usize) -> Option<Sign> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.pair[i * self.n + j]
    }

    /// Tries to put `v` in class `c` against the already-assigned vertices
    /// (exactly those with smaller id). On conflict the matrix is rolled
    /// back and `false` returned.
    fn try_place(&mut self, v: usize, c: usize) -> bool {
        let cp = self.undo.len();
        let g = self.g;
        for (row, s) in [
            (g.pos_row(v), Sign::Positive),
            (g.neg_row(v), Sign::Negative),
        ] {
            for u in row.iter_ones() {
                if u >= v {
                    break;
                }
                let cu = self.assign[u];
                if cu == c {
                    self.rollback(cp);
                    return false;
                }
                let (i, j) = if cu < c { (cu, c) } else { (c, cu) };
                let idx = i * self.n + j;
                match self.pair[idx] {
                    None => {
                        self.pair[idx] = Some(s);
                        self.undo.push(idx);
                    }
                    Some(t) if t == s => {}
                    Some(_) => {
                        self.rollback(cp);
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rollback(&mut self, cp: usize) {
        for idx in self.undo.drain(cp..) {
            self.pair[idx] = None;
        }
    }

    /// Completeness of a full partition into `k` classes, read off the
    /// pair matrix: every non-adjacent class pair must be UP3-joined
    /// (2-edge-colored) or see common-neighbor products of both signs
    /// (signed).
    fn leaf_complete(&self, k: usize) -> bool {
        for i in 0..k {
            for j in i + 1..k {
                if self.pair_at(i, j).is_some() {
                    continue;
                }
                let (mut same, mut diff) = (false, false);
                for l in 0..k {
                    if l == i || l == j {
                        continue;
                    }
                    if let (Some(a), Some(b)) = (self.pair_at(i, l), self.pair_at(l, j)) {
                        if a == b {
                            same = true;
                        } else {
                            diff = true;
                        }
                    }
                }
                let ok = match self.kind {
                    Kind::TwoEC => diff,
                    Kind::Signed => same && diff,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn run_max(&mut self, v: usize, k: usize, best: &mut Option<(usize, Vec<usize>)>) {
        if v == self.n {
            let improved = best.as_ref().is_none_or(|(b, _)| k > *b);
            if improved && self.leaf_complete(k) {
                *best = Some((k, self.assign.clone()));
            }
            return;
        }
        // remaining vertices can open at most one class each
        if let Some((b, _)) = best {
            if k + (self.n - v) <= *b {
                return;
            }
        }
        for c in 0..=k {
            let cp = self.undo.len();
            if self.try_place(v, c) {
                self.assign[v] = c;
                self.run_max(v + 1, k + usize::from(c == k), best);
                self.rollback(cp);
            }
        }
    }

    fn run_min(&mut self, v: usize, k: usize, best: &mut Option<(usize, Vec<usize>)>) {
        if let Some((b, _)) = best {
            if k >= *b {
                return;
            }
        }
        if v == self.n {
            *best = Some((k, self.assign.clone()));
            return;
        }
        for c in 0..=k {
            let cp = self.undo.len();
            if self.try_place(v, c) {
                self.assign[v] = c;
                self.run_min(v + 1, k + usize::from(c == k), best);
                self.rollback(cp);
            }
        }
    }
}

/// Largest k with a complete valid k-partition; the assignment is the
/// lexicographically smallest achiever (0-based colors). `None` only in
/// the signed kind: a fixed representative may admit no partition with a
/// signed-clique quotient at all (the maximum is over representatives).
fn max_complete(g: &Graph2EC, kind: Kind) -> Option<(usize, Vec<usize>)> {
    let mut best = None;
    Search::new(g, kind).run_max(0, 0, &mut best);
    best
}

/// Smallest k with a valid k-partition (always exists: the discrete
/// partition is valid).
fn min_valid(g: &Graph2EC) -> (usize, Vec<usize>) {
    let mut best = None;
    Search::new(g, Kind::TwoEC).run_min(0, 0, &mut best);
    best.expect("the discrete partition is valid")
}

/// Parallel extremum over masks `0..2^bits` with deterministic
/// tie-breaking: among equal values the smallest mask wins, regardless of
/// how the range is split across threads.
fn best_over_masks<F>(bits: usize, eval: F, maximize: bool) -> (usize, usize)
where
    F: Fn(usize) -> usize + Sync,
{
    let identity = if maximize {
        (0usize, usize::MAX)
    } else {
        (usize::MAX, usize::MAX)
    };
    (0..1usize << bits)
        .into_par_iter()
        .map(|m| (eval(m), m))
        .reduce(
            || identity,
            |a, b| {
                let a_wins = match a.0.cmp(&b.0) {
                    std::cmp::Ordering::Equal => a.1 < b.1,
                    ord => (ord == std::cmp::Ordering::Greater) == maximize,
                };
                if a_wins {
                    a
                } else {
                    b
                }
            },
        )
}

/// Masks are machine words; refuse enumerations that cannot fit one even
/// when the user lifted the guards.
fn check_enumerable(quantity: &'static str, count: usize) -> Result<(), GuardError> {
    if count >= usize::BITS as usize - 1 {
        return Err(GuardError {
            quantity,
            measured: count,
            limit: usize::BITS as usize - 2,
        });
    }
    Ok(())
}

fn free_vertices(g: &Graph2EC) -> Result<Vec<usize>, GuardError> {
    check_enumerable("switchable vertices", g.n())?;
    Ok(free_switch_vertices(g).expect("count checked"))
}

fn build_result(
    param: Param,
    graph: Graph2EC,
    assign: Vec<usize>,
    switching: Option<SwitchingSet>,
) -> ParamResult {
    let colors = assign.iter().map(|&c| c + 1).collect();
    let coloring = Coloring::new(colors, switching).expect("growth strings are contiguous");
    let q = quotient(&graph, &coloring).expect("search validated the partition");
    ParamResult {
        param,
        value: coloring.k(),
        witness: Witness {
            graph,
            coloring,
            quotient: q,
        },
    }
}

/// ψ₂: the largest order of a 2-edge-colored clique the graph maps onto.
pub fn psi2(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    limits.check("vertices", g.n(), caps::PARTITION)?;
    let (_, assign) =
        max_complete(g, Kind::TwoEC).expect("merging identifiable pairs always ends in a clique");
    Ok(build_result(Param::Psi2, g.clone(), assign, None))
}

/// The ordinary achromatic number: ψ₂ of the all-positive signature on the
/// underlying graph (signs of the input are ignored).
pub fn psi_ordinary(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    limits.check("vertices", g.n(), caps::PARTITION)?;
    let base = g.underlying_all_positive();
    let (_, assign) = max_complete(&base, Kind::TwoEC).expect("clique merge argument");
    Ok(build_result(Param::Psi, base, assign, None))
}

/// χ₂: the least k admitting a valid k-coloring.
pub fn chi2(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    limits.check("vertices", g.n(), caps::PARTITION)?;
    let (_, assign) = min_valid(g);
    Ok(build_result(Param::Chi2, g.clone(), assign, None))
}

/// ψ_s: the largest order of a signed clique the class maps onto —
/// maximum over class members (one canonical switching each) of the best
/// partition with a signed-clique quotient.
pub fn psis(sc: &SignedClass, limits: &Limits) -> Result<ParamResult, GuardError> {
    let rep = sc.representative();
    limits.check("vertices", rep.n(), caps::SWITCHING)?;
    let free = free_vertices(rep)?;
    let (_, mask) = best_over_masks(
        free.len(),
        |m| max_complete(&switch_by_mask(rep, &free, m), Kind::Signed).map_or(0, |(k, _)| k),
        true,
    );
    let member = switch_by_mask(rep, &free, mask);
    let (_, assign) =
        max_complete(&member, Kind::Signed).expect("the winning member achieved a nonzero value");
    let s = mask_to_switching(rep, &free, mask);
    Ok(build_result(Param::Psis, member, assign, Some(s)))
}

/// χ_s: the least χ₂ over class members.
pub fn chis(sc: &SignedClass, limits: &Limits) -> Result<ParamResult, GuardError> {
    let rep = sc.representative();
    limits.check("vertices", rep.n(), caps::SWITCHING)?;
    let free = free_vertices(rep)?;
    let (_, mask) = best_over_masks(
        free.len(),
        |m| min_valid(&switch_by_mask(rep, &free, m)).0,
        false,
    );
    let member = switch_by_mask(rep, &free, mask);
    let (_, assign) = min_valid(&member);
    let s = mask_to_switching(rep, &free, mask);
    Ok(build_result(Param::Chis, member, assign, Some(s)))
}

fn psi_class_extremum(
    sc: &SignedClass,
    limits: &Limits,
    param: Param,
    maximize: bool,
) -> Result<ParamResult, GuardError> {
    let rep = sc.representative();
    limits.check("vertices", rep.n(), caps::SWITCHING)?;
    let free = free_vertices(rep)?;
    let (_, mask) = best_over_masks(
        free.len(),
        |m| {
            max_complete(&switch_by_mask(rep, &free, m), Kind::TwoEC)
                .expect("2ec clique merge argument")
                .0
        },
        maximize,
    );
    let member = switch_by_mask(rep, &free, mask);
    let (_, assign) = max_complete(&member, Kind::TwoEC).expect("2ec clique merge argument");
    Ok(build_result(param, member, assign, None))
}

/// ψ_max on the class: the largest ψ₂ over the members of the switching
/// class; the witness records the achieving signature.
pub fn psi_max_class(sc: &SignedClass, limits: &Limits) -> Result<ParamResult, GuardError> {
    psi_class_extremum(sc, limits, Param::PsiMaxClass, true)
}

/// ψ_min on the class: the smallest ψ₂ over the members.
pub fn psi_min_class(sc: &SignedClass, limits: &Limits) -> Result<ParamResult, GuardError> {
    psi_class_extremum(sc, limits, Param::PsiMinClass, false)
}

/// Builds the signature selected by `mask` over the listed edges (bit j
/// set = edge j negative) on g's underlying graph.
fn signature_member(g: &Graph2EC, edges: &[(usize, usize, Sign)], mask: usize) -> Graph2EC {
    let mut h = Graph2EC::with_names(g.names().to_vec()).expect("names copied");
    for (j, &(u, v, _)) in edges.iter().enumerate() {
        let s = if mask >> j & 1 == 1 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        h.add_edge(u, v, s).expect("copy of a simple graph");
    }
    h
}

fn psi_graph_extremum(
    g: &Graph2EC,
    limits: &Limits,
    param: Param,
    maximize: bool,
) -> Result<ParamResult, GuardError> {
    limits.check("edges", g.edge_count(), caps::SIGNATURES)?;
    limits.check("vertices", g.n(), caps::PARTITION)?;
    check_enumerable("edge signatures", g.edge_count())?;
    let edges = g.edges();
    let (_, mask) = best_over_masks(
        edges.len(),
        |m| {
            max_complete(&signature_member(g, &edges, m), Kind::TwoEC)
                .expect("2ec clique merge argument")
                .0
        },
        maximize,
    );
    let member = signature_member(g, &edges, mask);
    let (_, assign) = max_complete(&member, Kind::TwoEC).expect("2ec clique merge argument");
    Ok(build_result(param, member, assign, None))
}

/// ψ_max of the underlying graph: the largest ψ₂ over all 2^|E|
/// signatures (input signs are ignored).
pub fn psi_max_graph(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    psi_graph_extremum(g, limits, Param::PsiMaxGraph, true)
}

/// ψ_min of the underlying graph: the smallest ψ₂ over all signatures.
pub fn psi_min_graph(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    psi_graph_extremum(g, limits, Param::PsiMinGraph, false)
}

/// Indices (into the sorted edge list) of edges outside the lowest-id BFS
/// forest; assigning signs freely to exactly these, with the forest
/// positive, picks one canonical signature per switching class.
fn non_tree_edge_indices(g: &Graph2EC, edges: &[(usize, usize, Sign)]) -> Vec<usize> {
    let n = g.n();
    let mut in_tree = vec![false; n];
    let mut tree_edges = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if in_tree[root] {
            continue;
        }
        in_tree[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for v in g.adj_row(u).iter_ones() {
                if !in_tree[v] {
                    in_tree[v] = true;
                    tree_edges.insert((u.min(v), u.max(v)));
                    queue.push_back(v);
                }
            }
        }
    }
    edges
        .iter()
        .enumerate()
        .filter(|(_, &(u, v, _))| !tree_edges.contains(&(u, v)))
        .map(|(j, _)| j)
        .collect()
}

/// ψ_s of one fixed signature: sequential maximum over its switchings.
/// Returns the best (value, switch mask); a value of 0 with n ≥ 1 cannot
/// win the outer reduction, so callers may treat the winner as achieved.
fn psis_value(member: &Graph2EC, free: &[usize]) -> (usize, usize) {
    let mut best = (0usize, 0usize);
    for m in 0..1usize << free.len() {
        let v = max_complete(&switch_by_mask(member, free, m), Kind::Signed).map_or(0, |(k, _)| k);
        if v > best.0 {
            best = (v, m);
        }
    }
    best
}

fn psi_signed_extremum(
    g: &Graph2EC,
    limits: &Limits,
    param: Param,
    maximize: bool,
) -> Result<ParamResult, GuardError> {
    limits.check("edges", g.edge_count(), caps::SIGNED_SIGNATURES)?;
    limits.check("vertices", g.n(), caps::SWITCHING)?;
    let free = free_vertices(g)?;
    let edges = g.edges();
    let non_tree = non_tree_edge_indices(g, &edges);
    check_enumerable("signature classes", non_tree.len())?;
    // outer mask chooses signs for non-tree edges only (forest positive)
    let class_member = |mask: usize| {
        let mut sig = 0usize;
        for (bit, &j) in non_tree.iter().enumerate() {
            sig |= (mask >> bit & 1) << j;
        }
        signature_member(g, &edges, sig)
    };
    let (_, outer) = best_over_masks(
        non_tree.len(),
        |m| psis_value(&class_member(m), &free).0,
        maximize,
    );
    let sig = class_member(outer);
    let (_, inner) = psis_value(&sig, &free);
    let member = switch_by_mask(&sig, &free, inner);
    let (_, assign) =
        max_complete(&member, Kind::Signed).expect("the winning member achieved its value");
    let s = mask_to_switching(&sig, &free, inner);
    Ok(build_result(param, member, assign, Some(s)))
}

/// ψ_max^signed: the largest ψ_s over the switching classes of signatures
/// on the underlying graph (one canonical signature per class).
pub fn psi_max_signed_graph(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    psi_signed_extremum(g, limits, Param::PsiMaxSignedGraph, true)
}

/// ψ_min^signed: the smallest ψ_s over the signature classes.
pub fn psi_min_signed_graph(g: &Graph2EC, limits: &Limits) -> Result<ParamResult, GuardError> {
    psi_signed_extremum(g, limits, Param::PsiMinSignedGraph, false)
}
