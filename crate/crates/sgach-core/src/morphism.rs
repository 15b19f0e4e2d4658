//! Identifiability, vertex merging, quotients by colorings, and
//! verification of surjective sign-preserving homomorphisms.
//!
//! Two distinct vertices are identifiable when merging them keeps the graph
//! simple: they share no edge (no loop) and, in the 2-edge-colored setting,
//! no unbalanced P3 joins them (no digon). In the signed setting re-signing
//! is allowed first, so the obstruction weakens to sharing an edge or being
//! antipodal on an unbalanced C4.

use crate::graph::{Graph2EC, GraphError};
use crate::sign::Sign;
use crate::switching::{SignedClass, SwitchingSet};
use crate::walk::{common_neighbor_products, up3_between};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MergeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("merging {u} and {v} would create a loop (they are adjacent)")]
    WouldLoop { u: usize, v: usize },
    #[error("merging {u} and {v} would create a digon (unbalanced P3 through {w})")]
    WouldDigon { u: usize, v: usize, w: usize },
    #[error(
        "{u} and {v} are antipodal on an unbalanced C4; no re-signing makes them identifiable"
    )]
    Antipodal { u: usize, v: usize },
    #[error("merge step references vertex {0}, which was already absorbed")]
    DeadVertex(usize),
    #[error("2-edge-colored merge plans cannot carry switchings (step {0})")]
    UnexpectedSwitch(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {0} is not used: colors must form 1..=k")]
    MissingColor(usize),
    #[error("vertex {0} has color 0: colors are 1-based")]
    ZeroColor(usize),
}

/// A surjective vertex coloring with colors `1..=k`, optionally paired with
/// a switching set (signed colorings color a chosen representative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assign: Vec<usize>,
    k: usize,
    switching: Option<SwitchingSet>,
}

impl Coloring {
    pub fn new(
        assign: Vec<usize>,
        switching: Option<SwitchingSet>,
    ) -> Result<Coloring, ColoringError> {
        let k = assign.iter().copied().max().unwrap_or(0);
        if let Some(v) = assign.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(v));
        }
        let mut used = vec![false; k + 1];
        for &c in &assign {
            used[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c]) {
            return Err(ColoringError::MissingColor(c));
        }
        Ok(Coloring {
            assign,
            k,
            switching,
        })
    }

    /// The identity coloring: vertex `i` gets color `i + 1`.
    pub fn identity(n: usize) -> Coloring {
        Coloring {
            assign: (1..=n).collect(),
            k: n,
            switching: None,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.assign[v]
    }

    pub fn assignments(&self) -> &[usize] {
        &self.assign
    }

    pub fn switching(&self) -> Option<&SwitchingSet> {
        self.switching.as_ref()
    }

    pub fn with_switching(mut self, s: SwitchingSet) -> Coloring {
        self.switching = Some(s);
        self
    }

    /// Color classes; class `i` holds the vertices of color `i + 1`,
    /// ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.assign.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    /// The map induced on quotient vertex ids (color − 1).
    pub fn as_vertex_map(&self) -> Vec<usize> {
        self.assign.iter().map(|&c| c - 1).collect()
    }
}

/// Whether merging `u` and `v` keeps the 2-edge-colored graph simple:
/// no shared edge and no unbalanced P3 joining them.
pub fn identifiable_2ec(g: &Graph2EC, u: usize, v: usize) -> Result<bool, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    Ok(!g.has_edge(u, v) && up3_between(g, u, v)?.is_none())
}

/// Signed identifiability, constructively. If `u` and `v` share an edge or
/// are antipodal on an unbalanced C4, no re-signing helps: `None`.
/// Otherwise the products `sign(uw)·sign(wv)` over common neighbors `w` all
/// agree (mixed products are exactly the unbalanced-C4 case); if they are
/// all positive the empty set works, and if all negative, re-signing `{u}`
/// does. The contract is validity of the returned set, not minimality.
pub fn identifiable_signed(
    sc: &SignedClass,
    u: usize,
    v: usize,
) -> Result<Option<SwitchingSet>, GraphError> {
    let g = sc.representative();
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Ok(None);
    }
    let (same, diff) = common_neighbor_products(g, u, v);
    Ok(match (same.is_empty(), diff.is_empty()) {
        (false, false) => None,
        (_, true) => Some(SwitchingSet::empty(g.n())),
        (true, false) => Some(SwitchingSet::from_members(g.n(), [u])?),
    })
}

/// Suffix primes until each name differs from all earlier ones. Merged
/// names ("a+b") could otherwise collide with a pre-existing vertex name.
fn dedupe_names(names: &mut [String]) {
    for i in 0..names.len() {
        while names[..i].contains(&names[i]) {
            names[i].push('\'');
        }
    }
}

/// Merges `v` into `u` (the lower id survives; the kept vertex's name
/// records the absorbed name). Parallel same-sign edges collapse; a loop or
/// digon obstruction is an error.
pub fn merge_2ec(g: &Graph2EC, u: usize, v: usize) -> Result<Graph2EC, MergeError> {
    g.check_vertex(u).map_err(MergeError::Graph)?;
    g.check_vertex(v).map_err(MergeError::Graph)?;
    if u == v {
        return Err(MergeError::Graph(GraphError::SameVertex(u)));
    }
    if g.has_edge(u, v) {
        return Err(MergeError::WouldLoop {
            u: u.min(v),
            v: u.max(v),
        });
    }
    if let Some(w) = up3_between(g, u, v)
        .map_err(MergeError::Graph)?
        .map(|p| p.vertices[1])
    {
        return Err(MergeError::WouldDigon {
            u: u.min(v),
            v: u.max(v),
            w,
        });
    }
    let (keep, drop) = (u.min(v), u.max(v));
    let mut names: Vec<String> = Vec::with_capacity(g.n() - 1);
    for w in (0..g.n()).filter(|&w| w != drop) {
        if w == keep {
            names.push(format!("{}+{}", g.name(keep), g.name(drop)));
        } else {
            names.push(g.name(w).to_string());
        }
    }
    dedupe_names(&mut names);
    let mut out = Graph2EC::with_names(names).expect("names deduplicated");
    let remap = |w: usize| if w > drop { w - 1 } else { w };
    for (a, b, s) in g.edges() {
        let (a, b) = (
            remap(if a == drop { keep } else { a }),
            remap(if b == drop { keep } else { b }),
        );
        if out.sign(a, b) != Some(s) {
            out.add_edge(a, b, s)
                .expect("identifiability rules out loops and digons");
        }
    }
    Ok(out)
}

/// Signed merge: find a re-signing after which no unbalanced P3 joins the
/// pair, apply it, merge, and re-canonicalize.
pub fn merge_signed(sc: &SignedClass, u: usize, v: usize) -> Result<SignedClass, MergeError> {
    let g = sc.representative();
    match identifiable_signed(sc, u, v).map_err(MergeError::Graph)? {
        None => {
            if g.has_edge(u, v) {
                Err(MergeError::WouldLoop {
                    u: u.min(v),
                    v: u.max(v),
                })
            } else {
                Err(MergeError::Antipodal {
                    u: u.min(v),
                    v: u.max(v),
                })
            }
        }
        Some(s) => {
            let switched = g.apply_switching(&s).map_err(MergeError::Graph)?;
            Ok(SignedClass::from_graph(&merge_2ec(&switched, u, v)?))
        }
    }
}

/// One identification step. Ids refer to the original graph; `keep` and
/// `drop` must both still be live when the step runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeStep {
    pub keep: usize,
    pub drop: usize,
    /// Applied to the (live) graph before the identification; empty in the
    /// 2-edge-colored setting.
    pub pre_switch: SwitchingSet,
}

/// An ordered sequence of identifications realizing a surjective
/// homomorphism constructively.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MergePlan {
    pub steps: Vec<MergeStep>,
}

/// Result of applying a merge plan: the compacted image graph and the map
/// from original vertex ids to image ids.
#[derive(Debug, Clone)]
pub struct MergeOutcome {
    pub graph: Graph2EC,
    pub class_of: Vec<usize>,
}

impl MergeOutcome {
    pub fn coloring(&self) -> Coloring {
        Coloring::new(self.class_of.iter().map(|&c| c + 1).collect(), None)
            .expect("compacted classes are contiguous")
    }
}

fn apply_merge_plan(
    g: &Graph2EC,
    plan: &MergePlan,
    allow_switch: bool,
) -> Result<MergeOutcome, MergeError> {
    let n = g.n();
    let mut work = g.clone();
    let mut alive = vec![true; n];
    let mut absorbed_into = vec![usize::MAX; n];

    for (i, step) in plan.steps.iter().enumerate() {
        if !step.pre_switch.is_empty() {
            if !allow_switch {
                return Err(MergeError::UnexpectedSwitch(i));
            }
            work = work.apply_switching(&step.pre_switch)?;
        }
        let (keep, drop) = (step.keep, step.drop);
        work.check_vertex(keep).map_err(MergeError::Graph)?;
        work.check_vertex(drop).map_err(MergeError::Graph)?;
        if keep == drop {
            return Err(MergeError::Graph(GraphError::SameVertex(keep)));
        }
        if !alive[keep] {
            return Err(MergeError::DeadVertex(keep));
        }
        if !alive[drop] {
            return Err(MergeError::DeadVertex(drop));
        }
        if work.has_edge(keep, drop) {
            return Err(MergeError::WouldLoop {
                u: keep.min(drop),
                v: keep.max(drop),
            });
        }
        // re-attach drop's edges to keep, collapsing equal signs
        let neighbors: Vec<usize> = work.adj_row(drop).iter_ones().collect();
        for w in neighbors {
            let s = work.sign(drop, w).expect("neighbor");
            match work.sign(keep, w) {
                None => work.add_edge(keep, w, s).expect("live distinct vertices"),
                Some(s2) if s2 == s => {}
                Some(_) => {
                    return Err(MergeError::WouldDigon {
                        u: keep.min(drop),
                        v: keep.max(drop),
                        w,
                    })
                }
            }
            work.clear_edge(drop, w);
        }
        alive[drop] = false;
        absorbed_into[drop] = keep;
        let merged = format!("{}+{}", work.name(keep), work.name(drop));
        work.set_name(keep, merged);
    }

    // compact live slots, ascending
    let mut new_id = vec![usize::MAX; n];
    let mut names = Vec::new();
    for v in 0..n {
        if alive[v] {
            new_id[v] = names.len();
            names.push(work.name(v).to_string());
        }
    }
    dedupe_names(&mut names);
    let mut graph = Graph2EC::with_names(names).expect("names deduplicated");
    for (a, b, s) in work.edges() {
        graph
            .add_edge(new_id[a], new_id[b], s)
            .expect("live edges stay simple");
    }
    let class_of = (0..n)
        .map(|v| {
            let mut r = v;
            while absorbed_into[r] != usize::MAX {
                r = absorbed_into[r];
            }
            new_id[r]
        })
        .collect();
    Ok(MergeOutcome { graph, class_of })
}

/// Applies a plan whose steps carry no switchings.
pub fn apply_merge_plan_2ec(g: &Graph2EC, plan: &MergePlan) -> Result<MergeOutcome, MergeError> {
    apply_merge_plan(g, plan, false)
}

/// Applies a plan in the signed setting, honoring per-step switchings.
pub fn apply_merge_plan_signed(g: &Graph2EC, plan: &MergePlan) -> Result<MergeOutcome, MergeError> {
    apply_merge_plan(g, plan, true)
}

/// Why a coloring fails to be a valid coloring. The reported site is the
/// first offense when color pairs are scanned in `(min color, max color)`
/// order and edges in `(min id, max id)` order.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("coloring assigns {got} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, got: usize },
    #[error("monochromatic edge {u}-{v} inside color {color}")]
    MonochromaticEdge { color: usize, u: usize, v: usize },
    #[error("colors {ci} and {cj} are joined by edges of both signs: {}-{} ({}) vs {}-{} ({})", e1.0, e1.1, e1.2, e2.0, e2.1, e2.2)]
    SignConflict {
        ci: usize,
        cj: usize,
        e1: (usize, usize, Sign),
        e2: (usize, usize, Sign),
    },
}

impl Violation {
    /// Human-readable report naming vertices through `g`'s name table.
    pub fn describe(&self, g: &Graph2EC) -> String {
        let name = |v: usize| g.name(v).to_string();
        match self {
            Violation::VertexCountMismatch { .. } => self.to_string(),
            Violation::MonochromaticEdge { color, u, v } => format!(
                "monochromatic edge {}-{} inside color {color}",
                name(*u),
                name(*v)
            ),
            Violation::SignConflict { ci, cj, e1, e2 } => format!(
                "colors {ci} and {cj} are joined by edges of both signs: {}-{} ({}) vs {}-{} ({})",
                name(e1.0),
                name(e1.1),
                e1.2,
                name(e2.0),
                name(e2.1),
                e2.2
            ),
        }
    }
}

/// Quotient of `g` by a valid coloring: one vertex per color (named
/// `c1..ck`), one edge per class pair joined by edges, carrying their
/// common sign. Fails with a [`Violation`] when some class contains an edge
/// or some class pair sees both signs — exactly the conditions under which
/// identifying each class would not produce a simple 2-edge-colored graph.
pub fn quotient(g: &Graph2EC, col: &Coloring) -> Result<Graph2EC, Violation> {
    if col.assignments().len() != g.n() {
        return Err(Violation::VertexCountMismatch {
            expected: g.n(),
            got: col.assignments().len(),
        });
    }
    let k = col.k();
    // first edge seen per class pair, in (min id, max id) edge order
    let mut first: Vec<Option<(usize, usize, Sign)>> = vec![None; k * k];
    let mut offense: Option<(usize, usize, Violation)> = None;
    let mut record = |key: (usize, usize), v: Violation| {
        if offense.as_ref().is_none_or(|(a, b, _)| key < (*a, *b)) {
            offense = Some((key.0, key.1, v));
        }
    };
    for (u, v, s) in g.edges() {
        let (cu, cv) = (col.color(u), col.color(v));
        if cu == cv {
            record((cu, cv), Violation::MonochromaticEdge { color: cu, u, v });
            continue;
        }
        let (ci, cj) = (cu.min(cv), cu.max(cv));
        let slot = &mut first[(ci - 1) * k + (cj - 1)];
        match slot {
            None => *slot = Some((u, v, s)),
            Some(e1) if e1.2 != s => {
                let e1 = *e1;
                record(
                    (ci, cj),
                    Violation::SignConflict {
                        ci,
                        cj,
                        e1,
                        e2: (u, v, s),
                    },
                );
            }
            Some(_) => {}
        }
    }
    if let Some((_, _, v)) = offense {
        return Err(v);
    }
    let names = (1..=k).map(|c| format!("c{c}")).collect();
    let mut q = Graph2EC::with_names(names).expect("color names are unique");
    for ci in 1..=k {
        for cj in ci + 1..=k {
            if let Some((_, _, s)) = first[(ci - 1) * k + (cj - 1)] {
                q.add_edge(ci - 1, cj - 1, s).expect("distinct classes");
            }
        }
    }
    Ok(q)
}

/// Verifies that `phi` is a surjective, edge- and sign-preserving vertex
/// map from `g` to `h`. Totality is part of the check.
pub fn verify_hom_2ec(g: &Graph2EC, h: &Graph2EC, phi: &[usize]) -> bool {
    if phi.len() != g.n() || phi.iter().any(|&x| x >= h.n()) {
        return false;
    }
    let mut hit = vec![false; h.n()];
    for &x in phi {
        hit[x] = true;
    }
    if !hit.iter().all(|&b| b) {
        return false;
    }
    g.edges()
        .into_iter()
        .all(|(u, v, s)| phi[u] != phi[v] && h.sign(phi[u], phi[v]) == Some(s))
}

/// Signed version: re-signs the source representative by `s` first
/// (re-signing is done only on the source), then verifies against the
/// target's representative.
pub fn verify_hom_signed(
    sc_g: &SignedClass,
    sc_h: &SignedClass,
    phi: &[usize],
    s: &SwitchingSet,
) -> bool {
    match sc_g.representative().apply_switching(s) {
        Ok(switched) => verify_hom_2ec(&switched, sc_h.representative(), phi),
        Err(_) => false,
    }
}
