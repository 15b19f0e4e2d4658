//! Constructors and verifiers for the hardness gadgets: the 3-partition
//! gadget `H(I)` (and its apexed variant `H'(I)`) together with the witness
//! coloring that turns a 3-partition solution into a complete coloring, plus
//! the apex construction relating the ordinary and signed achromatic numbers.
//!
//! Scale note: the gadget's default parameters are enormous even for tiny
//! instances, so the builders accept explicit overrides (validated `p >= 2`,
//! `r + q >= 1`). The witness-clique property holds for every valid parameter
//! choice; only the converse counting argument needs full-size parameters.

use rayon::prelude::*;
use thiserror::Error;

use crate::format::{directive_lines, parse_int, ParseError};
use crate::graph::Graph2EC;
use crate::guard::{caps, GuardError, Limits};
use crate::morphism::{apply_merge_plan_2ec, Coloring, MergeError, MergePlan, MergeStep};
use crate::sign::Sign::{Negative, Positive};
use crate::switching::SignedClass;
use crate::SwitchingSet;

/// Why a 3-partition instance is malformed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("the number of groups m must be positive")]
    ZeroGroups,
    #[error("expected 3m = {expected} values, found {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("value #{index} = {value} violates B/4 < a < B/2 for B = {b}")]
    OutOfRange {
        index: usize,
        value: usize,
        b: usize,
    },
    #[error("values sum to {sum}, expected m*B = {expected}")]
    WrongSum { sum: usize, expected: usize },
}

/// A 3-partition instance: `3m` values that should split into `m` triples,
/// each summing to `B`. The size window `B/4 < a < B/2` forces every part of
/// a valid partition to be an exact triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    m: usize,
    b: usize,
    values: Vec<usize>,
}

impl ThreePartitionInstance {
    pub fn new(m: usize, b: usize, values: Vec<usize>) -> Result<Self, InstanceError> {
        if m == 0 {
            return Err(InstanceError::ZeroGroups);
        }
        if values.len() != 3 * m {
            return Err(InstanceError::WrongCount {
                expected: 3 * m,
                got: values.len(),
            });
        }
        for (i, &a) in values.iter().enumerate() {
            let (a128, b128) = (a as u128, b as u128);
            if 4 * a128 <= b128 || 2 * a128 >= b128 {
                return Err(InstanceError::OutOfRange {
                    index: i + 1,
                    value: a,
                    b,
                });
            }
        }
        let sum: u128 = values.iter().map(|&a| a as u128).sum();
        if sum != (m as u128) * (b as u128) {
            return Err(InstanceError::WrongSum {
                sum: sum as usize,
                expected: m * b,
            });
        }
        Ok(ThreePartitionInstance { m, b, values })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Scale the instance by `m + 1` when any value is `<= m`, so that every
/// value exceeds `m`. Scaling both the values and `B` preserves exactly which
/// index triples are solutions.
pub fn normalize_instance(inst: &ThreePartitionInstance) -> ThreePartitionInstance {
    let m = inst.m();
    if inst.values().iter().all(|&a| a > m) {
        return inst.clone();
    }
    let f = m + 1;
    let scaled = inst
        .values()
        .iter()
        .map(|&a| a.checked_mul(f).expect("instance scaling overflow"))
        .collect();
    let b = inst.b().checked_mul(f).expect("instance scaling overflow");
    ThreePartitionInstance::new(m, b, scaled).expect("scaling preserves the invariants")
}

/// Gadget dimensions. The defaults make the grid astronomically large;
/// overrides are accepted as long as `p >= 2` and `r + q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionParams {
    pub q: usize,
    pub r: usize,
    pub p: usize,
    pub connected: bool,
}

impl ReductionParams {
    pub fn validate(&self) -> Result<(), ReductionError> {
        if self.p >= 2 && self.r.saturating_add(self.q) >= 1 {
            Ok(())
        } else {
            Err(ReductionError::BadParams {
                q: self.q,
                r: self.r,
                p: self.p,
            })
        }
    }
}

/// The published parameter choice: `q = 6m + 2Bm`, `r = C(m,2) + qm + 1`,
/// `p = 2 C(m,2) + 2m(B+r+q) + q + 1`, computed in that dependency order.
/// The connected variant first increases `q` by one and later `r` by `3m`.
pub fn default_params(inst: &ThreePartitionInstance, connected: bool) -> ReductionParams {
    let (m, b) = (inst.m(), inst.b());
    let c2 = m * (m - 1) / 2;
    let mut q = (6usize)
        .saturating_mul(m)
        .saturating_add(2usize.saturating_mul(b).saturating_mul(m));
    if connected {
        q = q.saturating_add(1);
    }
    let mut r = c2.saturating_add(q.saturating_mul(m)).saturating_add(1);
    if connected {
        r = r.saturating_add(3 * m);
    }
    let p = (2 * c2)
        .saturating_add(
            2usize
                .saturating_mul(m)
                .saturating_mul(b.saturating_add(r).saturating_add(q)),
        )
        .saturating_add(q)
        .saturating_add(1);
    ReductionParams { q, r, p, connected }
}

/// The target order `k(I) = m + p(B + r + q)` of the witness coloring.
pub fn k_of(inst: &ThreePartitionInstance, params: &ReductionParams) -> usize {
    let rows = inst.b().saturating_add(params.r).saturating_add(params.q);
    inst.m().saturating_add(params.p.saturating_mul(rows))
}

/// `k'(I) = k(I) + 1`, the target for the apexed gadget.
pub fn k_prime_of(inst: &ThreePartitionInstance, params: &ReductionParams) -> usize {
    k_of(inst, params).saturating_add(1)
}

/// A candidate solution: `m` triples of 1-based indices into the value list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSolution {
    pub triples: Vec<[usize; 3]>,
}

impl PartitionSolution {
    /// Check that the triples partition `{1..3m}` and each sums to `B`.
    pub fn validate(&self, inst: &ThreePartitionInstance) -> Result<(), ReductionError> {
        let m = inst.m();
        if self.triples.len() != m {
            return Err(ReductionError::SolutionShape {
                expected: m,
                got: self.triples.len(),
            });
        }
        let mut seen = vec![false; 3 * m];
        for triple in &self.triples {
            for &idx in triple {
                if idx == 0 || idx > 3 * m || seen[idx - 1] {
                    return Err(ReductionError::SolutionIndex(idx));
                }
                seen[idx - 1] = true;
            }
        }
        for (i, triple) in self.triples.iter().enumerate() {
            let sum: usize = triple.iter().map(|&idx| inst.values()[idx - 1]).sum();
            if sum != inst.b() {
                return Err(ReductionError::SolutionSum {
                    index: i + 1,
                    sum,
                    b: inst.b(),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Merge(#[from] MergeError),
    #[error("parameters must satisfy p >= 2 and r + q >= 1 (got q={q}, r={r}, p={p})")]
    BadParams { q: usize, r: usize, p: usize },
    #[error("solution must have {expected} triples, found {got}")]
    SolutionShape { expected: usize, got: usize },
    #[error("solution index {0} is out of range or repeated")]
    SolutionIndex(usize),
    #[error("triple #{index} sums to {sum}, expected B = {b}")]
    SolutionSum { index: usize, sum: usize, b: usize },
}

/// Vertex ids inside the gadget, in the fixed layout order: the stars
/// (center then its leaves, star by star), then the target clique, then the
/// grid in row-major order.
struct Layout {
    p: usize,
    centers: Vec<usize>,
    t_base: usize,
    grid_base: usize,
}

impl Layout {
    fn new(inst: &ThreePartitionInstance, params: &ReductionParams) -> Layout {
        let mut centers = Vec::with_capacity(3 * inst.m());
        let mut next = 0usize;
        for &a in inst.values() {
            centers.push(next);
            next += 1 + a;
        }
        let t_base = next;
        Layout {
            p: params.p,
            centers,
            t_base,
            grid_base: t_base + inst.m(),
        }
    }

    /// All indices below are 1-based, matching the vertex names.
    fn center(&self, i: usize) -> usize {
        self.centers[i - 1]
    }

    fn leaf(&self, i: usize, j: usize) -> usize {
        self.centers[i - 1] + j
    }

    fn t(&self, l: usize) -> usize {
        self.t_base + l - 1
    }

    fn x(&self, i: usize, j: usize) -> usize {
        self.grid_base + (i - 1) * self.p + (j - 1)
    }
}

fn gadget_vertices(inst: &ThreePartitionInstance, params: &ReductionParams) -> usize {
    let (m, b) = (inst.m(), inst.b());
    let rows = b.saturating_add(params.r).saturating_add(params.q);
    (3 * m)
        .saturating_add(m.saturating_mul(b))
        .saturating_add(m)
        .saturating_add(params.p.saturating_mul(rows))
}

/// Build the gadget `H(I)`:
/// - a star per value: center `s<i>` with positive pendant edges to leaves
///   `e<i>_1 .. e<i>_{a_i}`;
/// - the target: a negative clique `t1 .. t<m>`;
/// - a `(B+r+q) x p` grid `x<i>_<j>` in which every row (fixed first index)
///   is a negative clique and every column (fixed second index) a positive
///   clique;
/// - positive edges `t<l> x<i>_1` for the rows `B+1 <= i <= B+r+q`;
/// - in the connected variant, positive edges from `x<B+r+q>_1` to every
///   star center.
pub fn build_h(
    inst: &ThreePartitionInstance,
    params: &ReductionParams,
    limits: &Limits,
) -> Result<Graph2EC, ReductionError> {
    params.validate()?;
    let nv = gadget_vertices(inst, params);
    limits.check("vertices", nv, caps::BUILD)?;

    let (m, b) = (inst.m(), inst.b());
    let rows = b + params.r + params.q;
    let p = params.p;
    let lay = Layout::new(inst, params);

    let mut names = Vec::with_capacity(nv);
    for (i, &a) in inst.values().iter().enumerate() {
        names.push(format!("s{}", i + 1));
        for j in 1..=a {
            names.push(format!("e{}_{}", i + 1, j));
        }
    }
    for l in 1..=m {
        names.push(format!("t{l}"));
    }
    for i in 1..=rows {
        for j in 1..=p {
            names.push(format!("x{i}_{j}"));
        }
    }
    debug_assert_eq!(names.len(), nv);
    let mut g = Graph2EC::with_names(names).expect("gadget names are distinct");

    for (i, &a) in inst.values().iter().enumerate() {
        for j in 1..=a {
            g.add_edge(lay.center(i + 1), lay.leaf(i + 1, j), Positive)
                .expect("star edges are simple");
        }
    }
    for l in 1..=m {
        for l2 in l + 1..=m {
            g.add_edge(lay.t(l), lay.t(l2), Negative)
                .expect("target edges are simple");
        }
    }
    for i in 1..=rows {
        for j in 1..=p {
            for j2 in j + 1..=p {
                g.add_edge(lay.x(i, j), lay.x(i, j2), Negative)
                    .expect("row edges are simple");
            }
        }
    }
    for j in 1..=p {
        for i in 1..=rows {
            for i2 in i + 1..=rows {
                g.add_edge(lay.x(i, j), lay.x(i2, j), Positive)
                    .expect("column edges are simple");
            }
        }
    }
    for l in 1..=m {
        for i in b + 1..=rows {
            g.add_edge(lay.t(l), lay.x(i, 1), Positive)
                .expect("attachment edges are simple");
        }
    }
    if params.connected {
        for i in 1..=3 * m {
            g.add_edge(lay.x(rows, 1), lay.center(i), Positive)
                .expect("connector edges are simple");
        }
    }
    Ok(g)
}

/// The apexed gadget `H'(I)`: the underlying graph of `H(I)`, all edges
/// positive, plus a universal vertex `z`.
pub fn build_h_prime(
    inst: &ThreePartitionInstance,
    params: &ReductionParams,
    limits: &Limits,
) -> Result<Graph2EC, ReductionError> {
    let h = build_h(inst, params, limits)?;
    let n = h.n();
    limits.check("vertices", n.saturating_add(1), caps::BUILD)?;
    let mut names = h.names().to_vec();
    names.push("z".to_string());
    let mut g = Graph2EC::with_names(names).expect("the gadget never names a vertex z");
    for (u, v, _) in h.edges() {
        g.add_edge(u, v, Positive).expect("copied edges are simple");
    }
    for v in 0..n {
        g.add_edge(v, n, Positive).expect("apex edges are simple");
    }
    Ok(g)
}

/// Turn a 3-partition solution into the canonical complete coloring of
/// `H(I)` on `k_of` colors, returned both as the merge plan that realizes it
/// and as the induced coloring.
///
/// The plan identifies each star center `s<j>` (for `j` in the `l`-th triple)
/// with `t<l>`, then, per `t<l>`, sends the `B` leaves it absorbed — taken in
/// ascending (star, leaf) order — bijectively onto `x1_1 .. x<B>_1`.
pub fn witness_coloring(
    inst: &ThreePartitionInstance,
    params: &ReductionParams,
    sol: &PartitionSolution,
    limits: &Limits,
) -> Result<(MergePlan, Coloring), ReductionError> {
    sol.validate(inst)?;
    let h = build_h(inst, params, limits)?;
    let lay = Layout::new(inst, params);
    let n = h.n();

    let mut steps = Vec::new();
    let mut sorted_triples: Vec<[usize; 3]> = sol.triples.clone();
    for triple in &mut sorted_triples {
        triple.sort_unstable();
    }
    for (l0, triple) in sorted_triples.iter().enumerate() {
        for &j in triple {
            steps.push(MergeStep {
                keep: lay.t(l0 + 1),
                drop: lay.center(j),
                pre_switch: SwitchingSet::empty(n),
            });
        }
    }
    for triple in &sorted_triples {
        let mut col1_row = 0usize;
        for &j in triple {
            for leaf in 1..=inst.values()[j - 1] {
                col1_row += 1;
                steps.push(MergeStep {
                    keep: lay.x(col1_row, 1),
                    drop: lay.leaf(j, leaf),
                    pre_switch: SwitchingSet::empty(n),
                });
            }
        }
        debug_assert_eq!(col1_row, inst.b());
    }

    let plan = MergePlan { steps };
    let outcome = apply_merge_plan_2ec(&h, &plan)?;
    let coloring = outcome.coloring();
    debug_assert_eq!(coloring.k(), k_of(inst, params));
    Ok((plan, coloring))
}

/// Exhaustively look for a 3-partition solution. Guarded to tiny `m`: the
/// search is factorial and exists to certify test instances, not to solve
/// the problem.
pub fn brute_force_3partition(
    inst: &ThreePartitionInstance,
    limits: &Limits,
) -> Result<Option<PartitionSolution>, GuardError> {
    limits.check("groups", inst.m(), caps::THREE_PARTITION)?;

    fn search(
        values: &[usize],
        b: usize,
        used: &mut [bool],
        triples: &mut Vec<[usize; 3]>,
    ) -> bool {
        let Some(anchor) = used.iter().position(|&u| !u) else {
            return true;
        };
        used[anchor] = true;
        for y in anchor + 1..values.len() {
            if used[y] {
                continue;
            }
            used[y] = true;
            for z in y + 1..values.len() {
                if used[z] || values[anchor] + values[y] + values[z] != b {
                    continue;
                }
                used[z] = true;
                triples.push([anchor + 1, y + 1, z + 1]);
                if search(values, b, used, triples) {
                    return true;
                }
                triples.pop();
                used[z] = false;
            }
            used[y] = false;
        }
        used[anchor] = false;
        false
    }

    let mut used = vec![false; inst.values().len()];
    let mut triples = Vec::with_capacity(inst.m());
    Ok(
        if search(inst.values(), inst.b(), &mut used, &mut triples) {
            Some(PartitionSolution { triples })
        } else {
            None
        },
    )
}

/// The apex construction: forget signs, add a universal vertex, and take the
/// switching class of the resulting all-positive graph.
pub fn apex_reduction(g: &Graph2EC) -> SignedClass {
    crate::cliques::apex_extend(&g.underlying_all_positive())
}

/// True iff the underlying graph has no induced diamond (a `K4` minus one
/// edge). Checked edge by edge: the common neighborhood of every edge must
/// induce a clique.
pub fn check_diamond_free(g: &Graph2EC, limits: &Limits) -> Result<bool, GuardError> {
    limits.check("vertices", g.n(), caps::CLIQUE)?;
    let n = g.n();
    let adj: Vec<_> = (0..n).map(|v| g.adj_row(v)).collect();
    let edges = g.edges();
    Ok(edges.par_iter().all(|&(u, v, _)| {
        let common: Vec<usize> = adj[u].iter_ones().filter(|&w| adj[v].get(w)).collect();
        common
            .iter()
            .enumerate()
            .all(|(i, &a)| common[i + 1..].iter().all(|&b| adj[a].get(b)))
    }))
}

/// Parse the 3-partition instance format: a header `3p <m> <B>` followed by
/// exactly `3m` lines `a <value>`. `#` starts a comment line.
pub fn parse_instance(text: &str) -> Result<ThreePartitionInstance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut values: Vec<usize> = Vec::new();
    for (line, raw) in directive_lines(text) {
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields[0] {
            "3p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let [_, m, b] = fields[..] else {
                    return Err(ParseError::Arity {
                        line,
                        directive: "3p",
                        expected: 2,
                    });
                };
                header = Some((parse_int(line, m)?, parse_int(line, b)?));
            }
            "a" => {
                let Some((m, _)) = header else {
                    return Err(ParseError::HeaderRequired { line });
                };
                let [_, v] = fields[..] else {
                    return Err(ParseError::Arity {
                        line,
                        directive: "a",
                        expected: 1,
                    });
                };
                if values.len() == 3 * m {
                    return Err(ParseError::ExtraValue { line });
                }
                values.push(parse_int(line, v)?);
            }
            token => {
                return Err(ParseError::UnknownDirective {
                    line,
                    token: token.to_string(),
                })
            }
        }
    }
    let Some((m, b)) = header else {
        return Err(ParseError::MissingHeader);
    };
    if values.len() != 3 * m {
        return Err(ParseError::MissingValues {
            expected: 3 * m,
            got: values.len(),
        });
    }
    Ok(ThreePartitionInstance::new(m, b, values)?)
}

pub fn serialize_instance(inst: &ThreePartitionInstance) -> String {
    let mut out = format!("3p {} {}\n", inst.m(), inst.b());
    for v in inst.values() {
        out.push_str(&format!("a {v}\n"));
    }
    out
}
