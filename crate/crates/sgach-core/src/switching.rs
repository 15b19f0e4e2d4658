//! Re-signing, switching sets, switching equivalence, and signed graphs
//! (switching classes) via a canonical representative.

use crate::bitset::Bits;
use crate::graph::{Graph2EC, GraphError};

/// A set of vertices to re-sign. Applying a switching set flips the sign of
/// exactly the edges with one endpoint in the set; applying it twice is the
/// identity, and a set and its complement (per component) act identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingSet {
    bits: Bits,
}

impl SwitchingSet {
    pub fn empty(n: usize) -> SwitchingSet {
        SwitchingSet { bits: Bits::new(n) }
    }

    pub fn from_members(
        n: usize,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<SwitchingSet, GraphError> {
        let mut bits = Bits::new(n);
        for v in members {
            if v >= n {
                return Err(GraphError::UnknownVertex { v, n });
            }
            bits.set(v);
        }
        Ok(SwitchingSet { bits })
    }

    pub fn capacity(&self) -> usize {
        self.bits.capacity()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn members(&self) -> Vec<usize> {
        self.bits.iter_ones().collect()
    }

    /// Canonical form with respect to `g`: within each component, the set
    /// acting identically that does not contain the component's lowest-id
    /// vertex. This kills the global-flip symmetry per component.
    pub fn canonicalize(&self, g: &Graph2EC) -> SwitchingSet {
        let n = g.n();
        let (comp, c) = g.components();
        let mut root_switched = vec![false; c];
        let mut seen = vec![false; c];
        for v in 0..n {
            if !seen[comp[v]] {
                // first vertex of a component in id order is its root
                seen[comp[v]] = true;
                root_switched[comp[v]] = self.contains(v);
            }
        }
        let mut bits = Bits::new(n);
        for v in 0..n {
            if self.contains(v) != root_switched[comp[v]] {
                bits.set(v);
            }
        }
        SwitchingSet { bits }
    }
}

impl Graph2EC {
    /// Flips the sign of every edge incident with `v`.
    pub fn resign_at(&self, v: usize) -> Result<Graph2EC, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let flips: Vec<usize> = self.neighbors(v).collect();
        for u in flips {
            let s = g.sign(u, v).expect("neighbor");
            g.set_sign(u, v, s.flip());
        }
        Ok(g)
    }

    /// Applies a whole switching set: an edge flips iff exactly one endpoint
    /// is in the set. Equals folding `resign_at` over the set in any order.
    pub fn apply_switching(&self, s: &SwitchingSet) -> Result<Graph2EC, GraphError> {
        if s.capacity() != self.n() {
            if let Some(v) = s.members().into_iter().find(|&v| v >= self.n()) {
                return Err(GraphError::UnknownVertex { v, n: self.n() });
            }
        }
        let mut g = self.clone();
        for (u, v, sign) in self.edges() {
            if s.contains(u) != s.contains(v) {
                g.set_sign(u, v, sign.flip());
            }
        }
        Ok(g)
    }
}

/// Switching set carrying one signature to another, if the two graphs are
/// equivalent. Errors if the underlying graphs differ.
///
/// The symmetric difference of the negative edge sets must be an edge cut:
/// decided per component by propagating a ±1 labeling along a spanning tree
/// (label product across an edge must equal the product of the two signs)
/// and checking every non-tree edge.
pub fn equivalence_switching(
    g1: &Graph2EC,
    g2: &Graph2EC,
) -> Result<Option<SwitchingSet>, GraphError> {
    if !g1.same_underlying(g2) {
        return Err(GraphError::UnderlyingMismatch);
    }
    let n = g1.n();
    // switched[v] = true means v goes into the switching set
    let mut switched = vec![false; n];
    let mut visited = vec![false; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for v in g1.adj_row(u).iter_ones() {
                let differs = g1.sign(u, v) != g2.sign(u, v);
                if !visited[v] {
                    visited[v] = true;
                    switched[v] = switched[u] ^ differs;
                    stack.push(v);
                } else if (switched[u] ^ switched[v]) != differs {
                    return Ok(None);
                }
            }
        }
    }
    let set =
        SwitchingSet::from_members(n, (0..n).filter(|&v| switched[v])).expect("members in range");
    Ok(Some(set.canonicalize(g1)))
}

pub fn is_equivalent(g1: &Graph2EC, g2: &Graph2EC) -> Result<bool, GraphError> {
    Ok(equivalence_switching(g1, g2)?.is_some())
}

/// Switching-equivalent graph in which every edge of the lowest-id BFS
/// forest (children visited in ascending id order) is positive, plus the
/// witnessing switching set. Deterministic, idempotent, and constant on
/// switching classes.
pub fn canonical_signature(g: &Graph2EC) -> (Graph2EC, SwitchingSet) {
    let n = g.n();
    let mut switched = vec![false; n];
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for v in g.adj_row(u).iter_ones() {
                if !visited[v] {
                    visited[v] = true;
                    // make tree edge uv positive in the switched graph
                    switched[v] = switched[u] ^ g.sign(u, v).expect("tree edge").is_negative();
                    queue.push_back(v);
                }
            }
        }
    }
    let set =
        SwitchingSet::from_members(n, (0..n).filter(|&v| switched[v])).expect("members in range");
    // roots are never switched, so the set is already canonical
    let canon = g.apply_switching(&set).expect("set over V(g)");
    (canon, set)
}

/// A signed graph `[G, Σ]`: the switching class of a 2-edge-colored graph,
/// stored as its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedClass {
    rep: Graph2EC,
}

impl SignedClass {
    pub fn from_graph(g: &Graph2EC) -> SignedClass {
        SignedClass {
            rep: canonical_signature(g).0,
        }
    }

    /// The canonical representative (spanning-forest edges positive).
    pub fn representative(&self) -> &Graph2EC {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    /// Whether `g` is a member of this class.
    pub fn contains(&self, g: &Graph2EC) -> Result<bool, GraphError> {
        is_equivalent(&self.rep, g)
    }

    /// All distinct member signatures, one per switching set with the
    /// lowest-id vertex of each component held fixed: `2^(n-c)` members.
    /// Use only at small scale; enumeration order is the ascending bitmask
    /// over the non-root vertices in id order.
    pub fn members(&self) -> Vec<Graph2EC> {
        free_switch_vertices(&self.rep)
            .map(|free| {
                (0..1usize << free.len())
                    .map(|mask| switch_by_mask(&self.rep, &free, mask))
                    .collect()
            })
            .unwrap_or_default()
    }
}

/// Non-root vertices per component in ascending id order, or `None` if the
/// graph is too large to enumerate switchings over.
pub(crate) fn free_switch_vertices(g: &Graph2EC) -> Option<Vec<usize>> {
    let (comp, c) = g.components();
    let mut seen = vec![false; c];
    let mut free = Vec::with_capacity(g.n().saturating_sub(c));
    for v in 0..g.n() {
        if seen[comp[v]] {
            free.push(v);
        } else {
            seen[comp[v]] = true;
        }
    }
    (free.len() < usize::BITS as usize).then_some(free)
}

pub(crate) fn switch_by_mask(g: &Graph2EC, free: &[usize], mask: usize) -> Graph2EC {
    let members = free
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v);
    let set = SwitchingSet::from_members(g.n(), members).expect("vertices of g");
    g.apply_switching(&set).expect("set over V(g)")
}

pub(crate) fn mask_to_switching(g: &Graph2EC, free: &[usize], mask: usize) -> SwitchingSet {
    let members = free
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v);
    SwitchingSet::from_members(g.n(), members).expect("vertices of g")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::Sign;

    fn path(signs: &[Sign]) -> Graph2EC {
        let mut g = Graph2EC::new(signs.len() + 1);
        for (i, &s) in signs.iter().enumerate() {
            g.add_edge(i, i + 1, s).unwrap();
        }
        g
    }

    fn cycle(signs: &[Sign]) -> Graph2EC {
        let n = signs.len();
        let mut g = Graph2EC::new(n);
        for (i, &s) in signs.iter().enumerate() {
            g.add_edge(i, (i + 1) % n, s).unwrap();
        }
        g
    }

    #[test]
    fn resign_is_local_and_involutive() {
        use Sign::*;
        let g = path(&[Positive, Positive]);
        let r = g.resign_at(1).unwrap();
        assert_eq!(r.sign(0, 1), Some(Negative));
        assert_eq!(r.sign(1, 2), Some(Negative));
        assert_eq!(r.resign_at(1).unwrap(), g);
        assert!(g.resign_at(9).is_err());
    }

    #[test]
    fn resign_preserves_cycle_parity() {
        use Sign::*;
        let g = cycle(&[Positive, Positive, Positive, Negative]);
        for v in 0..4 {
            let r = g.resign_at(v).unwrap();
            let negs = r.negative_edges().len();
            assert_eq!(negs % 2, 1, "resigning keeps the cycle unbalanced");
        }
    }

    #[test]
    fn switching_empty_and_full_are_identity() {
        use Sign::*;
        let g = path(&[Positive, Negative, Positive]);
        let empty = SwitchingSet::empty(g.n());
        assert_eq!(g.apply_switching(&empty).unwrap(), g);
        let full = SwitchingSet::from_members(g.n(), 0..g.n()).unwrap();
        assert_eq!(g.apply_switching(&full).unwrap(), g);
    }

    #[test]
    fn switching_single_leaf() {
        use Sign::*;
        let g = path(&[Positive, Positive]);
        let s = SwitchingSet::from_members(3, [0]).unwrap();
        let r = g.apply_switching(&s).unwrap();
        assert_eq!(r.sign(0, 1), Some(Negative));
        assert_eq!(r.sign(1, 2), Some(Positive));
    }

    #[test]
    fn switching_matches_folded_resigns() {
        use Sign::*;
        let g = cycle(&[Positive, Negative, Positive, Negative, Positive]);
        let s = SwitchingSet::from_members(5, [1, 3, 4]).unwrap();
        let folded = g
            .resign_at(1)
            .unwrap()
            .resign_at(3)
            .unwrap()
            .resign_at(4)
            .unwrap();
        assert_eq!(g.apply_switching(&s).unwrap(), folded);
    }

    #[test]
    fn equivalence_paths_and_cycles() {
        use Sign::*;
        let up3 = path(&[Negative, Positive]);
        let p3 = path(&[Positive, Positive]);
        assert!(is_equivalent(&up3, &p3).unwrap());

        let uc4 = cycle(&[Positive, Positive, Positive, Negative]);
        let c4 = cycle(&[Positive, Positive, Positive, Positive]);
        assert!(!is_equivalent(&uc4, &c4).unwrap());
        for v in 0..4 {
            assert!(is_equivalent(&uc4, &uc4.resign_at(v).unwrap()).unwrap());
        }

        let mut other = Graph2EC::new(3);
        other.add_edge(0, 2, Positive).unwrap();
        assert_eq!(
            is_equivalent(&up3, &other),
            Err(GraphError::UnderlyingMismatch)
        );
    }

    #[test]
    fn equivalence_witness_carries_signature() {
        use Sign::*;
        let uc4 = cycle(&[Positive, Negative, Negative, Negative]);
        let target = cycle(&[Negative, Positive, Positive, Positive]);
        let s = equivalence_switching(&uc4, &target).unwrap().unwrap();
        assert_eq!(uc4.apply_switching(&s).unwrap(), target);
        assert!(!s.contains(0), "canonical sets avoid the component root");
    }

    #[test]
    fn canonical_signature_contract() {
        use Sign::*;
        // one negative leaf edge normalizes to the all-positive path
        let up3 = path(&[Negative, Positive]);
        let (canon, s) = canonical_signature(&up3);
        assert_eq!(canon, path(&[Positive, Positive]));
        assert_eq!(up3.apply_switching(&s).unwrap(), canon);

        // already canonical: identity
        let p3 = path(&[Positive, Positive]);
        let (canon2, s2) = canonical_signature(&p3);
        assert_eq!(canon2, p3);
        assert!(s2.is_empty());

        // constant on classes
        for v in 0..3 {
            let member = up3.resign_at(v).unwrap();
            assert_eq!(canonical_signature(&member).0, canon);
        }

        // idempotent
        assert_eq!(canonical_signature(&canon).0, canon);
    }

    #[test]
    fn canonical_keeps_unbalanced_cycles_unbalanced() {
        use Sign::*;
        let uc4 = cycle(&[Negative, Negative, Negative, Positive]);
        let (canon, _) = canonical_signature(&uc4);
        assert_eq!(canon.negative_edges().len(), 1);
        // BFS forest from vertex 0 covers edges 01, 03, 12; the non-tree
        // edge 23 carries the imbalance
        assert_eq!(canon.negative_edges(), vec![(2, 3)]);
    }

    #[test]
    fn class_membership_and_size() {
        use Sign::*;
        let up3 = path(&[Negative, Positive]);
        let class = SignedClass::from_graph(&up3);
        assert_eq!(class.representative(), &path(&[Positive, Positive]));
        assert!(class.contains(&up3).unwrap());
        // a path is a tree: the whole signature space is one class
        assert_eq!(class.members().len(), 4);

        let uc4 = cycle(&[Positive, Positive, Positive, Negative]);
        let class = SignedClass::from_graph(&uc4);
        let members = class.members();
        assert_eq!(members.len(), 8);
        for m in &members {
            assert_eq!(m.negative_edges().len() % 2, 1);
        }
    }

    #[test]
    fn canonicalize_switching_set_drops_roots() {
        let g = path(&[Sign::Positive, Sign::Positive]);
        let s = SwitchingSet::from_members(3, [0, 2]).unwrap();
        let c = s.canonicalize(&g);
        assert_eq!(c.members(), vec![1]);
        assert_eq!(
            g.apply_switching(&s).unwrap(),
            g.apply_switching(&c).unwrap()
        );
    }
}
