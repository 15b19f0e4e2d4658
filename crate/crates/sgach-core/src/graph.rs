//! 2-edge-colored graphs: a simple undirected graph with a sign on every
//! edge. The set of negative edges is the signature.

use crate::bitset::Bits;
use crate::sign::Sign;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex id {v} (graph has {n} vertices)")]
    UnknownVertex { v: usize, n: usize },
    #[error("unknown vertex name {0:?}")]
    UnknownName(String),
    #[error("loop at vertex {0} rejected")]
    Loop(usize),
    #[error("duplicate edge {{{u},{v}}} rejected (digons are not allowed)")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {u} and {v} are adjacent")]
    AdjacentPair { u: usize, v: usize },
    #[error("graphs have different underlying graphs")]
    UnderlyingMismatch,
    #[error("duplicate vertex name {0:?}")]
    DuplicateName(String),
}

/// A 2-edge-colored graph `(G, C)`. Vertices are dense ids `0..n`; every
/// vertex has a name (defaulting to `v<id>`). Simple: no loops, and at most
/// one edge per vertex pair (so no digons), carrying exactly one sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph2EC {
    names: Vec<String>,
    pos: Vec<Bits>,
    neg: Vec<Bits>,
    edge_count: usize,
}

impl Graph2EC {
    pub fn new(n: usize) -> Graph2EC {
        Graph2EC {
            names: (0..n).map(|i| format!("v{i}")).collect(),
            pos: (0..n).map(|_| Bits::new(n)).collect(),
            neg: (0..n).map(|_| Bits::new(n)).collect(),
            edge_count: 0,
        }
    }

    pub fn with_names(names: Vec<String>) -> Result<Graph2EC, GraphError> {
        let n = names.len();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(GraphError::DuplicateName(a.clone()));
            }
        }
        Ok(Graph2EC {
            names,
            pos: (0..n).map(|_| Bits::new(n)).collect(),
            neg: (0..n).map(|_| Bits::new(n)).collect(),
            edge_count: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn set_name(&mut self, v: usize, name: String) {
        self.names[v] = name;
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex { v, n: self.n() })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        let rows = match sign {
            Sign::Positive => &mut self.pos,
            Sign::Negative => &mut self.neg,
        };
        rows[u].set(v);
        rows[v].set(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.pos[u].get(v) || self.neg[u].get(v)
    }

    /// Replaces the sign of an existing edge. Internal: switching and
    /// merging transform graphs without re-running simplicity checks.
    pub(crate) fn set_sign(&mut self, u: usize, v: usize, sign: Sign) {
        debug_assert!(self.has_edge(u, v));
        let (on, off) = match sign {
            Sign::Positive => (&mut self.pos, &mut self.neg),
            Sign::Negative => (&mut self.neg, &mut self.pos),
        };
        off[u].clear(v);
        off[v].clear(u);
        on[u].set(v);
        on[v].set(u);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.pos[u].clear(v);
        self.pos[v].clear(u);
        self.neg[u].clear(v);
        self.neg[v].clear(u);
        self.edge_count -= 1;
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if self.pos[u].get(v) {
            Some(Sign::Positive)
        } else if self.neg[u].get(v) {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Positive-neighborhood row of `u`.
    pub fn pos_row(&self, u: usize) -> &Bits {
        &self.pos[u]
    }

    /// Negative-neighborhood row of `u`.
    pub fn neg_row(&self, u: usize) -> &Bits {
        &self.neg[u]
    }

    /// Unsigned neighborhood of `u` as a fresh bitset.
    pub fn adj_row(&self, u: usize) -> Bits {
        let mut b = self.pos[u].clone();
        b.union_with(&self.neg[u]);
        b
    }

    pub fn degree(&self, u: usize) -> usize {
        self.pos[u].count() + self.neg[u].count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges sorted by `(min id, max id)`, the serialization order.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for v in self.pos[u].iter_ones().filter(|&v| v > u) {
                out.push((u, v, Sign::Positive));
            }
            for v in self.neg[u].iter_ones().filter(|&v| v > u) {
                out.push((u, v, Sign::Negative));
            }
        }
        out.sort_unstable_by_key(|&(u, v, _)| (u, v));
        out
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(_, _, s)| s == Sign::Negative)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    /// Same vertex count and same unsigned edge set (names are ignored).
    pub fn same_underlying(&self, other: &Graph2EC) -> bool {
        self.n() == other.n() && (0..self.n()).all(|u| self.adj_row(u) == other.adj_row(u))
    }

    /// Copy with every edge made positive.
    pub fn underlying_all_positive(&self) -> Graph2EC {
        let mut g = Graph2EC::with_names(self.names.clone()).expect("names already unique");
        for (u, v, _) in self.edges() {
            g.add_edge(u, v, Sign::Positive)
                .expect("edges already simple");
        }
        g
    }

    /// Component id per vertex plus the component count. Components are
    /// numbered in order of their lowest vertex id.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut c = 0;
        let mut queue = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = c;
            queue.push(start);
            while let Some(u) = queue.pop() {
                for v in self.adj_row(u).iter_ones() {
                    if comp[v] == usize::MAX {
                        comp[v] = c;
                        queue.push(v);
                    }
                }
            }
            c += 1;
        }
        (comp, c)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().1 == 1
    }

    /// Deletes vertex `v`; ids above `v` shift down by one, names follow.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph2EC, GraphError> {
        self.check_vertex(v)?;
        let names = (0..self.n())
            .filter(|&u| u != v)
            .map(|u| self.names[u].clone())
            .collect();
        let mut g = Graph2EC::with_names(names).expect("names still unique");
        let remap = |u: usize| if u > v { u - 1 } else { u };
        for (a, b, s) in self.edges() {
            if a != v && b != v {
                g.add_edge(remap(a), remap(b), s).expect("still simple");
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph2EC {
        let mut g = Graph2EC::new(3);
        g.add_edge(0, 1, Sign::Positive).unwrap();
        g.add_edge(1, 2, Sign::Negative).unwrap();
        g
    }

    #[test]
    fn construction_rejects_loops_and_digons() {
        let mut g = Graph2EC::new(2);
        assert_eq!(g.add_edge(0, 0, Sign::Positive), Err(GraphError::Loop(0)));
        g.add_edge(0, 1, Sign::Positive).unwrap();
        assert_eq!(
            g.add_edge(1, 0, Sign::Negative),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            g.add_edge(0, 1, Sign::Positive),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn signs_and_edges() {
        let g = p3();
        assert_eq!(g.sign(0, 1), Some(Sign::Positive));
        assert_eq!(g.sign(2, 1), Some(Sign::Negative));
        assert_eq!(g.sign(0, 2), None);
        assert_eq!(
            g.edges(),
            vec![(0, 1, Sign::Positive), (1, 2, Sign::Negative)]
        );
        assert_eq!(g.negative_edges(), vec![(1, 2)]);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn default_names_and_lookup() {
        let g = p3();
        assert_eq!(g.name(2), "v2");
        assert_eq!(g.index_of("v1"), Some(1));
        assert_eq!(g.index_of("w"), None);
        assert!(matches!(
            Graph2EC::with_names(vec!["a".into(), "a".into()]),
            Err(GraphError::DuplicateName(_))
        ));
    }

    #[test]
    fn components_and_delete() {
        let mut g = Graph2EC::new(5);
        g.add_edge(0, 1, Sign::Positive).unwrap();
        g.add_edge(3, 4, Sign::Negative).unwrap();
        let (comp, c) = g.components();
        assert_eq!(c, 3);
        assert_eq!(comp, vec![0, 0, 1, 2, 2]);
        assert!(!g.is_connected());

        let h = g.delete_vertex(2).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.name(2), "v3");
        assert_eq!(h.sign(2, 3), Some(Sign::Negative));
        assert!(h.delete_vertex(4).is_err());
    }

    #[test]
    fn underlying_comparison() {
        let g = p3();
        let mut h = Graph2EC::new(3);
        h.add_edge(0, 1, Sign::Negative).unwrap();
        h.add_edge(1, 2, Sign::Negative).unwrap();
        assert!(g.same_underlying(&h));
        let all_pos = g.underlying_all_positive();
        assert!(g.same_underlying(&all_pos));
        assert!(all_pos.negative_edges().is_empty());
        let mut k = Graph2EC::new(3);
        k.add_edge(0, 2, Sign::Positive).unwrap();
        assert!(!g.same_underlying(&k));
    }
}
