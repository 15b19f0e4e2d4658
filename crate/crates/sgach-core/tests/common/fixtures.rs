//! The small named graphs the suites keep coming back to, built in one
//! place so every test sees identical ids and signs.

use sgach_core::graph::Graph2EC;
use sgach_core::sign::Sign::{self, Negative, Positive};

pub fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> Graph2EC {
    let mut g = Graph2EC::new(n);
    for &(u, v, s) in edges {
        g.add_edge(u, v, s).unwrap();
    }
    g
}

/// The unbalanced path on three vertices: one negative pendant edge.
pub fn up3() -> Graph2EC {
    graph(3, &[(0, 1, Negative), (1, 2, Positive)])
}

pub fn p3_pos() -> Graph2EC {
    graph(3, &[(0, 1, Positive), (1, 2, Positive)])
}

pub fn p4_pos() -> Graph2EC {
    graph(4, &[(0, 1, Positive), (1, 2, Positive), (2, 3, Positive)])
}

/// Two triangles sharing the center x (ids: a=0, b=1, c=2, d=3, x=4):
/// x sees a, b positively and c, d negatively; a-b and c-d are positive.
pub fn bowtie() -> Graph2EC {
    graph(
        5,
        &[
            (4, 0, Positive),
            (4, 1, Positive),
            (4, 2, Negative),
            (4, 3, Negative),
            (0, 1, Positive),
            (3, 2, Positive),
        ],
    )
}

/// The four-cycle with exactly one negative edge.
pub fn uc4() -> Graph2EC {
    graph(
        4,
        &[
            (0, 1, Positive),
            (1, 2, Positive),
            (2, 3, Positive),
            (3, 0, Negative),
        ],
    )
}

pub fn c4_pos() -> Graph2EC {
    graph(
        4,
        &[
            (0, 1, Positive),
            (1, 2, Positive),
            (2, 3, Positive),
            (3, 0, Positive),
        ],
    )
}

/// Two disjoint one-negative-edge four-cycles (a1..a4 = 0..3, b1..b4 = 4..7)
/// plus x1 (8) negative to every a and positive to every b, and x2 (9)
/// positive to everything.
pub fn double_uc4() -> Graph2EC {
    let mut e = vec![
        (0, 1, Positive),
        (0, 3, Negative),
        (2, 1, Positive),
        (2, 3, Positive),
        (4, 5, Positive),
        (4, 7, Negative),
        (6, 5, Positive),
        (6, 7, Positive),
    ];
    for i in 0..4 {
        e.push((8, i, Negative));
        e.push((8, 4 + i, Positive));
        e.push((9, i, Positive));
        e.push((9, 4 + i, Positive));
    }
    graph(10, &e)
}

/// A five-cycle a..e (0..4) with signs ab+, bc+, cd-, de+, ea+ and a pendant
/// f (5) attached negatively to a. Deleting d (id 3) raises psi2 by one.
pub fn c5_pendant() -> Graph2EC {
    graph(
        6,
        &[
            (5, 0, Negative),
            (0, 1, Positive),
            (1, 2, Positive),
            (2, 3, Negative),
            (3, 4, Positive),
            (4, 0, Positive),
        ],
    )
}

/// A six-cycle a..f (0..5) with signs ab+, bc+, cd-, de+, ef+, fa- and the
/// two positive chords ea, ec. The distinguished vertex is c (id 2).
pub fn c6_chords() -> Graph2EC {
    graph(
        6,
        &[
            (5, 0, Negative),
            (5, 4, Positive),
            (0, 1, Positive),
            (1, 2, Positive),
            (2, 3, Negative),
            (3, 4, Positive),
            (4, 0, Positive),
            (4, 2, Positive),
        ],
    )
}

/// All-positive complete graph.
pub fn k_pos(n: usize) -> Graph2EC {
    let mut g = Graph2EC::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, Positive).unwrap();
        }
    }
    g
}

pub fn c5_pos() -> Graph2EC {
    graph(
        5,
        &[
            (0, 1, Positive),
            (1, 2, Positive),
            (2, 3, Positive),
            (3, 4, Positive),
            (4, 0, Positive),
        ],
    )
}
