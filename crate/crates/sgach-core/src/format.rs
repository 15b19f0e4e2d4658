//! Text formats: graphs and colorings.
//!
//! Graph files are UTF-8 and line-oriented. `#` starts a full-line comment;
//! blank lines are skipped. The header `signed <n>` comes first, then
//! optional `v <name>` lines naming vertices in id order (unnamed vertices
//! keep their default `v<i>` names), then `e <name1> <name2> <+|->` edge
//! lines. Serialization writes the header, all names, then edges sorted by
//! (min id, max id), so serialized output round-trips exactly.
//!
//! Coloring files hold one `c <vertexname> <color>` line per vertex and at
//! most one `switch <name> ...` line.

use crate::graph::{Graph2EC, GraphError};
use crate::morphism::{Coloring, ColoringError};
use crate::sign::Sign;
use crate::switching::SwitchingSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected the header line before other directives")]
    HeaderRequired { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: repeated header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: bad integer `{token}`")]
    BadInt { line: usize, token: String },
    #[error("line {line}: bad sign `{token}` (expected + or -)")]
    BadSign { line: usize, token: String },
    #[error("line {line}: unknown vertex name `{name}`")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: more `v` lines than vertices")]
    TooManyNames { line: usize },
    #[error("line {line}: `{directive}` takes {expected} argument(s)")]
    Arity {
        line: usize,
        directive: &'static str,
        expected: usize,
    },
    #[error("line {line}: unknown directive `{token}`")]
    UnknownDirective { line: usize, token: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: vertex `{name}` colored twice")]
    RepeatedColor { line: usize, name: String },
    #[error("vertex `{name}` has no color line")]
    UncoloredVertex { name: String },
    #[error("line {line}: repeated `switch` line")]
    DuplicateSwitch { line: usize },
    #[error("vertex name `{name}` appears twice after applying `v` lines")]
    NameClash { name: String },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("line {line}: more `a` lines than the header's 3m")]
    ExtraValue { line: usize },
    #[error("expected {expected} `a` lines, found {got}")]
    MissingValues { expected: usize, got: usize },
    #[error(transparent)]
    Instance(#[from] crate::reduction::InstanceError),
}

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn directive_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_int(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::BadInt {
        line,
        token: token.to_string(),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph2EC, ParseError> {
    let mut graph: Option<Graph2EC> = None;
    let mut named = 0usize;
    for (line, raw) in directive_lines(text) {
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields[0] {
            "signed" => {
                if graph.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let [_, n] = fields[..] else {
                    return Err(ParseError::Arity {
                        line,
                        directive: "signed",
                        expected: 1,
                    });
                };
                graph = Some(Graph2EC::new(parse_int(line, n)?));
            }
            "v" => {
                let g = graph.as_mut().ok_or(ParseError::HeaderRequired { line })?;
                let [_, name] = fields[..] else {
                    return Err(ParseError::Arity {
                        line,
                        directive: "v",
                        expected: 1,
                    });
                };
                if named >= g.n() {
                    return Err(ParseError::TooManyNames { line });
                }
                // only earlier explicit names clash here; collisions with
                // default names of later vertices surface in the final scan
                if g.names()[..named].iter().any(|x| x == name) {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::DuplicateName(name.to_string()),
                    });
                }
                g.set_name(named, name.to_string());
                named += 1;
            }
            "e" => {
                let g = graph.as_mut().ok_or(ParseError::HeaderRequired { line })?;
                let [_, a, b, s] = fields[..] else {
                    return Err(ParseError::Arity {
                        line,
                        directive: "e",
                        expected: 3,
                    });
                };
                let resolve = |name: &str| {
                    g.index_of(name).ok_or_else(|| ParseError::UnknownName {
                        line,
                        name: name.to_string(),
                    })
                };
                let (u, v) = (resolve(a)?, resolve(b)?);
                let sign = Sign::from_token(s).ok_or_else(|| ParseError::BadSign {
                    line,
                    token: s.to_string(),
                })?;
                g.add_edge(u, v, sign)
                    .map_err(|source| ParseError::Graph { line, source })?;
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    token: other.to_string(),
                })
            }
        }
    }
    let graph = graph.ok_or(ParseError::MissingHeader)?;
    for (i, name) in graph.names().iter().enumerate() {
        if graph.names()[..i].contains(name) {
            return Err(ParseError::NameClash { name: name.clone() });
        }
    }
    Ok(graph)
}

pub fn serialize_graph(g: &Graph2EC) -> String {
    let mut out = String::new();
    writeln!(out, "signed {}", g.n()).unwrap();
    for name in g.names() {
        writeln!(out, "v {name}").unwrap();
    }
    for (u, v, s) in g.edges() {
        writeln!(out, "e {} {} {}", g.name(u), g.name(v), s.token()).unwrap();
    }
    out
}

/// Parses a coloring against `g`'s name table. Every vertex must receive
/// exactly one color; colors must form `1..=k`.
pub fn parse_coloring(text: &str, g: &Graph2EC) -> Result<Coloring, ParseError> {
    let mut assign: Vec<Option<usize>> = vec![None; g.n()];
    let mut switching: Option<SwitchingSet> = None;
    for (line, raw) in directive_lines(text) {
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields[0] {
            "c" => {
                let [_, name, color] = fields[..] else {
                    return Err(ParseError::Arity {
                        line,
                        directive: "c",
                        expected: 2,
                    });
                };
                let v = g.index_of(name).ok_or_else(|| ParseError::UnknownName {
                    line,
                    name: name.to_string(),
                })?;
                if assign[v].is_some() {
                    return Err(ParseError::RepeatedColor {
                        line,
                        name: name.to_string(),
                    });
                }
                assign[v] = Some(parse_int(line, color)?);
            }
            "switch" => {
                if switching.is_some() {
                    return Err(ParseError::DuplicateSwitch { line });
                }
                let mut members = Vec::new();
                for name in &fields[1..] {
                    members.push(g.index_of(name).ok_or_else(|| ParseError::UnknownName {
                        line,
                        name: name.to_string(),
                    })?);
                }
                switching = Some(
                    SwitchingSet::from_members(g.n(), members).expect("resolved ids are in range"),
                );
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    token: other.to_string(),
                })
            }
        }
    }
    let mut colors = Vec::with_capacity(g.n());
    for (v, c) in assign.into_iter().enumerate() {
        colors.push(c.ok_or_else(|| ParseError::UncoloredVertex {
            name: g.name(v).to_string(),
        })?);
    }
    Ok(Coloring::new(colors, switching)?)
}

pub fn serialize_coloring(col: &Coloring, g: &Graph2EC) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        writeln!(out, "c {} {}", g.name(v), col.color(v)).unwrap();
    }
    if let Some(s) = col.switching() {
        let names: Vec<&str> = s.members().into_iter().map(|v| g.name(v)).collect();
        writeln!(out, "switch {}", names.join(" ")).unwrap();
    }
    out
}
