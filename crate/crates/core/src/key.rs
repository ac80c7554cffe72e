//! Basis keys: the combinatorial structures indexing each basis, and their
//! literal grammar.
//!
//! Keys store vertex indices of the graph they live on. The literal forms are
//!
//! | kind         | literal           |
//! |--------------|-------------------|
//! | order        | `a<b<c`           |
//! | orientation  | `a>b,b>c`         |
//! | composition  | `a,b\|c`          |
//! | partition    | `a,b/c`           |
//! | flat/matching| `ab,bc` or `a-b`  |
//! | unit         | `1`               |
//!
//! and `∅` (or the empty string) denotes the empty structure of any kind.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexPartition};
use crate::vset::VertexSet;

pub const EMPTY_LITERAL: &str = "∅";

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum KeyKind {
    LinearOrder,
    AcyclicOrientation,
    SetComposition,
    SetPartitionM,
    SetPartitionP,
    FlatM,
    FlatP,
    MatchingM,
    MatchingP,
    Unit,
}

impl KeyKind {
    pub fn name(self) -> &'static str {
        match self {
            KeyKind::LinearOrder => "LinearOrder",
            KeyKind::AcyclicOrientation => "AcyclicOrientation",
            KeyKind::SetComposition => "SetComposition",
            KeyKind::SetPartitionM => "SetPartitionM",
            KeyKind::SetPartitionP => "SetPartitionP",
            KeyKind::FlatM => "FlatM",
            KeyKind::FlatP => "FlatP",
            KeyKind::MatchingM => "MatchingM",
            KeyKind::MatchingP => "MatchingP",
            KeyKind::Unit => "Unit",
        }
    }
}

impl FromStr for KeyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use KeyKind::*;
        [
            LinearOrder,
            AcyclicOrientation,
            SetComposition,
            SetPartitionM,
            SetPartitionP,
            FlatM,
            FlatP,
            MatchingM,
            MatchingP,
            Unit,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::InvalidKey(format!("unknown key kind `{s}`")))
    }
}

/// A basis element. Orientation arcs are `(from, to)` pairs; edge sets hold
/// `(u, v)` with `u < v`; both are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasisKey {
    LinearOrder(Vec<u8>),
    AcyclicOrientation(Vec<Edge>),
    SetComposition(Vec<VertexSet>),
    SetPartitionM(VertexPartition),
    SetPartitionP(VertexPartition),
    FlatM(Vec<Edge>),
    FlatP(Vec<Edge>),
    MatchingM(Vec<Edge>),
    MatchingP(Vec<Edge>),
    Unit,
}

impl BasisKey {
    pub fn kind(&self) -> KeyKind {
        match self {
            BasisKey::LinearOrder(_) => KeyKind::LinearOrder,
            BasisKey::AcyclicOrientation(_) => KeyKind::AcyclicOrientation,
            BasisKey::SetComposition(_) => KeyKind::SetComposition,
            BasisKey::SetPartitionM(_) => KeyKind::SetPartitionM,
            BasisKey::SetPartitionP(_) => KeyKind::SetPartitionP,
            BasisKey::FlatM(_) => KeyKind::FlatM,
            BasisKey::FlatP(_) => KeyKind::FlatP,
            BasisKey::MatchingM(_) => KeyKind::MatchingM,
            BasisKey::MatchingP(_) => KeyKind::MatchingP,
            BasisKey::Unit => KeyKind::Unit,
        }
    }

    /// The edge set of a flat or matching key.
    pub fn edge_set(&self) -> Option<&[Edge]> {
        match self {
            BasisKey::FlatM(e) | BasisKey::FlatP(e) | BasisKey::MatchingM(e) | BasisKey::MatchingP(e) => Some(e),
            _ => None,
        }
    }

    pub fn partition(&self) -> Option<&VertexPartition> {
        match self {
            BasisKey::SetPartitionM(p) | BasisKey::SetPartitionP(p) => Some(p),
            _ => None,
        }
    }

    /// Rebuilds an edge-set key of the same kind.
    pub(crate) fn with_edges(&self, edges: Vec<Edge>) -> BasisKey {
        match self.kind() {
            KeyKind::FlatM => BasisKey::FlatM(edges),
            KeyKind::FlatP => BasisKey::FlatP(edges),
            KeyKind::MatchingM => BasisKey::MatchingM(edges),
            KeyKind::MatchingP => BasisKey::MatchingP(edges),
            k => unreachable!("{k:?} is not an edge-set key"),
        }
    }

    pub(crate) fn with_partition(&self, p: VertexPartition) -> BasisKey {
        match self.kind() {
            KeyKind::SetPartitionM => BasisKey::SetPartitionM(p),
            KeyKind::SetPartitionP => BasisKey::SetPartitionP(p),
            k => unreachable!("{k:?} is not a partition key"),
        }
    }

    /// Vertices mentioned by the key (for orientations and edge sets, only
    /// the endpoints).
    pub fn support(&self) -> VertexSet {
        match self {
            BasisKey::LinearOrder(o) => o.iter().map(|&v| v as usize).collect(),
            BasisKey::SetComposition(c) => c.iter().fold(VertexSet::EMPTY, |a, &b| a | b),
            BasisKey::SetPartitionM(p) | BasisKey::SetPartitionP(p) => p.ground(),
            BasisKey::AcyclicOrientation(e)
            | BasisKey::FlatM(e)
            | BasisKey::FlatP(e)
            | BasisKey::MatchingM(e)
            | BasisKey::MatchingP(e) => e.iter().flat_map(|&(u, v)| [u as usize, v as usize]).collect(),
            BasisKey::Unit => VertexSet::EMPTY,
        }
    }

    /// Relabels vertex indices through `map`, restoring canonical order.
    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> BasisKey {
        let mv = |v: u8| map(v as usize) as u8;
        let mset = |s: VertexSet| s.iter().map(&map).collect::<VertexSet>();
        let medges = |e: &[Edge]| {
            let mut out: Vec<Edge> = e
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (mv(u), mv(v));
                    if a < b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            out.sort_unstable();
            out
        };
        match self {
            BasisKey::LinearOrder(o) => BasisKey::LinearOrder(o.iter().map(|&v| mv(v)).collect()),
            BasisKey::AcyclicOrientation(arcs) => {
                let mut out: Vec<Edge> = arcs.iter().map(|&(u, v)| (mv(u), mv(v))).collect();
                out.sort_unstable();
                BasisKey::AcyclicOrientation(out)
            }
            BasisKey::SetComposition(c) => BasisKey::SetComposition(c.iter().map(|&b| mset(b)).collect()),
            BasisKey::SetPartitionM(p) | BasisKey::SetPartitionP(p) => {
                self.with_partition(VertexPartition::from_blocks(p.blocks().iter().map(|&b| mset(b)).collect()))
            }
            BasisKey::FlatM(e) | BasisKey::FlatP(e) | BasisKey::MatchingM(e) | BasisKey::MatchingP(e) => {
                self.with_edges(medges(e))
            }
            BasisKey::Unit => BasisKey::Unit,
        }
    }

    /// Canonical literal, with labels taken from `g`.
    pub fn to_literal(&self, g: &Graph) -> String {
        let l = |v: usize| g.label(v);
        let block = |b: VertexSet| b.iter().map(l).collect::<Vec<_>>().join(",");
        let edge = |&(u, v): &Edge| {
            let (a, b) = (l(u as usize), l(v as usize));
            if a.chars().count() == 1 && b.chars().count() == 1 {
                format!("{a}{b}")
            } else {
                format!("{a}-{b}")
            }
        };
        let s = match self {
            BasisKey::Unit => return "1".into(),
            BasisKey::LinearOrder(o) => o.iter().map(|&v| l(v as usize)).collect::<Vec<_>>().join("<"),
            BasisKey::AcyclicOrientation(arcs) => arcs
                .iter()
                .map(|&(u, v)| format!("{}>{}", l(u as usize), l(v as usize)))
                .collect::<Vec<_>>()
                .join(","),
            BasisKey::SetComposition(c) => c.iter().map(|&b| block(b)).collect::<Vec<_>>().join("|"),
            BasisKey::SetPartitionM(p) | BasisKey::SetPartitionP(p) => {
                p.blocks().iter().map(|&b| block(b)).collect::<Vec<_>>().join("/")
            }
            BasisKey::FlatM(e) | BasisKey::FlatP(e) | BasisKey::MatchingM(e) | BasisKey::MatchingP(e) => {
                e.iter().map(edge).collect::<Vec<_>>().join(",")
            }
        };
        if s.is_empty() {
            EMPTY_LITERAL.into()
        } else {
            s
        }
    }

    /// Parses a literal of the given kind against the labels of `g`. Only the
    /// syntax and the labels are checked here; whether the structure is a
    /// basis element for a particular monoid is checked by
    /// [`crate::hopf::validate_key`].
    pub fn parse(kind: KeyKind, g: &Graph, literal: &str) -> Result<BasisKey> {
        let text = literal.trim();
        if kind == KeyKind::Unit {
            return match text {
                "1" | "" | EMPTY_LITERAL => Ok(BasisKey::Unit),
                _ => Err(Error::parse(1, 1, format!("expected `1` for the unit key, found `{text}`"))),
            };
        }
        let p = LiteralParser { g, text: literal };
        if text.is_empty() || text == EMPTY_LITERAL {
            return Ok(match kind {
                KeyKind::LinearOrder => BasisKey::LinearOrder(Vec::new()),
                KeyKind::AcyclicOrientation => BasisKey::AcyclicOrientation(Vec::new()),
                KeyKind::SetComposition => BasisKey::SetComposition(Vec::new()),
                KeyKind::SetPartitionM => BasisKey::SetPartitionM(VertexPartition::default()),
                KeyKind::SetPartitionP => BasisKey::SetPartitionP(VertexPartition::default()),
                KeyKind::FlatM => BasisKey::FlatM(Vec::new()),
                KeyKind::FlatP => BasisKey::FlatP(Vec::new()),
                KeyKind::MatchingM => BasisKey::MatchingM(Vec::new()),
                KeyKind::MatchingP => BasisKey::MatchingP(Vec::new()),
                KeyKind::Unit => unreachable!(),
            });
        }
        let whole = (0, literal);
        match kind {
            KeyKind::LinearOrder => {
                let mut order = Vec::new();
                let mut seen = VertexSet::EMPTY;
                for (pos, tok) in split(whole, '<') {
                    let v = p.vertex(pos, tok)?;
                    if seen.contains(v) {
                        return Err(p.err(pos, format!("vertex `{}` repeated", tok.trim())));
                    }
                    seen.insert(v);
                    order.push(v as u8);
                }
                Ok(BasisKey::LinearOrder(order))
            }
            KeyKind::AcyclicOrientation => {
                let mut arcs = Vec::new();
                for (pos, tok) in split(whole, ',') {
                    let parts = split((pos, tok), '>');
                    if parts.len() != 2 {
                        return Err(p.err(pos, format!("expected `u>v`, found `{}`", tok.trim())));
                    }
                    let u = p.vertex(parts[0].0, parts[0].1)?;
                    let v = p.vertex(parts[1].0, parts[1].1)?;
                    if u == v {
                        return Err(p.err(pos, "arc with equal endpoints"));
                    }
                    arcs.push((u as u8, v as u8));
                }
                arcs.sort_unstable();
                let before = arcs.len();
                arcs.dedup();
                if arcs.len() != before {
                    return Err(p.err(0, "repeated arc"));
                }
                Ok(BasisKey::AcyclicOrientation(arcs))
            }
            KeyKind::SetComposition => Ok(BasisKey::SetComposition(p.blocks(whole, '|')?)),
            KeyKind::SetPartitionM | KeyKind::SetPartitionP => {
                let blocks = p.blocks(whole, '/')?;
                let pi = VertexPartition::from_blocks(blocks);
                Ok(if kind == KeyKind::SetPartitionM {
                    BasisKey::SetPartitionM(pi)
                } else {
                    BasisKey::SetPartitionP(pi)
                })
            }
            KeyKind::FlatM | KeyKind::FlatP | KeyKind::MatchingM | KeyKind::MatchingP => {
                let mut edges = Vec::new();
                for (pos, tok) in split(whole, ',') {
                    let (u, v) = p.edge(pos, tok)?;
                    edges.push(crate::graph::edge(u, v));
                }
                edges.sort_unstable();
                let before = edges.len();
                edges.dedup();
                if edges.len() != before {
                    return Err(p.err(0, "repeated edge"));
                }
                Ok(match kind {
                    KeyKind::FlatM => BasisKey::FlatM(edges),
                    KeyKind::FlatP => BasisKey::FlatP(edges),
                    KeyKind::MatchingM => BasisKey::MatchingM(edges),
                    _ => BasisKey::MatchingP(edges),
                })
            }
            KeyKind::Unit => unreachable!(),
        }
    }
}

/// Splits `s` (which starts at byte offset `base` of the full literal) on
/// `sep`, keeping offsets.
fn split((base, s): (usize, &str), sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push((base + start, &s[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((base + start, &s[start..]));
    out
}

struct LiteralParser<'a> {
    g: &'a Graph,
    text: &'a str,
}

impl LiteralParser<'_> {
    fn err(&self, byte: usize, msg: impl Into<String>) -> Error {
        let col = self.text[..byte.min(self.text.len())].chars().count() + 1;
        Error::parse(1, col, msg)
    }

    fn vertex(&self, pos: usize, tok: &str) -> Result<usize> {
        let label = tok.trim();
        let lead = tok.len() - tok.trim_start().len();
        if label.is_empty() {
            return Err(self.err(pos, "missing vertex label"));
        }
        self.g
            .index_of(label)
            .ok_or_else(|| self.err(pos + lead, format!("unknown vertex `{label}`")))
    }

    fn edge(&self, pos: usize, tok: &str) -> Result<(usize, usize)> {
        let t = tok.trim();
        let lead = tok.len() - tok.trim_start().len();
        let (a, b, off_b) = if let Some((a, b)) = t.split_once('-') {
            (a, b, a.len() + 1)
        } else {
            let mut chars = t.char_indices();
            match (chars.next(), chars.next(), chars.next()) {
                (Some(_), Some((i, _)), None) => (&t[..i], &t[i..], i),
                _ => {
                    return Err(self.err(
                        pos + lead,
                        format!("expected an edge `uv` or `u-v`, found `{t}`"),
                    ))
                }
            }
        };
        let u = self.vertex(pos + lead, a)?;
        let v = self.vertex(pos + lead + off_b, b)?;
        if u == v {
            return Err(self.err(pos + lead, "edge with equal endpoints"));
        }
        Ok((u, v))
    }

    fn blocks(&self, whole: (usize, &str), sep: char) -> Result<Vec<VertexSet>> {
        let mut seen = VertexSet::EMPTY;
        let mut blocks = Vec::new();
        for (pos, tok) in split(whole, sep) {
            let mut b = VertexSet::EMPTY;
            for (p, label) in split((pos, tok), ',') {
                let v = self.vertex(p, label)?;
                if seen.contains(v) {
                    return Err(self.err(p, format!("vertex `{}` repeated", label.trim())));
                }
                seen.insert(v);
                b.insert(v);
            }
            blocks.push(b);
        }
        Ok(blocks)
    }
}

/// JSON form of a key: `{"kind": .., "literal": ..}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KeyJson {
    pub kind: String,
    pub literal: String,
}

impl KeyJson {
    pub fn new(key: &BasisKey, g: &Graph) -> Self {
        KeyJson {
            kind: key.kind().name().into(),
            literal: key.to_literal(g),
        }
    }

    pub fn to_key(&self, g: &Graph) -> Result<BasisKey> {
        BasisKey::parse(self.kind.parse()?, g, &self.literal)
    }
}

impl fmt::Display for KeyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
