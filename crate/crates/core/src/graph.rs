//! Labeled simple graphs and the graph operations the structure maps use.
//!
//! Vertices are stored sorted by label, so vertex indices follow the label
//! order and every canonical form derived from indices agrees with the one
//! derived from labels.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// An edge `(u, v)` between vertex indices with `u < v`.
pub type Edge = (u8, u8);

pub const MAX_VERTICES: usize = 64;

/// Characters reserved by the key literal grammar and the graph text format.
const RESERVED: &[char] = &[',', '|', '/', '<', '>', '-', '#', '"', '∅'];

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && !label.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

pub(crate) fn edge(u: usize, v: usize) -> Edge {
    debug_assert_ne!(u, v);
    if u < v {
        (u as u8, v as u8)
    } else {
        (v as u8, u as u8)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty() -> Self {
        Graph::default()
    }

    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut seen = BTreeSet::new();
        for v in vertices {
            let v: String = v.into();
            if !is_valid_label(&v) {
                return Err(Error::InvalidLabel(v));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v));
            }
            labels.push(v);
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        labels.sort();
        let mut g = Graph {
            adj: vec![0; labels.len()],
            labels,
        };
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = g.index_of(a).ok_or_else(|| Error::UnknownVertex(a.into()))?;
            let v = g.index_of(b).ok_or_else(|| Error::UnknownVertex(b.into()))?;
            if u == v {
                return Err(Error::Loop(a.into()));
            }
            if g.adjacent(u, v) {
                return Err(Error::DuplicateEdge(a.into(), b.into()));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph on vertices `0..n` given by index pairs; `labels` must already be sorted.
    pub(crate) fn from_indices(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph {
            adj: vec![0; labels.len()],
            labels,
        };
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Labels `v1, .., vn` as used by the test corpus.
    pub fn numbered_labels(n: usize) -> Vec<String> {
        let mut labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        labels.sort();
        labels
    }

    pub fn complete(labels: &[&str]) -> Result<Self> {
        let edges: Vec<(&str, &str)> = labels
            .iter()
            .enumerate()
            .flat_map(|(i, a)| labels[i + 1..].iter().map(move |b| (*a, *b)))
            .collect();
        Graph::new(labels.iter().copied(), edges)
    }

    pub fn discrete(labels: &[&str]) -> Result<Self> {
        Graph::new(labels.iter().copied(), std::iter::empty::<(&str, &str)>())
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// All vertices.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()).ok_or_else(|| Error::UnknownVertex(l.as_ref().into())))
            .collect()
    }

    pub fn set_labels(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.label(v)).collect()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.edges_within(self.vertices())
    }

    /// Edges with both endpoints in `s`, sorted.
    pub fn edges_within(&self, s: VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in s.iter() {
            for v in (VertexSet(self.adj[u]) & s).iter().filter(|&v| v > u) {
                out.push((u as u8, v as u8));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count_within(self.vertices())
    }

    pub fn edge_count_within(&self, s: VertexSet) -> usize {
        s.iter().map(|u| (self.adj[u] & s.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// `e(G, S, T)` without the disjointness check.
    pub(crate) fn cross(&self, s: VertexSet, t: VertexSet) -> u32 {
        s.iter().map(|u| (self.adj[u] & t.0).count_ones()).sum()
    }

    /// Non-edges between `s` and `t`, i.e. `e(Ḡ, S, T)` for disjoint sets.
    pub(crate) fn cross_complement(&self, s: VertexSet, t: VertexSet) -> u32 {
        (s.len() * t.len()) as u32 - self.cross(s, t)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let bad = (s - self.vertices()).min().unwrap_or(0);
            Err(Error::UnknownVertex(format!("#{bad}")))
        }
    }

    /// The number of edges with one endpoint in `s` and the other in `t`.
    pub fn crossing_edges(&self, s: VertexSet, t: VertexSet) -> Result<usize> {
        self.check_set(s)?;
        self.check_set(t)?;
        if !s.is_disjoint(t) {
            return Err(Error::Overlap);
        }
        Ok(self.cross(s, t) as usize)
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced_with_map(s).0)
    }

    /// The induced subgraph together with the map from its indices to ours.
    pub(crate) fn induced_with_map(&self, s: VertexSet) -> (Graph, Vec<u8>) {
        let map: Vec<u8> = s.iter().map(|v| v as u8).collect();
        let labels = map.iter().map(|&v| self.labels[v as usize].clone()).collect();
        let mut pos = [0u8; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let edges = self
            .edges_within(s)
            .into_iter()
            .map(|(u, v)| (pos[u as usize] as usize, pos[v as usize] as usize));
        (Graph::from_indices(labels, edges), map)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & full & !(1u64 << v))
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// The quotient `G/π`, with each block labeled by the concatenation of its
    /// member labels.
    pub fn quotient(&self, pi: &VertexPartition) -> Result<Graph> {
        if pi.ground() != self.vertices() {
            return Err(Error::InvalidPartition("blocks do not cover the vertex set".into()));
        }
        let names: Vec<String> = pi
            .blocks()
            .iter()
            .map(|b| b.iter().map(|v| self.label(v)).collect::<String>())
            .collect();
        let mut edges = Vec::new();
        for (i, &b) in pi.blocks().iter().enumerate() {
            for (j, &c) in pi.blocks().iter().enumerate().skip(i + 1) {
                if self.cross(b, c) > 0 {
                    edges.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        Graph::new(names, edges).map_err(|e| match e {
            Error::DuplicateVertex(l) => Error::InvalidPartition(format!("block label `{l}` is ambiguous")),
            e => e,
        })
    }

    /// The quotient graph of the vertex-index graph `(V, edges)` by `pi`, as an
    /// adjacency list over block positions.
    pub(crate) fn quotient_adjacency(pi: &VertexPartition, edges: &[Edge]) -> Vec<u64> {
        let blocks = pi.blocks();
        let mut block_of = [0usize; 64];
        for (i, b) in blocks.iter().enumerate() {
            for v in b.iter() {
                block_of[v] = i;
            }
        }
        let mut adj = vec![0u64; blocks.len()];
        for &(u, v) in edges {
            let (a, b) = (block_of[u as usize], block_of[v as usize]);
            if a != b {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        adj
    }

    /// Chromatic polynomial by deletion–contraction; entry `i` is the
    /// coefficient of `k^i`.
    pub fn chromatic_polynomial(&self) -> Vec<i64> {
        chromatic(self.adj.clone(), self.vertices().0)
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut declared = BTreeSet::new();
        let mut edge_set = BTreeSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens = tokenize(content);
            let Some(&(col, head)) = tokens.first() else {
                continue;
            };
            match head {
                "v" => {
                    if tokens.len() != 2 {
                        return Err(Error::parse(line, col, "expected `v <label>`"));
                    }
                    let (c, label) = tokens[1];
                    if !is_valid_label(label) {
                        return Err(Error::parse(line, c, format!("invalid vertex label `{label}`")));
                    }
                    if !declared.insert(label.to_string()) {
                        return Err(Error::parse(line, c, format!("duplicate vertex `{label}`")));
                    }
                    labels.push(label.to_string());
                }
                "e" => {
                    if tokens.len() != 3 {
                        return Err(Error::parse(line, col, "expected `e <label> <label>`"));
                    }
                    let (ca, a) = tokens[1];
                    let (cb, b) = tokens[2];
                    for (c, l) in [(ca, a), (cb, b)] {
                        if !declared.contains(l) {
                            return Err(Error::parse(line, c, format!("undeclared vertex `{l}`")));
                        }
                    }
                    if a == b {
                        return Err(Error::parse(line, cb, format!("loop at vertex `{a}`")));
                    }
                    let key = if a < b { (a, b) } else { (b, a) };
                    if !edge_set.insert((key.0.to_string(), key.1.to_string())) {
                        return Err(Error::parse(line, ca, format!("duplicate edge {a}-{b}")));
                    }
                    edges.push((a.to_string(), b.to_string()));
                }
                other => {
                    return Err(Error::parse(line, col, format!("unknown directive `{other}`")));
                }
            }
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        Graph::new(labels, edges)
    }

    /// Canonical text serialization: sorted vertices, then sorted edges.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            out.push_str("v ");
            out.push_str(l);
            out.push('\n');
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", self.label(u as usize), self.label(v as usize)));
        }
        out
    }

    /// One-line canonical form, e.g. `a,b,c|a-b,b-c`.
    pub fn compact(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.label(u as usize), self.label(v as usize)))
            .collect();
        format!("{}|{}", self.labels.join(","), edges.join(","))
    }

    pub fn parse_compact(s: &str) -> Result<Graph> {
        let (vs, es) = s
            .split_once('|')
            .ok_or_else(|| Error::parse(1, 1, "expected `<vertices>|<edges>`"))?;
        let vertices: Vec<&str> = vs.split(',').filter(|v| !v.is_empty()).collect();
        let mut edges = Vec::new();
        for e in es.split(',').filter(|e| !e.is_empty()) {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| Error::parse(1, 1, format!("malformed edge `{e}`")))?;
            edges.push((a, b));
        }
        Graph::new(vertices, edges)
    }
}

fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((line[..s].chars().count() + 1, &line[s..]));
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.compact())
    }
}

fn poly_sub(a: &mut Vec<i64>, b: &[i64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.checked_sub(*y).expect("chromatic polynomial coefficient overflow");
    }
}

fn chromatic(mut adj: Vec<u64>, alive: u64) -> Vec<i64> {
    let n = alive.count_ones() as usize;
    let Some(u) = VertexSet(alive).iter().find(|&u| adj[u] & alive != 0) else {
        let mut p = vec![0; n + 1];
        p[n] = 1;
        return p;
    };
    // complete graphs have the falling factorial k(k-1)..(k-n+1)
    if VertexSet(alive).iter().all(|v| adj[v] & alive == alive & !(1 << v)) {
        let mut p = vec![1i64];
        for i in 0..n as i64 {
            let mut next = vec![0; p.len() + 1];
            for (d, &c) in p.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= i * c;
            }
            p = next;
        }
        return p;
    }
    let v = (adj[u] & alive).trailing_zeros() as usize;

    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    let mut result = chromatic(deleted, alive);

    // contract v into u
    let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    adj[u] = merged;
    for w in VertexSet(merged & alive).iter() {
        adj[w] = (adj[w] & !(1 << v)) | (1 << u);
    }
    adj[v] = 0;
    let contracted = chromatic(adj, alive & !(1 << v));
    poly_sub(&mut result, &contracted);
    while result.len() > 1 && result.last() == Some(&0) {
        result.pop();
    }
    result
}

/// Evaluate an integer polynomial given as a coefficient list.
pub fn eval_int_poly(p: &[i64], x: i64) -> i64 {
    p.iter().rev().fold(0i64, |acc, &c| acc * x + c)
}

/// A set partition of a vertex set, blocks sorted by least vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct VertexPartition {
    blocks: Vec<VertexSet>,
}

impl VertexPartition {
    /// Validates that `blocks` are nonempty, pairwise disjoint and cover `ground`.
    pub fn new(blocks: Vec<VertexSet>, ground: VertexSet) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            seen = seen | b;
        }
        if seen != ground {
            return Err(Error::InvalidPartition("blocks do not cover the ground set".into()));
        }
        Ok(Self::from_blocks(blocks))
    }

    /// Canonicalizes without validation.
    pub(crate) fn from_blocks(mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort_by_key(|b| VertexSet::min(*b));
        VertexPartition { blocks }
    }

    pub fn singletons(s: VertexSet) -> Self {
        VertexPartition {
            blocks: s.iter().map(VertexSet::singleton).collect(),
        }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<VertexSet> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> VertexSet {
        self.blocks.iter().fold(VertexSet::EMPTY, |a, &b| a | b)
    }

    /// `π|_S`: intersect every block with `s`, dropping empty blocks.
    /// Blocks are re-sorted, since restriction can change their minima.
    pub fn restrict(&self, s: VertexSet) -> Self {
        Self::from_blocks(self.blocks.iter().map(|&b| b & s).filter(|b| !b.is_empty()).collect())
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &VertexPartition) -> Result<bool> {
        if self.ground() != other.ground() {
            return Err(Error::Mismatch("partitions of different ground sets".into()));
        }
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &VertexPartition) -> bool {
        self.blocks.iter().all(|&b| other.blocks.iter().any(|&c| b.is_subset(c)))
    }
}

/// An ordered pair `S|T` of complementary vertex subsets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OrderedBipartition {
    pub first: VertexSet,
    pub second: VertexSet,
}

impl OrderedBipartition {
    pub fn new(first: VertexSet, second: VertexSet, ground: VertexSet) -> Result<Self> {
        if !first.is_disjoint(second) {
            return Err(Error::Overlap);
        }
        if first | second != ground {
            return Err(Error::Mismatch("bipartition does not cover the vertex set".into()));
        }
        Ok(OrderedBipartition { first, second })
    }
}

/// Connected components of `(vertices, edges)`.
pub fn components_partition(vertices: VertexSet, edges: &[Edge]) -> Result<VertexPartition> {
    for &(u, v) in edges {
        for w in [u, v] {
            if !vertices.contains(w as usize) {
                return Err(Error::UnknownVertex(format!("#{w}")));
            }
        }
    }
    Ok(components_unchecked(vertices, edges))
}

pub(crate) fn components_unchecked(vertices: VertexSet, edges: &[Edge]) -> VertexPartition {
    let mut blocks: Vec<VertexSet> = vertices.iter().map(VertexSet::singleton).collect();
    for &(u, v) in edges {
        let i = blocks.iter().position(|b| b.contains(u as usize)).unwrap();
        let j = blocks.iter().position(|b| b.contains(v as usize)).unwrap();
        if i != j {
            let merged = blocks[i] | blocks[j];
            let (lo, hi) = (i.min(j), i.max(j));
            blocks[lo] = merged;
            blocks.swap_remove(hi);
        }
    }
    VertexPartition::from_blocks(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::fixtures::{funmath, path3 as p3};

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::new(["a", "a"], Vec::<(&str, &str)>::new()), Err(Error::DuplicateVertex("a".into())));
        assert_eq!(Graph::new(["a"], [("a", "a")]), Err(Error::Loop("a".into())));
        assert_eq!(Graph::new(["a", "b"], [("a", "c")]), Err(Error::UnknownVertex("c".into())));
        assert!(matches!(Graph::new(["a", "b"], [("a", "b"), ("b", "a")]), Err(Error::DuplicateEdge(..))));
        assert!(matches!(Graph::new(["a,b"], Vec::<(&str, &str)>::new()), Err(Error::InvalidLabel(_))));
        let many: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert_eq!(Graph::new(many, Vec::<(&str, &str)>::new()), Err(Error::TooManyVertices(65)));
        assert!(Graph::empty().is_empty());
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = p3();
        let s = g.set_of(&["a", "c"]).unwrap();
        let sub = g.induced_subgraph(s).unwrap();
        assert_eq!(sub.labels(), ["a", "c"]);
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
        assert_eq!(g.induced_subgraph(VertexSet::EMPTY).unwrap(), Graph::empty());
        assert!(g.induced_subgraph(VertexSet(0b1000)).is_err());
    }

    #[test]
    fn complement_examples() {
        let c = p3().complement();
        assert_eq!(c.compact(), "a,b,c|a-c");
        let k3 = Graph::complete(&["a", "b", "c"]).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);
        assert_eq!(Graph::empty().complement(), Graph::empty());
        assert_eq!(p3().complement().complement(), p3());
    }

    #[test]
    fn quotient_examples() {
        let g = p3();
        let pi = VertexPartition::new(vec![VertexSet(0b011), VertexSet(0b100)], g.vertices()).unwrap();
        let q = g.quotient(&pi).unwrap();
        assert_eq!(q.compact(), "ab,c|ab-c");
        let q = g.quotient(&VertexPartition::singletons(g.vertices())).unwrap();
        assert_eq!(q, g);
        let k3 = Graph::complete(&["a", "b", "c"]).unwrap();
        let q = k3.quotient(&VertexPartition::new(vec![k3.vertices()], k3.vertices()).unwrap()).unwrap();
        assert_eq!(q.compact(), "abc|");
        let partial = VertexPartition::new(vec![VertexSet(0b011)], VertexSet(0b011)).unwrap();
        assert!(g.quotient(&partial).is_err());
    }

    #[test]
    fn quotient_detects_ambiguous_block_labels() {
        let g = Graph::new(["a", "b", "ab"], Vec::<(&str, &str)>::new()).unwrap();
        let ab = g.set_of(&["a", "b"]).unwrap();
        let lone = g.set_of(&["ab"]).unwrap();
        let pi = VertexPartition::new(vec![ab, lone], g.vertices()).unwrap();
        assert!(matches!(g.quotient(&pi), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn crossing_edge_examples() {
        let g = funmath();
        let s = g.set_of(&["f", "u", "n"]).unwrap();
        let t = g.set_of(&["m", "a", "t", "h"]).unwrap();
        assert_eq!(g.crossing_edges(s, t), Ok(3));
        assert_eq!(g.edge_count(), 10);
        let p = p3();
        assert_eq!(p.crossing_edges(p.set_of(&["a"]).unwrap(), p.set_of(&["b", "c"]).unwrap()), Ok(1));
        assert_eq!(p.crossing_edges(VertexSet::EMPTY, p.vertices()), Ok(0));
        assert_eq!(p.crossing_edges(VertexSet(0b011), VertexSet(0b110)), Err(Error::Overlap));
    }

    #[test]
    fn components_examples() {
        let v = VertexSet::full(3);
        let pi = components_partition(v, &[(0, 1)]).unwrap();
        assert_eq!(pi.blocks(), [VertexSet(0b011), VertexSet(0b100)]);
        assert_eq!(components_partition(v, &[]).unwrap(), VertexPartition::singletons(v));
        assert_eq!(components_partition(v, &[(0, 1), (1, 2)]).unwrap().blocks(), [v]);
        assert!(components_partition(VertexSet(0b011), &[(1, 2)]).is_err());
        assert!(components_partition(VertexSet::EMPTY, &[]).unwrap().is_empty());
    }

    #[test]
    fn chromatic_examples() {
        let k3 = Graph::complete(&["a", "b", "c"]).unwrap();
        // k(k-1)(k-2) = k^3 - 3k^2 + 2k
        assert_eq!(k3.chromatic_polynomial(), vec![0, 2, -3, 1]);
        let d4 = Graph::discrete(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(d4.chromatic_polynomial(), vec![0, 0, 0, 0, 1]);
        // k(k-1)^2 = k^3 - 2k^2 + k
        assert_eq!(p3().chromatic_polynomial(), vec![0, 1, -2, 1]);
        assert_eq!(Graph::empty().chromatic_polynomial(), vec![1]);
        // 4-cycle: (k-1)^4 + (k-1)
        let c4 = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]).unwrap();
        assert_eq!(c4.chromatic_polynomial(), vec![0, -3, 6, -4, 1]);
        assert_eq!(eval_int_poly(&c4.chromatic_polynomial(), 3), 18);
    }

    #[test]
    fn partition_refinement() {
        let v = VertexSet::full(3);
        let ab_c = VertexPartition::new(vec![VertexSet(0b011), VertexSet(0b100)], v).unwrap();
        let ac_b = VertexPartition::new(vec![VertexSet(0b101), VertexSet(0b010)], v).unwrap();
        let bottom = VertexPartition::singletons(v);
        assert_eq!(bottom.refines(&ab_c), Ok(true));
        assert_eq!(ab_c.refines(&ac_b), Ok(false));
        assert_eq!(ab_c.refines(&ab_c), Ok(true));
        assert!(ab_c.refines(&VertexPartition::singletons(VertexSet(0b11))).is_err());
        assert!(VertexPartition::new(vec![VertexSet(0b011), VertexSet(0b110)], v).is_err());
        assert!(VertexPartition::new(vec![VertexSet(0b011)], v).is_err());
    }

    #[test]
    fn restriction_stays_canonical() {
        let v = VertexSet::full(3);
        let ac_b = VertexPartition::new(vec![VertexSet(0b101), VertexSet(0b010)], v).unwrap();
        let r = ac_b.restrict(VertexSet(0b110));
        assert_eq!(r.blocks(), &[VertexSet(0b010), VertexSet(0b100)]);
        assert_eq!(r, VertexPartition::singletons(VertexSet(0b110)));
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let text = "# path\nv b\nv a\nv c\ne a b   # first edge\ne c b\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, p3());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert_eq!(Graph::parse_compact(&g.compact()).unwrap(), g);

        let err = Graph::parse("v a\nv a\n").unwrap_err();
        assert_eq!(err, Error::parse(2, 3, "duplicate vertex `a`"));
        let err = Graph::parse("v a\ne a  zz\n").unwrap_err();
        assert_eq!(err, Error::parse(2, 6, "undeclared vertex `zz`"));
        assert!(matches!(Graph::parse("v a\ne a a\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("v a\nv b\ne a b\ne b a\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(Graph::parse("x a\n"), Err(Error::Parse { line: 1, column: 1, .. })));
    }
}
