//! Loop-free digraphs on labeled vertices, the (A1)/(A2) triple conditions
//! relative to a vertex numbering, and detection of the three 3-vertex
//! obstruction patterns.
//!
//! Vertices are labeled `0..n-1`. Ordered pairs `(i, j)` and `(j, i)` are
//! distinct edges and may be present simultaneously; loops never are.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Hard cap on exhaustive digraph enumeration: `2^(n(n-1))` graphs.
pub const MAX_ENUM_VERTICES: usize = 5;

const TRIPLE_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// A loop-free directed graph on `n` labeled vertices.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>, // row-major n*n adjacency matrix
}

impl Digraph {
    /// Builds a digraph from an edge list. Duplicate edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![false; n * n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) out of range for n={n}"
                )));
            }
            if i == j {
                return Err(Error::InvalidInput(format!("loop ({i}, {i}) not allowed")));
            }
            adj[i * n + j] = true;
        }
        Ok(Digraph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// The complete bidirected digraph: both arcs on every pair.
    pub fn complete_bidirected(n: usize) -> Self {
        let mut adj = vec![true; n * n];
        for v in 0..n {
            adj[v * n + v] = false;
        }
        Digraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    /// The indicator used by the deformation's offset lists: 1 when the
    /// arc `(i, j)` is present, 0 otherwise.
    #[inline]
    pub fn epsilon(&self, i: usize, j: usize) -> i64 {
        i64::from(self.has_edge(i, j))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.adj[i * self.n + j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    /// The edge set packed into a `u64`, bit `arc_index(i, j)` per arc.
    /// `None` when `n(n-1) > 64`.
    pub fn arc_mask(&self) -> Option<u64> {
        if self.n > 8 {
            return None;
        }
        let mut mask = 0u64;
        for (i, j) in self.edges() {
            mask |= 1 << arc_index(self.n, i, j);
        }
        Some(mask)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        check_permutation(self.n, perm)?;
        let mut adj = vec![false; self.n * self.n];
        for (i, j) in self.edges() {
            adj[perm[i] * self.n + perm[j]] = true;
        }
        Ok(Digraph { n: self.n, adj })
    }

    /// The induced subgraph on the given distinct labels; vertex `a` of the
    /// result corresponds to `vertices[a]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Digraph> {
        let m = vertices.len();
        for (idx, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for n={}",
                    self.n
                )));
            }
            if vertices[..idx].contains(&v) {
                return Err(Error::InvalidInput(format!("duplicate vertex {v}")));
            }
        }
        let mut adj = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                if a != b && self.has_edge(vertices[a], vertices[b]) {
                    adj[a * m + b] = true;
                }
            }
        }
        Ok(Digraph { n: m, adj })
    }

    /// Checks (A1) and (A2) under a fixed numbering. For every triple with
    /// positions `i, j < k`, both orders of the two lower-position vertices:
    /// (A1) `(i,j) ∈ E ⟹ (i,k) ∈ E or (k,j) ∈ E`, and
    /// (A2) `(i,k) ∈ E and (k,j) ∈ E ⟹ (i,j) ∈ E`.
    pub fn satisfies_a1_a2_under(&self, ord: &VertexOrdering) -> bool {
        assert_eq!(ord.n(), self.n, "ordering size mismatch");
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    let (u, v, top) = split_by_top(ord, a, b, c);
                    if !self.a1_a2_triple_ok(u, v, top) || !self.a1_a2_triple_ok(v, u, top) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[inline]
    fn a1_a2_triple_ok(&self, i: usize, j: usize, k: usize) -> bool {
        if self.has_edge(i, j) && !(self.has_edge(i, k) || self.has_edge(k, j)) {
            return false; // A1
        }
        if self.has_edge(i, k) && self.has_edge(k, j) && !self.has_edge(i, j) {
            return false; // A2
        }
        true
    }

    /// Searches for a numbering satisfying (A1)/(A2); returns the one whose
    /// vertex sequence (position 0 upward) is lexicographically smallest.
    ///
    /// Backtracking over partial sequences: a triple is checked as soon as
    /// its highest-position vertex is placed, so violating prefixes are
    /// abandoned early.
    pub fn find_a1_a2_ordering(&self) -> Option<VertexOrdering> {
        let mut seq = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        if self.a1a2_search(&mut seq, &mut used) {
            Some(VertexOrdering::from_sequence(&seq).expect("search yields a permutation"))
        } else {
            None
        }
    }

    fn a1a2_search(&self, seq: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if seq.len() == self.n {
            return true;
        }
        'cand: for w in 0..self.n {
            if used[w] {
                continue;
            }
            for (x, &u) in seq.iter().enumerate() {
                for &v in &seq[x + 1..] {
                    if !self.a1_a2_triple_ok(u, v, w) || !self.a1_a2_triple_ok(v, u, w) {
                        continue 'cand;
                    }
                }
            }
            seq.push(w);
            used[w] = true;
            if self.a1a2_search(seq, used) {
                return true;
            }
            seq.pop();
            used[w] = false;
        }
        false
    }

    /// Finds a 3-vertex induced subgraph whose edge set is exactly one of
    /// the obstruction patterns, trying all six relabelings of each triple.
    /// Matching is on the exact induced edge set, not a sub-pattern.
    pub fn find_forbidden_triple(&self) -> Option<ForbiddenPattern> {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    let t = [a, b, c];
                    let count = self.count_edges_within(&t);
                    if !(2..=4).contains(&count) {
                        continue;
                    }
                    for p in TRIPLE_PERMS {
                        let (i, j, k) = (t[p[0]], t[p[1]], t[p[2]]);
                        if let Some(kind) = self.match_pattern(i, j, k) {
                            return Some(ForbiddenPattern {
                                kind,
                                witness: (i, j, k),
                            });
                        }
                    }
                }
            }
        }
        None
    }

    fn count_edges_within(&self, t: &[usize; 3]) -> usize {
        let mut c = 0;
        for &i in t {
            for &j in t {
                if i != j && self.has_edge(i, j) {
                    c += 1;
                }
            }
        }
        c
    }

    fn match_pattern(&self, i: usize, j: usize, k: usize) -> Option<PatternKind> {
        let e = [
            self.has_edge(i, j),
            self.has_edge(i, k),
            self.has_edge(j, i),
            self.has_edge(j, k),
            self.has_edge(k, i),
            self.has_edge(k, j),
        ];
        match e {
            [true, false, false, true, false, false] => Some(PatternKind::Path),
            [true, false, false, true, true, false] => Some(PatternKind::Cycle),
            [true, true, false, true, true, false] => Some(PatternKind::CyclePlusChord),
            _ => None,
        }
    }

    /// Text form: `n <count>` then one `i j` line per edge.
    pub fn to_text_format(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }

    /// Parses the text form. `#` starts a comment; blank lines are skipped.
    pub fn from_text_format(input: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let first = it.next().unwrap();
            if n.is_none() {
                if first != "n" {
                    return Err(Error::Parse(format!(
                        "line {}: expected `n <count>`, got `{line}`",
                        lineno + 1
                    )));
                }
                let count = it
                    .next()
                    .ok_or_else(|| Error::Parse("missing vertex count after `n`".into()))?;
                n = Some(
                    count
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex count `{count}`")))?,
                );
            } else {
                let i: usize = first
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {}: bad edge `{line}`", lineno + 1)))?;
                let j: usize = it.next().and_then(|s| s.parse().ok()).ok_or_else(|| {
                    Error::Parse(format!("line {}: bad edge `{line}`", lineno + 1))
                })?;
                edges.push((i, j));
            }
            if it.next().is_some() {
                return Err(Error::Parse(format!(
                    "line {}: trailing tokens in `{line}`",
                    lineno + 1
                )));
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n <count>` line".into()))?;
        Digraph::new(n, edges)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=", self.n)?;
        let edges = self.edges();
        if edges.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (idx, (i, j)) in edges.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphData {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DigraphData {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let data = DigraphData::deserialize(deserializer)?;
        Digraph::new(data.n, data.edges).map_err(D::Error::custom)
    }
}

/// A numbering of the vertices: `position(v)` is the 0-based place of
/// vertex `v`, smaller position meaning smaller number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexOrdering {
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            pos: (0..n).collect(),
        }
    }

    /// From the vertex→position map.
    pub fn from_positions(pos: Vec<usize>) -> Result<Self> {
        check_permutation(pos.len(), &pos)?;
        Ok(VertexOrdering { pos })
    }

    /// From the position→vertex sequence (`seq[p]` is placed at position `p`).
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        check_permutation(seq.len(), seq)?;
        let mut pos = vec![0; seq.len()];
        for (p, &v) in seq.iter().enumerate() {
            pos[v] = p;
        }
        Ok(VertexOrdering { pos })
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    /// Vertices listed by increasing position.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.pos.len()];
        for (v, &p) in self.pos.iter().enumerate() {
            seq[p] = v;
        }
        seq
    }

    /// The ordering induced on relabeled vertices: the new label `perm[v]`
    /// keeps the position of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<VertexOrdering> {
        check_permutation(self.pos.len(), perm)?;
        let mut pos = vec![0; self.pos.len()];
        for (v, &p) in self.pos.iter().enumerate() {
            pos[perm[v]] = p;
        }
        Ok(VertexOrdering { pos })
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = self.sequence();
        write!(f, "[")?;
        for (idx, v) in seq.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for VertexOrdering {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sequence().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexOrdering {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let seq = Vec::<usize>::deserialize(deserializer)?;
        VertexOrdering::from_sequence(&seq).map_err(D::Error::custom)
    }
}

/// The three obstruction patterns on a triple `(i, j, k)`, identified by
/// their exact induced edge sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum PatternKind {
    /// `{(i,j), (j,k)}`
    Path,
    /// `{(i,j), (j,k), (k,i)}`
    Cycle,
    /// `{(i,j), (j,k), (k,i), (i,k)}`
    CyclePlusChord,
}

impl PatternKind {
    /// The pattern's edge set on local labels 0, 1, 2 standing for `(i, j, k)`.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::Path => &[(0, 1), (1, 2)],
            PatternKind::Cycle => &[(0, 1), (1, 2), (2, 0)],
            PatternKind::CyclePlusChord => &[(0, 1), (1, 2), (2, 0), (0, 2)],
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternKind::Path => "Path",
            PatternKind::Cycle => "Cycle",
            PatternKind::CyclePlusChord => "CyclePlusChord",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ForbiddenPattern {
    pub kind: PatternKind,
    pub witness: (usize, usize, usize),
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.witness;
        write!(f, "{} witness=({i},{j},{k})", self.kind)
    }
}

/// Restartable enumeration of all digraphs on `n` labeled vertices in
/// mask order; cloning yields an independent stream.
#[derive(Clone)]
pub struct DigraphEnumeration {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for DigraphEnumeration {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.end {
            return None;
        }
        let g = digraph_from_index(self.n, self.next).expect("index in range");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.end - self.next) as usize;
        (rem, Some(rem))
    }
}

impl ExactSizeIterator for DigraphEnumeration {}

/// All `2^(n(n-1))` digraphs on `n` labeled vertices, each exactly once.
pub fn enumerate_digraphs(n: usize) -> Result<DigraphEnumeration> {
    let end = digraph_count(n)?;
    Ok(DigraphEnumeration { n, next: 0, end })
}

pub fn digraph_count(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::InvalidInput(format!(
            "enumeration supports 1 ≤ n ≤ {MAX_ENUM_VERTICES}, got {n}"
        )));
    }
    Ok(1u64 << (n * (n - 1)))
}

/// The digraph at a given position of the enumeration order: bit
/// `arc_index(n, i, j)` of `index` switches the arc `(i, j)`.
pub fn digraph_from_index(n: usize, index: u64) -> Result<Digraph> {
    let count = digraph_count(n)?;
    if index >= count {
        return Err(Error::InvalidInput(format!(
            "index {index} out of range for n={n}"
        )));
    }
    let mut adj = vec![false; n * n];
    let mut bit = 0;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if index >> bit & 1 == 1 {
                adj[i * n + j] = true;
            }
            bit += 1;
        }
    }
    Ok(Digraph { n, adj })
}

/// Position of arc `(i, j)` in the enumeration's bit order.
pub fn arc_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    i * (n - 1) + if j < i { j } else { j - 1 }
}

fn check_permutation(n: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidInput(format!(
            "permutation length {} does not match n={n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidInput(format!("not a permutation: {perm:?}")));
        }
        seen[p] = true;
    }
    Ok(())
}

fn split_by_top(ord: &VertexOrdering, a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let (pa, pb, pc) = (ord.position(a), ord.position(b), ord.position(c));
    if pa > pb && pa > pc {
        (b, c, a)
    } else if pb > pa && pb > pc {
        (a, c, b)
    } else {
        (a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Digraph::new(3, [(0, 0)]).is_err());
        assert!(Digraph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn a1_a2_empty_graph_is_vacuous() {
        let e = Digraph::empty(3);
        assert!(e.satisfies_a1_a2_under(&VertexOrdering::identity(3)));
    }

    #[test]
    fn a1_a2_directed_path_fails_all_orderings() {
        let path = g(3, &[(0, 1), (1, 2)]);
        for seq in crate::test_util::permutations(3) {
            let ord = VertexOrdering::from_sequence(&seq).unwrap();
            assert!(!path.satisfies_a1_a2_under(&ord), "ordering {seq:?}");
        }
        assert!(path.find_a1_a2_ordering().is_none());
    }

    #[test]
    fn a1_a2_complete_bidirected_holds() {
        let k4 = Digraph::complete_bidirected(4);
        assert!(k4.satisfies_a1_a2_under(&VertexOrdering::identity(4)));
    }

    #[test]
    fn ordering_search_on_three_cycle_is_absent() {
        let cycle = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(cycle.find_a1_a2_ordering().is_none());
    }

    #[test]
    fn ordering_search_on_empty_graph_is_identity() {
        let e = Digraph::empty(5);
        assert_eq!(e.find_a1_a2_ordering(), Some(VertexOrdering::identity(5)));
    }

    #[test]
    fn ordering_search_transitive_triangle_exists() {
        let t = g(3, &[(0, 1), (0, 2), (2, 1)]);
        let ord = t.find_a1_a2_ordering().expect("satisfiable");
        assert!(t.satisfies_a1_a2_under(&ord));
    }

    #[test]
    fn induced_subgraph_restricts_edges() {
        let k4 = Digraph::complete_bidirected(4);
        assert_eq!(
            k4.induced_subgraph(&[0, 1, 2]).unwrap(),
            Digraph::complete_bidirected(3)
        );

        let h = g(4, &[(0, 1), (1, 2), (3, 0)]);
        assert_eq!(
            h.induced_subgraph(&[0, 1, 2]).unwrap(),
            g(3, &[(0, 1), (1, 2)])
        );

        let single = h.induced_subgraph(&[2]).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_relabels_by_list_order() {
        let h = g(3, &[(0, 2)]);
        assert_eq!(h.induced_subgraph(&[2, 0]).unwrap(), g(2, &[(1, 0)]));
    }

    #[test]
    fn induced_subgraph_rejects_bad_lists() {
        let h = Digraph::empty(3);
        assert!(h.induced_subgraph(&[0, 0]).is_err());
        assert!(h.induced_subgraph(&[0, 5]).is_err());
    }

    #[test]
    fn forbidden_triple_path() {
        let path = g(3, &[(0, 1), (1, 2)]);
        let found = path.find_forbidden_triple().unwrap();
        assert_eq!(found.kind, PatternKind::Path);
        assert_eq!(found.witness, (0, 1, 2));
    }

    #[test]
    fn forbidden_triple_absent_in_complete_bidirected() {
        assert!(Digraph::complete_bidirected(4)
            .find_forbidden_triple()
            .is_none());
    }

    #[test]
    fn forbidden_triple_cycle_plus_chord() {
        let h = g(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
        let found = h.find_forbidden_triple().unwrap();
        assert_eq!(found.kind, PatternKind::CyclePlusChord);
    }

    #[test]
    fn forbidden_triple_needs_three_vertices() {
        assert!(g(2, &[(0, 1)]).find_forbidden_triple().is_none());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_digraphs(2).unwrap().count(), 4);
        assert_eq!(enumerate_digraphs(3).unwrap().count(), 64);
        assert_eq!(enumerate_digraphs(4).unwrap().count(), 4096);
        assert!(enumerate_digraphs(6).is_err());
        assert!(enumerate_digraphs(0).is_err());
    }

    #[test]
    fn enumeration_has_no_duplicates_n3() {
        let all: std::collections::HashSet<_> = enumerate_digraphs(3)
            .unwrap()
            .map(|g| g.arc_mask().unwrap())
            .collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn text_format_round_trip() {
        let h = g(3, &[(0, 1), (1, 2)]);
        let text = h.to_text_format();
        assert_eq!(Digraph::from_text_format(&text).unwrap(), h);

        let with_comments = "# a digraph\nn 3\n0 1 # first arc\n\n1 2\n";
        assert_eq!(Digraph::from_text_format(with_comments).unwrap(), h);
        assert!(Digraph::from_text_format("0 1\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let h = g(3, &[(0, 1), (1, 2)]);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<Digraph>(&json).unwrap(), h);
        assert!(serde_json::from_str::<Digraph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
