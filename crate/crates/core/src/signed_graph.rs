//! Signed graphs, the digraph→signed-graph map, signed eliminability
//! (SE1/SE2), the lifting enumeration back to digraphs, and the
//! multiplicity map induced on the braid arrangement by restriction to
//! the infinite hyperplane.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::digraph::{Digraph, VertexOrdering};
use crate::{Error, Result};

/// Sign of an unordered pair: positive edge, negative edge, or neither.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeSign {
    Plus,
    Minus,
    Neutral,
}

/// A graph on `n` labeled vertices with disjoint sets of positive and
/// negative unordered edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    sign: Vec<EdgeSign>, // indexed by pair_index
}

impl SignedGraph {
    pub fn new(n: usize, plus: &[(usize, usize)], minus: &[(usize, usize)]) -> Result<Self> {
        let mut sg = SignedGraph {
            n,
            sign: vec![EdgeSign::Neutral; n * n.saturating_sub(1) / 2],
        };
        for (&(i, j), s) in plus
            .iter()
            .map(|e| (e, EdgeSign::Plus))
            .chain(minus.iter().map(|e| (e, EdgeSign::Minus)))
        {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!(
                    "pair {{{i}, {j}}} out of range for n={n}"
                )));
            }
            if i == j {
                return Err(Error::InvalidInput(format!(
                    "pair {{{i}, {i}}} not allowed"
                )));
            }
            let idx = pair_index(n, i, j);
            match (sg.sign[idx], s) {
                (EdgeSign::Neutral, _) => sg.sign[idx] = s,
                (prev, s) if prev == s => {} // duplicate listing
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "pair {{{i}, {j}}} listed both positive and negative"
                    )))
                }
            }
        }
        Ok(sg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> EdgeSign {
        self.sign[pair_index(self.n, i, j)]
    }

    pub fn plus_edges(&self) -> Vec<(usize, usize)> {
        self.edges_with(EdgeSign::Plus)
    }

    pub fn minus_edges(&self) -> Vec<(usize, usize)> {
        self.edges_with(EdgeSign::Minus)
    }

    pub fn neutral_pairs(&self) -> Vec<(usize, usize)> {
        self.edges_with(EdgeSign::Neutral)
    }

    fn edges_with(&self, s: EdgeSign) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.sign(i, j) == s {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph> {
        let plus: Vec<_> = self
            .plus_edges()
            .iter()
            .map(|&(i, j)| (perm[i], perm[j]))
            .collect();
        let minus: Vec<_> = self
            .minus_edges()
            .iter()
            .map(|&(i, j)| (perm[i], perm[j]))
            .collect();
        SignedGraph::new(self.n, &plus, &minus)
    }

    /// Checks SE1/SE2 under a fixed numbering. For every triple with
    /// positions `i, j < k` and both roles of `i, j`:
    /// (SE1) `{k,i} ∈ E_μ and {i,j} ∈ E_ν with {μ,ν} = {+,−} ⟹ {k,j} ∈ E_ν`,
    /// (SE2) `{k,i} ∈ E_μ and {k,j} ∈ E_μ ⟹ {i,j} ∈ E_μ`.
    pub fn is_signed_eliminable_under(&self, ord: &VertexOrdering) -> bool {
        assert_eq!(ord.n(), self.n, "ordering size mismatch");
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    let (u, v, top) = split_by_top(ord, a, b, c);
                    if !self.se_triple_ok(u, v, top) || !self.se_triple_ok(v, u, top) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[inline]
    fn se_triple_ok(&self, i: usize, j: usize, k: usize) -> bool {
        let ki = self.sign(k, i);
        let ij = self.sign(i, j);
        let kj = self.sign(k, j);
        // SE1: mixed signs on {k,i}, {i,j} force {k,j} to carry the {i,j} sign.
        if ki != EdgeSign::Neutral && ij != EdgeSign::Neutral && ki != ij && kj != ij {
            return false;
        }
        // SE2: equal signs on {k,i}, {k,j} force {i,j} to carry the same sign.
        if ki != EdgeSign::Neutral && kj == ki && ij != ki {
            return false;
        }
        true
    }

    /// Searches for a signed elimination ordering; returns the one with
    /// lexicographically smallest vertex sequence, if any exists.
    pub fn find_elimination_ordering(&self) -> Option<VertexOrdering> {
        let mut seq = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        if self.elimination_search(&mut seq, &mut used) {
            Some(VertexOrdering::from_sequence(&seq).expect("search yields a permutation"))
        } else {
            None
        }
    }

    fn elimination_search(&self, seq: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if seq.len() == self.n {
            return true;
        }
        'cand: for w in 0..self.n {
            if used[w] {
                continue;
            }
            for (x, &u) in seq.iter().enumerate() {
                for &v in &seq[x + 1..] {
                    if !self.se_triple_ok(u, v, w) || !self.se_triple_ok(v, u, w) {
                        continue 'cand;
                    }
                }
            }
            seq.push(w);
            used[w] = true;
            if self.elimination_search(seq, used) {
                return true;
            }
            seq.pop();
            used[w] = false;
        }
        false
    }

    /// All digraphs mapping to this signed graph: positive pairs carry both
    /// arcs, negative pairs none, and each neutral pair one arc in either
    /// direction — `2^(#neutral)` digraphs.
    pub fn enumerate_liftings(&self) -> LiftingEnumeration {
        LiftingEnumeration {
            base: self.clone(),
            neutral: self.neutral_pairs(),
            next: 0,
        }
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SignedGraph(n={}, plus={:?}, minus={:?})",
            self.n,
            self.plus_edges(),
            self.minus_edges()
        )
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=", self.n)?;
        let plus = self.plus_edges();
        let minus = self.minus_edges();
        if plus.is_empty() && minus.is_empty() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        for (i, j) in plus {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "+{{{i},{j}}}")?;
            first = false;
        }
        for (i, j) in minus {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "-{{{i},{j}}}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SignedGraphData {
    n: usize,
    plus: Vec<(usize, usize)>,
    minus: Vec<(usize, usize)>,
}

impl Serialize for SignedGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SignedGraphData {
            n: self.n,
            plus: self.plus_edges(),
            minus: self.minus_edges(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let data = SignedGraphData::deserialize(deserializer)?;
        SignedGraph::new(data.n, &data.plus, &data.minus).map_err(D::Error::custom)
    }
}

/// Restartable stream over the liftings of a signed graph. Bit `b` of the
/// stream position flips the direction chosen for the `b`-th neutral pair.
#[derive(Clone)]
pub struct LiftingEnumeration {
    base: SignedGraph,
    neutral: Vec<(usize, usize)>,
    next: u64,
}

impl Iterator for LiftingEnumeration {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= 1u64 << self.neutral.len() {
            return None;
        }
        let choice = self.next;
        self.next += 1;
        let mut edges = Vec::new();
        for (i, j) in self.base.plus_edges() {
            edges.push((i, j));
            edges.push((j, i));
        }
        for (b, &(i, j)) in self.neutral.iter().enumerate() {
            if choice >> b & 1 == 0 {
                edges.push((i, j));
            } else {
                edges.push((j, i));
            }
        }
        Some(Digraph::new(self.base.n, edges).expect("lifting edges are valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = ((1u64 << self.neutral.len()) - self.next) as usize;
        (rem, Some(rem))
    }
}

impl ExactSizeIterator for LiftingEnumeration {}

/// The signed graph of a digraph: both arcs of a pair present → positive
/// edge, exactly one → neither, none → negative edge.
pub fn sign_map(g: &Digraph) -> SignedGraph {
    let n = g.n();
    let mut sg = SignedGraph {
        n,
        sign: vec![EdgeSign::Neutral; n * n.saturating_sub(1) / 2],
    };
    for i in 0..n {
        for j in (i + 1)..n {
            let fwd = g.has_edge(i, j);
            let bwd = g.has_edge(j, i);
            sg.sign[pair_index(n, i, j)] = match (fwd, bwd) {
                (true, true) => EdgeSign::Plus,
                (false, false) => EdgeSign::Minus,
                _ => EdgeSign::Neutral,
            };
        }
    }
    sg
}

/// Per-pair multiplicities of the braid arrangement induced by a digraph
/// deformation at level `k`: the pair `{i, j}` gets one count for each
/// hyperplane parallel to `x_i - x_j = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicityMap {
    n: usize,
    k: u32,
    mult: Vec<u64>, // indexed by pair_index
}

impl MultiplicityMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.mult[pair_index(self.n, i, j)]
    }

    /// Sum over all pairs; equals the hyperplane count of the deformation.
    pub fn total(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn pairs(&self) -> Vec<((usize, usize), u64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                out.push(((i, j), self.get(i, j)));
            }
        }
        out
    }
}

/// The multiplicity map of the restriction to the infinite hyperplane:
/// `mult({i,j}) = 2k + 1 + ε(i,j) + ε(j,i)`.
pub fn ziegler_multiplicity(g: &Digraph, k: u32) -> MultiplicityMap {
    let n = g.n();
    let mut mult = vec![0u64; n * n.saturating_sub(1) / 2];
    for i in 0..n {
        for j in (i + 1)..n {
            mult[pair_index(n, i, j)] =
                2 * u64::from(k) + 1 + (g.epsilon(i, j) + g.epsilon(j, i)) as u64;
        }
    }
    MultiplicityMap { n, k, mult }
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
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
    use crate::digraph::Digraph;

    fn g(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn sign_map_complete_bidirected_is_all_plus() {
        let sg = sign_map(&Digraph::complete_bidirected(3));
        assert_eq!(sg.plus_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(sg.minus_edges().is_empty());
    }

    #[test]
    fn sign_map_empty_is_all_minus() {
        let sg = sign_map(&Digraph::empty(3));
        assert_eq!(sg.minus_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(sg.plus_edges().is_empty());
    }

    #[test]
    fn sign_map_single_arc_is_neutral() {
        let sg = sign_map(&g(2, &[(0, 1)]));
        assert!(sg.plus_edges().is_empty());
        assert!(sg.minus_edges().is_empty());
        assert_eq!(sg.neutral_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_overlapping_sign_sets() {
        assert!(SignedGraph::new(3, &[(0, 1)], &[(1, 0)]).is_err());
        assert!(SignedGraph::new(3, &[(1, 1)], &[]).is_err());
        assert!(SignedGraph::new(2, &[(0, 3)], &[]).is_err());
    }

    #[test]
    fn all_plus_triangle_eliminable_under_every_ordering() {
        let sg = SignedGraph::new(3, &[(0, 1), (0, 2), (1, 2)], &[]).unwrap();
        for seq in crate::test_util::permutations(3) {
            let ord = VertexOrdering::from_sequence(&seq).unwrap();
            assert!(sg.is_signed_eliminable_under(&ord));
        }
    }

    #[test]
    fn se2_rejects_shared_apex_without_base_edge() {
        // Two positive edges at the top vertex demand a positive base pair.
        let sg = SignedGraph::new(3, &[(0, 2), (1, 2)], &[]).unwrap();
        let ord = VertexOrdering::identity(3); // vertex 2 last
        assert!(!sg.is_signed_eliminable_under(&ord));
    }

    #[test]
    fn empty_signed_graph_vacuously_eliminable() {
        let sg = SignedGraph::new(4, &[], &[]).unwrap();
        assert!(sg.is_signed_eliminable_under(&VertexOrdering::identity(4)));
    }

    #[test]
    fn elimination_ordering_avoids_bad_apex() {
        // Brute force over all 6 orderings says [0, 2, 1] is the first valid
        // sequence: vertex 2 must not sit last.
        let sg = SignedGraph::new(3, &[(0, 2), (1, 2)], &[]).unwrap();
        let valid: Vec<Vec<usize>> = crate::test_util::permutations(3)
            .into_iter()
            .filter(|seq| {
                sg.is_signed_eliminable_under(&VertexOrdering::from_sequence(seq).unwrap())
            })
            .collect();
        assert!(!valid.is_empty());
        let lex_smallest = valid.iter().min().unwrap().clone();
        assert_eq!(lex_smallest, vec![0, 2, 1]);

        let found = sg.find_elimination_ordering().unwrap();
        assert_eq!(found.sequence(), lex_smallest);
    }

    #[test]
    fn two_vertex_graphs_use_identity() {
        for (plus, minus) in [
            (vec![], vec![]),
            (vec![(0, 1)], vec![]),
            (vec![], vec![(0, 1)]),
        ] {
            let sg = SignedGraph::new(2, &plus, &minus).unwrap();
            assert_eq!(
                sg.find_elimination_ordering(),
                Some(VertexOrdering::identity(2))
            );
        }
    }

    #[test]
    fn all_minus_uses_identity() {
        for n in 2..=5 {
            let pairs: Vec<_> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            let sg = SignedGraph::new(n, &[], &pairs).unwrap();
            assert_eq!(
                sg.find_elimination_ordering(),
                Some(VertexOrdering::identity(n))
            );
        }
    }

    #[test]
    fn liftings_of_all_plus_triangle() {
        let sg = sign_map(&Digraph::complete_bidirected(3));
        let lifts: Vec<_> = sg.enumerate_liftings().collect();
        assert_eq!(lifts, vec![Digraph::complete_bidirected(3)]);
    }

    #[test]
    fn liftings_of_all_neutral_triangle() {
        let sg = SignedGraph::new(3, &[], &[]).unwrap();
        let lifts: Vec<_> = sg.enumerate_liftings().collect();
        assert_eq!(lifts.len(), 8);
        for l in &lifts {
            assert_eq!(sign_map(l), sg);
        }
        let distinct: std::collections::HashSet<_> =
            lifts.iter().map(|l| l.arc_mask().unwrap()).collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn lifting_with_no_neutral_pairs_is_unique() {
        let sg = SignedGraph::new(3, &[(0, 1)], &[(0, 2), (1, 2)]).unwrap();
        let lifts: Vec<_> = sg.enumerate_liftings().collect();
        assert_eq!(lifts, vec![g(3, &[(0, 1), (1, 0)])]);
    }

    #[test]
    fn ziegler_multiplicity_examples() {
        let m = ziegler_multiplicity(&Digraph::complete_bidirected(3), 0);
        assert!(m.pairs().iter().all(|&(_, v)| v == 3));
        assert_eq!(m.total(), 9);

        let m = ziegler_multiplicity(&Digraph::empty(3), 0);
        assert!(m.pairs().iter().all(|&(_, v)| v == 1));

        let m = ziegler_multiplicity(&g(3, &[(0, 1)]), 1);
        assert_eq!(m.get(0, 1), 4);
        assert_eq!(m.get(0, 2), 3);
        assert_eq!(m.get(1, 2), 3);
    }

    #[test]
    fn multiplicity_equals_parallel_hyperplane_count() {
        use crate::arrangement::build_deformation;
        let h = g(4, &[(0, 1), (1, 0), (2, 3), (1, 2)]);
        for k in 0..=2u32 {
            let a = build_deformation(&h, k).unwrap();
            let m = ziegler_multiplicity(&h, k);
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let parallel = a
                        .iter()
                        .filter(|hp| {
                            hp.normal().iter().enumerate().all(|(t, &c)| {
                                if t == i {
                                    c == 1
                                } else if t == j {
                                    c == -1
                                } else {
                                    c == 0
                                }
                            })
                        })
                        .count() as u64;
                    assert_eq!(parallel, m.get(i, j), "pair ({i}, {j}) at k={k}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let sg = SignedGraph::new(3, &[(0, 1)], &[(1, 2)]).unwrap();
        let json = serde_json::to_string(&sg).unwrap();
        assert_eq!(json, r#"{"n":3,"plus":[[0,1]],"minus":[[1,2]]}"#);
        assert_eq!(serde_json::from_str::<SignedGraph>(&json).unwrap(), sg);
    }
}
