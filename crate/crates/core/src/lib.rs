//! Digraph-indexed deformations of the braid arrangement.
//!
//! A digraph `G` on `n` labeled vertices and a level `k ≥ 0` define the
//! affine arrangement with hyperplanes `x_i - x_j = c` for each pair
//! `i < j` and every integer `c` from `-k - ε(i,j)` to `k + ε(j,i)`,
//! where `ε` indicates arc presence. This crate builds those
//! arrangements, computes their characteristic polynomials exactly by
//! finite-field point counting, and mechanically verifies the
//! combinatorial freeness criterion for their cones — the (A1)/(A2)
//! numbering conditions, signed eliminability of the associated signed
//! graph, and the three forbidden 3-vertex induced subgraphs — by
//! exhaustive search over all digraphs on small vertex counts.
//!
//! All types are immutable values and all operations are pure functions;
//! the enumeration streams are restartable, so harnesses can partition
//! work across threads freely.

pub mod arrangement;
pub mod charpoly;
pub mod digraph;
mod error;
pub mod signed_graph;
pub mod verify;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod test_util {
    /// All permutations of `0..n` (Heap's algorithm order).
    pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        heap_permute(&mut items, n, &mut out);
        out
    }

    fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap_permute(items, k - 1, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
}
