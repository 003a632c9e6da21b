//! Integer affine hyperplane arrangements: the digraph-indexed deformation
//! of the braid arrangement, coning, and localization at flats given by
//! defining equations.
//!
//! Hyperplanes are kept in a canonical form (content 1, first nonzero
//! normal entry positive) so arrangements have set semantics.

use std::collections::BTreeSet;
use std::fmt;

use crate::digraph::Digraph;
use crate::{Error, Result};

/// An affine hyperplane `normal · x = offset` with integer coefficients,
/// stored in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Hyperplane {
    normal: Vec<i64>,
    offset: i64,
}

impl Hyperplane {
    /// Canonicalizes: divides by the gcd of all entries and flips signs so
    /// the first nonzero normal entry is positive. A zero normal is rejected.
    pub fn new(normal: Vec<i64>, offset: i64) -> Result<Self> {
        let first_nonzero = normal.iter().find(|&&a| a != 0);
        let Some(&lead) = first_nonzero else {
            return Err(Error::InvalidInput(
                "hyperplane normal must be nonzero".into(),
            ));
        };
        let mut g = 0u64;
        for &a in normal.iter().chain(std::iter::once(&offset)) {
            g = gcd(g, a.unsigned_abs());
        }
        let g = g as i64; // nonzero: normal has a nonzero entry
        let s = if lead < 0 { -g } else { g };
        Ok(Hyperplane {
            normal: normal.iter().map(|&a| a / s).collect(),
            offset: offset / s,
        })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Difference hyperplane `x_i - x_j = c` in the given dimension.
    pub fn difference(dim: usize, i: usize, j: usize, c: i64) -> Result<Self> {
        if i >= dim || j >= dim || i == j {
            return Err(Error::InvalidInput(format!(
                "bad coordinate pair ({i}, {j}) in dimension {dim}"
            )));
        }
        let mut normal = vec![0; dim];
        normal[i] = 1;
        normal[j] = -1;
        Hyperplane::new(normal, c)
    }

    /// The homogeneous row `(normal, offset)` used for flat computations.
    fn row(&self) -> Vec<i128> {
        self.normal
            .iter()
            .map(|&a| a as i128)
            .chain(std::iter::once(self.offset as i128))
            .collect()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :", self.offset)?;
        for a in &self.normal {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// A finite set of distinct hyperplanes in a fixed ambient dimension, with
/// an optional designated hyperplane (the infinite hyperplane after coning).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: BTreeSet<Hyperplane>,
    marker: Option<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize) -> Self {
        Arrangement {
            dim,
            hyperplanes: BTreeSet::new(),
            marker: None,
        }
    }

    pub fn with_hyperplanes<I>(dim: usize, hyperplanes: I) -> Result<Self>
    where
        I: IntoIterator<Item = Hyperplane>,
    {
        let mut a = Arrangement::new(dim);
        for h in hyperplanes {
            a.insert(h)?;
        }
        Ok(a)
    }

    pub fn insert(&mut self, h: Hyperplane) -> Result<()> {
        if h.dim() != self.dim {
            return Err(Error::InvalidInput(format!(
                "hyperplane dimension {} does not match arrangement dimension {}",
                h.dim(),
                self.dim
            )));
        }
        self.hyperplanes.insert(h);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Hyperplanes in canonical sorted order (by normal, then offset).
    pub fn iter(&self) -> impl Iterator<Item = &Hyperplane> {
        self.hyperplanes.iter()
    }

    pub fn contains(&self, h: &Hyperplane) -> bool {
        self.hyperplanes.contains(h)
    }

    pub fn marker(&self) -> Option<&Hyperplane> {
        self.marker.as_ref()
    }

    fn set_marker(&mut self, h: Hyperplane) -> Result<()> {
        if !self.hyperplanes.contains(&h) {
            return Err(Error::Internal("marker must be a member hyperplane".into()));
        }
        self.marker = Some(h);
        Ok(())
    }

    /// Largest absolute value over all normal entries and offsets.
    pub fn max_abs_entry(&self) -> i64 {
        self.hyperplanes
            .iter()
            .flat_map(|h| h.normal.iter().chain(std::iter::once(&h.offset)))
            .map(|a| a.abs())
            .max()
            .unwrap_or(0)
    }

    /// Homogenization: appends a coordinate `z`, maps `a·x = c` to
    /// `a·x - c·z = 0`, and adds `z = 0` as the marker hyperplane.
    pub fn cone(&self) -> Arrangement {
        let dim = self.dim + 1;
        let mut out = Arrangement::new(dim);
        for h in &self.hyperplanes {
            let mut normal = h.normal.clone();
            normal.push(-h.offset);
            out.insert(Hyperplane::new(normal, 0).expect("normal stays nonzero"))
                .expect("dimension matches");
        }
        let mut z = vec![0; dim];
        z[dim - 1] = 1;
        let infinity = Hyperplane::new(z, 0).expect("unit normal");
        out.insert(infinity.clone()).expect("dimension matches");
        out.set_marker(infinity).expect("just inserted");
        out
    }

    /// Subarrangement of hyperplanes containing the flat cut out by the
    /// given equations. An inconsistent system is rejected; an empty list
    /// selects nothing (the ambient space lies in no hyperplane).
    pub fn general_localize(&self, flat: &[Hyperplane]) -> Result<Arrangement> {
        let mut normals_only = RowSpace::new(self.dim);
        let mut with_offsets = RowSpace::new(self.dim + 1);
        for h in flat {
            if h.dim() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "flat equation dimension {} does not match arrangement dimension {}",
                    h.dim(),
                    self.dim
                )));
            }
            normals_only.insert(h.normal.iter().map(|&a| a as i128).collect());
            with_offsets.insert(h.row());
        }
        if normals_only.rank() != with_offsets.rank() {
            return Err(Error::InvalidInput(
                "flat equations are inconsistent (empty solution set)".into(),
            ));
        }
        let mut out = Arrangement::new(self.dim);
        for h in &self.hyperplanes {
            if with_offsets.contains(&h.row()) {
                out.insert(h.clone())?;
            }
        }
        if let Some(m) = &self.marker {
            if out.contains(m) {
                out.marker = Some(m.clone());
            }
        }
        Ok(out)
    }

    /// Localization at the flat `{x_i = x_j = x_k} ∩ marker` of a coned
    /// arrangement: the marker plus every hyperplane supported on the triple.
    pub fn localize_triple(&self, i: usize, j: usize, k: usize) -> Result<Arrangement> {
        let Some(marker) = self.marker.clone() else {
            return Err(Error::InvalidInput(
                "localize_triple requires a coned arrangement with a marker".into(),
            ));
        };
        if i == j || j == k || i == k {
            return Err(Error::InvalidInput(format!(
                "triple ({i}, {j}, {k}) must be distinct"
            )));
        }
        if i >= self.dim || j >= self.dim || k >= self.dim {
            return Err(Error::InvalidInput(format!(
                "triple ({i}, {j}, {k}) out of range for dimension {}",
                self.dim
            )));
        }
        let flat = [
            Hyperplane::difference(self.dim, i, j, 0)?,
            Hyperplane::difference(self.dim, j, k, 0)?,
            marker,
        ];
        self.general_localize(&flat)
    }

    /// Drops coordinates on which no hyperplane has a nonzero normal entry.
    /// Returns the projected arrangement and the number of dropped
    /// coordinates; remaining coordinates keep their relative order.
    pub fn drop_unused_coordinates(&self) -> (Arrangement, usize) {
        let mut used = vec![false; self.dim];
        for h in &self.hyperplanes {
            for (t, &a) in h.normal.iter().enumerate() {
                if a != 0 {
                    used[t] = true;
                }
            }
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&t| used[t]).collect();
        let dropped = self.dim - keep.len();
        if dropped == 0 {
            return (self.clone(), 0);
        }
        let project = |h: &Hyperplane| {
            let normal: Vec<i64> = keep.iter().map(|&t| h.normal[t]).collect();
            Hyperplane::new(normal, h.offset).expect("support entries survive projection")
        };
        let mut out = Arrangement::new(keep.len());
        for h in &self.hyperplanes {
            out.insert(project(h)).expect("dimension matches");
        }
        out.marker = self.marker.as_ref().map(project);
        (out, dropped)
    }

    /// Applies a coordinate permutation: coordinate `t` becomes `perm[t]`.
    pub fn relabel_coordinates(&self, perm: &[usize]) -> Result<Arrangement> {
        if perm.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "permutation length {} does not match dimension {}",
                perm.len(),
                self.dim
            )));
        }
        let map = |h: &Hyperplane| -> Result<Hyperplane> {
            let mut normal = vec![0; self.dim];
            for (t, &a) in h.normal.iter().enumerate() {
                let target = *perm
                    .get(t)
                    .filter(|&&p| p < self.dim)
                    .ok_or_else(|| Error::InvalidInput(format!("bad permutation {perm:?}")))?;
                normal[target] = a;
            }
            Hyperplane::new(normal, h.offset)
        };
        let mut out = Arrangement::new(self.dim);
        for h in &self.hyperplanes {
            out.insert(map(h)?)?;
        }
        if let Some(m) = &self.marker {
            out.marker = Some(map(m)?);
        }
        Ok(out)
    }

    /// One hyperplane per line, canonical form, sorted: `c : a_0 ... a_{d-1}`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for h in &self.hyperplanes {
            s.push_str(&h.to_string());
            s.push('\n');
        }
        s
    }
}

/// The deformation of the braid arrangement indexed by a digraph: for each
/// pair `i < j`, the hyperplanes `x_i - x_j = c` for every integer
/// `c ∈ [-k - ε(i,j), k + ε(j,i)]`.
pub fn build_deformation(g: &Digraph, k: u32) -> Result<Arrangement> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "deformation needs at least 2 vertices, got {n}"
        )));
    }
    let k = i64::from(k);
    let mut a = Arrangement::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let lo = -k - g.epsilon(i, j);
            let hi = k + g.epsilon(j, i);
            for c in lo..=hi {
                a.insert(Hyperplane::difference(n, i, j, c)?)?;
            }
        }
    }
    Ok(a)
}

/// Row space of integer vectors over the rationals, built by fraction-free
/// elimination; supports rank and exact membership tests.
struct RowSpace {
    width: usize,
    basis: Vec<Vec<i128>>, // echelon rows, pivot columns strictly increasing
    pivots: Vec<usize>,
}

impl RowSpace {
    fn new(width: usize) -> Self {
        RowSpace {
            width,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` against the basis; a nonzero remainder extends it.
    fn insert(&mut self, row: Vec<i128>) {
        if let Some(rem) = self.reduce(row) {
            let pivot = rem.iter().position(|&a| a != 0).expect("remainder nonzero");
            let at = self
                .pivots
                .iter()
                .position(|&p| p > pivot)
                .unwrap_or(self.pivots.len());
            self.basis.insert(at, rem);
            self.pivots.insert(at, pivot);
        }
    }

    fn contains(&self, row: &[i128]) -> bool {
        self.reduce(row.to_vec()).is_none()
    }

    /// Eliminates pivot columns; `None` if the row reduces to zero,
    /// otherwise the content-reduced remainder.
    fn reduce(&self, mut row: Vec<i128>) -> Option<Vec<i128>> {
        assert_eq!(row.len(), self.width, "row width mismatch");
        for (brow, &p) in self.basis.iter().zip(&self.pivots) {
            if row[p] == 0 {
                continue;
            }
            let (bp, rp) = (brow[p], row[p]);
            for t in 0..self.width {
                row[t] = row[t] * bp - brow[t] * rp;
            }
            reduce_content(&mut row);
        }
        if row.iter().all(|&a| a == 0) {
            None
        } else {
            reduce_content(&mut row);
            Some(row)
        }
    }
}

fn reduce_content(row: &mut [i128]) {
    let mut g: u128 = 0;
    for &a in row.iter() {
        g = gcd128(g, a.unsigned_abs());
    }
    if g > 1 {
        let g = g as i128;
        for a in row.iter_mut() {
            *a /= g;
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
