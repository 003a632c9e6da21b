//! Exact characteristic polynomials of integer arrangements by
//! finite-field point counting and interpolation, plus integer-root
//! factorization.
//!
//! For a prime `q` beyond the arrangement's reduction bound, the number of
//! points of the `q`-element-field affine space lying on no hyperplane is a
//! polynomial in `q`; fitting it at `dim + 1` admissible primes and
//! verifying at one more recovers the characteristic polynomial exactly.

use std::fmt;

use num::rational::Ratio;
use num::{One, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arrangement::Arrangement;
use crate::{Error, Result};

/// Cap on `q^dim` for a single complement count.
pub const COMPLEMENT_POINT_BUDGET: u64 = 100_000_000;

type Rat = Ratio<i128>;

/// A univariate polynomial with exact integer coefficients, ascending
/// degree, leading coefficient nonzero unless zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `t^d`
    pub fn t_power(d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == Some(1)
    }

    pub fn eval_i128(&self, x: i128) -> i128 {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + i128::from(c);
        }
        acc
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0i64; len];
        for (d, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs.get(d).copied().unwrap_or(0)
                + other.coeffs.get(d).copied().unwrap_or(0);
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut acc = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (da, &a) in self.coeffs.iter().enumerate() {
            for (db, &b) in other.coeffs.iter().enumerate() {
                acc[da + db] += i128::from(a) * i128::from(b);
            }
        }
        IntPolynomial::from_coeffs(
            acc.into_iter()
                .map(|c| i64::try_from(c).expect("polynomial coefficient overflow"))
                .collect(),
        )
    }

    /// Multiplication by `(t - r)`.
    pub fn mul_linear(&self, r: i64) -> IntPolynomial {
        self.mul(&IntPolynomial::from_coeffs(vec![-r, 1]))
    }

    /// Multiplication by `t^m`.
    pub fn shift_up(&self, m: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; m];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[d];
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.unsigned_abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<i64>::deserialize(deserializer)?;
        if coeffs.last() == Some(&0) {
            return Err(D::Error::custom("trailing zero coefficient"));
        }
        Ok(IntPolynomial { coeffs })
    }
}

/// A complement count over the `q`-element field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeEvaluation {
    pub q: u64,
    pub count: u64,
}

/// Primes are admissible when strictly above this: large enough that the
/// mod-`q` reduction keeps distinct hyperplanes distinct and the count
/// polynomial-in-`q`. `max(dim, 2·max|entry| + 1)` covers the difference
/// arrangements in scope (entries bounded by `k + 1`).
pub fn reduction_bound(a: &Arrangement) -> u64 {
    let b = 2 * a.max_abs_entry().unsigned_abs() + 1;
    (a.dim() as u64).max(b)
}

/// Counts points of the `dim`-dimensional affine space over the `q`-element
/// field lying on no hyperplane.
///
/// Brute force over all `q^dim` tuples in odometer order; per-hyperplane
/// dot products are maintained incrementally, and the membership scan
/// short-circuits on the first hyperplane hit.
pub fn count_complement_points(a: &Arrangement, q: u64) -> Result<PrimeEvaluation> {
    if !is_prime(q) {
        return Err(Error::InvalidInput(format!("{q} is not prime")));
    }
    let bound = reduction_bound(a);
    if q <= bound {
        return Err(Error::InvalidInput(format!(
            "prime {q} is not above the reduction bound {bound}"
        )));
    }
    check_budget(a.dim(), q)?;

    let dim = a.dim();
    let hyperplanes: Vec<&crate::arrangement::Hyperplane> = a.iter().collect();
    let hcount = hyperplanes.len();
    let qq = q as u32;

    // Residues of each hyperplane's offset, and per-coordinate lists of
    // (hyperplane, reduced coefficient) for the incremental updates.
    let offs: Vec<u32> = hyperplanes
        .iter()
        .map(|h| h.offset().rem_euclid(q as i64) as u32)
        .collect();
    let mut touch: Vec<Vec<(usize, u32)>> = vec![Vec::new(); dim];
    for (hi, h) in hyperplanes.iter().enumerate() {
        for (t, &c) in h.normal().iter().enumerate() {
            if c != 0 {
                touch[t].push((hi, c.rem_euclid(q as i64) as u32));
            }
        }
    }

    let mut dots = vec![0u32; hcount];
    let mut v = vec![0u32; dim];
    let mut count: u64 = 0;
    loop {
        if dots.iter().zip(&offs).all(|(d, o)| d != o) {
            count += 1;
        }
        // Odometer increment; each unit step at coordinate t shifts the
        // dot of every hyperplane touching t by its coefficient mod q.
        let mut t = dim;
        loop {
            if t == 0 {
                return Ok(PrimeEvaluation { q, count });
            }
            t -= 1;
            v[t] += 1;
            for &(hi, c) in &touch[t] {
                dots[hi] += c;
                if dots[hi] >= qq {
                    dots[hi] -= qq;
                }
            }
            if v[t] < qq {
                break;
            }
            v[t] = 0;
        }
    }
}

fn check_budget(dim: usize, q: u64) -> Result<()> {
    let mut total: u128 = 1;
    for _ in 0..dim {
        total *= q as u128;
        if total > COMPLEMENT_POINT_BUDGET as u128 {
            return Err(Error::Budget(format!(
                "q^dim = {q}^{dim} exceeds the {COMPLEMENT_POINT_BUDGET} point budget"
            )));
        }
    }
    Ok(())
}

/// The characteristic polynomial: the unique monic degree-`dim` polynomial
/// through `dim + 1` complement counts, verified at one further prime.
/// On a verification mismatch all primes escalate by a factor of two, at
/// most three times; escalation that would exceed the point budget fails
/// with a resource error.
pub fn characteristic_polynomial(a: &Arrangement) -> Result<IntPolynomial> {
    let dim = a.dim();
    let base = reduction_bound(a);
    for escalation in 0..=3u32 {
        let bound = base
            .checked_mul(1 << escalation)
            .ok_or_else(|| Error::Internal("reduction bound overflow".into()))?;
        let primes = primes_above(bound, dim + 2);
        if let Err(e) = check_budget(dim, *primes.last().expect("nonempty")) {
            if escalation > 0 {
                return Err(Error::Budget(format!(
                    "escalated primes after a verification mismatch exceed the point budget \
                     (bad reduction at the smaller primes): {e}"
                )));
            }
            return Err(e);
        }
        let evals = primes
            .par_iter()
            .map(|&q| count_complement_points(a, q))
            .collect::<Result<Vec<_>>>()?;
        let (fit, check) = evals.split_at(dim + 1);
        let verify = check[0];
        if let Some(poly) = interpolate_exact(fit) {
            if poly.degree() == Some(dim)
                && poly.is_monic()
                && poly.eval_i128(verify.q as i128) == verify.count as i128
            {
                return Ok(poly);
            }
        }
    }
    Err(Error::BadReduction(format!(
        "interpolation failed to stabilize after 3 escalations (dim {dim})"
    )))
}

/// Exact Lagrange interpolation; `None` when the fit has a non-integer
/// coefficient (a bad-reduction symptom).
fn interpolate_exact(points: &[PrimeEvaluation]) -> Option<IntPolynomial> {
    let m = points.len();
    let mut acc = vec![Rat::zero(); m];
    for i in 0..m {
        let xi = points[i].q as i128;
        let mut basis = vec![Rat::one()];
        let mut denom: i128 = 1;
        for (j, p) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let xj = p.q as i128;
            // basis *= (t - xj)
            basis.push(Rat::zero());
            for d in (0..basis.len() - 1).rev() {
                let keep = basis[d];
                basis[d + 1] += keep;
                basis[d] = -Rat::from_integer(xj) * keep;
            }
            denom *= xi - xj;
        }
        let scale = Rat::new(points[i].count as i128, denom);
        for (d, b) in basis.into_iter().enumerate() {
            acc[d] += b * scale;
        }
    }
    let mut coeffs = Vec::with_capacity(m);
    for r in acc {
        if !r.is_integer() {
            return None;
        }
        coeffs.push(i64::try_from(r.to_integer()).ok()?);
    }
    Some(IntPolynomial::from_coeffs(coeffs))
}

/// Splits a monic polynomial into integer linear factors if possible:
/// returns the sorted multiset of roots, or `None` when an irreducible
/// factor of degree at least two remains.
pub fn integer_root_split(p: &IntPolynomial) -> Result<Option<Vec<i64>>> {
    if !p.is_monic() {
        return Err(Error::InvalidInput(
            "integer_root_split requires a monic polynomial".into(),
        ));
    }
    let coeffs = p.coeffs();
    let strip = coeffs
        .iter()
        .position(|&c| c != 0)
        .expect("monic is nonzero");
    let mut roots: Vec<i64> = vec![0; strip];
    let mut rest: Vec<i64> = coeffs[strip..].to_vec();
    while rest.len() > 1 {
        // Any integer root divides the (nonzero) constant coefficient.
        let c0 = rest[0].unsigned_abs();
        let root = divisors(c0)
            .into_iter()
            .flat_map(|d| [d as i64, -(d as i64)])
            .find(|&r| eval_is_zero(&rest, r));
        match root {
            Some(r) => {
                rest = divide_by_linear(&rest, r)?;
                roots.push(r);
            }
            None => return Ok(None),
        }
    }
    roots.sort_unstable();
    Ok(Some(roots))
}

/// Horner evaluation with overflow short-circuit: once the accumulator
/// leaves the i128 range it can never return to zero, so overflow means
/// "not a root".
fn eval_is_zero(coeffs: &[i64], x: i64) -> bool {
    let mut acc: i128 = 0;
    for &c in coeffs.iter().rev() {
        acc = match acc
            .checked_mul(i128::from(x))
            .and_then(|v| v.checked_add(i128::from(c)))
        {
            Some(v) => v,
            None => return false,
        };
    }
    acc == 0
}

/// Exact division of a monic polynomial (ascending coefficients) by `(t - r)`.
fn divide_by_linear(coeffs: &[i64], r: i64) -> Result<Vec<i64>> {
    let d = coeffs.len() - 1;
    let mut quotient = vec![0i64; d];
    let mut carry: i128 = 0;
    for i in (1..=d).rev() {
        carry = carry * i128::from(r) + i128::from(coeffs[i]);
        quotient[i - 1] = i64::try_from(carry)
            .map_err(|_| Error::Internal("quotient coefficient overflow".into()))?;
    }
    if carry * i128::from(r) + i128::from(coeffs[0]) != 0 {
        return Err(Error::Internal(format!("{r} is not a root")));
    }
    Ok(quotient)
}

fn divisors(x: u64) -> Vec<u64> {
    debug_assert!(x > 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            small.push(d);
            if d != x / d {
                large.push(x / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `howmany` primes strictly greater than `bound`.
fn primes_above(bound: u64, howmany: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(howmany);
    let mut x = bound + 1;
    while out.len() < howmany {
        if is_prime(x) {
            out.push(x);
        }
        x += 1;
    }
    out
}
