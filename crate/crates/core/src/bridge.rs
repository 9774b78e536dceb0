//! The end-to-end boson-fermion correspondence: the composition of the
//! power-sum substitution, Vandermonde multiplication and wedge
//! relabeling, together with its isometry verifier.

use std::fmt;

use num::BigRational;

use crate::asymm::{apply_j, apply_j_inverse};
use crate::boson::{boson_inner, BosonPolynomial, ZMonomial};
use crate::combinatorics::partitions_of;
use crate::fermion::{asymm_to_fermion, fermion_to_asymm, fock_inner, FockVector};
use crate::symm::{apply_i, apply_i_inverse};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The full correspondence: substitution into power sums, then
/// multiplication by the Vandermonde, then relabeling to wedges.
pub fn boson_to_fermion(f: &BosonPolynomial) -> FockVector {
    asymm_to_fermion(&apply_j(&apply_i(f)))
}

/// Exact two-sided inverse of [`boson_to_fermion`].
pub fn fermion_to_boson(f: &FockVector) -> BosonPolynomial {
    apply_i_inverse(&apply_j_inverse(&fermion_to_asymm(f)))
}

/// All z-monomials of the given weight, one per partition, in
/// [`partitions_of`] order.
pub fn monomials_of_weight(d: u32) -> Vec<ZMonomial> {
    partitions_of(d)
        .iter()
        .map(ZMonomial::from_partition)
        .collect()
}

/// Whether a single monomial pair has equal inner products on both ends
/// of the chain.
pub fn check_pair(a: &ZMonomial, b: &ZMonomial) -> bool {
    let one = BigRational::from_integer(1.into());
    let fa = BosonPolynomial::monomial(a.clone(), one.clone());
    let fb = BosonPolynomial::monomial(b.clone(), one);
    boson_inner(&fa, &fb) == fock_inner(&boson_to_fermion(&fa), &boson_to_fermion(&fb))
}

/// Per-degree outcome of the isometry sweep. The degree of a pair is the
/// larger of the two monomial weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub pairs: usize,
    pub failures: Vec<(ZMonomial, ZMonomial)>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of checking `<f, g> = <Bf, Bg>` over all pairs of z-monomials
/// of weight up to the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryReport {
    pub degree_bound: u32,
    pub degrees: Vec<DegreeReport>,
}

impl IsometryReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(DegreeReport::passed)
    }

    pub fn total_pairs(&self) -> usize {
        self.degrees.iter().map(|d| d.pairs).sum()
    }
}

/// Text table: one line per degree, `degree  pairs  status`.
impl fmt::Display for IsometryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree  pairs  status")?;
        for d in &self.degrees {
            writeln!(
                f,
                "{:>6}  {:>5}  {}",
                d.degree,
                d.pairs,
                if d.passed() { "pass" } else { "FAIL" }
            )?;
            for (a, b) in &d.failures {
                writeln!(f, "        counterexample: <{a}, {b}>")?;
            }
        }
        write!(
            f,
            "total: {} pairs, {}",
            self.total_pairs(),
            if self.passed() { "all pass" } else { "FAILED" }
        )
    }
}

/// Ordered monomial pairs `(a, b)` with `weight(a) <= weight(b) = degree`
/// and `a <= b`; unordered pairs are enough by symmetry of both products.
pub fn isometry_pairs(degree: u32) -> Vec<(ZMonomial, ZMonomial)> {
    let mut pairs = Vec::new();
    let high = monomials_of_weight(degree);
    for d in 0..=degree {
        let low = monomials_of_weight(d);
        for a in &low {
            for b in &high {
                if d < degree || a <= b {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
    }
    pairs
}

/// Checks the full-chain isometry on every pair of z-monomials of weight
/// at most `degree_bound`. Pairs are evaluated independently (in
/// parallel when the `parallel` feature is on); the report is
/// deterministic either way.
pub fn verify_isometry(degree_bound: u32) -> IsometryReport {
    let degrees = (0..=degree_bound)
        .map(|degree| {
            let pairs = isometry_pairs(degree);
            let count = pairs.len();
            #[cfg(feature = "parallel")]
            let failures: Vec<_> = pairs
                .into_par_iter()
                .filter(|(a, b)| !check_pair(a, b))
                .collect();
            #[cfg(not(feature = "parallel"))]
            let failures: Vec<_> = pairs
                .into_iter()
                .filter(|(a, b)| !check_pair(a, b))
                .collect();
            DegreeReport {
                degree,
                pairs: count,
                failures,
            }
        })
        .collect();
    IsometryReport {
        degree_bound,
        degrees,
    }
}
