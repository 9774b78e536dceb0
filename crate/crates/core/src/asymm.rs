//! Skew-symmetric functions: the Maya-indexed orthonormal basis `S_l`,
//! the Vandermonde-multiplication isometry from symmetric functions, and
//! the finite-variable determinant oracle.

use std::fmt;

use itertools::Itertools;
use num::{BigRational, Zero};
use std::collections::BTreeMap;

use crate::combinatorics::{partition_to_maya, MayaIndex, Partition};
use crate::error::Error;
use crate::symm::{
    power_to_schur, schur_to_power, truncate_symm, SchurExpansion, SymmElement,
    TruncatedPolynomial,
};

/// A finite linear combination `sum_l c_l S_l` of the basic
/// skew-symmetric functions, indexed by Maya sequences.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AsymmVector {
    terms: BTreeMap<MayaIndex, BigRational>,
}

impl AsymmVector {
    pub fn zero() -> Self {
        AsymmVector::default()
    }

    pub fn basis_term(l: MayaIndex, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(l, coeff);
        }
        AsymmVector { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MayaIndex, BigRational)>) -> Self {
        let mut out = AsymmVector::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MayaIndex, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &MayaIndex) -> BigRational {
        self.terms.get(l).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, l: MayaIndex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(l) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &AsymmVector) -> AsymmVector {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> AsymmVector {
        if c.is_zero() {
            return AsymmVector::zero();
        }
        AsymmVector {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }
}

/// `S[-1,1]`; the vacuum renders as `S[]`.
impl fmt::Display for AsymmVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_terms(f, self.terms.iter(), |l| Some(format!("S{l}")))
    }
}

/// Multiplication by the Vandermonde determinant, computed through the
/// Schur expansion: `s_lambda` maps to `S_l` with `l_j = j - lambda_j`
/// and coefficient +1.
pub fn apply_j(f: &SymmElement) -> AsymmVector {
    schur_to_asymm(&power_to_schur(f))
}

/// Exact inverse of [`apply_j`].
pub fn apply_j_inverse(f: &AsymmVector) -> SymmElement {
    schur_to_power(&asymm_to_schur(f))
}

/// The basis relabeling `s_lambda -> S_{maya(lambda)}`, coefficient +1.
pub fn schur_to_asymm(f: &SchurExpansion) -> AsymmVector {
    AsymmVector::from_terms(
        f.terms()
            .map(|(lambda, c)| (partition_to_maya(lambda), c.clone())),
    )
}

/// Inverse relabeling `S_l -> s_{partition(l)}`.
pub fn asymm_to_schur(f: &AsymmVector) -> SchurExpansion {
    SchurExpansion::from_terms(
        f.terms()
            .map(|(l, c)| (l.partition().clone(), c.clone())),
    )
}

/// `<S_l, S_l'> = delta_{l l'}`, extended bilinearly.
pub fn asymm_inner(f: &AsymmVector, g: &AsymmVector) -> BigRational {
    let mut acc = BigRational::zero();
    for (l, cf) in f.terms() {
        if let Some(cg) = g.terms.get(l) {
            acc += cf * cg;
        }
    }
    acc
}

/// The n-variable truncation of `S_l`: the bialternant determinant
/// `det(x_i^{n - l_j})` over `i, j = 1..n`, expanded over all `n!`
/// permutations. Rejects `n` smaller than the number of stored parts
/// (some exponent `n - l_j` would go negative).
pub fn truncate_s(l: &MayaIndex, n: usize) -> Result<TruncatedPolynomial, Error> {
    let parts = l.partition().len();
    if n < parts {
        return Err(Error::TruncationTooSmall {
            needed: parts,
            got: n,
        });
    }
    // exponents n - l_j for the first n entries; all nonnegative once
    // n >= parts, since l_j <= j for stored entries and l_j = j <= n after
    let exps: Vec<u32> = (1..=n).map(|j| (n as i64 - l.entry(j)) as u32).collect();
    let mut out = TruncatedPolynomial::zero(n);
    for perm in (0..n).permutations(n) {
        let sign = permutation_parity(&perm);
        let mut key = vec![0u32; n];
        for (i, &j) in perm.iter().enumerate() {
            key[i] = exps[j];
        }
        out.add_term(key, BigRational::from_integer(sign.into()));
    }
    Ok(out)
}

/// Parity of a permutation given as an image vector, via inversion count.
pub fn permutation_parity(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Finite-n check that `truncate(s_lambda) * Vandermonde_n` equals
/// `truncate_S(maya(lambda), n)` exactly, term by term.
pub fn verify_j_oracle(lambda: &Partition, n: usize) -> Result<bool, Error> {
    if n < lambda.weight() as usize || n < 1 {
        return Err(Error::TruncationTooSmall {
            needed: (lambda.weight() as usize).max(1),
            got: n,
        });
    }
    let schur = SchurExpansion::basis_term(lambda.clone(), BigRational::from_integer(1.into()));
    let schur_poly = truncate_symm(&schur_to_power(&schur), n);
    let vandermonde = truncate_s(&MayaIndex::vacuum(), n)?;
    let lhs = schur_poly.mul(&vandermonde);
    let rhs = truncate_s(&partition_to_maya(lambda), n)?;
    Ok(lhs == rhs)
}
