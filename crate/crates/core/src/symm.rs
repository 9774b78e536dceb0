//! Symmetric functions in the power-sum basis: the Hall/Redfield product,
//! the substitution isometry from boson polynomials, Schur-basis changes
//! via the Murnaghan-Nakayama recursion, and the finite-variable
//! truncation oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigRational, Zero};

use crate::boson::{BosonPolynomial, ZMonomial};
use crate::combinatorics::{partitions_of, z_mu, Partition};
use crate::error::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A finite linear combination `sum_mu c_mu p_mu` in the power-sum basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymmElement {
    terms: BTreeMap<Partition, BigRational>,
}

impl SymmElement {
    pub fn zero() -> Self {
        SymmElement::default()
    }

    pub fn one() -> Self {
        SymmElement::basis_term(Partition::empty(), BigRational::from_integer(1.into()))
    }

    pub fn basis_term(mu: Partition, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mu, coeff);
        }
        SymmElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut out = SymmElement::zero();
        for (mu, c) in terms {
            out.add_term(mu, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
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

    pub fn add(&self, other: &SymmElement) -> SymmElement {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymmElement {
        SymmElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymmElement {
        if c.is_zero() {
            return SymmElement::zero();
        }
        SymmElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Product in the free commutative algebra on the `p_k`:
    /// `p_mu * p_nu = p_{mu union nu}`.
    pub fn mul(&self, other: &SymmElement) -> SymmElement {
        let mut out = SymmElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.merge(m2), c1 * c2);
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }
}

/// `p2^2*p1 - 3*p4`; the constant term renders as a bare rational.
impl fmt::Display for SymmElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_terms(f, self.terms.iter(), |mu| {
            if mu.is_empty() {
                return None;
            }
            let body = mu
                .multiplicities()
                .iter()
                .map(|&(part, mult)| {
                    if mult == 1 {
                        format!("p{part}")
                    } else {
                        format!("p{part}^{mult}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            Some(body)
        })
    }
}

/// A finite linear combination `sum_lambda c_lambda s_lambda` in the
/// Schur basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigRational>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn basis_term(lambda: Partition, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
        SchurExpansion { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut out = SchurExpansion::zero();
        for (mu, c) in terms {
            out.add_term(mu, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
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
}

/// `s(2,1)`; the empty-partition term renders as `s()`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_terms(f, self.terms.iter(), |lambda| {
            let parts = lambda
                .parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Some(format!("s({parts})"))
        })
    }
}

/// The substitution isometry: `z_1^{k_1} z_2^{k_2} ... -> p_1^{k_1}
/// p_2^{k_2} ...`, extended linearly.
pub fn apply_i(f: &BosonPolynomial) -> SymmElement {
    SymmElement::from_terms(
        f.terms()
            .map(|(m, c)| (m.to_partition(), c.clone())),
    )
}

/// Exact inverse of [`apply_i`].
pub fn apply_i_inverse(f: &SymmElement) -> BosonPolynomial {
    BosonPolynomial::from_terms(
        f.terms()
            .map(|(mu, c)| (ZMonomial::from_partition(mu), c.clone())),
    )
}

/// The Hall/Redfield product: `<p_mu, p_nu> = delta_{mu nu} * z_mu`,
/// extended bilinearly.
pub fn hall_inner(f: &SymmElement, g: &SymmElement) -> BigRational {
    let mut acc = BigRational::zero();
    for (mu, cf) in f.terms() {
        if let Some(cg) = g.terms.get(mu) {
            acc += cf * cg * BigRational::from_integer(z_mu(mu).into());
        }
    }
    acc
}

/// A polynomial in exactly `n` variables `x_1..x_n`, used as the
/// finite-variable truncation oracle. Keys are exponent vectors of
/// length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl TruncatedPolynomial {
    pub fn zero(nvars: usize) -> Self {
        TruncatedPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], BigRational::from_integer(1.into()));
        TruncatedPolynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedPolynomial {
        if c.is_zero() {
            return TruncatedPolynomial::zero(self.nvars);
        }
        TruncatedPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> TruncatedPolynomial {
        TruncatedPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = TruncatedPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    /// `x_1^k + ... + x_n^k`.
    pub fn power_sum(nvars: usize, k: u32) -> TruncatedPolynomial {
        let mut out = TruncatedPolynomial::zero(nvars);
        for i in 0..nvars {
            let mut exps = vec![0; nvars];
            exps[i] = k;
            out.add_term(exps, BigRational::from_integer(1.into()));
        }
        out
    }

    /// Swaps variables `i` and `j` (0-based) in every term.
    pub fn swap_vars(&self, i: usize, j: usize) -> TruncatedPolynomial {
        let mut out = TruncatedPolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps.swap(i, j);
            out.add_term(exps, c.clone());
        }
        out
    }
}

/// Substitutes `p_k <- x_1^k + ... + x_n^k` and expands exactly.
pub fn truncate_symm(f: &SymmElement, n: usize) -> TruncatedPolynomial {
    assert!(n >= 1, "truncation needs at least one variable");
    let mut out = TruncatedPolynomial::zero(n);
    for (mu, c) in f.terms() {
        let mut prod = TruncatedPolynomial::one(n);
        for &part in mu.parts() {
            prod = prod.mul(&TruncatedPolynomial::power_sum(n, part));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// The symmetric-group character `chi^lambda(mu)`, by recursive ribbon
/// stripping on beta-numbers with sign `(-1)^(ribbon height)`.
///
/// Rejects weight mismatch. Memoizes per call; the function is pure.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, Error> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            lambda: lambda.weight(),
            mu: mu.weight(),
        });
    }
    // beta-numbers: lambda_j + m - j, stored ascending
    let m = lambda.len();
    let mut beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i) as u32)
        .collect();
    beta.reverse();
    let mut memo: HashMap<(Vec<u32>, usize), i64> = HashMap::new();
    Ok(strip_ribbons(&beta, mu.parts(), 0, &mut memo))
}

fn strip_ribbons(
    beta: &[u32],
    mu: &[u32],
    idx: usize,
    memo: &mut HashMap<(Vec<u32>, usize), i64>,
) -> i64 {
    if idx == mu.len() {
        // remaining weight is zero, so beta is the bare staircase
        return 1;
    }
    if let Some(&v) = memo.get(&(beta.to_vec(), idx)) {
        return v;
    }
    let r = mu[idx];
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.binary_search(&target).is_ok() {
            continue;
        }
        // elements strictly between target and b are jumped over; each
        // contributes one row to the ribbon height
        let jumped = beta[..pos].iter().filter(|&&x| x > target).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<u32> = beta.to_vec();
        next.remove(pos);
        let insert_at = next.binary_search(&target).unwrap_err();
        next.insert(insert_at, target);
        total += sign * strip_ribbons(&next, mu, idx + 1, memo);
    }
    memo.insert((beta.to_vec(), idx), total);
    total
}

/// Change of basis `p_mu = sum_lambda chi^lambda(mu) s_lambda`, extended
/// linearly; homogeneous components transform independently.
pub fn power_to_schur(f: &SymmElement) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (mu, c) in f.terms() {
        for lambda in partitions_of(mu.weight()) {
            let chi = mn_character(&lambda, mu).expect("equal weights by construction");
            if chi != 0 {
                out.add_term(lambda, c * BigRational::from_integer(chi.into()));
            }
        }
    }
    out
}

/// Inverse change of basis via character orthogonality:
/// `s_lambda = sum_mu chi^lambda(mu) / z_mu * p_mu`.
pub fn schur_to_power(f: &SchurExpansion) -> SymmElement {
    let mut out = SymmElement::zero();
    for (lambda, c) in f.terms() {
        for mu in partitions_of(lambda.weight()) {
            let chi = mn_character(lambda, &mu).expect("equal weights by construction");
            if chi != 0 {
                let z = BigRational::from_integer(z_mu(&mu).into());
                out.add_term(mu, c * BigRational::from_integer(chi.into()) / z);
            }
        }
    }
    out
}

/// The character table of the symmetric group on `n` letters: rows are
/// `lambda` in [`partitions_of`] order, columns are `mu` in the reverse
/// order (so the first column is `(1^n)` and the last is `(n)`).
pub fn character_table(n: u32) -> Vec<Vec<i64>> {
    let lambdas = partitions_of(n);
    let mus: Vec<Partition> = partitions_of(n).into_iter().rev().collect();
    let row = |lambda: &Partition| -> Vec<i64> {
        mus.iter()
            .map(|mu| mn_character(lambda, mu).expect("equal weights"))
            .collect()
    };
    #[cfg(feature = "parallel")]
    {
        lambdas.par_iter().map(row).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        lambdas.iter().map(row).collect()
    }
}
