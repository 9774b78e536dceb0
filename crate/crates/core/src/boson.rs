//! Polynomials in the bosonic variables `z_1, z_2, ...` with the Fock
//! inner product: monomials are pairwise orthogonal with squared norm
//! `prod_j k_j! * j^{k_j}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};

use crate::combinatorics::{z_mu, Partition};

/// A monomial `z_1^{k_1} z_2^{k_2} ...`, stored as sorted `(variable,
/// exponent)` pairs with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZMonomial {
    exps: Vec<(u32, u32)>,
}

impl ZMonomial {
    /// Canonicalizes arbitrary `(variable, exponent)` pairs: merges repeats,
    /// drops zero exponents, sorts by variable index. Variables are 1-based.
    pub fn new(pairs: &[(u32, u32)]) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for &(var, exp) in pairs {
            debug_assert!(var >= 1);
            if exp > 0 {
                *map.entry(var).or_insert(0) += exp;
            }
        }
        ZMonomial {
            exps: map.into_iter().collect(),
        }
    }

    /// The constant monomial 1.
    pub fn one() -> Self {
        ZMonomial { exps: Vec::new() }
    }

    /// `z_j`.
    pub fn var(j: u32) -> Self {
        ZMonomial::new(&[(j, 1)])
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Grading: the weight of `z_j` is `j`, so the total weight is
    /// `sum_j j * k_j`.
    pub fn weight(&self) -> u32 {
        self.exps.iter().map(|&(var, exp)| var * exp).sum()
    }

    pub fn mul(&self, other: &ZMonomial) -> ZMonomial {
        let mut pairs = self.exps.clone();
        pairs.extend_from_slice(&other.exps);
        ZMonomial::new(&pairs)
    }

    /// The partition with part `j` repeated `k_j` times; its `z_mu` is the
    /// squared norm of this monomial.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for &(var, exp) in &self.exps {
            for _ in 0..exp {
                parts.push(var);
            }
        }
        Partition::from_parts_unsorted(parts)
    }

    /// Inverse of [`ZMonomial::to_partition`].
    pub fn from_partition(mu: &Partition) -> ZMonomial {
        ZMonomial::new(&mu.multiplicities())
    }
}

/// Graded order, then lexicographic on the exponent tables. Fixes the term
/// order used for rendering.
impl Ord for ZMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `z1^2*z3`; the constant monomial renders as `1`.
impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(var, exp)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if exp == 1 {
                write!(f, "z{var}")?;
            } else {
                write!(f, "z{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial over the z-variables with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BosonPolynomial {
    terms: BTreeMap<ZMonomial, BigRational>,
}

impl BosonPolynomial {
    pub fn zero() -> Self {
        BosonPolynomial::default()
    }

    pub fn one() -> Self {
        BosonPolynomial::monomial(ZMonomial::one(), BigRational::from_integer(1.into()))
    }

    pub fn monomial(m: ZMonomial, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        BosonPolynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ZMonomial, BigRational)>) -> Self {
        let mut out = BosonPolynomial::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &ZMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: ZMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &BosonPolynomial) -> BosonPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> BosonPolynomial {
        BosonPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &BosonPolynomial) -> BosonPolynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> BosonPolynomial {
        if c.is_zero() {
            return BosonPolynomial::zero();
        }
        BosonPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &BosonPolynomial) -> BosonPolynomial {
        let mut out = BosonPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> BosonPolynomial {
        let mut out = BosonPolynomial::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Largest monomial weight appearing, 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(ZMonomial::weight).max().unwrap_or(0)
    }
}

/// The Fock inner product: distinct monomials are orthogonal and
/// `<m, m> = prod_j k_j! * j^{k_j}`, extended bilinearly.
pub fn boson_inner(f: &BosonPolynomial, g: &BosonPolynomial) -> BigRational {
    let mut acc = BigRational::zero();
    for (m, cf) in f.terms() {
        if let Some(cg) = g.terms.get(m) {
            let norm2 = BigRational::from_integer(z_mu(&m.to_partition()).into());
            acc += cf * cg * norm2;
        }
    }
    acc
}

/// `3/2*z1^2 - z2`; zero renders as `0`.
impl fmt::Display for BosonPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_terms(f, self.terms.iter(), |m| {
            if m.is_one() {
                None
            } else {
                Some(m.to_string())
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn z(j: u32) -> BosonPolynomial {
        BosonPolynomial::monomial(ZMonomial::var(j), int(1))
    }

    #[test]
    fn ring_operations() {
        assert!(z(1).add(&z(1).neg()).is_zero());
        let z1sq = BosonPolynomial::monomial(ZMonomial::new(&[(1, 2)]), int(1));
        assert_eq!(z(1).mul(&z(1)), z1sq);
        let expected = BosonPolynomial::from_terms([
            (ZMonomial::new(&[(1, 2)]), int(1)),
            (ZMonomial::new(&[(1, 1), (2, 1)]), int(1)),
        ]);
        assert_eq!(z(1).add(&z(2)).mul(&z(1)), expected);
    }

    #[test]
    fn inner_product_examples() {
        let one = BosonPolynomial::one();
        assert_eq!(boson_inner(&one, &one), int(1));
        let z1sq = z(1).mul(&z(1));
        assert_eq!(boson_inner(&z1sq, &z1sq), int(2));
        assert_eq!(boson_inner(&z(2), &z(2)), int(2));
        assert_eq!(boson_inner(&z(1), &z(2)), int(0));
        let z1z2 = z(1).mul(&z(2));
        assert_eq!(boson_inner(&z1z2, &z1z2), int(2));
    }

    #[test]
    fn weight_orthogonality() {
        // monomials of different weight are distinct, hence orthogonal
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                if a == b {
                    continue;
                }
                for mu in crate::combinatorics::partitions_of(a) {
                    for nu in crate::combinatorics::partitions_of(b) {
                        let f = BosonPolynomial::monomial(ZMonomial::from_partition(&mu), int(1));
                        let g = BosonPolynomial::monomial(ZMonomial::from_partition(&nu), int(1));
                        assert!(boson_inner(&f, &g).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let f = BosonPolynomial::from_terms([
            (ZMonomial::new(&[(1, 2)]), rat(3, 2)),
            (ZMonomial::var(2), int(-1)),
        ]);
        assert_eq!(f.to_string(), "3/2*z1^2 - z2");
        assert_eq!(BosonPolynomial::zero().to_string(), "0");
        assert_eq!(ZMonomial::new(&[(3, 1), (1, 2)]).to_string(), "z1^2*z3");
    }

    #[test]
    fn partition_codec() {
        let m = ZMonomial::new(&[(1, 2), (3, 1)]);
        let mu = m.to_partition();
        assert_eq!(mu.parts(), &[3, 1, 1]);
        assert_eq!(ZMonomial::from_partition(&mu), m);
        assert_eq!(m.weight(), mu.weight());
    }
}
