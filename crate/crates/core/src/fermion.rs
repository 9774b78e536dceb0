//! The fermionic Fock space: wedge monomials `xi_{l_1} xi_{l_2} ...` in
//! anticommuting variables with the charge-zero tail `l_j = j`, and the
//! basis identification with the skew-symmetric side.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};

use crate::asymm::AsymmVector;
use crate::combinatorics::MayaIndex;

/// An ordered product of anticommuting variables with charge-zero tail,
/// canonically stored as its Maya index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeMonomial {
    index: MayaIndex,
}

impl WedgeMonomial {
    pub fn new(index: MayaIndex) -> Self {
        WedgeMonomial { index }
    }

    /// The vacuum `xi_1 xi_2 xi_3 ...`.
    pub fn vacuum() -> Self {
        WedgeMonomial {
            index: MayaIndex::vacuum(),
        }
    }

    pub fn index(&self) -> &MayaIndex {
        &self.index
    }
}

/// `xi[-1,2]` lists exactly the entries differing from the tail; the
/// vacuum is `xi[]`.
impl fmt::Display for WedgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi{}", self.index)
    }
}

/// Result of normal-ordering a wedge product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizedWedge {
    /// A repeated variable appeared (possibly colliding with the implied
    /// tail); the product is zero.
    Zero,
    /// The sorted canonical monomial together with the parity of the
    /// sorting permutation.
    Term { sign: i8, monomial: WedgeMonomial },
}

/// Normal-orders `xi_{a_1} ... xi_{a_m}` followed by the standard tail
/// `xi_{m+1} xi_{m+2} ...`.
///
/// Any repeated index, including an index that collides with the implied
/// tail (any `a_i >= m + 1`), kills the product. Otherwise the sorted
/// prefix together with the tail is automatically a charge-zero Maya
/// sequence, and the sign is the parity of the sorting permutation.
pub fn normalize_wedge(indices: &[i64]) -> NormalizedWedge {
    let m = indices.len();
    for (i, &a) in indices.iter().enumerate() {
        if a >= m as i64 + 1 {
            return NormalizedWedge::Zero; // collides with the tail
        }
        if indices[..i].contains(&a) {
            return NormalizedWedge::Zero; // xi_a * xi_a = 0
        }
    }
    // parity of the permutation sorting the prefix = parity of inversions
    let mut inversions = 0usize;
    for i in 0..m {
        for j in i + 1..m {
            if indices[i] > indices[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    let index = MayaIndex::from_prefix(&sorted)
        .expect("distinct indices below the tail form a valid charge-zero prefix");
    NormalizedWedge::Term {
        sign: if inversions % 2 == 0 { 1 } else { -1 },
        monomial: WedgeMonomial::new(index),
    }
}

/// A finite linear combination of wedge monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<WedgeMonomial, BigRational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis_term(w: WedgeMonomial, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(w, coeff);
        }
        FockVector { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (WedgeMonomial, BigRational)>) -> Self {
        let mut out = FockVector::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &WedgeMonomial) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: WedgeMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> FockVector {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_terms(f, self.terms.iter(), |w| Some(w.to_string()))
    }
}

/// Wedge monomials are orthonormal; extend bilinearly.
pub fn fock_inner(f: &FockVector, g: &FockVector) -> BigRational {
    let mut acc = BigRational::zero();
    for (w, cf) in f.terms() {
        if let Some(cg) = g.terms.get(w) {
            acc += cf * cg;
        }
    }
    acc
}

/// Coefficient-preserving relabeling `S_l -> xi_{l_1} xi_{l_2} ...`.
pub fn asymm_to_fermion(f: &AsymmVector) -> FockVector {
    FockVector::from_terms(
        f.terms()
            .map(|(l, c)| (WedgeMonomial::new(l.clone()), c.clone())),
    )
}

/// Exact inverse of [`asymm_to_fermion`].
pub fn fermion_to_asymm(f: &FockVector) -> AsymmVector {
    AsymmVector::from_terms(
        f.terms()
            .map(|(w, c)| (w.index().clone(), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymm::asymm_inner;
    use crate::combinatorics::{partition_to_maya, partitions_of};

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize_wedge(&[0]),
            NormalizedWedge::Term {
                sign: 1,
                monomial: WedgeMonomial::new(MayaIndex::from_prefix(&[0]).unwrap()),
            }
        );
        // one transposition: xi_2 xi_{-1} = -xi_{-1} xi_2
        assert_eq!(
            normalize_wedge(&[2, -1]),
            NormalizedWedge::Term {
                sign: -1,
                monomial: WedgeMonomial::new(MayaIndex::from_prefix(&[-1, 2]).unwrap()),
            }
        );
        assert_eq!(normalize_wedge(&[0, 0]), NormalizedWedge::Zero);
        // collides with the implied tail xi_2 xi_3 ... (m = 1)
        assert_eq!(normalize_wedge(&[5]), NormalizedWedge::Zero);
        assert_eq!(
            normalize_wedge(&[]),
            NormalizedWedge::Term {
                sign: 1,
                monomial: WedgeMonomial::vacuum(),
            }
        );
    }

    #[test]
    fn normalize_sign_matches_inversion_parity() {
        // exhaustive over prefixes of length <= 6 is huge; sample all
        // 3-subsets ordered both ways plus systematic 4-permutations
        let pool: Vec<i64> = (-3..=6).collect();
        for i in 0..pool.len() {
            for j in 0..pool.len() {
                for k in 0..pool.len() {
                    let prefix = [pool[i], pool[j], pool[k]];
                    match normalize_wedge(&prefix) {
                        NormalizedWedge::Zero => {
                            let m = prefix.len() as i64;
                            assert!(
                                prefix[0] == prefix[1]
                                    || prefix[0] == prefix[2]
                                    || prefix[1] == prefix[2]
                                    || prefix.iter().any(|&a| a >= m + 1),
                                "{prefix:?}"
                            );
                        }
                        NormalizedWedge::Term { sign, .. } => {
                            let mut inv = 0;
                            for a in 0..3 {
                                for b in a + 1..3 {
                                    if prefix[a] > prefix[b] {
                                        inv += 1;
                                    }
                                }
                            }
                            let expected = if inv % 2 == 0 { 1 } else { -1 };
                            assert_eq!(sign, expected, "{prefix:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normalize_canonicalizes_tail_overlap() {
        // [1, 2] with implied tail from 3 is the vacuum, written oddly
        assert_eq!(
            normalize_wedge(&[2, 1]),
            NormalizedWedge::Term {
                sign: -1,
                monomial: WedgeMonomial::vacuum(),
            }
        );
    }

    #[test]
    fn fock_inner_examples() {
        let vac = FockVector::basis_term(WedgeMonomial::vacuum(), int(1));
        assert_eq!(fock_inner(&vac, &vac), int(1));
        let a = FockVector::basis_term(
            WedgeMonomial::new(MayaIndex::from_prefix(&[-1, 2]).unwrap()),
            int(1),
        );
        let b = FockVector::basis_term(
            WedgeMonomial::new(MayaIndex::from_prefix(&[0, 1]).unwrap()),
            int(1),
        );
        assert_eq!(fock_inner(&a, &b), int(0));
        // <f, f> = sum of squared coefficients
        let f = a.scale(&rat(2, 3)).add(&b.scale(&int(-3)));
        assert_eq!(fock_inner(&f, &f), rat(4, 9) + int(9));
    }

    #[test]
    fn relabeling_round_trip_and_isometry() {
        let mut f = AsymmVector::zero();
        let mut g = AsymmVector::zero();
        for (i, lam) in partitions_of(8).into_iter().enumerate() {
            let l = partition_to_maya(&lam);
            f.add_term(l.clone(), rat(i as i64 + 1, 3));
            if i % 2 == 0 {
                g.add_term(l, rat(-(i as i64) - 2, 5));
            }
        }
        let ff = asymm_to_fermion(&f);
        let gg = asymm_to_fermion(&g);
        assert_eq!(fermion_to_asymm(&ff), f);
        assert_eq!(fock_inner(&ff, &gg), asymm_inner(&f, &g));
        assert_eq!(fock_inner(&ff, &ff), asymm_inner(&f, &f));
    }

    #[test]
    fn rendering() {
        let f = FockVector::from_terms([
            (
                WedgeMonomial::new(MayaIndex::from_prefix(&[-1, 2]).unwrap()),
                int(1),
            ),
            (WedgeMonomial::vacuum(), int(1)),
        ]);
        // [-1,2] lists a tail entry; canonical prefix is [-1]
        assert_eq!(f.to_string(), "xi[] + xi[-1]");
        assert_eq!(
            FockVector::basis_term(WedgeMonomial::vacuum(), int(1)).to_string(),
            "xi[]"
        );
    }
}
