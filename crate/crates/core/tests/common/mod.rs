//! Independent oracles shared by the integration suites. Nothing here
//! goes through the Murnaghan-Nakayama recursion or `truncate_S`: the
//! Vandermonde is expanded as a literal product and characters are read
//! off as bialternant coefficients.

use num::BigRational;

use fockbridge::combinatorics::Partition;
use fockbridge::symm::{truncate_symm, SymmElement, TruncatedPolynomial};

/// `prod_{1 <= i < j <= n} (x_i - x_j)` expanded term by term.
pub fn vandermonde_product(n: usize) -> TruncatedPolynomial {
    let one = BigRational::from_integer(1.into());
    let mut out = TruncatedPolynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut factor = TruncatedPolynomial::zero(n);
            let mut xi = vec![0u32; n];
            xi[i] = 1;
            factor.add_term(xi, one.clone());
            let mut xj = vec![0u32; n];
            xj[j] = 1;
            factor.add_term(xj, -one.clone());
            out = out.mul(&factor);
        }
    }
    out
}

/// Brute-force character value: expand `p_mu * Vandermonde_n` in
/// `n = |mu|` variables and read the coefficient of the bialternant
/// leading monomial `x^(lambda_j + n - j)`.
pub fn brute_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.weight(), mu.weight());
    let n = mu.weight() as usize;
    if n == 0 {
        return 1;
    }
    let p_mu = SymmElement::basis_term(mu.clone(), BigRational::from_integer(1.into()));
    let poly = truncate_symm(&p_mu, n).mul(&vandermonde_product(n));
    let exps: Vec<u32> = (0..n)
        .map(|i| {
            let part = lambda.parts().get(i).copied().unwrap_or(0);
            part + (n - 1 - i) as u32
        })
        .collect();
    let coeff = poly.coeff(&exps);
    assert!(coeff.is_integer(), "bialternant coefficient must be integral");
    i64::try_from(coeff.to_integer()).expect("character fits in i64")
}

#[allow(dead_code)]
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
