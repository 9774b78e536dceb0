//! Conversion routing between the five representations, with the
//! power-sum basis as the hub.

use clap::ValueEnum;

use fockbridge::asymm::{apply_j, apply_j_inverse, AsymmVector};
use fockbridge::boson::BosonPolynomial;
use fockbridge::fermion::{asymm_to_fermion, fermion_to_asymm, FockVector};
use fockbridge::symm::{
    apply_i, apply_i_inverse, power_to_schur, schur_to_power, SchurExpansion, SymmElement,
};

/// Target representation of a conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Boson,
    #[value(name = "symm-p")]
    SymmP,
    #[value(name = "symm-s")]
    SymmS,
    Asymm,
    Fermion,
}

impl Space {
    pub fn tag(self) -> &'static str {
        match self {
            Space::Boson => "boson",
            Space::SymmP => "symm-p",
            Space::SymmS => "symm-s",
            Space::Asymm => "asymm",
            Space::Fermion => "fermion",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Space> {
        match tag {
            "boson" => Some(Space::Boson),
            "symm-p" => Some(Space::SymmP),
            "symm-s" => Some(Space::SymmS),
            "asymm" => Some(Space::Asymm),
            "fermion" => Some(Space::Fermion),
            _ => None,
        }
    }
}

/// A vector in one of the five representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Boson(BosonPolynomial),
    SymmP(SymmElement),
    SymmS(SchurExpansion),
    Asymm(AsymmVector),
    Fermion(FockVector),
}

impl Value {
    pub fn space(&self) -> Space {
        match self {
            Value::Boson(_) => Space::Boson,
            Value::SymmP(_) => Space::SymmP,
            Value::SymmS(_) => Space::SymmS,
            Value::Asymm(_) => Space::Asymm,
            Value::Fermion(_) => Space::Fermion,
        }
    }

    /// Every representation reaches every other through the power-sum
    /// basis; each leg is an exact bijection, so the route does not
    /// matter.
    pub fn convert_to(&self, target: Space) -> Value {
        if self.space() == target {
            return self.clone();
        }
        let hub: SymmElement = match self {
            Value::Boson(f) => apply_i(f),
            Value::SymmP(f) => f.clone(),
            Value::SymmS(f) => schur_to_power(f),
            Value::Asymm(f) => apply_j_inverse(f),
            Value::Fermion(f) => apply_j_inverse(&fermion_to_asymm(f)),
        };
        match target {
            Space::Boson => Value::Boson(apply_i_inverse(&hub)),
            Space::SymmP => Value::SymmP(hub),
            Space::SymmS => Value::SymmS(power_to_schur(&hub)),
            Space::Asymm => Value::Asymm(apply_j(&hub)),
            Space::Fermion => Value::Fermion(asymm_to_fermion(&apply_j(&hub))),
        }
    }

    /// Deterministic text rendering in the space's own syntax.
    pub fn render(&self) -> String {
        match self {
            Value::Boson(f) => f.to_string(),
            Value::SymmP(f) => f.to_string(),
            Value::SymmS(f) => f.to_string(),
            Value::Asymm(f) => f.to_string(),
            Value::Fermion(f) => f.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fockbridge::boson::ZMonomial;
    use num::BigRational;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn conversion_examples() {
        let z1sq = Value::Boson(BosonPolynomial::monomial(ZMonomial::new(&[(1, 2)]), int(1)));
        assert_eq!(z1sq.convert_to(Space::Fermion).render(), "xi[-1] + xi[0,1]");
        let p2 = Value::SymmP(SymmElement::basis_term(
            fockbridge::combinatorics::Partition::new(vec![2]).unwrap(),
            int(1),
        ));
        assert_eq!(p2.convert_to(Space::SymmS).render(), "s(2) - s(1,1)");
        let vac = Value::Fermion(FockVector::basis_term(
            fockbridge::fermion::WedgeMonomial::vacuum(),
            int(1),
        ));
        assert_eq!(vac.convert_to(Space::Boson).render(), "1");
    }

    #[test]
    fn all_routes_round_trip() {
        let start = Value::Boson(BosonPolynomial::from_terms([
            (ZMonomial::new(&[(1, 2), (3, 1)]), BigRational::new(2.into(), 3.into())),
            (ZMonomial::var(2), int(-5)),
            (ZMonomial::one(), int(1)),
        ]));
        for target in [
            Space::Boson,
            Space::SymmP,
            Space::SymmS,
            Space::Asymm,
            Space::Fermion,
        ] {
            let there = start.convert_to(target);
            assert_eq!(there.space(), target);
            assert_eq!(there.convert_to(Space::Boson), start, "via {target:?}");
        }
    }
}
