//! Machine-readable vector documents: one JSON document per vector with
//! a `space` tag and a list of `{coeff, key}` terms. Coefficients are
//! reduced rationals rendered as `a/b` (integers without the
//! denominator). Partitions are the canonical key for the asymm and
//! fermion spaces; Maya prefixes are presentation only.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::BigRational;
use serde::{Deserialize, Serialize};

use fockbridge::asymm::AsymmVector;
use fockbridge::boson::{BosonPolynomial, ZMonomial};
use fockbridge::combinatorics::{MayaIndex, Partition};
use fockbridge::fermion::{FockVector, WedgeMonomial};
use fockbridge::symm::{SchurExpansion, SymmElement};

use crate::spaces::{Space, Value};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    pub space: String,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<BTreeMap<String, u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
}

impl TermDoc {
    fn coeff_only(coeff: &BigRational) -> Self {
        TermDoc {
            coeff: coeff.to_string(),
            exponents: None,
            mu: None,
            lambda: None,
            partition: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError(pub String);

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid document: {}", self.0)
    }
}

impl std::error::Error for DocError {}

pub fn to_document(value: &Value) -> Document {
    match value {
        Value::Boson(f) => Document {
            space: Space::Boson.tag().into(),
            terms: f
                .terms()
                .map(|(m, c)| {
                    let mut t = TermDoc::coeff_only(c);
                    t.exponents = Some(
                        m.exponents()
                            .iter()
                            .map(|&(var, exp)| (var.to_string(), exp))
                            .collect(),
                    );
                    t
                })
                .collect(),
        },
        Value::SymmP(f) => Document {
            space: Space::SymmP.tag().into(),
            terms: f
                .terms()
                .map(|(mu, c)| {
                    let mut t = TermDoc::coeff_only(c);
                    t.mu = Some(mu.parts().to_vec());
                    t
                })
                .collect(),
        },
        Value::SymmS(f) => Document {
            space: Space::SymmS.tag().into(),
            terms: f
                .terms()
                .map(|(lambda, c)| {
                    let mut t = TermDoc::coeff_only(c);
                    t.lambda = Some(lambda.parts().to_vec());
                    t
                })
                .collect(),
        },
        Value::Asymm(f) => Document {
            space: Space::Asymm.tag().into(),
            terms: f
                .terms()
                .map(|(l, c)| {
                    let mut t = TermDoc::coeff_only(c);
                    t.partition = Some(l.partition().parts().to_vec());
                    t
                })
                .collect(),
        },
        Value::Fermion(f) => Document {
            space: Space::Fermion.tag().into(),
            terms: f
                .terms()
                .map(|(w, c)| {
                    let mut t = TermDoc::coeff_only(c);
                    t.partition = Some(w.index().partition().parts().to_vec());
                    t
                })
                .collect(),
        },
    }
}

pub fn from_document(doc: &Document) -> Result<Value, DocError> {
    let space = Space::from_tag(&doc.space)
        .ok_or_else(|| DocError(format!("unknown space '{}'", doc.space)))?;
    let coeff = |t: &TermDoc| -> Result<BigRational, DocError> {
        BigRational::from_str(&t.coeff)
            .map_err(|_| DocError(format!("bad coefficient '{}'", t.coeff)))
    };
    let partition_key = |parts: &Option<Vec<u32>>, name: &str| -> Result<Partition, DocError> {
        let parts = parts
            .as_ref()
            .ok_or_else(|| DocError(format!("term is missing the '{name}' key")))?;
        Partition::new(parts.clone()).map_err(|e| DocError(e.to_string()))
    };
    match space {
        Space::Boson => {
            let mut out = BosonPolynomial::zero();
            for t in &doc.terms {
                let exps = t
                    .exponents
                    .as_ref()
                    .ok_or_else(|| DocError("term is missing the 'exponents' key".into()))?;
                let mut pairs = Vec::new();
                for (var, &exp) in exps {
                    let var: u32 = var
                        .parse()
                        .map_err(|_| DocError(format!("bad variable index '{var}'")))?;
                    if var == 0 {
                        return Err(DocError("variable indices start at 1".into()));
                    }
                    pairs.push((var, exp));
                }
                out = out.add(&BosonPolynomial::monomial(ZMonomial::new(&pairs), coeff(t)?));
            }
            Ok(Value::Boson(out))
        }
        Space::SymmP => {
            let mut terms = Vec::new();
            for t in &doc.terms {
                terms.push((partition_key(&t.mu, "mu")?, coeff(t)?));
            }
            Ok(Value::SymmP(SymmElement::from_terms(terms)))
        }
        Space::SymmS => {
            let mut terms = Vec::new();
            for t in &doc.terms {
                terms.push((partition_key(&t.lambda, "lambda")?, coeff(t)?));
            }
            Ok(Value::SymmS(SchurExpansion::from_terms(terms)))
        }
        Space::Asymm => {
            let mut terms = Vec::new();
            for t in &doc.terms {
                let p = partition_key(&t.partition, "partition")?;
                terms.push((MayaIndex::from_partition(p), coeff(t)?));
            }
            Ok(Value::Asymm(AsymmVector::from_terms(terms)))
        }
        Space::Fermion => {
            let mut terms = Vec::new();
            for t in &doc.terms {
                let p = partition_key(&t.partition, "partition")?;
                terms.push((WedgeMonomial::new(MayaIndex::from_partition(p)), coeff(t)?));
            }
            Ok(Value::Fermion(FockVector::from_terms(terms)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn boson_round_trip() {
        let f = BosonPolynomial::from_terms([
            (ZMonomial::new(&[(1, 2)]), BigRational::new(3.into(), 2.into())),
            (ZMonomial::var(2), int(-1)),
        ]);
        let doc = to_document(&Value::Boson(f.clone()));
        let json = serde_json::to_string(&doc).unwrap();
        let back: Document = serde_json::from_str(&json).unwrap();
        assert_eq!(from_document(&back).unwrap(), Value::Boson(f));
        assert!(json.contains("\"3/2\""));
    }

    #[test]
    fn fermion_round_trip() {
        let f = FockVector::from_terms([
            (
                WedgeMonomial::new(MayaIndex::from_prefix(&[-1]).unwrap()),
                int(1),
            ),
            (WedgeMonomial::vacuum(), int(2)),
        ]);
        let doc = to_document(&Value::Fermion(f.clone()));
        let back = from_document(&doc).unwrap();
        assert_eq!(back, Value::Fermion(f));
    }

    #[test]
    fn rejects_bad_documents() {
        let doc = Document {
            space: "widget".into(),
            terms: vec![],
        };
        assert!(from_document(&doc).is_err());
        let doc = Document {
            space: "fermion".into(),
            terms: vec![TermDoc {
                coeff: "1".into(),
                exponents: None,
                mu: None,
                lambda: None,
                partition: Some(vec![1, 2]), // not weakly decreasing
            }],
        };
        assert!(from_document(&doc).is_err());
    }
}
