//! Equality oracles bound to each supported group.
//!
//! `B`, affine `C` and affine `A` words are decided by pushing them into the
//! braid group along the catalog embeddings, which are injective.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{center_data, BraidOracle, DEFAULT_GARSIDE_THRESHOLD};
use crate::dihedral::DihedralOracle;
use crate::error::{ArtinError, Result};
use crate::freegroup::DEFAULT_LETTER_BUDGET;
use crate::presentations::{ArtinType, Word};

use super::{apply, catalog, compose, Morphism};

/// A group that words and morphisms live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupRef {
    Artin(ArtinType),
    /// The quotient of a finite type group by its centre.
    ModCenter(ArtinType),
    /// The infinite cyclic group, one generator.
    Cyclic,
}

impl GroupRef {
    pub fn braid(n: usize) -> Self {
        GroupRef::Artin(ArtinType::A(n))
    }

    pub fn rank(self) -> usize {
        match self {
            GroupRef::Artin(t) | GroupRef::ModCenter(t) => t.rank(),
            GroupRef::Cyclic => 1,
        }
    }

    pub fn artin_type(self) -> Option<ArtinType> {
        match self {
            GroupRef::Artin(t) | GroupRef::ModCenter(t) => Some(t),
            GroupRef::Cyclic => None,
        }
    }

    pub fn oracle(self, cfg: &OracleConfig) -> Result<Box<dyn WordOracle>> {
        match self {
            GroupRef::Cyclic => Ok(Box::new(CyclicOracle)),
            GroupRef::Artin(t) => artin_oracle(t, cfg),
            GroupRef::ModCenter(t) => {
                let inner = artin_oracle(t, cfg)?;
                match center_data(t)? {
                    None => Ok(inner),
                    Some(c) => Ok(Box::new(QuotientByCenter {
                        inner,
                        zeta: c.zeta,
                        d: c.d,
                    })),
                }
            }
        }
    }
}

impl fmt::Display for GroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupRef::Artin(t) => write!(f, "{t}"),
            GroupRef::ModCenter(t) => write!(f, "{t}/Z"),
            GroupRef::Cyclic => f.write_str("Z"),
        }
    }
}

impl FromStr for GroupRef {
    type Err = ArtinError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(GroupRef::Cyclic);
        }
        match s.strip_suffix("/Z") {
            Some(base) => Ok(GroupRef::ModCenter(base.parse()?)),
            None => Ok(GroupRef::Artin(s.parse()?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub letter_budget: usize,
    pub garside_threshold: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            letter_budget: DEFAULT_LETTER_BUDGET,
            garside_threshold: DEFAULT_GARSIDE_THRESHOLD,
        }
    }
}

/// Decides equality of words in one group.
pub trait WordOracle: Send + Sync {
    fn rank(&self) -> usize;

    fn equal(&self, u: &Word, v: &Word) -> Result<bool>;

    fn is_central(&self, w: &Word) -> Result<bool> {
        for i in 1..=self.rank() {
            let s = Word::generator(i);
            if !self.equal(&w.concat(&s), &s.concat(w))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl WordOracle for BraidOracle {
    fn rank(&self) -> usize {
        BraidOracle::rank(self)
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        BraidOracle::equal(self, u, v)
    }
}

impl WordOracle for DihedralOracle {
    fn rank(&self) -> usize {
        2
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        DihedralOracle::equal(self, u, v)
    }
}

struct CyclicOracle;

impl WordOracle for CyclicOracle {
    fn rank(&self) -> usize {
        1
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        u.check_rank(1)?;
        v.check_rank(1)?;
        Ok(u.exponent_sum() == v.exponent_sum())
    }
}

/// Decides a group through an injective homomorphism into another.
struct PushForward {
    embedding: Morphism,
    inner: Box<dyn WordOracle>,
}

impl WordOracle for PushForward {
    fn rank(&self) -> usize {
        self.embedding.domain.rank()
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.inner
            .equal(&apply(&self.embedding, u)?, &apply(&self.embedding, v)?)
    }
}

struct QuotientByCenter {
    inner: Box<dyn WordOracle>,
    zeta: Word,
    d: i64,
}

impl WordOracle for QuotientByCenter {
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        let quotient = u.concat(&v.inverse());
        let len = quotient.exponent_sum();
        if len % self.d != 0 {
            return Ok(false);
        }
        self.inner.equal(&quotient, &self.zeta.pow(len / self.d))
    }
}

fn artin_oracle(t: ArtinType, cfg: &OracleConfig) -> Result<Box<dyn WordOracle>> {
    let t = t.validate()?;
    let braid = |n: usize| -> Box<dyn WordOracle> {
        Box::new(
            BraidOracle::new(n)
                .with_budget(cfg.letter_budget)
                .with_garside_threshold(cfg.garside_threshold),
        )
    };
    let push = |embedding: Morphism, n: usize| -> Box<dyn WordOracle> {
        Box::new(PushForward {
            embedding,
            inner: braid(n),
        })
    };
    Ok(match t {
        ArtinType::A(n) => braid(n),
        ArtinType::B(n) => push(catalog::embed_b_in_a(n)?, n),
        ArtinType::AffC(n) => push(catalog::embed_affc_in_a(n)?, n),
        ArtinType::AffA(n) => push(
            compose(&catalog::affa_in_b(n)?, &catalog::embed_b_in_a(n)?)?,
            n,
        ),
        ArtinType::I2(m) => Box::new(DihedralOracle::new(m)?),
        ArtinType::F4 => {
            return Err(ArtinError::Unsupported(
                "no word problem oracle is bound to F4".into(),
            ))
        }
    })
}

/// Equality in `g` with default budgets.
pub fn group_equal(g: GroupRef, u: &Word, v: &Word) -> Result<bool> {
    g.oracle(&OracleConfig::default())?.equal(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32]) -> Word {
        Word::new(l.to_vec())
    }

    #[test]
    fn tags() {
        assert_eq!("A:3/Z".parse::<GroupRef>().unwrap(), GroupRef::ModCenter(ArtinType::A(3)));
        assert_eq!("B:4".parse::<GroupRef>().unwrap(), GroupRef::Artin(ArtinType::B(4)));
        assert_eq!("Z".parse::<GroupRef>().unwrap(), GroupRef::Cyclic);
        assert_eq!(GroupRef::ModCenter(ArtinType::I2(4)).to_string(), "I2:4/Z");
        assert!("X:3".parse::<GroupRef>().is_err());
    }

    #[test]
    fn type_b_relations_hold_through_the_embedding() {
        let b = GroupRef::Artin(ArtinType::B(3));
        assert!(group_equal(b, &w(&[2, 3, 2, 3]), &w(&[3, 2, 3, 2])).unwrap());
        assert!(!group_equal(b, &w(&[2, 3, 2]), &w(&[3, 2, 3])).unwrap());
    }

    #[test]
    fn affine_relations_hold_through_embeddings() {
        let a = GroupRef::Artin(ArtinType::AffA(4));
        assert!(group_equal(a, &w(&[4, 1, 4]), &w(&[1, 4, 1])).unwrap());
        assert!(group_equal(a, &w(&[1, 3]), &w(&[3, 1])).unwrap());
        assert!(!group_equal(a, &w(&[1, 2]), &w(&[2, 1])).unwrap());
        let c = GroupRef::Artin(ArtinType::AffC(4));
        assert!(group_equal(c, &w(&[1, 2, 1, 2]), &w(&[2, 1, 2, 1])).unwrap());
        assert!(group_equal(c, &w(&[3, 4, 3, 4]), &w(&[4, 3, 4, 3])).unwrap());
    }

    #[test]
    fn quotient_by_centre() {
        let g = GroupRef::ModCenter(ArtinType::A(3));
        assert!(!group_equal(g, &w(&[1]), &w(&[2])).unwrap());
        let z = center_data(ArtinType::A(3)).unwrap().unwrap().zeta;
        assert!(group_equal(g, &w(&[2]), &w(&[2]).concat(&z)).unwrap());
        let bz = GroupRef::ModCenter(ArtinType::B(3));
        let delta3 = w(&[1, 2, 3]).pow(3);
        assert!(group_equal(bz, &delta3, &Word::empty()).unwrap());
        assert!(!group_equal(GroupRef::Artin(ArtinType::B(3)), &delta3, &Word::empty()).unwrap());
    }

    #[test]
    fn cyclic_and_f4() {
        assert!(group_equal(GroupRef::Cyclic, &w(&[1, 1, -1]), &w(&[1])).unwrap());
        assert!(matches!(
            GroupRef::Artin(ArtinType::F4).oracle(&OracleConfig::default()),
            Err(ArtinError::Unsupported(_))
        ));
    }
}
