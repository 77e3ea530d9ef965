//! Homomorphisms given by generator images, their verification against the
//! defining relations, and the named maps of [`catalog`].

mod abelian;
pub mod catalog;
mod oracle;
mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::center_data;
use crate::error::{ArtinError, Result};
use crate::presentations::{presentation, ArtinType, Relation, Word};

pub use abelian::{abelianization, generator_image, has_rank2_abelianization, AbImage};
pub use catalog::catalog;
pub use oracle::{group_equal, GroupRef, OracleConfig, WordOracle};
pub use tables::{reference_tables, ReferenceRow};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub name: String,
    pub domain: GroupRef,
    pub codomain: GroupRef,
    /// Image of each domain generator, in codomain letters.
    pub images: Vec<Word>,
}

impl Morphism {
    pub fn new(name: String, domain: GroupRef, codomain: GroupRef, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(ArtinError::RankMismatch {
                expected: domain.rank(),
                found: images.len(),
            });
        }
        for img in &images {
            img.check_rank(codomain.rank())?;
        }
        Ok(Morphism {
            name,
            domain,
            codomain,
            images,
        })
    }

    /// Stable text form: name, domain, codomain, then one image per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "name: {}\ndomain: {}\ncodomain: {}\nimages:\n",
            self.name, self.domain, self.codomain
        );
        for (i, img) in self.images.iter().enumerate() {
            out.push_str(&format!("  {} -> [{}]\n", i + 1, img));
        }
        out
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.domain, self.codomain)
    }
}

/// Relations a homomorphism out of `g` must respect.
pub fn domain_relations(g: GroupRef) -> Result<Vec<Relation>> {
    match g {
        GroupRef::Cyclic => Ok(Vec::new()),
        GroupRef::Artin(t) => Ok(presentation(t)?.relations),
        GroupRef::ModCenter(t) => {
            let mut rels = presentation(t)?.relations;
            if let Some(c) = center_data(t)? {
                rels.push(Relation {
                    lhs: c.zeta,
                    rhs: Word::empty(),
                });
            }
            Ok(rels)
        }
    }
}

/// Outcome of checking every domain relation in the codomain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub checked: usize,
    /// Indices into the domain relation list that fail.
    pub failures: Vec<usize>,
}

pub fn verify_morphism(f: &Morphism) -> Result<VerifyReport> {
    verify_morphism_with(f, &OracleConfig::default())
}

pub fn verify_morphism_with(f: &Morphism, cfg: &OracleConfig) -> Result<VerifyReport> {
    let oracle = f.codomain.oracle(cfg)?;
    let relations = domain_relations(f.domain)?;
    let mut failures = Vec::new();
    for (idx, rel) in relations.iter().enumerate() {
        let lhs = apply(f, &rel.lhs)?;
        let rhs = apply(f, &rel.rhs)?;
        if !oracle.equal(&lhs, &rhs)? {
            failures.push(idx);
        }
    }
    Ok(VerifyReport {
        ok: failures.is_empty(),
        checked: relations.len(),
        failures,
    })
}

/// Substitutes images letterwise; the result is freely reduced.
pub fn apply(f: &Morphism, w: &Word) -> Result<Word> {
    w.check_rank(f.domain.rank())?;
    let mut out: Vec<i32> = Vec::new();
    for &l in w.letters() {
        let img = f.images[l.unsigned_abs() as usize - 1].letters();
        if l > 0 {
            crate::freegroup::push_reduced(&mut out, img.iter().copied());
        } else {
            crate::freegroup::push_reduced(&mut out, img.iter().rev().map(|x| -x));
        }
    }
    Ok(Word::new(out))
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.codomain != g.domain {
        return Err(ArtinError::Mismatch(format!(
            "{} lands in {}, but {} starts from {}",
            f.name, f.codomain, g.name, g.domain
        )));
    }
    let images = f
        .images
        .iter()
        .map(|img| apply(g, img))
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(
        format!("{}*{}", g.name, f.name),
        f.domain,
        g.codomain,
        images,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Preserving,
    Reversing,
    Neither,
}

/// Compares `ℓ` of each generator image with `±1`.
pub fn length_class(f: &Morphism) -> LengthClass {
    let lengths: Vec<i64> = f.images.iter().map(Word::exponent_sum).collect();
    if lengths.iter().all(|&l| l == 1) {
        LengthClass::Preserving
    } else if lengths.iter().all(|&l| l == -1) {
        LengthClass::Reversing
    } else {
        LengthClass::Neither
    }
}

/// Multiplies image `i` by `ζ^{exponents[i]}`: a different representative of
/// the same map modulo the centre.
pub fn shift_by_center(t: ArtinType, images: &[Word], exponents: &[i64]) -> Result<Vec<Word>> {
    let c = center_data(t)?.ok_or_else(|| ArtinError::TrivialCenter(t.to_string()))?;
    Ok(images
        .iter()
        .zip(exponents)
        .map(|(img, &k)| img.concat(&c.zeta.pow(k)))
        .collect())
}

/// Picks, for each image given modulo the centre, the representative of
/// length `sense`.
pub fn lift_mod_center(t: ArtinType, images_mod_z: &[Word], sense: i64) -> Result<Morphism> {
    if sense != 1 && sense != -1 {
        return Err(ArtinError::OutOfRange(format!("sense must be ±1, got {sense}")));
    }
    let c = center_data(t)?.ok_or_else(|| ArtinError::TrivialCenter(t.to_string()))?;
    let mut images = Vec::with_capacity(images_mod_z.len());
    for (index, img) in images_mod_z.iter().enumerate() {
        let length = img.exponent_sum();
        if (sense - length).rem_euclid(c.d) != 0 {
            return Err(ArtinError::NotLiftable {
                index: index + 1,
                length,
                target: sense,
                modulus: c.d,
            });
        }
        let k = (sense - length) / c.d;
        images.push(img.concat(&c.zeta.pow(k)).free_reduce());
    }
    let g = GroupRef::Artin(t);
    Morphism::new(format!("lift[{t}]"), g, g, images)
}
