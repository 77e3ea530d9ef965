//! Transvections `T_λ(x) = x·λ(x)` for a homomorphism `λ` into the centre.
//!
//! A transvection is stored by the parameters of `λ`: a pair `(p, q)` with
//! `λ(x) = ζ^{p·r + q·s}` where `(r, s)` is the abelianized image of `x`, or
//! a single `m` with `λ(x) = ζ^{m·ℓ(x)}` when the abelianization is `Z`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::braid::{center_data, CenterData};
use crate::error::{ArtinError, Result};
use crate::morphisms::{generator_image, has_rank2_abelianization, AbImage, GroupRef, Morphism};
use crate::presentations::{ArtinType, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TvParam {
    Pair(i64, i64),
    Single(i64),
}

impl fmt::Display for TvParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TvParam::Pair(p, q) => write!(f, "({p}, {q})"),
            TvParam::Single(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transvection {
    group: ArtinType,
    param: TvParam,
}

fn centre(t: ArtinType) -> Result<CenterData> {
    center_data(t)?.ok_or_else(|| ArtinError::TrivialCenter(t.to_string()))
}

impl Transvection {
    pub fn new(group: ArtinType, param: TvParam) -> Result<Self> {
        centre(group)?;
        let rank2 = has_rank2_abelianization(group);
        match (rank2, param) {
            (true, TvParam::Pair(..)) | (false, TvParam::Single(_)) => Ok(Transvection { group, param }),
            (true, TvParam::Single(_)) => Err(ArtinError::OutOfRange(format!(
                "{group} has abelianization Z×Z; give (p, q)"
            ))),
            (false, TvParam::Pair(..)) => Err(ArtinError::OutOfRange(format!(
                "{group} has abelianization Z; give a single m"
            ))),
        }
    }

    pub fn pair(group: ArtinType, p: i64, q: i64) -> Result<Self> {
        Self::new(group, TvParam::Pair(p, q))
    }

    pub fn single(group: ArtinType, m: i64) -> Result<Self> {
        Self::new(group, TvParam::Single(m))
    }

    pub fn group(&self) -> ArtinType {
        self.group
    }

    pub fn param(&self) -> TvParam {
        self.param
    }

    /// `ζ`-exponent of `λ` on an element with abelianized image `ab`.
    fn lambda(&self, ab: AbImage) -> i64 {
        match (self.param, ab) {
            (TvParam::Pair(p, q), AbImage::Rank2(r, s)) => p * r + q * s,
            (TvParam::Single(m), AbImage::Rank1(l)) => m * l,
            _ => unreachable!("parameter shape checked in Transvection::new"),
        }
    }
}

impl fmt::Display for Transvection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}[{}]", self.param, self.group)
    }
}

/// `k` with `T(ζ) = ζ^k`.
pub fn zeta_exponent(t: &Transvection) -> Result<i64> {
    let c = centre(t.group)?;
    Ok(1 + t.lambda(c.ab_image))
}

pub fn is_automorphism(t: &Transvection) -> Result<bool> {
    Ok(zeta_exponent(t)?.abs() == 1)
}

/// `T ∘ U` (apply `U` first), defined when `T` is an automorphism.
pub fn tv_compose(t: &Transvection, u: &Transvection) -> Result<Transvection> {
    if t.group != u.group {
        return Err(ArtinError::Mismatch(format!("{} vs {}", t.group, u.group)));
    }
    let sign = match zeta_exponent(t)? {
        1 => 1,
        -1 => -1,
        k => {
            return Err(ArtinError::UndefinedComposition(format!(
                "{t} sends ζ to ζ^{k}, not ζ^±1"
            )))
        }
    };
    let param = match (t.param, u.param) {
        (TvParam::Pair(p, q), TvParam::Pair(p2, q2)) => TvParam::Pair(p + sign * p2, q + sign * q2),
        (TvParam::Single(m), TvParam::Single(m2)) => TvParam::Single(m + sign * m2),
        _ => unreachable!("same group implies same parameter shape"),
    };
    Ok(Transvection {
        group: t.group,
        param,
    })
}

/// The group of transvection automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TvStructure {
    Trivial,
    /// `Z`, generated by the given parameter.
    Cyclic { generator: TvParam },
    /// `D_∞`, generated by a translation and a reflection.
    InfiniteDihedral {
        translation: TvParam,
        reflection: TvParam,
    },
}

impl fmt::Display for TvStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TvStructure::Trivial => f.write_str("trivial"),
            TvStructure::Cyclic { generator } => write!(f, "Z generated by {generator}"),
            TvStructure::InfiniteDihedral {
                translation,
                reflection,
            } => write!(f, "D_inf generated by {translation} and {reflection}"),
        }
    }
}

pub fn tv_structure(t: ArtinType) -> Result<TvStructure> {
    let t = t.validate()?;
    Ok(match t {
        ArtinType::B(n) => TvStructure::Cyclic {
            generator: TvParam::Pair(1, -(n as i64 - 1)),
        },
        ArtinType::F4 => TvStructure::Cyclic {
            generator: TvParam::Pair(1, -1),
        },
        ArtinType::I2(4) => TvStructure::InfiniteDihedral {
            translation: TvParam::Pair(1, -1),
            reflection: TvParam::Pair(0, -1),
        },
        ArtinType::I2(m) if m % 2 == 0 => TvStructure::Cyclic {
            generator: TvParam::Pair(1, -1),
        },
        // Abelianization Z: k = 1 + m·d = ±1 forces m = 0 since d > 2.
        ArtinType::A(_) | ArtinType::I2(_) => TvStructure::Trivial,
        ArtinType::AffA(_) | ArtinType::AffC(_) => TvStructure::Trivial,
    })
}

/// Image of a word: `s_i ↦ s_i ζ^{e_i}`, `s_i⁻¹ ↦ s_i⁻¹ ζ^{-e_i}`.
pub fn tv_apply(t: &Transvection, w: &Word) -> Result<Word> {
    if t.group == ArtinType::F4 {
        return Err(ArtinError::Unsupported(
            "F4 transvections are handled at parameter level only".into(),
        ));
    }
    w.check_rank(t.group.rank())?;
    let c = centre(t.group)?;
    let mut out = Vec::new();
    for &l in w.letters() {
        let e = t.lambda(generator_image(t.group, l.unsigned_abs() as usize));
        out.push(l);
        let power = if l > 0 { e } else { -e };
        out.extend_from_slice(c.zeta.pow(power).letters());
    }
    Ok(Word::new(out).free_reduce())
}

/// The transvection as an endomorphism given by generator images.
pub fn tv_morphism(t: &Transvection) -> Result<Morphism> {
    let images = (1..=t.group.rank())
        .map(|i| tv_apply(t, &Word::generator(i)))
        .collect::<Result<Vec<_>>>()?;
    let g = GroupRef::Artin(t.group);
    Morphism::new(t.to_string(), g, g, images)
}

/// `n_1 = 1 + d`, `n_{i+1} = 1 + d·n_1⋯n_i`.
pub fn comm_sequence(d: i64, count: usize) -> Result<Vec<BigInt>> {
    if d < 3 || count < 1 {
        return Err(ArtinError::OutOfRange(format!(
            "need d >= 3 and count >= 1 (got d = {d}, count = {count})"
        )));
    }
    let d = BigInt::from(d);
    let mut product = BigInt::one();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let next = BigInt::one() + &d * &product;
        product *= &next;
        out.push(next);
    }
    Ok(out)
}

/// Whether every entry is `≡ 1 mod d` and all pairs are coprime.
pub fn sequence_is_coprime_and_unit(d: i64, seq: &[BigInt]) -> bool {
    let d = BigInt::from(d);
    let residues_ok = seq.iter().all(|x| x.mod_floor(&d).is_one());
    let coprime = seq
        .iter()
        .enumerate()
        .all(|(i, a)| seq[i + 1..].iter().all(|b| a.gcd(b).abs().is_one()));
    residues_ok && coprime
}

/// Result of composing `T_{md+1} ∘ T_{kd+1}` at parameter level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommComposition {
    /// `M` with `T_{md+1} ∘ T_{kd+1} = T_{Md+1}`.
    pub composite_param: BigInt,
    pub composite_exponent: BigInt,
    pub product_of_exponents: BigInt,
}

/// Composes `λ_k` then `λ_m` by tracking the `ζ`-exponent per unit of
/// length: `T_k` contributes `k`, and `T_m` sends `a` to `a ζ^m` and `ζ` to
/// `ζ^{md+1}`.
pub fn comm_compose(d: i64, m: i64, k: i64) -> CommComposition {
    let (d, m, k) = (BigInt::from(d), BigInt::from(m), BigInt::from(k));
    let one = BigInt::one();
    let zeta_image = &m * &d + &one;
    let composite_param = &m + &k * &zeta_image;
    let composite_exponent = &composite_param * &d + &one;
    let product_of_exponents = zeta_image * (&k * &d + &one);
    CommComposition {
        composite_param,
        composite_exponent,
        product_of_exponents,
    }
}

pub fn comm_compose_check(d: i64, m: i64, k: i64) -> bool {
    let c = comm_compose(d, m, k);
    c.composite_exponent == c.product_of_exponents
}
