use std::fmt;

use serde::{Deserialize, Serialize};

use crate::presentations::{ArtinType, Word};

/// Image in the abelianization: `Z` or a pair of conjugacy-class exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AbImage {
    Rank1(i64),
    Rank2(i64, i64),
}

impl fmt::Display for AbImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbImage::Rank1(r) => write!(f, "{r}"),
            AbImage::Rank2(r, s) => write!(f, "({r}, {s})"),
        }
    }
}

/// Which exponent class generator `i` (1-based) contributes to, or `None`
/// when the abelianization is taken to be `Z`.
///
/// For `AffC` the true abelianization is `Z³`; the end generators are lumped
/// together to keep the pair form.
pub(crate) fn generator_class(t: ArtinType, i: usize) -> Option<u8> {
    match t {
        ArtinType::B(n) => Some(if i == n { 2 } else { 1 }),
        ArtinType::I2(m) if m % 2 == 0 => Some(i as u8),
        ArtinType::F4 => Some(if i <= 2 { 1 } else { 2 }),
        ArtinType::AffC(n) => Some(if i == 1 || i == n { 2 } else { 1 }),
        ArtinType::A(_) | ArtinType::AffA(_) | ArtinType::I2(_) => None,
    }
}

pub fn has_rank2_abelianization(t: ArtinType) -> bool {
    generator_class(t, 1).is_some()
}

pub fn abelianization(t: ArtinType, w: &Word) -> AbImage {
    if !has_rank2_abelianization(t) {
        return AbImage::Rank1(w.exponent_sum());
    }
    let (mut r, mut s) = (0i64, 0i64);
    for &l in w.letters() {
        let e = l.signum() as i64;
        match generator_class(t, l.unsigned_abs() as usize) {
            Some(1) => r += e,
            _ => s += e,
        }
    }
    AbImage::Rank2(r, s)
}

/// Abelianized image of a single generator.
pub fn generator_image(t: ArtinType, i: usize) -> AbImage {
    abelianization(t, &Word::generator(i))
}
