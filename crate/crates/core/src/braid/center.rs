use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::morphisms::abelianization;
pub use crate::morphisms::AbImage;
use crate::presentations::{ArtinType, Word};

/// Generator `ζ` of the infinite cyclic centre of a finite type group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterData {
    pub group: ArtinType,
    pub zeta: Word,
    /// `ℓ(ζ)`.
    pub d: i64,
    pub ab_image: AbImage,
    /// Where the choice of `ζ` comes from, when it is not the usual Garside
    /// element power.
    pub note: Option<String>,
}

/// `None` for the affine types, whose centre is trivial.
pub fn center_data(t: ArtinType) -> Result<Option<CenterData>> {
    let t = t.validate()?;
    let cycle = |n: usize, power: i64| Word::new((1..=n as i32).collect()).pow(power);
    let (zeta, note) = match t {
        ArtinType::A(n) => (cycle(n, n as i64 + 1), None),
        ArtinType::B(n) => (cycle(n, n as i64), None),
        ArtinType::I2(m) if m % 2 == 0 => (cycle(2, m as i64 / 2), None),
        ArtinType::I2(m) => (
            cycle(2, m as i64),
            Some(format!(
                "odd m: ζ = (ab)^{m} = Δ², following Brieskorn-Saito"
            )),
        ),
        ArtinType::F4 => (cycle(4, 6), None),
        ArtinType::AffA(_) | ArtinType::AffC(_) => return Ok(None),
    };
    let d = zeta.exponent_sum();
    let ab_image = abelianization(t, &zeta);
    Ok(Some(CenterData {
        group: t,
        zeta,
        d,
        ab_image,
        note,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_type_centres() {
        let a = center_data(ArtinType::A(3)).unwrap().unwrap();
        assert_eq!(a.d, 12);
        assert_eq!(a.ab_image, AbImage::Rank1(12));

        let b = center_data(ArtinType::B(3)).unwrap().unwrap();
        assert_eq!(b.zeta, Word::new(vec![1, 2, 3, 1, 2, 3, 1, 2, 3]));
        assert_eq!(b.d, 9);
        assert_eq!(b.ab_image, AbImage::Rank2(6, 3));

        let i4 = center_data(ArtinType::I2(4)).unwrap().unwrap();
        assert_eq!(i4.zeta, Word::new(vec![1, 2, 1, 2]));
        assert_eq!(i4.d, 4);
        assert_eq!(i4.ab_image, AbImage::Rank2(2, 2));

        let i5 = center_data(ArtinType::I2(5)).unwrap().unwrap();
        assert_eq!(i5.d, 10);
        assert_eq!(i5.ab_image, AbImage::Rank1(10));
        assert!(i5.note.is_some());

        let f = center_data(ArtinType::F4).unwrap().unwrap();
        assert_eq!(f.d, 24);
        assert_eq!(f.ab_image, AbImage::Rank2(12, 12));
    }

    #[test]
    fn ab_images_follow_the_closed_forms() {
        for n in 3..=8usize {
            let b = center_data(ArtinType::B(n)).unwrap().unwrap();
            let n = n as i64;
            assert_eq!(b.ab_image, AbImage::Rank2(n * (n - 1), n));
            assert_eq!(b.d, n * n);
        }
        for half in 2..=6u32 {
            let c = center_data(ArtinType::I2(2 * half)).unwrap().unwrap();
            assert_eq!(c.ab_image, AbImage::Rank2(half as i64, half as i64));
        }
    }

    #[test]
    fn affine_centres_are_trivial() {
        assert_eq!(center_data(ArtinType::AffA(4)).unwrap(), None);
        assert_eq!(center_data(ArtinType::AffC(3)).unwrap(), None);
        assert!(center_data(ArtinType::A(1)).is_err());
    }
}
