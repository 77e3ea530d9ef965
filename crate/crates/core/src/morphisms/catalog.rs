//! Named embeddings, projections and automorphisms.

use crate::error::{ArtinError, Result};
use crate::presentations::{ArtinType, Word};

use super::{GroupRef, Morphism};

/// Names accepted by [`catalog`], with what the integer parameter means.
pub const CATALOG: &[(&str, &str)] = &[
    ("identity_A", "n"),
    ("identity_B", "n"),
    ("embed_B_in_A", "n"),
    ("embed_AffC_in_A", "n"),
    ("affA_in_B", "n"),
    ("angular_projection", "n"),
    ("tau_B", "n"),
    ("epsilon_A", "n"),
    ("epsilon_B", "n"),
    ("epsilon_AffA", "n"),
    ("epsilon_AffC", "n"),
    ("epsilon_I2", "m"),
    ("rotation_AffA", "n"),
    ("reflection_AffA", "n"),
    ("eta_I2", "m (even)"),
    ("gamma_I2", "m"),
    ("T0_I2", "m = 4"),
];

/// Looks up a catalog map by name.
pub fn catalog(name: &str, param: u32) -> Result<Morphism> {
    let n = param as usize;
    match name {
        "identity_A" => identity(GroupRef::Artin(ArtinType::A(n).validate()?)),
        "identity_B" => identity(GroupRef::Artin(ArtinType::B(n).validate()?)),
        "embed_B_in_A" => embed_b_in_a(n),
        "embed_AffC_in_A" => embed_affc_in_a(n),
        "affA_in_B" => affa_in_b(n),
        "angular_projection" => angular_projection(n),
        "tau_B" => tau_b(n),
        "epsilon_A" => epsilon(ArtinType::A(n)),
        "epsilon_B" => epsilon(ArtinType::B(n)),
        "epsilon_AffA" => epsilon(ArtinType::AffA(n)),
        "epsilon_AffC" => epsilon(ArtinType::AffC(n)),
        "epsilon_I2" => epsilon(ArtinType::I2(param)),
        "rotation_AffA" => graph_rotation(n, 1),
        "reflection_AffA" => graph_reflection(n, 0),
        "eta_I2" => eta_i2(param),
        "gamma_I2" => gamma_i2(param),
        "T0_I2" => t0_i2(param),
        _ => Err(ArtinError::OutOfRange(format!("unknown catalog map `{name}`"))),
    }
}

fn gens(l: &[i32]) -> Word {
    Word::new(l.to_vec())
}

fn artin(t: ArtinType) -> Result<GroupRef> {
    Ok(GroupRef::Artin(t.validate()?))
}

/// `δ = s_1 ⋯ s_n`.
pub fn delta(n: usize) -> Word {
    Word::new((1..=n as i32).collect())
}

pub fn identity(g: GroupRef) -> Result<Morphism> {
    let images = (1..=g.rank()).map(Word::generator).collect();
    Morphism::new(format!("id[{g}]"), g, g, images)
}

/// `A(B_n) → A(A_n)`: `s_n ↦ σ_n²`, other generators to `σ_i`.
pub fn embed_b_in_a(n: usize) -> Result<Morphism> {
    let images = (1..=n)
        .map(|i| {
            if i == n {
                gens(&[n as i32, n as i32])
            } else {
                Word::generator(i)
            }
        })
        .collect();
    Morphism::new(
        format!("embed_B_in_A[{n}]"),
        artin(ArtinType::B(n))?,
        artin(ArtinType::A(n))?,
        images,
    )
}

/// `A(C̃_{n-1}) → A(A_n)`: `s_1 ↦ σ_1²`, `s_n ↦ σ_n²`, others to `σ_i`.
pub fn embed_affc_in_a(n: usize) -> Result<Morphism> {
    let images = (1..=n)
        .map(|i| {
            if i == 1 || i == n {
                gens(&[i as i32, i as i32])
            } else {
                Word::generator(i)
            }
        })
        .collect();
    Morphism::new(
        format!("embed_AffC_in_A[{n}]"),
        artin(ArtinType::AffC(n))?,
        artin(ArtinType::A(n))?,
        images,
    )
}

/// `A(Ã_{n-1}) → A(B_n)`: `t_i ↦ δ^{i-1} s_1 δ^{1-i}`.
pub fn affa_in_b(n: usize) -> Result<Morphism> {
    let d = delta(n);
    let images = (0..n as i64)
        .map(|k| d.pow(k).concat(&Word::generator(1)).concat(&d.pow(-k)).free_reduce())
        .collect();
    Morphism::new(
        format!("affA_in_B[{n}]"),
        artin(ArtinType::AffA(n))?,
        artin(ArtinType::B(n))?,
        images,
    )
}

/// `A(B_n) → Z`, the `s_n`-exponent.
pub fn angular_projection(n: usize) -> Result<Morphism> {
    let images = (1..=n)
        .map(|i| if i == n { gens(&[1]) } else { Word::empty() })
        .collect();
    Morphism::new(
        format!("angular_projection[{n}]"),
        artin(ArtinType::B(n))?,
        GroupRef::Cyclic,
        images,
    )
}

/// The inversion `s_i ↦ s_i⁻¹`.
pub fn epsilon(t: ArtinType) -> Result<Morphism> {
    let g = artin(t)?;
    let images = (1..=t.rank() as i32).map(|i| gens(&[-i])).collect();
    Morphism::new(format!("epsilon[{t}]"), g, g, images)
}

fn cycle_relabel(n: usize, name: String, target: impl Fn(usize) -> usize) -> Result<Morphism> {
    let g = artin(ArtinType::AffA(n))?;
    let images = (1..=n).map(|i| Word::generator(target(i))).collect();
    Morphism::new(name, g, g, images)
}

/// Rotation of the `n`-cycle: `t_i ↦ t_{i+k}`, indices mod `n`.
pub fn graph_rotation(n: usize, k: usize) -> Result<Morphism> {
    cycle_relabel(n, format!("rotation_AffA[{n},{k}]"), |i| (i - 1 + k) % n + 1)
}

/// Reflection of the `n`-cycle: `t_i ↦ t_{k+2-i}`, indices mod `n`.
pub fn graph_reflection(n: usize, k: usize) -> Result<Morphism> {
    cycle_relabel(n, format!("reflection_AffA[{n},{k}]"), |i| {
        (k + n - (i - 1)) % n + 1
    })
}

/// `τ(s_i) = s_{n-i}` for `i < n`, `τ(s_n) = (δ s_{n-1} ⋯ s_1)⁻¹`.
pub fn tau_b(n: usize) -> Result<Morphism> {
    let g = artin(ArtinType::B(n))?;
    let mut images: Vec<Word> = (1..n).map(|i| Word::generator(n - i)).collect();
    let tail: Vec<i32> = (1..n as i32).rev().collect();
    images.push(delta(n).concat(&gens(&tail)).inverse());
    Morphism::new(format!("tau_B[{n}]"), g, g, images)
}

/// `η: a ↦ aba, b ↦ a⁻¹`. A homomorphism only when `m` is even.
pub fn eta_i2(m: u32) -> Result<Morphism> {
    if m % 2 == 1 {
        return Err(ArtinError::OutOfRange(format!(
            "eta_I2 needs even m (got {m}): for odd m, a ↦ aba, b ↦ a⁻¹ does not respect the relation"
        )));
    }
    eta_i2_unchecked(m)
}

/// The formula of `η` for any `m`, without the parity check. Used to
/// exhibit the failing relation for odd `m`.
pub fn eta_i2_unchecked(m: u32) -> Result<Morphism> {
    let g = artin(ArtinType::I2(m))?;
    Morphism::new(format!("eta_I2[{m}]"), g, g, vec![gens(&[1, 2, 1]), gens(&[-1])])
}

/// The graph involution `a ↔ b`.
pub fn gamma_i2(m: u32) -> Result<Morphism> {
    let g = artin(ArtinType::I2(m))?;
    Morphism::new(format!("gamma_I2[{m}]"), g, g, vec![gens(&[2]), gens(&[1])])
}

/// `T₀: a ↦ a, b ↦ (aba)⁻¹` on `A(I₂(4))`.
pub fn t0_i2(m: u32) -> Result<Morphism> {
    if m != 4 {
        return Err(ArtinError::OutOfRange(format!("T0_I2 exists for m = 4 only (got {m})")));
    }
    let g = artin(ArtinType::I2(4))?;
    Morphism::new("T0_I2[4]".into(), g, g, vec![gens(&[1]), gens(&[-1, -2, -1])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::apply;

    #[test]
    fn embed_b_sends_last_generator_to_a_square() {
        let f = embed_b_in_a(3).unwrap();
        assert_eq!(apply(&f, &Word::generator(3)).unwrap(), gens(&[3, 3]));
        assert_eq!(apply(&f, &Word::generator(2)).unwrap(), gens(&[2]));
    }

    #[test]
    fn tau_images() {
        let t = tau_b(3).unwrap();
        assert_eq!(t.images[0], gens(&[2]));
        assert_eq!(t.images[1], gens(&[1]));
        // (δ s2 s1)⁻¹ = (s1 s2 s3 s2 s1)⁻¹
        assert_eq!(t.images[2], gens(&[-1, -2, -3, -2, -1]));
    }

    #[test]
    fn affine_a_generators() {
        let f = affa_in_b(4).unwrap();
        assert_eq!(f.images[0], gens(&[1]));
        assert_eq!(f.images[1], gens(&[1, 2, 3, 4, 1, -4, -3, -2, -1]));
    }

    #[test]
    fn graph_symmetries() {
        let r = graph_rotation(3, 1).unwrap();
        assert_eq!(r.images, vec![gens(&[2]), gens(&[3]), gens(&[1])]);
        let s = graph_reflection(5, 0).unwrap();
        assert_eq!(
            s.images,
            vec![gens(&[1]), gens(&[5]), gens(&[4]), gens(&[3]), gens(&[2])]
        );
    }

    #[test]
    fn parameter_checks() {
        assert!(eta_i2(5).is_err());
        assert!(eta_i2(6).is_ok());
        assert!(t0_i2(6).is_err());
        assert!(embed_b_in_a(2).is_err());
        assert!(catalog("nope", 3).is_err());
        for (name, _) in CATALOG {
            assert!(catalog(name, 4).is_ok(), "{name}");
        }
    }
}
