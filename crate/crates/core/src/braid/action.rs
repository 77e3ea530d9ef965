//! The Artin representation of the braid group on `n + 1` strands as
//! automorphisms of the free group `F(x_1..x_{n+1})`.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, and fixes the
//! other generators; `σ_i⁻¹` acts by the inverse substitution
//! `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`.
//!
//! Words are read left to right, and each letter updates the current image
//! list: after reading `u`, the list holds `φ_u(x_1), …, φ_u(x_{n+1})` and
//! reading a further letter `a` gives `φ_{ua} = φ_u ∘ φ_a`. So
//! `artin_action(uv) = artin_action(u) ∘ artin_action(v)` as endomorphisms,
//! and only two images change per letter.

use crate::error::Result;
use crate::freegroup::{check_budget, push_reduced, Substitution};
use crate::presentations::Word;

fn inverse_of(w: &[i32]) -> impl Iterator<Item = i32> + '_ {
    w.iter().rev().map(|l| -l)
}

/// Images of the free generators under the braid `word` on `rank + 1`
/// strands. Fails if any image grows past `budget` letters.
pub fn action_images(rank: usize, word: &Word, budget: usize) -> Result<Vec<Vec<i32>>> {
    let mut images: Vec<Vec<i32>> = (1..=rank as i32 + 1).map(|i| vec![i]).collect();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (left, right) = (&images[i], &images[i + 1]);
        let mut new = Vec::with_capacity(2 * left.len() + right.len());
        if l > 0 {
            // x_i ↦ φ(x_i) φ(x_{i+1}) φ(x_i)⁻¹, x_{i+1} ↦ φ(x_i)
            push_reduced(&mut new, left.iter().copied());
            push_reduced(&mut new, right.iter().copied());
            push_reduced(&mut new, inverse_of(left));
            check_budget(new.len(), budget)?;
            let old_left = std::mem::replace(&mut images[i], new);
            images[i + 1] = old_left;
        } else {
            // x_i ↦ φ(x_{i+1}), x_{i+1} ↦ φ(x_{i+1})⁻¹ φ(x_i) φ(x_{i+1})
            push_reduced(&mut new, inverse_of(right));
            push_reduced(&mut new, left.iter().copied());
            push_reduced(&mut new, right.iter().copied());
            check_budget(new.len(), budget)?;
            let old_right = std::mem::replace(&mut images[i + 1], new);
            images[i] = old_right;
        }
    }
    Ok(images)
}

pub fn artin_action_within(rank: usize, word: &Word, budget: usize) -> Result<Substitution> {
    Ok(Substitution::from_raw(
        rank + 1,
        action_images(rank, word, budget)?,
    ))
}
