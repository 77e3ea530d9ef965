//! Left-greedy Garside normal form for braids.
//!
//! Simple elements are permutation braids, stored as permutations of the
//! strands. A positive word `σ_{i1}⋯σ_{ik}` corresponds to the composite
//! `s_{i1} ∘ ⋯ ∘ s_{ik}` of adjacent transpositions, so braid products map to
//! composition of arrays: `(a·b)[j] = a[b[j]]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::presentations::Word;

/// A permutation braid on `k` strands (0-based array form).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Simple(Vec<u8>);

impl Simple {
    pub fn identity(strands: usize) -> Self {
        Simple((0..strands as u8).collect())
    }

    /// The half twist Δ, i.e. the longest permutation.
    pub fn delta(strands: usize) -> Self {
        Simple((0..strands as u8).rev().collect())
    }

    /// The atom `σ_i`, 1-based.
    pub fn atom(strands: usize, i: usize) -> Self {
        let mut p = Self::identity(strands);
        p.0.swap(i - 1, i);
        p
    }

    /// `Δ·σ_i⁻¹`, the simple complementing `σ_i` on the right.
    pub fn delta_over_atom(strands: usize, i: usize) -> Self {
        let atom = Self::atom(strands, i);
        let top = strands as u8 - 1;
        Simple(atom.0.iter().map(|&v| top - v).collect())
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &v)| j == v as usize)
    }

    pub fn is_delta(&self) -> bool {
        let top = self.0.len() - 1;
        self.0.iter().enumerate().all(|(j, &v)| v as usize == top - j)
    }

    /// Number of crossings (inversions).
    pub fn crossings(&self) -> usize {
        let p = &self.0;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn inverse_array(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.0.len()];
        for (j, &v) in self.0.iter().enumerate() {
            inv[v as usize] = j as u8;
        }
        inv
    }

    /// Starting set: the `i` (1-based) such that `σ_i` is a prefix.
    pub fn starting_set(&self) -> Vec<usize> {
        let inv = self.inverse_array();
        (0..inv.len().saturating_sub(1))
            .filter(|&j| inv[j] > inv[j + 1])
            .map(|j| j + 1)
            .collect()
    }

    /// Finishing set: the `i` (1-based) such that `σ_i` is a suffix.
    pub fn finishing_set(&self) -> Vec<usize> {
        (0..self.0.len().saturating_sub(1))
            .filter(|&j| self.0[j] > self.0[j + 1])
            .map(|j| j + 1)
            .collect()
    }

    fn has_right_descent(&self, j: usize) -> bool {
        self.0[j] > self.0[j + 1]
    }

    fn first_left_descent_not_in(&self, other: &Simple) -> Option<usize> {
        let inv = self.inverse_array();
        (0..inv.len() - 1).find(|&j| inv[j] > inv[j + 1] && !other.has_right_descent(j))
    }

    /// Conjugation by Δ: `Δ x Δ⁻¹`, which sends `σ_i` to `σ_{k-i}`.
    pub fn flip(&self) -> Simple {
        let top = self.0.len() as u8 - 1;
        Simple(self.0.iter().rev().map(|&v| top - v).collect())
    }

    /// A positive word for this simple, choosing the smallest starting
    /// generator at each step.
    pub fn to_word(&self) -> Word {
        let mut p = self.0.clone();
        let mut letters = Vec::new();
        loop {
            let mut inv = vec![0u8; p.len()];
            for (j, &v) in p.iter().enumerate() {
                inv[v as usize] = j as u8;
            }
            match (0..p.len() - 1).find(|&j| inv[j] > inv[j + 1]) {
                None => break,
                Some(j) => {
                    letters.push(j as i32 + 1);
                    swap_values(&mut p, j as u8, j as u8 + 1);
                }
            }
        }
        Word::new(letters)
    }
}

fn swap_values(p: &mut [u8], a: u8, b: u8) {
    for v in p.iter_mut() {
        if *v == a {
            *v = b;
        } else if *v == b {
            *v = a;
        }
    }
}

/// Makes the pair `(a, b)` left-weighted by moving atoms from the front of
/// `b` to the back of `a`. Returns whether anything moved.
pub(crate) fn make_left_weighted(a: &mut Simple, b: &mut Simple) -> bool {
    let mut moved = false;
    while let Some(j) = b.first_left_descent_not_in(a) {
        // a ← a·σ, b ← σ⁻¹·b
        a.0.swap(j, j + 1);
        swap_values(&mut b.0, j as u8, j as u8 + 1);
        moved = true;
    }
    moved
}

/// `Δ^inf · factors[0] ⋯ factors[k-1]`, left-weighted, with no factor equal
/// to the identity or to Δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNF {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<Simple>,
}

impl GarsideNF {
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Expands back to a braid word.
    pub fn to_word(&self) -> Word {
        let delta = Simple::delta(self.strands).to_word();
        let mut w = delta.pow(self.inf);
        for f in &self.factors {
            w = w.concat(&f.to_word());
        }
        w
    }

    pub fn is_left_weighted(&self) -> bool {
        self.factors.windows(2).all(|pair| {
            let finish = pair[0].finishing_set();
            pair[1].starting_set().iter().all(|i| finish.contains(i))
        })
    }
}

impl fmt::Display for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for s in &self.factors {
            write!(f, " [{}]", s.to_word())?;
        }
        Ok(())
    }
}

/// Left normal form of a word in the braid group on `rank + 1` strands.
///
/// Negative letters are rewritten as `σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹)` and the `Δ⁻¹` is
/// pulled to the front, flipping every factor it passes.
pub fn garside_nf(rank: usize, word: &Word) -> GarsideNF {
    let strands = rank + 1;
    let mut inf = 0i64;
    let mut factors: Vec<Simple> = Vec::with_capacity(word.len());
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize;
        let s = if l > 0 {
            Simple::atom(strands, i)
        } else {
            inf -= 1;
            for f in factors.iter_mut() {
                *f = f.flip();
            }
            Simple::delta_over_atom(strands, i)
        };
        factors.push(s);
        sweep_back(&mut factors);
    }
    while sweep_full(&mut factors) {}

    let leading = factors.iter().take_while(|f| f.is_delta()).count();
    factors.drain(..leading);
    inf += leading as i64;
    while factors.last().is_some_and(Simple::is_identity) {
        factors.pop();
    }
    GarsideNF {
        strands,
        inf,
        factors,
    }
}

fn sweep_back(factors: &mut [Simple]) {
    for j in (0..factors.len().saturating_sub(1)).rev() {
        let (left, right) = factors.split_at_mut(j + 1);
        if !make_left_weighted(&mut left[j], &mut right[0]) {
            break;
        }
    }
}

fn sweep_full(factors: &mut [Simple]) -> bool {
    let mut changed = false;
    for j in (0..factors.len().saturating_sub(1)).rev() {
        let (left, right) = factors.split_at_mut(j + 1);
        changed |= make_left_weighted(&mut left[j], &mut right[0]);
    }
    changed
}
