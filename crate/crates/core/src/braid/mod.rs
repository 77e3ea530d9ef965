//! The braid group `A(A_n)` on `n + 1` strands.
//!
//! Two independent equality procedures live here: the faithful free-group
//! action ([`artin_action`]) and the Garside left normal form
//! ([`garside_nf`]). [`BraidOracle`] picks between them by word length.

mod action;
mod center;
mod garside;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ArtinError, Result};
use crate::freegroup::{Substitution, DEFAULT_LETTER_BUDGET};
use crate::presentations::Word;

pub use action::{action_images, artin_action_within};
pub use center::{center_data, AbImage, CenterData};
pub use garside::{GarsideNF, Simple};

/// Words longer than this are compared through the Garside normal form.
pub const DEFAULT_GARSIDE_THRESHOLD: usize = 64;

/// A word in `σ_1..σ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    rank: usize,
    word: Word,
}

impl BraidWord {
    pub fn new(rank: usize, word: Word) -> Result<Self> {
        if rank == 0 {
            return Err(ArtinError::InvalidType("braid rank must be positive".into()));
        }
        word.check_rank(rank)?;
        Ok(BraidWord { rank, word })
    }

    pub fn from_letters(rank: usize, letters: &[i32]) -> Result<Self> {
        Self::new(rank, Word::new(letters.to_vec()))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.rank + 1
    }

    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        same_rank(self.rank, other.rank)?;
        Ok(BraidWord {
            rank: self.rank,
            word: self.word.concat(&other.word),
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            rank: self.rank,
            word: self.word.inverse(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

fn same_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(ArtinError::RankMismatch { expected, found })
    }
}

/// `δ = σ_1 σ_2 ⋯ σ_n`.
pub fn delta_word(rank: usize) -> Word {
    Word::new((1..=rank as i32).collect())
}

/// The full twist `Δ² = δ^{n+1}`, generator of the centre.
pub fn full_twist(rank: usize) -> Word {
    delta_word(rank).pow(rank as i64 + 1)
}

pub fn artin_action(w: &BraidWord) -> Result<Substitution> {
    artin_action_within(w.rank, &w.word, DEFAULT_LETTER_BUDGET)
}

pub fn garside_nf(w: &BraidWord) -> GarsideNF {
    garside::garside_nf(w.rank, &w.word)
}

pub fn braid_length(w: &BraidWord) -> i64 {
    w.word.exponent_sum()
}

/// A permutation of `{1..k}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] + 1
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// 1-based images `[p(1), …, p(k)]`.
    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Strand permutation. Letters act left to right on points, so
/// `braid_perm(uv)(x) = braid_perm(v)(braid_perm(u)(x))`.
pub fn braid_perm(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands());
    for &l in w.word.letters() {
        let i = l.unsigned_abs() as usize - 1;
        for v in p.0.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    p
}

/// Which procedure decided an equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Action,
    Garside,
}

/// Word problem solver for the braid group of a fixed rank.
#[derive(Debug, Clone)]
pub struct BraidOracle {
    rank: usize,
    letter_budget: usize,
    garside_threshold: usize,
}

impl BraidOracle {
    pub fn new(rank: usize) -> Self {
        BraidOracle {
            rank,
            letter_budget: DEFAULT_LETTER_BUDGET,
            garside_threshold: DEFAULT_GARSIDE_THRESHOLD,
        }
    }

    pub fn with_budget(mut self, letter_budget: usize) -> Self {
        self.letter_budget = letter_budget;
        self
    }

    pub fn with_garside_threshold(mut self, threshold: usize) -> Self {
        self.garside_threshold = threshold;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letter_budget(&self) -> usize {
        self.letter_budget
    }

    pub fn strategy_for(&self, u: &Word, v: &Word) -> Strategy {
        if u.len().max(v.len()) > self.garside_threshold {
            Strategy::Garside
        } else {
            Strategy::Action
        }
    }

    fn check(&self, w: &Word) -> Result<()> {
        w.check_rank(self.rank)
    }

    pub fn equal_by_action(&self, u: &Word, v: &Word) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        let a = action_images(self.rank, u, self.letter_budget)?;
        let b = action_images(self.rank, v, self.letter_budget)?;
        Ok(a == b)
    }

    pub fn equal_by_garside(&self, u: &Word, v: &Word) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        for w in [u, v] {
            if w.len() > self.letter_budget {
                return Err(ArtinError::BudgetExceeded {
                    limit: self.letter_budget,
                });
            }
        }
        Ok(garside::garside_nf(self.rank, u) == garside::garside_nf(self.rank, v))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        match self.strategy_for(u, v) {
            Strategy::Action => self.equal_by_action(u, v),
            Strategy::Garside => self.equal_by_garside(u, v),
        }
    }

    pub fn is_central(&self, w: &Word) -> Result<bool> {
        self.check(w)?;
        for i in 1..=self.rank {
            let s = Word::generator(i);
            if !self.equal(&w.concat(&s), &s.concat(w))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality modulo `⟨Δ²⟩`: `u v⁻¹ = Δ^{2k}` with `k` forced by length.
    pub fn equal_mod_center(&self, u: &Word, v: &Word) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        let d = (self.rank * (self.rank + 1)) as i64;
        let quotient = u.concat(&v.inverse());
        let len = quotient.exponent_sum();
        if len % d != 0 {
            return Ok(false);
        }
        self.equal(&quotient, &full_twist(self.rank).pow(len / d))
    }
}

pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    same_rank(u.rank, v.rank)?;
    BraidOracle::new(u.rank).equal(&u.word, &v.word)
}

pub fn is_central(w: &BraidWord) -> Result<bool> {
    BraidOracle::new(w.rank).is_central(&w.word)
}

pub fn equal_mod_center(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    same_rank(u.rank, v.rank)?;
    BraidOracle::new(u.rank).equal_mod_center(&u.word, &v.word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(rank: usize, l: &[i32]) -> BraidWord {
        BraidWord::from_letters(rank, l).unwrap()
    }

    #[test]
    fn equality_examples() {
        assert!(braid_equal(&bw(3, &[1, 2, 1]), &bw(3, &[2, 1, 2])).unwrap());
        assert!(braid_equal(&bw(3, &[1, -1]), &bw(3, &[])).unwrap());
        assert!(!braid_equal(&bw(3, &[1]), &bw(3, &[2])).unwrap());
        assert!(matches!(
            braid_equal(&bw(3, &[1]), &bw(4, &[1])),
            Err(ArtinError::RankMismatch { .. })
        ));
    }

    #[test]
    fn words_outside_the_rank_are_rejected() {
        assert!(BraidWord::from_letters(2, &[3]).is_err());
        assert!(BraidOracle::new(2).equal(&Word::new(vec![3]), &Word::empty()).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(braid_length(&bw(3, &[1, -2])), 0);
        assert_eq!(braid_length(&bw(3, delta_word(3).letters())), 3);
        assert_eq!(braid_length(&bw(3, full_twist(3).letters())), 12);
    }

    #[test]
    fn perm_examples() {
        let p = braid_perm(&bw(3, &[1]));
        assert_eq!(p.to_string(), "(1 2)");
        assert!(braid_perm(&bw(3, &[1, 1])).is_identity());
        assert!(braid_perm(&bw(3, &[1, -1])).is_identity());
    }

    #[test]
    fn perm_of_delta_matches_composed_transpositions() {
        // Oracle: push each point through the transpositions one by one.
        for n in 3..=6 {
            let expected: Vec<usize> = (1..=n + 1)
                .map(|mut x| {
                    for i in 1..=n {
                        if x == i {
                            x = i + 1;
                        } else if x == i + 1 {
                            x = i;
                        }
                    }
                    x
                })
                .collect();
            let p = braid_perm(&bw(n, delta_word(n).letters()));
            assert_eq!(p.images(), expected);
            assert_eq!(p.cycles().len(), 1);
            assert_eq!(p.cycles()[0].len(), n + 1);
        }
        // Frozen: δ = σ1σ2σ3 sends 1↦4, 4↦3, 3↦2, 2↦1.
        assert_eq!(braid_perm(&bw(3, &[1, 2, 3])).to_string(), "(1 4 3 2)");
    }

    #[test]
    fn centrality() {
        assert!(is_central(&bw(3, full_twist(3).letters())).unwrap());
        assert!(!is_central(&bw(3, &[1])).unwrap());
        assert!(is_central(&bw(3, &[])).unwrap());
        // σ1 commutes with σ3 but not with σ2.
        let o = BraidOracle::new(3);
        assert!(o.equal(&Word::new(vec![1, 3]), &Word::new(vec![3, 1])).unwrap());
        assert!(!o.equal(&Word::new(vec![1, 2]), &Word::new(vec![2, 1])).unwrap());
    }

    #[test]
    fn mod_center_examples() {
        let s1 = bw(3, &[1]);
        let s1z = bw(3, &[1]).mul(&bw(3, full_twist(3).letters())).unwrap();
        assert!(equal_mod_center(&s1, &s1z).unwrap());
        assert!(!equal_mod_center(&bw(3, &[1]), &bw(3, &[2])).unwrap());
        let w = bw(3, &[1, -2, 3]);
        assert!(equal_mod_center(&w, &w).unwrap());
        let zinv = bw(3, full_twist(3).inverse().letters());
        assert!(equal_mod_center(&zinv.mul(&w).unwrap(), &w).unwrap());
    }

    #[test]
    fn strategy_switches_on_length() {
        let o = BraidOracle::new(3).with_garside_threshold(4);
        let short = Word::new(vec![1, 2]);
        let long = Word::new(vec![1, 2, 3, 1, 2]);
        assert_eq!(o.strategy_for(&short, &short), Strategy::Action);
        assert_eq!(o.strategy_for(&short, &long), Strategy::Garside);
        let z = full_twist(3);
        assert!(o.is_central(&z).unwrap());
    }

    #[test]
    fn garside_examples_through_braid_words() {
        let nf = garside_nf(&bw(2, &[1, 2, 1]));
        assert_eq!((nf.inf, nf.factors.len()), (1, 0));
        let nf = garside_nf(&bw(2, &[-1]));
        assert_eq!(nf.inf, -1);
        assert_eq!(nf.factors[0].to_word(), Word::new(vec![1, 2]));
    }
}
