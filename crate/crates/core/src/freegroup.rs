//! Freely reduced words and substitution endomorphisms of a free group.

use std::fmt;

use crate::error::{ArtinError, Result};
use crate::presentations::free_reduce;

pub const DEFAULT_LETTER_BUDGET: usize = 1_000_000;

/// A freely reduced word over `x_1..x_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// Reduces `letters` and checks they lie within `rank`.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        if let Some(&l) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > rank)
        {
            return Err(ArtinError::parse(
                l.to_string(),
                format!("not a generator of the free group of rank {rank}"),
            ));
        }
        Ok(FreeWord {
            rank,
            letters: free_reduce(letters),
        })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        FreeWord {
            rank,
            letters: vec![i as i32],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Appends `letters` to a reduced stack, cancelling as it goes.
pub(crate) fn push_reduced(acc: &mut Vec<i32>, letters: impl IntoIterator<Item = i32>) {
    for l in letters {
        if acc.last() == Some(&-l) {
            acc.pop();
        } else {
            acc.push(l);
        }
    }
}

pub(crate) fn check_budget(len: usize, budget: usize) -> Result<()> {
    if len > budget {
        Err(ArtinError::BudgetExceeded { limit: budget })
    } else {
        Ok(())
    }
}

fn same_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(ArtinError::RankMismatch { expected, found })
    }
}

/// Endomorphism of the free group given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Substitution {
    rank: usize,
    images: Vec<FreeWord>,
}

impl Substitution {
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        for img in &images {
            same_rank(rank, img.rank)?;
        }
        Ok(Substitution { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        Substitution {
            rank,
            images: (1..=rank).map(|i| FreeWord::generator(rank, i)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    /// Substitution applying `self` first, then `after`.
    pub fn then(&self, after: &Substitution, budget: usize) -> Result<Substitution> {
        same_rank(self.rank, after.rank)?;
        let images = self
            .images
            .iter()
            .map(|img| fg_apply_within(after, img, budget))
            .collect::<Result<Vec<_>>>()?;
        Ok(Substitution {
            rank: self.rank,
            images,
        })
    }

    pub(crate) fn from_raw(rank: usize, images: Vec<Vec<i32>>) -> Self {
        Substitution {
            rank,
            images: images
                .into_iter()
                .map(|letters| FreeWord { rank, letters })
                .collect(),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {}", i + 1, img)?;
        }
        Ok(())
    }
}

pub fn fg_multiply(u: &FreeWord, v: &FreeWord) -> Result<FreeWord> {
    fg_multiply_within(u, v, DEFAULT_LETTER_BUDGET)
}

pub fn fg_multiply_within(u: &FreeWord, v: &FreeWord, budget: usize) -> Result<FreeWord> {
    same_rank(u.rank, v.rank)?;
    let mut letters = u.letters.clone();
    push_reduced(&mut letters, v.letters.iter().copied());
    check_budget(letters.len(), budget)?;
    Ok(FreeWord {
        rank: u.rank,
        letters,
    })
}

pub fn fg_invert(u: &FreeWord) -> FreeWord {
    FreeWord {
        rank: u.rank,
        letters: u.letters.iter().rev().map(|l| -l).collect(),
    }
}

pub fn fg_apply(s: &Substitution, u: &FreeWord) -> Result<FreeWord> {
    fg_apply_within(s, u, DEFAULT_LETTER_BUDGET)
}

pub fn fg_apply_within(s: &Substitution, u: &FreeWord, budget: usize) -> Result<FreeWord> {
    same_rank(s.rank, u.rank)?;
    let mut acc = Vec::new();
    for &l in &u.letters {
        let img = &s.images[l.unsigned_abs() as usize - 1].letters;
        if l > 0 {
            push_reduced(&mut acc, img.iter().copied());
        } else {
            push_reduced(&mut acc, img.iter().rev().map(|x| -x));
        }
        check_budget(acc.len(), budget)?;
    }
    Ok(FreeWord {
        rank: s.rank,
        letters: acc,
    })
}
