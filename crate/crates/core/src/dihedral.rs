//! Word problem for the dihedral Artin groups `A(I₂(m)) = ⟨a, b | aba⋯ = bab⋯⟩`.
//!
//! Uses the Garside structure of the dihedral monoid: the simples are the
//! alternating positive words of length `< m` together with `Δ`, the common
//! value of the two alternating words of length `m`. Letter 1 is `a`,
//! letter 2 is `b`.

use std::fmt;

use crate::error::{ArtinError, Result};
use crate::presentations::{alternating, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DihedralWord {
    m: u32,
    word: Word,
}

impl DihedralWord {
    pub fn new(m: u32, word: Word) -> Result<Self> {
        check_label(m)?;
        word.check_rank(2)?;
        Ok(DihedralWord { m, word })
    }

    pub fn from_letters(m: u32, letters: &[i32]) -> Result<Self> {
        Self::new(m, Word::new(letters.to_vec()))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn word(&self) -> &Word {
        &self.word
    }
}

fn check_label(m: u32) -> Result<()> {
    if m < 3 {
        Err(ArtinError::InvalidType(format!("I2:{m} needs m >= 3")))
    } else {
        Ok(())
    }
}

fn other(x: u8) -> u8 {
    3 - x
}

/// A simple element. `Alt { first, len }` is the alternating word of length
/// `1 <= len < m` starting with `first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralSimple {
    One,
    Alt { first: u8, len: u32 },
    Delta,
}

impl DihedralSimple {
    fn alt(m: u32, first: u8, len: u32) -> Self {
        if len == 0 {
            DihedralSimple::One
        } else if len >= m {
            DihedralSimple::Delta
        } else {
            DihedralSimple::Alt { first, len }
        }
    }

    fn last(first: u8, len: u32) -> u8 {
        if len % 2 == 1 {
            first
        } else {
            other(first)
        }
    }

    pub fn starts_with(self, x: u8) -> bool {
        match self {
            DihedralSimple::One => false,
            DihedralSimple::Delta => true,
            DihedralSimple::Alt { first, .. } => first == x,
        }
    }

    pub fn ends_with(self, x: u8) -> bool {
        match self {
            DihedralSimple::One => false,
            DihedralSimple::Delta => true,
            DihedralSimple::Alt { first, len } => Self::last(first, len) == x,
        }
    }

    pub fn to_word(self, m: u32) -> Word {
        match self {
            DihedralSimple::One => Word::empty(),
            DihedralSimple::Delta => alternating(1, 2, m as usize),
            DihedralSimple::Alt { first, len } => {
                alternating(first as usize, other(first) as usize, len as usize)
            }
        }
    }
}

/// `Δ^inf · factors`, left-weighted, with no identity or `Δ` factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DihedralNF {
    pub m: u32,
    pub inf: i64,
    pub factors: Vec<DihedralSimple>,
}

impl DihedralNF {
    pub fn to_word(&self) -> Word {
        let mut w = alternating(1, 2, self.m as usize).pow(self.inf);
        for f in &self.factors {
            w = w.concat(&f.to_word(self.m));
        }
        w
    }
}

impl fmt::Display for DihedralNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for s in &self.factors {
            write!(f, " [{}]", s.to_word(self.m))?;
        }
        Ok(())
    }
}

struct Engine {
    m: u32,
}

impl Engine {
    /// `Δ x Δ⁻¹`: swaps `a` and `b` exactly when `m` is odd.
    fn flip(&self, s: DihedralSimple) -> DihedralSimple {
        match s {
            DihedralSimple::Alt { first, len } if self.m % 2 == 1 => DihedralSimple::Alt {
                first: other(first),
                len,
            },
            s => s,
        }
    }

    /// `Δ x⁻¹`: drop the final `x` from the alternating word for `Δ` that
    /// ends in `x`.
    fn delta_over(&self, x: u8) -> DihedralSimple {
        let first = if self.m % 2 == 1 { x } else { other(x) };
        DihedralSimple::alt(self.m, first, self.m - 1)
    }

    fn times_atom(&self, p: DihedralSimple, x: u8) -> DihedralSimple {
        match p {
            DihedralSimple::One => DihedralSimple::alt(self.m, x, 1),
            DihedralSimple::Alt { first, len } => DihedralSimple::alt(self.m, first, len + 1),
            DihedralSimple::Delta => unreachable!("Δ·x is not simple"),
        }
    }

    fn atom_under(&self, x: u8, q: DihedralSimple) -> DihedralSimple {
        match q {
            DihedralSimple::One => unreachable!("x is not a prefix of 1"),
            DihedralSimple::Delta => DihedralSimple::alt(self.m, other(x), self.m - 1),
            DihedralSimple::Alt { len, .. } => DihedralSimple::alt(self.m, other(x), len - 1),
        }
    }

    /// Absorbs the longest alternating prefix of `q` that extends `p`.
    fn left_weight(&self, p: &mut DihedralSimple, q: &mut DihedralSimple) -> bool {
        let mut moved = false;
        loop {
            let Some(x) = [1u8, 2].into_iter().find(|&x| q.starts_with(x) && !p.ends_with(x))
            else {
                return moved;
            };
            *p = self.times_atom(*p, x);
            *q = self.atom_under(x, *q);
            moved = true;
        }
    }

    fn sweep(&self, factors: &mut [DihedralSimple], stop_early: bool) -> bool {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (left, right) = factors.split_at_mut(j + 1);
            let moved = self.left_weight(&mut left[j], &mut right[0]);
            changed |= moved;
            if stop_early && !moved {
                break;
            }
        }
        changed
    }

    fn normal_form(&self, word: &Word) -> DihedralNF {
        let mut inf = 0i64;
        let mut factors = Vec::with_capacity(word.len());
        for &l in word.letters() {
            let x = l.unsigned_abs() as u8;
            if l > 0 {
                factors.push(DihedralSimple::alt(self.m, x, 1));
            } else {
                inf -= 1;
                for f in factors.iter_mut() {
                    *f = self.flip(*f);
                }
                factors.push(self.delta_over(x));
            }
            self.sweep(&mut factors, true);
        }
        while self.sweep(&mut factors, false) {}

        let leading = factors
            .iter()
            .take_while(|f| **f == DihedralSimple::Delta)
            .count();
        factors.drain(..leading);
        inf += leading as i64;
        while factors.last() == Some(&DihedralSimple::One) {
            factors.pop();
        }
        DihedralNF {
            m: self.m,
            inf,
            factors,
        }
    }
}

pub fn dihedral_nf(w: &DihedralWord) -> DihedralNF {
    Engine { m: w.m }.normal_form(&w.word)
}

pub fn dihedral_equal(u: &DihedralWord, v: &DihedralWord) -> Result<bool> {
    if u.m != v.m {
        return Err(ArtinError::Mismatch(format!("I2:{} vs I2:{}", u.m, v.m)));
    }
    Ok(dihedral_nf(u) == dihedral_nf(v))
}

/// Word problem solver for a fixed `A(I₂(m))`.
#[derive(Debug, Clone, Copy)]
pub struct DihedralOracle {
    m: u32,
}

impl DihedralOracle {
    pub fn new(m: u32) -> Result<Self> {
        check_label(m)?;
        Ok(DihedralOracle { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn normal_form(&self, w: &Word) -> Result<DihedralNF> {
        w.check_rank(2)?;
        Ok(Engine { m: self.m }.normal_form(w))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    pub fn is_central(&self, w: &Word) -> Result<bool> {
        for i in 1..=2 {
            let s = Word::generator(i);
            if !self.equal(&w.concat(&s), &s.concat(w))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(m: u32, l: &[i32]) -> DihedralWord {
        DihedralWord::from_letters(m, l).unwrap()
    }

    #[test]
    fn defining_relation() {
        assert!(dihedral_equal(&dw(4, &[1, 2, 1, 2]), &dw(4, &[2, 1, 2, 1])).unwrap());
        for m in 3..=8u32 {
            let o = DihedralOracle::new(m).unwrap();
            let lhs = alternating(1, 2, m as usize);
            let rhs = alternating(2, 1, m as usize);
            assert!(o.equal(&lhs, &rhs).unwrap(), "m = {m}");
            let nf = o.normal_form(&lhs).unwrap();
            assert_eq!((nf.inf, nf.factors.len()), (1, 0));
            // One letter short is not Δ.
            let short = alternating(1, 2, m as usize - 1);
            assert!(!o.equal(&short, &alternating(2, 1, m as usize - 1)).unwrap());
        }
    }

    #[test]
    fn free_cancellation() {
        assert!(dihedral_equal(&dw(5, &[1, -1]), &dw(5, &[])).unwrap());
        assert!(dihedral_equal(&dw(5, &[-2, 1, -1, 2]), &dw(5, &[])).unwrap());
    }

    #[test]
    fn centre_element_commutes() {
        let o = DihedralOracle::new(4).unwrap();
        let z = Word::new(vec![1, 2, 1, 2]);
        assert!(o.is_central(&z).unwrap());
        assert!(!o.is_central(&Word::new(vec![1, 2])).unwrap());
        // For odd m only Δ² is central, Δ itself swaps a and b.
        let o5 = DihedralOracle::new(5).unwrap();
        let delta = alternating(1, 2, 5);
        assert!(!o5.is_central(&delta).unwrap());
        assert!(o5.is_central(&delta.pow(2)).unwrap());
    }

    #[test]
    fn inverse_letters() {
        let o = DihedralOracle::new(4).unwrap();
        let nf = o.normal_form(&Word::new(vec![-1])).unwrap();
        assert_eq!(nf.inf, -1);
        assert_eq!(nf.factors, vec![DihedralSimple::Alt { first: 2, len: 3 }]);
        let nf3 = DihedralOracle::new(3).unwrap().normal_form(&Word::new(vec![-1])).unwrap();
        assert_eq!(nf3.factors, vec![DihedralSimple::Alt { first: 1, len: 2 }]);
    }

    #[test]
    fn normal_form_reexpands_to_an_equal_word() {
        let o = DihedralOracle::new(6).unwrap();
        let w = Word::new(vec![1, -2, -2, 1, 1, 2, -1, 2, 2, -1]);
        let nf = o.normal_form(&w).unwrap();
        assert_eq!(o.normal_form(&nf.to_word()).unwrap(), nf);
        for pair in nf.factors.windows(2) {
            assert!([1u8, 2]
                .iter()
                .all(|&x| !pair[1].starts_with(x) || pair[0].ends_with(x)));
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(DihedralOracle::new(2).is_err());
        assert!(DihedralWord::from_letters(4, &[3]).is_err());
        assert!(dihedral_equal(&dw(4, &[1]), &dw(5, &[1])).is_err());
    }
}
