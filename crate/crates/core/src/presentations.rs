//! Coxeter matrices, the supported Artin types and the word codec.
//!
//! Generators are indexed from 1. A letter `+i` stands for `s_i` and `-i`
//! for its inverse; the text form of a word is its letters separated by
//! single spaces, with the empty string for the identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ArtinError, Result};

/// An entry `m_ij` of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Label>,
}

impl CoxeterMatrix {
    /// Builds a matrix from row-major entries, checking symmetry, the unit
    /// diagonal and off-diagonal labels of at least 2.
    pub fn new(rank: usize, entries: Vec<Label>) -> Result<Self> {
        if rank == 0 || entries.len() != rank * rank {
            return Err(ArtinError::InvalidType(format!(
                "expected {} entries for rank {rank}, got {}",
                rank * rank,
                entries.len()
            )));
        }
        for i in 0..rank {
            for j in 0..rank {
                let e = entries[i * rank + j];
                if e != entries[j * rank + i] {
                    return Err(ArtinError::InvalidType(format!(
                        "matrix not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                let ok = if i == j {
                    e == Label::Finite(1)
                } else {
                    !matches!(e, Label::Finite(m) if m < 2)
                };
                if !ok {
                    return Err(ArtinError::InvalidType(format!(
                        "bad entry at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// All off-diagonal entries 2, then the listed 1-based edges relabelled.
    fn with_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut entries = vec![Label::Finite(2); rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = Label::Finite(1);
        }
        for &(i, j, m) in edges {
            entries[(i - 1) * rank + (j - 1)] = Label::Finite(m);
            entries[(j - 1) * rank + (i - 1)] = Label::Finite(m);
        }
        CoxeterMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The label `m_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Label {
        self.entries[(i - 1) * self.rank + (j - 1)]
    }
}

/// The Artin types this toolkit knows about.
///
/// Every variant stores the number of standard generators, so `AffA(n)`
/// is the affine type whose Coxeter graph is an n-cycle (`Ã_{n-1}`), and
/// `AffC(n)` is `C̃_{n-1}` on n generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArtinType {
    A(usize),
    B(usize),
    AffA(usize),
    AffC(usize),
    I2(u32),
    F4,
}

impl ArtinType {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            ArtinType::A(n) | ArtinType::B(n) | ArtinType::AffA(n) | ArtinType::AffC(n) => n >= 3,
            ArtinType::I2(m) => m >= 3,
            ArtinType::F4 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(ArtinError::InvalidType(format!(
                "{self}: rank below the family minimum"
            )))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            ArtinType::A(n) | ArtinType::B(n) | ArtinType::AffA(n) | ArtinType::AffC(n) => n,
            ArtinType::I2(_) => 2,
            ArtinType::F4 => 4,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, ArtinType::AffA(_) | ArtinType::AffC(_))
    }
}

impl fmt::Display for ArtinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArtinType::A(n) => write!(f, "A:{n}"),
            ArtinType::B(n) => write!(f, "B:{n}"),
            ArtinType::AffA(n) => write!(f, "AffA:{n}"),
            ArtinType::AffC(n) => write!(f, "AffC:{n}"),
            ArtinType::I2(m) => write!(f, "I2:{m}"),
            ArtinType::F4 => write!(f, "F4"),
        }
    }
}

impl FromStr for ArtinType {
    type Err = ArtinError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "F4" || s == "F4:4" {
            return Ok(ArtinType::F4);
        }
        let (family, param) = s
            .split_once(':')
            .ok_or_else(|| ArtinError::InvalidType(format!("unknown type tag `{s}`")))?;
        let param: usize = param
            .parse()
            .map_err(|_| ArtinError::InvalidType(format!("bad rank in `{s}`")))?;
        let t = match family {
            "A" => ArtinType::A(param),
            "B" => ArtinType::B(param),
            "AffA" => ArtinType::AffA(param),
            "AffC" => ArtinType::AffC(param),
            "I2" => ArtinType::I2(
                u32::try_from(param)
                    .map_err(|_| ArtinError::InvalidType(format!("bad label in `{s}`")))?,
            ),
            _ => return Err(ArtinError::InvalidType(format!("unknown type tag `{s}`"))),
        };
        t.validate()
    }
}

pub fn coxeter_matrix(t: ArtinType) -> Result<CoxeterMatrix> {
    let t = t.validate()?;
    let path = |n: usize| (1..n).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
    let m = match t {
        ArtinType::A(n) => CoxeterMatrix::with_edges(n, &path(n)),
        ArtinType::B(n) => {
            let mut edges = path(n);
            edges[n - 2].2 = 4;
            CoxeterMatrix::with_edges(n, &edges)
        }
        ArtinType::AffA(n) => {
            let mut edges = path(n);
            edges.push((n, 1, 3));
            CoxeterMatrix::with_edges(n, &edges)
        }
        ArtinType::AffC(n) => {
            let mut edges = path(n);
            edges[0].2 = 4;
            edges[n - 2].2 = 4;
            CoxeterMatrix::with_edges(n, &edges)
        }
        ArtinType::I2(m) => CoxeterMatrix::with_edges(2, &[(1, 2, m)]),
        ArtinType::F4 => CoxeterMatrix::with_edges(4, &[(1, 2, 3), (2, 3, 4), (3, 4, 3)]),
    };
    Ok(m)
}

/// A word in signed generator indices. No free reduction is imposed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<i32>);

impl Word {
    pub fn new(letters: Vec<i32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Word(vec![i as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.unsigned_abs() as usize > rank) {
            Some(l) => Err(ArtinError::parse(
                l.to_string(),
                format!("generator index exceeds rank {rank}"),
            )),
            None => Ok(()),
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `self^k`; negative exponents repeat the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters)
    }

    /// Sum of letter signs: the length homomorphism.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.signum() as i64).sum()
    }

    /// Cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> Word {
        Word(free_reduce(&self.0))
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&l| l > 0)
    }
}

pub(crate) fn free_reduce(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl From<Vec<i32>> for Word {
    fn from(letters: Vec<i32>) -> Self {
        Word(letters)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        format_word(&w)
    }
}

impl TryFrom<String> for Word {
    type Error = ArtinError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Word {
    type Err = ArtinError;

    /// Parses without a rank bound; see [`parse_word`] for the checked form.
    fn from_str(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|tok| match tok.parse::<i32>() {
                Ok(0) => Err(ArtinError::parse(tok, "zero is not a generator")),
                Ok(l) => Ok(l),
                Err(_) => Err(ArtinError::parse(tok, "not an integer")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// Parses a word and checks every index against `rank`.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    let w: Word = text.parse()?;
    w.check_rank(rank)?;
    Ok(w)
}

pub fn format_word(w: &Word) -> String {
    let parts: Vec<String> = w.0.iter().map(i32::to_string).collect();
    parts.join(" ")
}

/// Alternating positive word `s_i s_j s_i ...` of the given length.
pub fn alternating(i: usize, j: usize, length: usize) -> Word {
    Word(
        (0..length)
            .map(|k| if k % 2 == 0 { i as i32 } else { j as i32 })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub rank: usize,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Stable text form: a rank line, then one `lhs = rhs` line per relation.
    pub fn to_text(&self) -> String {
        let mut out = format!("rank: {}\nrelations: {}\n", self.rank, self.relations.len());
        for r in &self.relations {
            out.push_str(&format!("  [{}] = [{}]\n", r.lhs, r.rhs));
        }
        out
    }
}

/// One relation per unordered pair `{i, j}` with finite label, in
/// lexicographic order of `(i, j)`.
pub fn artin_relations(m: &CoxeterMatrix) -> Presentation {
    let mut relations = Vec::new();
    for i in 1..=m.rank() {
        for j in i + 1..=m.rank() {
            if let Some(mij) = m.get(i, j).finite() {
                relations.push(Relation {
                    lhs: alternating(i, j, mij as usize),
                    rhs: alternating(j, i, mij as usize),
                });
            }
        }
    }
    Presentation {
        rank: m.rank(),
        relations,
    }
}

/// Convenience: the presentation of a supported type.
pub fn presentation(t: ArtinType) -> Result<Presentation> {
    Ok(artin_relations(&coxeter_matrix(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(m: &CoxeterMatrix, i: usize, j: usize) -> u32 {
        m.get(i, j).finite().unwrap()
    }

    #[test]
    fn type_a3_is_a_path() {
        let m = coxeter_matrix(ArtinType::A(3)).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(label(&m, 1, 2), 3);
        assert_eq!(label(&m, 2, 3), 3);
        assert_eq!(label(&m, 1, 3), 2);
    }

    #[test]
    fn type_b3_has_four_at_the_end() {
        let m = coxeter_matrix(ArtinType::B(3)).unwrap();
        assert_eq!(label(&m, 1, 2), 3);
        assert_eq!(label(&m, 2, 3), 4);
        assert_eq!(label(&m, 1, 3), 2);
    }

    #[test]
    fn affine_a_with_three_generators_is_a_triangle() {
        let m = coxeter_matrix(ArtinType::AffA(3)).unwrap();
        for (i, j) in [(1, 2), (2, 3), (1, 3)] {
            assert_eq!(label(&m, i, j), 3);
        }
        let m5 = coxeter_matrix(ArtinType::AffA(5)).unwrap();
        assert_eq!(label(&m5, 5, 1), 3);
        assert_eq!(label(&m5, 1, 3), 2);
    }

    #[test]
    fn affine_c_and_f4_labels() {
        let m = coxeter_matrix(ArtinType::AffC(5)).unwrap();
        assert_eq!(label(&m, 1, 2), 4);
        assert_eq!(label(&m, 2, 3), 3);
        assert_eq!(label(&m, 4, 5), 4);
        let f = coxeter_matrix(ArtinType::F4).unwrap();
        assert_eq!(
            [label(&f, 1, 2), label(&f, 2, 3), label(&f, 3, 4), label(&f, 1, 4)],
            [3, 4, 3, 2]
        );
        let i = coxeter_matrix(ArtinType::I2(7)).unwrap();
        assert_eq!(label(&i, 1, 2), 7);
    }

    #[test]
    fn ranks_below_minimum_are_rejected() {
        for t in [
            ArtinType::A(2),
            ArtinType::B(2),
            ArtinType::AffA(2),
            ArtinType::AffC(1),
            ArtinType::I2(2),
        ] {
            assert!(matches!(coxeter_matrix(t), Err(ArtinError::InvalidType(_))));
        }
    }

    #[test]
    fn matrix_constructor_checks_invariants() {
        use Label::*;
        assert!(CoxeterMatrix::new(2, vec![Finite(1), Finite(3), Finite(3), Finite(1)]).is_ok());
        assert!(CoxeterMatrix::new(2, vec![Finite(1), Infinite, Infinite, Finite(1)]).is_ok());
        assert!(CoxeterMatrix::new(2, vec![Finite(1), Finite(3), Finite(4), Finite(1)]).is_err());
        assert!(CoxeterMatrix::new(2, vec![Finite(2), Finite(3), Finite(3), Finite(1)]).is_err());
        assert!(CoxeterMatrix::new(2, vec![Finite(1), Finite(1), Finite(1), Finite(1)]).is_err());
    }

    #[test]
    fn infinite_labels_give_no_relation() {
        use Label::*;
        let m = CoxeterMatrix::new(2, vec![Finite(1), Infinite, Infinite, Finite(1)]).unwrap();
        assert!(artin_relations(&m).relations.is_empty());
    }

    #[test]
    fn relations_are_alternating_words() {
        let p = presentation(ArtinType::I2(4)).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].lhs, Word::new(vec![1, 2, 1, 2]));
        assert_eq!(p.relations[0].rhs, Word::new(vec![2, 1, 2, 1]));

        let a = presentation(ArtinType::A(3)).unwrap();
        assert_eq!(a.relations[0].lhs, Word::new(vec![1, 2, 1]));
        assert_eq!(a.relations[0].rhs, Word::new(vec![2, 1, 2]));
        assert_eq!(a.relations[1].lhs, Word::new(vec![1, 3]));
        assert_eq!(a.relations[1].rhs, Word::new(vec![3, 1]));
    }

    #[test]
    fn relation_count_matches_finite_labels() {
        for t in [
            ArtinType::A(3),
            ArtinType::A(6),
            ArtinType::B(4),
            ArtinType::AffA(3),
            ArtinType::AffA(6),
            ArtinType::AffC(5),
            ArtinType::I2(5),
            ArtinType::F4,
        ] {
            let m = coxeter_matrix(t).unwrap();
            let n = m.rank();
            let p = artin_relations(&m);
            assert_eq!(p.relations.len(), n * (n - 1) / 2, "{t}");
            for r in &p.relations {
                assert_eq!(r.lhs.len(), r.rhs.len());
                let (i, j) = (r.lhs.letters()[0] as usize, r.lhs.letters()[1] as usize);
                assert_eq!(r.lhs.len() as u32, m.get(i, j).finite().unwrap());
            }
        }
    }

    #[test]
    fn presentation_text_golden() {
        let p = presentation(ArtinType::B(3)).unwrap();
        assert_eq!(
            p.to_text(),
            "rank: 3\nrelations: 3\n  [1 2 1] = [2 1 2]\n  [1 3] = [3 1]\n  [2 3 2 3] = [3 2 3 2]\n"
        );
    }

    #[test]
    fn word_codec() {
        assert_eq!(parse_word("1 2 -1", 2).unwrap(), Word::new(vec![1, 2, -1]));
        assert_eq!(parse_word("", 3).unwrap(), Word::empty());
        assert_eq!(parse_word("  3   -2 ", 3).unwrap().to_string(), "3 -2");

        let err = parse_word("1 0", 3).unwrap_err();
        assert!(matches!(err, ArtinError::Parse { ref token, .. } if token == "0"));
        let err = parse_word("1 x", 3).unwrap_err();
        assert!(matches!(err, ArtinError::Parse { ref token, .. } if token == "x"));
        let err = parse_word("1 -4", 3).unwrap_err();
        assert!(matches!(err, ArtinError::Parse { ref token, .. } if token == "-4"));
    }

    #[test]
    fn type_tags_round_trip() {
        for t in [
            ArtinType::A(3),
            ArtinType::B(5),
            ArtinType::AffA(4),
            ArtinType::AffC(6),
            ArtinType::I2(8),
            ArtinType::F4,
        ] {
            assert_eq!(t.to_string().parse::<ArtinType>().unwrap(), t);
        }
        assert!("Q:3".parse::<ArtinType>().is_err());
        assert!("A:x".parse::<ArtinType>().is_err());
        assert!("A:2".parse::<ArtinType>().is_err());
    }

    #[test]
    fn word_helpers() {
        let w = Word::new(vec![1, -2, 3]);
        assert_eq!(w.inverse(), Word::new(vec![-3, 2, -1]));
        assert_eq!(w.exponent_sum(), 1);
        assert_eq!(Word::new(vec![1, 2]).pow(-2), Word::new(vec![-2, -1, -2, -1]));
        assert_eq!(Word::new(vec![1, 2, -2, -1, 3]).free_reduce(), Word::new(vec![3]));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn letters() -> impl Strategy<Value = Vec<i32>> {
            prop::collection::vec((1i32..=6, any::<bool>()), 0..30)
                .prop_map(|v| v.into_iter().map(|(i, s)| if s { i } else { -i }).collect())
        }

        proptest! {
            #[test]
            fn parse_format_round_trip(l in letters()) {
                let w = Word::new(l);
                prop_assert_eq!(parse_word(&format_word(&w), 6).unwrap(), w);
            }
        }
    }
}
