//! Reference oracles that share no code with the library's word problem
//! solvers.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Laurent polynomial in `t`, exponent to coefficient, no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<i32, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(c: i64, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Laurent(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, e: i32, c: i64) {
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (&e, &c) in &o.0 {
            r.add_term(e, c);
        }
        r
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut r = Laurent::zero();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &o.0 {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
}

pub type Matrix = Vec<Vec<Laurent>>;

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| (0..k).map(|j| Laurent::monomial((i == j) as i64, 0)).collect())
        .collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.len();
    let mut r = vec![vec![Laurent::zero(); k]; k];
    for i in 0..k {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..k {
                if !b[l][j].is_zero() {
                    r[i][j] = r[i][j].add(&a[i][l].mul(&b[l][j]));
                }
            }
        }
    }
    r
}

fn burau_letter(strands: usize, letter: i32) -> Matrix {
    let i = letter.unsigned_abs() as usize - 1;
    let mut m = identity(strands);
    let block = if letter > 0 {
        [[Laurent::monomial(1, 0).add(&Laurent::monomial(-1, 1)), Laurent::monomial(1, 1)], [Laurent::monomial(1, 0), Laurent::zero()]]
    } else {
        [[Laurent::zero(), Laurent::monomial(1, 0)], [Laurent::monomial(1, -1), Laurent::monomial(1, 0).add(&Laurent::monomial(-1, -1))]]
    };
    for (r, row) in block.into_iter().enumerate() {
        for (c, x) in row.into_iter().enumerate() {
            m[i + r][i + c] = x;
        }
    }
    m
}

/// Unreduced Burau matrix of a braid word on `rank + 1` strands. Equal
/// braids have equal matrices.
pub fn burau(rank: usize, word: &[i32]) -> Matrix {
    word.iter()
        .fold(identity(rank + 1), |acc, &l| matmul(&acc, &burau_letter(rank + 1, l)))
}

/// Coxeter matrix entries `m_ij` for a type given by its relations: a list
/// of `(i, j, m)` with `i < j`.
pub type Labels = Vec<(i32, i32, usize)>;

pub fn labels_a(n: usize) -> Labels {
    let mut out = Vec::new();
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            out.push((i, j, if j == i + 1 { 3 } else { 2 }));
        }
    }
    out
}

pub fn labels_b(n: usize) -> Labels {
    labels_a(n)
        .into_iter()
        .map(|(i, j, m)| if (i, j) == (n as i32 - 1, n as i32) { (i, j, 4) } else { (i, j, m) })
        .collect()
}

pub fn labels_aff_a(n: usize) -> Labels {
    let mut out = Vec::new();
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            let adjacent = j == i + 1 || (i == 1 && j == n as i32);
            out.push((i, j, if adjacent { 3 } else { 2 }));
        }
    }
    out
}

pub fn labels_aff_c(n: usize) -> Labels {
    labels_a(n)
        .into_iter()
        .map(|(i, j, m)| if (i, j) == (1, 2) || (i, j) == (n as i32 - 1, n as i32) { (i, j, 4) } else { (i, j, m) })
        .collect()
}

pub fn alternating(i: i32, j: i32, len: usize) -> Vec<i32> {
    (0..len).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

/// All positive words equal to `w` in the Artin monoid. Artin monoids embed
/// in their groups, so for positive words this decides group equality.
pub fn positive_class(w: &[i32], labels: &Labels, cap: usize) -> Option<BTreeSet<Vec<i32>>> {
    let mut rules: Vec<(Vec<i32>, Vec<i32>)> = Vec::new();
    for &(i, j, m) in labels {
        rules.push((alternating(i, j, m), alternating(j, i, m)));
        rules.push((alternating(j, i, m), alternating(i, j, m)));
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for (lhs, rhs) in &rules {
            if lhs.len() > cur.len() {
                continue;
            }
            for at in 0..=cur.len() - lhs.len() {
                if cur[at..at + lhs.len()] == lhs[..] {
                    let mut next = cur.clone();
                    next.splice(at..at + lhs.len(), rhs.iter().copied());
                    if seen.insert(next.clone()) {
                        if seen.len() > cap {
                            return None;
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Some(seen)
}

pub fn positive_equal(u: &[i32], v: &[i32], labels: &Labels) -> bool {
    u.len() == v.len() && positive_class(u, labels, 200_000).expect("class fits the cap").contains(v)
}

/// Image in the dihedral group of order `2m`, as `x ↦ e·x + c (mod m)`;
/// `a` is `x ↦ -x` and `b` is `x ↦ 1 - x`.
pub fn dihedral_image(m: i64, word: &[i32]) -> (i64, i64) {
    word.iter().fold((1, 0), |(e, c), &l| {
        let (e2, c2) = if l.abs() == 1 { (-1, 0) } else { (-1, 1) };
        // compose: apply the accumulated map after the new letter
        ((e * e2), (e * c2 + c).rem_euclid(m))
    })
}

pub fn exponent_sum(w: &[i32]) -> i64 {
    w.iter().map(|l| l.signum() as i64).sum()
}

pub fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

/// Substitutes `images[i-1]` for each letter `±i`, without reduction.
pub fn substitute(w: &[i32], images: &[Vec<i32>]) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in w {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(inverse(img));
        }
    }
    out
}

/// Deterministic xorshift generator, kept separate from the library's RNG.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1)
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn word(&mut self, rank: usize, max_len: usize, positive: bool) -> Vec<i32> {
        let len = 1 + self.below(max_len as u64) as usize;
        (0..len)
            .map(|_| {
                let i = 1 + self.below(rank as u64) as i32;
                if positive || self.below(2) == 0 {
                    i
                } else {
                    -i
                }
            })
            .collect()
    }
}
