//! Permutations, d-activity and the pattern checkers for d-Fishburn and
//! self-modified d-Fishburn permutations.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{d_ascent_count, find_word_pattern, is_permutation, Letter, Word};

/// A word that is a bijection on `[n]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(w: Word) -> Result<Self> {
        if is_permutation(&w) {
            Ok(Permutation(w))
        } else {
            Err(Error::NotPermutation(w.to_string()))
        }
    }

    pub(crate) fn from_vec_unchecked(v: Vec<Letter>) -> Self {
        debug_assert!(is_permutation(&v));
        Permutation(Word::from_vec_unchecked(v))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Word::identity(n))
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as Letter + 1;
        }
        Permutation::from_vec_unchecked(inv)
    }

    /// 0-based position of each value; index 0 unused.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    /// Number of descents of the inverse permutation.
    pub fn ides(&self) -> usize {
        let pos = self.positions();
        (1..self.0.len()).filter(|&v| pos[v + 1] < pos[v]).count()
    }

    /// Every permutation of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<Letter> = (1..=n as Letter).collect();
        loop {
            out.push(Permutation::from_vec_unchecked(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [Letter]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Deref for Permutation {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(s.parse()?)
    }
}

/// d-active and d-inactive values of a permutation, each in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ActivityTable {
    pub active: Vec<Letter>,
    pub inactive: Vec<Letter>,
}

impl ActivityTable {
    pub fn is_active(&self, v: Letter) -> bool {
        self.active.binary_search(&v).is_ok()
    }
}

fn activity_flags(p: &Permutation, d: u64) -> Vec<bool> {
    let n = p.len();
    let pos = p.positions();
    let mut active = vec![false; n + 1];
    if n >= 1 {
        active[1] = true;
    }
    for k in 2..=n {
        let (hi, lo) = (pos[k], pos[k - 1]);
        let inactive = hi < lo && {
            let between = p[hi + 1..lo].iter().filter(|&&v| (v as usize) < k && active[v as usize]).count();
            between as u64 >= d
        };
        active[k] = !inactive;
    }
    active
}

/// Classifies `1..=n`: 1 is active; `k` is inactive iff it sits left of
/// `k-1` with at least `d` active values below `k` strictly between them.
pub fn d_activity(p: &Permutation, d: u64) -> ActivityTable {
    let flags = activity_flags(p, d);
    let (mut active, mut inactive) = (Vec::new(), Vec::new());
    for (v, &is_active) in flags.iter().enumerate().skip(1) {
        if is_active {
            active.push(v as Letter);
        } else {
            inactive.push(v as Letter);
        }
    }
    ActivityTable { active, inactive }
}

fn find_f_with(p: &Permutation, first_ok: impl Fn(Letter) -> bool) -> Option<[usize; 3]> {
    let n = p.len();
    for i in 0..n.saturating_sub(2) {
        let j = i + 1;
        if p[i] >= p[j] || !first_ok(p[i]) {
            continue;
        }
        for k in j + 1..n {
            if p[k] + 1 == p[i] {
                return Some([i + 1, j + 1, k + 1]);
            }
        }
    }
    None
}

/// First occurrence `(i, i+1, k)` of the Fishburn pattern: adjacent
/// `p_i < p_{i+1}` followed later by `p_i - 1`.
pub fn find_f(p: &Permutation) -> Option<[usize; 3]> {
    find_f_with(p, |_| true)
}

pub fn contains_f(p: &Permutation) -> bool {
    find_f(p).is_some()
}

/// First occurrence of the Fishburn pattern whose first value is d-inactive.
pub fn find_f_d(p: &Permutation, d: u64) -> Option<[usize; 3]> {
    let flags = activity_flags(p, d);
    find_f_with(p, |v| !flags[v as usize])
}

pub fn contains_f_d(p: &Permutation, d: u64) -> bool {
    find_f_d(p, d).is_some()
}

/// First `231` occurrence `(i, j, k)` that does not extend to `31524` with
/// an extra entry between `i` and `j` and another after `k`.
pub fn find_barred_31524(p: &Permutation) -> Option<[usize; 3]> {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            if p[j] <= p[i] {
                continue;
            }
            for k in j + 1..n {
                if p[k] >= p[i] {
                    continue;
                }
                // 31524: p_l < p_k < p_i < p_m < p_j
                let extends = (i + 1..j).any(|l| p[l] < p[k]) && (k + 1..n).any(|m| p[i] < p[m] && p[m] < p[j]);
                if !extends {
                    return Some([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    None
}

pub fn contains_barred_31524(p: &Permutation) -> bool {
    find_barred_31524(p).is_some()
}

/// First pair `i < j` with `p_i = p_j + 1` and at most `d` ascents in the
/// factor `p_i … p_j` (its first position counted as an ascent).
pub fn find_s_d(p: &Permutation, d: u64) -> Option<[usize; 2]> {
    let pos = p.positions();
    let n = p.len();
    for i in 0..n {
        let v = p[i] as usize;
        if v < 2 {
            continue;
        }
        let j = pos[v - 1];
        if j > i && d_ascent_count(&p[i..=j], 0) as u64 <= d {
            return Some([i + 1, j + 1]);
        }
    }
    None
}

pub fn contains_s_d(p: &Permutation, d: u64) -> bool {
    find_s_d(p, d).is_some()
}

pub fn find_classical(p: &Permutation, t: &Permutation) -> Option<Vec<usize>> {
    find_word_pattern(p, t).expect("permutations are Cayley permutations")
}

/// Classical avoidance: no subsequence of `p` is order-isomorphic to `t`.
pub fn avoids_classical(p: &Permutation, t: &Permutation) -> bool {
    find_classical(p, t).is_none()
}
