//! Words over the positive integers and their positional statistics.
//!
//! A [`Word`] is the one-line presentation `a_1 a_2 … a_n` of a sequence.
//! Positions are 1-based everywhere they leave this module: every
//! [`IndexSet`] holds 1-based positions.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single entry of a word.
pub type Letter = u64;

/// A finite sequence of positive integers. The empty word is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Builds a word, rejecting zero entries.
    pub fn new(entries: Vec<Letter>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&a| a == 0) {
            return Err(Error::Parse {
                input: format_letters(&entries),
                reason: format!("entry at position {} is 0; entries must be positive", pos + 1),
            });
        }
        Ok(Word(entries))
    }

    /// Builds a word from entries the caller guarantees to be positive.
    pub(crate) fn from_vec_unchecked(entries: Vec<Letter>) -> Self {
        debug_assert!(entries.iter().all(|&a| a >= 1));
        Word(entries)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The increasing permutation `12…n`.
    pub fn identity(n: usize) -> Self {
        Word((1..=n as Letter).collect())
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    /// `max w`, with `max ε = 0`.
    pub fn max_letter(&self) -> Letter {
        max_letter(&self.0)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word::from_vec_unchecked(s.to_vec())
    }
}

/// Digit string when every entry is at most 9, comma separated otherwise.
pub fn format_letters(w: &[Letter]) -> String {
    if w.iter().all(|&a| a <= 9) {
        w.iter().map(|a| char::from(b'0' + *a as u8)).collect()
    } else {
        w.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: String| Error::Parse { input: s.to_string(), reason };
        let entries = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<Letter>().map_err(|e| parse_err(format!("bad entry {:?}: {e}", t.trim()))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(Letter::from).ok_or_else(|| parse_err(format!("{c:?} is not a digit"))))
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(entries)
    }
}

/// A strictly increasing set of 1-based positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Builds the set from positions already in increasing order.
    pub(crate) fn from_sorted(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(positions.first().is_none_or(|&p| p >= 1));
        IndexSet(positions)
    }

    /// Builds a set from arbitrary positions, sorting and deduplicating.
    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        let mut v: Vec<usize> = positions.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.0.binary_search(&pos).is_ok()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub(crate) fn max_letter(w: &[Letter]) -> Letter {
    w.iter().copied().max().unwrap_or(0)
}

#[inline]
pub(crate) fn is_d_ascent(prev: Letter, cur: Letter, d: u64) -> bool {
    // cur > prev - d without leaving the unsigned range
    cur + d > prev
}

/// Positions `i` with `i = 1`, or `i ≥ 2` and `w[i] > w[i-1] - d`.
pub fn d_ascent_set(w: &[Letter], d: u64) -> IndexSet {
    let mut out = Vec::new();
    for i in 0..w.len() {
        if i == 0 || is_d_ascent(w[i - 1], w[i], d) {
            out.push(i + 1);
        }
    }
    IndexSet::from_sorted(out)
}

/// Number of d-ascents, with the first position counted.
pub fn d_ascent_count(w: &[Letter], d: u64) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.windows(2).filter(|p| is_d_ascent(p[0], p[1], d)).count()
}

/// Every entry is at most one more than the number of d-ascents before it.
pub fn is_d_ascent_sequence(w: &[Letter], d: u64) -> bool {
    let mut asc = 0u64;
    for i in 0..w.len() {
        if w[i] == 0 || w[i] > asc + 1 {
            return false;
        }
        if i == 0 || is_d_ascent(w[i - 1], w[i], d) {
            asc += 1;
        }
    }
    true
}

/// Positions of leftmost occurrences of the values `1..=max w`.
pub fn nub(w: &[Letter]) -> IndexSet {
    let max = max_letter(w) as usize;
    let mut seen = vec![false; max + 1];
    let mut out = Vec::new();
    for (i, &a) in w.iter().enumerate() {
        let a = a as usize;
        if a >= 1 && !seen[a] {
            seen[a] = true;
            out.push(i + 1);
        }
    }
    IndexSet::from_sorted(out)
}

/// Left-right maxima: positions whose value exceeds every earlier value.
pub fn lrmax_set(w: &[Letter]) -> IndexSet {
    let mut out = Vec::new();
    let mut best = 0;
    for (i, &a) in w.iter().enumerate() {
        if i == 0 || a > best {
            out.push(i + 1);
            best = a;
        }
    }
    IndexSet::from_sorted(out)
}

/// Weak descents: positions `i ≥ 2` with `w[i] ≤ w[i-1]`.
pub fn weak_descent_set(w: &[Letter]) -> IndexSet {
    let out = (1..w.len()).filter(|&i| w[i] <= w[i - 1]).map(|i| i + 1).collect();
    IndexSet::from_sorted(out)
}

pub fn weak_descent_count(w: &[Letter]) -> usize {
    w.windows(2).filter(|p| p[1] <= p[0]).count()
}

pub fn is_inversion_sequence(w: &[Letter]) -> bool {
    w.iter().enumerate().all(|(i, &a)| a >= 1 && a as usize <= i + 1)
}

/// The image of `w` is exactly `{1, …, max w}`.
pub fn is_cayley(w: &[Letter]) -> bool {
    let max = max_letter(w) as usize;
    if max > w.len() || w.contains(&0) {
        return false;
    }
    let mut seen = vec![false; max + 1];
    for &a in w {
        seen[a as usize] = true;
    }
    seen[1..].iter().all(|&s| s)
}

/// Restricted growth function: starts at 1 and never exceeds one more than the running maximum.
pub fn is_rgf(w: &[Letter]) -> bool {
    let mut max = 0;
    for &a in w {
        if a == 0 || a > max + 1 {
            return false;
        }
        max = max.max(a);
    }
    true
}

pub fn is_weakly_increasing(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

pub fn is_permutation(w: &[Letter]) -> bool {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    for &a in w {
        let a = a as usize;
        if a == 0 || a > n || seen[a] {
            return false;
        }
        seen[a] = true;
    }
    true
}

/// Membership flags for the word families that show up throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub is_inversion_seq: bool,
    pub is_cayley: bool,
    pub is_rgf: bool,
    pub is_weakly_increasing: bool,
    pub is_permutation: bool,
}

pub fn classify(w: &[Letter]) -> Classification {
    Classification {
        is_inversion_seq: is_inversion_sequence(w),
        is_cayley: is_cayley(w),
        is_rgf: is_rgf(w),
        is_weakly_increasing: is_weakly_increasing(w),
        is_permutation: is_permutation(w),
    }
}

/// First occurrence of the Cayley pattern `p` in `w`, as 1-based positions
/// in lexicographic order. Ties in `p` must be matched by ties in `w`.
pub fn find_word_pattern(w: &[Letter], p: &[Letter]) -> Result<Option<Vec<usize>>> {
    if !is_cayley(p) {
        return Err(Error::NotCayley(format_letters(p)));
    }
    let k = p.len();
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut chosen = Vec::with_capacity(k);
    if search_pattern(w, p, 0, &mut chosen) {
        Ok(Some(chosen.iter().map(|&i| i + 1).collect()))
    } else {
        Ok(None)
    }
}

fn search_pattern(w: &[Letter], p: &[Letter], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == p.len() {
        return true;
    }
    let remaining = p.len() - t;
    for i in start..=w.len().saturating_sub(remaining) {
        if i >= w.len() {
            break;
        }
        // new entry must compare to every chosen entry exactly as p does
        let consistent = chosen.iter().enumerate().all(|(s, &j)| p[s].cmp(&p[t]) == w[j].cmp(&w[i]));
        if consistent {
            chosen.push(i);
            if search_pattern(w, p, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True iff no subsequence of `w` is order-isomorphic (ties included) to `p`.
pub fn avoids_word_pattern(w: &[Letter], p: &[Letter]) -> Result<bool> {
    Ok(find_word_pattern(w, p)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_positions(v.iter().copied())
    }

    #[test]
    fn d_ascent_set_examples() {
        assert_eq!(d_ascent_set(&w("121242232"), 0), set(&[1, 2, 4, 5, 8]));
        assert_eq!(d_ascent_set(&w("1124253"), 2), set(&[1, 2, 3, 4, 6]));
        assert!(d_ascent_set(&w(""), 3).is_empty());
    }

    #[test]
    fn ascent_sequence_membership() {
        assert!(is_d_ascent_sequence(&w("111"), 0));
        assert!(!is_d_ascent_sequence(&w("11312"), 0));
        assert!(is_d_ascent_sequence(&w("11312"), 1));
        assert!(!is_d_ascent_sequence(&w("1124253"), 0));
        assert!(is_d_ascent_sequence(&w("1124253"), 1));
        assert!(!is_d_ascent_sequence(&w("2"), 5));
        assert!(is_d_ascent_sequence(&w(""), 0));
    }

    #[test]
    fn nub_lrmax_wdes() {
        assert_eq!(nub(&w("141252232")), set(&[1, 2, 4, 5, 8]));
        assert_eq!(nub(&w("111")), set(&[1]));
        assert_eq!(nub(&w("121")), set(&[1, 2]));
        assert!(nub(&w("")).is_empty());

        assert_eq!(lrmax_set(&w("121242232")), set(&[1, 2, 5]));
        assert_eq!(lrmax_set(&Word::identity(6)), set(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(lrmax_set(&w("111")), set(&[1]));

        assert_eq!(weak_descent_set(&w("141252232")), set(&[3, 6, 7, 9]));
        assert!(weak_descent_set(&Word::identity(5)).is_empty());
        assert_eq!(weak_descent_set(&w("11")), set(&[2]));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&w("11312"));
        assert!(c.is_inversion_seq && c.is_cayley && !c.is_rgf);
        assert!(!c.is_permutation && !c.is_weakly_increasing);
        assert!(classify(&w("1212")).is_rgf);
        let e = classify(&w(""));
        assert!(e.is_inversion_seq && e.is_cayley && e.is_rgf && e.is_weakly_increasing && e.is_permutation);
        assert!(!classify(&w("13")).is_cayley);
        assert!(!classify(&w("21")).is_rgf);
    }

    #[test]
    fn word_patterns() {
        assert_eq!(find_word_pattern(&w("1124253"), &w("112")).unwrap(), Some(vec![1, 2, 3]));
        assert!(avoids_word_pattern(&w("11"), &w("112")).unwrap());
        let long = w("12345431");
        assert!(avoids_word_pattern(&long, &w("112")).unwrap());
        assert!(avoids_word_pattern(&long, &w("213")).unwrap());
        assert!(!avoids_word_pattern(&w("1213"), &w("213")).unwrap());
        assert!(avoids_word_pattern(&w("1123"), &w("213")).unwrap());
        assert!(find_word_pattern(&w("123"), &w("13")).is_err());
    }

    #[test]
    fn serialization() {
        assert_eq!(w("121242232").to_string(), "121242232");
        let big = Word::new(vec![1, 4, 12, 2]).unwrap();
        assert_eq!(big.to_string(), "1,4,12,2");
        assert_eq!("1,4,12,2".parse::<Word>().unwrap(), big);
        assert_eq!(Word::empty().to_string(), "");
        assert!("120".parse::<Word>().is_err());
        assert!("1a".parse::<Word>().is_err());
        assert!("1,0".parse::<Word>().is_err());
    }
}
