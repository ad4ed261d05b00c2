//! The modification operator, the d-hat map and its inverse.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{
    d_ascent_set, format_letters, is_d_ascent_sequence, is_inversion_sequence, is_rgf, nub, IndexSet, Letter, Word,
};

/// Increments every entry strictly left of `pivot` (1-based) that is at least `w[pivot]`.
pub fn modify_in_place(w: &mut [Letter], pivot: usize) -> Result<()> {
    if pivot == 0 || pivot > w.len() {
        return Err(Error::InvalidPivot { pivot, len: w.len() });
    }
    let a = w[pivot - 1];
    for x in &mut w[..pivot - 1] {
        if *x >= a {
            *x = x.checked_add(1).ok_or(Error::Overflow("modify"))?;
        }
    }
    Ok(())
}

/// `M(w, j)`.
pub fn modify(w: &[Letter], pivot: usize) -> Result<Word> {
    let mut v = w.to_vec();
    modify_in_place(&mut v, pivot)?;
    Ok(Word::from_vec_unchecked(v))
}

/// Output of [`hat`]: the input, its image and the pivots that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatResult {
    pub original: Word,
    pub modified: Word,
    /// The d-ascent list of `original`, in increasing order.
    pub pivots: IndexSet,
}

fn ensure_member(w: &[Letter], d: u64) -> Result<()> {
    if is_d_ascent_sequence(w, d) {
        Ok(())
    } else {
        Err(Error::NotDAscentSequence { word: format_letters(w), d })
    }
}

/// Applies `modify` at each d-ascent of `w`, left to right.
pub fn hat(w: &[Letter], d: u64) -> Result<HatResult> {
    ensure_member(w, d)?;
    let pivots = d_ascent_set(w, d);
    let mut m = w.to_vec();
    for j in pivots.iter() {
        modify_in_place(&mut m, j)?;
    }
    Ok(HatResult { original: Word::from(w), modified: Word::from_vec_unchecked(m), pivots })
}

/// Like [`hat`] without allocating the pivot list; `w` must already be a d-ascent sequence.
pub(crate) fn hat_unchecked(w: &[Letter], d: u64, out: &mut Vec<Letter>) {
    out.clear();
    out.extend_from_slice(w);
    for j in 0..w.len() {
        if j == 0 || crate::word::is_d_ascent(w[j - 1], w[j], d) {
            let a = out[j];
            for x in &mut out[..j] {
                if *x >= a {
                    *x += 1;
                }
            }
        }
    }
}

/// Inverts [`hat`]: undoes the modifications at the nub positions of `m`, right to left.
pub fn unhat(m: &[Letter], d: u64) -> Result<Word> {
    let mut w = m.to_vec();
    let pivots = nub(m);
    for j in pivots.positions().iter().rev() {
        let a = w[j - 1];
        for x in &mut w[..j - 1] {
            if *x > a {
                *x -= 1;
            }
        }
    }
    let not_modified = || Error::NotModified { word: format_letters(m), d };
    if !is_d_ascent_sequence(&w, d) {
        return Err(not_modified());
    }
    if hat(&w, d)?.modified.as_slice() != m {
        return Err(not_modified());
    }
    Ok(Word::from_vec_unchecked(w))
}

/// `hat_d(w) = w`. Rejects words that are not d-ascent sequences.
pub fn is_self_modified(w: &[Letter], d: u64) -> Result<bool> {
    ensure_member(w, d)?;
    let mut buf = Vec::with_capacity(w.len());
    hat_unchecked(w, d, &mut buf);
    Ok(buf == w)
}

/// The least `d` with `w ∈ A_d`, if any. Inversion sequences always have one, at most `len(w)`.
pub fn min_d(w: &[Letter]) -> Option<u64> {
    (0..=w.len() as u64).find(|&d| is_d_ascent_sequence(w, d))
}

/// `H(w)`: every d-hat of the inversion sequence `w`.
pub fn all_hats(w: &[Letter]) -> Result<BTreeSet<Word>> {
    if !is_inversion_sequence(w) {
        return Err(Error::NotInversionSequence(format_letters(w)));
    }
    let n = w.len() as u64;
    // an inversion sequence of length n lies in A_n
    let d_min = min_d(w).unwrap_or(n);
    let mut out = BTreeSet::new();
    for d in d_min..=n {
        if is_d_ascent_sequence(w, d) {
            out.insert(hat(w, d)?.modified);
        }
    }
    Ok(out)
}

/// One step of a hat computation, for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Pivots applied so far, including this one.
    pub pivots: Vec<usize>,
    pub word: Word,
    /// 1-based positions incremented by this step.
    pub changed: Vec<usize>,
}

pub fn hat_steps(w: &[Letter], d: u64) -> Result<Vec<TraceStep>> {
    let res = hat(w, d)?;
    let mut cur = w.to_vec();
    let mut applied = Vec::new();
    let mut steps = Vec::new();
    for j in res.pivots.iter() {
        let before = cur.clone();
        modify_in_place(&mut cur, j)?;
        applied.push(j);
        let changed = (0..cur.len()).filter(|&i| cur[i] != before[i]).map(|i| i + 1).collect();
        steps.push(TraceStep { pivots: applied.clone(), word: Word::from_vec_unchecked(cur.clone()), changed });
    }
    Ok(steps)
}

/// Renders a hat computation one pivot per line: the pivot entry is
/// bracketed and incremented entries are parenthesised, e.g.
/// `M(w,1,2,4) = 1(3)1[2]42232`.
pub fn render_trace(w: &[Letter], d: u64) -> Result<String> {
    let steps = hat_steps(w, d)?;
    let digits = steps.iter().all(|s| s.word.iter().all(|&a| a <= 9)) && w.iter().all(|&a| a <= 9);
    let sep = if digits { "" } else { "," };
    let mut out = String::new();
    writeln!(out, "w = {}", format_letters(w)).unwrap();
    for s in &steps {
        let pivot = *s.pivots.last().unwrap();
        let tokens: Vec<String> = s
            .word
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i + 1 == pivot {
                    format!("[{a}]")
                } else if s.changed.contains(&(i + 1)) {
                    format!("({a})")
                } else {
                    a.to_string()
                }
            })
            .collect();
        let list: Vec<String> = s.pivots.iter().map(|p| p.to_string()).collect();
        writeln!(out, "M(w,{}) = {}", list.join(","), tokens.join(sep)).unwrap();
    }
    let result = steps.last().map(|s| s.word.to_string()).unwrap_or_default();
    writeln!(out, "hat_{d}(w) = {result}").unwrap();
    Ok(out)
}

/// A factor `iB_i` of an RGF `1B_1 2B_2 … kB_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub leader: Letter,
    pub tail: Word,
    /// The factor `leader · tail` is decreasing with the requested pace.
    pub paced: bool,
}

/// The decomposition `w = 1B_1 2B_2 … kB_k` of an RGF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFactoring {
    pub blocks: Vec<Block>,
    pub pace: u64,
}

impl BlockFactoring {
    /// Every factor is decreasing with pace `self.pace`.
    pub fn is_paced(&self) -> bool {
        self.blocks.iter().all(|b| b.paced)
    }

    pub fn to_word(&self) -> Word {
        let mut v = Vec::new();
        for b in &self.blocks {
            v.push(b.leader);
            v.extend_from_slice(&b.tail);
        }
        Word::from_vec_unchecked(v)
    }
}

/// Consecutive differences are all at least `pace`.
pub fn is_decreasing_with_pace(c: &[Letter], pace: u64) -> bool {
    c.windows(2).all(|p| p[0] >= p[1] && p[0] - p[1] >= pace)
}

pub fn block_factoring(w: &[Letter], d: u64) -> Result<BlockFactoring> {
    if !is_rgf(w) {
        return Err(Error::NotRgf(format_letters(w)));
    }
    let mut blocks: Vec<(Letter, Vec<Letter>)> = Vec::new();
    let mut max = 0;
    for &a in w {
        if a > max {
            max = a;
            blocks.push((a, Vec::new()));
        } else {
            blocks.last_mut().expect("RGF starts with a leader").1.push(a);
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|(leader, tail)| {
            let mut factor = Vec::with_capacity(tail.len() + 1);
            factor.push(leader);
            factor.extend_from_slice(&tail);
            Block { leader, tail: Word::from_vec_unchecked(tail), paced: is_decreasing_with_pace(&factor, d) }
        })
        .collect();
    Ok(BlockFactoring { blocks, pace: d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Recursive two-case construction of the modified sequence, used as an
    /// independent oracle for `hat`.
    fn hat_recursive(a: &[Letter], d: u64) -> Vec<Letter> {
        if a.len() <= 1 {
            return a.to_vec();
        }
        let (beta, last) = a.split_at(a.len() - 1);
        let x = last[0];
        let b = beta[beta.len() - 1];
        let mut h = hat_recursive(beta, d);
        if x + d > b {
            for y in &mut h {
                if *y >= x {
                    *y += 1;
                }
            }
        }
        h.push(x);
        h
    }

    #[test]
    fn modify_examples() {
        assert_eq!(modify(&w("121242232"), 2).unwrap(), w("121242232"));
        assert_eq!(modify(&w("131242232"), 8).unwrap(), w("141252232"));
        assert_eq!(modify(&w("3121"), 1).unwrap(), w("3121"));
        assert_eq!(modify(&w("12"), 3), Err(Error::InvalidPivot { pivot: 3, len: 2 }));
        assert!(modify(&w("12"), 0).is_err());
    }

    #[test]
    fn hat_examples() {
        let r = hat(&w("121242232"), 0).unwrap();
        assert_eq!(r.modified, w("141252232"));
        assert_eq!(r.pivots.positions(), &[1, 2, 4, 5, 8]);
        assert_eq!(hat(&w("1124253"), 2).unwrap().modified, w("3124253"));
        assert_eq!(hat(&w("11312"), 1).unwrap().modified, w("31412"));
        assert_eq!(hat(&w("11312"), 2).unwrap().modified, w("31412"));
        assert_eq!(hat(&w("11312"), 3).unwrap().modified, w("43512"));
        assert_eq!(hat(&w(""), 0).unwrap().modified, w(""));
        assert_eq!(hat(&w("1"), 4).unwrap().modified, w("1"));
        assert!(matches!(hat(&w("11312"), 0), Err(Error::NotDAscentSequence { .. })));
    }

    #[test]
    fn hat_matches_recursive_construction() {
        for d in 0..4 {
            for n in 0..8 {
                for a in crate::enumerate::gen_d_ascent_sequences(d, n) {
                    assert_eq!(hat(&a, d).unwrap().modified.as_slice(), hat_recursive(&a, d).as_slice(), "{a} d={d}");
                }
            }
        }
    }

    #[test]
    fn unhat_examples() {
        assert_eq!(unhat(&w("141252232"), 0).unwrap(), w("121242232"));
        assert_eq!(unhat(&w("3124253"), 2).unwrap(), w("1124253"));
        for d in 0..4 {
            assert_eq!(unhat(&Word::identity(6), d).unwrap(), Word::identity(6));
        }
        assert!(matches!(unhat(&w("1212"), 0), Err(Error::NotModified { .. })));
        assert!(unhat(&w("21"), 0).is_err());
    }

    #[test]
    fn self_modified_examples() {
        for d in 0..5 {
            assert!(is_self_modified(&Word::identity(7), d).unwrap());
        }
        assert!(!is_self_modified(&w("11312"), 1).unwrap());
        assert!(is_self_modified(&w("121"), 0).unwrap());
        assert!(is_self_modified(&w("11312"), 0).is_err());
    }

    #[test]
    fn all_hats_examples() {
        let h = all_hats(&w("11312")).unwrap();
        assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![w("31412"), w("43512")]);
        assert_eq!(all_hats(&Word::identity(5)).unwrap().len(), 1);
        let h = all_hats(&w("1124253")).unwrap();
        assert!(h.contains(&w("3124253")));
        let brute: BTreeSet<Word> = (1..=7).map(|d| hat(&w("1124253"), d).unwrap().modified).collect();
        assert_eq!(h, brute);
        assert!(all_hats(&w("13")).is_err());
    }

    #[test]
    fn block_factoring_examples() {
        let f = block_factoring(&w("121"), 0).unwrap();
        assert_eq!(f.blocks.len(), 2);
        assert!(f.blocks[0].tail.is_empty());
        assert_eq!(f.blocks[1].tail, w("1"));
        assert!(f.is_paced());
        assert_eq!(f.to_word(), w("121"));

        for d in 0..5 {
            assert!(block_factoring(&Word::identity(6), d).unwrap().is_paced());
        }

        let f = block_factoring(&w("1212"), 0).unwrap();
        assert_eq!(f.blocks[1].tail, w("12"));
        assert!(!f.is_paced());
        assert_ne!(hat(&w("1212"), 0).unwrap().modified, w("1212"));

        assert!(!block_factoring(&w("121"), 2).unwrap().is_paced());
        assert!(block_factoring(&w("1231"), 2).unwrap().is_paced());
        assert!(matches!(block_factoring(&w("21"), 0), Err(Error::NotRgf(_))));
    }

    #[test]
    fn trace_rendering() {
        let t = render_trace(&w("121242232"), 0).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "w = 121242232");
        assert_eq!(lines[3], "M(w,1,2,4) = 1(3)1[2]42232");
        assert_eq!(lines[5], "M(w,1,2,4,5,8) = 1(4)12(5)22[3]2");
        assert_eq!(lines[6], "hat_0(w) = 141252232");
    }
}
