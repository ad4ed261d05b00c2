//! Exhaustive generators for the sequence families, and the explicit
//! bijections on compositions and on self-modified sequences.
//!
//! Every generator emits words in lexicographic order. The d-ascent
//! generators split their search tree into prefix work units that can be
//! processed in parallel and are concatenated back in prefix order, so the
//! output does not depend on scheduling.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hat::{block_factoring, hat_unchecked, is_self_modified};
use crate::word::{format_letters, is_d_ascent, is_d_ascent_sequence, Letter, Word};

/// Depth-first walk of `A_{d,n}` starting from a valid prefix.
fn walk_d_ascent<F: FnMut(&[Letter])>(d: u64, n: usize, prefix: &mut Vec<Letter>, asc: u64, f: &mut F) {
    if prefix.len() == n {
        f(prefix);
        return;
    }
    let last = prefix.last().copied();
    for a in 1..=asc + 1 {
        let up = match last {
            None => 1,
            Some(b) => is_d_ascent(b, a, d) as u64,
        };
        prefix.push(a);
        walk_d_ascent(d, n, prefix, asc + up, f);
        prefix.pop();
    }
}

/// Calls `f` on every d-ascent sequence of length `n`, in lexicographic order.
pub fn for_each_d_ascent_sequence<F: FnMut(&[Letter])>(d: u64, n: usize, mut f: F) {
    let mut prefix = Vec::with_capacity(n);
    walk_d_ascent(d, n, &mut prefix, 0, &mut f);
}

/// All of `A_{d,n}` in lexicographic order.
pub fn gen_d_ascent_sequences(d: u64, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for_each_d_ascent_sequence(d, n, |w| out.push(Word::from(w)));
    out
}

const SPLIT_DEPTH: usize = 4;

fn d_ascent_prefixes(d: u64, n: usize) -> Vec<(Vec<Letter>, u64)> {
    let depth = n.min(SPLIT_DEPTH);
    let mut out = Vec::new();
    for_each_d_ascent_sequence(d, depth, |p| out.push((p.to_vec(), crate::word::d_ascent_count(p, d) as u64)));
    out
}

/// Maps every element of `A_{d,n}` through `f` in parallel, returning the
/// non-`None` results in the lexicographic order of their sources.
pub fn par_filter_map_d_ascent<T, F>(d: u64, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[Letter]) -> Option<T> + Sync,
{
    d_ascent_prefixes(d, n)
        .into_par_iter()
        .map(|(mut prefix, asc)| {
            let mut local = Vec::new();
            walk_d_ascent(d, n, &mut prefix, asc, &mut |w: &[Letter]| {
                if let Some(t) = f(w) {
                    local.push(t);
                }
            });
            local
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Counts the elements of `A_{d,n}` satisfying `pred`, in parallel.
pub fn par_count_d_ascent<F>(d: u64, n: usize, pred: F) -> u64
where
    F: Fn(&[Letter]) -> bool + Sync,
{
    d_ascent_prefixes(d, n)
        .into_par_iter()
        .map(|(mut prefix, asc)| {
            let mut count = 0u64;
            walk_d_ascent(d, n, &mut prefix, asc, &mut |w: &[Letter]| count += pred(w) as u64);
            count
        })
        .sum()
}

/// How [`gen_self_modified`] produces `Self_{d,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfModMethod {
    /// Run `hat` on every element of `A_{d,n}` and keep the fixed points.
    Filter,
    /// Build `1B_1 2B_2 … kB_k` directly with every factor decreasing with pace `d`.
    Blocks,
}

impl std::str::FromStr for SelfModMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "filter" => Ok(SelfModMethod::Filter),
            "blocks" => Ok(SelfModMethod::Blocks),
            _ => Err(Error::Parse { input: s.into(), reason: "expected filter or blocks".into() }),
        }
    }
}

fn walk_blocks<F: FnMut(&[Letter])>(d: u64, n: usize, prefix: &mut Vec<Letter>, max: Letter, asc: u64, f: &mut F) {
    if prefix.len() == n {
        f(prefix);
        return;
    }
    if let Some(&last) = prefix.last() {
        // continue the current factor: b ≤ last - d, never a d-ascent
        if last > d {
            for b in 1..=(last - d).min(asc + 1) {
                prefix.push(b);
                walk_blocks(d, n, prefix, max, asc, f);
                prefix.pop();
            }
        }
    }
    // open the next factor with leader max + 1, always a d-ascent
    if max <= asc {
        prefix.push(max + 1);
        walk_blocks(d, n, prefix, max + 1, asc + 1, f);
        prefix.pop();
    }
}

/// Calls `f` on every self-modified d-ascent sequence of length `n`, built
/// factor by factor, in lexicographic order.
pub fn for_each_self_modified_blocks<F: FnMut(&[Letter])>(d: u64, n: usize, mut f: F) {
    let mut prefix = Vec::with_capacity(n);
    walk_blocks(d, n, &mut prefix, 0, 0, &mut f);
}

pub fn gen_self_modified(d: u64, n: usize, method: SelfModMethod) -> Vec<Word> {
    match method {
        SelfModMethod::Filter => {
            let mut buf = Vec::with_capacity(n);
            let mut out = Vec::new();
            for_each_d_ascent_sequence(d, n, |w| {
                hat_unchecked(w, d, &mut buf);
                if buf == w {
                    out.push(Word::from(w));
                }
            });
            out
        }
        SelfModMethod::Blocks => {
            let mut out = Vec::new();
            for_each_self_modified_blocks(d, n, |w| out.push(Word::from(w)));
            out
        }
    }
}

/// `M̂_{d,n}`: the hat images of `A_{d,n}`, sorted.
pub fn gen_modified(d: u64, n: usize) -> Vec<Word> {
    let mut out = par_filter_map_d_ascent(d, n, |w| {
        let mut buf = Vec::with_capacity(w.len());
        hat_unchecked(w, d, &mut buf);
        Some(Word::from_vec_unchecked(buf))
    });
    let before = out.len();
    out.sort_unstable();
    out.dedup();
    assert_eq!(before, out.len(), "hat_{d} is not injective on A_{{{d},{n}}}");
    out
}

fn walk_rgf<F: FnMut(&[Letter])>(n: usize, prefix: &mut Vec<Letter>, max: Letter, f: &mut F) {
    if prefix.len() == n {
        f(prefix);
        return;
    }
    for a in 1..=max + 1 {
        prefix.push(a);
        walk_rgf(n, prefix, max.max(a), f);
        prefix.pop();
    }
}

/// Calls `f` on every restricted growth function of length `n`.
pub fn for_each_rgf<F: FnMut(&[Letter])>(n: usize, mut f: F) {
    let mut prefix = Vec::with_capacity(n);
    walk_rgf(n, &mut prefix, 0, &mut f);
}

pub fn gen_rgf(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for_each_rgf(n, |w| out.push(Word::from(w)));
    out
}

/// Calls `f` on every Cayley permutation of length `n`, in lexicographic order.
pub fn for_each_cayley<F: FnMut(&[Letter])>(n: usize, mut f: F) {
    fn go<F: FnMut(&[Letter])>(n: usize, prefix: &mut Vec<Letter>, seen: &mut Vec<u32>, f: &mut F) {
        let missing = |seen: &Vec<u32>| {
            let max = seen.iter().rposition(|&c| c > 0).unwrap_or(0);
            (1..=max).filter(|&v| seen[v] == 0).count()
        };
        if prefix.len() == n {
            if missing(seen) == 0 {
                f(prefix);
            }
            return;
        }
        for a in 1..=n as Letter {
            prefix.push(a);
            seen[a as usize] += 1;
            // every gap below the maximum must still be fillable
            if missing(seen) <= n - prefix.len() {
                go(n, prefix, seen, f);
            }
            seen[a as usize] -= 1;
            prefix.pop();
        }
    }
    let mut prefix = Vec::with_capacity(n);
    let mut seen = vec![0u32; n + 1];
    go(n, &mut prefix, &mut seen, &mut f);
}

pub fn gen_cayley(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for_each_cayley(n, |w| out.push(Word::from(w)));
    out
}

/// Calls `f` on every inversion sequence (`w[i] ≤ i`) of length `n`.
pub fn for_each_inversion_sequence<F: FnMut(&[Letter])>(n: usize, mut f: F) {
    fn go<F: FnMut(&[Letter])>(n: usize, prefix: &mut Vec<Letter>, f: &mut F) {
        if prefix.len() == n {
            f(prefix);
            return;
        }
        for a in 1..=prefix.len() as Letter + 1 {
            prefix.push(a);
            go(n, prefix, f);
            prefix.pop();
        }
    }
    let mut prefix = Vec::with_capacity(n);
    go(n, &mut prefix, &mut f);
}

/// RGFs whose blocks `B_i` are empty or a single letter.
pub fn is_in_r_set(w: &[Letter]) -> bool {
    match block_factoring(w, 0) {
        Ok(f) => f.blocks.iter().all(|b| b.tail.len() <= 1),
        Err(_) => false,
    }
}

/// `R_n` in lexicographic order.
pub fn gen_r_set(n: usize) -> Vec<Word> {
    fn go(n: usize, prefix: &mut Vec<Letter>, max: Letter, tail_used: bool, out: &mut Vec<Word>) {
        if prefix.len() == n {
            out.push(Word::from(prefix.as_slice()));
            return;
        }
        if !tail_used {
            for b in 1..=max {
                prefix.push(b);
                go(n, prefix, max, true, out);
                prefix.pop();
            }
        }
        prefix.push(max + 1);
        go(n, prefix, max + 1, false, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), 0, true, &mut out);
    out
}

/// An integer composition: a sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The integer being composed.
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `d`.
    pub fn count_parts(&self, d: u64) -> usize {
        self.parts.iter().filter(|&&p| p == d).count()
    }

    /// Every composition of `n` whose parts satisfy `allowed`, in lexicographic order.
    pub fn all_with_parts(n: u64, allowed: impl Fn(u64) -> bool) -> Vec<Composition> {
        fn go(rem: u64, allowed: &dyn Fn(u64) -> bool, cur: &mut Vec<u64>, out: &mut Vec<Composition>) {
            if rem == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rem {
                if allowed(p) {
                    cur.push(p);
                    go(rem - p, allowed, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(n, &allowed, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Image of a `{1, d}`-composition under [`composition_bijection`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionImage {
    /// Last part was 1 and has been removed: a `{1, d}`-composition of `n - 1`.
    Dropped(Composition),
    /// Last part was `d`: each run `1…1 d` summed into one part `≥ d`.
    Merged(Composition),
}

/// Splits the `{1, d}`-compositions of `n ≥ 1` between `{1, d}`-compositions
/// of `n - 1` and compositions of `n` into parts `≥ d`.
pub fn composition_bijection(mu: &Composition, d: u64) -> Result<CompositionImage> {
    if d < 2 {
        return Err(Error::InvalidComposition(format!("d = {d} must be at least 2")));
    }
    if let Some(p) = mu.parts.iter().find(|&&p| p != 1 && p != d) {
        return Err(Error::InvalidComposition(format!("{mu} has part {p} outside {{1,{d}}}")));
    }
    match mu.parts.last() {
        None => Err(Error::InvalidComposition("the empty composition has no last part".into())),
        Some(1) => Ok(CompositionImage::Dropped(Composition { parts: mu.parts[..mu.len() - 1].to_vec() })),
        Some(_) => {
            let mut merged = Vec::new();
            let mut run = 0;
            for &p in &mu.parts {
                run += p;
                if p == d {
                    merged.push(run);
                    run = 0;
                }
            }
            Ok(CompositionImage::Merged(Composition { parts: merged }))
        }
    }
}

pub fn composition_bijection_inverse(image: &CompositionImage, d: u64) -> Result<Composition> {
    if d < 2 {
        return Err(Error::InvalidComposition(format!("d = {d} must be at least 2")));
    }
    match image {
        CompositionImage::Dropped(c) => {
            if let Some(p) = c.parts.iter().find(|&&p| p != 1 && p != d) {
                return Err(Error::InvalidComposition(format!("{c} has part {p} outside {{1,{d}}}")));
            }
            let mut parts = c.parts.clone();
            parts.push(1);
            Ok(Composition { parts })
        }
        CompositionImage::Merged(c) => {
            if c.is_empty() {
                return Err(Error::InvalidComposition("merged image must be nonempty".into()));
            }
            let mut parts = Vec::new();
            for &p in &c.parts {
                if p < d {
                    return Err(Error::InvalidComposition(format!("{c} has part {p} below {d}")));
                }
                parts.extend(std::iter::repeat_n(1, (p - d) as usize));
                parts.push(d);
            }
            Ok(Composition { parts })
        }
    }
}

/// `1 2 … d (d+1)B_{d+1} … kB_k ↦ 1B_{d+1} 2B_{d+2} … (k-d)B_k` from
/// `Self_{d,n+d}` onto `R_n`, for `d ≥ n`.
pub fn limit_bijection(w: &[Letter], d: u64, n: usize) -> Result<Word> {
    if (n as u64) > d {
        return Err(Error::Precondition(format!("limit bijection needs d ≥ n, got d = {d}, n = {n}")));
    }
    let du = d as usize;
    if w.len() != n + du {
        return Err(Error::Precondition(format!("{} does not have length {}", format_letters(w), n + du)));
    }
    if !is_d_ascent_sequence(w, d) || !is_self_modified(w, d)? {
        return Err(Error::Precondition(format!("{} is not a self-modified {d}-ascent sequence", format_letters(w))));
    }
    // the first d letters are forced to be 1..d
    let mut out = Vec::with_capacity(n);
    let mut max = d;
    for &a in &w[du..] {
        if a > max {
            max = a;
            out.push(a - d);
        } else {
            out.push(a);
        }
    }
    Ok(Word::from_vec_unchecked(out))
}

pub fn limit_bijection_inverse(beta: &[Letter], d: u64) -> Result<Word> {
    if (beta.len() as u64) > d {
        return Err(Error::Precondition(format!("limit bijection needs d ≥ n, got d = {d}, n = {}", beta.len())));
    }
    if !is_in_r_set(beta) {
        return Err(Error::Precondition(format!("{} is not in R_{}", format_letters(beta), beta.len())));
    }
    let mut out: Vec<Letter> = (1..=d).collect();
    let mut max = 0;
    for &b in beta {
        if b > max {
            max = b;
            out.push(b + d);
        } else {
            out.push(b);
        }
    }
    Ok(Word::from_vec_unchecked(out))
}

/// `Σ q^{max w}` over a family of words, as a coefficient vector.
pub fn max_distribution<'a, I: IntoIterator<Item = &'a [Letter]>>(words: I) -> Vec<i64> {
    let mut dist = Vec::new();
    for w in words {
        let m = crate::word::max_letter(w) as usize;
        if dist.len() <= m {
            dist.resize(m + 1, 0);
        }
        dist[m] += 1;
    }
    dist
}
