//! Named exhaustive checks tying enumeration, the series module and the
//! permutation side together.
//!
//! Each check walks its `(d, n)` cells in increasing order; independent
//! cells run in parallel and are merged back in cell order, so the
//! reported counterexample is always the first one in that order.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::burge::{gamma, gamma_unchecked, phi, Biword, BurgeWord};
use crate::enumerate::{
    composition_bijection, composition_bijection_inverse, for_each_cayley, for_each_inversion_sequence, for_each_rgf,
    for_each_self_modified_blocks, gen_d_ascent_sequences, gen_modified, gen_r_set, gen_self_modified, limit_bijection,
    limit_bijection_inverse, max_distribution, par_count_d_ascent, par_filter_map_d_ascent, Composition,
    CompositionImage, SelfModMethod,
};
use crate::error::{Error, Result};
use crate::genfun::{des_poly, fib_poly, k_poly, limit_series, self_gf, shifted_self, stirling_series, IntPolynomial};
use crate::hat::{block_factoring, hat, hat_unchecked, unhat};
use crate::perm::{avoids_classical, contains_barred_31524, contains_f, contains_f_d, contains_s_d, Permutation};
use crate::tables;
use crate::word::{
    avoids_word_pattern, d_ascent_set, format_letters, is_cayley, is_d_ascent_sequence, is_rgf, is_weakly_increasing,
    lrmax_set, nub, weak_descent_count, weak_descent_set, Letter, Word,
};

/// Registered check names.
pub const CHECKS: &[&str] = &[
    "prop33",
    "thm34",
    "thm35",
    "chain",
    "rgf_char",
    "intersection",
    "table1",
    "table2",
    "self2_display",
    "kf_lemma",
    "limit_thm",
    "smf_chars",
    "fd_equals_s_fd",
    "transport_213",
    "des_distrib",
    "stirling",
    "hat_roundtrip",
    "burge_involution",
    "gamma_inverse",
    "fishburn",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_d: u64,
    pub max_n: usize,
}

impl Bounds {
    pub fn new(max_d: u64, max_n: usize) -> Self {
        Bounds { max_d, max_n }
    }
}

/// Bounds a check runs at when none are given.
pub fn default_bounds(name: &str) -> Result<Bounds> {
    let (d, n) = match name {
        "prop33" | "thm34" | "thm35" => (4, 8),
        "chain" => (2, 8),
        "rgf_char" | "intersection" => (0, 8),
        "table1" => (6, 12),
        "table2" => (10, 12),
        "self2_display" => (2, 9),
        "kf_lemma" => (5, 15),
        "limit_thm" => (8, 8),
        "smf_chars" => (3, 7),
        "fd_equals_s_fd" => (2, 7),
        "transport_213" | "des_distrib" => (3, 7),
        "stirling" => (0, 8),
        "hat_roundtrip" => (4, 9),
        "burge_involution" => (0, 8),
        "gamma_inverse" => (0, 7),
        "fishburn" => (0, 6),
        _ => return Err(Error::UnknownCheck(name.to_string())),
    };
    Ok(Bounds::new(d, n))
}

/// Outcome of [`verify_theorem`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub bounds: Bounds,
    pub passed: bool,
    /// `(d, n)` cells (or table entries) examined.
    pub cells: u64,
    /// Individual objects examined.
    pub instances: u64,
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_text(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{:<16} {}  max_d={} max_n={}  cells={} instances={}  {} ms",
            self.name, status, self.bounds.max_d, self.bounds.max_n, self.cells, self.instances, self.elapsed_ms
        );
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n  counterexample: {c}"));
        }
        s
    }
}

#[derive(Debug, Default)]
struct Tally {
    cells: u64,
    instances: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.cells += other.cells;
        self.instances += other.instances;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    fn fail(&mut self, msg: String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

/// Runs `cell` on every `(d, n)` pair in parallel and merges in order.
fn over_cells<F>(cells: Vec<(u64, usize)>, cell: F) -> Result<Tally>
where
    F: Fn(u64, usize) -> Result<Tally> + Sync,
{
    let results: Vec<Result<Tally>> = cells.into_par_iter().map(|(d, n)| cell(d, n)).collect();
    let mut total = Tally::default();
    for r in results {
        let mut t = r?;
        t.cells += 1;
        total.absorb(t);
    }
    Ok(total)
}

fn grid(max_d: u64, max_n: usize) -> Vec<(u64, usize)> {
    (0..=max_d).flat_map(|d| (0..=max_n).map(move |n| (d, n))).collect()
}

fn lengths(max_n: usize) -> Vec<(u64, usize)> {
    (0..=max_n).map(|n| (0, n)).collect()
}

fn self_set(d: u64, n: usize) -> BTreeSet<Word> {
    gen_self_modified(d, n, SelfModMethod::Filter).into_iter().collect()
}

/// Runs the named check within `bounds`.
pub fn verify_theorem(name: &str, bounds: Bounds) -> Result<Report> {
    let start = Instant::now();
    let tally = match name {
        "prop33" => prop33(bounds),
        "thm34" => thm34(bounds),
        "thm35" => thm35(bounds),
        "chain" => chain(bounds),
        "rgf_char" => rgf_char(bounds),
        "intersection" => intersection(bounds),
        "table1" => table1(bounds),
        "table2" => table2(bounds),
        "self2_display" => self2_display(bounds),
        "kf_lemma" => kf_lemma(bounds),
        "limit_thm" => limit_thm(bounds),
        "smf_chars" => smf_chars(bounds),
        "fd_equals_s_fd" => fd_equals_s_fd(bounds),
        "transport_213" => transport_213(bounds),
        "des_distrib" => des_distrib(bounds),
        "stirling" => stirling(bounds),
        "hat_roundtrip" => hat_roundtrip(bounds),
        "burge_involution" => burge_involution(bounds),
        "gamma_inverse" => gamma_inverse(bounds),
        "fishburn" => fishburn(bounds),
        _ => return Err(Error::UnknownCheck(name.to_string())),
    }?;
    Ok(Report {
        name: name.to_string(),
        bounds,
        passed: tally.counterexample.is_none(),
        cells: tally.cells,
        instances: tally.instances,
        counterexample: tally.counterexample,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// The five characterizations of `hat_d(w) = w` agree, the block factoring
/// detects the same set, and self-modified words have `Asc_d = Asc_0`.
fn prop33(b: Bounds) -> Result<Tally> {
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let failures = par_filter_map_d_ascent(d, n, |w| {
            let mut buf = Vec::with_capacity(w.len());
            hat_unchecked(w, d, &mut buf);
            let fixed = buf == w;
            let asc = d_ascent_set(w, d);
            let (lr, nb) = (lrmax_set(w), nub(w));
            let flags = [fixed, asc.is_subset(&lr), asc.is_subset(&nb), asc == lr, asc == nb];
            if flags.iter().any(|&f| f != fixed) {
                return Some(format!("d={d} w={} flags={flags:?}", format_letters(w)));
            }
            if fixed && asc != d_ascent_set(w, 0) {
                return Some(format!("d={d} w={} self-modified but Asc_d != Asc_0", format_letters(w)));
            }
            let paced = is_rgf(w) && block_factoring(w, d).map(|f| f.is_paced()).unwrap_or(false);
            if paced != fixed {
                return Some(format!("d={d} w={} block factoring says {paced}", format_letters(w)));
            }
            None
        });
        let mut t = Tally { instances: par_count_d_ascent(d, n, |_| true), ..Tally::default() };
        if let Some(f) = failures.into_iter().next() {
            t.fail(f);
        }
        Ok(t)
    })
}

/// `Self_d = A_d ∩ M̂_d = M̂_d ∩ RGF`.
fn thm34(b: Bounds) -> Result<Tally> {
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let selfs = self_set(d, n);
        let modified = gen_modified(d, n);
        let a_cap_m: BTreeSet<Word> = modified.iter().filter(|w| is_d_ascent_sequence(w, d)).cloned().collect();
        let m_cap_rgf: BTreeSet<Word> = modified.iter().filter(|w| is_rgf(w)).cloned().collect();
        let mut t = Tally { instances: modified.len() as u64, ..Tally::default() };
        t.check(selfs == a_cap_m, || set_diff("Self_d vs A_d ∩ M̂_d", d, n, &selfs, &a_cap_m));
        t.check(selfs == m_cap_rgf, || set_diff("Self_d vs M̂_d ∩ RGF", d, n, &selfs, &m_cap_rgf));
        Ok(t)
    })
}

fn set_diff(what: &str, d: u64, n: usize, a: &BTreeSet<Word>, b: &BTreeSet<Word>) -> String {
    let first = a.symmetric_difference(b).next().map(|w| w.to_string()).unwrap_or_default();
    format!("{what} at d={d} n={n}: first difference {first}")
}

/// `Self_{d+1} ⊆ Self_d` and `Self_d = Self_0 ∩ M̂_d`.
fn thm35(b: Bounds) -> Result<Tally> {
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let selfs = self_set(d, n);
        let self0 = self_set(0, n);
        let modified: BTreeSet<Word> = gen_modified(d, n).into_iter().collect();
        let mut t = Tally { instances: selfs.len() as u64, ..Tally::default() };
        let inter: BTreeSet<Word> = self0.intersection(&modified).cloned().collect();
        t.check(selfs == inter, || set_diff("Self_d vs Self_0 ∩ M̂_d", d, n, &selfs, &inter));
        if d < b.max_d {
            let next = self_set(d + 1, n);
            t.check(next.is_subset(&selfs), || {
                let w = next.difference(&selfs).next().unwrap();
                format!("d={d} n={n}: {w} ∈ Self_{} but not Self_{d}", d + 1)
            });
        }
        Ok(t)
    })
}

/// `Self_D ⊆ … ⊆ Self_0 ⊆ A_0 ⊆ … ⊆ A_D`.
fn chain(b: Bounds) -> Result<Tally> {
    over_cells(lengths(b.max_n), |_, n| {
        let mut t = Tally::default();
        let mut sets: Vec<(String, BTreeSet<Word>)> = Vec::new();
        for d in (0..=b.max_d).rev() {
            sets.push((format!("Self_{d}"), self_set(d, n)));
        }
        for d in 0..=b.max_d {
            sets.push((format!("A_{d}"), gen_d_ascent_sequences(d, n).into_iter().collect()));
        }
        for pair in sets.windows(2) {
            t.instances += pair[0].1.len() as u64;
            t.check(pair[0].1.is_subset(&pair[1].1), || {
                let w = pair[0].1.difference(&pair[1].1).next().unwrap();
                format!("n={n}: {w} ∈ {} but not {}", pair[0].0, pair[1].0)
            });
        }
        Ok(t)
    })
}

/// RGFs are exactly the Cayley permutations with `nub = lrMax`; along the
/// way, the elementary inclusions between position sets.
fn rgf_char(b: Bounds) -> Result<Tally> {
    over_cells(lengths(b.max_n), |_, n| {
        let mut t = Tally::default();
        for_each_cayley(n, |w| {
            t.instances += 1;
            let (nb, lr) = (nub(w), lrmax_set(w));
            t.check(is_rgf(w) == (nb == lr), || format!("n={n} w={}", format_letters(w)));
            t.check(lr.is_subset(&nb) && lr.is_subset(&d_ascent_set(w, 0)), || {
                format!("n={n} w={}: lrMax not inside nub and Asc_0", format_letters(w))
            });
        });
        for_each_inversion_sequence(n, |w| {
            t.instances += 1;
            t.check(is_d_ascent_sequence(w, n as u64), || {
                format!("inversion sequence {} not in A_n", format_letters(w))
            });
            for d in 0..=n as u64 {
                t.check(lrmax_set(w).is_subset(&d_ascent_set(w, d)), || {
                    format!("d={d} w={}: lrMax not inside Asc_d", format_letters(w))
                });
            }
        });
        Ok(t)
    })
}

/// Only `12…n` is self-modified for every `d` (checked up to `d = n`, where the hat map stabilizes).
fn intersection(b: Bounds) -> Result<Tally> {
    over_cells(lengths(b.max_n), |_, n| {
        let mut acc = self_set(0, n);
        for d in 1..=n as u64 {
            let s = self_set(d, n);
            acc = acc.intersection(&s).cloned().collect();
        }
        let mut t = Tally { instances: acc.len() as u64, ..Tally::default() };
        let expect: BTreeSet<Word> = [Word::identity(n)].into_iter().collect();
        t.check(acc == expect, || set_diff("∩ Self_d vs {12…n}", n as u64, n, &acc, &expect));
        Ok(t)
    })
}

fn count_blocks(d: u64, n: usize) -> i64 {
    let mut c = 0;
    for_each_self_modified_blocks(d, n, |_| c += 1);
    c
}

/// Self-modified counts: series at `q = 1`, published table and the blocks generator agree.
fn table1(b: Bounds) -> Result<Tally> {
    let max_d = b.max_d.min(tables::SELF_MODIFIED_COUNTS.len() as u64 - 1);
    let max_n = b.max_n.min(12);
    let cells = grid(max_d, max_n);
    let series: Vec<Vec<i64>> = (0..=max_d).map(|d| self_gf(d, max_n)?.at_q1()).collect::<Result<_>>()?;
    over_cells(cells, |d, n| {
        let from_gf = series[d as usize][n];
        let published = tables::SELF_MODIFIED_COUNTS[d as usize][n];
        let blocks = count_blocks(d, n);
        let mut t = Tally { instances: blocks as u64, ..Tally::default() };
        t.check(from_gf == published && blocks == published, || {
            format!("d={d} n={n}: series {from_gf}, blocks {blocks}, published {published}")
        });
        Ok(t)
    })
}

/// Shifted counts against the published table and, independently, `|Self_{d,n+d}|`.
fn table2(b: Bounds) -> Result<Tally> {
    let max_d = b.max_d.min(tables::SHIFTED_COUNTS.len() as u64 - 1);
    let max_n = b.max_n.min(12);
    let series: Vec<Vec<i64>> = (0..=max_d).map(|d| shifted_self(d, max_n)?.at_q1()).collect::<Result<_>>()?;
    over_cells(grid(max_d, max_n), |d, n| {
        let from_gf = series[d as usize][n];
        let published = tables::SHIFTED_COUNTS[d as usize][n];
        // [d]_x only touches x^0..x^{d-1}, so the x^n coefficient is |Self_{d,n+d}|
        let blocks = count_blocks(d, n + d as usize);
        let mut t = Tally { instances: blocks as u64, ..Tally::default() };
        t.check(from_gf == published && blocks == published, || {
            format!("d={d} n={n}: series {from_gf}, blocks {blocks}, published {published}")
        });
        Ok(t)
    })
}

/// `Self_2(q, x)` term by term against the published display and the max-distribution of the blocks generator.
fn self2_display(b: Bounds) -> Result<Tally> {
    let max_n = b.max_n.min(tables::SELF2_ROWS.len() - 1);
    let series = self_gf(2, max_n)?;
    over_cells(lengths(max_n), |_, n| {
        let published = IntPolynomial::new(tables::SELF2_ROWS[n].to_vec());
        let words = gen_self_modified(2, n, SelfModMethod::Blocks);
        let brute = IntPolynomial::new(max_distribution(words.iter().map(|w| w.as_slice())));
        let mut t = Tally { instances: words.len() as u64, ..Tally::default() };
        let got = series.x_coeff(n);
        t.check(got == &published && brute == published, || {
            format!(
                "x^{n}: series {}, enumeration {}, published {}",
                got.display_in("q"),
                brute.display_in("q"),
                published.display_in("q")
            )
        });
        Ok(t)
    })
}

/// Number of parts of each composition of `n` into parts `≥ d`, by brute force.
fn k_by_compositions(d: u64, n: u64) -> IntPolynomial {
    let mut v = vec![0i64; n as usize + 1];
    for c in Composition::all_with_parts(n, |p| p >= d) {
        v[c.len()] += 1;
    }
    IntPolynomial::new(v)
}

fn fib_by_compositions(d: u64, n: u64) -> IntPolynomial {
    let mut v = vec![0i64; n as usize + 1];
    for c in Composition::all_with_parts(n, |p| p == 1 || p == d) {
        v[c.count_parts(d)] += 1;
    }
    IntPolynomial::new(v)
}

/// `F_{d,n} = F_{d,n-1} + K_{d,n}`, `F_{d,n} = Σ_m K_{d,m}`, the composition
/// readings of both polynomials, and the explicit bijection behind the first identity.
fn kf_lemma(b: Bounds) -> Result<Tally> {
    let trunc = b.max_n;
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let mut t = Tally::default();
        let tr = Some(trunc);
        let f = fib_poly(d, n as i64, tr)?;
        let k = k_poly(d, n as u64, tr)?;
        if n >= 1 {
            let prev = fib_poly(d, n as i64 - 1, tr)?;
            t.check(f.checked_sub(&prev)? == k, || format!("d={d} n={n}: F - F_prev != K"));
        }
        let mut sum = IntPolynomial::zero();
        for m in 0..=n as u64 {
            sum = sum.checked_add(&k_poly(d, m, tr)?)?;
        }
        t.check(sum == f, || format!("d={d} n={n}: Σ K != F"));
        if d >= 1 && n <= 20 {
            t.check(k == k_by_compositions(d, n as u64), || format!("d={d} n={n}: K disagrees with composition count"));
        }
        if d >= 2 && n <= 20 {
            t.check(f == fib_by_compositions(d, n as u64), || {
                format!("d={d} n={n}: F disagrees with {{1,d}}-compositions")
            });
        }
        if d >= 2 && (1..=20).contains(&n) {
            let sources = Composition::all_with_parts(n as u64, |p| p == 1 || p == d);
            let mut images = BTreeSet::new();
            for mu in &sources {
                t.instances += 1;
                let img = composition_bijection(mu, d)?;
                if let CompositionImage::Merged(nu) = &img {
                    t.check(nu.len() == mu.count_parts(d), || format!("{mu} ↦ {nu}: part count mismatch"));
                }
                t.check(&composition_bijection_inverse(&img, d)? == mu, || format!("d={d}: inverse fails on {mu}"));
                images.insert(img);
            }
            let mut targets: BTreeSet<CompositionImage> =
                Composition::all_with_parts(n as u64 - 1, |p| p == 1 || p == d)
                    .into_iter()
                    .map(CompositionImage::Dropped)
                    .collect();
            targets.extend(Composition::all_with_parts(n as u64, |p| p >= d).into_iter().map(CompositionImage::Merged));
            t.check(images == targets && images.len() == sources.len(), || {
                format!("d={d} n={n}: composition map is not a bijection onto the disjoint union")
            });
        }
        Ok(t)
    })
}

/// `[x^{n+d}] Self_d(q,x) = q^d r_n(q)` for `n ≤ d`, the combinatorial model of
/// `r_n(q)`, and the explicit bijection `Self_{d,n+d} → R_n`.
fn limit_thm(b: Bounds) -> Result<Tally> {
    let r = limit_series(b.max_n)?;
    let cells: Vec<(u64, usize)> = grid(b.max_d, b.max_n).into_iter().filter(|&(d, n)| n as u64 <= d).collect();
    let series: Vec<_> = (0..=b.max_d).map(|d| self_gf(d, b.max_n + d as usize)).collect::<Result<_>>()?;
    over_cells(cells, |d, n| {
        let mut t = Tally::default();
        let lhs = series[d as usize].x_coeff(n + d as usize);
        let rhs = r.x_coeff(n).shift(d as usize);
        t.check(lhs == &rhs, || format!("d={d} n={n}: {} vs {}", lhs.display_in("q"), rhs.display_in("q")));

        let rset = gen_r_set(n);
        let dist = IntPolynomial::new(max_distribution(rset.iter().map(|w| w.as_slice())));
        t.check(&dist == r.x_coeff(n), || {
            format!("n={n}: R_n distribution {} vs r_n {}", dist.display_in("q"), r.x_coeff(n).display_in("q"))
        });

        let selfs = gen_self_modified(d, n + d as usize, SelfModMethod::Blocks);
        let mut images = Vec::with_capacity(selfs.len());
        for w in &selfs {
            t.instances += 1;
            let beta = limit_bijection(w, d, n)?;
            t.check(w.max_letter() == beta.max_letter() + d, || format!("d={d}: {w} ↦ {beta} breaks the max shift"));
            t.check(&limit_bijection_inverse(&beta, d)? == w, || format!("d={d}: inverse fails on {w}"));
            images.push(beta);
        }
        images.sort();
        t.check(images == rset, || format!("d={d} n={n}: image is not R_n"));
        Ok(t)
    })
}

fn smf(d: u64, n: usize) -> BTreeSet<Permutation> {
    gen_self_modified(d, n, SelfModMethod::Filter).iter().map(|w| gamma_unchecked(w)).collect()
}

/// `SMF_0 = S(3̄152̄4)` and `SMF_d = SMF_0(s_d)`.
fn smf_chars(b: Bounds) -> Result<Tally> {
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let image = smf(d, n);
        let perms = Permutation::all(n);
        let barred: BTreeSet<Permutation> = perms.iter().filter(|p| !contains_barred_31524(p)).cloned().collect();
        let target: BTreeSet<Permutation> = barred.iter().filter(|p| !contains_s_d(p, d)).cloned().collect();
        let mut t = Tally { instances: perms.len() as u64, ..Tally::default() };
        t.check(image == target, || perm_diff("SMF_d vs S(barred, s_d)", d, n, &image, &target));
        if d == 0 {
            t.check(image == barred, || perm_diff("SMF_0 vs S(barred)", d, n, &image, &barred));
        }
        if let Some(&published) = tables::SELF_MODIFIED_COUNTS.get(d as usize).and_then(|r| r.get(n)) {
            t.check(image.len() as i64 == published, || format!("d={d} n={n}: |SMF| = {} vs {published}", image.len()));
        }
        Ok(t)
    })
}

fn perm_diff(what: &str, d: u64, n: usize, a: &BTreeSet<Permutation>, b: &BTreeSet<Permutation>) -> String {
    let first = a.symmetric_difference(b).next().map(|p| p.to_string()).unwrap_or_default();
    format!("{what} at d={d} n={n}: first difference {first}")
}

/// `phi_d(A_{d,n})` is exactly the set of `f_d`-avoiders.
fn fd_equals_s_fd(b: Bounds) -> Result<Tally> {
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let seqs = gen_d_ascent_sequences(d, n);
        let image: BTreeSet<Permutation> = seqs.iter().map(|w| phi(w, d)).collect::<Result<_>>()?;
        let avoiders: BTreeSet<Permutation> = Permutation::all(n).into_iter().filter(|p| !contains_f_d(p, d)).collect();
        let mut t = Tally { instances: seqs.len() as u64, ..Tally::default() };
        t.check(image.len() == seqs.len(), || format!("d={d} n={n}: phi_d is not injective"));
        t.check(image == avoiders, || perm_diff("phi_d(A_d) vs S(f_d)", d, n, &image, &avoiders));
        Ok(t)
    })
}

fn avoids_112_213(w: &[Letter]) -> bool {
    avoids_word_pattern(w, &[1, 1, 2]).expect("Cayley pattern")
        && avoids_word_pattern(w, &[2, 1, 3]).expect("Cayley pattern")
}

fn pattern_213() -> Permutation {
    "213".parse().expect("valid permutation")
}

/// `gamma` maps `Self_{d,n}(112, 213)` onto `SMF_{d,n}(213)` sending weak
/// descents to inverse descents; the avoiders are exactly the words whose
/// blocks other than the last are empty.
fn transport_213(b: Bounds) -> Result<Tally> {
    let tau = pattern_213();
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let selfs = gen_self_modified(d, n, SelfModMethod::Filter);
        let mut t = Tally { instances: selfs.len() as u64, ..Tally::default() };
        let mut restricted = Vec::new();
        for w in &selfs {
            let avoids = avoids_112_213(w);
            let f = block_factoring(w, d)?;
            let k = f.blocks.len();
            let only_last = f.blocks.iter().take(k.saturating_sub(1)).all(|b| b.tail.is_empty());
            t.check(avoids == only_last, || format!("d={d} w={w}: avoidance {avoids} but block shape {only_last}"));
            if avoids {
                restricted.push(w.clone());
            }
        }
        let mut image = BTreeSet::new();
        for w in &restricted {
            let p = gamma(w)?;
            t.check(weak_descent_count(w) == p.ides(), || {
                format!("d={d} w={w}: wdes {} vs ides({p}) {}", weak_descent_count(w), p.ides())
            });
            image.insert(p);
        }
        let target: BTreeSet<Permutation> = smf(d, n).into_iter().filter(|p| avoids_classical(p, &tau)).collect();
        t.check(image.len() == restricted.len(), || format!("d={d} n={n}: gamma not injective on Self(112,213)"));
        t.check(image == target, || perm_diff("gamma(Self(112,213)) vs SMF(213)", d, n, &image, &target));
        Ok(t)
    })
}

/// `Σ q^{wdes}` over `Self_{d,n}(112,213)` and `Σ q^{ides}` over
/// `SMF_{d,n}(213)` both equal `F_{d+1,n-1}(q)`.
fn des_distrib(b: Bounds) -> Result<Tally> {
    let tau = pattern_213();
    let cells = grid(b.max_d, b.max_n).into_iter().filter(|&(_, n)| n >= 1).collect();
    over_cells(cells, |d, n| {
        let expect = des_poly(d, n as u64)?;
        let selfs = gen_self_modified(d, n, SelfModMethod::Filter);
        let mut wdes = vec![0i64; n + 1];
        for w in selfs.iter().filter(|w| avoids_112_213(w)) {
            wdes[weak_descent_count(w)] += 1;
        }
        let mut ides = vec![0i64; n + 1];
        let perms: Vec<Permutation> = smf(d, n).into_iter().filter(|p| avoids_classical(p, &tau)).collect();
        for p in &perms {
            ides[p.ides()] += 1;
        }
        let (wdes, ides) = (IntPolynomial::new(wdes), IntPolynomial::new(ides));
        let mut t = Tally { instances: perms.len() as u64, ..Tally::default() };
        t.check(wdes == expect && ides == expect, || {
            format!(
                "d={d} n={n}: wdes {}, ides {}, F_(d+1,n-1) {}",
                wdes.display_in("q"),
                ides.display_in("q"),
                expect.display_in("q")
            )
        });
        Ok(t)
    })
}

/// RGFs by maximum against `Σ_k (qx)^k / ∏(1 - ix)`.
fn stirling(b: Bounds) -> Result<Tally> {
    let series = stirling_series(b.max_n)?;
    over_cells(lengths(b.max_n), |_, n| {
        let mut dist = vec![0i64; n + 1];
        let mut t = Tally::default();
        for_each_rgf(n, |w| {
            t.instances += 1;
            dist[crate::word::max_letter(w) as usize] += 1;
        });
        let dist = IntPolynomial::new(dist);
        t.check(&dist == series.x_coeff(n), || {
            format!("x^{n}: RGF count {} vs series {}", dist.display_in("q"), series.x_coeff(n).display_in("q"))
        });
        Ok(t)
    })
}

/// `unhat ∘ hat = id`, hat is injective, and its image is a Cayley
/// permutation with `nub(hat w) = Asc_d w` and `Asc_d(hat w) ⊆ nub(hat w)`.
fn hat_roundtrip(b: Bounds) -> Result<Tally> {
    over_cells(grid(b.max_d, b.max_n), |d, n| {
        let results = par_filter_map_d_ascent(d, n, |w| {
            let r = match hat(w, d) {
                Ok(r) => r,
                Err(e) => return Some(Err(format!("d={d} w={}: {e}", format_letters(w)))),
            };
            let m = &r.modified;
            if !is_cayley(m) || nub(m) != r.pivots || !d_ascent_set(m, d).is_subset(&nub(m)) {
                return Some(Err(format!(
                    "d={d} w={}: hat image {m} violates the nub/Cayley properties",
                    format_letters(w)
                )));
            }
            match unhat(m, d) {
                Ok(back) if back.as_slice() == w => Some(Ok(r.modified)),
                _ => Some(Err(format!("d={d} w={}: unhat({m}) does not return w", format_letters(w)))),
            }
        });
        let mut t = Tally { instances: results.len() as u64, ..Tally::default() };
        let mut images = Vec::with_capacity(results.len());
        for r in results {
            match r {
                Ok(m) => images.push(m),
                Err(e) => t.fail(e),
            }
        }
        let total = images.len();
        images.sort_unstable();
        images.dedup();
        t.check(images.len() == total, || format!("d={d} n={n}: hat is not injective"));
        Ok(t)
    })
}

fn weakly_increasing_cayley(n: usize) -> Vec<Vec<Letter>> {
    // a weakly increasing Cayley permutation is fixed by its set of weak descents
    (0u32..(1u32 << n.saturating_sub(1)))
        .map(|mask| {
            let mut v = Vec::with_capacity(n);
            let mut cur = 1;
            for i in 0..n {
                if i > 0 && mask & (1 << (i - 1)) == 0 {
                    cur += 1;
                }
                v.push(cur);
            }
            v
        })
        .collect()
}

/// `T ∘ T = id` on Burge words; with identity top row for every Cayley
/// bottom of length `≤ max_n`, and on all Burge words of length `≤ min(max_n, 5)`.
fn burge_involution(b: Bounds) -> Result<Tally> {
    over_cells(lengths(b.max_n), |_, n| {
        let mut t = Tally::default();
        let top = Word::identity(n);
        let mut fail = None;
        for_each_cayley(n, |c| {
            t.instances += 1;
            let bw =
                BurgeWord::new(Biword::new(top.clone(), Word::from(c)).expect("equal lengths")).expect("identity top");
            let tt = bw.transpose();
            if fail.is_none() && (!crate::burge::is_burge_word(tt.biword()) || tt.transpose() != bw) {
                fail = Some(format!("(id / {}) is not fixed by T∘T", format_letters(c)));
            }
        });
        if let Some(f) = fail {
            t.fail(f);
        }
        if n <= 5 {
            let bottoms = crate::enumerate::gen_cayley(n);
            for u in weakly_increasing_cayley(n) {
                debug_assert!(is_weakly_increasing(&u));
                let wd = weak_descent_set(&u);
                for a in &bottoms {
                    if !wd.is_subset(&weak_descent_set(a)) {
                        continue;
                    }
                    t.instances += 1;
                    let bw = BurgeWord::new(Biword::new(Word::from(u.as_slice()), a.clone())?)?;
                    t.check(bw.transpose().transpose() == bw, || {
                        format!("({} / {a}) is not fixed by T∘T", format_letters(&u))
                    });
                }
            }
        }
        Ok(t)
    })
}

/// `gamma(π) = π^{-1}` for permutations.
fn gamma_inverse(b: Bounds) -> Result<Tally> {
    over_cells(lengths(b.max_n), |_, n| {
        let mut t = Tally::default();
        for p in Permutation::all(n) {
            t.instances += 1;
            let g = gamma(&p)?;
            t.check(g == p.inverse(), || format!("gamma({p}) = {g} but the inverse is {}", p.inverse()));
        }
        Ok(t)
    })
}

/// `|S_n(f)|` and `|A_{0,n}|` both reproduce the Fishburn numbers.
fn fishburn(b: Bounds) -> Result<Tally> {
    over_cells(lengths(b.max_n), |_, n| {
        let perms = Permutation::all(n);
        let avoiders = perms.iter().filter(|p| !contains_f(p)).count() as i64;
        let ascents = par_count_d_ascent(0, n, |_| true) as i64;
        let mut t = Tally { instances: perms.len() as u64 + ascents as u64, ..Tally::default() };
        let published = tables::FISHBURN_NUMBERS.get(n).copied();
        t.check(avoiders == ascents && published.is_none_or(|f| f == avoiders), || {
            format!("n={n}: |S_n(f)| = {avoiders}, |A_0,n| = {ascents}, published {published:?}")
        });
        Ok(t)
    })
}
