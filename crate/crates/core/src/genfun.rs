//! Exact integer polynomials, truncated bivariate series and the
//! generating functions built from generalized Fibonacci polynomials.
//!
//! All arithmetic is checked: an overflow surfaces as
//! [`Error::Overflow`], never as a wrapped value. Series that are not
//! polynomials (every `d = 0` object) carry an explicit truncation order.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Coef = i64;

/// Dense univariate polynomial; index is the exponent. Trailing zeros are trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Coef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monomial {
    pub exp: usize,
    pub coef: Coef,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Coef>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn monomial(exp: usize, coef: Coef) -> Self {
        let mut v = vec![0; exp + 1];
        v[exp] = coef;
        IntPolynomial::new(v)
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> Coef {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Drops every term of degree above `order`.
    pub fn truncated(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        IntPolynomial::new(self.coeffs)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(len);
        for i in 0..len {
            v.push(self.coeff(i).checked_add(other.coeff(i)).ok_or(Error::Overflow("polynomial addition"))?);
        }
        Ok(IntPolynomial::new(v))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(len);
        for i in 0..len {
            v.push(self.coeff(i).checked_sub(other.coeff(i)).ok_or(Error::Overflow("polynomial subtraction"))?);
        }
        Ok(IntPolynomial::new(v))
    }

    /// Product, keeping only degrees `≤ order` when an order is given.
    pub fn mul_trunc(&self, other: &Self, order: Option<usize>) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = order.map_or(full, |o| full.min(o + 1));
        let mut v = vec![0 as Coef; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 || i >= len {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(len - i) {
                let t = a.checked_mul(b).ok_or(Error::Overflow("polynomial multiplication"))?;
                v[i + j] = v[i + j].checked_add(t).ok_or(Error::Overflow("polynomial multiplication"))?;
            }
        }
        Ok(IntPolynomial::new(v))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.mul_trunc(other, None)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs: v }
    }

    /// Multiplies by `1/(1 - c·x)` modulo `x^{order+1}`.
    pub fn div_one_minus(&self, c: Coef, order: usize) -> Result<Self> {
        let mut v = vec![0 as Coef; order + 1];
        let mut prev: Coef = 0;
        for (i, slot) in v.iter_mut().enumerate() {
            let t = c.checked_mul(prev).ok_or(Error::Overflow("series division"))?;
            prev = self.coeff(i).checked_add(t).ok_or(Error::Overflow("series division"))?;
            *slot = prev;
        }
        Ok(IntPolynomial::new(v))
    }

    pub fn eval(&self, x: Coef) -> Result<Coef> {
        let mut acc: Coef = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x).and_then(|a| a.checked_add(c)).ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        Ok(acc)
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(exp, &coef)| Monomial { exp, coef }).collect()
    }

    /// Ascending powers, e.g. `1 + 3x + 2x^2`.
    pub fn display_in(&self, var: &str) -> String {
        let terms = self.monomials();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, m) in terms.iter().enumerate() {
            let mag = m.coef.unsigned_abs();
            if idx == 0 {
                if m.coef < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if m.coef < 0 { " - " } else { " + " });
            }
            let power = match m.exp {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if m.exp == 0 {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}{power}"));
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// Truncated series in `(q, x)`: row `n` holds the polynomial in `q` that
/// multiplies `x^n`, for `n ≤ truncation_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivarSeries {
    rows: Vec<IntPolynomial>,
}

impl BivarSeries {
    fn from_rows(rows: Vec<IntPolynomial>) -> Self {
        debug_assert!(!rows.is_empty());
        BivarSeries { rows }
    }

    pub fn truncation_order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `x^n` as a polynomial in `q`.
    pub fn x_coeff(&self, n: usize) -> &IntPolynomial {
        &self.rows[n]
    }

    pub fn coeff(&self, n: usize, k: usize) -> Coef {
        self.rows.get(n).map_or(0, |r| r.coeff(k))
    }

    pub fn rows(&self) -> &[IntPolynomial] {
        &self.rows
    }

    /// Coefficients of `x^0..=x^order` at `q = 1`.
    pub fn at_q1(&self) -> Result<Vec<Coef>> {
        self.rows.iter().map(|r| r.eval(1)).collect()
    }
}

fn require_trunc(d: u64, trunc: Option<usize>) -> Result<Option<usize>> {
    if d == 0 && trunc.is_none() {
        Err(Error::TruncationRequired)
    } else if d == 0 {
        Ok(trunc)
    } else {
        Ok(None)
    }
}

/// `F_{d,-1}, F_{d,0}, …, F_{d,n}` for `n ≥ -1`, with `order` applied when given.
fn fib_sequence(d: u64, n: i64, order: Option<usize>) -> Result<Vec<IntPolynomial>> {
    // seq[m + 1] = F_{d,m}
    let mut seq = vec![IntPolynomial::one()];
    for m in 0..=n {
        let next = if (m as i128) < d as i128 {
            IntPolynomial::one()
        } else if d == 0 {
            // F_{0,m} = F_{0,m-1} / (1 - x)
            let o = order.expect("d = 0 requires an order");
            seq[m as usize].div_one_minus(1, o)?
        } else {
            let prev = &seq[m as usize];
            let back = &seq[(m - d as i64 + 1) as usize];
            prev.checked_add(&back.shift(1))?
        };
        seq.push(next);
    }
    Ok(seq)
}

/// `F_{d,n}(x)`: 1 for `n < d`, otherwise `F_{d,n-1} + x·F_{d,n-d}`.
/// For `d = 0` the result is `1/(1-x)^{n+1}` truncated at `trunc`.
pub fn fib_poly(d: u64, n: i64, trunc: Option<usize>) -> Result<IntPolynomial> {
    let order = require_trunc(d, trunc)?;
    if n < d as i64 || n < 0 {
        return Ok(IntPolynomial::one());
    }
    let seq = fib_sequence(d, n, order)?;
    Ok(seq.into_iter().last().expect("non-empty"))
}

/// `K_{d,n}(x)`: coefficient of `y^n` in `(1 - y)·F_d(x, y)`.
pub fn k_poly(d: u64, n: u64, trunc: Option<usize>) -> Result<IntPolynomial> {
    let order = require_trunc(d, trunc)?;
    let seq = fib_sequence(d, n as i64, order)?;
    let cur = &seq[n as usize + 1];
    if n == 0 {
        Ok(cur.clone())
    } else {
        cur.checked_sub(&seq[n as usize])
    }
}

/// `F!_{d,n}(x) = F_{d,0}(x)·F_{d,1}(x)⋯F_{d,n}(x)`.
pub fn fibotorial(d: u64, n: u64, trunc: Option<usize>) -> Result<IntPolynomial> {
    let order = require_trunc(d, trunc)?;
    let seq = fib_sequence(d, n as i64, order)?;
    let mut acc = IntPolynomial::one();
    for f in &seq[1..] {
        acc = acc.mul_trunc(f, order)?;
    }
    Ok(acc)
}

/// `Self_d(q, x) = 1 + qx·F!_d(x, qx)` through `x^trunc`.
pub fn self_gf(d: u64, trunc: usize) -> Result<BivarSeries> {
    let mut rows = vec![IntPolynomial::zero(); trunc + 1];
    rows[0] = IntPolynomial::one();
    let fibs = fib_sequence(d, trunc as i64, Some(trunc))?;
    // running = F!_{d,k-1}
    let mut running = IntPolynomial::one();
    for k in 1..=trunc {
        running = running.mul_trunc(&fibs[k], Some(trunc - k))?;
        // q^k x^k · F!_{d,k-1}(x)
        for (j, &c) in running.coeffs().iter().enumerate() {
            if k + j > trunc {
                break;
            }
            if c != 0 {
                let row = &mut rows[k + j];
                *row = row.checked_add(&IntPolynomial::monomial(k, c))?;
            }
        }
    }
    Ok(BivarSeries::from_rows(rows))
}

/// `(Self_d(q, x) - [d]_{qx}) / (qx)^d` through `x^trunc`.
pub fn shifted_self(d: u64, trunc: usize) -> Result<BivarSeries> {
    let du = d as usize;
    let full = self_gf(d, trunc + du)?;
    let mut rows = Vec::with_capacity(trunc + 1);
    for (n, row) in full.rows().iter().enumerate() {
        let mut row = row.clone();
        if n < du {
            row = row.checked_sub(&IntPolynomial::monomial(n, 1))?;
        }
        // every surviving term must be divisible by (qx)^d
        if n < du {
            if let Some(k) = row.monomials().first().map(|m| m.exp) {
                return Err(Error::InexactDivision { d, n, k });
            }
            continue;
        }
        if let Some(m) = row.monomials().into_iter().find(|m| m.exp < du) {
            return Err(Error::InexactDivision { d, n, k: m.exp });
        }
        rows.push(IntPolynomial::new(row.coeffs().get(du..).unwrap_or(&[]).to_vec()));
    }
    Ok(BivarSeries::from_rows(rows))
}

/// `R(q, x) = Σ_k (qx)^k (1+x)(1+2x)⋯(1+kx)` through `x^trunc`.
pub fn limit_series(trunc: usize) -> Result<BivarSeries> {
    let mut rows = vec![IntPolynomial::zero(); trunc + 1];
    let mut prod = IntPolynomial::one();
    for k in 0..=trunc {
        if k > 0 {
            prod = prod.mul_trunc(&IntPolynomial::new(vec![1, k as Coef]), Some(trunc - k))?;
        }
        for (j, &c) in prod.coeffs().iter().enumerate() {
            if k + j > trunc {
                break;
            }
            if c != 0 {
                let row = &mut rows[k + j];
                *row = row.checked_add(&IntPolynomial::monomial(k, c))?;
            }
        }
    }
    Ok(BivarSeries::from_rows(rows))
}

/// `Σ_k (qx)^k / ((1-x)(1-2x)⋯(1-kx))` through `x^trunc`: the generating
/// function of RGFs by length and maximum.
pub fn stirling_series(trunc: usize) -> Result<BivarSeries> {
    let mut rows = vec![IntPolynomial::zero(); trunc + 1];
    let mut prod = IntPolynomial::one();
    for k in 0..=trunc {
        if k > 0 {
            prod = prod.div_one_minus(k as Coef, trunc - k)?;
        }
        for (j, &c) in prod.coeffs().iter().enumerate() {
            if k + j > trunc {
                break;
            }
            if c != 0 {
                let row = &mut rows[k + j];
                *row = row.checked_add(&IntPolynomial::monomial(k, c))?;
            }
        }
    }
    Ok(BivarSeries::from_rows(rows))
}

/// `F_{d+1,n-1}(q)`: the weak-descent distribution on self-modified
/// d-ascent sequences avoiding 112 and 213.
pub fn des_poly(d: u64, n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Precondition("des_poly requires n ≥ 1".into()));
    }
    fib_poly(d + 1, n as i64 - 1, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[Coef]) -> IntPolynomial {
        IntPolynomial::new(v.to_vec())
    }

    fn binom(n: i64, k: i64) -> Coef {
        if k < 0 || n < k {
            return 0;
        }
        (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Σ_k C(n-(d-1)k, k) x^k.
    fn fib_closed_form(d: u64, n: i64) -> IntPolynomial {
        let v: Vec<Coef> = (0..=n.max(0)).map(|k| binom(n - (d as i64 - 1) * k, k)).collect();
        IntPolynomial::new(v)
    }

    /// Parts-≥d compositions of `n` counted by number of parts.
    fn k_by_enumeration(d: u64, n: u64) -> IntPolynomial {
        fn go(rem: u64, d: u64, parts: usize, acc: &mut Vec<Coef>) {
            if rem == 0 {
                if acc.len() <= parts {
                    acc.resize(parts + 1, 0);
                }
                acc[parts] += 1;
                return;
            }
            for p in d.max(1)..=rem {
                go(rem - p, d, parts + 1, acc);
            }
        }
        let mut acc = Vec::new();
        go(n, d, 0, &mut acc);
        IntPolynomial::new(acc)
    }

    /// Parts in {1, d}, counted by number of d-parts.
    fn fib_by_compositions(d: u64, n: u64) -> IntPolynomial {
        fn go(rem: u64, d: u64, dparts: usize, acc: &mut Vec<Coef>) {
            if rem == 0 {
                if acc.len() <= dparts {
                    acc.resize(dparts + 1, 0);
                }
                acc[dparts] += 1;
                return;
            }
            go(rem - 1, d, dparts, acc);
            if rem >= d {
                go(rem - d, d, dparts + 1, acc);
            }
        }
        let mut acc = Vec::new();
        go(n, d, 0, &mut acc);
        IntPolynomial::new(acc)
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib_poly(2, 3, None).unwrap(), poly(&[1, 2]));
        assert_eq!(fib_poly(2, 4, None).unwrap(), poly(&[1, 3, 1]));
        assert_eq!(fib_poly(2, 6, None).unwrap(), poly(&[1, 5, 6, 1]));
        assert_eq!(fib_poly(2, 2, None).unwrap(), poly(&[1, 1]));
        assert_eq!(fib_poly(5, 3, None).unwrap(), IntPolynomial::one());
        assert_eq!(fib_poly(3, -4, None).unwrap(), IntPolynomial::one());
        assert_eq!(fib_poly(0, -1, Some(5)).unwrap(), IntPolynomial::one());
        assert_eq!(fib_poly(0, 2, None), Err(Error::TruncationRequired));
        // 1/(1-x)^3 = Σ C(k+2,2) x^k
        assert_eq!(fib_poly(0, 2, Some(4)).unwrap(), poly(&[1, 3, 6, 10, 15]));
    }

    #[test]
    fn fib_one_is_binomial_power() {
        for n in 0..15i64 {
            let expect: Vec<Coef> = (0..=n).map(|k| binom(n, k)).collect();
            assert_eq!(fib_poly(1, n, None).unwrap(), IntPolynomial::new(expect));
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for d in 1..=5 {
            for n in 0..=20 {
                assert_eq!(fib_poly(d, n, None).unwrap(), fib_closed_form(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn bivariate_gf_expansion() {
        // coefficients of 1/(1 - y - x y^d) via the recurrence c[n] = c[n-1] + x c[n-d]
        let order = 15usize;
        for d in 1..=5u64 {
            let mut c: Vec<IntPolynomial> = Vec::new();
            for n in 0..=order {
                let mut v = if n == 0 { IntPolynomial::one() } else { c[n - 1].clone() };
                if n >= d as usize && n > 0 {
                    v = v.checked_add(&c[n - d as usize].shift(1)).unwrap();
                }
                c.push(v);
            }
            for n in 0..=order {
                assert_eq!(fib_poly(d, n as i64, None).unwrap(), c[n], "d={d} n={n}");
            }
        }
    }

    #[test]
    fn k_examples_and_partial_sums() {
        for d in 0..5 {
            assert_eq!(k_poly(d, 0, Some(6)).unwrap().coeff(0), 1);
        }
        assert_eq!(k_poly(2, 0, None).unwrap(), IntPolynomial::one());
        assert_eq!(k_poly(2, 2, None).unwrap(), poly(&[0, 1]));
        let lhs = fib_poly(3, 12, None).unwrap().checked_sub(&fib_poly(3, 11, None).unwrap()).unwrap();
        assert_eq!(lhs, k_poly(3, 12, None).unwrap());
        for d in 1..=5 {
            for n in 0..=15 {
                assert_eq!(k_poly(d, n, None).unwrap(), k_by_enumeration(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn composition_interpretation() {
        for d in 2..=5 {
            for n in 0..=15 {
                assert_eq!(fib_poly(d, n as i64, None).unwrap(), fib_by_compositions(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn fibotorial_examples() {
        assert_eq!(fibotorial(2, 3, None).unwrap(), poly(&[1, 3, 2]));
        assert_eq!(fibotorial(2, 4, None).unwrap(), poly(&[1, 6, 12, 9, 2]));
        assert_eq!(fibotorial(2, 5, None).unwrap(), poly(&[1, 10, 39, 75, 74, 35, 6]));
        for d in 1..4 {
            assert_eq!(fibotorial(d, 0, None).unwrap(), IntPolynomial::one());
        }
        for n in 0..8u64 {
            let e = (n + 1) * n / 2;
            let expect: Vec<Coef> = (0..=e as i64).map(|k| binom(e as i64, k)).collect();
            assert_eq!(fibotorial(1, n, None).unwrap(), IntPolynomial::new(expect));
            // (1/(1-x))^{C(n+2,2)}: coefficient of x^j is C(j + m - 1, j)
            let m = ((n + 2) * (n + 1) / 2) as i64;
            let expect: Vec<Coef> = (0..=8).map(|j| binom(j + m - 1, j)).collect();
            assert_eq!(fibotorial(0, n, Some(8)).unwrap(), IntPolynomial::new(expect));
        }
    }

    #[test]
    fn self_gf_examples() {
        let s = self_gf(2, 12).unwrap();
        assert_eq!(s.x_coeff(4), &poly(&[0, 0, 0, 1, 1]));
        assert_eq!(s.at_q1().unwrap(), vec![1, 1, 1, 1, 2, 4, 9, 23, 64, 194, 629, 2177, 7982]);
        assert_eq!(self_gf(0, 3).unwrap().at_q1().unwrap()[3], 5);
        assert_eq!(self_gf(0, 0).unwrap().at_q1().unwrap(), vec![1]);
    }

    #[test]
    fn self_gf_d1_closed_form() {
        // Σ_k (qx)^k (1+x)^{C(k,2)}
        let s = self_gf(1, 12).unwrap();
        for n in 0..=12usize {
            let mut row = vec![0; n + 1];
            for k in 0..=n {
                let e = (k * k.saturating_sub(1) / 2) as i64;
                row[k] = binom(e, (n - k) as i64);
            }
            assert_eq!(s.x_coeff(n), &IntPolynomial::new(row), "n={n}");
        }
    }

    #[test]
    fn self_gf_d0_closed_form() {
        // Σ_k (qx)^k / (1-x)^{C(k+1,2)}
        let s = self_gf(0, 10).unwrap();
        for n in 0..=10usize {
            let mut row = vec![0; n + 1];
            for k in 0..=n {
                let m = (k * (k + 1) / 2) as i64;
                let j = (n - k) as i64;
                row[k] = if m == 0 { (j == 0) as Coef } else { binom(j + m - 1, j) };
            }
            assert_eq!(s.x_coeff(n), &IntPolynomial::new(row), "n={n}");
        }
    }

    #[test]
    fn q_degree_is_length() {
        for d in 0..5 {
            let s = self_gf(d, 12).unwrap();
            for n in 1..=12 {
                assert_eq!(s.x_coeff(n).degree(), Some(n));
                assert_eq!(s.coeff(n, n), 1);
            }
        }
    }

    #[test]
    fn shifted_examples() {
        let t = shifted_self(2, 12).unwrap().at_q1().unwrap();
        assert_eq!(t, vec![1, 1, 2, 4, 9, 23, 64, 194, 629, 2177, 7982, 30871, 125402]);
        let t = shifted_self(10, 12).unwrap().at_q1().unwrap();
        assert_eq!(t, vec![1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296, 13995, 47138]);
        assert_eq!(shifted_self(0, 9).unwrap(), self_gf(0, 9).unwrap());
    }

    #[test]
    fn limit_examples() {
        let r = limit_series(14).unwrap();
        assert_eq!(r.at_q1().unwrap(), vec![1, 1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296, 13995, 47138, 163779, 585741]);
        assert_eq!(r.x_coeff(0), &IntPolynomial::one());
        assert_eq!(r.x_coeff(2), &poly(&[0, 1, 1]));
    }

    #[test]
    fn limit_identity() {
        for d in 0..=8u64 {
            let s = self_gf(d, 16).unwrap();
            let r = limit_series(8).unwrap();
            for n in 0..=d.min(8) as usize {
                assert_eq!(s.x_coeff(n + d as usize), &r.x_coeff(n).shift(d as usize), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn des_examples() {
        assert_eq!(des_poly(1, 3).unwrap(), poly(&[1, 1]));
        for n in 1..10u64 {
            let expect: Vec<Coef> = (0..n as i64).map(|k| binom(n as i64 - 1, k)).collect();
            assert_eq!(des_poly(0, n).unwrap(), IntPolynomial::new(expect));
        }
        for d in 0..4 {
            assert_eq!(des_poly(d, 1).unwrap(), IntPolynomial::one());
        }
        assert!(des_poly(0, 0).is_err());
    }

    #[test]
    fn display_and_overflow() {
        assert_eq!(poly(&[1, 3, 2]).to_string(), "1 + 3x + 2x^2");
        assert_eq!(poly(&[0, 0, 0, 1, 1]).display_in("q"), "q^3 + q^4");
        assert_eq!(poly(&[1, -1]).to_string(), "1 - x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        let big = poly(&[Coef::MAX]);
        assert_eq!(big.checked_add(&IntPolynomial::one()), Err(Error::Overflow("polynomial addition")));
        assert!(big.checked_mul(&poly(&[2])).is_err());
    }
}
