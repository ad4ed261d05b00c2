//! Biwords, the Burge transpose, `gamma` and `phi = gamma ∘ hat_d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::hat::hat;
use crate::perm::Permutation;
use crate::word::{format_letters, is_cayley, is_weakly_increasing, weak_descent_set, Letter, Word};

/// Two words of equal length, `top` written over `bottom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biword {
    top: Word,
    bottom: Word,
}

impl Biword {
    pub fn new(top: Word, bottom: Word) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Precondition(format!("biword rows have lengths {} and {}", top.len(), bottom.len())));
        }
        Ok(Biword { top, bottom })
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn bottom(&self) -> &Word {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.top)?;
        write!(f, "{}", self.bottom)
    }
}

fn burge_violation(b: &Biword) -> Option<String> {
    if !is_weakly_increasing(&b.top) || !is_cayley(&b.top) {
        return Some(format!("top row {} is not a weakly increasing Cayley permutation", b.top));
    }
    if !is_cayley(&b.bottom) {
        return Some(format!("bottom row {} is not a Cayley permutation", b.bottom));
    }
    if !weak_descent_set(&b.top).is_subset(&weak_descent_set(&b.bottom)) {
        return Some(format!(
            "weak descents {} of the top row are not weak descents {} of the bottom row",
            weak_descent_set(&b.top),
            weak_descent_set(&b.bottom)
        ));
    }
    None
}

pub fn is_burge_word(b: &Biword) -> bool {
    burge_violation(b).is_none()
}

/// A biword satisfying the Burge conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurgeWord(Biword);

impl BurgeWord {
    pub fn new(b: Biword) -> Result<Self> {
        match burge_violation(&b) {
            None => Ok(BurgeWord(b)),
            Some(reason) => Err(Error::NotBurgeWord(reason)),
        }
    }

    pub fn biword(&self) -> &Biword {
        &self.0
    }

    pub fn into_biword(self) -> Biword {
        self.0
    }

    /// Flips every column, then sorts columns by top entry, bottoms under
    /// equal tops in weakly decreasing order.
    pub fn transpose(&self) -> BurgeWord {
        let mut cols = transpose_columns(&self.0.top, &self.0.bottom);
        let (top, bottom): (Vec<Letter>, Vec<Letter>) = cols.drain(..).unzip();
        BurgeWord(Biword { top: Word::from_vec_unchecked(top), bottom: Word::from_vec_unchecked(bottom) })
    }
}

impl fmt::Display for BurgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn transpose_columns(top: &[Letter], bottom: &[Letter]) -> Vec<(Letter, Letter)> {
    let mut cols: Vec<(Letter, Letter)> = bottom.iter().copied().zip(top.iter().copied()).collect();
    cols.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    cols
}

pub fn burge_transpose(b: &Biword) -> Result<BurgeWord> {
    Ok(BurgeWord::new(b.clone())?.transpose())
}

/// Bottom row of the transpose of `(12…n / c)`.
pub fn gamma(c: &[Letter]) -> Result<Permutation> {
    if !is_cayley(c) {
        return Err(Error::NotCayley(format_letters(c)));
    }
    Ok(gamma_unchecked(c))
}

pub(crate) fn gamma_unchecked(c: &[Letter]) -> Permutation {
    let top: Vec<Letter> = (1..=c.len() as Letter).collect();
    let bottom = transpose_columns(&top, c).into_iter().map(|(_, b)| b).collect();
    Permutation::from_vec_unchecked(bottom)
}

/// `phi_d(w) = gamma(hat_d(w))`, the d-Fishburn permutation of `w`.
pub fn phi(w: &[Letter], d: u64) -> Result<Permutation> {
    let m = hat(w, d)?.modified;
    Ok(gamma_unchecked(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn bi(t: &str, b: &str) -> Biword {
        Biword::new(w(t), w(b)).unwrap()
    }

    #[test]
    fn burge_word_checks() {
        assert!(is_burge_word(&bi("123456789", "141252232")));
        assert!(is_burge_word(&bi("12", "12")));
        assert!(!is_burge_word(&bi("11", "12")));
        assert!(!is_burge_word(&bi("21", "11")));
        assert!(!is_burge_word(&bi("12", "13")));
        assert!(Biword::new(w("1"), w("12")).is_err());
    }

    #[test]
    fn transpose_examples() {
        let t = burge_transpose(&bi("123456789", "141252232")).unwrap();
        assert_eq!(t.biword(), &bi("112222345", "319764825"));
        let t = burge_transpose(&bi("1234567", "3124253")).unwrap();
        assert_eq!(t.biword(), &bi("1223345", "2537146"));
        assert_eq!(burge_transpose(&bi("1", "1")).unwrap().biword(), &bi("1", "1"));
        assert!(matches!(burge_transpose(&bi("11", "12")), Err(Error::NotBurgeWord(_))));
        assert_eq!(t.to_string(), "1223345\n2537146");
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&w("3124253")).unwrap().to_string(), "2537146");
        assert_eq!(gamma(&w("231")).unwrap().to_string(), "312");
        assert_eq!(gamma(&w("111")).unwrap().to_string(), "321");
        assert!(gamma(&w("13")).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("1124253"), 2).unwrap().to_string(), "2537146");
        assert_eq!(phi(&w(""), 0).unwrap().to_string(), "");
        assert!(phi(&w("1124253"), 0).is_err());
    }
}
