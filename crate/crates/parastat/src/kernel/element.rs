use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::scalar::{self, Scalar};

use super::alphabet::Alphabet;
use super::generator::Parity;
use super::word::Word;

/// A finite rational linear combination of words.
///
/// Zero coefficients are never stored; terms are kept in a `BTreeMap` so
/// iteration is always in ascending deglex order, which makes every
/// downstream computation (and printout) deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero(alphabet: Arc<Alphabet>) -> Element {
        Element {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Arc<Alphabet>) -> Element {
        Element::term(alphabet, Word::unit(), scalar::one())
    }

    pub fn scalar(alphabet: Arc<Alphabet>, c: Scalar) -> Element {
        Element::term(alphabet, Word::unit(), c)
    }

    pub fn generator(alphabet: Arc<Alphabet>, idx: u8) -> Element {
        Element::term(alphabet, Word::single(idx), scalar::one())
    }

    pub fn term(alphabet: Arc<Alphabet>, word: Word, coeff: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Element { alphabet, terms }
    }

    pub fn from_terms<I>(alphabet: Arc<Alphabet>, it: I) -> Element
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut e = Element::zero(alphabet);
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(scalar::zero)
    }

    /// Maximal word length occurring in the element (0 for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|w| w.degree()).max().unwrap_or(0)
    }

    /// Largest term under deglex.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// The common parity of all words, if there is one.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys();
        let first = self.alphabet.parity_of_word(it.next()?);
        for w in it {
            if self.alphabet.parity_of_word(w) != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_alphabet(&self, other: &Element) -> Result<(), AlgebraError> {
        if *self.alphabet == *other.alphabet {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.alphabet.clone());
        }
        Element {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Bilinear extension of word concatenation.
    pub fn multiply(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_alphabet(other)?;
        let mut out = Element::zero(self.alphabet.clone());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.multiply(other)?.add(&other.multiply(self)?)
    }

    pub fn pow(&self, n: u32) -> Result<Element, AlgebraError> {
        let mut out = Element::one(self.alphabet.clone());
        for _ in 0..n {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Deterministic printout: terms ascending in deglex, reduced fractions,
    /// the minus sign folded into coefficients.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let word_str = self.render_word(w);
            if w.is_unit() {
                out.push_str(&scalar::render(&abs));
            } else if abs.is_one() {
                out.push_str(&word_str);
            } else {
                out.push_str(&format!("{}*{}", scalar::render(&abs), word_str));
            }
        }
        out
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".to_string();
        }
        w.symbols()
            .iter()
            .map(|&s| self.alphabet.generator(s).token())
            .collect::<Vec<_>>()
            .join("*")
    }
}
