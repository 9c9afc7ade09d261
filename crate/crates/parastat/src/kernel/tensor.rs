use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::scalar::{self, Scalar};

use super::alphabet::Alphabet;
use super::element::Element;
use super::generator::Parity;
use super::word::Word;

pub const MAX_RANK: usize = 3;

/// A formal rational linear combination of word tuples: the carrier for
/// coproducts (rank 2) and coassociativity computations (rank 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    alphabet: Arc<Alphabet>,
    rank: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(alphabet: Arc<Alphabet>, rank: usize) -> Result<TensorElement, AlgebraError> {
        if !(2..=MAX_RANK).contains(&rank) {
            return Err(AlgebraError::RankUnsupported(rank));
        }
        Ok(TensorElement {
            alphabet,
            rank,
            terms: BTreeMap::new(),
        })
    }

    /// `1 (x) 1 (x) ... (x) 1`.
    pub fn unit(alphabet: Arc<Alphabet>, rank: usize) -> Result<TensorElement, AlgebraError> {
        let mut t = TensorElement::zero(alphabet, rank)?;
        t.add_term(vec![Word::unit(); rank], scalar::one());
        Ok(t)
    }

    /// Bilinear embedding of a tuple of elements, with coefficient product.
    pub fn of_elements(factors: &[&Element]) -> Result<TensorElement, AlgebraError> {
        let rank = factors.len();
        if !(2..=MAX_RANK).contains(&rank) {
            return Err(AlgebraError::RankUnsupported(rank));
        }
        for f in &factors[1..] {
            if *f.alphabet().as_ref() != *factors[0].alphabet().as_ref() {
                return Err(AlgebraError::AlphabetMismatch);
            }
        }
        let mut t = TensorElement::zero(factors[0].alphabet().clone(), rank)?;
        let mut stack: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (tuple, c) in &stack {
                for (w, k) in f.terms() {
                    let mut tuple = tuple.clone();
                    tuple.push(w.clone());
                    next.push((tuple, c * k));
                }
            }
            stack = next;
        }
        for (tuple, c) in stack {
            t.add_term(tuple, c);
        }
        Ok(t)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, tuple: Vec<Word>, coeff: Scalar) {
        debug_assert_eq!(tuple.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(tuple);
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

    fn check_compatible(&self, other: &TensorElement) -> Result<(), AlgebraError> {
        if *self.alphabet != *other.alphabet {
            return Err(AlgebraError::AlphabetMismatch);
        }
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&-scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement {
                alphabet: self.alphabet.clone(),
                rank: self.rank,
                terms: BTreeMap::new(),
            };
        }
        TensorElement {
            alphabet: self.alphabet.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(|(t, k)| (t.clone(), k * c)).collect(),
        }
    }

    /// Slotwise concatenation, no signs.
    pub fn plain_multiply(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = TensorElement::zero(self.alphabet.clone(), self.rank)?;
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                let tuple: Vec<Word> = s.iter().zip(t.iter()).map(|(u, v)| u.concat(v)).collect();
                out.add_term(tuple, a * b);
            }
        }
        Ok(out)
    }

    /// The Koszul-signed product on rank-2 tensors:
    /// `(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd`.
    pub fn braided_multiply(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_compatible(other)?;
        if self.rank != 2 {
            return Err(AlgebraError::RankMismatch {
                expected: 2,
                got: self.rank,
            });
        }
        let mut out = TensorElement::zero(self.alphabet.clone(), 2)?;
        for (s, a) in &self.terms {
            let b_parity = self.alphabet.parity_of_word(&s[1]);
            for (t, k) in &other.terms {
                let c_parity = self.alphabet.parity_of_word(&t[0]);
                let mut coeff = a * k;
                if b_parity == Parity::Odd && c_parity == Parity::Odd {
                    coeff = -coeff;
                }
                out.add_term(vec![s[0].concat(&t[0]), s[1].concat(&t[1])], coeff);
            }
        }
        Ok(out)
    }

    /// Replaces slot `slot` of every term by an element, expanding
    /// multilinearly.  The replacement may change the rank of the result when
    /// `expand` maps a word to a tensor; here it maps words to elements, so
    /// the rank is preserved.
    pub fn map_slotwise<F>(&self, mut expand: F) -> Result<TensorElement, AlgebraError>
    where
        F: FnMut(usize, &Word) -> Result<Element, AlgebraError>,
    {
        let mut out = TensorElement::zero(self.alphabet.clone(), self.rank)?;
        for (tuple, c) in &self.terms {
            let mut expanded: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
            for (i, w) in tuple.iter().enumerate() {
                let img = expand(i, w)?;
                let mut next = Vec::new();
                for (prefix, k) in &expanded {
                    for (v, a) in img.terms() {
                        let mut prefix = prefix.clone();
                        prefix.push(v.clone());
                        next.push((prefix, k * a));
                    }
                }
                expanded = next;
            }
            for (tuple, k) in expanded {
                out.add_term(tuple, k);
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let probe = Element::zero(self.alphabet.clone());
        let mut out = String::new();
        for (i, (tuple, c)) in self.terms.iter().enumerate() {
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
            use num_traits::One;
            if !abs.is_one() {
                out.push_str(&format!("{}*", scalar::render(&abs)));
            }
            let slots: Vec<String> = tuple.iter().map(|w| probe.render_word(w)).collect();
            out.push_str(&slots.join(" ox "));
        }
        out
    }
}

/// The symmetric braiding `Psi(v (x) w) = (-1)^{|v||w|} w (x) v` on
/// parity-homogeneous elements.
pub fn braiding(v: &Element, w: &Element) -> Result<TensorElement, AlgebraError> {
    if *v.alphabet().as_ref() != *w.alphabet().as_ref() {
        return Err(AlgebraError::AlphabetMismatch);
    }
    let pv = v.homogeneous_parity();
    let pw = w.homogeneous_parity();
    // the zero element braids to zero and has no parity constraint
    if v.is_zero() || w.is_zero() {
        return TensorElement::zero(v.alphabet().clone(), 2);
    }
    let (pv, pw) = match (pv, pw) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(AlgebraError::NonHomogeneous),
    };
    let flipped = TensorElement::of_elements(&[w, v])?;
    if pv == Parity::Odd && pw == Parity::Odd {
        Ok(flipped.neg())
    } else {
        Ok(flipped)
    }
}
