use std::collections::HashMap;
use std::sync::Arc;

use super::generator::{Generator, Parity};
use super::word::Word;

/// An ordered generator alphabet.
///
/// The declared order is the total generator order underlying the deglex term
/// order; words store positions into this list.  Alphabets are immutable and
/// shared behind `Arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    by_token: HashMap<String, u8>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Arc<Alphabet> {
        assert!(gens.len() <= u8::MAX as usize, "alphabet too large");
        let by_token = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.token(), i as u8))
            .collect();
        Arc::new(Alphabet { gens, by_token })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, idx: u8) -> &Generator {
        &self.gens[idx as usize]
    }

    pub fn index_of(&self, token: &str) -> Option<u8> {
        self.by_token.get(token).copied()
    }

    pub fn parity_of_word(&self, w: &Word) -> Parity {
        let mut p = Parity::Even;
        for &s in w.symbols() {
            p = p.combine(self.generator(s).parity());
        }
        p
    }

    /// `base^0 + base^1 + ... + base^degree` words of length at most `degree`.
    pub fn word_count(&self, degree: u32) -> u64 {
        let base = self.len() as u64;
        let mut total = 0u64;
        let mut pow = 1u64;
        for _ in 0..=degree {
            total += pow;
            pow = pow.saturating_mul(base);
        }
        total
    }

    /// All words of length at most `degree`, in ascending deglex order.
    pub fn words_up_to(&self, degree: u32) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        let mut layer = vec![Word::unit()];
        for _ in 0..degree {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for s in 0..self.len() as u8 {
                    next.push(w.append(s));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}
