use std::cmp::Ordering;

/// A word of the free algebra: a finite sequence of alphabet positions.
///
/// The empty word is the algebra unit.  `Ord` is degree-lexicographic over
/// the alphabet's declared generator order, which is the canonical term order
/// everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    syms: Vec<u8>,
}

impl Word {
    pub fn unit() -> Word {
        Word { syms: Vec::new() }
    }

    pub fn single(sym: u8) -> Word {
        Word { syms: vec![sym] }
    }

    pub fn from_symbols(syms: Vec<u8>) -> Word {
        Word { syms }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.syms
    }

    pub fn degree(&self) -> u32 {
        self.syms.len() as u32
    }

    pub fn is_unit(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut syms = Vec::with_capacity(self.syms.len() + other.syms.len());
        syms.extend_from_slice(&self.syms);
        syms.extend_from_slice(&other.syms);
        Word { syms }
    }

    pub fn append(&self, sym: u8) -> Word {
        let mut syms = self.syms.clone();
        syms.push(sym);
        Word { syms }
    }

    /// First position where `factor` occurs as a contiguous subword.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.syms.is_empty() {
            return Some(0);
        }
        if factor.syms.len() > self.syms.len() {
            return None;
        }
        self.syms
            .windows(factor.syms.len())
            .position(|w| w == factor.syms.as_slice())
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word {
            syms: self.syms[from..to].to_vec(),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.syms
            .len()
            .cmp(&other.syms.len())
            .then_with(|| self.syms.cmp(&other.syms))
    }
}
