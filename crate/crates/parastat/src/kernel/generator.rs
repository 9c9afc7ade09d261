use std::fmt;

/// Z2-parity of a generator or word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if other == Parity::Odd {
            self.flip()
        } else {
            self
        }
    }

    /// 0 for even, 1 for odd.
    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// Creation/annihilation sign on an indexed generator, or on `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// +1 or -1, the numeric value used by the defining relations.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which of the four generator families a symbol belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Parabosonic generator `b_i^+-` (odd).
    B,
    /// Parafermionic generator `f_i^+-` (even).
    F,
    /// The group-like involution adjoined by bosonisation.
    G,
    /// The group-like pair `K+`, `K-` of the alternative extension.
    K,
}

/// A single generator symbol with its parity.
///
/// The constructors enforce the family shape: `b`/`f` carry an index and a
/// sign, `g` carries neither, `K` carries only a sign.  Parity is fixed at
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    family: Family,
    sign: Option<Sign>,
    index: Option<u32>,
    parity: Parity,
}

impl Generator {
    pub fn boson(index: u32, sign: Sign) -> Generator {
        assert!(index >= 1);
        Generator {
            family: Family::B,
            sign: Some(sign),
            index: Some(index),
            parity: Parity::Odd,
        }
    }

    pub fn fermion(index: u32, sign: Sign) -> Generator {
        assert!(index >= 1);
        Generator {
            family: Family::F,
            sign: Some(sign),
            index: Some(index),
            parity: Parity::Even,
        }
    }

    pub fn group_like_g() -> Generator {
        Generator {
            family: Family::G,
            sign: None,
            index: None,
            parity: Parity::Even,
        }
    }

    pub fn k(sign: Sign) -> Generator {
        Generator {
            family: Family::K,
            sign: Some(sign),
            index: None,
            parity: Parity::Even,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Token form used by the parser and the printer: `b1+`, `f2-`, `g`, `K+`.
    pub fn token(&self) -> String {
        match self.family {
            Family::B => format!("b{}{}", self.index.unwrap(), self.sign.unwrap().symbol()),
            Family::F => format!("f{}{}", self.index.unwrap(), self.sign.unwrap().symbol()),
            Family::G => "g".to_string(),
            Family::K => format!("K{}", self.sign.unwrap().symbol()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}
