use std::cmp::Ordering;
use std::fmt;

/// One of `z_i` or `z*_i`.
///
/// Ordered `z*_0 < z*_1 < ... < z*_n < z_0 < ... < z_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: u16,
    pub starred: bool,
}

impl Generator {
    pub const fn z(index: u16) -> Self {
        Self {
            index,
            starred: false,
        }
    }

    pub const fn zs(index: u16) -> Self {
        Self {
            index,
            starred: true,
        }
    }

    pub fn star(self) -> Self {
        Self {
            index: self.index,
            starred: !self.starred,
        }
    }

    /// Circle weight: `+1` for `z_i`, `-1` for `z*_i`.
    pub fn degree(self) -> i64 {
        if self.starred {
            -1
        } else {
            1
        }
    }

    fn sort_key(self) -> (bool, u16) {
        (!self.starred, self.index)
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.index)?;
        if self.starred {
            write!(f, "s")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial in the free algebra; the empty word is `1`.
///
/// Ordered degree-lexicographically: shorter words first, then
/// lexicographically by [`Generator`] order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|g| g.degree()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverses the word and toggles every star.
    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.star()).collect())
    }

    pub fn max_index(&self) -> Option<u16> {
        self.0.iter().map(|g| g.index).max()
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
