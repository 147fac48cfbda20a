use std::cmp::Ordering;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Letter code: an index into a preset's alphabet.
pub type Letter = u16;

/// A word in the free monoid on a preset's alphabet. The empty word is the unit.
///
/// Ordered degree-lexicographically: shorter words first, then lexicographic
/// by letter code. This is the termination order of every rewrite system.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(SmallVec<[Letter; 8]>);

impl Word {
    pub fn new() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_slice(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.0.extend_from_slice(&other.0);
        w
    }

    /// `self[..at] ++ middle ++ self[at + len..]`.
    pub fn splice(&self, at: usize, len: usize, middle: &Word) -> Word {
        let mut w = Word(SmallVec::with_capacity(self.len() - len + middle.len()));
        w.0.extend_from_slice(&self.0[..at]);
        w.0.extend_from_slice(&middle.0);
        w.0.extend_from_slice(&self.0[at + len..]);
        w
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lex_order() {
        let long = Word::from_slice(&[0, 0, 0]);
        let short = Word::from_slice(&[7]);
        assert!(short < long);
        assert!(Word::from_slice(&[1, 0]) > Word::from_slice(&[0, 5]));
        assert!(Word::new() < short);
    }

    #[test]
    fn splice_replaces_window() {
        let w = Word::from_slice(&[1, 2, 3, 4]);
        let m = Word::from_slice(&[9]);
        assert_eq!(w.splice(1, 2, &m), Word::from_slice(&[1, 9, 4]));
        assert_eq!(w.splice(0, 1, &Word::new()), Word::from_slice(&[2, 3, 4]));
    }
}
