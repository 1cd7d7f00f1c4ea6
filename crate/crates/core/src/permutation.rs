use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
///
/// Position and value are both 1-based: `get(i)` is the `i`-th letter of the
/// word. Both `get(0)` and `position(0)` return 0, so the root label passes
/// through unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n {
                return Err(Error::NotAPermutation(format!("{w} is outside [1, {n}]")));
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::NotAPermutation(format!("{w} repeats")));
            }
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::from_word(word.clone()).is_ok());
        Self { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The letter at position `i`; `get(0) = 0`.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.word[i - 1]
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &w) in self.word.iter().enumerate() {
            inv[w - 1] = i + 1;
        }
        Self { word: inv }
    }

    /// Table `t` with `t[v]` = position of `v`, `t[0] = 0`.
    pub fn position_table(&self) -> Vec<usize> {
        let mut table = vec![0; self.len() + 1];
        for (i, &w) in self.word.iter().enumerate() {
            table[w] = i + 1;
        }
        table
    }

    /// Table `t` with `t[i] = get(i)`, `t[0] = 0`.
    pub fn value_table(&self) -> Vec<usize> {
        let mut table = Vec::with_capacity(self.len() + 1);
        table.push(0);
        table.extend_from_slice(&self.word);
        table
    }

    /// Left-to-right maxima of the word, ascending.
    pub fn records(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for &w in &self.word {
            if w > best {
                best = w;
                out.push(w);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &w)| w == i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for w in &self.word {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{w}")?;
            first = false;
        }
        Ok(())
    }
}
