use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Braid word on `strands` strands. Each letter is a signed generator
/// index: `i` stands for `sigma_i`, `-i` for its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("at least one strand is required".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidBraid(format!("letter {bad} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed generator indices. Without an
    /// explicit strand count, `max |i| + 1` strands are used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| tok.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter `{tok}`"))))
            .collect::<Result<Vec<_>>>()?;
        let inferred = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(inferred), letters)
    }

    pub fn unknot() -> Self {
        BraidWord { strands: 1, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Permutation induced on strand positions: `perm[start] = end`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub fn ensure_knot(&self) -> Result<()> {
        match self.components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Cancels adjacent `sigma_i sigma_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn with_letter(&self, pos: usize, letter: i32) -> Self {
        let mut letters = self.letters.clone();
        letters[pos] = letter;
        BraidWord { strands: self.strands, letters }
    }

    pub fn without_letter(&self, pos: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        BraidWord { strands: self.strands, letters }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Braid word with marked letters standing for double points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularBraidWord {
    braid: BraidWord,
    marks: BTreeSet<usize>,
}

impl SingularBraidWord {
    pub fn new(braid: BraidWord, marks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let marks: BTreeSet<usize> = marks.into_iter().collect();
        if let Some(&bad) = marks.iter().find(|&&m| m >= braid.len()) {
            return Err(Error::InvalidBraid(format!("mark {bad} beyond word length {}", braid.len())));
        }
        Ok(SingularBraidWord { braid, marks })
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn double_points(&self) -> usize {
        self.marks.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let b = BraidWord::parse("1 -2  1 -2", None).unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.to_text(), "1 -2 1 -2");
        assert_eq!(BraidWord::parse("", None).unwrap(), BraidWord::unknot());
        assert!(matches!(BraidWord::parse("1 x", None), Err(Error::Parse(_))));
        assert!(matches!(BraidWord::parse("3", Some(3)), Err(Error::InvalidBraid(_))));
    }

    #[test]
    fn components() {
        assert_eq!(BraidWord::parse("1 1 1", None).unwrap().components(), 1);
        assert_eq!(BraidWord::parse("1 1", None).unwrap().components(), 2);
        assert_eq!(BraidWord::parse("1 -2 1 -2", None).unwrap().components(), 1);
        assert_eq!(BraidWord::parse("1", Some(3)).unwrap().components(), 2);
        assert!(BraidWord::unknot().is_knot());
    }

    #[test]
    fn free_reduction() {
        let b = BraidWord::parse("1 2 -2 -1 1", None).unwrap();
        assert_eq!(b.free_reduce().letters(), &[1]);
        assert_eq!(b.free_reduce().strands(), 3);
    }

    #[test]
    fn marks_are_validated() {
        let b = BraidWord::parse("1 1 1", None).unwrap();
        assert!(SingularBraidWord::new(b.clone(), [0, 2]).is_ok());
        assert!(SingularBraidWord::new(b, [3]).is_err());
    }
}
