use std::cmp::Ordering;
use std::fmt;

/// A word in the free monoid on generators `x1..xm`, stored as 0-based
/// generator indices. The empty word is the unit.
///
/// Words are ordered graded-lexicographically: shorter words first, then
/// lexicographically with `x1 < x2 < ... < xm`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn generator(k: usize) -> Self {
        Word(vec![k])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `x_k · self`.
    pub fn prepend(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(k);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Largest generator index used, if any.
    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// Exponent of each generator, as a vector of length `m`.
    pub fn content(&self, m: usize) -> Vec<u32> {
        let mut c = vec![0u32; m];
        for &k in &self.0 {
            c[k] += 1;
        }
        c
    }

    /// All words of length exactly `len` over `m` generators, in lexicographic order.
    pub fn all_of_length(m: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| (0..m).map(move |k| {
                    let mut v = w.0.clone();
                    v.push(k);
                    Word(v)
                }))
                .collect();
        }
        out
    }

    /// All words with `lo <= len <= hi`, in graded-lex order.
    pub fn all_up_to(m: usize, lo: usize, hi: usize) -> Vec<Word> {
        (lo..=hi).flat_map(|l| Word::all_of_length(m, l)).collect()
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `1` for the empty word, otherwise e.g. `x1^2*x2*x1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == k {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let mut ws = [
            Word::new(vec![1]),
            Word::new(vec![0, 1]),
            Word::empty(),
            Word::new(vec![0]),
            Word::new(vec![0, 0]),
        ];
        ws.sort();
        let printed: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, ["1", "x1", "x2", "x1^2", "x1*x2"]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Word::all_of_length(2, 3).len(), 8);
        assert_eq!(Word::all_up_to(2, 1, 3).len(), 14);
        let ws = Word::all_up_to(3, 0, 2);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn display_runs() {
        assert_eq!(Word::new(vec![0, 0, 1, 0]).to_string(), "x1^2*x2*x1");
        assert_eq!(Word::new(vec![0, 1, 0]).content(2), vec![2, 1]);
    }
}
