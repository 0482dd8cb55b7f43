//! Yamanouchi words, standard Young tableaux, the word/tableau bijection
//! and minimal-sequence enumeration.
//!
//! A Yamanouchi word codes a toppling sequence in which every prefix
//! leaves the running configuration dominated by the start; the tableau
//! of shape `lambda(w)` stores in row `i` the positions of letter `i`.
//! Enumeration is in lexicographic order of the word, which makes CLI
//! output reproducible.

use serde::{Deserialize, Serialize};

use crate::graph::{Configuration, Graph};
use crate::group::{solve_dominance, DominanceError, DominantElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauxError {
    #[error("word is not Yamanouchi")]
    NotYamanouchi,
    #[error("invalid standard Young tableau")]
    InvalidTableau,
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("enumeration would exceed the configured cap of {0}")]
    CapExceeded(u64),
}

/// An integer partition; trailing zeros are dropped in storage.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Partition, TableauxError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(TableauxError::InvalidPartition);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauxError::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    /// Build from a vector that may carry trailing zeros.
    pub fn from_padded(v: &[u64]) -> Result<Partition, TableauxError> {
        let cut = v.iter().position(|&p| p == 0).unwrap_or(v.len());
        if v[cut..].iter().any(|&p| p != 0) {
            return Err(TableauxError::InvalidPartition);
        }
        Partition::new(v[..cut].to_vec())
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u64)
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux of this shape, by the hook
    /// length formula. Used as an internal counting cross-check; the
    /// formula is a classical external fact, not developed here.
    pub fn hook_length_count(&self) -> u128 {
        let m = self.size();
        let conj = self.conjugate();
        let mut numer: u128 = 1;
        for k in 1..=m as u128 {
            numer = numer.checked_mul(k).expect("hook count overflow");
        }
        let mut denom: u128 = 1;
        for (r, &row_len) in self.parts.iter().enumerate() {
            for c in 0..row_len as usize {
                let arm = row_len as usize - c - 1;
                let leg = conj.parts[c] as usize - r - 1;
                denom = denom
                    .checked_mul((arm + leg + 1) as u128)
                    .expect("hook count overflow");
            }
        }
        numer / denom
    }

    /// Parse comma-separated parts, e.g. `4,3,1`. Empty string is the
    /// empty partition.
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<u64>> = s.split(',').map(|p| p.trim().parse().ok()).collect();
        Partition::new(parts?).ok()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `size` with at most `max_parts` parts, in
/// lexicographically decreasing order of the part vector.
pub fn partitions_of(size: u64, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, slots: usize, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p, slots - 1, current, out);
            current.pop();
        }
    }
    rec(size, size.max(1), max_parts, &mut current, &mut out);
    out
}

/// A word over `{1..n}` in which every prefix contains at least as many
/// occurrences of `i-1` as of `i`, for every `i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YamanouchiWord {
    letters: Vec<usize>,
}

impl YamanouchiWord {
    pub fn new(letters: Vec<usize>) -> Result<YamanouchiWord, TableauxError> {
        if !is_yamanouchi(&letters) {
            return Err(TableauxError::NotYamanouchi);
        }
        Ok(YamanouchiWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The type of the word: part `i` counts the occurrences of letter `i`.
    pub fn type_partition(&self) -> Partition {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0u64; max];
        for &l in &self.letters {
            counts[l - 1] += 1;
        }
        Partition::new(counts).expect("Yamanouchi word type is a partition")
    }

    /// Digit string when all letters are single digits, otherwise
    /// comma-separated.
    pub fn display_string(&self) -> String {
        if self.letters.iter().all(|&l| l <= 9) {
            self.letters.iter().map(|l| l.to_string()).collect()
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            parts.join(",")
        }
    }
}

pub fn is_yamanouchi(letters: &[usize]) -> bool {
    let mut counts: Vec<u64> = Vec::new();
    for &l in letters {
        if l == 0 {
            return false;
        }
        if counts.len() < l {
            counts.resize(l, 0);
        }
        counts[l - 1] += 1;
        if l >= 2 && counts[l - 1] > counts[l - 2] {
            return false;
        }
    }
    true
}

/// A bijective increasing filling of a Young diagram with `1..m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<StandardYoungTableau, TableauxError> {
        let t = StandardYoungTableau { rows };
        if !t.is_valid() {
            return Err(TableauxError::InvalidTableau);
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u64).collect())
            .expect("valid tableau has partition shape")
    }

    fn is_valid(&self) -> bool {
        let m: usize = self.rows.iter().map(|r| r.len()).sum();
        // shape weakly decreasing, no empty rows
        if self.rows.iter().any(|r| r.is_empty()) {
            return false;
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return false;
        }
        // entries are a permutation of 1..m
        let mut seen = vec![false; m + 1];
        for row in &self.rows {
            for &e in row {
                if e == 0 || e > m || seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        // rows strictly increasing
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        // columns strictly increasing
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r][c] <= self.rows[r - 1][c] {
                    return false;
                }
            }
        }
        true
    }
}

/// Tableau of shape `lambda(w)` whose row `i` stores all positions `j`
/// with `w[j] = i` (positions one-based).
pub fn word_to_syt(w: &YamanouchiWord) -> StandardYoungTableau {
    let max = w.letters.iter().copied().max().unwrap_or(0);
    let mut rows = vec![Vec::new(); max];
    for (j, &l) in w.letters.iter().enumerate() {
        rows[l - 1].push(j + 1);
    }
    StandardYoungTableau { rows }
}

/// Inverse of [`word_to_syt`]: letter at position `j` is the row holding `j`.
pub fn syt_to_word(t: &StandardYoungTableau) -> YamanouchiWord {
    let m: usize = t.rows.iter().map(|r| r.len()).sum();
    let mut letters = vec![0usize; m];
    for (i, row) in t.rows.iter().enumerate() {
        for &j in row {
            letters[j - 1] = i + 1;
        }
    }
    YamanouchiWord { letters }
}

/// All Yamanouchi words of the given type, in lexicographic order.
pub fn enumerate_yamanouchi_words(shape: &Partition, cap: u64) -> Result<Vec<YamanouchiWord>, TableauxError> {
    let target: Vec<u64> = shape.parts().to_vec();
    let m = shape.size() as usize;
    let mut out = Vec::new();
    let mut counts = vec![0u64; target.len()];
    let mut word = Vec::with_capacity(m);
    fn rec(
        target: &[u64],
        counts: &mut [u64],
        word: &mut Vec<usize>,
        m: usize,
        out: &mut Vec<YamanouchiWord>,
        cap: u64,
    ) -> Result<(), TableauxError> {
        if word.len() == m {
            if out.len() as u64 >= cap {
                return Err(TableauxError::CapExceeded(cap));
            }
            out.push(YamanouchiWord {
                letters: word.clone(),
            });
            return Ok(());
        }
        for l in 0..target.len() {
            let below_target = counts[l] < target[l];
            let yamanouchi_ok = l == 0 || counts[l] < counts[l - 1];
            if below_target && yamanouchi_ok {
                counts[l] += 1;
                word.push(l + 1);
                rec(target, counts, word, m, out, cap)?;
                word.pop();
                counts[l] -= 1;
            }
        }
        Ok(())
    }
    rec(&target, &mut counts, &mut word, m, &mut out, cap)?;
    Ok(out)
}

/// All standard Young tableaux of the shape, ordered lexicographically by
/// their reading (Yamanouchi) word. The count is cross-checked against
/// the hook length formula in tests.
pub fn enumerate_syt(shape: &Partition, cap: u64) -> Result<Vec<StandardYoungTableau>, TableauxError> {
    Ok(enumerate_yamanouchi_words(shape, cap)?
        .iter()
        .map(word_to_syt)
        .collect())
}

/// Count standard Young tableaux of the shape without materializing them.
pub fn count_syt(shape: &Partition) -> u128 {
    shape.hook_length_count()
}

/// All minimal-length Yamanouchi toppling sequences from `alpha` to
/// `beta`, empty when `beta` is not dominated by `alpha`.
pub fn minimal_yamanouchi_sequences(
    g: &Graph,
    alpha: &Configuration,
    beta: &Configuration,
    cap: u64,
) -> Result<Vec<YamanouchiWord>, MinimalSequencesError> {
    let lambda = match solve_dominance(g, alpha, beta)? {
        Ok(lambda) => lambda,
        Err(_) => return Ok(Vec::new()),
    };
    Ok(enumerate_yamanouchi_words(&partition_of(&lambda), cap)?)
}

/// Count of minimal sequences: the number of tableaux of the shape.
pub fn minimal_yamanouchi_count(
    g: &Graph,
    alpha: &Configuration,
    beta: &Configuration,
) -> Result<u128, MinimalSequencesError> {
    match solve_dominance(g, alpha, beta)? {
        Ok(lambda) => Ok(partition_of(&lambda).hook_length_count()),
        Err(_) => Ok(0),
    }
}

fn partition_of(lambda: &DominantElement) -> Partition {
    Partition::new(lambda.parts()).expect("dominant element parts form a partition")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinimalSequencesError {
    #[error(transparent)]
    Dominance(#[from] DominanceError),
    #[error(transparent)]
    Tableaux(#[from] TableauxError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> YamanouchiWord {
        YamanouchiWord::new(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).unwrap()
    }

    #[test]
    fn word_to_syt_examples() {
        // Row i of the tableau stores the positions of letter i, so the
        // shape equals the type of the word: here (3,2,1,1).
        let t = word_to_syt(&word("1121324"));
        assert_eq!(t.rows(), &[vec![1, 2, 4], vec![3, 6], vec![5], vec![7]]);
        assert_eq!(t.shape(), Partition::new(vec![3, 2, 1, 1]).unwrap());

        let t = word_to_syt(&word("1112"));
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![4]]);

        let t = word_to_syt(&YamanouchiWord::new(vec![]).unwrap());
        assert_eq!(t.rows(), &[] as &[Vec<usize>]);
    }

    #[test]
    fn syt_to_word_examples() {
        let t = StandardYoungTableau::new(vec![vec![1, 2, 4], vec![3, 6], vec![5], vec![7]]).unwrap();
        assert_eq!(syt_to_word(&t), word("1121324"));

        let t = StandardYoungTableau::new(vec![vec![1, 3, 4], vec![2]]).unwrap();
        assert_eq!(syt_to_word(&t), word("1211"));

        let t = StandardYoungTableau::new(vec![]).unwrap();
        assert!(syt_to_word(&t).is_empty());
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(
            YamanouchiWord::new(vec![1, 2, 2]),
            Err(TableauxError::NotYamanouchi)
        );
        assert_eq!(
            StandardYoungTableau::new(vec![vec![1, 3], vec![2, 2]]),
            Err(TableauxError::InvalidTableau)
        );
        assert_eq!(
            StandardYoungTableau::new(vec![vec![2, 3], vec![1]]),
            Err(TableauxError::InvalidTableau)
        );
    }

    #[test]
    fn enumerate_syt_examples() {
        let shape = Partition::new(vec![3, 1]).unwrap();
        let ts = enumerate_syt(&shape, 1_000_000).unwrap();
        assert_eq!(ts.len(), 3);
        assert_eq!(ts.len() as u128, count_syt(&shape));

        let column = Partition::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(enumerate_syt(&column, 1_000_000).unwrap().len(), 1);

        // brute force over all 4! fillings of shape (2,2)
        let square = Partition::new(vec![2, 2]).unwrap();
        fn go(perm: &mut Vec<usize>, k: usize, brute: &mut u32) {
            if k == perm.len() {
                let rows = vec![vec![perm[0], perm[1]], vec![perm[2], perm[3]]];
                if StandardYoungTableau::new(rows).is_ok() {
                    *brute += 1;
                }
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                go(perm, k + 1, brute);
                perm.swap(k, i);
            }
        }
        let mut brute = 0;
        go(&mut vec![1, 2, 3, 4], 0, &mut brute);
        assert_eq!(brute, 2);
        assert_eq!(enumerate_syt(&square, 1_000_000).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_cap() {
        let shape = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(
            enumerate_syt(&shape, 2),
            Err(TableauxError::CapExceeded(2))
        );
    }

    #[test]
    fn minimal_sequences_paper_example() {
        let k5 = Graph::complete(5).unwrap();
        let alpha = Configuration::new(vec![5, -3, 0, 1, -4]);
        let beta = Configuration::new(vec![-6, -4, 4, 5, 0]);
        let ws = minimal_yamanouchi_sequences(&k5, &alpha, &beta, 1_000_000).unwrap();
        let strs: Vec<String> = ws.iter().map(|w| w.display_string()).collect();
        assert_eq!(strs, vec!["1112", "1121", "1211"]);
        assert_eq!(minimal_yamanouchi_count(&k5, &alpha, &beta).unwrap(), 3);
    }

    #[test]
    fn minimal_sequences_trivial() {
        let g = Graph::path(3).unwrap();
        let alpha = Configuration::new(vec![1, 2, 3]);
        let ws = minimal_yamanouchi_sequences(&g, &alpha, &alpha, 1_000_000).unwrap();
        assert_eq!(ws.len(), 1);
        assert!(ws[0].is_empty());

        let l2 = Graph::path(2).unwrap();
        let ws = minimal_yamanouchi_sequences(
            &l2,
            &Configuration::new(vec![1, 0]),
            &Configuration::new(vec![0, 1]),
            1_000_000,
        )
        .unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].letters(), &[1]);

        // not dominated: empty result
        let ws = minimal_yamanouchi_sequences(
            &l2,
            &Configuration::new(vec![0, 1]),
            &Configuration::new(vec![1, 0]),
            1_000_000,
        )
        .unwrap();
        assert!(ws.is_empty());
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![8, 7, 4, 3, 2, 2, 1]).unwrap();
        assert_eq!(
            p.conjugate(),
            Partition::new(vec![7, 6, 4, 3, 2, 2, 2, 1]).unwrap()
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn hook_length_counts() {
        // all shapes of size <= 8: enumeration count equals hook count
        for size in 0..=8u64 {
            for shape in partitions_of(size, size as usize) {
                let ts = enumerate_syt(&shape, 10_000_000).unwrap();
                assert_eq!(ts.len() as u128, shape.hook_length_count(), "shape {shape}");
            }
        }
    }

    #[test]
    fn roundtrip_small_exhaustive() {
        // all Yamanouchi words of length <= 7 over {1..4}
        fn extend(prefix: &mut Vec<usize>, len: usize, found: &mut u32) {
            if !is_yamanouchi(prefix) {
                return;
            }
            let w = YamanouchiWord::new(prefix.clone()).unwrap();
            let t = word_to_syt(&w);
            assert_eq!(syt_to_word(&t), w);
            assert_eq!(word_to_syt(&syt_to_word(&t)), t);
            *found += 1;
            if prefix.len() == len {
                return;
            }
            for l in 1..=4 {
                prefix.push(l);
                extend(prefix, len, found);
                prefix.pop();
            }
        }
        let mut found = 0;
        extend(&mut Vec::new(), 7, &mut found);
        assert!(found > 100);
    }
}
