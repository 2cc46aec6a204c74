//! Independent ground truth for the series engine: graded counting (and
//! small-degree listing) of the basis words of the graph algebra.
//!
//! A letter is a pair `(v, k)` with `v` a positive-level vertex and
//! `1 <= k <= |v|`; it contributes `k` to the degree of a word. A word is
//! a sequence of letters in which no letter covers its successor, where
//! `(v, k)` covers `(u, l)` iff `v > u` and `k = |v| - |u|` (the trailing
//! `l` plays no role). Counting is a dynamic program over (first letter,
//! degree); the constraint is between consecutive letters only, so the
//! last-seen letter is all the state needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::LayeredGraph;

/// Default cap on explicitly listed words.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("unknown vertex id {0:?}")]
    UnknownEndpoint(String),
    #[error("word enumeration exceeds the cap of {cap} words")]
    EnumerationBudgetExceeded { cap: u64 },
}

/// A basis-word letter `(v, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub vertex: String,
    pub k: u32,
}

impl Letter {
    pub fn new(vertex: impl Into<String>, k: u32) -> Self {
        Letter {
            vertex: vertex.into(),
            k,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vertex, self.k)
    }
}

/// A word as a letter sequence; the empty word has degree 0.
pub type Word = Vec<Letter>;

/// Renders a word as `(id,k)(id,k)...`; the empty word is `()`.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "()".to_string();
    }
    word.iter().map(Letter::to_string).collect()
}

/// The covering predicate on letters: `a` covers `b` iff `a.vertex` lies
/// strictly above `b.vertex` and `a.k` equals the level gap. Both vertex
/// ids must exist in the graph.
pub fn covers(g: &LayeredGraph, a: &Letter, b: &Letter) -> bool {
    let av = g
        .index_of(&a.vertex)
        .unwrap_or_else(|| panic!("unknown vertex id {:?}", a.vertex));
    let bv = g
        .index_of(&b.vertex)
        .unwrap_or_else(|| panic!("unknown vertex id {:?}", b.vertex));
    g.reaches(av, bv) && a.k == g.level(av) - g.level(bv)
}

/// Per-degree counts of basis words up to a truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCount {
    counts: Vec<BigInt>,
}

impl WordCount {
    pub fn truncation(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

/// All letters of the graph, sorted by (level descending, id, k): the
/// canonical vertex order is already level-then-id, so (vertex index, k)
/// is the required key.
fn letters_of(g: &LayeredGraph) -> Vec<(usize, u32)> {
    let mut letters = Vec::new();
    for i in 0..g.vertex_count() {
        for k in 1..=g.level(i) {
            letters.push((i, k));
        }
    }
    letters
}

fn letter_covers(g: &LayeredGraph, a: (usize, u32), b_vertex: usize) -> bool {
    g.reaches(a.0, b_vertex) && a.1 == g.level(a.0) - g.level(b_vertex)
}

/// `dp[d][i]` = number of basis words of degree `d` whose first letter is
/// `letters[i]`.
fn word_dp(g: &LayeredGraph, truncation: usize, letters: &[(usize, u32)]) -> Vec<Vec<BigInt>> {
    // allowed[i] = successors j such that letters[i] does not cover letters[j]
    let allowed: Vec<Vec<usize>> = letters
        .iter()
        .map(|&a| {
            (0..letters.len())
                .filter(|&j| !letter_covers(g, a, letters[j].0))
                .collect()
        })
        .collect();
    let mut dp = vec![vec![BigInt::zero(); letters.len()]; truncation + 1];
    for d in 1..=truncation {
        for (i, &(_, k)) in letters.iter().enumerate() {
            let k = k as usize;
            if k > d {
                continue;
            }
            let mut total = if k == d { BigInt::one() } else { BigInt::zero() };
            if k < d {
                for &j in &allowed[i] {
                    total += &dp[d - k][j];
                }
            }
            dp[d][i] = total;
        }
    }
    dp
}

/// Counts basis words per degree `0..=truncation`. Degree 0 counts the
/// empty word; degree 1 always counts |V+|.
pub fn count_words(g: &LayeredGraph, truncation: usize) -> WordCount {
    let letters = letters_of(g);
    let dp = word_dp(g, truncation, &letters);
    let mut counts = vec![BigInt::zero(); truncation + 1];
    counts[0] = BigInt::one();
    for (d, row) in dp.iter().enumerate().skip(1) {
        counts[d] = row.iter().sum();
    }
    WordCount { counts }
}

/// Counts basis words whose first letter sits at vertex `v`, per degree.
/// Summed over all positive vertices (plus the empty word at degree 0)
/// this recovers `count_words`.
pub fn count_words_from(
    g: &LayeredGraph,
    v: &str,
    truncation: usize,
) -> Result<Vec<BigInt>, OracleError> {
    let vi = g
        .index_of(v)
        .ok_or_else(|| OracleError::UnknownEndpoint(v.to_string()))?;
    let letters = letters_of(g);
    let dp = word_dp(g, truncation, &letters);
    let mut counts = vec![BigInt::zero(); truncation + 1];
    for (d, row) in dp.iter().enumerate().skip(1) {
        for (i, &(vertex, _)) in letters.iter().enumerate() {
            if vertex == vi {
                counts[d] += &row[i];
            }
        }
    }
    Ok(counts)
}

/// Lists every basis word of exact degree `d`, lexicographically by
/// (level descending, id, k) per letter. Intended for audit at small `d`.
pub fn enumerate_words(
    g: &LayeredGraph,
    d: usize,
    cap: u64,
) -> Result<Vec<Word>, OracleError> {
    let letters = letters_of(g);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    fn rec(
        g: &LayeredGraph,
        letters: &[(usize, u32)],
        d: usize,
        degree: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Word>,
        cap: u64,
    ) -> Result<(), OracleError> {
        if degree == d {
            if out.len() as u64 >= cap {
                return Err(OracleError::EnumerationBudgetExceeded { cap });
            }
            out.push(
                stack
                    .iter()
                    .map(|&i| Letter::new(g.id(letters[i].0), letters[i].1))
                    .collect(),
            );
            return Ok(());
        }
        for (j, &(vertex, k)) in letters.iter().enumerate() {
            if degree + k as usize > d {
                continue;
            }
            if let Some(&last) = stack.last() {
                if letter_covers(g, letters[last], vertex) {
                    continue;
                }
            }
            stack.push(j);
            rec(g, letters, d, degree + k as usize, stack, out, cap)?;
            stack.pop();
        }
        Ok(())
    }

    rec(g, &letters, d, 0, &mut stack, &mut out, cap)?;
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct WordCountRepr {
    #[serde(with = "crate::series::biglist")]
    counts: Vec<BigInt>,
    truncation: usize,
}

impl Serialize for WordCount {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        WordCountRepr {
            counts: self.counts.clone(),
            truncation: self.truncation(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for WordCount {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = WordCountRepr::deserialize(de)?;
        if repr.counts.len().checked_sub(1) != Some(repr.truncation) {
            return Err(D::Error::custom("counts length must equal truncation + 1"));
        }
        Ok(WordCount {
            counts: repr.counts,
        })
    }
}
