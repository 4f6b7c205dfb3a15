//! Run-length binary generating sequences.
//!
//! A connected threshold or chain graph is described by a word
//! `0^{t_1} 1^{s_1} 0^{t_2} 1^{s_2} ... 0^{t_h} 1^{s_h}` with every exponent
//! positive. [`GeneratingSequence`] stores the `(t_i, s_i)` pairs in that
//! canonical form and is the single source of truth for the graphs built
//! from it.
//!
//! Two textual notations are accepted by [`parse_sequence`]:
//!
//! * a raw binary word such as `001011`;
//! * run-length notation with optional grouping parentheses and carets,
//!   such as `(0^2 1^2)(0^2 1^3)` or `0^2 1^2 0^2 1^3`.
//!
//! Whitespace is insignificant. The first symbol of a word does not affect
//! the graph, so a leading `1` is rewritten to `0` before canonicalization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors produced while parsing or constructing a generating sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("unexpected character {ch:?} at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("expected an exponent after '^' at offset {offset}")]
    MissingExponent { offset: usize },
    #[error("zero exponent at offset {offset}")]
    ZeroExponent { offset: usize },
    #[error("exponent at offset {offset} does not fit in 64 bits")]
    ExponentOverflow { offset: usize },
    #[error("unbalanced parenthesis at offset {offset}")]
    UnbalancedParen { offset: usize },
    #[error("empty group at offset {offset}")]
    EmptyGroup { offset: usize },
    #[error("sequence ends with {count} zero(s); the graph has isolated vertices")]
    TrailingZeros { count: u64 },
    #[error("sequence has no ones; the graph has no edges")]
    NoOnes,
    #[error("run {index} has a zero count")]
    EmptyRun { index: usize },
    #[error("total order does not fit in 64 bits")]
    OrderOverflow,
}

/// One level `(0^{zeros} 1^{ones})` of a generating sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Run {
    pub zeros: u64,
    pub ones: u64,
}

impl Run {
    pub fn new(zeros: u64, ones: u64) -> Self {
        Run { zeros, ones }
    }
}

impl From<(u64, u64)> for Run {
    fn from((zeros, ones): (u64, u64)) -> Self {
        Run { zeros, ones }
    }
}

/// Canonical run-length form of a connected generating sequence.
///
/// Invariants: at least one run; every count is positive; the total order
/// `T + S` fits in a `u64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingSequence {
    runs: Vec<Run>,
    total_zeros: u64,
    total_ones: u64,
}

impl GeneratingSequence {
    /// Builds a sequence from `(t_i, s_i)` pairs, validating positivity.
    pub fn new<I, R>(runs: I) -> Result<Self, SequenceError>
    where
        I: IntoIterator<Item = R>,
        R: Into<Run>,
    {
        let runs: Vec<Run> = runs.into_iter().map(Into::into).collect();
        if runs.is_empty() {
            return Err(SequenceError::Empty);
        }
        let mut total_zeros = 0u64;
        let mut total_ones = 0u64;
        for (index, run) in runs.iter().enumerate() {
            if run.zeros == 0 || run.ones == 0 {
                return Err(SequenceError::EmptyRun { index: index + 1 });
            }
            total_zeros = total_zeros
                .checked_add(run.zeros)
                .ok_or(SequenceError::OrderOverflow)?;
            total_ones = total_ones
                .checked_add(run.ones)
                .ok_or(SequenceError::OrderOverflow)?;
        }
        total_zeros
            .checked_add(total_ones)
            .ok_or(SequenceError::OrderOverflow)?;
        Ok(GeneratingSequence {
            runs,
            total_zeros,
            total_ones,
        })
    }

    /// Builds a sequence from a symbol stream of `(bit, count)` tokens,
    /// applying the leading-one rewrite and merging adjacent equal symbols.
    /// Trailing zeros are returned separately.
    fn from_tokens(tokens: &[(bool, u64)]) -> Result<PermissiveSequence, SequenceError> {
        let mut merged: Vec<(bool, u64)> = Vec::with_capacity(tokens.len() + 1);
        let mut push = |bit: bool, count: u64| -> Result<(), SequenceError> {
            if count == 0 {
                return Ok(());
            }
            match merged.last_mut() {
                Some((last, c)) if *last == bit => {
                    *c = c.checked_add(count).ok_or(SequenceError::OrderOverflow)?;
                }
                _ => merged.push((bit, count)),
            }
            Ok(())
        };
        let mut iter = tokens.iter().copied();
        match iter.next() {
            None => return Err(SequenceError::Empty),
            Some((true, count)) => {
                push(false, 1)?;
                push(true, count - 1)?;
            }
            Some((false, count)) => push(false, count)?,
        }
        for (bit, count) in iter {
            push(bit, count)?;
        }

        let isolated = match merged.last() {
            Some(&(false, count)) => {
                merged.pop();
                count
            }
            _ => 0,
        };
        if merged.is_empty() {
            return Ok(PermissiveSequence {
                connected: None,
                isolated,
            });
        }
        let runs = merged
            .chunks_exact(2)
            .map(|pair| Run::new(pair[0].1, pair[1].1));
        Ok(PermissiveSequence {
            connected: Some(GeneratingSequence::new(runs)?),
            isolated,
        })
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of levels `h`.
    pub fn levels(&self) -> usize {
        self.runs.len()
    }

    /// `T`, the number of zeros.
    pub fn total_zeros(&self) -> u64 {
        self.total_zeros
    }

    /// `S`, the number of ones.
    pub fn total_ones(&self) -> u64 {
        self.total_ones
    }

    /// Graph order `n = T + S`.
    pub fn order(&self) -> u64 {
        self.total_zeros + self.total_ones
    }

    pub fn run(&self, level: usize) -> Run {
        self.runs[level - 1]
    }

    pub fn first(&self) -> Run {
        self.runs[0]
    }

    pub fn last(&self) -> Run {
        self.runs[self.runs.len() - 1]
    }

    /// `(t_i, s_i)` pairs, convenient for assertions and JSON.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.runs.iter().map(|r| (r.zeros, r.ones)).collect()
    }

    /// The raw binary word. Allocates `n` bytes.
    pub fn to_word(&self) -> String {
        let mut word = String::with_capacity(self.order() as usize);
        for run in &self.runs {
            word.extend(std::iter::repeat('0').take(run.zeros as usize));
            word.extend(std::iter::repeat('1').take(run.ones as usize));
        }
        word
    }
}

impl fmt::Display for GeneratingSequence {
    /// Run-length notation, omitting exponents equal to one:
    /// `0^2 1 0 1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in &self.runs {
            for (bit, count) in [('0', run.zeros), ('1', run.ones)] {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                if count == 1 {
                    write!(f, "{bit}")?;
                } else {
                    write!(f, "{bit}^{count}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for GeneratingSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequence(s)
    }
}

impl Serialize for GeneratingSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GeneratingSequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(u64, u64)>::deserialize(deserializer)?;
        GeneratingSequence::new(pairs).map_err(serde::de::Error::custom)
    }
}

/// Result of a permissive parse: the connected part (absent when the word
/// has no ones) and the number of trailing isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermissiveSequence {
    pub connected: Option<GeneratingSequence>,
    pub isolated: u64,
}

/// Parses either notation into the canonical form, rejecting words that end
/// with zeros.
pub fn parse_sequence(text: &str) -> Result<GeneratingSequence, SequenceError> {
    let parsed = parse_sequence_permissive(text)?;
    if parsed.isolated > 0 {
        return Err(SequenceError::TrailingZeros {
            count: parsed.isolated,
        });
    }
    parsed.connected.ok_or(SequenceError::NoOnes)
}

/// Like [`parse_sequence`] but reports trailing zeros instead of failing.
pub fn parse_sequence_permissive(text: &str) -> Result<PermissiveSequence, SequenceError> {
    let tokens = tokenize(text)?;
    GeneratingSequence::from_tokens(&tokens)
}

fn tokenize(text: &str) -> Result<Vec<(bool, u64)>, SequenceError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    let mut open_group: Option<(usize, usize)> = None;

    while let Some((offset, ch)) = chars.next() {
        match ch {
            c if c.is_whitespace() => {}
            '0' | '1' => {
                let bit = ch == '1';
                skip_whitespace(&mut chars);
                let count = if let Some(&(caret, '^')) = chars.peek() {
                    chars.next();
                    skip_whitespace(&mut chars);
                    parse_exponent(&mut chars, caret)?
                } else {
                    1
                };
                tokens.push((bit, count));
            }
            '(' => {
                if open_group.is_some() {
                    return Err(SequenceError::UnbalancedParen { offset });
                }
                open_group = Some((offset, tokens.len()));
            }
            ')' => match open_group.take() {
                None => return Err(SequenceError::UnbalancedParen { offset }),
                Some((start, first_token)) => {
                    if tokens.len() == first_token {
                        return Err(SequenceError::EmptyGroup { offset: start });
                    }
                }
            },
            _ => return Err(SequenceError::UnexpectedChar { ch, offset }),
        }
    }
    if let Some((offset, _)) = open_group {
        return Err(SequenceError::UnbalancedParen { offset });
    }
    if tokens.is_empty() {
        return Err(SequenceError::Empty);
    }
    Ok(tokens)
}

fn skip_whitespace(chars: &mut std::iter::Peekable<std::str::CharIndices<'_>>) {
    while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
}

fn parse_exponent(
    chars: &mut std::iter::Peekable<std::str::CharIndices<'_>>,
    caret: usize,
) -> Result<u64, SequenceError> {
    let mut value: Option<u64> = None;
    while let Some((_, c)) = chars.next_if(|(_, c)| c.is_ascii_digit()) {
        let digit = u64::from(c.to_digit(10).unwrap());
        value = Some(
            value
                .unwrap_or(0)
                .checked_mul(10)
                .and_then(|v| v.checked_add(digit))
                .ok_or(SequenceError::ExponentOverflow { offset: caret })?,
        );
    }
    match value {
        None => Err(SequenceError::MissingExponent { offset: caret }),
        Some(0) => Err(SequenceError::ZeroExponent { offset: caret }),
        Some(v) => Ok(v),
    }
}
