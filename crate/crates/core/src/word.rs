//! Letters, words, rows and columns.
//!
//! A letter is a 1-based positive integer; the alphabet of rank `n` is
//! `{1, 2, …, n}` with its usual order.  A *row* is a weakly increasing
//! word, a *column* is a strictly decreasing word.  Rows and columns are
//! the building blocks of Young tableaux (see [`crate::tableau`]) and
//! carry the comparison relations that control how they stack:
//!
//! * `u ≻R v` — row `u` may sit immediately **on top of** row `v`:
//!   `|u| ≤ |v|` and `u[i] > v[i]` for every position of `u`;
//! * `u ≽R v` — the weak variant with `u[i] ≥ v[i]`;
//! * `u ≼C v` — column `u` may sit immediately **to the left of** column
//!   `v`: `|u| ≥ |v|` and, aligning both columns at the bottom,
//!   `u[i + |u| − |v|] ≤ v[i]` for every position of `v`.
//!
//! The empty row compares `≻R` against everything (vacuously), matching
//! the convention used by the row braiding.
//!
//! # Text form
//!
//! Words render as a compact digit string when every letter is ≤ 9
//! (`"3266134"`), as space-separated decimals otherwise (`"13 10 2"`),
//! and as `"e"` when empty.  Parsing accepts all three forms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A 1-based letter of the ordered alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// Creates a letter, rejecting 0.
    pub fn new(value: u32) -> Result<Letter> {
        if value == 0 {
            Err(Error::ZeroLetter)
        } else {
            Ok(Letter(value))
        }
    }

    /// The numeric value (≥ 1).
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word over the alphabet of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from letters.
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Builds a word from raw numeric values, rejecting zeros.
    pub fn from_values(values: &[u32]) -> Result<Word> {
        values.iter().map(|&v| Letter::new(v)).collect::<Result<Vec<_>>>().map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters, left to right.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Multiset of letters with multiplicities.
    pub fn content(&self) -> BTreeMap<Letter, usize> {
        let mut counts = BTreeMap::new();
        for &x in &self.0 {
            *counts.entry(x).or_insert(0) += 1;
        }
        counts
    }

    /// Largest letter value, or 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().map(|x| x.0).max().unwrap_or(0)
    }

    /// Whether the word is weakly increasing.
    pub fn is_row(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Whether the word is strictly decreasing.
    pub fn is_column(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_letters(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_letters(s).map(Word)
    }
}

/// Renders letters per the module-level text form.
pub(crate) fn fmt_letters(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "e".to_string();
    }
    if letters.iter().all(|x| x.0 <= 9) {
        letters.iter().map(|x| x.to_string()).collect()
    } else {
        letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// Parses the text form shared by words, rows and columns.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty string; use \"e\" for the empty word".into()));
    }
    if s == "e" {
        return Ok(Vec::new());
    }
    if s.contains(char::is_whitespace) {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad letter \"{tok}\"")))
                    .and_then(Letter::new)
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit '{c}' in \"{s}\"")))
                    .and_then(Letter::new)
            })
            .collect()
    }
}

/// A weakly increasing word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row(Word);

impl Row {
    /// The empty row.
    pub fn empty() -> Row {
        Row(Word::empty())
    }

    /// Validates weak monotonicity.
    pub fn new(word: Word) -> Result<Row> {
        if word.is_row() {
            Ok(Row(word))
        } else {
            Err(Error::NotARow(word.to_string()))
        }
    }

    pub fn from_values(values: &[u32]) -> Result<Row> {
        Row::new(Word::from_values(values)?)
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    /// `self ≻R below`: every letter strictly exceeds the one under it.
    pub fn stacks_on(&self, below: &Row) -> bool {
        self.len() <= below.len()
            && self.letters().iter().zip(below.letters()).all(|(a, b)| a > b)
    }

    /// `self ≽R below`: the weak variant.
    pub fn stacks_weakly_on(&self, below: &Row) -> bool {
        self.len() <= below.len()
            && self.letters().iter().zip(below.letters()).all(|(a, b)| a >= b)
    }

    /// Whether `self`'s letters form a sub-multiset of `other`'s.
    ///
    /// For weakly increasing words this is the same as being a subword.
    pub fn is_subrow_of(&self, other: &Row) -> bool {
        let mut have = other.as_word().content();
        self.letters().iter().all(|x| match have.get_mut(x) {
            Some(k) if *k > 0 => {
                *k -= 1;
                true
            }
            _ => false,
        })
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Row {
    type Err = Error;

    fn from_str(s: &str) -> Result<Row> {
        Row::new(s.parse()?)
    }
}

/// A strictly decreasing word, read top to bottom.
///
/// The derived ordering (lexicographic on the letter sequence) coincides
/// with numeric order on the subset bitmask from [`Column::mask`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column(Word);

impl Column {
    /// The empty column.
    pub fn empty() -> Column {
        Column(Word::empty())
    }

    /// Validates strict decrease.
    pub fn new(word: Word) -> Result<Column> {
        if word.is_column() {
            Ok(Column(word))
        } else {
            Err(Error::NotAColumn(word.to_string()))
        }
    }

    pub fn from_values(values: &[u32]) -> Result<Column> {
        Column::new(Word::from_values(values)?)
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    /// Topmost (largest) letter, if any.
    pub fn top(&self) -> Option<Letter> {
        self.letters().first().copied()
    }

    /// Bottommost (smallest) letter, if any.
    pub fn bottom(&self) -> Option<Letter> {
        self.letters().last().copied()
    }

    /// `self ≼C right`: aligning at the bottom, every letter of `self`
    /// is ≤ its neighbour in `right`, and `self` is at least as tall.
    pub fn fits_left_of(&self, right: &Column) -> bool {
        let (s, t) = (self.len(), right.len());
        s >= t
            && (0..t).all(|i| self.letters()[i + s - t] <= right.letters()[i])
    }

    /// Whether `self`'s letter set is a subset of `other`'s.
    pub fn is_subcolumn_of(&self, other: &Column) -> bool {
        self.letters().iter().all(|x| other.letters().contains(x))
    }

    /// Whether the column contains the letter.
    pub fn contains(&self, x: Letter) -> bool {
        self.letters().contains(&x)
    }

    /// Decodes a subset bitmask: bit `i` set ⇔ letter `i + 1` present.
    pub fn from_mask(mask: u64) -> Column {
        let letters = (0..64)
            .rev()
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| Letter(i as u32 + 1))
            .collect();
        Column(Word::new(letters))
    }

    /// Encodes the letter set as a bitmask (letters must be ≤ 64).
    pub fn mask(&self) -> Result<u64> {
        let mut mask = 0u64;
        for &x in self.letters() {
            if x.0 > 64 {
                return Err(Error::LetterOutOfRange { letter: x.0, bound: 64 });
            }
            mask |= 1 << (x.0 - 1);
        }
        Ok(mask)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Column> {
        Column::new(s.parse()?)
    }
}

/// Which comparison [`order_rel`] should apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// `≻R`, strict row stacking.
    RowStrict,
    /// `≽R`, weak row stacking.
    RowWeak,
    /// `≼C`, column juxtaposition.
    Col,
}

/// Evaluates one of the three stacking relations on raw words,
/// validating that the operands are rows (resp. columns) first.
pub fn order_rel(kind: OrderKind, u: &Word, v: &Word) -> Result<bool> {
    match kind {
        OrderKind::RowStrict => Ok(Row::new(u.clone())?.stacks_on(&Row::new(v.clone())?)),
        OrderKind::RowWeak => {
            Ok(Row::new(u.clone())?.stacks_weakly_on(&Row::new(v.clone())?))
        }
        OrderKind::Col => Ok(Column::new(u.clone())?.fits_left_of(&Column::new(v.clone())?)),
    }
}

/// All `2^n` columns over `{1..n}`, ordered by bitmask value
/// (the empty column comes first).
pub fn all_columns(n: u32) -> Vec<Column> {
    (0..(1u64 << n)).map(Column::from_mask).collect()
}

/// All rows over `{1..n}` of length ≤ `max_len`, shortest first,
/// lexicographic within a length.
pub fn all_rows_up_to(n: u32, max_len: usize) -> Vec<Row> {
    let mut rows = vec![Row::empty()];
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            let lo = *stem.last().unwrap_or(&1);
            for v in lo..=n {
                let mut longer = stem.clone();
                longer.push(v);
                next.push(longer);
            }
        }
        for values in &next {
            rows.push(Row::from_values(values).expect("generated weakly increasing"));
        }
        frontier = next;
    }
    rows
}

/// All words over `{1..n}` of length ≤ `max_len`, shortest first,
/// lexicographic within a length.
pub fn all_words_up_to(n: u32, max_len: usize) -> Vec<Word> {
    let mut words = vec![Word::empty()];
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for v in 1..=n {
                let mut longer = stem.clone();
                longer.push(v);
                next.push(longer);
            }
        }
        for values in &next {
            words.push(Word::from_values(values).expect("letters are positive"));
        }
        frontier = next;
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(w("3266134").to_string(), "3266134");
        assert_eq!(w("e"), Word::empty());
        assert_eq!(Word::empty().to_string(), "e");
        assert_eq!(w("13 10 2").to_string(), "13 10 2");
        assert_eq!(w("3 2 1"), w("321"));
        assert!("0".parse::<Word>().is_err());
        assert!("1a2".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn row_and_column_validation() {
        assert!(Row::new(w("1223")).is_ok());
        assert!(Row::new(w("21")).is_err());
        assert!(Column::new(w("321")).is_ok());
        assert!(Column::new(w("332")).is_err());
        assert!(Column::new(w("12")).is_err());
    }

    #[test]
    fn row_stacking_examples() {
        // "3" sits on "266" and "266" sits on nothing longer than itself.
        assert!(order_rel(OrderKind::RowStrict, &w("3"), &w("266")).unwrap());
        assert!(!order_rel(OrderKind::RowStrict, &w("266"), &w("3")).unwrap());
        // Equal entries pass weakly but not strictly.
        assert!(!order_rel(OrderKind::RowStrict, &w("22"), &w("22")).unwrap());
        assert!(order_rel(OrderKind::RowWeak, &w("22"), &w("22")).unwrap());
        // The empty row stacks on everything.
        assert!(order_rel(OrderKind::RowStrict, &w("e"), &w("11")).unwrap());
    }

    #[test]
    fn column_fitting_examples() {
        assert!(order_rel(OrderKind::Col, &w("21"), &w("2")).unwrap());
        assert!(!order_rel(OrderKind::Col, &w("2"), &w("21")).unwrap());
        assert!(order_rel(OrderKind::Col, &w("321"), &w("21")).unwrap());
        assert!(order_rel(OrderKind::Col, &w("31"), &w("32")).unwrap());
        assert!(!order_rel(OrderKind::Col, &w("32"), &w("31")).unwrap());
        // Any column fits left of the empty column.
        assert!(order_rel(OrderKind::Col, &w("1"), &w("e")).unwrap());
    }

    #[test]
    fn mask_round_trip_and_order() {
        let cols = all_columns(3);
        assert_eq!(cols.len(), 8);
        let shown: Vec<String> = cols.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["e", "1", "2", "21", "3", "31", "32", "321"]);
        for (i, c) in cols.iter().enumerate() {
            assert_eq!(c.mask().unwrap(), i as u64);
        }
        // Lexicographic order on the letters agrees with mask order.
        let mut sorted = cols.clone();
        sorted.sort();
        assert_eq!(sorted, cols);
    }

    #[test]
    fn enumerators_count() {
        // Rows of length ≤ 2 over {1,2,3}: 1 empty + 3 + 6.
        assert_eq!(all_rows_up_to(3, 2).len(), 10);
        // Words of length ≤ 2 over {1,2}: 1 + 2 + 4.
        assert_eq!(all_words_up_to(2, 2).len(), 7);
        assert!(all_rows_up_to(3, 3).iter().all(|r| r.as_word().is_row()));
    }

    #[test]
    fn content_counts_multiplicities() {
        let counts = w("3266134").content();
        let get = |v: u32| counts.get(&Letter::new(v).unwrap()).copied().unwrap_or(0);
        assert_eq!((get(1), get(2), get(3), get(4), get(6)), (1, 1, 2, 1, 2));
    }

    #[test]
    fn subrow_and_subcolumn() {
        let r = |s: &str| -> Row { s.parse().unwrap() };
        let c = |s: &str| -> Column { s.parse().unwrap() };
        assert!(r("26").is_subrow_of(&r("266")));
        assert!(!r("2266").is_subrow_of(&r("266")));
        assert!(c("21").is_subcolumn_of(&c("321")));
        assert!(!c("4").is_subcolumn_of(&c("321")));
        assert!(c("e").is_subcolumn_of(&c("1")));
    }
}
