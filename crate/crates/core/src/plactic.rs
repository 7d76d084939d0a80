//! The plactic congruence: Knuth moves, canonical forms, centrality.
//!
//! Two words are *plactically equivalent* when one turns into the other
//! by elementary Knuth moves on adjacent triples:
//!
//! * `x z y ~ z x y` when `x ≤ y < z` (swap the first two letters);
//! * `y x z ~ y z x` when `x < y ≤ z` (swap the last two letters).
//!
//! Every congruence class contains exactly one tableau reading, so
//! [`plactic_equal`] simply compares `tableau_of_word` on both sides.
//! [`knuth_class`] grows the full class by breadth-first search and is
//! the independent oracle for that shortcut.
//!
//! The length of the longest weakly increasing subword is a class
//! invariant: it equals the bottom-row length of the tableau.
//! [`longest_nondec_subword`] computes it directly by dynamic
//! programming, without touching tableaux.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::tableau::{tableau_of_word, Tableau};
use crate::word::{Letter, Row, Word};

/// All words reachable from `w` by a single Knuth move, deduplicated
/// and sorted.
pub fn knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    let letters = w.letters();
    let mut out = BTreeSet::new();
    for i in 0..letters.len().saturating_sub(2) {
        let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
        // x z y ~ z x y with x ≤ y < z, in either direction: the first
        // two letters of the window swap.
        if (a <= c && c < b) || (b <= c && c < a) {
            let mut next = letters.to_vec();
            next.swap(i, i + 1);
            out.insert(Word::new(next));
        }
        // y x z ~ y z x with x < y ≤ z, in either direction: the last
        // two letters of the window swap.
        if (b < a && a <= c) || (c < a && a <= b) {
            let mut next = letters.to_vec();
            next.swap(i + 1, i + 2);
            out.insert(Word::new(next));
        }
    }
    out
}

/// The full Knuth congruence class of `w`, by breadth-first search.
///
/// The class of a word of length `len` can be large; `max_len` guards
/// against runaway inputs (moves never change the length).
pub fn knuth_class(w: &Word, max_len: usize) -> Result<BTreeSet<Word>> {
    if w.len() > max_len {
        return Err(Error::ResourceLimit(format!(
            "word of length {} exceeds the class-search cap {}",
            w.len(),
            max_len
        )));
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in knuth_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Whether two words are plactically equivalent (equal tableaux).
pub fn plactic_equal(a: &Word, b: &Word) -> bool {
    tableau_of_word(a) == tableau_of_word(b)
}

/// Length of the longest weakly increasing subword, by dynamic
/// programming over end positions.
pub fn longest_nondec_subword(w: &Word) -> usize {
    let letters = w.letters();
    let mut best_ending = vec![0usize; letters.len()];
    let mut best = 0;
    for i in 0..letters.len() {
        let mut here = 1;
        for j in 0..i {
            if letters[j] <= letters[i] {
                here = here.max(best_ending[j] + 1);
            }
        }
        best_ending[i] = here;
        best = best.max(here);
    }
    best
}

/// Whether the class of `w` is central in the plactic monoid of rank
/// `n`: commutes with every generator letter.
pub fn is_central(w: &Word, n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::LetterOutOfRange { letter: 0, bound: 0 });
    }
    if w.max_letter() > n {
        return Err(Error::LetterOutOfRange { letter: w.max_letter(), bound: n });
    }
    let t = tableau_of_word(w);
    for v in 1..=n {
        let a = Word::from_values(&[v])?;
        let left = tableau_of_word(&a).product(&t);
        let right = t.product(&tableau_of_word(&a));
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `t` is a rectangular power of the full column `n(n−1)…1`:
/// `n` rows of equal length, row `i` (top to bottom) constantly `n − i`.
///
/// Central classes are exactly these powers; [`is_central`] is checked
/// against this characterization in the test suite.
pub fn is_full_column_power(t: &Tableau, n: u32) -> bool {
    if t.is_empty() {
        return true; // the empty power
    }
    if t.row_count() != n as usize {
        return false;
    }
    let width = t.col_count();
    t.rows().iter().enumerate().all(|(i, row)| {
        row.len() == width && row.letters().iter().all(|x| x.value() == n - i as u32)
    })
}

/// The tableau of the full column word `n(n−1)…1` repeated `power`
/// times; handy for building central elements in tests.
pub fn full_column_power(n: u32, power: usize) -> Tableau {
    let rows = (1..=n)
        .rev()
        .map(|v| Row::new(Word::new(vec![Letter::new(v).expect("v ≥ 1"); power])).unwrap())
        .collect();
    if power == 0 {
        return Tableau::empty();
    }
    Tableau::new(rows).expect("constant rows of equal length stack")
}
