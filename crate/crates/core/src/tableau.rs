//! Young tableaux in the French convention and Schensted insertion.
//!
//! A tableau is a stack of non-empty rows, shortest at the top, where
//! each row stacks strictly on the one below it (`≻R`, see
//! [`crate::word`]).  Rows are left-aligned, so columns strictly
//! decrease top to bottom and occupy a suffix of the rows.
//!
//! Two insertion procedures build tableaux:
//!
//! * [`Tableau::insert_right`] — bump into the *bottom row*: append `x`
//!   when it is ≥ the last entry, otherwise replace the leftmost entry
//!   greater than `x` and carry the replaced letter into the tableau
//!   above;
//! * [`Tableau::insert_left`] — bump into the *first column*: attach
//!   `x` on top when it is larger than the current top, otherwise
//!   replace the smallest entry ≥ `x` and carry the replaced letter
//!   into the columns to the right.
//!
//! Right insertion of a word letter by letter gives [`tableau_of_word`];
//! the product `T ∗ T′` right-inserts the row reading of `T′` into `T`.
//! Both readings (by rows, top to bottom; by columns, left to right)
//! recover the tableau: `tableau_of_word(reading(T)) == T`.
//!
//! # Text form
//!
//! Rows joined by `/`, top to bottom: `"3/266/134"`; the empty tableau
//! is `"e"`.  Each row uses the word text form of [`crate::word`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Column, Letter, Row, Word};

/// Row lengths top to bottom, e.g. `[1, 3, 3]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(pub Vec<usize>);

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, len) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{len}")?;
        }
        write!(f, "]")
    }
}

/// Which reading [`Tableau::reading`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadingMode {
    /// Concatenate rows, top to bottom.
    Rows,
    /// Concatenate columns left to right, each read top to bottom.
    Columns,
}

/// A Young tableau (French convention), stored as rows top to bottom.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Row>,
}

impl Tableau {
    /// The empty tableau.
    pub fn empty() -> Tableau {
        Tableau { rows: Vec::new() }
    }

    /// Validates that the rows are non-empty and stack strictly.
    pub fn new(rows: Vec<Row>) -> Result<Tableau> {
        if rows.iter().any(Row::is_empty) {
            return Err(Error::NotATableau("rows must be non-empty".into()));
        }
        for pair in rows.windows(2) {
            if !pair[0].stacks_on(&pair[1]) {
                return Err(Error::NotATableau(format!(
                    "\"{}\" does not stack on \"{}\"",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Tableau { rows })
    }

    /// The rows, top to bottom.
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of rows.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns (length of the bottom row).
    pub fn col_count(&self) -> usize {
        self.rows.last().map_or(0, Row::len)
    }

    /// Total number of cells.
    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Row::len).sum()
    }

    /// Row lengths, top to bottom.
    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Row::len).collect())
    }

    /// Multiset of letters.
    pub fn content(&self) -> BTreeMap<Letter, usize> {
        self.row_reading().content()
    }

    /// Schensted right insertion of a single letter (bottom-row bumping).
    pub fn insert_right(&self, x: Letter) -> Tableau {
        let mut rows: Vec<Vec<Letter>> =
            self.rows.iter().map(|r| r.letters().to_vec()).collect();
        let mut carry = x;
        for i in (0..rows.len()).rev() {
            let row = &mut rows[i];
            if row.last().is_none_or(|&last| carry >= last) {
                row.push(carry);
                return Tableau::from_letter_rows(rows);
            }
            let j = row.partition_point(|&y| y <= carry);
            std::mem::swap(&mut row[j], &mut carry);
        }
        rows.insert(0, vec![carry]);
        Tableau::from_letter_rows(rows)
    }

    /// Left insertion of a single letter (first-column bumping).
    ///
    /// Computes the product `row(x) ∗ self`, dual to
    /// [`Tableau::insert_right`].
    pub fn insert_left(&self, x: Letter) -> Tableau {
        let mut cols: Vec<Vec<Letter>> =
            self.columns().iter().map(|c| c.letters().to_vec()).collect();
        let mut carry = x;
        for col in &mut cols {
            if carry > col[0] {
                col.insert(0, carry);
                return Tableau::from_letter_cols(cols);
            }
            // Smallest entry ≥ carry sits deepest among such entries.
            let k = col.partition_point(|&y| y >= carry) - 1;
            std::mem::swap(&mut col[k], &mut carry);
        }
        cols.push(vec![carry]);
        Tableau::from_letter_cols(cols)
    }

    /// The product `self ∗ rhs`: right-insert the row reading of `rhs`.
    pub fn product(&self, rhs: &Tableau) -> Tableau {
        let mut acc = self.clone();
        for &x in rhs.row_reading().letters() {
            acc = acc.insert_right(x);
        }
        acc
    }

    /// Row reading: rows concatenated top to bottom.
    pub fn row_reading(&self) -> Word {
        let letters = self.rows.iter().flat_map(|r| r.letters().iter().copied()).collect();
        Word::new(letters)
    }

    /// Column reading: columns left to right, each top to bottom.
    pub fn column_reading(&self) -> Word {
        let letters = self
            .columns()
            .iter()
            .flat_map(|c| c.letters().iter().copied())
            .collect();
        Word::new(letters)
    }

    pub fn reading(&self, mode: ReadingMode) -> Word {
        match mode {
            ReadingMode::Rows => self.row_reading(),
            ReadingMode::Columns => self.column_reading(),
        }
    }

    /// The columns, left to right (heights weakly decrease).
    pub fn columns(&self) -> Vec<Column> {
        let ncols = self.col_count();
        (0..ncols)
            .map(|j| {
                let letters: Vec<Letter> = self
                    .rows
                    .iter()
                    .filter(|r| r.len() > j)
                    .map(|r| r.letters()[j])
                    .collect();
                Column::new(Word::new(letters)).expect("tableau columns strictly decrease")
            })
            .collect()
    }

    /// Rebuilds a tableau from its columns, validating everything.
    pub fn from_columns(cols: &[Column]) -> Result<Tableau> {
        if cols.is_empty() {
            return Ok(Tableau::empty());
        }
        if cols.iter().any(Column::is_empty) {
            return Err(Error::NotATableau("columns must be non-empty".into()));
        }
        let heights: Vec<usize> = cols.iter().map(Column::len).collect();
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotATableau("column heights must weakly decrease".into()));
        }
        let nrows = heights[0];
        let mut rows = Vec::with_capacity(nrows);
        for i in 0..nrows {
            let mut letters = Vec::new();
            for (c, &h) in cols.iter().zip(&heights) {
                if h < nrows - i {
                    break; // heights weakly decrease: the rest are too short
                }
                letters.push(c.letters()[i - (nrows - h)]);
            }
            rows.push(Row::new(Word::new(letters)).map_err(|_| {
                Error::NotATableau("columns do not align into weakly increasing rows".into())
            })?);
        }
        Tableau::new(rows)
    }

    /// A one-row tableau (or the empty tableau for an empty row).
    pub fn from_row(row: &Row) -> Tableau {
        if row.is_empty() {
            Tableau::empty()
        } else {
            Tableau { rows: vec![row.clone()] }
        }
    }

    /// A one-column tableau (or the empty tableau for an empty column).
    pub fn from_column(col: &Column) -> Tableau {
        if col.is_empty() {
            Tableau::empty()
        } else {
            Tableau::from_columns(std::slice::from_ref(col)).expect("single column is a tableau")
        }
    }

    /// The bottom `m` rows as a tableau (suffix of the row stack).
    pub fn bottom_rows(&self, m: usize) -> Tableau {
        Tableau { rows: self.rows[self.rows.len() - m..].to_vec() }
    }

    /// Everything above the bottom `m` rows.
    pub fn top_rows_above(&self, m: usize) -> Tableau {
        Tableau { rows: self.rows[..self.rows.len() - m].to_vec() }
    }

    /// The leftmost `m` columns as a tableau.
    pub fn left_columns(&self, m: usize) -> Tableau {
        Tableau::from_columns(&self.columns()[..m]).expect("column prefix stays valid")
    }

    /// Everything right of the leftmost `m` columns.
    pub fn right_columns_after(&self, m: usize) -> Tableau {
        Tableau::from_columns(&self.columns()[m..]).expect("column suffix stays valid")
    }

    fn from_letter_rows(rows: Vec<Vec<Letter>>) -> Tableau {
        let rows = rows
            .into_iter()
            .map(|letters| Row::new(Word::new(letters)).expect("insertion keeps rows sorted"))
            .collect();
        Tableau::new(rows).expect("insertion preserves the tableau conditions")
    }

    fn from_letter_cols(cols: Vec<Vec<Letter>>) -> Tableau {
        let cols: Vec<Column> = cols
            .into_iter()
            .map(|letters| {
                Column::new(Word::new(letters)).expect("insertion keeps columns sorted")
            })
            .collect();
        Tableau::from_columns(&cols).expect("insertion preserves the tableau conditions")
    }
}

/// Builds the tableau of a word by repeated right insertion.
pub fn tableau_of_word(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    for &x in w.letters() {
        t = t.insert_right(x);
    }
    t
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tableau> {
        let s = s.trim();
        if s == "e" {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split('/')
            .map(|part| part.parse::<Row>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}
