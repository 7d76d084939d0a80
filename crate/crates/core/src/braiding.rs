//! Braidings built from the tableau product, and their normal forms.
//!
//! The product of two one-row tableaux has at most two rows, and the
//! product of two one-column tableaux has at most two columns.  Reading
//! the outcome back off therefore yields *braidings* — maps
//! `σ: X × X → X × X` satisfying the Yang–Baxter equation — on rows
//! and on columns:
//!
//! * [`sigma_row`]: `σ(r1, r2)` is the two-row product split as
//!   `(top, bottom)`, or `(e, r1·r2)` when the product is a single row;
//! * [`sigma_col`]: `σ(c1, c2)` is the two-column product split as
//!   `(left, right)`, or `(merged, e)` when it is a single column.
//!
//! Both braidings are idempotent, and the pairs they fix are exactly
//! the adjacent row pairs (resp. column pairs) of valid tableaux.
//! Decorated variants ([`sigma_decorated`]) act on tableaux carrying a
//! multiplicity `α` of phantom empty factors and restore invertibility
//! information lost when rows or columns merge.
//!
//! A word in the braid generators `b_i` acts on width-`k` tuples with
//! `b_i` braiding slots `(i, i+1)`; words act right to left.  The
//! half-twist word Δ ([`delta_word`]) normalizes any tuple in one pass
//! ([`delta_normalize`]); dropping unit entries afterwards gives the
//! reduced normal form, which for letter tuples is precisely the row
//! (resp. column) factorization of the tableau of the word.
//!
//! [`verify_braided_set`], [`verify_observations`] and
//! [`verify_monoid_compat`] check the axioms and the structural
//! side-conditions exhaustively over bounded domains.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::reduced_word;
use crate::report::{Check, VerifyReport};
use crate::tableau::{tableau_of_word, Tableau};
use crate::word::{all_columns, all_rows_up_to, all_words_up_to, Column, Row, Word};

/// Selects the row-sided or column-sided construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidKind {
    Row,
    Col,
}

impl fmt::Display for BraidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidKind::Row => f.write_str("row"),
            BraidKind::Col => f.write_str("col"),
        }
    }
}

/// The row braiding: split the product tableau `r1 ∗ r2` back into
/// rows, top first; a single-row product returns `(e, r1·r2)`.
pub fn sigma_row(r1: &Row, r2: &Row) -> (Row, Row) {
    let p = Tableau::from_row(r1).product(&Tableau::from_row(r2));
    if p.row_count() == 2 {
        (p.rows()[0].clone(), p.rows()[1].clone())
    } else {
        let merged = Row::new(r1.as_word().concat(r2.as_word()))
            .expect("a one-row product is the sorted concatenation");
        debug_assert_eq!(p, Tableau::from_row(&merged));
        (Row::empty(), merged)
    }
}

/// The column braiding: split the product tableau `c1 ∗ c2` back into
/// columns, left first; a single-column product returns `(merged, e)`.
pub fn sigma_col(c1: &Column, c2: &Column) -> (Column, Column) {
    let p = Tableau::from_column(c1).product(&Tableau::from_column(c2));
    let mut cols = p.columns();
    match cols.len() {
        0 => (Column::empty(), Column::empty()),
        1 => (cols.pop().unwrap(), Column::empty()),
        2 => {
            let right = cols.pop().unwrap();
            (cols.pop().unwrap(), right)
        }
        n => unreachable!("product of two columns has {n} > 2 columns"),
    }
}

/// Dispatches [`sigma_row`]/[`sigma_col`] on raw words, validating the
/// operands.
pub fn sigma_words(kind: BraidKind, u: &Word, v: &Word) -> Result<(Word, Word)> {
    match kind {
        BraidKind::Row => {
            let (a, b) = sigma_row(&Row::new(u.clone())?, &Row::new(v.clone())?);
            Ok((a.into_word(), b.into_word()))
        }
        BraidKind::Col => {
            let (a, b) = sigma_col(&Column::new(u.clone())?, &Column::new(v.clone())?);
            Ok((a.into_word(), b.into_word()))
        }
    }
}

/// A tableau decorated with a multiplicity of phantom empty factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedTableau {
    pub tableau: Tableau,
    pub alpha: u32,
}

impl DecoratedTableau {
    pub fn new(tableau: Tableau, alpha: u32) -> DecoratedTableau {
        DecoratedTableau { tableau, alpha }
    }

    /// The unit `(∅, 0)`.
    pub fn unit() -> DecoratedTableau {
        DecoratedTableau::new(Tableau::empty(), 0)
    }

    /// Row level `rows(T) + α` (resp. column level `cols(T) + α`): the
    /// quantity the decorated braidings conserve per side.
    pub fn level(&self, kind: BraidKind) -> usize {
        match kind {
            BraidKind::Row => self.tableau.row_count() + self.alpha as usize,
            BraidKind::Col => self.tableau.col_count() + self.alpha as usize,
        }
    }
}

impl fmt::Display for DecoratedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tableau, self.alpha)
    }
}

/// The decorated product: tableaux multiply and the decorations absorb
/// the rows (resp. columns) lost to merging, so levels add.
pub fn decorated_product(
    kind: BraidKind,
    u: &DecoratedTableau,
    v: &DecoratedTableau,
) -> DecoratedTableau {
    let p = u.tableau.product(&v.tableau);
    let count = |t: &Tableau| match kind {
        BraidKind::Row => t.row_count(),
        BraidKind::Col => t.col_count(),
    };
    let alpha =
        u.alpha as usize + v.alpha as usize + count(&u.tableau) + count(&v.tableau) - count(&p);
    DecoratedTableau::new(p, alpha as u32)
}

/// The decorated braiding on `(tableau, α)` pairs.
///
/// Row kind: the product `P = T1 ∗ T2` splits horizontally so that the
/// *second* output keeps exactly `rows(T1) + α1` rows (decoration 0);
/// if `P` is too shallow the first output degenerates to `(∅, α2 +
/// rows(T2))` and the missing depth goes into the second decoration.
/// Column kind is the left–right mirror.  Levels are conserved
/// per side and the braiding satisfies `σ³ = σ`.
pub fn sigma_decorated(
    kind: BraidKind,
    u: &DecoratedTableau,
    v: &DecoratedTableau,
) -> (DecoratedTableau, DecoratedTableau) {
    let p = u.tableau.product(&v.tableau);
    match kind {
        BraidKind::Row => {
            let m1 = u.alpha as usize + u.tableau.row_count();
            if p.row_count() >= m1 {
                let t1 = p.bottom_rows(m1);
                let t2 = p.top_rows_above(m1);
                let a2 = v.alpha as usize + v.tableau.row_count() - t2.row_count();
                (DecoratedTableau::new(t2, a2 as u32), DecoratedTableau::new(t1, 0))
            } else {
                let a2 = v.alpha as usize + v.tableau.row_count();
                let a1 = m1 - p.row_count();
                (
                    DecoratedTableau::new(Tableau::empty(), a2 as u32),
                    DecoratedTableau::new(p, a1 as u32),
                )
            }
        }
        BraidKind::Col => {
            let m2 = v.alpha as usize + v.tableau.col_count();
            if p.col_count() >= m2 {
                let t2 = p.left_columns(m2);
                let t1 = p.right_columns_after(m2);
                let a1 = u.alpha as usize + u.tableau.col_count() - t1.col_count();
                (DecoratedTableau::new(t2, 0), DecoratedTableau::new(t1, a1 as u32))
            } else {
                let a1 = u.alpha as usize + u.tableau.col_count();
                let a2 = m2 - p.col_count();
                (
                    DecoratedTableau::new(p, a2 as u32),
                    DecoratedTableau::new(Tableau::empty(), a1 as u32),
                )
            }
        }
    }
}

/// A word in the braid generators; entry `i` stands for `b_i`, which
/// braids tuple slots `(i, i+1)`, 1-based.  Words act right to left.
pub type BraidWord = Vec<usize>;

/// Applies a braid word to a tuple, rightmost generator first.
pub fn apply_braid_word<X: Clone>(
    sigma: &dyn Fn(&X, &X) -> (X, X),
    word: &[usize],
    tuple: &[X],
) -> Result<Vec<X>> {
    let mut state = tuple.to_vec();
    for &g in word.iter().rev() {
        if g == 0 || g >= state.len() {
            return Err(Error::BadGenerator { index: g, width: state.len() });
        }
        let (a, b) = sigma(&state[g - 1], &state[g]);
        state[g - 1] = a;
        state[g] = b;
    }
    Ok(state)
}

/// The half-twist word `Δ_k = b_1 (b_2 b_1) ⋯ (b_{k−1} ⋯ b_2 b_1)`.
pub fn delta_word(k: usize) -> BraidWord {
    let mut word = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for block in 1..k {
        word.extend((1..=block).rev());
    }
    word
}

/// Normalizes a tuple by one pass of the half-twist word.
///
/// For idempotent braidings the result is the unique normal form of
/// the input in the braid orbit.
pub fn delta_normalize<X: Clone>(sigma: &dyn Fn(&X, &X) -> (X, X), tuple: &[X]) -> Vec<X> {
    apply_braid_word(sigma, &delta_word(tuple.len()), tuple)
        .expect("delta word generators fit the tuple width")
}

/// Whether every adjacent pair is fixed by the braiding.
pub fn is_normal<X: Clone + PartialEq>(sigma: &dyn Fn(&X, &X) -> (X, X), tuple: &[X]) -> bool {
    tuple.windows(2).all(|w| sigma(&w[0], &w[1]) == (w[0].clone(), w[1].clone()))
}

/// [`delta_normalize`], then erase unit entries.
pub fn reduced_normal_form<X: Clone + PartialEq>(
    sigma: &dyn Fn(&X, &X) -> (X, X),
    unit: &X,
    tuple: &[X],
) -> Vec<X> {
    delta_normalize(sigma, tuple).into_iter().filter(|x| x != unit).collect()
}

/// The reduced row normal form of a word's letters: equals the rows of
/// `tableau_of_word(w)`, top to bottom.
pub fn row_factorization(w: &Word) -> Vec<Row> {
    let letters: Vec<Row> = w
        .letters()
        .iter()
        .map(|&x| Row::new(Word::new(vec![x])).expect("single letters are rows"))
        .collect();
    reduced_normal_form(&|a: &Row, b: &Row| sigma_row(a, b), &Row::empty(), &letters)
}

/// The reduced column normal form of a word's letters: equals the
/// columns of `tableau_of_word(w)`, left to right.
pub fn column_factorization(w: &Word) -> Vec<Column> {
    let letters: Vec<Column> = w
        .letters()
        .iter()
        .map(|&x| Column::new(Word::new(vec![x])).expect("single letters are columns"))
        .collect();
    reduced_normal_form(&|a: &Column, b: &Column| sigma_col(a, b), &Column::empty(), &letters)
}

/// Braid word realizing the block rotation that carries the last `m`
/// slots of a width-`n + m` tuple to the front.
pub fn block_swap_word(n: usize, m: usize) -> BraidWord {
    let mut dest = Vec::with_capacity(n + m);
    dest.extend(m..m + n);
    dest.extend(0..m);
    reduced_word(&dest).expect("block rotation is a permutation")
}

/// Product of normal tuples via "braid, then concatenate": braids the
/// right block across the left one.  For idempotent braidings this
/// matches [`delta_normalize`] of the concatenation.
pub fn braided_concat_product<X: Clone>(
    sigma: &dyn Fn(&X, &X) -> (X, X),
    left: &[X],
    right: &[X],
) -> Vec<X> {
    let mut tuple = left.to_vec();
    tuple.extend_from_slice(right);
    apply_braid_word(sigma, &block_swap_word(left.len(), right.len()), &tuple)
        .expect("block word generators fit the tuple width")
}

/// A boxed braiding, stored by [`BraidedSetSpec`].
type BoxedSigma<X> = Box<dyn Fn(&X, &X) -> (X, X)>;

/// A braided set presented for exhaustive verification: a bounded
/// domain, a distinguished unit, and the braiding itself.
pub struct BraidedSetSpec<X> {
    pub name: String,
    pub domain: Vec<X>,
    pub unit: X,
    sigma: BoxedSigma<X>,
}

impl<X: Clone> BraidedSetSpec<X> {
    pub fn new(
        name: impl Into<String>,
        domain: Vec<X>,
        unit: X,
        sigma: impl Fn(&X, &X) -> (X, X) + 'static,
    ) -> BraidedSetSpec<X> {
        BraidedSetSpec { name: name.into(), domain, unit, sigma: Box::new(sigma) }
    }

    pub fn sigma(&self, a: &X, b: &X) -> (X, X) {
        (self.sigma)(a, b)
    }

    /// The braiding as a plain closure, for the braid-word helpers.
    pub fn sigma_fn(&self) -> impl Fn(&X, &X) -> (X, X) + '_ {
        move |a, b| (self.sigma)(a, b)
    }
}

/// Columns over `{1..n}` with [`sigma_col`].
pub fn col_braided_set(n: u32) -> BraidedSetSpec<Column> {
    BraidedSetSpec::new(format!("col[n={n}]"), all_columns(n), Column::empty(), sigma_col)
}

/// Rows over `{1..n}` of length ≤ `max_len` with [`sigma_row`].
pub fn row_braided_set(n: u32, max_len: usize) -> BraidedSetSpec<Row> {
    BraidedSetSpec::new(
        format!("row[n={n},len<={max_len}]"),
        all_rows_up_to(n, max_len),
        Row::empty(),
        sigma_row,
    )
}

/// Tableaux of words of length ≤ `max_word_len` with the associativity
/// braiding `σ(v, w) = (∅, v ∗ w)`, whose braided cohomology is the
/// Hochschild theory; used as a cross-check target.
pub fn assoc_braided_set(n: u32, max_word_len: usize) -> BraidedSetSpec<Tableau> {
    BraidedSetSpec::new(
        format!("assoc[n={n},len<={max_word_len}]"),
        tableaux_up_to(n, max_word_len),
        Tableau::empty(),
        |a, b| (Tableau::empty(), a.product(b)),
    )
}

/// Decorated tableaux with [`sigma_decorated`].
pub fn decorated_braided_set(
    kind: BraidKind,
    n: u32,
    max_word_len: usize,
    alpha_max: u32,
) -> BraidedSetSpec<DecoratedTableau> {
    let mut domain = Vec::new();
    for t in tableaux_up_to(n, max_word_len) {
        for alpha in 0..=alpha_max {
            domain.push(DecoratedTableau::new(t.clone(), alpha));
        }
    }
    BraidedSetSpec::new(
        format!("decorated-{kind}[n={n},len<={max_word_len},alpha<={alpha_max}]"),
        domain,
        DecoratedTableau::unit(),
        move |a, b| sigma_decorated(kind, a, b),
    )
}

/// All distinct tableaux of words of length ≤ `max_len`, sorted.
pub fn tableaux_up_to(n: u32, max_len: usize) -> Vec<Tableau> {
    let mut set = std::collections::BTreeSet::new();
    for w in all_words_up_to(n, max_len) {
        set.insert(tableau_of_word(&w));
    }
    set.into_iter().collect()
}

/// Options for [`verify_braided_set`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Widest normal tuples examined by the unit-drop check.
    pub max_normal_width: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { max_normal_width: 4 }
    }
}

/// Exhaustively checks the braided-set axioms over the spec's domain:
/// the Yang–Baxter equation on triples, idempotency on pairs, and the
/// two pseudo-unit axioms (unit outputs; dropping a unit entry from a
/// normal tuple keeps it normal).
pub fn verify_braided_set<X>(spec: &BraidedSetSpec<X>, options: VerifyOptions) -> VerifyReport
where
    X: Clone + Eq + fmt::Display,
{
    let mut ybe = Check::new("yang_baxter");
    let mut idem = Check::new("idempotent");
    let mut unit_out = Check::new("unit_outputs");
    let mut unit_drop = Check::new("unit_drop_keeps_normal");

    let s = |a: &X, b: &X| spec.sigma(a, b);
    let s12 = |t: &mut [X]| {
        let (a, b) = s(&t[0], &t[1]);
        t[0] = a;
        t[1] = b;
    };
    let s23 = |t: &mut [X]| {
        let (a, b) = s(&t[1], &t[2]);
        t[1] = a;
        t[2] = b;
    };

    for x in &spec.domain {
        for y in &spec.domain {
            let out = s(x, y);
            let again = s(&out.0, &out.1);
            idem.case(again == out, || format!("({x}, {y})"));

            for z in &spec.domain {
                let mut lhs = [x.clone(), y.clone(), z.clone()];
                s12(&mut lhs);
                s23(&mut lhs);
                s12(&mut lhs);
                let mut rhs = [x.clone(), y.clone(), z.clone()];
                s23(&mut rhs);
                s12(&mut rhs);
                s23(&mut rhs);
                ybe.case(lhs == rhs, || format!("({x}, {y}, {z})"));
            }
        }
        let left = s(&spec.unit, x);
        let right = s(x, &spec.unit);
        let swapped = (x.clone(), spec.unit.clone());
        let kept = (spec.unit.clone(), x.clone());
        unit_out.case(left == swapped || left == kept, || format!("(1, {x})"));
        unit_out.case(right == swapped || right == kept, || format!("({x}, 1)"));
    }

    // Pseudo-unit axiom (2): enumerate normal tuples width by width and
    // drop each unit occurrence.
    let sigma_ref: &dyn Fn(&X, &X) -> (X, X) = &|a, b| spec.sigma(a, b);
    let mut frontier: Vec<Vec<X>> = spec.domain.iter().map(|x| vec![x.clone()]).collect();
    for _ in 2..=options.max_normal_width {
        let mut next = Vec::new();
        for stem in &frontier {
            let last = stem.last().expect("stems are non-empty");
            for x in &spec.domain {
                if s(last, x) == (last.clone(), x.clone()) {
                    let mut longer = stem.clone();
                    longer.push(x.clone());
                    next.push(longer);
                }
            }
        }
        for tuple in &next {
            if !tuple.contains(&spec.unit) {
                continue;
            }
            for (i, entry) in tuple.iter().enumerate() {
                if *entry == spec.unit {
                    let mut dropped = tuple.clone();
                    dropped.remove(i);
                    unit_drop.case(is_normal(sigma_ref, &dropped), || {
                        let parts: Vec<String> =
                            tuple.iter().map(ToString::to_string).collect();
                        format!("drop slot {} of ({})", i + 1, parts.join(", "))
                    });
                }
            }
        }
        frontier = next;
    }

    VerifyReport::new(
        format!("braided-set {}", spec.name),
        vec![ybe.finish(), idem.finish(), unit_out.finish(), unit_drop.finish()],
    )
}

/// Exhaustively checks the structural observations about σ outputs:
/// sub-multiset/subset containments, stacking of the outputs, and weak
/// invertibility (any three of `a1, a2, a3, a4` with `σ(a1, a2) =
/// (a3, a4)` determine the fourth; for rows, `(a1, a4)` even determine
/// the remaining two).  Columns additionally satisfy the swap law
/// `σ(c1, c2) = (c2, c1)` exactly when `c1` is a subcolumn of `c2`.
pub fn verify_observations(kind: BraidKind, n: u32, max_row_len: usize) -> VerifyReport {
    match kind {
        BraidKind::Row => verify_row_observations(n, max_row_len),
        BraidKind::Col => verify_col_observations(n),
    }
}

fn verify_row_observations(n: u32, max_len: usize) -> VerifyReport {
    let domain = all_rows_up_to(n, max_len);
    let mut sub1 = Check::new("first_output_subrow_of_first_input");
    let mut sub2 = Check::new("second_input_subrow_of_second_output");
    let mut stack = Check::new("outputs_stack");
    let mut over = Check::new("first_output_over_second_input");
    let mut weak = Check::new("weak_domination_i3_or_j4");
    let mut inv_left = Check::new("inverse_determines_second_input");
    let mut inv_right = Check::new("inverse_determines_first_input");
    let mut guillotine = Check::new("first_input_and_last_output_determine_rest");

    use std::collections::BTreeMap;
    let mut by_out_and_a1: BTreeMap<(Row, Row, Row), Vec<Row>> = BTreeMap::new();
    let mut by_out_and_a2: BTreeMap<(Row, Row, Row), Vec<Row>> = BTreeMap::new();
    let mut by_a1_a4: BTreeMap<(Row, Row), Vec<(Row, Row)>> = BTreeMap::new();

    for r1 in &domain {
        for r2 in &domain {
            let (r3, r4) = sigma_row(r1, r2);
            let tag = || format!("({r1}, {r2}) -> ({r3}, {r4})");
            sub1.case(r3.is_subrow_of(r1), tag);
            sub2.case(r2.is_subrow_of(&r4), tag);
            stack.case(r3.stacks_on(&r4), tag);
            over.case(r3.stacks_on(r2), tag);
            let weak_ok = r3.stacks_weakly_on(r1)
                && r3.stacks_weakly_on(r2)
                && r3.stacks_weakly_on(&r4)
                && r1.stacks_weakly_on(&r4)
                && r2.stacks_weakly_on(&r4);
            weak.case(weak_ok, tag);
            by_out_and_a1
                .entry((r1.clone(), r3.clone(), r4.clone()))
                .or_default()
                .push(r2.clone());
            by_out_and_a2
                .entry((r2.clone(), r3.clone(), r4.clone()))
                .or_default()
                .push(r1.clone());
            by_a1_a4.entry((r1.clone(), r4.clone())).or_default().push((r2.clone(), r3.clone()));
        }
    }
    for ((a1, a3, a4), others) in by_out_and_a1 {
        inv_left.case(others.len() == 1, || format!("a1={a1}, out=({a3}, {a4})"));
    }
    for ((a2, a3, a4), others) in by_out_and_a2 {
        inv_right.case(others.len() == 1, || format!("a2={a2}, out=({a3}, {a4})"));
    }
    for ((a1, a4), pairs) in by_a1_a4 {
        let all_same = pairs.windows(2).all(|w| w[0] == w[1]);
        guillotine.case(all_same, || format!("a1={a1}, a4={a4}"));
    }

    VerifyReport::new(
        format!("observations row[n={n},len<={max_len}]"),
        vec![
            sub1.finish(),
            sub2.finish(),
            stack.finish(),
            over.finish(),
            weak.finish(),
            inv_left.finish(),
            inv_right.finish(),
            guillotine.finish(),
        ],
    )
}

fn verify_col_observations(n: u32) -> VerifyReport {
    let domain = all_columns(n);
    let mut sub1 = Check::new("first_input_subcolumn_of_first_output");
    let mut sub2 = Check::new("second_output_subcolumn_of_second_input");
    let mut fits = Check::new("fits_left_i3_or_j4");
    let mut swap = Check::new("swap_iff_subcolumn");
    let mut inv_left = Check::new("inverse_determines_second_input");
    let mut inv_right = Check::new("inverse_determines_first_input");

    use std::collections::BTreeMap;
    let mut by_out_and_a1: BTreeMap<(Column, Column, Column), Vec<Column>> = BTreeMap::new();
    let mut by_out_and_a2: BTreeMap<(Column, Column, Column), Vec<Column>> = BTreeMap::new();

    for c1 in &domain {
        for c2 in &domain {
            let (c3, c4) = sigma_col(c1, c2);
            let tag = || format!("({c1}, {c2}) -> ({c3}, {c4})");
            sub1.case(c1.is_subcolumn_of(&c3), tag);
            sub2.case(c4.is_subcolumn_of(c2), tag);
            let fits_ok = c3.fits_left_of(c1)
                && c3.fits_left_of(c2)
                && c3.fits_left_of(&c4)
                && c1.fits_left_of(&c4)
                && c2.fits_left_of(&c4);
            fits.case(fits_ok, tag);
            let swapped = (c3.clone(), c4.clone()) == (c2.clone(), c1.clone());
            swap.case(swapped == c1.is_subcolumn_of(c2), tag);
            by_out_and_a1
                .entry((c1.clone(), c3.clone(), c4.clone()))
                .or_default()
                .push(c2.clone());
            by_out_and_a2
                .entry((c2.clone(), c3.clone(), c4.clone()))
                .or_default()
                .push(c1.clone());
        }
    }
    for ((a1, a3, a4), others) in by_out_and_a1 {
        inv_left.case(others.len() == 1, || format!("a1={a1}, out=({a3}, {a4})"));
    }
    for ((a2, a3, a4), others) in by_out_and_a2 {
        inv_right.case(others.len() == 1, || format!("a2={a2}, out=({a3}, {a4})"));
    }

    VerifyReport::new(
        format!("observations col[n={n}]"),
        vec![
            sub1.finish(),
            sub2.finish(),
            fits.finish(),
            swap.finish(),
            inv_left.finish(),
            inv_right.finish(),
        ],
    )
}

/// Exhaustively checks that the decorated braiding and the decorated
/// product form a braided commutative monoid: the two product/braiding
/// exchange laws, commutativity through the braiding, transparency of
/// the unit, `σ³ = σ`, idempotency on each fixed level, and
/// subadditivity of the row/column count under products.
pub fn verify_monoid_compat(
    kind: BraidKind,
    n: u32,
    max_word_len: usize,
    alpha_max: u32,
) -> VerifyReport {
    let spec = decorated_braided_set(kind, n, max_word_len, alpha_max);
    let domain = &spec.domain;
    let s = |a: &DecoratedTableau, b: &DecoratedTableau| sigma_decorated(kind, a, b);
    let mul = |a: &DecoratedTableau, b: &DecoratedTableau| decorated_product(kind, a, b);

    let mut left_exchange = Check::new("product_braids_left");
    let mut right_exchange = Check::new("product_braids_right");
    let mut commute = Check::new("braided_commutativity");
    let mut unit = Check::new("unit_transparent");
    let mut cubed = Check::new("sigma_cubed_is_sigma");
    let mut level_idem = Check::new("level_restriction_idempotent");
    let mut subadd = Check::new("size_subadditive");

    for u in domain {
        let e = DecoratedTableau::unit();
        unit.case(s(&e, u) == (u.clone(), e.clone()) && s(u, &e) == (e.clone(), u.clone()), || {
            format!("{u}")
        });
        for v in domain {
            let (w1, v1) = s(u, v);
            commute.case(mul(&w1, &v1) == mul(u, v), || format!("({u}, {v})"));

            let once = s(u, v);
            let twice = s(&once.0, &once.1);
            let thrice = s(&twice.0, &twice.1);
            cubed.case(thrice == once, || format!("({u}, {v})"));
            if u.level(kind) == v.level(kind) {
                level_idem.case(twice == once, || format!("({u}, {v})"));
            }

            let prod = u.tableau.product(&v.tableau);
            let size = |t: &Tableau| match kind {
                BraidKind::Row => t.row_count(),
                BraidKind::Col => t.col_count(),
            };
            subadd.case(size(&prod) <= size(&u.tableau) + size(&v.tableau), || {
                format!("({}, {})", u.tableau, v.tableau)
            });

            for w in domain {
                // σ(u·v, w) = (w″, u′·v′) with (w′, v′) = σ(v, w) and
                // (w″, u′) = σ(u, w′).
                let (w_after_v, v_after) = s(v, w);
                let (w_after_uv, u_after) = s(u, &w_after_v);
                let lhs = s(&mul(u, v), w);
                left_exchange.case(lhs == (w_after_uv.clone(), mul(&u_after, &v_after)), || {
                    format!("({u}, {v}, {w})")
                });

                // σ(u, v·w) = (v′·w′, u″) with (v′, u′) = σ(u, v) and
                // (w′, u″) = σ(u′, w).
                let (v_out, u_mid) = s(u, v);
                let (w_out, u_fin) = s(&u_mid, w);
                let rhs = s(u, &mul(v, w));
                right_exchange.case(rhs == (mul(&v_out, &w_out), u_fin.clone()), || {
                    format!("({u}, {v}, {w})")
                });
            }
        }
    }

    VerifyReport::new(
        format!("monoid-compat {}", spec.name),
        vec![
            left_exchange.finish(),
            right_exchange.finish(),
            commute.finish(),
            unit.finish(),
            cubed.finish(),
            level_idem.finish(),
            subadd.finish(),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(s: &str) -> Row {
        s.parse().unwrap()
    }

    fn col(s: &str) -> Column {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn column_braiding_values() {
        let cases = [
            ("2", "1", "21", "e"),
            ("1", "2", "1", "2"),
            ("1", "21", "21", "1"),
            ("2", "21", "21", "2"),
            ("21", "21", "21", "21"),
            ("1", "32", "31", "2"),
            ("32", "1", "321", "e"),
            ("e", "21", "21", "e"),
            ("21", "e", "21", "e"),
            ("e", "e", "e", "e"),
        ];
        for (a, b, c, d) in cases {
            assert_eq!(sigma_col(&col(a), &col(b)), (col(c), col(d)), "sigma_col({a}, {b})");
        }
    }

    #[test]
    fn row_braiding_values() {
        let cases = [
            ("2", "1", "2", "1"),
            ("1", "2", "e", "12"),
            ("112", "122", "2", "11122"),
            ("e", "11", "e", "11"),
            ("11", "e", "e", "11"),
            ("3", "266", "3", "266"),
        ];
        for (a, b, c, d) in cases {
            assert_eq!(sigma_row(&row(a), &row(b)), (row(c), row(d)), "sigma_row({a}, {b})");
        }
    }

    /// Closed formula for rows over a two-letter alphabet, with a row
    /// written as (ones, twos): the first output keeps min(twos₁,
    /// ones₂) twos and the second takes everything else.
    fn two_letter_row_formula(r1: &Row, r2: &Row) -> (Row, Row) {
        let count = |r: &Row, v: u32| r.letters().iter().filter(|x| x.value() == v).count();
        let (k1, l1) = (count(r1, 1), count(r1, 2));
        let (k2, l2) = (count(r2, 1), count(r2, 2));
        let m = l1.min(k2);
        let build = |ones: usize, twos: usize| {
            let mut vals = vec![1u32; ones];
            vals.extend(std::iter::repeat_n(2u32, twos));
            Row::from_values(&vals).unwrap()
        };
        (build(0, m), build(k1 + k2, l1 + l2 - m))
    }

    #[test]
    fn row_braiding_matches_two_letter_formula() {
        for r1 in all_rows_up_to(2, 3) {
            for r2 in all_rows_up_to(2, 3) {
                assert_eq!(
                    sigma_row(&r1, &r2),
                    two_letter_row_formula(&r1, &r2),
                    "({r1}, {r2})"
                );
            }
        }
    }

    #[test]
    fn braidings_conserve_content() {
        for c1 in all_columns(3) {
            for c2 in all_columns(3) {
                let (c3, c4) = sigma_col(&c1, &c2);
                let mut inputs = c1.as_word().content();
                for (k, v) in c2.as_word().content() {
                    *inputs.entry(k).or_insert(0) += v;
                }
                let mut outputs = c3.as_word().content();
                for (k, v) in c4.as_word().content() {
                    *outputs.entry(k).or_insert(0) += v;
                }
                assert_eq!(inputs, outputs, "({c1}, {c2})");
            }
        }
    }

    #[test]
    fn decorated_braiding_values() {
        let dt = |t: &str, a: u32| DecoratedTableau::new(t.parse().unwrap(), a);
        // Two single-cell rows merging: the lost row goes into α.
        assert_eq!(
            sigma_decorated(BraidKind::Row, &dt("1", 0), &dt("2", 0)),
            (dt("e", 1), dt("12", 0))
        );
        // Two single-cell columns merging, column-sided.
        assert_eq!(
            sigma_decorated(BraidKind::Col, &dt("2", 0), &dt("1", 0)),
            (dt("2/1", 0), dt("e", 1))
        );
        // The unit is transparent.
        assert_eq!(
            sigma_decorated(BraidKind::Col, &dt("2/1", 0), &dt("e", 0)),
            (dt("e", 0), dt("2/1", 0))
        );
        assert_eq!(
            sigma_decorated(BraidKind::Row, &dt("e", 0), &dt("2/1", 3)),
            (dt("2/1", 3), dt("e", 0))
        );
    }

    #[test]
    fn decorated_braiding_conserves_levels() {
        for kind in [BraidKind::Row, BraidKind::Col] {
            let spec = decorated_braided_set(kind, 2, 2, 2);
            for u in &spec.domain {
                for v in &spec.domain {
                    let (a, b) = sigma_decorated(kind, u, v);
                    assert_eq!(a.level(kind), v.level(kind), "{kind}: ({u}, {v})");
                    assert_eq!(b.level(kind), u.level(kind), "{kind}: ({u}, {v})");
                    // Products conserve the level sum too.
                    let p = decorated_product(kind, u, v);
                    assert_eq!(p.level(kind), u.level(kind) + v.level(kind));
                }
            }
        }
    }

    #[test]
    fn delta_word_shape() {
        assert_eq!(delta_word(1), Vec::<usize>::new());
        assert_eq!(delta_word(2), vec![1]);
        assert_eq!(delta_word(3), vec![1, 2, 1]);
        assert_eq!(delta_word(4), vec![1, 2, 1, 3, 2, 1]);
        assert_eq!(delta_word(5).len(), 10);
    }

    #[test]
    fn delta_normalizes_column_tuples() {
        let sigma: &dyn Fn(&Column, &Column) -> (Column, Column) = &|a, b| sigma_col(a, b);
        let tuple = [col("2"), col("1"), col("2")];
        let normalized = delta_normalize(sigma, &tuple);
        assert_eq!(normalized, vec![col("21"), col("2"), col("e")]);
        assert!(is_normal(sigma, &normalized));
        assert_eq!(
            reduced_normal_form(sigma, &Column::empty(), &tuple),
            vec![col("21"), col("2")]
        );
    }

    #[test]
    fn factorizations_match_tableaux() {
        for word in all_words_up_to(3, 5) {
            let t = tableau_of_word(&word);
            assert_eq!(row_factorization(&word), t.rows().to_vec(), "{word}");
            assert_eq!(column_factorization(&word), t.columns(), "{word}");
        }
        // An already-normal row tuple stays put.
        let rows = [row("3"), row("266"), row("134")];
        let sigma: &dyn Fn(&Row, &Row) -> (Row, Row) = &|a, b| sigma_row(a, b);
        assert_eq!(delta_normalize(sigma, &rows), rows.to_vec());
    }

    #[test]
    fn braided_concat_matches_delta_on_normal_tuples() {
        let sigma: &dyn Fn(&Column, &Column) -> (Column, Column) = &|a, b| sigma_col(a, b);
        let normals: Vec<Vec<Column>> = all_words_up_to(2, 4)
            .iter()
            .map(column_factorization)
            .collect();
        for u in &normals {
            for v in &normals {
                let mut joined = u.clone();
                joined.extend(v.iter().cloned());
                assert_eq!(
                    braided_concat_product(sigma, u, v),
                    delta_normalize(sigma, &joined),
                );
            }
        }
    }

    #[test]
    fn braid_word_errors_on_bad_generators() {
        let sigma: &dyn Fn(&Column, &Column) -> (Column, Column) = &|a, b| sigma_col(a, b);
        let tuple = [col("1"), col("2")];
        assert!(apply_braid_word(sigma, &[2], &tuple).is_err());
        assert!(apply_braid_word(sigma, &[0], &tuple).is_err());
        assert!(apply_braid_word(sigma, &[1], &tuple).is_ok());
    }

    #[test]
    fn small_domains_satisfy_the_axioms() {
        let report = verify_braided_set(&col_braided_set(2), VerifyOptions::default());
        assert!(report.passed, "{}", report.to_json());
        let report = verify_braided_set(&row_braided_set(2, 2), VerifyOptions::default());
        assert!(report.passed, "{}", report.to_json());
        let report = verify_braided_set(&assoc_braided_set(2, 2), VerifyOptions::default());
        assert!(report.passed, "{}", report.to_json());
    }

    #[test]
    fn swapping_the_column_braiding_breaks_yang_baxter() {
        let spec = BraidedSetSpec::new(
            "swapped-col[n=2]",
            all_columns(2),
            Column::empty(),
            |a: &Column, b: &Column| {
                let (c, d) = sigma_col(a, b);
                (d, c)
            },
        );
        let report = verify_braided_set(&spec, VerifyOptions { max_normal_width: 2 });
        let ybe = report.checks.iter().find(|c| c.name == "yang_baxter").unwrap();
        assert!(ybe.failures > 0, "swapped outputs must break the Yang-Baxter equation");
        assert!(!report.passed);
    }

    #[test]
    fn observation_reports_pass() {
        for report in [
            verify_observations(BraidKind::Col, 3, 0),
            verify_observations(BraidKind::Row, 2, 3),
        ] {
            assert!(report.passed, "{}", report.to_json());
        }
    }

    #[test]
    fn monoid_compat_small() {
        let report = verify_monoid_compat(BraidKind::Row, 2, 1, 1);
        assert!(report.passed, "{}", report.to_json());
        let report = verify_monoid_compat(BraidKind::Col, 2, 1, 1);
        assert!(report.passed, "{}", report.to_json());
    }

    #[test]
    fn sigma_words_validates() {
        assert!(sigma_words(BraidKind::Row, &w("21"), &w("1")).is_err());
        assert!(sigma_words(BraidKind::Col, &w("12"), &w("1")).is_err());
        assert_eq!(
            sigma_words(BraidKind::Col, &w("2"), &w("1")).unwrap(),
            (w("21"), w("e"))
        );
    }

    #[test]
    fn decorated_product_values() {
        let dt = |t: &str, a: u32| DecoratedTableau::new(t.parse().unwrap(), a);
        // Rows "1" and "2" merge into one row: the lost row is recorded.
        assert_eq!(
            decorated_product(BraidKind::Row, &dt("1", 0), &dt("2", 0)),
            dt("12", 1)
        );
        // Columns "2" and "1" merge into one column.
        assert_eq!(
            decorated_product(BraidKind::Col, &dt("2", 0), &dt("1", 0)),
            dt("2/1", 1)
        );
    }
}
