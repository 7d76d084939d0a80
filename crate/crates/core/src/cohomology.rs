//! Braided cohomology of the column braiding, over exact coefficients.
//!
//! The column braiding on the non-empty columns over `{1..n}` is
//! idempotent, so its cochain complex retracts onto the *critical*
//! subcomplex: tuples of non-empty columns in which no adjacent pair
//! is fixed by the braiding ([`CriticalComplex`]).  Cochains are
//! functions on critical tuples, extended by zero elsewhere; the
//! differential twisted by a [`Character`] is assembled into an exact
//! matrix and Betti numbers fall out of two ranks per degree
//! ([`betti_numbers`]).
//!
//! The same differential formula ([`braided_differential_value`])
//! works for any braiding; applied to `σ(v, w) = (1, v ∗ w)` on
//! tableaux it reproduces the simplicial monoid differential
//! ([`hochschild_differential_value`]), which doubles as an
//! independent oracle.  The quantum symmetrizer
//! ([`quantum_symmetrizer`]) intertwines the two theories; cup
//! products ([`cup_eval`]) are computed by braiding shuffles across
//! the tuple.  Explicit nonvanishing classes come with machine-checked
//! certificates ([`certify_witness`]).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::braiding::{apply_braid_word, sigma_col};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::ExactMatrix;
use crate::perm::{all_permutations, inverse, inversions, reduced_word, shuffles};
use crate::tableau::Tableau;
use crate::word::{all_columns, Column, Letter};

/// A multiplicative character on columns and tableaux, determined by
/// one scalar per letter; the value on a word is the product over its
/// letters, so the empty column and the empty tableau get 1.
///
/// `Zero` sends every letter to 0 (so only empty input survives);
/// `One` sends every letter to 1.  Because the braidings and the
/// tableau product conserve content, any such assignment satisfies
/// the braided character law — checked, not assumed, by
/// [`is_braided_character`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Character {
    Zero,
    One,
    Letters(Vec<i64>),
}

impl Character {
    fn letter_value<F: Field>(&self, field: &F, letter: Letter) -> F::Elem {
        match self {
            Character::Zero => field.zero(),
            Character::One => field.one(),
            Character::Letters(values) => {
                let idx = (letter.value() - 1) as usize;
                let Some(v) = values.get(idx) else {
                    panic!(
                        "character assigns values to {} letters but letter {} appeared",
                        values.len(),
                        letter.value()
                    );
                };
                field.from_i64(*v)
            }
        }
    }

    fn eval_letters<F: Field>(&self, field: &F, letters: &[Letter]) -> F::Elem {
        let mut acc = field.one();
        for &x in letters {
            acc = field.mul(&acc, &self.letter_value(field, x));
        }
        acc
    }

    pub fn eval_column<F: Field>(&self, field: &F, c: &Column) -> F::Elem {
        self.eval_letters(field, c.letters())
    }

    pub fn eval_tableau<F: Field>(&self, field: &F, t: &Tableau) -> F::Elem {
        let mut acc = field.one();
        for row in t.rows() {
            acc = field.mul(&acc, &self.eval_letters(field, row.letters()));
        }
        acc
    }

    /// JSON tag used in reports: `"eps0"`, `"eps1"`, or the value list.
    pub fn label(&self) -> serde_json::Value {
        match self {
            Character::Zero => json!("eps0"),
            Character::One => json!("eps1"),
            Character::Letters(values) => json!(values),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Character::Zero => f.write_str("eps0"),
            Character::One => f.write_str("eps1"),
            Character::Letters(values) => {
                let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Whether `eps` satisfies the braided character law on columns over
/// `{1..n}`: `eps(e) = 1` and `eps(a)·eps(b) = eps(a')·eps(b')` for
/// `σ(a, b) = (a', b')`.
pub fn is_braided_character<F: Field>(
    field: &F,
    n: u32,
    eps: &dyn Fn(&Column) -> F::Elem,
) -> bool {
    if eps(&Column::empty()) != field.one() {
        return false;
    }
    let cols = all_columns(n);
    for a in &cols {
        for b in &cols {
            let (a2, b2) = sigma_col(a, b);
            if field.mul(&eps(a), &eps(b)) != field.mul(&eps(&a2), &eps(&b2)) {
                return false;
            }
        }
    }
    true
}

/// Colexicographic sort key: the reversed sequence of bitmasks.
fn colex_key(tuple: &[Column]) -> Vec<u64> {
    tuple
        .iter()
        .rev()
        .map(|c| c.mask().expect("letters fit in the mask range"))
        .collect()
}

/// Whether every entry is non-empty and no adjacent pair is fixed by
/// the column braiding.
pub fn is_critical_tuple(tuple: &[Column]) -> bool {
    tuple.iter().all(|c| !c.is_empty())
        && tuple
            .windows(2)
            .all(|w| sigma_col(&w[0], &w[1]) != (w[0].clone(), w[1].clone()))
}

/// Size guards for [`CriticalComplex::build_with`].
#[derive(Debug, Clone, Copy)]
pub struct ComplexOptions {
    /// Largest alphabet accepted.
    pub max_alphabet: u32,
    /// Largest number of basis tuples per degree.
    pub max_basis: usize,
}

pub const DEFAULT_ALPHABET_CAP: u32 = 4;
pub const DEFAULT_BASIS_CAP: usize = 200_000;

impl Default for ComplexOptions {
    fn default() -> ComplexOptions {
        ComplexOptions { max_alphabet: DEFAULT_ALPHABET_CAP, max_basis: DEFAULT_BASIS_CAP }
    }
}

/// The critical subcomplex of the column braiding over `{1..n}`, with
/// bases for degrees `0..=levels` and the differential matrices.
///
/// Basis tuples in each degree are ordered colexicographically in the
/// bitmask encoding of columns: tuples are compared by their reversed
/// sequence of masks.
pub struct CriticalComplex {
    n: u32,
    levels: usize,
    bases: Vec<Vec<Vec<Column>>>,
    index: Vec<HashMap<Vec<Column>, usize>>,
}

impl CriticalComplex {
    pub fn build(n: u32, levels: usize) -> Result<CriticalComplex> {
        CriticalComplex::build_with(n, levels, ComplexOptions::default())
    }

    pub fn build_with(
        n: u32,
        levels: usize,
        options: ComplexOptions,
    ) -> Result<CriticalComplex> {
        if n > options.max_alphabet {
            return Err(Error::ResourceLimit(format!(
                "alphabet size {n} exceeds the cap {} (raise ComplexOptions::max_alphabet \
                 to override)",
                options.max_alphabet
            )));
        }
        if n > 64 {
            return Err(Error::ResourceLimit(
                "alphabet sizes beyond 64 letters are not supported".into(),
            ));
        }
        let nodes: Vec<Column> =
            all_columns(n).into_iter().filter(|c| !c.is_empty()).collect();
        let successors: Vec<Vec<usize>> = nodes
            .iter()
            .map(|u| {
                (0..nodes.len())
                    .filter(|&j| {
                        let v = &nodes[j];
                        sigma_col(u, v) != (u.clone(), v.clone())
                    })
                    .collect()
            })
            .collect();

        let mut bases: Vec<Vec<Vec<Column>>> = vec![vec![Vec::new()]];
        for k in 1..=levels {
            let next: Vec<Vec<Column>> = if k == 1 {
                nodes.iter().map(|c| vec![c.clone()]).collect()
            } else {
                let mut grown = Vec::new();
                for tuple in &bases[k - 1] {
                    let last = tuple.last().expect("degree >= 1 tuples are non-empty");
                    let u = nodes
                        .iter()
                        .position(|c| c == last)
                        .expect("tuple entries come from the node list");
                    for &j in &successors[u] {
                        if grown.len() >= options.max_basis {
                            return Err(Error::ResourceLimit(format!(
                                "critical basis in degree {k} exceeds {} tuples \
                                 (raise ComplexOptions::max_basis to override)",
                                options.max_basis
                            )));
                        }
                        let mut longer = tuple.clone();
                        longer.push(nodes[j].clone());
                        grown.push(longer);
                    }
                }
                grown
            };
            let mut sorted = next;
            sorted.sort_by_key(|tuple| colex_key(tuple));
            bases.push(sorted);
        }

        let index = bases
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, tuple)| (tuple.clone(), i))
                    .collect::<HashMap<_, _>>()
            })
            .collect();
        Ok(CriticalComplex { n, levels, bases, index })
    }

    pub fn alphabet(&self) -> u32 {
        self.n
    }

    /// Highest degree with a stored basis.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn dim(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, k: usize) -> &[Vec<Column>] {
        &self.bases[k]
    }

    /// Position of a critical tuple in the degree-`tuple.len()` basis.
    pub fn index_of(&self, tuple: &[Column]) -> Option<usize> {
        self.index.get(tuple.len())?.get(tuple).copied()
    }

    /// The matrix of the degree-raising differential into degree `k`
    /// (from cochains in degree `k − 1`), twisted by the character:
    /// rows are indexed by the degree-`k` basis, columns by the
    /// degree-`k − 1` basis.
    pub fn differential<F: Field>(
        &self,
        field: &F,
        character: &Character,
        k: usize,
    ) -> ExactMatrix<F> {
        assert!(k >= 1 && k <= self.levels, "differential degree {k} out of range");
        let mut matrix = ExactMatrix::zero(self.dim(k), self.dim(k - 1));
        let sigma: &dyn Fn(&Column, &Column) -> (Column, Column) = &|a, b| sigma_col(a, b);
        for (r, tuple) in self.bases[k].iter().enumerate() {
            for (sign, carrier, argument) in differential_terms(sigma, tuple) {
                let coeff = character.eval_column(field, &carrier);
                if field.is_zero(&coeff) {
                    continue;
                }
                if let Some(c) = self.index_of(&argument) {
                    let value = field.mul(&field.from_i64(sign), &coeff);
                    matrix.add_to(field, r, c, &value);
                }
            }
        }
        matrix
    }
}

/// The `2k` signed terms of the braided differential at a `k`-tuple:
/// `(sign, carrier, argument)` contributes `sign · ε(carrier) ·
/// f(argument)`.  For each position `i`, the *left* term braids the
/// `i`-th entry to the front of the prefix and the *right* term
/// braids it to the back of the suffix.
pub fn differential_terms<X: Clone>(
    sigma: &dyn Fn(&X, &X) -> (X, X),
    tuple: &[X],
) -> Vec<(i64, X, Vec<X>)> {
    let k = tuple.len();
    let mut terms = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };

        let word: Vec<usize> = (1..i).collect();
        let out = apply_braid_word(sigma, &word, &tuple[..i])
            .expect("generators fit the prefix width");
        let mut argument = out[1..].to_vec();
        argument.extend_from_slice(&tuple[i..]);
        terms.push((sign, out[0].clone(), argument));

        let word: Vec<usize> = (1..=k - i).rev().collect();
        let out = apply_braid_word(sigma, &word, &tuple[i - 1..])
            .expect("generators fit the suffix width");
        let last = out.len() - 1;
        let mut argument = tuple[..i - 1].to_vec();
        argument.extend_from_slice(&out[..last]);
        terms.push((-sign, out[last].clone(), argument));
    }
    terms
}

/// Evaluates the braided differential of `f` (a function on
/// `(k−1)`-tuples) at a `k`-tuple, for any braiding and any character
/// function.
pub fn braided_differential_value<X: Clone, F: Field>(
    field: &F,
    sigma: &dyn Fn(&X, &X) -> (X, X),
    epsilon: &dyn Fn(&X) -> F::Elem,
    f: &dyn Fn(&[X]) -> F::Elem,
    tuple: &[X],
) -> F::Elem {
    let mut acc = field.zero();
    for (sign, carrier, argument) in differential_terms(sigma, tuple) {
        let coeff = field.mul(&field.from_i64(sign), &epsilon(&carrier));
        if field.is_zero(&coeff) {
            continue;
        }
        acc = field.mul_add(&acc, &coeff, &f(&argument));
    }
    acc
}

/// The simplicial differential of the monoid of tableaux, with the
/// character acting on both ends:
/// `ε(x_1)F(x_2…) − F(x_1∗x_2,…) + ⋯ ∓ F(…,x_{k−1}∗x_k) ± F(…,x_{k−1})ε(x_k)`.
pub fn hochschild_differential_value<F: Field>(
    field: &F,
    character: &Character,
    f: &dyn Fn(&[Tableau]) -> F::Elem,
    tuple: &[Tableau],
) -> F::Elem {
    let k = tuple.len();
    assert!(k >= 1, "the differential needs at least one entry");
    let sign_of = |i: usize| if i.is_multiple_of(2) { 1 } else { -1 };

    let eps_first = character.eval_tableau(field, &tuple[0]);
    let mut acc = field.mul(&eps_first, &f(&tuple[1..]));
    for i in 1..k {
        let mut merged = tuple[..i - 1].to_vec();
        merged.push(tuple[i - 1].product(&tuple[i]));
        merged.extend_from_slice(&tuple[i + 1..]);
        let term = field.mul(&field.from_i64(sign_of(i)), &f(&merged));
        acc = field.add(&acc, &term);
    }
    let eps_last = character.eval_tableau(field, &tuple[k - 1]);
    let term = field.mul(
        &field.from_i64(sign_of(k)),
        &field.mul(&f(&tuple[..k - 1]), &eps_last),
    );
    field.add(&acc, &term)
}

/// A finitely supported cochain: values on stored tuples, zero on
/// everything else (in particular on non-critical tuples).
#[derive(Debug)]
pub struct Cochain<F: Field> {
    degree: usize,
    values: HashMap<Vec<Column>, F::Elem>,
}

impl<F: Field> Clone for Cochain<F> {
    fn clone(&self) -> Cochain<F> {
        Cochain { degree: self.degree, values: self.values.clone() }
    }
}

impl<F: Field> PartialEq for Cochain<F> {
    fn eq(&self, other: &Cochain<F>) -> bool {
        self.degree == other.degree && self.values == other.values
    }
}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: usize) -> Cochain<F> {
        Cochain { degree, values: HashMap::new() }
    }

    pub fn indicator(field: &F, tuple: Vec<Column>) -> Cochain<F> {
        let mut f = Cochain::zero(tuple.len());
        f.set(field, tuple, field.one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, field: &F, tuple: Vec<Column>, value: F::Elem) {
        assert_eq!(tuple.len(), self.degree, "tuple length must match the degree");
        if field.is_zero(&value) {
            self.values.remove(&tuple);
        } else {
            self.values.insert(tuple, value);
        }
    }

    pub fn add_to(&mut self, field: &F, tuple: Vec<Column>, value: &F::Elem) {
        let current = self.eval(field, &tuple);
        self.set(field, tuple, field.add(&current, value));
    }

    pub fn eval(&self, field: &F, tuple: &[Column]) -> F::Elem {
        self.values.get(tuple).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add_scaled(&mut self, field: &F, other: &Cochain<F>, scale: &F::Elem) {
        assert_eq!(self.degree, other.degree, "degrees must match");
        for (tuple, value) in &other.values {
            self.add_to(field, tuple.clone(), &field.mul(scale, value));
        }
    }

    /// Entries sorted colexicographically in the bitmask encoding.
    pub fn sorted_entries(&self) -> Vec<(&Vec<Column>, &F::Elem)> {
        let mut entries: Vec<_> = self.values.iter().collect();
        entries.sort_by_key(|(tuple, _)| colex_key(tuple));
        entries
    }

    /// Coordinates with respect to a listed basis.
    pub fn to_vector(&self, field: &F, basis: &[Vec<Column>]) -> Vec<F::Elem> {
        basis.iter().map(|tuple| self.eval(field, tuple)).collect()
    }
}

/// Evaluates the cup product `(f ⌣ g)(x̄)`: over all `(p, q)`-shuffles
/// `s`, braid `x̄` by the inverse shuffle, feed the first `p` entries
/// to `f` and the rest to `g`, and sum with the shuffle's sign.
pub fn cup_eval<F: Field>(
    field: &F,
    f: &Cochain<F>,
    g: &Cochain<F>,
    tuple: &[Column],
) -> Result<F::Elem> {
    let (p, q) = (f.degree(), g.degree());
    if tuple.len() != p + q {
        return Err(Error::DegreeMismatch { left: p + q, right: tuple.len() });
    }
    let sigma: &dyn Fn(&Column, &Column) -> (Column, Column) = &|a, b| sigma_col(a, b);
    let mut acc = field.zero();
    for s in shuffles(p, q) {
        let word = reduced_word(&inverse(&s)).expect("shuffles are permutations");
        let braided = apply_braid_word(sigma, &word, tuple)?;
        let term = field.mul(
            &f.eval(field, &braided[..p]),
            &g.eval(field, &braided[p..]),
        );
        let signed =
            if inversions(&s).is_multiple_of(2) { term } else { field.neg(&term) };
        acc = field.add(&acc, &signed);
    }
    Ok(acc)
}

/// Assembles `f ⌣ g` as a cochain on the critical basis in degree
/// `deg f + deg g`.
pub fn cup_cochain<F: Field>(
    field: &F,
    complex: &CriticalComplex,
    f: &Cochain<F>,
    g: &Cochain<F>,
) -> Result<Cochain<F>> {
    let degree = f.degree() + g.degree();
    if degree > complex.levels() {
        return Err(Error::ResourceLimit(format!(
            "cup product degree {degree} exceeds the built complex ({} levels)",
            complex.levels()
        )));
    }
    let mut out = Cochain::zero(degree);
    for tuple in complex.basis(degree) {
        let value = cup_eval(field, f, g, tuple)?;
        out.set(field, tuple.clone(), value);
    }
    Ok(out)
}

/// Left-nested cup product of several factors.
pub fn cup_many<F: Field>(
    field: &F,
    complex: &CriticalComplex,
    factors: &[Cochain<F>],
) -> Result<Cochain<F>> {
    let mut iter = factors.iter();
    let Some(first) = iter.next() else {
        // The empty product is the unit 0-cochain.
        let mut unit = Cochain::zero(0);
        unit.set(field, Vec::new(), field.one());
        return Ok(unit);
    };
    let mut acc = first.clone();
    for g in iter {
        acc = cup_cochain(field, complex, &acc, g)?;
    }
    Ok(acc)
}

/// The degree-1 cochain `ξ_a`: indicator of the columns over `{1..n}`
/// that contain the letter `a`.  Its cup square is the zero cochain.
pub fn xi_cochain<F: Field>(field: &F, n: u32, a: u32) -> Result<Cochain<F>> {
    if a == 0 || a > n {
        return Err(Error::LetterOutOfRange { letter: a, bound: n });
    }
    let letter = Letter::new(a)?;
    let mut f = Cochain::zero(1);
    for c in all_columns(n) {
        if c.contains(letter) {
            f.set(field, vec![c], field.one());
        }
    }
    Ok(f)
}

/// A formal integer combination of tuples, kept sorted with combined
/// coefficients and no zero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum<X: Ord> {
    terms: Vec<(Vec<X>, i64)>,
}

impl<X: Ord> FormalSum<X> {
    pub fn from_terms(raw: impl IntoIterator<Item = (Vec<X>, i64)>) -> FormalSum<X> {
        let mut terms: Vec<(Vec<X>, i64)> = Vec::new();
        for (tuple, coeff) in raw {
            terms.push((tuple, coeff));
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut combined: Vec<(Vec<X>, i64)> = Vec::new();
        for (tuple, coeff) in terms {
            match combined.last_mut() {
                Some((last, total)) if *last == tuple => *total += coeff,
                _ => combined.push((tuple, coeff)),
            }
        }
        combined.retain(|(_, coeff)| *coeff != 0);
        FormalSum { terms: combined }
    }

    pub fn zero() -> FormalSum<X> {
        FormalSum { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Vec<X>, i64)] {
        &self.terms
    }
}

impl<X: Ord + fmt::Display> fmt::Display for FormalSum<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (tuple, coeff)) in self.terms.iter().enumerate() {
            let magnitude = coeff.abs();
            if i == 0 {
                if *coeff < 0 {
                    f.write_str("-")?;
                }
            } else if *coeff < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}·")?;
            }
            let parts: Vec<String> = tuple.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// The quantum symmetrizer `Σ_s (−1)^{inv(s)} T_s(x̄)` over all
/// permutations of the slots, where `T_s` applies a reduced braid
/// word of `s` (well-defined by the Yang–Baxter equation).
pub fn quantum_symmetrizer<X: Clone + Ord>(
    sigma: &dyn Fn(&X, &X) -> (X, X),
    tuple: &[X],
) -> FormalSum<X> {
    let mut raw = Vec::new();
    for s in all_permutations(tuple.len()) {
        let word = reduced_word(&s).expect("permutations have reduced words");
        let out = apply_braid_word(sigma, &word, tuple).expect("generators fit the width");
        let sign = if inversions(&s).is_multiple_of(2) { 1 } else { -1 };
        raw.push((out, sign));
    }
    FormalSum::from_terms(raw)
}

/// Pulls a monoid cochain `f` (on tuples of tableaux) back along the
/// quantum symmetrizer to a cochain on tuples of columns.
pub fn symmetrizer_pullback<F: Field>(
    field: &F,
    f: &dyn Fn(&[Tableau]) -> F::Elem,
    tuple: &[Column],
) -> F::Elem {
    let sigma: &dyn Fn(&Column, &Column) -> (Column, Column) = &|a, b| sigma_col(a, b);
    let mut acc = field.zero();
    for s in all_permutations(tuple.len()) {
        let word = reduced_word(&s).expect("permutations have reduced words");
        let braided =
            apply_braid_word(sigma, &word, tuple).expect("generators fit the width");
        let tableaux: Vec<Tableau> = braided.iter().map(Tableau::from_column).collect();
        let value = f(&tableaux);
        let signed =
            if inversions(&s).is_multiple_of(2) { value } else { field.neg(&value) };
        acc = field.add(&acc, &signed);
    }
    acc
}

/// Betti numbers of the critical complex, together with the data that
/// produced them.
#[derive(Debug, Clone, Serialize)]
pub struct BettiReport {
    pub n: u32,
    pub character: serde_json::Value,
    pub field: String,
    pub kmax: usize,
    /// `dims[k]` = dimension of the degree-`k` critical cochain space.
    pub dims: Vec<usize>,
    /// `ranks[k-1]` = rank of the differential into degree `k`, for
    /// `k = 1 ..= kmax + 1`.
    pub ranks: Vec<usize>,
    /// `betti[k]` = dimension of the degree-`k` cohomology.
    pub betti: Vec<usize>,
}

impl BettiReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Computes `dims`, differential ranks, and Betti numbers in degrees
/// `0..=kmax` over the given field.
pub fn betti_numbers<F: Field>(
    field: &F,
    n: u32,
    kmax: usize,
    character: &Character,
) -> Result<BettiReport> {
    betti_numbers_with(field, n, kmax, character, ComplexOptions::default())
}

pub fn betti_numbers_with<F: Field>(
    field: &F,
    n: u32,
    kmax: usize,
    character: &Character,
    options: ComplexOptions,
) -> Result<BettiReport> {
    let complex = CriticalComplex::build_with(n, kmax + 1, options)?;
    let dims: Vec<usize> = (0..=kmax).map(|k| complex.dim(k)).collect();
    let ranks: Vec<usize> = (1..=kmax + 1)
        .map(|k| complex.differential(field, character, k).rank(field))
        .collect();
    let betti: Vec<usize> = (0..=kmax)
        .map(|k| {
            let kernel = dims[k] - ranks[k];
            let image = if k == 0 { 0 } else { ranks[k - 1] };
            kernel.checked_sub(image).expect("the differential squares to zero")
        })
        .collect();
    Ok(BettiReport {
        n,
        character: character.label(),
        field: field.name(),
        kmax,
        dims,
        ranks,
        betti,
    })
}

/// A machine-checked certificate that the indicator cochain of a
/// critical tuple represents a nonzero cohomology class: its
/// differential vanishes (zero column) and no coboundary can reach it
/// (zero row), while it evaluates to 1 on its own tuple.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessCertificate {
    pub degree: usize,
    pub tuple: Vec<String>,
    pub critical: bool,
    pub is_cocycle: bool,
    pub off_coboundaries: bool,
    pub certified: bool,
}

/// Certifies the indicator of `tuple` as a nonvanishing class for the
/// given character; `certified` is the conjunction of the checks.
pub fn certify_witness<F: Field>(
    field: &F,
    n: u32,
    character: &Character,
    tuple: &[Column],
) -> Result<WitnessCertificate> {
    let k = tuple.len();
    let complex = CriticalComplex::build(n, k + 1)?;
    let names: Vec<String> = tuple.iter().map(ToString::to_string).collect();
    let Some(row) = complex.index_of(tuple) else {
        return Ok(WitnessCertificate {
            degree: k,
            tuple: names,
            critical: false,
            is_cocycle: false,
            off_coboundaries: false,
            certified: false,
        });
    };
    let up = complex.differential(field, character, k + 1);
    let is_cocycle = up.is_zero_column(row);
    let down = complex.differential(field, character, k);
    let off_coboundaries = down.is_zero_row(row);
    Ok(WitnessCertificate {
        degree: k,
        tuple: names,
        critical: true,
        is_cocycle,
        off_coboundaries,
        certified: is_cocycle && off_coboundaries,
    })
}

/// The standard nonvanishing witness in degree `k` for the zero
/// character over three letters: `(1, 32)` repeated, with a leading
/// `(2)` in odd degrees.
pub fn epsilon0_witness_tuple(k: usize) -> Vec<Column> {
    let c = |s: &str| s.parse::<Column>().expect("literal columns parse");
    let mut tuple = Vec::with_capacity(k);
    if k % 2 == 1 {
        tuple.push(c("2"));
    }
    while tuple.len() < k {
        tuple.push(c("1"));
        tuple.push(c("32"));
    }
    tuple
}

/// The critical pairs `(a, bd)` — a single letter against a two-letter
/// column with `b ≥ a` — whose count equals the degree-2 Betti number
/// for the zero character.
pub fn h2_witness_tuples(n: u32) -> Vec<Vec<Column>> {
    let mut tuples = Vec::new();
    for b in 2..=n {
        for d in 1..b {
            let pair = Column::from_mask((1u64 << (b - 1)) | (1u64 << (d - 1)));
            for a in 1..=b {
                let single = Column::from_mask(1u64 << (a - 1));
                tuples.push(vec![single, pair.clone()]);
            }
        }
    }
    tuples.sort_by_key(|tuple| colex_key(tuple));
    tuples
}

/// The staircase tuple of a strictly increasing letter set
/// `{a_1 < ⋯ < a_k}`: its `j`-th entry is the column on
/// `{a_1, …, a_j}`.  Staircase tuples are critical.
pub fn staircase_tuple(subset: &[u32]) -> Result<Vec<Column>> {
    let mut tuple = Vec::with_capacity(subset.len());
    let mut letters: Vec<Letter> = Vec::new();
    for (i, &a) in subset.iter().enumerate() {
        if i > 0 && subset[i - 1] >= a {
            return Err(Error::Parse(format!(
                "staircase letters must strictly increase, got {subset:?}"
            )));
        }
        letters.insert(0, Letter::new(a)?);
        tuple.push(Column::new(crate::word::Word::new(letters.clone()))?);
    }
    Ok(tuple)
}

/// Evaluation matrix of the exterior monomials against the staircases:
/// rows and columns run over the size-`k` subsets of `{1..n}` in
/// bitmask order; entry `(S, T)` is `(ξ_{s_1} ⌣ ⋯ ⌣ ξ_{s_k})`
/// evaluated on the staircase of `T`.  Unitriangularity of this
/// matrix certifies the independence of the exterior monomials.
pub fn exterior_evaluation_matrix<F: Field>(
    field: &F,
    complex: &CriticalComplex,
    k: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    let n = complex.alphabet();
    let subsets: Vec<Vec<u32>> = (1u64..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (1..=n).filter(|a| mask >> (a - 1) & 1 == 1).collect())
        .collect();
    let mut rows = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let factors: Vec<Cochain<F>> = s
            .iter()
            .map(|&a| xi_cochain(field, n, a))
            .collect::<Result<_>>()?;
        let product = cup_many(field, complex, &factors)?;
        let mut row = Vec::with_capacity(subsets.len());
        for t in &subsets {
            let staircase = staircase_tuple(t)?;
            row.push(product.eval(field, &staircase));
        }
        rows.push(row);
    }
    Ok(rows)
}
