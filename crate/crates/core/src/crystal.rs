//! Reflection operators `s_i` on words, tableaux, and tuples.
//!
//! `s_i` looks only at the letters `i` and `i+1` of a word.  Among
//! those, pairs consisting of an `i+1` followed *cyclically* by an `i`
//! are matched and removed, repeatedly, until the remainder is
//! homogeneous; the remainder's letters are then flipped `i ↔ i+1`.
//! The matched set does not depend on the order in which pairs are
//! removed, and the cyclic rule yields the same operator as the
//! classical non-cyclic bracket matching — both facts are checked, not
//! assumed, by [`verify_crystal`].
//!
//! The operators are involutions, swap the multiplicities of `i` and
//! `i+1`, commute with Knuth moves, and therefore descend to tableaux
//! ([`s_tableau`]) preserving the shape.  On tuples of decorated
//! tableaux the right action is *global* ([`s_tuple`]): concatenate
//! the readings, flip once, and re-cut — applying `s_i` to each entry
//! separately does **not** commute with the braidings (see
//! [`componentwise_braiding_mismatch`]), while the global operator
//! does ([`verify_crystal_action`]).

use std::collections::BTreeSet;

use crate::braiding::{sigma_decorated, BraidKind, DecoratedTableau};
use crate::error::{Error, Result};
use crate::plactic::knuth_neighbors;
use crate::report::{Check, VerifyReport};
use crate::tableau::{tableau_of_word, ReadingMode, Shape, Tableau};
use crate::word::{all_words_up_to, Column, Letter, Row, Word};

/// Which candidate pair the matching removes first each round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MatchPick {
    Leftmost,
    Rightmost,
}

/// Matched pairs `(position of i+1, position of the i that follows it
/// cyclically)` among the given positions; `letters[j]` must be `i` or
/// `i+1`.  `pick` chooses which candidate pair is removed first each
/// round; the resulting set is pick-independent (a verified fact, not
/// an assumption of the implementation).
fn cyclic_matching(letters: &[u32], i: u32, pick: MatchPick) -> BTreeSet<(usize, usize)> {
    let mut matched = BTreeSet::new();
    let mut alive: Vec<usize> = (0..letters.len()).collect();
    loop {
        if alive.len() < 2 {
            break;
        }
        let candidates: Vec<usize> = (0..alive.len())
            .filter(|&k| {
                letters[alive[k]] == i + 1 && letters[alive[(k + 1) % alive.len()]] == i
            })
            .collect();
        let Some(&k) = (match pick {
            MatchPick::Leftmost => candidates.first(),
            MatchPick::Rightmost => candidates.last(),
        }) else {
            break;
        };
        let k2 = (k + 1) % alive.len();
        matched.insert((alive[k], alive[k2]));
        alive.remove(k.max(k2));
        alive.remove(k.min(k2));
    }
    matched
}

/// Classical bracket matching: scanning left to right, each `i`
/// closes the nearest unmatched `i+1` before it.
fn classical_matching(letters: &[u32], i: u32) -> BTreeSet<(usize, usize)> {
    let mut matched = BTreeSet::new();
    let mut open: Vec<usize> = Vec::new();
    for (j, &x) in letters.iter().enumerate() {
        if x == i + 1 {
            open.push(j);
        } else if let Some(j_open) = open.pop() {
            matched.insert((j_open, j));
        }
    }
    matched
}

fn check_index(i: u32, n: u32) -> Result<()> {
    if i == 0 || i + 1 > n {
        return Err(Error::BadCrystalIndex { index: i, n });
    }
    Ok(())
}

fn check_letters(w: &Word, n: u32) -> Result<()> {
    for &x in w.letters() {
        if x.value() > n {
            return Err(Error::LetterOutOfRange { letter: x.value(), bound: n });
        }
    }
    Ok(())
}

fn restricted(w: &Word, i: u32) -> (Vec<usize>, Vec<u32>) {
    let mut positions = Vec::new();
    let mut letters = Vec::new();
    for (j, &x) in w.letters().iter().enumerate() {
        if x.value() == i || x.value() == i + 1 {
            positions.push(j);
            letters.push(x.value());
        }
    }
    (positions, letters)
}

fn flip_unmatched(
    w: &Word,
    i: u32,
    positions: &[usize],
    letters: &[u32],
    matched: &BTreeSet<(usize, usize)>,
) -> Word {
    let mut in_pair = vec![false; letters.len()];
    for &(a, b) in matched {
        in_pair[a] = true;
        in_pair[b] = true;
    }
    let mut out: Vec<Letter> = w.letters().to_vec();
    for (k, &pos) in positions.iter().enumerate() {
        if !in_pair[k] {
            let flipped = if letters[k] == i { i + 1 } else { i };
            out[pos] = Letter::new(flipped).expect("i >= 1 so both letters are positive");
        }
    }
    Word::new(out)
}

/// The reflection operator `s_i` on words over `{1, …, n}`.
pub fn s_word(w: &Word, i: u32, n: u32) -> Result<Word> {
    check_index(i, n)?;
    check_letters(w, n)?;
    let (positions, letters) = restricted(w, i);
    let matched = cyclic_matching(&letters, i, MatchPick::Leftmost);
    Ok(flip_unmatched(w, i, &positions, &letters, &matched))
}

/// `s_i` computed with the non-cyclic bracket matching; agrees with
/// [`s_word`] (checked by [`verify_crystal`], never assumed).
pub fn s_word_classical(w: &Word, i: u32, n: u32) -> Result<Word> {
    check_index(i, n)?;
    check_letters(w, n)?;
    let (positions, letters) = restricted(w, i);
    let matched = classical_matching(&letters, i);
    let mut in_pair = vec![false; letters.len()];
    for &(a, b) in &matched {
        in_pair[a] = true;
        in_pair[b] = true;
    }
    let unmatched: Vec<usize> = (0..letters.len()).filter(|&k| !in_pair[k]).collect();
    debug_assert!(
        unmatched.windows(2).all(|p| letters[p[0]] <= letters[p[1]]),
        "classical unmatched letters must be sorted i..i+1"
    );
    // The unmatched subword reads i^a (i+1)^b; the reflection turns it
    // into i^b (i+1)^a, leaving everything matched in place.
    let high = unmatched.iter().filter(|&&k| letters[k] == i + 1).count();
    let mut out: Vec<Letter> = w.letters().to_vec();
    for (rank, &k) in unmatched.iter().enumerate() {
        let new = if rank < high { i } else { i + 1 };
        out[positions[k]] = Letter::new(new).expect("i >= 1 so both letters are positive");
    }
    Ok(Word::new(out))
}

/// `s_i` on a tableau: flip the row reading and re-insert.  Preserves
/// the shape and swaps the multiplicities of `i` and `i+1`.
pub fn s_tableau(t: &Tableau, i: u32, n: u32) -> Result<Tableau> {
    Ok(tableau_of_word(&s_word(&t.reading(ReadingMode::Rows), i, n)?))
}

/// Cuts a word into rows of the given lengths, top to bottom, and
/// validates the result as a tableau — no re-insertion.
pub fn reassemble_rows(w: &Word, shape: &Shape) -> Result<Tableau> {
    let total: usize = shape.0.iter().sum();
    if total != w.len() {
        return Err(Error::NotATableau(format!(
            "shape {shape} holds {total} cells but the word has {} letters",
            w.len()
        )));
    }
    let mut rows = Vec::with_capacity(shape.0.len());
    let mut offset = 0;
    for &len in &shape.0 {
        let seg = Word::new(w.letters()[offset..offset + len].to_vec());
        offset += len;
        rows.push(Row::new(seg)?);
    }
    Tableau::new(rows)
}

/// Cuts a word into columns of the given heights, left to right, and
/// validates the result as a tableau — no re-insertion.
pub fn reassemble_columns(w: &Word, heights: &[usize]) -> Result<Tableau> {
    let total: usize = heights.iter().sum();
    if total != w.len() {
        return Err(Error::NotATableau(format!(
            "column heights {heights:?} hold {total} cells but the word has {} letters",
            w.len()
        )));
    }
    let mut cols = Vec::with_capacity(heights.len());
    let mut offset = 0;
    for &len in heights {
        let seg = Word::new(w.letters()[offset..offset + len].to_vec());
        offset += len;
        cols.push(Column::new(seg)?);
    }
    Tableau::from_columns(&cols)
}

/// The global `s_i` on tuples of decorated tableaux: concatenate the
/// readings, flip the whole word once, re-cut at the same lengths, and
/// reassemble each piece in its original shape without re-insertion.
/// Decorations pass through untouched.  Both reading modes yield the
/// same result (a verified fact).
pub fn s_tuple(
    tuple: &[DecoratedTableau],
    i: u32,
    n: u32,
    mode: ReadingMode,
) -> Result<Vec<DecoratedTableau>> {
    let readings: Vec<Word> = tuple.iter().map(|d| d.tableau.reading(mode)).collect();
    let mut joined = Word::empty();
    for r in &readings {
        joined = joined.concat(r);
    }
    let flipped = s_word(&joined, i, n)?;
    let letters = flipped.letters();
    let mut out = Vec::with_capacity(tuple.len());
    let mut offset = 0;
    for (d, r) in tuple.iter().zip(&readings) {
        let seg = Word::new(letters[offset..offset + r.len()].to_vec());
        offset += r.len();
        let t = match mode {
            ReadingMode::Rows => reassemble_rows(&seg, &d.tableau.shape())?,
            ReadingMode::Columns => {
                let heights: Vec<usize> =
                    d.tableau.columns().iter().map(Column::len).collect();
                reassemble_columns(&seg, &heights)?
            }
        };
        out.push(DecoratedTableau::new(t, d.alpha));
    }
    Ok(out)
}

/// Whether applying `s_i` to each entry separately fails to commute
/// with the decorated braiding at `(u, v)` — the reason [`s_tuple`]
/// works globally instead.
pub fn componentwise_braiding_mismatch(
    kind: BraidKind,
    u: &DecoratedTableau,
    v: &DecoratedTableau,
    i: u32,
    n: u32,
) -> Result<bool> {
    let diag = |a: &DecoratedTableau, b: &DecoratedTableau| -> Result<_> {
        Ok((
            DecoratedTableau::new(s_tableau(&a.tableau, i, n)?, a.alpha),
            DecoratedTableau::new(s_tableau(&b.tableau, i, n)?, b.alpha),
        ))
    };
    let (su, sv) = diag(u, v)?;
    let flipped_first = sigma_decorated(kind, &su, &sv);
    let (bu, bv) = sigma_decorated(kind, u, v);
    let braided_first = diag(&bu, &bv)?;
    Ok(flipped_first != braided_first)
}

/// Exhaustively checks the word-level reflection laws over all words
/// of length ≤ `max_len` on `{1, …, n}`: involution, multiplicity
/// swap, agreement of cyclic and classical matching, independence of
/// the matching order, commutation of distant reflections, the braid
/// relation, compatibility with Knuth moves, descent to tableaux,
/// shape preservation, and re-cut reassembly along both readings.
pub fn verify_crystal(n: u32, max_len: usize) -> VerifyReport {
    let words = all_words_up_to(n, max_len);
    let indices: Vec<u32> = (1..n).collect();

    let mut involution = Check::new("involution");
    let mut content_swap = Check::new("content_swap");
    let mut cyclic_vs_classical = Check::new("cyclic_matches_classical");
    let mut order_independent = Check::new("matching_order_independent");
    let mut far_commute = Check::new("distant_reflections_commute");
    let mut braid_rel = Check::new("braid_relation");
    let mut knuth_compat = Check::new("knuth_move_compatible");
    let mut descends = Check::new("descends_to_tableaux");
    let mut shape_kept = Check::new("shape_preserved");
    let mut reassembly = Check::new("reassembles_without_reinsertion");

    for w in &words {
        for &i in &indices {
            let s = s_word(w, i, n).expect("index and letters are in range");

            let back = s_word(&s, i, n).expect("s_i output stays in range");
            involution.case(back == *w, || format!("s_{i}({w}) = {s}"));

            let mut expected = w.content();
            let ci = expected.remove(&Letter::new(i).unwrap()).unwrap_or(0);
            let cj = expected.remove(&Letter::new(i + 1).unwrap()).unwrap_or(0);
            if cj > 0 {
                expected.insert(Letter::new(i).unwrap(), cj);
            }
            if ci > 0 {
                expected.insert(Letter::new(i + 1).unwrap(), ci);
            }
            content_swap.case(s.content() == expected, || format!("s_{i}({w}) = {s}"));

            let classical = s_word_classical(w, i, n).unwrap();
            cyclic_vs_classical.case(s == classical, || {
                format!("s_{i}({w}): cyclic {s}, classical {classical}")
            });

            let (_, letters) = restricted(w, i);
            order_independent.case(
                cyclic_matching(&letters, i, MatchPick::Leftmost)
                    == cyclic_matching(&letters, i, MatchPick::Rightmost),
                || format!("s_{i}({w})"),
            );

            for &j in &indices {
                if j > i + 1 {
                    let ij = s_word(&s_word(w, j, n).unwrap(), i, n).unwrap();
                    let ji = s_word(&s_word(w, i, n).unwrap(), j, n).unwrap();
                    far_commute.case(ij == ji, || format!("s_{i} s_{j} on {w}"));
                }
            }
            if indices.contains(&(i + 1)) {
                let lhs =
                    s_word(&s_word(&s_word(w, i, n).unwrap(), i + 1, n).unwrap(), i, n)
                        .unwrap();
                let rhs = s_word(
                    &s_word(&s_word(w, i + 1, n).unwrap(), i, n).unwrap(),
                    i + 1,
                    n,
                )
                .unwrap();
                braid_rel.case(lhs == rhs, || format!("s_{i}, s_{} on {w}", i + 1));
            }

            for neighbor in knuth_neighbors(w) {
                let sn = s_word(&neighbor, i, n).unwrap();
                knuth_compat.case(tableau_of_word(&s) == tableau_of_word(&sn), || {
                    format!("s_{i}: {w} ~ {neighbor} but {s} !~ {sn}")
                });
            }

            let t = tableau_of_word(w);
            let st = s_tableau(&t, i, n).unwrap();
            descends.case(st == tableau_of_word(&s), || format!("s_{i} on {w}"));
            shape_kept.case(st.shape() == t.shape(), || {
                format!("s_{i}({t}) = {st}: shape {} vs {}", st.shape(), t.shape())
            });

            let flipped_rows = s_word(&t.reading(ReadingMode::Rows), i, n).unwrap();
            let by_rows = reassemble_rows(&flipped_rows, &t.shape());
            let flipped_cols = s_word(&t.reading(ReadingMode::Columns), i, n).unwrap();
            let heights: Vec<usize> = t.columns().iter().map(Column::len).collect();
            let by_cols = reassemble_columns(&flipped_cols, &heights);
            let ok = match (&by_rows, &by_cols) {
                (Ok(a), Ok(b)) => *a == st && *b == st,
                _ => false,
            };
            reassembly.case(ok, || {
                format!("s_{i} on {t}: rows {by_rows:?}, cols {by_cols:?}")
            });
        }
    }

    VerifyReport::new(
        format!("crystal words[n={n},len<={max_len}]"),
        vec![
            involution.finish(),
            content_swap.finish(),
            cyclic_vs_classical.finish(),
            order_independent.finish(),
            far_commute.finish(),
            braid_rel.finish(),
            knuth_compat.finish(),
            descends.finish(),
            shape_kept.finish(),
            reassembly.finish(),
        ],
    )
}

/// Exhaustively checks how the global reflections interact with the
/// decorated braidings on width-`width` tuples: both reading modes
/// agree, every braid generator commutes with [`s_tuple`], and the
/// componentwise action genuinely fails somewhere (so the global
/// definition is not vacuously different).
pub fn verify_crystal_action(
    kind: BraidKind,
    n: u32,
    max_word_len: usize,
    alpha_max: u32,
    width: usize,
) -> VerifyReport {
    use crate::braiding::{apply_braid_word, decorated_braided_set};

    let spec = decorated_braided_set(kind, n, max_word_len, alpha_max);
    let domain = &spec.domain;
    let indices: Vec<u32> = (1..n).collect();

    let mut modes_agree = Check::new("reading_modes_agree");
    let mut braid_compat = Check::new("braid_generators_commute_with_s");
    let mut componentwise_fails = Check::new("componentwise_action_fails_somewhere");

    let sigma: &dyn Fn(&DecoratedTableau, &DecoratedTableau) -> (DecoratedTableau, DecoratedTableau) =
        &|a, b| sigma_decorated(kind, a, b);

    let mut tuples: Vec<Vec<DecoratedTableau>> =
        domain.iter().map(|d| vec![d.clone()]).collect();
    for _ in 1..width {
        let mut next = Vec::with_capacity(tuples.len() * domain.len());
        for t in &tuples {
            for d in domain {
                let mut longer = t.clone();
                longer.push(d.clone());
                next.push(longer);
            }
        }
        tuples = next;
    }

    for tuple in &tuples {
        let fmt_tuple = |t: &[DecoratedTableau]| {
            let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
            format!("({})", parts.join(", "))
        };
        for &i in &indices {
            let by_rows = s_tuple(tuple, i, n, ReadingMode::Rows).unwrap();
            let by_cols = s_tuple(tuple, i, n, ReadingMode::Columns).unwrap();
            modes_agree.case(by_rows == by_cols, || format!("s_{i} on {}", fmt_tuple(tuple)));

            for l in 1..width {
                let braided = apply_braid_word(sigma, &[l], tuple).unwrap();
                let s_then_braid = apply_braid_word(sigma, &[l], &by_rows).unwrap();
                let braid_then_s = s_tuple(&braided, i, n, ReadingMode::Rows).unwrap();
                braid_compat.case(s_then_braid == braid_then_s, || {
                    format!("s_{i}, b_{l} on {}", fmt_tuple(tuple))
                });
            }
        }
    }

    let mut found = false;
    'outer: for u in domain {
        for v in domain {
            for &i in &indices {
                if componentwise_braiding_mismatch(kind, u, v, i, n).unwrap() {
                    found = true;
                    break 'outer;
                }
            }
        }
    }
    componentwise_fails.case(found, || "no mismatch in the whole domain".to_string());

    VerifyReport::new(
        format!("crystal action {}[width={width}]", spec.name),
        vec![modes_agree.finish(), braid_compat.finish(), componentwise_fails.finish()],
    )
}
