//! Small permutation utilities: one-line notation, reduced words,
//! shuffles.
//!
//! A permutation of `{0, …, k−1}` is a `Vec<usize>` in one-line
//! notation read as a *destination map*: input slot `j` ends up at
//! position `perm[j]`.  [`reduced_word`] turns a permutation into a
//! shortest word in the adjacent transpositions `t_1, …, t_{k−1}`
//! (1-based indices, matching braid generators `b_i`); the word is read
//! right to left, i.e. its last generator acts first, so lifting each
//! `t_i` to `b_i` and feeding the word to
//! [`crate::braiding::apply_braid_word`] realizes the permutation on
//! tuples.

use crate::error::{Error, Result};

/// Checks that `perm` is a bijection on `{0, …, k−1}`.
pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&v| {
        if v < perm.len() && !seen[v] {
            seen[v] = true;
            true
        } else {
            false
        }
    })
}

/// Number of inversions: pairs `i < j` with `perm[i] > perm[j]`.
pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// The inverse permutation.
pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (j, &v) in perm.iter().enumerate() {
        inv[v] = j;
    }
    inv
}

/// Shortest word in adjacent transpositions realizing `perm`, by the
/// insertion-sort transcript: repeatedly swap the *leftmost* descent.
///
/// Generators are 1-based; the word acts right to left.  Its length
/// equals [`inversions`].
pub fn reduced_word(perm: &[usize]) -> Result<Vec<usize>> {
    reduced_word_by(perm, |w| (0..w.len() - 1).find(|&i| w[i] > w[i + 1]))
}

/// Like [`reduced_word`] but swapping the *rightmost* descent first —
/// an independently generated word for the same permutation, used to
/// exercise word-independence of braid lifts.
pub fn reduced_word_rightmost(perm: &[usize]) -> Result<Vec<usize>> {
    reduced_word_by(perm, |w| (0..w.len() - 1).rev().find(|&i| w[i] > w[i + 1]))
}

fn reduced_word_by(
    perm: &[usize],
    pick: impl Fn(&[usize]) -> Option<usize>,
) -> Result<Vec<usize>> {
    if !is_permutation(perm) {
        return Err(Error::Parse(format!("{perm:?} is not a permutation")));
    }
    let mut w = perm.to_vec();
    let mut transcript = Vec::new();
    if w.len() >= 2 {
        while let Some(i) = pick(&w) {
            w.swap(i, i + 1);
            transcript.push(i + 1);
        }
    }
    // Sorting used w · t_{i1} ⋯ t_{im} = id, so perm = t_{im} ⋯ t_{i1}.
    transcript.reverse();
    Ok(transcript)
}

/// All permutations of `{0, …, k−1}` in lexicographic order.
pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

/// All `(p, q)`-shuffles of `{0, …, p+q−1}`: permutations increasing on
/// the first `p` and on the last `q` slots, in lexicographic order.
pub fn shuffles(p: usize, q: usize) -> Vec<Vec<usize>> {
    let k = p + q;
    let mut out = Vec::new();
    // Choose the destinations of the first block; both blocks then
    // fill their destinations in increasing order.
    fn choose(start: usize, k: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, p: usize) {
        if left == 0 {
            let mut perm = vec![usize::MAX; k];
            for (i, &d) in acc.iter().enumerate() {
                perm[i] = d;
            }
            let mut rest: Vec<usize> = (0..k).filter(|d| !acc.contains(d)).collect();
            rest.sort_unstable();
            for (i, d) in rest.into_iter().enumerate() {
                perm[p + i] = d;
            }
            out.push(perm);
            return;
        }
        for d in start..=(k - left) {
            acc.push(d);
            choose(d + 1, k, left - 1, acc, out, p);
            acc.pop();
        }
    }
    let mut acc = Vec::new();
    if p == 0 || q == 0 {
        return vec![(0..k).collect()];
    }
    choose(0, k, p, &mut acc, &mut out, p);
    out
}
