//! Randomized cross-module invariants.

use proptest::prelude::*;

use plactic::braiding::{column_factorization, sigma_col, sigma_words, BraidKind};
use plactic::crystal::s_word;
use plactic::plactic::{knuth_neighbors, longest_nondec_subword};
use plactic::tableau::{tableau_of_word, ReadingMode, Tableau};
use plactic::word::{Column, Word};

fn arb_word(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max_len)
        .prop_map(|values| Word::from_values(&values).expect("letters are positive"))
}

fn arb_column(n: u32) -> impl Strategy<Value = Column> {
    (0u64..1 << n).prop_map(Column::from_mask)
}

proptest! {
    #[test]
    fn insertion_yields_valid_tableaux(w in arb_word(4, 12)) {
        let t = tableau_of_word(&w);
        // Re-validating the rows exercises every shape constraint.
        prop_assert!(Tableau::new(t.rows().to_vec()).is_ok());
        prop_assert_eq!(t.content(), w.content());
    }

    #[test]
    fn readings_reinsert_to_the_same_tableau(w in arb_word(4, 12)) {
        let t = tableau_of_word(&w);
        prop_assert_eq!(&tableau_of_word(&t.reading(ReadingMode::Rows)), &t);
        prop_assert_eq!(&tableau_of_word(&t.reading(ReadingMode::Columns)), &t);
    }

    #[test]
    fn rewriting_moves_preserve_the_tableau(w in arb_word(4, 10)) {
        let t = tableau_of_word(&w);
        for neighbor in knuth_neighbors(&w) {
            prop_assert_eq!(&tableau_of_word(&neighbor), &t);
        }
    }

    #[test]
    fn longest_nondecreasing_subword_is_the_bottom_row(w in arb_word(4, 14)) {
        let bottom = tableau_of_word(&w).rows().last().map_or(0, |r| r.letters().len());
        prop_assert_eq!(longest_nondec_subword(&w), bottom);
    }

    #[test]
    fn reflections_are_content_swapping_involutions(
        w in arb_word(4, 12),
        i in 1u32..=3,
    ) {
        let s = s_word(&w, i, 4).unwrap();
        prop_assert_eq!(s_word(&s, i, 4).unwrap(), w.clone());
        let before = w.content();
        let after = s.content();
        for letter in 1..=4u32 {
            let expected = if letter == i {
                before.get(&plactic::Letter::new(i + 1).unwrap())
            } else if letter == i + 1 {
                before.get(&plactic::Letter::new(i).unwrap())
            } else {
                before.get(&plactic::Letter::new(letter).unwrap())
            }
            .copied()
            .unwrap_or(0);
            let letter = plactic::Letter::new(letter).unwrap();
            prop_assert_eq!(after.get(&letter).copied().unwrap_or(0), expected);
        }
    }

    #[test]
    fn column_braiding_preserves_content_and_products(
        a in arb_column(4),
        b in arb_column(4),
    ) {
        let (a2, b2) = sigma_col(&a, &b);
        let before = a.as_word().concat(b.as_word());
        let after = a2.as_word().concat(b2.as_word());
        prop_assert_eq!(before.content(), after.content());
        // Both sides multiply to the same tableau.
        prop_assert_eq!(tableau_of_word(&before), tableau_of_word(&after));
        // One braiding pass already reaches the fixed point.
        prop_assert_eq!(sigma_col(&a2, &b2), (a2, b2));
    }

    #[test]
    fn word_level_braiding_validates_and_agrees(
        a in arb_column(3),
        b in arb_column(3),
    ) {
        let (c, d) = sigma_col(&a, &b);
        let braided =
            sigma_words(BraidKind::Col, a.as_word(), b.as_word()).unwrap();
        prop_assert_eq!(braided, (c.as_word().clone(), d.as_word().clone()));
    }

    #[test]
    fn letter_columns_normalize_to_the_factorization(w in arb_word(3, 9)) {
        prop_assert_eq!(
            column_factorization(&w),
            tableau_of_word(&w).columns()
        );
    }
}
