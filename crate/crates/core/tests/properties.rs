//! Randomized invariants over small words: the crystal operator laws, the
//! rewrite laws and the compatibility between them.

use plactica::{congruent, rewrites, Letter, LieType, Word};
use proptest::prelude::*;

fn lie_type() -> impl Strategy<Value = LieType> {
    prop_oneof![
        Just(LieType::A),
        Just(LieType::B),
        Just(LieType::C),
        Just(LieType::D),
    ]
}

fn word(max_len: usize, max_index: i32) -> impl Strategy<Value = Word> {
    (
        lie_type(),
        proptest::collection::vec(-max_index..=max_index, 0..=max_len),
    )
        .prop_map(|(ty, raw)| {
            let letters: Vec<Letter> = raw
                .into_iter()
                .map(Letter::new)
                .filter(|l| l.is_legal(ty))
                .collect();
            Word::new(letters, ty).unwrap()
        })
}

proptest! {
    #[test]
    fn f_then_e_is_identity(w in word(6, 3), i in 0u32..5) {
        if i < w.ty().min_color() { return Ok(()); }
        if let Some(low) = w.f_op(i) {
            prop_assert_eq!(low.e_op(i), Some(w.clone()));
        }
        if let Some(high) = w.e_op(i) {
            prop_assert_eq!(high.f_op(i), Some(w.clone()));
        }
    }

    #[test]
    fn eps_phi_count_iterated_moves(w in word(5, 3), i in 0u32..4) {
        if i < w.ty().min_color() { return Ok(()); }
        let mut cur = w.clone();
        let mut raises = 0u32;
        while let Some(next) = cur.e_op(i) { cur = next; raises += 1; }
        prop_assert_eq!(w.eps(i), raises);
        let mut cur = w.clone();
        let mut lowers = 0u32;
        while let Some(next) = cur.f_op(i) { cur = next; lowers += 1; }
        prop_assert_eq!(w.phi(i), lowers);
    }

    #[test]
    fn theta_preserves_structure(w in word(6, 3)) {
        if w.letters().iter().any(|l| l.is_zero()) {
            prop_assert!(w.theta().is_err());
        } else {
            let t = w.theta().unwrap();
            prop_assert_eq!(t.len(), w.len());
            // the weight moves up by one index
            for (i, c) in w.weight().iter() {
                prop_assert_eq!(t.weight().coord(i + 1), c);
            }
        }
    }

    #[test]
    fn parse_display_roundtrip(w in word(6, 3)) {
        prop_assert_eq!(Word::parse(&w.to_string(), w.ty()).unwrap(), w);
    }

    #[test]
    fn rewrites_preserve_length_and_weight(w in word(6, 2)) {
        for (_, next) in rewrites(&w) {
            prop_assert_eq!(next.len(), w.len());
            prop_assert_eq!(next.weight(), w.weight());
        }
    }

    #[test]
    fn rewrites_commute_with_operators(w in word(5, 2), i in 0u32..3) {
        if i < w.ty().min_color() { return Ok(()); }
        // one rewrite step keeps the class; applying f on both sides must
        // stay congruent, with matching nullity
        for (_, other) in rewrites(&w).into_iter().take(2) {
            match (w.f_op(i), other.f_op(i)) {
                (None, None) => {}
                (Some(a), Some(b)) => prop_assert!(congruent(&a, &b).unwrap()),
                (a, b) => prop_assert!(false, "nullity differs: {:?} vs {:?}", a, b),
            }
        }
    }
}
