//! Property tests over random permutations and origamis.

use origami_core::census::two_cylinder_params;
use origami_core::invariants::find_involution;
use origami_core::perm::{is_transitive, Permutation};
use origami_core::words::{Gen, Sl2Word};
use origami_core::Origami;
use proptest::prelude::*;

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(n).prop_perturb(move |n, mut rng| {
        let mut images: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() as usize) % (i + 1);
            images.swap(i, j);
        }
        Permutation::from_images_one_based(&images).unwrap()
    })
}

fn arb_origami(n: usize) -> impl Strategy<Value = Origami> {
    (arb_permutation(n), arb_permutation(n))
        .prop_filter("transitive", |(h, v)| is_transitive(h, v).unwrap())
        .prop_map(|(h, v)| Origami::new(h, v).unwrap())
}

proptest! {
    #[test]
    fn inverse_roundtrip(p in arb_permutation(10)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn cycle_type_sums_to_degree(p in arb_permutation(12)) {
        prop_assert_eq!(p.cycle_type().iter().sum::<usize>(), 12);
    }

    #[test]
    fn parse_display_roundtrip(p in arb_permutation(9)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse(&text, 9).unwrap(), p);
    }

    #[test]
    fn canonical_form_is_idempotent_and_relabeling_invariant(
        o in arb_origami(7),
        sigma in arb_permutation(7),
    ) {
        let key = o.canonical_key();
        prop_assert_eq!(o.canonical_form().canonical_key(), key.clone());
        prop_assert_eq!(o.relabel(&sigma).unwrap().canonical_key(), key);
    }

    #[test]
    fn word_and_inverse_word_cancel(o in arb_origami(6), tokens in proptest::collection::vec(0u8..4, 0..12)) {
        let word = Sl2Word::from_tokens(
            tokens
                .iter()
                .map(|&t| match t {
                    0 => Gen::T,
                    1 => Gen::TInv,
                    2 => Gen::S,
                    _ => Gen::SInv,
                })
                .collect(),
        );
        let back = o.apply_word(&word).apply_word(&word.inverse());
        prop_assert!(back.isomorphic(&o));
    }

    #[test]
    fn generators_preserve_stratum_and_cusp_invariants(o in arb_origami(8)) {
        let s = o.stratum();
        prop_assert_eq!(o.act_t().stratum(), s.clone());
        prop_assert_eq!(o.act_s().stratum(), s.clone());
        // rotation maps horizontal cylinder areas to vertical ones; total area is n
        prop_assert_eq!(o.horizontal_cylinders().total_area(), 8);
        // the cusp representative is T-invariant
        let (rep, _) = o.cusp_representative();
        let (rep2, _) = o.act_t().cusp_representative();
        prop_assert!(rep.isomorphic(&rep2));
    }

    #[test]
    fn compact_line_roundtrip(o in arb_origami(9)) {
        prop_assert_eq!(Origami::parse_compact(&o.compact_line()).unwrap(), o);
    }

    #[test]
    fn involutions_square_to_identity(o in arb_origami(8)) {
        if let Some(w) = find_involution(&o) {
            prop_assert!(w.u.compose(&w.u).unwrap().is_identity());
            let hi = o.h().inverse();
            prop_assert_eq!(
                w.u.compose(o.h()).unwrap(),
                hi.compose(&w.u).unwrap()
            );
        }
    }

    #[test]
    fn cusp_width_matches_two_cylinder_formula(o in arb_origami(10)) {
        // for two-cylinder H(2) surfaces the exact T-orbit size divides the
        // lcm formula value
        if o.stratum() == vec![2] {
            if let Some(params) = two_cylinder_params(&o) {
                let gcd = |a: usize, b: usize| origami_core::arith::gcd_i64(a as i64, b as i64) as usize;
                let (w1, h1, _) = params.narrow;
                let (w2, h2, _) = params.wide;
                let formula = {
                    let a = w1 / gcd(w1, h1);
                    let b = w2 / gcd(w2, h2);
                    a / gcd(a, b) * b
                };
                prop_assert_eq!(o.cusp_width(), formula);
            }
        }
    }
}

#[test]
fn generic_h4_origami_without_prym_structure_has_no_involution() {
    // stratum {4} but no involution commuting the pair to its inverse
    let o = Origami::from_cycle_strings(6, "(1,2,3)(4,5)", "(1,4)(2,5,6)").unwrap();
    assert_eq!(o.stratum(), vec![4]);
    assert!(find_involution(&o).is_none());
}
