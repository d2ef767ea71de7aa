//! Property tests for the catalog-independent invariants.

use proptest::prelude::*;
use sextic_core::enumeration::generate_maps;
use sextic_core::fpgroup::word::{braid_act, BraidGen, BraidWord};
use sextic_core::fpgroup::{
    abelian_invariants, braid_relator, rho, smith_normal_form, IntMat, Word,
};
use sextic_core::skeleton::Skeleton;

fn braid_gen() -> impl Strategy<Value = BraidGen> {
    prop_oneof![
        Just(BraidGen::S1),
        Just(BraidGen::S2),
        Just(BraidGen::S1Inv),
        Just(BraidGen::S2Inv),
    ]
}

proptest! {
    #[test]
    fn braid_action_fixes_rho(gens in proptest::collection::vec(braid_gen(), 0..12)) {
        let b = BraidWord::new(gens);
        prop_assert_eq!(braid_act(&b, &rho()), rho());
    }

    #[test]
    fn braid_action_is_homomorphic(
        gens in proptest::collection::vec(braid_gen(), 0..6),
        letters in proptest::collection::vec((1i32..=3, proptest::bool::ANY), 0..8),
    ) {
        let b = BraidWord::new(gens);
        let (u, v): (Vec<i32>, Vec<i32>) = {
            let mid = letters.len() / 2;
            let f = |(g, neg): &(i32, bool)| if *neg { -*g } else { *g };
            (
                letters[..mid].iter().map(f).collect(),
                letters[mid..].iter().map(f).collect(),
            )
        };
        let (u, v) = (Word::from_letters(u), Word::from_letters(v));
        prop_assert_eq!(
            braid_act(&b, &u.mul(&v)),
            braid_act(&b, &u).mul(&braid_act(&b, &v))
        );
    }

    #[test]
    fn snf_witnesses_hold(entries in proptest::collection::vec(-9i64..=9, 1..12)) {
        let cols = 1 + entries.len() % 3;
        let rows: Vec<Vec<i64>> = entries
            .chunks(cols)
            .filter(|c| c.len() == cols)
            .map(|c| c.to_vec())
            .collect();
        prop_assume!(!rows.is_empty());
        let m = IntMat::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], num_bigint::BigInt::from(0));
        }
        // invariants are well defined
        let _ = abelian_invariants(cols, &m);
    }

    #[test]
    fn relator_gcd_abelianization(m in 0u32..=8, n in 0u32..=8, a in 1i32..=2) {
        // The gcd law holds already at the abelianized level: odd
        // exponents identify, even exponents impose nothing.
        let x = Word::gen(a);
        let y = Word::gen(if a == 1 { 2 } else { 1 });
        let r1 = braid_relator(&x, &y, m);
        let r2 = braid_relator(&x, &y, n);
        let g = braid_relator(&x, &y, num_integer::gcd(m, n));
        let sums = |w: &Word| w.exponent_sums(2);
        let odd_info = |k: u32| k % 2 == 1;
        prop_assert_eq!(
            odd_info(m) || odd_info(n),
            sums(&r1).iter().any(|&s| s != 0) || sums(&r2).iter().any(|&s| s != 0)
        );
        prop_assert_eq!(
            odd_info(num_integer::gcd(m, n)),
            sums(&g).iter().any(|&s| s != 0)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coset_strategies_agree(
        relators in proptest::collection::vec(
            proptest::collection::vec((1i32..=2, proptest::bool::ANY), 1..6),
            1..4,
        ),
        pad in 2i32..=3,
    ) {
        use sextic_core::fpgroup::{coset_enumerate, Presentation, Strategy, TcOptions};
        let mut words: Vec<Word> = relators
            .iter()
            .map(|r| Word::from_letters(r.iter().map(|&(g, neg)| if neg { -g } else { g })))
            .collect();
        words.push(Word::gen(1).pow(pad));
        words.push(Word::gen(2).pow(pad));
        let p = Presentation::plain(2, words);
        let opts = |s| TcOptions { strategy: s, limit: 20_000 };
        let hlt = coset_enumerate(&p, &[], opts(Strategy::Hlt));
        let felsch = coset_enumerate(&p, &[], opts(Strategy::Felsch));
        if let (Ok(a), Ok(b)) = (hlt, felsch) {
            prop_assert_eq!(a.index, b.index);
        }
    }

    #[test]
    fn canonical_code_is_a_class_function(seed in 0usize..5000) {
        // Random relabelings of an enumerated skeleton never change the
        // canonical code.
        let maps = generate_maps(4, 0);
        let sk = &maps[seed % maps.len()];
        let n = sk.darts();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        for j in (1..n).rev() {
            let k = (seed * 2654435761 + j * 40503) % (j + 1);
            perm.swap(j, k);
        }
        let mut rot = vec![0u32; n];
        let mut inv = vec![0u32; n];
        for d in 0..n as u32 {
            rot[perm[d as usize] as usize] = perm[sk.rot(d) as usize];
            inv[perm[d as usize] as usize] = perm[sk.inv(d) as usize];
        }
        let sk2 = Skeleton::new(rot, inv).unwrap();
        let labels = vec![0u8; n];
        prop_assert_eq!(sk.canonical_code(&labels), sk2.canonical_code(&labels));
    }

    #[test]
    fn mirror_is_involutive_and_isomorphism_is_reflexive(seed in 0usize..5000) {
        use sextic_core::skeleton::ClassDatum;
        use std::collections::BTreeSet;
        let maps = generate_maps(4, 0);
        let sk = maps[seed % maps.len()].clone();
        let hexagon = sk.trace_faces()[seed % sk.trace_faces().len()].id();
        let datum = ClassDatum { sk, hexagon, d_faces: BTreeSet::new() };
        prop_assert!(datum.is_isomorphic(&datum));
        let mm = datum.mirror().mirror();
        prop_assert!(datum.is_isomorphic(&mm));
    }
}
