//! Fundamental-group presentations of the curve classes, built from the
//! relation templates on the fixed basis `a1, a2, a3`.
//!
//! Every presentation contains the relation at infinity `rho^4 = (a2 a3)^3`
//! with `rho = a1 a2 a3`. The remaining relators come from braid relations
//! `{d1, d2}_m = 1` attached to named slots around the distinguished
//! hexagon; which slots appear, and with which exponents, is per-family
//! template data.

use crate::fpgroup::presentation::{Presentation, Provenance};
use crate::fpgroup::word::{braid_relator, rho, Word};

/// `rho^4 (a2 a3)^-3` written as `(a2 a3)^-3 rho^4`, freely reduced.
pub fn relation_at_infinity() -> Word {
    let a2a3 = Word::from_letters([2, 3]);
    a2a3.pow(-3).mul(&rho().pow(4))
}

fn w<const N: usize>(letters: [i32; N]) -> Word {
    Word::from_letters(letters)
}

/// The inner-loop relation `a1 = a3^-1 a2 a3` of a hexagon with a loop.
pub fn inner_loop_relator() -> Word {
    w([1]).mul(&w([-3, 2, 3]).inverse())
}

/// A braid-relation slot: the section pair it acts on, the exponent the
/// catalog row uses (None when the row omits the relation), and the slot
/// name for provenance.
#[derive(Clone, Debug)]
pub struct Slot {
    pub name: &'static str,
    pub d1: Word,
    pub d2: Word,
    pub m: Option<u32>,
}

impl Slot {
    fn relator(&self) -> Option<Word> {
        self.m.map(|m| braid_relator(&self.d1, &self.d2, m))
    }
}

/// A presentation together with its braid-relation slots, kept for
/// perturbation surgery and failure reporting.
#[derive(Clone, Debug)]
pub struct CurvePresentation {
    pub presentation: Presentation,
    pub slots: Vec<Slot>,
}

impl CurvePresentation {
    fn assemble(fixed: Vec<(Word, Provenance)>, slots: Vec<Slot>) -> Self {
        let mut relators = vec![(relation_at_infinity(), Provenance::RelationAtInfinity)];
        relators.extend(fixed);
        for s in &slots {
            if let Some(r) = s.relator() {
                relators.push((r, Provenance::Slot(s.name.to_string())));
            }
        }
        CurvePresentation {
            presentation: Presentation::new(3, relators),
            slots,
        }
    }

    pub fn slot(&self, name: &str) -> Option<&Slot> {
        self.slots.iter().find(|s| s.name == name)
    }

    /// Replaces (or introduces) the braid relation at `slot` with exponent
    /// `s`, leaving everything else alone.
    pub fn with_slot_exponent(&self, slot: &str, s: u32) -> CurvePresentation {
        let mut out = self.clone();
        let sl = out
            .slots
            .iter_mut()
            .find(|x| x.name == slot)
            .unwrap_or_else(|| panic!("no slot named {}", slot));
        sl.m = Some(s);
        let slots = out.slots.clone();
        // Rebuild: keep all non-slot relators, re-emit slot relators.
        let fixed: Vec<(Word, Provenance)> = self
            .presentation
            .relators
            .iter()
            .filter(|r| {
                !matches!(r.provenance, Provenance::Slot(_))
                    && !matches!(r.provenance, Provenance::RelationAtInfinity)
            })
            .map(|r| (r.word.clone(), r.provenance.clone()))
            .collect();
        CurvePresentation::assemble(fixed, slots)
    }

    /// Appends extra relators (perturbations, quotients).
    pub fn with_extra(&self, extra: &[(Word, Provenance)]) -> CurvePresentation {
        let mut out = self.clone();
        for (word, provenance) in extra {
            let word = word.cyclically_reduced();
            if !word.is_empty() {
                out.presentation
                    .relators
                    .push(crate::fpgroup::presentation::Relator {
                        word,
                        provenance: provenance.clone(),
                    });
            }
        }
        out
    }
}

/// Variants of the hexagon-with-a-loop template.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LoopKind {
    /// The w'-slot form used for the irreducible rows.
    Irreducible,
    /// The w''-slot form used for the reducible rows.
    Reducible,
    /// A type-D fiber sits in the inner loop: the inner-loop relation is
    /// replaced by the two D-fiber relations.
    DInner { reducible: bool },
    /// No A-type fiber outside the insertion (row E6+D7+D6): the slot
    /// relations are replaced by the two D7 relations.
    NoOuterA,
}

/// Extra, row-specific relations for hexagon-with-a-loop rows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LoopExtra {
    None,
    /// Lower-left-loop relation of the E6+A10+A3 row.
    LowerLeftLoop,
    /// Left-loop relation of the E6+D5+A8 row with D in the inner loop.
    LeftLoop,
    /// Free-loop relation a1 = a2 a3 a2^-1 of the (E6+A11)+A2 row.
    FreeLoopConj,
}

/// Parameters `(l, m, n, k)`; `None` marks an omitted relation (type-D
/// fiber or a relation not needed for the computation).
pub type LoopParams = [Option<u32>; 4];

pub fn build_hex_loop(params: LoopParams, kind: LoopKind, extra: LoopExtra) -> CurvePresentation {
    let beta3 = w([-3, 2, 3]);
    let rho_a3 = rho().conjugate(&Word::gen(3));
    let w_prime_d2 = match kind {
        LoopKind::Reducible | LoopKind::DInner { reducible: true } => {
            rho().inverse().conjugate(&Word::gen(2))
        }
        _ => rho_a3.clone(),
    };
    let slots = vec![
        Slot {
            name: "r",
            d1: Word::gen(1),
            d2: Word::gen(2),
            m: params[0],
        },
        Slot {
            name: "s",
            d1: Word::gen(1),
            d2: Word::gen(2).conjugate(&Word::gen(3)),
            m: params[1],
        },
        Slot {
            name: "t",
            d1: Word::gen(2),
            d2: rho_a3,
            m: params[2],
        },
        Slot {
            name: "w",
            d1: w([-2, 1, 2]),
            d2: w_prime_d2,
            m: params[3],
        },
    ];

    let mut fixed: Vec<(Word, Provenance)> = Vec::new();
    match kind {
        LoopKind::Irreducible | LoopKind::Reducible => {
            fixed.push((inner_loop_relator(), Provenance::InnerLoop));
        }
        LoopKind::DInner { .. } => {
            // rho b2 b3 b2^-1 rho^-1 = b2 and rho b2 rho^-1 = b3,
            // with b2 = a1, b3 = a3^-1 a2 a3.
            let b2 = Word::gen(1);
            let r1 = rho()
                .conjugate(&b2.mul(&beta3).mul(&b2.inverse()))
                .mul(&b2.inverse());
            let r2 = rho().conjugate(&b2).mul(&beta3.inverse());
            fixed.push((r1, Provenance::DFiber("inner loop".into())));
            fixed.push((r2, Provenance::DFiber("inner loop".into())));
        }
        LoopKind::NoOuterA => {
            fixed.push((inner_loop_relator(), Provenance::InnerLoop));
            let c1 = rho().mul(&w([1, 2, 1]));
            let c2 = rho().mul(&w([1, 2]));
            fixed.push((
                c1.conjugate(&Word::gen(2)).mul(&Word::gen(1).inverse()),
                Provenance::DFiber("r".into()),
            ));
            fixed.push((
                c2.conjugate(&Word::gen(1)).mul(&Word::gen(2).inverse()),
                Provenance::DFiber("r".into()),
            ));
        }
    }

    match extra {
        LoopExtra::None => {}
        LoopExtra::LowerLeftLoop => {
            let c1 = w([1, 2, 3, -2]);
            let c2 = w([-2, 1, 2]);
            let rel = c1
                .conjugate(&Word::gen(1))
                .mul(&c2.conjugate(&Word::gen(3)).inverse());
            fixed.push((rel, Provenance::Extra("lower left loop".into())));
        }
        LoopExtra::LeftLoop => {
            let rel = w([2, 3, -2]).mul(&rho().conjugate(&Word::gen(2)).inverse());
            fixed.push((rel, Provenance::Extra("left loop".into())));
        }
        LoopExtra::FreeLoopConj => {
            let rel = Word::gen(1).mul(&w([2, 3, -2]).inverse());
            fixed.push((rel, Provenance::Extra("free loop".into())));
        }
    }

    CurvePresentation::assemble(fixed, slots)
}

/// Hexagon with a double loop: the inner pentagon and monogon relations,
/// plus either `{a1, a2}_l` or, for the D9 row, `[a3, a1 a2] = 1`.
pub fn build_hex_double_loop(l: Option<u32>, d9: bool) -> CurvePresentation {
    let beta3 = w([-3, 2, 3]);
    // a1 (a3^-1 a2 a3) a1^-1 = a3^-1 a2^-1 a3 a2 a3
    let monogon = Word::gen(1)
        .conjugate(&beta3)
        .mul(&w([-3, -2, 3, 2, 3]).inverse());
    let mut fixed = vec![(monogon, Provenance::Extra("inner monogon".into()))];
    if d9 {
        fixed.push((
            Word::gen(3).commutator(&w([1, 2])),
            Provenance::DFiber("l".into()),
        ));
    }
    let slots = vec![
        Slot {
            name: "l",
            d1: Word::gen(1),
            d2: Word::gen(2),
            m: l,
        },
        Slot {
            name: "inner pentagon",
            d1: Word::gen(1),
            d2: beta3,
            m: Some(5),
        },
    ];
    CurvePresentation::assemble(fixed, slots)
}

/// Extra relation available for genuine-hexagon rows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HexExtra {
    None,
    /// One monogon inside the complementary hexagon:
    /// `(a2 a1 a2)^-1 a1 (a2 a1 a2) = a3`.
    Monogon1,
    /// Two monogons inside: `(a1 a2)^-1 a2 (a1 a2) = a3`.
    Monogon2,
}

/// `sigma2^i(a2)` as a word.
pub fn sigma2_power_of_a2(i: usize) -> Word {
    use crate::fpgroup::word::{braid_act, BraidWord};
    braid_act(&BraidWord::sigma2_pow(i), &Word::gen(2))
}

/// Genuine hexagon: relations `{sigma2^i(a2), a1}_{n_i}` for `i = 0..5`.
/// `None` entries are omitted (type-D fiber or ignored repeat).
pub fn build_genuine_hex(params: [Option<u32>; 6], extra: HexExtra) -> CurvePresentation {
    let slots: Vec<Slot> = (0..6)
        .map(|i| Slot {
            name: ["R0", "R1", "R2", "R3", "R4", "R5"][i],
            d1: sigma2_power_of_a2(i),
            d2: Word::gen(1),
            m: params[i].filter(|&m| m != 0),
        })
        .collect();
    let mut fixed = Vec::new();
    match extra {
        HexExtra::None => {}
        HexExtra::Monogon1 => {
            let c = w([2, 1, 2]);
            let rel = c
                .inverse()
                .conjugate(&Word::gen(1))
                .mul(&Word::gen(3).inverse());
            fixed.push((rel, Provenance::Extra("inner monogon".into())));
        }
        HexExtra::Monogon2 => {
            let c = w([1, 2]);
            let rel = c
                .inverse()
                .conjugate(&Word::gen(2))
                .mul(&Word::gen(3).inverse());
            fixed.push((rel, Provenance::Extra("monogon nearest v".into())));
        }
    }
    CurvePresentation::assemble(fixed, slots)
}

/// The two-E6 template of the 2E6+A6+A1 row: relations from the heptagon,
/// the bigon and the monovalent vertex.
pub fn build_two_e6() -> CurvePresentation {
    let slots = vec![
        Slot {
            name: "heptagon",
            d1: w([2, 3, -2]),
            d2: Word::gen(1),
            m: Some(7),
        },
        Slot {
            name: "bigon",
            d1: w([1, 2, 3, -2, -1]),
            d2: Word::gen(2),
            m: Some(2),
        },
    ];
    let fixed = vec![(
        rho().conjugate(&Word::gen(2)).mul(&w([2, 3, -2]).inverse()),
        Provenance::Monovalent,
    )];
    CurvePresentation::assemble(fixed, slots)
}

/// Central words used with the commutant-isomorphism lemma, per family.
pub mod central {
    use super::*;

    /// `(a2 a3)^3`, central in presence of the inner-loop relation.
    pub fn loop_family() -> Word {
        w([2, 3]).pow(3)
    }

    /// `rho^2 b2 b3` for the D-in-inner-loop rows.
    pub fn loop_d_family() -> Word {
        rho().pow(2).mul(&Word::gen(1)).mul(&w([-3, 2, 3]))
    }

    /// `(a1 a2)^n0` for genuine-hexagon rows whose `R_0` relation holds.
    pub fn hex_family(n0: u32) -> Word {
        w([1, 2]).pow(n0 as i32)
    }

    /// `a3 (a1 a2)^(1 + n/2)` for a type-D fiber in an `n`-gonal `R_0`.
    pub fn hex_d_family(n: u32) -> Word {
        assert!(n.is_multiple_of(2));
        Word::gen(3).mul(&w([1, 2]).pow(1 + (n / 2) as i32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::coset::{coset_enumerate, TcOptions};
    use crate::fpgroup::cyclic_kernel_table;
    use crate::fpgroup::rschreier::reidemeister_schreier;

    #[test]
    fn relation_at_infinity_shape() {
        let r = relation_at_infinity();
        assert_eq!(r.len(), 18);
        let sums = r.exponent_sums(3);
        assert_eq!(sums, vec![4, 1, 1]);
        // Exponent total 6, so the relation holds in C6 with a_i -> 1.
        assert_eq!(sums.iter().sum::<i64>() % 6, 0);
    }

    fn order(p: &Presentation) -> usize {
        coset_enumerate(p, &[], TcOptions::default()).unwrap().index
    }

    #[test]
    fn loop_rows_order_720() {
        // (l,m,n,k) = (4,5,-,-): order 720 with perfect derived subgroup
        // of order 120.
        let cp = build_hex_loop(
            [Some(4), Some(5), None, None],
            LoopKind::Irreducible,
            LoopExtra::None,
        );
        assert_eq!(order(&cp.presentation), 720);
        let table = cyclic_kernel_table(&cp.presentation, 6, &[1, 1, 1]).unwrap();
        let sub = reidemeister_schreier(&cp.presentation, &table).unwrap();
        assert!(sub.presentation.abelianization().is_trivial());
        assert_eq!(order(&sub.presentation), 120);
    }

    #[test]
    fn double_loop_rows() {
        // l = 4 gives the alternative order-720 presentation.
        let cp = build_hex_double_loop(Some(4), false);
        assert_eq!(order(&cp.presentation), 720);
        // l = 10 is abelian of order 6.
        let cp = build_hex_double_loop(Some(10), false);
        assert_eq!(order(&cp.presentation), 6);
        // the D9 variant is abelian of order 6.
        let cp = build_hex_double_loop(None, true);
        assert_eq!(order(&cp.presentation), 6);
    }

    #[test]
    fn two_e6_is_abelian() {
        let cp = build_two_e6();
        assert_eq!(order(&cp.presentation), 6);
    }

    #[test]
    fn hexagon_row_42_abelian() {
        let cp = build_genuine_hex(
            [Some(7), None, Some(3), Some(5), Some(2), None],
            HexExtra::None,
        );
        assert_eq!(order(&cp.presentation), 6);
    }

    #[test]
    fn quotient_7680() {
        // (6,5,3,-) with a1^5 added: perfect of order 7680.
        let cp = build_hex_loop(
            [Some(6), Some(5), Some(3), None],
            LoopKind::Irreducible,
            LoopExtra::None,
        );
        let q = cp.presentation.quotient(&[Word::gen(1).pow(5)]);
        assert!(q.abelianization().is_trivial());
        assert_eq!(order(&q), 7680);
    }

    #[test]
    fn row_11_extra_relation_forces_abelian() {
        let cp = build_hex_loop(
            [Some(4), Some(11), None, None],
            LoopKind::Irreducible,
            LoopExtra::LowerLeftLoop,
        );
        assert_eq!(order(&cp.presentation), 6);
    }

    #[test]
    fn row_28_d_inner_with_left_loop_abelian() {
        let cp = build_hex_loop(
            [Some(9), None, Some(1), None],
            LoopKind::DInner { reducible: false },
            LoopExtra::LeftLoop,
        );
        assert_eq!(order(&cp.presentation), 6);
    }

    #[test]
    fn omitting_one_braid_relation_keeps_abelianization() {
        let full = build_hex_loop(
            [Some(6), Some(5), Some(3), None],
            LoopKind::Irreducible,
            LoopExtra::None,
        );
        let dropped = build_hex_loop(
            [Some(6), Some(5), None, None],
            LoopKind::Irreducible,
            LoopExtra::None,
        );
        assert_eq!(
            full.presentation.abelianization(),
            dropped.presentation.abelianization()
        );
    }
}
