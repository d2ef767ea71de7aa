//! The perturbation calculus: relator-level surgery on the curve
//! presentations, the admissibility corollaries, and the verification
//! suite over all nonabelian parents.

use crate::catalog::{self, Family, LoopSpecKind, Row, ZKind};
use crate::fpgroup::homs::FiniteGroup;
use crate::fpgroup::presentation::Provenance;
use crate::fpgroup::word::{braid_relator, rho, Word};
use crate::fpgroup::{coset_enumerate, TcOptions};
use crate::rows::{
    self, abelianization_kernel_table, commutant_of_finite_h1, free_rank2_certificate, group_order,
    presentation_for,
};
use crate::vankampen::CurvePresentation;

/// Local perturbations of the distinguished E6 point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum E6Case {
    /// E6 -> 2A2 + A1 (torus-preserving): `[a1, rho^-2 a1 rho^2] = 1`.
    TwoA2A1,
    /// E6 -> 2A2 or A5 (torus-preserving): `[a1, rho^2] = 1`.
    TwoA2OrA5,
    /// Every other perturbation: `[a1, rho] = 1`, whence `a1^4 a2 a3 = 1`.
    Other,
}

pub fn e6_extra_relators(case: E6Case) -> Vec<Word> {
    let a1 = Word::gen(1);
    match case {
        E6Case::TwoA2A1 => vec![a1.commutator(&rho().pow(-2).conjugate(&a1))],
        E6Case::TwoA2OrA5 => vec![a1.commutator(&rho().pow(2))],
        E6Case::Other => vec![
            a1.commutator(&rho()),
            Word::from_letters([1, 1, 1, 1, 2, 3]),
        ],
    }
}

pub fn perturb_e6(cp: &CurvePresentation, case: E6Case) -> CurvePresentation {
    let extra: Vec<_> = e6_extra_relators(case)
        .into_iter()
        .map(|w| (w, Provenance::Extra(format!("E6 perturbation {:?}", case))))
        .collect();
    cp.with_extra(&extra)
}

/// Constraints on an A-type perturbation.
#[derive(Clone, Copy, Default, Debug)]
pub struct AConstraints {
    /// The point is an intersection of two components and the perturbation
    /// must be irreducible in a Milnor ball: `s` odd.
    pub irreducible_at_intersection: bool,
    /// The point is inner for a torus structure that must be destroyed:
    /// `s` not divisible by 3.
    pub torus_destroying: bool,
}

/// Divisors `s < p+1` of `p+1`, filtered by the constraints.
pub fn admissible_a_perturbations(p: u32, c: AConstraints) -> Vec<u32> {
    let n = p + 1;
    (1..n)
        .filter(|s| n.is_multiple_of(*s))
        .filter(|s| !c.irreducible_at_intersection || s % 2 == 1)
        .filter(|s| !c.torus_destroying || s % 3 != 0)
        .collect()
}

/// Replaces the braid relation at `slot` by `{d1, d2}_s`; if the slot's
/// relation was omitted from the presentation, the new relator is appended.
pub fn apply_a_perturbation(cp: &CurvePresentation, slot: &str, s: u32) -> CurvePresentation {
    cp.with_slot_exponent(slot, s)
}

/// D-perturbation modes per the local analysis.
#[derive(Clone, Debug)]
pub enum DPerturbation {
    /// Irreducible in a Milnor ball: the whole group becomes abelian;
    /// all generator commutators are appended.
    Irreducible,
    /// Still reducible: an extra relation `{d1, d2}_s`, `1 <= s <= p-2`;
    /// when three local components become two, `s` must be odd.
    Reducible { s: u32, three_to_two: bool },
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum PerturbError {
    #[error("a three-to-two-component D-perturbation needs odd s")]
    EvenSplit,
    #[error("s = {0} out of range for the D-perturbation")]
    OutOfRange(u32),
}

pub fn apply_d_perturbation(
    cp: &CurvePresentation,
    d_pair: (&Word, &Word),
    q: u32,
    mode: DPerturbation,
) -> Result<CurvePresentation, PerturbError> {
    match mode {
        DPerturbation::Irreducible => {
            let mut extra = Vec::new();
            for i in 1..=2 {
                for j in (i + 1)..=3 {
                    extra.push((
                        Word::gen(i).commutator(&Word::gen(j)),
                        Provenance::Extra("D perturbation (irreducible)".into()),
                    ));
                }
            }
            Ok(cp.with_extra(&extra))
        }
        DPerturbation::Reducible { s, three_to_two } => {
            if three_to_two && s % 2 == 0 {
                return Err(PerturbError::EvenSplit);
            }
            if s == 0 || s + 2 > q {
                return Err(PerturbError::OutOfRange(s));
            }
            let rel = braid_relator(d_pair.0, d_pair.1, s);
            Ok(cp.with_extra(&[(rel, Provenance::Extra("D perturbation".into()))]))
        }
    }
}

/// The `b2, b3` pair of the inner-loop D-fiber basis.
pub fn inner_loop_d_pair() -> (Word, Word) {
    (Word::gen(1), Word::from_letters([-3, 2, 3]))
}

/// The extra relation produced by perturbing the A1 point of the
/// E6+A7+A3+A2+A1 loop-family row (computed from the braid monodromy):
/// `(a2^-1 a1 a2) a3 (a2^-1 a1 a2)^-1 = rho^-1 a2 rho`.
pub fn row_3p_a1_relator() -> Word {
    let c = Word::from_letters([-2, 1, 2]);
    c.conjugate(&Word::gen(3))
        .mul(&rho().inverse().conjugate(&Word::gen(2)).inverse())
}

// ---------------------------------------------------------------------
// The verification suite.
// ---------------------------------------------------------------------

/// Expected outcome of one perturbation case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Irreducible, not of torus type: cyclic of order 6.
    C6,
    /// Still reducible, not of torus type: abelian (checked through the
    /// center).
    AbelianViaZ(ZKind),
    /// Still reducible, not of torus type: abelian, certified by Tietze
    /// simplification to a syntactically abelian presentation.
    AbelianSimplifies,
    /// Irreducible of torus type: isomorphic to the reduced braid group.
    RB3,
    /// One of the exceptional perturbations: recorded, never computed.
    External(&'static str),
    /// The open case: finite-quotient agreement with the parent only.
    QuotientAgreement,
}

/// Every relator is a power of one generator or a plain commutator of two
/// generators; such a presentation visibly presents an abelian group.
pub fn syntactically_abelian(p: &crate::fpgroup::presentation::Presentation) -> bool {
    p.relator_words().all(|r| {
        let mut gens: Vec<u32> = r.letters().iter().map(|l| l.unsigned_abs()).collect();
        gens.sort();
        gens.dedup();
        match gens.len() {
            0 | 1 => true,
            2 => {
                let w = r.letters();
                w.len() == 4 && w[0] == -w[2] && w[1] == -w[3]
            }
            _ => false,
        }
    })
}

#[derive(Clone, Debug)]
pub enum Surgery {
    E6(E6Case),
    Slot {
        name: &'static str,
        s: u32,
    },
    Relator(Word),
    /// All generator commutators (irreducible D-perturbation).
    AllCommutators,
}

#[derive(Clone, Debug)]
pub struct PerturbCase {
    pub parent: &'static str,
    pub label: String,
    pub surgery: Surgery,
    pub expect: Verdict,
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub case: PerturbCase,
    pub pass: bool,
    pub detail: String,
}

/// The matrix model of the reduced braid group (PSL(2,Z)): exact word
/// arithmetic for epimorphism checking.
mod psl2 {
    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    pub struct Mat(pub [i128; 4]);

    pub const ID: Mat = Mat([1, 0, 0, 1]);
    pub const S1: Mat = Mat([1, 1, 0, 1]);
    pub const S2: Mat = Mat([1, 0, -1, 1]);

    impl Mat {
        pub fn mul(self, o: Mat) -> Mat {
            let a = self.0;
            let b = o.0;
            Mat([
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ])
        }

        pub fn inv(self) -> Mat {
            let [a, b, c, d] = self.0;
            // determinant 1 throughout
            Mat([d, -b, -c, a])
        }

        pub fn is_identity_mod_center(self) -> bool {
            self == ID || self == Mat([-1, 0, 0, -1])
        }
    }

    /// Evaluates a word over two generators (letters +-1, +-2).
    pub fn eval(word: &[i32]) -> Mat {
        let mut m = ID;
        for &l in word {
            let g = match l {
                1 => S1,
                -1 => S1.inv(),
                2 => S2,
                -2 => S2.inv(),
                _ => panic!("two-generator word expected"),
            };
            m = m.mul(g);
        }
        m
    }
}

/// The reduced braid group presentation `<x, y | xyx = yxy, (xy)^3>`.
pub fn rb3_presentation() -> crate::fpgroup::presentation::Presentation {
    use crate::fpgroup::alpha;
    crate::fpgroup::presentation::Presentation::plain(
        2,
        vec![
            braid_relator(&alpha(1), &alpha(2), 3),
            Word::from_letters([1, 2]).pow(3),
        ],
    )
}

/// A Hopfian-route certificate that the presented group is the reduced
/// braid group: an explicit epimorphism onto it, H1 of order 6, and a
/// free-rank-2 commutant.
pub struct Rb3Certificate {
    pub images: [Word; 3],
}

pub fn rb3_certificate(
    p: &crate::fpgroup::presentation::Presentation,
) -> Result<Rb3Certificate, String> {
    let h1 = p.abelianization();
    if h1.order() != Some(6u32.into()) {
        return Err(format!("H1 is {} rather than Z/6", h1));
    }
    // Candidate meridian images in the PSL(2,Z) model: the two standard
    // generators conjugated by short words, deduplicated by matrix.
    let x = Word::gen(1);
    let y = Word::gen(2);
    let mut conjugators = vec![Word::identity()];
    let letters = [1, -1, 2, -2];
    let mut frontier = vec![Word::identity()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let nw = w.mul(&Word::gen(l));
                if nw.len() > w.len() {
                    next.push(nw.clone());
                    conjugators.push(nw);
                }
            }
        }
        frontier = next;
    }
    let mut cands: Vec<Word> = Vec::new();
    let mut seen_mats: Vec<psl2::Mat> = Vec::new();
    for c in &conjugators {
        for g in [&x, &y] {
            let w = c.conjugate(g);
            let m = psl2::eval(w.letters());
            let m = if m.0[0] < 0 || (m.0[0] == 0 && m.0[1] < 0) {
                psl2::Mat([-m.0[0], -m.0[1], -m.0[2], -m.0[3]])
            } else {
                m
            };
            if !seen_mats.contains(&m) {
                seen_mats.push(m);
                cands.push(w);
            }
        }
    }
    let mut relators: Vec<&Word> = p.relator_words().collect();
    relators.sort_by_key(|r| r.len());
    let mut found: Option<[Word; 3]> = None;
    'search: for i in 0..cands.len() {
        for j in 0..cands.len() {
            for k in 0..cands.len() {
                let images = [cands[i].clone(), cands[j].clone(), cands[k].clone()];
                let ok = relators.iter().all(|r| {
                    let mapped = r.substitute(&images);
                    psl2::eval(mapped.letters()).is_identity_mod_center()
                });
                if !ok {
                    continue;
                }
                // surjectivity: index of the image subgroup must be 1
                let rb3 = rb3_presentation();
                let t = coset_enumerate(
                    &rb3,
                    &images,
                    TcOptions {
                        limit: 50_000,
                        ..Default::default()
                    },
                );
                if let Ok(t) = t {
                    if t.index == 1 {
                        found = Some(images);
                        break 'search;
                    }
                }
            }
        }
    }
    let images = found.ok_or("no epimorphism onto the reduced braid group found")?;
    free_rank2_certificate(p).map_err(|e| format!("commutant certificate failed: {}", e))?;
    Ok(Rb3Certificate { images })
}

/// Finds one epimorphism onto S3 with transposition meridians.
pub fn find_s3_epi(p: &crate::fpgroup::presentation::Presentation) -> Option<Vec<usize>> {
    let s3 = FiniteGroup::symmetric_3();
    let trans = s3.transpositions();
    let mut images = vec![0usize; p.gens];
    fn rec(
        p: &crate::fpgroup::presentation::Presentation,
        s3: &FiniteGroup,
        trans: &[usize],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> bool {
        if depth == p.gens {
            let distinct = images.windows(2).any(|w| w[0] != w[1]);
            return distinct && p.relator_words().all(|r| s3.eval(r, images) == 0);
        }
        for &t in trans {
            images[depth] = t;
            if rec(p, s3, trans, images, depth + 1) {
                return true;
            }
        }
        false
    }
    rec(p, &s3, &trans, &mut images, 0).then_some(images)
}

/// Is the slot's section pair separated by the S3 epimorphism? Inner
/// singularities of the torus structure are exactly those whose two local
/// sections map to different transpositions.
fn slot_is_inner(cp: &CurvePresentation, epi: &[usize], slot: &str) -> bool {
    let s3 = FiniteGroup::symmetric_3();
    let sl = cp.slot(slot).expect("slot exists");
    s3.eval(&sl.d1, epi) != s3.eval(&sl.d2, epi)
}

const TC_LIMIT: usize = 400_000;

fn child_verdict_holds(
    parent: &Row,
    child: &crate::fpgroup::presentation::Presentation,
    expect: &Verdict,
) -> (bool, String) {
    match expect {
        Verdict::C6 => {
            let h1 = child.abelianization();
            if h1.order() != Some(6u32.into()) {
                return (false, format!("H1 = {}", h1));
            }
            match group_order(child, TC_LIMIT) {
                Ok(6) => (true, "order 6".into()),
                Ok(n) => (false, format!("order {}", n)),
                Err(e) => (false, format!("{}", e)),
            }
        }
        Verdict::AbelianViaZ(z) => match rows::abelian_via_center(child, *z, TC_LIMIT) {
            Ok((true, n)) => (true, format!("abelian, reduced order {}", n)),
            Ok((false, n)) => (false, format!("not abelian (reduced order {})", n)),
            Err(e) => (false, format!("{}", e)),
        },
        Verdict::AbelianSimplifies => {
            use crate::fpgroup::tietze::{tietze_simplify, TietzeBudget};
            let s = tietze_simplify(child, TietzeBudget::default());
            if syntactically_abelian(&s) && s.abelianization() == child.abelianization() {
                (
                    true,
                    format!(
                        "simplifies to an abelian presentation on {} generators",
                        s.gens
                    ),
                )
            } else {
                (
                    false,
                    "simplification did not reach an abelian presentation".into(),
                )
            }
        }
        Verdict::RB3 => match rb3_certificate(child) {
            Ok(cert) => (
                true,
                format!(
                    "reduced braid group via a1->{}, a2->{}, a3->{}",
                    cert.images[0], cert.images[1], cert.images[2]
                ),
            ),
            Err(e) => (false, e),
        },
        Verdict::External(reason) => (true, format!("external: {}", reason)),
        Verdict::QuotientAgreement => {
            // Orders of the commutants of child/a1^2 and child/a1^3 agree
            // with the parent's recorded data (60 and 51840).
            let mut detail = String::new();
            for (k, want) in [(2u32, 60u64), (3, 51840)] {
                let q = child.quotient(&[Word::gen(1).pow(k as i32)]);
                // centrality machine-check of the parent's central word
                if let Family::Hex { .. } = parent.family {
                    if let Ok(t) = abelianization_kernel_table(&q) {
                        for z in rows::central_words(ZKind::A1A2Pow(10)) {
                            if !t.is_central(&z) {
                                return (false, "central word not central in quotient".into());
                            }
                        }
                    }
                }
                match commutant_of_finite_h1(&q, TC_LIMIT) {
                    Ok(c) if c.order == want => {
                        detail.push_str(&format!("commutant of /a1^{} = {}; ", k, c.order));
                    }
                    Ok(c) => return (false, format!("commutant of /a1^{} = {}", k, c.order)),
                    Err(e) => return (false, format!("{}", e)),
                }
            }
            detail.push_str("agrees with parent (isomorphism recorded unverified)");
            (true, detail)
        }
    }
}

/// Builds the case list for one parent row.
pub fn cases_for_parent(row: &'static Row) -> Vec<PerturbCase> {
    let mut out = Vec::new();
    let Some(cp) = presentation_for(row) else {
        return out;
    };
    let torus = row.pi1.torus;
    let irreducible = matches!(row.table, catalog::Table::Irreducible);
    let all_proper_abelian = matches!(
        row.id,
        "T2-03'" | "T2-06'" | "T2-15'" | "T2-16'" | "T2-30'" | "T2-33'"
    );
    let nontorus_abelian = matches!(row.id, "T2-01'" | "T2-20'" | "T2-24'" | "T2-28'" | "T2-29'");
    let z = row
        .pi1
        .checks
        .iter()
        .find_map(|c| match c {
            catalog::Check::AbelianViaCenter(z)
            | catalog::Check::CommutantViaCenter { z, .. }
            | catalog::Check::CommutantPerfectViaCenter(z) => Some(*z),
            _ => None,
        })
        .unwrap_or(match &row.family {
            Family::Hex { params, .. } => ZKind::A1A2Pow(params[0].unwrap_or(2)),
            Family::Loop {
                kind: LoopSpecKind::DInner | LoopSpecKind::DInnerReducible,
                ..
            } => ZKind::RhoSqB2B3,
            _ => ZKind::A2A3Cubed,
        });
    // The centrality of (a1 a2)^n0 rests on the monogon relation
    // expressing a3 through a1, a2; without it, abelianness is certified
    // by simplification instead.
    let hex_without_monogon = matches!(
        row.family,
        Family::Hex {
            extra: crate::catalog::HexExtraSpec::NoExtra,
            ..
        }
    );
    let abelian_verdict = |z: ZKind| -> Verdict {
        if hex_without_monogon {
            Verdict::AbelianSimplifies
        } else {
            Verdict::AbelianViaZ(z)
        }
    };

    // The E6 cases.
    let e6_cases: Vec<(E6Case, Verdict)> = if row.id == "T2-34'" {
        vec![
            (E6Case::TwoA2A1, Verdict::QuotientAgreement),
            (E6Case::TwoA2OrA5, abelian_verdict(z)),
            (E6Case::Other, abelian_verdict(z)),
        ]
    } else if torus && irreducible {
        vec![
            (E6Case::TwoA2A1, Verdict::RB3),
            (E6Case::TwoA2OrA5, Verdict::RB3),
            (E6Case::Other, Verdict::C6),
        ]
    } else if torus {
        // reducible torus parents: the torus-preserving E6 cases leave the
        // curve reducible (no claim); the destroying one is abelian.
        vec![(E6Case::Other, abelian_verdict(z))]
    } else if irreducible {
        vec![
            (E6Case::TwoA2A1, Verdict::C6),
            (E6Case::TwoA2OrA5, Verdict::C6),
            (E6Case::Other, Verdict::C6),
        ]
    } else {
        // reducible non-torus: covered only for the all-abelian rows
        vec![
            (E6Case::TwoA2A1, abelian_verdict(z)),
            (E6Case::TwoA2OrA5, abelian_verdict(z)),
            (E6Case::Other, abelian_verdict(z)),
        ]
    };
    for (case, verdict) in e6_cases {
        out.push(PerturbCase {
            parent: row.id,
            label: format!("E6 -> {:?}", case),
            surgery: Surgery::E6(case),
            expect: verdict,
        });
    }

    // A-type points at the named slots.
    let s3_epi = torus.then(|| find_s3_epi(&cp.presentation)).flatten();
    let mut slots: Vec<(&'static str, u32)> = Vec::new();
    match &row.family {
        Family::Loop { params, .. } => {
            for (i, name) in ["r", "s", "t", "w"].iter().enumerate() {
                if let Some(n) = params[i] {
                    slots.push((name, n));
                }
            }
        }
        Family::DoubleLoop { l, .. } => {
            if let Some(n) = l {
                slots.push(("l", *n));
            }
            slots.push(("inner pentagon", 5));
        }
        Family::Hex { params, .. } => {
            for (i, name) in ["R0", "R1", "R2", "R3", "R4", "R5"].iter().enumerate() {
                if let Some(n) = params[i] {
                    slots.push((name, n));
                }
            }
        }
        _ => {}
    }
    for (name, n) in slots {
        if n < 2 {
            continue; // monogon: no singular point
        }
        let p = n - 1;
        let inner = torus
            && s3_epi
                .as_ref()
                .is_some_and(|epi| slot_is_inner(&cp, epi, name));
        for s in admissible_a_perturbations(p, AConstraints::default()) {
            let exceptional = matches!(
                (row.id, name, n, s),
                ("T1-09", "r", 6, 3) | ("T1-18", "r", 9, 3) | ("T2-20'", "R1", 6, 3)
            );
            let child = apply_a_perturbation(&cp, name, s);
            let child_c6 = child.presentation.abelianization().order() == Some(6u32.into());
            let verdict = if exceptional {
                Verdict::External(
                    "perturbs into the families treated in other work (Theorem exception)",
                )
            } else if torus {
                let preserves = !inner || s % 3 == 0;
                if preserves {
                    if child_c6 {
                        Verdict::RB3
                    } else {
                        continue; // still reducible and of torus type: no claim
                    }
                } else if child_c6 {
                    Verdict::C6
                } else if nontorus_abelian || all_proper_abelian {
                    abelian_verdict(if name == "R0" { ZKind::A1A2Pow(s) } else { z })
                } else {
                    continue;
                }
            } else if irreducible {
                Verdict::C6
            } else if all_proper_abelian {
                if child_c6 {
                    Verdict::C6
                } else {
                    abelian_verdict(if name == "R0" { ZKind::A1A2Pow(s) } else { z })
                }
            } else {
                continue;
            };
            out.push(PerturbCase {
                parent: row.id,
                label: format!("A{} at {} (s = {})", p, name, s),
                surgery: Surgery::Slot { name, s },
                expect: verdict,
            });
        }
    }

    // D-type points of the all-abelian parents.
    if matches!(row.id, "T2-15'" | "T2-16'") {
        out.push(PerturbCase {
            parent: row.id,
            label: "D5 perturbed irreducibly in a Milnor ball".into(),
            surgery: Surgery::AllCommutators,
            expect: Verdict::AbelianViaZ(z),
        });
        // reducible D-perturbation with s = 1: the section pair of the
        // monogon carrying the fiber (the free loop for 15', the inner
        // loop for 16').
        if row.d_inner {
            let (d1, d2) = inner_loop_d_pair();
            out.push(PerturbCase {
                parent: row.id,
                label: "D5 perturbed reducibly (s = 1)".into(),
                surgery: Surgery::Relator(braid_relator(&d1, &d2, 1)),
                expect: Verdict::AbelianViaZ(z),
            });
        } else {
            out.push(PerturbCase {
                parent: row.id,
                label: "D5 perturbed reducibly (s = 1)".into(),
                surgery: Surgery::Slot { name: "w", s: 1 },
                expect: Verdict::AbelianViaZ(z),
            });
        }
    }

    // The A1 point of row 3', with the braid-monodromy relator.
    if row.id == "T2-03'" {
        out.push(PerturbCase {
            parent: row.id,
            label: "A1 (s = 1), appended relator".into(),
            surgery: Surgery::Relator(row_3p_a1_relator()),
            expect: Verdict::AbelianViaZ(z),
        });
    }
    out
}

/// The parents covered by the perturbation analysis: every row with a
/// nonabelian (or open) group whose presentation the catalog builds,
/// except those the analysis itself defers to other work.
pub fn suite_parents() -> Vec<&'static Row> {
    const IDS: &[&str] = &[
        "T1-04", "T1-05", "T1-09", "T1-12", "T1-13", "T1-18", "T1-40", "T1-41", "T2-01'", "T2-03'",
        "T2-06'", "T2-15'", "T2-16'", "T2-20'", "T2-24'", "T2-28'", "T2-29'", "T2-30'", "T2-33'",
        "T2-34'",
    ];
    IDS.iter().map(|id| catalog::row(id).unwrap()).collect()
}

/// Runs one case.
pub fn run_case(case: &PerturbCase) -> CaseOutcome {
    let row = catalog::row(case.parent).unwrap();
    let mut cp = presentation_for(row).unwrap();
    if rows::has_aux_hex2(row) {
        cp = cp.with_extra(&[(
            rows::aux_hex2_relator(),
            Provenance::Extra("auxiliary monogon relation".into()),
        )]);
    }
    let child = match &case.surgery {
        Surgery::E6(c) => perturb_e6(&cp, *c),
        Surgery::Slot { name, s } => apply_a_perturbation(&cp, name, *s),
        Surgery::Relator(w) => {
            cp.with_extra(&[(w.clone(), Provenance::Extra("perturbation relator".into()))])
        }
        Surgery::AllCommutators => {
            let mut extra = Vec::new();
            for i in 1..=2i32 {
                for j in (i + 1)..=3 {
                    extra.push((
                        Word::gen(i).commutator(&Word::gen(j)),
                        Provenance::Extra("D perturbation (irreducible)".into()),
                    ));
                }
            }
            cp.with_extra(&extra)
        }
    };
    let (pass, detail) = child_verdict_holds(row, &child.presentation, &case.expect);
    CaseOutcome {
        case: case.clone(),
        pass,
        detail,
    }
}

/// Runs the whole suite; the report lists one line per case.
pub fn verify_perturbation_suite() -> Vec<CaseOutcome> {
    use rayon::prelude::*;
    let cases: Vec<PerturbCase> = suite_parents()
        .into_iter()
        .flat_map(cases_for_parent)
        .collect();
    cases.par_iter().map(run_case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_divisors() {
        // p = 4: 5 is prime, only s = 1.
        assert_eq!(
            admissible_a_perturbations(4, AConstraints::default()),
            vec![1]
        );
        // p = 5 at a two-component intersection: odd divisors of 6.
        assert_eq!(
            admissible_a_perturbations(
                5,
                AConstraints {
                    irreducible_at_intersection: true,
                    ..Default::default()
                }
            ),
            vec![1, 3]
        );
        // p = 8, torus-destroying: divisors of 9 below 9, not divisible by 3.
        assert_eq!(
            admissible_a_perturbations(
                8,
                AConstraints {
                    torus_destroying: true,
                    ..Default::default()
                }
            ),
            vec![1]
        );
    }

    #[test]
    fn d_perturbation_modes() {
        let row = catalog::row("T1-26").unwrap();
        let cp = presentation_for(row).unwrap();
        // irreducible mode: abelian, order 6 (the parent is already C6).
        let child = apply_d_perturbation(
            &cp,
            (&Word::gen(2), &rho().conjugate(&Word::gen(3))),
            13,
            DPerturbation::Irreducible,
        )
        .unwrap();
        assert_eq!(group_order(&child.presentation, 10_000).unwrap(), 6);
        // a three-to-two split with even s is rejected
        let r = apply_d_perturbation(
            &cp,
            (&Word::gen(2), &rho().conjugate(&Word::gen(3))),
            13,
            DPerturbation::Reducible {
                s: 2,
                three_to_two: true,
            },
        );
        assert_eq!(r.unwrap_err(), PerturbError::EvenSplit);
    }

    #[test]
    fn d_reducible_s2_on_row_12p() {
        let row = catalog::row("T2-12'").unwrap();
        let cp = presentation_for(row).unwrap();
        let (d1, d2) = inner_loop_d_pair();
        let child = apply_d_perturbation(
            &cp,
            (&d1, &d2),
            5,
            DPerturbation::Reducible {
                s: 2,
                three_to_two: false,
            },
        )
        .unwrap();
        let (abelian, _) =
            rows::abelian_via_center(&child.presentation, ZKind::RhoSqB2B3, 100_000).unwrap();
        assert!(abelian);
    }

    #[test]
    fn s1_is_identification() {
        use crate::fpgroup::alpha;
        let rel = braid_relator(&alpha(1), &alpha(2), 1);
        assert_eq!(rel, Word::from_letters([1, -2]));
    }

    #[test]
    fn e6_other_with_bigon_is_abelian() {
        // Lemma: a genuine hexagon with a bigonal region and the "other"
        // E6 perturbation gives an abelian group. Row 20' has a bigonal R0.
        let row = catalog::row("T2-20'").unwrap();
        let cp = presentation_for(row).unwrap();
        let child = perturb_e6(&cp, E6Case::Other);
        let (abelian, _) =
            rows::abelian_via_center(&child.presentation, ZKind::A1A2Pow(2), 100_000).unwrap();
        assert!(abelian);
    }

    #[test]
    fn e6_other_consequence_follows_in_finite_quotients() {
        // [a1, rho] = 1 together with the relation at infinity forces
        // a1^4 a2 a3 = 1; checked in finite quotients without appending
        // the consequence itself.
        for id in ["T1-05", "T1-21", "T2-05'"] {
            let row = catalog::row(id).unwrap();
            let cp = presentation_for(row).unwrap();
            let q = cp
                .presentation
                .quotient(&[Word::gen(1).commutator(&rho())])
                .quotient(&[
                    Word::gen(1).pow(4),
                    Word::gen(2).pow(4),
                    Word::gen(3).pow(4),
                ]);
            let t = coset_enumerate(&q, &[], TcOptions::default()).unwrap();
            assert!(t.is_identity(&Word::from_letters([1, 1, 1, 1, 2, 3])));
        }
    }

    #[test]
    fn row_9_worst_torus_perturbation_is_rb3() {
        let row = catalog::row("T1-09").unwrap();
        let cp = presentation_for(row).unwrap();
        let child = perturb_e6(&cp, E6Case::TwoA2A1);
        let cert = rb3_certificate(&child.presentation);
        assert!(cert.is_ok(), "{:?}", cert.err());
    }
}
