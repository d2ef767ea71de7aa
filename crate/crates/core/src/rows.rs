//! Building the presentation of a catalog row and the group computations
//! behind each catalog check.

use crate::catalog::{Family, HexExtraSpec, LoopExtraSpec, LoopSpecKind, Row, ZKind};
use crate::fpgroup::coset::{coset_enumerate, CosetError, CosetTable, TcOptions};
use crate::fpgroup::presentation::Presentation;
use crate::fpgroup::rschreier::reidemeister_schreier;
use crate::fpgroup::snf::smith_normal_form;
use crate::fpgroup::tietze::{is_free_certificate, tietze_simplify, TietzeBudget};
use crate::fpgroup::word::{rho, Word};
use crate::vankampen::{
    build_genuine_hex, build_hex_double_loop, build_hex_loop, build_two_e6, central,
    CurvePresentation, HexExtra, LoopExtra, LoopKind,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// The presentation of a catalog row; `None` for rows whose group is
/// imported from other work.
pub fn presentation_for(row: &Row) -> Option<CurvePresentation> {
    match row.family {
        Family::External => None,
        Family::TwoE6 => Some(build_two_e6()),
        Family::Loop {
            params,
            kind,
            extra,
        } => {
            let kind = match kind {
                LoopSpecKind::WPrime => LoopKind::Irreducible,
                LoopSpecKind::WSecond => LoopKind::Reducible,
                LoopSpecKind::DInner => LoopKind::DInner { reducible: false },
                LoopSpecKind::DInnerReducible => LoopKind::DInner { reducible: true },
                LoopSpecKind::NoOuterA => LoopKind::NoOuterA,
            };
            let extra = match extra {
                LoopExtraSpec::None => LoopExtra::None,
                LoopExtraSpec::LowerLeftLoop => LoopExtra::LowerLeftLoop,
                LoopExtraSpec::LeftLoop => LoopExtra::LeftLoop,
                LoopExtraSpec::FreeLoop => LoopExtra::FreeLoopConj,
            };
            Some(build_hex_loop(params, kind, extra))
        }
        Family::DoubleLoop { l, d9 } => Some(build_hex_double_loop(l, d9)),
        Family::Hex { params, extra, .. } => {
            let extra = match extra {
                HexExtraSpec::NoExtra => HexExtra::None,
                HexExtraSpec::Monogon1 => HexExtra::Monogon1,
                HexExtraSpec::Monogon2 => HexExtra::Monogon2,
            };
            Some(build_genuine_hex(params, extra))
        }
    }
}

/// The auxiliary monogon relation of the genuine-hexagon rows 40 and 41;
/// it holds in the group (it follows from the other relations) and is
/// appended where it aids coset enumeration or simplification.
pub fn aux_hex2_relator() -> Word {
    let c = Word::from_letters([1, 2]);
    c.inverse()
        .conjugate(&Word::gen(2))
        .mul(&Word::gen(3).inverse())
}

pub fn has_aux_hex2(row: &Row) -> bool {
    matches!(row.family, Family::Hex { aux_hex2: true, .. })
}

/// The central words of a center-reduction recipe.
pub fn central_words(z: ZKind) -> Vec<Word> {
    match z {
        ZKind::A2A3Cubed => vec![central::loop_family()],
        ZKind::RhoSqB2B3 => vec![central::loop_d_family()],
        ZKind::A1A2Pow(n) => vec![central::hex_family(n)],
        ZKind::HexD { n0 } => vec![central::hex_d_family(n0), rho().pow(4)],
    }
}

#[derive(thiserror::Error, Debug)]
pub enum ComputeError {
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error("abelianization is infinite where a finite quotient was required")]
    InfiniteAbelianization,
    #[error("central word has finite abelianized order (center reduction hypothesis fails)")]
    CenterHypothesis,
    #[error("simplification did not reach the free certificate (inconclusive)")]
    NotFreeCertificate,
}

/// The coset table of the kernel of the abelianization map, which must be
/// finite. Cosets are the elements of H1.
pub fn abelianization_kernel_table(p: &Presentation) -> Result<CosetTable, ComputeError> {
    let snf = smith_normal_form(&p.relation_matrix());
    let diag = snf.diagonal();
    if diag.len() < p.gens {
        return Err(ComputeError::InfiniteAbelianization);
    }
    let moduli: Vec<u64> = diag
        .iter()
        .map(|d| d.to_u64().expect("small torsion"))
        .collect();
    // Generator j maps to row j of V, reduced modulo the moduli.
    let images: Vec<Vec<u64>> = (0..p.gens)
        .map(|j| {
            (0..p.gens)
                .map(|i| {
                    let v: BigInt = snf.v[(j, i)].clone();
                    let m = BigInt::from(moduli[i]);
                    let r = ((v % &m) + &m) % &m;
                    r.to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    // Regular action on the product of cyclic groups.
    let order: u64 = moduli.iter().product();
    let n = order as usize;
    let radix = moduli.clone();
    let index_of = |tuple: &[u64]| -> usize {
        let mut acc = 0usize;
        for (t, m) in tuple.iter().zip(&radix) {
            acc = acc * (*m as usize) + *t as usize;
        }
        acc
    };
    let tuple_of = |mut idx: usize| -> Vec<u64> {
        let mut out = vec![0u64; radix.len()];
        for i in (0..radix.len()).rev() {
            out[i] = (idx % radix[i] as usize) as u64;
            idx /= radix[i] as usize;
        }
        out
    };
    let gens = p.gens;
    let mut table = vec![0u32; n * 2 * gens];
    for c in 0..n {
        let t = tuple_of(c);
        for g in 0..gens {
            let fwd: Vec<u64> = t
                .iter()
                .zip(&images[g])
                .zip(&radix)
                .map(|((a, b), m)| (a + b) % m)
                .collect();
            let bwd: Vec<u64> = t
                .iter()
                .zip(&images[g])
                .zip(&radix)
                .map(|((a, b), m)| (a + m - b) % m)
                .collect();
            table[c * 2 * gens + 2 * g] = index_of(&fwd) as u32;
            table[c * 2 * gens + 2 * g + 1] = index_of(&bwd) as u32;
        }
    }
    let t = CosetTable::from_raw(gens, table, n);
    t.validate(p, &[])?;
    Ok(t)
}

/// Order of the group by coset enumeration over the trivial subgroup.
pub fn group_order(p: &Presentation, limit: usize) -> Result<u64, ComputeError> {
    let t = coset_enumerate(
        p,
        &[],
        TcOptions {
            limit,
            ..Default::default()
        },
    )?;
    Ok(t.index as u64)
}

/// Is the group abelian? Decided by `|G/z| == |H1(G/z)|` after quotienting
/// by the central words (whose abelianized images must generate an
/// infinite part), or directly when H1 is already finite.
pub fn abelian_via_center(
    p: &Presentation,
    z: ZKind,
    limit: usize,
) -> Result<(bool, u64), ComputeError> {
    let h1 = p.abelianization();
    let q = if h1.is_finite() {
        p.clone()
    } else {
        let words = central_words(z);
        for w in &words {
            if !p.abelianized_image_has_infinite_order(w) {
                return Err(ComputeError::CenterHypothesis);
            }
        }
        p.quotient(&words)
    };
    let target = q
        .abelianization()
        .order()
        .ok_or(ComputeError::InfiniteAbelianization)?
        .to_u64()
        .expect("small order");
    let order = group_order(&q, limit)?;
    Ok((order == target, order))
}

/// Result of a commutant computation after center reduction.
pub struct CommutantResult {
    pub order: u64,
    pub perfect: bool,
}

/// Order and perfectness of the commutant of `p/z` (isomorphic to the
/// commutant of `p` when the central words have infinite abelianized
/// order), via Reidemeister-Schreier over the finite abelianization.
pub fn commutant_via_center(
    p: &Presentation,
    z: ZKind,
    limit: usize,
) -> Result<CommutantResult, ComputeError> {
    let words = central_words(z);
    for w in &words {
        if !p.abelianized_image_has_infinite_order(w) {
            return Err(ComputeError::CenterHypothesis);
        }
    }
    let q = p.quotient(&words);
    commutant_of_finite_h1(&q, limit)
}

/// Commutant order of a presentation whose H1 is finite. The raw
/// Reidemeister-Schreier presentation is enumerated directly: the
/// redundancy of its relators is what keeps the coset table small.
pub fn commutant_of_finite_h1(
    q: &Presentation,
    limit: usize,
) -> Result<CommutantResult, ComputeError> {
    let table = abelianization_kernel_table(q)?;
    let sub = reidemeister_schreier(q, &table)?;
    let perfect = sub.presentation.abelianization().is_trivial();
    let order = group_order(&sub.presentation, limit)?;
    Ok(CommutantResult { order, perfect })
}

/// Whether the commutant presentation after center reduction abelianizes
/// to zero (i.e. the commutant is perfect).
pub fn commutant_perfect_via_center(p: &Presentation, z: ZKind) -> Result<bool, ComputeError> {
    let words = central_words(z);
    for w in &words {
        if !p.abelianized_image_has_infinite_order(w) {
            return Err(ComputeError::CenterHypothesis);
        }
    }
    let q = p.quotient(&words);
    let table = abelianization_kernel_table(&q)?;
    let sub = reidemeister_schreier(&q, &table)?;
    Ok(sub.presentation.abelianization().is_trivial())
}

/// The free-rank-2 commutant certificate: Reidemeister-Schreier over the
/// kernel of the order-6 abelianization, then Tietze simplification down
/// to two generators and no relators.
pub fn free_rank2_certificate(p: &Presentation) -> Result<Presentation, ComputeError> {
    let table = abelianization_kernel_table(p)?;
    let sub = reidemeister_schreier(p, &table)?;
    let simplified = tietze_simplify(&sub.presentation, TietzeBudget::default());
    if is_free_certificate(&simplified, 2) {
        Ok(simplified)
    } else {
        Err(ComputeError::NotFreeCertificate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn row(id: &str) -> &'static catalog::Row {
        catalog::row(id).unwrap()
    }

    #[test]
    fn order_720_rows() {
        use crate::fpgroup::{coset_enumerate, Strategy, TcOptions};
        for id in ["T1-04", "T1-05"] {
            let p = presentation_for(row(id)).unwrap().presentation;
            assert_eq!(group_order(&p, 100_000).unwrap(), 720, "{}", id);
            // strategy independence
            let felsch = coset_enumerate(
                &p,
                &[],
                TcOptions {
                    strategy: Strategy::Felsch,
                    limit: 100_000,
                },
            )
            .unwrap();
            assert_eq!(felsch.index, 720);
            let c = commutant_of_finite_h1(&p, 100_000).unwrap();
            assert_eq!(c.order, 120);
            assert!(c.perfect);
        }
    }

    #[test]
    fn row_1p_quotient_48() {
        let p = presentation_for(row("T2-01'")).unwrap().presentation;
        let q = p.quotient(&[Word::gen(1).pow(2)]);
        assert_eq!(group_order(&q, 100_000).unwrap(), 48);
    }

    #[test]
    fn row_3p_commutant_336() {
        let p = presentation_for(row("T2-03'")).unwrap().presentation;
        let c = commutant_via_center(&p, ZKind::A2A3Cubed, 200_000).unwrap();
        assert_eq!(c.order, 336);
        assert!(c.perfect);
    }

    #[test]
    fn row_15p_16p_commutant_27() {
        let p = presentation_for(row("T2-15'")).unwrap().presentation;
        let c = commutant_via_center(&p, ZKind::A2A3Cubed, 100_000).unwrap();
        assert_eq!(c.order, 27);
        assert!(!c.perfect);
        let p = presentation_for(row("T2-16'")).unwrap().presentation;
        let c = commutant_via_center(&p, ZKind::RhoSqB2B3, 100_000).unwrap();
        assert_eq!(c.order, 27);
    }

    #[test]
    fn b3bar_certificate_row_13() {
        let p = presentation_for(row("T1-13")).unwrap().presentation;
        let cert = free_rank2_certificate(&p).unwrap();
        assert!(is_free_certificate(&cert, 2));
    }

    #[test]
    fn center_reduce_hypotheses() {
        use crate::fpgroup::presentation::center_reduce;
        use crate::vankampen::central;
        // (a2 a3)^3 has abelianized image -12 on a quintic-plus-line row.
        let p = presentation_for(row("T2-02'")).unwrap().presentation;
        assert!(center_reduce(&p, &central::loop_family()).is_ok());
        // rho^2 b2 b3 has abelianized image -4 on a D-in-loop row.
        let p = presentation_for(row("T2-12'")).unwrap().presentation;
        assert!(center_reduce(&p, &central::loop_d_family()).is_ok());
        // a1 on an irreducible row has finite abelianized order: rejected.
        let p = presentation_for(row("T1-09")).unwrap().presentation;
        assert!(center_reduce(&p, &Word::gen(1)).is_err());
    }

    #[test]
    fn reducible_abelian_spot_checks() {
        for (id, z) in [
            ("T2-02'", ZKind::A2A3Cubed),
            ("T2-12'", ZKind::RhoSqB2B3),
            ("T2-17'", ZKind::A2A3Cubed),
            ("T2-25'", ZKind::A1A2Pow(10)),
            ("T2-35'", ZKind::HexD { n0: 4 }),
        ] {
            let p = presentation_for(row(id)).unwrap().presentation;
            let (abelian, _) = abelian_via_center(&p, z, 200_000).unwrap();
            assert!(abelian, "{} should be abelian", id);
        }
    }
}
