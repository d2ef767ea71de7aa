//! Positional template parameters: which region of a skeleton sits in
//! which relation slot, for validating the catalog parameters against the
//! enumerated classes and for locating the relator a perturbation rewrites.

use crate::config::{hex_boundary, Configuration};
use crate::skeleton::ClassDatum;

/// Face ids of the four slots of the hexagon-with-a-loop template plus the
/// inner monogon, for one choice of base vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LoopSlotFaces {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub inner_monogon: u32,
}

/// Both base-vertex choices for a hexagon-with-a-loop boundary, when the
/// boundary has the loop pattern.
pub fn loop_slot_faces(datum: &ClassDatum) -> Vec<LoopSlotFaces> {
    let sk = &datum.sk;
    let b = hex_boundary(datum);
    let count = |v: u32| b.corner_vertex.iter().filter(|&&x| x == v).count();
    let simples: Vec<usize> = (0..6).filter(|&i| count(b.corner_vertex[i]) == 1).collect();
    if simples.len() != 2 {
        return Vec::new();
    }
    let inner = b
        .darts
        .iter()
        .enumerate()
        .find_map(|(i, &x)| (sk.vertex_of(x) == sk.vertex_of(sk.inv(x))).then(|| b.across[i]));
    let Some(inner_monogon) = inner else {
        return Vec::new();
    };
    // face at the corner opposite the arrival along dart `c`
    let opposite = |c: u32| sk.face_of(sk.rot(sk.rot(sk.inv(c))));
    simples
        .into_iter()
        .map(|j| {
            let y = sk.inv(b.darts[j]); // e2
            let e3 = sk.rot(y);
            let e1 = sk.rot(e3);
            let l = sk.face_of(y);
            let m = sk.face_of(e1);
            let z = sk.inv(e1);
            let n = sk.face_of(sk.rot(sk.rot(z)));
            let mut k = opposite(sk.rot(z));
            if k == datum.hexagon {
                k = opposite(sk.rot(sk.rot(z)));
            }
            LoopSlotFaces {
                l,
                m,
                n,
                k,
                inner_monogon,
            }
        })
        .collect()
}

/// The `l`-slot face and the inner pentagon/monogon of a double-loop
/// boundary.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DoubleLoopFaces {
    pub l: u32,
    pub inner_pentagon: u32,
}

pub fn double_loop_faces(datum: &ClassDatum) -> Vec<DoubleLoopFaces> {
    let b = hex_boundary(datum);
    let count = |v: u32| b.corner_vertex.iter().filter(|&&x| x == v).count();
    // The inner pentagon of the insertion is a 5-gon adjacent across two
    // boundary edges; the l-region sits across a simple corner.
    let mut out = Vec::new();
    let mut pents: Vec<u32> = (0..6)
        .filter(|&i| {
            b.across.iter().filter(|&&f| f == b.across[i]).count() == 2
                && b.across[i] != datum.hexagon
                && face_size(datum, b.across[i]) == 5
        })
        .map(|i| b.across[i])
        .collect();
    pents.dedup();
    for pent in pents {
        for l in (0..6)
            .filter(|&i| count(b.corner_vertex[i]) == 1)
            .map(|i| b.across[i])
            .filter(|&f| f != pent)
        {
            let cand = DoubleLoopFaces {
                l,
                inner_pentagon: pent,
            };
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

/// The six corner regions `R_0..R_5` of a genuine hexagon for every
/// starting corner, walking the boundary in trace order.
pub fn hex_corner_faces(datum: &ClassDatum) -> Vec<[u32; 6]> {
    let b = hex_boundary(datum);
    (0..6)
        .map(|start| std::array::from_fn(|i| b.across[(start + i) % 6]))
        .collect()
}

/// Face size lookup.
pub fn face_size(datum: &ClassDatum, id: u32) -> u32 {
    datum
        .sk
        .trace_faces()
        .iter()
        .find(|f| f.id() == id)
        .map(|f| f.size() as u32)
        .expect("face exists")
}

/// Result of validating catalog parameters against a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamCheck {
    /// The parameters fit; the assignment maps slot names to face ids.
    Compatible(Vec<(&'static str, u32)>),
    Mismatch(String),
}

/// Validates hexagon-with-a-loop parameters `(l, m, n, k)` against the
/// class, trying both base corners and, for a mirror-symmetric listing,
/// the mirror class.
pub fn check_loop_params(datum: &ClassDatum, params: [Option<u32>; 4]) -> ParamCheck {
    for d in [datum.clone(), datum.mirror()] {
        for slots in loop_slot_faces(&d) {
            let actual = [slots.l, slots.m, slots.n, slots.k];
            let fit = params
                .iter()
                .zip(actual.iter())
                .all(|(want, &face)| want.is_none_or(|w| w == face_size(&d, face)));
            if fit {
                let names = ["r", "s", "t", "w"];
                return ParamCheck::Compatible(
                    names.iter().copied().zip(actual.iter().copied()).collect(),
                );
            }
        }
    }
    ParamCheck::Mismatch(format!(
        "no base corner realizes loop parameters {:?}",
        params
    ))
}

/// Validates a double-loop `l` parameter.
pub fn check_double_loop_params(datum: &ClassDatum, l: Option<u32>) -> ParamCheck {
    let cands = double_loop_faces(datum);
    if cands.is_empty() {
        return ParamCheck::Mismatch("no double-loop structure found".into());
    }
    for f in &cands {
        if l.is_none_or(|w| w == face_size(datum, f.l)) {
            return ParamCheck::Compatible(vec![("l", f.l), ("inner pentagon", f.inner_pentagon)]);
        }
    }
    ParamCheck::Mismatch(format!("no l-region realizes the parameter {:?}", l))
}

/// Validates genuine-hexagon parameters `(n_0..n_5)`; `require_d_at`
/// constrains listed positions to be the type-D regions, and omitted
/// positions marked `0` in the catalog mean "ignored repeat".
pub fn check_hex_params(datum: &ClassDatum, params: [Option<u32>; 6]) -> ParamCheck {
    for d in [datum.clone(), datum.mirror()] {
        for faces in hex_corner_faces(&d) {
            let fit = params.iter().zip(faces.iter()).all(|(want, &face)| {
                want.is_none_or(|w| w == face_size(&d, face) && face != d.hexagon)
            });
            if fit {
                let names = ["R0", "R1", "R2", "R3", "R4", "R5"];
                return ParamCheck::Compatible(
                    names.iter().copied().zip(faces.iter().copied()).collect(),
                );
            }
        }
    }
    ParamCheck::Mismatch(format!(
        "no starting corner realizes hexagon parameters {:?}",
        params
    ))
}

/// Spec-level name for the parameter consistency check: returns the
/// catalog-compatible slot assignment or a mismatch report.
pub fn derive_parameters(
    datum: &ClassDatum,
    cfg: Configuration,
    loop_params: Option<[Option<u32>; 4]>,
    dl: Option<Option<u32>>,
    hex: Option<[Option<u32>; 6]>,
) -> ParamCheck {
    check_params(datum, cfg, loop_params, dl, hex)
}

/// Dispatches on the boundary pattern.
pub fn check_params(
    datum: &ClassDatum,
    cfg: Configuration,
    loop_params: Option<[Option<u32>; 4]>,
    dl: Option<Option<u32>>,
    hex: Option<[Option<u32>; 6]>,
) -> ParamCheck {
    match cfg {
        Configuration::HexLoop => check_loop_params(datum, loop_params.unwrap_or([None; 4])),
        Configuration::HexDoubleLoop => check_double_loop_params(datum, dl.unwrap_or(None)),
        Configuration::GenuineHex => check_hex_params(datum, hex.unwrap_or([None; 6])),
        Configuration::TwoOrMoreE6 => match (loop_params, dl) {
            (Some(p), _) => check_loop_params(datum, p),
            (None, Some(l)) => check_double_loop_params(datum, l),
            _ => ParamCheck::Compatible(Vec::new()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_curve_classes;

    #[test]
    fn permuted_parameters_are_rejected() {
        // The class carrying parameters (3,8,-,5): the deliberate
        // permutation (5,8,-,3) puts the 5-gon in a slot it cannot occupy.
        let classes = enumerate_curve_classes();
        let c = classes
            .iter()
            .find(|c| {
                c.set.canonical_string() == "E6+A7+A4+A2"
                    && matches!(
                        check_loop_params(&c.datum, [Some(3), Some(8), None, Some(5)]),
                        ParamCheck::Compatible(_)
                    )
            })
            .expect("the (3,8,-,5) class exists");
        let bad = check_loop_params(&c.datum, [Some(5), Some(8), None, Some(3)]);
        assert!(matches!(bad, ParamCheck::Mismatch(_)));
    }
}
