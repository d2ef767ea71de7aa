//! Keying the enumerated classes to the catalog rows.
//!
//! Classes are matched on (singularity set, realness, component structure,
//! boundary pattern, D-fiber placement), refined by positional template
//! parameters; the remaining ties (classes the source itself does not
//! distinguish, such as the two hexagons of one two-E6 skeleton) are broken
//! by canonical-code order.

use crate::catalog::{self, Family, H1Kind, Row};
use crate::config::{classify_configuration, d_fiber_in_inner_loop, Configuration};
use crate::enumeration::CurveClass;
use crate::params::{check_params, ParamCheck};
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct RowMatch {
    pub row: &'static Row,
    /// Indices into the class list; one for a real row, the mirror pair
    /// for a complex row.
    pub classes: Vec<usize>,
}

#[derive(thiserror::Error, Debug)]
pub enum MatchError {
    #[error("row {0}: no candidate class group")]
    NoCandidates(&'static str),
    #[error("no perfect assignment for key group {0}")]
    NoAssignment(String),
    #[error("class {0} (set {1}) matched no catalog row")]
    UnmatchedClass(usize, String),
}

fn h1_kind(c: &CurveClass) -> Option<H1Kind> {
    let inv = &c.sheets.h1;
    let six = BigInt::from(6);
    let two = BigInt::from(2);
    match (inv.free_rank, inv.torsion.as_slice()) {
        (0, [t]) if *t == six => Some(H1Kind::C6),
        (1, []) => Some(H1Kind::Z),
        (1, [t]) if *t == two => Some(H1Kind::ZplusZ2),
        (2, []) => Some(H1Kind::ZZ),
        _ => None,
    }
}

fn d_sizes(c: &CurveClass) -> Vec<u32> {
    let faces = c.datum.sk.trace_faces();
    let mut sizes: Vec<u32> = c
        .datum
        .d_faces
        .iter()
        .map(|&id| faces.iter().find(|f| f.id() == id).unwrap().size() as u32)
        .collect();
    sizes.sort();
    sizes
}

fn class_key(c: &CurveClass) -> (String, bool, Option<H1Kind>, Vec<u32>, bool) {
    (
        c.set.canonical_string(),
        c.real,
        h1_kind(c),
        d_sizes(c),
        d_fiber_in_inner_loop(&c.datum),
    )
}

fn row_key(r: &Row) -> (String, bool, Option<H1Kind>, Vec<u32>, bool) {
    let mut d: Vec<u32> = r.d_regions.to_vec();
    d.sort();
    (r.set.to_string(), r.is_real(), Some(r.pi1.h1), d, r.d_inner)
}

/// True when the class's boundary pattern and parameters are consistent
/// with the row's template family.
pub fn row_class_compatible(row: &Row, class: &CurveClass) -> bool {
    let cfg = classify_configuration(&class.datum);
    let pattern_ok = matches!(
        (&row.family, cfg),
        (Family::External, _)
            | (Family::TwoE6, _)
            | (Family::Loop { .. }, Configuration::HexLoop)
            | (Family::Loop { .. }, Configuration::TwoOrMoreE6)
            | (Family::DoubleLoop { .. }, Configuration::HexDoubleLoop)
            | (Family::DoubleLoop { .. }, Configuration::TwoOrMoreE6)
            | (Family::Hex { .. }, Configuration::GenuineHex)
    );
    if !pattern_ok {
        return false;
    }
    // For two-E6 classes the declared family must also match the actual
    // boundary pattern.
    if cfg == Configuration::TwoOrMoreE6 {
        let b = crate::config::boundary_pattern(&class.datum);
        match (&row.family, b) {
            (Family::Loop { .. }, Configuration::HexLoop) => {}
            (Family::DoubleLoop { .. }, Configuration::HexDoubleLoop) => {}
            (Family::External, _) | (Family::TwoE6, _) => {}
            _ => return false,
        }
    }
    let check = match &row.family {
        Family::External | Family::TwoE6 => return true,
        Family::Loop { params, .. } => check_params(
            &class.datum,
            Configuration::HexLoop,
            Some(*params),
            None,
            None,
        ),
        Family::DoubleLoop { l, .. } => check_params(
            &class.datum,
            Configuration::HexDoubleLoop,
            None,
            Some(*l),
            None,
        ),
        Family::Hex { params, .. } => check_params(
            &class.datum,
            Configuration::GenuineHex,
            None,
            None,
            Some(*params),
        ),
    };
    matches!(check, ParamCheck::Compatible(_))
}

/// Matches every catalog row to its class(es). Errors when the assignment
/// is not perfect in either direction.
pub fn match_rows(classes: &[CurveClass]) -> Result<Vec<RowMatch>, MatchError> {
    // Matching units: a real class, or a mirror pair of complex classes.
    struct Unit {
        indices: Vec<usize>,
        key: (String, bool, Option<H1Kind>, Vec<u32>, bool),
    }
    let mut units: Vec<Unit> = Vec::new();
    let mut used = vec![false; classes.len()];
    for (i, c) in classes.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        if c.real {
            units.push(Unit {
                indices: vec![i],
                key: class_key(c),
            });
        } else {
            let j = classes
                .iter()
                .position(|d| d.code == c.mirror_code)
                .expect("mirror class enumerated");
            used[j] = true;
            units.push(Unit {
                indices: vec![i, j],
                key: class_key(c),
            });
        }
    }

    // Group rows and units by key.
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<String, (Vec<&'static Row>, Vec<usize>)> = BTreeMap::new();
    for r in catalog::rows() {
        let key = format!("{:?}", row_key(r));
        groups.entry(key).or_default().0.push(r);
    }
    for (u, unit) in units.iter().enumerate() {
        let key = format!("{:?}", unit.key);
        groups.entry(key).or_default().1.push(u);
    }

    let mut out = Vec::new();
    for (key, (rows, unit_ids)) in &groups {
        if rows.is_empty() {
            let u = unit_ids[0];
            let i = units[u].indices[0];
            return Err(MatchError::UnmatchedClass(
                i,
                classes[i].set.canonical_string(),
            ));
        }
        if rows.len() != unit_ids.len() {
            return Err(MatchError::NoAssignment(format!(
                "{}: {} rows vs {} class units",
                key,
                rows.len(),
                unit_ids.len()
            )));
        }
        // Candidate matrix by template compatibility.
        let cand: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                unit_ids
                    .iter()
                    .map(|&u| {
                        units[u]
                            .indices
                            .iter()
                            .any(|&i| row_class_compatible(r, &classes[i]))
                    })
                    .collect()
            })
            .collect();
        // Tiny backtracking perfect matching, deterministic.
        let n = rows.len();
        let mut assign = vec![usize::MAX; n];
        let mut taken = vec![false; n];
        fn bt(
            r: usize,
            n: usize,
            cand: &[Vec<bool>],
            taken: &mut [bool],
            assign: &mut [usize],
        ) -> bool {
            if r == n {
                return true;
            }
            for u in 0..n {
                if !taken[u] && cand[r][u] {
                    taken[u] = true;
                    assign[r] = u;
                    if bt(r + 1, n, cand, taken, assign) {
                        return true;
                    }
                    taken[u] = false;
                }
            }
            false
        }
        if !bt(0, n, &cand, &mut taken, &mut assign) {
            return Err(MatchError::NoAssignment(key.clone()));
        }
        for (ri, r) in rows.iter().enumerate() {
            let unit = &units[unit_ids[assign[ri]]];
            out.push(RowMatch {
                row: r,
                classes: unit.indices.clone(),
            });
        }
    }
    out.sort_by_key(|m| {
        (
            matches!(m.row.table, catalog::Table::Reducible),
            m.row.number,
        )
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_curve_classes;

    #[test]
    fn every_row_matches_exactly() {
        let classes = enumerate_curve_classes();
        let matches = match_rows(&classes).expect("perfect matching");
        assert_eq!(matches.len(), 80);
        let total: usize = matches.iter().map(|m| m.classes.len()).sum();
        assert_eq!(total, 93);
        // every class used exactly once
        let mut seen = vec![false; classes.len()];
        for m in &matches {
            for &i in &m.classes {
                assert!(!seen[i]);
                seen[i] = true;
            }
            assert_eq!(m.classes.len(), m.row.classes());
        }
        assert!(seen.iter().all(|&b| b));
    }
}
