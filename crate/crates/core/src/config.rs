//! Configuration analysis of a distinguished hexagon: boundary pattern
//! classification and the positional region parameters used by the
//! relation templates.

use crate::skeleton::{ClassDatum, Skeleton};

/// Boundary pattern of the distinguished hexagonal region.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Configuration {
    /// At least one more type-E6 fiber (monovalent vertex) exists; the
    /// presentations come from re-modeled figures or the two-E6 template.
    TwoOrMoreE6,
    /// ∂H̄ carries a loop edge (inner loop of the insertion).
    HexLoop,
    /// The double-loop insertion pattern.
    HexDoubleLoop,
    /// All six vertices on ∂H̄ are pairwise distinct.
    GenuineHex,
}

/// Boundary data of the hexagon: darts in face-trace order and the vertex
/// at each corner.
pub struct HexBoundary {
    /// The 6 darts of the region orbit, starting from the face id.
    pub darts: Vec<u32>,
    /// `corner_vertex[i]` is the vertex between `darts[i]` and
    /// `darts[i+1]`.
    pub corner_vertex: Vec<u32>,
    /// `across[i]` is the face id on the other side of the edge carrying
    /// `darts[i]`.
    pub across: Vec<u32>,
}

pub fn hex_boundary(datum: &ClassDatum) -> HexBoundary {
    let sk = &datum.sk;
    let hex = sk
        .trace_faces()
        .into_iter()
        .find(|f| f.id() == datum.hexagon)
        .expect("hexagon face");
    assert_eq!(hex.size(), 6, "distinguished region must be hexagonal");
    let corner_vertex = hex.darts.iter().map(|&x| sk.vertex_of(sk.inv(x))).collect();
    let across = hex.darts.iter().map(|&x| sk.face_of(sk.inv(x))).collect();
    HexBoundary {
        darts: hex.darts,
        corner_vertex,
        across,
    }
}

/// True if the edge carrying dart `x` is a loop (both ends at one vertex).
fn is_loop_edge(sk: &Skeleton, x: u32) -> bool {
    sk.vertex_of(x) == sk.vertex_of(sk.inv(x))
}

/// Classifies the boundary pattern of the distinguished hexagon.
pub fn classify_configuration(datum: &ClassDatum) -> Configuration {
    if datum.sk.monovalent_count() > 0 {
        return Configuration::TwoOrMoreE6;
    }
    boundary_pattern(datum)
}

/// The raw boundary pattern, ignoring any extra E6 fibers.
pub fn boundary_pattern(datum: &ClassDatum) -> Configuration {
    let b = hex_boundary(datum);
    let mut distinct = b.corner_vertex.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() == 6 {
        return Configuration::GenuineHex;
    }
    let loops = b
        .darts
        .iter()
        .filter(|&&x| is_loop_edge(&datum.sk, x))
        .count();
    if loops == 1 {
        Configuration::HexLoop
    } else {
        Configuration::HexDoubleLoop
    }
}

/// For a type specification: true when some D-region is the monogon on the
/// other side of a loop edge of ∂H̄ (the "inner loop of the insertion").
pub fn d_fiber_in_inner_loop(datum: &ClassDatum) -> bool {
    let b = hex_boundary(datum);
    b.darts
        .iter()
        .enumerate()
        .any(|(i, &x)| is_loop_edge(&datum.sk, x) && datum.d_faces.contains(&b.across[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_curve_classes;

    #[test]
    fn every_class_classifies() {
        // Classification is total and every non-2E6 class falls into one
        // of the three hexagon patterns.
        for c in enumerate_curve_classes() {
            let _ = classify_configuration(&c.datum);
        }
    }
}
