//! Embedded graphs on the sphere as rotation systems on darts.
//!
//! A skeleton is a connected combinatorial map whose vertices have valency
//! 3 or 1. Darts are small integers; the involution pairs darts into
//! edges, the rotation gives the cyclic successor around each vertex, and
//! faces (regions) are the orbits of `rotation ∘ involution`.

use std::collections::BTreeSet;

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum SkeletonError {
    #[error("involution is not a fixed-point-free involution")]
    BadInvolution,
    #[error("rotation is not a permutation with orbits of size 3 or 1")]
    BadRotation,
    #[error("the map is not connected")]
    Disconnected,
}

/// A connected rotation system with vertex valencies 3 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Skeleton {
    rot: Vec<u32>,
    inv: Vec<u32>,
    vertex_of: Vec<u32>,
    nvertices: u32,
}

/// A face of the map: the darts of its boundary orbit, in trace order
/// starting from the smallest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Region {
    pub darts: Vec<u32>,
}

impl Region {
    pub fn size(&self) -> usize {
        self.darts.len()
    }

    /// Face identifier: the smallest dart on the boundary.
    pub fn id(&self) -> u32 {
        self.darts[0]
    }
}

impl Skeleton {
    pub fn new(rot: Vec<u32>, inv: Vec<u32>) -> Result<Self, SkeletonError> {
        let n = rot.len();
        if inv.len() != n || n == 0 || !n.is_multiple_of(2) {
            return Err(SkeletonError::BadInvolution);
        }
        for d in 0..n {
            let i = inv[d] as usize;
            if i >= n || i == d || inv[i] != d as u32 {
                return Err(SkeletonError::BadInvolution);
            }
            if rot[d] as usize >= n {
                return Err(SkeletonError::BadRotation);
            }
        }
        // Vertex orbits of the rotation: sizes must be 3 or 1.
        let mut vertex_of = vec![u32::MAX; n];
        let mut nvertices = 0u32;
        for d in 0..n {
            if vertex_of[d] != u32::MAX {
                continue;
            }
            let mut orbit = vec![d as u32];
            let mut x = rot[d];
            while x as usize != d {
                if orbit.len() > 3 {
                    return Err(SkeletonError::BadRotation);
                }
                orbit.push(x);
                x = rot[x as usize];
            }
            if orbit.len() != 3 && orbit.len() != 1 {
                return Err(SkeletonError::BadRotation);
            }
            for &o in &orbit {
                if vertex_of[o as usize] != u32::MAX {
                    return Err(SkeletonError::BadRotation);
                }
                vertex_of[o as usize] = nvertices;
            }
            nvertices += 1;
        }
        let sk = Skeleton {
            rot,
            inv,
            vertex_of,
            nvertices,
        };
        if !sk.is_connected() {
            return Err(SkeletonError::Disconnected);
        }
        Ok(sk)
    }

    pub fn darts(&self) -> usize {
        self.rot.len()
    }

    pub fn edges(&self) -> usize {
        self.darts() / 2
    }

    pub fn vertices(&self) -> usize {
        self.nvertices as usize
    }

    #[inline]
    pub fn rot(&self, d: u32) -> u32 {
        self.rot[d as usize]
    }

    #[inline]
    pub fn rot_inv(&self, d: u32) -> u32 {
        // valency <= 3, so two steps land on the predecessor
        let mut x = d;
        while self.rot[x as usize] != d {
            x = self.rot[x as usize];
        }
        x
    }

    #[inline]
    pub fn inv(&self, d: u32) -> u32 {
        self.inv[d as usize]
    }

    #[inline]
    pub fn vertex_of(&self, d: u32) -> u32 {
        self.vertex_of[d as usize]
    }

    pub fn valency(&self, d: u32) -> usize {
        if self.rot(d) == d {
            1
        } else {
            3
        }
    }

    pub fn monovalent_count(&self) -> usize {
        (0..self.darts() as u32)
            .filter(|&d| self.rot(d) == d)
            .count()
    }

    pub fn trivalent_count(&self) -> usize {
        self.vertices() - self.monovalent_count()
    }

    fn is_connected(&self) -> bool {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for nb in [self.rot(d), self.inv(d)] {
                if !seen[nb as usize] {
                    seen[nb as usize] = true;
                    count += 1;
                    stack.push(nb);
                }
            }
        }
        count == n
    }

    /// Orbits of `rotation ∘ involution`: the regions of the map.
    /// Region sizes sum to the dart count.
    pub fn trace_faces(&self) -> Vec<Region> {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for d0 in 0..n as u32 {
            if seen[d0 as usize] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = d0;
            loop {
                seen[d as usize] = true;
                darts.push(d);
                d = self.rot(self.inv(d));
                if d == d0 {
                    break;
                }
            }
            faces.push(Region { darts });
        }
        faces
    }

    /// Genus via Euler's formula; 0 for the sphere.
    pub fn genus(&self) -> i64 {
        let v = self.vertices() as i64;
        let e = self.edges() as i64;
        let f = self.trace_faces().len() as i64;
        (2 - v + e - f) / 2
    }

    /// The face id (minimal dart) of the region containing dart `d`.
    pub fn face_of(&self, d: u32) -> u32 {
        let mut x = d;
        let mut min = d;
        loop {
            x = self.rot(self.inv(x));
            if x == d {
                break;
            }
            min = min.min(x);
        }
        min
    }

    /// The mirror image: every vertex rotation reversed. Regions map to
    /// regions; the region containing dart `d` corresponds to the mirror
    /// region containing `inv(d)`.
    pub fn mirror(&self) -> Skeleton {
        let n = self.darts();
        let mut rot = vec![0u32; n];
        for d in 0..n as u32 {
            rot[self.rot(d) as usize] = d;
        }
        Skeleton {
            rot,
            inv: self.inv.clone(),
            vertex_of: self.vertex_of.clone(),
            nvertices: self.nvertices,
        }
    }

    /// BFS relabeling code from a start dart with per-dart labels:
    /// a total invariant of the labeled oriented map.
    fn bfs_code(&self, start: u32, labels: &[u8]) -> Vec<u32> {
        let n = self.darts();
        let mut new_id = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        new_id[start as usize] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nb in [self.rot(d), self.inv(d)] {
                if new_id[nb as usize] == u32::MAX {
                    new_id[nb as usize] = order.len() as u32;
                    order.push(nb);
                }
            }
        }
        let mut code = Vec::with_capacity(3 * n);
        for &d in &order {
            code.push(new_id[self.rot(d) as usize]);
            code.push(new_id[self.inv(d) as usize]);
            code.push(labels[d as usize] as u32);
        }
        code
    }

    /// Lexicographic minimum of the BFS code over all start darts.
    pub fn canonical_code(&self, labels: &[u8]) -> CanonicalCode {
        assert_eq!(labels.len(), self.darts());
        let mut best: Option<Vec<u32>> = None;
        for s in 0..self.darts() as u32 {
            let code = self.bfs_code(s, labels);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        CanonicalCode(best.unwrap())
    }
}

/// A total-order key deciding orientation-preserving isomorphism of
/// labeled skeletons.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(pub Vec<u32>);

/// Fiber kind carried by a region under a type specification.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FiberKind {
    A,
    D,
}

/// A skeleton with a distinguished hexagonal region and a type
/// specification (the set of regions carrying type-D fibers).
#[derive(Clone, Debug)]
pub struct ClassDatum {
    pub sk: Skeleton,
    /// Face id of the distinguished hexagon.
    pub hexagon: u32,
    /// Face ids of the regions carrying type-D fibers (never the hexagon).
    pub d_faces: BTreeSet<u32>,
}

impl ClassDatum {
    fn labels(&self) -> Vec<u8> {
        let mut labels = vec![0u8; self.sk.darts()];
        for f in self.sk.trace_faces() {
            let tag = if f.id() == self.hexagon {
                1
            } else if self.d_faces.contains(&f.id()) {
                2
            } else {
                0
            };
            for &d in &f.darts {
                labels[d as usize] = tag;
            }
        }
        labels
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        self.sk.canonical_code(&self.labels())
    }

    pub fn mirror(&self) -> ClassDatum {
        let sk = self.sk.mirror();
        let hexagon = sk.face_of(self.sk.inv(self.hexagon));
        let d_faces = self
            .d_faces
            .iter()
            .map(|&f| sk.face_of(self.sk.inv(f)))
            .collect();
        ClassDatum {
            sk,
            hexagon,
            d_faces,
        }
    }

    pub fn is_isomorphic(&self, other: &ClassDatum) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Real means the class is isomorphic to its mirror image with the
    /// distinguished region and type specification carried over.
    pub fn is_real(&self) -> bool {
        self.is_isomorphic(&self.mirror())
    }
}

#[cfg(test)]
pub mod fixtures {
    use super::*;

    /// Theta graph: two trivalent vertices joined by three edges, planar.
    pub fn theta() -> Skeleton {
        // v0 darts 0,1,2 (ccw); v1 darts 3,4,5; edges 0-3, 1-4, 2-5.
        // Opposite orientations at the two vertices keep it planar.
        Skeleton::new(vec![1, 2, 0, 5, 3, 4], vec![3, 4, 5, 0, 1, 2]).unwrap()
    }

    /// Theta with one vertex rotation reversed: torus embedding.
    pub fn theta_torus() -> Skeleton {
        Skeleton::new(vec![1, 2, 0, 4, 5, 3], vec![3, 4, 5, 0, 1, 2]).unwrap()
    }

    /// Two loops joined by a bridge.
    pub fn dumbbell() -> Skeleton {
        // v0: 0,1,2 with loop 0-1, bridge 2-5; v1: 3,4,5 with loop 3-4.
        Skeleton::new(vec![1, 2, 0, 4, 5, 3], vec![1, 0, 5, 4, 3, 2]).unwrap()
    }

    /// One trivalent vertex with a loop plus a pendant vertex.
    pub fn lollipop() -> Skeleton {
        // v0: 0,1,2, loop 0-1, pendant edge 2-3; v1: {3}.
        Skeleton::new(vec![1, 2, 0, 3], vec![1, 0, 3, 2]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn theta_faces() {
        let sk = theta();
        let faces = sk.trace_faces();
        assert_eq!(faces.len(), 3);
        assert!(faces.iter().all(|f| f.size() == 2));
        assert_eq!(sk.genus(), 0);
    }

    #[test]
    fn dumbbell_faces() {
        let sk = dumbbell();
        let mut sizes: Vec<usize> = sk.trace_faces().iter().map(|f| f.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 4]);
        assert_eq!(sk.genus(), 0);
    }

    #[test]
    fn theta_reversed_has_genus_one() {
        assert_eq!(theta_torus().genus(), 1);
        assert_eq!(theta_torus().trace_faces().len(), 1);
    }

    #[test]
    fn lollipop_is_planar() {
        let sk = lollipop();
        assert_eq!(sk.genus(), 0);
        assert_eq!(sk.vertices(), 2);
        assert_eq!(sk.edges(), 2);
        let mut sizes: Vec<usize> = sk.trace_faces().iter().map(|f| f.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
    }

    #[test]
    fn face_sizes_sum_to_dart_count() {
        for sk in [theta(), dumbbell(), lollipop()] {
            let total: usize = sk.trace_faces().iter().map(|f| f.size()).sum();
            assert_eq!(total, sk.darts());
        }
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        // Relabel theta's darts by a permutation respecting nothing in
        // particular; rebuild and compare codes.
        let sk = theta();
        let perm: Vec<u32> = vec![4, 2, 0, 1, 5, 3];
        let mut rot = vec![0u32; 6];
        let mut inv = vec![0u32; 6];
        for d in 0..6u32 {
            rot[perm[d as usize] as usize] = perm[sk.rot(d) as usize];
            inv[perm[d as usize] as usize] = perm[sk.inv(d) as usize];
        }
        let sk2 = Skeleton::new(rot, inv).unwrap();
        let labels = vec![0u8; 6];
        assert_eq!(sk.canonical_code(&labels), sk2.canonical_code(&labels));
    }

    #[test]
    fn theta_and_dumbbell_differ() {
        let labels = vec![0u8; 6];
        assert_ne!(
            theta().canonical_code(&labels),
            dumbbell().canonical_code(&labels)
        );
    }

    #[test]
    fn mirror_is_involution() {
        for sk in [theta(), dumbbell(), lollipop()] {
            let mm = sk.mirror().mirror();
            let labels = vec![0u8; sk.darts()];
            assert_eq!(sk.canonical_code(&labels), mm.canonical_code(&labels));
        }
    }

    #[test]
    fn theta_is_mirror_symmetric() {
        let sk = theta();
        let labels = vec![0u8; 6];
        assert_eq!(
            sk.canonical_code(&labels),
            sk.mirror().canonical_code(&labels)
        );
    }

    #[test]
    fn disconnected_rejected() {
        // Two separate loops on 1-valent... simplest: two monovalent pairs.
        let r = Skeleton::new(vec![0, 1, 2, 3], vec![1, 0, 3, 2]);
        assert_eq!(r.unwrap_err(), SkeletonError::Disconnected);
    }
}
