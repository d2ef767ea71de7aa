//! Generation of all admissible (skeleton, distinguished hexagon, type
//! specification) classes and the derived classification data.
//!
//! Rotation systems are generated dart-by-dart: the lowest unmatched dart
//! is paired with a fresh vertex or an existing free dart, vertices are
//! allocated in discovery order (which kills the labeling symmetry up to
//! rooting), and branches whose pendant-completed partial map already has
//! positive genus are cut. Isomorph rejection of the survivors is by
//! canonical code.

use crate::fpgroup::snf::{abelian_invariants, AbelianInvariants, IntMat};
use crate::skeleton::{CanonicalCode, ClassDatum, Skeleton};
use std::collections::{BTreeMap, BTreeSet};

const FREE: u32 = u32::MAX;

struct Gen {
    v3: usize,
    v1: usize,
    rot: Vec<u32>,
    inv: Vec<u32>,
    used_v3: usize,
    used_v1: usize,
    out: Vec<Skeleton>,
}

impl Gen {
    fn partial_genus_positive(&self) -> bool {
        // Pendant-complete dangling darts: a dangler contributes its face
        // but no vertex/edge imbalance, so genus is computable directly
        // with the modified face successor.
        let n = self.rot.len();
        let mut seen = vec![false; n];
        let mut faces = 0i64;
        for d0 in 0..n {
            if seen[d0] {
                continue;
            }
            faces += 1;
            let mut d = d0 as u32;
            loop {
                seen[d as usize] = true;
                let nxt = if self.inv[d as usize] == FREE {
                    self.rot[d as usize]
                } else {
                    self.rot[self.inv[d as usize] as usize]
                };
                d = nxt;
                if d as usize == d0 {
                    break;
                }
            }
        }
        let danglers = self.inv.iter().filter(|&&x| x == FREE).count() as i64;
        let v = (self.used_v3 + self.used_v1) as i64 + danglers;
        let e = (n as i64 - danglers) / 2 + danglers;
        let genus2 = 2 - v + e - faces;
        genus2 > 0
    }

    fn alloc_trivalent(&mut self) -> u32 {
        let base = self.rot.len() as u32;
        self.rot.extend([base + 1, base + 2, base]);
        self.inv.extend([FREE, FREE, FREE]);
        self.used_v3 += 1;
        base
    }

    fn alloc_monovalent(&mut self) -> u32 {
        let base = self.rot.len() as u32;
        self.rot.push(base);
        self.inv.push(FREE);
        self.used_v1 += 1;
        base
    }

    fn recurse(&mut self) {
        let Some(d) = self.inv.iter().position(|&x| x == FREE) else {
            if self.used_v3 == self.v3 && self.used_v1 == self.v1 {
                let sk = Skeleton::new(self.rot.clone(), self.inv.clone())
                    .expect("generated map must be valid");
                if sk.genus() == 0 {
                    self.out.push(sk);
                }
            }
            return;
        };
        let d = d as u32;

        // (a) fresh trivalent vertex
        if self.used_v3 < self.v3 {
            let v = self.alloc_trivalent();
            self.inv[d as usize] = v;
            self.inv[v as usize] = d;
            if !self.partial_genus_positive() {
                self.recurse();
            }
            self.inv[d as usize] = FREE;
            self.rot.truncate(self.rot.len() - 3);
            self.inv.truncate(self.inv.len() - 3);
            self.used_v3 -= 1;
        }
        // (b) fresh monovalent vertex
        if self.used_v1 < self.v1 {
            let v = self.alloc_monovalent();
            self.inv[d as usize] = v;
            self.inv[v as usize] = d;
            if !self.partial_genus_positive() {
                self.recurse();
            }
            self.inv[d as usize] = FREE;
            self.rot.pop();
            self.inv.pop();
            self.used_v1 -= 1;
        }
        // (c) an existing free dart
        for e in (d + 1)..self.rot.len() as u32 {
            if self.inv[e as usize] != FREE {
                continue;
            }
            self.inv[d as usize] = e;
            self.inv[e as usize] = d;
            if !self.partial_genus_positive() {
                self.recurse();
            }
            self.inv[d as usize] = FREE;
            self.inv[e as usize] = FREE;
        }
    }
}

/// All connected genus-0 maps with exactly `v3` trivalent and `v1`
/// monovalent vertices, up to orientation-preserving isomorphism.
pub fn generate_maps(v3: usize, v1: usize) -> Vec<Skeleton> {
    if v3 == 0 && v1 == 0 {
        return Vec::new();
    }
    let mut gen = Gen {
        v3,
        v1,
        rot: Vec::new(),
        inv: Vec::new(),
        used_v3: 0,
        used_v1: 0,
        out: Vec::new(),
    };
    if v3 > 0 {
        gen.alloc_trivalent();
    } else {
        gen.alloc_monovalent();
    }
    gen.recurse();

    // Isomorph rejection.
    let mut seen: BTreeMap<CanonicalCode, Skeleton> = BTreeMap::new();
    for sk in gen.out {
        let labels = vec![0u8; sk.darts()];
        seen.entry(sk.canonical_code(&labels)).or_insert(sk);
    }
    seen.into_values().collect()
}

/// The (trivalent, monovalent) vertex budgets admissible for the
/// classification: the count relation forces `#black = 2(4 - t)` with
/// `t = #monovalent + #D-regions >= #monovalent`.
pub fn admissible_budgets(max_trivalent: usize) -> Vec<(usize, usize, usize)> {
    // (v3, v1, d) with v3 + v1 = 2(4 - t), t = v1 + d.
    let mut out = Vec::new();
    for t in 0..4usize {
        let black = 2 * (4 - t);
        for v1 in 0..=t.min(black) {
            let v3 = black - v1;
            let d = t - v1;
            if v3 <= max_trivalent && (3 * v3 + v1) % 2 == 0 {
                out.push((v3, v1, d));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All (skeleton, distinguished hexagonal region) pairs over the
/// admissible budgets with `v3 <= max_trivalent`, deduplicated by
/// canonical code; each size-6 region of each skeleton is offered once.
pub fn generate_skeleton_hexagon_pairs(max_trivalent: usize) -> Vec<ClassDatum> {
    let budgets: BTreeSet<(usize, usize)> = admissible_budgets(max_trivalent)
        .into_iter()
        .map(|(v3, v1, _)| (v3, v1))
        .collect();
    let mut seen: BTreeMap<CanonicalCode, ClassDatum> = BTreeMap::new();
    for (v3, v1) in budgets {
        for sk in generate_maps(v3, v1) {
            for f in sk.trace_faces() {
                if f.size() != 6 {
                    continue;
                }
                let datum = ClassDatum {
                    sk: sk.clone(),
                    hexagon: f.id(),
                    d_faces: BTreeSet::new(),
                };
                seen.entry(datum.canonical_code()).or_insert(datum);
            }
        }
    }
    seen.into_values().collect()
}

/// A singularity label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Singularity {
    /// `A_p`, `p >= 1`.
    A(u32),
    /// `D_q`, `q >= 5`.
    D(u32),
    E6,
}

impl Singularity {
    pub fn milnor(self) -> u32 {
        match self {
            Singularity::A(p) => p,
            Singularity::D(q) => q,
            Singularity::E6 => 6,
        }
    }
}

impl std::fmt::Display for Singularity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Singularity::A(p) => write!(f, "A{}", p),
            Singularity::D(q) => write!(f, "D{}", q),
            Singularity::E6 => write!(f, "E6"),
        }
    }
}

/// The multiset of singularities of the sextic associated with a class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SingularitySet(pub Vec<Singularity>);

impl SingularitySet {
    pub fn milnor(&self) -> u32 {
        self.0.iter().map(|s| s.milnor()).sum()
    }

    /// Canonical string like "2E6+A4+A3": labels sorted by Milnor number
    /// descending with E6 first among equals, multiplicities folded.
    pub fn canonical_string(&self) -> String {
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        let mut order: Vec<(i64, i64, String)> = Vec::new();
        for s in &self.0 {
            let name = s.to_string();
            if !counts.contains_key(&name) {
                let class_rank = match s {
                    Singularity::E6 => 0,
                    Singularity::D(_) => 1,
                    Singularity::A(_) => 2,
                };
                order.push((class_rank, -(s.milnor() as i64), name.clone()));
            }
            *counts.entry(name).or_default() += 1;
        }
        order.sort();
        order
            .into_iter()
            .map(|(_, _, name)| {
                let c = counts[&name];
                if c == 1 {
                    name
                } else {
                    format!("{}{}", c, name)
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum SpecError {
    #[error("the distinguished region must carry the type-A (tilde A5) fiber")]
    DOnDistinguished,
    #[error("face {0} is not a region of the skeleton")]
    NoSuchFace(u32),
}

/// The singularity set of a class: the distinguished hexagon and every
/// monovalent vertex contribute E6; an n-gonal A-region contributes
/// `A_{n-1}` (nothing for n = 1); an n-gonal D-region contributes
/// `D_{n+4}`.
pub fn singularity_set(datum: &ClassDatum) -> Result<SingularitySet, SpecError> {
    if datum.d_faces.contains(&datum.hexagon) {
        return Err(SpecError::DOnDistinguished);
    }
    let faces = datum.sk.trace_faces();
    let face_ids: BTreeSet<u32> = faces.iter().map(|f| f.id()).collect();
    for &d in &datum.d_faces {
        if !face_ids.contains(&d) {
            return Err(SpecError::NoSuchFace(d));
        }
    }
    let mut out = vec![Singularity::E6];
    for _ in 0..datum.sk.monovalent_count() {
        out.push(Singularity::E6);
    }
    for f in &faces {
        if f.id() == datum.hexagon {
            continue;
        }
        let n = f.size() as u32;
        if datum.d_faces.contains(&f.id()) {
            out.push(Singularity::D(n + 4));
        } else if n >= 2 {
            out.push(Singularity::A(n - 1));
        }
    }
    out.sort();
    Ok(SingularitySet(out))
}

/// Component structure of the trigonal curve, decided by the sheet
/// monodromy assembled from the skeleton: sheets near a trivalent vertex
/// are its darts; crossing an edge (d, d') matches d with d', rot(d) with
/// rot^-1(d'), rot^-1(d) with rot(d'); every odd region fuses the two
/// sheets at any of its trivalent corners; a monovalent vertex fuses all
/// three sheets at its neighbour.
#[derive(Clone, Debug)]
pub struct SheetAnalysis {
    pub components: usize,
    /// Multiset of covering degrees of the components (sums to 3).
    pub degrees: Vec<usize>,
    /// First homology of the complement: Z^3 modulo the relation at
    /// infinity and the sheet identifications.
    pub h1: AbelianInvariants,
}

struct Dsu(Vec<u32>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n as u32).collect())
    }
    fn find(&mut self, x: u32) -> u32 {
        if self.0[x as usize] != x {
            let r = self.find(self.0[x as usize]);
            self.0[x as usize] = r;
            r
        } else {
            x
        }
    }
    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[b as usize] = a;
        }
    }
}

pub fn sheet_analysis(datum: &ClassDatum) -> SheetAnalysis {
    let sk = &datum.sk;
    let n = sk.darts();
    let mut dsu = Dsu::new(n);

    // Transport across edges; pendant edges fuse all three sheets at the
    // trivalent end.
    for d in 0..n as u32 {
        let e = sk.inv(d);
        if e < d {
            continue;
        }
        let d_tri = sk.valency(d) == 3;
        let e_tri = sk.valency(e) == 3;
        if d_tri && e_tri {
            dsu.union(d, e);
            dsu.union(sk.rot(d), sk.rot_inv(e));
            dsu.union(sk.rot_inv(d), sk.rot(e));
        } else if d_tri {
            dsu.union(d, sk.rot(d));
            dsu.union(d, sk.rot_inv(d));
        } else if e_tri {
            dsu.union(e, sk.rot(e));
            dsu.union(e, sk.rot_inv(e));
        }
    }
    // Odd regions fuse their corner pair.
    for f in sk.trace_faces() {
        if f.size() % 2 == 0 {
            continue;
        }
        for &x in &f.darts {
            let y = sk.inv(x);
            if sk.valency(y) == 3 {
                dsu.union(y, sk.rot(y));
                break;
            }
        }
    }

    // Components: orbits restricted to trivalent darts (every skeleton
    // here has a trivalent vertex).
    let tri_darts: Vec<u32> = (0..n as u32).filter(|&d| sk.valency(d) == 3).collect();
    let mut roots: Vec<u32> = tri_darts.iter().map(|&d| dsu.find(d)).collect();
    roots.sort();
    roots.dedup();
    let components = roots.len();
    let v3 = sk.trivalent_count();
    let mut degrees: Vec<usize> = roots
        .iter()
        .map(|&r| tri_darts.iter().filter(|&&d| dsu.find(d) == r).count() / v3)
        .collect();
    degrees.sort();

    // H1: generators = components; relation 4a + b + c = 0 where (a,b,c)
    // are the sheet classes in marking order at a corner of the hexagon.
    let hex = sk
        .trace_faces()
        .into_iter()
        .find(|f| f.id() == datum.hexagon)
        .expect("distinguished face exists");
    let corner = hex
        .darts
        .iter()
        .map(|&x| sk.inv(x))
        .find(|&y| sk.valency(y) == 3)
        .expect("hexagon has a trivalent corner");
    let (e2, e3) = (corner, sk.rot(corner));
    let e1 = sk.rot(e3);
    let idx = |d: u32, dsu: &mut Dsu| roots.iter().position(|&r| r == dsu.find(d)).unwrap();
    let mut row = vec![0i64; components];
    row[idx(e1, &mut dsu)] += 4;
    row[idx(e2, &mut dsu)] += 1;
    row[idx(e3, &mut dsu)] += 1;
    let m = IntMat::from_rows(&[row]);
    let h1 = abelian_invariants(components, &m);

    SheetAnalysis {
        components,
        degrees,
        h1,
    }
}

/// An enumerated class with its derived data.
#[derive(Clone, Debug)]
pub struct CurveClass {
    pub datum: ClassDatum,
    pub code: CanonicalCode,
    pub set: SingularitySet,
    pub sheets: SheetAnalysis,
    pub real: bool,
    /// Canonical code of the mirror class (equals `code` iff real).
    pub mirror_code: CanonicalCode,
}

impl CurveClass {
    pub fn irreducible(&self) -> bool {
        self.sheets.components == 1
    }
}

/// Enumerates every class with total Milnor number 19: all budgets, all
/// hexagon choices, all D-placements, deduplicated by canonical code and
/// ordered by it.
pub fn enumerate_curve_classes() -> Vec<CurveClass> {
    enumerate_curve_classes_bounded(8)
}

/// The same enumeration restricted to skeletons with at most
/// `max_trivalent` trivalent vertices. The vertex budgets generate on
/// independent workers; the canonical-code map merges deterministically.
pub fn enumerate_curve_classes_bounded(max_trivalent: usize) -> Vec<CurveClass> {
    use rayon::prelude::*;
    let per_budget: Vec<Vec<CurveClass>> = admissible_budgets(max_trivalent)
        .into_par_iter()
        .map(|(v3, v1, d)| {
            let mut out = Vec::new();
            for sk in generate_maps(v3, v1) {
                let faces = sk.trace_faces();
                let hexes: Vec<u32> = faces
                    .iter()
                    .filter(|f| f.size() == 6)
                    .map(|f| f.id())
                    .collect();
                let others: Vec<u32> = faces.iter().map(|f| f.id()).collect();
                for &hex in &hexes {
                    let candidates: Vec<u32> =
                        others.iter().copied().filter(|&f| f != hex).collect();
                    for d_set in subsets_of_size(&candidates, d) {
                        let datum = ClassDatum {
                            sk: sk.clone(),
                            hexagon: hex,
                            d_faces: d_set.into_iter().collect(),
                        };
                        let code = datum.canonical_code();
                        let set = singularity_set(&datum).expect("valid spec");
                        debug_assert_eq!(set.milnor(), 19);
                        let sheets = sheet_analysis(&datum);
                        let mirror_code = datum.mirror().canonical_code();
                        let real = code == mirror_code;
                        out.push(CurveClass {
                            datum,
                            code,
                            set,
                            sheets,
                            real,
                            mirror_code,
                        });
                    }
                }
            }
            out
        })
        .collect();
    let mut seen: BTreeMap<CanonicalCode, CurveClass> = BTreeMap::new();
    for c in per_budget.into_iter().flatten() {
        seen.entry(c.code.clone()).or_insert(c);
    }
    seen.into_values().collect()
}

/// Per-row real/complex counts: a self-mirror class contributes (1, 0);
/// a mirror pair of classes contributes a single (0, 1).
pub fn count_real_complex(classes: &[CurveClass]) -> Vec<(CanonicalCode, (u8, u8))> {
    let mut out = Vec::new();
    let mut used: BTreeSet<&CanonicalCode> = BTreeSet::new();
    for c in classes {
        if used.contains(&c.code) {
            continue;
        }
        if c.real {
            out.push((c.code.clone(), (1, 0)));
        } else {
            used.insert(&c.mirror_code);
            out.push((c.code.clone(), (0, 1)));
        }
    }
    out
}

fn subsets_of_size(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets_of_size(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Totals of an enumeration, for the summary line: a mirror pair of
/// complex-conjugate classes counts as one row with count (0,1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Totals {
    pub classes: usize,
    pub rows: usize,
    pub mirror_pair_rows: usize,
    pub distinct_sets: usize,
    pub irreducible_classes: usize,
    pub reducible_classes: usize,
    /// The published set count: distinct sets plus one per conjugate-pair
    /// row (see the catalog notes).
    pub published_sets: usize,
}

pub fn totals(classes: &[CurveClass]) -> Totals {
    let classes_n = classes.len();
    let irreducible = classes.iter().filter(|c| c.irreducible()).count();
    let mut sets: BTreeSet<String> = BTreeSet::new();
    let mut paired: BTreeSet<&CanonicalCode> = BTreeSet::new();
    let mut mirror_pairs = 0;
    for c in classes {
        sets.insert(c.set.canonical_string());
        if !c.real && !paired.contains(&c.code) {
            paired.insert(&c.mirror_code);
            mirror_pairs += 1;
        }
    }
    Totals {
        classes: classes_n,
        rows: classes_n - mirror_pairs,
        mirror_pair_rows: mirror_pairs,
        distinct_sets: sets.len(),
        irreducible_classes: irreducible,
        reducible_classes: classes_n - irreducible,
        published_sets: sets.len() + mirror_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_set_with_four_classes() {
        // E6+A9+A4 is realized by four classes, three irreducible and one
        // reducible.
        let classes = enumerate_curve_classes();
        let hits: Vec<&CurveClass> = classes
            .iter()
            .filter(|c| c.set.canonical_string() == "E6+A9+A4")
            .collect();
        assert_eq!(hits.len(), 4);
        assert_eq!(hits.iter().filter(|c| c.irreducible()).count(), 3);
    }

    #[test]
    fn real_complex_counts() {
        let classes = enumerate_curve_classes();
        let counts = count_real_complex(&classes);
        assert_eq!(counts.len(), 80);
        let pairs = counts.iter().filter(|(_, c)| *c == (0, 1)).count();
        assert_eq!(pairs, 13);
    }

    #[test]
    fn monovalent_row_two_faces() {
        // The two-E6 skeleton with five trivalent and one monovalent
        // vertex carrying 2E6+2A2+A3 has regions of sizes {6, 3, 3, 4}.
        let classes = enumerate_curve_classes();
        let c = classes
            .iter()
            .find(|c| c.set.canonical_string() == "2E6+A3+2A2")
            .unwrap();
        let mut sizes: Vec<usize> = c.datum.sk.trace_faces().iter().map(|f| f.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 4, 6]);
        assert_eq!(c.datum.sk.monovalent_count(), 1);
        assert_eq!(c.datum.sk.trivalent_count(), 5);
    }

    #[test]
    fn two_hexagons_of_one_skeleton_are_distinct_classes() {
        // The skeleton shared by the two (2E6+A5)+A2 sextics has two
        // hexagonal regions, giving two distinct classes.
        let classes = enumerate_curve_classes();
        let hits: Vec<&CurveClass> = classes
            .iter()
            .filter(|c| c.set.canonical_string() == "2E6+A5+A2")
            .collect();
        assert_eq!(hits.len(), 2);
        assert_ne!(hits[0].code, hits[1].code);
        // same underlying skeleton
        let plain = |c: &CurveClass| c.datum.sk.canonical_code(&vec![0u8; c.datum.sk.darts()]);
        assert_eq!(plain(hits[0]), plain(hits[1]));
    }

    #[test]
    fn d_spec_changes_the_class() {
        // Same skeleton and hexagon, A-spec versus D-spec on one region.
        let classes = enumerate_curve_classes();
        let c = classes
            .iter()
            .find(|c| c.set.canonical_string() == "E6+D13")
            .unwrap();
        let mut no_d = c.datum.clone();
        no_d.d_faces.clear();
        assert!(!c.datum.is_isomorphic(&no_d));
    }

    #[test]
    fn symmetric_d_placements_are_identified() {
        // The E6+D5+2A4 skeleton has a symmetry interchanging its two
        // monogons; placing the D5 fiber in either gives one class.
        let classes = enumerate_curve_classes();
        let hits: Vec<&CurveClass> = classes
            .iter()
            .filter(|c| c.set.canonical_string() == "E6+D5+2A4")
            .collect();
        assert_eq!(hits.len(), 1);
        let c = hits[0];
        let faces = c.datum.sk.trace_faces();
        let monogons: Vec<u32> = faces
            .iter()
            .filter(|f| f.size() == 1 && !c.datum.d_faces.contains(&f.id()))
            .map(|f| f.id())
            .collect();
        // move the D fiber to another monogon not adjacent to the hexagon
        for m in monogons {
            let mut other = c.datum.clone();
            other.d_faces.clear();
            other.d_faces.insert(m);
            if crate::enumeration::singularity_set(&other).map(|s| s.canonical_string())
                == Ok("E6+D5+2A4".into())
            {
                assert!(c.datum.is_isomorphic(&other));
            }
        }
    }

    #[test]
    fn generated_skeleton_invariants() {
        // V - E + F = 2, region sizes sum to 2E, and the dart count
        // matches the valency profile, for every accepted class.
        for c in enumerate_curve_classes() {
            let sk = &c.datum.sk;
            let v = sk.vertices() as i64;
            let e = sk.edges() as i64;
            let faces = sk.trace_faces();
            assert_eq!(2 - v + e - faces.len() as i64, 0);
            let total: usize = faces.iter().map(|f| f.size()).sum();
            assert_eq!(total, 2 * sk.edges());
            assert_eq!(
                3 * sk.trivalent_count() + sk.monovalent_count(),
                2 * sk.edges()
            );
            assert_eq!(c.set.milnor(), 19);
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<_> = enumerate_curve_classes()
            .iter()
            .map(|c| c.code.clone())
            .collect();
        let b: Vec<_> = enumerate_curve_classes()
            .iter()
            .map(|c| c.code.clone())
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn d_on_distinguished_rejected() {
        let classes = enumerate_curve_classes();
        let mut datum = classes[0].datum.clone();
        datum.d_faces.insert(datum.hexagon);
        assert_eq!(
            singularity_set(&datum).unwrap_err(),
            SpecError::DOnDistinguished
        );
    }

    #[test]
    fn two_trivalent_maps_are_theta_and_dumbbell() {
        let maps = generate_maps(2, 0);
        assert_eq!(maps.len(), 2);
        // Neither has a hexagonal region.
        for sk in &maps {
            assert!(sk.trace_faces().iter().all(|f| f.size() != 6));
        }
    }

    #[test]
    fn single_edge_map() {
        let maps = generate_maps(0, 2);
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].trace_faces().len(), 1);
    }

    #[test]
    fn theta_sheets_are_three_components() {
        let sk = crate::skeleton::fixtures::theta();
        let datum = ClassDatum {
            sk,
            hexagon: 0, // no real hexagon; fake the first face
            d_faces: BTreeSet::new(),
        };
        let a = sheet_analysis(&datum);
        assert_eq!(a.components, 3);
        assert_eq!(a.degrees, vec![1, 1, 1]);
    }

    #[test]
    fn dumbbell_sheets_are_two_components() {
        let sk = crate::skeleton::fixtures::dumbbell();
        let datum = ClassDatum {
            sk,
            hexagon: 0,
            d_faces: BTreeSet::new(),
        };
        let a = sheet_analysis(&datum);
        assert_eq!(a.components, 2);
        assert_eq!(a.degrees, vec![1, 2]);
    }
}
