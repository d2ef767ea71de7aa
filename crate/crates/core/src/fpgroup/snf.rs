//! Smith normal form of integer matrices, with unimodular witnesses.
//!
//! Entries are arbitrary-precision; intermediate blowup in the elimination
//! is common even for small relation matrices, so no machine-word shortcut
//! is taken.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] -= q * row[b]
    fn row_op(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let sub = q * &self[(b, j)];
            self[(a, j)] -= sub;
        }
    }

    fn col_op(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let sub = q * &self[(i, b)];
            self[(i, a)] -= sub;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of a Smith normal form computation: `u * m * v = d` with
/// `u`, `v` unimodular and `d` diagonal with a divisibility chain.
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

impl Snf {
    /// Nonzero diagonal entries `d1 | d2 | ...`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Computes the Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.rows);
    let mut v = IntMat::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        loop {
            // Find a pivot: the nonzero entry of minimal absolute value in
            // the remaining block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if d[(i, j)].abs() < d[(pi, pj)].abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..d.rows {
                if !d[(i, t)].is_zero() {
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    d.row_op(i, t, &q);
                    u.row_op(i, t, &q);
                    if !d[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d[(t, j)].is_zero() {
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    d.col_op(j, t, &q);
                    v.col_op(j, t, &q);
                    if !d[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility: d[t][t] must divide the rest of the block.
            let mut fixed = true;
            'scan: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        // Fold row i into row t and restart this pivot.
                        let one = BigInt::from(-1);
                        d.row_op(t, i, &one);
                        u.row_op(t, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v)
}

fn finish(mut d: IntMat, mut u: IntMat, v: IntMat) -> Snf {
    let n = d.rows.min(d.cols);
    for t in 0..n {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { d, u, v }
}

/// Abelian group invariants computed from a relation matrix whose columns
/// index the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianInvariants {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Torsion coefficients `d1 | d2 | ...`, each greater than one.
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Order of the whole group when finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            return Self::trivial();
        }
        AbelianInvariants {
            free_rank: 0,
            torsion: vec![BigInt::from(n)],
        }
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for _ in 0..self.free_rank {
            parts.push("Z".into());
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariants of the abelian group presented by `relations` on `gens`
/// generators (columns are generators).
pub fn abelian_invariants(gens: usize, relations: &IntMat) -> AbelianInvariants {
    assert_eq!(relations.cols, gens);
    let snf = smith_normal_form(relations);
    let diag = snf.diagonal();
    let free_rank = gens - diag.len();
    let torsion = diag.into_iter().filter(|d| d > &BigInt::one()).collect();
    AbelianInvariants { free_rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witnesses(m: &IntMat) {
        let snf = smith_normal_form(m);
        let lhs = snf.u.mul(m).mul(&snf.v);
        assert_eq!(lhs, snf.d, "U*M*V must equal D");
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain violated");
        }
    }

    #[test]
    fn identity_is_fixed() {
        let m = IntMat::identity(3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, m);
        check_witnesses(&m);
    }

    #[test]
    fn zero_matrix() {
        let m = IntMat::zero(2, 3);
        let snf = smith_normal_form(&m);
        assert!(snf.diagonal().is_empty());
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = |16 - 24| = 8.
        let m = IntMat::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        check_witnesses(&m);
    }

    #[test]
    fn relation_at_infinity_abelianized() {
        // Single relation 4a + b + c = 0 on three generators: free rank 2.
        let m = IntMat::from_rows(&[vec![4, 1, 1]]);
        let inv = abelian_invariants(3, &m);
        assert_eq!(inv.free_rank, 2);
        assert!(inv.torsion.is_empty());
    }

    #[test]
    fn quartic_conic_shape() {
        // 4a + 2b = 0 on two generators: Z + Z/2.
        let m = IntMat::from_rows(&[vec![4, 2]]);
        let inv = abelian_invariants(2, &m);
        assert_eq!(inv.free_rank, 1);
        assert_eq!(inv.torsion, vec![BigInt::from(2)]);
    }
}
