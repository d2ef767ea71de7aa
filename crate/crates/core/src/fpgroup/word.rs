//! Freely reduced words over signed generators.
//!
//! A generator is a positive index `1, 2, 3, ...`; its inverse is the
//! negative index. Words are kept freely reduced at all times, so equality
//! of `Word` values is equality in the free group.

use std::fmt;

/// A freely reduced word over signed generator indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Single generator `x_i` (or inverse for negative `i`).
    pub fn gen(i: i32) -> Self {
        assert!(i != 0, "generator index must be nonzero");
        Word(vec![i])
    }

    /// Builds a word from signed letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, letter: i32) {
        assert!(letter != 0);
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inverse())
    }

    /// Commutator `[self, other] = self other self^-1 other^-1`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// Cyclically reduced form (conjugate of `self` of minimal length).
    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.clone();
        while v.len() >= 2 && *v.first().unwrap() == -*v.last().unwrap() {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }

    /// Exponent sums per generator, indexed by generator number minus one.
    pub fn exponent_sums(&self, gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; gens];
        for &l in &self.0 {
            let idx = (l.unsigned_abs() as usize) - 1;
            sums[idx] += if l > 0 { 1 } else { -1 };
        }
        sums
    }

    /// Largest generator index appearing in the word (0 for the identity).
    pub fn max_gen(&self) -> u32 {
        self.0.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    /// Applies a substitution: generator `i` maps to `images[i-1]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for &l in &self.0 {
            let img = &images[(l.unsigned_abs() as usize) - 1];
            let piece = if l > 0 { img.clone() } else { img.inverse() };
            out = out.mul(&piece);
        }
        out
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let e = if l > 0 { run as i32 } else { -(run as i32) };
            if e == 1 {
                write!(f, "a{}", l)?;
            } else {
                write!(f, "a{}^{}", l.abs(), e)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// The three standard meridian generators used throughout: `a1, a2, a3`.
pub fn alpha(i: i32) -> Word {
    Word::gen(i)
}

/// `rho = a1 a2 a3`.
pub fn rho() -> Word {
    Word::from_letters([1, 2, 3])
}

/// Letters of a braid word over `s1, s2` and their inverses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraidGen {
    S1,
    S2,
    S1Inv,
    S2Inv,
}

/// A word in the braid group B3 acting on the free group on `a1, a2, a3`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BraidWord(pub Vec<BraidGen>);

impl BraidWord {
    pub fn new<I: IntoIterator<Item = BraidGen>>(gens: I) -> Self {
        BraidWord(gens.into_iter().collect())
    }

    /// `s2^k` for `k >= 0`.
    pub fn sigma2_pow(k: usize) -> Self {
        BraidWord(vec![BraidGen::S2; k])
    }
}

/// Applies one Artin generator to `(a1, a2, a3)` images.
///
/// s1: (a1, a2, a3) -> (a1 a2 a1^-1, a1, a3)
/// s2: (a1, a2, a3) -> (a1, a2 a3 a2^-1, a2)
fn apply_gen(images: &mut [Word; 3], g: BraidGen) {
    match g {
        BraidGen::S1 => {
            let new0 = images[0].conjugate(&images[1]);
            images[1] = images[0].clone();
            images[0] = new0;
        }
        BraidGen::S1Inv => {
            let new1 = images[1].inverse().conjugate(&images[0]);
            images[0] = images[1].clone();
            images[1] = new1;
        }
        BraidGen::S2 => {
            let new1 = images[1].conjugate(&images[2]);
            images[2] = images[1].clone();
            images[1] = new1;
        }
        BraidGen::S2Inv => {
            let new2 = images[2].inverse().conjugate(&images[1]);
            images[1] = images[2].clone();
            images[2] = new2;
        }
    }
}

/// Generator images of the free group under a braid word.
pub fn braid_images(b: &BraidWord) -> [Word; 3] {
    let mut images = [Word::gen(1), Word::gen(2), Word::gen(3)];
    for &g in &b.0 {
        apply_gen(&mut images, g);
    }
    images
}

/// The braid group action of `b` on a word over `a1, a2, a3`.
pub fn braid_act(b: &BraidWord, w: &Word) -> Word {
    assert!(w.max_gen() <= 3, "braid action defined on 3 generators");
    let images = braid_images(b);
    w.substitute(&images)
}

/// The relator `{a, b}_m` expressing triviality of the local braid `s^m`.
///
/// For m = 2k it is `(ab)^k (ba)^-k`; for m = 2k+1 it is
/// `((ab)^k a)((ba)^k b)^-1`; m = 0 gives the empty word.
pub fn braid_relator(a: &Word, b: &Word, m: u32) -> Word {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let k = (m / 2) as i32;
    if m.is_multiple_of(2) {
        ab.pow(k).mul(&ba.pow(-k))
    } else {
        ab.pow(k).mul(a).mul(&ba.pow(k).mul(b).inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_letters([1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
        assert!(Word::from_letters([1, -1]).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_letters([1, 2, 3, -1]);
        // a1 a2 a3 a1^-1 -> cyclic conjugate a2 a3
        assert_eq!(w.cyclically_reduced().letters(), &[2, 3]);
    }

    #[test]
    fn sigma2_definition() {
        // s2 sends a2 to a2 a3 a2^-1.
        let b = BraidWord::new([BraidGen::S2]);
        assert_eq!(braid_act(&b, &alpha(2)), Word::from_letters([2, 3, -2]));
        // and a3 to a2, a1 fixed
        assert_eq!(braid_act(&b, &alpha(3)), alpha(2));
        assert_eq!(braid_act(&b, &alpha(1)), alpha(1));
    }

    #[test]
    fn braid_relation_in_b3() {
        // s1 s2 s1 and s2 s1 s2 act identically.
        let lhs = BraidWord::new([BraidGen::S1, BraidGen::S2, BraidGen::S1]);
        let rhs = BraidWord::new([BraidGen::S2, BraidGen::S1, BraidGen::S2]);
        for i in 1..=3 {
            assert_eq!(braid_act(&lhs, &alpha(i)), braid_act(&rhs, &alpha(i)));
        }
    }

    #[test]
    fn sigma2_squared_on_a2() {
        // s2^2(a2) = (a2 a3 a2^-1) a2 (a2 a3 a2^-1)^-1, composed by hand.
        let b = BraidWord::sigma2_pow(2);
        let c = Word::from_letters([2, 3, -2]);
        assert_eq!(braid_act(&b, &alpha(2)), c.conjugate(&alpha(2)));
    }

    #[test]
    fn braid_inverses() {
        let id = BraidWord::new([BraidGen::S1, BraidGen::S1Inv, BraidGen::S2, BraidGen::S2Inv]);
        for i in 1..=3 {
            assert_eq!(braid_act(&id, &alpha(i)), alpha(i));
        }
    }

    #[test]
    fn relator_small_m() {
        let a = alpha(1);
        let b = alpha(2);
        assert!(braid_relator(&a, &b, 0).is_empty());
        // m=1: the identification a = b.
        assert_eq!(braid_relator(&a, &b, 1), Word::from_letters([1, -2]));
        // m=2: the commutativity relation.
        assert_eq!(braid_relator(&a, &b, 2), Word::from_letters([1, 2, -1, -2]));
        // m=3: the braid relation a b a = b a b.
        assert_eq!(
            braid_relator(&a, &b, 3),
            Word::from_letters([1, 2, 1, -2, -1, -2])
        );
    }

    #[test]
    fn rho_is_fixed_by_braid_action() {
        let b = BraidWord::new([BraidGen::S1, BraidGen::S2, BraidGen::S2, BraidGen::S1Inv]);
        assert_eq!(braid_act(&b, &rho()), rho());
    }
}
