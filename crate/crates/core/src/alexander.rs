//! Exact two-variable Laurent-polynomial calculus for the Alexander
//! modules of the sextics with two linear components.
//!
//! The module is cyclic over Z[s,s^-1,t,t^-1] on a generator `a`; the
//! relation at infinity contributes `Q_inf(s) a = 0` with
//! `Q_inf = (s^2-s+1)(s^4-s^2+1)`, and each even braid relation around the
//! hexagon contributes the polynomial below. All `(s-1)` factors are
//! cancelled, multiplication by `(s-1)` being invertible on the module.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A Laurent polynomial in `s` and `t` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    /// (s-exponent, t-exponent) -> coefficient; zero coefficients are
    /// never stored.
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(coeff: i64, s: i32, t: i32) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term((s, t), BigInt::from(coeff));
        p
    }

    pub fn one() -> Self {
        Self::term(1, 0, 0)
    }

    pub fn s() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: (i32, i32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = LaurentPoly::default();
        for (k, c) in &self.terms {
            out.terms.insert(*k, -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term((ka.0 + kb.0, ka.1 + kb.1), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `t -> image` (a polynomial in `s` alone); requires all
    /// `t`-exponents nonnegative.
    pub fn substitute_t(&self, image: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (&(se, te), c) in &self.terms {
            assert!(te >= 0, "t-substitution needs nonnegative t-exponents");
            assert!(image.terms.keys().all(|k| k.1 == 0));
            let mut piece = Self::term(1, se, 0);
            piece = piece.mul(&image.pow(te as u32));
            for (k, cc) in piece.terms {
                out.add_term(k, cc * c);
            }
        }
        out
    }

    pub fn t_degree(&self) -> Option<(i32, i32)> {
        let min = self.terms.keys().map(|k| k.1).min()?;
        let max = self.terms.keys().map(|k| k.1).max()?;
        Some((min, max))
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(se, te), c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            let mut printed_coeff = false;
            if !a.is_one() || (se == 0 && te == 0) {
                write!(f, "{}", a)?;
                printed_coeff = true;
            }
            for (sym, e) in [("s", se), ("t", te)] {
                if e != 0 {
                    if printed_coeff {
                        write!(f, "*")?;
                    }
                    printed_coeff = true;
                    if e == 1 {
                        write!(f, "{}", sym)?;
                    } else {
                        write!(f, "{}^{}", sym, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `P_m(x) = (x^m - 1)/(x - 1) = 1 + x + ... + x^(m-1)`.
pub fn p_of(m: u32, x: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut acc = LaurentPoly::one();
    for _ in 0..m {
        out = out.add(&acc);
        acc = acc.mul(x);
    }
    out
}

/// `Q_inf(s) = (s^2 - s + 1)(s^4 - s^2 + 1)`.
pub fn q_infinity() -> LaurentPoly {
    let q = LaurentPoly::term(1, 2, 0)
        .sub(&LaurentPoly::term(1, 1, 0))
        .add(&LaurentPoly::one());
    let r = LaurentPoly::term(1, 4, 0)
        .sub(&LaurentPoly::term(1, 2, 0))
        .add(&LaurentPoly::one());
    q.mul(&r)
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("region size {0} is odd; the two-component calculus needs even sizes")]
    OddRegion(u32),
    #[error("no relation linear in t with unit leading coefficient")]
    NoLinearRelation,
    #[error("ideal membership inconclusive at the degree bound")]
    Inconclusive,
}

/// The module relation contributed by the braid relation
/// `{sigma2^i(a2), a1}_(2r) = 1`, with the `(s-1)` factors already
/// cancelled:
/// even `i = 2j`:      `(t-1) P_r(st) P_j(s^4)`;
/// odd  `i = 2j-1`:    `P_r(s^3 t) [ (1 - s^4 t) P_j(s^4) + s^(4j) t ]`.
pub fn region_relation(i: u32, size: u32) -> Result<LaurentPoly, AlexanderError> {
    if !size.is_multiple_of(2) {
        return Err(AlexanderError::OddRegion(size));
    }
    let r = size / 2;
    let s4 = LaurentPoly::term(1, 4, 0);
    Ok(if i.is_multiple_of(2) {
        let j = i / 2;
        let t_minus_1 = LaurentPoly::t().sub(&LaurentPoly::one());
        let st = LaurentPoly::term(1, 1, 1);
        t_minus_1.mul(&p_of(r, &st)).mul(&p_of(j, &s4))
    } else {
        let j = i.div_ceil(2);
        let s3t = LaurentPoly::term(1, 3, 1);
        let bracket = LaurentPoly::one()
            .sub(&LaurentPoly::term(1, 4, 1))
            .mul(&p_of(j, &s4))
            .add(&LaurentPoly::term(1, 4 * j as i32, 1));
        p_of(r, &s3t).mul(&bracket)
    })
}

/// A cyclic module over the two-variable Laurent ring, given by its
/// relation polynomials; the relation at infinity is always present.
#[derive(Clone, Debug)]
pub struct AlexanderModule {
    pub relations: Vec<LaurentPoly>,
}

/// Builds the module from the hexagon parameters; `None` entries are
/// ignored relations (type-D regions or repeats).
pub fn build_module(params: [Option<u32>; 6]) -> Result<AlexanderModule, AlexanderError> {
    let mut relations = vec![q_infinity()];
    for (i, p) in params.iter().enumerate() {
        if let Some(n) = p {
            if *n == 0 {
                continue;
            }
            let rel = region_relation(i as u32, *n)?;
            if !rel.is_zero() {
                relations.push(rel);
            }
        }
    }
    Ok(AlexanderModule { relations })
}

/// A one-variable integer polynomial, dense coefficients from degree 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly(coeffs.iter().map(|&c| BigInt::from(c)).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] += b;
        }
        Poly(out).trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// Exact division; `None` if not divisible over Z.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly(Vec::new()));
        }
        if d.is_zero() || self.0.len() < d.0.len() {
            return None;
        }
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); self.0.len() - d.0.len() + 1];
        let lead = d.0.last().unwrap();
        for k in (0..quot.len()).rev() {
            let top = rem[k + d.0.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let q = &top / lead;
            for (i, c) in d.0.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly(quot).trimmed())
        } else {
            None
        }
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if e == 1 {
                    write!(f, "s")?;
                } else {
                    write!(f, "s^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Converts a one-variable Laurent polynomial to an ordinary polynomial by
/// clearing the power of `s` and cancelling all `(s-1)` and `s` factors
/// (both act invertibly on the module).
pub fn normalize_to_poly(p: &LaurentPoly) -> Poly {
    if p.is_zero() {
        return Poly(Vec::new());
    }
    assert!(
        p.terms.keys().all(|k| k.1 == 0),
        "one-variable input expected"
    );
    let min = p.terms.keys().map(|k| k.0).min().unwrap();
    let max = p.terms.keys().map(|k| k.0).max().unwrap();
    let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
    for (&(se, _), c) in &p.terms {
        coeffs[(se - min) as usize] = c.clone();
    }
    let mut poly = Poly(coeffs).trimmed();
    let s_minus_1 = Poly::from_i64(&[-1, 1]);
    loop {
        match poly.div_exact(&s_minus_1) {
            Some(q) if !q.is_zero() => poly = q,
            _ => break,
        }
    }
    // normalize sign: positive leading coefficient
    if poly.0.last().is_some_and(|c| c.is_negative()) {
        poly = poly.neg();
    }
    poly
}

/// Elimination of `t`: finds a relation of the form `(c0(s) + c1(s) t) a = 0`
/// with `c1` a unit monomial, and returns the substitution image of `t`
/// together with the one-variable relation ideal generators.
pub struct Eliminated {
    pub t_image: LaurentPoly,
    pub generators: Vec<Poly>,
}

pub fn eliminate_t(module: &AlexanderModule) -> Result<Eliminated, AlexanderError> {
    let mut t_image = None;
    for rel in &module.relations {
        let Some((lo, hi)) = rel.t_degree() else {
            continue;
        };
        if lo < 0 || hi != 1 {
            continue;
        }
        // c0 + c1 t with c1 = +-s^k
        let mut c0 = LaurentPoly::zero();
        let mut c1 = LaurentPoly::zero();
        for (&(se, te), c) in &rel.terms {
            let target = if te == 0 { &mut c0 } else { &mut c1 };
            target.add_term((se, 0), c.clone());
        }
        if c1.terms.len() != 1 {
            continue;
        }
        let (&(k, _), c) = c1.terms.iter().next().unwrap();
        if !c.abs().is_one() {
            continue;
        }
        // t = -c0 / c1 = -c0 * (sign) * s^-k
        let sign = if c.is_negative() { 1 } else { -1 };
        let image = c0.mul(&LaurentPoly::term(sign, -k, 0));
        t_image = Some(image);
        break;
    }
    let t_image = t_image.ok_or(AlexanderError::NoLinearRelation)?;
    let mut generators = Vec::new();
    for rel in &module.relations {
        let sub = rel.substitute_t(&t_image);
        let poly = normalize_to_poly(&sub);
        if !poly.is_zero() && !generators.contains(&poly) {
            generators.push(poly);
        }
    }
    Ok(Eliminated {
        t_image,
        generators,
    })
}

/// Certificate that `claimed` generates the ideal of `generators` over
/// `Z[s]`: `claimed` divides every generator, and an explicit integer
/// combination of shifted generators equals `claimed`.
pub struct IdealCertificate {
    /// `(generator index, shift, coefficient)` triples summing to the
    /// claimed polynomial.
    pub combination: Vec<(usize, usize, BigInt)>,
}

pub fn ideal_equals(
    generators: &[Poly],
    claimed: &Poly,
) -> Result<IdealCertificate, AlexanderError> {
    use crate::fpgroup::snf::{smith_normal_form, IntMat};
    for g in generators {
        if g.div_exact(claimed).is_none() {
            return Err(AlexanderError::Inconclusive);
        }
    }
    // Lattice of coefficient vectors of x^k g_i up to the degree bound.
    let bound = 2 + generators.iter().map(|g| g.degree()).max().unwrap_or(0) + claimed.degree();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut tags: Vec<(usize, usize)> = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        for shift in 0..=(bound - g.degree()) {
            let mut row = vec![BigInt::zero(); bound + 1];
            for (e, c) in g.0.iter().enumerate() {
                row[e + shift] = c.clone();
            }
            rows.push(row);
            tags.push((gi, shift));
        }
    }
    // Solve rows^T x = claimed over Z via Smith normal form.
    let mut m = IntMat::zero(bound + 1, rows.len());
    for (j, row) in rows.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            m[(i, j)] = c.clone();
        }
    }
    let snf = smith_normal_form(&m);
    let mut target = IntMat::zero(bound + 1, 1);
    for (e, c) in claimed.0.iter().enumerate() {
        target[(e, 0)] = c.clone();
    }
    let ut = snf.u.mul(&target);
    let rank = snf.diagonal().len();
    let mut y = IntMat::zero(rows.len(), 1);
    for i in 0..bound + 1 {
        let d = if i < rank {
            snf.d[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !ut[(i, 0)].is_zero() {
                return Err(AlexanderError::Inconclusive);
            }
        } else {
            if (&ut[(i, 0)] % &d) != BigInt::zero() {
                return Err(AlexanderError::Inconclusive);
            }
            if i < rows.len() {
                y[(i, 0)] = &ut[(i, 0)] / &d;
            }
        }
    }
    let x = snf.v.mul(&y);
    let combination: Vec<(usize, usize, BigInt)> = (0..rows.len())
        .filter(|&j| !x[(j, 0)].is_zero())
        .map(|j| (tags[j].0, tags[j].1, x[(j, 0)].clone()))
        .collect();
    // verify the certificate exactly
    let mut sum = Poly(Vec::new());
    for &(gi, shift, ref c) in &combination {
        let mut shifted = vec![BigInt::zero(); shift];
        shifted.extend(generators[gi].0.iter().map(|a| a * c));
        sum = sum.add(&Poly(shifted).trimmed());
    }
    if sum != *claimed {
        return Err(AlexanderError::Inconclusive);
    }
    Ok(IdealCertificate { combination })
}

/// Content (gcd of coefficients) of a polynomial.
fn content(p: &Poly) -> BigInt {
    use num_integer::Integer;
    p.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(&c.abs()))
}

fn primitive(p: &Poly) -> Poly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    Poly(p.0.iter().map(|x| x / &c).collect()).trimmed()
}

/// Primitive gcd over Q of two integer polynomials (pseudo-remainder
/// sequence with content normalization).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = primitive(a);
    let mut b = primitive(b);
    while !b.is_zero() {
        // pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let lead = b.0.last().unwrap().clone();
        let mut rem = a.0.clone();
        for _ in 0..(a.degree() - b.degree() + 1) {
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            // reduce leading term if possible
            while rem.len() >= b.0.len() && !rem.is_empty() {
                let top = rem.last().unwrap().clone();
                if top.is_zero() {
                    rem.pop();
                    continue;
                }
                if (&top % &lead) != BigInt::zero() {
                    break;
                }
                let q = &top / &lead;
                let off = rem.len() - b.0.len();
                for (i, c) in b.0.iter().enumerate() {
                    rem[off + i] -= &q * c;
                }
                while rem.last().is_some_and(|c| c.is_zero()) {
                    rem.pop();
                }
            }
        }
        let r = primitive(&Poly(rem).trimmed());
        a = b;
        b = r;
    }
    let mut g = primitive(&a);
    if g.0.last().is_some_and(|c| c.is_negative()) {
        g = g.neg();
    }
    g
}

/// The primitive gcd of a family.
pub fn gcd_many(polys: &[Poly]) -> Poly {
    polys.iter().fold(Poly(Vec::new()), |acc, p| {
        if acc.is_zero() {
            primitive(p)
        } else {
            poly_gcd(&acc, p)
        }
    })
}

/// The printed three-term identity whose total is the constant 1:
/// `s(s^3-s-2)(s^4+s^3+s^2-s+1) R(s) - s^2(s^4+s^3+s^2-s+1) S1(s)
///  + (s^5+s^4+s^3-s^2+s+1) S2(s) = 1`.
pub fn verify_bezout_identity() -> bool {
    let r = Poly::from_i64(&[1, 0, -1, 0, 1]);
    let s1 = Poly::from_i64(&[1, 2, 2, 0, 0, 1, 1]);
    let s2 = Poly::from_i64(&[1, 1, 0, 0, 2, 2, 1]);
    let f1 = Poly::from_i64(&[0, -2, -1, 0, 1]).mul(&Poly::from_i64(&[1, -1, 1, 1, 1]));
    let f2 = Poly::from_i64(&[0, 0, -1]).mul(&Poly::from_i64(&[1, -1, 1, 1, 1]));
    let f3 = Poly::from_i64(&[1, 1, -1, 1, 1, 1]);
    let total = f1.mul(&r).add(&f2.mul(&s1)).add(&f3.mul(&s2));
    total == Poly::from_i64(&[1])
}

/// `R(s) - (s-1)^2 S1(s) = s^2` for `S1 = (s+1)^2`.
pub fn verify_r_minus_square() -> bool {
    let r = Poly::from_i64(&[1, 0, -1, 0, 1]);
    let sq = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[-1, 1]));
    let s1 = Poly::from_i64(&[1, 1]).mul(&Poly::from_i64(&[1, 1]));
    r.add(&sq.mul(&s1).neg()) == Poly::from_i64(&[0, 0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_basics() {
        let x = LaurentPoly::s();
        assert!(p_of(0, &x).is_zero());
        assert_eq!(p_of(1, &x), LaurentPoly::one());
        // P_3(x) = 1 + x + x^2
        assert_eq!(
            p_of(3, &x),
            LaurentPoly::one()
                .add(&LaurentPoly::term(1, 1, 0))
                .add(&LaurentPoly::term(1, 2, 0))
        );
    }

    #[test]
    fn q_infinity_divides_s12_minus_1() {
        let mut s12 = vec![BigInt::from(-1)];
        s12.extend(std::iter::repeat_n(BigInt::zero(), 11));
        s12.push(BigInt::from(1));
        let s12 = Poly(s12);
        let q = normalize_to_poly(&q_infinity());
        assert!(s12.div_exact(&q).is_some());
    }

    #[test]
    fn region_relation_edges() {
        // i = 0 with a bigon: P_0 factor kills it.
        assert!(region_relation(0, 2).unwrap().is_zero());
        // odd sizes rejected
        assert_eq!(
            region_relation(1, 3).unwrap_err(),
            AlexanderError::OddRegion(3)
        );
        // i = 1, r = 1: the bracket collapses to 1.
        assert_eq!(region_relation(1, 2).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn bezout_identities() {
        assert!(verify_bezout_identity());
        assert!(verify_r_minus_square());
        // negative control: flip one sign
        let r = Poly::from_i64(&[1, 0, -1, 0, 1]);
        let s1 = Poly::from_i64(&[1, 2, 2, 0, 0, 1, 1]);
        let s2 = Poly::from_i64(&[1, 1, 0, 0, 2, 2, 1]);
        let f1 = Poly::from_i64(&[0, 2, 1, 0, -1]).mul(&Poly::from_i64(&[1, -1, 1, 1, 1]));
        let f2 = Poly::from_i64(&[0, 0, -1]).mul(&Poly::from_i64(&[1, -1, 1, 1, 1]));
        let f3 = Poly::from_i64(&[1, 1, -1, 1, 1, 1]);
        let total = f1.mul(&r).add(&f2.mul(&s1)).add(&f3.mul(&s2));
        assert_ne!(total, Poly::from_i64(&[1]));
    }

    #[test]
    fn s_minus_one_inversion_as_ideal_fact() {
        // (s-1) s (s^4+s+1) + 1 = Q_inf exactly.
        let lhs = Poly::from_i64(&[-1, 1])
            .mul(&Poly::from_i64(&[0, 1]))
            .mul(&Poly::from_i64(&[1, 1, 0, 0, 1]))
            .add(&Poly::from_i64(&[1]));
        assert_eq!(lhs, normalize_to_poly(&q_infinity()));
    }
}
