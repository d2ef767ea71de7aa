//! Exhaustive homomorphism counting into small finite groups.

use super::presentation::Presentation;
use super::word::Word;

/// A finite group as a multiplication table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_mul_table(order: usize, mul: Vec<usize>) -> Self {
        assert_eq!(mul.len(), order * order);
        let mut inv = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b;
                }
            }
        }
        FiniteGroup { order, mul, inv }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The symmetric group on 3 letters; elements are permutations of
    /// 0,1,2 in lexicographic one-line order.
    pub fn symmetric_3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let mut mul = vec![0usize; 36];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (a*b)(x) = pa(pb(x))
                let comp = [pa[pb[0]], pa[pb[1]], pa[pb[2]]];
                mul[a * 6 + b] = idx(&comp);
            }
        }
        FiniteGroup::from_mul_table(6, mul)
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_mul_table(1, vec![0])
    }

    pub fn transpositions(&self) -> Vec<usize> {
        (1..self.order)
            .filter(|&a| self.element_order(a) == 2)
            .collect()
    }

    fn generated_subgroup_size(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut frontier = vec![0usize];
        let mut count = 1;
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    frontier.push(y);
                }
            }
        }
        count
    }

    pub fn eval(&self, w: &Word, images: &[usize]) -> usize {
        let mut acc = 0usize;
        for &l in w.letters() {
            let g = images[(l.unsigned_abs() as usize) - 1];
            let g = if l > 0 { g } else { self.inv(g) };
            acc = self.mul(acc, g);
        }
        acc
    }
}

/// Search configuration for `count_homomorphisms`.
#[derive(Clone, Debug, Default)]
pub struct HomSearch {
    pub surjective_only: bool,
    /// When set, every generator image must come from this subset (the
    /// meridian conjugacy-class constraint).
    pub image_class: Option<Vec<usize>>,
}

/// Exact count of homomorphisms from the presented group to `target` by
/// exhaustive search over generator images.
pub fn count_homomorphisms(p: &Presentation, target: &FiniteGroup, search: &HomSearch) -> usize {
    let candidates: Vec<usize> = match &search.image_class {
        Some(c) => c.clone(),
        None => (0..target.order).collect(),
    };
    let mut images = vec![0usize; p.gens];
    count_rec(p, target, search, &candidates, &mut images, 0)
}

fn count_rec(
    p: &Presentation,
    target: &FiniteGroup,
    search: &HomSearch,
    candidates: &[usize],
    images: &mut Vec<usize>,
    depth: usize,
) -> usize {
    if depth == p.gens {
        for r in p.relator_words() {
            if target.eval(r, images) != 0 {
                return 0;
            }
        }
        if search.surjective_only && target.generated_subgroup_size(images) != target.order {
            return 0;
        }
        return 1;
    }
    let mut total = 0;
    for &c in candidates {
        images[depth] = c;
        total += count_rec(p, target, search, candidates, images, depth + 1);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::alpha;
    use crate::fpgroup::word::braid_relator;

    #[test]
    fn trivial_target_has_one_hom() {
        let p = Presentation::plain(3, vec![Word::from_letters([1, 2, 3])]);
        assert_eq!(
            count_homomorphisms(&p, &FiniteGroup::trivial(), &HomSearch::default()),
            1
        );
    }

    #[test]
    fn s3_structure() {
        let s3 = FiniteGroup::symmetric_3();
        assert_eq!(s3.transpositions().len(), 3);
        assert_eq!(s3.element_order(3), 3);
    }

    #[test]
    fn braid_group_onto_s3() {
        // B3 = <a, b | aba = bab> surjects onto S3 with transposition images.
        let p = Presentation::plain(2, vec![braid_relator(&alpha(1), &alpha(2), 3)]);
        let s3 = FiniteGroup::symmetric_3();
        let n = count_homomorphisms(
            &p,
            &s3,
            &HomSearch {
                surjective_only: true,
                image_class: Some(s3.transpositions()),
            },
        );
        assert_eq!(n, 6); // ordered pairs of distinct transpositions
    }
}
