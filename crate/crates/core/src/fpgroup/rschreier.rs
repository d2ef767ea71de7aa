//! Reidemeister-Schreier subgroup presentations from complete coset tables.

use super::coset::{CosetError, CosetTable};
use super::presentation::{Presentation, Provenance};
use super::word::Word;

/// A subgroup presentation on Schreier generators, together with each
/// generator's expression as a word in the ambient group.
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    /// `schreier[k]` is the ambient word of subgroup generator `k+1`.
    pub schreier: Vec<Word>,
}

/// Computes a presentation of the subgroup whose cosets `table` enumerates.
pub fn reidemeister_schreier(
    p: &Presentation,
    table: &CosetTable,
) -> Result<SubgroupPresentation, CosetError> {
    if table.gens != p.gens {
        return Err(CosetError::Invalid("generator count mismatch".into()));
    }
    let n = table.index;
    let gens = p.gens;

    // Spanning tree by BFS; reps[c] is the coset representative word.
    let mut reps: Vec<Option<Word>> = vec![None; n];
    reps[0] = Some(Word::identity());
    // tree[c * gens + (g-1)] marks the unordered edge c --g--> step(c, g).
    let mut tree = vec![false; n * gens];
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 1..=gens as i32 {
            for l in [g, -g] {
                let d = table.step(c, l);
                if reps[d].is_none() {
                    reps[d] = Some(reps[c].clone().unwrap().mul(&Word::gen(l)));
                    // Mark the tree pair at its positive-letter source.
                    if l > 0 {
                        tree[c * gens + (g as usize - 1)] = true;
                    } else {
                        tree[d * gens + (g as usize - 1)] = true;
                    }
                    queue.push_back(d);
                }
            }
        }
    }
    let reps: Vec<Word> = reps.into_iter().map(|r| r.unwrap()).collect();

    // Index the non-tree pairs (coset, generator).
    let mut index = vec![0usize; n * gens];
    let mut schreier = Vec::new();
    for c in 0..n {
        for g in 1..=gens {
            if tree[c * gens + g - 1] {
                continue;
            }
            let d = table.step(c, g as i32);
            let w = reps[c].mul(&Word::gen(g as i32)).mul(&reps[d].inverse());
            schreier.push(w);
            index[c * gens + g - 1] = schreier.len(); // 1-based
        }
    }

    // Rewrite each relator at each coset.
    let rewrite = |start: usize, r: &Word| -> Word {
        let mut out: Vec<i32> = Vec::new();
        let mut c = start;
        for &l in r.letters() {
            if l > 0 {
                let g = l as usize;
                if !tree[c * gens + g - 1] {
                    out.push(index[c * gens + g - 1] as i32);
                }
                c = table.step(c, l);
            } else {
                let g = (-l) as usize;
                let d = table.step(c, l);
                if !tree[d * gens + g - 1] {
                    out.push(-(index[d * gens + g - 1] as i32));
                }
                c = d;
            }
        }
        Word::from_letters(out)
    };

    let mut relators = Vec::new();
    for c in 0..n {
        for r in p.relator_words() {
            let w = rewrite(c, r);
            if !w.is_empty() {
                relators.push((w, Provenance::Extra(format!("coset {}", c))));
            }
        }
    }

    Ok(SubgroupPresentation {
        presentation: Presentation::new(schreier.len(), relators),
        schreier,
    })
}

#[cfg(test)]
mod tests {
    use super::super::coset::{coset_enumerate, TcOptions};
    use super::super::word::{braid_relator, Word};
    use super::*;
    use crate::fpgroup::alpha;

    #[test]
    fn index_one_gives_same_group() {
        let p = Presentation::plain(1, vec![Word::from_letters([1; 6])]);
        let t = coset_enumerate(&p, &[Word::gen(1)], TcOptions::default()).unwrap();
        assert_eq!(t.index, 1);
        let sub = reidemeister_schreier(&p, &t).unwrap();
        // One Schreier generator, relator a^6: abelianization Z/6.
        let inv = sub.presentation.abelianization();
        assert_eq!(inv.order(), Some(6u32.into()));
    }

    #[test]
    fn commutator_subgroup_of_s3() {
        // S3 = <a,b | a^2, b^2, (ab)^3>; the derived subgroup is C3.
        let p = Presentation::plain(
            2,
            vec![
                Word::from_letters([1, 1]),
                Word::from_letters([2, 2]),
                braid_relator(&alpha(1), &alpha(2), 3).mul(&Word::identity()),
            ],
        );
        // Kernel of S3 -> C2 sending both generators to 1.
        let t = super::super::coset::cyclic_kernel_table(&p, 2, &[1, 1]).unwrap();
        let sub = reidemeister_schreier(&p, &t).unwrap();
        let inv = sub.presentation.abelianization();
        assert_eq!(inv.order(), Some(3u32.into()));
    }
}
