//! Tietze simplification: deterministic relator-driven generator
//! elimination, common-substring shortening and cyclic reduction.
//!
//! The moves only ever rewrite within the same group; "free of rank r" is
//! reported when simplification reaches (r generators, no relators), which
//! is a sufficient certificate. Failure to reach that shape proves nothing.

use super::presentation::{Presentation, Provenance};
use super::word::Word;

#[derive(Clone, Copy, Debug)]
pub struct TietzeBudget {
    pub max_passes: usize,
    /// Only relators of length at most this are used to eliminate a
    /// generator that occurs in them exactly once.
    pub elim_len: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        TietzeBudget {
            max_passes: 400,
            elim_len: 4000,
        }
    }
}

/// Canonical representative of a cyclic word up to rotation and inversion.
fn cyclic_canon(w: &Word) -> Vec<i32> {
    let v = w.letters();
    if v.is_empty() {
        return Vec::new();
    }
    let mut best: Option<Vec<i32>> = None;
    for base in [v.to_vec(), w.inverse().letters().to_vec()] {
        for k in 0..base.len() {
            let mut rot = base[k..].to_vec();
            rot.extend_from_slice(&base[..k]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

fn normalize(words: &mut Vec<Word>) {
    for w in words.iter_mut() {
        *w = w.cyclically_reduced();
    }
    words.retain(|w| !w.is_empty());
    let mut seen = std::collections::BTreeSet::new();
    words.retain(|w| seen.insert(cyclic_canon(w)));
    words.sort_by_key(|w| (w.len(), w.letters().to_vec()));
}

/// One substring-shortening sweep. Uses each relator `r` to shorten other
/// relators containing more than half of `r` (cyclically) as a subword.
/// Sources are read live (never from a snapshot): a rewrite is sound only
/// while the relator it uses is still present unchanged.
#[allow(clippy::needless_range_loop)]
fn shorten_pass(words: &mut [Word]) -> bool {
    let mut changed = false;
    for ri in 0..words.len() {
        let r = words[ri].clone();
        if r.len() < 2 {
            continue;
        }
        let half = r.len() / 2;
        // All cyclic subwords u of r or r^-1 with |u| > half, mapped to
        // their replacement v^-1 where r ~ u v cyclically.
        for base in [r.clone(), r.inverse()] {
            let letters = base.letters();
            let doubled: Vec<i32> = letters.iter().chain(letters.iter()).copied().collect();
            for ulen in (half + 1)..=letters.len() {
                for start in 0..letters.len() {
                    let u = &doubled[start..start + ulen];
                    let v: Vec<i32> = doubled[start + ulen..start + letters.len()].to_vec();
                    let replacement = Word::from_letters(v).inverse();
                    for wi in 0..words.len() {
                        if wi == ri || words[wi].len() < ulen {
                            continue;
                        }
                        // Search cyclically: rotate w so the occurrence is
                        // linear, then replace.
                        let wlen = words[wi].len();
                        let wd: Vec<i32> = {
                            let l = words[wi].letters();
                            l.iter().chain(l.iter()).copied().collect()
                        };
                        let hit = (0..wlen).find(|&p| &wd[p..p + ulen] == u);
                        if let Some(pos) = hit {
                            let mut nw: Vec<i32> = replacement.letters().to_vec();
                            nw.extend(&wd[pos + ulen..pos + wlen]);
                            let cand = Word::from_letters(nw).cyclically_reduced();
                            if cand.len() < wlen {
                                words[wi] = cand;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
    }
    changed
}

/// Eliminates one generator occurring exactly once in some short relator.
/// Returns the new generator count on success.
fn eliminate_once(gens: usize, words: &mut Vec<Word>, elim_len: usize) -> Option<usize> {
    // Deterministic choice: shortest eligible relator, then lowest generator.
    let mut choice: Option<(usize, usize, u32)> = None; // (len, relator idx, gen)
    for (i, w) in words.iter().enumerate() {
        if w.len() > elim_len {
            continue;
        }
        for g in 1..=gens as u32 {
            let occ = w.letters().iter().filter(|l| l.unsigned_abs() == g).count();
            if occ == 1 {
                let key = (w.len(), i, g);
                if choice.is_none_or(|c| key < c) {
                    choice = Some(key);
                    break;
                }
            }
        }
    }
    let (_, idx, g) = choice?;
    let r = words[idx].clone();
    // Rotate r so the unique +-g letter leads: g y = 1 => g = y^-1.
    let pos = r
        .letters()
        .iter()
        .position(|l| l.unsigned_abs() == g)
        .unwrap();
    let sign = r.letters()[pos];
    let mut rot: Vec<i32> = r.letters()[pos..].to_vec();
    rot.extend_from_slice(&r.letters()[..pos]);
    let tail = Word::from_letters(rot[1..].to_vec());
    let image = if sign > 0 { tail.inverse() } else { tail };

    // Substitution images: g goes to `image` (expressed without g), the
    // others to themselves, then renumber generators above g down by one.
    let mut images: Vec<Word> = (1..=gens as i32).map(Word::gen).collect();
    images[(g - 1) as usize] = image;
    words.remove(idx);
    for w in words.iter_mut() {
        *w = w.substitute(&images);
    }
    // Renumber.
    let renumber: Vec<Word> = (1..=gens as i32)
        .map(|i| {
            use std::cmp::Ordering::*;
            match i.unsigned_abs().cmp(&g) {
                Less => Word::gen(i),
                Equal => Word::identity(), // g no longer occurs
                Greater => Word::gen(i - 1),
            }
        })
        .collect();
    for w in words.iter_mut() {
        *w = w.substitute(&renumber);
    }
    Some(gens - 1)
}

/// Tietze-simplifies `p` within the budget. Deterministic.
pub fn tietze_simplify(p: &Presentation, budget: TietzeBudget) -> Presentation {
    let mut gens = p.gens;
    let mut words: Vec<Word> = p.relator_words().cloned().collect();
    normalize(&mut words);
    let dbg = std::env::var_os("SEXTIC_TIETZE_DEBUG").is_some();
    for pass in 0..budget.max_passes {
        let mut changed = false;
        if shorten_pass(&mut words) {
            normalize(&mut words);
            changed = true;
        }
        if dbg {
            eprintln!(
                "pass {} after shorten: gens={} words={:?}",
                pass, gens, words
            );
        }
        if let Some(g) = eliminate_once(gens, &mut words, budget.elim_len) {
            gens = g;
            normalize(&mut words);
            changed = true;
        }
        if dbg {
            eprintln!("pass {} after elim: gens={} words={:?}", pass, gens, words);
        }
        if !changed {
            break;
        }
    }
    Presentation::new(
        gens,
        words
            .into_iter()
            .map(|w| (w, Provenance::Extra("tietze".into())))
            .collect(),
    )
}

/// True when the presentation is literally `< g_1..g_r | >`.
pub fn is_free_certificate(p: &Presentation, rank: usize) -> bool {
    p.gens == rank && p.relators.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eliminates_redundant_generator() {
        // <a, b | ab> is free of rank 1.
        let p = Presentation::plain(2, vec![Word::from_letters([1, 2])]);
        let q = tietze_simplify(&p, TietzeBudget::default());
        assert!(is_free_certificate(&q, 1));
    }

    #[test]
    fn collapses_power_relators() {
        // <a | a^1... actually a^4, a^6> should reach a^2 via shortening.
        let p = Presentation::plain(1, vec![Word::gen(1).pow(4), Word::gen(1).pow(6)]);
        let q = tietze_simplify(&p, TietzeBudget::default());
        assert_eq!(q.gens, 1);
        assert_eq!(q.relators.len(), 1);
        assert_eq!(q.relators[0].word.len(), 2);
    }

    #[test]
    fn free_group_stays_free() {
        let p = Presentation::plain(2, vec![]);
        let q = tietze_simplify(&p, TietzeBudget::default());
        assert!(is_free_certificate(&q, 2));
    }
}
