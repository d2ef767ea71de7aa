//! Todd-Coxeter coset enumeration over a finitely presented group.
//!
//! HLT with lookahead is the default strategy; a Felsch-style mode is
//! available for cross-checking. Complete tables are always validated by a
//! full relator scan at every coset before being handed out.

use super::presentation::Presentation;
use super::word::Word;

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Hlt,
    Felsch,
}

#[derive(Clone, Copy, Debug)]
pub struct TcOptions {
    pub strategy: Strategy,
    /// Maximum number of live-or-dead rows ever allocated.
    pub limit: usize,
}

impl Default for TcOptions {
    fn default() -> Self {
        TcOptions {
            strategy: Strategy::Hlt,
            limit: 2_000_000,
        }
    }
}

#[derive(thiserror::Error, Debug)]
pub enum CosetError {
    #[error("coset enumeration overflowed the limit of {0} rows (inconclusive)")]
    Overflow(usize),
    #[error("coset table failed validation: {0}")]
    Invalid(String),
    #[error("operation requires a complete coset table")]
    Incomplete,
}

/// A complete coset table: the permutation action of the generators on the
/// cosets of a subgroup, coset 0 being the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub gens: usize,
    /// Row-major, `2 * gens` columns: column `2i` is generator `i+1`,
    /// column `2i + 1` its inverse.
    table: Vec<u32>,
    pub index: usize,
}

impl CosetTable {
    /// Builds a table from raw storage; used by the direct kernel-table
    /// constructions, which validate afterwards.
    pub fn from_raw(gens: usize, table: Vec<u32>, index: usize) -> Self {
        assert_eq!(table.len(), index * 2 * gens);
        CosetTable { gens, table, index }
    }

    #[inline]
    fn col(gens: usize, letter: i32) -> usize {
        let g = (letter.unsigned_abs() as usize) - 1;
        debug_assert!(g < gens);
        2 * g + usize::from(letter < 0)
    }

    #[inline]
    pub fn step(&self, coset: usize, letter: i32) -> usize {
        self.table[coset * 2 * self.gens + Self::col(self.gens, letter)] as usize
    }

    pub fn trace(&self, mut coset: usize, w: &Word) -> usize {
        for &l in w.letters() {
            coset = self.step(coset, l);
        }
        coset
    }

    /// Scans every relator at every coset.
    pub fn validate(&self, p: &Presentation, subgroup: &[Word]) -> Result<(), CosetError> {
        if p.gens != self.gens {
            return Err(CosetError::Invalid("generator count mismatch".into()));
        }
        for c in 0..self.index {
            for r in p.relator_words() {
                if self.trace(c, r) != c {
                    return Err(CosetError::Invalid(format!(
                        "relator {} does not scan at coset {}",
                        r, c
                    )));
                }
            }
        }
        for h in subgroup {
            if self.trace(0, h) != 0 {
                return Err(CosetError::Invalid(format!(
                    "subgroup generator {} does not fix coset 0",
                    h
                )));
            }
        }
        // transitivity
        let mut seen = vec![false; self.index];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for g in 1..=self.gens as i32 {
                for l in [g, -g] {
                    let d = self.step(c, l);
                    if !seen[d] {
                        seen[d] = true;
                        count += 1;
                        stack.push(d);
                    }
                }
            }
        }
        if count != self.index {
            return Err(CosetError::Invalid("action is not transitive".into()));
        }
        Ok(())
    }

    /// True if the permutation induced by `w` commutes with every generator.
    pub fn is_central(&self, w: &Word) -> bool {
        (0..self.index).all(|c| {
            let wc = self.trace(c, w);
            (1..=self.gens as i32).all(|g| {
                let a = self.step(wc, g);
                let b = self.trace(self.step(c, g), w);
                a == b
            })
        })
    }

    /// True if `w` acts as the identity permutation (i.e. `w` lies in the
    /// normal core witnessed by this table; for the trivial subgroup this
    /// means `w = 1` in the group).
    pub fn is_identity(&self, w: &Word) -> bool {
        (0..self.index).all(|c| self.trace(c, w) == c)
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    /// Union-find over rows; p[i] == i iff row i is live.
    p: Vec<u32>,
    live: usize,
    limit: usize,
    dedns: Vec<(u32, usize)>,
}

impl Enumerator {
    fn new(gens: usize, limit: usize) -> Self {
        let cols = 2 * gens;
        Enumerator {
            cols,
            table: vec![UNDEF; cols],
            p: vec![0],
            live: 1,
            limit,
            dedns: Vec::new(),
        }
    }

    #[inline]
    fn entry(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.cols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.cols + col] = v;
    }

    #[inline]
    fn col_of(&self, letter: i32) -> usize {
        2 * ((letter.unsigned_abs() as usize) - 1) + usize::from(letter < 0)
    }

    #[inline]
    fn inv_col(col: usize) -> usize {
        col ^ 1
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        while self.p[c as usize] != c {
            let gp = self.p[self.p[c as usize] as usize];
            self.p[c as usize] = gp;
            c = gp;
        }
        c
    }

    fn is_alive(&self, c: u32) -> bool {
        self.p[c as usize] == c
    }

    fn rows(&self) -> usize {
        self.p.len()
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.rows() >= self.limit {
            return None;
        }
        let c = self.rows() as u32;
        self.p.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.live += 1;
        Some(c)
    }

    fn deduce(&mut self, a: u32, col: usize, b: u32) {
        self.set(a, col, b);
        self.set(b, Self::inv_col(col), a);
        self.dedns.push((a, col));
    }

    fn merge_into_queue(&mut self, a: u32, b: u32, queue: &mut std::collections::VecDeque<u32>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, die) = if a < b { (a, b) } else { (b, a) };
        self.p[die as usize] = keep;
        self.live -= 1;
        queue.push_back(die);
    }

    /// Queue-based coincidence processing. Every edge of a dying row is
    /// transplanted onto the surviving representatives, keeping the table
    /// symmetric (both `keep --x--> dr` and `dr --x^-1--> keep` are set).
    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = std::collections::VecDeque::new();
        self.merge_into_queue(a, b, &mut queue);
        while let Some(die) = queue.pop_front() {
            for col in 0..self.cols {
                let d = self.entry(die, col);
                if d == UNDEF {
                    continue;
                }
                // Remove the mirrored entry d --col^-1--> die.
                if self.entry(d, Self::inv_col(col)) == die {
                    self.set(d, Self::inv_col(col), UNDEF);
                }
                self.set(die, col, UNDEF);
                let keep = self.rep(die);
                let dr = self.rep(d);
                let cur = self.entry(keep, col);
                if cur != UNDEF {
                    let cr = self.rep(cur);
                    if cr != dr {
                        self.merge_into_queue(cr, dr, &mut queue);
                    }
                }
                let keep = self.rep(keep);
                let dr = self.rep(dr);
                let mir = self.entry(dr, Self::inv_col(col));
                if mir != UNDEF {
                    let mr = self.rep(mir);
                    if mr != keep {
                        self.merge_into_queue(mr, keep, &mut queue);
                    }
                }
                let keep = self.rep(keep);
                let dr = self.rep(dr);
                self.set(keep, col, dr);
                self.set(dr, Self::inv_col(col), keep);
                self.dedns.push((keep, col));
            }
        }
    }

    /// Scans relator `w` at coset `c`; fills new cosets when `fill`.
    /// Returns false on overflow.
    fn scan(&mut self, c: u32, w: &[i32], fill: bool) -> bool {
        let c = self.rep(c);
        let mut i = 0usize;
        let mut j = w.len();
        let mut f = c;
        let mut b = c;
        loop {
            while i < j {
                let next = self.entry(f, self.col_of(w[i]));
                if next == UNDEF {
                    break;
                }
                f = self.rep(next);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b);
                }
                return true;
            }
            while j > i {
                let prev = self.entry(b, self.col_of(-w[j - 1]));
                if prev == UNDEF {
                    break;
                }
                b = self.rep(prev);
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b);
                }
                return true;
            }
            if j == i + 1 {
                // Deduction closes the gap.
                self.deduce(f, self.col_of(w[i]), b);
                return true;
            }
            if !fill {
                return true;
            }
            let Some(n) = self.new_coset() else {
                return false;
            };
            self.deduce(f, self.col_of(w[i]), n);
            // continue scanning forward through the new coset
        }
    }

    fn compress(&mut self) -> Vec<u32> {
        // Maps old live rows to packed indices.
        let mut map = vec![UNDEF; self.rows()];
        let mut next = 0u32;
        for c in 0..self.rows() as u32 {
            if self.is_alive(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut new_table = vec![UNDEF; next as usize * self.cols];
        for c in 0..self.rows() as u32 {
            if !self.is_alive(c) {
                continue;
            }
            let nc = map[c as usize];
            for col in 0..self.cols {
                let d = self.entry(c, col);
                if d != UNDEF {
                    let dr = self.rep(d);
                    new_table[nc as usize * self.cols + col] = map[dr as usize];
                }
            }
        }
        self.table = new_table;
        self.p = (0..next).collect();
        self.live = next as usize;
        self.dedns.clear();
        map
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `p`.
pub fn coset_enumerate(
    p: &Presentation,
    subgroup: &[Word],
    opts: TcOptions,
) -> Result<CosetTable, CosetError> {
    let relators: Vec<Vec<i32>> = p
        .relator_words()
        .map(|w| w.letters().to_vec())
        .filter(|w| !w.is_empty())
        .collect();
    let mut e = Enumerator::new(p.gens.max(1), opts.limit);

    for h in subgroup {
        if !e.scan(0, h.letters(), true) {
            return Err(CosetError::Overflow(opts.limit));
        }
    }

    let mut passes = 0usize;
    loop {
        match opts.strategy {
            Strategy::Hlt => hlt_loop(&mut e, &relators, opts.limit)?,
            Strategy::Felsch => felsch_loop(&mut e, &relators, opts.limit)?,
        }
        e.compress();
        // Coincidence processing can punch holes in rows handled earlier;
        // rerun until the compressed table is complete.
        if e.table.iter().all(|&v| v != UNDEF) {
            break;
        }
        passes += 1;
        if std::env::var_os("SEXTIC_TC_DEBUG").is_some() {
            eprintln!("pass {}: live {} rows {}", passes, e.live, e.rows());
        }
    }
    let index = e.live;
    let table = CosetTable {
        gens: p.gens.max(1),
        table: e.table,
        index,
    };
    table.validate(p, subgroup)?;
    Ok(table)
}

fn hlt_loop(e: &mut Enumerator, relators: &[Vec<i32>], limit: usize) -> Result<(), CosetError> {
    let mut c: u32 = 0;
    let mut lookahead_done = false;
    loop {
        while (c as usize) < e.rows() && !e.is_alive(c) {
            c += 1;
        }
        if c as usize >= e.rows() {
            return Ok(());
        }
        let mut overflowed = false;
        for r in relators {
            if !e.is_alive(c) {
                break;
            }
            if !e.scan(c, r, true) {
                overflowed = true;
                break;
            }
        }
        if !overflowed && e.is_alive(c) {
            for col in 0..e.cols {
                if e.entry(c, col) == UNDEF {
                    match e.new_coset() {
                        Some(n) => e.deduce(c, col, n),
                        None => {
                            overflowed = true;
                            break;
                        }
                    }
                }
            }
        }
        if overflowed {
            if lookahead_done {
                return Err(CosetError::Overflow(limit));
            }
            // Lookahead: one full non-filling pass to surface coincidences,
            // then compress and retry.
            for d in 0..e.rows() as u32 {
                if !e.is_alive(d) {
                    continue;
                }
                for r in relators {
                    if !e.is_alive(d) {
                        break;
                    }
                    e.scan(d, r, false);
                }
            }
            let before = e.rows();
            let map = e.compress();
            // resume from the packed image of the last surviving coset
            // at or before c
            c = map
                .iter()
                .take(c as usize)
                .filter(|&&m| m != UNDEF)
                .map(|&m| m + 1)
                .next_back()
                .unwrap_or(0);
            if e.rows() == before {
                lookahead_done = true;
            }
            continue;
        }
        lookahead_done = false;
        c += 1;
    }
}

fn felsch_loop(e: &mut Enumerator, relators: &[Vec<i32>], limit: usize) -> Result<(), CosetError> {
    // Cyclic shifts of every relator and its inverse, grouped by leading
    // letter column, for deduction processing.
    let mut shifts: Vec<Vec<Vec<i32>>> = vec![Vec::new(); e.cols];
    for r in relators {
        for base in [r.clone(), r.iter().rev().map(|&l| -l).collect::<Vec<_>>()] {
            for k in 0..base.len() {
                let mut rot: Vec<i32> = base[k..].to_vec();
                rot.extend_from_slice(&base[..k]);
                let col = e.col_of(rot[0]);
                shifts[col].push(rot);
            }
        }
    }
    for bucket in &mut shifts {
        bucket.sort();
        bucket.dedup();
    }

    loop {
        // Drain deductions.
        while let Some((c, col)) = e.dedns.pop() {
            if !e.is_alive(c) && e.rep(c) == c {
                continue;
            }
            let c = e.rep(c);
            for rot in &shifts[col] {
                if !e.scan(c, rot, false) {
                    return Err(CosetError::Overflow(limit));
                }
                if !e.is_alive(c) {
                    break;
                }
            }
        }
        // Find the first hole.
        let mut hole: Option<(u32, usize)> = None;
        'outer: for c in 0..e.rows() as u32 {
            if !e.is_alive(c) {
                continue;
            }
            for col in 0..e.cols {
                if e.entry(c, col) == UNDEF {
                    hole = Some((c, col));
                    break 'outer;
                }
            }
        }
        let Some((c, col)) = hole else {
            // No holes: one full scan pass to be sure every relator closes.
            let before = e.live;
            for c in 0..e.rows() as u32 {
                if !e.is_alive(c) {
                    continue;
                }
                for r in relators {
                    if !e.is_alive(c) {
                        break;
                    }
                    e.scan(c, r, false);
                }
            }
            if e.live == before && e.dedns.is_empty() {
                return Ok(());
            }
            continue;
        };
        let Some(n) = e.new_coset() else {
            return Err(CosetError::Overflow(limit));
        };
        e.deduce(c, col, n);
    }
}

/// The coset table of the kernel of the map `G -> Z/n` sending generator
/// `i` to `images[i] mod n`, built directly from the homomorphism and
/// validated by a full relator scan.
pub fn cyclic_kernel_table(
    p: &Presentation,
    n: u64,
    images: &[i64],
) -> Result<CosetTable, CosetError> {
    assert_eq!(images.len(), p.gens);
    let n = n as usize;
    let gens = p.gens;
    let mut table = vec![UNDEF; n * 2 * gens];
    for c in 0..n {
        for g in 0..gens {
            let fwd = (c as i64 + images[g]).rem_euclid(n as i64) as usize;
            let bwd = (c as i64 - images[g]).rem_euclid(n as i64) as usize;
            table[c * 2 * gens + 2 * g] = fwd as u32;
            table[c * 2 * gens + 2 * g + 1] = bwd as u32;
        }
    }
    let t = CosetTable {
        gens,
        table,
        index: n,
    };
    t.validate(p, &[])?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::super::word::{alpha, braid_relator, Word};
    use super::*;
    use crate::fpgroup::presentation::Presentation;

    fn order(p: &Presentation) -> usize {
        coset_enumerate(p, &[], TcOptions::default()).unwrap().index
    }

    #[test]
    fn cyclic_six() {
        let p = Presentation::plain(1, vec![Word::from_letters([1; 6])]);
        assert_eq!(order(&p), 6);
        let felsch = coset_enumerate(
            &p,
            &[],
            TcOptions {
                strategy: Strategy::Felsch,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(felsch.index, 6);
    }

    #[test]
    fn symmetric_group_s3() {
        // <a,b | a^2, b^2, (ab)^3>
        let p = Presentation::plain(
            2,
            vec![
                Word::from_letters([1, 1]),
                Word::from_letters([2, 2]),
                Word::from_letters([1, 2, 1, 2, 1, 2]),
            ],
        );
        assert_eq!(order(&p), 6);
    }

    #[test]
    fn quaternion_group() {
        // <a,b | a^4, a^2 b^-2, b^-1 a b a>
        let p = Presentation::plain(
            1 + 1,
            vec![
                Word::from_letters([1, 1, 1, 1]),
                Word::from_letters([1, 1, -2, -2]),
                Word::from_letters([-2, 1, 2, 1]),
            ],
        );
        assert_eq!(order(&p), 8);
    }

    #[test]
    fn reduced_braid_group_mod_sigma1_5th() {
        // B3 / (s1 s2)^3 with s1^5 added has order 60 (A5).
        let braid = braid_relator(&alpha(1), &alpha(2), 3);
        let p = Presentation::plain(
            2,
            vec![
                braid,
                Word::from_letters([1, 2]).pow(3),
                Word::gen(1).pow(5),
            ],
        );
        assert_eq!(order(&p), 60);
    }

    #[test]
    fn subgroup_index() {
        // index of <a> in S3 above is 3
        let p = Presentation::plain(
            2,
            vec![
                Word::from_letters([1, 1]),
                Word::from_letters([2, 2]),
                Word::from_letters([1, 2, 1, 2, 1, 2]),
            ],
        );
        let t = coset_enumerate(&p, &[Word::gen(1)], TcOptions::default()).unwrap();
        assert_eq!(t.index, 3);
    }

    #[test]
    fn strategies_agree() {
        let braid = braid_relator(&alpha(1), &alpha(2), 3);
        let p = Presentation::plain(2, vec![braid, Word::gen(1).pow(4)]);
        // B3 with a^4: order 96
        let h = coset_enumerate(&p, &[], TcOptions::default())
            .unwrap()
            .index;
        let f = coset_enumerate(
            &p,
            &[],
            TcOptions {
                strategy: Strategy::Felsch,
                ..Default::default()
            },
        )
        .unwrap()
        .index;
        assert_eq!(h, f);
        assert_eq!(h, 96);
    }

    #[test]
    fn overflow_is_reported() {
        // Z = <a | > cannot complete.
        let p = Presentation::plain(1, vec![]);
        let r = coset_enumerate(
            &p,
            &[],
            TcOptions {
                limit: 100,
                ..Default::default()
            },
        );
        assert!(matches!(r, Err(CosetError::Overflow(100))));
    }

    #[test]
    fn kernel_table_for_cyclic_quotient() {
        let p = Presentation::plain(3, vec![crate::vankampen::relation_at_infinity()]);
        let t = cyclic_kernel_table(&p, 6, &[1, 1, 1]).unwrap();
        assert_eq!(t.index, 6);
        assert!(t.is_central(&Word::gen(1).pow(6)));
    }

    #[test]
    fn central_word_detected() {
        let p = Presentation::plain(
            2,
            vec![
                Word::from_letters([1, 1]),
                Word::from_letters([2, 2]),
                Word::from_letters([1, 2, 1, 2, 1, 2]),
            ],
        );
        let t = coset_enumerate(&p, &[], TcOptions::default()).unwrap();
        // In S3 nothing nontrivial is central; the identity word is.
        assert!(t.is_central(&Word::identity()));
        assert!(!t.is_central(&Word::gen(1)));
    }
}
