//! Partitions, Maya words, n-cores, and enumeration of n-ribbon strips and
//! (super) ribbon tableaux with their spin statistics.
//!
//! Strips are enumerated on the abacus: beta numbers on `n` runners, one
//! ribbon removal = one bead step down its runner. The spin of a strip is
//! accumulated by peeling single ribbons in a canonical order (largest bead
//! position first for horizontal strips, smallest first for vertical ones),
//! counting the occupied positions a bead jumps over. This convention is
//! cross-checked against the Heisenberg-operator construction in the
//! `heisenberg` tests rather than trusted.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols {
            out.push(self.0.iter().filter(|&&p| p as usize >= c).count() as u32);
        }
        Partition::new(out)
    }

    /// Frobenius coordinates `(a_i, b_i)` with `a_i = lambda_i - i`,
    /// `b_i = lambda'_i - i`, for `i` up to the diagonal length.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 1..=self.len() {
            if self.part(i - 1) as usize >= i {
                arms.push(self.part(i - 1) - i as u32);
                legs.push(conj.part(i - 1) - i as u32);
            } else {
                break;
            }
        }
        (arms, legs)
    }

    /// Beta numbers `lambda_j + L - j` for `j = 1..L`; strictly decreasing.
    pub fn betas(&self, slots: usize) -> Vec<i64> {
        assert!(slots >= self.len());
        (0..slots)
            .map(|j| self.part(j) as i64 + (slots - 1 - j) as i64)
            .collect()
    }

    pub fn from_betas(mut betas: Vec<i64>) -> Partition {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let slots = betas.len();
        let parts = betas
            .iter()
            .enumerate()
            .map(|(j, &b)| {
                let p = b - (slots - 1 - j) as i64;
                assert!(p >= 0, "invalid beta set");
                p as u32
            })
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// All partitions of exactly `size`.
pub fn partitions_of(size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        let mut p = remaining.min(max_part);
        while p >= 1 {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(size, size.max(1), &mut current, &mut out);
    out
}

/// All partitions of size at most `max_size`.
pub fn partitions_up_to(max_size: u64) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// All sub-partitions `mu` of `lambda` (containment order).
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..lambda.len() {
        // extend row by row
        let mut next = Vec::new();
        for pref in &frontier {
            let row = pref.len();
            let hi = lambda.part(row);
            let cap = if row == 0 { hi } else { pref[row - 1].min(hi) };
            for p in 1..=cap {
                let mut e = pref.clone();
                e.push(p);
                out.push(Partition::new(e.clone()));
                next.push(e);
            }
        }
        frontier = next;
    }
    out.sort();
    out.dedup();
    out
}

// -- Maya words -----------------------------------------------------------

/// Normal-ordered semi-infinite wedge index: a partition at a charge. The
/// entry at position `p <= charge` is `p + lambda_{charge - p + 1}` and
/// equals `p` once the partition runs out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MayaWord {
    pub charge: i64,
    pub shape: Partition,
}

impl MayaWord {
    pub fn new(shape: Partition, charge: i64) -> Self {
        MayaWord { charge, shape }
    }

    pub fn vacuum(charge: i64) -> Self {
        MayaWord {
            charge,
            shape: Partition::empty(),
        }
    }

    /// Entry at position `p` (positions run `charge, charge-1, ...`).
    pub fn entry(&self, p: i64) -> i64 {
        assert!(p <= self.charge);
        let k = (self.charge - p) as usize; // 0-based part index
        p + self.shape.part(k) as i64
    }

    /// Largest entry.
    pub fn max_entry(&self) -> i64 {
        self.entry(self.charge)
    }

    /// Position below which every entry equals its position.
    pub fn tail_start(&self) -> i64 {
        self.charge - self.shape.len() as i64
    }

    /// Whether `c` occurs as an entry.
    pub fn contains_entry(&self, c: i64) -> bool {
        if c <= self.tail_start() {
            return true;
        }
        if c > self.max_entry() {
            return false;
        }
        let mut p = self.charge;
        while p > self.tail_start() {
            let e = self.entry(p);
            if e == c {
                return true;
            }
            if e < c {
                return false;
            }
            p -= 1;
        }
        false
    }

    /// Entries at positions `charge down to floor` inclusive.
    pub fn entries_down_to(&self, floor: i64) -> Vec<i64> {
        (floor..=self.charge).rev().map(|p| self.entry(p)).collect()
    }

    /// `deg = sum (i_r - r) = |shape|`.
    pub fn degree(&self) -> u64 {
        self.shape.size()
    }
}

pub fn maya_from_partition(shape: &Partition, charge: i64) -> MayaWord {
    MayaWord::new(shape.clone(), charge)
}

/// Recover the partition from a strictly decreasing entry list that is
/// cofinal with the vacuum tail.
pub fn partition_from_entries(charge: i64, entries: &[i64]) -> Partition {
    let parts: Vec<u32> = entries
        .iter()
        .enumerate()
        .map(|(k, &e)| {
            let p = charge - k as i64;
            let part = e - p;
            assert!(part >= 0, "entries do not majorize the vacuum tail");
            part as u32
        })
        .collect();
    Partition::new(parts)
}

// -- abacus ---------------------------------------------------------------

/// Bead rows per runner, in increasing order, for `slots` beta numbers.
fn runner_rows(shape: &Partition, n: u32, slots: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![Vec::new(); n as usize];
    for b in shape.betas(slots) {
        let c = (b % n as i64) as usize;
        rows[c].push(b / n as i64);
    }
    for r in &mut rows {
        r.sort_unstable();
    }
    rows
}

fn shape_from_runner_rows(rows: &[Vec<i64>], n: u32) -> Partition {
    let mut betas = Vec::new();
    for (c, rs) in rows.iter().enumerate() {
        for &r in rs {
            betas.push(c as i64 + n as i64 * r);
        }
    }
    Partition::from_betas(betas)
}

fn slots_for(shape: &Partition, n: u32) -> usize {
    let l = shape.len().max(1);
    l.div_ceil(n as usize) * n as usize
}

/// The n-core: push all beads down on each runner.
pub fn n_core(shape: &Partition, n: u32) -> Partition {
    assert!(n >= 1);
    let slots = slots_for(shape, n);
    let rows = runner_rows(shape, n, slots);
    let pushed: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| (0..r.len() as i64).collect())
        .collect();
    shape_from_runner_rows(&pushed, n)
}

/// The n-quotient with respect to `slots = 0 mod n` beta numbers.
pub fn n_quotient(shape: &Partition, n: u32) -> Vec<Partition> {
    let slots = slots_for(shape, n);
    runner_rows(shape, n, slots)
        .iter()
        .map(|rows| {
            let m = rows.len();
            let parts: Vec<u32> = (0..m)
                .rev()
                .map(|i| (rows[i] - i as i64) as u32)
                .collect();
            Partition::new(parts)
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// A horizontal or vertical n-ribbon strip `outer/inner` with its spin.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RibbonStrip {
    pub outer: Partition,
    pub inner: Partition,
    pub ribbons: u32,
    pub spin: u32,
    pub kind: StripKind,
}

/// Spin of the strip given by the two bead configurations: peel one ribbon
/// (one bead step) at a time, counting occupied positions strictly between
/// the start and end of each step. Horizontal strips peel the largest
/// movable bead first; vertical strips the smallest.
fn strip_spin(n: u32, outer_rows: &[Vec<i64>], inner_rows: &[Vec<i64>], kind: StripKind) -> u32 {
    let nn = n as i64;
    // current rows per runner, descending; targets descending.
    let mut cur: Vec<Vec<i64>> = outer_rows
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    let tgt: Vec<Vec<i64>> = inner_rows
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    let mut occupied: BTreeSet<i64> = BTreeSet::new();
    for (c, rows) in cur.iter().enumerate() {
        for &r in rows {
            occupied.insert(c as i64 + nn * r);
        }
    }
    let mut spin = 0u32;
    loop {
        // candidate single steps: bead i on runner c with cur > tgt and the
        // row below free on the same runner
        let mut best: Option<(i64, usize, usize)> = None; // (position, runner, index)
        for (c, rows) in cur.iter().enumerate() {
            for (i, &row) in rows.iter().enumerate() {
                if row > tgt[c][i] && !rows.contains(&(row - 1)) {
                    let pos = c as i64 + nn * row;
                    let better = match best {
                        None => true,
                        Some((bp, _, _)) => match kind {
                            StripKind::Horizontal => pos > bp,
                            StripKind::Vertical => pos < bp,
                        },
                    };
                    if better {
                        best = Some((pos, c, i));
                    }
                }
            }
        }
        let Some((pos, c, i)) = best else {
            break;
        };
        let crossings = occupied.range(pos - nn + 1..pos).count();
        spin += crossings as u32;
        occupied.remove(&pos);
        occupied.insert(pos - nn);
        cur[c][i] -= 1;
    }
    spin
}

/// All `inner` with `outer/inner` a horizontal (resp. vertical) n-ribbon
/// strip of exactly `k` ribbons, with spins, ordered by `inner`.
pub fn ribbon_strips(outer: &Partition, k: u32, n: u32, kind: StripKind) -> Vec<RibbonStrip> {
    assert!(n >= 1);
    if k == 0 {
        return vec![RibbonStrip {
            outer: outer.clone(),
            inner: outer.clone(),
            ribbons: 0,
            spin: 0,
            kind,
        }];
    }
    if (outer.size() as i64) < (n as i64) * k as i64 {
        return Vec::new();
    }
    let slots = slots_for(outer, n);
    let outer_rows = runner_rows(outer, n, slots);
    // quotient partition per runner
    let quots: Vec<Partition> = outer_rows
        .iter()
        .map(|rows| {
            let m = rows.len();
            Partition::new(
                (0..m)
                    .rev()
                    .map(|i| (rows[i] - i as i64) as u32)
                    .collect(),
            )
        })
        .collect();
    // choose box strips in the quotients, one per runner, totalling k boxes
    let mut per_runner: Vec<Vec<Partition>> = Vec::new();
    for q in &quots {
        let mut opts = Vec::new();
        for m in subpartitions(q) {
            let ok = match kind {
                StripKind::Horizontal => {
                    // at most one box per column: q_i >= m_i >= q_{i+1}
                    (0..q.len()).all(|i| m.part(i) <= q.part(i) && m.part(i) >= q.part(i + 1))
                }
                StripKind::Vertical => {
                    // at most one box per row
                    (0..q.len()).all(|i| m.part(i) <= q.part(i) && q.part(i) - m.part(i) <= 1)
                }
            };
            if ok {
                opts.push(m);
            }
        }
        per_runner.push(opts);
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = vec![0; per_runner.len()];
    'outer_loop: loop {
        let removed: u64 = choice
            .iter()
            .enumerate()
            .map(|(c, &i)| quots[c].size() - per_runner[c][i].size())
            .sum();
        if removed == k as u64 {
            // rebuild the inner bead rows
            let inner_rows: Vec<Vec<i64>> = choice
                .iter()
                .enumerate()
                .map(|(c, &i)| {
                    let m = &per_runner[c][i];
                    let cnt = outer_rows[c].len();
                    let mut rows: Vec<i64> = (0..cnt)
                        .map(|j| m.part(cnt - 1 - j) as i64 + j as i64)
                        .collect();
                    rows.sort_unstable();
                    rows
                })
                .collect();
            let inner = shape_from_runner_rows(&inner_rows, n);
            let spin = strip_spin(n, &outer_rows, &inner_rows, kind);
            out.push(RibbonStrip {
                outer: outer.clone(),
                inner,
                ribbons: k,
                spin,
                kind,
            });
        }
        // advance the mixed-radix counter
        for c in 0..choice.len() {
            choice[c] += 1;
            if choice[c] < per_runner[c].len() {
                continue 'outer_loop;
            }
            choice[c] = 0;
        }
        break;
    }
    out.sort_by(|a, b| a.inner.cmp(&b.inner));
    out
}

pub fn horizontal_strips(outer: &Partition, k: u32, n: u32) -> Vec<RibbonStrip> {
    ribbon_strips(outer, k, n, StripKind::Horizontal)
}

pub fn vertical_strips(outer: &Partition, k: u32, n: u32) -> Vec<RibbonStrip> {
    ribbon_strips(outer, k, n, StripKind::Vertical)
}

/// All n-ribbon tableaux of shape `outer/inner` with `letters` letters:
/// chains of horizontal strips. Returns `(weight vector, total spin)`.
pub fn ribbon_tableaux(
    outer: &Partition,
    inner: &Partition,
    letters: u32,
    n: u32,
) -> Vec<(Vec<u32>, u32)> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut out = Vec::new();
    // Peel letters from the largest down: the outermost strip carries the
    // largest letter.
    fn rec(
        current: &Partition,
        inner: &Partition,
        letter: u32,
        n: u32,
        weight_rev: &mut Vec<u32>,
        spin: u32,
        out: &mut Vec<(Vec<u32>, u32)>,
    ) {
        if letter == 0 {
            if current == inner {
                let mut w = weight_rev.clone();
                w.reverse();
                out.push((w, spin));
            }
            return;
        }
        let excess = current.size() - inner.size();
        if excess % n as u64 != 0 {
            return;
        }
        for k in 0..=(excess / n as u64) as u32 {
            for strip in horizontal_strips(current, k, n) {
                if strip.inner.contains(inner) {
                    weight_rev.push(k);
                    rec(&strip.inner, inner, letter - 1, n, weight_rev, spin + strip.spin, out);
                    weight_rev.pop();
                }
            }
        }
    }
    rec(outer, inner, letters, n, &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}

/// A super ribbon tableau: an alternating chain of horizontal and vertical
/// strips over the doubled alphabet `1 < 1' < 2 < 2' < ... < r'`.
#[derive(Clone, Debug)]
pub struct SuperRibbonTableau {
    /// `2r+1` partitions: `outer = chain[0] >= chain[1] >= ... >= chain[2r] = inner`,
    /// where `chain[2i]/chain[2i+1]` is the horizontal strip of letter `i+1`
    /// and `chain[2i+1]/chain[2i+2]` the vertical strip of letter `(i+1)'`.
    pub chain: Vec<Partition>,
    pub weight: Vec<u32>,
    pub weight_prime: Vec<u32>,
    pub spin: u32,
}

/// All super ribbon tableaux of shape `outer/inner` with `letters` primed
/// and unprimed letters.
pub fn super_ribbon_tableaux(
    outer: &Partition,
    inner: &Partition,
    letters: u32,
    n: u32,
) -> Vec<SuperRibbonTableau> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut out = Vec::new();
    struct State {
        chain_rev: Vec<Partition>,
        weight_rev: Vec<u32>,
        weight_prime_rev: Vec<u32>,
    }
    // The chain runs outer = lambda_1 down to inner; build it by peeling the
    // letter r strip pair first (it is outermost when acting on kets).
    fn rec(
        st: &mut State,
        current: &Partition,
        inner: &Partition,
        letter: u32,
        n: u32,
        spin: u32,
        out: &mut Vec<SuperRibbonTableau>,
    ) {
        if letter == 0 {
            if current == inner {
                let mut chain = st.chain_rev.clone();
                chain.push(current.clone());
                chain.reverse();
                let mut weight = st.weight_rev.clone();
                weight.reverse();
                let mut weight_prime = st.weight_prime_rev.clone();
                weight_prime.reverse();
                out.push(SuperRibbonTableau {
                    chain,
                    weight,
                    weight_prime,
                    spin,
                });
            }
            return;
        }
        let excess = current.size() - inner.size();
        if excess % n as u64 != 0 {
            return;
        }
        let max = (excess / n as u64) as u32;
        for kh in 0..=max {
            for h in horizontal_strips(current, kh, n) {
                if !h.inner.contains(inner) {
                    continue;
                }
                let rem = (h.inner.size() - inner.size()) / n as u64;
                for kv in 0..=rem as u32 {
                    for v in vertical_strips(&h.inner, kv, n) {
                        if !v.inner.contains(inner) {
                            continue;
                        }
                        st.chain_rev.push(current.clone());
                        st.chain_rev.push(h.inner.clone());
                        st.weight_rev.push(kh);
                        st.weight_prime_rev.push(kv);
                        rec(
                            st,
                            &v.inner,
                            inner,
                            letter - 1,
                            n,
                            spin + h.spin + v.spin,
                            out,
                        );
                        st.weight_rev.pop();
                        st.weight_prime_rev.pop();
                        st.chain_rev.pop();
                        st.chain_rev.pop();
                    }
                }
            }
        }
    }
    let mut st = State {
        chain_rev: Vec::new(),
        weight_rev: Vec::new(),
        weight_prime_rev: Vec::new(),
    };
    rec(&mut st, outer, inner, letters, n, 0, &mut out);
    out
}
