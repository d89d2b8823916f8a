//! Gamma and Delta metaplectic ice: Boltzmann weights, one-row scans on
//! infinite grids, the (n+1)-column hat systems, and finite-grid partition
//! functions.
//!
//! Vertex configurations are read (left, top, right, bottom), with decorated
//! spins (sign, charge mod n) on the horizontal edges. For Delta ice the `+`
//! edges carry charge 0 and the charge increments left to right across every
//! `-` edge; a path opens at a (top -, bottom +) column and must close at a
//! (top +, bottom -) column with charge 0 mod n. Gamma ice mirrors this with
//! the roles of the signs exchanged and `z` replaced by `z^{-1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::partition::{MayaWord, Partition};
use crate::ring::{RingCtx, RingElem};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Flavor {
    Gamma,
    Delta,
}

/// A decorated spin `+^a` or `-^a` with charge modulo `n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DecoratedSpin {
    pub minus: bool,
    pub charge: u32,
}

impl DecoratedSpin {
    pub fn plus(charge: u32) -> Self {
        DecoratedSpin {
            minus: false,
            charge,
        }
    }

    pub fn minus(charge: u32) -> Self {
        DecoratedSpin {
            minus: true,
            charge,
        }
    }

    /// The stable spin far out in a row: `+^0` for Delta, `-^0` for Gamma.
    pub fn stable(flavor: Flavor) -> Self {
        match flavor {
            Flavor::Delta => DecoratedSpin::plus(0),
            Flavor::Gamma => DecoratedSpin::minus(0),
        }
    }

    /// Whether this decorated spin is allowed at all for the flavor: Delta
    /// restricts `+` to charge 0, Gamma restricts `-` to charge 0.
    pub fn allowed(&self, flavor: Flavor) -> bool {
        match flavor {
            Flavor::Delta => self.minus || self.charge == 0,
            Flavor::Gamma => !self.minus || self.charge == 0,
        }
    }

    pub fn all(flavor: Flavor, n: u32) -> Vec<DecoratedSpin> {
        let mut out = Vec::new();
        for charge in 0..n {
            for minus in [false, true] {
                let s = DecoratedSpin { minus, charge };
                if s.allowed(flavor) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl std::fmt::Display for DecoratedSpin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}^{}", if self.minus { '-' } else { '+' }, self.charge)
    }
}

/// A full vertex configuration with its row parameter tag.
#[derive(Clone, Debug)]
pub struct VertexConfig {
    pub flavor: Flavor,
    pub left: DecoratedSpin,
    pub top_minus: bool,
    pub right: DecoratedSpin,
    pub bottom_minus: bool,
    pub z_var: usize,
}

/// Forced transition across one column: given the left decorated spin and
/// the two vertical signs, at most one right decorated spin has nonzero
/// weight. Returns that spin and the vertex weight.
pub fn transition(
    ctx: RingCtx,
    flavor: Flavor,
    z_var: usize,
    left: DecoratedSpin,
    top_minus: bool,
    bottom_minus: bool,
) -> Option<(RingElem, DecoratedSpin)> {
    let n = ctx.n;
    if !left.allowed(flavor) {
        return None;
    }
    let z = |e: i32| RingElem::z_pow(ctx, z_var, e);
    match flavor {
        Flavor::Delta => {
            if !left.minus {
                match (top_minus, bottom_minus) {
                    (false, false) => Some((RingElem::one(ctx), DecoratedSpin::plus(0))),
                    (true, true) => Some((RingElem::one(ctx), DecoratedSpin::plus(0))),
                    (true, false) => Some((RingElem::one(ctx), DecoratedSpin::minus(1 % n))),
                    (false, true) => None,
                }
            } else {
                let a = left.charge;
                let next = DecoratedSpin::minus((a + 1) % n);
                match (top_minus, bottom_minus) {
                    (true, true) => {
                        Some((&RingElem::g_symbol(ctx, a as i64) * &z(1), next))
                    }
                    (false, false) => Some((z(1), next)),
                    (false, true) => {
                        if a % n == 0 {
                            Some((
                                &RingElem::one_minus_v(ctx) * &z(1),
                                DecoratedSpin::plus(0),
                            ))
                        } else {
                            None
                        }
                    }
                    (true, false) => None,
                }
            }
        }
        Flavor::Gamma => {
            if left.minus {
                match (top_minus, bottom_minus) {
                    (true, true) => Some((RingElem::one(ctx), DecoratedSpin::minus(0))),
                    (false, false) => Some((RingElem::one(ctx), DecoratedSpin::minus(0))),
                    (false, true) => {
                        Some((RingElem::one_minus_v(ctx), DecoratedSpin::plus(0)))
                    }
                    (true, false) => None,
                }
            } else {
                let a = left.charge;
                let next = DecoratedSpin::plus((a + n - 1) % n);
                match (top_minus, bottom_minus) {
                    (false, false) => Some((z(-1), next)),
                    (true, true) => Some((
                        &z(-1) * &RingElem::g_symbol(ctx, next.charge as i64),
                        next,
                    )),
                    (true, false) => {
                        if a % n == 1 % n {
                            Some((z(-1), DecoratedSpin::minus(0)))
                        } else {
                            None
                        }
                    }
                    (false, true) => None,
                }
            }
        }
    }
}

/// Exact Boltzmann-weight lookup: zero for configurations not in the table.
pub fn vertex_weight(ctx: RingCtx, cfg: &VertexConfig) -> RingElem {
    match transition(
        ctx,
        cfg.flavor,
        cfg.z_var,
        cfg.left,
        cfg.top_minus,
        cfg.bottom_minus,
    ) {
        Some((w, right)) if right == cfg.right && cfg.right.allowed(cfg.flavor) => w,
        _ => RingElem::zero(ctx),
    }
}

/// One-row element on the infinite grid: the Boltzmann weight of the unique
/// admissible state with `top` on the upper boundary and `bottom` on the
/// lower one, or zero. For Delta this is `<bottom| T_Delta(z) |top>`, for
/// Gamma `<bottom| T_Gamma(z) |top>`.
pub fn row_element(
    ctx: RingCtx,
    flavor: Flavor,
    z_var: usize,
    top: &MayaWord,
    bottom: &MayaWord,
) -> RingElem {
    assert_eq!(top.charge, bottom.charge, "boundary charges must agree");
    let n = ctx.n as i64;
    let c_hi = top.max_entry().max(bottom.max_entry()) + 1;
    let c_lo = top.tail_start().min(bottom.tail_start()) - n;
    let stable = DecoratedSpin::stable(flavor);
    let mut state = stable;
    let mut weight = RingElem::one(ctx);
    let mut col = c_hi;
    while col >= c_lo - n {
        let t = top.contains_entry(col);
        let b = bottom.contains_entry(col);
        match transition(ctx, flavor, z_var, state, t, b) {
            None => return RingElem::zero(ctx),
            Some((w, next)) => {
                weight = &weight * &w;
                state = next;
            }
        }
        // stabilization: beyond the joint tail the column weight must be 1
        if col < c_lo {
            assert!(
                state == stable,
                "row scan failed to stabilize below the tail"
            );
        }
        col -= 1;
    }
    if state != stable {
        return RingElem::zero(ctx);
    }
    weight
}

/// `<eta| T_Delta(z) |xi>`.
pub fn delta_row_element(
    ctx: RingCtx,
    z_var: usize,
    xi: &MayaWord,
    eta: &MayaWord,
) -> RingElem {
    row_element(ctx, Flavor::Delta, z_var, xi, eta)
}

/// `<xi| T_Gamma(z) |eta>` by the direct Gamma scan (`eta` on top).
pub fn gamma_row_element(
    ctx: RingCtx,
    z_var: usize,
    xi: &MayaWord,
    eta: &MayaWord,
) -> RingElem {
    row_element(ctx, Flavor::Gamma, z_var, eta, xi)
}

/// `<xi| T_Gamma(z) |eta>` through the adjoint of the Delta scan: conjugate
/// the Gauss symbols and substitute `z -> z^{-1}` in `<eta| T_Delta |xi>`.
pub fn gamma_row_element_via_adjoint(
    ctx: RingCtx,
    z_var: usize,
    xi: &MayaWord,
    eta: &MayaWord,
) -> RingElem {
    let delta = delta_row_element(ctx, z_var, xi, eta);
    delta
        .involute()
        .map_z_exponents(|i, e| if i == z_var { -e } else { e })
}

/// Partitions `mu` interleaving below `lam`: `lam_k >= mu_k >= lam_{k+1}-1`.
/// These are the only candidates for a nonzero one-row Delta element with
/// `lam` on top (resp. Gamma with `lam` on the bottom).
pub fn interleaved_below(lam: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let len = lam.len();
    let mut current: Vec<u32> = Vec::new();
    fn rec(lam: &Partition, row: usize, len: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == len {
            out.push(Partition::new(
                current.iter().copied().take_while(|&p| p > 0).collect(),
            ));
            return;
        }
        let hi = if row == 0 {
            lam.part(0)
        } else {
            lam.part(row).min(current[row - 1])
        };
        let lo = lam.part(row + 1).saturating_sub(1);
        // weakly decreasing is enforced by hi; zero parts may only be
        // followed by zero parts, which the take_while trims.
        let mut p = hi;
        loop {
            current.push(p);
            rec(lam, row + 1, len, current, out);
            current.pop();
            if p == lo {
                break;
            }
            p -= 1;
        }
    }
    rec(lam, 0, len, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// `<eta| T(z_1) ... T(z_r) |xi>` as a sum over intermediate Maya words.
pub fn multi_row_element(
    ctx: RingCtx,
    z_vars: &[usize],
    xi: &MayaWord,
    eta: &MayaWord,
    flavor: Flavor,
) -> RingElem {
    assert_eq!(xi.charge, eta.charge);
    let charge = xi.charge;
    match flavor {
        Flavor::Delta => {
            // rightmost factor acts first on the ket: row r is adjacent to xi
            let mut layer: BTreeMap<Partition, RingElem> =
                BTreeMap::from([(xi.shape.clone(), RingElem::one(ctx))]);
            for (step, &zv) in z_vars.iter().rev().enumerate() {
                let mut next: BTreeMap<Partition, RingElem> = BTreeMap::new();
                for (shape, coeff) in &layer {
                    let upper = MayaWord::new(shape.clone(), charge);
                    for mu in interleaved_below(shape) {
                        if step + 1 == z_vars.len() && mu != eta.shape {
                            continue;
                        }
                        let lower = MayaWord::new(mu.clone(), charge);
                        let w = delta_row_element(ctx, zv, &upper, &lower);
                        if w.is_zero() {
                            continue;
                        }
                        let c = next.entry(mu).or_insert_with(|| RingElem::zero(ctx));
                        *c += &(&w * coeff);
                    }
                }
                layer = next;
            }
            layer
                .remove(&eta.shape)
                .unwrap_or_else(|| RingElem::zero(ctx))
        }
        Flavor::Gamma => {
            // act on the bra: <eta| T_Gamma(z_1) first
            let mut layer: BTreeMap<Partition, RingElem> =
                BTreeMap::from([(eta.shape.clone(), RingElem::one(ctx))]);
            for (step, &zv) in z_vars.iter().enumerate() {
                let mut next: BTreeMap<Partition, RingElem> = BTreeMap::new();
                for (shape, coeff) in &layer {
                    let bra = MayaWord::new(shape.clone(), charge);
                    for kappa in interleaved_below(shape) {
                        if step + 1 == z_vars.len() && kappa != xi.shape {
                            continue;
                        }
                        let ket = MayaWord::new(kappa.clone(), charge);
                        let w = gamma_row_element(ctx, zv, &bra, &ket);
                        if w.is_zero() {
                            continue;
                        }
                        let c = next.entry(kappa).or_insert_with(|| RingElem::zero(ctx));
                        *c += &(&w * coeff);
                    }
                }
                layer = next;
            }
            layer
                .remove(&xi.shape)
                .unwrap_or_else(|| RingElem::zero(ctx))
        }
    }
}

/// The (n+1)-column hat system: columns `k, k-1, ..., k-n`, one row, left
/// boundary `+^0`. Returns the weight of the unique admissible state and
/// the forced right-edge decorated spin, or `None` if no state exists.
pub fn hat_transfer_element(
    ctx: RingCtx,
    k: i64,
    eps: &[bool],
    delta: &[bool],
    z_var: usize,
) -> Option<(RingElem, DecoratedSpin)> {
    let n = ctx.n as usize;
    assert_eq!(eps.len(), n + 1);
    assert_eq!(delta.len(), n + 1);
    let _ = k; // the columns are labelled k..k-n; weights do not depend on k
    let mut state = DecoratedSpin::plus(0);
    let mut weight = RingElem::one(ctx);
    for i in 0..=n {
        let (w, next) = transition(ctx, Flavor::Delta, z_var, state, eps[i], delta[i])?;
        weight = &weight * &w;
        state = next;
    }
    Some((weight, state))
}

/// A finite rectangular system. Geometric row 0 is the bottom row; for
/// Delta ice the row numbering of the model agrees with the geometric
/// numbering (rows count bottom-up), for Gamma ice callers reverse the
/// `z_vars` list instead of renumbering the grid.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiniteSystem {
    pub flavor: Flavor,
    pub rows: usize,
    pub z_vars: Vec<usize>,
    /// Columns run `col_hi, col_hi - 1, ..., col_lo` left to right.
    pub col_hi: i64,
    pub col_lo: i64,
    pub top_minus: Vec<i64>,
    pub bottom_minus: Vec<i64>,
    pub left: Vec<DecoratedSpin>,
    pub right: Vec<DecoratedSpin>,
}

impl FiniteSystem {
    fn top_has(&self, col: i64) -> bool {
        self.top_minus.contains(&col)
    }
    fn bottom_has(&self, col: i64) -> bool {
        self.bottom_minus.contains(&col)
    }
}

/// Partition function by column-by-column dynamic programming over the
/// vector of decorated spins on a vertical cut.
pub fn finite_partition_function(ctx: RingCtx, sys: &FiniteSystem) -> RingElem {
    assert_eq!(sys.z_vars.len(), sys.rows);
    assert_eq!(sys.left.len(), sys.rows);
    assert_eq!(sys.right.len(), sys.rows);
    let mut states: BTreeMap<Vec<DecoratedSpin>, RingElem> =
        BTreeMap::from([(sys.left.clone(), RingElem::one(ctx))]);
    let mut col = sys.col_hi;
    while col >= sys.col_lo {
        let mut next: BTreeMap<Vec<DecoratedSpin>, RingElem> = BTreeMap::new();
        let vb = sys.bottom_has(col);
        let vt = sys.top_has(col);
        for (state, coeff) in &states {
            // internal vertical edges between rows: verticals[i] sits above
            // geometric row i; verticals[rows] is the top boundary.
            let internal = sys.rows - 1;
            for mask in 0..(1usize << internal) {
                let vertical = |level: usize| -> bool {
                    if level == 0 {
                        vb
                    } else if level == sys.rows {
                        vt
                    } else {
                        mask >> (level - 1) & 1 == 1
                    }
                };
                let mut w = coeff.clone();
                let mut new_state = Vec::with_capacity(sys.rows);
                let mut dead = false;
                for row in 0..sys.rows {
                    match transition(
                        ctx,
                        sys.flavor,
                        sys.z_vars[row],
                        state[row],
                        vertical(row + 1),
                        vertical(row),
                    ) {
                        None => {
                            dead = true;
                            break;
                        }
                        Some((vw, right)) => {
                            w = &w * &vw;
                            new_state.push(right);
                        }
                    }
                }
                if dead {
                    continue;
                }
                let c = next
                    .entry(new_state)
                    .or_insert_with(|| RingElem::zero(ctx));
                *c += &w;
            }
        }
        states = next;
        col -= 1;
    }
    states
        .remove(&sys.right)
        .unwrap_or_else(|| RingElem::zero(ctx))
}

/// One admissible state of a finite system, for debugging dumps and for the
/// brute-force oracle: every edge listed explicitly.
#[derive(Clone, Debug, Serialize)]
pub struct StateDump {
    /// `(column, level)` pairs with a `-` vertical spin; level 0 is the
    /// bottom boundary.
    pub vertical_minus: Vec<(i64, usize)>,
    /// Horizontal edges `(column-left-of, row) -> spin`, including the
    /// boundaries (`column-left-of = col_hi + 1` for the left boundary).
    pub horizontals: Vec<(i64, usize, String)>,
    pub weight: RingElem,
}

/// Exhaustive depth-first enumeration of the admissible states using only
/// the raw table lookup `vertex_weight`. Independent of the DP path.
pub fn enumerate_states(ctx: RingCtx, sys: &FiniteSystem) -> Vec<StateDump> {
    let mut out = Vec::new();
    let cols: Vec<i64> = {
        let mut v = Vec::new();
        let mut c = sys.col_hi;
        while c >= sys.col_lo {
            v.push(c);
            c -= 1;
        }
        v
    };
    struct Frame {
        state: Vec<DecoratedSpin>,
        vertical_minus: Vec<(i64, usize)>,
        horizontals: Vec<(i64, usize, String)>,
        weight: RingElem,
    }
    let all_spins = DecoratedSpin::all(sys.flavor, ctx.n);
    let mut stack = vec![Frame {
        state: sys.left.clone(),
        vertical_minus: Vec::new(),
        horizontals: (0..sys.rows)
            .map(|r| (sys.col_hi + 1, r, sys.left[r].to_string()))
            .collect(),
        weight: RingElem::one(ctx),
    }];
    fn rec(
        ctx: RingCtx,
        sys: &FiniteSystem,
        cols: &[i64],
        idx: usize,
        frame: &Frame,
        all_spins: &[DecoratedSpin],
        out: &mut Vec<StateDump>,
    ) {
        if idx == cols.len() {
            if frame.state == sys.right {
                out.push(StateDump {
                    vertical_minus: frame.vertical_minus.clone(),
                    horizontals: frame.horizontals.clone(),
                    weight: frame.weight.clone(),
                });
            }
            return;
        }
        let col = cols[idx];
        let internal = sys.rows - 1;
        for mask in 0..(1usize << internal) {
            let vertical = |level: usize| -> bool {
                if level == 0 {
                    sys.bottom_has(col)
                } else if level == sys.rows {
                    sys.top_has(col)
                } else {
                    mask >> (level - 1) & 1 == 1
                }
            };
            // choose right-edge decorated spins for every row independently
            // and keep nonzero table weights
            fn choose(
                ctx: RingCtx,
                sys: &FiniteSystem,
                col: i64,
                row: usize,
                vertical: &dyn Fn(usize) -> bool,
                all_spins: &[DecoratedSpin],
                acc_w: RingElem,
                acc_right: &mut Vec<DecoratedSpin>,
                frame: &Frame,
                results: &mut Vec<(RingElem, Vec<DecoratedSpin>)>,
            ) {
                if row == sys.rows {
                    results.push((acc_w, acc_right.clone()));
                    return;
                }
                for &right in all_spins {
                    let w = vertex_weight(
                        ctx,
                        &VertexConfig {
                            flavor: sys.flavor,
                            left: frame.state[row],
                            top_minus: vertical(row + 1),
                            right,
                            bottom_minus: vertical(row),
                            z_var: sys.z_vars[row],
                        },
                    );
                    if w.is_zero() {
                        continue;
                    }
                    acc_right.push(right);
                    choose(
                        ctx,
                        sys,
                        col,
                        row + 1,
                        vertical,
                        all_spins,
                        &acc_w * &w,
                        acc_right,
                        frame,
                        results,
                    );
                    acc_right.pop();
                }
            }
            let mut results = Vec::new();
            choose(
                ctx,
                sys,
                col,
                0,
                &vertical,
                all_spins,
                frame.weight.clone(),
                &mut Vec::new(),
                frame,
                &mut results,
            );
            for (w, right) in results {
                let mut f = Frame {
                    state: right.clone(),
                    vertical_minus: frame.vertical_minus.clone(),
                    horizontals: frame.horizontals.clone(),
                    weight: w,
                };
                for level in 0..=sys.rows {
                    if vertical(level) {
                        f.vertical_minus.push((col, level));
                    }
                }
                for (r, s) in right.iter().enumerate() {
                    f.horizontals.push((col, r, s.to_string()));
                }
                rec(ctx, sys, cols, idx + 1, &f, all_spins, out);
            }
        }
    }
    while let Some(frame) = stack.pop() {
        rec(ctx, sys, &cols, 0, &frame, &all_spins, &mut out);
    }
    out
}
