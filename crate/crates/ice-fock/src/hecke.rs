//! The affine Hecke algebra acting on `V_n(z)^{otimes N}` in its three
//! presentations, the twisted affine R-matrix, and the q-antisymmetrizer.
//!
//! Basis vectors are `v_j1 x ... x v_jN x z1^{k1} ... zN^{kN}`; the
//! generator `T_i` acts on the right by the three-case formula with twist
//! factors `alpha_{ij}` (`alpha_{ij} alpha_{ji} = 1`), or equivalently
//! through the twisted R-matrix with the rational prefactors cleared by
//! exact division.

use std::collections::BTreeMap;

use crate::error::{IceError, Result};
use crate::ring::{div_exact_by_z_diff, RingCtx, RingElem};

/// An element of `V_n(z)^{otimes N}`: coefficients live in the spectral
/// Laurent ring with `arity = N`, keyed by the `v`-indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorVector {
    ctx: RingCtx,
    terms: BTreeMap<Vec<u8>, RingElem>,
}

impl TensorVector {
    pub fn zero(ctx: RingCtx) -> Self {
        TensorVector {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// Basis vector `v_j x z^k` from 1-based `v` indices and exponents.
    pub fn basis(ctx: RingCtx, j: &[u8], k: &[i32]) -> Self {
        assert_eq!(j.len(), ctx.arity as usize);
        assert_eq!(k.len(), ctx.arity as usize);
        assert!(j.iter().all(|&x| x >= 1 && x as u32 <= ctx.n));
        let mut coeff = RingElem::one(ctx);
        for (i, &e) in k.iter().enumerate() {
            coeff = &coeff * &RingElem::z_pow(ctx, i, e);
        }
        let mut v = Self::zero(ctx);
        v.terms.insert(j.to_vec(), coeff);
        v
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &RingElem)> {
        self.terms.iter()
    }

    pub fn insert(&mut self, j: Vec<u8>, c: RingElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(j) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorVector) {
        for (j, c) in &other.terms {
            self.insert(j.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &RingElem) -> TensorVector {
        let mut out = Self::zero(self.ctx);
        for (j, a) in &self.terms {
            out.insert(j.clone(), a * c);
        }
        out
    }

    /// Convert a `u`-index to `(v-index, z-exponent)`: `u_{j - kn} = z^k v_j`.
    pub fn u_split(n: u32, u: i64) -> (u8, i32) {
        let n = n as i64;
        let j = u.rem_euclid(n);
        let j = if j == 0 { n } else { j };
        let k = (j - u) / n;
        (j as u8, k as i32)
    }
}

impl std::ops::Add for &TensorVector {
    type Output = TensorVector;
    fn add(self, rhs: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl std::ops::Sub for &TensorVector {
    type Output = TensorVector;
    fn sub(self, rhs: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        out.add_assign(&rhs.scale(&-RingElem::one(rhs.ctx)));
        out
    }
}

/// Drinfeld twist parameters: invertible `alpha_{ij}` with
/// `alpha_{ii} = 1` and `alpha_{ij} alpha_{ji} = 1`, extended to integer
/// indices through residues mod `n`.
#[derive(Clone, Debug)]
pub struct TwistParameters {
    ctx: RingCtx,
    /// `alpha[(i-1)*n + (j-1)]` for 1-based residues `i, j`.
    table: Vec<RingElem>,
}

impl TwistParameters {
    pub fn new(ctx: RingCtx, table: Vec<RingElem>) -> Result<Self> {
        let n = ctx.n as usize;
        if table.len() != n * n {
            return Err(IceError::Invalid("alpha table must be n x n".into()));
        }
        let t = TwistParameters { ctx, table };
        let one = RingElem::one(ctx);
        for i in 1..=n as u8 {
            if t.alpha(i, i) != one {
                return Err(IceError::Invalid("alpha_ii must be 1".into()));
            }
            for j in 1..=n as u8 {
                if &t.alpha(i, j) * &t.alpha(j, i) != one {
                    return Err(IceError::Invalid("alpha_ij alpha_ji must be 1".into()));
                }
            }
        }
        Ok(t)
    }

    /// The untwisted case `alpha = 1`.
    pub fn untwisted(ctx: RingCtx) -> Self {
        let n = ctx.n as usize;
        TwistParameters {
            ctx,
            table: vec![RingElem::one(ctx); n * n],
        }
    }

    /// The Gauss-sum twist `alpha_{ij} = -q^{-1} g(i - j)` with formal
    /// Gauss symbols.
    pub fn gauss(ctx: RingCtx) -> Self {
        let n = ctx.n as usize;
        let mut table = Vec::with_capacity(n * n);
        for i in 1..=n as i64 {
            for j in 1..=n as i64 {
                if i == j {
                    table.push(RingElem::one(ctx));
                } else {
                    table.push(
                        -(&RingElem::q_pow(ctx, -1) * &RingElem::g_symbol(ctx, i - j)),
                    );
                }
            }
        }
        TwistParameters { ctx, table }
    }

    pub fn alpha(&self, i: u8, j: u8) -> RingElem {
        let n = self.ctx.n as usize;
        self.table[(i as usize - 1) * n + (j as usize - 1)].clone()
    }
}

/// The right action of `T_i` in the three-case form.
pub fn hecke_t_direct(
    i: usize,
    x: &TensorVector,
    alpha: &TwistParameters,
) -> Result<TensorVector> {
    let ctx = x.ctx();
    let nvars = ctx.arity as usize;
    if i + 1 >= nvars {
        return Err(IceError::Invalid(format!("T_{} out of range", i + 1)));
    }
    let q = RingElem::q_pow(ctx, 1);
    let q2 = RingElem::q_pow(ctx, 2);
    let one = RingElem::one(ctx);
    let mut out = TensorVector::zero(ctx);
    for (j, coeff) in x.terms() {
        let (ji, jn) = (j[i], j[i + 1]);
        let zs = swap_z(coeff, i, i + 1);
        // diagonal part: (1-q^2) times an exactly divisible combination
        let numer = if ji < jn {
            // z_{i+1} z^{s_i} - z_i z
            &(&RingElem::z_pow(ctx, i + 1, 1) * &zs)
                - &(&RingElem::z_pow(ctx, i, 1) * coeff)
        } else {
            // z_i (z^{s_i} - z)
            &RingElem::z_pow(ctx, i, 1) * &(&zs - coeff)
        };
        let frac = div_exact_by_z_diff(&numer, i, i + 1)?;
        out.insert(j.clone(), &frac * &(&one - &q2));
        // swap part
        let factor = if ji == jn {
            -one.clone()
        } else {
            -(&q * &alpha.alpha(ji, jn))
        };
        let mut sj = j.clone();
        sj.swap(i, i + 1);
        out.insert(sj, &zs * &factor);
    }
    Ok(out)
}

/// Apply the flipped twisted R-matrix `tau R^alpha(z_a, z_b)` to tensor
/// positions `(a, b)`: the coefficients act by multiplication with the
/// spectral scalars, the `v`-factors are mapped by the matrix.
pub fn tau_r_apply(
    a: usize,
    b: usize,
    x: &TensorVector,
    alpha: &TwistParameters,
) -> TensorVector {
    let ctx = x.ctx();
    let q = RingElem::q_pow(ctx, 1);
    let qi = RingElem::q_pow(ctx, -1);
    let za = RingElem::z_pow(ctx, a, 1);
    let zb = RingElem::z_pow(ctx, b, 1);
    let mut out = TensorVector::zero(ctx);
    for (j, coeff) in x.terms() {
        let (c, d) = (j[a], j[b]);
        if c == d {
            // (q z_a - q^{-1} z_b)
            let w = &(&q * &za) - &(&qi * &zb);
            out.insert(j.clone(), coeff * &w);
        } else {
            // swap: alpha_{cd} (z_a - z_b)
            let mut sj = j.clone();
            sj.swap(a, b);
            let w = &alpha.alpha(c, d) * &(&za - &zb);
            out.insert(sj, coeff * &w);
            // diagonal: (q - q^{-1}) z_b if c < d else (q - q^{-1}) z_a,
            // the assignment forced by agreement with the three-case action
            let scale = if d > c { &zb } else { &za };
            let w = &(&q - &qi) * scale;
            out.insert(j.clone(), coeff * &w);
        }
    }
    out
}

/// The R-matrix itself (`R = tau . (tau R)`), for Yang-Baxter checks.
pub fn r_apply(a: usize, b: usize, x: &TensorVector, alpha: &TwistParameters) -> TensorVector {
    let y = tau_r_apply(a, b, x, alpha);
    let mut out = TensorVector::zero(x.ctx());
    for (j, c) in y.terms() {
        let mut sj = j.clone();
        sj.swap(a, b);
        out.insert(sj, c.clone());
    }
    out
}

/// `T_i` through the R-matrix presentation:
/// `(q^2-1) z_i/(z_i - z_{i+1}) x - q/(z_i - z_{i+1}) (tau R)_{i,i+1} x^{s_i}`.
pub fn hecke_t_rmatrix(
    i: usize,
    x: &TensorVector,
    alpha: &TwistParameters,
) -> Result<TensorVector> {
    let ctx = x.ctx();
    let nvars = ctx.arity as usize;
    if i + 1 >= nvars {
        return Err(IceError::Invalid(format!("T_{} out of range", i + 1)));
    }
    let q = RingElem::q_pow(ctx, 1);
    let q2 = RingElem::q_pow(ctx, 2);
    let one = RingElem::one(ctx);
    // x with swapped spectral exponents at (i, i+1)
    let mut xs = TensorVector::zero(ctx);
    for (j, c) in x.terms() {
        xs.insert(j.clone(), swap_z(c, i, i + 1));
    }
    let rxs = tau_r_apply(i, i + 1, &xs, alpha);
    // combine: [(q^2-1) z_i x - q (tau R) x^{s_i}] / (z_i - z_{i+1})
    let mut combined = TensorVector::zero(ctx);
    for (j, c) in x.terms() {
        combined.insert(
            j.clone(),
            &(&(&q2 - &one) * &RingElem::z_pow(ctx, i, 1)) * c,
        );
    }
    combined.add_assign(&rxs.scale(&-q));
    let mut out = TensorVector::zero(ctx);
    for (j, c) in combined.terms() {
        out.insert(j.clone(), div_exact_by_z_diff(c, i, i + 1)?);
    }
    Ok(out)
}

fn swap_z(x: &RingElem, a: usize, b: usize) -> RingElem {
    x.subst_z(x.ctx(), |i| {
        if i == a {
            vec![(b, 1)]
        } else if i == b {
            vec![(a, 1)]
        } else {
            vec![(i, 1)]
        }
    })
}

/// `y_i` acts by `z_i^{-1}`.
pub fn hecke_y(i: usize, x: &TensorVector) -> TensorVector {
    x.scale(&RingElem::z_pow(x.ctx(), i, -1))
}

/// A reduced word for a permutation (one-line notation, 0-based values).
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    // sort by adjacent transpositions; recording in application order
    loop {
        let mut done = true;
        for i in 0..p.len() - 1 {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                done = false;
            }
        }
        if done {
            break;
        }
    }
    word.reverse();
    word
}

/// `T_sigma = T_{i_1} ... T_{i_l}` along a reduced word for `sigma`.
pub fn t_sigma(
    word: &[usize],
    x: &TensorVector,
    alpha: &TwistParameters,
) -> Result<TensorVector> {
    // right action: x . (T_{i_1} ... T_{i_l}) applies T_{i_1} first
    let mut y = x.clone();
    for &i in word {
        y = hecke_t_direct(i, &y, alpha)?;
    }
    Ok(y)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let smaller = permutations(n - 1);
    for p in smaller {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The q-antisymmetrizer `A^{(N)} = sum_{sigma} T_sigma`.
pub fn antisymmetrize(x: &TensorVector, alpha: &TwistParameters) -> Result<TensorVector> {
    let nvars = x.ctx().arity as usize;
    let mut out = TensorVector::zero(x.ctx());
    for perm in permutations(nvars) {
        let word = reduced_word(&perm);
        out.add_assign(&t_sigma(&word, x, alpha)?);
    }
    Ok(out)
}

/// The two kernel families of `T + 1` on adjacent positions `(i, i+1)`,
/// tensoring `u_l` and `u_m`: either `u_l x u_m + u_m x u_l` when
/// `l = m mod n`, or the four-term element otherwise.
pub fn kernel_element(
    ctx: RingCtx,
    i: usize,
    l: i64,
    m: i64,
    rest: &[i64],
    alpha: &TwistParameters,
) -> TensorVector {
    let n = ctx.n as i64;
    let build = |a: i64, b: i64| -> TensorVector {
        let mut us = rest.to_vec();
        us.insert(i, a);
        us.insert(i + 1, b);
        tensor_from_u(ctx, &us)
    };
    if (m - l).rem_euclid(n) == 0 {
        &build(l, m) + &build(m, l)
    } else {
        let q = RingElem::q_pow(ctx, 1);
        let (jl, _) = TensorVector::u_split(ctx.n, l);
        let (jm, _) = TensorVector::u_split(ctx.n, m);
        let i0 = (m - l).rem_euclid(n);
        let a = &build(l, m) + &build(m, l).scale(&(&q * &alpha.alpha(jl, jm)));
        let (jmi, _) = TensorVector::u_split(ctx.n, m - i0);
        let (jli, _) = TensorVector::u_split(ctx.n, l + i0);
        let b = &build(m - i0, l + i0)
            + &build(l + i0, m - i0).scale(&(&q * &alpha.alpha(jmi, jli)));
        &a + &b
    }
}

/// Basis tensor from `u`-indices.
pub fn tensor_from_u(ctx: RingCtx, us: &[i64]) -> TensorVector {
    let j: Vec<u8> = us.iter().map(|&u| TensorVector::u_split(ctx.n, u).0).collect();
    let k: Vec<i32> = us.iter().map(|&u| TensorVector::u_split(ctx.n, u).1).collect();
    TensorVector::basis(ctx, &j, &k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn all_basis(ctx: RingCtx, exps: &[i32]) -> Vec<TensorVector> {
        let nvars = ctx.arity as usize;
        let mut out = Vec::new();
        let mut j = vec![1u8; nvars];
        let mut k = vec![exps[0]; nvars];
        loop {
            out.push(TensorVector::basis(ctx, &j, &k));
            // advance j then k over the grid
            let mut pos = 0;
            loop {
                if pos == nvars {
                    break;
                }
                if (j[pos] as u32) < ctx.n {
                    j[pos] += 1;
                    break;
                }
                j[pos] = 1;
                pos += 1;
            }
            if pos < nvars {
                continue;
            }
            let mut pos = 0;
            loop {
                if pos == nvars {
                    return out;
                }
                let idx = exps.iter().position(|&e| e == k[pos]).unwrap();
                if idx + 1 < exps.len() {
                    k[pos] = exps[idx + 1];
                    break;
                }
                k[pos] = exps[0];
                pos += 1;
            }
        }
    }

    #[test]
    fn u_split_round_trip() {
        for n in 1..=3u32 {
            for u in -7..=7i64 {
                let (j, k) = TensorVector::u_split(n, u);
                assert!(j >= 1 && j as u32 <= n);
                assert_eq!(j as i64 - (k as i64) * n as i64, u);
            }
        }
    }

    #[test]
    fn quadratic_relation() {
        // (T_i + 1)(T_i - q^2) = 0 on every basis vector
        for n in [2u32, 3] {
            let ctx = RingCtx::new(n, 2);
            let alpha = TwistParameters::gauss(ctx);
            let q2 = RingElem::q_pow(ctx, 2);
            for x in all_basis(ctx, &[-1, 0, 1]) {
                let tx = hecke_t_direct(0, &x, &alpha).unwrap();
                let ttx = hecke_t_direct(0, &tx, &alpha).unwrap();
                // T^2 x = (q^2 - 1) T x + q^2 x
                let rhs = &tx.scale(&(&q2 - &RingElem::one(ctx))) + &x.scale(&q2);
                assert_eq!(ttx, rhs);
            }
        }
    }

    #[test]
    fn direct_equals_rmatrix_presentation() {
        for n in [2u32, 3] {
            let ctx = RingCtx::new(n, 2);
            for alpha in [TwistParameters::untwisted(ctx), TwistParameters::gauss(ctx)] {
                for x in all_basis(ctx, &[-1, 0, 1]) {
                    let a = hecke_t_direct(0, &x, &alpha).unwrap();
                    let b = hecke_t_rmatrix(0, &x, &alpha).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn braid_relation_n3() {
        let ctx = RingCtx::new(2, 3);
        let alpha = TwistParameters::gauss(ctx);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let j: Vec<u8> = (0..3).map(|_| rng.gen_range(1..=2)).collect();
            let k: Vec<i32> = (0..3).map(|_| rng.gen_range(-1..=1)).collect();
            let x = TensorVector::basis(ctx, &j, &k);
            let t121 = t_sigma(&[0, 1, 0], &x, &alpha).unwrap();
            let t212 = t_sigma(&[1, 0, 1], &x, &alpha).unwrap();
            assert_eq!(t121, t212);
        }
    }

    #[test]
    fn bernstein_relation() {
        // T_i y_i T_i = q^2 y_{i+1}
        let ctx = RingCtx::new(2, 2);
        let alpha = TwistParameters::gauss(ctx);
        let q2 = RingElem::q_pow(ctx, 2);
        for x in all_basis(ctx, &[-1, 0, 1]) {
            let lhs = hecke_t_direct(0, &hecke_y(0, &hecke_t_direct(0, &x, &alpha).unwrap()), &alpha)
                .unwrap();
            let rhs = hecke_y(1, &x).scale(&q2);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn y_commutation() {
        // y_j T_i = T_i y_j for j != i, i+1
        let ctx = RingCtx::new(2, 3);
        let alpha = TwistParameters::gauss(ctx);
        let x = TensorVector::basis(ctx, &[1, 2, 1], &[0, -1, 1]);
        let a = hecke_y(2, &hecke_t_direct(0, &x, &alpha).unwrap());
        let b = hecke_t_direct(0, &hecke_y(2, &x), &alpha).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn untwisted_alpha_recovers_plain_action() {
        let ctx = RingCtx::new(3, 2);
        let alpha1 = TwistParameters::untwisted(ctx);
        let x = TensorVector::basis(ctx, &[1, 2], &[0, 0]);
        let tx = hecke_t_direct(0, &x, &alpha1).unwrap();
        // j_1 < j_2 with z = 1: (1-q^2) (z_2 - z_1)/(z_1 - z_2) x' ... the
        // diagonal reduces to -(1-q^2) on the unit exponent vector
        let mut expect = TensorVector::zero(ctx);
        expect.insert(
            vec![1, 2],
            -(&RingElem::one(ctx) - &RingElem::q_pow(ctx, 2)),
        );
        expect.insert(vec![2, 1], -RingElem::q_pow(ctx, 1));
        assert_eq!(tx, expect);
    }

    #[test]
    fn parametrized_ybe_twisted() {
        // R12 R13 R23 = R23 R13 R12 on V^{x3} with symbolic z, for the
        // untwisted, Gauss, and a randomized monomial twist.
        let ctx = RingCtx::new(2, 3);
        let mono = |qe: i32, g: i64| -> RingElem {
            &RingElem::q_pow(ctx, qe) * &RingElem::g_symbol(ctx, g)
        };
        let mut table = vec![RingElem::one(ctx); 4];
        table[1] = mono(3, 1); // alpha_{12}
        table[2] = {
            // alpha_{21} = alpha_{12}^{-1} = q^{-3} * q^{-2} G_1
            &RingElem::q_pow(ctx, -5) * &RingElem::g_symbol(ctx, 1)
        };
        let random_twist = TwistParameters::new(ctx, table).unwrap();
        for alpha in [
            TwistParameters::untwisted(ctx),
            TwistParameters::gauss(ctx),
            random_twist,
        ] {
            for x in [
                TensorVector::basis(ctx, &[1, 2, 2], &[0, 0, 0]),
                TensorVector::basis(ctx, &[2, 1, 1], &[1, 0, -1]),
                TensorVector::basis(ctx, &[1, 1, 2], &[0, 1, 0]),
            ] {
                let lhs = r_apply(1, 2, &r_apply(0, 2, &r_apply(0, 1, &x, &alpha), &alpha), &alpha);
                let rhs = r_apply(0, 1, &r_apply(0, 2, &r_apply(1, 2, &x, &alpha), &alpha), &alpha);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tau_r_diagonal_weight() {
        let ctx = RingCtx::new(2, 2);
        let alpha = TwistParameters::gauss(ctx);
        let x = TensorVector::basis(ctx, &[1, 1], &[0, 0]);
        let y = tau_r_apply(0, 1, &x, &alpha);
        let w = &(&RingElem::q_pow(ctx, 1) * &RingElem::z_pow(ctx, 0, 1))
            - &(&RingElem::q_pow(ctx, -1) * &RingElem::z_pow(ctx, 1, 1));
        let mut expect = TensorVector::zero(ctx);
        expect.insert(vec![1, 1], w);
        assert_eq!(y, expect);
    }

    #[test]
    fn t_sigma_reduced_word_invariance() {
        // two reduced words of the longest element of S_3, plus length
        // additivity on all of S_3
        let ctx = RingCtx::new(2, 3);
        let alpha = TwistParameters::gauss(ctx);
        let x = TensorVector::basis(ctx, &[1, 2, 1], &[1, 0, -1]);
        let a = t_sigma(&[0, 1, 0], &x, &alpha).unwrap();
        let b = t_sigma(&[1, 0, 1], &x, &alpha).unwrap();
        assert_eq!(a, b);
        // identity permutation acts as identity
        assert_eq!(t_sigma(&[], &x, &alpha).unwrap(), x);
        // l-additivity: T_{s_i sigma} = T_sigma T_i when length increases;
        // check T_{s_1} T_{s_2} equals the word [0, 1]
        let two_step = t_sigma(&[0, 1], &x, &alpha).unwrap();
        let stepwise = hecke_t_direct(1, &hecke_t_direct(0, &x, &alpha).unwrap(), &alpha).unwrap();
        assert_eq!(two_step, stepwise);
    }

    #[test]
    fn kernel_elements_killed_by_t_plus_one() {
        let ctx = RingCtx::new(2, 2);
        let alpha = TwistParameters::gauss(ctx);
        for (l, m) in [(0i64, 2i64), (1, 4), (0, 3), (-1, 1), (2, 5)] {
            let x = kernel_element(ctx, 0, l, m, &[], &alpha);
            let tx = hecke_t_direct(0, &x, &alpha).unwrap();
            let sum = &tx + &x;
            assert!(sum.is_zero(), "(T+1) on kernel element (l,m)=({l},{m})");
        }
    }

    #[test]
    fn antisymmetrizer_properties() {
        let ctx = RingCtx::new(2, 2);
        let alpha = TwistParameters::gauss(ctx);
        // A^{(1)} would be the identity; for N=2, A = 1 + T and the image
        // lies in the q^2 eigenspace of T (pinned constant).
        let q2 = RingElem::q_pow(ctx, 2);
        for x in [
            TensorVector::basis(ctx, &[1, 2], &[0, 0]),
            TensorVector::basis(ctx, &[2, 2], &[1, 0]),
            TensorVector::basis(ctx, &[2, 1], &[0, -1]),
        ] {
            let ax = antisymmetrize(&x, &alpha).unwrap();
            let tax = hecke_t_direct(0, &ax, &alpha).unwrap();
            assert_eq!(tax, ax.scale(&q2));
        }
        // kernel elements are annihilated by A^{(2)} = 1 + T
        let k = kernel_element(ctx, 0, 1, 4, &[], &alpha);
        assert!(antisymmetrize(&k, &alpha).unwrap().is_zero());
    }

    #[test]
    fn straightening_agrees_with_kernel_reduction() {
        // The Fock straightening of u_l ^ u_m matches the relation induced
        // by the kernel elements: u_l x u_m + (expansion) lies in Ker(T+1)
        // ... i.e. A^{(2)}(u_l x u_m) = A^{(2)}(sum of straightened terms).
        use crate::fock::wedge_pair_expansion;
        for n in [2u32, 3] {
            let ctx = RingCtx::new(n, 2);
            let alpha = TwistParameters::gauss(ctx);
            for (l, m) in [(0i64, 1i64), (0, 2), (0, 3), (1, 4), (0, 5), (-2, 3)] {
                if l == m {
                    continue;
                }
                let lhs = antisymmetrize(&tensor_from_u(ctx, &[l, m]), &alpha).unwrap();
                let mut rhs = TensorVector::zero(ctx);
                for (c, a, b) in wedge_pair_expansion(ctx, l, m) {
                    rhs.add_assign(
                        &antisymmetrize(&tensor_from_u(ctx, &[a, b]), &alpha)
                            .unwrap()
                            .scale(&c),
                    );
                }
                assert_eq!(lhs, rhs, "n={n} (l,m)=({l},{m})");
            }
        }
    }
}
