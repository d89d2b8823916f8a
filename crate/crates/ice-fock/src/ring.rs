//! Exact coefficient ring: Laurent polynomials in `q` and spectral variables
//! `z_0 .. z_{arity-1}` over the rationals, extended by formal Gauss-sum
//! generators `G_1 .. G_{n-1}` subject to the reductions
//!
//! ```text
//!     G_a * G_{n-a} = q^2            (a != n-a)
//!     G_{n/2}^2     = q^2            (n even)
//! ```
//!
//! and carrying the bar involution `q -> q`, `z_i -> z_i`, `G_a -> G_{n-a}`.
//! The symbol `v` is always stored as `q^2`; `g(0)` is the ring element
//! `-q^2` and never a generator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};

use crate::error::{IceError, Result};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

/// Ambient parameters: Gauss modulus `n` and number of spectral variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RingCtx {
    pub n: u32,
    pub arity: u32,
}

impl RingCtx {
    pub fn new(n: u32, arity: u32) -> Self {
        assert!(n >= 1, "modulus must be positive");
        RingCtx { n, arity }
    }

    pub fn residue(&self, a: i64) -> u32 {
        a.rem_euclid(self.n as i64) as u32
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, arity={})", self.n, self.arity)
    }
}

/// Exponent vector of the Gauss generators `G_1 .. G_{n-1}`, kept in normal
/// form: for each pair `{a, n-a}` at most one exponent is nonzero, and the
/// self-paired exponent (n even) is 0 or 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GaussMono {
    exps: Vec<u16>,
}

impl GaussMono {
    pub fn trivial(n: u32) -> Self {
        GaussMono {
            exps: vec![0; n.saturating_sub(1) as usize],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Reduce a raw exponent vector; returns the normal form and the `q`
    /// exponent emitted by the reductions (always even).
    pub fn normal_form(n: u32, mut exps: Vec<u16>) -> (GaussMono, i32) {
        assert_eq!(exps.len(), n.saturating_sub(1) as usize);
        let mut q_emitted: i32 = 0;
        for a in 1..n {
            let b = n - a;
            match a.cmp(&b) {
                Ordering::Less => {
                    let (ia, ib) = (a as usize - 1, b as usize - 1);
                    let m = exps[ia].min(exps[ib]);
                    exps[ia] -= m;
                    exps[ib] -= m;
                    q_emitted += 2 * m as i32;
                }
                Ordering::Equal => {
                    let ia = a as usize - 1;
                    let m = exps[ia] / 2;
                    exps[ia] %= 2;
                    q_emitted += 2 * m as i32;
                }
                Ordering::Greater => {}
            }
        }
        (GaussMono { exps }, q_emitted)
    }

    fn mul(&self, other: &GaussMono, n: u32) -> (GaussMono, i32) {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&x, &y)| x + y)
            .collect();
        GaussMono::normal_form(n, exps)
    }

    /// The bar involution `G_a -> G_{n-a}`. A normal form stays normal.
    fn involute(&self, n: u32) -> GaussMono {
        let mut exps = vec![0u16; self.exps.len()];
        for a in 1..n {
            exps[(n - a) as usize - 1] = self.exps[a as usize - 1];
        }
        GaussMono { exps }
    }
}

/// A single monomial `q^q * z^zexps * G^gauss`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono {
    pub q: i32,
    pub z: Vec<i32>,
    pub g: GaussMono,
}

impl Mono {
    pub fn unit(ctx: RingCtx) -> Self {
        Mono {
            q: 0,
            z: vec![0; ctx.arity as usize],
            g: GaussMono::trivial(ctx.n),
        }
    }

    /// Combined degree of the spectral variables, counting absolute values.
    pub fn z_abs_degree(&self) -> i64 {
        self.z.iter().map(|&e| e.unsigned_abs() as i64).sum()
    }
}

/// An exact element of the coefficient ring, canonical by construction:
/// normal-form Gauss monomials, no zero coefficients, terms ordered
/// lexicographically by `(q, z, g)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElem {
    ctx: RingCtx,
    terms: BTreeMap<Mono, Rat>,
}

impl RingElem {
    pub fn zero(ctx: RingCtx) -> Self {
        RingElem {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: RingCtx) -> Self {
        Self::from_rat(ctx, Rat::one())
    }

    pub fn from_rat(ctx: RingCtx, r: Rat) -> Self {
        let mut e = Self::zero(ctx);
        if !r.is_zero() {
            e.terms.insert(Mono::unit(ctx), r);
        }
        e
    }

    pub fn from_int(ctx: RingCtx, r: i64) -> Self {
        Self::from_rat(ctx, rat_int(r))
    }

    pub fn monomial(ctx: RingCtx, m: Mono, c: Rat) -> Self {
        assert_eq!(m.z.len(), ctx.arity as usize);
        let mut e = Self::zero(ctx);
        if !c.is_zero() {
            let (g, qe) = GaussMono::normal_form(ctx.n, m.g.expssized(ctx.n));
            e.terms.insert(
                Mono {
                    q: m.q + qe,
                    z: m.z,
                    g,
                },
                c,
            );
        }
        e
    }

    /// `q^e`.
    pub fn q_pow(ctx: RingCtx, e: i32) -> Self {
        let mut m = Mono::unit(ctx);
        m.q = e;
        Self::monomial(ctx, m, Rat::one())
    }

    /// `v^e = q^{2e}`.
    pub fn v_pow(ctx: RingCtx, e: i32) -> Self {
        Self::q_pow(ctx, 2 * e)
    }

    /// `z_i^e`.
    pub fn z_pow(ctx: RingCtx, i: usize, e: i32) -> Self {
        assert!(i < ctx.arity as usize, "variable index out of range");
        let mut m = Mono::unit(ctx);
        m.z[i] = e;
        Self::monomial(ctx, m, Rat::one())
    }

    /// The formal Gauss symbol `g(a)`: `-q^2` when `a = 0 mod n`, and the
    /// generator `G_{a mod n}` otherwise.
    pub fn g_symbol(ctx: RingCtx, a: i64) -> Self {
        let r = ctx.residue(a);
        if r == 0 {
            -Self::v_pow(ctx, 1)
        } else {
            let mut exps = vec![0u16; ctx.n as usize - 1];
            exps[r as usize - 1] = 1;
            let mut m = Mono::unit(ctx);
            m.g = GaussMono { exps };
            Self::monomial(ctx, m, Rat::one())
        }
    }

    /// `1 - v`.
    pub fn one_minus_v(ctx: RingCtx) -> Self {
        Self::one(ctx) - Self::v_pow(ctx, 1)
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::unit(self.ctx))
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        let mut out = Self::zero(self.ctx);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The bar involution: fixes `q` and all `z_i`, sends `G_a -> G_{n-a}`.
    pub fn involute(&self) -> Self {
        let mut out = Self::zero(self.ctx);
        for (m, c) in &self.terms {
            let (g, qe) = GaussMono::normal_form(self.ctx.n, m.g.involute(self.ctx.n).exps);
            out.insert_term(
                Mono {
                    q: m.q + qe,
                    z: m.z.clone(),
                    g,
                },
                c.clone(),
            );
        }
        out
    }

    /// Substitute each variable `z_i` by `z_i^k` (negate with `k = -1`).
    pub fn map_z_exponents(&self, f: impl Fn(usize, i32) -> i32) -> Self {
        let mut out = Self::zero(self.ctx);
        for (m, c) in &self.terms {
            let z = m
                .z
                .iter()
                .enumerate()
                .map(|(i, &e)| f(i, e))
                .collect();
            out.insert_term(
                Mono {
                    q: m.q,
                    z,
                    g: m.g.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Substitute variables: `z_i -> image(i)` where every image is a
    /// monomial `z`-vector in a possibly different context.
    pub fn subst_z(&self, target: RingCtx, image: impl Fn(usize) -> Vec<(usize, i32)>) -> Self {
        assert_eq!(target.n, self.ctx.n);
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut z = vec![0i32; target.arity as usize];
            for (i, &e) in m.z.iter().enumerate() {
                if e != 0 {
                    for (j, mult) in image(i) {
                        z[j] += e * mult;
                    }
                }
            }
            out.insert_term(
                Mono {
                    q: m.q,
                    z,
                    g: m.g.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Keep only terms whose monomial satisfies the predicate.
    pub fn filter_terms(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        let mut out = Self::zero(self.ctx);
        for (m, c) in &self.terms {
            if keep(m) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// True if every coefficient is an integer.
    pub fn is_denominator_free(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Replace every Gauss generator by the table value.
    pub fn specialize_g(&self, spec: &GSpec) -> Result<Self> {
        spec.check_ctx(self.ctx)?;
        let mut out = Self::zero(self.ctx);
        for (m, c) in &self.terms {
            let mut term = Self::monomial(
                self.ctx,
                Mono {
                    q: m.q,
                    z: m.z.clone(),
                    g: GaussMono::trivial(self.ctx.n),
                },
                c.clone(),
            );
            for a in 1..self.ctx.n {
                let e = m.g.exps[a as usize - 1];
                for _ in 0..e {
                    term = &term * &spec.value(a);
                }
            }
            out += &term;
        }
        Ok(out)
    }

    /// Evaluate at rational points: `q -> qv`, `z_i -> zv[i]`, `G_a -> gv[a-1]`.
    /// Used by cross-check paths that solve small linear systems.
    pub fn eval_rational(&self, qv: &Rat, zv: &[Rat], gv: &[Rat]) -> Rat {
        assert_eq!(zv.len(), self.ctx.arity as usize);
        assert_eq!(gv.len(), self.ctx.n as usize - 1);
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            val *= pow_rat(qv, m.q);
            for (i, &e) in m.z.iter().enumerate() {
                val *= pow_rat(&zv[i], e);
            }
            for a in 1..self.ctx.n {
                let e = m.g.exps[a as usize - 1];
                val *= pow_rat(&gv[a as usize - 1], e as i32);
            }
            total += val;
        }
        total
    }
}

fn pow_rat(b: &Rat, e: i32) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let p = b.pow(e.abs());
    if e > 0 {
        p
    } else {
        p.recip()
    }
}

impl GaussMono {
    fn expssized(&self, n: u32) -> Vec<u16> {
        if self.exps.len() == n.saturating_sub(1) as usize {
            self.exps.clone()
        } else {
            assert!(self.exps.is_empty());
            vec![0; n.saturating_sub(1) as usize]
        }
    }
}

// -- arithmetic ---------------------------------------------------------

impl std::ops::AddAssign<&RingElem> for RingElem {
    fn add_assign(&mut self, rhs: &RingElem) {
        assert_eq!(self.ctx, rhs.ctx, "ring context mismatch");
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Add for RingElem {
    type Output = RingElem;
    fn add(mut self, rhs: RingElem) -> RingElem {
        self += &rhs;
        self
    }
}

impl std::ops::SubAssign<&RingElem> for RingElem {
    fn sub_assign(&mut self, rhs: &RingElem) {
        assert_eq!(self.ctx, rhs.ctx, "ring context mismatch");
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), -c.clone());
        }
    }
}

impl std::ops::Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Sub for RingElem {
    type Output = RingElem;
    fn sub(mut self, rhs: RingElem) -> RingElem {
        self -= &rhs;
        self
    }
}

impl std::ops::Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        self.scale(&-Rat::one())
    }
}

impl std::ops::Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl std::ops::Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.ctx, rhs.ctx, "ring context mismatch");
        let mut out = RingElem::zero(self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (g, qe) = ma.g.mul(&mb.g, self.ctx.n);
                let z = ma.z.iter().zip(&mb.z).map(|(&x, &y)| x + y).collect();
                out.insert_term(
                    Mono {
                        q: ma.q + mb.q + qe,
                        z,
                        g,
                    },
                    ca * cb,
                );
            }
        }
        out
    }
}

impl std::ops::Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        &self * &rhs
    }
}

impl std::ops::MulAssign<&RingElem> for RingElem {
    fn mul_assign(&mut self, rhs: &RingElem) {
        *self = &*self * rhs;
    }
}

/// Checked product, reporting incompatible contexts as an error rather
/// than panicking. External entry points route through this.
pub fn ring_mul(x: &RingElem, y: &RingElem) -> Result<RingElem> {
    if x.ctx != y.ctx {
        return Err(IceError::CtxMismatch(x.ctx, y.ctx));
    }
    Ok(x * y)
}

/// `p_k(z_0..z_{r-1}) = sum z_i^k` over the first `r` variables.
pub fn power_sum(ctx: RingCtx, k: u32, r: usize) -> RingElem {
    assert!(k >= 1 && r >= 1 && r <= ctx.arity as usize);
    power_sum_vars(ctx, k, 0..r)
}

/// `p_k` over an arbitrary variable range.
pub fn power_sum_vars(ctx: RingCtx, k: u32, vars: impl IntoIterator<Item = usize>) -> RingElem {
    let mut out = RingElem::zero(ctx);
    for i in vars {
        out += &RingElem::z_pow(ctx, i, k as i32);
    }
    out
}

/// Exact division by `z_i - z_j`. Fails if the division leaves a remainder.
pub fn div_exact_by_z_diff(x: &RingElem, i: usize, j: usize) -> Result<RingElem> {
    assert!(i != j);
    if x.is_zero() {
        return Ok(x.clone());
    }
    // Group terms by everything except the z_i and z_j exponents; in each
    // group run synthetic division in z_i over Laurent polynomials in z_j.
    let mut groups: BTreeMap<Mono, BTreeMap<i32, BTreeMap<i32, Rat>>> = BTreeMap::new();
    for (m, c) in &x.terms {
        let mut key = m.clone();
        let (ei, ej) = (key.z[i], key.z[j]);
        key.z[i] = 0;
        key.z[j] = 0;
        groups
            .entry(key)
            .or_default()
            .entry(ei)
            .or_default()
            .insert(ej, c.clone());
    }
    let mut out = RingElem::zero(x.ctx);
    for (key, coeffs) in groups {
        let hi = *coeffs.keys().max().unwrap();
        let lo = *coeffs.keys().min().unwrap();
        // carry(z_j) tracks the running Horner coefficient.
        let mut carry: BTreeMap<i32, Rat> = BTreeMap::new();
        for d in (lo..=hi).rev() {
            // carry <- carry * z_j + coeff of z_i^d
            let mut next: BTreeMap<i32, Rat> = BTreeMap::new();
            for (ej, c) in &carry {
                next.insert(ej + 1, c.clone());
            }
            if let Some(cs) = coeffs.get(&d) {
                for (ej, c) in cs {
                    let e = next.entry(*ej).or_insert_with(Rat::zero);
                    *e += c.clone();
                }
                next.retain(|_, v| !v.is_zero());
            }
            if d > lo {
                for (ej, c) in &next {
                    let mut m = key.clone();
                    m.z[i] += d - 1;
                    m.z[j] += ej;
                    out.insert_term(m, c.clone());
                }
            }
            carry = next;
        }
        // The final carry is the remainder; it must vanish.
        if carry.values().any(|c| !c.is_zero()) {
            return Err(IceError::DivisionFailed(i, j));
        }
    }
    Ok(out)
}

// -- g specialization ----------------------------------------------------

/// A table `a -> g(a)` for residues `1..n-1`, validated against
/// `g(a) g(n-a) = q^2`. `g(0) = -q^2` is implicit and not part of the table.
#[derive(Clone, Debug)]
pub struct GSpec {
    ctx: RingCtx,
    table: Vec<RingElem>,
}

impl GSpec {
    pub fn new(ctx: RingCtx, table: Vec<RingElem>) -> Result<Self> {
        if table.len() != ctx.n as usize - 1 {
            return Err(IceError::BadGSpec(format!(
                "expected {} entries, got {}",
                ctx.n - 1,
                table.len()
            )));
        }
        let spec = GSpec { ctx, table };
        let v = RingElem::v_pow(ctx, 1);
        for a in 1..ctx.n {
            let prod = &spec.value(a) * &spec.value(ctx.n - a);
            if prod != v {
                return Err(IceError::BadGSpec(format!(
                    "g({a}) g({}) != v",
                    ctx.n - a
                )));
            }
        }
        Ok(spec)
    }

    /// The ribbon/LLT specialization: `g(a) = q` for `a != 0 mod n`.
    ///
    /// The sign is pinned by the identity `psi(h_k) = U_k`: with the wedge
    /// relations used here, the single-ribbon matrix element of `J_1` on
    /// `|(1,1); 0>` (n = 2) is `g(-1)`, while the strip carries `q^spin = q`.
    pub fn default_llt(ctx: RingCtx) -> Self {
        let q = RingElem::q_pow(ctx, 1);
        GSpec {
            ctx,
            table: vec![q; ctx.n as usize - 1],
        }
    }

    pub fn value(&self, a: u32) -> RingElem {
        let r = self.ctx.residue(a as i64);
        if r == 0 {
            -RingElem::v_pow(self.ctx, 1)
        } else {
            self.table[r as usize - 1].clone()
        }
    }

    fn check_ctx(&self, ctx: RingCtx) -> Result<()> {
        if self.ctx != ctx {
            return Err(IceError::CtxMismatch(self.ctx, ctx));
        }
        Ok(())
    }
}

// -- display / serialization ---------------------------------------------

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if m.q != 0 {
                write!(f, "*q^{}", m.q)?;
            }
            for (i, &e) in m.z.iter().enumerate() {
                if e != 0 {
                    write!(f, "*z{}^{}", i + 1, e)?;
                }
            }
            for (a, &e) in m.g.exps.iter().enumerate() {
                if e != 0 {
                    write!(f, "*G{}^{}", a + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    num: i64,
    den: i64,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: CoeffJson,
    q: i32,
    z: Vec<i32>,
    g: Vec<u16>,
}

impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error;
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RingElem", 3)?;
        st.serialize_field("n", &self.ctx.n)?;
        st.serialize_field("arity", &self.ctx.arity)?;
        struct Terms<'a>(&'a RingElem);
        impl Serialize for Terms<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for (m, c) in &self.0.terms {
                    let num = i64::try_from(c.numer()).map_err(|_| {
                        S::Error::custom("coefficient exceeds the JSON integer range")
                    })?;
                    let den = i64::try_from(c.denom()).map_err(|_| {
                        S::Error::custom("coefficient exceeds the JSON integer range")
                    })?;
                    seq.serialize_element(&TermJson {
                        coeff: CoeffJson { num, den },
                        q: m.q,
                        z: m.z.clone(),
                        g: m.g.exps.clone(),
                    })?;
                }
                seq.end()
            }
        }
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            arity: u32,
            terms: Vec<TermJson>,
        }
        use serde::de::Error;
        let raw = Raw::deserialize(d)?;
        let ctx = RingCtx::new(raw.n, raw.arity);
        let mut out = RingElem::zero(ctx);
        for t in raw.terms {
            if t.z.len() != ctx.arity as usize {
                return Err(D::Error::custom("z exponent arity mismatch"));
            }
            if t.g.len() != ctx.n as usize - 1 {
                return Err(D::Error::custom("gauss exponent length mismatch"));
            }
            if t.coeff.den <= 0 {
                return Err(D::Error::custom("denominator must be positive"));
            }
            let (g, qe) = GaussMono::normal_form(ctx.n, t.g);
            out.insert_term(
                Mono {
                    q: t.q + qe,
                    z: t.z,
                    g,
                },
                rat(t.coeff.num, t.coeff.den),
            );
        }
        Ok(out)
    }
}
