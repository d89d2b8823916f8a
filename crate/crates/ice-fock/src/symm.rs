//! Symmetric functions in the power-sum basis, as rational combinations of
//! `p_lambda`, enough to express `h_k` and `e_k` and feed the homomorphism
//! `p_k -> J_k`.

use std::collections::BTreeMap;

use num::One;

use crate::partition::{partitions_of, Partition};
use crate::ring::{rat_int, Rat};

/// A finite rational combination of power-sum products `p_lambda`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PExpansion {
    pub terms: BTreeMap<Partition, Rat>,
}

impl PExpansion {
    pub fn single(lam: Partition, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !num::Zero::is_zero(&c) {
            terms.insert(lam, c);
        }
        PExpansion { terms }
    }
}

/// `z_lambda = prod_i i^{m_i} m_i!` for `lambda = (1^{m_1} 2^{m_2} ...)`.
pub fn z_lambda(lam: &Partition) -> Rat {
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut z = Rat::one();
    for (i, m) in mult {
        for _ in 0..m {
            z *= rat_int(i as i64);
        }
        for f in 1..=m {
            z *= rat_int(f as i64);
        }
    }
    z
}

/// `epsilon_lambda = (-1)^{|lambda| - l(lambda)}`.
pub fn epsilon_lambda(lam: &Partition) -> Rat {
    if (lam.size() - lam.len() as u64) % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

/// `h_k = sum_{lambda |- k} z_lambda^{-1} p_lambda`.
pub fn h_in_p(k: u32) -> PExpansion {
    let mut terms = BTreeMap::new();
    for lam in partitions_of(k as u64) {
        let z = z_lambda(&lam);
        terms.insert(lam, z.recip());
    }
    PExpansion { terms }
}

/// `e_k = sum_{lambda |- k} epsilon_lambda z_lambda^{-1} p_lambda`.
pub fn e_in_p(k: u32) -> PExpansion {
    let mut terms = BTreeMap::new();
    for lam in partitions_of(k as u64) {
        let c = epsilon_lambda(&lam) * z_lambda(&lam).recip();
        terms.insert(lam, c);
    }
    PExpansion { terms }
}

/// `p_k` itself.
pub fn p_in_p(k: u32) -> PExpansion {
    PExpansion::single(Partition::new(vec![k]), Rat::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn z_lambda_values() {
        assert_eq!(z_lambda(&Partition::new(vec![1, 1])), rat_int(2));
        assert_eq!(z_lambda(&Partition::new(vec![2])), rat_int(2));
        assert_eq!(z_lambda(&Partition::new(vec![3, 1, 1])), rat_int(6));
        assert_eq!(z_lambda(&Partition::empty()), rat_int(1));
    }

    #[test]
    fn h2_and_e2() {
        // h_2 = p_2/2 + p_1^2/2, e_2 = -p_2/2 + p_1^2/2
        let h2 = h_in_p(2);
        assert_eq!(h2.terms[&Partition::new(vec![2])], rat(1, 2));
        assert_eq!(h2.terms[&Partition::new(vec![1, 1])], rat(1, 2));
        let e2 = e_in_p(2);
        assert_eq!(e2.terms[&Partition::new(vec![2])], rat(-1, 2));
        assert_eq!(e2.terms[&Partition::new(vec![1, 1])], rat(1, 2));
    }

    #[test]
    fn h3_coefficients() {
        // h_3 = p_3/3 + p_2 p_1 / 2 + p_1^3/6
        let h3 = h_in_p(3);
        assert_eq!(h3.terms[&Partition::new(vec![3])], rat(1, 3));
        assert_eq!(h3.terms[&Partition::new(vec![2, 1])], rat(1, 2));
        assert_eq!(h3.terms[&Partition::new(vec![1, 1, 1])], rat(1, 6));
    }
}
