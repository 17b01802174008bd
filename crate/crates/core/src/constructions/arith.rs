//! Trial-division arithmetic and the totient identities used by cluster towers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

pub fn phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// `p`-adic valuation.
pub fn valuation(n: u64, p: u64) -> u32 {
    factorize(n).get(&p).copied().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArithProfile {
    pub n: u64,
    pub factorization: BTreeMap<u64, u32>,
    pub phi: u64,
    pub v2: u32,
}

pub fn arith(n: u64) -> Result<ArithProfile> {
    if n == 0 {
        return Err(Error::BadParameter("n must be positive".into()));
    }
    let factorization = factorize(n);
    Ok(ArithProfile {
        n,
        phi: phi(n),
        v2: factorization.get(&2).copied().unwrap_or(0),
        factorization,
    })
}

/// The four totient relations for `l | n`, `n = l·m`, with `k` the part of `n`
/// coprime to `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerChecks {
    pub n: u64,
    pub l: u64,
    pub m: u64,
    pub k: u64,
    pub phi_n: u64,
    pub phi_l: u64,
    /// `φ(n)·k = φ(l)·m·φ(k)`.
    pub ratio_identity: bool,
    pub k_divides_m: bool,
    pub phi_l_divides_phi_n: bool,
    pub phi_equal: bool,
    /// `n = l`, or `l` odd and `n = 2l`.
    pub phi_equal_predicted: bool,
    pub same_prime_support: bool,
    /// `φ(n)/φ(l) = m`.
    pub ratio_is_m: bool,
}

impl EulerChecks {
    /// Every relation holds, including both equivalences.
    pub fn all_hold(&self) -> bool {
        self.ratio_identity
            && self.k_divides_m
            && self.phi_l_divides_phi_n
            && self.phi_equal == self.phi_equal_predicted
            && self.ratio_is_m == self.same_prime_support
    }
}

pub fn euler_checks(n: u64, l: u64) -> Result<EulerChecks> {
    if n == 0 || l == 0 || !n.is_multiple_of(l) {
        return Err(Error::BadParameter(format!("need l | n with both positive, got n={n}, l={l}")));
    }
    let m = n / l;
    let fl = factorize(l);
    let fnn = factorize(n);
    let k: u64 = fnn
        .iter()
        .filter(|(p, _)| !fl.contains_key(p))
        .map(|(p, &e)| p.pow(e))
        .product();
    let (phi_n, phi_l) = (phi(n), phi(l));
    Ok(EulerChecks {
        n,
        l,
        m,
        k,
        phi_n,
        phi_l,
        ratio_identity: phi_n * k == phi_l * m * phi(k),
        k_divides_m: m.is_multiple_of(k),
        phi_l_divides_phi_n: phi_n % phi_l == 0,
        phi_equal: phi_n == phi_l,
        phi_equal_predicted: n == l || (l % 2 == 1 && n == 2 * l),
        same_prime_support: fnn.keys().eq(fl.keys()),
        ratio_is_m: phi_n == m * phi_l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn arith_of_twelve() {
        let a = arith(12).unwrap();
        assert_eq!((a.phi, a.v2), (4, 2));
        assert_eq!(a.factorization, BTreeMap::from([(2, 2), (3, 1)]));
        assert_eq!(arith(1).unwrap().phi, 1);
    }

    #[test]
    fn euler_nine_three() {
        let e = euler_checks(9, 3).unwrap();
        assert_eq!((e.phi_l, e.phi_n), (2, 6));
        assert!(e.phi_l_divides_phi_n);
        assert!(!e.phi_equal);
        assert!(e.all_hold());
    }

    #[test]
    fn euler_rejects_non_divisor() {
        assert!(matches!(euler_checks(9, 2), Err(Error::BadParameter(_))));
    }

    proptest! {
        #[test]
        fn phi_matches_counting(n in 1u64..400) {
            prop_assert_eq!(phi(n), naive_phi(n));
            let f = factorize(n);
            prop_assert_eq!(f.iter().map(|(p, &e)| p.pow(e)).product::<u64>(), n);
        }

        #[test]
        fn euler_relations_hold(l in 1u64..60, m in 1u64..20) {
            let e = euler_checks(l * m, l).unwrap();
            prop_assert!(e.all_hold(), "{:?}", e);
        }

        #[test]
        fn doubling_odd_keeps_phi(l in (0u64..100).prop_map(|x| 2 * x + 1)) {
            prop_assert!(euler_checks(2 * l, l).unwrap().phi_equal);
        }
    }
}
