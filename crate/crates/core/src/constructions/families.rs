//! Explicit transitive groups used throughout the calculus.

use std::collections::HashMap;

use super::arith::gcd;
use crate::clustercalc::RootPair;
use crate::error::{Error, Result};
use crate::permcore::{Group, Limits, Permutation};

fn perm(degree: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_fn(degree, f).expect("constructor builds bijections")
}

/// Units of `Z/n` that generate the unit group, found greedily in
/// increasing order.
pub fn unit_generators(n: u64) -> Vec<u64> {
    let mut gens = Vec::new();
    let mut reached = vec![false; n as usize];
    reached[1 % n as usize] = true;
    for u in 2..n {
        if gcd(u, n) != 1 || reached[u as usize] {
            continue;
        }
        gens.push(u);
        // multiplicative closure of everything reached so far by the new unit
        let mut frontier: Vec<u64> = (0..n).filter(|&x| reached[x as usize]).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = (x * g) % n;
                if !reached[y as usize] {
                    reached[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

/// `Z/n ⋊ (Z/n)^×` acting on `Z/n` by `j ↦ α + u·j`; point `j` stands for the
/// root `a·b^j` of `x^n - c`.
pub fn metacyclic(n: usize) -> Result<RootPair> {
    metacyclic_with(n, Limits::default())
}

pub fn metacyclic_with(n: usize, limits: Limits) -> Result<RootPair> {
    if n < 3 {
        return Err(Error::BadParameter(format!("metacyclic needs n >= 3, got {n}")));
    }
    let mut gens = vec![perm(n, |j| (j + 1) % n)];
    for u in unit_generators(n as u64) {
        gens.push(perm(n, |j| (u as usize * j) % n));
    }
    RootPair::new(Group::generate_with(n, gens, limits)?)
}

/// `(Z/r)^s ⋊ Z/s` on `s` packets of `r` points; point `p·r + i` is entry `i`
/// of packet `p`.
pub fn wreathlike(r: usize, s: usize) -> Result<RootPair> {
    wreathlike_with(r, s, Limits::default())
}

pub fn wreathlike_with(r: usize, s: usize, limits: Limits) -> Result<RootPair> {
    if r == 0 || s == 0 || r * s < 3 {
        return Err(Error::BadParameter(format!(
            "wreathlike needs r, s >= 1 and rs >= 3, got r={r}, s={s}"
        )));
    }
    let n = r * s;
    let mut gens = Vec::new();
    if r > 1 {
        for p in 0..s {
            gens.push(perm(n, |x| {
                if x / r == p {
                    p * r + (x % r + 1) % r
                } else {
                    x
                }
            }));
        }
    }
    if s > 1 {
        gens.push(perm(n, |x| ((x / r + 1) % s) * r + x % r));
    }
    RootPair::new(Group::generate_with(n, gens, limits)?)
}

/// Ordered `k`-tuples of distinct points of `{0..n-1}`, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                extend(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `S_n` acting coordinatewise on ordered `k`-tuples; point 0 is `(0,..,k-1)`.
pub fn tuple_action(n: usize, k: usize) -> Result<RootPair> {
    tuple_action_with(n, k, Limits::default())
}

pub fn tuple_action_with(n: usize, k: usize, limits: Limits) -> Result<RootPair> {
    if n < 3 || k == 0 || k + 2 > n {
        return Err(Error::BadParameter(format!(
            "tuple action needs n >= 3 and 1 <= k <= n-2, got n={n}, k={k}"
        )));
    }
    let degree = (n - k + 1..=n).try_fold(1usize, |acc, x| acc.checked_mul(x));
    match degree {
        Some(d) => limits.check_degree(d)?,
        None => {
            return Err(Error::GroupTooLarge {
                cap: limits.max_degree,
                what: "points",
            })
        }
    }
    let points = tuples(n, k);
    let index: HashMap<&[usize], usize> = points.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let lift = |sigma: &Permutation| {
        perm(points.len(), |i| {
            let image: Vec<usize> = points[i].iter().map(|&x| sigma.apply(x)).collect();
            index[image.as_slice()]
        })
    };
    let gens = symmetric_generators(n).iter().map(lift).collect();
    RootPair::new(Group::generate_with(points.len(), gens, limits)?)
}

fn symmetric_generators(n: usize) -> Vec<Permutation> {
    if n == 1 {
        return vec![];
    }
    vec![perm(n, |x| [1, 0].get(x).copied().unwrap_or(x)), perm(n, |x| (x + 1) % n)]
}

/// Natural action of `S_n`.
pub fn symmetric(n: usize) -> Result<Group> {
    symmetric_with(n, Limits::default())
}

pub fn symmetric_with(n: usize, limits: Limits) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParameter("symmetric needs n >= 1".into()));
    }
    Group::generate_with(n, symmetric_generators(n), limits)
}

/// Natural action of `A_n`, `n >= 3`.
pub fn alternating(n: usize) -> Result<Group> {
    alternating_with(n, Limits::default())
}

pub fn alternating_with(n: usize, limits: Limits) -> Result<Group> {
    if n < 3 {
        return Err(Error::BadParameter(format!("alternating needs n >= 3, got {n}")));
    }
    let three = perm(n, |x| match x {
        0 => 1,
        1 => 2,
        2 => 0,
        _ => x,
    });
    let long = if n % 2 == 1 {
        perm(n, |x| (x + 1) % n)
    } else {
        perm(n, |x| if x == 0 { 0 } else { x % (n - 1) + 1 })
    };
    Group::generate_with(n, vec![three, long], limits)
}

/// Regular action of `Z/n` on itself.
pub fn cyclic(n: usize) -> Result<Group> {
    cyclic_with(n, Limits::default())
}

pub fn cyclic_with(n: usize, limits: Limits) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic needs n >= 1".into()));
    }
    Group::generate_with(n, vec![perm(n, |x| (x + 1) % n)], limits)
}

/// Regular action of `Z/2 × Z/2` on four points.
pub fn klein() -> Group {
    Group::generate(4, vec![perm(4, |x| x ^ 1), perm(4, |x| x ^ 2)]).expect("four points")
}
