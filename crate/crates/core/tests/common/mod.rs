//! Brute-force oracles over raw image vectors, sharing nothing with the
//! library beyond reading element lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rootcluster::constructions::{metacyclic, symmetric, wreathlike};
use rootcluster::{Group, Limits, Permutation, RootPair, Subgroup};

pub type P = Vec<u32>;

/// `a ∘ b`.
pub fn mul(a: &P, b: &P) -> P {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn inv(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

/// `x h x⁻¹`.
pub fn conj(x: &P, h: &P) -> P {
    mul(&mul(x, h), &inv(x))
}

pub fn elems(g: &Group) -> Vec<P> {
    g.elements().iter().map(|p| p.images().to_vec()).collect()
}

pub fn sub_elems(h: &Subgroup) -> Vec<P> {
    h.elements().iter().map(|p| p.images().to_vec()).collect()
}

pub fn set(v: &[P]) -> HashSet<P> {
    v.iter().cloned().collect()
}

pub fn sorted(v: &[P]) -> BTreeSet<P> {
    v.iter().cloned().collect()
}

/// Closure of `gens` under multiplication.
pub fn closure(degree: usize, gens: &[P]) -> Vec<P> {
    let id: P = (0..degree as u32).collect();
    let mut seen: HashSet<P> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = mul(g, &x);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// A generating set picked greedily from the element list.
pub fn generators(h: &[P]) -> Vec<P> {
    let degree = h[0].len();
    let mut gens: Vec<P> = Vec::new();
    let mut span: HashSet<P> = set(&closure(degree, &gens));
    for x in h {
        if !span.contains(x) {
            gens.push(x.clone());
            span = set(&closure(degree, &gens));
        }
    }
    gens
}

pub fn normalizer(g: &[P], h: &[P]) -> Vec<P> {
    let hs = set(h);
    let gens = generators(h);
    g.iter().filter(|x| gens.iter().all(|y| hs.contains(&conj(x, y)))).cloned().collect()
}

pub fn is_normal(big: &[P], small: &[P]) -> bool {
    normalizer(big, small).len() == big.len()
}

/// Smallest subgroup containing `h` and closed under conjugation by `g`.
pub fn normal_closure(g: &[P], h: &[P]) -> Vec<P> {
    let degree = g[0].len();
    let outer = generators(g);
    let mut gens = generators(h);
    loop {
        let span = closure(degree, &gens);
        let members = set(&span);
        let fresh: Vec<P> = outer
            .iter()
            .flat_map(|x| gens.iter().map(move |y| conj(x, y)))
            .filter(|c| !members.contains(c))
            .collect();
        match fresh.into_iter().next() {
            Some(c) => gens.push(c),
            None => return span,
        }
    }
}

pub fn core(g: &[P], h: &[P]) -> Vec<P> {
    let mut out = set(h);
    for x in g {
        let c: HashSet<P> = h.iter().map(|y| conj(x, y)).collect();
        out.retain(|y| c.contains(y));
    }
    out.into_iter().collect()
}

pub fn intersect(a: &[P], b: &[P]) -> Vec<P> {
    let bs = set(b);
    a.iter().filter(|x| bs.contains(*x)).cloned().collect()
}

pub fn join(a: &[P], b: &[P]) -> Vec<P> {
    let degree = a[0].len();
    let gens: Vec<P> = a.iter().chain(b).cloned().collect();
    closure(degree, &gens)
}

pub fn fixed_count(h: &[P], degree: usize) -> usize {
    (0..degree).filter(|&i| h.iter().all(|x| x[i] as usize == i)).count()
}

/// Cosets `σU_L` with `U_M ⊆ σU_Lσ⁻¹`, and the intersection `T` of those
/// conjugates (`Γ` when there are none).
pub fn capacity(g: &[P], u_m: &[P], u_l: &[P]) -> (usize, Vec<P>) {
    let ls = set(u_l);
    let mut hits = 0;
    let mut t: HashSet<P> = set(g);
    for s in g {
        let si = inv(s);
        if u_m.iter().all(|m| ls.contains(&conj(&si, m))) {
            hits += 1;
            let c: HashSet<P> = u_l.iter().map(|y| conj(s, y)).collect();
            t.retain(|y| c.contains(y));
        }
    }
    (hits / u_l.len(), t.into_iter().collect())
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn v2(mut n: usize) -> usize {
    let mut v = 0;
    while n.is_multiple_of(2) {
        n /= 2;
        v += 1;
    }
    v
}

/// Faithful transitive pairs with `|G| ≤ max_order`, drawn as subgroups of
/// a few ambient groups generated by random elements, relabelled at random.
pub fn random_pairs(rng: &mut ChaCha8Rng, count: usize, max_order: usize) -> Vec<RootPair> {
    let pool: Vec<Group> = vec![
        symmetric(4).unwrap(),
        symmetric(5).unwrap(),
        symmetric(6).unwrap(),
        symmetric(7).unwrap(),
        wreathlike(2, 4).unwrap().group().clone(),
        wreathlike(3, 3).unwrap().group().clone(),
        wreathlike(2, 5).unwrap().group().clone(),
        metacyclic(15).unwrap().group().clone(),
        metacyclic(16).unwrap().group().clone(),
    ];
    let limits = Limits {
        max_order,
        ..Limits::default()
    };
    let mut out = Vec::new();
    while out.len() < count {
        let ambient = &pool[rng.gen_range(0..pool.len())];
        let n = ambient.degree();
        let mut relabel: Vec<u32> = (0..n as u32).collect();
        relabel.shuffle(rng);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Permutation> = (0..k)
            .map(|_| {
                let x = ambient.elements()[rng.gen_range(0..ambient.order())].images().to_vec();
                Permutation::new(conj(&relabel, &x)).unwrap()
            })
            .collect();
        let Ok(g) = Group::generate_with(n, gens, limits) else {
            continue;
        };
        if let Ok(p) = RootPair::with_base(g, rng.gen_range(0..n)) {
            out.push(p);
        }
    }
    out
}
