//! Strong cluster magnification: the product construction and its detection
//! as an internal direct decomposition `G' = A × B` with `H' ≤ A`.

use serde::Serialize;

use crate::clustercalc::{ascending_chain, descending_chain, ExtensionPair, RootPair};
use crate::error::{Error, Result};
use crate::permcore::{intersect, join, normal_subgroups, DirectProduct, Group, Subgroup};

/// Passes to the Galois closure: `Γ/core(U)` acting on the cosets of `U`.
pub fn to_galois_pair(e: &ExtensionPair) -> Result<RootPair> {
    e.reduce()
}

/// `Γ = G × R` with `U_M = H × 1` and `U_L = H × R`.
#[derive(Debug, Clone)]
pub struct Magnified {
    pub product: DirectProduct,
    pub u_m: Subgroup,
    pub u_l: Subgroup,
}

impl Magnified {
    pub fn new(p: &RootPair, r: &Group) -> Result<Magnified> {
        let product = DirectProduct::new(p.group(), r)?;
        let u_m = product.embed_left_subgroup(p.stabilizer())?;
        let u_l = product.product_of(p.stabilizer(), &r.as_subgroup())?;
        Ok(Magnified { product, u_m, u_l })
    }

    pub fn ambient(&self) -> &Group {
        &self.product.group
    }
}

/// The compositum of `L` with a Galois extension of group `R` disjoint from
/// `L̃`, as a faithful pair of degree `n·|R|`.
pub fn magnify(p: &RootPair, r: &Group) -> Result<RootPair> {
    if p.degree() <= 2 {
        return Err(Error::DegreeTooSmall(p.degree()));
    }
    let m = Magnified::new(p, r)?;
    to_galois_pair(&ExtensionPair::new(m.ambient(), &m.u_m)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub found: bool,
    #[serde(rename = "A")]
    pub a: Subgroup,
    #[serde(rename = "B")]
    pub b: Subgroup,
    #[serde(rename = "A_prime")]
    pub a_prime: Subgroup,
    /// `⟨A', B⟩`, the subgroup of the magnified-from field.
    #[serde(rename = "L_subgroup")]
    pub l_subgroup: Subgroup,
    /// `A`, the subgroup of the Galois factor.
    #[serde(rename = "F_subgroup")]
    pub f_subgroup: Subgroup,
    pub magnification_factor: usize,
    pub fingerprint: String,
}

fn commute(a: &Subgroup, b: &Subgroup) -> bool {
    a.generators()
        .iter()
        .all(|x| b.generators().iter().all(|y| x.commutes_with(y)))
}

/// Every internal decomposition `G' = A × B` into nontrivial normal subgroups
/// with `H' ≤ A` and `[A:H'] > 2`, in canonical order of `(A, B)`.
pub fn detect_strong_magnification(p: &RootPair) -> Result<Vec<DecompositionReport>> {
    let g = p.group();
    let h = p.stabilizer();
    let normals = normal_subgroups(g)?;
    let fingerprint = p.fingerprint();
    let mut out = Vec::new();
    for a in &normals {
        if a.is_trivial() || !h.is_contained_in(a) || a.order() / h.order() <= 2 {
            continue;
        }
        for b in &normals {
            if b.is_trivial() || a.order() * b.order() != g.order() {
                continue;
            }
            if !intersect(a, b)?.is_trivial() || !commute(a, b) {
                continue;
            }
            let a_prime = h.within(g)?;
            out.push(DecompositionReport {
                found: true,
                l_subgroup: join(&a_prime, b)?,
                f_subgroup: a.clone(),
                magnification_factor: b.order(),
                a: a.clone(),
                b: b.clone(),
                a_prime,
                fingerprint: fingerprint.clone(),
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongChainReport {
    pub descending: bool,
    pub ascending: bool,
    /// `t_K(M) = |R|·t_K(L)`.
    pub t_multiplied: bool,
    /// `u_K(M) = u_K(L)`.
    pub u_preserved: bool,
    pub all_pass: bool,
}

/// Compares the chains of `M = LF` and `L` inside `G × R`.
pub fn strong_chain_correspondence(p: &RootPair, r: &Group) -> Result<StrongChainReport> {
    let m = Magnified::new(p, r)?;
    let gamma = m.ambient();
    let left = m.product.left_factor();
    let em = ExtensionPair::new(gamma, &m.u_m)?;
    let el = ExtensionPair::new(gamma, &m.u_l)?;
    let (desc_m, desc_l) = (descending_chain(&em)?, descending_chain(&el)?);
    let (asc_m, asc_l) = (ascending_chain(&em)?, ascending_chain(&el)?);

    let descending = if r.is_trivial() {
        desc_m.subgroup_chain == desc_l.subgroup_chain
    } else if desc_l.len() > 1 {
        desc_m.len() == desc_l.len() && desc_m.subgroup_chain[1..] == desc_l.subgroup_chain[1..]
    } else {
        desc_m.subgroup_chain == vec![m.u_m.clone(), m.u_l.clone()]
    };

    let ascending = if r.is_trivial() {
        asc_m.subgroup_chain == asc_l.subgroup_chain
    } else if asc_l.len() > 1 {
        let mut ok = asc_m.len() == asc_l.len() && asc_m.subgroup_chain[0] == asc_l.subgroup_chain[0];
        for (x, y) in asc_m.subgroup_chain.iter().zip(&asc_l.subgroup_chain).skip(1) {
            ok &= *x == intersect(y, &left)?;
        }
        ok
    } else {
        asc_m.subgroup_chain == vec![gamma.as_subgroup(), left.clone()]
    };

    let t_multiplied = asc_m.t.zip(asc_l.t).is_some_and(|(tm, tl)| tm == r.order() * tl);
    let u_preserved = asc_m.u == asc_l.u;
    Ok(StrongChainReport {
        descending,
        ascending,
        t_multiplied,
        u_preserved,
        all_pass: descending && ascending && t_multiplied && u_preserved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustercalc::cluster_report;
    use crate::constructions::{alternating, cyclic, metacyclic, wreathlike};

    #[test]
    fn magnify_wreathlike_by_two() {
        let p = wreathlike(3, 2).unwrap();
        let q = magnify(&p, &cyclic(2).unwrap()).unwrap();
        let c = cluster_report(&q).unwrap();
        assert_eq!((c.n, c.r, c.s), (12, 6, 2));
    }

    #[test]
    fn trivial_magnification_keeps_invariants() {
        let p = metacyclic(12).unwrap();
        let q = magnify(&p, &Group::trivial(1)).unwrap();
        let (a, b) = (cluster_report(&p).unwrap(), cluster_report(&q).unwrap());
        assert_eq!((a.n, a.r, a.s), (b.n, b.r, b.s));
    }

    #[test]
    fn small_degree_is_refused() {
        let p = RootPair::new(cyclic(2).unwrap()).unwrap();
        assert_eq!(magnify(&p, &cyclic(3).unwrap()).unwrap_err(), Error::DegreeTooSmall(2));
    }

    #[test]
    fn detect_recovers_the_construction() {
        let p = wreathlike(3, 2).unwrap();
        let q = magnify(&p, &cyclic(2).unwrap()).unwrap();
        let found = detect_strong_magnification(&q).unwrap();
        assert!(found.iter().any(|d| d.magnification_factor == 2));
        for d in &found {
            assert!(d.found);
            let back = ExtensionPair::new(q.group(), &d.l_subgroup).unwrap().reduce().unwrap();
            assert_eq!(back.degree() * d.magnification_factor, q.degree());
        }
    }

    #[test]
    fn primitive_examples() {
        assert!(detect_strong_magnification(&metacyclic(4).unwrap()).unwrap().is_empty());
        let a5 = RootPair::new(alternating(5).unwrap()).unwrap();
        assert!(detect_strong_magnification(&a5).unwrap().is_empty());
    }

    #[test]
    fn chain_correspondence_on_small_cases() {
        for p in [wreathlike(2, 3).unwrap(), metacyclic(12).unwrap(), metacyclic(9).unwrap()] {
            for r in [cyclic(2).unwrap(), cyclic(3).unwrap(), Group::trivial(1)] {
                let rep = strong_chain_correspondence(&p, &r).unwrap();
                assert!(rep.all_pass, "{rep:?}");
            }
        }
    }
}
