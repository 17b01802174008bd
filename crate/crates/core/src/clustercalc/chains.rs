//! The unique descending chain (iterated normalizers) and the unique
//! ascending chain (iterated normal closures), computed in the ambient group.
//!
//! Working in `Γ` rather than in the Galois closure is harmless: the core of
//! `U` lies in every subgroup of both chains, and normalizers and normal
//! closures commute with passing to the quotient by it.

use serde::Serialize;

use super::pair::{ExtensionPair, RootPair};
use crate::error::Result;
use crate::permcore::{is_normal, normal_closure, normalizer, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Descending,
    Ascending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    /// `N(H_k) = H_k`.
    SelfNormalizing,
    /// `U^{G_k} = G_k`.
    NormallyClosed,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub direction: Direction,
    /// Increasing subgroups for the descending chain of fields, decreasing
    /// ones for the ascending chain.
    pub subgroup_chain: Vec<Subgroup>,
    /// Index of each step between consecutive subgroups.
    pub step_indices: Vec<usize>,
    pub terminal_flag: Terminal,
    /// Ascending index `[Γ:U^Γ]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// `[U^Γ:U]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    pub fingerprint: String,
}

impl ChainReport {
    pub fn len(&self) -> usize {
        self.subgroup_chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroup_chain.is_empty()
    }
}

/// `H_0 = U`, `H_{i+1} = N_Γ(H_i)` until the normalizer stops growing.
pub fn descending_chain(e: &ExtensionPair) -> Result<ChainReport> {
    let g = e.ambient();
    let mut chain = vec![e.sub().clone()];
    let mut steps = Vec::new();
    loop {
        let last = chain.last().expect("chain starts non-empty");
        let next = normalizer(g, last)?;
        if next.order() == last.order() {
            break;
        }
        steps.push(next.order() / last.order());
        chain.push(next);
    }
    Ok(ChainReport {
        direction: Direction::Descending,
        subgroup_chain: chain,
        step_indices: steps,
        terminal_flag: Terminal::SelfNormalizing,
        t: None,
        u: None,
        fingerprint: e.fingerprint(),
    })
}

/// `G_0 = Γ`, `G_{i+1} = U^{G_i}` until `U` is normally closed in `G_k`.
pub fn ascending_chain(e: &ExtensionPair) -> Result<ChainReport> {
    let u = e.sub();
    let mut chain = vec![e.ambient().as_subgroup()];
    let mut steps = Vec::new();
    loop {
        let last = chain.last().expect("chain starts non-empty").as_group().clone();
        let next = normal_closure(&last, &u.within(&last)?)?;
        if next.order() == last.order() {
            break;
        }
        steps.push(last.order() / next.order());
        chain.push(next.within(e.ambient())?);
    }
    let t = steps.first().copied().unwrap_or(1);
    let u_index = e.degree() / t;
    Ok(ChainReport {
        direction: Direction::Ascending,
        subgroup_chain: chain,
        step_indices: steps,
        terminal_flag: Terminal::NormallyClosed,
        t: Some(t),
        u: Some(u_index),
        fingerprint: e.fingerprint(),
    })
}

/// `t_K(L) = [Γ:U^Γ]`.
pub fn ascending_index(e: &ExtensionPair) -> Result<usize> {
    Ok(normal_closure(e.ambient(), e.sub())?.index())
}

/// The five equivalences and implications linking `N_G(H)` and `H^G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkRelations {
    /// `N_G(H) = G ⟺ r = n ⟺ t = n ⟺ H^G = H`.
    pub galois_equivalences: bool,
    /// `H ⊴ H^G ⟺ H^G ⊆ N_G(H)`.
    pub normal_in_closure_equivalence: bool,
    /// `N_G(H) ⊴ G ⟹ H^G ⊆ N_G(H)`.
    pub normal_normalizer_implication: bool,
    /// `H^G = N_G(H) ⟹ N_G(H) ⊲ G` and `H ⊲ H^G`, both proper.
    pub coincidence_implication: bool,
    /// `H^G = N_G(H) ⟺` descending chain is `H ⊂ N ⊂ G` and ascending chain
    /// is `G ⊃ H^G ⊃ H`.
    pub coincidence_equivalence: bool,
}

impl LinkRelations {
    pub fn all_hold(&self) -> bool {
        self.galois_equivalences
            && self.normal_in_closure_equivalence
            && self.normal_normalizer_implication
            && self.coincidence_implication
            && self.coincidence_equivalence
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct LinkProfile {
    /// `N_G(H) = H^G`.
    pub N_eq_F: bool,
    pub H_normal_in_HG: bool,
    pub NGH_normal_in_G: bool,
    pub relations: LinkRelations,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
    /// `r·t = n`, checked when `N_eq_F`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_times_t_is_n: Option<bool>,
    /// `t = s`, checked when `N_eq_F`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_equals_s: Option<bool>,
    pub fingerprint: String,
}

impl LinkProfile {
    pub fn all_hold(&self) -> bool {
        self.relations.all_hold() && self.r_times_t_is_n != Some(false) && self.t_equals_s != Some(false)
    }
}

pub fn link_profile(p: &RootPair) -> Result<LinkProfile> {
    let g = p.group();
    let h = p.stabilizer();
    let n = p.degree();
    let norm = normalizer(g, h)?;
    let closure = normal_closure(g, h)?;
    let r = norm.order() / h.order();
    let s = norm.index();
    let t = closure.index();
    let u = closure.order() / h.order();

    let n_eq_f = norm == closure;
    let h_normal_in_hg = is_normal(closure.as_group(), &h.within(closure.as_group())?)?;
    let ngh_normal_in_g = is_normal(g, &norm)?;
    let closure_in_norm = closure.is_contained_in(&norm);

    let galois = [norm.order() == g.order(), r == n, t == n, closure == *h];
    let galois_equivalences = galois.iter().all(|&b| b == galois[0]);
    let normal_in_closure_equivalence = h_normal_in_hg == closure_in_norm;
    let normal_normalizer_implication = !ngh_normal_in_g || closure_in_norm;
    // properness only makes sense for a nontrivial extension
    let coincidence_implication = !n_eq_f
        || n == 1
        || (ngh_normal_in_g && norm.order() != g.order() && h_normal_in_hg && closure.order() != h.order());

    let e = p.to_extension();
    let desc = descending_chain(&e)?;
    let asc = ascending_chain(&e)?;
    let shapes_coincide = desc.len() == 3
        && asc.len() == 3
        && desc.subgroup_chain[1] == norm
        && asc.subgroup_chain[1] == closure
        && desc.subgroup_chain[1] == asc.subgroup_chain[1];
    let coincidence_equivalence = n == 1 || n_eq_f == shapes_coincide;

    Ok(LinkProfile {
        N_eq_F: n_eq_f,
        H_normal_in_HG: h_normal_in_hg,
        NGH_normal_in_G: ngh_normal_in_g,
        relations: LinkRelations {
            galois_equivalences,
            normal_in_closure_equivalence,
            normal_normalizer_implication,
            coincidence_implication,
            coincidence_equivalence,
        },
        n,
        r,
        s,
        t,
        u,
        r_times_t_is_n: n_eq_f.then_some(r * t == n),
        t_equals_s: n_eq_f.then_some(t == s),
        fingerprint: p.fingerprint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, metacyclic, tuple_action, wreathlike};

    #[test]
    fn metacyclic_twelve_chains() {
        let e = metacyclic(12).unwrap().to_extension();
        let d = descending_chain(&e).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.step_indices, vec![2, 2]);
        let a = ascending_chain(&e).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.step_indices, vec![2, 2]);
        assert_eq!((a.t, a.u), (Some(2), Some(6)));
    }

    #[test]
    fn odd_metacyclic_chains_are_singletons() {
        let e = metacyclic(9).unwrap().to_extension();
        assert_eq!(descending_chain(&e).unwrap().len(), 1);
        let a = ascending_chain(&e).unwrap();
        assert_eq!((a.len(), a.t), (1, Some(1)));
    }

    #[test]
    fn galois_case_chains() {
        let e = RootPair::new(cyclic(6).unwrap()).unwrap().to_extension();
        let d = descending_chain(&e).unwrap();
        assert_eq!(d.step_indices, vec![6]);
        let a = ascending_chain(&e).unwrap();
        assert_eq!(a.step_indices, vec![6]);
        assert_eq!(a.t, Some(6));
    }

    #[test]
    fn degenerate_extension_has_singleton_chains() {
        let g = cyclic(4).unwrap();
        let e = ExtensionPair::new(&g, &g.as_subgroup()).unwrap();
        assert_eq!(descending_chain(&e).unwrap().len(), 1);
        let a = ascending_chain(&e).unwrap();
        assert_eq!((a.len(), a.t, a.u), (1, Some(1), Some(1)));
    }

    #[test]
    fn tuple_action_ascending_is_singleton() {
        let e = tuple_action(5, 2).unwrap().to_extension();
        let a = ascending_chain(&e).unwrap();
        assert_eq!((a.len(), a.t), (1, Some(1)));
    }

    #[test]
    fn wreathlike_chains_coincide() {
        let p = wreathlike(2, 3).unwrap();
        let lp = link_profile(&p).unwrap();
        assert!(lp.N_eq_F);
        assert!(lp.all_hold());
        assert_eq!((lp.r, lp.t, lp.s), (2, 3, 3));
    }

    #[test]
    fn fourth_root_of_two() {
        let lp = link_profile(&metacyclic(4).unwrap()).unwrap();
        assert!(lp.N_eq_F);
        assert!(lp.all_hold());
    }

    #[test]
    fn galois_pair_profile() {
        let lp = link_profile(&RootPair::new(cyclic(5).unwrap()).unwrap()).unwrap();
        assert!(!lp.N_eq_F);
        assert_eq!((lp.r, lp.t), (5, 5));
        assert!(lp.all_hold());
    }
}
