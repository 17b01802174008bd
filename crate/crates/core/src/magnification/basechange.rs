//! Base change along a Galois extension `K'/K` linearly disjoint from `L̃`,
//! modelled inside `Γ = G × R` with `K'` the fixed field of `G × 1`.
//!
//! A subgroup `U` between `H` and `G` stands for a subfield of `L`; over `K` it
//! is `U × R ≤ Γ`, and its base change over `K'` is `U × 1 ≤ G × 1`.

use serde::Serialize;

use super::weak::is_weak_magnification;
use crate::clustercalc::{
    ascending_chain, ascending_index, cluster_report, cluster_size, descending_chain, root_capacity, ChainReport,
    ExtensionPair, RootPair,
};
use crate::error::Result;
use crate::permcore::{intermediate_subgroups, intersect, is_normal, DirectProduct, Group, Subgroup};

/// Largest `[G:H]` for which every intermediate subgroup is swept.
pub const EXHAUSTIVE_INDEX: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseChangeReport {
    pub galois_preserved: bool,
    pub cluster_size: bool,
    pub descending_chain: bool,
    pub ascending_chain: bool,
    pub root_capacity: bool,
    pub ascending_index: bool,
    pub weak_magnification: bool,
    /// Number of subgroups between `H` and `G` compared.
    pub subgroups_checked: usize,
    /// False when only the chain subgroups were compared.
    pub exhaustive: bool,
    pub all_pass: bool,
    pub fingerprint: String,
}

struct Model {
    product: DirectProduct,
    top: Group,
    left: Subgroup,
}

impl Model {
    /// `U × R` in `Γ`.
    fn over_base(&self, u: &Subgroup) -> Result<Subgroup> {
        self.product.product_of(u, &self.product.right().as_subgroup())
    }

    /// `U × 1` in `G × 1`.
    fn over_extension(&self, u: &Subgroup) -> Result<Subgroup> {
        self.product.embed_left_subgroup(u)?.within(&self.top)
    }

    fn chains_match(&self, over_k: &ChainReport, over_kp: &ChainReport) -> Result<bool> {
        if over_k.len() != over_kp.len() {
            return Ok(false);
        }
        for (x, y) in over_k.subgroup_chain.iter().zip(&over_kp.subgroup_chain) {
            if intersect(x, &self.left)? != *y {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sweep_subgroups(p: &RootPair) -> Result<(Vec<Subgroup>, bool)> {
    let g = p.group();
    let h = p.stabilizer();
    if h.index() <= EXHAUSTIVE_INDEX {
        return Ok((intermediate_subgroups(g, h)?, true));
    }
    let e = p.to_extension();
    let mut subs: Vec<Subgroup> = Vec::new();
    for s in descending_chain(&e)?
        .subgroup_chain
        .into_iter()
        .chain(ascending_chain(&e)?.subgroup_chain)
        .chain([g.as_subgroup()])
    {
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    Ok((subs, false))
}

/// Checks, field by field, that passing from `K` to `K'` preserves Galois
/// groups, cluster sizes, both unique chains, root capacities, the ascending
/// index and weak magnification.
pub fn base_change_verify(p: &RootPair, r: &Group) -> Result<BaseChangeReport> {
    let product = DirectProduct::new(p.group(), r)?;
    let left = product.left_factor();
    let model = Model {
        top: left.as_group().clone(),
        left,
        product,
    };
    let gamma = model.product.group.clone();
    let (subs, exhaustive) = sweep_subgroups(p)?;

    let mut galois = true;
    let mut clusters = true;
    let mut desc = true;
    let mut asc = true;
    let mut t_ok = true;
    let mut lifted = Vec::with_capacity(subs.len());
    for u in &subs {
        let (uk, ukp) = (model.over_base(u)?, model.over_extension(u)?);
        let ek = ExtensionPair::new(&gamma, &uk)?;
        let ekp = ExtensionPair::new(&model.top, &ukp)?;
        let (rk, rkp) = (ek.reduce()?, ekp.reduce()?);
        galois &= is_normal(&gamma, &uk)? == is_normal(&model.top, &ukp)?
            && rk.degree() == rkp.degree()
            && rk.group().order() == rkp.group().order();
        clusters &= cluster_size(&ek)? == cluster_size(&ekp)?;
        desc &= model.chains_match(&descending_chain(&ek)?, &descending_chain(&ekp)?)?;
        asc &= model.chains_match(&ascending_chain(&ek)?, &ascending_chain(&ekp)?)?;
        t_ok &= ascending_index(&ek)? == ascending_index(&ekp)?;
        lifted.push((uk, ukp));
    }
    // the original pair itself, against its own cluster report
    let ek = ExtensionPair::new(&gamma, &model.over_base(p.stabilizer())?)?;
    clusters &= cluster_size(&ek)? == cluster_report(p)?.r;

    // M ranges over the swept subfields and L̃; L over the swept subfields
    let trivial = Subgroup::trivial(p.group());
    let mut lower = vec![(model.over_base(&trivial)?, model.over_extension(&trivial)?)];
    lower.extend(lifted.iter().cloned());
    let mut capacity = true;
    let mut weak = true;
    for (mk, mkp) in &lower {
        for (lk, lkp) in &lifted {
            if !mk.is_contained_in(lk) {
                continue;
            }
            capacity &= root_capacity(&gamma, mk, lk)?.rho == root_capacity(&model.top, mkp, lkp)?.rho;
            weak &= is_weak_magnification(&gamma, mk, lk)? == is_weak_magnification(&model.top, mkp, lkp)?;
        }
    }

    let all_pass = galois && clusters && desc && asc && capacity && t_ok && weak;
    Ok(BaseChangeReport {
        galois_preserved: galois,
        cluster_size: clusters,
        descending_chain: desc,
        ascending_chain: asc,
        root_capacity: capacity,
        ascending_index: t_ok,
        weak_magnification: weak,
        subgroups_checked: subs.len(),
        exhaustive,
        all_pass,
        fingerprint: p.fingerprint(),
    })
}
