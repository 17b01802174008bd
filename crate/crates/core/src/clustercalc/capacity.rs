//! Root capacity `ρ_K(M, L)` in the coset model: the roots of `L` are the left
//! cosets `σU_L`, and such a root lies in `M` iff `U_M ⊆ σU_Lσ⁻¹`.

use serde::Serialize;

use super::pair::fingerprint_many;
use crate::error::{Error, Result};
use crate::permcore::{check_parent, core, coset_reps, is_normal, join, normalizer, CosetTable, Group, Permutation, Subgroup};

#[derive(Debug, Clone, Serialize)]
pub struct CapacityReport {
    pub rho: usize,
    /// Number of clusters of `L` inside `M`.
    pub a: usize,
    /// Cluster size of `L`.
    pub r: usize,
    /// Number of clusters of `L`.
    pub s: usize,
    /// `T`, the subgroup fixing the field generated by the roots of `L` in `M`.
    pub support_subgroup: Subgroup,
    /// 1-based indices of the clusters lying in `M`.
    pub witness_cosets: Vec<usize>,
    pub fingerprint: String,
}

/// Checks `U_M ≤ U_L ≤ Γ`.
pub(crate) fn check_tower(g: &Group, u_m: &Subgroup, u_l: &Subgroup) -> Result<()> {
    check_parent(g, u_m)?;
    check_parent(g, u_l)?;
    if !u_m.is_contained_in(u_l) {
        return Err(Error::NotAnExtension);
    }
    Ok(())
}

fn holds_conjugate(sigma: &Permutation, u_m: &Subgroup, u_l: &Subgroup) -> bool {
    let inv = sigma.inverse();
    u_m.generators().iter().all(|m| u_l.contains(&inv.conjugate(m)))
}

/// `ρ` counted root by root, with `a` and the witness clusters counted
/// separately over the cluster representatives.
pub fn root_capacity(g: &Group, u_m: &Subgroup, u_l: &Subgroup) -> Result<CapacityReport> {
    check_tower(g, u_m, u_l)?;
    let u_l = u_l.within(g)?;
    let u_m = u_m.within(g)?;
    let roots = CosetTable::new(g, &u_l)?;
    let rho = roots.reps.iter().filter(|s| holds_conjugate(s, &u_m, &u_l)).count();

    let norm = normalizer(g, &u_l)?;
    let r = norm.order() / u_l.order();
    let cluster_reps = coset_reps(g, &norm)?;
    let mut witness = Vec::new();
    let mut support: Vec<Permutation> = g.elements().to_vec();
    for (i, sigma) in cluster_reps.iter().enumerate() {
        if holds_conjugate(sigma, &u_m, &u_l) {
            witness.push(i + 1);
            let inv = sigma.inverse();
            support.retain(|x| u_l.contains(&inv.conjugate(x)));
        }
    }
    let a = witness.len();
    if rho != a * r {
        return Err(Error::Inconsistent(format!("ρ = {rho} but a·r = {a}·{r}")));
    }
    Ok(CapacityReport {
        rho,
        a,
        r,
        s: cluster_reps.len(),
        support_subgroup: Subgroup::from_sorted_unchecked(g, support),
        witness_cosets: witness,
        fingerprint: fingerprint_many(g, &[&u_m, &u_l]),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HintCheck {
    /// `M ∩ L̃ = L`, tested as `⟨U_M, core(U_L)⟩ = U_L`.
    pub intersection_condition: bool,
    /// `[M:L]·r_K(L) = r_K(M)`.
    pub degree_condition: bool,
    pub hypotheses_hold: bool,
    /// `U_M ⊴ U_L`, evaluated only when both hypotheses hold.
    pub conclusion: Option<bool>,
}

/// Whether `M/L` is Galois whenever `M ∩ L̃ = L` and `[M:L] = r_K(M)/r_K(L)`.
pub fn hint_check(g: &Group, u_m: &Subgroup, u_l: &Subgroup) -> Result<HintCheck> {
    check_tower(g, u_m, u_l)?;
    let u_l = u_l.within(g)?;
    let u_m = u_m.within(g)?;
    let closure_core = core(g, &u_l)?;
    let intersection_condition = join(&u_m, &closure_core)? == u_l;
    let r_l = normalizer(g, &u_l)?.order() / u_l.order();
    let r_m = normalizer(g, &u_m)?.order() / u_m.order();
    let degree_condition = (u_l.order() / u_m.order()) * r_l == r_m;
    let hypotheses_hold = intersection_condition && degree_condition;
    let conclusion = if hypotheses_hold {
        Some(is_normal(u_l.as_group(), &u_m.within(u_l.as_group())?)?)
    } else {
        None
    };
    Ok(HintCheck {
        intersection_condition,
        degree_condition,
        hypotheses_hold,
        conclusion,
    })
}
