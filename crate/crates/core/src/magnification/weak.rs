use serde::Serialize;

use crate::clustercalc::{check_tower, cluster_size, ExtensionPair};
use crate::error::Result;
use crate::permcore::{Group, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakMagnification {
    pub holds: bool,
    pub r_m: usize,
    pub r_l: usize,
    /// `r_m / r_l` when it divides.
    pub factor: Option<usize>,
}

/// `r_K(L) | r_K(M)` for `U_M ≤ U_L ≤ Γ`.
pub fn is_weak_magnification(g: &Group, u_m: &Subgroup, u_l: &Subgroup) -> Result<WeakMagnification> {
    check_tower(g, u_m, u_l)?;
    let r_m = cluster_size(&ExtensionPair::new(g, u_m)?)?;
    let r_l = cluster_size(&ExtensionPair::new(g, u_l)?)?;
    let holds = r_m % r_l == 0;
    Ok(WeakMagnification {
        holds,
        r_m,
        r_l,
        factor: holds.then_some(r_m / r_l),
    })
}
