//! Cluster size, cluster count, the cluster partition and `Aut(L/K)`.

use serde::Serialize;

use super::pair::{ExtensionPair, RootPair};
use crate::error::{Error, Result};
use crate::permcore::{coset_action, fixed_points, normalizer, transversal, Group};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterReport {
    pub n: usize,
    /// Cluster size.
    pub r: usize,
    /// Number of clusters.
    pub s: usize,
    pub aut_order: usize,
    pub fingerprint: String,
}

/// Cluster size and count, with `r` computed as the number of fixed points,
/// as `[N_G(H):H]` and as `|Aut|`; any disagreement is an error.
pub fn cluster_report(p: &RootPair) -> Result<ClusterReport> {
    let g = p.group();
    let h = p.stabilizer();
    let n = p.degree();
    let by_fixed = fixed_points(h.as_group()).len();
    let norm = normalizer(g, h)?;
    let by_index = norm.order() / h.order();
    let aut_order = aut_group(&p.to_extension())?.order();
    if by_fixed != by_index || by_index != aut_order {
        return Err(Error::Inconsistent(format!(
            "cluster size: {by_fixed} fixed points, normalizer index {by_index}, |Aut| = {aut_order}"
        )));
    }
    let s = g.order() / norm.order();
    if by_index * s != n {
        return Err(Error::Inconsistent(format!("r·s = {} but n = {n}", by_index * s)));
    }
    Ok(ClusterReport {
        n,
        r: by_index,
        s,
        aut_order,
        fingerprint: p.fingerprint(),
    })
}

/// `[N_Γ(U):U]`, the cluster size of the fixed field of `U`.
pub fn cluster_size(e: &ExtensionPair) -> Result<usize> {
    Ok(normalizer(e.ambient(), e.sub())?.order() / e.sub().order())
}

/// `N_Γ(U)/U` acting on the cosets of `U` in its normalizer.
pub fn aut_group(e: &ExtensionPair) -> Result<Group> {
    let norm = normalizer(e.ambient(), e.sub())?.into_group();
    let u = e.sub().within(&norm)?;
    coset_action(&norm, &u)
}

/// Blocks of points sharing a stabilizer, each sorted, ordered by least point.
pub fn cluster_partition(p: &RootPair) -> Result<Vec<Vec<usize>>> {
    let base_block = fixed_points(p.stabilizer().as_group());
    let words = transversal(p.group(), p.base());
    let mut block_of = vec![usize::MAX; p.degree()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for j in 0..p.degree() {
        if block_of[j] != usize::MAX {
            continue;
        }
        let w = words[j].as_ref().expect("transitive group reaches every point");
        let mut block: Vec<usize> = base_block.iter().map(|&x| w.apply(x)).collect();
        block.sort_unstable();
        for &x in &block {
            if block_of[x] != usize::MAX {
                return Err(Error::Inconsistent("cluster blocks overlap".into()));
            }
            block_of[x] = blocks.len();
        }
        blocks.push(block);
    }
    Ok(blocks)
}
