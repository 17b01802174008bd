//! Cluster towers `K ⊂ K(β_1) ⊂ K(β_1, β_2) ⊂ …` in their group form: the
//! running intersections `J_m` of the stabilizers of the representatives.

use std::collections::BTreeMap;

use serde::Serialize;

use super::cluster::cluster_partition;
use super::pair::RootPair;
use crate::error::{Error, Result};
use crate::permcore::{fixed_points, Permutation};

/// Largest cluster count accepted by [`tower_sweep`].
pub const MAX_SWEEP_CLUSTERS: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    /// Representatives, 1-based.
    pub ordering: Vec<usize>,
    /// The 1-based indices `m > 1` at which `J_m` shrinks.
    pub jump_indices: Vec<usize>,
    /// `n`, then `[G:J_m]` at each jump.
    pub degree_sequence: Vec<usize>,
    /// Number of distinct fields in the tower, `K` included.
    pub length: usize,
    /// `n·∏(n - (m_i - 1)·r)`, saturating.
    pub order_bound: u64,
    pub bound_holds: bool,
    pub fingerprint: String,
}

fn order_bound(n: usize, r: usize, jumps: &[usize]) -> u64 {
    jumps.iter().fold(n as u64, |acc, &m| {
        let factor = n.saturating_sub((m - 1) * r) as u64;
        acc.saturating_mul(factor)
    })
}

/// Checks that `ordering` picks exactly one point from each block.
fn check_ordering(blocks: &[Vec<usize>], n: usize, ordering: &[usize]) -> Result<()> {
    let mut block_of = vec![0; n];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    if ordering.len() != blocks.len() {
        return Err(Error::BadOrdering(format!(
            "expected {} representatives, got {}",
            blocks.len(),
            ordering.len()
        )));
    }
    let mut seen = vec![false; blocks.len()];
    for &x in ordering {
        if x >= n {
            return Err(Error::BadOrdering(format!("point {} is outside 1..={n}", x + 1)));
        }
        if std::mem::replace(&mut seen[block_of[x]], true) {
            return Err(Error::BadOrdering(format!(
                "point {} repeats an already represented cluster",
                x + 1
            )));
        }
    }
    Ok(())
}

/// Tower for a caller-chosen ordering of cluster representatives (0-based
/// points).
pub fn cluster_tower(p: &RootPair, ordering: &[usize]) -> Result<TowerReport> {
    let n = p.degree();
    let blocks = cluster_partition(p)?;
    check_ordering(&blocks, n, ordering)?;
    let r = blocks[0].len();
    let order = p.group().order();
    let mut j: Vec<Permutation> = p.group().elements().to_vec();
    let mut jump_indices = Vec::new();
    let mut degree_sequence = Vec::new();
    for (idx, &beta) in ordering.iter().enumerate() {
        let before = j.len();
        j.retain(|x| x.fixes(beta));
        if idx == 0 {
            if n > 1 {
                degree_sequence.push(order / j.len());
            }
        } else if j.len() != before {
            jump_indices.push(idx + 1);
            degree_sequence.push(order / j.len());
        }
    }
    if j.len() != 1 {
        return Err(Error::Inconsistent("tower does not reach the full splitting field".into()));
    }
    if degree_sequence.first().is_some_and(|&a| a != n) {
        return Err(Error::Inconsistent("first tower degree differs from n".into()));
    }
    let bound = order_bound(n, r, &jump_indices);
    Ok(TowerReport {
        ordering: ordering.iter().map(|x| x + 1).collect(),
        length: if n == 1 { 1 } else { jump_indices.len() + 2 },
        jump_indices,
        degree_sequence,
        order_bound: bound,
        bound_holds: order as u64 <= bound,
        fingerprint: p.fingerprint(),
    })
}

/// Extends a prefix of representatives (0-based) with the least point of
/// every cluster not yet represented, in increasing order.
pub fn complete_ordering(p: &RootPair, prefix: &[usize]) -> Result<Vec<usize>> {
    let blocks = cluster_partition(p)?;
    let mut out = prefix.to_vec();
    for b in &blocks {
        if !b.iter().any(|x| prefix.contains(x)) {
            out.push(b[0]);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerOutcome {
    pub degree_sequence: Vec<usize>,
    pub length: usize,
    /// Number of orderings producing this outcome.
    pub orderings: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerSweep {
    pub s: usize,
    /// `s!`.
    pub orderings: u64,
    pub outcomes: Vec<TowerOutcome>,
    pub bound_holds_everywhere: bool,
    pub fingerprint: String,
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

struct Sweep<'a> {
    reps: &'a [usize],
    n: usize,
    r: usize,
    order: usize,
    outcomes: BTreeMap<(Vec<usize>, usize), u64>,
    bound_ok: bool,
}

impl Sweep<'_> {
    fn descend(&mut self, j: &[Permutation], used: &mut [bool], jumps: &mut Vec<usize>, degrees: &mut Vec<usize>, depth: usize) {
        let s = self.reps.len();
        for i in 0..s {
            if used[i] {
                continue;
            }
            let beta = self.reps[i];
            let next: Vec<Permutation> = j.iter().filter(|x| x.fixes(beta)).cloned().collect();
            let jumped = depth > 0 && next.len() != j.len();
            if depth == 0 || jumped {
                if jumped {
                    jumps.push(depth + 1);
                }
                degrees.push(self.order / next.len());
            }
            used[i] = true;
            if next.len() == 1 {
                // every completion of this prefix gives the same tower
                let weight = factorial(s - depth - 1);
                let length = jumps.len() + 2;
                *self.outcomes.entry((degrees.clone(), length)).or_insert(0) += weight;
                self.bound_ok &= self.order as u64 <= order_bound(self.n, self.r, jumps);
            } else {
                self.descend(&next, used, jumps, degrees, depth + 1);
            }
            used[i] = false;
            if depth == 0 || jumped {
                degrees.pop();
                if jumped {
                    jumps.pop();
                }
            }
        }
    }
}

/// Every ordering of the clusters (representatives taken as the least point
/// of each block), grouped by outcome.
pub fn tower_sweep(p: &RootPair) -> Result<TowerSweep> {
    let blocks = cluster_partition(p)?;
    let s = blocks.len();
    if s > MAX_SWEEP_CLUSTERS {
        return Err(Error::GroupTooLarge {
            cap: MAX_SWEEP_CLUSTERS,
            what: "clusters for an all-orderings sweep",
        });
    }
    let fingerprint = p.fingerprint();
    if p.degree() == 1 {
        return Ok(TowerSweep {
            s,
            orderings: 1,
            outcomes: vec![TowerOutcome {
                degree_sequence: vec![],
                length: 1,
                orderings: 1,
            }],
            bound_holds_everywhere: true,
            fingerprint,
        });
    }
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let r = fixed_points(p.stabilizer().as_group()).len();
    let mut sweep = Sweep {
        reps: &reps,
        n: p.degree(),
        r,
        order: p.group().order(),
        outcomes: BTreeMap::new(),
        bound_ok: true,
    };
    let mut used = vec![false; s];
    sweep.descend(p.group().elements(), &mut used, &mut Vec::new(), &mut Vec::new(), 0);
    let total: u64 = sweep.outcomes.values().sum();
    if total != factorial(s) {
        return Err(Error::Inconsistent(format!("sweep covered {total} of {} orderings", factorial(s))));
    }
    Ok(TowerSweep {
        s,
        orderings: total,
        outcomes: sweep
            .outcomes
            .into_iter()
            .map(|((degree_sequence, length), orderings)| TowerOutcome {
                degree_sequence,
                length,
                orderings,
            })
            .collect(),
        bound_holds_everywhere: sweep.bound_ok,
        fingerprint,
    })
}
