//! The cross-module invariant suite behind `verify`.
//!
//! Each check either passes or fails with a short detail. Internal
//! consistency errors count as failures; resource caps abort the run.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::clustercalc::{
    ascending_chain, aut_group, cluster_partition, cluster_report, cluster_size, cluster_tower, complete_ordering,
    descending_chain, hint_check, link_profile, root_capacity, tower_sweep, ExtensionPair, RootPair,
    MAX_SWEEP_CLUSTERS,
};
use crate::constructions::cyclic;
use crate::error::{Error, Result};
use crate::magnification::{
    base_change_verify, detect_strong_magnification, is_weak_magnification, magnify, strong_chain_correspondence,
    Magnified, EXHAUSTIVE_INDEX,
};
use crate::permcore::{
    core, coset_action, fixed_points, intermediate_subgroups, intersect, is_normal, join, normal_closure, normalizer,
    Group, Subgroup,
};

/// Largest `|G|` for which the magnification checks run.
pub const MAGNIFY_MAX_ORDER: usize = 1000;
/// Largest `|G|` for which the base change check runs.
pub const BASE_CHANGE_MAX_ORDER: usize = 500;
/// Points whose stabilizers are compared in the conjugation check.
const CONJUGATE_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    /// Checks not run, with the reason.
    pub skipped: Vec<String>,
    pub passed: bool,
    pub fingerprint: String,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

type Verdict = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

#[derive(Default)]
struct Suite {
    checks: Vec<Check>,
    skipped: Vec<String>,
}

impl Suite {
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Result<Verdict>) -> Result<()> {
        let verdict = match f() {
            Ok(v) => v,
            Err(Error::Inconsistent(msg)) => Err(msg),
            Err(e) => return Err(e),
        };
        self.checks.push(Check {
            name,
            pass: verdict.is_ok(),
            detail: verdict.err(),
        });
        Ok(())
    }

    fn skip(&mut self, name: &str, why: impl Into<String>) {
        self.skipped.push(format!("{name}: {}", why.into()));
    }
}

/// Subgroups swept by the capacity and divisibility checks.
#[derive(Debug, Clone)]
pub struct SubgroupSweep {
    /// Every `U` with `H ≤ U ≤ G`: the subfields of `L`.
    pub upper: Vec<Subgroup>,
    /// The trivial group, `H ∩ Stab(j)` for every point `j`, and `upper`.
    pub lower: Vec<Subgroup>,
}

impl SubgroupSweep {
    /// Pairs `(U_M, U_L)` with `U_M ≤ U_L`.
    pub fn pairs(&self) -> impl Iterator<Item = (&Subgroup, &Subgroup)> {
        self.upper
            .iter()
            .flat_map(move |l| self.lower.iter().filter(|m| m.is_contained_in(l)).map(move |m| (m, l)))
    }
}

/// The sweep for `[G:H] ≤ 24`, `None` beyond.
pub fn subgroup_sweep(p: &RootPair) -> Result<Option<SubgroupSweep>> {
    let g = p.group();
    let h = p.stabilizer();
    if h.index() > EXHAUSTIVE_INDEX {
        return Ok(None);
    }
    let upper = intermediate_subgroups(g, h)?;
    let mut seen = BTreeSet::new();
    let mut lower = Vec::new();
    let mut add = |u: Subgroup| {
        if seen.insert(u.elements().to_vec()) {
            lower.push(u);
        }
    };
    add(Subgroup::trivial(g));
    for j in 0..p.degree() {
        add(intersect(h, &g.stabilizer(j)?)?);
    }
    for u in &upper {
        add(u.clone());
    }
    Ok(Some(SubgroupSweep { upper, lower }))
}

/// Runs every invariant check that fits the pair's size.
pub fn verify(p: &RootPair) -> Result<VerifyReport> {
    let mut suite = Suite::default();
    base_checks(&mut suite, p)?;
    chain_checks(&mut suite, p)?;
    tower_checks(&mut suite, p)?;
    match subgroup_sweep(p)? {
        Some(sweep) => sweep_checks(&mut suite, p, &sweep)?,
        None => suite.skip("subgroup sweep", format!("[G:H] = {} exceeds {EXHAUSTIVE_INDEX}", p.degree())),
    }
    magnification_checks(&mut suite, p)?;
    let passed = suite.checks.iter().all(|c| c.pass);
    Ok(VerifyReport {
        checks: suite.checks,
        skipped: suite.skipped,
        passed,
        fingerprint: p.fingerprint(),
    })
}

fn base_checks(suite: &mut Suite, p: &RootPair) -> Result<()> {
    let g = p.group();
    let h = p.stabilizer();
    let n = p.degree();
    suite.run("perlis_identity", || {
        let c = cluster_report(p)?;
        let fixed = fixed_points(h.as_group()).len();
        Ok(ensure(c.r * c.s == n && fixed == c.r && c.aut_order == c.r, || {
            format!("r = {}, s = {}, fixed points = {fixed}, n = {n}", c.r, c.s)
        }))
    })?;
    suite.run("conjugation_invariance", || {
        let c = cluster_report(p)?;
        for j in 0..n.min(CONJUGATE_POINTS) {
            let q = RootPair::with_base(g.clone(), j)?;
            let d = cluster_report(&q)?;
            if (d.r, d.s, d.aut_order) != (c.r, c.s, c.aut_order) {
                return Ok(Err(format!("base {} gives r = {}, s = {}", j + 1, d.r, d.s)));
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("subgroup_sandwich", || {
        let c = core(g, h)?;
        let norm = normalizer(g, h)?;
        let closure = normal_closure(g, h)?;
        let ok = c.is_contained_in(h)
            && h.is_contained_in(&norm)
            && h.is_contained_in(&closure)
            && is_normal(g, &c)?
            && is_normal(g, &closure)?
            && is_normal(norm.as_group(), &h.within(norm.as_group())?)?;
        Ok(ensure(ok, || "core ≤ H ≤ N_G(H), H ≤ H^G with normality".into()))
    })?;
    suite.run("coset_action_kernel", || {
        let act = coset_action(g, h)?;
        let c = core(g, h)?;
        Ok(ensure(act.degree() == n && act.order() * c.order() == g.order(), || {
            format!("image order {}, core order {}, |G| = {}", act.order(), c.order(), g.order())
        }))
    })?;
    suite.run("cluster_partition", || {
        let c = cluster_report(p)?;
        let blocks = cluster_partition(p)?;
        if blocks.len() != c.s || blocks.iter().any(|b| b.len() != c.r) {
            return Ok(Err(format!("{} blocks for s = {}, r = {}", blocks.len(), c.s, c.r)));
        }
        for b in &blocks {
            for &j in b {
                let fix = fixed_points(g.stabilizer(j)?.as_group());
                if fix != *b {
                    return Ok(Err(format!("block of point {} is not Fix(Stab)", j + 1)));
                }
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("aut_group", || {
        let c = cluster_report(p)?;
        let aut = aut_group(&p.to_extension())?;
        Ok(ensure(aut.order() == c.r && aut.degree() == c.r, || {
            format!("|Aut| = {} on {} points, r = {}", aut.order(), aut.degree(), c.r)
        }))
    })
}

fn chain_checks(suite: &mut Suite, p: &RootPair) -> Result<()> {
    let g = p.group();
    let e = p.to_extension();
    suite.run("descending_chain", || {
        let d = descending_chain(&e)?;
        let chain = &d.subgroup_chain;
        for (i, w) in chain.windows(2).enumerate() {
            if !w[0].is_contained_in(&w[1]) || w[0].order() == w[1].order() {
                return Ok(Err(format!("step {} is not strictly increasing", i + 1)));
            }
            // the step is the cluster size of the stage, recomputed on its reduction
            let stage = ExtensionPair::new(g, &w[0])?.reduce()?;
            let r = cluster_report(&stage)?.r;
            if r != d.step_indices[i] {
                return Ok(Err(format!("step {} has index {} but cluster size {r}", i + 1, d.step_indices[i])));
            }
        }
        let last = chain.last().expect("non-empty chain");
        Ok(ensure(normalizer(g, last)? == *last, || "final subgroup is not self-normalizing".into()))
    })?;
    suite.run("ascending_chain", || {
        let a = ascending_chain(&e)?;
        let (t, u) = (a.t.unwrap_or(0), a.u.unwrap_or(0));
        if t * u != p.degree() {
            return Ok(Err(format!("t·u = {} but n = {}", t * u, p.degree())));
        }
        for w in a.subgroup_chain.windows(2) {
            if !w[1].is_contained_in(&w[0]) || w[0].order() == w[1].order() {
                return Ok(Err("chain is not strictly decreasing".into()));
            }
        }
        let last = a.subgroup_chain.last().expect("non-empty chain");
        let closure = normal_closure(last.as_group(), &p.stabilizer().within(last.as_group())?)?;
        Ok(ensure(closure.order() == last.order(), || "final subgroup is not normally closed".into()))
    })?;
    suite.run("ascending_divisibility", || {
        // r_K(L) | t_K(L)·r_F(L), with F the fixed field of H^G
        let closure = normal_closure(g, p.stabilizer())?;
        let t = closure.index();
        let over_f = ExtensionPair::new(closure.as_group(), p.stabilizer())?.reduce()?;
        let r_f = cluster_report(&over_f)?.r;
        let r = cluster_report(p)?.r;
        Ok(ensure((t * r_f) % r == 0, || format!("r = {r}, t = {t}, r_F = {r_f}")))
    })?;
    suite.run("link_profile", || {
        let l = link_profile(p)?;
        Ok(ensure(l.all_hold(), || format!("{:?}", l.relations)))
    })
}

fn tower_checks(suite: &mut Suite, p: &RootPair) -> Result<()> {
    let s = cluster_report(p).map(|c| c.s).unwrap_or(usize::MAX);
    if s <= MAX_SWEEP_CLUSTERS {
        suite.run("tower_bound", || {
            let sw = tower_sweep(p)?;
            Ok(ensure(sw.bound_holds_everywhere, || "order bound fails for some ordering".into()))
        })
    } else {
        suite.skip("tower sweep", format!("s = {s} exceeds {MAX_SWEEP_CLUSTERS}; canonical ordering only"));
        suite.run("tower_bound", || {
            let t = cluster_tower(p, &complete_ordering(p, &[])?)?;
            Ok(ensure(t.bound_holds, || "order bound fails for the canonical ordering".into()))
        })
    }
}

/// Per-subgroup values reused across the sweep.
struct Facts {
    r_k: usize,
    t_k: usize,
}

fn facts(g: &Group, u: &Subgroup) -> Result<Facts> {
    let e = ExtensionPair::new(g, u)?;
    Ok(Facts {
        r_k: aut_group(&e)?.order(),
        t_k: normal_closure(g, u)?.index(),
    })
}

fn sweep_checks(suite: &mut Suite, p: &RootPair, sweep: &SubgroupSweep) -> Result<()> {
    let g = p.group();
    let lower_facts = sweep.lower.iter().map(|u| facts(g, u)).collect::<Result<Vec<_>>>()?;
    let fact_of = |u: &Subgroup| {
        let i = sweep.lower.iter().position(|x| x == u).expect("upper lies in lower");
        &lower_facts[i]
    };

    suite.run("capacity_multiple_of_r", || {
        for (m, l) in sweep.pairs() {
            let c = root_capacity(g, m, l)?;
            if c.rho % c.r != 0 || c.rho != c.a * c.r {
                return Ok(Err(format!("ρ = {}, a = {}, r = {}", c.rho, c.a, c.r)));
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("capacity_support", || {
        // ρ(M, L_M) = r(L_M), with L_M generated by the roots of L inside M
        for (m, l) in sweep.pairs() {
            let support = root_capacity(g, m, l)?.support_subgroup;
            let rho = root_capacity(g, m, &support)?.rho;
            let r = cluster_size(&ExtensionPair::new(g, &support)?)?;
            if rho != r {
                return Ok(Err(format!("ρ(M, L_M) = {rho}, r(L_M) = {r}")));
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("capacity_monotone", || {
        for l in &sweep.upper {
            let below: Vec<&Subgroup> = sweep.lower.iter().filter(|m| m.is_contained_in(l)).collect();
            let rho = below
                .iter()
                .map(|m| root_capacity(g, m, l).map(|c| c.rho))
                .collect::<Result<Vec<_>>>()?;
            for (i, a) in below.iter().enumerate() {
                for (j, b) in below.iter().enumerate() {
                    if a.is_contained_in(b) && rho[i] < rho[j] {
                        return Ok(Err(format!("ρ drops from {} to {} on enlarging M", rho[j], rho[i])));
                    }
                }
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("capacity_compositum", || {
        let h = p.stabilizer();
        let below: Vec<&Subgroup> = sweep.lower.iter().filter(|m| m.is_contained_in(h)).collect();
        let rho = |u: &Subgroup| root_capacity(g, u, h).map(|c| c.rho);
        for (i, a) in below.iter().enumerate() {
            for b in &below[i + 1..] {
                let both = rho(&intersect(a, b)?)?;
                let meet = rho(&join(a, b)?)?;
                if both + meet < rho(a)? + rho(b)? {
                    return Ok(Err(format!("compositum capacity {both} below the inclusion-exclusion bound")));
                }
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("aut_divisibility", || {
        for (m, l) in sweep.pairs() {
            let r_lm = aut_group(&ExtensionPair::new(l.as_group(), m)?)?.order();
            let r_km = fact_of(m).r_k;
            if r_km % r_lm != 0 {
                return Ok(Err(format!("r_L(M) = {r_lm} does not divide r_K(M) = {r_km}")));
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("ascending_index_monotone", || {
        for (m, l) in sweep.pairs() {
            let (t_l, t_m) = (fact_of(l).t_k, fact_of(m).t_k);
            if t_m % t_l != 0 {
                return Ok(Err(format!("t_K(L) = {t_l} does not divide t_K(M) = {t_m}")));
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("normalizer_restriction", || {
        // |N_{Aut(M/K)}(Aut(M/L)) / Aut(M/L)| divides |Aut(M^{Aut(M/L)}/K)|
        for (m, l) in sweep.pairs() {
            let w = normalizer(l.as_group(), &m.within(l.as_group())?)?.within(g)?;
            let n_m = normalizer(g, m)?;
            let inner = normalizer(n_m.as_group(), &w.within(n_m.as_group())?)?;
            let lhs = inner.order() / w.order();
            let rhs = normalizer(g, &w)?.order() / w.order();
            if rhs % lhs != 0 {
                return Ok(Err(format!("{lhs} does not divide {rhs}")));
            }
        }
        Ok(Ok(()))
    })?;
    suite.run("hint", || {
        for (m, l) in sweep.pairs() {
            if hint_check(g, m, l)?.conclusion == Some(false) {
                return Ok(Err(format!("hypotheses hold but U_M of order {} is not normal", m.order())));
            }
        }
        Ok(Ok(()))
    })
}

fn magnification_checks(suite: &mut Suite, p: &RootPair) -> Result<()> {
    let g = p.group();
    if p.degree() <= 2 {
        suite.skip("magnification", "degree at most 2");
    } else if g.order() > MAGNIFY_MAX_ORDER {
        suite.skip("magnification", format!("|G| = {} exceeds {MAGNIFY_MAX_ORDER}", g.order()));
    } else {
        let z2 = cyclic(2)?;
        suite.run("strong_magnification", || {
            let base = cluster_report(p)?;
            let q = magnify(p, &z2)?;
            let up = cluster_report(&q)?;
            let (t, t_q) = (link_profile(p)?, link_profile(&q)?);
            if (up.n, up.r, up.s) != (2 * base.n, 2 * base.r, base.s) || (t_q.t, t_q.u) != (2 * t.t, t.u) {
                return Ok(Err(format!(
                    "(n, r, s, t, u) went from {:?} to {:?}",
                    (base.n, base.r, base.s, t.t, t.u),
                    (up.n, up.r, up.s, t_q.t, t_q.u)
                )));
            }
            let m = Magnified::new(p, &z2)?;
            let weak = is_weak_magnification(m.ambient(), &m.u_m, &m.u_l)?;
            if weak.factor != Some(2) {
                return Ok(Err(format!("weak factor {:?}", weak.factor)));
            }
            for d in detect_strong_magnification(&q)? {
                if d.magnification_factor != 2 {
                    continue;
                }
                let back = cluster_report(&ExtensionPair::new(q.group(), &d.l_subgroup)?.reduce()?)?;
                if (back.n, back.r, back.s) == (base.n, base.r, base.s) {
                    return Ok(Ok(()));
                }
            }
            Ok(Err("no decomposition recovers the original pair".into()))
        })?;
        suite.run("strong_chain_correspondence", || {
            let rep = strong_chain_correspondence(p, &z2)?;
            Ok(ensure(rep.all_pass, || format!("{rep:?}")))
        })?;
    }
    if g.order() > BASE_CHANGE_MAX_ORDER {
        suite.skip("base change", format!("|G| = {} exceeds {BASE_CHANGE_MAX_ORDER}", g.order()));
    } else {
        suite.run("base_change", || {
            let rep = base_change_verify(p, &cyclic(3)?)?;
            Ok(ensure(rep.all_pass, || format!("{rep:?}")))
        })?;
    }
    Ok(())
}
