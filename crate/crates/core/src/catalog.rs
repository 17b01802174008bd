//! Named fixtures with their expected invariants, and the `family:params`
//! names that bind to the group constructions.

use std::fmt::Debug;

use serde::Serialize;

use crate::clustercalc::{
    ascending_chain, cluster_partition, cluster_report, cluster_tower, descending_chain, hint_check, link_profile,
    root_capacity, tower_sweep, RootPair,
};
use crate::constructions::{
    alternating_with, cyclic, cyclic_with, klein, metacyclic_with, symmetric_with, tuple_action_with, wreathlike_with,
};
use crate::error::{Error, Result};
use crate::magnification::{
    base_change_verify, detect_strong_magnification, is_weak_magnification, magnify, Magnified,
};
use crate::permcore::{intersect, is_normal, join, normal_closure, normalizer, Group, Limits, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureRun {
    pub name: &'static str,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
    pub fingerprint: String,
}

/// Collects assertions for one fixture.
#[derive(Default)]
pub struct Expect {
    assertions: Vec<Assertion>,
}

impl Expect {
    pub fn eq<T: Debug + PartialEq>(&mut self, label: &str, expected: T, actual: T) {
        self.assertions.push(Assertion {
            label: label.to_string(),
            pass: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    pub fn holds(&mut self, label: &str, actual: bool) {
        self.eq(label, true, actual);
    }
}

pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn(Limits) -> Result<RootPair>,
    expect: fn(&RootPair, &mut Expect) -> Result<()>,
}

impl Debug for Fixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Fixture").field("name", &self.name).finish()
    }
}

impl Fixture {
    pub fn pair(&self) -> Result<RootPair> {
        (self.build)(Limits::default())
    }

    pub fn pair_with(&self, limits: Limits) -> Result<RootPair> {
        (self.build)(limits)
    }

    /// Evaluates every expectation of the fixture.
    pub fn run(&self) -> Result<FixtureRun> {
        let p = self.pair()?;
        let mut e = Expect::default();
        (self.expect)(&p, &mut e)?;
        let passed = e.assertions.iter().all(|a| a.pass);
        Ok(FixtureRun {
            name: self.name,
            assertions: e.assertions,
            passed,
            fingerprint: p.fingerprint(),
        })
    }
}

fn basics(p: &RootPair, e: &mut Expect, n: usize, r: usize, s: usize) -> Result<()> {
    let c = cluster_report(p)?;
    e.eq("n", n, c.n);
    e.eq("r", r, c.r);
    e.eq("s", s, c.s);
    Ok(())
}

fn steps(p: &RootPair, e: &mut Expect, desc: &[usize], asc: &[usize]) -> Result<()> {
    let x = p.to_extension();
    e.eq("descending steps", desc.to_vec(), descending_chain(&x)?.step_indices);
    e.eq("ascending steps", asc.to_vec(), ascending_chain(&x)?.step_indices);
    Ok(())
}

fn t_of(p: &RootPair) -> Result<usize> {
    Ok(normal_closure(p.group(), p.stabilizer())?.index())
}

fn tower(p: &RootPair, e: &mut Expect, ordering: &[usize], degrees: &[usize], length: usize) -> Result<()> {
    let t = cluster_tower(p, ordering)?;
    let label = format!("tower {:?}", t.ordering);
    e.eq(&format!("{label} degrees"), degrees.to_vec(), t.degree_sequence);
    e.eq(&format!("{label} length"), length, t.length);
    Ok(())
}

fn coincidence(p: &RootPair, e: &mut Expect, closure_order: usize) -> Result<()> {
    let l = link_profile(p)?;
    let norm = normalizer(p.group(), p.stabilizer())?;
    e.holds("N = F", l.N_eq_F);
    e.eq("|N_G(H)|", closure_order, norm.order());
    e.holds("link relations", l.all_hold());
    e.eq("r·t = n", Some(true), l.r_times_t_is_n);
    e.eq("t = s", Some(true), l.t_equals_s);
    Ok(())
}

fn fx_npk_5_2(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 20, 2, 10)?;
    e.eq("t", 1, t_of(p)?);
    steps(p, e, &[2], &[])
}

fn fx_npk_5_3(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 60, 6, 10)?;
    e.eq("t", 1, t_of(p)?);
    steps(p, e, &[6], &[])
}

fn fx_npk_4_1(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 4, 1, 4)?;
    e.eq("t", 1, t_of(p)?);
    steps(p, e, &[], &[])?;
    let sw = tower_sweep(p)?;
    e.eq("tower outcomes", 1, sw.outcomes.len());
    e.eq("tower degrees", vec![4, 12, 24], sw.outcomes[0].degree_sequence.clone());
    e.holds("order bound", sw.bound_holds_everywhere);
    Ok(())
}

fn fx_npk_4_2(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 12, 2, 6)?;
    e.eq("t", 1, t_of(p)?);
    // the normalizer field still has cluster size 2
    steps(p, e, &[2, 2], &[])
}

fn fx_wreath_3_2(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 6, 3, 2)?;
    e.eq("|G|", 18, p.group().order());
    coincidence(p, e, 9)?;
    steps(p, e, &[3, 2], &[2, 3])
}

fn fx_wreath_2_3(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 6, 2, 3)?;
    e.eq("|G|", 24, p.group().order());
    coincidence(p, e, 8)?;
    steps(p, e, &[2, 3], &[3, 2])
}

fn fx_tower_9(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 9, 1, 9)?;
    e.eq("|G|", 54, p.group().order());
    tower(p, e, &[0, 1, 3, 2, 4, 5, 6, 7, 8], &[9, 54], 3)?;
    tower(p, e, &[0, 3, 1, 2, 4, 5, 6, 7, 8], &[9, 18, 54], 4)?;
    e.holds("order bound for every ordering", tower_sweep(p)?.bound_holds_everywhere);
    Ok(())
}

fn fx_tower_8(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 8, 2, 4)?;
    e.eq("|G|", 32, p.group().order());
    tower(p, e, &[0, 1, 2, 3], &[8, 32], 3)?;
    tower(p, e, &[0, 2, 1, 3], &[8, 16, 32], 4)?;
    e.holds("order bound for every ordering", tower_sweep(p)?.bound_holds_everywhere);
    Ok(())
}

fn fx_root_12(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 12, 2, 6)?;
    e.eq("|G|", 48, p.group().order());
    steps(p, e, &[2, 2], &[2, 2])?;
    e.eq("t", 2, t_of(p)?);
    let pairs: Vec<Vec<usize>> = (0..6).map(|j| vec![j, j + 6]).collect();
    e.eq("cluster partition", pairs, cluster_partition(p)?);
    Ok(())
}

fn fx_root_9(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 9, 1, 9)?;
    steps(p, e, &[], &[])?;
    e.eq("t", 1, t_of(p)?);
    Ok(())
}

fn fx_quartic(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 4, 2, 2)?;
    e.eq("|G|", 8, p.group().order());
    steps(p, e, &[2, 2], &[2, 2])?;
    let l = link_profile(p)?;
    e.holds("N = F", l.N_eq_F);
    e.eq("[G:N]", 2, normalizer(p.group(), p.stabilizer())?.index());
    e.eq("strong decompositions", 0, detect_strong_magnification(p)?.len());
    Ok(())
}

fn fx_capacity_12(p: &RootPair, e: &mut Expect) -> Result<()> {
    let g = p.group();
    let u_l = p.stabilizer();
    let m1 = g.pointwise_stabilizer(&[0, 2])?;
    let m2 = g.pointwise_stabilizer(&[0, 3])?;
    let rho = |u: &Subgroup| root_capacity(g, u, u_l).map(|c| c.rho);
    let (r1, r2) = (rho(&m1)?, rho(&m2)?);
    let (m12, m1m2) = (intersect(&m1, &m2)?, join(&m1, &m2)?);
    let both = rho(&m12)?;
    let meet = rho(&m1m2)?;
    e.eq("ρ(M1, L)", 6, r1);
    e.eq("ρ(M2, L)", 4, r2);
    e.eq("ρ(M1M2, L)", 12, both);
    e.holds("strict compositum inequality", both > r1 + r2 - meet);
    Ok(())
}

fn magnified_wreath() -> Result<Magnified> {
    Magnified::new(&wreathlike_with(3, 2, Limits::default())?, &cyclic(2)?)
}

fn fx_magnify(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 12, 6, 2)?;
    let base = wreathlike_with(3, 2, Limits::default())?;
    let (lb, lp) = (link_profile(&base)?, link_profile(p)?);
    e.eq("t", 2 * lb.t, lp.t);
    e.eq("u", lb.u, lp.u);
    let m = magnified_wreath()?;
    e.eq("weak factor", Some(2), is_weak_magnification(m.ambient(), &m.u_m, &m.u_l)?.factor);
    let found = detect_strong_magnification(p)?;
    e.holds("decomposition with |B| = 2", found.iter().any(|d| d.magnification_factor == 2));
    Ok(())
}

fn fx_a5(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 5, 1, 5)?;
    e.eq("|G|", 60, p.group().order());
    e.eq("strong decompositions", 0, detect_strong_magnification(p)?.len());
    Ok(())
}

fn fx_basechange(p: &RootPair, e: &mut Expect) -> Result<()> {
    let rep = base_change_verify(p, &cyclic(5)?)?;
    e.holds("galois preserved", rep.galois_preserved);
    e.holds("cluster size", rep.cluster_size);
    e.holds("descending chain", rep.descending_chain);
    e.holds("ascending chain", rep.ascending_chain);
    e.holds("root capacity", rep.root_capacity);
    e.holds("ascending index", rep.ascending_index);
    e.holds("weak magnification", rep.weak_magnification);
    e.holds("exhaustive", rep.exhaustive);
    Ok(())
}

fn fx_cyclic_6(p: &RootPair, e: &mut Expect) -> Result<()> {
    basics(p, e, 6, 6, 1)?;
    let l = link_profile(p)?;
    e.eq("(t, u)", (6, 1), (l.t, l.u));
    e.holds("galois equivalences", l.relations.galois_equivalences);
    steps(p, e, &[6], &[6])
}

fn fx_hint_magnified(_: &RootPair, e: &mut Expect) -> Result<()> {
    let m = magnified_wreath()?;
    let h = hint_check(m.ambient(), &m.u_m, &m.u_l)?;
    e.holds("hypotheses hold", h.hypotheses_hold);
    e.eq("M/L Galois", Some(true), h.conclusion);
    Ok(())
}

/// Towers `U_M ≤ U_L` where `M/L` is Galois but a hypothesis fails.
fn fx_hint_converse(_: &RootPair, e: &mut Expect) -> Result<()> {
    let mut cases = Vec::new();
    let w = wreathlike_with(3, 2, Limits::default())?;
    cases.push(("closure over L", w.group().clone(), Subgroup::trivial(w.group()), w.stabilizer().clone()));
    let n = normalizer(w.group(), w.stabilizer())?;
    cases.push(("L over N, packets", w.group().clone(), w.stabilizer().clone(), n));
    let t = tuple_action_with(5, 2, Limits::default())?;
    let n = normalizer(t.group(), t.stabilizer())?;
    cases.push(("L over N, pairs", t.group().clone(), t.stabilizer().clone(), n));
    for (label, g, u_m, u_l) in cases {
        let h = hint_check(&g, &u_m, &u_l)?;
        e.holds(&format!("{label}: M/L Galois"), is_normal(u_l.as_group(), &u_m.within(u_l.as_group())?)?);
        e.holds(&format!("{label}: hypotheses fail"), !h.hypotheses_hold);
        e.eq(&format!("{label}: no conclusion"), None, h.conclusion);
    }
    Ok(())
}

macro_rules! fixture {
    ($name:literal, $summary:literal, $build:expr, $expect:path) => {
        Fixture {
            name: $name,
            summary: $summary,
            build: $build,
            expect: $expect,
        }
    };
}

static FIXTURES: &[Fixture] = &[
    fixture!("nPk-5-2", "ordered pairs from 5 points", |l| tuple_action_with(5, 2, l), fx_npk_5_2),
    fixture!("nPk-5-3", "ordered triples from 5 points", |l| tuple_action_with(5, 3, l), fx_npk_5_3),
    fixture!("nPk-4-1", "S4 on 4 points", |l| tuple_action_with(4, 1, l), fx_npk_4_1),
    fixture!("nPk-4-2", "ordered pairs from 4 points, k = n/2", |l| tuple_action_with(4, 2, l), fx_npk_4_2),
    fixture!("perlis-wreath-3-2", "2 packets of 3 roots", |l| wreathlike_with(3, 2, l), fx_wreath_3_2),
    fixture!("perlis-wreath-2-3", "3 packets of 2 roots", |l| wreathlike_with(2, 3, l), fx_wreath_2_3),
    fixture!("tower-metacyclic-9", "x^9 - a, two tower orderings", |l| metacyclic_with(9, l), fx_tower_9),
    fixture!("tower-metacyclic-8", "x^8 - a, two tower orderings", |l| metacyclic_with(8, l), fx_tower_8),
    fixture!("nth-root-12", "x^12 - a, chains of 2-power steps", |l| metacyclic_with(12, l), fx_root_12),
    fixture!("nth-root-9", "x^9 - a, singleton chains", |l| metacyclic_with(9, l), fx_root_9),
    fixture!("quartic-root-2", "x^4 - 2, N = F", |l| metacyclic_with(4, l), fx_quartic),
    fixture!("capacity-12", "root capacities inside x^12 - a", |l| metacyclic_with(12, l), fx_capacity_12),
    fixture!(
        "magnify-wreath-3-2-by-2",
        "2 packets of 3 roots times Z/2",
        |l| magnify(&wreathlike_with(3, 2, l)?, &cyclic_with(2, l)?),
        fx_magnify
    ),
    fixture!("a5-primitive", "A5 on 5 points", |l| RootPair::new(alternating_with(5, l)?), fx_a5),
    fixture!(
        "basechange-wreath-2-3-by-5",
        "3 packets of 2 roots, base change by Z/5",
        |l| wreathlike_with(2, 3, l),
        fx_basechange
    ),
    fixture!("galois-cyclic-6", "Z/6 acting regularly", |l| RootPair::new(cyclic_with(6, l)?), fx_cyclic_6),
    fixture!(
        "hint-magnified",
        "Galois criterion on a magnified tower",
        |l| magnify(&wreathlike_with(3, 2, l)?, &cyclic_with(2, l)?),
        fx_hint_magnified
    ),
    fixture!(
        "hint-non-converse",
        "Galois towers where the criterion's hypotheses fail",
        |l| wreathlike_with(3, 2, l),
        fx_hint_converse
    ),
];

/// Every fixture, in registry order.
pub fn catalog() -> &'static [Fixture] {
    FIXTURES
}

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

fn params<const K: usize>(family: &str, args: &[&str]) -> Result<[usize; K]> {
    if args.len() != K {
        return Err(Error::BadParameter(format!("{family} takes {K} parameter(s), got {}", args.len())));
    }
    let mut out = [0; K];
    for (o, a) in out.iter_mut().zip(args) {
        *o = a
            .parse()
            .map_err(|_| Error::BadParameter(format!("{family}: {a:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

/// A group from `cyclic:n`, `klein`, `symmetric:n`, `alternating:n`,
/// `trivial`, or the group of any pair name.
pub fn build_group(spec: &str, limits: Limits) -> Result<Group> {
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    match family {
        "cyclic" => cyclic_with(params::<1>(family, &args)?[0], limits),
        "klein" => params::<0>(family, &args).map(|_| klein().with_limits(limits)),
        "symmetric" => symmetric_with(params::<1>(family, &args)?[0], limits),
        "alternating" => alternating_with(params::<1>(family, &args)?[0], limits),
        "trivial" => params::<0>(family, &args).map(|_| Group::trivial(1).with_limits(limits)),
        _ => build(spec, limits).map(|p| p.group().clone()),
    }
}

/// A root pair from a family name with parameters (`metacyclic:12`,
/// `wreathlike:3:2`, `tuples:5:2`, ...), a fixture name, or `P*R` for the
/// magnification of `P` by the group `R`.
pub fn build(spec: &str, limits: Limits) -> Result<RootPair> {
    if let Some((left, right)) = spec.split_once('*') {
        return magnify(&build(left, limits)?, &build_group(right, limits)?);
    }
    if let Some(f) = find(spec) {
        return f.pair_with(limits);
    }
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    match family {
        "metacyclic" => metacyclic_with(params::<1>(family, &args)?[0], limits),
        "wreathlike" => {
            let [r, s] = params(family, &args)?;
            wreathlike_with(r, s, limits)
        }
        "tuples" => {
            let [n, k] = params(family, &args)?;
            tuple_action_with(n, k, limits)
        }
        "cyclic" | "klein" | "symmetric" | "alternating" | "trivial" => RootPair::new(build_group(spec, limits)?),
        _ => Err(Error::BadParameter(format!("unknown construction {spec:?}"))),
    }
}
