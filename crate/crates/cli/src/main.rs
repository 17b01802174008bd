mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rootcluster::catalog::{catalog, find};
use rootcluster::clustercalc::{
    ascending_chain, cluster_partition, cluster_report, cluster_tower, complete_ordering, descending_chain,
    link_profile, root_capacity, tower_sweep, ChainReport, ClusterReport,
};
use rootcluster::magnification::{base_change_verify, detect_strong_magnification, magnify};
use rootcluster::permcore::{DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER};
use rootcluster::verify::verify;
use rootcluster::{Limits, RootPair};
use serde::Serialize;

use input::{load, load_group, parse_ordering, Failure, Outcome};
use render::{json, list, yes, Table};

/// Root clusters, towers, chains and magnification for permutation groups.
///
/// A SPEC is either `catalog:NAME` (e.g. `catalog:metacyclic:12`,
/// `catalog:wreathlike:3:2`, `catalog:tuples:5:2`, `catalog:nPk-5-2`,
/// `catalog:wreathlike:3:2*cyclic:2`) or a JSON file
/// `{"degree": n, "generators": [[...]], "subgroup": {"stabilizer_of": 1}}`.
#[derive(Debug, Parser)]
#[command(name = "rootcluster", version)]
struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Largest permutation degree accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cluster size r, cluster count s and the cluster partition.
    Invariants { spec: String },
    /// Cluster tower for one ordering of representatives, or all orderings.
    Tower {
        spec: String,
        /// 1-based representatives, e.g. `1,4,2` or `1,4,2,...`.
        #[arg(long, conflicts_with = "all_orders", required_unless_present = "all_orders")]
        order: Option<String>,
        /// Sweep every ordering of the clusters.
        #[arg(long)]
        all_orders: bool,
    },
    /// The unique descending or ascending chain.
    Chain {
        spec: String,
        #[arg(long, conflicts_with = "ascending", required_unless_present = "ascending")]
        descending: bool,
        #[arg(long)]
        ascending: bool,
    },
    /// Root capacity of the SPEC's field against the field of `--upper`.
    Capacity {
        spec: String,
        /// SPEC over the same group whose subgroup contains the first one.
        #[arg(long)]
        upper: String,
    },
    /// Decompositions exhibiting a strong cluster magnification.
    Detect { spec: String },
    /// Magnify by a Galois extension with the given group.
    Magnify {
        spec: String,
        #[arg(long)]
        by: String,
    },
    /// Check invariants under base change by the given group.
    Basechange {
        spec: String,
        #[arg(long)]
        by: String,
    },
    /// Built-in fixtures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the full invariant suite.
    Verify { spec: String },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List fixture names.
    List,
    /// Evaluate every expectation of one fixture.
    Run { name: String },
}

struct Ctx {
    json: bool,
    limits: Limits,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce()) -> Outcome<()> {
        if self.json {
            println!("{}", json(value)?);
        } else {
            text();
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Invariants {
    #[serde(flatten)]
    report: ClusterReport,
    order: usize,
    clusters: Vec<Vec<usize>>,
}

fn invariants(ctx: &Ctx, spec: &str) -> Outcome<()> {
    let p = load(spec, ctx.limits)?.pair()?;
    let report = cluster_report(&p)?;
    let clusters: Vec<Vec<usize>> = cluster_partition(&p)?
        .into_iter()
        .map(|b| b.into_iter().map(|x| x + 1).collect())
        .collect();
    let out = Invariants {
        order: p.group().order(),
        clusters,
        report,
    };
    ctx.emit(&out, || {
        let mut t = Table::default();
        t.kv("n", out.report.n)
            .kv("r", out.report.r)
            .kv("s", out.report.s)
            .kv("|G|", out.order)
            .kv("|Aut|", out.report.aut_order);
        let blocks: Vec<String> = out.clusters.iter().map(|b| format!("{{{}}}", list(b))).collect();
        t.kv("clusters", blocks.join(" "));
        t.kv("fingerprint", &out.report.fingerprint);
        t.print();
    })
}

fn tower(ctx: &Ctx, spec: &str, order: Option<&str>) -> Outcome<()> {
    let p = load(spec, ctx.limits)?.pair()?;
    match order {
        Some(text) => {
            let (prefix, open) = parse_ordering(text)?;
            let ordering = if open { complete_ordering(&p, &prefix)? } else { prefix };
            let t = cluster_tower(&p, &ordering)?;
            ctx.emit(&t, || {
                let mut tb = Table::default();
                tb.kv("ordering", list(&t.ordering))
                    .kv("jumps", list(&t.jump_indices))
                    .kv("degrees", list(&t.degree_sequence))
                    .kv("length", t.length)
                    .kv("order bound", t.order_bound)
                    .kv("bound holds", yes(t.bound_holds));
                tb.print();
            })
        }
        None => {
            let sw = tower_sweep(&p)?;
            ctx.emit(&sw, || {
                println!("{} clusters, {} orderings", sw.s, sw.orderings);
                let mut tb = Table::with_header(&["degrees", "length", "orderings"]);
                for o in &sw.outcomes {
                    tb.row(vec![list(&o.degree_sequence), o.length.to_string(), o.orderings.to_string()]);
                }
                tb.print();
                println!("bound holds for every ordering: {}", yes(sw.bound_holds_everywhere));
            })
        }
    }
}

fn chain(ctx: &Ctx, spec: &str, ascending: bool) -> Outcome<()> {
    let e = load(spec, ctx.limits)?.extension()?;
    let c: ChainReport = if ascending { ascending_chain(&e)? } else { descending_chain(&e)? };
    ctx.emit(&c, || {
        let kind = if ascending { "ascending" } else { "descending" };
        println!("{kind} chain: {} subgroups, {} steps", c.len(), c.step_indices.len());
        let mut tb = Table::with_header(&["step", "order", "index"]);
        for (i, s) in c.subgroup_chain.iter().enumerate() {
            let idx = if i == 0 { "-".to_string() } else { c.step_indices[i - 1].to_string() };
            tb.row(vec![i.to_string(), s.order().to_string(), idx]);
        }
        tb.print();
        if let (Some(t), Some(u)) = (c.t, c.u) {
            println!("t = {t}, u = {u}");
        }
    })
}

fn capacity(ctx: &Ctx, spec: &str, upper: &str) -> Outcome<()> {
    let m = load(spec, ctx.limits)?;
    let l = load(upper, ctx.limits)?;
    if !m.group.same_as(&l.group) {
        return Err(Failure::Input("--upper must use the same group as SPEC".into()));
    }
    let sub_l = l.sub.within(&m.group)?;
    let c = root_capacity(&m.group, &m.sub, &sub_l)?;
    ctx.emit(&c, || {
        let mut tb = Table::default();
        tb.kv("rho", c.rho)
            .kv("a", c.a)
            .kv("r", c.r)
            .kv("s", c.s)
            .kv("witness clusters", list(&c.witness_cosets))
            .kv("|T|", c.support_subgroup.order())
            .kv("fingerprint", &c.fingerprint);
        tb.print();
    })
}

fn detect(ctx: &Ctx, spec: &str) -> Outcome<()> {
    let p = load(spec, ctx.limits)?.pair()?;
    let found = detect_strong_magnification(&p)?;
    ctx.emit(&found, || {
        if found.is_empty() {
            println!("no strong cluster magnification");
            return;
        }
        let mut tb = Table::with_header(&["|A|", "|B|", "|L subgroup|", "factor"]);
        for d in &found {
            tb.row(vec![
                d.a.order().to_string(),
                d.b.order().to_string(),
                d.l_subgroup.order().to_string(),
                d.magnification_factor.to_string(),
            ]);
        }
        tb.print();
    })
}

#[derive(Serialize)]
struct Summary {
    n: usize,
    r: usize,
    s: usize,
    t: usize,
    u: usize,
    order: usize,
    fingerprint: String,
}

fn summary(p: &RootPair) -> Outcome<Summary> {
    let l = link_profile(p)?;
    Ok(Summary {
        n: l.n,
        r: l.r,
        s: l.s,
        t: l.t,
        u: l.u,
        order: p.group().order(),
        fingerprint: l.fingerprint,
    })
}

#[derive(Serialize)]
struct Magnification {
    base: Summary,
    magnified: Summary,
    factor: usize,
    pair: RootPair,
}

fn magnify_cmd(ctx: &Ctx, spec: &str, by: &str) -> Outcome<()> {
    let p = load(spec, ctx.limits)?.pair()?;
    let r = load_group(by, ctx.limits)?;
    let q = magnify(&p, &r)?;
    let out = Magnification {
        base: summary(&p)?,
        magnified: summary(&q)?,
        factor: r.order(),
        pair: q,
    };
    ctx.emit(&out, || {
        let mut tb = Table::with_header(&["", "n", "r", "s", "t", "u", "|G|"]);
        for (label, s) in [("base", &out.base), ("magnified", &out.magnified)] {
            let cells = [s.n, s.r, s.s, s.t, s.u, s.order].map(|x| x.to_string());
            tb.row(std::iter::once(label.to_string()).chain(cells).collect());
        }
        tb.print();
        println!("factor {}", out.factor);
    })
}

fn basechange(ctx: &Ctx, spec: &str, by: &str) -> Outcome<()> {
    let p = load(spec, ctx.limits)?.pair()?;
    let r = load_group(by, ctx.limits)?;
    let rep = base_change_verify(&p, &r)?;
    ctx.emit(&rep, || {
        let mut tb = Table::default();
        tb.kv("galois preserved", yes(rep.galois_preserved))
            .kv("cluster size", yes(rep.cluster_size))
            .kv("descending chain", yes(rep.descending_chain))
            .kv("ascending chain", yes(rep.ascending_chain))
            .kv("root capacity", yes(rep.root_capacity))
            .kv("ascending index", yes(rep.ascending_index))
            .kv("weak magnification", yes(rep.weak_magnification))
            .kv("subgroups checked", rep.subgroups_checked)
            .kv("exhaustive", yes(rep.exhaustive));
        tb.print();
    })?;
    if rep.all_pass {
        Ok(())
    } else {
        Err(Failure::Violation("base change changed an invariant".into()))
    }
}

#[derive(Serialize)]
struct Entry {
    name: &'static str,
    summary: &'static str,
}

fn catalog_cmd(ctx: &Ctx, action: &CatalogAction) -> Outcome<()> {
    match action {
        CatalogAction::List => {
            let entries: Vec<Entry> = catalog()
                .iter()
                .map(|f| Entry {
                    name: f.name,
                    summary: f.summary,
                })
                .collect();
            ctx.emit(&entries, || {
                let mut tb = Table::default();
                for e in &entries {
                    tb.kv(e.name, e.summary);
                }
                tb.print();
            })
        }
        CatalogAction::Run { name } => {
            let f = find(name).ok_or_else(|| Failure::Input(format!("unknown fixture {name:?}")))?;
            let run = f.run()?;
            ctx.emit(&run, || {
                let mut tb = Table::with_header(&["assertion", "expected", "actual", ""]);
                for a in &run.assertions {
                    let mark = if a.pass { "PASS" } else { "FAIL" };
                    tb.row(vec![a.label.clone(), a.expected.clone(), a.actual.clone(), mark.into()]);
                }
                tb.print();
            })?;
            if run.passed {
                Ok(())
            } else {
                Err(Failure::Violation(format!("fixture {name} failed")))
            }
        }
    }
}

fn verify_cmd(ctx: &Ctx, spec: &str) -> Outcome<()> {
    let p = load(spec, ctx.limits)?.pair()?;
    let rep = verify(&p)?;
    ctx.emit(&rep, || {
        let mut tb = Table::default();
        for c in &rep.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            tb.row(vec![c.name.to_string(), mark.into(), c.detail.clone().unwrap_or_default()]);
        }
        tb.print();
        for s in &rep.skipped {
            println!("skipped {s}");
        }
    })?;
    let failed = rep.failures().count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Violation(format!("{failed} check(s) failed")))
    }
}

fn run(cli: &Cli) -> Outcome<()> {
    let ctx = Ctx {
        json: cli.json,
        limits: Limits {
            max_order: cli.max_order,
            max_degree: cli.max_degree,
        },
    };
    match &cli.command {
        Command::Invariants { spec } => invariants(&ctx, spec),
        Command::Tower { spec, order, .. } => tower(&ctx, spec, order.as_deref()),
        Command::Chain { spec, ascending, .. } => chain(&ctx, spec, *ascending),
        Command::Capacity { spec, upper } => capacity(&ctx, spec, upper),
        Command::Detect { spec } => detect(&ctx, spec),
        Command::Magnify { spec, by } => magnify_cmd(&ctx, spec, by),
        Command::Basechange { spec, by } => basechange(&ctx, spec, by),
        Command::Catalog { action } => catalog_cmd(&ctx, action),
        Command::Verify { spec } => verify_cmd(&ctx, spec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("rootcluster: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
