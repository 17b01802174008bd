//! Resolving a SPEC argument: a `catalog:` URI or a JSON file.

use std::fmt;
use std::path::Path;

use rootcluster::catalog::{build, build_group};
use rootcluster::{Error, ExtensionPair, Group, Limits, Permutation, RootPair, Subgroup};
use serde::Deserialize;

/// Why a command failed, mapped onto the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input files: exit 2.
    Input(String),
    /// A resource cap was hit: exit 3.
    Cap(String),
    /// An invariant did not hold: exit 1.
    Violation(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Cap(m) => write!(f, "{m}"),
            Failure::Violation(m) => write!(f, "invariant violation: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GroupTooLarge { .. } => Failure::Cap(e.to_string()),
            Error::Inconsistent(_) => Failure::Violation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub type Outcome<T> = Result<T, Failure>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    degree: usize,
    generators: Vec<Vec<usize>>,
    subgroup: SubgroupSpec,
    #[serde(default)]
    name: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubgroupSpec {
    #[serde(default)]
    generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    stabilizer_of: Option<Points>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Points {
    One(usize),
    Many(Vec<usize>),
}

/// A group with a subgroup, as read from a SPEC.
#[derive(Debug, Clone)]
pub struct Input {
    pub name: String,
    pub group: Group,
    pub sub: Subgroup,
}

impl Input {
    pub fn extension(&self) -> Outcome<ExtensionPair> {
        Ok(ExtensionPair::new(&self.group, &self.sub)?)
    }

    /// The root pair of the fixed field: the input itself when the subgroup
    /// is a point stabilizer of a transitive group, otherwise the action on
    /// its cosets.
    pub fn pair(&self) -> Outcome<RootPair> {
        match RootPair::from_stabilizer(self.group.clone(), &self.sub) {
            Ok(p) => Ok(p),
            Err(Error::InvalidRootPair(_)) => {
                eprintln!(
                    "note: {} is not a point stabilizer of a transitive group; using the action on its {} cosets",
                    self.name,
                    self.sub.index()
                );
                Ok(self.extension()?.reduce()?)
            }
            Err(e) => Err(e.into()),
        }
    }
}

fn perm(degree: usize, images: &[usize], field: &str) -> Outcome<Permutation> {
    if images.len() != degree {
        return Err(Failure::Input(format!(
            "{field}: expected {degree} images, found {}",
            images.len()
        )));
    }
    Permutation::from_one_based(images).map_err(|e| Failure::Input(format!("{field}: {e}")))
}

fn from_file(path: &str, limits: Limits) -> Outcome<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    let spec: SpecFile = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    if spec.degree == 0 {
        return Err(Failure::Input(format!("{path}: degree: must be at least 1")));
    }
    let gens = spec
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| perm(spec.degree, g, &format!("{path}: generators[{i}]")))
        .collect::<Outcome<Vec<_>>>()?;
    let group = Group::generate_with(spec.degree, gens, limits)?;
    let sub = match (&spec.subgroup.generators, &spec.subgroup.stabilizer_of) {
        (Some(gens), None) => {
            let mut sg = Vec::with_capacity(gens.len());
            for (i, g) in gens.iter().enumerate() {
                let field = format!("{path}: subgroup.generators[{i}]");
                let p = perm(spec.degree, g, &field)?;
                if !group.contains(&p) {
                    return Err(Failure::Input(format!("{field}: not an element of the group")));
                }
                sg.push(p);
            }
            Subgroup::generated(&group, sg)?
        }
        (None, Some(points)) => {
            let points = match points {
                Points::One(p) => vec![*p],
                Points::Many(ps) => ps.clone(),
            };
            if let Some(&bad) = points.iter().find(|&&p| p == 0 || p > spec.degree) {
                return Err(Failure::Input(format!(
                    "{path}: subgroup.stabilizer_of: point {bad} is outside 1..={}",
                    spec.degree
                )));
            }
            let zero: Vec<usize> = points.iter().map(|p| p - 1).collect();
            group.pointwise_stabilizer(&zero)?
        }
        _ => {
            return Err(Failure::Input(format!(
                "{path}: subgroup: give exactly one of \"generators\" or \"stabilizer_of\""
            )))
        }
    };
    Ok(Input {
        name: spec.name.unwrap_or_else(|| Path::new(path).display().to_string()),
        group,
        sub,
    })
}

/// `catalog:NAME` or a path to a JSON spec file.
pub fn load(spec: &str, limits: Limits) -> Outcome<Input> {
    match spec.strip_prefix("catalog:") {
        Some(name) => {
            let p = build(name, limits)?;
            Ok(Input {
                name: spec.to_string(),
                group: p.group().clone(),
                sub: p.stabilizer().clone(),
            })
        }
        None => from_file(spec, limits),
    }
}

/// A group from a SPEC: catalog group names (`catalog:cyclic:3`,
/// `catalog:klein`, ...) or the group of any pair SPEC.
pub fn load_group(spec: &str, limits: Limits) -> Outcome<Group> {
    match spec.strip_prefix("catalog:") {
        Some(name) => Ok(build_group(name, limits)?),
        None => Ok(from_file(spec, limits)?.group),
    }
}

/// Parses `1,4,2` or `1,4,2,...` into 0-based points and a flag asking for
/// completion.
pub fn parse_ordering(text: &str) -> Outcome<(Vec<usize>, bool)> {
    let mut points = Vec::new();
    let mut open = false;
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    for (i, part) in parts.iter().enumerate() {
        if *part == "..." || *part == "…" {
            if i + 1 != parts.len() {
                return Err(Failure::Input("--order: \"...\" may only appear last".into()));
            }
            open = true;
            continue;
        }
        let p: usize = part
            .parse()
            .map_err(|_| Failure::Input(format!("--order: {part:?} is not a point")))?;
        if p == 0 {
            return Err(Failure::Input("--order: points are 1-based".into()));
        }
        points.push(p - 1);
    }
    Ok((points, open))
}
