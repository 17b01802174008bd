//! The two pair types the calculus runs on.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::permcore::{core, coset_action, fixed_points, is_transitive, Group, Subgroup};

/// A transitive group with the stabilizer of a base point: the model of a
/// simple extension `K(α)/K` whose roots are the points.
#[derive(Debug, Clone)]
pub struct RootPair {
    group: Group,
    stabilizer: Subgroup,
    base: usize,
}

impl RootPair {
    /// Pair with the stabilizer of point 0.
    pub fn new(group: Group) -> Result<RootPair> {
        RootPair::with_base(group, 0)
    }

    pub fn with_base(group: Group, base: usize) -> Result<RootPair> {
        if base >= group.degree() {
            return Err(Error::InvalidRootPair(format!(
                "base point {} is outside 1..={}",
                base + 1,
                group.degree()
            )));
        }
        if !is_transitive(&group) {
            return Err(Error::InvalidRootPair("group is not transitive".into()));
        }
        let stabilizer = group.stabilizer(base)?;
        if stabilizer.index() != group.degree() {
            return Err(Error::Inconsistent("orbit-stabilizer count".into()));
        }
        if !core(&group, &stabilizer)?.is_trivial() {
            return Err(Error::InvalidRootPair("action is not faithful".into()));
        }
        Ok(RootPair {
            group,
            stabilizer,
            base,
        })
    }

    /// Accepts `h` only if it is the full stabilizer of one of its fixed points.
    pub fn from_stabilizer(group: Group, h: &Subgroup) -> Result<RootPair> {
        let fixed = fixed_points(h.as_group());
        for p in fixed {
            let stab = group.stabilizer(p)?;
            if stab == *h {
                return RootPair::with_base(group, p);
            }
        }
        Err(Error::InvalidRootPair("subgroup is not a point stabilizer".into()))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// `n`, the degree of the modelled extension.
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn to_extension(&self) -> ExtensionPair {
        ExtensionPair {
            ambient: self.group.clone(),
            sub: self.stabilizer.clone(),
        }
    }

    pub fn fingerprint(&self) -> String {
        fingerprint(&self.group, &self.stabilizer)
    }
}

impl Serialize for RootPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RootPair", 4)?;
        s.serialize_field("n", &self.degree())?;
        s.serialize_field("base", &(self.base + 1))?;
        s.serialize_field("group", &self.group)?;
        s.serialize_field("stabilizer", &self.stabilizer)?;
        s.end()
    }
}

/// A subgroup `U` of a group `Γ` regarded as Galois over the base: the model
/// of the fixed field of `U`, of degree `[Γ:U]`.
#[derive(Debug, Clone)]
pub struct ExtensionPair {
    ambient: Group,
    sub: Subgroup,
}

impl ExtensionPair {
    pub fn new(ambient: &Group, sub: &Subgroup) -> Result<ExtensionPair> {
        let sub = sub
            .within(ambient)
            .map_err(|_| Error::InvalidExtensionPair("subgroup does not lie in the ambient group".into()))?;
        Ok(ExtensionPair {
            ambient: ambient.clone(),
            sub,
        })
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    pub fn sub(&self) -> &Subgroup {
        &self.sub
    }

    /// `[Γ:U]`.
    pub fn degree(&self) -> usize {
        self.sub.index()
    }

    /// The faithful transitive pair induced on the cosets of `U`; the
    /// identity coset is point 0 and carries the image of `U`.
    pub fn reduce(&self) -> Result<RootPair> {
        let act = coset_action(&self.ambient, &self.sub)?;
        RootPair::new(act)
    }

    pub fn fingerprint(&self) -> String {
        fingerprint(&self.ambient, &self.sub)
    }
}

/// Hex SHA-256 over the degree and the sorted element lists of both groups.
pub fn fingerprint(g: &Group, h: &Subgroup) -> String {
    fingerprint_many(g, &[h])
}

pub fn fingerprint_many(g: &Group, subs: &[&Subgroup]) -> String {
    let mut hasher = Sha256::new();
    hasher.update((g.degree() as u64).to_le_bytes());
    let parts = std::iter::once(g.elements()).chain(subs.iter().map(|h| h.elements()));
    for part in parts {
        hasher.update((part.len() as u64).to_le_bytes());
        for p in part {
            for &x in p.images() {
                hasher.update(x.to_le_bytes());
            }
        }
    }
    hex::encode(hasher.finalize())
}
