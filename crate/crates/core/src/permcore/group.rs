//! Fully enumerated permutation groups and their subgroups.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::perm::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 200_000;
pub const DEFAULT_MAX_DEGREE: usize = 5_000;

/// Resource caps carried by every group and inherited by groups derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Limits {
    pub(crate) fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::GroupTooLarge {
                cap: self.max_degree,
                what: "points",
            });
        }
        Ok(())
    }
}

struct GroupData {
    degree: usize,
    generators: OnceLock<Vec<Permutation>>,
    elements: Vec<Permutation>,
    limits: Limits,
}

/// A permutation group together with its complete, canonically sorted
/// element list. Cloning is cheap.
#[derive(Clone)]
pub struct Group {
    data: Arc<GroupData>,
}

/// Breadth-first closure of `generators` under composition.
///
/// Returns the sorted element list. Fails once more than `cap` elements have
/// been produced.
pub(crate) fn enumerate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in &gens {
            let y = x.compose_unchecked(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap, what: "elements" });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    Ok(queue)
}

impl Group {
    /// Enumerates the group generated by `generators` on `degree` points
    /// under the default caps.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        Group::generate_with(degree, generators, Limits::default())
    }

    /// Enumerates the group generated by `generators`, failing with
    /// `GroupTooLarge` past `limits.max_order` elements. An empty generator
    /// list gives the trivial group.
    pub fn generate_with(degree: usize, generators: Vec<Permutation>, limits: Limits) -> Result<Group> {
        if degree == 0 {
            return Err(Error::BadParameter("degree must be positive".into()));
        }
        limits.check_degree(degree)?;
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = enumerate(degree, &generators, limits.max_order)?;
        let generators = OnceLock::from(generators);
        Ok(Group {
            data: Arc::new(GroupData {
                degree,
                generators,
                elements,
                limits,
            }),
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_sorted_elements(degree, vec![Permutation::identity(degree)], Limits::default())
    }

    /// Wraps an already sorted, closed element list. Generators are derived
    /// lazily when first needed.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Permutation>, limits: Limits) -> Group {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first().is_some_and(|e| e.is_identity()));
        Group {
            data: Arc::new(GroupData {
                degree,
                generators: OnceLock::new(),
                elements,
                limits,
            }),
        }
    }

    pub(crate) fn with_generators(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>, limits: Limits) -> Group {
        Group {
            data: Arc::new(GroupData {
                degree,
                generators: OnceLock::from(generators),
                elements,
                limits,
            }),
        }
    }

    /// Same elements and generators, different caps.
    pub fn with_limits(&self, limits: Limits) -> Group {
        let generators = self.generators().to_vec();
        Group::with_generators(self.degree(), generators, self.data.elements.clone(), limits)
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn limits(&self) -> Limits {
        self.data.limits
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.data.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.data.elements[0]
    }

    /// The generators the group was built from or, for groups defined by an
    /// element set, a canonical greedy generating set.
    pub fn generators(&self) -> &[Permutation] {
        self.data
            .generators
            .get_or_init(|| greedy_generators(self.degree(), &self.data.elements))
    }

    /// Canonical generating set: scan the elements in sorted order and keep
    /// each one not already generated by those kept before it.
    pub fn canonical_generators(&self) -> Vec<Permutation> {
        greedy_generators(self.degree(), &self.data.elements)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree() && self.data.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.data.elements.binary_search(p).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Same underlying element set (pointer equality short-circuits).
    pub fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.degree() == other.degree() && self.data.elements == other.data.elements)
    }

    pub(crate) fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        Ok(())
    }

    /// The whole group viewed as a subgroup of itself.
    pub fn as_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            group: self.clone(),
        }
    }

    /// Stabilizer of a single point.
    pub fn stabilizer(&self, point: usize) -> Result<Subgroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Subgroup fixing every listed point.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<Subgroup> {
        if let Some(&p) = points.iter().find(|&&p| p >= self.degree()) {
            return Err(Error::BadParameter(format!(
                "point {} is outside 1..={}",
                p + 1,
                self.degree()
            )));
        }
        let elements: Vec<Permutation> = self
            .elements()
            .iter()
            .filter(|g| points.iter().all(|&p| g.fixes(p)))
            .cloned()
            .collect();
        Ok(Subgroup::from_sorted_unchecked(self, elements))
    }
}

fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: Vec<Permutation> = vec![Permutation::identity(degree)];
    if elements.len() <= 1 {
        return gens;
    }
    for e in elements {
        if current.binary_search(e).is_ok() {
            continue;
        }
        gens.push(e.clone());
        // elements are already known to be closed, so the cap cannot trip
        current = enumerate(degree, &gens, usize::MAX).expect("uncapped enumeration");
        if current.len() == elements.len() {
            break;
        }
    }
    gens
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Group {}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Group", 3)?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("generators", &self.canonical_generators())?;
        s.end()
    }
}

/// A subgroup together with the group it lives in.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    group: Group,
}

impl Subgroup {
    /// Closes `generators` and checks the result lies in `parent`.
    pub fn generated(parent: &Group, generators: Vec<Permutation>) -> Result<Subgroup> {
        for g in &generators {
            parent.check_degree(g)?;
            if !parent.contains(g) {
                return Err(Error::NotASubgroup);
            }
        }
        let elements = enumerate(parent.degree(), &generators, parent.limits().max_order)?;
        let group = Group::with_generators(parent.degree(), generators, elements, parent.limits());
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    /// Validates an arbitrary element set as a subgroup of `parent`.
    pub fn from_elements(parent: &Group, elements: Vec<Permutation>) -> Result<Subgroup> {
        for e in &elements {
            parent.check_degree(e)?;
        }
        if !super::ops::is_subgroup(parent, &elements)? {
            return Err(Error::NotASubgroup);
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        Ok(Subgroup::from_sorted_unchecked(parent, elements))
    }

    pub(crate) fn from_sorted_unchecked(parent: &Group, elements: Vec<Permutation>) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            group: Group::from_sorted_elements(parent.degree(), elements, parent.limits()),
        }
    }

    pub fn trivial(parent: &Group) -> Subgroup {
        Subgroup::from_sorted_unchecked(parent, vec![parent.identity().clone()])
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    /// The subgroup as a group in its own right.
    pub fn as_group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn elements(&self) -> &[Permutation] {
        self.group.elements()
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.group.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial()
    }

    /// `[parent : self]`.
    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    /// Same subgroup, reinterpreted inside another group that contains it.
    pub fn within(&self, new_parent: &Group) -> Result<Subgroup> {
        if new_parent.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: new_parent.degree(),
                found: self.degree(),
            });
        }
        if !new_parent.order().is_multiple_of(self.order()) || !self.elements().iter().all(|e| new_parent.contains(e)) {
            return Err(Error::NotASubgroup);
        }
        Ok(Subgroup {
            parent: new_parent.clone(),
            group: self.group.clone(),
        })
    }

    /// Element-set containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.group.same_as(&other.group)
    }

    /// The 1-based canonical generators, used for display and serialization.
    pub fn canonical_generators(&self) -> Vec<Permutation> {
        self.group.canonical_generators()
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("parent_order", &self.parent.order())
            .field("generators", &self.generators())
            .finish()
    }
}

/// Subgroups compare by element set; the parent is not part of identity.
impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_elements(other)
    }
}

impl Eq for Subgroup {}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Subgroup", 3)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("index", &self.index())?;
        s.serialize_field("generators", &self.canonical_generators())?;
        s.end()
    }
}

pub(crate) fn check_parent(g: &Group, h: &Subgroup) -> Result<()> {
    if !h.parent().same_as(g) {
        if h.degree() == g.degree() && h.elements().iter().all(|e| g.contains(e)) {
            return Ok(());
        }
        return Err(Error::NotASubgroup);
    }
    Ok(())
}
