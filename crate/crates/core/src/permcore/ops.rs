//! Subgroup operations over enumerated groups: normalizers, normal closures,
//! cores, cosets and the induced actions, orbits and fixed points.
//!
//! Everything is computed from the definitions over the enumerated parent.

use std::collections::{BTreeSet, HashSet};

use super::group::{check_parent, enumerate, Group, Subgroup};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// True iff `set` is a subset of `g` that contains the identity and is closed
/// under composition and inverses.
pub fn is_subgroup(g: &Group, set: &[Permutation]) -> Result<bool> {
    for p in set {
        g.check_degree(p)?;
    }
    let members: HashSet<&Permutation> = set.iter().collect();
    if !members.contains(g.identity()) || !set.iter().all(|p| g.contains(p)) {
        return Ok(false);
    }
    for a in &members {
        if !members.contains(&a.inverse()) {
            return Ok(false);
        }
        for b in &members {
            if !members.contains(&a.compose_unchecked(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{g ∈ G : gHg⁻¹ = H}`, tested element by element.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    check_parent(g, h)?;
    let gens = h.generators();
    let elements: Vec<Permutation> = g
        .elements()
        .iter()
        .filter(|x| gens.iter().all(|y| h.contains(&x.conjugate(y))))
        .cloned()
        .collect();
    Ok(Subgroup::from_sorted_unchecked(g, elements))
}

/// Smallest normal subgroup of `g` containing `h`.
pub fn normal_closure(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    check_parent(g, h)?;
    normal_closure_of(g, h.generators().to_vec())
}

pub(crate) fn normal_closure_of(g: &Group, mut gens: Vec<Permutation>) -> Result<Subgroup> {
    let cap = g.limits().max_order;
    let mut elements = enumerate(g.degree(), &gens, cap)?;
    loop {
        let mut extra = None;
        'search: for s in g.generators() {
            for y in &gens {
                let c = s.conjugate(y);
                if elements.binary_search(&c).is_err() {
                    extra = Some(c);
                    break 'search;
                }
            }
        }
        match extra {
            Some(c) => {
                gens.push(c);
                elements = enumerate(g.degree(), &gens, cap)?;
            }
            None => break,
        }
    }
    Ok(Subgroup::from_sorted_unchecked(g, elements))
}

/// Intersection of all conjugates of `h`: the kernel of the action on `G/H`.
pub fn core(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    check_parent(g, h)?;
    let table = CosetTable::new(g, h)?;
    let mut kept: Vec<Permutation> = h.elements().to_vec();
    for t in &table.reps {
        let tinv = t.inverse();
        kept.retain(|x| h.contains(&tinv.conjugate(x)));
        if kept.len() == 1 {
            break;
        }
    }
    Ok(Subgroup::from_sorted_unchecked(g, kept))
}

/// `σHσ⁻¹` as a subgroup of the same parent.
pub fn conjugate_subgroup(h: &Subgroup, sigma: &Permutation) -> Subgroup {
    let mut elements: Vec<Permutation> = h.elements().iter().map(|x| sigma.conjugate(x)).collect();
    elements.sort_unstable();
    Subgroup::from_sorted_unchecked(h.parent(), elements)
}

pub fn is_normal(g: &Group, h: &Subgroup) -> Result<bool> {
    check_parent(g, h)?;
    Ok(g
        .generators()
        .iter()
        .all(|s| h.generators().iter().all(|y| h.contains(&s.conjugate(y)))))
}

/// Left cosets of `h` in `g`, indexed by canonical representative order.
pub struct CosetTable {
    /// Lexicographically least element of each left coset, sorted; the
    /// identity's coset comes first.
    pub reps: Vec<Permutation>,
    /// For each element of `g` (by its index in the sorted element list), the
    /// index of its coset.
    pub coset_of: Vec<usize>,
}

impl CosetTable {
    pub fn new(g: &Group, h: &Subgroup) -> Result<CosetTable> {
        check_parent(g, h)?;
        const UNSET: usize = usize::MAX;
        let mut coset_of = vec![UNSET; g.order()];
        let mut reps = Vec::with_capacity(g.order() / h.order());
        for (i, x) in g.elements().iter().enumerate() {
            if coset_of[i] != UNSET {
                continue;
            }
            let id = reps.len();
            reps.push(x.clone());
            for y in h.elements() {
                let j = g.index_of(&x.compose_unchecked(y)).expect("coset element lies in the group");
                coset_of[j] = id;
            }
        }
        Ok(CosetTable { reps, coset_of })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coset index of the coset containing `x`.
    pub fn locate(&self, g: &Group, x: &Permutation) -> Option<usize> {
        g.index_of(x).map(|i| self.coset_of[i])
    }
}

/// One representative per left coset, each the lexicographically least
/// element of its coset, in canonical order.
pub fn coset_reps(g: &Group, h: &Subgroup) -> Result<Vec<Permutation>> {
    Ok(CosetTable::new(g, h)?.reps)
}

/// The permutation group induced by `g` on the left cosets of `h`, with
/// points numbered in [`coset_reps`] order.
pub fn coset_action(g: &Group, h: &Subgroup) -> Result<Group> {
    let table = CosetTable::new(g, h)?;
    let degree = table.len();
    g.limits().check_degree(degree)?;
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let images = table
                .reps
                .iter()
                .map(|r| table.locate(g, &s.compose_unchecked(r)).expect("closed under the action") as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Group::generate_with(degree, gens, g.limits())
}

/// Points fixed by every element of the group.
pub fn fixed_points(g: &Group) -> Vec<usize> {
    (0..g.degree())
        .filter(|&i| g.generators().iter().all(|s| s.fixes(i)))
        .collect()
}

/// Orbit partition of the points, each orbit sorted, orbits ordered by their
/// least point.
pub fn orbits(g: &Group) -> Vec<Vec<usize>> {
    let n = g.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in g.generators() {
                let y = s.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn is_transitive(g: &Group) -> bool {
    orbits(g).len() == 1
}

/// For each point, an element of `g` sending `base` to it (if any).
pub fn transversal(g: &Group, base: usize) -> Vec<Option<Permutation>> {
    let mut out: Vec<Option<Permutation>> = vec![None; g.degree()];
    out[base] = Some(g.identity().clone());
    let mut queue = vec![base];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let word = out[x].clone().expect("visited");
        for s in g.generators() {
            let y = s.apply(x);
            if out[y].is_none() {
                out[y] = Some(s.compose_unchecked(&word));
                queue.push(y);
            }
        }
    }
    out
}

fn check_same_parent(a: &Subgroup, b: &Subgroup) -> Result<()> {
    if !a.parent().same_as(b.parent()) {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

pub fn intersect(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    check_same_parent(a, b)?;
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let elements = small.elements().iter().filter(|x| large.contains(x)).cloned().collect();
    Ok(Subgroup::from_sorted_unchecked(a.parent(), elements))
}

/// Subgroup generated by `a ∪ b` inside their common parent.
pub fn join(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    check_same_parent(a, b)?;
    if b.is_contained_in(a) {
        return Ok(a.clone());
    }
    if a.is_contained_in(b) {
        return Ok(b.clone());
    }
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    let parent = a.parent();
    let elements = enumerate(parent.degree(), &gens, parent.limits().max_order)?;
    Ok(Subgroup::from_sorted_unchecked(parent, elements))
}

/// Subgroup generated by `a` and one extra element of the parent.
pub(crate) fn join_element(a: &Subgroup, x: &Permutation) -> Result<Subgroup> {
    let mut gens = a.generators().to_vec();
    gens.push(x.clone());
    let parent = a.parent();
    let elements = enumerate(parent.degree(), &gens, parent.limits().max_order)?;
    Ok(Subgroup::from_sorted_unchecked(parent, elements))
}

/// Conjugacy classes of `g`, each sorted, ordered by least element.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<Permutation>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for (i, x) in g.elements().iter().enumerate() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut class = vec![x.clone()];
        let mut head = 0;
        while head < class.len() {
            let y = class[head].clone();
            head += 1;
            for s in g.generators() {
                let z = s.conjugate(&y);
                let j = g.index_of(&z).expect("conjugate lies in the group");
                if !assigned[j] {
                    assigned[j] = true;
                    class.push(z);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// All normal subgroups: normal closures of cyclic subgroups (one per
/// conjugacy class), closed under pairwise joins. Sorted by order, then by
/// element list.
pub fn normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let mut found: Vec<Subgroup> = Vec::new();
    let mut keys: HashSet<Vec<Permutation>> = HashSet::new();
    for class in conjugacy_classes(g) {
        let n = normal_closure_of(g, vec![class[0].clone()])?;
        if keys.insert(n.elements().to_vec()) {
            found.push(n);
        }
    }
    // every normal subgroup is a join of class closures
    let atoms = found.len();
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for j in 0..atoms {
                if found[j].is_contained_in(&found[i]) {
                    continue;
                }
                let joined = join(&found[i], &found[j])?;
                if keys.insert(joined.elements().to_vec()) {
                    found.push(joined);
                    next.push(found.len() - 1);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(found)
}

/// Every subgroup `U` with `h ≤ U ≤ g`, sorted by order then element list.
///
/// Grows the lattice upwards from `h` by joining one coset representative at
/// a time; every overgroup is reached this way.
pub fn intermediate_subgroups(g: &Group, h: &Subgroup) -> Result<Vec<Subgroup>> {
    check_parent(g, h)?;
    let h = h.within(g)?;
    let mut found = vec![h.clone()];
    let mut keys: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    keys.insert(h.elements().to_vec());
    let mut head = 0;
    while head < found.len() {
        let u = found[head].clone();
        head += 1;
        for t in coset_reps(g, &u)?.iter().skip(1) {
            let v = join_element(&u, t)?;
            if keys.insert(v.elements().to_vec()) {
                found.push(v);
            }
        }
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(found)
}
