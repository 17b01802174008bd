//! Direct products acting on the disjoint union of the two point sets.

use super::group::{Group, Subgroup};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// `G × R` acting on `{0..n} ⊔ {n..n+m}`, with the two factor embeddings.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: Group,
    left: Group,
    right: Group,
}

impl DirectProduct {
    pub fn new(left: &Group, right: &Group) -> Result<DirectProduct> {
        let limits = left.limits();
        let degree = left.degree() + right.degree();
        limits.check_degree(degree)?;
        let order = left.order().saturating_mul(right.order());
        if order > limits.max_order {
            return Err(Error::GroupTooLarge {
                cap: limits.max_order,
                what: "elements",
            });
        }
        let id_l = left.identity();
        let id_r = right.identity();
        let mut gens: Vec<Permutation> = left.generators().iter().map(|g| g.direct_sum(id_r)).collect();
        gens.extend(right.generators().iter().map(|r| id_l.direct_sum(r)));
        // left-major iteration over two sorted lists is already lexicographic
        let mut elements = Vec::with_capacity(order);
        for g in left.elements() {
            for r in right.elements() {
                elements.push(g.direct_sum(r));
            }
        }
        Ok(DirectProduct {
            group: Group::with_generators(degree, gens, elements, limits),
            left: left.clone(),
            right: right.clone(),
        })
    }

    pub fn left(&self) -> &Group {
        &self.left
    }

    pub fn right(&self) -> &Group {
        &self.right
    }

    pub fn embed_left(&self, g: &Permutation) -> Permutation {
        g.direct_sum(self.right.identity())
    }

    pub fn embed_right(&self, r: &Permutation) -> Permutation {
        self.left.identity().direct_sum(r)
    }

    /// `A × B` for subgroups `A ≤ left` and `B ≤ right`.
    pub fn product_of(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        if a.degree() != self.left.degree() || b.degree() != self.right.degree() {
            return Err(Error::NotASubgroup);
        }
        let mut elements = Vec::with_capacity(a.order() * b.order());
        for x in a.elements() {
            for y in b.elements() {
                elements.push(x.direct_sum(y));
            }
        }
        let sub = Subgroup::from_sorted_unchecked(&self.group, elements);
        if !sub.elements().iter().all(|e| self.group.contains(e)) {
            return Err(Error::NotASubgroup);
        }
        Ok(sub)
    }

    /// `A × 1`.
    pub fn embed_left_subgroup(&self, a: &Subgroup) -> Result<Subgroup> {
        self.product_of(a, &Subgroup::trivial(&self.right))
    }

    /// `G × 1`.
    pub fn left_factor(&self) -> Subgroup {
        self.embed_left_subgroup(&self.left.as_subgroup()).expect("factor embeds")
    }

    /// `1 × R`.
    pub fn right_factor(&self) -> Subgroup {
        self.product_of(&Subgroup::trivial(&self.left), &self.right.as_subgroup())
            .expect("factor embeds")
    }

    /// Restriction to the first block of an element of `G × 1`.
    pub fn project_left(&self, x: &Permutation) -> Permutation {
        let n = self.left.degree();
        Permutation::from_images_unchecked(x.images()[..n].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    #[test]
    fn product_is_sorted_and_closed() {
        let s3 = Group::generate(3, vec![p(&[2, 1, 3]), p(&[2, 3, 1])]).unwrap();
        let c2 = Group::generate(2, vec![p(&[2, 1])]).unwrap();
        let d = DirectProduct::new(&s3, &c2).unwrap();
        assert_eq!(d.group.order(), 12);
        assert!(d.group.elements().windows(2).all(|w| w[0] < w[1]));
        let closed = Group::generate(5, d.group.generators().to_vec()).unwrap();
        assert_eq!(closed.elements(), d.group.elements());
        assert_eq!(d.left_factor().order(), 6);
        assert_eq!(d.right_factor().order(), 2);
        let x = d.embed_left(&p(&[2, 3, 1]));
        assert_eq!(d.project_left(&x), p(&[2, 3, 1]));
    }
}
