use std::fmt;

/// A subset of a [`FiniteGroup`](crate::FiniteGroup)'s element indices that is
/// closed under multiplication and inversion.
///
/// Members are kept sorted, so the canonical representative of the subgroup is
/// `members()[0]` (always the identity, index 0) and two subgroups of the same
/// parent compare equal exactly when they have the same members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    /// Caller guarantees closure; `members` may be in any order.
    pub(crate) fn from_members(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup {
            parent_order,
            members,
        }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Subgroup {
            parent_order: mask.len(),
            members: mask
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        }
    }

    pub fn trivial(parent_order: usize) -> Self {
        Subgroup {
            parent_order,
            members: vec![0],
        }
    }

    pub fn whole(parent_order: usize) -> Self {
        Subgroup {
            parent_order,
            members: (0..parent_order).collect(),
        }
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            parent_order: self.parent_order,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent_order];
        for &m in &self.members {
            mask[m] = true;
        }
        mask
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {}, {:?})", self.order(), self.parent_order, self.members)
    }
}
