use std::fmt;

use super::FiniteGroup;

/// A subgroup of a [`FiniteGroup`], stored as an explicit set of element
/// indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order(), self.group.order())
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.mask == other.mask
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    pub(crate) fn from_mask(group: &'g FiniteGroup, mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup {
            group,
            members,
            mask,
        }
    }

    /// Wraps a set already known to be closed.
    pub(crate) fn from_members(group: &'g FiniteGroup, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; group.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup {
            group,
            members,
            mask,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Member indices, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// `<self, extra>`.
    pub fn extend(&self, extra: &[usize]) -> Subgroup<'g> {
        let mut gens: Option<Vec<usize>> = None;
        let mut current = self.clone();
        for &x in extra {
            if current.contains(x) {
                continue;
            }
            let g = gens.get_or_insert_with(|| self.generators());
            current = current.extend_known(g, x);
            g.push(x);
        }
        current
    }

    /// A small generating set, chosen greedily in canonical order.
    pub fn generators(&self) -> Vec<usize> {
        let g = self.group;
        let mut gens = Vec::new();
        let mut current = g.trivial_subgroup();
        for &m in &self.members {
            if current.order() == self.order() {
                break;
            }
            if !current.contains(m) {
                // Extend by a single element without recursing into generators().
                current = current.extend_known(&gens, m);
                gens.push(m);
            }
        }
        gens
    }

    /// `<self, x>` given generators of `self`. Old members are only
    /// multiplied by `x`, since they are already closed under `gens`.
    fn extend_known(&self, gens: &[usize], x: usize) -> Subgroup<'g> {
        let g = self.group;
        let mut mask = self.mask.clone();
        let mut members = self.members.clone();
        let mut buf = vec![0u32; g.degree()];
        let mut queue = Vec::new();
        for &m in &self.members {
            let y = g.mul_with(m, x, &mut buf);
            if !mask[y] {
                mask[y] = true;
                members.push(y);
                queue.push(y);
            }
        }
        let all: Vec<usize> = gens.iter().copied().chain(std::iter::once(x)).collect();
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            head += 1;
            for &s in &all {
                let y = g.mul_with(e, s, &mut buf);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            group: g,
            members,
            mask,
        }
    }

    /// True iff some member generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.members.iter().any(|&m| self.group.element_order(m) == n)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.group.commute(a, b)))
    }

    /// Closed under conjugation by the parent's generators.
    pub fn is_normal(&self) -> bool {
        self.is_normalized_by(self.group.generator_indices())
    }

    pub fn is_normalized_by(&self, elements: &[usize]) -> bool {
        let gens = self.generators();
        elements
            .iter()
            .all(|&s| gens.iter().all(|&h| self.contains(self.group.conj(h, s))))
    }

    pub fn intersect(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        Subgroup::from_members(self.group, members)
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, by: usize) -> Subgroup<'g> {
        let members = self.members.iter().map(|&m| self.group.conj(m, by)).collect();
        Subgroup::from_members(self.group, members)
    }

    /// Least common multiple of member orders.
    pub fn exponent(&self) -> u64 {
        self.members
            .iter()
            .fold(1, |acc, &m| crate::arith::lcm(acc, self.group.element_order(m)))
    }

    /// Every nontrivial member has order `p` and the subgroup is abelian.
    pub fn is_elementary_abelian(&self) -> bool {
        if self.is_trivial() {
            return true;
        }
        let e = self.exponent();
        crate::arith::is_prime(e) && self.is_abelian()
    }

    /// `x` is conjugate to `x^-1` by a member of this subgroup.
    pub fn is_real_within(&self, x: usize) -> bool {
        let target = self.group.inv(x);
        self.members.iter().any(|&g| self.group.conj(x, g) == target)
    }
}
