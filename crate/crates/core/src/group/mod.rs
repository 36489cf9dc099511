//! Fully enumerated finite permutation groups and structural algorithms on
//! them.
//!
//! Elements are addressed by their index in canonical order. Index 0 is
//! always the identity, since the identity image array is lexicographically
//! least.

mod iso;
mod structure;
mod subgroup;

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::closure::{enumerate_closure, ElementSet, DEFAULT_CLOSURE_CAP};
use crate::error::Result;
use crate::perm::{compose_into, Permutation};

pub use iso::{iso_small, ISO_MAX_ORDER};
pub(crate) use iso::{extend_homomorphism, is_bijection};
pub use structure::{DerivedSeries, Fitting, Quotient};
pub use subgroup::Subgroup;

/// Index of the identity in every [`FiniteGroup`].
pub const IDENTITY: usize = 0;

/// Conjugacy classes of a group, listed in order of their minimal element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassSet {
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Members of class `c`, ascending.
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Minimal member of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// A permutation group with every element listed.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: ElementSet,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    classes: OnceLock<ConjugacyClassSet>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` with the default cap.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let elements = enumerate_closure(degree, &generators, cap)?;
        let n = elements.len();
        let inverse: Vec<u32> = (0..n)
            .into_par_iter()
            .map(|i| {
                elements
                    .position(&elements.get(i).inverse())
                    .expect("closure is closed under inversion") as u32
            })
            .collect();
        let orders = (0..n)
            .into_par_iter()
            .map(|i| elements.get(i).order() as u32)
            .collect();
        let gen_indices = generators
            .iter()
            .map(|g| elements.position(g).expect("generator in closure"))
            .collect();
        Ok(FiniteGroup {
            degree,
            generators,
            gen_indices,
            elements,
            inverse,
            orders,
            classes: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        self.elements.get(i)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.position(p)
    }

    pub fn inverse_table(&self) -> &[u32] {
        &self.inverse
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    /// `a * b`, i.e. `a` applied first.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut buf = vec![0u32; self.degree];
        self.mul_with(a, b, &mut buf)
    }

    #[inline]
    pub(crate) fn mul_with(&self, a: usize, b: usize, buf: &mut [u32]) -> usize {
        compose_into(
            self.elements.get(a).images(),
            self.elements.get(b).images(),
            buf,
        );
        self.elements
            .position_of_images(buf)
            .expect("group is closed under multiplication")
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let k = k % self.orders[x] as u64;
        let mut acc = IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Elements `x, x^2, .., x^(|x|-1), 1` of the cyclic subgroup `<x>`.
    pub fn powers(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[x] as usize);
        let mut buf = vec![0u32; self.degree];
        let mut acc = x;
        loop {
            out.push(acc);
            if acc == IDENTITY {
                break;
            }
            acc = self.mul_with(acc, x, &mut buf);
        }
        out
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        let mut buf = vec![0u32; self.degree];
        let t = self.mul_with(self.inv(g), x, &mut buf);
        self.mul_with(t, g, &mut buf)
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        let pa = self.elements.get(a).images();
        let pb = self.elements.get(b).images();
        (0..self.degree).all(|i| pb[pa[i] as usize] == pa[pb[i] as usize])
    }

    #[inline]
    pub fn element_order(&self, x: usize) -> u64 {
        self.orders[x] as u64
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_indices;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Classes of the conjugation action, computed once and cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClassSet {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClassSet {
        let n = self.order();
        let unassigned = u32::MAX;
        let mut class_of = vec![unassigned; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let gens: Vec<(usize, usize)> = self
            .gen_indices
            .iter()
            .map(|&s| (self.inv(s), s))
            .collect();
        let mut buf = vec![0u32; self.degree];
        for start in 0..n {
            if class_of[start] != unassigned {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &(s_inv, s) in &gens {
                    let t = self.mul_with(s_inv, x, &mut buf);
                    let y = self.mul_with(t, s, &mut buf);
                    if class_of[y] == unassigned {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyClassSet { classes, class_of }
    }

    /// True iff `x` and `x^-1` are conjugate.
    pub fn is_real_element(&self, x: usize) -> bool {
        let cc = self.conjugacy_classes();
        cc.class_of(x) == cc.class_of(self.inv(x))
    }

    /// True iff `<x, y>` is cyclic.
    ///
    /// Non-commuting pairs are rejected at once. For a commuting pair the
    /// group `<x, y>` is abelian of order `|x||y| / |<x> ∩ <y>|`, and it is
    /// cyclic exactly when that order equals its exponent `lcm(|x|, |y|)`.
    pub fn cyclic_span(&self, x: usize, y: usize) -> bool {
        if !self.commute(x, y) {
            return false;
        }
        let ox = self.element_order(x);
        let oy = self.element_order(y);
        let px = self.powers(x);
        let py = self.powers(y);
        let common = py.iter().filter(|e| px.contains(e)).count() as u64;
        ox * oy / common == crate::arith::lcm(ox, oy)
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_mask(self, vec![true; self.order()])
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        let mut mask = vec![false; self.order()];
        mask[IDENTITY] = true;
        Subgroup::from_mask(self, mask)
    }

    /// `<S>` inside this group.
    pub fn generated_subgroup(&self, set: &[usize]) -> Subgroup<'_> {
        self.trivial_subgroup().extend(set)
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut distinct: Vec<u32> = self.orders.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct
            .into_iter()
            .fold(1, |acc, o| crate::arith::lcm(acc, o as u64))
    }

    /// Rebuilds a subgroup as a group in its own right, on the same points.
    pub fn subgroup_as_group(sub: &Subgroup<'_>) -> Result<FiniteGroup> {
        let g = sub.group();
        let gens = sub
            .generators()
            .into_iter()
            .map(|i| g.element(i).clone())
            .collect();
        FiniteGroup::from_generators(g.degree(), gens)
    }
}
