use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{FiniteGroup, Subgroup, IDENTITY};
use crate::arith::{p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `G >= G' >= G'' >= ...`, stopped at the first repeated term (which is not
/// listed twice).
#[derive(Debug, Clone)]
pub struct DerivedSeries<'g> {
    pub terms: Vec<Subgroup<'g>>,
    pub solvable: bool,
}

impl DerivedSeries<'_> {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// The Fitting subgroup together with the p-cores it is generated by.
#[derive(Debug, Clone)]
pub struct Fitting<'g> {
    pub subgroup: Subgroup<'g>,
    /// `p -> O_p(G)` for every prime dividing the group order.
    pub cores: BTreeMap<u64, Subgroup<'g>>,
}

/// A quotient group in its regular representation on the cosets, with the
/// projection from the parent.
#[derive(Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Parent element index to quotient element index.
    pub projection: Vec<u32>,
    /// Minimal parent element of each coset, in coset order.
    pub coset_representatives: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: usize) -> usize {
        self.projection[x] as usize
    }
}

impl FiniteGroup {
    /// Elements commuting with every member of `set`, by full scan.
    pub fn centralizer(&self, set: &[usize]) -> Subgroup<'_> {
        let mask: Vec<bool> = (0..self.order())
            .into_par_iter()
            .map(|g| set.iter().all(|&s| self.commute(g, s)))
            .collect();
        Subgroup::from_mask(self, mask)
    }

    pub fn center(&self) -> Subgroup<'_> {
        self.centralizer(&self.gen_indices)
    }

    /// Elements `g` with `g^-1 H g = H`, by full scan.
    pub fn normalizer(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let gens = h.generators();
        let mask: Vec<bool> = (0..self.order())
            .into_par_iter()
            .map(|g| gens.iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        Subgroup::from_mask(self, mask)
    }

    /// Smallest normal subgroup of `G` containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Subgroup<'_> {
        self.normal_closure_within(&self.gen_indices, set)
    }

    /// Smallest subgroup containing `set` and normalized by `ambient_gens`.
    pub fn normal_closure_within(&self, ambient_gens: &[usize], set: &[usize]) -> Subgroup<'_> {
        let mut k = self.generated_subgroup(set);
        loop {
            let mut grew = false;
            for a in k.generators() {
                for &s in ambient_gens {
                    let c = self.conj(a, s);
                    if !k.contains(c) {
                        k = k.extend(&[c]);
                        grew = true;
                    }
                }
            }
            if !grew {
                return k;
            }
        }
    }

    /// Nontrivial and every nontrivial class generates the whole group.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        let cc = self.conjugacy_classes();
        (1..cc.len()).all(|c| self.generated_subgroup(cc.class(c)).is_whole())
    }

    /// `[H, H]`: normal closure in `H` of commutators of generators of `H`.
    pub fn derived_subgroup_of<'g>(&'g self, h: &Subgroup<'g>) -> Subgroup<'g> {
        let gens = h.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if c != IDENTITY {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_within(&gens, &comms)
    }

    pub fn derived_series(&self) -> DerivedSeries<'_> {
        let mut terms = vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            if last.is_trivial() {
                return DerivedSeries {
                    terms,
                    solvable: true,
                };
            }
            let next = self.derived_subgroup_of(last);
            if next.order() == last.order() {
                return DerivedSeries {
                    terms,
                    solvable: false,
                };
            }
            terms.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().solvable
    }

    /// A Sylow `p`-subgroup: start from a cyclic subgroup of largest p-power
    /// order and adjoin p-elements of the normalizer until the full p-part is
    /// reached. Trivial when `p` does not divide the order.
    pub fn sylow(&self, p: u64) -> Subgroup<'_> {
        let target = p_part(self.order() as u64, p) as usize;
        if target == 1 {
            return self.trivial_subgroup();
        }
        let is_p_power = |n: u64| p_part(n, p) == n;
        let start = (0..self.order())
            .filter(|&x| is_p_power(self.element_order(x)))
            .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)))
            .expect("identity is a p-element");
        let mut sub = self.generated_subgroup(&[start]);
        while sub.order() < target {
            let norm = self.normalizer(&sub);
            let y = norm
                .members()
                .iter()
                .copied()
                .find(|&m| !sub.contains(m) && sub.contains(self.pow(m, p)))
                .expect("a non-Sylow p-subgroup has p dividing [N(P):P]");
            sub = sub.extend(&[y]);
        }
        sub
    }

    /// `O_p(G)`: intersection of the conjugates of one Sylow p-subgroup.
    pub fn p_core(&self, p: u64) -> Subgroup<'_> {
        let sylow = self.sylow(p);
        if sylow.is_trivial() {
            return sylow;
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(sylow.members().to_vec());
        let mut queue = vec![sylow.clone()];
        let mut core = sylow;
        while let Some(q) = queue.pop() {
            for &s in &self.gen_indices {
                let c = q.conjugate(s);
                if seen.insert(c.members().to_vec()) {
                    core = core.intersect(&c);
                    queue.push(c);
                }
            }
        }
        core
    }

    pub fn fitting(&self) -> Fitting<'_> {
        let mut cores = BTreeMap::new();
        let mut gens = Vec::new();
        for p in prime_divisors(self.order() as u64) {
            let core = self.p_core(p);
            gens.extend(core.generators());
            cores.insert(p, core);
        }
        Fitting {
            subgroup: self.generated_subgroup(&gens),
            cores,
        }
    }

    /// `G/N` acting on the right cosets of `N`.
    pub fn quotient(&self, n: &Subgroup<'_>) -> Result<Quotient> {
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let unassigned = u32::MAX;
        let mut coset_of = vec![unassigned; self.order()];
        let mut reps = Vec::new();
        let mut buf = vec![0u32; self.degree];
        for g in 0..self.order() {
            if coset_of[g] != unassigned {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &m in n.members() {
                coset_of[self.mul_with(g, m, &mut buf)] = id;
            }
        }
        let index = reps.len();
        let action = |g: usize, buf: &mut [u32]| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.mul_with(r, g, buf)])
                .collect::<Vec<u32>>();
            Permutation::from_images(images).expect("right multiplication permutes cosets")
        };
        let gens: Vec<Permutation> = self
            .gen_indices
            .iter()
            .map(|&s| action(s, &mut buf))
            .collect();
        let group = FiniteGroup::from_generators(index, gens)?;
        let coset_image: Vec<u32> = reps
            .iter()
            .map(|&r| {
                let p = action(r, &mut buf);
                group.index_of(&p).expect("coset action lies in the quotient") as u32
            })
            .collect();
        let projection = coset_of.iter().map(|&c| coset_image[c as usize]).collect();
        Ok(Quotient {
            group,
            projection,
            coset_representatives: reps,
        })
    }
}
