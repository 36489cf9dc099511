//! Group enumeration by breadth-first closure under the generators.

use std::borrow::Borrow;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{compose_into, Permutation};

/// Closure cap used when callers do not supply one.
pub const DEFAULT_CLOSURE_CAP: usize = 250_000;

impl Borrow<[u32]> for Permutation {
    fn borrow(&self) -> &[u32] {
        self.images()
    }
}

/// Elements of a permutation group in canonical (lexicographic) order, with
/// a reverse index.
#[derive(Clone)]
pub struct ElementSet {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl ElementSet {
    fn from_unsorted(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        ElementSet {
            degree,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.position_of_images(p.images())
    }

    #[inline]
    pub fn position_of_images(&self, images: &[u32]) -> Option<usize> {
        self.index.get(images).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.position(p).is_some()
    }
}

/// All products of `generators` (as permutations of `degree` points), in
/// canonical order. Fails once more than `cap` elements have been found.
pub fn enumerate_closure(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<ElementSet> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity, ());
    let mut queue = VecDeque::from([0usize]);
    let mut buf = vec![0u32; degree];
    while let Some(i) = queue.pop_front() {
        for g in generators {
            compose_into(elements[i].images(), g.images(), &mut buf);
            if seen.contains_key(buf.as_slice()) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ClosureCapExceeded { cap });
            }
            let p = Permutation::from_images_unchecked(buf.clone().into_boxed_slice());
            seen.insert(p.clone(), ());
            queue.push_back(elements.len());
            elements.push(p);
        }
    }
    Ok(ElementSet::from_unsorted(degree, elements))
}
