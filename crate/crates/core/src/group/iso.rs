use super::{FiniteGroup, IDENTITY};
use crate::error::{Error, Result};

/// Largest order [`iso_small`] accepts.
pub const ISO_MAX_ORDER: usize = 16;

/// Decides whether two small groups are isomorphic by backtracking over
/// images of a generating set, constrained by element orders.
pub fn iso_small(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISO_MAX_ORDER {
            return Err(Error::TooLargeForIso {
                order: g.order(),
                max: ISO_MAX_ORDER,
            });
        }
    }
    if a.order() != b.order() || order_profile(a) != order_profile(b) {
        return Ok(false);
    }
    let gens = a.whole().generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..b.order())
                .filter(|&y| b.element_order(y) == a.element_order(x))
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &candidates, &mut images))
}

fn order_profile(g: &FiniteGroup) -> Vec<u32> {
    let mut v = g.element_orders().to_vec();
    v.sort_unstable();
    v
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> bool {
    if images.len() == gens.len() {
        return extends_to_isomorphism(a, b, gens, images);
    }
    for &y in &candidates[images.len()] {
        images.push(y);
        if search(a, b, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Walks the Cayley graph of `src` from the identity, assigning
/// `phi(x s) = phi(x) phi(s)` for generators `s`. Returns the map when it is
/// a well-defined homomorphism.
pub(crate) fn extend_homomorphism(
    src: &FiniteGroup,
    gens: &[usize],
    dst: &FiniteGroup,
    images: &[usize],
) -> Option<Vec<usize>> {
    let unset = usize::MAX;
    let mut phi = vec![unset; src.order()];
    phi[IDENTITY] = IDENTITY;
    let mut queue = vec![IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let xs = src.mul(x, s);
            let img = dst.mul(phi[x], t);
            if phi[xs] == unset {
                phi[xs] = img;
                queue.push(xs);
            } else if phi[xs] != img {
                return None;
            }
        }
    }
    (queue.len() == src.order()).then_some(phi)
}

pub(crate) fn is_bijection(map: &[usize]) -> bool {
    let mut hit = vec![false; map.len()];
    map.iter().all(|&y| y < hit.len() && !std::mem::replace(&mut hit[y], true))
}

fn extends_to_isomorphism(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    extend_homomorphism(a, gens, b, images).is_some_and(|phi| is_bijection(&phi))
}
