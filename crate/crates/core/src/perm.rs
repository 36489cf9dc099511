//! Value-type permutations on points `0..degree`.
//!
//! Storage is 0-based everywhere. Cycle notation at the text boundary is
//! 1-based, so `(1 2 3)` is the permutation `0 -> 1 -> 2 -> 0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Multiplication convention used across the crate: `compose(p, q)` applies
/// `p` first and then `q`, so points are acted on from the right
/// (`i^(pq) = (i^p)^q`). Never configurable.
pub const APPLY_LEFT_FIRST: bool = true;

/// A bijection of `{0, .., degree - 1}`, stored as its image array.
///
/// Equality and ordering are those of the image arrays; the ordering is the
/// canonical order every representative choice in the crate derives from.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree || touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated or out of range in {cycles:?}",
                        a + 1
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Wraps an image array already known to be a bijection.
    pub(crate) fn from_images_unchecked(images: Box<[u32]>) -> Self {
        debug_assert!(Self::from_images(images.to_vec()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        compose(self, other)
    }

    pub fn inverse(&self) -> Permutation {
        invert(self)
    }

    /// Least `n >= 1` with `self^n = id`.
    pub fn order(&self) -> u64 {
        element_order(self)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = compose_unchecked(&acc, &base);
            }
            base = compose_unchecked(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        compose_unchecked(&compose_unchecked(&invert(g), self), g)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                cycle.push(j as u32);
                j = self.apply(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::CycleParse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::CycleParse(format!("unclosed cycle in {text:?}")))?;
            let mut cycle = Vec::new();
            for tok in body[..close].split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::CycleParse(format!("bad point {tok:?} in {text:?}")))?;
                if v == 0 || v as usize > degree {
                    return Err(Error::CycleParse(format!(
                        "point {v} outside 1..={degree} in {text:?}"
                    )));
                }
                cycle.push(v - 1);
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
            .map_err(|e| Error::CycleParse(e.to_string()))
    }

    /// 1-based cycle notation; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self.to_cycle_string())
    }
}

/// Cycle notation with the degree inferred from the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degree = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(s, degree)
    }
}

/// Product of `p` and `q` under [`APPLY_LEFT_FIRST`]: maps `i` to `q(p(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(compose_unchecked(p, q))
}

#[inline]
pub(crate) fn compose_unchecked(p: &Permutation, q: &Permutation) -> Permutation {
    let images = if APPLY_LEFT_FIRST {
        p.images.iter().map(|&i| q.images[i as usize]).collect()
    } else {
        q.images.iter().map(|&i| p.images[i as usize]).collect()
    };
    Permutation { images }
}

/// Writes `p * q` into `out` without allocating.
#[inline]
pub(crate) fn compose_into(p: &[u32], q: &[u32], out: &mut [u32]) {
    for (o, &i) in out.iter_mut().zip(p) {
        *o = q[i as usize];
    }
}

pub fn invert(p: &Permutation) -> Permutation {
    let mut images = vec![0u32; p.degree()].into_boxed_slice();
    for (i, &v) in p.images.iter().enumerate() {
        images[v as usize] = i as u32;
    }
    Permutation { images }
}

/// Least common multiple of the cycle lengths.
pub fn element_order(p: &Permutation) -> u64 {
    p.cycles()
        .iter()
        .fold(1u64, |acc, c| crate::arith::lcm(acc, c.len() as u64))
}
