//! Table-driven finite fields GF(q) for the sizes used by the linear-group
//! constructions.
//!
//! An element is encoded as the integer `c0 + c1*p + c2*p^2 + ...` for the
//! polynomial `c0 + c1*w + c2*w^2 + ...` in a root `w` of a fixed monic
//! irreducible polynomial:
//!
//! | q | polynomial      |
//! |---|-----------------|
//! | 4 | x^2 + x + 1     |
//! | 8 | x^3 + x + 1     |
//! | 9 | x^2 + 1         |
//!
//! Prime fields use plain residues.

use crate::error::{Error, Result};

/// Field sizes with a built-in table.
pub const SUPPORTED_FIELDS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 17];

#[derive(Debug, Clone)]
pub struct Field {
    q: u32,
    p: u32,
    degree: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// Low coefficients `a_0..a_{k-1}` of the monic modulus
/// `x^k + a_{k-1} x^{k-1} + ... + a_0`.
fn modulus(q: u32) -> Option<(u32, &'static [u32])> {
    match q {
        2 | 3 | 5 | 7 | 17 => Some((q, &[])),
        4 => Some((2, &[1, 1])),
        8 => Some((2, &[1, 1, 0])),
        9 => Some((3, &[1, 0])),
        _ => None,
    }
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        let (p, low) = modulus(q).ok_or(Error::UnsupportedField(q))?;
        let degree = low.len().max(1) as u32;
        let digits = |x: u32| -> Vec<u32> {
            (0..degree).map(|i| (x / p.pow(i)) % p).collect()
        };
        let encode = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum);
                mul[(a * q + b) as usize] = if low.is_empty() {
                    a * b % p
                } else {
                    encode(&poly_mul_mod(&da, &db, low, p))
                };
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap()
                }
            })
            .collect();
        Ok(Field {
            q,
            p,
            degree,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `1, w, w^2, ..`: a basis over the prime field.
    pub fn basis(&self) -> Vec<u32> {
        (0..self.degree).map(|i| self.p.pow(i)).collect()
    }

    /// Least element (by encoding) generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| {
                let mut x = a;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, a);
                    k += 1;
                }
                k == self.q - 1
            })
            .expect("multiplicative group of a finite field is cyclic")
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], low: &[u32], p: u32) -> Vec<u32> {
    let k = low.len();
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^k = -(a_0 + a_1 x + ...), applied from the top degree down.
    for d in (k..2 * k).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &a_i) in low.iter().enumerate() {
            prod[d - k + i] = (prod[d - k + i] + (p - a_i % p) * c) % p;
        }
    }
    prod.truncate(k);
    prod
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in SUPPORTED_FIELDS {
            let f = Field::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            let w = f.primitive_element();
            let mut x = 1;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..q - 1 {
                x = f.mul(x, w);
                seen.insert(x);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn gf4_root_satisfies_modulus() {
        let f = Field::new(4).unwrap();
        // w^2 = w + 1
        assert_eq!(f.mul(2, 2), 3);
        let f = Field::new(9).unwrap();
        // w^2 = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
        let f = Field::new(8).unwrap();
        // w^3 = w + 1
        assert_eq!(f.mul(f.mul(2, 2), 2), 3);
    }

    #[test]
    fn unsupported() {
        assert_eq!(Field::new(6).unwrap_err(), Error::UnsupportedField(6));
        assert_eq!(Field::new(11).unwrap_err(), Error::UnsupportedField(11));
    }
}
