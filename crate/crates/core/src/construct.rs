//! Declarative group specifications and their permutation realizations.
//!
//! Natural actions are used where the family has one (projective points for
//! `psl2`/`psl3`, affine points for `affine_natural`, `n` points for the
//! symmetric, alternating, cyclic and dihedral families). Families without a
//! small natural action are realized by their right regular representation.
//!
//! Specs serialize as JSON objects tagged by `kind`:
//!
//! ```json
//! {"kind": "semidirect",
//!  "kernel": {"kind": "cyclic", "n": 7},
//!  "complement": {"kind": "cyclic", "n": 3},
//!  "action": {"words": [["k0^2"]]}}
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{extend_homomorphism, is_bijection, FiniteGroup, IDENTITY};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtraspecialSign {
    /// Central product of dihedral groups of order 8.
    Plus,
    /// Central product of dihedral groups with one quaternion factor.
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearPart {
    #[serde(alias = "sl2", alias = "sl3")]
    Sl,
    #[serde(alias = "gl2", alias = "gl3")]
    Gl,
}

/// How each complement generator acts on the kernel.
///
/// `Words` lists, for every complement generator, the image of every kernel
/// generator as a word such as `"k0^2 k1"` (`k<i>` is kernel generator `i`,
/// exponents may be negative, `""` or `"1"` is the identity). `Matrices`
/// is shorthand for an elementary abelian kernel `Z_p^n`: row `i` of a
/// complement generator's matrix holds the exponents of the image of
/// kernel generator `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionSpec {
    Trivial,
    Words(Vec<Vec<String>>),
    Matrices(Vec<Vec<Vec<u32>>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    /// Generators in 1-based cycle notation.
    Perm {
        degree: usize,
        generators: Vec<String>,
    },
    Cyclic {
        n: u32,
    },
    /// Direct product of cyclic groups of the given orders.
    Abelian {
        invariants: Vec<u32>,
    },
    /// Dihedral group of order `2n`.
    Dihedral {
        n: u32,
    },
    GeneralizedQuaternion {
        order: u32,
    },
    /// Extraspecial 2-group of order `2^(2m+1)`.
    Extraspecial {
        order: u32,
        sign: ExtraspecialSign,
    },
    /// Upper unitriangular 3x3 matrices over GF(p).
    Heisenberg {
        p: u32,
    },
    Symmetric {
        n: u32,
    },
    Alternating {
        n: u32,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
    },
    Semidirect {
        kernel: Box<GroupSpec>,
        complement: Box<GroupSpec>,
        action: ActionSpec,
    },
    Psl2 {
        q: u32,
    },
    Psl3 {
        q: u32,
    },
    /// `GF(q)^dim` extended by SL or GL acting naturally.
    AffineNatural {
        q: u32,
        dim: u32,
        linear_part: LinearPart,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<GroupSpec> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("specs always serialize")
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

/// Realizes `spec` as a permutation group.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Perm { degree, generators } => {
            let gens = generators
                .iter()
                .map(|g| Permutation::parse_cycles(g, *degree))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_generators(*degree, gens)
        }
        GroupSpec::Cyclic { n } => {
            if *n == 0 {
                return Err(invalid("cyclic group needs n >= 1"));
            }
            abelian(&[*n])
        }
        GroupSpec::Abelian { invariants } => {
            if invariants.contains(&0) {
                return Err(invalid("abelian invariants must be positive"));
            }
            abelian(invariants)
        }
        GroupSpec::Dihedral { n } => dihedral(*n),
        GroupSpec::GeneralizedQuaternion { order } => generalized_quaternion(*order),
        GroupSpec::Extraspecial { order, sign } => extraspecial(*order, *sign),
        GroupSpec::Heisenberg { p } => heisenberg(*p),
        GroupSpec::Symmetric { n } => symmetric(*n),
        GroupSpec::Alternating { n } => alternating(*n),
        GroupSpec::DirectProduct { factors } => {
            let built = factors.iter().map(build_group).collect::<Result<Vec<_>>>()?;
            direct_product(&built)
        }
        GroupSpec::Semidirect {
            kernel,
            complement,
            action,
        } => semidirect_product(kernel, complement, action),
        GroupSpec::Psl2 { q } => projective_special_linear(2, *q),
        GroupSpec::Psl3 { q } => projective_special_linear(3, *q),
        GroupSpec::AffineNatural {
            q,
            dim,
            linear_part,
        } => affine_natural(*q, *dim, *linear_part),
    }
}

/// Disjoint cycles of the given lengths.
fn abelian(invariants: &[u32]) -> Result<FiniteGroup> {
    let degree: usize = invariants.iter().map(|&n| n as usize).sum();
    let mut offset = 0u32;
    let mut gens = Vec::new();
    for &n in invariants {
        let cycle: Vec<u32> = (offset..offset + n).collect();
        gens.push(Permutation::from_cycles(degree, &[cycle])?);
        offset += n;
    }
    FiniteGroup::from_generators(degree, gens)
}

fn dihedral(n: u32) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(invalid("dihedral group needs n >= 3"));
    }
    let rotation = (1..=n).map(|i| i % n).collect();
    let reflection = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_generators(
        n as usize,
        vec![
            Permutation::from_images(rotation)?,
            Permutation::from_images(reflection)?,
        ],
    )
}

fn symmetric(n: u32) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(invalid("symmetric group needs n >= 1"));
    }
    let d = n as usize;
    if n == 1 {
        return FiniteGroup::from_generators(1, vec![]);
    }
    let cycle: Vec<u32> = (0..n).collect();
    FiniteGroup::from_generators(
        d,
        vec![
            Permutation::from_cycles(d, &[vec![0, 1]])?,
            Permutation::from_cycles(d, &[cycle])?,
        ],
    )
}

/// Generated by the 3-cycles `(1 2 i)`.
fn alternating(n: u32) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(invalid("alternating group needs n >= 1"));
    }
    let d = n as usize;
    let gens = (2..n)
        .map(|i| Permutation::from_cycles(d, &[vec![0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_generators(d, gens)
}

/// Factors act on disjoint blocks of points.
pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    let degree: usize = factors.iter().map(FiniteGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        for g in f.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &v) in g.images().iter().enumerate() {
                images[offset + i] = (offset as u32) + v;
            }
            gens.push(Permutation::from_images(images)?);
        }
        offset += f.degree();
    }
    FiniteGroup::from_generators(degree, gens)
}

/// Right regular representation of an abstract group on `0..order`.
fn regular(order: usize, gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let perms = gens
        .iter()
        .map(|&s| Permutation::from_images((0..order).map(|x| mul(x, s) as u32).collect()))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_generators(order, perms)
}

/// `<a, b | a^(2m), b^2 = a^m, b^-1 a b = a^-1>` of order `4m`, on
/// elements `a^i b^j` encoded as `2i + j`.
fn generalized_quaternion(order: u32) -> Result<FiniteGroup> {
    if order < 8 || !order.is_power_of_two() {
        return Err(invalid("generalized quaternion order must be 2^n with n >= 3"));
    }
    let n = (order / 2) as usize;
    let mul = |x: usize, y: usize| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        let (e, b) = if j == 0 {
            (i + k, l)
        } else if l == 0 {
            (i + n - k, 1)
        } else {
            (i + n - k + n / 2, 0)
        };
        2 * (e % n) + b
    };
    regular(order as usize, &[2, 1], mul)
}

/// Extraspecial 2-groups as `F_2^(2m) x Z_2` with the cocycle given by a
/// block-diagonal bilinear form: each `D8` block has `beta(e2, e1) = 1`,
/// a `Q8` block additionally squares both basis vectors to the centre.
fn extraspecial(order: u32, sign: ExtraspecialSign) -> Result<FiniteGroup> {
    if order < 8 || !order.is_power_of_two() || order.trailing_zeros().is_multiple_of(2) {
        return Err(invalid("extraspecial order must be 2^(2m+1) with m >= 1"));
    }
    let m = (order.trailing_zeros() - 1) / 2;
    let bits = 2 * m;
    let quaternion_block = match sign {
        ExtraspecialSign::Plus => None,
        ExtraspecialSign::Minus => Some(m - 1),
    };
    let beta = |v: usize, w: usize| -> usize {
        let mut acc = 0;
        for b in 0..m {
            let (a1, a2) = ((v >> (2 * b)) & 1, (v >> (2 * b + 1)) & 1);
            let (b1, b2) = ((w >> (2 * b)) & 1, (w >> (2 * b + 1)) & 1);
            acc ^= a2 & b1;
            if Some(b) == quaternion_block {
                acc ^= (a1 & b1) ^ (a2 & b2);
            }
        }
        acc
    };
    let mask = (1usize << bits) - 1;
    let mul = |x: usize, y: usize| {
        let (v, c) = (x & mask, x >> bits);
        let (w, d) = (y & mask, y >> bits);
        (v ^ w) | ((c ^ d ^ beta(v, w)) << bits)
    };
    let gens: Vec<usize> = (0..bits).map(|i| 1usize << i).collect();
    regular(order as usize, &gens, mul)
}

/// Triples `(a, b, c)` for the matrix with `a, b` above the diagonal and `c`
/// in the corner; `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
fn heisenberg(p: u32) -> Result<FiniteGroup> {
    if !crate::arith::is_prime(p as u64) {
        return Err(invalid("heisenberg group needs a prime p"));
    }
    let p = p as usize;
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let dec = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let mul = |x: usize, y: usize| {
        let (a, b, c) = dec(x);
        let (a2, b2, c2) = dec(y);
        enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)
    };
    regular(p * p * p, &[enc(1, 0, 0), enc(0, 1, 0)], mul)
}

type Matrix = Vec<Vec<u32>>;

fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect()
}

/// Row vector times matrix.
fn vec_mat(f: &Field, v: &[u32], m: &Matrix) -> Vec<u32> {
    (0..v.len())
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(0, |acc, (&vi, row)| f.add(acc, f.mul(vi, row[j])))
        })
        .collect()
}

/// Elementary transvections `I + t E_ij` for `t` in a prime-field basis.
fn transvections(f: &Field, n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for t in f.basis() {
                let mut m = identity_matrix(n);
                m[i][j] = t;
                out.push(m);
            }
        }
    }
    out
}

fn all_vectors(q: u32, n: usize) -> Vec<Vec<u32>> {
    let total = (q as usize).pow(n as u32);
    (0..total)
        .map(|mut x| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = (x % q as usize) as u32;
                x /= q as usize;
            }
            v
        })
        .collect()
}

/// `PSL(n, q)` acting on the points of `PG(n-1, q)`. Points are vectors
/// whose first nonzero coordinate is 1, in lexicographic order.
fn projective_special_linear(n: usize, q: u32) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    let points: Vec<Vec<u32>> = all_vectors(q, n)
        .into_iter()
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let index: HashMap<Vec<u32>, u32> = points
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i as u32))
        .collect();
    let normalize = |v: Vec<u32>| -> Vec<u32> {
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
        let s = f.inv(lead);
        v.iter().map(|&c| f.mul(c, s)).collect()
    };
    let gens = transvections(&f, n)
        .iter()
        .map(|m| {
            let images = points
                .iter()
                .map(|v| index[&normalize(vec_mat(&f, v, m))])
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_generators(points.len(), gens)
}

/// `GF(q)^dim` with translations by prime-field multiples of basis vectors
/// and SL transvections (plus a primitive diagonal matrix for GL).
fn affine_natural(q: u32, dim: u32, linear: LinearPart) -> Result<FiniteGroup> {
    if dim == 0 {
        return Err(invalid("affine group needs dim >= 1"));
    }
    let f = Field::new(q)?;
    let n = dim as usize;
    let points = all_vectors(q, n);
    let encode = |v: &[u32]| v.iter().fold(0u32, |acc, &c| acc * q + c);
    let mut gens = Vec::new();
    for i in 0..n {
        for t in f.basis() {
            let images = points
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w[i] = f.add(w[i], t);
                    encode(&w)
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
    }
    let mut mats = transvections(&f, n);
    if linear == LinearPart::Gl {
        let mut d = identity_matrix(n);
        d[0][0] = f.primitive_element();
        mats.push(d);
    }
    for m in &mats {
        let images = points.iter().map(|v| encode(&vec_mat(&f, v, m))).collect();
        gens.push(Permutation::from_images(images)?);
    }
    FiniteGroup::from_generators(points.len(), gens)
}

/// Builds both factors and forms `kernel ⋊ complement`.
pub fn semidirect_product(
    kernel: &GroupSpec,
    complement: &GroupSpec,
    action: &ActionSpec,
) -> Result<FiniteGroup> {
    let k = build_group(kernel)?;
    let h = build_group(complement)?;
    semidirect_of_groups(&k, &h, action)
}

fn parse_word(k: &FiniteGroup, word: &str) -> Result<usize> {
    let gens = k.generator_indices();
    let mut acc = IDENTITY;
    for tok in word.split(|c: char| c.is_whitespace() || c == '*') {
        if tok.is_empty() || tok == "1" {
            continue;
        }
        let bad = || Error::InvalidAction(format!("bad word token {tok:?}"));
        let body = tok.strip_prefix('k').ok_or_else(bad)?;
        let (gen, exp) = match body.split_once('^') {
            Some((g, e)) => (g, e.parse::<i64>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let gen: usize = gen.parse().map_err(|_| bad())?;
        let &s = gens.get(gen).ok_or_else(bad)?;
        let ord = k.element_order(s) as i64;
        acc = k.mul(acc, k.pow(s, exp.rem_euclid(ord) as u64));
    }
    Ok(acc)
}

fn generator_automorphisms(k: &FiniteGroup, h: &FiniteGroup, action: &ActionSpec) -> Result<Vec<Vec<usize>>> {
    let nk = k.generator_indices().len();
    let nh = h.generator_indices().len();
    let images: Vec<Vec<usize>> = match action {
        ActionSpec::Trivial => vec![k.generator_indices().to_vec(); nh],
        ActionSpec::Words(words) => words
            .iter()
            .map(|row| row.iter().map(|w| parse_word(k, w)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?,
        ActionSpec::Matrices(mats) => {
            let p = k.exponent();
            if !crate::arith::is_prime(p) || !k.is_abelian() {
                return Err(Error::InvalidAction(
                    "matrix actions need an elementary abelian kernel".into(),
                ));
            }
            mats.iter()
                .map(|m| {
                    m.iter()
                        .map(|row| {
                            let word: Vec<String> = row
                                .iter()
                                .enumerate()
                                .map(|(j, &e)| format!("k{j}^{}", e as u64 % p))
                                .collect();
                            if row.len() != nk {
                                return Err(Error::InvalidAction("matrix width mismatch".into()));
                            }
                            parse_word(k, &word.join(" "))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?
        }
    };
    if images.len() != nh || images.iter().any(|r| r.len() != nk) {
        return Err(Error::InvalidAction(format!(
            "expected {nh} complement generators with {nk} kernel images each"
        )));
    }
    images
        .iter()
        .enumerate()
        .map(|(j, imgs)| {
            extend_homomorphism(k, k.generator_indices(), k, imgs)
                .filter(|phi| is_bijection(phi))
                .ok_or_else(|| {
                    Error::InvalidAction(format!("complement generator {j} is not an automorphism"))
                })
        })
        .collect()
}

/// For every complement element `h`, the kernel map `x -> h^-1 x h`,
/// obtained by composing generator automorphisms along the Cayley graph of
/// the complement. A conflict means the assignment breaks a relation.
fn action_table(h: &FiniteGroup, autos: &[Vec<usize>], kernel_order: usize) -> Result<Vec<Vec<usize>>> {
    let mut table: Vec<Option<Vec<usize>>> = vec![None; h.order()];
    table[IDENTITY] = Some((0..kernel_order).collect());
    let mut queue = vec![IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let base = table[x].clone().expect("visited");
        for (&s, phi) in h.generator_indices().iter().zip(autos) {
            let y = h.mul(x, s);
            let next: Vec<usize> = base.iter().map(|&k| phi[k]).collect();
            match &table[y] {
                None => {
                    table[y] = Some(next);
                    queue.push(y);
                }
                Some(existing) if *existing != next => {
                    return Err(Error::InvalidAction(
                        "action does not respect the complement's relations".into(),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    Ok(table.into_iter().map(|t| t.expect("complement is connected")).collect())
}

/// `K ⋊ H` with `h^-1 k h` given by `action`. A faithful action is
/// realized on the cosets of `H` (the points of `K`); otherwise the regular
/// representation is used.
pub fn semidirect_of_groups(k: &FiniteGroup, h: &FiniteGroup, action: &ActionSpec) -> Result<FiniteGroup> {
    let autos = generator_automorphisms(k, h, action)?;
    let table = action_table(h, &autos, k.order())?;
    let identity_map: Vec<usize> = (0..k.order()).collect();
    let faithful = (1..h.order()).all(|x| table[x] != identity_map);
    let group = if faithful {
        let mut gens = Vec::new();
        for &s in k.generator_indices() {
            let images = (0..k.order()).map(|x| k.mul(x, s) as u32).collect();
            gens.push(Permutation::from_images(images)?);
        }
        for phi in &autos {
            gens.push(Permutation::from_images(phi.iter().map(|&x| x as u32).collect())?);
        }
        FiniteGroup::from_generators(k.order(), gens)?
    } else {
        let nh = h.order();
        let mul = |x: usize, y: usize| {
            let (a1, b1) = (x / nh, x % nh);
            let (a2, b2) = (y / nh, y % nh);
            let twisted = table[h.inv(b1)][a2];
            k.mul(a1, twisted) * nh + h.mul(b1, b2)
        };
        let gens: Vec<usize> = k
            .generator_indices()
            .iter()
            .map(|&s| s * nh)
            .chain(h.generator_indices().iter().copied())
            .collect();
        regular(k.order() * nh, &gens, mul)?
    };
    if group.order() != k.order() * h.order() {
        return Err(Error::InvalidAction(format!(
            "realization has order {} instead of {}",
            group.order(),
            k.order() * h.order()
        )));
    }
    Ok(group)
}
