//! Structural tests for the groups whose cyclic conjugacy-class graph is
//! triangle-free, and per-group verification that those tests agree with a
//! direct triangle search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_divisors, prime_power};
use crate::construct::{build_group, GroupSpec};
use crate::graph::{build_class_graph, find_triangle, ClassGraph, GraphKind};
use crate::group::{iso_small, FiniteGroup, Subgroup, IDENTITY};

/// Kernel candidates tried by [`frobenius_decompose`].
pub const FROBENIUS_CANDIDATES: &str =
    "Fitting subgroup, p-cores, normal closures of single classes and of pairs of classes";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    #[serde(rename = "odd_3group_exp3")]
    Odd3GroupExp3,
    #[serde(rename = "odd_frobenius_3_7a")]
    OddFrobenius37a,
    #[serde(rename = "two_group_real_exp4")]
    TwoGroupRealExp4,
    #[serde(rename = "solv_1")]
    Solv1,
    #[serde(rename = "solv_2")]
    Solv2,
    #[serde(rename = "solv_3")]
    Solv3,
    #[serde(rename = "solv_4")]
    Solv4,
    #[serde(rename = "solv_5")]
    Solv5,
    #[serde(rename = "solv_6")]
    Solv6,
    #[serde(rename = "nonsolv_psl2_4")]
    NonsolvPsl2_4,
    #[serde(rename = "nonsolv_psl2_7")]
    NonsolvPsl2_7,
    #[serde(rename = "nonsolv_psl2_9")]
    NonsolvPsl2_9,
    #[serde(rename = "nonsolv_psl3_4")]
    NonsolvPsl3_4,
    #[serde(rename = "nonsolv_affine_psl2_4")]
    NonsolvAffinePsl2_4,
    #[serde(rename = "none")]
    None,
}

impl Shape {
    pub const ALL: [Shape; 15] = [
        Shape::Odd3GroupExp3,
        Shape::OddFrobenius37a,
        Shape::TwoGroupRealExp4,
        Shape::Solv1,
        Shape::Solv2,
        Shape::Solv3,
        Shape::Solv4,
        Shape::Solv5,
        Shape::Solv6,
        Shape::NonsolvPsl2_4,
        Shape::NonsolvPsl2_7,
        Shape::NonsolvPsl2_9,
        Shape::NonsolvPsl3_4,
        Shape::NonsolvAffinePsl2_4,
        Shape::None,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Shape::Odd3GroupExp3 => "odd_3group_exp3",
            Shape::OddFrobenius37a => "odd_frobenius_3_7a",
            Shape::TwoGroupRealExp4 => "two_group_real_exp4",
            Shape::Solv1 => "solv_1",
            Shape::Solv2 => "solv_2",
            Shape::Solv3 => "solv_3",
            Shape::Solv4 => "solv_4",
            Shape::Solv5 => "solv_5",
            Shape::Solv6 => "solv_6",
            Shape::NonsolvPsl2_4 => "nonsolv_psl2_4",
            Shape::NonsolvPsl2_7 => "nonsolv_psl2_7",
            Shape::NonsolvPsl2_9 => "nonsolv_psl2_9",
            Shape::NonsolvPsl3_4 => "nonsolv_psl3_4",
            Shape::NonsolvAffinePsl2_4 => "nonsolv_affine_psl2_4",
            Shape::None => "none",
        }
    }

    pub fn is_none(self) -> bool {
        self == Shape::None
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Shape::ALL
            .iter()
            .copied()
            .find(|sh| sh.as_str() == s)
            .ok_or_else(|| format!("unknown shape {s:?}"))
    }
}

// ---------------------------------------------------------------------------
// Element-order audit

/// First element violating one audited condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditWitness {
    /// Representative in cycle notation.
    pub element: String,
    pub order: u64,
    /// The offending count: classes met or orbits, or the order itself.
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    /// Class representatives examined.
    pub checked: usize,
    /// `|x|` is not a prime or the square of a prime.
    pub order_failure: Option<AuditWitness>,
    /// More than two classes meet `<x> \ {1}`.
    pub class_failure: Option<AuditWitness>,
    /// `N(<x>)/C(<x>)` has more than two orbits on `<x> \ {1}`.
    pub orbit_failure: Option<AuditWitness>,
}

impl Lemma1Report {
    pub fn passed(&self) -> bool {
        self.order_failure.is_none() && self.class_failure.is_none() && self.orbit_failure.is_none()
    }
}

/// Number of classes of `g` meeting `<x> \ {1}`.
pub fn classes_meeting_cyclic(g: &FiniteGroup, x: usize) -> usize {
    let cc = g.conjugacy_classes();
    g.powers(x)
        .into_iter()
        .filter(|&y| y != IDENTITY)
        .map(|y| cc.class_of(y))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Orbits of `N_G(<x>)` acting by conjugation on `<x> \ {1}`; as `C_G(<x>)`
/// acts trivially these are the orbits of `N/C`.
pub fn normalizer_orbits(g: &FiniteGroup, x: usize) -> Vec<Vec<usize>> {
    let cyc = g.generated_subgroup(&[x]);
    let n = g.normalizer(&cyc);
    let gens = n.generators();
    let points: Vec<usize> = g.powers(x).into_iter().filter(|&y| y != IDENTITY).collect();
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for &p in &points {
        if seen.contains(&p) {
            continue;
        }
        let mut orbit = vec![p];
        seen.insert(p);
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            head += 1;
            for &s in &gens {
                let z = g.conj(y, s);
                if seen.insert(z) {
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

fn witness(g: &FiniteGroup, x: usize, count: usize) -> AuditWitness {
    AuditWitness {
        element: g.element(x).to_cycle_string(),
        order: g.element_order(x),
        count,
    }
}

fn order_is_prime_or_square(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1 | 2)))
}

/// Checks, for each nontrivial class representative `x`, that `|x|` is `p`
/// or `p^2`, that at most two classes meet `<x> \ {1}`, and that `N(<x>)/C(<x>)`
/// has at most two orbits there. All three conditions are invariant under
/// conjugation, so representatives suffice.
pub fn lemma1_audit(g: &FiniteGroup) -> Lemma1Report {
    let cc = g.conjugacy_classes();
    let mut report = Lemma1Report {
        checked: cc.len().saturating_sub(1),
        order_failure: None,
        class_failure: None,
        orbit_failure: None,
    };
    for c in 1..cc.len() {
        let x = cc.representative(c);
        let order = g.element_order(x);
        if report.order_failure.is_none() && !order_is_prime_or_square(order) {
            report.order_failure = Some(witness(g, x, order as usize));
        }
        if report.class_failure.is_none() {
            let met = classes_meeting_cyclic(g, x);
            if met > 2 {
                report.class_failure = Some(witness(g, x, met));
            }
        }
        if report.orbit_failure.is_none() {
            let orbits = normalizer_orbits(g, x).len();
            if orbits > 2 {
                report.orbit_failure = Some(witness(g, x, orbits));
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Frobenius structure

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusDecomposition<'g> {
    pub kernel: Subgroup<'g>,
    /// `None` only when the kernel criterion holds but the bounded
    /// complement search found nothing.
    pub complement: Option<Subgroup<'g>>,
}

/// True iff `n` is a nontrivial proper normal subgroup of the subgroup `k`
/// and `C_K(x) ⊆ n` for every nontrivial `x ∈ n`. Both `n` and `k` must be
/// normal in the parent group, which makes the test conjugation-invariant
/// and lets it run over class representatives of the parent.
fn is_kernel_within(g: &FiniteGroup, k: &Subgroup<'_>, n: &Subgroup<'_>) -> bool {
    if n.is_trivial() || n.order() == k.order() || !n.is_subset_of(k) {
        return false;
    }
    let cc = g.conjugacy_classes();
    (1..cc.len())
        .map(|c| cc.representative(c))
        .filter(|&x| n.contains(x))
        .all(|x| {
            g.centralizer(&[x])
                .members()
                .iter()
                .all(|&y| !k.contains(y) || n.contains(y))
        })
}

/// Whether `n` satisfies the Frobenius kernel criterion in `g`.
pub fn is_frobenius_kernel(g: &FiniteGroup, n: &Subgroup<'_>) -> bool {
    n.is_normal() && is_kernel_within(g, &g.whole(), n)
}

fn kernel_candidates(g: &FiniteGroup) -> impl Iterator<Item = Subgroup<'_>> + '_ {
    let fit = g.fitting();
    let mut first: Vec<Subgroup<'_>> = vec![fit.subgroup];
    first.extend(fit.cores.into_values());
    let cc = g.conjugacy_classes();
    let closures: Vec<Subgroup<'_>> = (1..cc.len())
        .map(|c| g.generated_subgroup(cc.class(c)))
        .collect();
    let singles = closures.clone();
    let pairs = (0..closures.len()).flat_map(move |i| {
        let closures = closures.clone();
        (i + 1..closures.len()).map(move |j| closures[i].extend(closures[j].members()))
    });
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    first
        .into_iter()
        .chain(singles)
        .chain(pairs)
        .filter(move |h| seen.insert(h.members().to_vec()))
}

/// Searches for a complement to `kernel`: a subgroup generated by at most
/// two elements of order dividing the index, of order equal to the index.
fn find_complement<'g>(g: &'g FiniteGroup, kernel: &Subgroup<'g>) -> Option<Subgroup<'g>> {
    let index = (g.order() / kernel.order()) as u64;
    let pool: Vec<usize> = (1..g.order())
        .filter(|&x| index.is_multiple_of(g.element_order(x)))
        .collect();
    if index == 1 {
        return Some(g.trivial_subgroup());
    }
    if let Some(&x) = pool.iter().find(|&&x| g.element_order(x) == index) {
        return Some(g.generated_subgroup(&[x]));
    }
    // Complements are conjugate, so the first generator may be taken up to
    // conjugacy.
    let cc = g.conjugacy_classes();
    let firsts: Vec<usize> = (1..cc.len())
        .map(|c| cc.representative(c))
        .filter(|&x| index.is_multiple_of(g.element_order(x)))
        .collect();
    for &a in &firsts {
        for &b in &pool {
            let h = g.generated_subgroup(&[a, b]);
            if h.order() as u64 == index && h.intersect(kernel).is_trivial() {
                return Some(h);
            }
        }
    }
    None
}

/// Finds the Frobenius kernel among [`FROBENIUS_CANDIDATES`] and a
/// complement for it.
pub fn frobenius_decompose(g: &FiniteGroup) -> Option<FrobeniusDecomposition<'_>> {
    let kernel = kernel_candidates(g).find(|n| is_frobenius_kernel(g, n))?;
    let complement = find_complement(g, &kernel);
    Some(FrobeniusDecomposition { kernel, complement })
}

/// `1 < N < K < G` with `N = Fit(G)`, `G/N` Frobenius with kernel `K/N` and
/// `K` Frobenius with kernel `N`.
pub fn two_frobenius_decompose(g: &FiniteGroup) -> Option<(Subgroup<'_>, Subgroup<'_>)> {
    let n = g.fitting().subgroup;
    if n.is_trivial() || n.is_whole() {
        return None;
    }
    let q = g.quotient(&n).ok()?;
    let kq = frobenius_decompose(&q.group)?.kernel;
    let members = (0..g.order()).filter(|&x| kq.contains(q.project(x))).collect();
    let k = Subgroup::from_members(g, members);
    is_kernel_within(g, &k, &n).then_some((n, k))
}

// ---------------------------------------------------------------------------
// Classification

/// Evidence gathered while classifying.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Witnesses {
    pub order: usize,
    pub exponent: u64,
    pub center_order: usize,
    pub solvable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fitting_order: Option<usize>,
    /// Representatives of order-4 classes that are not real.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reality_failures: Vec<String>,
    /// Set when the group was identified by an invariant signature.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<String>,
    /// For each element order of the form `p^2`: are all such elements real?
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub prime_square_orders_real: BTreeMap<u64, bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// One vertex of a reported triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleVertex {
    pub class: usize,
    pub order: u64,
    pub representative: String,
}

/// The three-way equivalence for 2-groups and its corollaries, each side
/// computed independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGroupAudit {
    pub triangle_free: bool,
    pub exponent_le4_order4_real: bool,
    pub exponent_le4_all_real: bool,
    pub center_elementary_abelian: bool,
    pub abelianization_elementary_abelian: bool,
}

impl TwoGroupAudit {
    pub fn equivalence_holds(&self) -> bool {
        self.triangle_free == self.exponent_le4_order4_real
            && self.exponent_le4_order4_real == self.exponent_le4_all_real
    }

    /// The corollaries only constrain triangle-free groups.
    pub fn corollaries_hold(&self) -> bool {
        !self.triangle_free
            || (self.center_elementary_abelian && self.abelianization_elementary_abelian)
    }

    pub fn passed(&self) -> bool {
        self.equivalence_holds() && self.corollaries_hold()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub triangle_free: bool,
    pub shape: Shape,
    pub witnesses: Witnesses,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[TriangleVertex; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_group_audit: Option<TwoGroupAudit>,
    /// `triangle_free` iff `shape != none`.
    pub consistent: bool,
}

impl Verdict {
    /// Consistent, and the 2-group audit (when run) passed.
    pub fn passed(&self) -> bool {
        self.consistent && self.two_group_audit.as_ref().is_none_or(TwoGroupAudit::passed)
    }
}

/// A simple group pinned down by order and element-order counts.
struct Signature {
    shape: Shape,
    name: &'static str,
    order: usize,
    counts: &'static [(u64, usize)],
}

const SIMPLE_SIGNATURES: [Signature; 4] = [
    Signature {
        shape: Shape::NonsolvPsl2_4,
        name: "PSL(2,4)",
        order: 60,
        counts: &[(1, 1), (2, 15), (3, 20), (5, 24)],
    },
    Signature {
        shape: Shape::NonsolvPsl2_7,
        name: "PSL(2,7)",
        order: 168,
        counts: &[(1, 1), (2, 21), (3, 56), (4, 42), (7, 48)],
    },
    Signature {
        shape: Shape::NonsolvPsl2_9,
        name: "PSL(2,9)",
        order: 360,
        counts: &[(1, 1), (2, 45), (3, 80), (4, 90), (5, 144)],
    },
    Signature {
        shape: Shape::NonsolvPsl3_4,
        name: "PSL(3,4)",
        order: 20160,
        counts: &[(1, 1), (2, 315), (3, 2240), (4, 3780), (5, 8064), (7, 5760)],
    },
];

fn order_counts(g: &FiniteGroup) -> Vec<(u64, usize)> {
    let mut m: BTreeMap<u64, usize> = BTreeMap::new();
    for &o in g.element_orders() {
        *m.entry(o as u64).or_default() += 1;
    }
    m.into_iter().collect()
}

fn order4_reality_failures(g: &FiniteGroup) -> Vec<String> {
    let cc = g.conjugacy_classes();
    (1..cc.len())
        .map(|c| cc.representative(c))
        .filter(|&x| g.element_order(x) == 4 && !g.is_real_element(x))
        .map(|x| g.element(x).to_cycle_string())
        .collect()
}

fn all_real(g: &FiniteGroup) -> bool {
    let cc = g.conjugacy_classes();
    (1..cc.len()).all(|c| g.is_real_element(cc.representative(c)))
}

fn prime_square_reality(g: &FiniteGroup) -> BTreeMap<u64, bool> {
    let cc = g.conjugacy_classes();
    let mut out: BTreeMap<u64, bool> = BTreeMap::new();
    for c in 1..cc.len() {
        let x = cc.representative(c);
        let o = g.element_order(x);
        if matches!(prime_power(o), Some((_, 2))) {
            let real = g.is_real_element(x);
            out.entry(o).and_modify(|r| *r &= real).or_insert(real);
        }
    }
    out
}

fn q8_reference() -> FiniteGroup {
    build_group(&GroupSpec::GeneralizedQuaternion { order: 8 }).expect("Q8 builds")
}

fn s3_reference() -> FiniteGroup {
    build_group(&GroupSpec::Symmetric { n: 3 }).expect("S3 builds")
}

fn is_power_of(n: usize, p: usize) -> bool {
    n > 1 && prime_power(n as u64).is_some_and(|(q, _)| q as usize == p)
}

fn classify_odd(g: &FiniteGroup, w: &mut Witnesses) -> Shape {
    let order = g.order();
    if is_power_of(order, 3) && w.exponent == 3 {
        return Shape::Odd3GroupExp3;
    }
    if !order.is_multiple_of(3) || !is_power_of(order / 3, 7) {
        return Shape::None;
    }
    let Some(fd) = frobenius_decompose(g) else {
        w.notes.push(format!("no Frobenius kernel among: {FROBENIUS_CANDIDATES}"));
        return Shape::None;
    };
    w.kernel_order = Some(fd.kernel.order());
    w.complement_order = fd.complement.as_ref().map(Subgroup::order);
    if fd.kernel.order() != order / 3 || fd.kernel.exponent() != 7 {
        return Shape::None;
    }
    // Every complement has order 3 and they are all conjugate, so "N(<x>)
    // contains a complement" reads "3 divides |N(<x>)|".
    let cc = g.conjugacy_classes();
    let normalizers_ok = (1..cc.len())
        .map(|c| cc.representative(c))
        .filter(|&x| fd.kernel.contains(x))
        .all(|x| g.normalizer(&g.generated_subgroup(&[x])).order().is_multiple_of(3));
    if !normalizers_ok {
        w.notes.push("some N(<x>) misses every complement".into());
        return Shape::None;
    }
    Shape::OddFrobenius37a
}

fn classify_two_group(g: &FiniteGroup, w: &mut Witnesses) -> Shape {
    w.reality_failures = order4_reality_failures(g);
    if w.exponent <= 4 && w.reality_failures.is_empty() {
        Shape::TwoGroupRealExp4
    } else {
        Shape::None
    }
}

fn classify_solvable(g: &FiniteGroup, w: &mut Witnesses) -> Shape {
    if let Some(fd) = frobenius_decompose(g) {
        let kernel = &fd.kernel;
        w.kernel_order = Some(kernel.order());
        w.complement_order = fd.complement.as_ref().map(Subgroup::order);
        let index = g.order() / kernel.order();
        let ea = kernel.is_elementary_abelian();
        let kexp = kernel.exponent();
        match index {
            2 if ea && kexp == 3 => return Shape::Solv1,
            2 if ea && kexp == 5 => return Shape::Solv2,
            3 if matches!(kexp, 2 | 4) => {
                let unreal: Vec<String> = kernel
                    .members()
                    .iter()
                    .copied()
                    .filter(|&x| g.element_order(x) == 4 && !kernel.is_real_within(x))
                    .map(|x| g.element(x).to_cycle_string())
                    .collect();
                if unreal.is_empty() {
                    return Shape::Solv3;
                }
                w.reality_failures = unreal;
            }
            8 if ea && matches!(kexp, 3 | 5) => {
                let square = prime_power(kernel.order() as u64).is_some_and(|(_, k)| k % 2 == 0);
                let is_q8 = fd
                    .complement
                    .as_ref()
                    .and_then(|h| FiniteGroup::subgroup_as_group(h).ok())
                    .is_some_and(|h| iso_small(&h, &q8_reference()).unwrap_or(false));
                if square && is_q8 {
                    return if kexp == 3 { Shape::Solv4 } else { Shape::Solv5 };
                }
            }
            _ => {}
        }
        return Shape::None;
    }
    w.notes.push(format!("no Frobenius kernel among: {FROBENIUS_CANDIDATES}"));
    let Some((n, _k)) = two_frobenius_decompose(g) else {
        return Shape::None;
    };
    w.fitting_order = Some(n.order());
    let primes = prime_divisors(g.order() as u64);
    let two_three = primes.iter().all(|&p| p == 2 || p == 3);
    let sylow3 = g.sylow(3).order() == 3;
    let sylow2_exp4 = g.sylow(2).exponent() == 4;
    w.reality_failures = order4_reality_failures(g);
    let fit_ea2 = n.is_elementary_abelian() && n.exponent() == 2;
    let quotient_s3 = g
        .quotient(&n)
        .ok()
        .filter(|q| q.group.order() == 6)
        .is_some_and(|q| iso_small(&q.group, &s3_reference()).unwrap_or(false));
    if two_three && sylow3 && sylow2_exp4 && w.reality_failures.is_empty() && fit_ea2 && quotient_s3 {
        Shape::Solv6
    } else {
        Shape::None
    }
}

fn classify_nonsolvable(g: &FiniteGroup, w: &mut Witnesses) -> Shape {
    let counts = order_counts(g);
    if g.is_simple() {
        for sig in &SIMPLE_SIGNATURES {
            if sig.order == g.order() && sig.counts == counts.as_slice() {
                w.signature = Some(format!("matches signature of {}", sig.name));
                return sig.shape;
            }
        }
        return Shape::None;
    }
    // G/N simple of order 60 with N = O_2(G) a sum of natural modules.
    let n = g.p_core(2);
    w.fitting_order = Some(g.fitting().subgroup.order());
    let dim = prime_power(n.order() as u64).map_or(0, |(_, k)| k);
    if n.is_trivial() || !n.is_elementary_abelian() || n.exponent() != 2 || !dim.is_multiple_of(4) {
        return Shape::None;
    }
    let Ok(q) = g.quotient(&n) else {
        return Shape::None;
    };
    let a5 = &SIMPLE_SIGNATURES[0];
    if q.group.order() != a5.order || !q.group.is_simple() || order_counts(&q.group) != a5.counts {
        return Shape::None;
    }
    // On the natural module an element of order 3 has eigenvalues w, w^2
    // and so fixes no nonzero vector; every other nontrivial irreducible
    // GF(2)-module of A5 of dimension 4 has fixed points for it.
    let cc = g.conjugacy_classes();
    let fpf = (1..cc.len())
        .map(|c| cc.representative(c))
        .filter(|&x| g.element_order(x) == 3)
        .all(|x| n.members().iter().all(|&v| v == IDENTITY || !g.commute(x, v)));
    if !fpf {
        return Shape::None;
    }
    w.signature = Some(format!(
        "O_2 of order {} with fixed-point-free order-3 action, quotient matches signature of PSL(2,4)",
        n.order()
    ));
    Shape::NonsolvAffinePsl2_4
}

/// Classifies `g` by the structural shape tests, without consulting the
/// graph.
pub fn classify(g: &FiniteGroup) -> Shape {
    classify_with_witnesses(g).0
}

/// [`classify`] plus the evidence gathered on the way.
pub fn classify_with_witnesses(g: &FiniteGroup) -> (Shape, Witnesses) {
    let order = g.order();
    let center = g.center();
    let mut w = Witnesses {
        order,
        exponent: g.exponent(),
        center_order: center.order(),
        solvable: g.is_solvable(),
        prime_square_orders_real: prime_square_reality(g),
        ..Witnesses::default()
    };
    let shape = if order == 1 || is_power_of(order, 2) {
        classify_two_group(g, &mut w)
    } else if order % 2 == 1 {
        classify_odd(g, &mut w)
    } else if !center.is_trivial() {
        w.notes.push("even order, not a 2-group, nontrivial center".into());
        Shape::None
    } else if w.solvable {
        classify_solvable(g, &mut w)
    } else {
        classify_nonsolvable(g, &mut w)
    };
    (shape, w)
}

fn two_group_audit(g: &FiniteGroup, triangle_free: bool) -> TwoGroupAudit {
    let exp_le4 = g.exponent() <= 4;
    let center = g.center();
    let derived = g.derived_subgroup_of(&g.whole());
    let abelianization_elementary_abelian = g
        .quotient(&derived)
        .map(|q| q.group.exponent() <= 2)
        .unwrap_or(false);
    TwoGroupAudit {
        triangle_free,
        exponent_le4_order4_real: exp_le4 && order4_reality_failures(g).is_empty(),
        exponent_le4_all_real: exp_le4 && all_real(g),
        center_elementary_abelian: center.exponent() <= 2,
        abelianization_elementary_abelian,
    }
}

fn triangle_witness(graph: &ClassGraph) -> Option<[TriangleVertex; 3]> {
    let (i, j, k) = find_triangle(graph)?;
    Some([i, j, k].map(|p| {
        let v = &graph.vertices[p];
        TriangleVertex {
            class: v.id,
            order: v.order,
            representative: v.representative.clone(),
        }
    }))
}

/// Computes Δ(G), searches it for a triangle and compares with
/// [`classify`]. Returns the graph alongside the verdict.
pub fn verify_group_with_graph(g: &FiniteGroup) -> (Verdict, ClassGraph) {
    let graph = build_class_graph(g, GraphKind::CyclicCcc);
    let triangle = triangle_witness(&graph);
    let triangle_free = triangle.is_none();
    let (shape, witnesses) = classify_with_witnesses(g);
    let two_group_audit = (g.order() > 1 && is_power_of(g.order(), 2))
        .then(|| two_group_audit(g, triangle_free));
    let verdict = Verdict {
        triangle_free,
        shape,
        witnesses,
        triangle,
        two_group_audit,
        consistent: triangle_free != shape.is_none(),
    };
    (verdict, graph)
}

pub fn verify_group(g: &FiniteGroup) -> Verdict {
    verify_group_with_graph(g).0
}

/// Every nontrivial element has prime order.
pub fn all_orders_prime(g: &FiniteGroup) -> bool {
    g.element_orders().iter().skip(1).all(|&o| is_prime(o as u64))
}

#[cfg(test)]
mod tests;
