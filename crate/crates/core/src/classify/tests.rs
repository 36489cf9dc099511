use super::*;
use crate::construct::{semidirect_product, ActionSpec, ExtraspecialSign, LinearPart};

fn build(s: GroupSpec) -> FiniteGroup {
    build_group(&s).unwrap()
}

fn cyclic(n: u32) -> GroupSpec {
    GroupSpec::Cyclic { n }
}

fn words(w: &[&str]) -> ActionSpec {
    ActionSpec::Words(vec![w.iter().map(|s| s.to_string()).collect()])
}

fn semi(k: GroupSpec, h: GroupSpec, a: ActionSpec) -> FiniteGroup {
    semidirect_product(&k, &h, &a).unwrap()
}

fn f21() -> FiniteGroup {
    semi(cyclic(7), cyclic(3), words(&["k0^2"]))
}

fn q8_on(p: u32) -> FiniteGroup {
    let (a, b) = match p {
        3 => (vec![vec![0, 1], vec![2, 0]], vec![vec![1, 1], vec![1, 2]]),
        _ => (vec![vec![2, 0], vec![0, 3]], vec![vec![0, 1], vec![4, 0]]),
    };
    semi(
        GroupSpec::Abelian { invariants: vec![p, p] },
        GroupSpec::GeneralizedQuaternion { order: 8 },
        ActionSpec::Matrices(vec![a, b]),
    )
}

/// Kernel of a Frobenius group read off a complement: the elements lying in
/// no conjugate of `H \ {1}`.
fn kernel_from_complement(g: &FiniteGroup, h: &Subgroup<'_>) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    for t in 0..g.order() {
        for &x in h.conjugate(t).members() {
            if x != IDENTITY {
                covered[x] = true;
            }
        }
    }
    (0..g.order()).filter(|&x| !covered[x]).collect()
}

#[test]
fn shape_tags_round_trip() {
    for s in Shape::ALL {
        assert_eq!(s.as_str().parse::<Shape>().unwrap(), s);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, format!("\"{}\"", s.as_str()));
        assert_eq!(serde_json::from_str::<Shape>(&json).unwrap(), s);
    }
    assert!("solv_7".parse::<Shape>().is_err());
}

#[test]
fn lemma1_examples() {
    let z8 = build(cyclic(8));
    let r = lemma1_audit(&z8);
    assert!(!r.passed());
    assert_eq!(r.order_failure.as_ref().unwrap().order, 8);

    let q8 = build(GroupSpec::GeneralizedQuaternion { order: 8 });
    assert!(lemma1_audit(&q8).passed());
    for x in 1..8 {
        assert!(classes_meeting_cyclic(&q8, x) <= 2);
    }

    let f = f21();
    assert!(lemma1_audit(&f).passed());
    let x = (0..21).find(|&x| f.element_order(x) == 7).unwrap();
    assert_eq!(normalizer_orbits(&f, x).len(), 2);

    let d14 = build(GroupSpec::Dihedral { n: 7 });
    let r = lemma1_audit(&d14);
    assert!(r.order_failure.is_none());
    let w = r.class_failure.unwrap();
    assert_eq!((w.order, w.count), (7, 3));
}

#[test]
fn generators_conjugate_in_g_iff_in_normalizer() {
    let groups = [
        build(GroupSpec::Symmetric { n: 4 }),
        build(GroupSpec::Psl2 { q: 7 }),
        f21(),
        build(GroupSpec::Dihedral { n: 10 }),
    ];
    for g in &groups {
        let cc = g.conjugacy_classes();
        for x in 1..g.order() {
            let n = g.element_order(x);
            let orbits = normalizer_orbits(g, x);
            let gens: Vec<usize> = g
                .powers(x)
                .into_iter()
                .enumerate()
                .filter(|&(i, _)| crate::arith::gcd(i as u64 + 1, n) == 1)
                .map(|(_, y)| y)
                .collect();
            for &a in &gens {
                for &b in &gens {
                    let in_g = cc.class_of(a) == cc.class_of(b);
                    let in_n = orbits.iter().any(|o| o.contains(&a) && o.contains(&b));
                    assert_eq!(in_g, in_n);
                }
            }
        }
    }
}

#[test]
fn frobenius_examples() {
    let s3 = build(GroupSpec::Symmetric { n: 3 });
    let fd = frobenius_decompose(&s3).unwrap();
    assert_eq!(fd.kernel.order(), 3);
    assert_eq!(fd.complement.unwrap().order(), 2);

    let q8 = build(GroupSpec::GeneralizedQuaternion { order: 8 });
    assert!(frobenius_decompose(&q8).is_none());

    let f = f21();
    let fd = frobenius_decompose(&f).unwrap();
    assert_eq!(fd.kernel.order(), 7);
    assert_eq!(fd.complement.as_ref().unwrap().order(), 3);

    assert!(frobenius_decompose(&build(GroupSpec::Symmetric { n: 4 })).is_none());
    assert!(frobenius_decompose(&build(GroupSpec::Alternating { n: 5 })).is_none());
}

#[test]
fn frobenius_kernel_matches_complement_oracle() {
    let groups = [
        build(GroupSpec::Symmetric { n: 3 }),
        f21(),
        build(GroupSpec::Alternating { n: 4 }),
        build(GroupSpec::Dihedral { n: 5 }),
        semi(cyclic(5), cyclic(4), words(&["k0^2"])),
        q8_on(3),
        q8_on(5),
    ];
    for g in &groups {
        let fd = frobenius_decompose(g).unwrap();
        let h = fd.complement.as_ref().unwrap();
        assert_eq!(fd.kernel.order() * h.order(), g.order());
        assert!(fd.kernel.intersect(h).is_trivial());
        assert_eq!(fd.kernel.members(), kernel_from_complement(g, h).as_slice());
        assert_eq!(g.normal_closure(fd.kernel.members()), fd.kernel);
    }
}

#[test]
fn two_frobenius_examples() {
    let s4 = build(GroupSpec::Symmetric { n: 4 });
    let (n, k) = two_frobenius_decompose(&s4).unwrap();
    assert_eq!((n.order(), k.order()), (4, 12));
    assert!(two_frobenius_decompose(&build(GroupSpec::Symmetric { n: 3 })).is_none());
    assert!(two_frobenius_decompose(&build(GroupSpec::Alternating { n: 5 })).is_none());
}

#[test]
fn classify_examples() {
    assert_eq!(classify(&build(GroupSpec::Heisenberg { p: 3 })), Shape::Odd3GroupExp3);
    assert_eq!(classify(&build(GroupSpec::Dihedral { n: 5 })), Shape::Solv2);
    assert_eq!(classify(&build(GroupSpec::Psl2 { q: 7 })), Shape::NonsolvPsl2_7);
    assert_eq!(classify(&build(GroupSpec::Dihedral { n: 3 })), Shape::Solv1);
    assert_eq!(classify(&build(GroupSpec::Alternating { n: 4 })), Shape::Solv3);
    assert_eq!(classify(&q8_on(3)), Shape::Solv4);
    assert_eq!(classify(&q8_on(5)), Shape::Solv5);
    assert_eq!(classify(&build(GroupSpec::Symmetric { n: 4 })), Shape::Solv6);
    assert_eq!(classify(&f21()), Shape::OddFrobenius37a);
    assert_eq!(classify(&build(GroupSpec::Psl2 { q: 4 })), Shape::NonsolvPsl2_4);
    assert_eq!(classify(&build(GroupSpec::Psl2 { q: 9 })), Shape::NonsolvPsl2_9);
    assert_eq!(classify(&build(GroupSpec::Psl2 { q: 8 })), Shape::None);
    assert_eq!(classify(&build(GroupSpec::Symmetric { n: 5 })), Shape::None);
    assert_eq!(classify(&build(cyclic(6))), Shape::None);
    assert_eq!(classify(&build(cyclic(1))), Shape::TwoGroupRealExp4);
}

#[test]
fn affine_natural_module() {
    let g = build(GroupSpec::AffineNatural { q: 4, dim: 2, linear_part: LinearPart::Sl });
    let (shape, w) = classify_with_witnesses(&g);
    assert_eq!(shape, Shape::NonsolvAffinePsl2_4);
    assert!(w.signature.unwrap().contains("PSL(2,4)"));
    // Z2 x A5 is centred and not a 2-group.
    let z2a5 = build(GroupSpec::DirectProduct {
        factors: vec![cyclic(2), GroupSpec::Alternating { n: 5 }],
    });
    assert_eq!(classify(&z2a5), Shape::None);
}

#[test]
fn verify_examples() {
    let v = verify_group(&build(cyclic(9)));
    assert!(!v.triangle_free && v.shape == Shape::None && v.consistent);
    assert!(v.triangle.is_some());

    let v = verify_group(&build(GroupSpec::Symmetric { n: 4 }));
    assert!(v.triangle_free && v.shape == Shape::Solv6 && v.consistent);
    assert_eq!(v.witnesses.fitting_order, Some(4));

    let v = verify_group(&build(GroupSpec::Psl2 { q: 8 }));
    assert!(!v.triangle_free && v.shape == Shape::None && v.consistent);
    // Recorded as data only.
    assert!(v.witnesses.prime_square_orders_real.contains_key(&9));
}

#[test]
fn two_group_audits() {
    let specs = [
        cyclic(2),
        cyclic(4),
        cyclic(8),
        GroupSpec::Abelian { invariants: vec![4, 2] },
        GroupSpec::Abelian { invariants: vec![2, 2, 2] },
        GroupSpec::Dihedral { n: 4 },
        GroupSpec::Dihedral { n: 8 },
        GroupSpec::GeneralizedQuaternion { order: 8 },
        GroupSpec::GeneralizedQuaternion { order: 16 },
        GroupSpec::Extraspecial { order: 32, sign: ExtraspecialSign::Plus },
        GroupSpec::Extraspecial { order: 32, sign: ExtraspecialSign::Minus },
    ];
    let expected = [true, false, false, false, true, true, false, true, false, true, true];
    for (s, want) in specs.into_iter().zip(expected) {
        let v = verify_group(&build(s.clone()));
        let audit = v.two_group_audit.clone().unwrap();
        assert!(audit.passed(), "{s:?}: {audit:?}");
        assert_eq!(v.triangle_free, want, "{s:?}");
        assert!(v.passed());
    }
}

#[test]
fn odd_triangle_free_groups_have_prime_orders() {
    for s in [
        GroupSpec::Heisenberg { p: 3 },
        GroupSpec::Abelian { invariants: vec![3, 3, 3] },
        cyclic(9),
        cyclic(15),
    ] {
        let g = build(s);
        let v = verify_group(&g);
        assert!(v.consistent);
        if v.triangle_free {
            assert!(all_orders_prime(&g));
            assert!(lemma1_audit(&g).passed());
        }
    }
    let g = f21();
    assert!(verify_group(&g).triangle_free && all_orders_prime(&g));
}

#[test]
fn inconsistent_verdicts_are_not_hidden() {
    let v = Verdict {
        triangle_free: true,
        shape: Shape::None,
        witnesses: Witnesses::default(),
        triangle: None,
        two_group_audit: None,
        consistent: false,
    };
    assert!(!v.passed());
    let json = serde_json::to_string(&v).unwrap();
    assert_eq!(serde_json::from_str::<Verdict>(&json).unwrap(), v);
}
