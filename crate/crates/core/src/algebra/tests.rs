use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::*;
use crate::constructions::{named, named_built, quaternion};
use crate::groupalgebra::{central_decomposition, strong_shoda_pairs, GroupAlgebraElement};
use crate::permgroup::FiniteGroup;

fn pairs_and_descriptors(g: &FiniteGroup) -> Vec<(usize, SimpleComponentDescriptor)> {
    let en = strong_shoda_pairs(g, 2000).unwrap();
    en.pairs
        .iter()
        .zip(&en.component_of_pair)
        .map(|(p, &c)| (c, component_descriptor(g, p).unwrap()))
        .collect()
}

fn names(label: &str) -> Vec<String> {
    let g = named(label).unwrap();
    let mut v: Vec<String> = pairs_and_descriptors(&g).into_iter().map(|(_, d)| d.canonical_name()).collect();
    v.sort();
    v
}

fn expand(spec: &[(usize, &str)]) -> Vec<String> {
    let mut v: Vec<String> = spec
        .iter()
        .flat_map(|&(m, s)| std::iter::repeat(s.to_string()).take(m))
        .collect();
    v.sort();
    v
}

#[test]
fn descriptor_examples() {
    let c5 = crate::constructions::cyclic(5).unwrap();
    let d = &pairs_and_descriptors(&c5);
    let top = d.iter().find(|(_, d)| d.conductor == 5).unwrap();
    assert_eq!(top.1.matrix_size, 1);
    assert_eq!(top.1.galois_degree(), 1);
    assert_eq!(top.1.center, FixedFieldDescriptor::cyclotomic(5));

    let b = named_built("D8").unwrap();
    let g = &b.group;
    let d = pairs_and_descriptors(g);
    let big = d.iter().find(|(_, d)| d.total_dimension == 4).unwrap().1.clone();
    assert_eq!((big.matrix_size, big.conductor, big.galois_degree()), (1, 4, 2));
    assert_eq!(big.action[0].1, 3);
    assert_eq!(big.twist_sign(), Some(1));
    assert!(big.center.is_rational());
    assert_eq!(big.to_string(), "M1( cyclic(Q(zeta_4)/Q, a=1) )");
    assert_eq!(big.canonical_name(), "M2(Q)");

    let g = named("C5semiC8").unwrap();
    let d = pairs_and_descriptors(&g);
    let q = d.iter().find(|(_, d)| d.canonical_name() == "(Q(zeta_5)/Q,-1)").unwrap();
    assert_eq!((q.1.conductor, q.1.galois_degree(), q.1.matrix_size), (10, 4, 1));
    assert_eq!(q.1.to_string(), "M1( cyclic(Q(zeta_10)/Q, a=-1) )");
}

#[test]
fn field_classification_examples() {
    use FieldClass::*;
    assert_eq!(classify_field(&FixedFieldDescriptor::new(5, &[1, 2, 3, 4])), Rationals);
    assert_eq!(classify_field(&FixedFieldDescriptor::new(4, &[1])), ImaginaryQuadratic);
    assert_eq!(classify_field(&FixedFieldDescriptor::new(5, &[1, 4])), RealQuadratic);
    assert_eq!(classify_field(&FixedFieldDescriptor::new(2, &[1])), Rationals);
    assert_eq!(classify_field(&FixedFieldDescriptor::generated(7, &[6])), TotallyRealHigher);
    assert_eq!(classify_field(&FixedFieldDescriptor::cyclotomic(7)), ComplexOther);
}

#[test]
fn golden_metabelian_decompositions() {
    let cases: &[(&str, &[(usize, &str)])] = &[
        ("D6", &[(2, "Q"), (1, "M2(Q)")]),
        ("D8", &[(4, "Q"), (1, "M2(Q)")]),
        ("D16plus", &[(4, "Q"), (2, "Q(zeta_4)"), (1, "M2(Q(zeta_4))")]),
        ("Q8semiC2", &[(8, "Q"), (1, "M2(Q(zeta_4))")]),
        ("Q8xC3", &[(4, "Q"), (4, "Q(zeta_3)"), (1, "H(Q)"), (1, "M2(Q(zeta_3))")]),
        ("Q8YD8", &[(16, "Q"), (1, "M2(H(Q))")]),
        (
            "C5semiC8",
            &[(2, "Q"), (1, "Q(zeta_4)"), (1, "Q(zeta_8)"), (1, "M4(Q)"), (1, "(Q(zeta_5)/Q,-1)")],
        ),
        (
            "C3sqsemiC8",
            &[(2, "Q"), (1, "Q(zeta_4)"), (1, "Q(zeta_8)"), (2, "M4(Q)"), (2, "M2((-1,-3/Q))")],
        ),
        ("Q8", &[(4, "Q"), (1, "H(Q)")]),
        ("C5semiC4", &[(2, "Q"), (1, "Q(zeta_4)"), (1, "M4(Q)")]),
        ("C3sqsemiC4", &[(2, "Q"), (1, "Q(zeta_4)"), (2, "M4(Q)")]),
    ];
    for (label, spec) in cases {
        assert_eq!(names(label), expand(spec), "{label}");
    }
}

#[test]
fn classify_exceptional_examples() {
    let g = named("D8").unwrap();
    let d = pairs_and_descriptors(&g);
    let v = classify_exceptional(&d.iter().find(|(_, d)| d.total_dimension == 4).unwrap().1);
    assert_eq!(v.tag, ExceptionalTag::Ec2);
    assert_eq!(v.witness.as_deref(), Some("M2(Q)"));

    // Q_20: (Q(ζ5)/Q(√5), -1) is a totally definite quaternion algebra
    let g = quaternion(20).unwrap();
    let d = pairs_and_descriptors(&g);
    let tdq = d
        .iter()
        .find(|(_, d)| d.reduced_conductor() == 5 && d.galois_degree() == 2 && d.twist_sign() == Some(-1))
        .unwrap();
    assert_eq!(classify_field(&tdq.1.center), FieldClass::RealQuadratic);
    assert_eq!(classify_exceptional(&tdq.1).tag, ExceptionalTag::NotExceptional);

    let g = named("C5semiC8").unwrap();
    let d = pairs_and_descriptors(&g);
    let q = d.iter().find(|(_, d)| d.canonical_name() == "(Q(zeta_5)/Q,-1)").unwrap();
    let v = classify_exceptional(&q.1);
    assert_eq!(v.tag, ExceptionalTag::Ec2);
    assert_eq!(v.witness.as_deref(), Some("M2(TDQ(Q))"));

    // commutative components are never exceptional
    for (_, d) in pairs_and_descriptors(&named("C3xQ8").unwrap()) {
        if d.galois_degree() == 1 && d.matrix_size == 1 {
            assert_eq!(classify_exceptional(&d).tag, ExceptionalTag::NotExceptional);
        }
    }
}

fn rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut rows = rows;
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() * &inv;
                for j in c..cols {
                    let t = rows[r][j].clone() * &f;
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn descriptor_dimension_matches_ideal_rank() {
    for label in ["D6", "D8", "Q8", "Q12", "D12", "C5semiC4", "Q8xC3", "C3xD8", "D16plus"] {
        let g = named(label).unwrap();
        let dec = central_decomposition(&g);
        for (c, d) in pairs_and_descriptors(&g) {
            assert_eq!(d.total_dimension, dec.components[c].dimension, "{label}");
            let e = dec.idempotent(&g, c);
            let rows = (0..g.order())
                .map(|x| {
                    let ge = GroupAlgebraElement::basis(&g, x).mul(&e);
                    (0..g.order()).map(|y| ge.coeff(y)).collect()
                })
                .collect();
            assert_eq!(rank(rows), d.total_dimension, "{label}");
        }
    }
}

#[test]
fn descriptor_center_matches_invariants() {
    for label in ["D16plus", "Q8xC3", "C5semiC8", "C3sqsemiC8", "Q16semiC2", "C3semi4C8"] {
        let g = named(label).unwrap();
        let dec = central_decomposition(&g);
        for (c, d) in pairs_and_descriptors(&g) {
            let inv = component_invariants(&g, &dec, c).unwrap();
            assert_eq!(inv.center, d.center, "{label}");
            assert_eq!(inv.dimension as usize, d.total_dimension);
        }
    }
}

fn tag_multiset(label: &str) -> BTreeMap<(u64, u64, String), usize> {
    let g = named(label).unwrap();
    let dec = central_decomposition(&g);
    let en = strong_shoda_pairs(&g, 2000).ok();
    let mut out = BTreeMap::new();
    for c in 0..dec.components.len() {
        let inv = component_invariants(&g, &dec, c).unwrap();
        let pair = en
            .as_ref()
            .and_then(|en| en.component_of_pair.iter().position(|&x| x == c).map(|i| &en.pairs[i]));
        let desc = pair.map(|p| component_descriptor(&g, p).unwrap());
        let div = pair.and_then(|p| amitsur_division(&g, p));
        let v = classify_component(&inv, desc.as_ref(), div);
        if v.tag.is_exceptional() == Some(true) {
            assert!(v.witness.is_some());
        }
        *out.entry((inv.dimension, inv.center_degree, v.tag.to_string())).or_insert(0) += 1;
    }
    out
}

fn golden(spec: &[(usize, u64, u64, &str)]) -> BTreeMap<(u64, u64, String), usize> {
    let mut out = BTreeMap::new();
    for &(m, d, f, t) in spec {
        *out.entry((d, f, t.to_string())).or_insert(0) += m;
    }
    out
}

#[test]
fn critical_groups_small() {
    let cases: &[(&str, &[(usize, u64, u64, &str)])] = &[
        ("SL23", &[(1, 1, 1, "No"), (1, 2, 2, "No"), (1, 9, 1, "No"), (1, 4, 1, "No"), (1, 8, 2, "EC2")]),
        ("D6", &[(2, 1, 1, "No"), (1, 4, 1, "EC2")]),
        ("D8", &[(4, 1, 1, "No"), (1, 4, 1, "EC2")]),
        ("D16plus", &[(4, 1, 1, "No"), (2, 2, 2, "No"), (1, 8, 2, "EC2")]),
        ("Q8semiC2", &[(8, 1, 1, "No"), (1, 8, 2, "EC2")]),
        ("Q8xC3", &[(4, 1, 1, "No"), (4, 2, 2, "No"), (1, 4, 1, "No"), (1, 8, 2, "EC2")]),
        ("Q8YD8", &[(16, 1, 1, "No"), (1, 16, 1, "EC2")]),
        (
            "C5semiC8",
            &[(2, 1, 1, "No"), (1, 2, 2, "No"), (1, 4, 4, "No"), (1, 16, 1, "No"), (1, 16, 1, "EC2")],
        ),
        (
            "C3sqsemiC8",
            &[(2, 1, 1, "No"), (1, 2, 2, "No"), (1, 4, 4, "No"), (2, 16, 1, "No"), (2, 16, 1, "EC2")],
        ),
        ("SL23YC4", &[(2, 1, 1, "No"), (2, 2, 2, "No"), (2, 9, 1, "No"), (1, 16, 4, "No"), (1, 8, 2, "EC2")]),
        ("Q8", &[(4, 1, 1, "No"), (1, 4, 1, "No")]),
        ("C5semiC4", &[(2, 1, 1, "No"), (1, 2, 2, "No"), (1, 16, 1, "No")]),
    ];
    for (label, spec) in cases {
        assert_eq!(tag_multiset(label), golden(spec), "{label}");
    }
}

#[test]
fn critical_groups_large() {
    let cases: &[(&str, &[(usize, u64, u64, &str)])] = &[
        (
            "SL25",
            &[
                (1, 1, 1, "No"),
                (1, 16, 1, "No"),
                (1, 25, 1, "No"),
                (1, 18, 2, "No"),
                (1, 36, 1, "No"),
                (1, 8, 2, "No"),
                (1, 16, 1, "EC2"),
            ],
        ),
        (
            "SL23YD8",
            &[(4, 1, 1, "No"), (4, 2, 2, "No"), (4, 9, 1, "No"), (1, 32, 2, "No"), (1, 16, 1, "EC2")],
        ),
        (
            "Aplus",
            &[
                (2, 1, 1, "No"),
                (2, 16, 1, "No"),
                (2, 25, 1, "No"),
                (1, 36, 1, "No"),
                (1, 32, 2, "No"),
                (1, 72, 2, "No"),
                (1, 16, 1, "EC2"),
            ],
        ),
        (
            "Aminus",
            &[
                (2, 1, 1, "No"),
                (2, 16, 1, "No"),
                (2, 25, 1, "No"),
                (1, 36, 1, "No"),
                (1, 32, 2, "No"),
                (1, 72, 2, "No"),
                (1, 16, 1, "EC2"),
            ],
        ),
        (
            "B1",
            &[(1, 1, 1, "No"), (1, 4, 4, "No"), (3, 25, 1, "No"), (1, 64, 4, "No"), (1, 16, 1, "EC2")],
        ),
        (
            "B2",
            &[(2, 1, 1, "No"), (6, 25, 1, "No"), (1, 8, 2, "No"), (1, 128, 2, "No"), (2, 16, 1, "EC2")],
        ),
        (
            "C384",
            &[
                (2, 1, 1, "No"),
                (2, 2, 2, "No"),
                (2, 9, 1, "No"),
                (2, 16, 1, "No"),
                (2, 36, 1, "No"),
                (3, 32, 2, "No"),
                (1, 144, 1, "No"),
                (1, 16, 1, "EC2"),
            ],
        ),
    ];
    for (label, spec) in cases {
        assert_eq!(tag_multiset(label), golden(spec), "{label}");
    }
}

#[test]
fn critical_groups_sl29_and_b() {
    // the SL(2,9) entry M4((-1,-3/Q(√2))) has dimension 200, i.e. M5
    let cases: &[(&str, &[(usize, u64, u64, &str)])] = &[
        (
            "SL29",
            &[
                (1, 1, 1, "No"),
                (2, 25, 1, "No"),
                (1, 81, 1, "No"),
                (1, 100, 1, "No"),
                (2, 128, 2, "No"),
                (1, 200, 2, "No"),
                (2, 16, 1, "EC2"),
            ],
        ),
        (
            "B",
            &[
                (1, 1, 1, "No"),
                (2, 25, 1, "No"),
                (2, 100, 1, "No"),
                (1, 225, 1, "No"),
                (1, 50, 2, "No"),
                (2, 400, 1, "No"),
                (1, 16, 1, "No"),
                (1, 18, 2, "No"),
                (1, 256, 1, "No"),
                (1, 288, 2, "No"),
                (1, 16, 1, "EC2"),
            ],
        ),
    ];
    for (label, spec) in cases {
        assert_eq!(tag_multiset(label), golden(spec), "{label}");
    }
}
