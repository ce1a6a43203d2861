use super::*;
use crate::constructions::{named, named_built, CRITICAL_LABELS};
use crate::groupalgebra::is_strong_shoda_pair;
use crate::permgroup::Permutation;

fn all_ssp(g: &FiniteGroup) -> Vec<ShodaPair> {
    let subs = g.all_subgroups().unwrap();
    let mut out = Vec::new();
    for h in &subs {
        for k in subs.iter().filter(|k| k.is_subgroup_of(h)) {
            let d = is_strong_shoda_pair(g, h, k).unwrap();
            if d.passed() {
                out.push(d.pair.unwrap());
            }
        }
    }
    out
}

#[test]
fn propiedad_examples() {
    let b = named_built("D8").unwrap();
    let g = &b.group;
    let a = g.subgroup(&[b.el("a")]);
    assert!(propiedad(g, &a, &g.trivial_subgroup()).unwrap());
    assert!(!propiedad(g, &g.whole(), &g.whole()).unwrap());
    // (⟨b⟩, 1) is not a strong Shoda pair
    let bb = g.subgroup(&[b.el("b")]);
    assert!(propiedad(g, &bb, &g.trivial_subgroup()).is_err());

    let q8 = named("Q8").unwrap();
    for pair in all_ssp(&q8) {
        assert!(!propiedad(&q8, &pair.h, &pair.k).unwrap());
    }

    let b = named_built("C5semiC8").unwrap();
    let g = &b.group;
    let a = g.subgroup(&[b.el("a"), g.pow(b.el("b"), 4)]);
    assert!(propiedad(g, &a, &g.trivial_subgroup()).unwrap());
}

#[test]
fn propiedad_holds_on_every_csp_reference() {
    for r in csp_references() {
        let en = strong_shoda_pairs(&r.group, DEFAULT_BOUND).unwrap();
        let id = identify(&r.group, propiedad_references()).unwrap();
        let hits: Vec<&ShodaPair> =
            en.pairs.iter().filter(|p| propiedad_with_id(&r.group, id, p).unwrap()).collect();
        assert!(!hits.is_empty(), "{}", r.label);
        for p in hits {
            assert_ne!(p.h.order(), r.group.order());
        }
    }
}

#[test]
fn last_clause_reads_index_dividing_six() {
    // 6|K| ≡ 0 mod |H| with |K|² | |H| and K ≠ 1 forces [H:K] ∈ {2, 3, 6}
    // and [H:K] ∈ {3, 6} whenever N/K ≅ Q12 with [G:N] = 2
    for h in 1..=200usize {
        for k in 2..=h {
            if h % k == 0 && (6 * k) % h == 0 && h % (k * k) == 0 {
                assert!([1, 2, 3, 6].contains(&(h / k)));
            }
        }
    }
}

#[test]
fn quotient_filter_examples() {
    assert!(quotient_filter(&named("D6").unwrap(), csp_references()).unwrap().is_empty());
    let off = quotient_filter(&named("C2xD6").unwrap(), csp_references()).unwrap();
    assert!(off.iter().any(|&(n, l)| n == 2 && l == "D6"));
    let off = quotient_filter(&named("D16").unwrap(), csp_references()).unwrap();
    assert!(off.contains(&(2, "D8")));
}

#[test]
fn family_predicate_examples() {
    assert!(family_predicate_3(7).unwrap());
    assert!(!family_predicate_3(5).unwrap());
    assert!(family_predicate_1(3, 7).unwrap());
    assert!(!family_predicate_1(3, 3).unwrap());
    assert!(family_predicate_1(4, 7).is_err());
    // C5 ⋊2 C8 is excluded from (2) and listed separately
    assert!(!family_predicate_2(5, 8, 2).unwrap());
    assert!(family_predicate_2(5, 8, 4).unwrap());
    assert!(!family_predicate_2(5, 16, 4).unwrap());
    assert!(!family_predicate_2(7, 8, 2).unwrap());
    assert!(family_predicate_2(7, 32, 16).unwrap());
    assert!(family_predicate_2(7, 36, 6).unwrap());
    assert!(!family_predicate_2(7, 12, 6).unwrap());
    assert!(family_predicate_2(7, 9, 3).unwrap());
}

fn verdict(g: &FiniteGroup) -> CriticalVerdict {
    csp_prime_critical(g, "-", DEFAULT_BOUND).unwrap().verdict
}

#[test]
fn critical_examples() {
    assert_eq!(verdict(&named("D8").unwrap()), CriticalVerdict::Critical);
    let r = csp_prime_critical(&named("D16").unwrap(), "D16", DEFAULT_BOUND).unwrap();
    assert_eq!(r.verdict, CriticalVerdict::NotCritical);
    assert!(r.quotient_offenders.iter().any(|o| o.reference == Some("D8")));
    assert_eq!(verdict(&named("Q8xC3").unwrap()), CriticalVerdict::Critical);
    for label in ["Q8", "C12", "A4", "S4", "D12", "C2xD6", "Q12", "D16minus", "C4xC4", "C5semiC4"] {
        assert_eq!(verdict(&named(label).unwrap()), CriticalVerdict::NotCritical, "{label}");
    }
    let big = named("SL25").unwrap();
    assert!(matches!(
        csp_prime_critical(&big, "SL25", 100),
        Err(Error::BoundExceeded { bound: 100 })
    ));
}

#[test]
fn small_critical_catalog_groups() {
    for &label in CRITICAL_LABELS {
        let g = named(label).unwrap();
        if g.order() > 100 {
            continue;
        }
        let r = csp_prime_critical(&g, label, DEFAULT_BOUND).unwrap();
        assert_eq!(r.verdict, CriticalVerdict::Critical, "{label}: {}", r.reason);
        assert!(r.quotient_offenders.is_empty());
        assert!(r.ec_verdicts.iter().any(|c| c.verdict.witness.is_some()));
    }
}

#[test]
fn families_members_and_non_members() {
    assert_eq!(verdict(&family_group_3(7).unwrap()), CriticalVerdict::Critical);
    assert_eq!(verdict(&family_group_3(3).unwrap()), CriticalVerdict::Critical);
    assert_eq!(verdict(&family_group_3(5).unwrap()), CriticalVerdict::NotCritical);
    assert_eq!(verdict(&family_group_2(7, 9, 3).unwrap()), CriticalVerdict::Critical);
    assert_eq!(verdict(&family_group_2(7, 32, 16).unwrap()), CriticalVerdict::Critical);
    assert_eq!(verdict(&family_group_2(13, 8, 4).unwrap()), CriticalVerdict::Critical);
    assert_eq!(verdict(&family_group_2(5, 8, 4).unwrap()), CriticalVerdict::Critical);
    assert_eq!(verdict(&family_group_1(3, 7).unwrap()), CriticalVerdict::Critical);
}

fn regular_copy(g: &FiniteGroup) -> FiniteGroup {
    let perms: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|&x| Permutation::from_images((0..g.order()).map(|y| g.mul(y, x) as u32).collect()).unwrap())
        .collect();
    FiniteGroup::from_generators(g.order(), &perms, g.order()).unwrap()
}

#[test]
fn verdict_is_isomorphism_invariant() {
    for label in ["D8", "Q8", "D6", "C5semiC8", "D16"] {
        let g = named(label).unwrap();
        let copy = regular_copy(&g);
        assert_eq!(verdict(&copy), verdict(&g), "{label}");
    }
}

#[test]
fn scan_of_references() {
    let mut groups: Vec<(String, FiniteGroup)> = CSP_LABELS.iter().map(|l| (l.to_string(), named(l).unwrap())).collect();
    groups.push(("Q8".into(), named("Q8").unwrap()));
    groups.push(("C12".into(), named("C12").unwrap()));
    groups.push(("C2xD6".into(), named("C2xD6").unwrap()));
    let res = scan_corpus(&groups, DEFAULT_BOUND).unwrap();
    let l: Vec<&str> = res.l.iter().map(|&i| groups[i].0.as_str()).collect();
    let r: Vec<&str> = res.r.iter().map(|&i| groups[i].0.as_str()).collect();
    for label in CSP_LABELS {
        assert!(l.contains(label) && r.contains(label));
    }
    assert!(!l.contains(&"Q8") && !l.contains(&"C12"));
    assert!(l.contains(&"C2xD6") && !r.contains(&"C2xD6"));
    assert_eq!(res.warnings.len(), 0);
    // sorted by (order, position)
    let orders: Vec<usize> = res.l.iter().map(|&i| groups[i].1.order()).collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(scan_corpus(&groups, DEFAULT_BOUND).unwrap(), res);
}
