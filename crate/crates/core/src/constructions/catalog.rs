//! Named groups: the critical list, the groups they are compared against,
//! and a few small extras used in tests and scans.

use std::collections::BTreeMap;

use super::presentation::{finitely_presented_with_generators, parse_relation};
use super::{
    central_product_built, cyclic_built, dihedral_built, direct_product_built, extension,
    identified_semidirect_built, quaternion_built, semidirect_cyclic_built,
    semidirect_kernel_built, sl2, Action, Built,
};
use crate::error::{Error, Result};
use crate::permgroup::FiniteGroup;

/// `(label, order, description)` for every catalog entry.
pub const CATALOG: &[(&str, usize, &str)] = &[
    ("SL23", 24, "SL(2,3) = Q8 ⋊ C3"),
    ("SL25", 120, "SL(2,5)"),
    ("D6", 6, "dihedral group of order 6"),
    ("D8", 8, "dihedral group of order 8"),
    ("D16plus", 16, "⟨a⟩8 ⋊ ⟨b⟩2, a^b = a^5"),
    ("Q8semiC2", 16, "Q8 ⋊ C2, i^a = i^-1, j^a = j"),
    ("Q8xC3", 24, "Q8 × C3"),
    ("Q8YD8", 32, "Q8 Y2 D8"),
    ("C5semiC8", 40, "C5 ⋊2 C8"),
    ("C3sqsemiC8", 72, "(C3 × C3) ⋊2 C8"),
    ("SL23YD8", 96, "SL(2,3) Y2 D8"),
    ("C384", 384, "(Q8 × Q8) ⋊ C6"),
    ("SL23YC4", 48, "SL(2,3) Y2 C4"),
    ("SL29", 720, "SL(2,9)"),
    ("Aplus", 240, "SL(2,5) ⇂4 C8, first twist"),
    ("Aminus", 240, "SL(2,5) ⇂4 C8, second twist"),
    ("B1", 160, "(Q8 Y2 D8) ⋊ C5"),
    ("B2", 320, "(Q8 Y2 D8) ⇂2 (C5 ⋊2 C4)"),
    ("B", 1920, "(Q8 Y2 D8) ⇂2 SL(2,5)"),
    ("Q8", 8, "quaternion group"),
    ("Q12", 12, "dicyclic group of order 12"),
    ("D12", 12, "dihedral group of order 12"),
    ("D16", 16, "dihedral group of order 16"),
    ("D16minus", 16, "semidihedral group ⟨a⟩8 ⋊ ⟨b⟩2, a^b = a^3"),
    ("C3semi4C8", 24, "C3 ⋊4 C8"),
    ("C4xD6", 24, "C4 × D6"),
    ("C3xD8", 24, "C3 × D8"),
    ("C3xQ8", 24, "C3 × Q8"),
    ("Q16semiC2", 32, "Q16 ⋊ C2, j^a = j^3, i^a = i"),
    ("C5semiC4", 20, "C5 ⋊ C4 (Frobenius)"),
    ("C3sqsemiC4", 36, "(C3 × C3) ⋊ C4"),
    ("C2xD6", 12, "C2 × D6"),
    ("A4", 12, "alternating group of degree 4"),
    ("S4", 24, "symmetric group of degree 4"),
    ("C6", 6, "cyclic group of order 6"),
    ("C8", 8, "cyclic group of order 8"),
    ("C12", 12, "cyclic group of order 12"),
    ("C2xC6", 12, "C2 × C6"),
    ("C4xC4", 16, "C4 × C4"),
];

/// The labels of the groups in the main theorem's list.
pub const CRITICAL_LABELS: &[&str] = &[
    "SL23", "SL25", "D6", "D8", "D16plus", "Q8semiC2", "Q8xC3", "Q8YD8", "C5semiC8",
    "C3sqsemiC8", "SL23YD8", "C384", "SL23YC4", "SL29", "Aplus", "Aminus", "B1", "B2", "B",
];

pub fn catalog_labels() -> Vec<&'static str> {
    CATALOG.iter().map(|(l, _, _)| *l).collect()
}

pub fn named(label: &str) -> Result<FiniteGroup> {
    Ok(named_built(label)?.group)
}

fn rename(b: Built, pairs: &[(&str, &str)]) -> Built {
    b.rename(pairs)
}

fn q8() -> Result<Built> {
    quaternion_built(8)
}

fn act<'a>(images: Vec<(&'a str, Vec<(&'a str, &'a str)>)>) -> Action<'a> {
    Action { images }
}

fn sl23() -> Result<Built> {
    let c3 = rename(cyclic_built(3)?, &[("a", "g")]);
    let b = extension(
        &q8()?,
        &c3,
        &act(vec![("g", vec![("i", "j"), ("j", "i j")])]),
        &[],
    )?;
    b.verify(&["g^-1 i g = j", "g^-1 j g = i j", "g^3"])?;
    Ok(b)
}

fn presented(names: &[&str], relations: &[&str], expected: usize) -> Result<Built> {
    let rels = relations
        .iter()
        .map(|r| parse_relation(names, r))
        .collect::<Result<Vec<_>>>()?;
    let (group, gens) = finitely_presented_with_generators(names.len(), &rels, 4 * expected + 1000)?;
    if group.order() != expected {
        return Err(Error::RelationFailure(format!(
            "presentation gives order {} instead of {expected}",
            group.order()
        )));
    }
    let map = names.iter().map(|n| n.to_string()).zip(gens).collect();
    Ok(Built { group, names: map })
}

fn sl25() -> Result<Built> {
    presented(&["u", "v"], &["u^4", "v^3", "(u v)^5 = u^2"], 120)
}

fn q8yd8() -> Result<Built> {
    let b = central_product_built(&q8()?, &dihedral_built(8)?, "i^2", "a^2", 2)?;
    b.verify(&["i^2 = a^2", "b^2", "b^-1 a b = a^-1", "i^-1 j i = j^-1"])?;
    Ok(b)
}

pub fn named_built(label: &str) -> Result<Built> {
    let b = match label {
        "SL23" => sl23()?,
        "SL25" => sl25()?,
        "D6" => dihedral_built(6)?,
        "D8" => dihedral_built(8)?,
        "D12" => dihedral_built(12)?,
        "D16" => dihedral_built(16)?,
        "D16plus" => semidirect_cyclic_built(8, 2, 5)?,
        "D16minus" => semidirect_cyclic_built(8, 2, 3)?,
        "Q8" => q8()?,
        "Q12" => quaternion_built(12)?,
        "Q8semiC2" => {
            let c2 = cyclic_built(2)?;
            let b = extension(&q8()?, &c2, &act(vec![("a", vec![("i", "i^-1"), ("j", "j")])]), &[])?;
            b.verify(&["a^2", "a^-1 i a = i^-1", "a^-1 j a = j"])?;
            b
        }
        "Q8xC3" | "C3xQ8" => direct_product_built(&q8()?, &rename(cyclic_built(3)?, &[("a", "c")]))?,
        "Q8YD8" => q8yd8()?,
        "C5semiC8" => semidirect_kernel_built(5, 8, 2)?,
        "C5semiC4" => semidirect_kernel_built(5, 4, 1)?,
        "C3semi4C8" => semidirect_kernel_built(3, 8, 4)?,
        "C3sqsemiC8" | "C3sqsemiC4" => {
            let order = if label == "C3sqsemiC8" { 8 } else { 4 };
            let n = direct_product_built(&cyclic_built(3)?, &rename(cyclic_built(3)?, &[("a", "b")]))?;
            let c = rename(cyclic_built(order)?, &[("a", "c")]);
            let b = extension(&n, &c, &act(vec![("c", vec![("a", "b^-1"), ("b", "a")])]), &[])?;
            b.verify(&["c^-1 a c = b^-1", "c^-1 b c = a", "a b = b a"])?;
            b
        }
        "SL23YD8" => central_product_built(&sl23()?, &dihedral_built(8)?, "i^2", "a^2", 2)?,
        "SL23YC4" => central_product_built(&sl23()?, &rename(cyclic_built(4)?, &[("a", "c")]), "i^2", "c^2", 2)?,
        "C384" => {
            let q1 = rename(q8()?, &[("i", "i1"), ("j", "j1")]);
            let q2 = rename(q8()?, &[("i", "i2"), ("j", "j2")]);
            let n = direct_product_built(&q1, &q2)?;
            let c6 = rename(cyclic_built(6)?, &[("a", "b")]);
            let b = extension(
                &n,
                &c6,
                &act(vec![(
                    "b",
                    vec![("i1", "i2"), ("j1", "j2"), ("i2", "j1"), ("j2", "i1 j1")],
                )]),
                &[],
            )?;
            b.verify(&["b^6", "b^-1 i1 b = i2", "b^-1 j2 b = i1 j1"])?;
            b
        }
        "SL29" => Built {
            group: sl2(9)?,
            names: BTreeMap::new(),
        },
        "Aplus" => presented(
            &["v", "d"],
            &["d^8", "v^3", "(d^2 v)^5 = d^4", "d^-1 v d = v d^-2 v^-1 d^-2 v d^2"],
            240,
        )?,
        "Aminus" => presented(
            &["v", "d"],
            &["d^8", "v^3", "(d^-2 v)^5 = d^4", "d^-1 v d = v d^2 v^-1 d^2 v d^-2"],
            240,
        )?,
        "B1" => {
            let c5 = rename(cyclic_built(5)?, &[("a", "c")]);
            let b = identified_semidirect_built(
                &q8yd8()?,
                &c5,
                1,
                &act(vec![(
                    "c",
                    vec![("i", "j^-1 b"), ("j", "i^-1"), ("a", "i a^-1 b"), ("b", "i^-1 a^-1")],
                )]),
                &[],
            )?;
            b.verify(&["c^5", "c^-1 i c = j^-1 b", "c^-1 b c = i^-1 a^-1"])?;
            b
        }
        "B2" => {
            let h = rename(semidirect_kernel_built(5, 4, 2)?, &[("a", "c"), ("b", "d")]);
            let b = identified_semidirect_built(
                &q8yd8()?,
                &h,
                2,
                &act(vec![
                    ("c", vec![("i", "i^2 j"), ("j", "i^-1 b"), ("a", "j b a"), ("b", "j a")]),
                    ("d", vec![("i", "i^2 a"), ("j", "i b"), ("a", "i^-1"), ("b", "j a")]),
                ]),
                &[("i^2", "d^2")],
            )?;
            b.verify(&["c^5", "d^2 = i^2", "d^-1 a d = i^-1", "c^-1 a c = j b a"])?;
            b
        }
        "B" => {
            let h = sl25()?;
            let b = identified_semidirect_built(
                &q8yd8()?,
                &h,
                2,
                &act(vec![
                    ("u", vec![("i", "i^3"), ("j", "j b"), ("a", "i^3 a b"), ("b", "b")]),
                    // j^v = i j a b; with i^3 j a b the action of v has order 6
                    ("v", vec![("i", "i^2 j a b"), ("j", "i j a b"), ("a", "i b"), ("b", "i a")]),
                ]),
                &[("i^2", "u^2")],
            )?;
            b.verify(&["u^2 = i^2", "v^3", "u^-1 j u = j b", "v^-1 a v = i b"])?;
            b
        }
        "Q16semiC2" => {
            let q16 = quaternion_built(16)?;
            let c2 = cyclic_built(2)?;
            extension(&q16, &c2, &act(vec![("a", vec![("j", "j^3"), ("i", "i")])]), &[])?
        }
        "C4xD6" => direct_product_built(&rename(cyclic_built(4)?, &[("a", "c")]), &dihedral_built(6)?)?,
        "C3xD8" => direct_product_built(&rename(cyclic_built(3)?, &[("a", "c")]), &dihedral_built(8)?)?,
        "C2xD6" => direct_product_built(&rename(cyclic_built(2)?, &[("a", "c")]), &dihedral_built(6)?)?,
        "A4" => {
            let b = extension(
                &direct_product_built(&cyclic_built(2)?, &rename(cyclic_built(2)?, &[("a", "b")]))?,
                &rename(cyclic_built(3)?, &[("a", "c")]),
                &act(vec![("c", vec![("a", "b"), ("b", "a b")])]),
                &[],
            )?;
            b
        }
        "S4" => {
            let a4 = named_built("A4")?;
            let t = rename(cyclic_built(2)?, &[("a", "t")]);
            extension(&a4, &t, &act(vec![("t", vec![("a", "a"), ("b", "a b"), ("c", "c^-1")])]), &[])?
        }
        "C6" => cyclic_built(6)?,
        "C8" => cyclic_built(8)?,
        "C12" => cyclic_built(12)?,
        "C2xC6" => direct_product_built(&cyclic_built(2)?, &rename(cyclic_built(6)?, &[("a", "b")]))?,
        "C4xC4" => direct_product_built(&cyclic_built(4)?, &rename(cyclic_built(4)?, &[("a", "b")]))?,
        _ => return Err(Error::UnknownLabel(label.to_string())),
    };
    let expected = CATALOG
        .iter()
        .find(|(l, _, _)| *l == label)
        .map(|(_, o, _)| *o)
        .expect("label in catalog");
    if b.group.order() != expected {
        return Err(Error::RelationFailure(format!(
            "{label} has order {} instead of {expected}",
            b.group.order()
        )));
    }
    Ok(b)
}
