use std::collections::BTreeMap;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const DEFAULT_ISO_BOUND: usize = 200;

/// Isomorphism invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, class size) -> count of elements`
    pub class_profile: BTreeMap<(usize, usize), usize>,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelianization_profile: BTreeMap<usize, usize>,
    pub derived_length: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut class_profile = BTreeMap::new();
    for c in g.conjugacy_classes() {
        *class_profile
            .entry((g.element_order(c[0]), c.len()))
            .or_insert(0) += c.len();
    }
    let ab = g
        .quotient(g.derived_subgroup())
        .expect("derived subgroup is normal")
        .image;
    let mut abelianization_profile = BTreeMap::new();
    for &o in ab.element_orders() {
        *abelianization_profile.entry(o as usize).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        class_profile,
        center_order: g.center().order(),
        derived_order: g.derived_subgroup().order(),
        abelianization_profile,
        derived_length: g.derived_length(),
    }
}

/// Decides `G ≅ H` by comparing fingerprints, then searching for images of a
/// generating sequence of `G` among invariant-compatible elements of `H`.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    is_isomorphic_bounded(g, h, DEFAULT_ISO_BOUND)
}

pub fn is_isomorphic_bounded(g: &FiniteGroup, h: &FiniteGroup, bound: usize) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(false);
    }
    // the bound only guards the backtracking search
    if g.order() > bound {
        return Err(Error::BoundExceeded { bound });
    }
    Ok(find_isomorphism(g, h).is_some())
}

fn element_key(g: &FiniteGroup, x: usize) -> (usize, usize) {
    (g.element_order(x), g.conjugacy_classes()[g.class_of(x)].len())
}

/// An isomorphism `G -> H` as an element map, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let gens: Vec<usize> = g.whole().generators().to_vec();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let key = element_key(g, x);
            (0..h.order()).filter(|&y| element_key(h, y) == key).collect()
        })
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    search(g, h, &gens, &cands, &mut imgs)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    cands: &[Vec<usize>],
    imgs: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let level = imgs.len();
    if level == gens.len() {
        return extend_hom(g, h, gens, imgs).filter(|m| m.iter().all(|&x| x != usize::MAX));
    }
    for &y in &cands[level] {
        imgs.push(y);
        if extend_hom(g, h, &gens[..=level], imgs).is_some() {
            if let Some(m) = search(g, h, gens, cands, imgs) {
                return Some(m);
            }
        }
        imgs.pop();
    }
    None
}

/// Extends `gens[i] -> imgs[i]` to an injective homomorphism on `⟨gens⟩`,
/// or returns `None` when the assignment is inconsistent.
/// The injective homomorphism on `⟨gens⟩` sending `gens[i] -> imgs[i]`, if
/// one exists. Entries outside `⟨gens⟩` are `usize::MAX`.
pub fn find_isomorphism_map(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    imgs: &[usize],
) -> Option<Vec<usize>> {
    extend_hom(g, h, gens, imgs)
}

fn extend_hom(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let img = h.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                used[img] = true;
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}
