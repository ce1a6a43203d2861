use std::hash::{Hash, Hasher};

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Fixed-size bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn new(n: usize) -> Self {
        ElementSet {
            bits: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true when `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.bits[i / 64];
        let m = 1u64 << (i % 64);
        let fresh = *w & m == 0;
        *w |= m;
        fresh
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// A subgroup of a parent [`FiniteGroup`], stored as a sorted set of parent
/// element indices together with a generating subset.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    members: ElementSet,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then by the sorted element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl Subgroup {
    pub(crate) fn trivial(n: usize) -> Self {
        let mut members = ElementSet::new(n);
        members.insert(0);
        Subgroup {
            elements: vec![0],
            members,
            generators: Vec::new(),
        }
    }

    pub(crate) fn from_parts(mut elements: Vec<usize>, members: ElementSet, generators: Vec<usize>) -> Self {
        elements.sort_unstable();
        let mut s = Subgroup {
            elements,
            members,
            generators,
        };
        s.generators.dedup();
        s
    }

    /// Wraps a set already known to be closed; a small generating set is
    /// extracted greedily.
    pub(crate) fn from_closed_set(g: &FiniteGroup, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        let mut members = ElementSet::new(g.order());
        for &e in &elements {
            members.insert(e);
        }
        let generators = greedy_generators(g, &elements);
        Subgroup {
            elements,
            members,
            generators,
        }
    }

    /// Validates an arbitrary element list as a subgroup of `g`.
    pub fn from_elements(g: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut members = ElementSet::new(g.order());
        for &e in elements {
            if e >= g.order() {
                return Err(Error::NotSubgroup(format!("index {e} out of range")));
            }
            members.insert(e);
        }
        if !members.contains(0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in elements {
            for &b in elements {
                if !members.contains(g.mul(a, b)) {
                    return Err(Error::NotSubgroup("not closed under multiplication".into()));
                }
            }
        }
        let mut v = elements.to_vec();
        v.sort_unstable();
        v.dedup();
        Ok(Self::from_closed_set(g, v))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

fn greedy_generators(g: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    // prefer high-order elements so generating sets stay short
    let mut cands: Vec<usize> = elements.iter().copied().filter(|&x| x != 0).collect();
    cands.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = g.subgroup(&[]);
    for x in cands {
        if span.order() == elements.len() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.subgroup(&gens);
        }
    }
    gens
}

impl FiniteGroup {
    fn check_sub(&self, k: &Subgroup) -> Result<()> {
        if k.members.bits.len() != self.order().div_ceil(64)
            || k.elements.last().is_some_and(|&x| x >= self.order())
        {
            return Err(Error::NotSubgroup("subgroup belongs to another group".into()));
        }
        Ok(())
    }

    /// `K^g` as a subgroup.
    pub fn conjugate_subgroup(&self, k: &Subgroup, g: usize) -> Subgroup {
        let els: Vec<usize> = k.elements.iter().map(|&x| self.conj(x, g)).collect();
        let gens: Vec<usize> = k.generators.iter().map(|&x| self.conj(x, g)).collect();
        let mut members = ElementSet::new(self.order());
        for &e in &els {
            members.insert(e);
        }
        Subgroup::from_parts(els, members, gens)
    }

    /// Whether `g` normalizes `k`.
    pub fn normalizes(&self, g: usize, k: &Subgroup) -> bool {
        k.generators.iter().all(|&x| k.contains(self.conj(x, g)))
    }

    /// `N_G(K)`.
    pub fn normalizer(&self, k: &Subgroup) -> Result<Subgroup> {
        self.check_sub(k)?;
        Ok(self.normalizer_within(k, &(0..self.order()).collect::<Vec<_>>()))
    }

    /// Elements of `within` (a subgroup's element list) normalizing `k`.
    pub(crate) fn normalizer_within(&self, k: &Subgroup, within: &[usize]) -> Subgroup {
        let els: Vec<usize> = within.iter().copied().filter(|&g| self.normalizes(g, k)).collect();
        Subgroup::from_closed_set(self, els)
    }

    pub fn is_normal(&self, k: &Subgroup) -> bool {
        self.generators.iter().all(|&g| self.normalizes(g, k))
    }

    /// Whether `k` is normal in the subgroup `h`.
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        k.is_subgroup_of(h) && h.generators.iter().all(|&g| self.normalizes(g, k))
    }

    /// `Core_G(K)`: the largest normal subgroup of `G` inside `K`.
    pub fn core(&self, k: &Subgroup) -> Result<Subgroup> {
        self.check_sub(k)?;
        let mut cur: Vec<usize> = k.elements.clone();
        loop {
            let before = cur.len();
            for &s in &self.generators {
                // keep x in C ∩ C^s, i.e. x^(s^-1) ∈ C
                let mut set = ElementSet::new(self.order());
                for &x in &cur {
                    set.insert(x);
                }
                let si = self.inv(s);
                cur.retain(|&x| set.contains(self.conj(x, si)));
            }
            if cur.len() == before {
                return Ok(Subgroup::from_closed_set(self, cur));
            }
        }
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let els: Vec<usize> = a.elements.iter().copied().filter(|&x| b.contains(x)).collect();
        Subgroup::from_closed_set(self, els)
    }

    /// Right cosets `K g` as element lists, ordered by minimal representative.
    pub fn right_cosets(&self, k: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = ElementSet::new(self.order());
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen.contains(g) {
                continue;
            }
            let coset: Vec<usize> = k.elements.iter().map(|&x| self.mul(x, g)).collect();
            for &c in &coset {
                seen.insert(c);
            }
            out.push(coset);
        }
        out
    }

    /// Minimal-index representatives of the right cosets of `k`.
    pub fn right_transversal(&self, k: &Subgroup) -> Vec<usize> {
        self.right_cosets(k).iter().map(|c| *c.iter().min().unwrap()).collect()
    }

    /// Product set `A·B`, a subgroup when one of them normalizes the other.
    pub fn product_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = a.generators.clone();
        gens.extend_from_slice(&b.generators);
        self.subgroup(&gens)
    }
}
