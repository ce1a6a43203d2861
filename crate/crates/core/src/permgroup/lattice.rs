use std::collections::HashSet;

use super::{ElementSet, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

impl FiniteGroup {
    /// Distinct cyclic subgroups, sorted by order then element set.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.order() {
            let c = self.subgroup(&[x]);
            if seen.insert(c.elements().to_vec()) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    /// Every subgroup exactly once, sorted by `(order, element set)`.
    ///
    /// Starts from the cyclic subgroups and repeatedly extends each known
    /// subgroup `U` by a cyclic subgroup of prime-power order; when the
    /// generator normalizes `U` the extension is the product set `U⟨c⟩`.
    /// Every subgroup is generated by prime-power-order elements, so the
    /// closure of this process is the full lattice.
    pub fn all_subgroups_bounded(&self, bound: usize) -> Result<Vec<Subgroup>> {
        if self.order() > bound {
            return Err(Error::BoundExceeded { bound });
        }
        let cyclic = self.cyclic_subgroups();
        let extenders: Vec<usize> = cyclic
            .iter()
            .filter(|c| !c.is_trivial() && is_prime_power(c.order()))
            .map(|c| c.generators()[0])
            .collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut all: Vec<Subgroup> = Vec::new();
        let mut queue: Vec<Subgroup> = Vec::new();
        for c in cyclic {
            seen.insert(c.elements().to_vec());
            queue.push(c.clone());
            all.push(c);
        }
        while let Some(u) = queue.pop() {
            if u.order() == self.order() {
                continue;
            }
            for &c in &extenders {
                if u.contains(c) {
                    continue;
                }
                let v = if self.normalizes(c, &u) {
                    self.extend_by_normalizing(&u, c)
                } else {
                    self.join(&u, &[c])
                };
                if seen.insert(v.elements().to_vec()) {
                    queue.push(v.clone());
                    all.push(v);
                }
            }
        }
        all.sort();
        Ok(all)
    }

    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_bounded(super::DEFAULT_ORDER_BOUND)
    }

    fn extend_by_normalizing(&self, u: &Subgroup, c: usize) -> Subgroup {
        let mut set = ElementSet::new(self.order());
        let mut els = Vec::new();
        let mut power = 0usize;
        loop {
            if u.contains(power) && power != 0 {
                break;
            }
            for &x in u.elements() {
                let y = self.mul(x, power);
                if set.insert(y) {
                    els.push(y);
                }
            }
            power = self.mul(power, c);
            if power == 0 {
                break;
            }
        }
        let mut gens = u.generators().to_vec();
        gens.push(c);
        Subgroup::from_parts(els, set, gens)
    }

    /// All normal subgroups, sorted by `(order, element set)`.
    ///
    /// Every normal subgroup is a product of normal closures of conjugacy
    /// classes, so the list is the join-closure of those closures.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut base: Vec<Subgroup> = Vec::new();
        for class in self.conjugacy_classes() {
            let n = self.normal_closure(&[class[0]]);
            if seen.insert(n.elements().to_vec()) {
                base.push(n);
            }
        }
        let mut all = base.clone();
        let mut frontier = base.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in &frontier {
                for b in &base {
                    if b.is_subgroup_of(u) || u.is_subgroup_of(b) {
                        continue;
                    }
                    let v = self.product_subgroup(u, b);
                    if seen.insert(v.elements().to_vec()) {
                        next.push(v.clone());
                        all.push(v);
                    }
                }
            }
            frontier = next;
        }
        all.sort();
        all
    }

    /// Minimal normal subgroups of the subgroup `h` that properly contain `k`,
    /// where `k` is normal in `h`.
    pub fn minimal_normal_overgroups(&self, h: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut cands: Vec<Subgroup> = Vec::new();
        for &x in h.elements() {
            if k.contains(x) {
                continue;
            }
            let mut gens = k.generators().to_vec();
            gens.push(x);
            let m = self.normal_closure_in(&gens, h.generators());
            if seen.insert(m.elements().to_vec()) {
                cands.push(m);
            }
        }
        // minimal normal overgroups are normal closures of single elements
        cands
            .iter()
            .filter(|m| {
                !cands
                    .iter()
                    .any(|m2| m2.order() < m.order() && m2.is_subgroup_of(m))
            })
            .cloned()
            .collect()
    }
}

fn is_prime_power(n: usize) -> bool {
    crate::numtheory::factorize(n as u64).len() == 1
}
