//! Finite groups as fully enumerated permutation groups.
//!
//! Every group is materialized: its element list, multiplication table,
//! inverses and conjugacy classes are computed once at construction. Element
//! indices (`usize`) are the currency exchanged with the other modules;
//! index 0 is always the identity.

mod iso;
mod lattice;
mod perm;
mod quotient;
mod subgroup;

pub use iso::{find_isomorphism, find_isomorphism_map, fingerprint, is_isomorphic, is_isomorphic_bounded, Fingerprint, DEFAULT_ISO_BOUND};
pub use perm::Permutation;
pub use quotient::QuotientMap;
pub use subgroup::{ElementSet, Subgroup};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::numtheory::lcm;

/// Default bound on group orders accepted by constructors.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<usize>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    center: Subgroup,
    derived: Subgroup,
    exponent: u64,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("degree", &self.degree)
            .field("generators", &self.generator_perms())
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `perms` on `degree` points.
    pub fn from_generators(degree: usize, perms: &[Permutation], bound: usize) -> Result<Self> {
        for p in perms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(degree, p.degree()));
            }
        }
        let id = Permutation::identity(degree);
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut elements = vec![id.clone()];
        index.insert(id, 0);
        let mut gens = Vec::new();
        let mut gen_perms: Vec<Permutation> = Vec::new();
        for p in perms {
            if p.is_identity() || gen_perms.contains(p) {
                continue;
            }
            gen_perms.push(p.clone());
        }
        // right multiplication by each generator, as maps on indices
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); gen_perms.len()];
        let mut i = 0;
        while i < elements.len() {
            for (s, g) in gen_perms.iter().enumerate() {
                let prod = elements[i].then(g);
                let j = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= bound {
                            return Err(Error::BoundExceeded { bound });
                        }
                        index.insert(prod.clone(), elements.len());
                        elements.push(prod);
                        elements.len() - 1
                    }
                };
                right[s].push(j as u32);
            }
            i += 1;
        }
        for g in &gen_perms {
            gens.push(index[g]);
        }
        Ok(Self::assemble(degree, elements, gens, &right))
    }

    /// Builds the right regular representation of an abstract group given by
    /// its Cayley table (`table[a * n + b] = a·b`, identity at index 0).
    pub fn from_cayley_table(n: usize, table: &[u32], generators: &[usize]) -> Result<Self> {
        Self::from_cayley_table_labelled(n, table, generators).map(|(g, _)| g)
    }

    /// As [`from_cayley_table`](Self::from_cayley_table), also returning the
    /// map from table labels to element indices of the result.
    pub fn from_cayley_table_labelled(
        n: usize,
        table: &[u32],
        generators: &[usize],
    ) -> Result<(Self, Vec<usize>)> {
        if table.len() != n * n || n == 0 {
            return Err(Error::InvalidArgument("table size mismatch".into()));
        }
        if (0..n).any(|a| table[a] as usize != a || table[a * n] as usize != a) {
            return Err(Error::InvalidArgument("index 0 is not the identity".into()));
        }
        // re-enumerate from the generators so the element order is canonical BFS
        let mut order_idx = vec![0usize];
        let mut pos = vec![u32::MAX; n];
        pos[0] = 0;
        let mut i = 0;
        while i < order_idx.len() {
            let a = order_idx[i];
            for &g in generators {
                let b = table[a * n + g] as usize;
                if pos[b] == u32::MAX {
                    pos[b] = order_idx.len() as u32;
                    order_idx.push(b);
                }
            }
            i += 1;
        }
        if order_idx.len() != n {
            return Err(Error::InvalidArgument(
                "generators do not generate the whole table".into(),
            ));
        }
        let elements: Vec<Permutation> = order_idx
            .iter()
            .map(|&x| {
                // right regular action y -> y·x on relabelled points
                let images = order_idx.iter().map(|&y| pos[table[y * n + x] as usize]).collect();
                Permutation::from_images(images).expect("regular action is a bijection")
            })
            .collect();
        let mut gens: Vec<usize> = Vec::new();
        for &g in generators {
            let g = pos[g] as usize;
            if g != 0 && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let right: Vec<Vec<u32>> = gens
            .iter()
            .map(|&s| {
                let gs = order_idx[s];
                order_idx
                    .iter()
                    .map(|&y| pos[table[y * n + gs] as usize])
                    .collect()
            })
            .collect();
        let labels = pos.iter().map(|&p| p as usize).collect();
        Ok((Self::assemble(n, elements, gens, &right), labels))
    }

    fn assemble(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<usize>,
        right: &[Vec<u32>],
    ) -> Self {
        let n = elements.len();
        // BFS tree: every non-identity element is parent·gen
        let mut parent = vec![(0u32, 0u32); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for (s, r) in right.iter().enumerate() {
                let y = r[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = (x as u32, s as u32);
                    queue.push(y);
                }
            }
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        for &b in queue.iter().skip(1) {
            let (p, s) = parent[b];
            let r = &right[s as usize];
            for a in 0..n {
                table[a * n + b] = r[table[a * n + p as usize] as usize];
            }
        }
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        let mut orders = vec![1u32; n];
        for (a, o) in orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = table[x * n + a] as usize;
                *o += 1;
            }
        }
        let mut g = FiniteGroup {
            degree,
            elements,
            generators,
            table,
            inverses,
            orders,
            classes: Vec::new(),
            class_of: Vec::new(),
            center: Subgroup::trivial(n),
            derived: Subgroup::trivial(n),
            exponent: 1,
        };
        g.compute_classes();
        let center: Vec<usize> = (0..n)
            .filter(|&z| g.generators.iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
            .collect();
        g.center = Subgroup::from_closed_set(&g, center);
        let mut comms = Vec::new();
        for (i, &a) in g.generators.iter().enumerate() {
            for &b in &g.generators[i + 1..] {
                comms.push(g.commutator(a, b));
            }
        }
        let gens = g.generators.clone();
        g.derived = g.normal_closure_in(&comms, &gens);
        g.exponent = g.orders.iter().fold(1, |e, &o| lcm(e, o as u64));
        g
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            let mut orbit = vec![x];
            class_of[x] = c;
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &s in &self.generators {
                    let z = self.conj(y, s);
                    if class_of[z] == u32::MAX {
                        class_of[z] = c;
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators.iter().map(|&g| self.elements[g].clone()).collect()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        // linear scan; only used for IO-level lookups
        self.elements.iter().position(|q| q == p)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g^-1 · x · g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.orders[a] as i64;
        let k = k.rem_euclid(o);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn elements_of_order(&self, k: usize) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.orders[x] as usize == k).collect()
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a] as usize
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        &self.derived
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_closed_set(self, (0..self.order()).collect())
    }

    /// `s` as a group in its own right, on the same points.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> Result<FiniteGroup> {
        let perms: Vec<Permutation> = s.generators().iter().map(|&x| self.element(x).clone()).collect();
        FiniteGroup::from_generators(self.degree, &perms, self.order())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self.order())
    }

    /// Subgroup generated by the given elements.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut set = ElementSet::new(n);
        set.insert(0);
        let mut elems = vec![0usize];
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_parts(elems, set, gens)
    }

    /// Smallest subgroup containing `u` and `extra`.
    pub fn join(&self, u: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens = u.generators().to_vec();
        gens.extend_from_slice(extra);
        self.subgroup(&gens)
    }

    /// Normal closure of `xs` under conjugation by `conjugators`.
    pub(crate) fn normal_closure_in(&self, xs: &[usize], conjugators: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut sub = self.subgroup(&[]);
        let mut pending: Vec<usize> = xs.to_vec();
        while let Some(x) = pending.pop() {
            if sub.contains(x) {
                continue;
            }
            gens.push(x);
            sub = self.subgroup(&gens);
            for &g in sub.generators() {
                for &c in conjugators {
                    let y = self.conj(g, c);
                    if !sub.contains(y) {
                        pending.push(y);
                    }
                }
            }
        }
        sub
    }

    pub fn normal_closure(&self, xs: &[usize]) -> Subgroup {
        let gens = self.generators.clone();
        self.normal_closure_in(xs, &gens)
    }

    pub fn is_abelian(&self) -> bool {
        self.center.order() == self.order()
    }

    /// Centralizer of a set of elements.
    pub fn centralizer(&self, xs: &[usize]) -> Subgroup {
        let els: Vec<usize> = (0..self.order())
            .filter(|&g| xs.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::from_closed_set(self, els)
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        let is_abelian = self.is_abelian();
        let is_cyclic = self.orders.iter().any(|&o| o as usize == self.order());
        let is_metabelian = self.subgroup_is_abelian(&self.derived);
        StructuralPredicates {
            is_abelian,
            is_cyclic,
            is_metabelian,
        }
    }

    pub fn is_metabelian(&self) -> bool {
        self.subgroup_is_abelian(&self.derived)
    }

    pub fn subgroup_is_abelian(&self, h: &Subgroup) -> bool {
        let gens = h.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Derived length (number of steps to reach the trivial group).
    pub fn derived_length(&self) -> usize {
        let mut cur = self.whole();
        let mut len = 0;
        while cur.order() > 1 {
            let next = self.derived_of(&cur);
            if next.order() == cur.order() {
                return usize::MAX;
            }
            cur = next;
            len += 1;
        }
        len
    }

    /// Commutator subgroup of a subgroup.
    pub fn derived_of(&self, h: &Subgroup) -> Subgroup {
        let gens = h.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure_in(&comms, gens)
    }

    /// `C_G(A) = A`, for an abelian subgroup `A`.
    pub fn is_maximal_abelian(&self, a: &Subgroup) -> Result<bool> {
        if !self.subgroup_is_abelian(a) {
            return Err(Error::InvalidArgument("subgroup is not abelian".into()));
        }
        Ok(self.centralizer(a.generators()).order() == a.order())
    }
}

/// Basic structural flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub is_metabelian: bool,
}
