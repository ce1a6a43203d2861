//! Exact computations in `QG`: the idempotents `Ĥ`, `ε(H,K)`, `e(G,H,K)`,
//! strong Shoda pairs, and characters induced from them.

mod center;
mod character;
pub mod cyclotomic;
mod element;

pub use center::{central_decomposition, rational_classes, CentralComponent, CentralDecomposition};
pub use character::{frobenius_schur, induced_character, InducedCharacter};
pub use element::GroupAlgebraElement;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::permgroup::{FiniteGroup, Subgroup};

/// `Ĥ = (1/|H|) Σ h`.
pub fn hat<'g>(g: &'g FiniteGroup, h: &Subgroup) -> GroupAlgebraElement<'g> {
    let c = BigRational::new(BigInt::one(), BigInt::from(h.order()));
    GroupAlgebraElement::from_terms(g, h.elements().iter().map(|&x| (x, c.clone())))
}

/// `ε(H,K) = K̂ Π (1 - M̂)` over the minimal normal subgroups `M` of `H`
/// properly containing `K`; `ε(H,H) = Ĥ`.
pub fn epsilon<'g>(g: &'g FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<GroupAlgebraElement<'g>> {
    if !k.is_subgroup_of(h) || !g.is_normal_in(k, h) {
        return Err(Error::NotNormal("K is not normal in H".into()));
    }
    let mut eps = hat(g, k);
    if k == h {
        return Ok(eps);
    }
    let one = GroupAlgebraElement::one(g);
    for m in g.minimal_normal_overgroups(h, k) {
        eps = eps.mul(&one.sub(&hat(g, &m)));
    }
    Ok(eps)
}

/// Sum of the distinct conjugates `t^-1 x t` over `conjugators`.
pub fn sum_of_conjugates<'g>(x: &GroupAlgebraElement<'g>, conjugators: &[usize]) -> GroupAlgebraElement<'g> {
    let mut seen: Vec<GroupAlgebraElement<'g>> = Vec::new();
    for &t in conjugators {
        let c = x.conjugate(t);
        if !seen.contains(&c) {
            seen.push(c);
        }
    }
    seen.iter()
        .fold(GroupAlgebraElement::zero(x.group()), |acc, c| acc.add(c))
}

/// `e(G,H,K)`, the sum of the distinct `G`-conjugates of `ε(H,K)`.
pub fn e_ghk<'g>(g: &'g FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<GroupAlgebraElement<'g>> {
    let eps = epsilon(g, h, k)?;
    let stab = g.intersection(&g.normalizer(h)?, &g.normalizer(k)?);
    Ok(sum_of_conjugates(&eps, &g.right_transversal(&stab)))
}

/// The element of smallest index whose coset generates `H/K`, if `H/K` is
/// cyclic.
pub fn cyclic_generator(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Option<usize> {
    let index = h.order() / k.order();
    h.elements()
        .iter()
        .copied()
        .find(|&x| coset_order(g, x, k) == index)
}

/// Order of `xK` in `N/K` (requires `x` to normalize `K`).
pub fn coset_order(g: &FiniteGroup, x: usize, k: &Subgroup) -> usize {
    let mut y = x;
    let mut j = 1;
    while !k.contains(y) {
        y = g.mul(y, x);
        j += 1;
    }
    j
}

/// A strong Shoda pair `(H, K)` with its normalizer data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShodaPair {
    pub h: Subgroup,
    pub k: Subgroup,
    /// `N = N_G(K)`.
    pub n: Subgroup,
    /// Minimal-index element generating `H/K`.
    pub generator: usize,
    group_order: usize,
}

impl ShodaPair {
    /// `k = [H:K]`.
    pub fn conductor(&self) -> usize {
        self.h.order() / self.k.order()
    }

    /// `n = [G:N]`.
    pub fn matrix_size(&self) -> usize {
        self.group_order / self.n.order()
    }

    /// `[N:H]`.
    pub fn galois_degree(&self) -> usize {
        self.n.order() / self.h.order()
    }
}

/// The defining conditions of a strong Shoda pair, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SspCondition {
    /// `K ≤ H ⊴ N_G(K)`.
    Normality,
    /// `H/K` cyclic.
    Cyclic,
    /// `H/K` maximal abelian in `N_G(K)/K`.
    MaximalAbelian,
    /// Distinct conjugates of `ε(H,K)` are orthogonal.
    Orthogonality,
}

impl fmt::Display for SspCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SspCondition::Normality => "K <= H normal in N_G(K) fails",
            SspCondition::Cyclic => "H/K is not cyclic",
            SspCondition::MaximalAbelian => "H/K is not maximal abelian in N_G(K)/K",
            SspCondition::Orthogonality => "conjugates of epsilon(H,K) are not orthogonal",
        };
        f.write_str(s)
    }
}

/// Outcome of [`is_strong_shoda_pair`]; `failed` names the first condition
/// that does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SspDiagnostics {
    pub failed: Option<SspCondition>,
    pub pair: Option<ShodaPair>,
}

impl SspDiagnostics {
    pub fn passed(&self) -> bool {
        self.failed.is_none()
    }
}

fn fail(c: SspCondition) -> Result<SspDiagnostics> {
    Ok(SspDiagnostics {
        failed: Some(c),
        pair: None,
    })
}

/// Checks conditions (1)–(3); returns the pair data when they hold.
fn shoda_conditions(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<std::result::Result<ShodaPair, SspCondition>> {
    if !k.is_subgroup_of(h) {
        return Ok(Err(SspCondition::Normality));
    }
    let n = g.normalizer(k)?;
    if !h.is_subgroup_of(&n) || !g.is_normal_in(h, &n) {
        return Ok(Err(SspCondition::Normality));
    }
    let Some(generator) = cyclic_generator(g, h, k) else {
        return Ok(Err(SspCondition::Cyclic));
    };
    // the centralizer of H/K in N/K must be H/K
    for &x in n.elements() {
        if h.contains(x) {
            continue;
        }
        if k.contains(g.commutator(x, generator)) {
            return Ok(Err(SspCondition::MaximalAbelian));
        }
    }
    Ok(Ok(ShodaPair {
        h: h.clone(),
        k: k.clone(),
        n,
        generator,
        group_order: g.order(),
    }))
}

fn conjugates_orthogonal(g: &FiniteGroup, pair: &ShodaPair, eps: &GroupAlgebraElement<'_>) -> bool {
    g.right_transversal(&pair.n)
        .into_iter()
        .filter(|&t| !pair.n.contains(t))
        .all(|t| eps.mul(&eps.conjugate(t)).is_zero())
}

/// Checks all four strong Shoda pair conditions.
pub fn is_strong_shoda_pair(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<SspDiagnostics> {
    let pair = match shoda_conditions(g, h, k)? {
        Ok(p) => p,
        Err(c) => return fail(c),
    };
    let eps = epsilon(g, h, k)?;
    if !conjugates_orthogonal(g, &pair, &eps) {
        return fail(SspCondition::Orthogonality);
    }
    Ok(SspDiagnostics {
        failed: None,
        pair: Some(pair),
    })
}

/// Strong Shoda pairs matched to the primitive central idempotents of `QG`.
#[derive(Clone, Debug)]
pub struct SspEnumeration {
    /// One pair per realized component, in discovery order.
    pub pairs: Vec<ShodaPair>,
    /// Component index (into `decomposition.components`) of each pair.
    pub component_of_pair: Vec<usize>,
    pub decomposition: CentralDecomposition,
    /// Components not realized by any pair found.
    pub residual: Vec<usize>,
}

impl SspEnumeration {
    fn new(decomposition: CentralDecomposition) -> Self {
        SspEnumeration {
            pairs: Vec::new(),
            component_of_pair: Vec::new(),
            residual: (0..decomposition.components.len()).collect(),
            decomposition,
        }
    }

    fn realized(&self, c: usize) -> bool {
        self.component_of_pair.contains(&c)
    }

    fn push(&mut self, pair: ShodaPair, c: usize) {
        self.pairs.push(pair);
        self.component_of_pair.push(c);
        self.residual.retain(|&x| x != c);
    }

    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }

    /// `1 - Σ e(G,H,K)` as the sum of unrealized component idempotents.
    pub fn residual_idempotent<'g>(&self, g: &'g FiniteGroup) -> GroupAlgebraElement<'g> {
        self.residual
            .iter()
            .fold(GroupAlgebraElement::zero(g), |acc, &i| acc.add(&self.decomposition.idempotent(g, i)))
    }
}

/// Tries `(H, K)` and records it if it realizes a new component.
fn try_pair(g: &FiniteGroup, h: &Subgroup, k: &Subgroup, out: &mut SspEnumeration, check_orthogonal: bool) -> Result<()> {
    let pair = match shoda_conditions(g, h, k)? {
        Ok(p) => p,
        Err(_) => return Ok(()),
    };
    let eps = epsilon(g, h, k)?;
    let Some(c) = out.decomposition.component_of(g, &eps) else {
        return Ok(());
    };
    if out.realized(c) {
        return Ok(());
    }
    if check_orthogonal && !conjugates_orthogonal(g, &pair, &eps) {
        return Ok(());
    }
    out.push(pair, c);
    Ok(())
}

/// Strong Shoda pairs of a metabelian group: for a maximal abelian
/// `A ⊇ G'`, the pairs `(H, K)` with `H` maximal in
/// `{B : A ≤ B, B' ≤ K ≤ B}` and `H/K` cyclic.
pub fn strong_shoda_pairs_metabelian(g: &FiniteGroup) -> Result<SspEnumeration> {
    if !g.is_metabelian() {
        return Err(Error::Precondition("group is not metabelian".into()));
    }
    let subs = g.all_subgroups()?;
    let derived = g.derived_subgroup();
    let mut out = SspEnumeration::new(central_decomposition(g));
    let candidates_a: Vec<&Subgroup> = subs
        .iter()
        .filter(|a| derived.is_subgroup_of(a) && g.subgroup_is_abelian(a))
        .collect();
    for a in candidates_a {
        if !g.is_maximal_abelian(a)? {
            continue;
        }
        let over: Vec<(&Subgroup, Subgroup)> = subs
            .iter()
            .filter(|b| a.is_subgroup_of(b))
            .map(|b| (b, g.derived_of(b)))
            .collect();
        for k in &subs {
            // members of {B : A ≤ B, B' ≤ K ≤ B}
            let set: Vec<&Subgroup> = over
                .iter()
                .filter(|(b, db)| k.is_subgroup_of(b) && db.is_subgroup_of(k))
                .map(|(b, _)| *b)
                .collect();
            for h in &set {
                let maximal = !set.iter().any(|b| b.order() > h.order() && h.is_subgroup_of(b));
                if maximal && cyclic_generator(g, h, k).is_some() {
                    try_pair(g, h, k, &mut out, false)?;
                }
            }
        }
        if out.is_complete() {
            break;
        }
    }
    Ok(out)
}

/// Generic search over all pairs `K ⊴ H` with `H/K` cyclic.
pub fn strong_shoda_pairs_search(g: &FiniteGroup, bound: usize) -> Result<SspEnumeration> {
    let subs = g.all_subgroups_bounded(bound)?;
    let mut out = SspEnumeration::new(central_decomposition(g));
    for h in &subs {
        let dh = g.derived_of(h);
        for k in &subs {
            if k.order() > h.order() || !k.is_subgroup_of(h) || !dh.is_subgroup_of(k) {
                continue;
            }
            if cyclic_generator(g, h, k).is_none() {
                continue;
            }
            try_pair(g, h, k, &mut out, true)?;
            if out.is_complete() {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Metabelian enumeration when it applies, generic search otherwise.
pub fn strong_shoda_pairs(g: &FiniteGroup, bound: usize) -> Result<SspEnumeration> {
    if g.is_metabelian() {
        strong_shoda_pairs_metabelian(g)
    } else {
        strong_shoda_pairs_search(g, bound)
    }
}
