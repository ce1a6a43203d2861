//! Builders for the group families and named groups used by the classifier.
//!
//! Products are formed on pairs `(n, h)` standing for `n·h`, where `h` acts
//! on the normal factor by `n^h = h^-1 n h`. Identified products quotient by
//! the central subgroup equating designated elements, and the result is
//! realized as the permutation action on those cosets. Every construction
//! checks its defining relations before returning.

mod catalog;
pub mod presentation;
mod sl2;

pub use catalog::{catalog_labels, named, named_built, CATALOG, CRITICAL_LABELS};
pub use sl2::sl2;

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, mult_order};
use crate::permgroup::{find_isomorphism_map, FiniteGroup, Permutation, DEFAULT_ORDER_BOUND};

/// A group together with named elements (`"a"`, `"b"`, `"i"`, ...).
#[derive(Clone, Debug)]
pub struct Built {
    pub group: FiniteGroup,
    pub names: BTreeMap<String, usize>,
}

impl Built {
    pub fn el(&self, name: &str) -> usize {
        *self
            .names
            .get(name)
            .unwrap_or_else(|| panic!("no element named {name}"))
    }

    /// Evaluates a word such as `"i^-1 a b"` over the named elements.
    pub fn eval(&self, word: &str) -> Result<usize> {
        let g = &self.group;
        let mut x = 0;
        for tok in word.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad exponent `{tok}`")))?,
                ),
                None => (tok, 1),
            };
            if name == "1" {
                continue;
            }
            let e = *self
                .names
                .get(name)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown element `{name}`")))?;
            x = g.mul(x, g.pow(e, exp));
        }
        Ok(x)
    }

    /// Checks `lhs = rhs` for each relation, reporting the first failure.
    pub fn verify(&self, relations: &[&str]) -> Result<()> {
        for rel in relations {
            let (l, r) = rel.split_once('=').unwrap_or((rel, "1"));
            if self.eval(l)? != self.eval(r)? {
                return Err(Error::RelationFailure((*rel).to_string()));
            }
        }
        Ok(())
    }

    pub fn rename(mut self, pairs: &[(&str, &str)]) -> Self {
        for (from, to) in pairs {
            if let Some(v) = self.names.remove(*from) {
                self.names.insert(to.to_string(), v);
            }
        }
        self
    }
}

/// Right action of `h` on `n`, as automorphisms given on generators.
pub struct Action<'a> {
    /// `(name of generator of H, [(generator of N, word image in N)])`
    pub images: Vec<(&'a str, Vec<(&'a str, &'a str)>)>,
}

impl<'a> Action<'a> {
    pub fn trivial() -> Self {
        Action { images: Vec::new() }
    }
}

/// `N ⋊ H` modulo the identifications `n_word = h_word`.
///
/// The identified elements must generate a central subgroup; the result has
/// order `|N|·|H| / |D|` where `D` is that subgroup.
pub fn extension(
    n: &Built,
    h: &Built,
    action: &Action<'_>,
    identify: &[(&str, &str)],
) -> Result<Built> {
    let ng = &n.group;
    let hg = &h.group;
    let nn = ng.order();
    let hn = hg.order();
    // automorphism of N for each generator of H
    let ngens: Vec<(String, usize)> = n.names.iter().map(|(k, &v)| (k.clone(), v)).collect();
    let mut gen_autos: Vec<(usize, Vec<usize>)> = Vec::new();
    for &hgen in hg.generators() {
        let hname = h
            .names
            .iter()
            .find(|(_, &v)| v == hgen)
            .map(|(k, _)| k.as_str());
        let spec = hname.and_then(|nm| action.images.iter().find(|(x, _)| *x == nm));
        let auto = match spec {
            None => {
                // generator not mentioned: try to express via named generators
                auto_from_named(n, h, action, hgen)?
            }
            Some((_, imgs)) => {
                let mut srcs = Vec::new();
                let mut dsts = Vec::new();
                for (src, dst) in imgs {
                    srcs.push(n.eval(src)?);
                    dsts.push(n.eval(dst)?);
                }
                // unmentioned named generators of N are fixed
                for (nm, v) in &ngens {
                    if !imgs.iter().any(|(s, _)| s == nm) {
                        srcs.push(*v);
                        dsts.push(*v);
                    }
                }
                automorphism_from_images(ng, &srcs, &dsts)?
            }
        };
        gen_autos.push((hgen, auto));
    }
    let autos = extend_action(hg, &gen_autos)?;
    let inv_autos: Vec<Vec<usize>> = autos
        .iter()
        .map(|a| {
            let mut inv = vec![0; nn];
            for (x, &y) in a.iter().enumerate() {
                inv[y] = x;
            }
            inv
        })
        .collect();
    // (n1 h1)(n2 h2) = n1 · α_{h1}^{-1}(n2) · h1 h2
    let pair_mul = |p: usize, q: usize| -> usize {
        let (n1, h1) = (p / hn, p % hn);
        let (n2, h2) = (q / hn, q % hn);
        ng.mul(n1, inv_autos[h1][n2]) * hn + hg.mul(h1, h2)
    };
    let total = nn * hn;
    let mut dgens = Vec::new();
    for (nw, hw) in identify {
        let x = n.eval(nw)?;
        let y = h.eval(hw)?;
        dgens.push(ng.inv(x) * hn + y);
    }
    // D = ⟨dgens⟩ inside the pair group
    let mut d = vec![0usize];
    let mut i = 0;
    while i < d.len() {
        let x = d[i];
        i += 1;
        for &g in &dgens {
            let y = pair_mul(x, g);
            if !d.contains(&y) {
                d.push(y);
            }
        }
    }
    let n_to_pair = |x: usize| x * hn;
    let h_to_pair = |y: usize| y;
    let mut all_gens: Vec<usize> = ng.generators().iter().map(|&x| n_to_pair(x)).collect();
    all_gens.extend(hg.generators().iter().map(|&y| h_to_pair(y)));
    for &z in &d {
        for &g in &all_gens {
            if pair_mul(z, g) != pair_mul(g, z) {
                return Err(Error::RelationFailure(
                    "identified elements are not central".into(),
                ));
            }
        }
    }
    if total / d.len() > DEFAULT_ORDER_BOUND {
        return Err(Error::BoundExceeded {
            bound: DEFAULT_ORDER_BOUND,
        });
    }
    // cosets p·D
    let mut coset = vec![usize::MAX; total];
    let mut ncos = 0;
    for p in 0..total {
        if coset[p] != usize::MAX {
            continue;
        }
        for &z in &d {
            coset[pair_mul(p, z)] = ncos;
        }
        ncos += 1;
    }
    let mut rep = vec![0usize; ncos];
    for p in (0..total).rev() {
        rep[coset[p]] = p;
    }
    let action_perm = |g: usize| -> Permutation {
        let images: Vec<u32> = rep.iter().map(|&p| coset[pair_mul(p, g)] as u32).collect();
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    };
    let perms: Vec<Permutation> = all_gens.iter().map(|&g| action_perm(g)).collect();
    let group = FiniteGroup::from_generators(ncos, &perms, DEFAULT_ORDER_BOUND)?;
    if group.order() != ncos {
        return Err(Error::RelationFailure(format!(
            "extension has order {} instead of {}",
            group.order(),
            ncos
        )));
    }
    let mut lookup: HashMap<Permutation, usize> = HashMap::with_capacity(group.order());
    for i in 0..group.order() {
        lookup.insert(group.element(i).clone(), i);
    }
    let mut names = BTreeMap::new();
    for (k, &v) in &n.names {
        names.insert(k.clone(), lookup[&action_perm(n_to_pair(v))]);
    }
    for (k, &v) in &h.names {
        if names.contains_key(k) {
            return Err(Error::InvalidArgument(format!("element name `{k}` used twice")));
        }
        names.insert(k.clone(), lookup[&action_perm(h_to_pair(v))]);
    }
    Ok(Built { group, names })
}

fn auto_from_named(n: &Built, h: &Built, action: &Action<'_>, hgen: usize) -> Result<Vec<usize>> {
    // express hgen as a word in named generators of H via BFS
    let hg = &h.group;
    let named: Vec<(&str, usize)> = h.names.iter().map(|(k, &v)| (k.as_str(), v)).collect();
    let mut autos: Vec<(usize, Vec<usize>)> = Vec::new();
    for (nm, v) in &named {
        let auto = match action.images.iter().find(|(x, _)| x == nm) {
            None => (0..n.group.order()).collect(),
            Some((_, imgs)) => {
                let mut srcs = Vec::new();
                let mut dsts = Vec::new();
                for (src, dst) in imgs {
                    srcs.push(n.eval(src)?);
                    dsts.push(n.eval(dst)?);
                }
                for (k, &g) in &n.names {
                    if !imgs.iter().any(|(s, _)| s == k) {
                        srcs.push(g);
                        dsts.push(g);
                    }
                }
                automorphism_from_images(&n.group, &srcs, &dsts)?
            }
        };
        autos.push((*v, auto));
    }
    let nn = n.group.order();
    let mut found: Vec<Option<Vec<usize>>> = vec![None; hg.order()];
    found[0] = Some((0..nn).collect());
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (g, a) in &autos {
            let y = hg.mul(x, *g);
            if found[y].is_none() {
                let ax = found[x].as_ref().unwrap();
                found[y] = Some(ax.iter().map(|&e| a[e]).collect());
                queue.push(y);
            }
        }
    }
    found[hgen]
        .clone()
        .ok_or_else(|| Error::InvalidArgument("named elements do not generate H".into()))
}

/// The automorphism of `g` sending `srcs[i] -> dsts[i]`; the sources must
/// generate `g`.
pub fn automorphism_from_images(g: &FiniteGroup, srcs: &[usize], dsts: &[usize]) -> Result<Vec<usize>> {
    let map = find_isomorphism_map(g, g, srcs, dsts)
        .ok_or_else(|| Error::RelationFailure("action images do not define an automorphism".into()))?;
    if map.iter().any(|&x| x == usize::MAX) {
        return Err(Error::RelationFailure(
            "action is not given on a generating set".into(),
        ));
    }
    Ok(map)
}

/// Extends automorphisms on generators of `h` to a right action of all of
/// `h`, checking that it is a homomorphism.
fn extend_action(h: &FiniteGroup, gen_autos: &[(usize, Vec<usize>)]) -> Result<Vec<Vec<usize>>> {
    let hn = h.order();
    let nn = gen_autos.first().map(|(_, a)| a.len()).unwrap_or(0);
    let mut autos: Vec<Option<Vec<usize>>> = vec![None; hn];
    autos[0] = Some((0..nn.max(1)).collect());
    if gen_autos.is_empty() {
        return Ok(vec![(0..nn.max(1)).collect(); hn]);
    }
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (s, a) in gen_autos {
            let y = h.mul(x, *s);
            // α_{x s} = α_s ∘ α_x
            let ax = autos[x].as_ref().unwrap();
            let composed: Vec<usize> = ax.iter().map(|&e| a[e]).collect();
            match &autos[y] {
                None => {
                    autos[y] = Some(composed);
                    queue.push(y);
                }
                Some(existing) => {
                    if *existing != composed {
                        return Err(Error::RelationFailure(
                            "action is not a homomorphism".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(autos.into_iter().map(|a| a.expect("generators span H")).collect())
}

fn single(group: FiniteGroup, names: &[(&str, usize)]) -> Built {
    Built {
        group,
        names: names.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

/// `C_n = ⟨a⟩`.
pub fn cyclic_built(n: usize) -> Result<Built> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let p = Permutation::from_images(images)?;
    let g = FiniteGroup::from_generators(n, &[p.clone()], DEFAULT_ORDER_BOUND)?;
    let a = if n == 1 { 0 } else { g.generators()[0] };
    Ok(single(g, &[("a", a)]))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    Ok(cyclic_built(n)?.group)
}

/// `D_{2m} = ⟨a⟩_m ⋊ ⟨b⟩_2` with `a^b = a^-1`.
pub fn dihedral_built(order: usize) -> Result<Built> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::InvalidArgument(format!("dihedral order {order} must be even ≥ 2")));
    }
    let m = order / 2;
    let a = cyclic_built(m)?;
    let b = cyclic_built(2)?.rename(&[("a", "b")]);
    let built = extension(
        &a,
        &b,
        &Action {
            images: vec![("b", vec![("a", "a^-1")])],
        },
        &[],
    )?;
    built.verify(&[&format!("a^{m}"), "b^2", "b^-1 a b = a^-1"])?;
    Ok(built)
}

pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    Ok(dihedral_built(order)?.group)
}

/// `Q_{4m} = ⟨j⟩_{2m} ⇂_2 ⟨i⟩_4` with `j^i = j^-1`.
pub fn quaternion_built(order: usize) -> Result<Built> {
    if order < 4 || order % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "quaternion order {order} must be a positive multiple of 4"
        )));
    }
    let m = order / 4;
    let j = cyclic_built(2 * m)?.rename(&[("a", "j")]);
    let i = cyclic_built(4)?.rename(&[("a", "i")]);
    let built = extension(
        &j,
        &i,
        &Action {
            images: vec![("i", vec![("j", "j^-1")])],
        },
        &[(&format!("j^{m}"), "i^2")],
    )?;
    built.verify(&[&format!("j^{}", 2 * m), &format!("i^2 = j^{m}"), "i^-1 j i = j^-1"])?;
    Ok(built)
}

pub fn quaternion(order: usize) -> Result<FiniteGroup> {
    Ok(quaternion_built(order)?.group)
}

/// `C_m ⋊_k C_n = ⟨a⟩_m ⋊ ⟨b⟩_n` with `a^b = a^r`, where `r` is the least
/// residue of multiplicative order `n/k` modulo `m`; the kernel of the action
/// is `⟨b^(n/k)⟩` of order `k`.
pub fn semidirect_kernel_built(m: usize, n: usize, k: usize) -> Result<Built> {
    if m == 0 || n == 0 || k == 0 || n % k != 0 {
        return Err(Error::InvalidArgument(format!(
            "invalid semidirect parameters m={m}, n={n}, k={k}"
        )));
    }
    let want = (n / k) as u64;
    let r = (1..m.max(2) as u64)
        .find(|&r| gcd(r, m as u64) == 1 && mult_order(r as i64, m as u64).ok() == Some(want))
        .or(if m == 1 && want == 1 { Some(1) } else { None })
        .ok_or_else(|| {
            Error::InvalidArgument(format!("no residue of order {want} modulo {m}"))
        })?;
    semidirect_cyclic_built(m, n, r as i64)
}

/// `⟨a⟩_m ⋊ ⟨b⟩_n` with `a^b = a^r`.
pub fn semidirect_cyclic_built(m: usize, n: usize, r: i64) -> Result<Built> {
    let a = cyclic_built(m)?;
    let b = cyclic_built(n)?.rename(&[("a", "b")]);
    let img = format!("a^{r}");
    let built = extension(
        &a,
        &b,
        &Action {
            images: vec![("b", vec![("a", img.as_str())])],
        },
        &[],
    )?;
    built.verify(&[&format!("a^{m}"), &format!("b^{n}"), &format!("b^-1 a b = a^{r}")])?;
    Ok(built)
}

pub fn semidirect_kernel(m: usize, n: usize, k: usize) -> Result<FiniteGroup> {
    Ok(semidirect_kernel_built(m, n, k)?.group)
}

/// Direct product; names from the second factor must not clash.
pub fn direct_product_built(g: &Built, h: &Built) -> Result<Built> {
    extension(g, h, &Action::trivial(), &[])
}

/// `G Y_m H`: the direct product with the central elements `zg` and `zh`
/// (each of order `m`) identified.
pub fn central_product_built(g: &Built, h: &Built, zg: &str, zh: &str, m: usize) -> Result<Built> {
    let x = g.eval(zg)?;
    let y = h.eval(zh)?;
    if g.group.element_order(x) != m || h.group.element_order(y) != m {
        return Err(Error::InvalidArgument(format!(
            "identified elements must have order {m}"
        )));
    }
    if !g.group.center().contains(x) || !h.group.center().contains(y) {
        return Err(Error::InvalidArgument(
            "identified elements must be central".into(),
        ));
    }
    let built = extension(g, h, &Action::trivial(), &[(zg, zh)])?;
    if built.group.order() * m != g.group.order() * h.group.order() {
        return Err(Error::RelationFailure("central product has wrong order".into()));
    }
    Ok(built)
}

/// `G ⇂_m H`: semidirect product with the designated elements identified.
pub fn identified_semidirect_built(
    g: &Built,
    h: &Built,
    m: usize,
    action: &Action<'_>,
    identification: &[(&str, &str)],
) -> Result<Built> {
    let built = extension(g, h, action, identification)?;
    if built.group.order() * m != g.group.order() * h.group.order() {
        return Err(Error::RelationFailure(format!(
            "identified product has order {} instead of {}",
            built.group.order(),
            g.group.order() * h.group.order() / m
        )));
    }
    Ok(built)
}

/// Conditions on `(m, r)` for the metacyclic group `G_{m,r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmrConditions {
    pub n: u64,
    pub s: u64,
    pub t: u64,
    pub violations: Vec<String>,
}

pub fn gmr_conditions(m: u64, r: i64) -> Result<GmrConditions> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let mut violations = Vec::new();
    let rr = crate::numtheory::residue(r, m);
    if gcd(rr, m) != 1 {
        violations.push(format!("gcd(m, r) = {} ≠ 1", gcd(rr, m)));
        return Ok(GmrConditions {
            n: 0,
            s: 0,
            t: 0,
            violations,
        });
    }
    let n = mult_order(r, m)?;
    let s = gcd(crate::numtheory::residue(r - 1, m), m);
    let s = if s == 0 { m } else { s };
    let t = m / s;
    if gcd(n * s, t) != 1 {
        violations.push(format!("gcd(ns, t) = gcd({}, {t}) = {} ≠ 1", n * s, gcd(n * s, t)));
    }
    Ok(GmrConditions { n, s, t, violations })
}

/// `G_{m,r} = ⟨a, b | a^m = 1, b^n = a^t, a^b = a^r⟩`.
pub fn metacyclic_gmr_built(m: usize, r: i64) -> Result<Built> {
    let c = gmr_conditions(m as u64, r)?;
    if !c.violations.is_empty() {
        return Err(Error::Precondition(c.violations.join("; ")));
    }
    let (n, s, t) = (c.n as usize, c.s as usize, c.t as usize);
    let a = cyclic_built(m)?;
    let b = cyclic_built(n * s)?.rename(&[("a", "b")]);
    let img = format!("a^{r}");
    let built = identified_semidirect_built(
        &a,
        &b,
        s,
        &Action {
            images: vec![("b", vec![("a", img.as_str())])],
        },
        &[(&format!("a^{t}"), &format!("b^{n}"))],
    )?;
    built.verify(&[&format!("a^{m}"), &format!("b^{n} = a^{t}"), &format!("b^-1 a b = a^{r}")])?;
    Ok(built)
}

pub fn metacyclic_gmr(m: usize, r: i64) -> Result<FiniteGroup> {
    Ok(metacyclic_gmr_built(m, r)?.group)
}

/// Textual group specification, e.g. `dihedral(8)` or `semidirect(5,8,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    SemidihedralPlus,
    SemidihedralMinus,
    SemidirectKernel(usize, usize, usize),
    MetacyclicGmr(usize, i64),
    Sl2(u64),
    Direct(Vec<GroupSpec>),
    Named(String),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let err = || Error::InvalidArgument(format!("cannot parse group spec `{text}`"));
        let Some(open) = text.find('(') else {
            return Ok(GroupSpec::Named(text.to_string()));
        };
        if !text.ends_with(')') {
            return Err(err());
        }
        let kind = &text[..open];
        let inner = &text[open + 1..text.len() - 1];
        let nums = || -> Result<Vec<i64>> {
            inner
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| err()))
                .collect()
        };
        let spec = match kind {
            "cyclic" | "C" => GroupSpec::Cyclic(one(&nums()?).ok_or_else(err)? as usize),
            "dihedral" | "D" => GroupSpec::Dihedral(one(&nums()?).ok_or_else(err)? as usize),
            "quaternion" | "Q" => GroupSpec::Quaternion(one(&nums()?).ok_or_else(err)? as usize),
            "semidirect" => match nums()?.as_slice() {
                [m, n, k] if *m > 0 && *n > 0 && *k > 0 => {
                    GroupSpec::SemidirectKernel(*m as usize, *n as usize, *k as usize)
                }
                _ => return Err(err()),
            },
            "gmr" => match nums()?.as_slice() {
                [m, r] if *m > 0 => GroupSpec::MetacyclicGmr(*m as usize, *r),
                _ => return Err(err()),
            },
            "sl2" => GroupSpec::Sl2(one(&nums()?).ok_or_else(err)? as u64),
            "direct" => {
                let parts = split_top_level(inner);
                GroupSpec::Direct(parts.iter().map(|p| GroupSpec::parse(p)).collect::<Result<_>>()?)
            }
            _ => return Err(err()),
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        Ok(self.build_named()?.group)
    }

    pub fn build_named(&self) -> Result<Built> {
        match self {
            GroupSpec::Cyclic(n) => cyclic_built(*n),
            GroupSpec::Dihedral(n) => dihedral_built(*n),
            GroupSpec::Quaternion(n) => quaternion_built(*n),
            GroupSpec::SemidihedralPlus => named_built("D16plus"),
            GroupSpec::SemidihedralMinus => named_built("D16minus"),
            GroupSpec::SemidirectKernel(m, n, k) => semidirect_kernel_built(*m, *n, *k),
            GroupSpec::MetacyclicGmr(m, r) => metacyclic_gmr_built(*m, *r),
            GroupSpec::Sl2(q) => Ok(Built {
                group: sl2(*q)?,
                names: BTreeMap::new(),
            }),
            GroupSpec::Direct(parts) => {
                let mut acc = cyclic_built(1)?;
                acc.names.clear();
                for (idx, p) in parts.iter().enumerate() {
                    let mut b = p.build_named()?;
                    b.names = b
                        .names
                        .into_iter()
                        .map(|(k, v)| (format!("{k}{}", idx + 1), v))
                        .collect();
                    acc = direct_product_built(&acc, &b)?;
                }
                Ok(acc)
            }
            GroupSpec::Named(label) => named_built(label),
        }
    }
}

fn one(v: &[i64]) -> Option<i64> {
    match v {
        [x] if *x > 0 => Some(*x),
        _ => None,
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}
