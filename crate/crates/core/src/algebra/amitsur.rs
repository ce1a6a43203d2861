//! Amitsur's classification of finite subgroups of division rings.

use crate::constructions::{named, presentation, quaternion};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd, mult_order, p_adic_val, prime_divisors, residue};
use crate::permgroup::{is_isomorphic, FiniteGroup, Subgroup};

/// Which case of the (Z) list a group falls under, with one line per
/// condition checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmitsurReport {
    pub holds: bool,
    pub case: Option<char>,
    pub conditions: Vec<(String, bool)>,
}

/// Evaluates (Z)(a)–(c) for `C_m ⋊_k C_n = ⟨a⟩_m ⋊ ⟨b⟩_n`, `a^b = a^r`, where
/// the action has kernel of order `k`.
pub fn amitsur_z_criteria(m: u64, n: u64, k: u64, r: i64) -> Result<AmitsurReport> {
    if m == 0 || n == 0 || k == 0 || n % k != 0 {
        return Err(Error::Precondition(format!("invalid parameters m={m}, n={n}, k={k}")));
    }
    if gcd(m, n) != 1 {
        return Err(Error::Precondition(format!("gcd(m, n) = {} ≠ 1", gcd(m, n))));
    }
    let r = residue(r, m);
    if gcd(r, m) != 1 && m > 1 {
        return Err(Error::Precondition("r is not a unit modulo m".into()));
    }
    let ord = mult_order(r as i64, m)?;
    if ord != n / k {
        return Err(Error::Precondition(format!("o_m(r) = {ord} but n/k = {}", n / k)));
    }
    let mut conditions = Vec::new();
    if ord == 1 {
        conditions.push(("(a) trivial action: cyclic".to_string(), true));
        return Ok(AmitsurReport {
            holds: true,
            case: Some('a'),
            conditions,
        });
    }
    if m % 2 == 1 && n == 4 && k == 2 && residue(r as i64 + 1, m) == 0 {
        conditions.push(("(b) C_m ⋊_2 C_4 with m odd, inversion".to_string(), true));
        return Ok(AmitsurReport {
            holds: true,
            case: Some('b'),
            conditions,
        });
    }
    let group_order = m * n;
    let mut covered: Vec<u64> = Vec::new();
    let mut holds = true;
    for (p, e) in factorize(m) {
        let pp = p.pow(e);
        // Q_q acts on P_p through b^(n/q^v), whose action is r^(n/q^v) mod p^e
        let mut x_p = Vec::new();
        for (q, v) in factorize(n) {
            let qv = q.pow(v);
            let s = residue(r as i64, pp);
            let acts = crate::numtheory::pow_mod(s, n / qv, pp) != 1 % pp;
            if acts {
                x_p.push(q);
            }
        }
        let r_p: u64 = factorize(n)
            .into_iter()
            .filter(|(q, _)| x_p.contains(q))
            .map(|(q, v)| q.pow(v))
            .product();
        covered.extend(&x_p);
        for &q in &x_p {
            let vk = p_adic_val(q, k)?;
            let modulus = group_order / (pp * r_p);
            let lhs = p_adic_val(q, mult_order(p as i64, modulus)?)?;
            let rhs = mult_order(p as i64, q.pow(vk))?;
            let c1 = (lhs as u64) < rhs;
            conditions.push((format!("(c)(i) p={p} q={q}: v_q(o(p)) = {lhs} < {rhs}"), c1));
            holds &= c1;
            if q % 2 == 1 || p % 4 == 1 {
                let l = p_adic_val(q, p - 1)?;
                let c2 = l <= vk;
                conditions.push((format!("(c)(ii) p={p} q={q}: v_q(p-1) = {l} <= v_q(k) = {vk}"), c2));
                holds &= c2;
            }
            if q == 2 && p % 4 == 3 {
                let l = p_adic_val(2, p + 1)?;
                let c3 = vk == 1 || vk > l;
                conditions.push((format!("(c)(iii) p={p}: v_2(k) = {vk} is 1 or > v_2(p+1) = {l}"), c3));
                holds &= c3;
            }
        }
    }
    let all_covered = prime_divisors(n).iter().all(|q| covered.contains(q));
    conditions.push(("(c) C_n is the product of the R_p".to_string(), all_covered));
    holds &= all_covered;
    Ok(AmitsurReport {
        holds,
        case: if holds { Some('c') } else { None },
        conditions,
    })
}

/// `(m, n, k, r, a, b)` with `G = ⟨a⟩_m ⋊ ⟨b⟩_n`, `a^b = a^r`, `gcd(m,n) = 1`
/// and `G' ≤ ⟨a⟩`, when `G'` and `G/G'` are cyclic of coprime orders.
/// Sylow subgroups of `⟨b⟩` centralizing `G'` are moved into `⟨a⟩`, so
/// every prime of `n` acts nontrivially on `⟨a⟩`.
pub fn metacyclic_shape(g: &FiniteGroup) -> Option<(u64, u64, u64, i64, usize, usize)> {
    let d = g.derived_subgroup();
    let m0 = d.order() as u64;
    let n0 = (g.order() / d.order()) as u64;
    if gcd(m0, n0) != 1 {
        return None;
    }
    let a0 = d.elements().iter().copied().find(|&x| g.element_order(x) as u64 == m0)?;
    let b0 = (0..g.order()).find(|&x| g.element_order(x) as u64 == n0 && g.join(d, &[x]).order() == g.order())?;
    let (mut a, mut moved) = (a0, 1u64);
    for (q, v) in factorize(n0) {
        let qv = q.pow(v);
        let c = g.pow(b0, (n0 / qv) as i64);
        if g.mul(c, a0) == g.mul(a0, c) {
            a = g.mul(a, c);
            moved *= qv;
        }
    }
    let (m, n) = (m0 * moved, n0 / moved);
    let b = g.pow(b0, moved as i64);
    let ab = g.conj(a, b);
    let r = (0..m).find(|&j| g.pow(a, j as i64) == ab)? as i64;
    let o = mult_order(r, m).ok()?;
    Some((m, n, n / o, r, a, b))
}

/// Whether `g` is a Z-group, i.e. satisfies (Z)(a)–(c).
pub fn is_z_group(g: &FiniteGroup) -> bool {
    match metacyclic_shape(g) {
        Some((m, n, k, r, _, _)) => amitsur_z_criteria(m, n, k, r).map(|x| x.holds).unwrap_or(false),
        None => false,
    }
}

fn binary_octahedral() -> Result<FiniteGroup> {
    let names = ["s", "t"];
    let rels = ["(s t)^2 = s^3", "s^3 = t^4", "t^8"]
        .iter()
        .map(|r| presentation::parse_relation(&names, r))
        .collect::<Result<Vec<_>>>()?;
    presentation::finitely_presented(2, &rels, 10_000)
}

/// Splits `g = S × M` with `|S| = s_order` and `gcd(|S|, |M|) = 1`.
fn coprime_factors(g: &FiniteGroup, s_order: usize) -> Option<(Subgroup, Subgroup)> {
    let n = g.order();
    if n % s_order != 0 || gcd(s_order as u64, (n / s_order) as u64) != 1 {
        return None;
    }
    let m_order = n / s_order;
    let pick = |e: usize| -> Option<Subgroup> {
        let els: Vec<usize> = (0..n).filter(|&x| g.pow(x, e as i64) == 0).collect();
        Subgroup::from_elements(g, &els).ok()
    };
    let s = pick(s_order)?;
    let m = pick(m_order)?;
    if s.order() != s_order || m.order() != m_order {
        return None;
    }
    let commute = s
        .generators()
        .iter()
        .all(|&x| m.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    commute.then_some((s, m))
}

/// (NZ)(a)–(e): the non-Z-groups embedding in division rings. Returns the
/// matching case label.
pub fn amitsur_nz_check(g: &FiniteGroup) -> Result<Option<char>> {
    let n = g.order();
    if n == 48 && is_isomorphic(g, &binary_octahedral()?)? {
        return Ok(Some('a'));
    }
    if n % 8 == 0 && is_isomorphic(g, &quaternion(n)?)? {
        return Ok(Some('b'));
    }
    let odd_part_ok = |m: &FiniteGroup| -> bool {
        let mo = m.order() as u64;
        (mo == 1 || mult_order(2, mo).map(|o| o % 2 == 1).unwrap_or(false)) && (mo == 1 || is_z_group(m))
    };
    if let Some((s, m)) = coprime_factors(g, 8) {
        let sg = g.subgroup_as_group(&s)?;
        let mg = g.subgroup_as_group(&m)?;
        if m.order() % 2 == 1 && is_isomorphic(&sg, &quaternion(8)?)? && odd_part_ok(&mg) {
            return Ok(Some('c'));
        }
    }
    if let Some((s, m)) = coprime_factors(g, 24) {
        let sg = g.subgroup_as_group(&s)?;
        let mg = g.subgroup_as_group(&m)?;
        if gcd(m.order() as u64, 6) == 1 && is_isomorphic(&sg, &named("SL23")?)? && odd_part_ok(&mg) {
            return Ok(Some('d'));
        }
    }
    if n == 120 && is_isomorphic(g, &named("SL25")?)? {
        return Ok(Some('e'));
    }
    Ok(None)
}

/// Whether `g` satisfies (Z) or (NZ), i.e. embeds in the units of a
/// division ring.
pub fn is_amitsur_group(g: &FiniteGroup) -> Result<bool> {
    Ok(is_z_group(g) || amitsur_nz_check(g)?.is_some())
}

/// Lemma: for `G = ⟨a⟩_m ⋊_k ⟨b⟩_n` with `gcd(m, n) = 1` and
/// `A = ⟨a, b^(n/k)⟩`, `Q(G, A)` is a division ring iff `G` satisfies (Z).
pub fn q_g_a_division_check(g: &FiniteGroup, a_sub: &Subgroup) -> Result<bool> {
    if g.is_abelian() {
        return Err(Error::Precondition("abelian group: lemma does not apply".into()));
    }
    let (m, n, k, r, a, b) = metacyclic_shape(g)
        .ok_or_else(|| Error::Precondition("group is not of the form C_m ⋊_k C_n".into()))?;
    let expected = g.subgroup(&[a, g.pow(b, (n / k) as i64)]);
    if expected != *a_sub {
        return Err(Error::Precondition("A is not ⟨a, b^(n/k)⟩".into()));
    }
    Ok(amitsur_z_criteria(m, n, k, r)?.holds)
}
