use super::reference::{identify, propiedad_references};
use crate::error::{Error, Result};
use crate::groupalgebra::{is_strong_shoda_pair, ShodaPair};
use crate::permgroup::{FiniteGroup, Subgroup};

/// Propiedad for a strong Shoda pair `(H, K)` of `G`: true when one of the
/// conditions singling out the (EC2) components `M2(Q)`, `M2(Q(ζ4))`,
/// `M2(Q(ζ3))`, `M2(H(Q))`, `M2((-1,-3/Q))`, `M2(Q(√-2))` or
/// `(Q(ζ5)/Q,-1)` holds.
pub fn propiedad(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<bool> {
    let diag = is_strong_shoda_pair(g, h, k)?;
    let pair = diag
        .pair
        .filter(|_| diag.failed.is_none())
        .ok_or_else(|| Error::InvalidArgument("not a strong Shoda pair".into()))?;
    let id = identify(g, propiedad_references())?;
    propiedad_with_id(g, id, &pair)
}

/// [`propiedad`] with the catalog identification of `G` precomputed.
pub fn propiedad_with_id(g: &FiniteGroup, id: Option<&str>, pair: &ShodaPair) -> Result<bool> {
    let (h, k, n) = (&pair.h, &pair.k, &pair.n);
    if h.order() == g.order() {
        return Ok(false);
    }
    let id_in = |labels: &[&str]| id.is_some_and(|x| labels.contains(&x));
    let (sg, sh, sk, sn) = (g.order(), h.order(), k.order(), n.order());
    if sk == 1 && id_in(&["D6", "D8", "D12"]) {
        return Ok(true);
    }
    if sk == 2 && id_in(&["D8"]) {
        return Ok(true);
    }
    if sk == 1 && id_in(&["D16plus", "C3semi4C8", "C4xD6"]) {
        return Ok(true);
    }
    if sh == 4 * sk && sg == 2 * sn && n == h && (sk == 2 || sk == 4) {
        return Ok(true);
    }
    if sk == 1 && id_in(&["D16minus"]) {
        return Ok(true);
    }
    if sk == 1 && id_in(&["C3xD8", "C3xQ8"]) {
        return Ok(true);
    }
    if (sh == 3 * sk || sh == 6 * sk) && sg == 2 * sh && n == h && sk != 1 && sh % (sk * sk) == 0 {
        return Ok(true);
    }
    if sk == 1 && id_in(&["C5semiC8"]) {
        return Ok(true);
    }
    if sk == 1 && id_in(&["Q16semiC2"]) {
        return Ok(true);
    }
    let quotient_id = || -> Result<Option<&'static str>> {
        let sub = g.subgroup_as_group(n)?;
        let kk: Vec<usize> = k.elements().iter().map(|&x| sub.index_of(g.element(x)).expect("K ≤ N")).collect();
        let kk = Subgroup::from_elements(&sub, &kk)?;
        identify(&sub.quotient(&kk)?.image, propiedad_references())
    };
    if sh == 4 * sk && sg == 2 * sn && (sk == 2 || sk == 4) && quotient_id()? == Some("Q8") {
        return Ok(true);
    }
    if (6 * sk) % sh == 0 && sg == 2 * sn && sk != 1 && sh % (sk * sk) == 0 && quotient_id()? == Some("Q12") {
        return Ok(true);
    }
    Ok(false)
}
