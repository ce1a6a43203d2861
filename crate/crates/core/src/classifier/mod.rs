//! CSP'-criticality: Propiedad, the quotient filter, the families of the
//! classification and the corpus scan.

mod families;
mod propiedad;
mod reference;
mod scan;

#[cfg(test)]
mod tests;

use std::fmt;

use crate::algebra::{
    amitsur_division, classify_component, is_amitsur_group, component_descriptor, component_invariants, component_name, ExceptionalTag,
    ExceptionalVerdict, FixedFieldDescriptor,
};
use crate::error::{Error, Result};
use crate::groupalgebra::{strong_shoda_pairs, CentralDecomposition, ShodaPair, SspEnumeration};
use crate::permgroup::{is_isomorphic, FiniteGroup, Subgroup};

pub use families::{
    family_group_1, family_group_2, family_group_3, family_predicate_1, family_predicate_2, family_predicate_3,
};
pub use propiedad::{propiedad, propiedad_with_id};
pub use reference::{csp_references, identify, propiedad_references, Reference, CSP_LABELS, PROPIEDAD_LABELS};
pub use scan::{scan_corpus, ScanResult, SCAN_ORDERS};

/// Default bound on the group order accepted by the classifier.
pub const DEFAULT_BOUND: usize = 2000;

/// One simple component with its exceptionality verdict.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub index: usize,
    pub dimension: u64,
    pub center: FixedFieldDescriptor,
    pub character_degree: u64,
    pub kernel_order: usize,
    pub name: String,
    /// Index into the report's pairs when a strong Shoda pair realizes it.
    pub pair: Option<usize>,
    pub verdict: ExceptionalVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriticalVerdict {
    Critical,
    NotCritical,
    Unknown,
}

impl fmt::Display for CriticalVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalVerdict::Critical => "Critical",
            CriticalVerdict::NotCritical => "NotCritical",
            CriticalVerdict::Unknown => "Unknown",
        })
    }
}

/// A proper quotient `G/N` with an exceptional component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOffender {
    pub normal_order: usize,
    /// The CSP'-critical reference isomorphic to `G/N`, if any.
    pub reference: Option<&'static str>,
}

#[derive(Clone, Debug)]
pub struct CriticalReport {
    pub label: String,
    pub order: usize,
    pub pairs: Vec<ShodaPair>,
    pub ssp_pairs_tested: usize,
    pub propiedad_witness: Option<ShodaPair>,
    pub ec_verdicts: Vec<ComponentReport>,
    pub quotient_offenders: Vec<QuotientOffender>,
    pub verdict: CriticalVerdict,
    pub reason: String,
}

/// Simple components of `QG` with their verdicts, plus the pair enumeration.
#[derive(Clone, Debug)]
pub struct ComponentAnalysis {
    pub enumeration: SspEnumeration,
    pub components: Vec<ComponentReport>,
    pub propiedad_witness: Option<ShodaPair>,
}

impl ComponentAnalysis {
    pub fn decomposition(&self) -> &CentralDecomposition {
        &self.enumeration.decomposition
    }
}

fn kernel(dec: &CentralDecomposition, c: usize, g: &FiniteGroup) -> Vec<usize> {
    let coords = &dec.components[c].coords;
    let at_one = &coords[dec.rational_class_of[0]];
    (0..g.order())
        .filter(|&x| coords[dec.rational_class_of[x]] == *at_one)
        .collect()
}

/// Decomposes `QG` and classifies every simple component.
pub fn analyze_components(g: &FiniteGroup, bound: usize) -> Result<ComponentAnalysis> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { bound });
    }
    let enumeration = strong_shoda_pairs(g, bound)?;
    let id = identify(g, propiedad_references())?;
    let dec = &enumeration.decomposition;
    let mut components = Vec::new();
    let mut witness = None;
    let mut amitsur_images: Vec<(Vec<usize>, bool)> = Vec::new();
    for c in 0..dec.components.len() {
        let inv = component_invariants(g, dec, c)?;
        let ker = kernel(dec, c, g);
        // a division component contains G/ker in its unit group
        let image_ok = match amitsur_images.iter().find(|(k, _)| *k == ker) {
            Some(&(_, ok)) => ok,
            None => {
                let q = g.quotient(&Subgroup::from_elements(g, &ker)?)?;
                let ok = is_amitsur_group(&q.image)?;
                amitsur_images.push((ker.clone(), ok));
                ok
            }
        };
        let pair = enumeration.component_of_pair.iter().position(|&x| x == c);
        let (desc, division, prop) = match pair {
            Some(i) => {
                let p = &enumeration.pairs[i];
                (
                    Some(component_descriptor(g, p)?),
                    amitsur_division(g, p),
                    propiedad_with_id(g, id, p)?,
                )
            }
            None => (None, None, false),
        };
        let division = division.or((!image_ok).then_some(false));
        let mut verdict = classify_component(&inv, desc.as_ref(), division);
        if prop {
            if witness.is_none() {
                witness = pair.map(|i| enumeration.pairs[i].clone());
            }
            if matches!(verdict.tag, ExceptionalTag::Unknown | ExceptionalTag::Ec1OrEc2) {
                verdict.tag = ExceptionalTag::Ec2;
            }
            verdict.reason.push_str("; Propiedad holds");
        }
        components.push(ComponentReport {
            index: c,
            dimension: inv.dimension,
            center: inv.center.clone(),
            character_degree: inv.character_degree,
            kernel_order: ker.len(),
            name: component_name(&inv, desc.as_ref(), division),
            pair,
            verdict,
        });
    }
    Ok(ComponentAnalysis {
        enumeration,
        components,
        propiedad_witness: witness,
    })
}

/// Decides whether `G` is CSP'-critical: `QG` has an exceptional component
/// and no proper quotient does. Components of `Q(G/N)` are those of `QG`
/// with `N` in their kernel, so it suffices that every exceptional
/// component is faithful.
pub fn csp_prime_critical(g: &FiniteGroup, label: &str, bound: usize) -> Result<CriticalReport> {
    let analysis = analyze_components(g, bound)?;
    let dec = analysis.decomposition();
    let comps = &analysis.components;
    let exceptional = |c: &ComponentReport| c.verdict.tag.is_exceptional();
    let mut offenders: Vec<QuotientOffender> = Vec::new();
    let mut seen_kernels: Vec<Vec<usize>> = Vec::new();
    for c in comps.iter().filter(|c| exceptional(c) == Some(true) && c.kernel_order > 1) {
        let ker = kernel(dec, c.index, g);
        if seen_kernels.contains(&ker) {
            continue;
        }
        let q = g.quotient(&Subgroup::from_elements(g, &ker)?)?;
        offenders.push(QuotientOffender {
            normal_order: ker.len(),
            reference: identify(&q.image, csp_references())?,
        });
        seen_kernels.push(ker);
    }
    let unknown_faithful: Vec<usize> =
        comps.iter().filter(|c| exceptional(c).is_none() && c.kernel_order == 1).map(|c| c.index).collect();
    let unknown_quotient: Vec<usize> =
        comps.iter().filter(|c| exceptional(c).is_none() && c.kernel_order > 1).map(|c| c.index).collect();
    let faithful_exceptional = comps.iter().any(|c| exceptional(c) == Some(true) && c.kernel_order == 1);
    let (verdict, reason) = if !offenders.is_empty() {
        (CriticalVerdict::NotCritical, "a proper quotient has an exceptional component".to_string())
    } else if faithful_exceptional && unknown_quotient.is_empty() {
        (CriticalVerdict::Critical, "exceptional components are all faithful".to_string())
    } else if faithful_exceptional {
        (
            CriticalVerdict::Unknown,
            format!("undecided components with nontrivial kernel: {unknown_quotient:?}"),
        )
    } else if unknown_faithful.is_empty() {
        (CriticalVerdict::NotCritical, "no faithful exceptional component".to_string())
    } else {
        (
            CriticalVerdict::Unknown,
            format!("undecided faithful components: {unknown_faithful:?}"),
        )
    };
    Ok(CriticalReport {
        label: label.to_string(),
        order: g.order(),
        pairs: analysis.enumeration.pairs.clone(),
        ssp_pairs_tested: analysis.enumeration.pairs.len(),
        propiedad_witness: analysis.propiedad_witness.clone(),
        ec_verdicts: analysis.components,
        quotient_offenders: offenders,
        verdict,
        reason,
    })
}

/// Nontrivial normal subgroups `N` with `G/N` isomorphic to a reference,
/// as `(|N|, label)`.
pub fn quotient_filter(g: &FiniteGroup, references: &[Reference]) -> Result<Vec<(usize, &'static str)>> {
    let mut out = Vec::new();
    for n in g.normal_subgroups() {
        if n.is_trivial() {
            continue;
        }
        let qo = g.order() / n.order();
        if !references.iter().any(|r| r.group.order() == qo) {
            continue;
        }
        let q = g.quotient(&n)?.image;
        for r in references {
            if r.group.order() == qo && is_isomorphic(&q, &r.group)? {
                out.push((n.order(), r.label));
            }
        }
    }
    Ok(out)
}
