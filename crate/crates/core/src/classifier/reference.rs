use std::sync::OnceLock;

use crate::constructions::named;
use crate::error::Result;
use crate::permgroup::{is_isomorphic, FiniteGroup};

/// Groups named by the small-group identifiers tested in Propiedad.
pub const PROPIEDAD_LABELS: &[&str] = &[
    "D6", "D8", "D12", "D16plus", "C3semi4C8", "C4xD6", "D16minus", "C3xD8", "C3xQ8", "C5semiC8", "Q16semiC2", "Q8",
    "Q12",
];

/// The CSP'-critical groups found by the corpus scan: items (1)–(8) of the
/// metabelian part of the classification.
pub const CSP_LABELS: &[&str] = &["D6", "D8", "D16plus", "Q8semiC2", "Q8xC3", "Q8YD8", "C5semiC8", "C3sqsemiC8"];

/// A labelled reference group.
#[derive(Clone, Debug)]
pub struct Reference {
    pub label: &'static str,
    pub group: FiniteGroup,
}

fn build(labels: &[&'static str]) -> Vec<Reference> {
    labels
        .iter()
        .map(|&label| Reference {
            label,
            group: named(label).expect("catalog group builds"),
        })
        .collect()
}

pub fn propiedad_references() -> &'static [Reference] {
    static R: OnceLock<Vec<Reference>> = OnceLock::new();
    R.get_or_init(|| build(PROPIEDAD_LABELS))
}

pub fn csp_references() -> &'static [Reference] {
    static R: OnceLock<Vec<Reference>> = OnceLock::new();
    R.get_or_init(|| build(CSP_LABELS))
}

/// The first reference isomorphic to `g`.
pub fn identify(g: &FiniteGroup, references: &[Reference]) -> Result<Option<&'static str>> {
    for r in references {
        if r.group.order() == g.order() && is_isomorphic(g, &r.group)? {
            return Ok(Some(r.label));
        }
    }
    Ok(None)
}
