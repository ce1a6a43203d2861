use std::fmt;

use super::amitsur::{amitsur_z_criteria, metacyclic_shape};
use super::descriptor::SimpleComponentDescriptor;
use super::field::{classify_field, FieldClass, FixedFieldDescriptor};
use super::invariants::ComponentInvariants;
use crate::groupalgebra::ShodaPair;
use crate::permgroup::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalTag {
    Ec1,
    Ec2,
    /// Exceptional, but the Schur index is not pinned down.
    Ec1OrEc2,
    NotExceptional,
    Unknown,
}

impl ExceptionalTag {
    pub fn is_exceptional(self) -> Option<bool> {
        match self {
            ExceptionalTag::Ec1 | ExceptionalTag::Ec2 | ExceptionalTag::Ec1OrEc2 => Some(true),
            ExceptionalTag::NotExceptional => Some(false),
            ExceptionalTag::Unknown => None,
        }
    }
}

impl fmt::Display for ExceptionalTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionalTag::Ec1 => "EC1",
            ExceptionalTag::Ec2 => "EC2",
            ExceptionalTag::Ec1OrEc2 => "EC1|EC2",
            ExceptionalTag::NotExceptional => "No",
            ExceptionalTag::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalVerdict {
    pub tag: ExceptionalTag,
    pub reason: String,
    pub witness: Option<String>,
}

impl ExceptionalVerdict {
    fn new(tag: ExceptionalTag, reason: impl Into<String>, witness: Option<String>) -> Self {
        ExceptionalVerdict {
            tag,
            reason: reason.into(),
            witness,
        }
    }
}

/// Tag of `M_m(D)` with `D` of Schur index `s` over `F`; `definite` says
/// whether a quaternion `D` is ramified at every infinite place.
fn tag_for(s: u64, delta: u64, field: &FixedFieldDescriptor, definite: bool) -> ExceptionalTag {
    use ExceptionalTag::*;
    let m = delta / s;
    let class = classify_field(field);
    let small = matches!(class, FieldClass::Rationals | FieldClass::ImaginaryQuadratic);
    let tdq = s == 2 && field.is_totally_real() && definite;
    match (s, m) {
        (1, 1) => NotExceptional,
        (1, 2) if small => Ec2,
        (1, _) => NotExceptional,
        (_, 1) if tdq => NotExceptional,
        (_, 1) => Ec1,
        (_, 2) if tdq && field.is_rational() => Ec2,
        _ => NotExceptional,
    }
}

fn combine(tags: &[ExceptionalTag]) -> ExceptionalTag {
    use ExceptionalTag::*;
    if tags.is_empty() {
        return Unknown;
    }
    if tags.iter().all(|&t| t == tags[0]) {
        tags[0]
    } else if tags.iter().all(|&t| t == Ec1 || t == Ec2) {
        Ec1OrEc2
    } else {
        Unknown
    }
}

fn describe(s: u64, delta: u64, field: &FixedFieldDescriptor, definite: bool) -> String {
    let m = delta / s;
    let d = match s {
        1 => field.to_string(),
        2 if field.is_totally_real() && definite => format!("TDQ({field})"),
        _ => format!("D(index {s}/{field})"),
    };
    if m == 1 {
        d
    } else {
        format!("M{m}({d})")
    }
}

/// Decides exceptionality from a descriptor alone, in the cases where the
/// split/division question is settled by the twist.
pub fn classify_exceptional(d: &SimpleComponentDescriptor) -> ExceptionalVerdict {
    use ExceptionalTag::*;
    let deg = d.galois_degree();
    let field = &d.center;
    let witness = Some(d.canonical_name());
    let k = d.reduced_conductor();
    if d.is_split() {
        let size = d.matrix_size as u64 * deg;
        let tag = tag_for(1, size, field, false);
        return ExceptionalVerdict::new(tag, format!("split: matrix ring of size {size} over {field}"), witness);
    }
    if deg == 2 && d.twist_sign() == Some(-1) {
        if field.is_totally_real() {
            let tag = tag_for(2, 2 * d.matrix_size as u64, field, true);
            return ExceptionalVerdict::new(tag, "twist -1 over a CM extension: totally definite quaternion", witness);
        }
        return ExceptionalVerdict::new(Unknown, "twist -1 over a non-totally-real center", witness);
    }
    if deg == 4 && field.is_rational() && k == 5 && d.twist_sign() == Some(-1) {
        let tag = tag_for(2, 4 * d.matrix_size as u64, field, true);
        return ExceptionalVerdict::new(
            tag,
            "(Q(zeta_5)/Q,-1) is M2 of a totally definite quaternion algebra",
            Some(describe(2, 4 * d.matrix_size as u64, field, true)),
        );
    }
    ExceptionalVerdict::new(Unknown, "division question not decidable from the descriptor", witness)
}

/// `Some(division)` when the lemma on `C_m ⋊_k C_n` applies to `Q(G/K, H/K)`
/// with `N = G`.
pub fn amitsur_division(g: &FiniteGroup, pair: &ShodaPair) -> Option<bool> {
    if pair.matrix_size() != 1 || pair.galois_degree() == 1 {
        return None;
    }
    let q = g.quotient(&pair.k).ok()?;
    let (m, n, k, r, a, b) = metacyclic_shape(&q.image)?;
    let expected = q.image.subgroup(&[a, q.image.pow(b, (n / k) as i64)]);
    let hk: Vec<usize> = pair.h.elements().iter().map(|&x| q.element_map[x]).collect();
    let hk = q.image.subgroup(&hk);
    if expected != hk {
        return None;
    }
    amitsur_z_criteria(m, n, k, r).ok().map(|rep| rep.holds)
}

/// Schur indices compatible with the invariants, the descriptor and the
/// Amitsur route, with notes on what constrained them.
pub fn schur_index_options(
    inv: &ComponentInvariants,
    desc: Option<&SimpleComponentDescriptor>,
    division: Option<bool>,
) -> (Vec<u64>, Vec<String>) {
    let delta = inv.character_degree;
    let mut options = inv.schur_index_options();
    let mut notes = vec![format!(
        "dim {}, center {} of degree {}, chi(1) = {}, indicator {}",
        inv.dimension, inv.center, inv.center_degree, delta, inv.indicator
    )];
    if let Some(d) = desc {
        let n = d.matrix_size as u64;
        options.retain(|&s| (delta / n) % s == 0);
        if d.is_split() {
            options.retain(|&s| s == 1);
            notes.push("split crossed product".into());
        } else if d.galois_degree() == 2 && d.twist_sign() == Some(-1) && d.center.is_totally_real() {
            options.retain(|&s| s == 2);
            notes.push("quaternion twist -1 over a CM field".into());
        } else if let Some(p) = d.rational_quaternion_prime() {
            options.retain(|&s| s == 2);
            notes.push(format!("rational quaternion algebra ramified at {p} stays division over the center"));
        }
    }
    match division {
        Some(true) => {
            options.retain(|&s| s == delta);
            notes.push("division ring by Amitsur's criteria".into());
        }
        Some(false) => {
            options.retain(|&s| s != delta);
            notes.push("not a division ring by Amitsur's criteria".into());
        }
        None => {}
    }
    (options, notes)
}

/// Short name of a component: the descriptor's canonical name, or one
/// assembled from the invariants when the Schur index is determined.
pub fn component_name(
    inv: &ComponentInvariants,
    desc: Option<&SimpleComponentDescriptor>,
    division: Option<bool>,
) -> String {
    if let Some(d) = desc {
        return d.canonical_name();
    }
    let (options, _) = schur_index_options(inv, desc, division);
    match options.as_slice() {
        [s] => describe(*s, inv.character_degree, &inv.center, inv.indicator == -1),
        _ => format!("A(dim {}, center {})", inv.dimension, inv.center),
    }
}

/// Decides exceptionality of a component from its invariants, refined by
/// a descriptor and the Amitsur route when available.
pub fn classify_component(
    inv: &ComponentInvariants,
    desc: Option<&SimpleComponentDescriptor>,
    division: Option<bool>,
) -> ExceptionalVerdict {
    use ExceptionalTag::*;
    let delta = inv.character_degree;
    let field = &inv.center;
    let definite = inv.indicator == -1;
    let (options, mut notes) = schur_index_options(inv, desc, division);
    if options.is_empty() {
        return ExceptionalVerdict::new(Unknown, format!("inconsistent Schur index data; {}", notes.join("; ")), None);
    }
    let tags: Vec<ExceptionalTag> = options.iter().map(|&s| tag_for(s, delta, field, definite)).collect();
    let tag = combine(&tags);
    let witness = match (desc, options.len()) {
        (_, 1) if tag != NotExceptional => Some(describe(options[0], delta, field, definite)),
        (Some(d), _) if tag != NotExceptional => Some(d.canonical_name()),
        _ => None,
    };
    let s_text = options.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    notes.push(format!("Schur index in {{{s_text}}}"));
    ExceptionalVerdict::new(tag, notes.join("; "), witness)
}
