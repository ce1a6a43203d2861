//! Group files and report rendering.
//!
//! A group file lists permutation groups in image notation:
//!
//! ```text
//! group C3 degree 3
//! gen 2 3 1
//! end
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::algebra::{component_descriptor, component_invariants, component_name};
use crate::classifier::{CriticalReport, ScanResult};
use crate::error::{Error, Result};
use crate::groupalgebra::{is_strong_shoda_pair, strong_shoda_pairs};
use crate::permgroup::{FiniteGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEntry {
    pub label: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupEntry {
    pub fn build(&self, bound: usize) -> Result<FiniteGroup> {
        FiniteGroup::from_generators(self.degree, &self.generators, bound)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupFile {
    pub entries: Vec<GroupEntry>,
}

impl GroupFile {
    pub fn get(&self, label: &str) -> Option<&GroupEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Tsv,
}

/// Strict parser; blank lines and `#` comments are skipped.
pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut out = GroupFile::default();
    let mut labels = BTreeSet::new();
    let mut current: Option<(usize, GroupEntry)> = None;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match (words[0], current.as_mut()) {
            ("group", None) => {
                let [_, label, kw, d] = words[..] else {
                    return Err(err(n, "expected `group LABEL degree INT`".into()));
                };
                if kw != "degree" {
                    return Err(err(n, "expected `group LABEL degree INT`".into()));
                }
                let degree: usize = d.parse().map_err(|_| err(n, format!("bad degree `{d}`")))?;
                if degree == 0 {
                    return Err(err(n, "degree must be positive".into()));
                }
                if !labels.insert(label.to_string()) {
                    return Err(err(n, format!("duplicate label `{label}`")));
                }
                current = Some((
                    n,
                    GroupEntry {
                        label: label.to_string(),
                        degree,
                        generators: Vec::new(),
                    },
                ));
            }
            ("group", Some(_)) => return Err(err(n, "`group` before `end`".into())),
            ("gen", Some((_, e))) => {
                let images = words[1..]
                    .iter()
                    .map(|w| w.parse::<usize>().map_err(|_| err(n, format!("bad point `{w}`"))))
                    .collect::<Result<Vec<_>>>()?;
                if images.len() != e.degree {
                    return Err(err(n, format!("expected {} points, found {}", e.degree, images.len())));
                }
                let p = Permutation::from_one_based(&images).map_err(|_| err(n, "not a bijection".into()))?;
                e.generators.push(p);
            }
            ("end", Some(_)) => {
                let (start, e) = current.take().unwrap_or_else(|| unreachable!());
                if e.generators.is_empty() {
                    return Err(err(start, format!("group `{}` has no generators", e.label)));
                }
                if words.len() != 1 {
                    return Err(err(n, "trailing tokens after `end`".into()));
                }
                out.entries.push(e);
            }
            ("gen" | "end", None) => return Err(err(n, format!("`{}` outside a group entry", words[0]))),
            (w, _) => return Err(err(n, format!("unexpected token `{w}`"))),
        }
    }
    if let Some((start, e)) = current {
        return Err(err(start, format!("group `{}` is missing `end`", e.label)));
    }
    if out.entries.is_empty() {
        return Err(err(0, "no group entries".into()));
    }
    Ok(out)
}

pub fn render_group_file(file: &GroupFile) -> String {
    let mut s = String::new();
    for e in &file.entries {
        let _ = writeln!(s, "group {} degree {}", e.label, e.degree);
        for p in &e.generators {
            let pts: Vec<String> = p.images().iter().map(|x| (x + 1).to_string()).collect();
            let _ = writeln!(s, "gen {}", pts.join(" "));
        }
        s.push_str("end\n");
    }
    s
}

/// Writes a group's generators as a file entry.
pub fn group_entry(label: &str, g: &FiniteGroup) -> GroupEntry {
    let mut generators = g.generator_perms();
    if generators.is_empty() {
        generators.push(Permutation::identity(g.degree().max(1)));
    }
    GroupEntry {
        label: label.to_string(),
        degree: g.degree().max(1),
        generators,
    }
}

/// One line of a decomposition: `multiplicity x name`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionLine {
    pub multiplicity: usize,
    pub total_dimension: u64,
    pub matrix_size: u64,
    pub conductor: u64,
    pub name: String,
    /// The crossed-product descriptor, when a strong Shoda pair realizes it.
    pub descriptor: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub label: String,
    pub order: usize,
    pub lines: Vec<DecompositionLine>,
    /// Components without a strong Shoda pair.
    pub unrealized: usize,
}

impl DecompositionReport {
    /// Summands with multiplicity, e.g. `["Q", "Q", "M2(Q)"]`.
    pub fn summands(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .lines
            .iter()
            .flat_map(|l| std::iter::repeat(l.name.clone()).take(l.multiplicity))
            .collect();
        v.sort();
        v
    }

    pub fn total_dimension(&self) -> u64 {
        self.lines.iter().map(|l| l.multiplicity as u64 * l.total_dimension).sum()
    }
}

/// Wedderburn decomposition of `QG`, one pair per component where possible.
pub fn decomposition_report(g: &FiniteGroup, label: &str, bound: usize) -> Result<DecompositionReport> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { bound });
    }
    let en = strong_shoda_pairs(g, bound)?;
    let mut raw: Vec<DecompositionLine> = Vec::new();
    for (p, _) in en.pairs.iter().zip(&en.component_of_pair) {
        let d = component_descriptor(g, p)?;
        let commutative = d.matrix_size == 1 && d.galois_degree() == 1;
        raw.push(DecompositionLine {
            multiplicity: 1,
            total_dimension: d.total_dimension as u64,
            matrix_size: d.matrix_size as u64,
            conductor: d.conductor,
            name: d.canonical_name(),
            descriptor: (!commutative).then(|| d.to_string()),
        });
    }
    for &c in &en.residual {
        let inv = component_invariants(g, &en.decomposition, c)?;
        raw.push(DecompositionLine {
            multiplicity: 1,
            total_dimension: inv.dimension,
            matrix_size: 0,
            conductor: 0,
            name: component_name(&inv, None, None),
            descriptor: None,
        });
    }
    let key = |l: &DecompositionLine| {
        (l.total_dimension, l.matrix_size, l.conductor, l.name.clone(), l.descriptor.clone())
    };
    raw.sort_by_key(key);
    let mut lines: Vec<DecompositionLine> = Vec::new();
    for l in raw {
        match lines.iter_mut().find(|x| x.name == l.name && x.descriptor == l.descriptor) {
            Some(x) => x.multiplicity += 1,
            None => lines.push(l),
        }
    }
    Ok(DecompositionReport {
        label: label.to_string(),
        order: g.order(),
        lines,
        unrealized: en.residual.len(),
    })
}

pub fn render_decomposition(r: &DecompositionReport, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(s, "group {} order {}", r.label, r.order);
            for l in &r.lines {
                let _ = match &l.descriptor {
                    Some(d) => writeln!(s, "{} x {}  [{}]", l.multiplicity, l.name, d),
                    None => writeln!(s, "{} x {}", l.multiplicity, l.name),
                };
            }
            if r.unrealized > 0 {
                let _ = writeln!(s, "unrealized components: {}", r.unrealized);
            }
        }
        Format::Tsv => {
            for l in &r.lines {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.label,
                    r.order,
                    l.multiplicity,
                    l.total_dimension,
                    l.matrix_size,
                    l.conductor,
                    l.name,
                    l.descriptor.as_deref().unwrap_or("-")
                );
            }
        }
    }
    s
}

pub fn render_report(r: &CriticalReport, format: Format) -> String {
    let mut s = String::new();
    let (wh, wk) = match &r.propiedad_witness {
        Some(p) => (p.h.order().to_string(), p.k.order().to_string()),
        None => ("-".to_string(), "-".to_string()),
    };
    match format {
        Format::Text => {
            let _ = writeln!(s, "group {} order {}", r.label, r.order);
            let _ = writeln!(s, "verdict {} ({})", r.verdict, r.reason);
            let _ = writeln!(s, "strong Shoda pairs: {}", r.ssp_pairs_tested);
            if r.propiedad_witness.is_some() {
                let _ = writeln!(s, "Propiedad witness |H|={wh} |K|={wk}");
            }
            for c in &r.ec_verdicts {
                let _ = writeln!(
                    s,
                    "component {} dim {} center {} kernel {} {} : {} ({})",
                    c.index, c.dimension, c.center, c.kernel_order, c.name, c.verdict.tag, c.verdict.reason
                );
            }
            for q in &r.quotient_offenders {
                let _ = writeln!(
                    s,
                    "quotient by normal subgroup of order {}: {}",
                    q.normal_order,
                    q.reference.unwrap_or("exceptional")
                );
            }
        }
        Format::Tsv => {
            for c in &r.ec_verdicts {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{} {}",
                    r.label, r.order, r.verdict, wh, wk, c.name, c.verdict.tag
                );
            }
        }
    }
    s
}

/// Pair listing with the outcome of re-checking each pair.
pub fn render_ssp(g: &FiniteGroup, label: &str, bound: usize, format: Format) -> Result<String> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { bound });
    }
    let en = strong_shoda_pairs(g, bound)?;
    let mut s = String::new();
    if format == Format::Text {
        let _ = writeln!(s, "group {} order {}", label, g.order());
    }
    for (i, (p, &c)) in en.pairs.iter().zip(&en.component_of_pair).enumerate() {
        let diag = is_strong_shoda_pair(g, &p.h, &p.k)?;
        let status = match diag.failed {
            None => "pass".to_string(),
            Some(f) => format!("fail: {f}"),
        };
        let _ = match format {
            Format::Text => writeln!(
                s,
                "pair {i} |H|={} |K|={} [H:K]={} [N:H]={} [G:N]={} component {c} {status}",
                p.h.order(),
                p.k.order(),
                p.conductor(),
                p.galois_degree(),
                p.matrix_size()
            ),
            Format::Tsv => writeln!(
                s,
                "{label}\t{}\t{i}\t{}\t{}\t{}\t{}\t{}\t{c}\t{status}",
                g.order(),
                p.h.order(),
                p.k.order(),
                p.conductor(),
                p.galois_degree(),
                p.matrix_size()
            ),
        };
    }
    if format == Format::Text && !en.residual.is_empty() {
        let _ = writeln!(s, "components without a strong Shoda pair: {:?}", en.residual);
    }
    Ok(s)
}

/// `L=.. R=..` followed by the members of each list.
pub fn render_scan(result: &ScanResult, labels: &[String], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(s, "L={} R={}", result.l.len(), result.r.len());
            let names = |v: &[usize]| v.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(" ");
            let _ = writeln!(s, "L: {}", names(&result.l));
            let _ = writeln!(s, "R: {}", names(&result.r));
            for w in &result.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
        }
        Format::Tsv => {
            for &i in &result.l {
                let _ = writeln!(s, "{}\tL", labels[i]);
            }
            for &i in &result.r {
                let _ = writeln!(s, "{}\tR", labels[i]);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::csp_prime_critical;
    use crate::constructions::{cyclic, named};

    #[test]
    fn parse_examples() {
        let f = parse_group_file("group C3 degree 3\ngen 2 3 1\nend").unwrap();
        assert_eq!(f.entries.len(), 1);
        assert_eq!(f.entries[0].build(100).unwrap().order(), 3);

        let two = "group A degree 2\ngen 2 1\nend\n\n# second\ngroup B degree 4\ngen 2 3 4 1\ngen 4 3 2 1\nend\n";
        let f = parse_group_file(two).unwrap();
        let labels: Vec<&str> = f.entries.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, ["A", "B"]);
        assert_eq!(f.get("B").unwrap().build(100).unwrap().order(), 8);
    }

    #[test]
    fn parse_errors() {
        let line = |t: &str| match parse_group_file(t) {
            Err(Error::Parse { line, msg }) => (line, msg),
            other => panic!("{other:?}"),
        };
        let (l, m) = line("group X degree 3\ngen 2 2 1\nend");
        assert_eq!(l, 2);
        assert!(m.contains("bijection"));
        assert_eq!(line("group X 3\ngen 1 2 3\nend").0, 1);
        assert_eq!(line("group X degree 2\ngen 2 1\nend\ngroup X degree 2\ngen 1 2\nend").0, 4);
        assert_eq!(line("group X degree 2\ngen 2 1 3\nend").0, 2);
        assert_eq!(line("gen 2 1\n").0, 1);
        assert_eq!(line("group X degree 2\ngen 2 1\n").0, 1);
        assert_eq!(line("group X degree 2\nend").0, 1);
        assert_eq!(line("group X degree two\ngen 2 1\nend").0, 1);
    }

    #[test]
    fn round_trip() {
        let f = parse_group_file("group A degree 3\ngen 2 3 1\ngen 2 1 3\nend\ngroup B degree 1\ngen 1\nend\n").unwrap();
        let text = render_group_file(&f);
        assert_eq!(parse_group_file(&text).unwrap(), f);
        assert_eq!(render_group_file(&parse_group_file(&text).unwrap()), text);

        let g = named("Q8").unwrap();
        let e = group_entry("Q8", &g);
        let back = parse_group_file(&render_group_file(&GroupFile { entries: vec![e] })).unwrap();
        assert_eq!(back.entries[0].build(100).unwrap().order(), 8);
    }

    #[test]
    fn decomposition_rendering() {
        let g = named("D8").unwrap();
        let text = render_decomposition(&decomposition_report(&g, "D8", 100).unwrap(), Format::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "4 x Q");
        assert_eq!(lines[2], "1 x M2(Q)  [M1( cyclic(Q(zeta_4)/Q, a=1) )]");
        assert_eq!(lines.len(), 3);

        let t = cyclic(1).unwrap();
        let text = render_decomposition(&decomposition_report(&t, "1", 100).unwrap(), Format::Text);
        assert_eq!(text.lines().nth(1), Some("1 x Q"));

        let g = named("C5semiC8").unwrap();
        let r = decomposition_report(&g, "C5semiC8", 100).unwrap();
        let names: Vec<(usize, &str)> = r.lines.iter().map(|l| (l.multiplicity, l.name.as_str())).collect();
        assert_eq!(
            names,
            [(2, "Q"), (1, "Q(zeta_4)"), (1, "Q(zeta_8)"), (1, "M4(Q)"), (1, "(Q(zeta_5)/Q,-1)")]
        );
        assert_eq!(r.total_dimension(), 40);
        let tsv = render_decomposition(&r, Format::Tsv);
        assert_eq!(tsv.lines().count(), 5);
        assert!(tsv.lines().all(|l| l.split('\t').count() == 8));
    }

    #[test]
    fn report_rendering() {
        let g = named("D8").unwrap();
        let r = csp_prime_critical(&g, "D8", 100).unwrap();
        let text = render_report(&r, Format::Text);
        assert!(text.starts_with("group D8 order 8\nverdict Critical"));
        assert_eq!(text, render_report(&r, Format::Text));
        let tsv = render_report(&r, Format::Tsv);
        for l in tsv.lines() {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 6);
            assert_eq!(&f[..3], ["D8", "8", "Critical"]);
        }
        assert!(tsv.contains("M2(Q) EC2"));
    }

    #[test]
    fn ssp_listing() {
        let g = named("D6").unwrap();
        let s = render_ssp(&g, "D6", 100, Format::Text).unwrap();
        assert_eq!(s.lines().filter(|l| l.ends_with("pass")).count(), 3);
    }
}
