use rayon::prelude::*;

use super::propiedad::propiedad_with_id;
use super::quotient_filter;
use super::reference::{csp_references, identify, propiedad_references};
use crate::error::Result;
use crate::groupalgebra::strong_shoda_pairs;
use crate::permgroup::FiniteGroup;

/// Orders covered by the search for metabelian CSP'-critical groups.
pub const SCAN_ORDERS: &[usize] = &[6, 8, 12, 16, 18, 24, 32, 36, 40, 48, 64, 72, 144];

/// Lists `L` (groups with a pair satisfying Propiedad) and `R` (members of
/// `L` with no quotient among the CSP'-critical references), as indices
/// into the input sorted by `(order, position)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub warnings: Vec<String>,
}

struct Row {
    in_l: bool,
    in_r: bool,
    warning: Option<String>,
}

fn scan_one(label: &str, g: &FiniteGroup, bound: usize) -> Result<Row> {
    let warning = (!SCAN_ORDERS.contains(&g.order()))
        .then(|| format!("{label}: order {} outside the scanned orders", g.order()));
    if g.is_abelian() {
        return Ok(Row {
            in_l: false,
            in_r: false,
            warning,
        });
    }
    let id = identify(g, propiedad_references())?;
    let en = strong_shoda_pairs(g, bound)?;
    let mut in_l = false;
    for pair in &en.pairs {
        if propiedad_with_id(g, id, pair)? {
            in_l = true;
            break;
        }
    }
    let in_r = in_l && quotient_filter(g, csp_references())?.is_empty();
    Ok(Row { in_l, in_r, warning })
}

/// Runs the scan in parallel; the result does not depend on scheduling.
pub fn scan_corpus(groups: &[(String, FiniteGroup)], bound: usize) -> Result<ScanResult> {
    let rows: Vec<Result<Row>> = groups.par_iter().map(|(label, g)| scan_one(label, g, bound)).collect();
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by_key(|&i| (groups[i].1.order(), i));
    let mut out = ScanResult::default();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    for &i in &order {
        let row = &rows[i];
        if let Some(w) = &row.warning {
            out.warnings.push(w.clone());
        }
        if row.in_l {
            out.l.push(i);
        }
        if row.in_r {
            out.r.push(i);
        }
    }
    Ok(out)
}
