use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Canonical projection `G -> G/N`, with `G/N` realized as the regular
/// permutation group on the cosets.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub kernel: Subgroup,
    pub image: FiniteGroup,
    /// `element_map[g]` is the image index of `g`.
    pub element_map: Vec<usize>,
}

impl FiniteGroup {
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientMap> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} is not normal",
                n.order()
            )));
        }
        let cosets = self.right_cosets(n);
        let m = cosets.len();
        let mut coset_of = vec![0usize; self.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x] = i;
            }
        }
        let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        let mut table = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = coset_of[self.mul(reps[a], reps[b])] as u32;
            }
        }
        let gens: Vec<usize> = self
            .generators()
            .iter()
            .map(|&g| coset_of[g])
            .filter(|&c| c != 0)
            .collect();
        let (image, relabel) = FiniteGroup::from_cayley_table_labelled(m, &table, &gens)?;
        let element_map = coset_of.iter().map(|&c| relabel[c]).collect();
        Ok(QuotientMap {
            kernel: n.clone(),
            image,
            element_map,
        })
    }
}

