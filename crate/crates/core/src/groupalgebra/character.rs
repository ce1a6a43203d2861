use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::{coset_order, ShodaPair};
use crate::error::{Error, Result};
use crate::permgroup::FiniteGroup;

/// `λ_{H,K}^G`: the character induced from the linear character of `H` with
/// kernel `K` sending the pair's generator to `ζ_{[H:K]}`.
#[derive(Clone, Debug)]
pub struct InducedCharacter {
    pub field: CyclotomicField,
    /// Value on each conjugacy class, indexed like `conjugacy_classes()`.
    pub values: Vec<Cyclotomic>,
}

impl InducedCharacter {
    pub fn degree(&self) -> BigRational {
        self.values[0].as_rational().expect("degree is rational")
    }

    pub fn value(&self, g: &FiniteGroup, x: usize) -> &Cyclotomic {
        &self.values[g.class_of(x)]
    }

    /// `⟨χ, χ⟩`.
    pub fn norm(&self, g: &FiniteGroup) -> BigRational {
        let f = &self.field;
        let mut acc = f.zero();
        for (c, cls) in g.conjugacy_classes().iter().enumerate() {
            let v = &self.values[c];
            let t = f.mul(v, &f.conj(v));
            acc = f.add(&acc, &f.scale(&t, &BigRational::from_integer(BigInt::from(cls.len()))));
        }
        acc.as_rational().expect("norm is rational") / BigRational::from_integer(BigInt::from(g.order()))
    }

    /// The kernel `{x : χ(x) = χ(1)}`.
    pub fn kernel(&self, g: &FiniteGroup) -> Vec<usize> {
        (0..g.order())
            .filter(|&x| self.values[g.class_of(x)] == self.values[0])
            .collect()
    }
}

pub fn induced_character(g: &FiniteGroup, pair: &ShodaPair) -> Result<InducedCharacter> {
    let k = pair.conductor() as i64;
    let field = CyclotomicField::new(g.exponent());
    let step = g.exponent() as i64 / k;
    // λ(x) for x ∈ H: x K = (gen K)^j
    let mut lambda_exp = vec![None; g.order()];
    let mut y = pair.k.elements().to_vec();
    for j in 0..k {
        for &x in &y {
            lambda_exp[x] = Some(j);
        }
        y = y.iter().map(|&x| g.mul(x, pair.generator)).collect();
    }
    if pair.h.elements().iter().any(|&x| lambda_exp[x].is_none()) {
        return Err(Error::InvalidArgument("generator does not generate H/K".into()));
    }
    debug_assert_eq!(coset_order(g, pair.generator, &pair.k), k as usize);
    let transversal = g.right_transversal(&pair.h);
    let mut values = Vec::with_capacity(g.conjugacy_classes().len());
    for cls in g.conjugacy_classes() {
        let x = cls[0];
        let mut v = field.zero();
        for &t in &transversal {
            // t x t^-1
            let y = g.conj(x, g.inv(t));
            if let Some(j) = lambda_exp[y] {
                v = field.add(&v, &field.zeta_pow(j * step));
            }
        }
        values.push(v);
    }
    Ok(InducedCharacter { field, values })
}

/// `(1/|G|) Σ χ(g^2)`, which must be an integer in `{-1, 0, 1}`.
pub fn frobenius_schur(g: &FiniteGroup, chi: &InducedCharacter) -> Result<i32> {
    let f = &chi.field;
    let mut acc = f.zero();
    for cls in g.conjugacy_classes() {
        let sq = g.mul(cls[0], cls[0]);
        let v = chi.value(g, sq);
        acc = f.add(&acc, &f.scale(v, &BigRational::from_integer(BigInt::from(cls.len()))));
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| Error::InvalidArgument("indicator is not rational".into()))?;
    let nu = total / BigRational::from_integer(BigInt::from(g.order()));
    if !nu.is_integer() {
        return Err(Error::InvalidArgument(format!("indicator {nu} is not integral")));
    }
    nu.to_integer()
        .to_i32()
        .filter(|v| (-1..=1).contains(v))
        .ok_or_else(|| Error::InvalidArgument(format!("indicator {nu} out of range")))
}
