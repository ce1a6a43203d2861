use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::permgroup::FiniteGroup;

/// An element of `QG` with exact rational coefficients, keyed by element
/// index. Zero coefficients are never stored.
#[derive(Clone)]
pub struct GroupAlgebraElement<'g> {
    group: &'g FiniteGroup,
    coeffs: BTreeMap<usize, BigRational>,
}

impl<'g> GroupAlgebraElement<'g> {
    pub fn zero(group: &'g FiniteGroup) -> Self {
        GroupAlgebraElement {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &'g FiniteGroup) -> Self {
        Self::basis(group, 0)
    }

    pub fn basis(group: &'g FiniteGroup, g: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(g, BigRational::one());
        GroupAlgebraElement { group, coeffs }
    }

    /// Builds an element from `(index, coefficient)` pairs, summing repeats.
    pub fn from_terms(group: &'g FiniteGroup, terms: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let mut coeffs: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (g, c) in terms {
            assert!(g < group.order(), "element index out of range");
            *coeffs.entry(g).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        GroupAlgebraElement { group, coeffs }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn coeff(&self, g: usize) -> BigRational {
        self.coeffs.get(&g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&g, c) in &other.coeffs {
            *coeffs.entry(g).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        GroupAlgebraElement {
            group: self.group,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.group);
        }
        GroupAlgebraElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|(&g, c)| (g, c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(p) = self.mul_small(other) {
            return p;
        }
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                *acc.entry(self.group.mul(a, b)).or_insert_with(BigRational::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        GroupAlgebraElement {
            group: self.group,
            coeffs: acc,
        }
    }

    // Common-denominator product in machine integers; None on overflow.
    fn mul_small(&self, other: &Self) -> Option<Self> {
        let (da, na) = integerize(&self.coeffs)?;
        let (db, nb) = integerize(&other.coeffs)?;
        let mut acc = vec![0i128; self.group.order()];
        let mut touched = Vec::new();
        for &(a, x) in &na {
            for &(b, y) in &nb {
                let g = self.group.mul(a, b);
                if acc[g] == 0 {
                    touched.push(g);
                }
                acc[g] = acc[g].checked_add((x as i128).checked_mul(y as i128)?)?;
            }
        }
        let den = BigInt::from(da) * BigInt::from(db);
        let mut coeffs = BTreeMap::new();
        for g in touched {
            if acc[g] != 0 {
                coeffs.insert(g, BigRational::new(BigInt::from(acc[g]), den.clone()));
            }
        }
        Some(GroupAlgebraElement {
            group: self.group,
            coeffs,
        })
    }

    /// `t^-1 · x · t`.
    pub fn conjugate(&self, t: usize) -> Self {
        GroupAlgebraElement {
            group: self.group,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&g, c)| (self.group.conj(g, t), c.clone()))
                .collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Commutes with every generator of the group.
    pub fn is_central(&self) -> bool {
        self.group
            .generators()
            .iter()
            .all(|&s| self.conjugate(s) == *self)
    }
}

impl PartialEq for GroupAlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupAlgebraElement<'_> {}

fn integerize(coeffs: &BTreeMap<usize, BigRational>) -> Option<(i64, Vec<(usize, i64)>)> {
    let mut den = BigInt::one();
    for c in coeffs.values() {
        den = den.lcm(c.denom());
    }
    let d = den.to_i64()?;
    let mut out = Vec::with_capacity(coeffs.len());
    for (&g, c) in coeffs {
        let n = (c.numer() * (&den / c.denom())).to_i64()?;
        out.push((g, n));
    }
    Some((d, out))
}

impl fmt::Debug for GroupAlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupAlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(g, c)| format!("({c})*g{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
