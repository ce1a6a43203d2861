use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::field::FixedFieldDescriptor;
use crate::error::{Error, Result};
use crate::groupalgebra::CentralDecomposition;
use crate::numtheory::{divisors, euler_phi, gcd, units_mod};
use crate::permgroup::FiniteGroup;

/// Numerical invariants of a simple component `A = QGe ≅ M_m(D)`, read off
/// the central idempotent `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInvariants {
    /// `dim_Q A`.
    pub dimension: u64,
    /// `Z(A)` as a subfield of `Q(ζ_E)`, `E` the exponent of `G`.
    pub center: FixedFieldDescriptor,
    /// `[Z(A):Q]`.
    pub center_degree: u64,
    /// `δ = m·s`, the degree of an absolutely irreducible constituent.
    pub character_degree: u64,
    /// Frobenius–Schur indicator of that constituent.
    pub indicator: i32,
    /// A multiple of the Schur index: the gcd of the ranks of the
    /// idempotents `e·ε(H, K)` over cyclic `H`.
    pub schur_bound: u64,
}

impl ComponentInvariants {
    /// Schur indices compatible with the invariants: Brauer–Speiser for real
    /// centers, Benard–Schacher otherwise.
    pub fn schur_index_options(&self) -> Vec<u64> {
        let delta = gcd(self.character_degree, self.schur_bound);
        if self.center.is_totally_real() {
            if self.indicator == -1 {
                vec![2]
            } else {
                divisors(delta).into_iter().filter(|&s| s <= 2).collect()
            }
        } else {
            divisors(gcd(delta, self.center.roots_of_unity()))
        }
    }
}

/// Invariants of component `i` of `dec`.
pub fn component_invariants(g: &FiniteGroup, dec: &CentralDecomposition, i: usize) -> Result<ComponentInvariants> {
    let comp = dec
        .components
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("no component {i}")))?;
    let coef = |x: usize| &comp.coords[dec.rational_class_of[x]];
    let order = g.order();
    let classes = g.conjugacy_classes();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    // m[a][c] = (C_a e)(z_c)
    let table: Vec<Vec<BigRational>> = classes
        .iter()
        .map(|ca| {
            reps.iter()
                .map(|&z| {
                    ca.iter()
                        .fold(BigRational::zero(), |acc, &x| acc + coef(g.mul(g.inv(x), z)))
                })
                .collect()
        })
        .collect();
    let exponent = g.exponent();
    let mut fixing = Vec::new();
    for r in units_mod(exponent) {
        let fixes = (0..classes.len()).all(|a| table[g.class_of(g.pow(reps[a], r as i64))] == table[a]);
        if fixes {
            fixing.push(r);
        }
    }
    let center = FixedFieldDescriptor::new(exponent, &fixing);
    let center_degree = euler_phi(exponent)? / fixing.len() as u64;
    let dimension = comp.dimension as u64;
    if dimension % center_degree != 0 {
        return Err(Error::InvalidArgument("inconsistent component".into()));
    }
    let delta2 = dimension / center_degree;
    let delta = (delta2 as f64).sqrt().round() as u64;
    if delta * delta != delta2 {
        return Err(Error::InvalidArgument("component dimension is not f·δ²".into()));
    }
    let s = (0..order).fold(BigRational::zero(), |acc, x| acc + coef(g.inv(g.mul(x, x))));
    let nu = s / BigRational::from_integer((delta * center_degree).into());
    let indicator = nu
        .to_integer()
        .to_i32()
        .filter(|_| nu.is_integer())
        .ok_or_else(|| Error::InvalidArgument("non-integral indicator".into()))?;
    let schur_bound = schur_bound(g, &|x| coef(x).clone(), delta * center_degree)?;
    Ok(ComponentInvariants {
        dimension,
        center,
        center_degree,
        character_degree: delta,
        indicator,
        schur_bound,
    })
}

/// `gcd` over cyclic `H = ⟨h⟩` and `K = ⟨h^d⟩` of `|G|·(eε(H,K))(1)/(δf)`,
/// the rank of `eε(H,K)` in one complex component of `QGe`.
fn schur_bound(g: &FiniteGroup, e: &dyn Fn(usize) -> BigRational, delta_f: u64) -> Result<u64> {
    let order = BigRational::from_integer(g.order().into());
    let scale = BigRational::from_integer(delta_f.into());
    let mut bound = 0u64;
    let mut seen = std::collections::HashSet::new();
    for h in 0..g.order() {
        let o = g.element_order(h) as u64;
        if !seen.insert(g.subgroup(&[h]).elements().to_vec()) {
            continue;
        }
        // mean of e over ⟨h^j⟩
        let mean = |j: u64| -> BigRational {
            let x = g.pow(h, j as i64);
            let len = o / gcd(j, o);
            let mut acc = BigRational::zero();
            let mut y = 0;
            for _ in 0..len {
                acc += e(y);
                y = g.mul(y, x);
            }
            acc / BigRational::from_integer(len.into())
        };
        for d in divisors(o) {
            let primes = crate::numtheory::prime_divisors(d);
            let mut val = BigRational::zero();
            for mask in 0u32..(1 << primes.len()) {
                let mut j = d;
                for (i, p) in primes.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        j /= p;
                    }
                }
                let term = mean(j);
                if mask.count_ones() % 2 == 0 {
                    val += term;
                } else {
                    val -= term;
                }
            }
            let r = val * &order / &scale;
            if !r.is_integer() {
                return Err(Error::InvalidArgument("non-integral idempotent rank".into()));
            }
            let r = r.to_integer().to_u64().unwrap_or(0);
            if r > 0 {
                bound = gcd(bound, r);
            }
        }
    }
    Ok(bound)
}
