use std::fmt;

use super::field::FixedFieldDescriptor;
use crate::error::{Error, Result};
use crate::groupalgebra::cyclotomic::cyclotomic_polynomial;
use crate::groupalgebra::{coset_order, ShodaPair};
use crate::numtheory::{euler_phi, gcd};
use crate::permgroup::{FiniteGroup, Subgroup};

/// Cocycle data of the crossed product `Q(ζ_k) * N/H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `N/H = ⟨xH⟩` of order `order` and `u_x^order = ζ_k^exponent`, with the
    /// exponent reduced modulo the norms of roots of unity.
    Cyclic { order: u64, exponent: u64, modulus: u64 },
    /// For generators `x_i` of `N/H`: `x_i^{o_i} = ζ^powers[i]` and
    /// `[x_i, x_j] = ζ^commutators[i][j]`.
    Table {
        orders: Vec<u64>,
        powers: Vec<u64>,
        commutators: Vec<Vec<u64>>,
    },
}

/// `M_n(Q(ζ_k) * N/H)` for a strong Shoda pair `(H, K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleComponentDescriptor {
    /// `n = [G:N]`.
    pub matrix_size: usize,
    /// `k = [H:K]`.
    pub conductor: u64,
    /// Generators of `N/H` with the residue `r` such that `y^x = y^r` in `H/K`.
    pub action: Vec<(usize, u64)>,
    pub twist: Twist,
    pub center: FixedFieldDescriptor,
    pub total_dimension: usize,
}

const NORM_SEARCH_MAX_DEGREE: u64 = 8;

/// `Z[ζ_k]` in the power basis, for small exact norm computations.
struct IntCyclotomic {
    k: u64,
    modulus: Vec<i64>,
}

impl IntCyclotomic {
    fn new(k: u64) -> Self {
        IntCyclotomic {
            k,
            modulus: cyclotomic_polynomial(k),
        }
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut raw: Vec<i64>) -> Vec<i64> {
        let deg = self.degree();
        while raw.len() > deg {
            let top = raw.pop().unwrap();
            let shift = raw.len() - deg;
            for (j, &m) in self.modulus[..deg].iter().enumerate() {
                raw[shift + j] -= top * m;
            }
        }
        raw.resize(deg, 0);
        raw
    }

    fn one(&self) -> Vec<i64> {
        self.reduce(vec![1])
    }

    fn zeta_pow(&self, j: u64) -> Vec<i64> {
        let mut raw = vec![0; (j % self.k) as usize + 1];
        raw[(j % self.k) as usize] = 1;
        self.reduce(raw)
    }

    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut raw = vec![0i64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.iter().enumerate() {
                    raw[i + j] += x * y;
                }
            }
        }
        self.reduce(raw)
    }
}

/// `e` with `x ≡ y^e (mod K)`.
fn discrete_log(g: &FiniteGroup, y: usize, x: usize, k: &Subgroup, period: u64) -> Result<u64> {
    let xi = g.inv(x);
    let mut cur = 0;
    for e in 0..period {
        if k.contains(g.mul(cur, xi)) {
            return Ok(e);
        }
        cur = g.mul(cur, y);
    }
    Err(Error::InvalidArgument("element is not in H modulo K".into()))
}

fn quotient_generators(g: &FiniteGroup, n: &Subgroup, h: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut cur = h.clone();
    while cur.order() < n.order() {
        let x = n
            .elements()
            .iter()
            .copied()
            .filter(|&x| !cur.contains(x))
            .max_by_key(|&x| (coset_order(g, x, h), std::cmp::Reverse(x)))
            .expect("proper subgroup");
        cur = g.join(&cur, &[x]);
        gens.push(x);
    }
    gens
}

impl SimpleComponentDescriptor {
    pub fn galois_degree(&self) -> u64 {
        match &self.twist {
            Twist::Cyclic { order, .. } => *order,
            Twist::Table { orders, .. } => orders.iter().product(),
        }
    }

    /// `Some(1)` or `Some(-1)` when the cyclic twist is `±1` up to norms.
    pub fn twist_sign(&self) -> Option<i8> {
        match self.twist {
            Twist::Cyclic { exponent, modulus, .. } => {
                if exponent == 0 {
                    Some(1)
                } else if self.conductor % 2 == 0 && (self.conductor / 2) % modulus == exponent {
                    Some(-1)
                } else {
                    None
                }
            }
            Twist::Table { .. } if self.action.is_empty() => Some(1),
            Twist::Table { .. } => None,
        }
    }

    /// Whether the crossed product is a matrix ring over its center: either
    /// the twist is trivial up to norms of roots of unity, or a norm
    /// certificate `N(x) = a·N(y)` is found among small elements of `Z[ζ_k]`.
    pub fn is_split(&self) -> bool {
        if let Some(p) = self.rational_quaternion_prime() {
            return !self.center.is_totally_real() && self.center.local_degree(p) % 2 == 0;
        }
        self.galois_degree() == 1 || self.twist_sign() == Some(1) || self.twist_is_norm()
    }

    fn twist_is_norm(&self) -> bool {
        let Twist::Cyclic { order, exponent, .. } = self.twist else {
            return false;
        };
        let k = self.conductor;
        let phi = match euler_phi(k) {
            Ok(p) if p <= NORM_SEARCH_MAX_DEGREE => p as usize,
            _ => return false,
        };
        let ring = IntCyclotomic::new(k);
        let r = self.action[0].1;
        let autos: Vec<Vec<Vec<i64>>> = (0..order)
            .map(|j| {
                let s = crate::numtheory::pow_mod(r, j, k);
                (0..phi).map(|i| ring.zeta_pow(s * i as u64)).collect()
            })
            .collect();
        let mut norms = std::collections::HashSet::new();
        let mut x = vec![-1i64; phi];
        loop {
            if x.iter().any(|&c| c != 0) {
                let mut n = ring.one();
                for images in &autos {
                    let mut tx = vec![0i64; phi];
                    for (i, &c) in x.iter().enumerate() {
                        for (t, v) in tx.iter_mut().zip(&images[i]) {
                            *t += c * v;
                        }
                    }
                    n = ring.mul(&n, &tx);
                }
                norms.insert(n);
            }
            // next vector in {-1, 0, 1}^phi
            let mut i = 0;
            while i < phi && x[i] == 1 {
                x[i] = -1;
                i += 1;
            }
            if i == phi {
                break;
            }
            x[i] += 1;
        }
        let a = ring.zeta_pow(exponent);
        norms.iter().any(|n| norms.contains(&ring.mul(&a, n)))
    }

    /// `p` when the component is `B ⊗_Q F` for the rational quaternion
    /// algebra `B` ramified at `{p, ∞}`: `H(Q)` when `L = F(ζ_4)`, `(-1,-3/Q)`
    /// when `L = F(ζ_3)`, in both cases with twist `-1`.
    pub fn rational_quaternion_prime(&self) -> Option<u64> {
        if self.galois_degree() != 2 || self.twist_sign() != Some(-1) {
            return None;
        }
        let (k, r) = (self.conductor, self.action[0].1);
        if k % 4 == 0 && r % 4 == 3 {
            Some(2)
        } else if k % 3 == 0 && r % 3 == 2 {
            Some(3)
        } else {
            None
        }
    }

    /// Conductor of `Q(ζ_k)` up to the identification `Q(ζ_k) = Q(ζ_{k/2})`
    /// for `k ≡ 2 (mod 4)`.
    pub fn reduced_conductor(&self) -> u64 {
        let k = self.conductor;
        if k % 4 == 2 {
            k / 2
        } else {
            k
        }
    }

    fn twist_text(&self) -> String {
        match &self.twist {
            Twist::Cyclic { exponent, .. } => match self.twist_sign() {
                Some(1) => "1".into(),
                Some(_) => "-1".into(),
                None => format!("zeta_{}^{}", self.conductor, exponent),
            },
            Twist::Table { powers, commutators, .. } => {
                let c: Vec<String> = commutators
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                format!(
                    "powers=[{}] commutators=[{}]",
                    powers.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                    c.join(";")
                )
            }
        }
    }

    /// Short algebra name, e.g. `M2(Q)`, `H(Q)` or `(Q(zeta_5)/Q,-1)`.
    pub fn canonical_name(&self) -> String {
        let k = self.reduced_conductor();
        let d = self.galois_degree() as usize;
        let (size, inner) = if d == 1 {
            (self.matrix_size, self.center.to_string())
        } else {
            match self.twist_sign() {
                _ if self.is_split() => (self.matrix_size * d, self.center.to_string()),
                Some(_) if d == 2 && self.center.is_rational() && k == 4 => (self.matrix_size, "H(Q)".into()),
                Some(_) if d == 2 && self.center.is_rational() && k == 3 => (self.matrix_size, "(-1,-3/Q)".into()),
                _ => (
                    self.matrix_size,
                    format!("(Q(zeta_{})/{},{})", k, self.center, self.twist_text()),
                ),
            }
        };
        if size == 1 {
            inner
        } else {
            format!("M{size}({inner})")
        }
    }
}

impl fmt::Display for SimpleComponentDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.galois_degree() == 1 {
            return write!(f, "M{}( Q(zeta_{}) )", self.matrix_size, self.conductor);
        }
        let kind = match self.twist {
            Twist::Cyclic { .. } => "cyclic",
            Twist::Table { .. } => "crossed",
        };
        write!(
            f,
            "M{}( {}(Q(zeta_{})/{}, a={}) )",
            self.matrix_size,
            kind,
            self.conductor,
            self.center,
            self.twist_text()
        )
    }
}

/// Symbolic description of the component `QGe(G, H, K)`.
pub fn component_descriptor(g: &FiniteGroup, pair: &ShodaPair) -> Result<SimpleComponentDescriptor> {
    let k = pair.conductor() as u64;
    let y = pair.generator;
    let (h, kk, n) = (&pair.h, &pair.k, &pair.n);
    if !n.is_subgroup_of(&g.whole()) || !h.is_subgroup_of(n) || !kk.is_subgroup_of(h) {
        return Err(Error::InvalidArgument("pair subgroups are not nested".into()));
    }
    let gens = quotient_generators(g, n, h);
    let mut action = Vec::new();
    for &x in &gens {
        let r = discrete_log(g, y, g.conj(y, x), kk, k)?;
        action.push((x, r));
    }
    let residues: Vec<u64> = action.iter().map(|&(_, r)| r).collect();
    let center = FixedFieldDescriptor::generated(k, &residues);
    let galois = (n.order() / h.order()) as u64;
    let twist = if gens.len() <= 1 {
        match gens.first() {
            None => Twist::Cyclic {
                order: 1,
                exponent: 0,
                modulus: 1,
            },
            Some(&x) => {
                let r = action[0].1;
                let e = discrete_log(g, y, g.pow(x, galois as i64), kk, k)?;
                // norms of ζ^j are ζ^(j·(1 + r + ... + r^(d-1)))
                let mut s = 0u64;
                let mut p = 1u64;
                for _ in 0..galois {
                    s = (s + p) % k;
                    p = (p * r) % k;
                }
                let modulus = gcd(k, s);
                Twist::Cyclic {
                    order: galois,
                    exponent: e % modulus,
                    modulus,
                }
            }
        }
    } else {
        let orders: Vec<u64> = gens.iter().map(|&x| coset_order(g, x, h) as u64).collect();
        let powers = gens
            .iter()
            .zip(&orders)
            .map(|(&x, &o)| discrete_log(g, y, g.pow(x, o as i64), kk, k))
            .collect::<Result<Vec<_>>>()?;
        let commutators = gens
            .iter()
            .map(|&a| {
                gens.iter()
                    .map(|&b| discrete_log(g, y, g.commutator(a, b), kk, k))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Twist::Table {
            orders,
            powers,
            commutators,
        }
    };
    let m = pair.matrix_size();
    let total_dimension = m * m * galois as usize * euler_phi(k)? as usize;
    Ok(SimpleComponentDescriptor {
        matrix_size: m,
        conductor: k,
        action,
        twist,
        center,
        total_dimension,
    })
}
