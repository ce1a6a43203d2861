//! Exact arithmetic in `Q(ζ_E)`, stored over the power basis modulo `Φ_E`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numtheory::{divisors, residue};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = exact_divide(&num, &phi_d);
    }
    num
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut quo = vec![0i64; rem.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd] / lead;
        quo[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quo
}

/// An element of `Q(ζ_E)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<BigRational>,
}

/// Context holding `Φ_E` so that elements can be reduced.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: u64,
    modulus: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Self {
        let order = order.max(1);
        CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn rational(&self, q: BigRational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn integer(&self, n: i64) -> Cyclotomic {
        self.rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `ζ_E^j`.
    pub fn zeta_pow(&self, j: i64) -> Cyclotomic {
        let e = residue(j, self.order) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> Cyclotomic {
        let deg = self.degree();
        // Φ_E is monic
        while raw.len() > deg {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - deg;
            for (j, &m) in self.modulus[..deg].iter().enumerate() {
                if m != 0 {
                    raw[shift + j] -= &top * BigRational::from_integer(BigInt::from(m));
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        Cyclotomic {
            order: self.order,
            coeffs: raw,
        }
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        self.reduce(raw)
    }

    pub fn scale(&self, a: &Cyclotomic, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: a.coeffs.iter().map(|x| x * q).collect(),
        }
    }

    /// The Galois automorphism `ζ ↦ ζ^r`.
    pub fn galois(&self, a: &Cyclotomic, r: i64) -> Cyclotomic {
        let mut out = self.zero();
        for (i, x) in a.coeffs.iter().enumerate() {
            if !x.is_zero() {
                out = self.add(&out, &self.scale(&self.zeta_pow(r * i as i64), x));
            }
        }
        out
    }

    /// Complex conjugation.
    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        self.galois(a, -1)
    }
}

impl Cyclotomic {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{i}", self.order)?,
                (_, false) => write!(f, "{mag}*z{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
