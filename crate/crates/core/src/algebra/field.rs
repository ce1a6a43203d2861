use std::fmt;

use crate::numtheory::{divisors, euler_phi, gcd, units_mod};

/// The fixed field of a subgroup `U` of `(Z/k)^*` acting on `Q(ζ_k)`,
/// normalized to the smallest conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedFieldDescriptor {
    conductor: u64,
    units: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldClass {
    Rationals,
    ImaginaryQuadratic,
    RealQuadratic,
    TotallyRealHigher,
    ComplexOther,
}

impl FixedFieldDescriptor {
    /// `U` is closed under multiplication modulo `k`; it is normalized to the
    /// least conductor of the fixed field.
    pub fn new(k: u64, units: &[u64]) -> Self {
        let k = k.max(1);
        let mut u: Vec<u64> = units.iter().map(|&x| x % k).collect();
        u.sort_unstable();
        u.dedup();
        if u.is_empty() {
            u.push(1 % k);
        }
        for c in divisors(k) {
            // U must contain every unit that is 1 modulo c
            let contains_kernel = units_mod(k)
                .into_iter()
                .filter(|&x| x % c == 1 % c)
                .all(|x| u.binary_search(&x).is_ok());
            if contains_kernel {
                let mut image: Vec<u64> = u.iter().map(|&x| x % c).collect();
                image.sort_unstable();
                image.dedup();
                return FixedFieldDescriptor {
                    conductor: c,
                    units: image,
                };
            }
        }
        unreachable!("the full conductor always qualifies")
    }

    /// Fixed field of the subgroup generated by `gens` in `(Z/k)^*`.
    pub fn generated(k: u64, gens: &[u64]) -> Self {
        let k = k.max(1);
        let mut u = vec![1 % k];
        let mut i = 0;
        while i < u.len() {
            for &g in gens {
                let y = ((u[i] as u128 * g as u128) % k as u128) as u64;
                if !u.contains(&y) {
                    u.push(y);
                }
            }
            i += 1;
        }
        Self::new(k, &u)
    }

    pub fn rationals() -> Self {
        FixedFieldDescriptor {
            conductor: 1,
            units: vec![0],
        }
    }

    /// `Q(ζ_k)` itself.
    pub fn cyclotomic(k: u64) -> Self {
        Self::new(k, &[1])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn galois_subgroup(&self) -> &[u64] {
        &self.units
    }

    pub fn degree(&self) -> u64 {
        euler_phi(self.conductor).expect("positive conductor") / self.units.len() as u64
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn is_totally_real(&self) -> bool {
        let k = self.conductor;
        k <= 2 || self.units.binary_search(&(k - 1)).is_ok()
    }

    /// Whether the field is `Q(ζ_c)` for its conductor `c`.
    pub fn is_cyclotomic(&self) -> bool {
        self.units.len() == 1
    }

    /// Number of roots of unity in the field.
    pub fn roots_of_unity(&self) -> u64 {
        let k = self.conductor;
        let m = divisors(k)
            .into_iter()
            .filter(|&m| self.units.iter().all(|&u| u % m == 1 % m))
            .max()
            .unwrap_or(1);
        if m % 2 == 0 {
            m
        } else {
            2 * m
        }
    }

    /// Whether `self ⊆ other` as subfields of a common cyclotomic field.
    /// `[F_P : Q_p]` for a prime `P` of `F` over `p`: the index of `U` in
    /// `U·D_p`, where `D_p ⊆ (Z/c)^*` is the decomposition group of `p`.
    pub fn local_degree(&self, p: u64) -> u64 {
        let c = self.conductor;
        if c == 1 {
            return 1;
        }
        let mut rest = c;
        while rest % p == 0 {
            rest /= p;
        }
        let mut frob = vec![1 % rest];
        let mut x = p % rest;
        while !frob.contains(&x) {
            frob.push(x);
            x = x * p % rest;
        }
        let d: Vec<u64> = units_mod(c).into_iter().filter(|x| frob.contains(&(x % rest))).collect();
        let common = d.iter().filter(|x| self.units.binary_search(x).is_ok()).count();
        d.len() as u64 / common as u64
    }

    pub fn is_subfield_of(&self, other: &FixedFieldDescriptor) -> bool {
        let l = self.conductor / gcd(self.conductor, other.conductor) * other.conductor;
        // lift other's group to (Z/l)^* and check it maps into self's group
        units_mod(l)
            .into_iter()
            .filter(|&x| other.units.binary_search(&(x % other.conductor)).is_ok() || other.conductor == 1)
            .all(|x| self.conductor == 1 || self.units.binary_search(&(x % self.conductor)).is_ok())
    }
}

pub fn classify_field(f: &FixedFieldDescriptor) -> FieldClass {
    match (f.degree(), f.is_totally_real()) {
        (1, _) => FieldClass::Rationals,
        (2, false) => FieldClass::ImaginaryQuadratic,
        (2, true) => FieldClass::RealQuadratic,
        (_, true) => FieldClass::TotallyRealHigher,
        (_, false) => FieldClass::ComplexOther,
    }
}

impl fmt::Display for FixedFieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.conductor;
        if self.is_rational() {
            write!(f, "Q")
        } else if self.is_cyclotomic() {
            write!(f, "Q(zeta_{k})")
        } else if self.units == [1, k - 1] {
            write!(f, "Q(zeta_{k})^+")
        } else {
            let u: Vec<String> = self.units.iter().map(|x| x.to_string()).collect();
            write!(f, "Q(zeta_{k})^<{}>", u.join(","))
        }
    }
}

#[cfg(test)]
mod tests {

    #[test]
    fn local_degrees() {
        // 2 is inert in Q(ζ3), splits in Q(ζ7) with residue degree 3
        assert_eq!(FixedFieldDescriptor::cyclotomic(3).local_degree(2), 2);
        assert_eq!(FixedFieldDescriptor::cyclotomic(7).local_degree(2), 3);
        assert_eq!(FixedFieldDescriptor::cyclotomic(5).local_degree(2), 4);
        assert_eq!(FixedFieldDescriptor::cyclotomic(8).local_degree(2), 4);
        assert_eq!(FixedFieldDescriptor::rationals().local_degree(2), 1);
        // Q(√5) is inert at 2, Q(√-7) splits at 2
        assert_eq!(FixedFieldDescriptor::new(5, &[1, 4]).local_degree(2), 2);
        assert_eq!(FixedFieldDescriptor::new(7, &[1, 2, 4]).local_degree(2), 1);
    }
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(classify_field(&FixedFieldDescriptor::new(5, &[1, 2, 3, 4])), FieldClass::Rationals);
        assert_eq!(classify_field(&FixedFieldDescriptor::new(4, &[1])), FieldClass::ImaginaryQuadratic);
        assert_eq!(classify_field(&FixedFieldDescriptor::new(5, &[1, 4])), FieldClass::RealQuadratic);
        assert_eq!(classify_field(&FixedFieldDescriptor::new(1, &[0])), FieldClass::Rationals);
        assert_eq!(classify_field(&FixedFieldDescriptor::new(2, &[1])), FieldClass::Rationals);
        assert_eq!(classify_field(&FixedFieldDescriptor::new(7, &[1])), FieldClass::ComplexOther);
        assert_eq!(classify_field(&FixedFieldDescriptor::new(7, &[1, 6])), FieldClass::TotallyRealHigher);
    }

    #[test]
    fn conductor_is_normalized() {
        // fixed field of {1,5} mod 8 is Q(ζ4)
        let f = FixedFieldDescriptor::new(8, &[1, 5]);
        assert_eq!(f, FixedFieldDescriptor::cyclotomic(4));
        assert_eq!(f.to_string(), "Q(zeta_4)");
        assert_eq!(FixedFieldDescriptor::cyclotomic(10), FixedFieldDescriptor::cyclotomic(5));
        assert_eq!(FixedFieldDescriptor::new(12, &[1, 7]).to_string(), "Q(zeta_3)");
        assert_eq!(FixedFieldDescriptor::new(5, &[1, 4]).to_string(), "Q(zeta_5)^+");
    }

    #[test]
    fn roots_of_unity_counts() {
        assert_eq!(FixedFieldDescriptor::cyclotomic(3).roots_of_unity(), 6);
        assert_eq!(FixedFieldDescriptor::cyclotomic(8).roots_of_unity(), 8);
        assert_eq!(FixedFieldDescriptor::rationals().roots_of_unity(), 2);
        assert_eq!(FixedFieldDescriptor::new(5, &[1, 4]).roots_of_unity(), 2);
    }

    #[test]
    fn subfields() {
        let q = FixedFieldDescriptor::rationals();
        let i = FixedFieldDescriptor::cyclotomic(4);
        let z8 = FixedFieldDescriptor::cyclotomic(8);
        assert!(q.is_subfield_of(&i));
        assert!(i.is_subfield_of(&z8));
        assert!(!z8.is_subfield_of(&i));
        assert!(!i.is_subfield_of(&FixedFieldDescriptor::cyclotomic(3)));
    }

    #[test]
    fn totally_real_iff_minus_one_fixed() {
        for k in 3..40u64 {
            let units = units_mod(k);
            for &r in &units {
                // the group generated by r
                let mut u = vec![1u64];
                let mut x = r;
                while x != 1 {
                    u.push(x);
                    x = x * r % k;
                }
                let f = FixedFieldDescriptor::new(k, &u);
                assert_eq!(f.is_totally_real(), u.contains(&(k - 1)), "k={k} r={r}");
            }
        }
    }
}
