//! `SL(2, q)` for small `q`, acting on the nonzero row vectors of `F_q^2`.

use crate::error::{Error, Result};
use crate::numtheory::is_prime;
use crate::permgroup::{FiniteGroup, Permutation, DEFAULT_ORDER_BOUND};

/// Arithmetic in `F_p` or `F_9 = F_3[x]/(x^2 + 1)`; elements are encoded as
/// `a + b·p` for `a + b·x`.
#[derive(Clone, Copy)]
struct Field {
    p: u64,
    ext: bool,
}

impl Field {
    fn size(&self) -> u64 {
        if self.ext {
            self.p * self.p
        } else {
            self.p
        }
    }

    fn split(&self, x: u64) -> (u64, u64) {
        (x % self.p, x / self.p)
    }

    fn join(&self, a: u64, b: u64) -> u64 {
        a % self.p + (b % self.p) * self.p
    }

    fn add(&self, x: u64, y: u64) -> u64 {
        let (a, b) = self.split(x);
        let (c, d) = self.split(y);
        self.join(a + c, b + d)
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        let (a, b) = self.split(x);
        let (c, d) = self.split(y);
        let p = self.p;
        // x^2 = -1
        self.join(a * c + (p - 1) * (b * d % p), a * d + b * c)
    }
}

/// `SL(2, q)` for `q` prime or `q = 9`, generated by elementary matrices.
pub fn sl2(q: u64) -> Result<FiniteGroup> {
    let field = if q == 9 {
        Field { p: 3, ext: true }
    } else if is_prime(q) {
        Field { p: q, ext: false }
    } else {
        return Err(Error::InvalidArgument(format!(
            "SL(2, {q}) is only built for prime q and q = 9"
        )));
    };
    let size = field.size();
    let order = size * (size * size - 1);
    if order as usize > DEFAULT_ORDER_BOUND {
        return Err(Error::BoundExceeded {
            bound: DEFAULT_ORDER_BOUND,
        });
    }
    let vectors: Vec<(u64, u64)> = (0..size)
        .flat_map(|x| (0..size).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (u64, u64)| -> usize { (v.0 * size + v.1 - 1) as usize };
    let act = |m: [u64; 4]| -> Result<Permutation> {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let nx = field.add(field.mul(x, m[0]), field.mul(y, m[2]));
                let ny = field.add(field.mul(x, m[1]), field.mul(y, m[3]));
                index((nx, ny)) as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    let mut gens = vec![act([1, 1, 0, 1])?, act([1, 0, 1, 1])?];
    if field.ext {
        // upper unitriangular with the generator x of F_9
        gens.push(act([1, field.join(0, 1), 0, 1])?);
    }
    let g = FiniteGroup::from_generators(vectors.len(), &gens, DEFAULT_ORDER_BOUND)?;
    debug_assert_eq!(g.order() as u64, order);
    Ok(g)
}
