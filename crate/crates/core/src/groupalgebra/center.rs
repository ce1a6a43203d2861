//! Primitive central idempotents of `QG` from the algebra spanned by rational
//! class sums, which is isomorphic to `Q^c` with one factor per component.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::element::GroupAlgebraElement;
use crate::numtheory::gcd;
use crate::permgroup::FiniteGroup;

/// The rational classes of `g`: `x ~ y` iff `⟨x⟩` and `⟨y⟩` are conjugate.
/// Returns `(classes, class_of)`, classes ordered by smallest member.
pub fn rational_classes(g: &FiniteGroup) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let ord = g.element_order(x) as u64;
        let mut members = Vec::new();
        for r in 1..=ord.max(1) {
            if gcd(r, ord) != 1 {
                continue;
            }
            let y = g.pow(x, r as i64);
            let cls = g.class_of(y);
            for &z in &g.conjugacy_classes()[cls] {
                if class_of[z] == usize::MAX {
                    class_of[z] = id;
                    members.push(z);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, class_of)
}

/// One primitive central idempotent, in rational-class coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralComponent {
    /// Coefficient of each element of rational class `i` in the idempotent.
    pub coords: Vec<BigRational>,
    /// `dim_Q QGe`.
    pub dimension: usize,
}

#[derive(Clone, Debug)]
pub struct CentralDecomposition {
    pub rational_classes: Vec<Vec<usize>>,
    pub rational_class_of: Vec<usize>,
    /// Sorted by (dimension, coordinates) for reproducibility.
    pub components: Vec<CentralComponent>,
}

impl CentralDecomposition {
    pub fn idempotent<'g>(&self, g: &'g FiniteGroup, i: usize) -> GroupAlgebraElement<'g> {
        let c = &self.components[i];
        GroupAlgebraElement::from_terms(
            g,
            (0..g.order()).map(|x| (x, c.coords[self.rational_class_of[x]].clone())),
        )
    }

    /// The component containing the idempotent `eps` (trace test), or `None`
    /// when `eps` meets several or none.
    pub fn component_of(&self, g: &FiniteGroup, eps: &GroupAlgebraElement<'_>) -> Option<usize> {
        let mut hit = None;
        for (i, c) in self.components.iter().enumerate() {
            // coefficient of 1 in eps·e_i
            let mut t = BigRational::zero();
            for (x, a) in eps.terms() {
                t += a * &c.coords[self.rational_class_of[g.inv(x)]];
            }
            if !t.is_zero() {
                if hit.is_some() {
                    return None;
                }
                hit = Some(i);
            }
        }
        hit
    }
}

/// Structure constants `n[a][b][c]`: the number of `(x, y) ∈ S_a × S_b` with
/// `xy = z_c` for a fixed `z_c ∈ S_c`.
fn structure_constants(g: &FiniteGroup, classes: &[Vec<usize>], class_of: &[usize]) -> Vec<i64> {
    let c = classes.len();
    let mut n = vec![0i64; c * c * c];
    for (a, sa) in classes.iter().enumerate() {
        for &x in sa {
            let xi = g.inv(x);
            for (cc, sc) in classes.iter().enumerate() {
                let y = g.mul(xi, sc[0]);
                let b = class_of[y];
                n[(a * c + b) * c + cc] += 1;
            }
        }
    }
    n
}

fn apply(n: &[i64], c: usize, a: usize, v: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); c];
    for (b, vb) in v.iter().enumerate() {
        if vb.is_zero() {
            continue;
        }
        for (cc, o) in out.iter_mut().enumerate() {
            let k = n[(a * c + b) * c + cc];
            if k != 0 {
                *o += vb * BigRational::from_integer(BigInt::from(k));
            }
        }
    }
    out
}

/// Monic minimal polynomial of `L_a` on the Krylov space of `v`, lowest
/// degree first.
fn krylov_minpoly(n: &[i64], c: usize, a: usize, v: &[BigRational]) -> Vec<BigRational> {
    // reduced basis rows with pivot columns and their expression in powers
    let mut basis: Vec<(Vec<BigRational>, usize, Vec<BigRational>)> = Vec::new();
    let mut cur = v.to_vec();
    let mut k = 0;
    loop {
        // express cur = L^k v, reduce against basis
        let mut w = cur.clone();
        let mut combo = vec![BigRational::zero(); k + 1];
        combo[k] = BigRational::one();
        for (row, piv, rc) in &basis {
            if !w[*piv].is_zero() {
                let f = &w[*piv] / &row[*piv];
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= &f * y;
                }
                for (i, y) in rc.iter().enumerate() {
                    combo[i] -= &f * y;
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => return combo,
            Some(p) => basis.push((w, p, combo)),
        }
        cur = apply(n, c, a, &cur);
        k += 1;
    }
}

fn eval(poly: &[BigRational], x: i64) -> BigRational {
    let xr = BigRational::from_integer(BigInt::from(x));
    poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * &xr + c)
}

/// Integer roots of a squarefree polynomial whose roots are known to be
/// integers of absolute value at most `bound`.
fn integer_roots(poly: &[BigRational], bound: i64) -> Vec<i64> {
    let deg = poly.len() - 1;
    let mut roots = Vec::with_capacity(deg);
    for x in -bound..=bound {
        if eval(poly, x).is_zero() {
            roots.push(x);
            if roots.len() == deg {
                break;
            }
        }
    }
    assert_eq!(roots.len(), deg, "class sum eigenvalues must be integers");
    roots
}

/// All primitive central idempotents of `QG`.
pub fn central_decomposition(g: &FiniteGroup) -> CentralDecomposition {
    let (classes, class_of) = rational_classes(g);
    let c = classes.len();
    let n = structure_constants(g, &classes, &class_of);
    let mut one = vec![BigRational::zero(); c];
    one[class_of[0]] = BigRational::one();
    let mut parts = vec![one];
    for a in 0..c {
        if parts.len() == c {
            break;
        }
        let bound = classes[a].len() as i64;
        let mut next = Vec::new();
        for f in parts {
            let poly = krylov_minpoly(&n, c, a, &f);
            if poly.len() == 2 {
                next.push(f);
                continue;
            }
            let roots = integer_roots(&poly, bound);
            for (i, &li) in roots.iter().enumerate() {
                let mut v = f.clone();
                let mut denom = BigRational::one();
                for (j, &lj) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let lv = apply(&n, c, a, &v);
                    let lj_r = BigRational::from_integer(BigInt::from(lj));
                    v = lv.iter().zip(&v).map(|(x, y)| x - &lj_r * y).collect();
                    denom *= BigRational::from_integer(BigInt::from(li - lj));
                }
                next.push(v.into_iter().map(|x| x / &denom).collect());
            }
        }
        parts = next;
    }
    assert_eq!(parts.len(), c, "class algebra must split into c factors");
    let order = BigRational::from_integer(BigInt::from(g.order()));
    let mut components: Vec<CentralComponent> = parts
        .into_iter()
        .map(|coords| {
            let dim = (&coords[class_of[0]] * &order).to_integer();
            CentralComponent {
                dimension: dim.to_usize().expect("dimension fits"),
                coords,
            }
        })
        .collect();
    components.sort_by(|x, y| {
        x.dimension.cmp(&y.dimension).then_with(|| {
            // trivial-character side first: larger coefficients first
            let kx: Vec<_> = x.coords.iter().map(|q| -q.clone()).collect();
            let ky: Vec<_> = y.coords.iter().map(|q| -q.clone()).collect();
            kx.cmp(&ky)
        })
    });
    CentralDecomposition {
        rational_classes: classes,
        rational_class_of: class_of,
        components,
    }
}
