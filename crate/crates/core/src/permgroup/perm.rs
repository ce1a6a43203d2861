use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., d-1}` stored in image form.
///
/// Permutations act on the right: `x^(p*q) = (x^p)^q`, so `p.then(q)` applies
/// `p` first. Textual forms use 1-based points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            let x = x as usize;
            if x >= d || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "image list {:?} is not a bijection",
                    images.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from 1-based images as written in group files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(Error::InvalidArgument(
                    "point 0 in a 1-based image list".into(),
                ));
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Builds from 1-based disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (i, &p) in cyc.iter().enumerate() {
                let q = cyc[(i + 1) % cyc.len()];
                if p == 0 || q == 0 || p > degree || q > degree || touched[p - 1] {
                    return Err(Error::InvalidArgument(format!("bad cycle {cyc:?}")));
                }
                touched[p - 1] = true;
                images[p - 1] = (q - 1) as u32;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Disjoint cycles of length > 1, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}
