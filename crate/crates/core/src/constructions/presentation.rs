//! Coset enumeration (HLT strategy) for finitely presented groups.

use crate::error::{Error, Result};
use crate::permgroup::{FiniteGroup, Permutation};

/// A word in the generators: `g + 1` for generator `g`, `-(g + 1)` for its
/// inverse.
pub type Word = Vec<i32>;

/// Parses a word such as `"d^-1 v d^2"` or `"(u v)^5"` over the named
/// generators.
pub fn parse_word(names: &[&str], text: &str) -> Result<Word> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let w = parse_seq(names, &chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::InvalidArgument(format!("unbalanced `)` in `{text}`")));
    }
    Ok(w)
}

fn parse_seq(names: &[&str], s: &[char], pos: &mut usize) -> Result<Word> {
    let mut out = Vec::new();
    loop {
        while *pos < s.len() && s[*pos].is_whitespace() {
            *pos += 1;
        }
        if *pos >= s.len() || s[*pos] == ')' {
            return Ok(out);
        }
        let base: Word = if s[*pos] == '(' {
            *pos += 1;
            let inner = parse_seq(names, s, pos)?;
            if *pos >= s.len() {
                return Err(Error::InvalidArgument("missing `)`".into()));
            }
            *pos += 1;
            inner
        } else {
            let start = *pos;
            while *pos < s.len() && (s[*pos].is_alphanumeric() || s[*pos] == '_') {
                *pos += 1;
            }
            let name: String = s[start..*pos].iter().collect();
            if name.is_empty() {
                return Err(Error::InvalidArgument(format!("unexpected `{}`", s[*pos])));
            }
            let g = names
                .iter()
                .position(|&n| n == name)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown generator `{name}`")))?
                as i32
                + 1;
            vec![g]
        };
        let mut exp = 1i32;
        if *pos < s.len() && s[*pos] == '^' {
            *pos += 1;
            let start = *pos;
            if *pos < s.len() && s[*pos] == '-' {
                *pos += 1;
            }
            while *pos < s.len() && s[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let e: String = s[start..*pos].iter().collect();
            exp = e
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad exponent `{e}`")))?;
        }
        let piece = if exp < 0 { invert_word(&base) } else { base };
        for _ in 0..exp.abs() {
            out.extend_from_slice(&piece);
        }
    }
}

pub fn invert_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

/// Parses `"lhs = rhs"` (or a bare word) into the relator `lhs·rhs^-1`.
pub fn parse_relation(names: &[&str], text: &str) -> Result<Word> {
    match text.split_once('=') {
        Some((l, r)) => {
            let mut w = parse_word(names, l)?;
            w.extend(invert_word(&parse_word(names, r)?));
            Ok(w)
        }
        None => parse_word(names, text),
    }
}

struct Enumerator {
    ngens: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: Vec<bool>,
    queue: Vec<usize>,
    limit: usize,
}

const UNDEF: usize = usize::MAX;

impl Enumerator {
    fn col(&self, letter: i32) -> usize {
        if letter > 0 {
            (letter - 1) as usize * 2
        } else {
            (-letter - 1) as usize * 2 + 1
        }
    }

    fn inv_col(c: usize) -> usize {
        c ^ 1
    }

    fn define(&mut self, coset: usize, c: usize) -> Result<()> {
        if self.table.len() >= self.limit {
            return Err(Error::BoundExceeded { bound: self.limit });
        }
        let new = self.table.len();
        self.table.push(vec![UNDEF; 2 * self.ngens]);
        self.parent.push(new);
        self.live.push(true);
        self.table[coset][c] = new;
        self.table[new][Self::inv_col(c)] = coset;
        Ok(())
    }

    fn rep(&mut self, mut k: usize) -> usize {
        let mut root = k;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (mu, nu) = (k.min(l), k.max(l));
        self.parent[nu] = mu;
        self.live[nu] = false;
        self.queue.push(nu);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let gamma = self.queue[i];
            i += 1;
            for c in 0..2 * self.ngens {
                let delta = self.table[gamma][c];
                if delta == UNDEF {
                    continue;
                }
                let ic = Self::inv_col(c);
                if self.table[delta][ic] == gamma {
                    self.table[delta][ic] = UNDEF;
                }
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                if self.table[mu][c] != UNDEF {
                    let t = self.table[mu][c];
                    self.merge(nu, t);
                } else if self.table[nu][ic] != UNDEF {
                    let t = self.table[nu][ic];
                    self.merge(mu, t);
                } else {
                    self.table[mu][c] = nu;
                    self.table[nu][ic] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[i32]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.table[f][self.col(w[i])] != UNDEF {
                f = self.table[f][self.col(w[i])];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize
                && self.table[b][Self::inv_col(self.col(w[j as usize]))] != UNDEF
            {
                b = self.table[b][Self::inv_col(self.col(w[j as usize]))];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i as isize {
                let c = self.col(w[i]);
                self.table[f][c] = b;
                self.table[b][Self::inv_col(c)] = f;
                return Ok(());
            } else {
                let c = self.col(w[i]);
                self.define(f, c)?;
            }
        }
    }
}

/// Enumerates the cosets of the trivial subgroup and returns the regular
/// permutation representation of the presented group. Fails when more than
/// `limit` cosets are defined.
pub fn finitely_presented(ngens: usize, relators: &[Word], limit: usize) -> Result<FiniteGroup> {
    Ok(finitely_presented_with_generators(ngens, relators, limit)?.0)
}

/// Like [`finitely_presented`], also returning the element index of each
/// presentation generator.
pub fn finitely_presented_with_generators(
    ngens: usize,
    relators: &[Word],
    limit: usize,
) -> Result<(FiniteGroup, Vec<usize>)> {
    let mut e = Enumerator {
        ngens,
        table: vec![vec![UNDEF; 2 * ngens]],
        parent: vec![0],
        live: vec![true],
        queue: Vec::new(),
        limit,
    };
    let mut alpha = 0;
    while alpha < e.table.len() {
        if e.live[alpha] {
            for r in relators {
                if !e.live[alpha] {
                    break;
                }
                e.scan_and_fill(alpha, r)?;
            }
            if e.live[alpha] {
                for c in 0..2 * ngens {
                    if e.table[alpha][c] == UNDEF {
                        e.define(alpha, c)?;
                    }
                }
            }
        }
        alpha += 1;
    }
    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.live[c]).collect();
    let mut pos = vec![UNDEF; e.table.len()];
    for (i, &c) in live.iter().enumerate() {
        pos[c] = i;
    }
    let mut perms = Vec::with_capacity(ngens);
    for g in 0..ngens {
        let images: Vec<u32> = live
            .iter()
            .map(|&c| pos[e.table[c][2 * g]] as u32)
            .collect();
        perms.push(Permutation::from_images(images)?);
    }
    let group = FiniteGroup::from_generators(live.len(), &perms, limit)?;
    let gens = perms
        .iter()
        .map(|p| group.index_of(p).expect("generator in group"))
        .collect();
    Ok((group, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_presentation() {
        let names = ["a", "b"];
        let rels: Vec<Word> = ["a^4", "b^2", "b^-1 a b = a^-1"]
            .iter()
            .map(|r| parse_relation(&names, r).unwrap())
            .collect();
        let g = finitely_presented(2, &rels, 10_000).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn binary_icosahedral_presentation() {
        let names = ["u", "v"];
        let rels: Vec<Word> = ["u^4", "v^3", "u v u v u v u v u v = u^2"]
            .iter()
            .map(|r| parse_relation(&names, r).unwrap())
            .collect();
        let g = finitely_presented(2, &rels, 100_000).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word(&["a", "b"], "a^2 b^-1").unwrap(), vec![1, 1, -2]);
        assert!(parse_word(&["a"], "c").is_err());
        assert_eq!(parse_word(&["a", "b"], "(a b)^-2").unwrap(), vec![-2, -1, -2, -1]);
        assert!(parse_word(&["a"], "(a").is_err());
    }
}
