use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored by images.
///
/// Products compose left to right: `x.mul(y)` applies `x` first, then `y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::MalformedPerm(format!(
                    "images {images:?} are not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree {
                    return Err(Error::MalformedPerm(format!(
                        "point {a} outside degree {degree}"
                    )));
                }
                if used[a] {
                    return Err(Error::MalformedPerm(format!(
                        "point {a} repeated in cycles"
                    )));
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses disjoint-cycle notation such as `(1,2,3)(4,5)` or `(0 1 2)`.
    /// `base` is the number of the first point (1 for GAP style input).
    pub fn parse_cycles(degree: usize, text: &str, base: u32) -> Result<Perm> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::MalformedPerm(format!("expected '(' in {text:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::MalformedPerm(format!("unexpected text in {text:?}")));
            }
            let close = rest[open..].find(')').ok_or_else(|| {
                Error::MalformedPerm(format!("unbalanced parenthesis in {text:?}"))
            })? + open;
            let inner = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for tok in inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::MalformedPerm(format!("bad point {tok:?} in {text:?}")))?;
                if v < base {
                    return Err(Error::MalformedPerm(format!("point {v} below base {base}")));
                }
                cycle.push(v - base);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`, i.e. the image of `self` under conjugation by `g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut out = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[j as usize];
        }
        Perm { images: out }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| other.images[j as usize] == self.images[other.images[i] as usize])
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i as u32);
                i = self.images[i] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Sorted cycle lengths including fixed points, longest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    /// GAP-style 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl serde::Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -> 1 -> 2
        assert_eq!(a.mul(&b).apply(0), 2);
    }

    #[test]
    fn conj_matches_product() {
        let x = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        let g = Perm::from_cycles(5, &[vec![0, 3], vec![1, 4, 2]]).unwrap();
        assert_eq!(x.conj(&g), g.inverse().mul(&x).mul(&g));
    }

    #[test]
    fn parse_round_trip() {
        let p = Perm::parse_cycles(6, "(1,2,3,4)(5,6)", 1).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.to_cycle_string(), "(1,2,3,4)(5,6)");
        let q = Perm::parse_cycles(6, "(0 1 2 3)(4 5)", 0).unwrap();
        assert_eq!(p, q);
        assert!(Perm::parse_cycles(3, "(1,1)", 1).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn pow_and_inverse() {
        let p = Perm::parse_cycles(7, "(1,2,3,4,5,6,7)", 1).unwrap();
        assert!(p.pow(7).is_identity());
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(3).mul(&p.pow(4)), Perm::identity(7));
    }
}
