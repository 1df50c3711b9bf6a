//! Permutations on `{1..degree}` and disjoint-cycle notation.
//!
//! Points are 1-based at every public boundary (parsing, display, `image`),
//! and stored 0-based internally.
//!
//! Composition convention: `compose(p, q)` is `p ∘ q`, so `(p·q)(i) = p(q(i))`
//! and `q` is applied first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotABijection);
            }
            out.push((img - 1) as u16);
        }
        Ok(Permutation { images: out })
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// Whitespace and commas inside a cycle both separate points; `"()"` and the
    /// empty string denote the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::MalformedCycle(text.to_string()));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::MalformedCycle(text.to_string()));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::MalformedCycle(text.to_string()));
            }
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok
                    .parse()
                    .map_err(|_| Error::MalformedCycle(text.to_string()))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if std::mem::replace(&mut used[point - 1], true) {
                    return Err(Error::RepeatedPoint(point));
                }
                cycle.push(point - 1);
            }
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                images[a] = b as u16;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// Moves every point up by `offset`, embedding into degree `degree`.
    pub(crate) fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u16;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_three_cycle() {
        let p = Permutation::parse("(1 2 3)", 3).unwrap();
        assert_eq!(p.images(), vec![2, 3, 1]);
    }

    #[test]
    fn parse_identity() {
        assert!(Permutation::parse("()", 4).unwrap().is_identity());
        assert!(Permutation::parse("  ", 4).unwrap().is_identity());
        assert_eq!(Permutation::parse("()", 4).unwrap().degree(), 4);
    }

    #[test]
    fn parse_double_transposition() {
        let p = Permutation::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.images(), vec![2, 1, 4, 3]);
        let q = Permutation::parse(" ( 1, 2 ) (3 4) ", 4).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(1 5)", 4),
            Err(Error::PointOutOfRange { point: 5, degree: 4 })
        ));
        assert!(matches!(
            Permutation::parse("(1 2)(2 3)", 4),
            Err(Error::RepeatedPoint(2))
        ));
        assert!(matches!(
            Permutation::parse("(1 2", 4),
            Err(Error::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse("1 2)", 4),
            Err(Error::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse("((1 2))", 4),
            Err(Error::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse("(1 x)", 4),
            Err(Error::MalformedCycle(_))
        ));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let p = Permutation::parse("(1 2)", 3).unwrap();
        let q = Permutation::parse("(2 3)", 3).unwrap();
        // 1 -q-> 1 -p-> 2, 2 -q-> 3 -p-> 3, 3 -q-> 2 -p-> 1
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq.images(), vec![2, 3, 1]);
        assert_eq!(pq, Permutation::parse("(1 2 3)", 3).unwrap());
    }

    #[test]
    fn compose_identity_and_involution() {
        let p = Permutation::parse("(1 3 2)(4 5)", 5).unwrap();
        assert_eq!(p.compose(&Permutation::identity(5)).unwrap(), p);
        let t = Permutation::parse("(1 2)", 3).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(
            p.compose(&q),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn display_roundtrip() {
        let p = Permutation::parse("(2 4 3)(5 6)", 7).unwrap();
        assert_eq!(p.to_string(), "(2 4 3)(5 6)");
        assert_eq!(Permutation::parse(&p.to_string(), 7).unwrap(), p);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
        assert_eq!(
            Permutation::from_images(&[2, 3, 1]).unwrap(),
            Permutation::parse("(1 2 3)", 3).unwrap()
        );
    }
}
