//! Named group constructors and the default sweep catalog.
//!
//! Names: `C<n>` cyclic of order n, `D<2n>` dihedral of order 2n, `S<n>`,
//! `A<n>`, `Q8`, `Aff<p>` (the affine group x ↦ ax + b over the p-element
//! field, order p(p−1)), and products written `AxB` (left-associative, so
//! `S3xC2xC2` is `(S3 × C2) × C2`). Products act on disjoint point sets.
//! A group file is named `file:<path>`.

use std::fmt;
use std::path::PathBuf;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupfile::GroupSpec;
use crate::perm::Permutation;

/// Largest degree accepted for the symmetric and alternating families.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;
/// Largest prime accepted for the affine family.
pub const MAX_AFFINE_PRIME: u64 = 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    /// Parameter is the group order 2n.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    FrobeniusAffine(u64),
    Product(Box<Family>, Box<Family>),
    File(PathBuf),
}

impl Family {
    pub fn product(a: Family, b: Family) -> Family {
        Family::Product(Box::new(a), Box::new(b))
    }

    pub fn parse(name: &str) -> Result<Family> {
        let name = name.trim();
        if let Some(path) = name.strip_prefix("file:") {
            return Ok(Family::File(PathBuf::from(path)));
        }
        let mut parts = name.split('x');
        let first = parts.next().ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        let mut fam = Self::parse_atom(first).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        for part in parts {
            let rhs = Self::parse_atom(part).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
            fam = Family::product(fam, rhs);
        }
        fam.validate()?;
        Ok(fam)
    }

    fn parse_atom(s: &str) -> Option<Family> {
        if s == "Q8" {
            return Some(Family::Quaternion8);
        }
        if let Some(p) = s.strip_prefix("Aff") {
            return p.parse().ok().map(Family::FrobeniusAffine);
        }
        let (head, num) = s.split_at(s.find(|c: char| c.is_ascii_digit())?);
        let n: usize = num.parse().ok()?;
        match head {
            "C" => Some(Family::Cyclic(n)),
            "D" => Some(Family::Dihedral(n)),
            "S" => Some(Family::Symmetric(n)),
            "A" => Some(Family::Alternating(n)),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            Family::Cyclic(n) if *n == 0 => bad("cyclic order must be at least 1".into()),
            Family::Dihedral(n) if *n < 2 || n % 2 == 1 => {
                bad(format!("dihedral order must be even and at least 2, got {n}"))
            }
            Family::Symmetric(n) | Family::Alternating(n) if *n == 0 || *n > MAX_SYMMETRIC_DEGREE => {
                bad(format!("degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"))
            }
            Family::FrobeniusAffine(p) if *p == 2 || *p > MAX_AFFINE_PRIME || !is_prime(*p) => {
                bad(format!("affine family needs an odd prime at most {MAX_AFFINE_PRIME}, got {p}"))
            }
            Family::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Order predicted by the family formula; `None` for file groups.
    pub fn expected_order(&self) -> Option<usize> {
        Some(match self {
            Family::Cyclic(n) | Family::Dihedral(n) => *n,
            Family::Symmetric(n) => (1..=*n).product(),
            Family::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            Family::Quaternion8 => 8,
            Family::FrobeniusAffine(p) => (p * (p - 1)) as usize,
            Family::Product(a, b) => a.expected_order()? * b.expected_order()?,
            Family::File(_) => return None,
        })
    }

    /// Generators and degree of the permutation representation.
    pub fn spec(&self) -> Result<GroupSpec> {
        self.validate()?;
        let perm = |s: &str, d: usize| Permutation::parse(s, d);
        Ok(match self {
            Family::Cyclic(n) => GroupSpec {
                degree: *n,
                generators: vec![cycle(1..=*n, *n)],
            },
            Family::Dihedral(2) => GroupSpec {
                degree: 2,
                generators: vec![perm("(1 2)", 2)?],
            },
            Family::Dihedral(4) => GroupSpec {
                degree: 4,
                generators: vec![perm("(1 2)", 4)?, perm("(3 4)", 4)?],
            },
            Family::Dihedral(order) => {
                let n = order / 2;
                let reflection: Vec<usize> = (1..=n).map(|i| n + 1 - i).collect();
                GroupSpec {
                    degree: n,
                    generators: vec![cycle(1..=n, n), Permutation::from_images(&reflection)?],
                }
            }
            Family::Symmetric(n) => GroupSpec {
                degree: *n,
                generators: if *n < 2 {
                    vec![]
                } else {
                    vec![perm("(1 2)", *n)?, cycle(1..=*n, *n)]
                },
            },
            Family::Alternating(n) => GroupSpec {
                degree: *n,
                generators: (3..=*n).map(|k| cycle([1, 2, k], *n)).collect(),
            },
            Family::Quaternion8 => GroupSpec {
                degree: 8,
                generators: vec![perm("(1 2 3 4)(5 6 7 8)", 8)?, perm("(1 5 3 7)(2 8 4 6)", 8)?],
            },
            Family::FrobeniusAffine(p) => {
                let p = *p as usize;
                let a = primitive_root(p);
                let translate: Vec<usize> = (0..p).map(|x| (x + 1) % p + 1).collect();
                let scale: Vec<usize> = (0..p).map(|x| x * a % p + 1).collect();
                GroupSpec {
                    degree: p,
                    generators: vec![
                        Permutation::from_images(&translate)?,
                        Permutation::from_images(&scale)?,
                    ],
                }
            }
            Family::Product(a, b) => {
                let (sa, sb) = (a.spec()?, b.spec()?);
                let degree = sa.degree + sb.degree;
                let generators = sa
                    .generators
                    .iter()
                    .map(|g| g.shifted(0, degree))
                    .chain(sb.generators.iter().map(|g| g.shifted(sa.degree, degree)))
                    .collect();
                GroupSpec { degree, generators }
            }
            Family::File(path) => GroupSpec::read(path)?,
        })
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        self.spec()?.build(cap)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::Quaternion8 => f.write_str("Q8"),
            Family::FrobeniusAffine(p) => write!(f, "Aff{p}"),
            Family::Product(a, b) => write!(f, "{a}x{b}"),
            Family::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<usize> = (1..=degree).collect();
    for (k, &a) in pts.iter().enumerate() {
        images[a - 1] = pts[(k + 1) % pts.len()];
    }
    Permutation::from_images(&images).expect("cycle is a bijection")
}

fn primitive_root(p: usize) -> usize {
    (2..p)
        .find(|&a| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * a % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

/// Products in the default catalog. They mix central and noncentral factors so
/// that N ∩ Z(G) is often nontrivial.
const DEFAULT_PRODUCTS: &[&str] = &[
    "S3xC2", "S3xC3", "S3xC4", "D8xC2", "Q8xC2", "D8xC3", "Q8xC3", "A4xC2", "D10xC2",
    "D10xC3", "C6xS3", "S3xS3", "A4xC3", "D8xC4", "Q8xC4", "S3xC2xC2", "Aff5xC2",
    "Aff5xC3", "D8xS3", "Q8xS3", "S4xC2", "S4xC3", "A4xS3", "D8xD8", "D8xQ8", "Q8xQ8",
    "Aff7xC2", "Aff7xC3", "A5xC2", "Aff5xS3", "S4xS3", "A4xA4", "A5xC3", "S4xD8",
];

/// The default sweep catalog, in a fixed order. `large` adds S7.
pub fn default_catalog(large: bool) -> Vec<Family> {
    let mut out: Vec<Family> = (1..=24).map(Family::Cyclic).collect();
    out.extend((6..=48).step_by(2).map(Family::Dihedral));
    out.extend((3..=6).map(Family::Symmetric));
    out.extend((4..=6).map(Family::Alternating));
    out.push(Family::Quaternion8);
    out.extend([3, 5, 7, 11, 13].into_iter().map(Family::FrobeniusAffine));
    out.extend(DEFAULT_PRODUCTS.iter().map(|n| Family::parse(n).expect("valid catalog name")));
    if large {
        out.push(Family::Symmetric(7));
    }
    out
}
