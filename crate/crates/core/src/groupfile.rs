//! Text format for permutation groups:
//!
//! ```text
//! # comment
//! degree 4
//! gen (1 2 3 4)
//! gen (1 3)
//! ```
//!
//! The `degree` line must come before any `gen` line. Blank lines and lines
//! starting with `#` are ignored.

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut generators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| Error::GroupFile {
                line: line_no,
                message,
            };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match keyword {
                "degree" => {
                    if degree.is_some() {
                        return Err(err("duplicate degree line".into()));
                    }
                    let d: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("invalid degree {:?}", rest.trim())))?;
                    if d == 0 {
                        return Err(err("degree must be positive".into()));
                    }
                    degree = Some(d);
                }
                "gen" => {
                    let d = degree.ok_or_else(|| err("gen before degree".into()))?;
                    let p = Permutation::parse(rest, d).map_err(|e| err(e.to_string()))?;
                    generators.push(p);
                }
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        let degree = degree.ok_or(Error::GroupFile {
            line: text.lines().count().max(1),
            message: "missing degree line".into(),
        })?;
        Ok(GroupSpec { degree, generators })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::generate(self.degree, &self.generators, cap)
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dihedral() {
        let spec = GroupSpec::parse("# D8\ndegree 4\n\ngen (1 2 3 4)\ngen (1 3)\n").unwrap();
        assert_eq!(spec.degree, 4);
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(spec.build(100).unwrap().order(), 8);
        assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = GroupSpec::parse("degree 3\ngen (1 4)\n").unwrap_err();
        assert!(matches!(e, Error::GroupFile { line: 2, .. }), "{e}");
        let e = GroupSpec::parse("# x\ngen (1 2)\n").unwrap_err();
        assert!(matches!(e, Error::GroupFile { line: 2, .. }));
        let e = GroupSpec::parse("degree 3\nfoo\n").unwrap_err();
        assert!(matches!(e, Error::GroupFile { line: 2, .. }));
        let e = GroupSpec::parse("degree x\n").unwrap_err();
        assert!(matches!(e, Error::GroupFile { line: 1, .. }));
        assert!(GroupSpec::parse("# nothing\n").is_err());
    }

    #[test]
    fn no_generators_is_trivial_group() {
        let g = GroupSpec::parse("degree 1\n").unwrap().build(10).unwrap();
        assert_eq!(g.order(), 1);
    }
}
