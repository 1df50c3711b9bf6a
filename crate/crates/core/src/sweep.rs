//! Catalog sweeps: choosing groups, pairing them with normal subgroups, and the
//! search for pairs whose graph is connected, incomplete and regular.

use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::PrimePower;
use crate::catalog::{default_catalog, Family};
use crate::classes::ClassData;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupfile::GroupSpec;
use crate::subgroup::Subgroup;
use crate::theorems::{check_main_theorem, CheckOptions, Status, SweepPair, Witness};

/// Which normal subgroups of G a command looks at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalSelector {
    /// N = G.
    Whole,
    /// Every normal subgroup.
    Auto,
    /// Position in the sorted normal-subgroup list.
    Index(usize),
    /// Subgroup generated by the permutations in a group file.
    File(PathBuf),
}

impl FromStr for NormalSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "self" => Ok(NormalSelector::Whole),
            "auto" => Ok(NormalSelector::Auto),
            _ => {
                if let Some(path) = s.strip_prefix("file:") {
                    Ok(NormalSelector::File(PathBuf::from(path)))
                } else {
                    s.parse()
                        .map(NormalSelector::Index)
                        .map_err(|_| Error::InvalidSelector(s.to_string()))
                }
            }
        }
    }
}

impl NormalSelector {
    /// Selected subgroups paired with their index in `g.normal_subgroups()`.
    pub fn resolve(&self, g: &FiniteGroup) -> Result<Vec<(usize, Subgroup)>> {
        let normals = g.normal_subgroups();
        let position = |s: &Subgroup| normals.iter().position(|n| n == s).expect("normal subgroup is listed");
        match self {
            NormalSelector::Whole => {
                let whole = Subgroup::whole(g.order());
                Ok(vec![(position(&whole), whole)])
            }
            NormalSelector::Auto => Ok(normals.iter().cloned().enumerate().collect()),
            NormalSelector::Index(k) => normals
                .get(*k)
                .cloned()
                .map(|s| vec![(*k, s)])
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "normal subgroup index {k} out of range (group has {})",
                        normals.len()
                    ))
                }),
            NormalSelector::File(path) => {
                let spec = GroupSpec::read(path)?;
                if g.degree() != Some(spec.degree) {
                    return Err(Error::InvalidParameter(format!(
                        "subgroup file degree {} does not match the group",
                        spec.degree
                    )));
                }
                let seed = spec
                    .generators
                    .iter()
                    .map(|p| {
                        g.index_of(p)
                            .ok_or_else(|| Error::InvalidParameter(format!("{p} is not an element of the group")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let sub = g.subgroup_generated(&seed);
                g.require_normal(&sub)?;
                Ok(vec![(position(&sub), sub)])
            }
        }
    }
}

/// Group-name filter: comma-separated names, where a trailing `*` matches any
/// name with that prefix. An empty filter matches everything.
#[derive(Clone, Debug, Default)]
pub struct GroupFilter(Vec<String>);

impl GroupFilter {
    pub fn parse(s: &str) -> Self {
        GroupFilter(
            s.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(String::from)
                .collect(),
        )
    }

    pub fn matches(&self, name: &str) -> bool {
        self.0.is_empty()
            || self.0.iter().any(|p| match p.strip_suffix('*') {
                Some(prefix) => name.starts_with(prefix),
                None => p == name,
            })
    }
}

/// Default-catalog entries passing the filter with order at most `max_order`.
pub fn select_catalog(filter: &GroupFilter, max_order: usize, large: bool) -> Vec<Family> {
    default_catalog(large)
        .into_iter()
        .filter(|f| f.expected_order().is_some_and(|o| o <= max_order))
        .filter(|f| filter.matches(&f.to_string()))
        .collect()
}

/// Builds each group and pairs it with all of its normal subgroups.
pub fn sweep_pairs(families: &[Family], cap: usize) -> Result<Vec<SweepPair>> {
    let groups: Vec<Result<(String, Arc<FiniteGroup>, Vec<Subgroup>)>> = families
        .par_iter()
        .map(|f| {
            let g = f.build(cap)?;
            let normals = g.normal_subgroups();
            Ok((f.to_string(), Arc::new(g), normals))
        })
        .collect();
    let mut pairs = Vec::new();
    for (group_index, entry) in groups.into_iter().enumerate() {
        let (name, group, normals) = entry?;
        for (normal_index, normal) in normals.into_iter().enumerate() {
            pairs.push(SweepPair {
                group_name: name.clone(),
                group_index,
                group: Arc::clone(&group),
                normal,
                normal_index,
            });
        }
    }
    Ok(pairs)
}

/// A pair whose graph is connected, incomplete and regular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub group: String,
    pub subgroup: String,
    pub class_sizes: Vec<u64>,
    pub vertices: Vec<u64>,
    pub main_theorem: Status,
    pub prime: Option<u64>,
    pub centers_differ: bool,
}

pub fn search(pairs: &[SweepPair]) -> Result<Vec<SearchHit>> {
    let found: Vec<Result<Option<SearchHit>>> = pairs
        .par_iter()
        .map(|pair| {
            let cd = ClassData::compute(&pair.group, &pair.normal)?;
            let graph = cd.graph();
            if !(graph.is_connected() && !graph.is_complete() && graph.is_regular()) {
                return Ok(None);
            }
            let outcome = check_main_theorem(&cd, &CheckOptions::default());
            let prime = match &outcome.witness {
                Witness::MainTheorem {
                    prime: Some(PrimePower::Prime(p)),
                    ..
                } => Some(*p),
                _ => None,
            };
            Ok(Some(SearchHit {
                group: pair.group_name.clone(),
                subgroup: pair.descriptor(),
                class_sizes: cd.cs_values().to_vec(),
                vertices: graph.vertices().to_vec(),
                main_theorem: outcome.status,
                prime,
                centers_differ: cd.center_of_normal() != cd.normal_cap_center(),
            }))
        })
        .collect();
    found.into_iter().filter_map(Result::transpose).collect()
}
