//! Group files: one JSON object per file, written on a single line.
//!
//! ```json
//! {"name":"s3","degree":3,"generators":[[1,0,2],[1,2,0]],"subgroups":{"A3":[1]}}
//! ```
//!
//! Points are 0-based. A subgroup generator is either an index into
//! `generators` or an explicit image list.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupGenerator {
    Index(usize),
    Images(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, rename = "subgroups")]
    pub named_subgroups: BTreeMap<String, Vec<SubgroupGenerator>>,
}

/// A loaded group with its named subgroups built and checked.
#[derive(Debug, Clone)]
pub struct ResolvedGroup {
    pub spec: GroupSpec,
    pub group: PermGroup,
    pub subgroups: BTreeMap<String, PermGroup>,
}

impl ResolvedGroup {
    pub fn subgroup(&self, name: &str) -> Result<&PermGroup> {
        self.subgroups.get(name).ok_or_else(|| {
            Error::contract(format!(
                "group {} has no subgroup named {name:?}",
                self.spec.name
            ))
        })
    }
}

impl GroupSpec {
    /// A spec whose subgroups are stored as explicit image lists.
    pub fn from_group(name: &str, group: &PermGroup, subgroups: &[(&str, &PermGroup)]) -> Self {
        let images = |g: &PermGroup| -> Vec<Vec<usize>> {
            g.generators().iter().map(|p| p.images().to_vec()).collect()
        };
        GroupSpec {
            name: name.to_string(),
            degree: group.degree(),
            generators: images(group),
            named_subgroups: subgroups
                .iter()
                .map(|(n, h)| {
                    (
                        n.to_string(),
                        images(h)
                            .into_iter()
                            .map(SubgroupGenerator::Images)
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<GroupSpec> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("group specs always serialize")
    }

    /// Validates every generator and builds the group and named subgroups.
    pub fn resolve(&self) -> Result<ResolvedGroup> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, images)| self.permutation(images, &format!("generator {k}")))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::new(self.degree, gens.clone())?;
        let mut subgroups = BTreeMap::new();
        for (name, entries) in &self.named_subgroups {
            let sub_gens = entries
                .iter()
                .enumerate()
                .map(|(k, entry)| match entry {
                    SubgroupGenerator::Index(i) => gens.get(*i).cloned().ok_or_else(|| {
                        Error::contract(format!(
                            "subgroup {name:?} refers to missing generator index {i}"
                        ))
                    }),
                    SubgroupGenerator::Images(images) => {
                        self.permutation(images, &format!("subgroup {name:?} generator {k}"))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let sub = PermGroup::new(self.degree, sub_gens)?;
            if !sub.is_subgroup_of(&group) {
                return Err(Error::NotSubgroup(format!(
                    "subgroup {name:?} of {} has generators outside the group",
                    self.name
                )));
            }
            subgroups.insert(name.clone(), sub);
        }
        Ok(ResolvedGroup {
            spec: self.clone(),
            group,
            subgroups,
        })
    }

    fn permutation(&self, images: &[usize], what: &str) -> Result<Permutation> {
        if images.len() != self.degree {
            return Err(Error::NotBijection {
                degree: self.degree,
                detail: format!("{what} of {} has {} images", self.name, images.len()),
            });
        }
        Permutation::new(images.to_vec()).map_err(|e| match e {
            Error::NotBijection { degree, detail } => Error::NotBijection {
                degree,
                detail: format!("{what} of {}: {detail}", self.name),
            },
            other => other,
        })
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn load_group(path: impl AsRef<Path>) -> Result<ResolvedGroup> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    GroupSpec::parse(&text)?.resolve()
}

pub fn write_group(path: impl AsRef<Path>, spec: &GroupSpec) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, spec.to_line() + "\n").map_err(|e| io_error(path, e))
}
