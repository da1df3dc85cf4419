//! JSON instance files.
//!
//! * group: `{"name": "Z4", "order": 4, "table": [[...]]}`
//! * subgroup: `{"members": [0, 2]}`
//! * action: `{"acting": ref, "target": ref, "images": {"1": [0, 3, 2, 1]}}`
//!
//! A group reference is a catalog name, a path relative to the referring
//! file, or an inline group object. Elements are renumbered so the identity
//! is `0`; [`LoadedGroup::labels`] records the renumbering.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;

use crate::actions::GroupAction;
use crate::cohomology::Cocycle;
use crate::error::{Error, Result};
use crate::group::{catalog, FiniteGroup, Subgroup};

/// Version tag written into every report.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub order: Option<usize>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupFile),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    #[serde(default)]
    pub acting: Option<GroupRef>,
    #[serde(default)]
    pub target: Option<GroupRef>,
    #[serde(default)]
    pub images: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupFile {
    pub members: Vec<usize>,
}

/// A validated group with its input labelling.
#[derive(Debug, Clone)]
pub struct LoadedGroup {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    /// `labels[input] = internal`
    pub labels: Vec<usize>,
}

impl LoadedGroup {
    pub fn catalog(name: &str) -> Result<Self> {
        let group = if name == "1" { FiniteGroup::trivial() } else { catalog::by_name(name)? };
        let labels = group.elements().collect();
        Ok(LoadedGroup { name: name.to_string(), group: Arc::new(group), labels })
    }

    pub fn from_file(file: &GroupFile, fallback_name: &str) -> Result<Self> {
        if let Some(order) = file.order {
            if order != file.table.len() {
                return Err(Error::OrderMismatch { declared: order, actual: file.table.len() });
            }
        }
        let (group, labels) = FiniteGroup::from_table_with_labels(&file.table)?;
        let name = file.name.clone().unwrap_or_else(|| fallback_name.to_string());
        Ok(LoadedGroup { name, group: Arc::new(group), labels })
    }

    pub fn is_relabelled(&self) -> bool {
        self.labels.iter().enumerate().any(|(i, &l)| i != l)
    }

    pub fn internal(&self, x: usize) -> Result<usize> {
        self.labels.get(x).copied().ok_or(Error::OutOfRange { value: x, order: self.labels.len() })
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, origin: &Path) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("{}: {e}", origin.display())))
}

pub fn load_group(path: &Path) -> Result<LoadedGroup> {
    let file: GroupFile = parse(&read(path)?, path)?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    LoadedGroup::from_file(&file, &stem)
}

/// A `--group`/`--acting` argument: catalog name or file path.
pub fn load_group_arg(arg: &str) -> Result<LoadedGroup> {
    if arg == "1" || catalog::NAMES.contains(&arg) {
        LoadedGroup::catalog(arg)
    } else {
        load_group(Path::new(arg))
    }
}

fn resolve(r: &GroupRef, dir: &Path) -> Result<LoadedGroup> {
    match r {
        GroupRef::Name(s) if s == "1" || catalog::NAMES.contains(&s.as_str()) => LoadedGroup::catalog(s),
        GroupRef::Name(s) => load_group(&dir.join(s)),
        GroupRef::Inline(f) => LoadedGroup::from_file(f, "inline"),
    }
}

fn pick(flag: Option<LoadedGroup>, from_file: Option<LoadedGroup>, role: &str) -> Result<LoadedGroup> {
    match (flag, from_file) {
        (Some(a), Some(b)) if *a.group != *b.group || a.labels != b.labels => Err(Error::ActionMismatch {
            reason: format!("{role} group given on the command line differs from the action file"),
        }),
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => Err(Error::Format(format!("no {role} group given"))),
    }
}

/// A loaded action with both groups.
#[derive(Debug, Clone)]
pub struct LoadedAction {
    pub acting: LoadedGroup,
    pub target: LoadedGroup,
    pub action: GroupAction,
}

pub fn parse_action(file: &ActionFile, dir: &Path, acting: Option<LoadedGroup>, target: Option<LoadedGroup>) -> Result<LoadedAction> {
    let acting = pick(acting, file.acting.as_ref().map(|r| resolve(r, dir)).transpose()?, "acting")?;
    let target = pick(target, file.target.as_ref().map(|r| resolve(r, dir)).transpose()?, "target")?;
    let mut given = Vec::with_capacity(file.images.len());
    for (key, perm) in &file.images {
        let sigma: usize = key.trim().parse().map_err(|_| Error::Format(format!("image key {key:?} is not an index")))?;
        let sigma = acting.internal(sigma)?;
        if perm.len() != target.labels.len() {
            return Err(Error::WrongLength { len: perm.len(), expected: target.labels.len() });
        }
        let mut img = vec![0; perm.len()];
        for (x, &y) in perm.iter().enumerate() {
            img[target.labels[x]] = target.internal(y)?;
        }
        given.push((sigma, img));
    }
    let action = GroupAction::from_generators(acting.group.clone(), target.group.clone(), &given)?;
    Ok(LoadedAction { acting, target, action })
}

pub fn load_action(path: &Path, acting: Option<LoadedGroup>, target: Option<LoadedGroup>) -> Result<LoadedAction> {
    let file: ActionFile = parse(&read(path)?, path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    parse_action(&file, &dir, acting, target)
}

pub fn load_subgroup(path: &Path, target: &LoadedGroup) -> Result<Subgroup> {
    let file: SubgroupFile = parse(&read(path)?, path)?;
    let members = file.members.iter().map(|&x| target.internal(x)).collect::<Result<Vec<_>>>()?;
    Subgroup::new(target.group.clone(), &members)
}

/// `trivial` or comma-separated values, one per acting element, in input
/// labels.
pub fn parse_cocycle(text: &str, loaded: &LoadedAction) -> Result<Cocycle> {
    let text = text.trim();
    if text == "trivial" {
        return Ok(Cocycle::trivial(&loaded.action));
    }
    let raw: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Format(format!("cocycle entry {s:?} is not an index"))))
        .collect::<Result<_>>()?;
    if raw.len() != loaded.acting.labels.len() {
        return Err(Error::WrongLength { len: raw.len(), expected: loaded.acting.labels.len() });
    }
    let mut values = vec![0; raw.len()];
    for (s, &v) in raw.iter().enumerate() {
        values[loaded.acting.labels[s]] = loaded.target.internal(v)?;
    }
    Cocycle::new(&loaded.action, values)
}
