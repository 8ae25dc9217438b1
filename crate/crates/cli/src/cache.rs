//! Character tables stored as CTX files, keyed by group spec and tool version.

use std::path::PathBuf;

use pickylab::chartab::{ctx_parse, ctx_write, dixon_schneider, CharacterTable};
use pickylab::permgroup::PermGroup;
use pickylab::{Error, Result};

use crate::spec::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    /// The stored entry failed to load or verify and was recomputed.
    Rejected,
}

pub struct TableStore {
    dir: Option<PathBuf>,
    trust: bool,
}

impl TableStore {
    pub fn new(enabled: bool, trust: bool) -> TableStore {
        let dir = enabled.then(|| {
            std::env::var_os("PICKYLAB_CACHE")
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from(".pickylab-cache"))
        });
        TableStore { dir, trust }
    }

    pub fn table(
        &self,
        spec: &GroupSpec,
        group: &PermGroup,
    ) -> Result<(CharacterTable, CacheStatus)> {
        let Some(dir) = &self.dir else {
            return Ok((compute(spec, group)?, CacheStatus::Disabled));
        };
        let path = dir.join(spec.cache_key());
        let mut status = CacheStatus::Miss;
        if let Ok(text) = std::fs::read_to_string(&path) {
            match self.load(&text, group) {
                Ok(t) => return Ok((t, CacheStatus::Hit)),
                Err(e) => {
                    eprintln!("cache: rejecting {}: {e}", path.display());
                    status = CacheStatus::Rejected;
                }
            }
        }
        let t = compute(spec, group)?;
        let written =
            std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, ctx_write(&t)));
        if let Err(e) = written {
            eprintln!("cache: cannot write {}: {e}", path.display());
        }
        Ok((t, status))
    }

    fn load(&self, text: &str, group: &PermGroup) -> Result<CharacterTable> {
        let mut t = ctx_parse(text, self.trust)?;
        if t.order != group.order() || !t.complete {
            return Err(Error::Inconsistent(
                "stored table does not belong to this group".into(),
            ));
        }
        let cs = group.class_structure()?;
        if cs.classes.len() != t.num_classes() {
            return Err(Error::Inconsistent("class count differs".into()));
        }
        for (i, c) in t.classes.iter().enumerate() {
            let rep = c
                .representative
                .as_ref()
                .ok_or_else(|| Error::Inconsistent(format!("class {i} has no representative")))?;
            if group.class_of(rep)? != i || cs.classes[i].size != c.size {
                return Err(Error::Inconsistent(format!(
                    "class {i} does not match the group's class order"
                )));
            }
        }
        t.group = Some(group.clone());
        Ok(t)
    }
}

fn compute(spec: &GroupSpec, group: &PermGroup) -> Result<CharacterTable> {
    let mut t = dixon_schneider(group)?;
    t.name = spec.to_string();
    Ok(t)
}
