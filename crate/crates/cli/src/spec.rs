use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use pickylab::chartab::{ctx_parse, CharacterTable};
use pickylab::permgroup::gens_file::load_gens;
use pickylab::permgroup::named::{alternating, cyclic, dihedral, psl2, symmetric};
use pickylab::permgroup::PermGroup;
use pickylab::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Alt(usize),
    Dihedral(usize),
    Cyclic(usize),
    Psl2(u64),
    File(PathBuf),
    /// Table-only mode.
    Ctx(PathBuf),
}

pub enum Resolved {
    Group(PermGroup),
    Table(CharacterTable),
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupSpec> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Other(format!("group spec {s:?} has no ':'")))?;
        let n = || {
            arg.parse::<usize>()
                .map_err(|_| Error::Other(format!("bad size in {s:?}")))
        };
        Ok(match kind {
            "sym" => GroupSpec::Sym(n()?),
            "alt" => GroupSpec::Alt(n()?),
            "dihedral" => GroupSpec::Dihedral(n()?),
            "cyclic" => GroupSpec::Cyclic(n()?),
            "psl2" => GroupSpec::Psl2(
                arg.parse()
                    .map_err(|_| Error::Other(format!("bad q in {s:?}")))?,
            ),
            "file" => GroupSpec::File(PathBuf::from(arg)),
            "ctx" => GroupSpec::Ctx(PathBuf::from(arg)),
            _ => return Err(Error::Other(format!("unknown group kind {kind:?}"))),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Psl2(q) => write!(f, "psl2:{q}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
            GroupSpec::Ctx(p) => write!(f, "ctx:{}", p.display()),
        }
    }
}

impl GroupSpec {
    pub fn resolve(&self, trust: bool) -> Result<Resolved> {
        let bad_file =
            |p: &PathBuf, e: std::io::Error| Error::Other(format!("{}: {e}", p.display()));
        Ok(Resolved::Group(match self {
            GroupSpec::Sym(n) if *n >= 1 => symmetric(*n),
            GroupSpec::Alt(n) if *n >= 1 => alternating(*n),
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::Cyclic(n) if *n >= 1 => cyclic(*n),
            GroupSpec::Psl2(q) => psl2(*q)?,
            GroupSpec::File(p) => load_gens(p)?,
            GroupSpec::Ctx(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| bad_file(p, e))?;
                return Ok(Resolved::Table(ctx_parse(&text, trust)?));
            }
            _ => {
                return Err(Error::Other(format!(
                    "group spec {self} needs a positive size"
                )))
            }
        }))
    }

    /// A file name that identifies the spec in the cache.
    pub fn cache_key(&self) -> String {
        let s: String = self
            .to_string()
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '.' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        format!("{s}-v{}.ctx", env!("CARGO_PKG_VERSION"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_orders() {
        for s in [
            "sym:4",
            "alt:5",
            "dihedral:8",
            "cyclic:6",
            "psl2:7",
            "file:data/sz8.gens",
            "ctx:data/m11.ctx",
        ] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
        let order = |s: &str| match s.parse::<GroupSpec>().unwrap().resolve(false).unwrap() {
            Resolved::Group(g) => g.order(),
            Resolved::Table(_) => unreachable!(),
        };
        assert_eq!(order("sym:4"), 24);
        assert_eq!(order("psl2:7"), 168);
        match "psl2:7"
            .parse::<GroupSpec>()
            .unwrap()
            .resolve(false)
            .unwrap()
        {
            Resolved::Group(g) => assert_eq!(g.degree(), 8),
            Resolved::Table(_) => unreachable!(),
        }
        assert!("foo:3".parse::<GroupSpec>().is_err());
        assert!("sym".parse::<GroupSpec>().is_err());
        assert!("sym:0"
            .parse::<GroupSpec>()
            .unwrap()
            .resolve(false)
            .is_err());
        assert_eq!(
            "file:data/x y.gens"
                .parse::<GroupSpec>()
                .unwrap()
                .cache_key(),
            format!("file_data_x_y.gens-v{}.ctx", env!("CARGO_PKG_VERSION"))
        );
    }
}
