//! The `.gens` generator file format.
//!
//! ```text
//! # comment
//! degree 5
//! (1,2,3,4,5)
//! (3,4,5)
//! ```

use std::path::Path;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

pub fn parse_gens(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: ln + 1,
            column: 1,
            message,
        };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| err(format!("expected `degree N`, found {line:?}")))?;
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad degree {:?}", rest.trim())))?;
                if d == 0 {
                    return Err(err("degree must be positive".into()));
                }
                degree = Some(d);
            }
            Some(d) => {
                let g = Perm::parse_cycles(d, line, 1).map_err(|e| err(e.to_string()))?;
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing degree line".into(),
    })?;
    Ok((degree, gens))
}

pub fn group_from_gens_text(text: &str) -> Result<PermGroup> {
    let (d, gens) = parse_gens(text)?;
    PermGroup::from_generators(d, gens)
}

pub fn load_gens(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Other(format!("{}: {e}", path.display())))?;
    group_from_gens_text(&text)
}

pub fn write_gens(group: &PermGroup) -> String {
    let mut s = format!("degree {}\n", group.degree());
    for g in group.generators() {
        s.push_str(&g.to_cycle_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_errors() {
        let g = group_from_gens_text("# A5\n\ndegree 5\n(1,2,3,4,5)\n(3,4,5) # tail\n").unwrap();
        assert_eq!(g.order(), 60);
        match parse_gens("degree 3\n(1,2,4)\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_gens("(1,2)\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let round = group_from_gens_text(&write_gens(&g)).unwrap();
        assert!(round.same_as(&g));
    }
}
