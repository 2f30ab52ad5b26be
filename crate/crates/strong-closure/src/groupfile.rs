//! Line-oriented group files:
//!
//! ```text
//! # optional comments
//! degree: 7
//! gen: (1 2 3 4 5 6 7)
//! gen: (2 7)(3 6)(4 5)
//! ```
//!
//! `degree:` must come first; zero `gen:` lines give the trivial group; `#`
//! starts a comment anywhere on a line; blank lines are ignored. Parse errors
//! carry the file position.

use std::path::Path;

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

pub fn parse_group_str(source: &str, origin: &str) -> Result<Group> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Perm> = Vec::new();
    for (lineno, raw) in source.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::GroupFileParse {
            path: origin.to_string(),
            line: lineno + 1,
            msg,
        };
        if let Some(rest) = line.strip_prefix("degree:") {
            if degree.is_some() {
                return Err(err("duplicate degree line".into()));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid degree {:?}", rest.trim())))?;
            if n == 0 {
                return Err(err("degree must be positive".into()));
            }
            degree = Some(n);
        } else if let Some(rest) = line.strip_prefix("gen:") {
            let n = degree.ok_or_else(|| err("gen line before degree line".into()))?;
            let perm = Perm::parse(n, rest.trim()).map_err(|e| err(e.to_string()))?;
            gens.push(perm);
        } else {
            return Err(err(format!("unrecognized line {line:?}")));
        }
    }
    let degree = degree.ok_or_else(|| Error::GroupFileParse {
        path: origin.to_string(),
        line: source.lines().count() + 1,
        msg: "missing degree line".into(),
    })?;
    Group::from_generators(degree, gens)
}

pub fn parse_group_file(path: &Path) -> Result<CatalogEntry> {
    let source = std::fs::read_to_string(path)?;
    let origin = path.display().to_string();
    let group = parse_group_str(&source, &origin)?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| origin.clone());
    Ok(CatalogEntry::from_group(
        &id,
        &format!("file:{origin}"),
        group,
    ))
}

pub fn group_to_string(g: &Group) -> String {
    let mut out = format!("degree: {}\n", g.degree());
    for gen in g.generators() {
        out.push_str(&format!("gen: {gen}\n"));
    }
    out
}

pub fn write_group_file(g: &Group, path: &Path) -> Result<()> {
    std::fs::write(path, group_to_string(g))?;
    Ok(())
}
