//! Tree text format.
//!
//! ```text
//! # comments run to end of line
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-blank line is `n`, followed by `n - 1` lines `u v`
//! (0-indexed, whitespace-separated).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rmatch_core::Tree;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TreeFileError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing vertex count")]
    MissingHeader,
    #[error("invalid tree: {0}")]
    Invalid(#[from] rmatch_core::Error),
}

pub fn parse_tree(text: &str) -> Result<Tree, TreeFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, content)| !content.is_empty());

    let (line, header) = lines.next().ok_or(TreeFileError::MissingHeader)?;
    let n: usize = header.parse().map_err(|_| TreeFileError::Syntax {
        line,
        message: format!("expected vertex count, found {header:?}"),
    })?;

    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| TreeFileError::Syntax {
                line,
                message: format!("expected a vertex label, found {s:?}"),
            })
        };
        match fields.as_slice() {
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => {
                return Err(TreeFileError::Syntax {
                    line,
                    message: format!("expected \"u v\", found {content:?}"),
                })
            }
        }
    }
    Ok(Tree::new(n, &edges)?)
}

pub fn read_tree_file(path: &Path) -> Result<Tree, TreeFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| TreeFileError::Read {
        path: path.to_owned(),
        source,
    })?;
    parse_tree(&text)
}

pub fn format_tree(tree: &Tree) -> String {
    let mut out = format!("{}\n", tree.n());
    for (u, v) in tree.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# path on four vertices\n4\n0 1 # first\n\n1 2\n2 3\n";
        assert_eq!(parse_tree(text).unwrap(), Tree::path(4).unwrap());
    }

    #[test]
    fn single_vertex() {
        assert_eq!(parse_tree("1\n").unwrap().n(), 1);
    }

    #[test]
    fn roundtrip() {
        let t = Tree::spider(2, 3).unwrap();
        assert_eq!(parse_tree(&format_tree(&t)).unwrap(), t);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_tree("# nothing"), Err(TreeFileError::MissingHeader)));
        assert!(matches!(
            parse_tree("x\n"),
            Err(TreeFileError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_tree("3\n0 1\n1\n"),
            Err(TreeFileError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_tree("3\n0 1\n1 -2\n"),
            Err(TreeFileError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_tree("3\n0 1\n"),
            Err(TreeFileError::Invalid(rmatch_core::Error::Disconnected { components: 2 }))
        ));
    }
}
