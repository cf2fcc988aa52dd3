//! Worked star centres bundled with the crate (`fixtures/goldens.txt`).

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matfq::{parse_matrix, rowspace, Subspace};
use crate::starlab::Kind;

const GOLDENS: &str = include_str!("../fixtures/goldens.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub name: String,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub matrix: String,
    pub kind: Kind,
    pub size: u64,
    pub w_dim: Option<usize>,
    pub equals_top: Option<bool>,
    pub extensions: Vec<Vec<u8>>,
    pub members: Vec<String>,
    pub witness: Option<String>,
    pub outside_top: Vec<String>,
}

impl Golden {
    pub fn field(&self) -> Result<Field> {
        Field::new(self.q)
    }

    pub fn code(&self, text: &str) -> Result<Subspace> {
        rowspace(&parse_matrix(text, &self.field()?)?)
    }

    pub fn centre(&self) -> Result<Subspace> {
        let s = self.code(&self.matrix)?;
        if s.ambient_dim() != self.n || s.dim() + 1 != self.k {
            return Err(Error::Parse(format!(
                "{}: shape does not match n, k",
                self.name
            )));
        }
        Ok(s)
    }
}

fn split_list(v: &str) -> Vec<String> {
    v.split('|')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_num<T: std::str::FromStr>(name: &str, key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::Parse(format!("{name}: bad value for {key}: {v:?}")))
}

fn parse_block(name: &str, entries: &[(String, String)]) -> Result<Golden> {
    let get = |key: &str| {
        entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    };
    let need = |key: &str| get(key).ok_or_else(|| Error::Parse(format!("{name}: missing {key}")));
    let kind = match need("kind")? {
        "star" => Kind::Star,
        "not_maximal" => Kind::NotMaximal,
        "empty" => Kind::Empty,
        other => return Err(Error::Parse(format!("{name}: unknown kind {other:?}"))),
    };
    let extensions = get("extensions")
        .map(|v| {
            split_list(v)
                .iter()
                .map(|w| {
                    w.split_whitespace()
                        .map(|t| parse_num::<u8>(name, "extensions", t))
                        .collect::<Result<Vec<u8>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?
        .unwrap_or_default();
    Ok(Golden {
        name: name.to_string(),
        q: parse_num(name, "q", need("q")?)?,
        n: parse_num(name, "n", need("n")?)?,
        k: parse_num(name, "k", need("k")?)?,
        matrix: need("matrix")?.to_string(),
        kind,
        size: parse_num(name, "size", need("size")?)?,
        w_dim: get("w_dim")
            .map(|v| parse_num(name, "w_dim", v))
            .transpose()?,
        equals_top: get("equals_top")
            .map(|v| parse_num(name, "equals_top", v))
            .transpose()?,
        extensions,
        members: get("members").map(split_list).unwrap_or_default(),
        witness: get("witness").map(str::to_string),
        outside_top: get("outside_top").map(split_list).unwrap_or_default(),
    })
}

/// Parses a fixture file of `[name]` blocks with `key = value` lines.
pub fn parse_goldens(text: &str) -> Result<Vec<Golden>> {
    let mut out = Vec::new();
    let mut current: Option<(String, Vec<(String, String)>)> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if let Some((n, e)) = current.take() {
                out.push(parse_block(&n, &e)?);
            }
            current = Some((name.to_string(), Vec::new()));
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key = value, got {line:?}")))?;
        let (_, entries) = current
            .as_mut()
            .ok_or_else(|| Error::Parse("entry before first [section]".into()))?;
        entries.push((key.trim().to_string(), value.trim().to_string()));
    }
    if let Some((n, e)) = current {
        out.push(parse_block(&n, &e)?);
    }
    Ok(out)
}

/// The bundled worked examples.
pub fn goldens() -> Vec<Golden> {
    parse_goldens(GOLDENS).expect("bundled fixtures parse")
}

pub fn golden(name: &str) -> Option<Golden> {
    goldens().into_iter().find(|g| g.name == name)
}
