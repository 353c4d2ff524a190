//! Group files.
//!
//! The canonical form is a JSON object
//! `{"degree": n, "name": ..., "generators": [[1-based images], ...]}` with
//! optional `labels`, `encoding` and `expect` blocks. The text form has a
//! first line `degree n` followed by one generator per line in cycle
//! notation; `#` starts a comment.

use std::path::Path;

use permstar_core::actions::Labels;
use permstar_core::fixtures;
use permstar_core::{PermGroup, Permutation};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "items", rename_all = "lowercase")]
pub enum LabelBlock {
    Points(Vec<usize>),
    Blocks(Vec<Vec<usize>>),
    Tuples(Vec<Vec<usize>>),
}

impl LabelBlock {
    /// 1-based copy of core labels.
    pub fn from_labels(labels: &Labels) -> Self {
        let one = |v: &Vec<usize>| v.iter().map(|x| x + 1).collect::<Vec<_>>();
        match labels {
            Labels::Points(v) => LabelBlock::Points(one(v)),
            Labels::Blocks(v) => LabelBlock::Blocks(v.iter().map(one).collect()),
            Labels::Tuples(v) => LabelBlock::Tuples(v.iter().map(one).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expect {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitive: Option<bool>,
    #[serde(rename = "2transitive", default, skip_serializing_if = "Option::is_none")]
    pub two_transitive: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub encoding: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<LabelBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
}

impl GroupDoc {
    pub fn from_group(g: &PermGroup, name: Option<&str>) -> Self {
        GroupDoc {
            degree: g.degree(),
            name: name.map(str::to_owned),
            generators: g.generators().iter().map(Permutation::to_one_based).collect(),
            source: None,
            encoding: None,
            labels: None,
            expect: None,
        }
    }

    pub fn group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|v| {
                if v.len() != self.degree {
                    return Err(permstar_core::Error::DegreeMismatch { left: self.degree, right: v.len() }.into());
                }
                Ok(Permutation::from_one_based(v)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::new(self.degree, gens)?)
    }

    /// Checks the `expect` block, if any, against `g`.
    pub fn check_expect(&self, g: &PermGroup) -> Result<()> {
        let Some(e) = &self.expect else { return Ok(()) };
        let name = self.name.clone().unwrap_or_else(|| "group".into());
        let fail = |msg: String| Err(CliError::Expectation { name: name.clone(), msg });
        if let Some(order) = e.order {
            let found = g.order()?;
            if found != order {
                return fail(format!("order {found}, expected {order}"));
            }
        }
        if let Some(t) = e.transitive {
            if g.is_transitive() != t {
                return fail(format!("transitive = {}, expected {t}", !t));
            }
        }
        if let Some(t) = e.two_transitive {
            if g.is_two_transitive()? != t {
                return fail(format!("2-transitive = {}, expected {t}", !t));
            }
        }
        Ok(())
    }

    /// One top-level field per line, one generator per line.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("group documents serialize");
        let serde_json::Value::Object(fields) = value else { unreachable!() };
        let compact = |v: &serde_json::Value| serde_json::to_string(v).expect("values serialize");
        let mut lines = Vec::new();
        for (key, v) in &fields {
            let body = match v {
                serde_json::Value::Array(items) if key == "generators" && !items.is_empty() => {
                    let rows: Vec<String> = items.iter().map(|g| format!("    {}", compact(g))).collect();
                    format!("[\n{}\n  ]", rows.join(",\n"))
                }
                _ => compact(v),
            };
            lines.push(format!("  {}: {}", compact(&key.as_str().into()), body));
        }
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }

    pub fn to_text(&self) -> Result<String> {
        let g = self.group()?;
        let mut s = format!("degree {}\n", self.degree);
        if let Some(name) = &self.name {
            s = format!("# {name}\n{s}");
        }
        for x in g.generators() {
            s.push_str(&x.to_cycle_string());
            s.push('\n');
        }
        Ok(s)
    }
}

/// Parses either file form; `origin` is used in error messages.
pub fn parse_group_doc(text: &str, origin: &str) -> Result<GroupDoc> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|source| CliError::Json { origin: origin.into(), source });
    }
    let mut degree = None;
    let mut gens = Vec::new();
    let mut name = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(raw[k + 1..].trim())),
            None => (raw, None),
        };
        let body = body.trim();
        if body.is_empty() {
            if degree.is_none() && name.is_none() {
                name = comment.filter(|c| !c.is_empty()).map(str::to_owned);
            }
            continue;
        }
        let err = |msg: String| CliError::Parse { origin: origin.into(), line, msg };
        match degree {
            None => {
                let rest = body.strip_prefix("degree").ok_or_else(|| err("expected `degree n`".into()))?;
                let n: usize = rest.trim().parse().map_err(|_| err(format!("bad degree {:?}", rest.trim())))?;
                degree = Some(n);
            }
            Some(n) => {
                let p = Permutation::parse_cycles(n, body).map_err(|e| err(e.to_string()))?;
                gens.push(p.to_one_based());
            }
        }
    }
    let degree =
        degree.ok_or_else(|| CliError::Parse { origin: origin.into(), line: 1, msg: "missing `degree n`".into() })?;
    Ok(GroupDoc { degree, name, generators: gens, source: None, encoding: None, labels: None, expect: None })
}

pub fn read_group(path: &Path) -> Result<(PermGroup, GroupDoc)> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    let doc = parse_group_doc(&text, &path.display().to_string())?;
    let g = doc.group()?;
    doc.check_expect(&g)?;
    Ok((g, doc))
}

pub fn write_group(path: &Path, doc: &GroupDoc) -> Result<()> {
    std::fs::write(path, doc.to_json()).map_err(|source| CliError::Io { path: path.into(), source })
}

/// The embedded fixture catalog as group documents with `expect` blocks.
pub fn fixture_documents() -> Vec<GroupDoc> {
    fixtures::names()
        .into_iter()
        .map(|name| {
            let spec = fixtures::spec(name).expect("catalog name");
            let gens = spec
                .generators
                .iter()
                .map(|s| Permutation::parse_cycles(spec.degree, s).expect("catalog generators parse").to_one_based())
                .collect();
            GroupDoc {
                degree: spec.degree,
                name: Some(name.to_owned()),
                generators: gens,
                source: Some(spec.source.to_owned()),
                encoding: None,
                labels: None,
                expect: Some(Expect {
                    order: Some(spec.order),
                    transitive: Some(true),
                    two_transitive: Some(spec.two_transitive),
                }),
            }
        })
        .collect()
}
