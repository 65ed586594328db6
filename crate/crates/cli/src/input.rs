//! Complex documents: the JSON input format and the bundled fixtures.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use coalgebra::fixtures;
use coalgebra::simplicial::{from_ordered_complex, minimal_circle, SimplicialSet};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"vertices": [..], "facets": [[..], ..], "basepoint": ".."}`; facets list
/// vertex labels in the order of `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

impl ComplexDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// A bundled complex, pointed at its first vertex.
    pub fn builtin(name: &str) -> Option<Self> {
        let oc = fixtures::complex(name)?;
        let facets = oc
            .facets
            .iter()
            .map(|f| f.iter().map(|&v| oc.vertices[v].clone()).collect())
            .collect();
        Some(ComplexDocument {
            basepoint: oc.vertices.first().cloned(),
            vertices: oc.vertices,
            facets,
        })
    }

    pub fn to_simplicial_set(&self) -> Result<SimplicialSet, CliError> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(CliError::Parse(format!("duplicate vertex {v:?}")));
            }
        }
        let lookup = |v: &String| {
            index
                .get(v.as_str())
                .copied()
                .ok_or_else(|| CliError::Parse(format!("unknown vertex {v:?}")))
        };
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let ids = f.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
            if ids.is_empty() || ids.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Parse(format!("facet {f:?} is not strictly increasing")));
            }
            facets.push(ids);
        }
        let x = from_ordered_complex(&self.vertices, &facets).map_err(|e| CliError::Parse(e.to_string()))?;
        match &self.basepoint {
            None => Ok(x),
            Some(b) => {
                let v = x
                    .find(b)
                    .ok_or_else(|| CliError::Parse(format!("unknown basepoint {b:?}")))?;
                Ok(x.with_basepoint(v)?)
            }
        }
    }
}

/// A named simplicial set to run a command on.
pub struct Subject {
    pub name: String,
    pub set: SimplicialSet,
}

/// Reads a JSON file, or falls back to a bundled fixture named by the
/// argument's file stem (`rp2`, `rp2.json`). The minimal circle `s1` is not a
/// simplicial complex and exists only as a built-in.
pub fn load(arg: &str) -> Result<Subject, CliError> {
    let path = Path::new(arg);
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg).to_string();
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
        let set = ComplexDocument::from_json(&text)?.to_simplicial_set()?;
        return Ok(Subject { name, set });
    }
    let set = match name.as_str() {
        "s1" => minimal_circle(),
        _ => ComplexDocument::builtin(&name)
            .ok_or_else(|| CliError::Parse(format!("{arg}: no such file or bundled fixture")))?
            .to_simplicial_set()?,
    };
    Ok(Subject { name, set })
}

/// The set itself if reduced, else its quotient by a spanning tree at the basepoint.
pub fn reduced(subject: &Subject) -> Result<SimplicialSet, CliError> {
    let x = &subject.set;
    if x.is_reduced() {
        return Ok(x.clone());
    }
    if !x.is_pointed() {
        return Err(CliError::Usage(format!(
            "{} has no basepoint; a reduced model needs one",
            subject.name
        )));
    }
    let r = x.collapse_tree()?;
    r.require_reduced()
        .map_err(|_| CliError::Usage(format!("{} is not connected", subject.name)))?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point() {
        let doc = ComplexDocument::from_json(r#"{"vertices":["a"],"facets":[["a"]]}"#).unwrap();
        assert_eq!(doc.to_simplicial_set().unwrap().f_vector(), vec![1]);
    }

    #[test]
    fn rejected_documents() {
        for text in [
            r#"{"vertices":["a","b"],"facets":[["b","a"]]}"#,
            r#"{"vertices":["a","b"],"facets":[["a","a"]]}"#,
            r#"{"vertices":["a"],"facets":[["c"]]}"#,
            r#"{"vertices":["a"],"facets":[["a"]],"basepoint":"z"}"#,
            r#"{"vertices":["a","a"],"facets":[]}"#,
            r#"{"vertices":["a"],"facets":[[]]}"#,
        ] {
            let parsed = ComplexDocument::from_json(text).and_then(|d| d.to_simplicial_set());
            assert!(matches!(parsed, Err(CliError::Parse(_))), "{text}");
        }
        for text in [
            r#"{"vertices":["a"]"#,
            r#"{"vertices":["a"],"facets":[],"extra":1}"#,
            r#"[]"#,
        ] {
            assert!(ComplexDocument::from_json(text).is_err(), "{text}");
        }
    }

    #[test]
    fn builtins_round_trip() {
        let doc = ComplexDocument::builtin("rp2").unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let x = ComplexDocument::from_json(&text).unwrap().to_simplicial_set().unwrap();
        assert_eq!(x.f_vector(), vec![6, 15, 10]);
        assert!(x.is_pointed());
        assert!(ComplexDocument::builtin("s1").is_none());
    }
}
