//! The on-disk instance format: a single JSON object with a `vertices` array
//! of unique names and an `arcs` array of `[from, to, colour]` triples.
//! Colours are positive integers; colour 0 is reserved for marking the
//! colourless arcs of an exported closure and is rejected when a document is
//! turned back into an instance.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use rpk_core::digraph::{Arc, ArcColouredDigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub vertices: Vec<String>,
    pub arcs: Vec<(String, String, u32)>,
}

#[derive(Debug)]
pub enum DocumentError {
    Json(serde_json::Error),
    DuplicateVertex(String),
    UnknownVertex(String),
    ColourlessArc(String, String),
}

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocumentError::Json(e) => write!(f, "{}", e),
            DocumentError::DuplicateVertex(name) => {
                write!(f, "vertex name `{}` is declared twice", name)
            }
            DocumentError::UnknownVertex(name) => {
                write!(f, "arc references undeclared vertex `{}`", name)
            }
            DocumentError::ColourlessArc(from, to) => write!(
                f,
                "arc ({},{}) has colour 0, which only marks closure output",
                from, to
            ),
        }
    }
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(DocumentError::Json)
    }

    /// Stable serialization; parse . serialize is the identity.
    pub fn serialize(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document always serializes");
        s.push('\n');
        s
    }

    /// Index of every declared name, rejecting duplicates.
    pub fn name_index(&self) -> Result<BTreeMap<&str, usize>, DocumentError> {
        let mut index = BTreeMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(DocumentError::DuplicateVertex(name.clone()));
            }
        }
        Ok(index)
    }

    /// Builds the digraph, relabelling the document's colour integers to a
    /// contiguous 1..=m palette (equality classes preserved).
    pub fn to_digraph(&self) -> Result<ArcColouredDigraph, String> {
        let index = self.name_index().map_err(|e| e.to_string())?;
        let mut arcs = Vec::with_capacity(self.arcs.len());
        for (from, to, colour) in &self.arcs {
            let u = *index
                .get(from.as_str())
                .ok_or_else(|| DocumentError::UnknownVertex(from.clone()).to_string())?;
            let v = *index
                .get(to.as_str())
                .ok_or_else(|| DocumentError::UnknownVertex(to.clone()).to_string())?;
            if *colour == 0 {
                return Err(DocumentError::ColourlessArc(from.clone(), to.clone()).to_string());
            }
            arcs.push(Arc::new(u, v, *colour));
        }
        ArcColouredDigraph::from_arcs_relabelled(self.vertices.len(), arcs)
            .map_err(|e| e.to_string())
    }

    pub fn from_digraph(d: &ArcColouredDigraph, names: &[String]) -> Self {
        InstanceDocument {
            vertices: names.to_vec(),
            arcs: d
                .arcs()
                .iter()
                .map(|a| (names[a.from.index()].clone(), names[a.to.index()].clone(), a.colour.value()))
                .collect(),
        }
    }

    pub fn name_of(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }
}

/// Default names v0, v1, ... for generated instances.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{}", i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let doc = InstanceDocument {
            vertices: vec!["a".into(), "b".into(), "c".into()],
            arcs: vec![("a".into(), "b".into(), 1), ("b".into(), "c".into(), 7)],
        };
        let text = doc.serialize();
        let back = InstanceDocument::parse(&text).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.serialize(), text);
    }

    #[test]
    fn duplicate_and_unknown_names_are_rejected() {
        let doc = InstanceDocument {
            vertices: vec!["a".into(), "a".into()],
            arcs: vec![],
        };
        assert!(doc.to_digraph().is_err());
        let doc = InstanceDocument {
            vertices: vec!["a".into()],
            arcs: vec![("a".into(), "zz".into(), 1)],
        };
        assert!(doc.to_digraph().is_err());
    }

    #[test]
    fn colour_zero_is_rejected() {
        let doc = InstanceDocument {
            vertices: vec!["a".into(), "b".into()],
            arcs: vec![("a".into(), "b".into(), 0)],
        };
        assert!(doc.to_digraph().unwrap_err().contains("colour 0"));
    }

    #[test]
    fn colours_are_relabelled_contiguously() {
        let doc = InstanceDocument {
            vertices: vec!["a".into(), "b".into(), "c".into()],
            arcs: vec![("a".into(), "b".into(), 5), ("b".into(), "c".into(), 9)],
        };
        let d = doc.to_digraph().unwrap();
        assert_eq!(d.colour_count(), 2);
    }
}
