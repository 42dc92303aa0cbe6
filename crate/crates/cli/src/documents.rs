//! JSON documents for complexes, cochains and vertex maps.
//!
//! Vertices carry string labels in files and are interned to [`VertexId`]s in
//! declaration order, so the declared order is also the canonical order.
//! Orientation is carried by the listed vertex order; scalars are strings
//! (`"3"`, `"-1/2"`) so values stay exact.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use dec_core::{Cochain, DecError, Scalar, SimplicialComplex, VertexId};
use indexmap::IndexMap;
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub top_simplices: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDocument {
    pub degree: usize,
    pub values: IndexMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub vertex_map: IndexMap<String, String>,
}

/// Bidirectional vertex label table.
#[derive(Debug, Clone, Default)]
pub struct Labels {
    names: Vec<String>,
    ids: HashMap<String, VertexId>,
}

impl Labels {
    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0 as usize]
    }

    /// `[a,b,c]`
    pub fn bracket(&self, vertices: &[VertexId]) -> String {
        let names: Vec<&str> = vertices.iter().map(|&v| self.name(v)).collect();
        format!("[{}]", names.join(","))
    }

    fn resolve(&self, label: &str) -> Result<VertexId, CliError> {
        self.id(label).ok_or_else(|| CliError::validation(format!("unknown vertex label {label:?}")))
    }

    fn intern(&mut self, label: &str) -> Result<VertexId, CliError> {
        if self.ids.contains_key(label) {
            return Err(CliError::validation(format!("vertex label {label:?} declared twice")));
        }
        let id = VertexId(self.names.len() as u32);
        self.names.push(label.to_owned());
        self.ids.insert(label.to_owned(), id);
        Ok(id)
    }

    /// Labels `prefix0`, `prefix1`, … for generated complexes.
    pub fn numbered(prefix: &str, count: usize) -> Self {
        let mut labels = Labels::default();
        for i in 0..count {
            labels.intern(&format!("{prefix}{i}")).expect("distinct");
        }
        labels
    }
}

/// A complex together with the labels its vertices were declared with.
#[derive(Debug, Clone)]
pub struct LabeledComplex {
    pub complex: SimplicialComplex,
    pub labels: Labels,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::parse(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Parses `"[a,b]"` into its labels; whitespace around labels is ignored.
pub fn parse_key(key: &str) -> Option<Vec<&str>> {
    let inner = key.trim().strip_prefix('[')?.strip_suffix(']')?;
    let labels: Vec<&str> = inner.split(',').map(str::trim).collect();
    labels.iter().all(|l| !l.is_empty()).then_some(labels)
}

impl ComplexDocument {
    pub fn load(path: &Path) -> Result<LabeledComplex, CliError> {
        read_json::<ComplexDocument>(path)?.build()
    }

    pub fn build(&self) -> Result<LabeledComplex, CliError> {
        let mut labels = Labels::default();
        for v in &self.vertices {
            labels.intern(v)?;
        }
        let mut tops: Vec<Vec<VertexId>> = Vec::new();
        for s in &self.top_simplices {
            tops.push(s.iter().map(|l| labels.resolve(l)).collect::<Result<_, _>>()?);
        }
        // isolated vertices still belong to the complex
        tops.extend((0..labels.names.len() as u32).map(|i| vec![VertexId(i)]));
        let complex = SimplicialComplex::closure(&tops).map_err(|e| match e {
            DecError::DuplicateVertex(v) => {
                CliError::validation(format!("vertex {:?} repeated in a top simplex", labels.name(v)))
            }
            other => other.into(),
        })?;
        Ok(LabeledComplex { complex, labels })
    }

    pub fn from_complex(complex: &LabeledComplex) -> Self {
        let c = &complex.complex;
        let vertices = c.vertices().map(|v| complex.labels.name(v).to_owned()).collect();
        // maximal simplices only, in their chosen orientation
        let mut top_simplices = Vec::new();
        for k in 0..=c.dimension() {
            for (s, oriented) in c.simplices(k) {
                let is_face = c.simplices(k + 1).any(|(t, _)| s.vertices().iter().all(|&v| t.contains(v)));
                if !is_face {
                    top_simplices.push(oriented.vertices().iter().map(|&v| complex.labels.name(v).to_owned()).collect());
                }
            }
        }
        ComplexDocument { vertices, top_simplices }
    }
}

impl CochainDocument {
    pub fn load(path: &Path, on: &LabeledComplex) -> Result<Cochain, CliError> {
        read_json::<CochainDocument>(path)?.to_cochain(on).map_err(|e| match e {
            CliError::Parse { message, .. } => CliError::parse(path, message),
            CliError::Validation(m) => CliError::validation(format!("{}: {m}", path.display())),
        })
    }

    pub fn to_cochain(&self, on: &LabeledComplex) -> Result<Cochain, CliError> {
        let here = Path::new("<cochain>");
        let mut cochain = Cochain::zero(self.degree);
        let mut seen = BTreeMap::new();
        for (key, value) in &self.values {
            let labels = parse_key(key).ok_or_else(|| CliError::parse(here, format!("bad simplex key {key:?}")))?;
            let value: Scalar = value.parse().map_err(|e| CliError::parse(here, e))?;
            let vertices = labels.iter().map(|l| on.labels.resolve(l)).collect::<Result<Vec<_>, _>>()?;
            if vertices.len() != self.degree + 1 {
                return Err(CliError::validation(format!(
                    "key {key} has {} vertices but the cochain has degree {}",
                    vertices.len(),
                    self.degree
                )));
            }
            let (simplex, _) = dec_core::canonicalize(&vertices)
                .map_err(|_| CliError::validation(format!("key {key} repeats a vertex")))?;
            if !on.complex.contains(&simplex) {
                return Err(CliError::validation(format!("simplex {key} is not in the complex")));
            }
            if let Some(previous) = seen.insert(simplex, key.clone()) {
                return Err(CliError::validation(format!("keys {previous} and {key} name the same simplex")));
            }
            cochain.set(&vertices, value)?;
        }
        Ok(cochain)
    }

    /// Every simplex of the cochain's degree, in canonical order, keyed by its
    /// chosen orientation.
    pub fn from_cochain(cochain: &Cochain, on: &LabeledComplex) -> Self {
        let values = on
            .complex
            .simplices(cochain.degree())
            .map(|(_, oriented)| {
                let value = cochain.eval(oriented.vertices()).expect("degree matches");
                (on.labels.bracket(oriented.vertices()), value.to_string())
            })
            .collect();
        CochainDocument { degree: cochain.degree(), values }
    }
}

impl MapDocument {
    pub fn load(
        path: &Path,
        source: &LabeledComplex,
        target: &LabeledComplex,
    ) -> Result<BTreeMap<VertexId, VertexId>, CliError> {
        read_json::<MapDocument>(path)?.resolve(source, target)
    }

    pub fn resolve(
        &self,
        source: &LabeledComplex,
        target: &LabeledComplex,
    ) -> Result<BTreeMap<VertexId, VertexId>, CliError> {
        self.vertex_map
            .iter()
            .map(|(from, to)| Ok((source.labels.resolve(from)?, target.labels.resolve(to)?)))
            .collect()
    }
}
