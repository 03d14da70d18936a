//! Matrix documents.
//!
//! Two JSON forms are accepted:
//!
//! * dense: `{"n": 3, "entries": [[...], [...], [...]]}`, a full symmetric
//!   array whose off-pattern entries must vanish;
//! * coordinates: `{"graph": ..., "coords": [...]}` with `n + |E|` values in
//!   the order of [`pattern_positions`](crate::pattern_positions). `graph` is
//!   either inline (`{"n": 3, "edges": [[1, 2], [1, 3]]}`) or a path to a
//!   graph file, resolved against the matrix file's directory; it may be
//!   omitted when the graph is supplied separately.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::cones::{embed, ConeError, PatternMatrix};
use crate::graph::{parse_graph, Graph, GraphError};
use crate::numerics::{MatrixError, SymMatrix};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("graph reference {path}: {source}")]
    GraphFile {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("graph reference: {0}")]
    Graph(#[from] GraphError),
    #[error("matrix document names a different graph than the one supplied")]
    GraphMismatch,
    #[error("matrix document needs either \"entries\" or \"coords\"")]
    UnknownForm,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GraphRef {
    Inline(Graph),
    Path(String),
}

fn resolve_graph(r: GraphRef, base: Option<&Path>) -> Result<Graph, DocumentError> {
    match r {
        GraphRef::Inline(g) => Ok(g),
        GraphRef::Path(p) => {
            let path = match base {
                Some(dir) if Path::new(&p).is_relative() => dir.join(&p),
                _ => PathBuf::from(&p),
            };
            let text =
                std::fs::read_to_string(&path).map_err(|source| DocumentError::GraphFile {
                    path: path.clone(),
                    source,
                })?;
            Ok(parse_graph(&text)?)
        }
    }
}

/// Reads a matrix document against `graph`. `base` is the directory used to
/// resolve a graph given by relative path.
pub fn read_pattern_matrix(
    text: &str,
    graph: &Graph,
    base: Option<&Path>,
) -> Result<PatternMatrix, DocumentError> {
    let mut value: Value = serde_json::from_str(text)?;
    let obj = value.as_object_mut().ok_or(DocumentError::UnknownForm)?;
    if let Some(g) = obj.remove("graph") {
        let named = resolve_graph(serde_json::from_value(g)?, base)?;
        if &named != graph {
            return Err(DocumentError::GraphMismatch);
        }
    }
    if obj.contains_key("entries") {
        let dense = SymMatrix::deserialize(Value::Object(obj.clone()))?;
        Ok(embed(graph, &dense)?)
    } else if let Some(c) = obj.remove("coords") {
        let coords: Vec<f64> = serde_json::from_value(c)?;
        Ok(PatternMatrix::from_coords(graph, &coords)?)
    } else {
        Err(DocumentError::UnknownForm)
    }
}

/// Reads a coordinate document that carries its own graph.
pub fn read_self_contained(
    text: &str,
    base: Option<&Path>,
) -> Result<PatternMatrix, DocumentError> {
    #[derive(Deserialize)]
    struct Doc {
        graph: GraphRef,
    }
    let doc: Doc = serde_json::from_str(text)?;
    let graph = resolve_graph(doc.graph, base)?;
    read_pattern_matrix(text, &graph, base)
}
