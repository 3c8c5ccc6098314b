//! Loading complexes from files or corpus names.

use std::path::Path;

use anyhow::{bail, Context, Result};
use wsc_core::complex::{FlagComplex, Simplex};
use wsc_core::corpus;
use wsc_core::graph::Graph;
use wsc_core::io::{self, Document};
use wsc_core::thickening::CellComplex;

use crate::report::digest;

/// A loaded input: the parsed document, its digest and a display name.
pub struct Input {
    pub name: String,
    pub sha256: String,
    pub doc: Document,
}

/// A path to an existing file, else a corpus name.
pub fn load(spec: &str) -> Result<Input> {
    let bytes = if Path::new(spec).is_file() {
        std::fs::read(spec).with_context(|| format!("reading {spec}"))?
    } else {
        corpus::resolve(spec)
            .with_context(|| format!("`{spec}` is neither a file nor a corpus name"))?
            .to_bytes()
    };
    let doc = io::parse_document(&bytes).with_context(|| format!("parsing {spec}"))?;
    Ok(Input {
        name: spec.to_string(),
        sha256: digest(&bytes),
        doc,
    })
}

impl Input {
    /// The clique complex of the input graph.
    pub fn flag(&self) -> FlagComplex {
        FlagComplex::new(self.doc.graph.clone())
    }

    pub fn graph(&self) -> &Graph {
        &self.doc.graph
    }

    /// The input as a cell complex (`c` lines declare maximal cells).
    pub fn cells(&self) -> Result<CellComplex> {
        let doc = Document {
            graph: self.doc.graph.clone(),
            cells: self.doc.cells.clone(),
            maps: Vec::new(),
        };
        Ok(CellComplex::from_document(doc)?)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        Ok(self.doc.graph.id_of_str(label)?)
    }

    /// Comma-separated labels spanning a simplex.
    pub fn simplex(&self, x: &FlagComplex, labels: &str) -> Result<Simplex> {
        let ids = labels.split(',').map(|l| self.vertex(l)).collect::<Result<Vec<_>>>()?;
        Ok(x.simplex(&ids)?)
    }
}

/// Whitespace-separated vertex labels; `#` starts a comment.
pub fn read_label_list(path: &str, g: &Graph) -> Result<Vec<usize>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let mut ids = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for label in line.split_whitespace() {
            ids.push(g.id_of_str(label)?);
        }
    }
    if ids.is_empty() {
        bail!("{path} lists no vertices");
    }
    Ok(ids)
}
