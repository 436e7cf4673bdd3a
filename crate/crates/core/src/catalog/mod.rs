//! Bundled data (atlas corpus, transcribed table, certificates) and the
//! full-table pipeline.

mod diff;
mod fixtures;

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;

use crate::bounds::{combine_with, BoundContext, BoundRegistry, BoundsRow, ForbiddenList};
use crate::error::{Error, Result};
use crate::graph::{from_graph6, Graph};

pub use diff::{diff, DiffReport, Mismatch};
pub use fixtures::{format_table_row, load_fixtures, parse_fixtures, FixtureRow, FIXTURE_COLUMNS, TABLE_COLUMNS};

pub const DEFAULT_ATLAS: &str = "data/atlas.g6";
pub const DEFAULT_FIXTURES: &str = "data/table1.tsv";
pub const DEFAULT_WITNESSES: &str = "data/witnesses.txt";
pub const DEFAULT_FORBIDDEN: &str = "data/forbidden_mr2.g6";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasEntry {
    pub atlas_number: usize,
    pub graph: Graph,
}

/// The atlas corpus: line `k` of the file is atlas graph `k`.
#[derive(Clone, Debug, Default)]
pub struct Atlas {
    entries: Vec<AtlasEntry>,
}

impl Atlas {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let graph =
                from_graph6(line.trim_end_matches('\r')).map_err(|e| Error::parse(origin, i + 1, e.to_string()))?;
            entries.push(AtlasEntry {
                atlas_number: i + 1,
                graph,
            });
        }
        Ok(Atlas { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, atlas_number: usize) -> Option<&AtlasEntry> {
        atlas_number.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    pub fn graph(&self, atlas_number: usize) -> Result<&Graph> {
        self.get(atlas_number)
            .map(|e| &e.graph)
            .ok_or(Error::UnknownAtlas(atlas_number))
    }

    pub fn entries(&self) -> &[AtlasEntry] {
        &self.entries
    }

    /// `(atlas number, graph)` pairs in atlas order.
    pub fn numbered(&self) -> Vec<(usize, Graph)> {
        self.entries.iter().map(|e| (e.atlas_number, e.graph.clone())).collect()
    }
}

pub fn load_atlas(path: &Path) -> Result<Atlas> {
    Atlas::parse(&read(path)?, &path.display().to_string())
}

pub fn load_forbidden(path: &Path) -> Result<ForbiddenList> {
    ForbiddenList::parse(&read(path)?, &path.display().to_string())
}

pub(crate) fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Row for one atlas entry using every standard bound.
pub fn compute_row(entry: &AtlasEntry, list: &ForbiddenList) -> BoundsRow {
    crate::bounds::combine(&entry.graph, list)
}

/// Rows for the whole corpus keyed by atlas number. Runs on the current rayon
/// pool; the result does not depend on scheduling.
pub fn compute_all(atlas: &Atlas, registry: &BoundRegistry, list: &ForbiddenList) -> BTreeMap<usize, BoundsRow> {
    let ctx = BoundContext::new(list);
    atlas
        .entries
        .par_iter()
        .map(|e| (e.atlas_number, combine_with(&e.graph, registry, &ctx)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// The computed table as TSV, header included.
pub fn render_table(rows: &BTreeMap<usize, BoundsRow>) -> String {
    let mut out = TABLE_COLUMNS.join("\t");
    out.push('\n');
    for (&k, row) in rows {
        out.push_str(&format_table_row(k, row));
        out.push('\n');
    }
    out
}

/// Minimum rank by atlas number, as transcribed.
pub fn known_ranks(fixtures: &[FixtureRow]) -> BTreeMap<usize, usize> {
    fixtures.iter().map(|f| (f.atlas_number, f.mr)).collect()
}
