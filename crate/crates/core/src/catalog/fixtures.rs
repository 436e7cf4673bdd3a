use std::collections::BTreeSet;
use std::path::Path;

use serde::Serialize;

use crate::bounds::{BoundValue, BoundsRow};
use crate::error::{Error, Result};

pub const FIXTURE_COLUMNS: [&str; 17] = [
    "atlas",
    "order",
    "size",
    "mr",
    "mr_by_hand",
    "lb",
    "ub",
    "con",
    "zfs_lb",
    "diam_lb",
    "cc_ub",
    "np_ub",
    "nop_ub",
    "path_ub",
    "is",
    "cv",
    "tree",
];

/// One transcribed row of the published table. Blank cells are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRow {
    pub atlas_number: usize,
    pub order: usize,
    pub size: usize,
    pub mr: usize,
    /// The published minimum rank was not reached by the bounds alone.
    pub mr_by_hand: bool,
    pub lb: usize,
    pub ub: usize,
    pub con: bool,
    pub zfs_lb: Option<usize>,
    pub diam_lb: Option<usize>,
    pub cc_ub: Option<usize>,
    pub np_ub: Option<usize>,
    pub nop_ub: Option<usize>,
    pub path_ub: Option<usize>,
    pub is_flag: Option<bool>,
    pub cv: Option<bool>,
    pub tree: Option<bool>,
}

impl FixtureRow {
    /// The row read back as if it had been computed, for reflexive diffs.
    pub fn as_bounds_row(&self) -> BoundsRow {
        BoundsRow {
            order: self.order,
            size: self.size,
            con: self.con,
            zfs_lb: self.zfs_lb.into(),
            diam_lb: self.diam_lb.into(),
            cc_ub: self.cc_ub.into(),
            np_ub: self.np_ub.into(),
            nop_ub: self.nop_ub.into(),
            path_ub: self.path_ub.into(),
            is_flag: self.is_flag,
            cv: self.cv.unwrap_or(false),
            tree: self.tree.unwrap_or(false),
            lb: self.lb,
            ub: self.ub,
            mr_exact: Some(self.mr),
        }
    }
}

pub fn load_fixtures(path: &Path) -> Result<Vec<FixtureRow>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_fixtures(&text, &path.display().to_string())
}

/// Parses the fixture TSV; rows come back sorted by atlas number.
pub fn parse_fixtures(text: &str, origin: &str) -> Result<Vec<FixtureRow>> {
    let mut lines = text.lines().enumerate();
    let header = lines
        .next()
        .map(|(_, h)| h.trim_end_matches('\r'))
        .ok_or_else(|| Error::parse(origin, 1, "missing header"))?;
    if header.split('\t').collect::<Vec<_>>() != FIXTURE_COLUMNS {
        return Err(Error::parse(origin, 1, format!("unexpected header `{header}`")));
    }
    let mut rows = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, line) in lines {
        let ln = i + 1;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let row = parse_row(line).map_err(|m| Error::parse(origin, ln, m))?;
        if !seen.insert(row.atlas_number) {
            return Err(Error::parse(
                origin,
                ln,
                format!("duplicate atlas number {}", row.atlas_number),
            ));
        }
        if row.lb > row.ub {
            return Err(Error::parse(origin, ln, format!("lb {} exceeds ub {}", row.lb, row.ub)));
        }
        if row.mr < row.lb || row.mr > row.ub {
            return Err(Error::parse(
                origin,
                ln,
                format!("mr {} outside [{}, {}]", row.mr, row.lb, row.ub),
            ));
        }
        rows.push(row);
    }
    rows.sort_by_key(|r| r.atlas_number);
    Ok(rows)
}

fn parse_row(line: &str) -> std::result::Result<FixtureRow, String> {
    let cells: Vec<&str> = line.split('\t').collect();
    if cells.len() != FIXTURE_COLUMNS.len() {
        return Err(format!(
            "expected {} fields, found {}",
            FIXTURE_COLUMNS.len(),
            cells.len()
        ));
    }
    let num = |i: usize| -> std::result::Result<usize, String> {
        cells[i]
            .parse()
            .map_err(|_| format!("column {}: expected a number, found `{}`", FIXTURE_COLUMNS[i], cells[i]))
    };
    let opt_num = |i: usize| -> std::result::Result<Option<usize>, String> {
        if cells[i].is_empty() {
            Ok(None)
        } else {
            num(i).map(Some)
        }
    };
    let opt_flag = |i: usize| -> std::result::Result<Option<bool>, String> {
        match cells[i] {
            "" => Ok(None),
            "T" => Ok(Some(true)),
            "F" => Ok(Some(false)),
            other => Err(format!(
                "column {}: expected T or F, found `{other}`",
                FIXTURE_COLUMNS[i]
            )),
        }
    };
    let flag = |i: usize| -> std::result::Result<bool, String> {
        opt_flag(i)?.ok_or_else(|| format!("column {} must not be blank", FIXTURE_COLUMNS[i]))
    };
    let atlas_number = num(0)?;
    if atlas_number == 0 {
        return Err("atlas numbers start at 1".into());
    }
    Ok(FixtureRow {
        atlas_number,
        order: num(1)?,
        size: num(2)?,
        mr: num(3)?,
        mr_by_hand: flag(4)?,
        lb: num(5)?,
        ub: num(6)?,
        con: flag(7)?,
        zfs_lb: opt_num(8)?,
        diam_lb: opt_num(9)?,
        cc_ub: opt_num(10)?,
        np_ub: opt_num(11)?,
        nop_ub: opt_num(12)?,
        path_ub: opt_num(13)?,
        is_flag: opt_flag(14)?,
        cv: opt_flag(15)?,
        tree: opt_flag(16)?,
    })
}

fn cell(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

pub const TABLE_COLUMNS: [&str; 16] = [
    "atlas", "order", "size", "lb", "ub", "mr_exact", "con", "zfs_lb", "diam_lb", "cc_ub", "np_ub", "nop_ub",
    "path_ub", "is", "cv", "tree",
];

/// One line of the computed table, without the trailing newline.
pub fn format_table_row(atlas: usize, row: &BoundsRow) -> String {
    let bv = |b: BoundValue| cell(b.value());
    [
        atlas.to_string(),
        row.order.to_string(),
        row.size.to_string(),
        row.lb.to_string(),
        row.ub.to_string(),
        cell(row.mr_exact),
        tf(row.con).into(),
        bv(row.zfs_lb),
        bv(row.diam_lb),
        bv(row.cc_ub),
        bv(row.np_ub),
        bv(row.nop_ub),
        bv(row.path_ub),
        row.is_flag.map(tf).unwrap_or("").into(),
        tf(row.cv).into(),
        tf(row.tree).into(),
    ]
    .join("\t")
}
