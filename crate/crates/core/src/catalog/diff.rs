use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::FixtureRow;
use crate::bounds::{BoundValue, BoundsRow};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub atlas_number: usize,
    pub column: &'static str,
    pub expected: String,
    pub computed: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.atlas_number, self.column, self.expected, self.computed
        )
    }
}

/// Outcome of comparing computed rows with the transcribed table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub rows_compared: usize,
    pub connected_rows: usize,
    pub mismatches: Vec<Mismatch>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Mismatch count per column.
    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for m in &self.mismatches {
            *out.entry(m.column).or_insert(0) += 1;
        }
        out
    }

    pub fn for_column(&self, column: &str) -> impl Iterator<Item = &Mismatch> {
        let column = column.to_string();
        self.mismatches.iter().filter(move |m| m.column == column)
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "rows compared: {} ({} connected), mismatches: {}",
            self.rows_compared,
            self.connected_rows,
            self.mismatches.len()
        );
        for (col, n) in self.counts() {
            s.push_str(&format!("\n  {col}: {n}"));
        }
        s
    }
}

fn show(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn show_flag(v: Option<bool>) -> String {
    match v {
        Some(true) => "T".into(),
        Some(false) => "F".into(),
        None => String::new(),
    }
}

/// Compares every fixture row against the computed row for the same atlas graph.
///
/// Relations: equality for order, size, connectivity and LB everywhere; on
/// connected rows also equality of each bound column (presence and value) and
/// the IS, CV and Tree flags, plus IS true exactly when mr >= 3. Computed UB
/// must be at least the published UB and at least mr. Whenever the computed
/// row pins the minimum rank (trees, disconnected sums, LB = UB) it must equal
/// the published mr.
pub fn diff(fixtures: &[FixtureRow], computed: &BTreeMap<usize, BoundsRow>) -> Result<DiffReport> {
    let missing: Vec<usize> = fixtures
        .iter()
        .map(|f| f.atlas_number)
        .filter(|k| !computed.contains_key(k))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Domain(format!("no computed row for atlas numbers {missing:?}")));
    }
    let mut report = DiffReport::default();
    for f in fixtures {
        let c = &computed[&f.atlas_number];
        report.rows_compared += 1;
        let mut push = |column: &'static str, expected: String, computed: String| {
            report.mismatches.push(Mismatch {
                atlas_number: f.atlas_number,
                column,
                expected,
                computed,
            })
        };
        if f.order != c.order {
            push("order", f.order.to_string(), c.order.to_string());
        }
        if f.size != c.size {
            push("size", f.size.to_string(), c.size.to_string());
        }
        if f.con != c.con {
            push("con", show_flag(Some(f.con)), show_flag(Some(c.con)));
        }
        if f.lb != c.lb {
            push("lb", f.lb.to_string(), c.lb.to_string());
        }
        if c.ub < f.ub {
            push("ub", format!(">={}", f.ub), c.ub.to_string());
        }
        if f.mr > c.ub {
            push("mr_bracket", f.mr.to_string(), format!("ub {}", c.ub));
        }
        match c.mr_exact {
            Some(m) if m != f.mr => push("mr", f.mr.to_string(), m.to_string()),
            None if c.tree => push("mr", f.mr.to_string(), String::new()),
            _ => {}
        }
        if !f.con {
            continue;
        }
        report.connected_rows += 1;
        let columns: [(&'static str, Option<usize>, BoundValue); 6] = [
            ("zfs_lb", f.zfs_lb, c.zfs_lb),
            ("diam_lb", f.diam_lb, c.diam_lb),
            ("cc_ub", f.cc_ub, c.cc_ub),
            ("np_ub", f.np_ub, c.np_ub),
            ("nop_ub", f.nop_ub, c.nop_ub),
            ("path_ub", f.path_ub, c.path_ub),
        ];
        for (name, want, got) in columns {
            if want != got.value() {
                push(name, show(want), show(got.value()));
            }
        }
        if f.is_flag != c.is_flag {
            push("is", show_flag(f.is_flag), show_flag(c.is_flag));
        }
        if c.is_flag != Some(f.mr >= 3) {
            push("is_mr", format!("mr {}", f.mr), show_flag(c.is_flag));
        }
        if f.cv != Some(c.cv) {
            push("cv", show_flag(f.cv), show_flag(Some(c.cv)));
        }
        if f.tree != Some(c.tree) {
            push("tree", show_flag(f.tree), show_flag(Some(c.tree)));
        }
    }
    Ok(report)
}
