//! Text renderings of Betti tables: JSON, CSV, and an ASCII grid.

use std::fmt::Write;

use serde::Serialize;

use crate::error::Result;
use crate::resolutions::Note;
use crate::table::BettiTable;

#[derive(Serialize)]
struct TableView<'a> {
    codim: usize,
    betti: Vec<(usize, i64, u64)>,
    m: Vec<i64>,
    #[serde(rename = "M")]
    big_m: Vec<i64>,
    total: Vec<u64>,
    pure: bool,
    multiplicity: u64,
    #[serde(skip_serializing_if = "<[Note]>::is_empty")]
    notes: &'a [Note],
}

/// One-line JSON object; `notes` is omitted when empty.
pub fn to_json(table: &BettiTable, notes: &[Note]) -> Result<String> {
    let (m, big_m) = table.shifts();
    let view = TableView {
        codim: table.codim(),
        betti: table.entries().collect(),
        m,
        big_m,
        total: table.totals(),
        pure: table.is_pure(),
        multiplicity: table.multiplicity()?,
        notes,
    };
    Ok(serde_json::to_string(&view).expect("table view serializes"))
}

pub fn to_csv(table: &BettiTable) -> String {
    let mut out = String::from("i,j,count\n");
    for (i, j, n) in table.entries() {
        writeln!(out, "{i},{j},{n}").unwrap();
    }
    out
}

/// Grid with one row per homological index and one column per degree in
/// the occurring range. Zero cells print as `.`; with `color`, nonzero
/// cells are bold.
pub fn to_ascii(table: &BettiTable, color: bool) -> String {
    let lo = table.entries().map(|e| e.1).min().unwrap_or(0);
    let hi = table.entries().map(|e| e.1).max().unwrap_or(0);
    let c = table.codim();
    let cell = |i: usize, j: i64| match table.get(i, j) {
        0 => ".".to_string(),
        n => n.to_string(),
    };
    let width = (lo..=hi)
        .map(|j| j.to_string().len())
        .chain((0..=c).flat_map(|i| (lo..=hi).map(move |j| cell(i, j).len())))
        .max()
        .unwrap_or(1);
    let label = c.to_string().len().max(3);

    let mut out = String::new();
    write!(out, "{:>w$} ", "i\\j", w = label + 1).unwrap();
    for j in lo..=hi {
        write!(out, " {j:>width$}").unwrap();
    }
    out.push('\n');
    for i in 0..=c {
        write!(out, "{:>w$}: ", i, w = label).unwrap();
        for j in lo..=hi {
            let text = format!("{:>width$}", cell(i, j));
            if color && table.get(i, j) != 0 {
                write!(out, " \x1b[1m{text}\x1b[0m").unwrap();
            } else {
                write!(out, " {text}").unwrap();
            }
        }
        out.push('\n');
    }
    let totals: Vec<String> = std::iter::once(1)
        .chain(table.totals())
        .map(|n| n.to_string())
        .collect();
    writeln!(out, "total: {}", totals.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn veronese() -> BettiTable {
        BettiTable::from_entries(3, [(1, 2, 6), (2, 3, 8), (3, 4, 3)]).unwrap()
    }

    #[test]
    fn json_matches_fixed_layout() {
        assert_eq!(
            to_json(&veronese(), &[]).unwrap(),
            r#"{"codim":3,"betti":[[0,0,1],[1,2,6],[2,3,8],[3,4,3]],"m":[2,3,4],"M":[2,3,4],"total":[6,8,3],"pure":true,"multiplicity":4}"#
        );
    }

    #[test]
    fn csv_lists_entries() {
        assert_eq!(
            to_csv(&veronese()),
            "i,j,count\n0,0,1\n1,2,6\n2,3,8\n3,4,3\n"
        );
    }

    #[test]
    fn ascii_grid() {
        let expected = [
            " i\\j  0 1 2 3 4",
            "  0:  1 . . . .",
            "  1:  . . 6 . .",
            "  2:  . . . 8 .",
            "  3:  . . . . 3",
            "total: 1 6 8 3\n",
        ]
        .join("\n");
        assert_eq!(to_ascii(&veronese(), false), expected);
        assert!(to_ascii(&veronese(), true).contains("\x1b[1m6\x1b[0m"));
    }
}
