//! Markdown and CSV rendering of growth tables, plus the reference chains
//! behind the published tables.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::chain::{growth_rates, growth_table, Chain, GrowthRow};
use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::method1::generate_chain_m1;
use crate::method2::generate_chain_m2;
use crate::method3::generate_chain_m3;
use crate::nathanson::build_base;
use crate::profile::round3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "markdown" | "md" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            _ => Err(Error::Parse(format!("unknown table format {s:?}"))),
        }
    }
}

const NA: &str = "N/A";

const MARKDOWN_HEADER: [&str; 8] = [
    "Set",
    "\\|A_i+A_i\\|",
    "\\|A_i-A_i\\|",
    "Cardinality",
    "Diameter",
    "\\|A_i\\|/\\|A_{i-1}\\|",
    "D(A_i)/D(A_{i-1})",
    "Density",
];

const CSV_HEADER: [&str; 8] = [
    "set",
    "sumcard",
    "diffcard",
    "cardinality",
    "diameter",
    "card_ratio",
    "diam_ratio",
    "density",
];

fn ratio_cell(r: Option<Ratio<u64>>) -> String {
    r.map_or_else(|| NA.to_string(), round3)
}

/// The eight cells of a row, in table order.
pub fn row_cells(row: &GrowthRow) -> [String; 8] {
    [
        format!("A_{}", row.index),
        row.sum_card.to_string(),
        row.diff_card.to_string(),
        row.card.to_string(),
        row.diameter.to_string(),
        ratio_cell(row.card_ratio),
        ratio_cell(row.diam_ratio),
        row.density.to_string(),
    ]
}

pub fn render_table(rows: &[GrowthRow], format: TableFormat) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyRows);
    }
    let body: Vec<[String; 8]> = rows.iter().map(row_cells).collect();
    Ok(match format {
        TableFormat::Markdown => {
            let mut out = markdown_line(MARKDOWN_HEADER.iter().copied());
            out.push_str(&markdown_line(std::iter::repeat_n("---", 8)));
            for cells in &body {
                out.push_str(&markdown_line(cells.iter().map(String::as_str)));
            }
            out
        }
        TableFormat::Csv => {
            let mut out = CSV_HEADER.join(",");
            out.push('\n');
            for cells in &body {
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
    })
}

fn markdown_line<'a>(cells: impl Iterator<Item = &'a str>) -> String {
    let mut line = String::from("|");
    for c in cells {
        let _ = write!(line, " {c} |");
    }
    line.push('\n');
    line
}

pub fn conway_set() -> IntSet {
    IntSet::new([0, 2, 3, 4, 7, 11, 12, 14]).expect("constant")
}

/// The chain behind published table 1, 2 or 3, with `len` sets.
pub fn reference_chain(table: u8, len: usize) -> Result<Chain> {
    match table {
        1 => generate_chain_m1(&conway_set(), 17, len),
        2 => generate_chain_m2(&build_base(4, 1, 3)?, len),
        3 => generate_chain_m3(len),
        _ => Err(Error::BadParams(format!(
            "no reference chain for table {table}"
        ))),
    }
}

/// Row count of published tables 1-3.
pub fn reference_len(table: u8) -> usize {
    if table == 3 {
        9
    } else {
        7
    }
}

pub fn reference_table(table: u8, format: TableFormat) -> Result<String> {
    if table == 4 {
        return growth_summary(format);
    }
    let chain = reference_chain(table, reference_len(table))?;
    render_table(&growth_table(&chain), format)
}

fn rate_cell(r: Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Growth summary: the three filling-in rows are quoted constants, the three
/// non-filling-in rows are measured on nine-set reference chains.
pub fn growth_summary(format: TableFormat) -> Result<String> {
    let mut rows: Vec<[String; 6]> = vec![
        literal_row([
            "Filling in 1",
            "8",
            "14",
            ">3*|A_{2i-1}|",
            ">3*Diam(A_{2i-1})",
            "Exponential",
        ]),
        literal_row(["Filling in 2", "11", "19", "20", "20", "Linear"]),
        literal_row(["Non-Filling in", "11", "18", "4", "8", "Linear"]),
    ];
    for table in 1..=3u8 {
        let chain = reference_chain(table, 9)?;
        let g = growth_rates(&chain)?;
        let first = chain.profile(1);
        let odd_diams: Vec<u64> = chain
            .profiles()
            .iter()
            .step_by(2)
            .map(|p| p.diameter)
            .collect();
        let uniform = odd_diams.windows(3).all(|w| w[1] - w[0] == w[2] - w[1]);
        let mut diam_rate = rate_cell(g.diam_rate);
        if !uniform {
            diam_rate.push_str(" (avg)");
        }
        let (card, diam) = if table == 2 {
            let a = &build_base(4, 1, 3)?.a;
            (
                format!("{} (A) / {} (A_1)", a.len(), first.card),
                format!(
                    "{} (A) / {} (A_1)",
                    a.diameter().unwrap_or(0),
                    first.diameter
                ),
            )
        } else {
            (first.card.to_string(), first.diameter.to_string())
        };
        rows.push([
            format!("Method {table}"),
            card,
            diam,
            rate_cell(g.card_rate),
            diam_rate,
            "Linear".to_string(),
        ]);
    }
    let header = [
        "Method",
        "|A_1|",
        "A_1 Diam.",
        "Card. Rate",
        "Diam. Rate",
        "Type",
    ];
    Ok(match format {
        TableFormat::Markdown => {
            let esc = |s: &str| s.replace('|', "\\|");
            let mut out = markdown_line(
                header
                    .iter()
                    .map(|h| esc(h))
                    .collect::<Vec<_>>()
                    .iter()
                    .map(String::as_str),
            );
            out.push_str(&markdown_line(std::iter::repeat_n("---", 6)));
            for r in &rows {
                out.push_str(&markdown_line(
                    r.iter()
                        .map(|c| esc(c))
                        .collect::<Vec<_>>()
                        .iter()
                        .map(String::as_str),
                ));
            }
            out
        }
        TableFormat::Csv => {
            let mut out = "method,a1_card,a1_diam,card_rate,diam_rate,type\n".to_string();
            for r in &rows {
                out.push_str(&r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
            out
        }
    })
}

fn literal_row(cells: [&str; 6]) -> [String; 6] {
    cells.map(str::to_string)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
