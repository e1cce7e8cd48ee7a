//! Text formats shared by all subcommands.
//!
//! * partitions: comma-separated parts, `9,7,2`; the empty partition is `-`
//! * tableaux: rows separated by `;`, entries by `,`, e.g. `1,1,2;2`
//! * 0/1-matrices: rows of digits separated by `;`, e.g. `110;001`
//! * rationals: `p/q` or a plain integer

use qtrsk_core::growth::{DistValue, Matrix01};
use qtrsk_core::weights::{Tableau, TableauFlavor};
use qtrsk_core::{Partition, QTSum, Rat};

/// Parses a rational literal `p/q` (or a plain integer).
pub fn parse_rational(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("invalid rational `{s}`: {e}"))
}

/// Parses a partition literal (`-` for the empty partition).
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for (i, tok) in s.split(',').enumerate() {
        let v: u32 = tok
            .trim()
            .parse()
            .map_err(|_| format!("invalid part `{tok}` at position {i}"))?;
        parts.push(v);
    }
    Partition::new(parts).map_err(|e| format!("invalid partition `{s}`: {e:?}"))
}

/// Parses a tableau literal; the number of allowed entries is the largest
/// entry present (zero rows give the empty tableau).
pub fn parse_tableau(s: &str, flavor: TableauFlavor) -> Result<Tableau, String> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Tableau::from_chain(vec![Partition::empty()], flavor)
            .map_err(|e| format!("{e:?}"));
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (i, row) in s.split(';').enumerate() {
        let mut cells = Vec::new();
        for tok in row.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| format!("invalid entry `{tok}` in row {}", i + 1))?;
            cells.push(v);
        }
        rows.push(cells);
    }
    let m = rows.iter().flatten().copied().max().unwrap_or(0);
    Tableau::from_rows(&rows, m, flavor).map_err(|e| format!("invalid tableau `{s}`: {e:?}"))
}

/// Parses a 0/1-matrix literal.
pub fn parse_matrix(s: &str) -> Result<Matrix01, String> {
    s.trim()
        .parse::<Matrix01>()
        .map_err(|e| format!("invalid matrix `{s}`: {e:?}"))
}

/// Renders a tableau in the row format (empty tableau as `-`).
pub fn render_tableau(t: &Tableau) -> String {
    let rows = t.rows();
    if rows.is_empty() {
        return "-".into();
    }
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Renders an exact (q,t)-rational value as `num / den` in expanded form.
pub fn render_qtsum(v: &QTSum) -> String {
    if v.den.is_one() {
        format!("{}", v.num)
    } else {
        format!("({}) / ({})", v.num, v.den)
    }
}

/// Renders one distribution value in whatever mode it was computed.
pub fn render_value(v: &DistValue) -> String {
    match v {
        DistValue::Qt(x) => render_qtsum(x),
        DistValue::Alpha(x) => format!("{x}"),
        DistValue::Numeric(x) => format!("{x}"),
    }
}
