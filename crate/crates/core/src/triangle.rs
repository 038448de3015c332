//! Materialized slices of the Hosoya triangle: rows, slash and backslash
//! diagonals, and the median (whose entries are the squared Fibonacci
//! numbers). Slices are eager lists of coordinate-tagged points.

use num_bigint::BigInt;
use serde_json::json;

use crate::error::{domain, Result};
use crate::fib::{hosoya, hosoya_general, SeedPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceKind {
    Row,
    Slash,
    Backslash,
    Median,
}

/// One triangle entry with its coordinates: value = H(r, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePoint {
    pub r: i64,
    pub k: i64,
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleSlice {
    pub kind: SliceKind,
    pub start: i64,
    pub points: Vec<TrianglePoint>,
}

impl TriangleSlice {
    pub fn values(&self) -> Vec<BigInt> {
        self.points.iter().map(|p| p.value.clone()).collect()
    }
}

fn point(r: i64, k: i64) -> Result<TrianglePoint> {
    Ok(TrianglePoint {
        r,
        k,
        value: hosoya(r, k)?,
    })
}

/// The r-th row, entries H(r, 1) .. H(r, r).
pub fn row(r: i64) -> Result<TriangleSlice> {
    if r < 1 {
        return Err(domain(format!("triangle row requires r >= 1, got {r}")));
    }
    let points = (1..=r).map(|k| point(r, k)).collect::<Result<_>>()?;
    Ok(TriangleSlice {
        kind: SliceKind::Row,
        start: r,
        points,
    })
}

/// The r-th row of the triangle seeded with (a, b).
pub fn row_seeded(seed: &SeedPair, r: i64) -> Result<TriangleSlice> {
    if r < 1 {
        return Err(domain(format!("triangle row requires r >= 1, got {r}")));
    }
    let points = (1..=r)
        .map(|k| {
            Ok(TrianglePoint {
                r,
                k,
                value: hosoya_general(seed, r, k)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(TriangleSlice {
        kind: SliceKind::Row,
        start: r,
        points,
    })
}

/// First `len` points of the m-th backslash diagonal:
/// H(m+j, m) = F(m) * F(j+1) for j = 0 .. len-1.
pub fn backslash_diagonal(m: i64, len: i64) -> Result<TriangleSlice> {
    if m < 1 || len < 1 {
        return Err(domain(format!(
            "backslash diagonal requires m >= 1 and len >= 1, got ({m}, {len})"
        )));
    }
    let points = (0..len).map(|j| point(m + j, m)).collect::<Result<_>>()?;
    Ok(TriangleSlice {
        kind: SliceKind::Backslash,
        start: m,
        points,
    })
}

/// First `len` points of the n-th slash diagonal:
/// H(n+j, j+1) = F(n) * F(j+1), the mirror of `backslash_diagonal`.
pub fn slash_diagonal(n: i64, len: i64) -> Result<TriangleSlice> {
    if n < 1 || len < 1 {
        return Err(domain(format!(
            "slash diagonal requires n >= 1 and len >= 1, got ({n}, {len})"
        )));
    }
    let points = (0..len).map(|j| point(n + j, j + 1)).collect::<Result<_>>()?;
    Ok(TriangleSlice {
        kind: SliceKind::Slash,
        start: n,
        points,
    })
}

/// First `len` points of the median: H(2i-1, i) = F(i)^2.
pub fn median(len: i64) -> Result<TriangleSlice> {
    if len < 1 {
        return Err(domain(format!("median requires len >= 1, got {len}")));
    }
    let points = (1..=len).map(|i| point(2 * i - 1, i)).collect::<Result<_>>()?;
    Ok(TriangleSlice {
        kind: SliceKind::Median,
        start: 1,
        points,
    })
}

/// Rows 1..=rows as decimal strings, for rendering and export.
pub fn rows_strings(seed: &SeedPair, rows: i64) -> Result<Vec<Vec<String>>> {
    if rows < 1 {
        return Err(domain(format!("triangle requires rows >= 1, got {rows}")));
    }
    (1..=rows)
        .map(|r| {
            let slice = row_seeded(seed, r)?;
            Ok(slice.points.iter().map(|p| p.value.to_string()).collect())
        })
        .collect()
}

/// Centered fixed-width text rendering of triangle rows.
pub fn render_centered(rows: &[Vec<String>]) -> String {
    let width = rows
        .iter()
        .flat_map(|r| r.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let total = rows.len();
    let mut out = String::new();
    for (idx, row) in rows.iter().enumerate() {
        let indent = (total - idx - 1) * (width + 1) / 2;
        out.push_str(&" ".repeat(indent));
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// JSON array-of-arrays of decimal strings.
pub fn rows_json(rows: &[Vec<String>]) -> serde_json::Value {
    json!(rows)
}
