//! Line-oriented file formats.
//!
//! Colorings: a JSON header `{"format_version":1,"k":..,"N":..,"r":..,"s":..,"slack":..}`
//! followed by one `{"v":[..],"c":[..]}` line per edge in colex order, vertices and
//! colors sorted. Codes: a JSON header `{"q":..,"m":..,"d":..}` followed by one word per
//! line as space-separated symbols. Writers and readers are exact inverses, so a file
//! that reads successfully re-emits byte for byte.

use std::fmt::Write as _;
use std::io::BufRead;

use serde::{Deserialize, Serialize};
use setramsey_core::codes::{Code, PartitionFamily};
use setramsey_core::combin::ColexSubsets;
use setramsey_core::{ColorSet, SetColoring, MAX_COLORS};

use crate::error::AppError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringHeader {
    format_version: u32,
    k: usize,
    #[serde(rename = "N")]
    num_vertices: usize,
    r: usize,
    s: usize,
    slack: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeLine {
    v: Vec<usize>,
    c: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeHeader {
    q: u32,
    m: usize,
    d: usize,
}

fn malformed(line: usize, message: impl Into<String>) -> AppError {
    AppError::Malformed {
        line,
        message: message.into(),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain structs serialize")
}

pub fn write_coloring(c: &SetColoring) -> String {
    let mut out = json_line(&ColoringHeader {
        format_version: FORMAT_VERSION,
        k: c.uniformity(),
        num_vertices: c.num_vertices(),
        r: c.num_colors(),
        s: c.colors_per_edge(),
        slack: c.is_slack(),
    });
    out.push('\n');
    for (v, set) in c.edges() {
        out.push_str(&json_line(&EdgeLine { v, c: set.to_vec() }));
        out.push('\n');
    }
    out
}

/// Non-empty lines with their 1-based line numbers.
fn content_lines(input: impl BufRead) -> impl Iterator<Item = Result<(usize, String), AppError>> {
    input
        .lines()
        .enumerate()
        .map(|(i, line)| {
            line.map(|l| (i + 1, l)).map_err(|e| AppError::Io {
                path: "<input>".into(),
                source: e,
            })
        })
        .filter(|res| res.as_ref().map_or(true, |(_, l)| !l.trim().is_empty()))
}

pub fn read_coloring(input: impl BufRead) -> Result<SetColoring, AppError> {
    let mut lines = content_lines(input);
    let (line_no, header) = lines
        .next()
        .transpose()?
        .ok_or_else(|| malformed(1, "empty coloring file"))?;
    let header: ColoringHeader = serde_json::from_str(&header)
        .map_err(|e| malformed(line_no, format!("bad header: {e}")))?;
    if header.format_version != FORMAT_VERSION {
        return Err(malformed(
            line_no,
            format!("unsupported format_version {}", header.format_version),
        ));
    }
    if header.r > MAX_COLORS {
        return Err(malformed(
            line_no,
            format!("palette of {} exceeds {MAX_COLORS}", header.r),
        ));
    }
    if header.k < 2 || header.num_vertices < header.k || header.num_vertices > 1 << 16 {
        return Err(malformed(line_no, "need 2 <= k <= N <= 65536"));
    }
    let mut sets = Vec::new();
    let mut expected = ColexSubsets::new(header.num_vertices, header.k);
    for item in lines.by_ref() {
        let (line_no, text) = item?;
        let edge: EdgeLine = serde_json::from_str(&text)
            .map_err(|e| malformed(line_no, format!("bad edge: {e}")))?;
        match expected.next() {
            Some(v) if v == edge.v => {}
            Some(v) => {
                return Err(malformed(
                    line_no,
                    format!("expected edge {v:?}, found {:?}", edge.v),
                ))
            }
            None => return Err(malformed(line_no, "more edges than C(N, k)")),
        }
        if edge.c.windows(2).any(|w| w[0] >= w[1]) {
            return Err(malformed(line_no, "colors must be strictly increasing"));
        }
        if let Some(&bad) = edge.c.iter().find(|&&c| c >= header.r) {
            return Err(malformed(
                line_no,
                format!("color {bad} outside 0..{}", header.r),
            ));
        }
        let size_ok = if header.slack {
            edge.c.len() >= header.s
        } else {
            edge.c.len() == header.s
        };
        if !size_ok {
            return Err(malformed(
                line_no,
                format!(
                    "edge {:?} carries {} colors, s = {}",
                    edge.v,
                    edge.c.len(),
                    header.s
                ),
            ));
        }
        sets.push(ColorSet::from_colors(edge.c));
    }
    if let Some(v) = expected.next() {
        return Err(malformed(0, format!("missing edge {v:?}")));
    }
    SetColoring::from_edges(
        header.k,
        header.num_vertices,
        header.r,
        header.s,
        header.slack,
        sets,
    )
    .map_err(|e| malformed(line_no, e.to_string()))
}

pub fn write_code(code: &Code) -> String {
    let mut out = json_line(&CodeHeader {
        q: code.alphabet_size(),
        m: code.length(),
        d: code.claimed_distance(),
    });
    out.push('\n');
    for w in code.words() {
        let mut first = true;
        for x in w {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{x}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn read_code(input: impl BufRead) -> Result<Code, AppError> {
    let mut lines = content_lines(input);
    let (line_no, header) = lines
        .next()
        .transpose()?
        .ok_or_else(|| malformed(1, "empty code file"))?;
    let header: CodeHeader = serde_json::from_str(&header)
        .map_err(|e| malformed(line_no, format!("bad header: {e}")))?;
    let mut words = Vec::new();
    for item in lines {
        let (line_no, text) = item?;
        let word: Vec<u32> = text
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| malformed(line_no, format!("bad symbol {t:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        if word.len() != header.m {
            return Err(malformed(
                line_no,
                format!(
                    "word of length {} in a length-{} code",
                    word.len(),
                    header.m
                ),
            ));
        }
        if let Some(&bad) = word.iter().find(|&&x| x >= header.q) {
            return Err(malformed(
                line_no,
                format!("symbol {bad} outside 0..{}", header.q),
            ));
        }
        words.push(word);
    }
    Code::new(header.q, header.m, header.d, words).map_err(|e| malformed(0, e.to_string()))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionJson {
    num_vertices: usize,
    parts_per_partition: usize,
    assignment: Vec<Vec<u32>>,
}

pub fn write_partitions(pf: &PartitionFamily) -> String {
    let mut out = json_line(&PartitionJson {
        num_vertices: pf.num_vertices,
        parts_per_partition: pf.parts_per_partition,
        assignment: pf.assignment.clone(),
    });
    out.push('\n');
    out
}

pub fn read_partitions(text: &str) -> Result<PartitionFamily, AppError> {
    let raw: PartitionJson = serde_json::from_str(text).map_err(|e| malformed(1, e.to_string()))?;
    PartitionFamily::new(raw.num_vertices, raw.parts_per_partition, raw.assignment)
        .map_err(|e| malformed(1, e.to_string()))
}
