//! Line-oriented text format for triple systems.
//!
//! ```text
//! # optional comment lines
//! n m
//! a b c      (m lines, 0 <= a < b < c < n)
//! ```
//!
//! The writer always emits edges in lexicographic order. The reader accepts
//! edges in any order (edge ids follow line order) and validates the result.

use std::io::{self, BufRead, Write};

use crate::system::{validate_edges, LinearTripleSystem, SystemError, Vertex};

pub fn write_system<W: Write>(sys: &LinearTripleSystem, mut sink: W) -> io::Result<()> {
    let mut edges: Vec<[Vertex; 3]> = sys.edges().iter().map(|t| t.vertices()).collect();
    edges.sort_unstable();
    writeln!(sink, "{} {}", sys.n(), edges.len())?;
    for [a, b, c] in edges {
        writeln!(sink, "{a} {b} {c}")?;
    }
    Ok(())
}

pub fn to_text(sys: &LinearTripleSystem) -> String {
    let mut buf = Vec::new();
    write_system(sys, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("format is ASCII")
}

fn parse_err(line: usize, message: impl Into<String>) -> SystemError {
    SystemError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<u64>, SystemError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| {
                parse_err(
                    line_no,
                    format!("expected a non-negative integer, found {tok:?}"),
                )
            })
        })
        .collect()
}

pub fn read_system<R: BufRead>(source: R) -> Result<LinearTripleSystem, SystemError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<[Vertex; 3]> = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| parse_err(line_no, e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let nums = parse_numbers(line_no, trimmed)?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(parse_err(line_no, "header must be \"n m\""));
                }
                if nums[0] > u32::MAX as u64 {
                    return Err(parse_err(line_no, "vertex count too large"));
                }
                header = Some((nums[0] as usize, nums[1] as usize));
            }
            Some((n, m)) => {
                if raw.len() == m {
                    return Err(parse_err(
                        line_no,
                        format!("more than the declared {m} edges"),
                    ));
                }
                if nums.len() != 3 {
                    return Err(parse_err(
                        line_no,
                        "edge line must contain exactly three vertices",
                    ));
                }
                for &v in &nums {
                    if v >= n as u64 {
                        return Err(SystemError::VertexOutOfRange {
                            vertex: v.min(u32::MAX as u64) as Vertex,
                            n,
                        });
                    }
                }
                let (a, b, c) = (nums[0] as Vertex, nums[1] as Vertex, nums[2] as Vertex);
                if a == b || b == c || a == c {
                    return Err(SystemError::DegenerateTriple([a, b, c]));
                }
                let mut t = [a, b, c];
                t.sort_unstable();
                raw.push(t);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing header line"))?;
    if raw.len() != m {
        return Err(parse_err(
            0,
            format!("declared {m} edges but found {}", raw.len()),
        ));
    }
    validate_edges(n, &raw)?;
    let sys = LinearTripleSystem::from_edges(n, raw)?;
    sys.validate()?;
    Ok(sys)
}

pub fn parse_system(text: &str) -> Result<LinearTripleSystem, SystemError> {
    read_system(text.as_bytes())
}
