//! Text formats shared by every command.
//!
//! * Matrices: one row per line, whitespace-separated rationals (`a` or
//!   `a/b`). Blank lines and lines starting with `#` are ignored.
//! * Colourings: one `value colour` pair per line, same comment rules.
//! * Certificates: `block` lines (one-based column indices) followed by
//!   `witness` lines (coefficients over the earlier columns in increasing
//!   order).

use std::fmt::Write as _;

use rado_core::rado::CcCertificate;
use rado_core::rings::PrimeSet;
use rado_core::search::{GroundSet, TableColouring};
use rado_core::systems::CoefficientSchedule;
use rado_core::{Rat, RatMatrix};

use crate::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_rat(token: &str, line: usize) -> Result<Rat, CliError> {
    token.parse().map_err(|e| CliError::Format {
        line,
        message: format!("{e}"),
    })
}

pub fn parse_matrix(text: &str) -> Result<RatMatrix, CliError> {
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let row = l
            .split_whitespace()
            .map(|t| parse_rat(t, line))
            .collect::<Result<Vec<Rat>, _>>()?;
        if let Some(first) = rows.first().map(Vec::len) {
            if row.len() != first {
                return Err(CliError::Format {
                    line,
                    message: format!("row has {} entries, expected {first}", row.len()),
                });
            }
        }
        rows.push(row);
    }
    Ok(RatMatrix::from_rows(rows)?)
}

pub fn write_matrix(m: &RatMatrix) -> String {
    let mut out = String::new();
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(Rat::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_colouring(text: &str) -> Result<TableColouring, CliError> {
    let mut pairs = Vec::new();
    for (line, l) in content_lines(text) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [value, colour] = parts[..] else {
            return Err(CliError::Format {
                line,
                message: "expected `value colour`".into(),
            });
        };
        let colour = colour.parse::<u32>().map_err(|_| CliError::Format {
            line,
            message: format!("bad colour {colour:?}"),
        })?;
        pairs.push((parse_rat(value, line)?, colour));
    }
    Ok(TableColouring::new(pairs, None)?)
}

/// `value colour` lines for the colouring `i + 1 -> colours[i]`.
pub fn write_range_colouring(colours: &[u32]) -> String {
    let mut out = String::new();
    for (i, c) in colours.iter().enumerate() {
        writeln!(out, "{} {c}", i + 1).unwrap();
    }
    out
}

pub fn write_certificate(cert: &CcCertificate) -> String {
    let mut out = String::new();
    for block in &cert.blocks {
        out.push_str("block");
        for j in block {
            write!(out, " {}", j + 1).unwrap();
        }
        out.push('\n');
    }
    for w in &cert.witnesses {
        out.push_str("witness");
        for c in w {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// A list of rationals separated by commas and/or whitespace.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rat>().map_err(CliError::from))
        .collect()
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad prime {t:?}"))))
        .collect()
}

/// `""` (empty set), `all`, `2,3,7`, or `all-except:2,3`.
pub fn parse_prime_set(s: &str) -> Result<PrimeSet, CliError> {
    let s = s.trim();
    if s == "all" {
        return Ok(PrimeSet::All);
    }
    if let Some(rest) = s.strip_prefix("all-except:") {
        return Ok(PrimeSet::all_except(parse_u64_list(rest)?)?);
    }
    Ok(PrimeSet::finite(parse_u64_list(s)?)?)
}

/// `qpow:Q`, `allprimes`, `qpowpair:Q`, `allprimespair` or `file:PATH`; the
/// file holds a matrix whose row `n - 2` lists `d_{n,1} .. d_{n,alpha}`.
pub fn parse_schedule(s: &str) -> Result<CoefficientSchedule, CliError> {
    let prime = |q: &str| {
        q.parse::<u64>()
            .map_err(|_| CliError::Usage(format!("bad prime {q:?} in schedule")))
    };
    let schedule = match s.split_once(':') {
        None if s == "allprimes" => CoefficientSchedule::AllPrimesProd,
        None if s == "allprimespair" => CoefficientSchedule::AllPrimesProdPair,
        Some(("qpow", q)) => CoefficientSchedule::qpow(prime(q)?)?,
        Some(("qpowpair", q)) => CoefficientSchedule::qpow_pair(prime(q)?)?,
        Some(("file", path)) => {
            let m = parse_matrix(&crate::read_file(path)?)?;
            let table = m.row_iter().map(<[Rat]>::to_vec).collect();
            CoefficientSchedule::explicit(table)?
        }
        _ => return Err(CliError::Usage(format!("unknown schedule {s:?}"))),
    };
    Ok(schedule)
}

/// `B,s` for `{a/s : 1 <= a <= B}`; `B,s,signed` adds the negatives.
pub fn parse_ground(s: &str) -> Result<GroundSet, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let number = |t: &str| {
        t.parse::<u64>()
            .map_err(|_| CliError::Usage(format!("bad number {t:?} in ground set")))
    };
    let (bound, den, signed) = match parts[..] {
        [b, d] => (number(b)?, number(d)?, false),
        [b, d, "signed"] => (number(b)?, number(d)?, true),
        _ => return Err(CliError::Usage(format!("ground set must be `B,s` or `B,s,signed`, got {s:?}"))),
    };
    Ok(GroundSet::slice(bound, den, signed)?)
}
