//! The family file format.
//!
//! UTF-8 text. The first significant line is `n=<integer>`; every following
//! nonempty line is one block as comma-separated ascending integers in
//! `1..=n`. Lines starting with `#` are comments. Canonical output sorts the
//! blocks lexicographically.

use crate::error::ParseError;
use crate::family::{BlockSet, Family, GroundSet};

/// Parses the family file format.
pub fn parse_family(text: &str) -> Result<Family, ParseError> {
    let mut family: Option<Family> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match family {
            None => {
                let n_str = line.strip_prefix("n=").ok_or_else(|| {
                    ParseError::new(
                        lineno,
                        format!("expected header 'n=<integer>', found '{line}'"),
                    )
                })?;
                let n: u32 = n_str.trim().parse().map_err(|_| {
                    ParseError::new(lineno, format!("invalid ground set size '{n_str}'"))
                })?;
                let ground =
                    GroundSet::new(n).map_err(|e| ParseError::new(lineno, e.to_string()))?;
                family = Some(Family::new(ground));
            }
            Some(ref mut fam) => {
                let mut block = BlockSet::empty(fam.ground());
                let mut prev: Option<u32> = None;
                for token in line.split(',') {
                    let token = token.trim();
                    let e: u32 = token.parse().map_err(|_| {
                        ParseError::new(lineno, format!("invalid element '{token}'"))
                    })?;
                    if let Some(p) = prev {
                        if e <= p {
                            return Err(ParseError::new(
                                lineno,
                                format!("elements must be strictly ascending ({p} then {e})"),
                            ));
                        }
                    }
                    block
                        .insert(e)
                        .map_err(|err| ParseError::new(lineno, err.to_string()))?;
                    prev = Some(e);
                }
                fam.push(block)
                    .map_err(|err| ParseError::new(lineno, err.to_string()))?;
            }
        }
    }
    family.ok_or_else(|| ParseError::new(last_line + 1, "missing 'n=<integer>' header"))
}

/// Renders a family in the canonical file format: header plus one line per
/// block, blocks sorted lexicographically.
pub fn family_to_text(family: &Family) -> String {
    let mut out = format!("n={}\n", family.ground().n());
    for block in family.sorted_blocks() {
        let elems: Vec<String> = block.iter().map(|e| e.to_string()).collect();
        out.push_str(&elems.join(","));
        out.push('\n');
    }
    out
}
