//! Plain-text group files.
//!
//! ```text
//! # comments start with '#', blank lines are ignored
//! degree 8
//! (1,2)
//! (1,3)(2,4)
//! (1,5)(2,6)(3,7)(4,8)
//! ```
//!
//! The first non-comment line declares the degree; each following line is
//! one generator in cycle notation. Error positions are byte offsets into
//! the file.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Parsed contents of a group file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        GroupSpec { degree, generators }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut degree: Option<usize> = None;
        let mut generators = Vec::new();
        let mut offset = 0;
        for raw in text.split_inclusive('\n') {
            let line_start = offset;
            offset += raw.len();
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim();
            if trimmed.is_empty() {
                continue;
            }
            let lead = body.len() - body.trim_start().len();
            match degree {
                None => {
                    let rest = trimmed
                        .strip_prefix("degree")
                        .ok_or_else(|| Error::malformed(line_start + lead, "expected `degree N`"))?;
                    let n: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| Error::malformed(line_start + lead, "invalid degree"))?;
                    if n == 0 || n > crate::perm::MAX_DEGREE {
                        return Err(Error::malformed(line_start + lead, format!("invalid degree {n}")));
                    }
                    degree = Some(n);
                }
                Some(n) => {
                    let g = Permutation::parse_cycles(body, n).map_err(|e| match e {
                        Error::Malformed { position, message } => Error::Malformed {
                            position: line_start + position,
                            message,
                        },
                        other => other,
                    })?;
                    generators.push(g);
                }
            }
        }
        let degree = degree.ok_or_else(|| Error::malformed(offset, "missing `degree N` line"))?;
        Ok(GroupSpec { degree, generators })
    }

    /// Canonical text: the degree line followed by the generators sorted by
    /// image list.
    pub fn to_canonical_string(&self) -> String {
        let mut gens = self.generators.clone();
        gens.sort();
        let mut out = format!("degree {}\n", self.degree);
        for g in gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn generate(&self) -> Result<PermGroup> {
        PermGroup::generate(self.degree, &self.generators)
    }

    pub fn generate_capped(&self, cap: usize) -> Result<PermGroup> {
        PermGroup::generate_capped(self.degree, &self.generators, cap)
    }
}

impl From<&PermGroup> for GroupSpec {
    fn from(g: &PermGroup) -> Self {
        GroupSpec::new(g.degree(), g.generators().to_vec())
    }
}

/// Parses a generator list given on one line, e.g. `(1,2);(3,4)` or
/// `(1,2) ; (1,3)(2,4)`. Generators are separated by `;`.
pub fn parse_generator_list(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(';') {
        let start = offset;
        offset += part.len() + 1;
        if part.trim().is_empty() {
            continue;
        }
        let g = Permutation::parse_cycles(part, degree).map_err(|e| match e {
            Error::Malformed { position, message } => Error::Malformed {
                position: start + position,
                message,
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
