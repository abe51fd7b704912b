//! Closed-form code numbers for the families where they are known
//! exactly. Uncovered (family, kind) pairs are an error, never a
//! guess.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codes::CodeKind;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum ClosedFormFamily {
    Path { n: u64 },
    Cycle { t: u64 },
    Ladder { n: u64 },
    Complete { m: u64 },
    /// The Cartesian product of two complete graphs.
    CompleteProduct { m: u64, n: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormQuery {
    #[serde(flatten)]
    pub family: ClosedFormFamily,
    pub kind: CodeKind,
}

impl fmt::Display for ClosedFormQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            ClosedFormFamily::Path { n } => write!(f, "path({n})"),
            ClosedFormFamily::Cycle { t } => write!(f, "cycle({t})"),
            ClosedFormFamily::Ladder { n } => write!(f, "ladder({n})"),
            ClosedFormFamily::Complete { m } => write!(f, "complete({m})"),
            ClosedFormFamily::CompleteProduct { m, n } => write!(f, "complete_product({m},{n})"),
        }?;
        write!(f, " kind {}", self.kind)
    }
}

/// Evaluates the exact value for a covered query:
///
/// * paths: γ^SLD = ⌈(n+1)/2⌉, γ^DLD = ⌈n/2⌉;
/// * cycles on t >= 5 vertices: γ^SLD = γ^DLD = ⌈t/2⌉;
/// * ladders: γ^DLD = n, and for n >= 2, γ^SLD = n+1 (odd n) or
///   n+2 (even n);
/// * complete graphs: γ^SLD = m;
/// * products of complete graphs with m >= 2n: γ^SLD = m.
pub fn closed_form(q: &ClosedFormQuery) -> Result<u64> {
    let unavailable = || Error::NoClosedForm {
        query: q.to_string(),
    };
    match (q.family, q.kind) {
        (ClosedFormFamily::Path { n }, CodeKind::Sld) if n >= 1 => Ok((n + 2) / 2),
        (ClosedFormFamily::Path { n }, CodeKind::Dld) if n >= 1 => Ok(n.div_ceil(2)),
        (ClosedFormFamily::Cycle { t }, CodeKind::Sld | CodeKind::Dld) if t >= 5 => {
            Ok(t.div_ceil(2))
        }
        (ClosedFormFamily::Ladder { n }, CodeKind::Dld) if n >= 1 => Ok(n),
        (ClosedFormFamily::Ladder { n }, CodeKind::Sld) if n >= 2 => {
            Ok(if n % 2 == 1 { n + 1 } else { n + 2 })
        }
        (ClosedFormFamily::Complete { m }, CodeKind::Sld) if m >= 1 => Ok(m),
        (ClosedFormFamily::CompleteProduct { m, n }, CodeKind::Sld) if n >= 1 && m >= 2 * n => {
            Ok(m)
        }
        _ => Err(unavailable()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(family: ClosedFormFamily, kind: CodeKind) -> ClosedFormQuery {
        ClosedFormQuery { family, kind }
    }

    #[test]
    fn covered_values() {
        assert_eq!(closed_form(&q(ClosedFormFamily::Ladder { n: 5 }, CodeKind::Sld)).unwrap(), 6);
        assert_eq!(closed_form(&q(ClosedFormFamily::Ladder { n: 4 }, CodeKind::Sld)).unwrap(), 6);
        assert_eq!(closed_form(&q(ClosedFormFamily::Cycle { t: 5 }, CodeKind::Dld)).unwrap(), 3);
        assert_eq!(closed_form(&q(ClosedFormFamily::Complete { m: 4 }, CodeKind::Sld)).unwrap(), 4);
        assert_eq!(closed_form(&q(ClosedFormFamily::Path { n: 7 }, CodeKind::Sld)).unwrap(), 4);
        assert_eq!(closed_form(&q(ClosedFormFamily::Path { n: 6 }, CodeKind::Dld)).unwrap(), 3);
        assert_eq!(
            closed_form(&q(ClosedFormFamily::CompleteProduct { m: 6, n: 3 }, CodeKind::Sld))
                .unwrap(),
            6
        );
    }

    #[test]
    fn uncovered_queries_error() {
        for query in [
            q(ClosedFormFamily::Cycle { t: 4 }, CodeKind::Sld),
            q(ClosedFormFamily::Ladder { n: 1 }, CodeKind::Sld),
            q(ClosedFormFamily::Complete { m: 3 }, CodeKind::Dld),
            q(ClosedFormFamily::Path { n: 9 }, CodeKind::Ld),
            q(ClosedFormFamily::CompleteProduct { m: 3, n: 2 }, CodeKind::Sld),
        ] {
            assert!(matches!(closed_form(&query), Err(Error::NoClosedForm { .. })), "{query}");
        }
    }
}
