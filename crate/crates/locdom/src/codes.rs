//! Codes (sensor placements) and the five code properties: domination,
//! 2-domination, locating-domination, self-locating-domination and
//! solid-locating-domination, each checkable through its definition or
//! through the equivalent characterization, plus forced-codeword
//! detection.
//!
//! For a code C and a vertex u, the identifying set I(C;u) = N[u] ∩ C
//! collects the sensors that monitor u. The properties are:
//!
//! * `Dom`: I(C;u) is non-empty for every u outside C.
//! * `Dom2`: |I(C;u)| >= 2 for every u outside C.
//! * `Ld`: I-sets of vertices outside C are non-empty and pairwise
//!   distinct.
//! * `Sld`: for u outside C the closed neighborhoods of I(C;u)
//!   intersect in exactly {u}.
//! * `Dld`: no I-set of a vertex outside C is contained in the I-set
//!   of another vertex outside C (and all are non-empty).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_to_vec, Graph};

/// A vertex subset interpreted as sensor placements. A code carries no
/// graph reference; it is validated against a graph at use time.
/// Members are kept sorted and deduplicated, and serialize as the
/// sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Code(Vec<usize>);

impl Code {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Code(v)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Code(mask_to_vec(mask))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.0.binary_search(&u).is_ok()
    }

    /// The code as a bit mask, validated against the order of `g`.
    pub fn mask(&self, g: &Graph) -> Result<u64> {
        let mut m = 0u64;
        for &u in &self.0 {
            g.check_vertex(u)?;
            m |= 1 << u;
        }
        Ok(m)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromIterator<usize> for Code {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Code::new(iter)
    }
}

/// Which code property a predicate or solver targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeKind {
    #[serde(rename = "DOM")]
    Dom,
    #[serde(rename = "DOM2")]
    Dom2,
    #[serde(rename = "LD")]
    Ld,
    #[serde(rename = "SLD")]
    Sld,
    #[serde(rename = "DLD")]
    Dld,
}

impl CodeKind {
    pub const ALL: [CodeKind; 5] = [
        CodeKind::Dom,
        CodeKind::Dom2,
        CodeKind::Ld,
        CodeKind::Sld,
        CodeKind::Dld,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CodeKind::Dom => "DOM",
            CodeKind::Dom2 => "DOM2",
            CodeKind::Ld => "LD",
            CodeKind::Sld => "SLD",
            CodeKind::Dld => "DLD",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "DOM" => Ok(CodeKind::Dom),
            "DOM2" => Ok(CodeKind::Dom2),
            "LD" => Ok(CodeKind::Ld),
            "SLD" => Ok(CodeKind::Sld),
            "DLD" => Ok(CodeKind::Dld),
            other => Err(Error::InvalidFamily {
                family: "code kind",
                reason: format!("unknown kind {other:?}, expected DOM, DOM2, LD, SLD or DLD"),
            }),
        }
    }
}

/// Whether to evaluate a property through its definition or through
/// the equivalent characterization. The two agree; the harness tests
/// that rather than assuming it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckForm {
    Definition,
    Characterization,
}

/// I(C;u) = N[u] ∩ C.
pub fn identifying_set(g: &Graph, code: &Code, u: usize) -> Result<Code> {
    g.check_vertex(u)?;
    let mask = code.mask(g)?;
    Ok(Code::from_mask(g.closed(u) & mask))
}

/// Tests whether `code` has the selected property on `g`.
///
/// Empty codes are rejected rather than reported as failing; a silent
/// `false` would mask caller bugs. For one-vertex graphs the
/// characterization forms fall back to the definitions, whose
/// equivalence is only stated for order at least two.
pub fn is_code(g: &Graph, code: &Code, kind: CodeKind, form: CheckForm) -> Result<bool> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let mask = code.mask(g)?;
    let form = if g.n() == 1 { CheckForm::Definition } else { form };
    Ok(is_code_mask(g, mask, kind, form))
}

/// Mask-level property check used by the solvers; assumes `code` is a
/// valid non-empty subset of the vertex set.
pub(crate) fn is_code_mask(g: &Graph, code: u64, kind: CodeKind, form: CheckForm) -> bool {
    debug_assert!(code != 0 && code & !g.all_mask() == 0);
    match (kind, form) {
        (CodeKind::Dom, _) => non_codewords(g, code).all(|u| g.closed(u) & code != 0),
        (CodeKind::Dom2, _) => {
            non_codewords(g, code).all(|u| (g.closed(u) & code).count_ones() >= 2)
        }
        (CodeKind::Ld, _) => {
            let isets: Vec<u64> = non_codewords(g, code).map(|u| g.closed(u) & code).collect();
            isets.iter().all(|&s| s != 0)
                && (0..isets.len())
                    .all(|i| (i + 1..isets.len()).all(|j| isets[i] != isets[j]))
        }
        (CodeKind::Sld, CheckForm::Definition) => non_codewords(g, code).all(|u| {
            let iset = g.closed(u) & code;
            iset != 0 && closed_intersection(g, iset) == 1 << u
        }),
        // for all distinct u outside C and v anywhere: I(u) \ I(v) nonempty
        (CodeKind::Sld, CheckForm::Characterization) => non_codewords(g, code).all(|u| {
            let iu = g.closed(u) & code;
            (0..g.n()).all(|v| v == u || iu & !(g.closed(v) & code) != 0)
        }),
        (CodeKind::Dld, CheckForm::Definition) => {
            let isets: Vec<u64> = non_codewords(g, code).map(|u| g.closed(u) & code).collect();
            isets.iter().all(|&s| s != 0)
                && (0..isets.len()).all(|i| {
                    (0..isets.len()).all(|j| i == j || isets[i] & !isets[j] != 0)
                })
        }
        // I(u) nonempty and the closed neighborhoods of I(u) meet in
        // exactly {u} once codewords are discarded
        (CodeKind::Dld, CheckForm::Characterization) => non_codewords(g, code).all(|u| {
            let iset = g.closed(u) & code;
            iset != 0 && closed_intersection(g, iset) & !code == 1 << u
        }),
    }
}

fn non_codewords(g: &Graph, code: u64) -> impl Iterator<Item = usize> + '_ {
    bits(g.all_mask() & !code)
}

fn closed_intersection(g: &Graph, set: u64) -> u64 {
    bits(set).fold(g.all_mask(), |acc, c| acc & g.closed(c))
}

/// The vertices that belong to every self-locating-dominating code of
/// `g`: the single vertex when the order is one, otherwise exactly the
/// vertices u with N(u) ⊆ N[v] for some other vertex v.
pub fn forced_sld_codewords(g: &Graph) -> Code {
    Code::from_mask(forced_sld_mask(g))
}

pub(crate) fn forced_sld_mask(g: &Graph) -> u64 {
    if g.n() == 1 {
        return 1;
    }
    let mut forced = 0u64;
    for u in 0..g.n() {
        let nu = g.open(u);
        if (0..g.n()).any(|v| v != u && nu & !g.closed(v) == 0) {
            forced |= 1 << u;
        }
    }
    forced
}

/// The code V \ {u}, which is solid-locating-dominating whenever `u`
/// is not isolated.
pub fn drop_one_dld_code(g: &Graph, u: usize) -> Result<Code> {
    g.check_vertex(u)?;
    if g.is_isolated(u) {
        return Err(Error::IsolatedVertex(u));
    }
    let code = g.all_mask() & !(1 << u);
    debug_assert!(is_code_mask(g, code, CodeKind::Dld, CheckForm::Definition));
    Ok(Code::from_mask(code))
}
