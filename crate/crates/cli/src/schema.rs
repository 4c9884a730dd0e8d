//! JSON output documents. Every subcommand emits exactly one of these;
//! arbitrary-precision counts are encoded as decimal strings.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HooksReport {
    pub partition: Vec<usize>,
    pub size: usize,
    pub rows: Vec<Vec<usize>>,
    pub multiset: Vec<usize>,
    pub t_hooks: Vec<THookCount>,
    pub dimension: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct THookCount {
    pub t: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub partition: Vec<usize>,
    pub t: usize,
    pub core: Vec<usize>,
    pub quotient: Vec<Vec<usize>>,
    pub size: usize,
    pub core_size: usize,
    pub quotient_sizes: Vec<usize>,
    pub t_hooks: usize,
    /// `"|λ| = |core| + t·Σ|λ_c|"` with the numbers filled in.
    pub check: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub partition: Vec<usize>,
    pub t: usize,
    pub core: Vec<usize>,
    pub core_size: usize,
    /// Canonical column counts `(0, a_1, …, a_{t-1})`.
    pub canonical_abacus: Vec<usize>,
    pub removed_hooks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoresCountReport {
    pub t: usize,
    pub n: usize,
    pub count: String,
    /// Independent routes to the same number, by name.
    pub methods: Vec<MethodCount>,
    pub agree: bool,
    pub witnesses: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodCount {
    pub method: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub t: usize,
    pub b: u64,
    pub rows: Vec<TableRow>,
}

/// One CSV line: `n,a,count,proportion`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub a: u64,
    pub count: String,
    pub proportion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    HypothesisNotMet,
    Verified,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCell {
    pub ell: i64,
    pub a1: i64,
    pub a2: i64,
    pub status: CellStatus,
    /// Values of `n` checked (verified cells) or the offending `n`.
    pub n: Vec<usize>,
    pub count: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub verified: bool,
    /// Theorem sweeps: one entry per hypothesis-met cell.
    pub cells: Vec<VerifyCell>,
    /// Identity and core-formula checks.
    pub checks: Vec<CheckLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoCheckReport {
    pub m_max: usize,
    pub verified: bool,
    pub degrees: Vec<NoDegree>,
    pub z2: Vec<String>,
    pub z4: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoDegree {
    pub m: usize,
    pub product_side: String,
    pub hook_side: String,
    pub equal: bool,
}
