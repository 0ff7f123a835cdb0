//! Topological Euler characteristic through conifold transitions.
//!
//! Conventions: a small resolution of `n` nodes adds `2n`, the crepant blowup
//! of a `1/3(1,1,1)` point adds 2 (exceptional `P^2`), contracting a plane to
//! a point subtracts 2. Absolute values depend on the starting value and are
//! reported as convention-dependent; differences between ledgers with a
//! common start are meaningful.

use std::fmt;

/// `chi + 2 n`.
pub fn chi_conifold(chi: i64, nodes: i64) -> i64 {
    chi + 2 * nodes
}

/// `chi + 2`.
pub fn chi_crepant_third(chi: i64) -> i64 {
    chi + 2
}

/// `chi - 2`.
pub fn chi_contract_plane(chi: i64) -> i64 {
    chi - 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LedgerStep {
    ResolveNodes(i64),
    CrepantBlowupThird,
    ContractPlane,
}

impl LedgerStep {
    pub fn apply(self, chi: i64) -> i64 {
        match self {
            LedgerStep::ResolveNodes(n) => chi_conifold(chi, n),
            LedgerStep::CrepantBlowupThird => chi_crepant_third(chi),
            LedgerStep::ContractPlane => chi_contract_plane(chi),
        }
    }
}

impl fmt::Display for LedgerStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LedgerStep::ResolveNodes(n) => write!(f, "resolve {n} nodes"),
            LedgerStep::CrepantBlowupThird => write!(f, "crepant blowup of 1/3(1,1,1)"),
            LedgerStep::ContractPlane => write!(f, "contract plane"),
        }
    }
}

impl std::str::FromStr for LedgerStep {
    type Err = String;

    /// `nodes:N`, `crepant` or `contract`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "crepant" => Ok(LedgerStep::CrepantBlowupThird),
            "contract" => Ok(LedgerStep::ContractPlane),
            _ => s
                .strip_prefix("nodes:")
                .and_then(|n| n.trim().parse().ok())
                .map(LedgerStep::ResolveNodes)
                .ok_or_else(|| format!("unknown ledger step `{s}`; use nodes:N, crepant or contract")),
        }
    }
}

/// Running Euler characteristic from a smooth starting value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConifoldLedger {
    pub chi_smooth: i64,
    pub steps: Vec<(LedgerStep, i64)>,
}

impl ConifoldLedger {
    pub fn new(chi_smooth: i64) -> Self {
        Self { chi_smooth, steps: Vec::new() }
    }

    pub fn current(&self) -> i64 {
        self.steps.last().map(|s| s.1).unwrap_or(self.chi_smooth)
    }

    pub fn push(&mut self, step: LedgerStep) -> &mut Self {
        let next = step.apply(self.current());
        self.steps.push((step, next));
        self
    }

    pub fn resolve_nodes(mut self, n: i64) -> Self {
        self.push(LedgerStep::ResolveNodes(n));
        self
    }

    pub fn crepant_blowup_third(mut self) -> Self {
        self.push(LedgerStep::CrepantBlowupThird);
        self
    }

    pub fn contract_plane(mut self) -> Self {
        self.push(LedgerStep::ContractPlane);
        self
    }
}
