//! Corpus scanning: run a selection of theorem checks over a stream of
//! graphs and aggregate violations, per-theorem slack statistics, the
//! equality-case census, and any hyperenergetic hits.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundContext, BoundReport, CheckOutcome};
use crate::energy::{self, HyperFlags, KnBaselines};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::Tolerances;

/// The check families that can be selected for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckGroup {
    Identities,
    FiniteSum,
    MaximumForm,
    Majorization,
    EnergyBounds,
    LeCnBounds,
    DerivedGraph,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 7] = [
        CheckGroup::Identities,
        CheckGroup::FiniteSum,
        CheckGroup::MaximumForm,
        CheckGroup::Majorization,
        CheckGroup::EnergyBounds,
        CheckGroup::LeCnBounds,
        CheckGroup::DerivedGraph,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckGroup::Identities => "identities",
            CheckGroup::FiniteSum => "finite-sum",
            CheckGroup::MaximumForm => "maximum-form",
            CheckGroup::Majorization => "majorization",
            CheckGroup::EnergyBounds => "e-cn-bounds",
            CheckGroup::LeCnBounds => "le-cn-bounds",
            CheckGroup::DerivedGraph => "derived-graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check group {0:?}; expected \"all\" or a comma list of group names")]
pub struct CheckParseError(String);

impl FromStr for CheckGroup {
    type Err = CheckParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| CheckParseError(s.to_string()))
    }
}

/// Which check groups a scan runs; parsed from `all` or a comma list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSelection {
    groups: Vec<CheckGroup>,
}

impl CheckSelection {
    pub fn all() -> Self {
        Self { groups: CheckGroup::ALL.to_vec() }
    }

    pub fn only(groups: impl IntoIterator<Item = CheckGroup>) -> Self {
        let mut groups: Vec<CheckGroup> = groups.into_iter().collect();
        groups.sort_unstable();
        groups.dedup();
        Self { groups }
    }

    pub fn contains(&self, group: CheckGroup) -> bool {
        self.groups.contains(&group)
    }
}

impl FromStr for CheckSelection {
    type Err = CheckParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "all" {
            return Ok(Self::all());
        }
        let groups = s
            .split(',')
            .map(|part| part.trim().parse())
            .collect::<Result<Vec<CheckGroup>, _>>()?;
        Ok(Self::only(groups))
    }
}

/// Scan configuration beyond the check selection.
#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    pub tolerances: Tolerances,
    /// Sequence number of the first graph; lets parallel callers scan
    /// disjoint slices and merge without renumbering.
    pub start_index: u64,
    /// Also classify hyperenergeticity and record hits.
    pub classify_hyper: bool,
    /// Diagnostics hook: invert the direction of the named check so the
    /// violation-reporting path can be exercised.
    pub flip_check: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Default)]
pub struct TheoremStats {
    pub checked: u64,
    pub violations: u64,
    pub min_slack: Option<f64>,
    pub equality_count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub index: u64,
    pub graph6: String,
    pub theorem_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperHit {
    pub index: u64,
    pub graph6: String,
    pub flags: HyperFlags,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanFailure {
    pub index: u64,
    pub message: String,
}

/// Aggregate result of one scan. Merging summaries is commutative, so a
/// corpus can be split across workers; record lists are sorted by input
/// sequence number on finalize.
#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct ScanSummary {
    pub graphs: u64,
    pub theorems: BTreeMap<String, TheoremStats>,
    pub violations: Vec<ViolationRecord>,
    pub hyper_hits: Vec<HyperHit>,
    pub failures: Vec<ScanFailure>,
}

impl ScanSummary {
    pub fn violation_count(&self) -> u64 {
        self.theorems.values().map(|s| s.violations).sum()
    }

    fn record(&mut self, report: &BoundReport, index: u64, g: &Graph) {
        let stats = self.theorems.entry(report.theorem_id.to_string()).or_default();
        stats.checked += 1;
        stats.min_slack = Some(match stats.min_slack {
            Some(cur) => cur.min(report.slack),
            None => report.slack,
        });
        if report.equality {
            stats.equality_count += 1;
        }
        if !report.holds {
            stats.violations += 1;
            self.violations.push(ViolationRecord {
                index,
                graph6: encode_graph6(g),
                theorem_id: report.theorem_id.to_string(),
                lhs: report.lhs,
                rhs: report.rhs,
                slack: report.slack,
            });
        }
    }

    /// Folds another summary in; totals are order-independent.
    pub fn merge(&mut self, other: ScanSummary) {
        self.graphs += other.graphs;
        for (id, stats) in other.theorems {
            let entry = self.theorems.entry(id).or_default();
            entry.checked += stats.checked;
            entry.violations += stats.violations;
            entry.equality_count += stats.equality_count;
            entry.min_slack = match (entry.min_slack, stats.min_slack) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        self.violations.extend(other.violations);
        self.hyper_hits.extend(other.hyper_hits);
        self.failures.extend(other.failures);
    }

    /// Sorts the record lists by input sequence number for deterministic
    /// output regardless of worker completion order.
    pub fn finalize(&mut self) {
        self.violations
            .sort_by(|a, b| (a.index, &a.theorem_id).cmp(&(b.index, &b.theorem_id)));
        self.hyper_hits.sort_by_key(|h| h.index);
        self.failures.sort_by_key(|f| f.index);
    }
}

/// Runs the selected checks over a stream of graphs. Per-graph failures
/// (solver errors) are recorded and the scan continues.
pub fn scan_corpus(
    graphs: impl IntoIterator<Item = Graph>,
    selection: &CheckSelection,
    opts: &ScanOptions,
) -> ScanSummary {
    let mut summary = ScanSummary::default();
    let mut baselines: HashMap<usize, KnBaselines> = HashMap::new();
    for (offset, g) in graphs.into_iter().enumerate() {
        let index = opts.start_index + offset as u64;
        summary.graphs += 1;
        if let Err(message) = scan_one(&g, index, selection, opts, &mut summary, &mut baselines) {
            summary.failures.push(ScanFailure { index, message });
        }
    }
    summary.finalize();
    summary
}

fn scan_one(
    g: &Graph,
    index: u64,
    selection: &CheckSelection,
    opts: &ScanOptions,
    summary: &mut ScanSummary,
    baselines: &mut HashMap<usize, KnBaselines>,
) -> Result<(), String> {
    let tol = &opts.tolerances;
    let ctx = BoundContext::compute(g, tol).map_err(|e| e.to_string())?;

    let mut reports: Vec<BoundReport> = Vec::new();
    if selection.contains(CheckGroup::Identities) {
        reports.extend(bounds::check_identities(g, &ctx));
    }
    if selection.contains(CheckGroup::FiniteSum) {
        reports.extend(bounds::check_finite_sum_identity(&ctx));
    }
    if selection.contains(CheckGroup::MaximumForm) {
        reports.extend(bounds::check_maximum_form(&ctx));
    }
    if selection.contains(CheckGroup::Majorization) {
        reports.extend(bounds::check_majorization(&ctx));
    }
    if selection.contains(CheckGroup::EnergyBounds) {
        reports.extend(bounds::check_e_cn_bounds(&ctx));
    }
    if selection.contains(CheckGroup::LeCnBounds) {
        reports.extend(checked_only(bounds::check_le_cn_bounds(&ctx)));
    }
    if selection.contains(CheckGroup::DerivedGraph) {
        let outcomes = bounds::check_derived_graph_theorem(g, &ctx).map_err(|e| e.to_string())?;
        reports.extend(checked_only(outcomes));
    }

    for mut report in reports {
        if opts.flip_check.as_deref() == Some(report.theorem_id) {
            report = report.flipped(tol.tau_eq);
        }
        summary.record(&report, index, g);
    }

    if opts.classify_hyper {
        let n = g.vertex_count();
        let baseline = match baselines.entry(n) {
            std::collections::hash_map::Entry::Occupied(entry) => entry.into_mut(),
            std::collections::hash_map::Entry::Vacant(entry) => {
                entry.insert(KnBaselines::compute(n, tol).map_err(|e| e.to_string())?)
            }
        };
        let flags =
            energy::classify_with_baselines(g, baseline, tol).map_err(|e| e.to_string())?;
        if flags.any() {
            summary.hyper_hits.push(HyperHit { index, graph6: encode_graph6(g), flags });
        }
    }
    Ok(())
}

fn checked_only(outcomes: impl IntoIterator<Item = CheckOutcome>) -> Vec<BoundReport> {
    outcomes
        .into_iter()
        .filter_map(|o| match o {
            CheckOutcome::Checked(report) => Some(report),
            CheckOutcome::Inapplicable { .. } => None,
        })
        .collect()
}
