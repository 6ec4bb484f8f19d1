//! Graph energies, the first Zagreb index, and hyperenergeticity flags.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::closed_forms;
use crate::family::GraphFamily;
use crate::graph::Graph;
use crate::matrix;
use crate::spectra::{self, SolveError, Spectrum};
use crate::Tolerances;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnergyError {
    #[error("energies are undefined for a graph with no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// First Zagreb index: the sum of squared vertex degrees. Three equivalent
/// formulas are evaluated and cross-checked on every call.
pub fn zagreb_m1(g: &Graph) -> u64 {
    let [a, b, c] = zagreb_m1_forms(g);
    assert!(a == b && b == c, "Zagreb index formulas disagree: {a} {b} {c}");
    a
}

/// The three routes to the first Zagreb index: squared degrees, endpoint
/// degree sums over edges, and degree times average neighbor degree.
pub fn zagreb_m1_forms(g: &Graph) -> [u64; 3] {
    let squared: u64 = (0..g.vertex_count())
        .map(|v| (g.degree(v) as u64).pow(2))
        .sum();
    let over_edges: u64 = g
        .edges()
        .map(|(u, v)| (g.degree(u) + g.degree(v)) as u64)
        .sum();
    // d(v) * m(v) = sum of neighbor degrees, an integer
    let neighbor_sums: u64 = (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().map(|&u| g.degree(u) as u64).sum::<u64>())
        .sum();
    [squared, over_edges, neighbor_sums]
}

/// Average degree over the neighbors of `v`, zero for an isolated vertex.
pub fn avg_neighbor_degree(g: &Graph, v: usize) -> Ratio<i64> {
    let d = g.degree(v) as i64;
    if d == 0 {
        return Ratio::from_integer(0);
    }
    let neighbor_degree_sum: i64 = g.neighbors(v).iter().map(|&u| g.degree(u) as i64).sum();
    Ratio::new(neighbor_degree_sum, d)
}

fn abs_sum(spectrum: &Spectrum) -> f64 {
    spectrum.values().iter().map(|v| v.abs()).sum()
}

fn centered_abs_sum(spectrum: &Spectrum, center: f64) -> f64 {
    spectrum.values().iter().map(|v| (v - center).abs()).sum()
}

/// Sum of absolute adjacency eigenvalues.
pub fn energy(g: &Graph, tol: &Tolerances) -> Result<f64, EnergyError> {
    require_vertices(g)?;
    Ok(abs_sum(&spectra::eigenvalues(&matrix::adjacency(g), tol)?))
}

/// Sum of absolute CN-matrix eigenvalues.
pub fn cn_energy(g: &Graph, tol: &Tolerances) -> Result<f64, EnergyError> {
    require_vertices(g)?;
    Ok(abs_sum(&spectra::eigenvalues(&matrix::cn_matrix(g), tol)?))
}

/// Laplacian energy: eigenvalues of `D - A` centered at the mean degree.
pub fn laplacian_energy(g: &Graph, tol: &Tolerances) -> Result<f64, EnergyError> {
    require_vertices(g)?;
    let spec = spectra::eigenvalues(&matrix::laplacian(g), tol)?;
    Ok(centered_abs_sum(&spec, mean_degree(g)))
}

/// Signless Laplacian energy: eigenvalues of `D + A` centered likewise.
pub fn signless_laplacian_energy(g: &Graph, tol: &Tolerances) -> Result<f64, EnergyError> {
    require_vertices(g)?;
    let spec = spectra::eigenvalues(&matrix::signless_laplacian(g), tol)?;
    Ok(centered_abs_sum(&spec, mean_degree(g)))
}

/// CNL energy: eigenvalues of `CNRS - CN` centered at `tr(CNRS)/n`.
pub fn cn_laplacian_energy(g: &Graph, tol: &Tolerances) -> Result<f64, EnergyError> {
    require_vertices(g)?;
    let spec = spectra::eigenvalues_psd(&matrix::cn_laplacian(g), tol)?;
    Ok(centered_abs_sum(&spec, cn_center(g)))
}

/// CNSL energy: eigenvalues of `CNRS + CN` centered at `tr(CNRS)/n`.
pub fn cn_signless_laplacian_energy(g: &Graph, tol: &Tolerances) -> Result<f64, EnergyError> {
    require_vertices(g)?;
    let spec = spectra::eigenvalues_psd(&matrix::cn_signless_laplacian(g), tol)?;
    Ok(centered_abs_sum(&spec, cn_center(g)))
}

fn mean_degree(g: &Graph) -> f64 {
    2.0 * g.edge_count() as f64 / g.vertex_count() as f64
}

/// The centering constant `tr(CNRS)/n`. The trace identity makes it equal
/// to `(M1 - 2|e|)/n`; both routes are evaluated and must agree exactly.
pub(crate) fn cn_center(g: &Graph) -> f64 {
    let n = g.vertex_count() as f64;
    let trace: i64 = matrix::cn_row_sums(g).iter().sum();
    let from_trace = trace as f64 / n;
    let from_zagreb = (zagreb_m1(g) as f64 - 2.0 * g.edge_count() as f64) / n;
    assert_eq!(from_trace, from_zagreb, "trace route and Zagreb route disagree");
    from_trace
}

/// Whether each of the six energies strictly exceeds the matching energy
/// of the complete graph on the same vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HyperFlags {
    pub hyper: bool,
    pub l_hyper: bool,
    pub q_hyper: bool,
    pub cn_hyper: bool,
    pub cnl_hyper: bool,
    pub cnsl_hyper: bool,
}

impl HyperFlags {
    pub fn any(&self) -> bool {
        self.hyper
            || self.l_hyper
            || self.q_hyper
            || self.cn_hyper
            || self.cnl_hyper
            || self.cnsl_hyper
    }
}

/// Complete-graph baselines for hyperenergeticity on `n` vertices. The
/// CN-side values come from closed forms; the adjacency/Laplacian side is
/// computed numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnBaselines {
    pub energy: f64,
    pub laplacian_energy: f64,
    pub signless_laplacian_energy: f64,
    pub cn_energy: f64,
    pub cn_laplacian_energy: f64,
    pub cn_signless_laplacian_energy: f64,
}

impl KnBaselines {
    pub fn compute(n: usize, tol: &Tolerances) -> Result<Self, EnergyError> {
        if n == 0 {
            return Err(EnergyError::EmptyGraph);
        }
        let kn = GraphFamily::Complete(n).generate().expect("n >= 1 checked above");
        let closed = closed_forms::kn_hyper_baselines(n as u64);
        Ok(Self {
            energy: energy(&kn, tol)?,
            laplacian_energy: laplacian_energy(&kn, tol)?,
            signless_laplacian_energy: signless_laplacian_energy(&kn, tol)?,
            cn_energy: closed.e_cn as f64,
            cn_laplacian_energy: closed.le_cn as f64,
            cn_signless_laplacian_energy: closed.le_plus_cn as f64,
        })
    }
}

/// Classifies all six strict hyperenergeticity comparisons for `g`.
pub fn classify_hyperenergetic(g: &Graph, tol: &Tolerances) -> Result<HyperFlags, EnergyError> {
    let baselines = KnBaselines::compute(g.vertex_count(), tol)?;
    classify_with_baselines(g, &baselines, tol)
}

/// Same as [`classify_hyperenergetic`] with precomputed baselines, for
/// corpus scans that amortize the complete-graph solves.
pub fn classify_with_baselines(
    g: &Graph,
    baselines: &KnBaselines,
    tol: &Tolerances,
) -> Result<HyperFlags, EnergyError> {
    // strictly greater, with a margin against float noise
    let above = |value: f64, baseline: f64| value > baseline + tol.tau_cmp;
    Ok(HyperFlags {
        hyper: above(energy(g, tol)?, baselines.energy),
        l_hyper: above(laplacian_energy(g, tol)?, baselines.laplacian_energy),
        q_hyper: above(
            signless_laplacian_energy(g, tol)?,
            baselines.signless_laplacian_energy,
        ),
        cn_hyper: above(cn_energy(g, tol)?, baselines.cn_energy),
        cnl_hyper: above(cn_laplacian_energy(g, tol)?, baselines.cn_laplacian_energy),
        cnsl_hyper: above(
            cn_signless_laplacian_energy(g, tol)?,
            baselines.cn_signless_laplacian_energy,
        ),
    })
}

/// All six energies, the Zagreb index, and the hyperenergeticity flags of
/// one graph. Serializes to a stable JSON object and a one-line CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub n: usize,
    pub m_edges: usize,
    pub zagreb_m1: u64,
    pub trace_cnrs: u64,
    pub energy: f64,
    pub laplacian_energy: f64,
    pub signless_laplacian_energy: f64,
    pub cn_energy: f64,
    pub cn_laplacian_energy: f64,
    pub cn_signless_laplacian_energy: f64,
    pub hyper_flags: HyperFlags,
}

impl EnergyReport {
    pub fn compute(g: &Graph, tol: &Tolerances) -> Result<Self, EnergyError> {
        require_vertices(g)?;
        let m1 = zagreb_m1(g);
        let m_edges = g.edge_count();
        let trace: i64 = matrix::cn_row_sums(g).iter().sum();
        assert_eq!(trace as u64, m1 - 2 * m_edges as u64);
        Ok(Self {
            n: g.vertex_count(),
            m_edges,
            zagreb_m1: m1,
            trace_cnrs: trace as u64,
            energy: energy(g, tol)?,
            laplacian_energy: laplacian_energy(g, tol)?,
            signless_laplacian_energy: signless_laplacian_energy(g, tol)?,
            cn_energy: cn_energy(g, tol)?,
            cn_laplacian_energy: cn_laplacian_energy(g, tol)?,
            cn_signless_laplacian_energy: cn_signless_laplacian_energy(g, tol)?,
            hyper_flags: classify_hyperenergetic(g, tol)?,
        })
    }

    pub const CSV_HEADER: &'static str = "n,m_edges,zagreb_m1,trace_cnrs,energy,\
laplacian_energy,signless_laplacian_energy,cn_energy,cn_laplacian_energy,\
cn_signless_laplacian_energy,hyper,l_hyper,q_hyper,cn_hyper,cnl_hyper,cnsl_hyper";

    /// One CSV row matching [`CSV_HEADER`](Self::CSV_HEADER); floats are
    /// formatted by the caller-supplied function.
    pub fn to_csv_row(&self, fmt: impl Fn(f64) -> String) -> String {
        let f = &self.hyper_flags;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m_edges,
            self.zagreb_m1,
            self.trace_cnrs,
            fmt(self.energy),
            fmt(self.laplacian_energy),
            fmt(self.signless_laplacian_energy),
            fmt(self.cn_energy),
            fmt(self.cn_laplacian_energy),
            fmt(self.cn_signless_laplacian_energy),
            f.hyper,
            f.l_hyper,
            f.q_hyper,
            f.cn_hyper,
            f.cnl_hyper,
            f.cnsl_hyper,
        )
    }
}

fn require_vertices(g: &Graph) -> Result<(), EnergyError> {
    if g.vertex_count() == 0 {
        Err(EnergyError::EmptyGraph)
    } else {
        Ok(())
    }
}
