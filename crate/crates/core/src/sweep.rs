//! Exhaustive enumeration of curves and consistent maps within bounds, with
//! every map checked against the oracle.

use crate::invariants::{full_report, InvariantReport};
use crate::model::{ConsistentPlaneMap, MonomialCurve};
use crate::oracle::{CheckReport, Oracle};
use crate::semigroup::{gcd, gcd_all, is_ci_presentable};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max_weight must be at least 2, got {0}")]
    MaxWeightTooSmall(u32),
    #[error("max_degree {max_degree} is below max_weight {max_weight}")]
    MaxDegreeTooSmall { max_weight: u32, max_degree: u32 },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

impl SweepError {
    pub fn name(&self) -> &'static str {
        match self {
            SweepError::MaxWeightTooSmall(_) => "MaxWeightTooSmall",
            SweepError::MaxDegreeTooSmall { .. } => "MaxDegreeTooSmall",
            SweepError::Pool(_) => "Pool",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_weight: u32,
    pub max_degree: u32,
    /// Largest embedding dimension enumerated; dimensions `3..=` this bound
    /// add space curves.
    pub max_ambient_dim: u32,
    /// Keep only weight lists with a complete-intersection presentation.
    /// Otherwise any symmetric semigroup is accepted.
    pub require_ci: bool,
    /// Worker threads; 0 picks the number of available cores.
    #[serde(skip)]
    pub parallelism: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_weight: 6,
            max_degree: 12,
            max_ambient_dim: 2,
            require_ci: false,
            parallelism: 0,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        if self.max_weight < 2 {
            return Err(SweepError::MaxWeightTooSmall(self.max_weight));
        }
        if self.max_degree < self.max_weight {
            return Err(SweepError::MaxDegreeTooSmall {
                max_weight: self.max_weight,
                max_degree: self.max_degree,
            });
        }
        Ok(())
    }
}

/// Strictly increasing weight lists of length `n` drawn from
/// `2..=max_weight` that define a valid curve: gcd 1, symmetric semigroup,
/// and for `n >= 3` with `require_ci`, a complete-intersection presentation.
pub fn curve_universe(n: usize, max_weight: u32, require_ci: bool) -> Vec<MonomialCurve> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    increasing_tuples(n, 2, max_weight, &mut current, &mut |weights| {
        if gcd_all(weights) != 1 {
            return;
        }
        if require_ci && n >= 3 && !is_ci_presentable(weights).unwrap_or(false) {
            return;
        }
        if let Ok(curve) = MonomialCurve::new(weights) {
            out.push(curve);
        }
    });
    out
}

fn increasing_tuples(
    n: usize,
    from: u32,
    to: u32,
    current: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if current.len() == n {
        visit(current);
        return;
    }
    for w in from..=to {
        current.push(w);
        increasing_tuples(n, w + 1, to, current, visit);
        current.pop();
    }
}

/// All consistent degree-one maps from `curve` with `l1 < l2 <= max_degree`.
pub fn maps_for_curve(curve: &MonomialCurve, max_degree: u32) -> Vec<ConsistentPlaneMap> {
    let gamma = curve.semigroup();
    let degrees: Vec<u32> = (1..=max_degree)
        .filter(|&l| gamma.contains_nat(l))
        .collect();
    let mut maps = Vec::new();
    for (i, &l1) in degrees.iter().enumerate() {
        for &l2 in &degrees[i + 1..] {
            if gcd(l1, l2) == 1 {
                if let Ok(m) = ConsistentPlaneMap::new(curve.clone(), l1, l2) {
                    maps.push(m);
                }
            }
        }
    }
    maps
}

/// Curves of every embedding dimension in `2..=max_ambient_dim`, in
/// lexicographic weight order.
pub fn curves(config: &SweepConfig) -> Vec<MonomialCurve> {
    let mut curves: Vec<MonomialCurve> = (2..=config.max_ambient_dim as usize)
        .flat_map(|n| curve_universe(n, config.max_weight, config.require_ci))
        .collect();
    curves.sort_by(|a, b| a.weights().cmp(b.weights()));
    curves
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    #[serde(flatten)]
    pub report: InvariantReport,
    pub oracle: CheckReport,
}

impl SweepRecord {
    pub fn pass(&self) -> bool {
        self.oracle.all_pass()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub weights: Vec<u32>,
    pub l1: u32,
    pub l2: u32,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub curves: usize,
    pub instances: usize,
    pub passed: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub config: SweepConfig,
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
    pub failures: Vec<SweepFailure>,
}

impl SweepOutcome {
    pub fn all_pass(&self) -> bool {
        self.summary.failures == 0
    }
}

/// Evaluates the closed formulas and the oracle for one map. A record is
/// returned whenever the formulas evaluate, even if the oracle disagrees.
pub fn evaluate(m: &ConsistentPlaneMap, oracle: Oracle) -> Result<SweepRecord, SweepFailure> {
    let report = full_report(m).map_err(|e| SweepFailure {
        weights: m.curve().weights().to_vec(),
        l1: m.l1(),
        l2: m.l2(),
        reason: format!("{}: {e}", e.name()),
    })?;
    Ok(SweepRecord {
        report,
        oracle: oracle.cross_check(m),
    })
}

fn mismatch(record: &SweepRecord) -> Option<SweepFailure> {
    if record.pass() {
        return None;
    }
    let check = &record.oracle;
    let failed: Vec<&str> = check
        .identities
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name)
        .chain(
            check
                .containments
                .iter()
                .filter(|c| !c.holds)
                .map(|c| c.name),
        )
        .collect();
    Some(SweepFailure {
        weights: record.report.weights.clone(),
        l1: record.report.l1,
        l2: record.report.l2,
        reason: format!("oracle mismatch: {}", failed.join(", ")),
    })
}

/// Runs the sweep on a pool of `config.parallelism` workers. Output order is
/// `(weights, l1, l2)` regardless of scheduling.
pub fn run(config: &SweepConfig) -> Result<SweepOutcome, SweepError> {
    config.validate()?;
    let curves = curves(config);
    let maps: Vec<ConsistentPlaneMap> = curves
        .iter()
        .flat_map(|c| maps_for_curve(c, config.max_degree))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let results: Vec<Result<SweepRecord, SweepFailure>> = pool.install(|| {
        maps.par_iter()
            .map(|m| evaluate(m, Oracle::default()))
            .collect()
    });

    let mut records = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for result in results {
        match result {
            Ok(r) => {
                failures.extend(mismatch(&r));
                records.push(r);
            }
            Err(f) => failures.push(f),
        }
    }
    records.sort_by(|a, b| {
        (&a.report.weights, a.report.l1, a.report.l2).cmp(&(
            &b.report.weights,
            b.report.l1,
            b.report.l2,
        ))
    });
    failures.sort_by(|a, b| (&a.weights, a.l1, a.l2).cmp(&(&b.weights, b.l1, b.l2)));

    let summary = SweepSummary {
        curves: curves.len(),
        instances: maps.len(),
        passed: maps.len() - failures.len(),
        failures: failures.len(),
    };
    Ok(SweepOutcome {
        config: *config,
        summary,
        records,
        failures,
    })
}
