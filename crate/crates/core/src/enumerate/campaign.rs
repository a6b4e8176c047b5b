use super::enumerate_polyominoes_up_to;
use crate::algebra::GbOptions;
use crate::error::{Error, Result};
use crate::grid::CellCollection;
use crate::ideals::{default_ring, minor_lattice, prime_by_fallback, PrimeStatus};
use crate::invariants::{default_hilbert_data, gorenstein_from, GorensteinVerdict};
use crate::rook::{rook_number, rook_polynomial, switching_rook_polynomial};
use crate::shape::{classify_path, find_zigzag_walk, is_thin, PathKind, DEFAULT_ZIGZAG_BUDGET};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Check {
    HEqualsSwitchingRook,
    RegEqualsRookNumber,
    PrimeIffNoZigzag,
    SimpleImpliesPrime,
    HeightEqualsRank,
    ThinImpliesHEqualsRook,
    ClosedPathGorenstein,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::HEqualsSwitchingRook,
        Check::RegEqualsRookNumber,
        Check::PrimeIffNoZigzag,
        Check::SimpleImpliesPrime,
        Check::HeightEqualsRank,
        Check::ThinImpliesHEqualsRook,
        Check::ClosedPathGorenstein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::HEqualsSwitchingRook => "hEqualsSwitchingRook",
            Check::RegEqualsRookNumber => "regEqualsRookNumber",
            Check::PrimeIffNoZigzag => "primeIffNoZigzag",
            Check::SimpleImpliesPrime => "simpleImpliesPrime",
            Check::HeightEqualsRank => "heightEqualsRank",
            Check::ThinImpliesHEqualsRook => "thinImpliesHEqualsRook",
            Check::ClosedPathGorenstein => "closedPathGorenstein",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub simple: bool,
    pub thin: bool,
    pub path_kind: PathKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceRecord {
    pub canonical_cells: Vec<(i32, i32)>,
    pub rank: usize,
    pub classification: Classification,
    pub h: Vec<i64>,
    pub rook_poly: Vec<u64>,
    pub switching_rook_poly: Vec<u64>,
    pub prime_verdict: PrimeStatus,
    pub zig_zag_found: bool,
    pub gorenstein_verdict: GorensteinVerdict,
    /// Checks that failed on this instance.
    pub failed: Vec<Check>,
    /// Budget exhaustion, recorded instead of aborting the campaign.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckTally {
    pub applicable: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignSummary {
    pub max_rank: usize,
    pub mod_symmetry: bool,
    pub instances: u64,
    pub budget_exceeded: u64,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignReport {
    pub summary: CampaignSummary,
    pub instances: Vec<InstanceRecord>,
}

impl CampaignReport {
    pub fn failures(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.instances.iter().filter(|r| !r.failed.is_empty())
    }

    pub fn is_success(&self) -> bool {
        self.summary.failures == 0
    }

    /// One JSON object per instance, in enumeration order.
    pub fn to_jsonl(&self) -> String {
        self.instances.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary).expect("summary serializes")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CampaignOptions {
    pub mod_symmetry: bool,
    pub gb: GbOptions,
    pub zigzag_budget: u64,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions { mod_symmetry: true, gb: GbOptions::default(), zigzag_budget: DEFAULT_ZIGZAG_BUDGET }
    }
}

struct Evaluation {
    record: InstanceRecord,
    applicable: Vec<Check>,
}

fn evaluate(p: &CellCollection, checks: &BTreeSet<Check>, opts: &CampaignOptions) -> Result<Evaluation> {
    let hd = default_hilbert_data(p, &opts.gb)?;
    let rook = rook_polynomial(p)?;
    let switching = switching_rook_polynomial(p)?;
    let rook_num = rook_number(p)?;
    let verdict = prime_by_fallback(p, &opts.gb)?;
    if verdict.status == PrimeStatus::Indeterminate {
        return Err(Error::BudgetExceeded { what: "gröbner pairs", budget: opts.gb.max_pairs });
    }
    let prime = verdict.status == PrimeStatus::Prime;
    let walk = find_zigzag_walk(p, opts.zigzag_budget)?.is_some();
    let path = classify_path(p)?;
    let gor = gorenstein_from(p, hd.h.clone(), verdict.status)?;
    let simple = p.is_simple();
    let thin = is_thin(p);
    let as_i64 = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();

    let mut applicable = Vec::new();
    let mut failed = Vec::new();
    for &c in checks {
        let outcome = match c {
            Check::HEqualsSwitchingRook => Some(hd.h == as_i64(&switching)),
            Check::RegEqualsRookNumber => Some(hd.h_degree() == Some(rook_num)),
            Check::PrimeIffNoZigzag => Some(prime != walk),
            Check::SimpleImpliesPrime => simple.then_some(prime),
            Check::HeightEqualsRank => {
                let ring = default_ring(p);
                let lattice_rank = minor_lattice(&ring, p)?.rank;
                Some(lattice_rank == p.rank() && ring.nvars() - hd.dim == p.rank())
            }
            Check::ThinImpliesHEqualsRook => thin.then(|| hd.h == as_i64(&rook)),
            Check::ClosedPathGorenstein => (path.kind == PathKind::ClosedPath && prime).then(|| {
                let blocks3 = path.block_ranks().iter().all(|&r| r == 3);
                crate::invariants::is_palindromic(&hd.h) == blocks3
                    && (gor.verdict == GorensteinVerdict::Gorenstein) == blocks3
            }),
        };
        if let Some(ok) = outcome {
            applicable.push(c);
            if !ok {
                failed.push(c);
            }
        }
    }
    let record = InstanceRecord {
        canonical_cells: p.cells().map(|c| (c.i, c.j)).collect(),
        rank: p.rank(),
        classification: Classification { simple, thin, path_kind: path.kind },
        h: hd.h,
        rook_poly: rook,
        switching_rook_poly: switching,
        prime_verdict: verdict.status,
        zig_zag_found: walk,
        gorenstein_verdict: gor.verdict,
        failed,
        error: None,
    };
    Ok(Evaluation { record, applicable })
}

fn budget_record(p: &CellCollection, e: &Error) -> InstanceRecord {
    InstanceRecord {
        canonical_cells: p.cells().map(|c| (c.i, c.j)).collect(),
        rank: p.rank(),
        classification: Classification { simple: p.is_simple(), thin: is_thin(p), path_kind: PathKind::NotAPath },
        h: Vec::new(),
        rook_poly: Vec::new(),
        switching_rook_poly: Vec::new(),
        prime_verdict: PrimeStatus::Indeterminate,
        zig_zag_found: false,
        gorenstein_verdict: GorensteinVerdict::Inconclusive,
        failed: Vec::new(),
        error: Some(e.to_string()),
    }
}

/// Evaluates every polyomino of rank `1..=max_rank` in parallel; records come back in
/// enumeration order, so the report is deterministic.
pub fn run_campaign(max_rank: usize, checks: &BTreeSet<Check>, opts: &CampaignOptions) -> Result<CampaignReport> {
    let mut all = Vec::new();
    for n in 1..=max_rank {
        all.extend(enumerate_polyominoes_up_to(n, opts.mod_symmetry, max_rank.max(1))?);
    }
    let evals: Vec<std::result::Result<Evaluation, InstanceRecord>> = all
        .par_iter()
        .map(|p| match evaluate(p, checks, opts) {
            Ok(e) => Ok(Ok(e)),
            Err(e) if e.is_budget() => Ok(Err(budget_record(p, &e))),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;

    let mut tallies: BTreeMap<String, CheckTally> =
        checks.iter().map(|c| (c.name().to_string(), CheckTally::default())).collect();
    let mut instances = Vec::with_capacity(evals.len());
    let mut budget_exceeded = 0;
    for e in evals {
        match e {
            Ok(ev) => {
                for c in &ev.applicable {
                    let t = tallies.get_mut(c.name()).expect("tally per check");
                    t.applicable += 1;
                    t.failed += u64::from(ev.record.failed.contains(c));
                }
                instances.push(ev.record);
            }
            Err(rec) => {
                budget_exceeded += 1;
                instances.push(rec);
            }
        }
    }
    let failures = instances.iter().filter(|r| !r.failed.is_empty()).count() as u64;
    let summary = CampaignSummary {
        max_rank,
        mod_symmetry: opts.mod_symmetry,
        instances: instances.len() as u64,
        budget_exceeded,
        checks: tallies,
        failures,
    };
    Ok(CampaignReport { summary, instances })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_checks() -> BTreeSet<Check> {
        Check::ALL.into_iter().collect()
    }

    #[test]
    fn small_campaign_has_no_failures() {
        let r = run_campaign(4, &all_checks(), &CampaignOptions::default()).unwrap();
        assert!(r.is_success(), "{:?}", r.failures().collect::<Vec<_>>());
        // 1 + 1 + 2 + 5 free polyominoes
        assert_eq!(r.summary.instances, 9);
        assert_eq!(r.summary.checks["simpleImpliesPrime"].applicable, 9);
    }

    #[test]
    fn height_campaign_fixed() {
        let checks = [Check::HeightEqualsRank].into_iter().collect();
        let opts = CampaignOptions { mod_symmetry: false, ..Default::default() };
        let r = run_campaign(4, &checks, &opts).unwrap();
        assert_eq!(r.summary.instances, 1 + 2 + 6 + 19);
        assert!(r.is_success());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_campaign(4, &all_checks(), &CampaignOptions::default()).unwrap();
        let b = run_campaign(4, &all_checks(), &CampaignOptions::default()).unwrap();
        assert_eq!(a.to_jsonl(), b.to_jsonl());
        assert_eq!(a.to_jsonl().lines().count(), 9);
    }

    #[test]
    fn disabling_a_check_leaves_the_others() {
        let all = run_campaign(4, &all_checks(), &CampaignOptions::default()).unwrap();
        let mut fewer = all_checks();
        fewer.remove(&Check::PrimeIffNoZigzag);
        let some = run_campaign(4, &fewer, &CampaignOptions::default()).unwrap();
        for (k, v) in &some.summary.checks {
            assert_eq!(&all.summary.checks[k], v);
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
        assert!("nonsense".parse::<Check>().is_err());
    }

    #[test]
    fn budget_is_recorded_not_fatal() {
        let opts = CampaignOptions { gb: GbOptions::with_budget(1), ..Default::default() };
        let r = run_campaign(2, &all_checks(), &opts).unwrap();
        assert!(r.summary.budget_exceeded > 0);
        assert!(r.instances.iter().any(|i| i.error.is_some()));
    }
}
