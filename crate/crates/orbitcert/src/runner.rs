//! Check orchestration: one report row per applicable (check, group) pair,
//! skip rows with reasons for inapplicable pairs, and a nonzero failure count
//! only when a proven bound fails.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use gfmatrix::regular_orbits_on_double;
use orbitstats::{
    check_cycle_bound, direct_sum_orbit_lower_bound, k_of, largest_orbit_bound, ln_u128,
    powerset_orbit_search, solvable_order_bound, CheckOutcome, CheckStatus,
};
use structure::{verify_fitting_orbit_bound, verify_gluck, verify_navarro, verify_second_fitting};

use crate::record::{BuiltGroup, CatalogEntry};

/// Order budget for the character-degree and Fitting-tower checks.
pub const SECTION4_ORDER_BUDGET: u128 = 2400;
/// Vector-space budget for regular-pair counting rows.
pub const REGULAR_PAIRS_SPACE_BUDGET: u128 = 256;
/// Vector-space budget for the Fitting-orbit rows.
pub const FITTING_ORBIT_SPACE_BUDGET: u128 = 1 << 12;

pub const ALL_CHECKS: &[&str] = &[
    "order_bound",
    "cycle_bound",
    "powerset_orbit",
    "orbit_bound",
    "regular_pairs",
    "direct_sum_orbit",
    "gluck",
    "second_fitting",
    "navarro",
    "fitting_orbit_bound",
];

/// Checks whose failure is a verification failure (the two conjecture rows
/// are informational).
const CONJECTURE_CHECKS: &[&str] = &["gluck_square", "navarro_product"];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub check: String,
    pub group: String,
    pub lhs_log: Option<f64>,
    pub rhs_log: Option<f64>,
    pub status: String,
    pub witness: serde_json::Value,
    pub certificate: Option<String>,
    pub ms: u64,
}

impl ReportRow {
    fn from_outcome(outcome: CheckOutcome, certificate: Option<String>, ms: u64) -> ReportRow {
        ReportRow {
            check: outcome.check,
            group: outcome.group,
            lhs_log: Some(outcome.lhs_log),
            rhs_log: Some(outcome.rhs_log),
            status: match outcome.status {
                CheckStatus::Pass => "pass".into(),
                CheckStatus::Tight => "tight".into(),
                CheckStatus::Fail => "fail".into(),
            },
            witness: outcome.witness,
            certificate,
            ms,
        }
    }

    fn skip(check: &str, group: &str, reason: String) -> ReportRow {
        ReportRow {
            check: check.into(),
            group: group.into(),
            lhs_log: None,
            rhs_log: None,
            status: "skip".into(),
            witness: json!({ "reason": reason }),
            certificate: None,
            ms: 0,
        }
    }

    pub fn is_proven_failure(&self) -> bool {
        self.status == "fail" && !CONJECTURE_CHECKS.contains(&self.check.as_str())
    }
}

struct RowTimer(Instant);

impl RowTimer {
    fn start() -> Self {
        RowTimer(Instant::now())
    }
    fn ms(&self) -> u64 {
        self.0.elapsed().as_millis() as u64
    }
}

fn push_outcome(
    rows: &mut Vec<ReportRow>,
    result: Result<CheckOutcome, String>,
    check: &str,
    group: &str,
    timer: RowTimer,
) {
    match result {
        Ok(outcome) => rows.push(ReportRow::from_outcome(outcome, None, timer.ms())),
        Err(reason) => rows.push(ReportRow::skip(check, group, reason)),
    }
}

fn perm_checks(entry: &CatalogEntry, selection: &[String], seed: u64) -> Vec<ReportRow> {
    let BuiltGroup::Perm(g) = &entry.group else {
        return Vec::new();
    };
    let id = entry.record.id.clone();
    let mut rows = Vec::new();
    let solvable = g.is_solvable();
    let want = |name: &str| selection.iter().any(|s| s == name);

    if want("order_bound") {
        let t = RowTimer::start();
        if solvable {
            push_outcome(
                &mut rows,
                solvable_order_bound(g, &id).map_err(|e| e.to_string()),
                "order_bound",
                &id,
                t,
            );
        } else {
            rows.push(ReportRow::skip("order_bound", &id, "not solvable".into()));
        }
    }

    let primitive_solvable = solvable && g.order() > 1 && g.is_primitive();

    if want("cycle_bound") {
        let t = RowTimer::start();
        if primitive_solvable && g.degree() <= 64 {
            match check_cycle_bound(g, &id) {
                Ok(report) => rows.push(ReportRow::from_outcome(report.outcome, None, t.ms())),
                Err(e) => rows.push(ReportRow::skip("cycle_bound", &id, e.to_string())),
            }
        } else {
            rows.push(ReportRow::skip(
                "cycle_bound",
                &id,
                "needs a primitive solvable group of degree at most 64".into(),
            ));
        }
    }

    if want("powerset_orbit") {
        if primitive_solvable && g.degree() <= 64 {
            let k = k_of(g.order());
            for m in 0..=k as usize {
                let t = RowTimer::start();
                let lambda: Vec<u32> = (0..m as u32).collect();
                match powerset_orbit_search(g, &id, &lambda, seed) {
                    Ok(out) => {
                        let cert = serde_json::to_value(out.certificate)
                            .ok()
                            .and_then(|v| v.as_str().map(String::from));
                        rows.push(ReportRow::from_outcome(out.outcome, cert, t.ms()));
                    }
                    Err(e) => rows.push(ReportRow::skip("powerset_orbit", &id, e.to_string())),
                }
            }
        } else {
            rows.push(ReportRow::skip(
                "powerset_orbit",
                &id,
                "needs a primitive solvable group of degree at most 64".into(),
            ));
        }
    }

    let in_section4_budget = solvable && g.order() <= SECTION4_ORDER_BUDGET;
    let budget_reason = || {
        if !solvable {
            "not solvable".to_string()
        } else {
            format!("order exceeds the section budget {SECTION4_ORDER_BUDGET}")
        }
    };

    if want("gluck") {
        let t = RowTimer::start();
        if in_section4_budget {
            match verify_gluck(g, &id) {
                Ok((alpha, square)) => {
                    let ms = t.ms();
                    rows.push(ReportRow::from_outcome(alpha, None, ms));
                    rows.push(ReportRow::from_outcome(square, None, ms));
                }
                Err(e) => rows.push(ReportRow::skip("gluck_alpha", &id, e.to_string())),
            }
        } else {
            rows.push(ReportRow::skip("gluck_alpha", &id, budget_reason()));
        }
    }

    if want("second_fitting") {
        let t = RowTimer::start();
        if in_section4_budget {
            push_outcome(
                &mut rows,
                verify_second_fitting(g, &id).map_err(|e| e.to_string()),
                "second_fitting",
                &id,
                t,
            );
        } else {
            rows.push(ReportRow::skip("second_fitting", &id, budget_reason()));
        }
    }

    if want("navarro") {
        let t = RowTimer::start();
        if in_section4_budget {
            match verify_navarro(g, &id) {
                Ok((proven, conjecture)) => {
                    let ms = t.ms();
                    rows.push(ReportRow::from_outcome(proven, None, ms));
                    rows.push(ReportRow::from_outcome(conjecture, None, ms));
                }
                Err(e) => rows.push(ReportRow::skip("navarro_alpha_plus_one", &id, e.to_string())),
            }
        } else {
            rows.push(ReportRow::skip("navarro_alpha_plus_one", &id, budget_reason()));
        }
    }

    rows
}

fn matrix_checks(entry: &CatalogEntry, selection: &[String]) -> Vec<ReportRow> {
    let BuiltGroup::Matrix(g) = &entry.group else {
        return Vec::new();
    };
    let id = entry.record.id.clone();
    let mut rows = Vec::new();
    let want = |name: &str| selection.iter().any(|s| s == name);

    if want("orbit_bound") {
        let t = RowTimer::start();
        let res = g
            .order()
            .map_err(|e| e.to_string())
            .and_then(|order| {
                if order == 1 {
                    return Err("trivial group".to_string());
                }
                if !g.is_solvable().map_err(|e| e.to_string())? {
                    return Err("not solvable".to_string());
                }
                largest_orbit_bound(g, &id).map_err(|e| e.to_string())
            });
        push_outcome(&mut rows, res, "orbit_bound", &id, t);
    }

    if want("regular_pairs") {
        let t = RowTimer::start();
        if g.space_size() <= REGULAR_PAIRS_SPACE_BUDGET {
            match regular_orbits_on_double(g, 1 << 13) {
                Ok(rp) => {
                    // when a regular pair exists, one of its vectors has a
                    // centralizer of order at most sqrt(|G|)
                    let (lhs, rhs, witness) = match &rp.witness {
                        Some((vec, c)) => (
                            ln_u128(*c),
                            ln_u128(rp.group_order).div_int(2),
                            json!({
                                "regular_orbits": rp.regular_orbits.to_string(),
                                "witness_vector": vec,
                                "centralizer_order": c.to_string(),
                            }),
                        ),
                        None => (
                            orbitstats::Fix::zero(),
                            orbitstats::Fix::zero(),
                            json!({"regular_orbits": "0"}),
                        ),
                    };
                    let outcome =
                        CheckOutcome::classify("regular_pairs", &id, &lhs, &rhs, witness);
                    rows.push(ReportRow::from_outcome(outcome, None, t.ms()));
                }
                Err(e) => rows.push(ReportRow::skip("regular_pairs", &id, e.to_string())),
            }
        } else {
            rows.push(ReportRow::skip(
                "regular_pairs",
                &id,
                format!("vector space exceeds {REGULAR_PAIRS_SPACE_BUDGET} points"),
            ));
        }
    }

    if want("direct_sum_orbit") {
        if let Some(blocks) = entry.blocks() {
            let t = RowTimer::start();
            let res = direct_sum_orbit_lower_bound(g, blocks[0])
                .map_err(|e| e.to_string())
                .and_then(|lower| {
                    let orbits = gfmatrix::vector_orbits(g).map_err(|e| e.to_string())?;
                    Ok(CheckOutcome::classify(
                        "direct_sum_orbit",
                        &id,
                        &ln_u128(lower),
                        &ln_u128(orbits.largest),
                        json!({
                            "lower_bound": lower.to_string(),
                            "largest_orbit": orbits.largest.to_string(),
                            "blocks": blocks,
                        }),
                    ))
                });
            push_outcome(&mut rows, res, "direct_sum_orbit", &id, t);
        }
    }

    if want("fitting_orbit_bound") {
        let t = RowTimer::start();
        let order = g.order().ok();
        if order.map_or(false, |o| 1 < o && o <= SECTION4_ORDER_BUDGET)
            && g.space_size() <= FITTING_ORBIT_SPACE_BUDGET
        {
            push_outcome(
                &mut rows,
                verify_fitting_orbit_bound(g, &id).map_err(|e| e.to_string()),
                "fitting_orbit_bound",
                &id,
                t,
            );
        } else {
            rows.push(ReportRow::skip(
                "fitting_orbit_bound",
                &id,
                "outside the order or space budget".into(),
            ));
        }
    }

    rows
}

/// Runs the selected checks over the catalog. Entries are processed in
/// parallel; rows come back in catalog order.
pub fn run_checks(catalog: &[CatalogEntry], selection: &[String], seed: u64) -> Vec<ReportRow> {
    catalog
        .par_iter()
        .map(|entry| {
            let mut rows = perm_checks(entry, selection, seed);
            rows.extend(matrix_checks(entry, selection));
            rows
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn proven_failures(rows: &[ReportRow]) -> usize {
    rows.iter().filter(|r| r.is_proven_failure()).count()
}
