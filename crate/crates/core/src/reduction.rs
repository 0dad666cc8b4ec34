//! Necessary conditions, the size-reducing construction on tuples and the
//! solvability decision for generic eigenvalues.
//!
//! Given a tuple with `Σd_j ≥ 2n² − 2` (alpha) and `Σ_{i≠j} r_i ≥ n` for
//! every `j` (beta), either `Σr_j ≥ 2n` (omega) and the problem is solvable,
//! or each entry is shrunk to size `n₁ = Σr_j − n` and the test repeats. The
//! quantity `2n² − Σd_j` does not change along the way, so alpha is only
//! evaluated on the input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jnf::{ConjugacyShape, Jnf, JnfTuple, ShapeTuple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaCheck {
    pub holds: bool,
    /// `Σd_j − (2n² − 2)`.
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaCheck {
    pub holds: bool,
    /// `Σ_{i≠j} r_i − n`, one per entry.
    pub margins: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaCheck {
    pub holds: bool,
    /// `Σr_j − 2n`.
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub alpha: AlphaCheck,
    pub beta: BetaCheck,
    pub omega: OmegaCheck,
}

pub fn check_conditions<S: ConjugacyShape>(t: &ShapeTuple<S>) -> ConditionReport {
    let n = t.n() as i64;
    let d_sum = t.d_sum() as i64;
    let r = t.r_values();
    let r_sum: i64 = r.iter().map(|&x| x as i64).sum();

    let alpha_slack = d_sum - (2 * n * n - 2);
    let margins: Vec<i64> = r.iter().map(|&rj| r_sum - rj as i64 - n).collect();
    let omega_slack = r_sum - 2 * n;
    ConditionReport {
        alpha: AlphaCheck {
            holds: alpha_slack >= 0,
            slack: alpha_slack,
        },
        beta: BetaCheck {
            holds: margins.iter().all(|&m| m >= 0),
            margins,
        },
        omega: OmegaCheck {
            holds: omega_slack >= 0,
            slack: omega_slack,
        },
    }
}

/// `2n² − Σd_j`; a tuple is rigid when this equals 2.
pub fn defect<S: ConjugacyShape>(t: &ShapeTuple<S>) -> i64 {
    let n = t.n() as i64;
    2 * n * n - t.d_sum() as i64
}

fn psi_target<S: ConjugacyShape>(t: &ShapeTuple<S>) -> Result<u64> {
    let n = t.n();
    if n <= 1 {
        return Err(Error::PreconditionViolated(
            "the reduction needs n > 1".into(),
        ));
    }
    let report = check_conditions(t);
    if !report.beta.holds {
        return Err(Error::PreconditionViolated(format!(
            "beta fails for {t} (margins {:?})",
            report.beta.margins
        )));
    }
    if report.omega.holds {
        return Err(Error::PreconditionViolated(format!(
            "omega holds for {t}, nothing to reduce"
        )));
    }
    Ok(t.r_sum() - n)
}

/// One application of the reduction `n → n₁ = Σr_j − n`.
pub fn psi_step<S: ConjugacyShape>(t: &ShapeTuple<S>) -> Result<ShapeTuple<S>> {
    let n1 = psi_target(t)?;
    let by = t.n() - n1;
    let entries = t
        .entries()
        .iter()
        .map(|e| {
            debug_assert!(by <= t.n() - e.r(), "beta guarantees enough blocks");
            e.reduce(by)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ShapeTuple::from_entries(entries, n1))
}

/// Every tuple `psi_step` could produce if ties between eigenvalues with the
/// same (maximal) number of blocks were broken differently.
pub fn psi_step_variants(t: &JnfTuple) -> Result<Vec<JnfTuple>> {
    let n1 = psi_target(t)?;
    let by = t.n() - n1;
    let mut partial: Vec<Vec<Jnf>> = vec![Vec::new()];
    for e in t.entries() {
        let options = e
            .widest_slots()
            .into_iter()
            .map(|slot| e.reduce_slot(slot, by))
            .collect::<Result<Vec<_>>>()?;
        partial = partial
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<JnfTuple> = partial
        .into_iter()
        .map(|entries| ShapeTuple::from_entries(entries, n1))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    OmegaHolds,
    ReducedToSize1,
    AlphaFails,
    BetaFails,
    DegenerateInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub solvable: bool,
    pub reason: Reason,
    /// Index of the trace step at which the decision was made.
    pub at_step: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep<S> {
    /// The tuple reached at this step, before scalar entries are dropped.
    pub tuple: ShapeTuple<S>,
    /// Indices (into `tuple`) of entries that are scalar and were dropped.
    pub dropped: Vec<usize>,
    /// Conditions evaluated on the non-scalar entries.
    pub report: ConditionReport,
    /// Size of the next tuple, when a reduction was applied.
    pub n1: Option<u64>,
}

impl<S: ConjugacyShape> ReductionStep<S> {
    pub fn n(&self) -> u64 {
        self.tuple.n()
    }

    pub fn kept(&self) -> ShapeTuple<S> {
        self.tuple.without_scalars().0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace<S> {
    pub steps: Vec<ReductionStep<S>>,
    pub verdict: Verdict,
}

impl<S: ConjugacyShape> ReductionTrace<S> {
    pub fn solvable(&self) -> bool {
        self.verdict.solvable
    }

    /// Defect of every step; constant along a trace.
    pub fn defects(&self) -> Vec<i64> {
        self.steps.iter().map(|s| defect(&s.tuple)).collect()
    }

    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    tuple: s.tuple.to_string(),
                    n: s.tuple.n(),
                    n1: s.n1,
                    dropped: s.dropped.clone(),
                    defect: defect(&s.tuple),
                    conditions: s.report.clone(),
                })
                .collect(),
            verdict: self.verdict.clone(),
        }
    }
}

/// Decides solvability for generic eigenvalues, recording every step.
///
/// Eigenvalue genericity is assumed, not checked.
pub fn decide<S: ConjugacyShape>(t: &ShapeTuple<S>) -> ReductionTrace<S> {
    let mut steps = Vec::new();
    let mut current = t.clone();
    loop {
        let (kept, dropped) = current.without_scalars();
        let report = check_conditions(&kept);
        let index = steps.len();
        let finish = |solvable, reason| Verdict {
            solvable,
            reason,
            at_step: index,
        };

        let mut n1 = None;
        let verdict = if current.n() == 1 {
            Some(finish(true, Reason::ReducedToSize1))
        } else if kept.len() < 2 {
            // With n > 1 the remaining entry would have to be scalar too.
            Some(finish(false, Reason::DegenerateInput))
        } else if index == 0 && !report.alpha.holds {
            Some(finish(false, Reason::AlphaFails))
        } else if report.omega.holds {
            Some(finish(true, Reason::OmegaHolds))
        } else if !report.beta.holds {
            Some(finish(false, Reason::BetaFails))
        } else {
            n1 = Some(kept.r_sum() - kept.n());
            None
        };

        steps.push(ReductionStep {
            tuple: current.clone(),
            dropped,
            report,
            n1,
        });
        if let Some(verdict) = verdict {
            return ReductionTrace { steps, verdict };
        }
        current = psi_step(&kept).expect("beta holds and omega fails, so the step is defined");
        debug_assert!(current.n() < steps[index].tuple.n());
    }
}

/// True when a JNF tuple and its corresponding diagonal tuple get the same
/// verdict.
pub fn decide_diagonal_crosscheck(t: &JnfTuple) -> bool {
    decide(t).solvable() == decide(&t.corresponding_diagonal()).solvable()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub tuple: String,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n1: Option<u64>,
    pub dropped: Vec<usize>,
    pub defect: i64,
    pub conditions: ConditionReport,
}

/// Serialized trace: ordered steps with the tuple text form, condition
/// slacks and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub steps: Vec<StepJson>,
    pub verdict: Verdict,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jnf::Pmv;
    use crate::partition::Partition;

    fn pmv(s: &str) -> Pmv {
        s.parse().unwrap()
    }

    #[test]
    fn conditions_for_hypergeometric_triple() {
        let r = check_conditions(&pmv("(2,1);(1,1,1);(1,1,1)"));
        assert!(r.alpha.holds);
        assert_eq!(r.alpha.slack, 0);
        assert!(r.beta.holds);
        assert_eq!(r.beta.margins, vec![1, 0, 0]);
        assert!(!r.omega.holds);
        assert_eq!(r.omega.slack, -1);
    }

    #[test]
    fn conditions_for_xi8() {
        let t = pmv("(2,2,2,2);(4,4);(4,4);(7,1)");
        assert_eq!(t.d_values(), vec![14, 32, 32, 48]);
        assert_eq!(t.d_sum(), 126);
        assert_eq!(check_conditions(&t).alpha.slack, 0);
    }

    #[test]
    fn alpha_fails_for_two_halves() {
        for p in crate::partition::partitions_of(8) {
            let raw: Vec<&[u64]> = vec![&[4, 4], &[4, 4], p.parts()];
            let t = Pmv::from_parts(&raw).unwrap();
            let r = check_conditions(&t);
            assert!(!r.alpha.holds, "{t}");
            // 32 + 32 + d ≤ 32 + 32 + 56 = 120 < 126
            assert!(r.alpha.slack <= -6);
        }
    }

    #[test]
    fn psi_step_examples() {
        let w2 = pmv("(2,2,3);(2,2,3);(2,2,3)");
        assert_eq!(psi_step(&w2).unwrap(), pmv("(2,2,1);(2,2,1);(2,2,1)"));
        let pi9 = pmv("(2,2,2,2,1);(5,4);(5,4);(8,1)");
        assert_eq!(psi_step(&pi9).unwrap(), pmv("(2,2,2,1);(4,3);(4,3);(6,1)"));
    }

    #[test]
    fn psi_step_preconditions() {
        // omega holds
        assert!(psi_step(&pmv("(1,1,1);(1,1,1);(1,1,1)")).is_err());
        // beta fails
        assert!(psi_step(&pmv("(2,1,1,1,1,1);(4,2,1);(4,2,1)")).is_err());
        // n = 1
        assert!(psi_step(&pmv("(1);(1);(1)")).is_err());
    }

    #[test]
    fn decide_w2() {
        let trace = decide(&pmv("(2,2,3);(2,2,3);(2,2,3)"));
        let sizes: Vec<u64> = trace.steps.iter().map(|s| s.n()).collect();
        assert_eq!(sizes, vec![7, 5, 4, 2, 1]);
        assert_eq!(trace.verdict.reason, Reason::ReducedToSize1);
        assert!(trace.solvable());
        assert!(trace.defects().iter().all(|&d| d == 2));
    }

    #[test]
    fn decide_example_with_triple_multiplicity() {
        let trace = decide(&pmv("(3,2,1,1,1,1);(4,4,1);(4,4,1)"));
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(
            trace.steps[1].tuple,
            pmv("(2,1,1,1,1,1);(4,2,1);(4,2,1)")
        );
        assert_eq!(trace.steps[1].report.beta.margins[2], -1);
        assert_eq!(
            trace.verdict,
            Verdict {
                solvable: false,
                reason: Reason::BetaFails,
                at_step: 1
            }
        );
    }

    #[test]
    fn decide_drops_scalar_entries() {
        let trace = decide(&pmv("(5,3);(6,2);(6,2);(6,2);(6,2)"));
        assert_eq!(trace.steps[1].tuple.n(), 3);
        assert_eq!(trace.steps[1].dropped.len(), 1);
        assert_eq!(trace.steps[1].kept(), pmv("(2,1);(2,1);(2,1);(2,1)"));
        assert!(trace.solvable());
        assert!(trace.defects().iter().all(|&d| d == 2));
    }

    #[test]
    fn decide_degenerate_and_alpha() {
        let t = pmv("(3);(3);(3)");
        assert_eq!(decide(&t).verdict.reason, Reason::DegenerateInput);
        let t = pmv("(2,1);(3);(3)");
        assert_eq!(decide(&t).verdict.reason, Reason::DegenerateInput);
        let t = pmv("(4,4);(4,4);(1,1,1,1,1,1,1,1)");
        assert_eq!(decide(&t).verdict.reason, Reason::AlphaFails);
        let t = pmv("(1);(1)");
        assert_eq!(decide(&t).verdict.reason, Reason::ReducedToSize1);
        let t = pmv("(1,1,1);(1,1,1);(1,1,1)");
        assert_eq!(decide(&t).verdict.reason, Reason::OmegaHolds);
    }

    #[test]
    fn general_jnf_reduction() {
        let j = Jnf::new(vec![Partition::normalize(&[2, 2])]).unwrap();
        let t = JnfTuple::new(vec![j.clone(), j.clone(), j]).unwrap();
        // r = 2 each, Σr = 6 < 8, β: 4 ≥ 4, n1 = 2
        let next = psi_step(&t).unwrap();
        assert_eq!(next.n(), 2);
        assert_eq!(next.to_string(), "{(1,1)};{(1,1)};{(1,1)}");
    }

    #[test]
    fn crosscheck_examples() {
        let j = |s: &[&[u64]]| Jnf::new(s.iter().map(|b| Partition::normalize(b)).collect()).unwrap();
        let t = JnfTuple::new(vec![j(&[&[2, 2]]), j(&[&[2, 2]]), j(&[&[3, 1]])]).unwrap();
        assert!(decide_diagonal_crosscheck(&t));
        let c2 = JnfTuple::new(vec![
            j(&[&[1, 1], &[1, 1], &[1, 1]]),
            j(&[&[1, 1], &[1, 1], &[1, 1]]),
            j(&[&[3, 2, 1]]),
        ])
        .unwrap();
        assert_eq!(c2.corresponding_diagonal(), pmv("(2,2,2);(2,2,2);(3,2,1)"));
        assert!(decide_diagonal_crosscheck(&c2));
        let diag = pmv("(2,2,2);(2,2,2);(3,2,1)").to_jnf_tuple();
        assert!(decide_diagonal_crosscheck(&diag));
    }

    #[test]
    fn trace_json_round_trip() {
        let trace = decide(&pmv("(2,2,3);(2,2,3);(2,2,3)"));
        let json = serde_json::to_string(&trace.to_json()).unwrap();
        let back: TraceJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back, trace.to_json());
        assert_eq!(back.steps[0].tuple.parse::<Pmv>().unwrap(), trace.steps[0].tuple);
    }
}
