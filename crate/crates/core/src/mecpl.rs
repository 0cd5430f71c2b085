//! Exact decision solver and verifier for manipulative elicitation with
//! candidate pair limits (MECPL): per unordered pair of alternatives, a lower
//! bound on the number of partial preferences where the pair must be
//! comparable.
//!
//! The limit function is checked against the *witness* partial profile. The
//! problem statement writes the bound against the complete profile, where it
//! would be vacuous; the reading used here is the only one consistent with
//! the hardness constructions, and the verifier report names it.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::order::{
    transitive_suborders_containing, AltId, OrderError, PartialOrder,
};
use crate::profile::{comparability_count, PartialProfile, Profile};
use crate::regret::{minimax_regret_winners, MrResult, RegretBudget, RegretError};
use crate::rules::{score, worst_score, Rule, RuleError};

/// Interpretation note attached to every verifier report.
pub const LIMIT_INTERPRETATION: &str =
    "pair limits are checked against the witness partial profile, not the complete profile";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MecplError {
    #[error("pair limit for ({0}, {1}) exceeds the number of preferences")]
    LimitAboveN(AltId, AltId),
    #[error("pair limit on a self pair ({0}, {0})")]
    SelfPair(AltId),
    #[error("duplicate pair limit for ({0}, {1})")]
    DuplicatePair(AltId, AltId),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Regret(#[from] RegretError),
}

/// Minimum comparability counts per unordered pair; absent pairs default 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairLimits {
    limits: BTreeMap<(AltId, AltId), usize>,
}

impl PairLimits {
    pub fn new() -> Self {
        PairLimits::default()
    }

    /// Uniform limit for every pair of `0..m`.
    pub fn uniform(m: usize, limit: usize) -> Self {
        let mut limits = BTreeMap::new();
        if limit > 0 {
            for a in 0..m {
                for b in a + 1..m {
                    limits.insert((a, b), limit);
                }
            }
        }
        PairLimits { limits }
    }

    pub fn set(&mut self, a: AltId, b: AltId, limit: usize) -> Result<(), MecplError> {
        if a == b {
            return Err(MecplError::SelfPair(a));
        }
        let key = (a.min(b), a.max(b));
        if self.limits.contains_key(&key) {
            return Err(MecplError::DuplicatePair(key.0, key.1));
        }
        if limit > 0 {
            self.limits.insert(key, limit);
        }
        Ok(())
    }

    pub fn get(&self, a: AltId, b: AltId) -> usize {
        self.limits.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Nonzero limits, sorted by pair.
    pub fn entries(&self) -> impl Iterator<Item = ((AltId, AltId), usize)> + '_ {
        self.limits.iter().map(|(&pair, &limit)| (pair, limit))
    }

    pub fn validate(&self, m: usize, n: usize) -> Result<(), MecplError> {
        for (&(a, b), &limit) in &self.limits {
            if b >= m {
                return Err(OrderError::IdOutOfRange { id: b, m }.into());
            }
            if limit > n {
                return Err(MecplError::LimitAboveN(a, b));
            }
        }
        Ok(())
    }
}

/// A MECPL instance: complete profile, distinguished target, pair limits.
#[derive(Debug, Clone)]
pub struct MecplInstance {
    pub rule: Rule,
    pub profile: Profile,
    pub target: AltId,
    pub limits: PairLimits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MecplAnswer {
    Yes,
    No,
    /// A budget was hit before the search space was exhausted.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct MecplOutcome {
    pub answer: MecplAnswer,
    pub witness: Option<PartialProfile>,
    pub nodes_explored: u64,
}

/// Itemized verification of a claimed witness.
#[derive(Debug, Clone)]
pub struct MecplVerifyReport {
    pub completion_ok: bool,
    pub completion_failures: Vec<usize>,
    pub limits_ok: bool,
    pub limit_violations: Vec<((AltId, AltId), usize, usize)>,
    pub winner_ok: bool,
    pub mr: Option<MrResult>,
    pub interpretation: &'static str,
}

impl MecplVerifyReport {
    pub fn ok(&self) -> bool {
        self.completion_ok && self.limits_ok && self.winner_ok
    }
}

/// The completion and pair-limit conditions alone (no winner computation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCheck {
    pub completion_failures: Vec<usize>,
    pub limit_violations: Vec<((AltId, AltId), usize, usize)>,
}

impl ShapeCheck {
    pub fn ok(&self) -> bool {
        self.completion_failures.is_empty() && self.limit_violations.is_empty()
    }
}

/// Checks conditions (1) and (2) of the witness definition: per-voter
/// completion, and every pair limit against the witness comparability count.
pub fn mecpl_check_shape(
    inst: &MecplInstance,
    pp: &PartialProfile,
) -> Result<ShapeCheck, MecplError> {
    inst.limits.validate(inst.profile.m(), inst.profile.n())?;
    if inst.profile.m() != pp.m() || inst.profile.n() != pp.n() {
        return Err(OrderError::MismatchedSets(inst.profile.m(), pp.m()).into());
    }
    let mut completion_failures = Vec::new();
    for voter in 0..pp.n() {
        if !crate::order::is_completion(inst.profile.order(voter), pp.order(voter))? {
            completion_failures.push(voter);
        }
    }
    let mut limit_violations = Vec::new();
    for ((a, b), limit) in inst.limits.entries() {
        let actual = comparability_count(pp, a, b)?;
        if actual < limit {
            limit_violations.push(((a, b), limit, actual));
        }
    }
    Ok(ShapeCheck { completion_failures, limit_violations })
}

/// Checks (1) per-voter completion, (2) every pair limit against the witness
/// comparability counts, (3) unique minimax-regret winner = target.
pub fn mecpl_verify(
    inst: &MecplInstance,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<MecplVerifyReport, MecplError> {
    let shape = mecpl_check_shape(inst, pp)?;
    let completion_ok = shape.completion_failures.is_empty();
    let limits_ok = shape.limit_violations.is_empty();
    let mr = minimax_regret_winners(&inst.rule, pp, budget)?;
    let winner_ok = mr.winner_set == vec![inst.target];
    Ok(MecplVerifyReport {
        completion_ok,
        completion_failures: shape.completion_failures,
        limits_ok,
        limit_violations: shape.limit_violations,
        winner_ok,
        mr: Some(mr),
        interpretation: LIMIT_INTERPRETATION,
    })
}

/// Exact depth-first search for a witness.
///
/// Voters are processed in input order; per-voter candidates are that
/// voter's transitive suborders in descending pair count (complete order
/// first), so witnesses close to the complete profile are found early.
/// Branches that cannot satisfy some pair limit even if all remaining voters
/// stay fully comparable are pruned. Leaf acceptance runs the minimax-regret
/// winner computation, memoized on the witness closure form. The outcome is
/// deterministic for a fixed budget.
pub fn mecpl_solve(
    inst: &MecplInstance,
    leaf_budget: u64,
    budget: &RegretBudget,
) -> Result<MecplOutcome, MecplError> {
    let m = inst.profile.m();
    let n = inst.profile.n();
    if inst.target >= m {
        return Err(RuleError::UnknownAlternative(inst.target).into());
    }
    inst.rule.check_m(m)?;
    inst.limits.validate(m, n)?;

    // Worst-score shortcut: if the target already has the worst possible
    // score, no witness exists under any limit function, because tightening
    // limits only shrinks the witness space of the unrestricted problem.
    let target_score = score(&inst.rule, &inst.profile, inst.target)?;
    if target_score == worst_score(&inst.rule, m, n) {
        return Ok(MecplOutcome { answer: MecplAnswer::No, witness: None, nodes_explored: 0 });
    }

    // Pairs with limit n must be comparable in every voter; bake those into
    // the per-voter candidate enumeration. This discards exactly the
    // candidates the capacity pruning below would reject at depth 0.
    let mut required_pairs: Vec<(AltId, AltId)> = Vec::new();
    for ((a, b), limit) in inst.limits.entries() {
        if limit == n {
            required_pairs.push((a, b));
        }
    }

    let mut candidates: Vec<Vec<PartialOrder>> = Vec::with_capacity(n);
    for voter in 0..n {
        let order = inst.profile.order(voter);
        let oriented: Vec<(AltId, AltId)> = required_pairs
            .iter()
            .map(|&(a, b)| if order.prefers(a, b) { (a, b) } else { (b, a) })
            .collect();
        let required = PartialOrder::from_pairs(m, &oriented)?;
        candidates.push(transitive_suborders_containing(order, &required)?);
    }

    let watched: Vec<((AltId, AltId), usize)> =
        inst.limits.entries().filter(|&(_, limit)| limit > 0).collect();

    struct Search<'a> {
        inst: &'a MecplInstance,
        candidates: &'a [Vec<PartialOrder>],
        watched: &'a [((AltId, AltId), usize)],
        budget: &'a RegretBudget,
        leaf_budget: u64,
        leaves: u64,
        budget_hit: bool,
        indeterminate: bool,
        memo: HashMap<Vec<PartialOrder>, bool>,
        chosen: Vec<PartialOrder>,
        satisfied: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, voter: usize) -> Result<Option<PartialProfile>, MecplError> {
            let n = self.candidates.len();
            if voter == n {
                if self.leaves >= self.leaf_budget {
                    self.budget_hit = true;
                    return Ok(None);
                }
                self.leaves += 1;
                let key = self.chosen.clone();
                let accept = match self.memo.get(&key) {
                    Some(&hit) => hit,
                    None => {
                        let pp = PartialProfile::new(self.inst.profile.m(), key.clone())
                            .expect("same shape");
                        let accept =
                            match minimax_regret_winners(&self.inst.rule, &pp, self.budget) {
                                Ok(mr) => mr.winner_set == vec![self.inst.target],
                                Err(RegretError::Budget(_)) => {
                                    self.indeterminate = true;
                                    false
                                }
                                Err(e) => return Err(e.into()),
                            };
                        self.memo.insert(key, accept);
                        accept
                    }
                };
                if accept {
                    let pp = PartialProfile::new(self.inst.profile.m(), self.chosen.clone())
                        .expect("same shape");
                    return Ok(Some(pp));
                }
                return Ok(None);
            }
            let remaining = n - voter - 1;
            'cands: for cand in &self.candidates[voter] {
                if self.budget_hit {
                    return Ok(None);
                }
                // Capacity pruning per watched pair.
                for (idx, &((a, b), limit)) in self.watched.iter().enumerate() {
                    let assigned = self.satisfied[idx] + cand.comparable(a, b) as usize;
                    if assigned + remaining < limit {
                        continue 'cands;
                    }
                }
                for (idx, &((a, b), _)) in self.watched.iter().enumerate() {
                    self.satisfied[idx] += cand.comparable(a, b) as usize;
                }
                self.chosen.push(cand.clone());
                let found = self.run(voter + 1)?;
                self.chosen.pop();
                for (idx, &((a, b), _)) in self.watched.iter().enumerate() {
                    self.satisfied[idx] -= cand.comparable(a, b) as usize;
                }
                if found.is_some() {
                    return Ok(found);
                }
            }
            Ok(None)
        }
    }

    let mut search = Search {
        inst,
        candidates: &candidates,
        watched: &watched,
        budget,
        leaf_budget,
        leaves: 0,
        budget_hit: false,
        indeterminate: false,
        memo: HashMap::new(),
        chosen: Vec::with_capacity(n),
        satisfied: vec![0; watched.len()],
    };
    let witness = search.run(0)?;
    let nodes_explored = search.leaves;
    let answer = match &witness {
        Some(_) => MecplAnswer::Yes,
        None if search.budget_hit || search.indeterminate => MecplAnswer::Inconclusive,
        None => MecplAnswer::No,
    };
    Ok(MecplOutcome { answer, witness, nodes_explored })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elicitation::{me_decide, MeInstance};
    use crate::order::LinearOrder;
    use crate::rules::{make_vector, VectorFamily};

    fn profile(m: usize, rankings: &[&[AltId]]) -> Profile {
        let orders =
            rankings.iter().map(|r| LinearOrder::new(r.to_vec()).unwrap()).collect();
        Profile::new(m, orders).unwrap()
    }

    fn plurality(m: usize) -> Rule {
        Rule::Scoring(make_vector(VectorFamily::Plurality, m).unwrap())
    }

    #[test]
    fn limits_at_n_force_the_complete_profile() {
        // Unique winner: yes. Tie: no.
        let budget = RegretBudget::default();
        let p = profile(3, &[&[0, 1, 2], &[0, 2, 1]]);
        let inst = MecplInstance {
            rule: plurality(3),
            profile: p,
            target: 0,
            limits: PairLimits::uniform(3, 2),
        };
        let out = mecpl_solve(&inst, 1_000, &budget).unwrap();
        assert_eq!(out.answer, MecplAnswer::Yes);
        assert_eq!(out.witness.as_ref().unwrap(), &inst.profile.to_partial());

        let tie = profile(3, &[&[0, 1, 2], &[1, 0, 2]]);
        let inst = MecplInstance {
            rule: plurality(3),
            profile: tie,
            target: 0,
            limits: PairLimits::uniform(3, 2),
        };
        let out = mecpl_solve(&inst, 1_000, &budget).unwrap();
        assert_eq!(out.answer, MecplAnswer::No);
    }

    #[test]
    fn zero_limits_match_me_decide() {
        let budget = RegretBudget::default();
        let p = profile(3, &[&[1, 0, 2], &[1, 2, 0]]);
        for target in 0..3 {
            let me = me_decide(&MeInstance {
                rule: plurality(3),
                profile: p.clone(),
                target,
            })
            .unwrap();
            let inst = MecplInstance {
                rule: plurality(3),
                profile: p.clone(),
                target,
                limits: PairLimits::new(),
            };
            let out = mecpl_solve(&inst, 100_000, &budget).unwrap();
            let expect = if me.answer { MecplAnswer::Yes } else { MecplAnswer::No };
            assert_eq!(out.answer, expect, "target {target}");
        }
    }

    #[test]
    fn worst_score_shortcut_is_a_fast_no() {
        let budget = RegretBudget::default();
        let p = profile(3, &[&[0, 1, 2], &[1, 0, 2]]);
        let inst = MecplInstance {
            rule: plurality(3),
            profile: p,
            target: 2,
            limits: PairLimits::new(),
        };
        let out = mecpl_solve(&inst, 1_000, &budget).unwrap();
        assert_eq!(out.answer, MecplAnswer::No);
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn yes_witnesses_verify() {
        let budget = RegretBudget::default();
        let p = profile(3, &[&[2, 0, 1], &[0, 1, 2]]);
        let mut limits = PairLimits::new();
        limits.set(0, 1, 2).unwrap();
        let inst = MecplInstance { rule: plurality(3), profile: p, target: 2, limits };
        let out = mecpl_solve(&inst, 100_000, &budget).unwrap();
        assert_eq!(out.answer, MecplAnswer::Yes);
        let report = mecpl_verify(&inst, &out.witness.unwrap(), &budget).unwrap();
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn verify_names_the_offending_pair() {
        let budget = RegretBudget::default();
        let p = profile(3, &[&[2, 0, 1], &[0, 1, 2]]);
        let mut limits = PairLimits::new();
        limits.set(0, 1, 2).unwrap();
        let inst = MecplInstance { rule: plurality(3), profile: p, target: 2, limits };
        // A witness leaving (0, 1) incomparable everywhere: limit violated.
        let pp = PartialProfile::new(
            3,
            vec![
                PartialOrder::from_pairs(3, &[(2, 0), (2, 1)]).unwrap(),
                PartialOrder::empty(3).unwrap(),
            ],
        )
        .unwrap();
        let report = mecpl_verify(&inst, &pp, &budget).unwrap();
        assert!(!report.limits_ok);
        assert_eq!(report.limit_violations, vec![((0, 1), 2, 0)]);
        assert_eq!(report.interpretation, LIMIT_INTERPRETATION);
    }

    #[test]
    fn budget_exhaustion_is_inconclusive_not_no() {
        let budget = RegretBudget::default();
        // A no-instance (target 1 loses the tie-handling): with a leaf budget
        // of 1 the search cannot finish, so the answer must be inconclusive.
        let p = profile(3, &[&[0, 1, 2], &[1, 0, 2]]);
        let inst = MecplInstance {
            rule: plurality(3),
            profile: p,
            target: 0,
            limits: PairLimits::uniform(3, 1),
        };
        let out = mecpl_solve(&inst, 1, &budget).unwrap();
        assert_eq!(out.answer, MecplAnswer::Inconclusive);
    }

    #[test]
    fn pair_limits_validate() {
        let mut limits = PairLimits::new();
        assert!(limits.set(1, 1, 1).is_err());
        limits.set(0, 1, 3).unwrap();
        assert!(limits.set(1, 0, 1).is_err()); // duplicate unordered pair
        assert!(limits.validate(3, 2).is_err()); // 3 > n
        assert!(limits.validate(3, 3).is_ok());
        assert_eq!(limits.get(1, 0), 3);
        assert_eq!(limits.get(0, 2), 0);
    }
}
