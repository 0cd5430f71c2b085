//! Manipulative elicitation: the polynomial-time decision algorithm for
//! unique-winner manipulative elicitation under monotone, neutral,
//! worst-efficient score-based rules, plus witness construction and
//! verification.
//!
//! The decision step never runs any regret computation: it compares the
//! target's score in the true profile against the rule's worst attainable
//! score. Verification is a separate, potentially expensive step that runs
//! the full minimax-regret machinery.

use crate::order::AltId;
use crate::profile::{PartialProfile, Profile};
use crate::regret::{minimax_regret_winners, MrResult, RegretBudget, RegretError};
use crate::rules::{score, worst_score, Rule, RuleError};

/// A manipulative-elicitation query: make `target` the unique minimax-regret
/// winner of some partial profile the true profile completes.
#[derive(Debug, Clone)]
pub struct MeInstance {
    pub rule: Rule,
    pub profile: Profile,
    pub target: AltId,
}

/// Decision plus, on yes, the constructed witness partial profile.
#[derive(Debug, Clone)]
pub struct MeDecision {
    pub answer: bool,
    pub witness: Option<PartialProfile>,
}

/// Verification report: both conditions itemized, with the MR table kept as
/// evidence.
#[derive(Debug, Clone)]
pub struct MeVerifyReport {
    pub is_completion: bool,
    pub unique_winner: bool,
    pub mr: Option<MrResult>,
}

impl MeVerifyReport {
    pub fn ok(&self) -> bool {
        self.is_completion && self.unique_winner
    }
}

/// Decides manipulative elicitation: yes iff the target scores strictly above
/// the rule's worst possible score in the true profile.
pub fn me_decide(inst: &MeInstance) -> Result<MeDecision, RuleError> {
    let m = inst.profile.m();
    if inst.target >= m {
        return Err(RuleError::UnknownAlternative(inst.target));
    }
    let target_score = score(&inst.rule, &inst.profile, inst.target)?;
    let beta = worst_score(&inst.rule, m, inst.profile.n());
    if target_score == beta {
        Ok(MeDecision { answer: false, witness: None })
    } else {
        Ok(MeDecision {
            answer: true,
            witness: Some(me_witness(&inst.profile, inst.target)),
        })
    }
}

/// The yes-side witness: per voter keep exactly the pairs placing the target
/// above the alternatives it beats in that vote, and drop everything else.
pub fn me_witness(profile: &Profile, c: AltId) -> PartialProfile {
    let m = profile.m();
    let orders = profile
        .orders()
        .iter()
        .map(|order| {
            let pairs: Vec<(AltId, AltId)> =
                (0..m).filter(|&y| y != c && order.prefers(c, y)).map(|y| (c, y)).collect();
            crate::order::PartialOrder::from_pairs(m, &pairs).expect("star order is acyclic")
        })
        .collect();
    PartialProfile::new(m, orders).expect("same shape as profile")
}

/// Checks that `pp` is a manipulative elicitation for the instance: the true
/// profile completes it and the target is its unique minimax-regret winner.
pub fn me_verify(
    inst: &MeInstance,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<MeVerifyReport, RegretError> {
    let is_completion = inst.profile.completes(pp)?;
    if !is_completion {
        return Ok(MeVerifyReport { is_completion, unique_winner: false, mr: None });
    }
    let mr = minimax_regret_winners(&inst.rule, pp, budget)?;
    let unique_winner = mr.winner_set == vec![inst.target];
    Ok(MeVerifyReport { is_completion, unique_winner, mr: Some(mr) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{LinearOrder, PartialOrder};
    use crate::rules::{make_vector, score_int, VectorFamily};

    fn profile(m: usize, rankings: &[&[AltId]]) -> Profile {
        let orders =
            rankings.iter().map(|r| LinearOrder::new(r.to_vec()).unwrap()).collect();
        Profile::new(m, orders).unwrap()
    }

    fn plurality(m: usize) -> Rule {
        Rule::Scoring(make_vector(VectorFamily::Plurality, m).unwrap())
    }

    #[test]
    fn witness_keeps_only_targets_beaten_pairs() {
        // voter c > a > b (c = id 2, a = 0, b = 1)
        let p = profile(3, &[&[2, 0, 1], &[0, 1, 2], &[0, 2, 1]]);
        let w = me_witness(&p, 2);
        let expect0 = PartialOrder::from_pairs(3, &[(2, 0), (2, 1)]).unwrap();
        assert_eq!(w.order(0), &expect0);
        // voter a > b > c keeps nothing
        assert_eq!(w.order(1), &PartialOrder::empty(3).unwrap());
        // voter a > c > b keeps {c > b}
        let expect2 = PartialOrder::from_pairs(3, &[(2, 1)]).unwrap();
        assert_eq!(w.order(2), &expect2);
    }

    #[test]
    fn decide_no_when_target_has_worst_score() {
        // Borda with c last everywhere: score 0 = worst
        let p = profile(3, &[&[0, 1, 2], &[1, 0, 2]]);
        let borda = Rule::Scoring(make_vector(VectorFamily::Borda, 3).unwrap());
        let d = me_decide(&MeInstance { rule: borda, profile: p.clone(), target: 2 }).unwrap();
        assert!(!d.answer && d.witness.is_none());
        // Bucklin with c at the bottom everywhere: score -m = worst
        let d = me_decide(&MeInstance {
            rule: Rule::SimplifiedBucklin,
            profile: p,
            target: 2,
        })
        .unwrap();
        assert!(!d.answer);
    }

    #[test]
    fn decide_yes_when_target_tops_one_vote() {
        let p = profile(3, &[&[2, 0, 1], &[0, 1, 2]]);
        let d = me_decide(&MeInstance { rule: plurality(3), profile: p, target: 2 }).unwrap();
        assert!(d.answer && d.witness.is_some());
    }

    #[test]
    fn verify_accepts_the_constructed_witness() {
        let p = profile(3, &[&[2, 0, 1], &[0, 2, 1]]);
        let inst = MeInstance { rule: plurality(3), profile: p, target: 2 };
        let d = me_decide(&inst).unwrap();
        let report =
            me_verify(&inst, &d.witness.unwrap(), &RegretBudget::default()).unwrap();
        assert!(report.ok());
        let mr = report.mr.unwrap();
        assert_eq!(mr.winner_set, vec![2]);
        assert!(mr.mr_value(2) < mr.mr_value(0));
    }

    #[test]
    fn verify_rejects_contradicting_witness() {
        let p = profile(2, &[&[0, 1]]);
        let inst = MeInstance { rule: plurality(2), profile: p, target: 0 };
        let contradicting = PartialProfile::new(
            2,
            vec![PartialOrder::from_pairs(2, &[(1, 0)]).unwrap()],
        )
        .unwrap();
        let report = me_verify(&inst, &contradicting, &RegretBudget::default()).unwrap();
        assert!(!report.is_completion && !report.ok());
    }

    #[test]
    fn verify_rejects_complete_profile_when_target_not_unique() {
        let p = profile(2, &[&[0, 1], &[1, 0]]);
        let inst = MeInstance { rule: plurality(2), profile: p.clone(), target: 0 };
        let report = me_verify(&inst, &p.to_partial(), &RegretBudget::default()).unwrap();
        assert!(report.is_completion && !report.unique_winner);
    }

    #[test]
    fn yes_witness_scores() {
        // Sanity on the Theorem-1 shape: in the witness, every rival's MR is
        // the full best-minus-worst spread.
        let p = profile(3, &[&[2, 0, 1], &[2, 1, 0]]);
        let inst = MeInstance { rule: plurality(3), profile: p, target: 2 };
        let d = me_decide(&inst).unwrap();
        let mr = minimax_regret_winners(
            &inst.rule,
            &d.witness.unwrap(),
            &RegretBudget::default(),
        )
        .unwrap();
        assert_eq!(mr.mr_value(0), score_int(2));
        assert_eq!(mr.mr_value(1), score_int(2));
        assert!(mr.mr_value(2) < score_int(2));
    }
}
