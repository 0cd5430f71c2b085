//! s-Regret, pairwise max regret (PMR), s-MR and minimax-regret winner sets
//! over partial profiles.
//!
//! MR is computed as `max over rivals w of PMR(a, w)`; exchanging the max
//! over completions with the max over rivals is an identity for max-score
//! rules and is exercised against the definitional brute-force oracle
//! ([`max_regret_oracle`]) rather than assumed.
//!
//! PMR strategies per rule:
//! - scoring rules decompose voter by voter; the k-approval family has a
//!   closed form, general vectors enumerate one voter's extensions (memoized);
//! - maximin fixes the rival's weakest opponent `z`, after which each voter
//!   contributes one of at most two canonical extensions (rival raised
//!   maximally under either orientation of the (a, z) pair);
//! - Copeland enumerates per-voter signatures (the orientations of all pairs
//!   involving `a` or `w`), deduplicated and Pareto-pruned;
//! - Bucklin does the same over per-voter position pairs.
//!
//! Every joint enumeration respects a configurable budget; exceeding it is an
//! error, never an approximation.

use std::collections::HashMap;

use thiserror::Error;

use crate::order::{
    count_linear_extensions_capped, linear_extensions, linear_extensions_capped, AltId,
    BudgetExceeded, LinearOrder, Mask, OrderError, PartialOrder,
};
use crate::profile::{PartialProfile, Profile};
use crate::rules::{score_int, Rule, RuleError, Score, ScoreVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegretError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("invalid regret query: {0}")]
    BadQuery(&'static str),
}

/// Enumeration limits for the PMR engine and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegretBudget {
    /// Cap on one voter's enumerated extensions / signatures.
    pub per_voter_cap: usize,
    /// Cap on the joint signature product explored per PMR query.
    pub joint_cap: u64,
    /// Cap on the joint completion count for [`max_regret_oracle`].
    pub oracle_cap: u64,
}

impl Default for RegretBudget {
    fn default() -> Self {
        RegretBudget { per_voter_cap: 10_000, joint_cap: 10_000_000, oracle_cap: 1_000_000 }
    }
}

/// MR of one alternative with audit evidence: a rival realizing the value and
/// one adversarial completion reproducing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegretReport {
    pub alternative: AltId,
    pub mr_value: Score,
    pub competing: AltId,
    pub adversarial_completion: Profile,
}

/// Per-alternative reports plus the argmin winner set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrResult {
    pub reports: Vec<RegretReport>,
    pub winner_set: Vec<AltId>,
}

impl MrResult {
    pub fn report(&self, a: AltId) -> &RegretReport {
        &self.reports[a]
    }

    pub fn mr_value(&self, a: AltId) -> Score {
        self.reports[a].mr_value
    }
}

// ---------------------------------------------------------------------------
// Regret on complete profiles
// ---------------------------------------------------------------------------

/// All scores at once; shares the majority matrix across alternatives.
pub(crate) fn all_scores(rule: &Rule, profile: &Profile) -> Result<Vec<Score>, RuleError> {
    rule.check_m(profile.m())?;
    (0..profile.m()).map(|a| crate::rules::score(rule, profile, a)).collect()
}

/// `|s(s(R), R) - s(a, R)|` on a complete profile; zero iff `a` wins.
pub fn regret(rule: &Rule, a: AltId, profile: &Profile) -> Result<Score, RegretError> {
    if a >= profile.m() {
        return Err(RuleError::UnknownAlternative(a).into());
    }
    let scores = all_scores(rule, profile)?;
    let best = *scores.iter().max().expect("nonempty");
    Ok(best - scores[a])
}

// ---------------------------------------------------------------------------
// Deterministic extension construction
// ---------------------------------------------------------------------------

/// Builds the linear extension that repeatedly places the smallest-id
/// available alternative belonging to the earliest nonempty tier. Tiers that
/// are up-closed are thereby placed as early as the order allows.
fn extension_with_tiers(p: &PartialOrder, tiers: &[Mask]) -> LinearOrder {
    let m = p.m();
    let above: Vec<Mask> = (0..m).map(|a| p.above_mask(a)).collect();
    let mut placed: Mask = 0;
    let mut ranking = Vec::with_capacity(m);
    while ranking.len() < m {
        let mut pick = None;
        'tiers: for &tier in tiers {
            for a in 0..m {
                let bit = 1u64 << a;
                if tier & bit != 0 && placed & bit == 0 && above[a] & !placed == 0 {
                    pick = Some(a);
                    break 'tiers;
                }
            }
        }
        let a = pick.expect("tiers cover all alternatives");
        placed |= 1 << a;
        ranking.push(a);
    }
    LinearOrder::new(ranking).expect("constructed permutation")
}

fn full_mask(m: usize) -> Mask {
    if m == 64 {
        !0
    } else {
        (1u64 << m) - 1
    }
}

// ---------------------------------------------------------------------------
// Scoring rules: per-voter decomposition
// ---------------------------------------------------------------------------

struct ScoringMemo {
    table: HashMap<(PartialOrder, AltId, AltId), (i64, LinearOrder)>,
}

impl ScoringMemo {
    fn new() -> Self {
        ScoringMemo { table: HashMap::new() }
    }
}

/// Per-voter maximum of `v[pos(w)] - v[pos(a)]` over the voter's extensions,
/// with one maximizing extension.
fn per_voter_best(
    v: &ScoreVector,
    p: &PartialOrder,
    w: AltId,
    a: AltId,
    budget: &RegretBudget,
    memo: &mut ScoringMemo,
) -> Result<(i64, LinearOrder), RegretError> {
    if v.is_zero_one() {
        return Ok(per_voter_best_approval(v, p, w, a));
    }
    let key = (p.clone(), w, a);
    if let Some(hit) = memo.table.get(&key) {
        return Ok(hit.clone());
    }
    let mut best: Option<(i64, LinearOrder)> = None;
    let mut count = 0usize;
    for ext in linear_extensions(p) {
        count += 1;
        if count > budget.per_voter_cap {
            return Err(BudgetExceeded {
                what: "per-voter extensions",
                cap: budget.per_voter_cap as u64,
            }
            .into());
        }
        let value =
            v.at_position(ext.position(w)) as i64 - v.at_position(ext.position(a)) as i64;
        if best.as_ref().map_or(true, |(b, _)| value > *b) {
            best = Some((value, ext));
        }
    }
    let best = best.expect("at least one extension");
    memo.table.insert(key, best.clone());
    Ok(best)
}

/// Closed form for 0/1 vectors (the k-approval family). The combo
/// feasibility tests mirror the up-closed-prefix constructions used to build
/// the witness extensions, and are property-tested against enumeration.
fn per_voter_best_approval(
    v: &ScoreVector,
    p: &PartialOrder,
    w: AltId,
    a: AltId,
) -> (i64, LinearOrder) {
    let m = p.m();
    let k = v.entries().iter().filter(|&&e| e == 1).count();
    let all = full_mask(m);
    let anc_w = p.above_mask(w);
    let anc_a = p.above_mask(a);
    let wbit = 1u64 << w;
    let abit = 1u64 << a;

    let w_in_possible = (anc_w.count_ones() as usize) < k;
    let a_out_free = m - 1 - (p.below_mask(a).count_ones() as usize);

    // w inside the top k, a outside.
    if anc_w & abit == 0 && w != a && w_in_possible && a_out_free >= k {
        let top = anc_w | wbit;
        let fill = all & !(abit | p.below_mask(a));
        let ext = extension_with_tiers(p, &[top, fill, all]);
        debug_assert!(ext.position(w) <= k && ext.position(a) > k);
        return (1, ext);
    }
    // Both inside.
    let hull = anc_w | wbit | anc_a | abit;
    if (hull.count_ones() as usize) <= k {
        let ext = extension_with_tiers(p, &[hull, all]);
        debug_assert!(ext.position(w) <= k && ext.position(a) <= k);
        return (0, ext);
    }
    // Both outside.
    let blocked = wbit | abit | p.below_mask(w) | p.below_mask(a);
    let x = all & !blocked;
    if (x.count_ones() as usize) >= k {
        let ext = extension_with_tiers(p, &[x, all]);
        debug_assert!(ext.position(w) > k && ext.position(a) > k);
        return (0, ext);
    }
    // Only (w out, a in) remains feasible; any extension realizes -1.
    let ext = extension_with_tiers(p, &[all]);
    debug_assert!(ext.position(w) > k && ext.position(a) <= k);
    (-1, ext)
}

fn pmr_scoring(
    v: &ScoreVector,
    a: AltId,
    w: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
    memo: &mut ScoringMemo,
) -> Result<(Score, Profile), RegretError> {
    let mut total = 0i64;
    let mut orders = Vec::with_capacity(pp.n());
    for p in pp.orders() {
        let (value, ext) = per_voter_best(v, p, w, a, budget, memo)?;
        total += value;
        orders.push(ext);
    }
    let profile = Profile::new(pp.m(), orders).expect("extensions share m");
    Ok((score_int(total), profile))
}

// ---------------------------------------------------------------------------
// Maximin
// ---------------------------------------------------------------------------

/// Raise `w` as high as `p` allows: its beaten set is then exactly the
/// non-ancestors.
fn raise_extension(p: &PartialOrder, w: AltId) -> LinearOrder {
    let m = p.m();
    extension_with_tiers(p, &[p.above_mask(w) | (1u64 << w), full_mask(m)])
}

fn pmr_maximin(
    a: AltId,
    w: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<(Score, Profile), RegretError> {
    let m = pp.m();
    let n = pp.n();
    let mut best: Option<(i64, Vec<LinearOrder>)> = None;
    let mut leaves = 0u64;

    for z in 0..m {
        if z == a {
            continue;
        }
        // Per voter: at most two canonical options, one per orientation of
        // the (a, z) pair, each with w raised maximally.
        struct Opt {
            beats: Mask,
            a_beats_z: bool,
            ext: LinearOrder,
        }
        let mut options: Vec<Vec<Opt>> = Vec::with_capacity(n);
        for p in pp.orders() {
            let mut voter = Vec::with_capacity(2);
            for (pair, t) in [((z, a), false), ((a, z), true)] {
                let augmented = if pair.0 == pair.1 {
                    None // z == a is excluded above; kept for clarity
                } else {
                    p.with_pair(pair.0, pair.1)
                };
                if let Some(aug) = augmented {
                    let beats = full_mask(m) & !(aug.above_mask(w) | (1u64 << w));
                    let ext = raise_extension(&aug, w);
                    voter.push(Opt { beats, a_beats_z: t, ext });
                }
            }
            if voter.len() == 2 {
                if voter[0].beats == voter[1].beats {
                    voter.truncate(1); // t=false dominates on the penalty term
                } else if voter[0].beats & !voter[1].beats == 0 && voter[1].a_beats_z {
                    // option 1 has a superset beaten set but pays t=1 while
                    // option 0 pays t=0: neither dominates; keep both.
                } else if voter[1].beats & !voter[0].beats == 0 {
                    voter.truncate(1);
                }
            }
            debug_assert!(!voter.is_empty());
            options.push(voter);
        }

        let mut product = 1u128;
        for voter in &options {
            product = product.saturating_mul(voter.len() as u128);
        }
        if product > budget.joint_cap as u128 {
            return Err(BudgetExceeded { what: "maximin joint signatures", cap: budget.joint_cap }
                .into());
        }

        // DFS over the option product, accumulating w's pairwise counts and
        // the count N(a, z).
        let mut counts = vec![0i64; m];
        let mut choice = vec![0usize; n];
        fn rec(
            voter: usize,
            options: &[Vec<Opt>],
            counts: &mut [i64],
            t_sum: i64,
            choice: &mut [usize],
            w: AltId,
            m: usize,
            leaves: &mut u64,
            cap: u64,
            best: &mut Option<(i64, Vec<usize>)>,
        ) -> Result<(), BudgetExceeded> {
            if voter == options.len() {
                *leaves += 1;
                if *leaves > cap {
                    return Err(BudgetExceeded { what: "maximin joint signatures", cap });
                }
                let min_row = (0..m)
                    .filter(|&y| y != w)
                    .map(|y| counts[y])
                    .min()
                    .unwrap_or(0);
                let value = min_row - t_sum;
                if best.as_ref().map_or(true, |(b, _)| value > *b) {
                    *best = Some((value, choice.to_vec()));
                }
                return Ok(());
            }
            for (i, opt) in options[voter].iter().enumerate() {
                choice[voter] = i;
                let mut mask = opt.beats;
                while mask != 0 {
                    let y = mask.trailing_zeros() as usize;
                    counts[y] += 1;
                    mask &= mask - 1;
                }
                let t = t_sum + opt.a_beats_z as i64;
                rec(voter + 1, options, counts, t, choice, w, m, leaves, cap, best)?;
                let mut mask = opt.beats;
                while mask != 0 {
                    let y = mask.trailing_zeros() as usize;
                    counts[y] -= 1;
                    mask &= mask - 1;
                }
            }
            Ok(())
        }
        let mut z_best: Option<(i64, Vec<usize>)> = None;
        rec(
            0,
            &options,
            &mut counts,
            0,
            &mut choice,
            w,
            m,
            &mut leaves,
            budget.joint_cap,
            &mut z_best,
        )?;
        if let Some((value, picks)) = z_best {
            if best.as_ref().map_or(true, |(b, _)| value > *b) {
                let orders: Vec<LinearOrder> = picks
                    .iter()
                    .enumerate()
                    .map(|(voter, &i)| options[voter][i].ext.clone())
                    .collect();
                best = Some((value, orders));
            }
        }
    }

    let (value, orders) = best.expect("m >= 2 so some z exists");
    let profile = Profile::new(m, orders).expect("extensions share m");
    Ok((score_int(value), profile))
}

// ---------------------------------------------------------------------------
// Copeland and Bucklin: joint signature enumeration
// ---------------------------------------------------------------------------

/// One voter's deduped, Pareto-pruned score-relevant signatures together
/// with a representative extension for each.
struct VoterSignatures<S> {
    sigs: Vec<(S, LinearOrder)>,
}

fn voter_signatures<S: Copy + PartialEq>(
    p: &PartialOrder,
    budget: &RegretBudget,
    project: impl Fn(&LinearOrder) -> S,
    dominates: impl Fn(&S, &S) -> bool,
) -> Result<VoterSignatures<S>, RegretError> {
    let mut sigs: Vec<(S, LinearOrder)> = Vec::new();
    let mut count = 0usize;
    for ext in linear_extensions(p) {
        count += 1;
        if count > budget.per_voter_cap {
            return Err(BudgetExceeded {
                what: "per-voter extensions",
                cap: budget.per_voter_cap as u64,
            }
            .into());
        }
        let sig = project(&ext);
        if !sigs.iter().any(|(s, _)| *s == sig) {
            sigs.push((sig, ext));
        }
    }
    // Pareto prune: drop any signature strictly dominated by another.
    let keep: Vec<bool> = sigs
        .iter()
        .map(|(s, _)| !sigs.iter().any(|(other, _)| other != s && dominates(other, s)))
        .collect();
    let sigs = sigs
        .into_iter()
        .zip(keep)
        .filter_map(|(pair, keep)| keep.then_some(pair))
        .collect();
    Ok(VoterSignatures { sigs })
}

fn joint_product_guard<S>(
    voters: &[VoterSignatures<S>],
    cap: u64,
    what: &'static str,
) -> Result<(), BudgetExceeded> {
    let mut product = 1u128;
    for v in voters {
        product = product.saturating_mul(v.sigs.len().max(1) as u128);
    }
    if product > cap as u128 {
        return Err(BudgetExceeded { what, cap });
    }
    Ok(())
}

/// Generic DFS over the per-voter signature product. `push`/`pop` maintain
/// accumulator state; `eval` scores a leaf.
fn joint_max<S, Acc>(
    voters: &[VoterSignatures<S>],
    acc: &mut Acc,
    push: &mut impl FnMut(&mut Acc, &S),
    pop: &mut impl FnMut(&mut Acc, &S),
    eval: &mut impl FnMut(&Acc) -> Score,
) -> Option<(Score, Vec<usize>)> {
    fn rec<S, Acc>(
        voter: usize,
        voters: &[VoterSignatures<S>],
        acc: &mut Acc,
        choice: &mut Vec<usize>,
        push: &mut impl FnMut(&mut Acc, &S),
        pop: &mut impl FnMut(&mut Acc, &S),
        eval: &mut impl FnMut(&Acc) -> Score,
        best: &mut Option<(Score, Vec<usize>)>,
    ) {
        if voter == voters.len() {
            let value = eval(acc);
            if best.as_ref().map_or(true, |(b, _)| value > *b) {
                *best = Some((value, choice.clone()));
            }
            return;
        }
        for (i, (sig, _)) in voters[voter].sigs.iter().enumerate() {
            choice.push(i);
            push(acc, sig);
            rec(voter + 1, voters, acc, choice, push, pop, eval, best);
            pop(acc, sig);
            choice.pop();
        }
    }
    let mut best = None;
    let mut choice = Vec::with_capacity(voters.len());
    rec(0, voters, acc, &mut choice, push, pop, eval, &mut best);
    best
}

fn completion_from_choice<S>(
    m: usize,
    voters: &[VoterSignatures<S>],
    choice: &[usize],
) -> Profile {
    let orders: Vec<LinearOrder> = choice
        .iter()
        .enumerate()
        .map(|(voter, &i)| voters[voter].sigs[i].1.clone())
        .collect();
    Profile::new(m, orders).expect("extensions share m")
}

fn pmr_copeland(
    alpha: Score,
    a: AltId,
    w: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<(Score, Profile), RegretError> {
    let m = pp.m();
    let n = pp.n() as i64;
    type Sig = (Mask, Mask); // (w's beaten set, a's beaten set)
    let mut voters = Vec::with_capacity(pp.n());
    for p in pp.orders() {
        voters.push(voter_signatures(
            p,
            budget,
            |ext| (ext.beats_mask(w), ext.beats_mask(a)),
            // Bigger w-row and smaller a-row can only help s(w) - s(a).
            |other: &Sig, s: &Sig| s.0 & !other.0 == 0 && other.1 & !s.1 == 0,
        )?);
    }
    joint_product_guard(&voters, budget.joint_cap, "copeland joint signatures")?;

    struct Acc {
        w_counts: Vec<i64>,
        a_counts: Vec<i64>,
    }
    let mut acc = Acc { w_counts: vec![0; m], a_counts: vec![0; m] };
    let bump = |counts: &mut [i64], mut mask: Mask, delta: i64| {
        while mask != 0 {
            let y = mask.trailing_zeros() as usize;
            counts[y] += delta;
            mask &= mask - 1;
        }
    };
    let copeland_of = move |counts: &[i64], x: AltId| -> (i64, i64) {
        let mut wins = 0i64;
        let mut ties = 0i64;
        for y in 0..counts.len() {
            if y == x {
                continue;
            }
            let d = 2 * counts[y] - n;
            if d > 0 {
                wins += 1;
            } else if d == 0 {
                ties += 1;
            }
        }
        (wins, ties)
    };
    let best = joint_max(
        &voters,
        &mut acc,
        &mut |acc, sig: &Sig| {
            bump(&mut acc.w_counts, sig.0, 1);
            bump(&mut acc.a_counts, sig.1, 1);
        },
        &mut |acc, sig: &Sig| {
            bump(&mut acc.w_counts, sig.0, -1);
            bump(&mut acc.a_counts, sig.1, -1);
        },
        &mut |acc| {
            let (ww, wt) = copeland_of(&acc.w_counts, w);
            let (aw, at) = copeland_of(&acc.a_counts, a);
            score_int(ww - aw) + alpha * score_int(wt - at)
        },
    )
    .expect("at least one joint signature");
    let profile = completion_from_choice(m, &voters, &best.1);
    Ok((best.0, profile))
}

fn pmr_bucklin(
    a: AltId,
    w: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<(Score, Profile), RegretError> {
    let m = pp.m();
    let n = pp.n();
    type Sig = (usize, usize); // (position of w, position of a)
    let mut voters = Vec::with_capacity(n);
    for p in pp.orders() {
        voters.push(voter_signatures(
            p,
            budget,
            |ext| (ext.position(w), ext.position(a)),
            // w higher (smaller position) and a lower can only help.
            |other: &Sig, s: &Sig| other.0 <= s.0 && other.1 >= s.1,
        )?);
    }
    joint_product_guard(&voters, budget.joint_cap, "bucklin joint signatures")?;

    struct Acc {
        w_hist: Vec<i64>,
        a_hist: Vec<i64>,
        n: i64,
    }
    let mut acc = Acc { w_hist: vec![0; m + 1], a_hist: vec![0; m + 1], n: n as i64 };
    let level = |hist: &[i64], n: i64| -> i64 {
        let mut cumulative = 0;
        for (pos, &count) in hist.iter().enumerate().skip(1) {
            cumulative += count;
            if 2 * cumulative > n {
                return pos as i64;
            }
        }
        hist.len() as i64 - 1
    };
    let best = joint_max(
        &voters,
        &mut acc,
        &mut |acc, sig: &Sig| {
            acc.w_hist[sig.0] += 1;
            acc.a_hist[sig.1] += 1;
        },
        &mut |acc, sig: &Sig| {
            acc.w_hist[sig.0] -= 1;
            acc.a_hist[sig.1] -= 1;
        },
        &mut |acc| {
            // score = -level, so s(w) - s(a) = level(a) - level(w)
            score_int(level(&acc.a_hist, acc.n) - level(&acc.w_hist, acc.n))
        },
    )
    .expect("at least one joint signature");
    let profile = completion_from_choice(m, &voters, &best.1);
    Ok((best.0, profile))
}

// ---------------------------------------------------------------------------
// PMR, MR, minimax winners
// ---------------------------------------------------------------------------

fn pmr_with_completion(
    rule: &Rule,
    a: AltId,
    w: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
    memo: &mut ScoringMemo,
) -> Result<(Score, Profile), RegretError> {
    if a == w {
        return Err(RegretError::BadQuery("pmr requires a != w"));
    }
    if a >= pp.m() || w >= pp.m() {
        return Err(RuleError::UnknownAlternative(a.max(w)).into());
    }
    rule.check_m(pp.m())?;
    match rule {
        Rule::Scoring(v) => pmr_scoring(v, a, w, pp, budget, memo),
        Rule::Maximin => pmr_maximin(a, w, pp, budget),
        Rule::Copeland(alpha) => pmr_copeland(*alpha, a, w, pp, budget),
        Rule::SimplifiedBucklin => pmr_bucklin(a, w, pp, budget),
    }
}

/// Exact maximum of `s(w, R) - s(a, R)` over completions `R` of `pp`.
pub fn pmr(
    rule: &Rule,
    a: AltId,
    w: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<Score, RegretError> {
    let mut memo = ScoringMemo::new();
    pmr_with_completion(rule, a, w, pp, budget, &mut memo).map(|(value, _)| value)
}

fn max_regret_with_memo(
    rule: &Rule,
    a: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
    memo: &mut ScoringMemo,
) -> Result<RegretReport, RegretError> {
    if a >= pp.m() {
        return Err(RuleError::UnknownAlternative(a).into());
    }
    rule.check_m(pp.m())?;
    if pp.m() == 1 {
        // A one-alternative election: a necessarily wins with regret 0.
        let orders = pp.orders().iter().map(|_| LinearOrder::new(vec![0]).unwrap()).collect();
        let completion = Profile::new(1, orders).expect("singleton");
        return Ok(RegretReport {
            alternative: a,
            mr_value: score_int(0),
            competing: a,
            adversarial_completion: completion,
        });
    }
    let mut best: Option<(Score, AltId, Profile)> = None;
    for w in 0..pp.m() {
        if w == a {
            continue;
        }
        let (value, completion) = pmr_with_completion(rule, a, w, pp, budget, memo)?;
        // Strict improvement keeps the lowest-id maximizer.
        if best.as_ref().map_or(true, |(b, _, _)| value > *b) {
            best = Some((value, w, completion));
        }
    }
    let (pmr_star, w_star, completion) = best.expect("m >= 2");
    let zero = score_int(0);
    let mr_value = if pmr_star > zero { pmr_star } else { zero };
    let competing = if pmr_star >= zero { w_star } else { a };
    let report =
        RegretReport { alternative: a, mr_value, competing, adversarial_completion: completion };
    debug_assert_eq!(
        regret(rule, a, &report.adversarial_completion).expect("audit recompute"),
        report.mr_value,
        "adversarial completion must reproduce the MR value"
    );
    Ok(report)
}

/// s-MR: the worst-case regret of `a` over all completions of `pp`, floored
/// at zero, with a maximizing rival and one adversarial completion.
pub fn max_regret(
    rule: &Rule,
    a: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<RegretReport, RegretError> {
    let mut memo = ScoringMemo::new();
    max_regret_with_memo(rule, a, pp, budget, &mut memo)
}

/// Minimax-regret winners: the argmin of s-MR, with full per-alternative
/// reports. Reports come out in ascending alternative order regardless of
/// evaluation strategy.
pub fn minimax_regret_winners(
    rule: &Rule,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<MrResult, RegretError> {
    rule.check_m(pp.m())?;
    let mut memo = ScoringMemo::new();
    let reports: Vec<RegretReport> = (0..pp.m())
        .map(|a| max_regret_with_memo(rule, a, pp, budget, &mut memo))
        .collect::<Result<_, _>>()?;
    let best = reports.iter().map(|r| r.mr_value).min().expect("m >= 1");
    let winner_set = (0..pp.m()).filter(|&a| reports[a].mr_value == best).collect();
    Ok(MrResult { reports, winner_set })
}

// ---------------------------------------------------------------------------
// Definitional oracle
// ---------------------------------------------------------------------------

/// The definitional brute force: enumerate every joint completion via
/// per-voter linear extensions, compute the regret of `a` in each, take the
/// maximum. Kept independent of the PMR engine; the engine is verified
/// against this.
pub fn max_regret_oracle(
    rule: &Rule,
    a: AltId,
    pp: &PartialProfile,
    budget: &RegretBudget,
) -> Result<Score, RegretError> {
    if a >= pp.m() {
        return Err(RuleError::UnknownAlternative(a).into());
    }
    rule.check_m(pp.m())?;
    let cap = budget.oracle_cap;
    let mut product = 1u128;
    let mut per_voter: Vec<Vec<LinearOrder>> = Vec::with_capacity(pp.n());
    for p in pp.orders() {
        count_linear_extensions_capped(p, cap)?;
        let exts = linear_extensions_capped(p, cap as usize)?;
        product = product.saturating_mul(exts.len() as u128);
        if product > cap as u128 {
            return Err(BudgetExceeded { what: "joint completions", cap }.into());
        }
        per_voter.push(exts);
    }

    let mut indices = vec![0usize; pp.n()];
    let mut best: Option<Score> = None;
    loop {
        let orders: Vec<LinearOrder> =
            indices.iter().enumerate().map(|(v, &i)| per_voter[v][i].clone()).collect();
        let profile = Profile::new(pp.m(), orders).expect("same m");
        let scores = all_scores(rule, &profile)?;
        let top = *scores.iter().max().expect("nonempty");
        let value = top - scores[a];
        if best.map_or(true, |b| value > b) {
            best = Some(value);
        }
        // Odometer increment.
        let mut pos = pp.n();
        loop {
            if pos == 0 {
                return Ok(best.expect("at least one completion"));
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < per_voter[pos].len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::PartialOrder;
    use crate::rules::{make_vector, VectorFamily};

    fn plurality(m: usize) -> Rule {
        Rule::Scoring(make_vector(VectorFamily::Plurality, m).unwrap())
    }

    fn borda(m: usize) -> Rule {
        Rule::Scoring(make_vector(VectorFamily::Borda, m).unwrap())
    }

    fn profile(m: usize, rankings: &[&[AltId]]) -> Profile {
        let orders =
            rankings.iter().map(|r| LinearOrder::new(r.to_vec()).unwrap()).collect();
        Profile::new(m, orders).unwrap()
    }

    #[test]
    fn regret_on_complete_profiles() {
        let p = profile(3, &[&[0, 1, 2], &[0, 2, 1]]);
        assert_eq!(regret(&plurality(3), 0, &p).unwrap(), score_int(0));
        assert_eq!(regret(&plurality(3), 1, &p).unwrap(), score_int(2));
        let single = profile(3, &[&[0, 1, 2]]);
        assert_eq!(regret(&borda(3), 1, &single).unwrap(), score_int(1));
    }

    #[test]
    fn pmr_on_complete_profile_is_score_difference() {
        let p = profile(3, &[&[0, 1, 2], &[1, 0, 2]]);
        let pp = p.to_partial();
        let budget = RegretBudget::default();
        for rule in [plurality(3), borda(3), Rule::Maximin, Rule::SimplifiedBucklin] {
            let scores = all_scores(&rule, &p).unwrap();
            assert_eq!(pmr(&rule, 2, 0, &pp, &budget).unwrap(), scores[0] - scores[2]);
        }
    }

    #[test]
    fn pmr_single_empty_voter_plurality() {
        let pp = PartialProfile::empty(3, 1).unwrap();
        let budget = RegretBudget::default();
        assert_eq!(pmr(&plurality(3), 0, 1, &pp, &budget).unwrap(), score_int(1));
    }

    #[test]
    fn pmr_borda_with_a_over_w_is_negative() {
        // {a > w} over {a, w, x}: the adversary cannot put w above a, best is -1.
        let pp = PartialProfile::new(
            3,
            vec![PartialOrder::from_pairs(3, &[(0, 1)]).unwrap()],
        )
        .unwrap();
        let budget = RegretBudget::default();
        assert_eq!(pmr(&borda(3), 0, 1, &pp, &budget).unwrap(), score_int(-1));
    }

    #[test]
    fn max_regret_of_empty_profile_is_n_under_plurality() {
        let budget = RegretBudget::default();
        for n in 1..=3 {
            let pp = PartialProfile::empty(3, n).unwrap();
            let report = max_regret(&plurality(3), 0, &pp, &budget).unwrap();
            assert_eq!(report.mr_value, score_int(n as i64));
            assert!(report.adversarial_completion.completes(&pp).unwrap());
        }
    }

    #[test]
    fn max_regret_on_complete_profile_equals_regret() {
        let p = profile(3, &[&[2, 0, 1], &[1, 2, 0]]);
        let pp = p.to_partial();
        let budget = RegretBudget::default();
        for rule in
            [plurality(3), borda(3), Rule::Maximin, Rule::copeland(score_int(1)).unwrap()]
        {
            for a in 0..3 {
                let report = max_regret(&rule, a, &pp, &budget).unwrap();
                assert_eq!(report.mr_value, regret(&rule, a, &p).unwrap());
                assert_eq!(report.adversarial_completion, p);
            }
        }
    }

    #[test]
    fn oracle_on_single_empty_voter_borda() {
        let budget = RegretBudget::default();
        for m in 2..=4 {
            let pp = PartialProfile::empty(m, 1).unwrap();
            assert_eq!(
                max_regret_oracle(&borda(m), 0, &pp, &budget).unwrap(),
                score_int(m as i64 - 1)
            );
        }
    }

    #[test]
    fn minimax_on_complete_profile_matches_rule_winners() {
        let p = profile(3, &[&[0, 1, 2], &[1, 0, 2], &[0, 2, 1]]);
        let pp = p.to_partial();
        let budget = RegretBudget::default();
        for rule in [plurality(3), Rule::Maximin, Rule::SimplifiedBucklin] {
            let result = minimax_regret_winners(&rule, &pp, &budget).unwrap();
            assert_eq!(result.winner_set, crate::rules::winners(&rule, &p).unwrap());
        }
    }

    #[test]
    fn minimax_on_empty_profile_has_all_cowinners() {
        let pp = PartialProfile::empty(3, 2).unwrap();
        let budget = RegretBudget::default();
        for rule in [plurality(3), borda(3), Rule::Maximin, Rule::SimplifiedBucklin] {
            let result = minimax_regret_winners(&rule, &pp, &budget).unwrap();
            assert_eq!(result.winner_set, vec![0, 1, 2]);
        }
    }

    #[test]
    fn oracle_budget_is_loud() {
        let pp = PartialProfile::empty(4, 3).unwrap();
        let tight = RegretBudget { oracle_cap: 100, ..RegretBudget::default() };
        assert!(matches!(
            max_regret_oracle(&plurality(4), 0, &pp, &tight),
            Err(RegretError::Budget(_))
        ));
    }
}
