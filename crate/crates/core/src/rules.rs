//! Score-based voting rules: positional scoring, maximin, Copeland^alpha and
//! simplified Bucklin, all with exact arithmetic.
//!
//! Every rule is exposed in max-score form. Simplified Bucklin is negated at
//! this layer (the winner is the alternative with the *lowest* Bucklin level,
//! so its score here is minus the level); downstream regret code can then
//! treat all rules uniformly.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use crate::order::AltId;
use crate::profile::Profile;

/// Exact score value. Integer-valued for scoring rules, maximin and Bucklin;
/// rational only for Copeland^alpha.
pub type Score = Ratio<i64>;

pub fn score_int(v: i64) -> Score {
    Ratio::from_integer(v)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("score vector must have at least two entries")]
    VectorTooShort,
    #[error("score vector entries must be nonincreasing with first > last")]
    VectorNotDescending,
    #[error("score vector has {got} entries but the election has {expected} alternatives")]
    VectorLengthMismatch { got: usize, expected: usize },
    #[error("approval/veto parameter k={k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("Copeland alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(Score),
    #[error("unknown alternative id {0}")]
    UnknownAlternative(AltId),
    #[error("cannot parse rule spec {0:?}")]
    BadSpec(String),
}

// ---------------------------------------------------------------------------
// Score vectors
// ---------------------------------------------------------------------------

/// A normalized positional score vector: nonincreasing nonnegative integers
/// with first > last, gcd of nonzero entries 1, and a zero tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector {
    entries: Vec<u64>,
}

impl ScoreVector {
    /// Validates and normalizes: subtracts the last entry, divides by the gcd.
    /// Both steps preserve winners, so every vector is stored in normal form.
    pub fn new(entries: Vec<u64>) -> Result<Self, RuleError> {
        if entries.len() < 2 {
            return Err(RuleError::VectorTooShort);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) || entries[0] == entries[entries.len() - 1] {
            return Err(RuleError::VectorNotDescending);
        }
        let last = entries[entries.len() - 1];
        let mut entries: Vec<u64> = entries.into_iter().map(|e| e - last).collect();
        let gcd = entries.iter().fold(0u64, |acc, &e| acc.gcd(&e));
        if gcd > 1 {
            for e in &mut entries {
                *e /= gcd;
            }
        }
        Ok(ScoreVector { entries })
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Score for the 1-based position.
    pub fn at_position(&self, position: usize) -> u64 {
        self.entries[position - 1]
    }

    /// Last index (1-based) with a nonzero entry; `kappa` in normal form.
    pub fn last_nonzero_index(&self) -> usize {
        self.entries.iter().rposition(|&e| e != 0).expect("first > last") + 1
    }

    /// True iff every entry is 0 or 1 (the k-approval family).
    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }
}

/// Named score-vector families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorFamily {
    Plurality,
    /// 1 for the top k positions.
    Approval(usize),
    /// Equals (m-k)-approval.
    Veto(usize),
    Borda,
}

/// Builds the named vector for an election with `m` alternatives.
pub fn make_vector(family: VectorFamily, m: usize) -> Result<ScoreVector, RuleError> {
    if m < 2 {
        return Err(RuleError::VectorTooShort);
    }
    let k = match family {
        VectorFamily::Plurality => 1,
        VectorFamily::Approval(k) => k,
        VectorFamily::Veto(k) => {
            if k == 0 || k > m - 1 {
                return Err(RuleError::KOutOfRange { k, max: m - 1 });
            }
            m - k
        }
        VectorFamily::Borda => {
            let entries: Vec<u64> = (0..m).map(|i| (m - 1 - i) as u64).collect();
            return ScoreVector::new(entries);
        }
    };
    if k == 0 || k > m - 1 {
        return Err(RuleError::KOutOfRange { k, max: m - 1 });
    }
    let entries: Vec<u64> = (0..m).map(|i| if i < k { 1 } else { 0 }).collect();
    ScoreVector::new(entries)
}

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

/// A concrete rule for a fixed number of alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Scoring(ScoreVector),
    Maximin,
    Copeland(Score),
    SimplifiedBucklin,
}

impl Rule {
    pub fn copeland(alpha: Score) -> Result<Rule, RuleError> {
        if alpha < score_int(0) || alpha > score_int(1) {
            return Err(RuleError::AlphaOutOfRange(alpha));
        }
        Ok(Rule::Copeland(alpha))
    }

    /// Checks the rule is usable for an election over `m` alternatives.
    pub fn check_m(&self, m: usize) -> Result<(), RuleError> {
        match self {
            Rule::Scoring(v) if v.m() != m => {
                Err(RuleError::VectorLengthMismatch { got: v.m(), expected: m })
            }
            _ => Ok(()),
        }
    }
}

/// An election-size-independent rule description; this is what the shared
/// CLI spec strings parse into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleFamily {
    Plurality,
    Approval(usize),
    Veto(usize),
    Borda,
    Scoring(Vec<u64>),
    Maximin,
    Copeland(Score),
    SimplifiedBucklin,
}

impl RuleFamily {
    /// Instantiates the rule for an election with `m` alternatives.
    pub fn materialize(&self, m: usize) -> Result<Rule, RuleError> {
        match self {
            RuleFamily::Plurality => Ok(Rule::Scoring(make_vector(VectorFamily::Plurality, m)?)),
            RuleFamily::Approval(k) => {
                Ok(Rule::Scoring(make_vector(VectorFamily::Approval(*k), m)?))
            }
            RuleFamily::Veto(k) => Ok(Rule::Scoring(make_vector(VectorFamily::Veto(*k), m)?)),
            RuleFamily::Borda => Ok(Rule::Scoring(make_vector(VectorFamily::Borda, m)?)),
            RuleFamily::Scoring(entries) => {
                let v = ScoreVector::new(entries.clone())?;
                if v.m() != m {
                    return Err(RuleError::VectorLengthMismatch { got: v.m(), expected: m });
                }
                Ok(Rule::Scoring(v))
            }
            RuleFamily::Maximin => Ok(Rule::Maximin),
            RuleFamily::Copeland(alpha) => Rule::copeland(*alpha),
            RuleFamily::SimplifiedBucklin => Ok(Rule::SimplifiedBucklin),
        }
    }
}

impl FromStr for RuleFamily {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, RuleError> {
        let bad = || RuleError::BadSpec(s.to_string());
        match s {
            "plurality" => return Ok(RuleFamily::Plurality),
            "borda" => return Ok(RuleFamily::Borda),
            "maximin" => return Ok(RuleFamily::Maximin),
            "bucklin" => return Ok(RuleFamily::SimplifiedBucklin),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("approval:") {
            return k.parse().map(RuleFamily::Approval).map_err(|_| bad());
        }
        if let Some(k) = s.strip_prefix("veto:") {
            return k.parse().map(RuleFamily::Veto).map_err(|_| bad());
        }
        if let Some(body) = s.strip_prefix("scoring:") {
            let body = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
            let entries: Result<Vec<u64>, _> =
                body.split(',').map(|e| e.trim().parse::<u64>()).collect();
            return entries.map(RuleFamily::Scoring).map_err(|_| bad());
        }
        if let Some(alpha) = s.strip_prefix("copeland:") {
            let ratio = match alpha.split_once('/') {
                Some((p, q)) => {
                    let p: i64 = p.parse().map_err(|_| bad())?;
                    let q: i64 = q.parse().map_err(|_| bad())?;
                    if q <= 0 {
                        return Err(bad());
                    }
                    Ratio::new(p, q)
                }
                None => score_int(alpha.parse().map_err(|_| bad())?),
            };
            if ratio < score_int(0) || ratio > score_int(1) {
                return Err(RuleError::AlphaOutOfRange(ratio));
            }
            return Ok(RuleFamily::Copeland(ratio));
        }
        Err(bad())
    }
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleFamily::Plurality => write!(f, "plurality"),
            RuleFamily::Approval(k) => write!(f, "approval:{k}"),
            RuleFamily::Veto(k) => write!(f, "veto:{k}"),
            RuleFamily::Borda => write!(f, "borda"),
            RuleFamily::Scoring(entries) => {
                let parts: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
                write!(f, "scoring:[{}]", parts.join(","))
            }
            RuleFamily::Maximin => write!(f, "maximin"),
            RuleFamily::Copeland(alpha) => {
                if alpha.is_integer() {
                    write!(f, "copeland:{}", alpha.numer())
                } else {
                    write!(f, "copeland:{}/{}", alpha.numer(), alpha.denom())
                }
            }
            RuleFamily::SimplifiedBucklin => write!(f, "bucklin"),
        }
    }
}

// ---------------------------------------------------------------------------
// Majority matrix
// ---------------------------------------------------------------------------

/// Pairwise counts N(x, y) and margins D(x, y) = N(x, y) - N(y, x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityMatrix {
    m: usize,
    counts: Vec<Vec<i64>>,
}

impl MajorityMatrix {
    /// Number of preferences ranking `x` above `y`.
    pub fn count(&self, x: AltId, y: AltId) -> i64 {
        self.counts[x][y]
    }

    /// Margin D(x, y) = N(x, y) - N(y, x).
    pub fn margin(&self, x: AltId, y: AltId) -> i64 {
        self.counts[x][y] - self.counts[y][x]
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Exact pairwise counts of a complete profile.
pub fn majority_margins(profile: &Profile) -> MajorityMatrix {
    let m = profile.m();
    let mut counts = vec![vec![0i64; m]; m];
    for order in profile.orders() {
        let ranking = order.ranking();
        for i in 0..m {
            for j in i + 1..m {
                counts[ranking[i]][ranking[j]] += 1;
            }
        }
    }
    MajorityMatrix { m, counts }
}

// ---------------------------------------------------------------------------
// Scores, winners, and worst/best bounds
// ---------------------------------------------------------------------------

/// The simplified Bucklin level: the least `level` such that `a` is ranked
/// within the top `level` positions in more than half of the preferences.
pub fn bucklin_level(profile: &Profile, a: AltId) -> usize {
    let n = profile.n();
    let m = profile.m();
    let mut within = vec![0usize; m + 1];
    for order in profile.orders() {
        within[order.position(a)] += 1;
    }
    let mut cumulative = 0;
    for level in 1..=m {
        cumulative += within[level];
        if 2 * cumulative > n {
            return level;
        }
    }
    m
}

/// Exact score of `a` under `rule`. Simplified Bucklin is negated so that
/// higher is better for every rule.
pub fn score(rule: &Rule, profile: &Profile, a: AltId) -> Result<Score, RuleError> {
    if a >= profile.m() {
        return Err(RuleError::UnknownAlternative(a));
    }
    rule.check_m(profile.m())?;
    Ok(match rule {
        Rule::Scoring(v) => {
            let total: u64 = profile.orders().iter().map(|o| v.at_position(o.position(a))).sum();
            score_int(total as i64)
        }
        Rule::Maximin => {
            let matrix = majority_margins(profile);
            let min = (0..profile.m())
                .filter(|&y| y != a)
                .map(|y| matrix.count(a, y))
                .min()
                .unwrap_or(profile.n() as i64);
            score_int(min)
        }
        Rule::Copeland(alpha) => {
            let matrix = majority_margins(profile);
            let mut wins = 0i64;
            let mut ties = 0i64;
            for y in 0..profile.m() {
                if y == a {
                    continue;
                }
                match matrix.margin(a, y) {
                    d if d > 0 => wins += 1,
                    0 => ties += 1,
                    _ => {}
                }
            }
            score_int(wins) + *alpha * score_int(ties)
        }
        Rule::SimplifiedBucklin => score_int(-(bucklin_level(profile, a) as i64)),
    })
}

/// The nonempty argmax set of `score`; no tie-breaking.
pub fn winners(rule: &Rule, profile: &Profile) -> Result<Vec<AltId>, RuleError> {
    let scores: Vec<Score> =
        (0..profile.m()).map(|a| score(rule, profile, a)).collect::<Result<_, _>>()?;
    let best = scores.iter().max().expect("m >= 1").clone();
    Ok((0..profile.m()).filter(|&a| scores[a] == best).collect())
}

/// The worst score any alternative can receive in any profile with `n`
/// preferences over `m` alternatives (beta_n). Constant time for all rules.
pub fn worst_score(rule: &Rule, m: usize, _n: usize) -> Score {
    match rule {
        Rule::Scoring(_) | Rule::Maximin | Rule::Copeland(_) => score_int(0),
        Rule::SimplifiedBucklin => score_int(-(m as i64)),
    }
}

/// The best score any alternative can receive in any profile with `n`
/// preferences over `m` alternatives.
pub fn best_score(rule: &Rule, m: usize, n: usize) -> Score {
    match rule {
        Rule::Scoring(v) => score_int(n as i64 * v.entries()[0] as i64),
        Rule::Maximin => score_int(n as i64),
        Rule::Copeland(_) => score_int(m as i64 - 1),
        Rule::SimplifiedBucklin => score_int(-1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::LinearOrder;

    fn profile(m: usize, rankings: &[&[AltId]]) -> Profile {
        let orders =
            rankings.iter().map(|r| LinearOrder::new(r.to_vec()).unwrap()).collect();
        Profile::new(m, orders).unwrap()
    }

    #[test]
    fn make_vector_families() {
        assert_eq!(make_vector(VectorFamily::Plurality, 3).unwrap().entries(), &[1, 0, 0]);
        assert_eq!(make_vector(VectorFamily::Veto(1), 3).unwrap().entries(), &[1, 1, 0]);
        assert_eq!(make_vector(VectorFamily::Borda, 4).unwrap().entries(), &[3, 2, 1, 0]);
        assert!(make_vector(VectorFamily::Approval(3), 3).is_err());
        assert!(make_vector(VectorFamily::Veto(3), 3).is_err());
    }

    #[test]
    fn normalization_subtracts_tail_and_divides_gcd() {
        let v = ScoreVector::new(vec![6, 4, 2, 2]).unwrap();
        assert_eq!(v.entries(), &[2, 1, 0, 0]);
        // idempotent
        let again = ScoreVector::new(v.entries().to_vec()).unwrap();
        assert_eq!(again, v);
        assert_eq!(v.last_nonzero_index(), 2);
    }

    #[test]
    fn borda_single_voter() {
        let p = profile(3, &[&[0, 1, 2]]);
        let rule = Rule::Scoring(make_vector(VectorFamily::Borda, 3).unwrap());
        assert_eq!(score(&rule, &p, 0).unwrap(), score_int(2));
        assert_eq!(score(&rule, &p, 1).unwrap(), score_int(1));
    }

    #[test]
    fn maximin_two_identical_voters() {
        let p = profile(3, &[&[0, 1, 2], &[0, 1, 2]]);
        assert_eq!(score(&Rule::Maximin, &p, 0).unwrap(), score_int(2));
        assert_eq!(score(&Rule::Maximin, &p, 2).unwrap(), score_int(0));
    }

    #[test]
    fn bucklin_is_negated() {
        let p = profile(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        // b is within the top 2 in more than half: level 2, negated
        assert_eq!(score(&Rule::SimplifiedBucklin, &p, 1).unwrap(), score_int(-2));
        assert_eq!(score(&Rule::SimplifiedBucklin, &p, 0).unwrap(), score_int(-1));
        assert_eq!(bucklin_level(&p, 2), 3);
    }

    #[test]
    fn plurality_winners() {
        let rule = Rule::Scoring(make_vector(VectorFamily::Plurality, 3).unwrap());
        let p = profile(3, &[&[0, 1, 2], &[0, 2, 1]]);
        assert_eq!(winners(&rule, &p).unwrap(), vec![0]);
        let tie = profile(3, &[&[0, 1, 2], &[1, 0, 2]]);
        assert_eq!(winners(&rule, &tie).unwrap(), vec![0, 1]);
    }

    #[test]
    fn copeland_all_tied() {
        // 2 voters with opposite rankings: every margin is 0, every score
        // is 2 * alpha, so all three alternatives win.
        let p = profile(3, &[&[0, 1, 2], &[2, 1, 0]]);
        let rule = Rule::copeland(Ratio::new(1, 2)).unwrap();
        for a in 0..3 {
            assert_eq!(score(&rule, &p, a).unwrap(), score_int(1));
        }
        assert_eq!(winners(&rule, &p).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn majority_matrix_counts() {
        let p = profile(2, &[&[0, 1]]);
        let matrix = majority_margins(&p);
        assert_eq!(matrix.count(0, 1), 1);
        assert_eq!(matrix.margin(0, 1), 1);
        let p2 = profile(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(majority_margins(&p2).margin(0, 1), 0);
    }

    #[test]
    fn worst_and_best_scores() {
        let plurality = Rule::Scoring(make_vector(VectorFamily::Plurality, 3).unwrap());
        assert_eq!(worst_score(&plurality, 3, 2), score_int(0));
        assert_eq!(worst_score(&Rule::SimplifiedBucklin, 5, 2), score_int(-5));
        assert_eq!(worst_score(&Rule::copeland(score_int(1)).unwrap(), 4, 2), score_int(0));
        let borda = Rule::Scoring(make_vector(VectorFamily::Borda, 4).unwrap());
        assert_eq!(best_score(&borda, 4, 3), score_int(9));
        assert_eq!(best_score(&Rule::Maximin, 4, 5), score_int(5));
        assert_eq!(best_score(&Rule::SimplifiedBucklin, 4, 5), score_int(-1));
    }

    #[test]
    fn rule_spec_strings_round_trip() {
        for spec in [
            "plurality",
            "approval:2",
            "veto:1",
            "borda",
            "scoring:[3,1,0]",
            "maximin",
            "copeland:1/2",
            "copeland:0",
            "bucklin",
        ] {
            let family: RuleFamily = spec.parse().unwrap();
            assert_eq!(family.to_string(), spec, "round trip of {spec}");
        }
        assert!("copeland:3/2".parse::<RuleFamily>().is_err());
        assert!("copeland:2".parse::<RuleFamily>().is_err());
        assert!("scoring:[]".parse::<RuleFamily>().is_err());
        assert!("mystery".parse::<RuleFamily>().is_err());
    }
}
