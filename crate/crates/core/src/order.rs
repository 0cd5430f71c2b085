//! Complete and partial orders over a fixed set of alternatives, plus the
//! enumeration primitives everything else is built on: linear extensions of a
//! partial order and transitive suborders of a complete order.
//!
//! Alternatives are dense ids `0..m`. Orders are stored as bitmask rows
//! (`below[a]` = everything `a` beats in the transitive closure), which keeps
//! closure, cycle detection and containment checks cheap for `m <= 64`.

use thiserror::Error;

/// Dense alternative index.
pub type AltId = usize;

/// Bitset over alternatives. `m` is capped at 64 so one word suffices.
pub(crate) type Mask = u64;

/// Hard cap on the number of alternatives.
pub const MAX_ALTERNATIVES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("alternative id {id} out of range for {m} alternatives")]
    IdOutOfRange { id: AltId, m: usize },
    #[error("at most {MAX_ALTERNATIVES} alternatives are supported, got {0}")]
    TooManyAlternatives(usize),
    #[error("ranking is not a permutation of 0..{m}")]
    NotAPermutation { m: usize },
    #[error("self pair ({0}, {0}) is not a valid preference")]
    SelfPair(AltId),
    #[error("duplicate pair ({0}, {1}) in input")]
    DuplicatePair(AltId, AltId),
    #[error("pair ({0}, {1}) completes a preference cycle")]
    Cycle(AltId, AltId),
    #[error("orders are over different alternative sets ({0} vs {1} alternatives)")]
    MismatchedSets(usize, usize),
    #[error("required pair ({0}, {1}) is not contained in the complete order")]
    RequiredPairNotInOrder(AltId, AltId),
}

/// Enumeration stopped because it would exceed the caller's cap.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumeration budget exceeded: more than {cap} {what}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub cap: u64,
}

fn check_id(id: AltId, m: usize) -> Result<(), OrderError> {
    if id >= m {
        return Err(OrderError::IdOutOfRange { id, m });
    }
    Ok(())
}

fn check_m(m: usize) -> Result<(), OrderError> {
    if m > MAX_ALTERNATIVES {
        return Err(OrderError::TooManyAlternatives(m));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// LinearOrder
// ---------------------------------------------------------------------------

/// A complete preference: a permutation of `0..m`, most-preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    ranking: Vec<AltId>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<AltId>) -> Result<Self, OrderError> {
        let m = ranking.len();
        check_m(m)?;
        let mut seen: Mask = 0;
        for &a in &ranking {
            if a >= m || seen & (1 << a) != 0 {
                return Err(OrderError::NotAPermutation { m });
            }
            seen |= 1 << a;
        }
        Ok(LinearOrder { ranking })
    }

    pub fn m(&self) -> usize {
        self.ranking.len()
    }

    /// Ranking slice, most-preferred first.
    pub fn ranking(&self) -> &[AltId] {
        &self.ranking
    }

    /// 1-based position: `position(a) = 1 + |{b : b > a}|`.
    pub fn position(&self, a: AltId) -> usize {
        1 + self.ranking.iter().position(|&b| b == a).expect("alternative in ranking")
    }

    pub fn prefers(&self, a: AltId, b: AltId) -> bool {
        self.position(a) < self.position(b)
    }

    /// All ordered pairs (preferred, less-preferred) induced by the ranking.
    pub fn pairs(&self) -> Vec<(AltId, AltId)> {
        let mut out = Vec::with_capacity(self.m() * (self.m().saturating_sub(1)) / 2);
        for i in 0..self.ranking.len() {
            for j in i + 1..self.ranking.len() {
                out.push((self.ranking[i], self.ranking[j]));
            }
        }
        out
    }

    /// The same order viewed as a (complete) partial order.
    pub fn to_partial(&self) -> PartialOrder {
        let m = self.m();
        let mut below = vec![0 as Mask; m];
        let mut seen: Mask = 0;
        for &a in self.ranking.iter().rev() {
            below[a] = seen;
            seen |= 1 << a;
        }
        PartialOrder { m, below }
    }

    pub(crate) fn beats_mask(&self, a: AltId) -> Mask {
        let pos = self.position(a);
        let mut mask = 0;
        for &b in &self.ranking[pos..] {
            mask |= 1 << b;
        }
        mask
    }
}

// ---------------------------------------------------------------------------
// PartialOrder
// ---------------------------------------------------------------------------

/// An irreflexive, transitive, acyclic relation over `0..m`, stored as its
/// transitive closure. Construction closes the input and rejects cycles,
/// self pairs and duplicate input pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    m: usize,
    /// `below[a]` bit `b` set iff `a > b` in the closure.
    below: Vec<Mask>,
}

impl PartialOrder {
    pub fn empty(m: usize) -> Result<Self, OrderError> {
        check_m(m)?;
        Ok(PartialOrder { m, below: vec![0; m] })
    }

    /// Builds from explicit (preferred, less-preferred) pairs. The input is
    /// closed transitively; self pairs and duplicates are rejected rather
    /// than repaired so that data errors surface.
    pub fn from_pairs(m: usize, pairs: &[(AltId, AltId)]) -> Result<Self, OrderError> {
        check_m(m)?;
        let mut direct = vec![0 as Mask; m];
        for &(a, b) in pairs {
            check_id(a, m)?;
            check_id(b, m)?;
            if a == b {
                return Err(OrderError::SelfPair(a));
            }
            if direct[a] & (1 << b) != 0 {
                return Err(OrderError::DuplicatePair(a, b));
            }
            direct[a] |= 1 << b;
        }
        let below = close(m, direct)?;
        Ok(PartialOrder { m, below })
    }

    /// Builds a chain of blocks: every element of an earlier block is
    /// preferred to every element of a later block, with no order inside a
    /// block. Elements may appear at most once across blocks.
    pub fn from_blocks(m: usize, blocks: &[Vec<AltId>]) -> Result<Self, OrderError> {
        check_m(m)?;
        let mut below = vec![0 as Mask; m];
        let mut later: Mask = 0;
        let mut seen: Mask = 0;
        for block in blocks.iter().rev() {
            let mut this: Mask = 0;
            for &a in block {
                check_id(a, m)?;
                if seen & (1 << a) != 0 {
                    return Err(OrderError::DuplicatePair(a, a));
                }
                this |= 1 << a;
                seen |= 1 << a;
            }
            for &a in block {
                below[a] = later;
            }
            later |= this;
        }
        // Block chains are transitively closed by construction.
        Ok(PartialOrder { m, below })
    }

    /// Union of the two pair sets, re-closed. Fails on a cycle.
    pub fn union(&self, other: &PartialOrder) -> Result<PartialOrder, OrderError> {
        if self.m != other.m {
            return Err(OrderError::MismatchedSets(self.m, other.m));
        }
        let direct: Vec<Mask> =
            (0..self.m).map(|a| self.below[a] | other.below[a]).collect();
        let below = close(self.m, direct)?;
        Ok(PartialOrder { m: self.m, below })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `a > b` in the transitive closure.
    pub fn dominates(&self, a: AltId, b: AltId) -> bool {
        self.below[a] & (1 << b) != 0
    }

    pub fn comparable(&self, a: AltId, b: AltId) -> bool {
        self.dominates(a, b) || self.dominates(b, a)
    }

    /// Number of pairs in the transitive closure.
    pub fn pair_count(&self) -> usize {
        self.below.iter().map(|mask| mask.count_ones() as usize).sum()
    }

    /// Closure pairs, sorted ascending. This is the canonical representation
    /// used for deterministic ordering of suborders.
    pub fn closure_pairs(&self) -> Vec<(AltId, AltId)> {
        let mut out = Vec::with_capacity(self.pair_count());
        for a in 0..self.m {
            let mut mask = self.below[a];
            while mask != 0 {
                let b = mask.trailing_zeros() as usize;
                out.push((a, b));
                mask &= mask - 1;
            }
        }
        out
    }

    /// Transitive reduction: closure pairs not implied by a two-step path.
    pub fn reduction_pairs(&self) -> Vec<(AltId, AltId)> {
        self.closure_pairs()
            .into_iter()
            .filter(|&(a, b)| {
                let mid = self.below[a] & self.above_mask(b);
                mid == 0
            })
            .collect()
    }

    /// True iff every pair of `other` is a pair of `self`.
    pub fn contains(&self, other: &PartialOrder) -> bool {
        self.m == other.m
            && (0..self.m).all(|a| other.below[a] & !self.below[a] == 0)
    }

    pub fn below_ids(&self, a: AltId) -> Vec<AltId> {
        mask_ids(self.below[a])
    }

    pub fn above_ids(&self, a: AltId) -> Vec<AltId> {
        mask_ids(self.above_mask(a))
    }

    pub(crate) fn below_mask(&self, a: AltId) -> Mask {
        self.below[a]
    }

    pub(crate) fn above_mask(&self, a: AltId) -> Mask {
        let mut mask = 0;
        for b in 0..self.m {
            if self.below[b] & (1 << a) != 0 {
                mask |= 1 << b;
            }
        }
        mask
    }

    /// Closure after adding one pair; `None` if the pair creates a cycle.
    pub(crate) fn with_pair(&self, a: AltId, b: AltId) -> Option<PartialOrder> {
        if self.dominates(b, a) || a == b {
            return None;
        }
        if self.dominates(a, b) {
            return Some(self.clone());
        }
        let mut below = self.below.clone();
        // Everything at or above a now beats everything at or below b.
        let gain = below[b] | (1 << b);
        below[a] |= gain;
        for x in 0..self.m {
            if below[x] & (1 << a) != 0 {
                below[x] |= gain;
            }
        }
        Some(PartialOrder { m: self.m, below })
    }
}

fn mask_ids(mut mask: Mask) -> Vec<AltId> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Transitive closure of `direct`; errors on any cycle.
fn close(m: usize, mut below: Vec<Mask>) -> Result<Vec<Mask>, OrderError> {
    for mid in 0..m {
        for a in 0..m {
            if below[a] & (1 << mid) != 0 {
                below[a] |= below[mid];
            }
        }
    }
    for a in 0..m {
        if below[a] & (1 << a) != 0 {
            let b = mask_ids(below[a] & !(1 << a))
                .into_iter()
                .find(|&b| below[b] & (1 << a) != 0)
                .unwrap_or(a);
            return Err(OrderError::Cycle(a, b));
        }
    }
    Ok(below)
}

// ---------------------------------------------------------------------------
// Completion test
// ---------------------------------------------------------------------------

/// True iff `l` extends `p`: every closure pair of `p` agrees with `l`.
pub fn is_completion(l: &LinearOrder, p: &PartialOrder) -> Result<bool, OrderError> {
    if l.m() != p.m() {
        return Err(OrderError::MismatchedSets(l.m(), p.m()));
    }
    Ok((0..p.m()).all(|a| p.below[a] & !l.beats_mask(a) == 0))
}

// ---------------------------------------------------------------------------
// Linear extensions
// ---------------------------------------------------------------------------

/// Lazy enumeration of every linear extension of a partial order, in
/// lexicographic order of the ranking sequence. Callers impose budgets.
pub struct LinearExtensions<'a> {
    p: &'a PartialOrder,
    above: Vec<Mask>,
    prefix: Vec<AltId>,
    placed: Mask,
    /// Per depth: the next candidate id to try.
    cursor: Vec<AltId>,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(p: &'a PartialOrder) -> Self {
        let above = (0..p.m()).map(|a| p.above_mask(a)).collect();
        LinearExtensions {
            p,
            above,
            prefix: Vec::with_capacity(p.m()),
            placed: 0,
            cursor: vec![0],
            done: false,
        }
    }

    fn available(&self, a: AltId) -> bool {
        self.placed & (1 << a) == 0 && self.above[a] & !self.placed == 0
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        let m = self.p.m();
        if self.done {
            return None;
        }
        loop {
            if self.prefix.len() == m {
                let out = LinearOrder { ranking: self.prefix.clone() };
                // Backtrack one step so the search resumes after this leaf.
                if let Some(last) = self.prefix.pop() {
                    self.placed &= !(1 << last);
                    self.cursor.pop();
                    *self.cursor.last_mut().expect("cursor") = last + 1;
                } else {
                    self.done = true;
                }
                return Some(out);
            }
            let depth = self.prefix.len();
            let mut cand = self.cursor[depth];
            while cand < m && !self.available(cand) {
                cand += 1;
            }
            if cand < m {
                self.cursor[depth] = cand;
                self.prefix.push(cand);
                self.placed |= 1 << cand;
                self.cursor.push(0);
            } else {
                // Exhausted this depth; backtrack.
                match self.prefix.pop() {
                    Some(last) => {
                        self.placed &= !(1 << last);
                        self.cursor.pop();
                        *self.cursor.last_mut().expect("cursor") = last + 1;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Streaming enumeration; see [`linear_extensions_capped`] for the bounded
/// collecting form.
pub fn linear_extensions(p: &PartialOrder) -> LinearExtensions<'_> {
    LinearExtensions::new(p)
}

/// Collects every extension, failing loudly once more than `cap` exist.
pub fn linear_extensions_capped(
    p: &PartialOrder,
    cap: usize,
) -> Result<Vec<LinearOrder>, BudgetExceeded> {
    let mut out = Vec::new();
    for l in linear_extensions(p) {
        if out.len() >= cap {
            return Err(BudgetExceeded { what: "linear extensions", cap: cap as u64 });
        }
        out.push(l);
    }
    Ok(out)
}

/// Extension count with early exit at `cap + 1`.
pub fn count_linear_extensions_capped(p: &PartialOrder, cap: u64) -> Result<u64, BudgetExceeded> {
    let mut count = 0u64;
    for _ in linear_extensions(p) {
        count += 1;
        if count > cap {
            return Err(BudgetExceeded { what: "linear extensions", cap });
        }
    }
    Ok(count)
}

// ---------------------------------------------------------------------------
// Transitive suborders
// ---------------------------------------------------------------------------

/// Every transitive subset of `l`'s pair set, as closed partial orders,
/// ordered by descending pair count then lexicographic closure pair list.
pub fn transitive_suborders(l: &LinearOrder) -> Vec<PartialOrder> {
    transitive_suborders_containing(l, &PartialOrder::empty(l.m()).expect("m checked"))
        .expect("empty required set is always contained")
}

/// As [`transitive_suborders`] but failing once more than `cap` suborders
/// exist.
pub fn transitive_suborders_capped(
    l: &LinearOrder,
    cap: usize,
) -> Result<Vec<PartialOrder>, BudgetExceeded> {
    let all = transitive_suborders(l);
    if all.len() > cap {
        return Err(BudgetExceeded { what: "transitive suborders", cap: cap as u64 });
    }
    Ok(all)
}

/// Transitive suborders of `l` that contain every pair of `required`.
/// `required` must itself be a suborder of `l`.
pub fn transitive_suborders_containing(
    l: &LinearOrder,
    required: &PartialOrder,
) -> Result<Vec<PartialOrder>, OrderError> {
    if l.m() != required.m() {
        return Err(OrderError::MismatchedSets(l.m(), required.m()));
    }
    let m = l.m();
    for (a, b) in required.closure_pairs() {
        if !l.prefers(a, b) {
            return Err(OrderError::RequiredPairNotInOrder(a, b));
        }
    }

    // Work in ranking positions: pair (i, j), i < j, means rank[i] > rank[j].
    // Deciding pairs by ascending span guarantees that when (i, k) is
    // decided, every (i, j) and (j, k) between them already is, so the
    // transitivity constraint "(i,j) and (j,k) in => (i,k) in" prunes exactly.
    let rank = l.ranking();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for span in 1..m {
        for i in 0..m - span {
            pairs.push((i, i + span));
        }
    }
    let forced: Vec<bool> = pairs
        .iter()
        .map(|&(i, j)| required.dominates(rank[i], rank[j]))
        .collect();

    let mut chosen = vec![false; pairs.len()];
    // chosen_at[i][j] mirrors `chosen` for O(1) transitivity lookups.
    let mut grid = vec![vec![false; m]; m];
    let mut out: Vec<PartialOrder> = Vec::new();

    fn rec(
        idx: usize,
        pairs: &[(usize, usize)],
        forced: &[bool],
        chosen: &mut [bool],
        grid: &mut [Vec<bool>],
        rank: &[AltId],
        m: usize,
        out: &mut Vec<PartialOrder>,
    ) {
        if idx == pairs.len() {
            let picked: Vec<(AltId, AltId)> = pairs
                .iter()
                .zip(chosen.iter())
                .filter(|(_, &c)| c)
                .map(|(&(i, j), _)| (rank[i], rank[j]))
                .collect();
            out.push(
                PartialOrder::from_pairs(m, &picked).expect("suborder of a chain is acyclic"),
            );
            return;
        }
        let (i, j) = pairs[idx];
        let must = forced[idx]
            || (i + 1..j).any(|k| grid[i][k] && grid[k][j]);
        // Include branch.
        chosen[idx] = true;
        grid[i][j] = true;
        rec(idx + 1, pairs, forced, chosen, grid, rank, m, out);
        chosen[idx] = false;
        grid[i][j] = false;
        // Exclude branch, unless transitivity or the required set forces it.
        if !must {
            rec(idx + 1, pairs, forced, chosen, grid, rank, m, out);
        }
    }

    rec(0, &pairs, &forced, &mut chosen, &mut grid, rank, m, &mut out);

    out.sort_by(|a, b| {
        b.pair_count()
            .cmp(&a.pair_count())
            .then_with(|| a.closure_pairs().cmp(&b.closure_pairs()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(ids: &[AltId]) -> LinearOrder {
        LinearOrder::new(ids.to_vec()).unwrap()
    }

    #[test]
    fn linear_order_positions() {
        let l = chain(&[2, 0, 1]);
        assert_eq!(l.position(2), 1);
        assert_eq!(l.position(0), 2);
        assert_eq!(l.position(1), 3);
        assert!(l.prefers(2, 1));
        assert!(!l.prefers(1, 0));
    }

    #[test]
    fn rejects_non_permutation() {
        assert!(LinearOrder::new(vec![0, 0, 1]).is_err());
        assert!(LinearOrder::new(vec![0, 3]).is_err());
    }

    #[test]
    fn from_pairs_rejects_bad_input() {
        assert_eq!(
            PartialOrder::from_pairs(3, &[(1, 1)]),
            Err(OrderError::SelfPair(1))
        );
        assert_eq!(
            PartialOrder::from_pairs(3, &[(0, 1), (0, 1)]),
            Err(OrderError::DuplicatePair(0, 1))
        );
        assert!(matches!(
            PartialOrder::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(OrderError::Cycle(_, _))
        ));
    }

    #[test]
    fn closure_is_computed() {
        let p = PartialOrder::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.dominates(0, 2));
        assert_eq!(p.pair_count(), 3);
        assert_eq!(p.reduction_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn block_chains_expand_to_cross_pairs_only() {
        let p = PartialOrder::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(p.dominates(0, 2) && p.dominates(1, 3));
        assert!(!p.comparable(0, 1) && !p.comparable(2, 3));
        assert_eq!(p.pair_count(), 4);
    }

    #[test]
    fn extensions_of_empty_order_are_all_permutations() {
        // m! extensions of the empty order.
        let p = PartialOrder::empty(3).unwrap();
        let all: Vec<_> = linear_extensions(&p).collect();
        assert_eq!(all.len(), 6);
        // Lexicographic order of rankings.
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn extensions_of_chain_is_single() {
        let p = chain(&[0, 1, 2]).to_partial();
        let all: Vec<_> = linear_extensions(&p).collect();
        assert_eq!(all, vec![chain(&[0, 1, 2])]);
    }

    #[test]
    fn extensions_match_brute_force_filter() {
        // {a > b} over {a, b, c} leaves 3 of the 6 permutations.
        let p = PartialOrder::from_pairs(3, &[(0, 1)]).unwrap();
        let got: Vec<_> = linear_extensions(&p).collect();
        let want: Vec<_> = linear_extensions(&PartialOrder::empty(3).unwrap())
            .filter(|l| is_completion(l, &p).unwrap())
            .collect();
        assert_eq!(got.len(), 3);
        assert_eq!(got, want);
    }

    #[test]
    fn extensions_budget_is_loud() {
        let p = PartialOrder::empty(4).unwrap();
        assert!(linear_extensions_capped(&p, 23).is_err());
        assert_eq!(linear_extensions_capped(&p, 24).unwrap().len(), 24);
    }

    #[test]
    fn is_completion_examples() {
        let l = chain(&[0, 1, 2]);
        let p = PartialOrder::from_pairs(3, &[(0, 2)]).unwrap();
        assert!(is_completion(&l, &p).unwrap());
        let q = PartialOrder::from_pairs(3, &[(2, 0)]).unwrap();
        assert!(!is_completion(&l, &q).unwrap());
        assert!(is_completion(&l, &PartialOrder::empty(3).unwrap()).unwrap());
        assert!(is_completion(&chain(&[0, 1]), &PartialOrder::empty(3).unwrap()).is_err());
    }

    #[test]
    fn suborders_of_two_chain() {
        let subs = transitive_suborders(&chain(&[0, 1]));
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].pair_count(), 1);
        assert_eq!(subs[1].pair_count(), 0);
    }

    #[test]
    fn suborders_of_three_chain_match_subset_filter() {
        // Brute force: subsets of {(0,1),(1,2),(0,2)} that are transitive.
        let l = chain(&[0, 1, 2]);
        let pairs = l.pairs();
        let mut expect = Vec::new();
        for bits in 0..8u32 {
            let subset: Vec<(AltId, AltId)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            let transitive = !(subset.contains(&(0, 1))
                && subset.contains(&(1, 2))
                && !subset.contains(&(0, 2)));
            if transitive {
                expect.push(PartialOrder::from_pairs(3, &subset).unwrap());
            }
        }
        let got = transitive_suborders(&l);
        assert_eq!(got.len(), expect.len());
        assert_eq!(got.len(), 7);
        for p in &expect {
            assert!(got.contains(p));
        }
        // Deterministic order: descending pair count, then lexicographic.
        for w in got.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            assert!(
                a.pair_count() > b.pair_count()
                    || (a.pair_count() == b.pair_count()
                        && a.closure_pairs() < b.closure_pairs())
            );
        }
    }

    #[test]
    fn suborders_round_trip_through_extensions() {
        let l = chain(&[2, 0, 3, 1]);
        for p in transitive_suborders(&l) {
            assert!(is_completion(&l, &p).unwrap());
            assert!(linear_extensions(&p).any(|ext| ext == l));
        }
    }

    #[test]
    fn suborders_containing_required() {
        let l = chain(&[0, 1, 2]);
        let req = PartialOrder::from_pairs(3, &[(0, 2)]).unwrap();
        let subs = transitive_suborders_containing(&l, &req).unwrap();
        assert!(subs.iter().all(|p| p.dominates(0, 2)));
        assert_eq!(subs.len(), 4); // of the 7 suborders, those containing (0,2)
        let bad = PartialOrder::from_pairs(3, &[(2, 0)]).unwrap();
        assert!(transitive_suborders_containing(&l, &bad).is_err());
    }

    #[test]
    fn with_pair_detects_cycles() {
        let p = PartialOrder::from_pairs(3, &[(0, 1)]).unwrap();
        assert!(p.with_pair(1, 0).is_none());
        let q = p.with_pair(1, 2).unwrap();
        assert!(q.dominates(0, 2));
    }
}
