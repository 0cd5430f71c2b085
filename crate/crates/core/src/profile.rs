//! Named alternative sets and (partial) preference profiles.

use std::collections::HashMap;

use thiserror::Error;

use crate::order::{
    is_completion, AltId, LinearOrder, OrderError, PartialOrder, MAX_ALTERNATIVES,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("an election needs at least one alternative")]
    NoAlternatives,
    #[error("at most {MAX_ALTERNATIVES} alternatives are supported, got {0}")]
    TooManyAlternatives(usize),
    #[error("alternative name {0:?} is empty or duplicated")]
    BadName(String),
    #[error("a profile needs at least one preference")]
    NoPreferences,
    #[error("preference {index} is over {got} alternatives, expected {expected}")]
    WrongAlternativeCount { index: usize, got: usize, expected: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// The alternative set of an election: dense ids `0..m` with unique,
/// nonempty display names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternatives {
    names: Vec<String>,
    index: HashMap<String, AltId>,
}

impl Alternatives {
    pub fn new(names: Vec<String>) -> Result<Self, ProfileError> {
        if names.is_empty() {
            return Err(ProfileError::NoAlternatives);
        }
        if names.len() > MAX_ALTERNATIVES {
            return Err(ProfileError::TooManyAlternatives(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (id, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), id).is_some() {
                return Err(ProfileError::BadName(name.clone()));
            }
        }
        Ok(Alternatives { names, index })
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, id: AltId) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<AltId> {
        self.index.get(name).copied()
    }
}

/// A complete profile: `n >= 1` linear orders over the same `m` alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    m: usize,
    orders: Vec<LinearOrder>,
}

impl Profile {
    pub fn new(m: usize, orders: Vec<LinearOrder>) -> Result<Self, ProfileError> {
        if orders.is_empty() {
            return Err(ProfileError::NoPreferences);
        }
        for (index, order) in orders.iter().enumerate() {
            if order.m() != m {
                return Err(ProfileError::WrongAlternativeCount {
                    index,
                    got: order.m(),
                    expected: m,
                });
            }
        }
        Ok(Profile { m, orders })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn order(&self, voter: usize) -> &LinearOrder {
        &self.orders[voter]
    }

    /// True iff this profile completes `pp` voter by voter.
    pub fn completes(&self, pp: &PartialProfile) -> Result<bool, OrderError> {
        if self.m != pp.m() || self.n() != pp.n() {
            return Err(OrderError::MismatchedSets(self.m, pp.m()));
        }
        for (l, p) in self.orders.iter().zip(pp.orders()) {
            if !is_completion(l, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_partial(&self) -> PartialProfile {
        PartialProfile {
            m: self.m,
            orders: self.orders.iter().map(LinearOrder::to_partial).collect(),
        }
    }
}

/// A partial profile: `n >= 1` partial orders over the same `m` alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProfile {
    m: usize,
    orders: Vec<PartialOrder>,
}

impl PartialProfile {
    pub fn new(m: usize, orders: Vec<PartialOrder>) -> Result<Self, ProfileError> {
        if orders.is_empty() {
            return Err(ProfileError::NoPreferences);
        }
        for (index, order) in orders.iter().enumerate() {
            if order.m() != m {
                return Err(ProfileError::WrongAlternativeCount {
                    index,
                    got: order.m(),
                    expected: m,
                });
            }
        }
        Ok(PartialProfile { m, orders })
    }

    pub fn empty(m: usize, n: usize) -> Result<Self, ProfileError> {
        let order = PartialOrder::empty(m)?;
        Self::new(m, vec![order; n.max(1)])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[PartialOrder] {
        &self.orders
    }

    pub fn order(&self, voter: usize) -> &PartialOrder {
        &self.orders[voter]
    }
}

/// Number of preferences in `pp` where `a` and `b` are comparable.
pub fn comparability_count(
    pp: &PartialProfile,
    a: AltId,
    b: AltId,
) -> Result<usize, OrderError> {
    if a == b {
        return Err(OrderError::SelfPair(a));
    }
    if a >= pp.m() || b >= pp.m() {
        return Err(OrderError::IdOutOfRange { id: a.max(b), m: pp.m() });
    }
    Ok(pp.orders.iter().filter(|p| p.comparable(a, b)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternatives_reject_duplicates_and_empty() {
        assert!(Alternatives::new(vec!["a".into(), "a".into()]).is_err());
        assert!(Alternatives::new(vec!["".into()]).is_err());
        let alts = Alternatives::new(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(alts.id("b"), Some(1));
        assert_eq!(alts.name(0), "a");
    }

    #[test]
    fn profiles_are_validated() {
        let l2 = LinearOrder::new(vec![0, 1]).unwrap();
        let l3 = LinearOrder::new(vec![0, 1, 2]).unwrap();
        assert!(Profile::new(3, vec![l3.clone(), l2]).is_err());
        assert!(Profile::new(3, vec![]).is_err());
        assert!(Profile::new(3, vec![l3]).is_ok());
    }

    #[test]
    fn comparability_counts() {
        let m = 3;
        // all-empty partial profile: every pair incomparable
        let empty = PartialProfile::empty(m, 2).unwrap();
        assert_eq!(comparability_count(&empty, 0, 1).unwrap(), 0);
        // complete chains: every pair comparable in all n
        let l = LinearOrder::new(vec![0, 1, 2]).unwrap();
        let complete = Profile::new(m, vec![l.clone(), l]).unwrap().to_partial();
        assert_eq!(comparability_count(&complete, 0, 2).unwrap(), 2);
        // [{a>b}, {b>c}]: pair {a,b} comparable once
        let pp = PartialProfile::new(
            m,
            vec![
                PartialOrder::from_pairs(m, &[(0, 1)]).unwrap(),
                PartialOrder::from_pairs(m, &[(1, 2)]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(comparability_count(&pp, 0, 1).unwrap(), 1);
        assert!(comparability_count(&pp, 1, 1).is_err());
    }

    #[test]
    fn completes_checks_every_voter() {
        let l = LinearOrder::new(vec![0, 1, 2]).unwrap();
        let profile = Profile::new(3, vec![l.clone(), l]).unwrap();
        let pp = PartialProfile::new(
            3,
            vec![
                PartialOrder::from_pairs(3, &[(0, 2)]).unwrap(),
                PartialOrder::empty(3).unwrap(),
            ],
        )
        .unwrap();
        assert!(profile.completes(&pp).unwrap());
        let bad = PartialProfile::new(
            3,
            vec![
                PartialOrder::from_pairs(3, &[(2, 0)]).unwrap(),
                PartialOrder::empty(3).unwrap(),
            ],
        )
        .unwrap();
        assert!(!profile.completes(&bad).unwrap());
    }
}
