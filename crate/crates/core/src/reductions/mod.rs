//! Generators for the hardness-reduction instances, their proof-witness
//! partial profiles, and forward-direction verifiers.
//!
//! Conventions shared by every construction:
//! - Alternatives are named and numbered in construction order (element
//!   alternatives first, then the distinguished ones, then fillers/dummies).
//! - Sets appearing inside a *complete* preference are laid out in ascending
//!   id order; the proofs leave those positions arbitrary, and a fixed order
//!   keeps outputs byte-reproducible.
//! - Block notation between sets in a *witness* expands to all cross pairs
//!   and no intra-block pairs. The one documented exception: a bare `U`
//!   appearing in a witness line that also uses braced sets keeps the
//!   canonical chain from the complete preference (the braces mark what is
//!   freed). Each generator notes the disambiguations it applied in its
//!   bookkeeping.
//! - Where a printed witness would violate the construction's own pair
//!   limits, the witness is minimally extended with the missing pairs of the
//!   underlying complete preference; every such repair is noted.

pub mod bucklin;
pub mod copeland;
pub mod maximin;
pub mod plurality;
pub mod scoring;
pub mod source;
pub mod veto;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::mecpl::{mecpl_check_shape, mecpl_verify, MecplError, MecplInstance};
use crate::order::{AltId, LinearOrder, OrderError, PartialOrder};
use crate::profile::{PartialProfile, Profile, ProfileError};
use crate::regret::{pmr, MrResult, RegretBudget, RegretError};
use crate::rules::{Rule, RuleError, Score};

pub use source::{
    pad_x3c, vc_to_scft, Graph, PadTarget, PaddingRecord, ScftInstance, SourceError,
    X3cInstance,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("side condition unmet: {0}")]
    SideCondition(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("cannot parse reduction kind {0:?}")]
    BadKind(String),
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Mecpl(#[from] MecplError),
    #[error(transparent)]
    Regret(#[from] RegretError),
}

/// Which construction to generate; the strings are the CLI-facing names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Plurality,
    TwoApproval,
    KVeto(usize),
    Maximin,
    Copeland,
    Bucklin,
    ScoringBorda,
    ScoringApproval(usize),
}

impl ReductionKind {
    /// Kinds reducing from X3C; the rest reduce from SCFT.
    pub fn from_x3c(self) -> bool {
        matches!(
            self,
            ReductionKind::Plurality | ReductionKind::TwoApproval | ReductionKind::KVeto(_)
        )
    }

    /// Scoring-rule kinds are verified structurally (completion and limits),
    /// without regret computation.
    pub fn structural_only(self) -> bool {
        matches!(self, ReductionKind::ScoringBorda | ReductionKind::ScoringApproval(_))
    }
}

impl FromStr for ReductionKind {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, ReductionError> {
        match s {
            "plurality" => return Ok(ReductionKind::Plurality),
            "2approval" => return Ok(ReductionKind::TwoApproval),
            "maximin" => return Ok(ReductionKind::Maximin),
            "copeland" => return Ok(ReductionKind::Copeland),
            "bucklin" => return Ok(ReductionKind::Bucklin),
            "scoring:borda" => return Ok(ReductionKind::ScoringBorda),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("kveto:") {
            if let Ok(k) = k.parse::<usize>() {
                if k >= 1 {
                    return Ok(ReductionKind::KVeto(k));
                }
            }
        }
        if let Some(k) = s.strip_prefix("scoring:approval-") {
            if let Ok(k) = k.parse::<usize>() {
                return Ok(ReductionKind::ScoringApproval(k));
            }
        }
        Err(ReductionError::BadKind(s.to_string()))
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionKind::Plurality => write!(f, "plurality"),
            ReductionKind::TwoApproval => write!(f, "2approval"),
            ReductionKind::KVeto(k) => write!(f, "kveto:{k}"),
            ReductionKind::Maximin => write!(f, "maximin"),
            ReductionKind::Copeland => write!(f, "copeland"),
            ReductionKind::Bucklin => write!(f, "bucklin"),
            ReductionKind::ScoringBorda => write!(f, "scoring:borda"),
            ReductionKind::ScoringApproval(k) => write!(f, "scoring:approval-{k}"),
        }
    }
}

/// A contiguous run of preferences belonging to one construction group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpan {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

/// Construction metadata: names, group boundaries, source frequencies,
/// padding, parameters, and every disambiguation applied.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bookkeeping {
    pub alternative_names: Vec<String>,
    pub groups: Vec<GroupSpan>,
    pub frequencies: Vec<usize>,
    pub padding: Option<PaddingRecord>,
    pub params: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl Bookkeeping {
    pub fn group(&self, name: &str) -> Option<&GroupSpan> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub(crate) fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }
}

/// The generated MECPL instance plus everything needed to audit it.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub instance: MecplInstance,
    pub alternative_names: Vec<String>,
    /// The (padded) source instance the generator actually encoded.
    pub source_scft: Option<ScftInstance>,
    pub source_x3c: Option<X3cInstance>,
    pub bookkeeping: Bookkeeping,
}

impl ReductionOutput {
    pub fn m(&self) -> usize {
        self.instance.profile.m()
    }

    pub fn n(&self) -> usize {
        self.instance.profile.n()
    }
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

/// A complete preference from a chain of id groups, each laid out ascending.
pub(crate) fn complete_from_blocks(m: usize, blocks: &[Vec<AltId>]) -> LinearOrder {
    let mut ranking = Vec::with_capacity(m);
    for block in blocks {
        let mut block = block.clone();
        block.sort_unstable();
        ranking.extend(block);
    }
    debug_assert_eq!(ranking.len(), m, "blocks must cover every alternative once");
    LinearOrder::new(ranking).expect("valid block layout")
}

/// A partial order from a chain of blocks (cross pairs only).
pub(crate) fn blocks(m: usize, chain: &[Vec<AltId>]) -> PartialOrder {
    PartialOrder::from_blocks(m, chain).expect("valid witness blocks")
}

/// Union of several block chains (the proofs write witnesses as unions).
pub(crate) fn block_union(m: usize, chains: &[Vec<Vec<AltId>>]) -> PartialOrder {
    let mut acc = PartialOrder::empty(m).expect("m checked upstream");
    for chain in chains {
        acc = acc.union(&blocks(m, chain)).expect("witness chains are acyclic");
    }
    acc
}

pub(crate) fn ids(range: std::ops::Range<usize>) -> Vec<AltId> {
    range.collect()
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Runs the generator for `kind`. X3C kinds take (and pad) an X3C source;
/// SCFT kinds take an SCFT source.
pub fn reduce_x3c(kind: ReductionKind, inst: &X3cInstance) -> Result<ReductionOutput, ReductionError> {
    match kind {
        ReductionKind::Plurality => plurality::reduce_plurality(inst),
        ReductionKind::TwoApproval => plurality::reduce_two_approval(inst),
        ReductionKind::KVeto(k) => veto::reduce_kveto(inst, k),
        _ => Err(ReductionError::SideCondition(format!("{kind} reduces from SCFT, not X3C"))),
    }
}

/// Applies the construction's padding steps to a raw X3C instance, then
/// runs the generator, keeping the padding record in the bookkeeping.
pub fn pad_and_reduce_x3c(
    kind: ReductionKind,
    raw: &X3cInstance,
) -> Result<ReductionOutput, ReductionError> {
    let target = match kind {
        ReductionKind::Plurality | ReductionKind::TwoApproval => PadTarget::Plurality,
        ReductionKind::KVeto(_) => PadTarget::KVeto,
        _ => {
            return Err(ReductionError::SideCondition(format!(
                "{kind} reduces from SCFT, not X3C"
            )))
        }
    };
    let (padded, record) = pad_x3c(raw, target);
    let mut output = reduce_x3c(kind, &padded)?;
    output.bookkeeping.padding = Some(record);
    Ok(output)
}

pub fn reduce_scft(
    kind: ReductionKind,
    inst: &ScftInstance,
) -> Result<ReductionOutput, ReductionError> {
    match kind {
        ReductionKind::Maximin => maximin::reduce_maximin(inst),
        ReductionKind::Copeland => copeland::reduce_copeland(inst),
        ReductionKind::Bucklin => bucklin::reduce_bucklin(inst),
        ReductionKind::ScoringBorda => scoring::reduce_scoring(inst, scoring::Family::Borda),
        ReductionKind::ScoringApproval(k) => {
            scoring::reduce_scoring(inst, scoring::Family::Approval(k))
        }
        _ => Err(ReductionError::SideCondition(format!("{kind} reduces from X3C, not SCFT"))),
    }
}

/// The proof's forward-direction witness partial profile for a cover of the
/// source instance, with covering sets taken at their actual indices.
pub fn witness_from_cover(
    output: &ReductionOutput,
    cover: &[usize],
) -> Result<PartialProfile, ReductionError> {
    let mut cover = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    if let Some(x3c) = &output.source_x3c {
        if !x3c.is_exact_cover(&cover) {
            return Err(ReductionError::InvalidCover(
                "not an exact cover of the (padded) X3C instance".into(),
            ));
        }
    }
    if let Some(scft) = &output.source_scft {
        if !scft.is_cover(&cover) {
            return Err(ReductionError::InvalidCover(
                "not a cover of the SCFT instance within the bound".into(),
            ));
        }
    }
    match output.kind {
        ReductionKind::Plurality => plurality::witness(output, &cover, false),
        ReductionKind::TwoApproval => plurality::witness(output, &cover, true),
        ReductionKind::KVeto(_) => veto::witness(output, &cover),
        ReductionKind::Maximin => maximin::witness(output, &cover),
        ReductionKind::Copeland => copeland::witness(output, &cover),
        ReductionKind::Bucklin => bucklin::witness(output, &cover),
        ReductionKind::ScoringBorda | ReductionKind::ScoringApproval(_) => {
            scoring::witness(output, &cover)
        }
    }
}

// ---------------------------------------------------------------------------
// Forward verification
// ---------------------------------------------------------------------------

/// What the theorem's table predicts for one alternative class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Exact(i64),
    AtLeast(i64),
}

impl Expectation {
    pub fn matches(&self, computed: Score) -> bool {
        match *self {
            Expectation::Exact(v) => computed == Score::from_integer(v),
            Expectation::AtLeast(v) => computed >= Score::from_integer(v),
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Exact(v) => write!(f, "{v}"),
            Expectation::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// One class entry in the table: which alternative, what the table expects,
/// which competing alternatives it lists.
#[derive(Debug, Clone)]
pub(crate) struct TableRow {
    pub class: String,
    pub alternative: AltId,
    pub expected: Option<Expectation>,
    pub competing: Vec<AltId>,
}

/// Expected-versus-computed for one alternative class.
#[derive(Debug, Clone)]
pub struct ClassRow {
    pub class: String,
    pub alternative: AltId,
    pub name: String,
    pub expected: Option<Expectation>,
    pub computed: Score,
    pub value_matches: bool,
    pub competing_expected: Vec<AltId>,
    /// True iff some listed competing alternative realizes the computed MR
    /// as a pairwise max regret.
    pub competing_valid: bool,
}

/// Outcome of the forward-direction check: witness validity plus the table
/// comparison.
#[derive(Debug, Clone)]
pub struct ForwardReport {
    pub kind: ReductionKind,
    pub completion_ok: bool,
    pub limits_ok: bool,
    pub limit_violations: Vec<((AltId, AltId), usize, usize)>,
    pub winner_ok: bool,
    pub structural_only: bool,
    pub rows: Vec<ClassRow>,
    pub mr: Option<MrResult>,
    /// For the Copeland kind: the MR tables under alpha 0, 1/2 and 1 agree.
    pub alpha_consistent: Option<bool>,
}

impl ForwardReport {
    /// Everything the theorem promises holds: valid witness, unique winner,
    /// every table row matched (vacuously for structural-only kinds).
    pub fn all_match(&self) -> bool {
        self.completion_ok
            && self.limits_ok
            && (self.structural_only || self.winner_ok)
            && self.rows.iter().all(|r| r.value_matches && r.competing_valid)
    }
}

pub(crate) fn table_for(output: &ReductionOutput) -> Vec<TableRow> {
    match output.kind {
        ReductionKind::Plurality | ReductionKind::TwoApproval => plurality::table(output),
        ReductionKind::KVeto(_) => veto::table(output),
        ReductionKind::Maximin => maximin::table(output),
        ReductionKind::Copeland => copeland::table(output),
        ReductionKind::Bucklin => bucklin::table(output),
        ReductionKind::ScoringBorda | ReductionKind::ScoringApproval(_) => Vec::new(),
    }
}

/// Builds the cover witness, verifies it as a MECPL witness, and compares
/// each alternative class's MR value against the theorem's table formula.
pub fn verify_forward(
    output: &ReductionOutput,
    cover: &[usize],
    budget: &RegretBudget,
) -> Result<ForwardReport, ReductionError> {
    let witness = witness_from_cover(output, cover)?;
    if output.kind.structural_only() {
        let shape = mecpl_check_shape(&output.instance, &witness)?;
        return Ok(ForwardReport {
            kind: output.kind,
            completion_ok: shape.completion_failures.is_empty(),
            limits_ok: shape.limit_violations.is_empty(),
            limit_violations: shape.limit_violations,
            winner_ok: false,
            structural_only: true,
            rows: Vec::new(),
            mr: None,
            alpha_consistent: None,
        });
    }

    let verify = mecpl_verify(&output.instance, &witness, budget)?;
    let mr = verify.mr.clone().expect("mecpl_verify computes MR");
    let mut rows = Vec::new();
    for entry in table_for(output) {
        let computed = mr.mr_value(entry.alternative);
        let value_matches = entry.expected.map_or(true, |e| e.matches(computed));
        let competing_valid = if entry.competing.is_empty() {
            true
        } else {
            entry.competing.iter().any(|&w| {
                w != entry.alternative
                    && pmr(&output.instance.rule, entry.alternative, w, &witness, budget)
                        .map_or(false, |value| value == computed)
            })
        };
        rows.push(ClassRow {
            class: entry.class,
            alternative: entry.alternative,
            name: output.alternative_names[entry.alternative].clone(),
            expected: entry.expected,
            computed,
            value_matches,
            competing_expected: entry.competing,
            competing_valid,
        });
    }

    let alpha_consistent = if output.kind == ReductionKind::Copeland {
        let mut tables = Vec::new();
        for alpha in [Score::from_integer(0), Score::new(1, 2), Score::from_integer(1)] {
            let mut inst = output.instance.clone();
            inst.rule = Rule::copeland(alpha)?;
            let verify = mecpl_verify(&inst, &witness, budget)?;
            let table: Vec<Score> = (0..output.m())
                .map(|a| verify.mr.as_ref().expect("mr computed").mr_value(a))
                .collect();
            tables.push(table);
        }
        Some(tables.windows(2).all(|w| w[0] == w[1]))
    } else {
        None
    };

    Ok(ForwardReport {
        kind: output.kind,
        completion_ok: verify.completion_ok,
        limits_ok: verify.limits_ok,
        limit_violations: verify.limit_violations,
        winner_ok: verify.winner_ok,
        structural_only: false,
        rows,
        mr: Some(mr),
        alpha_consistent,
    })
}

/// Structural invariants every generated instance must satisfy; used by
/// tests and the CLI after generation.
pub fn check_structure(output: &ReductionOutput) -> Result<(), ReductionError> {
    let n = output.n();
    output.instance.limits.validate(output.m(), n)?;
    let total: usize = output.bookkeeping.groups.iter().map(|g| g.len).sum();
    if total != n {
        return Err(ReductionError::SideCondition(format!(
            "group spans cover {total} preferences, instance has {n}"
        )));
    }
    for window in output.bookkeeping.groups.windows(2) {
        if window[0].start + window[0].len != window[1].start {
            return Err(ReductionError::SideCondition(
                "group spans must be contiguous".into(),
            ));
        }
    }
    Ok(())
}

/// Convenience accessor used by the per-kind modules.
pub(crate) fn group_profile(prefs: Vec<LinearOrder>, m: usize) -> Result<Profile, ProfileError> {
    Profile::new(m, prefs)
}
