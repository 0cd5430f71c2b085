//! SCFT to MECPL for normalized scoring rules with a pivot position
//! (Borda and k-approval instantiations are shipped, both with g(m) = 3m).
//!
//! The construction leaves several positions implicit; they are filled with
//! unused alternatives in ascending id order and every such choice is
//! recorded. Verification for this family is structural only: witness
//! completion and pair limits, no regret computation.

use super::*;
use crate::mecpl::PairLimits;
use crate::rules::{make_vector, ScoreVector, VectorFamily};

const NOTE_G2_PER_ELEMENT: &str =
    "the t-2 copy group is instantiated once per universe element";
const NOTE_FILLERS: &str = "implicit positions are filled with unused alternatives in \
     ascending id order; d is placed last in the pivot-gap group";
const NOTE_WITNESS_D_ROWS: &str = "witnesses for the filler groups keep d's full row from \
     the complete preference so the {d, z} = n limits hold";

/// The shipped scoring families; both use g(m) = 3m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Borda,
    /// k-approval with 3 <= k.
    Approval(usize),
}

impl Family {
    fn pivot(self) -> usize {
        match self {
            Family::Borda => 3,
            Family::Approval(k) => k,
        }
    }

    fn vector(self, g: usize) -> Result<ScoreVector, ReductionError> {
        let family = match self {
            Family::Borda => VectorFamily::Borda,
            Family::Approval(k) => VectorFamily::Approval(k),
        };
        Ok(make_vector(family, g)?)
    }
}

pub(crate) struct Layout {
    pub q: usize,
    pub t: usize,
    pub ell: usize,
    pub c: AltId,
    pub d: AltId,
    pub w_start: AltId,
    pub g: usize,
}

pub(crate) fn layout(output: &ReductionOutput) -> Layout {
    let src = output.source_scft.as_ref().expect("scft source");
    let q = src.q();
    Layout { q, t: src.t(), ell: src.ell, c: q, d: q + 1, w_start: q + 2, g: output.m() }
}

pub fn reduce_scoring(
    inst: &ScftInstance,
    family: Family,
) -> Result<ReductionOutput, ReductionError> {
    let q = inst.q();
    let t = inst.t();
    let g = 3 * q;
    let pivot = family.pivot();
    let vector = family.vector(g)?;
    let alpha = |i: usize| -> i64 { vector.entries()[i - 1] as i64 };
    let kappa = vector.last_nonzero_index();
    let n_w = g - q - 2; // |W|

    if t < 2 {
        return Err(ReductionError::SideCondition(format!(
            "scoring construction needs t >= 2, got t = {t}"
        )));
    }
    if pivot < 3 || pivot > g - q + 3 {
        return Err(ReductionError::SideCondition(format!(
            "pivot {pivot} outside 3..={}", g - q + 3
        )));
    }
    if pivot + 2 > g || alpha(pivot) <= alpha(pivot + 1) {
        return Err(ReductionError::SideCondition(format!(
            "vector has no strict drop at pivot {pivot}"
        )));
    }
    if pivot - 1 > n_w {
        return Err(ReductionError::SideCondition(format!(
            "prefix W_{} exceeds the {n_w} filler alternatives", pivot - 1
        )));
    }
    if kappa < 3 || kappa >= g {
        return Err(ReductionError::SideCondition(format!(
            "last nonzero index {kappa} leaves no room for the pivot-gap preferences"
        )));
    }

    let (c, d) = (q, q + 1);
    let w = |j: usize| q + 1 + j; // w_1 = q + 2
    let w_prefix = |k: usize| -> Vec<AltId> { (1..=k).map(w).collect() };
    let w_suffix = |k: usize| -> Vec<AltId> { (k + 1..=n_w).map(w).collect() };
    let mut names: Vec<String> = inst.universe.clone();
    names.extend(["c".into(), "d".into()]);
    names.extend((1..=n_w).map(|j| format!("w{j}")));

    let universe: Vec<AltId> = ids(0..q);
    let mut prefs: Vec<LinearOrder> = Vec::new();
    let mut groups: Vec<GroupSpan> = Vec::new();

    // G1: W_{p-3} > S_i > d > c > (U \ S_i) > (W \ W_{p-3})
    groups.push(GroupSpan { name: "G1".into(), start: 0, len: t });
    for i in 0..t {
        let in_set = inst.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        prefs.push(complete_from_blocks(
            g,
            &[w_prefix(pivot - 3), in_set, vec![d], vec![c], out_set, w_suffix(pivot - 3)],
        ));
    }
    // G2: per element, t-2 copies of W_{p-1} > a_i > d > (U \ {a_i}) > (W \ W_{p-1}) > c
    let g2_start = prefs.len();
    for i in 0..q {
        let others: Vec<AltId> = universe.iter().copied().filter(|&e| e != i).collect();
        for _ in 0..t - 2 {
            prefs.push(complete_from_blocks(
                g,
                &[w_prefix(pivot - 1), vec![i], vec![d], others.clone(), w_suffix(pivot - 1), vec![c]],
            ));
        }
    }
    groups.push(GroupSpan { name: "G2".into(), start: g2_start, len: prefs.len() - g2_start });

    // G3: t(alpha_p - alpha_{p+2}) copies; c at position kappa, d last.
    let g3_count = (t as i64 * (alpha(pivot) - alpha(pivot + 2))) as usize;
    let g3_start = prefs.len();
    let g3_pref = positioned_pref(g, &[(1, w(1)), (2, w(2)), (kappa, c), (g, d)]);
    for _ in 0..g3_count {
        prefs.push(g3_pref.clone());
    }
    groups.push(GroupSpan { name: "G3".into(), start: g3_start, len: g3_count });

    // G4: three shapes depending on the vector's tail.
    let g4_count = ((q + 1) as i64 * t as i64 * alpha(pivot - 1)) as usize;
    let g4_start = prefs.len();
    if alpha(g - 1) == 1 {
        // ... > c > d
        let pref = positioned_pref(g, &[(g - 1, c), (g, d)]);
        for _ in 0..g4_count {
            prefs.push(pref.clone());
        }
    } else if kappa <= g - q - 1 {
        // W_2 > ... > c > d > U > ..., d at kappa + 1
        let mut fixed: Vec<(usize, AltId)> = vec![(1, w(1)), (2, w(2)), (kappa, c), (kappa + 1, d)];
        for (offset, &u) in universe.iter().enumerate() {
            fixed.push((kappa + 2 + offset, u));
        }
        let pref = positioned_pref(g, &fixed);
        for _ in 0..g4_count {
            prefs.push(pref.clone());
        }
        // and per element: W_2 > ... > a_i > d > c > (U \ {a_i}) > ...
        for i in 0..q {
            let mut fixed: Vec<(usize, AltId)> =
                vec![(1, w(1)), (2, w(2)), (kappa, i), (kappa + 1, d), (kappa + 2, c)];
            let mut offset = 0;
            for &u in universe.iter().filter(|&&u| u != i) {
                fixed.push((kappa + 3 + offset, u));
                offset += 1;
            }
            let pref = positioned_pref(g, &fixed);
            for _ in 0..g4_count {
                prefs.push(pref.clone());
            }
        }
    } else {
        // W_2 > ... > U > c > d > ..., d at kappa + 1
        if kappa < q + 3 {
            return Err(ReductionError::SideCondition(format!(
                "kappa = {kappa} leaves no room for U before position kappa"
            )));
        }
        let mut fixed: Vec<(usize, AltId)> = vec![(1, w(1)), (2, w(2)), (kappa, c), (kappa + 1, d)];
        for (offset, &u) in universe.iter().enumerate() {
            fixed.push((kappa - q + offset, u));
        }
        let pref = positioned_pref(g, &fixed);
        for _ in 0..g4_count {
            prefs.push(pref.clone());
        }
    }
    groups.push(GroupSpan { name: "G4".into(), start: g4_start, len: prefs.len() - g4_start });

    let n = prefs.len();
    let mut limits = PairLimits::new();
    for z in 0..g {
        if z != c && z != d {
            limits.set(d, z, n)?;
        }
    }
    limits.set(d, c, n - inst.ell)?;

    let rule = Rule::Scoring(vector.clone());
    let profile = Profile::new(g, prefs)?;
    let instance = MecplInstance { rule, profile, target: c, limits };

    let kind = match family {
        Family::Borda => ReductionKind::ScoringBorda,
        Family::Approval(k) => ReductionKind::ScoringApproval(k),
    };
    let mut bookkeeping = Bookkeeping {
        alternative_names: names.clone(),
        groups,
        frequencies: inst.frequencies(),
        padding: None,
        params: BTreeMap::new(),
        notes: vec![
            NOTE_G2_PER_ELEMENT.into(),
            NOTE_FILLERS.into(),
            NOTE_WITNESS_D_ROWS.into(),
        ],
    };
    bookkeeping.param("q", q);
    bookkeeping.param("t", t);
    bookkeeping.param("ell", inst.ell);
    bookkeeping.param("n", n);
    bookkeeping.param("m", g);
    bookkeeping.param("g", g);
    bookkeeping.param("pivot", pivot);
    bookkeeping.param("kappa", kappa);

    Ok(ReductionOutput {
        kind,
        instance,
        alternative_names: names,
        source_scft: Some(inst.clone()),
        source_x3c: None,
        bookkeeping,
    })
}

/// A complete preference with some 1-based positions pinned; every other
/// slot takes the smallest unused alternative id.
fn positioned_pref(m: usize, fixed: &[(usize, AltId)]) -> LinearOrder {
    let mut ranking: Vec<Option<AltId>> = vec![None; m];
    let mut used = vec![false; m];
    for &(pos, alt) in fixed {
        assert!(ranking[pos - 1].is_none(), "position {pos} pinned twice");
        assert!(!used[alt], "alternative {alt} pinned twice");
        ranking[pos - 1] = Some(alt);
        used[alt] = true;
    }
    let mut fillers = (0..m).filter(|&z| !used[z]);
    let ranking: Vec<AltId> =
        ranking.into_iter().map(|slot| slot.unwrap_or_else(|| fillers.next().expect("filler"))).collect();
    LinearOrder::new(ranking).expect("positioned preference is a permutation")
}

pub(crate) fn witness(
    output: &ReductionOutput,
    cover: &[usize],
) -> Result<PartialProfile, ReductionError> {
    let lay = layout(output);
    let (q, t, c, d, g) = (lay.q, lay.t, lay.c, lay.d, lay.g);
    let src = output.source_scft.as_ref().expect("scft source");
    let pivot: usize = output.bookkeeping.params["pivot"].parse().expect("pivot recorded");
    let n_w = g - q - 2;
    let w = |j: usize| q + 1 + j;
    let w_prefix = |k: usize| -> Vec<AltId> { (1..=k).map(w).collect() };
    let w_suffix = |k: usize| -> Vec<AltId> { (k + 1..=n_w).map(w).collect() };
    let universe: Vec<AltId> = ids(0..q);

    let mut orders: Vec<PartialOrder> = Vec::new();
    for i in 0..t {
        let mut top = w_prefix(pivot - 3);
        top.extend(src.sets[i].iter().copied());
        let mut bottom: Vec<AltId> =
            universe.iter().copied().filter(|e| !src.sets[i].contains(e)).collect();
        bottom.extend(w_suffix(pivot - 3));
        let order = if cover.contains(&i) {
            block_union(
                m_of(output),
                &[
                    vec![top, vec![d], bottom.clone()],
                    vec![vec![c], bottom],
                ],
            )
        } else {
            blocks(m_of(output), &[top, vec![d], vec![c], bottom])
        };
        orders.push(order);
    }
    for i in 0..q {
        let mut top = w_prefix(pivot - 1);
        top.push(i);
        let mut bottom: Vec<AltId> =
            universe.iter().copied().filter(|&e| e != i).collect();
        bottom.extend(w_suffix(pivot - 1));
        bottom.push(c);
        let order = blocks(m_of(output), &[top, vec![d], bottom]);
        for _ in 0..t - 2 {
            orders.push(order.clone());
        }
    }
    // G3 and G4: keep c's beaten set and d's full row from the preference.
    let g3 = output.bookkeeping.group("G3").expect("G3 span").clone();
    let g4 = output.bookkeeping.group("G4").expect("G4 span").clone();
    for span in [g3, g4] {
        for voter in span.start..span.start + span.len {
            let pref = output.instance.profile.order(voter);
            orders.push(keep_c_and_d_rows(pref, c, d));
        }
    }

    Ok(PartialProfile::new(m_of(output), orders)?)
}

fn m_of(output: &ReductionOutput) -> usize {
    output.m()
}

/// Pairs (c, y) for everything c beats, plus d's full row in either
/// orientation.
fn keep_c_and_d_rows(pref: &LinearOrder, c: AltId, d: AltId) -> PartialOrder {
    let m = pref.m();
    let mut pairs = std::collections::BTreeSet::new();
    for y in 0..m {
        if y != c && pref.prefers(c, y) {
            pairs.insert((c, y));
        }
    }
    for z in 0..m {
        if z != d {
            if pref.prefers(z, d) {
                pairs.insert((z, d));
            } else {
                pairs.insert((d, z));
            }
        }
    }
    let pairs: Vec<(AltId, AltId)> = pairs.into_iter().collect();
    PartialOrder::from_pairs(m, &pairs).expect("rows of a chain are acyclic")
}
