//! X3C to MECPL for the plurality rule, and the 2-approval variant that adds
//! one top-dummy per preference.
//!
//! Alternatives: the q element alternatives, then c, d, w (and for
//! 2-approval, n dummies). Limits force w to stay comparable to everything
//! except d, and tie each {c, a_i} pair to the element's frequency.

use super::*;
use crate::mecpl::PairLimits;
use crate::rules::RuleFamily;

const NOTE_G2_W_LAST: &str = "w is unmentioned in the G2 preferences; placed last, and the \
     witness pins it there so the limits on {w, x} stay satisfiable";
const NOTE_G3_TAIL: &str =
    "the G3 preference lists c before the residual set; the residual excludes c";

pub(crate) struct Layout {
    pub q: usize,
    pub t: usize,
    pub c: AltId,
    pub d: AltId,
    pub w: AltId,
    pub dummies: std::ops::Range<usize>,
}

pub(crate) fn layout(output: &ReductionOutput) -> Layout {
    let src = output.source_x3c.as_ref().expect("x3c source");
    let q = src.q();
    let m = output.m();
    Layout {
        q,
        t: src.t(),
        c: q,
        d: q + 1,
        w: q + 2,
        dummies: q + 3..m,
    }
}

fn validate(inst: &X3cInstance) -> Result<(), ReductionError> {
    if inst.q() % 6 != 0 {
        return Err(ReductionError::SideCondition(format!(
            "q = {} is not divisible by 6 (pad first)",
            inst.q()
        )));
    }
    let t = inst.t();
    for (i, &f) in inst.frequencies().iter().enumerate() {
        if 2 * f as i64 >= 2 * t as i64 - inst.q() as i64 {
            return Err(ReductionError::SideCondition(format!(
                "element {i} has frequency {f}, bound requires f < t - q/2 (pad first)"
            )));
        }
    }
    Ok(())
}

pub fn reduce_plurality(inst: &X3cInstance) -> Result<ReductionOutput, ReductionError> {
    build(inst, false)
}

/// The 2-approval variant: n fresh dummies, each topping exactly one
/// preference and sitting in the bottom positions of every other.
pub fn reduce_two_approval(inst: &X3cInstance) -> Result<ReductionOutput, ReductionError> {
    build(inst, true)
}

fn build(inst: &X3cInstance, two_approval: bool) -> Result<ReductionOutput, ReductionError> {
    validate(inst)?;
    let q = inst.q();
    let t = inst.t();
    let freq = inst.frequencies();
    let n = t + q / 6 + 2;
    let base_m = q + 3;
    let m = if two_approval { base_m + n } else { base_m };

    let (c, d, w) = (q, q + 1, q + 2);
    let mut names: Vec<String> = inst.universe.clone();
    names.extend(["c".to_string(), "d".to_string(), "w".to_string()]);
    if two_approval {
        names.extend((1..=n).map(|j| format!("dummy{j}")));
    }
    let alternatives = crate::profile::Alternatives::new(names.clone())
        .map_err(|_| ReductionError::SideCondition("alternative names collide".into()))?;
    drop(alternatives);

    let universe: Vec<AltId> = ids(0..q);
    let in_set = |i: usize| -> Vec<AltId> { inst.sets[i].clone() };
    let out_set = |i: usize| -> Vec<AltId> {
        universe.iter().copied().filter(|e| !inst.sets[i].contains(e)).collect()
    };

    // Complete preferences over the base alternatives; dummies are spliced
    // in afterwards for the 2-approval variant.
    let mut base_prefs: Vec<LinearOrder> = Vec::with_capacity(n);
    let mut groups = Vec::new();
    // G1: for each set, d > S_i > c > (U \ S_i) > w
    groups.push(GroupSpan { name: "G1".into(), start: 0, len: t });
    for i in 0..t {
        base_prefs.push(complete_from_blocks(
            base_m,
            &[vec![d], in_set(i), vec![c], out_set(i), vec![w]],
        ));
    }
    // G2: q/6 + 1 copies of c > (A \ {c, w}), with w last
    groups.push(GroupSpan { name: "G2".into(), start: t, len: q / 6 + 1 });
    let mids: Vec<AltId> = ids(0..q).into_iter().chain([d]).collect();
    for _ in 0..q / 6 + 1 {
        base_prefs.push(complete_from_blocks(base_m, &[vec![c], mids.clone(), vec![w]]));
    }
    // G3: one copy of d > w > c > rest
    groups.push(GroupSpan { name: "G3".into(), start: t + q / 6 + 1, len: 1 });
    base_prefs.push(complete_from_blocks(base_m, &[vec![d], vec![w], vec![c], ids(0..q)]));
    debug_assert_eq!(base_prefs.len(), n);

    let prefs: Vec<LinearOrder> = if two_approval {
        base_prefs
            .iter()
            .enumerate()
            .map(|(j, base)| {
                let mut ranking: Vec<AltId> = vec![base_m + j];
                ranking.extend(base.ranking());
                ranking.extend((0..n).filter(|&i| i != j).map(|i| base_m + i));
                LinearOrder::new(ranking).expect("dummy splice is a permutation")
            })
            .collect()
    } else {
        base_prefs
    };

    let mut limits = PairLimits::new();
    for (i, &f) in freq.iter().enumerate() {
        limits.set(c, i, n - f + 1)?;
    }
    limits.set(w, d, n - 1)?;
    for z in (0..q).chain([c]) {
        limits.set(w, z, n)?;
    }

    let kind = if two_approval { ReductionKind::TwoApproval } else { ReductionKind::Plurality };
    let family = if two_approval { RuleFamily::Approval(2) } else { RuleFamily::Plurality };
    let rule = family.materialize(m)?;
    let profile = Profile::new(m, prefs)?;
    let instance = MecplInstance { rule, profile, target: c, limits };

    let mut bookkeeping = Bookkeeping {
        alternative_names: names.clone(),
        groups,
        frequencies: freq,
        padding: None,
        params: BTreeMap::new(),
        notes: vec![NOTE_G2_W_LAST.into(), NOTE_G3_TAIL.into()],
    };
    bookkeeping.param("q", q);
    bookkeeping.param("t", t);
    bookkeeping.param("n", n);
    bookkeeping.param("m", m);
    bookkeeping.param("cover_size", q / 3);
    if two_approval {
        bookkeeping.notes.push(
            "dummy j tops preference j and is pinned below every base alternative elsewhere"
                .into(),
        );
    }

    Ok(ReductionOutput {
        kind,
        instance,
        alternative_names: names,
        source_scft: None,
        source_x3c: Some(inst.clone()),
        bookkeeping,
    })
}

pub(crate) fn witness(
    output: &ReductionOutput,
    cover: &[usize],
    two_approval: bool,
) -> Result<PartialProfile, ReductionError> {
    let lay = layout(output);
    let (q, t, c, d, w) = (lay.q, lay.t, lay.c, lay.d, lay.w);
    let src = output.source_x3c.as_ref().expect("x3c source");
    let m = output.m();
    let universe: Vec<AltId> = ids(0..q);
    let n = output.n();

    let mut orders: Vec<PartialOrder> = Vec::with_capacity(n);
    for i in 0..t {
        let in_set = src.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        let chain = if cover.contains(&i) {
            // (S_i > c > (U \ S_i) > w) plus d > w
            vec![in_set, vec![c], out_set, vec![w]]
        } else {
            // (c > (U \ S_i) > w) plus d > w
            vec![vec![c], out_set, vec![w]]
        };
        orders.push(block_union(m, &[chain, vec![vec![d], vec![w]]]));
    }
    // G2: c > (A \ {c, w}) with w pinned last
    let mids: Vec<AltId> = ids(0..q).into_iter().chain([d]).collect();
    for _ in 0..q / 6 + 1 {
        orders.push(blocks(m, &[vec![c], mids.clone(), vec![w]]));
    }
    // G3: w > c > rest; d left free
    orders.push(blocks(m, &[vec![w], vec![c], ids(0..q)]));

    if two_approval {
        let base_m = q + 3;
        let base_ids: Vec<AltId> = ids(0..base_m);
        orders = orders
            .into_iter()
            .enumerate()
            .map(|(j, base)| {
                let own = base_m + j;
                let mut chains: Vec<Vec<Vec<AltId>>> = vec![
                    // dummy j above everything
                    vec![vec![own], (0..m).filter(|&z| z != own).collect()],
                ];
                // every base alternative above every other dummy, and the
                // other dummies chained in ascending order
                let mut rest: Vec<Vec<AltId>> = vec![base_ids.clone()];
                for i in 0..n {
                    if i != j {
                        rest.push(vec![base_m + i]);
                    }
                }
                chains.push(rest);
                let pins = block_union(m, &chains);
                base.union(&pins).expect("dummy pins are consistent")
            })
            .collect();
    }

    Ok(PartialProfile::new(m, orders)?)
}

pub(crate) fn table(output: &ReductionOutput) -> Vec<TableRow> {
    let lay = layout(output);
    let (q, t) = (lay.q as i64, lay.t as i64);
    let mut rows = vec![TableRow {
        class: "c".into(),
        alternative: lay.c,
        expected: Some(Expectation::Exact(t - q / 6)),
        competing: vec![lay.d],
    }];
    for a in 0..lay.q {
        rows.push(TableRow {
            class: format!("a_{}", a + 1),
            alternative: a,
            expected: Some(Expectation::Exact(t)),
            competing: vec![lay.d],
        });
    }
    rows.push(TableRow {
        class: "d".into(),
        alternative: lay.d,
        expected: Some(Expectation::Exact(t - q / 6 + 1)),
        competing: vec![lay.c],
    });
    rows
}
