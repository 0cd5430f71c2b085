//! SCFT to MECPL for the maximin rule: t set preferences plus two copies of
//! the c-first preference; d must stay comparable to everything except c,
//! and to c in all but ell preferences.

use super::*;
use crate::mecpl::PairLimits;
use crate::rules::RuleFamily;

const NOTE_G2_U_CHAIN: &str = "in the G2 witness the braced {w1, w2} pair is freed while the \
     bare U keeps its canonical chain from the complete preference";

pub(crate) struct Layout {
    pub q: usize,
    pub t: usize,
    pub ell: usize,
    pub c: AltId,
    pub w1: AltId,
    pub w2: AltId,
    pub d: AltId,
}

pub(crate) fn layout(output: &ReductionOutput) -> Layout {
    let src = output.source_scft.as_ref().expect("scft source");
    let q = src.q();
    Layout { q, t: src.t(), ell: src.ell, c: q, w1: q + 1, w2: q + 2, d: q + 3 }
}

pub fn reduce_maximin(inst: &ScftInstance) -> Result<ReductionOutput, ReductionError> {
    let q = inst.q();
    let t = inst.t();
    let m = q + 4;
    let (c, w1, w2, d) = (q, q + 1, q + 2, q + 3);
    let mut names: Vec<String> = inst.universe.clone();
    names.extend(["c".into(), "w1".into(), "w2".into(), "d".into()]);

    let universe: Vec<AltId> = ids(0..q);
    let mut prefs = Vec::with_capacity(t + 2);
    let mut groups = Vec::new();
    // G1: w1 > w2 > S_i > d > c > (U \ S_i)
    groups.push(GroupSpan { name: "G1".into(), start: 0, len: t });
    for i in 0..t {
        let in_set = inst.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        prefs.push(complete_from_blocks(
            m,
            &[vec![w1], vec![w2], in_set, vec![d], vec![c], out_set],
        ));
    }
    // G2: 2 copies of c > U > d > w1 > w2
    groups.push(GroupSpan { name: "G2".into(), start: t, len: 2 });
    for _ in 0..2 {
        prefs.push(complete_from_blocks(
            m,
            &[vec![c], universe.clone(), vec![d], vec![w1], vec![w2]],
        ));
    }

    let n = prefs.len();
    let mut limits = PairLimits::new();
    for z in (0..q).chain([w1, w2]) {
        limits.set(d, z, n)?;
    }
    limits.set(d, c, n - inst.ell)?;

    let rule = RuleFamily::Maximin.materialize(m)?;
    let profile = Profile::new(m, prefs)?;
    let instance = MecplInstance { rule, profile, target: c, limits };

    let mut bookkeeping = Bookkeeping {
        alternative_names: names.clone(),
        groups,
        frequencies: inst.frequencies(),
        padding: None,
        params: BTreeMap::new(),
        notes: vec![NOTE_G2_U_CHAIN.into()],
    };
    bookkeeping.param("q", q);
    bookkeeping.param("t", t);
    bookkeeping.param("ell", inst.ell);
    bookkeeping.param("n", n);
    bookkeeping.param("m", m);

    Ok(ReductionOutput {
        kind: ReductionKind::Maximin,
        instance,
        alternative_names: names,
        source_scft: Some(inst.clone()),
        source_x3c: None,
        bookkeeping,
    })
}

pub(crate) fn witness(
    output: &ReductionOutput,
    cover: &[usize],
) -> Result<PartialProfile, ReductionError> {
    let lay = layout(output);
    let (q, t, c, w1, w2, d) = (lay.q, lay.t, lay.c, lay.w1, lay.w2, lay.d);
    let src = output.source_scft.as_ref().expect("scft source");
    let m = output.m();
    let universe: Vec<AltId> = ids(0..q);

    let mut orders = Vec::with_capacity(t + 2);
    for i in 0..t {
        let mut top = src.sets[i].clone();
        top.extend([w1, w2]);
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !src.sets[i].contains(e)).collect();
        let order = if cover.contains(&i) {
            // ({w1, w2} + S_i > d > U \ S_i) plus (c > U \ S_i)
            block_union(
                m,
                &[
                    vec![top, vec![d], out_set.clone()],
                    vec![vec![c], out_set],
                ],
            )
        } else {
            blocks(m, &[top, vec![d], vec![c], out_set])
        };
        orders.push(order);
    }
    // G2: c > U > d > {w1, w2}; U keeps its chain, the w pair is freed.
    let mut g2_chain: Vec<Vec<AltId>> = vec![vec![c]];
    for &u in &universe {
        g2_chain.push(vec![u]);
    }
    g2_chain.push(vec![d]);
    g2_chain.push(vec![w1, w2]);
    for _ in 0..2 {
        orders.push(blocks(m, &g2_chain));
    }

    Ok(PartialProfile::new(m, orders)?)
}

pub(crate) fn table(output: &ReductionOutput) -> Vec<TableRow> {
    let lay = layout(output);
    let t = lay.t as i64;
    let mut rows = vec![TableRow {
        class: "c".into(),
        alternative: lay.c,
        expected: Some(Expectation::Exact(t - 2)),
        competing: vec![lay.w1, lay.w2],
    }];
    for a in 0..lay.q {
        rows.push(TableRow {
            class: format!("a_{}", a + 1),
            alternative: a,
            expected: Some(Expectation::Exact(t - 1)),
            competing: vec![lay.w1, lay.w2],
        });
    }
    rows.push(TableRow {
        class: "w1".into(),
        alternative: lay.w1,
        expected: Some(Expectation::Exact(t)),
        competing: vec![lay.w2],
    });
    rows.push(TableRow {
        class: "w2".into(),
        alternative: lay.w2,
        expected: Some(Expectation::Exact(t)),
        competing: vec![lay.w1],
    });
    rows.push(TableRow {
        class: "d".into(),
        alternative: lay.d,
        expected: Some(Expectation::Exact(t)),
        competing: vec![lay.w1, lay.w2],
    });
    rows
}
