//! SCFT to MECPL for simplified Bucklin: q filler alternatives w_1..w_q,
//! with the first q-2 chained at the top of the set preferences and the last
//! two pinned at their bottom.

use super::*;
use crate::mecpl::PairLimits;
use crate::rules::RuleFamily;

pub(crate) struct Layout {
    pub q: usize,
    pub t: usize,
    pub ell: usize,
    pub c: AltId,
    pub d: AltId,
    /// w_j is `w_start + j - 1`.
    pub w_start: AltId,
}

impl Layout {
    pub fn w(&self, j: usize) -> AltId {
        self.w_start + j - 1
    }
}

pub(crate) fn layout(output: &ReductionOutput) -> Layout {
    let src = output.source_scft.as_ref().expect("scft source");
    let q = src.q();
    Layout { q, t: src.t(), ell: src.ell, c: q, d: q + 1, w_start: q + 2 }
}

pub fn reduce_bucklin(inst: &ScftInstance) -> Result<ReductionOutput, ReductionError> {
    let q = inst.q();
    let t = inst.t();
    if q < 2 {
        return Err(ReductionError::SideCondition(format!(
            "Bucklin construction needs q >= 2 fillers, got q = {q}"
        )));
    }
    let m = 2 * q + 2;
    let (c, d) = (q, q + 1);
    let w = |j: usize| q + 1 + j; // w_1 = q+2, ..., w_q = 2q+1
    let mut names: Vec<String> = inst.universe.clone();
    names.extend(["c".into(), "d".into()]);
    names.extend((1..=q).map(|j| format!("w{j}")));

    let universe: Vec<AltId> = ids(0..q);
    let w_all: Vec<AltId> = (1..=q).map(w).collect();
    let mut prefs = Vec::with_capacity(2 * t + 1);
    let mut groups = Vec::new();
    // G1: w1 > ... > w_{q-2} > S_i > d > c > (U \ S_i) > w_{q-1} > w_q
    groups.push(GroupSpan { name: "G1".into(), start: 0, len: t });
    for i in 0..t {
        let in_set = inst.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        let mut chain: Vec<Vec<AltId>> = (1..=q - 2).map(|j| vec![w(j)]).collect();
        chain.push(in_set);
        chain.push(vec![d]);
        chain.push(vec![c]);
        chain.push(out_set);
        chain.push(vec![w(q - 1)]);
        chain.push(vec![w(q)]);
        prefs.push(complete_from_blocks(m, &chain));
    }
    // G2: t - 1 copies of U > c > d > W
    groups.push(GroupSpan { name: "G2".into(), start: t, len: t - 1 });
    for _ in 0..t - 1 {
        prefs.push(complete_from_blocks(
            m,
            &[universe.clone(), vec![c], vec![d], w_all.clone()],
        ));
    }
    // G3: 2 copies of w1 > ... > w_q > c > d > U
    groups.push(GroupSpan { name: "G3".into(), start: 2 * t - 1, len: 2 });
    for _ in 0..2 {
        let mut chain: Vec<Vec<AltId>> = (1..=q).map(|j| vec![w(j)]).collect();
        chain.push(vec![c]);
        chain.push(vec![d]);
        chain.push(universe.clone());
        prefs.push(complete_from_blocks(m, &chain));
    }

    let n = prefs.len();
    debug_assert_eq!(n, 2 * t + 1);
    let mut limits = PairLimits::new();
    for z in (0..q).chain([w(q - 1), w(q)]) {
        limits.set(d, z, n)?;
    }
    limits.set(d, c, n - inst.ell)?;

    let rule = RuleFamily::SimplifiedBucklin.materialize(m)?;
    let profile = Profile::new(m, prefs)?;
    let instance = MecplInstance { rule, profile, target: c, limits };

    let mut bookkeeping = Bookkeeping {
        alternative_names: names.clone(),
        groups,
        frequencies: inst.frequencies(),
        padding: None,
        params: BTreeMap::new(),
        notes: Vec::new(),
    };
    bookkeeping.param("q", q);
    bookkeeping.param("t", t);
    bookkeeping.param("ell", inst.ell);
    bookkeeping.param("n", n);
    bookkeeping.param("m", m);

    Ok(ReductionOutput {
        kind: ReductionKind::Bucklin,
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
    let (q, t, c, d) = (lay.q, lay.t, lay.c, lay.d);
    let src = output.source_scft.as_ref().expect("scft source");
    let m = output.m();
    let universe: Vec<AltId> = ids(0..q);
    let w = |j: usize| lay.w(j);
    let w_all: Vec<AltId> = (1..=q).map(w).collect();

    let mut orders = Vec::with_capacity(output.n());
    for i in 0..t {
        let in_set = src.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        let order = if cover.contains(&i) {
            // (S_i > d > (U \ S_i) > w_{q-1} > w_q) plus
            // (c > (U \ S_i) > w_{q-1} > w_q); w_1..w_{q-2} stay free.
            block_union(
                m,
                &[
                    vec![in_set, vec![d], out_set.clone(), vec![w(q - 1)], vec![w(q)]],
                    vec![vec![c], out_set, vec![w(q - 1)], vec![w(q)]],
                ],
            )
        } else {
            blocks(
                m,
                &[in_set, vec![d], vec![c], out_set, vec![w(q - 1)], vec![w(q)]],
            )
        };
        orders.push(order);
    }
    // G2: U > c > d > W, blocks as written.
    for _ in 0..t - 1 {
        orders.push(blocks(m, &[universe.clone(), vec![c], vec![d], w_all.clone()]));
    }
    // G3: w_{q-1} > w_q > c > d > U; the w-prefix w_1..w_{q-2} is freed.
    for _ in 0..2 {
        orders.push(blocks(
            m,
            &[vec![w(q - 1)], vec![w(q)], vec![c], vec![d], universe.clone()],
        ));
    }

    Ok(PartialProfile::new(m, orders)?)
}

pub(crate) fn table(output: &ReductionOutput) -> Vec<TableRow> {
    let lay = layout(output);
    let q = lay.q as i64;
    let mut rows = vec![TableRow {
        class: "c".into(),
        alternative: lay.c,
        expected: Some(Expectation::Exact(q)),
        competing: vec![lay.w(1)],
    }];
    for a in 0..lay.q {
        rows.push(TableRow {
            class: format!("a_{}", a + 1),
            alternative: a,
            expected: Some(Expectation::Exact(q + 1)),
            competing: vec![lay.w(1)],
        });
    }
    rows.push(TableRow {
        class: "d".into(),
        alternative: lay.d,
        expected: Some(Expectation::Exact(q + 1)),
        competing: vec![lay.w(1)],
    });
    rows.push(TableRow {
        class: "w1".into(),
        alternative: lay.w(1),
        expected: Some(Expectation::Exact(2 * q + 1)),
        competing: vec![lay.w(2)],
    });
    for j in 2..=lay.q {
        rows.push(TableRow {
            class: format!("w{j}"),
            alternative: lay.w(j),
            expected: Some(Expectation::Exact(2 * q + 1)),
            competing: vec![lay.w(1)],
        });
    }
    rows
}
