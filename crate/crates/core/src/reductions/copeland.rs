//! SCFT to MECPL for Copeland^alpha. The construction makes n odd, so the
//! tie parameter alpha never matters; the generated instance carries
//! alpha = 1/2 and the forward verifier re-checks under 0, 1/2 and 1.
//!
//! The printed witness for this construction drops comparabilities its own
//! limit function requires (the G2 witness line keeps only c's pairs, and
//! the non-cover G1 line omits c entirely). Both are repaired minimally with
//! pairs of the underlying complete preferences; the repairs are listed in
//! the bookkeeping notes and reproduce the claimed regret table.

use super::*;
use crate::mecpl::PairLimits;
use crate::rules::RuleFamily;
use num_rational::Ratio;

const NOTE_NONCOVER_C: &str = "non-cover G1 witness restores c between d and x; as printed, \
     d and c would be comparable in fewer than n - ell preferences";
const NOTE_G2_REPAIR: &str = "G2 witness keeps U > d, y > d and x > d in addition to the \
     printed c > {x, d, w1, w2}; without them the limits on {d, a_i}, {d, y} and {d, x} fail";

pub(crate) struct Layout {
    pub q: usize,
    pub t: usize,
    pub ell: usize,
    pub c: AltId,
    pub x: AltId,
    pub y: AltId,
    pub d: AltId,
    pub w1: AltId,
    pub w2: AltId,
}

pub(crate) fn layout(output: &ReductionOutput) -> Layout {
    let src = output.source_scft.as_ref().expect("scft source");
    let q = src.q();
    Layout {
        q,
        t: src.t(),
        ell: src.ell,
        c: q,
        x: q + 1,
        y: q + 2,
        d: q + 3,
        w1: q + 4,
        w2: q + 5,
    }
}

pub fn reduce_copeland(inst: &ScftInstance) -> Result<ReductionOutput, ReductionError> {
    let q = inst.q();
    let t = inst.t();
    if t < 4 {
        return Err(ReductionError::SideCondition(format!(
            "Copeland construction needs t >= 4 so the second group is nonempty, got t = {t}"
        )));
    }
    let m = q + 6;
    let (c, x, y, d, w1, w2) = (q, q + 1, q + 2, q + 3, q + 4, q + 5);
    let mut names: Vec<String> = inst.universe.clone();
    names.extend(["c".into(), "x".into(), "y".into(), "d".into(), "w1".into(), "w2".into()]);

    let universe: Vec<AltId> = ids(0..q);
    let mut prefs = Vec::with_capacity(2 * t - 3);
    let mut groups = Vec::new();
    // G1: w1 > w2 > S_i > d > c > x > y > (U \ S_i)
    groups.push(GroupSpan { name: "G1".into(), start: 0, len: t });
    for i in 0..t {
        let in_set = inst.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        prefs.push(complete_from_blocks(
            m,
            &[vec![w1], vec![w2], in_set, vec![d], vec![c], vec![x], vec![y], out_set],
        ));
    }
    // G2: t - 3 copies of U > c > x > y > d > w1 > w2
    groups.push(GroupSpan { name: "G2".into(), start: t, len: t - 3 });
    for _ in 0..t - 3 {
        prefs.push(complete_from_blocks(
            m,
            &[universe.clone(), vec![c], vec![x], vec![y], vec![d], vec![w1], vec![w2]],
        ));
    }

    let n = prefs.len();
    debug_assert_eq!(n, 2 * t - 3);
    debug_assert_eq!(n % 2, 1, "odd preference count makes alpha irrelevant");
    let mut limits = PairLimits::new();
    for z in (0..q).chain([y]) {
        limits.set(d, z, n)?;
    }
    limits.set(d, c, n - inst.ell)?;
    limits.set(d, x, n - inst.ell)?;

    let rule = RuleFamily::Copeland(Ratio::new(1, 2)).materialize(m)?;
    let profile = Profile::new(m, prefs)?;
    let instance = MecplInstance { rule, profile, target: c, limits };

    let mut bookkeeping = Bookkeeping {
        alternative_names: names.clone(),
        groups,
        frequencies: inst.frequencies(),
        padding: None,
        params: BTreeMap::new(),
        notes: vec![NOTE_NONCOVER_C.into(), NOTE_G2_REPAIR.into()],
    };
    bookkeeping.param("q", q);
    bookkeeping.param("t", t);
    bookkeeping.param("ell", inst.ell);
    bookkeeping.param("n", n);
    bookkeeping.param("m", m);

    Ok(ReductionOutput {
        kind: ReductionKind::Copeland,
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
    let (q, t) = (lay.q, lay.t);
    let (c, x, y, d, w1, w2) = (lay.c, lay.x, lay.y, lay.d, lay.w1, lay.w2);
    let src = output.source_scft.as_ref().expect("scft source");
    let m = output.m();
    let universe: Vec<AltId> = ids(0..q);

    let mut orders = Vec::with_capacity(output.n());
    for i in 0..t {
        let in_set = src.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        let order = if cover.contains(&i) {
            // (S_i > d > y > U \ S_i) plus (c > {x, y} + U \ S_i); w1, w2
            // and the d-c, d-x pairs stay free.
            let mut c_below = vec![x, y];
            c_below.extend(out_set.iter().copied());
            block_union(
                m,
                &[
                    vec![in_set, vec![d], vec![y], out_set.clone()],
                    vec![vec![c], c_below],
                ],
            )
        } else {
            blocks(m, &[in_set, vec![d], vec![c], vec![x], vec![y], out_set])
        };
        orders.push(order);
    }
    // G2 witness: c > {x, d, w1, w2}, plus the d-row pairs of the complete
    // preference (U > d, y > d, x > d) required by the limits.
    let mut g2_pairs: Vec<(AltId, AltId)> = vec![(c, x), (c, d), (c, w1), (c, w2)];
    for &u in &universe {
        g2_pairs.push((u, d));
    }
    g2_pairs.push((y, d));
    g2_pairs.push((x, d));
    let g2 = PartialOrder::from_pairs(m, &g2_pairs)?;
    for _ in 0..t - 3 {
        orders.push(g2.clone());
    }

    Ok(PartialProfile::new(m, orders)?)
}

pub(crate) fn table(output: &ReductionOutput) -> Vec<TableRow> {
    let lay = layout(output);
    let m = output.m() as i64;
    let mut rows = vec![TableRow {
        class: "c".into(),
        alternative: lay.c,
        expected: Some(Expectation::Exact(m - 3)),
        competing: vec![lay.w1, lay.w2],
    }];
    for a in 0..lay.q {
        rows.push(TableRow {
            class: format!("a_{}", a + 1),
            alternative: a,
            expected: Some(Expectation::Exact(m - 2)),
            competing: vec![lay.w1, lay.w2],
        });
    }
    rows.push(TableRow {
        class: "d".into(),
        alternative: lay.d,
        expected: Some(Expectation::Exact(m - 2)),
        competing: vec![lay.w1, lay.w2],
    });
    rows.push(TableRow {
        class: "w1".into(),
        alternative: lay.w1,
        expected: Some(Expectation::Exact(m - 1)),
        competing: vec![lay.w2],
    });
    rows.push(TableRow {
        class: "w2".into(),
        alternative: lay.w2,
        expected: Some(Expectation::Exact(m - 1)),
        competing: vec![lay.w1],
    });
    rows
}
