//! X3C to MECPL for the k-veto rule. Six preference groups; every pair
//! involving d is forced comparable in every preference. For k > 1, k-1
//! dummies sit at the bottom of every preference.

use super::*;
use crate::mecpl::PairLimits;
use crate::rules::RuleFamily;

const NOTE_GROUP_SWAP: &str = "the witness lists the two 10t-copy groups in swapped order \
     relative to the instance; groups are matched by content";
const NOTE_DUMMY_LIMITS: &str =
    "the {d, z} = n limits extend to the k-veto dummies; witnesses pin dummies at the bottom";

pub(crate) struct Layout {
    pub q: usize,
    pub t: usize,
    pub c: AltId,
    pub x: AltId,
    pub d: AltId,
    pub w1: AltId,
    pub w2: AltId,
}

pub(crate) fn layout(output: &ReductionOutput) -> Layout {
    let src = output.source_x3c.as_ref().expect("x3c source");
    let q = src.q();
    Layout { q, t: src.t(), c: q, x: q + 1, d: q + 2, w1: q + 3, w2: q + 4 }
}

pub fn reduce_kveto(inst: &X3cInstance, k: usize) -> Result<ReductionOutput, ReductionError> {
    let q = inst.q();
    let t = inst.t();
    if k == 0 {
        return Err(ReductionError::SideCondition("k-veto needs k >= 1".into()));
    }
    if q % 6 != 0 {
        return Err(ReductionError::SideCondition(format!(
            "q = {q} is not divisible by 6 (pad first)"
        )));
    }
    if t % 2 == 0 {
        return Err(ReductionError::SideCondition(format!(
            "t = {t} must be odd (pad first)"
        )));
    }
    let freq = inst.frequencies();
    for (i, &f) in freq.iter().enumerate() {
        if 2 * f as i64 >= 2 * t as i64 - q as i64 {
            return Err(ReductionError::SideCondition(format!(
                "element {i} has frequency {f}, bound requires f < t - q/2 (pad first)"
            )));
        }
    }

    let base_m = q + 5;
    let m = base_m + (k - 1);
    let (c, x, d, w1, w2) = (q, q + 1, q + 2, q + 3, q + 4);
    let mut names: Vec<String> = inst.universe.clone();
    names.extend(["c".into(), "x".into(), "d".into(), "w1".into(), "w2".into()]);
    names.extend((1..k).map(|i| format!("dummy{i}")));

    let universe: Vec<AltId> = ids(0..q);
    let base: Vec<AltId> = ids(0..base_m);
    let without = |drop: &[AltId]| -> Vec<AltId> {
        base.iter().copied().filter(|z| !drop.contains(z)).collect()
    };
    let dummies: Vec<AltId> = ids(base_m..m);
    let with_dummies = |mut chain: Vec<Vec<AltId>>| -> LinearOrder {
        for &dm in &dummies {
            chain.push(vec![dm]);
        }
        complete_from_blocks(m, &chain)
    };

    let mut prefs: Vec<LinearOrder> = Vec::new();
    let mut groups = Vec::new();
    let mut mark = |name: &str, start: usize, len: usize, groups: &mut Vec<GroupSpan>| {
        groups.push(GroupSpan { name: name.into(), start, len });
    };

    // G1: (U \ S_i) > w1 > w2 > d > c > S_i > x
    mark("G1", prefs.len(), t, &mut groups);
    for i in 0..t {
        let in_set = inst.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        prefs.push(with_dummies(vec![
            out_set,
            vec![w1],
            vec![w2],
            vec![d],
            vec![c],
            in_set,
            vec![x],
        ]));
    }
    // G2: (t-1)/2 + q/6 copies of (A \ {c, d}) > d > c
    let g2 = (t - 1) / 2 + q / 6;
    mark("G2", prefs.len(), g2, &mut groups);
    for _ in 0..g2 {
        prefs.push(with_dummies(vec![without(&[c, d]), vec![d], vec![c]]));
    }
    // G3: per element j, (t+1)/2 + q/6 + 1 - f_j copies of (A \ {a_j, d}) > d > a_j
    let g3_start = prefs.len();
    let mut g3 = 0;
    for (j, &f) in freq.iter().enumerate() {
        let copies = (t + 1) / 2 + q / 6 + 1 - f;
        g3 += copies;
        for _ in 0..copies {
            prefs.push(with_dummies(vec![without(&[j, d]), vec![d], vec![j]]));
        }
    }
    mark("G3", g3_start, g3, &mut groups);
    // G4: 10t copies of (A \ {d}) > d
    mark("G4", prefs.len(), 10 * t, &mut groups);
    for _ in 0..10 * t {
        prefs.push(with_dummies(vec![without(&[d]), vec![d]]));
    }
    // G5: 10t copies of (A \ {d, w1, w2}) > d > w1 > w2
    mark("G5", prefs.len(), 10 * t, &mut groups);
    for _ in 0..10 * t {
        prefs.push(with_dummies(vec![without(&[d, w1, w2]), vec![d], vec![w1], vec![w2]]));
    }
    // G6: per w_i, q/3 copies of (A \ {w_i, d}) > d > w_i
    mark("G6", prefs.len(), 2 * (q / 3), &mut groups);
    for wi in [w1, w2] {
        for _ in 0..q / 3 {
            prefs.push(with_dummies(vec![without(&[wi, d]), vec![d], vec![wi]]));
        }
    }

    let n = prefs.len();
    let mut limits = PairLimits::new();
    for z in 0..m {
        if z != d {
            limits.set(d, z, n)?;
        }
    }

    let rule = RuleFamily::Veto(k).materialize(m)?;
    let profile = Profile::new(m, prefs)?;
    let instance = MecplInstance { rule, profile, target: c, limits };

    let mut bookkeeping = Bookkeeping {
        alternative_names: names.clone(),
        groups,
        frequencies: freq,
        padding: None,
        params: BTreeMap::new(),
        notes: vec![NOTE_GROUP_SWAP.into()],
    };
    if k > 1 {
        bookkeeping.notes.push(NOTE_DUMMY_LIMITS.into());
    }
    bookkeeping.param("q", q);
    bookkeeping.param("t", t);
    bookkeeping.param("n", n);
    bookkeeping.param("m", m);
    bookkeeping.param("k", k);
    bookkeeping.param("cover_size", q / 3);

    Ok(ReductionOutput {
        kind: ReductionKind::KVeto(k),
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
) -> Result<PartialProfile, ReductionError> {
    let lay = layout(output);
    let (q, t, c, x, d, w1, w2) = (lay.q, lay.t, lay.c, lay.x, lay.d, lay.w1, lay.w2);
    let src = output.source_x3c.as_ref().expect("x3c source");
    let m = output.m();
    let base_m = q + 5;
    let universe: Vec<AltId> = ids(0..q);
    let base: Vec<AltId> = ids(0..base_m);
    let without = |drop: &[AltId]| -> Vec<AltId> {
        base.iter().copied().filter(|z| !drop.contains(z)).collect()
    };
    let freq = src.frequencies();

    // Dummies sit below every base alternative, chained among themselves.
    let dummy_pins = |order: PartialOrder| -> PartialOrder {
        if m == base_m {
            return order;
        }
        let mut chain: Vec<Vec<AltId>> = vec![base.clone()];
        for dm in base_m..m {
            chain.push(vec![dm]);
        }
        order.union(&blocks(m, &chain)).expect("dummy pins are consistent")
    };

    let mut orders: Vec<PartialOrder> = Vec::new();
    for i in 0..t {
        let in_set = src.sets[i].clone();
        let out_set: Vec<AltId> =
            universe.iter().copied().filter(|e| !in_set.contains(e)).collect();
        let chain = if cover.contains(&i) {
            vec![out_set, vec![w1], vec![w2], vec![d], vec![c], in_set, vec![x]]
        } else {
            let mut bottom = in_set;
            bottom.push(x);
            vec![out_set, vec![w1], vec![w2], vec![d], vec![c], bottom]
        };
        orders.push(dummy_pins(blocks(m, &chain)));
    }
    for _ in 0..(t - 1) / 2 + q / 6 {
        orders.push(dummy_pins(blocks(m, &[without(&[c, d]), vec![d], vec![c]])));
    }
    for (j, &f) in freq.iter().enumerate() {
        for _ in 0..(t + 1) / 2 + q / 6 + 1 - f {
            orders.push(dummy_pins(blocks(m, &[without(&[j, d]), vec![d], vec![j]])));
        }
    }
    // G4 content (A \ {d}) > d keeps d at the bottom as a block.
    for _ in 0..10 * t {
        orders.push(dummy_pins(blocks(m, &[without(&[d]), vec![d]])));
    }
    // G5 content (A \ {d, w1, w2}) > d > {w1, w2}: the w pair is freed.
    for _ in 0..10 * t {
        orders.push(dummy_pins(blocks(m, &[without(&[d, w1, w2]), vec![d], vec![w1, w2]])));
    }
    for wi in [w1, w2] {
        for _ in 0..q / 3 {
            orders.push(dummy_pins(blocks(m, &[without(&[wi, d]), vec![d], vec![wi]])));
        }
    }

    Ok(PartialProfile::new(m, orders)?)
}

pub(crate) fn table(output: &ReductionOutput) -> Vec<TableRow> {
    let lay = layout(output);
    let (q, t) = (lay.q as i64, lay.t as i64);
    let mut rows = vec![
        TableRow {
            class: "c".into(),
            alternative: lay.c,
            expected: Some(Expectation::Exact((t - 1) / 2 - q / 6)),
            competing: vec![lay.x, lay.w1, lay.w2],
        },
        TableRow {
            class: "x".into(),
            alternative: lay.x,
            expected: Some(Expectation::Exact((t + 1) / 2 - q / 6)),
            competing: vec![lay.c],
        },
    ];
    for a in 0..lay.q {
        rows.push(TableRow {
            class: format!("a_{}", a + 1),
            alternative: a,
            expected: Some(Expectation::Exact((t + 1) / 2 - q / 6)),
            competing: vec![lay.x, lay.w1, lay.w2],
        });
    }
    rows.push(TableRow {
        class: "d".into(),
        alternative: lay.d,
        expected: Some(Expectation::AtLeast(5 * t)),
        competing: vec![lay.x, lay.w1, lay.w2],
    });
    rows.push(TableRow {
        class: "w1".into(),
        alternative: lay.w1,
        expected: Some(Expectation::AtLeast(5 * t)),
        competing: vec![lay.w2],
    });
    rows.push(TableRow {
        class: "w2".into(),
        alternative: lay.w2,
        expected: Some(Expectation::AtLeast(5 * t)),
        competing: vec![lay.w1],
    });
    rows
}
