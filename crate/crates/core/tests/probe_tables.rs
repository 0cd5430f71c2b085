//! Scratch probe for the forward-verification tables. Prints every class
//! row so expected-versus-computed can be inspected with --nocapture.

mod common;

use mrvote_core::reductions as red;
use mrvote_core::regret::RegretBudget;

fn probe(output: &red::ReductionOutput, cover: &[usize]) {
    let budget = RegretBudget::default();
    let report = red::verify_forward(output, cover, &budget).unwrap();
    println!(
        "== {} (m={}, n={}) completion={} limits={} winner={} alpha={:?}",
        output.kind,
        output.m(),
        output.n(),
        report.completion_ok,
        report.limits_ok,
        report.winner_ok,
        report.alpha_consistent,
    );
    for row in &report.rows {
        println!(
            "   {:>5} ({}): expected {:?} computed {} match={} competing_ok={}",
            row.class,
            row.name,
            row.expected.map(|e| e.to_string()),
            row.computed,
            row.value_matches,
            row.competing_valid
        );
    }
    if let Some(mr) = &report.mr {
        let winners: Vec<&str> = mr
            .winner_set
            .iter()
            .map(|&a| output.alternative_names[a].as_str())
            .collect();
        println!("   winner set: {winners:?}");
    }
}

#[test]
fn probe_maximin_q2_t2() {
    let output = red::reduce_scft(red::ReductionKind::Maximin, &common::scft_q2_t2()).unwrap();
    probe(&output, &[0]);
}

#[test]
fn probe_maximin_q4_t4() {
    let output = red::reduce_scft(red::ReductionKind::Maximin, &common::scft_q4_t4()).unwrap();
    probe(&output, &[0, 1]);
}

#[test]
fn probe_copeland_q2_t4() {
    let output = red::reduce_scft(red::ReductionKind::Copeland, &common::scft_q2_t4()).unwrap();
    probe(&output, &[0, 2]);
}

#[test]
fn probe_bucklin_q2_t4() {
    let output = red::reduce_scft(red::ReductionKind::Bucklin, &common::scft_q2_t4()).unwrap();
    probe(&output, &[0, 2]);
}

#[test]
fn probe_plurality_q6_t8() {
    let output =
        red::pad_and_reduce_x3c(red::ReductionKind::Plurality, &common::x3c_q6_t8()).unwrap();
    probe(&output, &[0, 1]);
}

#[test]
fn probe_veto_q6_t9() {
    let output = red::pad_and_reduce_x3c(red::ReductionKind::KVeto(1), &common::x3c_q6_t9())
        .unwrap();
    probe(&output, &[0, 1]);
}
