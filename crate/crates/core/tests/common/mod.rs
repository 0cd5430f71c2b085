//! Shared fixtures: small source instances satisfying each construction's
//! side conditions, with known covers.

#![allow(dead_code)]

use mrvote_core::reductions::{ScftInstance, X3cInstance};

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// q = 6, t = 8, every frequency 4 (< t - q/2 = 5): no padding needed.
/// Exact cover: {0, 1}.
pub fn x3c_q6_t8() -> X3cInstance {
    X3cInstance::new(
        names("u", 6),
        vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![0, 1, 3],
            vec![2, 4, 5],
            vec![0, 2, 4],
            vec![1, 3, 5],
            vec![0, 3, 5],
            vec![1, 2, 4],
        ],
    )
    .unwrap()
}

/// q = 6, t = 9 (odd, for the veto construction), frequencies 5,5,5,4,4,4.
/// Exact cover: {0, 1}.
pub fn x3c_q6_t9() -> X3cInstance {
    X3cInstance::new(
        names("u", 6),
        vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![0, 1, 3],
            vec![0, 2, 4],
            vec![1, 2, 5],
            vec![0, 1, 4],
            vec![0, 2, 5],
            vec![1, 2, 3],
            vec![3, 4, 5],
        ],
    )
    .unwrap()
}

/// q = 9, t = 9, every frequency 3: triggers the divisibility padding
/// (q becomes 12, t becomes 10). Exact cover after padding: {0, 1, 2, 9}.
pub fn x3c_q9_t9() -> X3cInstance {
    X3cInstance::new(
        names("u", 9),
        vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![6, 7, 8],
            vec![0, 3, 6],
            vec![1, 4, 7],
            vec![2, 5, 8],
            vec![0, 4, 8],
            vec![1, 5, 6],
            vec![2, 3, 7],
        ],
    )
    .unwrap()
}

/// The criterion fixture: U = {u1, u2}, S1 = S2 = {u1, u2}, ell = 1.
pub fn scft_q2_t2() -> ScftInstance {
    ScftInstance::new(names("u", 2), vec![vec![0, 1], vec![0, 1]], 1).unwrap()
}

/// q = 2, t = 4 with singleton sets, ell = 2; cover {0, 2}.
pub fn scft_q2_t4() -> ScftInstance {
    ScftInstance::new(names("u", 2), vec![vec![0], vec![0], vec![1], vec![1]], 2).unwrap()
}

/// q = 4, t = 4, pair sets, ell = 2; cover {0, 1}.
pub fn scft_q4_t4() -> ScftInstance {
    ScftInstance::new(
        names("u", 4),
        vec![vec![0, 1], vec![2, 3], vec![0, 1], vec![2, 3]],
        2,
    )
    .unwrap()
}
