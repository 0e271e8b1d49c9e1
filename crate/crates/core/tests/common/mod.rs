//! Shared helpers for the integration suites: slow-but-obviously-correct
//! oracles that are independent of the library's Bareiss/LDL code paths, and
//! the acceptance-line runner.

// Each integration test binary compiles this module separately and not all of
// them use every helper.
#![allow(dead_code)]

use num_traits::Zero;
use totpos::exactmat::{ExactMatrix, Rat};

/// Determinant by recursive cofactor expansion along the first row.
/// Exponential, but has no shared code with the Bareiss implementation.
pub fn cofactor_det(m: &ExactMatrix) -> Rat {
    let n = m.rows();
    assert_eq!(n, m.cols(), "cofactor oracle needs a square matrix");
    if n == 0 {
        return Rat::from_integer(1.into());
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = m.get(0, j).clone() * cofactor_det(&m.submatrix(&rows, &cols));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// LDL by plain symmetric Gaussian elimination, written independently of the
/// library routine. Returns `None` on a zero pivot.
pub fn ldl_oracle(m: &ExactMatrix) -> Option<(Vec<Vec<Rat>>, Vec<Rat>)> {
    let n = m.rows();
    assert!(m.is_symmetric(), "LDL oracle needs a symmetric matrix");
    let mut l = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    for j in 0..n {
        let mut pivot = m.get(j, j).clone();
        for p in 0..j {
            pivot -= l[j][p].clone() * l[j][p].clone() * d[p].clone();
        }
        if pivot.is_zero() {
            return None;
        }
        d[j] = pivot;
        l[j][j] = Rat::from_integer(1.into());
        for i in (j + 1)..n {
            let mut v = m.get(i, j).clone();
            for p in 0..j {
                v -= l[i][p].clone() * l[j][p].clone() * d[p].clone();
            }
            l[i][j] = v / d[j].clone();
        }
    }
    Some((l, d))
}

/// Runs one acceptance criterion and prints a single pass/fail line
/// (visible with `--nocapture`); a failure still fails the test.
pub fn criterion<F>(number: usize, description: &str, body: F)
where
    F: FnOnce() + std::panic::UnwindSafe,
{
    let outcome = std::panic::catch_unwind(body);
    let tag = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {number:2}: {tag} - {description}");
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
}
