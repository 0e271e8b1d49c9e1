//! Exact verification of closed-form identities and decompositions, and
//! explicit LDL factorizations of the square truncations.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{rat_to_string, ExactMatrix, Int, Rat};
use crate::families::{binomial, build_matrix, delannoy, MatrixFamilyId, MatrixShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityStatus {
    Verified,
    Counterexample,
}

/// Minimal-first counterexample of an identity check: the parameters and the
/// exact mismatching sides, rendered as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Counterexample {
    pub params: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity verification over a parameter range.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub checked_range: String,
    pub status: IdentityStatus,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    fn verified(id: &str, range: String) -> Self {
        IdentityReport {
            identity_id: id.into(),
            checked_range: range,
            status: IdentityStatus::Verified,
            counterexample: None,
        }
    }

    fn refuted(id: &str, range: String, ce: Counterexample) -> Self {
        IdentityReport {
            identity_id: id.into(),
            checked_range: range,
            status: IdentityStatus::Counterexample,
            counterexample: Some(ce),
        }
    }

    pub fn verified_ok(&self) -> bool {
        self.status == IdentityStatus::Verified
    }
}

fn int_ce(params: Vec<(String, String)>, lhs: &Int, rhs: &Int) -> Counterexample {
    Counterexample { params, lhs: lhs.to_string(), rhs: rhs.to_string() }
}

/// Checks the convolution `sum_i C(n,i) C(k,i) = C(n+k,k)` exhaustively for
/// `n <= max_n`, `k <= max_k`.
pub fn verify_vandermonde(max_n: u64, max_k: u64) -> IdentityReport {
    let range = format!("n<={max_n}, k<={max_k}");
    for n in 0..=max_n {
        for k in 0..=max_k {
            let mut lhs = Int::zero();
            for i in 0..=n.min(k) {
                lhs += binomial(n, i as i64) * binomial(k, i as i64);
            }
            let rhs = binomial(n + k, k as i64);
            if lhs != rhs {
                return IdentityReport::refuted(
                    "vandermonde",
                    range,
                    int_ce(
                        vec![("n".into(), n.to_string()), ("k".into(), k.to_string())],
                        &lhs,
                        &rhs,
                    ),
                );
            }
        }
    }
    IdentityReport::verified("vandermonde", range)
}

fn first_mismatch(a: &ExactMatrix, b: &ExactMatrix) -> Option<Counterexample> {
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if a.get(r, c) != b.get(r, c) {
                return Some(Counterexample {
                    params: vec![("row".into(), r.to_string()), ("col".into(), c.to_string())],
                    lhs: rat_to_string(a.get(r, c)),
                    rhs: rat_to_string(b.get(r, c)),
                });
            }
        }
    }
    None
}

/// Checks `P P^T = P^square` entrywise at the given truncation order.
pub fn verify_pascal_decomp(order: usize) -> Result<IdentityReport> {
    let range = format!("order {order}");
    let p = build_matrix(MatrixFamilyId::Pascal, MatrixShape::Triangle, order)?;
    let square = build_matrix(MatrixFamilyId::Pascal, MatrixShape::Square, order)?;
    let product = p.mat_mul(&p.transpose())?;
    Ok(match first_mismatch(&product, &square) {
        None => IdentityReport::verified("pascal-decomp", range),
        Some(ce) => IdentityReport::refuted("pascal-decomp", range, ce),
    })
}

/// Checks `P diag(1, 2, 4, ...) P^T` against the Delannoy square truncation.
pub fn verify_delannoy_decomp(order: usize) -> Result<IdentityReport> {
    let range = format!("order {order}");
    let p = build_matrix(MatrixFamilyId::Pascal, MatrixShape::Triangle, order)?;
    let diag = ExactMatrix::from_int_fn(order, order, |r, c| {
        if r == c {
            Int::from(2u32).pow(r as u32)
        } else {
            Int::zero()
        }
    });
    let product = p.mat_mul(&diag)?.mat_mul(&p.transpose())?;
    let dsq = ExactMatrix::from_int_fn(order, order, |r, c| delannoy(r as u64, c as u64));
    Ok(match first_mismatch(&product, &dsq) {
        None => IdentityReport::verified("delannoy-decomp", range),
        Some(ce) => IdentityReport::refuted("delannoy-decomp", range, ce),
    })
}

/// Checks band-adjusted row symmetry of a triangle family by comparing the
/// plain and reversed truncations entrywise.
pub fn symmetry_report(family: MatrixFamilyId, size: usize) -> Result<IdentityReport> {
    let id = format!("symmetry({family})");
    let range = format!("size {size}");
    let plain = build_matrix(family, MatrixShape::Triangle, size)?;
    let reversed = build_matrix(family, MatrixShape::ReversedTriangle, size)?;
    Ok(match first_mismatch(&plain, &reversed) {
        None => IdentityReport::verified(&id, range),
        Some(ce) => IdentityReport::refuted(&id, range, ce),
    })
}

/// Exact LDL factorization of a square-shape truncation, with a
/// reconstruction check. The diagonal is returned for inspection; no closed
/// form is conjectured for it.
pub fn narayana_square_ldl(
    family: MatrixFamilyId,
    order: usize,
) -> Result<(ExactMatrix, Vec<Rat>, IdentityReport)> {
    let id = format!("square-ldl({family})");
    let range = format!("order {order}");
    let square = build_matrix(family, MatrixShape::Square, order)?;
    if !square.is_symmetric() {
        return Err(Error::Domain(format!(
            "square truncation of {family} is not symmetric; no factorization attempted"
        )));
    }
    let (l, d) = square.ldl()?;
    let diag = ExactMatrix::from_fn(order, order, |r, c| {
        if r == c {
            d[r].clone()
        } else {
            Rat::zero()
        }
    });
    let back = l.mat_mul(&diag)?.mat_mul(&l.transpose())?;
    let report = match first_mismatch(&back, &square) {
        None => IdentityReport::verified(&id, range),
        Some(ce) => IdentityReport::refuted(&id, range, ce),
    };
    Ok((l, d, report))
}
