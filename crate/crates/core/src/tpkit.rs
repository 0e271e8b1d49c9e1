//! Certification of total positivity, strict total positivity,
//! Polya-frequency and Stieltjes-moment properties on finite truncations.
//!
//! Brute-force minor enumeration is the oracle of record. Fekete's criterion
//! (solid minors) covers the strict case, and Neville elimination gives a fast
//! certificate for the nonstrict case; any ambiguity in the fast paths falls
//! back to brute force, so verdicts never depend on the delicate zero-pattern
//! cases of the elimination theory.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmat::{ExactMatrix, MinorSpec, Rat};
use crate::families::{sequence_term, SequenceFamilyId};

/// Minor-count guard for brute-force enumeration.
const BRUTE_MINOR_BUDGET: u128 = 10_000_000;
/// Matrix orders up to this bound may silently fall back from Neville
/// elimination to brute force when the certificate is inconclusive.
const NEVILLE_FALLBACK_ORDER: usize = 8;

/// Environment variable holding the parallel worker count; absence or a value
/// of one means single-threaded evaluation.
pub const WORKERS_ENV: &str = "TOTPOS_WORKERS";

fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TpProperty {
    Tp,
    Stp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    Brute,
    FeketeSolid,
    Neville,
}

impl CheckMethod {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Self::Brute),
            "fekete" | "fekete-solid" => Ok(Self::FeketeSolid),
            "neville" => Ok(Self::Neville),
            _ => Err(Error::Param(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Holds,
    Fails,
}

/// Failing minor: canonical-minimal row/column sets and the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub spec: MinorSpec,
    pub value: Rat,
}

/// Outcome of a TP/STP check on a finite matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPVerdict {
    pub property: TpProperty,
    pub status: CheckStatus,
    /// Method that actually produced the verdict (a Neville request that fell
    /// back to enumeration reports `Brute`).
    pub method: CheckMethod,
    /// Largest minor order actually checked.
    pub max_minor_order: usize,
    pub witness: Option<Witness>,
}

impl TPVerdict {
    pub fn holds(&self) -> bool {
        self.status == CheckStatus::Holds
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeqProperty {
    PfTruncated,
    SmTruncated,
}

/// Failing minor of a sequence-matrix check; `offset` identifies which Hankel
/// truncation (0 or 1) produced it, and is always 0 for Toeplitz checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqWitness {
    pub offset: usize,
    pub spec: MinorSpec,
    pub value: Rat,
}

/// Outcome of a sequence property check, scoped to the stated truncation
/// order; no claim is made about the infinite sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqVerdict {
    pub property: SeqProperty,
    pub order: usize,
    pub status: CheckStatus,
    pub witness: Option<SeqWitness>,
}

impl SeqVerdict {
    pub fn holds(&self) -> bool {
        self.status == CheckStatus::Holds
    }
}

/// A sequence: a library family or a shift/Hadamard derivation thereof.
/// Derived sequences are first-class inputs to every check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sequence {
    Family(SequenceFamilyId),
    Shift(Box<Sequence>),
    Hadamard(Box<Sequence>, Box<Sequence>),
    /// Finite literal prefix, zero afterwards. Mainly for counterexamples.
    Literal(Vec<crate::exactmat::Rat>),
}

impl From<SequenceFamilyId> for Sequence {
    fn from(id: SequenceFamilyId) -> Self {
        Sequence::Family(id)
    }
}

impl Sequence {
    pub fn term(&self, n: u64) -> Result<Rat> {
        match self {
            Sequence::Family(id) => sequence_term(id, n),
            Sequence::Shift(inner) => inner.term(n + 1),
            Sequence::Hadamard(a, b) => Ok(a.term(n)? * b.term(n)?),
            Sequence::Literal(v) => Ok(v.get(n as usize).cloned().unwrap_or_else(Rat::zero)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Sequence::Family(id) => id.to_string(),
            Sequence::Shift(inner) => format!("shift({})", inner.label()),
            Sequence::Hadamard(a, b) => format!("hadamard({},{})", a.label(), b.label()),
            Sequence::Literal(v) => format!("literal[{}]", v.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Shift,
    Hadamard,
}

/// Shift (`a_{n+1}`) or Hadamard product (`a_n b_n`) of sequences.
pub fn seq_transform(kind: TransformKind, a: Sequence, b: Option<Sequence>) -> Result<Sequence> {
    match kind {
        TransformKind::Shift => Ok(Sequence::Shift(Box::new(a))),
        TransformKind::Hadamard => {
            let b = b.ok_or_else(|| {
                Error::Param("hadamard transform requires a second sequence".into())
            })?;
            Ok(Sequence::Hadamard(Box::new(a), Box::new(b)))
        }
    }
}

/// Toeplitz truncation `(n, k) -> a_{n-k}` for `n >= k`, zero above.
pub fn toeplitz_truncation(seq: &Sequence, order: usize) -> Result<ExactMatrix> {
    if order == 0 {
        return Err(Error::Param("order must be >= 1".into()));
    }
    let mut rows = Vec::with_capacity(order);
    for n in 0..order {
        let mut row = Vec::with_capacity(order);
        for k in 0..order {
            row.push(if n >= k {
                seq.term((n - k) as u64)?
            } else {
                Rat::zero()
            });
        }
        rows.push(row);
    }
    ExactMatrix::from_rat_rows(rows)
}

/// Hankel truncation `(n, k) -> a_{n+k+offset}` with offset 0 or 1.
pub fn hankel_truncation(seq: &Sequence, order: usize, offset: usize) -> Result<ExactMatrix> {
    if order == 0 {
        return Err(Error::Param("order must be >= 1".into()));
    }
    if offset > 1 {
        return Err(Error::Param("hankel offset must be 0 or 1".into()));
    }
    let mut rows = Vec::with_capacity(order);
    for n in 0..order {
        let mut row = Vec::with_capacity(order);
        for k in 0..order {
            row.push(seq.term((n + k + offset) as u64)?);
        }
        rows.push(row);
    }
    ExactMatrix::from_rat_rows(rows)
}

/// All d-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    if d == 0 || d > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Advance to the next lexicographic combination.
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - d {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..d {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc
}

fn violates(value: &Rat, strict: bool) -> bool {
    if strict {
        !value.is_positive()
    } else {
        value.is_negative()
    }
}

/// Scans all minors (or all solid minors) of orders `1..=max_order` in
/// canonical order (ascending order, then lexicographic row set, then
/// lexicographic column set) and returns the first violation.
fn scan_minors(
    m: &ExactMatrix,
    max_order: usize,
    solid: bool,
    strict: bool,
) -> Result<Option<Witness>> {
    let max_order = max_order.min(m.rows()).min(m.cols());
    if !solid {
        let mut budget: u128 = 0;
        for d in 1..=max_order {
            budget += binom_u128(m.rows(), d) * binom_u128(m.cols(), d);
        }
        if budget > BRUTE_MINOR_BUDGET {
            return Err(Error::Resource(format!(
                "brute-force scan would evaluate {budget} minors (budget {BRUTE_MINOR_BUDGET})"
            )));
        }
    }
    let workers = worker_count();
    for d in 1..=max_order {
        let (row_sets, col_sets) = if solid {
            let rows: Vec<Vec<usize>> =
                (0..=m.rows() - d).map(|r| (r..r + d).collect()).collect();
            let cols: Vec<Vec<usize>> =
                (0..=m.cols() - d).map(|c| (c..c + d).collect()).collect();
            (rows, cols)
        } else {
            (combinations(m.rows(), d), combinations(m.cols(), d))
        };
        let scan_row_set = |rows: &Vec<usize>| -> Option<Witness> {
            for cols in &col_sets {
                let value = m.submatrix(rows, cols).det().expect("square by construction");
                if violates(&value, strict) {
                    let spec = MinorSpec::new(rows.clone(), cols.clone())
                        .expect("combination lists are strictly increasing");
                    return Some(Witness { spec, value });
                }
            }
            None
        };
        // The reduction picks the canonically minimal witness regardless of
        // completion order, so parallel runs stay deterministic.
        let hit: Option<Witness> = if workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            pool.install(|| {
                row_sets
                    .par_iter()
                    .filter_map(&scan_row_set)
                    .min_by(|a, b| a.spec.cmp(&b.spec))
            })
        } else {
            row_sets.iter().find_map(scan_row_set)
        };
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Outcome of a Neville elimination certification attempt.
enum NevilleOutcome {
    /// Elimination of the matrix and its transpose completed without row
    /// exchanges, with positive pivots and nonnegative multipliers: TP.
    CertifiedTp,
    /// Certificate conditions not met; says nothing either way.
    Inconclusive,
}

fn neville_one_side(m: &ExactMatrix) -> bool {
    let n = m.rows();
    let mut w: Vec<Vec<Rat>> = (0..n)
        .map(|r| (0..n).map(|c| m.get(r, c).clone()).collect())
        .collect();
    for j in 0..n {
        for i in (j + 1..n).rev() {
            if w[i][j].is_zero() {
                continue;
            }
            if w[i - 1][j].is_zero() {
                // Would need a row exchange; outside the clean certificate.
                return false;
            }
            let mult = &w[i][j] / &w[i - 1][j];
            if mult.is_negative() {
                return false;
            }
            #[allow(clippy::needless_range_loop)] // row i updates against row i-1
            for c in j..n {
                let upd = &w[i][c] - &mult * &w[i - 1][c];
                w[i][c] = upd;
            }
        }
        if !w[j][j].is_positive() {
            // Nonpositive pivot: either not TP or a singular case we leave
            // to brute force.
            return false;
        }
    }
    true
}

fn neville_certify(m: &ExactMatrix) -> NevilleOutcome {
    if !m.is_square() {
        return NevilleOutcome::Inconclusive;
    }
    if neville_one_side(m) && neville_one_side(&m.transpose()) {
        NevilleOutcome::CertifiedTp
    } else {
        NevilleOutcome::Inconclusive
    }
}

/// Total positivity check. Brute force enumerates all minors up to
/// `max_minor_order`; Neville elimination certifies full TP and falls back to
/// brute force when inconclusive. Fekete's criterion is rejected here since
/// solid minors do not suffice for the nonstrict property.
pub fn check_tp(m: &ExactMatrix, method: CheckMethod, max_minor_order: usize) -> Result<TPVerdict> {
    let full = m.rows().min(m.cols());
    match method {
        CheckMethod::FeketeSolid => Err(Error::Method(
            "fekete-solid certifies only strict total positivity".into(),
        )),
        CheckMethod::Brute => {
            let order = max_minor_order.min(full);
            let witness = scan_minors(m, order, false, false)?;
            Ok(TPVerdict {
                property: TpProperty::Tp,
                status: if witness.is_some() { CheckStatus::Fails } else { CheckStatus::Holds },
                method: CheckMethod::Brute,
                max_minor_order: order,
                witness,
            })
        }
        CheckMethod::Neville => {
            if m.is_square() && m.rows() > 0 {
                if let NevilleOutcome::CertifiedTp = neville_certify(m) {
                    return Ok(TPVerdict {
                        property: TpProperty::Tp,
                        status: CheckStatus::Holds,
                        method: CheckMethod::Neville,
                        max_minor_order: full,
                        witness: None,
                    });
                }
            }
            if full > NEVILLE_FALLBACK_ORDER {
                // Fall back anyway but keep the enumeration bounded; the
                // budget guard still applies.
                let order = max_minor_order.min(full);
                let mut v = check_tp(m, CheckMethod::Brute, order)?;
                v.method = CheckMethod::Brute;
                return Ok(v);
            }
            check_tp(m, CheckMethod::Brute, max_minor_order)
        }
    }
}

/// Strict total positivity check via Fekete's solid-minor criterion or brute
/// force. A nonpositive entry short-circuits with a 1x1 witness.
pub fn check_stp(m: &ExactMatrix, method: CheckMethod) -> Result<TPVerdict> {
    if method == CheckMethod::Neville {
        return Err(Error::Method(
            "neville elimination is not wired up for the strict check; use brute or fekete-solid"
                .into(),
        ));
    }
    let full = m.rows().min(m.cols());
    // Entry precheck: the first nonpositive entry in row-major order is the
    // canonical minimal failing minor.
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.get(r, c).is_positive() {
                return Ok(TPVerdict {
                    property: TpProperty::Stp,
                    status: CheckStatus::Fails,
                    method,
                    max_minor_order: 1,
                    witness: Some(Witness {
                        spec: MinorSpec::new(vec![r], vec![c]).unwrap(),
                        value: m.get(r, c).clone(),
                    }),
                });
            }
        }
    }
    let solid = method == CheckMethod::FeketeSolid;
    let witness = scan_minors(m, full, solid, true)?;
    Ok(TPVerdict {
        property: TpProperty::Stp,
        status: if witness.is_some() { CheckStatus::Fails } else { CheckStatus::Holds },
        method,
        max_minor_order: full,
        witness,
    })
}

/// Polya-frequency property of the Toeplitz truncation at the given order.
pub fn is_pf_truncated(seq: &Sequence, order: usize, max_minor_order: usize) -> Result<SeqVerdict> {
    let toe = toeplitz_truncation(seq, order)?;
    let verdict = check_tp(&toe, CheckMethod::Brute, max_minor_order)?;
    Ok(SeqVerdict {
        property: SeqProperty::PfTruncated,
        order,
        status: verdict.status,
        witness: verdict.witness.map(|w| SeqWitness { offset: 0, spec: w.spec, value: w.value }),
    })
}

/// Stieltjes-moment property at the given truncation order: all leading
/// principal minors of both Hankel truncations (offsets 0 and 1) must be
/// strictly positive.
pub fn is_sm_truncated(seq: &Sequence, order: usize) -> Result<SeqVerdict> {
    let h0 = hankel_truncation(seq, order, 0)?;
    let h1 = hankel_truncation(seq, order, 1)?;
    for d in 1..=order {
        for (offset, h) in [(0usize, &h0), (1usize, &h1)] {
            let idx: Vec<usize> = (0..d).collect();
            let spec = MinorSpec::new(idx.clone(), idx).unwrap();
            let value = h.minor(&spec)?;
            if !value.is_positive() {
                return Ok(SeqVerdict {
                    property: SeqProperty::SmTruncated,
                    order,
                    status: CheckStatus::Fails,
                    witness: Some(SeqWitness { offset, spec, value }),
                });
            }
        }
    }
    Ok(SeqVerdict {
        property: SeqProperty::SmTruncated,
        order,
        status: CheckStatus::Holds,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{rat, rat_int};
    use crate::families::{build_matrix, MatrixFamilyId, MatrixShape};

    fn seq(tag: &str) -> Sequence {
        Sequence::Family(SequenceFamilyId::parse(tag, None).unwrap())
    }

    #[test]
    fn toeplitz_examples() {
        let m = toeplitz_truncation(&seq("inv-factorial"), 3).unwrap();
        let expected = ExactMatrix::from_rat_rows(vec![
            vec![rat_int(1), rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(1), rat_int(0)],
            vec![rat(1, 2), rat_int(1), rat_int(1)],
        ])
        .unwrap();
        assert_eq!(m, expected);

        let one = toeplitz_truncation(&seq("factorial"), 1).unwrap();
        assert_eq!(one, ExactMatrix::from_i64_rows(&[&[1]]));

        let f2 = toeplitz_truncation(&seq("factorial"), 2).unwrap();
        assert_eq!(f2, ExactMatrix::from_i64_rows(&[&[1, 0], &[1, 1]]));
    }

    #[test]
    fn hankel_examples() {
        let h = hankel_truncation(&seq("factorial"), 3, 0).unwrap();
        assert_eq!(
            h,
            ExactMatrix::from_i64_rows(&[&[1, 1, 2], &[1, 2, 6], &[2, 6, 24]])
        );
        let h1 = hankel_truncation(&seq("factorial"), 1, 1).unwrap();
        assert_eq!(h1, ExactMatrix::from_i64_rows(&[&[1]]));
        let hs = hankel_truncation(&seq("factorial-squared"), 2, 0).unwrap();
        assert_eq!(hs, ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 4]]));
        assert!(hankel_truncation(&seq("factorial"), 2, 2).is_err());
    }

    #[test]
    fn check_tp_examples() {
        let na = build_matrix(MatrixFamilyId::NarayanaA, MatrixShape::Triangle, 6).unwrap();
        assert!(check_tp(&na, CheckMethod::Brute, 6).unwrap().holds());

        let bad = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]);
        let v = check_tp(&bad, CheckMethod::Brute, 2).unwrap();
        assert_eq!(v.status, CheckStatus::Fails);
        let w = v.witness.unwrap();
        assert_eq!(w.spec, MinorSpec::new(vec![0, 1], vec![0, 1]).unwrap());
        assert_eq!(w.value, rat_int(-5));

        let one = ExactMatrix::from_i64_rows(&[&[0]]);
        assert!(check_tp(&one, CheckMethod::Brute, 1).unwrap().holds());

        assert!(matches!(
            check_tp(&na, CheckMethod::FeketeSolid, 6),
            Err(Error::Method(_))
        ));
    }

    #[test]
    fn neville_agrees_with_brute_and_certifies() {
        let na = build_matrix(MatrixFamilyId::NarayanaA, MatrixShape::Triangle, 6).unwrap();
        let v = check_tp(&na, CheckMethod::Neville, 6).unwrap();
        assert!(v.holds());
        assert_eq!(v.method, CheckMethod::Neville);

        let bad = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]);
        let v = check_tp(&bad, CheckMethod::Neville, 2).unwrap();
        assert_eq!(v.status, CheckStatus::Fails);
        assert_eq!(v.method, CheckMethod::Brute); // fell back for the witness
    }

    #[test]
    fn check_stp_examples() {
        let nb_sq = build_matrix(MatrixFamilyId::NarayanaB, MatrixShape::Square, 4).unwrap();
        assert!(check_stp(&nb_sq, CheckMethod::FeketeSolid).unwrap().holds());
        assert!(check_stp(&nb_sq, CheckMethod::Brute).unwrap().holds());

        let p_sq = build_matrix(MatrixFamilyId::Pascal, MatrixShape::Square, 4).unwrap();
        assert!(check_stp(&p_sq, CheckMethod::FeketeSolid).unwrap().holds());

        let na_tri = build_matrix(MatrixFamilyId::NarayanaA, MatrixShape::Triangle, 3).unwrap();
        let v = check_stp(&na_tri, CheckMethod::Brute).unwrap();
        assert_eq!(v.status, CheckStatus::Fails);
        let w = v.witness.unwrap();
        assert_eq!(w.spec.order(), 1);
        assert!(w.value.is_zero());

        assert!(matches!(
            check_stp(&nb_sq, CheckMethod::Neville),
            Err(Error::Method(_))
        ));
    }

    #[test]
    fn stp_methods_agree_on_all_positive_matrices() {
        for (fam, shape) in [
            (MatrixFamilyId::NarayanaA, MatrixShape::Square),
            (MatrixFamilyId::NarayanaB, MatrixShape::Square),
            (MatrixFamilyId::Pascal, MatrixShape::Square),
            (MatrixFamilyId::Delannoy, MatrixShape::Square),
        ] {
            for order in 1..=6 {
                let m = build_matrix(fam, shape, order).unwrap();
                let brute = check_stp(&m, CheckMethod::Brute).unwrap();
                let fekete = check_stp(&m, CheckMethod::FeketeSolid).unwrap();
                assert_eq!(brute.status, fekete.status, "{fam} order {order}");
            }
        }
    }

    #[test]
    fn tp_methods_agree_on_family_matrices() {
        for (fam, shape) in [
            (MatrixFamilyId::Pascal, MatrixShape::Triangle),
            (MatrixFamilyId::NarayanaA, MatrixShape::Triangle),
            (MatrixFamilyId::NarayanaB, MatrixShape::Triangle),
            (MatrixFamilyId::Delannoy, MatrixShape::Triangle),
            (MatrixFamilyId::NarayanaA, MatrixShape::Square),
        ] {
            for order in 1..=6 {
                let m = build_matrix(fam, shape, order).unwrap();
                let brute = check_tp(&m, CheckMethod::Brute, order).unwrap();
                let neville = check_tp(&m, CheckMethod::Neville, order).unwrap();
                assert_eq!(brute.status, neville.status, "{fam} {shape} order {order}");
            }
        }
    }

    #[test]
    fn pf_truncated_examples() {
        assert!(is_pf_truncated(&seq("inv-factorial"), 6, 6).unwrap().holds());
        let poch = Sequence::Family(
            SequenceFamilyId::parse("inv-pochhammer-factorial", Some(rat(2, 1))).unwrap(),
        );
        assert!(is_pf_truncated(&poch, 6, 6).unwrap().holds());

        // 1 + x^2 is not a Polya frequency generating function; its Toeplitz
        // truncation has a negative 2x2 minor.
        let lit = Sequence::Literal(vec![rat_int(1), rat_int(0), rat_int(1)]);
        let v = is_pf_truncated(&lit, 3, 3).unwrap();
        assert_eq!(v.status, CheckStatus::Fails);
        let w = v.witness.unwrap();
        assert_eq!(w.spec.order(), 2);
        assert!(w.value.is_negative());
    }

    #[test]
    fn sm_truncated_examples() {
        assert!(is_sm_truncated(&seq("factorial"), 5).unwrap().holds());
        assert!(is_sm_truncated(&seq("factorial-shift-product"), 5).unwrap().holds());
        assert!(is_sm_truncated(&seq("factorial-squared"), 5).unwrap().holds());

        let ones = Sequence::Literal(vec![rat_int(1); 8]);
        let v = is_sm_truncated(&ones, 2).unwrap();
        assert_eq!(v.status, CheckStatus::Fails);
        let w = v.witness.unwrap();
        assert_eq!(w.offset, 0);
        assert_eq!(w.spec.order(), 2);
        assert!(w.value.is_zero());
    }

    #[test]
    fn seq_transform_examples() {
        let shifted = seq_transform(TransformKind::Shift, seq("factorial"), None).unwrap();
        assert_eq!(shifted.term(2).unwrap(), rat_int(6));

        let had = seq_transform(
            TransformKind::Hadamard,
            seq("factorial"),
            Some(Sequence::Shift(Box::new(seq("factorial")))),
        )
        .unwrap();
        for n in 0..=10 {
            assert_eq!(had.term(n).unwrap(), seq("factorial-shift-product").term(n).unwrap());
        }

        let sq = seq_transform(
            TransformKind::Hadamard,
            seq("factorial"),
            Some(seq("factorial")),
        )
        .unwrap();
        for n in 0..=10 {
            assert_eq!(sq.term(n).unwrap(), seq("factorial-squared").term(n).unwrap());
        }

        assert!(seq_transform(TransformKind::Hadamard, seq("factorial"), None).is_err());
    }

    #[test]
    fn brute_budget_guard() {
        let big = ExactMatrix::from_fn(16, 16, |r, c| {
            crate::families::binomial((r + c) as u64, c as i64).into()
        });
        assert!(matches!(
            check_tp(&big, CheckMethod::Brute, 16),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        assert_eq!(
            c,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert!(combinations(3, 4).is_empty());
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
