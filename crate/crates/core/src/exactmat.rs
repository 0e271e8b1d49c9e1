//! Exact-arithmetic matrix kernel.
//!
//! All entries are normalized big rationals; integer matrices are rationals
//! with denominator one. Determinants are computed by fraction-free Bareiss
//! elimination after clearing denominators, so every intermediate value stays
//! an exact integer of polynomially bounded size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer underlying all matrix entries.
pub type Int = BigInt;
/// Normalized rational (positive denominator, fully reduced).
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Renders a rational as `p` for integers and `p/q` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` into a normalized rational.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: Int = num
        .parse()
        .map_err(|_| Error::Param(format!("bad rational {s:?}")))?;
    let den: Int = den
        .parse()
        .map_err(|_| Error::Param(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Param(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Row and column index sets selecting a square submatrix.
///
/// Both lists are strictly increasing and of equal, nonzero length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::MinorSpec(format!(
                "index lists must be nonempty and of equal length, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        for list in [&rows, &cols] {
            if !list.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::MinorSpec(format!(
                    "index list {list:?} is not strictly increasing"
                )));
            }
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }
}

/// Dense rectangular matrix of exact rationals. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl ExactMatrix {
    pub fn from_fn<F: FnMut(usize, usize) -> Rat>(rows: usize, cols: usize, mut f: F) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_int_fn<F: FnMut(usize, usize) -> Int>(rows: usize, cols: usize, mut f: F) -> Self {
        Self::from_fn(rows, cols, |r, c| Rat::from_integer(f(r, c)))
    }

    /// Test and display convenience: build from literal integer rows.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        Self::from_fn(rows.len(), cols, |r, c| rat_int(rows[r][c]))
    }

    pub fn from_rat_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Dimension("empty matrix".into()));
        }
        let cols = rows[0].len();
        if !rows.iter().all(|r| r.len() == cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let nrows = rows.len();
        let entries: Vec<Rat> = rows.into_iter().flatten().collect();
        Ok(ExactMatrix { rows: nrows, cols, entries })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Rat::one() } else { Rat::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mat_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.get(r, k) * other.get(k, c);
            }
            acc
        }))
    }

    /// Entrywise scaling `(r, c) -> a[r] * b[c] * m[r, c]`; all factors must be
    /// strictly positive.
    pub fn diag_scale(&self, a: &[Rat], b: &[Rat]) -> Result<ExactMatrix> {
        if a.len() != self.rows || b.len() != self.cols {
            return Err(Error::Dimension(format!(
                "scaling lengths {} and {} do not match {}x{}",
                a.len(),
                b.len(),
                self.rows,
                self.cols
            )));
        }
        if a.iter().chain(b.iter()).any(|x| !x.is_positive()) {
            return Err(Error::Domain(
                "diagonal scaling factors must be strictly positive".into(),
            ));
        }
        Ok(Self::from_fn(self.rows, self.cols, |r, c| {
            &a[r] * &b[c] * self.get(r, c)
        }))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    ///
    /// Denominators are cleared row by row first, so elimination runs over big
    /// integers with exact divisions only.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        // Clear denominators: row i is scaled by the lcm of its denominators.
        let mut work: Vec<Vec<Int>> = Vec::with_capacity(n);
        let mut scale = Int::one();
        for r in 0..n {
            let mut l = Int::one();
            for c in 0..n {
                l = l.lcm(self.get(r, c).denom());
            }
            work.push(
                (0..n)
                    .map(|c| {
                        let e = self.get(r, c);
                        e.numer() * (&l / e.denom())
                    })
                    .collect(),
            );
            scale *= l;
        }
        let det_int = bareiss_det(&mut work)?;
        Ok(Rat::new(det_int, scale))
    }

    /// Determinant of the submatrix selected by `spec`.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Rat> {
        let in_bounds = spec.rows().iter().all(|&r| r < self.rows)
            && spec.cols().iter().all(|&c| c < self.cols);
        if !in_bounds {
            return Err(Error::MinorSpec(format!(
                "minor spec {:?}/{:?} out of bounds for {}x{}",
                spec.rows(),
                spec.cols(),
                self.rows,
                self.cols
            )));
        }
        self.submatrix(spec.rows(), spec.cols()).det()
    }

    /// Exact LDL^T factorization of a symmetric matrix with nonzero leading
    /// principal minors. Returns the unit lower-triangular factor and the
    /// diagonal pivots.
    pub fn ldl(&self) -> Result<(ExactMatrix, Vec<Rat>)> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "LDL of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if !self.is_symmetric() {
            return Err(Error::Domain("LDL requires a symmetric matrix".into()));
        }
        let n = self.rows;
        let mut l: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]; n];
        let mut d: Vec<Rat> = Vec::with_capacity(n);
        for j in 0..n {
            let mut dj = self.get(j, j).clone();
            for k in 0..j {
                dj -= &l[j][k] * &l[j][k] * &d[k];
            }
            if dj.is_zero() {
                return Err(Error::Pivot { order: j + 1 });
            }
            l[j][j] = Rat::one();
            for i in (j + 1)..n {
                let mut v = self.get(i, j).clone();
                for k in 0..j {
                    v -= &l[i][k] * &l[j][k] * &d[k];
                }
                l[i][j] = v / &dj;
            }
            d.push(dj);
        }
        let lmat = ExactMatrix::from_fn(n, n, |r, c| l[r][c].clone());
        Ok((lmat, d))
    }

    /// Canonical textual form used for content digests and CSV export:
    /// one line per row, entries comma separated, rationals as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| rat_to_string(self.get(r, c))).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| rat_to_string(self.get(r, c))).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free Bareiss determinant of an integer matrix; consumes the
/// working copy. Row swaps are tracked through the sign.
fn bareiss_det(work: &mut [Vec<Int>]) -> Result<Int> {
    let n = work.len();
    if n == 0 {
        return Ok(Int::one());
    }
    let mut sign = 1i8;
    let mut prev = Int::one();
    for k in 0..n {
        if work[k][k].is_zero() {
            match (k + 1..n).find(|&i| !work[i][k].is_zero()) {
                Some(p) => {
                    work.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &work[i][j] * &work[k][k] - &work[i][k] * &work[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                work[i][j] = q;
            }
            work[i][k] = Int::zero();
        }
        prev = work[k][k].clone();
    }
    let det = work[n - 1][n - 1].clone();
    Ok(if sign < 0 { -det } else { det })
}
