//! Entry rules, sequence rules and matrix builders for the combinatorial
//! families, plus independent path and permutation enumeration oracles.
//!
//! The enumeration oracles are deliberately naive (exhaustive walks over
//! paths and permutations) so they can serve as correctness anchors for the
//! closed-form entry rules.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{ExactMatrix, Int, Rat};

/// Identifier of a matrix family, carrying the parameter `m` where one exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixFamilyId {
    Pascal,
    NarayanaA,
    NarayanaB,
    MNarayana { m: u64 },
    FussNarayanaA { m: u64 },
    FussNarayanaB { m: u64 },
    Delannoy,
    Eulerian,
}

impl MatrixFamilyId {
    /// Resolves a tag plus optional parameter; `m` is required exactly for the
    /// parameterized families, and Fuss-Narayana requires `m >= 1`.
    pub fn parse(tag: &str, m: Option<u64>) -> Result<Self> {
        let needs_m = matches!(tag, "m-narayana" | "fuss-narayana-a" | "fuss-narayana-b");
        if needs_m != m.is_some() {
            return Err(Error::Param(format!(
                "parameter m is {} for family {tag}",
                if needs_m { "required" } else { "not accepted" }
            )));
        }
        match tag {
            "pascal" => Ok(Self::Pascal),
            "narayana-a" => Ok(Self::NarayanaA),
            "narayana-b" => Ok(Self::NarayanaB),
            "m-narayana" => Ok(Self::MNarayana { m: m.unwrap() }),
            "fuss-narayana-a" | "fuss-narayana-b" => {
                let m = m.unwrap();
                if m == 0 {
                    return Err(Error::Param("fuss-narayana requires m >= 1".into()));
                }
                Ok(if tag == "fuss-narayana-a" {
                    Self::FussNarayanaA { m }
                } else {
                    Self::FussNarayanaB { m }
                })
            }
            "delannoy" => Ok(Self::Delannoy),
            "eulerian" => Ok(Self::Eulerian),
            _ => Err(Error::Param(format!("unknown family {tag:?}"))),
        }
    }
}

impl std::fmt::Display for MatrixFamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Pascal => write!(f, "pascal"),
            Self::NarayanaA => write!(f, "narayana-a"),
            Self::NarayanaB => write!(f, "narayana-b"),
            Self::MNarayana { m } => write!(f, "m-narayana(m={m})"),
            Self::FussNarayanaA { m } => write!(f, "fuss-narayana-a(m={m})"),
            Self::FussNarayanaB { m } => write!(f, "fuss-narayana-b(m={m})"),
            Self::Delannoy => write!(f, "delannoy"),
            Self::Eulerian => write!(f, "eulerian"),
        }
    }
}

/// Truncation convention for an infinite family matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixShape {
    /// `(n, k) -> f(n, k)` for `k <= n`, zero above the band.
    Triangle,
    /// `(n, k) -> f(n, n - k)` (band-adjusted for the shifted families).
    ReversedTriangle,
    /// `(n, k) -> f(n + k, k)`.
    Square,
}

impl MatrixShape {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "triangle" => Ok(Self::Triangle),
            "reversed" | "reversed-triangle" => Ok(Self::ReversedTriangle),
            "square" => Ok(Self::Square),
            _ => Err(Error::Param(format!("unknown shape {s:?}"))),
        }
    }
}

impl std::fmt::Display for MatrixShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Triangle => write!(f, "triangle"),
            Self::ReversedTriangle => write!(f, "reversed-triangle"),
            Self::Square => write!(f, "square"),
        }
    }
}

/// Identifier of a sequence family used for Toeplitz/Hankel truncations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequenceFamilyId {
    /// `n!`
    Factorial,
    /// `n!(n+1)!`
    FactorialShiftProduct,
    /// `(n!)^2`
    FactorialSquared,
    /// `1/n!`
    InvFactorial,
    /// `1/(n!(n+1)!)`
    InvFactorialShiftProduct,
    /// `1/((n!)^2)`
    InvFactorialSquared,
    /// `1/((t)_n n!)` with rising factorial `(t)_n` and rational `t > 0`.
    InvPochhammerFactorial { t: Rat },
}

impl SequenceFamilyId {
    pub fn parse(tag: &str, t: Option<Rat>) -> Result<Self> {
        let needs_t = tag == "inv-pochhammer-factorial";
        if needs_t != t.is_some() {
            return Err(Error::Param(format!(
                "parameter t is {} for sequence {tag}",
                if needs_t { "required" } else { "not accepted" }
            )));
        }
        match tag {
            "factorial" => Ok(Self::Factorial),
            "factorial-shift-product" => Ok(Self::FactorialShiftProduct),
            "factorial-squared" => Ok(Self::FactorialSquared),
            "inv-factorial" => Ok(Self::InvFactorial),
            "inv-factorial-shift-product" => Ok(Self::InvFactorialShiftProduct),
            "inv-factorial-squared" => Ok(Self::InvFactorialSquared),
            "inv-pochhammer-factorial" => {
                let t = t.unwrap();
                if !t.is_positive() {
                    return Err(Error::Param("inv-pochhammer-factorial requires t > 0".into()));
                }
                Ok(Self::InvPochhammerFactorial { t })
            }
            _ => Err(Error::Param(format!("unknown sequence {tag:?}"))),
        }
    }
}

impl std::fmt::Display for SequenceFamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Factorial => write!(f, "factorial"),
            Self::FactorialShiftProduct => write!(f, "factorial-shift-product"),
            Self::FactorialSquared => write!(f, "factorial-squared"),
            Self::InvFactorial => write!(f, "inv-factorial"),
            Self::InvFactorialShiftProduct => write!(f, "inv-factorial-shift-product"),
            Self::InvFactorialSquared => write!(f, "inv-factorial-squared"),
            Self::InvPochhammerFactorial { t } => {
                write!(f, "inv-pochhammer-factorial(t={})", crate::exactmat::rat_to_string(t))
            }
        }
    }
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Exact binomial coefficient; zero for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || (k as u64) > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n - k + i) / Int::from(i);
    }
    acc
}

fn exact_div(num: Int, den: &Int, what: &str) -> Result<Int> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what} is not divisible by {den}")));
    }
    Ok(q)
}

/// Narayana number of type A: `C(n+1,k) C(n,k) / (k+1)`; zero out of band.
pub fn narayana_a(n: u64, k: i64) -> Int {
    if k < 0 || (k as u64) > n {
        return Int::zero();
    }
    let num = binomial(n + 1, k) * binomial(n, k);
    exact_div(num, &Int::from(k + 1), "Narayana numerator")
        .expect("Narayana numbers are integers")
}

/// Narayana number of type B: `C(n,k)^2`; zero out of band.
pub fn narayana_b(n: u64, k: i64) -> Int {
    let b = binomial(n, k);
    &b * &b
}

/// m-Narayana number `(m+1)/(n+2) C(n+2,k+1) C(n-m,k)`, defined for
/// `n >= m`, `0 <= k <= n-m`; zero for `k` out of band.
pub fn m_narayana(m: u64, n: u64, k: i64) -> Result<Int> {
    if n < m {
        return Err(Error::Param(format!("m-Narayana needs n >= m, got n={n}, m={m}")));
    }
    if k < 0 || (k as u64) > n - m {
        return Ok(Int::zero());
    }
    let num = Int::from(m + 1) * binomial(n + 2, k + 1) * binomial(n - m, k);
    exact_div(num, &Int::from(n + 2), "m-Narayana numerator")
}

/// Coxeter type selector for the Fuss-Narayana numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FussType {
    A,
    B,
}

/// Fuss-Narayana number; type A is `C(n+1,k) C(m(n+1),n-k) / (n+1)`,
/// type B is `C(n,k) C(mn,n-k)`. Requires `m >= 1`; zero for `k` out of band.
pub fn fuss_narayana(ty: FussType, m: u64, n: u64, k: i64) -> Result<Int> {
    if m == 0 {
        return Err(Error::Param("Fuss-Narayana requires m >= 1".into()));
    }
    if k < 0 || (k as u64) > n {
        return Ok(Int::zero());
    }
    match ty {
        FussType::A => {
            let num = binomial(n + 1, k) * binomial(m * (n + 1), (n as i64) - k);
            exact_div(num, &Int::from(n + 1), "Fuss-Narayana numerator")
        }
        FussType::B => Ok(binomial(n, k) * binomial(m * n, (n as i64) - k)),
    }
}

static DELANNOY_CACHE: OnceLock<Mutex<HashMap<(u64, u64), Int>>> = OnceLock::new();

/// Delannoy number via the three-term recurrence with `D(0,k) = D(k,0) = 1`.
pub fn delannoy(n: u64, k: u64) -> Int {
    let cache = DELANNOY_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(n, k)) {
        return v.clone();
    }
    // Iterative fill keeps the recursion depth flat.
    let mut table: Vec<Vec<Int>> = vec![vec![Int::zero(); k as usize + 1]; n as usize + 1];
    for i in 0..=n as usize {
        for j in 0..=k as usize {
            table[i][j] = if i == 0 || j == 0 {
                Int::one()
            } else {
                &table[i - 1][j] + &table[i - 1][j - 1] + &table[i][j - 1]
            };
        }
    }
    let result = table[n as usize][k as usize].clone();
    let mut guard = cache.lock().unwrap();
    for (i, row) in table.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            guard.entry((i as u64, j as u64)).or_insert(v);
        }
    }
    result
}

static EULERIAN_CACHE: OnceLock<Mutex<HashMap<(u64, u64), Int>>> = OnceLock::new();

/// Eulerian number `A(n,k)` via `A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)`
/// with `A(1,1) = 1`; zero for `k` out of `1..=n`.
pub fn eulerian(n: u64, k: i64) -> Int {
    if n == 0 || k < 1 || (k as u64) > n {
        return Int::zero();
    }
    let k = k as u64;
    let cache = EULERIAN_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(n, k)) {
        return v.clone();
    }
    let zero = Int::zero();
    let mut prev: Vec<Int> = vec![Int::zero(), Int::one()]; // row n = 1, indexed by k
    for row in 2..=n {
        let mut next = vec![Int::zero(); row as usize + 1];
        #[allow(clippy::needless_range_loop)] // reads two entries of `prev` per index
        for j in 1..=row as usize {
            let a = prev.get(j).unwrap_or(&zero);
            let b = prev.get(j - 1).unwrap_or(&zero);
            next[j] = Int::from(j as u64) * a + Int::from(row - j as u64 + 1) * b;
        }
        prev = next;
    }
    let result = prev[k as usize].clone();
    cache.lock().unwrap().insert((n, k), result.clone());
    result
}

/// Rising factorial `(t)_n = t (t+1) ... (t+n-1)`.
pub fn pochhammer(t: &Rat, n: u64) -> Rat {
    (0..n).fold(Rat::one(), |acc, i| acc * (t + Rat::from_integer(Int::from(i))))
}

/// Exact term of a sequence family.
pub fn sequence_term(id: &SequenceFamilyId, n: u64) -> Result<Rat> {
    let f = |v: Int| Rat::from_integer(v);
    let inv = |v: Rat| {
        if v.is_zero() {
            Err(Error::Domain("division by zero sequence term".into()))
        } else {
            Ok(v.recip())
        }
    };
    match id {
        SequenceFamilyId::Factorial => Ok(f(factorial(n))),
        SequenceFamilyId::FactorialShiftProduct => Ok(f(factorial(n) * factorial(n + 1))),
        SequenceFamilyId::FactorialSquared => {
            let x = factorial(n);
            Ok(f(&x * &x))
        }
        SequenceFamilyId::InvFactorial => inv(f(factorial(n))),
        SequenceFamilyId::InvFactorialShiftProduct => inv(f(factorial(n) * factorial(n + 1))),
        SequenceFamilyId::InvFactorialSquared => {
            let x = factorial(n);
            inv(f(&x * &x))
        }
        SequenceFamilyId::InvPochhammerFactorial { t } => {
            if !t.is_positive() {
                return Err(Error::Param("inv-pochhammer-factorial requires t > 0".into()));
            }
            inv(pochhammer(t, n) * f(factorial(n)))
        }
    }
}

/// Family entry rule in triangle coordinates: `f(n, k)`, zero out of band.
/// For the m-Narayana family the row index is re-based so row 0 is `n = m`.
fn entry_rule(id: MatrixFamilyId, n: u64, k: i64) -> Result<Int> {
    match id {
        MatrixFamilyId::Pascal => Ok(binomial(n, k)),
        MatrixFamilyId::NarayanaA => Ok(narayana_a(n, k)),
        MatrixFamilyId::NarayanaB => Ok(narayana_b(n, k)),
        MatrixFamilyId::MNarayana { m } => m_narayana(m, n + m, k),
        MatrixFamilyId::FussNarayanaA { m } => fuss_narayana(FussType::A, m, n, k),
        MatrixFamilyId::FussNarayanaB { m } => fuss_narayana(FussType::B, m, n, k),
        // Delannoy triangle entry is D(n-k, k); its square convention then
        // yields the plain Delannoy square [D(n, k)].
        MatrixFamilyId::Delannoy => {
            if k < 0 || (k as u64) > n {
                Ok(Int::zero())
            } else {
                Ok(delannoy(n - k as u64, k as u64))
            }
        }
        // Eulerian triangle in zero-based coordinates: A(n+1, k+1).
        MatrixFamilyId::Eulerian => {
            if k < 0 || (k as u64) > n {
                Ok(Int::zero())
            } else {
                Ok(eulerian(n + 1, k + 1))
            }
        }
    }
}

/// Leading `size x size` truncation of the family matrix under the shape
/// convention.
pub fn build_matrix(id: MatrixFamilyId, shape: MatrixShape, size: usize) -> Result<ExactMatrix> {
    if size == 0 {
        return Err(Error::Param("size must be >= 1".into()));
    }
    let mut entries: Vec<Vec<Rat>> = Vec::with_capacity(size);
    for r in 0..size {
        let mut row = Vec::with_capacity(size);
        for c in 0..size {
            let v = match shape {
                MatrixShape::Triangle => entry_rule(id, r as u64, c as i64)?,
                MatrixShape::ReversedTriangle => {
                    if c > r {
                        Int::zero()
                    } else {
                        entry_rule(id, r as u64, (r - c) as i64)?
                    }
                }
                MatrixShape::Square => entry_rule(id, (r + c) as u64, c as i64)?,
            };
            row.push(Rat::from_integer(v));
        }
        entries.push(row);
    }
    ExactMatrix::from_rat_rows(entries)
}

const DYCK_SEMILENGTH_CAP: usize = 12;
const LATTICE_CAP: u64 = 8;
const PERMUTATION_CAP: usize = 8;

/// Tally of Dyck paths keyed by (number of peaks, length of final descent).
type DyckDistribution = HashMap<(usize, usize), u64>;

static DYCK_CACHE: OnceLock<Mutex<HashMap<usize, DyckDistribution>>> = OnceLock::new();

/// Exhaustively walks all Dyck paths of the given semilength and tallies them
/// by (number of peaks, length of the final descent).
fn dyck_distribution(semilength: usize) -> DyckDistribution {
    let cache = DYCK_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&semilength) {
        return d.clone();
    }
    fn walk(
        ups_left: usize,
        height: usize,
        peaks: usize,
        last_up: bool,
        down_run: usize,
        acc: &mut HashMap<(usize, usize), u64>,
    ) {
        if ups_left == 0 && height == 0 {
            *acc.entry((peaks, down_run)).or_insert(0) += 1;
            return;
        }
        if ups_left > 0 {
            walk(ups_left - 1, height + 1, peaks, true, 0, acc);
        }
        if height > 0 {
            let p = if last_up { peaks + 1 } else { peaks };
            walk(ups_left, height - 1, p, false, down_run + 1, acc);
        }
    }
    let mut acc = HashMap::new();
    if semilength == 0 {
        acc.insert((0, 0), 1);
    } else {
        walk(semilength, 0, 0, false, 0, &mut acc);
    }
    cache.lock().unwrap().insert(semilength, acc.clone());
    acc
}

/// Number of Dyck paths of the given semilength with exactly `peaks` peaks
/// whose final `tail_down_steps` steps are all down-steps.
pub fn count_dyck_paths(semilength: usize, peaks: usize, tail_down_steps: usize) -> Result<Int> {
    if semilength > DYCK_SEMILENGTH_CAP {
        return Err(Error::Resource(format!(
            "Dyck enumeration capped at semilength {DYCK_SEMILENGTH_CAP}, got {semilength}"
        )));
    }
    let dist = dyck_distribution(semilength);
    let total: u64 = dist
        .iter()
        .filter(|((p, fd), _)| *p == peaks && *fd >= tail_down_steps)
        .map(|(_, c)| *c)
        .sum();
    Ok(Int::from(total))
}

/// Path-enumeration oracle for the m-Narayana numbers.
///
/// Adopted convention (fixed empirically against the closed form, see the
/// tests): `NA_m(n,k)` counts Dyck paths of semilength `n+1` whose last `m`
/// steps are down-steps, with exactly `k+1` peaks once those trailing `m`
/// down-steps are removed. Removing the trailing run destroys a peak exactly
/// when the final descent has length `m`, so in terms of whole-path peak
/// counts:
///
/// `NA_m(n,k) = #(tail >= m+1, peaks k+1) + #(tail exactly m, peaks k+2)`.
pub fn m_narayana_path_count(m: u64, n: u64, k: i64) -> Result<Int> {
    if n < m || k < 0 {
        return Err(Error::Param("oracle needs n >= m and k >= 0".into()));
    }
    let s = (n + 1) as usize;
    let m = m as usize;
    let k = k as usize;
    let a = count_dyck_paths(s, k + 1, m + 1)?;
    let b = count_dyck_paths(s, k + 2, m)?;
    let c = count_dyck_paths(s, k + 2, m + 1)?;
    Ok(a + b - c)
}

/// Exhaustive count of lattice paths `(0,0) -> (n,k)` with east, north and
/// diagonal unit steps.
pub fn count_delannoy_paths(n: u64, k: u64) -> Result<Int> {
    if n > LATTICE_CAP || k > LATTICE_CAP {
        return Err(Error::Resource(format!(
            "lattice enumeration capped at {LATTICE_CAP}, got ({n},{k})"
        )));
    }
    fn walk(x: u64, y: u64, n: u64, k: u64) -> u64 {
        if x == n && y == k {
            return 1;
        }
        let mut total = 0;
        if x < n {
            total += walk(x + 1, y, n, k);
        }
        if y < k {
            total += walk(x, y + 1, n, k);
        }
        if x < n && y < k {
            total += walk(x + 1, y + 1, n, k);
        }
        total
    }
    Ok(Int::from(walk(0, 0, n, k)))
}

/// Count of permutations of `{1..n}` with exactly the given number of
/// excedances (positions `i` with `pi(i) > i`), by full enumeration.
pub fn count_excedance_permutations(n: usize, excedances: usize) -> Result<Int> {
    if n > PERMUTATION_CAP {
        return Err(Error::Resource(format!(
            "permutation enumeration capped at n = {PERMUTATION_CAP}, got {n}"
        )));
    }
    fn heap(perm: &mut Vec<usize>, k: usize, target: usize, count: &mut u64) {
        if k == 1 {
            let exc = perm.iter().enumerate().filter(|(i, &v)| v > i + 1).count();
            if exc == target {
                *count += 1;
            }
            return;
        }
        for i in 0..k {
            heap(perm, k - 1, target, count);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    if n == 0 {
        return Ok(if excedances == 0 { Int::one() } else { Int::zero() });
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    heap(&mut perm, n, excedances, &mut count);
    Ok(Int::from(count))
}
