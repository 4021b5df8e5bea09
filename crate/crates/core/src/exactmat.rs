//! Exact 3×3 integer and rational matrices, plus a shared binomial table.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::DivisionError;

/// A 3×3 matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat3 {
    entries: [[BigInt; 3]; 3],
}

impl Mat3 {
    pub fn new(entries: [[BigInt; 3]; 3]) -> Self {
        Mat3 { entries }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3 {
            entries: rows.map(|row| row.map(BigInt::from)),
        }
    }

    pub fn zero() -> Self {
        Mat3::from_i64([[0; 3]; 3])
    }

    pub fn identity() -> Self {
        Mat3::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn entries(&self) -> &[[BigInt; 3]; 3] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.iter().all(Zero::is_zero)
    }

    /// Entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().flatten()
    }

    fn map(&self, mut f: impl FnMut(&BigInt) -> BigInt) -> Mat3 {
        Mat3 {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.entries[i][j]))),
        }
    }

    fn zip(&self, other: &Mat3, mut f: impl FnMut(&BigInt, &BigInt) -> BigInt) -> Mat3 {
        Mat3 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| f(&self.entries[i][j], &other.entries[i][j]))
            }),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Mat3 {
        counters::bump_linear();
        self.map(|x| x * c)
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &BigInt, other: &Mat3) -> Mat3 {
        counters::bump_linear();
        self.zip(other, |a, b| a + c * b)
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3 {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| self.entries[j][i].clone())),
        }
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Mat3 {
    type Output = Mat3;

    fn add(self, rhs: &Mat3) -> Mat3 {
        mat_add(self, rhs)
    }
}

impl Sub for &Mat3 {
    type Output = Mat3;

    fn sub(self, rhs: &Mat3) -> Mat3 {
        counters::bump_linear();
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Mat3 {
    type Output = Mat3;

    fn neg(self) -> Mat3 {
        self.map(|x| -x)
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;

    fn mul(self, rhs: &Mat3) -> Mat3 {
        mat_mul(self, rhs)
    }
}

pub fn mat_add(a: &Mat3, b: &Mat3) -> Mat3 {
    counters::bump_linear();
    a.zip(b, |x, y| x + y)
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    counters::bump_mul();
    let (x, y) = (&a.entries, &b.entries);
    Mat3 {
        entries: std::array::from_fn(|i| {
            std::array::from_fn(|j| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j] + &x[i][2] * &y[2][j])
        }),
    }
}

/// Binary exponentiation; `a⁰ = I`.
pub fn mat_pow(a: &Mat3, mut n: u64) -> Mat3 {
    let mut result = Mat3::identity();
    if n == 0 {
        return result;
    }
    let mut base = a.clone();
    let mut first = true;
    loop {
        if n & 1 == 1 {
            // skip the multiplication by the identity
            result = if first { base.clone() } else { mat_mul(&result, &base) };
            first = false;
        }
        n >>= 1;
        if n == 0 {
            return result;
        }
        base = mat_mul(&base, &base);
    }
}

/// Entrywise exact division by `d`.
pub fn mat_div_exact(a: &Mat3, d: &BigInt) -> Result<Mat3, DivisionError> {
    if d.is_zero() {
        return Err(DivisionError::ZeroDivisor);
    }
    for (row, values) in a.entries.iter().enumerate() {
        for (col, value) in values.iter().enumerate() {
            if !value.is_multiple_of(d) {
                return Err(DivisionError::NotDivisible {
                    row,
                    col,
                    value: value.clone(),
                    divisor: d.clone(),
                });
            }
        }
    }
    Ok(a.map(|x| x / d))
}

fn minor(m: &[[BigInt; 3]; 3], row: usize, col: usize) -> BigInt {
    let r: Vec<usize> = (0..3).filter(|&i| i != row).collect();
    let c: Vec<usize> = (0..3).filter(|&j| j != col).collect();
    &m[r[0]][c[0]] * &m[r[1]][c[1]] - &m[r[0]][c[1]] * &m[r[1]][c[0]]
}

fn cofactor(m: &[[BigInt; 3]; 3], row: usize, col: usize) -> BigInt {
    let v = minor(m, row, col);
    if (row + col).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn mat_det(a: &Mat3) -> BigInt {
    (0..3)
        .map(|j| &a.entries[0][j] * cofactor(&a.entries, 0, j))
        .sum()
}

/// Transposed cofactor matrix; `a · adj(a) = det(a) · I`.
pub fn mat_adjugate(a: &Mat3) -> Mat3 {
    Mat3 {
        entries: std::array::from_fn(|i| std::array::from_fn(|j| cofactor(&a.entries, j, i))),
    }
}

/// A 3×3 matrix of exact rationals, each kept in lowest terms.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat3 {
    entries: [[BigRational; 3]; 3],
}

impl RatMat3 {
    pub fn from_integer(a: &Mat3) -> Self {
        RatMat3 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| BigRational::from_integer(a.entries[i][j].clone()))
            }),
        }
    }

    /// `a / d` with every entry reduced; `d` must be nonzero.
    pub fn from_quotient(a: &Mat3, d: &BigInt) -> Result<Self, DivisionError> {
        if d.is_zero() {
            return Err(DivisionError::ZeroDivisor);
        }
        Ok(RatMat3 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| BigRational::new(a.entries[i][j].clone(), d.clone()))
            }),
        })
    }

    pub fn entries(&self) -> &[[BigRational; 3]; 3] {
        &self.entries
    }

    /// The integer matrix, when every denominator is 1.
    pub fn to_integer(&self) -> Option<Mat3> {
        if self.entries.iter().flatten().all(|q| q.is_integer()) {
            Some(Mat3 {
                entries: std::array::from_fn(|i| {
                    std::array::from_fn(|j| self.entries[i][j].numer().clone())
                }),
            })
        } else {
            None
        }
    }

    /// First entry (row-major) whose denominator is not 1.
    pub fn first_fractional(&self) -> Option<(usize, usize)> {
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .find(|&(i, j)| !self.entries[i][j].is_integer())
    }
}

impl fmt::Debug for RatMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

/// Values the transforms operate on: integers and integer matrices.
pub trait Element: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    /// `self + c·other`.
    fn plus_scaled(&self, c: &BigInt, other: &Self) -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl Element for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn plus_scaled(&self, c: &BigInt, other: &Self) -> Self {
        self + c * other
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

impl Element for Mat3 {
    fn zero_like(&self) -> Self {
        Mat3::zero()
    }

    fn plus_scaled(&self, c: &BigInt, other: &Self) -> Self {
        self.add_scaled(c, other)
    }

    fn plus(&self, other: &Self) -> Self {
        mat_add(self, other)
    }
}

static BINOMIAL_ROWS: OnceLock<RwLock<Vec<Arc<[BigInt]>>>> = OnceLock::new();

/// Row `n` of Pascal's triangle, built by Pascal's rule and cached process-wide.
pub fn binomial_row(n: usize) -> Arc<[BigInt]> {
    let table = BINOMIAL_ROWS.get_or_init(|| RwLock::new(vec![Arc::from(vec![BigInt::one()])]));
    if let Some(row) = table.read().expect("binomial cache poisoned").get(n) {
        return Arc::clone(row);
    }
    let mut rows = table.write().expect("binomial cache poisoned");
    // another writer may have extended the table meanwhile
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is always present");
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::one());
        for k in 1..prev.len() {
            next.push(&prev[k - 1] + &prev[k]);
        }
        next.push(BigInt::one());
        rows.push(Arc::from(next));
    }
    Arc::clone(&rows[n])
}

/// C(n, k); zero outside `0..=n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    binomial_row(n)[k as usize].clone()
}

/// Per-thread operation counters, used to measure asymptotic cost independently of wall time.
pub mod counters {
    use super::Cell;

    thread_local! {
        static MUL: Cell<u64> = const { Cell::new(0) };
        static LINEAR: Cell<u64> = const { Cell::new(0) };
    }

    #[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
    pub struct OpCounts {
        /// 3×3 matrix products.
        pub mat_mul: u64,
        /// Entrywise matrix additions, subtractions and scaled additions.
        pub mat_linear: u64,
    }

    pub(crate) fn bump_mul() {
        MUL.with(|c| c.set(c.get() + 1));
    }

    pub(crate) fn bump_linear() {
        LINEAR.with(|c| c.set(c.get() + 1));
    }

    pub fn snapshot() -> OpCounts {
        OpCounts {
            mat_mul: MUL.with(Cell::get),
            mat_linear: LINEAR.with(Cell::get),
        }
    }

    /// Runs `f` and returns its result with the operations it performed on this thread.
    pub fn measure<T>(f: impl FnOnce() -> T) -> (T, OpCounts) {
        let before = snapshot();
        let out = f();
        let after = snapshot();
        (
            out,
            OpCounts {
                mat_mul: after.mat_mul - before.mat_mul,
                mat_linear: after.mat_linear - before.mat_linear,
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p0() -> Mat3 {
        Mat3::identity()
    }
    fn p1() -> Mat3 {
        Mat3::from_i64([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    }
    fn r0() -> Mat3 {
        Mat3::from_i64([[4, 2, -3], [-3, 1, 2], [2, -1, 1]])
    }
    fn r1() -> Mat3 {
        Mat3::from_i64([[-3, 1, 2], [2, -1, 1], [1, 3, -1]])
    }

    fn small_mat() -> impl Strategy<Value = Mat3> {
        proptest::array::uniform3(proptest::array::uniform3(-9i64..=9)).prop_map(Mat3::from_i64)
    }

    #[test]
    fn add_examples() {
        assert_eq!(mat_add(&Mat3::identity(), &Mat3::zero()), Mat3::identity());
        assert_eq!(
            mat_add(&p0(), &p1()),
            Mat3::from_i64([[1, 1, 0], [0, 1, 1], [1, 1, 1]])
        );
        assert_eq!(
            mat_add(&r0(), &r1()),
            Mat3::from_i64([[1, 3, -1], [-1, 0, 3], [3, 2, 0]])
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            mat_mul(&p1(), &p1()),
            Mat3::from_i64([[0, 0, 1], [1, 1, 0], [0, 1, 1]])
        );
        assert_eq!(mat_mul(&p1(), &r0()), r1());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(mat_pow(&r0(), 0), Mat3::identity());
        let p3 = mat_pow(&p1(), 3);
        assert_eq!(p3, Mat3::from_i64([[1, 1, 0], [0, 1, 1], [1, 1, 1]]));
        assert_eq!(p3, &(&p1() * &p1()) * &p1());
        assert_eq!(mat_pow(&p1(), 5), mat_mul(&mat_pow(&p1(), 2), &p3));
    }

    #[test]
    fn pow_uses_logarithmic_products() {
        let (_, ops) = counters::measure(|| mat_pow(&p1(), 4096));
        assert_eq!(ops.mat_mul, 12);
        let (_, ops) = counters::measure(|| mat_pow(&p1(), 4095));
        assert!(ops.mat_mul <= 2 * 12);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        for n in 0..64 {
            assert_eq!(binomial(n, 0), BigInt::one());
            assert_eq!(binomial(n, n as i64), BigInt::one());
        }
        assert!(binomial(4, -1).is_zero());
        assert!(binomial(4, 5).is_zero());
    }

    #[test]
    fn vandermonde_convolution() {
        for k in 0..=16i64 {
            let lhs: BigInt = (0..=k).map(|j| binomial(7, j) * binomial(9, k - j)).sum();
            assert_eq!(lhs, binomial(16, k));
        }
    }

    #[test]
    fn pascal_rule() {
        for n in 0..64usize {
            for k in 0..=(n as i64 + 1) {
                assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
            }
        }
    }

    #[test]
    fn binomial_cache_concurrent_population() {
        let rows: Vec<_> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8).map(|t| s.spawn(move || binomial_row(300 + t))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (t, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), 301 + t);
            assert_eq!(row[1], BigInt::from(300 + t));
        }
    }

    #[test]
    fn div_exact_examples() {
        let a = Mat3::from_i64([[2, 4, 6], [0, 2, 4], [2, 2, 2]]);
        assert_eq!(
            mat_div_exact(&a, &BigInt::from(2)).unwrap(),
            Mat3::from_i64([[1, 2, 3], [0, 1, 2], [1, 1, 1]])
        );
        match mat_div_exact(&Mat3::identity(), &BigInt::from(3)) {
            Err(DivisionError::NotDivisible { row: 0, col: 0, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            mat_div_exact(&r0(), &BigInt::zero()),
            Err(DivisionError::ZeroDivisor)
        );
        let three = BigInt::from(3);
        assert_eq!(mat_div_exact(&r0().scale(&three), &three).unwrap(), r0());
    }

    #[test]
    fn det_examples() {
        assert_eq!(mat_det(&Mat3::identity()), BigInt::one());
        assert_eq!(mat_det(&r0()), BigInt::from(23));
    }

    #[test]
    fn rational_quotient_is_canonical() {
        let q = RatMat3::from_quotient(&Mat3::from_i64([[2, -4, 3], [0, 6, 9], [1, 1, 1]]), &BigInt::from(-6))
            .unwrap();
        assert_eq!(q.entries()[0][0], BigRational::new(BigInt::from(-1), BigInt::from(3)));
        assert_eq!(q.entries()[0][1].denom(), &BigInt::from(3));
        assert_eq!(q.entries()[0][2].denom(), &BigInt::from(2));
        assert!(q.entries()[0][2].numer() < &BigInt::zero());
        assert_eq!(q.first_fractional(), Some((0, 0)));
        assert!(q.to_integer().is_none());
        let whole = RatMat3::from_quotient(&r0().scale(&BigInt::from(5)), &BigInt::from(5)).unwrap();
        assert_eq!(whole.to_integer(), Some(r0()));
    }

    proptest! {
        #[test]
        fn mul_associative(a in small_mat(), b in small_mat(), c in small_mat()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn identity_neutral(a in small_mat()) {
            prop_assert_eq!(&a * &Mat3::identity(), a.clone());
            prop_assert_eq!(&Mat3::identity() * &a, a);
        }

        #[test]
        fn pow_adds_exponents(a in small_mat(), n in 0u64..=32, m in 0u64..=32) {
            prop_assert_eq!(mat_pow(&a, n + m), &mat_pow(&a, n) * &mat_pow(&a, m));
        }

        #[test]
        fn div_exact_inverts_scale(a in small_mat(), d in prop_oneof![-50i64..=-1, 1i64..=50]) {
            let d = BigInt::from(d);
            prop_assert_eq!(mat_div_exact(&a.scale(&d), &d).unwrap(), a);
        }

        #[test]
        fn adjugate_identity(a in small_mat()) {
            let det = mat_det(&a);
            prop_assert_eq!(&a * &mat_adjugate(&a), Mat3::identity().scale(&det));
        }
    }
}
