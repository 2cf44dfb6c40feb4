//! Exact scalars and dense linear algebra over the rationals.
//!
//! Everything downstream (cohomology dimensions, equivalence witnesses,
//! isomorphism searches) reduces to rank and kernel computations here, so the
//! elimination is deterministic: pivots are always the first nonzero entry in
//! the current column, scanning rows top to bottom.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Ring operations needed by the generic evaluators (brackets, BCH words).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_scalar() -> Self;
    fn one_scalar() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero_scalar(&self) -> bool;
}

impl Scalar for Rational {
    fn zero_scalar() -> Self {
        Zero::zero()
    }
    fn one_scalar() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero_scalar(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Element `value + infinitesimal·t` of ℚ[t]/(t²).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualScalar {
    pub value: Rational,
    pub infinitesimal: Rational,
}

impl DualScalar {
    pub fn new(value: Rational, infinitesimal: Rational) -> Self {
        Self {
            value,
            infinitesimal,
        }
    }

    pub fn t() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }
}

impl Add for DualScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.value + o.value, self.infinitesimal + o.infinitesimal)
    }
}

impl Sub for DualScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.value - o.value, self.infinitesimal - o.infinitesimal)
    }
}

impl Mul for DualScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let inf = &self.value * &o.infinitesimal + &self.infinitesimal * &o.value;
        Self::new(self.value * o.value, inf)
    }
}

impl Neg for DualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, -self.infinitesimal)
    }
}

impl Scalar for DualScalar {
    fn zero_scalar() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn one_scalar() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::new(r.clone(), Rational::zero())
    }
    fn is_zero_scalar(&self) -> bool {
        self.value.is_zero() && self.infinitesimal.is_zero()
    }
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_assign(acc: &mut [Rational], v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// `acc += c·v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn scaled(c: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let data = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        Self { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose j-th column is `columns[j]`.
    pub fn from_columns(n_rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n_rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_vec_generic<S: Scalar>(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero_scalar();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() {
                        acc = acc + S::from_rational(a) * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `self·o − o·self`
    pub fn commutator(&self, o: &Self) -> Self {
        &self.matmul(o) - &o.matmul(self)
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Self {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Horizontal concatenation.
    pub fn augment(&self, right: &Self) -> Self {
        assert_eq!(self.rows, right.rows, "row mismatch in augment");
        let mut m = Self::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..right.cols {
                m[(r, self.cols + c)] = right[(r, c)].clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let mut p = self.clone();
        for _ in 0..self.rows {
            if p.is_zero() {
                return true;
            }
            p = p.matmul(self);
        }
        p.is_zero()
    }

    /// Exact `e^M` for a nilpotent matrix; `None` if `M` is not nilpotent.
    pub fn exp_nilpotent(&self) -> Option<Self> {
        if !self.is_nilpotent() {
            return None;
        }
        let n = self.rows;
        let mut acc = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..=n {
            term = term.matmul(self).scale(&ratio(1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Some(acc)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, o: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, o: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        self.scale(&rat(-1))
    }
}

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let v = &f * &a[(r, j)];
                a[(i, j)] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// An ordered list of linearly independent vectors in ℚ^ambient_dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl SubspaceBasis {
    /// Keeps the vectors that enlarge the span, in order.
    pub fn spanned_by(
        ambient_dim: usize,
        vectors: impl IntoIterator<Item = Vec<Rational>>,
    ) -> Self {
        let mut basis = Self::zero(ambient_dim);
        for v in vectors {
            basis.try_push(v);
        }
        basis
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    /// Accepts `vectors` verbatim; fails if they are dependent.
    pub fn from_independent(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let b = Self {
            ambient_dim,
            vectors,
        };
        if b.as_row_matrix().rank() != b.vectors.len() {
            return Err(Error::InternalInconsistency(
                "subspace vectors are linearly dependent".into(),
            ));
        }
        Ok(b)
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<Rational>> {
        self.vectors
    }

    /// Rows are the basis vectors.
    pub fn as_row_matrix(&self) -> RationalMatrix {
        if self.vectors.is_empty() {
            return RationalMatrix::zeros(0, self.ambient_dim);
        }
        RationalMatrix::from_rows(self.vectors.clone())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if is_zero_vec(v) {
            return true;
        }
        let stacked = self
            .as_row_matrix()
            .stack(&RationalMatrix::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    pub fn contains_all(&self, other: &SubspaceBasis) -> bool {
        if other.dim() == 0 {
            return true;
        }
        self.as_row_matrix().stack(&other.as_row_matrix()).rank() == self.dim()
    }

    /// Adds `v` if it is outside the current span; reports whether it did.
    pub fn try_push(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        if self.contains(&v) {
            return false;
        }
        self.vectors.push(v);
        true
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        Self::spanned_by(
            self.ambient_dim,
            self.vectors.iter().chain(&other.vectors).cloned(),
        )
    }

    /// Extends `self` (assumed ⊆ `larger`) to a basis of `larger` and returns
    /// only the added vectors, taken in order from `larger`.
    pub fn complement_in(&self, larger: &SubspaceBasis) -> Vec<Vec<Rational>> {
        let mut acc = self.clone();
        larger
            .vectors
            .iter()
            .filter(|v| acc.try_push((*v).clone()))
            .cloned()
            .collect()
    }
}

/// Basis of the null space, one vector per free column, in column order.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let vectors = (0..cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = zero_vec(cols);
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            v
        })
        .collect();
    SubspaceBasis {
        ambient_dim: cols,
        vectors,
    }
}

/// Column space of `m` as a subspace of ℚ^rows.
pub fn image_basis(m: &RationalMatrix) -> SubspaceBasis {
    let (_, pivots) = rref(m);
    SubspaceBasis {
        ambient_dim: m.rows(),
        vectors: pivots.iter().map(|&c| m.column(c)).collect(),
    }
}

/// `dim kernel − dim image`, after checking that the image sits inside the kernel.
pub fn quotient_dim(kernel: &SubspaceBasis, image: &SubspaceBasis) -> Result<usize> {
    if kernel.ambient_dim() != image.ambient_dim() || !kernel.contains_all(image) {
        return Err(Error::ImageNotContained);
    }
    Ok(kernel.dim() - image.dim())
}

/// Solves `a·x = b`. `Ok(x)` with free variables set to zero, or `Err` with
/// the pair `(rank a, rank [a|b])` certifying infeasibility.
pub fn solve(
    a: &RationalMatrix,
    b: &[Rational],
) -> std::result::Result<Vec<Rational>, (usize, usize)> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let aug = a.augment(&RationalMatrix::from_columns(a.rows(), &[b.to_vec()]));
    let (r, pivots) = rref(&aug);
    let n = a.cols();
    if pivots.last() == Some(&n) {
        return Err((pivots.len() - 1, pivots.len()));
    }
    let mut x = zero_vec(n);
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = r[(row, n)].clone();
    }
    Ok(x)
}

/// Reads a vector as `a/b` style strings for reports.
pub fn format_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = RationalMatrix::identity(2);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = rref(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_of_zero_matrix_has_no_pivots() {
        let (r, p) = rref(&RationalMatrix::zeros(1, 1));
        assert!(r.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::zeros(3, 3)).dim(), 3);
        assert_eq!(kernel_basis(&RationalMatrix::identity(4)).dim(), 0);
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.vectors(), &[vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn quotient_dims() {
        let ker = SubspaceBasis::full(3);
        let im = SubspaceBasis::spanned_by(3, vec![unit_vec(3, 1)]);
        assert_eq!(quotient_dim(&ker, &im).unwrap(), 2);
        assert_eq!(quotient_dim(&ker, &ker).unwrap(), 0);
        let small = SubspaceBasis::spanned_by(3, vec![unit_vec(3, 0)]);
        assert!(matches!(
            quotient_dim(&small, &im),
            Err(Error::ImageNotContained)
        ));
    }

    #[test]
    fn solve_reports_certificate() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[rat(1), rat(3)]), Err((1, 2)));
        let x = solve(&a, &[rat(1), rat(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(1), rat(2)]);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(7)), "7");
    }

    #[test]
    fn dual_scalar_t_squared_vanishes() {
        let t = DualScalar::t();
        let a = DualScalar::new(ratio(3, 2), rat(-5));
        assert!((a * t.clone() * t).is_zero_scalar());
    }

    #[test]
    fn nilpotent_exponential() {
        let n = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let e = n.exp_nilpotent().unwrap();
        let expected = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(1), ratio(1, 2)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        assert_eq!(e, expected);
        assert!(RationalMatrix::identity(2).exp_nilpotent().is_none());
    }

    use proptest::prelude::*;

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
                RationalMatrix::from_rows(
                    xs.chunks(c)
                        .map(|row| row.iter().map(|&x| rat(x)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            prop_assert_eq!(a.rank() + kernel_basis(&a).dim(), a.cols());
        }

        #[test]
        fn rref_idempotent(a in small_matrix()) {
            let (r, _) = rref(&a);
            let (rr, _) = rref(&r);
            prop_assert_eq!(r, rr);
        }

        #[test]
        fn kernel_vectors_are_annihilated(a in small_matrix()) {
            for v in kernel_basis(&a).vectors() {
                prop_assert!(is_zero_vec(&a.mul_vec(v)));
            }
        }

        #[test]
        fn dual_t_squared(a in -50i64..50, b in -50i64..50) {
            let x = DualScalar::new(rat(a), rat(b));
            prop_assert!((x * DualScalar::t() * DualScalar::t()).is_zero_scalar());
        }
    }
}
