//! Small named algebras used by tests, benches and the CLI examples.

use crate::linalg::{rat, unit_vec, Rational, RationalMatrix};
use crate::multilinear::AlternatingMap;
use crate::structures::{DifferenceLieAlgebra, LieAlgebra};

fn table(dim: usize, entries: &[(usize, usize, Vec<Rational>)]) -> LieAlgebra {
    LieAlgebra::from_table(dim, entries).expect("fixture satisfies Jacobi")
}

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// `[e1, e2] = e2`.
pub fn aff1() -> LieAlgebra {
    table(2, &[(0, 1, v(&[0, 1]))])
}

/// `[e1, e2] = e3`.
pub fn h3() -> LieAlgebra {
    table(3, &[(0, 1, v(&[0, 0, 1]))])
}

/// Basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    table(
        3,
        &[
            (0, 1, v(&[0, 2, 0])),
            (0, 2, v(&[0, 0, -2])),
            (1, 2, v(&[1, 0, 0])),
        ],
    )
    .with_names(vec!["h".into(), "e".into(), "f".into()])
}

/// Standard filiform algebra: `[e1, e_i] = e_{i+1}` for `2 ≤ i < n`, class `n − 1`.
pub fn filiform(n: usize) -> LieAlgebra {
    let entries: Vec<_> = (1..n.saturating_sub(1))
        .map(|i| (0, i, unit_vec(n, i + 1)))
        .collect();
    table(n, &entries)
}

/// Strictly upper triangular `n×n` matrices with basis `E_{ij}`, `i < j`,
/// ordered lexicographically.
pub fn strictly_upper_triangular(n: usize) -> LieAlgebra {
    let basis: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let d = basis.len();
    let pos = |p: (usize, usize)| basis.iter().position(|&q| q == p);
    let mut entries = Vec::new();
    for (a, &(i, j)) in basis.iter().enumerate() {
        for (b, &(k, l)) in basis.iter().enumerate().skip(a + 1) {
            let mut out = vec![rat(0); d];
            if j == k {
                out[pos((i, l)).unwrap()] += rat(1);
            }
            if l == i {
                out[pos((k, j)).unwrap()] -= rat(1);
            }
            entries.push((a, b, out));
        }
    }
    table(d, &entries)
}

/// The non-Jacobi table `ω(e1,e2) = e1`, `ω(e2,e3) = e2`, `ω(e3,e1) = 0`.
pub fn omega_table() -> AlternatingMap {
    let mut w = AlternatingMap::zero(3, 2, 3);
    w.set(&[0, 1], v(&[1, 0, 0]));
    w.set(&[1, 2], v(&[0, 1, 0]));
    w
}

/// `D e1 = 0`, `D e2 = e2` on aff(1).
pub fn e2_projection() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[&[0, 0], &[0, 1]])
}

pub fn neg_identity(n: usize) -> RationalMatrix {
    RationalMatrix::scalar(n, &rat(-1))
}

/// The difference Lie algebras used throughout the test suite.
pub fn difference_fixtures() -> Vec<(&'static str, DifferenceLieAlgebra)> {
    let mk = |g: LieAlgebra, d: RationalMatrix| {
        DifferenceLieAlgebra::new(g, d).expect("fixture is valid")
    };
    vec![
        ("abelian1, D=0", mk(abelian(1), RationalMatrix::zeros(1, 1))),
        ("aff1, D=0", mk(aff1(), RationalMatrix::zeros(2, 2))),
        ("aff1, D=-Id", mk(aff1(), neg_identity(2))),
        ("aff1, D=e2-projection", mk(aff1(), e2_projection())),
        ("h3, D=0", mk(h3(), RationalMatrix::zeros(3, 3))),
        ("h3, D=-Id", mk(h3(), neg_identity(3))),
        ("sl2, D=0", mk(sl2(), RationalMatrix::zeros(3, 3))),
    ]
}
