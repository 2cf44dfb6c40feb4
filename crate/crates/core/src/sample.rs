//! Seeded random generators for cochains, matrices and candidate structures.
//! Entries are small integers and halves so exact arithmetic stays cheap.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fixtures;
use crate::linalg::{rat, ratio, Rational, RationalMatrix};
use crate::multilinear::{AlternatingMap, BigradedMap, MixedCochain, Side, Split};
use crate::structures::{LieActTriple, LieAlgebra};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Mostly integers in `[-2, 2]`, sometimes a half.
    pub fn scalar(&mut self) -> Rational {
        if self.coin(0.15) {
            ratio(self.int(-3, 3), 2)
        } else {
            rat(self.int(-2, 2))
        }
    }

    /// Like [`scalar`](Self::scalar) but zero with probability `1 − density`.
    pub fn sparse_scalar(&mut self, density: f64) -> Rational {
        if self.coin(density) {
            self.scalar()
        } else {
            rat(0)
        }
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix::from_rows((0..rows).map(|_| self.vector(cols)).collect())
    }

    pub fn sparse_matrix(&mut self, rows: usize, cols: usize, density: f64) -> RationalMatrix {
        RationalMatrix::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| self.sparse_scalar(density)).collect())
                .collect(),
        )
    }

    pub fn alternating(&mut self, dim: usize, arity: usize, target: usize) -> AlternatingMap {
        AlternatingMap::from_fn(dim, arity, target, |_| self.vector(target))
    }

    pub fn sparse_alternating(
        &mut self,
        dim: usize,
        arity: usize,
        target: usize,
        density: f64,
    ) -> AlternatingMap {
        AlternatingMap::from_fn(dim, arity, target, |_| {
            (0..target).map(|_| self.sparse_scalar(density)).collect()
        })
    }

    pub fn bigraded(&mut self, split: Split, k: usize, l: usize, target: Side) -> BigradedMap {
        let t = split.side_dim(target);
        BigradedMap::from_fn(split, k, l, target, |_, _| self.vector(t))
    }

    /// A random element of `C^n(g, h, ρ)`.
    pub fn mixed_cochain(&mut self, split: Split, n: usize) -> MixedCochain {
        let f0 = self.bigraded(split, n, 0, Side::G);
        let parts = (1..=n)
            .map(|i| self.bigraded(split, n - i, i, Side::H))
            .collect();
        MixedCochain { n, f0, parts }
    }

    /// A candidate `(π, μ, ρ, D)`: about half are genuine structures
    /// (possibly rescaled), the rest are perturbed or random.
    pub fn structure_candidate(&mut self, max_dim: usize) -> (LieActTriple, RationalMatrix) {
        let (t, d) = self.valid_structure(max_dim);
        match self.index(4) {
            0 | 1 => (t, d),
            2 => self.perturb(t, d),
            _ => {
                let (g, h) = (t.g.dim(), t.h.dim());
                let pi = self.sparse_alternating(g, 2, g, 0.4);
                let mu = self.sparse_alternating(h, 2, h, 0.4);
                let rho = (0..g).map(|_| self.sparse_matrix(h, h, 0.3)).collect();
                let d = self.sparse_matrix(h, g, 0.5);
                (
                    LieActTriple::new_unchecked(
                        LieAlgebra::new_unchecked(pi),
                        LieAlgebra::new_unchecked(mu),
                        rho,
                    ),
                    d,
                )
            }
        }
    }

    /// A valid relative difference structure with `dim g, dim h ≤ max_dim`
    /// (`max_dim ≥ 2`).
    pub fn valid_structure(&mut self, max_dim: usize) -> (LieActTriple, RationalMatrix) {
        let (t, d) = loop {
            let pick = self.index(6);
            let c = rat(self.int(1, 2)) * if self.coin(0.5) { rat(1) } else { rat(-1) };
            let cand = match pick {
                0 => {
                    let g = fixtures::aff1();
                    let d = [
                        fixtures::e2_projection(),
                        fixtures::neg_identity(2),
                        RationalMatrix::zeros(2, 2),
                    ][self.index(3)]
                    .clone();
                    (LieActTriple::adjoint(g), d)
                }
                1 => {
                    let d = if self.coin(0.5) {
                        fixtures::neg_identity(3)
                    } else {
                        RationalMatrix::zeros(3, 3)
                    };
                    (LieActTriple::adjoint(fixtures::h3()), d)
                }
                2 => (
                    LieActTriple::adjoint(fixtures::sl2()),
                    RationalMatrix::zeros(3, 3),
                ),
                3 => {
                    // ρ = 0: any homomorphism g → h, here into an abelian h.
                    let (g, h) = (1 + self.index(max_dim), 1 + self.index(max_dim));
                    let ga = [fixtures::abelian(g), fixtures::aff1(), fixtures::h3()]
                        [self.index(3)]
                    .clone();
                    let gd = ga.dim();
                    let hd = h;
                    let mut d = self.sparse_matrix(hd, gd, 0.5);
                    // kill D on [g, g] so that D is a homomorphism into abelian h
                    for i in 0..gd {
                        for j in i + 1..gd {
                            let b = ga.bracket_basis(i, j);
                            if b.iter().any(|x| x != &rat(0)) {
                                for (k, x) in b.iter().enumerate() {
                                    if x != &rat(0) {
                                        for r in 0..hd {
                                            d[(r, k)] = rat(0);
                                        }
                                    }
                                }
                            }
                        }
                    }
                    let t = LieActTriple::new_unchecked(
                        ga,
                        LieAlgebra::abelian(hd),
                        vec![RationalMatrix::zeros(hd, hd); gd],
                    );
                    (t, d)
                }
                4 => {
                    // Abelian g acting on abelian h by commuting matrices, D = 0.
                    let (g, h) = (1 + self.index(max_dim), 1 + self.index(max_dim));
                    let a = self.sparse_matrix(h, h, 0.4);
                    let rho = (0..g).map(|i| a.scale(&rat(i as i64 + 1))).collect();
                    (
                        LieActTriple::new_unchecked(
                            LieAlgebra::abelian(g),
                            LieAlgebra::abelian(h),
                            rho,
                        ),
                        RationalMatrix::zeros(h, g),
                    )
                }
                _ => {
                    let g = fixtures::abelian(1 + self.index(max_dim));
                    let n = g.dim();
                    (LieActTriple::adjoint(g), self.sparse_matrix(n, n, 0.5))
                }
            };
            if cand.0.g.dim() <= max_dim && cand.0.h.dim() <= max_dim {
                break (rescale(&cand.0, &c), cand.1);
            }
        };
        (t, d)
    }

    fn perturb(
        &mut self,
        t: LieActTriple,
        mut d: RationalMatrix,
    ) -> (LieActTriple, RationalMatrix) {
        let (g, h) = (t.g.dim(), t.h.dim());
        let bump = loop {
            let s = self.scalar();
            if s != rat(0) {
                break s;
            }
        };
        match self.index(4) {
            0 if g >= 2 => {
                let mut pi = t.g.bracket_map().clone();
                let idx =
                    crate::multilinear::combinations(g, 2)[self.index(g * (g - 1) / 2)].clone();
                let mut v = pi.get(&idx).to_vec();
                let k = self.index(g);
                v[k] += bump;
                pi.set(&idx, v);
                (
                    LieActTriple::new_unchecked(LieAlgebra::new_unchecked(pi), t.h, t.rho),
                    d,
                )
            }
            1 => {
                let mut rho = t.rho.clone();
                let (i, r, c) = (self.index(g), self.index(h), self.index(h));
                rho[i][(r, c)] += bump;
                (LieActTriple::new_unchecked(t.g, t.h, rho), d)
            }
            2 if h >= 2 => {
                let mut mu = t.h.bracket_map().clone();
                let idx =
                    crate::multilinear::combinations(h, 2)[self.index(h * (h - 1) / 2)].clone();
                let mut v = mu.get(&idx).to_vec();
                let k = self.index(h);
                v[k] += bump;
                mu.set(&idx, v);
                (
                    LieActTriple::new_unchecked(t.g, LieAlgebra::new_unchecked(mu), t.rho),
                    d,
                )
            }
            _ => {
                let (r, c) = (self.index(h), self.index(g));
                d[(r, c)] += bump;
                (t, d)
            }
        }
    }
}

/// Scales `π`, `μ` and `ρ` by `c`; relative difference operators stay valid.
pub fn rescale(t: &LieActTriple, c: &Rational) -> LieActTriple {
    LieActTriple::new_unchecked(
        LieAlgebra::new_unchecked(t.g.bracket_map().scale(c)).with_names(t.g.names().to_vec()),
        LieAlgebra::new_unchecked(t.h.bracket_map().scale(c)).with_names(t.h.names().to_vec()),
        t.rho.iter().map(|r| r.scale(c)).collect(),
    )
}
