//! Exterior-power combinatorics and alternating multilinear maps.
//!
//! An [`AlternatingMap`] stores one target vector per strictly increasing
//! basis tuple (a [`WedgeIndex`]). Values on any other argument list follow
//! from multilinearity and antisymmetry.
//!
//! For a direct sum `V = g ⊕ h` the g basis comes first (indices `0..dim g`)
//! and the h basis after it. With that ordering every sorted basis tuple
//! lists its g-vectors before its h-vectors, so the lift of a bigraded map
//! `κ: ∧^k g ⊗ ∧^l h → g or h` agrees with `κ` on sorted tuples: among the
//! `(k, l)`-shuffles only the identity feeds g-vectors into g-slots. This
//! makes lifting and projecting a pure relabelling of stored values.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, zero_vec, Rational, RationalMatrix};

/// Strictly increasing list of basis indices.
pub type WedgeIndex = Vec<usize>;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<WedgeIndex> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + n - k) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of a strictly increasing tuple among k-subsets of `0..n`.
pub fn combination_rank(n: usize, c: &[usize]) -> usize {
    let k = c.len();
    let mut rank = 0;
    let mut next = 0;
    for (i, &ci) in c.iter().enumerate() {
        for j in next..ci {
            rank += binomial(n - 1 - j, k - 1 - i);
        }
        next = ci + 1;
    }
    rank
}

/// Sorts `idx`, returning the sorted tuple and the sign of the sorting
/// permutation, or `None` if an index repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(WedgeIndex, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Sign of the arrangement `perm` (position j holds element `perm[j]`).
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// An `(i, n−i)`-shuffle, written as the arrangement
/// `(σ(1), …, σ(n))` with 0-based entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub perm: Vec<usize>,
    pub sign: i32,
}

/// Enumerates the `(i, n−i)`-shuffles, first block in lexicographic order.
pub fn shuffles(i: usize, n: usize) -> Vec<Shuffle> {
    assert!(i <= n, "shuffle block larger than total");
    combinations(n, i)
        .into_iter()
        .map(|first| {
            let mut perm = first.clone();
            perm.extend((0..n).filter(|x| !first.contains(x)));
            let sign = permutation_sign(&perm);
            Shuffle { perm, sign }
        })
        .collect()
}

/// Koszul sign ε(σ) defined by `x_σ(1) ⋯ x_σ(n) = ε(σ) x_1 ⋯ x_n` in the
/// graded-symmetric algebra, where `perm[j] = σ(j+1) − 1`.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> i32 {
    assert_eq!(perm.len(), degrees.len(), "degree list length mismatch");
    let mut sign = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && (degrees[perm[a]] * degrees[perm[b]]).rem_euclid(2) == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// Element of `Hom(∧^arity U, W)` with `dim U = domain_dim`, `dim W = target_dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlternatingMap {
    domain_dim: usize,
    arity: usize,
    target_dim: usize,
    values: Vec<Vec<Rational>>,
}

impl AlternatingMap {
    pub fn zero(domain_dim: usize, arity: usize, target_dim: usize) -> Self {
        Self {
            domain_dim,
            arity,
            target_dim,
            values: vec![zero_vec(target_dim); binomial(domain_dim, arity)],
        }
    }

    /// Fills values from a function of the sorted basis tuple.
    pub fn from_fn(
        domain_dim: usize,
        arity: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Self {
        let values = combinations(domain_dim, arity)
            .iter()
            .map(|c| {
                let v = f(c);
                assert_eq!(v.len(), target_dim, "value has wrong length");
                v
            })
            .collect();
        Self {
            domain_dim,
            arity,
            target_dim,
            values,
        }
    }

    /// Arity-one map with the given matrix (columns are images of basis vectors).
    pub fn linear(m: &RationalMatrix) -> Self {
        Self::from_fn(m.cols(), 1, m.rows(), |c| m.column(c[0]))
    }

    /// Rebuilds a map from its flat coordinate vector (see [`Self::to_flat`]).
    pub fn from_flat(
        domain_dim: usize,
        arity: usize,
        target_dim: usize,
        flat: &[Rational],
    ) -> Self {
        assert_eq!(flat.len(), binomial(domain_dim, arity) * target_dim);
        let values = if target_dim == 0 {
            vec![Vec::new(); binomial(domain_dim, arity)]
        } else {
            flat.chunks(target_dim).map(<[Rational]>::to_vec).collect()
        };
        Self {
            domain_dim,
            arity,
            target_dim,
            values,
        }
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Degree in the Nijenhuis–Richardson grading.
    pub fn nr_degree(&self) -> i64 {
        self.arity as i64 - 1
    }

    pub fn num_coords(&self) -> usize {
        self.values.len() * self.target_dim
    }

    /// Coordinates ordered by (lexicographic wedge index, target index).
    pub fn to_flat(&self) -> Vec<Rational> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (WedgeIndex, &[Rational])> {
        combinations(self.domain_dim, self.arity)
            .into_iter()
            .zip(self.values.iter().map(Vec::as_slice))
    }

    /// Value on a sorted basis tuple.
    pub fn get(&self, idx: &[usize]) -> &[Rational] {
        &self.values[combination_rank(self.domain_dim, idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Vec<Rational>) {
        assert_eq!(v.len(), self.target_dim);
        let r = combination_rank(self.domain_dim, idx);
        self.values[r] = v;
    }

    /// Value on a basis tuple in any order; `None` when an index repeats.
    pub fn basis_value(&self, idx: &[usize]) -> Option<(i32, &[Rational])> {
        let (sorted, sign) = sort_with_sign(idx)?;
        Some((sign, self.get(&sorted)))
    }

    /// Sets the value on an arbitrary-order tuple, keeping antisymmetry.
    pub fn set_any(&mut self, idx: &[usize], v: Vec<Rational>) -> Result<()> {
        let (sorted, sign) = sort_with_sign(idx)
            .ok_or_else(|| Error::Parse(format!("repeated basis index in {idx:?}")))?;
        let v = if sign < 0 {
            v.into_iter().map(|x| -x).collect()
        } else {
            v
        };
        self.set(&sorted, v);
        Ok(())
    }

    /// Full multilinear evaluation.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let supports: Vec<Vec<(usize, &Rational)>> = args
            .iter()
            .map(|a| {
                assert_eq!(a.len(), self.domain_dim, "argument dimension mismatch");
                a.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        let mut out = zero_vec(self.target_dim);
        let mut chosen = Vec::with_capacity(self.arity);
        self.eval_rec(
            &supports,
            &mut chosen,
            Rational::from_integer(1.into()),
            &mut out,
        );
        out
    }

    fn eval_rec(
        &self,
        supports: &[Vec<(usize, &Rational)>],
        chosen: &mut Vec<usize>,
        coeff: Rational,
        out: &mut [Rational],
    ) {
        let depth = chosen.len();
        if depth == supports.len() {
            if let Some((sign, v)) = self.basis_value(chosen) {
                let c = if sign < 0 { -coeff } else { coeff };
                axpy(out, &c, v);
            }
            return;
        }
        for &(i, x) in &supports[depth] {
            if chosen.contains(&i) {
                continue;
            }
            chosen.push(i);
            self.eval_rec(supports, chosen, &coeff * x, out);
            chosen.pop();
        }
    }

    /// `f(v, e_{rest_1}, …)` for a general first argument and basis vectors after it.
    pub fn eval_first_vector(&self, first: &[Rational], rest: &[usize]) -> Vec<Rational> {
        let mut out = zero_vec(self.target_dim);
        let mut idx = Vec::with_capacity(rest.len() + 1);
        for (j, c) in first.iter().enumerate() {
            if c.is_zero() || rest.contains(&j) {
                continue;
            }
            idx.clear();
            idx.push(j);
            idx.extend_from_slice(rest);
            if let Some((sign, v)) = self.basis_value(&idx) {
                let c = if sign < 0 { -c.clone() } else { c.clone() };
                axpy(&mut out, &c, v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }

    fn same_shape(&self, o: &Self) -> bool {
        self.domain_dim == o.domain_dim && self.arity == o.arity && self.target_dim == o.target_dim
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(self.same_shape(o), "shape mismatch in add");
        let values = self
            .values
            .iter()
            .zip(&o.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        self.with_values(values)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v.iter().map(|x| x * c).collect())
            .collect();
        self.with_values(values)
    }

    /// `M ∘ f` for a linear map `M` on the target.
    pub fn post_compose(&self, m: &RationalMatrix) -> Self {
        assert_eq!(m.cols(), self.target_dim);
        Self {
            domain_dim: self.domain_dim,
            arity: self.arity,
            target_dim: m.rows(),
            values: self.values.iter().map(|v| m.mul_vec(v)).collect(),
        }
    }

    /// `f(A·, …, A·)` for a linear map `A` into the domain.
    pub fn pull_back(&self, a: &RationalMatrix) -> Self {
        assert_eq!(a.rows(), self.domain_dim);
        Self::from_fn(a.cols(), self.arity, self.target_dim, |c| {
            let args: Vec<Vec<Rational>> = c.iter().map(|&i| a.column(i)).collect();
            self.eval(&args)
        })
    }

    /// Matrix of an arity-one map.
    pub fn to_matrix(&self) -> RationalMatrix {
        assert_eq!(self.arity, 1, "only arity-one maps have a matrix");
        RationalMatrix::from_columns(self.target_dim, &self.values)
    }
}

impl Default for AlternatingMap {
    fn default() -> Self {
        Self::zero(0, 0, 0)
    }
}

impl AlternatingMap {
    /// Same shape, new values.
    pub fn with_values(&self, values: Vec<Vec<Rational>>) -> Self {
        Self {
            domain_dim: self.domain_dim,
            arity: self.arity,
            target_dim: self.target_dim,
            values,
        }
    }
}

/// Which summand of `g ⊕ h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::G => "g",
            Side::H => "h",
        }
    }
}

/// Coordinates on `V = g ⊕ h`: g basis first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split {
    pub g: usize,
    pub h: usize,
}

impl Split {
    pub fn new(g: usize, h: usize) -> Self {
        Self { g, h }
    }

    pub fn total(&self) -> usize {
        self.g + self.h
    }

    /// `(#g-indices, #h-indices)` of a basis tuple.
    pub fn bidegree(&self, idx: &[usize]) -> (usize, usize) {
        let k = idx.iter().filter(|&&i| i < self.g).count();
        (k, idx.len() - k)
    }

    pub fn side_range(&self, side: Side) -> std::ops::Range<usize> {
        match side {
            Side::G => 0..self.g,
            Side::H => self.g..self.total(),
        }
    }

    pub fn side_dim(&self, side: Side) -> usize {
        match side {
            Side::G => self.g,
            Side::H => self.h,
        }
    }

    /// `(x, 0)`
    pub fn inject_g(&self, x: &[Rational]) -> Vec<Rational> {
        let mut v = zero_vec(self.total());
        v[..self.g].clone_from_slice(x);
        v
    }

    /// `(0, u)`
    pub fn inject_h(&self, u: &[Rational]) -> Vec<Rational> {
        let mut v = zero_vec(self.total());
        v[self.g..].clone_from_slice(u);
        v
    }

    pub fn g_part<'a>(&self, v: &'a [Rational]) -> &'a [Rational] {
        &v[..self.g]
    }

    pub fn h_part<'a>(&self, v: &'a [Rational]) -> &'a [Rational] {
        &v[self.g..]
    }

    /// Keeps only the blocks for which `keep(k, l, side)` holds.
    pub fn filter_blocks(
        &self,
        f: &AlternatingMap,
        keep: impl Fn(usize, usize, Side) -> bool,
    ) -> AlternatingMap {
        assert_eq!(f.domain_dim(), self.total());
        assert_eq!(f.target_dim(), self.total());
        let values = f
            .entries()
            .map(|(idx, v)| {
                let (k, l) = self.bidegree(&idx);
                let mut out = v.to_vec();
                for side in [Side::G, Side::H] {
                    if !keep(k, l, side) {
                        for x in &mut out[self.side_range(side)] {
                            *x = Rational::zero();
                        }
                    }
                }
                out
            })
            .collect();
        f.with_values(values)
    }

    /// Nonzero blocks `(k, l, side)` of a map on `V`.
    pub fn nonzero_blocks(&self, f: &AlternatingMap) -> Vec<(usize, usize, Side)> {
        let mut out = Vec::new();
        for (idx, v) in f.entries() {
            let (k, l) = self.bidegree(&idx);
            for side in [Side::G, Side::H] {
                if !is_zero_vec(&v[self.side_range(side)]) && !out.contains(&(k, l, side)) {
                    out.push((k, l, side));
                }
            }
        }
        out.sort();
        out
    }

    /// The projection onto `F = ⊕ Hom(∧^n g, h)`.
    pub fn project_f(&self, f: &AlternatingMap) -> AlternatingMap {
        self.filter_blocks(f, |_, l, side| l == 0 && side == Side::H)
    }

    /// Embeds `θ: ∧^n g → h` as a map on `V`.
    pub fn embed_g_to_h(&self, theta: &AlternatingMap) -> AlternatingMap {
        assert_eq!(theta.domain_dim(), self.g);
        assert_eq!(theta.target_dim(), self.h);
        AlternatingMap::from_fn(self.total(), theta.arity(), self.total(), |c| {
            if c.iter().all(|&i| i < self.g) {
                self.inject_h(theta.get(c))
            } else {
                zero_vec(self.total())
            }
        })
    }

    /// Embeds `f: ∧^n g → g` as a map on `V`.
    pub fn embed_g_to_g(&self, f: &AlternatingMap) -> AlternatingMap {
        assert_eq!(f.domain_dim(), self.g);
        assert_eq!(f.target_dim(), self.g);
        AlternatingMap::from_fn(self.total(), f.arity(), self.total(), |c| {
            if c.iter().all(|&i| i < self.g) {
                self.inject_g(f.get(c))
            } else {
                zero_vec(self.total())
            }
        })
    }

    /// Restriction of a map on `V` to g-arguments, h-component of the output.
    pub fn restrict_g_to_h(&self, f: &AlternatingMap) -> AlternatingMap {
        AlternatingMap::from_fn(self.g, f.arity(), self.h, |c| {
            self.h_part(f.get(c)).to_vec()
        })
    }

    /// Restriction of a map on `V` to g-arguments, g-component of the output.
    pub fn restrict_g_to_g(&self, f: &AlternatingMap) -> AlternatingMap {
        AlternatingMap::from_fn(self.g, f.arity(), self.g, |c| {
            self.g_part(f.get(c)).to_vec()
        })
    }
}

/// `κ: ∧^k g ⊗ ∧^l h → g` or `h`, stored on pairs of sorted tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedMap {
    split: Split,
    k: usize,
    l: usize,
    target: Side,
    values: Vec<Vec<Rational>>,
}

impl BigradedMap {
    pub fn zero(split: Split, k: usize, l: usize, target: Side) -> Self {
        let n = binomial(split.g, k) * binomial(split.h, l);
        Self {
            split,
            k,
            l,
            target,
            values: vec![zero_vec(split.side_dim(target)); n],
        }
    }

    pub fn from_fn(
        split: Split,
        k: usize,
        l: usize,
        target: Side,
        mut f: impl FnMut(&[usize], &[usize]) -> Vec<Rational>,
    ) -> Self {
        let mut m = Self::zero(split, k, l, target);
        let hs = combinations(split.h, l);
        for (ia, a) in combinations(split.g, k).iter().enumerate() {
            for (ib, b) in hs.iter().enumerate() {
                let v = f(a, b);
                assert_eq!(v.len(), split.side_dim(target));
                m.values[ia * hs.len() + ib] = v;
            }
        }
        m
    }

    pub fn split(&self) -> Split {
        self.split
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn target(&self) -> Side {
        self.target
    }

    /// Value on sorted g-indices `a` and sorted h-indices `b` (h-local numbering).
    pub fn get(&self, a: &[usize], b: &[usize]) -> &[Rational] {
        let r = combination_rank(self.split.g, a) * binomial(self.split.h, self.l)
            + combination_rank(self.split.h, b);
        &self.values[r]
    }

    pub fn set(&mut self, a: &[usize], b: &[usize], v: Vec<Rational>) {
        assert_eq!(v.len(), self.split.side_dim(self.target));
        let r = combination_rank(self.split.g, a) * binomial(self.split.h, self.l)
            + combination_rank(self.split.h, b);
        self.values[r] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }

    pub fn num_coords(split: Split, k: usize, l: usize, target: Side) -> usize {
        binomial(split.g, k) * binomial(split.h, l) * split.side_dim(target)
    }

    /// Values in (g-tuple, h-tuple, target index) order.
    pub fn to_flat(&self) -> Vec<Rational> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn from_flat(split: Split, k: usize, l: usize, target: Side, flat: &[Rational]) -> Self {
        let t = split.side_dim(target);
        assert_eq!(
            flat.len(),
            Self::num_coords(split, k, l, target),
            "flat length mismatch"
        );
        let mut m = Self::zero(split, k, l, target);
        if t > 0 {
            for (slot, chunk) in m.values.iter_mut().zip(flat.chunks(t)) {
                *slot = chunk.to_vec();
            }
        }
        m
    }

    /// The lift `κ̂ ∈ Hom(∧^{k+l}(g ⊕ h), g ⊕ h)`.
    pub fn lift(&self) -> AlternatingMap {
        let s = self.split;
        AlternatingMap::from_fn(s.total(), self.k + self.l, s.total(), |c| {
            if s.bidegree(c) != (self.k, self.l) {
                return zero_vec(s.total());
            }
            let a = &c[..self.k];
            let b: Vec<usize> = c[self.k..].iter().map(|i| i - s.g).collect();
            let v = self.get(a, &b);
            match self.target {
                Side::G => s.inject_g(v),
                Side::H => s.inject_h(v),
            }
        })
    }

    /// Reads the `(k, l) → target` block of a map on `V`.
    pub fn from_block(split: Split, f: &AlternatingMap, k: usize, l: usize, target: Side) -> Self {
        Self::from_fn(split, k, l, target, |a, b| {
            let mut idx = a.to_vec();
            idx.extend(b.iter().map(|i| i + split.g));
            f.get(&idx)[split.side_range(target)].to_vec()
        })
    }
}

/// `C^n(g, h, ρ) = Hom(∧^n g, g) ⊕ ⊕_{i=1}^n Hom(∧^{n−i} g ⊗ ∧^i h, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCochain {
    pub n: usize,
    pub f0: BigradedMap,
    /// `parts[i − 1]` has bidegree `(n − i, i)` and target h.
    pub parts: Vec<BigradedMap>,
}

impl MixedCochain {
    pub fn zero(split: Split, n: usize) -> Self {
        Self {
            n,
            f0: BigradedMap::zero(split, n, 0, Side::G),
            parts: (1..=n)
                .map(|i| BigradedMap::zero(split, n - i, i, Side::H))
                .collect(),
        }
    }

    pub fn lift(&self) -> AlternatingMap {
        self.parts
            .iter()
            .fold(self.f0.lift(), |acc, p| acc.add(&p.lift()))
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.parts.iter().all(BigradedMap::is_zero)
    }

    pub fn split(&self) -> Split {
        self.f0.split()
    }

    /// Dimension of `C^n(g, h, ρ)`.
    pub fn space_dim(split: Split, n: usize) -> usize {
        BigradedMap::num_coords(split, n, 0, Side::G)
            + (1..=n)
                .map(|i| BigradedMap::num_coords(split, n - i, i, Side::H))
                .sum::<usize>()
    }

    /// Coordinates ordered by component `f0, f1, …, fn`.
    pub fn to_flat(&self) -> Vec<Rational> {
        let mut out = self.f0.to_flat();
        for p in &self.parts {
            out.extend(p.to_flat());
        }
        out
    }

    pub fn from_flat(split: Split, n: usize, flat: &[Rational]) -> Self {
        assert_eq!(
            flat.len(),
            Self::space_dim(split, n),
            "flat length mismatch"
        );
        let mut at = BigradedMap::num_coords(split, n, 0, Side::G);
        let f0 = BigradedMap::from_flat(split, n, 0, Side::G, &flat[..at]);
        let parts = (1..=n)
            .map(|i| {
                let len = BigradedMap::num_coords(split, n - i, i, Side::H);
                let p = BigradedMap::from_flat(split, n - i, i, Side::H, &flat[at..at + len]);
                at += len;
                p
            })
            .collect();
        Self { n, f0, parts }
    }

    pub fn add(&self, o: &Self) -> Self {
        let flat: Vec<Rational> = self
            .to_flat()
            .iter()
            .zip(o.to_flat())
            .map(|(a, b)| a + b)
            .collect();
        Self::from_flat(self.split(), self.n, &flat)
    }
}

/// Whether block `(k, l) → side` belongs to the mixed cochain space 𝓜.
pub fn in_m_block(_k: usize, l: usize, side: Side) -> bool {
    match side {
        Side::G => l == 0,
        Side::H => l >= 1,
    }
}

/// Splits a map on `V` into its 𝓜-components and its `Hom(∧^n g, h)` block.
/// Any other nonzero block is reported as [`Error::NotInM`].
pub fn project_components(split: Split, f: &AlternatingMap) -> Result<(MixedCochain, BigradedMap)> {
    let n = f.arity();
    for (k, l, side) in split.nonzero_blocks(f) {
        let allowed = in_m_block(k, l, side) || (l == 0 && side == Side::H);
        if !allowed {
            return Err(Error::NotInM {
                k,
                l,
                target: side.name(),
            });
        }
    }
    let f0 = BigradedMap::from_block(split, f, n, 0, Side::G);
    let parts = (1..=n)
        .map(|i| BigradedMap::from_block(split, f, n - i, i, Side::H))
        .collect();
    let f_block = BigradedMap::from_block(split, f, n, 0, Side::H);
    Ok((MixedCochain { n, f0, parts }, f_block))
}
