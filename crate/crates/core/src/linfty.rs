//! Higher derived brackets on `s⁻¹𝓜 ⊕ F` and their twists.
//!
//! `𝓜` sits inside the NR algebra of `V = g ⊕ h`, `F = ⊕ Hom(∧^n g, h)` is
//! abelian, `P` is the block projection onto `F` and the differential of the
//! V-data is zero. Degrees: `s⁻¹f` with `f` of arity `a` has degree `a − 2`;
//! an `F` piece of arity `a` has degree `a − 1`, so `D` has degree 0.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::multilinear::{koszul_sign, project_components, shuffles, AlternatingMap, Split};
use crate::nr::nr_bracket;
use crate::structures::{direct_structure_check, LieActTriple, LieAlgebra, RelDiffStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceKind {
    /// `s⁻¹f` with `f ∈ 𝓜`.
    Susp,
    /// An element of `F`.
    F,
}

/// A homogeneous summand of an [`LInftyElement`], stored as a map on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub map: AlternatingMap,
}

impl Piece {
    pub fn degree(&self) -> i64 {
        let a = self.map.arity() as i64;
        match self.kind {
            PieceKind::Susp => a - 2,
            PieceKind::F => a - 1,
        }
    }
}

/// Element of `s⁻¹𝓜 ⊕ F`, kept as a sum of pieces with distinct
/// `(kind, arity)` and no zero pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInftyElement {
    split: Split,
    pieces: Vec<Piece>,
}

impl LInftyElement {
    pub fn zero(split: Split) -> Self {
        Self {
            split,
            pieces: Vec::new(),
        }
    }

    /// `s⁻¹f`; fails with `NotInM` unless `f` lies in `𝓜`.
    pub fn susp(split: Split, f: AlternatingMap) -> Result<Self> {
        check_ambient(split, &f)?;
        let (_, fblock) = project_components(split, &f)?;
        if !fblock.is_zero() {
            return Err(Error::NotInM {
                k: f.arity(),
                l: 0,
                target: "h",
            });
        }
        Ok(Self::zero(split).with_piece(PieceKind::Susp, f))
    }

    /// An element of `F` given as a map on `V`; only the `∧^n g → h` block may be nonzero.
    pub fn f_part(split: Split, f: AlternatingMap) -> Result<Self> {
        check_ambient(split, &f)?;
        if let Some(&(k, l, side)) = split
            .nonzero_blocks(&f)
            .iter()
            .find(|&&(_, l, side)| l != 0 || side != crate::multilinear::Side::H)
        {
            return Err(Error::NotInM {
                k,
                l,
                target: side.name(),
            });
        }
        Ok(Self::zero(split).with_piece(PieceKind::F, f))
    }

    /// `θ: ∧^n g → h` as an element of `F`.
    pub fn from_g_to_h(split: Split, theta: &AlternatingMap) -> Self {
        Self::zero(split).with_piece(PieceKind::F, split.embed_g_to_h(theta))
    }

    /// `(s⁻¹f, θ)` for a mixed cochain `f` (lifted) and `θ: ∧^{n−1} g → h`.
    pub fn pair(split: Split, f: AlternatingMap, theta: Option<&AlternatingMap>) -> Result<Self> {
        let mut e = Self::susp(split, f)?;
        if let Some(t) = theta {
            e = e.add(&Self::from_g_to_h(split, t));
        }
        Ok(e)
    }

    fn with_piece(mut self, kind: PieceKind, map: AlternatingMap) -> Self {
        self.push(kind, map);
        self
    }

    fn push(&mut self, kind: PieceKind, map: AlternatingMap) {
        if map.is_zero() {
            return;
        }
        let arity = map.arity();
        if let Some(i) = self
            .pieces
            .iter()
            .position(|p| p.kind == kind && p.map.arity() == arity)
        {
            let sum = self.pieces[i].map.add(&map);
            if sum.is_zero() {
                self.pieces.remove(i);
            } else {
                self.pieces[i].map = sum;
            }
        } else {
            self.pieces.push(Piece { kind, map });
            self.pieces.sort_by_key(|p| (p.kind, p.map.arity()));
        }
    }

    pub fn split(&self) -> Split {
        self.split
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The common degree of all pieces, `None` for zero. Inhomogeneous
    /// elements give `DegreeMismatch`.
    pub fn degree(&self) -> Result<Option<i64>> {
        let mut it = self.pieces.iter().map(Piece::degree);
        let Some(d) = it.next() else {
            return Ok(None);
        };
        if it.any(|e| e != d) {
            return Err(Error::DegreeMismatch(format!(
                "element mixes degrees {:?}",
                self.pieces.iter().map(Piece::degree).collect::<Vec<_>>()
            )));
        }
        Ok(Some(d))
    }

    /// The `s⁻¹` component of the given arity (zero map if absent).
    pub fn susp_map(&self, arity: usize) -> AlternatingMap {
        self.component(PieceKind::Susp, arity)
    }

    /// The `F` component of the given arity as a map on `V`.
    pub fn f_map(&self, arity: usize) -> AlternatingMap {
        self.component(PieceKind::F, arity)
    }

    fn component(&self, kind: PieceKind, arity: usize) -> AlternatingMap {
        self.pieces
            .iter()
            .find(|p| p.kind == kind && p.map.arity() == arity)
            .map(|p| p.map.clone())
            .unwrap_or_else(|| AlternatingMap::zero(self.split.total(), arity, self.split.total()))
    }

    /// Largest arity of an `s⁻¹` piece (0 if none).
    pub fn max_susp_arity(&self) -> usize {
        self.pieces
            .iter()
            .filter(|p| p.kind == PieceKind::Susp)
            .map(|p| p.map.arity())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.split, o.split, "elements over different spaces");
        let mut out = self.clone();
        for p in &o.pieces {
            out.push(p.kind, p.map.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.split);
        for p in &self.pieces {
            out.push(p.kind, p.map.scale(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn single(split: Split, p: &Piece) -> Self {
        Self::zero(split).with_piece(p.kind, p.map.clone())
    }
}

fn check_ambient(split: Split, f: &AlternatingMap) -> Result<()> {
    if f.domain_dim() != split.total() || f.target_dim() != split.total() {
        return Err(Error::DimensionMismatch(format!(
            "map on a {}-dimensional space, expected {}",
            f.domain_dim(),
            split.total()
        )));
    }
    Ok(())
}

/// Bracket family of an L∞-algebra on `s⁻¹𝓜 ⊕ F`.
pub trait LInftyBrackets {
    fn split(&self) -> Split;
    fn bracket(&self, args: &[LInftyElement]) -> Result<LInftyElement>;
}

/// `l_k` on single pieces. `None` means zero.
fn bracket_pieces(split: Split, ps: &[&Piece]) -> Option<Piece> {
    let k = ps.len();
    let susp: Vec<usize> = (0..k).filter(|&i| ps[i].kind == PieceKind::Susp).collect();
    match (k, susp.len()) {
        (1, 1) => Some(Piece {
            kind: PieceKind::F,
            map: split.project_f(&ps[0].map),
        }),
        (2, 2) => {
            let (f, g) = (&ps[0].map, &ps[1].map);
            let b = nr_bracket(f, g);
            let map = if f.nr_degree().rem_euclid(2) == 0 {
                b
            } else {
                b.scale(&-Rational::one())
            };
            Some(Piece {
                kind: PieceKind::Susp,
                map,
            })
        }
        (k, 1) if k >= 2 => {
            let j = susp[0];
            let mut perm = vec![j];
            perm.extend((0..k).filter(|&i| i != j));
            let degrees: Vec<i64> = ps.iter().map(|p| p.degree()).collect();
            let sign = koszul_sign(&perm, &degrees);
            let mut acc = ps[j].map.clone();
            for &i in &perm[1..] {
                acc = nr_bracket(&acc, &ps[i].map);
                if acc.is_zero() {
                    return None;
                }
            }
            let map = split.project_f(&acc);
            let map = if sign < 0 {
                map.scale(&-Rational::one())
            } else {
                map
            };
            Some(Piece {
                kind: PieceKind::F,
                map,
            })
        }
        _ => None,
    }
}

/// The untwisted derived brackets `l_k`.
#[derive(Clone, Copy, Debug)]
pub struct DerivedBrackets {
    pub split: Split,
}

impl LInftyBrackets for DerivedBrackets {
    fn split(&self) -> Split {
        self.split
    }

    fn bracket(&self, args: &[LInftyElement]) -> Result<LInftyElement> {
        derived_bracket(self.split, args)
    }
}

/// `l_k(x_1, …, x_k)` with `k = args.len()`, extended multilinearly over pieces.
pub fn derived_bracket(split: Split, args: &[LInftyElement]) -> Result<LInftyElement> {
    assert!(!args.is_empty(), "l_0 is not defined");
    for a in args {
        if a.split != split {
            return Err(Error::DimensionMismatch(
                "bracket arguments live over different spaces".into(),
            ));
        }
        a.degree()?;
    }
    let mut out = LInftyElement::zero(split);
    if args.iter().any(LInftyElement::is_zero) {
        return Ok(out);
    }
    let mut choice = vec![0usize; args.len()];
    loop {
        let ps: Vec<&Piece> = args
            .iter()
            .zip(&choice)
            .map(|(a, &c)| &a.pieces[c])
            .collect();
        if let Some(p) = bracket_pieces(split, &ps) {
            out.push(p.kind, p.map);
        }
        let mut pos = 0;
        loop {
            if pos == args.len() {
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < args[pos].pieces.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// All count vectors `c` with `Σ c = n` over `r` slots.
fn compositions(r: usize, n: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(r - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn inv_factorial_product(c: &[usize]) -> Rational {
    let mut d = Rational::one();
    for &ci in c {
        for m in 2..=ci {
            d *= Rational::from_integer((m as i64).into());
        }
    }
    d.recip()
}

/// `Σ_k 1/k! l_k(x, …, x)` for a degree-0 element, summed up to `k_max`.
fn exponential_sum(
    brackets: &dyn LInftyBrackets,
    x: &LInftyElement,
    k_max: usize,
) -> Result<LInftyElement> {
    match x.degree()? {
        None => return Ok(LInftyElement::zero(x.split)),
        Some(0) => {}
        Some(d) => {
            return Err(Error::DegreeMismatch(format!(
                "Maurer-Cartan elements have degree 0, got {d}"
            )))
        }
    }
    let singles: Vec<LInftyElement> = x
        .pieces
        .iter()
        .map(|p| LInftyElement::single(x.split, p))
        .collect();
    let mut out = LInftyElement::zero(x.split);
    for k in 1..=k_max {
        for c in compositions(singles.len(), k) {
            let mut args = Vec::with_capacity(k);
            for (s, &ci) in singles.iter().zip(&c) {
                args.extend(std::iter::repeat_n(s.clone(), ci));
            }
            let term = brackets.bracket(&args)?;
            out = out.add(&term.scale(&inv_factorial_product(&c)));
        }
    }
    Ok(out)
}

/// Upper bound on the number of arguments of a nonzero bracket that
/// contains a single `s⁻¹` piece of arity at most `a`: each `F` argument
/// either consumes an h-slot or, once, the g-valued output.
fn arity_bound(max_susp_arity: usize) -> usize {
    max_susp_arity.max(1) + 2
}

/// `Σ_k 1/k! l_k(α, …, α)`.
pub fn mc_sum(alpha: &LInftyElement) -> Result<LInftyElement> {
    exponential_sum(
        &DerivedBrackets { split: alpha.split },
        alpha,
        arity_bound(alpha.max_susp_arity()),
    )
}

/// `α = (s⁻¹(π̂ + ρ̂ + μ̂), D̂)` for raw data.
pub fn structure_element(t: &LieActTriple, d: &RationalMatrix) -> Result<LInftyElement> {
    let s = t.split();
    Ok(LInftyElement::susp(s, t.big_pi())?
        .add(&LInftyElement::from_g_to_h(s, &AlternatingMap::linear(d))))
}

/// Whether `(s⁻¹(π+ρ+μ), D)` solves the Maurer–Cartan equation. The data
/// are not validated first.
pub fn mc_check_linfty(
    pi: &AlternatingMap,
    mu: &AlternatingMap,
    rho: &[RationalMatrix],
    d: &RationalMatrix,
) -> bool {
    let t = LieActTriple::new_unchecked(
        LieAlgebra::new_unchecked(pi.clone()),
        LieAlgebra::new_unchecked(mu.clone()),
        rho.to_vec(),
    );
    let alpha = structure_element(&t, d).expect("structure data lie in the mixed space");
    mc_sum(&alpha)
        .expect("structure element has degree 0")
        .is_zero()
}

/// The twisted brackets `l_k^α(x) = Σ_n 1/n! l_{k+n}(α^n, x)`.
#[derive(Clone, Debug)]
pub struct TwistedLInfty {
    alpha: LInftyElement,
    singles: Vec<LInftyElement>,
}

impl TwistedLInfty {
    /// Fails with `NotMaurerCartan` unless `α` solves the MC equation.
    pub fn new(alpha: LInftyElement) -> Result<Self> {
        if !mc_sum(&alpha)?.is_zero() {
            return Err(Error::NotMaurerCartan);
        }
        Ok(Self::new_unchecked(alpha))
    }

    /// Twisting data for an already validated relative difference structure.
    pub fn for_structure(s: &RelDiffStructure) -> Self {
        Self::new_unchecked(
            structure_element(&s.triple, &s.d).expect("structure data lie in the mixed space"),
        )
    }

    fn new_unchecked(alpha: LInftyElement) -> Self {
        let singles = alpha
            .pieces
            .iter()
            .map(|p| LInftyElement::single(alpha.split, p))
            .collect();
        Self { alpha, singles }
    }

    pub fn alpha(&self) -> &LInftyElement {
        &self.alpha
    }
}

impl LInftyBrackets for TwistedLInfty {
    fn split(&self) -> Split {
        self.alpha.split
    }

    fn bracket(&self, args: &[LInftyElement]) -> Result<LInftyElement> {
        let split = self.alpha.split;
        let k = args.len();
        let a = args
            .iter()
            .map(LInftyElement::max_susp_arity)
            .chain([self.alpha.max_susp_arity()])
            .max()
            .unwrap_or(0);
        let n_max = arity_bound(a).saturating_sub(k);
        let mut out = LInftyElement::zero(split);
        for n in 0..=n_max {
            for c in compositions(self.singles.len(), n) {
                let mut full = Vec::with_capacity(n + k);
                for (s, &ci) in self.singles.iter().zip(&c) {
                    full.extend(std::iter::repeat_n(s.clone(), ci));
                }
                full.extend(args.iter().cloned());
                let term = derived_bracket(split, &full)?;
                out = out.add(&term.scale(&inv_factorial_product(&c)));
            }
        }
        Ok(out)
    }
}

/// `l_k^α(args)`; checks that `α` is Maurer–Cartan first.
pub fn twisted_bracket(alpha: &LInftyElement, args: &[LInftyElement]) -> Result<LInftyElement> {
    TwistedLInfty::new(alpha.clone())?.bracket(args)
}

/// `Σ_i Σ_{σ ∈ S(i, n−i)} ε(σ) l_{n−i+1}(l_i(x_σ(1..i)), x_σ(i+1..n))`.
pub fn jacobiator(brackets: &dyn LInftyBrackets, xs: &[LInftyElement]) -> Result<LInftyElement> {
    let n = xs.len();
    let mut degrees = Vec::with_capacity(n);
    for x in xs {
        degrees.push(x.degree()?.unwrap_or(0));
    }
    let mut out = LInftyElement::zero(brackets.split());
    for i in 1..=n {
        for sh in shuffles(i, n) {
            let eps = koszul_sign(&sh.perm, &degrees);
            let inner_args: Vec<LInftyElement> =
                sh.perm[..i].iter().map(|&p| xs[p].clone()).collect();
            let inner = brackets.bracket(&inner_args)?;
            if inner.is_zero() {
                continue;
            }
            let mut outer_args = vec![inner];
            outer_args.extend(sh.perm[i..].iter().map(|&p| xs[p].clone()));
            let term = brackets.bracket(&outer_args)?;
            out = if eps < 0 {
                out.add(&term.neg())
            } else {
                out.add(&term)
            };
        }
    }
    Ok(out)
}

/// Checks the generalized Jacobi identity on every multiset of size
/// `1..=max_arity` drawn from `sample`.
pub fn generalized_jacobi_check(
    brackets: &dyn LInftyBrackets,
    max_arity: usize,
    sample: &[LInftyElement],
) -> Result<bool> {
    assert!(
        max_arity <= 4,
        "generalized Jacobi is checked up to arity 4"
    );
    for n in 1..=max_arity {
        for idx in multisets(sample.len(), n) {
            let xs: Vec<LInftyElement> = idx.iter().map(|&i| sample[i].clone()).collect();
            if !jacobiator(brackets, &xs)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn multisets(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, 0, &mut Vec::new(), &mut out);
    out
}

/// A perturbation `(π′, μ′, ρ′, D′)` of a relative difference structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub pi: AlternatingMap,
    pub mu: AlternatingMap,
    pub rho: Vec<RationalMatrix>,
    pub d: RationalMatrix,
}

impl Perturbation {
    pub fn zero(s: &RelDiffStructure) -> Self {
        let (g, h) = (s.triple.g.dim(), s.triple.h.dim());
        Self {
            pi: AlternatingMap::zero(g, 2, g),
            mu: AlternatingMap::zero(h, 2, h),
            rho: vec![RationalMatrix::zeros(h, h); g],
            d: RationalMatrix::zeros(h, g),
        }
    }

    /// `−(π, μ, ρ, D)`.
    pub fn negative_of(s: &RelDiffStructure) -> Self {
        let m = -Rational::one();
        Self {
            pi: s.triple.g.bracket_map().scale(&m),
            mu: s.triple.h.bracket_map().scale(&m),
            rho: s.triple.rho.iter().map(|r| r.scale(&m)).collect(),
            d: s.d.scale(&m),
        }
    }
}

/// The two answers of [`deformation_mc_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeformationMcRoutes {
    pub direct: bool,
    pub twisted: bool,
}

/// Direct validation of the sum versus the twisted MC equation.
pub fn deformation_mc_routes(
    base: &RelDiffStructure,
    p: &Perturbation,
) -> Result<DeformationMcRoutes> {
    let pi = base.triple.g.bracket_map().add(&p.pi);
    let mu = base.triple.h.bracket_map().add(&p.mu);
    let rho: Vec<RationalMatrix> = base
        .triple
        .rho
        .iter()
        .zip(&p.rho)
        .map(|(a, b)| a + b)
        .collect();
    let d = &base.d + &p.d;
    let direct = direct_structure_check(&pi, &mu, &rho, &d);

    let tw = TwistedLInfty::new(structure_element(&base.triple, &base.d)?)?;
    let pt = LieActTriple::new_unchecked(
        LieAlgebra::new_unchecked(p.pi.clone()),
        LieAlgebra::new_unchecked(p.mu.clone()),
        p.rho.clone(),
    );
    let x = structure_element(&pt, &p.d)?;
    let k_max = arity_bound(x.max_susp_arity().max(tw.alpha.max_susp_arity()));
    let twisted = exponential_sum(&tw, &x, k_max)?.is_zero();
    Ok(DeformationMcRoutes { direct, twisted })
}

/// Whether the perturbed data is again a relative difference structure;
/// `InternalInconsistency` if the two routes disagree.
pub fn deformation_mc_check(base: &RelDiffStructure, p: &Perturbation) -> Result<bool> {
    let r = deformation_mc_routes(base, p)?;
    if r.direct != r.twisted {
        return Err(Error::InternalInconsistency(format!(
            "direct validation says {}, twisted Maurer-Cartan says {}",
            r.direct, r.twisted
        )));
    }
    Ok(r.direct)
}
