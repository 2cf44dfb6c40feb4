//! Coboundary operators and cohomology.
//!
//! Five complexes live here: the LieAct complex (`𝔇`), the operator complex
//! (Chevalley–Eilenberg with `ρ_D`), the relative difference complex (`δ`),
//! the regular complex of a difference Lie algebra (`δ̄`) and the complex
//! with coefficients (`δ_ϱ`). Each high-risk sign is computed twice: `δ` in
//! closed form and through the twisted `l₁`, `δ̄` directly and as `𝔭∘δ∘𝔦`,
//! `δ_ϱ` directly and inside the semidirect product.
//!
//! Degree-1 cochains carry no `θ` component.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    add_assign, axpy, image_basis, kernel_basis, quotient_dim, unit_vec, zero_vec, Rational,
    RationalMatrix, SubspaceBasis,
};
use crate::linfty::{LInftyBrackets, LInftyElement, PieceKind, TwistedLInfty};
use crate::multilinear::{
    binomial, combinations, project_components, AlternatingMap, BigradedMap, MixedCochain, Side,
    Split,
};
use crate::nr::nr_bracket;
use crate::structures::{
    courant_bracket, d_pi_rho, rho_d_matrices, DiffRepresentation, DifferenceLieAlgebra,
    LieActTriple, LieAlgebra, RelDiffStructure,
};

fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `dθ(x_1…x_{n+1}) = Σ (−1)^{i+1} ρ(x_i)θ(…x̂_i…) + Σ_{i<j} (−1)^{i+j} θ([x_i,x_j], …x̂_i…x̂_j…)`.
pub fn ce_coboundary(
    g: &LieAlgebra,
    rep: &[RationalMatrix],
    theta: &AlternatingMap,
) -> AlternatingMap {
    let n = theta.arity();
    assert!(
        n >= 1,
        "cochains of degree 0 are not part of these complexes"
    );
    assert_eq!(theta.domain_dim(), g.dim());
    let w = theta.target_dim();
    AlternatingMap::from_fn(g.dim(), n + 1, w, |c| {
        let mut out = zero_vec(w);
        let mut rest = Vec::with_capacity(n);
        for i in 0..=n {
            rest.clear();
            rest.extend(
                c.iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i)
                    .map(|(_, &x)| x),
            );
            let v = rep[c[i]].mul_vec(theta.get(&rest));
            axpy(&mut out, &sign(i as i64), &v);
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let b = g.bracket_basis(c[i], c[j]);
                if b.iter().all(Zero::is_zero) {
                    continue;
                }
                rest.clear();
                rest.extend(
                    c.iter()
                        .enumerate()
                        .filter(|&(p, _)| p != i && p != j)
                        .map(|(_, &x)| x),
                );
                let v = theta.eval_first_vector(&b, &rest);
                axpy(&mut out, &sign((i + j) as i64), &v);
            }
        }
        out
    })
}

// ---------------------------------------------------------------------------
// LieAct triples

/// `𝔇f = (−1)^{n−1}[Π, f]_NR`, computed on lifts.
pub fn lieact_coboundary(t: &LieActTriple, f: &MixedCochain) -> MixedCochain {
    let br = nr_bracket(&t.big_pi(), &f.lift()).scale(&sign(f.n as i64 - 1));
    let (m, fblock) =
        project_components(t.split(), &br).expect("the mixed space is closed under the bracket");
    debug_assert!(fblock.is_zero());
    m
}

/// `𝔇f` assembled component by component:
/// `(𝔇f)_0 = ±[π, f_0]`, `(𝔇f)_1 = ±([π+ρ, f_1] + [ρ, f_0])`,
/// `(𝔇f)_i = ±([π+ρ, f_i] + [μ, f_{i−1}])`, `(𝔇f)_n = ±([ρ, f_n] + [μ, f_{n−1}])`,
/// `(𝔇f)_{n+1} = ±[μ, f_n]`, with `± = (−1)^{n−1}`.
pub fn lieact_coboundary_components(t: &LieActTriple, f: &MixedCochain) -> MixedCochain {
    let s = t.split();
    let n = f.n;
    let (pi, rho, mu) = (t.pi_hat(), t.rho_hat(), t.mu_hat());
    let pi_rho = pi.add(&rho);
    let comp: Vec<AlternatingMap> = std::iter::once(f.f0.lift())
        .chain(f.parts.iter().map(BigradedMap::lift))
        .collect();
    let eps = sign(n as i64 - 1);
    let read = |m: AlternatingMap, i: usize| {
        let side = if i == 0 { Side::G } else { Side::H };
        BigradedMap::from_block(s, &m.scale(&eps), n + 1 - i, i, side)
    };
    let f0 = read(nr_bracket(&pi, &comp[0]), 0);
    let mut parts = Vec::with_capacity(n + 1);
    for i in 1..=n + 1 {
        let m = if i == 1 {
            nr_bracket(&pi_rho, &comp[1]).add(&nr_bracket(&rho, &comp[0]))
        } else if i == n + 1 {
            nr_bracket(&mu, &comp[n])
        } else if i == n {
            nr_bracket(&rho, &comp[n]).add(&nr_bracket(&mu, &comp[n - 1]))
        } else {
            nr_bracket(&pi_rho, &comp[i]).add(&nr_bracket(&mu, &comp[i - 1]))
        };
        parts.push(read(m, i));
    }
    MixedCochain {
        n: n + 1,
        f0,
        parts,
    }
}

// ---------------------------------------------------------------------------
// Relative difference Lie algebras

/// `(f, θ)` with `f ∈ C^n(g, h, ρ)` and `θ: ∧^{n−1} g → h` (absent for `n = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelCochain {
    pub mixed: MixedCochain,
    pub theta: Option<AlternatingMap>,
}

impl RelCochain {
    pub fn zero(split: Split, n: usize) -> Self {
        Self {
            mixed: MixedCochain::zero(split, n),
            theta: (n >= 2).then(|| AlternatingMap::zero(split.g, n - 1, split.h)),
        }
    }

    pub fn n(&self) -> usize {
        self.mixed.n
    }

    pub fn space_dim(split: Split, n: usize) -> usize {
        let theta = if n >= 2 {
            binomial(split.g, n - 1) * split.h
        } else {
            0
        };
        MixedCochain::space_dim(split, n) + theta
    }

    /// Mixed components first, then `θ`.
    pub fn to_flat(&self) -> Vec<Rational> {
        let mut out = self.mixed.to_flat();
        if let Some(t) = &self.theta {
            out.extend(t.to_flat());
        }
        out
    }

    pub fn from_flat(split: Split, n: usize, flat: &[Rational]) -> Self {
        assert_eq!(
            flat.len(),
            Self::space_dim(split, n),
            "flat length mismatch"
        );
        let m = MixedCochain::space_dim(split, n);
        Self {
            mixed: MixedCochain::from_flat(split, n, &flat[..m]),
            theta: (n >= 2).then(|| AlternatingMap::from_flat(split.g, n - 1, split.h, &flat[m..])),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mixed.is_zero() && self.theta.as_ref().is_none_or(AlternatingMap::is_zero)
    }
}

/// `T(f)(x) = (−1)^n (Σ_{S ≠ ∅} f(x with D x_i in place for i ∈ S) − D f_0(x))`,
/// where the sum runs over nonempty sets of argument positions.
pub fn t_operator(s: &RelDiffStructure, f: &MixedCochain) -> AlternatingMap {
    let sp = s.split();
    let n = f.n;
    let lifted = f.lift();
    let eps = sign(n as i64);
    AlternatingMap::from_fn(sp.g, n, sp.h, |c| {
        let mut out = zero_vec(sp.h);
        for mask in 1u32..(1 << n) {
            let args: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        sp.inject_h(&s.d.column(c[i]))
                    } else {
                        unit_vec(sp.total(), c[i])
                    }
                })
                .collect();
            add_assign(&mut out, sp.h_part(&lifted.eval(&args)));
        }
        let df0 = s.d.mul_vec(f.f0.get(c, &[]));
        axpy(&mut out, &-Rational::one(), &df0);
        out.iter().map(|x| x * &eps).collect()
    })
}

/// `T(f) = (−1)^n Σ_{k=1}^{n+1} (1/k!) P(ad_D̂^k f̂)` with `ad_D̂(X) = [X, D̂]_NR`.
pub fn t_operator_bracket(s: &RelDiffStructure, f: &MixedCochain) -> AlternatingMap {
    let sp = s.split();
    let d = s.d_hat();
    let mut acc = f.lift();
    let mut total = AlternatingMap::zero(sp.total(), f.n, sp.total());
    let mut fact = Rational::one();
    for k in 1..=f.n + 1 {
        acc = nr_bracket(&acc, &d);
        fact *= Rational::from_integer((k as i64).into());
        total = total.add(&sp.project_f(&acc).scale(&fact.recip()));
    }
    sp.restrict_g_to_h(&total).scale(&sign(f.n as i64))
}

/// `δ(f, θ) = (𝔇f, d^CE_{ρ_D} θ + T(f))`.
pub fn rel_diff_delta(s: &RelDiffStructure, c: &RelCochain) -> RelCochain {
    let rho_d = rho_d_matrices(&s.triple, &s.d);
    rel_diff_delta_with(s, &rho_d, c)
}

fn rel_diff_delta_with(
    s: &RelDiffStructure,
    rho_d: &[RationalMatrix],
    c: &RelCochain,
) -> RelCochain {
    let mixed = lieact_coboundary(&s.triple, &c.mixed);
    let mut theta = t_operator(s, &c.mixed);
    if let Some(t) = &c.theta {
        theta = theta.add(&ce_coboundary(&s.triple.g, rho_d, t));
    }
    RelCochain {
        mixed,
        theta: Some(theta),
    }
}

/// `δ(f, θ) = (−1)^{n−2} l₁^{(s⁻¹Π, D)}(s⁻¹f, θ)`.
pub fn rel_diff_delta_twisted(tw: &TwistedLInfty, c: &RelCochain) -> Result<RelCochain> {
    let sp = tw.split();
    let n = c.n();
    let x = LInftyElement::pair(sp, c.mixed.lift(), c.theta.as_ref())?;
    let y = tw.bracket(&[x])?.scale(&sign(n as i64 - 2));
    let mut out = RelCochain::zero(sp, n + 1);
    for p in y.pieces() {
        match (p.kind, p.map.arity()) {
            (PieceKind::Susp, a) if a == n + 1 => {
                let (m, fb) = project_components(sp, &p.map)?;
                if !fb.is_zero() {
                    return Err(Error::InternalInconsistency(
                        "twisted differential left the mixed space".into(),
                    ));
                }
                out.mixed = m;
            }
            (PieceKind::F, a) if a == n => out.theta = Some(sp.restrict_g_to_h(&p.map)),
            (kind, a) => {
                return Err(Error::InternalInconsistency(format!(
                    "twisted differential produced a {kind:?} piece of arity {a} from degree {n}"
                )))
            }
        }
    }
    Ok(out)
}

/// `d^CE_{ρ_D} f = (−1)^{k−1}(d_{π+ρ} f + ⟦D, f⟧)` for `f: ∧^k g → h`.
pub fn danddt_check(s: &RelDiffStructure, f: &AlternatingMap) -> bool {
    let lhs = ce_coboundary(&s.triple.g, &rho_d_matrices(&s.triple, &s.d), f);
    lhs == danddt_rhs(s, f)
}

/// `(−1)^{k−1}(d_{π+ρ} f + ⟦D, f⟧)`.
pub fn danddt_rhs(s: &RelDiffStructure, f: &AlternatingMap) -> AlternatingMap {
    let d = AlternatingMap::linear(&s.d);
    d_pi_rho(&s.triple, f)
        .add(&courant_bracket(&s.triple.h, &d, f))
        .scale(&sign(f.arity() as i64 - 1))
}

/// `⟦D, f⟧` written as the derived bracket `[[μ, D̂], f̂]_NR` read on g-arguments.
pub fn courant_via_derived_bracket(s: &RelDiffStructure, f: &AlternatingMap) -> AlternatingMap {
    let sp = s.split();
    let inner = nr_bracket(&s.triple.mu_hat(), &s.d_hat());
    sp.restrict_g_to_h(&nr_bracket(&inner, &sp.embed_g_to_h(f)))
}

// ---------------------------------------------------------------------------
// Difference Lie algebras: regular cochains and cochains with coefficients

/// `(f, θ)` with `f: ∧^n g → W` and `θ: ∧^{n−1} g → W` (absent for `n = 1`).
/// `W = g` for regular cochains and `W = V` for coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCochain {
    pub f: AlternatingMap,
    pub theta: Option<AlternatingMap>,
}

pub type RegularCochain = PairCochain;
pub type CoeffCochain = PairCochain;

impl PairCochain {
    pub fn zero(gdim: usize, wdim: usize, n: usize) -> Self {
        Self {
            f: AlternatingMap::zero(gdim, n, wdim),
            theta: (n >= 2).then(|| AlternatingMap::zero(gdim, n - 1, wdim)),
        }
    }

    pub fn n(&self) -> usize {
        self.f.arity()
    }

    pub fn space_dim(gdim: usize, wdim: usize, n: usize) -> usize {
        let theta = if n >= 2 {
            binomial(gdim, n - 1) * wdim
        } else {
            0
        };
        binomial(gdim, n) * wdim + theta
    }

    pub fn to_flat(&self) -> Vec<Rational> {
        let mut out = self.f.to_flat();
        if let Some(t) = &self.theta {
            out.extend(t.to_flat());
        }
        out
    }

    pub fn from_flat(gdim: usize, wdim: usize, n: usize, flat: &[Rational]) -> Self {
        assert_eq!(
            flat.len(),
            Self::space_dim(gdim, wdim, n),
            "flat length mismatch"
        );
        let m = binomial(gdim, n) * wdim;
        Self {
            f: AlternatingMap::from_flat(gdim, n, wdim, &flat[..m]),
            theta: (n >= 2).then(|| AlternatingMap::from_flat(gdim, n - 1, wdim, &flat[m..])),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.theta.as_ref().is_none_or(AlternatingMap::is_zero)
    }
}

/// `(−1)^n (Σ_{S ≠ ∅} f(x with D x_i in place for i ∈ S) − K f(x))` for `f: ∧^n g → W`.
pub fn t_insertion(f: &AlternatingMap, d: &RationalMatrix, k: &RationalMatrix) -> AlternatingMap {
    let n = f.arity();
    let (gdim, w) = (f.domain_dim(), f.target_dim());
    let eps = sign(n as i64);
    AlternatingMap::from_fn(gdim, n, w, |c| {
        let mut out = zero_vec(w);
        for mask in 1u32..(1 << n) {
            let args: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        d.column(c[i])
                    } else {
                        unit_vec(gdim, c[i])
                    }
                })
                .collect();
            add_assign(&mut out, &f.eval(&args));
        }
        axpy(&mut out, &-Rational::one(), &k.mul_vec(f.get(c)));
        out.iter().map(|x| x * &eps).collect()
    })
}

/// `T(f)` of the regular complex.
pub fn regular_t(a: &DifferenceLieAlgebra, f: &AlternatingMap) -> AlternatingMap {
    t_insertion(f, &a.d, &a.d)
}

/// `δ̄(f, θ) = (d^CE_ad f, d^CE_{ad_D} θ + T(f))`.
pub fn regular_delta(a: &DifferenceLieAlgebra, c: &RegularCochain) -> RegularCochain {
    regular_delta_with(a, &a.g.adjoint_matrices(), &a.ad_d(), c)
}

fn regular_delta_with(
    a: &DifferenceLieAlgebra,
    ad: &[RationalMatrix],
    ad_d: &[RationalMatrix],
    c: &RegularCochain,
) -> RegularCochain {
    let f = ce_coboundary(&a.g, ad, &c.f);
    let mut theta = regular_t(a, &c.f);
    if let Some(t) = &c.theta {
        theta = theta.add(&ce_coboundary(&a.g, ad_d, t));
    }
    PairCochain {
        f,
        theta: Some(theta),
    }
}

/// `𝔦(f, θ) = (f, …, f, θ)`: `f` copied into every block of `C^n(g, g, ad, D)`.
pub fn embed_regular(a: &DifferenceLieAlgebra, c: &RegularCochain) -> RelCochain {
    let d = a.dim();
    let split = Split::new(d, d);
    let n = c.n();
    let value = |ga: &[usize], hb: &[usize]| {
        let mut idx = ga.to_vec();
        idx.extend_from_slice(hb);
        match c.f.basis_value(&idx) {
            Some((sg, v)) => v
                .iter()
                .map(|x| if sg < 0 { -x.clone() } else { x.clone() })
                .collect(),
            None => zero_vec(d),
        }
    };
    let f0 = BigradedMap::from_fn(split, n, 0, Side::G, value);
    let parts = (1..=n)
        .map(|i| BigradedMap::from_fn(split, n - i, i, Side::H, value))
        .collect();
    RelCochain {
        mixed: MixedCochain { n, f0, parts },
        theta: c.theta.clone(),
    }
}

/// `𝔭`: inverse of [`embed_regular`] on its image; `NotInEmbedding` otherwise.
pub fn project_regular(a: &DifferenceLieAlgebra, c: &RelCochain) -> Result<RegularCochain> {
    let d = a.dim();
    let n = c.n();
    let f = AlternatingMap::from_fn(d, n, d, |idx| c.mixed.f0.get(idx, &[]).to_vec());
    let candidate = PairCochain {
        f,
        theta: c.theta.clone(),
    };
    if embed_regular(a, &candidate) != *c {
        return Err(Error::NotInEmbedding);
    }
    Ok(candidate)
}

/// `𝔭 ∘ δ ∘ 𝔦` on the adjoint relative structure.
pub fn regular_delta_via_embedding(
    a: &DifferenceLieAlgebra,
    c: &RegularCochain,
) -> Result<RegularCochain> {
    let s = a.as_relative();
    project_regular(a, &rel_diff_delta(&s, &embed_regular(a, c)))
}

/// `δ_ϱ(f, θ) = (d^CE_ϱ f, ∂θ + T(f))`, `∂` being CE for `ϱ(x) + ϱ(Dx)`
/// and `T` using `K` on the output.
pub fn coeff_delta(rep: &DiffRepresentation, c: &CoeffCochain) -> CoeffCochain {
    coeff_delta_with(rep, &rep.varrho_d(), c)
}

fn coeff_delta_with(
    rep: &DiffRepresentation,
    varrho_d: &[RationalMatrix],
    c: &CoeffCochain,
) -> CoeffCochain {
    let g = &rep.base.g;
    let f = ce_coboundary(g, &rep.varrho, &c.f);
    let mut theta = t_insertion(&c.f, &rep.base.d, &rep.k);
    if let Some(t) = &c.theta {
        theta = theta.add(&ce_coboundary(g, varrho_d, t));
    }
    PairCochain {
        f,
        theta: Some(theta),
    }
}

/// Extends a `V`-valued cochain on `g` to `g ⋉ V` by zero on `V`-arguments.
pub fn coeff_to_semidirect(rep: &DiffRepresentation, c: &CoeffCochain) -> RegularCochain {
    let split = Split::new(rep.base.dim(), rep.vdim());
    let ext = |m: &AlternatingMap| {
        AlternatingMap::from_fn(split.total(), m.arity(), split.total(), |idx| {
            if idx.iter().all(|&i| i < split.g) {
                split.inject_h(m.get(idx))
            } else {
                zero_vec(split.total())
            }
        })
    };
    PairCochain {
        f: ext(&c.f),
        theta: c.theta.as_ref().map(ext),
    }
}

/// Inverse of [`coeff_to_semidirect`] on its image; `NotInEmbedding` otherwise.
pub fn coeff_from_semidirect(rep: &DiffRepresentation, c: &RegularCochain) -> Result<CoeffCochain> {
    let split = Split::new(rep.base.dim(), rep.vdim());
    let cut = |m: &AlternatingMap| split.restrict_g_to_h(m);
    let candidate = PairCochain {
        f: cut(&c.f),
        theta: c.theta.as_ref().map(cut),
    };
    if coeff_to_semidirect(rep, &candidate) != *c {
        return Err(Error::NotInEmbedding);
    }
    Ok(candidate)
}

/// `δ_ϱ` computed as `δ̄` of the semidirect difference Lie algebra, restricted back.
pub fn coeff_delta_via_semidirect(
    rep: &DiffRepresentation,
    c: &CoeffCochain,
) -> Result<CoeffCochain> {
    let sd = DifferenceLieAlgebra::new_unchecked(rep.semidirect_algebra(), rep.total_operator());
    coeff_from_semidirect(rep, &regular_delta(&sd, &coeff_to_semidirect(rep, c)))
}

// ---------------------------------------------------------------------------
// Complexes and cohomology groups

/// A cochain complex `C^1 → C^2 → ⋯` on flat coordinates.
pub trait CochainComplex {
    fn label(&self) -> String;
    fn cochain_dim(&self, n: usize) -> usize;
    /// `δ_n: C^n → C^{n+1}` applied to flat coordinates.
    fn apply(&self, n: usize, flat: &[Rational]) -> Vec<Rational>;

    /// Matrix of `δ_n`, one column per canonical basis cochain.
    fn matrix(&self, n: usize) -> RationalMatrix {
        let dim = self.cochain_dim(n);
        let cols: Vec<Vec<Rational>> = (0..dim).map(|j| self.apply(n, &unit_vec(dim, j))).collect();
        RationalMatrix::from_columns(self.cochain_dim(n + 1), &cols)
    }
}

/// Which cohomology theory to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    LieAct,
    Operator,
    RelDiff,
    Regular,
    Coeff,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::LieAct => "lieact",
            Theory::Operator => "operator",
            Theory::RelDiff => "reldiff",
            Theory::Regular => "regular",
            Theory::Coeff => "coeff",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Theory::LieAct,
            Theory::Operator,
            Theory::RelDiff,
            Theory::Regular,
            Theory::Coeff,
        ]
        .into_iter()
        .find(|t| t.name() == s)
    }
}

pub struct LieActComplex {
    pub triple: LieActTriple,
}

impl CochainComplex for LieActComplex {
    fn label(&self) -> String {
        "LieAct triple".into()
    }

    fn cochain_dim(&self, n: usize) -> usize {
        MixedCochain::space_dim(self.triple.split(), n)
    }

    fn apply(&self, n: usize, flat: &[Rational]) -> Vec<Rational> {
        let f = MixedCochain::from_flat(self.triple.split(), n, flat);
        lieact_coboundary(&self.triple, &f).to_flat()
    }
}

/// Chevalley–Eilenberg complex `Hom(∧^n g, W)`, `n ≥ 1`.
pub struct CeComplex {
    pub g: LieAlgebra,
    pub rep: Vec<RationalMatrix>,
    pub wdim: usize,
}

impl CeComplex {
    /// The complex of a relative difference operator: coefficients `(h, ρ_D)`.
    pub fn operator(s: &RelDiffStructure) -> Self {
        Self {
            g: s.triple.g.clone(),
            rep: rho_d_matrices(&s.triple, &s.d),
            wdim: s.triple.h.dim(),
        }
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        Self {
            g: g.clone(),
            rep: g.adjoint_matrices(),
            wdim: g.dim(),
        }
    }
}

impl CochainComplex for CeComplex {
    fn label(&self) -> String {
        "Chevalley-Eilenberg".into()
    }

    fn cochain_dim(&self, n: usize) -> usize {
        binomial(self.g.dim(), n) * self.wdim
    }

    fn apply(&self, n: usize, flat: &[Rational]) -> Vec<Rational> {
        let t = AlternatingMap::from_flat(self.g.dim(), n, self.wdim, flat);
        ce_coboundary(&self.g, &self.rep, &t).to_flat()
    }
}

/// How `δ` is evaluated in [`RelDiffComplex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaRoute {
    Closed,
    Twisted,
}

pub struct RelDiffComplex {
    pub structure: RelDiffStructure,
    rho_d: Vec<RationalMatrix>,
    twisted: Option<TwistedLInfty>,
}

impl RelDiffComplex {
    pub fn new(structure: RelDiffStructure, route: DeltaRoute) -> Self {
        let rho_d = rho_d_matrices(&structure.triple, &structure.d);
        let twisted =
            (route == DeltaRoute::Twisted).then(|| TwistedLInfty::for_structure(&structure));
        Self {
            structure,
            rho_d,
            twisted,
        }
    }

    pub fn delta(&self, c: &RelCochain) -> RelCochain {
        match &self.twisted {
            Some(tw) => rel_diff_delta_twisted(tw, c)
                .expect("twisted differential stays in the cochain space"),
            None => rel_diff_delta_with(&self.structure, &self.rho_d, c),
        }
    }
}

impl CochainComplex for RelDiffComplex {
    fn label(&self) -> String {
        "relative difference Lie algebra".into()
    }

    fn cochain_dim(&self, n: usize) -> usize {
        RelCochain::space_dim(self.structure.split(), n)
    }

    fn apply(&self, n: usize, flat: &[Rational]) -> Vec<Rational> {
        let c = RelCochain::from_flat(self.structure.split(), n, flat);
        self.delta(&c).to_flat()
    }
}

pub struct RegularComplex {
    pub algebra: DifferenceLieAlgebra,
    ad: Vec<RationalMatrix>,
    ad_d: Vec<RationalMatrix>,
}

impl RegularComplex {
    pub fn new(algebra: DifferenceLieAlgebra) -> Self {
        let ad = algebra.g.adjoint_matrices();
        let ad_d = algebra.ad_d();
        Self { algebra, ad, ad_d }
    }
}

impl CochainComplex for RegularComplex {
    fn label(&self) -> String {
        "regular".into()
    }

    fn cochain_dim(&self, n: usize) -> usize {
        let d = self.algebra.dim();
        PairCochain::space_dim(d, d, n)
    }

    fn apply(&self, n: usize, flat: &[Rational]) -> Vec<Rational> {
        let d = self.algebra.dim();
        let c = PairCochain::from_flat(d, d, n, flat);
        regular_delta_with(&self.algebra, &self.ad, &self.ad_d, &c).to_flat()
    }
}

pub struct CoeffComplex {
    pub rep: DiffRepresentation,
    varrho_d: Vec<RationalMatrix>,
}

impl CoeffComplex {
    pub fn new(rep: DiffRepresentation) -> Self {
        let varrho_d = rep.varrho_d();
        Self { rep, varrho_d }
    }
}

impl CochainComplex for CoeffComplex {
    fn label(&self) -> String {
        "coefficients".into()
    }

    fn cochain_dim(&self, n: usize) -> usize {
        PairCochain::space_dim(self.rep.base.dim(), self.rep.vdim(), n)
    }

    fn apply(&self, n: usize, flat: &[Rational]) -> Vec<Rational> {
        let c = PairCochain::from_flat(self.rep.base.dim(), self.rep.vdim(), n, flat);
        coeff_delta_with(&self.rep, &self.varrho_d, &c).to_flat()
    }
}

/// `H^n = ker δ_n / im δ_{n−1}` with canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub cochain_dim: usize,
    /// `rank δ_n`.
    pub rank_out: usize,
    /// `rank δ_{n−1}` (0 for `n = 1`).
    pub rank_in: usize,
    pub dim: usize,
    pub cocycles: SubspaceBasis,
    pub coboundaries: SubspaceBasis,
    /// Cocycles completing a basis of the coboundaries to one of the cocycles.
    pub representatives: Vec<Vec<Rational>>,
}

fn group_from_matrices(
    n: usize,
    cochain_dim: usize,
    incoming: Option<&RationalMatrix>,
    outgoing: &RationalMatrix,
) -> Result<CohomologyGroup> {
    let cocycles = kernel_basis(outgoing);
    let coboundaries = match incoming {
        Some(m) => image_basis(m),
        None => SubspaceBasis::zero(cochain_dim),
    };
    let dim = quotient_dim(&cocycles, &coboundaries)?;
    let representatives = coboundaries.complement_in(&cocycles);
    Ok(CohomologyGroup {
        degree: n,
        cochain_dim,
        rank_out: cochain_dim - cocycles.dim(),
        rank_in: coboundaries.dim(),
        dim,
        cocycles,
        coboundaries,
        representatives,
    })
}

/// `H^n` of a complex; `ImageNotContained` if `δ∘δ ≠ 0`.
pub fn cohomology_group(cx: &dyn CochainComplex, n: usize) -> Result<CohomologyGroup> {
    assert!(n >= 1, "complexes start in degree 1");
    let incoming = (n >= 2).then(|| cx.matrix(n - 1));
    group_from_matrices(n, cx.cochain_dim(n), incoming.as_ref(), &cx.matrix(n))
}

/// `H^1, …, H^max_degree`, building each coboundary matrix once.
pub fn cohomology_table(
    cx: &dyn CochainComplex,
    max_degree: usize,
) -> Result<Vec<CohomologyGroup>> {
    let mut out = Vec::with_capacity(max_degree);
    let mut prev: Option<RationalMatrix> = None;
    for n in 1..=max_degree {
        let m = cx.matrix(n);
        out.push(group_from_matrices(
            n,
            cx.cochain_dim(n),
            prev.as_ref(),
            &m,
        )?);
        prev = Some(m);
    }
    Ok(out)
}

/// Whether `δ_{n+1} ∘ δ_n = 0` on the whole canonical basis of `C^n`.
pub fn squares_to_zero(cx: &dyn CochainComplex, n: usize) -> bool {
    cx.matrix(n + 1).matmul(&cx.matrix(n)).is_zero()
}

// ---------------------------------------------------------------------------
// Long exact sequence

/// One node of the long exact sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesNode {
    pub label: String,
    /// Dimension of the cohomology group at this node.
    pub dim: usize,
    /// Dimension of the image of the incoming map, in cohomology.
    pub image_dim: usize,
    /// Dimension of the kernel of the outgoing map, in cohomology.
    pub kernel_dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub max_degree: usize,
    pub operator_dims: Vec<usize>,
    pub reldiff_dims: Vec<usize>,
    pub lieact_dims: Vec<usize>,
    pub nodes: Vec<LesNode>,
}

impl LesReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact)
    }
}

struct Level {
    z: SubspaceBasis,
    b: SubspaceBasis,
}

fn levels(cx: &dyn CochainComplex, max_degree: usize) -> Vec<Level> {
    let mut out = Vec::new();
    let mut prev_image = SubspaceBasis::zero(cx.cochain_dim(1));
    for n in 1..=max_degree {
        let m = cx.matrix(n);
        out.push(Level {
            z: kernel_basis(&m),
            b: prev_image,
        });
        prev_image = image_basis(&m);
    }
    // B^{max+1}, needed for the last outgoing map of the operator column
    out.push(Level {
        z: SubspaceBasis::zero(cx.cochain_dim(max_degree + 1)),
        b: prev_image,
    });
    out
}

fn apply_all(
    map: &dyn Fn(&[Rational]) -> Vec<Rational>,
    vs: &[Vec<Rational>],
) -> Vec<Vec<Rational>> {
    vs.iter().map(|v| map(v)).collect()
}

/// `{z ∈ Z_Y : ψ(z) ∈ B_Z}` as a subspace of `C_Y`.
fn induced_kernel(
    zy: &SubspaceBasis,
    psi: &dyn Fn(&[Rational]) -> Vec<Rational>,
    bz: &SubspaceBasis,
    target_dim: usize,
) -> SubspaceBasis {
    let k = zy.dim();
    if k == 0 {
        return SubspaceBasis::zero(zy.ambient_dim());
    }
    let mut cols = apply_all(psi, zy.vectors());
    cols.extend(
        bz.vectors()
            .iter()
            .map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()),
    );
    let m = RationalMatrix::from_columns(target_dim, &cols);
    let ker = kernel_basis(&m);
    SubspaceBasis::spanned_by(
        zy.ambient_dim(),
        ker.vectors().iter().map(|coeffs| {
            let mut v = zero_vec(zy.ambient_dim());
            for (c, z) in coeffs[..k].iter().zip(zy.vectors()) {
                axpy(&mut v, c, z);
            }
            v
        }),
    )
}

/// Runs the long exact sequence
/// `0 → H^1(rel) → H^1(lieact) → H^1(D) → H^2(rel) → ⋯ → H^N(D)`
/// and records exactness at each node.
pub fn les_report(s: &RelDiffStructure, max_degree: usize) -> Result<LesReport> {
    assert!(max_degree >= 1);
    let sp = s.split();
    let op = CeComplex::operator(s);
    let rel = RelDiffComplex::new(s.clone(), DeltaRoute::Closed);
    let la = LieActComplex {
        triple: s.triple.clone(),
    };
    let (lo, lr, ll) = (
        levels(&op, max_degree),
        levels(&rel, max_degree),
        levels(&la, max_degree),
    );

    let h = |l: &Level| l.z.dim() - l.b.dim();
    let mut nodes = Vec::new();
    let mut push =
        |label: String, l: &Level, image: SubspaceBasis, kernel: SubspaceBasis| -> Result<()> {
            let im = image.sum(&l.b);
            let ker = kernel.sum(&l.b);
            if !l.z.contains_all(&im) || !l.z.contains_all(&ker) {
                return Err(Error::InternalInconsistency(format!(
                    "{label}: maps do not send cocycles to cocycles"
                )));
            }
            let exact = im.contains_all(&ker) && ker.contains_all(&im);
            nodes.push(LesNode {
                label,
                dim: h(l),
                image_dim: im.dim() - l.b.dim(),
                kernel_dim: ker.dim() - l.b.dim(),
                exact,
            });
            Ok(())
        };

    for n in 1..=max_degree {
        let (rel_n, la_n, op_n) = (&lr[n - 1], &ll[n - 1], &lo[n - 1]);
        let rel_dim = RelCochain::space_dim(sp, n);
        let la_dim = MixedCochain::space_dim(sp, n);
        let op_dim = binomial(sp.g, n) * sp.h;
        let mix_n = la_dim;

        // ι: C^{n−1}(D) → C^n(rel), θ ↦ (0, θ)
        let iota = |m: usize| {
            move |v: &[Rational]| {
                let mut out = zero_vec(MixedCochain::space_dim(sp, m));
                out.extend_from_slice(v);
                out
            }
        };
        // p: C^n(rel) → C^n(lieact)
        let p = move |v: &[Rational]| v[..mix_n].to_vec();
        // c: C^n(lieact) → C^n(D), α ↦ T(α)
        let c = |v: &[Rational]| t_operator(s, &MixedCochain::from_flat(sp, n, v)).to_flat();

        // node H^n(rel): in from H^{n−1}(D), out to H^n(lieact)
        let image = if n == 1 {
            SubspaceBasis::zero(rel_dim)
        } else {
            let f = iota(n);
            SubspaceBasis::spanned_by(rel_dim, apply_all(&f, lo[n - 2].z.vectors()))
        };
        let kernel = induced_kernel(&rel_n.z, &p, &la_n.b, la_dim);
        push(format!("H{n}(rel)"), rel_n, image, kernel)?;

        // node H^n(lieact): in from H^n(rel), out to H^n(D)
        let image = SubspaceBasis::spanned_by(la_dim, apply_all(&p, rel_n.z.vectors()));
        let kernel = induced_kernel(&la_n.z, &c, &op_n.b, op_dim);
        push(format!("H{n}(lieact)"), la_n, image, kernel)?;

        // node H^n(D): in from H^n(lieact), out to H^{n+1}(rel)
        let image = SubspaceBasis::spanned_by(op_dim, apply_all(&c, la_n.z.vectors()));
        let f = iota(n + 1);
        let kernel = induced_kernel(&op_n.z, &f, &lr[n].b, RelCochain::space_dim(sp, n + 1));
        push(format!("H{n}(D)"), op_n, image, kernel)?;
    }

    Ok(LesReport {
        max_degree,
        operator_dims: lo[..max_degree].iter().map(h).collect(),
        reldiff_dims: lr[..max_degree].iter().map(h).collect(),
        lieact_dims: ll[..max_degree].iter().map(h).collect(),
        nodes,
    })
}

/// [`les_report`], failing with `ExactnessFailure` at the first non-exact node.
pub fn les_check(s: &RelDiffStructure, max_degree: usize) -> Result<LesReport> {
    let r = les_report(s, max_degree)?;
    if let Some(bad) = r.nodes.iter().find(|n| !n.exact) {
        return Err(Error::ExactnessFailure(bad.label.clone()));
    }
    Ok(r)
}

/// All sorted index tuples of a given length, used when printing cochains.
pub fn basis_tuples(dim: usize, arity: usize) -> Vec<Vec<usize>> {
    combinations(dim, arity)
}
