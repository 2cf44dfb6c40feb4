//! Infinitesimal deformations over ℚ[t]/(t²) and abelian extensions.

use crate::cohomology::{
    coeff_delta, cohomology_group, regular_delta, CochainComplex, CoeffComplex, PairCochain,
    RegularComplex,
};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, solve, unit_vec, DualScalar, Rational, RationalMatrix, Scalar};
use crate::multilinear::{AlternatingMap, Split};
use crate::structures::{DiffRepresentation, DifferenceLieAlgebra, LieAlgebra};

/// A candidate first-order deformation `([·,·] + tω̂, D + tD̂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationDatum {
    pub omega_hat: AlternatingMap,
    pub d_hat: RationalMatrix,
}

impl DeformationDatum {
    pub fn zero(dim: usize) -> Self {
        Self {
            omega_hat: AlternatingMap::zero(dim, 2, dim),
            d_hat: RationalMatrix::zeros(dim, dim),
        }
    }

    /// `(ω̂, D̂)` as a regular 2-cochain.
    pub fn to_cochain(&self) -> PairCochain {
        PairCochain {
            f: self.omega_hat.clone(),
            theta: Some(AlternatingMap::linear(&self.d_hat)),
        }
    }

    pub fn from_cochain(c: &PairCochain) -> Self {
        assert_eq!(c.n(), 2, "deformations are 2-cochains");
        Self {
            omega_hat: c.f.clone(),
            d_hat: c.theta.as_ref().expect("2-cochains carry θ").to_matrix(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            omega_hat: self.omega_hat.sub(&o.omega_hat),
            d_hat: &self.d_hat - &o.d_hat,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            omega_hat: self.omega_hat.add(&o.omega_hat),
            d_hat: &self.d_hat + &o.d_hat,
        }
    }
}

/// `δ̄(ω̂, D̂)` in flat coordinates.
pub fn deformation_coboundary(a: &DifferenceLieAlgebra, d: &DeformationDatum) -> Vec<Rational> {
    regular_delta(a, &d.to_cochain()).to_flat()
}

fn lift_dual(v: &[Rational]) -> Vec<DualScalar> {
    v.iter().map(DualScalar::from_rational).collect()
}

/// Builds the algebra over ℚ[t]/(t²) and checks Jacobi and the
/// difference-operator identity on basis elements.
pub fn dual_number_valid(a: &DifferenceLieAlgebra, d: &DeformationDatum) -> bool {
    let n = a.dim();
    let hat = LieAlgebra::new_unchecked(d.omega_hat.clone());
    let t = DualScalar::t();
    let tv =
        |v: Vec<DualScalar>| -> Vec<DualScalar> { v.into_iter().map(|x| x * t.clone()).collect() };
    let add = |u: Vec<DualScalar>, v: Vec<DualScalar>| -> Vec<DualScalar> {
        u.into_iter().zip(v).map(|(a, b)| a + b).collect()
    };
    let br = |x: &[DualScalar], y: &[DualScalar]| {
        add(a.g.bracket_generic(x, y), tv(hat.bracket_generic(x, y)))
    };
    let op = |x: &[DualScalar]| add(a.d.mul_vec_generic(x), tv(d.d_hat.mul_vec_generic(x)));
    let e: Vec<Vec<DualScalar>> = (0..n).map(|i| lift_dual(&unit_vec(n, i))).collect();
    let zero = |v: &[DualScalar]| v.iter().all(Scalar::is_zero_scalar);

    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = add(
                    add(br(&e[i], &br(&e[j], &e[k])), br(&e[j], &br(&e[k], &e[i]))),
                    br(&e[k], &br(&e[i], &e[j])),
                );
                if !zero(&s) {
                    return false;
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (op(&e[i]), op(&e[j]));
            let lhs = op(&br(&e[i], &e[j]));
            let rhs = add(add(br(&dx, &e[j]), br(&e[i], &dy)), br(&dx, &dy));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Whether `(ω̂, D̂)` is a `δ̄`-cocycle, decided by both the coboundary and
/// the dual-number algebra. Disagreement is an `InternalInconsistency`.
pub fn is_deformation_cocycle(a: &DifferenceLieAlgebra, d: &DeformationDatum) -> Result<bool> {
    let by_delta = is_zero_vec(&deformation_coboundary(a, d));
    let by_dual = dual_number_valid(a, d);
    if by_delta != by_dual {
        return Err(Error::InternalInconsistency(format!(
            "coboundary says {by_delta}, dual numbers say {by_dual}"
        )));
    }
    Ok(by_delta)
}

/// Result of a linear feasibility search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Found(RationalMatrix),
    /// The system `A n = b` has `rank A < rank [A | b]`.
    Infeasible {
        rank: usize,
        augmented_rank: usize,
    },
}

impl Witness {
    pub fn found(&self) -> Option<&RationalMatrix> {
        match self {
            Witness::Found(n) => Some(n),
            Witness::Infeasible { .. } => None,
        }
    }
}

/// `(d_ad N, DN − ND)` for a linear `N: g → g`.
pub fn trivial_deformation(a: &DifferenceLieAlgebra, n: &RationalMatrix) -> DeformationDatum {
    let c = regular_delta(
        a,
        &PairCochain {
            f: AlternatingMap::linear(n),
            theta: None,
        },
    );
    DeformationDatum::from_cochain(&c)
}

fn require_cocycle(a: &DifferenceLieAlgebra, d: &DeformationDatum) -> Result<()> {
    let r = deformation_coboundary(a, d);
    if is_zero_vec(&r) {
        Ok(())
    } else {
        Err(Error::NotCocycle(r))
    }
}

/// Solves `ω̂₁ − ω̂₂ = d_ad N`, `D̂₁ − D̂₂ = DN − ND`.
pub fn deformation_equivalent(
    a: &DifferenceLieAlgebra,
    d1: &DeformationDatum,
    d2: &DeformationDatum,
) -> Result<Witness> {
    require_cocycle(a, d1)?;
    require_cocycle(a, d2)?;
    let m = RegularComplex::new(a.clone()).matrix(1);
    let rhs = d1.sub(d2).to_cochain().to_flat();
    let n = a.dim();
    match solve(&m, &rhs) {
        Ok(x) => {
            let w = AlternatingMap::from_flat(n, 1, n, &x).to_matrix();
            if trivial_deformation(a, &w) != d1.sub(d2) {
                return Err(Error::InternalInconsistency(
                    "equivalence witness does not verify".into(),
                ));
            }
            Ok(Witness::Found(w))
        }
        Err((rank, augmented_rank)) => Ok(Witness::Infeasible {
            rank,
            augmented_rank,
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationClassification {
    pub h2_dim: usize,
    /// Representatives of a basis of `H²`, at most `max_report` of them.
    pub representatives: Vec<DeformationDatum>,
}

/// `H²` of the regular complex with representatives re-validated over ℚ[t]/(t²).
pub fn classify_deformations(
    a: &DifferenceLieAlgebra,
    max_report: usize,
) -> Result<DeformationClassification> {
    let h2 = cohomology_group(&RegularComplex::new(a.clone()), 2)?;
    let n = a.dim();
    let mut representatives = Vec::new();
    for flat in h2.representatives.iter().take(max_report) {
        let d = DeformationDatum::from_cochain(&PairCochain::from_flat(n, n, 2, flat));
        if !is_deformation_cocycle(a, &d)? {
            return Err(Error::InternalInconsistency(
                "H² representative is not a deformation".into(),
            ));
        }
        representatives.push(d);
    }
    Ok(DeformationClassification {
        h2_dim: h2.dim,
        representatives,
    })
}

// ---------------------------------------------------------------------------
// Abelian extensions

/// `(ω, χ)` with `ω: ∧²g → V` and `χ: g → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCocycle {
    pub omega: AlternatingMap,
    pub chi: RationalMatrix,
}

impl ExtensionCocycle {
    pub fn zero(gdim: usize, vdim: usize) -> Self {
        Self {
            omega: AlternatingMap::zero(gdim, 2, vdim),
            chi: RationalMatrix::zeros(vdim, gdim),
        }
    }

    pub fn to_cochain(&self) -> PairCochain {
        PairCochain {
            f: self.omega.clone(),
            theta: Some(AlternatingMap::linear(&self.chi)),
        }
    }

    pub fn from_cochain(c: &PairCochain) -> Self {
        assert_eq!(c.n(), 2, "extension cocycles are 2-cochains");
        Self {
            omega: c.f.clone(),
            chi: c.theta.as_ref().expect("2-cochains carry θ").to_matrix(),
        }
    }
}

/// `0 → (V, K) → (g ⊕ V, D̂) → (g, D) → 0` with `V` abelian, in coordinates
/// where `g` comes first; the injection is `u ↦ (0, u)` and the projection
/// `(x, u) ↦ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    pub total: DifferenceLieAlgebra,
    pub base: DifferenceLieAlgebra,
    pub k: RationalMatrix,
}

impl AbelianExtension {
    pub fn vdim(&self) -> usize {
        self.k.rows()
    }

    pub fn split(&self) -> Split {
        Split::new(self.base.dim(), self.vdim())
    }

    /// Exactness data: `V` is an abelian ideal, the projection and injection
    /// intertwine brackets and operators.
    pub fn validate(&self) -> Result<()> {
        let sp = self.split();
        let bad = |m: &str| Err(Error::InternalInconsistency(format!("extension: {m}")));
        if self.total.dim() != sp.total() {
            return Err(Error::DimensionMismatch("total space is not g ⊕ V".into()));
        }
        for a in 0..sp.total() {
            for b in a + 1..sp.total() {
                let br = self.total.g.bracket_basis(a, b);
                let (a_in_v, b_in_v) = (a >= sp.g, b >= sp.g);
                if a_in_v && b_in_v && !is_zero_vec(&br) {
                    return bad("kernel is not abelian");
                }
                if (a_in_v || b_in_v) && !is_zero_vec(sp.g_part(&br)) {
                    return bad("kernel is not an ideal");
                }
                if !a_in_v
                    && !b_in_v
                    && sp.g_part(&br) != self.base.g.bracket_basis(a, b).as_slice()
                {
                    return bad("projection is not a homomorphism");
                }
            }
        }
        for c in 0..sp.total() {
            let col = self.total.d.column(c);
            if c < sp.g {
                if sp.g_part(&col) != self.base.d.column(c).as_slice() {
                    return bad("projection does not intertwine the operators");
                }
            } else if sp
                .g_part(&col)
                .iter()
                .any(|x| !num_traits::Zero::is_zero(x))
                || sp.h_part(&col) != self.k.column(c - sp.g).as_slice()
            {
                return bad("injection does not intertwine the operators");
            }
        }
        Ok(())
    }
}

/// `([x,y], ϱ(x)v − ϱ(y)u + ω(x,y))` and `D_χ(x,u) = (Dx, Ku + χ(x))`,
/// without checking the cocycle condition.
pub fn extension_unchecked(rep: &DiffRepresentation, c: &ExtensionCocycle) -> AbelianExtension {
    let sp = Split::new(rep.base.dim(), rep.vdim());
    let semi = rep.semidirect_algebra();
    let bracket = AlternatingMap::from_fn(sp.total(), 2, sp.total(), |idx| {
        let mut v = semi.bracket_basis(idx[0], idx[1]);
        if idx[1] < sp.g {
            for (o, w) in v[sp.g..].iter_mut().zip(c.omega.get(idx)) {
                *o += w;
            }
        }
        v
    });
    let mut d = rep.total_operator();
    for x in 0..sp.g {
        for u in 0..sp.h {
            d[(sp.g + u, x)] += &c.chi[(u, x)];
        }
    }
    AbelianExtension {
        total: DifferenceLieAlgebra::new_unchecked(LieAlgebra::new_unchecked(bracket), d),
        base: rep.base.clone(),
        k: rep.k.clone(),
    }
}

/// Builds the extension of a `δ_ϱ`-cocycle and validates it.
pub fn extension_from_cocycle(
    rep: &DiffRepresentation,
    c: &ExtensionCocycle,
) -> Result<AbelianExtension> {
    let r = coeff_delta(rep, &c.to_cochain()).to_flat();
    if !is_zero_vec(&r) {
        return Err(Error::NotCocycle(r));
    }
    let e = extension_unchecked(rep, c);
    DifferenceLieAlgebra::new(e.total.g.clone(), e.total.d.clone())?;
    e.validate()?;
    Ok(e)
}

/// Reads `ϱ`, `ω` and `χ` off an extension through a section `s: g → g ⊕ V`.
pub fn cocycle_from_extension(
    e: &AbelianExtension,
    section: &RationalMatrix,
) -> Result<(ExtensionCocycle, DiffRepresentation)> {
    let sp = e.split();
    if section.rows() != sp.total() || section.cols() != sp.g {
        return Err(Error::DimensionMismatch(
            "section must map g into g ⊕ V".into(),
        ));
    }
    for x in 0..sp.g {
        if sp.g_part(&section.column(x)) != crate::linalg::unit_vec(sp.g, x).as_slice() {
            return Err(Error::NotASection);
        }
    }
    let s = |x: &[Rational]| section.mul_vec(x);
    let varrho: Vec<RationalMatrix> = (0..sp.g)
        .map(|x| {
            let cols: Vec<Vec<Rational>> = (0..sp.h)
                .map(|u| {
                    sp.h_part(
                        &e.total
                            .g
                            .bracket(&section.column(x), &sp.inject_h(&unit_vec(sp.h, u))),
                    )
                    .to_vec()
                })
                .collect();
            RationalMatrix::from_columns(sp.h, &cols)
        })
        .collect();
    let omega = AlternatingMap::from_fn(sp.g, 2, sp.h, |idx| {
        let mut v = e
            .total
            .g
            .bracket(&section.column(idx[0]), &section.column(idx[1]));
        let sb = s(&e.base.g.bracket_basis(idx[0], idx[1]));
        for (o, w) in v.iter_mut().zip(&sb) {
            *o -= w;
        }
        sp.h_part(&v).to_vec()
    });
    let chi_cols: Vec<Vec<Rational>> = (0..sp.g)
        .map(|x| {
            let mut v = e.total.d.mul_vec(&section.column(x));
            let sdx = s(&e.base.d.column(x));
            for (o, w) in v.iter_mut().zip(&sdx) {
                *o -= w;
            }
            sp.h_part(&v).to_vec()
        })
        .collect();
    let chi = RationalMatrix::from_columns(sp.h, &chi_cols);
    let rep = DiffRepresentation::new(e.base.clone(), varrho, e.k.clone())?;
    let c = ExtensionCocycle { omega, chi };
    let r = coeff_delta(&rep, &c.to_cochain()).to_flat();
    if !is_zero_vec(&r) {
        return Err(Error::NotCocycle(r));
    }
    Ok((c, rep))
}

/// The section `x ↦ (x, Nx)`.
pub fn section_from(n: &RationalMatrix) -> RationalMatrix {
    RationalMatrix::identity(n.cols()).stack(n)
}

/// `κ(x, u) = (x, Nx + u)`.
pub fn kappa(n: &RationalMatrix) -> RationalMatrix {
    let (v, g) = (n.rows(), n.cols());
    let mut m = RationalMatrix::identity(g + v);
    for r in 0..v {
        for c in 0..g {
            m[(g + r, c)] = n[(r, c)].clone();
        }
    }
    m
}

/// Residual of `κ` being a morphism of difference Lie algebras `e1 → e2`:
/// `κ[X,Y]₁ − [κX,κY]₂` on basis pairs, then `κD̂₁ − D̂₂κ` on the basis.
fn morphism_residual(
    e1: &AbelianExtension,
    e2: &AbelianExtension,
    k: &RationalMatrix,
) -> Vec<Rational> {
    let t = e1.split().total();
    let mut out = Vec::new();
    for a in 0..t {
        for b in a + 1..t {
            let lhs = k.mul_vec(&e1.total.g.bracket_basis(a, b));
            let rhs = e2.total.g.bracket(&k.column(a), &k.column(b));
            out.extend(lhs.iter().zip(&rhs).map(|(x, y)| x - y));
        }
    }
    let r = &k.matmul(&e1.total.d) - &e2.total.d.matmul(k);
    for c in 0..t {
        out.extend(r.column(c));
    }
    out
}

/// Whether `κ` is an isomorphism `e1 → e2` of difference Lie algebras
/// commuting with the injections and projections.
pub fn is_extension_isomorphism(
    e1: &AbelianExtension,
    e2: &AbelianExtension,
    n: &RationalMatrix,
) -> bool {
    is_zero_vec(&morphism_residual(e1, e2, &kappa(n)))
}

/// Searches for `κ(x,u) = (x, Nx + u)` from `e1` to `e2`.
pub fn extension_isomorphic(e1: &AbelianExtension, e2: &AbelianExtension) -> Result<Witness> {
    if e1.base != e2.base {
        return Err(Error::IncompatibleBaseOrKernel("bases differ".into()));
    }
    if e1.k != e2.k {
        return Err(Error::IncompatibleBaseOrKernel("kernels differ".into()));
    }
    let (g, v) = (e1.base.dim(), e1.vdim());
    let r0 = morphism_residual(e1, e2, &kappa(&RationalMatrix::zeros(v, g)));
    let cols: Vec<Vec<Rational>> = (0..v * g)
        .map(|i| {
            let mut n = RationalMatrix::zeros(v, g);
            n[(i / g, i % g)] = Rational::from_integer(1.into());
            let r = morphism_residual(e1, e2, &kappa(&n));
            r.iter().zip(&r0).map(|(a, b)| a - b).collect()
        })
        .collect();
    let a = RationalMatrix::from_columns(r0.len(), &cols);
    let rhs: Vec<Rational> = r0.iter().map(|x| -x).collect();
    match solve(&a, &rhs) {
        Ok(x) => {
            let n = RationalMatrix::from_fn(v, g, |r, c| x[r * g + c].clone());
            if !is_extension_isomorphism(e1, e2, &n) {
                return Err(Error::InternalInconsistency(
                    "isomorphism witness does not verify".into(),
                ));
            }
            Ok(Witness::Found(n))
        }
        Err((rank, augmented_rank)) => Ok(Witness::Infeasible {
            rank,
            augmented_rank,
        }),
    }
}

/// Whether two `δ_ϱ`-cocycles differ by a coboundary; returns `N` with
/// `c1 − c2 = δ_ϱ N` when they do.
pub fn cohomologous(
    rep: &DiffRepresentation,
    c1: &ExtensionCocycle,
    c2: &ExtensionCocycle,
) -> Witness {
    let m = CoeffComplex::new(rep.clone()).matrix(1);
    let diff: Vec<Rational> = c1
        .to_cochain()
        .to_flat()
        .iter()
        .zip(c2.to_cochain().to_flat())
        .map(|(a, b)| a - b)
        .collect();
    match solve(&m, &diff) {
        Ok(x) => {
            Witness::Found(AlternatingMap::from_flat(rep.base.dim(), 1, rep.vdim(), &x).to_matrix())
        }
        Err((rank, augmented_rank)) => Witness::Infeasible {
            rank,
            augmented_rank,
        },
    }
}

/// `δ_ϱ N` as an extension cocycle.
pub fn coboundary_of(rep: &DiffRepresentation, n: &RationalMatrix) -> ExtensionCocycle {
    ExtensionCocycle::from_cochain(&coeff_delta(
        rep,
        &PairCochain {
            f: AlternatingMap::linear(n),
            theta: None,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cohomology_group;
    use crate::fixtures;
    use crate::linalg::rat;
    use crate::sample::Sampler;

    fn aff1_e2() -> DifferenceLieAlgebra {
        DifferenceLieAlgebra::new(fixtures::aff1(), fixtures::e2_projection()).unwrap()
    }

    #[test]
    fn zero_datum_is_cocycle() {
        for (_, a) in fixtures::difference_fixtures() {
            assert!(is_deformation_cocycle(&a, &DeformationDatum::zero(a.dim())).unwrap());
        }
    }

    #[test]
    fn trivial_deformations_are_cocycles() {
        let mut s = Sampler::new(1);
        for (_, a) in fixtures::difference_fixtures() {
            let n = s.matrix(a.dim(), a.dim());
            assert!(is_deformation_cocycle(&a, &trivial_deformation(&a, &n)).unwrap());
        }
    }

    /// `ω̂(e1,e2) = e1`, `D̂ = 0` on aff(1) with the e2-projection. Oracle:
    /// the dual-number algebra, expanded by hand. Jacobi is vacuous in
    /// dimension 2; the operator identity at `(e1, e2)` reads
    /// `D̂[e1,e2] + Dω̂(e1,e2) = ω̂(De1,e2) + ω̂(e1,De2) + ω̂(De1,De2)`,
    /// i.e. `0 + D e1 = 0 + e1 + 0`, and `D e1 = 0 ≠ e1`.
    #[test]
    fn aff1_deformation_example() {
        let a = aff1_e2();
        let mut w = AlternatingMap::zero(2, 2, 2);
        w.set(&[0, 1], vec![rat(1), rat(0)]);
        let d = DeformationDatum {
            omega_hat: w,
            d_hat: RationalMatrix::zeros(2, 2),
        };
        let lhs = a.d.mul_vec(&[rat(1), rat(0)]);
        let rhs = vec![rat(1), rat(0)];
        let oracle = lhs == rhs;
        assert_eq!(is_deformation_cocycle(&a, &d).unwrap(), oracle);
        assert!(!oracle);
    }

    #[test]
    fn equivalence_finds_witness_for_coboundary_shift() {
        let mut s = Sampler::new(2);
        for (name, a) in fixtures::difference_fixtures() {
            let cls = classify_deformations(&a, 4).unwrap();
            let base = cls
                .representatives
                .first()
                .cloned()
                .unwrap_or_else(|| DeformationDatum::zero(a.dim()));
            assert_eq!(
                deformation_equivalent(&a, &base, &base).unwrap(),
                Witness::Found(RationalMatrix::zeros(a.dim(), a.dim()))
            );
            let n0 = s.matrix(a.dim(), a.dim());
            let shifted = base.add(&trivial_deformation(&a, &n0));
            let w = deformation_equivalent(&a, &shifted, &base).unwrap();
            let n = w.found().unwrap_or_else(|| panic!("{name}: no witness"));
            assert_eq!(trivial_deformation(&a, n), shifted.sub(&base));
        }
    }

    #[test]
    fn distinct_classes_are_not_equivalent() {
        for (name, a) in fixtures::difference_fixtures() {
            let cls = classify_deformations(&a, 8).unwrap();
            let reps = &cls.representatives;
            for i in 0..reps.len() {
                let z = DeformationDatum::zero(a.dim());
                assert!(
                    matches!(
                        deformation_equivalent(&a, &reps[i], &z).unwrap(),
                        Witness::Infeasible { .. }
                    ),
                    "{name}"
                );
                for j in i + 1..reps.len() {
                    let w = deformation_equivalent(&a, &reps[i], &reps[j]).unwrap();
                    assert!(matches!(w, Witness::Infeasible { .. }), "{name}");
                }
            }
        }
    }

    #[test]
    fn non_cocycle_rejected_by_equivalence() {
        let a = aff1_e2();
        let mut w = AlternatingMap::zero(2, 2, 2);
        w.set(&[0, 1], vec![rat(1), rat(0)]);
        let d = DeformationDatum {
            omega_hat: w,
            d_hat: RationalMatrix::zeros(2, 2),
        };
        assert!(matches!(
            deformation_equivalent(&a, &d, &d),
            Err(Error::NotCocycle(_))
        ));
    }

    #[test]
    fn abelian_line_classification() {
        let a =
            DifferenceLieAlgebra::new(fixtures::abelian(1), RationalMatrix::zeros(1, 1)).unwrap();
        let c = classify_deformations(&a, 4).unwrap();
        assert_eq!(c.h2_dim, 1);
        assert!(c.representatives[0].omega_hat.is_zero());
        assert!(!c.representatives[0].d_hat.is_zero());
    }

    #[test]
    fn deformation_routes_agree_on_random_data() {
        let mut s = Sampler::new(3);
        for (_, a) in fixtures::difference_fixtures() {
            let n = a.dim();
            for _ in 0..40 {
                let d = DeformationDatum {
                    omega_hat: s.sparse_alternating(n, 2, n, 0.3),
                    d_hat: s.sparse_matrix(n, n, 0.3),
                };
                is_deformation_cocycle(&a, &d).unwrap();
            }
        }
    }

    fn trivial_line_rep() -> DiffRepresentation {
        let base =
            DifferenceLieAlgebra::new(fixtures::abelian(1), RationalMatrix::zeros(1, 1)).unwrap();
        DiffRepresentation::new(
            base,
            vec![RationalMatrix::zeros(1, 1)],
            RationalMatrix::zeros(1, 1),
        )
        .unwrap()
    }

    /// 1-dim g and V, trivial data, `χ = Id`: `D_χ(x, u) = (0, x)`.
    #[test]
    fn line_extension_by_identity() {
        let rep = trivial_line_rep();
        let c = ExtensionCocycle {
            omega: AlternatingMap::zero(1, 2, 1),
            chi: RationalMatrix::identity(1),
        };
        let e = extension_from_cocycle(&rep, &c).unwrap();
        for (x, u) in [(1, 0), (0, 1), (2, -3)] {
            assert_eq!(e.total.d.mul_vec(&[rat(x), rat(u)]), vec![rat(0), rat(x)]);
        }
        assert!(e.total.g.is_abelian());
    }

    #[test]
    fn zero_cocycle_gives_semidirect_product() {
        for (_, a) in fixtures::difference_fixtures() {
            let rep = a.adjoint_representation();
            let e =
                extension_from_cocycle(&rep, &ExtensionCocycle::zero(a.dim(), rep.vdim())).unwrap();
            assert_eq!(e.total.g, rep.semidirect_algebra());
            assert_eq!(e.total.d, rep.total_operator());
            let (c, r) = cocycle_from_extension(
                &e,
                &section_from(&RationalMatrix::zeros(rep.vdim(), a.dim())),
            )
            .unwrap();
            assert_eq!(c, ExtensionCocycle::zero(a.dim(), rep.vdim()));
            assert_eq!(r, rep);
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let a = aff1_e2();
        let rep = a.adjoint_representation();
        let mut c = ExtensionCocycle::zero(2, 2);
        c.chi = RationalMatrix::identity(2);
        let r = coeff_delta(&rep, &c.to_cochain()).to_flat();
        assert!(!is_zero_vec(&r));
        assert_eq!(extension_from_cocycle(&rep, &c), Err(Error::NotCocycle(r)));
        assert!(DifferenceLieAlgebra::new(
            extension_unchecked(&rep, &c).total.g.clone(),
            extension_unchecked(&rep, &c).total.d.clone()
        )
        .is_err());
    }

    #[test]
    fn sections_change_cocycle_by_coboundary() {
        let mut s = Sampler::new(4);
        for (_, a) in fixtures::difference_fixtures() {
            let rep = a.adjoint_representation();
            let n0 = s.matrix(rep.vdim(), a.dim());
            let e = extension_from_cocycle(&rep, &coboundary_of(&rep, &n0)).unwrap();
            let zero = RationalMatrix::zeros(rep.vdim(), a.dim());
            let (c0, r0) = cocycle_from_extension(&e, &section_from(&zero)).unwrap();
            let n1 = s.matrix(rep.vdim(), a.dim());
            let (c1, r1) = cocycle_from_extension(&e, &section_from(&n1)).unwrap();
            assert_eq!(r0, r1);
            let shift = coboundary_of(&rep, &n1);
            assert_eq!(c1.to_cochain().to_flat(), {
                let a = c0.to_cochain().to_flat();
                a.iter()
                    .zip(shift.to_cochain().to_flat())
                    .map(|(x, y)| x + y)
                    .collect::<Vec<_>>()
            });
        }
    }

    #[test]
    fn bad_section_rejected() {
        let rep = trivial_line_rep();
        let e = extension_from_cocycle(&rep, &ExtensionCocycle::zero(1, 1)).unwrap();
        let s = RationalMatrix::from_i64_rows(&[&[2], &[0]]);
        assert!(matches!(
            cocycle_from_extension(&e, &s),
            Err(Error::NotASection)
        ));
    }

    #[test]
    fn isomorphism_matches_cohomology_class() {
        let mut s = Sampler::new(5);
        for (name, a) in fixtures::difference_fixtures() {
            let rep = a.adjoint_representation();
            let h2 = cohomology_group(&CoeffComplex::new(rep.clone()), 2).unwrap();
            let (g, v) = (a.dim(), rep.vdim());
            let reps: Vec<ExtensionCocycle> =
                std::iter::once(ExtensionCocycle::zero(g, v))
                    .chain(h2.representatives.iter().map(|f| {
                        ExtensionCocycle::from_cochain(&PairCochain::from_flat(g, v, 2, f))
                    }))
                    .collect();
            for (i, c1) in reps.iter().enumerate() {
                let n = s.matrix(v, g);
                let shift = coboundary_of(&rep, &n);
                let c1b = ExtensionCocycle::from_cochain(&PairCochain {
                    f: c1.omega.add(&shift.omega),
                    theta: Some(AlternatingMap::linear(&(&c1.chi + &shift.chi))),
                });
                let e1 = extension_from_cocycle(&rep, c1).unwrap();
                let e1b = extension_from_cocycle(&rep, &c1b).unwrap();
                assert!(
                    extension_isomorphic(&e1, &e1b).unwrap().found().is_some(),
                    "{name}"
                );
                assert_eq!(
                    extension_isomorphic(&e1, &e1).unwrap(),
                    Witness::Found(RationalMatrix::zeros(v, g))
                );
                for c2 in &reps[i + 1..] {
                    let e2 = extension_from_cocycle(&rep, c2).unwrap();
                    assert!(matches!(
                        cohomologous(&rep, c1, c2),
                        Witness::Infeasible { .. }
                    ));
                    assert!(
                        matches!(
                            extension_isomorphic(&e1, &e2).unwrap(),
                            Witness::Infeasible { .. }
                        ),
                        "{name}"
                    );
                }
            }
        }
    }

    #[test]
    fn incompatible_extensions_rejected() {
        let a = aff1_e2();
        let e1 = extension_from_cocycle(&a.adjoint_representation(), &ExtensionCocycle::zero(2, 2))
            .unwrap();
        let b = DifferenceLieAlgebra::new(fixtures::aff1(), fixtures::neg_identity(2)).unwrap();
        let e2 = extension_from_cocycle(&b.adjoint_representation(), &ExtensionCocycle::zero(2, 2))
            .unwrap();
        assert!(matches!(
            extension_isomorphic(&e1, &e2),
            Err(Error::IncompatibleBaseOrKernel(_))
        ));
    }
}
