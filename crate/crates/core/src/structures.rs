//! Lie algebras, actions, LieAct triples, relative difference operators,
//! difference Lie algebras and their representations.
//!
//! Every axiom is checked on basis tuples, which is complete by
//! multilinearity. Validators collect all failing tuples rather than
//! stopping at the first one.

use crate::error::{AxiomFailure, Error, Result};
use crate::linalg::{
    axpy, is_zero_vec, ratio, sub_vec, unit_vec, zero_vec, Rational, RationalMatrix, Scalar,
};
use crate::multilinear::{shuffles, AlternatingMap, BigradedMap, Side, Split};
use crate::nr::nr_bracket;

/// Finite-dimensional Lie algebra given by structure constants. Basis
/// names are labels only and do not take part in equality.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    bracket: AlternatingMap,
    names: Vec<String>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.bracket == o.bracket
    }
}

impl Eq for LieAlgebra {}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl LieAlgebra {
    /// Wraps a bracket without checking the Jacobi identity.
    pub fn new_unchecked(bracket: AlternatingMap) -> Self {
        assert_eq!(bracket.arity(), 2, "a bracket has arity 2");
        assert_eq!(bracket.domain_dim(), bracket.target_dim());
        let names = default_names("e", bracket.domain_dim());
        Self { bracket, names }
    }

    pub fn new(bracket: AlternatingMap) -> Result<Self> {
        let a = Self::new_unchecked(bracket);
        a.validate()?;
        Ok(a)
    }

    /// Builds from entries `[e_i, e_j] = v` (antisymmetry implied).
    pub fn from_table(dim: usize, table: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let mut b = AlternatingMap::zero(dim, 2, dim);
        for (i, j, v) in table {
            if *i >= dim || *j >= dim || v.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket entry ({i},{j}) out of range"
                )));
            }
            b.set_any(&[*i, *j], v.clone())?;
        }
        Self::new(b)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new_unchecked(AlternatingMap::zero(dim, 2, dim))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.names = names;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.bracket.domain_dim()
    }

    pub fn bracket_map(&self) -> &AlternatingMap {
        &self.bracket
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.bracket.eval(&[x.to_vec(), y.to_vec()])
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        match self.bracket.basis_value(&[i, j]) {
            None => zero_vec(self.dim()),
            Some((1, v)) => v.to_vec(),
            Some((_, v)) => v.iter().map(|x| -x).collect(),
        }
    }

    /// Bracket over any scalar ring containing ℚ.
    pub fn bracket_generic<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero_scalar(); n];
        for (idx, v) in self.bracket.entries() {
            let (i, j) = (idx[0], idx[1]);
            let c = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if c.is_zero_scalar() {
                continue;
            }
            for (o, vk) in out.iter_mut().zip(v) {
                if !num_traits::Zero::is_zero(vk) {
                    *o = o.clone() + c.clone() * S::from_rational(vk);
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Matrix of `ad_x`.
    pub fn adjoint(&self, x: &[Rational]) -> RationalMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| self.bracket(x, &unit_vec(self.dim(), j)))
            .collect();
        RationalMatrix::from_columns(self.dim(), &cols)
    }

    pub fn adjoint_matrices(&self) -> Vec<RationalMatrix> {
        (0..self.dim())
            .map(|i| self.adjoint(&unit_vec(self.dim(), i)))
            .collect()
    }

    /// Every basis triple `i < j < k` with nonzero cyclic sum.
    pub fn jacobi_failures(&self) -> Vec<AxiomFailure> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut r = zero_vec(n);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let ab = self.bracket_basis(a, b);
                        crate::linalg::add_assign(&mut r, &self.bracket(&ab, &unit_vec(n, c)));
                    }
                    if !is_zero_vec(&r) {
                        out.push(AxiomFailure::new(vec![i, j, k], r));
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.jacobi_failures();
        if f.is_empty() {
            Ok(())
        } else {
            Err(Error::JacobiViolation(f))
        }
    }

    /// Basis pairs where `φ[x,y] ≠ [φx, φy]'` for a linear map `φ: self → other`.
    pub fn homomorphism_failures(
        &self,
        other: &LieAlgebra,
        phi: &RationalMatrix,
    ) -> Vec<AxiomFailure> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = phi.mul_vec(&self.bracket_basis(i, j));
                let rhs = other.bracket(&phi.column(i), &phi.column(j));
                let r = sub_vec(&lhs, &rhs);
                if !is_zero_vec(&r) {
                    out.push(AxiomFailure::new(vec![i, j], r));
                }
            }
        }
        out
    }
}

/// `Σ x_i m_i` for a list of matrices indexed by a basis.
pub fn combine(ms: &[RationalMatrix], x: &[Rational], rows: usize, cols: usize) -> RationalMatrix {
    let mut acc = RationalMatrix::zeros(rows, cols);
    for (m, c) in ms.iter().zip(x) {
        if !num_traits::Zero::is_zero(c) {
            acc = &acc + &m.scale(c);
        }
    }
    acc
}

fn flatten(m: &RationalMatrix) -> Vec<Rational> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// Failures of `ρ([x,y]) = [ρ(x), ρ(y)]` on basis pairs; residuals are
/// row-major flattened matrices.
pub fn representation_failures(
    g: &LieAlgebra,
    rho: &[RationalMatrix],
    vdim: usize,
) -> Vec<AxiomFailure> {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = combine(rho, &g.bracket_basis(i, j), vdim, vdim);
            let rhs = rho[i].commutator(&rho[j]);
            let r = &lhs - &rhs;
            if !r.is_zero() {
                out.push(AxiomFailure::new(vec![i, j], flatten(&r)));
            }
        }
    }
    out
}

/// Failures of `ρ(x)[u,v] = [ρ(x)u, v] + [u, ρ(x)v]` at `(x, u, v)`.
pub fn derivation_failures(
    g_dim: usize,
    h: &LieAlgebra,
    rho: &[RationalMatrix],
) -> Vec<AxiomFailure> {
    let m = h.dim();
    let mut out = Vec::new();
    for (i, r) in rho.iter().enumerate().take(g_dim) {
        for a in 0..m {
            for b in a + 1..m {
                let lhs = r.mul_vec(&h.bracket_basis(a, b));
                let mut rhs = h.bracket(&r.column(a), &unit_vec(m, b));
                crate::linalg::add_assign(&mut rhs, &h.bracket(&unit_vec(m, a), &r.column(b)));
                let res = sub_vec(&lhs, &rhs);
                if !is_zero_vec(&res) {
                    out.push(AxiomFailure::new(vec![i, a, b], res));
                }
            }
        }
    }
    out
}

fn check_matrices(
    rho: &[RationalMatrix],
    count: usize,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<()> {
    if rho.len() != count || rho.iter().any(|m| m.rows() != rows || m.cols() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "{what}: expected {count} matrices of size {rows}x{cols}"
        )));
    }
    Ok(())
}

/// Lie algebras `g`, `h` with an action of `g` on `h` by derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieActTriple {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    /// `rho[i]` is the matrix of `ρ(e_i)` on `h`.
    pub rho: Vec<RationalMatrix>,
}

impl LieActTriple {
    pub fn new_unchecked(g: LieAlgebra, h: LieAlgebra, rho: Vec<RationalMatrix>) -> Self {
        Self { g, h, rho }
    }

    pub fn new(g: LieAlgebra, h: LieAlgebra, rho: Vec<RationalMatrix>) -> Result<Self> {
        check_matrices(&rho, g.dim(), h.dim(), h.dim(), "action")?;
        g.validate()?;
        h.validate()?;
        let t = Self { g, h, rho };
        t.validate_action()?;
        Ok(t)
    }

    /// `(g, g, ad)`.
    pub fn adjoint(g: LieAlgebra) -> Self {
        let rho = g.adjoint_matrices();
        Self {
            h: g.clone(),
            g,
            rho,
        }
    }

    pub fn validate_action(&self) -> Result<()> {
        let rep = representation_failures(&self.g, &self.rho, self.h.dim());
        if !rep.is_empty() {
            return Err(Error::NotAnAction {
                kind: "homomorphism into gl(h)",
                failures: rep,
            });
        }
        let der = derivation_failures(self.g.dim(), &self.h, &self.rho);
        if !der.is_empty() {
            return Err(Error::NotAnAction {
                kind: "derivation of h",
                failures: der,
            });
        }
        Ok(())
    }

    pub fn split(&self) -> Split {
        Split::new(self.g.dim(), self.h.dim())
    }

    pub fn rho_of(&self, x: &[Rational]) -> RationalMatrix {
        combine(&self.rho, x, self.h.dim(), self.h.dim())
    }

    pub fn act(&self, x: &[Rational], u: &[Rational]) -> Vec<Rational> {
        self.rho_of(x).mul_vec(u)
    }

    /// Lift of the bracket of `g`.
    pub fn pi_hat(&self) -> AlternatingMap {
        BigradedMap::from_fn(self.split(), 2, 0, Side::G, |a, _| {
            self.g.bracket_basis(a[0], a[1])
        })
        .lift()
    }

    /// Lift of the action viewed in `Hom(g ⊗ h, h)`.
    pub fn rho_hat(&self) -> AlternatingMap {
        BigradedMap::from_fn(self.split(), 1, 1, Side::H, |a, b| {
            self.rho[a[0]].column(b[0])
        })
        .lift()
    }

    /// Lift of the bracket of `h`.
    pub fn mu_hat(&self) -> AlternatingMap {
        BigradedMap::from_fn(self.split(), 0, 2, Side::H, |_, b| {
            self.h.bracket_basis(b[0], b[1])
        })
        .lift()
    }

    /// `Π = π̂ + ρ̂ + μ̂`.
    pub fn big_pi(&self) -> AlternatingMap {
        self.pi_hat().add(&self.rho_hat()).add(&self.mu_hat())
    }

    /// The semidirect product `g ⋉_ρ h` on `g ⊕ h` coordinates.
    pub fn semidirect(&self) -> LieAlgebra {
        let s = self.split();
        let b = AlternatingMap::from_fn(s.total(), 2, s.total(), |c| {
            let (i, j) = (c[0], c[1]);
            let mut out = zero_vec(s.total());
            match (i < s.g, j < s.g) {
                (true, true) => out[..s.g].clone_from_slice(&self.g.bracket_basis(i, j)),
                (true, false) => out[s.g..].clone_from_slice(&self.rho[i].column(j - s.g)),
                (false, true) => {
                    let v = self.rho[j].column(i - s.g);
                    for (o, x) in out[s.g..].iter_mut().zip(v) {
                        *o = -x;
                    }
                }
                (false, false) => {
                    out[s.g..].clone_from_slice(&self.h.bracket_basis(i - s.g, j - s.g))
                }
            }
            out
        });
        let mut names: Vec<String> = self.g.names().to_vec();
        names.extend(self.h.names().iter().cloned());
        LieAlgebra::new_unchecked(b).with_names(names)
    }
}

/// Failures of `D[x,y] = ρ(x)Dy − ρ(y)Dx + [Dx,Dy]_h` on basis pairs; the
/// residual is right side minus left side.
pub fn difference_op_failures(t: &LieActTriple, d: &RationalMatrix) -> Vec<AxiomFailure> {
    let n = t.g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&t.g.bracket_basis(i, j));
            let (dx, dy) = (d.column(i), d.column(j));
            let mut rhs = t.rho[i].mul_vec(&dy);
            axpy(
                &mut rhs,
                &Rational::from_integer((-1).into()),
                &t.rho[j].mul_vec(&dx),
            );
            crate::linalg::add_assign(&mut rhs, &t.h.bracket(&dx, &dy));
            let r = sub_vec(&rhs, &lhs);
            if !is_zero_vec(&r) {
                out.push(AxiomFailure::new(vec![i, j], r));
            }
        }
    }
    out
}

/// `(g, h, ρ, D)` with validated axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelDiffStructure {
    pub triple: LieActTriple,
    /// Matrix of `D: g → h` (`dim h × dim g`).
    pub d: RationalMatrix,
}

impl RelDiffStructure {
    pub fn new_unchecked(triple: LieActTriple, d: RationalMatrix) -> Self {
        Self { triple, d }
    }

    pub fn new(triple: LieActTriple, d: RationalMatrix) -> Result<Self> {
        validate_rel_diff_op(&triple, &d)?;
        Ok(Self { triple, d })
    }

    pub fn split(&self) -> Split {
        self.triple.split()
    }

    /// `D` as an element of `F`, lifted to `g ⊕ h`.
    pub fn d_hat(&self) -> AlternatingMap {
        lift_g_to_h(self.split(), &AlternatingMap::linear(&self.d))
    }

    /// Matrices of `ρ_D(e_i) = ρ(e_i) + ad_h(D e_i)`, re-checked as a representation.
    pub fn rho_d(&self) -> Result<Vec<RationalMatrix>> {
        let ms = rho_d_matrices(&self.triple, &self.d);
        let f = representation_failures(&self.triple.g, &ms, self.triple.h.dim());
        if !f.is_empty() {
            return Err(Error::InternalInconsistency(format!(
                "rho_D fails the representation check at {} basis pairs",
                f.len()
            )));
        }
        Ok(ms)
    }
}

/// `ρ_D(e_i) = ρ(e_i) + ad_{D e_i}` without any check.
pub fn rho_d_matrices(t: &LieActTriple, d: &RationalMatrix) -> Vec<RationalMatrix> {
    (0..t.g.dim())
        .map(|i| &t.rho[i] + &t.h.adjoint(&d.column(i)))
        .collect()
}

pub fn validate_rel_diff_op(t: &LieActTriple, d: &RationalMatrix) -> Result<()> {
    if d.rows() != t.h.dim() || d.cols() != t.g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator must be {}x{}",
            t.h.dim(),
            t.g.dim()
        )));
    }
    let f = difference_op_failures(t, d);
    if f.is_empty() {
        Ok(())
    } else {
        Err(Error::NotDifferenceOp(f))
    }
}

/// Whether the graph `{(x, Dx)}` is a subalgebra of `g ⋉_ρ h`.
pub fn graph_closure_check(t: &LieActTriple, d: &RationalMatrix) -> bool {
    let sd = t.semidirect();
    let s = t.split();
    let graph = |x: &[Rational]| {
        let mut v = s.inject_g(x);
        v[s.g..].clone_from_slice(&d.mul_vec(x));
        v
    };
    for i in 0..s.g {
        for j in i + 1..s.g {
            let (ei, ej) = (unit_vec(s.g, i), unit_vec(s.g, j));
            let b = sd.bracket(&graph(&ei), &graph(&ej));
            if b != graph(s.g_part(&b)) {
                return false;
            }
        }
    }
    true
}

/// Lift of `θ: ∧^n g → h` to `g ⊕ h`.
pub fn lift_g_to_h(s: Split, theta: &AlternatingMap) -> AlternatingMap {
    s.embed_g_to_h(theta)
}

/// `⟦f1, f2⟧ = (−1)^{mn+1} Σ_{S(m,n)} (−1)^σ [f1(x_σ…), f2(x_σ…)]_h`.
pub fn courant_bracket(h: &LieAlgebra, f1: &AlternatingMap, f2: &AlternatingMap) -> AlternatingMap {
    let (m, n) = (f1.arity(), f2.arity());
    assert_eq!(f1.domain_dim(), f2.domain_dim());
    let sh = shuffles(m, m + n);
    let sign = if (m * n + 1) % 2 == 0 { 1 } else { -1 };
    AlternatingMap::from_fn(f1.domain_dim(), m + n, h.dim(), |c| {
        let mut out = zero_vec(h.dim());
        for s in &sh {
            let a: Vec<usize> = s.perm[..m].iter().map(|&p| c[p]).collect();
            let b: Vec<usize> = s.perm[m..].iter().map(|&p| c[p]).collect();
            let v = h.bracket(f1.get(&a), f2.get(&b));
            axpy(
                &mut out,
                &Rational::from_integer((s.sign * sign).into()),
                &v,
            );
        }
        out
    })
}

/// `d_{π+ρ} f = [π̂ + ρ̂, f̂]_NR`, read back on g-arguments.
pub fn d_pi_rho(t: &LieActTriple, f: &AlternatingMap) -> AlternatingMap {
    let s = t.split();
    let br = nr_bracket(&t.pi_hat().add(&t.rho_hat()), &lift_g_to_h(s, f));
    s.restrict_g_to_h(&br)
}

/// `d_{π+ρ} D + ½⟦D, D⟧ = 0`.
pub fn dgla_mc_check(t: &LieActTriple, d: &RationalMatrix) -> bool {
    let dm = AlternatingMap::linear(d);
    let lhs = d_pi_rho(t, &dm).add(&courant_bracket(&t.h, &dm, &dm).scale(&ratio(1, 2)));
    lhs.is_zero()
}

/// Lie algebra with a difference operator for its adjoint action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceLieAlgebra {
    pub g: LieAlgebra,
    pub d: RationalMatrix,
}

impl DifferenceLieAlgebra {
    pub fn new(g: LieAlgebra, d: RationalMatrix) -> Result<Self> {
        g.validate()?;
        let t = LieActTriple::adjoint(g.clone());
        validate_rel_diff_op(&t, &d)?;
        Ok(Self { g, d })
    }

    pub fn new_unchecked(g: LieAlgebra, d: RationalMatrix) -> Self {
        Self { g, d }
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// `(g, g, ad, D)`.
    pub fn as_relative(&self) -> RelDiffStructure {
        RelDiffStructure::new_unchecked(LieActTriple::adjoint(self.g.clone()), self.d.clone())
    }

    /// Matrices of `ad_D(e_i) = ad_{e_i} + ad_{D e_i}`.
    pub fn ad_d(&self) -> Vec<RationalMatrix> {
        rho_d_matrices(&LieActTriple::adjoint(self.g.clone()), &self.d)
    }

    /// The adjoint representation `(g, ad, D)`.
    pub fn adjoint_representation(&self) -> DiffRepresentation {
        DiffRepresentation {
            base: self.clone(),
            varrho: self.g.adjoint_matrices(),
            k: self.d.clone(),
        }
    }
}

/// Representation `(V, ϱ, K)` of a difference Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffRepresentation {
    pub base: DifferenceLieAlgebra,
    pub varrho: Vec<RationalMatrix>,
    pub k: RationalMatrix,
}

impl DiffRepresentation {
    pub fn new_unchecked(
        base: DifferenceLieAlgebra,
        varrho: Vec<RationalMatrix>,
        k: RationalMatrix,
    ) -> Self {
        Self { base, varrho, k }
    }

    pub fn new(
        base: DifferenceLieAlgebra,
        varrho: Vec<RationalMatrix>,
        k: RationalMatrix,
    ) -> Result<Self> {
        let vdim = k.rows();
        if k.cols() != vdim {
            return Err(Error::DimensionMismatch("K must be square".into()));
        }
        check_matrices(&varrho, base.dim(), vdim, vdim, "representation")?;
        let r = Self { base, varrho, k };
        r.validate()?;
        Ok(r)
    }

    pub fn vdim(&self) -> usize {
        self.k.rows()
    }

    pub fn varrho_of(&self, x: &[Rational]) -> RationalMatrix {
        combine(&self.varrho, x, self.vdim(), self.vdim())
    }

    /// `ϱ_D(e_i) = ϱ(e_i) + ϱ(D e_i)`.
    pub fn varrho_d(&self) -> Vec<RationalMatrix> {
        (0..self.base.dim())
            .map(|i| &self.varrho[i] + &self.varrho_of(&self.base.d.column(i)))
            .collect()
    }

    /// Failures of `Kϱ(x)u = ϱ(Dx)u + ϱ(x)Ku + ϱ(Dx)Ku` at `(x, u)`.
    pub fn compatibility_failures(&self) -> Vec<AxiomFailure> {
        let mut out = Vec::new();
        for i in 0..self.base.dim() {
            let rdx = self.varrho_of(&self.base.d.column(i));
            let lhs = self.k.matmul(&self.varrho[i]);
            let rhs = &(&rdx + &self.varrho[i].matmul(&self.k)) + &rdx.matmul(&self.k);
            let r = &lhs - &rhs;
            for u in 0..self.vdim() {
                let col = r.column(u);
                if !is_zero_vec(&col) {
                    out.push(AxiomFailure::new(vec![i, u], col));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let rep = representation_failures(&self.base.g, &self.varrho, self.vdim());
        if !rep.is_empty() {
            return Err(Error::NotARepresentation {
                kind: "Lie representation",
                failures: rep,
            });
        }
        let c = self.compatibility_failures();
        if !c.is_empty() {
            return Err(Error::NotARepresentation {
                kind: "compatibility with K",
                failures: c,
            });
        }
        Ok(())
    }

    /// The semidirect Lie algebra `g ⋉_ϱ V` (no validation).
    pub fn semidirect_algebra(&self) -> LieAlgebra {
        let v_as_algebra = LieAlgebra::abelian(self.vdim());
        LieActTriple::new_unchecked(self.base.g.clone(), v_as_algebra, self.varrho.clone())
            .semidirect()
    }

    /// `D + K` on `g ⊕ V`.
    pub fn total_operator(&self) -> RationalMatrix {
        block_diag(&self.base.d, &self.k)
    }
}

pub fn block_diag(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            m[(r, c)] = a[(r, c)].clone();
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            m[(a.rows() + r, a.cols() + c)] = b[(r, c)].clone();
        }
    }
    m
}

/// `(g ⋉_ϱ V, D + K)`, re-validated as a difference Lie algebra.
pub fn semidirect_difference(rep: &DiffRepresentation) -> Result<DifferenceLieAlgebra> {
    DifferenceLieAlgebra::new(rep.semidirect_algebra(), rep.total_operator())
}

/// `(ψ_g, ψ_h)` between relative difference Lie algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelDiffHomomorphism {
    pub psi_g: RationalMatrix,
    pub psi_h: RationalMatrix,
}

impl RelDiffHomomorphism {
    /// Checks both Lie homomorphism conditions, `D'ψ_g = ψ_h D` and
    /// `ψ_h ρ(x) = ρ'(ψ_g x) ψ_h`.
    pub fn validate(&self, s: &RelDiffStructure, t: &RelDiffStructure) -> Result<()> {
        let (g, h) = (&s.triple.g, &s.triple.h);
        let (g2, h2) = (&t.triple.g, &t.triple.h);
        if self.psi_g.rows() != g2.dim()
            || self.psi_g.cols() != g.dim()
            || self.psi_h.rows() != h2.dim()
            || self.psi_h.cols() != h.dim()
        {
            return Err(Error::DimensionMismatch("homomorphism matrix sizes".into()));
        }
        let hg = g.homomorphism_failures(g2, &self.psi_g);
        if !hg.is_empty() {
            return Err(Error::NotAHomomorphism(format!(
                "psi_g fails at {} basis pairs",
                hg.len()
            )));
        }
        let hh = h.homomorphism_failures(h2, &self.psi_h);
        if !hh.is_empty() {
            return Err(Error::NotAHomomorphism(format!(
                "psi_h fails at {} basis pairs",
                hh.len()
            )));
        }
        if t.d.matmul(&self.psi_g) != self.psi_h.matmul(&s.d) {
            return Err(Error::NotAHomomorphism(
                "operators are not intertwined".into(),
            ));
        }
        for i in 0..g.dim() {
            let lhs = self.psi_h.matmul(&s.triple.rho[i]);
            let rhs = t.triple.rho_of(&self.psi_g.column(i)).matmul(&self.psi_h);
            if lhs != rhs {
                return Err(Error::NotAHomomorphism(format!(
                    "actions are not intertwined at e{}",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// Direct axiom check on raw data `(π, μ, ρ, D)`: Jacobi for both
/// brackets, the action axioms and the difference-operator identity.
pub fn direct_structure_check(
    pi: &AlternatingMap,
    mu: &AlternatingMap,
    rho: &[RationalMatrix],
    d: &RationalMatrix,
) -> bool {
    let g = LieAlgebra::new_unchecked(pi.clone());
    let h = LieAlgebra::new_unchecked(mu.clone());
    if !g.jacobi_failures().is_empty() || !h.jacobi_failures().is_empty() {
        return false;
    }
    if !representation_failures(&g, rho, h.dim()).is_empty()
        || !derivation_failures(g.dim(), &h, rho).is_empty()
    {
        return false;
    }
    let t = LieActTriple::new_unchecked(g, h, rho.to_vec());
    difference_op_failures(&t, d).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rat;

    fn neg_id(n: usize) -> RationalMatrix {
        RationalMatrix::scalar(n, &rat(-1))
    }

    #[test]
    fn lie_algebra_examples() {
        assert!(fixtures::aff1().validate().is_ok());
        assert!(fixtures::h3().validate().is_ok());
        let omega = fixtures::omega_table();
        match LieAlgebra::new(omega) {
            Err(Error::JacobiViolation(f)) => {
                assert_eq!(
                    f,
                    vec![AxiomFailure::new(
                        vec![0, 1, 2],
                        vec![rat(-1), rat(0), rat(0)]
                    )]
                );
            }
            other => panic!("expected a Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn difference_operator_examples() {
        let aff = fixtures::aff1();
        let t = LieActTriple::adjoint(aff.clone());
        assert!(validate_rel_diff_op(&t, &RationalMatrix::zeros(2, 2)).is_ok());
        assert!(validate_rel_diff_op(&t, &neg_id(2)).is_ok());
        assert!(validate_rel_diff_op(&t, &fixtures::e2_projection()).is_ok());
        match validate_rel_diff_op(&t, &RationalMatrix::identity(2)) {
            Err(Error::NotDifferenceOp(f)) => {
                assert_eq!(f, vec![AxiomFailure::new(vec![0, 1], vec![rat(0), rat(2)])]);
            }
            other => panic!("expected failure, got {other:?}"),
        }
        // −Id is a difference operator for any adjoint triple.
        for g in [fixtures::h3(), fixtures::sl2()] {
            let n = g.dim();
            assert!(validate_rel_diff_op(&LieActTriple::adjoint(g), &neg_id(n)).is_ok());
        }
    }

    #[test]
    fn graph_and_dgla_examples() {
        let t = LieActTriple::adjoint(fixtures::aff1());
        assert!(graph_closure_check(&t, &neg_id(2)));
        assert!(!graph_closure_check(&t, &RationalMatrix::identity(2)));
        assert!(dgla_mc_check(&t, &neg_id(2)));
        assert!(!dgla_mc_check(&t, &RationalMatrix::identity(2)));
        assert!(dgla_mc_check(&t, &RationalMatrix::zeros(2, 2)));
        let ab = LieActTriple::new(
            LieAlgebra::abelian(2),
            LieAlgebra::abelian(3),
            vec![RationalMatrix::zeros(3, 3); 2],
        )
        .unwrap();
        let d = RationalMatrix::from_i64_rows(&[&[1, 2], &[0, -1], &[3, 5]]);
        assert!(graph_closure_check(&ab, &d));
    }

    #[test]
    fn rho_d_examples() {
        let aff = fixtures::aff1();
        let t = LieActTriple::adjoint(aff.clone());
        let zero = RelDiffStructure::new(t.clone(), RationalMatrix::zeros(2, 2)).unwrap();
        assert_eq!(zero.rho_d().unwrap(), t.rho);
        let minus = RelDiffStructure::new(t.clone(), neg_id(2)).unwrap();
        assert!(minus.rho_d().unwrap().iter().all(RationalMatrix::is_zero));
        let proj = RelDiffStructure::new(t.clone(), fixtures::e2_projection()).unwrap();
        let ms = proj.rho_d().unwrap();
        assert_eq!(ms[1], aff.adjoint(&[rat(0), rat(1)]).scale(&rat(2)));
    }

    #[test]
    fn courant_examples() {
        let aff = fixtures::aff1();
        let d = AlternatingMap::linear(&neg_id(2));
        let dd = courant_bracket(&aff, &d, &d);
        assert_eq!(dd.get(&[0, 1]), &[rat(0), rat(2)]);
        // ⟦D,D⟧(x,y) = 2[Dx,Dy] for a general linear D.
        let h3 = fixtures::h3();
        let dm = RationalMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 1], &[3, 0, -1]]);
        let dd = courant_bracket(
            &h3,
            &AlternatingMap::linear(&dm),
            &AlternatingMap::linear(&dm),
        );
        for (idx, v) in dd.entries() {
            let expected = h3.bracket(&dm.column(idx[0]), &dm.column(idx[1]));
            assert_eq!(
                v.to_vec(),
                expected.iter().map(|x| x * rat(2)).collect::<Vec<_>>()
            );
        }
        let zero = AlternatingMap::zero(3, 2, 3);
        assert!(courant_bracket(&h3, &AlternatingMap::linear(&dm), &zero).is_zero());
    }

    #[test]
    fn semidirect_difference_examples() {
        let aff = DifferenceLieAlgebra::new(fixtures::aff1(), fixtures::e2_projection()).unwrap();
        assert!(semidirect_difference(&aff.adjoint_representation()).is_ok());
        let trivial = DiffRepresentation::new(
            DifferenceLieAlgebra::new(fixtures::aff1(), RationalMatrix::zeros(2, 2)).unwrap(),
            vec![RationalMatrix::zeros(1, 1); 2],
            RationalMatrix::zeros(1, 1),
        )
        .unwrap();
        let sd = semidirect_difference(&trivial).unwrap();
        assert_eq!(sd.d, RationalMatrix::zeros(3, 3));
        let one_dim = DiffRepresentation::new(
            aff.clone(),
            vec![RationalMatrix::zeros(1, 1); 2],
            RationalMatrix::zeros(1, 1),
        )
        .unwrap();
        assert!(semidirect_difference(&one_dim).is_ok());
    }

    #[test]
    fn with_zero_action_operators_are_homomorphisms() {
        // ρ = 0: difference operators are homomorphisms.
        let g = fixtures::aff1();
        let h = fixtures::h3();
        let t =
            LieActTriple::new(g.clone(), h.clone(), vec![RationalMatrix::zeros(3, 3); 2]).unwrap();
        let d = RationalMatrix::from_i64_rows(&[&[0, 0], &[0, 0], &[1, 0]]);
        assert_eq!(
            validate_rel_diff_op(&t, &d).is_ok(),
            g.homomorphism_failures(&h, &d).is_empty()
        );
    }
}
