//! Exact integration of nilpotent relative difference Lie algebras.
//!
//! Groups are handled in exponential coordinates of the first kind, so a
//! group element is a coordinate vector in the Lie algebra and the product is
//! the Baker–Campbell–Hausdorff series, which is a finite sum here. The
//! integrated operator is `𝒟(exp x) = P_H EXP(x, Dx)`, computed as the
//! h-component of `bch((x, Dx), (−x, 0))` in `g ⋉ h`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{ratio, DualScalar, Rational, RationalMatrix, Scalar, SubspaceBasis};
use crate::structures::{LieAlgebra, RelDiffHomomorphism, RelDiffStructure};

/// Environment variable overriding the default BCH order.
pub const BCH_ORDER_ENV: &str = "DIFFLIE_BCH_ORDER";
pub const DEFAULT_BCH_ORDER: usize = 6;

/// Length of the lower central series: the least `c` with `g^{c+1} = 0`.
pub fn nilpotency_class(g: &LieAlgebra) -> Result<usize> {
    let n = g.dim();
    let mut current = SubspaceBasis::full(n);
    let mut class = 0;
    while current.dim() > 0 {
        let next = SubspaceBasis::spanned_by(
            n,
            (0..n)
                .flat_map(|i| current.vectors().iter().map(move |v| (i, v)))
                .map(|(i, v)| {
                    let e = crate::linalg::unit_vec(n, i);
                    g.bracket(&e, v)
                }),
        );
        if next.dim() == current.dim() {
            return Err(Error::NotNilpotent);
        }
        current = next;
        class += 1;
    }
    Ok(class)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

/// `coeff · [w_1, [w_2, … [w_{m−1}, w_m]…]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchTerm {
    pub coeff: Rational,
    pub word: Vec<Letter>,
}

/// Dynkin's series for `log(e^X e^Y)` truncated at bracket length `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchTable {
    order: usize,
    terms: Vec<BchTerm>,
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| {
        acc * Rational::from_integer(k.into())
    })
}

impl BchTable {
    /// Expands `Σ_n (−1)^{n−1}/n Σ [X^{r_1}Y^{s_1}⋯X^{r_n}Y^{s_n}] / (m Π r_i! s_i!)`
    /// with `m = Σ(r_i + s_i)`, then normalizes each word so its last two
    /// letters read `X Y` and drops words that vanish identically.
    pub fn dynkin(order: usize) -> Self {
        assert!(order >= 1, "BCH order must be positive");
        let mut acc: BTreeMap<Vec<Letter>, Rational> = BTreeMap::new();
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        expand(order, 0, &mut blocks, &mut acc);
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(word, coeff)| BchTerm { coeff, word })
            .collect();
        Self { order, terms }
    }

    /// Order from `DIFFLIE_BCH_ORDER`, else [`DEFAULT_BCH_ORDER`].
    pub fn default_order() -> usize {
        std::env::var(BCH_ORDER_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n: &usize| n >= 1)
            .unwrap_or(DEFAULT_BCH_ORDER)
    }

    /// The table at [`BchTable::default_order`], built once per process.
    pub fn shared() -> &'static BchTable {
        static TABLE: OnceLock<BchTable> = OnceLock::new();
        TABLE.get_or_init(|| BchTable::dynkin(BchTable::default_order()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &[BchTerm] {
        &self.terms
    }

    /// Keeps only words of length at most `len`.
    pub fn truncated(&self, len: usize) -> Self {
        Self {
            order: len.min(self.order),
            terms: self
                .terms
                .iter()
                .filter(|t| t.word.len() <= len)
                .cloned()
                .collect(),
        }
    }

    /// `log(e^x e^y)` in an algebra whose brackets of length `> max_len` vanish.
    pub fn evaluate<S: Scalar>(&self, g: &LieAlgebra, x: &[S], y: &[S], max_len: usize) -> Vec<S> {
        let mut out = vec![S::zero_scalar(); g.dim()];
        let pick = |l: Letter| if l == Letter::X { x } else { y };
        for t in self.terms.iter().filter(|t| t.word.len() <= max_len) {
            let (last, rest) = t.word.split_last().expect("words are nonempty");
            let mut v = pick(*last).to_vec();
            for &l in rest.iter().rev() {
                v = g.bracket_generic(pick(l), &v);
                if v.iter().all(Scalar::is_zero_scalar) {
                    break;
                }
            }
            let c = S::from_rational(&t.coeff);
            for (o, w) in out.iter_mut().zip(v) {
                *o = o.clone() + c.clone() * w;
            }
        }
        out
    }
}

fn expand(
    order: usize,
    len: usize,
    blocks: &mut Vec<(usize, usize)>,
    acc: &mut BTreeMap<Vec<Letter>, Rational>,
) {
    if !blocks.is_empty() {
        let n = blocks.len() as i64;
        let mut denom = Rational::from_integer((n * len as i64).into());
        let mut word = Vec::with_capacity(len);
        for &(r, s) in blocks.iter() {
            denom *= factorial(r) * factorial(s);
            word.extend(std::iter::repeat_n(Letter::X, r));
            word.extend(std::iter::repeat_n(Letter::Y, s));
        }
        let mut coeff = if n % 2 == 1 {
            denom.recip()
        } else {
            -denom.recip()
        };
        let m = word.len();
        let keep = if m >= 2 {
            if word[m - 2] == word[m - 1] {
                false
            } else {
                if word[m - 2] == Letter::Y {
                    word.swap(m - 2, m - 1);
                    coeff = -coeff;
                }
                true
            }
        } else {
            true
        };
        if keep {
            *acc.entry(word).or_insert_with(Rational::zero) += coeff;
        }
    }
    for size in 1..=order - len {
        for r in 0..=size {
            blocks.push((r, size - r));
            expand(order, len + size, blocks, acc);
            blocks.pop();
        }
    }
}

/// A simply connected nilpotent Lie group in exponential coordinates.
#[derive(Clone, Debug)]
pub struct NilpotentGroup {
    pub algebra: LieAlgebra,
    pub class: usize,
    table: BchTable,
}

impl NilpotentGroup {
    pub fn new(algebra: LieAlgebra) -> Result<Self> {
        Self::with_table(algebra, BchTable::shared().clone())
    }

    pub fn with_table(algebra: LieAlgebra, table: BchTable) -> Result<Self> {
        let class = nilpotency_class(&algebra)?;
        if class > table.order() {
            return Err(Error::ClassExceedsOrder {
                class,
                order: table.order(),
            });
        }
        Ok(Self {
            algebra,
            class,
            table,
        })
    }

    /// Accepts any table, even one too short for the class.
    pub fn with_table_unchecked(algebra: LieAlgebra, table: BchTable) -> Result<Self> {
        let class = nilpotency_class(&algebra)?;
        Ok(Self {
            algebra,
            class,
            table,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.mul_generic(x, y)
    }

    pub fn mul_generic<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.table.evaluate(&self.algebra, x, y, self.class.max(1))
    }

    pub fn inverse(&self, x: &[Rational]) -> Vec<Rational> {
        x.iter().map(|a| -a).collect()
    }

    pub fn identity(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.dim()]
    }
}

/// `bch(x, y) = log(e^x e^y)` with the shared table.
pub fn bch(g: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    Ok(NilpotentGroup::new(g.clone())?.mul(x, y))
}

/// `Φ(exp x) = e^{ρ(x)}`, acting linearly on exponential coordinates of `H`.
pub fn integrated_action(s: &RelDiffStructure, x: &[Rational]) -> Result<RationalMatrix> {
    s.triple.rho_of(x).exp_nilpotent().ok_or_else(|| {
        Error::ActionNotNilpotent(format!(
            "ρ of {} is not nilpotent",
            crate::linalg::format_vec(x)
        ))
    })
}

/// `(G, H, Φ, 𝒟)` integrating a nilpotent relative difference Lie algebra.
#[derive(Clone, Debug)]
pub struct RelDiffGroup {
    pub structure: RelDiffStructure,
    pub g: NilpotentGroup,
    pub h: NilpotentGroup,
    pub semidirect: NilpotentGroup,
}

/// Builds the relative difference Lie group with the shared BCH table.
pub fn integrate_operator(s: &RelDiffStructure) -> Result<RelDiffGroup> {
    RelDiffGroup::with_table(s, BchTable::shared().clone())
}

impl RelDiffGroup {
    pub fn with_table(s: &RelDiffStructure, table: BchTable) -> Result<Self> {
        let semidirect = NilpotentGroup::with_table(s.triple.semidirect(), table.clone())?;
        Ok(Self {
            structure: s.clone(),
            g: NilpotentGroup::with_table(s.triple.g.clone(), table.clone())?,
            h: NilpotentGroup::with_table(s.triple.h.clone(), table)?,
            semidirect,
        })
    }

    /// Same groups, different (possibly wrong) BCH table. Used for mutation tests.
    pub fn with_table_unchecked(s: &RelDiffStructure, table: BchTable) -> Result<Self> {
        Ok(Self {
            structure: s.clone(),
            g: NilpotentGroup::with_table_unchecked(s.triple.g.clone(), table.clone())?,
            h: NilpotentGroup::with_table_unchecked(s.triple.h.clone(), table.clone())?,
            semidirect: NilpotentGroup::with_table_unchecked(s.triple.semidirect(), table)?,
        })
    }

    /// `𝒟(exp x)` in exponential coordinates of `H`.
    pub fn big_d(&self, x: &[Rational]) -> Vec<Rational> {
        self.big_d_generic(x)
    }

    pub fn big_d_generic<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        let gd = self.g.dim();
        let dx = self.structure.d.mul_vec_generic(x);
        let mut a = x.to_vec();
        a.extend(dx);
        let mut b: Vec<S> = x.iter().map(|v| -v.clone()).collect();
        b.extend((0..self.h.dim()).map(|_| S::zero_scalar()));
        self.semidirect.mul_generic(&a, &b).split_off(gd)
    }

    /// `d/dt 𝒟(exp tx)` at `t = 0`, computed over ℚ[t]/(t²).
    pub fn tangent(&self, x: &[Rational]) -> Vec<Rational> {
        let tx: Vec<DualScalar> = x
            .iter()
            .map(|v| DualScalar::new(Rational::zero(), v.clone()))
            .collect();
        self.big_d_generic(&tx)
            .into_iter()
            .map(|d| d.infinitesimal)
            .collect()
    }

    pub fn phi(&self, a: &[Rational]) -> Result<RationalMatrix> {
        integrated_action(&self.structure, a)
    }

    /// `(𝒟(a·b), 𝒟(a)·Φ(a)𝒟(b))`.
    pub fn group_law_sides(
        &self,
        a: &[Rational],
        b: &[Rational],
    ) -> Result<(Vec<Rational>, Vec<Rational>)> {
        self.group_law_sides_with(a, b, |x| self.big_d(x))
    }

    fn group_law_sides_with(
        &self,
        a: &[Rational],
        b: &[Rational],
        d: impl Fn(&[Rational]) -> Vec<Rational>,
    ) -> Result<(Vec<Rational>, Vec<Rational>)> {
        let lhs = d(&self.g.mul(a, b));
        let rhs = self.h.mul(&d(a), &self.phi(a)?.mul_vec(&d(b)));
        Ok((lhs, rhs))
    }
}

/// Deterministic sample coordinates: all vectors with entries from `values`,
/// enumerated in mixed radix, paired by a fixed stride.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleGrid {
    pub values: Vec<Rational>,
    pub pairs: usize,
}

impl Default for SampleGrid {
    /// Values `−1, −1/2, 0, 1/2, 1` and 125 pairs.
    fn default() -> Self {
        Self {
            values: vec![
                ratio(-1, 1),
                ratio(-1, 2),
                Rational::zero(),
                ratio(1, 2),
                Rational::one(),
            ],
            pairs: 125,
        }
    }
}

impl SampleGrid {
    pub fn point(&self, dim: usize, k: usize) -> Vec<Rational> {
        let base = self.values.len().max(1);
        let mut k = k;
        (0..dim)
            .map(|_| {
                let v = self
                    .values
                    .get(k % base)
                    .cloned()
                    .unwrap_or_else(Rational::zero);
                k /= base;
                v
            })
            .collect()
    }

    fn size(&self, dim: usize) -> usize {
        self.values.len().max(1).saturating_pow(dim as u32).max(1)
    }

    /// The `i`-th pair `(p_i, p_{7i+3})`, indices mod the grid size.
    pub fn pair(&self, dim: usize, i: usize) -> (Vec<Rational>, Vec<Rational>) {
        let n = self.size(dim);
        (self.point(dim, i % n), self.point(dim, (7 * i + 3) % n))
    }
}

/// A pair where the group law fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLawFailure {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLawReport {
    pub pairs_checked: usize,
    pub failure: Option<GroupLawFailure>,
}

impl GroupLawReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `𝒟(a·b) = 𝒟(a)·Φ(a)𝒟(b)` on the grid, stopping at the first failure.
pub fn group_law_report(rdg: &RelDiffGroup, grid: &SampleGrid) -> Result<GroupLawReport> {
    let dim = rdg.g.dim();
    for i in 0..grid.pairs {
        let (a, b) = grid.pair(dim, i);
        let (lhs, rhs) = rdg.group_law_sides(&a, &b)?;
        if lhs != rhs {
            return Ok(GroupLawReport {
                pairs_checked: i + 1,
                failure: Some(GroupLawFailure { a, b, lhs, rhs }),
            });
        }
    }
    Ok(GroupLawReport {
        pairs_checked: grid.pairs,
        failure: None,
    })
}

pub fn group_law_check(rdg: &RelDiffGroup, grid: &SampleGrid) -> Result<bool> {
    Ok(group_law_report(rdg, grid)?.passed())
}

/// With `Ψ_G(exp x) = exp(ψ_g x)` and `Ψ_H(exp u) = exp(ψ_h u)`, checks
/// `Ψ_H ∘ 𝒟 = 𝒟' ∘ Ψ_G` and `Ψ_H(Φ(a)u) = Φ'(Ψ_G a)Ψ_H(u)` on the grid.
pub fn functoriality_check(
    s: &RelDiffStructure,
    t: &RelDiffStructure,
    hom: &RelDiffHomomorphism,
    grid: &SampleGrid,
) -> Result<bool> {
    hom.validate(s, t)?;
    let (gs, gt) = (integrate_operator(s)?, integrate_operator(t)?);
    let (gdim, hdim) = (gs.g.dim(), gs.h.dim());
    for i in 0..grid.pairs {
        let (a, _) = grid.pair(gdim, i);
        let (_, u) = grid.pair(hdim, i);
        if hom.psi_h.mul_vec(&gs.big_d(&a)) != gt.big_d(&hom.psi_g.mul_vec(&a)) {
            return Ok(false);
        }
        let lhs = hom.psi_h.mul_vec(&gs.phi(&a)?.mul_vec(&u));
        let rhs = gt
            .phi(&hom.psi_g.mul_vec(&a))?
            .mul_vec(&hom.psi_h.mul_vec(&u));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{rat, unit_vec};
    use crate::structures::LieActTriple;
    use proptest::prelude::*;

    fn h3_minus_id() -> RelDiffStructure {
        RelDiffStructure::new(
            LieActTriple::adjoint(fixtures::h3()),
            fixtures::neg_identity(3),
        )
        .unwrap()
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(nilpotency_class(&fixtures::abelian(3)), Ok(1));
        assert_eq!(nilpotency_class(&fixtures::h3()), Ok(2));
        assert_eq!(nilpotency_class(&fixtures::filiform(5)), Ok(4));
        assert_eq!(
            nilpotency_class(&fixtures::strictly_upper_triangular(4)),
            Ok(3)
        );
        assert_eq!(
            nilpotency_class(&fixtures::aff1()),
            Err(Error::NotNilpotent)
        );
        assert_eq!(nilpotency_class(&fixtures::sl2()), Err(Error::NotNilpotent));
    }

    /// Oracle: `X + Y + ½[X,Y] + (1/12)[X,[X,Y]] − (1/12)[Y,[X,Y]] − (1/24)[Y,[X,[X,Y]]]`.
    /// Words are not a basis in degree 4: `[X,[Y,[X,Y]]] = [Y,[X,[X,Y]]]`, so
    /// only the sum of those two coefficients is fixed.
    #[test]
    fn dynkin_low_order_terms() {
        use Letter::{X, Y};
        let t = BchTable::dynkin(4);
        let get = |w: &[Letter]| {
            t.terms()
                .iter()
                .find(|x| x.word == w)
                .map(|x| x.coeff.clone())
                .unwrap_or_default()
        };
        assert_eq!(get(&[X]), rat(1));
        assert_eq!(get(&[Y]), rat(1));
        assert_eq!(get(&[X, Y]), ratio(1, 2));
        assert_eq!(get(&[X, X, Y]), ratio(1, 12));
        assert_eq!(get(&[Y, X, Y]), ratio(-1, 12));
        assert_eq!(get(&[Y, X, X, Y]) + get(&[X, Y, X, Y]), ratio(-1, 24));
        assert_eq!(get(&[X, Y, Y, Y]) + get(&[Y, X, Y, Y]), rat(0));
        assert_eq!(get(&[X, X, X, Y]), rat(0));
    }

    #[test]
    fn bch_examples() {
        let a = fixtures::abelian(2);
        assert_eq!(
            bch(&a, &[rat(1), rat(2)], &[rat(3), rat(-1)]).unwrap(),
            vec![rat(4), rat(1)]
        );
        let h = fixtures::h3();
        let (e1, e2, e3) = (unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2));
        assert_eq!(
            bch(&h, &e1, &e2).unwrap(),
            vec![rat(1), rat(1), ratio(1, 2)]
        );
        let l = bch(&h, &bch(&h, &e1, &e2).unwrap(), &e3).unwrap();
        let r = bch(&h, &e1, &bch(&h, &e2, &e3).unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(
            bch(&fixtures::aff1(), &e1[..2], &e2[..2]),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn class_above_order_is_rejected() {
        let g = fixtures::filiform(5);
        assert_eq!(
            NilpotentGroup::with_table(g, BchTable::dynkin(3)).err(),
            Some(Error::ClassExceedsOrder { class: 4, order: 3 })
        );
    }

    /// Oracle: `exp(Z) = exp(X)exp(Y)` for strictly upper triangular matrices,
    /// where the exponential series terminates. Sizes 4 and 5 give classes 3 and 4.
    #[test]
    fn bch_matches_matrix_exponential() {
        for n in [4usize, 5] {
            let g = fixtures::strictly_upper_triangular(n);
            let grp = NilpotentGroup::new(g).unwrap();
            let basis: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let to_m = |x: &[Rational]| {
                let mut m = RationalMatrix::zeros(n, n);
                for (k, &(i, j)) in basis.iter().enumerate() {
                    m[(i, j)] = x[k].clone();
                }
                m
            };
            let x: Vec<Rational> = (0..basis.len())
                .map(|k| ratio((k as i64 % 5) - 2, 1 + (k as i64 % 2)))
                .collect();
            let y: Vec<Rational> = (0..basis.len())
                .map(|k| ratio(((3 * k as i64) % 7) - 3, 1))
                .collect();
            let z = grp.mul(&x, &y);
            let lhs = to_m(&x)
                .exp_nilpotent()
                .unwrap()
                .matmul(&to_m(&y).exp_nilpotent().unwrap());
            assert_eq!(to_m(&z).exp_nilpotent().unwrap(), lhs, "n = {n}");
        }
    }

    #[test]
    fn integrated_action_examples() {
        let s = h3_minus_id();
        let phi = integrated_action(&s, &unit_vec(3, 0)).unwrap();
        assert_eq!(phi.column(1), vec![rat(0), rat(1), rat(1)]);
        assert_eq!(phi.column(0), unit_vec(3, 0));
        assert_eq!(phi.column(2), unit_vec(3, 2));
        let x = vec![rat(2), ratio(1, 2), rat(-1)];
        let neg: Vec<Rational> = x.iter().map(|v| -v).collect();
        let back = integrated_action(&s, &x)
            .unwrap()
            .matmul(&integrated_action(&s, &neg).unwrap());
        assert_eq!(back, RationalMatrix::identity(3));
        let trivial = RelDiffStructure::new_unchecked(
            LieActTriple::new_unchecked(
                fixtures::h3(),
                fixtures::h3(),
                vec![RationalMatrix::zeros(3, 3); 3],
            ),
            RationalMatrix::zeros(3, 3),
        );
        assert_eq!(
            integrated_action(&trivial, &x).unwrap(),
            RationalMatrix::identity(3)
        );
        let aff = RelDiffStructure::new_unchecked(
            LieActTriple::adjoint(fixtures::aff1()),
            RationalMatrix::zeros(2, 2),
        );
        assert!(matches!(
            integrated_action(&aff, &unit_vec(2, 0)),
            Err(Error::ActionNotNilpotent(_))
        ));
    }

    #[test]
    fn h3_inversion() {
        let rdg = integrate_operator(&h3_minus_id()).unwrap();
        let grid = SampleGrid::default();
        for i in 0..grid.pairs {
            let (a, _) = grid.pair(3, i);
            assert_eq!(rdg.big_d(&a), a.iter().map(|v| -v).collect::<Vec<_>>());
        }
        let r = group_law_report(&rdg, &grid).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 125);
        for i in 0..3 {
            assert_eq!(rdg.tangent(&unit_vec(3, i)), rdg.structure.d.column(i));
        }
    }

    #[test]
    fn zero_operator_integrates_to_identity_element() {
        let s = RelDiffStructure::new(
            LieActTriple::adjoint(fixtures::h3()),
            RationalMatrix::zeros(3, 3),
        )
        .unwrap();
        let rdg = integrate_operator(&s).unwrap();
        assert_eq!(rdg.big_d(&[rat(1), rat(2), rat(3)]), vec![rat(0); 3]);
        assert!(group_law_check(&rdg, &SampleGrid::default()).unwrap());
    }

    #[test]
    fn dropping_bch_correction_breaks_group_law() {
        let s = h3_minus_id();
        let broken =
            RelDiffGroup::with_table_unchecked(&s, BchTable::dynkin(6).truncated(1)).unwrap();
        let r = group_law_report(&broken, &SampleGrid::default()).unwrap();
        let f = r.failure.expect("mutation must be detected");
        assert_ne!(f.lhs, f.rhs);
    }

    #[test]
    fn functoriality_for_h3_automorphism() {
        let s = h3_minus_id();
        let psi = RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1]]);
        let hom = RelDiffHomomorphism {
            psi_g: psi.clone(),
            psi_h: psi,
        };
        assert!(functoriality_check(&s, &s, &hom, &SampleGrid::default()).unwrap());
        let id = RelDiffHomomorphism {
            psi_g: RationalMatrix::identity(3),
            psi_h: RationalMatrix::identity(3),
        };
        assert!(functoriality_check(&s, &s, &id, &SampleGrid::default()).unwrap());
        let bad = RelDiffHomomorphism {
            psi_g: RationalMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
            psi_h: RationalMatrix::identity(3),
        };
        assert!(matches!(
            functoriality_check(&s, &s, &bad, &SampleGrid::default()),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn zero_homomorphism_onto_trivial_structure() {
        let s = h3_minus_id();
        let zero = RelDiffStructure::new(
            LieActTriple::adjoint(fixtures::abelian(1)),
            RationalMatrix::zeros(1, 1),
        )
        .unwrap();
        let hom = RelDiffHomomorphism {
            psi_g: RationalMatrix::zeros(1, 3),
            psi_h: RationalMatrix::zeros(1, 3),
        };
        assert!(functoriality_check(&s, &zero, &hom, &SampleGrid::default()).unwrap());
    }

    fn coords() -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-4i64..=4, 1i64..=2), 6)
            .prop_map(|v| v.into_iter().map(|(n, d)| ratio(n, d)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn group_axioms_on_upper_triangular(x in coords(), y in coords(), z in coords()) {
            let grp = NilpotentGroup::new(fixtures::strictly_upper_triangular(4)).unwrap();
            prop_assert_eq!(grp.mul(&grp.mul(&x, &y), &z), grp.mul(&x, &grp.mul(&y, &z)));
            prop_assert_eq!(grp.mul(&x, &grp.inverse(&x)), grp.identity());
            prop_assert_eq!(grp.mul(&x, &grp.identity()), x.clone());
        }

        #[test]
        fn projection_to_g_is_a_homomorphism(x in coords(), y in coords()) {
            let rdg = integrate_operator(&h3_minus_id()).unwrap();
            let z = rdg.semidirect.mul(&x, &y);
            let zg = rdg.g.mul(&x[..3], &y[..3]);
            prop_assert_eq!(&z[..3], zg.as_slice());
        }

        #[test]
        fn action_is_by_automorphisms(x in coords(), y in coords()) {
            let s = h3_minus_id();
            let rdg = integrate_operator(&s).unwrap();
            let (a, b) = (&x[..3], &x[3..]);
            let phi = rdg.phi(a).unwrap();
            let u = &y[..3];
            prop_assert_eq!(phi.mul_vec(&rdg.h.mul(b, u)), rdg.h.mul(&phi.mul_vec(b), &phi.mul_vec(u)));
            prop_assert_eq!(rdg.phi(&rdg.g.mul(a, &y[3..])).unwrap(), phi.matmul(&rdg.phi(&y[3..]).unwrap()));
        }
    }
}
