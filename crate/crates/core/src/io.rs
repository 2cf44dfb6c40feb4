//! The problem file schema and its resolution into domain objects.
//!
//! The schema is format-agnostic serde; the CLI reads it from TOML. Every
//! scalar is a string `"p"` or `"p/q"`. Vectors are sparse maps from basis
//! names to coefficients, matrices are lists of rows acting on column
//! vectors. Unknown keys are rejected.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cohomology::Theory;
use crate::deform::{DeformationDatum, ExtensionCocycle};
use crate::error::{Error, Result};
use crate::integrate::SampleGrid;
use crate::linalg::{format_rational, parse_rational, Rational, RationalMatrix};
use crate::multilinear::{combinations, AlternatingMap, Split};
use crate::structures::{
    DiffRepresentation, DifferenceLieAlgebra, LieActTriple, LieAlgebra, RelDiffHomomorphism,
    RelDiffStructure,
};

/// Basis name to coefficient; absent names are zero.
pub type VectorSpec = BTreeMap<String, String>;
/// Rows of a matrix.
pub type MatrixSpec = Vec<Vec<String>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub actions: BTreeMap<String, ActionSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub operators: BTreeMap<String, OperatorSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RepresentationSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cochains: BTreeMap<String, CochainSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cocycles: BTreeMap<String, CocycleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homomorphisms: BTreeMap<String, HomomorphismSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub grids: BTreeMap<String, GridSpec>,
}

/// `[x, y] = value`; antisymmetry is implied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub pair: [String; 2],
    pub value: VectorSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bracket: Vec<BracketEntry>,
}

/// `adjoint = true` (with `g = h`) or `rho` keyed by basis names of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub g: String,
    pub h: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub adjoint: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rho: BTreeMap<String, MatrixSpec>,
}

/// Either `action` or `algebra` (shorthand for the adjoint action); `d`
/// defaults to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<MatrixSpec>,
}

/// `(V, ϱ, K)` over an operator given by `algebra`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSpec {
    pub operator: String,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub varrho: BTreeMap<String, MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<MatrixSpec>,
}

/// A regular 2-cochain `(ω̂, D̂)`, e.g. a deformation datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainSpec {
    pub operator: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<MatrixSpec>,
}

/// An extension 2-cochain `(ω, χ)` with values in a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleSpec {
    pub representation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomomorphismSpec {
    pub source: String,
    pub target: String,
    pub psi_g: MatrixSpec,
    pub psi_h: MatrixSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub values: Vec<String>,
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorEntry {
    pub structure: RelDiffStructure,
    /// Set when the action is the adjoint action of this algebra, so the
    /// operator is a difference Lie algebra.
    pub adjoint_of: Option<String>,
}

impl OperatorEntry {
    pub fn difference_algebra(&self) -> Option<DifferenceLieAlgebra> {
        self.adjoint_of.as_ref().map(|_| {
            DifferenceLieAlgebra::new_unchecked(
                self.structure.triple.g.clone(),
                self.structure.d.clone(),
            )
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationEntry {
    pub operator: String,
    pub rep: DiffRepresentation,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismEntry {
    pub source: String,
    pub target: String,
    pub hom: RelDiffHomomorphism,
}

/// A problem file with every name resolved. Nothing is validated beyond
/// shapes; axiom checks are left to the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Problem {
    pub algebras: BTreeMap<String, LieAlgebra>,
    pub actions: BTreeMap<String, LieActTriple>,
    pub operators: BTreeMap<String, OperatorEntry>,
    pub representations: BTreeMap<String, RepresentationEntry>,
    pub cochains: BTreeMap<String, (String, DeformationDatum)>,
    pub cocycles: BTreeMap<String, (String, ExtensionCocycle)>,
    pub homomorphisms: BTreeMap<String, HomomorphismEntry>,
    pub grids: BTreeMap<String, SampleGrid>,
}

fn perr(at: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{at}: {msg}"))
}

fn scalar(at: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| match e {
        Error::Parse(m) => perr(at, m),
        other => other,
    })
}

fn index_of(at: &str, names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| perr(at, format!("unknown basis element {name:?}")))
}

fn vector(at: &str, names: &[String], v: &VectorSpec) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::zero(); names.len()];
    for (k, s) in v {
        out[index_of(at, names, k)?] = scalar(at, s)?;
    }
    Ok(out)
}

fn matrix(at: &str, rows: usize, cols: usize, m: &MatrixSpec) -> Result<RationalMatrix> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(perr(at, format!("expected a {rows}x{cols} matrix")));
    }
    let mut out = Vec::with_capacity(rows);
    for r in m {
        out.push(
            r.iter()
                .map(|s| scalar(at, s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(if rows == 0 {
        RationalMatrix::zeros(0, cols)
    } else {
        RationalMatrix::from_rows(out)
    })
}

fn opt_matrix(
    at: &str,
    rows: usize,
    cols: usize,
    m: &Option<MatrixSpec>,
) -> Result<RationalMatrix> {
    match m {
        Some(m) => matrix(at, rows, cols, m),
        None => Ok(RationalMatrix::zeros(rows, cols)),
    }
}

fn matrices_by_name(
    at: &str,
    keys: &[String],
    rows: usize,
    cols: usize,
    ms: &BTreeMap<String, MatrixSpec>,
) -> Result<Vec<RationalMatrix>> {
    let mut out = vec![RationalMatrix::zeros(rows, cols); keys.len()];
    for (k, m) in ms {
        out[index_of(at, keys, k)?] = matrix(&format!("{at}.{k}"), rows, cols, m)?;
    }
    Ok(out)
}

/// Builds an alternating 2-form from bracket entries; conflicting entries
/// for the same pair are rejected.
fn two_form(
    at: &str,
    dom: &[String],
    tgt: &[String],
    entries: &[BracketEntry],
) -> Result<AlternatingMap> {
    let mut m = AlternatingMap::zero(dom.len(), 2, tgt.len());
    let mut seen = std::collections::BTreeSet::new();
    for e in entries {
        let (i, j) = (
            index_of(at, dom, &e.pair[0])?,
            index_of(at, dom, &e.pair[1])?,
        );
        if i == j {
            return Err(perr(at, format!("bracket of {} with itself", e.pair[0])));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(perr(
                at,
                format!("pair ({}, {}) given twice", e.pair[0], e.pair[1]),
            ));
        }
        m.set_any(&[i, j], vector(at, tgt, &e.value)?)?;
    }
    Ok(m)
}

fn check_names(at: &str, names: &[String]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if n.is_empty() || !seen.insert(n) {
            return Err(perr(
                at,
                format!("basis names must be nonempty and distinct, got {n:?}"),
            ));
        }
    }
    Ok(())
}

fn lookup<'a, T>(at: &str, kind: &str, map: &'a BTreeMap<String, T>, name: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| perr(at, format!("unknown {kind} {name:?}")))
}

impl ProblemFile {
    pub fn resolve(&self) -> Result<Problem> {
        let mut p = Problem::default();
        for (name, a) in &self.algebras {
            let at = format!("algebras.{name}");
            check_names(&at, &a.basis)?;
            let b = two_form(&at, &a.basis, &a.basis, &a.bracket)?;
            p.algebras.insert(
                name.clone(),
                LieAlgebra::new_unchecked(b).with_names(a.basis.clone()),
            );
        }
        for (name, a) in &self.actions {
            let at = format!("actions.{name}");
            let g = lookup(&at, "algebra", &p.algebras, &a.g)?.clone();
            let h = lookup(&at, "algebra", &p.algebras, &a.h)?.clone();
            let t = if a.adjoint {
                if a.g != a.h || !a.rho.is_empty() {
                    return Err(perr(&at, "adjoint actions need g = h and no rho"));
                }
                LieActTriple::adjoint(g)
            } else {
                let rho =
                    matrices_by_name(&format!("{at}.rho"), g.names(), h.dim(), h.dim(), &a.rho)?;
                LieActTriple::new_unchecked(g, h, rho)
            };
            p.actions.insert(name.clone(), t);
        }
        for (name, o) in &self.operators {
            let at = format!("operators.{name}");
            let (triple, adjoint_of) = match (&o.action, &o.algebra) {
                (Some(act), None) => {
                    let t = lookup(&at, "action", &p.actions, act)?.clone();
                    let spec = &self.actions[act];
                    (t, spec.adjoint.then(|| spec.g.clone()))
                }
                (None, Some(alg)) => (
                    LieActTriple::adjoint(lookup(&at, "algebra", &p.algebras, alg)?.clone()),
                    Some(alg.clone()),
                ),
                _ => return Err(perr(&at, "give exactly one of `action` or `algebra`")),
            };
            let d = opt_matrix(&format!("{at}.d"), triple.h.dim(), triple.g.dim(), &o.d)?;
            p.operators.insert(
                name.clone(),
                OperatorEntry {
                    structure: RelDiffStructure::new_unchecked(triple, d),
                    adjoint_of,
                },
            );
        }
        for (name, r) in &self.representations {
            let at = format!("representations.{name}");
            check_names(&at, &r.basis)?;
            let op = lookup(&at, "operator", &p.operators, &r.operator)?;
            let base = op.difference_algebra().ok_or_else(|| {
                perr(
                    &at,
                    format!("operator {:?} is not a difference Lie algebra", r.operator),
                )
            })?;
            let v = r.basis.len();
            let varrho =
                matrices_by_name(&format!("{at}.varrho"), base.g.names(), v, v, &r.varrho)?;
            let k = opt_matrix(&format!("{at}.k"), v, v, &r.k)?;
            p.representations.insert(
                name.clone(),
                RepresentationEntry {
                    operator: r.operator.clone(),
                    rep: DiffRepresentation::new_unchecked(base, varrho, k),
                    basis: r.basis.clone(),
                },
            );
        }
        for (name, c) in &self.cochains {
            let at = format!("cochains.{name}");
            let op = lookup(&at, "operator", &p.operators, &c.operator)?;
            let a = op.difference_algebra().ok_or_else(|| {
                perr(
                    &at,
                    format!("operator {:?} is not a difference Lie algebra", c.operator),
                )
            })?;
            let names = a.g.names().to_vec();
            let datum = DeformationDatum {
                omega_hat: two_form(&format!("{at}.omega"), &names, &names, &c.omega)?,
                d_hat: opt_matrix(&format!("{at}.theta"), names.len(), names.len(), &c.theta)?,
            };
            p.cochains.insert(name.clone(), (c.operator.clone(), datum));
        }
        for (name, c) in &self.cocycles {
            let at = format!("cocycles.{name}");
            let r = lookup(&at, "representation", &p.representations, &c.representation)?;
            let gnames = r.rep.base.g.names().to_vec();
            let cocycle = ExtensionCocycle {
                omega: two_form(&format!("{at}.omega"), &gnames, &r.basis, &c.omega)?,
                chi: opt_matrix(&format!("{at}.chi"), r.basis.len(), gnames.len(), &c.chi)?,
            };
            p.cocycles
                .insert(name.clone(), (c.representation.clone(), cocycle));
        }
        for (name, h) in &self.homomorphisms {
            let at = format!("homomorphisms.{name}");
            let s = &lookup(&at, "operator", &p.operators, &h.source)?.structure;
            let t = &lookup(&at, "operator", &p.operators, &h.target)?.structure;
            let hom = RelDiffHomomorphism {
                psi_g: matrix(
                    &format!("{at}.psi_g"),
                    t.triple.g.dim(),
                    s.triple.g.dim(),
                    &h.psi_g,
                )?,
                psi_h: matrix(
                    &format!("{at}.psi_h"),
                    t.triple.h.dim(),
                    s.triple.h.dim(),
                    &h.psi_h,
                )?,
            };
            p.homomorphisms.insert(
                name.clone(),
                HomomorphismEntry {
                    source: h.source.clone(),
                    target: h.target.clone(),
                    hom,
                },
            );
        }
        for (name, g) in &self.grids {
            let at = format!("grids.{name}");
            if g.values.is_empty() {
                return Err(perr(&at, "a grid needs at least one value"));
            }
            let values = g
                .values
                .iter()
                .map(|s| scalar(&at, s))
                .collect::<Result<Vec<_>>>()?;
            p.grids.insert(
                name.clone(),
                SampleGrid {
                    values,
                    pairs: g.pairs,
                },
            );
        }
        Ok(p)
    }
}

// ---------------------------------------------------------------------------
// Writing values back in the same format

pub fn vector_spec(names: &[String], v: &[Rational]) -> VectorSpec {
    names
        .iter()
        .zip(v)
        .filter(|(_, x)| !x.is_zero())
        .map(|(n, x)| (n.clone(), format_rational(x)))
        .collect()
}

pub fn matrix_spec(m: &RationalMatrix) -> MatrixSpec {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect())
        .collect()
}

/// Nonzero values of a 2-form as bracket entries.
pub fn two_form_spec(dom: &[String], tgt: &[String], m: &AlternatingMap) -> Vec<BracketEntry> {
    m.entries()
        .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
        .map(|(idx, v)| BracketEntry {
            pair: [dom[idx[0]].clone(), dom[idx[1]].clone()],
            value: vector_spec(tgt, v),
        })
        .collect()
}

pub fn deformation_spec(operator: &str, names: &[String], d: &DeformationDatum) -> CochainSpec {
    CochainSpec {
        operator: operator.to_string(),
        omega: two_form_spec(names, names, &d.omega_hat),
        theta: (!d.d_hat.is_zero()).then(|| matrix_spec(&d.d_hat)),
    }
}

pub fn cocycle_spec(
    representation: &str,
    gnames: &[String],
    vnames: &[String],
    c: &ExtensionCocycle,
) -> CocycleSpec {
    CocycleSpec {
        representation: representation.to_string(),
        omega: two_form_spec(gnames, vnames, &c.omega),
        chi: (!c.chi.is_zero()).then(|| matrix_spec(&c.chi)),
    }
}

// ---------------------------------------------------------------------------
// Labels for flat cochain coordinates

fn alternating_labels(
    prefix: &str,
    dom: &[String],
    arity: usize,
    tgt: &[String],
    out: &mut Vec<String>,
) {
    for idx in combinations(dom.len(), arity) {
        let args: Vec<&str> = idx.iter().map(|&i| dom[i].as_str()).collect();
        for t in tgt {
            out.push(format!("{prefix}({})->{t}", args.join(",")));
        }
    }
}

/// Labels of the flat coordinates of a degree-`n` cochain of `theory`, in
/// the order used by the coboundary matrices.
pub fn coordinate_labels(
    theory: Theory,
    gnames: &[String],
    hnames: &[String],
    n: usize,
) -> Vec<String> {
    let mut out = Vec::new();
    match theory {
        Theory::Operator => alternating_labels("f", gnames, n, hnames, &mut out),
        Theory::Regular | Theory::Coeff => {
            alternating_labels("f", gnames, n, hnames, &mut out);
            if n >= 2 {
                alternating_labels("theta", gnames, n - 1, hnames, &mut out);
            }
        }
        Theory::LieAct | Theory::RelDiff => {
            let sp = Split::new(gnames.len(), hnames.len());
            for i in 0..=n {
                let tgt = if i == 0 { gnames } else { hnames };
                for a in combinations(sp.g, n - i) {
                    for b in combinations(sp.h, i) {
                        let ga: Vec<&str> = a.iter().map(|&x| gnames[x].as_str()).collect();
                        let ha: Vec<&str> = b.iter().map(|&y| hnames[y].as_str()).collect();
                        let args = match (ga.is_empty(), ha.is_empty()) {
                            (false, false) => format!("{};{}", ga.join(","), ha.join(",")),
                            _ => [ga, ha].concat().join(","),
                        };
                        for t in tgt {
                            out.push(format!("f{i}({args})->{t}"));
                        }
                    }
                }
            }
            if theory == Theory::RelDiff && n >= 2 {
                alternating_labels("theta", gnames, n - 1, hnames, &mut out);
            }
        }
    }
    out
}

/// `"2 f(e1,e2)->e2 - 1/2 theta(e1)->e1"`; `"0"` for the zero vector.
/// Mixed components separate g- and h-arguments with `;`.
pub fn describe_flat(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (l, x) in labels.iter().zip(v).filter(|(_, x)| !x.is_zero()) {
        let neg = x.is_negative();
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        let mag = x.abs();
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push(' ');
        }
        out.push_str(l);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{
        CeComplex, CochainComplex, DeltaRoute, LieActComplex, RegularComplex, RelDiffComplex,
    };
    use crate::fixtures;
    use crate::linalg::{rat, ratio};

    fn entry(x: &str, y: &str, v: &[(&str, &str)]) -> BracketEntry {
        BracketEntry {
            pair: [x.into(), y.into()],
            value: v
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    fn aff1_file() -> ProblemFile {
        let mut f = ProblemFile::default();
        f.algebras.insert(
            "aff1".into(),
            AlgebraSpec {
                basis: vec!["e1".into(), "e2".into()],
                bracket: vec![entry("e1", "e2", &[("e2", "1")])],
            },
        );
        f.operators.insert(
            "minus_id".into(),
            OperatorSpec {
                action: None,
                algebra: Some("aff1".into()),
                d: Some(vec![
                    vec!["-1".into(), "0".into()],
                    vec!["0".into(), "-1".into()],
                ]),
            },
        );
        f
    }

    #[test]
    fn resolves_difference_algebra() {
        let p = aff1_file().resolve().unwrap();
        assert_eq!(p.algebras["aff1"], fixtures::aff1());
        let a = p.operators["minus_id"].difference_algebra().unwrap();
        assert_eq!(a.d, fixtures::neg_identity(2));
        assert!(DifferenceLieAlgebra::new(a.g, a.d).is_ok());
    }

    #[test]
    fn rejects_bad_inputs() {
        let mut f = aff1_file();
        f.operators.get_mut("minus_id").unwrap().d = Some(vec![
            vec!["1/0".into(), "0".into()],
            vec!["0".into(), "1".into()],
        ]);
        assert!(matches!(f.resolve(), Err(Error::Parse(m)) if m.contains("zero denominator")));

        let mut f = aff1_file();
        f.algebras
            .get_mut("aff1")
            .unwrap()
            .bracket
            .push(entry("e2", "e1", &[]));
        assert!(matches!(f.resolve(), Err(Error::Parse(m)) if m.contains("twice")));

        let mut f = aff1_file();
        f.operators.get_mut("minus_id").unwrap().d = Some(vec![vec!["1".into()]]);
        assert!(matches!(f.resolve(), Err(Error::Parse(m)) if m.contains("2x2")));

        let mut f = aff1_file();
        f.algebras.get_mut("aff1").unwrap().bracket[0]
            .value
            .insert("e9".into(), "1".into());
        assert!(matches!(f.resolve(), Err(Error::Parse(m)) if m.contains("e9")));
    }

    #[test]
    fn specs_round_trip() {
        let names: Vec<String> = vec!["h".into(), "e".into(), "f".into()];
        let g = fixtures::sl2();
        let spec = two_form_spec(&names, &names, g.bracket_map());
        assert_eq!(
            two_form("t", &names, &names, &spec).unwrap(),
            *g.bracket_map()
        );
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1), crate::linalg::ratio(-1, 2)],
            vec![rat(0), rat(3)],
        ]);
        assert_eq!(matrix("t", 2, 2, &matrix_spec(&m)).unwrap(), m);
    }

    #[test]
    fn labels_match_cochain_dimensions() {
        let s = RelDiffStructure::new_unchecked(
            LieActTriple::adjoint(fixtures::h3()),
            fixtures::neg_identity(3),
        );
        let a = DifferenceLieAlgebra::new_unchecked(fixtures::h3(), fixtures::neg_identity(3));
        let names = fixtures::h3().names().to_vec();
        for n in 1..=3 {
            let cases: Vec<(Theory, Box<dyn CochainComplex>)> = vec![
                (
                    Theory::LieAct,
                    Box::new(LieActComplex {
                        triple: s.triple.clone(),
                    }),
                ),
                (
                    Theory::RelDiff,
                    Box::new(RelDiffComplex::new(s.clone(), DeltaRoute::Closed)),
                ),
                (Theory::Operator, Box::new(CeComplex::operator(&s))),
                (Theory::Regular, Box::new(RegularComplex::new(a.clone()))),
            ];
            for (t, cx) in cases {
                assert_eq!(
                    coordinate_labels(t, &names, &names, n).len(),
                    cx.cochain_dim(n),
                    "{t:?} n = {n}"
                );
            }
        }
        let labels = coordinate_labels(Theory::Regular, &names, &names, 1);
        assert_eq!(labels[0], "f(e1)->e1");
        assert_eq!(
            describe_flat(&labels[..2], &[rat(2), rat(0)]),
            "2 f(e1)->e1"
        );
        assert_eq!(
            describe_flat(&labels[..3], &[rat(1), rat(-1), ratio(-1, 2)]),
            "f(e1)->e1 - f(e1)->e2 - 1/2 f(e1)->e3"
        );
        assert_eq!(describe_flat(&labels[..1], &[rat(0)]), "0");
        let mixed = coordinate_labels(Theory::LieAct, &names, &names, 2);
        assert!(mixed.contains(&"f1(e1;e2)->e3".to_string()));
        assert!(mixed.contains(&"f2(e1,e2)->e3".to_string()));
    }
}
