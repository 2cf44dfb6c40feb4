use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use difflie_core::cohomology::{
    CeComplex, CoeffComplex, LieActComplex, RegularComplex, RelDiffComplex,
};
use difflie_core::deform::{
    classify_deformations, cocycle_from_extension, deformation_coboundary, deformation_equivalent,
    extension_from_cocycle, extension_isomorphic, is_deformation_cocycle, section_from,
};
use difflie_core::integrate::{functoriality_check, group_law_report};
use difflie_core::io::{
    cocycle_spec, coordinate_labels, deformation_spec, describe_flat, OperatorEntry,
};
use difflie_core::linalg::format_rational;
use difflie_core::structures::{
    derivation_failures, difference_op_failures, representation_failures,
};
use difflie_core::{
    cohomology_table, integrate_operator, les_report, CochainComplex, DeltaRoute,
    DifferenceLieAlgebra, Error, ExtensionCocycle, Problem, ProblemFile, RationalMatrix,
    RelDiffStructure, SampleGrid, Theory, Witness,
};

use crate::render;

/// What the user did wrong (exit 2) versus what the mathematics refused (exit 1).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::DimensionMismatch(_) => CliError::Input(e.to_string()),
            other => CliError::Math(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Human lines, a JSON mirror, and whether every check passed.
pub struct Report {
    pub text: Vec<String>,
    pub json: Value,
    pub ok: bool,
}

pub fn load(path: &Path) -> CliResult<Problem> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse(&src)
}

pub fn parse(src: &str) -> CliResult<Problem> {
    let file: ProblemFile =
        toml::from_str(src).map_err(|e| CliError::Input(format!("parse error: {e}")))?;
    Ok(file.resolve()?)
}

fn pick<'a, T>(
    map: &'a BTreeMap<String, T>,
    flag: Option<&str>,
    kind: &str,
) -> CliResult<(&'a str, &'a T)> {
    match flag {
        Some(name) => map
            .get_key_value(name)
            .map(|(k, v)| (k.as_str(), v))
            .ok_or_else(|| CliError::Input(format!("no {kind} named {name:?}"))),
        None if map.len() == 1 => {
            let (k, v) = map.iter().next().expect("one entry");
            Ok((k.as_str(), v))
        }
        None if map.is_empty() => Err(CliError::Input(format!("the file defines no {kind}"))),
        None => Err(CliError::Input(format!(
            "the file defines {} {kind}s; choose one with --{kind}",
            map.len()
        ))),
    }
}

fn require_valid(s: &RelDiffStructure) -> CliResult<()> {
    s.triple.g.validate()?;
    s.triple.h.validate()?;
    s.triple.validate_action()?;
    difflie_core::structures::validate_rel_diff_op(&s.triple, &s.d)?;
    Ok(())
}

fn difference_algebra(name: &str, op: &OperatorEntry) -> CliResult<DifferenceLieAlgebra> {
    op.difference_algebra().ok_or_else(|| {
        CliError::Input(format!(
            "operator {name:?} is not a difference Lie algebra (needs an adjoint action)"
        ))
    })
}

// ---------------------------------------------------------------------------

struct Check {
    subject: String,
    axiom: &'static str,
    tag: &'static str,
    details: Vec<String>,
}

pub fn validate(p: &Problem) -> Report {
    let mut checks = Vec::new();
    for (name, g) in &p.algebras {
        let n = g.names();
        checks.push(Check {
            subject: format!("algebra {name}"),
            axiom: "Jacobi identity",
            tag: "NotLieAlgebra",
            details: render::failures(&[n], n, &g.jacobi_failures()),
        });
    }
    for (name, t) in &p.actions {
        let (gn, hn) = (t.g.names(), t.h.names());
        let rep = representation_failures(&t.g, &t.rho, t.h.dim());
        checks.push(Check {
            subject: format!("action {name}"),
            axiom: "rho is a homomorphism",
            tag: "NotAnAction",
            details: rep
                .iter()
                .map(|f| {
                    format!(
                        "residual {} at ({},{})",
                        render::vector(&f.residual),
                        gn[f.at[0]],
                        gn[f.at[1]]
                    )
                })
                .collect(),
        });
        let der = derivation_failures(t.g.dim(), &t.h, &t.rho);
        checks.push(Check {
            subject: format!("action {name}"),
            axiom: "rho acts by derivations",
            tag: "NotAnAction",
            details: render::failures(&[gn, hn, hn], hn, &der),
        });
    }
    for (name, op) in &p.operators {
        let t = &op.structure.triple;
        checks.push(Check {
            subject: format!("operator {name}"),
            axiom: "difference operator identity",
            tag: "NotDifferenceOp",
            details: render::failures(
                &[t.g.names()],
                t.h.names(),
                &difference_op_failures(t, &op.structure.d),
            ),
        });
    }
    for (name, r) in &p.representations {
        let gn = r.rep.base.g.names();
        let rep = representation_failures(&r.rep.base.g, &r.rep.varrho, r.rep.vdim());
        checks.push(Check {
            subject: format!("representation {name}"),
            axiom: "varrho is a Lie representation",
            tag: "NotARepresentation",
            details: rep
                .iter()
                .map(|f| {
                    format!(
                        "residual {} at ({},{})",
                        render::vector(&f.residual),
                        gn[f.at[0]],
                        gn[f.at[1]]
                    )
                })
                .collect(),
        });
        checks.push(Check {
            subject: format!("representation {name}"),
            axiom: "compatibility with K",
            tag: "NotARepresentation",
            details: render::failures(&[gn, &r.basis], &r.basis, &r.rep.compatibility_failures()),
        });
    }
    for (name, h) in &p.homomorphisms {
        let s = &p.operators[&h.source].structure;
        let t = &p.operators[&h.target].structure;
        checks.push(Check {
            subject: format!("homomorphism {name}"),
            axiom: "homomorphism of relative difference Lie algebras",
            tag: "NotAHomomorphism",
            details: h
                .hom
                .validate(s, t)
                .err()
                .map(|e| e.to_string())
                .into_iter()
                .collect(),
        });
    }

    let ok = checks.iter().all(|c| c.details.is_empty());
    let mut text = Vec::new();
    for c in &checks {
        if c.details.is_empty() {
            text.push(format!("PASS  {}: {}", c.subject, c.axiom));
        } else {
            text.push(format!(
                "FAIL  {}: {} ({}); {}",
                c.subject,
                c.axiom,
                c.tag,
                c.details.join("; ")
            ));
        }
    }
    let failed = checks.iter().filter(|c| !c.details.is_empty()).count();
    text.push(format!("{} checks, {} failed", checks.len(), failed));
    let json = json!({
        "checks": checks.iter().map(|c| json!({
            "subject": c.subject,
            "axiom": c.axiom,
            "error": (!c.details.is_empty()).then_some(c.tag),
            "passed": c.details.is_empty(),
            "residuals": c.details,
        })).collect::<Vec<_>>(),
        "passed": ok,
    });
    Report { text, json, ok }
}

// ---------------------------------------------------------------------------

pub struct CohomologyArgs<'a> {
    pub theory: Theory,
    pub max_degree: usize,
    pub operator: Option<&'a str>,
    pub representation: Option<&'a str>,
    pub les: bool,
}

pub fn cohomology(p: &Problem, a: &CohomologyArgs) -> CliResult<Report> {
    if a.max_degree == 0 {
        return Err(CliError::Input("--max-degree must be at least 1".into()));
    }
    let (subject, cx, gnames, hnames): (String, Box<dyn CochainComplex>, Vec<String>, Vec<String>) =
        match a.theory {
            Theory::Coeff => {
                let (name, r) = pick(&p.representations, a.representation, "representation")?;
                require_valid(&r.rep.base.as_relative())?;
                r.rep.validate()?;
                let g = r.rep.base.g.names().to_vec();
                (
                    format!("representation {name}"),
                    Box::new(CoeffComplex::new(r.rep.clone())),
                    g,
                    r.basis.clone(),
                )
            }
            theory => {
                let (name, op) = pick(&p.operators, a.operator, "operator")?;
                let s = &op.structure;
                require_valid(s)?;
                let (g, h) = (s.triple.g.names().to_vec(), s.triple.h.names().to_vec());
                let cx: Box<dyn CochainComplex> = match theory {
                    Theory::LieAct => Box::new(LieActComplex {
                        triple: s.triple.clone(),
                    }),
                    Theory::Operator => Box::new(CeComplex::operator(s)),
                    Theory::RelDiff => Box::new(RelDiffComplex::new(s.clone(), DeltaRoute::Closed)),
                    Theory::Regular => Box::new(RegularComplex::new(difference_algebra(name, op)?)),
                    Theory::Coeff => unreachable!(),
                };
                let h = if theory == Theory::Regular {
                    g.clone()
                } else {
                    h
                };
                (format!("operator {name}"), cx, g, h)
            }
        };

    let table = cohomology_table(cx.as_ref(), a.max_degree)?;
    let mut text = vec![format!("theory {} on {subject}", a.theory.name())];
    text.push(format!(
        "{:>3} {:>9} {:>9} {:>9} {:>6}",
        "n", "dim C^n", "rank in", "rank out", "dim H"
    ));
    for h in &table {
        text.push(format!(
            "{:>3} {:>9} {:>9} {:>9} {:>6}",
            h.degree, h.cochain_dim, h.rank_in, h.rank_out, h.dim
        ));
    }
    text.push(
        table
            .iter()
            .map(|h| format!("H{}={}", h.degree, h.dim))
            .collect::<Vec<_>>()
            .join(" "),
    );
    let mut degrees = Vec::new();
    for h in &table {
        let labels = coordinate_labels(a.theory, &gnames, &hnames, h.degree);
        let reps: Vec<String> = h
            .representatives
            .iter()
            .map(|v| describe_flat(&labels, v))
            .collect();
        for (k, r) in reps.iter().enumerate() {
            text.push(format!("H{} class {}: {r}", h.degree, k + 1));
        }
        degrees.push(json!({
            "degree": h.degree,
            "cochain_dim": h.cochain_dim,
            "rank_in": h.rank_in,
            "rank_out": h.rank_out,
            "dim": h.dim,
            "representatives": h.representatives.iter()
                .map(|v| v.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "representatives_text": reps,
        }));
    }
    let mut json = json!({ "theory": a.theory.name(), "subject": subject, "degrees": degrees });
    let mut ok = true;

    if a.les {
        let (name, op) = pick(&p.operators, a.operator, "operator")?;
        require_valid(&op.structure)?;
        let r = les_report(&op.structure, a.max_degree)?;
        text.push(format!("long exact sequence for operator {name}"));
        for n in &r.nodes {
            text.push(format!(
                "  {:<12} dim {:>3}  image {:>3}  kernel {:>3}  {}",
                n.label,
                n.dim,
                n.image_dim,
                n.kernel_dim,
                if n.exact { "exact" } else { "NOT EXACT" }
            ));
        }
        ok = r.is_exact();
        match r.nodes.iter().find(|n| !n.exact) {
            None => text.push(format!("exact at all {} nodes", r.nodes.len())),
            Some(n) => text.push(format!("ExactnessFailure at {}", n.label)),
        }
        json["les"] = json!({
            "operator": name,
            "exact": ok,
            "operator_dims": r.operator_dims,
            "reldiff_dims": r.reldiff_dims,
            "lieact_dims": r.lieact_dims,
            "nodes": r.nodes.iter().map(|n| json!({
                "label": n.label, "dim": n.dim, "image_dim": n.image_dim,
                "kernel_dim": n.kernel_dim, "exact": n.exact,
            })).collect::<Vec<_>>(),
        });
    }
    Ok(Report { text, json, ok })
}

// ---------------------------------------------------------------------------

pub struct DeformArgs<'a> {
    pub operator: Option<&'a str>,
    pub cochain: Option<&'a str>,
    pub against: Option<&'a str>,
    pub max_report: usize,
}

fn witness_text(w: &Witness) -> (String, Value) {
    match w {
        Witness::Found(n) => (
            format!("yes (N={})", render::matrix(n)),
            json!({ "found": true, "n": difflie_core::io::matrix_spec(n) }),
        ),
        Witness::Infeasible {
            rank,
            augmented_rank,
        } => (
            format!("no (rank {rank} < augmented rank {augmented_rank})"),
            json!({ "found": false, "rank": rank, "augmented_rank": augmented_rank }),
        ),
    }
}

pub fn deform(p: &Problem, a: &DeformArgs) -> CliResult<Report> {
    if a.against.is_some() && a.cochain.is_none() {
        return Err(CliError::Input("--against needs --cochain".into()));
    }
    let cochain = a
        .cochain
        .map(|c| pick(&p.cochains, Some(c), "cochain"))
        .transpose()?;
    let op_flag = a.operator.or(cochain.map(|(_, (op, _))| op.as_str()));
    let (op_name, op) = pick(&p.operators, op_flag, "operator")?;
    require_valid(&op.structure)?;
    let alg = difference_algebra(op_name, op)?;
    let names = alg.g.names().to_vec();

    let cls = classify_deformations(&alg, a.max_report)?;
    let mut text = vec![format!("operator {op_name}")];
    if cls.h2_dim == 0 {
        text.push("H2 = 0: rigid".into());
    } else {
        text.push(format!("H2 = {}", cls.h2_dim));
    }
    let mut specs = ProblemFile::default();
    for (k, d) in cls.representatives.iter().enumerate() {
        specs.cochains.insert(
            format!("class{}", k + 1),
            deformation_spec(op_name, &names, d),
        );
    }
    if !specs.cochains.is_empty() {
        text.push(format!(
            "representatives ({} shown; each a dual-number deformation):",
            cls.representatives.len()
        ));
        let toml = toml::to_string(&specs).map_err(|e| CliError::Math(e.to_string()))?;
        text.extend(
            toml.lines()
                .filter(|l| !l.is_empty())
                .map(|l| format!("  {l}")),
        );
    }
    let mut json = json!({
        "operator": op_name,
        "h2_dim": cls.h2_dim,
        "rigid": cls.h2_dim == 0,
        "representatives": serde_json::to_value(&specs.cochains).expect("serializable"),
    });
    let mut ok = true;

    if let Some((cname, (cop, datum))) = cochain {
        if cop != op_name {
            return Err(CliError::Input(format!(
                "cochain {cname:?} belongs to operator {cop:?}"
            )));
        }
        let is_cocycle = is_deformation_cocycle(&alg, datum)?;
        if is_cocycle {
            text.push(format!(
                "cochain {cname}: cocycle, a genuine infinitesimal deformation"
            ));
        } else {
            let r = deformation_coboundary(&alg, datum);
            let labels = coordinate_labels(Theory::Regular, &names, &names, 3);
            text.push(format!(
                "cochain {cname}: NotCocycle; coboundary {}",
                describe_flat(&labels, &r)
            ));
        }
        ok &= is_cocycle;
        json["cochain"] = json!({ "name": cname, "cocycle": is_cocycle });
        if let Some(other) = a.against {
            let (oname, (oop, odatum)) = pick(&p.cochains, Some(other), "cochain")?;
            if oop != op_name {
                return Err(CliError::Input(format!(
                    "cochain {oname:?} belongs to operator {oop:?}"
                )));
            }
            let w = deformation_equivalent(&alg, datum, odatum)?;
            let (t, j) = witness_text(&w);
            text.push(format!("{cname} equivalent to {oname}: {t}"));
            json["equivalence"] = j;
        }
    }
    Ok(Report { text, json, ok })
}

// ---------------------------------------------------------------------------

pub struct ExtendArgs<'a> {
    pub representation: Option<&'a str>,
    pub cocycle: Option<&'a str>,
    pub with: Option<&'a str>,
}

pub fn extend(p: &Problem, a: &ExtendArgs) -> CliResult<Report> {
    let chosen = a
        .cocycle
        .map(|c| pick(&p.cocycles, Some(c), "cocycle"))
        .transpose()?;
    let rep_flag = a.representation.or(chosen.map(|(_, (r, _))| r.as_str()));
    let (rep_name, entry) = pick(&p.representations, rep_flag, "representation")?;
    require_valid(&entry.rep.base.as_relative())?;
    entry.rep.validate()?;
    let rep = &entry.rep;
    let (g, v) = (rep.base.dim(), rep.vdim());
    let gnames = rep.base.g.names().to_vec();

    let (label, c) = match chosen {
        Some((name, (r, c))) => {
            if r != rep_name {
                return Err(CliError::Input(format!(
                    "cocycle {name:?} belongs to representation {r:?}"
                )));
            }
            (name.to_string(), c.clone())
        }
        None => ("(0,0)".to_string(), ExtensionCocycle::zero(g, v)),
    };
    let desc = |c: &ExtensionCocycle, label: &str| {
        if c.omega.is_zero() && c.chi.is_zero() {
            "(0,0)".to_string()
        } else {
            label.to_string()
        }
    };

    let e = extension_from_cocycle(rep, &c)?;
    let (back, rep_back) = cocycle_from_extension(&e, &section_from(&RationalMatrix::zeros(v, g)))?;
    let roundtrip = back == c && rep_back == *rep;

    let (target_label, target) = match a.with {
        Some(other) => {
            let (oname, (orep, oc)) = pick(&p.cocycles, Some(other), "cocycle")?;
            if orep != rep_name {
                return Err(CliError::Input(format!(
                    "cocycle {oname:?} belongs to representation {orep:?}"
                )));
            }
            (format!("cocycle {}", desc(oc, oname)), oc.clone())
        }
        None => (
            "semidirect product".to_string(),
            ExtensionCocycle::zero(g, v),
        ),
    };
    let e2 = extension_from_cocycle(rep, &target)?;
    let iso = extension_isomorphic(&e, &e2)?;
    let (iso_text, iso_json) = witness_text(&iso);

    let mut text = vec![
        format!("representation {rep_name}: g of dim {g}, V of dim {v}"),
        format!("extension built on g + V, validated as a difference Lie algebra"),
        format!(
            "roundtrip through the canonical section: {}",
            if roundtrip { "ok" } else { "MISMATCH" }
        ),
        format!("compared with: {target_label}"),
        format!("cocycle {}; isomorphic: {iso_text}", desc(&c, &label)),
    ];
    let spec = cocycle_spec(rep_name, &gnames, &entry.basis, &c);
    if !(c.omega.is_zero() && c.chi.is_zero()) {
        let mut f = ProblemFile::default();
        f.cocycles.insert(label.clone(), spec.clone());
        let toml = toml::to_string(&f).map_err(|e| CliError::Math(e.to_string()))?;
        text.extend(
            toml.lines()
                .filter(|l| !l.is_empty())
                .map(|l| format!("  {l}")),
        );
    }
    let json = json!({
        "representation": rep_name,
        "cocycle": serde_json::to_value(&spec).expect("serializable"),
        "roundtrip": roundtrip,
        "compared_with": target_label,
        "isomorphic": iso_json,
        "total_operator": difflie_core::io::matrix_spec(&e.total.d),
    });
    Ok(Report {
        text,
        json,
        ok: roundtrip,
    })
}

// ---------------------------------------------------------------------------

pub struct IntegrateArgs<'a> {
    pub operator: Option<&'a str>,
    pub grid: Option<&'a str>,
    pub homomorphism: Option<&'a str>,
}

pub fn integrate(p: &Problem, a: &IntegrateArgs) -> CliResult<Report> {
    let (op_name, op) = pick(&p.operators, a.operator, "operator")?;
    let s = &op.structure;
    require_valid(s)?;
    let grid = match a.grid {
        Some(_) => pick(&p.grids, a.grid, "grid")?.1.clone(),
        None => SampleGrid::default(),
    };
    let rdg = integrate_operator(s)?;
    let report = group_law_report(&rdg, &grid)?;
    let (gd, hd) = (rdg.g.dim(), rdg.h.dim());

    let points: Vec<_> = (0..grid.pairs).map(|i| grid.pair(gd, i).0).collect();
    let values: Vec<_> = points.iter().map(|x| rdg.big_d(x)).collect();
    let shape = if values
        .iter()
        .all(|v| v.iter().all(num_traits::Zero::is_zero))
    {
        "identity element"
    } else if op.adjoint_of.is_some()
        && points
            .iter()
            .zip(&values)
            .all(|(x, v)| x.iter().zip(v).all(|(a, b)| *b == -a))
    {
        "inversion"
    } else {
        "nonlinear in exponential coordinates"
    };
    let tangent_ok =
        (0..gd).all(|i| rdg.tangent(&difflie_core::linalg::unit_vec(gd, i)) == s.d.column(i));

    let mut text = vec![format!(
        "operator {op_name}: G of dim {gd} (class {}), H of dim {hd} (class {})",
        rdg.g.class, rdg.h.class
    )];
    let mut ok = tangent_ok;
    text.push(format!(
        "tangent of the integrated operator at the identity equals D: {}",
        if tangent_ok { "yes" } else { "NO" }
    ));
    let law = match &report.failure {
        None => format!(
            "group law verified on {} sample pairs; \u{1d49f} = {shape}",
            report.pairs_checked
        ),
        Some(f) => {
            ok = false;
            format!(
                "group law FAILS at a = {}, b = {}: lhs {} rhs {}",
                render::vector(&f.a),
                render::vector(&f.b),
                render::vector(&f.lhs),
                render::vector(&f.rhs)
            )
        }
    };
    text.push(law);
    let mut json = json!({
        "operator": op_name,
        "g_class": rdg.g.class,
        "h_class": rdg.h.class,
        "pairs_checked": report.pairs_checked,
        "group_law": report.passed(),
        "tangent_equals_d": tangent_ok,
        "shape": shape,
    });
    if let Some(hname) = a.homomorphism {
        let (hname, h) = pick(&p.homomorphisms, Some(hname), "homomorphism")?;
        let (src, tgt) = (
            &p.operators[&h.source].structure,
            &p.operators[&h.target].structure,
        );
        if h.source != op_name {
            return Err(CliError::Input(format!(
                "homomorphism {hname:?} starts at operator {:?}",
                h.source
            )));
        }
        require_valid(tgt)?;
        let passed = match functoriality_check(src, tgt, &h.hom, &grid) {
            Ok(b) => b,
            Err(Error::NotAHomomorphism(m)) => {
                text.push(format!("NotAHomomorphism: {m}"));
                false
            }
            Err(e) => return Err(e.into()),
        };
        ok &= passed;
        text.push(format!(
            "functoriality along {hname} ({} -> {}): {}",
            h.source,
            h.target,
            if passed { "passed" } else { "FAILED" }
        ));
        json["functoriality"] = json!({ "homomorphism": hname, "passed": passed });
    }
    Ok(Report { text, json, ok })
}
