//! Plain-text formatting of vectors, matrices and axiom failures.

use difflie_core::linalg::format_rational;
use difflie_core::{AxiomFailure, Rational, RationalMatrix};
use num_traits::{One, Signed, Zero};

/// `2e2 - e1 + 1/2 e3`; `0` for the zero vector.
pub fn combo(names: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let coeff = if mag.is_one() {
            String::new()
        } else if mag.is_integer() {
            format_rational(&mag)
        } else {
            format!("{} ", format_rational(&mag))
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&coeff);
        out.push_str(name);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

/// `0` for the zero matrix, rows otherwise.
pub fn matrix(m: &RationalMatrix) -> String {
    if m.is_zero() {
        return "0".into();
    }
    let rows: Vec<String> = (0..m.rows()).map(|r| vector(m.row(r))).collect();
    format!("[{}]", rows.join(", "))
}

/// `residual 2e2 at (e1,e2)`.
pub fn failure(at_names: &[&[String]], target: &[String], f: &AxiomFailure) -> String {
    let at: Vec<&str> =
        f.at.iter()
            .enumerate()
            .map(|(k, &i)| {
                let names = at_names[k.min(at_names.len() - 1)];
                names.get(i).map(String::as_str).unwrap_or("?")
            })
            .collect();
    format!(
        "residual {} at ({})",
        combo(target, &f.residual),
        at.join(",")
    )
}

pub fn failures(at_names: &[&[String]], target: &[String], fs: &[AxiomFailure]) -> Vec<String> {
    fs.iter().map(|f| failure(at_names, target, f)).collect()
}
