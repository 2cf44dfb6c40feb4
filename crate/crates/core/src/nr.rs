//! The Nijenhuis–Richardson graded Lie algebra `⊕ Hom(∧^{n+1} V, V)`.
//!
//! Degrees are `arity − 1`. All brackets are computed on full maps over `V`;
//! for `V = g ⊕ h` the component formulas are derived facts, tested in
//! the cohomology module.

use num_traits::Zero;

use crate::linalg::{axpy, zero_vec, Rational};
use crate::multilinear::{shuffles, AlternatingMap};

/// `(f∘g)(v_1…v_{m+n−1}) = Σ_{σ∈S(n,m−1)} (−1)^σ f(g(v_σ(1)…v_σ(n)), v_σ(n+1)…)`.
pub fn circle(f: &AlternatingMap, g: &AlternatingMap) -> AlternatingMap {
    let (m, n) = (f.arity(), g.arity());
    assert!(m >= 1 && n >= 1, "NR composition needs positive arities");
    assert_eq!(f.domain_dim(), g.target_dim(), "ambient spaces differ");
    assert_eq!(f.domain_dim(), g.domain_dim(), "ambient spaces differ");
    let dim = f.domain_dim();
    let sh = shuffles(n, m + n - 1);
    if g.is_zero() || f.is_zero() {
        return AlternatingMap::zero(dim, m + n - 1, f.target_dim());
    }
    let mut sub = Vec::with_capacity(n);
    let mut rest = Vec::with_capacity(m - 1);
    AlternatingMap::from_fn(dim, m + n - 1, f.target_dim(), |c| {
        let mut out = zero_vec(f.target_dim());
        for s in &sh {
            sub.clear();
            sub.extend(s.perm[..n].iter().map(|&p| c[p]));
            let inner = g.get(&sub);
            if inner.iter().all(Zero::is_zero) {
                continue;
            }
            rest.clear();
            rest.extend(s.perm[n..].iter().map(|&p| c[p]));
            let v = f.eval_first_vector(inner, &rest);
            axpy(&mut out, &Rational::from_integer(s.sign.into()), &v);
        }
        out
    })
}

/// `[f, g] = f∘g − (−1)^{(m−1)(n−1)} g∘f`.
pub fn nr_bracket(f: &AlternatingMap, g: &AlternatingMap) -> AlternatingMap {
    let (p, q) = (f.nr_degree(), g.nr_degree());
    let fg = circle(f, g);
    let gf = circle(g, f);
    if (p * q).rem_euclid(2) == 0 {
        fg.sub(&gf)
    } else {
        fg.add(&gf)
    }
}

/// Whether `[ω, ω] = 0`, i.e. `ω` is a Lie bracket.
pub fn is_mc(omega: &AlternatingMap) -> bool {
    assert_eq!(omega.arity(), 2, "Maurer-Cartan elements here have arity 2");
    nr_bracket(omega, omega).is_zero()
}

/// `[f,[g,h]] = [[f,g],h] + (−1)^{|f||g|}[g,[f,h]]`, checked on all basis tuples.
pub fn graded_jacobi_check(f: &AlternatingMap, g: &AlternatingMap, h: &AlternatingMap) -> bool {
    let lhs = nr_bracket(f, &nr_bracket(g, h));
    let a = nr_bracket(&nr_bracket(f, g), h);
    let b = nr_bracket(g, &nr_bracket(f, h));
    let rhs = if (f.nr_degree() * g.nr_degree()).rem_euclid(2) == 0 {
        a.add(&b)
    } else {
        a.sub(&b)
    };
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{rat, unit_vec, RationalMatrix};
    use crate::multilinear::{binomial, project_components, Split};
    use proptest::prelude::*;

    #[test]
    fn circle_of_linear_maps_is_composition() {
        let a = RationalMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = RationalMatrix::from_i64_rows(&[&[0, 1], &[-1, 5]]);
        let c = circle(&AlternatingMap::linear(&a), &AlternatingMap::linear(&b));
        assert_eq!(c.to_matrix(), a.matmul(&b));
        let br = nr_bracket(&AlternatingMap::linear(&a), &AlternatingMap::linear(&b));
        assert_eq!(br.to_matrix(), a.commutator(&b));
    }

    #[test]
    fn circle_on_repeated_argument() {
        let pi = fixtures::aff1().bracket_map().clone();
        let pp = circle(&pi, &pi);
        let e1 = unit_vec(2, 0);
        let e2 = unit_vec(2, 1);
        assert_eq!(pp.eval(&[e1.clone(), e2, e1]), vec![rat(0), rat(0)]);
    }

    /// Oracle: the three (2,1)-shuffles written out by hand.
    fn omega_circle_oracle(w: &AlternatingMap) -> Vec<Rational> {
        let n = 3;
        let e = |i| unit_vec(n, i);
        let ww = |a: usize, b: usize| w.eval(&[e(a), e(b)]);
        let mut out = w.eval(&[ww(0, 1), e(2)]);
        crate::linalg::add_assign(
            &mut out,
            &w.eval(&[ww(0, 2), e(1)])
                .iter()
                .map(|x| -x)
                .collect::<Vec<_>>(),
        );
        crate::linalg::add_assign(&mut out, &w.eval(&[ww(1, 2), e(0)]));
        out
    }

    #[test]
    fn omega_examples() {
        let w = fixtures::omega_table();
        let ww = circle(&w, &w);
        assert_eq!(ww.get(&[0, 1, 2]), &[rat(-1), rat(0), rat(0)]);
        assert_eq!(ww.get(&[0, 1, 2]), omega_circle_oracle(&w).as_slice());
        let br = nr_bracket(&w, &w);
        assert_eq!(br.get(&[0, 1, 2]), &[rat(-2), rat(0), rat(0)]);
        assert!(!is_mc(&w));
        assert!(is_mc(fixtures::aff1().bracket_map()));
        assert!(is_mc(&AlternatingMap::zero(3, 2, 3)));
    }

    #[test]
    fn mc_detects_lie_brackets() {
        for g in [fixtures::h3(), fixtures::sl2(), fixtures::aff1()] {
            assert!(is_mc(g.bracket_map()));
        }
    }

    fn random_map(dim: usize, arity: usize) -> impl Strategy<Value = AlternatingMap> {
        proptest::collection::vec(-2i64..=2, binomial(dim, arity) * dim).prop_map(move |xs| {
            AlternatingMap::from_flat(
                dim,
                arity,
                dim,
                &xs.into_iter().map(rat).collect::<Vec<_>>(),
            )
        })
    }

    fn triple() -> impl Strategy<Value = (AlternatingMap, AlternatingMap, AlternatingMap)> {
        (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(d, a, b, c)| {
            (
                random_map(d, a.min(d)),
                random_map(d, b.min(d)),
                random_map(d, c.min(d)),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn graded_antisymmetry((f, g, _) in triple()) {
            let lhs = nr_bracket(&f, &g);
            let rhs = nr_bracket(&g, &f);
            let sign = if (f.nr_degree() * g.nr_degree()) % 2 == 0 { rat(-1) } else { rat(1) };
            prop_assert_eq!(lhs, rhs.scale(&sign));
        }

        #[test]
        fn graded_jacobi((f, g, h) in triple()) {
            prop_assert!(graded_jacobi_check(&f, &g, &h));
        }

        #[test]
        fn mixed_cochains_closed_under_bracket(
            seed in proptest::collection::vec(-2i64..=2, 256),
            (a1, a2) in (1usize..=3, 1usize..=3),
        ) {
            let split = Split::new(2, 2);
            let mut it = seed.into_iter().cycle();
            let mut rnd = |arity: usize| {
                let mut m = crate::multilinear::MixedCochain::zero(split, arity);
                m.f0 = crate::multilinear::BigradedMap::from_fn(split, arity, 0, crate::multilinear::Side::G, |_, _| {
                    (0..2).map(|_| rat(it.next().unwrap())).collect()
                });
                for i in 1..=arity {
                    m.parts[i - 1] = crate::multilinear::BigradedMap::from_fn(
                        split, arity - i, i, crate::multilinear::Side::H,
                        |_, _| (0..2).map(|_| rat(it.next().unwrap())).collect(),
                    );
                }
                m.lift()
            };
            let f = rnd(a1);
            let g = rnd(a2);
            let br = nr_bracket(&f, &g);
            let (_, fblock) = project_components(split, &br).expect("bracket left the mixed space");
            prop_assert!(fblock.is_zero());
        }
    }

    #[test]
    fn zero_in_jacobi() {
        let f = fixtures::aff1().bracket_map().clone();
        let z = AlternatingMap::zero(2, 1, 2);
        assert!(graded_jacobi_check(&f, &z, &f));
    }

    #[test]
    fn degree_zero_jacobi_is_matrix_jacobi() {
        let a = AlternatingMap::linear(&RationalMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]));
        let b = AlternatingMap::linear(&RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        let c = AlternatingMap::linear(&RationalMatrix::from_i64_rows(&[&[2, 0], &[3, -1]]));
        assert!(graded_jacobi_check(&a, &b, &c));
    }
}
