use difflie_core::cohomology::{
    coeff_delta, coeff_delta_via_semidirect, rel_diff_delta, rel_diff_delta_twisted, t_operator,
    t_operator_bracket, CoeffComplex, RelDiffComplex,
};
use difflie_core::fixtures;
use difflie_core::sample::Sampler;
use difflie_core::{
    cohomology_table, les_check, CochainComplex, DeltaRoute, DiffRepresentation,
    DifferenceLieAlgebra, PairCochain, RationalMatrix, RelCochain, RelDiffStructure, TwistedLInfty,
};
use proptest::prelude::*;

fn random_rel_cochain(s: &mut Sampler, st: &RelDiffStructure, n: usize) -> RelCochain {
    let split = st.split();
    RelCochain::from_flat(split, n, &s.vector(RelCochain::space_dim(split, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_and_twisted_differentials_agree(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let (t, d) = s.valid_structure(3);
        let st = RelDiffStructure::new_unchecked(t, d);
        let c = random_rel_cochain(&mut s, &st, n);
        let tw = TwistedLInfty::for_structure(&st);
        prop_assert_eq!(rel_diff_delta(&st, &c), rel_diff_delta_twisted(&tw, &c).unwrap());
    }

    #[test]
    fn relative_differential_squares_to_zero(seed in any::<u64>(), n in 1usize..=2) {
        let mut s = Sampler::new(seed);
        let (t, d) = s.valid_structure(3);
        let st = RelDiffStructure::new_unchecked(t, d);
        let c = random_rel_cochain(&mut s, &st, n);
        prop_assert!(rel_diff_delta(&st, &rel_diff_delta(&st, &c)).is_zero());
    }

    #[test]
    fn both_forms_of_the_insertion_operator_agree(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let (t, d) = s.valid_structure(3);
        let st = RelDiffStructure::new_unchecked(t, d);
        let f = s.mixed_cochain(st.split(), n);
        prop_assert_eq!(t_operator(&st, &f), t_operator_bracket(&st, &f));
    }

    #[test]
    fn coefficient_differential_matches_semidirect(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let all = fixtures::difference_fixtures();
        let a = all[s.index(all.len())].1.clone();
        let rep = a.adjoint_representation();
        let (g, v) = (rep.base.dim(), rep.vdim());
        let c = PairCochain::from_flat(g, v, n, &s.vector(PairCochain::space_dim(g, v, n)));
        prop_assert_eq!(coeff_delta(&rep, &c), coeff_delta_via_semidirect(&rep, &c).unwrap());
    }
}

#[test]
fn les_holds_on_every_sampled_structure() {
    let mut s = Sampler::new(42);
    for _ in 0..10 {
        let (t, d) = s.valid_structure(3);
        let st = RelDiffStructure::new_unchecked(t, d);
        assert!(les_check(&st, 2).is_ok());
    }
}

#[test]
fn twisted_route_gives_the_same_table() {
    for (_, a) in fixtures::difference_fixtures() {
        let st = a.as_relative();
        let closed =
            cohomology_table(&RelDiffComplex::new(st.clone(), DeltaRoute::Closed), 2).unwrap();
        let twisted = cohomology_table(&RelDiffComplex::new(st, DeltaRoute::Twisted), 2).unwrap();
        let dims =
            |t: &Vec<difflie_core::CohomologyGroup>| t.iter().map(|h| h.dim).collect::<Vec<_>>();
        assert_eq!(dims(&closed), dims(&twisted));
    }
}

#[test]
fn trivial_line_over_abelian_has_free_cochains() {
    // g = k, V = k, everything zero: every cochain is a cocycle and nothing bounds.
    let base =
        DifferenceLieAlgebra::new(fixtures::abelian(1), RationalMatrix::zeros(1, 1)).unwrap();
    let rep = DiffRepresentation::new(
        base,
        vec![RationalMatrix::zeros(1, 1)],
        RationalMatrix::zeros(1, 1),
    )
    .unwrap();
    let cx = CoeffComplex::new(rep);
    let t = cohomology_table(&cx, 2).unwrap();
    assert_eq!((t[0].dim, t[1].dim), (cx.cochain_dim(1), cx.cochain_dim(2)));
    assert_eq!((t[0].dim, t[1].dim), (1, 1));
}
