mod common;

use chordcone::{
    boundary_witness, char_roots, evaluate, gen_disjoint_cliques, gen_random_chordal, is_chordal,
    membership_dual, sym_eigenvalues, Definiteness, Graph, MembershipStatus, MinimalPolynomial,
    Tolerance,
};
use common::*;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #[test]
    fn roots_match_univariate_isolation(n in 1usize..7, density in 0.0f64..0.6, seed: u64) {
        let g = gen_random_chordal(n, density, seed).unwrap();
        let p = MinimalPolynomial::for_graph(&g).unwrap();
        prop_assume!(p.degree() <= 8);
        let mut rng = rng(seed);
        let x = random_pattern_matrix(&g, &mut rng);
        let report = char_roots(&p, &x, &Tolerance::default()).unwrap();
        prop_assert_eq!(report.roots.len(), p.degree());
        let r = gershgorin(x.matrix()) + 1.0;
        let f = |t: f64| evaluate(&p, &x.reflected_shift(t)).unwrap();
        let oracle = isolate_roots(&f, -r, r, 4000);
        prop_assert_eq!(oracle.len(), p.degree());
        prop_assert!(max_abs_diff(&report.roots, &oracle) <= 1e-6);
    }

    #[test]
    fn membership_matches_root_signs(n in 1usize..9, seed: u64, delta in -1.0f64..1.0) {
        prop_assume!(delta.abs() >= 1e-6);
        let g = gen_random_chordal(n, 0.4, seed).unwrap();
        let cert = is_chordal(&g).into_result().unwrap();
        let p = MinimalPolynomial::for_graph(&g).unwrap();
        let mut rng = rng(seed);
        let r = random_pattern_matrix(&g, &mut rng);
        let mu = cert.maximal_cliques.iter().map(|c| sym_eigenvalues(&r.block(c))[0]).fold(f64::INFINITY, f64::min);
        let y = r.shifted(delta - mu);
        let tol = Tolerance::default();
        let report = char_roots(&p, &y, &tol).unwrap();
        let status = membership_dual(&y, &cert, &tol).status;
        prop_assert_eq!(report.all_nonnegative, status != MembershipStatus::Exterior);
        prop_assert_eq!(report.all_positive, status == MembershipStatus::Interior);
        let value = evaluate(&p, &y).unwrap();
        prop_assert!(value != 0.0);
    }

    #[test]
    fn witnesses_valid(n in 1usize..12, density in 0.0f64..0.6, seed: u64) {
        let g = gen_random_chordal(n, density, seed).unwrap();
        let cert = is_chordal(&g).into_result().unwrap();
        let p = MinimalPolynomial::for_graph(&g).unwrap();
        let tol = Tolerance::default();
        for c in &cert.maximal_cliques {
            let w = boundary_witness(&g, &cert, c).unwrap();
            let factors = p.factors(&w.matrix).unwrap();
            let mut vanishing = 0;
            for (d, f) in cert.maximal_cliques.iter().zip(&factors) {
                let block = w.matrix.block(d);
                let verdict = chordcone::definiteness(&block, &tol);
                if d == c {
                    prop_assert_eq!(verdict, Definiteness::PsdSingular);
                } else {
                    prop_assert_eq!(verdict, Definiteness::PositiveDefinite);
                }
                if f.abs() <= 1e-6 * block.hadamard_bound() {
                    vanishing += 1;
                }
            }
            prop_assert_eq!(vanishing, 1);
            let status = membership_dual(&w.matrix, &cert, &tol).status;
            prop_assert_eq!(status, MembershipStatus::Boundary);
            let scale = p.evaluation_scale(&w.matrix).unwrap();
            prop_assert!(evaluate(&p, &w.matrix).unwrap().abs() <= 1e-6 * scale);
        }
    }

    #[test]
    fn degree_is_additive(a in 1usize..10, b in 1usize..10, s1: u64, s2: u64) {
        let g1 = gen_random_chordal(a, 0.4, s1).unwrap();
        let g2 = gen_random_chordal(b, 0.4, s2).unwrap();
        let d = |g: &Graph| MinimalPolynomial::for_graph(g).unwrap().degree();
        prop_assert_eq!(d(&g1.disjoint_union(&g2)), d(&g1) + d(&g2));
    }
}

#[test]
fn boundary_samples_vanish() {
    // points on the boundary of S*(G): shift so one block becomes singular
    let tol = Tolerance::default();
    for seed in 0..200u64 {
        let mut rng = rng(seed);
        let n = rng.random_range(2..=9);
        let g = gen_random_chordal(n, 0.4, seed).unwrap();
        let cert = is_chordal(&g).into_result().unwrap();
        let p = MinimalPolynomial::for_graph(&g).unwrap();
        let r = random_pattern_matrix(&g, &mut rng);
        let mu = cert
            .maximal_cliques
            .iter()
            .map(|c| sym_eigenvalues(&r.block(c))[0])
            .fold(f64::INFINITY, f64::min);
        let y = r.shifted(-mu);
        if membership_dual(&y, &cert, &tol).status == MembershipStatus::Boundary {
            let scale = p.evaluation_scale(&y).unwrap();
            assert!(evaluate(&p, &y).unwrap().abs() <= 1e-8 * scale.max(1.0));
        }
        let inner = r.shifted(1.0 - mu);
        assert_eq!(
            membership_dual(&inner, &cert, &tol).status,
            MembershipStatus::Interior
        );
        assert!(evaluate(&p, &inner).unwrap() > 0.0);
    }
}

#[test]
fn disjoint_cliques_degree_equals_n() {
    let g = gen_disjoint_cliques(&[2, 3]).unwrap();
    let cert = is_chordal(&g).into_result().unwrap();
    let m = chordcone::minimality_certificate(&g, &cert, &Tolerance::default()).unwrap();
    assert_eq!(m.degree, 5);
    assert_eq!(m.witnesses.len(), 2);
}
