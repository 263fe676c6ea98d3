use tricyclic_alpha::bounds::{
    inequality_chain, lower_bound_maxdeg, upper_bound_degree_mean, upper_bound_sq, BoundsReport,
};
use tricyclic_alpha::extremal::random::{random_regular_graph, rng_from_seed, uniform_connected_graph};
use tricyclic_alpha::families::{construct_family, FamilyId, FamilySpec};
use tricyclic_alpha::graph::Graph;
use tricyclic_alpha::spectra::{
    alpha_spectral_radius, build_signless_laplacian, full_spectrum_oracle, signless_laplacian_radius,
};

const ALPHAS: [f64; 4] = [0.5, 0.6, 0.75, 0.9];

#[test]
fn bounds_sandwich_the_radius() {
    let mut rng = rng_from_seed(7);
    for _ in 0..1000 {
        let g = uniform_connected_graph(&mut rng, 2..=10);
        for alpha in ALPHAS {
            let rho = alpha_spectral_radius(&g, alpha).unwrap().radius;
            let report = BoundsReport::compute(&g, alpha).unwrap();
            assert!(report.lower_maxdeg <= rho + 1e-9, "{g:?} {alpha}");
            assert!(rho <= report.upper_degree_mean + 1e-9, "{g:?} {alpha}");
            assert!(rho <= report.upper_sq.unwrap() + 1e-9, "{g:?} {alpha}");
            assert!(report.brackets(rho, 1e-9));
        }
    }
}

#[test]
fn regular_graphs_attain_both_upper_bounds() {
    let mut rng = rng_from_seed(8);
    for (n, r) in [(4, 3), (8, 3), (9, 4), (10, 5), (5, 2), (10, 2)] {
        let g = random_regular_graph(&mut rng, n, r).unwrap();
        for alpha in [0.55, 0.6, 0.75, 0.9] {
            let rho = alpha_spectral_radius(&g, alpha).unwrap().radius;
            assert!((upper_bound_degree_mean(&g, alpha).unwrap() - rho).abs() <= 1e-9);
            assert!((upper_bound_sq(&g, alpha).unwrap() - rho).abs() <= 1e-9);
        }
    }
}

#[test]
fn worked_values() {
    // K4 at 0.6: 0.6 * 3 + 0.4^2 / 0.6
    let k4 = BoundsReport::compute(&Graph::complete(4), 0.6).unwrap();
    assert!((k4.lower_maxdeg - (1.8 + 0.16 / 0.6)).abs() < 1e-12);
    assert!((k4.upper_degree_mean - 3.0).abs() < 1e-12);
    assert!((k4.upper_sq.unwrap() - 3.0).abs() < 1e-10);

    // K_{1,4} at 1/2: the oracle gives lambda(L_S) = 5
    let star = Graph::star(4);
    let oracle = *full_spectrum_oracle(&build_signless_laplacian(&star)).unwrap().last().unwrap();
    assert!((oracle - 5.0).abs() < 1e-10);
    assert!((upper_bound_sq(&star, 0.5).unwrap() - 2.5).abs() < 1e-10);
    assert!((alpha_spectral_radius(&star, 0.5).unwrap().radius - 2.5).abs() < 1e-10);

    let t4 = construct_family(&FamilySpec::new(FamilyId::T4, 9, 2).unwrap());
    let bound = upper_bound_sq(&t4, 0.6).unwrap();
    assert!(bound.is_finite() && bound >= alpha_spectral_radius(&t4, 0.6).unwrap().radius);

    let c5 = BoundsReport::compute(&Graph::cycle(5), 0.9).unwrap();
    assert!(c5.brackets(2.0, 1e-9));
    assert!(BoundsReport::compute(&Graph::cycle(5), 0.4).unwrap().upper_sq.is_none());
    assert_eq!(lower_bound_maxdeg(7, 0.5).unwrap(), 4.0);
}

#[test]
fn inequality_chain_holds_on_the_grid() {
    for k in 1..=50 {
        for step in 0..10 {
            let alpha = 0.5 + 0.05 * step as f64;
            let records = inequality_chain(k, alpha).unwrap();
            assert_eq!(records.len(), 9);
            for r in records {
                assert!(r.holds, "k = {k}, alpha = {alpha}: {r:?}");
            }
        }
    }
}

#[test]
fn t4_signless_radius_is_at_most_k_plus_7() {
    for n in 7..=14 {
        for k in 1..=n - 6 {
            let Ok(spec) = FamilySpec::new(FamilyId::T4, n, k) else { continue };
            let lambda = signless_laplacian_radius(&construct_family(&spec)).unwrap();
            assert!(lambda <= k as f64 + 7.0 + 1e-9, "n = {n}, k = {k}: {lambda}");
        }
    }
}
