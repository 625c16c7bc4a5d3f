mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use szeged_cut::indices::class_quotients;
use szeged_cut::molgen::{
    benzenoid_quotient_trees, build_benzenoid, build_phenylene, corannulene, linear_phenylene,
    ph_closed_formulas, HexSpec, SQUARE_LABEL,
};
use szeged_cut::oracle::oracle_suite;
use szeged_cut::{
    first_zagreb, is_partial_cube, theta_star_partition, validate_c_partition, weighted_index,
    weighted_suite_cut, Graph, IndexKind, QuotientGraph, WeightAssignment,
};

use common::{random_benzenoid, random_catacondensed};

fn assert_degrees(g: &Graph) {
    assert!(
        g.degrees().iter().all(|&d| d == 2 || d == 3),
        "{:?}",
        g.degrees()
    );
}

#[test]
fn benzenoid_direction_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for h in 1..=12 {
        let spec = random_benzenoid(&mut rng, h);
        let b = build_benzenoid(&spec).unwrap();
        assert_degrees(&b.graph);
        assert!(
            validate_c_partition(&b.graph, &b.partition()).unwrap(),
            "{spec:?}"
        );
        assert!(is_partial_cube(&b.graph).unwrap());
        // every Θ*-class is a cut inside a single direction
        let star = theta_star_partition(&b.graph).unwrap();
        let labels = b.labels();
        let wa = WeightAssignment::unit(&b.graph);
        for class in star.classes() {
            let label = b.direction_of[class[0]];
            assert!(class.iter().all(|&e| b.direction_of[e] == label));
            let q = szeged_cut::quotient_graph(&b.graph, &wa, class).unwrap();
            assert_eq!(q.graph().vertex_count(), 2);
        }
        assert!(labels.iter().all(|l| (1..=3).contains(l)));
        for t in benzenoid_quotient_trees(&b).unwrap() {
            assert!(t.graph().is_tree());
        }
    }
}

#[test]
fn benzenoid_cut_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for h in 1..=9 {
        let b = build_benzenoid(&random_benzenoid(&mut rng, h)).unwrap();
        for starred in [false, true] {
            let cut = b.suite(starred).unwrap();
            assert_eq!(
                cut.values(),
                oracle_suite(&b.graph, starred).unwrap().values()
            );
            if !starred {
                assert_eq!(
                    cut.wpi_v,
                    b.graph.vertex_count() as u128 * first_zagreb(&b.graph)
                );
            }
        }
    }
}

#[test]
fn phenylenes_are_partial_cubes_with_dual_tree() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for h in 2..=10 {
        let spec = random_catacondensed(&mut rng, h);
        let p = build_phenylene(&spec).unwrap();
        let cells = spec.cells().len();
        assert_eq!(p.graph.vertex_count(), 6 * cells);
        assert_eq!(p.graph.edge_count(), 6 * cells + 2 * (cells - 1));
        assert_degrees(&p.graph);
        assert!(is_partial_cube(&p.graph).unwrap());
        assert!(validate_c_partition(&p.graph, &p.partition()).unwrap());
        let wa = WeightAssignment::degree_sum(&p.graph);
        let quotients = p.direction_quotients(&wa).unwrap();
        let (_, t4) = quotients.iter().find(|(l, _)| *l == SQUARE_LABEL).unwrap();
        assert_eq!(t4.graph().vertex_count(), cells);
        // each hexagon is its own component, with weight 6
        assert!(t4.w().iter().all(|&w| w == 6));
        for (a, b) in spec.adjacent_pairs() {
            let (ca, cb) = (t4.component_map()[6 * a], t4.component_map()[6 * b]);
            assert!(t4.graph().neighbors(ca).iter().any(|&(x, _)| x == cb));
        }
        let cut = p.suite(false).unwrap();
        assert_eq!(
            cut.values(),
            oracle_suite(&p.graph, false).unwrap().values()
        );
    }
}

#[test]
fn phenylene_rejects_bad_cells() {
    let fused = HexSpec::new(vec![(0, 0), (1, 0), (0, 1)]).unwrap();
    assert!(build_phenylene(&fused).is_err());
    let apart = HexSpec::new(vec![(0, 0), (2, 0)]).unwrap();
    assert!(build_phenylene(&apart).is_err());
    assert!(linear_phenylene(1).is_err());
}

fn by_label(quotients: &[(u8, QuotientGraph)], label: u8) -> &QuotientGraph {
    &quotients.iter().find(|(l, _)| *l == label).unwrap().1
}

#[test]
fn linear_phenylene_formulas() {
    for n in 2..=12 {
        let ph = linear_phenylene(n).unwrap();
        let formulas = ph_closed_formulas(n).unwrap();
        let cut = ph.suite(false).unwrap();
        assert_eq!(cut.values(), formulas.values(), "PH_{n}");
        // per-class values in label order: vertical, two diagonals, squares
        for (c, f) in cut.per_class.iter().zip(&formulas.per_class) {
            assert_eq!(c.values(), f.values(), "PH_{n} class {}", f.class);
            assert_eq!(c.edges, f.edges);
        }
        let m1 = first_zagreb(&ph.graph);
        assert_eq!(m1, 44 * n as u128 - 20);
        assert_eq!(cut.wpi_v, 6 * n as u128 * m1);
    }
}

#[test]
fn ph2_vertical_tree() {
    let ph = linear_phenylene(2).unwrap();
    let wa = WeightAssignment::degree_sum(&ph.graph);
    let quotients = ph.direction_quotients(&wa).unwrap();
    let t1 = by_label(&quotients, 1);
    let sz = weighted_index(t1.graph(), &quotient_weights(t1), IndexKind::Sz).unwrap();
    assert_eq!(sz, 720);
    let cut = weighted_suite_cut(&ph.graph, &ph.partition(), false).unwrap();
    assert_eq!(cut.wsz, 2124);
}

/// Quotient vertex weights `w_i`, edge weights `w_i'`, and `λ_i'`.
fn quotient_weights(q: &QuotientGraph) -> WeightAssignment {
    WeightAssignment::new(
        q.graph(),
        q.w().to_vec(),
        q.w_prime().to_vec(),
        q.lambda_prime().to_vec(),
    )
    .unwrap()
}

#[test]
fn fullerene_patch_first_class() {
    let g = corannulene();
    assert_eq!((g.vertex_count(), g.edge_count()), (20, 25));
    let star = theta_star_partition(&g).unwrap();
    let mut sizes: Vec<usize> = star.classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [3, 3, 3, 3, 3, 10]);
    let wa = WeightAssignment::degree_sum(&g);
    let quotients = class_quotients(&g, &wa, &star).unwrap();
    let g1 = &quotients[star.class_of(0)];
    assert_eq!(g1.class().len(), 10);
    let qw = quotient_weights(g1);
    assert_eq!(
        weighted_index(g1.graph(), &qw, IndexKind::Sz).unwrap(),
        3200
    );
    assert_eq!(
        weighted_index(g1.graph(), &qw, IndexKind::PiV).unwrap(),
        800
    );
    // the edge Szeged contribution runs SZ_T over (λ_i, λ_i') with w_i'
    let lam = WeightAssignment::new(
        g1.graph(),
        g1.lambda().to_vec(),
        g1.w_prime().to_vec(),
        g1.lambda_prime().to_vec(),
    )
    .unwrap();
    assert_eq!(
        weighted_index(g1.graph(), &lam, IndexKind::SzT).unwrap(),
        5000
    );
    let report = weighted_suite_cut(&g, &star, false).unwrap();
    assert_eq!(report.values(), [9200, 2400, 10760, 2760]);
}

#[test]
fn hex_spec_text() {
    let spec = HexSpec::parse("# naphthalene\n0 0\n1 0\n").unwrap();
    let b = build_benzenoid(&spec).unwrap();
    assert_eq!((b.graph.vertex_count(), b.graph.edge_count()), (10, 11));
    assert!(HexSpec::parse("0 0\n0 0\n").is_err());
    assert!(HexSpec::parse("").is_err());
    assert!(HexSpec::parse("0 x\n").is_err());
}
