mod common;

use std::collections::HashSet;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;

use lcorbit::euler::{all_eulerian_tours, decomposition_from_vector, DEFAULT_TOUR_CAP};
use lcorbit::formats::{from_graph6, to_graph6};
use lcorbit::generate::{connected_4regular_multigraphs, random_4regular, random_graph, rng};
use lcorbit::gf4::{pauli_commute, Pauli, PauliString};
use lcorbit::isotropic::{
    are_supplementary, complete_vector_from_index, count_eulerian_vectors,
    from_graphic_presentation, is_eulerian_vector, rank, DEFAULT_EULERIAN_CAP,
};
use lcorbit::orbit::{enumerate_orbit, orbit_size, orbit_tree, path_from_root, DEFAULT_ORBIT_CAP};
use lcorbit::quantum::{
    apply_lc_unitary, graph_state, pauli_matrix, stabilizer_generators, TOLERANCE,
};
use lcorbit::{
    alternance_graph, canonical_system, double_occurrence_word, e_of_graph, find_eulerian_tour,
    k_index, lc_equivalent, GF4Subspace, GF4Vector, GraphicPresentation, LabelledGraph, GF4,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = LabelledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p);
            LabelledGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_gf4() -> impl Strategy<Value = GF4> {
    prop_oneof![Just(GF4::Zero), Just(GF4::One), Just(GF4::W), Just(GF4::W2)]
}

fn arb_nonzero() -> impl Strategy<Value = GF4> {
    prop_oneof![Just(GF4::One), Just(GF4::W), Just(GF4::W2)]
}

fn arb_vectors(n: usize, count: usize) -> impl Strategy<Value = Vec<GF4Vector>> {
    proptest::collection::vec(
        proptest::collection::vec(arb_gf4(), n).prop_map(GF4Vector),
        count,
    )
}

fn all_small_graphs(max_n: usize) -> impl Iterator<Item = LabelledGraph> {
    (1..=max_n).flat_map(LabelledGraph::all_on)
}

// ---- graph core ----

proptest! {
    #[test]
    fn local_complement_is_an_involution(g in arb_graph(12), v in 0usize..12) {
        let v = v % g.n();
        prop_assert_eq!(g.local_complement(v).unwrap().local_complement(v).unwrap(), g);
    }

    #[test]
    fn local_complement_only_touches_the_neighbourhood(g in arb_graph(12), v in 0usize..12) {
        let v = v % g.n();
        let h = g.local_complement(v).unwrap();
        let nv = g.neighborhood(v).unwrap();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                let inside = nv.get(a) && nv.get(b);
                prop_assert_eq!(g.adjacent(a, b) != h.adjacent(a, b), inside);
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn orbit_is_closed_and_size_is_invariant() {
    for g in all_small_graphs(5).step_by(7) {
        let report = enumerate_orbit(&g, true, DEFAULT_ORBIT_CAP).unwrap();
        let members: HashSet<LabelledGraph> = report.members.unwrap().into_iter().collect();
        assert!(members.contains(&g));
        assert_eq!(members.len() as u64, report.size);
        for m in &members {
            for v in 0..m.n() {
                assert!(members.contains(&m.local_complement(v).unwrap()));
            }
        }
        for v in 0..g.n() {
            let h = g.local_complement(v).unwrap();
            assert_eq!(orbit_size(&h, DEFAULT_ORBIT_CAP).unwrap(), report.size);
        }
    }
}

#[test]
fn lc_equivalence_is_an_equivalence_relation() {
    for n in 1..=4 {
        let graphs: Vec<LabelledGraph> = LabelledGraph::all_on(n).collect();
        let m = graphs.len();
        let mut rel = vec![vec![false; m]; m];
        for i in 0..m {
            for j in 0..m {
                rel[i][j] = lc_equivalent(&graphs[i], &graphs[j], DEFAULT_ORBIT_CAP).unwrap();
            }
        }
        for i in 0..m {
            assert!(rel[i][i]);
            for j in 0..m {
                assert_eq!(rel[i][j], rel[j][i]);
                if rel[i][j] {
                    for l in (0..m).filter(|&l| rel[j][l]) {
                        assert!(rel[i][l]);
                    }
                }
            }
        }
    }
}

#[test]
fn orbit_tree_paths_replay_with_unitaries() {
    let mut r = rng(11);
    for _ in 0..20 {
        let n = r.gen_range(2..=6);
        let g = random_graph(n, 0.5, &mut r);
        let nodes = orbit_tree(&g, DEFAULT_ORBIT_CAP).unwrap();
        for (i, node) in nodes.iter().enumerate() {
            let mut h = g.clone();
            let mut state = graph_state(&g).unwrap();
            for v in path_from_root(&nodes, i) {
                state = state.apply_lc(&h, v).unwrap();
                h = h.local_complement(v).unwrap();
            }
            assert_eq!(h, node.graph);
            assert!(graph_state(&h).unwrap().eq_up_to_phase(&state, TOLERANCE));
        }
    }
}

// ---- GF(4) and isotropic systems ----

fn kron(a: &[Vec<Complex64>], b: &[[Complex64; 2]; 2]) -> Vec<Vec<Complex64>> {
    let d = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); 2 * d]; 2 * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn matrix_of(p: &PauliString) -> Vec<Vec<Complex64>> {
    p.0.iter()
        .fold(vec![vec![Complex64::new(1.0, 0.0)]], |m, &l| {
            kron(&m, &pauli_matrix(l))
        })
}

fn matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn all_pauli_strings(n: usize) -> Vec<PauliString> {
    const L: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    (0..4usize.pow(n as u32))
        .map(|mut i| {
            PauliString(
                (0..n)
                    .map(|_| {
                        let l = L[i % 4];
                        i /= 4;
                        l
                    })
                    .collect(),
            )
        })
        .collect()
}

#[test]
fn pauli_commutation_matches_matrices() {
    for n in 1..=3 {
        let all = all_pauli_strings(n);
        for p in &all {
            let mp = matrix_of(p);
            for q in &all {
                let mq = matrix_of(q);
                let (pq, qp) = (matmul(&mp, &mq), matmul(&mq, &mp));
                let commute = pq
                    .iter()
                    .flatten()
                    .zip(qp.iter().flatten())
                    .all(|(a, b)| (a - b).norm() < 1e-12);
                assert_eq!(pauli_commute(p, q).unwrap(), commute, "{p} {q}");
            }
        }
    }
}

#[test]
fn commutation_bridge_exhaustive_small() {
    for n in 1..=2 {
        let vs: Vec<GF4Vector> = (0..16usize.pow(n as u32) as u64)
            .map(|i| {
                GF4Vector(
                    (0..n)
                        .map(|q| GF4::ALL[(i >> (4 * q) & 3) as usize])
                        .collect(),
                )
            })
            .collect();
        for a in &vs {
            for b in &vs {
                let commute = pauli_commute(&a.alpha(), &b.alpha()).unwrap();
                assert_eq!(commute, !a.trace_inner(b).unwrap());
            }
        }
    }
}

proptest! {
    #[test]
    fn commutation_bridge(n in 1usize..=10, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut draw = || GF4Vector((0..n).map(|_| GF4::ALL[r.gen_range(0..4)]).collect());
        let (a, b) = (draw(), draw());
        let alpha_a = a.alpha();
        prop_assert_eq!(alpha_a.to_gf4(), a.clone());
        prop_assert_eq!(
            pauli_commute(&alpha_a, &b.alpha()).unwrap(),
            !a.trace_inner(&b).unwrap()
        );
    }

    #[test]
    fn trace_inner_is_bilinear(v in arb_vectors(6, 3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let lhs = a.add(b).unwrap().trace_inner(c).unwrap();
        prop_assert_eq!(lhs, a.trace_inner(c).unwrap() ^ b.trace_inner(c).unwrap());
        prop_assert_eq!(a.trace_inner(b).unwrap(), b.trace_inner(a).unwrap());
        prop_assert!(!a.trace_inner(a).unwrap());
    }

    #[test]
    fn subspace_dimensions_obey_the_modular_law(a in arb_vectors(4, 4), b in arb_vectors(4, 4)) {
        let sa = GF4Subspace::span(4, &a).unwrap();
        let sb = GF4Subspace::span(4, &b).unwrap();
        let sum = sa.sum(&sb).unwrap();
        let cap = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + cap.dim());
        for x in cap.elements() {
            prop_assert!(sa.contains(&x).unwrap() && sb.contains(&x).unwrap());
        }
        let a_elems: HashSet<GF4Vector> = sa.elements().into_iter().collect();
        let common = sb.elements().into_iter().filter(|x| a_elems.contains(x)).count();
        prop_assert_eq!(common, 1usize << cap.dim());
    }

    #[test]
    fn supplementary_presentations_are_isotropic_with_eulerian_v(
        g in arb_graph(8),
        raw in proptest::collection::vec((arb_nonzero(), 1u8..3), 8),
    ) {
        let n = g.n();
        let v = GF4Vector(raw[..n].iter().map(|&(x, _)| x).collect());
        // w_i = v_i * (w or w^2) is nonzero and distinct from v_i
        let w = GF4Vector(
            raw[..n]
                .iter()
                .map(|&(x, s)| x * if s == 1 { GF4::W } else { GF4::W2 })
                .collect(),
        );
        prop_assert!(are_supplementary(&v, &w).unwrap());
        let p = GraphicPresentation::new(g, v.clone(), w).unwrap();
        let s = from_graphic_presentation(&p).unwrap();
        prop_assert_eq!(s.space().dim(), n);
        prop_assert!(is_eulerian_vector(&s, &v));
        prop_assert_eq!(rank(&s, &v).unwrap(), 0);
    }
}

#[test]
fn random_canonical_systems_validate() {
    let mut r = rng(5);
    for _ in 0..200 {
        let n = r.gen_range(1..=10);
        let g = random_graph(n, r.gen_range(0.0..1.0), &mut r);
        let s = canonical_system(&g);
        let again = lcorbit::IsotropicSystem::new(s.space().clone()).unwrap();
        assert_eq!(again.n(), n);
        let basis = s.space().basis();
        for a in &basis {
            for b in &basis {
                assert!(!a.trace_inner(b).unwrap());
            }
        }
    }
}

#[test]
fn eulerian_count_matches_listing_oracle() {
    for g in all_small_graphs(5) {
        let fast = e_of_graph(&g, DEFAULT_EULERIAN_CAP).unwrap();
        assert_eq!(fast, common::eulerian_count_by_listing(&g), "{g:?}");
    }
    let mut r = rng(3);
    for _ in 0..30 {
        let g = random_graph(r.gen_range(6..=8), 0.5, &mut r);
        assert_eq!(
            e_of_graph(&g, DEFAULT_EULERIAN_CAP).unwrap(),
            common::eulerian_count_by_listing(&g)
        );
    }
}

#[test]
fn rank_matches_explicit_intersection() {
    let mut r = rng(4);
    for _ in 0..40 {
        let n = r.gen_range(1..=6);
        let g = random_graph(n, 0.5, &mut r);
        let s = canonical_system(&g);
        let elements = s.space().elements();
        for idx in 0..3u64.pow(n as u32) {
            let c = complete_vector_from_index(n, idx);
            let hits = elements
                .iter()
                .filter(|x| {
                    x.0.iter()
                        .zip(&c.0)
                        .all(|(&a, &b)| a == GF4::Zero || a == b)
                })
                .count();
            assert_eq!(1usize << rank(&s, &c).unwrap(), hits);
        }
        let total = count_eulerian_vectors(&s, DEFAULT_EULERIAN_CAP).unwrap();
        assert_eq!(total, common::eulerian_count_by_listing(&g));
    }
}

#[test]
fn e_and_k_are_invariant_under_local_complementation() {
    let mut r = rng(8);
    for _ in 0..40 {
        let g = random_graph(r.gen_range(1..=8), 0.5, &mut r);
        let v = r.gen_range(0..g.n());
        let h = g.local_complement(v).unwrap();
        assert_eq!(e_of_graph(&g, 13).unwrap(), e_of_graph(&h, 13).unwrap());
    }
    for g in all_small_graphs(6) {
        let k = k_index(&g);
        for v in 0..g.n() {
            assert_eq!(k_index(&g.local_complement(v).unwrap()), k, "{g:?} at {v}");
        }
    }
}

#[test]
fn mu_basis_check_matches_oracle_on_random_graphs() {
    let mut r = rng(9);
    let mut members = 0;
    for _ in 0..300 {
        let n = r.gen_range(2..=9);
        let g = random_graph(n, r.gen_range(0.2..0.8), &mut r);
        if g.edge_count() > 20 {
            continue;
        }
        let all = common::mu_all_cycles(&g);
        members += all as usize;
        assert_eq!(lcorbit::in_class_mu(&g).is_ok(), all, "{g:?}");
    }
    assert!(members > 0);
}

// ---- multigraphs and tours ----

fn sample_multigraphs() -> Vec<lcorbit::MultiGraph4> {
    let mut out: Vec<_> = (1..=4).flat_map(connected_4regular_multigraphs).collect();
    let mut r = rng(21);
    for _ in 0..15 {
        let k = r.gen_range(2..=6);
        out.push(random_4regular(k, &mut r));
    }
    out
}

#[test]
fn decompositions_partition_edges_and_are_distinct() {
    for f in sample_multigraphs()
        .iter()
        .filter(|f| f.vertex_count() <= 5)
    {
        let k = f.vertex_count();
        let mut seen = HashSet::new();
        for idx in 0..3u64.pow(k as u32) {
            let v = complete_vector_from_index(k, idx);
            let d = decomposition_from_vector(f, &v).unwrap();
            let mut used: Vec<usize> = d.tours.iter().flat_map(|t| t.edges()).collect();
            used.sort_unstable();
            assert_eq!(used, (0..f.edges().len()).collect::<Vec<_>>());
            // the set of half-edge pairings used at the vertices determines D
            let mut key: Vec<(usize, usize)> = d
                .tours
                .iter()
                .flat_map(|t| {
                    let h = &t.half_edges;
                    (0..h.len()).map(move |i| {
                        let (a, b) = (h[i] ^ 1, h[(i + 1) % h.len()]);
                        (a.min(b), a.max(b))
                    })
                })
                .collect();
            key.sort_unstable();
            assert_eq!(key.len(), 2 * k);
            assert!(seen.insert(key));
            for t in &d.tours {
                let tv = f.transition_vector(t);
                if d.is_single_tour() {
                    assert_eq!(tv.unwrap(), v);
                }
            }
        }
    }
}

#[test]
fn found_tour_is_among_counted_tours() {
    for f in sample_multigraphs() {
        let tour = find_eulerian_tour(&f).unwrap();
        f.validate_tour(&tour).unwrap();
        let v = f.transition_vector(&tour).unwrap();
        let d = decomposition_from_vector(&f, &v).unwrap();
        assert!(d.is_single_tour());
        let all = all_eulerian_tours(&f, DEFAULT_TOUR_CAP).unwrap();
        assert!(all.iter().any(|(w, _)| *w == v));
    }
}

#[test]
fn alternance_graphs_of_all_tours_form_one_orbit() {
    for f in sample_multigraphs()
        .iter()
        .filter(|f| f.vertex_count() <= 5)
    {
        let tours = all_eulerian_tours(f, DEFAULT_TOUR_CAP).unwrap();
        let alternance: HashSet<LabelledGraph> = tours
            .iter()
            .map(|(_, t)| alternance_graph(&double_occurrence_word(f, t).unwrap()))
            .collect();
        let g = alternance.iter().next().unwrap();
        let orbit: HashSet<LabelledGraph> = enumerate_orbit(g, true, DEFAULT_ORBIT_CAP)
            .unwrap()
            .members
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(alternance, orbit, "{}", f.to_text());
    }
}

// ---- quantum ----

#[test]
fn alpha_of_generators_are_the_stabilizers() {
    for g in all_small_graphs(4) {
        let gens = lcorbit::isotropic::GraphicPresentation::canonical(g.clone()).generators();
        let alpha: Vec<PauliString> = gens.iter().map(|x| x.alpha()).collect();
        assert_eq!(alpha, stabilizer_generators(&g));
    }
}

#[test]
fn lc_unitary_on_every_vertex_up_to_six() {
    let mut r = rng(13);
    for _ in 0..30 {
        let g = random_graph(6, 0.5, &mut r);
        for v in 0..6 {
            let lhs = apply_lc_unitary(&g, v).unwrap();
            let rhs = graph_state(&g.local_complement(v).unwrap()).unwrap();
            assert!(rhs.eq_up_to_phase(&lhs, TOLERANCE));
            assert!((lhs.norm() - 1.0).abs() < TOLERANCE);
        }
    }
}
