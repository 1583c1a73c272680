//! Fixture pools and property drivers shared by the acceptance and property
//! suites. Each driver runs a fixed number of randomized cases from a seeded
//! generator and panics with a reproducible description on the first
//! violation.

use std::cmp::Ordering;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use coedge_core::quotient::{coarsest_equitable_refinement, quotient_matrix, Partition, QuotientOutcome};
use coedge_core::regularity::{
    co_edge_regular_params, moment_identities, strongly_co_edge_regular_ell,
};
use coedge_core::roots::RootInterval;
use coedge_core::spectrum::{char_poly, Spectrum};
use coedge_core::subgraph::max_clique;
use coedge_core::{Graph, VertexSet};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_graph(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> Graph {
    let n = rng.random_range(n_lo..=n_hi);
    let density = rng.random_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Arbitrary graphs (regular or not, connected or not) for spectral
/// properties that assume nothing beyond a nonempty vertex set.
pub fn mixed_fixture(rng: &mut ChaCha8Rng) -> Graph {
    match rng.random_range(0..10u8) {
        0 => Graph::grid(rng.random_range(2..=6), rng.random_range(2..=6)),
        1 => Graph::cycle(rng.random_range(3..=20)),
        2 => Graph::complete_bipartite(rng.random_range(1..=6), rng.random_range(1..=6)),
        3 => Graph::petersen(),
        4 => Graph::triangular(rng.random_range(4..=8)),
        5 => Graph::cocktail_party(rng.random_range(2..=7)),
        6 => Graph::complete(rng.random_range(2..=9)),
        7 => Graph::shrikhande(),
        _ => random_graph(rng, 4, 16),
    }
}

/// Strongly co-edge-regular graphs with c = 2: the pool behind the lemmas
/// that assume those exact hypotheses.
pub fn scoe_c2_fixture(rng: &mut ChaCha8Rng) -> Graph {
    match rng.random_range(0..8u8) {
        0 => Graph::shrikhande(),
        1 => Graph::cycle(5).s_clique_extension(2),
        2 => Graph::petersen().s_clique_extension(2),
        3 => Graph::grid(rng.random_range(2..=12), 2),
        _ => {
            let a = rng.random_range(2..=8);
            let b = rng.random_range(2..=8);
            Graph::grid(a.max(b), a.min(b))
        }
    }
}

/// Co-edge-regular graphs of any c >= 1, for the moment identities.
pub fn co_edge_fixture(rng: &mut ChaCha8Rng) -> Graph {
    match rng.random_range(0..9u8) {
        0 => Graph::cycle(5),
        1 => Graph::petersen(),
        2 => Graph::triangular(rng.random_range(5..=8)),
        3 => Graph::cocktail_party(rng.random_range(2..=7)),
        4 => {
            let m = rng.random_range(2..=7);
            Graph::complete_bipartite(m, m)
        }
        5 => Graph::shrikhande(),
        6 => Graph::cycle(5).s_clique_extension(rng.random_range(1..=3)),
        _ => scoe_c2_fixture(rng),
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, m: usize) -> VertexSet {
    let mut indices: Vec<usize> = (0..n).collect();
    indices.shuffle(rng);
    indices.truncate(m);
    VertexSet::new(indices, n).unwrap()
}

/// Eigenvalues in nonincreasing order, repeated per multiplicity.
fn sorted_eigenvalues(g: &Graph) -> Vec<RootInterval> {
    let s = Spectrum::of(g).expect("nonempty fixture");
    let mut out = Vec::with_capacity(g.n());
    for entry in s.entries() {
        for _ in 0..entry.multiplicity {
            out.push(entry.value.clone());
        }
    }
    out
}

/// Eigenvalues of any principal submatrix nest between the eigenvalues of
/// the full adjacency matrix.
pub fn check_interlacing(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut done = 0;
    while done < cases {
        let g = mixed_fixture(rng);
        let n = g.n();
        if n < 2 {
            continue;
        }
        let m = rng.random_range(1..n);
        let subset = random_subset(rng, n, m);
        let h = g.induced_subgraph(&subset).unwrap();
        let full = sorted_eigenvalues(&g);
        let sub = sorted_eigenvalues(&h);
        for i in 0..m {
            assert_ne!(
                sub[i].compare(&full[i]),
                Ordering::Greater,
                "eigenvalue {i} of the subgraph on {subset} exceeds the host's \
                 ({} vs {}), host {:?}",
                sub[i],
                full[i],
                g.label()
            );
            assert_ne!(
                full[n - m + i].compare(&sub[i]),
                Ordering::Greater,
                "eigenvalue {} of the host exceeds eigenvalue {i} of the subgraph \
                 on {subset} ({} vs {}), host {:?}",
                n - m + i,
                full[n - m + i],
                sub[i],
                g.label()
            );
        }
        done += 1;
    }
    done
}

/// The characteristic polynomial of an equitable quotient divides the
/// graph's, so every quotient eigenvalue is a graph eigenvalue.
pub fn check_quotient_containment(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut done = 0;
    while done < cases {
        let g = mixed_fixture(rng);
        let n = g.n();
        let classes = rng.random_range(1..=4.min(n));
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
        for v in 0..n {
            cells[rng.random_range(0..classes)].push(v);
        }
        cells.retain(|c| !c.is_empty());
        let initial = Partition::new(n, cells).unwrap();
        let refined = coarsest_equitable_refinement(&g, &initial).unwrap();
        let q = match quotient_matrix(&g, &refined).unwrap() {
            QuotientOutcome::Equitable(q) => q,
            QuotientOutcome::NotEquitable(w) => {
                panic!("refinement of {initial:?} not equitable on {:?}: {w:?}", g.label())
            }
        };
        let cp_q = q.char_poly();
        let cp_g = char_poly(&g).unwrap();
        assert!(
            cp_q.divides(&cp_g),
            "quotient charpoly {:?} does not divide graph charpoly {:?} ({:?}, partition {refined:?})",
            cp_q.coeffs(),
            cp_g.coeffs(),
            g.label()
        );
        done += 1;
    }
    done
}

/// Walk-regular co-edge-regular graphs satisfy the closed-walk moment
/// identities; the report must hold on every co-edge-regular fixture.
pub fn check_moment_identities(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut done = 0;
    while done < cases {
        let g = co_edge_fixture(rng);
        assert!(
            co_edge_regular_params(&g).unwrap().holds(),
            "fixture pool produced a non-co-edge-regular graph {:?}",
            g.label()
        );
        let report = moment_identities(&g).unwrap();
        assert!(
            report.holds(),
            "moment identities fail on {:?}: {report:?}",
            g.label()
        );
        done += 1;
    }
    done
}

/// In a strongly co-edge-regular graph with c = 2, the neighbors w of x with
/// a_xw >= k/2 are pairwise adjacent.
pub fn check_w_clique(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut done = 0;
    while done < cases {
        let g = scoe_c2_fixture(rng);
        let params = strongly_co_edge_regular_ell(&g)
            .unwrap()
            .expect_holds("fixture pool");
        let k = params.k;
        let x = rng.random_range(0..g.n());
        let w: Vec<usize> = g
            .neighbors_iter(x)
            .filter(|&y| 2 * g.common_neighbors(x, y).unwrap().len() >= k)
            .collect();
        for (i, &a) in w.iter().enumerate() {
            for &b in &w[i + 1..] {
                assert!(
                    g.has_edge(a, b),
                    "W = {w:?} at x = {x} is not a clique in {:?}: {a} and {b} non-adjacent",
                    g.label()
                );
            }
        }
        done += 1;
    }
    done
}

/// A strongly co-edge-regular graph with c = 2 and clique number above
/// (ell+4)/2 must have ell = k-2.
pub fn check_omega_implication(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut done = 0;
    let mut nonvacuous = 0;
    while done < cases {
        let g = scoe_c2_fixture(rng);
        let params = strongly_co_edge_regular_ell(&g)
            .unwrap()
            .expect_holds("fixture pool");
        let (omega, witness) = max_clique(&g).unwrap();
        if 2 * omega > params.ell + 4 {
            nonvacuous += 1;
            assert_eq!(
                params.ell,
                params.k - 2,
                "clique number {omega} (witness {witness}) forces ell = k-2 on {:?}, \
                 but ell = {} with k = {}",
                g.label(),
                params.ell,
                params.k
            );
        }
        done += 1;
    }
    assert!(
        nonvacuous * 5 >= cases,
        "hypothesis held in only {nonvacuous} of {cases} cases; pool too weak"
    );
    done
}

/// Removing vertices cannot lower the smallest eigenvalue.
pub fn check_theta_min_monotonicity(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut done = 0;
    while done < cases {
        let g = mixed_fixture(rng);
        let n = g.n();
        if n < 2 {
            continue;
        }
        let m = rng.random_range(1..n);
        let subset = random_subset(rng, n, m);
        let h = g.induced_subgraph(&subset).unwrap();
        let g_min = Spectrum::of(&g).unwrap().theta_min().clone();
        let h_min = Spectrum::of(&h).unwrap().theta_min().clone();
        assert_ne!(
            g_min.compare(&h_min),
            Ordering::Greater,
            "theta_min rose from {g_min} to {h_min} after deleting down to {subset} in {:?}",
            g.label()
        );
        done += 1;
    }
    done
}
