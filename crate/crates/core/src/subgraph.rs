//! Induced-subgraph search: exact embeddings, quadrangle detection, maximum
//! cliques and independent sets, and the scan for the forbidden families
//! that certify a smallest eigenvalue below -3.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An injective map from pattern vertices to host vertices under which the
/// pattern is an induced subgraph: pattern vertices are adjacent exactly
/// when their images are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Host vertices in the image, sorted.
    pub fn image(&self) -> VertexSet {
        let mut v = self.map.clone();
        v.sort_unstable();
        VertexSet::from_sorted(v)
    }

    /// Re-checks injectivity and the induced condition bit by bit.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        if self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for u in 0..pattern.n() {
            for v in u + 1..pattern.n() {
                if pattern.has_edge(u, v) != host.has_edge(self.map[u], self.map[v]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an induced copy of `pattern` in `host`, or `None`. Backtracking in
/// ascending vertex order on both sides, so the returned embedding is the
/// lexicographically first one; candidates are pruned by degree and by
/// adjacency consistency with all placed vertices.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let m = pattern.n();
    if m > host.n() {
        return None;
    }
    let host_deg = host.degrees();
    let pat_deg = pattern.degrees();
    let mut map: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; host.n()];
    if place(host, pattern, &host_deg, &pat_deg, &mut map, &mut used) {
        let e = Embedding { map };
        debug_assert!(e.verify(host, pattern));
        Some(e)
    } else {
        None
    }
}

fn place(
    host: &Graph,
    pattern: &Graph,
    host_deg: &[usize],
    pat_deg: &[usize],
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = map.len();
    if i == pattern.n() {
        return true;
    }
    'candidates: for v in 0..host.n() {
        if used[v] || host_deg[v] < pat_deg[i] {
            continue;
        }
        for (j, &w) in map.iter().enumerate() {
            if pattern.has_edge(j, i) != host.has_edge(w, v) {
                continue 'candidates;
            }
        }
        map.push(v);
        used[v] = true;
        if place(host, pattern, host_deg, pat_deg, map, used) {
            return true;
        }
        used[v] = false;
        map.pop();
    }
    false
}

/// Finds an induced 4-cycle, returned in cycle order `[x, u, z, v]` with
/// `x ~ u ~ z ~ v ~ x` and both diagonals absent. Scans non-adjacent pairs
/// with at least two common neighbors; any non-adjacent pair of common
/// neighbors closes a quadrangle, and every induced quadrangle arises this
/// way from one of its diagonals.
pub fn has_induced_quadrangle(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for x in 0..n {
        for z in x + 1..n {
            if g.has_edge(x, z) {
                continue;
            }
            let common = g.common_neighbors(x, z).expect("distinct in-range pair");
            if common.len() < 2 {
                continue;
            }
            let cs = common.as_slice();
            for (i, &u) in cs.iter().enumerate() {
                for &v in &cs[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Some([x, u, z, v]);
                    }
                }
            }
        }
    }
    None
}

// Plain word-mask helpers over the same layout as Graph rows.

fn mask_ones(n: usize, words: usize) -> Vec<u64> {
    let mut m = vec![u64::MAX; words];
    let spare = words * 64 - n;
    if spare > 0 {
        m[words - 1] >>= spare;
    }
    m
}

fn mask_any(m: &[u64]) -> bool {
    m.iter().any(|&w| w != 0)
}

fn mask_clear(m: &mut [u64], v: usize) {
    m[v / 64] &= !(1u64 << (v % 64));
}

fn mask_iter(m: &[u64]) -> impl Iterator<Item = usize> + '_ {
    m.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// Exact maximum clique: branch and bound in the Tomita style, with a greedy
/// coloring of the candidate set as the upper bound and color-sorted
/// expansion order. Deterministic, so the witness is reproducible.
pub fn max_clique(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let words = g.row(0).len().max(1);
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let p = mask_ones(g.n(), words);
    expand(g, &mut current, p, &mut best);
    best.sort_unstable();
    let size = best.len();
    Ok((size, VertexSet::from_sorted(best)))
}

fn expand(g: &Graph, current: &mut Vec<usize>, p: Vec<u64>, best: &mut Vec<usize>) {
    if !mask_any(&p) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring: vertices in ascending order go to the first color
    // class containing none of their neighbors. A clique meets each class at
    // most once, so color counts bound the clique size.
    let words = p.len();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    let mut order: Vec<(usize, usize)> = Vec::new(); // (vertex, color)
    for v in mask_iter(&p) {
        let row = g.row(v);
        let class = classes
            .iter()
            .position(|cl| cl.iter().zip(row).all(|(a, b)| a & b == 0))
            .unwrap_or_else(|| {
                classes.push(vec![0u64; words]);
                classes.len() - 1
            });
        classes[class][v / 64] |= 1u64 << (v % 64);
        order.push((v, class + 1));
    }
    order.sort_by_key(|&(v, c)| (c, v));

    let mut allowed = p;
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        let row = g.row(v);
        let next: Vec<u64> = allowed.iter().zip(row).map(|(a, b)| a & b).collect();
        current.push(v);
        expand(g, current, next, best);
        current.pop();
        mask_clear(&mut allowed, v);
    }
}

/// Exact maximum independent set: maximum clique of the complement, on the
/// same vertex labels.
pub fn max_independent_set(g: &Graph) -> Result<(usize, VertexSet)> {
    let (alpha, witness) = max_clique(&g.complement())?;
    debug_assert!(witness
        .as_slice()
        .iter()
        .enumerate()
        .all(|(i, &u)| witness.as_slice()[i + 1..].iter().all(|&v| !g.has_edge(u, v))));
    Ok((alpha, witness))
}

/// Which forbidden family a scan hit belongs to. Any induced copy of these
/// graphs forces the smallest eigenvalue of the host below -3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenFamily {
    /// A connected bipartite induced subgraph of order at least 11
    /// containing an induced 9-star: its largest eigenvalue exceeds 3, and
    /// bipartite spectra are symmetric.
    ConnectedBipartite { order: usize },
    /// The cone over two disjoint s-cliques and t isolated vertices, in the
    /// range (s+2)(t-3) > 12 where a quotient-matrix determinant goes
    /// negative at -3.
    ConeTwoCliques { s: usize, t: usize },
    /// One of the four sporadic cones excluded by the same quotient
    /// argument.
    NamedCone { name: &'static str },
}

/// A located forbidden subgraph: the pattern, where it embeds, and which
/// family certifies the eigenvalue bound.
#[derive(Clone, Debug)]
pub struct ForbiddenHit {
    pub family: ForbiddenFamily,
    pub pattern: Graph,
    pub embedding: Embedding,
}

/// Builds a cone with the apex at vertex 0. Scan patterns put the apex
/// first so the backtracking search tests the highest-degree pattern vertex
/// before anything else.
fn apex_cone(base: &Graph) -> Graph {
    let n = base.n() + 1;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    for (u, v) in base.edges() {
        edges.push((u + 1, v + 1));
    }
    Graph::from_edge_list(n, &edges).expect("cone edge list is valid")
}

fn two_cliques_and_isolated(s: usize, t: usize) -> Graph {
    let mut g = Graph::complete(s).disjoint_union(&Graph::complete(s));
    if t > 0 {
        g = g.disjoint_union(&Graph::empty(t));
    }
    g
}

/// Scans for every forbidden family. Hits are reported in a fixed order:
/// the bipartite family first, then the cone family by ascending (s, t),
/// then the sporadic cones; each hit's embedding is the deterministic first
/// one. An empty result certifies nothing by itself, but any hit implies
/// the smallest eigenvalue of `g` is strictly below -3.
pub fn forbidden_minus3_scan(g: &Graph) -> Vec<ForbiddenHit> {
    let n = g.n();
    let mut hits = Vec::new();

    if let Some(hit) = scan_bipartite_order11(g) {
        hits.push(hit);
    }

    // Cone over 2K_s + tK_1: enumerate every (s, t) that fits in the host
    // and satisfies (s+2)(t-3) > 12.
    for s in 1..=n.saturating_sub(1) / 2 {
        let t_min = 4 + 12 / (s + 2);
        let t_max = match (n - 1).checked_sub(2 * s) {
            Some(m) => m,
            None => continue,
        };
        for t in t_min..=t_max {
            let pattern = apex_cone(&two_cliques_and_isolated(s, t));
            if let Some(embedding) = contains_induced(g, &pattern) {
                hits.push(ForbiddenHit {
                    family: ForbiddenFamily::ConeTwoCliques { s, t },
                    pattern,
                    embedding,
                });
            }
        }
    }

    let named: [(&'static str, Graph); 4] = [
        (
            "C(2K15 + K3 + 2K1)",
            apex_cone(
                &Graph::complete(15)
                    .disjoint_union(&Graph::complete(15))
                    .disjoint_union(&Graph::complete(3))
                    .disjoint_union(&Graph::empty(2)),
            ),
        ),
        (
            "C(2K21 + K11 + K1)",
            apex_cone(
                &Graph::complete(21)
                    .disjoint_union(&Graph::complete(21))
                    .disjoint_union(&Graph::complete(11))
                    .disjoint_union(&Graph::empty(1)),
            ),
        ),
        (
            "C(C(2K13) + K13)",
            apex_cone(
                &apex_cone(&Graph::complete(13).disjoint_union(&Graph::complete(13)))
                    .disjoint_union(&Graph::complete(13)),
            ),
        ),
        (
            "C(C(3K5))",
            apex_cone(&apex_cone(
                &Graph::complete(5)
                    .disjoint_union(&Graph::complete(5))
                    .disjoint_union(&Graph::complete(5)),
            )),
        ),
    ];
    for (name, pattern) in named {
        if pattern.n() > n {
            continue;
        }
        if let Some(embedding) = contains_induced(g, &pattern) {
            hits.push(ForbiddenHit {
                family: ForbiddenFamily::NamedCone { name },
                pattern,
                embedding,
            });
        }
    }

    hits
}

/// Looks for a connected induced bipartite subgraph of order 11 containing
/// an induced 9-star. Any larger qualifying subgraph contains such an
/// order-11 one (drop vertices from the far end of a search tree), so
/// stopping at 11 loses nothing. The search walks centers, independent
/// 9-subsets of their neighborhoods, and single-vertex extensions, all in
/// ascending order, and reports the first success.
fn scan_bipartite_order11(g: &Graph) -> Option<ForbiddenHit> {
    let n = g.n();
    for center in 0..n {
        if g.degree(center) < 9 {
            continue;
        }
        let nbrs = g.neighbors(center);
        let mut leaves: Vec<usize> = Vec::with_capacity(9);
        if let Some(hit) = pick_leaves(g, center, nbrs.as_slice(), 0, &mut leaves) {
            return Some(hit);
        }
    }
    None
}

fn pick_leaves(
    g: &Graph,
    center: usize,
    nbrs: &[usize],
    from: usize,
    leaves: &mut Vec<usize>,
) -> Option<ForbiddenHit> {
    if leaves.len() == 9 {
        return extend_star(g, center, leaves);
    }
    for (offset, &v) in nbrs[from..].iter().enumerate() {
        if leaves.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        leaves.push(v);
        if let Some(hit) = pick_leaves(g, center, nbrs, from + offset + 1, leaves) {
            return Some(hit);
        }
        leaves.pop();
    }
    None
}

fn extend_star(g: &Graph, center: usize, leaves: &[usize]) -> Option<ForbiddenHit> {
    let mut members = vec![center];
    members.extend_from_slice(leaves);
    for v in 0..g.n() {
        if members.contains(&v) {
            continue;
        }
        if !members.iter().any(|&u| g.has_edge(u, v)) {
            continue; // would disconnect
        }
        let mut set = members.clone();
        set.push(v);
        set.sort_unstable();
        let vs = VertexSet::new(set.clone(), g.n()).expect("members are valid vertices");
        let sub = g.induced_subgraph(&vs).expect("induced subgraph of valid set");
        if !is_bipartite(&sub) {
            continue;
        }
        let embedding = Embedding { map: set };
        debug_assert!(embedding.verify(g, &sub));
        return Some(ForbiddenHit {
            family: ForbiddenFamily::ConnectedBipartite { order: sub.n() },
            pattern: sub,
            embedding,
        });
    }
    None
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for u in g.neighbors_iter(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn induced_search_basics() {
        let e = contains_induced(&Graph::cycle(5), &path(4)).expect("C5 minus a vertex is P4");
        assert_eq!(e.map(), [0, 1, 2, 3]);
        assert!(e.verify(&Graph::cycle(5), &path(4)));

        assert!(contains_induced(&Graph::complete(4), &Graph::cycle(4)).is_none());

        let e = contains_induced(&Graph::petersen(), &Graph::cycle(5))
            .expect("Petersen contains induced pentagons");
        assert!(e.verify(&Graph::petersen(), &Graph::cycle(5)));
        assert_eq!(e.map(), [0, 7, 3, 4, 9]);
    }

    #[test]
    fn induced_search_edge_cases() {
        // Empty pattern embeds vacuously; oversized pattern never does.
        assert!(contains_induced(&Graph::cycle(4), &Graph::empty(0)).is_some());
        assert!(contains_induced(&Graph::cycle(4), &Graph::cycle(5)).is_none());
        // Pattern with an edge never embeds in an edgeless host.
        assert!(contains_induced(&Graph::empty(6), &Graph::complete(2)).is_none());
        assert!(contains_induced(&Graph::empty(6), &Graph::empty(3)).is_some());
    }

    #[test]
    fn induced_search_agrees_with_brute_force_on_small_hosts() {
        let hosts = [
            Graph::cycle(5),
            Graph::cycle(6),
            path(6),
            Graph::complete_bipartite(3, 3),
            Graph::grid(3, 2),
            Graph::cocktail_party(3),
        ];
        let patterns = [
            path(3),
            path(4),
            Graph::cycle(3),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::complete(3),
            Graph::empty(3),
            Graph::complete_bipartite(1, 3),
        ];
        for host in &hosts {
            for pattern in &patterns {
                let got = contains_induced(host, pattern).is_some();
                assert_eq!(
                    got,
                    brute_force_contains(host, pattern),
                    "host {host:?} pattern {pattern:?}"
                );
            }
        }
    }

    fn brute_force_contains(host: &Graph, pattern: &Graph) -> bool {
        let m = pattern.n();
        if m > host.n() {
            return false;
        }
        let mut map = Vec::with_capacity(m);
        fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
            if map.len() == pattern.n() {
                return (0..map.len()).all(|i| {
                    (i + 1..map.len())
                        .all(|j| pattern.has_edge(i, j) == host.has_edge(map[i], map[j]))
                });
            }
            for v in 0..host.n() {
                if map.contains(&v) {
                    continue;
                }
                map.push(v);
                if rec(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
            false
        }
        rec(host, pattern, &mut map)
    }

    #[test]
    fn quadrangle_detection() {
        assert_eq!(has_induced_quadrangle(&Graph::grid(3, 2)), Some([0, 1, 3, 2]));
        assert_eq!(has_induced_quadrangle(&Graph::complete(5)), None);
        assert_eq!(has_induced_quadrangle(&Graph::petersen()), None);
        assert!(has_induced_quadrangle(&Graph::cycle(4)).is_some());
        // C5 has non-adjacent pairs but only single common neighbors.
        assert_eq!(has_induced_quadrangle(&Graph::cycle(5)), None);
        // The 2-clique extension of C5 kills all quadrangles of the grid
        // family while staying co-edge-regular.
        assert_eq!(
            has_induced_quadrangle(&Graph::cycle(5).s_clique_extension(2)),
            None
        );
        assert!(has_induced_quadrangle(&Graph::grid(4, 3)).is_some());
    }

    fn assert_is_clique(g: &Graph, vs: &VertexSet) {
        let s = vs.as_slice();
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                assert!(g.has_edge(u, v), "{u} and {v} not adjacent");
            }
        }
    }

    #[test]
    fn clique_number_fixtures() {
        let (omega, w) = max_clique(&Graph::grid(5, 3)).unwrap();
        assert_eq!(omega, 5);
        assert_is_clique(&Graph::grid(5, 3), &w);

        let (omega, _) = max_clique(&Graph::complete(7)).unwrap();
        assert_eq!(omega, 7);

        let (omega, _) = max_clique(&Graph::petersen()).unwrap();
        assert_eq!(omega, 2);

        let (omega, _) = max_clique(&Graph::cycle(5)).unwrap();
        assert_eq!(omega, 2);

        let (omega, _) = max_clique(&Graph::empty(4)).unwrap();
        assert_eq!(omega, 1);

        assert!(max_clique(&Graph::empty(0)).is_err());
    }

    #[test]
    fn independence_number_fixtures() {
        let k33 = Graph::complete_bipartite(3, 3);
        let (alpha, w) = max_independent_set(&k33).unwrap();
        assert_eq!(alpha, 3);
        // The only independent 3-sets are the two sides.
        assert!(w.as_slice() == [0, 1, 2] || w.as_slice() == [3, 4, 5]);

        let (alpha, _) = max_independent_set(&Graph::cycle(5)).unwrap();
        assert_eq!(alpha, 2);

        // The local graph of a grid vertex is two disjoint cliques; one
        // vertex from each is a maximum independent set.
        let local = Graph::grid(4, 3).local_graph(0).unwrap();
        let (alpha, _) = max_independent_set(&local).unwrap();
        assert_eq!(alpha, 2);
    }

    #[test]
    fn clique_complement_duality() {
        for g in [
            Graph::cycle(6),
            Graph::petersen(),
            Graph::grid(3, 3),
            path(5),
            Graph::cocktail_party(3),
        ] {
            let (alpha, _) = max_independent_set(&g).unwrap();
            let (omega_c, _) = max_clique(&g.complement()).unwrap();
            assert_eq!(alpha, omega_c);
        }
    }

    #[test]
    fn forbidden_scan_cone_family() {
        let host = crate::graph::cone_two_cliques(2, 7);
        let hits = forbidden_minus3_scan(&host);
        assert!(
            hits.iter()
                .any(|h| h.family == ForbiddenFamily::ConeTwoCliques { s: 2, t: 7 }),
            "expected a (s,t) = (2,7) hit, got {:?}",
            hits.iter().map(|h| &h.family).collect::<Vec<_>>()
        );
        for h in &hits {
            assert!(h.embedding.verify(&host, &h.pattern));
        }
    }

    #[test]
    fn forbidden_scan_bipartite_family() {
        let host = Graph::complete_bipartite(1, 10);
        let hits = forbidden_minus3_scan(&host);
        assert!(hits
            .iter()
            .any(|h| matches!(h.family, ForbiddenFamily::ConnectedBipartite { order: 11 })));
        for h in &hits {
            assert!(h.embedding.verify(&host, &h.pattern));
            assert!(is_bipartite(&h.pattern) || !matches!(h.family, ForbiddenFamily::ConnectedBipartite { .. }));
        }
    }

    #[test]
    fn forbidden_scan_clean_hosts() {
        // Grids have smallest eigenvalue -2, so the scan must come up empty.
        assert!(forbidden_minus3_scan(&Graph::grid(5, 4)).is_empty());
        assert!(forbidden_minus3_scan(&Graph::petersen()).is_empty());
        assert!(forbidden_minus3_scan(&Graph::cycle(5).s_clique_extension(2)).is_empty());
    }

    #[test]
    fn forbidden_hits_certify_eigenvalue_bound() {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use std::cmp::Ordering;
        let minus3 = BigRational::from(BigInt::from(-3));
        for host in [
            crate::graph::cone_two_cliques(2, 7),
            Graph::complete_bipartite(1, 10),
        ] {
            assert!(!forbidden_minus3_scan(&host).is_empty());
            assert_eq!(
                crate::spectrum::cmp_min_eigenvalue(&host, &minus3).unwrap(),
                Ordering::Less,
                "host {host:?}"
            );
        }
    }
}
