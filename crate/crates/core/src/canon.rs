//! Canonical labelling, isomorphism testing, and structural recognizers
//! for grids and clique extensions.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quotient::{coarsest_equitable_refinement, Partition};
use crate::regularity::{strongly_co_edge_regular_ell, Check};
use crate::subgraph::has_induced_quadrangle;

/// A canonical labelling of a graph: `canon` serializes the relabelled
/// adjacency matrix (vertex count, then upper-triangle bits), and
/// `relabelling[i]` names the original vertex placed at canonical position
/// `i`. Two graphs are isomorphic exactly when their `canon` bytes agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    canon: Vec<u8>,
    relabelling: Vec<usize>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.canon
    }

    /// Original vertex at each canonical position.
    pub fn relabelling(&self) -> &[usize] {
        &self.relabelling
    }

    /// The canonically relabelled copy of the graph this form was built
    /// from.
    pub fn apply(&self, g: &Graph) -> Graph {
        let n = self.relabelling.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(self.relabelling[i], self.relabelling[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edge_list(n, &edges).expect("relabelling is a permutation")
    }
}

fn serialize_ordering(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(8 + (n * n) / 16 + 1);
    out.extend_from_slice(&(n as u64).to_be_bytes());
    let mut acc = 0u8;
    let mut filled = 0u8;
    for i in 0..n {
        for j in i + 1..n {
            acc <<= 1;
            if g.has_edge(order[i], order[j]) {
                acc |= 1;
            }
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

/// Computes the canonical form by equitable refinement plus
/// individualization: repeatedly refine the partition, branch on every
/// vertex of the first non-singleton cell, and keep the lexicographically
/// least adjacency serialization over all discrete orderings reached. The
/// cell order produced by refinement is label-invariant, so the result is
/// too.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm {
            canon: 0u64.to_be_bytes().to_vec(),
            relabelling: vec![],
        };
    }
    let initial = coarsest_equitable_refinement(g, &Partition::unit(n))
        .expect("unit partition is always valid");
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    descend(g, &initial, &mut best);
    let (canon, relabelling) = best.expect("at least one discrete ordering exists");
    CanonicalForm { canon, relabelling }
}

fn descend(g: &Graph, partition: &Partition, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let split = partition.cells().iter().position(|c| c.len() > 1);
    let Some(ci) = split else {
        let order: Vec<usize> = partition
            .cells()
            .iter()
            .map(|c| c.as_slice()[0])
            .collect();
        let bytes = serialize_ordering(g, &order);
        if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            *best = Some((bytes, order));
        }
        return;
    };
    let cell = partition.cells()[ci].as_slice().to_vec();
    for &v in &cell {
        let mut cells: Vec<Vec<usize>> = Vec::with_capacity(partition.cell_count() + 1);
        for (i, c) in partition.cells().iter().enumerate() {
            if i == ci {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&u| u != v).collect());
            } else {
                cells.push(c.as_slice().to_vec());
            }
        }
        let refined = Partition::new(g.n(), cells)
            .and_then(|p| coarsest_equitable_refinement(g, &p))
            .expect("individualized partition stays valid");
        descend(g, &refined, best);
    }
}

/// Isomorphism test: cheap invariants first (order, size, degree
/// multiset), then canonical form comparison.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g).canon == canonical_form(h).canon
}

/// A recognized grid structure: the graph is `K_p x K_q` and `map[v]`
/// gives the grid coordinate of `v` as `row * q + column` (rows of length
/// `q`, `p >= q`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridIso {
    pub p: usize,
    pub q: usize,
    pub map: Vec<usize>,
}

/// Decides whether `g` is a grid (the Cartesian product of two complete
/// graphs on at least 2 vertices each) and exhibits the isomorphism.
///
/// The test is structural: every local graph must split into exactly two
/// clique components with the same size pair everywhere; coordinates are
/// then read off one reference vertex's two cliques, and the candidate map
/// is verified edge by edge in both directions. Square grids are accepted
/// here; eigenvalue-count hypotheses belong to callers.
pub fn recognize_grid(g: &Graph) -> Option<GridIso> {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let k = g.regular_degree()?;
    // Component size pair of a local graph, both components complete.
    let local_pair = |v: usize| -> Option<(usize, usize)> {
        let comps = clique_components(g, v)?;
        if comps.len() != 2 {
            return None;
        }
        Some((comps[0].len(), comps[1].len()))
    };
    let (a0, b0) = local_pair(0)?;
    // Orient so the first component plays the column role (size p-1 with
    // p >= q); for p = q the choice is immaterial.
    let (big, small) = if a0 >= b0 { (a0, b0) } else { (b0, a0) };
    let (p, q) = (big + 1, small + 1);
    if q < 2 || p + q != k + 2 || n != p * q {
        return None;
    }
    for v in 1..n {
        let (a, b) = local_pair(v)?;
        if (a.max(b), a.min(b)) != (big, small) {
            return None;
        }
    }

    // Coordinates from vertex 0: its size-(p-1) clique becomes column 0
    // (rows 1..p), its size-(q-1) clique becomes row 0 (columns 1..q).
    let comps = clique_components(g, 0).expect("checked above");
    let (col_mates, row_mates) = if comps[0].len() >= comps[1].len() {
        (&comps[0], &comps[1])
    } else {
        (&comps[1], &comps[0])
    };
    let mut row = vec![usize::MAX; n];
    let mut col = vec![usize::MAX; n];
    row[0] = 0;
    col[0] = 0;
    for (i, &v) in col_mates.iter().enumerate() {
        row[v] = i + 1;
        col[v] = 0;
    }
    for (j, &v) in row_mates.iter().enumerate() {
        row[v] = 0;
        col[v] = j + 1;
    }
    for v in 0..n {
        if row[v] != usize::MAX {
            continue;
        }
        // Interior vertices inherit the row of their unique column-0
        // neighbor and the column of their unique row-0 neighbor.
        let mut r = None;
        let mut c = None;
        for &u in col_mates.iter() {
            if g.has_edge(u, v) && r.replace(row[u]).is_some() {
                return None;
            }
        }
        for &u in row_mates.iter() {
            if g.has_edge(u, v) && c.replace(col[u]).is_some() {
                return None;
            }
        }
        row[v] = r?;
        col[v] = c?;
    }

    let map: Vec<usize> = (0..n).map(|v| row[v] * q + col[v]).collect();
    // The map must be a bijection preserving adjacency both ways.
    let mut seen = vec![false; n];
    for &m in &map {
        if m >= n || seen[m] {
            return None;
        }
        seen[m] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            let same_line = row[u] == row[v] || col[u] == col[v];
            if g.has_edge(u, v) != same_line {
                return None;
            }
        }
    }
    Some(GridIso { p, q, map })
}

/// Splits the local graph of `v` into connected components and checks each
/// is a clique. Returns `None` if any component is incomplete.
fn clique_components(g: &Graph, v: usize) -> Option<Vec<Vec<usize>>> {
    let nbrs = g.neighbors(v);
    let members = nbrs.as_slice();
    let mut comp = vec![usize::MAX; members.len()];
    let mut count = 0;
    for start in 0..members.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = count;
        count += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(i) = stack.pop() {
            for j in 0..members.len() {
                if comp[j] == usize::MAX && g.has_edge(members[i], members[j]) {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (i, &c) in comp.iter().enumerate() {
        comps[c].push(members[i]);
    }
    for c in &comps {
        for (i, &u) in c.iter().enumerate() {
            for &w in &c[i + 1..] {
                if !g.has_edge(u, w) {
                    return None;
                }
            }
        }
    }
    Some(comps)
}

/// Result of factoring a graph as an s-clique extension.
#[derive(Clone, Debug)]
pub enum CliqueExtensionOutcome {
    /// All closed-neighborhood classes share one size `s >= 2`; the
    /// quotient contracts each class to a vertex.
    Extension { s: usize, quotient: Graph },
    /// Class sizes are 1 or mixed; the only extension structure is the
    /// trivial s = 1.
    Trivial,
}

/// Factors `g` as the s-clique extension of a smaller graph by grouping
/// vertices with identical closed neighborhoods. Classes are automatically
/// cliques; a uniform class size `s >= 2` yields the quotient (classes
/// ordered by smallest member). Complete graphs are rejected: every
/// partition of `K_{sn}` into equal cliques is an extension, so the
/// factorization is meaningless there.
pub fn recognize_clique_extension(g: &Graph) -> Result<CliqueExtensionOutcome> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Err(Error::precondition(
            "recognize_clique_extension",
            "complete graphs factor ambiguously",
        ));
    }
    let n = g.n();
    let closed = |v: usize| -> Vec<u64> {
        let mut row = g.row(v).to_vec();
        row[v / 64] |= 1u64 << (v % 64);
        row
    };
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<Vec<u64>> = Vec::new();
    for v in 0..n {
        let key = closed(v);
        match keys.iter().position(|k| *k == key) {
            Some(i) => {
                class_of[v] = i;
                classes[i].push(v);
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vec![v]);
                keys.push(key);
            }
        }
    }
    let s = classes[0].len();
    if s < 2 || classes.iter().any(|c| c.len() != s) {
        return Ok(CliqueExtensionOutcome::Trivial);
    }
    let mut edges = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if g.has_edge(classes[i][0], classes[j][0]) {
                edges.push((i, j));
            }
        }
    }
    let quotient = Graph::from_edge_list(classes.len(), &edges)?;
    // Sanity: rebuilding the extension along class order reproduces g
    // exactly (classes are intervals only up to relabelling, so compare
    // through the class layout).
    debug_assert!({
        let rebuilt = quotient.s_clique_extension(s);
        let mut order = Vec::with_capacity(n);
        for c in &classes {
            order.extend_from_slice(c);
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| rebuilt.has_edge(i, j) == g.has_edge(order[i], order[j]))
        })
    });
    Ok(CliqueExtensionOutcome::Extension { s, quotient })
}

/// Trichotomy for strongly co-edge-regular graphs with c = 2 and no
/// induced quadrangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadrangleTrichotomy {
    HasQuadrangle([usize; 4]),
    TwoCliqueExtensionOfPentagon,
    TwoCliqueExtensionOfPetersen,
    /// Quadrangle-free but not one of the two named extensions. Never
    /// reached when the sum-over-common-neighbors constant satisfies
    /// `ell >= 2k/7`; recorded honestly for inputs outside that range.
    Unresolved,
}

/// Classifies a strongly co-edge-regular graph with c = 2 by quadrangle
/// structure: either it has an induced quadrangle, or it is one of the two
/// exceptional 2-clique extensions (of the pentagon or the Petersen
/// graph), or it falls outside the guaranteed range.
pub fn terwilliger_structure(g: &Graph) -> Result<QuadrangleTrichotomy> {
    let params = match strongly_co_edge_regular_ell(g)? {
        Check::Holds(p) => p,
        Check::Fails(w) => {
            return Err(Error::precondition(
                "terwilliger_structure",
                format!("graph is not strongly co-edge-regular ({})", w.kind()),
            ));
        }
    };
    if params.c != 2 {
        return Err(Error::precondition(
            "terwilliger_structure",
            format!("need c = 2, found c = {}", params.c),
        ));
    }
    if let Some(quad) = has_induced_quadrangle(g) {
        return Ok(QuadrangleTrichotomy::HasQuadrangle(quad));
    }
    if let CliqueExtensionOutcome::Extension { s: 2, quotient } = recognize_clique_extension(g)? {
        if is_isomorphic(&quotient, &Graph::cycle(5)) {
            return Ok(QuadrangleTrichotomy::TwoCliqueExtensionOfPentagon);
        }
        if is_isomorphic(&quotient, &Graph::petersen()) {
            return Ok(QuadrangleTrichotomy::TwoCliqueExtensionOfPetersen);
        }
    }
    Ok(QuadrangleTrichotomy::Unresolved)
}

/// Parameter table of the connected strongly regular graphs with smallest
/// eigenvalue -2 (plus the complete graphs and the pentagon): returns the
/// names of every family matching `(n, k, a, c)`. Some tuples match more
/// than one family; (28,12,6,4) names both the triangular graph T(8) and
/// the Chang graphs.
pub fn minus2_family_parameters(n: usize, k: usize, a: usize, c: usize) -> Vec<String> {
    let mut names = Vec::new();
    if n >= 2 && (k, a, c) == (n - 1, n.saturating_sub(2), 0) {
        names.push(format!("K_{n}"));
    }
    if (n, k, a, c) == (5, 2, 0, 1) {
        names.push("pentagon C5".to_string());
    }
    for m in 5.. {
        if m * (m - 1) / 2 > n {
            break;
        }
        if (m * (m - 1) / 2, 2 * m - 4, m - 2, 4) == (n, k, a, c) {
            names.push(format!("triangular T({m})"));
        }
    }
    for m in 3.. {
        if m * m > n {
            break;
        }
        if (m * m, 2 * m - 2, m - 2, 2) == (n, k, a, c) {
            names.push(format!("{m}x{m} grid"));
        }
    }
    for m in 2.. {
        if 2 * m > n {
            break;
        }
        if (2 * m, 2 * (m - 1), 2 * m.saturating_sub(2), 2 * (m - 1)) == (n, k, a, c) {
            names.push(format!("cocktail party K_{{{m}x2}}"));
        }
    }
    let sporadic: [(usize, usize, usize, usize, &str); 5] = [
        (10, 3, 0, 1, "Petersen"),
        (16, 10, 6, 6, "Clebsch"),
        (27, 16, 10, 8, "Schlafli"),
        (16, 6, 2, 2, "Shrikhande"),
        (28, 12, 6, 4, "Chang"),
    ];
    for (tn, tk, ta, tc, name) in sporadic {
        if (tn, tk, ta, tc) == (n, k, a, c) {
            names.push(name.to_string());
        }
    }
    names
}
