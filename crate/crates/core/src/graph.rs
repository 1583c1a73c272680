//! Undirected simple graphs as packed adjacency bit matrices, plus the graph
//! families and combinators the rest of the crate builds on.

use crate::error::{Error, Result};
use std::fmt;

/// A sorted set of vertex indices, used for neighborhoods, cliques, partition
/// cells, and witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds a set from arbitrary indices, sorting and deduplicating, and
    /// rejecting indices outside `0..n`.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(VertexSet { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An undirected simple graph on vertices `0..n`, stored as a symmetric
/// adjacency bit matrix with one row of `u64` words per vertex.
///
/// Equality and hashing compare the adjacency bits only; the optional label is
/// a display aid and never influences structure.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.edge_count())?;
        if let Some(label) = &self.label {
            write!(f, ", {label}")?;
        }
        write!(f, ")")
    }
}

impl Graph {
    fn words_for(n: usize) -> usize {
        n.div_ceil(64).max(1)
    }

    /// The edgeless graph on `n` vertices. `n` may be zero only for internal
    /// construction; public operations reject empty graphs at their entry.
    pub fn empty(n: usize) -> Self {
        let words_per_row = Self::words_for(n);
        Graph {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            label: None,
        }
    }

    /// Builds a graph from an explicit edge list, rejecting out-of-range
    /// endpoints and self-loops. Duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::IdenticalVertices { vertex: u });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words_per_row;
        self.bits[u * w + v / 64] |= 1u64 << (v % 64);
        self.bits[v * w + u / 64] |= 1u64 << (u % 64);
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors_iter(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn neighbors_iter(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_sorted(self.neighbors_iter(v).collect())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// The set of common neighbors of two distinct vertices. Asking for a
    /// vertex against itself is rejected: that count is a degree, not an
    /// edge or non-edge statistic, and silently conflating them has caused
    /// real bugs in parameter checks.
    pub fn common_neighbors(&self, x: usize, y: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::IdenticalVertices { vertex: x });
        }
        let merged: Vec<usize> = BitIter::new_and(self.row(x), self.row(y)).collect();
        Ok(VertexSet::from_sorted(merged))
    }

    /// `|N(x) ∩ N(y)|` for distinct vertices, without materializing the set.
    pub fn common_neighbor_count(&self, x: usize, y: usize) -> Result<usize> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::IdenticalVertices { vertex: x });
        }
        Ok(self
            .row(x)
            .iter()
            .zip(self.row(y))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let w = self.words_per_row;
        let mut seen = vec![0u64; w];
        seen[0] = 1;
        let mut frontier = vec![0usize; 1];
        while let Some(v) = frontier.pop() {
            for u in self.neighbors_iter(v) {
                if seen[u / 64] >> (u % 64) & 1 == 0 {
                    seen[u / 64] |= 1 << (u % 64);
                    frontier.push(u);
                }
            }
        }
        let count: u32 = seen.iter().map(|x| x.count_ones()).sum();
        count as usize == self.n
    }

    // ----- families -----

    pub fn complete(m: usize) -> Self {
        assert!(m >= 1, "complete graph needs at least one vertex");
        let mut g = Graph::empty(m);
        for u in 0..m {
            for v in u + 1..m {
                g.add_edge(u, v);
            }
        }
        g.with_label(format!("K_{m}"))
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "cycle needs at least three vertices");
        let mut g = Graph::empty(m);
        for v in 0..m {
            g.add_edge(v, (v + 1) % m);
        }
        g.with_label(format!("C_{m}"))
    }

    /// Complete bipartite graph with parts `{0..p}` and `{p..p+q}`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        assert!(p >= 1 && q >= 1, "both parts must be nonempty");
        let mut g = Graph::empty(p + q);
        for u in 0..p {
            for v in p..p + q {
                g.add_edge(u, v);
            }
        }
        g.with_label(format!("K_{{{p},{q}}}"))
    }

    /// The cocktail party graph `K_{m x 2}`: `2m` vertices where `2t` and
    /// `2t+1` form the non-adjacent pairs.
    pub fn cocktail_party(m: usize) -> Self {
        assert!(m >= 1, "cocktail party graph needs at least one pair");
        let n = 2 * m;
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if u / 2 != v / 2 {
                    g.add_edge(u, v);
                }
            }
        }
        g.with_label(format!("K_{{{m}x2}}"))
    }

    /// The triangular graph `T(m)`: vertices are the 2-subsets of an `m`-set
    /// in lexicographic order, adjacent when they share an element. This is
    /// the line graph of `K_m` with the same vertex order.
    pub fn triangular(m: usize) -> Self {
        assert!(m >= 4, "triangular graph is defined here for m >= 4");
        Graph::complete(m)
            .line_graph()
            .with_label(format!("T({m})"))
    }

    /// The Petersen graph as the Kneser graph on 2-subsets of a 5-set:
    /// vertices in lexicographic order, adjacent when disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let mut g = Graph::empty(10);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                if a != c && a != d && b != c && b != d {
                    g.add_edge(i, j);
                }
            }
        }
        g.with_label("Petersen")
    }

    /// The Shrikhande graph as a Cayley graph on `Z4 x Z4` with connection
    /// set `{±(1,0), ±(0,1), ±(1,1)}`; vertex `(a,b)` has index `4a+b`.
    pub fn shrikhande() -> Self {
        let idx = |a: usize, b: usize| 4 * (a % 4) + (b % 4);
        let mut g = Graph::empty(16);
        for a in 0..4 {
            for b in 0..4 {
                let v = idx(a, b);
                for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                    g.add_edge(v, idx(a + da, b + db));
                }
            }
        }
        g.with_label("Shrikhande")
    }

    /// The `p x q` grid (rook's) graph: vertex `(r,c)` has index `r*q + c`,
    /// and two vertices are adjacent when they share a row or a column.
    /// Same bits as `cartesian_product(K_p, K_q)`.
    pub fn grid(p: usize, q: usize) -> Self {
        assert!(p >= 1 && q >= 1, "grid needs at least one row and column");
        Graph::complete(p)
            .cartesian_product(&Graph::complete(q))
            .with_label(format!("{p}x{q} grid"))
    }

    // ----- combinators -----

    /// Replaces every vertex by a clique of size `s`; copies of adjacent
    /// vertices are completely joined. Copy `j` of vertex `i` has index
    /// `i*s + j`. With `s = 1` this is the identity up to relabelling.
    pub fn s_clique_extension(&self, s: usize) -> Self {
        assert!(s >= 1, "clique extension needs s >= 1");
        let n = self.n * s;
        let mut g = Graph::empty(n);
        for i in 0..self.n {
            for j in 0..s {
                let u = i * s + j;
                for j2 in j + 1..s {
                    g.add_edge(u, i * s + j2);
                }
                for i2 in self.neighbors_iter(i) {
                    if i2 > i {
                        for j2 in 0..s {
                            g.add_edge(u, i2 * s + j2);
                        }
                    }
                }
            }
        }
        match &self.label {
            Some(l) => g.with_label(format!("{s}-clique ext of {l}")),
            None => g,
        }
    }

    /// Adds a dominating apex vertex with index `n`.
    pub fn cone(&self) -> Self {
        let n = self.n + 1;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for v in 0..self.n {
            g.add_edge(v, self.n);
        }
        match &self.label {
            Some(l) => g.with_label(format!("cone of {l}")),
            None => g,
        }
    }

    pub fn complement(&self) -> Self {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Cartesian product; vertex `(u,v)` has index `u * other.n + v`, and
    /// `(u,v) ~ (u',v')` when one coordinate is equal and the other adjacent.
    pub fn cartesian_product(&self, other: &Graph) -> Self {
        let n = self.n * other.n;
        let mut g = Graph::empty(n);
        let idx = |u: usize, v: usize| u * other.n + v;
        for u in 0..self.n {
            for (v, v2) in other.edges() {
                g.add_edge(idx(u, v), idx(u, v2));
            }
        }
        for (u, u2) in self.edges() {
            for v in 0..other.n {
                g.add_edge(idx(u, v), idx(u2, v));
            }
        }
        g
    }

    /// Line graph: one vertex per edge of `self`, edges listed in
    /// lexicographic order, adjacent when the underlying edges share an
    /// endpoint.
    pub fn line_graph(&self) -> Self {
        let edges = self.edges();
        let mut g = Graph::empty(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on the given vertices; vertex `i` of the result is
    /// the `i`-th smallest member of the set.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> Result<Self> {
        if let Some(v) = vs.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let members = vs.as_slice();
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The local graph at `x`: the subgraph induced on the neighbors of `x`.
    pub fn local_graph(&self, x: usize) -> Result<Self> {
        self.check_vertex(x)?;
        self.induced_subgraph(&self.neighbors(x))
    }
}

/// Iterator over set bit positions of a packed row, ascending.
pub struct BitIter<'a> {
    words: &'a [u64],
    second: Option<&'a [u64]>,
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            second: None,
            word_idx: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }

    /// Iterates over the bitwise AND of two rows without allocating.
    fn new_and(a: &'a [u64], b: &'a [u64]) -> Self {
        BitIter {
            words: a,
            second: Some(b),
            word_idx: 0,
            current: if a.is_empty() { 0 } else { a[0] & b[0] },
        }
    }

    fn load(&self, i: usize) -> u64 {
        match self.second {
            Some(b) => self.words[i] & b[i],
            None => self.words[i],
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.load(self.word_idx);
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// Parameters accepted by [`named_family`]; each family reads the fields it
/// needs and rejects missing or out-of-range values.
#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub m: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
}

/// Constructs a graph family by name with validated parameters. This is the
/// entry point the command-line `construct` subcommand maps onto.
///
/// Recognized names: `complete`, `cycle`, `complete-bipartite`,
/// `cocktail-party`, `triangular`, `petersen`, `shrikhande`, `grid`,
/// `ext-c5`, `ext-petersen`, `cone-two-cliques`.
pub fn named_family(name: &str, params: &FamilyParams) -> Result<Graph> {
    let invalid = |reason: &str| Error::InvalidFamilyParams {
        family: name.to_string(),
        reason: reason.to_string(),
    };
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| invalid(&format!("missing {what}")));
    match name {
        "complete" => {
            let m = need(params.m, "m")?;
            if m < 1 {
                return Err(invalid("m must be >= 1"));
            }
            Ok(Graph::complete(m))
        }
        "cycle" => {
            let m = need(params.m, "m")?;
            if m < 3 {
                return Err(invalid("m must be >= 3"));
            }
            Ok(Graph::cycle(m))
        }
        "complete-bipartite" => {
            let p = need(params.p, "p")?;
            let q = need(params.q, "q")?;
            if p < 1 || q < 1 {
                return Err(invalid("p and q must be >= 1"));
            }
            Ok(Graph::complete_bipartite(p, q))
        }
        "cocktail-party" => {
            let m = need(params.m, "m")?;
            if m < 1 {
                return Err(invalid("m must be >= 1"));
            }
            Ok(Graph::cocktail_party(m))
        }
        "triangular" => {
            let m = need(params.m, "m")?;
            if m < 4 {
                return Err(invalid("m must be >= 4"));
            }
            Ok(Graph::triangular(m))
        }
        "petersen" => Ok(Graph::petersen()),
        "shrikhande" => Ok(Graph::shrikhande()),
        "grid" => {
            let p = need(params.p, "p")?;
            let q = need(params.q, "q")?;
            if p < 1 || q < 1 {
                return Err(invalid("p and q must be >= 1"));
            }
            Ok(Graph::grid(p, q))
        }
        "ext-c5" => {
            let s = need(params.s, "s")?;
            if s < 1 {
                return Err(invalid("s must be >= 1"));
            }
            Ok(Graph::cycle(5).s_clique_extension(s))
        }
        "ext-petersen" => {
            let s = need(params.s, "s")?;
            if s < 1 {
                return Err(invalid("s must be >= 1"));
            }
            Ok(Graph::petersen().s_clique_extension(s))
        }
        "cone-two-cliques" => {
            // Cone over the disjoint union of two s-cliques and t isolated
            // vertices; apex last.
            let s = need(params.s, "s")?;
            let t = need(params.t, "t")?;
            if s < 1 {
                return Err(invalid("s must be >= 1"));
            }
            Ok(cone_two_cliques(s, t))
        }
        _ => Err(Error::UnknownFamily {
            name: name.to_string(),
        }),
    }
}

/// The cone over `2K_s ∪ tK_1`: two disjoint `s`-cliques, then `t` isolated
/// vertices, then the apex at index `2s + t`.
pub fn cone_two_cliques(s: usize, t: usize) -> Graph {
    assert!(s >= 1);
    Graph::complete(s)
        .disjoint_union(&Graph::complete(s))
        .disjoint_union(&Graph::empty(t))
        .cone()
        .with_label(format!("cone over 2K_{s} + {t}K_1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_cycle_counts() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.n(), 5);
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.regular_degree(), Some(4));
        assert!(k5.is_complete());

        let c7 = Graph::cycle(7);
        assert_eq!(c7.edge_count(), 7);
        assert_eq!(c7.regular_degree(), Some(2));
        assert!(c7.is_connected());
    }

    #[test]
    fn bipartite_and_cocktail_party_degrees() {
        let g = Graph::complete_bipartite(3, 4);
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(6), 3);
        assert_eq!(g.edge_count(), 12);

        let cp = Graph::cocktail_party(4);
        assert_eq!(cp.n(), 8);
        assert_eq!(cp.regular_degree(), Some(6));
        assert!(!cp.has_edge(2, 3));
        assert!(cp.has_edge(2, 4));
    }

    #[test]
    fn petersen_is_the_kneser_graph() {
        let p = Graph::petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        // Kneser adjacency is triangle-free: any two adjacent pairs of a
        // 5-set leave only one element for a third mutually disjoint pair.
        for u in 0..10 {
            for v in u + 1..10 {
                if p.has_edge(u, v) {
                    assert_eq!(p.common_neighbor_count(u, v).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn triangular_5_is_petersen_complement() {
        // T(5) pairs up with the Petersen graph under complementation, with
        // the identical 2-subset vertex order on both sides.
        assert_eq!(Graph::triangular(5), Graph::petersen().complement());
    }

    #[test]
    fn shrikhande_basic_parameters() {
        let g = Graph::shrikhande();
        assert_eq!(g.n(), 16);
        assert_eq!(g.regular_degree(), Some(6));
        assert_eq!(g.edge_count(), 48);
        for u in 0..16 {
            for v in u + 1..16 {
                let common = g.common_neighbor_count(u, v).unwrap();
                assert_eq!(common, 2, "({u},{v})");
            }
        }
    }

    #[test]
    fn grid_matches_cartesian_product_of_completes() {
        let g = Graph::grid(5, 3);
        assert_eq!(g, Graph::complete(5).cartesian_product(&Graph::complete(3)));
        assert_eq!(g.regular_degree(), Some(5 + 3 - 2));
        // Row-major indexing: vertex (r,c) = 3r + c.
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn grid_edge_common_neighbor_counts() {
        let g = Graph::grid(4, 3);
        // Two vertices in a common row see the rest of that row (q-2) as
        // common neighbors; a common column gives p-2.
        assert_eq!(g.common_neighbor_count(0, 1).unwrap(), 1);
        assert_eq!(g.common_neighbor_count(0, 3).unwrap(), 2);
        // Non-adjacent vertices always have exactly two.
        assert_eq!(g.common_neighbor_count(0, 4).unwrap(), 2);
    }

    #[test]
    fn clique_extension_indexing_and_degrees() {
        let g = Graph::cycle(5).s_clique_extension(2);
        assert_eq!(g.n(), 10);
        assert_eq!(g.regular_degree(), Some(5));
        // Copies of vertex 0 are adjacent to each other...
        assert!(g.has_edge(0, 1));
        // ...and to both copies of its cycle neighbors 1 and 4.
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3));
        assert!(g.has_edge(1, 8) && g.has_edge(1, 9));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn one_clique_extension_is_identity() {
        let g = Graph::petersen();
        assert_eq!(g.s_clique_extension(1), g);
    }

    #[test]
    fn cone_adds_dominating_apex_last() {
        let g = Graph::cycle(4).cone();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn complement_is_an_involution() {
        for g in [
            Graph::petersen(),
            Graph::grid(3, 4),
            Graph::from_edge_list(6, &[(0, 3), (1, 4), (2, 5), (0, 5)]).unwrap(),
        ] {
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn line_graph_of_complete_is_triangular() {
        let lg = Graph::complete(6).line_graph();
        assert_eq!(lg, Graph::triangular(6));
        assert_eq!(lg.n(), 15);
        assert_eq!(lg.regular_degree(), Some(8));
    }

    #[test]
    fn line_graph_of_complete_bipartite_is_grid() {
        // Edges of K_{p,q} in lexicographic order are exactly the row-major
        // cells of the grid.
        let lg = Graph::complete_bipartite(4, 3).line_graph();
        assert_eq!(lg, Graph::grid(4, 3));
    }

    #[test]
    fn induced_subgraph_and_local_graph() {
        let g = Graph::grid(4, 3);
        let local = g.local_graph(0).unwrap();
        // Neighbors of a grid vertex split into a row clique and a column
        // clique with no edges between them.
        assert_eq!(local.n(), 5);
        assert_eq!(local.edge_count(), 1 + 3);
        assert!(!local.is_connected());

        let vs = VertexSet::new(vec![0, 1, 2], 12).unwrap();
        let row = g.induced_subgraph(&vs).unwrap();
        assert!(row.is_complete());
    }

    #[test]
    fn common_neighbors_rejects_identical_vertices() {
        let g = Graph::petersen();
        assert!(matches!(
            g.common_neighbors(3, 3),
            Err(Error::IdenticalVertices { vertex: 3 })
        ));
        assert!(g.common_neighbor_count(0, 11).is_err());
    }

    #[test]
    fn connectivity_detects_disjoint_union() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(4));
        assert!(!g.is_connected());
        assert!(g.cone().is_connected());
    }

    #[test]
    fn named_family_dispatch_and_validation() {
        let g = named_family(
            "grid",
            &FamilyParams {
                p: Some(4),
                q: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(g, Graph::grid(4, 3));

        assert!(matches!(
            named_family("grid", &FamilyParams::default()),
            Err(Error::InvalidFamilyParams { .. })
        ));
        assert!(matches!(
            named_family("moebius", &FamilyParams::default()),
            Err(Error::UnknownFamily { .. })
        ));

        let cone = named_family(
            "cone-two-cliques",
            &FamilyParams {
                s: Some(2),
                t: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(cone.n(), 8);
        assert_eq!(cone.degree(7), 7);
    }

    #[test]
    fn from_edge_list_validates_and_dedupes() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(Graph::from_edge_list(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edge_list(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn neighbor_iteration_crosses_word_boundaries() {
        let n = 130;
        let g = Graph::cycle(n);
        let nb: Vec<usize> = g.neighbors_iter(0).collect();
        assert_eq!(nb, vec![1, 129]);
        let nb: Vec<usize> = g.neighbors_iter(64).collect();
        assert_eq!(nb, vec![63, 65]);
    }
}
