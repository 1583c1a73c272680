//! Regularity hierarchies: regular, co-edge-regular, strongly
//! co-edge-regular, walk-regular, strongly regular, and the local
//! common-neighborhood (Terwilliger) condition, all decided by exhaustive
//! exact counting with explicit witnesses on failure.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roots::{isolate_real_roots, RootInterval};
use crate::spectrum::{char_poly, distinct_eigenvalue_count};
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

/// Outcome of a property check: either the property holds with its
/// associated data, or it fails with a concrete witness.
#[derive(Clone, Debug)]
pub enum Check<T> {
    Holds(T),
    Fails(Witness),
}

impl<T> Check<T> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds(_))
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Check::Holds(v) => Some(v),
            Check::Fails(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Check::Holds(_) => None,
            Check::Fails(w) => Some(w),
        }
    }

    /// Unwraps the success value; panics with the witness otherwise.
    pub fn expect_holds(self, context: &str) -> T {
        match self {
            Check::Holds(v) => v,
            Check::Fails(w) => panic!("{context}: property fails, witness {w:?}"),
        }
    }
}

/// Concrete evidence that a regularity property fails (or, for the
/// structural flags, simply does not apply). Every variant pins down
/// specific vertices so failures are reproducible by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Complete,
    Edgeless,
    NotRegular {
        vertex_a: usize,
        degree_a: usize,
        vertex_b: usize,
        degree_b: usize,
    },
    /// Two non-adjacent pairs with different common neighbor counts.
    NonAdjacentCountMismatch {
        pair_a: (usize, usize),
        count_a: usize,
        pair_b: (usize, usize),
        count_b: usize,
    },
    /// Two adjacent pairs with different common neighbor counts.
    AdjacentCountMismatch {
        pair_a: (usize, usize),
        count_a: usize,
        pair_b: (usize, usize),
        count_b: usize,
    },
    /// Two non-adjacent pairs whose common-neighbor degree sums differ.
    EllMismatch {
        pair_a: (usize, usize),
        sum_a: usize,
        pair_b: (usize, usize),
        sum_b: usize,
    },
    /// Diagonal of a walk power differs between two vertices.
    WalkDiagonalMismatch {
        power: usize,
        vertex_a: usize,
        value_a: BigInt,
        vertex_b: usize,
        value_b: BigInt,
    },
    /// A distance-2 pair whose common neighborhood contains a non-edge.
    CommonNeighborsNotClique {
        pair: (usize, usize),
        non_edge: (usize, usize),
    },
    /// Two distance-2 pairs whose common-neighborhood clique sizes differ.
    CliqueSizeMismatch {
        pair_a: (usize, usize),
        size_a: usize,
        pair_b: (usize, usize),
        size_b: usize,
    },
    Disconnected {
        vertex_a: usize,
        vertex_b: usize,
    },
    /// For reporting only: evidence that a graph is not complete.
    NonAdjacentPair { pair: (usize, usize) },
    /// For reporting only: evidence that a graph has an edge.
    EdgePresent { pair: (usize, usize) },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Complete => "complete",
            Witness::Edgeless => "edgeless",
            Witness::NotRegular { .. } => "not-regular",
            Witness::NonAdjacentCountMismatch { .. } => "non-adjacent-common-count",
            Witness::AdjacentCountMismatch { .. } => "adjacent-common-count",
            Witness::EllMismatch { .. } => "common-neighbor-degree-sum",
            Witness::WalkDiagonalMismatch { .. } => "closed-walk-count",
            Witness::CommonNeighborsNotClique { .. } => "common-neighborhood-not-clique",
            Witness::CliqueSizeMismatch { .. } => "common-neighborhood-size",
            Witness::Disconnected { .. } => "disconnected",
            Witness::NonAdjacentPair { .. } => "non-adjacent-pair",
            Witness::EdgePresent { .. } => "edge-present",
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Witness::Complete | Witness::Edgeless => vec![],
            Witness::NotRegular {
                vertex_a, vertex_b, ..
            } => vec![*vertex_a, *vertex_b],
            Witness::NonAdjacentCountMismatch { pair_a, pair_b, .. }
            | Witness::AdjacentCountMismatch { pair_a, pair_b, .. }
            | Witness::EllMismatch { pair_a, pair_b, .. }
            | Witness::CliqueSizeMismatch { pair_a, pair_b, .. } => {
                vec![pair_a.0, pair_a.1, pair_b.0, pair_b.1]
            }
            Witness::WalkDiagonalMismatch {
                vertex_a, vertex_b, ..
            } => vec![*vertex_a, *vertex_b],
            Witness::CommonNeighborsNotClique { pair, non_edge } => {
                vec![pair.0, pair.1, non_edge.0, non_edge.1]
            }
            Witness::Disconnected { vertex_a, vertex_b } => vec![*vertex_a, *vertex_b],
            Witness::NonAdjacentPair { pair } | Witness::EdgePresent { pair } => {
                vec![pair.0, pair.1]
            }
        }
    }

    pub fn observed(&self) -> String {
        match self {
            Witness::Complete => "every pair of vertices is adjacent".into(),
            Witness::Edgeless => "the graph has no edges".into(),
            Witness::NotRegular {
                vertex_a,
                degree_a,
                vertex_b,
                degree_b,
            } => format!("deg({vertex_a}) = {degree_a}, deg({vertex_b}) = {degree_b}"),
            Witness::NonAdjacentCountMismatch {
                pair_a,
                count_a,
                pair_b,
                count_b,
            }
            | Witness::AdjacentCountMismatch {
                pair_a,
                count_a,
                pair_b,
                count_b,
            } => format!(
                "|N({},{})| = {count_a}, |N({},{})| = {count_b}",
                pair_a.0, pair_a.1, pair_b.0, pair_b.1
            ),
            Witness::EllMismatch {
                pair_a,
                sum_a,
                pair_b,
                sum_b,
            } => format!(
                "sum over common neighbors: ({},{}) gives {sum_a}, ({},{}) gives {sum_b}",
                pair_a.0, pair_a.1, pair_b.0, pair_b.1
            ),
            Witness::WalkDiagonalMismatch {
                power,
                vertex_a,
                value_a,
                vertex_b,
                value_b,
            } =>

                format!("(A^{power})[{vertex_a},{vertex_a}] = {value_a}, (A^{power})[{vertex_b},{vertex_b}] = {value_b}"),
            Witness::CommonNeighborsNotClique { pair, non_edge } => format!(
                "common neighbors {} and {} of ({},{}) are non-adjacent",
                non_edge.0, non_edge.1, pair.0, pair.1
            ),
            Witness::CliqueSizeMismatch {
                pair_a,
                size_a,
                pair_b,
                size_b,
            } => format!(
                "common neighborhood sizes: ({},{}) gives {size_a}, ({},{}) gives {size_b}",
                pair_a.0, pair_a.1, pair_b.0, pair_b.1
            ),
            Witness::Disconnected { vertex_a, vertex_b } => {
                format!("no path between {vertex_a} and {vertex_b}")
            }
            Witness::NonAdjacentPair { pair } => {
                format!("vertices {} and {} are non-adjacent", pair.0, pair.1)
            }
            Witness::EdgePresent { pair } => {
                format!("vertices {} and {} are adjacent", pair.0, pair.1)
            }
        }
    }

    pub fn expected(&self) -> String {
        match self {
            Witness::Complete => "at least one non-adjacent pair".into(),
            Witness::Edgeless => "at least one edge".into(),
            Witness::NotRegular { .. } => "all degrees equal".into(),
            Witness::NonAdjacentCountMismatch { .. } => {
                "constant common neighbor count over non-adjacent pairs".into()
            }
            Witness::AdjacentCountMismatch { .. } => {
                "constant common neighbor count over adjacent pairs".into()
            }
            Witness::EllMismatch { .. } => {
                "constant common-neighbor degree sum over non-adjacent pairs".into()
            }
            Witness::WalkDiagonalMismatch { .. } => "constant diagonal".into(),
            Witness::CommonNeighborsNotClique { .. } => {
                "common neighborhoods of distance-2 pairs induce cliques".into()
            }
            Witness::CliqueSizeMismatch { .. } => "one common clique size".into(),
            Witness::Disconnected { .. } => "a connected graph".into(),
            Witness::NonAdjacentPair { .. } => "(structural note, not a failure)".into(),
            Witness::EdgePresent { .. } => "(structural note, not a failure)".into(),
        }
    }
}

/// Co-edge-regularity parameters: `k`-regular on `n` vertices, every
/// non-adjacent pair with exactly `c` common neighbors, neither complete nor
/// edgeless.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoEdgeParams {
    pub n: usize,
    pub k: usize,
    pub c: usize,
}

/// Adds the constant non-adjacent degree sum `ell` to the co-edge data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StronglyCoEdgeParams {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub ell: usize,
}

/// Strong regularity parameters `(n, k, a, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

fn not_regular_witness(g: &Graph) -> Option<Witness> {
    let degrees = g.degrees();
    let d0 = degrees[0];
    degrees[1..]
        .iter()
        .position(|&d| d != d0)
        .map(|i| Witness::NotRegular {
            vertex_a: 0,
            degree_a: d0,
            vertex_b: i + 1,
            degree_b: degrees[i + 1],
        })
}

/// All-pairs common neighbor counts (the square of the adjacency matrix off
/// the diagonal).
fn common_counts(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut m = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in x + 1..n {
            let c = g.common_neighbor_count(x, y).expect("x != y in range");
            m[x][y] = c;
            m[y][x] = c;
        }
    }
    m
}

/// Decides co-edge-regularity. Complete and edgeless graphs are reported as
/// their own failure kinds: the defining condition is vacuous or degenerate
/// there and treating them as parameterized successes has caused downstream
/// classification bugs.
pub fn co_edge_regular_params(g: &Graph) -> Result<Check<CoEdgeParams>> {
    require_nonempty(g)?;
    if g.is_complete() {
        return Ok(Check::Fails(Witness::Complete));
    }
    if g.is_edgeless() {
        return Ok(Check::Fails(Witness::Edgeless));
    }
    if let Some(w) = not_regular_witness(g) {
        return Ok(Check::Fails(w));
    }
    let k = g.degree(0);
    let mut first: Option<((usize, usize), usize)> = None;
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if g.has_edge(x, y) {
                continue;
            }
            let c = g.common_neighbor_count(x, y)?;
            match first {
                None => first = Some(((x, y), c)),
                Some((pair_a, count_a)) if count_a != c => {
                    return Ok(Check::Fails(Witness::NonAdjacentCountMismatch {
                        pair_a,
                        count_a,
                        pair_b: (x, y),
                        count_b: c,
                    }));
                }
                Some(_) => {}
            }
        }
    }
    let ((_, _), c) = first.expect("non-complete graphs have a non-adjacent pair");
    Ok(Check::Holds(CoEdgeParams { n: g.n(), k, c }))
}

/// Decides strong co-edge-regularity: on top of co-edge-regularity, the sum
/// of `a_xy = |N(x) ∩ N(y)|` over the common neighbors `y` of each ordered
/// non-adjacent pair `(x, z)` must be one constant `ell`.
pub fn strongly_co_edge_regular_ell(g: &Graph) -> Result<Check<StronglyCoEdgeParams>> {
    let params = match co_edge_regular_params(g)? {
        Check::Holds(p) => p,
        Check::Fails(w) => return Ok(Check::Fails(w)),
    };
    let counts = common_counts(g);
    let mut first: Option<((usize, usize), usize)> = None;
    for x in 0..g.n() {
        for z in 0..g.n() {
            if x == z || g.has_edge(x, z) {
                continue;
            }
            let sum: usize = g
                .common_neighbors(x, z)?
                .iter()
                .map(|y| counts[x][y])
                .sum();
            match first {
                None => first = Some(((x, z), sum)),
                Some((pair_a, sum_a)) if sum_a != sum => {
                    return Ok(Check::Fails(Witness::EllMismatch {
                        pair_a,
                        sum_a,
                        pair_b: (x, z),
                        sum_b: sum,
                    }));
                }
                Some(_) => {}
            }
        }
    }
    let ell = first.expect("non-complete graphs have a non-adjacent pair").1;
    Ok(Check::Holds(StronglyCoEdgeParams {
        n: params.n,
        k: params.k,
        c: params.c,
        ell,
    }))
}

/// Decides walk-regularity: the diagonal of `A^r` must be constant for
/// every `r`. It suffices to check `r` up to one less than the number of
/// distinct eigenvalues: the minimal polynomial of a symmetric matrix is the
/// squarefree part of its characteristic polynomial, so all higher powers
/// are linear combinations of the checked ones.
pub fn is_walk_regular(g: &Graph) -> Result<Check<()>> {
    require_nonempty(g)?;
    let d = distinct_eigenvalue_count(g)?;
    // r = 0, 1 are always constant (all-ones and zero diagonals).
    if d <= 2 {
        return Ok(Check::Holds(()));
    }
    // r = 2: the diagonal is the degree sequence.
    if let Some(Witness::NotRegular {
        vertex_a,
        degree_a,
        vertex_b,
        degree_b,
    }) = not_regular_witness(g)
    {
        return Ok(Check::Fails(Witness::WalkDiagonalMismatch {
            power: 2,
            vertex_a,
            value_a: BigInt::from(degree_a),
            vertex_b,
            value_b: BigInt::from(degree_b),
        }));
    }
    if d == 3 {
        return Ok(Check::Holds(()));
    }
    // r = 3: (A^3)_xx is the sum of common neighbor counts over N(x).
    let counts = common_counts(g);
    let closed3 = |x: usize| -> usize { g.neighbors_iter(x).map(|y| counts[x][y]).sum() };
    let c0 = closed3(0);
    for x in 1..g.n() {
        let cx = closed3(x);
        if cx != c0 {
            return Ok(Check::Fails(Witness::WalkDiagonalMismatch {
                power: 3,
                vertex_a: 0,
                value_a: BigInt::from(c0),
                vertex_b: x,
                value_b: BigInt::from(cx),
            }));
        }
    }
    if d == 4 {
        return Ok(Check::Holds(()));
    }
    // r >= 4: walk the powers explicitly. Multiplication from the right by
    // the adjacency matrix touches only neighbor columns, so each step is
    // O(n^2 * max_degree).
    let n = g.n();
    let mut power: Vec<Vec<BigInt>> = (0..n)
        .map(|x| (0..n).map(|y| BigInt::from(counts[x][y])).collect())
        .collect();
    for (x, row) in power.iter_mut().enumerate() {
        row[x] = BigInt::from(g.degree(x));
    }
    let mut r = 2;
    while r + 1 < d {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (x, next_row) in next.iter_mut().enumerate() {
            for (j, cell) in next_row.iter_mut().enumerate() {
                for y in g.neighbors_iter(j) {
                    *cell += &power[x][y];
                }
            }
        }
        power = next;
        r += 1;
        let v0 = power[0][0].clone();
        for x in 1..n {
            if power[x][x] != v0 {
                return Ok(Check::Fails(Witness::WalkDiagonalMismatch {
                    power: r,
                    vertex_a: 0,
                    value_a: v0,
                    vertex_b: x,
                    value_b: power[x][x].clone(),
                }));
            }
        }
    }
    Ok(Check::Holds(()))
}

/// Decides strong regularity `(n, k, a, c)`: constant common neighbor count
/// over edges and over non-edges, complete and edgeless excluded.
pub fn strongly_regular_params(g: &Graph) -> Result<Check<SrgParams>> {
    require_nonempty(g)?;
    if g.is_complete() {
        return Ok(Check::Fails(Witness::Complete));
    }
    if g.is_edgeless() {
        return Ok(Check::Fails(Witness::Edgeless));
    }
    if let Some(w) = not_regular_witness(g) {
        return Ok(Check::Fails(w));
    }
    let k = g.degree(0);
    let mut first_adj: Option<((usize, usize), usize)> = None;
    let mut first_non: Option<((usize, usize), usize)> = None;
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let count = g.common_neighbor_count(x, y)?;
            let slot = if g.has_edge(x, y) {
                &mut first_adj
            } else {
                &mut first_non
            };
            match *slot {
                None => *slot = Some(((x, y), count)),
                Some((pair_a, count_a)) if count_a != count => {
                    let w = if g.has_edge(x, y) {
                        Witness::AdjacentCountMismatch {
                            pair_a,
                            count_a,
                            pair_b: (x, y),
                            count_b: count,
                        }
                    } else {
                        Witness::NonAdjacentCountMismatch {
                            pair_a,
                            count_a,
                            pair_b: (x, y),
                            count_b: count,
                        }
                    };
                    return Ok(Check::Fails(w));
                }
                Some(_) => {}
            }
        }
    }
    let a = first_adj.expect("non-edgeless").1;
    let c = first_non.expect("non-complete").1;
    Ok(Check::Holds(SrgParams { n: g.n(), k, a, c }))
}

/// The two restricted eigenvalues of a strongly regular graph with their
/// multiplicities. Both are roots of `x^2 - (a-c)x - (k-c)`; they are
/// integers unless the parameters form a conference graph, in which case the
/// multiplicities coincide.
#[derive(Clone, Debug)]
pub struct SrgEigenData {
    pub theta: RootInterval,
    pub tau: RootInterval,
    pub m_theta: usize,
    pub m_tau: usize,
    pub conference: bool,
}

/// Computes eigenvalues and multiplicities from strongly regular parameters
/// alone, rejecting tuples that fail the counting identity
/// `k(k-a-1) = (n-k-1)c` or force non-integral multiplicities.
pub fn srg_eigen_data(n: usize, k: usize, a: usize, c: usize) -> Result<SrgEigenData> {
    let infeasible = |reason: &str| Error::InfeasibleSrgParameters {
        n,
        k,
        a,
        c,
        reason: reason.to_string(),
    };
    if n < 2 || k == 0 || k >= n - 1 {
        return Err(infeasible("need 0 < k < n-1 (neither complete nor edgeless)"));
    }
    if a >= k || c > k {
        return Err(infeasible("need a <= k-1 and c <= k"));
    }
    if k * (k - a - 1) != (n - k - 1) * c {
        return Err(infeasible("counting identity k(k-a-1) = (n-k-1)c fails"));
    }

    let amc = a as i64 - c as i64;
    let disc = (amc * amc + 4 * (k as i64 - c as i64)) as u64;
    // disc = (a-c)^2 + 4(k-c) >= (a-c)^2 + 4 > 0 given k > c would be needed;
    // k = c is possible (complete multipartite), still disc >= (a-c)^2 >= 0.
    let quad = ExactQuadratic::new(amc, k as i64 - c as i64);
    let s = 2 * k as i64 + (n as i64 - 1) * amc;

    if s == 0 {
        // Equal multiplicities; eigenvalues need not be rational.
        if (n - 1) % 2 != 0 {
            return Err(infeasible("equal multiplicities require odd n"));
        }
        let m = (n - 1) / 2;
        let conference = n == 4 * c + 1 && k == 2 * c && c >= 1 && a + 1 == c;
        let (tau, theta) = quad.roots();
        return Ok(SrgEigenData {
            theta,
            tau,
            m_theta: m,
            m_tau: m,
            conference,
        });
    }

    let u = disc.sqrt();
    if u * u != disc {
        return Err(infeasible(
            "irrational restricted eigenvalues require equal multiplicities",
        ));
    }
    let u = u as i64;
    if s % u != 0 {
        return Err(infeasible("multiplicity difference (2k+(n-1)(a-c))/sqrt(disc) is not an integer"));
    }
    // m_tau - m_theta = s / u and m_theta + m_tau = n - 1.
    let diff = s / u;
    let total = n as i64 - 1;
    if (total - diff) % 2 != 0 {
        return Err(infeasible("multiplicities are not integers"));
    }
    let m_theta = (total - diff) / 2;
    let m_tau = (total + diff) / 2;
    if m_theta < 0 || m_tau < 0 {
        return Err(infeasible("negative multiplicity"));
    }
    let (tau, theta) = quad.roots();
    // Exact trace identity: k + m_theta*theta + m_tau*tau = 0.
    let (theta_i, tau_i) = ((amc + u) / 2, (amc - u) / 2);
    debug_assert!(theta.is_rational(&BigRational::from(BigInt::from(theta_i))));
    let trace = k as i64 + m_theta * theta_i + m_tau * tau_i;
    if trace != 0 {
        return Err(infeasible("trace identity k + m_theta*theta + m_tau*tau = 0 fails"));
    }
    Ok(SrgEigenData {
        theta,
        tau,
        m_theta: m_theta as usize,
        m_tau: m_tau as usize,
        conference: false,
    })
}

/// The monic quadratic `x^2 - (a-c)x - (k-c)` whose roots are the restricted
/// eigenvalues.
struct ExactQuadratic {
    poly: crate::poly::ExactPolynomial,
}

impl ExactQuadratic {
    fn new(amc: i64, kmc: i64) -> Self {
        ExactQuadratic {
            poly: crate::poly::ExactPolynomial::from_i64_coeffs(&[-kmc, -amc, 1]),
        }
    }

    /// Roots in ascending order `(tau, theta)`.
    fn roots(&self) -> (RootInterval, RootInterval) {
        let mut roots = isolate_real_roots(&self.poly, None);
        assert_eq!(roots.len(), 2, "restricted eigenvalue quadratic has two real roots");
        let theta = roots.pop().unwrap();
        let tau = roots.pop().unwrap();
        (tau, theta)
    }
}

/// The cubic with the three non-principal distinct eigenvalues as roots,
/// shared by the spectral `ell` computations. Requires connected, regular,
/// exactly four distinct eigenvalues.
fn non_principal_cubic(g: &Graph, op: &'static str) -> Result<(ExactCubicData, usize)> {
    require_nonempty(g)?;
    let Some(k) = g.regular_degree() else {
        return Err(Error::precondition(op, "graph must be regular"));
    };
    if !g.is_connected() {
        return Err(Error::precondition(op, "graph must be connected"));
    }
    let sf = char_poly(g)?.squarefree_part();
    let d = sf.degree().unwrap();
    if d != 4 {
        return Err(Error::precondition(
            op,
            format!("graph must have exactly 4 distinct eigenvalues, found {d}"),
        ));
    }
    let cubic = sf
        .div_exact(&crate::poly::ExactPolynomial::x_minus(&BigInt::from(k)))
        .expect("the degree of a connected regular graph is a simple eigenvalue");
    let sum_theta = -cubic.coeff(2);
    let prod_k_minus_theta = cubic.evaluate(&BigInt::from(k));
    Ok((
        ExactCubicData {
            sum_theta,
            prod_k_minus_theta,
        },
        k,
    ))
}

struct ExactCubicData {
    sum_theta: BigInt,
    prod_k_minus_theta: BigInt,
}

/// Predicts the strong co-edge-regularity constant from the spectrum: for a
/// connected regular graph with four distinct eigenvalues and non-adjacent
/// common neighbor count `c`,
/// `ell = (sum of the three non-principal eigenvalues) * c
///        + (product of (k - eigenvalue)) / n - (k - c) * c`,
/// returned as an exact rational.
pub fn ell_from_spectrum(g: &Graph, c: usize) -> Result<BigRational> {
    let (cubic, k) = non_principal_cubic(g, "ell_from_spectrum")?;
    let n = BigInt::from(g.n());
    let cb = BigInt::from(c);
    let kb = BigInt::from(k);
    let value = BigRational::from(&cubic.sum_theta * &cb)
        + BigRational::new(cubic.prod_k_minus_theta, n)
        - BigRational::from((&kb - &cb) * &cb);
    Ok(value)
}

/// The same spectral quantity specialized to `c = 2`, in the algebraic form
/// used by the classification of grids:
/// `2*(sum of eigenvalues) + (product of (k - eigenvalue))/n - 2(k-2)`.
/// Identical to `ell_from_spectrum(g, 2)`; both are exposed because the
/// pipeline cross-checks one against the other.
pub fn theorem12_ell(g: &Graph) -> Result<BigRational> {
    let (cubic, k) = non_principal_cubic(g, "theorem12_ell")?;
    let n = BigInt::from(g.n());
    let value = BigRational::from(BigInt::from(2) * &cubic.sum_theta)
        + BigRational::new(cubic.prod_k_minus_theta, n)
        - BigRational::from(BigInt::from(2) * (BigInt::from(k) - BigInt::from(2)));
    Ok(value)
}

/// Data for the local common-neighborhood condition: every distance-2 pair's
/// common neighborhood induces a clique, all of one size `c`. `c` is `None`
/// when no distance-2 pair exists (the condition holds vacuously).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TerwilligerData {
    pub c: Option<usize>,
}

/// Checks the common-neighborhood clique condition over all distance-2
/// pairs. Rejects complete graphs: there the condition is meaningless.
pub fn is_terwilliger(g: &Graph) -> Result<Check<TerwilligerData>> {
    require_nonempty(g)?;
    if g.is_complete() {
        return Err(Error::precondition(
            "is_terwilliger",
            "complete graphs have no distance-2 pairs by definition",
        ));
    }
    let mut size: Option<((usize, usize), usize)> = None;
    for x in 0..g.n() {
        for z in x + 1..g.n() {
            if g.has_edge(x, z) {
                continue;
            }
            let common = g.common_neighbors(x, z)?;
            if common.is_empty() {
                // Distance > 2: not constrained.
                continue;
            }
            let members = common.as_slice();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Ok(Check::Fails(Witness::CommonNeighborsNotClique {
                            pair: (x, z),
                            non_edge: (u, v),
                        }));
                    }
                }
            }
            match size {
                None => size = Some(((x, z), common.len())),
                Some((pair_a, size_a)) if size_a != common.len() => {
                    return Ok(Check::Fails(Witness::CliqueSizeMismatch {
                        pair_a,
                        size_a,
                        pair_b: (x, z),
                        size_b: common.len(),
                    }));
                }
                Some(_) => {}
            }
        }
    }
    Ok(Check::Holds(TerwilligerData {
        c: size.map(|(_, s)| s),
    }))
}

/// Closed-walk moment identities for a co-edge-regular graph, verified at
/// every vertex against direct combinatorial counts:
///
/// * `(A^3)_xx = sum of a_xy over neighbors y of x`
/// * `(A^4)_xx = k^2 + sum of a_xy^2 over neighbors + (n-k-1) c^2`
///
/// For walk-regular inputs the two neighbor sums must additionally be
/// vertex-independent; their common values are reported.
#[derive(Clone, Debug)]
pub struct MomentReport {
    pub cube_identity: bool,
    pub fourth_identity: bool,
    /// `Some` iff the input is walk-regular.
    pub sums_constant: Option<bool>,
    pub sum_a: Option<BigInt>,
    pub sum_a_squared: Option<BigInt>,
}

impl MomentReport {
    pub fn holds(&self) -> bool {
        self.cube_identity && self.fourth_identity && self.sums_constant != Some(false)
    }
}

pub fn moment_identities(g: &Graph) -> Result<MomentReport> {
    let params = match co_edge_regular_params(g)? {
        Check::Holds(p) => p,
        Check::Fails(w) => {
            return Err(Error::precondition(
                "moment_identities",
                format!("graph is not co-edge-regular ({})", w.kind()),
            ));
        }
    };
    let (n, k) = (params.n, params.k);
    let counts = common_counts(g);

    // Exact closed-walk counts via small dense powers; entries stay tiny.
    let a2 = {
        let mut m = vec![vec![0i64; n]; n];
        for x in 0..n {
            for y in 0..n {
                m[x][y] = if x == y {
                    g.degree(x) as i64
                } else {
                    counts[x][y] as i64
                };
            }
        }
        m
    };
    let diag3 = |x: usize| -> i64 { g.neighbors_iter(x).map(|y| a2[x][y]).sum() };
    let diag4 = |x: usize| -> i64 { (0..n).map(|y| a2[x][y] * a2[x][y]).sum() };

    let mut cube_identity = true;
    let mut fourth_identity = true;
    let mut sums: Vec<(i64, i64)> = Vec::with_capacity(n);
    for x in 0..n {
        let sum_a: i64 = g.neighbors_iter(x).map(|y| counts[x][y] as i64).sum();
        let sum_a2: i64 = g
            .neighbors_iter(x)
            .map(|y| (counts[x][y] * counts[x][y]) as i64)
            .sum();
        sums.push((sum_a, sum_a2));
        if diag3(x) != sum_a {
            cube_identity = false;
        }
        let expected4 =
            (k * k) as i64 + sum_a2 + ((n - k - 1) * params.c * params.c) as i64;
        if diag4(x) != expected4 {
            fourth_identity = false;
        }
    }

    let walk_regular = is_walk_regular(g)?.holds();
    let constant = sums.iter().all(|&s| s == sums[0]);
    Ok(MomentReport {
        cube_identity,
        fourth_identity,
        sums_constant: walk_regular.then_some(constant),
        sum_a: (walk_regular && constant).then(|| BigInt::from(sums[0].0)),
        sum_a_squared: (walk_regular && constant).then(|| BigInt::from(sums[0].1)),
    })
}

/// Flattened witness for reports: machine-readable kind plus human-readable
/// observation.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub flag: String,
    pub kind: String,
    pub vertices: Vec<usize>,
    pub observed: String,
    pub expected: String,
}

impl WitnessRecord {
    fn from(flag: &str, w: &Witness) -> Self {
        WitnessRecord {
            flag: flag.to_string(),
            kind: w.kind().to_string(),
            vertices: w.vertices(),
            observed: w.observed(),
            expected: w.expected(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct RegularityFlags {
    pub regular: bool,
    pub co_edge_regular: bool,
    pub strongly_co_edge_regular: bool,
    pub walk_regular: bool,
    pub strongly_regular: bool,
    pub terwilliger: bool,
    pub complete: bool,
    pub empty: bool,
    pub connected: bool,
}

/// One-stop summary of every regularity class, with parameters present
/// exactly for the properties that hold and a witness recorded for every
/// property that fails.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub n: usize,
    pub k: Option<usize>,
    pub c: Option<usize>,
    pub ell: Option<usize>,
    pub a: Option<usize>,
    pub flags: RegularityFlags,
    pub witnesses: Vec<WitnessRecord>,
}

pub fn analyze(g: &Graph) -> Result<RegularityReport> {
    require_nonempty(g)?;
    let mut flags = RegularityFlags::default();
    let mut witnesses = Vec::new();
    let n = g.n();

    flags.complete = g.is_complete();
    if !flags.complete {
        let pair = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| !g.has_edge(x, y))
            .expect("non-complete graph has a non-adjacent pair");
        witnesses.push(WitnessRecord::from("complete", &Witness::NonAdjacentPair { pair }));
    }
    flags.empty = g.is_edgeless();
    if !flags.empty {
        let pair = g.edges()[0];
        witnesses.push(WitnessRecord::from("empty", &Witness::EdgePresent { pair }));
    }
    flags.connected = g.is_connected();
    if !flags.connected {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for u in g.neighbors_iter(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        let other = seen.iter().position(|&s| !s).expect("disconnected");
        witnesses.push(WitnessRecord::from(
            "connected",
            &Witness::Disconnected {
                vertex_a: 0,
                vertex_b: other,
            },
        ));
    }

    let k = g.regular_degree();
    flags.regular = k.is_some();
    if let Some(w) = not_regular_witness(g) {
        witnesses.push(WitnessRecord::from("regular", &w));
    }

    let mut c = None;
    match co_edge_regular_params(g)? {
        Check::Holds(p) => {
            flags.co_edge_regular = true;
            c = Some(p.c);
        }
        Check::Fails(w) => witnesses.push(WitnessRecord::from("co_edge_regular", &w)),
    }

    let mut ell = None;
    match strongly_co_edge_regular_ell(g)? {
        Check::Holds(p) => {
            flags.strongly_co_edge_regular = true;
            ell = Some(p.ell);
        }
        Check::Fails(w) => witnesses.push(WitnessRecord::from("strongly_co_edge_regular", &w)),
    }

    match is_walk_regular(g)? {
        Check::Holds(()) => flags.walk_regular = true,
        Check::Fails(w) => witnesses.push(WitnessRecord::from("walk_regular", &w)),
    }

    let mut a = None;
    match strongly_regular_params(g)? {
        Check::Holds(p) => {
            flags.strongly_regular = true;
            a = Some(p.a);
        }
        Check::Fails(w) => witnesses.push(WitnessRecord::from("strongly_regular", &w)),
    }

    if flags.complete {
        witnesses.push(WitnessRecord::from("terwilliger", &Witness::Complete));
    } else {
        match is_terwilliger(g)? {
            Check::Holds(_) => flags.terwilliger = true,
            Check::Fails(w) => witnesses.push(WitnessRecord::from("terwilliger", &w)),
        }
    }

    Ok(RegularityReport {
        n,
        k,
        c,
        ell,
        a,
        flags,
        witnesses,
    })
}
