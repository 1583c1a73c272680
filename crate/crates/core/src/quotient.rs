//! Vertex partitions, equitable refinement, and quotient matrices.
//!
//! A partition is equitable when every vertex of a cell has the same number
//! of neighbors in every cell; the resulting quotient matrix has the key
//! property that its spectrum is a sub(multi)set of the graph's. These
//! quotients drive both eigenvalue bounds and the cone constructions used to
//! rule parameter windows out.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::ExactPolynomial;
use crate::spectrum::{char_poly, char_poly_dense};
use num_bigint::BigInt;

/// An ordered partition of `0..n` into nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<VertexSet>,
    membership: Vec<usize>,
}

impl Partition {
    /// Validates that the cells are nonempty, disjoint, and cover `0..n`.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut membership = vec![usize::MAX; n];
        let mut sets = Vec::with_capacity(cells.len());
        for (ci, cell) in cells.into_iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition {
                    reason: format!("cell {ci} is empty"),
                });
            }
            let set = VertexSet::new(cell, n).map_err(|e| Error::InvalidPartition {
                reason: e.to_string(),
            })?;
            for v in set.iter() {
                if membership[v] != usize::MAX {
                    return Err(Error::InvalidPartition {
                        reason: format!("vertex {v} appears in two cells"),
                    });
                }
                membership[v] = ci;
            }
            sets.push(set);
        }
        if let Some(v) = membership.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition {
                reason: format!("vertex {v} is not covered"),
            });
        }
        Ok(Partition {
            n,
            cells: sets,
            membership,
        })
    }

    /// The single-cell partition.
    pub fn unit(n: usize) -> Self {
        Partition::new(n, vec![(0..n).collect()]).expect("unit partition is valid")
    }

    /// The all-singletons partition.
    pub fn discrete(n: usize) -> Self {
        Partition::new(n, (0..n).map(|v| vec![v]).collect()).expect("discrete partition is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.membership[v]
    }
}

/// Witness that a partition is not equitable: two vertices of the same cell
/// with different neighbor counts into some target cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotEquitableWitness {
    pub cell: usize,
    pub vertex_a: usize,
    pub vertex_b: usize,
    pub target_cell: usize,
    pub count_a: usize,
    pub count_b: usize,
}

/// Quotient matrix of an equitable partition: entry `(i,j)` is the number of
/// neighbors every vertex of cell `i` has in cell `j`.
#[derive(Clone, Debug)]
pub struct QuotientMatrix {
    partition: Partition,
    entries: Vec<Vec<i64>>,
}

impl QuotientMatrix {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Exact characteristic polynomial of the (small, dense) quotient.
    pub fn char_poly(&self) -> ExactPolynomial {
        let mat: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        char_poly_dense(&mat)
    }
}

/// Either the quotient matrix of an equitable partition or a witness to the
/// failure of equitability.
#[derive(Clone, Debug)]
pub enum QuotientOutcome {
    Equitable(QuotientMatrix),
    NotEquitable(NotEquitableWitness),
}

fn cell_masks(g: &Graph, partition: &Partition) -> Vec<Vec<u64>> {
    let words = g.n().div_ceil(64).max(1);
    partition
        .cells()
        .iter()
        .map(|cell| {
            let mut mask = vec![0u64; words];
            for v in cell.iter() {
                mask[v / 64] |= 1 << (v % 64);
            }
            mask
        })
        .collect()
}

fn count_into(g: &Graph, v: usize, mask: &[u64]) -> usize {
    g.row(v)
        .iter()
        .zip(mask)
        .map(|(a, b)| (a & b).count_ones() as usize)
        .sum()
}

/// Computes the quotient matrix when the partition is equitable for `g`, or
/// returns the first witness against equitability (scanning cells in order,
/// vertices in ascending order within each cell).
pub fn quotient_matrix(g: &Graph, partition: &Partition) -> Result<QuotientOutcome> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if partition.n() != g.n() {
        return Err(Error::InvalidPartition {
            reason: format!(
                "partition covers {} vertices but the graph has {}",
                partition.n(),
                g.n()
            ),
        });
    }
    let masks = cell_masks(g, partition);
    let mut entries = Vec::with_capacity(partition.cell_count());
    for (ci, cell) in partition.cells().iter().enumerate() {
        let first = cell.iter().next().expect("cells are nonempty");
        let reference: Vec<usize> = masks.iter().map(|m| count_into(g, first, m)).collect();
        for v in cell.iter().skip(1) {
            for (tj, mask) in masks.iter().enumerate() {
                let cv = count_into(g, v, mask);
                if cv != reference[tj] {
                    return Ok(QuotientOutcome::NotEquitable(NotEquitableWitness {
                        cell: ci,
                        vertex_a: first,
                        vertex_b: v,
                        target_cell: tj,
                        count_a: reference[tj],
                        count_b: cv,
                    }));
                }
            }
        }
        entries.push(reference.iter().map(|&c| c as i64).collect());
    }
    Ok(QuotientOutcome::Equitable(QuotientMatrix {
        partition: partition.clone(),
        entries,
    }))
}

/// Coarsest equitable partition refining the given one, by iterated degree
/// refinement: vertices are regrouped by (current cell, neighbor counts into
/// every current cell) until stable.
///
/// Cell order is deterministic: groups sort by the original cell index
/// first, then by the count vector lexicographically; this keeps quotient
/// matrices reproducible across runs.
pub fn coarsest_equitable_refinement(g: &Graph, initial: &Partition) -> Result<Partition> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if initial.n() != g.n() {
        return Err(Error::InvalidPartition {
            reason: format!(
                "partition covers {} vertices but the graph has {}",
                initial.n(),
                g.n()
            ),
        });
    }
    let mut current = initial.clone();
    loop {
        let masks = cell_masks(g, &current);
        let mut signatures: Vec<(Vec<usize>, usize)> = (0..g.n())
            .map(|v| {
                let mut sig = Vec::with_capacity(masks.len() + 1);
                sig.push(current.cell_of(v));
                sig.extend(masks.iter().map(|m| count_into(g, v, m)));
                (sig, v)
            })
            .collect();
        signatures.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut last: Option<&[usize]> = None;
        for (sig, v) in &signatures {
            if last != Some(sig.as_slice()) {
                cells.push(Vec::new());
                last = Some(sig.as_slice());
            }
            cells.last_mut().unwrap().push(*v);
        }
        let next = Partition::new(g.n(), cells).expect("refinement yields a valid partition");
        if next.cell_count() == current.cell_count() {
            debug_assert!(matches!(
                quotient_matrix(g, &next),
                Ok(QuotientOutcome::Equitable(_))
            ));
            return Ok(next);
        }
        current = next;
    }
}

/// Verifies that every eigenvalue of the quotient matrix is an eigenvalue of
/// the graph, by testing that the squarefree part of the quotient's
/// characteristic polynomial divides the graph's. True for every equitable
/// quotient; exposed as a checkable fact rather than assumed.
pub fn quotient_spectrum_subset(q: &QuotientMatrix, g: &Graph) -> Result<bool> {
    let cq = q.char_poly().squarefree_part();
    let cg = char_poly(g)?;
    Ok(cq.divides(&cg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![2], vec![]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert_eq!(Partition::unit(5).cell_count(), 1);
        assert_eq!(Partition::discrete(5).cell_count(), 5);
        assert_eq!(Partition::unit(5).cell_of(3), 0);
    }

    #[test]
    fn non_equitable_partition_yields_witness() {
        let g = path3();
        let outcome = quotient_matrix(&g, &Partition::unit(3)).unwrap();
        let QuotientOutcome::NotEquitable(w) = outcome else {
            panic!("unit partition of a path is not equitable");
        };
        assert_eq!(w.cell, 0);
        assert_eq!((w.vertex_a, w.vertex_b), (0, 1));
        assert_eq!((w.count_a, w.count_b), (1, 2));
    }

    #[test]
    fn distance_partition_of_petersen_is_equitable() {
        let g = Graph::petersen();
        let n0: Vec<usize> = g.neighbors_iter(0).collect();
        let rest: Vec<usize> = (1..10).filter(|v| !n0.contains(v)).collect();
        let p = Partition::new(10, vec![vec![0], n0, rest]).unwrap();
        let QuotientOutcome::Equitable(q) = quotient_matrix(&g, &p).unwrap() else {
            panic!("distance partition of a distance-regular graph is equitable");
        };
        assert_eq!(
            q.entries(),
            &[vec![0, 3, 0], vec![1, 0, 2], vec![0, 1, 2]]
        );
        // Quotient eigenvalues {3, 1, -2} are exactly the distinct
        // eigenvalues of the Petersen graph.
        assert_eq!(
            q.char_poly(),
            ExactPolynomial::from_i64_coeffs(&[6, -5, -2, 1])
        );
        assert!(quotient_spectrum_subset(&q, &g).unwrap());
    }

    #[test]
    fn refinement_of_path_splits_by_degree() {
        let g = path3();
        let p = coarsest_equitable_refinement(&g, &Partition::unit(3)).unwrap();
        assert_eq!(p.cell_count(), 2);
        assert_eq!(p.cells()[0].as_slice(), &[0, 2]);
        assert_eq!(p.cells()[1].as_slice(), &[1]);
        assert!(matches!(
            quotient_matrix(&g, &p).unwrap(),
            QuotientOutcome::Equitable(_)
        ));
    }

    #[test]
    fn refinement_is_trivial_on_vertex_transitive_graphs() {
        for g in [Graph::petersen(), Graph::grid(3, 3), Graph::cycle(6)] {
            let p = coarsest_equitable_refinement(&g, &Partition::unit(g.n())).unwrap();
            assert_eq!(p.cell_count(), 1, "{g:?}");
        }
    }

    #[test]
    fn refinement_from_individualized_vertex() {
        let g = Graph::grid(4, 3);
        let init = Partition::new(12, vec![vec![0], (1..12).collect()]).unwrap();
        let p = coarsest_equitable_refinement(&g, &init).unwrap();
        // Cells: {0}, its row, its column, everything else; the row cell
        // (2 vertices... actually q-1=2) and column cell (p-1=3) separate
        // because their counts back into {0} and sizes differ.
        assert_eq!(p.cell_count(), 4);
        let QuotientOutcome::Equitable(q) = quotient_matrix(&g, &p).unwrap() else {
            panic!("coarsest equitable refinement must be equitable");
        };
        assert!(quotient_spectrum_subset(&q, &g).unwrap());
        // Deterministic: running it again gives the identical partition.
        let p2 = coarsest_equitable_refinement(&g, &init).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn cone_over_two_cliques_quotient() {
        // Cone over 2K_2 + 3K_1, positional cells: clique vertices, isolated
        // vertices, apex.
        let g = crate::graph::cone_two_cliques(2, 3);
        let p = Partition::new(
            8,
            vec![vec![0, 1, 2, 3], vec![4, 5, 6], vec![7]],
        )
        .unwrap();
        let QuotientOutcome::Equitable(q) = quotient_matrix(&g, &p).unwrap() else {
            panic!("positional partition of the cone is equitable");
        };
        assert_eq!(q.entries(), &[vec![1, 0, 1], vec![0, 0, 1], vec![4, 3, 0]]);
        // det(Q + 3I) = -(s+2)(t-3) + 12 = 12 at (s,t) = (2,3).
        let mat: Vec<Vec<BigInt>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| BigInt::from(q.entries()[i][j] + if i == j { 3 } else { 0 }))
                    .collect()
            })
            .collect();
        assert_eq!(crate::spectrum::det_integer(&mat), BigInt::from(12));
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let g = Graph::complete(4);
        let p = Partition::unit(3);
        assert!(quotient_matrix(&g, &p).is_err());
        assert!(coarsest_equitable_refinement(&g, &p).is_err());
    }
}
