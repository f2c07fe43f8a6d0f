//! Rational homology of `X(G_I)` through the order complex of its face poset.
//!
//! Every closed cell of a coloured triangulation is an embedded simplex, so
//! the order complex of the face poset is the barycentric subdivision and
//! has the same homology.

use std::collections::HashMap;

use crate::colours::ColourSet;
use crate::graph::ColourfulGraph;
use crate::residues::{residues_unchecked, ResiduePartition};

use super::linalg;

/// A cell of `X(G_I)`: the component `component` of `G_residue`, carrying the
/// vertex colours `colours = I \ residue`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub colours: ColourSet,
    pub residue: ColourSet,
    pub component: usize,
    pub min_vertex: usize,
}

impl Cell {
    pub fn dimension(&self) -> usize {
        self.colours.len() - 1
    }
}

/// Sparse integer matrix stored by columns; column `j` is the boundary of
/// the `j`-th simplex of the higher dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

#[derive(Debug, Clone)]
pub struct OrderComplex {
    colours: ColourSet,
    cells: Vec<Cell>,
    /// `simplices[k]` lists the `k`-simplices as chains of cell ids, from the
    /// lowest-dimensional cell up.
    simplices: Vec<Vec<Vec<u32>>>,
    /// `boundaries[k]` is `∂_{k+1}: C_{k+1} → C_k`.
    boundaries: Vec<BoundaryMatrix>,
}

impl OrderComplex {
    /// Builds the order complex of the face poset of `X(G_I)`.
    pub fn new(g: &ColourfulGraph, colours: ColourSet) -> Self {
        assert!(!colours.is_empty(), "order complex needs at least one colour");
        assert!(
            colours.is_subset(g.colours()),
            "colour set {colours} exceeds 1..={}",
            g.d() + 1
        );
        let mut partitions: HashMap<u32, ResiduePartition> = HashMap::new();
        let mut cells = Vec::new();
        for residue in colours.subsets().filter(|&j| j != colours) {
            let p = residues_unchecked(g, residue);
            for (ci, comp) in p.components().iter().enumerate() {
                cells.push(Cell {
                    colours: colours.difference(residue),
                    residue,
                    component: ci,
                    min_vertex: comp[0],
                });
            }
            partitions.insert(residue.bits(), p);
        }
        cells.sort_by_key(|c| (c.colours.len(), c.min_vertex, c.colours.bits()));
        let mut cell_id: HashMap<(u32, usize), u32> = HashMap::new();
        for (id, c) in cells.iter().enumerate() {
            cell_id.insert((c.residue.bits(), c.component), id as u32);
        }
        let lookup = |face_colours: ColourSet, vertex: usize| -> u32 {
            let residue = colours.difference(face_colours);
            let comp = partitions[&residue.bits()].component_of(vertex);
            cell_id[&(residue.bits(), comp)]
        };

        let top = colours.len() - 1;
        let mut simplices: Vec<Vec<Vec<u32>>> = vec![Vec::new(); top + 1];
        for (id, cell) in cells.iter().enumerate() {
            // All chains of nonempty colour sets ending at this cell's set.
            let mut stack: Vec<Vec<ColourSet>> = vec![vec![cell.colours]];
            while let Some(chain) = stack.pop() {
                let lowest = chain[chain.len() - 1];
                let ids: Vec<u32> = chain
                    .iter()
                    .rev()
                    .map(|&s| lookup(s, cell.min_vertex))
                    .collect();
                debug_assert_eq!(ids[ids.len() - 1], id as u32);
                simplices[ids.len() - 1].push(ids);
                for sub in lowest.subsets().filter(|s| !s.is_empty() && *s != lowest) {
                    let mut next = chain.clone();
                    next.push(sub);
                    stack.push(next);
                }
            }
        }
        for level in simplices.iter_mut() {
            level.sort_unstable();
        }

        let mut boundaries = Vec::with_capacity(top);
        for k in 1..=top {
            let index: HashMap<&[u32], usize> = simplices[k - 1]
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect();
            let columns = simplices[k]
                .iter()
                .map(|s| {
                    let mut col: Vec<(usize, i64)> = (0..s.len())
                        .map(|omit| {
                            let face: Vec<u32> = s
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != omit)
                                .map(|(_, &x)| x)
                                .collect();
                            let sign = if omit % 2 == 0 { 1 } else { -1 };
                            (index[face.as_slice()], sign)
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            boundaries.push(BoundaryMatrix {
                rows: simplices[k - 1].len(),
                columns,
            });
        }
        OrderComplex {
            colours,
            cells,
            simplices,
            boundaries,
        }
    }

    pub fn colours(&self) -> ColourSet {
        self.colours
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, k: usize) -> &[Vec<u32>] {
        &self.simplices[k]
    }

    /// Number of simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// `∂_k`, for `1 <= k <= dimension`.
    pub fn boundary(&self, k: usize) -> &BoundaryMatrix {
        &self.boundaries[k - 1]
    }

    /// Checks `∂_k ∘ ∂_{k+1} = 0` for every `k`.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (1..self.dimension()).all(|k| {
            let lower = self.boundary(k);
            self.boundary(k + 1).columns.iter().all(|col| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(face, s) in col {
                    for &(row, t) in &lower.columns[face] {
                        *acc.entry(row).or_default() += s * t;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }

    fn betti_with(&self, rank: fn(&[Vec<(usize, i64)>]) -> usize) -> BettiVector {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| rank(&b.columns)).collect();
        let betti = (0..=self.dimension())
            .map(|k| {
                let dim = self.simplices[k].len();
                let into = if k == 0 { 0 } else { ranks[k - 1] };
                let out = ranks.get(k).copied().unwrap_or(0);
                dim - into - out
            })
            .collect();
        BettiVector(betti)
    }
}

/// Rational Betti numbers `b_0 ..= b_top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// `(1, 0, ..., 0, 1)` of the given dimension (`(2)` for dimension 0).
    pub fn sphere(dimension: usize) -> Self {
        if dimension == 0 {
            return BettiVector(vec![2]);
        }
        let mut v = vec![0; dimension + 1];
        v[0] = 1;
        v[dimension] = 1;
        BettiVector(v)
    }

    pub fn is_sphere(&self) -> bool {
        !self.0.is_empty() && *self == BettiVector::sphere(self.0.len() - 1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl std::fmt::Display for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Betti numbers over the rationals, by exact elimination.
pub fn betti_numbers(k: &OrderComplex) -> BettiVector {
    assert!(k.boundary_squares_to_zero(), "boundary of boundary is not zero");
    k.betti_with(linalg::rank_exact)
}

/// Betti numbers over `Z/(2^31-1)`. Each entry is an upper bound for the
/// rational Betti number.
pub fn betti_numbers_mod_p(k: &OrderComplex) -> BettiVector {
    k.betti_with(linalg::rank_mod_p)
}

/// Rational Betti numbers of `X(G_I)`, using the modular computation when
/// it already certifies a sphere and exact elimination otherwise.
pub fn betti_fast(g: &ColourfulGraph, colours: ColourSet) -> BettiVector {
    let k = OrderComplex::new(g, colours);
    let fast = betti_numbers_mod_p(&k);
    // Rational ranks dominate modular ones, so a modular sphere vector is
    // already the rational answer.
    if fast.is_sphere() {
        fast
    } else {
        betti_numbers(&k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> ColourfulGraph {
        ColourfulGraph::from_matchings(2, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap()
    }

    #[test]
    fn dipole_order_complex() {
        let g = ColourfulGraph::dipole(3);
        let k = OrderComplex::new(&g, g.colours());
        assert_eq!(k.cells().len(), 16);
        assert_eq!(k.f_vector()[3], 48);
        assert!(k.boundary_squares_to_zero());
        assert_eq!(betti_numbers(&k), BettiVector(vec![1, 0, 0, 1]));
    }

    #[test]
    fn torus_homology() {
        let g = torus();
        let k = OrderComplex::new(&g, g.colours());
        assert_eq!(betti_numbers(&k), BettiVector(vec![1, 2, 1]));
        assert_eq!(betti_numbers_mod_p(&k), BettiVector(vec![1, 2, 1]));
        assert_eq!(betti_fast(&g, g.colours()), BettiVector(vec![1, 2, 1]));
    }

    #[test]
    fn two_coloured_cycle_is_a_circle() {
        let g = torus();
        let k = OrderComplex::new(&g, ColourSet::from_colours([1, 2]));
        assert_eq!(betti_numbers(&k), BettiVector(vec![1, 1]));
    }

    #[test]
    fn disjoint_dipoles() {
        let g = ColourfulGraph::from_matchings(3, vec![vec![0, 1]; 4]).unwrap();
        let k = OrderComplex::new(&g, g.colours());
        assert_eq!(betti_numbers(&k), BettiVector(vec![2, 0, 0, 2]));
    }

    #[test]
    fn single_colour_gives_pairs_of_points() {
        let g = torus();
        let k = OrderComplex::new(&g, ColourSet::single(2));
        assert_eq!(betti_numbers(&k), BettiVector(vec![6]));
    }
}
