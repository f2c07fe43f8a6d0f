//! Genus of 3-coloured residues under the canonical embedding.
//!
//! With the rotation `(i,j,k)` around white vertices and `(i,k,j)` around
//! black ones, the faces of the embedded residue are exactly its bicoloured
//! cycles, so the genus follows from Euler's formula.

use crate::colours::ColourSet;
use crate::graph::{ColourfulGraph, GraphError};
use crate::residues::residues_unchecked;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedResidue {
    pub component: Vec<usize>,
    pub colours: [usize; 3],
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

impl EmbeddedResidue {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }

    pub fn min_vertex(&self) -> usize {
        self.component[0]
    }
}

/// Cycles alternating colours `a` and `b` that pass through the given whites.
fn bicoloured_cycles(g: &ColourfulGraph, a: usize, b: usize, whites: &[usize]) -> usize {
    let mut seen = vec![false; g.half()];
    let mut cycles = 0;
    for &start in whites {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut w = start;
        while !seen[w] {
            seen[w] = true;
            w = g.white_of(b, g.black_of(a, w));
        }
    }
    cycles
}

fn three_colours(colours: ColourSet) -> Option<[usize; 3]> {
    let v: Vec<usize> = colours.iter().collect();
    (v.len() == 3).then(|| [v[0], v[1], v[2]])
}

/// Embeds the component of `G_I` (with `|I| = 3`) and computes its genus.
pub fn genus_of_residue(
    g: &ColourfulGraph,
    colours: ColourSet,
    component: &[usize],
) -> Result<EmbeddedResidue, GraphError> {
    g.check_colours(colours)?;
    let [i, j, k] = three_colours(colours).ok_or(GraphError::InvalidColourSet {
        colour: colours.len(),
        max: 3,
    })?;
    let mut comp = component.to_vec();
    comp.sort_unstable();
    comp.dedup();
    if comp.is_empty() || comp.last().copied().unwrap_or(0) >= g.n() {
        return Err(GraphError::NotAComponent);
    }
    let partition = residues_unchecked(g, colours);
    let idx = partition.component_of(comp[0]);
    if partition.components()[idx] != comp {
        return Err(GraphError::NotAComponent);
    }
    Ok(embed(g, [i, j, k], comp))
}

fn embed(g: &ColourfulGraph, colours: [usize; 3], component: Vec<usize>) -> EmbeddedResidue {
    let [i, j, k] = colours;
    let whites: Vec<usize> = component.iter().copied().filter(|&v| g.is_white(v)).collect();
    let vertices = component.len();
    let edges = 3 * vertices / 2;
    let faces = bicoloured_cycles(g, i, j, &whites)
        + bicoloured_cycles(g, i, k, &whites)
        + bicoloured_cycles(g, j, k, &whites);
    let chi = vertices as i64 - edges as i64 + faces as i64;
    debug_assert!(chi <= 2 && chi % 2 == 0, "orientable surface Euler characteristic");
    EmbeddedResidue {
        component,
        colours,
        vertices,
        edges,
        faces,
        genus: ((2 - chi) / 2) as usize,
    }
}

/// Every component of `G_I`, embedded.
pub fn embedded_residues(g: &ColourfulGraph, colours: ColourSet) -> Result<Vec<EmbeddedResidue>, GraphError> {
    g.check_colours(colours)?;
    let triple = three_colours(colours).ok_or(GraphError::InvalidColourSet {
        colour: colours.len(),
        max: 3,
    })?;
    let partition = residues_unchecked(g, colours);
    Ok(partition
        .components()
        .iter()
        .map(|c| embed(g, triple, c.clone()))
        .collect())
}

/// First 3-residue (over colour triples in increasing bitmask order, then
/// components by smallest vertex) with positive genus.
pub fn find_nonplanar_residue(g: &ColourfulGraph) -> Option<EmbeddedResidue> {
    g.colours()
        .subsets_of_size(3)
        .flat_map(|i| embedded_residues(g, i).expect("valid colours"))
        .find(|r| r.genus > 0)
}

/// Whether every 3-coloured residue is planar in its canonical embedding.
/// Vacuously true when `d < 2`.
pub fn has_property_p(g: &ColourfulGraph) -> bool {
    find_nonplanar_residue(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> ColourfulGraph {
        ColourfulGraph::from_matchings(2, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap()
    }

    #[test]
    fn dipole_residues_are_spheres() {
        let g = ColourfulGraph::dipole(3);
        for i in g.colours().subsets_of_size(3) {
            let r = genus_of_residue(&g, i, &[0, 1]).unwrap();
            assert_eq!((r.vertices, r.edges, r.faces, r.genus), (2, 3, 3, 0));
        }
        assert!(has_property_p(&g));
    }

    #[test]
    fn torus_has_genus_one() {
        let g = torus();
        let r = genus_of_residue(&g, g.colours(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!((r.vertices, r.edges, r.faces, r.genus), (6, 9, 3, 1));
        assert!(!has_property_p(&g));
        assert_eq!(find_nonplanar_residue(&g).unwrap().genus, 1);
    }

    #[test]
    fn rejects_non_components() {
        let g = torus();
        assert_eq!(
            genus_of_residue(&g, g.colours(), &[0, 3]),
            Err(GraphError::NotAComponent)
        );
        assert!(genus_of_residue(&g, ColourSet::from_colours([1, 2]), &[0]).is_err());
    }
}
