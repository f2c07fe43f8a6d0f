//! Residues (connected components of colour-restricted subgraphs) and the
//! component-count table built from them.

use crate::colours::ColourSet;
use crate::graph::{ColourfulGraph, GraphError};
use crate::union_find::UnionFind;

/// The connected components of `G_I`, ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    colours: ColourSet,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl ResiduePartition {
    pub fn colours(&self) -> ColourSet {
        self.colours
    }

    /// Vertex sets, each sorted ascending.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Components of the subgraph keeping only edges with colours in `colours`.
pub fn residues(g: &ColourfulGraph, colours: ColourSet) -> Result<ResiduePartition, GraphError> {
    g.check_colours(colours)?;
    Ok(residues_unchecked(g, colours))
}

pub(crate) fn residues_unchecked(g: &ColourfulGraph, colours: ColourSet) -> ResiduePartition {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    for c in colours.iter() {
        for (w, &b) in g.matching(c).iter().enumerate() {
            uf.union(w, g.half() + b);
        }
    }
    let mut root_index = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut component_of = vec![0; n];
    for v in 0..n {
        let r = uf.find(v);
        if root_index[r] == usize::MAX {
            root_index[r] = components.len();
            components.push(Vec::new());
        }
        component_of[v] = root_index[r];
        components[root_index[r]].push(v);
    }
    ResiduePartition {
        colours,
        components,
        component_of,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KappaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("r = {r} is outside 0..={max}")]
    RangeError { r: usize, max: usize },
}

/// `κ_J` for every colour subset `J` of `1..=d+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaTable {
    d: usize,
    n: usize,
    kappa: Vec<usize>,
}

impl KappaTable {
    pub fn new(g: &ColourfulGraph) -> Self {
        let full = g.colours();
        let mut kappa = vec![0; 1 << full.len()];
        for j in full.subsets() {
            kappa[j.bits() as usize] = g.component_count(j);
        }
        KappaTable {
            d: g.d(),
            n: g.n(),
            kappa,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `κ_J`. Panics if `J` holds a colour above `d+1`.
    pub fn get(&self, j: ColourSet) -> usize {
        self.kappa[j.bits() as usize]
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        self.get(ColourSet::from_colours([i, j]))
    }

    pub fn triple(&self, i: usize, j: usize, k: usize) -> usize {
        self.get(ColourSet::from_colours([i, j, k]))
    }

    /// `κ^(r)_I`: the sum of `κ_J` over the `r`-element subsets `J ⊆ I`.
    pub fn kappa_r(&self, i: ColourSet, r: usize) -> Result<usize, KappaError> {
        if let Some(c) = i.max_colour().filter(|&c| c > self.d + 1) {
            return Err(GraphError::InvalidColourSet {
                colour: c,
                max: self.d + 1,
            }
            .into());
        }
        if r > i.len() {
            return Err(KappaError::RangeError { r, max: i.len() });
        }
        Ok(i.subsets_of_size(r).map(|j| self.get(j)).sum())
    }

    /// Cell counts of `X(G_I)` by dimension: entry `s` is the number of
    /// `s`-dimensional cells, which is `κ^(|I|-1-s)_I`.
    pub fn f_vector(&self, i: ColourSet) -> Result<Vec<usize>, KappaError> {
        if i.is_empty() {
            return Err(KappaError::RangeError { r: 0, max: 0 });
        }
        let top = i.len() - 1;
        (0..=top).map(|s| self.kappa_r(i, top - s)).collect()
    }

    /// Alternating sum of the f-vector of `X(G_I)`.
    pub fn euler_characteristic(&self, i: ColourSet) -> Result<i64, KappaError> {
        Ok(self
            .f_vector(i)?
            .iter()
            .enumerate()
            .map(|(s, &f)| if s % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum())
    }
}

pub fn kappa_table(g: &ColourfulGraph) -> KappaTable {
    KappaTable::new(g)
}
