//! The colourful-graph data model.
//!
//! A `(d+1)`-colourful graph on `n = 2·half` vertices is stored as `d+1`
//! bijections from white vertices to black vertices, one per colour. Vertex
//! indices are 0-based: white vertex `w` is vertex `w`, black vertex `b` is
//! vertex `half + b`. File formats and printed output use 1-based ids.

use crate::colours::ColourSet;
use crate::perm;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("expected {expected} matchings (d+1), found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matching for colour {colour} has length {found}, expected {expected}")]
    SizeMismatch {
        colour: usize,
        expected: usize,
        found: usize,
    },
    #[error("matching for colour {colour} is not a bijection (image {image} repeated or out of range)")]
    NotABijection { colour: usize, image: usize },
    #[error("dimension must be at least 1 and at most 31, got {0}")]
    InvalidDimension(usize),
    #[error("a colourful graph needs at least one white vertex")]
    Empty,
    #[error("colour {colour} is outside 1..={max}")]
    InvalidColourSet { colour: usize, max: usize },
    #[error("vertex set is not a connected component of the residue graph")]
    NotAComponent,
    #[error("edge list does not describe a colourful graph: {0}")]
    InvalidEdgeList(String),
}

/// A bipartite `(d+1)`-regular multigraph with a proper edge colouring by
/// `1..=d+1`. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColourfulGraph {
    d: usize,
    half: usize,
    matchings: Vec<Vec<usize>>,
    inverses: Vec<Vec<usize>>,
}

impl std::fmt::Debug for ColourfulGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ColourfulGraph")
            .field("d", &self.d)
            .field("half", &self.half)
            .field("matchings", &self.matchings)
            .finish()
    }
}

impl ColourfulGraph {
    /// Builds a graph from `d+1` matchings, where `matchings[c-1][w]` is the
    /// (0-based) black vertex joined to white vertex `w` by colour `c`.
    pub fn from_matchings(d: usize, matchings: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if d == 0 || d >= crate::colours::MAX_COLOUR {
            return Err(GraphError::InvalidDimension(d));
        }
        if matchings.len() != d + 1 {
            return Err(GraphError::LengthMismatch {
                expected: d + 1,
                found: matchings.len(),
            });
        }
        let half = matchings[0].len();
        if half == 0 {
            return Err(GraphError::Empty);
        }
        for (i, m) in matchings.iter().enumerate() {
            if m.len() != half {
                return Err(GraphError::SizeMismatch {
                    colour: i + 1,
                    expected: half,
                    found: m.len(),
                });
            }
            let mut seen = vec![false; half];
            for &b in m {
                if b >= half || std::mem::replace(&mut seen[b], true) {
                    return Err(GraphError::NotABijection {
                        colour: i + 1,
                        image: b,
                    });
                }
            }
        }
        let inverses = matchings.iter().map(|m| perm::inverse(m)).collect();
        Ok(ColourfulGraph {
            d,
            half,
            matchings,
            inverses,
        })
    }

    /// The 2-vertex graph with all `d+1` colours between its two vertices.
    pub fn dipole(d: usize) -> Self {
        ColourfulGraph::from_matchings(d, vec![vec![0]; d + 1]).expect("dipole is valid")
    }

    /// Builds a graph from an arbitrarily labelled edge list on `0..n`.
    ///
    /// Each edge is `(u, v, colour)` with colours in `1..=d+1`. The vertices
    /// are 2-coloured per connected component, with the smallest vertex of
    /// each component white, and relabelled so whites come first, both
    /// classes in increasing original order. Returns the graph and the map
    /// from original vertex to new vertex index.
    pub fn from_labelled_edges(
        d: usize,
        n: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<(Self, Vec<usize>), GraphError> {
        let bad = |msg: String| GraphError::InvalidEdgeList(msg);
        if n == 0 || n % 2 == 1 {
            return Err(bad(format!("vertex count {n} must be positive and even")));
        }
        let k = d + 1;
        let mut adj = vec![vec![usize::MAX; k]; n];
        for &(u, v, c) in edges {
            if u >= n || v >= n {
                return Err(bad(format!("edge ({u},{v}) out of range")));
            }
            if !(1..=k).contains(&c) {
                return Err(GraphError::InvalidColourSet { colour: c, max: k });
            }
            if u == v {
                return Err(bad(format!("loop at vertex {u}")));
            }
            for (x, y) in [(u, v), (v, u)] {
                if adj[x][c - 1] != usize::MAX {
                    return Err(bad(format!("vertex {x} has two edges of colour {c}")));
                }
                adj[x][c - 1] = y;
            }
        }
        if let Some(v) = (0..n).find(|&v| adj[v].contains(&usize::MAX)) {
            return Err(bad(format!("vertex {v} misses a colour")));
        }
        let mut side = vec![None::<bool>; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(true);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let sx = side[x].unwrap();
                for &y in &adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            stack.push(y);
                        }
                        Some(sy) if sy == sx => {
                            return Err(bad("graph is not bipartite".to_string()));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let whites: Vec<usize> = (0..n).filter(|&v| side[v] == Some(true)).collect();
        let blacks: Vec<usize> = (0..n).filter(|&v| side[v] == Some(false)).collect();
        let half = whites.len();
        if blacks.len() != half {
            return Err(bad("colour classes have different sizes".to_string()));
        }
        let mut relabel = vec![0; n];
        for (i, &w) in whites.iter().enumerate() {
            relabel[w] = i;
        }
        for (i, &b) in blacks.iter().enumerate() {
            relabel[b] = half + i;
        }
        let matchings = (0..k)
            .map(|c| whites.iter().map(|&w| relabel[adj[w][c]] - half).collect())
            .collect();
        Ok((ColourfulGraph::from_matchings(d, matchings)?, relabel))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn n(&self) -> usize {
        2 * self.half
    }

    pub fn colour_count(&self) -> usize {
        self.d + 1
    }

    /// The full colour set `1..=d+1`.
    pub fn colours(&self) -> ColourSet {
        ColourSet::full(self.d + 1)
    }

    /// Matching of colour `c` (1-based) as white index → black index.
    pub fn matching(&self, c: usize) -> &[usize] {
        &self.matchings[c - 1]
    }

    pub fn matchings(&self) -> &[Vec<usize>] {
        &self.matchings
    }

    pub fn black_of(&self, c: usize, w: usize) -> usize {
        self.matchings[c - 1][w]
    }

    pub fn white_of(&self, c: usize, b: usize) -> usize {
        self.inverses[c - 1][b]
    }

    pub fn is_white(&self, v: usize) -> bool {
        v < self.half
    }

    /// The vertex joined to `v` by the edge of colour `c`.
    pub fn neighbour(&self, v: usize, c: usize) -> usize {
        if v < self.half {
            self.half + self.matchings[c - 1][v]
        } else {
            self.inverses[c - 1][v - self.half]
        }
    }

    /// Every edge as `(colour, white vertex, black vertex)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.matchings.iter().enumerate().flat_map(move |(i, m)| {
            m.iter()
                .enumerate()
                .map(move |(w, &b)| (i + 1, w, self.half + b))
        })
    }

    pub(crate) fn check_colours(&self, colours: ColourSet) -> Result<(), GraphError> {
        match colours.max_colour() {
            Some(c) if c > self.d + 1 => Err(GraphError::InvalidColourSet {
                colour: c,
                max: self.d + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Number of connected components of the subgraph with colours in `colours`.
    pub fn component_count(&self, colours: ColourSet) -> usize {
        let mut uf = UnionFind::new(self.n());
        for c in colours.iter().filter(|&c| c <= self.d + 1) {
            for (w, &b) in self.matchings[c - 1].iter().enumerate() {
                uf.union(w, self.half + b);
            }
        }
        uf.set_count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.colours()) == 1
    }

    /// The residue graph on `component`, keeping only colours in `colours`
    /// (relabelled `1..=|colours|` in increasing order). The component must be
    /// closed under those colours, and at least two colours are needed for
    /// the result to be a colourful graph.
    pub fn residue_graph(
        &self,
        colours: ColourSet,
        component: &[usize],
    ) -> Result<ColourfulGraph, GraphError> {
        self.check_colours(colours)?;
        if colours.len() < 2 {
            return Err(GraphError::InvalidDimension(colours.len().saturating_sub(1)));
        }
        let mut whites: Vec<usize> = component.iter().copied().filter(|&v| v < self.half).collect();
        let mut blacks: Vec<usize> = component
            .iter()
            .copied()
            .filter(|&v| v >= self.half && v < self.n())
            .map(|v| v - self.half)
            .collect();
        whites.sort_unstable();
        whites.dedup();
        blacks.sort_unstable();
        blacks.dedup();
        if whites.is_empty() || whites.len() != blacks.len() {
            return Err(GraphError::NotAComponent);
        }
        let mut black_index = vec![usize::MAX; self.half];
        for (i, &b) in blacks.iter().enumerate() {
            black_index[b] = i;
        }
        let mut matchings = Vec::with_capacity(colours.len());
        for c in colours.iter() {
            let mut m = Vec::with_capacity(whites.len());
            for &w in &whites {
                let bi = black_index[self.matchings[c - 1][w]];
                if bi == usize::MAX {
                    return Err(GraphError::NotAComponent);
                }
                m.push(bi);
            }
            matchings.push(m);
        }
        let d = matchings.len() - 1;
        let g = ColourfulGraph::from_matchings(d, matchings)?;
        if !g.is_connected() {
            return Err(GraphError::NotAComponent);
        }
        Ok(g)
    }

    /// The graph with only the colours in `colours` kept (and relabelled in
    /// increasing order). Needs at least two colours.
    pub fn restrict_colours(&self, colours: ColourSet) -> Result<ColourfulGraph, GraphError> {
        self.check_colours(colours)?;
        if colours.len() < 2 {
            return Err(GraphError::InvalidDimension(colours.len().saturating_sub(1)));
        }
        let matchings = colours
            .iter()
            .map(|c| self.matchings[c - 1].clone())
            .collect();
        ColourfulGraph::from_matchings(colours.len() - 1, matchings)
    }

    /// Splits into connected components, each relabelled canonically.
    pub fn connected_components(&self) -> Vec<ColourfulGraph> {
        let partition = crate::residues::residues_unchecked(self, self.colours());
        partition
            .components()
            .iter()
            .map(|comp| self.residue_graph(self.colours(), comp).expect("component"))
            .collect()
    }

    /// Vertex label used in printed output: `w<i>` / `b<i>`, 1-based.
    pub fn vertex_name(&self, v: usize) -> String {
        if v < self.half {
            format!("w{}", v + 1)
        } else {
            format!("b{}", v - self.half + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Vec<usize> {
        vec![1, 2, 0]
    }

    #[test]
    fn dipole_and_small_graphs() {
        let g = ColourfulGraph::dipole(3);
        assert_eq!(g.n(), 2);
        assert!(g.is_connected());
        let g = ColourfulGraph::from_matchings(3, vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 0]])
            .unwrap();
        assert_eq!(g.n(), 4);
        let g = ColourfulGraph::from_matchings(2, vec![vec![0, 1, 2], c3(), vec![2, 0, 1]]).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.neighbour(0, 2), 3 + 1);
        assert_eq!(g.neighbour(4, 2), 0);
    }

    #[test]
    fn rejects_invalid_matchings() {
        assert_eq!(
            ColourfulGraph::from_matchings(3, vec![vec![0]; 3]),
            Err(GraphError::LengthMismatch { expected: 4, found: 3 })
        );
        assert!(matches!(
            ColourfulGraph::from_matchings(1, vec![vec![0, 0], vec![0, 1]]),
            Err(GraphError::NotABijection { colour: 1, image: 0 })
        ));
        assert!(matches!(
            ColourfulGraph::from_matchings(1, vec![vec![0, 1], vec![0]]),
            Err(GraphError::SizeMismatch { colour: 2, .. })
        ));
        assert!(matches!(
            ColourfulGraph::from_matchings(1, vec![vec![0, 2], vec![0, 1]]),
            Err(GraphError::NotABijection { .. })
        ));
    }

    #[test]
    fn labelled_edges_relabel_canonically() {
        // Vertices 0..4 with 3 and 1 white after 2-colouring from vertex 0.
        let edges = [(0, 2, 1), (0, 2, 2), (1, 3, 1), (1, 3, 2)];
        let (g, relabel) = ColourfulGraph::from_labelled_edges(1, 4, &edges).unwrap();
        assert_eq!(g.half(), 2);
        assert_eq!(relabel, vec![0, 1, 2, 3]);
        assert_eq!(g.component_count(g.colours()), 2);

        let odd = [(0, 1, 1), (1, 2, 1), (2, 0, 1)];
        assert!(ColourfulGraph::from_labelled_edges(0, 3, &odd).is_err());
        let triangle = [
            (0, 1, 1),
            (2, 3, 1),
            (1, 2, 2),
            (3, 0, 2),
            (0, 2, 3),
            (1, 3, 3),
        ];
        assert!(matches!(
            ColourfulGraph::from_labelled_edges(2, 4, &triangle),
            Err(GraphError::InvalidEdgeList(_))
        ));
    }

    #[test]
    fn residue_graph_extracts_component() {
        let g = ColourfulGraph::from_matchings(3, vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 0]])
            .unwrap();
        let i = ColourSet::from_colours([1, 2, 3]);
        let h = g.residue_graph(i, &[1, 3]).unwrap();
        assert_eq!(h, ColourfulGraph::dipole(2));
        assert_eq!(g.residue_graph(i, &[0, 3]), Err(GraphError::NotAComponent));
        let comps = g.restrict_colours(i).unwrap().connected_components();
        assert_eq!(comps.len(), 2);
    }
}
