//! Explicit families of colourful graphs.
//!
//! The manifold family is a horizontal double path. Four rows of `kd`
//! vertices, `a`, `a'`, `b`, `b'`, form an upper path
//! `a_kd … a_1 a'_1 … a'_kd` and a lower path `b_kd … b_1 b'_1 … b'_kd`:
//!
//! * `x_i x_{i+1}` has colour `i+1 (mod d)` for every row `x`, and the two
//!   middle edges `a_1 a'_1`, `b_1 b'_1` have colour 1;
//! * `a_i b_i` (and `a'_i b'_i`) carries every colour `j ∈ 1..=d` except
//!   `i` and `i+1 (mod d)`, the two colours of the horizontal edges at
//!   position `i`; at `i = kd` colour 1 is added back;
//! * `a_i b_i` (and `a'_i b'_i`) also has colour `d+1` when `i ≢ 0 (mod d)`.
//!
//! Residues mod `d` are taken in `1..=d`. The vertices `x_{id}` then lack
//! colour `d+1`, which is supplied by `a_{id} a'_{σ(i)d}` and
//! `b_{id} b'_{τ(i)d}`. When `d` is odd these edges join vertices of the
//! same parity class unless `σ` and `τ` preserve the parity of every index,
//! so odd dimensions only accept parity-preserving permutations.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{ColourfulGraph, GraphError};
use crate::perm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("bad construction parameters: {0}")]
    BadParams(String),
    #[error("graph is not an output of the d = 3 manifold construction")]
    NotAConstructionGraph,
    #[error("vertex count {0} is odd")]
    OddN(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    A,
    APrime,
    B,
    BPrime,
}

impl Row {
    pub const ALL: [Row; 4] = [Row::A, Row::APrime, Row::B, Row::BPrime];

    pub fn name(self) -> &'static str {
        match self {
            Row::A => "a",
            Row::APrime => "a'",
            Row::B => "b",
            Row::BPrime => "b'",
        }
    }
}

/// Vertex `x_index` of the double path, `index ∈ 1..=kd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: Row,
    pub index: usize,
}

impl std::fmt::Display for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.row.name(), self.index)
    }
}

/// Assignment of double-path vertices to graph vertices. `a_i` is white for
/// odd `i`, `a'_i` and `b_i` for even `i`, `b'_i` for odd `i`; whites and
/// blacks are numbered by row (`a`, `a'`, `b`, `b'`) then index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    d: usize,
    k: usize,
    vertex: Vec<usize>,
    node: Vec<Node>,
}

impl Layout {
    pub fn new(d: usize, k: usize) -> Self {
        let len = k * d;
        let half = 2 * len;
        let mut vertex = vec![0; 4 * len];
        let mut node = vec![Node { row: Row::A, index: 1 }; 4 * len];
        let (mut whites, mut blacks) = (0, 0);
        for (r, &row) in Row::ALL.iter().enumerate() {
            for index in 1..=len {
                let nd = Node { row, index };
                let v = if Layout::white(nd) {
                    whites += 1;
                    whites - 1
                } else {
                    blacks += 1;
                    half + blacks - 1
                };
                vertex[r * len + index - 1] = v;
                node[v] = nd;
            }
        }
        Layout { d, k, vertex, node }
    }

    fn white(n: Node) -> bool {
        let odd = n.index % 2 == 1;
        match n.row {
            Row::A | Row::BPrime => odd,
            Row::APrime | Row::B => !odd,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices per row, `kd`.
    pub fn row_len(&self) -> usize {
        self.k * self.d
    }

    pub fn n(&self) -> usize {
        4 * self.row_len()
    }

    pub fn is_white(&self, n: Node) -> bool {
        Layout::white(n)
    }

    pub fn vertex(&self, n: Node) -> usize {
        let r = Row::ALL.iter().position(|&x| x == n.row).unwrap();
        self.vertex[r * self.row_len() + n.index - 1]
    }

    pub fn node(&self, v: usize) -> Node {
        self.node[v]
    }
}

/// The base graph before the `σ`/`τ` edges: vertices `x_{id}` miss colour
/// `d+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGraph {
    pub layout: Layout,
    /// `(u, v, colour)`.
    pub edges: Vec<(Node, Node, usize)>,
}

impl PartialGraph {
    pub fn vertex_count(&self) -> usize {
        self.layout.n()
    }

    pub fn colours_at(&self, n: Node) -> Vec<usize> {
        let mut cs: Vec<usize> = self
            .edges
            .iter()
            .filter(|(u, v, _)| *u == n || *v == n)
            .map(|&(_, _, c)| c)
            .collect();
        cs.sort_unstable();
        cs
    }

    pub fn degree(&self, n: Node) -> usize {
        self.colours_at(n).len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        let len = self.layout.row_len();
        Row::ALL
            .into_iter()
            .flat_map(move |row| (1..=len).map(move |index| Node { row, index }))
    }
}

/// Colour representative of `x (mod d)` in `1..=d`.
fn residue(x: usize, d: usize) -> usize {
    (x + d - 1) % d + 1
}

pub fn build_g0(d: usize, k: usize) -> Result<PartialGraph, ConstructionError> {
    if d < 3 || k == 0 {
        return Err(ConstructionError::BadParams(format!(
            "need d >= 3 and k >= 1, got d = {d}, k = {k}"
        )));
    }
    let layout = Layout::new(d, k);
    let len = k * d;
    let node = |row, index| Node { row, index };
    let mut edges = Vec::new();
    for row in Row::ALL {
        for i in 1..len {
            edges.push((node(row, i), node(row, i + 1), residue(i + 1, d)));
        }
    }
    edges.push((node(Row::A, 1), node(Row::APrime, 1), 1));
    edges.push((node(Row::B, 1), node(Row::BPrime, 1), 1));
    for (top, bottom) in [(Row::A, Row::B), (Row::APrime, Row::BPrime)] {
        for i in 1..=len {
            let horizontal = [residue(i, d), residue(i + 1, d)];
            for j in 1..=d {
                if !horizontal.contains(&j) {
                    edges.push((node(top, i), node(bottom, i), j));
                }
            }
            if i == len {
                edges.push((node(top, i), node(bottom, i), 1));
            }
            if i % d != 0 {
                edges.push((node(top, i), node(bottom, i), d + 1));
            }
        }
    }
    Ok(PartialGraph { layout, edges })
}

/// Dimension, block count and the two permutations (1-based images).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    pub d: usize,
    pub k: usize,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
}

impl ConstructionParams {
    pub fn identity(d: usize, k: usize) -> Self {
        ConstructionParams {
            d,
            k,
            sigma: (1..=k).collect(),
            tau: (1..=k).collect(),
        }
    }

    /// Vertex count `4kd`.
    pub fn n(&self) -> usize {
        4 * self.k * self.d
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |m: String| Err(ConstructionError::BadParams(m));
        if self.d < 3 || self.k == 0 {
            return bad(format!("need d >= 3 and k >= 1, got d = {}, k = {}", self.d, self.k));
        }
        if self.d + 1 >= crate::colours::MAX_COLOUR {
            return bad(format!("dimension {} too large", self.d));
        }
        for (name, p) in [("sigma", &self.sigma), ("tau", &self.tau)] {
            let zero_based: Vec<usize> = p.iter().map(|&x| x.wrapping_sub(1)).collect();
            if p.len() != self.k || !perm::is_permutation(&zero_based) {
                return bad(format!("{name} is not a permutation of 1..={}", self.k));
            }
            if self.d % 2 == 1 {
                if let Some(i) = (1..=self.k).find(|&i| (p[i - 1] + i) % 2 == 1) {
                    return bad(format!(
                        "{name}({i}) = {} changes parity; odd d needs parity-preserving permutations",
                        p[i - 1]
                    ));
                }
            }
        }
        Ok(())
    }

    /// Cycles of `σ τ⁻¹`.
    pub fn sigma_tau_inv_cycles(&self) -> usize {
        let s: Vec<usize> = self.sigma.iter().map(|x| x - 1).collect();
        let t: Vec<usize> = self.tau.iter().map(|x| x - 1).collect();
        perm::cycle_count(&perm::compose(&s, &perm::inverse(&t)))
    }
}

/// The closed manifold `G(σ, τ)` on `4kd` vertices.
pub fn build_manifold(p: &ConstructionParams) -> Result<ColourfulGraph, ConstructionError> {
    p.validate()?;
    let g0 = build_g0(p.d, p.k)?;
    let layout = &g0.layout;
    let mut edges: Vec<(Node, Node, usize)> = g0.edges.clone();
    for i in 1..=p.k {
        let node = |row, index| Node { row, index };
        edges.push((node(Row::A, i * p.d), node(Row::APrime, p.sigma[i - 1] * p.d), p.d + 1));
        edges.push((node(Row::B, i * p.d), node(Row::BPrime, p.tau[i - 1] * p.d), p.d + 1));
    }
    let half = layout.n() / 2;
    let mut matchings = vec![vec![usize::MAX; half]; p.d + 1];
    for (u, v, c) in edges {
        let (w, b) = if layout.is_white(u) { (u, v) } else { (v, u) };
        debug_assert!(layout.is_white(w) && !layout.is_white(b));
        let slot = &mut matchings[c - 1][layout.vertex(w)];
        debug_assert_eq!(*slot, usize::MAX, "colour {c} twice at {w}");
        *slot = layout.vertex(b) - half;
    }
    Ok(ColourfulGraph::from_matchings(p.d, matchings)?)
}

/// Recovers `(σ, τ)` from a `d = 3` construction graph, if it is one.
pub fn recover_params(g: &ColourfulGraph) -> Result<ConstructionParams, ConstructionError> {
    let d = 3;
    if g.d() != d || g.n() % (4 * d) != 0 {
        return Err(ConstructionError::NotAConstructionGraph);
    }
    let k = g.n() / (4 * d);
    let layout = Layout::new(d, k);
    let read = |from: Row, to: Row| -> Result<Vec<usize>, ConstructionError> {
        (1..=k)
            .map(|i| {
                let v = layout.vertex(Node { row: from, index: i * d });
                let target = layout.node(g.neighbour(v, d + 1));
                if target.row == to && target.index % d == 0 {
                    Ok(target.index / d)
                } else {
                    Err(ConstructionError::NotAConstructionGraph)
                }
            })
            .collect()
    };
    let params = ConstructionParams {
        d,
        k,
        sigma: read(Row::A, Row::APrime)?,
        tau: read(Row::B, Row::BPrime)?,
    };
    match build_manifold(&params) {
        Ok(rebuilt) if &rebuilt == g => Ok(params),
        _ => Err(ConstructionError::NotAConstructionGraph),
    }
}

/// Extends a `d = 3` construction graph to `target_d + 1` colours by giving
/// every vertical pair `a_i b_i`, `a'_i b'_i` each colour in `5..=target_d+1`.
pub fn build_planar_family(g3: &ColourfulGraph, target_d: usize) -> Result<ColourfulGraph, ConstructionError> {
    if target_d < 4 || target_d + 1 >= crate::colours::MAX_COLOUR {
        return Err(ConstructionError::BadParams(format!(
            "target dimension must lie in 4..={}, got {target_d}",
            crate::colours::MAX_COLOUR - 2
        )));
    }
    let params = recover_params(g3)?;
    let layout = Layout::new(3, params.k);
    let half = g3.half();
    let mut vertical = vec![usize::MAX; half];
    for (top, bottom) in [(Row::A, Row::B), (Row::APrime, Row::BPrime)] {
        for i in 1..=layout.row_len() {
            let (u, v) = (Node { row: top, index: i }, Node { row: bottom, index: i });
            let (w, b) = if layout.is_white(u) { (u, v) } else { (v, u) };
            vertical[layout.vertex(w)] = layout.vertex(b) - half;
        }
    }
    let mut matchings = g3.matchings().to_vec();
    matchings.extend(std::iter::repeat_n(vertical, target_d - 3));
    Ok(ColourfulGraph::from_matchings(target_d, matchings)?)
}

/// `(k!)^2 · n! / 4` with `n = 4kd`.
pub fn family_size_lower_bound(d: usize, k: usize) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::from(1u32), |acc, x| acc * BigUint::from(x));
    let kf = fact(k);
    &kf * &kf * fact(4 * k * d) / BigUint::from(4u32)
}

/// The generator used for all sampling: ChaCha8 seeded from a `u64`.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform permutation of `1..=k` (Fisher–Yates).
pub fn random_permutation<R: rand::Rng>(k: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=k).collect();
    p.shuffle(rng);
    p
}

/// Uniform permutation of `1..=k` mapping odd indices to odd indices.
pub fn random_parity_preserving<R: rand::Rng>(k: usize, rng: &mut R) -> Vec<usize> {
    let mut odd: Vec<usize> = (1..=k).step_by(2).collect();
    let mut even: Vec<usize> = (2..=k).step_by(2).collect();
    odd.shuffle(rng);
    even.shuffle(rng);
    (1..=k)
        .map(|i| if i % 2 == 1 { odd[i / 2] } else { even[i / 2 - 1] })
        .collect()
}

/// Uniform parameters among those accepted by [`build_manifold`]: all pairs
/// for even `d`, parity-preserving pairs for odd `d`.
pub fn random_params<R: rand::Rng>(d: usize, k: usize, rng: &mut R) -> ConstructionParams {
    let draw = |rng: &mut R| {
        if d % 2 == 0 {
            random_permutation(k, rng)
        } else {
            random_parity_preserving(k, rng)
        }
    };
    let sigma = draw(rng);
    let tau = draw(rng);
    ConstructionParams { d, k, sigma, tau }
}

/// `d+1` independent uniform matchings on `n/2` whites.
pub fn random_graph(d: usize, n: usize, seed: u64) -> Result<ColourfulGraph, ConstructionError> {
    if n % 2 == 1 {
        return Err(ConstructionError::OddN(n));
    }
    let mut rng = rng_from_seed(seed);
    let half = n / 2;
    let matchings = (0..=d)
        .map(|_| {
            let mut m = perm::identity(half);
            m.shuffle(&mut rng);
            m
        })
        .collect();
    Ok(ColourfulGraph::from_matchings(d, matchings)?)
}

/// Inverse dipole move: replaces the colour-`colour` edge at white `white`
/// by a new dipole whose free colour is `colour`. The new white and black
/// get the last indices.
pub fn insert_dipole(g: &ColourfulGraph, white: usize, colour: usize) -> Result<ColourfulGraph, ConstructionError> {
    if white >= g.half() || !(1..=g.colour_count()).contains(&colour) {
        return Err(ConstructionError::BadParams(format!(
            "no colour-{colour} edge at white {}",
            white + 1
        )));
    }
    let half = g.half();
    let matchings = (1..=g.colour_count())
        .map(|c| {
            let mut m = g.matching(c).to_vec();
            if c == colour {
                let b = m[white];
                m[white] = half;
                m.push(b);
            } else {
                m.push(half);
            }
            m
        })
        .collect();
    Ok(ColourfulGraph::from_matchings(g.d(), matchings)?)
}

/// Melonic graph on `2 + 2·insertions` vertices grown from the dipole by
/// uniformly random dipole insertions.
pub fn random_melonic(d: usize, insertions: usize, seed: u64) -> Result<ColourfulGraph, ConstructionError> {
    use rand::Rng;
    if d == 0 || d + 1 >= crate::colours::MAX_COLOUR {
        return Err(ConstructionError::BadParams(format!("dimension {d} out of range")));
    }
    let mut rng = rng_from_seed(seed);
    let mut g = ColourfulGraph::dipole(d);
    for _ in 0..insertions {
        let w = rng.gen_range(0..g.half());
        let c = rng.gen_range(1..=d + 1);
        g = insert_dipole(&g, w, c)?;
    }
    Ok(g)
}
