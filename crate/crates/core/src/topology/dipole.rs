//! Dipole moves and melonic reduction.

use std::collections::HashSet;
use std::fmt;

use crate::graph::ColourfulGraph;

use super::TopologyError;

/// A white and a black vertex joined by exactly `d` parallel edges; the one
/// colour missing between them is `free_colour`. Indices are the white and
/// black indices (`0..half`) in the graph the move applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DipoleMove {
    pub white: usize,
    pub black: usize,
    pub free_colour: usize,
}

impl DipoleMove {
    pub fn white_vertex(&self) -> usize {
        self.white
    }

    pub fn black_vertex(&self, g: &ColourfulGraph) -> usize {
        g.half() + self.black
    }
}

impl fmt::Display for DipoleMove {
    /// `(w, b, c)` with 1-based white and black indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.white + 1, self.black + 1, self.free_colour)
    }
}

/// Colour missing between `w` and `b`, if they share exactly `d` edges.
fn free_colour(g: &ColourfulGraph, w: usize, b: usize) -> Option<usize> {
    let mut missing = None;
    for c in 1..=g.colour_count() {
        if g.black_of(c, w) != b {
            if missing.is_some() {
                return None;
            }
            missing = Some(c);
        }
    }
    missing
}

/// Every dipole, ordered by white index then black index. Empty for the
/// 2-vertex graph.
pub fn find_dipoles(g: &ColourfulGraph) -> Vec<DipoleMove> {
    if g.n() < 4 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for w in 0..g.half() {
        let mut blacks: Vec<usize> = (1..=g.colour_count()).map(|c| g.black_of(c, w)).collect();
        blacks.sort_unstable();
        blacks.dedup();
        for b in blacks {
            if let Some(free_colour) = free_colour(g, w, b) {
                out.push(DipoleMove {
                    white: w,
                    black: b,
                    free_colour,
                });
            }
        }
    }
    out
}

fn first_dipole(g: &ColourfulGraph) -> Option<DipoleMove> {
    if g.n() < 4 {
        return None;
    }
    (0..g.half()).find_map(|w| {
        // With d >= 2 a dipole partner is the black reached by colour 1 or 2.
        let mut candidates = vec![g.black_of(1, w), g.black_of(2, w)];
        candidates.sort_unstable();
        candidates.dedup();
        candidates.into_iter().find_map(|b| {
            free_colour(g, w, b).map(|free_colour| DipoleMove {
                white: w,
                black: b,
                free_colour,
            })
        })
    })
}

/// Deletes the two vertices of the dipole and joins their outer neighbours
/// by an edge of the free colour. Remaining vertices keep their relative
/// order.
pub fn remove_dipole(g: &ColourfulGraph, m: DipoleMove) -> Result<ColourfulGraph, TopologyError> {
    let valid = g.n() >= 4
        && m.white < g.half()
        && m.black < g.half()
        && (1..=g.colour_count()).contains(&m.free_colour)
        && free_colour(g, m.white, m.black) == Some(m.free_colour);
    if !valid {
        return Err(TopologyError::InvalidMove(m));
    }
    let i = m.free_colour;
    let outer_white = g.white_of(i, m.black);
    let outer_black = g.black_of(i, m.white);
    let shift_b = |b: usize| if b > m.black { b - 1 } else { b };
    let matchings = (1..=g.colour_count())
        .map(|c| {
            (0..g.half())
                .filter(|&w| w != m.white)
                .map(|w| {
                    if c == i && w == outer_white {
                        shift_b(outer_black)
                    } else {
                        shift_b(g.black_of(c, w))
                    }
                })
                .collect()
        })
        .collect();
    Ok(ColourfulGraph::from_matchings(g.d(), matchings).expect("dipole removal keeps validity"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Moves in order; each is expressed in the labels of the graph it
    /// applies to (after all earlier removals and their relabelling).
    pub moves: Vec<DipoleMove>,
    pub terminal: ColourfulGraph,
    pub reached_dipole: bool,
}

impl ReductionTrace {
    /// Re-applies the moves to `start`, returning the graph after each step.
    pub fn replay(&self, start: &ColourfulGraph) -> Result<Vec<ColourfulGraph>, TopologyError> {
        let mut cur = start.clone();
        let mut out = Vec::with_capacity(self.moves.len());
        for &m in &self.moves {
            cur = remove_dipole(&cur, m)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn certificate(&self) -> String {
        let moves: Vec<String> = self.moves.iter().map(|m| m.to_string()).collect();
        format!("[{}]", moves.join(" "))
    }
}

/// Greedy reduction: repeatedly removes the dipole with the lowest white
/// vertex until none remains or two vertices are left.
pub fn melonic_reduce(g: &ColourfulGraph) -> Result<ReductionTrace, TopologyError> {
    if !g.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let mut cur = g.clone();
    let mut moves = Vec::new();
    if g.d() >= 2 {
        while let Some(m) = first_dipole(&cur) {
            cur = remove_dipole(&cur, m)?;
            moves.push(m);
        }
    } else {
        while let Some(&m) = find_dipoles(&cur).first() {
            cur = remove_dipole(&cur, m)?;
            moves.push(m);
        }
    }
    Ok(ReductionTrace {
        moves,
        reached_dipole: cur.n() == 2,
        terminal: cur,
    })
}

/// Bounds for [`melonic_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_depth: usize,
    pub max_states: usize,
}

impl SearchLimits {
    /// `n/2` moves deep, at most 64 distinct states.
    pub fn for_graph(g: &ColourfulGraph) -> Self {
        SearchLimits {
            max_depth: g.half(),
            max_states: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Reduced(ReductionTrace),
    /// Every reachable state was explored without reaching the dipole: the
    /// graph is not melonic.
    Exhausted,
    LimitReached,
}

/// Depth-first search over dipole removal orders.
pub fn melonic_search(g: &ColourfulGraph, limits: SearchLimits) -> Result<SearchOutcome, TopologyError> {
    if !g.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let mut visited: HashSet<ColourfulGraph> = HashSet::new();
    let mut path: Vec<DipoleMove> = Vec::new();
    let mut limited = false;
    let found = search(g, limits, &mut visited, &mut path, &mut limited);
    Ok(match found {
        Some(terminal) => SearchOutcome::Reduced(ReductionTrace {
            moves: path,
            terminal,
            reached_dipole: true,
        }),
        None if limited => SearchOutcome::LimitReached,
        None => SearchOutcome::Exhausted,
    })
}

fn search(
    g: &ColourfulGraph,
    limits: SearchLimits,
    visited: &mut HashSet<ColourfulGraph>,
    path: &mut Vec<DipoleMove>,
    limited: &mut bool,
) -> Option<ColourfulGraph> {
    if g.n() == 2 {
        return Some(g.clone());
    }
    if visited.contains(g) {
        return None;
    }
    if visited.len() >= limits.max_states || path.len() >= limits.max_depth {
        *limited = true;
        return None;
    }
    visited.insert(g.clone());
    for m in find_dipoles(g) {
        let next = remove_dipole(g, m).expect("listed dipole is valid");
        path.push(m);
        if let Some(t) = search(&next, limits, visited, path, limited) {
            return Some(t);
        }
        path.pop();
    }
    None
}

/// Greedy reduction, falling back to the bounded search when the greedy
/// order gets stuck. `None` means no reduction was found.
pub fn find_melonic_trace(g: &ColourfulGraph) -> Result<Option<ReductionTrace>, TopologyError> {
    let greedy = melonic_reduce(g)?;
    if greedy.reached_dipole {
        return Ok(Some(greedy));
    }
    match melonic_search(g, SearchLimits::for_graph(g))? {
        SearchOutcome::Reduced(t) => Ok(Some(t)),
        _ => Ok(None),
    }
}
