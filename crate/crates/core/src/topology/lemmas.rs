//! Counting inequalities between component numbers of residues.

use num_rational::Rational64;

use crate::colours::ColourSet;
use crate::genus::embedded_residues;
use crate::graph::ColourfulGraph;
use crate::residues::residues_unchecked;

use super::{is_rational_homology_sphere, Status, TopologyError};

/// `(Σ_{r=0}^{k} (-1)^r κ^(r)_I, 2 κ_I)` where `k = |I| - 1`.
pub fn euler_poincare_sums(g: &ColourfulGraph, colours: ColourSet) -> (i64, i64) {
    let top = colours.len() - 1;
    let alternating = (0..=top)
        .map(|r| {
            let kr: usize = colours
                .subsets_of_size(r)
                .map(|j| g.component_count(j))
                .sum();
            if r % 2 == 0 {
                kr as i64
            } else {
                -(kr as i64)
            }
        })
        .sum();
    (alternating, 2 * g.component_count(colours) as i64)
}

/// Whether `Σ_{r=0}^{k} (-1)^r κ^(r)_I = 2 κ_I` holds, for `|I| = k + 1`
/// with `k` even. Necessary for `X(G_I)` to be a disjoint union of rational
/// homology spheres.
pub fn euler_poincare_check(g: &ColourfulGraph, colours: ColourSet) -> Result<bool, TopologyError> {
    g.check_colours(colours)?;
    if colours.is_empty() || colours.len() % 2 == 0 {
        return Err(TopologyError::OddDimension(colours.len().saturating_sub(1)));
    }
    let (lhs, rhs) = euler_poincare_sums(g, colours);
    Ok(lhs == rhs)
}

/// The minimising colours for one of the counting inequalities, with the
/// bound and `slack = bound - value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaWitness {
    /// `[i, j]` for the pair inequality, `[i, j, k]` for the triple one.
    pub colours: Vec<usize>,
    pub value: i64,
    pub bound: Rational64,
    pub slack: Rational64,
    /// Whether the graph satisfies the hypothesis under which the bound is
    /// guaranteed. The minimum is reported either way.
    pub hypothesis_holds: bool,
}

fn expect_size(colours: ColourSet, size: usize) -> Result<(), TopologyError> {
    if colours.len() != size {
        return Err(TopologyError::WrongColourCount {
            expected: size,
            found: colours.len(),
        });
    }
    Ok(())
}

/// Minimum of `κ_{i,j} - κ_I` over pairs in `I` (`|I| = 3`), against `n/6`.
/// The hypothesis is that every component of `G_I` is planar.
pub fn lemma1_witness(g: &ColourfulGraph, colours: ColourSet) -> Result<LemmaWitness, TopologyError> {
    g.check_colours(colours)?;
    expect_size(colours, 3)?;
    let k_i = g.component_count(colours) as i64;
    let (pair, value) = colours
        .subsets_of_size(2)
        .map(|p| (p, g.component_count(p) as i64 - k_i))
        .min_by_key(|&(p, v)| (v, p))
        .expect("three pairs");
    let hypothesis_holds = embedded_residues(g, colours)?.iter().all(|r| r.genus == 0);
    let bound = Rational64::new(g.n() as i64, 6);
    Ok(LemmaWitness {
        colours: pair.iter().collect(),
        value,
        bound,
        slack: bound - value,
        hypothesis_holds,
    })
}

/// Minimum of `κ_{i,j} - κ_{i,j,k}` over distinct `i, j, k` in `I`
/// (`|I| = 5`), against `3n/20`. The hypothesis is that every component of
/// `G_I` is a rational homology 4-sphere.
pub fn lemma2_witness(g: &ColourfulGraph, colours: ColourSet) -> Result<LemmaWitness, TopologyError> {
    g.check_colours(colours)?;
    expect_size(colours, 5)?;
    let mut best: Option<(i64, Vec<usize>)> = None;
    for triple in colours.subsets_of_size(3) {
        let k_t = g.component_count(triple) as i64;
        for pair in triple.subsets_of_size(2) {
            let v = g.component_count(pair) as i64 - k_t;
            let third = triple.difference(pair).iter().next().unwrap();
            let mut label: Vec<usize> = pair.iter().collect();
            label.push(third);
            if best.as_ref().is_none_or(|(bv, bl)| (v, &label) < (*bv, bl)) {
                best = Some((v, label));
            }
        }
    }
    let (value, label) = best.expect("ten triples");
    let p = residues_unchecked(g, colours);
    let hypothesis_holds = p.components().iter().all(|comp| {
        is_rational_homology_sphere(g, colours, comp)
            .map(|v| v.status == Status::Yes)
            .unwrap_or(false)
    });
    let bound = Rational64::new(3 * g.n() as i64, 20);
    Ok(LemmaWitness {
        colours: label,
        value,
        bound,
        slack: bound - value,
        hypothesis_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> ColourfulGraph {
        ColourfulGraph::from_matchings(2, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap()
    }

    #[test]
    fn euler_poincare_on_small_graphs() {
        assert!(euler_poincare_check(&ColourfulGraph::dipole(2), ColourSet::full(3)).unwrap());
        assert!(euler_poincare_check(&ColourfulGraph::dipole(4), ColourSet::full(5)).unwrap());
        assert!(!euler_poincare_check(&torus(), ColourSet::full(3)).unwrap());
        assert_eq!(
            euler_poincare_check(&ColourfulGraph::dipole(3), ColourSet::full(4)),
            Err(TopologyError::OddDimension(3))
        );
    }

    #[test]
    fn lemma1_on_dipole() {
        let w = lemma1_witness(&ColourfulGraph::dipole(3), ColourSet::from_colours([1, 2, 3])).unwrap();
        assert_eq!(w.value, 0);
        assert_eq!(w.slack, Rational64::new(1, 3));
        assert!(w.hypothesis_holds);
        assert_eq!(w.colours, vec![1, 2]);
    }

    #[test]
    fn lemma1_flags_torus() {
        let w = lemma1_witness(&torus(), ColourSet::full(3)).unwrap();
        assert!(!w.hypothesis_holds);
        assert_eq!(w.value, 0);
        assert!(lemma1_witness(&torus(), ColourSet::from_colours([1, 2])).is_err());
    }

    #[test]
    fn lemma2_on_dipole() {
        let w = lemma2_witness(&ColourfulGraph::dipole(4), ColourSet::full(5)).unwrap();
        assert_eq!(w.value, 0);
        assert_eq!(w.slack, Rational64::new(3, 10));
        assert!(w.hypothesis_holds);
        assert_eq!(w.colours.len(), 3);
    }
}
