//! Exhaustive checks of the counting inequalities.

use num_bigint::BigUint;
use num_rational::Rational64;

use crate::colours::ColourSet;
use crate::genus::embedded_residues;
use crate::graph::ColourfulGraph;
use crate::residues::residues_unchecked;
use crate::topology::{lemma1_witness, lemma2_witness, LemmaWitness};

use super::{par_tuples, perfect_matchings, within_budget, CensusError};

/// Smallest slack seen, with the tuple index of the graph and the witness
/// colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackRecord {
    pub slack: Rational64,
    pub index: u128,
    pub colours: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundCheck {
    pub checked: u64,
    pub violations: u64,
    pub extremal: Option<SlackRecord>,
}

impl BoundCheck {
    fn record(&mut self, slack: Rational64, index: u128, colours: Vec<usize>) {
        self.checked += 1;
        if slack < Rational64::from_integer(0) {
            self.violations += 1;
        }
        let better = match &self.extremal {
            None => true,
            Some(r) => (slack, index) < (r.slack, r.index),
        };
        if better {
            self.extremal = Some(SlackRecord { slack, index, colours });
        }
    }

    fn merge(&mut self, other: BoundCheck) {
        self.checked += other.checked;
        self.violations += other.violations;
        if let Some(r) = other.extremal {
            self.record_extremal(r);
        }
    }

    fn record_extremal(&mut self, r: SlackRecord) {
        let better = match &self.extremal {
            None => true,
            Some(e) => (r.slack, r.index) < (e.slack, e.index),
        };
        if better {
            self.extremal = Some(r);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub d: usize,
    pub n: usize,
    pub graphs: u128,
    /// `κ_{i,j} - κ_I ≤ n/6` over 3-sets whose residues are all planar.
    pub lemma1: BoundCheck,
    /// `κ_{i,j} - κ_{i,j,k} ≤ 3n/20` over 5-sets whose residues are all
    /// rational homology spheres.
    pub lemma2: BoundCheck,
    /// Per planar 3-residue on `m` vertices, `Σ_pairs κ = 2 + m/2`; the
    /// slack is the difference, which must be zero.
    pub euler_poincare: BoundCheck,
}

impl LemmaReport {
    pub fn violations(&self) -> u64 {
        self.lemma1.violations + self.lemma2.violations + self.euler_poincare.violations
    }
}

#[derive(Default)]
struct LemmaTally {
    lemma1: BoundCheck,
    lemma2: BoundCheck,
    euler_poincare: BoundCheck,
}

fn record_witness(check: &mut BoundCheck, w: LemmaWitness, index: u128) {
    if w.hypothesis_holds {
        check.record(w.slack, index, w.colours);
    }
}

/// Checks both pair inequalities and the planar Euler–Poincaré identity on
/// every graph of the census.
pub fn verify_lemma_bounds(d: usize, n: usize, budget: u128) -> Result<LemmaReport, CensusError> {
    let shards = par_tuples(d, n, budget, LemmaTally::default, |t, index, g| {
        for i in g.colours().subsets_of_size(3) {
            record_witness(&mut t.lemma1, lemma1_witness(g, i).expect("3 colours"), index);
            for r in embedded_residues(g, i).expect("valid colours") {
                if r.genus == 0 {
                    let ep = planar_identity_defect(g, i, r.min_vertex());
                    let cols = i.iter().collect();
                    t.euler_poincare.checked += 1;
                    if ep != 0 {
                        t.euler_poincare.violations += 1;
                    }
                    t.euler_poincare.record_extremal(SlackRecord {
                        slack: Rational64::from_integer(-ep.abs()),
                        index,
                        colours: cols,
                    });
                }
            }
        }
        for i in g.colours().subsets_of_size(5) {
            record_witness(&mut t.lemma2, lemma2_witness(g, i).expect("5 colours"), index);
        }
    })?;
    let mut total = LemmaTally::default();
    for s in shards {
        total.lemma1.merge(s.lemma1);
        total.lemma2.merge(s.lemma2);
        total.euler_poincare.merge(s.euler_poincare);
    }
    Ok(LemmaReport {
        d,
        n,
        graphs: within_budget(super::tuple_count(d, n), budget)?,
        lemma1: total.lemma1,
        lemma2: total.lemma2,
        euler_poincare: total.euler_poincare,
    })
}

/// `Σ_pairs κ_pair(R) - (2 κ(R) + m/2)` on the residue `R` of `G_I`
/// containing `vertex`, counted on the extracted residue graph.
fn planar_identity_defect(g: &ColourfulGraph, colours: ColourSet, vertex: usize) -> i64 {
    let p = residues_unchecked(g, colours);
    let comp = &p.components()[p.component_of(vertex)];
    let h = g.residue_graph(colours, comp).expect("component");
    let pairs: usize = h.colours().subsets_of_size(2).map(|j| h.component_count(j)).sum();
    pairs as i64 - (2 + h.n() as i64 / 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionBucket {
    /// Components of the extended graph.
    pub k: usize,
    pub count: u64,
    /// `2^{5n} n^{c-k}`.
    pub bound: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    pub n: usize,
    /// Components of `C`.
    pub c: usize,
    pub buckets: Vec<ExtensionBucket>,
    /// Bipartite extensions dropped because some component has positive
    /// genus.
    pub nonplanar: u64,
    pub violations: u64,
}

/// Largest vertex count accepted by [`verify_extension_bound`].
pub const MAX_EXTENSION_N: usize = 10;

/// Enumerates every colour-3 perfect matching on the vertices of the
/// 2-coloured `c2` that yields a planar 3-colourful graph, bucketed by the
/// number of components.
pub fn verify_extension_bound(c2: &ColourfulGraph) -> Result<ExtensionReport, CensusError> {
    if c2.colour_count() != 2 {
        return Err(CensusError::NotTwoColoured(c2.colour_count()));
    }
    let n = c2.n();
    if n > MAX_EXTENSION_N {
        return Err(CensusError::BudgetExceeded {
            tuples: (1..n).step_by(2).map(BigUint::from).product(),
            budget: (1..MAX_EXTENSION_N).step_by(2).product::<usize>() as u128,
        });
    }
    let c = c2.component_count(c2.colours());
    let base: Vec<(usize, usize, usize)> = c2.edges().map(|(col, w, b)| (w, b, col)).collect();
    let mut counts = vec![0u64; c + 1];
    let mut nonplanar = 0;
    for m in perfect_matchings(n) {
        let mut edges = base.clone();
        edges.extend(m.iter().map(|&(u, v)| (u, v, 3)));
        let Ok((g, _)) = ColourfulGraph::from_labelled_edges(2, n, &edges) else {
            continue;
        };
        let planar = embedded_residues(&g, g.colours())
            .expect("all colours")
            .iter()
            .all(|r| r.genus == 0);
        if !planar {
            nonplanar += 1;
            continue;
        }
        counts[g.component_count(g.colours())] += 1;
    }
    let mut buckets = Vec::new();
    let mut violations = 0;
    for (k, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let bound = (BigUint::from(1u32) << (5 * n)) * BigUint::from(n).pow((c - k) as u32);
        if BigUint::from(count) > bound {
            violations += 1;
        }
        buckets.push(ExtensionBucket { k, count, bound });
    }
    Ok(ExtensionReport {
        n,
        c,
        buckets,
        nonplanar,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionSummary {
    pub graphs: u64,
    pub buckets: u64,
    pub extensions: u64,
    pub nonplanar: u64,
    pub violations: u64,
}

/// Runs [`verify_extension_bound`] on every 2-colourful graph over the
/// canonical white set with `n ≤ max_n`.
pub fn verify_all_extension_bounds(max_n: usize) -> Result<ExtensionSummary, CensusError> {
    let mut s = ExtensionSummary::default();
    for n in (2..=max_n).step_by(2) {
        let shards = par_tuples(1, n, super::DEFAULT_BUDGET, Vec::new, |v, _, g| {
            v.push(verify_extension_bound(g))
        })?;
        for r in shards.into_iter().flatten() {
            let r = r?;
            s.graphs += 1;
            s.buckets += r.buckets.len() as u64;
            s.extensions += r.buckets.iter().map(|b| b.count).sum::<u64>();
            s.nonplanar += r.nonplanar;
            s.violations += r.violations;
        }
    }
    Ok(s)
}
