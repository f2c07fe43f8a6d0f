//! Exhaustive enumeration of small colourful graphs.
//!
//! The fast enumerator walks every tuple of `d+1` bijections on the fixed
//! white set `0..n/2`, sharded in parallel by the first bijection. Distinct
//! tuples give distinct coloured edge sets, so every tuple is one graph.
//!
//! Labelled counts on `[1..n]` follow from the canonical ones. A labelled
//! graph with `c` components has `2^c` two-colourings, all balanced, so
//!
//! ```text
//! labelled = C(n, n/2) · Σ_tuples 2^(-c)
//! ```
//!
//! [`enumerate_labelled`] counts the same quantity directly from tuples of
//! perfect matchings of `K_n` and serves as an oracle.

mod bounds;
mod stats;

use std::fmt;
use std::path::PathBuf;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::format::to_cgf;
use crate::genus::has_property_p;
use crate::graph::ColourfulGraph;
use crate::perm;
use crate::topology::{find_melonic_trace, is_manifold, is_sphere, Status};

pub use bounds::{
    verify_all_extension_bounds, verify_extension_bound, verify_lemma_bounds, BoundCheck, ExtensionBucket,
    ExtensionReport, ExtensionSummary, LemmaReport, SlackRecord,
};
pub use stats::{cycle_statistics, harmonic, vn_experiment, CycleStats, StatsReport, VnRow};

/// Default cap on the number of tuples an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("vertex count {0} must be positive and even")]
    OddN(usize),
    #[error("dimension {0} out of range")]
    InvalidDimension(usize),
    #[error("{tuples} tuples exceed the budget of {budget}")]
    BudgetExceeded { tuples: BigUint, budget: u128 },
    #[error("expected a 2-colourful graph, got {0} colours")]
    NotTwoColoured(usize),
    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    All,
    PropertyP,
    Manifold,
    ManifoldUnknown,
    SphereYes,
    SphereUnknown,
    Melonic,
}

impl Class {
    pub const ALL: [Class; 7] = [
        Class::All,
        Class::PropertyP,
        Class::Manifold,
        Class::ManifoldUnknown,
        Class::SphereYes,
        Class::SphereUnknown,
        Class::Melonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::All => "all",
            Class::PropertyP => "propertyP",
            Class::Manifold => "manifold",
            Class::ManifoldUnknown => "manifold_unknown",
            Class::SphereYes => "sphere_yes",
            Class::SphereUnknown => "sphere_unknown",
            Class::Melonic => "melonic",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set of classes a graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Classes(u8);

impl Classes {
    pub fn contains(self, c: Class) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn insert(&mut self, c: Class) {
        self.0 |= c.bit();
    }

    /// The most specific class, used to name emitted files.
    pub fn finest(self) -> Class {
        [
            Class::Melonic,
            Class::SphereYes,
            Class::SphereUnknown,
            Class::Manifold,
            Class::ManifoldUnknown,
            Class::PropertyP,
        ]
        .into_iter()
        .find(|&c| self.contains(c))
        .unwrap_or(Class::All)
    }
}

/// Full classification. Sphere and melonic classes only apply to connected
/// graphs.
pub fn classify(g: &ColourfulGraph) -> Classes {
    let mut out = Classes::default();
    out.insert(Class::All);
    if has_property_p(g) {
        out.insert(Class::PropertyP);
    }
    match is_manifold(g).status {
        Status::Yes => out.insert(Class::Manifold),
        Status::Unknown => out.insert(Class::ManifoldUnknown),
        Status::No => {}
    }
    if g.is_connected() {
        if matches!(find_melonic_trace(g), Ok(Some(_))) {
            out.insert(Class::Melonic);
        }
        match is_sphere(g).map(|v| v.status) {
            Ok(Status::Yes) => out.insert(Class::SphereYes),
            Ok(Status::Unknown) => out.insert(Class::SphereUnknown),
            _ => {}
        }
    }
    out
}

/// Counts per class, in [`Class::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassCounts(pub [BigUint; 7]);

impl ClassCounts {
    pub fn get(&self, c: Class) -> &BigUint {
        &self.0[c as usize]
    }

    fn add(&mut self, classes: Classes, amount: &BigUint) {
        for c in Class::ALL {
            if classes.contains(c) {
                self.0[c as usize] += amount;
            }
        }
    }

    fn merge(&mut self, other: &ClassCounts) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub d: usize,
    pub n: usize,
    pub tuples: u128,
    /// One count per tuple over the canonical white set.
    pub canonical: ClassCounts,
    /// Counts of graphs on the labelled vertex set `[1..n]`.
    pub labelled: ClassCounts,
}

impl CensusReport {
    /// `class,count` rows: canonical counts, then labelled counts with a
    /// `labelled_` prefix.
    pub fn rows(&self) -> String {
        let mut out = String::new();
        for c in Class::ALL {
            out += &format!("{},{}\n", c, self.canonical.get(c));
        }
        for c in Class::ALL {
            out += &format!("labelled_{},{}\n", c, self.labelled.get(c));
        }
        out
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "census d={} n={} tuples={}\n{:<18}{:>14}{:>24}\n",
            self.d, self.n, self.tuples, "class", "canonical", "labelled"
        );
        for c in Class::ALL {
            out += &format!(
                "{:<18}{:>14}{:>24}\n",
                c.name(),
                self.canonical.get(c).to_string(),
                self.labelled.get(c).to_string()
            );
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOptions {
    pub budget: u128,
    /// Writes every graph as `<finest class>-<tuple index>.cgf`.
    pub emit_dir: Option<PathBuf>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: DEFAULT_BUDGET,
            emit_dir: None,
        }
    }
}

/// `(n/2)!^(d+1)`.
pub fn tuple_count(d: usize, n: usize) -> BigUint {
    let f: BigUint = (1..=n / 2).map(BigUint::from).product();
    f.pow(d as u32 + 1)
}

fn check_shape(d: usize, n: usize) -> Result<(), CensusError> {
    if n == 0 || n % 2 == 1 {
        return Err(CensusError::OddN(n));
    }
    if d == 0 || d + 1 >= crate::colours::MAX_COLOUR {
        return Err(CensusError::InvalidDimension(d));
    }
    Ok(())
}

fn within_budget(tuples: BigUint, budget: u128) -> Result<u128, CensusError> {
    match u128::try_from(&tuples) {
        Ok(t) if t <= budget => Ok(t),
        _ => Err(CensusError::BudgetExceeded { tuples, budget }),
    }
}

/// Visits every tuple, sharded by the first bijection. Returns one
/// accumulator per shard, in shard order.
pub(crate) fn par_tuples<T, I, V>(d: usize, n: usize, budget: u128, init: I, visit: V) -> Result<Vec<T>, CensusError>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, u128, &ColourfulGraph) + Sync,
{
    check_shape(d, n)?;
    within_budget(tuple_count(d, n), budget)?;
    let perms = perm::all_permutations(n / 2);
    let per_shard = (perms.len() as u128).pow(d as u32);
    Ok(perms
        .par_iter()
        .enumerate()
        .map(|(s, first)| {
            let mut acc = init();
            let mut idx = vec![0usize; d];
            let mut offset = 0u128;
            loop {
                let mut matchings = Vec::with_capacity(d + 1);
                matchings.push(first.clone());
                matchings.extend(idx.iter().map(|&i| perms[i].clone()));
                let g = ColourfulGraph::from_matchings(d, matchings).expect("bijections");
                visit(&mut acc, s as u128 * per_shard + offset, &g);
                offset += 1;
                // Odometer, last bijection fastest.
                let mut pos = d;
                loop {
                    if pos == 0 {
                        return acc;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < perms.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        })
        .collect())
}

#[derive(Default)]
struct Tally {
    canonical: ClassCounts,
    /// `Σ 2^(n/2 - c)` per class.
    weighted: ClassCounts,
    error: Option<String>,
}

/// Enumerates and classifies every graph over the canonical white set.
pub fn enumerate<C>(d: usize, n: usize, classifier: &C, options: &CensusOptions) -> Result<CensusReport, CensusError>
where
    C: Fn(&ColourfulGraph) -> Classes + Sync,
{
    if let Some(dir) = &options.emit_dir {
        std::fs::create_dir_all(dir).map_err(|e| CensusError::Io(e.to_string()))?;
    }
    let half = n / 2;
    let one = BigUint::from(1u32);
    let shards = par_tuples(d, n, options.budget, Tally::default, |t, index, g| {
        let classes = classifier(g);
        t.canonical.add(classes, &one);
        let c = g.component_count(g.colours());
        t.weighted.add(classes, &(BigUint::from(1u32) << (half - c)));
        if let (Some(dir), None) = (&options.emit_dir, &t.error) {
            let path = dir.join(format!("{}-{}.cgf", classes.finest(), index));
            if let Err(e) = std::fs::write(&path, to_cgf(g)) {
                t.error = Some(format!("{}: {e}", path.display()));
            }
        }
    })?;
    let mut canonical = ClassCounts::default();
    let mut weighted = ClassCounts::default();
    for s in &shards {
        if let Some(e) = &s.error {
            return Err(CensusError::Io(e.clone()));
        }
        canonical.merge(&s.canonical);
        weighted.merge(&s.weighted);
    }
    let binom = binomial(n, half);
    let denom = BigUint::from(1u32) << half;
    let mut labelled = ClassCounts::default();
    for (l, w) in labelled.0.iter_mut().zip(&weighted.0) {
        let num = &binom * w;
        debug_assert_eq!(&num % &denom, BigUint::default());
        *l = num / &denom;
    }
    Ok(CensusReport {
        d,
        n,
        tuples: within_budget(tuple_count(d, n), options.budget)?,
        canonical,
        labelled,
    })
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Every perfect matching of `K_n` on `0..n`, as sorted pair lists.
pub fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let u = free.remove(0);
        for i in 0..free.len() {
            let v = free.remove(i);
            cur.push((u, v));
            go(free, cur, out);
            cur.pop();
            free.insert(i, v);
        }
        free.insert(0, u);
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    }
    out
}

fn double_factorial_odd(n: usize) -> BigUint {
    (1..n).step_by(2).map(BigUint::from).product()
}

/// Slow oracle: walks every `(d+1)`-tuple of perfect matchings of `K_n`,
/// keeps the bipartite ones and classifies them. Returns labelled counts.
pub fn enumerate_labelled<C>(d: usize, n: usize, classifier: &C, budget: u128) -> Result<ClassCounts, CensusError>
where
    C: Fn(&ColourfulGraph) -> Classes + Sync,
{
    check_shape(d, n)?;
    within_budget(double_factorial_odd(n).pow(d as u32 + 1), budget)?;
    let ms = perfect_matchings(n);
    let one = BigUint::from(1u32);
    let shards: Vec<ClassCounts> = ms
        .par_iter()
        .map(|first| {
            let mut counts = ClassCounts::default();
            let mut idx = vec![0usize; d];
            loop {
                let mut edges = Vec::with_capacity(n / 2 * (d + 1));
                edges.extend(first.iter().map(|&(u, v)| (u, v, 1)));
                for (c, &i) in idx.iter().enumerate() {
                    edges.extend(ms[i].iter().map(|&(u, v)| (u, v, c + 2)));
                }
                if let Ok((g, _)) = ColourfulGraph::from_labelled_edges(d, n, &edges) {
                    counts.add(classifier(&g), &one);
                }
                let mut pos = d;
                loop {
                    if pos == 0 {
                        return counts;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < ms.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        })
        .collect();
    let mut total = ClassCounts::default();
    for s in &shards {
        total.merge(s);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dipole_census() {
        let r = enumerate(3, 2, &classify, &CensusOptions::default()).unwrap();
        for c in Class::ALL {
            let expected = if matches!(c, Class::ManifoldUnknown | Class::SphereUnknown) { 0u32 } else { 1 };
            assert_eq!(r.canonical.get(c), &BigUint::from(expected), "{c}");
            assert_eq!(r.labelled.get(c), &BigUint::from(expected), "{c}");
        }
    }

    #[test]
    fn budget_and_shape_errors() {
        let opts = CensusOptions {
            budget: 10,
            emit_dir: None,
        };
        assert!(matches!(
            enumerate(3, 6, &classify, &opts),
            Err(CensusError::BudgetExceeded { .. })
        ));
        assert_eq!(enumerate(3, 5, &classify, &opts), Err(CensusError::OddN(5)));
    }

    #[test]
    fn matching_counts() {
        assert_eq!(perfect_matchings(2).len(), 1);
        assert_eq!(perfect_matchings(6).len(), 15);
        assert_eq!(perfect_matchings(8).len(), 105);
        assert_eq!(binomial(8, 4), BigUint::from(70u32));
    }

    #[test]
    fn finest_class_order() {
        let mut c = Classes::default();
        c.insert(Class::All);
        assert_eq!(c.finest(), Class::All);
        c.insert(Class::Manifold);
        c.insert(Class::SphereYes);
        assert_eq!(c.finest(), Class::SphereYes);
    }

    #[test]
    fn shards_cover_every_index_once() {
        let shards = par_tuples(2, 4, DEFAULT_BUDGET, Vec::new, |v: &mut Vec<u128>, i, _| v.push(i)).unwrap();
        let mut all: Vec<u128> = shards.into_iter().flatten().collect();
        all.sort_unstable();
        assert_eq!(all, (0..8).collect::<Vec<_>>());
    }
}
