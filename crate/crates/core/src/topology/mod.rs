//! Sphere and manifold recognition.
//!
//! Verdicts are three-valued. `Yes` and `No` always carry a certificate that
//! can be checked independently; `Unknown` is returned whenever the
//! available criteria only give one-way implications.
//!
//! * `d <= 2`: every space is a manifold; spheres are recognised exactly by
//!   the genus for `d = 2`.
//! * `d = 3`: a space is a manifold iff every 3-coloured residue is planar
//!   (vertex links are the surfaces dual to those residues).
//! * `d >= 4`: `Yes` needs every vertex link reduced to a dipole; `No`
//!   needs a residue that is not a rational homology sphere.

mod dipole;
mod homology;
mod lemmas;
pub mod linalg;
mod verdict;

pub use dipole::{
    find_dipoles, find_melonic_trace, melonic_reduce, melonic_search, remove_dipole, DipoleMove,
    ReductionTrace, SearchLimits, SearchOutcome,
};
pub use homology::{betti_fast, betti_numbers, betti_numbers_mod_p, BettiVector, BoundaryMatrix, Cell, OrderComplex};
pub use lemmas::{euler_poincare_check, euler_poincare_sums, lemma1_witness, lemma2_witness, LemmaWitness};
pub use verdict::{Certificate, Status, TopologyVerdict};

use crate::colours::ColourSet;
use crate::genus::{embedded_residues, find_nonplanar_residue};
use crate::graph::{ColourfulGraph, GraphError};
use crate::residues::residues_unchecked;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid dipole move {0}")]
    InvalidMove(DipoleMove),
    #[error("Euler-Poincaré identity needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("expected a colour set of size {expected}, got {found}")]
    WrongColourCount { expected: usize, found: usize },
}

/// Order complex of the face poset of `X(G_I)`.
pub fn order_complex(g: &ColourfulGraph, colours: ColourSet) -> Result<OrderComplex, TopologyError> {
    g.check_colours(colours)?;
    if colours.is_empty() {
        return Err(TopologyError::WrongColourCount {
            expected: 1,
            found: 0,
        });
    }
    Ok(OrderComplex::new(g, colours))
}

/// Whether the residue `component` of `G_I` triangulates a rational homology
/// sphere of dimension `|I| - 1`. Exact.
pub fn is_rational_homology_sphere(
    g: &ColourfulGraph,
    colours: ColourSet,
    component: &[usize],
) -> Result<TopologyVerdict, TopologyError> {
    g.check_colours(colours)?;
    if colours.is_empty() {
        return Err(TopologyError::WrongColourCount {
            expected: 1,
            found: 0,
        });
    }
    let mut comp = component.to_vec();
    comp.sort_unstable();
    comp.dedup();
    if comp.is_empty() || comp[comp.len() - 1] >= g.n() {
        return Err(GraphError::NotAComponent.into());
    }
    let p = residues_unchecked(g, colours);
    if p.components()[p.component_of(comp[0])] != comp {
        return Err(GraphError::NotAComponent.into());
    }
    match colours.len() {
        // A single edge is a pair of points; a bicoloured cycle is a circle.
        1 | 2 => Ok(TopologyVerdict::yes(Certificate::Dimension {
            d: colours.len() - 1,
        })),
        _ => {
            let h = g.residue_graph(colours, &comp)?;
            let betti = betti_fast(&h, h.colours());
            let cert = Certificate::Betti {
                colours,
                min_vertex: comp[0],
                betti: betti.clone(),
            };
            Ok(if betti.is_sphere() {
                TopologyVerdict::yes(cert)
            } else {
                TopologyVerdict::no(cert)
            })
        }
    }
}

/// Manifold recognition (exact for `d <= 3`).
pub fn is_manifold(g: &ColourfulGraph) -> TopologyVerdict {
    let d = g.d();
    if d <= 2 {
        return TopologyVerdict::yes(Certificate::Dimension { d });
    }
    if let Some(r) = find_nonplanar_residue(g) {
        return TopologyVerdict::no(Certificate::Genus {
            colours: ColourSet::from_colours(r.colours),
            min_vertex: r.min_vertex(),
            genus: r.genus,
        });
    }
    if d == 3 {
        let residues = g
            .colours()
            .subsets_of_size(3)
            .map(|i| g.component_count(i))
            .sum();
        return TopologyVerdict::yes(Certificate::PlanarResidues { residues });
    }

    // Even-dimensional residue complexes must satisfy the Euler-Poincaré
    // identity if the space is a manifold.
    for size in (3..=d).step_by(2) {
        for i in g.colours().subsets_of_size(size) {
            let (alternating_sum, expected) = euler_poincare_sums(g, i);
            if alternating_sum != expected {
                return TopologyVerdict::no(Certificate::EulerPoincare {
                    colours: i,
                    alternating_sum,
                    expected,
                });
            }
        }
    }

    if let Some(cert) = certify_sphere_links(g) {
        return TopologyVerdict::yes(cert);
    }

    for size in 4..=d {
        for i in g.colours().subsets_of_size(size) {
            let p = residues_unchecked(g, i);
            for comp in p.components() {
                let v = is_rational_homology_sphere(g, i, comp).expect("component of residue");
                if v.status == Status::No {
                    return v;
                }
            }
        }
    }
    TopologyVerdict::unknown("vertex links are rational homology spheres but not all reduce to a dipole")
}

/// Reduces every component of every `d`-coloured residue to a dipole.
fn certify_sphere_links(g: &ColourfulGraph) -> Option<Certificate> {
    let mut links = 0;
    let mut moves = 0;
    for c in 1..=g.colour_count() {
        let i = g.colours().without(c);
        let p = residues_unchecked(g, i);
        for comp in p.components() {
            let h = g.residue_graph(i, comp).ok()?;
            let trace = find_melonic_trace(&h).ok()??;
            links += 1;
            moves += trace.moves.len();
        }
    }
    Some(Certificate::SphereLinks { links, moves })
}

/// Sphere recognition for connected graphs (exact for `d <= 2`).
pub fn is_sphere(g: &ColourfulGraph) -> Result<TopologyVerdict, TopologyError> {
    if !g.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    match g.d() {
        1 => return Ok(TopologyVerdict::yes(Certificate::Dimension { d: 1 })),
        2 => {
            let r = embedded_residues(g, g.colours())?.remove(0);
            return Ok(if r.genus == 0 {
                TopologyVerdict::yes(Certificate::PlanarResidues { residues: 1 })
            } else {
                TopologyVerdict::no(Certificate::Genus {
                    colours: g.colours(),
                    min_vertex: 0,
                    genus: r.genus,
                })
            });
        }
        _ => {}
    }
    if let Some(trace) = find_melonic_trace(g)? {
        return Ok(TopologyVerdict::yes(Certificate::MelonicTrace(trace.moves)));
    }
    let manifold = is_manifold(g);
    if manifold.status == Status::No {
        return Ok(manifold);
    }
    let betti = betti_fast(g, g.colours());
    if !betti.is_sphere() {
        return Ok(TopologyVerdict::no(Certificate::Betti {
            colours: g.colours(),
            min_vertex: 0,
            betti,
        }));
    }
    Ok(TopologyVerdict::unknown(format!(
        "no dipole reduction found; manifold: {}; homology of a sphere",
        manifold.status
    )))
}
