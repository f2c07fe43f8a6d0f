use std::fmt;

use crate::colours::ColourSet;

use super::dipole::DipoleMove;
use super::homology::BettiVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        })
    }
}

/// Evidence attached to a verdict. Vertex ids are 1-based in printed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Dipole removals reducing the graph to the 2-vertex dipole.
    MelonicTrace(Vec<DipoleMove>),
    /// A residue of `G_I` (identified by its smallest vertex) whose canonical
    /// embedding has positive genus.
    Genus {
        colours: ColourSet,
        min_vertex: usize,
        genus: usize,
    },
    /// Rational Betti numbers of a residue (or of the whole complex when
    /// `colours` is every colour and the graph is connected).
    Betti {
        colours: ColourSet,
        min_vertex: usize,
        betti: BettiVector,
    },
    /// The alternating cell count identity failed on `X(G_I)`.
    EulerPoincare {
        colours: ColourSet,
        alternating_sum: i64,
        expected: i64,
    },
    /// Every 3-coloured residue is planar; `residues` is how many were checked.
    PlanarResidues { residues: usize },
    /// Every component of every `d`-coloured residue reduced to a dipole.
    SphereLinks { links: usize, moves: usize },
    /// Dimension where the answer holds for every graph.
    Dimension { d: usize },
    /// The space is disconnected (`components` pieces).
    Disconnected { components: usize },
    /// No decision was reached.
    Inconclusive(String),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::MelonicTrace(moves) => {
                let m: Vec<String> = moves.iter().map(|m| m.to_string()).collect();
                write!(f, "trace: [{}]", m.join(" "))
            }
            Certificate::Genus {
                colours,
                min_vertex,
                genus,
            } => write!(f, "genus: ({colours}, {}, {genus})", min_vertex + 1),
            Certificate::Betti {
                colours,
                min_vertex,
                betti,
            } => write!(f, "betti: ({colours}, {}, {betti})", min_vertex + 1),
            Certificate::EulerPoincare {
                colours,
                alternating_sum,
                expected,
            } => write!(f, "euler-poincare: ({colours}, {alternating_sum} != {expected})"),
            Certificate::PlanarResidues { residues } => {
                write!(f, "planar-residues: {residues}")
            }
            Certificate::SphereLinks { links, moves } => {
                write!(f, "sphere-links: {links} links reduced in {moves} moves")
            }
            Certificate::Dimension { d } => write!(f, "dimension: {d}"),
            Certificate::Disconnected { components } => {
                write!(f, "disconnected: {components} components")
            }
            Certificate::Inconclusive(reason) => write!(f, "unknown: {reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyVerdict {
    pub status: Status,
    pub certificate: Certificate,
}

impl TopologyVerdict {
    pub fn yes(certificate: Certificate) -> Self {
        TopologyVerdict {
            status: Status::Yes,
            certificate,
        }
    }

    pub fn no(certificate: Certificate) -> Self {
        TopologyVerdict {
            status: Status::No,
            certificate,
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        TopologyVerdict {
            status: Status::Unknown,
            certificate: Certificate::Inconclusive(reason.into()),
        }
    }
}
