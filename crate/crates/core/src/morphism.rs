//! Morphisms between catalog monoids and the diagrams they form.
//!
//! Every morphism sends a basis key to a single basis key. A morphism
//! between monoids with different braidings lives over the coarser parameter
//! set, so images have their coefficients specialized accordingly.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{components_unchecked, Graph, VertexPartition};
use crate::key::BasisKey;
use crate::module::{linear_extend, Element, LinComb};
use crate::monoid::{Braiding, MonoidId};
use crate::poly::QtPoly;
use crate::vset::VertexSet;
use crate::enumerate::partition_edges;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MorphismId {
    /// `ℓ ↦ ℓ₁|ℓ₂|…|ℓ_n`.
    IotaLSSigma,
    IotaSSigmaSigma,
    /// Orient each edge from the earlier to the later vertex of `ℓ`.
    PiArrowL,
    /// Orient each edge from the earlier to the later block.
    PiArrowSSigma,
    /// `ℓ ↦ 1`.
    PiAbelianize,
    /// `C ↦ m_{π(C)}`.
    PiSigmaPi,
    PiSSigmaSPi,
    IotaSPiPi,
    /// `P_F ↦ p_{π_F}`.
    IotaFlPi,
    /// `m_π ↦ M_{F(π)}`.
    PhiPiFl,
    /// `m_π ↦ 1`.
    RhoSPiE,
    /// `1 ↦ M_∅`.
    IotaEFl,
    /// `O ↦ 1`.
    PiAoE,
}

impl MorphismId {
    pub const ALL: [MorphismId; 13] = [
        MorphismId::IotaLSSigma,
        MorphismId::IotaSSigmaSigma,
        MorphismId::PiArrowL,
        MorphismId::PiArrowSSigma,
        MorphismId::PiAbelianize,
        MorphismId::PiSigmaPi,
        MorphismId::PiSSigmaSPi,
        MorphismId::IotaSPiPi,
        MorphismId::IotaFlPi,
        MorphismId::PhiPiFl,
        MorphismId::RhoSPiE,
        MorphismId::IotaEFl,
        MorphismId::PiAoE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MorphismId::IotaLSSigma => "iota_L_SSigma",
            MorphismId::IotaSSigmaSigma => "iota_SSigma_Sigma",
            MorphismId::PiArrowL => "pi_arrow_L",
            MorphismId::PiArrowSSigma => "pi_arrow_SSigma",
            MorphismId::PiAbelianize => "pi_abelianize",
            MorphismId::PiSigmaPi => "pi_Sigma_Pi",
            MorphismId::PiSSigmaSPi => "pi_SSigma_SPi",
            MorphismId::IotaSPiPi => "iota_SPi_Pi",
            MorphismId::IotaFlPi => "iota_FL_Pi",
            MorphismId::PhiPiFl => "phi_Pi_FL",
            MorphismId::RhoSPiE => "rho_SPi_E",
            MorphismId::IotaEFl => "iota_E_FL",
            MorphismId::PiAoE => "pi_AO_E",
        }
    }

    pub fn domain(self) -> MonoidId {
        use MonoidId::*;
        match self {
            MorphismId::IotaLSSigma | MorphismId::PiArrowL | MorphismId::PiAbelianize => L,
            MorphismId::IotaSSigmaSigma | MorphismId::PiArrowSSigma | MorphismId::PiSSigmaSPi => SSigma,
            MorphismId::PiSigmaPi => Sigma,
            MorphismId::IotaSPiPi | MorphismId::RhoSPiE => SPiM,
            MorphismId::IotaFlPi => FlP,
            MorphismId::PhiPiFl => PiM,
            MorphismId::IotaEFl => E,
            MorphismId::PiAoE => AO,
        }
    }

    pub fn codomain(self) -> MonoidId {
        use MonoidId::*;
        match self {
            MorphismId::IotaLSSigma => SSigma,
            MorphismId::IotaSSigmaSigma => Sigma,
            MorphismId::PiArrowL | MorphismId::PiArrowSSigma => AO,
            MorphismId::PiAbelianize | MorphismId::RhoSPiE | MorphismId::PiAoE => E,
            MorphismId::PiSigmaPi | MorphismId::IotaSPiPi => PiM,
            MorphismId::PiSSigmaSPi => SPiM,
            MorphismId::IotaFlPi => PiP,
            MorphismId::PhiPiFl | MorphismId::IotaEFl => FlM,
        }
    }

    /// The parameter set the morphism is defined over.
    pub fn braiding(self) -> Braiding {
        self.domain().braiding().meet(self.codomain().braiding())
    }

    /// Image of a basis key of the domain on `G_v` (global indices).
    pub(crate) fn apply_raw(self, g: &Graph, v: VertexSet, k: &BasisKey) -> BasisKey {
        match (self, k) {
            (MorphismId::IotaLSSigma, BasisKey::LinearOrder(o)) => singleton_blocks(o),
            (MorphismId::IotaSSigmaSigma, BasisKey::SetComposition(_)) => k.clone(),
            (MorphismId::PiArrowL, BasisKey::LinearOrder(o)) => {
                let mut rank = [0usize; 64];
                for (i, &x) in o.iter().enumerate() {
                    rank[x as usize] = i;
                }
                orient_by_rank(g, v, &rank)
            }
            (MorphismId::PiArrowSSigma, BasisKey::SetComposition(c)) => {
                let mut rank = [0usize; 64];
                for (i, b) in c.iter().enumerate() {
                    for x in b.iter() {
                        rank[x] = i;
                    }
                }
                orient_by_rank(g, v, &rank)
            }
            (MorphismId::PiAbelianize, BasisKey::LinearOrder(_))
            | (MorphismId::RhoSPiE, BasisKey::SetPartitionM(_))
            | (MorphismId::PiAoE, BasisKey::AcyclicOrientation(_)) => BasisKey::Unit,
            (MorphismId::PiSigmaPi | MorphismId::PiSSigmaSPi, BasisKey::SetComposition(c)) => {
                BasisKey::SetPartitionM(VertexPartition::from_blocks(c.clone()))
            }
            (MorphismId::IotaSPiPi, BasisKey::SetPartitionM(_)) => k.clone(),
            (MorphismId::IotaFlPi, BasisKey::FlatP(f)) => BasisKey::SetPartitionP(components_unchecked(v, f)),
            (MorphismId::PhiPiFl, BasisKey::SetPartitionM(p)) => BasisKey::FlatM(partition_edges(g, p)),
            (MorphismId::IotaEFl, BasisKey::Unit) => BasisKey::FlatM(Vec::new()),
            _ => unreachable!("{} applied to a {:?} key", self.name(), k.kind()),
        }
    }

    /// The linear extension of the basis rule, restricted to `v`.
    /// Applies the morphism to an element of its domain.
    pub fn apply(self, x: &Element) -> Result<Element> {
        if x.monoid() != self.domain() {
            return Err(Error::Mismatch(format!(
                "{} expects an element of {}, got {}",
                self.name(),
                self.domain(),
                x.monoid()
            )));
        }
        let g = x.graph();
        let v = g.vertices();
        let (sq, st) = self.braiding().specialization();
        let out = linear_extend(x.terms(), |k| {
            Some(LinComb::single(self.apply_raw(g, v, k), QtPoly::one()))
        })?;
        Ok(Element::new(self.codomain(), g.clone(), out.specialize(sq, st)))
    }
}

fn singleton_blocks(o: &[u8]) -> BasisKey {
    BasisKey::SetComposition(o.iter().map(|&x| VertexSet::singleton(x as usize)).collect())
}

fn orient_by_rank(g: &Graph, v: VertexSet, rank: &[usize; 64]) -> BasisKey {
    let mut arcs: Vec<_> = g
        .edges_within(v)
        .into_iter()
        .map(|(a, b)| if rank[a as usize] < rank[b as usize] { (a, b) } else { (b, a) })
        .collect();
    arcs.sort_unstable();
    BasisKey::AcyclicOrientation(arcs)
}

impl fmt::Display for MorphismId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MorphismId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MorphismId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = MorphismId::ALL.iter().map(|m| m.name()).collect();
                Error::Unsupported(format!("unknown morphism `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

/// One edge of a diagram: a named morphism, or the direct inclusion of
/// linear orders into compositions that the first triangle compares against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Arrow {
    Named(MorphismId),
    IotaLSigma,
}

impl Arrow {
    fn domain(self) -> MonoidId {
        match self {
            Arrow::Named(m) => m.domain(),
            Arrow::IotaLSigma => MonoidId::L,
        }
    }

    fn codomain(self) -> MonoidId {
        match self {
            Arrow::Named(m) => m.codomain(),
            Arrow::IotaLSigma => MonoidId::Sigma,
        }
    }

    fn braiding(self) -> Braiding {
        self.domain().braiding().meet(self.codomain().braiding())
    }

    fn apply_raw(self, g: &Graph, v: VertexSet, k: &BasisKey) -> BasisKey {
        match (self, k) {
            (Arrow::Named(m), _) => m.apply_raw(g, v, k),
            (Arrow::IotaLSigma, BasisKey::LinearOrder(o)) => singleton_blocks(o),
            _ => unreachable!(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Arrow::Named(m) => m.name(),
            Arrow::IotaLSigma => "iota_L_Sigma",
        }
    }
}

/// A commuting diagram: two composable paths with the same endpoints.
/// Paths are listed in application order.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub name: &'static str,
    pub lhs: Vec<Arrow>,
    pub rhs: Vec<Arrow>,
}

impl Diagram {
    pub fn domain(&self) -> MonoidId {
        self.lhs[0].domain()
    }

    pub fn codomain(&self) -> MonoidId {
        self.lhs.last().unwrap().codomain()
    }

    /// The coarsest parameter set along either path.
    pub fn braiding(&self) -> Braiding {
        self.lhs.iter().chain(&self.rhs).fold(Braiding::QT, |b, a| b.meet(a.braiding()))
    }

    /// Applies a path to a basis key.
    pub fn run(path: &[Arrow], g: &Graph, v: VertexSet, k: &BasisKey) -> BasisKey {
        path.iter().fold(k.clone(), |acc, a| a.apply_raw(g, v, &acc))
    }
}

/// The catalog of diagrams that must commute.
pub fn diagrams() -> Vec<Diagram> {
    use Arrow::*;
    use MorphismId::*;
    vec![
        Diagram {
            name: "L->SSigma->Sigma",
            lhs: vec![Named(IotaLSSigma), Named(IotaSSigmaSigma)],
            rhs: vec![IotaLSigma],
        },
        Diagram {
            name: "L->SSigma->AO",
            lhs: vec![Named(IotaLSSigma), Named(PiArrowSSigma)],
            rhs: vec![Named(PiArrowL)],
        },
        Diagram {
            name: "L->AO->E",
            lhs: vec![Named(PiArrowL), Named(PiAoE)],
            rhs: vec![Named(PiAbelianize)],
        },
        Diagram {
            name: "SPi->Pi->FL",
            lhs: vec![Named(IotaSPiPi), Named(PhiPiFl)],
            rhs: vec![Named(RhoSPiE), Named(IotaEFl)],
        },
        Diagram {
            name: "SSigma->Sigma->Pi",
            lhs: vec![Named(IotaSSigmaSigma), Named(PiSigmaPi)],
            rhs: vec![Named(PiSSigmaSPi), Named(IotaSPiPi)],
        },
        Diagram {
            name: "SSigma->SPi->E",
            lhs: vec![Named(PiSSigmaSPi), Named(RhoSPiE)],
            rhs: vec![Named(PiArrowSSigma), Named(PiAoE)],
        },
        Diagram {
            name: "L->SSigma->SPi->E",
            lhs: vec![Named(IotaLSSigma), Named(PiSSigmaSPi), Named(RhoSPiE)],
            rhs: vec![Named(PiAbelianize)],
        },
    ]
}
