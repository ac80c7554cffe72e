use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::VertexPartition;
use crate::key::{BasisKey, KeyKind};

/// The Hopf monoids of the catalog.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MonoidId {
    /// Linear orders.
    L,
    /// Acyclic orientations.
    AO,
    /// Set compositions.
    Sigma,
    /// Stable set compositions.
    SSigma,
    PiM,
    PiP,
    SPiM,
    SPiP,
    FlM,
    FlP,
    MatchM,
    MatchP,
    /// The exponential species, one basis vector per graph.
    E,
}

/// The braiding a monoid is a bimonoid for: `q^{e(G,S,T)} t^{e(Ḡ,S,T)}`,
/// `q^{e(G,S,T)}` (t set to 1), or the plain swap (q = t = 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Braiding {
    QT,
    Q,
    Plain,
}

impl Braiding {
    /// Which of `(q, t)` are specialized to 1.
    pub fn specialization(self) -> (bool, bool) {
        match self {
            Braiding::QT => (false, false),
            Braiding::Q => (false, true),
            Braiding::Plain => (true, true),
        }
    }

    /// The finer of two parameter sets, i.e. where both structures live.
    pub fn meet(self, other: Braiding) -> Braiding {
        self.max(other)
    }
}

impl MonoidId {
    pub const ALL: [MonoidId; 13] = [
        MonoidId::L,
        MonoidId::AO,
        MonoidId::Sigma,
        MonoidId::SSigma,
        MonoidId::PiM,
        MonoidId::PiP,
        MonoidId::SPiM,
        MonoidId::SPiP,
        MonoidId::FlM,
        MonoidId::FlP,
        MonoidId::MatchM,
        MonoidId::MatchP,
        MonoidId::E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MonoidId::L => "L",
            MonoidId::AO => "AO",
            MonoidId::Sigma => "Sigma",
            MonoidId::SSigma => "SSigma",
            MonoidId::PiM => "Pi_m",
            MonoidId::PiP => "Pi_p",
            MonoidId::SPiM => "SPi_m",
            MonoidId::SPiP => "SPi_p",
            MonoidId::FlM => "FL_M",
            MonoidId::FlP => "FL_P",
            MonoidId::MatchM => "Match_M",
            MonoidId::MatchP => "Match_P",
            MonoidId::E => "E",
        }
    }

    pub fn braiding(self) -> Braiding {
        match self {
            MonoidId::L | MonoidId::Sigma | MonoidId::SSigma => Braiding::QT,
            MonoidId::AO => Braiding::Q,
            _ => Braiding::Plain,
        }
    }

    pub fn key_kind(self) -> KeyKind {
        match self {
            MonoidId::L => KeyKind::LinearOrder,
            MonoidId::AO => KeyKind::AcyclicOrientation,
            MonoidId::Sigma | MonoidId::SSigma => KeyKind::SetComposition,
            MonoidId::PiM | MonoidId::SPiM => KeyKind::SetPartitionM,
            MonoidId::PiP | MonoidId::SPiP => KeyKind::SetPartitionP,
            MonoidId::FlM => KeyKind::FlatM,
            MonoidId::FlP => KeyKind::FlatP,
            MonoidId::MatchM => KeyKind::MatchingM,
            MonoidId::MatchP => KeyKind::MatchingP,
            MonoidId::E => KeyKind::Unit,
        }
    }

    /// The basis vector of the one-dimensional component on the empty graph.
    pub fn empty_key(self) -> BasisKey {
        match self.key_kind() {
            KeyKind::LinearOrder => BasisKey::LinearOrder(Vec::new()),
            KeyKind::AcyclicOrientation => BasisKey::AcyclicOrientation(Vec::new()),
            KeyKind::SetComposition => BasisKey::SetComposition(Vec::new()),
            KeyKind::SetPartitionM => BasisKey::SetPartitionM(VertexPartition::default()),
            KeyKind::SetPartitionP => BasisKey::SetPartitionP(VertexPartition::default()),
            KeyKind::FlatM => BasisKey::FlatM(Vec::new()),
            KeyKind::FlatP => BasisKey::FlatP(Vec::new()),
            KeyKind::MatchingM => BasisKey::MatchingM(Vec::new()),
            KeyKind::MatchingP => BasisKey::MatchingP(Vec::new()),
            KeyKind::Unit => BasisKey::Unit,
        }
    }

    /// Monoids whose product and coproduct are both (co)commutative for the
    /// plain braiding.
    pub fn is_commutative_cocommutative(self) -> bool {
        self.braiding() == Braiding::Plain
    }
}

impl fmt::Display for MonoidId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonoidId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MonoidId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("unknown monoid `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for m in MonoidId::ALL {
            assert_eq!(m.name().parse::<MonoidId>().unwrap(), m);
        }
        assert!("Pi".parse::<MonoidId>().is_err());
    }

    #[test]
    fn braiding_meet_is_coarsest_common() {
        assert_eq!(Braiding::QT.meet(Braiding::Q), Braiding::Q);
        assert_eq!(Braiding::Q.meet(Braiding::Plain), Braiding::Plain);
        assert_eq!(Braiding::QT.meet(Braiding::QT), Braiding::QT);
    }
}
