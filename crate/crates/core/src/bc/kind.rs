use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::ring::{Element, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InverseError {
    #[error("internal inconsistency in {procedure}: {detail}")]
    Inconsistent { procedure: &'static str, detail: String },
    #[error("invalid equation set `{0}`: expected a nonempty subset of {{1,2,3,4}}")]
    InvalidDelta(String),
    #[error("unknown inverse kind `{0}`")]
    UnknownKind(String),
}

pub(crate) fn inconsistent(procedure: &'static str, detail: impl Into<String>) -> InverseError {
    InverseError::Inconsistent { procedure, detail: detail.into() }
}

/// Nonempty subset of the four Penrose equations
/// `(1) aya = a`, `(2) yay = y`, `(3) (ay)* = ay`, `(4) (ya)* = ya`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeltaSet(u8);

impl DeltaSet {
    pub const ALL: DeltaSet = DeltaSet(0b1111);

    pub fn new(equations: &[u8]) -> Result<Self, InverseError> {
        let mut bits = 0u8;
        for &e in equations {
            if !(1..=4).contains(&e) {
                return Err(InverseError::InvalidDelta(format!("{equations:?}")));
            }
            bits |= 1 << (e - 1);
        }
        if bits == 0 {
            return Err(InverseError::InvalidDelta("{}".into()));
        }
        Ok(DeltaSet(bits))
    }

    pub fn contains(self, equation: u8) -> bool {
        (1..=4).contains(&equation) && self.0 & (1 << (equation - 1)) != 0
    }

    pub fn equations(self) -> impl Iterator<Item = u8> {
        (1..=4u8).filter(move |&e| self.contains(e))
    }
}

impl fmt::Display for DeltaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.equations().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for DeltaSet {
    type Err = InverseError;

    /// Accepts `1,3`, `{1,3}` or `13`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut eqs = Vec::new();
        for ch in inner.chars() {
            match ch {
                '1'..='4' => eqs.push(ch as u8 - b'0'),
                ',' | ' ' => {}
                _ => return Err(InverseError::InvalidDelta(s.to_string())),
            }
        }
        DeltaSet::new(&eqs).map_err(|_| InverseError::InvalidDelta(s.to_string()))
    }
}

/// Every generalized-inverse notion the engine decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseKind {
    LeftBc,
    RightBc,
    RightAnnBc,
    LeftAnnBc,
    TwoSidedBc,
    HybridBc,
    AnnBc,
    MaryLeft,
    MaryRight,
    Mary,
    Delta(DeltaSet),
    MoorePenrose,
    Group,
    Drazin,
}

impl InverseKind {
    pub const NAMES: [&'static str; 14] = [
        "left_bc",
        "right_bc",
        "right_ann_bc",
        "left_ann_bc",
        "two_sided_bc",
        "hybrid_bc",
        "ann_bc",
        "mary_left",
        "mary_right",
        "mary",
        "delta",
        "moore_penrose",
        "group",
        "drazin",
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::LeftBc => "left_bc",
            InverseKind::RightBc => "right_bc",
            InverseKind::RightAnnBc => "right_ann_bc",
            InverseKind::LeftAnnBc => "left_ann_bc",
            InverseKind::TwoSidedBc => "two_sided_bc",
            InverseKind::HybridBc => "hybrid_bc",
            InverseKind::AnnBc => "ann_bc",
            InverseKind::MaryLeft => "mary_left",
            InverseKind::MaryRight => "mary_right",
            InverseKind::Mary => "mary",
            InverseKind::Delta(_) => "delta",
            InverseKind::MoorePenrose => "moore_penrose",
            InverseKind::Group => "group",
            InverseKind::Drazin => "drazin",
        }
    }

    /// Parses a kind name; `delta` needs its equation set supplied separately.
    pub fn parse(name: &str, delta: Option<DeltaSet>) -> Result<Self, InverseError> {
        Ok(match name.trim() {
            "left_bc" => InverseKind::LeftBc,
            "right_bc" => InverseKind::RightBc,
            "right_ann_bc" => InverseKind::RightAnnBc,
            "left_ann_bc" => InverseKind::LeftAnnBc,
            "two_sided_bc" => InverseKind::TwoSidedBc,
            "hybrid_bc" => InverseKind::HybridBc,
            "ann_bc" => InverseKind::AnnBc,
            "mary_left" => InverseKind::MaryLeft,
            "mary_right" => InverseKind::MaryRight,
            "mary" => InverseKind::Mary,
            "delta" => InverseKind::Delta(
                delta.ok_or_else(|| InverseError::InvalidDelta("missing".into()))?,
            ),
            "moore_penrose" => InverseKind::MoorePenrose,
            "group" => InverseKind::Group,
            "drazin" => InverseKind::Drazin,
            other => return Err(InverseError::UnknownKind(other.to_string())),
        })
    }

    /// Kinds parameterized by a pair `(b, c)`.
    pub fn takes_bc(self) -> bool {
        matches!(
            self,
            InverseKind::LeftBc
                | InverseKind::RightBc
                | InverseKind::RightAnnBc
                | InverseKind::LeftAnnBc
                | InverseKind::TwoSidedBc
                | InverseKind::HybridBc
                | InverseKind::AnnBc
        )
    }

    /// Kinds parameterized by a single element `d`.
    pub fn takes_d(self) -> bool {
        matches!(self, InverseKind::MaryLeft | InverseKind::MaryRight | InverseKind::Mary)
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InverseKind::Delta(set) => write!(f, "delta{set}"),
            other => f.write_str(other.name()),
        }
    }
}

/// A product equation `factors[0]·factors[1]·… = equals` that backs one defining
/// condition of a witness, with the auxiliary elements it introduces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub equation: &'static str,
    pub aux: Vec<(&'static str, Element)>,
    pub factors: Vec<Element>,
    pub equals: Element,
}

impl Certificate {
    pub fn new(
        equation: &'static str,
        aux: &[(&'static str, Element)],
        factors: &[Element],
        equals: Element,
    ) -> Self {
        Certificate { equation, aux: aux.to_vec(), factors: factors.to_vec(), equals }
    }

    pub fn holds(&self, ring: &Ring) -> bool {
        ring.product(&self.factors) == self.equals
    }
}

/// An inverse `y` of `a` of the given kind, with the inputs it was computed for.
///
/// For kinds without a `(b, c)` pair the fields hold the pair the kind reduces to:
/// `(d, d)` for Mary inverses, `(a*, a*)` for Moore–Penrose, `(a^k, a^k)` for
/// Drazin/group (with `index = k`) and `(a, a)` for δ-inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: InverseKind,
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub y: Element,
    pub index: Option<u32>,
    pub certificate: Vec<Certificate>,
}

impl Witness {
    /// Re-evaluates every certificate equation and the kind's full definition.
    pub fn recheck(&self, ring: &Ring) -> bool {
        self.certificate.iter().all(|c| c.holds(ring))
            && super::definitions::satisfies(ring, self.kind, self.a, self.b, self.c, self.y)
    }

    pub fn to_json(&self, ring: &Ring) -> WitnessJson {
        WitnessJson {
            kind: self.kind.to_string(),
            y: ring.format_element(self.y),
            index: self.index,
            certificate: self
                .certificate
                .iter()
                .map(|c| CertificateJson {
                    equation: c.equation.to_string(),
                    aux: c
                        .aux
                        .iter()
                        .map(|(name, e)| (name.to_string(), ring.format_element(*e)))
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub equation: String,
    pub aux: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub kind: String,
    pub y: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u32>,
    pub certificate: Vec<CertificateJson>,
}
