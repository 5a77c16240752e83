//! The order, chain, enriched order and enriched chain polytopes of a poset:
//! lattice points, facet systems, dilation counts and Ehrhart polynomials.

mod counting;
mod facets;
mod lattice;
mod points;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub(crate) use counting::interpolate_counts;
pub use counting::{
    central_symmetry_check, count_dilation, count_interior, dilation_points, ehrhart,
    reflexivity_check, verify_facet_system, FacetSystemReport,
};
pub(crate) use facets::extremal_poset;
pub use facets::{
    facet_count_formulas, facets, max_facet_bounds, max_facet_composition_value, scan_max_facets,
    FacetBounds, FacetCounts, MaxFacetScan,
};
pub use lattice::{affine_rank, integer_row_echelon, integer_span_check, rank};
pub use points::lattice_points;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PolytopeKind {
    /// Convex hull of filter indicator vectors.
    #[serde(rename = "order")]
    Order,
    /// Convex hull of antichain indicator vectors.
    #[serde(rename = "chain")]
    Chain,
    /// Signed filter vectors `e^ε_{min F} + e_{F \ min F}`.
    #[serde(rename = "eorder")]
    EnrichedOrder,
    /// Signed antichain vectors `e^ε_A`.
    #[serde(rename = "echain")]
    EnrichedChain,
    /// Ideal-indexed form `e^ε_{max I} + e_{I \ max I}`, i.e. the enriched
    /// order polytope of the dual poset.
    #[serde(rename = "eorder_dualform")]
    EnrichedOrderDual,
}

impl PolytopeKind {
    pub const ALL: [PolytopeKind; 5] = [
        PolytopeKind::Order,
        PolytopeKind::Chain,
        PolytopeKind::EnrichedOrder,
        PolytopeKind::EnrichedChain,
        PolytopeKind::EnrichedOrderDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolytopeKind::Order => "order",
            PolytopeKind::Chain => "chain",
            PolytopeKind::EnrichedOrder => "eorder",
            PolytopeKind::EnrichedChain => "echain",
            PolytopeKind::EnrichedOrderDual => "eorder_dualform",
        }
    }

    /// Enriched polytopes live in `[-1, 1]^n`, classical ones in `[0, 1]^n`.
    pub fn is_enriched(self) -> bool {
        !matches!(self, PolytopeKind::Order | PolytopeKind::Chain)
    }
}

impl fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolytopeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PolytopeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown polytope kind {s:?}")))
    }
}

/// A `(-1, 0, 1)`-vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedPoint(pub Vec<i8>);

impl SignedPoint {
    pub fn zero(n: usize) -> Self {
        SignedPoint(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i8] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        SignedPoint(self.0.iter().map(|&c| -c).collect())
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&c| c as i64).collect()
    }
}

impl fmt::Debug for SignedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The inequality `<normal, x> <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl Halfspace {
    pub fn new(normal: Vec<i64>, rhs: i64) -> Self {
        Halfspace { normal, rhs }
    }

    pub fn value(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.value(x) <= self.rhs
    }

    pub fn is_tight(&self, x: &[i64]) -> bool {
        self.value(x) == self.rhs
    }

    /// Divides out the gcd of the normal and the right-hand side.
    pub fn normalized(&self) -> Self {
        let g = self
            .normal
            .iter()
            .chain(std::iter::once(&self.rhs))
            .fold(0i64, |g, &a| num_integer::gcd(g, a));
        if g <= 1 {
            return self.clone();
        }
        Halfspace {
            normal: self.normal.iter().map(|a| a / g).collect(),
            rhs: self.rhs / g,
        }
    }
}
