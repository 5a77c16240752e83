use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::lattice::affine_rank;
use super::{facets, lattice_points, Halfspace, PolytopeKind, SignedPoint};
use crate::error::{Error, Result};
use crate::polynomial::RationalPolynomial;
use crate::poset::Poset;

/// Integer points of the box `[lo, hi]^n` with `<a, x> <= rhs_scale * b`
/// (strictly `<` when `strict`) for every halfspace.
struct BoxScan<'a> {
    halfspaces: &'a [Halfspace],
    n: usize,
    lo: i64,
    hi: i64,
    bound: Vec<i64>,
    strict: bool,
    // slack[h][k]: least value coordinates k.. can contribute to halfspace h
    slack: Vec<Vec<i64>>,
}

impl<'a> BoxScan<'a> {
    fn new(halfspaces: &'a [Halfspace], n: usize, lo: i64, hi: i64, scale: i64, strict: bool) -> Self {
        let slack = halfspaces
            .iter()
            .map(|h| {
                let mut s = vec![0; n + 1];
                for k in (0..n).rev() {
                    let a = h.normal[k];
                    s[k] = s[k + 1] + (a * lo).min(a * hi);
                }
                s
            })
            .collect();
        BoxScan {
            halfspaces,
            n,
            lo,
            hi,
            bound: halfspaces.iter().map(|h| h.rhs * scale).collect(),
            strict,
            slack,
        }
    }

    fn feasible(&self, partial: &[i64], k: usize) -> bool {
        (0..self.halfspaces.len()).all(|h| {
            let least = partial[h] + self.slack[h][k];
            if self.strict {
                least < self.bound[h]
            } else {
                least <= self.bound[h]
            }
        })
    }

    fn count_from(&self, k: usize, partial: &mut Vec<i64>) -> u64 {
        if k == self.n {
            return 1;
        }
        let mut total = 0;
        for v in self.lo..=self.hi {
            for (h, hs) in self.halfspaces.iter().enumerate() {
                partial[h] += hs.normal[k] * v;
            }
            if self.feasible(partial, k + 1) {
                total += self.count_from(k + 1, partial);
            }
            for (h, hs) in self.halfspaces.iter().enumerate() {
                partial[h] -= hs.normal[k] * v;
            }
        }
        total
    }

    fn count(&self) -> u64 {
        (self.lo..=self.hi)
            .into_par_iter()
            .map(|v| {
                let mut partial: Vec<i64> = self.halfspaces.iter().map(|h| h.normal[0] * v).collect();
                if self.feasible(&partial, 1) {
                    self.count_from(1, &mut partial)
                } else {
                    0
                }
            })
            .sum()
    }

    fn collect_from(&self, k: usize, x: &mut Vec<i64>, partial: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == self.n {
            out.push(x.clone());
            return;
        }
        for v in self.lo..=self.hi {
            for (h, hs) in self.halfspaces.iter().enumerate() {
                partial[h] += hs.normal[k] * v;
            }
            if self.feasible(partial, k + 1) {
                x.push(v);
                self.collect_from(k + 1, x, partial, out);
                x.pop();
            }
            for (h, hs) in self.halfspaces.iter().enumerate() {
                partial[h] -= hs.normal[k] * v;
            }
        }
    }

    fn collect(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut partial = vec![0; self.halfspaces.len()];
        self.collect_from(0, &mut Vec::with_capacity(self.n), &mut partial, &mut out);
        out
    }
}

fn box_for(kind: PolytopeKind, m: i64) -> (i64, i64) {
    if kind.is_enriched() {
        (-m, m)
    } else {
        (0, m)
    }
}

/// `|mP ∩ Z^n|`, scanning the bounding box against the facet system.
pub fn count_dilation(poset: &Poset, kind: PolytopeKind, m: u32) -> u64 {
    let hs = facets(poset, kind);
    let (lo, hi) = box_for(kind, m as i64);
    BoxScan::new(&hs, poset.n(), lo, hi, m as i64, false).count()
}

/// Lattice points strictly inside `mP`.
pub fn count_interior(poset: &Poset, kind: PolytopeKind, m: u32) -> u64 {
    let hs = facets(poset, kind);
    let (lo, hi) = box_for(kind, m as i64);
    BoxScan::new(&hs, poset.n(), lo, hi, m as i64, true).count()
}

/// Integer points of `mP`, in lexicographic order.
pub fn dilation_points(poset: &Poset, kind: PolytopeKind, m: u32) -> Vec<Vec<i64>> {
    let hs = facets(poset, kind);
    let (lo, hi) = box_for(kind, m as i64);
    BoxScan::new(&hs, poset.n(), lo, hi, m as i64, false).collect()
}

/// Interpolates dilation counts at `m = 0..=n` and checks the result at the
/// extra node `m = n + 1`, the degree and the constant term.
pub fn ehrhart(poset: &Poset, kind: PolytopeKind) -> Result<RationalPolynomial> {
    let n = poset.n() as u32;
    interpolate_counts(n, |m| count_dilation(poset, kind, m))
}

/// Interpolation through `count(0..=n)` guarded by `count(n + 1)`.
pub(crate) fn interpolate_counts(n: u32, count: impl Fn(u32) -> u64) -> Result<RationalPolynomial> {
    let nodes: Vec<(i64, BigInt)> = (0..=n).map(|m| (m as i64, BigInt::from(count(m)))).collect();
    let poly = RationalPolynomial::interpolate(&nodes)?;
    let guard = count(n + 1);
    if poly.eval_int(n as i64 + 1) != BigInt::from(guard).into() {
        return Err(Error::Internal(format!(
            "interpolant disagrees with the count {guard} at m = {}",
            n + 1
        )));
    }
    if poly.degree() != Some(n as usize) || !poly.coefficient(0).is_one() {
        return Err(Error::Internal(format!(
            "counting polynomial {poly} lacks degree {n} or constant term 1"
        )));
    }
    Ok(poly)
}

/// Whether the enriched polytope is reflexive: every facet reads
/// `<a, x> <= 1` with integral `a`, and the origin is the only interior
/// lattice point.
pub fn reflexivity_check(poset: &Poset, kind: PolytopeKind) -> Result<bool> {
    if !kind.is_enriched() {
        return Err(Error::UnsupportedKind(kind.name()));
    }
    let hs = facets(poset, kind);
    if hs.iter().any(|h| h.rhs != 1) {
        return Ok(false);
    }
    let interior = BoxScan::new(&hs, poset.n(), -1, 1, 1, true).collect();
    Ok(interior == vec![vec![0; poset.n()]])
}

pub fn central_symmetry_check(points: &[SignedPoint]) -> bool {
    let set: BTreeSet<&SignedPoint> = points.iter().collect();
    points.iter().all(|p| set.contains(&p.negated()))
}

/// Outcome of checking a facet system against the vertex description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetSystemReport {
    pub kind: PolytopeKind,
    pub facet_count: usize,
    pub point_count: usize,
    /// Every lattice point satisfies every inequality.
    pub points_satisfy: bool,
    /// Indices of inequalities whose tight points span less than a hyperplane.
    pub non_facets: Vec<usize>,
    /// The integer solutions in `[-1, 1]^n` are exactly the lattice points.
    pub box_points_match: bool,
    /// The lattice points affinely span `R^n`.
    pub full_dimensional: bool,
}

impl FacetSystemReport {
    pub fn passed(&self) -> bool {
        self.points_satisfy && self.non_facets.is_empty() && self.box_points_match && self.full_dimensional
    }
}

pub fn verify_facet_system(poset: &Poset, kind: PolytopeKind) -> FacetSystemReport {
    let n = poset.n();
    let hs = facets(poset, kind);
    let points: Vec<Vec<i64>> = lattice_points(poset, kind).iter().map(SignedPoint::as_i64).collect();
    let points_satisfy = points.iter().all(|p| hs.iter().all(|h| h.contains(p)));
    let non_facets = hs
        .iter()
        .enumerate()
        .filter(|(_, h)| {
            let tight: Vec<Vec<i64>> = points.iter().filter(|p| h.is_tight(p)).cloned().collect();
            affine_rank(&tight) != Some(n - 1)
        })
        .map(|(k, _)| k)
        .collect();
    let from_h = BoxScan::new(&hs, n, -1, 1, 1, false).collect();
    FacetSystemReport {
        kind,
        facet_count: hs.len(),
        point_count: points.len(),
        points_satisfy,
        non_facets,
        box_points_match: from_h == points,
        full_dimensional: affine_rank(&points) == Some(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::enumerate_posets;

    // At m = 1 the H-count must equal the size of the V-list.
    #[test]
    fn m1_count_matches_vertex_count() {
        for p in enumerate_posets(3).unwrap() {
            for kind in PolytopeKind::ALL {
                assert_eq!(
                    count_dilation(&p, kind, 1) as usize,
                    lattice_points(&p, kind).len(),
                    "{p:?} {kind}"
                );
            }
        }
    }

    #[test]
    fn two_chain_dilation() {
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(count_dilation(&c2, PolytopeKind::EnrichedOrder, 2), 13);
        let pts = dilation_points(&c2, PolytopeKind::EnrichedOrder, 2);
        let expected: BTreeSet<Vec<i64>> = [
            [0, 0], [0, 1], [0, -1], [0, 2], [0, -2], [1, 1], [-1, 1],
            [1, 2], [-1, 2], [1, 0], [-1, 0], [2, 2], [-2, 2],
        ]
        .iter()
        .map(|c| c.to_vec())
        .collect();
        assert_eq!(pts.into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn zero_dilation_is_one_point() {
        let p = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        for kind in PolytopeKind::ALL {
            assert_eq!(count_dilation(&p, kind, 0), 1);
        }
    }

    #[test]
    fn ehrhart_examples() {
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(
            ehrhart(&c2, PolytopeKind::EnrichedOrder).unwrap(),
            RationalPolynomial::from_integers(&[1, 2, 2])
        );
        // (m+1)^3
        let a3 = Poset::antichain(3).unwrap();
        assert_eq!(
            ehrhart(&a3, PolytopeKind::Order).unwrap(),
            RationalPolynomial::from_integers(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn reflexivity_guards_kind() {
        let p = Poset::antichain(1).unwrap();
        assert!(reflexivity_check(&p, PolytopeKind::EnrichedOrder).unwrap());
        assert_eq!(
            reflexivity_check(&p, PolytopeKind::Order),
            Err(Error::UnsupportedKind("order"))
        );
    }

    #[test]
    fn symmetry_examples() {
        let a = Poset::antichain(2).unwrap();
        let c = Poset::chain(2).unwrap();
        assert!(central_symmetry_check(&lattice_points(&a, PolytopeKind::EnrichedOrder)));
        assert!(!central_symmetry_check(&lattice_points(&c, PolytopeKind::EnrichedOrder)));
        assert!(central_symmetry_check(&lattice_points(&c, PolytopeKind::EnrichedChain)));
        assert!(central_symmetry_check(&[SignedPoint(vec![-1]), SignedPoint(vec![0]), SignedPoint(vec![1])]));
    }

    #[test]
    fn facet_systems_small() {
        for p in enumerate_posets(3).unwrap() {
            for kind in PolytopeKind::ALL {
                let r = verify_facet_system(&p, kind);
                assert!(r.passed(), "{p:?} {r:?}");
            }
        }
        let square = verify_facet_system(&Poset::antichain(2).unwrap(), PolytopeKind::Chain);
        assert_eq!(square.facet_count, 4);
    }
}
