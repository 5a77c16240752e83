//! Order-preserving maps and left enriched P-partitions, counted by brute
//! force over a box of values.
//!
//! A left enriched P-partition is a map `f: P -> Z` such that for all
//! `x < y`: `|f(x)| <= |f(y)|`, and `|f(x)| = |f(y)|` forces `f(y) >= 0`.
//! The order polynomial counts maps into `{0, .., m}`, so with this
//! convention it equals the Ehrhart polynomial of the order polytope itself
//! (no shift by one).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{dilation_points, PolytopeKind};
use crate::polynomial::RationalPolynomial;
use crate::poset::Poset;

/// A map `P -> Z` given by its values `f(0), .., f(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LabeledMap(pub Vec<i64>);

fn left_pair_ok(fx: i64, fy: i64) -> bool {
    let (ax, ay) = (fx.abs(), fy.abs());
    ax < ay || (ax == ay && fy >= 0)
}

fn require_natural(poset: &Poset) -> Result<()> {
    if poset.is_naturally_labeled() {
        Ok(())
    } else {
        Err(Error::NotNaturallyLabeled)
    }
}

fn check_len(poset: &Poset, f: &LabeledMap) -> Result<()> {
    if f.0.len() == poset.n() {
        Ok(())
    } else {
        Err(Error::LengthMismatch { got: f.0.len(), expected: poset.n() })
    }
}

/// Conditions checked on every comparable pair.
pub fn is_left_enriched(f: &LabeledMap, poset: &Poset) -> Result<bool> {
    require_natural(poset)?;
    check_len(poset, f)?;
    let full = poset
        .relations()
        .iter()
        .all(|&(x, y)| left_pair_ok(f.0[x], f.0[y]));
    debug_assert_eq!(full, left_enriched_on_covers(f, poset));
    Ok(full)
}

/// Conditions checked on cover relations only. Agrees with
/// [`is_left_enriched`] because both conditions chain along covers.
pub fn left_enriched_on_covers(f: &LabeledMap, poset: &Poset) -> bool {
    poset
        .covers()
        .iter()
        .all(|&(x, y)| left_pair_ok(f.0[x], f.0[y]))
}

pub fn is_order_preserving(f: &LabeledMap, poset: &Poset) -> bool {
    poset.covers().iter().all(|&(x, y)| f.0[x] <= f.0[y])
}

// Assigns values in `order`; each cover is tested once both ends are set.
struct MapScan<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    lo: i64,
    hi: i64,
    pair_ok: fn(i64, i64) -> bool,
}

impl MapScan<'_> {
    fn walk(&self, k: usize, values: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if k == self.order.len() {
            visit(values);
            return;
        }
        let y = self.order[k];
        for v in self.lo..=self.hi {
            values[y] = v;
            // every element below y is already assigned
            let ok = self
                .poset
                .covers()
                .iter()
                .filter(|&&(_, top)| top == y)
                .all(|&(x, _)| (self.pair_ok)(values[x], v));
            if ok {
                self.walk(k + 1, values, visit);
            }
        }
    }

    fn for_each(&self, mut visit: impl FnMut(&[i64])) {
        let mut values = vec![0; self.poset.n()];
        self.walk(0, &mut values, &mut visit);
    }
}

fn left_scan(poset: &Poset, m: u32) -> MapScan<'_> {
    MapScan {
        poset,
        order: poset.linear_extension(),
        lo: -(m as i64),
        hi: m as i64,
        pair_ok: left_pair_ok,
    }
}

fn order_scan(poset: &Poset, m: u32) -> MapScan<'_> {
    MapScan {
        poset,
        order: poset.linear_extension(),
        lo: 0,
        hi: m as i64,
        pair_ok: |x, y| x <= y,
    }
}

/// Left enriched P-partitions with `|f(i)| <= m`, in lexicographic order.
pub fn left_enriched_maps(poset: &Poset, m: u32) -> Result<Vec<LabeledMap>> {
    require_natural(poset)?;
    let mut out = Vec::new();
    left_scan(poset, m).for_each(|v| out.push(LabeledMap(v.to_vec())));
    out.sort();
    Ok(out)
}

/// `Ω^(ℓ)_P(m)`.
pub fn count_left_enriched(poset: &Poset, m: u32) -> Result<u64> {
    require_natural(poset)?;
    let mut count = 0;
    left_scan(poset, m).for_each(|_| count += 1);
    Ok(count)
}

pub fn left_enriched_polynomial(poset: &Poset) -> Result<RationalPolynomial> {
    require_natural(poset)?;
    crate::geometry::interpolate_counts(poset.n() as u32, |m| {
        count_left_enriched(poset, m).expect("natural labeling checked above")
    })
}

/// `Ω_P(m)`: order-preserving maps into `{0, .., m}`.
pub fn count_order_preserving(poset: &Poset, m: u32) -> u64 {
    let mut count = 0;
    order_scan(poset, m).for_each(|_| count += 1);
    count
}

pub fn order_polynomial(poset: &Poset) -> Result<RationalPolynomial> {
    crate::geometry::interpolate_counts(poset.n() as u32, |m| count_order_preserving(poset, m))
}

/// Compares left enriched P-partitions bounded by `m` with the lattice
/// points of the `m`-th dilate of the enriched order polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetDifference {
    pub m: u32,
    pub partition_count: usize,
    pub polytope_count: usize,
    /// Partitions that are not lattice points of the dilate.
    pub only_partitions: Vec<LabeledMap>,
    /// Lattice points of the dilate that are not partitions.
    pub only_polytope: Vec<LabeledMap>,
}

impl SetDifference {
    pub fn sets_equal(&self) -> bool {
        self.only_partitions.is_empty() && self.only_polytope.is_empty()
    }
}

pub fn set_difference_demo(poset: &Poset, m: u32) -> Result<SetDifference> {
    let partitions = left_enriched_maps(poset, m)?;
    let points: Vec<LabeledMap> = dilation_points(poset, PolytopeKind::EnrichedOrder, m)
        .into_iter()
        .map(LabeledMap)
        .collect();
    let only_partitions = partitions
        .iter()
        .filter(|f| points.binary_search(f).is_err())
        .cloned()
        .collect();
    let only_polytope = points
        .iter()
        .filter(|p| partitions.binary_search(p).is_err())
        .cloned()
        .collect();
    Ok(SetDifference {
        m,
        partition_count: partitions.len(),
        polytope_count: points.len(),
        only_partitions,
        only_polytope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(v: &[i64]) -> LabeledMap {
        LabeledMap(v.to_vec())
    }

    #[test]
    fn left_enriched_examples() {
        let c2 = Poset::chain(2).unwrap();
        assert!(is_left_enriched(&map(&[-1, 1]), &c2).unwrap());
        assert!(!is_left_enriched(&map(&[1, -1]), &c2).unwrap());
        assert!(is_left_enriched(&map(&[-2, 2]), &c2).unwrap());
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert!(is_left_enriched(&map(&[0, 0, 0]), &v).unwrap());
    }

    #[test]
    fn natural_labeling_required() {
        let rev = Poset::new(2, &[(2, 1)]).unwrap();
        assert_eq!(is_left_enriched(&map(&[0, 0]), &rev), Err(Error::NotNaturallyLabeled));
        assert_eq!(count_left_enriched(&rev, 1), Err(Error::NotNaturallyLabeled));
        assert!(matches!(
            is_left_enriched(&map(&[0]), &Poset::chain(2).unwrap()),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn counts() {
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(count_left_enriched(&c2, 2).unwrap(), 13);
        assert_eq!(
            left_enriched_polynomial(&c2).unwrap(),
            RationalPolynomial::from_integers(&[1, 2, 2])
        );
        let one = Poset::antichain(1).unwrap();
        for m in 0..5 {
            assert_eq!(count_left_enriched(&one, m).unwrap(), 2 * m as u64 + 1);
        }
        assert_eq!(count_order_preserving(&c2, 1), 3);
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(count_order_preserving(&v, 1), 5);
        let a3 = Poset::antichain(3).unwrap();
        assert_eq!(count_order_preserving(&a3, 2), 27);
    }

    #[test]
    fn order_preserving_brute_force() {
        // independent filter over the whole box {0,1}^3
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        let mut brute = 0;
        for bits in 0..8 {
            let f: Vec<i64> = (0..3).map(|i| (bits >> i) & 1).collect();
            if f[0] <= f[2] && f[1] <= f[2] {
                brute += 1;
            }
        }
        assert_eq!(brute, 5);
        assert!(is_order_preserving(&map(&[0, 1, 1]), &v));
    }

    #[test]
    fn two_chain_difference() {
        let c2 = Poset::chain(2).unwrap();
        let d = set_difference_demo(&c2, 2).unwrap();
        assert_eq!((d.partition_count, d.polytope_count), (13, 13));
        assert_eq!(d.only_partitions, vec![map(&[-1, -2]), map(&[1, -2])]);
        assert_eq!(d.only_polytope, vec![map(&[-1, 0]), map(&[1, 0])]);
        assert!(set_difference_demo(&c2, 1).unwrap().sets_equal());
        let a2 = Poset::antichain(2).unwrap();
        for m in 0..4 {
            assert!(set_difference_demo(&a2, m).unwrap().sets_equal());
        }
    }
}
