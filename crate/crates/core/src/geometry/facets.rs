use rayon::prelude::*;
use serde::Serialize;

use super::{Halfspace, PolytopeKind};
use crate::error::{Error, Result};
use crate::poset::{enumerate_posets, ordinal_sum, Poset, ENUMERATION_LIMIT};

/// The facet inequalities of the polytope, normalized, deduplicated and sorted.
///
/// Enriched order: for each saturated chain `i_1 ⋖ .. ⋖ i_r` ending in a
/// maximal element, `2^{r-1} x_{i_1} - Σ_{j≥2} 2^{r-j} x_{i_j} <= 1`; for each
/// maximal chain, `-Σ 2^{r-j} x_{i_j} <= 1`. Enriched chain: for each maximal
/// chain and each sign vector `ε`, `Σ ε_j x_{i_j} <= 1`. The classical
/// systems are `0 <= x_i` (minimal `i`), `x_j <= 1` (maximal `j`),
/// `x_i <= x_j` (covers) for the order polytope, and `0 <= x_i`,
/// `Σ_{i∈C} x_i <= 1` (maximal chains `C`) for the chain polytope.
pub fn facets(poset: &Poset, kind: PolytopeKind) -> Vec<Halfspace> {
    let n = poset.n();
    let mut out = Vec::new();
    match kind {
        PolytopeKind::Order => {
            for i in poset.minimal().iter() {
                out.push(Halfspace::new(unit(n, i, -1), 0));
            }
            for j in poset.maximal().iter() {
                out.push(Halfspace::new(unit(n, j, 1), 1));
            }
            for &(i, j) in poset.covers() {
                let mut a = vec![0; n];
                a[i] = 1;
                a[j] = -1;
                out.push(Halfspace::new(a, 0));
            }
        }
        PolytopeKind::Chain => {
            for i in 0..n {
                out.push(Halfspace::new(unit(n, i, -1), 0));
            }
            for c in poset.chains().maximal {
                let mut a = vec![0; n];
                for i in c {
                    a[i] = 1;
                }
                out.push(Halfspace::new(a, 1));
            }
        }
        PolytopeKind::EnrichedOrder => {
            let chains = poset.chains();
            for c in &chains.saturated_to_max {
                let mut a = weighted_chain(n, c);
                a[c[0]] = -a[c[0]];
                out.push(Halfspace::new(a, 1));
            }
            for c in &chains.maximal {
                out.push(Halfspace::new(weighted_chain(n, c), 1));
            }
        }
        PolytopeKind::EnrichedOrderDual => return facets(&poset.dual(), PolytopeKind::EnrichedOrder),
        PolytopeKind::EnrichedChain => {
            for c in poset.chains().maximal {
                for mask in 0..1u64 << c.len() {
                    let mut a = vec![0; n];
                    for (k, &i) in c.iter().enumerate() {
                        a[i] = if mask >> k & 1 == 1 { -1 } else { 1 };
                    }
                    out.push(Halfspace::new(a, 1));
                }
            }
        }
    }
    let mut out: Vec<Halfspace> = out.iter().map(Halfspace::normalized).collect();
    out.sort();
    out.dedup();
    out
}

fn unit(n: usize, i: usize, v: i64) -> Vec<i64> {
    let mut a = vec![0; n];
    a[i] = v;
    a
}

// -2^{r-j} at the j-th chain element.
fn weighted_chain(n: usize, chain: &[usize]) -> Vec<i64> {
    let r = chain.len();
    let mut a = vec![0; n];
    for (j, &i) in chain.iter().enumerate() {
        a[i] = -(1i64 << (r - 1 - j));
    }
    a
}

/// Facet counts predicted from chain statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetCounts {
    pub f_eorder: usize,
    pub f_echain: usize,
    pub f_order: usize,
    pub f_chain: usize,
    pub sc: usize,
    pub mc: usize,
    pub mc_by_length: Vec<usize>,
}

pub fn facet_count_formulas(poset: &Poset) -> FacetCounts {
    let chains = poset.chains();
    let f_echain = chains
        .mc_by_length
        .iter()
        .enumerate()
        .map(|(l, &c)| (1usize << (l + 1)) * c)
        .sum();
    FacetCounts {
        f_eorder: chains.sc() + chains.mc(),
        f_echain,
        f_order: poset.minimal().len() + poset.maximal().len() + poset.covers().len(),
        f_chain: poset.n() + chains.mc(),
        sc: chains.sc(),
        mc: chains.mc(),
        mc_by_length: chains.mc_by_length,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetBounds {
    pub n: usize,
    /// Maximum number of cliques of an `n`-vertex graph; defined for `n >= 2`.
    pub mu_n: Option<u64>,
    pub bound_eorder: u64,
    pub bound_echain: u64,
}

/// Tight upper bounds on the facet numbers of the enriched polytopes.
pub fn max_facet_bounds(n: usize) -> Result<FacetBounds> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > 60 {
        return Err(Error::TooLarge { n, limit: 60, what: "facet bounds" });
    }
    let k = (n / 3) as u32;
    let mu_n = (n >= 2).then(|| match n % 3 {
        0 => 3u64.pow(k),
        1 => 4 * 3u64.pow(k - 1),
        _ => 2 * 3u64.pow(k),
    });
    // (c * 3^e - 3) / 2, always an integer
    let half = |c: u64, e: u32| (c * 3u64.pow(e) - 3) / 2;
    let bound_eorder = if n <= 3 {
        2 * n as u64
    } else {
        match n % 3 {
            0 => half(47, k - 2),
            1 => half(23, k - 1),
            _ => half(11, k),
        }
    };
    Ok(FacetBounds {
        n,
        mu_n,
        bound_eorder,
        bound_echain: 1u64 << n,
    })
}

/// `2 m_1 .. m_r + Σ_{j<r} m_1 .. m_j`: the enriched-order facet count of the
/// ordinal sum whose top layer has `m_1` elements, the next `m_2`, and so on.
pub fn max_facet_composition_value(layers: &[u64]) -> u64 {
    let mut prefix = 1;
    let mut total = 0;
    for (j, &m) in layers.iter().enumerate() {
        prefix *= m;
        if j + 1 < layers.len() {
            total += prefix;
        }
    }
    total + 2 * prefix
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxFacetScan {
    pub n: usize,
    pub posets_scanned: usize,
    pub max_f_eorder: usize,
    pub eorder_witness: Poset,
    pub max_f_echain: usize,
    pub echain_witness: Poset,
    pub bounds: FacetBounds,
    pub matches_bounds: bool,
}

/// Maximises both enriched facet counts over every labeled poset on `n`
/// elements. The first poset in enumeration order attaining a maximum is
/// reported as its witness.
pub fn scan_max_facets(n: usize) -> Result<MaxFacetScan> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n, limit: ENUMERATION_LIMIT, what: "facet scans" });
    }
    let posets = enumerate_posets(n)?;
    let counts: Vec<FacetCounts> = posets.par_iter().map(facet_count_formulas).collect();
    let argmax = |key: fn(&FacetCounts) -> usize| {
        let best = counts.iter().map(key).max().unwrap_or(0);
        let at = counts.iter().position(|c| key(c) == best).unwrap_or(0);
        (best, posets[at].clone())
    };
    let (max_f_eorder, eorder_witness) = argmax(|c| c.f_eorder);
    let (max_f_echain, echain_witness) = argmax(|c| c.f_echain);
    let bounds = max_facet_bounds(n)?;
    Ok(MaxFacetScan {
        n,
        posets_scanned: posets.len(),
        max_f_eorder,
        eorder_witness,
        max_f_echain,
        echain_witness,
        matches_bounds: max_f_eorder as u64 == bounds.bound_eorder
            && max_f_echain as u64 == bounds.bound_echain,
        bounds,
    })
}

/// Bottom-up block sizes of an ordinal sum attaining `bound_eorder`.
pub(crate) fn extremal_blocks(n: usize) -> Vec<usize> {
    if n <= 3 {
        return vec![n];
    }
    // top layers of size 3, the remainder in layers of size 2
    let twos = match n % 3 {
        0 => 3,
        1 => 2,
        _ => 1,
    };
    let threes = (n - 2 * twos) / 3;
    let mut bottom_up = vec![2; twos];
    bottom_up.extend(std::iter::repeat_n(3, threes));
    bottom_up
}

pub(crate) fn extremal_poset(n: usize) -> Result<Poset> {
    ordinal_sum(&extremal_blocks(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compositions(n: u64) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![vec![]];
        }
        (1..=n)
            .flat_map(|first| {
                compositions(n - first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }

    #[test]
    fn bounds_match_composition_maximum() {
        // brute-force maximum over all compositions of n, n >= 4
        for n in 4..=14usize {
            let brute = compositions(n as u64)
                .iter()
                .map(|c| max_facet_composition_value(c))
                .max()
                .unwrap();
            assert_eq!(max_facet_bounds(n).unwrap().bound_eorder, brute, "n = {n}");
        }
    }

    #[test]
    fn bound_examples() {
        let b4 = max_facet_bounds(4).unwrap();
        assert_eq!(b4.bound_eorder, 10);
        assert_eq!(max_facet_bounds(5).unwrap().bound_eorder, 15);
        assert_eq!(max_facet_bounds(3).unwrap().mu_n, Some(3));
        assert_eq!(max_facet_bounds(1).unwrap().mu_n, None);
        let small: Vec<u64> = (1..=3).map(|n| max_facet_bounds(n).unwrap().bound_eorder).collect();
        assert_eq!(small, vec![2, 4, 6]);
        assert_eq!(max_facet_bounds(6).unwrap().bound_echain, 64);
    }

    #[test]
    fn mu_matches_clique_brute_force() {
        // maximal cliques of the complete multipartite graph with the
        // extremal part sizes = product of part sizes
        for n in 2..=10usize {
            let best = compositions(n as u64)
                .iter()
                .map(|c| c.iter().product::<u64>())
                .max()
                .unwrap();
            assert_eq!(max_facet_bounds(n).unwrap().mu_n, Some(best));
        }
    }

    #[test]
    fn extremal_posets_attain_bound() {
        for n in 1..=9 {
            let p = extremal_poset(n).unwrap();
            assert_eq!(
                facet_count_formulas(&p).f_eorder as u64,
                max_facet_bounds(n).unwrap().bound_eorder,
                "n = {n}"
            );
        }
        assert_eq!(extremal_poset(4).unwrap(), ordinal_sum(&[2, 2]).unwrap());
    }

    #[test]
    fn facet_examples() {
        let one = Poset::antichain(1).unwrap();
        assert_eq!(
            facets(&one, PolytopeKind::EnrichedOrder),
            vec![Halfspace::new(vec![-1], 1), Halfspace::new(vec![1], 1)]
        );
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(facets(&v, PolytopeKind::EnrichedOrder).len(), 5);
        assert_eq!(facets(&v.dual(), PolytopeKind::EnrichedOrder).len(), 6);
        assert_eq!(facets(&v, PolytopeKind::EnrichedOrderDual).len(), 6);
        for n in 1..=5 {
            let c = Poset::chain(n).unwrap();
            assert_eq!(facets(&c, PolytopeKind::EnrichedChain).len(), 1 << n);
        }
        let a2 = Poset::antichain(2).unwrap();
        assert_eq!(facets(&a2, PolytopeKind::Chain).len(), 4);
    }

    #[test]
    fn formula_examples() {
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(facet_count_formulas(&v).f_eorder, 5);
        for n in 1..=5 {
            let a = facet_count_formulas(&Poset::antichain(n).unwrap());
            assert_eq!((a.f_eorder, a.f_echain), (2 * n, 2 * n));
            assert_eq!(facet_count_formulas(&Poset::chain(n).unwrap()).f_echain, 1 << n);
        }
    }

    #[test]
    fn scan_small() {
        let s = scan_max_facets(3).unwrap();
        assert_eq!(s.posets_scanned, 19);
        assert_eq!(s.max_f_eorder, 6);
        assert_eq!(s.max_f_echain, 8);
        assert!(s.matches_bounds);
        assert!(scan_max_facets(6).is_err());
    }
}
