//! The verification suite: every numeric example and every small-n sweep,
//! one [`CriterionResult`] per check.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    central_symmetry_check, count_dilation, dilation_points, ehrhart, extremal_poset,
    facet_count_formulas, facets, integer_span_check, lattice_points, max_facet_bounds, reflexivity_check, scan_max_facets,
    verify_facet_system, PolytopeKind,
};
use crate::partitions::{left_enriched_maps, left_enriched_polynomial, set_difference_demo, LabeledMap};
use crate::polynomial::RationalPolynomial;
use crate::poset::{enumerate_posets, ordinal_sum, Poset};
use crate::toric::{
    buchberger_verify, generators, initial_ideal, initial_isomorphism_check, lead_selection_holds,
    mutate_sign, standard_monomial_count, MonomialOrderSpec, ToricKind,
};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub time_limit_secs: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn within_time_limit(&self) -> bool {
        self.time_limit_secs.is_none_or(|s| self.elapsed <= Duration::from_secs(s))
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    time_limit_secs: Option<u64>,
    check: fn() -> Result<(bool, String)>,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "two-chain example", time_limit_secs: Some(1), check: two_chain_example },
    Criterion { id: 2, name: "V poset and its dual", time_limit_secs: Some(1), check: v_poset_example },
    Criterion { id: 3, name: "four Ehrhart polynomials agree", time_limit_secs: Some(120), check: ehrhart_sweep },
    Criterion { id: 4, name: "quadratic Gröbner bases", time_limit_secs: Some(300), check: groebner_sweep },
    Criterion { id: 5, name: "initial-ideal isomorphisms", time_limit_secs: None, check: isomorphism_sweep },
    Criterion { id: 6, name: "Hilbert function equals Ehrhart", time_limit_secs: None, check: hilbert_sweep },
    Criterion { id: 7, name: "facet theory", time_limit_secs: None, check: facet_sweep },
    Criterion { id: 8, name: "reflexivity and unimodular covers", time_limit_secs: None, check: reflexive_sweep },
    Criterion { id: 9, name: "antichain and X-poset characterizations", time_limit_secs: None, check: characterization_sweep },
    Criterion { id: 10, name: "maximal facet numbers", time_limit_secs: Some(600), check: max_facet_sweep },
];

pub fn criterion_ids() -> Vec<u32> {
    CRITERIA.iter().map(|c| c.id).collect()
}

pub fn run_criterion(id: u32) -> Result<CriterionResult> {
    let c = CRITERIA
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Precondition(format!("no criterion {id}")))?;
    let start = Instant::now();
    let (passed, detail) = match (c.check)() {
        Ok(outcome) => outcome,
        Err(e) => (false, format!("error: {e}")),
    };
    Ok(CriterionResult {
        id: c.id,
        name: c.name,
        passed,
        detail,
        time_limit_secs: c.time_limit_secs,
        elapsed: start.elapsed(),
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|c| run_criterion(c.id).expect("listed criterion"))
        .collect()
}

fn posets_up_to(n: usize) -> Result<Vec<Poset>> {
    let mut all = Vec::new();
    for k in 1..=n {
        all.extend(enumerate_posets(k)?);
    }
    Ok(all)
}

fn labeled(points: &[[i64; 2]]) -> BTreeSet<LabeledMap> {
    points.iter().map(|p| LabeledMap(p.to_vec())).collect()
}

fn two_chain_example() -> Result<(bool, String)> {
    let p = Poset::chain(2)?;
    let expected = RationalPolynomial::from_integers(&[1, 2, 2]);
    let omega = left_enriched_polynomial(&p)?;
    let l = ehrhart(&p, PolytopeKind::EnrichedOrder)?;
    let d = set_difference_demo(&p, 2)?;
    let partitions = labeled(&[
        [0, 0], [0, 1], [0, -1], [0, 2], [0, -2], [1, 1], [-1, 1],
        [1, 2], [1, -2], [-1, 2], [-1, -2], [2, 2], [-2, 2],
    ]);
    let points = labeled(&[
        [0, 0], [0, 1], [0, -1], [0, 2], [0, -2], [1, 1], [-1, 1],
        [1, 2], [-1, 2], [1, 0], [-1, 0], [2, 2], [-2, 2],
    ]);
    let found_partitions: BTreeSet<LabeledMap> =
        left_enriched_maps(&p, 2)?.into_iter().collect();
    let found_points: BTreeSet<LabeledMap> =
        dilation_points(&p, PolytopeKind::EnrichedOrder, 2).into_iter().map(LabeledMap).collect();
    let ok = omega == expected
        && l == expected
        && d.partition_count == 13
        && d.polytope_count == 13
        && found_partitions == partitions
        && found_points == points
        && d.only_partitions == vec![LabeledMap(vec![-1, -2]), LabeledMap(vec![1, -2])]
        && d.only_polytope == vec![LabeledMap(vec![-1, 0]), LabeledMap(vec![1, 0])];
    let plain = |v: &[LabeledMap]| v.iter().map(|f| f.0.clone()).collect::<Vec<_>>();
    Ok((
        ok,
        format!(
            "Ω^(ℓ) = {omega}, L = {l}; {} partitions, {} points; partitions only {:?}, points only {:?}",
            d.partition_count,
            d.polytope_count,
            plain(&d.only_partitions),
            plain(&d.only_polytope)
        ),
    ))
}

fn v_poset_example() -> Result<(bool, String)> {
    let p = Poset::new(3, &[(1, 3), (2, 3)])?;
    let q = p.dual();
    let b = |shift: i64| RationalPolynomial::shifted_binomial(shift, 3);
    let expected = &(&(&b(3) + &b(2).scale(&BigRational::from_integer(7.into())))
        + &b(1).scale(&BigRational::from_integer(7.into())))
        + &b(0);
    let lp = ehrhart(&p, PolytopeKind::EnrichedOrder)?;
    let lq = ehrhart(&q, PolytopeKind::EnrichedOrder)?;
    let fp = facets(&p, PolytopeKind::EnrichedOrder).len();
    let fq = facets(&q, PolytopeKind::EnrichedOrder).len();
    let ok = lp == expected && lq == expected && fp == 5 && fq == 6;
    Ok((ok, format!("L(P) = {lp}, L(dual) = {lq}, expected {expected}; facets {fp} and {fq}")))
}

fn ehrhart_sweep() -> Result<(bool, String)> {
    let posets = posets_up_to(4)?;
    let failures: Vec<String> = posets
        .par_iter()
        .map(|p| -> Result<Option<String>> {
            let (q, _) = p.natural_relabeling();
            let l = ehrhart(&q, PolytopeKind::EnrichedOrder)?;
            let same = ehrhart(&q.dual(), PolytopeKind::EnrichedOrder)? == l
                && ehrhart(&q, PolytopeKind::EnrichedChain)? == l
                && left_enriched_polynomial(&q)? == l;
            Ok((!same).then(|| format!("{:?}", q.to_spec())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((
        failures.is_empty(),
        format!("{} posets with n <= 4, {} disagreements {:?}", posets.len(), failures.len(), failures),
    ))
}

fn family_holds(p: &Poset, kind: ToricKind) -> Result<bool> {
    let f = generators(p, kind);
    let order = MonomialOrderSpec::for_kind(p, &f.vars)?;
    let verified = buchberger_verify(&f.binomials, &order).passed();
    Ok(verified && lead_selection_holds(&f, &order) && initial_ideal(&f, &order).flags_hold())
}

fn groebner_sweep() -> Result<(bool, String)> {
    let three = enumerate_posets(3)?;
    let four = enumerate_posets(4)?;
    let mut jobs: Vec<(&Poset, ToricKind)> = Vec::new();
    for p in &three {
        jobs.extend(ToricKind::ALL.iter().map(|&k| (p, k)));
    }
    for p in &four {
        jobs.extend([(p, ToricKind::O), (p, ToricKind::C)]);
    }
    let outcomes = jobs
        .par_iter()
        .map(|&(p, k)| family_holds(p, k))
        .collect::<Result<Vec<bool>>>()?;
    let failed = outcomes.iter().filter(|&&ok| !ok).count();

    // One flipped sign in the first generator that admits one.
    let example = Poset::new(3, &[(1, 3), (2, 3)])?.dual();
    let f = generators(&example, ToricKind::Oe);
    let order = MonomialOrderSpec::for_kind(&example, &f.vars)?;
    let mutated = (0..f.len())
        .find_map(|k| mutate_sign(&f, k))
        .ok_or_else(|| Error::Internal("no generator admits a sign flip".into()))?;
    let mutation_failures = buchberger_verify(&mutated.binomials, &order).failures.len();

    Ok((
        failed == 0 && mutation_failures > 0,
        format!(
            "{} family checks ({} posets n = 3 x 4 families, {} posets n = 4 x O, C): {} failed; \
             mutated family: {} failing S-pairs",
            jobs.len(),
            three.len(),
            four.len(),
            failed,
            mutation_failures
        ),
    ))
}

fn isomorphism_sweep() -> Result<(bool, String)> {
    let mut jobs: Vec<(Poset, ToricKind)> = Vec::new();
    for p in posets_up_to(4)? {
        if p.n() <= 3 {
            jobs.push((p.clone(), ToricKind::Oe));
        }
        jobs.push((p, ToricKind::O));
    }
    let failed = jobs
        .par_iter()
        .map(|(p, k)| initial_isomorphism_check(p, *k).map(|r| r.isomorphic))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|ok| !ok)
        .count();
    Ok((failed == 0, format!("{} checks, {} failed", jobs.len(), failed)))
}

fn hilbert_counts(p: &Poset, degrees: usize) -> Result<Vec<u64>> {
    let f = generators(p, ToricKind::Oe);
    let order = MonomialOrderSpec::for_kind(p, &f.vars)?;
    let init = initial_ideal(&f, &order);
    Ok((0..=degrees)
        .map(|d| standard_monomial_count(&init.generators, f.vars.len(), d))
        .collect())
}

fn hilbert_sweep() -> Result<(bool, String)> {
    let posets = posets_up_to(3)?;
    let mut failed = 0;
    for p in &posets {
        let h = hilbert_counts(p, 2)?;
        let l: Vec<u64> = (0..=2).map(|m| count_dilation(p, PolytopeKind::EnrichedOrderDual, m)).collect();
        if h != l {
            failed += 1;
        }
    }
    let example = hilbert_counts(&Poset::new(3, &[(1, 3), (2, 3)])?.dual(), 2)?;
    Ok((
        failed == 0 && example == [1, 11, 45],
        format!("{} posets, {} mismatches; dual V poset: {:?}", posets.len(), failed, example),
    ))
}

fn facet_sweep() -> Result<(bool, String)> {
    let small = posets_up_to(4)?;
    let system_failures = small
        .par_iter()
        .filter(|p| PolytopeKind::ALL.iter().any(|&k| !verify_facet_system(p, k).passed()))
        .count();
    let formula_failures = small
        .par_iter()
        .filter(|p| {
            let f = facet_count_formulas(p);
            let n = |k| facets(p, k).len();
            f.f_eorder != n(PolytopeKind::EnrichedOrder)
                || f.f_echain != n(PolytopeKind::EnrichedChain)
                || f.f_order != n(PolytopeKind::Order)
                || f.f_chain != n(PolytopeKind::Chain)
        })
        .count();
    let five = posets_up_to(5)?;
    let inequality_failures = five
        .par_iter()
        .filter(|p| {
            let f = facet_count_formulas(p);
            f.f_eorder > f.f_echain
        })
        .count();
    Ok((
        system_failures + formula_failures + inequality_failures == 0,
        format!(
            "{} posets n <= 4: {} facet-system failures, {} formula mismatches; \
             {} posets n <= 5: {} with f_eorder > f_echain",
            small.len(),
            system_failures,
            formula_failures,
            five.len(),
            inequality_failures
        ),
    ))
}

fn reflexive_sweep() -> Result<(bool, String)> {
    let posets = posets_up_to(4)?;
    let failed = posets
        .par_iter()
        .map(|p| -> Result<bool> {
            let reflexive = reflexivity_check(p, PolytopeKind::EnrichedOrder)?
                && reflexivity_check(p, PolytopeKind::EnrichedChain)?;
            let spans = [PolytopeKind::EnrichedOrder, PolytopeKind::EnrichedOrderDual, PolytopeKind::EnrichedChain]
                .iter()
                .all(|&k| integer_span_check(&lattice_points(p, k)));
            let mut flags = true;
            for kind in [ToricKind::Oe, ToricKind::Ce] {
                let f = generators(p, kind);
                let order = MonomialOrderSpec::for_kind(p, &f.vars)?;
                flags &= initial_ideal(&f, &order).flags_hold();
            }
            Ok(reflexive && spans && flags)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|ok| !ok)
        .count();
    Ok((failed == 0, format!("{} posets n <= 4, {} failed", posets.len(), failed)))
}

fn characterization_sweep() -> Result<(bool, String)> {
    let four = posets_up_to(4)?;
    let rare_failures = four
        .par_iter()
        .filter(|p| {
            let f = facet_count_formulas(p);
            let symmetric = central_symmetry_check(&lattice_points(p, PolytopeKind::EnrichedOrder));
            let a = p.is_antichain();
            a != symmetric || a != (f.f_eorder == f.f_echain)
        })
        .count();
    let five = posets_up_to(5)?;
    let x_failures = five
        .par_iter()
        .filter(|p| {
            let f = facet_count_formulas(p);
            p.contains_x_poset() != (f.f_order != f.f_chain)
        })
        .count();
    Ok((
        rare_failures + x_failures == 0,
        format!(
            "antichain equivalence: {} posets, {} failures; X poset: {} posets, {} failures",
            four.len(),
            rare_failures,
            five.len(),
            x_failures
        ),
    ))
}

fn max_facet_sweep() -> Result<(bool, String)> {
    let expected = [2, 4, 6, 10, 15];
    let mut ok = true;
    let mut found = Vec::new();
    for n in 1..=5 {
        let scan = scan_max_facets(n)?;
        let chain = facet_count_formulas(&Poset::chain(n)?);
        ok &= scan.max_f_eorder == expected[n - 1]
            && scan.max_f_echain == 1 << n
            && chain.f_echain == 1 << n
            && scan.matches_bounds;
        found.push((scan.max_f_eorder, scan.max_f_echain));
    }
    ok &= facet_count_formulas(&ordinal_sum(&[2, 2])?).f_eorder == 10;
    // The layered extremal posets attain the closed-form bound beyond the scan.
    for n in 1..=12 {
        let bound = max_facet_bounds(n)?.bound_eorder;
        ok &= facet_count_formulas(&extremal_poset(n)?).f_eorder as u64 == bound;
    }
    Ok((ok, format!("(max f_eorder, max f_echain) for n = 1..5: {found:?}")))
}
