use std::collections::BTreeSet;

use serde::Serialize;

use super::generators::{generators, ToricFamily};
use super::order::MonomialOrderSpec;
use super::poly::Monomial;
use super::{ToricKind, VariableSystem};
use crate::error::Result;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialIdeal {
    pub kind: ToricKind,
    #[serde(skip)]
    pub generators: Vec<Monomial>,
    pub generator_count: usize,
    pub squarefree: bool,
    pub quadratic: bool,
    /// No generator involves `x_∅`.
    pub avoids_origin: bool,
}

impl InitialIdeal {
    pub fn flags_hold(&self) -> bool {
        self.squarefree && self.quadratic && self.avoids_origin
    }
}

/// Lead monomials of the family under `order`, minimalized under divisibility
/// and sorted. Assumes the family is a Gröbner basis.
pub fn initial_ideal(family: &ToricFamily, order: &MonomialOrderSpec) -> InitialIdeal {
    let leads: BTreeSet<Monomial> = family
        .binomials
        .iter()
        .map(|b| if order.cmp(&b.lead, &b.tail).is_ge() { b.lead.clone() } else { b.tail.clone() })
        .collect();
    let generators: Vec<Monomial> = leads
        .iter()
        .filter(|m| !leads.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect();
    let origin = family.vars.origin();
    InitialIdeal {
        kind: family.kind,
        generator_count: generators.len(),
        squarefree: generators.iter().all(Monomial::is_squarefree),
        quadratic: generators.iter().all(|m| m.degree() == 2),
        avoids_origin: generators.iter().all(|m| !m.contains(origin)),
        generators,
    }
}

/// Whether `order` picks the designated first monomial of every binomial.
pub fn lead_selection_holds(family: &ToricFamily, order: &MonomialOrderSpec) -> bool {
    family
        .binomials
        .iter()
        .all(|b| order.cmp(&b.lead, &b.tail).is_gt())
}

/// Degree-`d` monomials in `num_vars` variables divisible by no generator.
pub fn standard_monomial_count(initial: &[Monomial], num_vars: usize, d: usize) -> u64 {
    let mut by_var: Vec<Vec<&Monomial>> = vec![Vec::new(); num_vars];
    for g in initial {
        let mut seen = BTreeSet::new();
        for v in g.vars() {
            if seen.insert(v) {
                by_var[v].push(g);
            }
        }
    }
    fn walk(by_var: &[Vec<&Monomial>], start: usize, left: usize, current: &mut Vec<u32>) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for v in start..by_var.len() {
            current.push(v as u32);
            let m = Monomial::from_vars(current.clone());
            // divisibility is inherited by multiples, so prune here
            if !by_var[v].iter().any(|g| g.divides(&m)) {
                total += walk(by_var, v, left - 1, current);
            }
            current.pop();
        }
        total
    }
    walk(&by_var, 0, d, &mut Vec::with_capacity(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub order_kind: ToricKind,
    pub chain_kind: ToricKind,
    pub order_generators: usize,
    pub chain_generators: usize,
    pub isomorphic: bool,
}

/// Maps the minimal generators of the order-side initial ideal through
/// `x_I^ε -> x_{max(I)}^{ε restricted to max(I)}` and compares with the
/// chain-side initial ideal. `kind` selects the pair `(O, C)` or `(Oe, Ce)`.
pub fn initial_isomorphism_check(poset: &Poset, kind: ToricKind) -> Result<IsomorphismReport> {
    let order_kind = if kind.is_chain() { kind.partner() } else { kind };
    let chain_kind = order_kind.partner();
    let first = generators(poset, order_kind);
    let second = generators(poset, chain_kind);
    let in_first = initial_ideal(&first, &MonomialOrderSpec::for_kind(poset, &first.vars)?);
    let in_second = initial_ideal(&second, &MonomialOrderSpec::for_kind(poset, &second.vars)?);
    let image: Option<BTreeSet<Monomial>> = in_first
        .generators
        .iter()
        .map(|m| map_monomial(m, &first.vars, &second.vars))
        .collect();
    let target: BTreeSet<Monomial> = in_second.generators.iter().cloned().collect();
    let isomorphic = match image {
        Some(image) => image.len() == in_first.generator_count && image == target,
        None => false,
    };
    Ok(IsomorphismReport {
        order_kind,
        chain_kind,
        order_generators: in_first.generator_count,
        chain_generators: in_second.generator_count,
        isomorphic,
    })
}

fn map_monomial(m: &Monomial, from: &VariableSystem, to: &VariableSystem) -> Option<Monomial> {
    let vars: Option<Vec<u32>> = m
        .vars()
        .map(|v| {
            let x = from.label(v);
            let sign: Vec<i8> = (0..x.sign.len())
                .map(|i| if x.top.contains(i) { x.sign[i] } else { 0 })
                .collect();
            to.find(x.ideal, &sign).map(|w| w as u32)
        })
        .collect();
    vars.map(Monomial::from_vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{count_dilation, PolytopeKind};
    use crate::poset::enumerate_posets;

    fn initial_for(p: &Poset, kind: ToricKind) -> (ToricFamily, InitialIdeal) {
        let f = generators(p, kind);
        let order = MonomialOrderSpec::for_kind(p, &f.vars).unwrap();
        assert!(lead_selection_holds(&f, &order), "{p:?} {kind}");
        let init = initial_ideal(&f, &order);
        (f, init)
    }

    #[test]
    fn chain_initial_ideal_is_zero() {
        let (_, init) = initial_for(&Poset::chain(2).unwrap(), ToricKind::O);
        assert!(init.generators.is_empty());
    }

    #[test]
    fn antichain_two_counts_match() {
        let a2 = Poset::antichain(2).unwrap();
        let (_, oe) = initial_for(&a2, ToricKind::Oe);
        let (_, ce) = initial_for(&a2, ToricKind::Ce);
        assert!(oe.flags_hold() && ce.flags_hold());
        assert_eq!(oe.generator_count, ce.generator_count);
    }

    // Brute force over all exponent vectors of total degree d.
    fn brute_standard(initial: &[Monomial], num_vars: usize, d: usize) -> u64 {
        fn rec(k: usize, left: usize, exps: &mut Vec<u32>, initial: &[Monomial], count: &mut u64) {
            if k == exps.len() {
                if left == 0 {
                    let m = Monomial::from_exponents(exps);
                    if !initial.iter().any(|g| g.divides(&m)) {
                        *count += 1;
                    }
                }
                return;
            }
            for e in 0..=left {
                exps[k] = e as u32;
                rec(k + 1, left - e, exps, initial, count);
            }
            exps[k] = 0;
        }
        let mut count = 0;
        rec(0, d, &mut vec![0; num_vars], initial, &mut count);
        count
    }

    #[test]
    fn standard_count_matches_brute_force() {
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        let (f, init) = initial_for(&v, ToricKind::O);
        for d in 0..4 {
            assert_eq!(
                standard_monomial_count(&init.generators, f.vars.len(), d),
                brute_standard(&init.generators, f.vars.len(), d)
            );
        }
    }

    #[test]
    fn hilbert_matches_ehrhart_on_dual_v() {
        let dual_v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap().dual();
        let (f, init) = initial_for(&dual_v, ToricKind::Oe);
        let counts: Vec<u64> = (0..3)
            .map(|d| standard_monomial_count(&init.generators, f.vars.len(), d))
            .collect();
        assert_eq!(counts, vec![1, 11, 45]);
    }

    #[test]
    fn hilbert_matches_ehrhart_small() {
        for n in 1..=2 {
            for p in enumerate_posets(n).unwrap() {
                let (f, init) = initial_for(&p, ToricKind::Oe);
                for d in 0..3 {
                    assert_eq!(
                        standard_monomial_count(&init.generators, f.vars.len(), d),
                        count_dilation(&p, PolytopeKind::EnrichedOrderDual, d as u32)
                    );
                }
            }
        }
    }

    #[test]
    fn isomorphism_small() {
        for n in 1..=3 {
            for p in enumerate_posets(n).unwrap() {
                assert!(initial_isomorphism_check(&p, ToricKind::O).unwrap().isomorphic, "{p:?}");
            }
        }
        let a2 = Poset::antichain(2).unwrap();
        assert!(initial_isomorphism_check(&a2, ToricKind::Ce).unwrap().isomorphic);
    }
}
