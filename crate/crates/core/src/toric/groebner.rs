use std::collections::HashMap;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::order::MonomialOrderSpec;
use super::poly::{Binomial, Coeff, Monomial, Polynomial};

/// A division basis with lead terms cached and indexed by their smallest
/// variable.
struct Reducer<'a> {
    polys: &'a [Polynomial],
    leads: Vec<(Monomial, Coeff)>,
    by_var: HashMap<usize, Vec<usize>>,
}

impl<'a> Reducer<'a> {
    fn new(polys: &'a [Polynomial], order: &MonomialOrderSpec) -> Self {
        let mut leads = Vec::with_capacity(polys.len());
        let mut by_var: HashMap<usize, Vec<usize>> = HashMap::new();
        for (k, p) in polys.iter().enumerate() {
            let (m, c) = p.leading_term(order).map(|(m, c)| (m.clone(), *c)).unwrap_or_default();
            if let Some(v) = m.vars().next() {
                by_var.entry(v).or_default().push(k);
            }
            leads.push((m, c));
        }
        Reducer { polys, leads, by_var }
    }

    fn divisor_of(&self, t: &Monomial) -> Option<usize> {
        let mut last = None;
        for v in t.vars() {
            if last == Some(v) {
                continue;
            }
            last = Some(v);
            if let Some(cands) = self.by_var.get(&v) {
                if let Some(&k) = cands.iter().find(|&&k| self.leads[k].0.divides(t)) {
                    return Some(k);
                }
            }
        }
        None
    }

    fn normal_form(&self, mut p: Polynomial, order: &MonomialOrderSpec) -> Polynomial {
        let mut remainder = Polynomial::zero();
        loop {
            let Some((t, c)) = p.leading_term(order).map(|(t, c)| (t.clone(), *c)) else {
                return remainder;
            };
            match self.divisor_of(&t) {
                Some(k) => {
                    let (lm, lc) = &self.leads[k];
                    p.add_scaled(-(c / lc), &lm.quotient_of(&t), &self.polys[k]);
                }
                None => {
                    p.add_term(t.clone(), -c);
                    remainder.add_term(t, c);
                }
            }
        }
    }
}

/// Full reduction of `p` modulo `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrderSpec) -> Polynomial {
    Reducer::new(basis, order).normal_form(p.clone(), order)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrderSpec) -> Polynomial {
    let (Some((lf, cf)), Some((lg, cg))) = (f.leading_term(order), g.leading_term(order)) else {
        return Polynomial::zero();
    };
    let l = lf.lcm(lg);
    let mut s = Polynomial::zero();
    s.add_scaled(Coeff::one() / cf, &lf.quotient_of(&l), f);
    s.add_scaled(-Coeff::one() / cg, &lg.quotient_of(&l), g);
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SPairFailure {
    pub i: usize,
    pub j: usize,
    pub remainder_terms: usize,
    #[serde(skip)]
    pub remainder: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuchbergerReport {
    pub generators: usize,
    pub pairs_total: usize,
    /// Pairs with coprime lead terms; their S-polynomials reduce to zero.
    pub pairs_coprime: usize,
    pub pairs_reduced: usize,
    /// Sorted by pair.
    pub failures: Vec<SPairFailure>,
}

impl BuchbergerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces the S-polynomial of every pair of generators modulo the family,
/// with lead terms taken under `order`.
pub fn buchberger_verify(gens: &[Binomial], order: &MonomialOrderSpec) -> BuchbergerReport {
    let polys: Vec<Polynomial> = gens.iter().map(Binomial::to_polynomial).collect();
    let reducer = Reducer::new(&polys, order);
    let m = polys.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let coprime: Vec<bool> = pairs
        .par_iter()
        .map(|&(i, j)| reducer.leads[i].0.is_coprime(&reducer.leads[j].0))
        .collect();
    let failures: Vec<SPairFailure> = pairs
        .par_iter()
        .zip(&coprime)
        .filter(|(_, &c)| !c)
        .filter_map(|(&(i, j), _)| {
            let s = s_polynomial(&polys[i], &polys[j], order);
            let r = reducer.normal_form(s, order);
            (!r.is_zero()).then(|| SPairFailure { i, j, remainder_terms: r.len(), remainder: r })
        })
        .collect();
    let pairs_coprime = coprime.iter().filter(|&&c| c).count();
    BuchbergerReport {
        generators: m,
        pairs_total: pairs.len(),
        pairs_coprime,
        pairs_reduced: pairs.len() - pairs_coprime,
        failures,
    }
}

/// The reduced Gröbner basis of the ideal generated by `polys`: Buchberger
/// completion with the coprime criterion, then minimalization and
/// interreduction. Every element is monic; the result is sorted.
pub fn reduced_groebner_basis(polys: &[Polynomial], order: &MonomialOrderSpec) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let mut q = p.clone();
        q.make_monic(order);
        basis.push(q);
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let li = basis[i].leading_term(order).expect("nonzero").0.clone();
        let lj = basis[j].leading_term(order).expect("nonzero").0.clone();
        if li.is_coprime(&lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            r.make_monic(order);
            let k = basis.len();
            basis.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let lead = |p: &Polynomial| p.leading_term(order).expect("nonzero").0.clone();
    // drop elements whose lead is divisible by another lead
    let leads: Vec<Monomial> = basis.iter().map(lead).collect();
    let mut keep: Vec<usize> = Vec::new();
    for k in 0..basis.len() {
        let redundant = (0..basis.len()).any(|o| {
            o != k
                && leads[o].divides(&leads[k])
                && (leads[o] != leads[k] || o < k)
        });
        if !redundant {
            keep.push(k);
        }
    }
    let minimal: Vec<Polynomial> = keep.iter().map(|&k| basis[k].clone()).collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != k)
                .map(|(_, p)| p.clone())
                .collect();
            let (lm, _) = minimal[k].leading_term(order).expect("nonzero");
            let mut tail = minimal[k].clone();
            tail.add_term(lm.clone(), -Coeff::one());
            let mut out = normal_form(&tail, &others, order);
            out.add_term(lm.clone(), Coeff::one());
            out
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(&lead(a), &lead(b)));
    reduced
}
