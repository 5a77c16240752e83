//! A nonnegative weight vector `w_C` on the chain-polytope variables whose
//! initial ideal agrees with the revlex order `<_C`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::generators::generators;
use super::groebner::reduced_groebner_basis;
use super::order::{MonomialOrderSpec, OrderKind};
use super::poly::{Binomial, Polynomial};
use super::ToricKind;
use crate::error::{Error, Result};
use crate::poset::Poset;

const PERCEPTRON_ROUNDS: usize = 200_000;
const FM_ROW_LIMIT: usize = 20_000;

/// `w` with `<d, w> >= 1` for every row `d`, or `None` if there is none.
pub fn solve_strict_cone(rows: &[Vec<i64>]) -> Option<Vec<i64>> {
    perceptron(rows).or_else(|| fourier_motzkin(rows))
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// Adds a violated row until none is left; terminates whenever the open cone
// is nonempty.
fn perceptron(rows: &[Vec<i64>]) -> Option<Vec<i64>> {
    let dim = rows.first().map_or(0, Vec::len);
    let mut w = vec![0i64; dim];
    for _ in 0..PERCEPTRON_ROUNDS {
        match rows.iter().find(|d| dot(d, &w) < 1) {
            None => return Some(w),
            Some(d) => {
                for (x, y) in w.iter_mut().zip(d) {
                    *x = x.checked_add(*y)?;
                }
            }
        }
    }
    None
}

type Row = (Vec<BigRational>, BigRational);

// Exact elimination of `<a, w> >= b` systems, then back-substitution taking
// each variable at its lower bound.
fn fourier_motzkin(rows: &[Vec<i64>]) -> Option<Vec<i64>> {
    let dim = rows.first().map_or(0, Vec::len);
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut system: Vec<Row> = rows
        .iter()
        .map(|d| (d.iter().map(|&x| q(x)).collect(), BigRational::one()))
        .collect();
    let mut stages = Vec::with_capacity(dim);
    for k in 0..dim {
        stages.push(system.clone());
        let (mut next, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
        for row in system {
            if row.0[k].is_positive() {
                pos.push(row);
            } else if row.0[k].is_negative() {
                neg.push(row);
            } else {
                next.push(row);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let (s, t) = (-na[k].clone(), pa[k].clone());
                let a: Vec<BigRational> = pa.iter().zip(na).map(|(x, y)| x * &s + y * &t).collect();
                next.push((a, pb * &s + nb * &t));
            }
        }
        next.sort();
        next.dedup();
        if next.len() > FM_ROW_LIMIT {
            return None;
        }
        system = next;
    }
    if system.iter().any(|(_, b)| b.is_positive()) {
        return None;
    }
    let mut w = vec![BigRational::zero(); dim];
    for k in (0..dim).rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for (a, b) in &stages[k] {
            if a[k].is_zero() {
                continue;
            }
            let rest: BigRational = (k + 1..dim).map(|j| &a[j] * &w[j]).sum();
            let bound = (b - rest) / &a[k];
            if a[k].is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        w[k] = match (lower, upper) {
            (Some(l), Some(u)) if l > u => return None,
            (Some(l), _) => l,
            (None, Some(u)) => u,
            (None, None) => BigRational::zero(),
        };
    }
    let denominators = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    w.iter()
        .map(|x| (x * BigRational::from_integer(denominators.clone())).to_integer().to_i64())
        .collect()
}

/// Solves `<exp(lead) - exp(tail), w> >= 1` over the reduced Gröbner basis
/// of the chain toric ideal under `<_C`, then shifts `w` to be nonnegative
/// (the ideal is homogeneous). Indexed like `VariableSystem::new(poset, C)`.
pub fn realize_weight_wc(poset: &Poset) -> Result<Vec<i64>> {
    let family = generators(poset, ToricKind::C);
    let num_vars = family.vars.len();
    let order = MonomialOrderSpec::revlex(OrderKind::RevlexC, num_vars);
    let polys: Vec<Polynomial> = family.binomials.iter().map(Binomial::to_polynomial).collect();
    let basis = reduced_groebner_basis(&polys, &order);
    let mut rows = Vec::with_capacity(basis.len());
    for g in &basis {
        let (lead, _) = g.leading_term(&order).expect("basis elements are nonzero");
        let terms: Vec<_> = g.terms().collect();
        let tail = match terms.as_slice() {
            [(a, _), (b, _)] => if *a == lead { *b } else { *a },
            _ => return Err(Error::Internal("reduced basis element is not a binomial".into())),
        };
        let d: Vec<i64> = lead
            .exponent_vector(num_vars)
            .iter()
            .zip(tail.exponent_vector(num_vars))
            .map(|(a, b)| a - b)
            .collect();
        if d.iter().sum::<i64>() != 0 {
            return Err(Error::Internal("inhomogeneous basis element".into()));
        }
        rows.push(d);
    }
    if rows.is_empty() {
        return Ok(vec![0; num_vars]);
    }
    let mut w = solve_strict_cone(&rows)
        .ok_or_else(|| Error::Internal("no weight vector realizes the revlex initial ideal".into()))?;
    let shift = w.iter().copied().min().unwrap_or(0);
    for x in &mut w {
        *x -= shift;
    }
    if w.iter().any(|&x| x < 0) || rows.iter().any(|d| dot(d, &w) < 1) {
        return Err(Error::Internal("weight vector fails the selection property".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::enumerate_posets;
    use crate::toric::VariableSystem;

    #[test]
    fn perceptron_and_elimination_agree_on_feasibility() {
        let rows = vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]];
        for w in [perceptron(&rows).unwrap(), fourier_motzkin(&rows).unwrap()] {
            assert!(rows.iter().all(|d| dot(d, &w) >= 1), "{w:?}");
        }
        let infeasible = vec![vec![1, -1], vec![-1, 1]];
        assert_eq!(fourier_motzkin(&infeasible), None);
        assert_eq!(solve_strict_cone(&infeasible), None);
    }

    #[test]
    fn chain_needs_no_constraint() {
        let c2 = Poset::chain(2).unwrap();
        let w = realize_weight_wc(&c2).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.iter().all(|&x| x >= 0));
    }

    #[test]
    fn antichain_two_inequality() {
        let a2 = Poset::antichain(2).unwrap();
        let vars = VariableSystem::new(&a2, ToricKind::C);
        let w = realize_weight_wc(&a2).unwrap();
        let at = |bits: u64| {
            let ideal = crate::poset::ElementSet::from_bits(bits);
            let sign: Vec<i8> = (0..2).map(|i| ideal.contains(i) as i8).collect();
            w[vars.find(ideal, &sign).unwrap()]
        };
        assert!(at(0b01) + at(0b10) > at(0b11) + at(0b00));
    }

    #[test]
    fn sweep_small_posets() {
        for n in 1..=3 {
            for p in enumerate_posets(n).unwrap() {
                let w = realize_weight_wc(&p).unwrap();
                assert!(w.iter().all(|&x| x >= 0));
            }
        }
    }
}
