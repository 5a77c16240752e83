use std::collections::BTreeSet;

use super::poly::{Binomial, Monomial};
use super::{ToricKind, VariableLabel, VariableSystem};
use crate::poset::{ElementSet, Poset};

/// A variable system together with its quadratic generator family.
#[derive(Clone, Debug)]
pub struct ToricFamily {
    pub kind: ToricKind,
    pub vars: VariableSystem,
    pub binomials: Vec<Binomial>,
}

impl ToricFamily {
    pub fn len(&self) -> usize {
        self.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.binomials.is_empty()
    }

    pub fn binomial_string(&self, b: &Binomial) -> String {
        format!(
            "{} - {}",
            self.vars.monomial_string(&b.lead),
            self.vars.monomial_string(&b.tail)
        )
    }
}

struct Builder<'a> {
    poset: &'a Poset,
    vars: &'a VariableSystem,
    chain: bool,
}

impl Builder<'_> {
    fn lookup(&self, ideal: ElementSet, sign: &[i8]) -> u32 {
        self.vars
            .find(ideal, sign)
            .unwrap_or_else(|| panic!("no variable for ideal {ideal:?} with sign {sign:?}")) as u32
    }

    // x_{I \ p} with ε_p zeroed; for chain kinds the ideal generated by max(I) \ p.
    fn drop_top(&self, x: &VariableLabel, p: usize) -> u32 {
        let ideal = if self.chain {
            self.poset.down_closure(x.top.without(p))
        } else {
            x.ideal.without(p)
        };
        let mut sign = x.sign.clone();
        sign[p] = 0;
        self.lookup(ideal, &sign)
    }

    // Signs on max(K) are inherited from whichever of x, y has the element
    // on top; tops of K outside max(I) ∪ max(J) get +1.
    fn merged(&self, k: ElementSet, x: &VariableLabel, y: &VariableLabel) -> u32 {
        let top = self.poset.max_of(k);
        let mut sign = vec![0i8; self.vars.n()];
        for i in k.iter() {
            sign[i] = if top.contains(i) {
                if x.top.contains(i) {
                    x.sign[i]
                } else if y.top.contains(i) {
                    y.sign[i]
                } else {
                    1
                }
            } else if self.chain {
                0
            } else {
                1
            };
        }
        self.lookup(k, &sign)
    }

    fn build(&self) -> BTreeSet<Binomial> {
        let labels = self.vars.labels();
        let mut out = BTreeSet::new();
        for (a, x) in labels.iter().enumerate() {
            for (b, y) in labels.iter().enumerate().skip(a) {
                let lead = Monomial::from_vars(vec![a as u32, b as u32]);
                let shared = x.top.intersection(y.top);
                for p in shared.iter().filter(|&p| x.sign[p] != y.sign[p]) {
                    let tail = Monomial::from_vars(vec![self.drop_top(x, p), self.drop_top(y, p)]);
                    out.insert(Binomial::new(lead.clone(), tail));
                }
                let incomparable = !x.ideal.is_subset(y.ideal) && !y.ideal.is_subset(x.ideal);
                if incomparable && shared.iter().all(|p| x.sign[p] == y.sign[p]) {
                    let upper = x.ideal.union(y.ideal);
                    let lower = if self.chain {
                        self.poset.star(x.ideal, y.ideal)
                    } else {
                        x.ideal.intersection(y.ideal)
                    };
                    let tail = Monomial::from_vars(vec![
                        self.merged(upper, x, y),
                        self.merged(lower, x, y),
                    ]);
                    out.insert(Binomial::new(lead.clone(), tail));
                }
            }
        }
        out
    }
}

/// The quadratic binomials whose first monomial is the designated initial
/// term:
/// * `x_I x_J - x_{I∪J} x_{I∩J}` (order kinds) or
///   `x_{max I} x_{max J} - x_{max(I∪J)} x_{max(I*J)}` (chain kinds) for
///   `I`, `J` incomparable, with signs agreeing on `max I ∩ max J`;
/// * for enriched kinds, `x^ε_I x^μ_J - x_{I\p} x_{J\p}` with `p` dropped,
///   for every `p ∈ max I ∩ max J` with `ε_p ≠ μ_p` (including `I = J`).
pub fn generators(poset: &Poset, kind: ToricKind) -> ToricFamily {
    let vars = VariableSystem::new(poset, kind);
    let builder = Builder { poset, vars: &vars, chain: kind.is_chain() };
    let binomials = builder.build().into_iter().collect();
    ToricFamily { kind, vars, binomials }
}

/// Equal degree and equal image under `x -> t^ε s`.
pub fn is_pi_balanced(vars: &VariableSystem, b: &Binomial) -> bool {
    b.is_homogeneous() && vars.toric_image(&b.lead) == vars.toric_image(&b.tail)
}

/// Flips one top sign of one tail variable of binomial `k`, if the system
/// has the flipped variable. The result is no longer in the toric ideal.
pub fn mutate_sign(family: &ToricFamily, k: usize) -> Option<ToricFamily> {
    let b = family.binomials.get(k)?;
    for v in b.tail.vars() {
        let x = family.vars.label(v);
        for p in x.top.iter() {
            let mut sign = x.sign.clone();
            sign[p] = -sign[p];
            if let Some(w) = family.vars.find(x.ideal, &sign) {
                let mut tail: Vec<u32> = b.tail.var_slice().to_vec();
                let pos = tail.iter().position(|&t| t as usize == v).expect("v occurs in tail");
                tail[pos] = w as u32;
                let mut mutated = family.clone();
                mutated.binomials[k] = Binomial::new(b.lead.clone(), Monomial::from_vars(tail));
                return Some(mutated);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::enumerate_posets;

    fn render(f: &ToricFamily) -> Vec<String> {
        f.binomials.iter().map(|b| f.binomial_string(b)).collect()
    }

    #[test]
    fn two_chain_order_family_is_empty() {
        let c2 = Poset::chain(2).unwrap();
        assert!(generators(&c2, ToricKind::O).is_empty());
        assert!(generators(&c2, ToricKind::C).is_empty());
    }

    #[test]
    fn antichain_two_enriched_examples() {
        let a2 = Poset::antichain(2).unwrap();
        let oe = render(&generators(&a2, ToricKind::Oe));
        assert!(oe.contains(&"x[1]^-*x[1]^+ - x[]^2".to_string()), "{oe:?}");
        assert!(oe.contains(&"x[1]^+*x[2]^- - x[]*x[1,2]^+-".to_string()), "{oe:?}");
        let o = render(&generators(&a2, ToricKind::O));
        assert_eq!(o, vec!["x[1]*x[2] - x[]*x[1,2]"]);
    }

    #[test]
    fn classical_counts_are_incomparable_pairs() {
        for p in enumerate_posets(3).unwrap() {
            let ideals: Vec<ElementSet> = p.ideals().iter().collect();
            let mut pairs = 0;
            for (a, &i) in ideals.iter().enumerate() {
                for &j in &ideals[a + 1..] {
                    if !i.is_subset(j) && !j.is_subset(i) {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(generators(&p, ToricKind::O).len(), pairs);
            assert_eq!(generators(&p, ToricKind::C).len(), pairs);
        }
    }

    #[test]
    fn all_binomials_pi_balanced() {
        for n in 1..=3 {
            for p in enumerate_posets(n).unwrap() {
                for kind in ToricKind::ALL {
                    let f = generators(&p, kind);
                    for b in &f.binomials {
                        assert!(is_pi_balanced(&f.vars, b), "{p:?} {kind} {}", f.binomial_string(b));
                        assert!(b.lead.is_squarefree());
                        assert_eq!(b.lead.degree(), 2);
                    }
                }
            }
        }
    }

    #[test]
    fn mutation_breaks_balance() {
        let a2 = Poset::antichain(2).unwrap();
        let f = generators(&a2, ToricKind::Oe);
        let m = (0..f.len()).find_map(|k| mutate_sign(&f, k)).unwrap();
        let changed: Vec<_> = m.binomials.iter().zip(&f.binomials).filter(|(a, b)| a != b).collect();
        assert_eq!(changed.len(), 1);
        assert!(!is_pi_balanced(&m.vars, changed[0].0));
    }
}
