use std::cmp::Ordering;

use serde::Serialize;

use super::poly::Monomial;
use super::{ToricKind, VariableSystem};
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrderKind {
    #[serde(rename = "revlex_O")]
    RevlexO,
    #[serde(rename = "revlex_C")]
    RevlexC,
    #[serde(rename = "revlex_Oe")]
    RevlexOe,
    #[serde(rename = "weighted_Ce")]
    WeightedCe,
}

/// A monomial order on the variables of one [`VariableSystem`].
///
/// Revlex kinds compare by degree, then the monomial with the larger exponent
/// on the smallest variable where the two differ is the smaller one.
/// `WeightedCe` compares `w_sharp`, then `w_ce`, then falls back to revlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrderSpec {
    kind: OrderKind,
    // rank[v]: position of variable v in the ascending variable order
    rank: Vec<u32>,
    identity_rank: bool,
    weights: Option<(Vec<i64>, Vec<i64>)>,
}

impl MonomialOrderSpec {
    /// Revlex over the default variable order (variable index = rank).
    pub fn revlex(kind: OrderKind, num_vars: usize) -> Self {
        MonomialOrderSpec {
            kind,
            rank: (0..num_vars as u32).collect(),
            identity_rank: true,
            weights: None,
        }
    }

    pub fn weighted_ce(w_sharp: Vec<i64>, w_ce: Vec<i64>) -> Result<Self> {
        if w_sharp.len() != w_ce.len() {
            return Err(Error::LengthMismatch { got: w_ce.len(), expected: w_sharp.len() });
        }
        let mut order = MonomialOrderSpec::revlex(OrderKind::WeightedCe, w_sharp.len());
        order.weights = Some((w_sharp, w_ce));
        Ok(order)
    }

    /// The order the quadratic generators of `kind` are stated for. For `Ce`
    /// this realizes `w_C` first.
    pub fn for_kind(poset: &Poset, vars: &VariableSystem) -> Result<Self> {
        let n = vars.len();
        Ok(match vars.kind() {
            ToricKind::O => MonomialOrderSpec::revlex(OrderKind::RevlexO, n),
            ToricKind::C => MonomialOrderSpec::revlex(OrderKind::RevlexC, n),
            ToricKind::Oe => MonomialOrderSpec::revlex(OrderKind::RevlexOe, n),
            ToricKind::Ce => {
                let c_vars = VariableSystem::new(poset, ToricKind::C);
                let w_c = super::weight::realize_weight_wc(poset)?;
                let w_sharp = vars.labels().iter().map(|v| v.top.len() as i64).collect();
                let w_ce = vars
                    .labels()
                    .iter()
                    .map(|v| {
                        let plus: Vec<i8> = v.sign.iter().map(|e| e.abs()).collect();
                        let c = c_vars.find(v.ideal, &plus).expect("C variable for every ideal");
                        w_c[c]
                    })
                    .collect();
                MonomialOrderSpec::weighted_ce(w_sharp, w_ce)?
            }
        })
    }

    /// Replaces the variable order by `ascending`, which must list every
    /// variable once.
    pub fn with_variable_order(mut self, ascending: &[usize]) -> Result<Self> {
        let n = self.rank.len();
        if ascending.len() != n {
            return Err(Error::LengthMismatch { got: ascending.len(), expected: n });
        }
        let mut rank = vec![u32::MAX; n];
        for (r, &v) in ascending.iter().enumerate() {
            if v >= n || rank[v] != u32::MAX {
                return Err(Error::Precondition(format!(
                    "variable order is not a permutation at position {r}"
                )));
            }
            rank[v] = r as u32;
        }
        self.identity_rank = rank.iter().enumerate().all(|(v, &r)| r as usize == v);
        self.rank = rank;
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.rank.len()
    }

    /// Variables in ascending order.
    pub fn variable_order(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = (0..self.rank.len()).collect();
        vars.sort_by_key(|&v| self.rank[v]);
        vars
    }

    /// `(w_sharp, w_ce)` for the weighted order.
    pub fn weights(&self) -> Option<(&[i64], &[i64])> {
        self.weights.as_ref().map(|(a, b)| (a.as_slice(), b.as_slice()))
    }

    /// Whether `I ⊊ J` puts every `I`-variable below every `J`-variable.
    pub fn refines_inclusion(&self, vars: &VariableSystem) -> bool {
        let labels = vars.labels();
        labels.iter().enumerate().all(|(a, x)| {
            labels.iter().enumerate().all(|(b, y)| {
                x.ideal == y.ideal || !x.ideal.is_subset(y.ideal) || self.rank[a] < self.rank[b]
            })
        })
    }

    fn revlex_cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        let by_degree = u.degree().cmp(&v.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        // Equal degree: compare ascending rank sequences lexicographically;
        // a smaller entry first means more weight on a smaller variable.
        if self.identity_rank {
            return u.var_slice().cmp(v.var_slice());
        }
        let ranks = |m: &Monomial| {
            let mut r: Vec<u32> = m.vars().map(|x| self.rank[x]).collect();
            r.sort_unstable();
            r
        };
        ranks(u).cmp(&ranks(v))
    }

    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        if let Some((sharp, wce)) = &self.weights {
            let weight = |w: &[i64], m: &Monomial| m.vars().map(|x| w[x]).sum::<i64>();
            let c = weight(sharp, u)
                .cmp(&weight(sharp, v))
                .then_with(|| weight(wce, u).cmp(&weight(wce, v)));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.revlex_cmp(u, v)
    }
}

pub fn compare(order: &MonomialOrderSpec, u: &Monomial, v: &Monomial) -> Ordering {
    order.cmp(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::from_vars(v.to_vec())
    }

    #[test]
    fn revlex_basics() {
        let o = MonomialOrderSpec::revlex(OrderKind::RevlexO, 4);
        // x1 x2 > x0 x3: the smallest variable x0 occurs only on the right
        assert_eq!(o.cmp(&mono(&[1, 2]), &mono(&[0, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[1, 2]), &mono(&[1, 2])), Ordering::Equal);
        assert_eq!(o.cmp(&mono(&[0]), &mono(&[0, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[3, 3]), &mono(&[2, 3])), Ordering::Greater);
    }

    #[test]
    fn permuted_order() {
        let o = MonomialOrderSpec::revlex(OrderKind::RevlexO, 3)
            .with_variable_order(&[2, 1, 0])
            .unwrap();
        assert_eq!(o.cmp(&mono(&[0]), &mono(&[2])), Ordering::Greater);
        assert_eq!(o.variable_order(), vec![2, 1, 0]);
        assert!(MonomialOrderSpec::revlex(OrderKind::RevlexO, 3)
            .with_variable_order(&[0, 0, 1])
            .is_err());
    }

    #[test]
    fn weights_dominate() {
        let o = MonomialOrderSpec::weighted_ce(vec![0, 1, 1], vec![5, 0, 3]).unwrap();
        // w_sharp decides
        assert_eq!(o.cmp(&mono(&[1, 1]), &mono(&[0, 2])), Ordering::Greater);
        // equal w_sharp, w_ce decides against revlex
        assert_eq!(o.cmp(&mono(&[0, 2]), &mono(&[0, 1])), Ordering::Greater);
        // both weights tie: revlex
        let tie = MonomialOrderSpec::weighted_ce(vec![1, 1, 1], vec![0, 0, 0]).unwrap();
        assert_eq!(tie.cmp(&mono(&[1, 2]), &mono(&[0, 2])), Ordering::Greater);
    }

    fn monomial_strategy() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..6, 0..5).prop_map(Monomial::from_vars)
    }

    fn orders() -> impl Strategy<Value = MonomialOrderSpec> {
        prop_oneof![
            Just(MonomialOrderSpec::revlex(OrderKind::RevlexO, 6)),
            Just(MonomialOrderSpec::revlex(OrderKind::RevlexO, 6)
                .with_variable_order(&[3, 0, 5, 1, 4, 2])
                .unwrap()),
            Just(MonomialOrderSpec::weighted_ce(vec![0, 1, 1, 2, 1, 2], vec![0, 3, 1, 0, 2, 7]).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(o in orders(), u in monomial_strategy(), v in monomial_strategy(), w in monomial_strategy()) {
            let uv = o.cmp(&u, &v);
            prop_assert_eq!(uv, o.cmp(&v, &u).reverse());
            prop_assert_eq!(uv == Ordering::Equal, u == v);
            if uv == Ordering::Less && o.cmp(&v, &w) == Ordering::Less {
                prop_assert_eq!(o.cmp(&u, &w), Ordering::Less);
            }
            prop_assert_eq!(o.cmp(&u.mul(&w), &v.mul(&w)), uv);
            // 1 is the least monomial
            prop_assert_ne!(o.cmp(&Monomial::one(), &u), Ordering::Greater);
        }
    }
}
