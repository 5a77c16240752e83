use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::order::MonomialOrderSpec;

pub type Coeff = Ratio<i64>;

/// A monomial stored as the sorted multiset of its variable indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<u32>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![v as u32])
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut vars = Vec::new();
        for (v, &e) in exps.iter().enumerate() {
            vars.extend(std::iter::repeat_n(v as u32, e as usize));
        }
        Monomial(vars)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Variable indices with multiplicity, ascending.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    pub fn var_slice(&self) -> &[u32] {
        &self.0
    }

    /// `(variable, exponent)` pairs with positive exponent, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        let mut k = 0;
        std::iter::from_fn(move || {
            let v = *self.0.get(k)?;
            let start = k;
            while k < self.0.len() && self.0[k] == v {
                k += 1;
            }
            Some((v as usize, (k - start) as u32))
        })
    }

    pub fn exponent_vector(&self, num_vars: usize) -> Vec<i64> {
        let mut e = vec![0; num_vars];
        for &v in &self.0 {
            e[v as usize] += 1;
        }
        e
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&(v as u32)).is_ok()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &v in &self.0 {
            while j < other.0.len() && other.0[j] < v {
                j += 1;
            }
            if j == other.0.len() || other.0[j] != v {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(other.0.len() - self.0.len());
        let mut i = 0;
        for &v in &other.0 {
            if i < self.0.len() && self.0[i] == v {
                i += 1;
            } else {
                out.push(v);
            }
        }
        debug_assert_eq!(i, self.0.len());
        Monomial(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let a = self.0.get(i).copied().unwrap_or(u32::MAX);
            let b = other.0.get(j).copied().unwrap_or(u32::MAX);
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a);
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

/// A polynomial with exact rational coefficients; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).copied().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: Coeff, m: &Monomial, other: &Polynomial) {
        for (t, d) in &other.terms {
            self.add_term(m.mul(t), c * d);
        }
    }

    pub fn leading_term(&self, order: &MonomialOrderSpec) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .reduce(|a, b| if order.cmp(a.0, b.0).is_ge() { a } else { b })
    }

    pub fn make_monic(&mut self, order: &MonomialOrderSpec) {
        if let Some((_, &c)) = self.leading_term(order) {
            if !c.is_one() {
                for v in self.terms.values_mut() {
                    *v /= c;
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }
}

/// `lead - tail`, with `lead` the designated initial monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Monomial,
}

impl Binomial {
    pub fn new(lead: Monomial, tail: Monomial) -> Self {
        Binomial { lead, tail }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.tail.degree()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms([
            (self.lead.clone(), Coeff::one()),
            (self.tail.clone(), -Coeff::one()),
        ])
    }
}
