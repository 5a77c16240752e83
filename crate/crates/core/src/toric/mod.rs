//! Toric ideals of the (enriched) order and chain polytopes of the dual
//! poset: variable systems, quadratic generator families, monomial orders,
//! S-pair verification, initial ideals and Hilbert function counts.
//!
//! Every variable is indexed by a poset ideal `I` together with a sign
//! vector. Chain-type variables stand for the antichain `max(I)`.

mod generators;
mod groebner;
mod initial;
mod order;
mod poly;
mod weight;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poset::{ElementSet, Poset};

pub use generators::{generators, is_pi_balanced, mutate_sign, ToricFamily};
pub use groebner::{
    buchberger_verify, normal_form, reduced_groebner_basis, s_polynomial, BuchbergerReport,
    SPairFailure,
};
pub use initial::{
    initial_ideal, initial_isomorphism_check, lead_selection_holds, standard_monomial_count,
    InitialIdeal, IsomorphismReport,
};
pub use order::{compare, MonomialOrderSpec, OrderKind};
pub use poly::{Binomial, Coeff, Monomial, Polynomial};
pub use weight::{realize_weight_wc, solve_strict_cone};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ToricKind {
    O,
    C,
    Oe,
    Ce,
}

impl ToricKind {
    pub const ALL: [ToricKind; 4] = [ToricKind::O, ToricKind::C, ToricKind::Oe, ToricKind::Ce];

    pub fn name(self) -> &'static str {
        match self {
            ToricKind::O => "O",
            ToricKind::C => "C",
            ToricKind::Oe => "Oe",
            ToricKind::Ce => "Ce",
        }
    }

    pub fn is_enriched(self) -> bool {
        matches!(self, ToricKind::Oe | ToricKind::Ce)
    }

    /// Chain-type variables carry signs on `max(I)` only.
    pub fn is_chain(self) -> bool {
        matches!(self, ToricKind::C | ToricKind::Ce)
    }

    /// The kind on the other side of `x_I -> x_{max(I)}`.
    pub fn partner(self) -> ToricKind {
        match self {
            ToricKind::O => ToricKind::C,
            ToricKind::C => ToricKind::O,
            ToricKind::Oe => ToricKind::Ce,
            ToricKind::Ce => ToricKind::Oe,
        }
    }
}

impl fmt::Display for ToricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ToricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ToricKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown toric kind {s:?}")))
    }
}

/// A variable `x_I^ε` (order kinds) or `x_{max(I)}^ε` (chain kinds).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableLabel {
    pub kind: ToricKind,
    pub ideal: ElementSet,
    /// `max(I)`.
    pub top: ElementSet,
    pub sign: Vec<i8>,
}

impl VariableLabel {
    /// The set the subscript names: `I` for order kinds, `max(I)` for chain kinds.
    pub fn subscript(&self) -> ElementSet {
        if self.kind.is_chain() {
            self.top
        } else {
            self.ideal
        }
    }

    /// Default total order: `(|I|, sorted elements of I, sign vector)`.
    /// Refines inclusion of ideals.
    pub fn default_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ideal
            .canonical_cmp(&other.ideal)
            .then_with(|| self.sign.cmp(&other.sign))
    }
}

impl fmt::Display for VariableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub: Vec<String> = self.subscript().labels().iter().map(|l| l.to_string()).collect();
        write!(f, "x[{}]", sub.join(","))?;
        if self.kind.is_enriched() {
            let signs: String = self
                .subscript()
                .iter()
                .filter(|&i| self.kind.is_chain() || self.top.contains(i))
                .map(|i| if self.sign[i] < 0 { '-' } else { '+' })
                .collect();
            if !signs.is_empty() {
                write!(f, "^{signs}")?;
            }
        }
        Ok(())
    }
}

/// `(t-exponents, s-exponent)` of `π(x) = t^ε s`.
pub fn toric_map(v: &VariableLabel) -> (Vec<i64>, u32) {
    (v.sign.iter().map(|&e| e as i64).collect(), 1)
}

/// All variables of one kind, sorted by [`VariableLabel::default_cmp`];
/// a variable's index is its position.
#[derive(Clone, Debug)]
pub struct VariableSystem {
    kind: ToricKind,
    n: usize,
    labels: Vec<VariableLabel>,
    index: HashMap<(u64, Vec<i8>), usize>,
}

impl VariableSystem {
    pub fn new(poset: &Poset, kind: ToricKind) -> Self {
        let n = poset.n();
        let mut labels = Vec::new();
        for ideal in poset.ideals().iter() {
            let top = poset.max_of(ideal);
            let tops = top.to_vec();
            let patterns: u64 = if kind.is_enriched() { 1 << tops.len() } else { 1 };
            for mask in 0..patterns {
                let mut sign = vec![0i8; n];
                if !kind.is_chain() {
                    for i in ideal.iter() {
                        sign[i] = 1;
                    }
                }
                for (k, &i) in tops.iter().enumerate() {
                    sign[i] = if mask >> k & 1 == 1 { -1 } else { 1 };
                }
                labels.push(VariableLabel { kind, ideal, top, sign });
            }
        }
        labels.sort_by(|a, b| a.default_cmp(b));
        let index = labels
            .iter()
            .enumerate()
            .map(|(k, v)| ((v.ideal.bits(), v.sign.clone()), k))
            .collect();
        VariableSystem { kind, n, labels, index }
    }

    pub fn kind(&self) -> ToricKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[VariableLabel] {
        &self.labels
    }

    pub fn label(&self, var: usize) -> &VariableLabel {
        &self.labels[var]
    }

    pub fn find(&self, ideal: ElementSet, sign: &[i8]) -> Option<usize> {
        self.index.get(&(ideal.bits(), sign.to_vec())).copied()
    }

    /// Index of `x_∅`, the variable mapped to the origin.
    pub fn origin(&self) -> usize {
        self.find(ElementSet::empty(), &vec![0; self.n])
            .expect("the empty ideal always carries a variable")
    }

    pub fn toric_image(&self, m: &Monomial) -> Vec<i64> {
        let mut t = vec![0i64; self.n];
        for v in m.vars() {
            for (acc, &e) in t.iter_mut().zip(&self.labels[v].sign) {
                *acc += e as i64;
            }
        }
        t
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        if m.degree() == 0 {
            return "1".to_string();
        }
        m.exponents()
            .map(|(v, e)| {
                if e == 1 {
                    self.labels[v].to_string()
                } else {
                    format!("{}^{e}", self.labels[v])
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub fn variables(poset: &Poset, kind: ToricKind) -> Vec<VariableLabel> {
    VariableSystem::new(poset, kind).labels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_counts() {
        let a2 = Poset::antichain(2).unwrap();
        let a3 = Poset::antichain(3).unwrap();
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(variables(&a2, ToricKind::Oe).len(), 9);
        assert_eq!(variables(&c2, ToricKind::O).len(), 3);
        assert_eq!(variables(&a3, ToricKind::Ce).len(), 27);
        assert_eq!(variables(&a3, ToricKind::C).len(), 8);
    }

    // Σ_I 2^{|max I|} against an independent subset scan.
    #[test]
    fn enriched_count_formula() {
        for p in crate::poset::enumerate_posets(3).unwrap() {
            let mut expected = 0;
            for bits in 0..1u64 << p.n() {
                let s = ElementSet::from_bits(bits);
                let down = s.iter().all(|i| p.strictly_below(i).is_subset(s));
                if down {
                    expected += 1 << p.max_of(s).len();
                }
            }
            for kind in [ToricKind::Oe, ToricKind::Ce] {
                assert_eq!(variables(&p, kind).len(), expected);
            }
        }
    }

    #[test]
    fn sign_patterns() {
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        for kind in ToricKind::ALL {
            for x in variables(&v, kind) {
                for i in 0..3 {
                    let s = x.sign[i];
                    let nonzero = x.top.contains(i) || (x.ideal.contains(i) && !kind.is_chain());
                    let expected_abs = i8::from(nonzero);
                    assert_eq!(s.abs(), expected_abs, "{x}");
                    if !kind.is_enriched() || (x.ideal.contains(i) && !x.top.contains(i)) {
                        assert!(s >= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn toric_map_is_sign() {
        let a2 = Poset::antichain(2).unwrap();
        let sys = VariableSystem::new(&a2, ToricKind::Oe);
        assert_eq!(toric_map(sys.label(sys.origin())), (vec![0, 0], 1));
        for x in sys.labels() {
            let (t, s) = toric_map(x);
            assert_eq!(s, 1);
            assert_eq!(t, x.sign.iter().map(|&e| e as i64).collect::<Vec<_>>());
        }
    }

    #[test]
    fn default_order_refines_inclusion() {
        let p = Poset::new(4, &[(1, 3), (2, 3), (2, 4)]).unwrap();
        for kind in ToricKind::ALL {
            let vars = variables(&p, kind);
            for (a, x) in vars.iter().enumerate() {
                for (b, y) in vars.iter().enumerate() {
                    if x.ideal != y.ideal && x.ideal.is_subset(y.ideal) {
                        assert!(a < b);
                    }
                }
            }
        }
    }

    #[test]
    fn labels_display() {
        let a2 = Poset::antichain(2).unwrap();
        let sys = VariableSystem::new(&a2, ToricKind::Oe);
        let names: Vec<String> = sys.labels().iter().map(|v| v.to_string()).collect();
        assert_eq!(names[0], "x[]");
        assert!(names.contains(&"x[1,2]^+-".to_string()));
    }
}
