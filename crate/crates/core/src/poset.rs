//! Finite posets on `{0, .., n-1}` together with the ideal, filter, antichain
//! and chain combinatorics used by the polytope and toric modules.
//!
//! Elements are 0-based everywhere inside the library. The JSON format and
//! the CLI use 1-based labels; conversion happens in [`PosetSpec`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap imposed by the bitset representation.
pub const MAX_ELEMENTS: usize = 64;

/// Largest `n` accepted by [`enumerate_posets`].
pub const ENUMERATION_LIMIT: usize = 5;

/// A subset of the ground set, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet(0)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based labels, for output.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Size first, then lexicographic on the sorted element list.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElementSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Filter,
    Ideal,
    Antichain,
}

/// A complete family of subsets of one kind, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    pub kind: FamilyKind,
    pub members: Vec<ElementSet>,
}

impl SubsetFamily {
    fn new(kind: FamilyKind, mut members: Vec<ElementSet>) -> Self {
        members.sort_by(ElementSet::canonical_cmp);
        SubsetFamily { kind, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.members.iter().copied()
    }
}

/// Union, intersection and the `I * J` ideal of a pair of ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealOps {
    pub union: ElementSet,
    pub intersection: ElementSet,
    pub star: ElementSet,
}

/// Chains in increasing poset order, each stored as an element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainData {
    /// Saturated chains `i_1 ⋖ .. ⋖ i_r` whose top `i_r` is maximal in the poset.
    pub saturated_to_max: Vec<Vec<usize>>,
    /// Saturated chains from a minimal to a maximal element.
    pub maximal: Vec<Vec<usize>>,
    /// `mc_by_length[l]` counts maximal chains with `l + 1` elements.
    pub mc_by_length: Vec<usize>,
}

impl ChainData {
    pub fn sc(&self) -> usize {
        self.saturated_to_max.len()
    }

    pub fn mc(&self) -> usize {
        self.maximal.len()
    }
}

/// A finite partial order on `{0, .., n-1}`.
///
/// `below[j]` holds every `i` with `i < j`; `covers` is the transitive
/// reduction, sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    below: Vec<ElementSet>,
    above: Vec<ElementSet>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(usize, usize)> =
            self.covers.iter().map(|&(i, j)| (i + 1, j + 1)).collect();
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from 1-based relation pairs `(i, j)` meaning `i < j`.
    ///
    /// The pairs need not be reduced; the stored covers are the transitive
    /// reduction of their closure.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                n,
                limit: MAX_ELEMENTS,
                what: "posets",
            });
        }
        let mut zero_based = Vec::with_capacity(relations.len());
        for &(i, j) in relations {
            for label in [i, j] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            zero_based.push((i - 1, j - 1));
        }
        Self::from_relations(n, &zero_based)
    }

    /// Same as [`Poset::new`] with 0-based pairs.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut below = vec![ElementSet::empty(); n];
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::LabelOutOfRange {
                    label: i.max(j) + 1,
                    n,
                });
            }
            below[j].insert(i);
        }
        // Warshall closure on bitsets.
        for k in 0..n {
            for j in 0..n {
                if below[j].contains(k) {
                    below[j] = below[j].union(below[k]);
                }
            }
        }
        if (0..n).any(|i| below[i].contains(i)) {
            return Err(Error::NotPartialOrder);
        }
        Ok(Self::from_closure(below))
    }

    fn from_closure(below: Vec<ElementSet>) -> Self {
        let n = below.len();
        let mut above = vec![ElementSet::empty(); n];
        for (j, b) in below.iter().enumerate() {
            for i in b.iter() {
                above[i].insert(j);
            }
        }
        let mut covers = Vec::new();
        for (j, &b) in below.iter().enumerate() {
            for i in b.iter() {
                // i ⋖ j unless some k sits strictly between them
                if b.intersection(above[i]).is_empty() {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        Poset {
            n,
            covers,
            below,
            above,
        }
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_relations(n, &[])
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let rel: Vec<(usize, usize)> = (1..n).map(|j| (j - 1, j)).collect();
        Self::from_relations(n, &rel)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cover relations `(i, j)` with `i ⋖ j`, 0-based and sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Strict order test `i < j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    /// Elements strictly below `i`.
    pub fn strictly_below(&self, i: usize) -> ElementSet {
        self.below[i]
    }

    /// Elements strictly above `i`.
    pub fn strictly_above(&self, i: usize) -> ElementSet {
        self.above[i]
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers
            .iter()
            .filter(move |&&(a, _)| a == i)
            .map(|&(_, b)| b)
    }

    /// Every comparable pair `(i, j)` with `i < j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for i in self.below[j].iter() {
                out.push((i, j));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn dual(&self) -> Poset {
        Self::from_closure(self.above.clone())
    }

    pub fn is_antichain(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.comparable(i, j)))
    }

    pub fn minimal(&self) -> ElementSet {
        self.min_of(self.ground())
    }

    pub fn maximal(&self) -> ElementSet {
        self.max_of(self.ground())
    }

    /// Maximal elements of `s` in the induced order.
    pub fn max_of(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .filter(|&i| self.above[i].intersection(s).is_empty())
            .collect()
    }

    /// Minimal elements of `s` in the induced order.
    pub fn min_of(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .filter(|&i| self.below[i].intersection(s).is_empty())
            .collect()
    }

    pub fn is_ideal(&self, s: ElementSet) -> bool {
        s.iter().all(|i| self.below[i].is_subset(s))
    }

    pub fn is_filter(&self, s: ElementSet) -> bool {
        s.iter().all(|i| self.above[i].is_subset(s))
    }

    pub fn is_antichain_set(&self, s: ElementSet) -> bool {
        s.iter().all(|i| self.below[i].intersection(s).is_empty())
    }

    /// The ideal generated by `s`.
    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(s, |acc, i| acc.union(self.below[i]))
    }

    /// The filter generated by `s`.
    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(s, |acc, i| acc.union(self.above[i]))
    }

    /// `I \ max(I)` for an ideal `I`.
    pub fn comax(&self, ideal: ElementSet) -> Result<ElementSet> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(ideal.labels()));
        }
        Ok(ideal.difference(self.max_of(ideal)))
    }

    /// `F \ min(F)` for a filter `F`.
    pub fn comin(&self, filter: ElementSet) -> Result<ElementSet> {
        if !self.is_filter(filter) {
            return Err(Error::NotAFilter(filter.labels()));
        }
        Ok(filter.difference(self.min_of(filter)))
    }

    fn all_subsets_where(&self, keep: impl Fn(ElementSet) -> bool) -> Vec<ElementSet> {
        assert!(self.n < 32, "subset scan limited to n < 32");
        (0..1u64 << self.n)
            .map(ElementSet::from_bits)
            .filter(|&s| keep(s))
            .collect()
    }

    pub fn ideals(&self) -> SubsetFamily {
        SubsetFamily::new(
            FamilyKind::Ideal,
            self.all_subsets_where(|s| self.is_ideal(s)),
        )
    }

    pub fn filters(&self) -> SubsetFamily {
        SubsetFamily::new(
            FamilyKind::Filter,
            self.all_subsets_where(|s| self.is_filter(s)),
        )
    }

    pub fn antichains(&self) -> SubsetFamily {
        SubsetFamily::new(
            FamilyKind::Antichain,
            self.all_subsets_where(|s| self.is_antichain_set(s)),
        )
    }

    /// `I * J`: the ideal generated by `max(I ∩ J) ∩ (max(I) ∪ max(J))`.
    pub fn star(&self, i: ElementSet, j: ElementSet) -> ElementSet {
        let generators = self
            .max_of(i.intersection(j))
            .intersection(self.max_of(i).union(self.max_of(j)));
        self.down_closure(generators)
    }

    pub fn ideal_ops(&self, i: ElementSet, j: ElementSet) -> Result<IdealOps> {
        for s in [i, j] {
            if !self.is_ideal(s) {
                return Err(Error::NotAnIdeal(s.labels()));
            }
        }
        Ok(IdealOps {
            union: i.union(j),
            intersection: i.intersection(j),
            star: self.star(i, j),
        })
    }

    /// Evaluates the four equivalent conditions on `p ∈ max(I) \ max(J)`:
    /// `p ∈ J`, `p ∈ max(I ∩ J)`, `p ∈ max(I * J)`, `p ∉ max(I ∪ J)`.
    pub fn four_conditions(&self, p: usize, i: ElementSet, j: ElementSet) -> Result<[bool; 4]> {
        let ops = self.ideal_ops(i, j)?;
        if p >= self.n || !self.max_of(i).contains(p) || self.max_of(j).contains(p) {
            return Err(Error::Precondition(format!(
                "element {} must lie in max(I) \\ max(J)",
                p + 1
            )));
        }
        Ok([
            j.contains(p),
            self.max_of(ops.intersection).contains(p),
            self.max_of(ops.star).contains(p),
            !self.max_of(ops.union).contains(p),
        ])
    }

    pub fn chains(&self) -> ChainData {
        let maxima = self.maximal();
        let minima = self.minimal();
        let mut saturated = Vec::new();
        let mut path = Vec::new();
        for start in 0..self.n {
            self.extend_to_max(start, maxima, &mut path, &mut saturated);
        }
        saturated.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let maximal: Vec<Vec<usize>> = saturated
            .iter()
            .filter(|c| minima.contains(c[0]))
            .cloned()
            .collect();
        let mut mc_by_length = vec![0; self.n];
        for c in &maximal {
            mc_by_length[c.len() - 1] += 1;
        }
        ChainData {
            saturated_to_max: saturated,
            maximal,
            mc_by_length,
        }
    }

    fn extend_to_max(
        &self,
        at: usize,
        maxima: ElementSet,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        path.push(at);
        if maxima.contains(at) {
            out.push(path.clone());
        } else {
            for next in self.upper_covers(at) {
                self.extend_to_max(next, maxima, path, out);
            }
        }
        path.pop();
    }

    /// Whether the X poset occurs as an induced subposet: some `c` with two
    /// incomparable elements `a, b < c` and two incomparable `d, e > c`.
    pub fn contains_x_poset(&self) -> bool {
        (0..self.n).any(|c| {
            self.has_incomparable_pair(self.below[c]) && self.has_incomparable_pair(self.above[c])
        })
    }

    fn has_incomparable_pair(&self, s: ElementSet) -> bool {
        s.iter().any(|a| s.iter().any(|b| !self.comparable(a, b)))
    }

    pub fn is_naturally_labeled(&self) -> bool {
        self.covers.iter().all(|&(i, j)| i < j)
    }

    /// A linear extension as an element list, smallest first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = ElementSet::empty();
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let next = (0..self.n)
                .find(|&i| !placed.contains(i) && self.below[i].is_subset(placed))
                .expect("a finite poset always has a minimal remaining element");
            placed.insert(next);
            order.push(next);
        }
        order
    }

    /// Relabels along a linear extension. Returns the relabeled poset and
    /// `new_label[old]`; the identity map when already naturally labeled.
    pub fn natural_relabeling(&self) -> (Poset, Vec<usize>) {
        if self.is_naturally_labeled() {
            return (self.clone(), (0..self.n).collect());
        }
        let order = self.linear_extension();
        let mut new_label = vec![0; self.n];
        for (new, &old) in order.iter().enumerate() {
            new_label[old] = new;
        }
        let rel: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(i, j)| (new_label[i], new_label[j]))
            .collect();
        let relabeled =
            Self::from_relations(self.n, &rel).expect("relabeling preserves acyclicity");
        (relabeled, new_label)
    }

    pub fn to_spec(&self) -> PosetSpec {
        PosetSpec {
            n: self.n,
            covers: self.covers.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

/// Stacks antichains of the given sizes; every element of block `k` lies
/// below every element of block `k + 1`. Labels run upward block by block.
pub fn ordinal_sum(blocks: &[usize]) -> Result<Poset> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::EmptyBlocks);
    }
    let n: usize = blocks.iter().sum();
    let mut rel = Vec::new();
    let mut start = 0;
    for w in blocks.windows(2) {
        let lower = start..start + w[0];
        let upper = start + w[0]..start + w[0] + w[1];
        for i in lower {
            for j in upper.clone() {
                rel.push((i, j));
            }
        }
        start += w[0];
    }
    Poset::from_relations(n, &rel)
}

/// All labeled posets on `{0, .., n-1}`, each exactly once, in a fixed order.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
            what: "poset enumeration",
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut below = vec![ElementSet::empty(); n];
    assign_pairs(&pairs, 0, &mut below, &mut out);
    Ok(out)
}

// Each unordered pair is unrelated, i < j or j < i; keep transitive choices.
fn assign_pairs(
    pairs: &[(usize, usize)],
    k: usize,
    below: &mut Vec<ElementSet>,
    out: &mut Vec<Poset>,
) {
    if k == pairs.len() {
        if is_transitive(below) {
            out.push(Poset::from_closure(below.clone()));
        }
        return;
    }
    let (i, j) = pairs[k];
    assign_pairs(pairs, k + 1, below, out);
    below[j].insert(i);
    assign_pairs(pairs, k + 1, below, out);
    below[j].remove(i);
    below[i].insert(j);
    assign_pairs(pairs, k + 1, below, out);
    below[i].remove(j);
}

fn is_transitive(below: &[ElementSet]) -> bool {
    below
        .iter()
        .all(|b| b.iter().all(|i| below[i].is_subset(*b)))
}

/// The interchange format: `{"n": 3, "covers": [[1,3],[2,3]]}` with 1-based
/// labels. Covers need not be reduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl TryFrom<PosetSpec> for Poset {
    type Error = Error;

    fn try_from(spec: PosetSpec) -> Result<Poset> {
        let pairs: Vec<(usize, usize)> = spec.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::new(spec.n, &pairs)
    }
}

impl From<&Poset> for PosetSpec {
    fn from(p: &Poset) -> Self {
        p.to_spec()
    }
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let spec = PosetSpec::deserialize(deserializer)?;
        Poset::try_from(spec).map_err(serde::de::Error::custom)
    }
}
