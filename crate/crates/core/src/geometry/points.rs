use super::{PolytopeKind, SignedPoint};
use crate::poset::{ElementSet, Poset};

/// Every lattice point of the polytope, deduplicated and sorted.
pub fn lattice_points(poset: &Poset, kind: PolytopeKind) -> Vec<SignedPoint> {
    let n = poset.n();
    let mut out = Vec::new();
    match kind {
        PolytopeKind::Order => {
            for f in poset.filters().iter() {
                out.push(signed(n, f, ElementSet::empty(), 0));
            }
        }
        PolytopeKind::Chain => {
            for a in poset.antichains().iter() {
                out.push(signed(n, ElementSet::empty(), a, 0));
            }
        }
        PolytopeKind::EnrichedOrder => {
            for f in poset.filters().iter() {
                let lows = poset.min_of(f);
                push_all_signs(n, lows, f.difference(lows), &mut out);
            }
        }
        PolytopeKind::EnrichedOrderDual => {
            for i in poset.ideals().iter() {
                let tops = poset.max_of(i);
                push_all_signs(n, tops, i.difference(tops), &mut out);
            }
        }
        PolytopeKind::EnrichedChain => {
            for a in poset.antichains().iter() {
                push_all_signs(n, a, ElementSet::empty(), &mut out);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

// +1 on `positive`; on `signed` the bit k of `mask` (in element order) picks -1.
fn signed(n: usize, positive: ElementSet, signed: ElementSet, mask: u64) -> SignedPoint {
    let mut c = vec![0i8; n];
    for i in positive.iter() {
        c[i] = 1;
    }
    for (k, i) in signed.iter().enumerate() {
        c[i] = if mask >> k & 1 == 1 { -1 } else { 1 };
    }
    SignedPoint(c)
}

fn push_all_signs(n: usize, signed_part: ElementSet, positive: ElementSet, out: &mut Vec<SignedPoint>) {
    for mask in 0..1u64 << signed_part.len() {
        out.push(signed(n, positive, signed_part, mask));
    }
}
