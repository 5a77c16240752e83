use poset_polytopes::geometry::{count_dilation, ehrhart, PolytopeKind};
use poset_polytopes::partitions::{
    count_left_enriched, count_order_preserving, is_left_enriched, left_enriched_on_covers,
    left_enriched_polynomial, order_polynomial, LabeledMap,
};
use poset_polytopes::poset::enumerate_posets;
use poset_polytopes::Poset;

fn naturally_labeled(n: usize) -> Vec<Poset> {
    enumerate_posets(n)
        .unwrap()
        .into_iter()
        .filter(Poset::is_naturally_labeled)
        .collect()
}

#[test]
fn left_enriched_counts_are_lattice_point_counts() {
    for n in 1..=4 {
        for p in naturally_labeled(n) {
            for m in 0..=n as u32 + 1 {
                let c = count_left_enriched(&p, m).unwrap();
                assert_eq!(c, count_dilation(&p, PolytopeKind::EnrichedOrder, m), "{p:?} m={m}");
                assert_eq!(c, count_dilation(&p, PolytopeKind::EnrichedOrderDual, m), "{p:?} m={m}");
                assert_eq!(c, count_dilation(&p, PolytopeKind::EnrichedChain, m), "{p:?} m={m}");
            }
            assert_eq!(
                left_enriched_polynomial(&p).unwrap(),
                ehrhart(&p, PolytopeKind::EnrichedOrder).unwrap()
            );
        }
    }
}

#[test]
fn order_polynomial_is_order_polytope_ehrhart() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            for m in 0..=n as u32 + 1 {
                let c = count_order_preserving(&p, m);
                assert_eq!(c, count_dilation(&p, PolytopeKind::Order, m), "{p:?} m={m}");
                assert_eq!(c, count_dilation(&p, PolytopeKind::Chain, m), "{p:?} m={m}");
            }
            assert_eq!(order_polynomial(&p).unwrap(), ehrhart(&p, PolytopeKind::Order).unwrap());
        }
    }
}

// Every map with |f| <= 2, checked on covers and on all comparable pairs.
#[test]
fn cover_check_suffices() {
    for n in 1..=4 {
        for p in naturally_labeled(n) {
            let mut values = vec![-2i64; n];
            loop {
                let f = LabeledMap(values.clone());
                assert_eq!(is_left_enriched(&f, &p).unwrap(), left_enriched_on_covers(&f, &p));
                let Some(k) = values.iter().position(|&v| v < 2) else { break };
                values[k] += 1;
                for v in &mut values[..k] {
                    *v = -2;
                }
            }
        }
    }
}
