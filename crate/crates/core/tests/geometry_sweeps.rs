use poset_polytopes::geometry::{
    central_symmetry_check, count_dilation, count_interior, ehrhart, facet_count_formulas, facets,
    lattice_points, verify_facet_system, PolytopeKind,
};
use poset_polytopes::poset::enumerate_posets;

#[test]
fn vertex_and_facet_descriptions_agree() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            for kind in PolytopeKind::ALL {
                let r = verify_facet_system(&p, kind);
                assert!(r.passed(), "{p:?} {kind} {r:?}");
            }
        }
    }
}

#[test]
fn facet_formulas_match_facet_lists() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            let f = facet_count_formulas(&p);
            assert_eq!(facets(&p, PolytopeKind::EnrichedOrder).len(), f.f_eorder, "{p:?}");
            assert_eq!(facets(&p, PolytopeKind::EnrichedChain).len(), f.f_echain, "{p:?}");
            assert_eq!(facets(&p, PolytopeKind::Order).len(), f.f_order, "{p:?}");
            assert_eq!(facets(&p, PolytopeKind::Chain).len(), f.f_chain, "{p:?}");
        }
    }
}

#[test]
fn ehrhart_identities() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            let eorder = ehrhart(&p, PolytopeKind::EnrichedOrder).unwrap();
            assert_eq!(ehrhart(&p.dual(), PolytopeKind::EnrichedOrder).unwrap(), eorder, "{p:?}");
            assert_eq!(ehrhart(&p, PolytopeKind::EnrichedChain).unwrap(), eorder, "{p:?}");
            assert_eq!(ehrhart(&p, PolytopeKind::EnrichedOrderDual).unwrap(), eorder, "{p:?}");
            assert_eq!(
                ehrhart(&p, PolytopeKind::Order).unwrap(),
                ehrhart(&p, PolytopeKind::Chain).unwrap(),
                "{p:?}"
            );
        }
    }
}

// Reflexive polytopes: interior points of mP are the points of (m-1)P.
#[test]
fn interior_counts_shift_by_one() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            for kind in [PolytopeKind::EnrichedOrder, PolytopeKind::EnrichedChain] {
                for m in 1..=2 {
                    assert_eq!(count_interior(&p, kind, m), count_dilation(&p, kind, m - 1), "{p:?} {kind}");
                }
            }
        }
    }
}

// Reciprocity L(-m-1) = (-1)^n L(m), which reflexivity predicts.
#[test]
fn enriched_ehrhart_reciprocity() {
    for n in 1..=3 {
        for p in enumerate_posets(n).unwrap() {
            let l = ehrhart(&p, PolytopeKind::EnrichedOrder).unwrap();
            for m in 0..=n as i64 {
                let lhs = l.eval_int(-m - 1);
                let rhs = l.eval_int(m) * num_rational::BigRational::from_integer(if n % 2 == 0 { 1 } else { -1 }.into());
                assert_eq!(lhs, rhs, "{p:?} m={m}");
            }
        }
    }
}

#[test]
fn enriched_facet_inequality() {
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let f = facet_count_formulas(&p);
            assert!(f.f_eorder <= f.f_echain, "{p:?}");
        }
    }
}

#[test]
fn antichain_characterization() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            let f = facet_count_formulas(&p);
            let symmetric = central_symmetry_check(&lattice_points(&p, PolytopeKind::EnrichedOrder));
            assert_eq!(p.is_antichain(), symmetric, "{p:?}");
            assert_eq!(p.is_antichain(), f.f_eorder == f.f_echain, "{p:?}");
        }
    }
}

#[test]
fn x_poset_characterization() {
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let f = facet_count_formulas(&p);
            assert_eq!(p.contains_x_poset(), f.f_order != f.f_chain, "{p:?}");
        }
    }
}
