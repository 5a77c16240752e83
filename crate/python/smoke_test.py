"""Imports the compiled extension and checks a few known values.

Build first:
    cargo build --release -p poset-polytopes-py --features extension-module
    cp target/release/libposet_polytopes_py.so python/poset_polytopes.so
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import poset_polytopes as pp  # noqa: E402

TWO_CHAIN = (2, [(1, 2)])
V_POSET = (3, [(1, 3), (2, 3)])


def main() -> None:
    assert pp.count(*TWO_CHAIN, "eorder", 2) == 13
    assert pp.left_enriched_counts(*TWO_CHAIN, 2) == [1, 5, 13]
    assert pp.ehrhart(*TWO_CHAIN, "eorder") == ["1", "2", "2"]

    coeffs = [Fraction(c) for c in pp.ehrhart(*V_POSET, "eorder")]
    assert coeffs == [1, Fraction(10, 3), 4, Fraction(8, 3)]
    assert len(pp.facets(*V_POSET, "eorder")) == 5
    assert len(pp.points(*V_POSET, "eorder")) == 11
    assert pp.facet_counts(*V_POSET)["f_eorder"] == 5
    assert pp.facet_counts(3, [(3, 1), (3, 2)])["f_eorder"] == 6

    report = pp.groebner(*V_POSET, "Oe")
    assert report["passed"]
    flags = report["initial_ideal"]
    assert flags["squarefree"] and flags["quadratic"] and flags["avoids_origin"]

    assert pp.max_facet_bounds(5)["bound_eorder"] == 15
    results = pp.reproduce_paper([1, 2])
    assert all(r["passed"] for r in results)

    try:
        pp.count(2, [(1, 2), (2, 1)], "eorder", 1)
    except ValueError:
        pass
    else:
        raise AssertionError("cyclic covers accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
