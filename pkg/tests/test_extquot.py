from math import comb

import pytest

from heckek.combinatorics import enum_partitions, num_blocks
from heckek.extquot import (PoincareProfile, as_kranks, compare_with_closed_form,
                            equivariant_euler, equivariant_poincare,
                            extended_quotient_components, kunneth)
from heckek.finite import CapacityError
from heckek.ktables import ktheory_ranks, kunneth_product
from heckek.rootdata import catalog_root_datum, product_datum

TYPES = ("GL", "SL", "PGL", "SO_odd", "Sp", "SO_even")


def test_profile_totals():
    p = PoincareProfile([3, 4, 1, 0, 0])
    assert p.dims == [3, 4, 1]
    assert (p.total, p.even_total, p.odd_total) == (8, 4, 4)
    assert p.total == p.even_total + p.odd_total


def test_examples():
    assert equivariant_poincare(catalog_root_datum("GL", 2)).dims == [2, 2]
    assert equivariant_poincare(catalog_root_datum("PGL", 2)).dims == [3]
    assert equivariant_poincare(catalog_root_datum("SO_odd", 1)).dims == [3]


def test_g2_strata():
    strata = extended_quotient_components(catalog_root_datum("G2"))
    assert len(strata) == 6
    assert sorted(s.component_count for s in strata) == [1, 1, 1, 1, 2, 2]
    assert sum(s.component_count for s in strata) == 8
    assert equivariant_poincare(catalog_root_datum("G2")).dims == [8]
    for s in strata:
        assert sum(s.poincare[1:]) == 0


def test_gl_strata_have_rank_b_mu():
    for n in range(1, 5):
        R = catalog_root_datum("GL", n)
        strata = extended_quotient_components(R)
        by_label = {tuple(s.label): s for s in strata}
        for mu in enum_partitions(n):
            s = by_label[tuple(mu)]
            # homotopy equivalent to a torus of dimension b(mu)
            b = num_blocks(mu)
            assert s.component_count == 1
            assert s.poincare[:b + 1] == [comb(b, j) for j in range(b + 1)]
            assert sum(s.poincare[b + 1:]) == 0


def test_identity_stratum_is_connected():
    for kind in TYPES:
        for n in range(1, 4):
            R = catalog_root_datum(kind, n)
            strata = extended_quotient_components(R)
            for s in strata:
                assert all(v >= 0 for v in s.poincare)
            ident = strata[R.weyl.class_index(R.weyl.identity())]
            assert ident.fixed_rank == R.X_rank and ident.raw_components == 1
            assert ident.component_count == 1 and ident.poincare[0] == 1


def test_type_b_strata_are_acyclic():
    for kind in ("SO_odd", "Sp"):
        for n in range(1, 5):
            assert equivariant_poincare(catalog_root_datum(kind, n)).odd_total == 0


def test_compare_with_closed_form_all_types():
    for kind in TYPES:
        for n in range(1, 5):
            rep = compare_with_closed_form(catalog_root_datum(kind, n))
            assert rep.passed, rep
    rep = compare_with_closed_form(catalog_root_datum("G2"))
    assert rep.passed and rep.as_dict()["pass"]


def test_compare_examples():
    rep = compare_with_closed_form(catalog_root_datum("GL", 3))
    assert rep.oracle.total == 8 and rep.passed
    rep = compare_with_closed_form(catalog_root_datum("SO_odd", 2))
    assert (rep.oracle.even_total, rep.oracle.odd_total) == (9, 0)


def test_euler_characteristic_matches_parity_split():
    for kind in TYPES:
        for n in range(1, 5):
            R = catalog_root_datum(kind, n)
            p = equivariant_poincare(R)
            assert equivariant_euler(R) == p.even_total - p.odd_total
    R = catalog_root_datum("G2")
    assert equivariant_euler(R) == 8


def test_kunneth_on_products():
    for a, b in ((("GL", 1), ("GL", 2)), (("SL", 2), ("SL", 2)), (("GL", 2), ("SO_odd", 1))):
        R1, R2 = catalog_root_datum(*a), catalog_root_datum(*b)
        P = product_datum(R1, R2)
        prod = equivariant_poincare(P)
        assert prod == kunneth(equivariant_poincare(R1), equivariant_poincare(R2))
        closed = as_kranks(prod)
        assert closed == kunneth_product(ktheory_ranks(*a), ktheory_ranks(*b))
    assert equivariant_poincare(product_datum(catalog_root_datum("GL", 1),
                                              catalog_root_datum("GL", 2))).dims == [2, 4, 2]
    assert equivariant_poincare(product_datum(catalog_root_datum("SL", 2),
                                              catalog_root_datum("SL", 2))).dims == [9]


def test_almost_weyl_profiles_are_integral():
    expected = {(1, 1): [5, 0, 1], (2, 1): [13, 1], (2, 2): [42], (1, 1, 1): [13, 0, 0, 1]}
    for dims, profile in expected.items():
        R = catalog_root_datum("AlmostD", dims)
        p = equivariant_poincare(R)
        assert p.dims == profile
        assert equivariant_euler(R) == p.even_total - p.odd_total


def test_centralizer_bound():
    with pytest.raises(CapacityError):
        equivariant_poincare(catalog_root_datum("SO_odd", 4), bound=100)


def test_stratum_summary_dict():
    s = extended_quotient_components(catalog_root_datum("PGL", 2))
    d = [x.as_dict() for x in s]
    assert sorted(x["raw_components"] for x in d) == [1, 2]
    assert all(set(x) >= {"class", "poincare", "component_count"} for x in d)
