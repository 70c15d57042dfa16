import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckek.combinatorics import (count_multipartitions, enum_bipartitions, enum_partitions,
                                  partition_count, sigma_mu_lambda)
from heckek.finite import CapacityError, closure
from heckek.linalg import matmul
from heckek.signed import SignedPermutation, direct_sum
from heckek.weyl import (Subgroup, build_group, centralizer, centralizer_elements, class_fusion,
                         conjugacy_classes, d_simple_roots, elliptic_class_count, fixed_dim,
                         is_elliptic, isotropy_subgroup, root_reflection, standard_parabolics,
                         subgroups_conjugate)


def signed_perms(n):
    return st.tuples(st.permutations(range(n)), st.lists(st.sampled_from((1, -1)),
                                                          min_size=n, max_size=n)).map(
        lambda t: SignedPermutation(t[0], t[1]))


def brute_orbits(W):
    """Conjugacy classes by direct conjugation: list of frozensets of elements."""
    els = W.elements()
    seen = set()
    out = []
    for x in els:
        if x in seen:
            continue
        orbit = frozenset(g * x * g.inverse() for g in els)
        seen |= orbit
        out.append(orbit)
    return out


def d_class_count(n):
    even_neg = sum(1 for mu, lam in enum_bipartitions(n) if len(lam) % 2 == 0)
    split = sum(1 for mu in enum_partitions(n) if all(p % 2 == 0 for p in mu))
    return even_neg + split


@settings(max_examples=100)
@given(signed_perms(5), signed_perms(5))
def test_composition_matches_matrices(a, b):
    assert (a * b).matrix() == matmul(a.matrix(), b.matrix())
    assert (a * a.inverse()).is_identity()
    x = [3, -1, 4, 1, -5]
    assert (a * b).act(x) == a.act(b.act(x))


def test_signed_permutation_rejects_bad_input():
    with pytest.raises(ValueError):
        SignedPermutation([0, 0])
    with pytest.raises(ValueError):
        SignedPermutation([0, 1], [1, 2])


def test_build_group_examples():
    assert build_group("B", 2).order == 8
    D1 = build_group("D", 1)
    assert D1.order == 1 and len(D1.elements()) == 1
    A11 = build_group("AlmostD", (1, 1))
    assert A11.order == 2
    els = A11.elements()
    assert SignedPermutation([0, 1], [-1, -1]) in els
    assert build_group("G2").order == 12
    assert build_group("C", 3).order == build_group("B", 3).order
    with pytest.raises(ValueError):
        build_group("E", 6)
    with pytest.raises(ValueError):
        build_group("B", 0)


def test_almost_weyl_is_intersection():
    for dims in ((1, 1), (2, 1), (2, 2), (1, 1, 1), (3, 1)):
        W = build_group("AlmostD", dims)
        n = sum(dims)
        bounds = []
        off = 0
        for m in dims:
            bounds.append((off, off + m))
            off += m
        B = build_group("B", n)
        expected = {w for w in B.elements() if w.sign_count() % 2 == 0
                    and all(all(lo <= w.image[i] < hi for i in range(lo, hi)) for lo, hi in bounds)}
        assert set(W.elements()) == expected
        assert W.order == len(expected)


def test_orders():
    assert build_group("A", 5).order == 120
    assert build_group("B", 4).order == 384
    assert build_group("D", 4).order == 192
    assert len(build_group("D", 4).elements()) == 192


def test_class_sizes_sum_to_order():
    groups = [build_group("A", n) for n in range(1, 7)]
    groups += [build_group("B", n) for n in range(1, 6)]
    groups += [build_group("D", n) for n in range(1, 6)]
    groups += [build_group("G2")]
    groups += [build_group("AlmostD", d) for d in ((1, 1), (2, 1), (2, 2), (1, 1, 1), (3, 2))]
    for W in groups:
        sizes = [c.size for c in conjugacy_classes(W)]
        assert sum(sizes) == W.order
        assert all(W.order % s == 0 for s in sizes)


def test_class_examples():
    assert sorted(c.size for c in build_group("A", 3).classes()) == [1, 2, 3]
    B2 = build_group("B", 2)
    assert sorted((tuple(c.label[0]), tuple(c.label[1])) for c in B2.classes()) == \
        sorted((tuple(m), tuple(l)) for m, l in enum_bipartitions(2))
    D2 = build_group("D", 2)
    labels = {(tuple(c.label[0]), tuple(c.label[1]), c.label[2]) for c in D2.classes()}
    assert labels == {((1, 1), (), ""), ((), (1, 1), ""), ((2,), (), ""), ((2,), (), "''")}


def test_class_counts():
    for n in range(1, 9):
        assert len(build_group("A", n).classes()) == partition_count(n)
    for n in range(1, 7):
        assert len(build_group("B", n).classes()) == count_multipartitions(2, n)
    for n in range(2, 7):
        assert len(build_group("D", n).classes()) == d_class_count(n)


def test_classes_match_brute_force_conjugation():
    groups = [build_group("A", 4), build_group("B", 3), build_group("D", 4), build_group("D", 2),
              build_group("G2"), build_group("AlmostD", (2, 1)), build_group("AlmostD", (2, 2)),
              build_group("AlmostD", (1, 1, 1))]
    for W in groups:
        orbits = brute_orbits(W)
        classes = W.classes()
        assert len(orbits) == len(classes)
        for orbit in orbits:
            idx = {W.class_index(x) for x in orbit}
            assert len(idx) == 1
            assert classes[idx.pop()].size == len(orbit)


def test_representatives_belong_to_their_class():
    for W in (build_group("B", 4), build_group("D", 4), build_group("AlmostD", (2, 2))):
        for k, c in enumerate(W.classes()):
            assert W.contains(c.representative)
            assert W.class_index(c.representative) == k


def test_centralizer_examples():
    for n in range(1, 6):
        S = build_group("A", n)
        for mu in enum_partitions(n):
            rep = S.classes()[S.class_index(sigma_mu_lambda(mu, ()))].representative
            expected = 1
            for l, m in Counter(mu).items():
                for k in range(1, m + 1):
                    expected *= l * k
            assert centralizer(S, rep)[0] == expected
    B2 = build_group("B", 2)
    assert centralizer(B2, B2.identity())[0] == 8
    assert centralizer(B2, sigma_mu_lambda((), (2,)))[0] == 4


def test_centralizer_generators_generate():
    W = build_group("B", 3)
    for c in W.classes():
        order, gens = centralizer(W, c.representative)
        assert order * c.size == W.order
        assert len(closure(gens, W.identity())) == order
        assert all(g * c.representative == c.representative * g for g in gens)


def test_centralizer_capacity():
    W = build_group("B", 4)
    with pytest.raises(CapacityError):
        centralizer_elements(W, W.identity(), bound=100)


def test_is_elliptic_examples():
    for n in range(2, 6):
        S = build_group("A", n)
        for c in S.classes():
            assert is_elliptic(S, c.representative) == (tuple(c.label) == (n,))
    S3 = build_group("A", 3)
    assert not is_elliptic(S3, SignedPermutation.from_cycles(3, [[1, 2]]))
    for n in range(1, 5):
        B = build_group("B", n)
        assert is_elliptic(B, SignedPermutation.sign_change(n, set(range(1, n + 1))))


def test_is_elliptic_is_a_class_function():
    groups = [build_group("A", 5), build_group("B", 5), build_group("D", 5), build_group("G2"),
              build_group("AlmostD", (2, 1)), build_group("AlmostD", (2, 2))]
    for W in groups:
        verdict = {}
        for w in W.elements():
            k = W.class_index(w)
            v = is_elliptic(W, w)
            assert verdict.setdefault(k, v) == v


def test_elliptic_class_counts():
    for n in range(1, 7):
        assert elliptic_class_count(build_group("A", n)) == 1
    for n in range(1, 6):
        assert elliptic_class_count(build_group("B", n)) == partition_count(n)
    assert elliptic_class_count(build_group("B", 4)) == 5
    for n in range(2, 6):
        even = sum(1 for mu in enum_partitions(n) if len(mu) % 2 == 0)
        assert elliptic_class_count(build_group("D", n)) == even
    assert elliptic_class_count(build_group("G2")) == 3


def test_standard_parabolics():
    for n in range(1, 7):
        assert len(standard_parabolics(build_group("A", n))) == partition_count(n)
    B2 = build_group("B", 2)
    pars = standard_parabolics(B2)
    assert len(pars) == 4
    full = [p for p in pars if not p.proper]
    assert len(full) == 1 and full[0].subgroup.order == B2.order
    G2 = build_group("G2")
    assert sorted(p.subgroup.order for p in standard_parabolics(G2)) == [1, 2, 2, 12]


def test_parabolic_fusion_is_consistent():
    W = build_group("B", 3)
    for par in standard_parabolics(W):
        sub = par.subgroup
        for rep, k in zip(sub.group.reps, sub.fusion):
            assert W.class_index(rep) == k


def test_class_fusion_examples():
    S3 = build_group("A", 3)
    H = [S3.identity(), SignedPermutation.from_cycles(3, [[1, 2]])]
    fusion = class_fusion(S3, H)
    labels = sorted(tuple(S3.classes()[k].label) for k in fusion)
    assert labels == [(1, 1, 1), (2, 1)]
    with pytest.raises(ValueError):
        class_fusion(S3, [SignedPermutation([1, 0, 2], [-1, -1, 1])])


def test_d2_split_classes_fuse_in_b2():
    B2 = build_group("B", 2)
    D2 = build_group("D", 2)
    sub = Subgroup(B2, D2.elements(), "D2")
    for rep, k in zip(sub.group.reps, sub.fusion):
        if rep.signed_cycle_type() == ((2,), ()):
            assert tuple(B2.classes()[k].label[0]) == (2,)
    split = [c for c in D2.classes() if tuple(c.label[0]) == (2,)]
    assert len(split) == 2
    assert len({B2.class_index(c.representative) for c in split}) == 1


def random_point(n, rng):
    # small denominators make nontrivial stabilizers likely
    return [Fraction(rng.randint(-2, 2), rng.choice((1, 2))) for _ in range(n)]


def reflections_fixing(B, y):
    return [w for w in B.elements() if w.order() == 2 and w.act(y) == list(y)
            and fixed_dim(w) == len(y) - 1]


def test_isotropy_groups_are_parabolic_for_weyl_groups():
    rng = random.Random(1)
    for W in (build_group("B", 3), build_group("D", 3), build_group("A", 4)):
        pars = [p.subgroup.elements for p in standard_parabolics(W)]
        for _ in range(100):
            y = random_point(W.ambient_dim, rng)
            H = isotropy_subgroup(W, y)
            assert any(subgroups_conjugate(W, H, P) for P in pars)


def test_almost_weyl_isotropy_is_intersection_with_b_isotropy():
    # The isotropy of a point in W' is W' intersected with the reflection
    # subgroup of W(B_n) fixing that point.
    rng = random.Random(2)
    for dims in ((1, 1), (2, 1), (2, 2), (1, 1, 1)):
        W = build_group("AlmostD", dims)
        n = sum(dims)
        B = build_group("B", n)
        for _ in range(100):
            y = random_point(n, rng)
            refl = closure(reflections_fixing(B, y), B.identity())
            assert set(isotropy_subgroup(W, y)) == {w for w in refl if W.contains(w)}


def test_almost_weyl_parabolics_contain_the_reflection_part():
    # each W'_P is a subgroup of W' that contains the reflections of P
    for dims in ((2, 1), (2, 2), (1, 1, 1)):
        W = build_group("AlmostD", dims)
        for par in standard_parabolics(W):
            els = set(par.subgroup.elements)
            assert W.identity() in els
            assert all(W.contains(g) for g in els)
            assert all(a * b in els for a in els for b in els)
            for name in par.subset:
                if name.startswith("a"):
                    root = d_simple_roots(dims)[int(name[1:]) - 1]
                    assert root_reflection(root) in els


def test_product_group():
    P = build_group("product", [build_group("A", 2), build_group("A", 3)])
    assert P.order == 12
    assert len(P.classes()) == 2 * 3
    assert elliptic_class_count(P) == 1
    w = direct_sum(SignedPermutation([1, 0]), SignedPermutation([1, 2, 0]))
    assert is_elliptic(P, w)
