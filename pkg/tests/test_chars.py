import json
import random
from fractions import Fraction

import pytest

from heckek import chars
from heckek.chars import (ClassFunction, CharacterTable, character_table, check_orthogonality,
                          decompose, dixon_prime, dixon_table, induce, induce_from, inner_product,
                          mn_character, regular_character, restrict, subgroup_table)
from heckek.combinatorics import count_multipartitions, partition_count
from heckek.weyl import build_group, standard_parabolics


def catalog_groups():
    out = [build_group("A", n) for n in range(1, 7)]
    out += [build_group("B", n) for n in range(1, 6)]
    out += [build_group("D", n) for n in range(1, 6)]
    out += [build_group("G2")]
    out += [build_group("AlmostD", d) for d in ((1, 1), (2, 1), (2, 2), (1, 1, 1))]
    return out


def rows_by_values(table):
    return sorted(tuple(r) for r in table.values)


def identity_first(table):
    # rows as tuples with the identity class moved to the front
    e = table.identity_class
    return sorted(tuple([r[e]] + [v for k, v in enumerate(r) if k != e]) for r in table.values)


def test_s2_and_s3_examples():
    S2 = character_table(build_group("A", 2))
    assert identity_first(S2) == [(1, -1), (1, 1)]
    S3 = build_group("A", 3)
    t = character_table(S3)
    order = [S3.class_index(S3.identity())]
    order += [k for k, c in enumerate(S3.classes()) if tuple(c.label) == (2, 1)]
    order += [k for k, c in enumerate(S3.classes()) if tuple(c.label) == (3,)]
    std = [r for lab, r in zip(t.irr_labels, t.values) if tuple(lab) == (2, 1)][0]
    assert [std[k] for k in order] == [2, 0, -1]
    assert mn_character((2, 1), (3,)) == -1


def test_b2_degrees():
    t = character_table(build_group("B", 2))
    assert sorted(t.degrees()) == [1, 1, 1, 1, 2]


def test_all_tables_are_orthogonal_and_start_with_trivial():
    for W in catalog_groups():
        t = character_table(W)
        assert check_orthogonality(t)
        assert t.values[0] == [1] * len(t)
        assert sum(d * d for d in t.degrees()) == W.order
        assert len(t.values) == len(W.classes())


def test_irreducible_counts():
    for n in range(1, 9):
        assert len(character_table(build_group("A", n)).values) == partition_count(n)
    for n in range(1, 7):
        assert len(character_table(build_group("B", n)).values) == count_multipartitions(2, n)


def test_combinatorial_tables_agree_with_dixon():
    for W in (build_group("A", 5), build_group("B", 3), build_group("B", 4), build_group("D", 4),
              build_group("D", 2), build_group("D", 5)):
        t = character_table(W)
        d = dixon_table(W.finite_group(), W.descriptor(), [c.label for c in W.classes()])
        assert rows_by_values(t) == rows_by_values(d)


def test_dixon_prime():
    for order, exponent in ((48, 12), (12, 6), (384, 24), (1, 1), (46080, 120)):
        p = dixon_prime(order, exponent)
        assert (p - 1) % exponent == 0 and p * p > 4 * order
        assert all(p % q for q in range(2, int(p ** 0.5) + 1))
        smaller = [q for q in range(2, p) if (q - 1) % exponent == 0 and q * q > 4 * order
                   and all(q % r for r in range(2, int(q ** 0.5) + 1))]
        assert not smaller


def test_dixon_detects_orthogonality_failure():
    t = character_table(build_group("A", 3))
    bad = CharacterTable(t.group_id, t.class_labels, t.class_sizes, t.irr_labels,
                         [r[:] for r in t.values])
    bad.values[1][0] += 1
    with pytest.raises(AssertionError):
        check_orthogonality(bad)


def test_class_function_arithmetic():
    f = ClassFunction("G", [1, 2])
    g = ClassFunction("G", [3, -1])
    assert (f + g).values == [4, 1]
    assert (f - g).values == [-2, 3]
    assert (f * g).values == [3, -2]
    assert (2 * f).values == [2, 4]
    with pytest.raises(ValueError):
        f + ClassFunction("H", [1, 1])


def test_inner_product_examples():
    S3 = character_table(build_group("A", 3))
    for r in S3.values:
        assert inner_product(S3, r, r) == 1
    reg = regular_character(S3)
    assert inner_product(S3, S3.values[0], reg) == 1
    assert inner_product(S3, reg, reg) == 6
    with pytest.raises(ValueError):
        inner_product(S3, [1, 1], reg)


def test_induction_examples():
    # from the trivial group to Z/2
    triv = induce([0], [1], 1, [1, 1], 2, [1])
    assert triv.values == [2, 0]
    S3 = build_group("A", 3)
    t = character_table(S3)
    par = [p for p in standard_parabolics(S3) if p.subgroup.order == 2][0]
    st = subgroup_table(par.subgroup)
    ind = induce_from(par.subgroup, st, t, [1] * len(st.class_sizes))
    by_label = {tuple(c.label): v for c, v in zip(S3.classes(), ind.values)}
    assert by_label == {(1, 1, 1): 3, (2, 1): 1, (3,): 0}
    std = [r for lab, r in zip(t.irr_labels, t.values) if tuple(lab) == (2, 1)][0]
    assert decompose(t, ind) == [1 if r in (t.values[0], std) else 0 for r in t.values]


def test_restriction_examples():
    S3 = build_group("A", 3)
    t = character_table(S3)
    par = [p for p in standard_parabolics(S3) if p.subgroup.order == 2][0]
    st = subgroup_table(par.subgroup)
    assert restrict(par.fusion, t.values[0]).values == [1, 1]
    std = [r for lab, r in zip(t.irr_labels, t.values) if tuple(lab) == (2, 1)][0]
    res = restrict(par.fusion, std)
    assert sorted(res.values) == [0, 2]
    assert decompose(st, res) == [1, 1]


def test_induced_degree():
    W = build_group("B", 3)
    t = character_table(W)
    for par in standard_parabolics(W):
        st = subgroup_table(par.subgroup)
        for row in st.values:
            ind = induce_from(par.subgroup, st, t, row)
            deg = row[st.identity_class]
            assert ind.values[t.identity_class] == W.order // par.subgroup.order * deg


def test_induction_and_restriction_multiplicities_nonnegative():
    for W in (build_group("B", 3), build_group("D", 4), build_group("G2"),
              build_group("AlmostD", (2, 2))):
        t = character_table(W)
        for par in standard_parabolics(W):
            st = subgroup_table(par.subgroup)
            for row in st.values:
                assert min(decompose(t, induce_from(par.subgroup, st, t, row))) >= 0
            for row in t.values:
                assert min(decompose(st, restrict(par.fusion, row))) >= 0


def test_frobenius_reciprocity_random_pairs():
    rng = random.Random(2024)
    pool = []
    for W in (build_group("A", 5), build_group("B", 3), build_group("D", 4), build_group("G2")):
        t = character_table(W)
        for par in standard_parabolics(W):
            pool.append((W, t, par, subgroup_table(par.subgroup)))
    for _ in range(200):
        W, t, par, st = rng.choice(pool)
        f = [rng.randint(-3, 3) for _ in st.class_sizes]
        f = [sum(c * v for c, v in zip(f, col)) for col in zip(*st.values)]
        g = [rng.randint(-3, 3) for _ in t.class_sizes]
        g = [sum(c * v for c, v in zip(g, col)) for col in zip(*t.values)]
        lhs = inner_product(t, induce_from(par.subgroup, st, t, f), g)
        rhs = inner_product(st, f, restrict(par.fusion, g).values)
        assert lhs == rhs
        assert isinstance(lhs, Fraction) and lhs.denominator == 1


def test_cache_round_trip(tmp_path):
    W = build_group("D", 4)
    chars._memory.pop(W.descriptor(), None)
    first = character_table(W, cache_dir=str(tmp_path))
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    text = files[0].read_text()
    doc = json.loads(text)
    assert doc["format_version"] == chars.FORMAT_VERSION
    assert doc["matrix"] == first.values
    chars._memory.pop(W.descriptor(), None)
    second = character_table(W, cache_dir=str(tmp_path))
    assert second.values == first.values
    assert json.dumps(second.to_json(), sort_keys=True) == json.dumps(first.to_json(), sort_keys=True)
    assert files[0].read_text() == text


def test_corrupt_cache_is_recomputed(tmp_path):
    W = build_group("B", 3)
    chars._memory.pop(W.descriptor(), None)
    good = character_table(W, cache_dir=str(tmp_path))
    path = list(tmp_path.glob("*.json"))[0]
    doc = json.loads(path.read_text())
    doc["matrix"][1][0] += 1
    path.write_text(json.dumps(doc))
    chars._memory.pop(W.descriptor(), None)
    again = character_table(W, cache_dir=str(tmp_path))
    assert again.values == good.values
