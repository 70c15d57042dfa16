"""Closed-form K-theory ranks for the catalog root data, the PGL sheaf
decomposition, the SO_{2n} evaluator and the Kunneth rule."""
from collections import Counter

from .combinatorics import (count_multipartitions, divisors, dual_partition, enum_bipartitions,
                            enum_partitions, euler_phi, num_blocks, partition_gcd, power_partition)
from .rootdata import canonical_name

SUPPORTED = ("GL", "SL", "PGL", "SO_odd", "Sp", "SO_even", "G2")


class KRanks:
    __slots__ = ("k0", "k1", "torsion_free", "flags")

    def __init__(self, k0, k1, torsion_free=True, flags=()):
        if k0 < 0 or k1 < 0:
            raise ValueError("ranks must be nonnegative")
        self.k0 = k0
        self.k1 = k1
        self.torsion_free = torsion_free
        self.flags = tuple(flags)

    def __eq__(self, other):
        if isinstance(other, KRanks):
            return (self.k0, self.k1) == (other.k0, other.k1)
        return (self.k0, self.k1) == tuple(other)

    def __hash__(self):
        return hash((self.k0, self.k1))

    def __iter__(self):
        return iter((self.k0, self.k1))

    def __repr__(self):
        return "KRanks(%d, %d)" % (self.k0, self.k1)

    @property
    def total(self):
        return self.k0 + self.k1

    def as_dict(self):
        return {"k0": self.k0, "k1": self.k1, "torsion_free": self.torsion_free,
                "flags": list(self.flags)}


def gl_ranks(n):
    r = sum(2 ** (num_blocks(mu) - 1) for mu in enum_partitions(n))
    return KRanks(r, r)


def sl_ranks(n):
    """Disjoint union of gcd(mu) tori of dimension b(mu) - 1, summed over mu."""
    k0 = k1 = 0
    for mu in enum_partitions(n):
        b, g = num_blocks(mu), partition_gcd(mu)
        if b == 1:
            k0 += g
        else:
            k0 += g * 2 ** (b - 2)
            k1 += g * 2 ** (b - 2)
    return KRanks(k0, k1)


def d_total(n):
    return sum(partition_gcd(mu) * 2 ** (num_blocks(mu) - 1) for mu in enum_partitions(n))


def pgl_sheaf_ranks(mu):
    """Rank of the PGL_n summand for mu, by summing the subsheaves over r | gcd(mu^v)
    and by the closed form; the two must agree."""
    mu = tuple(mu)
    if sum(mu) < 1:
        raise ValueError("need |mu| >= 1")
    dual = dual_partition(mu)
    g = partition_gcd(dual)
    # r runs over divisors of gcd(mu^v), which is the gcd of the multiplicities of mu
    by_sheaves = sum(euler_phi(r) * 2 ** (num_blocks(power_partition(mu, r)) - 1)
                     for r in divisors(g))
    closed = g * 2 ** (num_blocks(dual) - 1)
    if by_sheaves != closed:
        raise ArithmeticError("PGL sheaf ranks disagree for %r: %d != %d" % (mu, by_sheaves, closed))
    return closed


def so_odd_ranks(n):
    return KRanks(count_multipartitions(3, n), 0)


def _odd_parts(mu):
    return Counter(p for p in mu if p % 2)


def so_even_odd_rank(n):
    out = 0
    for mu in enum_partitions(n):
        odd = _odd_parts(mu)
        if all(m == 1 for m in odd.values()) and len(odd) % 2 == 1:
            out += 1
    return out


def so_even_even_terms(n):
    """The four contributions to the even rank, in order."""
    first = 0
    for mu, lam in enum_bipartitions(n):
        k = Counter(lam)
        total = sum(k.values())
        if total > 0 and total % 2 == 0:
            term = 1
            for m in k.values():
                term *= m + 1
            first += term
    parts = enum_partitions(n)
    second = 2 * sum(1 for mu in parts if all(p % 2 == 0 for p in mu))
    third = sum(1 for mu in parts if any(p % 2 for p in mu))
    fourth = 0
    for mu in parts:
        odd = _odd_parts(mu)
        if all(m == 1 for m in odd.values()) and len(odd) > 0 and len(odd) % 2 == 0:
            fourth += 1
    return first, second, third, fourth


def so_even_ranks(n):
    flags = ("reducible_special",) if n == 2 else ()
    if n <= 1:
        flags = ("low_rank",)
    return KRanks(sum(so_even_even_terms(n)), so_even_odd_rank(n), flags=flags)


def g2_ranks():
    return KRanks(8, 0)


def ktheory_ranks(kind, n=None):
    name = canonical_name(kind)
    if name == "G2":
        return g2_ranks()
    if name not in SUPPORTED:
        raise ValueError("no closed form for %s" % name)
    if n is None or int(n) < 1:
        raise ValueError("%s needs n >= 1" % name)
    n = int(n)
    if name == "GL":
        return gl_ranks(n)
    if name in ("SL", "PGL"):
        return sl_ranks(n)
    if name in ("SO_odd", "Sp"):
        return so_odd_ranks(n)
    return so_even_ranks(n)


def kunneth_product(a, b):
    if not (a.torsion_free and b.torsion_free):
        raise ValueError("Kunneth rule needs torsion-free inputs")
    return KRanks(a.k0 * b.k0 + a.k1 * b.k1, a.k0 * b.k1 + a.k1 * b.k0)
