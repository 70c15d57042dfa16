"""Partitions, multipartitions and the statistics the rank formulas use."""
from collections import Counter
from functools import lru_cache
from math import gcd

from .signed import SignedPermutation, direct_sum

MAX_WEIGHT = 64


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive: %r" % (parts,))
        parts = tuple(sorted(parts, reverse=True))
        if sum(parts) > MAX_WEIGHT:
            raise OverflowError("partition weight above %d" % MAX_WEIGHT)
        return super().__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def weight(self):
        return sum(self)

    def multiplicities(self):
        """{part size: multiplicity}"""
        return dict(Counter(self))

    def __repr__(self):
        return "Partition(%s)" % (",".join(map(str, self)),)

    def __str__(self):
        return ".".join(map(str, self)) if self else "-"


class Multipartition(tuple):
    """An ordered tuple of partitions."""

    def __new__(cls, components):
        return super().__new__(cls, tuple(Partition(c) for c in components))

    @property
    def components(self):
        return tuple(self)

    @property
    def total_weight(self):
        return sum(c.weight for c in self)

    def __str__(self):
        return "|".join(str(c) for c in self)


def enum_partitions(n, max_part=None):
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_WEIGHT:
        raise OverflowError("partition weight above %d" % MAX_WEIGHT)
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]


@lru_cache(maxsize=None)
def _partitions(n, max_part):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(n):
    """p(n) via the pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def enum_multipartitions(k, n):
    """Ordered k-tuples of partitions of total weight n."""
    if k < 1:
        raise ValueError("k must be positive")
    out = []
    for comp in _compositions(n, k):
        pools = [enum_partitions(c) for c in comp]
        _product_into(pools, [], out)
    return [Multipartition(m) for m in out]


def _compositions(n, k):
    # weak compositions, first entry descending so the order is deterministic
    if k == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            out.append((first,) + rest)
    return out


def _product_into(pools, prefix, out):
    if not pools:
        out.append(tuple(prefix))
        return
    for item in pools[0]:
        _product_into(pools[1:], prefix + [item], out)


def enum_bipartitions(n):
    return enum_multipartitions(2, n)


@lru_cache(maxsize=None)
def count_multipartitions(k, n):
    """Number of ordered k-tuples of partitions with total weight n."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if k == 1:
        return partition_count(n)
    return sum(partition_count(m) * count_multipartitions(k - 1, n - m) for m in range(n + 1))


def num_blocks(mu):
    """b(mu): the number of distinct part sizes."""
    return len(set(mu))


def partition_gcd(mu):
    if len(mu) == 0:
        raise ValueError("gcd of the empty partition is undefined")
    g = 0
    for p in mu:
        g = gcd(g, p)
    return g


def dual_partition(mu):
    mu = Partition(mu)
    if not mu:
        return Partition(())
    return Partition([sum(1 for p in mu if p > i) for i in range(mu[0])])


def partition_stats(mu):
    """(b, gcd, dual); gcd is None for the empty partition."""
    mu = Partition(mu)
    g = partition_gcd(mu) if mu else None
    return num_blocks(mu), g, dual_partition(mu)


def power_partition(mu, r):
    """mu^(1/r): part l with multiplicity m becomes part l*r with multiplicity m/r."""
    mu = Partition(mu)
    if r < 1:
        raise ValueError("invalid divisor %r" % (r,))
    parts = []
    for l, m in mu.multiplicities().items():
        if m % r:
            raise ValueError("invalid divisor %d: multiplicity %d of part %d" % (r, m, l))
        parts.extend([l * r] * (m // r))
    return Partition(parts)


def euler_phi(m):
    if m < 1:
        raise ValueError("phi needs a positive argument")
    result = m
    p = 2
    x = m
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


# -- class representatives in signed permutation groups

def perm_from_partition(mu, n=None):
    """sigma(mu): consecutive cycles of lengths mu_1, mu_2, ... (padded to n)."""
    mu = Partition(mu)
    n = mu.weight if n is None else n
    if n < mu.weight:
        raise ValueError("partition heavier than the rank")
    cycles = []
    start = 1
    for p in mu:
        cycles.append(list(range(start, start + p)))
        start += p
    return SignedPermutation.from_cycles(n, cycles)


def negative_cycle_perm(lam):
    """sigma'(lam) = eps_I sigma(lam) with I the first index of every cycle."""
    lam = Partition(lam)
    idx = set()
    start = 1
    for p in lam:
        idx.add(start)
        start += p
    return SignedPermutation.sign_change(lam.weight, idx) * perm_from_partition(lam)


def sigma_mu_lambda(mu, lam):
    """sigma(mu, lam): positive cycles mu on the first |mu| coordinates, then sigma'(lam)."""
    mu, lam = Partition(mu), Partition(lam)
    return direct_sum(perm_from_partition(mu), negative_cycle_perm(lam))


def sigma_multi(*pairs):
    """Block sum of sigma(mu_i, lam_i) over the given pairs."""
    return direct_sum(*[sigma_mu_lambda(m, l) for m, l in pairs])


def sigma_double_prime(mu):
    """sigma''(mu) = sigma(mu) eps_{n-1,n}, defined for partitions with only even parts."""
    mu = Partition(mu)
    if any(p % 2 for p in mu):
        raise ValueError("sigma'' needs a partition with only even parts: %r" % (mu,))
    n = mu.weight
    return perm_from_partition(mu) * SignedPermutation.sign_change(n, {n - 1, n})


def signed_class_rep(kind, *args):
    """Dispatch helper: kind in {'sigma_prime', 'sigma', 'sigma3', 'sigma_pp'}."""
    if kind == "sigma_prime":
        return negative_cycle_perm(args[0])
    if kind == "sigma":
        return sigma_mu_lambda(args[0], args[1])
    if kind == "sigma3":
        mu, lam, rho = args
        return direct_sum(perm_from_partition(mu), negative_cycle_perm(lam),
                          negative_cycle_perm(rho))
    if kind == "sigma_pp":
        return sigma_double_prime(args[0])
    raise ValueError("unknown representative kind %r" % (kind,))
