"""Elliptic representation lattices via Smith normal form, and the Bala-Carter
component-group bookkeeping for unipotent classes of SO_{2n+1}."""
from collections import Counter

from .chars import character_table, decompose, induce_from, subgroup_table
from .combinatorics import Partition, enum_partitions
from .linalg import IntMatrix, cokernel_invariants
from .weyl import elliptic_class_count, standard_parabolics


class EllipticReport:
    def __init__(self, group, irr_count, rank, torsion, elliptic_classes, columns):
        self.group = group
        self.irr_count = irr_count
        self.rank = rank
        self.torsion_invariants = list(torsion)
        self.elliptic_class_count = elliptic_classes
        self.columns = columns

    @property
    def torsion_free(self):
        return not self.torsion_invariants

    def as_dict(self):
        return {
            "group": self.group,
            "irreducibles": self.irr_count,
            "rank": self.rank,
            "torsion_invariants": self.torsion_invariants,
            "elliptic_class_count": self.elliptic_class_count,
            "induction_columns": self.columns,
        }

    def __repr__(self):
        return "EllipticReport(%s, rank=%d, torsion=%r, elliptic=%d)" % (
            self.group, self.rank, self.torsion_invariants, self.elliptic_class_count)


def induction_matrix(W, cache_dir=None):
    """Rows: Irr(W). Columns: Irr(W)-multiplicities of ind_{W_P}^W(chi) for every
    irreducible chi of one proper standard parabolic per conjugacy class."""
    table = character_table(W, cache_dir=cache_dir)
    cols = []
    for par in standard_parabolics(W):
        if not par.proper:
            continue
        sub = par.subgroup
        st = subgroup_table(sub)
        if st.values is None:
            raise ArithmeticError("parabolic subgroup with irrational characters")
        for row in st.values:
            cols.append(decompose(table, induce_from(sub, st, table, row)))
    k = len(table.values)
    rows = [[c[i] for c in cols] for i in range(k)]
    return IntMatrix(rows, len(cols))


def elliptic_quotient(W, cache_dir=None):
    M = induction_matrix(W, cache_dir=cache_dir)
    if M.ncols == 0:
        rank, torsion = M.nrows, []
    else:
        rank, torsion = cokernel_invariants(M.rows, M.nrows)
    return EllipticReport(W.descriptor(), M.nrows, rank, torsion, elliptic_class_count(W), M.ncols)


# -- unipotent classes of SO_{2n+1}

class UnipotentClassBC:
    """Bala-Carter pair (alpha, beta) with 2|alpha| + |beta| = 2n + 1, beta odd distinct."""

    __slots__ = ("alpha", "beta", "n")

    def __init__(self, alpha, beta, n):
        alpha, beta = Partition(alpha), Partition(beta)
        if 2 * alpha.weight + beta.weight != 2 * n + 1:
            raise ValueError("weights do not add up to 2n+1")
        if any(p % 2 == 0 for p in beta) or len(set(beta)) != len(beta):
            raise ValueError("beta must have distinct odd parts")
        self.alpha, self.beta, self.n = alpha, beta, n

    def key(self):
        return (tuple(self.alpha), tuple(self.beta))

    def __eq__(self, other):
        return isinstance(other, UnipotentClassBC) and self.key() == other.key() and self.n == other.n

    def __hash__(self):
        return hash((self.key(), self.n))

    def __repr__(self):
        return "UnipotentClassBC(%r, %r)" % (tuple(self.alpha), tuple(self.beta))


def _distinct_odd_partitions(m):
    return [b for b in enum_partitions(m) if all(p % 2 for p in b) and len(set(b)) == len(b)]


def unipotent_classes_so_odd(n):
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for a in range(n, -1, -1):
        for alpha in enum_partitions(a):
            for beta in _distinct_odd_partitions(2 * n + 1 - 2 * a):
                out.append(UnipotentClassBC(alpha, beta, n))
    return out


def vanishing_reason(c):
    """Which of the three vanishing conditions applies, or None."""
    counts = Counter(c.alpha)
    if any(p % 2 == 0 for p in counts):
        return "alpha has an even term"
    if any(m > 1 for p, m in counts.items()):
        return "alpha has an odd term with multiplicity > 1"
    if any(p in c.beta for p in counts):
        return "alpha has an odd term that also occurs in beta"
    return None


def component_group_rank(c):
    """(vanishes, elliptic rank). A surviving class contributes all of R_Z(A) with
    A = S(prod over parts of beta of Z/2), so 2^(len(beta)-1) irreducibles."""
    if vanishing_reason(c) is not None:
        return True, 0
    if not c.beta:
        return False, 1
    return False, 2 ** (len(c.beta) - 1)


def component_rank_total(n):
    """Sum of component_group_rank over all classes. Diagnostic only."""
    return sum(component_group_rank(c)[1] for c in unipotent_classes_so_odd(n))
