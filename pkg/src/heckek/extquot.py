"""The extended quotient of the compact torus by W and its rational cohomology,
computed stratum by stratum with Burnside averages over centralizers."""
from fractions import Fraction

from .ktables import KRanks, ktheory_ranks
from .linalg import det, exterior_traces
from .rootdata import QuotientFrame
from .weyl import centralizer_elements

CENTRALIZER_BOUND = 10 ** 6


class ExtQuotComponentSummary:
    """One stratum T^w / Z_W(w). raw_components = |pi_0(T^w)|, component_count =
    number of Z_W(w)-orbits on pi_0(T^w), poincare = rational Betti numbers."""

    def __init__(self, label, raw_components, component_count, fixed_rank, poincare,
                 centralizer_order):
        self.label = label
        self.raw_components = raw_components
        self.component_count = component_count
        self.fixed_rank = fixed_rank
        self.poincare = list(poincare)
        self.centralizer_order = centralizer_order

    def __repr__(self):
        return "Stratum(%s, components=%d/%d, poincare=%r)" % (
            self.label, self.component_count, self.raw_components, self.poincare)

    def as_dict(self):
        from .weyl import label_str
        return {"class": label_str(self.label), "raw_components": self.raw_components,
                "component_count": self.component_count, "fixed_rank": self.fixed_rank,
                "poincare": self.poincare, "centralizer_order": self.centralizer_order}


class PoincareProfile:
    def __init__(self, dims):
        dims = list(dims)
        while len(dims) > 1 and dims[-1] == 0:
            dims.pop()
        self.dims = dims

    @property
    def total(self):
        return sum(self.dims)

    @property
    def even_total(self):
        return sum(self.dims[0::2])

    @property
    def odd_total(self):
        return sum(self.dims[1::2])

    def __eq__(self, other):
        return isinstance(other, PoincareProfile) and self.dims == other.dims

    def __repr__(self):
        return "PoincareProfile(%r)" % (self.dims,)

    def as_dict(self):
        return {"dims": self.dims, "total": self.total, "even_total": self.even_total,
                "odd_total": self.odd_total}


def _stratum(R, cls, bound):
    w = cls.representative
    W = R.weyl
    Z = centralizer_elements(W, w, bound)
    if len(Z) * cls.size != W.order:
        raise AssertionError("centralizer order does not match the class size")
    q = QuotientFrame(R, w)
    r = len(q.free)
    sums = [Fraction(0)] * (r + 1)
    orbit_sum = 0
    for z in Z:
        free, tors = q.induced(z)
        fix = q.torsion_fixed_count(tors)
        orbit_sum += fix
        for j, t in enumerate(exterior_traces(free) if r else [1]):
            sums[j] += fix * t
    dims = []
    for s in sums:
        s = s / len(Z)
        if s.denominator != 1 or s < 0:
            raise ArithmeticError("non-integral averaged dimension %s for class %r" % (s, cls.label))
        dims.append(int(s))
    raw = 1
    for m in q.moduli:
        raw *= m
    if orbit_sum % len(Z):
        raise ArithmeticError("non-integral orbit count")
    return ExtQuotComponentSummary(cls.label, raw, orbit_sum // len(Z), r, dims, len(Z))


def extended_quotient_components(R, bound=CENTRALIZER_BOUND):
    return [_stratum(R, c, bound) for c in R.weyl.classes()]


def profile_from_strata(strata):
    top = max(len(s.poincare) for s in strata)
    dims = [0] * top
    for s in strata:
        for j, v in enumerate(s.poincare):
            dims[j] += v
    return PoincareProfile(dims)


def equivariant_poincare(R, bound=CENTRALIZER_BOUND):
    return profile_from_strata(extended_quotient_components(R, bound))


def equivariant_euler(R, bound=CENTRALIZER_BOUND):
    """sum over classes of (1/|Z(w)|) sum_z fix_z(pi_0) det(1 - z) on the free part."""
    total = Fraction(0)
    for cls in R.weyl.classes():
        w = cls.representative
        Z = centralizer_elements(R.weyl, w, bound)
        q = QuotientFrame(R, w)
        r = len(q.free)
        acc = 0
        for z in Z:
            free, tors = q.induced(z)
            one_minus = [[int(i == j) - free[i][j] for j in range(r)] for i in range(r)]
            acc += q.torsion_fixed_count(tors) * det(one_minus)
        total += Fraction(acc, len(Z))
    if total.denominator != 1:
        raise ArithmeticError("non-integral Euler characteristic")
    return int(total)


class CompareReport:
    def __init__(self, datum, oracle, closed):
        self.datum = datum
        self.oracle = oracle
        self.closed = closed
        self.even_ok = oracle.even_total == closed.k0
        self.odd_ok = oracle.odd_total == closed.k1

    @property
    def passed(self):
        return self.even_ok and self.odd_ok

    def __repr__(self):
        return "CompareReport(%s: oracle (%d,%d) vs closed form (%d,%d) %s)" % (
            self.datum, self.oracle.even_total, self.oracle.odd_total, self.closed.k0,
            self.closed.k1, "pass" if self.passed else "FAIL")

    def as_dict(self):
        return {"datum": self.datum, "oracle": self.oracle.as_dict(),
                "closed_form": self.closed.as_dict(), "even": self.even_ok, "odd": self.odd_ok,
                "pass": self.passed}


def compare_with_closed_form(R, bound=CENTRALIZER_BOUND):
    closed = ktheory_ranks(R.name, R.params)
    return CompareReport(R.label(), equivariant_poincare(R, bound), closed)


def kunneth(p1, p2):
    """Graded convolution of two profiles."""
    dims = [0] * (len(p1.dims) + len(p2.dims) - 1)
    for i, a in enumerate(p1.dims):
        for j, b in enumerate(p2.dims):
            dims[i + j] += a * b
    return PoincareProfile(dims)


def as_kranks(profile):
    return KRanks(profile.even_total, profile.odd_total)
