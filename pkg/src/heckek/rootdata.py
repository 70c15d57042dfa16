"""Catalog of based root data with explicit Weyl group actions on the character
lattice X, and the fixed-point structure of the compact torus under w."""
import itertools

from .linalg import identity, integer_kernel, inverse_unimodular, matmul, smith_normal_form, transpose
from .weyl import WeylGroup, build_group, d_simple_roots

CATALOG = ("GL", "SL", "PGL", "SO_odd", "Sp", "SO_even", "G2", "AlmostD")

_ALIASES = {
    "gl": "GL", "sl": "SL", "pgl": "PGL", "so_odd": "SO_odd", "sp": "Sp",
    "so_even": "SO_even", "g2": "G2", "almostd": "AlmostD",
}


def canonical_name(name):
    try:
        return _ALIASES[str(name).lower()]
    except KeyError:
        raise ValueError("unknown root datum %r (known: %s)" % (name, ", ".join(CATALOG)))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _unit(n, i, s=1):
    v = [0] * n
    v[i] = s
    return v


def _type_a_simple(n):
    return [[int(j == i) - int(j == i + 1) for j in range(n)] for i in range(n - 1)]


class RootDatum:
    """(X, R, Y, R^v, Delta) with X = Z^rank in a fixed basis.

    The Weyl group acts on an ambient lattice Z^m; `frame` = (P, S) maps between
    ambient coordinates and the chosen basis of X, so w acts on X by P M(w) S.
    P = S = identity when X is the ambient lattice itself. Coroots are stored as
    vectors of the dual basis, so <x, a^v> is the dot product.
    """

    def __init__(self, name, weyl, X_rank, simple_roots, simple_coroots, frame=None,
                 flags=(), params=None):
        self.name = name
        self.weyl = weyl
        self.X_rank = X_rank
        self.simple_roots = [list(map(int, a)) for a in simple_roots]
        self.simple_coroots = [list(map(int, c)) for c in simple_coroots]
        self.frame = frame
        self.flags = tuple(flags)
        self.params = params
        self._cache = {}
        self.roots, self.coroots = self._root_orbit()
        self._check()

    def __repr__(self):
        return "RootDatum(%s, rank=%d, W=%s)" % (self.label(), self.X_rank, self.weyl.descriptor())

    def label(self):
        if self.params is None:
            return self.name
        if isinstance(self.params, tuple):
            return "%s(%s)" % (self.name, ",".join(map(str, self.params)))
        return "%s_%s" % (self.name, self.params)

    def action(self, w):
        """Integer matrix of w on X."""
        m = self._cache.get(w)
        if m is None:
            m = w.matrix()
            if self.frame is not None:
                P, S = self.frame
                m = matmul(matmul(P, m), S) if self.X_rank else []
            self._cache[w] = m
        return m

    def generators(self):
        return list(self.weyl.generators)

    def reflection_matrix(self, k):
        """s_a(x) = x - <x, a^v> a for the k-th simple root, as a matrix."""
        a, c = self.simple_roots[k], self.simple_coroots[k]
        r = self.X_rank
        return [[int(i == j) - a[i] * c[j] for j in range(r)] for i in range(r)]

    def _root_orbit(self):
        if not self.simple_roots:
            return [], []
        pairs = {(tuple(a), tuple(c)) for a, c in zip(self.simple_roots, self.simple_coroots)}
        pairs |= {(tuple(-x for x in a), tuple(-x for x in c)) for a, c in pairs}
        gens = [self.reflection_matrix(k) for k in range(len(self.simple_roots))]
        frontier = list(pairs)
        while frontier:
            nxt = []
            for a, c in frontier:
                for g in gens:
                    # s acts on Y by the inverse transpose, which for a reflection is the transpose
                    na = tuple(_dot(row, a) for row in g)
                    nc = tuple(_dot(col, c) for col in zip(*g))
                    if (na, nc) not in pairs:
                        pairs.add((na, nc))
                        nxt.append((na, nc))
            frontier = nxt
        pairs = sorted(pairs, reverse=True)
        return [list(a) for a, _ in pairs], [list(c) for _, c in pairs]

    def _check(self):
        r = self.X_rank
        for a, c in zip(self.roots, self.coroots):
            if _dot(a, c) != 2:
                raise AssertionError("<a, a^v> != 2 for root %r" % (a,))
        gens = self.generators()
        mats = [self.action(g) for g in gens]
        for g, m in zip(gens, mats):
            if r and abs(_det_small(m)) != 1:
                raise AssertionError("generator action is not invertible over Z")
            if _matrix_power_order(m, r) != g.order():
                raise AssertionError("generator action has the wrong order")
        for g, h in itertools.product(gens, repeat=2):
            if r and matmul(self.action(g), self.action(h)) != self.action(g * h):
                raise AssertionError("action is not multiplicative")
        # every simple reflection is the action of some element of W
        if self.simple_roots:
            images = {}
            for w in self.weyl.elements():
                images.setdefault(_key(self.action(w)), w)
            for k in range(len(self.simple_roots)):
                if _key(self.reflection_matrix(k)) not in images:
                    raise AssertionError("simple reflection %d is not in the Weyl group" % k)


def _key(m):
    return tuple(tuple(r) for r in m)


def _det_small(m):
    from .linalg import det
    return det(m)


def _matrix_power_order(m, r):
    if r == 0:
        return 1
    ident = identity(r)
    cur = m
    k = 1
    while cur != ident:
        cur = matmul(cur, m)
        k += 1
        if k > 1000:
            raise AssertionError("generator action has infinite order")
    return k


def catalog_root_datum(name, n=None):
    name = canonical_name(name)
    if name == "G2":
        W = build_group("G2")
        return RootDatum("G2", W, 2, [[1, 0], [0, 1]], [[2, -3], [-1, 2]])
    if name == "AlmostD":
        dims = tuple(int(x) for x in (n if isinstance(n, (tuple, list)) else (n,)))
        if not dims or any(m < 1 for m in dims):
            raise ValueError("AlmostD needs positive block sizes")
        W = build_group("almostd", dims)
        roots = [list(v) for v in d_simple_roots(dims)]
        return RootDatum("AlmostD", W, sum(dims), roots, roots, params=dims)
    if n is None or int(n) < 1:
        raise ValueError("%s needs n >= 1" % name)
    n = int(n)
    if name == "GL":
        roots = _type_a_simple(n)
        return RootDatum("GL", build_group("A", n), n, roots, roots, params=n)
    if name == "SL":
        # X = Z^n / Z(1,...,1) with basis the images of e_1..e_{n-1}
        P = [[int(j == i) - int(j == n - 1) for j in range(n)] for i in range(n - 1)]
        S = [[int(i == j) for j in range(n - 1)] for i in range(n)]
        roots = [matmul(P, [[x] for x in a]) for a in _type_a_simple(n)]
        roots = [[r[0] for r in a] for a in roots]
        coroots = [[_dot(col, a) for col in zip(*S)] for a in _type_a_simple(n)]
        return RootDatum("SL", build_group("A", n), n - 1, roots, coroots, frame=(P, S), params=n)
    if name == "PGL":
        # X = root lattice, basis e_i - e_{i+1}; coordinates y_k = x_1 + ... + x_k
        B = transpose(_type_a_simple(n)) if n > 1 else [[] for _ in range(n)]
        L = [[int(j <= i) for j in range(n)] for i in range(n - 1)]
        roots = [[_dot(row, a) for row in L] for a in _type_a_simple(n)]
        coroots = [[_dot(col, a) for col in zip(*B)] for a in _type_a_simple(n)]
        return RootDatum("PGL", build_group("A", n), n - 1, roots, coroots, frame=(L, B), params=n)
    if name == "SO_odd":
        roots = _type_a_simple(n) + [_unit(n, n - 1)]
        coroots = _type_a_simple(n) + [_unit(n, n - 1, 2)]
        return RootDatum("SO_odd", build_group("B", n), n, roots, coroots, params=n)
    if name == "Sp":
        roots = _type_a_simple(n) + [_unit(n, n - 1, 2)]
        coroots = _type_a_simple(n) + [_unit(n, n - 1)]
        return RootDatum("Sp", build_group("C", n), n, roots, coroots, params=n)
    # SO_even
    roots = [list(v) for v in d_simple_roots((n,))]
    flags = ("reducible_special",) if n == 2 else ()
    return RootDatum("SO_even", build_group("D", n), n, roots, roots, flags=flags, params=n)


def product_datum(R1, R2):
    """Direct sum lattice with the product Weyl group acting blockwise."""
    if not (R1.weyl.is_signed and R2.weyl.is_signed):
        raise ValueError("products are supported for signed-permutation groups only")
    W = WeylGroup("product", None, factors=[R1.weyl, R2.weyl])
    P1, S1 = R1.frame or (identity(R1.weyl.ambient_dim), identity(R1.weyl.ambient_dim))
    P2, S2 = R2.frame or (identity(R2.weyl.ambient_dim), identity(R2.weyl.ambient_dim))
    P = _block_diag(P1, P2, R1.X_rank, R1.weyl.ambient_dim, R2.X_rank, R2.weyl.ambient_dim)
    S = _block_diag(S1, S2, R1.weyl.ambient_dim, R1.X_rank, R2.weyl.ambient_dim, R2.X_rank)
    r1, r2 = R1.X_rank, R2.X_rank
    roots = [a + [0] * r2 for a in R1.simple_roots] + [[0] * r1 + a for a in R2.simple_roots]
    coroots = [c + [0] * r2 for c in R1.simple_coroots] + [[0] * r1 + c for c in R2.simple_coroots]
    return RootDatum("%sx%s" % (R1.label(), R2.label()), W, r1 + r2, roots, coroots, frame=(P, S))


def _block_diag(A, B, ra, ca, rb, cb):
    out = []
    for i in range(ra):
        out.append(list(A[i]) + [0] * cb)
    for i in range(rb):
        out.append([0] * ca + list(B[i]))
    return out


class FixedTorusData:
    """T^w for the compact torus: fixed_rank = dim of the identity component,
    component_group = invariants of torsion(X/(w-1)X), h1_lattice = basis of ker(w-1)."""

    def __init__(self, w, fixed_rank, component_group, h1_lattice):
        self.w = w
        self.fixed_rank = fixed_rank
        self.component_group = list(component_group)
        self.h1_lattice = h1_lattice

    @property
    def component_count(self):
        out = 1
        for d in self.component_group:
            out *= d
        return out

    def __repr__(self):
        return "FixedTorusData(rank=%d, components=%r)" % (self.fixed_rank, self.component_group)


def _minus_one(m, r):
    return [[m[i][j] - int(i == j) for j in range(r)] for i in range(r)]


def fixed_torus(R, w):
    r = R.X_rank
    if r == 0:
        return FixedTorusData(w, 0, [], [])
    A = _minus_one(R.action(w), r)
    D, _, _ = smith_normal_form(A)
    divs = [abs(D[i][i]) for i in range(r) if D[i][i]]
    return FixedTorusData(w, r - len(divs), [d for d in divs if d > 1], integer_kernel(A, r))


class QuotientFrame:
    """Coordinates on X/(w-1)X from the Smith form U (w-1) V = D.

    y = U x; coordinate i is free when d_i = 0 and torsion (mod d_i) when d_i > 1.
    """

    def __init__(self, R, w):
        r = R.X_rank
        self.R = R
        self.w = w
        self.w_matrix = R.action(w)
        if r == 0:
            self.U = self.Uinv = []
            self.divisors = []
        else:
            D, U, _ = smith_normal_form(_minus_one(self.w_matrix, r))
            self.U = U
            self.Uinv = inverse_unimodular(U)
            self.divisors = [abs(D[i][i]) for i in range(r)]
        self.free = [i for i, d in enumerate(self.divisors) if d == 0]
        self.torsion = [i for i, d in enumerate(self.divisors) if d > 1]
        self.moduli = [self.divisors[i] for i in self.torsion]

    def induced(self, z):
        """(matrix on the free part, matrix mod moduli on the torsion part)."""
        if not self.divisors:
            return [], []
        Mz = self.R.action(z)
        if matmul(Mz, self.w_matrix) != matmul(self.w_matrix, Mz):
            raise ValueError("z does not commute with w")
        A = matmul(matmul(self.U, Mz), self.Uinv)
        d = self.divisors
        for i, di in enumerate(d):
            if di == 1:
                continue
            for j, dj in enumerate(d):
                v = A[j][i] * di
                if (dj == 0 and v) or (dj and v % dj):
                    raise AssertionError("induced map on X/(w-1)X is not well defined")
        free = [[A[i][j] for j in self.free] for i in self.free]
        tors = [[A[i][j] % self.divisors[i] for j in self.torsion] for i in self.torsion]
        return free, tors

    def torsion_fixed_count(self, tors):
        """Number of elements of torsion(X/(w-1)X) fixed by the given action."""
        mods = self.moduli
        if not mods:
            return 1
        count = 0
        for y in itertools.product(*(range(m) for m in mods)):
            if all((_dot(row, y) - y[i]) % m == 0 for i, (row, m) in enumerate(zip(tors, mods))):
                count += 1
        return count


def action_on_quotient(R, w, z):
    """Induced action of z in Z_W(w) on X/(w-1)X: (free-part matrix, torsion moduli,
    torsion matrix mod moduli)."""
    q = QuotientFrame(R, w)
    free, tors = q.induced(z)
    return free, q.moduli, tors
