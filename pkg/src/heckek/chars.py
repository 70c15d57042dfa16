"""Exact character tables and Frobenius induction/restriction.

Strategies: Murnaghan-Nakayama for S_n, the signed rim-hook rule for W(B_n),
restriction from W(B_n) with splitting for W(D_n), Kronecker products for
direct products, and Dixon's modular algorithm for everything else.
"""
import json
import os
import tempfile
from fractions import Fraction
from functools import lru_cache
import random
from math import isqrt

import numpy as np

from .combinatorics import Partition, enum_bipartitions, enum_partitions
from .finite import CapacityError
from .weyl import label_str

FORMAT_VERSION = 1
GENERIC_BOUND = 200_000


class ClassFunction:
    __slots__ = ("group_id", "values")

    def __init__(self, group_id, values):
        self.group_id = group_id
        self.values = list(values)

    def _check(self, other):
        if self.group_id != other.group_id or len(self.values) != len(other.values):
            raise ValueError("class functions live on different groups")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group_id, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group_id, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group_id, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group_id, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.group_id == other.group_id
                and self.values == other.values)

    def __repr__(self):
        return "ClassFunction(%s, %r)" % (self.group_id, self.values)


class CharacterTable:
    """Irreducible characters; rows follow irr_labels, columns the group's class order."""

    def __init__(self, group_id, class_labels, class_sizes, irr_labels, values,
                 inverse_class=None, modulus=None, mod_values=None, identity_class=None):
        self.group_id = group_id
        self.class_labels = list(class_labels)
        self.class_sizes = [int(s) for s in class_sizes]
        self.order = sum(self.class_sizes)
        self.irr_labels = list(irr_labels)
        self.values = [list(map(int, r)) for r in values] if values is not None else None
        k = len(self.class_sizes)
        self.inverse_class = list(inverse_class) if inverse_class is not None else list(range(k))
        self.modulus = modulus
        self.mod_values = mod_values
        if identity_class is None:
            identity_class = self.class_sizes.index(1)
        self.identity_class = identity_class

    @property
    def rows(self):
        return [ClassFunction(self.group_id, r) for r in self.values]

    @property
    def is_rational(self):
        return self.values is not None

    def __len__(self):
        return len(self.class_sizes)

    def degrees(self):
        c = self.identity_class
        if self.values is not None:
            return [r[c] for r in self.values]
        return [r[c] for r in self.mod_values]

    def to_json(self):
        return {
            "format_version": FORMAT_VERSION,
            "group": self.group_id,
            "class_labels": [label_str(c) for c in self.class_labels],
            "class_sizes": self.class_sizes,
            "irr_labels": [label_str(c) for c in self.irr_labels],
            "matrix": self.values,
        }


def check_orthogonality(table):
    """Both orthogonality relations, exactly. Returns True or raises AssertionError."""
    V = table.values
    sizes = table.class_sizes
    order = table.order
    k = len(sizes)
    if len(V) != k:
        raise AssertionError("table is not square")
    inv = table.inverse_class
    for a in range(k):
        for b in range(a, k):
            s = sum(sizes[c] * V[a][c] * V[b][inv[c]] for c in range(k))
            if s != (order if a == b else 0):
                raise AssertionError("row orthogonality fails at (%d,%d)" % (a, b))
    for c in range(k):
        for d in range(c, k):
            s = sum(V[a][c] * V[a][inv[d]] for a in range(k))
            expect = order // sizes[c] if c == d else 0
            if s != expect:
                raise AssertionError("column orthogonality fails at (%d,%d)" % (c, d))
    if any(v != 1 for v in V[0]):
        raise AssertionError("first row is not the trivial character")
    return True


# -- symmetric groups

def _beta(lam):
    l = len(lam)
    return tuple(sorted((lam[i] + (l - 1 - i) for i in range(l)), reverse=True))


def _from_beta(beta):
    b = sorted(beta, reverse=True)
    l = len(b)
    return tuple(p for p in (b[i] - (l - 1 - i) for i in range(l)) if p > 0)


def rim_hooks(lam, k):
    """[(smaller partition, leg length)] for every k-rim hook of lam."""
    beta = _beta(lam)
    bset = set(beta)
    out = []
    for b in beta:
        if b - k >= 0 and (b - k) not in bset:
            height = sum(1 for x in beta if b - k < x < b)
            new = tuple(sorted([x for x in beta if x != b] + [b - k], reverse=True))
            out.append((_from_beta(new), height))
    return out


@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """chi^lam(mu) by the Murnaghan-Nakayama rule."""
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    total = 0
    for sub, h in rim_hooks(lam, k):
        total += (-1) ** h * mn_character(sub, rest)
    return total


@lru_cache(maxsize=None)
def hyperoctahedral_character(alpha, beta, mu, lam):
    """chi^(alpha,beta) at the class with positive cycles mu and negative cycles lam."""
    if not mu and not lam:
        return 1 if not alpha and not beta else 0
    if mu:
        k, mu, neg = mu[0], mu[1:], False
    else:
        k, lam, neg = lam[0], lam[1:], True
    total = 0
    for sub, h in rim_hooks(alpha, k):
        total += (-1) ** h * hyperoctahedral_character(sub, beta, mu, lam)
    for sub, h in rim_hooks(beta, k):
        sign = -1 if neg else 1
        total += sign * (-1) ** h * hyperoctahedral_character(alpha, sub, mu, lam)
    return total


def _table_A(W):
    parts = enum_partitions(W.n)
    classes = W.classes()
    vals = [[mn_character(tuple(lam), tuple(c.label)) for c in classes] for lam in parts]
    return CharacterTable(W.descriptor(), [c.label for c in classes], [c.size for c in classes],
                          parts, vals)


def _table_B(W):
    bips = enum_bipartitions(W.n)
    classes = W.classes()
    vals = [[hyperoctahedral_character(tuple(a), tuple(b), tuple(c.label[0]), tuple(c.label[1]))
             for c in classes] for a, b in bips]
    return CharacterTable(W.descriptor(), [c.label for c in classes], [c.size for c in classes],
                          bips, vals)


def _table_D(W):
    n = W.n
    classes = W.classes()
    if n == 1:
        return CharacterTable("D1", [c.label for c in classes], [1], [(Partition((1,)), Partition(()))],
                              [[1]])
    bips = enum_bipartitions(n)
    pos = {b: i for i, b in enumerate(bips)}
    labels = []
    vals = []
    for a, b in bips:
        full = [hyperoctahedral_character(tuple(a), tuple(b), tuple(c.label[0]), tuple(c.label[1]))
                for c in classes]
        if a != b:
            if pos[(b, a)] < pos[(a, b)]:
                continue
            labels.append((a, b))
            vals.append(full)
            continue
        # a == b: the restriction splits in two
        plus, minus = [], []
        for c, v in zip(classes, full):
            mu, lam, tag = c.label
            if not lam and all(p % 2 == 0 for p in mu):
                nu = tuple(p // 2 for p in mu)
                diff = 2 ** len(nu) * mn_character(tuple(a), nu)
                if tag:
                    diff = -diff
            else:
                diff = 0
            if (v + diff) % 2:
                raise AssertionError("split character is not integral")
            plus.append((v + diff) // 2)
            minus.append((v - diff) // 2)
        labels.append((a, b, "+"))
        vals.append(plus)
        labels.append((a, b, "-"))
        vals.append(minus)
    return CharacterTable(W.descriptor(), [c.label for c in classes], [c.size for c in classes],
                          labels, vals)


def _table_product(W):
    tabs = [character_table(f) for f in W.factors]
    classes = W.classes()
    rows = [((), [1])]
    for t in tabs:
        rows = [(lab + (tl,), [x * y for x in vals for y in tv])
                for lab, vals in rows for tl, tv in zip(t.irr_labels, t.values)]
    return CharacterTable(W.descriptor(), [c.label for c in classes], [c.size for c in classes],
                          [r[0] for r in rows], [r[1] for r in rows])


# -- Dixon's algorithm modulo a prime

def _is_prime(m):
    if m < 2:
        return False
    i = 2
    while i * i <= m:
        if m % i == 0:
            return False
        i += 1
    return True


def dixon_prime(order, exponent):
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(order)."""
    # isqrt(4N) + 1 is the least integer strictly above 2 sqrt(N)
    bound = isqrt(4 * order) + 1
    p = bound + ((1 - bound) % exponent)
    while not _is_prime(p):
        p += exponent
    return p


def _rref_mod(M, p):
    """Row-reduced echelon form of an integer matrix mod p: (R, pivot columns)."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if not len(nz):
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * pow(int(R[r, c]), p - 2, p)) % p
        f = R[:, c].copy()
        f[r] = 0
        R = (R - np.outer(f, R[r])) % p
        piv.append(c)
        r += 1
    return R[:r], piv


def _nullspace_mod(M, p):
    """Basis (rows) of {x : M x = 0} mod p."""
    M = np.array(M, dtype=np.int64)
    ncols = M.shape[1]
    R, piv = _rref_mod(M, p)
    free = [c for c in range(ncols) if c not in piv]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, c in enumerate(piv):
            out[t, c] = (-R[i, f]) % p
    return out


def _charpoly_mod(A, p):
    """Coefficients (leading first) of det(tI - A) mod p via Hessenberg reduction."""
    H = np.array(A, dtype=np.int64) % p
    d = H.shape[0]
    for m in range(1, d - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if not len(nz):
            continue
        i = m + nz[0]
        if i != m:
            H[[m, i]] = H[[i, m]]
            H[:, [m, i]] = H[:, [i, m]]
        inv = pow(int(H[m, m - 1]), p - 2, p)
        for i in range(m + 1, d):
            u = (H[i, m - 1] * inv) % p
            if u:
                H[i] = (H[i] - u * H[m]) % p
                H[:, m] = (H[:, m] + u * H[:, i]) % p
    # p_k = (t - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    polys = [np.array([1], dtype=np.int64)]
    for k in range(d):
        nxt = np.zeros(k + 2, dtype=np.int64)
        nxt[:k + 1] += polys[k]
        nxt[1:] = (nxt[1:] - H[k, k] * polys[k]) % p
        prodsub = 1
        for i in range(k - 1, -1, -1):
            prodsub = (prodsub * H[i + 1, i]) % p
            if not prodsub:
                break
            coef = (H[i, k] * prodsub) % p
            if coef:
                nxt[k + 2 - len(polys[i]):] = (nxt[k + 2 - len(polys[i]):] - coef * polys[i]) % p
        polys.append(nxt % p)
    return [int(c) for c in polys[d]]


def _roots_mod(coeffs, p):
    xs = np.arange(p, dtype=np.int64)
    v = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        v = (v * xs + c) % p
    return [int(x) for x in np.nonzero(v == 0)[0]]


def dixon_table(G, group_id="G", class_labels=None, modulus=None, bound=GENERIC_BOUND):
    """Character table of an explicit FiniteGroup by Dixon's modular method.

    Returns a CharacterTable whose `values` are exact integers when every
    character is rational (checked by orthogonality), else None; the modular
    table is kept either way.
    """
    if G.order > bound:
        raise CapacityError("generic character table: order %d > bound %d" % (G.order, bound))
    k = len(G.classes)
    N = G.order
    p = modulus if modulus is not None else dixon_prime(N, G.exponent())
    if (p - 1) % G.exponent() or p <= 2 * isqrt(N):
        raise ValueError("modulus %d unsuitable for this group" % p)
    sizes = G.class_sizes
    inv_class = [G.inverse_class(c) for c in range(k)]
    rep_idx = [G.classes[c][0] for c in range(k)]
    inv_el = [G.inv(i) for i in range(G.order)]
    id_c = G.class_of[G.index[G.identity]]
    # class multiplication coefficients: A[j][r, s] = #{x in C_j : x^-1 g_s in C_r}
    A = np.zeros((k, k, k), dtype=np.int64)
    for s in range(k):
        gs = rep_idx[s]
        for j in range(k):
            for x in G.classes[j]:
                A[j, G.class_of[G.mul(inv_el[x], gs)], s] += 1
    A %= p
    rng = random.Random(12345)
    others = [j for j in range(k) if j != id_c]

    spaces = [np.eye(k, dtype=np.int64)]
    done = []
    while spaces:
        basis = spaces.pop()
        if basis.shape[0] == 1:
            done.append([int(x) for x in basis[0]])
            continue
        basis, piv = _rref_mod(basis, p)
        d = basis.shape[0]
        for attempt in range(60):
            if attempt < len(others) and attempt < 3:
                M = A[others[-1 - attempt]]
            else:
                coeffs = np.array([rng.randrange(p) if j in others else 0 for j in range(k)],
                                  dtype=np.int64)
                M = np.tensordot(coeffs, A, axes=1) % p
            imgs = (M @ basis.T) % p          # columns are images of basis vectors
            C = imgs[piv, :]                  # coordinates in the basis
            roots = _roots_mod(_charpoly_mod(C, p), p)
            if len(roots) <= 1:
                continue
            total = 0
            for lam in roots:
                ns = _nullspace_mod((C - lam * np.eye(d, dtype=np.int64)) % p, p)
                total += ns.shape[0]
                spaces.append((ns @ basis) % p)
            if total != d:
                raise ArithmeticError("class algebra did not diagonalize mod %d" % p)
            break
        else:
            raise ArithmeticError("could not split a %d-dimensional eigenspace" % d)

    mod_rows = []
    for v in done:
        inv0 = pow(v[id_c], p - 2, p)
        w = [(x * inv0) % p for x in v]
        s = sum(w[c] * w[inv_class[c]] * pow(sizes[c], p - 2, p) for c in range(k)) % p
        d2 = (N * pow(s, p - 2, p)) % p
        deg = next((x for x in range(1, isqrt(N) + 1) if (x * x) % p == d2), None)
        if deg is None:
            raise ArithmeticError("no degree found mod %d" % p)
        mod_rows.append([(deg * w[c] * pow(sizes[c], p - 2, p)) % p for c in range(k)])

    def lift(x):
        return x - p if x > p // 2 else x

    int_rows = [[lift(x) for x in r] for r in mod_rows]
    # deterministic order: trivial first, then by degree and values
    order = sorted(range(k), key=lambda i: (int_rows[i] != [1] * k, int_rows[i][id_c],
                                            [-x for x in int_rows[i]]))
    int_rows = [int_rows[i] for i in order]
    mod_rows = [mod_rows[i] for i in order]
    labels = class_labels if class_labels is not None else list(range(k))
    table = CharacterTable(group_id, labels, sizes, ["X.%d" % (i + 1) for i in range(k)],
                           int_rows, inverse_class=inv_class, modulus=p, mod_values=mod_rows,
                           identity_class=id_c)
    try:
        check_orthogonality(table)
    except AssertionError:
        table.values = None
    return table


# -- dispatch, caching

_memory = {}


def _cache_dir(cache_dir):
    return cache_dir or os.environ.get("HECKEK_CACHE_DIR")


def _load_cached(W, path):
    with open(path) as fh:
        doc = json.load(fh)
    classes = W.classes()
    if (doc.get("format_version") != FORMAT_VERSION or doc.get("group") != W.descriptor()
            or doc.get("class_labels") != [label_str(c.label) for c in classes]):
        return None
    return doc


def _write_atomic(path, doc):
    d = os.path.dirname(path)
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def character_table(W, cache_dir=None, bound=GENERIC_BOUND):
    """Exact character table of a catalog group, columns in W.classes() order."""
    key = W.descriptor()
    if key in _memory:
        return _memory[key]
    cdir = _cache_dir(cache_dir)
    path = os.path.join(cdir, "chartable-%s-v%d.json" % (key.replace("(", "_").replace(")", "_")
                                                         .replace(",", "-"), FORMAT_VERSION)) if cdir else None
    table = None
    if path and os.path.exists(path):
        doc = _load_cached(W, path)
        if doc is not None:
            table = _table_from_document(W, doc)
            try:
                check_orthogonality(table)
            except (AssertionError, TypeError, IndexError):
                table = None
    if table is None:
        table = _compute_table(W, bound)
        check_orthogonality(table)
        if path:
            _write_atomic(path, table.to_json())
    _memory[key] = table
    return table


def _table_from_document(W, doc):
    # catalog tables are rational, so every class is its own inverse class
    classes = W.classes()
    return CharacterTable(W.descriptor(), [c.label for c in classes], [c.size for c in classes],
                          doc["irr_labels"], doc["matrix"],
                          identity_class=W.class_index(W.identity()))


def _compute_table(W, bound):
    builders = {"A": _table_A, "B": _table_B, "D": _table_D, "product": _table_product}
    if W.kind in builders:
        t = builders[W.kind](W)
        t.identity_class = W.class_index(W.identity())
        t.inverse_class = list(range(len(t.class_sizes)))
        return t
    G = W.finite_group()
    classes = W.classes()
    t = dixon_table(G, W.descriptor(), [c.label for c in classes], bound=bound)
    if t.values is None:
        raise ArithmeticError("%s has irrational characters" % W.descriptor())
    return t


def subgroup_table(sub, modulus=None):
    """Character table of a Subgroup (weyl.Subgroup) by Dixon's method."""
    t = dixon_table(sub.group, sub.name, modulus=modulus)
    return t


# -- induction, restriction, inner products

def inner_product(table, f, g):
    """<f, g> = (1/|G|) sum_c |c| f(c) conj(g(c)), for rational-valued class functions."""
    if isinstance(f, ClassFunction):
        f = f.values
    if isinstance(g, ClassFunction):
        g = g.values
    if len(f) != len(table.class_sizes) or len(g) != len(table.class_sizes):
        raise ValueError("class functions do not match the group")
    inv = table.inverse_class
    s = sum(sz * f[c] * g[inv[c]] for c, sz in enumerate(table.class_sizes))
    return Fraction(s, table.order)


def decompose(table, f):
    """Multiplicities of the irreducibles in f (must be integers)."""
    out = []
    for row in table.values:
        q = inner_product(table, f, row)
        if q.denominator != 1:
            raise ArithmeticError("not a virtual character")
        out.append(int(q))
    return out


def induce(fusion, sub_sizes, sub_order, G_sizes, G_order, f, G_id="G"):
    """Frobenius induction of f from H to G given the class fusion H -> G."""
    if isinstance(f, ClassFunction):
        f = f.values
    acc = [0] * len(G_sizes)
    for d, c in enumerate(fusion):
        acc[c] += sub_sizes[d] * f[d]
    out = []
    for c, sz in enumerate(G_sizes):
        q = Fraction(G_order * acc[c], sub_order * sz)
        if q.denominator != 1:
            raise ArithmeticError("induced class function is not integral")
        out.append(int(q))
    return ClassFunction(G_id, out)


def restrict(fusion, f, H_id="H"):
    if isinstance(f, ClassFunction):
        f = f.values
    return ClassFunction(H_id, [f[c] for c in fusion])


def induce_from(sub, sub_table, W_table, f):
    """Induce a class function of a weyl.Subgroup to its ambient group."""
    return induce(sub.fusion, sub_table.class_sizes, sub_table.order,
                  W_table.class_sizes, W_table.order, f, W_table.group_id)


def regular_character(table):
    vals = [0] * len(table.class_sizes)
    vals[table.identity_class] = table.order
    return ClassFunction(table.group_id, vals)
