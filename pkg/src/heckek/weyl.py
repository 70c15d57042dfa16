"""Weyl groups of types A, B, D, G2, their products, and the almost-Weyl groups
(W(B_n1) x ... x W(B_nd)) cap W(D_n), realized as signed permutation groups."""
import itertools
from collections import Counter
from math import factorial, prod

import numpy as np

from . import kernels
from .combinatorics import (Partition, enum_bipartitions, enum_partitions, perm_from_partition,
                            sigma_mu_lambda)
from .finite import CapacityError, FiniteGroup, closure, small_generating_set
from .linalg import rank as int_rank
from .signed import MatrixElement, SignedPermutation, direct_sum

ENUMERATION_BOUND = 2_000_000


class ConjClass:
    __slots__ = ("label", "representative", "size")

    def __init__(self, label, representative, size):
        self.label = label
        self.representative = representative
        self.size = size

    def __repr__(self):
        return "ConjClass(%s, size=%d)" % (label_str(self.label), self.size)


def label_str(label):
    """Readable, stable string for a class label."""
    if isinstance(label, Partition):
        return str(label)
    if isinstance(label, str):
        return label
    if isinstance(label, tuple):
        if len(label) == 2 and all(isinstance(x, Partition) for x in label):
            return "%s|%s" % label
        if len(label) == 3 and isinstance(label[2], str) and isinstance(label[0], Partition):
            return "%s|%s%s" % label
        if len(label) == 2 and isinstance(label[1], str):
            return ";".join("%s|%s" % b for b in label[0]) + label[1]
        return "(" + ",".join(label_str(x) for x in label) + ")"
    return str(label)


def _b_centralizer_order(mu, lam):
    z = 1
    for part in (mu, lam):
        for l, m in Counter(part).items():
            z *= (2 * l) ** m * factorial(m)
    return z


def _a_centralizer_order(mu):
    z = 1
    for l, m in Counter(mu).items():
        z *= l ** m * factorial(m)
    return z


def _adjacent(n, i):
    img = list(range(n))
    img[i], img[i + 1] = img[i + 1], img[i]
    return SignedPermutation(img)


def _sign_at(n, i):
    return SignedPermutation(range(n), [-1 if j == i else 1 for j in range(n)])


def _d_extra(n):
    # reflection in e_{n-1} + e_n
    img = list(range(n))
    img[n - 2], img[n - 1] = n - 1, n - 2
    sg = [1] * n
    sg[n - 2] = sg[n - 1] = -1
    return SignedPermutation(img, sg)


def _shift(p, off, n):
    img = list(range(n))
    sg = [1] * n
    for i, (j, s) in enumerate(zip(p.image, p.signs)):
        img[off + i] = off + j
        sg[off + i] = s
    return SignedPermutation(img, sg)


def _conjugator_parity(w, mu, lo):
    """Sign-count parity of some x in W(B) with x sigma(mu) x^-1 = w on a block.

    w: block-local signed permutation whose cycles are all positive with type mu."""
    cycles = {}
    for cyc, sign in w.signed_cycles():
        cycles.setdefault(len(cyc), []).append(cyc)
    negatives = 0
    for l in mu:
        cyc = cycles[l].pop()
        t = 1
        for k in range(l):
            if t < 0:
                negatives += 1
            t *= w.signs[cyc[k]]
    return negatives % 2


class WeylGroup:
    """A finite reflection group acting on Q^ambient_dim.

    kind: 'A' (symmetric group S_n), 'B', 'D', 'G2', 'AlmostD', 'product'.
    fixed_dim is the dimension of the subspace every element fixes that lies
    outside the space used for ellipticity (1 for S_n, 0 for the others).
    """

    def __init__(self, kind, n, dims=None, factors=None):
        self.kind = kind
        self.n = n
        self.dims = tuple(dims) if dims else None
        self.factors = tuple(factors) if factors else None
        self._classes = None
        self._class_lookup = None
        self._elements = None
        self._arrays = None
        self._finite = None
        if kind == "A":
            self.ambient_dim = n
            self.fixed_dim = 1
            self.generators = [_adjacent(n, i) for i in range(n - 1)]
            self.order = factorial(n)
            self.simple_roots = [[int(j == i) - int(j == i + 1) for j in range(n)]
                                 for i in range(n - 1)]
        elif kind == "B":
            self.ambient_dim = n
            self.fixed_dim = 0
            self.generators = [_adjacent(n, i) for i in range(n - 1)] + [_sign_at(n, n - 1)]
            self.order = 2 ** n * factorial(n)
            self.simple_roots = [[int(j == i) - int(j == i + 1) for j in range(n)]
                                 for i in range(n - 1)] + [[int(j == n - 1) for j in range(n)]]
        elif kind == "D":
            self.ambient_dim = n
            self.dims = (n,)
            if n == 1:
                # W(D_1) is trivial and has no roots
                self.fixed_dim = 1
                self.generators = []
                self.order = 1
                self.simple_roots = []
            else:
                self.fixed_dim = 0
                self.generators = [_adjacent(n, i) for i in range(n - 1)] + [_d_extra(n)]
                self.order = 2 ** (n - 1) * factorial(n)
                self.simple_roots = [[int(j == i) - int(j == i + 1) for j in range(n)]
                                     for i in range(n - 1)]
                self.simple_roots.append([int(j >= n - 2) for j in range(n)])
        elif kind == "AlmostD":
            self.ambient_dim = n
            self.fixed_dim = 0
            gens = []
            off = 0
            for m in self.dims:
                if m >= 2:
                    gens.extend(_shift(g, off, n) for g in WeylGroup("D", m).generators)
                off += m
            ends = list(itertools.accumulate(self.dims))
            for k in range(len(ends) - 1):
                gens.append(_sign_at(n, ends[k] - 1) * _sign_at(n, ends[k + 1] - 1))
            self.generators = gens
            self.order = 2 ** (n - 1) * prod(factorial(m) for m in self.dims)
            self.simple_roots = []
        elif kind == "G2":
            self.ambient_dim = 2
            self.fixed_dim = 0
            s1, s2 = g2_simple_reflections()
            self.generators = [s1, s2]
            self.order = 12
            self.simple_roots = [[1, 0], [0, 1]]
        elif kind == "product":
            self.ambient_dim = sum(f.ambient_dim for f in self.factors)
            self.fixed_dim = sum(f.fixed_dim for f in self.factors)
            self.order = prod(f.order for f in self.factors)
            gens = []
            for k, f in enumerate(self.factors):
                gens.extend(self.embed(k, g) for g in f.generators)
            self.generators = gens
            self.simple_roots = []
        else:
            raise ValueError("unknown group kind %r" % (kind,))

    # -- descriptors

    @property
    def rank(self):
        return self.ambient_dim

    def descriptor(self):
        if self.kind == "A":
            return "A%d" % (self.n - 1)
        if self.kind in ("B", "D"):
            return "%s%d" % (self.kind, self.n)
        if self.kind == "G2":
            return "G2"
        if self.kind == "AlmostD":
            return "AlmostD(%s)" % ",".join(map(str, self.dims))
        return "x".join(f.descriptor() for f in self.factors)

    def __repr__(self):
        return "WeylGroup(%s, order=%d)" % (self.descriptor(), self.order)

    @property
    def is_signed(self):
        if self.kind == "product":
            return all(f.is_signed for f in self.factors)
        return self.kind != "G2"

    def identity(self):
        if self.kind == "G2":
            return MatrixElement.identity(2)
        return SignedPermutation.identity(self.ambient_dim)

    def embed(self, k, g):
        """Put a factor element into the product (product kind only)."""
        parts = [f.identity() for f in self.factors]
        parts[k] = g
        return direct_sum(*parts)

    def blocks(self):
        if self.kind == "product":
            out = []
            off = 0
            for f in self.factors:
                out.append((off, off + f.ambient_dim))
                off += f.ambient_dim
            return out
        return [(0, self.ambient_dim)]

    # -- elements

    def contains(self, w):
        if self.kind == "G2":
            return isinstance(w, MatrixElement) and w in set(self.elements())
        if not isinstance(w, SignedPermutation) or w.n != self.ambient_dim:
            return False
        if self.kind == "A":
            return all(s == 1 for s in w.signs)
        if self.kind == "B":
            return True
        if self.kind == "D":
            return self.n > 1 and w.sign_count() % 2 == 0 or w.is_identity()
        if self.kind == "AlmostD":
            off = 0
            for m in self.dims:
                if any(not (off <= w.image[i] < off + m) for i in range(off, off + m)):
                    return False
                off += m
            return w.sign_count() % 2 == 0
        for (lo, hi), f in zip(self.blocks(), self.factors):
            if any(not (lo <= w.image[i] < hi) for i in range(lo, hi)):
                return False
            if not f.contains(w.restrict(lo, hi)):
                return False
        return True

    def elements(self, bound=ENUMERATION_BOUND):
        if self._elements is not None:
            return self._elements
        if self.order > bound:
            raise CapacityError("%s has order %d > enumeration bound %d"
                                % (self.descriptor(), self.order, bound))
        n = self.ambient_dim
        if self.kind == "A":
            els = [SignedPermutation(p) for p in itertools.permutations(range(n))]
        elif self.kind in ("B", "D", "AlmostD"):
            if self.kind == "D" and self.n == 1:
                els = [self.identity()]
            else:
                dims = self.dims if self.kind != "B" else (n,)
                block_perms = []
                off = 0
                for m in dims:
                    block_perms.append([tuple(off + j for j in p)
                                        for p in itertools.permutations(range(m))])
                    off += m
                even = self.kind != "B"
                els = []
                for img_parts in itertools.product(*block_perms):
                    img = sum(img_parts, ())
                    for sg in itertools.product((1, -1), repeat=n):
                        if even and sg.count(-1) % 2:
                            continue
                        els.append(SignedPermutation(img, sg))
        elif self.kind == "G2":
            els = closure(self.generators, self.identity())
        else:
            pools = [f.elements(bound) for f in self.factors]
            els = [direct_sum(*c) for c in itertools.product(*pools)]
        if len(els) != self.order:
            raise AssertionError("enumerated %d elements, expected %d" % (len(els), self.order))
        self._elements = els
        return els

    def element_arrays(self):
        if self._arrays is None:
            els = self.elements()
            self._arrays = (np.array([e.image for e in els], dtype=np.int32).reshape(len(els), -1),
                            np.array([e.signs for e in els], dtype=np.int8).reshape(len(els), -1))
        return self._arrays

    def finite_group(self):
        """The group as an explicit FiniteGroup with classes in canonical order."""
        if self._finite is None:
            cls = self.classes()
            self._finite = FiniteGroup(self.elements(), self.identity(), gens=self.generators,
                                       class_key=self.class_index, nclasses=len(cls))
            for c, k in zip(cls, self._finite.class_sizes):
                if c.size != k:
                    raise AssertionError("class size mismatch for %s" % label_str(c.label))
        return self._finite

    # -- classes

    def classes(self):
        if self._classes is None:
            self._classes = self._build_classes()
            self._class_lookup = {c.label: i for i, c in enumerate(self._classes)}
        return self._classes

    def _build_classes(self):
        n = self.ambient_dim
        if self.kind == "A":
            return [ConjClass(mu, perm_from_partition(mu), self.order // _a_centralizer_order(mu))
                    for mu in enum_partitions(n)]
        if self.kind == "B":
            return [ConjClass((mu, lam), sigma_mu_lambda(mu, lam),
                              self.order // _b_centralizer_order(mu, lam))
                    for mu, lam in enum_bipartitions(n)]
        if self.kind == "D":
            if n == 1:
                return [ConjClass((Partition((1,)), Partition(()), ""), self.identity(), 1)]
            out = []
            for blocks, tag, rep, size in self._almost_d_classes((n,)):
                (mu, lam), = blocks
                out.append(ConjClass((mu, lam, tag), rep, size))
            return out
        if self.kind == "AlmostD":
            return [ConjClass((blocks, tag), rep, size)
                    for blocks, tag, rep, size in self._almost_d_classes(self.dims)]
        if self.kind == "G2":
            return self._g2_classes()
        out = []
        for combo in itertools.product(*[f.classes() for f in self.factors]):
            out.append(ConjClass(tuple(c.label for c in combo),
                                 direct_sum(*[c.representative for c in combo]),
                                 prod(c.size for c in combo)))
        return out

    def _almost_d_classes(self, dims):
        b_order = prod(2 ** m * factorial(m) for m in dims)
        out = []
        for blocks in itertools.product(*[enum_bipartitions(m) for m in dims]):
            if sum(len(lam) for _, lam in blocks) % 2:
                continue
            size = prod(2 ** m * factorial(m) // _b_centralizer_order(mu, lam)
                        for m, (mu, lam) in zip(dims, blocks))
            rep = direct_sum(*[sigma_mu_lambda(mu, lam) for mu, lam in blocks])
            blocks = tuple((mu, lam) for mu, lam in blocks)
            if _is_split(blocks):
                n = sum(dims)
                rep2 = rep * SignedPermutation.sign_change(n, {n - 1, n})
                out.append((blocks, "", rep, size // 2))
                out.append((blocks, "''", rep2, size // 2))
            else:
                out.append((blocks, "", rep, size))
        assert sum(o[3] for o in out) == b_order // 2
        return out

    def _g2_classes(self):
        s1, s2 = self.generators
        r = s1 * s2
        e = self.identity()
        reps = [("e", e), ("s1", s1), ("s2", s2), ("rho_pi", r * r * r),
                ("rho_2pi/3", r * r), ("rho_pi/3", r)]
        fg = FiniteGroup(self.elements(), e, gens=self.generators)
        out = []
        for name, w in reps:
            out.append(ConjClass(name, w, fg.class_sizes[fg.class_index(w)]))
        self._g2_fg = fg
        self._g2_map = {fg.class_index(w): k for k, (_, w) in enumerate(reps)}
        return out

    def class_index(self, w):
        """Index (in classes()) of the class containing w."""
        classes = self.classes()
        if self.kind == "A":
            mu, lam = w.signed_cycle_type()
            if lam:
                raise ValueError("element not in %s" % self.descriptor())
            return self._class_lookup[Partition(mu)]
        if self.kind == "B":
            mu, lam = w.signed_cycle_type()
            return self._class_lookup[(Partition(mu), Partition(lam))]
        if self.kind == "D":
            if self.n == 1:
                if not w.is_identity():
                    raise ValueError("element not in D1")
                return 0
            blocks, tag = self._almost_d_key(w, (self.n,))
            (mu, lam), = blocks
            return self._class_lookup[(mu, lam, tag)]
        if self.kind == "AlmostD":
            return self._class_lookup[self._almost_d_key(w, self.dims)]
        if self.kind == "G2":
            return self._g2_map[self._g2_fg.class_index(w)]
        idx = 0
        for (lo, hi), f in zip(self.blocks(), self.factors):
            idx = idx * len(f.classes()) + f.class_index(w.restrict(lo, hi))
        return idx

    def _almost_d_key(self, w, dims):
        if w.sign_count() % 2:
            raise ValueError("element not in %s" % self.descriptor())
        blocks = []
        off = 0
        for m in dims:
            mu, lam = w.restrict(off, off + m).signed_cycle_type()
            blocks.append((Partition(mu), Partition(lam)))
            off += m
        blocks = tuple(blocks)
        tag = ""
        if _is_split(blocks):
            parity = 0
            off = 0
            for m, (mu, _) in zip(dims, blocks):
                parity += _conjugator_parity(w.restrict(off, off + m), mu, off)
                off += m
            tag = "''" if parity % 2 else ""
        return blocks, tag

    def class_of_label(self, label):
        self.classes()
        return self._class_lookup[label]


def d_simple_roots(dims):
    """Simple roots of D_n1 x ... x D_nd in the ambient Z^n (D_1 contributes none)."""
    n = sum(dims)
    roots = []
    off = 0
    for m in dims:
        for i in range(m - 1):
            v = [0] * n
            v[off + i], v[off + i + 1] = 1, -1
            roots.append(tuple(v))
        if m >= 2:
            v = [0] * n
            v[off + m - 2] = v[off + m - 1] = 1
            roots.append(tuple(v))
        off += m
    return roots


def gamma_generators(dims):
    """eps^(k) eps^(k+1), eps^(k) the sign change at the last coordinate of block k."""
    n = sum(dims)
    ends = list(itertools.accumulate(dims))
    return [_sign_at(n, ends[k] - 1) * _sign_at(n, ends[k + 1] - 1) for k in range(len(ends) - 1)]


def root_reflection(v):
    """Reflection in a root of the form +-e_i +- e_j."""
    n = len(v)
    i, j = [k for k in range(n) if v[k]]
    img = list(range(n))
    img[i], img[j] = j, i
    sg = [1] * n
    sg[i] = sg[j] = -v[i] * v[j]
    return SignedPermutation(img, sg)


def _is_split(blocks):
    return all(not lam for _, lam in blocks) and all(p % 2 == 0 for mu, _ in blocks for p in mu)


def g2_simple_reflections():
    """s_i(x) = x - <x, a_i^v> a_i on X = Z e1 + Z e2, the simple roots."""
    roots = [(1, 0), (0, 1)]
    coroots = [(2, -3), (-1, 2)]
    mats = []
    for a, c in zip(roots, coroots):
        cols = []
        for x in ((1, 0), (0, 1)):
            p = x[0] * c[0] + x[1] * c[1]
            cols.append((x[0] - p * a[0], x[1] - p * a[1]))
        mats.append(MatrixElement([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]))
    return mats


def build_group(kind, n=None):
    """Catalog constructor. kind: 'A' (S_n), 'B', 'C' (same group as B), 'D', 'G2',
    'AlmostD' (n a tuple of block sizes), or 'product' (n a list of groups)."""
    kind = kind.upper() if isinstance(kind, str) and kind.lower() != "almostd" else kind
    if kind in ("A", "S"):
        if n is None or n < 1:
            raise ValueError("S_n needs n >= 1")
        return WeylGroup("A", n)
    if kind in ("B", "C"):
        if n is None or n < 1:
            raise ValueError("B_n needs n >= 1")
        return WeylGroup("B", n)
    if kind == "D":
        if n is None or n < 1:
            raise ValueError("D_n needs n >= 1")
        return WeylGroup("D", n)
    if kind == "G2":
        return WeylGroup("G2", 2)
    if isinstance(kind, str) and kind.lower() == "almostd":
        dims = tuple(int(x) for x in n)
        if not dims or any(m < 1 for m in dims):
            raise ValueError("AlmostD needs positive block sizes")
        if len(dims) == 1:
            return WeylGroup("D", dims[0])
        return WeylGroup("AlmostD", sum(dims), dims=dims)
    if kind == "PRODUCT":
        return WeylGroup("product", None, factors=list(n))
    raise ValueError("unknown group kind %r" % (kind,))


def conjugacy_classes(W):
    return W.classes()


def fixed_dim(w):
    """dim ker(w - 1) on the ambient space."""
    if isinstance(w, SignedPermutation):
        return sum(1 for _, s in w.signed_cycles() if s > 0)
    m = w.matrix()
    k = len(m)
    return k - int_rank([[m[i][j] - int(i == j) for j in range(k)] for i in range(k)])


def is_elliptic(W, w):
    """True iff w fixes no nonzero vector of the space that carries the roots.

    For the almost-Weyl groups with at least two blocks: true iff w lies in no
    proper parabolic subgroup (the geometric test disagrees there, see README)."""
    if W.kind == "AlmostD":
        return W.class_index(w) not in _non_elliptic_classes(W)
    return fixed_dim(w) == W.fixed_dim


def _non_elliptic_classes(W):
    if getattr(W, "_non_elliptic", None) is None:
        out = set()
        for par in standard_parabolics(W):
            if par.proper:
                out.update(par.fusion)
        W._non_elliptic = out
    return W._non_elliptic


def elliptic_class_count(W):
    return sum(1 for c in W.classes() if is_elliptic(W, c.representative))


def centralizer_elements(W, w, bound=ENUMERATION_BOUND):
    if W.is_signed and W.ambient_dim > 0:
        images, signs = W.element_arrays() if W.order <= bound else _raise_capacity(W, bound)
        idx = kernels.commuting_indices(images, signs, np.array(w.image, dtype=np.int32),
                                        np.array(w.signs, dtype=np.int8))
        els = W.elements()
        return [els[k] for k in idx]
    return [z for z in W.elements(bound) if z * w == w * z]


def _raise_capacity(W, bound):
    raise CapacityError("%s has order %d > bound %d" % (W.descriptor(), W.order, bound))


def centralizer(W, w, bound=ENUMERATION_BOUND):
    """(order, generators) of Z_W(w); checked against |W| / |class|."""
    els = centralizer_elements(W, w, bound)
    size = W.classes()[W.class_index(w)].size
    if len(els) * size != W.order:
        raise AssertionError("centralizer order %d disagrees with class size %d"
                             % (len(els), size))
    return len(els), small_generating_set(els, W.identity())


# -- parabolic subgroups

class Subgroup:
    """An explicit subgroup H of W with its own classes and fusion into W."""

    def __init__(self, W, elements, name, gens=None):
        self.W = W
        self.name = name
        self.group = FiniteGroup(elements, W.identity(), gens=gens)
        self.order = self.group.order
        self.fusion = [W.class_index(r) for r in self.group.reps]

    @property
    def elements(self):
        return self.group.elements

    def __repr__(self):
        return "Subgroup(%s, order=%d)" % (self.name, self.order)


class Parabolic:
    __slots__ = ("subset", "subgroup", "proper")

    def __init__(self, subset, subgroup, proper):
        self.subset = subset
        self.subgroup = subgroup
        self.proper = proper

    @property
    def fusion(self):
        return self.subgroup.fusion

    def __repr__(self):
        return "Parabolic(%s, order=%d%s)" % (self.subset, self.subgroup.order,
                                              "" if self.proper else ", full")


def class_fusion(W, H_elements):
    """Map each class of the subgroup (given by its elements) to a class of W."""
    for h in H_elements:
        if not W.contains(h):
            raise ValueError("embedding error: %r is not in %s" % (h, W.descriptor()))
    return Subgroup(W, H_elements, "H").fusion


def _simple_reflections(W):
    """(name, reflection) for the simple reflections of a Coxeter-type group."""
    if W.kind in ("A", "B", "G2"):
        return [("s%d" % (i + 1), g) for i, g in enumerate(W.generators)]
    raise ValueError("no simple reflections for %s" % W.kind)


def _candidate_parabolics(W):
    """(subset name, element list) for every standard parabolic, before merging."""
    e = W.identity()
    if W.kind in ("A", "B", "G2"):
        simple = _simple_reflections(W)
        out = []
        for r in range(len(simple) + 1):
            for sub in itertools.combinations(simple, r):
                names = tuple(s for s, _ in sub)
                gens = [g for _, g in sub]
                out.append((names, closure(gens, e), gens))
        return out
    if W.kind in ("D", "AlmostD"):
        if W.kind == "D" and W.n == 1:
            return [((), [e], [])]
        roots = d_simple_roots(W.dims)
        gamma = closure(gamma_generators(W.dims), e)
        out = []
        for r in range(len(roots) + 1):
            for sub in itertools.combinations(range(len(roots)), r):
                P = {roots[i] for i in sub}
                stab = [g for g in gamma if {tuple(g.act(list(v))) for v in P} == P]
                gens = [root_reflection(roots[i]) for i in sub] + [g for g in stab if g != e]
                names = tuple("a%d" % (i + 1) for i in sub)
                if len(stab) > 1:
                    names += ("Gamma_P",)
                out.append((names, closure(gens, e), gens))
        return out
    if W.kind == "product":
        pools = [standard_parabolics(f) for f in W.factors]
        out = []
        for combo in itertools.product(*pools):
            names = tuple(p.subset for p in combo)
            els = [direct_sum(*c) for c in itertools.product(*[p.subgroup.elements for p in combo])]
            out.append((names, els, None))
        return out
    raise ValueError("no parabolics for %s" % W.kind)


def _fused_signature(W, els):
    return (len(els), tuple(sorted(Counter(W.class_index(x) for x in els).items())))


def subgroups_conjugate(W, A, B):
    """True iff g A g^-1 = B for some g in W (A, B element lists)."""
    if len(A) != len(B):
        return False
    bset = set(B)
    gens = small_generating_set(A, W.identity())
    for g in W.elements():
        gi = g.inverse()
        if all(g * h * gi in bset for h in gens):
            return True
    return False


def standard_parabolics(W, enumerable_bound=ENUMERATION_BOUND):
    """One standard parabolic per W-conjugacy class of parabolic subgroups."""
    cands = _candidate_parabolics(W)
    buckets = {}
    reps = []
    for names, els, gens in cands:
        key = frozenset(els)
        sig = _fused_signature(W, els)
        bucket = buckets.setdefault(sig, [])
        if any(key == other for other, _ in bucket):
            continue
        if W.order <= enumerable_bound and any(subgroups_conjugate(W, els, list(other))
                                               for other, _ in bucket):
            continue
        bucket.append((key, names))
        proper = len(els) < W.order
        reps.append(Parabolic(names, Subgroup(W, els, str(names), gens=gens), proper))
    reps.sort(key=lambda p: (-p.subgroup.order, str(p.subset)))
    return reps


def isotropy_subgroup(W, y):
    """Stabilizer of a vector y (rational entries) in the ambient space."""
    return [w for w in W.elements() if list(w.act(y)) == list(y)]
