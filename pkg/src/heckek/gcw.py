"""Cohomology of finite G-CW complexes with representation-ring coefficients.

A complex is a JSON document:

    {"format_version": 1, "name": ...,
     "group": {"elements": [names], "table": [[index]]},
     "cells": [{"id": str, "dim": int, "isotropy": [names]}],
     "action": {name: [image cell id of each cell, in cell order]},
     "incidence": [[face id, cell id, coefficient]]}

Incidence entries list the face relation with its integer incidence numbers;
a zero coefficient records a face that cancels (a loop edge at a vertex).
The stalk at a cell is the representation ring of its isotropy group with
irreducibles in a fixed order; the coboundary restricts characters from the
isotropy of a face to that of the cell, the boundary induces them back.
"""
import json
from importlib import resources
from math import lcm

from .chars import _is_prime, dixon_table
from .finite import FiniteGroup, GroupTable
from .linalg import cokernel_invariants, rank, transpose

FORMAT_VERSION = 1
BUILTINS = ("circle_trivial", "circle_reflection", "torus_swap", "torus_B2", "torus_G2")


class ComplexError(ValueError):
    """Malformed document or a violated G-CW axiom."""


class Cell:
    __slots__ = ("id", "dim", "isotropy", "index")

    def __init__(self, id, dim, isotropy, index):
        self.id = id
        self.dim = dim
        self.isotropy = isotropy
        self.index = index

    def __repr__(self):
        return "Cell(%s, dim=%d)" % (self.id, self.dim)


class GCWComplex:
    """Validated complex. Group elements are indices into `group.names`;
    `action[g][c]` is the index of g.c; `incidence[(t, s)]` is [t : s]."""

    def __init__(self, name, group, cells, action, incidence):
        self.name = name
        self.group = group
        self.cells = cells
        self.action = action
        self.incidence = incidence
        self.dim = max((c.dim for c in cells), default=-1)
        self._orbits()

    def _orbits(self):
        self.rep_of = [None] * len(self.cells)
        self.transporter = [None] * len(self.cells)
        self.reps = {q: [] for q in range(self.dim + 1)}
        for c in self.cells:
            if self.rep_of[c.index] is not None:
                continue
            self.reps[c.dim].append(c.index)
            for g in range(len(self.group.names)):
                d = self.action[g][c.index]
                if self.rep_of[d] is None:
                    self.rep_of[d] = c.index
                    self.transporter[d] = g

    def faces(self, s):
        return [(t, k) for (t, s2), k in self.incidence.items() if s2 == s]

    def cells_of_dim(self, q):
        return [c.index for c in self.cells if c.dim == q]

    def euler_characteristic(self):
        return sum((-1) ** c.dim for c in self.cells)


def _fail(msg):
    raise ComplexError(msg)


def parse_complex(document):
    """Parse and validate a complex given as a dict or JSON text."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            _fail("malformed document: %s" % exc)
    if not isinstance(document, dict):
        _fail("malformed document: top level must be an object")
    for key in ("format_version", "group", "cells", "action", "incidence"):
        if key not in document:
            _fail("malformed document: missing key %r" % key)
    if document["format_version"] != FORMAT_VERSION:
        _fail("unsupported format version %r" % (document["format_version"],))
    grp = document["group"]
    try:
        group = GroupTable(grp["elements"], grp["table"])
    except (KeyError, TypeError) as exc:
        _fail("malformed group: %s" % exc)
    except ValueError as exc:
        _fail(str(exc))
    names = group.names
    pos = {n: i for i, n in enumerate(names)}

    cells = []
    ids = {}
    for k, c in enumerate(document["cells"]):
        try:
            cid, dim, iso = str(c["id"]), int(c["dim"]), c["isotropy"]
        except (KeyError, TypeError, ValueError):
            _fail("malformed cell entry #%d" % k)
        if cid in ids:
            _fail("duplicate cell id %s" % cid)
        if dim < 0:
            _fail("cell %s has negative dimension" % cid)
        if any(g not in pos for g in iso):
            _fail("cell %s: unknown group element in isotropy" % cid)
        ids[cid] = k
        cells.append(Cell(cid, dim, frozenset(pos[g] for g in iso), k))
    ncells = len(cells)

    action = [None] * len(names)
    for gname, imgs in document["action"].items():
        if gname not in pos:
            _fail("action given for unknown element %s" % gname)
        if len(imgs) != ncells or any(str(x) not in ids for x in imgs):
            _fail("action of %s is not a list of %d cell ids" % (gname, ncells))
        perm = [ids[str(x)] for x in imgs]
        if len(set(perm)) != ncells:
            _fail("action of %s is not a permutation" % gname)
        action[pos[gname]] = perm
    if any(a is None for a in action):
        _fail("action missing for some group elements")

    incidence = {}
    for entry in document["incidence"]:
        try:
            t, s, k = str(entry[0]), str(entry[1]), int(entry[2])
        except (IndexError, TypeError, ValueError):
            _fail("malformed incidence entry %r" % (entry,))
        if t not in ids or s not in ids:
            _fail("incidence refers to unknown cell in %r" % (entry,))
        ti, si = ids[t], ids[s]
        if cells[si].dim != cells[ti].dim + 1:
            _fail("incidence %s -> %s: dimensions must differ by one" % (t, s))
        if (ti, si) in incidence:
            _fail("duplicate incidence %s -> %s" % (t, s))
        incidence[(ti, si)] = k

    X = GCWComplex(document.get("name", "complex"), group, cells, action, incidence)
    validate(X)
    return X


def validate(X):
    """Check every axiom; raises ComplexError naming the failing one."""
    G = X.group
    n = len(G.names)
    e = G.identity_index
    cells = X.cells
    if X.action[e] != list(range(len(cells))):
        _fail("action axiom failed: identity does not act trivially")
    for g in range(n):
        for c in cells:
            if cells[X.action[g][c.index]].dim != c.dim:
                _fail("action axiom failed: %s changes the dimension of %s" % (G.names[g], c.id))
    for g in range(n):
        for h in range(n):
            gh = G.mult[g][h]
            for c in range(len(cells)):
                if X.action[gh][c] != X.action[g][X.action[h][c]]:
                    _fail("action axiom failed: not a homomorphism at (%s, %s) on %s"
                          % (G.names[g], G.names[h], cells[c].id))
    for c in cells:
        stab = frozenset(g for g in range(n) if X.action[g][c.index] == c.index)
        if stab != c.isotropy:
            _fail("stabilizer axiom failed: declared isotropy of %s is not its stabilizer" % c.id)
        for g in range(n):
            d = cells[X.action[g][c.index]]
            ginv = G.inverses[g]
            conj = frozenset(G.mult[G.mult[g][x]][ginv] for x in c.isotropy)
            if conj != d.isotropy:
                _fail("isotropy axiom failed: isotropy of %s is not conjugate to that of %s"
                      % (d.id, c.id))
    # faces of a cell are fixed by its isotropy, since it acts trivially on the cell
    for (t, s) in X.incidence:
        if any(X.action[g][t] != t for g in cells[s].isotropy):
            _fail("pointwise axiom failed: isotropy of %s moves its face %s" % (cells[s].id, cells[t].id))
    for (t, s), k in X.incidence.items():
        for g in range(n):
            key = (X.action[g][t], X.action[g][s])
            if X.incidence.get(key) != k:
                _fail("equivariance axiom failed: [%s:%s] != [%s:%s]"
                      % (cells[key[0]].id, cells[key[1]].id, cells[t].id, cells[s].id))
    for q in range(X.dim - 1):
        for r in X.cells_of_dim(q + 2):
            acc = {}
            for s, k1 in X.faces(r):
                for t, k2 in X.faces(s):
                    acc[t] = acc.get(t, 0) + k1 * k2
            bad = [t for t, v in acc.items() if v]
            if bad:
                _fail("d o d != 0 at %s (face %s)" % (cells[r].id, cells[bad[0]].id))


# -- local system

def _modulus(order, exponent):
    """A prime p = 1 mod exponent with p > 2 |G|: it works for every subgroup, and
    multiplicities (at most sqrt|G|) lift uniquely."""
    p = 2 * order + 1
    p += (1 - p) % exponent
    while not _is_prime(p):
        p += exponent
    return p


class LocalSystem:
    """Stalks R(G_c) for orbit representatives and restriction matrices for
    every face pair, all with respect to transported irreducible bases."""

    def __init__(self, X):
        self.X = X
        G = X.group
        self.G = G
        n = len(G.names)
        exp = 1
        for g in range(n):
            k, x = 1, g
            while x != G.identity_index:
                x = G.mult[x][g]
                k += 1
            exp = lcm(exp, k)
        self.p = _modulus(n, exp)
        self._tables = {}
        for q, reps in X.reps.items():
            for c in reps:
                self._table(c)
        self.rank = {c: len(self._tables[c][1]) for reps in X.reps.values() for c in reps}

    def _table(self, c):
        """(FiniteGroup on element indices, characters as dicts element -> value mod p)."""
        if c in self._tables:
            return self._tables[c]
        X, G = self.X, self.G
        iso = sorted(X.cells[c].isotropy)
        for a in iso:
            for b in iso:
                if G.mult[a][b] not in X.cells[c].isotropy:
                    raise ComplexError("isotropy of %s is not closed under multiplication"
                                       % X.cells[c].id)
        els = [G.all_elements()[i] for i in iso]
        H = FiniteGroup(els, G.identity())
        tab = dixon_table(H, group_id=X.cells[c].id, modulus=self.p)
        chars = []
        for row in tab.mod_values:
            chars.append({e.i: row[H.class_of[H.index[e]]] for e in H.elements})
        self._tables[c] = (H, chars)
        return self._tables[c]

    def characters(self, c):
        """Irreducible characters of G_c in the basis transported from the orbit rep."""
        X, G = self.X, self.G
        r, g = X.rep_of[c], X.transporter[c]
        chars = self._tables[r][1]
        ginv = G.inverses[g]
        out = []
        for chi in chars:
            # chi^g(x) = chi(g^-1 x g)
            out.append({x: chi[G.mult[G.mult[ginv][x]][g]] for x in X.cells[c].isotropy})
        return out

    def _pair(self, f, psis, order):
        p = self.p
        inv = pow(order, p - 2, p)
        out = []
        for psi in psis:
            s = sum(f[x] * psi[self.G.inverses[x]] for x in psi) % p
            m = (s * inv) % p
            if m > p // 2:
                raise ArithmeticError("negative multiplicity")
            out.append(m)
        return out

    def restriction(self, t, s):
        """Matrix (rows: irreducibles of G_s, columns: of G_t) of res from G_t to G_s."""
        chis = self.characters(t)
        psis = self.characters(s)
        order = len(self.X.cells[s].isotropy)
        cols = [self._pair({x: chi[x] for x in self.X.cells[s].isotropy}, psis, order)
                for chi in chis]
        return transpose(cols) if cols else []

    def induction(self, s, t):
        """Matrix (rows: irreducibles of G_t, columns: of G_s) of ind from G_s to G_t,
        computed from the induced-character formula."""
        G = self.G
        K = self.X.cells[s].isotropy
        H = sorted(self.X.cells[t].isotropy)
        p = self.p
        kinv = pow(len(K), p - 2, p)
        chis = self.characters(t)
        cols = []
        for psi in self.characters(s):
            ind = {}
            for x in H:
                acc = 0
                for y in H:
                    z = G.mult[G.mult[G.inverses[y]][x]][y]
                    if z in K:
                        acc += psi[z]
                ind[x] = (acc * kinv) % p
            cols.append(self._pair(ind, chis, len(H)))
        return transpose(cols) if cols else []

    def check_functorial(self):
        """res along t < s < r equals res along t < s' < r for all two-step chains."""
        X = self.X
        for r in range(len(X.cells)):
            paths = {}
            for s, _ in X.faces(r):
                for t, _ in X.faces(s):
                    m = _matmul(self.restriction(s, r), self.restriction(t, s))
                    if t in paths and paths[t] != m:
                        raise AssertionError("restrictions do not compose consistently at %s"
                                             % X.cells[r].id)
                    paths[t] = m
        return True


def _matmul(a, b):
    if not a or not b:
        return []
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def local_system(X):
    return LocalSystem(X)


# -- cochain and chain complexes

def _offsets(L, reps):
    off, out = 0, {}
    for c in reps:
        out[c] = off
        off += L.rank[c]
    return out, off


def coboundary_matrices(X, L=None):
    """delta_q : C^q -> C^{q+1} for q = 0..dim-1, as (rows = C^{q+1}) integer matrices."""
    L = L or LocalSystem(X)
    mats = []
    for q in range(X.dim):
        src, ns = _offsets(L, X.reps[q])
        dst, nd = _offsets(L, X.reps[q + 1])
        M = [[0] * ns for _ in range(nd)]
        for s in X.reps[q + 1]:
            for t, k in X.faces(s):
                if not k:
                    continue
                R = L.restriction(t, s)
                base = src[X.rep_of[t]]
                for j in range(len(R)):
                    for i in range(len(R[j])):
                        M[dst[s] + j][base + i] += k * R[j][i]
        mats.append(M)
    return mats


def boundary_matrices(X, L=None):
    """partial_q : C_q -> C_{q-1} for q = 1..dim on coinvariant chains, via induction."""
    L = L or LocalSystem(X)
    mats = []
    for q in range(1, X.dim + 1):
        src, ns = _offsets(L, X.reps[q])
        dst, nd = _offsets(L, X.reps[q - 1])
        M = [[0] * ns for _ in range(nd)]
        for s in X.reps[q]:
            for t, k in X.faces(s):
                if not k:
                    continue
                I = L.induction(s, t)
                base = dst[X.rep_of[t]]
                for i in range(len(I)):
                    for j in range(len(I[i])):
                        M[base + i][src[s] + j] += k * I[i][j]
        mats.append(M)
    return mats


def _ranks(L, X):
    return [sum(L.rank[c] for c in X.reps[q]) for q in range(X.dim + 1)]


def _graded_homology(dims, incoming, outgoing):
    """Per degree (rank, torsion): incoming[q] maps into degree q, outgoing[q] out of it."""
    out = []
    for q, n in enumerate(dims):
        r_out = rank(outgoing[q]) if outgoing[q] else 0
        if incoming[q]:
            r_in, torsion = cokernel_invariants(incoming[q], n)
            r_in = n - r_in
        else:
            r_in, torsion = 0, []
        out.append((n - r_out - r_in, torsion))
    return out


def cohomology(X, L=None):
    L = L or LocalSystem(X)
    d = coboundary_matrices(X, L)
    dims = _ranks(L, X)
    incoming = [None] + d
    outgoing = d + [None]
    return _graded_homology(dims, incoming, outgoing)


def homology(X, L=None):
    L = L or LocalSystem(X)
    b = boundary_matrices(X, L)
    dims = _ranks(L, X)
    incoming = b + [None]
    outgoing = [None] + b
    return _graded_homology(dims, incoming, outgoing)


class DualityReport:
    def __init__(self, homology, cohomology, mismatches):
        self.homology = homology
        self.cohomology = cohomology
        self.mismatches = mismatches

    @property
    def passed(self):
        return not self.mismatches


def homology_and_duality(X, L=None):
    """Homology with induction maps, plus the check that each boundary matrix is the
    transpose of the matching coboundary matrix."""
    L = L or LocalSystem(X)
    d = coboundary_matrices(X, L)
    b = boundary_matrices(X, L)
    bad = [q for q in range(len(d)) if transpose(d[q]) != b[q] and (d[q] or b[q])]
    # empty matrices: compare shapes
    bad = [q for q in bad if not (_is_empty(d[q]) and _is_empty(b[q]))]
    return DualityReport(homology(X, L), cohomology(X, L), bad)


def _is_empty(m):
    return not m or not m[0]


def dd_zero(X, L=None):
    """delta o delta = 0 on the invariant cochain complex."""
    d = coboundary_matrices(X, L)
    for q in range(len(d) - 1):
        prod = _matmul(d[q + 1], d[q])
        if any(v for row in prod for v in row):
            return False
    return True


def cochain_euler(X, L=None):
    L = L or LocalSystem(X)
    return sum((-1) ** q * n for q, n in enumerate(_ranks(L, X)))


def format_groups(result):
    out = []
    for q, (r, tors) in enumerate(result):
        parts = (["Z^%d" % r] if r else []) + ["Z/%d" % t for t in tors]
        out.append("H%d = %s" % (q, " + ".join(parts) if parts else "0"))
    return out


# -- builtins

def builtin_document(name):
    if name not in BUILTINS:
        raise KeyError("unknown builtin complex %r (known: %s)" % (name, ", ".join(BUILTINS)))
    text = resources.files("heckek").joinpath("data", name + ".json").read_text()
    return json.loads(text)


def builtin_complex(name):
    return parse_complex(builtin_document(name))


def builtin_complexes():
    return [(name, builtin_complex(name)) for name in BUILTINS]


# -- helpers for writing documents

def group_document(names, mult):
    return {"elements": list(names), "table": [list(r) for r in mult]}


def isotropy_names(X, c):
    return sorted(X.group.names[g] for g in X.cells[c].isotropy)


def all_face_chains(X):
    """(t, s, r) with t a face of s and s a face of r."""
    for r in range(len(X.cells)):
        for s, _ in X.faces(r):
            for t, _ in X.faces(s):
                yield t, s, r

