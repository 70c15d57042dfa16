"""Regenerate the builtin G-CW complexes in src/heckek/data.

Each torus R^d / Z^d carries a linear action of a finite group of integer
matrices. The cells are the images of one fundamental simplex and their faces,
identified modulo integer translations; orientations are transported from an
orbit representative, so the group preserves them. Run from the repo root.
"""
import json
import os
import sys
from fractions import Fraction
from itertools import combinations
from math import floor

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "src", "heckek", "data")


def matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
                 for i in range(len(a)))


def apply(m, v):
    return tuple(sum(m[i][k] * v[k] for k in range(len(v))) for i in range(len(m)))


def inverse_transpose_2x2(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    inv = ((d // det, -b // det), (-c // det, a // det))
    return tuple(zip(*inv))


def closure(gens):
    """Elements with shortest-word names, breadth first."""
    d = len(gens[0][1])
    ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    names = {ident: "e"}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for gname, g in gens:
                y = matmul(x, g)
                if y not in names:
                    names[y] = gname if names[x] == "e" else names[x] + gname
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order, names


def parity(perm):
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def canon(verts):
    """(key, parity): key is the lexicographically least sorted translate with one
    vertex in [0,1)^d; parity compares the given vertex order with the key's."""
    best = None
    for v in verts:
        shift = tuple(-floor(x) for x in v)
        moved = [tuple(x + s for x, s in zip(p, shift)) for p in verts]
        key = tuple(sorted(moved))
        if best is None or key < best[0]:
            best = (key, moved)
    key, moved = best
    perm = [key.index(p) for p in moved]
    return key, parity(perm)


def build(name, gens, simplex):
    elements, names = closure(gens)
    index = {g: i for i, g in enumerate(elements)}
    mult = [[index[matmul(a, b)] for b in elements] for a in elements]
    simplex = [tuple(Fraction(x) for x in v) for v in simplex]
    top = len(simplex) - 1

    cells = set()
    for g in elements:
        img = [apply(g, v) for v in simplex]
        for k in range(1, top + 2):
            for sub in combinations(img, k):
                cells.add(canon(list(sub))[0])

    def act(g, key):
        return canon([apply(g, v) for v in key])

    # orbits, orientations transported from the representative
    orient = {}
    rep_order = []
    for key in sorted(cells, key=lambda c: (len(c), c)):
        if key in orient:
            continue
        rep_order.append(key)
        orient[key] = 1
        for g in elements:
            img, par = act(g, key)
            if img in orient:
                if img != key or par == 1:
                    continue
                raise ValueError("%s: stabilizer reverses the orientation of %r" % (name, key))
            orient[img] = par
    for key in cells:
        for g in elements:
            img, par = act(g, key)
            if orient[img] != par * orient[key]:
                raise ValueError("%s: action does not preserve orientations" % name)

    # ids: dimension, then orbit, then element order
    ordered = []
    for rep in rep_order:
        for g in elements:
            img = act(g, rep)[0]
            if img not in ordered:
                ordered.append(img)
    ordered.sort(key=lambda c: len(c))
    prefix = "vef"
    counts = [0, 0, 0]
    ids = {}
    for key in ordered:
        d = len(key) - 1
        ids[key] = "%s%d" % (prefix[d], counts[d])
        counts[d] += 1

    stab = {}
    for key in ordered:
        s = [g for g in elements if act(g, key)[0] == key]
        for g in s:
            for v in key:
                w = apply(g, v)
                if any((a - b).denominator != 1 for a, b in zip(v, w)):
                    raise ValueError("%s: stabilizer of %s does not fix it pointwise" % (name, ids[key]))
        stab[key] = sorted(names[g] for g in s)

    incidence = {}
    for key in ordered:
        d = len(key) - 1
        if d == 0:
            continue
        verts = list(key)
        if orient[key] == -1:
            verts[0], verts[1] = verts[1], verts[0]
        for i in range(d + 1):
            face = verts[:i] + verts[i + 1:]
            fkey, par = canon(face)
            pair = (ids[fkey], ids[key])
            incidence[pair] = incidence.get(pair, 0) + (-1) ** i * par * orient[fkey]
    # manifold check: every codimension-one cell lies in exactly two top cells
    if top >= 1:
        for key in ordered:
            if len(key) - 1 == top - 1:
                n = sum(1 for other in ordered if len(other) - 1 == top
                        for i in range(top + 1)
                        if canon(list(other[:i] + other[i + 1:]))[0] == key)
                if n != 2:
                    raise ValueError("%s: %s lies in %d top cells" % (name, ids[key], n))

    doc = {
        "format_version": 1,
        "name": name,
        "group": {"elements": [names[g] for g in elements], "table": mult},
        "cells": [{"id": ids[k], "dim": len(k) - 1, "isotropy": stab[k]} for k in ordered],
        "action": {names[g]: [ids[act(g, k)[0]] for k in ordered] for g in elements},
        "incidence": [[t, s, c] for (t, s), c in sorted(incidence.items(),
                                                         key=lambda x: (x[0][1], x[0][0]))],
    }
    return doc


def g2_on_torus():
    # simple reflections on X (simple-root basis), transported to T by the inverse transpose
    roots = [(1, 0), (0, 1)]
    coroots = [(2, -3), (-1, 2)]
    gens = []
    for k, (a, c) in enumerate(zip(roots, coroots)):
        m = tuple(tuple(int(i == j) - a[i] * c[j] for j in range(2)) for i in range(2))
        gens.append(("s%d" % (k + 1), inverse_transpose_2x2(m)))
    return gens


SPECS = {
    "circle_trivial": ([("t", ((1,),))], [(0,), (1,)]),
    "circle_reflection": ([("s", ((-1,),))], [(0,), (Fraction(1, 2),)]),
    "torus_swap": ([("s", ((0, 1), (1, 0)))], [(0, 0), (1, 0), (1, 1)]),
    "torus_B2": ([("s1", ((0, 1), (1, 0))), ("s2", ((1, 0), (0, -1)))],
                 [(0, 0), (Fraction(1, 2), 0), (Fraction(1, 2), Fraction(1, 2))]),
    "torus_G2": (g2_on_torus(), [(0, 0), (Fraction(1, 3), 0), (0, Fraction(1, 2))]),
}


def main(argv):
    names = argv or sorted(SPECS)
    for name in names:
        gens, simplex = SPECS[name]
        doc = build(name, gens, simplex)
        path = os.path.join(OUT, name + ".json")
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        print("wrote", path, len(doc["cells"]), "cells")


if __name__ == "__main__":
    main(sys.argv[1:])
