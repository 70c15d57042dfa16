"""Explicitly enumerated finite groups: closure, conjugacy classes, subgroups."""


class CapacityError(RuntimeError):
    pass


def closure(gens, identity, limit=2_000_000):
    """All products of the generators, breadth first, as a list."""
    seen = {identity}
    out = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    nxt.append(y)
                    if len(out) > limit:
                        raise CapacityError("group larger than %d elements" % limit)
        frontier = nxt
    return out


def small_generating_set(elements, identity):
    """Greedy generating set, usually of logarithmic size."""
    gens = []
    current = {identity}
    for e in sorted(elements):
        if e not in current:
            gens.append(e)
            current = set(closure(gens, identity))
            if len(current) == len(elements):
                break
    return gens


class FiniteGroup:
    """A finite group given by its element list; elements support *, inverse(), ==, hash.

    Classes are either computed as conjugation orbits or taken from `class_key`,
    a function element -> class number in 0..nclasses-1.
    """

    def __init__(self, elements, identity, gens=None, class_key=None, nclasses=None):
        elements = list(elements)
        if identity in elements:
            elements.remove(identity)
        self.elements = [identity] + sorted(elements)
        self.identity = identity
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.order = len(self.elements)
        self.gens = list(gens) if gens is not None else small_generating_set(self.elements, identity)
        self._inv = None
        if class_key is None:
            self._orbit_classes()
        else:
            buckets = [[] for _ in range(nclasses)]
            for i, e in enumerate(self.elements):
                buckets[class_key(e)].append(i)
            if any(not b for b in buckets):
                raise ValueError("class_key leaves a class empty")
            self.classes = buckets
        self.class_of = [0] * self.order
        for c, members in enumerate(self.classes):
            for i in members:
                self.class_of[i] = c
        self.class_sizes = [len(c) for c in self.classes]
        self.reps = [self.elements[c[0]] for c in self.classes]

    def _orbit_classes(self):
        seen = [False] * self.order
        classes = []
        ginv = [g.inverse() for g in self.gens]
        for i, e in enumerate(self.elements):
            if seen[i]:
                continue
            orbit = [i]
            seen[i] = True
            frontier = [e]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in zip(self.gens, ginv):
                        y = gi * x * g
                        j = self.index[y]
                        if not seen[j]:
                            seen[j] = True
                            orbit.append(j)
                            nxt.append(y)
                frontier = nxt
            classes.append(sorted(orbit))
        self.classes = classes

    def mul(self, i, j):
        return self.index[self.elements[i] * self.elements[j]]

    def inv(self, i):
        if self._inv is None:
            self._inv = [self.index[e.inverse()] for e in self.elements]
        return self._inv[i]

    def class_index(self, e):
        return self.class_of[self.index[e]]

    def inverse_class(self, c):
        return self.class_of[self.inv(self.classes[c][0])]

    def element_order(self, i):
        e = self.elements[i]
        k = 1
        x = e
        while x != self.identity:
            x = x * e
            k += 1
        return k

    def exponent(self):
        from math import lcm
        out = 1
        for c in self.classes:
            out = lcm(out, self.element_order(c[0]))
        return out

    def centralizer_order(self, c):
        return self.order // self.class_sizes[c]


class TableElement:
    """Element of a group given by a multiplication table."""

    __slots__ = ("table", "i")

    def __init__(self, table, i):
        self.table = table
        self.i = i

    def __mul__(self, other):
        return TableElement(self.table, self.table.mult[self.i][other.i])

    def inverse(self):
        return TableElement(self.table, self.table.inverses[self.i])

    def __eq__(self, other):
        return isinstance(other, TableElement) and self.i == other.i and self.table is other.table

    def __hash__(self):
        return hash(self.i)

    def __lt__(self, other):
        return self.i < other.i

    def __repr__(self):
        return "TableElement(%s)" % self.table.names[self.i]


class GroupTable:
    """Validated multiplication table with named elements."""

    def __init__(self, names, mult):
        n = len(names)
        if len(set(names)) != n:
            raise ValueError("duplicate element names")
        if len(mult) != n or any(len(r) != n for r in mult):
            raise ValueError("multiplication table must be %d x %d" % (n, n))
        if any(not (0 <= v < n) for r in mult for v in r):
            raise ValueError("multiplication table entry out of range")
        self.names = list(names)
        self.mult = [list(r) for r in mult]
        ident = [i for i in range(n) if all(mult[i][j] == j and mult[j][i] == j for j in range(n))]
        if len(ident) != 1:
            raise ValueError("group axiom failed: no unique identity")
        self.identity_index = ident[0]
        for a in range(n):
            for b in range(n):
                ab = mult[a][b]
                for c in range(n):
                    if mult[ab][c] != mult[a][mult[b][c]]:
                        raise ValueError("group axiom failed: associativity at (%s,%s,%s)"
                                         % (names[a], names[b], names[c]))
        self.inverses = []
        for a in range(n):
            inv = [b for b in range(n) if mult[a][b] == self.identity_index]
            if len(inv) != 1 or mult[inv[0]][a] != self.identity_index:
                raise ValueError("group axiom failed: %s has no inverse" % names[a])
            self.inverses.append(inv[0])

    def element(self, name):
        return TableElement(self, self.names.index(name))

    def all_elements(self):
        return [TableElement(self, i) for i in range(len(self.names))]

    def identity(self):
        return TableElement(self, self.identity_index)

    def group(self):
        return FiniteGroup(self.all_elements(), self.identity())
