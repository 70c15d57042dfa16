"""Group elements: signed permutations and small integer matrices."""


class SignedPermutation:
    """Monomial matrix w with w(e_i) = signs[i] * e_{image[i]} (0-based)."""

    __slots__ = ("image", "signs", "_hash")

    def __init__(self, image, signs=None):
        image = tuple(image)
        if signs is None:
            signs = (1,) * len(image)
        signs = tuple(signs)
        if len(signs) != len(image) or sorted(image) != list(range(len(image))):
            raise ValueError("not a signed permutation: %r %r" % (image, signs))
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        self.image = image
        self.signs = signs
        self._hash = hash((image, signs))

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles, negative=()):
        """Product of disjoint 1-based cycles; `negative` lists 1-based sign changes
        applied after the permutation (so the result is eps_I * sigma)."""
        image = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                image[a - 1] = b - 1
        signs = [1] * n
        for i in range(n):
            if image[i] + 1 in negative:
                signs[i] = -1
        return cls(image, signs)

    @classmethod
    def sign_change(cls, n, idx):
        """eps_I for a set of 1-based indices."""
        return cls(range(n), [-1 if i + 1 in idx else 1 for i in range(n)])

    @property
    def n(self):
        return len(self.image)

    def __mul__(self, other):
        # (self * other)(e_i) = self(other(e_i))
        a_img, a_sg = self.image, self.signs
        img = []
        sg = []
        for j, s in zip(other.image, other.signs):
            img.append(a_img[j])
            sg.append(s * a_sg[j])
        return SignedPermutation(img, sg)

    def inverse(self):
        n = len(self.image)
        img = [0] * n
        sg = [1] * n
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            img[j] = i
            sg[j] = s
        return SignedPermutation(img, sg)

    def __eq__(self, other):
        return (isinstance(other, SignedPermutation) and self.image == other.image
                and self.signs == other.signs)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.image, self.signs) < (other.image, other.signs)

    def __repr__(self):
        return "SignedPermutation(%r, %r)" % (self.image, self.signs)

    def matrix(self):
        n = len(self.image)
        m = [[0] * n for _ in range(n)]
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            m[j][i] = s
        return m

    def act(self, x):
        out = [0] * len(x)
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            out[j] += s * x[i]
        return out

    def sign_count(self):
        return sum(1 for s in self.signs if s < 0)

    def is_identity(self):
        return all(j == i for i, j in enumerate(self.image)) and all(s == 1 for s in self.signs)

    def signed_cycles(self):
        """List of (cycle as 0-based indices, product of signs along it)."""
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cyc = []
            sign = 1
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                sign *= self.signs[i]
                i = self.image[i]
            out.append((cyc, sign))
        return out

    def signed_cycle_type(self):
        """(mu, lam): sorted lengths of positive and of negative cycles."""
        pos, neg = [], []
        for cyc, sign in self.signed_cycles():
            (pos if sign > 0 else neg).append(len(cyc))
        return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))

    def restrict(self, lo, hi):
        """The block on coordinates lo..hi-1 (must be stable)."""
        img = [j - lo for j in self.image[lo:hi]]
        return SignedPermutation(img, self.signs[lo:hi])

    def order(self):
        o = 1
        for cyc, sign in self.signed_cycles():
            k = len(cyc) * (2 if sign < 0 else 1)
            o = o * k // _gcd(o, k)
        return o


def direct_sum(*perms):
    img, sg = [], []
    off = 0
    for p in perms:
        img.extend(j + off for j in p.image)
        sg.extend(p.signs)
        off += p.n
    return SignedPermutation(img, sg)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class MatrixElement:
    """Invertible integer matrix used as a group element (G2 and friends)."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(v) for v in r) for r in rows)
        self._hash = hash(self.rows)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return len(self.rows)

    def __mul__(self, other):
        b = other.rows
        cols = list(zip(*b))
        return MatrixElement([[sum(x * y for x, y in zip(r, c)) for c in cols] for r in self.rows])

    def inverse(self):
        # finite order: walk powers until identity
        ident = MatrixElement.identity(self.n)
        prev = ident
        cur = self
        for _ in range(1000):
            if cur == ident:
                return prev
            prev = cur
            cur = cur * self
        raise ValueError("element of infinite or very large order")

    def __eq__(self, other):
        return isinstance(other, MatrixElement) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.rows < other.rows

    def __repr__(self):
        return "MatrixElement(%r)" % (self.rows,)

    def matrix(self):
        return [list(r) for r in self.rows]

    def act(self, x):
        return [sum(a * b for a, b in zip(r, x)) for r in self.rows]

    def is_identity(self):
        return self == MatrixElement.identity(self.n)

    def order(self):
        ident = MatrixElement.identity(self.n)
        cur = self
        k = 1
        while cur != ident:
            cur = cur * self
            k += 1
        return k
