"""Finite complete lattices over opaque string element ids.

The order is handed in as an arbitrary relation; the constructor takes its
reflexive-transitive closure, then checks antisymmetry, a bottom element and
all binary joins.  At finite size that forces completeness, so joins and
meets of arbitrary subsets are available afterwards.  All tables are
precomputed; instances are immutable in practice and safe to share.
"""

from __future__ import annotations

from .errors import MalformedParams


class FiniteLattice:

    def __init__(self, elements, leq=(), name=""):
        self.name = name
        self.elements = tuple(dict.fromkeys(elements))
        if not self.elements:
            raise MalformedParams("a complete lattice needs at least one element")
        self._idx = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)

        # up[i] = bitmask of elements >= i, after reflexive-transitive closure
        up = [1 << i for i in range(n)]
        for a, b in leq:
            if a not in self._idx or b not in self._idx:
                raise MalformedParams(f"leq pair ({a!r}, {b!r}) mentions unknown elements")
            up[self._idx[a]] |= 1 << self._idx[b]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                m = acc
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in range(n):
                if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                    raise MalformedParams(
                        f"order is not antisymmetric: {self.elements[i]!r} ~ {self.elements[j]!r}")
        self._up = up
        self._down = [0] * n
        for i in range(n):
            for j in range(n):
                if up[j] >> i & 1:
                    self._down[i] |= 1 << j

        full = (1 << n) - 1
        bottoms = [i for i in range(n) if up[i] == full]
        if not bottoms:
            raise MalformedParams("order has no bottom element")
        self._bot = bottoms[0]

        self._join = [[-1] * n for _ in range(n)]
        self._meet = [[-1] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                uppers = up[i] & up[j]
                k = self._least_of(uppers)
                if k < 0:
                    raise MalformedParams(
                        f"no join for ({self.elements[i]!r}, {self.elements[j]!r})")
                self._join[i][j] = k
        # bottom + binary joins make every subset join exist; meets follow
        for i in range(n):
            for j in range(n):
                lowers = self._down[i] & self._down[j]
                k = self._greatest_of(lowers)
                if k < 0:
                    raise MalformedParams(
                        f"no meet for ({self.elements[i]!r}, {self.elements[j]!r})")
                self._meet[i][j] = k
        self._top = self._greatest_of(full)
        if self._top < 0:
            raise MalformedParams("order has no top element")

    def _least_of(self, mask):
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if self._up[i] & mask == mask:
                return i
        return -1

    def _greatest_of(self, mask):
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if self._down[i] & mask == mask:
                return i
        return -1

    # -- queries ----------------------------------------------------------

    @property
    def bottom(self):
        return self.elements[self._bot]

    @property
    def top(self):
        return self.elements[self._top]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self._idx

    def index(self, e):
        return self._idx[e]

    def leq(self, a, b):
        return self._up[self._idx[a]] >> self._idx[b] & 1 == 1

    def join(self, a, b):
        return self.elements[self._join[self._idx[a]][self._idx[b]]]

    def meet(self, a, b):
        return self.elements[self._meet[self._idx[a]][self._idx[b]]]

    def join_all(self, items):
        k = self._bot
        for e in items:
            k = self._join[k][self._idx[e]]
        return self.elements[k]

    def meet_all(self, items):
        k = self._top
        for e in items:
            k = self._meet[k][self._idx[e]]
        return self.elements[k]

    def leq_pairs(self):
        """All ordered pairs (a, b) with a <= b, in element order."""
        return tuple((a, b) for a in self.elements for b in self.elements if self.leq(a, b))

    def covers(self, a, b):
        """True when b covers a (a < b with nothing strictly between)."""
        if a == b or not self.leq(a, b):
            return False
        return all(not (self.leq(a, c) and self.leq(c, b))
                   for c in self.elements if c not in (a, b))

    def join_irreducibles(self):
        """Elements that are not the join of the strictly smaller ones."""
        out = []
        for e in self.elements:
            below = [x for x in self.elements if x != e and self.leq(x, e)]
            if self.join_all(below) != e:
                out.append(e)
        return tuple(out)

    def is_distributive(self):
        for x in self.elements:
            for y in self.elements:
                for z in self.elements:
                    if self.meet(x, self.join(y, z)) != \
                            self.join(self.meet(x, y), self.meet(x, z)):
                        return False
        return True

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self):
        return hash((self.elements, tuple(self._up)))

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<FiniteLattice{tag} {len(self.elements)} elements>"

    # -- constructors ------------------------------------------------------

    @classmethod
    def chain(cls, labels, name=""):
        labels = tuple(labels)
        pairs = [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)]
        return cls(labels, pairs, name=name)

    @classmethod
    def product(cls, factors, sep="|", name=""):
        """Componentwise product; element ids are the joined component ids."""
        factors = list(factors)
        if not factors:
            return cls(("*",), name=name)
        labels = [()]
        for lat in factors:
            labels = [t + (e,) for t in labels for e in lat.elements]
        ids = [sep.join(t) for t in labels]
        pairs = []
        for t, a in zip(labels, ids):
            for u, b in zip(labels, ids):
                if all(f.leq(x, y) for f, x, y in zip(factors, t, u)):
                    pairs.append((a, b))
        return cls(ids, pairs, name=name)
