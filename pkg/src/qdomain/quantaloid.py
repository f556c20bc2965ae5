"""Finite quantaloids: complete-lattice homs, composition, units, residuation.

A quantaloid is stored entirely by tables: one FiniteLattice per ordered pair
of objects, a composition table per object triple, and a unit per object.
Residuals (right liftings and right extensions of arrows) are computed by the
brute-force join over all candidates and cached; builder-specific closed
forms are used only as cross-checks in the test-suite, never here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import MalformedParams, TypeMismatch
from .lattice import FiniteLattice


@dataclass(frozen=True)
class QArrow:
    src: str
    dst: str
    elem: str


class Quantaloid:

    def __init__(self, objects, hom, comp, identities, name=""):
        self.name = name
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.comp = {k: dict(v) for k, v in comp.items()}
        self.identities = dict(identities)
        self._lift = {}
        self._ext = {}

        for x in self.objects:
            for y in self.objects:
                if (x, y) not in self.hom:
                    raise MalformedParams(f"missing hom lattice for ({x!r}, {y!r})")
        for x in self.objects:
            e = self.identities.get(x)
            if e is None or e not in self.hom[(x, x)]:
                raise MalformedParams(f"missing or foreign identity at {x!r}")
        for x, y, z in product(self.objects, repeat=3):
            table = self.comp.get((x, y, z))
            if table is None:
                raise MalformedParams(f"missing composition table for ({x!r},{y!r},{z!r})")
            lrange = self.hom[(x, z)]
            for g in self.hom[(y, z)]:
                for f in self.hom[(x, y)]:
                    h = table.get((g, f))
                    if h is None or h not in lrange:
                        raise MalformedParams(
                            f"composition ({x!r},{y!r},{z!r}) incomplete at ({g!r},{f!r})")

    # -- basic access -------------------------------------------------------

    def lat(self, x, y):
        return self.hom[(x, y)]

    def unit(self, x):
        return QArrow(x, x, self.identities[x])

    def unit_elem(self, x):
        return self.identities[x]

    def bottom(self, x, y):
        return self.hom[(x, y)].bottom

    def top(self, x, y):
        return self.hom[(x, y)].top

    def compose_elems(self, x, y, z, g, f):
        """g in Q(y,z) after f in Q(x,y)."""
        return self.comp[(x, y, z)][(g, f)]

    def compose(self, g, f):
        if f.dst != g.src:
            raise TypeMismatch(f"cannot compose {g} after {f}")
        return QArrow(f.src, g.dst, self.compose_elems(f.src, f.dst, g.dst, g.elem, f.elem))

    # -- residuation --------------------------------------------------------

    def lift_table(self, x, z, w):
        """lift[f][g]: the largest h in Q(x,z) with f.h <= g, for f in Q(z,w), g in Q(x,w)."""
        key = (x, z, w)
        table = self._lift.get(key)
        if table is None:
            lzw, lxw, lxz = self.hom[(z, w)], self.hom[(x, w)], self.hom[(x, z)]
            table = {}
            for f in lzw:
                for g in lxw:
                    hs = [h for h in lxz
                          if lxw.leq(self.compose_elems(x, z, w, f, h), g)]
                    table[(f, g)] = lxz.join_all(hs)
            self._lift[key] = table
        return table

    def ext_table(self, x, z, w):
        """ext[f][g]: the largest h in Q(z,w) with h.f <= g, for f in Q(x,z), g in Q(x,w)."""
        key = (x, z, w)
        table = self._ext.get(key)
        if table is None:
            lxz, lxw, lzw = self.hom[(x, z)], self.hom[(x, w)], self.hom[(z, w)]
            table = {}
            for f in lxz:
                for g in lxw:
                    hs = [h for h in lzw
                          if lxw.leq(self.compose_elems(x, z, w, h, f), g)]
                    table[(f, g)] = lzw.join_all(hs)
            self._ext[key] = table
        return table

    def lift_elems(self, x, z, w, f, g):
        return self.lift_table(x, z, w)[(f, g)]

    def ext_elems(self, x, z, w, f, g):
        return self.ext_table(x, z, w)[(f, g)]

    def residual(self, side, f, g):
        """Largest h with f.h <= g (side="lift", f: Z->W, g: X->W, h: X->Z)
        or with h.f <= g (side="ext", f: X->Z, g: X->W, h: Z->W)."""
        if side == "lift":
            if f.dst != g.dst:
                raise TypeMismatch("lift needs arrows with a common target")
            return QArrow(g.src, f.src, self.lift_elems(g.src, f.src, f.dst, f.elem, g.elem))
        if side == "ext":
            if f.src != g.src:
                raise TypeMismatch("ext needs arrows with a common source")
            return QArrow(f.dst, g.dst, self.ext_elems(f.src, f.dst, g.dst, f.elem, g.elem))
        raise TypeMismatch(f"unknown residual side {side!r}")

    # -- validation ---------------------------------------------------------

    def validate(self):
        """Return every violated axiom instance; empty list means valid."""
        report = []
        for x, y in product(self.objects, repeat=2):
            lxy = self.hom[(x, y)]
            for f in lxy:
                left = self.compose_elems(x, y, y, self.identities[y], f)
                if left != f:
                    report.append(f"unit law: 1_{y}.{f} = {left} != {f} in Q({x},{y})")
                right = self.compose_elems(x, x, y, f, self.identities[x])
                if right != f:
                    report.append(f"unit law: {f}.1_{x} = {right} != {f} in Q({x},{y})")
        for x, y, z, w in product(self.objects, repeat=4):
            for f in self.hom[(x, y)]:
                for g in self.hom[(y, z)]:
                    for h in self.hom[(z, w)]:
                        a = self.compose_elems(x, y, w, self.compose_elems(y, z, w, h, g), f)
                        b = self.compose_elems(x, z, w, h, self.compose_elems(x, y, z, g, f))
                        if a != b:
                            report.append(
                                f"associativity: ({h}.{g}).{f} = {a} != {b} at ({x},{y},{z},{w})")
        for x, y, z in product(self.objects, repeat=3):
            lxy, lyz, lxz = self.hom[(x, y)], self.hom[(y, z)], self.hom[(x, z)]
            for g in lyz:
                got = self.compose_elems(x, y, z, g, lxy.bottom)
                if got != lxz.bottom:
                    report.append(f"join preservation: {g}.bottom = {got} at ({x},{y},{z})")
                for f1 in lxy:
                    for f2 in lxy:
                        a = self.compose_elems(x, y, z, g, lxy.join(f1, f2))
                        b = lxz.join(self.compose_elems(x, y, z, g, f1),
                                     self.compose_elems(x, y, z, g, f2))
                        if a != b:
                            report.append(
                                f"join preservation: {g}.({f1} v {f2}) = {a} != {b} at ({x},{y},{z})")
            for f in lxy:
                got = self.compose_elems(x, y, z, lyz.bottom, f)
                if got != lxz.bottom:
                    report.append(f"join preservation: bottom.{f} = {got} at ({x},{y},{z})")
                for g1 in lyz:
                    for g2 in lyz:
                        a = self.compose_elems(x, y, z, lyz.join(g1, g2), f)
                        b = lxz.join(self.compose_elems(x, y, z, g1, f),
                                     self.compose_elems(x, y, z, g2, f))
                        if a != b:
                            report.append(
                                f"join preservation: ({g1} v {g2}).{f} = {a} != {b} at ({x},{y},{z})")
        return report

    def opposite(self):
        """Same objects, hom(x,y) = old hom(y,x), composition reversed."""
        hom = {(x, y): self.hom[(y, x)] for x in self.objects for y in self.objects}
        comp = {}
        for x, y, z in product(self.objects, repeat=3):
            comp[(x, y, z)] = {
                (g, f): self.comp[(z, y, x)][(f, g)]
                for g in hom[(y, z)] for f in hom[(x, y)]}
        return Quantaloid(self.objects, hom, comp, self.identities,
                          name=f"op({self.name})" if self.name else "op")

    def __eq__(self, other):
        if not isinstance(other, Quantaloid):
            return NotImplemented
        return (self.objects == other.objects and self.hom == other.hom
                and self.comp == other.comp and self.identities == other.identities)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Quantaloid{tag} {len(self.objects)} objects>"


def validate_quantaloid(q):
    return q.validate()


def q_compose(q, g, f):
    return q.compose(g, f)


def q_residual(q, side, f, g):
    return q.residual(side, f, g)


# -- builders ---------------------------------------------------------------

def _boolean():
    lat = FiniteLattice(("0", "1"), (("0", "1"),), name="2")
    comp = {("*", "*", "*"): {(g, f): lat.meet(g, f) for g in lat for f in lat}}
    return Quantaloid(("*",), {("*", "*"): lat}, comp, {"*": "1"}, name="boolean")


def _chain_min(n=None, labels=None):
    if labels is None:
        if not isinstance(n, int) or n < 1:
            raise MalformedParams("chain_min needs a positive integer length")
        labels = tuple(str(i) for i in range(n))
    labels = tuple(labels)
    lat = FiniteLattice.chain(labels, name=f"chain{len(labels)}")
    comp = {("*", "*", "*"): {(g, f): g if lat.leq(g, f) else f
                              for g in labels for f in labels}}
    return Quantaloid(("*",), {("*", "*"): lat}, comp, {"*": lat.top},
                      name=f"chain_min({len(labels)})")


def _endo_map_id(values):
    return "[" + ",".join(values) + "]"


def _endo(lattice):
    """One object; arrows are the join-preserving self-maps of the lattice."""
    if not isinstance(lattice, FiniteLattice):
        raise MalformedParams("endo needs a FiniteLattice parameter")
    base = lattice.elements
    maps = []
    for values in product(base, repeat=len(base)):
        f = dict(zip(base, values))
        if f[lattice.bottom] != lattice.bottom:
            continue
        if any(f[lattice.join(a, b)] != lattice.join(f[a], f[b])
               for a in base for b in base):
            continue
        maps.append(f)
    ids = [_endo_map_id([f[e] for e in base]) for f in maps]
    by_id = dict(zip(ids, maps))
    pairs = [(a, b) for a in ids for b in ids
             if all(lattice.leq(by_id[a][e], by_id[b][e]) for e in base)]
    lat = FiniteLattice(ids, pairs, name=f"endo({lattice.name or len(base)})")
    comp_table = {}
    for gid in ids:
        for fid in ids:
            g, f = by_id[gid], by_id[fid]
            comp_table[(gid, fid)] = _endo_map_id([g[f[e]] for e in base])
    unit = _endo_map_id(list(base))
    return Quantaloid(("*",), {("*", "*"): lat}, {("*", "*", "*"): comp_table},
                      {"*": unit}, name="endo")


def _subset_id(s):
    return "{" + ",".join(sorted(s)) + "}"


def _powerset_monoid(elements, unit, table):
    elements = tuple(elements)
    mult = {}
    for a in elements:
        for b in elements:
            c = table.get((a, b)) if isinstance(table, dict) else None
            if c is None or c not in elements:
                raise MalformedParams(f"monoid table incomplete at ({a!r},{b!r})")
            mult[(a, b)] = c
    if unit not in elements:
        raise MalformedParams("monoid unit is not an element")
    for a in elements:
        if mult[(unit, a)] != a or mult[(a, unit)] != a:
            raise MalformedParams(f"monoid unit law fails at {a!r}")
    for a in elements:
        for b in elements:
            for c in elements:
                if mult[(mult[(a, b)], c)] != mult[(a, mult[(b, c)])]:
                    raise MalformedParams(f"monoid not associative at ({a!r},{b!r},{c!r})")

    subsets = []
    for mask in range(1 << len(elements)):
        subsets.append(frozenset(e for i, e in enumerate(elements) if mask >> i & 1))
    subsets.sort(key=lambda s: (len(s), sorted(s)))
    ids = [_subset_id(s) for s in subsets]
    by_id = dict(zip(ids, subsets))
    pairs = [(a, b) for a in ids for b in ids if by_id[a] <= by_id[b]]
    lat = FiniteLattice(ids, pairs, name="powerset")
    comp_table = {}
    for gid in ids:
        for fid in ids:
            prod_set = frozenset(mult[(g, f)] for g in by_id[gid] for f in by_id[fid])
            comp_table[(gid, fid)] = _subset_id(prod_set)
    return Quantaloid(("*",), {("*", "*"): lat}, {("*", "*", "*"): comp_table},
                      {"*": _subset_id(frozenset((unit,)))}, name="powerset_monoid")


_BUILDERS = {
    "boolean": _boolean,
    "chain_min": _chain_min,
    "endo": _endo,
    "powerset_monoid": _powerset_monoid,
    "opposite": lambda q: q.opposite(),
}


def make_builtin(kind, **params):
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise MalformedParams(f"unknown builder kind {kind!r}")
    q = builder(**params)
    report = q.validate()
    if report:
        raise MalformedParams(f"builder {kind!r} produced an invalid quantaloid: {report[0]}")
    return q
