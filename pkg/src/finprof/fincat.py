"""Finite categories as explicit composition tables.

Objects are the indices ``0..n-1`` and morphisms carry explicit ids
``0..m-1``.  Composition is stored densely so lookup is O(1); everything is
immutable after validation and all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from finprof import _kern


class CategoryLawError(ValueError):
    """A categorical law failed; carries a minimal witness."""


class IllTypedComposite(CategoryLawError):
    def __init__(self, g, f, detail=""):
        self.witness = (g, f)
        super().__init__(f"ill-typed composite ({g} after {f}) {detail}".rstrip())


class IdentityLaw(CategoryLawError):
    def __init__(self, f, detail=""):
        self.witness = f
        super().__init__(f"identity law fails at morphism {f} {detail}".rstrip())


class NonAssociative(CategoryLawError):
    def __init__(self, f, g, h):
        self.witness = (f, g, h)
        super().__init__(f"associativity fails on triple (f={f}, g={g}, h={h})")


class FunctorLaw(CategoryLawError):
    pass


class NaturalityLaw(CategoryLawError):
    pass


class NoColimit(CategoryLawError):
    def __init__(self, detail=""):
        super().__init__(f"diagram has no colimit {detail}".rstrip())


class NoInitial(NoColimit):
    pass


class FinCat:
    """A finite category; use :func:`validate_category` to build one."""

    __slots__ = ("name", "n_objects", "src", "tgt", "identity", "comp", "homs", "hom_pos")

    def __init__(self, n_objects, src, tgt, identity, comp, name=""):
        self.name = name
        self.n_objects = n_objects
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identity = tuple(identity)
        self.comp = tuple(tuple(row) for row in comp)
        homs = [[[] for _ in range(n_objects)] for _ in range(n_objects)]
        for m in range(len(self.src)):
            homs[self.src[m]][self.tgt[m]].append(m)
        self.homs = tuple(tuple(tuple(cell) for cell in row) for row in homs)
        pos = [0] * len(self.src)
        for x in range(n_objects):
            for y in range(n_objects):
                for i, m in enumerate(self.homs[x][y]):
                    pos[m] = i
        self.hom_pos = tuple(pos)

    @property
    def n_morphisms(self):
        return len(self.src)

    def objects(self):
        return range(self.n_objects)

    def morphisms(self):
        return range(len(self.src))

    def hom(self, x, y):
        return self.homs[x][y]

    def id(self, x):
        return self.identity[x]

    def compose(self, g, f):
        """g after f; raises IllTypedComposite when tgt(f) != src(g)."""
        if self.tgt[f] != self.src[g]:
            raise IllTypedComposite(g, f)
        return self.comp[g][f]

    def is_identity(self, m):
        return self.identity[self.src[m]] == m

    def is_iso(self, m):
        x, y = self.src[m], self.tgt[m]
        for h in self.homs[y][x]:
            if self.comp[h][m] == self.identity[x] and self.comp[m][h] == self.identity[y]:
                return True
        return False

    def _key(self):
        return (self.n_objects, self.src, self.tgt, self.identity, self.comp)

    def __eq__(self, other):
        return isinstance(other, FinCat) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = self.name or "FinCat"
        return f"<{label}: {self.n_objects} objects, {self.n_morphisms} morphisms>"


def validate_category(n_objects, src, tgt, identity, comp, name=""):
    """Check the category laws on raw table data and return a FinCat.

    ``comp`` may be a dense ``m x m`` table (``-1``/``None`` off the
    composable pairs) or a ``{(g, f): gf}`` mapping.  The first violated law
    is raised with its witness.
    """
    src = list(src)
    tgt = list(tgt)
    identity = list(identity)
    n_mor = len(src)
    if len(tgt) != n_mor:
        raise CategoryLawError("src/tgt length mismatch")
    if len(identity) != n_objects:
        raise CategoryLawError("one identity required per object")
    for m in range(n_mor):
        if not (0 <= src[m] < n_objects and 0 <= tgt[m] < n_objects):
            raise CategoryLawError(f"morphism {m} has out-of-range endpoints")
    for x in range(n_objects):
        e = identity[x]
        if not (0 <= e < n_mor) or src[e] != x or tgt[e] != x:
            raise IdentityLaw(e, f"(declared identity of object {x})")

    if isinstance(comp, dict):
        table = [[-1] * n_mor for _ in range(n_mor)]
        for (g, f), gf in comp.items():
            table[g][f] = gf
    else:
        table = [[(-1 if c is None else c) for c in row] for row in comp]

    for g in range(n_mor):
        for f in range(n_mor):
            gf = table[g][f]
            if tgt[f] != src[g]:
                if gf != -1:
                    raise IllTypedComposite(g, f, "(entry present on non-composable pair)")
                continue
            if gf == -1:
                raise IllTypedComposite(g, f, "(missing entry on composable pair)")
            if not (0 <= gf < n_mor):
                raise IllTypedComposite(g, f, "(entry is not a morphism)")
            if src[gf] != src[f] or tgt[gf] != tgt[g]:
                raise IllTypedComposite(g, f, "(composite has wrong endpoints)")

    for f in range(n_mor):
        if table[identity[tgt[f]]][f] != f or table[f][identity[src[f]]] != f:
            raise IdentityLaw(f)

    for f in range(n_mor):
        for g in range(n_mor):
            if tgt[f] != src[g]:
                continue
            gf = table[g][f]
            for h in range(n_mor):
                if tgt[g] != src[h]:
                    continue
                if table[h][gf] != table[table[h][g]][f]:
                    raise NonAssociative(f, g, h)

    return FinCat(n_objects, src, tgt, identity, table, name)


def opposite(C):
    """Reverse all morphisms; an involution on validated categories."""
    n_mor = C.n_morphisms
    comp = [[-1] * n_mor for _ in range(n_mor)]
    for g in range(n_mor):
        for f in range(n_mor):
            if C.src[f] == C.tgt[g]:
                comp[g][f] = C.comp[f][g]
    name = C.name[:-3] if C.name.endswith("^op") else (C.name + "^op" if C.name else "")
    return FinCat(C.n_objects, C.tgt, C.src, C.identity, comp, name)


# -- stock shapes ------------------------------------------------------------

def discrete_category(n, name=""):
    return FinCat(n, range(n), range(n), range(n),
                  [[i if i == j else -1 for j in range(n)] for i in range(n)],
                  name or f"discrete{n}")


def terminal_category():
    return discrete_category(1, "1")


def empty_category():
    return FinCat(0, (), (), (), (), "0")


def poset_category(le, name=""):
    """Category of a poset given by a reflexive `le` matrix (le[x][y] = x<=y)."""
    n = len(le)
    for x in range(n):
        if not le[x][x]:
            raise CategoryLawError(f"le not reflexive at {x}")
        for y in range(n):
            if le[x][y] and le[y][x] and x != y:
                raise CategoryLawError(f"le not antisymmetric on ({x},{y})")
            for z in range(n):
                if le[x][y] and le[y][z] and not le[x][z]:
                    raise CategoryLawError(f"le not transitive on ({x},{y},{z})")
    mors = [(x, y) for x in range(n) for y in range(n) if le[x][y]]
    index = {p: i for i, p in enumerate(mors)}
    src = [p[0] for p in mors]
    tgt = [p[1] for p in mors]
    identity = [index[(x, x)] for x in range(n)]
    m = len(mors)
    comp = [[-1] * m for _ in range(m)]
    for g, (gy, gz) in enumerate(mors):
        for f, (fx, fy) in enumerate(mors):
            if fy == gy:
                comp[g][f] = index[(fx, gz)]
    return FinCat(n, src, tgt, identity, comp, name)


def chain_category(n, name=""):
    return poset_category([[1 if x <= y else 0 for y in range(n)] for x in range(n)],
                          name or f"chain{n}")


def walking_arrow():
    return chain_category(2, "arrow")


def span_shape():
    """Objects a,b,c with arrows a -> b and a -> c."""
    le = [[1, 1, 1], [0, 1, 0], [0, 0, 1]]
    return poset_category(le, "span")


def cospan_shape():
    """Objects a,b,c with arrows a -> c and b -> c."""
    le = [[1, 0, 1], [0, 1, 1], [0, 0, 1]]
    return poset_category(le, "cospan")


def boolean_square():
    """The lattice {bot, a, b, top}; also the commutative-square poset."""
    le = [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]]
    return poset_category(le, "boolean_square")


def is_thin(C):
    return all(len(C.homs[x][y]) <= 1 for x in C.objects() for y in C.objects())


def poset_le(C):
    """The `le` matrix of a thin skeletal category; None when C is not one."""
    if not is_thin(C):
        return None
    n = C.n_objects
    le = [[1 if C.homs[x][y] else 0 for y in range(n)] for x in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and le[x][y] and le[y][x]:
                return None
    return le


def poset_join(le, xs):
    """Least upper bound of ``xs``, or None when the poset lacks one."""
    n = len(le)
    ubs = [m for m in range(n) if all(le[x][m] for x in xs)]
    for m in ubs:
        if all(le[m][u] for u in ubs):
            return m
    return None


def poset_meet(le, xs):
    n = len(le)
    lbs = [m for m in range(n) if all(le[m][x] for x in xs)]
    for m in lbs:
        if all(le[l][m] for l in lbs):
            return m
    return None


# -- functors and transformations -------------------------------------------

class FinFunctor:
    __slots__ = ("dom", "cod", "obj_map", "mor_map", "name")

    def __init__(self, dom, cod, obj_map, mor_map, name=""):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self.name = name

    def ob(self, x):
        return self.obj_map[x]

    def mor(self, m):
        return self.mor_map[m]

    def _key(self):
        return (self.dom, self.cod, self.obj_map, self.mor_map)

    def __eq__(self, other):
        return isinstance(other, FinFunctor) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<FinFunctor {self.name or ''} {self.dom!r} -> {self.cod!r}>"


#: A diagram is just a functor out of its shape.
Diagram = FinFunctor


def validate_functor(dom, cod, obj_map, mor_map, name=""):
    obj_map = list(obj_map)
    mor_map = list(mor_map)
    if len(obj_map) != dom.n_objects or len(mor_map) != dom.n_morphisms:
        raise FunctorLaw("functor data has wrong length")
    for x, fx in enumerate(obj_map):
        if not (0 <= fx < cod.n_objects):
            raise FunctorLaw(f"object {x} mapped out of range")
    for m, fm in enumerate(mor_map):
        if not (0 <= fm < cod.n_morphisms):
            raise FunctorLaw(f"morphism {m} mapped out of range")
        if cod.src[fm] != obj_map[dom.src[m]] or cod.tgt[fm] != obj_map[dom.tgt[m]]:
            raise FunctorLaw(f"morphism {m}: image does not respect src/tgt")
    for x in dom.objects():
        if mor_map[dom.id(x)] != cod.id(obj_map[x]):
            raise FunctorLaw(f"identity of object {x} not preserved")
    for f in dom.morphisms():
        for g in dom.morphisms():
            if dom.tgt[f] != dom.src[g]:
                continue
            if mor_map[dom.comp[g][f]] != cod.comp[mor_map[g]][mor_map[f]]:
                raise FunctorLaw(f"composition not preserved on (g={g}, f={f})")
    return FinFunctor(dom, cod, obj_map, mor_map, name)


def identity_functor(C):
    return FinFunctor(C, C, range(C.n_objects), range(C.n_morphisms), "id")


def compose_functors(g, f):
    """g after f."""
    if f.cod != g.dom:
        raise FunctorLaw("functors not composable")
    return FinFunctor(f.dom, g.cod,
                      [g.obj_map[x] for x in f.obj_map],
                      [g.mor_map[m] for m in f.mor_map],
                      name=f"{g.name}.{f.name}" if g.name and f.name else "")


def functor_between_posets(dom, cod, obj_map, name=""):
    """Build the unique functor of a monotone object map between posets."""
    le = poset_le(cod)
    mor_map = []
    for m in dom.morphisms():
        x, y = obj_map[dom.src[m]], obj_map[dom.tgt[m]]
        if not le[x][y]:
            raise FunctorLaw(f"object map not monotone on morphism {m}")
        mor_map.append(cod.homs[x][y][0])
    return FinFunctor(dom, cod, obj_map, mor_map, name)


class NatTransf:
    __slots__ = ("src", "tgt", "components")

    def __init__(self, src, tgt, components):
        self.src = src
        self.tgt = tgt
        self.components = tuple(components)

    def at(self, x):
        return self.components[x]

    def __eq__(self, other):
        return (isinstance(other, NatTransf) and self.src == other.src
                and self.tgt == other.tgt and self.components == other.components)

    def __hash__(self):
        return hash((self.src, self.tgt, self.components))


def validate_nat_transf(src, tgt, components):
    if src.dom != tgt.dom or src.cod != tgt.cod:
        raise NaturalityLaw("functors not parallel")
    A, C = src.dom, src.cod
    components = list(components)
    if len(components) != A.n_objects:
        raise NaturalityLaw("one component required per object")
    for x in A.objects():
        c = components[x]
        if C.src[c] != src.obj_map[x] or C.tgt[c] != tgt.obj_map[x]:
            raise NaturalityLaw(f"component at {x} has wrong endpoints")
    for m in A.morphisms():
        x, y = A.src[m], A.tgt[m]
        if C.comp[components[y]][src.mor_map[m]] != C.comp[tgt.mor_map[m]][components[x]]:
            raise NaturalityLaw(f"naturality square fails at morphism {m}")
    return NatTransf(src, tgt, components)


def enumerate_nat_transfs(src, tgt, cap=None):
    """All natural transformations src => tgt, in lexicographic order."""
    A, C = src.dom, src.cod
    out = []
    comps = [None] * A.n_objects

    def extend(x):
        if cap is not None and len(out) >= cap:
            return
        if x == A.n_objects:
            out.append(NatTransf(src, tgt, list(comps)))
            return
        for c in C.homs[src.obj_map[x]][tgt.obj_map[x]]:
            comps[x] = c
            ok = True
            for m in A.morphisms():
                mx, my = A.src[m], A.tgt[m]
                if mx > x or my > x:
                    continue
                if C.comp[comps[my]][src.mor_map[m]] != C.comp[tgt.mor_map[m]][comps[mx]]:
                    ok = False
                    break
            if ok:
                extend(x + 1)
        comps[x] = None

    extend(0)
    return out


# -- comma categories, connectivity, colimits --------------------------------

@dataclass(frozen=True)
class CommaCategory:
    cat: FinCat
    proj: FinFunctor
    objects: tuple  # pairs (a, alpha: j a -> b)


def comma_category(j, b):
    """The comma category j/b together with its projection to dom(j)."""
    A, B = j.dom, j.cod
    objs = [(a, alpha) for a in A.objects() for alpha in B.homs[j.obj_map[a]][b]]
    obj_index = {p: i for i, p in enumerate(objs)}
    mors = []
    for i, (a, alpha) in enumerate(objs):
        for a2 in A.objects():
            for f in A.homs[a][a2]:
                for alpha2 in B.homs[j.obj_map[a2]][b]:
                    if B.comp[alpha2][j.mor_map[f]] == alpha:
                        mors.append((i, obj_index[(a2, alpha2)], f))
    mor_index = {t: k for k, t in enumerate(mors)}
    src = [t[0] for t in mors]
    tgt = [t[1] for t in mors]
    identity = [mor_index[(i, i, A.id(a))] for i, (a, _) in enumerate(objs)]
    m = len(mors)
    comp = [[-1] * m for _ in range(m)]
    for gk, (gi, gj, g) in enumerate(mors):
        for fk, (fi, fj, f) in enumerate(mors):
            if fj == gi:
                comp[gk][fk] = mor_index[(fi, gj, A.comp[g][f])]
    cat = FinCat(len(objs), src, tgt, identity, comp, name=f"{j.name or 'j'}/{b}")
    proj = FinFunctor(cat, A, [a for a, _ in objs], [t[2] for t in mors])
    return CommaCategory(cat, proj, tuple(objs))


def is_connected(C):
    """Nonempty and one component of the underlying undirected graph."""
    if C.n_objects == 0:
        return False
    pairs = []
    for m in C.morphisms():
        pairs.append(C.src[m])
        pairs.append(C.tgt[m])
    return _kern.component_count(C.n_objects, pairs) == 1


@dataclass(frozen=True)
class Colimit:
    apex: int
    legs: tuple  # leg per shape object, a morphism of the target


def _enumerate_cocones(d):
    shape, M = d.dom, d.cod
    n = shape.n_objects
    out = []
    for apex in M.objects():
        legs = [None] * n

        def extend(x):
            if x == n:
                out.append((apex, tuple(legs)))
                return
            for leg in M.homs[d.obj_map[x]][apex]:
                legs[x] = leg
                ok = True
                for m in shape.morphisms():
                    sx, sy = shape.src[m], shape.tgt[m]
                    if sx > x or sy > x:
                        continue
                    if M.comp[legs[sy]][d.mor_map[m]] != legs[sx]:
                        ok = False
                        break
                if ok:
                    extend(x + 1)
            legs[x] = None

        extend(0)
    return out


def colimit(d):
    """Brute-force colimit of a finite diagram, verified universal.

    Thin skeletal targets take the join fast path; ties in the general
    search are broken by lowest apex index (then lexicographic legs).
    """
    M = d.cod
    le = poset_le(M)
    if le is not None:
        if d.dom.n_objects == 0:
            apex = poset_join(le, [])
            if apex is None:
                raise NoInitial("(no bottom element)")
            return Colimit(apex, ())
        apex = poset_join(le, list(d.obj_map))
        if apex is None:
            raise NoColimit("(no least upper bound)")
        return Colimit(apex, tuple(M.homs[x][apex][0] for x in d.obj_map))

    cocones = _enumerate_cocones(d)
    for apex, legs in cocones:
        universal = True
        for apex2, legs2 in cocones:
            hits = 0
            for h in M.homs[apex][apex2]:
                if all(M.comp[h][legs[x]] == legs2[x] for x in d.dom.objects()):
                    hits += 1
                    if hits > 1:
                        break
            if hits != 1:
                universal = False
                break
        if universal:
            return Colimit(apex, legs)
    raise NoColimit()


# -- set-valued functors ------------------------------------------------------

class SetFunctor:
    """A functor into finite sets: a size per object, a table per morphism."""

    __slots__ = ("cat", "sizes", "maps", "name")

    def __init__(self, cat, sizes, maps, name=""):
        self.cat = cat
        self.sizes = tuple(sizes)
        self.maps = tuple(tuple(t) for t in maps)
        self.name = name

    def size(self, x):
        return self.sizes[x]

    def ap(self, m, e):
        return self.maps[m][e]

    def _key(self):
        return (self.cat, self.sizes, self.maps)

    def __eq__(self, other):
        return isinstance(other, SetFunctor) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<SetFunctor {self.name or ''} sizes={self.sizes}>"


class SetFunctorLaw(CategoryLawError):
    pass


def validate_set_functor(cat, sizes, maps, name=""):
    sizes = list(sizes)
    maps = [list(t) for t in maps]
    if len(sizes) != cat.n_objects or len(maps) != cat.n_morphisms:
        raise SetFunctorLaw("data has wrong length")
    for m in cat.morphisms():
        if len(maps[m]) != sizes[cat.src[m]]:
            raise SetFunctorLaw(f"table of morphism {m} has wrong domain size")
        for v in maps[m]:
            if not (0 <= v < sizes[cat.tgt[m]]):
                raise SetFunctorLaw(f"table of morphism {m} maps out of range")
    for x in cat.objects():
        if maps[cat.id(x)] != list(range(sizes[x])):
            raise SetFunctorLaw(f"identity of object {x} does not act as identity")
    for f in cat.morphisms():
        for g in cat.morphisms():
            if cat.tgt[f] != cat.src[g]:
                continue
            gf = cat.comp[g][f]
            if any(maps[gf][e] != maps[g][maps[f][e]] for e in range(sizes[cat.src[f]])):
                raise SetFunctorLaw(f"functoriality fails on (g={g}, f={f})")
    return SetFunctor(cat, sizes, maps, name)


def constant_set_functor(cat, size, name=""):
    return SetFunctor(cat, [size] * cat.n_objects,
                      [tuple(range(size)) for _ in cat.morphisms()], name)
