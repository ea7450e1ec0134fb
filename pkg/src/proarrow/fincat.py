"""Finite strict categories with explicit composition tables.

Everything downstream (profunctors, double categories, fibrations, Kan
extensions, internal categories) is built on the values defined here:
categories, functors, natural transformations, comma categories, finite-set
diagrams and their colimits, connectivity, and finality checks.

Conventions fixed once:

* Objects and morphisms are string ids carrying the total order of their
  defining tuples; canonical representatives are always the least element.
* ``compose[(g, f)]`` is ``g after f`` and is defined exactly when
  ``dst(f) == src(g)``.
* All values are immutable after construction; operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .unionfind import UnionFind


class FinCatError(Exception):
    """Raised on malformed categorical data or violated preconditions."""


# ---------------------------------------------------------------------------
# categories


@dataclass(eq=False)
class FinCategory:
    """A finite strict category given by an explicit composition table."""

    name: str
    objects: tuple
    morphisms: tuple          # morphism ids, canonical order
    src: dict                 # mor -> obj
    dst: dict                 # mor -> obj
    identity: dict            # obj -> mor
    comp: dict                # (g, f) -> g∘f, for dst(f) == src(g)
    _obj_index: dict = field(default_factory=dict, repr=False)
    _mor_index: dict = field(default_factory=dict, repr=False)
    _hom: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self.morphisms = tuple(self.morphisms)
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._mor_index = {m: i for i, m in enumerate(self.morphisms)}
        self._hom = {}
        for m in self.morphisms:
            self._hom.setdefault((self.src[m], self.dst[m]), []).append(m)

    # -- basic structure ----------------------------------------------------

    def hom(self, a, b):
        return tuple(self._hom.get((a, b), ()))

    def is_identity(self, m):
        return self.identity.get(self.src[m]) == m and self.src[m] == self.dst[m]

    def compose(self, g, f):
        """g∘f; requires dst(f) == src(g)."""
        if self.dst[f] != self.src[g]:
            raise FinCatError(
                f"{self.name}: non-composable pair g={g}, f={f}")
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        return self.comp[(g, f)]

    def compose_path(self, *mors):
        """Compose a path listed source-to-target order: compose_path(f, g) = g∘f."""
        out = mors[0]
        for m in mors[1:]:
            out = self.compose(m, out)
        return out

    def obj_index(self, o):
        return self._obj_index[o]

    def mor_index(self, m):
        return self._mor_index[m]

    def is_iso_mor(self, m):
        a, b = self.src[m], self.dst[m]
        for n in self.hom(b, a):
            if self.compose(n, m) == self.identity[a] and \
               self.compose(m, n) == self.identity[b]:
                return True
        return False

    # -- derived categories ---------------------------------------------------

    def op(self):
        """Materialized opposite category (same ids, swapped tables)."""
        comp = {}
        for (g, f), h in self.comp.items():
            comp[(f, g)] = h
        return FinCategory(
            name=f"{self.name}^op",
            objects=self.objects,
            morphisms=self.morphisms,
            src=dict(self.dst),
            dst=dict(self.src),
            identity=dict(self.identity),
            comp=comp,
        )

    def product(self, other):
        """Product category; objects/morphisms are '(a,b)' encoded pairs."""
        objects = tuple(_pair(a, b) for a in self.objects for b in other.objects)
        morphisms = []
        src, dst = {}, {}
        for m in self.morphisms:
            for n in other.morphisms:
                mn = _pair(m, n)
                morphisms.append(mn)
                src[mn] = _pair(self.src[m], other.src[n])
                dst[mn] = _pair(self.dst[m], other.dst[n])
        identity = {
            _pair(a, b): _pair(self.identity[a], other.identity[b])
            for a in self.objects for b in other.objects
        }
        comp = {}
        for m2 in self.morphisms:
            for m1 in self.morphisms:
                if self.dst[m1] != self.src[m2]:
                    continue
                m21 = self.compose(m2, m1)
                for n2 in other.morphisms:
                    for n1 in other.morphisms:
                        if other.dst[n1] != other.src[n2]:
                            continue
                        comp[(_pair(m2, n2), _pair(m1, n1))] = \
                            _pair(m21, other.compose(n2, n1))
        return FinCategory(f"({self.name}x{other.name})", objects,
                           tuple(morphisms), src, dst, identity, comp)

    def full_subcategory(self, objs, name=None):
        objs = tuple(o for o in self.objects if o in set(objs))
        mors = tuple(m for m in self.morphisms
                     if self.src[m] in objs and self.dst[m] in objs)
        comp = {(g, f): h for (g, f), h in self.comp.items()
                if g in set(mors) and f in set(mors)}
        return FinCategory(name or f"{self.name}|", objs, mors,
                           {m: self.src[m] for m in mors},
                           {m: self.dst[m] for m in mors},
                           {o: self.identity[o] for o in objs}, comp)


def _pair(a, b):
    return f"({a},{b})"


def category_from_tables(name, objects, morphisms, identity, comp):
    """Assemble a FinCategory from (id, src, dst) triples, filling in the
    composition entries for identities if omitted."""
    mors = tuple(m[0] for m in morphisms)
    src = {m[0]: m[1] for m in morphisms}
    dst = {m[0]: m[2] for m in morphisms}
    comp = dict(comp)
    for m in mors:
        comp.setdefault((identity[dst[m]], m), m)
        comp.setdefault((m, identity[src[m]]), m)
    return FinCategory(name, tuple(objects), mors, src, dst, dict(identity), comp)


def check_category(c: FinCategory):
    """Exhaustive axiom scan; returns the list of violations (empty = valid).

    Every violated axiom shows up by name: identities, unit laws, table
    closure and framing, then associativity (only checked once the table
    itself is well-formed).
    """
    problems = []
    mor_set = set(c.morphisms)
    for o in c.objects:
        i = c.identity.get(o)
        if i is None or i not in mor_set:
            problems.append(f"missing identity for object {o}")
        elif c.src[i] != o or c.dst[i] != o:
            problems.append(f"identity {i} of {o} is not an endomorphism of {o}")
    for m in c.morphisms:
        if c.src.get(m) not in c.objects or c.dst.get(m) not in c.objects:
            problems.append(f"morphism {m} has src/dst outside the object set")
    if problems:
        return problems
    # unit laws (read off the raw table so broken entries are named)
    for m in c.morphisms:
        if c.comp.get((c.identity[c.dst[m]], m), m) != m:
            problems.append(f"unit law id∘{m} != {m}")
        if c.comp.get((m, c.identity[c.src[m]]), m) != m:
            problems.append(f"unit law {m}∘id != {m}")
    # closure and framing of the table
    framed = True
    for g in c.morphisms:
        for f in c.morphisms:
            composable = c.dst[f] == c.src[g]
            has = (g, f) in c.comp
            if composable and not has and not (c.is_identity(f) or c.is_identity(g)):
                problems.append(f"compose undefined on composable pair ({g},{f})")
                framed = False
            if has and not composable:
                problems.append(f"compose defined on non-composable pair ({g},{f})")
            if has and composable:
                h = c.comp[(g, f)]
                if h not in mor_set:
                    problems.append(f"compose({g},{f}) = {h} not a morphism")
                    framed = False
                elif c.src[h] != c.src[f] or c.dst[h] != c.dst[g]:
                    problems.append(f"compose({g},{f}) = {h} has a wrong frame")
    if not framed:
        return problems
    # associativity
    for h in c.morphisms:
        for g in c.morphisms:
            if c.dst[g] != c.src[h]:
                continue
            hg = c.compose(h, g)
            for f in c.morphisms:
                if c.dst[f] != c.src[g]:
                    continue
                if c.compose(hg, f) != c.compose(h, c.compose(g, f)):
                    problems.append(
                        f"associativity fails on ({h},{g},{f})")
    return problems


# ---------------------------------------------------------------------------
# functors and natural transformations


@dataclass(eq=False)
class Functor:
    name: str
    source: FinCategory
    target: FinCategory
    obj_map: dict
    mor_map: dict

    def on_obj(self, o):
        return self.obj_map[o]

    def on_mor(self, m):
        return self.mor_map[m]

    def __call__(self, x):
        if x in self.obj_map:
            return self.obj_map[x]
        return self.mor_map[x]

    def compose_with(self, other: "Functor") -> "Functor":
        """self ∘ other (other first)."""
        if other.target is not self.source and other.target != self.source:
            raise FinCatError("functor composition frame mismatch")
        return Functor(
            f"{self.name}∘{other.name}", other.source, self.target,
            {o: self.obj_map[v] for o, v in other.obj_map.items()},
            {m: self.mor_map[v] for m, v in other.mor_map.items()},
        )

    def key(self):
        """Content key; two parallel functors are equal iff keys coincide."""
        return (tuple(sorted(self.obj_map.items())),
                tuple(sorted(self.mor_map.items())))

    def is_faithful(self):
        for a in self.source.objects:
            for b in self.source.objects:
                seen = {}
                for m in self.source.hom(a, b):
                    im = self.mor_map[m]
                    if im in seen:
                        return False
                    seen[im] = m
        return True

    def is_full(self):
        for a in self.source.objects:
            for b in self.source.objects:
                image = {self.mor_map[m] for m in self.source.hom(a, b)}
                for n in self.target.hom(self.obj_map[a], self.obj_map[b]):
                    if n not in image:
                        return False
        return True

    def is_fully_faithful(self):
        return self.is_faithful() and self.is_full()

    def op(self):
        return Functor(f"{self.name}^op", self.source.op(), self.target.op(),
                       dict(self.obj_map), dict(self.mor_map))


def identity_functor(c: FinCategory) -> Functor:
    return Functor(f"id_{c.name}", c, c,
                   {o: o for o in c.objects}, {m: m for m in c.morphisms})


def constant_functor(dom: FinCategory, cod: FinCategory, o) -> Functor:
    return Functor(f"const_{o}", dom, cod,
                   {a: o for a in dom.objects},
                   {m: cod.identity[o] for m in dom.morphisms})


def check_functor(f: Functor):
    problems = []
    for o in f.source.objects:
        if f.obj_map.get(o) not in f.target.objects:
            problems.append(f"object {o} not mapped into target")
    for m in f.source.morphisms:
        im = f.mor_map.get(m)
        if im not in set(f.target.morphisms):
            problems.append(f"morphism {m} not mapped into target")
            continue
        if f.target.src[im] != f.obj_map[f.source.src[m]] or \
           f.target.dst[im] != f.obj_map[f.source.dst[m]]:
            problems.append(f"morphism {m} image has wrong frame")
    if problems:
        return problems
    for o in f.source.objects:
        if f.mor_map[f.source.identity[o]] != f.target.identity[f.obj_map[o]]:
            problems.append(f"identity of {o} not preserved")
    for g in f.source.morphisms:
        for m in f.source.morphisms:
            if f.source.dst[m] != f.source.src[g]:
                continue
            if f.mor_map[f.source.compose(g, m)] != \
               f.target.compose(f.mor_map[g], f.mor_map[m]):
                problems.append(f"composite ({g},{m}) not preserved")
    return problems


@dataclass(eq=False)
class NatTransformation:
    source: Functor
    target: Functor
    components: dict  # obj of source.source -> mor of target category

    def at(self, o):
        return self.components[o]

    def key(self):
        return tuple(sorted(self.components.items()))


def check_nat(n: NatTransformation):
    f, g = n.source, n.target
    problems = []
    if f.source is not g.source or f.target is not g.target:
        return ["source/target functors are not parallel"]
    cat, tgt = f.source, f.target
    for o in cat.objects:
        comp = n.components.get(o)
        if comp is None or comp not in set(tgt.morphisms):
            problems.append(f"missing component at {o}")
            continue
        if tgt.src[comp] != f.obj_map[o] or tgt.dst[comp] != g.obj_map[o]:
            problems.append(f"component at {o} has wrong frame")
    if problems:
        return problems
    for m in cat.morphisms:
        a, b = cat.src[m], cat.dst[m]
        left = tgt.compose(n.components[b], f.mor_map[m])
        right = tgt.compose(g.mor_map[m], n.components[a])
        if left != right:
            problems.append(f"naturality fails at {m}")
    return problems


def enumerate_functors(dom: FinCategory, cod: FinCategory, bound=None):
    """All functors dom -> cod in canonical order.

    bound caps the number of *candidates inspected*; exceeding it raises
    BoundExceeded rather than silently truncating.
    """
    nonid = [m for m in dom.morphisms if not dom.is_identity(m)]
    out = []
    inspected = 0
    for objs in itertools.product(cod.objects, repeat=len(dom.objects)):
        obj_map = dict(zip(dom.objects, objs))
        pools = []
        ok = True
        for m in nonid:
            pool = cod.hom(obj_map[dom.src[m]], obj_map[dom.dst[m]])
            if not pool:
                ok = False
                break
            pools.append(pool)
        if not ok:
            continue
        for choice in itertools.product(*pools):
            inspected += 1
            if bound is not None and inspected > bound:
                raise BoundExceeded(
                    f"functor enumeration bound {bound} exceeded")
            mor_map = dict(zip(nonid, choice))
            for o in dom.objects:
                mor_map[dom.identity[o]] = cod.identity[obj_map[o]]
            if _preserves_composition(dom, cod, mor_map):
                f = Functor(f"F{len(out)}", dom, cod, obj_map, mor_map)
                out.append(f)
    return out


def _preserves_composition(dom, cod, mor_map):
    for (g, f), h in dom.comp.items():
        if cod.compose(mor_map[g], mor_map[f]) != mor_map[h]:
            return False
    return True


def enumerate_nats(f: Functor, g: Functor):
    """All natural transformations f => g in canonical order."""
    cat, tgt = f.source, f.target
    pools = []
    for o in cat.objects:
        pool = tgt.hom(f.obj_map[o], g.obj_map[o])
        if not pool:
            return []
        pools.append(pool)
    out = []
    for choice in itertools.product(*pools):
        n = NatTransformation(f, g, dict(zip(cat.objects, choice)))
        if not check_nat(n):
            out.append(n)
    return out


class BoundExceeded(FinCatError):
    """An enumeration exceeded its explicit size guardrail."""


# ---------------------------------------------------------------------------
# comma categories


@dataclass(eq=False)
class CommaCategory:
    """(f ↓ g) for f : A -> C, g : B -> C, with its two projections.

    Objects are triples (a, b, θ : f(a) -> g(b)); morphisms are pairs
    (u, v) making the evident square commute.
    """

    category: FinCategory
    left: Functor    # (f ↓ g) -> A
    right: Functor   # (f ↓ g) -> B
    theta: dict      # comma object id -> morphism θ of C
    f: Functor
    g: Functor


def comma(f: Functor, g: Functor) -> CommaCategory:
    if f.target is not g.target and f.target != g.target:
        raise FinCatError("comma: functors must share their target")
    cc = f.target
    a_cat, b_cat = f.source, g.source
    objs = []
    data = {}
    for a in a_cat.objects:
        for b in b_cat.objects:
            for t in cc.hom(f.obj_map[a], g.obj_map[b]):
                oid = f"({a},{b},{t})"
                objs.append(oid)
                data[oid] = (a, b, t)
    mors = []
    src, dst = {}, {}
    pair_of = {}
    for o1 in objs:
        a1, b1, t1 = data[o1]
        for o2 in objs:
            a2, b2, t2 = data[o2]
            for u in a_cat.hom(a1, a2):
                fu = f.mor_map[u]
                for v in b_cat.hom(b1, b2):
                    # θ2 ∘ f(u) == g(v) ∘ θ1
                    if cc.compose(t2, fu) != cc.compose(g.mor_map[v], t1):
                        continue
                    mid = f"({u},{v}):{o1}->{o2}"
                    mors.append(mid)
                    src[mid], dst[mid] = o1, o2
                    pair_of[mid] = (u, v)
    identity = {}
    for o in objs:
        a, b, _ = data[o]
        identity[o] = f"({a_cat.identity[a]},{b_cat.identity[b]}):{o}->{o}"
    comp = {}
    by_pair = {(src[m], dst[m], pair_of[m]): m for m in mors}
    for m2 in mors:
        for m1 in mors:
            if dst[m1] != src[m2]:
                continue
            u = a_cat.compose(pair_of[m2][0], pair_of[m1][0])
            v = b_cat.compose(pair_of[m2][1], pair_of[m1][1])
            comp[(m2, m1)] = by_pair[(src[m1], dst[m2], (u, v))]
    cat = FinCategory(f"({f.name}↓{g.name})", tuple(objs), tuple(mors),
                      src, dst, identity, comp)
    left = Functor("pr_left", cat, a_cat,
                   {o: data[o][0] for o in objs},
                   {m: pair_of[m][0] for m in mors})
    right = Functor("pr_right", cat, b_cat,
                    {o: data[o][1] for o in objs},
                    {m: pair_of[m][1] for m in mors})
    return CommaCategory(cat, left, right,
                         {o: data[o][2] for o in objs}, f, g)


def comma_two_cell(cc: CommaCategory) -> NatTransformation:
    """The tautological transformation f∘left => g∘right of a comma."""
    return NatTransformation(cc.f.compose_with(cc.left),
                             cc.g.compose_with(cc.right),
                             dict(cc.theta))


# ---------------------------------------------------------------------------
# connectivity, finality


def connected_components(c: FinCategory):
    """Partition of objects under the zig-zag relation 'a morphism exists'."""
    uf = UnionFind(c.objects)
    for m in c.morphisms:
        uf.union(c.src[m], c.dst[m])
    return uf.classes()


def is_connected_nonempty(c: FinCategory):
    return len(c.objects) > 0 and len(connected_components(c)) == 1


@dataclass
class FinalityReport:
    final: bool
    witness: object  # failing object of the codomain, or None


def is_final(f: Functor) -> FinalityReport:
    """Quillen A criterion: f is final iff every comma (j ↓ f) is nonempty
    and connected."""
    j_cat = f.target
    one = terminal_category()
    for j in j_cat.objects:
        cj = comma(constant_functor(one, j_cat, j), f)
        if not is_connected_nonempty(cj.category):
            return FinalityReport(False, j)
    return FinalityReport(True, None)


def is_initial(f: Functor) -> FinalityReport:
    """Dual of is_final, computed through materialized opposites."""
    return is_final(f.op())


def terminal_category() -> FinCategory:
    return category_from_tables("1", ["*"], [("id_*", "*", "*")],
                                {"*": "id_*"}, {})


def empty_category() -> FinCategory:
    return FinCategory("0", (), (), {}, {}, {}, {})


# ---------------------------------------------------------------------------
# finite sets and their colimits


@dataclass(eq=False)
class FinSetDiagram:
    """A diagram shape -> FinSet: per-object element tuples and per-morphism
    functions, respecting the composition table of the shape."""

    shape: FinCategory
    sets: dict    # obj -> tuple of element ids
    maps: dict    # mor -> dict elem -> elem

    def check(self):
        problems = []
        for o in self.shape.objects:
            if o not in self.sets:
                problems.append(f"missing set at {o}")
        for m in self.shape.morphisms:
            fn = self.maps.get(m)
            if fn is None:
                problems.append(f"missing function at {m}")
                continue
            dom = self.sets[self.shape.src[m]]
            cod = set(self.sets[self.shape.dst[m]])
            if set(fn.keys()) != set(dom) or not set(fn.values()) <= cod:
                problems.append(f"function at {m} has wrong domain/codomain")
        if problems:
            return problems
        for o in self.shape.objects:
            i = self.shape.identity[o]
            if any(self.maps[i][x] != x for x in self.sets[o]):
                problems.append(f"identity at {o} does not act as identity")
        for (g, f), h in self.shape.comp.items():
            for x in self.sets[self.shape.src[f]]:
                if self.maps[g][self.maps[f][x]] != self.maps[h][x]:
                    problems.append(f"functoriality fails at ({g},{f})")
                    break
        return problems


@dataclass
class FinSetColimit:
    elements: tuple            # canonical representatives '(j,x)'
    cocone: dict               # shape obj -> dict elem -> colimit elem
    verified_initial: bool


def colimit_finset(d: FinSetDiagram, verify=True, cocone_bound=200000):
    """Colimit of a FinSet diagram: disjoint union quotiented by the action
    of every shape morphism, via union-find with least representatives.

    With verify=True the result is certified initial by bounded search over
    all cocones into canonical sets of size <= the total disjoint union.
    """
    keys = []
    for j in d.shape.objects:
        for x in d.sets[j]:
            keys.append((j, x))
    uf = UnionFind(keys)
    for m in d.shape.morphisms:
        j, j2 = d.shape.src[m], d.shape.dst[m]
        for x in d.sets[j]:
            uf.union((j, x), (j2, d.maps[m][x]))
    reps = uf.representatives() if keys else {}
    elems = sorted({f"({j},{x})" for (j, x) in reps.values()})
    cocone = {
        j: {x: f"({reps[(j, x)][0]},{reps[(j, x)][1]})" for x in d.sets[j]}
        for j in d.shape.objects
    }
    verified = False
    if verify:
        verified = _verify_initial_cocone(d, elems, cocone, cocone_bound)
        if not verified:
            raise FinCatError("computed colimit failed the initiality check")
    return FinSetColimit(tuple(elems), cocone, verified)


def _verify_initial_cocone(d, elems, cocone, bound):
    # A cocone into K is a family K_j : sets[j] -> K commuting with the maps;
    # initiality: exactly one mediating map from the computed colimit.
    total = sum(len(d.sets[j]) for j in d.shape.objects)
    inspected = 0
    for size in range(0, total + 1):
        target = [f"k{i}" for i in range(size)]
        pools = []
        for j in d.shape.objects:
            fams = [dict(zip(d.sets[j], choice))
                    for choice in itertools.product(target, repeat=len(d.sets[j]))]
            pools.append(fams)
        for family in itertools.product(*pools):
            inspected += 1
            if inspected > bound:
                raise BoundExceeded(f"cocone search bound {bound} exceeded")
            fam = dict(zip(d.shape.objects, family))
            if not _is_cocone(d, fam):
                continue
            mediators = _mediating_maps(d, elems, cocone, fam, target)
            if len(mediators) != 1:
                return False
    return True


def _is_cocone(d, fam):
    for m in d.shape.morphisms:
        j, j2 = d.shape.src[m], d.shape.dst[m]
        for x in d.sets[j]:
            if fam[j][x] != fam[j2][d.maps[m][x]]:
                return False
    return True


def _mediating_maps(d, elems, cocone, fam, target):
    # forced values: u(cocone_j(x)) = fam_j(x); unconstrained elems range free
    forced = {}
    for j in d.shape.objects:
        for x in d.sets[j]:
            e = cocone[j][x]
            if e in forced and forced[e] != fam[j][x]:
                return []
            forced[e] = fam[j][x]
    free = [e for e in elems if e not in forced]
    if not free:
        return [forced]
    out = []
    for choice in itertools.product(target, repeat=len(free)):
        u = dict(forced)
        u.update(zip(free, choice))
        out.append(u)
    return out


def enumerate_finset_diagrams(shape: FinCategory, max_size=2, bound=None):
    """All FinSet diagrams over the shape with value sets of size <= max_size,
    in canonical order.  Elements at object o are 'o.e0', 'o.e1', ...

    bound caps the number of candidate diagrams inspected (BoundExceeded).
    """
    nonid = [m for m in shape.morphisms if not shape.is_identity(m)]
    out = []
    inspected = 0
    for sizes in itertools.product(range(max_size + 1),
                                   repeat=len(shape.objects)):
        sets = {o: tuple(f"{o}.e{i}" for i in range(k))
                for o, k in zip(shape.objects, sizes)}
        pools = []
        ok = True
        for m in nonid:
            dom, cod = sets[shape.src[m]], sets[shape.dst[m]]
            if dom and not cod:
                ok = False
                break
            fns = [dict(zip(dom, choice))
                   for choice in itertools.product(cod, repeat=len(dom))]
            pools.append(fns)
        if not ok:
            continue
        for choice in itertools.product(*pools):
            inspected += 1
            if bound is not None and inspected > bound:
                raise BoundExceeded(
                    f"diagram enumeration bound {bound} exceeded")
            maps = dict(zip(nonid, choice))
            for o in shape.objects:
                maps[shape.identity[o]] = {x: x for x in sets[o]}
            d = FinSetDiagram(shape, sets, maps)
            if not _diagram_functorial(d):
                continue
            out.append(d)
    return out


def _diagram_functorial(d):
    for (g, f), h in d.shape.comp.items():
        for x in d.sets[d.shape.src[f]]:
            if d.maps[g][d.maps[f][x]] != d.maps[h][x]:
                return False
    return True


def restrict_diagram(d: FinSetDiagram, f: Functor) -> FinSetDiagram:
    """Reindex a diagram over f.target along f, giving one over f.source."""
    return FinSetDiagram(
        f.source,
        {i: d.sets[f.obj_map[i]] for i in f.source.objects},
        {m: dict(d.maps[f.mor_map[m]]) for m in f.source.morphisms})


def colimit_comparison(f: Functor, d: FinSetDiagram, verify=False):
    """The canonical map colim(d∘f) -> colim(d) and whether it is bijective.

    Returns (bijective, mapping).  Used to cross-check finality: f is final
    iff this comparison is a bijection for every diagram d over f.target.
    """
    df = restrict_diagram(d, f)
    c1 = colimit_finset(df, verify=verify)
    c2 = colimit_finset(d, verify=verify)
    mapping = {}
    for i in f.source.objects:
        for x in df.sets[i]:
            e = c1.cocone[i][x]
            target = c2.cocone[f.obj_map[i]][x]
            if e in mapping and mapping[e] != target:
                return False, None  # not even well-defined as a function
            mapping[e] = target
    bijective = (len(mapping) == len(c1.elements)
                 and sorted(set(mapping.values())) == sorted(c2.elements)
                 and len(set(mapping.values())) == len(mapping))
    return bijective, mapping


# ---------------------------------------------------------------------------
# functor categories


def fun_category(dom: FinCategory, cod: FinCategory, bound=None):
    """Materialize Fun(dom, cod) as a FinCategory.

    Returns (category, functor_of_obj, nat_of_mor). The bound caps functor
    enumeration; exceeding it raises BoundExceeded.
    """
    functors = enumerate_functors(dom, cod, bound=bound)
    obj_ids = []
    functor_of = {}
    for f in functors:
        oid = _functor_obj_id(f)
        obj_ids.append(oid)
        functor_of[oid] = f
    obj_ids.sort()
    mors = []
    src, dst = {}, {}
    nat_of = {}
    comp_key = {}
    for o1 in obj_ids:
        for o2 in obj_ids:
            for n in enumerate_nats(functor_of[o1], functor_of[o2]):
                mid = f"[{_nat_id(n)}:{o1}->{o2}]"
                mors.append(mid)
                src[mid], dst[mid] = o1, o2
                nat_of[mid] = n
                comp_key[(o1, o2, n.key())] = mid
    identity = {}
    for o in obj_ids:
        f = functor_of[o]
        n = NatTransformation(f, f, {a: cod.identity[f.obj_map[a]]
                                     for a in dom.objects})
        identity[o] = comp_key[(o, o, n.key())]
    comp = {}
    for m2 in mors:
        for m1 in mors:
            if dst[m1] != src[m2]:
                continue
            n1, n2 = nat_of[m1], nat_of[m2]
            n = NatTransformation(
                n1.source, n2.target,
                {a: cod.compose(n2.components[a], n1.components[a])
                 for a in dom.objects})
            comp[(m2, m1)] = comp_key[(src[m1], dst[m2], n.key())]
    cat = FinCategory(f"Fun({dom.name},{cod.name})", tuple(obj_ids),
                      tuple(mors), src, dst, identity, comp)
    return cat, functor_of, nat_of


def _functor_obj_id(f: Functor):
    os = ",".join(f"{o}>{f.obj_map[o]}" for o in f.source.objects)
    ms = ",".join(f"{m}>{f.mor_map[m]}" for m in f.source.morphisms
                  if not f.source.is_identity(m))
    return f"[{os}|{ms}]"


def _nat_id(n: NatTransformation):
    return ",".join(f"{o}>{m}" for o, m in sorted(n.components.items()))


# ---------------------------------------------------------------------------
# isomorphism search


def find_isomorphism(c: FinCategory, d: FinCategory):
    """An isomorphism of categories c ≅ d as a Functor, or None.

    Brute-force over object bijections refined by hom-size profiles; intended
    for desk-scale categories only.
    """
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return None
    for objs in itertools.permutations(d.objects):
        obj_map = dict(zip(c.objects, objs))
        if any(len(c.hom(a, b)) != len(d.hom(obj_map[a], obj_map[b]))
               for a in c.objects for b in c.objects):
            continue
        iso = _extend_iso(c, d, obj_map)
        if iso is not None:
            return iso
    return None


def _extend_iso(c, d, obj_map):
    nonid = [m for m in c.morphisms if not c.is_identity(m)]
    pools = [d.hom(obj_map[c.src[m]], obj_map[c.dst[m]]) for m in nonid]
    for choice in itertools.product(*pools):
        if len(set(choice)) != len(choice):
            continue
        mor_map = dict(zip(nonid, choice))
        for o in c.objects:
            mor_map[c.identity[o]] = d.identity[obj_map[o]]
        if any(d.is_identity(mor_map[m]) for m in nonid):
            continue
        if _preserves_composition(c, d, mor_map):
            return Functor("iso", c, d, dict(obj_map), mor_map)
    return None


def categories_isomorphic(c, d):
    return find_isomorphism(c, d) is not None


# ---------------------------------------------------------------------------
# JSON (de)serialization


def category_to_json(c: FinCategory):
    return {
        "name": c.name,
        "objects": list(c.objects),
        "morphisms": [{"id": m, "src": c.src[m], "dst": c.dst[m]}
                      for m in c.morphisms],
        "identities": dict(c.identity),
        "compose": sorted([g, f, h] for (g, f), h in c.comp.items()
                          if not (c.is_identity(f) or c.is_identity(g))),
    }


def category_from_json(doc):
    return category_from_tables(
        doc.get("name", "C"),
        doc["objects"],
        [(m["id"], m["src"], m["dst"]) for m in doc["morphisms"]],
        doc["identities"],
        {(g, f): h for g, f, h in doc.get("compose", [])},
    )


def functor_to_json(f: Functor):
    return {"name": f.name, "source": category_to_json(f.source),
            "target": category_to_json(f.target),
            "objects": dict(f.obj_map), "morphisms": dict(f.mor_map)}


def functor_from_json(doc, source=None, target=None):
    src = source if source is not None else category_from_json(doc["source"])
    tgt = target if target is not None else category_from_json(doc["target"])
    mor_map = dict(doc.get("morphisms", {}))
    for o in src.objects:
        mor_map.setdefault(src.identity[o], tgt.identity[doc["objects"][o]])
    return Functor(doc.get("name", "F"), src, tgt, dict(doc["objects"]), mor_map)
