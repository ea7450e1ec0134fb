"""Finite-set-valued profunctors: the horizontal arrows of the Cat equipment.

Orientation convention, fixed once and used everywhere: a proarrow
``F : x -> y`` is a functor ``y^op × x -> FinSet``; its value set at
``(b, a)`` with ``b`` an object of ``y`` and ``a`` an object of ``x`` is
written ``F(b, a)``.  An element ``s ∈ F(b, a)`` composes like an arrow
from ``b`` to ``a``:

* the left action by ``g : b' -> b`` in ``y`` *precomposes*:
  ``lact(g, s) ∈ F(b', a)``;
* the right action by ``f : a -> a'`` in ``x`` *postcomposes*:
  ``ract(s, f) ∈ F(b, a')``.

Most profunctor bugs are variance bugs; when in doubt, consult this block.
Everything algebraic here (unit laws, associativity of composition, the
extension/restriction adjunction) holds only up to isomorphism, and every
"≅" returned by this module is an explicit bijection, never an assumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import (FinCategory, FinCatError, Functor, NatTransformation,
                     check_nat, enumerate_nats, identity_functor)
from .unionfind import UnionFind


@dataclass(eq=False)
class Profunctor:
    """A finite bimodule F : source -> target, F(b, a) ⊆ elements."""

    name: str
    source: FinCategory            # x
    target: FinCategory            # y
    values: dict                   # (b, a) -> tuple of element ids
    lact: dict                     # (g, elem) -> elem, g in target.morphisms
    ract: dict                     # (elem, f) -> elem, f in source.morphisms
    pos: dict = None               # elem -> (b, a)

    def __post_init__(self):
        if self.pos is None:
            self.pos = {}
            for (b, a), es in self.values.items():
                for e in es:
                    self.pos[e] = (b, a)

    def at(self, b, a):
        return self.values.get((b, a), ())

    def elements(self):
        for (b, a) in sorted(self.values):
            yield from self.values[(b, a)]

    def act(self, g, s, f):
        """g·s·f for g : b' -> b in target, f : a -> a' in source."""
        return self.ract[(self.lact[(g, s)], f)]


def check_profunctor(p: Profunctor):
    """Bimodule axioms: identities act trivially, actions are functorial
    and commute."""
    problems = []
    x, y = p.source, p.target
    for (b, a), es in p.values.items():
        if b not in y.objects or a not in x.objects:
            problems.append(f"value set at undefined pair ({b},{a})")
    for s in p.pos:
        b, a = p.pos[s]
        for g in y.morphisms:
            if y.dst[g] != b:
                continue
            t = p.lact.get((g, s))
            if t is None or p.pos.get(t) != (y.src[g], a):
                problems.append(f"left action of {g} on {s} missing/misplaced")
        for f in x.morphisms:
            if x.src[f] != a:
                continue
            t = p.ract.get((s, f))
            if t is None or p.pos.get(t) != (b, x.dst[f]):
                problems.append(f"right action of {f} on {s} missing/misplaced")
    if problems:
        return problems
    for s in p.pos:
        b, a = p.pos[s]
        if p.lact[(y.identity[b], s)] != s:
            problems.append(f"left identity action fails on {s}")
        if p.ract[(s, x.identity[a])] != s:
            problems.append(f"right identity action fails on {s}")
    for s in p.pos:
        b, a = p.pos[s]
        for g1 in y.morphisms:
            if y.dst[g1] != b:
                continue
            for g2 in y.morphisms:
                if y.dst[g2] != y.src[g1]:
                    continue
                if p.lact[(y.compose(g1, g2), s)] != \
                   p.lact[(g2, p.lact[(g1, s)])]:
                    problems.append(f"left action not functorial at {s}")
        for f1 in x.morphisms:
            if x.src[f1] != a:
                continue
            for f2 in x.morphisms:
                if x.src[f2] != x.dst[f1]:
                    continue
                if p.ract[(s, x.compose(f2, f1))] != \
                   p.ract[(p.ract[(s, f1)], f2)]:
                    problems.append(f"right action not functorial at {s}")
        for g in y.morphisms:
            if y.dst[g] != b:
                continue
            for f in x.morphisms:
                if x.src[f] != a:
                    continue
                if p.lact[(g, p.ract[(s, f)])] != p.ract[(p.lact[(g, s)], f)]:
                    problems.append(f"actions do not commute at {s}")
    return problems


@dataclass(eq=False)
class ProfMorphism:
    """A 2-cell between proarrows.

    Frames: ``fframe`` maps sources, ``gframe`` maps targets; components send
    F(b, a) into G(gframe(b), fframe(a)).
    """

    source: Profunctor
    target: Profunctor
    fframe: Functor
    gframe: Functor
    component: dict  # elem of source -> elem of target

    def __call__(self, s):
        return self.component[s]


def check_prof_morphism(m: ProfMorphism):
    problems = []
    F, G = m.source, m.target
    for s in F.pos:
        b, a = F.pos[s]
        t = m.component.get(s)
        if t is None:
            problems.append(f"missing component at {s}")
            continue
        if G.pos.get(t) != (m.gframe.obj_map[b], m.fframe.obj_map[a]):
            problems.append(f"component at {s} lands at the wrong pair")
    if problems:
        return problems
    y, x = F.target, F.source
    for s in F.pos:
        b, a = F.pos[s]
        for g in y.morphisms:
            if y.dst[g] != b:
                continue
            if m.component[F.lact[(g, s)]] != \
               G.lact[(m.gframe.mor_map[g], m.component[s])]:
                problems.append(f"left naturality fails at ({g},{s})")
        for f in x.morphisms:
            if x.src[f] != a:
                continue
            if m.component[F.ract[(s, f)]] != \
               G.ract[(m.component[s], m.fframe.mor_map[f])]:
                problems.append(f"right naturality fails at ({f},{s})")
    return problems


# ---------------------------------------------------------------------------
# hom, companions, conjoints


def hom_profunctor(c: FinCategory) -> Profunctor:
    """The unit proarrow Hom_c(-,-) : c -> c.

    Elements are the morphism ids themselves (hom-sets partition the
    morphisms, so bare ids cannot collide across value sets).
    """
    values = {}
    for b in c.objects:
        for a in c.objects:
            values[(b, a)] = tuple(c.hom(b, a))
    lact, ract = {}, {}
    for s in c.morphisms:
        for g in c.morphisms:
            if c.dst[g] == c.src[s]:
                lact[(g, s)] = c.compose(s, g)
        for f in c.morphisms:
            if c.src[f] == c.dst[s]:
                ract[(s, f)] = c.compose(f, s)
    return Profunctor(f"hom_{c.name}", c, c, values, lact, ract)


def companion_of(f: Functor, name=None) -> Profunctor:
    """f_⊛ : x -> y with f_⊛(b, a) = Hom_y(b, f(a)).

    Elements are tagged '<m>@<a>': a non-injective f lands the same
    morphism in several value sets.
    """
    x, y = f.source, f.target
    values, lact, ract = {}, {}, {}
    for b in y.objects:
        for a in x.objects:
            values[(b, a)] = tuple(f"{m}@{a}" for m in y.hom(b, f.obj_map[a]))
    for (b, a), es in values.items():
        for s in es:
            m = s.rsplit("@", 1)[0]
            for g in y.morphisms:
                if y.dst[g] == b:
                    lact[(g, s)] = f"{y.compose(m, g)}@{a}"
            for u in x.morphisms:
                if x.src[u] == a:
                    ract[(s, u)] = f"{y.compose(f.mor_map[u], m)}@{x.dst[u]}"
    return Profunctor(name or f"{f.name}_⊛", x, y, values, lact, ract)


def conjoint_of(f: Functor, name=None) -> Profunctor:
    """f^⊛ : y -> x with f^⊛(a, b) = Hom_y(f(a), b); elements '<m>@<a>'."""
    x, y = f.source, f.target
    values, lact, ract = {}, {}, {}
    for a in x.objects:
        for b in y.objects:
            values[(a, b)] = tuple(f"{m}@{a}" for m in y.hom(f.obj_map[a], b))
    for (a, b), es in values.items():
        for s in es:
            m = s.rsplit("@", 1)[0]
            for u in x.morphisms:
                if x.dst[u] == a:
                    lact[(u, s)] = \
                        f"{y.compose(m, f.mor_map[u])}@{x.src[u]}"
            for g in y.morphisms:
                if y.src[g] == b:
                    ract[(s, g)] = f"{y.compose(g, m)}@{a}"
    return Profunctor(name or f"{f.name}^⊛", y, x, values, lact, ract)


def companion_unit(f: Functor) -> ProfMorphism:
    """η : hom_x => f_⊛ with frames (id_x, f)."""
    hx = hom_profunctor(f.source)
    comp = companion_of(f)
    return ProfMorphism(hx, comp, identity_functor(f.source), f,
                        {m: f"{f.mor_map[m]}@{f.source.dst[m]}"
                         for m in f.source.morphisms})


def companion_counit(f: Functor) -> ProfMorphism:
    """ε : f_⊛ => hom_y with frames (f, id_y)."""
    comp = companion_of(f)
    hy = hom_profunctor(f.target)
    return ProfMorphism(comp, hy, f, identity_functor(f.target),
                        {s: s.rsplit("@", 1)[0] for s in comp.pos})


def conjoint_unit(f: Functor) -> ProfMorphism:
    """η' : hom_x => f^⊛ with frames (f, id_x); components apply f."""
    hx = hom_profunctor(f.source)
    conj = conjoint_of(f)
    return ProfMorphism(hx, conj, f, identity_functor(f.source),
                        {u: f"{f.mor_map[u]}@{f.source.src[u]}"
                         for u in f.source.morphisms})


def conjoint_counit(f: Functor) -> ProfMorphism:
    """ε' : f^⊛ => hom_y with frames (id_y, f)."""
    conj = conjoint_of(f)
    hy = hom_profunctor(f.target)
    return ProfMorphism(conj, hy, identity_functor(f.target), f,
                        {s: s.rsplit("@", 1)[0] for s in conj.pos})


def check_companion_triangles(f: Functor):
    """Both companionship triangle identities, verified exactly.

    Vertical: ε ∘ η equals the unit cell of f on hom_x.
    Horizontal: the coend-level pasting of η beside ε is the identity of
    f_⊛ modulo the canonical unitors.
    """
    x, y = f.source, f.target
    eta, eps = companion_unit(f), companion_counit(f)
    problems = []
    # vertical triangle: both composites hom_x -> hom_y send u to f(u)
    for u in x.morphisms:
        if eps.component[eta.component[u]] != f.mor_map[u]:
            problems.append(f"vertical triangle fails at {u}")
    # horizontal triangle on coend classes of f_⊛ ∘ hom_x
    comp = companion_of(f)
    left = compose_prof(comp, hom_profunctor(x))
    pasted = hcompose_prof_morphisms(eps, eta)  # f_⊛∘hom_x => hom_y∘f_⊛
    for cls, (s, u) in left.rep_pair.items():
        # right unitor [s, u] -> s·u; left unitor on the image [t, s'] -> t·s'
        direct = comp.ract[(s, u)]
        image = pasted.component[cls]
        t, s2 = pasted.target.rep_pair[image]
        if comp.lact[(t, s2)] != direct:
            problems.append(f"horizontal triangle fails at {cls}")
    return problems


def check_conjoint_triangles(f: Functor):
    """Both conjunction triangle identities; dual of the companion case."""
    x, y = f.source, f.target
    eta, eps = conjoint_unit(f), conjoint_counit(f)
    problems = []
    for u in x.morphisms:
        if eps.component[eta.component[u]] != f.mor_map[u]:
            problems.append(f"vertical triangle fails at {u}")
    conj = conjoint_of(f)
    left = compose_prof(hom_profunctor(x), conj)
    pasted = hcompose_prof_morphisms(eta, eps)  # hom_x∘f^⊛ => f^⊛∘hom_y
    for cls, (u, t) in left.rep_pair.items():
        direct = conj.lact[(u, t)]
        image = pasted.component[cls]
        s2, t2 = pasted.target.rep_pair[image]
        if conj.ract[(s2, t2)] != direct:
            problems.append(f"horizontal triangle fails at {cls}")
    return problems


# ---------------------------------------------------------------------------
# composition (coend), with canonical representatives


def same_category(c: FinCategory, d: FinCategory) -> bool:
    """Structural equality of categories (ids and tables coincide)."""
    return c is d or (c.objects == d.objects and c.morphisms == d.morphisms
                      and c.src == d.src and c.dst == d.dst
                      and c.comp == d.comp)


def compose_prof(g: Profunctor, f: Profunctor, name=None) -> Profunctor:
    """Coend composite g∘f : x -> z of f : x -> y and g : y -> z.

    Elements are least representatives of classes of pairs (s, t) with
    s ∈ g(c, b), t ∈ f(b, a), under (s·m, t) ~ (s, m·t) for every middle
    morphism m.  The result carries ``rep_pair`` mapping each element to
    its representative pair.
    """
    if not same_category(f.target, g.source):
        raise FinCatError("compose_prof: middle categories do not match")
    x, y, z = f.source, f.target, g.target
    pair_pos = {}
    for c in z.objects:
        for b in y.objects:
            for a in x.objects:
                for s in g.at(c, b):
                    for t in f.at(b, a):
                        pair_pos[(s, t)] = (c, a)
    uf = UnionFind(sorted(pair_pos))
    for (s, t) in sorted(pair_pos):
        b = g.pos[s][1]
        for m in y.morphisms:
            if y.src[m] != b:
                continue
            # s ∈ g(c, b), m : b -> b', t' ∈ f(b', a): (s·m, t') ~ (s, m·t')
            sm = g.ract[(s, m)]
            for t2 in f.at(y.dst[m], f.pos[t][1]):
                uf.union((sm, t2), (s, f.lact[(m, t2)]))
    reps = uf.representatives()
    values = {}
    rep_pair = {}
    elems_of = {}
    for pair, rep in sorted(reps.items()):
        if pair == rep:
            c, a = pair_pos[pair]
            eid = f"⟨{rep[0]}|{rep[1]}⟩"
            elems_of[rep] = eid
            values.setdefault((c, a), []).append(eid)
            rep_pair[eid] = rep
    values = {k: tuple(sorted(v)) for k, v in values.items()}
    for c in z.objects:
        for a in x.objects:
            values.setdefault((c, a), ())
    lact, ract = {}, {}
    for eid, (s, t) in rep_pair.items():
        for gz in z.morphisms:
            if z.dst[gz] == g.pos[s][0]:
                lact[(gz, eid)] = elems_of[reps[(g.lact[(gz, s)], t)]]
        for fx in x.morphisms:
            if x.src[fx] == f.pos[t][1]:
                ract[(eid, fx)] = elems_of[reps[(s, f.ract[(t, fx)])]]
    out = Profunctor(name or f"({g.name}∘{f.name})", x, z, values, lact, ract)
    out.rep_pair = rep_pair
    out.class_of = lambda s, t: elems_of[reps[(s, t)]]
    return out


def hcompose_prof_morphisms(beta: ProfMorphism, alpha: ProfMorphism):
    """Horizontal composite of 2-cells: (β : G=>G') beside (α : F=>F') gives
    G∘F => G'∘F' on coend classes; frames compose sidewise."""
    gf = compose_prof(beta.source, alpha.source)
    gf2 = compose_prof(beta.target, alpha.target)
    comp = {}
    for eid, (s, t) in gf.rep_pair.items():
        comp[eid] = gf2.class_of(beta.component[s], alpha.component[t])
    return ProfMorphism(gf, gf2, alpha.fframe, beta.gframe, comp)


# ---------------------------------------------------------------------------
# restriction and extension


def restrict(g: Functor, F: Profunctor, f: Functor, name=None) -> Profunctor:
    """Cartesian lift g^⊛ F f_⊛ : x' -> y' of F : x -> y along f : x' -> x
    and g : y' -> y, by reindexing: (b', a') -> F(g b', f a')."""
    if not (same_category(f.target, F.source)
            and same_category(g.target, F.target)):
        raise FinCatError("restrict: frame mismatch")
    x2, y2 = f.source, g.source
    values = {}
    elem = {}
    for b in y2.objects:
        for a in x2.objects:
            es = F.at(g.obj_map[b], f.obj_map[a])
            named = tuple(f"{s}@({b},{a})" for s in es)
            values[(b, a)] = named
            for s, n in zip(es, named):
                elem[n] = s
    lact, ract = {}, {}
    for (b, a), es in values.items():
        for n in es:
            s = elem[n]
            for gm in y2.morphisms:
                if y2.dst[gm] == b:
                    lact[(gm, n)] = \
                        f"{F.lact[(g.mor_map[gm], s)]}@({y2.src[gm]},{a})"
            for fm in x2.morphisms:
                if x2.src[fm] == a:
                    ract[(n, fm)] = \
                        f"{F.ract[(s, f.mor_map[fm])]}@({b},{x2.dst[fm]})"
    out = Profunctor(name or f"res({g.name},{F.name},{f.name})",
                     x2, y2, values, lact, ract)
    out.underlying = elem
    return out


def restriction_cell(g: Functor, F: Profunctor, f: Functor) -> ProfMorphism:
    """The cartesian 2-cell restrict(g,F,f) => F with frames (f, g)."""
    R = restrict(g, F, f)
    return ProfMorphism(R, F, f, g, dict(R.underlying))


def extend(g: Functor, F: Profunctor, f: Functor, name=None) -> Profunctor:
    """Cocartesian pushforward g_⊛ F f^⊛ : x' -> y' of F : x -> y along
    f : x -> x' and g : y -> y', computed by coends."""
    if not (same_category(f.source, F.source)
            and same_category(g.source, F.target)):
        raise FinCatError("extend: frame mismatch")
    inner = compose_prof(F, conjoint_of(f))
    out = compose_prof(companion_of(g), inner,
                       name=name or f"ext({g.name},{F.name},{f.name})")
    return out


def extension_cell(g: Functor, F: Profunctor, f: Functor) -> ProfMorphism:
    """The cocartesian 2-cell F => extend(g,F,f) with frames (f, g)."""
    E = extend(g, F, f)
    inner = compose_prof(F, conjoint_of(f))
    comp = {}
    for s in F.pos:
        b, a = F.pos[s]
        # pair s with id_{f(a)} in the conjoint, then id_{g(b)} in the companion
        mid = inner.class_of(s, f"{f.target.identity[f.obj_map[a]]}@{a}")
        comp[s] = E.class_of(f"{g.target.identity[g.obj_map[b]]}@{b}", mid)
    return ProfMorphism(F, E, f, g, comp)


# ---------------------------------------------------------------------------
# ends / cotensors


def cotensor(X: FinCategory, F: Profunctor, g: Functor, f: Functor):
    """End formula [X,F](g,f) = ∫_{o,o' ∈ X} F(g o, f o'): the matching
    families in the product of the diagonal value sets.

    g : X -> target(F), f : X -> source(F).  Returns a tuple of families,
    each a dict keyed by the objects of X.
    """
    if not (same_category(g.target, F.target)
            and same_category(f.target, F.source)):
        raise FinCatError("cotensor: frame mismatch")
    pools = [F.at(g.obj_map[o], f.obj_map[o]) for o in X.objects]
    out = []
    for choice in itertools.product(*pools):
        fam = dict(zip(X.objects, choice))
        if _matches(X, F, g, f, fam):
            out.append(fam)
    return tuple(out)


def _matches(X, F, g, f, fam):
    for m in X.morphisms:
        o, o2 = X.src[m], X.dst[m]
        left = F.lact[(g.mor_map[m], fam[o2])]
        right = F.ract[(fam[o], f.mor_map[m])]
        if left != right:
            return False
    return True


# ---------------------------------------------------------------------------
# products (cartesian monoidal structure on proarrows)


def product_prof(F: Profunctor, G: Profunctor, name=None) -> Profunctor:
    """(F × G)((b,d),(a,c)) = F(b,a) × G(d,c), over the product categories."""
    xs = F.source.product(G.source)
    ys = F.target.product(G.target)
    values, lact, ract = {}, {}, {}
    for (b, a), es in F.values.items():
        for (d, c), fs in G.values.items():
            key = (f"({b},{d})", f"({a},{c})")
            values[key] = tuple(f"({s},{t})" for s in es for t in fs)
    for (b, a) in F.values:
        for (d, c) in G.values:
            for s in F.at(b, a):
                for t in G.at(d, c):
                    e = f"({s},{t})"
                    for gm in F.target.morphisms:
                        if F.target.dst[gm] != b:
                            continue
                        for gn in G.target.morphisms:
                            if G.target.dst[gn] != d:
                                continue
                            lact[(f"({gm},{gn})", e)] = \
                                f"({F.lact[(gm, s)]},{G.lact[(gn, t)]})"
                    for fm in F.source.morphisms:
                        if F.source.src[fm] != a:
                            continue
                        for fn in G.source.morphisms:
                            if G.source.src[fn] != c:
                                continue
                            ract[(e, f"({fm},{fn})")] = \
                                f"({F.ract[(s, fm)]},{G.ract[(t, fn)]})"
    return Profunctor(name or f"({F.name}×{G.name})", xs, ys,
                      values, lact, ract)


def enumerate_profunctors(x: FinCategory, y: FinCategory, max_size=1,
                          bound=None):
    """All profunctors x -> y with value sets of size <= max_size, realized
    as FinSet diagrams over y^op × x and repackaged with the module's
    action conventions."""
    from .fincat import enumerate_finset_diagrams
    shape = y.op().product(x)
    out = []
    for i, d in enumerate(enumerate_finset_diagrams(shape, max_size, bound)):
        values, lact, ract = {}, {}, {}
        names = {}
        for b in y.objects:
            for a in x.objects:
                key = f"({b},{a})"
                es = tuple(f"{b};{a};{e.rsplit('.', 1)[1]}"
                           for e in d.sets[key])
                values[(b, a)] = es
                for raw, e in zip(d.sets[key], es):
                    names[(key, raw)] = e
        for b in y.objects:
            for a in x.objects:
                key = f"({b},{a})"
                for raw in d.sets[key]:
                    e = names[(key, raw)]
                    for g in y.morphisms:
                        if y.dst[g] != b:
                            continue
                        m = f"({g},{x.identity[a]})"
                        key2 = f"({y.src[g]},{a})"
                        lact[(g, e)] = names[(key2, d.maps[m][raw])]
                    for f in x.morphisms:
                        if x.src[f] != a:
                            continue
                        m = f"({y.identity[b]},{f})"
                        key2 = f"({b},{x.dst[f]})"
                        ract[(e, f)] = names[(key2, d.maps[m][raw])]
        out.append(Profunctor(f"P{i}", x, y, values, lact, ract))
    return out


def associator(H: Profunctor, G: Profunctor, F: Profunctor):
    """Canonical iso compose(H, compose(G, F)) ≅ compose(compose(H, G), F)
    as a component dict on coend classes; raises if it fails to be one."""
    left = compose_prof(H, compose_prof(G, F))
    right = compose_prof(compose_prof(H, G), F)
    inner_l = compose_prof(G, F)
    inner_r = compose_prof(H, G)
    mapping = {}
    for cls, (h, gf) in left.rep_pair.items():
        g, f = inner_l.rep_pair[gf]
        mapping[cls] = right.class_of(inner_r.class_of(h, g), f)
    if len(set(mapping.values())) != len(mapping) or \
       len(mapping) != len(right.pos):
        raise FinCatError("associator is not a bijection")
    return left, right, mapping


# ---------------------------------------------------------------------------
# isomorphism search (witness bijections)


def find_prof_isomorphism(F: Profunctor, G: Profunctor):
    """A frame-identity isomorphism F ≅ G as a component bijection dict,
    or None.  Backtracking over each value set with action constraints."""
    if F.source.objects != G.source.objects or \
       F.target.objects != G.target.objects:
        return None
    keys = sorted(set(F.values) | set(G.values))
    for k in keys:
        if len(F.at(*k)) != len(G.at(*k)):
            return None
    assign = {}

    def propagate(s, t):
        # closure of assigning s -> t under both actions
        stack = [(s, t)]
        added = []
        while stack:
            s0, t0 = stack.pop()
            if s0 in assign:
                if assign[s0] != t0:
                    for a in added:
                        del assign[a]
                    return None
                continue
            if F.pos[s0] != G.pos[t0]:
                for a in added:
                    del assign[a]
                return None
            assign[s0] = t0
            added.append(s0)
            b, a = F.pos[s0]
            y, x = F.target, F.source
            for g in y.morphisms:
                if y.dst[g] == b:
                    stack.append((F.lact[(g, s0)], G.lact[(g, t0)]))
            for f in x.morphisms:
                if x.src[f] == a:
                    stack.append((F.ract[(s0, f)], G.ract[(t0, f)]))
        return added

    def backtrack(i):
        todo = [s for k in keys for s in F.at(*k) if s not in assign]
        if not todo:
            return len(set(assign.values())) == len(assign)
        s = todo[0]
        b, a = F.pos[s]
        for t in G.at(b, a):
            if t in assign.values():
                continue
            added = propagate(s, t)
            if added is None:
                continue
            if len(set(assign.values())) == len(assign) and backtrack(i + 1):
                return True
            for s0 in added:
                del assign[s0]
        return False

    if backtrack(0):
        return dict(assign)
    return None


def profs_isomorphic(F, G):
    return find_prof_isomorphism(F, G) is not None


# ---------------------------------------------------------------------------
# 2-cell enumeration (globular hom-sets between parallel proarrows)


def enumerate_globular_cells(F: Profunctor, G: Profunctor):
    """All 2-cells F => G with identity frames, as component dicts."""
    if not (same_category(F.source, G.source)
            and same_category(F.target, G.target)):
        return []
    idx = identity_functor(F.source)
    idy = identity_functor(F.target)
    elems = sorted(F.pos)
    pools = [G.at(*F.pos[s]) for s in elems]
    out = []
    for choice in itertools.product(*pools):
        m = ProfMorphism(F, G, idx, idy, dict(zip(elems, choice)))
        if not check_prof_morphism(m):
            out.append(m.component)
    return out


def enumerate_cells(F: Profunctor, G: Profunctor, f: Functor, g: Functor):
    """All 2-cells F => G with frames (f, g)."""
    elems = sorted(F.pos)
    pools = [G.at(g.obj_map[F.pos[s][0]], f.obj_map[F.pos[s][1]])
             for s in elems]
    out = []
    for choice in itertools.product(*pools):
        m = ProfMorphism(F, G, f, g, dict(zip(elems, choice)))
        if not check_prof_morphism(m):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# JSON


def profunctor_to_json(p: Profunctor):
    return {
        "name": p.name,
        "source": {"name": p.source.name},
        "target": {"name": p.target.name},
        "values": {f"{b},{a}": list(es) for (b, a), es in sorted(p.values.items())},
        "lact": sorted([g, s, t] for (g, s), t in p.lact.items()),
        "ract": sorted([s, f, t] for (s, f), t in p.ract.items()),
    }


def profunctor_from_json(doc, source: FinCategory, target: FinCategory):
    values = {}
    for key, es in doc["values"].items():
        b, a = key.split(",", 1)
        values[(b, a)] = tuple(es)
    lact = {(g, s): t for g, s, t in doc.get("lact", [])}
    ract = {(s, f): t for s, f, t in doc.get("ract", [])}
    return Profunctor(doc.get("name", "F"), source, target, values, lact, ract)
