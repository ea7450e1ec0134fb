import itertools

from proarrow import corpus
from proarrow.fincat import (constant_functor, enumerate_functors,
                             enumerate_nats, identity_functor,
                             terminal_category)
from proarrow.profun import (Profunctor, associator, check_companion_triangles,
                             check_conjoint_triangles, check_prof_morphism,
                             check_profunctor, companion_of, compose_prof,
                             conjoint_of, cotensor, enumerate_globular_cells,
                             enumerate_profunctors, extend, extension_cell,
                             find_prof_isomorphism, hom_profunctor,
                             product_prof, profunctor_from_json,
                             profunctor_to_json, restrict, restriction_cell)

ONE = terminal_category()
I1 = corpus.interval()
PP = corpus.parallel_pair()
SPAN = corpus.free_span()


def incl(point, cat=I1):
    return constant_functor(ONE, cat, point)


# ---------------------------------------------------------------------------
# coend oracle: naive closure over identification edges, no union-find


def oracle_coend_classes(g: Profunctor, f: Profunctor):
    """Classes of pairs (s, t) per (c, a), computed by repeated sweeps."""
    pairs = []
    for c in g.target.objects:
        for b in g.source.objects:
            for a in f.source.objects:
                for s in g.at(c, b):
                    for t in f.at(b, a):
                        pairs.append((s, t))
    classes = {p: {p} for p in pairs}

    def merge(p, q):
        if classes[p] is classes[q]:
            return
        u = classes[p] | classes[q]
        for r in u:
            classes[r] = u

    y = f.target
    for (s, t) in pairs:
        for m in y.morphisms:
            if y.src[m] != g.pos[s][1]:
                continue
            for t2 in f.at(y.dst[m], f.pos[t][1]):
                merge((g.ract[(s, m)], t2), (s, f.lact[(m, t2)]))
    seen = []
    for p in pairs:
        if not any(classes[p] is c for c in seen):
            seen.append(classes[p])
    return seen


def assert_matches_oracle(g, f):
    comp = compose_prof(g, f)
    oracle = oracle_coend_classes(g, f)
    assert len(comp.pos) == len(oracle)
    # every class has exactly one representative element of the composite
    for cls in oracle:
        reps = {comp.class_of(s, t) for (s, t) in cls}
        assert len(reps) == 1


# ---------------------------------------------------------------------------
# bimodule axioms and companions/conjoints


def test_hom_profunctor_is_valid():
    for c in (ONE, I1, PP, SPAN, corpus.z2_group()):
        assert check_profunctor(hom_profunctor(c)) == []


def test_companion_of_identity_is_hom():
    h = companion_of(identity_functor(I1))
    assert h.at("0", "1") == ("a01@1",)
    assert h.at("1", "0") == ()
    assert find_prof_isomorphism(h, hom_profunctor(I1)) is not None


def test_companion_of_const1_sizes():
    f = incl("1")
    comp = companion_of(f)
    assert len(comp.at("0", "*")) == 1
    assert len(comp.at("1", "*")) == 1
    assert check_profunctor(comp) == []


def test_companion_of_const0_empty_at_1():
    comp = companion_of(incl("0"))
    assert comp.at("1", "*") == ()


def test_conjoint_of_const1_empty_at_0():
    conj = conjoint_of(incl("1"))
    assert conj.at("*", "0") == ()


def test_conjoint_is_companion_in_opposite():
    for cat in (I1, PP):
        for f in enumerate_functors(ONE, cat) + enumerate_functors(cat, cat):
            conj = conjoint_of(f)
            comp_op = companion_of(f.op())
            for a in f.source.objects:
                for b in f.target.objects:
                    assert set(conj.at(a, b)) == set(comp_op.at(b, a))


def test_companion_conjoint_triangle_identities():
    cats = [ONE, I1, PP, SPAN]
    for dom in cats:
        for cod in cats:
            for f in enumerate_functors(dom, cod):
                assert check_companion_triangles(f) == []
                assert check_conjoint_triangles(f) == []


# ---------------------------------------------------------------------------
# composition


def test_compose_with_hom_is_unit_up_to_iso():
    for f in enumerate_functors(I1, PP):
        F = companion_of(f)
        left = compose_prof(hom_profunctor(PP), F)
        right = compose_prof(F, hom_profunctor(I1))
        assert find_prof_isomorphism(left, F) is not None
        assert find_prof_isomorphism(right, F) is not None


def test_conjoint_after_companion_is_twisted_hom():
    # conjoint(f) ∘ companion(f) ≅ Hom_y(f-, f-) = restrict(f, hom_y, f)
    for cod in (I1, PP, SPAN):
        for f in enumerate_functors(I1, cod):
            got = compose_prof(conjoint_of(f), companion_of(f))
            want = restrict(f, hom_profunctor(cod), f)
            assert_matches_oracle(conjoint_of(f), companion_of(f))
            assert find_prof_isomorphism(got, want) is not None


def test_one_point_composition():
    pt = enumerate_profunctors(ONE, ONE, max_size=1)[1]
    assert len(pt.pos) == 1
    out = compose_prof(pt, pt)
    assert len(out.pos) == 1


def test_compose_matches_oracle_on_corpus():
    profs_i1 = enumerate_profunctors(I1, I1, max_size=1)
    for g in profs_i1:
        for f in profs_i1:
            assert_matches_oracle(g, f)


def test_associativity_up_to_canonical_iso():
    profs = enumerate_profunctors(I1, I1, max_size=1)
    picked = [p for p in profs if len(p.pos) in (1, 2, 3)][:4]
    for h, g, f in itertools.product(picked, repeat=3):
        left, right, mapping = associator(h, g, f)
        assert len(mapping) == len(left.pos) == len(right.pos)


# ---------------------------------------------------------------------------
# restriction / extension


def test_restrict_identity_is_same_table():
    F = companion_of(incl("1"))
    R = restrict(identity_functor(F.target), F, identity_functor(F.source))
    for key in F.values:
        assert len(R.at(*key)) == len(F.at(*key))
    assert check_prof_morphism(
        restriction_cell(identity_functor(F.target), F,
                         identity_functor(F.source))) == []


def test_restrict_hom_is_comma_profunctor():
    # restrict(g, hom_y, f) = Hom_y(g(-), f(-))
    g = incl("1")
    f = incl("0")
    R = restrict(g, hom_profunctor(I1), f)
    assert len(R.at("*", "*")) == 0  # Hom(1, 0) is empty
    R2 = restrict(f, hom_profunctor(I1), g)
    assert len(R2.at("*", "*")) == 1  # Hom(0, 1) = {a01}


def test_restrict_along_constants_picks_single_value():
    F = hom_profunctor(I1)
    R = restrict(incl("0"), F, incl("1"))
    assert len(R.at("*", "*")) == len(F.at("0", "1"))


def test_extend_identity_is_iso():
    for f in enumerate_functors(ONE, I1):
        F = companion_of(f)
        E = extend(identity_functor(F.target), F, identity_functor(F.source))
        assert find_prof_isomorphism(E, F) is not None
        cell = extension_cell(identity_functor(F.target), F,
                              identity_functor(F.source))
        assert check_prof_morphism(cell) == []


def test_extension_restriction_adjunction_bijection():
    # Hom(extend(g,F,f), G) ≅ Hom(F, restrict(g,G,f)) via explicit transpose
    f = incl("0")
    g = incl("1")
    for F in enumerate_profunctors(ONE, ONE, max_size=1):
        for G in enumerate_profunctors(I1, I1, max_size=1)[:8]:
            E = extend(g, F, f)
            R = restrict(g, G, f)
            lhs = enumerate_globular_cells(E, G)
            rhs = enumerate_globular_cells(F, R)
            assert len(lhs) == len(rhs)
            # transpose of φ: s -> φ(ext_cell(s)), landing in R's renamed table
            cell = extension_cell(g, F, f)
            transposed = {
                tuple(sorted((s, phi[cell.component[s]]) for s in F.pos))
                for phi in lhs}
            raw_rhs = {tuple(sorted((s, R.underlying[psi[s]])
                                    for s in F.pos)) for psi in rhs}
            assert transposed == raw_rhs


def test_extend_of_point_along_endpoints():
    # one-point profunctor on 1, extended along the endpoint inclusions of [1]
    pt = [p for p in enumerate_profunctors(ONE, ONE, max_size=1)
          if len(p.pos) == 1][0]
    E = extend(incl("1"), pt, incl("0"))
    # coend oracle: values Hom(b,1) × Hom(0,a), no middle identifications
    for b in I1.objects:
        for a in I1.objects:
            want = len(I1.hom(b, "1")) * len(I1.hom("0", a))
            assert len(E.at(b, a)) == want


# ---------------------------------------------------------------------------
# cotensor (ends)


def test_cotensor_over_point():
    F = hom_profunctor(I1)
    fams = cotensor(ONE, F, incl("0"), incl("1"))
    assert len(fams) == len(F.at("0", "1"))


def test_cotensor_hom_is_natural_endotransformations():
    for cat in (I1, PP):
        for f in enumerate_functors(I1, cat):
            fams = cotensor(I1, hom_profunctor(cat), f, f)
            nats = enumerate_nats(f, f)
            assert len(fams) == len(nats)


def test_cotensor_constant_point():
    pt = [p for p in enumerate_profunctors(I1, I1, max_size=1)
          if all(len(p.at(b, a)) == 1 for b in I1.objects
                 for a in I1.objects)][0]
    fams = cotensor(I1, pt, identity_functor(I1), identity_functor(I1))
    assert len(fams) == 1


# ---------------------------------------------------------------------------
# cartesian product of proarrows


def test_product_prof_pointwise():
    F = hom_profunctor(I1)
    G = companion_of(incl("1"))
    P = product_prof(F, G)
    assert check_profunctor(P) == []
    for (b, a) in F.values:
        for (d, c) in G.values:
            assert len(P.at(f"({b},{d})", f"({a},{c})")) == \
                len(F.at(b, a)) * len(G.at(d, c))


# ---------------------------------------------------------------------------
# enumeration and JSON


def test_enumerate_profunctors_are_valid():
    ps = enumerate_profunctors(I1, ONE, max_size=2)
    assert all(check_profunctor(p) == [] for p in ps)
    # presheaves on [1] with values <= 2: pairs of sets with a map 2nd -> 1st
    assert len(ps) > 4


def test_json_roundtrip():
    F = companion_of(incl("1"))
    doc = profunctor_to_json(F)
    back = profunctor_from_json(doc, ONE, I1)
    assert check_profunctor(back) == []
    assert find_prof_isomorphism(F, back) is not None
