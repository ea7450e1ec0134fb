import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proarrow import corpus
from proarrow.fincat import (BoundExceeded, FinSetDiagram, Functor,
                             category_from_json, category_from_tables,
                             category_to_json, check_category, check_functor,
                             check_nat, colimit_comparison, colimit_finset,
                             comma, comma_two_cell, connected_components,
                             constant_functor, enumerate_finset_diagrams,
                             enumerate_functors, enumerate_nats,
                             find_isomorphism, fun_category, identity_functor,
                             is_final, is_initial, restrict_diagram,
                             terminal_category)

ONE = terminal_category()
I1 = corpus.interval()
I2 = corpus.chain3()
SPAN = corpus.free_span()
PP = corpus.parallel_pair()


def incl(point, cat=I1):
    return constant_functor(ONE, cat, point)


# ---------------------------------------------------------------------------
# check_category


def test_terminal_category_valid():
    assert check_category(ONE) == []


def test_interval_valid():
    assert check_category(I1) == []


def test_broken_unit_law_is_named():
    # redirect compose(id_1, a01) to id_0: the unit law must be reported
    broken = category_from_tables(
        "bad", ["0", "1"],
        [("id_0", "0", "0"), ("id_1", "1", "1"), ("a01", "0", "1")],
        {"0": "id_0", "1": "id_1"}, {("id_1", "a01"): "id_0"})
    report = check_category(broken)
    assert any("unit law" in p and "a01" in p for p in report)


def test_every_generated_category_is_valid():
    for c in corpus.generate_categories(max_objects=2, max_nonid=2):
        assert check_category(c) == []


# ---------------------------------------------------------------------------
# comma categories

# oracle: commuting squares of (f ↓ g), enumerated from scratch
def brute_comma_objects(f, g):
    out = []
    for a in f.source.objects:
        for b in g.source.objects:
            for t in f.target.hom(f.obj_map[a], g.obj_map[b]):
                out.append((a, b, t))
    return out


def brute_comma_morphisms(f, g, objs):
    cc = f.target
    out = []
    for (a1, b1, t1) in objs:
        for (a2, b2, t2) in objs:
            for u in f.source.hom(a1, a2):
                for v in g.source.hom(b1, b2):
                    if cc.compose(t2, f.mor_map[u]) == \
                       cc.compose(g.mor_map[v], t1):
                        out.append(((a1, b1, t1), (a2, b2, t2), u, v))
    return out


def test_comma_of_identities_is_arrow_category():
    cc = comma(identity_functor(I1), identity_functor(I1))
    assert check_category(cc.category) == []
    objs = brute_comma_objects(identity_functor(I1), identity_functor(I1))
    assert len(cc.category.objects) == len(objs) == 3
    # frozen from the oracle: the arrow category of [1] is the 3-chain
    assert find_isomorphism(cc.category, I2) is not None


def test_comma_const1_id():
    cc = comma(incl("1"), identity_functor(I1))
    assert len(cc.category.objects) == 1
    assert find_isomorphism(cc.category, ONE) is not None


def test_comma_over_terminal_is_product():
    f = constant_functor(I1, ONE, "*")
    g = constant_functor(PP, ONE, "*")
    cc = comma(f, g)
    prod = I1.product(PP)
    assert len(cc.category.objects) == len(prod.objects)
    assert find_isomorphism(cc.category, prod) is not None


def test_comma_matches_brute_force_on_corpus():
    cats = [ONE, I1, SPAN]
    for a, b, c in itertools.product(cats, repeat=3):
        for f in enumerate_functors(a, c):
            for g in enumerate_functors(b, c):
                cc = comma(f, g)
                objs = brute_comma_objects(f, g)
                mors = brute_comma_morphisms(f, g, objs)
                assert len(cc.category.objects) == len(objs)
                assert len(cc.category.morphisms) == len(mors)
                assert check_category(cc.category) == []
                assert check_functor(cc.left) == []
                assert check_functor(cc.right) == []


def test_comma_two_cell_is_natural():
    cc = comma(identity_functor(I1), identity_functor(I1))
    assert check_nat(comma_two_cell(cc)) == []
    cc2 = comma(incl("0"), identity_functor(I1))
    assert check_nat(comma_two_cell(cc2)) == []


# ---------------------------------------------------------------------------
# finite-set colimits


def test_colimit_single_set():
    d = FinSetDiagram(ONE, {"*": ("a", "b")},
                      {"id_*": {"a": "a", "b": "b"}})
    col = colimit_finset(d)
    assert col.verified_initial
    assert len(col.elements) == 2


def test_coequalizer_of_equal_maps():
    d = FinSetDiagram(
        PP,
        {"a": ("a.x", "a.y"), "b": ("b.x", "b.y")},
        {"id_a": {"a.x": "a.x", "a.y": "a.y"},
         "id_b": {"b.x": "b.x", "b.y": "b.y"},
         "u": {"a.x": "b.x", "a.y": "b.y"},
         "v": {"a.x": "b.x", "a.y": "b.y"}})
    col = colimit_finset(d)
    assert len(col.elements) == 2  # just d(b)
    assert col.verified_initial


def test_collapse_to_point():
    d = FinSetDiagram(
        I1,
        {"0": ("x", "y"), "1": ("z",)},
        {"id_0": {"x": "x", "y": "y"}, "id_1": {"z": "z"},
         "a01": {"x": "z", "y": "z"}})
    col = colimit_finset(d)
    # one class; its canonical representative is the least member (0,x)
    assert col.elements == ("(0,x)",)
    assert col.cocone["0"]["x"] == col.cocone["0"]["y"] == col.cocone["1"]["z"]


def test_colimit_invariant_under_shape_relabeling():
    # same diagram over a relabeled copy of [1]
    j2 = category_from_tables(
        "[1]'", ["p", "q"],
        [("id_p", "p", "p"), ("id_q", "q", "q"), ("m", "p", "q")],
        {"p": "id_p", "q": "id_q"}, {})
    d1 = FinSetDiagram(I1, {"0": ("x", "y"), "1": ("z",)},
                       {"id_0": {"x": "x", "y": "y"}, "id_1": {"z": "z"},
                        "a01": {"x": "z", "y": "z"}})
    d2 = FinSetDiagram(j2, {"p": ("x", "y"), "q": ("z",)},
                       {"id_p": {"x": "x", "y": "y"}, "id_q": {"z": "z"},
                        "m": {"x": "z", "y": "z"}})
    c1, c2 = colimit_finset(d1), colimit_finset(d2)
    assert len(c1.elements) == len(c2.elements)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["x", "y", "z"]), min_size=2, max_size=2),
       st.lists(st.sampled_from(["x", "y", "z"]), min_size=2, max_size=2))
def test_colimit_parallel_pair_property(im_u, im_v):
    # coequalizer of two maps {a0,a1} -> {x,y,z}: classes generated by u~v
    sets = {"a": ("a0", "a1"), "b": ("x", "y", "z")}
    d = FinSetDiagram(
        PP, sets,
        {"id_a": {s: s for s in sets["a"]},
         "id_b": {s: s for s in sets["b"]},
         "u": dict(zip(sets["a"], im_u)), "v": dict(zip(sets["a"], im_v))})
    col = colimit_finset(d, verify=True)
    # oracle: naive closure of the relation u(a) ~ v(a)
    classes = {frozenset([s]) for s in sets["b"]}

    def merge(p, q):
        cp = next(c for c in classes if p in c)
        cq = next(c for c in classes if q in c)
        if cp != cq:
            classes.discard(cp)
            classes.discard(cq)
            classes.add(cp | cq)

    for a, b in zip(im_u, im_v):
        merge(a, b)
    assert len(col.elements) == len(classes)


# ---------------------------------------------------------------------------
# connectivity and finality


def test_connected_components():
    assert len(connected_components(I1)) == 1
    assert len(connected_components(corpus.discrete(2))) == 2
    assert len(connected_components(SPAN)) == 1


def test_inclusion_of_terminal_object_is_final():
    r = is_final(incl("1"))
    assert r.final and r.witness is None


def test_inclusion_of_initial_object_is_not_final():
    r = is_final(incl("0"))
    assert not r.final and r.witness == "1"


def test_identity_is_final_and_initial():
    for c in (ONE, I1, SPAN, PP):
        assert is_final(identity_functor(c)).final
        assert is_initial(identity_functor(c)).final


def test_initial_object_inclusion_is_initial():
    assert is_initial(incl("0")).final
    assert not is_initial(incl("1")).final


def test_finality_iff_colimit_invariance_small():
    # bounded instance of the Quillen A / colimit-invariance equivalence
    doms = [ONE, I1]
    cods = [I1, PP]
    for dom in doms:
        for cod in cods:
            diagrams = enumerate_finset_diagrams(cod, max_size=2)
            for f in enumerate_functors(dom, cod):
                fin = is_final(f).final
                invariant = all(colimit_comparison(f, d)[0]
                                for d in diagrams)
                assert fin == invariant, (dom.name, cod.name, f.obj_map)


# ---------------------------------------------------------------------------
# functor machinery


def test_enumerate_functors_counts():
    assert len(enumerate_functors(ONE, I1)) == 2
    assert len(enumerate_functors(I1, I1)) == 3
    assert len(enumerate_functors(I1, ONE)) == 1
    # functors ⇉ -> [1]: u,v both to a01 or both collapse
    fs = enumerate_functors(PP, I1)
    assert len(fs) == 3


def test_enumerate_functors_bound():
    with pytest.raises(BoundExceeded):
        enumerate_functors(I2, I2, bound=3)


def test_fun_category_interval_interval():
    cat, functor_of, nat_of = fun_category(I1, I1)
    assert check_category(cat) == []
    assert len(cat.objects) == 3
    # nat transformations: const0 => const1, const0 => id, id => const1, ids
    assert len(cat.morphisms) == 6


def test_enumerate_nats_parallel_pair():
    fs = enumerate_functors(PP, PP)
    for f in fs:
        nats = enumerate_nats(f, f)
        assert any(all(f.target.is_identity(m) for m in n.components.values())
                   for n in nats)


def test_json_roundtrip():
    doc = category_to_json(SPAN)
    back = category_from_json(doc)
    assert find_isomorphism(SPAN, back) is not None
    assert check_category(back) == []


def test_restrict_diagram_matches_composition():
    d = FinSetDiagram(I1, {"0": ("x",), "1": ("y", "z")},
                      {"id_0": {"x": "x"}, "id_1": {"y": "y", "z": "z"},
                       "a01": {"x": "y"}})
    f = incl("0")
    rd = restrict_diagram(d, f)
    assert rd.sets["*"] == ("x",)
    assert rd.check() == []
