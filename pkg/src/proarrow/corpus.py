"""Probe corpora: named fixture categories and exhaustive small-category
generation.

Universal properties in this package are decided by bounded search, so the
corpora quantified over are explicit, versioned values.  The default corpus
is the output of ``generate_categories`` under documented bounds together
with the named fixtures; acceptance tests state which slice they quantify
over next to their runtime targets.
"""

from __future__ import annotations

import itertools

from .fincat import (FinCategory, category_from_tables, check_category,
                     empty_category, find_isomorphism, terminal_category)


# ---------------------------------------------------------------------------
# named fixtures


def interval() -> FinCategory:
    """The walking arrow [1] = {0 -> 1}."""
    return category_from_tables(
        "[1]", ["0", "1"],
        [("id_0", "0", "0"), ("id_1", "1", "1"), ("a01", "0", "1")],
        {"0": "id_0", "1": "id_1"}, {})


def chain3() -> FinCategory:
    """The 3-chain [2] = {0 -> 1 -> 2}."""
    return category_from_tables(
        "[2]", ["0", "1", "2"],
        [("id_0", "0", "0"), ("id_1", "1", "1"), ("id_2", "2", "2"),
         ("a01", "0", "1"), ("a12", "1", "2"), ("a02", "0", "2")],
        {"0": "id_0", "1": "id_1", "2": "id_2"},
        {("a12", "a01"): "a02"})


def free_span() -> FinCategory:
    """Σ = {s <- top -> t}, the free span shape."""
    return category_from_tables(
        "Σ", ["s", "top", "t"],
        [("id_s", "s", "s"), ("id_top", "top", "top"), ("id_t", "t", "t"),
         ("l", "top", "s"), ("r", "top", "t")],
        {"s": "id_s", "top": "id_top", "t": "id_t"}, {})


def free_cospan() -> FinCategory:
    """{a -> c <- b}, the free cospan shape."""
    return category_from_tables(
        "Λ", ["a", "b", "c"],
        [("id_a", "a", "a"), ("id_b", "b", "b"), ("id_c", "c", "c"),
         ("f", "a", "c"), ("g", "b", "c")],
        {"a": "id_a", "b": "id_b", "c": "id_c"}, {})


def parallel_pair() -> FinCategory:
    """a ⇉ b with two parallel non-identity morphisms."""
    return category_from_tables(
        "⇉", ["a", "b"],
        [("id_a", "a", "a"), ("id_b", "b", "b"),
         ("u", "a", "b"), ("v", "a", "b")],
        {"a": "id_a", "b": "id_b"}, {})


def discrete(n: int) -> FinCategory:
    objs = [f"x{i}" for i in range(n)]
    return category_from_tables(
        f"disc{n}", objs, [(f"id_x{i}", o, o) for i, o in enumerate(objs)],
        {o: f"id_{o}" for o in objs}, {})


def z2_group() -> FinCategory:
    """Z/2 as a one-object groupoid."""
    return category_from_tables(
        "Z2", ["*"], [("e", "*", "*"), ("s", "*", "*")],
        {"*": "e"}, {("s", "s"): "e"})


def idempotent_monoid() -> FinCategory:
    """The free idempotent: one object, e with e∘e = e."""
    return category_from_tables(
        "idem", ["*"], [("1", "*", "*"), ("e", "*", "*")],
        {"*": "1"}, {("e", "e"): "e"})


def square_poset() -> FinCategory:
    """[1] x [1], the commutative square poset."""
    i = interval()
    return i.product(i)


def subset_poset_2() -> FinCategory:
    """The poset of subsets of a 2-element set, ordered by inclusion.

    Has all pullbacks (binary meets with a top), so it carries a span
    double category.
    """
    objs = ["0", "a", "b", "ab"]
    leq = {("0", "0"), ("a", "a"), ("b", "b"), ("ab", "ab"),
           ("0", "a"), ("0", "b"), ("0", "ab"), ("a", "ab"), ("b", "ab")}
    mors = []
    for x, y in sorted(leq):
        mors.append((f"i_{x}_{y}", x, y))
    comp = {}
    for (x, y) in leq:
        for (y2, z) in leq:
            if y2 != y:
                continue
            comp[(f"i_{y}_{z}", f"i_{x}_{y}")] = f"i_{x}_{z}"
    return category_from_tables("Sub2", objs, mors,
                                {o: f"i_{o}_{o}" for o in objs}, comp)


def finset_le1() -> FinCategory:
    """Full subcategory of FinSet on sets of size <= 1; has all pullbacks."""
    return category_from_tables(
        "FinSet≤1", ["0", "1"],
        [("id_0", "0", "0"), ("id_1", "1", "1"), ("u", "0", "1")],
        {"0": "id_0", "1": "id_1"}, {})


def named_fixtures():
    """The named members of the default corpus, in canonical order."""
    return {
        "0": empty_category(),
        "1": terminal_category(),
        "[1]": interval(),
        "[2]": chain3(),
        "Σ": free_span(),
        "⇉": parallel_pair(),
    }


# ---------------------------------------------------------------------------
# exhaustive generation


def generate_categories(max_objects=3, max_parallel=2, max_nonid=3,
                        dedup=True):
    """All strict categories within the stated bounds, up to isomorphism.

    max_parallel bounds non-identity morphisms per ordered object pair and
    max_nonid bounds them in total; both keep the associativity search and
    every downstream quantification tractable.
    """
    out = []
    for n in range(0, max_objects + 1):
        for cat in _generate_with_objects(n, max_parallel, max_nonid):
            out.append(cat)
    if dedup:
        out = _dedup(out)
    for i, c in enumerate(out):
        c.name = f"G{i}|{c.name}"
    return out


def _generate_with_objects(n, max_parallel, max_nonid):
    objs = [f"x{i}" for i in range(n)]
    if n == 0:
        yield empty_category()
        return
    slots = [(a, b) for a in objs for b in objs]
    for sizes in _hom_profiles(len(slots), max_parallel, max_nonid):
        hom_sizes = dict(zip(slots, sizes))
        yield from _tables_for_profile(objs, hom_sizes)


def _hom_profiles(k, cap, total):
    for sizes in itertools.product(range(cap + 1), repeat=k):
        if sum(sizes) <= total:
            yield sizes


def _tables_for_profile(objs, hom_sizes):
    mors = [(f"id_{o}", o, o) for o in objs]
    nonid = []
    idx = 0
    for (a, b) in sorted(hom_sizes):
        for _ in range(hom_sizes[(a, b)]):
            nonid.append((f"m{idx}", a, b))
            idx += 1
    mors += nonid
    src = {m: a for m, a, _ in mors}
    dst = {m: b for m, _, b in mors}
    identity = {o: f"id_{o}" for o in objs}
    hom = {}
    for m, a, b in mors:
        hom.setdefault((a, b), []).append(m)
    pairs = [(g[0], f[0]) for g in nonid for f in nonid if f[2] == g[1]]

    def backtrack(i, table):
        if i == len(pairs):
            yield dict(table)
            return
        g, f = pairs[i]
        for h in hom.get((src[f], dst[g]), ()):
            table[(g, f)] = h
            if _assoc_ok(pairs[:i + 1], table, src, dst, identity):
                yield from backtrack(i + 1, table)
        table.pop((g, f), None)

    for table in backtrack(0, {}):
        cat = category_from_tables(
            f"{len(objs)}o{len(nonid)}m", objs, mors, identity, table)
        if not check_category(cat):
            yield cat


def _assoc_ok(assigned_pairs, table, src, dst, identity):
    # check every associativity instance whose entries are all known
    def comp(g, f):
        if f == identity[src[f]]:
            return g
        if g == identity[src[g]]:
            return f
        return table.get((g, f))

    for (g, f) in assigned_pairs:
        gf = comp(g, f)
        if gf is None:
            continue
        # (h∘g)∘f = h∘(g∘f) for assigned h∘g
        for (h, g2) in list(table):
            if g2 != g:
                continue
            hg = table[(h, g2)]
            left = comp(hg, f)
            right = comp(h, gf)
            if left is not None and right is not None and left != right:
                return False
        # (g∘f)∘e = g∘(f∘e)
        for (f2, e) in list(table):
            if f2 != f:
                continue
            fe = table[(f2, e)]
            left = comp(gf, e)
            right = comp(g, fe)
            if left is not None and right is not None and left != right:
                return False
    return True


def _dedup(cats):
    out = []
    for c in cats:
        sig = _signature(c)
        if any(sig == _signature(d) and find_isomorphism(c, d) is not None
               for d in out):
            continue
        out.append(c)
    return out


def _signature(c):
    profile = sorted(
        tuple(sorted(len(c.hom(a, b)) for b in c.objects))
        for a in c.objects)
    return (len(c.objects), len(c.morphisms), tuple(profile))


def default_corpus():
    """Versioned default probe set: named fixtures plus the generated
    categories within the documented bounds, deduplicated up to iso."""
    cats = list(named_fixtures().values())
    for c in generate_categories():
        if any(find_isomorphism(c, d) is not None for d in cats
               if _signature(c) == _signature(d)):
            continue
        cats.append(c)
    return cats
