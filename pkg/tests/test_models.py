import math
from itertools import product

import pytest

from syllogistic.core import Sentence, all_sentences, contradictory
from syllogistic.deduction import D, D_PRIME, G, closure, consistent
from syllogistic.models import (LeibnizModel, OrderModel, Structure, VennModel,
                                basic_theory, basically_equivalent,
                                canonical_structure, core_substructure,
                                is_core, is_d_model, is_df_model,
                                is_dprime_model, is_g_model, order_completion,
                                order_to_com, pd_modify, quotient, satisfies,
                                satisfies_all, structure_complete,
                                structure_consistent, structure_from_order,
                                structure_from_venn, venn_from_df)

from conftest import KB, S


def two_terms():
    return (Sentence("A", 0, 1), Sentence("E", 0, 1),
            Sentence("I", 0, 1), Sentence("O", 0, 1))


# -- satisfaction ------------------------------------------------------------

def test_venn_satisfaction_example():
    p, q = frozenset({1, 2}), frozenset({2, 3})
    model = VennModel(frozenset({p, q}), {0: p, 1: q})
    aab, eab, iab, oab = two_terms()
    assert satisfies(model, iab)
    assert not satisfies(model, aab)
    assert satisfies(model, oab)
    assert not satisfies(model, eab)


def test_leibniz_satisfaction_examples():
    model = LeibnizModel({0: (6, 1), 1: (3, 1)})
    aab, eab, iab, oab = two_terms()
    assert satisfies(model, aab) and satisfies(model, iab)
    model = LeibnizModel({0: (2, 3), 1: (3, 2)})
    assert satisfies(model, eab) and not satisfies(model, iab)
    assert satisfies(model, Sentence("I", 0, 0))


def test_leibniz_rejects_non_coprime():
    with pytest.raises(ValueError):
        LeibnizModel({0: (4, 2)})


def test_order_model_overlap_is_lower_bound():
    base = frozenset({"x", "y", "z"})
    r1 = frozenset({("x", "x"), ("y", "y"), ("z", "z"), ("z", "x"), ("z", "y")})
    m = OrderModel(base, r1, {0: "x", 1: "y"})
    assert satisfies(m, Sentence("I", 0, 1))
    m2 = OrderModel(base, frozenset({("x", "x"), ("y", "y"), ("z", "z")}),
                    {0: "x", 1: "y"})
    assert satisfies(m2, Sentence("E", 0, 1))


def test_canonical_structure_membership():
    m = canonical_structure([Sentence("A", 0, 1)], range(2))
    assert satisfies(m, Sentence("A", 0, 1))
    assert not satisfies(m, Sentence("A", 0, 0))


def test_canonical_of_closures():
    d_only = canonical_structure(closure(KB("Eaa", terms="ab"), D), range(2))
    assert is_d_model(d_only) and not is_g_model(d_only)
    g_not_df = canonical_structure(closure(KB("Oaa", terms="ab"), G), range(2))
    assert is_g_model(g_not_df)
    # its positive-universal relation is not the complement of the negatives
    assert satisfies(g_not_df, Sentence("O", 0, 0)) and \
        satisfies(g_not_df, Sentence("A", 0, 0))


# -- model-class predicates ----------------------------------------------------

def test_is_d_model_examples():
    sat = canonical_structure(closure(KB("Aab"), D), range(2))
    assert is_d_model(sat)
    unsat = canonical_structure([Sentence("A", 0, 1), Sentence("A", 1, 2)],
                                range(3))
    assert not is_d_model(unsat)


def test_is_dprime_model_examples():
    m = canonical_structure(closure(KB("Iab"), D_PRIME), range(2))
    assert is_dprime_model(m)
    d_not_dp = canonical_structure(closure(KB("Iab"), D), range(2))
    assert is_d_model(d_not_dp) and not is_dprime_model(d_not_dp)


def test_is_g_model_examples():
    square = frozenset(product(range(2), repeat=2))
    full = Structure(frozenset(range(2)), square, square, square, square,
                     {0: 0, 1: 1})
    assert is_g_model(full)
    m = canonical_structure(closure(KB("Aab"), G), range(2))
    assert is_g_model(m) and structure_consistent(m)


def test_g_model_implication_chain(random_corpus_small):
    import random
    rng = random.Random(4)
    base = frozenset(range(2))
    pairs = [(i, j) for i in range(2) for j in range(2)]
    for _ in range(400):
        rels = [frozenset(p for p in pairs if rng.random() < 0.5) for _ in range(4)]
        mu = {0: rng.randrange(2), 1: rng.randrange(2)}
        st = Structure(base, *rels, mu)
        if is_g_model(st):
            assert is_dprime_model(st)
        if is_dprime_model(st):
            assert is_d_model(st)


def test_is_df_model_examples():
    base = frozenset({frozenset({1}), frozenset({1, 2})})
    r1 = frozenset((x, y) for x in base for y in base if x <= y)
    r2 = frozenset((x, y) for x in base for y in base if x & y)
    assert is_df_model(base, r1, r2, {0: frozenset({1})})
    assert not is_df_model(base, r1 - {(frozenset({1}), frozenset({1}))}, r2, {})
    b2 = frozenset({"x", "y"})
    pre = frozenset({("x", "x"), ("y", "y"), ("x", "y")})
    assert not is_df_model(b2, pre, pre, {})   # overlap relation not symmetric


def test_df_models_are_g_models():
    base = frozenset({frozenset({1}), frozenset({1, 2})})
    mu = {0: frozenset({1}), 1: frozenset({1, 2})}
    venn = VennModel(base, mu)
    st = structure_from_venn(venn)
    assert is_g_model(st)


# -- cores, theories, quotients ------------------------------------------------

def test_core_substructure_equivalence():
    sent = closure(KB("Aab"), D)
    big = Structure(frozenset(range(3)),
                    frozenset((s.subject, s.predicate) for s in sent if s.quality == "A"),
                    frozenset(), frozenset((s.subject, s.predicate)
                                           for s in sent if s.quality == "I"),
                    frozenset(), {0: 0, 1: 1})
    core = core_substructure(big)
    assert is_core(core)
    assert basically_equivalent(big, core, range(2))
    assert basic_theory(core, range(2)) == basic_theory(big, range(2))


def test_basic_theories_differ_on_full_structure():
    empty_g = canonical_structure(closure(KB(terms="ab"), G), range(2))
    square = frozenset(product(range(2), repeat=2))
    full = Structure(frozenset(range(2)), square, square, square, square,
                     {0: 0, 1: 1})
    assert not basically_equivalent(empty_g, full, range(2))


def test_quotient_identifies_mutual_pair():
    kb = KB("Aab", "Aba")
    m = canonical_structure(closure(kb, G), range(2))
    q = quotient(m)
    assert len(q.base) == 1
    assert satisfies(q, S(kb, "Aab"))
    assert basically_equivalent(m, q, range(2))


def test_quotient_trivial_and_idempotent():
    kb = KB("Aab")
    m = canonical_structure(closure(kb, D_PRIME), range(2))
    q = quotient(m)
    assert len(q.base) == len(m.base)
    assert basically_equivalent(m, q, range(2))
    qq = quotient(q)
    assert len(qq.base) == len(q.base)
    assert basic_theory(qq, range(2)) == basic_theory(q, range(2))


def test_quotient_rejects_non_dprime():
    m = canonical_structure(closure(KB("Iab"), D), range(2))
    with pytest.raises(ValueError):
        quotient(m)


def test_quotient_antisymmetric_result(random_corpus_small):
    for kb in random_corpus_small[:40]:
        if not consistent(kb, D):
            continue
        m = canonical_structure(closure(kb, D_PRIME), sorted(kb.universe))
        q = quotient(m)
        sym = {(x, y) for (x, y) in q.relA if (y, x) in q.relA and x != y}
        assert not sym
        assert basically_equivalent(m, q, sorted(kb.universe))


# -- order completion ----------------------------------------------------------

def test_order_completion_adds_witness():
    kb = KB("Iab")
    m = canonical_structure(closure(kb, D_PRIME), range(2))
    om = order_completion(m)
    assert len(om.base) == 3   # one fresh lower bound for the overlapping pair
    assert satisfies(om, S(kb, "Iab"))
    assert basic_theory(om, range(2)) >= {s for s in basic_theory(m, range(2))
                                          if s.affirmative}


def test_order_completion_no_op_when_witnessed():
    kb = KB("Aab")
    m = canonical_structure(closure(kb, G), range(2))
    om = order_completion(m)
    assert om.base == m.base
    assert om.r1 == m.relA


def test_order_completion_positive_theory_exact_for_gprime(random_corpus_small):
    checked = 0
    for kb in random_corpus_small:
        if checked >= 25:
            break
        if not consistent(kb, D):
            continue
        checked += 1
        terms = sorted(kb.universe)
        m = canonical_structure(closure(kb, G), terms)
        om = order_completion(m)
        bt_m = basic_theory(m, terms)
        bt_o = basic_theory(om, terms)
        assert {s for s in bt_m if s.affirmative} == {s for s in bt_o if s.affirmative}
        assert {s for s in bt_m if s.negative} <= {s for s in bt_o if s.negative}
        # a partial ordering stays partial
        asym = all((y, x) not in m.relA or x == y for (x, y) in m.relA)
        if asym:
            assert all((y, x) not in om.r1 or x == y for (x, y) in om.r1)


def test_order_completion_d_model_keeps_a_theory(random_corpus_small):
    checked = 0
    for kb in random_corpus_small:
        if checked >= 25:
            break
        if not consistent(kb, D):
            continue
        checked += 1
        terms = sorted(kb.universe)
        m = canonical_structure(closure(kb, D), terms)
        om = order_completion(m)
        bt_m = basic_theory(m, terms)
        bt_o = basic_theory(om, terms)
        assert {s for s in bt_m if s.quality == "A"} == \
            {s for s in bt_o if s.quality == "A"}
        assert bt_m <= bt_o


def test_order_completion_complete_core_becomes_submodel(random_corpus_small):
    checked = 0
    for kb in random_corpus_small:
        if checked >= 10:
            break
        if not consistent(kb, D):
            continue
        terms = sorted(kb.universe)
        m = canonical_structure(closure(kb, G), terms)
        if not structure_complete(m):
            continue
        checked += 1
        om = order_completion(m)
        assert basic_theory(om, terms) == basic_theory(m, terms)


def test_order_completion_rejects_inconsistent():
    m = canonical_structure(closure(KB("Aab", "Oab"), D), range(2))
    with pytest.raises(ValueError):
        order_completion(m)


# -- Venn extraction -----------------------------------------------------------

def _df_from_order(r1_pairs, base, mu):
    base = frozenset(base)
    r1 = frozenset(r1_pairs)
    lower = {}
    for (x, y) in r1:
        lower.setdefault(y, set()).add(x)
    r2 = frozenset((x, y) for x in base for y in base
                   if lower.get(x, set()) & lower.get(y, set()))
    return base, r1, r2, mu


def test_venn_from_df_injective_iff_antisymmetric():
    base, r1, r2, mu = _df_from_order(
        [("x", "x"), ("y", "y"), ("x", "y")], {"x", "y"}, {0: "x", 1: "y"})
    venn, h = venn_from_df(base, r1, r2, mu)
    assert len(set(h.values())) == len(base)
    for (b1, b2) in product(base, repeat=2):
        assert ((b1, b2) in r1) == (h[b1] <= h[b2])
        assert ((b1, b2) in r2) == bool(h[b1] & h[b2])
    st = Structure(base, r1, frozenset(p for p in product(base, repeat=2) if p not in r2),
                   r2, frozenset(p for p in product(base, repeat=2) if p not in r1), mu)
    assert basically_equivalent(st, venn, range(2))


def test_venn_from_df_merges_mutual_pair():
    base, r1, r2, mu = _df_from_order(
        [("x", "x"), ("y", "y"), ("x", "y"), ("y", "x")], {"x", "y"},
        {0: "x", 1: "y"})
    venn, h = venn_from_df(base, r1, r2, mu)
    assert h["x"] == h["y"]


def test_order_to_com_examples():
    m = OrderModel(frozenset({"x", "y"}),
                   frozenset({("x", "x"), ("y", "y"), ("x", "y")}),
                   {0: "x", 1: "y"})
    cm = order_to_com(m)
    assert cm.base == {frozenset({"x"}), frozenset({"x", "y"})}
    disc = OrderModel(frozenset({"x", "y"}),
                      frozenset({("x", "x"), ("y", "y")}), {0: "x", 1: "y"})
    assert order_to_com(disc).base == {frozenset({"x"}), frozenset({"y"})}
    assert basically_equivalent(m, cm, range(2))


def test_order_to_com_equivalence_random(random_corpus_small):
    checked = 0
    for kb in random_corpus_small:
        if checked >= 20 or not consistent(kb, D):
            continue
        checked += 1
        terms = sorted(kb.universe)
        m = canonical_structure(closure(kb, G), terms)
        om = order_completion(m)
        cm = order_to_com(om)
        assert basically_equivalent(om, cm, terms)


def test_order_model_r2_is_minimal():
    # any dyadic overlap relation over the same preorder contains the
    # derived lower-bound relation
    base = frozenset({"x", "y", "z"})
    r1 = frozenset({("x", "x"), ("y", "y"), ("z", "z"), ("z", "x"), ("z", "y")})
    m = OrderModel(base, r1, {})
    bigger = frozenset(set(m.r2) | {("x", "y")})
    assert is_df_model(base, r1, bigger, {})
    assert m.r2 <= bigger


# -- pd modification -----------------------------------------------------------

def test_pd_modify_semantics():
    venn = VennModel(frozenset({frozenset({1}), frozenset({1, 2})}),
                     {0: frozenset({1}), 1: frozenset({1, 2})})
    st = structure_from_venn(venn)
    mod = pd_modify(st)
    assert satisfies(mod, Sentence("A", 0, 1))
    assert satisfies(mod, Sentence("O", 0, 0))
    assert not satisfies(mod, Sentence("A", 0, 0))
    assert satisfies(mod, Sentence("I", 0, 0))


def test_pd_modify_rejects_violations():
    square = frozenset(product(range(2), repeat=2))
    st = Structure(frozenset(range(2)), square, frozenset(), frozenset(),
                   frozenset(), {0: 0, 1: 1})
    with pytest.raises(ValueError):
        pd_modify(st)   # A not antisymmetric on the image
    st2 = Structure(frozenset(range(2)), frozenset({(0, 0), (1, 1)}),
                    frozenset(), frozenset(), frozenset(), {0: 0, 1: 0})
    with pytest.raises(ValueError):
        pd_modify(st2)  # assignment not injective


# -- Leibniz overlap condition ---------------------------------------------------

def test_leibniz_overlap_condition_matches_lower_bound():
    values = [(m, n) for m in range(0, 13) for n in range(0, 13)
              if math.gcd(m, n) == 1]
    for (m1, n1) in values:
        for (m2, n2) in values:
            lm, ln = math.lcm(m1, m2), math.lcm(n1, n2)
            has_lb = math.gcd(lm, ln) == 1
            leibniz = math.gcd(m1, n2) == 1 == math.gcd(n1, m2)
            assert has_lb == leibniz, ((m1, n1), (m2, n2))


def test_structure_from_order_roundtrip():
    base = frozenset({"x", "y"})
    m = OrderModel(base, frozenset({("x", "x"), ("y", "y"), ("x", "y")}),
                   {0: "x", 1: "y"})
    st = structure_from_order(m)
    assert basically_equivalent(m, st, range(2))
    assert is_g_model(st)
