import pytest

from syllogistic.core import Sentence, contradictory
from syllogistic.deduction import (ASSUMPTION, D, D_DOUBLE, D_PRIME,
                                   Derivation, Line, Rule, RuleApp,
                                   check_derivation, consistent, derives)
from syllogistic.sorites import (ds_refutation, essentially_same,
                                 exists_single_use_tree, is_sorites,
                                 search_sorites, sorites_annotations,
                                 synthesize_sorites)

from conftest import KB, S


def lines(*pairs):
    return Derivation(tuple(Line(s, j) for s, j in pairs))


# -- the check ----------------------------------------------------------------

def test_single_line_sorites():
    kb = KB("Oab")
    deriv = lines((S(kb, "Oab"), ASSUMPTION))
    assert is_sorites(deriv, kb, D)


def test_barbara_step_is_sorites():
    kb = KB("Aab", "Abc")
    deriv = lines((S(kb, "Aab"), ASSUMPTION),
                  (S(kb, "Abc"), ASSUMPTION),
                  (S(kb, "Aac"), RuleApp(Rule.BARBARA, (0, 1))))
    assert is_sorites(deriv, kb, D)


def test_unused_line_breaks_sorites():
    kb = KB("Aab", "Abc")
    deriv = lines((S(kb, "Aab"), ASSUMPTION),
                  (S(kb, "Iba"), RuleApp(Rule.APC, (0,))),
                  (S(kb, "Abc"), ASSUMPTION),
                  (S(kb, "Aac"), RuleApp(Rule.BARBARA, (0, 2))))
    assert check_derivation(deriv, kb, D)
    assert not is_sorites(deriv, kb, D)


def test_duplicate_sentence_breaks_sorites():
    kb = KB("Eab")
    deriv = lines((S(kb, "Eab"), ASSUMPTION),
                  (S(kb, "Eba"), RuleApp(Rule.EC, (0,))),
                  (S(kb, "Eab"), RuleApp(Rule.EC, (1,))))
    assert not is_sorites(deriv, kb, D)


def test_non_adjacent_premises_break_sorites():
    kb = KB("Aab", "Abc", "Acd")
    deriv = lines((S(kb, "Aab"), ASSUMPTION),
                  (S(kb, "Abc"), ASSUMPTION),
                  (S(kb, "Aac"), RuleApp(Rule.BARBARA, (0, 1))),
                  (S(kb, "Acd"), ASSUMPTION),
                  (S(kb, "Aad"), RuleApp(Rule.BARBARA, (2, 3))))
    assert is_sorites(deriv, kb, D)
    gap = lines((S(kb, "Aab"), ASSUMPTION),
                (S(kb, "Acd"), ASSUMPTION),
                (S(kb, "Abc"), ASSUMPTION),
                (S(kb, "Aac"), RuleApp(Rule.BARBARA, (0, 2))),
                (S(kb, "Aad"), RuleApp(Rule.BARBARA, (3, 1))))
    assert check_derivation(gap, kb, D)
    assert not is_sorites(gap, kb, D)


# -- annotation uniqueness ------------------------------------------------------

def test_annotations_essentially_unique_below_extended_system():
    kb = KB("Aab", "Abc")
    deriv = synthesize_sorites(kb, S(kb, "Aac"), D)
    anns = list(sorites_annotations(deriv.sentences(), kb, D))
    assert anns
    for x in anns:
        for y in anns:
            assert essentially_same(x, y)


def test_reflexive_triple_has_two_annotations_in_extended_system():
    kb = KB("Exy")
    x = kb.term("x")
    seq = (Sentence("A", x, x), Sentence("I", x, x), S(kb, "Exy"), S(kb, "Oxy"))
    dd = list(sorites_annotations(seq, kb, D_DOUBLE))
    classes = []
    for ann in dd:
        if not any(essentially_same(ann, c) for c in classes):
            classes.append(ann)
    assert len(classes) == 2
    finals = {ann[-1].rule for ann in dd}
    assert finals == {Rule.FERIO, Rule.FERISON}
    dp = list(sorites_annotations(seq, kb, D_PRIME))
    assert dp and all(ann[-1].rule is Rule.FERIO for ann in dp)


def test_assumption_axiom_swap_is_essentially_same():
    kb = KB("Aaa")
    a = (ASSUMPTION,)
    b = (RuleApp(Rule.A_ID, ()),)
    assert essentially_same(a, b)
    assert not essentially_same((RuleApp(Rule.EC, (0,)),), a)


# -- synthesis ----------------------------------------------------------------

def test_synthesize_affirmative_chain():
    kb = KB("Aab", "Abc", "Acd")
    deriv = synthesize_sorites(kb, S(kb, "Aad"), D)
    assert deriv is not None
    assert deriv.conclusion == S(kb, "Aad")
    assert is_sorites(deriv, kb, D)


def test_synthesize_particular_and_reflexive():
    kb = KB("Aab")
    got = synthesize_sorites(kb, S(kb, "Iba"), D)
    assert got is not None and is_sorites(got, kb, D)
    aaa = Sentence("A", kb.term("a"), kb.term("a"))
    got = synthesize_sorites(kb, aaa, D)
    assert got is not None and len(got) == 1


def test_synthesize_universal_negative():
    kb = KB("Aab", "Ebc", "Adc")
    target = Sentence("E", kb.term("a"), kb.term("d"))
    assert derives(kb, target, D)
    deriv = synthesize_sorites(kb, target, D)
    assert deriv is not None and is_sorites(deriv, kb, D)


def test_preamble_first_example():
    kb = KB("Aca", "Ebc")
    target = S(kb, "Oab")
    assert derives(kb, target, D_PRIME)
    assert search_sorites(kb, target, D_PRIME) is None
    found = synthesize_sorites(kb, target, D_DOUBLE)
    assert found is not None and is_sorites(found, kb, D_DOUBLE)
    assert any(isinstance(l.justification, RuleApp)
               and l.justification.rule is Rule.E_SUB for l in found.lines)


def test_preamble_second_example():
    kb = KB("Acx", "Ebx", "Ica")
    target = S(kb, "Oab")
    assert derives(kb, target, D_PRIME)
    assert search_sorites(kb, target, D_PRIME) is None
    found = synthesize_sorites(kb, target, D_DOUBLE)
    assert found is not None and is_sorites(found, kb, D_DOUBLE)
    assert any(isinstance(l.justification, RuleApp)
               and l.justification.rule is Rule.FERISON for l in found.lines)


def _gamma0():
    kb = KB("Aac", "Csc")  # placeholder, replaced below
    raise AssertionError


def example_gamma0():
    kb = KB("Aac", "Adc", "Ace", "Aeb", "Aef", "Ebf")
    # a=a, d=a', c=c, e=c', b=b, f=b'
    return kb, Sentence("E", kb.term("a"), kb.term("d"))


def example_gamma1():
    kb = KB("Adc", "Abc", "Ace", "Aea", "Aef", "Obf")
    # d=a', b=b, c=c, e=c', a=a, f=b'
    return kb, Sentence("O", kb.term("a"), kb.term("d"))


def test_unsynthesizable_negative_targets_return_none():
    kb0, s0 = example_gamma0()
    assert not consistent(kb0, D)
    assert derives(kb0, s0, D)
    assert not exists_single_use_tree(kb0, s0, D_DOUBLE)
    assert synthesize_sorites(kb0, s0, D_DOUBLE) is None

    kb1, s1 = example_gamma1()
    assert not consistent(kb1, D)
    assert derives(kb1, s1, D_PRIME)
    assert not exists_single_use_tree(kb1, s1, D_DOUBLE)
    assert synthesize_sorites(kb1, s1, D_DOUBLE) is None


def test_member_targets_work_even_when_inconsistent():
    kb = KB("Aab", "Oab")
    deriv = synthesize_sorites(kb, S(kb, "Oab"), D)
    assert deriv is not None and len(deriv) == 1


# -- refutation ----------------------------------------------------------------

def test_ds_refutation_direct_members():
    kb = KB("Aab", "Oab")
    got = ds_refutation(kb)
    assert got is not None
    sigma, d1, d2 = got
    assert sigma == S(kb, "Aab")
    assert d1.sentences() == (S(kb, "Aab"),)
    assert d2.sentences() == (S(kb, "Oab"),)


def test_ds_refutation_derived_pair():
    kb = KB("Eab", "Aab")
    got = ds_refutation(kb)
    assert got is not None
    sigma, d1, d2 = got
    assert d1.conclusion == sigma
    assert d2.conclusion == contradictory(sigma)
    assert is_sorites(d1, kb, D) and is_sorites(d2, kb, D)


def test_ds_refutation_none_when_consistent():
    assert ds_refutation(KB("Aab")) is None


def test_ds_refutation_on_inconsistent_corpus(random_corpus_small):
    checked = 0
    for kb in random_corpus_small:
        if consistent(kb, D):
            continue
        checked += 1
        if checked > 40:
            break
        got = ds_refutation(kb)
        assert got is not None, kb.render()
        sigma, d1, d2 = got
        assert d2.conclusion == contradictory(sigma)
        assert is_sorites(d1, kb, D) and is_sorites(d2, kb, D)
    assert checked > 5


# -- searched soriteses are sound ----------------------------------------------

def test_search_results_are_valid_and_sound(random_corpus_small):
    count = 0
    for kb in random_corpus_small[:30]:
        for s in sorted(kb.sentences)[:2]:
            found = search_sorites(kb, s, D_DOUBLE, max_len=12, budget=30_000)
            if found is None:
                continue
            count += 1
            assert is_sorites(found, kb, D_DOUBLE)
            assert derives(kb, found.conclusion, D_DOUBLE)
    assert count


def test_synthesized_match_check_on_corpus_sample(exhaustive_corpus):
    import random
    rng = random.Random(11)
    sample = rng.sample(exhaustive_corpus, 150)
    from syllogistic.deduction import saturate
    for kb in sample:
        cons = consistent(kb, D)
        for system in (D, D_DOUBLE):
            derivable = saturate(kb, system).sentences()
            for s in sorted(derivable)[:6]:
                applicable = s.affirmative or (cons or s in kb.sentences)
                got = synthesize_sorites(kb, s, system)
                if applicable:
                    assert got is not None, (kb.render(), str(s), system.name)
                    assert got.conclusion == s
                    assert is_sorites(got, kb, system)
                elif got is not None:
                    assert is_sorites(got, kb, system)
