import pytest

from syllogistic.core import Sentence, all_sentences
from syllogistic.deduction import (D, D_DOUBLE, D_PRIME, G, G_DOUBLE, G_PRIME,
                                   Rule, closure, derives, g_derives, saturate)
from syllogistic.independence import (SORITES_SYSTEM, check_rule_status,
                                      closure_without, full_report,
                                      rule_instances)
from syllogistic import oracle

from conftest import KB, S


def test_closure_without_frozen_examples():
    kb = KB("Aba", "Obc")
    got = closure_without(kb, D_DOUBLE, Rule.BOCARDO).sentences()
    diag = {Sentence(q, t, t) for q in "AI" for t in kb.universe}
    assert got == {S(kb, "Aba"), S(kb, "Obc"), S(kb, "Iab"), S(kb, "Iba")} | diag

    kb = KB("Aab", "Abc", "Oac")
    got = closure_without(kb, D, Rule.BARBARA).sentences()
    diag = {Sentence(q, t, t) for q in "AI" for t in kb.universe}
    assert got == {S(kb, "Aab"), S(kb, "Abc"), S(kb, "Oac"),
                   S(kb, "Iba"), S(kb, "Icb")} | diag

    empty = KB(terms="ab")
    assert closure_without(empty, D, Rule.A_ID).sentences() == frozenset()


def test_closure_without_rejects_foreign_rule():
    with pytest.raises(ValueError):
        closure_without(KB("Aab"), D, Rule.DARII)


def test_rule_instances_cover_identifications():
    insts = rule_instances(Rule.BARBARA)
    assert len(insts) == 5          # the partitions of three variables
    assert insts[0].premises == (Sentence("A", 0, 1), Sentence("A", 1, 2))
    assert any(i.term_count == 1 for i in insts)


def test_esub_derivable_with_expected_witness():
    st = check_rule_status("d''", Rule.E_SUB)
    assert st.derivable and st.label == "derivable"
    sorites_st = check_rule_status(SORITES_SYSTEM, Rule.E_SUB)
    assert sorites_st.derivable and sorites_st.weakly_independent
    assert sorites_st.label == "weaklyIndependent"
    witness = sorites_st.witness_derivation
    assert witness is not None
    shape = tuple((l.sentence.quality, l.sentence.subject, l.sentence.predicate)
                  for l in witness.lines)
    assert shape == (("A", 0, 0), ("I", 0, 0), ("E", 0, 1), ("O", 0, 1))


def test_g_barbara_independent_with_paper_witness():
    st = check_rule_status("g", Rule.BARBARA)
    assert st.independent
    prems, concl = st.witness
    assert set(prems) == {Sentence("A", 0, 1), Sentence("A", 1, 2)}
    assert concl == Sentence("A", 0, 2)


def test_gprime_co_independent_with_paper_witness():
    st = check_rule_status("g'", Rule.CO)
    assert st.independent
    prems, concl = st.witness
    assert set(prems) == {Sentence("A", 0, 1), Sentence("O", 0, 1)}
    assert concl == Sentence("E", 0, 1)


def test_full_report_matches_expected_table():
    report = full_report()

    def labels(system):
        return {str(st.rule): st.label for st in report.statuses
                if st.system == system}

    assert labels("d") == {r: "independent"
                           for r in ("A-Id", "Apc", "Ec", "Barbara", "Celarent")}
    assert set(labels("d'").values()) == {"independent"}
    assert len(labels("d'")) == 10

    expected_dd = {r: "independent" for r in
                   ("A-Id", "Apc", "Ec", "Barbara", "Celarent", "Ic", "Darii",
                    "Baroco", "Bocardo")}
    expected_dd.update({"E-sub": "derivable", "Ferio": "derivable",
                        "Ferison": "derivable"})
    assert labels("d''") == expected_dd

    sorites_labels = labels(SORITES_SYSTEM)
    for r in ("E-sub", "Ferio", "Ferison"):
        assert sorites_labels[r] == "weaklyIndependent"
    for r in ("A-Id", "Apc", "Ec", "Barbara", "Celarent", "Ic", "Darii",
              "Baroco", "Bocardo"):
        assert sorites_labels[r] == "independent"

    assert set(labels("g").values()) == {"independent"} and len(labels("g")) == 5
    assert set(labels("g'").values()) == {"independent"} and len(labels("g'")) == 11
    assert set(labels("g''").values()) == {"independent"} and len(labels("g''")) == 7


def test_independent_implies_weakly_independent():
    report = full_report()
    for st in report.statuses:
        if st.independent:
            assert st.weakly_independent


def test_report_serializes():
    report = full_report()
    data = report.to_json()
    assert len(data["statuses"]) == len(report.statuses)
    text = report.render_text()
    assert "[d''s]" in text and "weaklyIndependent" in text


# -- the reductions behind the refutational variants ---------------------------

def test_gprime_without_co_is_direct_extended(random_corpus_small):
    probe_sentences = [Sentence("A", 0, 0), Sentence("E", 0, 0), Sentence("O", 0, 0)]
    variant = G_PRIME.without(Rule.CO)
    for kb in random_corpus_small[:60]:
        naive = oracle.naive_gprime_closure(kb, removed=Rule.CO)
        for s in probe_sentences:
            assert g_derives(kb, s, variant) == (s in naive)
            assert g_derives(kb, s, variant) == derives(kb, s, D_PRIME)


def test_gprime_deleted_rule_reduction(random_corpus_small):
    for rule in (Rule.DARII, Rule.EC):
        variant = G_PRIME.without(rule)
        for kb in random_corpus_small[:40]:
            naive = oracle.naive_gprime_closure(kb, removed=rule)
            for s in (Sentence("A", 0, 0), Sentence("O", 0, 0)):
                assert g_derives(kb, s, variant) == (s in naive)


def test_g2_without_raa_is_direct(random_corpus_small):
    variant = G_DOUBLE.without(Rule.RAA)
    for kb in random_corpus_small[:60]:
        for s in (Sentence("A", 0, 0), Sentence("O", 0, 0), Sentence("E", 0, 0)):
            assert g_derives(kb, s, variant) == derives(kb, s, D)


def test_g2_without_ass_is_logical_truth(random_corpus_small):
    variant = G_DOUBLE.without(Rule.ASS)
    for kb in random_corpus_small[:40]:
        for s in all_sentences(sorted(kb.universe)[:2]):
            expected = s.reflexive and s.quality in "AI"
            assert g_derives(kb, s, variant) == expected


def test_g2_primed_rule_matches_g_deleted(random_corpus_small):
    for seq_rule, d_rule in ((Rule.BARBARA_SEQ, Rule.BARBARA),
                             (Rule.APC_SEQ, Rule.APC)):
        variant = G_DOUBLE.without(seq_rule)
        g_variant = G.without(d_rule)
        for kb in random_corpus_small[:40]:
            for s in (Sentence("A", 0, 0), Sentence("O", 0, 0)):
                engine = g_derives(kb, s, variant)
                assert engine == g_derives(kb, s, g_variant)
                assert engine == oracle.naive_g_derives(kb, s, D.without(d_rule))
