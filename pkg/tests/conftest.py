import itertools
import random

import pytest

from syllogistic.core import KnowledgeBase, Sentence, all_sentences, parse_kb

TERMS3 = ("a", "b", "c")
SENTENCES3 = all_sentences(range(3))

RANDOM_SEED = 20260809
RANDOM_COUNT = 10_000
RANDOM_SMALL_COUNT = 500


def kb_text(*lines: str, terms: str = "") -> str:
    body = [f"{s[0]} {s[1]} {s[2]}" for s in lines]
    head = [f"terms: {' '.join(terms)}"] if terms else []
    return "\n".join(head + body) + "\n"


def KB(*compact: str, terms: str = "") -> KnowledgeBase:
    """Base from compact one-char-term sentences, e.g. KB("Aab", "Ebc")."""
    return parse_kb(kb_text(*compact, terms=terms))


def S(kb: KnowledgeBase, compact: str) -> Sentence:
    return Sentence(compact[0], kb.term(compact[1]), kb.term(compact[2]))


def build_exhaustive_corpus() -> list[KnowledgeBase]:
    """Every base with at most three sentences over three fixed terms."""
    universe = frozenset(range(3))
    out = []
    for k in range(4):
        for combo in itertools.combinations(SENTENCES3, k):
            out.append(KnowledgeBase(frozenset(combo), universe, TERMS3))
    return out


def build_random_corpus(count: int = RANDOM_COUNT,
                        seed: int = RANDOM_SEED) -> list[KnowledgeBase]:
    """Seeded random bases: up to twelve sentences over up to six terms."""
    rng = random.Random(seed)
    syms = tuple("abcdef")
    out = []
    for _ in range(count):
        nterms = rng.randint(1, 6)
        nsent = rng.randint(0, 12)
        sentences = frozenset(
            Sentence(rng.choice("AEIO"), rng.randrange(nterms), rng.randrange(nterms))
            for _ in range(nsent))
        out.append(KnowledgeBase(sentences, frozenset(range(nterms)), syms[:nterms]))
    return out


@pytest.fixture(scope="session")
def exhaustive_corpus():
    return build_exhaustive_corpus()


@pytest.fixture(scope="session")
def random_corpus():
    return build_random_corpus()


@pytest.fixture(scope="session")
def random_corpus_small(random_corpus):
    return random_corpus[:RANDOM_SMALL_COUNT]
