"""Brute-force reference layer.

Everything here recomputes results from first principles: saturation is a
round-based rescan over sentence sets (no matrices, no reachability), model
predicates are checked by instantiating rule schemas, and structure spaces
are enumerated outright.  The only shared vocabulary with the engine is the
``Sentence`` type and the model containers, which keeps the cross-checks
meaningful.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Optional

from .core import KnowledgeBase, Sentence, all_sentences, contradictory
from .deduction import Rule, System
from . import models

Pair = tuple[int, int]


def _naive_pairs(sentences: Iterable[Sentence], universe: Iterable[int],
                 rules: frozenset[Rule]) -> dict[str, set[Pair]]:
    rel = {q: set() for q in "AEIO"}
    for s in sentences:
        rel[s.quality].add((s.subject, s.predicate))
    terms = sorted(universe)
    while True:
        new: set[tuple[str, Pair]] = set()
        A, E, I, O = rel["A"], rel["E"], rel["I"], rel["O"]
        a_from = {}
        for (x, y) in A:
            a_from.setdefault(x, set()).add(y)

        def add(q, pair):
            if pair not in rel[q]:
                new.add((q, pair))

        if Rule.A_ID in rules:
            for t in terms:
                add("A", (t, t))
        if Rule.I_ID in rules:
            for t in terms:
                add("I", (t, t))
        if Rule.O_ID in rules:
            for t in terms:
                add("O", (t, t))
        if Rule.APC in rules:
            for (x, y) in A:
                add("I", (y, x))
        if Rule.EC in rules:
            for (x, y) in E:
                add("E", (y, x))
        if Rule.IC in rules:
            for (x, y) in I:
                add("I", (y, x))
        if Rule.E_SUB in rules:
            for (x, y) in E:
                add("O", (x, y))
        if Rule.BARBARA in rules:
            for (x, y) in A:
                for z in a_from.get(y, ()):
                    add("A", (x, z))
        if Rule.CELARENT in rules:
            for (x, y) in A:
                for (y2, z) in E:
                    if y2 == y:
                        add("E", (x, z))
        if Rule.DARII in rules:
            for (x, y) in I:
                for z in a_from.get(y, ()):
                    add("I", (x, z))
        if Rule.FERIO in rules:
            for (x, y) in I:
                for (y2, z) in E:
                    if y2 == y:
                        add("O", (x, z))
        if Rule.BAROCO in rules:
            for (x, y) in O:
                for (z, y2) in A:
                    if y2 == y:
                        add("O", (x, z))
        if Rule.BOCARDO in rules:
            for (y, x) in A:
                for (y2, z) in O:
                    if y2 == y:
                        add("O", (x, z))
        if Rule.FERISON in rules:
            for (y, x) in I:
                for (y2, z) in E:
                    if y2 == y:
                        add("O", (x, z))
        if not new:
            return rel
        for q, pair in new:
            rel[q].add(pair)


def naive_saturation_pairs(kb: KnowledgeBase, system: System) -> dict[str, set[Pair]]:
    if system.refutational:
        raise ValueError("naive saturation covers direct systems only")
    return _naive_pairs(kb.sentences, kb.universe, system.rules)


def naive_saturation(kb: KnowledgeBase, system: System) -> frozenset[Sentence]:
    rel = naive_saturation_pairs(kb, system)
    return frozenset(Sentence(q, a, b) for q, pairs in rel.items() for (a, b) in pairs)


def _pairs_contradictory(rel: dict[str, set[Pair]]) -> bool:
    return bool(rel["A"] & rel["O"]) or bool(rel["E"] & rel["I"])


def naive_consistent(kb: KnowledgeBase, system: System) -> bool:
    return not _pairs_contradictory(naive_saturation_pairs(kb, system))


def naive_g_derives(kb: KnowledgeBase, s: Sentence, base: System) -> bool:
    """Refutational consequence via the naive saturator."""
    rel = _naive_pairs(kb.sentences | {contradictory(s)}, kb.universe, base.rules)
    return _pairs_contradictory(rel)


def naive_gprime_closure(kb: KnowledgeBase,
                         removed: Optional[Rule] = None) -> frozenset[Sentence]:
    """Forward closure under d' plus the contradiction rule: once both a
    sentence and its contradictory appear, everything follows."""
    from .deduction import D_PRIME
    ruleset = D_PRIME.rules if removed is None or removed is Rule.CO else D_PRIME.rules - {removed}
    rel = _naive_pairs(kb.sentences, kb.universe, ruleset)
    if removed is not Rule.CO and _pairs_contradictory(rel):
        return frozenset(all_sentences(kb.universe))
    return frozenset(Sentence(q, a, b) for q, pairs in rel.items() for (a, b) in pairs)


# ---------------------------------------------------------------------------
# Rule validity and structure enumeration
# ---------------------------------------------------------------------------

_SCHEMAS: dict[Rule, tuple[tuple[tuple[str, int, int], ...], tuple[str, int, int], int]] = {
    # rule: (premise patterns, conclusion pattern, number of schema variables)
    Rule.A_ID: ((), ("A", 0, 0), 1),
    Rule.I_ID: ((), ("I", 0, 0), 1),
    Rule.O_ID: ((), ("O", 0, 0), 1),
    Rule.APC: ((("A", 0, 1),), ("I", 1, 0), 2),
    Rule.EC: ((("E", 0, 1),), ("E", 1, 0), 2),
    Rule.IC: ((("I", 0, 1),), ("I", 1, 0), 2),
    Rule.E_SUB: ((("E", 0, 1),), ("O", 0, 1), 2),
    Rule.BARBARA: ((("A", 0, 1), ("A", 1, 2)), ("A", 0, 2), 3),
    Rule.CELARENT: ((("A", 0, 1), ("E", 1, 2)), ("E", 0, 2), 3),
    Rule.DARII: ((("I", 0, 1), ("A", 1, 2)), ("I", 0, 2), 3),
    Rule.FERIO: ((("I", 0, 1), ("E", 1, 2)), ("O", 0, 2), 3),
    Rule.BAROCO: ((("O", 0, 1), ("A", 2, 1)), ("O", 0, 2), 3),
    Rule.BOCARDO: ((("A", 0, 1), ("O", 0, 2)), ("O", 1, 2), 3),
    Rule.FERISON: ((("I", 0, 1), ("E", 0, 2)), ("O", 1, 2), 3),
}


def rule_schema(rule: Rule):
    return _SCHEMAS[rule]


def rule_valid_in(model, rule: Rule, terms: Iterable[int]) -> bool:
    """If all premises of any instantiation hold in the model, so does the
    conclusion.  Instantiations range over the given session terms."""
    prems, concl, nvars = _SCHEMAS[rule]
    terms = list(terms)
    for assignment in product(terms, repeat=nvars):
        ok = all(models.satisfies(model, Sentence(q, assignment[i], assignment[j]))
                 for q, i, j in prems)
        if ok:
            q, i, j = concl
            if not models.satisfies(model, Sentence(q, assignment[i], assignment[j])):
                return False
    return True


def brute_d_model(m, terms: Iterable[int]) -> bool:
    from .deduction import D
    return all(rule_valid_in(m, r, terms) for r in D.rules)


def brute_dprime_model(m, terms: Iterable[int]) -> bool:
    from .deduction import D_PRIME
    return all(rule_valid_in(m, r, terms) for r in D_PRIME.rules)


class _GClosureCache:
    """Memoized refutational consequence sets keyed by a theory, computed with
    the naive saturator."""

    def __init__(self, terms: tuple[int, ...]):
        self.terms = terms
        self.space = all_sentences(terms)
        self.cache: dict[frozenset[Sentence], frozenset[Sentence]] = {}

    def consequences(self, theory: frozenset[Sentence]) -> frozenset[Sentence]:
        got = self.cache.get(theory)
        if got is not None:
            return got
        from .deduction import D
        if any(contradictory(s) in theory for s in theory):
            # both members of a contradictory pair are trivially derivable
            result = frozenset(self.space)
        else:
            out = []
            for s in self.space:
                rel = _naive_pairs(theory | {contradictory(s)}, self.terms, D.rules)
                if _pairs_contradictory(rel):
                    out.append(s)
            result = frozenset(out)
        self.cache[theory] = result
        return result


def brute_g_model(m, terms: Iterable[int],
                  cache: Optional[_GClosureCache] = None) -> bool:
    """Entailment preservation: every refutational consequence of the model's
    own basic theory must hold in the model.  (Monotonicity reduces the
    quantification over all satisfied premise sets to the full theory.)"""
    terms = tuple(sorted(terms))
    if cache is None:
        cache = _GClosureCache(terms)
    theory = frozenset(s for s in cache.space if models.satisfies(m, s))
    return all(models.satisfies(m, s) for s in cache.consequences(theory))


def g_closure_cache(terms: Iterable[int]) -> _GClosureCache:
    return _GClosureCache(tuple(sorted(terms)))


# ---------------------------------------------------------------------------
# Structure enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnumSpec:
    base_size: int
    term_count: int
    samples: Optional[int] = None   # None: exhaustive
    seed: int = 0

    def __post_init__(self):
        if self.base_size < 1:
            raise ValueError("base_size must be positive")


def _relation_from_mask(mask: int, pairs: list[Pair]) -> frozenset[Pair]:
    return frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)


def enumerate_structures(spec: EnumSpec) -> Iterator["models.Structure"]:
    """All structures over a fixed small base, or a seeded uniform sample."""
    n = spec.base_size
    base = frozenset(range(n))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    npairs = len(pairs)
    mus = list(product(range(n), repeat=spec.term_count))

    def build(masks, mu_vec):
        rels = [_relation_from_mask(m, pairs) for m in masks]
        mu = {t: mu_vec[t] for t in range(spec.term_count)}
        return models.Structure(base, rels[0], rels[1], rels[2], rels[3], mu)

    if spec.samples is None:
        for masks in product(range(1 << npairs), repeat=4):
            for mu_vec in mus:
                yield build(masks, mu_vec)
    else:
        rng = random.Random(spec.seed)
        top = 1 << npairs
        for _ in range(spec.samples):
            masks = tuple(rng.randrange(top) for _ in range(4))
            mu_vec = mus[rng.randrange(len(mus))]
            yield build(masks, mu_vec)


def enumerate_and_check(spec: EnumSpec,
                        predicate_pair: tuple[Callable, Callable]
                        ) -> Optional["models.Structure"]:
    """First structure on which the two predicates disagree, else None."""
    left, right = predicate_pair
    for st in enumerate_structures(spec):
        if bool(left(st)) != bool(right(st)):
            return st
    return None
