"""Constructive model assignment for consistent knowledge bases.

* a Leibniz model built from prime products over the derivable universal
  sentences,
* a direct Venn model whose points are the derivably-overlapping term pairs,
* the modified variant interpreting A properly (strictly), and
* the supporting prime generator.
"""

from __future__ import annotations

from typing import Optional

from .core import KnowledgeBase, Sentence, essential_terms
from .deduction import (D, PD, Consistent, is_consistent, saturate)
from .models import LeibnizModel, Structure, VennModel, pd_modify, structure_from_venn


class ContradictoryInput(ValueError):
    """Model construction is undefined for contradictory bases."""


def first_n_primes(n: int) -> list[int]:
    """The strictly increasing list of the first ``n`` primes.

    Trial division against the primes already found, with the usual square
    cutoff; polynomial in ``n`` and comfortably fast to n = 10**4.
    """
    if n < 1:
        raise ValueError("n must be positive")
    primes = [2]
    candidate = 3
    while len(primes) < n:
        is_prime = True
        for p in primes:
            if p * p > candidate:
                break
            if candidate % p == 0:
                is_prime = False
                break
        if is_prime:
            primes.append(candidate)
        candidate += 2
    return primes


def assign_leibniz(kb: KnowledgeBase) -> LeibnizModel:
    """Leibniz model of a consistent base.

    The i-th essential term (ascending id order) owns the i-th prime; its
    value is the pair of products of the primes of the terms it is derivably
    universally-included in, respectively derivably excluded from.  Terms
    outside the essential set take the top value (1, 1).
    """
    if not isinstance(is_consistent(kb, D), Consistent):
        raise ContradictoryInput("cannot assign a model to a contradictory base")
    ess = sorted(essential_terms(kb))
    primes = first_n_primes(len(ess)) if ess else []
    prime_of = dict(zip(ess, primes))
    cr = saturate(kb.restricted(ess), D)
    pos = {t: i for i, t in enumerate(cr.term_index)}
    mu: dict[int, tuple[int, int]] = {}
    for t in sorted(kb.universe):
        if t not in prime_of:
            mu[t] = (1, 1)
            continue
        m = n = 1
        for u in ess:
            if cr.relA[pos[t], pos[u]]:
                m *= prime_of[u]
            if cr.relE[pos[t], pos[u]]:
                n *= prime_of[u]
        mu[t] = (m, n)
    return LeibnizModel(mu)


def venn_direct(kb: KnowledgeBase) -> VennModel:
    """Venn model of a consistent base, built directly from the closure.

    Points are the ordered term pairs with a derivable overlap; a term
    denotes the set of points one of whose components is derivably included
    in it.  Every term's set contains its own diagonal point, so members are
    never empty.
    """
    if not isinstance(is_consistent(kb, D), Consistent):
        raise ContradictoryInput("cannot assign a model to a contradictory base")
    cr = saturate(kb, D)
    terms = cr.term_index
    pos = {t: i for i, t in enumerate(terms)}
    points = [(a, b) for a in terms for b in terms
              if cr.relI[pos[a], pos[b]] or cr.relI[pos[b], pos[a]]]
    mu = {}
    for c in terms:
        mu[c] = frozenset((a, b) for (a, b) in points
                          if cr.relA[pos[a], pos[c]] or cr.relA[pos[b], pos[c]])
    return VennModel(frozenset(mu.values()), mu)


def pd_model(kb: KnowledgeBase) -> Structure:
    """Model for the proper reading of A (strict inclusion) of a base that is
    consistent under the proper system: the direct Venn model of the
    non-reflexive part, with the image diagonal moved from A to O."""
    if not isinstance(is_consistent(kb, PD), Consistent):
        raise ContradictoryInput("base is contradictory under the proper system")
    plain = KnowledgeBase(frozenset(s for s in kb.sentences if not s.reflexive),
                          kb.universe, kb.symbols)
    venn = venn_direct(plain)
    return pd_modify(structure_from_venn(venn))
