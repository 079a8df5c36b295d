"""Sorites checking, synthesis, and the sorites-style refutation.

A sorites is a deduction whose lines are pairwise distinct and in which every
non-final line is consumed exactly once as a premise, by the immediately
following application.  Structurally that makes a sorites a linear fold: a
running head sentence is either rewritten by a one-premise rule or combined
with exactly one fresh leaf (an assumption or an axiom instance) by a
two-premise rule.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import KnowledgeBase, Sentence, contradictory
from .deduction import (ARITY, ASSUMPTION, AXIOM_QUALITY, D, D_DOUBLE, D_PRIME,
                        Assumption, Derivation, Line, Rule, RuleApp, System,
                        apply_rule, check_derivation, consistent,
                        contradiction_pair, derives, find_chain, saturate)

_UNARY = (Rule.APC, Rule.EC, Rule.IC, Rule.E_SUB)
_BINARY = (Rule.BARBARA, Rule.CELARENT, Rule.DARII, Rule.FERIO,
           Rule.BAROCO, Rule.BOCARDO, Rule.FERISON)
_AXIOMS = (Rule.A_ID, Rule.I_ID, Rule.O_ID)

SEARCH_MAX_LEN = 40
SEARCH_BUDGET = 400_000


def _axiom_rule_for(s: Sentence, system: System) -> Optional[Rule]:
    if not s.reflexive:
        return None
    for r in _AXIOMS:
        if r in system.rules and AXIOM_QUALITY[r] == s.quality:
            return r
    return None


def _leaf_justifications(s: Sentence, kb: KnowledgeBase, system: System) -> list:
    out = []
    if s in kb.sentences:
        out.append(ASSUMPTION)
    r = _axiom_rule_for(s, system)
    if r is not None and s.subject in kb.universe:
        out.append(RuleApp(r, ()))
    return out


# ---------------------------------------------------------------------------
# Annotation enumeration and the check
# ---------------------------------------------------------------------------

def sorites_annotations(sentences: tuple[Sentence, ...], kb: KnowledgeBase,
                        system: System) -> Iterator[tuple]:
    """All sorites annotations of a sentence sequence.

    An annotation assigns each line a leaf justification or an application of
    a system rule whose premises are the immediately preceding one or two
    lines, such that every non-final line is consumed exactly once.
    """
    n = len(sentences)
    if n == 0 or len(set(sentences)) != n:
        return
    unary = [r for r in _UNARY if r in system.rules]
    binary = [r for r in _BINARY if r in system.rules]

    def candidates(i: int) -> list:
        opts = list(_leaf_justifications(sentences[i], kb, system))
        if i >= 1:
            for r in unary:
                if apply_rule(r, (sentences[i - 1],)) == sentences[i]:
                    opts.append(RuleApp(r, (i - 1,)))
        if i >= 2:
            for r in binary:
                if apply_rule(r, (sentences[i - 2], sentences[i - 1])) == sentences[i]:
                    opts.append(RuleApp(r, (i - 2, i - 1)))
                if apply_rule(r, (sentences[i - 1], sentences[i - 2])) == sentences[i]:
                    opts.append(RuleApp(r, (i - 1, i - 2)))
        return opts

    consumed = [False] * n
    chosen: list = [None] * n

    def place(i: int) -> Iterator[tuple]:
        if i == n:
            if all(consumed[:-1]):
                yield tuple(chosen)
            return
        for just in candidates(i):
            prem = just.premises if isinstance(just, RuleApp) else ()
            if any(consumed[p] for p in prem):
                continue
            for p in prem:
                consumed[p] = True
            # a line two behind that is still unconsumed can never be used
            viable = i - 2 < 0 or consumed[i - 2] or i - 2 == n - 1
            if viable:
                chosen[i] = just
                yield from place(i + 1)
            for p in prem:
                consumed[p] = False
        chosen[i] = None

    yield from place(0)


def is_sorites(deriv: Derivation, kb: KnowledgeBase, system: System) -> bool:
    """Valid deduction whose sentence sequence admits a sorites annotation."""
    if system.refutational:
        raise ValueError("soriteses are defined for direct systems")
    if not check_derivation(deriv, kb, system):
        return False
    return next(sorites_annotations(deriv.sentences(), kb, system), None) is not None


def essentially_same(ann1: Iterable, ann2: Iterable) -> bool:
    """Annotations differing at most by swapping assumption and axiom leaves."""
    a1, a2 = tuple(ann1), tuple(ann2)
    if len(a1) != len(a2):
        return False

    def leafish(j) -> bool:
        return isinstance(j, Assumption) or (isinstance(j, RuleApp)
                                             and j.rule in _AXIOMS and not j.premises)

    for j1, j2 in zip(a1, a2):
        if j1 == j2:
            continue
        if not (leafish(j1) and leafish(j2)):
            return False
    return True


# ---------------------------------------------------------------------------
# Exhaustive searches
# ---------------------------------------------------------------------------

def _leaf_pool(kb: KnowledgeBase, system: System) -> list[tuple[Sentence, object]]:
    pool = []
    for s in sorted(kb.sentences):
        pool.append((s, ASSUMPTION))
    for r in _AXIOMS:
        if r in system.rules:
            for t in sorted(kb.universe):
                s = Sentence(AXIOM_QUALITY[r], t, t)
                if s not in kb.sentences:
                    pool.append((s, RuleApp(r, ())))
    return pool


def search_sorites(kb: KnowledgeBase, target: Sentence, system: System,
                   max_len: int = SEARCH_MAX_LEN,
                   budget: int = SEARCH_BUDGET) -> Optional[Derivation]:
    """Breadth-first search over linear folds; shortest sorites first.

    Complete up to the length cap and node budget, which is ample at desk
    scale; returns None when the space is exhausted (or the budget trips)
    without reaching the target.
    """
    if system.refutational:
        raise ValueError("soriteses are defined for direct systems")
    unary = [r for r in _UNARY if r in system.rules]
    binary = [r for r in _BINARY if r in system.rules]
    leaves = _leaf_pool(kb, system)

    queue: deque = deque()
    visited: set = set()
    for s, just in leaves:
        lines = (Line(s, just),)
        if s == target:
            return Derivation(lines)
        key = (s, frozenset((s,)))
        if key not in visited:
            visited.add(key)
            queue.append((s, frozenset((s,)), lines))

    nodes = 0
    while queue:
        head, used, lines = queue.popleft()
        if len(lines) >= max_len:
            continue
        nodes += 1
        if nodes > budget:
            return None
        hi = len(lines) - 1
        for r in unary:
            c = apply_rule(r, (head,))
            if c is None or c in used:
                continue
            new_lines = lines + (Line(c, RuleApp(r, (hi,))),)
            if c == target:
                return Derivation(new_lines)
            key = (c, used | {c})
            if key not in visited:
                visited.add(key)
                queue.append((c, used | {c}, new_lines))
        for leaf, just in leaves:
            if leaf in used:
                continue
            for r in binary:
                for prem, idxs in (((head, leaf), (hi, hi + 1)),
                                   ((leaf, head), (hi + 1, hi))):
                    c = apply_rule(r, prem)
                    if c is None or c in used or c == leaf:
                        continue
                    new_used = used | {leaf, c}
                    new_lines = lines + (Line(leaf, just),
                                         Line(c, RuleApp(r, idxs)))
                    if c == target:
                        return Derivation(new_lines)
                    key = (c, new_used)
                    if key not in visited:
                        visited.add(key)
                        queue.append((c, new_used, new_lines))
    return None


def exists_single_use_tree(kb: KnowledgeBase, target: Sentence, system: System,
                           budget: int = 2_000_000) -> bool:
    """Whether some injective deduction of the target uses every non-final
    line exactly once (equivalently: a proof tree with pairwise distinct node
    sentences).  Soriteses are exactly the order-constrained such trees, so a
    False here rules out soriteses of every length."""
    if system.refutational:
        raise ValueError("defined for direct systems")
    derivable = saturate(kb, system).sentences()
    if target not in derivable:
        return False
    terms = sorted(kb.universe)
    unary = [r for r in _UNARY if r in system.rules]
    binary = [r for r in _BINARY if r in system.rules]
    counter = [0]

    def premise_options(s: Sentence) -> Iterator[tuple[Sentence, ...]]:
        for r in unary:
            # invert the one-premise schemas
            if r is Rule.APC and s.quality == "I":
                yield (Sentence("A", s.predicate, s.subject),)
            elif r is Rule.EC and s.quality == "E":
                yield (Sentence("E", s.predicate, s.subject),)
            elif r is Rule.IC and s.quality == "I":
                yield (Sentence("I", s.predicate, s.subject),)
            elif r is Rule.E_SUB and s.quality == "O":
                yield (Sentence("E", s.subject, s.predicate),)
        a, b = s.subject, s.predicate
        for r in binary:
            for m in terms:
                if r is Rule.BARBARA and s.quality == "A":
                    yield (Sentence("A", a, m), Sentence("A", m, b))
                elif r is Rule.CELARENT and s.quality == "E":
                    yield (Sentence("A", a, m), Sentence("E", m, b))
                elif r is Rule.DARII and s.quality == "I":
                    yield (Sentence("I", a, m), Sentence("A", m, b))
                elif r is Rule.FERIO and s.quality == "O":
                    yield (Sentence("I", a, m), Sentence("E", m, b))
                elif r is Rule.BAROCO and s.quality == "O":
                    yield (Sentence("O", a, m), Sentence("A", b, m))
                elif r is Rule.BOCARDO and s.quality == "O":
                    yield (Sentence("A", m, a), Sentence("O", m, b))
                elif r is Rule.FERISON and s.quality == "O":
                    yield (Sentence("I", m, a), Sentence("E", m, b))

    def proofs(s: Sentence, used: frozenset) -> Iterator[frozenset]:
        """All used-sets extending ``used`` by a tree for ``s`` (backtracking
        over alternative subproofs keeps the search complete)."""
        counter[0] += 1
        if counter[0] > budget:
            raise RuntimeError("single-use tree search budget exceeded")
        if s in used:
            return
        used = used | {s}
        if s in kb.sentences or _axiom_rule_for(s, system) is not None:
            # taking the leaf consumes the least; it subsumes derived options
            yield used
            return
        for prems in premise_options(s):
            if any(p in used or p not in derivable for p in prems):
                continue
            if len(prems) == 1:
                yield from proofs(prems[0], used)
            elif prems[0] != prems[1]:
                for u1 in proofs(prems[0], used):
                    yield from proofs(prems[1], u1)

    return next(proofs(target, frozenset()), None) is not None


# ---------------------------------------------------------------------------
# Synthesis (constructive)
# ---------------------------------------------------------------------------

class _Clash(Exception):
    """A candidate construction produced a duplicate line or missed its
    target; the caller moves on to the next candidate."""


class _Fold:
    def __init__(self, kb: KnowledgeBase, system: System):
        self.kb = kb
        self.system = system
        self.lines: list[Line] = []
        self.seen: set[Sentence] = set()

    @property
    def head(self) -> Optional[Sentence]:
        return self.lines[-1].sentence if self.lines else None

    def _push(self, s: Sentence, just) -> None:
        if s in self.seen:
            raise _Clash(s)
        self.lines.append(Line(s, just))
        self.seen.add(s)

    def leaf(self, s: Sentence) -> None:
        justs = _leaf_justifications(s, self.kb, self.system)
        if not justs:
            raise _Clash(s)
        self._push(s, justs[0])

    def unary(self, rule: Rule) -> None:
        c = apply_rule(rule, (self.head,))
        if c is None:
            raise _Clash(rule)
        self._push(c, RuleApp(rule, (len(self.lines) - 1,)))

    def combine(self, rule: Rule, leaf: Sentence, head_first: bool = True) -> None:
        hi = len(self.lines) - 1
        prem = (self.head, leaf) if head_first else (leaf, self.head)
        c = apply_rule(rule, prem)
        if c is None:
            raise _Clash(rule)
        self.leaf(leaf)
        idxs = (hi, hi + 1) if head_first else (hi + 1, hi)
        self._push(c, RuleApp(rule, idxs))

    def done(self, target: Sentence) -> Derivation:
        if self.head != target:
            raise _Clash(target)
        return Derivation(tuple(self.lines))


def _A(a, b):
    return Sentence("A", a, b)


def _fold_chain_A(fold: _Fold, chain: list[int]) -> None:
    """Case-style fold of a membership chain into head A(chain[0], chain[-1])."""
    if len(chain) == 1:
        fold.leaf(_A(chain[0], chain[0]))
        return
    fold.leaf(_A(chain[0], chain[1]))
    for i in range(1, len(chain) - 1):
        fold.combine(Rule.BARBARA, _A(chain[i], chain[i + 1]), head_first=True)


def _darii_walk(fold: _Fold, chain: list[int]) -> None:
    """head I(x, chain[0]) --> I(x, chain[-1])."""
    for i in range(len(chain) - 1):
        fold.combine(Rule.DARII, _A(chain[i], chain[i + 1]), head_first=True)


def _celarent_backwalk(fold: _Fold, chain: list[int]) -> None:
    """head E(chain[-1], w) --> E(chain[0], w)."""
    for i in range(len(chain) - 2, -1, -1):
        fold.combine(Rule.CELARENT, _A(chain[i], chain[i + 1]), head_first=False)


def _baroco_backwalk(fold: _Fold, chain: list[int]) -> None:
    """head O(x, chain[-1]) --> O(x, chain[0])."""
    for i in range(len(chain) - 2, -1, -1):
        fold.combine(Rule.BAROCO, _A(chain[i], chain[i + 1]), head_first=True)


def _bocardo_walk(fold: _Fold, chain: list[int]) -> None:
    """head O(chain[0], y) --> O(chain[-1], y)."""
    for i in range(len(chain) - 1):
        fold.combine(Rule.BOCARDO, _A(chain[i], chain[i + 1]), head_first=False)


class _Reach:
    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        cr = saturate(kb, D)
        self._cr = cr
        self._pos = {t: i for i, t in enumerate(cr.term_index)}

    def __call__(self, a: int, b: int) -> bool:
        return bool(self._cr.relA[self._pos[a], self._pos[b]])


def _shared_root_chains(kb: KnowledgeBase, root: int, x: int, y: int
                        ) -> Optional[tuple[list[int], list[int]]]:
    """Chains root->x and root->y sharing only their first vertex, found by
    re-rooting at the last vertex of the first chain lying on the second."""
    p = find_chain(kb, root, x)
    q = find_chain(kb, root, y)
    if p is None or q is None:
        return None
    qset = set(q)
    w = next(v for v in reversed(p) if v in qset)
    p2 = p[p.index(w):]
    q2 = q[q.index(w):]
    return p2, q2


def _candidate(builder) -> Optional[Derivation]:
    try:
        return builder()
    except _Clash:
        return None


def _synth_A(kb: KnowledgeBase, system: System, s: Sentence) -> Optional[Derivation]:
    chain = find_chain(kb, s.subject, s.predicate)
    if chain is None:
        return None

    def build():
        fold = _Fold(kb, system)
        _fold_chain_A(fold, chain)
        return fold.done(s)

    return _candidate(build)


def _synth_I(kb: KnowledgeBase, system: System, s: Sentence,
             reach: _Reach) -> Optional[Derivation]:
    a, b = s.subject, s.predicate
    if s in kb.sentences:
        fold = _Fold(kb, system)
        fold.leaf(s)
        return fold.done(s)
    if reach(b, a):
        def build():
            fold = _Fold(kb, system)
            _fold_chain_A(fold, find_chain(kb, b, a))
            fold.unary(Rule.APC)
            return fold.done(s)
        got = _candidate(build)
        if got is not None:
            return got
    if Rule.DARII not in system.rules:
        return None
    # common-lower-bound route
    for v in sorted(kb.universe):
        if reach(v, a) and reach(v, b):
            chains = _shared_root_chains(kb, v, a, b)
            if chains is None:
                continue
            pa, pb = chains

            def build():
                fold = _Fold(kb, system)
                _fold_chain_A(fold, pa)
                fold.unary(Rule.APC)           # I(a, root)
                _darii_walk(fold, pb)          # I(a, b)
                return fold.done(s)

            got = _candidate(build)
            if got is not None:
                return got
    # seed routes
    for seed in sorted(x for x in kb.sentences if x.quality == "I"):
        u, v = seed.subject, seed.predicate
        for (ua, vb) in (((u, v)), ((v, u))):
            if not (reach(ua, a) and reach(vb, b)):
                continue
            cu = find_chain(kb, ua, a)
            cv = find_chain(kb, vb, b)
            if cu is None or cv is None:
                continue

            def build():
                fold = _Fold(kb, system)
                fold.leaf(seed)
                if fold.head != Sentence("I", ua, vb):
                    fold.unary(Rule.IC)
                _darii_walk(fold, cv)          # I(ua, b)
                if fold.head != s:
                    fold.unary(Rule.IC)        # I(b, ua)
                    _darii_walk(fold, cu)      # I(b, a)
                    fold.unary(Rule.IC)
                return fold.done(s)

            got = _candidate(build)
            if got is not None:
                return got
    return None


def _e_seed_orientations(kb: KnowledgeBase):
    for seed in sorted(x for x in kb.sentences if x.quality == "E"):
        u, v = seed.subject, seed.predicate
        yield seed, (u, v)
        if u != v:
            yield seed, (v, u)


def _synth_E(kb: KnowledgeBase, system: System, s: Sentence,
             reach: _Reach) -> Optional[Derivation]:
    a, b = s.subject, s.predicate
    if s in kb.sentences:
        fold = _Fold(kb, system)
        fold.leaf(s)
        return fold.done(s)
    for seed, (p, q) in _e_seed_orientations(kb):
        if not (reach(a, p) and reach(b, q)):
            continue
        ca = find_chain(kb, a, p)
        cb = find_chain(kb, b, q)
        if ca is None or cb is None:
            continue

        def build_a_first():
            fold = _Fold(kb, system)
            fold.leaf(seed)
            if fold.head != Sentence("E", p, q):
                fold.unary(Rule.EC)
            _celarent_backwalk(fold, ca)       # E(a, q)
            if fold.head != s:
                fold.unary(Rule.EC)            # E(q, a)
                _celarent_backwalk(fold, cb)   # E(b, a)
                if fold.head != s:
                    fold.unary(Rule.EC)
            return fold.done(s)

        def build_b_first():
            fold = _Fold(kb, system)
            fold.leaf(seed)
            if fold.head != Sentence("E", q, p):
                fold.unary(Rule.EC)
            _celarent_backwalk(fold, cb)       # E(b, p)
            if fold.head != s:
                fold.unary(Rule.EC)            # E(p, b)
                _celarent_backwalk(fold, ca)   # E(a, b)
                if fold.head != s:
                    fold.unary(Rule.EC)
            return fold.done(s)

        for builder in (build_a_first, build_b_first):
            got = _candidate(builder)
            if got is not None:
                return got
    return None


def _e_phase(fold: _Fold, seed: Sentence, cp: int, chain_b: list[int]) -> None:
    """From an E seed over {cp, chain_b[-1]} reach head E(cp, chain_b[0])."""
    b = chain_b[0]
    bp = chain_b[-1]
    fold.leaf(seed)
    if len(chain_b) > 1:
        if fold.head != Sentence("E", bp, cp):
            fold.unary(Rule.EC)
        _celarent_backwalk(fold, chain_b)      # E(b, cp)
        fold.unary(Rule.EC)                    # E(cp, b)
    else:
        if fold.head != Sentence("E", cp, b):
            fold.unary(Rule.EC)
    if fold.head != Sentence("E", cp, b):
        raise _Clash(seed)


def _synth_O(kb: KnowledgeBase, system: System, s: Sentence,
             reach: _Reach) -> Optional[Derivation]:
    a, b = s.subject, s.predicate
    if s in kb.sentences:
        fold = _Fold(kb, system)
        fold.leaf(s)
        return fold.done(s)
    if Rule.BAROCO not in system.rules:
        return None
    # route via an O member
    for seed in sorted(x for x in kb.sentences if x.quality == "O"):
        u, v = seed.subject, seed.predicate
        if not (reach(u, a) and reach(b, v)):
            continue
        cu = find_chain(kb, u, a)
        cb = find_chain(kb, b, v)

        def build():
            fold = _Fold(kb, system)
            fold.leaf(seed)
            _bocardo_walk(fold, cu)            # O(a, v)
            _baroco_backwalk(fold, cb)         # O(a, b)
            return fold.done(s)

        got = _candidate(build)
        if got is not None:
            return got
    # route via a derivable overlap meeting a derivable exclusion
    dq = saturate(kb, D_PRIME)
    pos = {t: i for i, t in enumerate(dq.term_index)}
    for c in sorted(kb.universe):
        if not (dq.relI[pos[c], pos[a]] and dq.relE[pos[c], pos[b]]):
            continue
        for eseed, (cp, bp) in _e_seed_orientations(kb):
            if not (reach(c, cp) and reach(b, bp)):
                continue
            chain_b = find_chain(kb, b, bp)
            if chain_b is None:
                continue
            # lower-bound reading of the overlap
            for c2 in sorted(kb.universe):
                if not (reach(c2, cp) and reach(c2, a)):
                    continue
                chains = _shared_root_chains(kb, c2, cp, a)
                if chains is None:
                    continue
                cy, cz = chains

                def build_ferio():
                    if (eseed.subject, eseed.predicate) != (cp, bp):
                        raise _Clash(eseed)
                    fold = _Fold(kb, system)
                    _fold_chain_A(fold, cz)            # A(root, a)
                    fold.unary(Rule.APC)               # I(a, root)
                    _darii_walk(fold, cy)              # I(a, cp)
                    fold.combine(Rule.FERIO, eseed, head_first=True)   # O(a, bp)
                    _baroco_backwalk(fold, chain_b)    # O(a, b)
                    return fold.done(s)

                def build_esub():
                    if Rule.E_SUB not in system.rules:
                        raise _Clash(Rule.E_SUB)
                    fold = _Fold(kb, system)
                    _e_phase(fold, eseed, cp, chain_b)  # E(cp, b)
                    _celarent_backwalk(fold, cy)        # E(root, b)
                    fold.unary(Rule.E_SUB)              # O(root, b)
                    _bocardo_walk(fold, cz)             # O(a, b)
                    return fold.done(s)

                for builder in (build_ferio, build_esub):
                    got = _candidate(builder)
                    if got is not None:
                        return got
            # seed reading of the overlap
            for iseed in sorted(x for x in kb.sentences if x.quality == "I"):
                w, z = iseed.subject, iseed.predicate
                for (c2, ap) in ((w, z), (z, w)):
                    if not (reach(c2, c) and reach(ap, a)):
                        continue
                    cy = find_chain(kb, c2, cp)
                    cz = find_chain(kb, ap, a)
                    if cy is None or cz is None:
                        continue

                    def build_seeded():
                        fold = _Fold(kb, system)
                        _e_phase(fold, eseed, cp, chain_b)   # E(cp, b)
                        _celarent_backwalk(fold, cy)         # E(c2, b)
                        if (iseed.subject, iseed.predicate) == (ap, c2):
                            fold.combine(Rule.FERIO, iseed, head_first=False)
                        else:
                            if Rule.FERISON not in system.rules:
                                raise _Clash(Rule.FERISON)
                            fold.combine(Rule.FERISON, iseed, head_first=False)
                        _bocardo_walk(fold, cz)              # O(a, b)
                        return fold.done(s)

                    got = _candidate(build_seeded)
                    if got is not None:
                        return got
    return None


def synthesize_sorites(kb: KnowledgeBase, s: Sentence,
                       system: System = D_DOUBLE) -> Optional[Derivation]:
    """A sorites of ``s``, or None when none is found.

    Affirmative targets always admit one when derivable; negative targets do
    when the base is consistent (universal negatives in every system here;
    particular negatives in the extended system).  Requests for the
    ten-rule system are served with the full twelve-rule set, whose
    derivability relation agrees with it.  Outside those provisos a bounded
    exhaustive fold search decides.
    """
    if system.name not in ("d", "d'", "d''"):
        raise ValueError("soriteses are defined for d, d' and d''")
    eff = D if system.name == "d" else D_DOUBLE
    if not derives(kb, s, eff):
        return None
    reach = _Reach(kb)
    if s.quality == "A":
        got = _synth_A(kb, eff, s)
    elif s.quality == "I":
        got = _synth_I(kb, eff if eff is D_DOUBLE else D, s, reach)
    elif s.quality == "E":
        got = _synth_E(kb, eff, s, reach) if (consistent(kb, D) or s in kb.sentences) \
            else None
    else:
        got = _synth_O(kb, eff, s, reach) if (consistent(kb, D) or s in kb.sentences) \
            else None
    if got is not None and is_sorites(got, kb, eff):
        return got
    return search_sorites(kb, s, eff)


def ds_refutation(kb: KnowledgeBase
                  ) -> Optional[tuple[Sentence, Derivation, Derivation]]:
    """For an inconsistent base: a sentence with sorites deductions of both it
    and its contradictory, in the base five-rule system."""
    pair = contradiction_pair(kb, D)
    if pair is None:
        return None
    reach = _Reach(kb)
    sigma, hat = pair
    if sigma.quality == "A":
        d1 = _synth_A(kb, D, sigma)
        fold = _Fold(kb, D)
        fold.leaf(hat)
        d2 = fold.done(hat)
        assert d1 is not None
        return sigma, d1, d2
    # sigma = Exy with Ixy also derivable
    d2 = _synth_I(kb, D, hat, reach)
    d1 = _synth_E(kb, D, sigma, reach)
    if d1 is not None and d2 is not None:
        return sigma, d1, d2
    # every decomposition's chains overlap: refute the shared-vertex pair
    a, b = sigma.subject, sigma.predicate
    for seed, (p, q) in _e_seed_orientations(kb):
        if not (reach(a, p) and reach(b, q)):
            continue
        ca = find_chain(kb, a, p)
        cb = find_chain(kb, b, q)
        if ca is None or cb is None:
            continue
        shared = [v for v in ca if v in set(cb)]
        if not shared:
            continue
        w = shared[0]
        sig2 = Sentence("E", p, w)
        hat2 = contradictory(sig2)
        chain_wq = find_chain(kb, w, q)
        chain_wp = find_chain(kb, w, p)
        if chain_wq is None or chain_wp is None:
            continue

        def build_e():
            fold = _Fold(kb, D)
            _e_phase(fold, seed, p, chain_wq)   # E(p, w)
            return fold.done(sig2)

        def build_i():
            fold = _Fold(kb, D)
            _fold_chain_A(fold, chain_wp)       # A(w, p)
            fold.unary(Rule.APC)                # I(p, w)
            return fold.done(hat2)

        e2 = _candidate(build_e)
        i2 = _candidate(build_i)
        if e2 is not None and i2 is not None:
            return sig2, e2, i2
    # fall back to exhaustive search for both halves
    d1 = search_sorites(kb, sigma, D)
    d2 = search_sorites(kb, hat, D)
    if d1 is not None and d2 is not None:
        return sigma, d1, d2
    return None
