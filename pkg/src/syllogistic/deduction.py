"""Deduction calculi over categorical sentences.

Implements the direct systems (d and its extensions d', d'', plus the weak
and proper variants wd, pd), rule-deleted subsystems, closure computation as
bit-matrix saturation with a reachability fast path, consistency decisions,
derivation extraction and checking, the refutational consequence family
(g, g', g''), and sequent-style proofs with reductio.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .core import (KnowledgeBase, Sentence, contradictory, essential_terms,
                   is_plainly_contradictory)


class Rule(Enum):
    A_ID = "A-Id"
    APC = "Apc"
    EC = "Ec"
    BARBARA = "Barbara"
    CELARENT = "Celarent"
    IC = "Ic"
    DARII = "Darii"
    FERIO = "Ferio"
    BAROCO = "Baroco"
    BOCARDO = "Bocardo"
    E_SUB = "E-sub"
    FERISON = "Ferison"
    I_ID = "I-Id"
    O_ID = "O-Id"
    CO = "Co"
    A_ID_SEQ = "A-Id'"
    APC_SEQ = "Apc'"
    EC_SEQ = "Ec'"
    BARBARA_SEQ = "Barbara'"
    CELARENT_SEQ = "Celarent'"
    ASS = "Ass"
    RAA = "Raa"

    def __str__(self) -> str:
        return self.value


ARITY = {
    Rule.A_ID: 0, Rule.I_ID: 0, Rule.O_ID: 0,
    Rule.APC: 1, Rule.EC: 1, Rule.IC: 1, Rule.E_SUB: 1,
    Rule.BARBARA: 2, Rule.CELARENT: 2, Rule.DARII: 2, Rule.FERIO: 2,
    Rule.BAROCO: 2, Rule.BOCARDO: 2, Rule.FERISON: 2, Rule.CO: 2,
    Rule.A_ID_SEQ: 0, Rule.ASS: 0,
    Rule.APC_SEQ: 1, Rule.EC_SEQ: 1,
    Rule.BARBARA_SEQ: 2, Rule.CELARENT_SEQ: 2, Rule.RAA: 2,
}

AXIOM_QUALITY = {Rule.A_ID: "A", Rule.I_ID: "I", Rule.O_ID: "O"}

# Tie-break order for provenance extraction.
DIRECT_RULE_ORDER = (
    Rule.A_ID, Rule.I_ID, Rule.O_ID, Rule.APC, Rule.EC, Rule.BARBARA,
    Rule.CELARENT, Rule.IC, Rule.DARII, Rule.FERIO, Rule.BAROCO,
    Rule.BOCARDO, Rule.E_SUB, Rule.FERISON,
)

SEQUENT_OF = {
    Rule.A_ID: Rule.A_ID_SEQ, Rule.APC: Rule.APC_SEQ, Rule.EC: Rule.EC_SEQ,
    Rule.BARBARA: Rule.BARBARA_SEQ, Rule.CELARENT: Rule.CELARENT_SEQ,
}
DIRECT_OF_SEQUENT = {v: k for k, v in SEQUENT_OF.items()}


@dataclass(frozen=True)
class System:
    """A named rule set, optionally refutational, optionally rule-deleted."""

    name: str
    rules: frozenset[Rule]
    refutational: bool = False
    removed: Optional[Rule] = None

    def without(self, rule: Rule) -> "System":
        if rule not in self.rules:
            raise ValueError(f"{rule} is not a rule of {self.name}")
        if self.removed is not None:
            raise ValueError("only single-rule deletion is supported")
        return System(f"{self.name}-{rule.value}", self.rules - {rule},
                      self.refutational, rule)

    def __str__(self) -> str:
        return self.name


_D_RULES = frozenset({Rule.A_ID, Rule.APC, Rule.EC, Rule.BARBARA, Rule.CELARENT})
_DP_RULES = _D_RULES | {Rule.IC, Rule.DARII, Rule.FERIO, Rule.BAROCO, Rule.BOCARDO}
_DPP_RULES = _DP_RULES | {Rule.E_SUB, Rule.FERISON}
_WD_RULES = _D_RULES - {Rule.A_ID}
_PD_RULES = _WD_RULES | {Rule.I_ID, Rule.O_ID}
_GPP_RULES = frozenset({Rule.A_ID_SEQ, Rule.APC_SEQ, Rule.EC_SEQ,
                        Rule.BARBARA_SEQ, Rule.CELARENT_SEQ, Rule.ASS, Rule.RAA})

D = System("d", _D_RULES)
D_PRIME = System("d'", _DP_RULES)
D_DOUBLE = System("d''", _DPP_RULES)
WD = System("wd", _WD_RULES)
PD = System("pd", _PD_RULES)
G = System("g", _D_RULES, refutational=True)
G_PRIME = System("g'", _DP_RULES | {Rule.CO}, refutational=True)
G_DOUBLE = System("g''", _GPP_RULES, refutational=True)

SYSTEMS = {s.name: s for s in (D, D_PRIME, D_DOUBLE, WD, PD, G, G_PRIME, G_DOUBLE)}
DIRECT_SYSTEMS = (D, D_PRIME, D_DOUBLE, WD, PD)
_D_FAMILY_NAMES = {"d", "d'", "d''"}


class EssentialScopeError(ValueError):
    """Entailment queries reject bases with a reflexive negative sentence over
    a term outside the essential set; the decision procedure's scope excludes
    those inputs."""


# ---------------------------------------------------------------------------
# Rule application
# ---------------------------------------------------------------------------

def apply_rule(rule: Rule, premises: Sequence[Sentence],
               term: Optional[int] = None) -> Optional[Sentence]:
    """Conclusion of one rule application, or None when the schema fails.

    Axiom rules (A-Id, I-Id, O-Id) take no premises and an explicit ``term``.
    ``Co``'s conclusion is not a function of its premises and is handled by
    the derivation checker instead.
    """
    arity = ARITY.get(rule)
    if arity is None:
        raise ValueError(f"{rule} has no premise schema")
    if rule in (Rule.CO, Rule.RAA, Rule.ASS) or rule in DIRECT_OF_SEQUENT or rule is Rule.A_ID_SEQ:
        raise ValueError(f"{rule} is not a schema-applicable direct rule")
    if len(premises) != arity:
        raise ValueError(f"{rule} takes {arity} premises, got {len(premises)}")

    if arity == 0:
        if term is None:
            raise ValueError(f"{rule} needs a target term")
        return Sentence(AXIOM_QUALITY[rule], term, term)

    if arity == 1:
        (p,) = premises
        if rule is Rule.APC and p.quality == "A":
            return Sentence("I", p.predicate, p.subject)
        if rule is Rule.EC and p.quality == "E":
            return Sentence("E", p.predicate, p.subject)
        if rule is Rule.IC and p.quality == "I":
            return Sentence("I", p.predicate, p.subject)
        if rule is Rule.E_SUB and p.quality == "E":
            return Sentence("O", p.subject, p.predicate)
        return None

    p, q = premises
    if rule is Rule.BARBARA:
        if p.quality == "A" and q.quality == "A" and p.predicate == q.subject:
            return Sentence("A", p.subject, q.predicate)
    elif rule is Rule.CELARENT:
        if p.quality == "A" and q.quality == "E" and p.predicate == q.subject:
            return Sentence("E", p.subject, q.predicate)
    elif rule is Rule.DARII:
        if p.quality == "I" and q.quality == "A" and p.predicate == q.subject:
            return Sentence("I", p.subject, q.predicate)
    elif rule is Rule.FERIO:
        if p.quality == "I" and q.quality == "E" and p.predicate == q.subject:
            return Sentence("O", p.subject, q.predicate)
    elif rule is Rule.BAROCO:
        if p.quality == "O" and q.quality == "A" and p.predicate == q.predicate:
            return Sentence("O", p.subject, q.subject)
    elif rule is Rule.BOCARDO:
        if p.quality == "A" and q.quality == "O" and p.subject == q.subject:
            return Sentence("O", p.predicate, q.predicate)
    elif rule is Rule.FERISON:
        if p.quality == "I" and q.quality == "E" and p.subject == q.subject:
            return Sentence("O", p.predicate, q.predicate)
    return None


# ---------------------------------------------------------------------------
# Saturation
# ---------------------------------------------------------------------------

def _bmm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # Boolean matrix product; float32 keeps BLAS in play for large bases.
    if not a.any() or not b.any():
        return np.zeros((a.shape[0], b.shape[1]), dtype=bool)
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


def _tc_squaring(adj: np.ndarray) -> np.ndarray:
    t = adj.copy()
    while True:
        nxt = t | _bmm(t, t)
        if (nxt == t).all():
            return t
        t = nxt


def _tc_scc(adj: np.ndarray) -> np.ndarray:
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import connected_components

    n = adj.shape[0]
    ncomp, labels = connected_components(csr_matrix(adj), directed=True,
                                         connection="strong")
    comp_adj = np.zeros((ncomp, ncomp), bool)
    src, dst = np.nonzero(adj)
    comp_adj[labels[src], labels[dst]] = True
    np.fill_diagonal(comp_adj, False)

    indeg = comp_adj.sum(axis=0)
    order = [c for c in range(ncomp) if indeg[c] == 0]
    seen = 0
    while seen < len(order):
        c = order[seen]
        seen += 1
        for d in np.nonzero(comp_adj[c])[0]:
            indeg[d] -= 1
            if indeg[d] == 0:
                order.append(int(d))

    reach = np.eye(ncomp, dtype=bool)
    for c in reversed(order):
        succ = np.nonzero(comp_adj[c])[0]
        for d in succ:
            reach[c] |= reach[d]
    full = reach[labels][:, labels]
    # paths of length >= 1 only: strip spurious reflexive pairs
    sizes = np.bincount(labels, minlength=ncomp)
    diag_ok = (sizes[labels] >= 2) | np.diag(adj)
    np.fill_diagonal(full, diag_ok)
    return full


def _transitive_closure(adj: np.ndarray) -> np.ndarray:
    """All-pairs reachability by paths with at least one edge."""
    if adj.shape[0] >= 192:
        return _tc_scc(adj)
    return _tc_squaring(adj)


@dataclass(eq=False)
class ClosureRelations:
    """Four boolean matrices over an indexed term universe."""

    term_index: tuple[int, ...]
    relA: np.ndarray
    relE: np.ndarray
    relI: np.ndarray
    relO: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "_pos", {t: i for i, t in enumerate(self.term_index)})

    def _mat(self, quality: str) -> np.ndarray:
        return {"A": self.relA, "E": self.relE, "I": self.relI, "O": self.relO}[quality]

    def contains(self, s: Sentence) -> bool:
        pos = self._pos
        if s.subject not in pos or s.predicate not in pos:
            return False
        return bool(self._mat(s.quality)[pos[s.subject], pos[s.predicate]])

    def pair_sets(self) -> dict[str, set[tuple[int, int]]]:
        out = {}
        terms = self.term_index
        for q in "AEIO":
            rows, cols = np.nonzero(self._mat(q))
            out[q] = {(terms[i], terms[j]) for i, j in zip(rows.tolist(), cols.tolist())}
        return out

    def sentences(self) -> frozenset[Sentence]:
        out = []
        for q, pairs in self.pair_sets().items():
            out.extend(Sentence(q, a, b) for a, b in pairs)
        return frozenset(out)

    def to_json(self, kb: KnowledgeBase) -> dict:
        return {
            "terms": [kb.symbols[t] for t in self.term_index],
            "A": self.relA.astype(int).tolist(),
            "E": self.relE.astype(int).tolist(),
            "I": self.relI.astype(int).tolist(),
            "O": self.relO.astype(int).tolist(),
        }


def _seed_matrices(kb: KnowledgeBase, terms: list[int]):
    n = len(terms)
    pos = {t: i for i, t in enumerate(terms)}
    mats = {q: np.zeros((n, n), dtype=bool) for q in "AEIO"}
    for s in kb.sentences:
        mats[s.quality][pos[s.subject], pos[s.predicate]] = True
    return mats


def _closed_form(rules: frozenset[Rule], seeds, n: int):
    eye = np.eye(n, dtype=bool)
    core = _transitive_closure(seeds["A"])
    rhat = core | eye
    A = rhat if Rule.A_ID in rules else core
    E = _bmm(_bmm(rhat, seeds["E"] | seeds["E"].T), rhat.T)
    if Rule.IC in rules:
        I = _bmm(rhat.T, rhat) | _bmm(_bmm(rhat.T, seeds["I"] | seeds["I"].T), rhat)
        O = _bmm(I, E) | _bmm(_bmm(rhat.T, seeds["O"]), rhat.T)
        if Rule.E_SUB in rules:
            O = O | E
    else:
        I = seeds["I"] | A.T
        if Rule.I_ID in rules:
            I = I | eye
        O = seeds["O"].copy()
        if Rule.O_ID in rules:
            O = O | eye
    return A, E, I, O


def _generic_fixpoint(rules: frozenset[Rule], seeds, n: int):
    eye = np.eye(n, dtype=bool)
    A, E, I, O = (seeds[q].copy() for q in "AEIO")
    while True:
        before = (A.sum(), E.sum(), I.sum(), O.sum())
        if Rule.A_ID in rules:
            A |= eye
        if Rule.BARBARA in rules:
            A |= _bmm(A, A)
        if Rule.APC in rules:
            I |= A.T
        if Rule.EC in rules:
            E |= E.T
        if Rule.CELARENT in rules:
            E |= _bmm(A, E)
        if Rule.IC in rules:
            I |= I.T
        if Rule.DARII in rules:
            I |= _bmm(I, A)
        if Rule.I_ID in rules:
            I |= eye
        if Rule.FERIO in rules:
            O |= _bmm(I, E)
        if Rule.BAROCO in rules:
            O |= _bmm(O, A.T)
        if Rule.BOCARDO in rules:
            O |= _bmm(A.T, O)
        if Rule.E_SUB in rules:
            O |= E
        if Rule.FERISON in rules:
            O |= _bmm(I.T, E)
        if Rule.O_ID in rules:
            O |= eye
        if (A.sum(), E.sum(), I.sum(), O.sum()) == before:
            return A, E, I, O


_STANDARD_RULESETS = {_D_RULES, _DP_RULES, _DPP_RULES, _WD_RULES, _PD_RULES}


def saturate(kb: KnowledgeBase, system: System = D) -> ClosureRelations:
    """Closure of the base under the system's rules, over the base's universe.

    Axiom rules quantify over the (finite) session universe only.  Standard
    rule sets go through reachability closed forms; rule-deleted variants go
    through a generic matrix fixpoint.
    """
    if system.refutational:
        raise ValueError(f"{system.name} is not a direct system; use closure()")
    terms = sorted(kb.universe)
    seeds = _seed_matrices(kb, terms)
    n = len(terms)
    if system.removed is None and system.rules in _STANDARD_RULESETS:
        A, E, I, O = _closed_form(system.rules, seeds, n)
    else:
        A, E, I, O = _generic_fixpoint(system.rules, seeds, n)
    return ClosureRelations(tuple(terms), A, E, I, O)


# ---------------------------------------------------------------------------
# Consistency
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Consistent:
    pass


@dataclass(frozen=True)
class Contradictory:
    """Both ``sentence`` and its contradictory ``opposite`` are derivable."""
    sentence: Sentence
    opposite: Sentence


@dataclass(frozen=True)
class PlainlyContradictory:
    witness: Sentence


ConsistencyResult = Union[Consistent, Contradictory, PlainlyContradictory]


def _first_pair(cr: ClosureRelations) -> Optional[tuple[Sentence, Sentence]]:
    terms = cr.term_index
    both = cr.relA & cr.relO
    if both.any():
        i, j = np.argwhere(both)[0]
        a, b = terms[i], terms[j]
        return Sentence("A", a, b), Sentence("O", a, b)
    both = cr.relE & cr.relI
    if both.any():
        i, j = np.argwhere(both)[0]
        a, b = terms[i], terms[j]
        return Sentence("E", a, b), Sentence("I", a, b)
    return None


def contradiction_pair(kb: KnowledgeBase, system: System) -> Optional[tuple[Sentence, Sentence]]:
    """Some (sigma, contradictory-of-sigma) pair in the closure, if any."""
    return _first_pair(saturate(kb, system))


def is_consistent(kb: KnowledgeBase, flavor: System = D) -> ConsistencyResult:
    """Decide consistency under a direct system.

    For d, d' and d'' a reflexive negative member short-circuits the search
    and saturation is restricted to the essential terms; wd and pd saturate
    the full universe (their axioms make non-essential terms matter).
    """
    if flavor.refutational:
        raise ValueError("consistency of the refutational family coincides with d")
    if flavor.removed is None and flavor.name in _D_FAMILY_NAMES:
        plain = is_plainly_contradictory(kb)
        if plain is not None:
            return PlainlyContradictory(plain)
        pair = contradiction_pair(kb.restricted(essential_terms(kb)), flavor)
    else:
        pair = contradiction_pair(kb, flavor)
    if pair is None:
        return Consistent()
    return Contradictory(*pair)


def consistent(kb: KnowledgeBase, flavor: System = D) -> bool:
    return isinstance(is_consistent(kb, flavor), Consistent)


# ---------------------------------------------------------------------------
# Derivability
# ---------------------------------------------------------------------------

def derives(kb: KnowledgeBase, s: Sentence, system: System = D) -> bool:
    """Whether the base yields ``s`` under a direct system."""
    if system.refutational:
        raise ValueError("use g_derives for the refutational family")
    if s.subject not in kb.universe or s.predicate not in kb.universe:
        raise ValueError("query sentence uses a term outside the universe")
    return saturate(kb, system).contains(s)


def g_derives(kb: KnowledgeBase, s: Sentence, variant: System = G) -> bool:
    """Refutational derivability, including rule-deleted variants.

    g itself asks whether adding the contradictory of ``s`` makes the base
    d-inconsistent; the primed variants reduce to direct systems.
    """
    if not variant.refutational:
        raise ValueError("use derives for direct systems")
    if s.subject not in kb.universe or s.predicate not in kb.universe:
        raise ValueError("query sentence uses a term outside the universe")
    base_name = variant.name.split("-", 1)[0]
    removed = variant.removed

    if base_name == "g":
        target = D if removed is None else D.without(removed)
        extended = kb.with_sentences([contradictory(s)])
        return contradiction_pair(extended, target) is not None

    if base_name == "g'":
        if removed is None:
            return g_derives(kb, s, G)
        if removed is Rule.CO:
            return derives(kb, s, D_PRIME)
        dp_r = D_PRIME.without(removed)
        return derives(kb, s, dp_r) or contradiction_pair(kb, dp_r) is not None

    if base_name == "g''":
        if removed is None:
            return g_derives(kb, s, G)
        if removed in DIRECT_OF_SEQUENT:
            return g_derives(kb, s, G.without(DIRECT_OF_SEQUENT[removed]))
        if removed is Rule.ASS:
            empty = KnowledgeBase(frozenset(), kb.universe, kb.symbols)
            return derives(empty, s, D)
        if removed is Rule.RAA:
            return derives(kb, s, D)
    raise ValueError(f"unknown refutational variant {variant.name}")


def closure(kb: KnowledgeBase, system: System = D) -> frozenset[Sentence]:
    """All derivable sentences over the base's universe.

    Direct systems read the saturation matrices.  Refutational systems are
    decided sentence-by-sentence through the refutational definition, so an
    inconsistent base yields every sentence.
    """
    if not system.refutational:
        return saturate(kb, system).sentences()
    out = []
    for a in sorted(kb.universe):
        for b in sorted(kb.universe):
            for q in "AEIO":
                s = Sentence(q, a, b)
                if g_derives(kb, s, system):
                    out.append(s)
    return frozenset(out)


def entails(kb: KnowledgeBase, s: Sentence, system: System = D) -> bool:
    """Guarded entailment: rejects inputs outside the decision procedure's
    stated scope (a reflexive negative sentence over a non-essential term),
    then dispatches to the direct or refutational decision."""
    if system.removed is None and system.name not in ("wd", "pd"):
        ess = essential_terms(kb)
        for t in kb.sentences:
            if t.negative and t.reflexive and t.subject not in ess:
                raise EssentialScopeError(
                    "entailment requires every reflexive negative sentence to "
                    "mention an essential term; offending sentence over term id "
                    f"{t.subject}")
    if system.refutational:
        return g_derives(kb, s, system)
    return derives(kb, s, system)


# ---------------------------------------------------------------------------
# Derivation objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Assumption:
    pass


ASSUMPTION = Assumption()


@dataclass(frozen=True)
class RuleApp:
    rule: Rule
    premises: tuple[int, ...] = ()


Justification = Union[Assumption, RuleApp]


@dataclass(frozen=True)
class Line:
    sentence: Sentence
    justification: Justification


@dataclass(frozen=True)
class Derivation:
    lines: tuple[Line, ...]

    @property
    def conclusion(self) -> Sentence:
        return self.lines[-1].sentence

    def __len__(self) -> int:
        return len(self.lines)

    def sentences(self) -> tuple[Sentence, ...]:
        return tuple(line.sentence for line in self.lines)

    def render(self, kb: KnowledgeBase) -> str:
        out = []
        for k, line in enumerate(self.lines, start=1):
            j = line.justification
            if isinstance(j, Assumption):
                note = "assumption"
            elif not j.premises:
                note = str(j.rule)
            else:
                note = f"{j.rule} " + ",".join(str(i + 1) for i in j.premises)
            out.append(f"{k}. {kb.render_sentence(line.sentence)}  [{note}]")
        return "\n".join(out)


def check_derivation(deriv: Derivation, kb: KnowledgeBase, system: System) -> bool:
    """Every line is an assumption from the base or a correct application of
    a system rule whose premises occur earlier."""
    if system.refutational and system.name.split("-")[0] != "g'":
        return False
    for i, line in enumerate(deriv.lines):
        j = line.justification
        if isinstance(j, Assumption):
            if line.sentence not in kb.sentences:
                return False
            continue
        if j.rule not in system.rules:
            return False
        if any(p < 0 or p >= i for p in j.premises):
            return False
        prem = [deriv.lines[p].sentence for p in j.premises]
        if j.rule is Rule.CO:
            if len(prem) != 2 or prem[1] != contradictory(prem[0]):
                return False
            continue
        if ARITY[j.rule] == 0:
            s = line.sentence
            if j.premises or not s.reflexive or s.quality != AXIOM_QUALITY[j.rule]:
                return False
            if s.subject not in kb.universe:
                return False
            continue
        try:
            concl = apply_rule(j.rule, prem)
        except ValueError:
            return False
        if concl != line.sentence:
            return False
    return True


class ProvenanceClosure:
    """Forward closure recording one deterministic provenance per fact.

    Facts are produced round by round; within a round rules fire in a fixed
    order and premises in canonical sentence order, and the first producer of
    a fact wins.  Extraction then yields a reproducible derivation.
    """

    def __init__(self, kb: KnowledgeBase, system: System):
        if system.refutational:
            raise ValueError("provenance closure is for direct systems")
        self.kb = kb
        self.system = system
        self.provenance: dict[Sentence, Optional[tuple[Rule, tuple[Sentence, ...]]]] = {}
        for s in sorted(kb.sentences):
            self.provenance[s] = None
        self._saturate()

    def _saturate(self):
        rules = [r for r in DIRECT_RULE_ORDER if r in self.system.rules]
        terms = sorted(self.kb.universe)
        while True:
            fresh: dict[Sentence, tuple[Rule, tuple[Sentence, ...]]] = {}
            known = self.provenance
            facts = sorted(known)

            def offer(concl, rule, prem):
                if concl not in known and concl not in fresh:
                    fresh[concl] = (rule, prem)

            for rule in rules:
                arity = ARITY[rule]
                if arity == 0:
                    for t in terms:
                        offer(Sentence(AXIOM_QUALITY[rule], t, t), rule, ())
                elif arity == 1:
                    for p in facts:
                        c = apply_rule(rule, (p,))
                        if c is not None:
                            offer(c, rule, (p,))
                else:
                    for p in facts:
                        for q in facts:
                            c = apply_rule(rule, (p, q))
                            if c is not None:
                                offer(c, rule, (p, q))
            if not fresh:
                return
            self.provenance.update(fresh)

    def derivable(self, s: Sentence) -> bool:
        return s in self.provenance

    def derivation_of(self, s: Sentence) -> Optional[Derivation]:
        if s not in self.provenance:
            return None
        lines: list[Line] = []
        placed: dict[Sentence, int] = {}

        def emit(fact: Sentence) -> int:
            if fact in placed:
                return placed[fact]
            origin = self.provenance[fact]
            if origin is None:
                just: Justification = ASSUMPTION
            else:
                rule, prem = origin
                idxs = tuple(emit(p) for p in prem)
                just = RuleApp(rule, idxs)
            placed[fact] = len(lines)
            lines.append(Line(fact, just))
            return placed[fact]

        emit(s)
        return Derivation(tuple(lines))


from functools import lru_cache


@lru_cache(maxsize=64)
def _provenance(kb: KnowledgeBase, system: System) -> ProvenanceClosure:
    return ProvenanceClosure(kb, system)


def derivation_of(kb: KnowledgeBase, s: Sentence, system: System = D) -> Optional[Derivation]:
    """A checkable derivation of ``s``, or None when it is not derivable."""
    return _provenance(kb, system).derivation_of(s)


# ---------------------------------------------------------------------------
# Substitutability and chains
# ---------------------------------------------------------------------------

def equiv_classes(kb: KnowledgeBase) -> frozenset[frozenset[int]]:
    """Partition of the essential terms by mutual A-derivability."""
    ess = sorted(essential_terms(kb))
    if not ess:
        return frozenset()
    cr = saturate(kb.restricted(ess), D)
    pos = {t: i for i, t in enumerate(cr.term_index)}
    classes: dict[int, set[int]] = {}
    rep: dict[int, int] = {}
    for t in ess:
        for r in rep:
            if cr.relA[pos[t], pos[r]] and cr.relA[pos[r], pos[t]]:
                classes[rep[r]].add(t)
                rep[t] = rep[r]
                break
        else:
            classes[t] = {t}
            rep[t] = t
    return frozenset(frozenset(c) for c in classes.values())


def find_chain(kb: KnowledgeBase, a: int, b: int) -> Optional[list[int]]:
    """Shortest sequence a = c0, ..., ck = b with every ``A c_i c_{i+1}`` in
    the base; ties broken by term id.  Exists iff Aab is d-derivable."""
    if a not in kb.universe or b not in kb.universe:
        raise ValueError("chain endpoints must lie in the universe")
    if a == b:
        return [a]
    succ: dict[int, list[int]] = {}
    for s in kb.sentences:
        if s.quality == "A":
            succ.setdefault(s.subject, []).append(s.predicate)
    for outs in succ.values():
        outs.sort()
    parent = {a: None}
    queue = [a]
    while queue:
        nxt = []
        for u in queue:
            for v in succ.get(u, ()):
                if v not in parent:
                    parent[v] = u
                    if v == b:
                        path = [v]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(v)
        queue = nxt
    return None


# ---------------------------------------------------------------------------
# Sequent proofs (the g'' presentation)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sequent:
    context: frozenset[Sentence]
    conclusion: Sentence


@dataclass(frozen=True)
class SequentLine:
    sequent: Sequent
    rule: Rule
    premises: tuple[int, ...] = ()


SequentDerivation = tuple[SequentLine, ...]


def _lift(deriv: Derivation, context: frozenset[Sentence], offset: int) -> list[SequentLine]:
    out = []
    for line in deriv.lines:
        j = line.justification
        seq = Sequent(context, line.sentence)
        if isinstance(j, Assumption):
            out.append(SequentLine(seq, Rule.ASS))
        else:
            prem = tuple(p + offset for p in j.premises)
            out.append(SequentLine(seq, SEQUENT_OF[j.rule], prem))
    return out


def emit_g2_derivation(kb: KnowledgeBase, s: Sentence) -> Optional[SequentDerivation]:
    """A sequent derivation of (base |- s) when s follows refutationally.

    Direct consequences come out reductio-free; anything else uses reductio
    exactly once, in the final step.
    """
    if s.subject not in kb.universe or s.predicate not in kb.universe:
        raise ValueError("query sentence uses a term outside the universe")
    direct = derivation_of(kb, s, D)
    if direct is not None:
        return tuple(_lift(direct, kb.sentences, 0))
    if not g_derives(kb, s, G):
        return None
    hat = contradictory(s)
    extended = kb.with_sentences([hat])
    pair = contradiction_pair(extended, D)
    assert pair is not None
    rho, rho_hat = pair
    prov = _provenance(extended, D)
    d1 = prov.derivation_of(rho)
    d2 = prov.derivation_of(rho_hat)
    assert d1 is not None and d2 is not None
    ctx = extended.sentences
    lines = _lift(d1, ctx, 0) + _lift(d2, ctx, len(d1))
    final = SequentLine(Sequent(kb.sentences, s), Rule.RAA,
                        (len(d1) - 1, len(d1) + len(d2) - 1))
    return tuple(lines) + (final,)


def check_g2_derivation(lines: Sequence[SequentLine],
                        target: Optional[Sequent] = None) -> bool:
    """Validate a sequent derivation against the seven sequent rule schemas."""
    if not lines:
        return False
    for i, line in enumerate(lines):
        seq, rule, prem = line.sequent, line.rule, line.premises
        if rule not in _GPP_RULES:
            return False
        if any(p < 0 or p >= i for p in prem):
            return False
        if rule is Rule.A_ID_SEQ:
            s = seq.conclusion
            if prem or s.quality != "A" or not s.reflexive:
                return False
        elif rule is Rule.ASS:
            if prem or seq.conclusion not in seq.context:
                return False
        elif rule in (Rule.APC_SEQ, Rule.EC_SEQ):
            if len(prem) != 1:
                return False
            p = lines[prem[0]].sequent
            if p.context != seq.context:
                return False
            if apply_rule(DIRECT_OF_SEQUENT[rule], (p.conclusion,)) != seq.conclusion:
                return False
        elif rule in (Rule.BARBARA_SEQ, Rule.CELARENT_SEQ):
            if len(prem) != 2:
                return False
            p, q = (lines[k].sequent for k in prem)
            if p.context | q.context != seq.context:
                return False
            if apply_rule(DIRECT_OF_SEQUENT[rule], (p.conclusion, q.conclusion)) != seq.conclusion:
                return False
        elif rule is Rule.RAA:
            if len(prem) != 2:
                return False
            p, q = (lines[k].sequent for k in prem)
            if q.conclusion != contradictory(p.conclusion):
                return False
            hat = contradictory(seq.conclusion)
            if hat not in p.context or hat not in q.context:
                return False
            union = p.context | q.context
            if seq.context | {hat} != union:
                return False
            if not (union - {hat}) <= seq.context:
                return False
    if target is not None and lines[-1].sequent != target:
        return False
    return True


def render_sequent(kb: KnowledgeBase, seq: Sequent) -> str:
    ctx = ", ".join(kb.render_sentence(s) for s in kb.sorted_sentences(seq.context))
    return f"{{{ctx}}} |- {kb.render_sentence(seq.conclusion)}"


def render_g2_derivation(kb: KnowledgeBase, lines: Sequence[SequentLine]) -> str:
    out = []
    for k, line in enumerate(lines, start=1):
        if line.premises:
            note = f"{line.rule} " + ",".join(str(i + 1) for i in line.premises)
        else:
            note = str(line.rule)
        out.append(f"{k}. {render_sequent(kb, line.sequent)}  [{note}]")
    return "\n".join(out)
