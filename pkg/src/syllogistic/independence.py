"""Rule-deletion harness: derivability and (weak) independence of rules.

A rule is derivable in a system when every one of its instances is already a
consequence of the instance's antecedents in the rule-deleted system, and
independent otherwise.  It is weakly independent when deleting it loses some
consequence.  Outside the sorites-restricted system the two notions coincide
rule by rule; the harness computes both honestly where they can differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import KnowledgeBase, Sentence
from .deduction import (D, D_DOUBLE, D_PRIME, G, G_DOUBLE, G_PRIME,
                        DIRECT_OF_SEQUENT, SEQUENT_OF, Derivation, Rule,
                        System, contradiction_pair, derives, g_derives)
from .oracle import rule_schema
from .sorites import search_sorites

_SYMS = tuple(f"t{i}" for i in range(4))

SORITES_SYSTEM = "d''s"
REPORT_SYSTEMS = ("d", "d'", "d''", SORITES_SYSTEM, "g", "g'", "g''")


def _restricted_growth(n: int) -> Iterator[tuple[int, ...]]:
    """All ways to identify n schema variables (set partitions as canonical
    index vectors)."""
    def rec(prefix: list[int], mx: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(mx + 2):
            yield from rec(prefix + [v], max(mx, v))
    yield from rec([0], 0) if n else iter([()])


@dataclass(frozen=True)
class RuleInstance:
    premises: tuple[Sentence, ...]
    conclusion: Sentence
    term_count: int

    def kb(self) -> KnowledgeBase:
        return KnowledgeBase(frozenset(self.premises),
                             frozenset(range(self.term_count)),
                             _SYMS[:self.term_count])


def rule_instances(rule: Rule) -> list[RuleInstance]:
    """One instance per identification pattern of the schema variables,
    fresh-distinct first."""
    prems, concl, nvars = rule_schema(rule)
    patterns = sorted(_restricted_growth(nvars),
                      key=lambda p: (len(p) - len(set(p)), p))
    out = []
    for pattern in patterns:
        k = (max(pattern) + 1) if pattern else 1
        ps = tuple(Sentence(q, pattern[i], pattern[j]) for q, i, j in prems)
        c = Sentence(concl[0], pattern[concl[1]], pattern[concl[2]])
        out.append(RuleInstance(ps, c, max(k, 1)))
    return out


def _co_instances() -> list[RuleInstance]:
    """Contradiction-rule instances: a contradictory premise pair and an
    arbitrary conclusion (a representative sample, the classic failing one
    first)."""
    out = []
    pairs = [("A", 0, 1), ("E", 0, 1), ("A", 0, 0), ("E", 0, 0)]
    from .core import contradictory
    first = True
    for q, i, j in pairs:
        rho = Sentence(q, i, j)
        prems = (rho, contradictory(rho))
        sigmas = [Sentence(qq, a, b) for qq in "EAIO" for a in (0, 1, 2) for b in (0, 1, 2)]
        if first:
            sigmas.insert(0, Sentence("E", 0, 1))
            first = False
        for s in sigmas:
            out.append(RuleInstance(prems, s, 3))
    return out


@dataclass(frozen=True)
class RuleStatus:
    system: str
    rule: Rule
    derivable: bool
    weakly_independent: bool
    witness: Optional[tuple] = None        # failing (premises, conclusion)
    witness_derivation: Optional[Derivation] = None  # for derivable rules

    @property
    def independent(self) -> bool:
        return not self.derivable

    @property
    def label(self) -> str:
        if self.independent:
            return "independent"
        if self.weakly_independent:
            return "weaklyIndependent"
        return "derivable"


def closure_without(kb: KnowledgeBase, system: System, rule: Rule):
    """Saturation under the system minus one rule."""
    from .deduction import saturate
    return saturate(kb, system.without(rule))


def _derivable_direct(system: System, rule: Rule) -> tuple[bool, Optional[tuple]]:
    reduced = system.without(rule)
    for inst in rule_instances(rule):
        if not derives(inst.kb(), inst.conclusion, reduced):
            return False, (inst.premises, inst.conclusion)
    return True, None


def _derivable_sorites(rule: Rule) -> tuple[bool, Optional[tuple], Optional[Derivation]]:
    reduced = D_DOUBLE.without(rule)
    witness = None
    for inst in rule_instances(rule):
        found = search_sorites(inst.kb(), inst.conclusion, reduced)
        if found is None:
            return False, (inst.premises, inst.conclusion), None
        if witness is None:
            witness = found
    return True, None, witness


# Weak-independence candidates for rules that are derivable in the sorites
# system: (base sentences, target) with the target reachable only through
# the rule in question.
_SORITES_WEAK_WITNESSES = {
    Rule.E_SUB: ((Sentence("E", 0, 1),), Sentence("O", 1, 0)),
    Rule.FERIO: ((Sentence("E", 0, 1), Sentence("I", 2, 1)), Sentence("O", 2, 0)),
    Rule.FERISON: ((Sentence("E", 0, 1), Sentence("I", 1, 2)), Sentence("O", 2, 0)),
}


def check_rule_status(system_key: str, rule: Rule) -> RuleStatus:
    """Status of one rule inside one system of the report."""
    if system_key == "d":
        sys_obj = D
    elif system_key == "d'":
        sys_obj = D_PRIME
    elif system_key in ("d''", SORITES_SYSTEM):
        sys_obj = D_DOUBLE
    elif system_key in ("g", "g'", "g''"):
        sys_obj = {"g": G, "g'": G_PRIME, "g''": G_DOUBLE}[system_key]
    else:
        raise ValueError(f"unknown system {system_key!r}")
    if rule not in sys_obj.rules:
        raise ValueError(f"{rule} is not a rule of {system_key}")

    if system_key in ("d", "d'", "d''"):
        ok, witness = _derivable_direct(sys_obj, rule)
        return RuleStatus(system_key, rule, ok, not ok, witness)

    if system_key == SORITES_SYSTEM:
        ok, witness, deriv = _derivable_sorites(rule)
        if not ok:
            return RuleStatus(system_key, rule, False, True, witness)
        base, target = _SORITES_WEAK_WITNESSES[rule]
        terms = frozenset(range(3))
        kb = KnowledgeBase(frozenset(base), terms, _SYMS[:3])
        with_rule = search_sorites(kb, target, D_DOUBLE)
        without_rule = search_sorites(kb, target, D_DOUBLE.without(rule))
        weakly = with_rule is not None and without_rule is None
        return RuleStatus(system_key, rule, True, weakly,
                          (tuple(base), target), deriv)

    if system_key == "g":
        reduced = G.without(rule)
        for inst in rule_instances(rule):
            if not g_derives(inst.kb(), inst.conclusion, reduced):
                return RuleStatus(system_key, rule, False, True,
                                  (inst.premises, inst.conclusion))
        return RuleStatus(system_key, rule, True, False)

    if system_key == "g'":
        reduced = G_PRIME.without(rule)
        instances = _co_instances() if rule is Rule.CO else rule_instances(rule)
        for inst in instances:
            if not g_derives(inst.kb(), inst.conclusion, reduced):
                return RuleStatus(system_key, rule, False, True,
                                  (inst.premises, inst.conclusion))
        return RuleStatus(system_key, rule, True, False)

    # the sequent presentation
    if rule in DIRECT_OF_SEQUENT:
        base = check_rule_status("g", DIRECT_OF_SEQUENT[rule])
        return RuleStatus(system_key, rule, base.derivable,
                          base.weakly_independent, base.witness)
    if rule is Rule.ASS:
        kb = KnowledgeBase(frozenset({Sentence("O", 0, 1)}), frozenset((0, 1)),
                           _SYMS[:2])
        target = Sentence("O", 0, 1)
        ok = g_derives(kb, target, G_DOUBLE.without(Rule.ASS))
        return RuleStatus(system_key, rule, ok, not ok,
                          None if ok else ((target,), target))
    if rule is Rule.RAA:
        kb = KnowledgeBase(frozenset({Sentence("I", 1, 0)}), frozenset((0, 1)),
                           _SYMS[:2])
        target = Sentence("I", 0, 1)
        full = g_derives(kb, target, G_DOUBLE)
        reduced = g_derives(kb, target, G_DOUBLE.without(Rule.RAA))
        ok = not (full and not reduced)
        return RuleStatus(system_key, rule, ok, not ok,
                          None if ok else ((Sentence("I", 1, 0),), target))
    raise ValueError(f"{rule} is not a rule of g''")


def _rules_of(system_key: str) -> tuple[Rule, ...]:
    order = (Rule.A_ID, Rule.APC, Rule.EC, Rule.BARBARA, Rule.CELARENT,
             Rule.IC, Rule.DARII, Rule.FERIO, Rule.BAROCO, Rule.BOCARDO,
             Rule.E_SUB, Rule.FERISON, Rule.CO,
             Rule.A_ID_SEQ, Rule.APC_SEQ, Rule.EC_SEQ, Rule.BARBARA_SEQ,
             Rule.CELARENT_SEQ, Rule.ASS, Rule.RAA)
    pool = {
        "d": D.rules, "d'": D_PRIME.rules, "d''": D_DOUBLE.rules,
        SORITES_SYSTEM: D_DOUBLE.rules, "g": G.rules, "g'": G_PRIME.rules,
        "g''": G_DOUBLE.rules,
    }[system_key]
    return tuple(r for r in order if r in pool)


@dataclass(frozen=True)
class IndependenceReport:
    statuses: tuple[RuleStatus, ...]

    def status(self, system_key: str, rule: Rule) -> RuleStatus:
        for st in self.statuses:
            if st.system == system_key and st.rule == rule:
                return st
        raise KeyError((system_key, rule))

    def render_text(self) -> str:
        out = []
        width = max(len(str(st.rule)) for st in self.statuses)
        current = None
        for st in self.statuses:
            if st.system != current:
                current = st.system
                out.append(f"[{current}]")
            out.append(f"  {str(st.rule):<{width}}  {st.label}")
        return "\n".join(out)

    def to_json(self) -> dict:
        return {
            "statuses": [
                {"system": st.system, "rule": str(st.rule), "label": st.label,
                 "derivable": st.derivable,
                 "weakly_independent": st.weakly_independent}
                for st in self.statuses
            ]
        }


def full_report() -> IndependenceReport:
    statuses = []
    for system_key in REPORT_SYSTEMS:
        for rule in _rules_of(system_key):
            statuses.append(check_rule_status(system_key, rule))
    return IndependenceReport(tuple(statuses))
