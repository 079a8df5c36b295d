"""Structures interpreting categorical sentences, and structure transforms.

Four model families share one satisfaction interface:

* ``Structure`` — four explicit binary relations plus a term assignment;
* ``OrderModel`` — a preorder; the positive-particular relation is derived as
  "has a common lower bound";
* ``VennModel`` — non-empty sets; A is inclusion, I is overlap;
* ``LeibnizModel`` — coprime pairs of naturals; A is componentwise
  divisibility, I is cross-coprimality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, singledispatch
from typing import Any, Hashable, Iterable, Mapping, Optional

from .core import Sentence, all_sentences

Pair = tuple[Hashable, Hashable]


def _sorted_elem(items: Iterable[Hashable]) -> tuple:
    return tuple(sorted(items, key=repr))


@dataclass(frozen=True, eq=False)
class Structure:
    """Base set, four binary relations, and a term assignment ``mu``."""

    base: frozenset
    relA: frozenset
    relE: frozenset
    relI: frozenset
    relO: frozenset
    mu: Mapping[int, Hashable]

    def __post_init__(self):
        for rel in (self.relA, self.relE, self.relI, self.relO):
            for (x, y) in rel:
                if x not in self.base or y not in self.base:
                    raise ValueError("relation pair outside the base")
        for v in self.mu.values():
            if v not in self.base:
                raise ValueError("mu must map into the base")

    def rel(self, quality: str) -> frozenset:
        return {"A": self.relA, "E": self.relE, "I": self.relI, "O": self.relO}[quality]

    @cached_property
    def mu_image(self) -> frozenset:
        return frozenset(self.mu.values())

    def restricted(self, quality: str) -> frozenset:
        """The relation cut down to pairs over the mu-image."""
        img = self.mu_image
        return frozenset((x, y) for (x, y) in self.rel(quality) if x in img and y in img)

    def to_json(self, symbols: Optional[Mapping[int, str]] = None) -> dict:
        name = (lambda t: symbols[t]) if symbols else str
        return {
            "base": sorted((repr(b) for b in self.base)),
            "A": sorted(map(repr, self.relA)),
            "E": sorted(map(repr, self.relE)),
            "I": sorted(map(repr, self.relI)),
            "O": sorted(map(repr, self.relO)),
            "mu": {name(t): repr(v) for t, v in sorted(self.mu.items())},
        }


@dataclass(frozen=True, eq=False)
class OrderModel:
    """A preorder ``r1``; the overlap relation is derived, not stored."""

    base: frozenset
    r1: frozenset
    mu: Mapping[int, Hashable]

    @cached_property
    def r2(self) -> frozenset:
        lower = {}
        for (x, y) in self.r1:
            lower.setdefault(y, set()).add(x)
        out = set()
        for a in self.base:
            for b in self.base:
                if lower.get(a, set()) & lower.get(b, set()):
                    out.add((a, b))
        return frozenset(out)


@dataclass(frozen=True, eq=False)
class VennModel:
    """A collection of non-empty sets; terms denote members of it."""

    base: frozenset
    mu: Mapping[int, frozenset]

    def __post_init__(self):
        for member in self.base:
            if not member:
                raise ValueError("Venn model members must be non-empty")
        for v in self.mu.values():
            if v not in self.base:
                raise ValueError("mu must map into the base")

    def to_json(self, symbols: Optional[Mapping[int, str]] = None) -> dict:
        name = (lambda t: symbols[t]) if symbols else str
        return {
            "sets": sorted(sorted(map(repr, member)) for member in self.base),
            "mu": {name(t): sorted(map(repr, v)) for t, v in sorted(self.mu.items())},
        }


@dataclass(frozen=True, eq=False)
class LeibnizModel:
    """Terms valued in coprime pairs of naturals."""

    mu: Mapping[int, tuple[int, int]]

    def __post_init__(self):
        for t, (m, n) in self.mu.items():
            if m < 0 or n < 0 or math.gcd(m, n) != 1:
                raise ValueError(f"term {t} carries a non-coprime pair ({m}, {n})")

    def to_json(self, symbols: Optional[Mapping[int, str]] = None) -> dict:
        name = (lambda t: symbols[t]) if symbols else str
        return {"mu": {name(t): [m, n] for t, (m, n) in sorted(self.mu.items())}}


def _is_multiple(m: int, n: int) -> bool:
    if n == 0:
        return m == 0
    return m % n == 0


# ---------------------------------------------------------------------------
# Satisfaction
# ---------------------------------------------------------------------------

@singledispatch
def satisfies(model, s: Sentence) -> bool:
    raise TypeError(f"no satisfaction clause for {type(model).__name__}")


@satisfies.register
def _(model: Structure, s: Sentence) -> bool:
    try:
        pair = (model.mu[s.subject], model.mu[s.predicate])
    except KeyError:
        raise ValueError(f"sentence {s} mentions an unassigned term") from None
    return pair in model.rel(s.quality)


@satisfies.register
def _(model: OrderModel, s: Sentence) -> bool:
    try:
        pair = (model.mu[s.subject], model.mu[s.predicate])
    except KeyError:
        raise ValueError(f"sentence {s} mentions an unassigned term") from None
    if s.quality == "A":
        return pair in model.r1
    if s.quality == "O":
        return pair not in model.r1
    if s.quality == "I":
        return pair in model.r2
    return pair not in model.r2


@satisfies.register
def _(model: VennModel, s: Sentence) -> bool:
    try:
        x, y = model.mu[s.subject], model.mu[s.predicate]
    except KeyError:
        raise ValueError(f"sentence {s} mentions an unassigned term") from None
    if s.quality == "A":
        return x <= y
    if s.quality == "O":
        return not x <= y
    if s.quality == "I":
        return bool(x & y)
    return not x & y


@satisfies.register
def _(model: LeibnizModel, s: Sentence) -> bool:
    try:
        (m1, n1), (m2, n2) = model.mu[s.subject], model.mu[s.predicate]
    except KeyError:
        raise ValueError(f"sentence {s} mentions an unassigned term") from None
    if s.quality == "A":
        return _is_multiple(m1, m2) and _is_multiple(n1, n2)
    if s.quality == "O":
        return not (_is_multiple(m1, m2) and _is_multiple(n1, n2))
    if s.quality == "I":
        return math.gcd(m1, n2) == 1 == math.gcd(n1, m2)
    return not (math.gcd(m1, n2) == 1 == math.gcd(n1, m2))


def satisfies_all(model, sentences: Iterable[Sentence]) -> bool:
    return all(satisfies(model, s) for s in sentences)


def basic_theory(model, terms: Iterable[int]) -> frozenset[Sentence]:
    """All sentences over the given terms that hold in the model."""
    return frozenset(s for s in all_sentences(terms) if satisfies(model, s))


def basically_equivalent(m1, m2, terms: Iterable[int]) -> bool:
    terms = tuple(terms)
    return basic_theory(m1, terms) == basic_theory(m2, terms)


# ---------------------------------------------------------------------------
# Canonical structures and model-class predicates
# ---------------------------------------------------------------------------

def canonical_structure(sentences: Iterable[Sentence],
                        universe: Iterable[int]) -> Structure:
    """Structure over the term universe itself whose relations read off
    membership; satisfaction in it is exactly membership."""
    base = frozenset(universe)
    rel = {q: set() for q in "AEIO"}
    for s in sentences:
        if s.subject not in base or s.predicate not in base:
            raise ValueError(f"sentence {s} outside the universe")
        rel[s.quality].add((s.subject, s.predicate))
    return Structure(base, frozenset(rel["A"]), frozenset(rel["E"]),
                     frozenset(rel["I"]), frozenset(rel["O"]),
                     {t: t for t in base})


def _compose(r: frozenset, s: frozenset) -> set:
    by_first = {}
    for (x, y) in s:
        by_first.setdefault(x, set()).add(y)
    out = set()
    for (x, y) in r:
        for z in by_first.get(y, ()):
            out.add((x, z))
    return out


def _converse(r: frozenset) -> frozenset:
    return frozenset((y, x) for (x, y) in r)


def is_d_model(m: Structure) -> bool:
    """Validity of the base rules, stated on the mu-restricted relations:
    A is a preorder on the image, A lands inside converse-I, E is symmetric,
    and A composed with E stays inside E."""
    img = m.mu_image
    A, E, I = m.restricted("A"), m.restricted("E"), m.restricted("I")
    if any((x, x) not in A for x in img):
        return False
    if not _compose(A, A) <= A:
        return False
    if not A <= _converse(I):
        return False
    if E != _converse(E):
        return False
    if not _compose(A, E) <= E:
        return False
    return True


def is_dprime_model(m: Structure) -> bool:
    """d-model conditions plus closure of I under composition with A and
    symmetry, and closure of O under the three O-producing compositions."""
    if not is_d_model(m):
        return False
    A, E, I, O = (m.restricted(q) for q in "AEIO")
    if not _compose(I, A) <= I:
        return False
    if I != _converse(I):
        return False
    cA = _converse(A)
    if not (_compose(I, E) | _compose(O, cA) | _compose(cA, O)) <= O:
        return False
    return True


def is_g_model(m: Structure) -> bool:
    """A g-model is a d'-model that is either conflict-free or full on the
    mu-image."""
    if not is_dprime_model(m):
        return False
    img = m.mu_image
    A, E, I, O = (m.restricted(q) for q in "AEIO")
    if not (A & O) and not (E & I):
        return True
    square = frozenset((x, y) for x in img for y in img)
    return A == E == I == O == square


def is_df_model(base: frozenset, r1: frozenset, r2: frozenset,
                mu: Mapping[int, Hashable]) -> bool:
    """Whether (base, r1, r2) with E/O as complements satisfies the dyadic
    axioms: r1 a preorder on the whole base, r2 symmetric and above r1, and
    r2 composed with r1 inside r2."""
    if any((x, x) not in r1 for x in base):
        return False
    if not _compose(r1, r1) <= r1:
        return False
    if r2 != _converse(r2):
        return False
    if not r1 <= r2:
        return False
    if not _compose(r2, r1) <= r2:
        return False
    return True


def structure_consistent(m: Structure) -> bool:
    return not (m.relA & m.relO) and not (m.relE & m.relI)


def structure_complete(m: Structure) -> bool:
    square = frozenset((x, y) for x in m.base for y in m.base)
    return (m.relA | m.relO) == square and (m.relE | m.relI) == square


def is_core(m: Structure) -> bool:
    return m.base == m.mu_image


def core_substructure(m: Structure) -> Structure:
    """Restriction of the base to the range of mu."""
    img = m.mu_image
    return Structure(img, m.restricted("A"), m.restricted("E"),
                     m.restricted("I"), m.restricted("O"), dict(m.mu))


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------

def quotient(m: Structure) -> Structure:
    """Collapse mutual-A pairs of a core d'- (or g-) model.

    The collapsing relation is a congruence for those classes, so the image
    is basically equivalent and its A-relation is antisymmetric.  Class
    elements are rendered as canonical sorted tuples.
    """
    if not is_core(m):
        raise ValueError("quotient requires a core structure")
    if not is_dprime_model(m):
        raise ValueError("quotient requires a core d'- or g-model")
    sim = m.relA & _converse(m.relA)
    cls: dict[Hashable, set] = {}
    for x in m.base:
        cls[x] = {y for y in m.base if (x, y) in sim} | {x}
    proj = {x: _sorted_elem(members) for x, members in cls.items()}
    base = frozenset(proj.values())

    def push(rel):
        return frozenset((proj[x], proj[y]) for (x, y) in rel)

    return Structure(base, push(m.relA), push(m.relE), push(m.relI),
                     push(m.relO), {t: proj[v] for t, v in m.mu.items()})


def order_completion(m: Structure) -> OrderModel:
    """Extend a consistent core model to an order model by adjoining a fresh
    lower bound below every overlapping pair that lacks one.

    The new A-relation keeps the old one on old elements; each fresh witness
    sits below exactly the elements above one of its two generators.
    """
    if not is_core(m):
        raise ValueError("order completion requires a core structure")
    if not structure_consistent(m):
        raise ValueError("order completion requires a consistent structure")
    if not is_d_model(m):
        raise ValueError("order completion requires at least a core d-model")
    A0, I0 = m.relA, m.relI
    lower = {}
    for (x, y) in A0:
        lower.setdefault(y, set()).add(x)
    fresh = set()
    for (x, y) in I0:
        if not (lower.get(x, set()) & lower.get(y, set())):
            fresh.add(frozenset((x, y)))
    witnesses = {p: _sorted_elem(p) for p in fresh}
    if set(witnesses.values()) & set(m.base):
        raise ValueError("fresh witness elements collide with the base")
    base1 = frozenset(m.base) | frozenset(witnesses.values())
    r1 = set(A0)
    for p, w in witnesses.items():
        r1.add((w, w))
        for y in m.base:
            if any((gen, y) in A0 for gen in p):
                r1.add((w, y))
    return OrderModel(base1, frozenset(r1), dict(m.mu))


def venn_from_df(base: frozenset, r1: frozenset, r2: frozenset,
                 mu: Mapping[int, Hashable]) -> tuple[VennModel, dict]:
    """Collapse any dyadic model onto a Venn model via the pair-set map
    ``h(b) = {{b1,b2} : b1,b2 overlap and one of them sits below b}``.

    ``h`` preserves and reflects both relations, is basic-equivalence
    preserving, and is injective exactly when r1 is antisymmetric.
    """
    if not is_df_model(base, r1, r2, mu):
        raise ValueError("input does not satisfy the dyadic model conditions")
    h = {}
    for b in base:
        image = set()
        for b1 in base:
            for b2 in base:
                if ((b1, b2) in r2 or (b2, b1) in r2) and \
                        ((b1, b) in r1 or (b2, b) in r1):
                    image.add(frozenset((b1, b2)))
        h[b] = frozenset(image)
    venn = VennModel(frozenset(h.values()), {t: h[v] for t, v in mu.items()})
    return venn, h


def order_to_com(m: OrderModel) -> VennModel:
    """Concrete order model of r1-lower sets; a homomorphic, basically
    equivalent image, iso exactly when r1 is antisymmetric."""
    lower = {b: frozenset(x for x in m.base if (x, b) in m.r1) for b in m.base}
    return VennModel(frozenset(lower.values()),
                     {t: lower[v] for t, v in m.mu.items()})


def structure_from_venn(v: VennModel) -> Structure:
    """Explicit four-relation form of a Venn model (A as inclusion, I as
    overlap, negatives as complements)."""
    base = v.base
    A, E, I, O = set(), set(), set(), set()
    for x in base:
        for y in base:
            if x <= y:
                A.add((x, y))
            else:
                O.add((x, y))
            if x & y:
                I.add((x, y))
            else:
                E.add((x, y))
    return Structure(base, frozenset(A), frozenset(E), frozenset(I),
                     frozenset(O), dict(v.mu))


def structure_from_order(m: OrderModel) -> Structure:
    square = [(x, y) for x in m.base for y in m.base]
    A = frozenset(m.r1)
    I = frozenset(m.r2)
    E = frozenset(p for p in square if p not in I)
    O = frozenset(p for p in square if p not in A)
    return Structure(frozenset(m.base), A, E, I, O, dict(m.mu))


def pd_modify(m: Structure, injective_on: Optional[Iterable[int]] = None) -> Structure:
    """Strip the identity on the mu-image out of A and add it to O.

    Requires an antisymmetric A on the image and an injective assignment (on
    ``injective_on`` when given, else on every assigned term), which is what
    keeps the modified structure rule-valid for the proper reading of A.
    """
    A_img = m.restricted("A")
    if any(x != y for (x, y) in A_img & _converse(A_img)):
        raise ValueError("pd modification requires an antisymmetric A on the image")
    terms = list(injective_on) if injective_on is not None else list(m.mu)
    seen = {}
    for t in terms:
        v = m.mu[t]
        if v in seen and seen[v] != t:
            raise ValueError("pd modification requires an injective assignment")
        seen[v] = t
    diag = frozenset((x, x) for x in m.mu_image)
    return Structure(m.base, m.relA - diag, m.relE, m.relI, m.relO | diag,
                     dict(m.mu))
