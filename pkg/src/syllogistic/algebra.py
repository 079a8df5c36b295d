"""Single-operation partial algebras and the algebraic reading of sentences.

An order relation induces a partial operation (keep the left argument where
the relation holds) and vice versa; the algebras arising this way are the
idempotent right-associative ones.  Sentences are interpreted by equations:
A by absorption, I by solvability of a common-fixpoint system.  Adjoining an
annihilator totalizes any partial algebra, and the total commutative case
embeds into a power set under intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional

from .core import Sentence
from .models import VennModel


@dataclass(frozen=True, eq=False)
class PartialAlgebra:
    base: frozenset
    op: Mapping[tuple, Hashable]

    def __post_init__(self):
        if not self.base:
            raise ValueError("base must be non-empty")
        for (x, y), z in self.op.items():
            if x not in self.base or y not in self.base or z not in self.base:
                raise ValueError("operation entry outside the base")

    @property
    def total(self) -> bool:
        return len(self.op) == len(self.base) ** 2


@dataclass(frozen=True)
class AlgebraClassFlags:
    idempotent: bool
    right_associative: bool
    weakly_right_associative: bool
    commutative: bool

    @property
    def la(self) -> bool:
        return self.right_associative and self.idempotent

    @property
    def cla(self) -> bool:
        return self.la and self.commutative

    @property
    def wla(self) -> bool:
        return self.weakly_right_associative and self.idempotent

    @property
    def cwla(self) -> bool:
        return self.wla and self.commutative


def induced_operation(base: Iterable, relation: Iterable[tuple]) -> PartialAlgebra:
    """Partial operation defined exactly on the relation, keeping the left
    argument."""
    base = frozenset(base)
    return PartialAlgebra(base, {(a, b): a for (a, b) in relation})


def induced_order(pa: PartialAlgebra) -> frozenset:
    """Pairs on which the operation is defined and keeps the left argument."""
    return frozenset(p for p, z in pa.op.items() if z == p[0])


def classify(pa: PartialAlgebra) -> AlgebraClassFlags:
    """Exhaustive check of the four laws, honoring existence provisos.

    Right associativity: whenever the right-nested product exists, so does
    the left-nested one, with the same value.  The weak form additionally
    assumes the inner left product exists.  Commutativity and idempotence are
    the usual partial-algebra readings.
    """
    op = pa.op
    base = pa.base
    idempotent = all(op.get((a, a)) == a for a in base)
    commutative = True
    for a in base:
        for b in base:
            if (a, b) in op and (b, a) in op and op[(a, b)] != op[(b, a)]:
                commutative = False
                break
        if not commutative:
            break
    right = True
    weak = True
    for b in base:
        for c in base:
            if (b, c) not in op:
                continue
            bc = op[(b, c)]
            for a in base:
                if (a, bc) not in op:
                    continue
                rhs = op[(a, bc)]
                ab_defined = (a, b) in op
                lhs_ok = ab_defined and (op[(a, b)], c) in op \
                    and op[(op[(a, b)], c)] == rhs
                if not lhs_ok:
                    right = False
                    if ab_defined:
                        weak = False
    return AlgebraClassFlags(idempotent, right, weak, commutative)


@dataclass(frozen=True, eq=False)
class AnnihilatorAlgebra:
    base: frozenset
    op: Mapping[tuple, Hashable]
    zero: Hashable

    def __post_init__(self):
        if self.zero not in self.base:
            raise ValueError("the annihilator must belong to the base")
        for x in self.base:
            if self.op.get((x, self.zero)) != self.zero or \
                    self.op.get((self.zero, x)) != self.zero:
                raise ValueError("annihilator law violated")
        for (x, y), z in self.op.items():
            if x not in self.base or y not in self.base or z not in self.base:
                raise ValueError("operation entry outside the base")

    @property
    def total(self) -> bool:
        return len(self.op) == len(self.base) ** 2

    def reduct(self) -> PartialAlgebra:
        return PartialAlgebra(self.base, dict(self.op))

    def subreduct(self) -> PartialAlgebra:
        keep = self.base - {self.zero}
        if not keep:
            raise ValueError("subreduct would be empty")
        op = {(x, y): z for (x, y), z in self.op.items()
              if x in keep and y in keep and z in keep}
        return PartialAlgebra(keep, op)


def adjoin_annihilator(pa: PartialAlgebra) -> AnnihilatorAlgebra:
    """Total annihilator algebra with the given algebra as subreduct: fill
    every undefined product with a fresh absorbing element."""
    zero: Hashable = ("0",)
    while zero in pa.base:
        zero = (zero,)
    base = pa.base | {zero}
    op = {}
    for x in base:
        for y in base:
            if x == zero or y == zero:
                op[(x, y)] = zero
            else:
                op[(x, y)] = pa.op.get((x, y), zero)
    return AnnihilatorAlgebra(base, op, zero)


# ---------------------------------------------------------------------------
# Algebraic satisfaction
# ---------------------------------------------------------------------------

def satisfies_wls(pa: PartialAlgebra, mu: Mapping[int, Hashable],
                  s: Sentence) -> bool:
    """Satisfaction in a weak-Leibniz structure: A by absorption, I by the
    solvability of ``x (+) mu a = x`` and ``x (+) mu b = x``."""
    if not classify(pa).wla:
        raise ValueError("the algebra is not weakly right-associative idempotent")
    try:
        va, vb = mu[s.subject], mu[s.predicate]
    except KeyError:
        raise ValueError(f"sentence {s} mentions an unassigned term") from None
    if s.quality in "AO":
        holds = pa.op.get((va, vb)) == va
        return holds if s.quality == "A" else not holds
    holds = any(pa.op.get((x, va)) == x and pa.op.get((x, vb)) == x
                for x in pa.base)
    return holds if s.quality == "I" else not holds


def satisfies_awls(aa: AnnihilatorAlgebra, mu: Mapping[int, Hashable],
                   s: Sentence) -> bool:
    """Non-annihilator satisfaction: as in the plain algebraic reading except
    that the annihilator is barred both from the assignment and from
    witnessing solutions.  In the total commutative case the I-clause
    reduces to the product being non-zero."""
    if not classify(aa.subreduct()).wla:
        raise ValueError("the subreduct is not weakly right-associative idempotent")
    if any(v == aa.zero for v in mu.values()):
        raise ValueError("the assignment must avoid the annihilator")
    try:
        va, vb = mu[s.subject], mu[s.predicate]
    except KeyError:
        raise ValueError(f"sentence {s} mentions an unassigned term") from None
    if s.quality in "AO":
        holds = aa.op.get((va, vb)) == va
        return holds if s.quality == "A" else not holds
    if aa.total and classify(aa.reduct()).cla:
        holds = aa.op[(va, vb)] != aa.zero
    else:
        holds = any(x != aa.zero and aa.op.get((x, va)) == x
                    and aa.op.get((x, vb)) == x for x in aa.base)
    return holds if s.quality == "I" else not holds


# ---------------------------------------------------------------------------
# Power-set embedding
# ---------------------------------------------------------------------------

def is_tclaa(aa: AnnihilatorAlgebra) -> bool:
    return aa.total and classify(aa.reduct()).cla


def embed_blaa(aa: AnnihilatorAlgebra) -> dict:
    """Embedding of a total commutative Leibniz algebra with annihilator into
    subsets-under-intersection: each element maps to its non-zero absorbed
    elements; the annihilator maps to the empty set."""
    if not is_tclaa(aa):
        raise ValueError("embedding requires a total commutative Leibniz "
                         "algebra with annihilator")
    return {b: frozenset(x for x in aa.base
                         if aa.op[(x, b)] == x and x != aa.zero)
            for b in aa.base}


def venn_from_tclsa(aa: AnnihilatorAlgebra, mu: Mapping[int, Hashable]) -> VennModel:
    """Venn model basically equivalent to a total commutative Leibniz
    structure with annihilator (assignment avoiding the annihilator)."""
    if any(v == aa.zero for v in mu.values()):
        raise ValueError("the assignment must avoid the annihilator")
    f = embed_blaa(aa)
    return VennModel(frozenset(f[v] for v in mu.values()),
                     {t: f[v] for t, v in mu.items()})


def blsa_from_venn(v: VennModel, max_points: int = 16
                   ) -> tuple[AnnihilatorAlgebra, dict]:
    """Power-set-under-intersection algebra over the model's point union,
    with the model's assignment carried over; the annihilator is the empty
    set."""
    points = sorted({p for member in v.base for p in member}, key=repr)
    if len(points) > max_points:
        raise ValueError("point union too large to materialize a power set")
    subsets = [frozenset()]
    for p in points:
        subsets += [s | {p} for s in subsets]
    base = frozenset(subsets)
    op = {(x, y): x & y for x in base for y in base}
    aa = AnnihilatorAlgebra(base, op, frozenset())
    return aa, dict(v.mu)
