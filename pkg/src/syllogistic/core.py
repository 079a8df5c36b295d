"""Categorical sentences, interned terms, and the knowledge-base text format.

A sentence is a quality letter A, E, I or O applied to an ordered pair of
terms: ``Aab`` ("all a are b"), ``Eab`` ("no a is b"), ``Iab`` ("some a is
b"), ``Oab`` ("some a is not b").  Terms are interned to dense integer ids so
that the deduction layer can treat relations as matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

QUALITIES = "AEIO"

_CONTRADICTORY = {"A": "O", "E": "I", "I": "E", "O": "A"}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


class ParseError(ValueError):
    """Malformed knowledge-base text.  Carries the offending 1-based line."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True, order=True)
class Sentence:
    """A categorical sentence ``<quality><subject><predicate>``."""

    quality: str
    subject: int
    predicate: int

    def __post_init__(self):
        if self.quality not in QUALITIES:
            raise ValueError(f"unknown quality {self.quality!r}")

    @property
    def universal(self) -> bool:
        return self.quality in "AE"

    @property
    def particular(self) -> bool:
        return self.quality in "IO"

    @property
    def affirmative(self) -> bool:
        return self.quality in "AI"

    @property
    def negative(self) -> bool:
        return self.quality in "EO"

    @property
    def reflexive(self) -> bool:
        return self.subject == self.predicate

    @property
    def terms(self) -> tuple[int, int]:
        return (self.subject, self.predicate)


def contradictory(s: Sentence) -> Sentence:
    """Quality-swapped sentence (A<->O, E<->I) with the same term order."""
    return Sentence(_CONTRADICTORY[s.quality], s.subject, s.predicate)


@dataclass(frozen=True)
class KnowledgeBase:
    """A finite set of sentences over a finite, interned term universe.

    ``symbols[i]`` is the printable name of term id ``i``; ids are assigned in
    first-occurrence order by the parser.  ``universe`` may declare terms that
    occur in no sentence.
    """

    sentences: frozenset[Sentence]
    universe: frozenset[int]
    symbols: tuple[str, ...]

    def __post_init__(self):
        n = len(self.symbols)
        if not all(0 <= t < n for t in self.universe):
            raise ValueError("universe mentions an uninterned term id")
        for s in self.sentences:
            if s.subject not in self.universe or s.predicate not in self.universe:
                raise ValueError(f"sentence {s} uses a term outside the universe")
        object.__setattr__(self, "_index", {sym: i for i, sym in enumerate(self.symbols)})

    # -- term table ---------------------------------------------------------

    def term(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"unknown term {symbol!r}") from None

    def symbol(self, term_id: int) -> str:
        return self.symbols[term_id]

    # -- rendering ----------------------------------------------------------

    def render_sentence(self, s: Sentence) -> str:
        a, b = self.symbols[s.subject], self.symbols[s.predicate]
        if len(a) == 1 and len(b) == 1:
            return f"{s.quality}{a}{b}"
        return f"{s.quality}({a},{b})"

    def sort_key(self, s: Sentence) -> tuple[str, str, str]:
        return (s.quality, self.symbols[s.subject], self.symbols[s.predicate])

    def sorted_sentences(self, sentences: Optional[Iterable[Sentence]] = None) -> list[Sentence]:
        pool = self.sentences if sentences is None else sentences
        return sorted(pool, key=self.sort_key)

    def render(self) -> str:
        """Canonical text form.  ``parse_kb(kb.render()) == kb``."""
        lines = []
        if self.symbols:
            lines.append("terms: " + " ".join(self.symbols))
        for s in self.sorted_sentences():
            lines.append(f"{s.quality} {self.symbols[s.subject]} {self.symbols[s.predicate]}")
        return "\n".join(lines) + ("\n" if lines else "")

    # -- derived knowledge bases --------------------------------------------

    def with_sentences(self, extra: Iterable[Sentence]) -> "KnowledgeBase":
        return KnowledgeBase(self.sentences | frozenset(extra), self.universe, self.symbols)

    def restricted(self, terms: Iterable[int]) -> "KnowledgeBase":
        """Sub-base keeping only sentences whose terms all lie in ``terms``."""
        keep = frozenset(terms)
        kept = frozenset(s for s in self.sentences
                         if s.subject in keep and s.predicate in keep)
        return KnowledgeBase(kept, keep, self.symbols)


def essential_terms(kb: KnowledgeBase) -> frozenset[int]:
    """Terms occurring in some sentence with two distinct terms."""
    out = set()
    for s in kb.sentences:
        if s.subject != s.predicate:
            out.add(s.subject)
            out.add(s.predicate)
    return frozenset(out)


def is_plainly_contradictory(kb: KnowledgeBase) -> Optional[Sentence]:
    """A reflexive negative member (some ``Ecc`` or ``Occ``), if any.

    Returns the first such sentence in canonical order, else ``None``.
    """
    hits = [s for s in kb.sentences if s.negative and s.reflexive]
    if not hits:
        return None
    return min(hits, key=kb.sort_key)


def _check_ident(tok: str, lineno: int) -> str:
    if not _IDENT.match(tok):
        raise ParseError(f"bad term identifier {tok!r}", lineno)
    return tok


def parse_kb(text: str) -> KnowledgeBase:
    """Parse the ``.syl`` line format.

    One sentence per line, ``<Q> <subject> <predicate>`` with Q in AEIO;
    ``#`` starts a comment; blank lines are skipped.  An optional leading
    header ``terms: x y z`` declares extra universe members (and pins
    interning order, which makes rendering round-trip exactly).
    """
    symbols: list[str] = []
    index: dict[str, int] = {}

    def intern(tok: str) -> int:
        if tok not in index:
            index[tok] = len(symbols)
            symbols.append(tok)
        return index[tok]

    sentences: list[Sentence] = []
    saw_any = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("terms:"):
            if saw_any:
                raise ParseError("terms: header must come first and appear once", lineno)
            saw_any = True
            for tok in line[len("terms:"):].split():
                intern(_check_ident(tok, lineno))
            continue
        saw_any = True
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<Q> <subject> <predicate>', got {line!r}", lineno)
        q, a, b = parts
        if q not in QUALITIES or len(q) != 1:
            raise ParseError(f"unknown quality {q!r}", lineno)
        sentences.append(Sentence(q, intern(_check_ident(a, lineno)),
                                  intern(_check_ident(b, lineno))))
    return KnowledgeBase(frozenset(sentences), frozenset(range(len(symbols))),
                         tuple(symbols))


def parse_sentence(kb: KnowledgeBase, text: str) -> Sentence:
    """Parse ``"A a b"`` against an existing base; unknown terms are errors."""
    parts = text.split()
    if len(parts) != 3:
        raise ParseError(f"expected '<Q> <subject> <predicate>', got {text!r}")
    q, a, b = parts
    if q not in QUALITIES or len(q) != 1:
        raise ParseError(f"unknown quality {q!r}")
    return Sentence(q, kb.term(a), kb.term(b))


def intern_sentence(kb: KnowledgeBase, text: str) -> tuple[KnowledgeBase, Sentence]:
    """Like :func:`parse_sentence` but interning unseen terms into a new base."""
    parts = text.split()
    if len(parts) != 3:
        raise ParseError(f"expected '<Q> <subject> <predicate>', got {text!r}")
    q, a, b = parts
    if q not in QUALITIES or len(q) != 1:
        raise ParseError(f"unknown quality {q!r}")
    symbols = list(kb.symbols)
    index = {sym: i for i, sym in enumerate(symbols)}

    def intern(tok: str) -> int:
        _check_ident(tok, 0)
        if tok not in index:
            index[tok] = len(symbols)
            symbols.append(tok)
        return index[tok]

    sa, sb = intern(a), intern(b)
    kb2 = KnowledgeBase(kb.sentences, frozenset(range(len(symbols))), tuple(symbols))
    return kb2, Sentence(q, sa, sb)


def all_sentences(terms: Iterable[int]) -> list[Sentence]:
    """Every sentence over the given terms, in canonical id order."""
    ts = sorted(terms)
    return [Sentence(q, a, b) for q in QUALITIES for a in ts for b in ts]
