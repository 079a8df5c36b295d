"""Command-line front end.

Verbs: decide, closure, entails, derive, model, sorites, independence,
g2prove.  Exit codes: 0 success (or "consistent"/"yes"), 1 negative verdict
(contradictory, "no", none found), 2 parse/usage failure, 3 entailment scope
rejection.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .core import KnowledgeBase, ParseError, intern_sentence, parse_kb
from .deduction import (Consistent, Contradictory, D, EssentialScopeError,
                        PlainlyContradictory, SYSTEMS, System, closure,
                        derivation_of, emit_g2_derivation, entails,
                        is_consistent, render_g2_derivation)
from .construction import ContradictoryInput, assign_leibniz, pd_model, venn_direct
from .independence import full_report
from .sorites import synthesize_sorites


def _load_kb(path: str) -> KnowledgeBase:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_kb(fh.read())


def _system(name: str) -> System:
    return SYSTEMS[name]


def _symbols_map(kb: KnowledgeBase) -> dict[int, str]:
    return dict(enumerate(kb.symbols))


def _cmd_decide(args) -> int:
    kb = _load_kb(args.kb)
    result = is_consistent(kb, _system(args.system))
    if isinstance(result, Consistent):
        payload = {"status": "consistent"}
        text = "consistent"
        code = 0
    elif isinstance(result, PlainlyContradictory):
        w = kb.render_sentence(result.witness)
        payload = {"status": "plainly_contradictory", "witness": w}
        text = f"plainly contradictory: {w}"
        code = 1
    else:
        a = kb.render_sentence(result.sentence)
        b = kb.render_sentence(result.opposite)
        payload = {"status": "contradictory", "witness": [a, b]}
        text = f"contradictory: {a}, {b}"
        code = 1
    print(json.dumps(payload) if args.format == "json" else text)
    return code


def _cmd_closure(args) -> int:
    kb = _load_kb(args.kb)
    sentences = kb.sorted_sentences(closure(kb, _system(args.system)))
    if args.format == "json":
        print(json.dumps({"sentences": [kb.render_sentence(s) for s in sentences]}))
    else:
        for s in sentences:
            print(kb.render_sentence(s))
    return 0


def _derivation_text(kb, s, system) -> Optional[str]:
    if system.refutational:
        lines = emit_g2_derivation(kb, s)
        return None if lines is None else render_g2_derivation(kb, lines)
    deriv = derivation_of(kb, s, system)
    return None if deriv is None else deriv.render(kb)


def _cmd_entails(args) -> int:
    kb = _load_kb(args.kb)
    kb, s = intern_sentence(kb, args.sentence)
    system = _system(args.system)
    try:
        verdict = entails(kb, s, system)
    except EssentialScopeError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 3
    text = _derivation_text(kb, s, system) if verdict else None
    if args.format == "json":
        print(json.dumps({"entails": verdict, "derivation": text}))
    else:
        print("yes" if verdict else "no")
        if text:
            print(text)
    return 0 if verdict else 1


def _cmd_derive(args) -> int:
    kb = _load_kb(args.kb)
    kb, s = intern_sentence(kb, args.sentence)
    text = _derivation_text(kb, s, _system(args.system))
    if args.format == "json":
        print(json.dumps({"derivation": text}))
    else:
        print(text if text is not None else "none")
    return 0 if text is not None else 1


def _cmd_model(args) -> int:
    kb = _load_kb(args.kb)
    names = _symbols_map(kb)
    try:
        if args.kind == "leibniz":
            payload = assign_leibniz(kb).to_json(names)
        elif args.kind == "venn":
            payload = venn_direct(kb).to_json(names)
        else:
            payload = pd_model(kb).to_json(names)
    except ContradictoryInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(payload))
    return 0


def _cmd_sorites(args) -> int:
    kb = _load_kb(args.kb)
    kb, s = intern_sentence(kb, args.sentence)
    system = _system(args.system)
    if system.name not in ("d", "d'", "d''"):
        print("error: soriteses are defined for d, d' and d''", file=sys.stderr)
        return 2
    deriv = synthesize_sorites(kb, s, system)
    if args.format == "json":
        print(json.dumps({"sorites": None if deriv is None else deriv.render(kb)}))
    else:
        print(deriv.render(kb) if deriv is not None else "none")
    return 0 if deriv is not None else 1


def _cmd_independence(args) -> int:
    report = full_report()
    print(json.dumps(report.to_json()) if args.format == "json"
          else report.render_text())
    return 0


def _cmd_g2prove(args) -> int:
    kb = _load_kb(args.kb)
    kb, s = intern_sentence(kb, args.sentence)
    lines = emit_g2_derivation(kb, s)
    if args.format == "json":
        print(json.dumps({"derivation": None if lines is None
                          else render_g2_derivation(kb, lines)}))
    else:
        print(render_g2_derivation(kb, lines) if lines is not None else "no")
    return 0 if lines is not None else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syl", description="reasoning engine for assertoric syllogistic")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, system_default="d", with_sentence=False, systems=None):
        p.add_argument("kb", help="knowledge base file (.syl)")
        if with_sentence:
            p.add_argument("sentence", help="sentence, e.g. \"A a b\"")
        p.add_argument("--system", default=system_default,
                       choices=systems or sorted(SYSTEMS))
        p.add_argument("--format", default="text", choices=("text", "json"))

    common(sub.add_parser("decide", help="consistency decision"),
           systems=("d", "d'", "d''", "wd", "pd"))
    common(sub.add_parser("closure", help="all derivable sentences"))
    common(sub.add_parser("entails", help="guarded entailment with derivation"),
           with_sentence=True)
    common(sub.add_parser("derive", help="derivation or none"), with_sentence=True)
    pm = sub.add_parser("model", help="construct a model as JSON")
    pm.add_argument("kb")
    pm.add_argument("--kind", default="leibniz", choices=("leibniz", "venn", "pd"))
    pm.add_argument("--format", default="json", choices=("text", "json"))
    common(sub.add_parser("sorites", help="sorites of a sentence or none"),
           system_default="d''", with_sentence=True, systems=("d", "d'", "d''"))
    pi = sub.add_parser("independence", help="rule status report")
    pi.add_argument("--format", default="text", choices=("text", "json"))
    pg = sub.add_parser("g2prove", help="sequent derivation with reductio")
    pg.add_argument("kb")
    pg.add_argument("sentence")
    pg.add_argument("--format", default="text", choices=("text", "json"))
    return parser


_HANDLERS = {
    "decide": _cmd_decide,
    "closure": _cmd_closure,
    "entails": _cmd_entails,
    "derive": _cmd_derive,
    "model": _cmd_model,
    "sorites": _cmd_sorites,
    "independence": _cmd_independence,
    "g2prove": _cmd_g2prove,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.verb](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
