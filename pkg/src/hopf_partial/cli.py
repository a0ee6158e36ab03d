"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 mathematical failure
(an axiom, precondition or verdict failed), 2 input error (unreadable
or structurally invalid files, unknown example names).
"""

from __future__ import annotations

import argparse
import json
import sys

from .exactlin import Field, QQ
from .presentations import verify
from .coactions import CoactionMap, build_coring, classify_coaction
from .actions import ActionMap, PartialGroupAction, build_smash, classify_action, group_to_kG
from .duality import build_koppinen, coaction_to_action, prop410_iso
from .frobenius import build_frobenius_system, frobenius_pair, integrals
from .galois import galois_verdict, morita_context
from .catalog import build_example, example_names
from .io_json import FileFormatError, dumps, load_map, load_presentation, save_map
from .report import InternalConsistencyError, PreconditionError


class InputError(Exception):
    pass


class MathFailure(Exception):
    pass


def _parse_field(text: str) -> Field:
    if text in ("q", "Q"):
        return QQ
    if text.startswith("fp:"):
        return Field.prime(int(text[3:]))
    raise InputError(f"unknown field {text!r} (use q or fp:<prime>)")


def _load_target(args, want: str):
    """Resolve --example or positional path into a presentation/map object."""
    if args.example:
        try:
            params = {"alpha": args.alpha, "dim": args.dim}
            return build_example(args.example, _parse_field(args.field), **params)
        except KeyError:
            raise InputError(f"unknown example {args.example!r}; try 'hpa examples list'")
    if not args.path:
        raise InputError("give a file path or --example NAME")
    try:
        if want == "presentation":
            return load_presentation(args.path)
        return load_map(args.path)
    except (OSError, json.JSONDecodeError, FileFormatError, ValueError) as exc:
        raise InputError(str(exc))


def _emit(args, human_lines, doc):
    if args.json:
        doc = dict(doc)
        sys.stdout.write(dumps(doc))
    else:
        for line in human_lines:
            print(line)


def _flag_word(b: bool) -> str:
    return "yes" if b else "no"


def cmd_check(args) -> int:
    p = _load_target(args, "presentation")
    report = verify(p)
    lines = [f"{c.name}: {'pass' if c.passed else f'FAIL at {c.witness}'}" for c in report]
    _emit(args, lines, {"kind": "check", "ok": report.passed, "report": report.to_dict()})
    return 0 if report.passed else 1


def _verify_parts(m) -> None:
    reports = [verify(m.algebra), verify(m.hopf)] if hasattr(m, "hopf") else [verify(m.algebra)]
    for rep in reports:
        if not rep.passed:
            bad = ", ".join(c.name for c in rep.failures())
            raise MathFailure(f"referenced presentation fails axioms: {bad}")


def cmd_classify(args) -> int:
    m = _load_target(args, "map")
    if isinstance(m, PartialGroupAction):
        m = group_to_kG(m)
    _verify_parts(m)
    verdict = classify_coaction(m) if isinstance(m, CoactionMap) else classify_action(m)
    flags = verdict.flags()
    lines = [", ".join(f"{k}: {_flag_word(v)}" for k, v in flags.items())]
    for eq in sorted(verdict.equations):
        c = verdict.equations[eq]
        lines.append(f"  {eq}: {'pass' if c.passed else f'FAIL at {c.witness}'}")
    _emit(args, lines, {"kind": "classify", "ok": True, **verdict.to_dict()})
    return 0


def cmd_dualize(args) -> int:
    m = _load_target(args, "map")
    if not isinstance(m, CoactionMap):
        raise InputError("dualize expects a coaction map")
    _verify_parts(m)
    act = coaction_to_action(m)
    doc = save_map(act)
    if args.json:
        sys.stdout.write(dumps({"kind": "dualize", "ok": True, "result": doc}))
    else:
        sys.stdout.write(dumps(doc))
    return 0


def cmd_smash(args) -> int:
    m = _load_target(args, "map")
    if isinstance(m, PartialGroupAction):
        m = group_to_kG(m)
    if isinstance(m, CoactionMap):
        m = coaction_to_action(m)
    _verify_parts(m)
    sm = build_smash(m)
    ring = sm.ring_report.to_dict() if sm.ring_report is not None else None
    lines = [
        f"dim A#H = {m.nm}, dim unital summand = {sm.underline_dim}",
        f"lax ring law on the summand: {ring['passed'] if ring else 'n/a (not lax)'}",
    ]
    _emit(args, lines, {
        "kind": "smash", "ok": True, "dim": m.nm,
        "underline_dim": sm.underline_dim, "ring_report": ring,
    })
    return 0


def cmd_koppinen(args) -> int:
    m = _load_target(args, "map")
    if not isinstance(m, CoactionMap):
        raise InputError("koppinen expects a coaction map")
    _verify_parts(m)
    kop = build_koppinen(m)
    lines = [
        f"dim Hom(H,A) = {kop.dim}, dim unital summand = {kop.underline.dim}",
        f"structure report: {'pass' if kop.report.passed else 'FAIL'}",
    ]
    _emit(args, lines, {
        "kind": "koppinen", "ok": kop.report.passed, "dim": kop.dim,
        "underline_dim": kop.underline.dim, "report": kop.report.to_dict(),
    })
    return 0 if kop.report.passed else 1


def cmd_frobenius(args) -> int:
    m = _load_target(args, "map")
    if isinstance(m, PartialGroupAction):
        m = group_to_kG(m)
    if not isinstance(m, ActionMap):
        raise InputError("frobenius expects an action map")
    _verify_parts(m)
    t_space = integrals(m.hopf, "H")
    phi_space = integrals(m.hopf, "H*")
    fd = frobenius_pair(m.hopf)
    system = build_frobenius_system(m, fd)
    rep = system.report
    by_name = {c.name: c.passed for c in rep}
    lines = [
        f"integral space dims: H {t_space.dim}, dual {phi_space.dim}; pairing normalized to 1",
        f"commute: {_flag_word(by_name['casimir-commutes'])}, "
        f"bimodule: {_flag_word(by_name['trace-left-linear'] and by_name['trace-right-linear'])}, "
        f"counit-like: {_flag_word(by_name['counit-left'] and by_name['counit-right'])}",
    ]
    doc = {
        "kind": "frobenius",
        "ok": rep.passed,
        "integrals": {"H": t_space.dim, "H*": phi_space.dim},
        "pairing": "1",
        "identities": {
            "commute": by_name["casimir-commutes"],
            "bimodule": by_name["trace-left-linear"] and by_name["trace-right-linear"],
            "counit-like": by_name["counit-left"] and by_name["counit-right"],
        },
        "report": rep.to_dict(),
    }
    _emit(args, lines, doc)
    return 0 if rep.passed else 1


def cmd_galois(args) -> int:
    m = _load_target(args, "map")
    if not isinstance(m, CoactionMap):
        raise InputError("galois expects a coaction map")
    _verify_parts(m)
    rep = galois_verdict(m)
    d = rep.to_dict()
    lines = [
        f"can: {'bijective' if d['can']['bijective'] else 'not bijective'} "
        f"(rank {d['can']['rank']}: {d['can']['domain_dim']} -> {d['can']['codomain_dim']}), "
        f"theta: {'bijective' if d['theta']['bijective'] else 'not bijective'}, "
        f"morita: {'strict' if d['morita']['strict'] else 'not strict'}, "
        f"GALOIS: {_flag_word(d['galois'])}"
    ]
    _emit(args, lines, {"kind": "galois", "ok": True, **d})
    return 0


def cmd_morita(args) -> int:
    m = _load_target(args, "map")
    if not isinstance(m, CoactionMap):
        raise InputError("morita expects a coaction map")
    _verify_parts(m)
    ctx = morita_context(m)
    lines = [
        f"dim Q = {ctx.q_space.dim}, tau surjective: {_flag_word(ctx.tau_surjective)}, "
        f"mu surjective: {_flag_word(ctx.mu_surjective)}, strict: {_flag_word(ctx.strict)}"
    ]
    _emit(args, lines, {
        "kind": "morita", "ok": True, "q_dim": ctx.q_space.dim,
        "tau_surjective": ctx.tau_surjective, "mu_surjective": ctx.mu_surjective,
        "strict": ctx.strict, "structure": ctx.report.to_dict(),
    })
    return 0


def cmd_examples(args) -> int:
    if args.subcommand != "list":
        raise InputError("usage: hpa examples list")
    for name in example_names():
        print(name)
    return 0


def _add_common(sub):
    sub.add_argument("path", nargs="?", help="input JSON file")
    sub.add_argument("--example", help="use a named built-in example instead of a file")
    sub.add_argument("--field", default="q", help="coefficient field: q or fp:<prime>")
    sub.add_argument("--alpha", help="parameter of the distinguished idempotent examples")
    sub.add_argument("--dim", type=int, help="dimension parameter of the generic examples")
    sub.add_argument("--json", action="store_true", help="emit one JSON report document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hpa",
        description="Exact checks for partial (co)actions of finite-dimensional Hopf algebras",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        if name == "examples":
            sub = subs.add_parser(name, help="list the built-in examples")
            sub.add_argument("subcommand", choices=["list"])
            sub.set_defaults(fn=fn)
            continue
        sub = subs.add_parser(name, help=f"run the {name} pipeline")
        _add_common(sub)
        sub.set_defaults(fn=fn)
    return parser


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "dualize": cmd_dualize,
    "smash": cmd_smash,
    "koppinen": cmd_koppinen,
    "frobenius": cmd_frobenius,
    "galois": cmd_galois,
    "morita": cmd_morita,
    "examples": cmd_examples,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, MathFailure) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency violation (bug): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
