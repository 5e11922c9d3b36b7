"""Command-line front end.

Exit codes: 0 success, 1 logical negative (formula false, not a problem,
no solutions), 2 usage error, 3 data error (bad model, bad formula,
unknown world, ...).  ``--json`` switches every command to JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import abduction, complexity, dynamics, model, propabduction, semantics
from .errors import AbducerError, NoSolutions, SmallInputWarning
from .formula import parse, to_text
from .scenarios import SCENARIOS

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _yn(b):
    return "true" if b else "false"


def _load(args):
    return model.load(args.model, force=args.force)


def _read_candidates(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    return [parse(ln) for ln in lines if ln and not ln.startswith("#")]


# ------------------------------------------------------------------ commands


def cmd_check(args):
    m = _load(args)
    f = parse(args.formula)
    if args.world is None:
        value = semantics.valid_in_model(m, f)
        where = "model"
    else:
        value = semantics.evaluate(m, args.world, f)
        where = args.world
    _emit(args, {"world": args.world, "formula": to_text(f), "value": value},
          f"{where} |= {to_text(f)}: {_yn(value)}")
    return EXIT_OK if value else EXIT_NEGATIVE


def cmd_observe(args):
    out = dynamics.observe(_load(args), parse(args.formula))
    print(model.dumps(out, indent=None if args.json else 2))
    return EXIT_OK


def cmd_upgrade(args):
    out = dynamics.conjecture(_load(args), parse(args.formula))
    print(model.dumps(out, indent=None if args.json else 2))
    return EXIT_OK


def cmd_abduce(args):
    m = _load(args)
    phi = parse(args.formula)
    problem = abduction.detect(m, args.world, phi)
    if problem is None:
        _emit(args, {"problem": False, "formula": to_text(phi), "world": args.world},
              f"not a problem: the agent already knows {to_text(phi)} at {args.world}")
        return EXIT_NEGATIVE
    payload = {
        "problem": True,
        "kind": problem.kind.value,
        "formula": to_text(phi),
        "world": args.world,
        "observed_model": model.model_to_dict(problem.observed_model),
    }
    _emit(args, payload, f"abductive problem ({problem.kind}) at {args.world}: {to_text(phi)}")
    return EXIT_OK


def _problem(args):
    m = _load(args)
    problem = abduction.detect(m, args.world, parse(args.formula))
    if problem is None:
        raise _NotAProblem(f"the agent already knows {args.formula} at {args.world}")
    return problem


class _NotAProblem(Exception):
    pass


def _candidate_dict(c):
    return {
        "hypothesis": c.text,
        "is_solution": c.is_solution,
        "consistent": c.consistent_analog,
        "explanatory": c.explanatory_analog,
        "score": c.score,
        "backend": c.backend if c.score is not None else None,
        "reason": c.reason,
    }


def cmd_solve(args):
    problem = _problem(args)
    cands = abduction.generate_candidates(problem, args.max_literals, cap=args.cap)
    screened = abduction.screen(problem, cands, strict=not args.plain_mode, score=False)
    kept = [c for c in screened if c.is_solution and c.reason is None]
    lines = [f"{c.text}  consistent={_yn(c.consistent_analog)} explanatory={_yn(c.explanatory_analog)}"
             for c in kept] or ["no solutions"]
    _emit(args, {"kind": problem.kind.value, "solutions": [_candidate_dict(c) for c in kept]},
          "\n".join(lines))
    return EXIT_OK if kept else EXIT_NEGATIVE


def cmd_rank(args):
    problem = _problem(args)
    if args.candidates:
        cands = _read_candidates(args.candidates)
    else:
        cands = abduction.generate_candidates(problem, args.max_literals, cap=args.cap)
    backend = args.backend or complexity.default_backend()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SmallInputWarning)
        screened = abduction.screen(problem, cands, strict=not args.plain_mode, backend=backend)
    if not any(c.is_solution for c in screened):
        raise NoSolutions("no candidate satisfies the solution condition")
    ranked = sorted((c for c in screened if c.score is not None), key=lambda c: (c.score, c.text))
    excluded = [c for c in screened if c.score is None]
    notes = sorted({str(w.message) for w in caught})
    lines = [f"{i + 1}. {c.text}  score={c.score:.4f} bits" for i, c in enumerate(ranked)]
    lines += [f"excluded: {c.text} ({c.reason})" for c in excluded]
    lines += [f"warning: {n}" for n in notes]
    payload = {
        "backend": backend,
        "ranked": [_candidate_dict(c) for c in ranked],
        "excluded": [_candidate_dict(c) for c in excluded],
        "warnings": notes,
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ranked else EXIT_NEGATIVE


def cmd_classic(args):
    theta = [parse(t) for t in args.theta]
    if args.action == "classify":
        kind = propabduction.classify_problem(theta, parse(args.formula))
        _emit(args, {"kind": kind.value}, kind.value)
        return EXIT_NEGATIVE if kind is propabduction.ProblemKind.NOT_A_PROBLEM else EXIT_OK
    if args.action == "check":
        flags = propabduction.check_solution(theta, parse(args.formula), parse(args.alpha))
        _emit(args, flags._asdict(), " ".join(f"{k}={_yn(v)}" for k, v in flags._asdict().items()))
        return EXIT_OK if flags.plain else EXIT_NEGATIVE
    t = propabduction.to_minimal_clausal(theta)
    order = args.atoms.split(",") if args.atoms else t.atoms()
    bits = propabduction.clausal_bits(t, order)
    clauses = [[str(lit) for lit in c] for c in t.clauses]
    _emit(args, {"clauses": clauses, "atoms": list(order), "bits": bits},
          f"{t}\nbits: {bits}")
    return EXIT_OK


def _bits_arg(value, path):
    if path:
        with open(path, encoding="utf-8") as fh:
            return model.matrix_bits(model.parse_matrix(fh.read()))
    return value or ""


def cmd_complexity(args):
    s = _bits_arg(args.bits, args.matrix)
    given = None
    if args.given is not None or args.given_matrix:
        given = _bits_arg(args.given, args.given_matrix)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SmallInputWarning)
        if given is None:
            est = complexity.plain_complexity(s, args.backend)
        else:
            est = complexity.conditional_complexity(s, given, args.backend)
    notes = sorted({str(w.message) for w in caught})
    payload = {
        "bits": est.bits,
        "backend": est.backend,
        "input_length": est.input_length,
        "conditional": given is not None,
        "platform_dependent": est.platform_dependent,
        "warnings": notes,
    }
    text = [f"{est.bits:.4f} bits ({est.backend}, {est.input_length} input bits)"]
    if est.platform_dependent:
        text.append("note: estimate depends on the platform's compressor build")
    text += [f"warning: {n}" for n in notes]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_scenario(args):
    lines = SCENARIOS[args.name]()
    _emit(args, {"scenario": args.name, "transcript": lines}, "\n".join(lines))
    return EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON on stdout")

    with_model = argparse.ArgumentParser(add_help=False, parents=[common])
    with_model.add_argument("model", help="model JSON file")
    with_model.add_argument("--force", action="store_true", help="skip model validation")

    with_problem = argparse.ArgumentParser(add_help=False, parents=[with_model])
    with_problem.add_argument("-w", "--world", required=True)
    with_problem.add_argument("-f", "--formula", required=True, help="the surprising observation")
    with_problem.add_argument("--plain-mode", action="store_true",
                              help="only require the solution condition, skip the filters")
    with_problem.add_argument("--max-literals", type=int, default=1)
    with_problem.add_argument("--cap", type=int, default=abduction.DEFAULT_CANDIDATE_CAP)

    p = argparse.ArgumentParser(prog="abducer", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit JSON on stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[with_model], help="evaluate a formula")
    s.add_argument("-w", "--world", help="world id (omit to check validity in the model)")
    s.add_argument("-f", "--formula", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("observe", parents=[with_model], help="observe a formula")
    s.add_argument("-f", "--formula", required=True)
    s.set_defaults(func=cmd_observe)

    s = sub.add_parser("upgrade", parents=[with_model], help="conjecture a formula")
    s.add_argument("-f", "--formula", required=True)
    s.set_defaults(func=cmd_upgrade)

    s = sub.add_parser("abduce", parents=[with_model], help="detect an abductive problem")
    s.add_argument("-w", "--world", required=True)
    s.add_argument("-f", "--formula", required=True)
    s.set_defaults(func=cmd_abduce)

    s = sub.add_parser("solve", parents=[with_problem], help="generate and filter solutions")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("rank", parents=[with_problem], help="rank solutions by complexity")
    s.add_argument("--candidates", help="file with one formula per line")
    s.add_argument("--backend", choices=complexity.backends())
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("classic", parents=[common], help="classical propositional abduction")
    s.add_argument("action", choices=["classify", "check", "normalize"])
    s.add_argument("-t", "--theta", action="append", default=[], help="background formula")
    s.add_argument("-f", "--formula", help="surprising fact")
    s.add_argument("-a", "--alpha", help="candidate explanation")
    s.add_argument("--atoms", help="comma-separated atom order for normalize")
    s.set_defaults(func=cmd_classic)

    s = sub.add_parser("complexity", parents=[common], help="estimate bit-string complexity")
    s.add_argument("bits", nargs="?", help="string of 0 and 1")
    s.add_argument("--matrix", help="file with a 0/1 matrix, one row per line")
    s.add_argument("--given", help="condition on this bit string")
    s.add_argument("--given-matrix", help="condition on this matrix file")
    s.add_argument("--backend", choices=complexity.backends())
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("scenario", parents=[common], help="replay a worked example")
    s.add_argument("name", choices=sorted(SCENARIOS))
    s.set_defaults(func=cmd_scenario)
    return p


def _usage_check(parser, args):
    if args.command == "classic":
        if args.action in ("classify", "check") and not args.formula:
            parser.error(f"classic {args.action} needs -f/--formula")
        if args.action == "check" and not args.alpha:
            parser.error("classic check needs -a/--alpha")
    if args.command == "complexity" and (args.bits is None) == (args.matrix is None):
        parser.error("complexity needs exactly one of BITS or --matrix")
    if getattr(args, "max_literals", 1) < 1:
        parser.error("--max-literals must be at least 1")


def _fail(args, code, exc):
    name = type(exc).__name__.lstrip("_")
    if getattr(args, "json", False):
        print(json.dumps({"error": name, "message": str(exc)}, sort_keys=True))
    else:
        print(f"error: {name}: {exc}", file=sys.stderr)
    return code


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        _usage_check(parser, args)
    except SystemExit:
        return EXIT_USAGE
    try:
        return args.func(args)
    except (NoSolutions, _NotAProblem) as exc:
        return _fail(args, EXIT_NEGATIVE, exc)
    except (AbducerError, OSError, ValueError) as exc:
        return _fail(args, EXIT_DATA, exc)


def main():
    sys.exit(run())
