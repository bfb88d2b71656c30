"""``lassokit`` command line.

Exit codes: 0 ok, 1 a property that must hold was falsified, 2 bad input,
3 a size cap refused the computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import automaton as au
from . import semigroup as sg
from .acceptance import run_all
from .automaton import LassoAutomaton
from .errors import DEFAULT_CLOSURE_CAP, DEFAULT_SUBSET_CAP, LassoError, SizeCapExceeded, env_cap
from .functors import adjunction_probe, alg, aut, minimize, omega_check_algebraic, syntactic
from .lasso_core import Lasso, LanguageSample, check_word, reverse_sample, saturation_check
from .semigroup import ExtendedLassoSemigroup
from .serialize import dumps, load

EXIT_OK, EXIT_FALSIFIED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class CommandResult:
    status: str
    payload: object = None
    diagnostics: list[str] = field(default_factory=list)
    code: int = EXIT_OK
    raw: str | None = None  # preformatted output (objects, DOT, TAP)


class InputError(Exception):
    pass


def _parse_bounds(text: str) -> tuple[int, int]:
    try:
        s, l = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bounds must look like 3,3, got {text!r}") from None
    if s < 0 or l < 1:
        raise argparse.ArgumentTypeError("need spoke bound >= 0 and loop bound >= 1")
    return s, l


def _load(path: str):
    try:
        return load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _need(obj, kind, what: str):
    if not isinstance(obj, kind):
        raise InputError(f"{what} needs {'an automaton' if kind is LassoAutomaton else 'a semigroup'}")
    return obj


def _sample(obj, s: int, l: int) -> LanguageSample:
    if isinstance(obj, LassoAutomaton):
        return au.language_sample(obj, s, l)
    return sg.recognition_sample(obj, s, l)


def _caps(args) -> tuple[int, int]:
    if args.cap is not None:
        return args.cap, args.cap
    return env_cap(DEFAULT_SUBSET_CAP), env_cap(DEFAULT_CLOSURE_CAP)


# -- commands ---------------------------------------------------------------------

def cmd_accept(args) -> CommandResult:
    obj = _load(args.file)
    l = Lasso(check_word(args.spoke, obj.alphabet), check_word(args.loop, obj.alphabet))
    ok = au.accept(obj, l) if isinstance(obj, LassoAutomaton) else sg.recognizes(obj, l)
    return CommandResult("ok", ok)


TRANSFORMS_AUT = {"rev", "reach", "minimize", "to-algebra", "syntactic"}


def cmd_transform(args) -> CommandResult:
    obj = _load(args.file)
    subset_cap, closure_cap = _caps(args)
    kind = args.kind
    if kind == "complement":
        out = au.complement(obj) if isinstance(obj, LassoAutomaton) else sg.complement(obj)
    elif kind == "to-automaton":
        out = aut(_need(obj, ExtendedLassoSemigroup, kind))
    else:
        a = _need(obj, LassoAutomaton, kind)
        out = {
            "rev": lambda: au.rev(a, subset_cap),
            "reach": lambda: au.reach(a),
            "minimize": lambda: minimize(a, subset_cap),
            "to-algebra": lambda: alg(a, closure_cap),
            "syntactic": lambda: syntactic(a, subset_cap, closure_cap),
        }[kind]()
    if args.dot:
        if not isinstance(out, LassoAutomaton):
            raise InputError("--dot is only available for automaton output")
        text = au.to_dot(out)
    else:
        text = dumps(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        return CommandResult("ok", {"written": args.out})
    return CommandResult("ok", raw=text)


def cmd_check(args) -> CommandResult:
    obj = _load(args.file)
    subset_cap, closure_cap = _caps(args)
    kind = args.kind
    if kind == "omega":
        return CommandResult("ok", au.omega_conditions(_need(obj, LassoAutomaton, kind)).to_json())
    if kind == "omega-rev":
        return CommandResult("ok", au.omega_rev_conditions(_need(obj, LassoAutomaton, kind)).to_json())
    if kind == "wilke":
        return CommandResult("ok", sg.wilke_axioms(_need(obj, ExtendedLassoSemigroup, kind).base).to_json())
    if kind == "saturation":
        wit = saturation_check(_sample(obj, *args.bounds))
        payload = {"saturated": wit is None, "bounds": list(args.bounds),
                   "witness": None if wit is None else [wit[0].to_json(), wit[1].to_json()]}
        return CommandResult("ok", payload)
    a = _need(obj, LassoAutomaton, kind)
    algebraic = omega_check_algebraic(a, subset_cap, closure_cap)
    direct = au.omega_conditions(a)
    payload = algebraic.to_json()
    if (direct.circular, direct.coherent) != (algebraic.circularity, algebraic.coherence):
        return CommandResult("error", payload, ["algebraic and direct omega decisions disagree"],
                             EXIT_FALSIFIED)
    return CommandResult("ok", payload)


def _first_difference(s1: LanguageSample, s2: LanguageSample) -> Lasso | None:
    for l, m in s1.members.items():
        if s2.members[l] != m:
            return l
    return None


def cmd_compare(args) -> CommandResult:
    """Equal and reverse-equal can both hold; for an automaton against a
    semigroup the translations reverse, so reverse-equal wins the tie."""
    o1, o2 = _load(args.file1), _load(args.file2)
    if o1.alphabet != o2.alphabet:
        raise InputError(f"alphabets differ: {o1.alphabet!r} vs {o2.alphabet!r}")
    s, l = args.bounds
    s1 = _sample(o1, s, l)
    s2 = _sample(o2, s, l)
    diff = _first_difference(s1, s2)
    equal = diff is None
    reverse_equal = s1 == reverse_sample(_sample(o2, l - 1, s + 1))
    mixed = isinstance(o1, LassoAutomaton) != isinstance(o2, LassoAutomaton)
    if reverse_equal and (mixed or not equal):
        relation = "reverse-equal"
    elif equal:
        relation = "equal"
    else:
        relation = "differing"
    payload = {"relation": relation, "equal": equal, "reverse_equal": reverse_equal,
               "bounds": [s, l],
               "first_difference": None if diff is None else
               {**diff.to_json(), "first": s1.members[diff], "second": s2.members[diff]}}
    return CommandResult("ok", payload)


def cmd_probe_adjunction(args) -> CommandResult:
    e = _need(_load(args.semigroup), ExtendedLassoSemigroup, "probe-adjunction")
    a = _need(_load(args.automaton), LassoAutomaton, "probe-adjunction")
    diags = []
    original = a
    if not au.is_reachable(a):
        diags.append("automaton is not reachable; probing its reachable part")
        a = au.reach(a)
    if e.alphabet != a.alphabet:
        raise InputError("alphabets differ")
    rep = adjunction_probe(e, a, b=original)
    payload = rep.to_json()
    payload["hom_alg_side_map"] = None if rep.hom_alg_side is None else rep.hom_alg_side.as_names(e, alg(a))
    payload["hom_aut_side_map"] = None if rep.hom_aut_side is None else rep.hom_aut_side.as_names(aut(e), a)
    if not rep.consistent:
        diags.append("hom-sets disagree: adjunction shadow falsified")
        return CommandResult("error", payload, diags, EXIT_FALSIFIED)
    return CommandResult("ok", payload, diags)


def cmd_selftest(args) -> CommandResult:
    results = run_all()
    lines = [f"1..{len(results)}"]
    for r in results:
        prefix = "ok" if r.ok else "not ok"
        lines.append(f"{prefix} {r.number} - {r.title} # {r.detail} ({r.seconds:.2f}s)")
    bad = any(not r.ok for r in results)
    return CommandResult("error" if bad else "ok", raw="\n".join(lines) + "\n",
                         code=EXIT_FALSIFIED if bad else EXIT_OK)


# -- wiring ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lassokit", description="Lasso automata and lasso semigroups.")
    p.add_argument("--cap", type=int, default=None,
                   help="override every size cap (default from LASSOKIT_CAP or built-in)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("accept", help="membership of one lasso")
    s.add_argument("file")
    s.add_argument("--spoke", default="")
    s.add_argument("--loop", required=True)
    s.set_defaults(fn=cmd_accept)

    s = sub.add_parser("transform", help="rev, reach, minimize, complement, to-algebra, to-automaton, syntactic")
    s.add_argument("kind", choices=sorted(TRANSFORMS_AUT | {"complement", "to-automaton"}))
    s.add_argument("file")
    s.add_argument("--out")
    s.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
    s.set_defaults(fn=cmd_transform)

    s = sub.add_parser("check", help="omega, omega-rev, omega-algebraic, wilke, saturation")
    s.add_argument("kind", choices=["omega", "omega-rev", "omega-algebraic", "wilke", "saturation"])
    s.add_argument("file")
    s.add_argument("--bounds", type=_parse_bounds, default=(3, 3))
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("compare", help="bounded language comparison of two objects")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--bounds", type=_parse_bounds, default=(3, 3))
    s.set_defaults(fn=cmd_compare)

    s = sub.add_parser("probe-adjunction", help="compare hom-sets across Aut and Alg")
    s.add_argument("semigroup")
    s.add_argument("automaton")
    s.set_defaults(fn=cmd_probe_adjunction)

    s = sub.add_parser("selftest", help="run the acceptance criteria (TAP output)")
    s.set_defaults(fn=cmd_selftest)
    return p


def execute(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult("error", code=EXIT_INPUT if exc.code else EXIT_OK)
    try:
        return args.fn(args)
    except (LassoError, InputError) as exc:
        return CommandResult("error", None, [str(exc)], EXIT_INPUT)
    except SizeCapExceeded as exc:
        return CommandResult("error", {"what": exc.what, "estimate": str(exc.estimate), "cap": exc.cap},
                             [str(exc)], EXIT_CAP)


def main(argv: Sequence[str] | None = None) -> int:
    res = execute(argv)
    if res.raw is not None:
        sys.stdout.write(res.raw)
    elif res.payload is not None:
        sys.stdout.write(json.dumps(res.payload, indent=2, ensure_ascii=False) + "\n")
    for d in res.diagnostics:
        print(f"lassokit: {d}", file=sys.stderr)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
