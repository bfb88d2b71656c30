"""JSON documents for automata, extended semigroups and lassos.

Automaton::

    {"alphabet": "ab", "xStates": [...], "yStates": [...], "initial": "x",
     "rho": {x: {a: x}}, "sigma": {x: {a: y}}, "xi": {y: {a: y}}, "final": [...]}

Extended lasso semigroup::

    {"alphabet": "ab", "plus": [...], "omega": [...], "dot": {p: {p: p}},
     "times": {p: {o: o}}, "omegaPow": {p: o}, "gen": {a: p}, "recognizing": [...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .automaton import LassoAutomaton
from .errors import LassoError
from .lasso_core import check_alphabet
from .semigroup import ExtendedLassoSemigroup, LassoSemigroup, validate_extended

# above this many W+ elements, associativity is checked with generators only
EXHAUSTIVE_LIMIT = 400


def automaton_to_json(a: LassoAutomaton) -> dict:
    t = a.named_tables()
    return {
        "alphabet": a.alphabet,
        "xStates": list(a.x_names),
        "yStates": list(a.y_names),
        "initial": a.x_names[a.initial],
        "rho": t["rho"],
        "sigma": t["sigma"],
        "xi": t["xi"],
        "final": [a.y_names[y] for y in sorted(a.final)],
    }


def automaton_from_json(doc: Mapping[str, Any]) -> LassoAutomaton:
    try:
        return LassoAutomaton.from_tables(
            doc["alphabet"], doc["xStates"], doc["yStates"], doc["initial"],
            doc["rho"], doc["sigma"], doc["xi"], doc["final"])
    except KeyError as exc:
        raise LassoError(f"automaton document is missing {exc.args[0]!r}") from None
    except (TypeError, AttributeError) as exc:
        raise LassoError(f"malformed automaton document: {exc}") from None


def semigroup_to_json(e: ExtendedLassoSemigroup) -> dict:
    b = e.base
    P, O = b.plus_names, b.omega_names
    dot, times, opow = b.dot.tolist(), b.times.tolist(), b.omega_pow.tolist()
    return {
        "alphabet": e.alphabet,
        "plus": list(P),
        "omega": list(O),
        "dot": {P[s]: {P[t]: P[dot[s][t]] for t in range(len(P))} for s in range(len(P))},
        "times": {P[s]: {O[al]: O[times[s][al]] for al in range(len(O))} for s in range(len(P))},
        "omegaPow": {P[s]: O[opow[s]] for s in range(len(P))},
        "gen": {a: P[g] for a, g in zip(e.alphabet, e.gen)},
        "recognizing": [O[al] for al in sorted(e.recognizing)],
    }


def semigroup_from_json(doc: Mapping[str, Any], validate: bool = True) -> ExtendedLassoSemigroup:
    try:
        alphabet = check_alphabet(doc["alphabet"])
        P, O = list(doc["plus"]), list(doc["omega"])
        for name in P + O:
            if not isinstance(name, str) or not name or name.startswith("@"):
                raise LassoError(f"invalid element name {name!r}")
        if len(set(P)) != len(P) or len(set(O)) != len(O):
            raise LassoError("duplicate element names")
        if set(P) & set(O):
            raise LassoError(f"element names shared by both sorts: {sorted(set(P) & set(O))}")
        pi = {p: i for i, p in enumerate(P)}
        oi = {o: i for i, o in enumerate(O)}

        def lookup(table: Mapping, key, where, idx):
            if key not in table:
                raise LassoError(f"partial {where}: missing {key!r}")
            val = table[key]
            if val not in idx:
                raise LassoError(f"{where} entry {val!r} is not an element of its sort")
            return idx[val]

        dot = [[lookup(doc["dot"][p] if p in doc["dot"] else {}, t, f"dot[{p!r}]", pi) for t in P]
               for p in P]
        times = [[lookup(doc["times"][p] if p in doc["times"] else {}, o, f"times[{p!r}]", oi) for o in O]
                 for p in P]
        opow = [lookup(doc["omegaPow"], p, "omegaPow", oi) for p in P]
        gen = tuple(lookup(doc["gen"], a, "gen", pi) for a in alphabet)
        rec = []
        for o in doc["recognizing"]:
            if o not in oi:
                raise LassoError(f"recognizing set must lie in the omega sort: {o!r}")
            rec.append(oi[o])
    except KeyError as exc:
        raise LassoError(f"semigroup document is missing {exc.args[0]!r}") from None
    except (TypeError, AttributeError) as exc:
        raise LassoError(f"malformed semigroup document: {exc}") from None
    base = LassoSemigroup(tuple(P), tuple(O), np.array(dot).reshape(len(P), len(P)),
                          np.array(times).reshape(len(P), len(O)), np.array(opow))
    e = ExtendedLassoSemigroup(base, alphabet, gen, frozenset(rec))
    if validate:
        validate_extended(e, exhaustive=len(P) <= EXHAUSTIVE_LIMIT)
    return e


def to_json(obj) -> dict:
    if isinstance(obj, LassoAutomaton):
        return automaton_to_json(obj)
    if isinstance(obj, ExtendedLassoSemigroup):
        return semigroup_to_json(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def from_json(doc: Mapping[str, Any]):
    """Parse either document kind, telling them apart by their keys."""
    if not isinstance(doc, Mapping):
        raise LassoError("document must be a JSON object")
    if "xStates" in doc:
        return automaton_from_json(doc)
    if "plus" in doc:
        return semigroup_from_json(doc)
    raise LassoError("document is neither an automaton (xStates) nor a semigroup (plus)")


def dumps(obj) -> str:
    doc = obj if isinstance(obj, dict) else to_json(obj)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LassoError(f"invalid JSON: {exc}") from None
    return from_json(doc)


def load(path: str | Path):
    return loads(Path(path).read_text(encoding="utf-8"))


def save(obj, path: str | Path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
