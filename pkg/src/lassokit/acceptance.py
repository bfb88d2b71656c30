"""The ten acceptance criteria, each a function returning a :class:`CriterionResult`.

Shared by ``tests/test_acceptance.py``, ``lassokit selftest`` and
``scripts/reproduce_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .automaton import (
    accept,
    find_morphism,
    is_observable,
    is_reachable,
    isomorphic,
    language_equivalent,
    language_sample,
    omega_conditions,
    omega_rev_conditions,
    reach,
    rev,
    rev_reach,
)
from .corpus import (
    CorpusConfig,
    corpus_automata,
    corpus_semigroups,
    reference_a1,
    reference_a2,
    random_lasso_semigroup,
)
from .errors import SizeCapExceeded
from .functors import adjunction_probe, alg, aut, minimize, omega_check_algebraic
from .lasso_core import (
    Lasso,
    LanguageSample,
    enumerate_lassos,
    reverse_sample,
    saturation_check,
    up_equal,
    up_equal_unrolled,
)
from .semigroup import recognition_sample, wilke_axioms


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.2f}s) {self.detail}"


def _timed(number: int, title: str, limit: float | None = None):
    def wrap(fn: Callable[[CorpusConfig], tuple[bool, str, list[str]]]):
        def run(cfg: CorpusConfig = CorpusConfig()) -> CriterionResult:
            t0 = time.perf_counter()
            ok, detail, failures = fn(cfg)
            dt = time.perf_counter() - t0
            if limit is not None and dt >= limit:
                ok = False
                failures = failures + [f"runtime {dt:.2f}s exceeds {limit}s"]
            if failures and detail:
                detail = f"{detail}; first failure: {failures[0]}"
            return CriterionResult(number, title, ok, detail, dt, failures)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _reverse_at(sample_fn, max_spoke: int, max_loop: int) -> LanguageSample:
    # the reverse of a (L-1, S+1) sample covers exactly the (S, L) lassos
    return reverse_sample(sample_fn(max_loop - 1, max_spoke + 1))


@_timed(1, "reference automata ground truth", limit=1.0)
def criterion_1(cfg):
    a1, a2 = reference_a1(), reference_a2()
    fails = []
    for l in enumerate_lassos("ab", 3, 3):
        if accept(a1, l) != l.loop.startswith("b"):
            fails.append(f"A1 on {l}")
        want = l.spoke.endswith("b") and set(l.loop) == {"a"}
        if accept(a2, l) != want:
            fails.append(f"A2 on {l}")
    wit = saturation_check(language_sample(a1, 3, 3))
    if wit != (Lasso("", "ba"), Lasso("b", "ab")):
        fails.append(f"A1 saturation witness {wit}")
    r1 = omega_conditions(a1)
    if (r1.circular, r1.coherent) != (True, False):
        fails.append(f"A1 omega flags {(r1.circular, r1.coherent)}")
    r2 = omega_conditions(a2)
    if (r2.circular, r2.coherent) != (True, True):
        fails.append(f"A2 omega flags {(r2.circular, r2.coherent)}, witness {r2.witness}")
    return not fails, f"{len(fails)} mismatches", fails


@_timed(2, "reversal laws", limit=30.0)
def criterion_2(cfg):
    fails = []
    checked = 0
    for name, a in corpus_automata(cfg):
        target = _reverse_at(lambda s, l: language_sample(a, s, l), 2, 2)
        if language_sample(rev(a), 2, 2) != target:
            fails.append(f"rev({name})")
        if recognition_sample(alg(a), 2, 2) != target:
            fails.append(f"alg({name})")
        checked += 2
    for name, e in corpus_semigroups(cfg):
        target = _reverse_at(lambda s, l: recognition_sample(e, s, l), 2, 2)
        if language_sample(aut(e), 2, 2) != target:
            fails.append(f"aut({name})")
        checked += 1
    return not fails, f"{checked} equalities, {len(fails)} failures", fails


@_timed(3, "regularity round trips")
def criterion_3(cfg):
    fails = []
    checked = 0
    for name, a in corpus_automata(cfg):
        if recognition_sample(alg(rev(a)), 2, 2) != language_sample(a, 2, 2):
            fails.append(f"alg(rev({name}))")
        checked += 1
    for name, e in corpus_semigroups(cfg):
        if language_sample(rev_reach(aut(e)), 2, 2) != recognition_sample(e, 2, 2):
            fails.append(f"reach(rev(aut({name})))")
        checked += 1
    return not fails, f"{checked} equalities, {len(fails)} failures", fails


@_timed(4, "direct and algebraic omega decisions agree", limit=60.0)
def criterion_4(cfg):
    fails = []
    agreed = skipped = 0
    flags = {}
    for name, a in corpus_automata(cfg):
        direct = omega_conditions(a)
        try:
            algebraic = omega_check_algebraic(a)
        except SizeCapExceeded:
            skipped += 1
            continue
        pair = ((direct.circular, direct.coherent), (algebraic.circularity, algebraic.coherence))
        flags[name] = algebraic.is_omega
        if pair[0] != pair[1]:
            fails.append(f"{name}: direct {pair[0]} vs algebraic {pair[1]}")
        else:
            agreed += 1
    if flags.get("A1") is not False:
        fails.append(f"A1 expected not omega, got {flags.get('A1')}")
    if flags.get("A2") is not True:
        fails.append(f"A2 expected omega, got {flags.get('A2')}")
    return not fails, f"{agreed} agree, {skipped} skipped by cap", fails


WILKE_SIZES = (20, 40, 80)
WILKE_CONSTANT = 3


@_timed(5, "wilke check count is quadratic")
def criterion_5(cfg):
    rng = random.Random(cfg.seed)
    fails = []
    worst = 0.0
    for n in WILKE_SIZES:
        for trial in range(10):
            w = random_lasso_semigroup(n, rng)
            rep = wilke_axioms(w)
            if rep.coherence_checks != n * n:
                fails.append(f"n={n}: coherence checks {rep.coherence_checks}")
            if rep.circularity_checks > 2 * n * n:
                fails.append(f"n={n}: circularity checks {rep.circularity_checks}")
            if rep.checks > WILKE_CONSTANT * n * n:
                fails.append(f"n={n}: total {rep.checks} > {WILKE_CONSTANT}n^2")
            worst = max(worst, rep.checks / (n * n))
    return not fails, f"max checks/n^2 = {worst:.3f} (c = {WILKE_CONSTANT})", fails


ADJUNCTION_PAIRS = 500


def adjunction_pairs(cfg: CorpusConfig = CorpusConfig()):
    """Counit-style pairs first, then seeded random fill up to 500."""
    autos = [(n, reach(a)) for n, a in corpus_automata(cfg)]
    sgs = list(corpus_semigroups(cfg))
    by_name = dict(sgs)
    pairs = []
    for n, a in autos:
        if f"alg({n})" in by_name:
            pairs.append((f"alg({n})", by_name[f"alg({n})"], n, a))
            pairs.append((f"alg({n})", by_name[f"alg({n})"], f"minimize({n})", minimize(a)))
    rng = random.Random(cfg.seed + 1)
    while len(pairs) < ADJUNCTION_PAIRS:
        en, e = rng.choice(sgs)
        an, a = rng.choice(autos)
        pairs.append((en, e, an, a))
    return pairs[:ADJUNCTION_PAIRS]


@_timed(6, "adjunction hom-set shadow")
def criterion_6(cfg):
    fails = []
    both = neither = 0
    autos = [a for _, a in corpus_automata(cfg)]
    rng = random.Random(cfg.seed + 2)
    for en, e, an, a in adjunction_pairs(cfg):
        rep = adjunction_probe(e, a, b=rng.choice(autos))
        if not rep.consistent:
            fails.append(f"({en}, {an}): {rep.to_json()}")
        elif rep.hom_aut_side is not None:
            both += 1
        else:
            neither += 1
    return not fails, f"{both} with both homs, {neither} with neither", fails


@_timed(7, "minimization")
def criterion_7(cfg):
    fails = []
    autos = list(corpus_automata(cfg))
    samples = {n: language_sample(a, 3, 3) for n, a in autos}
    separated = True
    for i, (n1, a1) in enumerate(autos):
        for n2, a2 in autos[i + 1:]:
            if (samples[n1] == samples[n2]) != language_equivalent(a1, a2):
                separated = False
                fails.append(f"bounds (3,3) do not separate {n1} and {n2}")
    for name, a in autos:
        m = minimize(a)
        if not is_reachable(m) or not is_observable(m):
            fails.append(f"minimize({name}) not minimal")
        if language_sample(m, 3, 3) != samples[name]:
            fails.append(f"minimize({name}) changes the language")
        for other, b in autos:
            if not is_reachable(b) or samples[other] != samples[name]:
                continue
            h = find_morphism(b, m)
            if h is None or set(h.h_x) != set(range(m.nx)) or set(h.h_y) != set(range(m.ny)):
                fails.append(f"{other} has no morphism onto minimize({name})")
        if not isomorphic(minimize(m), m):
            fails.append(f"minimize not idempotent on {name}")
    detail = f"{len(autos)} automata, bounds separate languages: {separated}"
    return not fails, detail, fails


def preservation_cases(cfg: CorpusConfig = CorpusConfig()):
    """Yield ``(label, premise, conclusion)`` for the eight implications."""
    for name, a in corpus_automata(cfg):
        oc, orr = omega_conditions(a), omega_rev_conditions(a)
        ra = rev(a)
        oc_r, orr_r = omega_conditions(ra), omega_rev_conditions(ra)
        w = wilke_axioms(alg(a).base)
        yield f"circular({name}) => rev_circular(rev)", oc.circular, orr_r.rev_circular
        yield f"rev_circular({name}) => circular(rev)", orr.rev_circular, oc_r.circular
        yield f"coherent({name}) => rev_coherent(rev)", oc.coherent, orr_r.rev_coherent
        yield f"rev_coherent({name}) => coherent(rev)", orr.rev_coherent, oc_r.coherent
        yield f"rev_circular({name}) => circularity(alg)", orr.rev_circular, w.circularity
        yield f"rev_coherent({name}) => coherence(alg)", orr.rev_coherent, w.coherence
    for name, e in corpus_semigroups(cfg):
        w = wilke_axioms(e.base)
        r = omega_rev_conditions(aut(e))
        yield f"circularity({name}) => rev_circular(aut)", w.circularity, r.rev_circular
        yield f"coherence({name}) => rev_coherent(aut)", w.coherence, r.rev_coherent


@_timed(8, "preservation implications")
def criterion_8(cfg):
    fails = []
    total = premises = 0
    for label, premise, conclusion in preservation_cases(cfg):
        total += 1
        premises += premise
        if premise and not conclusion:
            fails.append(label)
    return not fails, f"{total} instances, {premises} with true premise", fails


@_timed(9, "restricted adjunction")
def criterion_9(cfg):
    fails = []
    n_e = n_a = 0
    for name, e in corpus_semigroups(cfg):
        if wilke_axioms(e.base).is_wilke:
            n_e += 1
            if not omega_rev_conditions(aut(e)).is_omega_rev:
                fails.append(f"aut({name})")
    for name, a in corpus_automata(cfg):
        if is_reachable(a) and omega_rev_conditions(a).is_omega_rev:
            n_a += 1
            if not wilke_axioms(alg(a).base).is_wilke:
                fails.append(f"alg({name})")
    return not fails, f"{n_e} Wilke semigroups, {n_a} reachable reverse-omega automata", fails


@_timed(10, "canonical form agrees with unrolling")
def criterion_10(cfg):
    ls = enumerate_lassos("ab", 3, 3)
    fails = []
    for l1 in ls:
        for l2 in ls:
            if up_equal(l1, l2) != up_equal_unrolled(l1, l2):
                fails.append(f"{l1} vs {l2}")
    return not fails, f"{len(ls) ** 2} pairs", fails


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)


def run_all(cfg: CorpusConfig = CorpusConfig()) -> list[CriterionResult]:
    return [c(cfg) for c in CRITERIA]
