"""Language-reversing translations between automata and extended semigroups,
and the pipelines built from them (minimisation, syntactic recogniser,
algebraic omega check, adjunction probe)."""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import (
    RESERVED_INIT,
    AutomatonMorphism,
    LassoAutomaton,
    compose_triples,
    find_morphism,
    is_reachable,
    letter_triples,
    reach,
    rev_reach,
)
from .errors import DEFAULT_CLOSURE_CAP, DEFAULT_SUBSET_CAP, LassoError, SizeCapExceeded
from .semigroup import (
    Closure,
    ExtendedLassoSemigroup,
    ExtMorphism,
    WilkeReport,
    closure_from_generators,
    find_ext_morphism,
    wilke_axioms,
)


def aut(e: ExtendedLassoSemigroup) -> LassoAutomaton:
    """Automaton on ``W+`` plus a fresh start state, acting by left multiplication.

    Accepts the reverse of the language ``e`` recognises.
    """
    b = e.base
    dot, times, opow = b.dot.tolist(), b.times.tolist(), b.omega_pow.tolist()
    gen = e.gen
    # spoke state 0 is the start token, element t of W+ is spoke state t + 1
    rho = [tuple(g + 1 for g in gen)]
    rho += [tuple(dot[g][t] + 1 for g in gen) for t in range(b.n_plus)]
    sigma = [tuple(opow[g] for g in gen)]
    sigma += [tuple(opow[dot[g][t]] for g in gen) for t in range(b.n_plus)]
    xi = [tuple(times[g][al] for g in gen) for al in range(b.n_omega)]
    return LassoAutomaton(e.alphabet, (RESERVED_INIT,) + b.plus_names, b.omega_names, 0,
                          tuple(rho), tuple(sigma), tuple(xi), frozenset(e.recognizing))


def alg_closure(a: LassoAutomaton, cap: int = DEFAULT_CLOSURE_CAP) -> Closure:
    """Image of the letter map in the ambient structure of transition triples,
    keeping the triples themselves."""
    q = a.initial
    return closure_from_generators(
        a.alphabet,
        letter_triples(a),
        mul=compose_triples,
        act=lambda s, y: s[2][y],
        omega=lambda s: s[1][q],
        accepting=lambda y: y in a.final,
        omega_name=lambda y, _l: a.y_names[y],
        cap=cap,
    )


def alg(a: LassoAutomaton, cap: int = DEFAULT_CLOSURE_CAP) -> ExtendedLassoSemigroup:
    """Extended lasso semigroup recognising the reverse of ``a``'s language."""
    return alg_closure(a, cap).ext


def minimize(a: LassoAutomaton, cap: int = DEFAULT_SUBSET_CAP) -> LassoAutomaton:
    """Double reversal with reachability: reachable, observable, same language."""
    return rev_reach(rev_reach(a, cap), cap)


def syntactic(a: LassoAutomaton, cap: int = DEFAULT_SUBSET_CAP,
              closure_cap: int = DEFAULT_CLOSURE_CAP) -> ExtendedLassoSemigroup:
    """Maximal quotient of the free lasso semigroup recognising ``a``'s language.

    Unreachable states are dropped first: reversing a reachable automaton gives
    an observable one, so its reachable part is minimal.
    """
    return alg(rev_reach(reach(a), cap), closure_cap)


def theoretical_bound(a: LassoAutomaton) -> str:
    m = max(a.nx, a.ny)
    return f"2^(3*2^(2*{m}))"


@dataclass(frozen=True)
class AlgebraicOmegaReport:
    is_omega: bool
    circularity: bool
    coherence: bool
    size: int
    wilke: WilkeReport

    def to_json(self) -> dict:
        return {"is_omega": self.is_omega, "circularity": self.circularity,
                "coherence": self.coherence, "size": self.size,
                "witness": self.wilke.witness}


def omega_check_algebraic(a: LassoAutomaton, cap: int = DEFAULT_SUBSET_CAP,
                          closure_cap: int = DEFAULT_CLOSURE_CAP) -> AlgebraicOmegaReport:
    """Decide the omega conditions through the Wilke axioms of
    ``alg(reach(rev(a)))``.

    No ``reach`` is applied to ``a`` itself: the conditions range over every
    spoke state, reachable or not, and the reversed automaton remembers them all.
    """
    try:
        e = alg(rev_reach(a, cap), closure_cap)
    except SizeCapExceeded as exc:
        raise SizeCapExceeded(f"{exc.what} (worst case {theoretical_bound(a)})",
                              exc.estimate, exc.cap) from exc
    rep = wilke_axioms(e.base)
    return AlgebraicOmegaReport(rep.is_wilke, rep.circularity, rep.coherence, e.base.n_plus, rep)


@dataclass(frozen=True)
class AdjunctionReport:
    hom_alg_side: ExtMorphism | None
    hom_aut_side: AutomatonMorphism | None
    reach_shadow: bool | None = None

    @property
    def consistent(self) -> bool:
        ok = (self.hom_alg_side is None) == (self.hom_aut_side is None)
        return ok and self.reach_shadow is not False

    def to_json(self) -> dict:
        return {"hom_alg_side": self.hom_alg_side is not None,
                "hom_aut_side": self.hom_aut_side is not None,
                "reach_shadow": self.reach_shadow,
                "consistent": self.consistent}


def adjunction_probe(e: ExtendedLassoSemigroup, a: LassoAutomaton,
                     b: LassoAutomaton | None = None,
                     closure_cap: int = DEFAULT_CLOSURE_CAP) -> AdjunctionReport:
    """Compare the two hom-sets ``e -> alg(a)`` and ``aut(e) -> a``.

    With ``b`` given, also check that ``aut(e)`` maps into ``reach(b)`` exactly
    when it maps into ``b``.
    """
    if not is_reachable(a):
        raise LassoError("adjunction_probe needs a reachable automaton")
    if e.alphabet != a.alphabet:
        raise LassoError("alphabets differ")
    g = find_ext_morphism(e, alg(a, closure_cap))
    ae = aut(e)
    h = find_morphism(ae, a)
    shadow = None
    if b is not None:
        shadow = (find_morphism(ae, reach(b)) is None) == (find_morphism(ae, b) is None)
    return AdjunctionReport(g, h, shadow)
