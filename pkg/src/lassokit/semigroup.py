"""Finite lasso semigroups, Wilke axioms and extended (recognising) structures.

A lasso semigroup has a finite sort ``W+`` with an associative product ``dot``,
an infinite sort ``Womega`` on which ``W+`` acts by ``times``, and an
``omega_pow`` map ``W+ -> Womega``.  Tables are stored as read-only numpy
arrays indexed by element number; names are only for I/O.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Sequence

import numpy as np

from .automaton import LassoAutomaton, compose_triples, letter_triples
from .errors import DEFAULT_CLOSURE_CAP, LassoError, SizeCapExceeded
from .lasso_core import LanguageSample, Lasso, check_alphabet, check_word


def _frozen(arr, ndim: int) -> np.ndarray:
    out = np.array(arr, dtype=np.int64, copy=True)
    if out.ndim != ndim:
        raise LassoError(f"expected a {ndim}-dimensional table")
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class LassoSemigroup:
    plus_names: tuple[str, ...]
    omega_names: tuple[str, ...]
    dot: np.ndarray        # dot[s, t]
    times: np.ndarray      # times[s, alpha]
    omega_pow: np.ndarray  # omega_pow[s]

    def __post_init__(self):
        n, m = len(self.plus_names), len(self.omega_names)
        object.__setattr__(self, "dot", _frozen(self.dot, 2))
        object.__setattr__(self, "times", _frozen(self.times, 2))
        object.__setattr__(self, "omega_pow", _frozen(self.omega_pow, 1))
        if n == 0 or m == 0:
            raise LassoError("both sorts must be nonempty")
        if self.dot.shape != (n, n) or self.times.shape != (n, m) or self.omega_pow.shape != (n,):
            raise LassoError("table shapes do not match the element lists")
        for tab, bound, name in ((self.dot, n, "dot"), (self.times, m, "times"),
                                 (self.omega_pow, m, "omegaPow")):
            if tab.size and (tab.min() < 0 or tab.max() >= bound):
                raise LassoError(f"{name} has entries outside its sort")

    @property
    def n_plus(self) -> int:
        return len(self.plus_names)

    @property
    def n_omega(self) -> int:
        return len(self.omega_names)

    def __eq__(self, other):
        if not isinstance(other, LassoSemigroup):
            return NotImplemented
        return (self.plus_names == other.plus_names and self.omega_names == other.omega_names
                and np.array_equal(self.dot, other.dot) and np.array_equal(self.times, other.times)
                and np.array_equal(self.omega_pow, other.omega_pow))

    __hash__ = None


def validate_semigroup(w: LassoSemigroup, generators: Sequence[int] | None = None) -> None:
    """Check associativity of ``dot`` and mixed associativity of ``times``.

    Exhaustive over all triples by default (O(n^3)).  When ``generators``
    generate ``W+``, the middle factor only needs to range over them, which is
    sufficient for both laws and costs O(|gens| n^2).
    """
    dot, times = w.dot, w.times
    middles = range(w.n_plus) if generators is None else sorted(set(generators))
    for t in middles:
        # (s.t).u vs s.(t.u) over all s, u
        lhs = dot[dot[:, t], :]
        rhs = dot[:, dot[t, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            s, u = bad[0]
            raise LassoError("associativity fails at "
                             f"({w.plus_names[s]}, {w.plus_names[t]}, {w.plus_names[u]})")
        # s x (t x alpha) vs (s.t) x alpha
        lhs = times[:, times[t, :]]
        rhs = times[dot[:, t], :]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            s, al = bad[0]
            raise LassoError("mixed associativity fails at "
                             f"({w.plus_names[s]}, {w.plus_names[t]}, {w.omega_names[al]})")


# -- the free lasso semigroup ------------------------------------------------------

def free_dot(u: str, v: str) -> str:
    if not u or not v:
        raise LassoError("free_dot needs nonempty words")
    return u + v


def free_times(u: str, l: Lasso) -> Lasso:
    if not u:
        raise LassoError("free_times needs a nonempty word")
    return Lasso(u + l.spoke, l.loop)


def free_omega(u: str) -> Lasso:
    if not u:
        raise LassoError("free_omega needs a nonempty word")
    return Lasso("", u)


# -- extended structures -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ExtendedLassoSemigroup:
    """A lasso semigroup with letter images ``gen`` (determining the surjection
    from the free structure) and a recognising subset of ``Womega``."""
    base: LassoSemigroup
    alphabet: str
    gen: tuple[int, ...]
    recognizing: frozenset[int]

    @property
    def sym(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def __eq__(self, other):
        if not isinstance(other, ExtendedLassoSemigroup):
            return NotImplemented
        return (self.base == other.base and self.alphabet == other.alphabet
                and self.gen == other.gen and self.recognizing == other.recognizing)

    __hash__ = None


def generated_plus(base: LassoSemigroup, gens: Sequence[int]) -> set[int]:
    seen = set(gens)
    todo = list(seen)
    while todo:
        s = todo.pop()
        for g in gens:
            t = int(base.dot[s, g])
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def generated_omega(base: LassoSemigroup, gens: Sequence[int], plus: set[int]) -> set[int]:
    seen = {int(base.omega_pow[s]) for s in plus}
    todo = list(seen)
    while todo:
        al = todo.pop()
        for g in gens:
            b = int(base.times[g, al])
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def validate_extended(e: ExtendedLassoSemigroup, exhaustive: bool = True) -> None:
    """Check the base laws, the letter images and surjectivity of the induced map."""
    check_alphabet(e.alphabet)
    if len(e.gen) != len(e.alphabet):
        raise LassoError("gen must give one element per letter")
    if any(not 0 <= g < e.base.n_plus for g in e.gen):
        raise LassoError("gen maps a letter outside W+")
    if any(not 0 <= p < e.base.n_omega for p in e.recognizing):
        raise LassoError("recognizing set must lie in Womega")
    plus = generated_plus(e.base, e.gen)
    if len(plus) != e.base.n_plus:
        missing = sorted(set(range(e.base.n_plus)) - plus)
        raise LassoError("not surjective on W+: unreachable "
                         f"{[e.base.plus_names[i] for i in missing[:5]]}")
    omega = generated_omega(e.base, e.gen, plus)
    if len(omega) != e.base.n_omega:
        missing = sorted(set(range(e.base.n_omega)) - omega)
        raise LassoError("not surjective on Womega: unreachable "
                         f"{[e.base.omega_names[i] for i in missing[:5]]}")
    validate_semigroup(e.base, None if exhaustive else e.gen)


def eval_plus(e: ExtendedLassoSemigroup, u: str) -> int:
    if not u:
        raise LassoError("eval_plus needs a nonempty word")
    check_word(u, e.alphabet)
    sym = e.sym
    s = e.gen[sym[u[0]]]
    for c in u[1:]:
        s = int(e.base.dot[s, e.gen[sym[c]]])
    return s


def eval_omega(e: ExtendedLassoSemigroup, l: Lasso) -> int:
    alpha = int(e.base.omega_pow[eval_plus(e, l.loop)])
    if l.spoke:
        alpha = int(e.base.times[eval_plus(e, l.spoke), alpha])
    return alpha


def recognizes(e: ExtendedLassoSemigroup, l: Lasso) -> bool:
    return eval_omega(e, l) in e.recognizing


def recognition_sample(e: ExtendedLassoSemigroup, max_spoke: int, max_loop: int) -> LanguageSample:
    return LanguageSample.from_predicate(e.alphabet, max_spoke, max_loop, lambda l: recognizes(e, l))


def complement(e: ExtendedLassoSemigroup) -> ExtendedLassoSemigroup:
    return ExtendedLassoSemigroup(e.base, e.alphabet, e.gen,
                                  frozenset(range(e.base.n_omega)) - e.recognizing)


# -- Wilke axioms ------------------------------------------------------------------------

@dataclass(frozen=True)
class WilkeReport:
    circularity: bool
    coherence: bool
    circularity_witness: dict | None
    coherence_witness: dict | None
    circularity_checks: int
    coherence_checks: int

    @property
    def is_wilke(self) -> bool:
        return self.circularity and self.coherence

    @property
    def checks(self) -> int:
        return self.circularity_checks + self.coherence_checks

    @property
    def witness(self) -> dict | None:
        return self.circularity_witness or self.coherence_witness

    def to_json(self) -> dict:
        return {"circularity": self.circularity, "coherence": self.coherence,
                "witness": self.witness, "checks": self.checks}


def wilke_axioms(w: LassoSemigroup) -> WilkeReport:
    """Check ``(s^k)^omega = s^omega`` and ``s x (t s)^omega = (s t)^omega``.

    For each ``s`` the powers are walked until one repeats (at most ``n``
    distinct values), so circularity costs at most ``2n`` counted steps per
    element: one equation and one table lookup per power.  Coherence is exactly
    ``n^2`` counted pair checks.  The scan is never cut short, so the counters
    reflect the full procedure; the witnesses are the first failures found.
    """
    dot = w.dot.tolist()
    times = w.times.tolist()
    opow = w.omega_pow.tolist()
    n = w.n_plus
    circ_checks = 0
    circ_w = None
    for s in range(n):
        target = opow[s]
        seen = set()
        p, k = s, 1
        while p not in seen:
            seen.add(p)
            circ_checks += 1
            if circ_w is None and opow[p] != target:
                circ_w = {"s": w.plus_names[s], "k": k}
            p = dot[p][s]
            circ_checks += 1
            k += 1
    coh_checks = 0
    coh_w = None
    for s in range(n):
        row_s, times_s = dot[s], times[s]
        for t in range(n):
            coh_checks += 1
            if coh_w is None and times_s[opow[dot[t][s]]] != opow[row_s[t]]:
                coh_w = {"s": w.plus_names[s], "t": w.plus_names[t]}
    return WilkeReport(circ_w is None, coh_w is None, circ_w, coh_w, circ_checks, coh_checks)


# -- closure from generators ---------------------------------------------------------------

@dataclass
class Closure:
    """An extended structure cut out of an ambient one, with the ambient
    elements and witness words/lassos of every element kept alongside."""
    ext: ExtendedLassoSemigroup
    plus_elements: list
    omega_elements: list
    plus_witness: list[str]
    omega_witness: list[Lasso]


def _disjoint_names(plus: list[str], omega: list[str]) -> list[str]:
    taken = set(plus)
    out = []
    for name in omega:
        while name in taken:
            name += "'"
        taken.add(name)
        out.append(name)
    return out


def closure_from_generators(
    alphabet: str,
    gens: Sequence[Hashable],
    mul: Callable,
    act: Callable,
    omega: Callable,
    accepting: Callable[[Hashable], bool],
    omega_name: Callable[[Hashable, Lasso], str] | None = None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> Closure:
    """Restrict an ambient lasso semigroup to the image of the letter map.

    ``mul(s, t)``, ``act(s, alpha)`` and ``omega(s)`` are the ambient
    operations.  ``W+`` is found breadth-first by right multiplication with
    letter images, so each element gets its shortlex-least witness word and is
    named by it.  ``Womega`` is seeded with all ``s^omega`` and closed under the
    letter actions.  Full tables are then filled from the letter columns using
    ``s.(t g) = (s.t).g`` and ``(t g) x alpha = t x (g x alpha)``.
    """
    check_alphabet(alphabet)
    k = len(alphabet)
    index: dict = {}
    elems: list = []
    wit: list[str] = []
    parent: list[int] = []
    letter: list[int] = []
    for c, g in enumerate(gens):
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
            wit.append(alphabet[c])
            parent.append(-1)
            letter.append(c)
    gen_idx = [index[g] for g in gens]
    right: list[list[int]] = []
    i = 0
    while i < len(elems):
        s = elems[i]
        row = []
        for c, g in enumerate(gens):
            t = mul(s, g)
            j = index.get(t)
            if j is None:
                j = index[t] = len(elems)
                if j >= cap:
                    raise SizeCapExceeded("closure W+", j + 1, cap)
                elems.append(t)
                wit.append(wit[i] + alphabet[c])
                parent.append(i)
                letter.append(c)
            row.append(j)
        right.append(row)
        i += 1
    n = len(elems)
    right_arr = np.array(right, dtype=np.int64).reshape(n, k)
    dot = np.empty((n, n), dtype=np.int64)
    for j in range(n):
        if parent[j] < 0:
            dot[:, j] = right_arr[:, letter[j]]
        else:
            dot[:, j] = right_arr[dot[:, parent[j]], letter[j]]

    o_index: dict = {}
    o_elems: list = []
    o_wit: list[Lasso] = []
    opow = []
    for j in range(n):
        al = omega(elems[j])
        if al not in o_index:
            o_index[al] = len(o_elems)
            o_elems.append(al)
            o_wit.append(Lasso("", wit[j]))
        opow.append(o_index[al])
    left_cols: list[list[int]] = []  # left_cols[alpha][c] = index of g_c x alpha
    i = 0
    while i < len(o_elems):
        al = o_elems[i]
        row = []
        for c, g in enumerate(gens):
            b = act(g, al)
            j = o_index.get(b)
            if j is None:
                j = o_index[b] = len(o_elems)
                if j >= cap:
                    raise SizeCapExceeded("closure Womega", j + 1, cap)
                o_elems.append(b)
                o_wit.append(Lasso(alphabet[c] + o_wit[i].spoke, o_wit[i].loop))
            row.append(j)
        left_cols.append(row)
        i += 1
    m = len(o_elems)
    left = np.array(left_cols, dtype=np.int64).reshape(m, k).T  # left[c, alpha]
    times = np.empty((n, m), dtype=np.int64)
    for j in range(n):
        if parent[j] < 0:
            times[j] = left[letter[j]]
        else:
            times[j] = times[parent[j]][left[letter[j]]]

    plus_names = list(wit)
    if omega_name is None:
        omega_names = [f"({l.spoke},{l.loop})" for l in o_wit]
    else:
        omega_names = [omega_name(al, l) for al, l in zip(o_elems, o_wit)]
    omega_names = _disjoint_names(plus_names, omega_names)
    base = LassoSemigroup(tuple(plus_names), tuple(omega_names), dot, times, np.array(opow))
    ext = ExtendedLassoSemigroup(base, alphabet, tuple(gen_idx),
                                 frozenset(i for i, al in enumerate(o_elems) if accepting(al)))
    return Closure(ext, elems, o_elems, wit, o_wit)


def restrict_to_image(e: ExtendedLassoSemigroup) -> ExtendedLassoSemigroup:
    """Codomain restriction of a (possibly non-surjective) letter map."""
    b = e.base
    return closure_from_generators(
        e.alphabet, list(e.gen),
        mul=lambda s, t: int(b.dot[s, t]),
        act=lambda s, al: int(b.times[s, al]),
        omega=lambda s: int(b.omega_pow[s]),
        accepting=lambda al: al in e.recognizing,
        omega_name=lambda al, _l: b.omega_names[al],
    ).ext


# -- morphisms and kernel refinement ---------------------------------------------------------

@dataclass(frozen=True)
class ExtMorphism:
    g_plus: tuple[int, ...]
    g_omega: tuple[int, ...]

    def as_names(self, e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup) -> dict:
        return {"plus": {e1.base.plus_names[i]: e2.base.plus_names[j] for i, j in enumerate(self.g_plus)},
                "omega": {e1.base.omega_names[i]: e2.base.omega_names[j]
                          for i, j in enumerate(self.g_omega)}}


def check_ext_morphism(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup, g: ExtMorphism) -> bool:
    b1, b2 = e1.base, e2.base
    if e1.alphabet != e2.alphabet or len(g.g_plus) != b1.n_plus or len(g.g_omega) != b1.n_omega:
        return False
    gp, go = np.array(g.g_plus), np.array(g.g_omega)
    if not np.array_equal(gp[b1.dot], b2.dot[np.ix_(gp, gp)]):
        return False
    if not np.array_equal(go[b1.times], b2.times[np.ix_(gp, go)]):
        return False
    if not np.array_equal(go[b1.omega_pow], b2.omega_pow[gp]):
        return False
    if any(g.g_plus[a] != b for a, b in zip(e1.gen, e2.gen)):
        return False
    return all((al in e1.recognizing) == (g.g_omega[al] in e2.recognizing) for al in range(b1.n_omega))


def _paired_plus(alphabet: str, gens1, gens2, mul1, mul2):
    """Simultaneous closure of two letter maps on the finite sort.

    Returns ``(partner, witness, conflict)``: ``partner`` sends each element
    of the first structure to the element it is paired with; ``conflict``
    names two words identified by the first map but not the second.
    """
    pmap: dict = {}
    pwit: dict = {}
    queue = deque()
    for c, (g1, g2) in enumerate(zip(gens1, gens2)):
        if g1 in pmap:
            if pmap[g1] != g2:
                return pmap, pwit, f"word {alphabet[c]!r} vs {pwit[g1]!r}"
            continue
        pmap[g1] = g2
        pwit[g1] = alphabet[c]
        queue.append(g1)
    while queue:
        s1 = queue.popleft()
        s2 = pmap[s1]
        for c, (g1, g2) in enumerate(zip(gens1, gens2)):
            t1, t2 = mul1(s1, g1), mul2(s2, g2)
            if t1 in pmap:
                if pmap[t1] != t2:
                    return pmap, pwit, f"word {pwit[s1] + alphabet[c]!r} vs {pwit[t1]!r}"
            else:
                pmap[t1] = t2
                pwit[t1] = pwit[s1] + alphabet[c]
                queue.append(t1)
    return pmap, pwit, None


def _paired_omega(alphabet: str, pmap: dict, pwit: dict, gens1, gens2, act1, act2, om1, om2):
    """Same as :func:`_paired_plus` for the infinite sort, seeded with the
    omega powers of the paired finite elements."""
    omap: dict = {}
    owit: dict = {}
    queue = deque()
    for s1, s2 in pmap.items():
        a1, a2 = om1(s1), om2(s2)
        l = Lasso("", pwit[s1])
        if a1 in omap:
            if omap[a1] != a2:
                return omap, f"lasso {l!r} vs {owit[a1]!r}"
        else:
            omap[a1] = a2
            owit[a1] = l
            queue.append(a1)
    while queue:
        a1 = queue.popleft()
        a2 = omap[a1]
        for c, (g1, g2) in enumerate(zip(gens1, gens2)):
            b1, b2 = act1(g1, a1), act2(g2, a2)
            l = Lasso(alphabet[c] + owit[a1].spoke, owit[a1].loop)
            if b1 in omap:
                if omap[b1] != b2:
                    return omap, f"lasso {l!r} vs {owit[b1]!r}"
            else:
                omap[b1] = b2
                owit[b1] = l
                queue.append(b1)
    return omap, None


def _paired_ext(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup):
    if e1.alphabet != e2.alphabet:
        raise LassoError("alphabets differ")
    d1, d2 = e1.base.dot.tolist(), e2.base.dot.tolist()
    t1, t2 = e1.base.times.tolist(), e2.base.times.tolist()
    o1, o2 = e1.base.omega_pow.tolist(), e2.base.omega_pow.tolist()
    pmap, pwit, conflict = _paired_plus(e1.alphabet, e1.gen, e2.gen,
                                        lambda s, t: d1[s][t], lambda s, t: d2[s][t])
    if conflict is not None:
        return pmap, None, conflict
    omap, conflict = _paired_omega(e1.alphabet, pmap, pwit, e1.gen, e2.gen,
                                   lambda s, a: t1[s][a], lambda s, a: t2[s][a],
                                   lambda s: o1[s], lambda s: o2[s])
    return pmap, omap, conflict


def check_refinement(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup) -> bool:
    """Whether the kernel of the first letter map refines that of the second."""
    return _paired_ext(e1, e2)[2] is None


def _ext_propagate(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup):
    pmap, omap, conflict = _paired_ext(e1, e2)
    if conflict is not None:
        return None, "kernel does not refine: " + conflict
    b1 = e1.base
    if len(pmap) != b1.n_plus or len(omap) != b1.n_omega:
        return None, "first structure is not generated by its letters"
    g = ExtMorphism(tuple(pmap[i] for i in range(b1.n_plus)),
                    tuple(omap[i] for i in range(b1.n_omega)))
    for al in range(b1.n_omega):
        if (al in e1.recognizing) != (g.g_omega[al] in e2.recognizing):
            return None, f"recognising sets disagree at {b1.omega_names[al]!r}"
    if not check_ext_morphism(e1, e2, g):
        return None, "candidate map is not a homomorphism"
    return g, None


def find_ext_morphism(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup) -> ExtMorphism | None:
    """The unique morphism ``e1 -> e2`` commuting with the letter maps, if any."""
    return _ext_propagate(e1, e2)[0]


def ext_morphism_conflict(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup) -> str | None:
    return _ext_propagate(e1, e2)[1]


def all_ext_morphisms(e1: ExtendedLassoSemigroup, e2: ExtendedLassoSemigroup) -> list[ExtMorphism]:
    """Every morphism by brute force over all element maps (tiny inputs only)."""
    out = []
    for gp in product(range(e2.base.n_plus), repeat=e1.base.n_plus):
        for go in product(range(e2.base.n_omega), repeat=e1.base.n_omega):
            g = ExtMorphism(gp, go)
            if check_ext_morphism(e1, e2, g):
                out.append(g)
    return out


def check_refinement_aut(a1: LassoAutomaton, a2: LassoAutomaton) -> bool:
    """Whether the transition-triple and reached-state congruences of ``a1``
    refine those of ``a2``."""
    if a1.alphabet != a2.alphabet:
        raise LassoError("alphabets differ")
    g1, g2 = letter_triples(a1), letter_triples(a2)
    # chi(w a) = chi(a) . chi(w)
    _, _, conflict = _paired_plus(a1.alphabet, g1, g2,
                                  lambda s, g: compose_triples(g, s),
                                  lambda s, g: compose_triples(g, s))
    if conflict is not None:
        return False
    k = len(a1.alphabet)
    xs = {(a1.initial, a2.initial)}
    todo = list(xs)
    while todo:
        p, r = todo.pop()
        for c in range(k):
            t = (a1.rho[p][c], a2.rho[r][c])
            if t not in xs:
                xs.add(t)
                todo.append(t)
    ys = {(a1.sigma[p][c], a2.sigma[r][c]) for p, r in xs for c in range(k)}
    todo = list(ys)
    while todo:
        p, r = todo.pop()
        for c in range(k):
            t = (a1.xi[p][c], a2.xi[r][c])
            if t not in ys:
                ys.add(t)
                todo.append(t)
    partner: dict[int, int] = {}
    for y1, y2 in ys:
        if partner.setdefault(y1, y2) != y2:
            return False
    return True
