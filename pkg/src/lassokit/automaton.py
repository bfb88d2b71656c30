"""Deterministic lasso automata.

An automaton has spoke states ``X`` and loop states ``Y``.  ``rho`` reads the
spoke inside ``X``, a single ``sigma`` step reads the first loop symbol and
moves into ``Y``, and ``xi`` reads the rest of the loop.  A lasso is accepted
when the run ends in a final ``Y`` state.

States are stored by index; ``x_names``/``y_names`` carry the external names
used by the JSON format and by error messages.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import DEFAULT_CLOSURE_CAP, DEFAULT_SUBSET_CAP, LassoError, SizeCapExceeded
from .lasso_core import LanguageSample, Lasso, check_alphabet, check_word

RESERVED_INIT = "@init"

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LassoAutomaton:
    alphabet: str
    x_names: tuple[str, ...]
    y_names: tuple[str, ...]
    initial: int
    rho: Table    # rho[x][a] -> x
    sigma: Table  # sigma[x][a] -> y
    xi: Table     # xi[y][a] -> y
    final: frozenset[int]

    @classmethod
    def from_tables(cls, alphabet: str, x_states: Sequence[str], y_states: Sequence[str],
                    initial: str, rho: Mapping, sigma: Mapping, xi: Mapping,
                    final: Iterable[str]) -> "LassoAutomaton":
        """Build from name-keyed tables ``{state: {symbol: state}}``, checking
        every invariant and raising :class:`LassoError` on the first failure."""
        check_alphabet(alphabet)
        x_states, y_states = list(x_states), list(y_states)
        for s in x_states + y_states:
            if not isinstance(s, str) or not s:
                raise LassoError("state names must be nonempty strings")
            if s.startswith("@") and not (s == RESERVED_INIT and s in x_states):
                raise LassoError(f"state name {s!r} uses the reserved '@' prefix")
        if len(set(x_states)) != len(x_states) or len(set(y_states)) != len(y_states):
            raise LassoError("duplicate state names")
        if set(x_states) & set(y_states):
            raise LassoError(f"overlapping state names: {sorted(set(x_states) & set(y_states))}")
        if not x_states:
            raise LassoError("X must be nonempty")
        if not y_states:
            raise LassoError("Y must be nonempty")
        xi_ = {s: i for i, s in enumerate(x_states)}
        yi_ = {s: i for i, s in enumerate(y_states)}
        if initial not in xi_:
            raise LassoError(f"initial not in X: {initial!r}")

        def table(name, tab, src, dst):
            rows = []
            for s in src:
                row_map = tab.get(s)
                if row_map is None:
                    raise LassoError(f"partial {name}: no row for state {s!r}")
                row = []
                for a in alphabet:
                    if a not in row_map:
                        raise LassoError(f"partial {name}: missing ({s!r}, {a!r})")
                    t = row_map[a]
                    if t not in dst:
                        raise LassoError(f"{name}({s!r}, {a!r}) = {t!r} is not a valid target")
                    row.append(dst[t])
                extra = set(row_map) - set(alphabet)
                if extra:
                    raise LassoError(f"{name} row {s!r} uses symbols outside the alphabet: {sorted(extra)}")
                rows.append(tuple(row))
            extra_rows = set(tab) - set(src)
            if extra_rows:
                raise LassoError(f"{name} has rows for unknown states: {sorted(extra_rows)}")
            return tuple(rows)

        final = list(final)
        for f in final:
            if f not in yi_:
                raise LassoError(f"final must be Y-states: {f!r}")
        return cls(alphabet, tuple(x_states), tuple(y_states), xi_[initial],
                   table("rho", rho, x_states, xi_), table("sigma", sigma, x_states, yi_),
                   table("xi", xi, y_states, yi_), frozenset(yi_[f] for f in final))

    @cached_property
    def sym(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    @property
    def nx(self) -> int:
        return len(self.x_names)

    @property
    def ny(self) -> int:
        return len(self.y_names)

    def size(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    def run_x(self, x: int, word: str) -> int:
        for c in word:
            x = self.rho[x][self.sym[c]]
        return x

    def run_y(self, y: int, word: str) -> int:
        for c in word:
            y = self.xi[y][self.sym[c]]
        return y

    def lasso_state(self, l: Lasso, start: int | None = None) -> int:
        """Loop state reached on ``l`` from ``start`` (default: the initial state)."""
        check_word(l.spoke + l.loop, self.alphabet)
        x = self.run_x(self.initial if start is None else start, l.spoke)
        y = self.sigma[x][self.sym[l.loop[0]]]
        return self.run_y(y, l.loop[1:])

    def with_initial(self, x: int) -> "LassoAutomaton":
        return LassoAutomaton(self.alphabet, self.x_names, self.y_names, x,
                              self.rho, self.sigma, self.xi, self.final)

    def named_tables(self) -> dict:
        al = self.alphabet
        return {
            "rho": {self.x_names[x]: {a: self.x_names[self.rho[x][i]] for i, a in enumerate(al)}
                    for x in range(self.nx)},
            "sigma": {self.x_names[x]: {a: self.y_names[self.sigma[x][i]] for i, a in enumerate(al)}
                      for x in range(self.nx)},
            "xi": {self.y_names[y]: {a: self.y_names[self.xi[y][i]] for i, a in enumerate(al)}
                   for y in range(self.ny)},
        }


def validate(a: LassoAutomaton) -> None:
    """Raise :class:`LassoError` naming the first violated invariant."""
    check_alphabet(a.alphabet)
    k = len(a.alphabet)
    if set(a.x_names) & set(a.y_names):
        raise LassoError("overlapping state names")
    if len(set(a.x_names)) != a.nx or len(set(a.y_names)) != a.ny:
        raise LassoError("duplicate state names")
    if not 0 <= a.initial < a.nx:
        raise LassoError("initial not in X")
    for name, tab, rows, bound in (("rho", a.rho, a.nx, a.nx), ("sigma", a.sigma, a.nx, a.ny),
                                   ("xi", a.xi, a.ny, a.ny)):
        if len(tab) != rows or any(len(r) != k for r in tab):
            raise LassoError(f"partial {name}")
        if any(not 0 <= t < bound for r in tab for t in r):
            raise LassoError(f"{name} has targets outside its codomain")
    if any(not 0 <= f < a.ny for f in a.final):
        raise LassoError("final must be Y-states")


def accept(a: LassoAutomaton, l: Lasso) -> bool:
    return a.lasso_state(l) in a.final


def language_sample(a: LassoAutomaton, max_spoke: int, max_loop: int) -> LanguageSample:
    return LanguageSample.from_predicate(a.alphabet, max_spoke, max_loop, lambda l: accept(a, l))


def _restrict(a: LassoAutomaton, xs: list[int], ys: list[int], initial: int) -> LassoAutomaton:
    xs, ys = sorted(xs), sorted(ys)
    xmap = {x: i for i, x in enumerate(xs)}
    ymap = {y: i for i, y in enumerate(ys)}
    return LassoAutomaton(
        a.alphabet,
        tuple(a.x_names[x] for x in xs),
        tuple(a.y_names[y] for y in ys),
        xmap[initial],
        tuple(tuple(xmap[t] for t in a.rho[x]) for x in xs),
        tuple(tuple(ymap[t] for t in a.sigma[x]) for x in xs),
        tuple(tuple(ymap[t] for t in a.xi[y]) for y in ys),
        frozenset(ymap[y] for y in ys if y in a.final),
    )


def reachable_states(a: LassoAutomaton) -> tuple[set[int], set[int]]:
    xs = {a.initial}
    todo = [a.initial]
    while todo:
        x = todo.pop()
        for t in a.rho[x]:
            if t not in xs:
                xs.add(t)
                todo.append(t)
    ys = {y for x in xs for y in a.sigma[x]}
    todo = list(ys)
    while todo:
        y = todo.pop()
        for t in a.xi[y]:
            if t not in ys:
                ys.add(t)
                todo.append(t)
    return xs, ys


def is_reachable(a: LassoAutomaton) -> bool:
    xs, ys = reachable_states(a)
    return len(xs) == a.nx and len(ys) == a.ny


def reach(a: LassoAutomaton) -> LassoAutomaton:
    """Sub-automaton on the states reachable from the initial state; the
    original state order is kept."""
    xs, ys = reachable_states(a)
    if len(xs) == a.nx and len(ys) == a.ny:
        return a
    return _restrict(a, list(xs), list(ys), a.initial)


def complement(a: LassoAutomaton) -> LassoAutomaton:
    return LassoAutomaton(a.alphabet, a.x_names, a.y_names, a.initial, a.rho, a.sigma, a.xi,
                          frozenset(range(a.ny)) - a.final)


# -- transition reversal ------------------------------------------------------

def _subset_name(mask: int, names: Sequence[str], brackets: str) -> str:
    members = sorted(names[i] for i in range(len(names)) if mask >> i & 1)
    return brackets[0] + ",".join(members) + brackets[1]


def _preimage_masks(tab: Table, n_dst: int, k: int) -> list[list[int]]:
    """``pre[a][t]`` = bitmask of sources ``s`` with ``tab[s][a] == t``."""
    pre = [[0] * n_dst for _ in range(k)]
    for s, row in enumerate(tab):
        for a, t in enumerate(row):
            pre[a][t] |= 1 << s
    return pre


def _pull(mask: int, pre_a: list[int]) -> int:
    out = 0
    t = 0
    while mask:
        if mask & 1:
            out |= pre_a[t]
        mask >>= 1
        t += 1
    return out


def rev(a: LassoAutomaton, cap: int = DEFAULT_SUBSET_CAP) -> LassoAutomaton:
    """Transition-reversal automaton on all subsets.

    New spoke states are subsets of ``Y`` (named ``{...}``), new loop states are
    subsets of ``X`` (named ``[...]``); the initial state is ``F`` and the final
    states are the subsets containing the old initial state.
    """
    nx2, ny2 = 2**a.ny, 2**a.nx
    if nx2 > cap or ny2 > cap:
        raise SizeCapExceeded("rev", max(nx2, ny2), cap)
    k = len(a.alphabet)
    pre_xi = _preimage_masks(a.xi, a.ny, k)
    pre_sigma = _preimage_masks(a.sigma, a.ny, k)
    pre_rho = _preimage_masks(a.rho, a.nx, k)
    f_mask = sum(1 << y for y in a.final)
    return LassoAutomaton(
        a.alphabet,
        tuple(_subset_name(m, a.y_names, "{}") for m in range(nx2)),
        tuple(_subset_name(m, a.x_names, "[]") for m in range(ny2)),
        f_mask,
        tuple(tuple(_pull(S, pre_xi[c]) for c in range(k)) for S in range(nx2)),
        tuple(tuple(_pull(S, pre_sigma[c]) for c in range(k)) for S in range(nx2)),
        tuple(tuple(_pull(T, pre_rho[c]) for c in range(k)) for T in range(ny2)),
        frozenset(T for T in range(ny2) if T >> a.initial & 1),
    )


def rev_reach(a: LassoAutomaton, cap: int = DEFAULT_SUBSET_CAP) -> LassoAutomaton:
    """``reach(rev(a))`` built directly from the reachable subsets.

    Identical to ``reach(rev(a))`` (same names and state order) but never
    materialises unreachable subsets; ``cap`` bounds the reachable count.
    """
    k = len(a.alphabet)
    pre_xi = _preimage_masks(a.xi, a.ny, k)
    pre_sigma = _preimage_masks(a.sigma, a.ny, k)
    pre_rho = _preimage_masks(a.rho, a.nx, k)
    start = sum(1 << y for y in a.final)
    xs = {start: None}
    todo = [start]
    rho2: dict[int, tuple[int, ...]] = {}
    while todo:
        S = todo.pop()
        row = tuple(_pull(S, pre_xi[c]) for c in range(k))
        rho2[S] = row
        for T in row:
            if T not in xs:
                xs[T] = None
                if len(xs) > cap:
                    raise SizeCapExceeded("reach(rev) spoke states", len(xs), cap)
                todo.append(T)
    sigma2 = {S: tuple(_pull(S, pre_sigma[c]) for c in range(k)) for S in xs}
    ys = {T: None for row in sigma2.values() for T in row}
    todo = list(ys)
    xi2: dict[int, tuple[int, ...]] = {}
    while todo:
        T = todo.pop()
        row = tuple(_pull(T, pre_rho[c]) for c in range(k))
        xi2[T] = row
        for U in row:
            if U not in ys:
                ys[U] = None
                if len(ys) > cap:
                    raise SizeCapExceeded("reach(rev) loop states", len(ys), cap)
                todo.append(U)
    xs_sorted, ys_sorted = sorted(xs), sorted(ys)
    xmap = {S: i for i, S in enumerate(xs_sorted)}
    ymap = {T: i for i, T in enumerate(ys_sorted)}
    return LassoAutomaton(
        a.alphabet,
        tuple(_subset_name(S, a.y_names, "{}") for S in xs_sorted),
        tuple(_subset_name(T, a.x_names, "[]") for T in ys_sorted),
        xmap[start],
        tuple(tuple(xmap[t] for t in rho2[S]) for S in xs_sorted),
        tuple(tuple(ymap[t] for t in sigma2[S]) for S in xs_sorted),
        tuple(tuple(ymap[t] for t in xi2[T]) for T in ys_sorted),
        frozenset(ymap[T] for T in ys_sorted if T >> a.initial & 1),
    )


# -- morphisms and behavioural equivalence -------------------------------------

@dataclass(frozen=True)
class AutomatonMorphism:
    h_x: tuple[int, ...]
    h_y: tuple[int, ...]

    def as_names(self, a1: LassoAutomaton, a2: LassoAutomaton) -> dict:
        return {"x": {a1.x_names[i]: a2.x_names[j] for i, j in enumerate(self.h_x)},
                "y": {a1.y_names[i]: a2.y_names[j] for i, j in enumerate(self.h_y)}}


def check_morphism(a1: LassoAutomaton, a2: LassoAutomaton, h: AutomatonMorphism) -> bool:
    """True iff ``h`` satisfies the five morphism equations."""
    if a1.alphabet != a2.alphabet or len(h.h_x) != a1.nx or len(h.h_y) != a1.ny:
        return False
    if h.h_x[a1.initial] != a2.initial:
        return False
    k = len(a1.alphabet)
    for x in range(a1.nx):
        hx = h.h_x[x]
        for c in range(k):
            if h.h_x[a1.rho[x][c]] != a2.rho[hx][c] or h.h_y[a1.sigma[x][c]] != a2.sigma[hx][c]:
                return False
    for y in range(a1.ny):
        if (y in a1.final) != (h.h_y[y] in a2.final):
            return False
        for c in range(k):
            if h.h_y[a1.xi[y][c]] != a2.xi[h.h_y[y]][c]:
                return False
    return True


def _propagate(a1: LassoAutomaton, a2: LassoAutomaton):
    """Forward propagation from the initial pair; returns ``(h, None)`` or
    ``(None, conflict message)``."""
    if a1.alphabet != a2.alphabet:
        return None, "alphabets differ"
    if not is_reachable(a1):
        raise LassoError("find_morphism needs a reachable source automaton (apply reach first)")
    al = a1.alphabet
    hx: dict[int, int] = {a1.initial: a2.initial}
    xword = {a1.initial: ""}
    queue = deque([a1.initial])
    while queue:
        x = queue.popleft()
        for c, sym in enumerate(al):
            t1, t2 = a1.rho[x][c], a2.rho[hx[x]][c]
            if t1 in hx:
                if hx[t1] != t2:
                    return None, f"spoke conflict on access word {xword[x] + sym!r}"
            else:
                hx[t1] = t2
                xword[t1] = xword[x] + sym
                queue.append(t1)
    hy: dict[int, int] = {}
    yword: dict[int, Lasso] = {}
    queue = deque()
    for x in sorted(hx, key=lambda x: (len(xword[x]), xword[x])):
        for c, sym in enumerate(al):
            t1, t2 = a1.sigma[x][c], a2.sigma[hx[x]][c]
            if t1 in hy:
                if hy[t1] != t2:
                    return None, f"loop conflict on lasso {Lasso(xword[x], sym)!r}"
            else:
                hy[t1] = t2
                yword[t1] = Lasso(xword[x], sym)
                queue.append(t1)
    while queue:
        y = queue.popleft()
        for c, sym in enumerate(al):
            t1, t2 = a1.xi[y][c], a2.xi[hy[y]][c]
            l = Lasso(yword[y].spoke, yword[y].loop + sym)
            if t1 in hy:
                if hy[t1] != t2:
                    return None, f"loop conflict on lasso {l!r}"
            else:
                hy[t1] = t2
                yword[t1] = l
                queue.append(t1)
    for y, t in hy.items():
        if (y in a1.final) != (t in a2.final):
            return None, f"acceptance differs on lasso {yword[y]!r}"
    return AutomatonMorphism(tuple(hx[x] for x in range(a1.nx)),
                             tuple(hy[y] for y in range(a1.ny))), None


def find_morphism(a1: LassoAutomaton, a2: LassoAutomaton) -> AutomatonMorphism | None:
    """The unique morphism ``a1 -> a2`` if one exists; ``a1`` must be reachable."""
    return _propagate(a1, a2)[0]


def morphism_conflict(a1: LassoAutomaton, a2: LassoAutomaton) -> str | None:
    """Why :func:`find_morphism` fails, or ``None`` if it succeeds."""
    return _propagate(a1, a2)[1]


def all_morphisms(a1: LassoAutomaton, a2: LassoAutomaton) -> list[AutomatonMorphism]:
    """Every morphism by brute force over all state maps (tiny inputs only)."""
    out = []
    for hx in product(range(a2.nx), repeat=a1.nx):
        if hx[a1.initial] != a2.initial:
            continue
        for hy in product(range(a2.ny), repeat=a1.ny):
            h = AutomatonMorphism(hx, hy)
            if check_morphism(a1, a2, h):
                out.append(h)
    return out


def isomorphic(a1: LassoAutomaton, a2: LassoAutomaton) -> bool:
    """Mutual morphisms between reachable automata that are bijections."""
    if not (is_reachable(a1) and is_reachable(a2)) or a1.size() != a2.size():
        return False
    h, g = find_morphism(a1, a2), find_morphism(a2, a1)
    return (h is not None and g is not None
            and len(set(h.h_x)) == a1.nx and len(set(h.h_y)) == a1.ny)


@dataclass(frozen=True)
class Partition:
    """Block index of every state; blocks are numbered by first occurrence."""
    x_blocks: tuple[int, ...]
    y_blocks: tuple[int, ...]

    @property
    def discrete(self) -> bool:
        return (len(set(self.x_blocks)) == len(self.x_blocks)
                and len(set(self.y_blocks)) == len(self.y_blocks))

    def groups(self, a: LassoAutomaton) -> tuple[list[list[str]], list[list[str]]]:
        def grp(blocks, names):
            out: dict[int, list[str]] = {}
            for i, b in enumerate(blocks):
                out.setdefault(b, []).append(names[i])
            return list(out.values())
        return grp(self.x_blocks, a.x_names), grp(self.y_blocks, a.y_names)


def _renumber(sigs: list) -> tuple[int, ...]:
    ids: dict = {}
    return tuple(ids.setdefault(s, len(ids)) for s in sigs)


def _refine(blocks: tuple[int, ...], succ: Table) -> tuple[int, ...]:
    while True:
        new = _renumber([(blocks[s],) + tuple(blocks[t] for t in succ[s]) for s in range(len(succ))])
        if len(set(new)) == len(set(blocks)):
            return new
        blocks = new


def behavioral_partition(a: LassoAutomaton) -> Partition:
    """Coarsest partition compatible with acceptance and all transitions."""
    yb = _refine(_renumber([y in a.final for y in range(a.ny)]), a.xi)
    xb = _refine(_renumber([tuple(yb[y] for y in a.sigma[x]) for x in range(a.nx)]), a.rho)
    return Partition(xb, yb)


def is_observable(a: LassoAutomaton) -> bool:
    return behavioral_partition(a).discrete


def language_difference(a1: LassoAutomaton, a2: LassoAutomaton) -> Lasso | None:
    """A shortest lasso accepted by exactly one of the automata, else ``None``.

    Exact: explores the jointly reachable state pairs.
    """
    if a1.alphabet != a2.alphabet:
        raise LassoError("alphabets differ")
    al = a1.alphabet
    start = (a1.initial, a2.initial)
    xword = {start: ""}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for c, sym in enumerate(al):
            t = (a1.rho[p[0]][c], a2.rho[p[1]][c])
            if t not in xword:
                xword[t] = xword[p] + sym
                queue.append(t)
    ylasso: dict[tuple[int, int], Lasso] = {}
    queue = deque()
    for p in sorted(xword, key=lambda p: (len(xword[p]), xword[p])):
        for c, sym in enumerate(al):
            t = (a1.sigma[p[0]][c], a2.sigma[p[1]][c])
            if t not in ylasso:
                ylasso[t] = Lasso(xword[p], sym)
                queue.append(t)
    while queue:
        p = queue.popleft()
        for c, sym in enumerate(al):
            t = (a1.xi[p[0]][c], a2.xi[p[1]][c])
            if t not in ylasso:
                ylasso[t] = Lasso(ylasso[p].spoke, ylasso[p].loop + sym)
                queue.append(t)
    bad = [l for (y1, y2), l in ylasso.items() if (y1 in a1.final) != (y2 in a2.final)]
    if not bad:
        return None
    return min(bad, key=lambda l: (len(l.spoke) + len(l.loop), l.spoke, l.loop))


def language_equivalent(a1: LassoAutomaton, a2: LassoAutomaton) -> bool:
    return language_difference(a1, a2) is None


# -- transition triples ---------------------------------------------------------

@dataclass(frozen=True)
class TransitionTriple:
    """``(alpha, beta, gamma)`` as tuples: spoke map X->X, single-sigma map X->Y,
    loop map Y->Y.  Equality ignores the witness word."""
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    witness: str = field(default="", compare=False)

    @property
    def key(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)


def compose_triples(t1: tuple, t2: tuple) -> tuple:
    """Product in the ambient structure: ``(a1 a2, b1 a2, g1 g2)`` with
    juxtaposition meaning composition (apply the right factor first)."""
    (a1, b1, g1), (a2, b2, g2) = t1, t2
    return (tuple(a1[x] for x in a2), tuple(b1[x] for x in a2), tuple(g1[y] for y in g2))


def chi(a: LassoAutomaton, w: str) -> tuple:
    """Triple of a nonempty word ``u c``: ``(x -> rho(x, uc), x -> sigma(rho(x, u), c),
    y -> xi(y, uc))``."""
    if not w:
        raise LassoError("chi needs a nonempty word")
    check_word(w, a.alphabet)
    u, c = w[:-1], a.sym[w[-1]]
    alpha = tuple(a.run_x(x, w) for x in range(a.nx))
    beta = tuple(a.sigma[a.run_x(x, u)][c] for x in range(a.nx))
    gamma = tuple(a.run_y(y, w) for y in range(a.ny))
    return (alpha, beta, gamma)


def letter_triples(a: LassoAutomaton) -> list[tuple]:
    k = len(a.alphabet)
    return [(tuple(a.rho[x][c] for x in range(a.nx)),
             tuple(a.sigma[x][c] for x in range(a.nx)),
             tuple(a.xi[y][c] for y in range(a.ny))) for c in range(k)]


def transition_semigroup(a: LassoAutomaton, cap: int = DEFAULT_CLOSURE_CAP) -> list[TransitionTriple]:
    """All triples ``chi(w)`` for nonempty ``w``, in order of their shortlex-least
    witness words.

    ``chi(w) . chi(v) = chi(v w)``, so extending a witness by a letter on the
    right multiplies by the letter triple on the left.
    """
    gens = letter_triples(a)
    seen: dict[tuple, str] = {}
    queue: deque[tuple] = deque()
    for sym, g in zip(a.alphabet, gens):
        if g not in seen:
            seen[g] = sym
            queue.append(g)
    while queue:
        t = queue.popleft()
        for sym, g in zip(a.alphabet, gens):
            n = compose_triples(g, t)
            if n not in seen:
                seen[n] = seen[t] + sym
                if len(seen) > cap:
                    raise SizeCapExceeded("transition semigroup", len(seen), cap)
                queue.append(n)
    return [TransitionTriple(*k, witness=w) for k, w in seen.items()]


# -- direct checks of the omega conditions --------------------------------------

def action_monoid(gens: Sequence[tuple[int, ...]], alphabet: str, n: int,
                  cap: int = DEFAULT_CLOSURE_CAP) -> dict[tuple[int, ...], str]:
    """All word actions ``m_v`` (``m_v[s]`` = state after reading ``v`` from ``s``)
    mapped to a shortlex-least witness ``v``; includes the identity for ``v = ""``."""
    ident = tuple(range(n))
    seen = {ident: ""}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for sym, g in zip(alphabet, gens):
            nm = tuple(g[s] for s in m)
            if nm not in seen:
                seen[nm] = seen[m] + sym
                if len(seen) > cap:
                    raise SizeCapExceeded("action monoid", len(seen), cap)
                queue.append(nm)
    return seen


def _columns(tab: Table, k: int) -> list[tuple[int, ...]]:
    return [tuple(row[c] for row in tab) for c in range(k)]


def _orbit(start: int, step) -> list[int]:
    """``step(start), step(step(start)), ...`` up to the first repeat."""
    out, seen = [], set()
    s = step(start)
    while s not in seen:
        seen.add(s)
        out.append(s)
        s = step(s)
    return out


@dataclass(frozen=True)
class OmegaReport:
    circular: bool
    coherent: bool
    circular_witness: dict | None = None
    coherent_witness: dict | None = None

    @property
    def is_omega(self) -> bool:
        return self.circular and self.coherent

    @property
    def witness(self) -> dict | None:
        return self.circular_witness or self.coherent_witness

    def to_json(self) -> dict:
        return {"circular": self.circular, "coherent": self.coherent,
                "witness": self.witness}


def omega_conditions(a: LassoAutomaton, cap: int = DEFAULT_CLOSURE_CAP) -> OmegaReport:
    """Decide circularity and coherence exactly.

    The quantifier over loop remainders ``v`` ranges over the finite monoid of
    ``xi`` word actions; the one over ``k`` follows the orbit of the pumping map
    until it repeats.
    """
    al, k = a.alphabet, len(a.alphabet)
    xi_cols = _columns(a.xi, k)
    monoid = action_monoid(xi_cols, al, a.ny, cap)
    F = a.final
    circ_w = coh_w = None
    for x in range(a.nx):
        for c in range(k):
            y0 = a.sigma[x][c]
            for m, v in monoid.items():
                if circ_w is None:
                    y1 = m[y0]
                    for i, yk in enumerate(_orbit(y1, lambda y: m[xi_cols[c][y]]), start=1):
                        if (yk in F) != (y1 in F):
                            circ_w = {"condition": "circularity", "x": a.x_names[x],
                                      "a": al[c], "v": v, "k": i}
                            break
                if coh_w is None:
                    x_next = a.rho[x][c]
                    for d in range(k):
                        lhs = m[a.xi[y0][d]]
                        rhs = a.xi[m[a.sigma[x_next][d]]][c]
                        if (lhs in F) != (rhs in F):
                            coh_w = {"condition": "coherence", "x": a.x_names[x],
                                     "a": al[c], "b": al[d], "v": v}
                            break
    return OmegaReport(circ_w is None, coh_w is None, circ_w, coh_w)


@dataclass(frozen=True)
class OmegaRevReport:
    rev_circular: bool
    rev_coherent: bool
    rev_circular_witness: dict | None = None
    rev_coherent_witness: dict | None = None

    @property
    def is_omega_rev(self) -> bool:
        return self.rev_circular and self.rev_coherent

    @property
    def witness(self) -> dict | None:
        return self.rev_circular_witness or self.rev_coherent_witness

    def to_json(self) -> dict:
        return {"rev_circular": self.rev_circular, "rev_coherent": self.rev_coherent,
                "witness": self.witness}


def omega_rev_conditions(a: LassoAutomaton, cap: int = DEFAULT_CLOSURE_CAP) -> OmegaRevReport:
    """Decide reverse-circularity and reverse-coherence exactly, quantifying the
    spoke word over the finite monoid of ``rho`` word actions."""
    al, k = a.alphabet, len(a.alphabet)
    rho_cols = _columns(a.rho, k)
    monoid = action_monoid(rho_cols, al, a.nx, cap)
    q = a.initial
    circ_w = coh_w = None
    for m, v in monoid.items():
        for c in range(k):
            if circ_w is None:
                target = a.sigma[m[q]][c]
                # (v c)^k v read from q: iterate h = rho_c . m starting at q
                for i, xk in enumerate(_orbit(q, lambda x: rho_cols[c][m[x]]), start=1):
                    if a.sigma[m[xk]][c] != target:
                        circ_w = {"condition": "reverse-circularity", "v": v, "a": al[c], "k": i}
                        break
            if coh_w is None:
                for d in range(k):
                    lhs = a.sigma[rho_cols[d][m[q]]][c]
                    rhs = a.xi[a.sigma[m[rho_cols[c][q]]][d]][c]
                    if lhs != rhs:
                        coh_w = {"condition": "reverse-coherence", "v": v, "a": al[c], "b": al[d]}
                        break
    return OmegaRevReport(circ_w is None, coh_w is None, circ_w, coh_w)


def to_dot(a: LassoAutomaton) -> str:
    lines = ["digraph lasso {", "  rankdir=LR;", '  __start [shape=point];']
    for i, n in enumerate(a.x_names):
        lines.append(f'  "{n}" [shape=circle];')
    for i, n in enumerate(a.y_names):
        shape = "doublecircle" if i in a.final else "circle"
        lines.append(f'  "{n}" [shape={shape}];')
    lines.append(f'  __start -> "{a.x_names[a.initial]}";')

    def edges(tab, src, dst, style):
        grouped: dict[tuple[int, int], list[str]] = {}
        for s, row in enumerate(tab):
            for c, t in enumerate(row):
                grouped.setdefault((s, t), []).append(a.alphabet[c])
        for (s, t), syms in grouped.items():
            lines.append(f'  "{src[s]}" -> "{dst[t]}" [label="{",".join(syms)}"{style}];')

    edges(a.rho, a.x_names, a.x_names, "")
    edges(a.sigma, a.x_names, a.y_names, ", style=dotted")
    edges(a.xi, a.y_names, a.y_names, "")
    lines.append("}")
    return "\n".join(lines) + "\n"
