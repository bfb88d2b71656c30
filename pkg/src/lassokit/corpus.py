"""Reference automata, the seeded random corpus, and random operation tables."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .automaton import LassoAutomaton, reach, rev
from .errors import SizeCapExceeded
from .functors import alg, minimize
from .semigroup import ExtendedLassoSemigroup, LassoSemigroup


def reference_a1() -> LassoAutomaton:
    """Accepts exactly the lassos whose loop starts with ``b``."""
    return LassoAutomaton.from_tables(
        "ab", ["x"], ["y1", "y2"], "x",
        rho={"x": {"a": "x", "b": "x"}},
        sigma={"x": {"a": "y1", "b": "y2"}},
        xi={"y1": {"a": "y1", "b": "y1"}, "y2": {"a": "y2", "b": "y2"}},
        final=["y2"],
    )


def reference_a2() -> LassoAutomaton:
    """Accepts exactly the lassos ``(u b, a^n)``.

    Reading ``a`` in ``x2`` returns to ``x1``, so ``(b, a)`` is accepted while
    ``(ba, a)`` is not.
    """
    return LassoAutomaton.from_tables(
        "ab", ["x1", "x2"], ["y1", "y2"], "x1",
        rho={"x1": {"a": "x1", "b": "x2"}, "x2": {"a": "x1", "b": "x2"}},
        sigma={"x1": {"a": "y1", "b": "y1"}, "x2": {"a": "y2", "b": "y1"}},
        xi={"y1": {"a": "y1", "b": "y1"}, "y2": {"a": "y2", "b": "y1"}},
        final=["y2"],
    )


def a2_saturated() -> LassoAutomaton:
    """Circular and coherent automaton for the words ``(a+b)* b a^omega``.

    Same shape as :func:`reference_a2` except that ``x2`` keeps ``a``.
    """
    return LassoAutomaton.from_tables(
        "ab", ["x1", "x2"], ["y1", "y2"], "x1",
        rho={"x1": {"a": "x1", "b": "x2"}, "x2": {"a": "x2", "b": "x2"}},
        sigma={"x1": {"a": "y1", "b": "y1"}, "x2": {"a": "y2", "b": "y1"}},
        xi={"y1": {"a": "y1", "b": "y1"}, "y2": {"a": "y2", "b": "y1"}},
        final=["y2"],
    )


def random_automaton(rng: random.Random, alphabet: str = "ab",
                     max_x: int = 4, max_y: int = 4) -> LassoAutomaton:
    nx, ny = rng.randint(1, max_x), rng.randint(1, max_y)
    k = len(alphabet)
    rho = tuple(tuple(rng.randrange(nx) for _ in range(k)) for _ in range(nx))
    sigma = tuple(tuple(rng.randrange(ny) for _ in range(k)) for _ in range(nx))
    xi = tuple(tuple(rng.randrange(ny) for _ in range(k)) for _ in range(ny))
    final = frozenset(y for y in range(ny) if rng.random() < 0.5)
    return LassoAutomaton(alphabet, tuple(f"x{i}" for i in range(nx)),
                          tuple(f"y{i}" for i in range(ny)), 0, rho, sigma, xi, final)


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240611
    n_random: int = 50
    alphabet: str = "ab"
    max_x: int = 4
    max_y: int = 4


@lru_cache(maxsize=4)
def corpus_automata(cfg: CorpusConfig = CorpusConfig()) -> tuple[tuple[str, LassoAutomaton], ...]:
    """Named automata: the reference ones with their rev/reach/minimize
    images, then the seeded random ones."""
    out = []
    for name, a in (("A1", reference_a1()), ("A2", reference_a2()), ("A2sat", a2_saturated())):
        out += [(name, a), (f"rev({name})", rev(a)), (f"reach({name})", reach(a)),
                (f"minimize({name})", minimize(a))]
    rng = random.Random(cfg.seed)
    for i in range(cfg.n_random):
        out.append((f"R{i:02d}", random_automaton(rng, cfg.alphabet, cfg.max_x, cfg.max_y)))
    return tuple(out)


@lru_cache(maxsize=4)
def corpus_semigroups(cfg: CorpusConfig = CorpusConfig()) -> tuple[tuple[str, ExtendedLassoSemigroup], ...]:
    out = []
    for name, a in corpus_automata(cfg):
        try:
            out.append((f"alg({name})", alg(a)))
        except SizeCapExceeded:
            continue
    return tuple(out)


def corpus_lookup(name: str, cfg: CorpusConfig = CorpusConfig()):
    for n, obj in corpus_automata(cfg) + corpus_semigroups(cfg):
        if n == name:
            return obj
    raise KeyError(name)


# -- random valid tables ----------------------------------------------------------

def _family_table(family: str, n: int, rng: random.Random) -> np.ndarray:
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    if family == "cyclic":
        return (i + j) % n
    if family == "left-zero":
        return i
    if family == "right-zero":
        return j
    if family == "null":
        return np.zeros((n, n), dtype=np.int64)
    if family == "chain":
        return np.maximum(i, j)
    if family == "monogenic":
        # x^1 .. x^n with x^(n+1) = x^(index)
        index = rng.randint(1, n)
        period = n - index + 1
        e = i + j + 2  # exponent of the product, elements are exponents minus 1
        wrapped = np.where(e > n, index + (e - index) % period, e)
        return wrapped - 1
    if family == "product":
        for p in range(2, n):
            if n % p == 0:
                a = _family_table("cyclic", p, rng)
                b = _family_table("chain", n // p, rng)
                q = n // p
                return a[i // q, j // q] * q + b[i % q, j % q]
        return _family_table("cyclic", n, rng)
    raise ValueError(f"unknown family {family!r}")


FAMILIES = ("cyclic", "left-zero", "right-zero", "null", "chain", "monogenic", "product")


def random_lasso_semigroup(n: int, rng: random.Random, family: str | None = None) -> LassoSemigroup:
    """Random valid table of size ``n``: a relabelled member of a classic
    semigroup family acting on a copy of itself, with a random omega map."""
    family = family or rng.choice(FAMILIES)
    dot = _family_table(family, n, rng)
    perm = list(range(n))
    rng.shuffle(perm)
    perm = np.array(perm)
    inv = np.argsort(perm)
    # relabel element k as perm[k]
    dot = perm[dot[np.ix_(inv, inv)]]
    times = dot.copy()
    opow = np.array([rng.randrange(n) for _ in range(n)])
    return LassoSemigroup(tuple(f"s{k}" for k in range(n)), tuple(f"o{k}" for k in range(n)),
                          dot, times, opow)
