"""Finite words, lassos and bounded lasso languages.

A lasso ``(spoke, loop)`` stands for the ultimately periodic word
``spoke loop loop loop ...``.  Words are plain ``str`` values whose characters
are the alphabet symbols; an alphabet is a ``str`` of distinct symbols whose
order fixes every enumeration in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import lcm
from typing import Callable, Iterator, Mapping

from .errors import LassoError


def check_alphabet(alphabet: str) -> str:
    if not isinstance(alphabet, str) or not alphabet:
        raise LassoError("alphabet must be a nonempty string of symbols")
    if len(set(alphabet)) != len(alphabet):
        raise LassoError(f"alphabet {alphabet!r} has duplicate symbols")
    return alphabet


def check_word(word: str, alphabet: str) -> str:
    for sym in word:
        if sym not in alphabet:
            raise LassoError(f"symbol {sym!r} not in alphabet {alphabet!r}")
    return word


@dataclass(frozen=True, order=True)
class Lasso:
    spoke: str
    loop: str

    def __post_init__(self):
        if not self.loop:
            raise LassoError("lasso loop must be nonempty")

    def __iter__(self):
        return iter((self.spoke, self.loop))

    def __repr__(self):
        return f"Lasso({self.spoke!r}, {self.loop!r})"

    def to_json(self) -> dict:
        return {"spoke": self.spoke, "loop": self.loop}

    @classmethod
    def from_json(cls, doc: Mapping) -> "Lasso":
        return cls(doc["spoke"], doc["loop"])


def reverse_word(w: str) -> str:
    return w[::-1]


def reverse_lasso(l: Lasso) -> Lasso:
    """``(u, a v)`` becomes ``(v^rev, a u^rev)``."""
    u, av = l
    return Lasso(av[:0:-1], av[0] + u[::-1])


def primitive_root(w: str) -> str:
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    return w


def canonical(l: Lasso) -> Lasso:
    """Shortest-spoke, primitive-loop representative of ``spoke loop^omega``."""
    spoke, loop = l.spoke, primitive_root(l.loop)
    while spoke and spoke[-1] == loop[-1]:
        spoke = spoke[:-1]
        loop = loop[-1] + loop[:-1]
    return Lasso(spoke, loop)


def up_equal(l1: Lasso, l2: Lasso) -> bool:
    return canonical(l1) == canonical(l2)


def unroll(l: Lasso, n: int) -> str:
    """First ``n`` symbols of the infinite word denoted by ``l``."""
    out = l.spoke
    if len(out) < n:
        reps = (n - len(out)) // len(l.loop) + 1
        out += l.loop * reps
    return out[:n]


def up_equal_unrolled(l1: Lasso, l2: Lasso) -> bool:
    # Two ultimately periodic words agree everywhere once they agree past both
    # spokes for a common period.
    n = max(len(l1.spoke), len(l2.spoke)) + lcm(len(l1.loop), len(l2.loop))
    return unroll(l1, n) == unroll(l2, n)


def words_of_length(alphabet: str, n: int) -> Iterator[str]:
    for tup in product(alphabet, repeat=n):
        yield "".join(tup)


def words_up_to(alphabet: str, max_len: int, min_len: int = 0) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        yield from words_of_length(alphabet, n)


def enumerate_lassos(alphabet: str, max_spoke: int, max_loop: int) -> list[Lasso]:
    """All lassos within bounds, ordered by spoke length, loop length, then
    lexicographically in alphabet order."""
    if max_loop < 1:
        raise LassoError("max_loop must be at least 1")
    if max_spoke < 0:
        raise LassoError("max_spoke must be nonnegative")
    out = []
    for i in range(max_spoke + 1):
        spokes = list(words_of_length(alphabet, i))
        for j in range(1, max_loop + 1):
            loops = list(words_of_length(alphabet, j))
            out.extend(Lasso(u, v) for u in spokes for v in loops)
    return out


def lasso_count(alphabet_size: int, max_spoke: int, max_loop: int) -> int:
    k = alphabet_size
    return sum(k**i for i in range(max_spoke + 1)) * sum(k**j for j in range(1, max_loop + 1))


@dataclass(frozen=True)
class LanguageSample:
    """Membership of every lasso within ``bounds = (max_spoke, max_loop)``."""

    alphabet: str
    bounds: tuple[int, int]
    members: Mapping[Lasso, bool] = field(compare=True)

    @classmethod
    def from_predicate(cls, alphabet: str, max_spoke: int, max_loop: int,
                       pred: Callable[[Lasso], bool]) -> "LanguageSample":
        dom = enumerate_lassos(alphabet, max_spoke, max_loop)
        return cls(alphabet, (max_spoke, max_loop), {l: bool(pred(l)) for l in dom})

    def accepted(self) -> list[Lasso]:
        return [l for l, m in self.members.items() if m]

    def __len__(self):
        return len(self.members)


def reverse_sample(s: LanguageSample) -> LanguageSample:
    """Sample of the reversed language.

    Reversal sends spoke length ``i`` / loop length ``j`` to ``j - 1`` / ``i + 1``,
    so a sample with bounds ``(S, L)`` reverses to one with bounds ``(L - 1, S + 1)``.
    """
    max_spoke, max_loop = s.bounds
    return LanguageSample.from_predicate(
        s.alphabet, max_loop - 1, max_spoke + 1,
        lambda l: s.members[reverse_lasso(l)])


def saturation_check(s: LanguageSample) -> tuple[Lasso, Lasso] | None:
    """First ``(member, non-member)`` pair denoting the same infinite word.

    The member is the first accepted lasso in enumeration order that has a
    rejected equivalent, and the non-member is the first such equivalent.
    """
    classes: dict[Lasso, list[Lasso]] = {}
    for l in s.members:
        classes.setdefault(canonical(l), []).append(l)
    for l in s.members:
        if not s.members[l]:
            continue
        for other in classes[canonical(l)]:
            if not s.members[other]:
                return (l, other)
    return None
