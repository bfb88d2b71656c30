import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lassokit.automaton import reach, rev_reach
from lassokit.corpus import FAMILIES, corpus_semigroups, random_lasso_semigroup
from lassokit.errors import LassoError
from lassokit.functors import alg
from lassokit.lasso_core import Lasso, enumerate_lassos, reverse_lasso, words_up_to
from lassokit.semigroup import (
    ExtendedLassoSemigroup,
    ExtMorphism,
    LassoSemigroup,
    all_ext_morphisms,
    check_ext_morphism,
    check_refinement,
    check_refinement_aut,
    complement,
    eval_omega,
    eval_plus,
    find_ext_morphism,
    free_dot,
    free_omega,
    free_times,
    recognition_sample,
    recognizes,
    restrict_to_image,
    validate_extended,
    validate_semigroup,
    wilke_axioms,
)

from .strategies import automata


def trivial(recognizing=()):
    base = LassoSemigroup(("s",), ("o",), [[0]], [[0]], [0])
    return ExtendedLassoSemigroup(base, "ab", (0, 0), frozenset(recognizing))


def naive_wilke(w):
    n = w.n_plus
    dot, times, opow = w.dot, w.times, w.omega_pow
    circ = True
    for s in range(n):
        p = s
        for _ in range(n + 1):
            circ &= bool(opow[p] == opow[s])
            p = dot[p, s]
    coh = all(times[s, opow[dot[t, s]]] == opow[dot[s, t]] for s in range(n) for t in range(n))
    return circ, coh


def naive_associative(w):
    n, m = w.n_plus, w.n_omega
    d, t = w.dot, w.times
    return (all(d[d[s, u], v] == d[s, d[u, v]] for s, u, v in product(range(n), repeat=3))
            and all(t[s, t[u, al]] == t[d[s, u], al]
                    for s, u in product(range(n), repeat=2) for al in range(m)))


# -- free structure ----------------------------------------------------------------

def test_free_ops_examples():
    assert free_times("ab", Lasso("c", "d")) == Lasso("abc", "d")
    assert free_omega("ab") == Lasso("", "ab")
    assert free_dot("a", "b") == "ab"
    for bad in (lambda: free_dot("", "a"), lambda: free_times("", Lasso("", "a")),
                lambda: free_omega("")):
        with pytest.raises(LassoError):
            bad()


def test_free_structure_laws():
    ws = list(words_up_to("ab", 3, min_len=1))
    ls = enumerate_lassos("ab", 1, 2)
    for s, t in product(ws, repeat=2):
        for u in ws:
            assert free_dot(free_dot(s, t), u) == free_dot(s, free_dot(t, u))
        for l in ls:
            assert free_times(s, free_times(t, l)) == free_times(free_dot(s, t), l)


# -- validation ------------------------------------------------------------------------

def test_one_element_structure_is_valid():
    validate_extended(trivial())
    assert wilke_axioms(trivial().base).is_wilke


def test_planted_associativity_failure():
    # left-zero band on 3 elements with one entry broken
    dot = np.array([[0, 0, 0], [1, 1, 1], [2, 2, 2]])
    dot[0, 1] = 1
    base = LassoSemigroup(("p", "q", "r"), ("o",), dot, np.zeros((3, 1), dtype=int), [0, 0, 0])
    with pytest.raises(LassoError, match=r"^associativity fails at \(p, r, q\)"):
        validate_semigroup(base)


def test_alg_bases_validate(A1):
    validate_semigroup(alg(A1).base)
    for _, e in corpus_semigroups():
        validate_extended(e, exhaustive=e.base.n_plus <= 60)


@settings(max_examples=100)
@given(st.integers(1, 4), st.integers(1, 2), st.randoms(use_true_random=False))
def test_validation_matches_naive(n, m, rng):
    dot = np.array([[rng.randrange(n) for _ in range(n)] for _ in range(n)])
    times = np.array([[rng.randrange(m) for _ in range(m)] for _ in range(n)])
    base = LassoSemigroup(tuple(f"s{i}" for i in range(n)), tuple(f"o{i}" for i in range(m)),
                          dot, times, [0] * n)
    try:
        validate_semigroup(base)
        ok = True
    except LassoError:
        ok = False
    assert ok == naive_associative(base)
    # the generator-only test gives the same answer whenever all elements are generators
    try:
        validate_semigroup(base, generators=range(n))
        ok_gen = True
    except LassoError:
        ok_gen = False
    assert ok_gen == ok


@pytest.mark.parametrize("family", FAMILIES)
def test_random_families_are_valid(family):
    w = random_lasso_semigroup(12, random.Random(7), family)
    validate_semigroup(w)
    assert naive_associative(w)


def test_surjectivity_enforced():
    base = LassoSemigroup(("s", "t"), ("o",), [[0, 0], [0, 0]], [[0], [0]], [0, 0])
    with pytest.raises(LassoError, match="not surjective"):
        validate_extended(ExtendedLassoSemigroup(base, "ab", (0, 0), frozenset()))
    e = restrict_to_image(ExtendedLassoSemigroup(base, "ab", (0, 0), frozenset()))
    assert e.base.n_plus == 1


def test_shape_checks():
    with pytest.raises(LassoError):
        LassoSemigroup(("s",), ("o",), [[0, 0]], [[0]], [0])
    with pytest.raises(LassoError):
        LassoSemigroup(("s",), ("o",), [[1]], [[0]], [0])


# -- evaluation and recognition ---------------------------------------------------------

def test_eval_examples(A1):
    e = alg(A1)
    a, b = e.gen
    assert eval_plus(e, "ab") == e.base.dot[a, b]
    assert eval_omega(e, Lasso("", "a")) == e.base.omega_pow[a]
    with pytest.raises(LassoError):
        eval_plus(e, "")
    with pytest.raises(LassoError):
        eval_plus(e, "c")


@given(automata)
def test_eval_is_homomorphic(a):
    e = alg(a)
    ws = list(words_up_to("ab", 3, min_len=1))
    for u, v in product(ws, repeat=2):
        assert eval_plus(e, u + v) == e.base.dot[eval_plus(e, u), eval_plus(e, v)]
    for u in words_up_to("ab", 2, min_len=1):
        for l in enumerate_lassos("ab", 2, 2):
            assert eval_omega(e, free_times(u, l)) == e.base.times[eval_plus(e, u), eval_omega(e, l)]


def test_recognition_examples(A1):
    e = alg(A1)
    for l in enumerate_lassos("ab", 2, 2):
        assert recognizes(e, l) == (A1.lasso_state(reverse_lasso(l)) in A1.final)
    assert not any(recognition_sample(trivial(), 2, 2).members.values())
    assert all(recognition_sample(trivial({0}), 2, 2).members.values())


@given(automata)
def test_complement_flips(a):
    e = alg(a)
    c = complement(e)
    assert complement(c) == e
    for l in enumerate_lassos("ab", 2, 2):
        assert recognizes(e, l) != recognizes(c, l)


def test_complement_of_empty_recognizer():
    assert complement(trivial()).recognizing == frozenset({0})


# -- Wilke axioms ----------------------------------------------------------------------------

def test_wilke_on_reference_recognizers(A1, A2sat):
    assert wilke_axioms(alg(rev_reach(A2sat)).base).is_wilke
    assert not wilke_axioms(alg(rev_reach(A1)).base).coherence


@settings(max_examples=100)
@given(st.integers(1, 30), st.sampled_from(FAMILIES), st.randoms(use_true_random=False))
def test_wilke_matches_naive(n, family, rng):
    w = random_lasso_semigroup(n, rng, family)
    r = wilke_axioms(w)
    assert (r.circularity, r.coherence) == naive_wilke(w)
    assert r.coherence_checks == n * n
    assert r.circularity_checks <= 2 * n * n


@given(automata)
def test_wilke_matches_naive_on_alg(a):
    w = alg(a).base
    r = wilke_axioms(w)
    assert (r.circularity, r.coherence) == naive_wilke(w)


@settings(max_examples=100)
@given(st.integers(2, 20), st.randoms(use_true_random=False))
def test_circularity_witness_is_minimal(n, rng):
    w = random_lasso_semigroup(n, rng, "monogenic")
    r = wilke_axioms(w)
    if r.circularity_witness is not None:
        s = w.plus_names.index(r.circularity_witness["s"])
        k = r.circularity_witness["k"]
        powers = [s]
        for _ in range(k - 1):
            powers.append(int(w.dot[powers[-1], s]))
        assert all(w.omega_pow[p] == w.omega_pow[s] for p in powers[:-1])
        assert w.omega_pow[powers[-1]] != w.omega_pow[s]


def test_coherence_witness_is_a_counterexample(A1):
    w = alg(rev_reach(A1)).base
    cw = wilke_axioms(w).coherence_witness
    s, t = w.plus_names.index(cw["s"]), w.plus_names.index(cw["t"])
    assert w.times[s, w.omega_pow[w.dot[t, s]]] != w.omega_pow[w.dot[s, t]]


# -- morphisms and refinement ---------------------------------------------------------------

def tiny_semigroups():
    return [(n, e) for n, e in corpus_semigroups() if e.base.n_plus <= 4 and e.base.n_omega <= 3]


def test_identity_morphism(A1):
    e = alg(A1)
    g = find_ext_morphism(e, e)
    assert g == ExtMorphism((0, 1), (0, 1))
    assert check_ext_morphism(e, e, g)
    assert check_refinement(e, e)


def test_morphism_finder_against_brute_force():
    tiny = tiny_semigroups()
    assert len(tiny) >= 5
    for _, e1 in tiny:
        for _, e2 in tiny:
            brute = all_ext_morphisms(e1, e2)
            assert len(brute) <= 1
            assert find_ext_morphism(e1, e2) == (brute[0] if brute else None)


def test_trivial_refines_only_trivial(A1):
    e = alg(A1)
    assert not check_refinement(trivial(), e)
    assert check_refinement(e, trivial())
    assert check_refinement(trivial(), trivial({0}))


def test_morphism_iff_refinement_and_language():
    es = [e for _, e in corpus_semigroups() if e.base.n_plus <= 60]
    samples = [recognition_sample(e, 3, 3) for e in es]
    for i, e1 in enumerate(es):
        for j, e2 in enumerate(es):
            has = find_ext_morphism(e1, e2) is not None
            assert has == (check_refinement(e1, e2) and samples[i] == samples[j])


def test_different_languages_have_no_morphism(A1, A2):
    assert find_ext_morphism(alg(A1), alg(A2)) is None


@settings(max_examples=40)
@given(automata, automata, automata)
def test_refinement_is_transitive(a1, a2, a3):
    e1, e2, e3 = alg(a1), alg(a2), alg(a3)
    if check_refinement(e1, e2) and check_refinement(e2, e3):
        assert check_refinement(e1, e3)


@given(automata, automata)
def test_refinement_aut_against_alg_refinement(a1, a2):
    # the triple kernels of reachable automata are the kernels of their algebras
    r1, r2 = reach(a1), reach(a2)
    assert check_refinement_aut(r1, r2) == check_refinement(alg(r1), alg(r2))


def test_json_friendly_names(A1):
    m = find_ext_morphism(alg(A1), alg(A1))
    assert m.as_names(alg(A1), alg(A1)) == {"plus": {"a": "a", "b": "b"},
                                            "omega": {"y1": "y1", "y2": "y2"}}
