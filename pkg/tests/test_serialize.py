import json

import pytest
from hypothesis import given

from lassokit.corpus import corpus_automata, corpus_semigroups
from lassokit.errors import LassoError
from lassokit.functors import alg
from lassokit.serialize import (
    automaton_from_json,
    automaton_to_json,
    dumps,
    from_json,
    loads,
    semigroup_from_json,
    semigroup_to_json,
)

from .strategies import automata


def test_automaton_schema(A1):
    doc = automaton_to_json(A1)
    assert list(doc) == ["alphabet", "xStates", "yStates", "initial", "rho", "sigma", "xi", "final"]
    assert doc["sigma"] == {"x": {"a": "y1", "b": "y2"}}
    assert doc["final"] == ["y2"]


def test_semigroup_schema(A1):
    doc = semigroup_to_json(alg(A1))
    assert list(doc) == ["alphabet", "plus", "omega", "dot", "times", "omegaPow", "gen", "recognizing"]
    assert doc["gen"] == {"a": "a", "b": "b"}
    assert doc["recognizing"] == ["y2"]


def test_corpus_round_trips():
    for _, a in corpus_automata():
        text = dumps(a)
        assert loads(text) == a
        assert dumps(loads(text)) == text
    for _, e in corpus_semigroups():
        text = dumps(e)
        assert loads(text) == e
        assert dumps(loads(text)) == text


@given(automata)
def test_random_round_trip(a):
    assert automaton_from_json(json.loads(dumps(a))) == a


def test_output_is_deterministic(A2):
    assert dumps(alg(A2)) == dumps(alg(A2))
    assert dumps(A2).endswith("}\n")


@pytest.mark.parametrize("patch, message", [
    (lambda d: d.pop("xi"), "missing 'xi'"),
    (lambda d: d.update(final=["x"]), "final must be Y-states"),
    (lambda d: d.update(alphabet="aa"), "duplicate symbols"),
    (lambda d: d.update(xStates=5), "malformed"),
])
def test_bad_automaton_documents(A1, patch, message):
    doc = automaton_to_json(A1)
    patch(doc)
    with pytest.raises(LassoError, match=message):
        from_json(doc)


@pytest.mark.parametrize("patch, message", [
    (lambda d: d.update(omega=["a", "y2"]), "shared by both sorts"),
    (lambda d: d["dot"]["a"].pop("b"), "partial dot"),
    (lambda d: d["omegaPow"].update(a="zz"), "not an element"),
    (lambda d: d.update(recognizing=["a"]), "omega sort"),
    (lambda d: d.update(plus=["@a", "b"]), "invalid element name"),
    (lambda d: d.pop("gen"), "missing 'gen'"),
])
def test_bad_semigroup_documents(A1, patch, message):
    doc = semigroup_to_json(alg(A1))
    patch(doc)
    with pytest.raises(LassoError, match=message):
        from_json(doc)


def test_non_associative_document_rejected(A1):
    doc = semigroup_to_json(alg(A1))
    # with a.a = b, (a.b).a and a.(b.a) differ
    doc["dot"]["a"]["a"] = "b"
    with pytest.raises(LassoError, match="associativity"):
        semigroup_from_json(doc)


def test_unknown_document_kind():
    with pytest.raises(LassoError):
        from_json({"hello": 1})
    with pytest.raises(LassoError):
        loads("[1, 2]")
    with pytest.raises(LassoError, match="invalid JSON"):
        loads("{")
