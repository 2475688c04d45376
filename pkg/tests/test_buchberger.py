import pytest

from groebner import (
    PolyRing,
    buchberger,
    groebner_witness,
    interreduce,
    is_groebner,
    normal_form,
)

from conftest import SMALL_CORPUS, load_ideal


@pytest.fixture
def ring():
    return PolyRing(7, "x,y", "lex")


def test_worked_example(ring):
    raw, _ = buchberger([ring.parse("x^2 - y"), ring.parse("x*y - 1")])
    assert interreduce(raw) == [ring.parse("x - y^2"), ring.parse("y^3 - 1")]


def test_single_generator(ring):
    raw, _ = buchberger([ring.parse("x")])
    assert interreduce(raw) == [ring.parse("x")]


def test_coprime_leading_terms(ring):
    gens = [ring.parse("x^2 - 1"), ring.parse("y^2 - 1")]
    raw, stats = buchberger(gens)
    assert interreduce(raw) == gens
    assert stats.pairs_considered == 0  # product criterion discards the only pair


def test_is_groebner_examples(ring):
    assert is_groebner([ring.parse("x - y^2"), ring.parse("y^3 - 1")])
    assert not is_groebner([ring.parse("x^2 - y"), ring.parse("x*y - 1")])
    assert is_groebner([ring.parse("3")])


def test_groebner_witness_content(ring):
    w = groebner_witness([ring.parse("x^2 - y"), ring.parse("x*y - 1")])
    i, j, s, h = w
    assert s == ring.parse("x - y^2")
    assert h == ring.parse("x - y^2")  # irreducible by the basis


@pytest.mark.parametrize("name", SMALL_CORPUS)
@pytest.mark.parametrize("order", ["lex", "grevlex"])
def test_output_is_groebner_and_generates_input(name, order):
    ring, gens = load_ideal(name, order)
    raw, _ = buchberger(gens)
    assert is_groebner(raw)
    for f in gens:
        assert normal_form(f, raw).is_zero


@pytest.mark.parametrize("name", ["worked", "cyclic4", "quadric_seed1", "katsura3"])
@pytest.mark.parametrize("order", ["lex", "grevlex"])
def test_criteria_soundness(name, order):
    # the pruned pair set must not change the reduced basis
    ring, gens = load_ideal(name, order)
    with_criteria, s1 = buchberger(gens, use_criteria=True)
    without, s0 = buchberger(gens, use_criteria=False)
    assert interreduce(with_criteria) == interreduce(without)
    assert s1.zero_reductions <= s0.zero_reductions


def test_zero_generators_rejected(ring):
    with pytest.raises(ValueError):
        buchberger([ring.zero])
