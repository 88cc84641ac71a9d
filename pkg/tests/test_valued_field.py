import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import FIELD_KINDS, random_scalar, random_unit, uniformizer
from nonruled.exact_algebra import GFElem
from nonruled.valued_field import (
    INF, FieldDescriptor, Value, ValuationError, ValuedField, padic_order,
)

P5 = ValuedField.parse("padic:5")
TQ = ValuedField.parse("tadic:Q")
C5 = ValuedField.parse("composite:5")


def test_valuate_examples():
    assert P5.valuate(Fraction(50, 3)) == Value([2])
    t = TQ.t
    assert TQ.valuate((3 * t ** 2 - 1) / (3 * t ** 4)) == Value([-4])
    s = C5.t
    assert C5.valuate(5 * s) == Value([1, 1])
    assert P5.valuate(0) is INF


def test_residue_examples():
    r = P5.residue(Fraction(7, 3))
    # brute-force inverse of 3 mod 5
    inv3 = next(x for x in range(1, 5) if 3 * x % 5 == 1)
    assert r == GFElem(7 * inv3, 5) == GFElem(4, 5)
    t = TQ.t
    a = (3 * t ** 2 - 1) / (3 * t ** 4)
    assert TQ.residue(a * t ** 4) == Fraction(-1, 3)
    for kind in FIELD_KINDS:
        vf = ValuedField.parse(kind)
        assert not vf.residue(uniformizer(vf))


def test_residue_of_negative_value_fails():
    with pytest.raises(ValuationError):
        P5.residue(Fraction(1, 5))
    with pytest.raises(ValuationError):
        C5.residue(C5.t ** 0 / 5)


def test_composite_residue_two_stages():
    s = C5.t
    assert C5.residue((7 + s) / (3 - s)) == GFElem(4, 5)
    assert C5.valuate(s / 25 + 5 * s) == Value([1, -2])


def test_section_examples():
    assert P5.section(Value([3])) == 125
    t = TQ.t
    assert TQ.section(Value([-2])) == 1 / t ** 2
    assert C5.section(Value([1, 1])) == 5 * C5.t
    with pytest.raises(ValuationError):
        P5.section(Value([Fraction(1, 2)]))


def test_in_index_subgroup_examples():
    assert TQ.in_index_subgroup(Value([-10]), 2)
    assert not TQ.in_index_subgroup(Value([-10]), 12)
    assert not C5.in_index_subgroup(Value([2, 3]), 2)


def test_value_order_and_inf():
    assert Value([1, -5]) > Value([0, 7])
    assert INF > Value([10 ** 6])
    assert INF + Value([3]) is INF
    assert Value([3]) / 2 == Value([Fraction(3, 2)])
    assert not (Value([3]) / 2).is_integral()


def test_value_json_round_trip():
    for v in (Value([2]), Value([Fraction(-1, 2), 3]), INF):
        assert Value.from_json(v.to_json()) == v
    assert Value([-10]).to_json() == ["-10/1"]
    assert INF.to_json() == "inf"


def test_descriptor_parsing():
    assert FieldDescriptor.from_json("tadic:Q:real") == FieldDescriptor("tadic", None, "real-signs")
    assert FieldDescriptor.from_json({"kind": "padic", "p": 5}) == FieldDescriptor("padic", 5)
    assert FieldDescriptor.from_json('{"kind": "tadic", "p": 7}').p == 7
    for s in FIELD_KINDS:
        d = FieldDescriptor.from_json(s)
        assert FieldDescriptor.from_json(d.to_json()) == d
        assert FieldDescriptor.from_json(str(d)) == d


@pytest.mark.parametrize("bad", ["padic:3", "padic:2", "padic:9", "padic", "composite", "padic:5:real", "nope:5"])
def test_descriptor_rejects(bad):
    with pytest.raises(ValueError):
        FieldDescriptor.from_json(bad)


def test_padic_order():
    assert padic_order(Fraction(0), 5) is None
    assert padic_order(Fraction(3, 250), 5) == -3


# -- properties on random elements of every field kind --------------------------


@pytest.mark.parametrize("kind", FIELD_KINDS)
def test_ultrametric_and_multiplicative(kind):
    vf = ValuedField.parse(kind)
    rng = random.Random(kind)
    for _ in range(150):
        x, y = random_scalar(vf, rng), random_scalar(vf, rng)
        vx, vy = vf.valuate(x), vf.valuate(y)
        assert vx.is_integral()
        s = x + y
        if s:
            assert vf.valuate(s) >= min(vx, vy)
            if vx != vy:
                assert vf.valuate(s) == min(vx, vy)
        assert vf.valuate(x * y) == vx + vy
        assert vf.valuate(1 / x) == -vx


@pytest.mark.parametrize("kind", FIELD_KINDS)
def test_residue_is_homomorphism(kind):
    vf = ValuedField.parse(kind)
    rng = random.Random(kind + "res")
    pi = uniformizer(vf)
    for _ in range(100):
        x, y = random_unit(vf, rng), random_unit(vf, rng) * pi ** rng.randint(0, 2)
        assert vf.residue(x * y) == vf.residue(x) * vf.residue(y)
        if x + y:
            assert vf.residue(x + y) == vf.residue(x) + vf.residue(y)


@pytest.mark.parametrize("kind", FIELD_KINDS)
def test_section_round_trip(kind):
    vf = ValuedField.parse(kind)
    for i in range(-4, 5):
        for j in (range(-3, 4) if vf.rank == 2 else [None]):
            gamma = Value([i] if j is None else [i, j])
            assert vf.valuate(vf.section(gamma)) == gamma


@given(st.integers(-10 ** 6, 10 ** 6).filter(bool), st.integers(1, 10 ** 6))
def test_padic_valuation_matches_divisibility(n, d):
    x = Fraction(n, d)
    k = P5.valuate(x).components[0]
    m = x / Fraction(5) ** int(k)
    assert m.numerator % 5 and m.denominator % 5
