from fractions import Fraction

import pytest

from qlc.fields import (GF2, GF3, QQ, PrimeField, RationalField,
                        RationalFunctionField, field_name)


def _axioms(F, elements):
    for a in elements:
        assert F.add(a, F.zero) == a
        assert F.mul(a, F.one) == a
        assert F.add(a, F.neg(a)) == F.zero
        assert F.sub(a, a) == F.zero
        if a != F.zero:
            assert F.mul(a, F.inv(a)) == F.one
            assert F.div(a, a) == F.one
    for a in elements:
        for b in elements:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)


def test_prime_field_axioms():
    for p in (2, 3, 7):
        F = PrimeField(p)
        _axioms(F, [F.from_int(i) for i in range(p)])
        assert F.char == p and F.size == p


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_rationals():
    _axioms(QQ, [Fraction(n, d) for n in (-2, 0, 1, 3) for d in (1, 2, 5)])
    assert QQ.char == 0 and QQ.size is None
    assert QQ.from_int(-7) == Fraction(-7)


def test_rational_functions():
    F = RationalFunctionField(2)
    t = F.t
    els = [F.zero, F.one, t, F.add(t, F.one), F.mul(t, t)]
    _axioms(F, els)
    assert F.char == 2 and F.size is None
    # arithmetic normalizes: t/t collapses to 1
    assert F.div(t, t) == F.one
    assert F.format(F.add(F.mul(t, t), F.one)) in ("t^2+1", "1+t^2")


def test_field_names():
    assert field_name(GF2) == "F2"
    assert field_name(GF3) == "F3"
    assert field_name(QQ) == "Q"
    assert field_name(RationalFunctionField(5)) == "F5(t)"
    assert field_name(RationalField()) == "Q"
