"""Exhaustive field-axiom checks for the binary fields (degrees 1..5)."""

import itertools

import pytest

from groupgraphs.gf2 import IRREDUCIBLE, BinaryField


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5])
def test_field_axioms_exhaustive(degree):
    F = BinaryField(degree)
    q = F.size
    elems = range(q)
    for a, b in itertools.product(elems, repeat=2):
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(a, b) == F.add(b, a)
    for a, b, c in itertools.product(elems, repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in elems:
        assert F.mul(a, 1) == a
        assert F.add(a, 0) == a
        assert F.add(a, a) == 0


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5])
def test_inverses(degree):
    F = BinaryField(degree)
    for a in range(1, F.size):
        assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_reduction_polynomials_are_irreducible():
    # no factorization into two smaller carry-less polynomials
    for degree, poly in IRREDUCIBLE.items():
        for f in range(2, 1 << degree):
            for g in range(2, 1 << degree):
                prod = 0
                x, gg = f, g
                while gg:
                    if gg & 1:
                        prod ^= x
                    gg >>= 1
                    x <<= 1
                assert prod != poly, (degree, f, g)


def test_unsupported_degree():
    with pytest.raises(ValueError):
        BinaryField(6)
