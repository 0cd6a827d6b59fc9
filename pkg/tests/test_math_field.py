import itertools

import galois
import numpy as np
import pytest

import lrcsim.api as lrc
from lrcsim import exceptions
from lrcsim.math import PrimeField, Subsets, field_arith, systematic_mds_generator


def test_field_arith():

    assert field_arith(7, "add", 3, 4) == 0
    assert field_arith(7, "sub", 3, 4) == 6
    assert field_arith(7, "mul", 3, 4) == 5
    assert field_arith(7, "inv", 3) == 5
    assert field_arith(7, "div", 1, 3) == 5

    with pytest.raises(exceptions.DivisionByZero):
        _ = field_arith(7, "inv", 0)

    with pytest.raises(exceptions.DivisionByZero):
        _ = field_arith(7, "div", 3, 0)

    with pytest.raises(exceptions.NotPrime):
        _ = field_arith(8, "add", 3, 4)

    with pytest.raises(exceptions.ShapeError):
        _ = field_arith(7, "add", 3)

    with pytest.raises(exceptions.ShapeError):
        _ = field_arith(7, "add", 3, 7)


@pytest.mark.parametrize("p", galois.primes(101))
def test_field_inverse(p: int):

    field = PrimeField(p=p)

    for a in range(1, p):
        assert field.mul(a, field.inv(a)) == 1
        assert field_arith(p, "mul", a, field_arith(p, "inv", a)) == 1


def test_prime_field_validation():

    for p in (0, 1, 4, 9, 15):
        with pytest.raises(exceptions.NotPrime):
            _ = PrimeField(p=p)

    assert PrimeField(p=7) == PrimeField(p=7)


def test_systematic_mds_generator():

    coefficients = systematic_mds_generator(p=7, k=1, m=1)

    assert coefficients.shape == (1, 1)
    assert coefficients[0, 0] != 0

    # Every square sub-matrix of the parity block of an MDS code is invertible,
    # in particular every coefficient is non-zero.
    coefficients = systematic_mds_generator(p=7, k=3, m=3)

    assert coefficients.shape == (3, 3)
    assert np.all(coefficients != 0)
    assert np.all((coefficients >= 0) & (coefficients < 7))

    with pytest.raises(exceptions.AlphabetTooSmall):
        _ = systematic_mds_generator(p=3, k=3, m=3)

    # AlphabetTooSmall is an InvalidSpec.
    with pytest.raises(exceptions.InvalidSpec):
        _ = systematic_mds_generator(p=5, k=3, m=3)

    with pytest.raises(exceptions.NotPrime):
        _ = systematic_mds_generator(p=6, k=2, m=1)


@pytest.mark.parametrize(("p", "k", "m"), [(5, 2, 2), (7, 3, 3), (7, 2, 4), (11, 2, 1)])
def test_systematic_mds_generator_distance(p: int, k: int, m: int):

    code = lrc.construct.build_rs_mds(q=p, k=k, d=m + 1)

    assert code.size == p**k
    assert code.n == k + m
    assert lrc.code.min_distance(code) == m + 1


def test_subsets():

    items = [0, 2, 5, 7]

    subsets = list(Subsets.canonical(items, max_size=2))

    assert subsets[0] == ()
    assert subsets[1:5] == [(0,), (2,), (5,), (7,)]
    assert subsets[5:] == list(itertools.combinations(items, 2))
    assert len(subsets) == Subsets.count(n_items=4, max_size=2) == 11

    assert list(Subsets.canonical(items, max_size=3, min_size=3)) == list(
        itertools.combinations(items, 3)
    )
