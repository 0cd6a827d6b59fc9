import jax
import numpy as np
import pytest

import lrcsim.api as lrc
from lrcsim import exceptions


def test_build_rs_mds(rs_7_3_3: lrc.code.SystematicCode):

    code = rs_7_3_3

    assert (code.q, code.k, code.n, code.size) == (7, 3, 6, 343)
    assert lrc.code.is_mds(code)

    with pytest.raises(exceptions.AlphabetTooSmall):
        _ = lrc.construct.build_rs_mds(q=5, k=3, d=4)

    with pytest.raises(exceptions.InvalidSpec):
        _ = lrc.construct.build_rs_mds(q=7, k=3, d=1)


def test_build_pyramid(pyramid_7_4_2_3: lrc.code.SystematicCode):

    spec = lrc.construct.PyramidSpec(q=7, k=4, r=2, d=3)
    code = pyramid_7_4_2_3

    assert code.n == spec.length() == 7
    assert code.size == 7**4
    assert lrc.construct.light_parity_coordinates(spec) == (4, 5)

    # The light parities split the first Reed-Solomon parity over the groups.
    parity = lrc.construct.pyramid_parity_matrix(spec)

    assert parity.shape == (3, 4)
    assert np.all(parity[0, :2] != 0) and np.all(parity[0, 2:] == 0)
    assert np.all(parity[1, :2] == 0) and np.all(parity[1, 2:] != 0)
    assert np.all(parity[2] != 0)

    for information in ([1, 0, 0, 0], [0, 3, 5, 0], [6, 6, 6, 6]):
        word = np.array(code.encode(information))
        assert np.array_equal(word[4:], parity @ np.array(information) % 7)


def test_build_pyramid_without_heavy_parities():

    code = lrc.construct.build(lrc.construct.PyramidSpec(q=5, k=4, r=2, d=2))

    assert code.n == 6
    assert lrc.code.min_distance(code) == 2
    assert lrc.locality.information_locality(code) == 2


def test_build_pyramid_with_r_equal_to_k():

    code = lrc.construct.build(lrc.construct.PyramidSpec(q=7, k=3, r=3, d=4))

    assert code == lrc.construct.build_rs_mds(q=7, k=3, d=4)


@pytest.mark.parametrize(
    ("q", "k", "r", "d"),
    [
        (7, 4, 3, 3),
        (7, 4, 5, 3),
        (7, 4, 0, 3),
        (7, 4, 2, 1),
        (8, 4, 2, 3),
        (1, 1, 1, 2),
    ],
)
def test_build_pyramid_invalid(q: int, k: int, r: int, d: int):

    with pytest.raises(exceptions.InvalidSpec):
        _ = lrc.construct.build_pyramid(lrc.construct.PyramidSpec(q=q, k=k, r=r, d=d))


def test_build_pyramid_alphabet_too_small():

    with pytest.raises(exceptions.AlphabetTooSmall):
        _ = lrc.construct.build_pyramid(lrc.construct.PyramidSpec(q=5, k=4, r=2, d=3))


def test_twist_spec(prng_key: jax.Array):

    seed = int(jax.random.randint(prng_key, shape=(), minval=0, maxval=2**16))

    spec = lrc.construct.TwistSpec.from_seed(seed, q=7, n=7)

    assert spec.seed == seed
    assert len(spec.perms) == 7
    assert all(sorted(perm) == list(range(7)) for perm in spec.perms)

    # The same seed gives the same permutations, independently of the length.
    assert lrc.construct.TwistSpec.from_seed(seed, q=7, n=7) == spec
    assert lrc.construct.TwistSpec.from_seed(seed, q=7, n=9).perms[:7] == spec.perms

    with pytest.raises(exceptions.ShapeError):
        spec.validate(q=7, n=6)

    with pytest.raises(exceptions.ShapeError):
        lrc.construct.TwistSpec(perms=((0, 0),)).validate(q=2, n=1)


def test_twist(
    pyramid_7_4_2_3: lrc.code.SystematicCode,
    twisted_pyramids_7_4_2_3: dict[int, lrc.code.SystematicCode],
    and_code: lrc.code.Codebook,
):

    code = pyramid_7_4_2_3

    identity = lrc.construct.TwistSpec.identity(q=code.q, n=code.n)
    assert lrc.construct.twist(code, identity) == code

    for seed, twisted in twisted_pyramids_7_4_2_3.items():

        assert isinstance(twisted, lrc.code.SystematicCode)
        assert (twisted.q, twisted.k, twisted.n, twisted.size) == (7, 4, 7, 2401)
        assert lrc.code.min_distance(twisted) == 3

        spec = lrc.construct.TwistSpec.from_seed(seed, q=code.q, n=code.n)

        # Each codeword is mapped symbol by symbol.
        word = code.encode([1, 2, 3, 4])
        image = tuple(spec.perms[j][s] for j, s in enumerate(word))
        assert image in set(twisted.base.as_tuples())

    # Plain codebooks stay plain codebooks.
    twisted = lrc.construct.twist(
        and_code, lrc.construct.TwistSpec(perms=((1, 0), (0, 1), (0, 1)))
    )
    assert isinstance(twisted, lrc.code.Codebook)
    assert twisted.as_tuples() == [(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 0)]


def test_twist_is_not_linear(
    twisted_pyramids_7_4_2_3: dict[int, lrc.code.SystematicCode],
):

    assert not all(
        lrc.code.is_additively_closed(twisted)
        for twisted in twisted_pyramids_7_4_2_3.values()
    )


def test_build_nonreversible_example(and_code: lrc.code.Codebook):

    assert and_code.q == 2
    assert and_code.as_tuples() == [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 1)]


def test_pad_with_duplicate(pyramid_5_2_1_3: lrc.code.SystematicCode):

    padded = lrc.construct.pad_with_duplicate(pyramid_5_2_1_3, coordinate=4)

    assert padded.n == 6
    assert padded.k == 2
    assert np.array_equal(padded.words[:, 5], padded.words[:, 4])

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.construct.pad_with_duplicate(pyramid_5_2_1_3, coordinate=0)


def test_build_dispatch():

    assert lrc.construct.build(lrc.construct.RsMdsSpec(q=5, k=2, d=3)).n == 4

    with pytest.raises(exceptions.InvalidSpec):
        _ = lrc.construct.build("pyramid")
