import os

import jax
import pytest

import lrcsim.api as lrc


def pytest_configure() -> None:
    """Pytest configuration hook."""

    # This is a global variable that is updated by the `prng_key` fixture.
    pytest.prng_key = jax.random.PRNGKey(
        seed=int(os.environ.get("LRCSIM_TEST_SEED", 0))
    )


# ================
# Generic fixtures
# ================


@pytest.fixture(scope="function")
def prng_key() -> jax.Array:
    """
    Fixture to generate a new PRNG key for each test function.

    Returns:
        The new PRNG key passed to the test.

    Note:
        This fixture operates on a global variable initialized in the
        `pytest_configure` hook.
    """

    pytest.prng_key, subkey = jax.random.split(pytest.prng_key, num=2)
    return subkey


# ========================
# Fixtures providing codes
# ========================

# All the fixtures in this section must have "session" scope.
# In this way, the codes are generated only once and shared among all the tests.

TWIST_SEEDS = (1, 2, 3)


@pytest.fixture(scope="session")
def parity_code() -> lrc.code.SystematicCode:
    """
    Fixture providing the binary single-parity code {000, 011, 101, 110}.

    Returns:
        The parity code, with dimension 2.
    """

    codebook = lrc.code.Codebook.build(
        words=[[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]], q=2
    )

    return lrc.code.systematic_from_codebook(codebook, k=2)


@pytest.fixture(scope="session")
def repetition_code() -> lrc.code.Codebook:
    """
    Fixture providing the binary repetition code {000, 111}.

    Returns:
        The repetition code.
    """

    return lrc.code.Codebook.build(words=[[0, 0, 0], [1, 1, 1]], q=2)


@pytest.fixture(scope="session")
def and_code() -> lrc.code.Codebook:
    """
    Fixture providing the binary code whose last symbol is the AND of the others.

    Returns:
        The AND code.
    """

    return lrc.construct.build_nonreversible_example()


@pytest.fixture(scope="session")
def rs_7_3_3() -> lrc.code.SystematicCode:
    """
    Fixture providing the Reed-Solomon code over GF(7) with k=3 and d=4.

    Returns:
        The [6, 3, 4] code.
    """

    return lrc.construct.build_rs_mds(q=7, k=3, d=4)


@pytest.fixture(scope="session")
def pyramid_7_4_2_3() -> lrc.code.SystematicCode:
    """
    Fixture providing the Pyramid code over GF(7) with k=4, r=2 and d=3.

    Returns:
        The optimal code of length 7.
    """

    return lrc.construct.build_pyramid(
        spec=lrc.construct.PyramidSpec(q=7, k=4, r=2, d=3)
    )


@pytest.fixture(scope="session")
def pyramid_5_2_1_3() -> lrc.code.SystematicCode:
    """
    Fixture providing the Pyramid code over GF(5) with k=2, r=1 and d=3.

    Returns:
        The optimal code of length 5.
    """

    return lrc.construct.build_pyramid(
        spec=lrc.construct.PyramidSpec(q=5, k=2, r=1, d=3)
    )


@pytest.fixture(scope="session")
def twisted_pyramids_7_4_2_3(
    pyramid_7_4_2_3: lrc.code.SystematicCode,
) -> dict[int, lrc.code.SystematicCode]:
    """
    Fixture providing seeded twists of the Pyramid code over GF(7).

    Returns:
        The twisted codes, keyed by seed.
    """

    code = pyramid_7_4_2_3

    return {
        seed: lrc.construct.twist(
            code, lrc.construct.TwistSpec.from_seed(seed, q=code.q, n=code.n)
        )
        for seed in TWIST_SEEDS
    }


@pytest.fixture(scope="session")
def twisted_pyramids_5_2_1_3(
    pyramid_5_2_1_3: lrc.code.SystematicCode,
) -> dict[int, lrc.code.SystematicCode]:
    """
    Fixture providing seeded twists of the Pyramid code over GF(5).

    Returns:
        The twisted codes, keyed by seed.
    """

    code = pyramid_5_2_1_3

    return {
        seed: lrc.construct.twist(
            code, lrc.construct.TwistSpec.from_seed(seed, q=code.q, n=code.n)
        )
        for seed in TWIST_SEEDS
    }


# ============================
# Collections of Pyramid codes
# ============================


# This is not a fixture.
def get_optimal_code_fixture(
    name: str, request: pytest.FixtureRequest
) -> tuple[lrc.code.SystematicCode, int]:
    """
    Factory to get an optimal code and its locality.

    Args:
        name: The name of the code, optionally with the seed of a twist.
        request: The request object.

    Returns:
        The code and its information locality.
    """

    match name.split("@"):
        case ["pyramid_7_4_2_3"]:
            return request.getfixturevalue(pyramid_7_4_2_3.__name__), 2
        case ["pyramid_5_2_1_3"]:
            return request.getfixturevalue(pyramid_5_2_1_3.__name__), 1
        case ["pyramid_7_4_2_3", seed]:
            twists = request.getfixturevalue(twisted_pyramids_7_4_2_3.__name__)
            return twists[int(seed)], 2
        case ["pyramid_5_2_1_3", seed]:
            twists = request.getfixturevalue(twisted_pyramids_5_2_1_3.__name__)
            return twists[int(seed)], 1
        case _:
            raise ValueError(name)


@pytest.fixture(
    scope="session",
    params=[
        "pyramid_7_4_2_3",
        "pyramid_5_2_1_3",
        *(f"pyramid_7_4_2_3@{seed}" for seed in TWIST_SEEDS),
        *(f"pyramid_5_2_1_3@{seed}" for seed in TWIST_SEEDS),
    ],
)
def optimal_code(request) -> tuple[lrc.code.SystematicCode, int]:
    """
    Fixture providing the optimal codes, linear and twisted.

    Returns:
        An optimal code and its information locality.
    """

    return get_optimal_code_fixture(name=request.param, request=request)
