import itertools

import jax
import pytest

import lrcsim.api as lrc
from lrcsim import exceptions


def test_erasure_pattern():

    pattern = lrc.recovery.ErasurePattern.build([0, None, 3, None])

    assert pattern.n == 4
    assert pattern.erased() == (1, 3)
    assert pattern.known() == (0, 2)

    erased = lrc.recovery.ErasurePattern.erase([0, 5, 3, 1], erased=[3, 1])
    assert erased == pattern

    pattern.validate(q=5, n=4)

    with pytest.raises(exceptions.ShapeError):
        pattern.validate(q=3, n=4)

    with pytest.raises(exceptions.ShapeError):
        pattern.validate(q=5, n=5)

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.recovery.ErasurePattern.build([0, "1"])

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.recovery.ErasurePattern.erase([0, 1], erased=[2])


def test_recover_erasures_repetition(repetition_code: lrc.code.Codebook):

    build = lrc.recovery.ErasurePattern.build

    result = lrc.recovery.recover_erasures(
        repetition_code, pattern=build([None, None, 1])
    )
    assert result == (lrc.recovery.RecoveryStatus.Unique, 1, (1, 1, 1))

    result = lrc.recovery.recover_erasures(
        repetition_code, pattern=build([None, None, None])
    )
    assert result.status is lrc.recovery.RecoveryStatus.Ambiguous
    assert result.count == 2
    assert result.codeword is None

    result = lrc.recovery.recover_erasures(
        repetition_code, pattern=build([0, 1, None])
    )
    assert result.status is lrc.recovery.RecoveryStatus.Inconsistent
    assert result.count == 0


def test_recover_erasures_pyramid(pyramid_7_4_2_3: lrc.code.SystematicCode):

    code = pyramid_7_4_2_3
    word = code.encode([3, 0, 6, 2])

    # Up to d - 1 = 2 erasures are always recoverable.
    for erased in itertools.combinations(range(code.n), 2):

        pattern = lrc.recovery.ErasurePattern.erase(word, erased=erased)
        result = lrc.recovery.recover_erasures(code, pattern=pattern)

        assert result.status is lrc.recovery.RecoveryStatus.Unique, erased
        assert result.codeword == word

    # Three erasures spread over the two groups and the heavy parity.
    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[0, 2, 6])
    result = lrc.recovery.recover_erasures(code, pattern=pattern)

    assert result.status is lrc.recovery.RecoveryStatus.Unique
    assert result.codeword == word

    # A whole repair group leaves a single equation on two unknowns.
    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[0, 1, 4])
    result = lrc.recovery.recover_erasures(code, pattern=pattern)

    assert result.status is lrc.recovery.RecoveryStatus.Ambiguous
    assert result.count == 7

    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[0, 1, 4, 6])
    result = lrc.recovery.recover_erasures(code, pattern=pattern)

    assert result.count == 49


def test_local_repair(pyramid_7_4_2_3: lrc.code.SystematicCode):

    code = pyramid_7_4_2_3
    profile = lrc.locality.locality_profile(code)
    word = code.encode([1, 4, 5, 2])

    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[0, 5])
    repaired = lrc.recovery.local_repair(code, pattern=pattern, profile=profile)

    assert set(repaired) == {0, 5}
    assert repaired[0] == (word[0], (1, 4))
    assert repaired[5] == (word[5], (2, 3))

    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[6])
    repaired = lrc.recovery.local_repair(code, pattern=pattern, profile=profile)

    assert repaired[6].value == word[6]
    assert repaired[6].accessed == (0, 1, 2, 3)

    # Nothing to repair.
    pattern = lrc.recovery.ErasurePattern.build(list(word))
    assert lrc.recovery.local_repair(code, pattern=pattern, profile=profile) == {}


def test_local_repair_errors(
    pyramid_7_4_2_3: lrc.code.SystematicCode, rs_7_3_3: lrc.code.SystematicCode
):

    code = pyramid_7_4_2_3
    profile = lrc.locality.locality_profile(code)
    word = code.encode([1, 4, 5, 2])

    # The partner of an erased symbol is erased too.
    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[0, 1])
    with pytest.raises(exceptions.NeedsGlobalRepair):
        _ = lrc.recovery.local_repair(code, pattern=pattern, profile=profile)

    # Global recovery still succeeds.
    result = lrc.recovery.recover_erasures(code, pattern=pattern)
    assert result.codeword == word

    # The witness symbol does not appear in any codeword.
    ternary = lrc.code.Codebook.build(words=[[0, 0, 0], [1, 1, 1]], q=3)
    pattern = lrc.recovery.ErasurePattern.build([None, 2, 2])

    with pytest.raises(exceptions.InconsistentPattern):
        _ = lrc.recovery.local_repair(
            ternary, pattern=pattern, profile=lrc.locality.locality_profile(ternary)
        )

    word = code.encode([0, 0, 0, 0])
    pattern = lrc.recovery.ErasurePattern.erase(word, erased=[6])

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.recovery.local_repair(
            code, pattern=pattern, profile=lrc.locality.locality_profile(rs_7_3_3)
        )


def test_local_repair_matches_recovery(
    optimal_code: tuple[lrc.code.SystematicCode, int], prng_key: jax.Array
):

    code, _ = optimal_code
    profile = lrc.locality.locality_profile(code)

    indices = jax.random.randint(prng_key, shape=(20,), minval=0, maxval=code.size)

    for index in indices.tolist():
        word = code.base.word(index)

        for coordinate in range(code.n):

            pattern = lrc.recovery.ErasurePattern.erase(word, erased=[coordinate])
            repaired = lrc.recovery.local_repair(code, pattern=pattern, profile=profile)
            result = lrc.recovery.recover_erasures(code, pattern=pattern)

            assert result.status is lrc.recovery.RecoveryStatus.Unique
            assert repaired[coordinate].value == result.codeword[coordinate]
            assert len(repaired[coordinate].accessed) == profile[coordinate].locality
