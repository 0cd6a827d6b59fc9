import itertools

import numpy as np
import pytest

import lrcsim.api as lrc
from lrcsim import exceptions


def test_verify_theorem4(pyramid_7_4_2_3: lrc.code.SystematicCode):

    report = lrc.structure.verify_theorem4(pyramid_7_4_2_3, r=2)

    assert report.optimal
    assert report.passed(), report.items
    assert set(report.items) == {"t4_1", "t4_2", "t4_3", "t4_4"}
    assert report.groups == ((0, 1, 4), (2, 3, 5))
    assert report.partition == (((0, 1), (2, 3)), (4, 5), (6,))
    assert report.partition.information() == (0, 1, 2, 3)
    assert report.heavy_bound == 4
    assert report.items["t4_4"].detail["source"] == "natural"


def test_verify_theorem5(pyramid_7_4_2_3: lrc.code.SystematicCode):

    report = lrc.structure.verify_theorem5(pyramid_7_4_2_3, r=2)

    assert report.passed(), report.items
    assert set(report.items) == {f"t4_{j}" for j in range(1, 5)} | {
        f"t5_{j}" for j in range(1, 5)
    }
    assert len(report.partition.L) == 2
    assert len(report.partition.H) == 1
    assert report.items["t5_1"].detail["dependencies"] == [[0, 1], [2, 3]]
    assert report.items["t5_3"].detail["localities"] == [2, 2]

    # The heavy parity meets the bound with equality.
    assert report.heavy_bound == 4
    assert lrc.locality.locality_of(pyramid_7_4_2_3, target=6) == 4


def test_verify_theorem5_small(pyramid_5_2_1_3: lrc.code.SystematicCode):

    report = lrc.structure.verify_theorem5(pyramid_5_2_1_3, r=1)

    assert report.passed(), report.items
    assert report.groups == ((0, 2), (1, 3))
    assert report.partition.L == (2, 3)
    assert report.partition.H == (4,)
    assert report.heavy_bound == 2


def test_structure_of_optimal_codes(optimal_code: tuple[lrc.code.SystematicCode, int]):

    code, r = optimal_code

    report4 = lrc.structure.verify_theorem4(code, r=r)
    report5 = lrc.structure.verify_theorem5(code, r=r)

    assert report4.passed(), report4.items
    assert report5.passed(), report5.items

    assert report5.groups == report4.groups
    assert report5.partition == report4.partition


def test_structure_not_applicable(
    pyramid_7_4_2_3: lrc.code.SystematicCode, rs_7_3_3: lrc.code.SystematicCode
):

    code = pyramid_7_4_2_3

    # r must divide k and be smaller than k.
    with pytest.raises(exceptions.NotApplicable):
        _ = lrc.structure.verify_theorem4(code, r=3)

    with pytest.raises(exceptions.NotApplicable):
        _ = lrc.structure.verify_theorem4(code, r=4)

    # Not optimal.
    padded = lrc.construct.pad_with_duplicate(code, coordinate=6)
    with pytest.raises(exceptions.NotApplicable):
        _ = lrc.structure.verify_theorem4(padded, r=2)

    # Replacing the heavy parity by a constant column drops the distance to 2.
    words = np.array(code.words)
    words[:, 6] = 0
    constant = lrc.code.systematic_from_codebook(
        lrc.code.Codebook.build(words=words, q=7), k=4
    )
    assert lrc.code.min_distance(constant) == 2

    with pytest.raises(exceptions.NotApplicable):
        _ = lrc.structure.verify_theorem4(constant, r=2)

    # An MDS code has locality k, which is larger than r.
    with pytest.raises(exceptions.NotApplicable):
        _ = lrc.structure.verify_theorem4(rs_7_3_3, r=1)

    # The distance is too large for the light and heavy parities.
    pyramid = lrc.construct.build_pyramid(lrc.construct.PyramidSpec(q=7, k=2, r=1, d=5))
    with pytest.raises(exceptions.NotApplicable):
        _ = lrc.structure.verify_theorem5(pyramid, r=1)

    with pytest.raises(TypeError):
        _ = lrc.structure.verify_theorem4(code.base, r=2)


def test_verify_theorem4_large_distance():

    pyramid = lrc.construct.build_pyramid(lrc.construct.PyramidSpec(q=7, k=2, r=1, d=5))

    report = lrc.structure.verify_theorem4(pyramid, r=1)

    assert report.passed(), report.items
    assert report.partition.L == (2, 3)
    assert report.partition.H == (4, 5, 6)
    assert report.heavy_bound == 2 - 1 * 2


def test_heavy_dependency_check(
    pyramid_7_4_2_3: lrc.code.SystematicCode,
    twisted_pyramids_7_4_2_3: dict[int, lrc.code.SystematicCode],
):

    groups = [(0, 1), (2, 3)]

    assert lrc.structure.heavy_dependency_check(pyramid_7_4_2_3, h=6, groups=groups)

    # A light parity ignores the other group.
    assert not lrc.structure.heavy_dependency_check(
        pyramid_7_4_2_3, h=4, groups=groups
    )

    for twisted in twisted_pyramids_7_4_2_3.values():
        assert lrc.structure.heavy_dependency_check(twisted, h=6, groups=groups)

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.structure.heavy_dependency_check(pyramid_7_4_2_3, h=1, groups=groups)

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.structure.heavy_dependency_check(
            pyramid_7_4_2_3, h=6, groups=[(0, 1), (1, 2)]
        )


def test_dependency_set(pyramid_7_4_2_3: lrc.code.SystematicCode):

    code = pyramid_7_4_2_3

    assert lrc.structure.dependency_set(code, target=0) == (0,)
    assert lrc.structure.dependency_set(code, target=4) == (0, 1)
    assert lrc.structure.dependency_set(code, target=5) == (2, 3)
    assert lrc.structure.dependency_set(code, target=6) == (0, 1, 2, 3)


def test_light_group_subcode(pyramid_7_4_2_3: lrc.code.SystematicCode):

    code = pyramid_7_4_2_3
    report = lrc.structure.verify_theorem5(code, r=2)

    for group in range(2):
        for sigma in ((0, 0), (3, 1), (6, 5)):

            sub = lrc.structure.light_group_subcode(
                code, report, group=group, sigmas=[sigma]
            )

            assert (sub.n, sub.size) == (4, 49)
            assert lrc.code.is_mds(sub)

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.structure.light_group_subcode(code, report, group=0, sigmas=[])

    with pytest.raises(exceptions.ShapeError):
        _ = lrc.structure.light_group_subcode(code, report, group=2, sigmas=[(0, 0)])


def test_reverse_subcode(optimal_code: tuple[lrc.code.SystematicCode, int]):

    code, r = optimal_code
    d = lrc.code.min_distance(code)

    trace = lrc.subcode.run_subcode(code, r=r)
    sub = lrc.structure.reverse_subcode(code, trace=trace, r=r)

    assert sub.size == code.q**r
    assert sub.n == r + d - 1
    assert lrc.code.is_mds(sub)


def test_nonreversible_example(and_code: lrc.code.Codebook):

    verdicts = lrc.locality.reversibility_check(and_code, group=[0, 1, 2])

    assert not all(verdicts.values())

    # Two binary information symbols and their AND.
    for S in itertools.combinations(range(3), 2):
        target = ({0, 1, 2} - set(S)).pop()
        assert lrc.locality.determines(and_code, coordinates=S, target=target) == (
            target == 2
        )
