import pytest

from nak_config import Config
from nak_errors import (
    EmptySeries,
    NonPositiveLength,
    KupischConditionViolated,
    DisconnectedQuiver,
    LimitExceeded,
)
from nak_algebra import (
    Shape,
    validate_kupisch,
    left_lengths,
    quiver,
    shift,
    is_selfinjective,
    classify,
    f_map,
    g_map,
    proj_injective_vertices,
    num_proj_inj,
    difference_class,
    enumerate_algebras,
    enumerate_difference_classes,
)


def test_validate_accepts_cyclic_series():
    alg = validate_kupisch([2, 2, 3])
    assert alg.c == (2, 2, 3)
    assert alg.n == 3
    assert alg.shape is Shape.Cyclic
    assert str(alg) == "(2,2,3)"


def test_validate_accepts_rotations():
    assert validate_kupisch([3, 2, 2]).c == (3, 2, 2)
    assert validate_kupisch([2, 3, 2]).c == (2, 3, 2)


@pytest.mark.parametrize("values, shape, error", [
    ([], 'cyclic', EmptySeries),
    ([2, 0, 2], 'cyclic', NonPositiveLength),
    ([2, 4, 2], 'cyclic', KupischConditionViolated),
    ([1, 1], 'cyclic', DisconnectedQuiver),
    ([2, 1, 2], 'linear', KupischConditionViolated),
    ([4, 2, 1], 'linear', KupischConditionViolated),
    ([2, 1, 1], 'linear', DisconnectedQuiver),
])
def test_validate_rejects(values, shape, error):
    with pytest.raises(error):
        validate_kupisch(values, shape)


def test_violation_reports_first_index():
    with pytest.raises(KupischConditionViolated) as info:
        validate_kupisch([2, 4, 2])
    assert info.value.index == 1
    assert info.value.exit_code == 1


def test_non_positive_reports_index():
    with pytest.raises(NonPositiveLength) as info:
        validate_kupisch([2, 0, 2])
    assert info.value.index == 1


@pytest.mark.parametrize("values, shape, expected", [
    ((2, 2, 3), 'cyclic', (2, 3, 2)),
    ((3, 4, 4), 'cyclic', (3, 4, 4)),
    ((4, 5, 5), 'cyclic', (5, 4, 5)),
    ((5, 5, 6), 'cyclic', (5, 6, 5)),
    ((2, 3), 'cyclic', (2, 3)),
    ((3, 3, 3), 'cyclic', (3, 3, 3)),
    ((3, 2, 1), 'linear', (1, 2, 3)),
    ((2, 2, 1), 'linear', (1, 2, 2)),
])
def test_left_lengths(values, shape, expected):
    alg = validate_kupisch(values, shape)
    assert left_lengths(alg) == expected
    assert sum(alg.d) == sum(alg.c)


def test_quiver_edges():
    cyclic = quiver(validate_kupisch([2, 2, 3]))
    assert sorted(cyclic.edges()) == [(0, 1), (1, 2), (2, 0)]
    line = quiver(validate_kupisch([3, 2, 1], 'linear'))
    assert sorted(line.edges()) == [(0, 1), (1, 2)]


def test_shift_adds_n():
    alg = validate_kupisch([2, 2, 3])
    assert shift(alg).c == (5, 5, 6)
    assert shift(alg, 2).c == (8, 8, 9)
    assert difference_class(shift(alg)) == difference_class(alg)


def test_classify():
    assert classify(validate_kupisch([3, 3, 3])).selfinjective
    assert not classify(validate_kupisch([3, 3, 3])).symmetric
    assert classify(validate_kupisch([4, 4, 4])).symmetric
    assert not classify(validate_kupisch([2, 2, 3])).selfinjective
    assert not is_selfinjective(validate_kupisch([2, 2, 1], 'linear'))


def test_f_and_g_maps():
    alg = validate_kupisch([2, 2, 3])
    assert [f_map(alg, x) for x in range(3)] == [2, 0, 2]
    assert [g_map(alg, x) for x in range(3)] == [1, 1, 0]

    line = validate_kupisch([3, 2, 1], 'linear')
    assert [f_map(line, x) for x in range(3)] == [None, None, None]
    assert g_map(line, 0) is None


@pytest.mark.parametrize("values, expected", [
    ((2, 2, 3), [1, 2]),
    ((3, 4, 4), [1, 2]),
    ((3, 3, 3), [0, 1, 2]),
    ((2, 3), [1]),
])
def test_proj_injective_vertices(values, expected):
    alg = validate_kupisch(values)
    assert proj_injective_vertices(alg) == expected
    assert num_proj_inj(alg) == len(expected)


def test_difference_class_uses_smallest_rotation():
    assert difference_class(validate_kupisch([2, 2, 3])).residues == (0, 2, 2)
    assert difference_class(validate_kupisch([3, 2, 2])).residues == (0, 2, 2)


def test_single_vertex_has_one_class():
    classes = list(enumerate_difference_classes(1))
    assert [alg.c for alg in classes] == [(2,)]


def test_two_vertices_have_three_classes():
    classes = [alg.c for alg in enumerate_difference_classes(2)]
    assert classes == [(2, 2), (2, 3), (3, 3)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_classes_stable_under_wider_window(n):
    args = Config()
    narrow = {difference_class(alg) for alg in enumerate_difference_classes(n)}
    wide = {difference_class(alg) for alg in
            enumerate_difference_classes(n, c_max=args.stability_factor * n)}
    assert narrow == wide


@pytest.mark.parametrize("n", [2, 3, 4])
def test_class_representatives_are_distinct_and_valid(n):
    classes = list(enumerate_difference_classes(n))
    keys = [difference_class(alg) for alg in classes]
    assert len(keys) == len(set(keys))
    for alg in classes:
        assert max(alg.c) - min(alg.c) <= n - 1
        assert validate_kupisch(alg.c).c == alg.c


def test_linear_series():
    series = sorted(alg.c for alg in enumerate_difference_classes(3, Shape.Linear))
    assert series == [(2, 2, 1), (3, 2, 1)]


def test_enumeration_cap():
    with pytest.raises(LimitExceeded) as info:
        list(enumerate_difference_classes(9))
    assert info.value.exit_code == 2


def _all_algebras(n):
    yield from enumerate_algebras(n, Shape.Cyclic, c_max=3 * n)
    yield from enumerate_algebras(n, Shape.Linear)


def test_enumerate_algebras():
    assert [alg.c for alg in enumerate_algebras(1)] == [(2,), (3,)]
    assert sorted(alg.c for alg in enumerate_algebras(2, c_max=3)) == [(2, 2), (2, 3), (3, 2), (3, 3)]
    assert list(enumerate_algebras(0)) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_left_lengths_permute_kupisch(n):
    for alg in _all_algebras(n):
        assert sorted(alg.d) == sorted(alg.c), alg


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_left_lengths_are_least_fixed_points(n):
    """d_x is the least k >= 1 with k >= c_{x-k}; on the line also when x-k runs off."""
    for alg in _all_algebras(n):
        for x, d_x in enumerate(alg.d):
            assert d_x - 1 < alg.c[alg.vertex(x - d_x + 1)], alg
            j = alg.vertex(x - d_x)
            assert j is None or d_x >= alg.c[j], alg


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_f_bijective_iff_selfinjective(n):
    for alg in _all_algebras(n):
        images = {f_map(alg, x) for x in range(n)}
        assert (images == set(range(n))) == is_selfinjective(alg), alg
