import pytest

from nak_errors import NotCoGen
from nak_algebra import Shape, validate_kupisch, is_selfinjective, enumerate_difference_classes
from nak_homalg import (
    Direction,
    Indecomposable,
    all_indecomposables,
    injective_as_quotient,
    is_injective,
    is_projective,
    projective_module,
    projective_resolution,
    injective_coresolution,
    simple_module,
    hom_dim,
    ext_dim,
    ext_nonzero_simple,
)
from nak_invariants import (
    INF,
    to_json_value,
    has_projective_hull,
    domdim_module,
    domdim_algebra,
    codomdim_module,
    codomdim_algebra,
    injective_dimension,
    gorenstein_dimension,
    global_dimension,
    fdomdim,
    fdomdim_degenerate,
    first_ext_degree,
    phi,
    delta,
    mueller_domdim,
    is_gorenstein_projective,
    invariant_report,
)


def _non_selfinjective(n_max):
    for n in range(2, n_max + 1):
        for alg in enumerate_difference_classes(n):
            if not is_selfinjective(alg):
                yield alg


@pytest.mark.parametrize("values, domdim, gorenstein", [
    ((2, 2, 3), 3, 3),
    ((5, 5, 6), 3, INF),
    ((4, 5, 5), 2, 2),
    ((3, 4, 4), 4, 4),
    ((2, 3), 2, 2),
    ((3, 3, 3), INF, 0),
])
def test_domdim_and_gorenstein(values, domdim, gorenstein):
    alg = validate_kupisch(values)
    assert domdim_algebra(alg) == domdim
    assert gorenstein_dimension(alg) == gorenstein


def test_domdim_of_modules():
    alg = validate_kupisch([4, 5, 5])
    assert domdim_module(alg, Indecomposable(0, 3)) == 4
    assert domdim_module(alg, Indecomposable(0, 1)) == 2
    assert domdim_module(alg, Indecomposable(0, 4)) == 2
    assert domdim_module(alg, Indecomposable(1, 3)) == 2
    assert domdim_module(alg, Indecomposable(1, 2)) == 3
    assert domdim_module(alg, Indecomposable(1, 5)) == INF
    alg = validate_kupisch([2, 2, 3])
    assert domdim_module(alg, Indecomposable(0, 1)) == 0
    assert domdim_module(alg, Indecomposable(1, 1)) == 1
    assert domdim_module(alg, Indecomposable(2, 1)) == 2
    assert domdim_module(alg, Indecomposable(1, 2)) == INF


def test_codomdim_of_modules():
    alg = validate_kupisch([2, 2, 3])
    assert codomdim_module(alg, Indecomposable(2, 2)) == 3
    assert codomdim_module(alg, Indecomposable(1, 2)) == INF
    assert codomdim_algebra(alg) == 3


def test_injective_dimension():
    alg = validate_kupisch([2, 2, 3])
    assert injective_dimension(alg, Indecomposable(0, 2)) == 3
    assert injective_dimension(alg, Indecomposable(1, 2)) == 0
    assert injective_dimension(validate_kupisch([5, 5, 6]), Indecomposable(0, 5)) == INF


def test_global_dimension_of_lines():
    assert global_dimension(validate_kupisch([3, 2, 1], 'linear')) == 1
    assert global_dimension(validate_kupisch([2, 2, 1], 'linear')) == 2
    assert global_dimension(validate_kupisch([3, 3])) == INF


@pytest.mark.parametrize("values, expected, degenerate", [
    ((2, 2, 3), 3, False),
    ((3, 4, 4), 4, False),
    ((4, 5, 5), 4, False),
    ((7, 8, 8), 4, False),
    ((3, 3), 0, True),
    ((4, 4, 4), 0, True),
])
def test_fdomdim(values, expected, degenerate):
    alg = validate_kupisch(values)
    assert fdomdim(alg) == expected
    assert fdomdim_degenerate(alg) == degenerate


@pytest.mark.parametrize("alg", list(_non_selfinjective(3)), ids=str)
def test_codomdim_of_dual_equals_domdim(alg):
    assert codomdim_algebra(alg) == domdim_algebra(alg)


def test_first_ext_degree():
    alg = validate_kupisch([2, 2, 3])
    assert first_ext_degree(alg, Indecomposable(2, 2), Indecomposable(0, 2)) == 1
    assert first_ext_degree(alg, Indecomposable(0, 2), Indecomposable(2, 2)) == INF
    assert first_ext_degree(alg, Indecomposable(2, 2), Indecomposable(1, 2)) == INF


def test_delta():
    assert delta(validate_kupisch([2, 2, 3])) == 1
    assert delta(validate_kupisch([4, 4, 4])) == 5


def test_phi_of_selfinjective_summands():
    alg = validate_kupisch([4, 4, 4])
    assert phi(alg, [Indecomposable(2, 2)]) == 2
    assert phi(alg, [Indecomposable(1, 3)]) == 5
    assert phi(alg, [Indecomposable(0, 1)]) == 5


def test_mueller_domdim():
    alg = validate_kupisch([3, 3])
    summands = [projective_module(alg, i) for i in range(2)] + [Indecomposable(0, 2)]
    assert mueller_domdim(alg, summands) == 4

    alg = validate_kupisch([2, 2, 3])
    summands = [projective_module(alg, i) for i in range(3)] + [injective_as_quotient(alg, q) for q in range(3)]
    assert mueller_domdim(alg, summands) == 2


def test_mueller_needs_generator_cogenerator():
    alg = validate_kupisch([2, 2, 3])
    with pytest.raises(NotCoGen) as info:
        mueller_domdim(alg, [projective_module(alg, i) for i in range(3)])
    assert info.value.missing == [(2, 2)]


def _all_classes(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_difference_classes(n)
        yield from enumerate_difference_classes(n, Shape.Linear)


def _ext_from_simple(alg, q, module, degree):
    if degree == 0:
        return hom_dim(alg, simple_module(alg, q), module) > 0
    return ext_dim(alg, simple_module(alg, q), module, degree) > 0


@pytest.mark.parametrize("alg", list(_all_classes(4)), ids=str)
def test_domdim_is_first_ext_from_simples_with_non_projective_envelope(alg):
    simples = [q for q in range(alg.n) if not has_projective_hull(alg, q)]
    for module in all_indecomposables(alg):
        horizon = injective_coresolution(alg, module).horizon
        degrees = [l for l in range(horizon + 1) if any(_ext_from_simple(alg, q, module, l) for q in simples)]
        assert domdim_module(alg, module) == (degrees[0] if degrees else INF), module


@pytest.mark.parametrize("alg", list(_all_classes(4)), ids=str)
def test_mueller_domdim_of_regular_plus_dual(alg):
    summands = [projective_module(alg, i) for i in range(alg.n)]
    summands += [injective_as_quotient(alg, q) for q in range(alg.n)]
    assert mueller_domdim(alg, summands) >= 2


def test_gorenstein_projective():
    alg = validate_kupisch([2, 2, 3])
    assert not is_gorenstein_projective(alg, Indecomposable(2, 2))
    assert is_gorenstein_projective(alg, Indecomposable(0, 2))
    alg = validate_kupisch([3, 3])
    assert all(is_gorenstein_projective(alg, module) for module in all_indecomposables(alg))


@pytest.mark.parametrize("alg", list(_non_selfinjective(4)), ids=str)
def test_injective_gorenstein_projectives_are_projective(alg):
    for module in all_indecomposables(alg):
        if is_injective(alg, module) and is_gorenstein_projective(alg, module):
            assert is_projective(alg, module)


@pytest.mark.parametrize("alg", list(_non_selfinjective(4)), ids=str)
def test_delta_below_finite_gorenstein_dimension(alg):
    gorenstein = gorenstein_dimension(alg)
    if gorenstein != INF:
        assert delta(alg) <= gorenstein


@pytest.mark.parametrize("alg", list(_non_selfinjective(4)), ids=str)
def test_first_nonvanishing_ext_into_simples(alg):
    """A nonvanishing Ext^l(N,S), l >= 1, already appears for some l <= 2n-2."""
    for module in all_indecomposables(alg):
        horizon = projective_resolution(alg, module).horizon
        for simple in range(alg.n):
            degrees = [l for l in range(1, horizon + 1)
                       if ext_nonzero_simple(alg, Direction.Projective, simple, module, l)]
            if degrees:
                assert degrees[0] <= 2 * alg.n - 2


def test_invariant_report():
    report = invariant_report(validate_kupisch([2, 2, 3]))
    assert report.domdim == 3
    assert report.codomdim == 3
    assert report.num_proj_inj == 2
    assert report.per_projective[0] == {'domdim': 3, 'injdim': 3}

    result = invariant_report(validate_kupisch([5, 5, 6])).to_dict()
    assert result['gorenstein'] == "inf"
    assert result['kupisch'] == [5, 5, 6]
    assert result['per_projective']['0']['injdim'] == "inf"


def test_to_json_value():
    assert to_json_value(INF) == "inf"
    assert to_json_value(3) == 3
