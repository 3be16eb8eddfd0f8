from dataclasses import dataclass, field, asdict

import numpy as np

from nak_algebra import NakayamaAlgebra, is_selfinjective, proj_injective_vertices
from nak_errors import NotCoGen
from nak_homalg import (
    MAX_STEPS,
    Indecomposable,
    ZERO,
    all_indecomposables,
    ext_dim,
    injective_as_quotient,
    injective_coresolution,
    is_injective,
    is_projective,
    projective_module,
    projective_resolution,
    simple_module,
)

INF = np.inf  # ExtendedNat: a non-negative int or INF


def to_json_value(value):
    return "inf" if value == INF else int(value)


'''dominant dimensions'''


def has_projective_hull(alg: NakayamaAlgebra, q: int) -> bool:
    """D(Ae_q) is projective, i.e. D(Ae_q) = e_pA for its top p."""
    top, length = injective_as_quotient(alg, q)
    return alg.c[top] == length


def _leading_count(terms, predicate):
    for t, vertex in enumerate(terms):
        if not predicate(vertex):
            return t
    return INF


def domdim_module(alg: NakayamaAlgebra, module, max_steps: int = MAX_STEPS):
    trace = injective_coresolution(alg, Indecomposable(*module), max_steps)
    return _leading_count(trace.terms, lambda q: has_projective_hull(alg, q))


def domdim_algebra(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS):
    return min(domdim_module(alg, projective_module(alg, i), max_steps) for i in range(alg.n))


def codomdim_module(alg: NakayamaAlgebra, module, max_steps: int = MAX_STEPS):
    trace = projective_resolution(alg, Indecomposable(*module), max_steps)
    proj_inj = set(proj_injective_vertices(alg))
    return _leading_count(trace.terms, lambda p: p in proj_inj)


def codomdim_algebra(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS):
    return min(codomdim_module(alg, injective_as_quotient(alg, q), max_steps) for q in range(alg.n))


'''homological dimensions'''


def injective_dimension(alg: NakayamaAlgebra, module, max_steps: int = MAX_STEPS):
    trace = injective_coresolution(alg, Indecomposable(*module), max_steps)
    return len(trace.terms) - 1 if trace.is_finite else INF


def projective_dimension(alg: NakayamaAlgebra, module, max_steps: int = MAX_STEPS):
    trace = projective_resolution(alg, Indecomposable(*module), max_steps)
    return len(trace.terms) - 1 if trace.is_finite else INF


def gorenstein_dimension(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS):
    return max(injective_dimension(alg, projective_module(alg, i), max_steps) for i in range(alg.n))


def global_dimension(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS):
    return max(projective_dimension(alg, simple_module(alg, v), max_steps) for v in range(alg.n))


def finite_domdims(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS) -> list:
    values = (domdim_module(alg, module, max_steps) for module in all_indecomposables(alg))
    return [value for value in values if value != INF]


def fdomdim(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS):
    """Supremum of the finite dominant dimensions. 0 when no module has one (see fdomdim_degenerate)."""
    values = finite_domdims(alg, max_steps)
    return max(values) if values else 0


def fdomdim_degenerate(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS) -> bool:
    return not finite_domdims(alg, max_steps)


'''Ext vanishing'''


def first_ext_degree(alg: NakayamaAlgebra, source, target, max_steps: int = MAX_STEPS):
    """First r >= 1 with Ext^r(M,N) != 0. The syzygy states of M repeat after the trace horizon."""
    source = Indecomposable(*source)
    target = Indecomposable(*target)
    if is_projective(alg, source) or is_injective(alg, target):
        return INF
    horizon = projective_resolution(alg, source, max_steps).horizon
    for r in range(1, horizon + 1):
        if ext_dim(alg, source, target, r, max_steps) > 0:
            return r
    return INF


def phi(alg: NakayamaAlgebra, summands, max_steps: int = MAX_STEPS):
    """First r >= 1 with Ext^r(M,M) != 0 for M the direct sum of the summands."""
    summands = sorted({Indecomposable(*module) for module in summands})
    value = INF
    for source in summands:
        for target in summands:
            value = min(value, first_ext_degree(alg, source, target, max_steps))
    return value


def delta_horizon(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS) -> int:
    if is_selfinjective(alg):
        modules = [Indecomposable(s % alg.n, alg.c[0] - s) for s in range(1, alg.c[0])]
    else:
        modules = [injective_as_quotient(alg, q) for q in range(alg.n)]
    return max([projective_resolution(alg, module, max_steps).horizon for module in modules] + [0])


def delta(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS):
    if is_selfinjective(alg):
        values = [phi(alg, [Indecomposable(s % alg.n, alg.c[0] - s)], max_steps) for s in range(1, alg.c[0])]
        return max(values) if values else INF

    value = INF
    for q in range(alg.n):
        injective = injective_as_quotient(alg, q)
        for j in range(alg.n):
            value = min(value, first_ext_degree(alg, injective, projective_module(alg, j), max_steps))
    return value


def cogen_missing(alg: NakayamaAlgebra, summands) -> list:
    summands = {Indecomposable(*module) for module in summands}
    required = [projective_module(alg, i) for i in range(alg.n)]
    required += [injective_as_quotient(alg, q) for q in range(alg.n)]
    return sorted({module for module in required if module not in summands})


def mueller_domdim(alg: NakayamaAlgebra, summands, max_steps: int = MAX_STEPS):
    """domdim End_A(M) = phi_M + 1 for a generator-cogenerator M."""
    missing = cogen_missing(alg, summands)
    if missing:
        raise NotCoGen([tuple(module) for module in missing])
    return phi(alg, summands, max_steps) + 1


def is_gorenstein_projective(alg: NakayamaAlgebra, module, max_steps: int = MAX_STEPS) -> bool:
    module = Indecomposable(*module)
    trace = projective_resolution(alg, module, max_steps)
    for r in range(1, trace.horizon + 1):
        if trace.state_at(r) is ZERO:
            break
        for j in range(alg.n):
            if ext_dim(alg, module, projective_module(alg, j), r, max_steps) > 0:
                return False
    return True


'''report'''


@dataclass
class InvariantReport:
    kupisch: tuple
    shape: str
    selfinjective: bool
    domdim: object
    codomdim: object
    gorenstein: object
    fdomdim: object
    fdomdim_degenerate: bool
    delta: object
    delta_horizon: int
    num_proj_inj: int
    per_projective: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        report = asdict(self)
        for key in ('domdim', 'codomdim', 'gorenstein', 'fdomdim', 'delta'):
            report[key] = to_json_value(report[key])
        report['kupisch'] = list(self.kupisch)
        report['per_projective'] = {
            str(vertex): {key: to_json_value(value) for key, value in values.items()}
            for vertex, values in self.per_projective.items()
        }
        return report


def invariant_report(alg: NakayamaAlgebra, max_steps: int = MAX_STEPS) -> InvariantReport:
    per_projective = {}
    for i in range(alg.n):
        module = projective_module(alg, i)
        per_projective[i] = {
            'domdim': domdim_module(alg, module, max_steps),
            'injdim': injective_dimension(alg, module, max_steps),
        }
    return InvariantReport(
        kupisch=alg.c,
        shape=alg.shape.value,
        selfinjective=is_selfinjective(alg),
        domdim=min(values['domdim'] for values in per_projective.values()),
        codomdim=codomdim_algebra(alg, max_steps),
        gorenstein=max(values['injdim'] for values in per_projective.values()),
        fdomdim=fdomdim(alg, max_steps),
        fdomdim_degenerate=fdomdim_degenerate(alg, max_steps),
        delta=delta(alg, max_steps),
        delta_horizon=delta_horizon(alg, max_steps),
        num_proj_inj=len(proj_injective_vertices(alg)),
        per_projective=per_projective,
    )
