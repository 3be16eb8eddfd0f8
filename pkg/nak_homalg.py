from enum import Enum
from functools import lru_cache
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from nak_algebra import NakayamaAlgebra, is_selfinjective
from nak_errors import InvalidModule, ZeroModuleError, NotSelfinjective, StepLimitReached

MAX_STEPS = 4096


class Indecomposable(NamedTuple):
    """M = e_iA/e_iJ^k in quotient coordinates (vertex i, length k)."""
    vertex: int
    length: int


class SyzygyState(NamedTuple):
    """(x,y) = e_xJ^y"""
    x: int
    y: int


class CosyzygyState(NamedTuple):
    """[x,y] = D(J^y e_x)"""
    x: int
    y: int


class _Zero:
    def __repr__(self):
        return 'ZERO'

    def __reduce__(self):
        return 'ZERO'


ZERO = _Zero()

State = Union[SyzygyState, CosyzygyState, _Zero]


class Direction(Enum):
    Projective = 'proj'
    Injective = 'inj'


class Termination(NamedTuple):
    kind: str  # 'finite' or 'periodic'
    length: int = 0  # number of terms of a finite trace
    preperiod: int = 0
    period: int = 0


'''modules'''


def check_module(alg: NakayamaAlgebra, module: Indecomposable) -> Indecomposable:
    i, k = module
    if not 0 <= i < alg.n:
        raise InvalidModule(i, k, f"vertex outside 0..{alg.n - 1}")
    if not 1 <= k <= alg.c[i]:
        raise InvalidModule(i, k, f"length outside 1..c_{i}={alg.c[i]}")
    return Indecomposable(i, k)


def socle(alg: NakayamaAlgebra, module: Indecomposable) -> int:
    return alg.vertex(module.vertex + module.length - 1)


def is_projective(alg: NakayamaAlgebra, module: Indecomposable) -> bool:
    return module.length == alg.c[module.vertex]


def is_injective(alg: NakayamaAlgebra, module: Indecomposable) -> bool:
    """The uniserial modules with socle S_q are the submodules of D(Ae_q)."""
    return alg.d[socle(alg, module)] == module.length


def projective_module(alg: NakayamaAlgebra, p: int) -> Indecomposable:
    return Indecomposable(p, alg.c[p])


def injective_as_quotient(alg: NakayamaAlgebra, q: int) -> Indecomposable:
    """D(Ae_q): socle S_q, length d_q."""
    d_q = alg.d[q]
    return Indecomposable(alg.vertex(q - d_q + 1), d_q)


def simple_module(alg: NakayamaAlgebra, v: int) -> Indecomposable:
    return Indecomposable(v, 1)


def all_indecomposables(alg: NakayamaAlgebra) -> list:
    return [Indecomposable(i, k) for i in range(alg.n) for k in range(1, alg.c[i] + 1)]


'''state machines'''


def syzygy(alg: NakayamaAlgebra, state: State) -> State:
    """Omega(e_xJ^y) = e_{x+y}J^{c_x-y}"""
    if state is ZERO:
        raise ZeroModuleError('syzygy input')
    x, y = state
    x_next = alg.vertex(x + y)
    y_next = alg.c[x] - y
    if y_next == alg.c[x_next]:
        return ZERO
    return SyzygyState(x_next, y_next)


def cosyzygy(alg: NakayamaAlgebra, state: State) -> State:
    """Omega^{-1}(D(J^y e_x)) = D(J^{d_x-y} e_{x-y})"""
    if state is ZERO:
        raise ZeroModuleError('cosyzygy input')
    x, y = state
    x_next = alg.vertex(x - y)
    y_next = alg.d[x] - y
    if y_next == alg.d[x_next]:
        return ZERO
    return CosyzygyState(x_next, y_next)


def first_syzygy(alg: NakayamaAlgebra, module: Indecomposable) -> State:
    i, k = module
    return ZERO if k == alg.c[i] else SyzygyState(i, k)


def first_cosyzygy(alg: NakayamaAlgebra, module: Indecomposable) -> State:
    q = socle(alg, module)
    return ZERO if module.length == alg.d[q] else CosyzygyState(q, module.length)


def syzygy_module(alg: NakayamaAlgebra, state: State) -> Optional[Indecomposable]:
    if state is ZERO:
        return None
    x, y = state
    return Indecomposable(alg.vertex(x + y), alg.c[x] - y)


def cosyzygy_module(alg: NakayamaAlgebra, state: State) -> Optional[Indecomposable]:
    if state is ZERO:
        return None
    x, y = state
    return Indecomposable(alg.vertex(x - alg.d[x] + 1), alg.d[x] - y)


def cover_vertex(alg: NakayamaAlgebra, state: State) -> Optional[int]:
    """Top of e_xJ^y, the vertex of its projective cover."""
    return None if state is ZERO else alg.vertex(state.x + state.y)


def hull_vertex(alg: NakayamaAlgebra, state: State) -> Optional[int]:
    """Socle of D(J^y e_x), the vertex of its injective envelope."""
    return None if state is ZERO else alg.vertex(state.x - state.y)


'''resolutions'''


@dataclass(frozen=True)
class ResolutionTrace:
    direction: Direction
    module: Indecomposable
    terms: tuple  # p_t (projective) or q_t (injective), one per recorded term
    states: tuple  # Omega^t(M) (or Omega^{-t}(M)) for t = 1..len(states)
    termination: Termination

    @property
    def is_finite(self) -> bool:
        return self.termination.kind == 'finite'

    @property
    def horizon(self) -> int:
        """Degrees 1..horizon cover every distinct state of the trace."""
        return len(self.states)

    def state_at(self, t: int) -> State:
        if t < 1:
            raise ValueError(f"| Trace: state index {t} < 1")
        if t <= len(self.states):
            return self.states[t - 1]
        if self.is_finite:
            return ZERO
        preperiod, period = self.termination.preperiod, self.termination.period
        return self.states[preperiod + (t - 1 - preperiod) % period]

    def term_at(self, t: int, alg: NakayamaAlgebra) -> Optional[int]:
        if t == 0:
            return self.terms[0]
        state = self.state_at(t)
        if self.direction is Direction.Projective:
            return cover_vertex(alg, state)
        return hull_vertex(alg, state)


def _walk(alg: NakayamaAlgebra, module: Indecomposable, direction: Direction, max_steps: int) -> ResolutionTrace:
    if direction is Direction.Projective:
        step, state, term_0, vertex_of = syzygy, first_syzygy(alg, module), module.vertex, cover_vertex
    else:
        step, state, term_0, vertex_of = cosyzygy, first_cosyzygy(alg, module), socle(alg, module), hull_vertex

    terms = [term_0]
    states = []
    seen = {}
    while state is not ZERO:
        if state in seen:
            preperiod = seen[state]
            termination = Termination('periodic', preperiod=preperiod, period=len(states) - preperiod)
            return ResolutionTrace(direction, module, tuple(terms), tuple(states), termination)
        if len(states) >= max_steps:
            raise StepLimitReached(f"{direction.name.lower()} resolution of {tuple(module)} over {alg}", max_steps)
        seen[state] = len(states)
        states.append(state)
        terms.append(vertex_of(alg, state))
        state = step(alg, state)

    termination = Termination('finite', length=len(terms))
    return ResolutionTrace(direction, module, tuple(terms), tuple(states), termination)


@lru_cache(maxsize=None)
def projective_resolution(alg: NakayamaAlgebra, module: Indecomposable, max_steps: int = MAX_STEPS) -> ResolutionTrace:
    return _walk(alg, check_module(alg, module), Direction.Projective, max_steps)


@lru_cache(maxsize=None)
def injective_coresolution(alg: NakayamaAlgebra, module: Indecomposable, max_steps: int = MAX_STEPS) -> ResolutionTrace:
    return _walk(alg, check_module(alg, module), Direction.Injective, max_steps)


def resolve(alg: NakayamaAlgebra, module: Indecomposable, direction: Direction, max_steps: int = MAX_STEPS):
    if direction is Direction.Projective:
        return projective_resolution(alg, Indecomposable(*module), max_steps)
    return injective_coresolution(alg, Indecomposable(*module), max_steps)


def trace_to_dict(trace: ResolutionTrace) -> dict:
    termination = trace.termination
    if trace.is_finite:
        termination_dict = {'kind': 'finite', 'length': termination.length}
    else:
        termination_dict = {'kind': 'periodic', 'preperiod': termination.preperiod, 'period': termination.period}
    return {
        'direction': trace.direction.value,
        'module': list(trace.module),
        'terms': list(trace.terms),
        'states': [list(state) for state in trace.states],
        'termination': termination_dict,
    }


'''Hom and Ext'''


def _degrees(alg: NakayamaAlgebra, residue: int, length: int) -> range:
    """Positions t' in [0, length) with t' = residue (mod n on the cycle, exactly on the line)."""
    if alg.is_cyclic:
        return range(residue % alg.n, length, alg.n)
    return range(residue, residue + 1) if 0 <= residue < length else range(0)


def hom_dim(alg: NakayamaAlgebra, source: Indecomposable, target: Indecomposable) -> int:
    """Images of maps M -> N are the common quotients of M and submodules of N."""
    i, k = source
    j, l = target
    return sum(1 for t in _degrees(alg, j + l - i - 1, min(k, l)))


def ext_dim(alg: NakayamaAlgebra, source: Indecomposable, target: Indecomposable, r: int,
            max_steps: int = MAX_STEPS) -> int:
    """dim Ext^r(M,N) from the degree sets of Hom(P_{r-1},N) -> Hom(P_r,N) -> Hom(P_{r+1},N)."""
    if r < 1:
        raise ValueError(f"| Ext: degree {r} < 1")
    trace = projective_resolution(alg, Indecomposable(*source), max_steps)
    state = trace.state_at(r)
    if state is ZERO:
        return 0
    x, y = state
    j, l = target

    degrees_prev = _degrees(alg, x - j, l)
    rank_in = sum(1 for t in degrees_prev if t + y < l)

    degrees_r = _degrees(alg, x + y - j, l)
    if trace.state_at(r + 1) is ZERO:
        rank_out = 0
    else:
        rank_out = sum(1 for t in degrees_r if t + alg.c[x] - y < l)
    return len(degrees_r) - rank_in - rank_out


def ext_nonzero_simple(alg: NakayamaAlgebra, direction: Direction, simple: int, module: Indecomposable, l: int,
                       max_steps: int = MAX_STEPS) -> bool:
    """Projective: Ext^l(N,S) != 0 iff S is the top of P_l(N).
    Injective: Ext^l(S,N) != 0 iff S is the socle of I_l(N)."""
    trace = resolve(alg, module, direction, max_steps)
    return trace.term_at(l, alg) == simple


def ext_self_selfinjective(alg: NakayamaAlgebra, s: int, degree: int) -> bool:
    """Ext^degree(e_0J^s, e_0J^s) != 0 over a selfinjective algebra of Loewy length k.

    Odd degree 2i-1: some path length m in [max(s, k-s), k-1] with m = ik (mod n).
    Even degree 2i: some path length m in [s, min(2s, k)-1] with m = ik+s (mod n).
    """
    if not is_selfinjective(alg):
        raise NotSelfinjective()
    n, k = alg.n, alg.c[0]
    if not 1 <= s <= k - 1:
        raise InvalidModule(s, k - s, f"e_0J^{s} is projective or zero")
    if degree < 1:
        raise ValueError(f"| Ext: degree {degree} < 1")

    i = (degree + 1) // 2
    if degree % 2 == 1:
        low, high, residue = max(s, k - s), k - 1, i * k
    else:
        low, high, residue = s, min(2 * s, k) - 1, i * k + s
    return any((m - residue) % n == 0 for m in range(low, high + 1))
