import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import networkx as nx

from nak_algebra import NakayamaAlgebra, validate_kupisch, is_selfinjective
from nak_errors import (
    DuplicateSpecialPoint,
    EmptySpecialSet,
    LoewyTooSmall,
    InvalidSpecialPoint,
    NotGendoSymmetric,
    WrongLoewyResidue,
    TooFewSimples,
    OrderingAmbiguous,
    StepLimitReached,
    NakayamaError,
)
from nak_homalg import MAX_STEPS, Indecomposable, hom_dim
from nak_invariants import INF, domdim_algebra, gorenstein_dimension, mueller_domdim


@dataclass(frozen=True)
class MoritaSpec:
    """Selfinjective base (base_n, loewy) and the special points x_i of
    M = A + sum_i e_{x_i}A/e_{x_i}J^{w-1}."""
    base_n: int
    loewy: int
    special_points: tuple

    @property
    def is_gendo_symmetric(self) -> bool:
        return self.loewy % self.base_n == 1 % self.base_n

    @property
    def is_w2(self) -> bool:
        return self.loewy % self.base_n == 2 % self.base_n

    def base_algebra(self) -> NakayamaAlgebra:
        return validate_kupisch([self.loewy] * self.base_n)

    def to_dict(self) -> dict:
        return {'base_n': self.base_n, 'loewy': self.loewy, 'special_points': list(self.special_points)}


def validate_morita(base_n: int, loewy: int, special_points: Sequence[int]) -> MoritaSpec:
    if base_n < 1:
        raise TooFewSimples(base_n, 1)
    if loewy < 2:
        raise LoewyTooSmall(loewy)
    special_points = [int(x) for x in special_points]
    if not special_points:
        raise EmptySpecialSet()
    seen = set()
    for x in special_points:
        if not 0 <= x < base_n:
            raise InvalidSpecialPoint(x, base_n)
        if x in seen:
            raise DuplicateSpecialPoint(x)
        seen.add(x)
    return MoritaSpec(base_n=base_n, loewy=loewy, special_points=tuple(sorted(seen)))


def _require_gendo(spec: MoritaSpec):
    if not spec.is_gendo_symmetric:
        raise NotGendoSymmetric(spec.base_n, spec.loewy)


'''distances between special points'''


def special_distances(spec: MoritaSpec) -> tuple:
    """u_i = min{b >= 1 | x_i + b is special}, measured on the directed base cycle."""
    n = spec.base_n
    graph = nx.DiGraph()
    graph.add_edges_from((v, (v + 1) % n) for v in range(n))
    distances = []
    for x in spec.special_points:
        lengths = nx.single_source_shortest_path_length(graph, x)
        others = [lengths[y] for y in spec.special_points if y != x]
        distances.append(min(others + [n]))
    return tuple(distances)


def domdim_equals_gorenstein(spec: MoritaSpec) -> bool:
    _require_gendo(spec)
    return len(set(special_distances(spec))) == 1


'''closed formulas'''


def domdim_morita_formula(spec: MoritaSpec) -> int:
    """inf{k >= 1 | x_j + w - 1 = x_i + ceil((k+1)/2) w - g_k (mod n)} + 1, g_k = 1 for even k."""
    n, w = spec.base_n, spec.loewy
    bound = 2 * n * w
    for k in range(1, bound + 1):
        g_k = 1 if k % 2 == 0 else 0
        shift = math.ceil((k + 1) / 2) * w - g_k
        for x_i in spec.special_points:
            for x_j in spec.special_points:
                if (x_j + w - 1 - x_i - shift) % n == 0:
                    return k + 1
    raise StepLimitReached('Morita infimum', bound)


def domdim_gendo_formula(spec: MoritaSpec) -> int:
    _require_gendo(spec)
    return 2 * min(special_distances(spec))


def gorenstein_gendo_formula(spec: MoritaSpec) -> int:
    _require_gendo(spec)
    return 2 * max(special_distances(spec))


def domdim_w2_formula(spec: MoritaSpec) -> int:
    if not spec.is_w2:
        raise WrongLoewyResidue(spec.base_n, spec.loewy)
    return min(special_distances(spec)) + 1


'''examples'''


def extremal_example(n: int):
    """Spec whose endomorphism algebra has n simples and dominant dimension 2n-2."""
    if n < 2:
        raise TooFewSimples(n, 2)
    base_n = n - 1
    loewy = 2 if base_n == 1 else n
    return validate_morita(base_n, loewy, [0]), 2 * n - 2


def family_example(target: int) -> MoritaSpec:
    """w = 2 over n = target - 1 simples with one special point: dominant dimension `target`."""
    if target < 2:
        raise TooFewSimples(target, 2)
    return validate_morita(target - 1, 2, [0])


'''endomorphism algebra'''


def morita_summands(spec: MoritaSpec, if_before: bool = True) -> list:
    """Summands of M listed in the cyclic order of the projectives Hom_A(M, -) of End_A(M)."""
    summands = []
    for v in range(spec.base_n):
        projective = Indecomposable(v, spec.loewy)
        if v in spec.special_points:
            truncated = Indecomposable(v, spec.loewy - 1)
            summands.extend([truncated, projective] if if_before else [projective, truncated])
        else:
            summands.append(projective)
    return summands


def endomorphism_lengths(spec: MoritaSpec, if_before: bool = True) -> list:
    """Length of Hom_A(M, Y) for each summand Y, i.e. sum over summands Z of dim Hom(Z, Y)."""
    base = spec.base_algebra()
    summands = morita_summands(spec, if_before)
    return [sum(hom_dim(base, z, y) for z in summands) for y in summands]


@lru_cache(maxsize=None)
def endomorphism_kupisch(spec: MoritaSpec, max_steps: int = MAX_STEPS) -> NakayamaAlgebra:
    base = spec.base_algebra()
    mueller = mueller_domdim(base, morita_summands(spec), max_steps)
    gorenstein = gorenstein_gendo_formula(spec) if spec.is_gendo_symmetric else None

    tried = []
    for if_before in (True, False):
        lengths = endomorphism_lengths(spec, if_before)
        tried.append(lengths)
        try:
            alg = validate_kupisch(lengths)
        except NakayamaError:
            continue
        if is_selfinjective(alg) or domdim_algebra(alg, max_steps) != mueller:
            continue
        if gorenstein is not None and gorenstein_dimension(alg, max_steps) != gorenstein:
            continue
        return alg
    raise OrderingAmbiguous(tried)


def w_resolution_dim(spec: MoritaSpec, max_steps: int = MAX_STEPS) -> int:
    """2d + max W-resdim of e_{x_j+d}J^{w-1}, d the minimal special distance.

    W = A + sum_i e_{x_i}J^{w-1}. A state (a, k) stands for e_aJ^k; its minimal right
    add(W)-approximation has kernel (a+k, w-k), or (a+k, w-k-1) when a is special.
    """
    _require_gendo(spec)
    n, w = spec.base_n, spec.loewy
    special = set(spec.special_points)
    d = min(special_distances(spec))

    def in_add_w(a: int, k: int) -> bool:
        return k == 0 or (k == w - 1 and a in special)

    resdims = []
    for x_j in spec.special_points:
        a, k = (x_j + d) % n, w - 1
        steps = 0
        while not in_add_w(a, k):
            if steps >= max_steps:
                raise StepLimitReached(f"W-resolution of ({a},{k})", max_steps)
            a, k = ((a + k) % n, w - k - 1) if a in special else ((a + k) % n, w - k)
            steps += 1
        resdims.append(steps)
    return 2 * d + max(resdims)


def gendo_summary(spec: MoritaSpec, max_steps: int = MAX_STEPS) -> dict:
    """Formula values next to the values computed directly on End_A(M)."""
    base = spec.base_algebra()
    alg = endomorphism_kupisch(spec, max_steps)
    domdim_formula = domdim_morita_formula(spec)
    domdim_mueller = mueller_domdim(base, morita_summands(spec), max_steps)
    domdim_direct = domdim_algebra(alg, max_steps)
    gorenstein_direct = gorenstein_dimension(alg, max_steps)

    domdims = [domdim_formula, domdim_mueller, domdim_direct]
    gorensteins = []
    summary = {'spec': spec.to_dict()}
    if spec.is_gendo_symmetric:
        summary['domdim_gendo'] = domdim_gendo_formula(spec)
        summary['w_resolution_dim'] = w_resolution_dim(spec, max_steps)
        summary['gorenstein_formula'] = gorenstein_gendo_formula(spec)
        domdims.append(summary['domdim_gendo'])
        gorensteins = [summary['gorenstein_formula'], summary['w_resolution_dim'], gorenstein_direct]
    if spec.is_w2:
        summary['domdim_w2'] = domdim_w2_formula(spec)
        domdims.append(summary['domdim_w2'])

    summary.update({
        'domdim_formula': domdim_formula,
        'domdim_mueller': 'inf' if domdim_mueller == INF else int(domdim_mueller),
        'domdim_direct': 'inf' if domdim_direct == INF else int(domdim_direct),
        'gorenstein_direct': 'inf' if gorenstein_direct == INF else int(gorenstein_direct),
        'endomorphism_kupisch': list(alg.c),
        'agree': len(set(domdims)) == 1 and len(set(gorensteins)) <= 1,
    })
    return summary
