from enum import Enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

import networkx as nx

from nak_errors import (
    EmptySeries,
    NonPositiveLength,
    KupischConditionViolated,
    DisconnectedQuiver,
    LimitExceeded,
)


class Shape(Enum):
    Cyclic = 'cyclic'
    Linear = 'linear'


@dataclass(frozen=True)
class KupischSeries:
    values: tuple  # (c_0, ..., c_{n-1}), c_i = length of e_iA
    shape: Shape = Shape.Cyclic


@dataclass(frozen=True)
class NakayamaAlgebra:
    kupisch: KupischSeries
    left_lengths: tuple  # (d_0, ..., d_{n-1}), d_i = length of Ae_i = length of D(Ae_i)

    @property
    def c(self) -> tuple:
        return self.kupisch.values

    @property
    def d(self) -> tuple:
        return self.left_lengths

    @property
    def n(self) -> int:
        return len(self.kupisch.values)

    @property
    def shape(self) -> Shape:
        return self.kupisch.shape

    @property
    def is_cyclic(self) -> bool:
        return self.kupisch.shape is Shape.Cyclic

    def vertex(self, x: int) -> Optional[int]:
        """Reduce x to a vertex. On the line a vertex off 0..n-1 is None."""
        if self.is_cyclic:
            return x % self.n
        return x if 0 <= x < self.n else None

    def __str__(self):
        values = ','.join(str(c) for c in self.c)
        return f"({values})" if self.is_cyclic else f"L({values})"


class Classification(NamedTuple):
    selfinjective: bool
    symmetric: bool
    shape: Shape


@dataclass(frozen=True)
class DifferenceClass:
    n: int
    residues: tuple  # c_i mod n, lexicographically smallest rotation for cyclic series
    shape: Shape = Shape.Cyclic


'''construction'''


def parse_shape(shape) -> Shape:
    return shape if isinstance(shape, Shape) else Shape(str(shape).lower())


def compute_left_lengths(values: Sequence[int], shape: Shape) -> tuple:
    n = len(values)
    lengths = []
    for x in range(n):
        k = 1
        while True:
            if shape is Shape.Cyclic:
                if k >= values[(x - k) % n]:
                    break
            elif x - k < 0 or k >= values[x - k]:
                break
            k += 1
        lengths.append(k)
    return tuple(lengths)


def validate_kupisch(values: Sequence[int], shape=Shape.Cyclic) -> NakayamaAlgebra:
    shape = parse_shape(shape)
    values = tuple(int(c) for c in values)
    n = len(values)
    if n == 0:
        raise EmptySeries()
    for i, c in enumerate(values):
        if c < 1:
            raise NonPositiveLength(i, c)

    if shape is Shape.Linear:
        if values[-1] != 1:
            raise KupischConditionViolated(n - 1, "the last projective of a line is simple")
        for i, c in enumerate(values):
            if c > n - i:
                raise KupischConditionViolated(i, f"c_{i}={c} runs off the line")

    num_pairs = n if shape is Shape.Cyclic else n - 1
    for i in range(num_pairs):
        c_next = values[(i + 1) % n]
        if c_next < values[i] - 1:
            raise KupischConditionViolated(i, f"c_{(i + 1) % n}={c_next} < c_{i}-1={values[i] - 1}")

    kupisch = KupischSeries(values=values, shape=shape)
    alg = NakayamaAlgebra(kupisch=kupisch, left_lengths=compute_left_lengths(values, shape))

    graph = quiver(alg)
    if shape is Shape.Cyclic:
        if_connected = nx.is_strongly_connected(graph) and graph.number_of_edges() == n
    else:
        if_connected = nx.is_weakly_connected(graph)
    if not if_connected:
        raise DisconnectedQuiver(shape.value)
    return alg


def left_lengths(alg: NakayamaAlgebra) -> tuple:
    return alg.left_lengths


def quiver(alg: NakayamaAlgebra) -> nx.DiGraph:
    """Arrow i -> i+1 exists iff e_iA has length at least 2."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(alg.n))
    for i, c in enumerate(alg.c):
        j = alg.vertex(i + 1)
        if c >= 2 and j is not None:
            graph.add_edge(i, j)
    return graph


def shift(alg: NakayamaAlgebra, t: int = 1) -> NakayamaAlgebra:
    return validate_kupisch([c + t * alg.n for c in alg.c], alg.shape)


'''classification'''


def is_selfinjective(alg: NakayamaAlgebra) -> bool:
    return alg.is_cyclic and len(set(alg.c)) == 1


def classify(alg: NakayamaAlgebra) -> Classification:
    selfinjective = is_selfinjective(alg)
    symmetric = selfinjective and alg.c[0] % alg.n == 1 % alg.n
    return Classification(selfinjective=selfinjective, symmetric=symmetric, shape=alg.shape)


def f_map(alg: NakayamaAlgebra, x: int) -> Optional[int]:
    return alg.vertex(x + alg.c[x])


def g_map(alg: NakayamaAlgebra, x: int) -> Optional[int]:
    return alg.vertex(x - alg.d[x])


def proj_injective_vertices(alg: NakayamaAlgebra) -> list:
    """Vertices i whose projective e_iA is also injective."""
    vertices = []
    for i, c in enumerate(alg.c):
        socle = alg.vertex(i + c - 1)
        if alg.d[socle] == c:
            vertices.append(i)
    return vertices


def num_proj_inj(alg: NakayamaAlgebra) -> int:
    return len(proj_injective_vertices(alg))


'''difference classes'''


def difference_class(alg: NakayamaAlgebra) -> DifferenceClass:
    n = alg.n
    residues = tuple(c % n for c in alg.c)
    if alg.is_cyclic:
        residues = min(residues[i:] + residues[:i] for i in range(n))
    return DifferenceClass(n=n, residues=residues, shape=alg.shape)


def _cyclic_series(n: int, c_max: int) -> Iterator[tuple]:
    """All cyclic series with 2 <= c_i <= c_max. A valid series has max - min <= n - 1."""
    stack = [(c_0,) for c_0 in range(c_max, 1, -1)]
    while stack:
        values = stack.pop()
        if len(values) == n:
            if values[0] >= values[-1] - 1:
                yield values
            continue
        low = max(2, values[-1] - 1, max(values) - n + 1)
        high = min(c_max, min(values) + n - 1)
        for c in range(high, low - 1, -1):
            stack.append(values + (c,))


def _linear_series(n: int) -> Iterator[tuple]:
    stack = [(c_0,) for c_0 in range(n, 0, -1)]
    while stack:
        values = stack.pop()
        i = len(values)
        if i == n:
            if values[-1] == 1:
                yield values
            continue
        low = max(1, values[-1] - 1)
        high = n - i
        for c in range(high, low - 1, -1):
            stack.append(values + (c,))


def enumerate_algebras(n: int, shape=Shape.Cyclic, c_max: int = None) -> Iterator[NakayamaAlgebra]:
    """Every valid series with n simples. Cyclic series take 2 <= c_i <= c_max (default 2n+1)."""
    shape = parse_shape(shape)
    if n < 1:
        return
    if shape is Shape.Linear:
        for values in _linear_series(n):
            try:
                yield validate_kupisch(values, shape)
            except DisconnectedQuiver:
                continue
        return
    for values in _cyclic_series(n, c_max if c_max else 2 * n + 1):
        yield validate_kupisch(values, shape)


def enumerate_difference_classes(n: int, shape=Shape.Cyclic, window_factor: int = 2,
                                 n_cap: int = 8, c_max: int = None) -> Iterator[NakayamaAlgebra]:
    """One representative per difference class with n simples.

    Cyclic representatives minimise (sum, values) over 2 <= c_i <= window_factor * n + 1.
    Each linear series is its own class, so the linear stream lists every valid series.
    """
    shape = parse_shape(shape)
    if n > n_cap:
        raise LimitExceeded(n, n_cap)
    if n < 1:
        return

    if shape is Shape.Linear:
        yield from enumerate_algebras(n, shape)
        return

    best = {}
    for alg in enumerate_algebras(n, shape, c_max if c_max else window_factor * n + 1):
        key = difference_class(alg)
        values = alg.c
        if key not in best or (sum(values), values) < (sum(best[key].c), best[key].c):
            best[key] = alg
    for alg in sorted(best.values(), key=lambda a: (sum(a.c), a.c)):
        yield alg
