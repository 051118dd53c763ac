"""
Distance matrices and Vietoris-Rips complexes.

A set of points is a face of the Vietoris-Rips complex at scale ``eps``
when every pair in it is at distance ``<= eps``.  The complex is built by
expansion from the ``eps``-graph: a ``k``-face is extended by a larger
vertex adjacent to all of its vertices.  No triangle inequality is assumed.
"""

from __future__ import annotations

import csv
import random
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .complex import SimplicialComplex
from .errors import InvalidInputError, ParseError
from .random_models import make_rng


class DistanceMatrix:
    """Pairwise distances on points 1..n, stored for pairs i < j."""

    __slots__ = ("n", "_d")

    def __init__(self, n: int, distances: dict[tuple[int, int], float]):
        if n < 1:
            raise InvalidInputError(f"a distance matrix needs at least one point, got n = {n}")
        expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        if set(distances) != expected:
            raise InvalidInputError("distances must be given for exactly the pairs i < j in [n]")
        for pair, value in distances.items():
            if not value >= 0:
                raise InvalidInputError(f"distance {value!r} for pair {pair} is not a nonnegative number")
        self.n = n
        self._d = {pair: float(v) for pair, v in distances.items()}

    def __getitem__(self, pair: tuple[int, int]) -> float:
        i, j = pair
        if i == j:
            return 0.0
        return self._d[(i, j) if i < j else (j, i)]

    def pairs(self) -> dict[tuple[int, int], float]:
        return dict(self._d)

    def values(self) -> list[float]:
        """Distinct off-diagonal distances, ascending."""
        return sorted(set(self._d.values()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.n == other.n and self._d == other._d

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"

    @classmethod
    def from_upper(cls, rows: Sequence[Sequence[float]], n: int | None = None) -> DistanceMatrix:
        """Strict upper triangle: ``rows[i - 1]`` lists d(i, i+1), ..., d(i, n)."""
        rows = [list(r) for r in rows]
        if n is None:
            n = len(rows) + 1
        if len(rows) != n - 1:
            raise InvalidInputError(f"expected {n - 1} upper-triangle rows, got {len(rows)}")
        d = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != n - i:
                raise InvalidInputError(f"upper-triangle row {i} has {len(row)} entries, expected {n - i}")
            for j, value in enumerate(row, start=i + 1):
                d[(i, j)] = value
        return cls(n, d)

    @classmethod
    def from_square(cls, rows: Sequence[Sequence[float]], tol: float = 0.0) -> DistanceMatrix:
        """Full symmetric matrix with zero diagonal.

        ``tol`` bounds the accepted asymmetry; the upper triangle is kept.
        Text input should use ``tol = 0``.
        """
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidInputError("a full distance matrix must be square")
        d = {}
        for i in range(n):
            if abs(rows[i][i]) > tol:
                raise InvalidInputError(f"diagonal entry {i + 1} is {rows[i][i]}, not 0")
            for j in range(i + 1, n):
                if abs(rows[i][j] - rows[j][i]) > tol:
                    raise InvalidInputError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
                d[(i + 1, j + 1)] = rows[i][j]
        return cls(n, d)


def random_distance_matrix(n: int, rng: random.Random | int | None = None) -> DistanceMatrix:
    """Independent uniform [0, 1) distances, drawn row by row in the upper triangle."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    rng = make_rng(rng)
    d = {(i, j): rng.random() for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return DistanceMatrix(n, d)


def neighborhood_graph(D: DistanceMatrix, epsilon: float) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, D.n + 1)}
    for (i, j), value in D.pairs().items():
        if value <= epsilon:
            adj[i].add(j)
            adj[j].add(i)
    return adj


def vietoris_rips(D: DistanceMatrix, epsilon: float, max_dimension: int | None = None) -> SimplicialComplex:
    """Vietoris-Rips complex of ``D`` at scale ``epsilon`` (inclusive threshold)."""
    if not epsilon >= 0:
        raise InvalidInputError(f"epsilon must be nonnegative, got {epsilon!r}")
    adj = neighborhood_graph(D, epsilon)
    up = {v: {w for w in nbrs if w > v} for v, nbrs in adj.items()}
    faces = [()]
    # each layer carries (face, common upper neighbours of its vertices)
    layer = [((v,), up[v]) for v in range(1, D.n + 1)]
    dim = 0
    while layer:
        faces.extend(f for f, _ in layer)
        if max_dimension is not None and dim >= max_dimension:
            break
        nxt = []
        for face, common in layer:
            for w in sorted(common):
                nxt.append((face + (w,), common & up[w]))
        layer = nxt
        dim += 1
    return SimplicialComplex(faces)


def vietoris_rips_naive(D: DistanceMatrix, epsilon: float) -> SimplicialComplex:
    """Filter every subset of [n]; exponential, kept as a cross-check."""
    points = range(1, D.n + 1)
    faces = [
        s for k in range(D.n + 1) for s in combinations(points, k)
        if all(D[a, b] <= epsilon for a, b in combinations(s, 2))
    ]
    return SimplicialComplex(faces)


def _parse_rows(lines: Iterable[str], source: str) -> list[list[float]]:
    rows = []
    for lineno, row in enumerate(csv.reader(lines), start=1):
        if not row or all(not cell.strip() for cell in row):
            rows.append([])
            continue
        try:
            rows.append([float(cell) for cell in row])
        except ValueError:
            raise ParseError(f"{source}: non-numeric entry in {row!r}", lineno) from None
    while rows and not rows[-1]:
        rows.pop()
    return rows


def read_distance_matrix(path: str | Path, fmt: str = "full") -> DistanceMatrix:
    """Read a CSV distance matrix in ``full`` (square) or ``upper`` (strict triangle) layout.

    An empty ``upper`` file is the single-point matrix.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        rows = _parse_rows(fh, str(path))
    try:
        if fmt == "full":
            if not rows:
                raise InvalidInputError("empty full distance matrix")
            return DistanceMatrix.from_square(rows)
        if fmt == "upper":
            return DistanceMatrix.from_upper(rows)
    except InvalidInputError as exc:
        raise ParseError(f"{path}: {exc}") from None
    raise InvalidInputError(f"unknown distance-matrix format {fmt!r}")


def write_distance_matrix(D: DistanceMatrix, fmt: str = "upper") -> str:
    if fmt == "upper":
        lines = [",".join(repr(D[i, j]) for j in range(i + 1, D.n + 1)) for i in range(1, D.n)]
    elif fmt == "full":
        lines = [",".join(repr(D[i, j]) for j in range(1, D.n + 1)) for i in range(1, D.n + 1)]
    else:
        raise InvalidInputError(f"unknown distance-matrix format {fmt!r}")
    return "\n".join(lines) + ("\n" if lines else "")
