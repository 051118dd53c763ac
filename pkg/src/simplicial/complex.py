"""
Abstract simplicial complexes on the vertex set [n] = {1, ..., n}.

A complex is stored as a graded face list: a map from dimension to the
lexicographically sorted tuple of faces of that dimension.  Faces are plain
tuples of strictly increasing positive integers; the empty tuple is the
empty face and has dimension -1.

Two degenerate complexes are kept apart on purpose:

* the *void* complex has no faces at all,
* the *irrelevant* complex has exactly one face, the empty face.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInputError, UndefinedDimensionError

Face = tuple[int, ...]

EMPTY_FACE: Face = ()


def make_face(vertices: Iterable[int]) -> Face:
    """Normalize raw vertex labels into a face.

    Labels are sorted.  Repeated labels and labels below 1 are rejected.
    """
    face = tuple(sorted(vertices))
    for v in face:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidInputError(f"vertex label {v!r} is not an integer")
        if v < 1:
            raise InvalidInputError(f"vertex label {v} is not positive")
    for a, b in zip(face, face[1:]):
        if a == b:
            raise InvalidInputError(f"vertex {a} repeated in face {face}")
    return face


def face_dimension(face: Sequence[int]) -> int:
    return len(face) - 1


def _drop_one(face: Face) -> Iterator[Face]:
    """Yield the codimension-one faces of ``face`` (``face`` minus one vertex)."""
    for j in range(len(face)):
        yield face[:j] + face[j + 1:]


class SimplicialComplex:
    """An immutable, downward-closed family of faces.

    Use :func:`from_faces`, :func:`simplex` or :func:`void_complex` rather
    than calling the constructor directly; the constructor trusts that its
    input is already closed under taking subsets.
    """

    __slots__ = ("_faces", "_face_set", "_vertex_bound", "_hash")

    def __init__(self, faces: Iterable[Face]):
        graded: dict[int, list[Face]] = {}
        face_set = frozenset(faces)
        for face in face_set:
            graded.setdefault(len(face) - 1, []).append(face)
        self._faces: dict[int, tuple[Face, ...]] = {
            d: tuple(sorted(graded[d])) for d in sorted(graded)
        }
        self._face_set = face_set
        self._vertex_bound = max((f[-1] for f in face_set if f), default=0)
        self._hash = None

    # -- queries ---------------------------------------------------------

    def faces(self, d: int) -> list[Face]:
        """Sorted faces of dimension ``d`` (empty list if there are none)."""
        return list(self._faces.get(d, ()))

    def count(self, d: int) -> int:
        return len(self._faces.get(d, ()))

    @property
    def vertex_bound(self) -> int:
        """Smallest n with every vertex in [n]; 0 for the void and irrelevant complexes."""
        return self._vertex_bound

    @property
    def is_void(self) -> bool:
        return not self._face_set

    def dimension(self) -> int:
        if self.is_void:
            raise UndefinedDimensionError("the void complex has no dimension")
        return max(self._faces)

    def dimensions(self) -> list[int]:
        """Dimensions that carry at least one face, ascending."""
        return list(self._faces)

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self._faces.items()}

    def vertices(self) -> list[int]:
        return [f[0] for f in self._faces.get(0, ())]

    def facets(self) -> list[Face]:
        """Maximal faces, by dimension ascending and then lexicographically."""
        result = []
        for d, layer in self._faces.items():
            covered = set()
            for face in self._faces.get(d + 1, ()):
                covered.update(_drop_one(face))
            result.extend(f for f in layer if f not in covered)
        return result

    def graded(self) -> Mapping[int, tuple[Face, ...]]:
        return dict(self._faces)

    def __contains__(self, face) -> bool:
        return tuple(face) in self._face_set

    def __iter__(self) -> Iterator[Face]:
        for layer in self._faces.values():
            yield from layer

    def __len__(self) -> int:
        return len(self._face_set)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._face_set == other._face_set

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._face_set)
        return self._hash

    def __le__(self, other: SimplicialComplex) -> bool:
        return is_subcomplex(self, other)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        layers = ", ".join(f"{d}: {list(fs)}" for d, fs in self._faces.items())
        return f"SimplicialComplex({{{layers}}})"


def void_complex() -> SimplicialComplex:
    return SimplicialComplex(())


def irrelevant_complex() -> SimplicialComplex:
    """The complex {∅}."""
    return SimplicialComplex((EMPTY_FACE,))


def closure(generators: Iterable[Face]) -> set[Face]:
    """All subsets of the given faces, as a set of sorted tuples."""
    found: set[Face] = set()
    # Largest first: once a face is present, so are all its subsets.
    for gen in sorted(set(generators), key=len, reverse=True):
        if gen in found:
            continue
        for k in range(len(gen) + 1):
            found.update(combinations(gen, k))
    return found


def from_faces(generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The smallest simplicial complex containing every generator.

    >>> K = from_faces([[1, 2, 3, 4], [1, 3, 4], [2, 5], [2, 4, 5]])
    >>> K.facets()
    [(2, 4, 5), (1, 2, 3, 4)]
    """
    return SimplicialComplex(closure(make_face(g) for g in generators))


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on [n]: all 2**n subsets, dimension n - 1."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"simplex needs a positive vertex count, got {n!r}")
    return SimplicialComplex(closure([tuple(range(1, n + 1))]))


def skeleton(K: SimplicialComplex, d: int) -> SimplicialComplex:
    """Faces of ``K`` of dimension at most ``d``."""
    return SimplicialComplex(f for f in K if len(f) - 1 <= d)


def faces(K: SimplicialComplex, d: int) -> list[Face]:
    return K.faces(d)


def facets(K: SimplicialComplex) -> list[Face]:
    return K.facets()


def dimension(K: SimplicialComplex) -> int:
    return K.dimension()


def ambient(K: SimplicialComplex) -> SimplicialComplex:
    """The full simplex on [vertex_bound(K)].

    For the irrelevant complex {∅} there is no vertex and the result is
    {∅} itself.
    """
    if K.is_void:
        raise InvalidInputError("the void complex has no ambient simplex")
    if K.vertex_bound == 0:
        return irrelevant_complex()
    return simplex(K.vertex_bound)


def is_subcomplex(L: SimplicialComplex, K: SimplicialComplex) -> bool:
    """True iff every face of ``L`` is a face of ``K``."""
    return L._face_set <= K._face_set
