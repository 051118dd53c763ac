"""
Simplicial chain complexes over the integers.

Bases are the lexicographically sorted faces of each dimension.  For a
face ``(l_0, ..., l_i)`` the boundary is the alternating sum of the faces
obtained by deleting ``l_j``, with sign ``(-1)**j``.  In degree 0 of the
reduced complex this is the augmentation sending every vertex to the empty
face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .complex import Face, SimplicialComplex, is_subcomplex
from .errors import InvalidInputError
from .matrix import IntegerMatrix


def boundary_matrix(K: SimplicialComplex, i: int) -> IntegerMatrix:
    """Matrix of the boundary map from ``i``-chains to ``(i-1)``-chains of ``K``.

    Rows are indexed by ``K.faces(i - 1)`` and columns by ``K.faces(i)``.
    ``i = 0`` gives the augmentation row; ``i = -1`` gives the map from the
    empty-face generator to the zero module (a 0x1 matrix).
    """
    if K.is_void:
        raise InvalidInputError("the void complex has no chain complex")
    if i < -1:
        raise InvalidInputError(f"boundary degree must be at least -1, got {i}")
    sources = K.faces(i)
    targets = K.faces(i - 1)
    index = {f: r for r, f in enumerate(targets)}
    data = [[0] * len(sources) for _ in targets]
    for c, face in enumerate(sources):
        sign = 1
        for j in range(len(face)):
            data[index[face[:j] + face[j + 1:]]][c] = sign
            sign = -sign
    return IntegerMatrix(len(targets), len(sources), data)


@dataclass(frozen=True)
class ChainComplex:
    """A bounded chain complex of free abelian groups.

    ``differential[i]`` maps degree ``i`` to degree ``i - 1`` and is stored
    for ``min_degree < i <= max_degree``.  Everything outside the degree
    range is zero.
    """

    min_degree: int
    max_degree: int
    basis: Mapping[int, tuple[Face, ...]]
    differential: Mapping[int, IntegerMatrix] = field(default_factory=dict)

    def __post_init__(self):
        for i in range(self.min_degree + 1, self.max_degree + 1):
            d = self.differential.get(i)
            if d is None:
                continue
            if d.shape != (self.rank(i - 1), self.rank(i)):
                raise InvalidInputError(
                    f"differential {i} has shape {d.shape}, "
                    f"expected {(self.rank(i - 1), self.rank(i))}")

    def degrees(self) -> range:
        return range(self.min_degree, self.max_degree + 1)

    def rank(self, i: int) -> int:
        """Rank of the free group in degree ``i``."""
        return len(self.basis.get(i, ()))

    def ranks(self) -> list[int]:
        return [self.rank(i) for i in self.degrees()]

    def d(self, i: int) -> IntegerMatrix:
        """The differential leaving degree ``i``; an explicit zero map when not stored."""
        mat = self.differential.get(i)
        if mat is None:
            return IntegerMatrix.zeros(self.rank(i - 1), self.rank(i))
        return mat

    def is_complex(self) -> bool:
        """Check that consecutive differentials compose to zero."""
        return all((self.d(i - 1) @ self.d(i)).is_zero()
                   for i in range(self.min_degree + 2, self.max_degree + 1))

    def to_json(self) -> dict:
        return {str(i): self.d(i).to_json()
                for i in range(self.min_degree + 1, self.max_degree + 1)}

    def to_text(self) -> str:
        blocks = []
        for i in range(self.min_degree + 1, self.max_degree + 1):
            mat = self.d(i)
            head = f"d_{i}: C_{i} (rank {mat.cols}) -> C_{i - 1} (rank {mat.rows})"
            blocks.append(head + "\n" + mat.to_text())
        if not blocks:
            parts = ", ".join(f"C_{i} = Z^{self.rank(i)}" for i in self.degrees())
            return f"{parts} (no differentials)"
        return "\n\n".join(blocks)


def _chain_complex(K: SimplicialComplex, low: int) -> ChainComplex:
    top = K.dimension()
    basis = {i: tuple(K.faces(i)) for i in range(low, top + 1)}
    diff = {i: boundary_matrix(K, i) for i in range(low + 1, top + 1)}
    return ChainComplex(low, top, basis, diff)


def simplicial_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Non-reduced chain complex of ``K``, degrees 0 through ``dim K``."""
    if K.is_void or K.vertex_bound == 0:
        raise InvalidInputError("the non-reduced chain complex needs at least one vertex")
    return _chain_complex(K, 0)


def reduced_simplicial_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Reduced chain complex of ``K``, degrees -1 through ``dim K``."""
    if K.is_void:
        raise InvalidInputError("the void complex has no reduced chain complex")
    return _chain_complex(K, -1)


@dataclass(frozen=True)
class ChainMap:
    """Degree-wise integer matrices from ``source`` to ``target``.

    ``components[i]`` has ``target.rank(i)`` rows and ``source.rank(i)``
    columns.  A missing component is the zero map.
    """

    source: ChainComplex
    target: ChainComplex
    components: Mapping[int, IntegerMatrix]

    def degrees(self) -> range:
        lo = min(self.source.min_degree, self.target.min_degree)
        hi = max(self.source.max_degree, self.target.max_degree)
        return range(lo, hi + 1)

    def component(self, i: int) -> IntegerMatrix:
        mat = self.components.get(i)
        if mat is None:
            return IntegerMatrix.zeros(self.target.rank(i), self.source.rank(i))
        return mat

    def __matmul__(self, other: ChainMap) -> ChainMap:
        """Composition ``self ∘ other``."""
        if not isinstance(other, ChainMap):
            return NotImplemented
        comps = {i: self.component(i) @ other.component(i)
                 for i in set(self.components) | set(other.components)}
        return ChainMap(other.source, self.target, comps)

    def to_text(self) -> str:
        blocks = []
        for i in sorted(self.components):
            mat = self.components[i]
            blocks.append(f"f_{i}: Z^{mat.cols} -> Z^{mat.rows}\n{mat.to_text()}")
        return "\n\n".join(blocks)

    def to_json(self) -> dict:
        return {str(i): self.components[i].to_json() for i in sorted(self.components)}


def identity_map(C: ChainComplex) -> ChainMap:
    return ChainMap(C, C, {i: IntegerMatrix.identity(C.rank(i)) for i in C.degrees()})


def induced_chain_map(K: SimplicialComplex, L: SimplicialComplex, reduced: bool = False) -> ChainMap:
    """Chain map induced by the inclusion of ``L`` into ``K``.

    Argument order follows the ambient-first convention: ``K`` is the
    larger complex.  Each component is the 0/1 matrix placing a face of
    ``L`` at its row in ``K``'s basis.
    """
    if not is_subcomplex(L, K):
        raise InvalidInputError("the second complex is not a subcomplex of the first")
    build = reduced_simplicial_chain_complex if reduced else simplicial_chain_complex
    source = build(L)
    target = build(K)
    comps = {}
    for i in source.degrees():
        row_of = {f: r for r, f in enumerate(target.basis[i])}
        cols = source.basis[i]
        data = [[0] * len(cols) for _ in range(target.rank(i))]
        for c, face in enumerate(cols):
            data[row_of[face]][c] = 1
        comps[i] = IntegerMatrix(target.rank(i), len(cols), data)
    return ChainMap(source, target, comps)


def is_well_defined(f: ChainMap) -> bool:
    """Shapes match the bases and every square commutes."""
    src, tgt = f.source, f.target
    if not (src.is_complex() and tgt.is_complex()):
        return False
    for i, mat in f.components.items():
        if mat.shape != (tgt.rank(i), src.rank(i)):
            return False
    for i in f.degrees():
        left = tgt.d(i) @ f.component(i)
        right = f.component(i - 1) @ src.d(i)
        if left != right:
            return False
    return True
