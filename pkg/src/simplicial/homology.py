"""
Integral homology of chain complexes and simplicial complexes.

``H_i = ker d_i / im d_(i+1)``.  Over the integers the isomorphism class is
read from two Smith forms: the free rank is ``rank C_i - rank d_i -
rank d_(i+1)`` and the torsion is the invariant factors of ``d_(i+1)``
larger than one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .chain import ChainComplex, reduced_simplicial_chain_complex, simplicial_chain_complex
from .complex import SimplicialComplex
from .errors import InvalidInputError, UnsupportedError
from .smith import invariant_factors


@dataclass(frozen=True)
class HomologyGroup:
    """``Z**betti + Z/t_1 + Z/t_2 + ...`` with ``t_1 | t_2 | ...`` and every ``t_k >= 2``."""

    betti: int = 0
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.betti < 0:
            raise InvalidInputError("negative free rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise InvalidInputError(f"torsion {self.torsion} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise InvalidInputError("torsion coefficients must be at least 2")

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = [f"Z^{self.betti}"] if self.betti else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}


def _rank_and_torsion(C: ChainComplex, i: int) -> tuple[int, tuple[int, ...]]:
    if C.rank(i) == 0 or C.rank(i - 1) == 0:
        return 0, ()
    factors = invariant_factors(C.d(i))
    return len(factors), tuple(t for t in factors if t > 1)


def _group(C: ChainComplex, i: int, cur, nxt) -> HomologyGroup:
    return HomologyGroup(C.rank(i) - cur[0] - nxt[0], nxt[1])


def homology(C: ChainComplex, i: int) -> HomologyGroup:
    """Homology of ``C`` in degree ``i``; the zero group outside ``C``'s range."""
    if C.rank(i) == 0:
        return HomologyGroup()
    return _group(C, i, _rank_and_torsion(C, i), _rank_and_torsion(C, i + 1))


def all_homology(C: ChainComplex, include_zero: bool = False) -> dict[int, HomologyGroup]:
    """Homology in every degree of ``C``; zero groups are dropped unless asked for."""
    info = {i: _rank_and_torsion(C, i) for i in range(C.min_degree, C.max_degree + 2)}
    out = {}
    for i in C.degrees():
        group = _group(C, i, info[i], info[i + 1])
        if include_zero or not group.is_zero():
            out[i] = group
    return out


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in range(2, isqrt(m) + 1):
        if m % p == 0:
            return False
    return True


def homology_mod(C: ChainComplex, i: int, m: int) -> int:
    """Dimension of ``H_i(C ⊗ Z/m)`` over the field ``Z/m``.

    Only prime ``m`` is supported.  The rank of a differential mod ``p``
    is the number of its integral invariant factors not divisible by ``p``.
    """
    if m < 2:
        raise InvalidInputError(f"modulus must be at least 2, got {m}")
    if not _is_prime(m):
        raise UnsupportedError(f"modulus {m} is composite; only prime moduli are supported")
    if C.rank(i) == 0:
        return 0

    def rank_mod(k):
        if C.rank(k) == 0 or C.rank(k - 1) == 0:
            return 0
        return sum(1 for t in invariant_factors(C.d(k)) if t % m)

    return C.rank(i) - rank_mod(i) - rank_mod(i + 1)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating count of nonempty faces."""
    if K.is_void:
        raise InvalidInputError("the void complex has no Euler characteristic")
    return sum((-1) ** d * n for d, n in K.f_vector().items() if d >= 0)


def simplicial_homology(K: SimplicialComplex, reduced: bool = False) -> dict[int, HomologyGroup]:
    """Nonzero homology groups of ``K`` keyed by degree."""
    if reduced:
        return all_homology(reduced_simplicial_chain_complex(K))
    return all_homology(simplicial_chain_complex(K))


def betti_numbers(K: SimplicialComplex, reduced: bool = False) -> dict[int, int]:
    C = reduced_simplicial_chain_complex(K) if reduced else simplicial_chain_complex(K)
    return {i: g.betti for i, g in all_homology(C, include_zero=True).items()}


def format_report(groups: dict[int, HomologyGroup]) -> str:
    lines = [f"H_{i} = {g}" for i, g in sorted(groups.items()) if not g.is_zero()]
    return "\n".join(lines) if lines else "trivial"


def report_json(groups: dict[int, HomologyGroup], reduced: bool) -> dict:
    return {
        "reduced": reduced,
        "groups": {str(i): g.to_json() for i, g in sorted(groups.items()) if not g.is_zero()},
    }
