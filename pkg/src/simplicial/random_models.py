"""
Random simplicial complexes.

All samplers take a ``random.Random`` (Mersenne Twister, MT19937) or an
integer seed.  Equal seeds and equal call sequences replay exactly.

``random_complex(n)``
    Draw ``g`` uniformly from 1..n, then ``g`` generators, each a uniformly
    random nonempty subset of [n]; return the complex they generate.

``random_complex_bounded(n, r)``
    As above, but each generator is uniform among the nonempty subsets of
    [n] with at most ``r`` elements, so every face has at most ``r``
    vertices.

``linial_meshulam(n, m, d)``
    The complete ``(d-1)``-skeleton on [n] plus exactly ``m`` distinct
    ``d``-faces chosen uniformly without replacement.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .complex import SimplicialComplex, from_faces, irrelevant_complex
from .errors import InvalidInputError


def make_rng(rng: random.Random | int | None = None) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def _check_count(name, value, low):
    if isinstance(value, bool) or not isinstance(value, int) or value < low:
        raise InvalidInputError(f"{name} must be an integer >= {low}, got {value!r}")


def _subset_from_mask(mask: int) -> tuple[int, ...]:
    face = []
    v = 1
    while mask:
        if mask & 1:
            face.append(v)
        mask >>= 1
        v += 1
    return tuple(face)


def random_complex(n: int, rng: random.Random | int | None = None) -> SimplicialComplex:
    _check_count("n", n, 1)
    rng = make_rng(rng)
    count = rng.randint(1, n)
    gens = [_subset_from_mask(rng.randrange(1, 1 << n)) for _ in range(count)]
    return from_faces(gens)


def random_complex_bounded(n: int, r: int, rng: random.Random | int | None = None) -> SimplicialComplex:
    """A random complex on [n] whose faces have at most ``r`` vertices.

    ``r = 0`` leaves only the empty face.
    """
    _check_count("n", n, 1)
    _check_count("r", r, 0)
    rng = make_rng(rng)
    r = min(r, n)
    if r == 0:
        return irrelevant_complex()
    sizes = list(range(1, r + 1))
    weights = [comb(n, k) for k in sizes]
    count = rng.randint(1, n)
    vertices = range(1, n + 1)
    gens = []
    for _ in range(count):
        k = rng.choices(sizes, weights)[0]
        gens.append(rng.sample(vertices, k))
    return from_faces(gens)


def linial_meshulam(n: int, m: int, d: int, rng: random.Random | int | None = None) -> SimplicialComplex:
    """Sample Y_d(n, m)."""
    _check_count("n", n, 1)
    _check_count("m", m, 0)
    _check_count("d", d, 1)
    if d > n - 1:
        raise InvalidInputError(f"d must lie in 1..{n - 1} for n = {n}, got {d}")
    total = comb(n, d + 1)
    if m > total:
        raise InvalidInputError(f"m = {m} exceeds the {total} possible {d}-faces")
    rng = make_rng(rng)
    vertices = range(1, n + 1)
    top = rng.sample(range(total), m)
    # rank -> face by walking combinations in lexicographic order
    chosen = set(top)
    top_faces = [f for k, f in enumerate(combinations(vertices, d + 1)) if k in chosen]
    return from_faces(list(combinations(vertices, d)) + top_faces)
