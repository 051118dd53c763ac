"""Acceptance criteria, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary (see
conftest.py).  Run alone with ``pytest tests/test_acceptance.py``.
"""

import random
import time
from collections import Counter
from itertools import combinations, product
from math import comb

import pytest

from simplicial import (
    DistanceMatrix,
    HomologyGroup,
    IntegerMatrix,
    all_homology,
    betti_numbers,
    boundary_matrix,
    determinant,
    euler_characteristic,
    from_faces,
    homology,
    induced_chain_map,
    is_subcomplex,
    is_well_defined,
    linial_meshulam,
    random_complex,
    random_complex_bounded,
    random_distance_matrix,
    reduced_simplicial_chain_complex,
    simplex,
    simplicial_chain_complex,
    smith_normal_form,
)
from simplicial.vietoris_rips import vietoris_rips, vietoris_rips_naive
from conftest import CHAIN_GENERATORS, KLEIN_FACETS, RP2_FACETS, VR_FACETS
from oracles import is_downward_closed, rational_rank

Z = HomologyGroup(1)
ZERO = HomologyGroup()


def sample_complex(seed, max_n):
    """Rotate through the three random models."""
    rng = random.Random(seed)
    kind = seed % 3
    if kind == 0:
        return random_complex(rng.randint(1, max_n), rng)
    if kind == 1:
        n = rng.randint(1, max_n)
        return random_complex_bounded(n, rng.randint(1, n), rng)
    n = rng.randint(2, max_n)
    d = rng.randint(1, n - 1)
    return linial_meshulam(n, rng.randint(0, comb(n, d + 1)), d, rng)


@pytest.mark.criterion_1
def test_criterion_1_rp2_homology():
    start = time.perf_counter()
    C = simplicial_chain_complex(from_faces(RP2_FACETS))
    groups = all_homology(C, include_zero=True)
    elapsed = time.perf_counter() - start
    assert groups == {0: Z, 1: HomologyGroup(0, (2,)), 2: ZERO}
    assert all(homology(C, i).is_zero() for i in (-1, 3, 4))
    assert elapsed < 1.0


@pytest.mark.criterion_2
def test_criterion_2_klein_bottle_homology():
    start = time.perf_counter()
    C = simplicial_chain_complex(from_faces(KLEIN_FACETS))
    groups = all_homology(C, include_zero=True)
    elapsed = time.perf_counter() - start
    assert groups == {0: Z, 1: HomologyGroup(1, (2,)), 2: ZERO}
    assert elapsed < 1.0


@pytest.mark.criterion_3
def test_criterion_3_boundary_matrices():
    K = from_faces(CHAIN_GENERATORS)
    assert boundary_matrix(K, 0).to_lists() == [[1, 1, 1, 1, 1]]
    assert boundary_matrix(K, 1).to_lists() == [
        [-1, -1, -1, -1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, -1, -1, -1, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, -1, -1],
        [0, 0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 1],
    ]
    assert boundary_matrix(K, 2).to_lists() == [
        [1, 1, 0, 0, 0],
        [-1, 0, 1, 0, 0],
        [0, -1, -1, 0, 0],
        [0, 0, 0, 0, 0],
        [1, 0, 0, 1, 1],
        [0, 1, 0, -1, 0],
        [0, 0, 0, 0, -1],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1],
    ]
    assert boundary_matrix(K, 3).to_lists() == [[-1], [1], [-1], [1], [0]]
    R = reduced_simplicial_chain_complex(K)
    assert R.d(0).to_lists() == [[1, 1, 1, 1, 1]]
    assert [R.d(i) for i in (1, 2, 3)] == [boundary_matrix(K, i) for i in (1, 2, 3)]


@pytest.mark.criterion_4
def test_criterion_4_induced_map():
    big, small = simplex(3), from_faces([[1, 2], [3]])
    f = induced_chain_map(big, small)
    assert f.component(0) == IntegerMatrix.identity(3)
    assert f.component(1).to_lists() == [[1], [0], [0]]
    assert is_well_defined(f)


@pytest.mark.criterion_5
def test_criterion_5_simplex_reduced_homology():
    for n in range(1, 11):
        start = time.perf_counter()
        C = reduced_simplicial_chain_complex(simplex(n))
        groups = all_homology(C, include_zero=True)
        elapsed = time.perf_counter() - start
        assert all(g.is_zero() for g in groups.values()), n
        assert sorted(groups) == list(range(-1, n))
        if n == 8:
            assert elapsed < 5.0
        if n == 10:
            assert elapsed < 60.0


@pytest.mark.criterion_6
def test_criterion_6_boundary_squares_to_zero():
    for seed in range(1000):
        K = sample_complex(seed, 8)
        assert K.vertex_bound <= 8
        for C in (simplicial_chain_complex(K), reduced_simplicial_chain_complex(K)):
            for i in range(C.min_degree + 2, C.max_degree + 1):
                assert (C.d(i - 1) @ C.d(i)).is_zero(), (seed, i)


@pytest.mark.criterion_7
def test_criterion_7_smith_normal_form():
    rng = random.Random(2024)
    for _ in range(1000):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        A = IntegerMatrix(m, n, [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)])
        snf = smith_normal_form(A)
        assert snf.U @ A @ snf.V == snf.D
        assert abs(determinant(snf.U)) == 1
        assert abs(determinant(snf.V)) == 1
        D = snf.D
        assert all(D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
        diag = [D[k, k] for k in range(min(m, n))]
        r = snf.rank
        assert all(x > 0 for x in diag[:r]) and all(x == 0 for x in diag[r:])
        assert all(b % a == 0 for a, b in zip(diag[:r], diag[1:r]))


@pytest.mark.criterion_8
def test_criterion_8_betti_oracle():
    def oracle_rank(C, k):
        if C.rank(k) == 0 or C.rank(k - 1) == 0:
            return 0
        return rational_rank(C.d(k).to_lists())

    for seed in range(200):
        K = sample_complex(seed, 7)
        for C in (simplicial_chain_complex(K), reduced_simplicial_chain_complex(K)):
            for i in C.degrees():
                expected = C.rank(i) - oracle_rank(C, i) - oracle_rank(C, i + 1)
                assert homology(C, i).betti == expected, (seed, i)


@pytest.mark.criterion_9
def test_criterion_9_euler_consistency():
    rp2, klein = from_faces(RP2_FACETS), from_faces(KLEIN_FACETS)
    assert euler_characteristic(rp2) == 1
    assert euler_characteristic(klein) == 0
    fixtures = [rp2, klein, from_faces(VR_FACETS), from_faces(CHAIN_GENERATORS), simplex(6)]
    for seed in range(300):
        fixtures.append(sample_complex(seed, 8))
    for K in fixtures:
        betti = betti_numbers(K)
        assert euler_characteristic(K) == sum((-1) ** i * b for i, b in betti.items())


@pytest.mark.criterion_10
def test_criterion_10_linial_meshulam():
    for seed in range(10_000):
        Y = linial_meshulam(5, 3, 2, seed)
        assert (Y.count(0), Y.count(1), Y.count(2)) == (5, 10, 3)
        assert Y.dimension() == 2
    counts = Counter()
    for seed in range(10_000):
        Y = linial_meshulam(4, 1, 1, seed)
        (edge,) = Y.faces(1)
        counts[edge] += 1
    assert len(counts) == 6
    for c in counts.values():
        assert abs(c / 10_000 - 1 / 6) <= 0.02


def _is_flag(K, n):
    edges = set(K.faces(1))
    return all(
        (s in K) == all(p in edges for p in combinations(s, 2))
        for k in range(n + 1) for s in combinations(range(1, n + 1), k))


def _check_filtration(D):
    previous = None
    for eps in [0.0] + D.values():
        K = vietoris_rips(D, eps)
        assert is_downward_closed(list(K))
        assert _is_flag(K, D.n)
        if previous is not None:
            assert is_subcomplex(previous, K)
        previous = K


@pytest.mark.criterion_11
def test_criterion_11_vietoris_rips():
    # every 0/1 matrix on n <= 6 points, i.e. every possible eps-graph
    for n in range(1, 7):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            D = DistanceMatrix(n, {p: float(not mask >> k & 1) for k, p in enumerate(pairs)})
            K = vietoris_rips(D, 0.5)
            assert _is_flag(K, n)
            assert is_subcomplex(vietoris_rips(D, 0.0), K)
            assert is_subcomplex(K, vietoris_rips(D, 1.0))
    # every three-level matrix on n <= 4 points, all thresholds
    for n in range(1, 5):
        pairs = list(combinations(range(1, n + 1), 2))
        for values in product((0.0, 0.5, 1.0), repeat=len(pairs)):
            _check_filtration(DistanceMatrix(n, dict(zip(pairs, values))))
    # random real matrices on n <= 6 points over their sorted-value grid
    rng = random.Random(11)
    for _ in range(300):
        _check_filtration(random_distance_matrix(rng.randint(1, 6), rng))
    # equality with filtering the full power set
    for n in range(1, 11):
        for _ in range(3):
            D = random_distance_matrix(n, rng)
            for eps in [0.0] + D.values():
                assert vietoris_rips(D, eps) == vietoris_rips_naive(D, eps)


@pytest.mark.criterion_12
def test_criterion_12_vr_fixture_homology():
    K = from_faces(VR_FACETS)
    assert K.facets() == [tuple(f) for f in VR_FACETS]
    groups = all_homology(reduced_simplicial_chain_complex(K), include_zero=True)
    assert {i: g for i, g in groups.items() if not g.is_zero()} == {1: Z}


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
