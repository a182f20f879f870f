import random

import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from equiangular.exact import (
    AlgebraicNumber,
    IntPoly,
    charpoly,
    charpoly_mod2,
    eigen_multiplicity,
    is_totally_real_algebraic_integer,
    rank_exact,
    rank_shifted,
)
from oracles import berkowitz_charpoly, fraction_rank

small_matrix = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80)
@given(small_matrix)
def test_charpoly_matches_berkowitz(m):
    assert list(charpoly(m).coeffs) == berkowitz_charpoly(m)


def test_charpoly_large_entries_match_sympy():
    rng = random.Random(7)
    m = [[rng.randint(-10**6, 10**6) for _ in range(9)] for _ in range(9)]
    expected = [int(c) for c in reversed(sympy.Matrix(m).charpoly().all_coeffs())]
    assert list(charpoly(m).coeffs) == expected


def test_charpoly_of_40_vertex_seidel_matrix_matches_berkowitz():
    rng = random.Random(3)
    n = 40
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s[i][j] = s[j][i] = rng.choice((-1, 1))
    assert list(charpoly(s).coeffs) == berkowitz_charpoly(s)


@settings(max_examples=60)
@given(small_matrix)
def test_rank_matches_rational_elimination(m):
    assert rank_exact(m) == fraction_rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))


@settings(max_examples=60)
@given(small_matrix)
def test_charpoly_mod2_is_reduction(m):
    assert charpoly_mod2(m) == charpoly(m).mod2()


def test_multiplicity_and_shifted_rank():
    m = [[2, 1, 0], [1, 2, 0], [0, 0, 3]]  # eigenvalues 1, 3, 3
    assert eigen_multiplicity(m, 3) == 2
    assert eigen_multiplicity(m, 1) == 1
    assert rank_shifted(m, -3) == 1
    assert eigen_multiplicity(m, AlgebraicNumber.sqrt(2)) == 0


def test_totally_real_algebraic_integer():
    assert is_totally_real_algebraic_integer(IntPoly((-2, 0, 1)))   # sqrt 2
    assert not is_totally_real_algebraic_integer(IntPoly((-3, 2)))  # 3/2
    assert not is_totally_real_algebraic_integer(IntPoly((1, 0, 1)))  # +-i
    assert is_totally_real_algebraic_integer(IntPoly((-1, 0, -4, 0, 1))) is False  # two complex roots
