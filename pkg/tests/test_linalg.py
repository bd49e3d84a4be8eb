import random

import sympy as sp
from hypothesis import given, settings, strategies as st

from stablekr.linalg import Echelon, integral, kernel, rank, to_dense


def random_columns(rng, nrows, ncols, density=0.5):
    cols = []
    for _ in range(ncols):
        cols.append({i: rng.randint(-4, 4) for i in range(nrows) if rng.random() < density})
        cols[-1] = {i: c for i, c in cols[-1].items() if c}
    return cols


def sympy_rank(cols, nrows):
    if not cols:
        return 0
    return sp.Matrix(to_dense(cols, nrows)).rank()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 8), st.integers(0, 8))
def test_rank_matches_sympy(seed, nrows, ncols):
    rng = random.Random(seed)
    cols = random_columns(rng, nrows, ncols)
    assert rank(cols) == sympy_rank(cols, nrows)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7), st.integers(1, 9))
def test_kernel_vectors_are_a_basis(seed, nrows, ncols):
    rng = random.Random(seed)
    cols = random_columns(rng, nrows, ncols)
    ker = kernel(cols)
    assert len(ker) == ncols - rank(cols)
    for vec in ker:
        total = {}
        for j, x in vec.items():
            for i, c in cols[j].items():
                total[i] = total.get(i, 0) + x * c
        assert not any(total.values())
    assert rank(ker) == len(ker)


def test_low_rank_product():
    # outer-product columns have rank 1
    cols = [{0: k, 1: 2 * k, 2: 3 * k} for k in range(1, 5)]
    assert rank(cols) == 1
    assert len(kernel(cols)) == 3


def test_echelon_contains_and_reduce():
    ech = Echelon()
    assert ech.add({0: 2, 1: 4})
    assert ech.add({1: 3, 2: 1})
    assert not ech.add({0: 1, 1: 5, 2: 1})
    assert ech.contains({0: 4, 1: 14, 2: 2})
    assert not ech.contains({2: 1})
    assert ech.rank == 2


def test_integral_clears_denominators():
    from fractions import Fraction

    assert integral({0: Fraction(1, 2), 3: Fraction(-2, 3)}) == {0: 3, 3: -4}
