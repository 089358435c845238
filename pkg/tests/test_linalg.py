from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from schur0.linalg import Subspace, add_scaled, contains, rank, rref, scaled, unit, vector

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def sparse_vectors(draw, dim=6):
    idx = draw(st.lists(st.integers(0, dim - 1), max_size=dim, unique=True))
    return vector((i, draw(small)) for i in idx)


def dense_rank(vectors, dim):
    if not vectors:
        return 0
    return sympy.Matrix([[v.get(i, 0) for i in range(dim)] for v in vectors]).rank()


def test_empty_span():
    s = rref([])
    assert s.rank == 0
    assert contains(s, {})


def test_scalar_multiples_have_rank_one():
    assert rank([unit(0), {0: Fraction(2)}]) == 1


def test_permutation_rows_have_rank_three():
    assert rank([unit(1), unit(2), unit(0)]) == 3


def test_contains_examples():
    x = {0: Fraction(1), 3: Fraction(-2)}
    assert contains(rref([x]), scaled(x, 2))
    assert not contains(rref([unit(0)]), unit(1))


def test_vector_drops_zeros_and_merges():
    assert vector([(0, 1), (0, -1), (2, Fraction(1, 2))]) == {2: Fraction(1, 2)}


def test_add_scaled_cancels():
    v = {0: Fraction(1), 1: Fraction(2)}
    add_scaled(v, {1: Fraction(1)}, -2)
    assert v == {0: Fraction(1)}


def test_echelon_rows_are_normalised():
    s = Subspace([{1: Fraction(3), 2: Fraction(6)}, {1: Fraction(1), 3: Fraction(1)}])
    assert s.pivots == [1, 2]
    for p, row in zip(s.pivots, s.basis):
        assert row[p] == 1
        assert all(other.get(p, 0) == 0 for q, other in zip(s.pivots, s.basis) if q != p)


def test_coordinates_reject_outside_vectors():
    s = Subspace([unit(0)])
    try:
        s.coordinates(unit(1))
    except ValueError:
        return
    raise AssertionError("expected ValueError")


@given(st.lists(sparse_vectors(), max_size=6))
def test_rank_matches_dense_elimination(vectors):
    assert rank(vectors) == dense_rank(vectors, 6)


@given(st.lists(sparse_vectors(), max_size=5), sparse_vectors())
def test_contains_matches_dense_elimination(vectors, v):
    expected = dense_rank(vectors + [v], 6) == dense_rank(vectors, 6)
    assert contains(rref(vectors), v) == expected


@given(st.lists(sparse_vectors(), max_size=6))
def test_rref_is_idempotent(vectors):
    s = rref(vectors)
    again = rref(s.basis)
    assert again.pivots == s.pivots and again.basis == s.basis
    assert s.rank <= min(len(vectors), 6)


@given(st.lists(sparse_vectors(), min_size=1, max_size=5), st.lists(small, min_size=5, max_size=5))
def test_coordinates_reconstruct_combinations(vectors, coeffs):
    target = {}
    for c, v in zip(coeffs, vectors):
        add_scaled(target, v, c)
    s = rref(vectors)
    back = {}
    for p, c in s.coordinates(target).items():
        add_scaled(back, s.basis[s.pivots.index(p)], c)
    assert back == target
