import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from atilde.geodesic import (
    ALL,
    NONE,
    ONE,
    DescentSet,
    bfs_length_oracle,
    block_lengths,
    is_max_length,
    lambda_power,
    left_descents,
    left_divides,
    length,
    letter_bound,
    reduced_expression,
    right_descents,
    right_divides,
)
from atilde.monomial import MonomialMatrix, S, T, eval_word, generator_matrix, inv, mul, word

from helpers import matrices, random_matrix

WORKED_EXAMPLE = MonomialMatrix.from_rows([(4, 0), (2, -1), (3, 2), (1, -1)])


def g(x, n):
    return generator_matrix(x, n)


def test_reduced_expression_examples():
    assert reduced_expression(MonomialMatrix.identity(4)) == ()
    assert reduced_expression(WORKED_EXAMPLE) == word(T(0), S(3), T(2), T(0), S(4), S(3), T(-1))
    assert reduced_expression(lambda_power(3, 1)) == word(T(1), T(0), S(3), T(1), T(0), S(3))


def test_length_examples():
    assert length(MonomialMatrix.identity(3)) == 0
    assert length(WORKED_EXAMPLE) == 7
    assert length(lambda_power(3, 2)) == 6


@pytest.mark.parametrize("n, k, exps", [
    (2, 1, (-1, 1)),
    (4, 1, (-3, 1, 1, 1)),
    (3, -2, (4, -2, -2)),
])
def test_lambda_power(n, k, exps):
    assert lambda_power(n, k) == MonomialMatrix.diagonal(exps)


def test_lambda_power_rejects_zero():
    with pytest.raises(ValueError):
        lambda_power(3, 0)


def _shape_ok(piece, i):
    """Row-i piece: s_i..s_{c+1}, or s_i..s_3 t_k [t_0 [s_3..s_c]]."""
    gens = [x for x, _ in piece]
    # leading run s_i, s_{i-1}, ...
    p = 0
    while p < len(gens) and gens[p] == S(i - p) and i - p >= 3:
        p += 1
    rest = gens[p:]
    if not rest:
        return True
    if rest[0] == T(0) and len(rest) == 1:
        return i - p == 2  # s_i .. s_3 s_2 with s_2 = t_0
    if rest[0].kind != "t" or i - p != 2:
        return False
    k = rest[0].index
    if k == 0:
        return False
    tail = rest[1:]
    if not tail:
        return True
    if tail[0] != T(0):
        return False
    return tail[1:] == [S(j) for j in range(3, 3 + len(tail) - 1)]


@given(matrices(bound=5))
def test_reduced_expression_structure(w):
    re_ = reduced_expression(w)
    assert eval_word(re_, w.n) == w
    pieces = block_lengths(w)
    assert len(re_) == sum(pieces) == length(w)
    start = 0
    for i, size in zip(range(2, w.n + 1), pieces):
        assert _shape_ok(re_[start:start + size], i)
        start += size


@given(matrices(bound=6))
def test_length_of_inverse(w):
    assert length(inv(w)) == length(w)


@given(matrices(bound=4), st.integers(-6, 6), st.data())
def test_generator_changes_length_by_one(w, i, data):
    gens = [T(i)] + [S(j) for j in range(3, w.n + 1)]
    x = g(data.draw(st.sampled_from(gens)), w.n)
    assert abs(length(mul(x, w)) - length(w)) == 1
    assert abs(length(mul(w, x)) - length(w)) == 1


def test_descent_examples():
    d = left_descents(g(T(5), 2))
    assert d == DescentSet(frozenset(), ONE, 5)
    lam = lambda_power(2, 1)
    assert left_descents(lam).t_mode == ALL
    assert all(length(mul(g(T(k), 2), lam)) == 1 for k in range(-3, 4))
    d = left_descents(eval_word(word(S(3), S(4)), 4))
    assert d.s_part == {3} and d.t_mode == NONE


@given(matrices(bound=4))
def test_left_descents_match_lengths(w):
    d = left_descents(w)
    ell = length(w)
    for j in range(3, w.n + 1):
        shorter = length(mul(g(S(j), w.n), w)) == ell - 1
        assert (j in d.s_part) == shorter
    for k in range(-8, 9):
        shorter = length(mul(g(T(k), w.n), w)) == ell - 1
        assert (T(k) in d) == shorter
    if d.t_mode == ONE:
        assert length(mul(g(T(d.t_index), w.n), w)) == ell - 1


@given(matrices(bound=4))
def test_right_descents_match_lengths(w):
    d = right_descents(w)
    ell = length(w)
    for x in [T(k) for k in range(-6, 7)] + [S(j) for j in range(3, w.n + 1)]:
        assert (x in d) == (length(mul(w, g(x, w.n))) == ell - 1)


def test_descent_set_intersection():
    one5 = DescentSet(frozenset({3}), ONE, 5)
    one0 = DescentSet(frozenset({3, 4}), ONE, 0)
    every = DescentSet(frozenset({4}), ALL)
    assert one5.intersect(one0) == DescentSet(frozenset({3}))
    assert one5.intersect(every) == DescentSet(frozenset(), ONE, 5)
    assert every.intersect(every) == every
    assert DescentSet().is_empty()
    with pytest.raises(ValueError):
        DescentSet(frozenset(), ONE)


def test_divisibility_examples():
    w = WORKED_EXAMPLE
    assert left_divides(MonomialMatrix.identity(4), w)
    assert left_divides(g(T(0), 4), w)
    lam = lambda_power(3, 1)
    assert not left_divides(lam, mul(lam, lam))
    with pytest.raises(ValueError):
        left_divides(lam, w)


@given(matrices(bound=4), st.integers(-5, 5), st.data())
def test_right_division_by_generator_mirrors_left(w, i, data):
    x = g(data.draw(st.sampled_from([T(i)] + [S(j) for j in range(3, w.n + 1)])), w.n)
    assert right_divides(x, w) == left_divides(x, inv(w))


@given(matrices(bound=4))
def test_prefixes_of_reduced_expression_divide(w):
    re_ = reduced_expression(w)
    for p in range(len(re_) + 1):
        v = eval_word(re_[:p], w.n)
        assert left_divides(v, w)
        assert right_divides(eval_word(re_[p:], w.n), w)


def test_is_max_length_examples():
    assert is_max_length(lambda_power(3, 1))
    assert is_max_length(lambda_power(4, -2))
    assert not is_max_length(MonomialMatrix.identity(3))
    assert is_max_length(MonomialMatrix.diagonal((1, 1, -2)))


def test_max_length_allows_trivial_first_entry():
    # the sweep never inspects row 1, so diag(1, x^-1, x) is already maximal
    w = MonomialMatrix.diagonal((0, -1, 1))
    assert length(w) == 6 and is_max_length(w)
    assert bfs_length_oracle(3, 2, 6)[w] == 6
    assert not is_max_length(MonomialMatrix.diagonal((1, 0, -1)))


@given(matrices(bound=4))
def test_is_max_length_iff_full_length(w):
    assert is_max_length(w) == (length(w) == w.n * (w.n - 1))
    assert length(w) <= w.n * (w.n - 1)


def test_bfs_examples():
    dist = bfs_length_oracle(2, 2, 4)
    assert dist[MonomialMatrix.identity(2)] == 0
    assert dist[g(T(0), 2)] == 1
    assert dist[MonomialMatrix.diagonal((-1, 1))] == 2
    with pytest.raises(ValueError):
        bfs_length_oracle(2, 0, 3)


def test_bfs_is_deterministic():
    assert bfs_length_oracle(3, 1, 4) == bfs_length_oracle(3, 1, 4)


@pytest.mark.parametrize("n, bound, radius", [(2, 3, 8), (3, 2, 6), (4, 1, 5)])
def test_geodesy_against_bfs(n, bound, radius):
    for w, d in bfs_length_oracle(n, bound, radius).items():
        re_ = reduced_expression(w)
        assert len(re_) <= d
        if letter_bound(re_) <= bound:
            assert len(re_) == d


def test_random_elements_lengths_bounded():
    rng = random.Random(7)
    for _ in range(300):
        w = random_matrix(rng, rng.randint(2, 6), 6)
        assert 0 <= length(w) <= w.n * (w.n - 1)
