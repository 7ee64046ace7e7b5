"""Geodesic normal forms over the generators t_i (i in Z), s_3..s_n.

``reduced_expression`` follows the column-sweeping algorithm literally:
row i (from n down to 2) has its nonzero entry pushed to the diagonal by
right multiplications, passing through column 1 and a ``t_k`` whenever the
entry is a nontrivial power x^k.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .monomial import (
    Generator,
    GroupWord,
    MonomialMatrix,
    S,
    T,
    generator_matrix,
    inv,
    mul,
    word,
)

NONE = "none"
ALL = "all"
ONE = "one"


@dataclass(frozen=True)
class DescentSet:
    """Generators that strictly shorten an element on one side.

    ``t_mode`` is ``"none"``, ``"all"`` (every t_i) or ``"one"`` (only
    ``t_{t_index}``).  The same shape doubles as an atom set.
    """

    s_part: frozenset[int] = field(default_factory=frozenset)
    t_mode: str = NONE
    t_index: int | None = None

    def __post_init__(self):
        if self.t_mode not in (NONE, ALL, ONE):
            raise ValueError(f"bad t_mode {self.t_mode!r}")
        if (self.t_mode == ONE) != (self.t_index is not None):
            raise ValueError("t_index is set exactly when t_mode is 'one'")

    def __contains__(self, g: Generator) -> bool:
        if g.kind == "s":
            return g.index in self.s_part
        if self.t_mode == ALL:
            return True
        return self.t_mode == ONE and g.index == self.t_index

    def is_empty(self) -> bool:
        return not self.s_part and self.t_mode == NONE

    def intersect(self, other: DescentSet) -> DescentSet:
        s_part = self.s_part & other.s_part
        a, b = self, other
        if a.t_mode == NONE or b.t_mode == NONE:
            return DescentSet(s_part)
        if a.t_mode == ALL:
            return DescentSet(s_part, b.t_mode, b.t_index)
        if b.t_mode == ALL:
            return DescentSet(s_part, a.t_mode, a.t_index)
        if a.t_index == b.t_index:
            return DescentSet(s_part, ONE, a.t_index)
        return DescentSet(s_part)

    def sample(self, t_range: range) -> list[Generator]:
        """Concrete members, expanding the "all" class over ``t_range``."""
        out = [S(j) for j in sorted(self.s_part)]
        if self.t_mode == ALL:
            out.extend(T(i) for i in t_range)
        elif self.t_mode == ONE:
            out.append(T(self.t_index))
        return out


def _s_or_t0(j: int, n: int) -> MonomialMatrix:
    return generator_matrix(S(j), n)


def reduced_expression(w: MonomialMatrix) -> GroupWord:
    n = w.n
    cur = w
    out: list[Generator] = []  # built by prepending, kept reversed
    for i in range(n, 1, -1):
        c = cur.perm[i - 1]
        k = cur.exps[i - 1]
        if k != 0:
            for j in range(c, 1, -1):
                cur = mul(cur, _s_or_t0(j, n))
            cur = mul(cur, generator_matrix(T(k), n))
            # prepend t_k s_2 s_3 ... s_c
            out.extend(S(j) for j in range(c, 1, -1))
            out.append(T(k))
            c = 2
        for j in range(c + 1, i + 1):
            cur = mul(cur, _s_or_t0(j, n))
        # prepend s_i s_{i-1} ... s_{c+1}
        out.extend(S(j) for j in range(c + 1, i + 1))
        assert cur.perm[i - 1] == i and cur.exps[i - 1] == 0
    assert cur.is_identity()
    return word(*reversed(out))


def block_lengths(w: MonomialMatrix) -> list[int]:
    """Lengths of the per-row pieces RE_2 .. RE_n, via block reduction.

    Independent of ``reduced_expression``: it peels row i and column c off
    the matrix and folds the removed entry into the first column.
    """
    n = w.n
    # rows[i] = (column, exponent) for the current top-left block
    cols = list(w.perm)
    exps = list(w.exps)
    pieces = [0] * (n + 1)
    for i in range(n, 1, -1):
        c, k = cols[i - 1], exps[i - 1]
        if k == 0:
            pieces[i] = i - c
        elif c == 1:
            pieces[i] = i - 1
        elif c == 2:
            pieces[i] = i
        else:
            pieces[i] = i + c - 2
        # drop row i and column c, then scale the new first column by x^k
        cols.pop()
        exps.pop()
        for r in range(i - 1):
            if cols[r] > c:
                cols[r] -= 1
            if cols[r] == 1:
                exps[r] += k
    return pieces[2:]


def length(w: MonomialMatrix) -> int:
    return sum(block_lengths(w))


def left_descents(w: MonomialMatrix) -> DescentSet:
    c = w.perm
    is_one = [e == 0 for e in w.exps]
    s_part = set()
    for i in range(3, w.n + 1):
        # rows i-1, i have distinct columns in a monomial matrix
        assert c[i - 2] != c[i - 1]
        if c[i - 2] < c[i - 1]:
            if not is_one[i - 1]:
                s_part.add(i)
        elif is_one[i - 2]:
            s_part.add(i)
    if c[0] < c[1]:
        if is_one[1]:
            return DescentSet(frozenset(s_part))
        return DescentSet(frozenset(s_part), ALL)
    return DescentSet(frozenset(s_part), ONE, -w.exps[0])


def right_descents(w: MonomialMatrix) -> DescentSet:
    return left_descents(inv(w))


def left_divides(v: MonomialMatrix, w: MonomialMatrix) -> bool:
    if v.n != w.n:
        raise ValueError(f"dimension mismatch: {v.n} vs {w.n}")
    return length(v) + length(mul(inv(v), w)) == length(w)


def right_divides(v: MonomialMatrix, w: MonomialMatrix) -> bool:
    if v.n != w.n:
        raise ValueError(f"dimension mismatch: {v.n} vs {w.n}")
    return length(mul(w, inv(v))) + length(v) == length(w)


def is_max_length(w: MonomialMatrix) -> bool:
    """True iff ``length(w) == n(n-1)``.

    Every sweep step must then find its entry on the diagonal with a
    nontrivial power, which forces ``w`` diagonal with ``exps[i] != 0`` for
    rows 2..n; row 1 is unconstrained beyond the zero exponent sum.
    """
    return w.is_diagonal() and all(e != 0 for e in w.exps[1:])


def lambda_power(n: int, k: int) -> MonomialMatrix:
    if k == 0:
        raise ValueError("k must be nonzero")
    return MonomialMatrix.diagonal((-k * (n - 1),) + (k,) * (n - 1))


def oracle_generators(n: int, index_bound: int) -> list[Generator]:
    gens = [T(i) for i in range(-index_bound, index_bound + 1)]
    gens.extend(S(j) for j in range(3, n + 1))
    return gens


def bfs_length_oracle(n: int, index_bound: int, radius: int) -> dict[MonomialMatrix, int]:
    """Word-metric ball around the identity for a finite generator subset."""
    if index_bound < 1 or radius < 0:
        raise ValueError("need index_bound >= 1 and radius >= 0")
    mats = [generator_matrix(g, n) for g in oracle_generators(n, index_bound)]
    start = MonomialMatrix.identity(n)
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        cur = frontier.popleft()
        d = dist[cur]
        if d == radius:
            continue
        for g in mats:
            nxt = mul(cur, g)
            if nxt not in dist:
                dist[nxt] = d + 1
                frontier.append(nxt)
    return dist


def letter_bound(w: GroupWord) -> int:
    """Largest |i| over the t-letters of a word (0 for none)."""
    return max((abs(g.index) for g, _ in w if g.kind == "t"), default=0)


def iter_diagonal(n: int, lo: int, hi: int) -> Iterator[MonomialMatrix]:
    """All diagonal elements with exponents in ``[lo, hi]``."""

    def rec(prefix):
        if len(prefix) == n - 1:
            last = -sum(prefix)
            if lo <= last <= hi:
                yield MonomialMatrix.diagonal(tuple(prefix) + (last,))
            return
        for e in range(lo, hi + 1):
            yield from rec(prefix + [e])

    yield from rec([])
