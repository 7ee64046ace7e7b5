"""Shared strategies and brute-force oracles for the test suite."""
from __future__ import annotations

import random
from collections import deque

from hypothesis import strategies as st

from atilde.geodesic import length
from atilde.interval import IntervalCtx, in_interval_by_length
from atilde.monomial import MonomialMatrix, S, T, eval_word, generator_matrix, word


def random_matrix(rng: random.Random, n: int, bound: int) -> MonomialMatrix:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    while True:
        exps = [rng.randint(-bound, bound) for _ in range(n - 1)]
        last = -sum(exps)
        if -bound <= last <= bound:
            break
    exps.append(last)
    rng.shuffle(exps)
    return MonomialMatrix(n, tuple(perm), tuple(exps))


@st.composite
def matrices(draw, n=st.integers(2, 5), bound=4):
    n = draw(n) if not isinstance(n, int) else n
    perm = draw(st.permutations(range(1, n + 1)))
    exps = draw(st.lists(st.integers(-bound, bound), min_size=n - 1, max_size=n - 1))
    exps.append(-sum(exps))
    return MonomialMatrix(n, tuple(perm), tuple(exps))


def generators(n: int, t_lo: int = -4, t_hi: int = 4):
    return [T(i) for i in range(t_lo, t_hi + 1)] + [S(j) for j in range(3, n + 1)]


@st.composite
def positive_words(draw, n, max_len=8, t_bound=4):
    gens = generators(n, -t_bound, t_bound)
    return word(*draw(st.lists(st.sampled_from(gens), max_size=max_len)))


@st.composite
def group_words(draw, n, max_len=8, t_bound=4):
    gens = generators(n, -t_bound, t_bound)
    letters = draw(st.lists(st.tuples(st.sampled_from(gens), st.sampled_from((1, -1))), max_size=max_len))
    return tuple(letters)


def random_positive_word(rng: random.Random, n: int, max_len: int, t_bound: int = 4):
    gens = generators(n, -t_bound, t_bound)
    return word(*(rng.choice(gens) for _ in range(rng.randint(0, max_len))))


def random_group_word(rng: random.Random, n: int, max_len: int, t_bound: int = 4):
    gens = generators(n, -t_bound, t_bound)
    return tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len)))


# -- monoid oracle by rewriting closure ---------------------------------------


def _rewrites(w, n, k, window):
    gens = [g for g, _ in w]
    out = []
    for p in range(len(gens) - 1):
        a, b = gens[p], gens[p + 1]
        c = gens[p + 2] if p + 2 < len(gens) else None
        if c == a:
            if (a.kind == "s" and b.kind == "s" and abs(a.index - b.index) == 1) or (
                a == S(3) and b.kind == "t") or (a.kind == "t" and b == S(3)):
                out.append(gens[:p] + [b, a, b] + gens[p + 3:])
        if a.kind == "s" and b.kind == "s" and abs(a.index - b.index) > 1:
            out.append(gens[:p] + [b, a] + gens[p + 2:])
        if (a.kind == "s" and a.index >= 4 and b.kind == "t") or (
                a.kind == "t" and b.kind == "s" and b.index >= 4):
            out.append(gens[:p] + [b, a] + gens[p + 2:])
        if a.kind == "t" and b.kind == "t" and b.index == a.index - k:
            for j in window:
                if j != a.index:
                    out.append(gens[:p] + [T(j), T(j - k)] + gens[p + 2:])
    return [word(*g) for g in out]


def monoid_class(w, n, k, window, limit=20000):
    """Words reachable from ``w`` by defining relations (dual-free moves in ``window``)."""
    seen = {tuple(w)}
    queue = deque([tuple(w)])
    while queue:
        cur = queue.popleft()
        for nxt in _rewrites(cur, n, k, window):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                if len(seen) > limit:
                    raise RuntimeError("class too large for brute force")
    return seen


def brute_normal_form(w, ctx: IntervalCtx):
    """Greedy factorisation by longest simple prefix over the rewriting class."""
    if not w:
        return ()
    idx = [g.index for g, _ in w if g.kind == "t"] + [0, ctx.k]
    window = range(min(idx) - 2 * abs(ctx.k) - 2, max(idx) + 2 * abs(ctx.k) + 3)
    best = None
    for cand in monoid_class(w, ctx.n, ctx.k, window):
        for p in range(len(cand), 0, -1):
            if best is not None and p <= len(best[0]):
                break
            m = eval_word(cand[:p], ctx.n)
            if length(m) == p and in_interval_by_length(m, ctx):
                best = (cand[:p], cand[p:])
                break
    head, rest = best
    return (eval_word(head, ctx.n),) + brute_normal_form(rest, ctx)


def atom_sample(n: int, t_range) -> list[MonomialMatrix]:
    return [generator_matrix(g, n) for g in [T(i) for i in t_range] + [S(j) for j in range(3, n + 1)]]


# -- length-only divisor enumeration (independent of descent sets) ----------


def divisors_by_length(a: MonomialMatrix, atoms: list[MonomialMatrix]) -> set[MonomialMatrix]:
    """Left divisors of ``a`` reachable through the given atoms, by length additivity."""
    from atilde.geodesic import left_divides
    from atilde.monomial import mul

    start = MonomialMatrix.identity(a.n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt_frontier = []
        for v in frontier:
            for x in atoms:
                w = mul(v, x)
                if w not in seen and left_divides(w, a):
                    seen.add(w)
                    nxt_frontier.append(w)
        frontier = nxt_frontier
    return seen


def check_lattice_pair(a, b, ctx, atoms):
    """Universal properties of meet_left / join_left against enumeration."""
    from atilde.geodesic import left_divides
    from atilde.interval import join_left, meet_left
    from atilde.monomial import inv, mul

    m = meet_left(a, b, ctx)
    assert left_divides(m, a) and left_divides(m, b)
    common = divisors_by_length(a, atoms) & divisors_by_length(b, atoms)
    assert all(left_divides(c, m) for c in common)

    j = join_left(a, b, ctx)
    assert left_divides(a, j) and left_divides(b, j) and left_divides(j, ctx.delta)
    multiples = {mul(a, u) for u in divisors_by_length(mul(inv(a), ctx.delta), atoms)}
    for c in multiples:
        if left_divides(b, c):
            assert left_divides(j, c)
    return m, j


def expected_atom_join(x, y, n, k):
    """lcm of two distinct atoms in [1, lambda^k], from the closed-form table."""
    if x.kind == "t" and y.kind == "t":
        return eval_word(word(T(k), T(0)), n)
    if x.kind == "s" and y.kind == "t":
        x, y = y, x
    if x.kind == "t":
        j = y.index
        return eval_word(word(x, y, x) if j == 3 else word(x, y), n)
    if abs(x.index - y.index) == 1:
        return eval_word(word(x, y, x), n)
    return eval_word(word(x, y), n)
