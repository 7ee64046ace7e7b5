"""The intervals [1, lambda^k] and their lattice operations."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .geodesic import (
    ALL,
    ONE,
    DescentSet,
    is_max_length,
    lambda_power,
    left_descents,
    left_divides,
    length,
    reduced_expression,
    right_divides,
)
from .monomial import Generator, MonomialMatrix, S, T, format_word, generator_matrix, inv, mul


class NotInInterval(ValueError):
    pass


@dataclass(frozen=True)
class IntervalCtx:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.k == 0:
            raise ValueError("k must be nonzero")

    @cached_property
    def delta(self) -> MonomialMatrix:
        return lambda_power(self.n, self.k)

    @property
    def height(self) -> int:
        return self.n * (self.n - 1)

    @property
    def identity(self) -> MonomialMatrix:
        return MonomialMatrix.identity(self.n)

    def require(self, *ws: MonomialMatrix):
        for w in ws:
            if w.n != self.n:
                raise ValueError(f"dimension mismatch: {w.n} vs ctx n={self.n}")
            if not in_interval(w, self):
                raise NotInInterval(f"{w!r} is not in [1, lambda^{self.k}]")


@dataclass(frozen=True)
class ZPartition:
    n: int
    bubbles: tuple[tuple[int, int], ...]
    in_z: tuple[tuple[bool, ...], ...]  # in_z[i-1][c-1]

    def z_prime(self) -> list[tuple[int, int]]:
        return [
            (i, c)
            for i in range(1, self.n + 1)
            for c in range(1, self.n + 1)
            if not self.in_z[i - 1][c - 1]
        ]


def z_partition(w: MonomialMatrix) -> ZPartition:
    # a bubble is a nonzero entry with no other nonzero entry weakly up-left
    bubbles = []
    min_col = w.n + 1
    for i, c in enumerate(w.perm, 1):
        if c < min_col:
            bubbles.append((i, c))
            min_col = c
    in_z = tuple(
        tuple(any(i <= bi and c <= bc for bi, bc in bubbles) for c in range(1, w.n + 1))
        for i in range(1, w.n + 1)
    )
    return ZPartition(w.n, tuple(bubbles), in_z)


def in_interval(w: MonomialMatrix, ctx: IntervalCtx) -> bool:
    """Bubble criterion: every nonzero entry outside Z(w) is 1 or x^k."""
    zp = z_partition(w)
    for i, (c, e) in enumerate(zip(w.perm, w.exps), 1):
        if not zp.in_z[i - 1][c - 1] and e not in (0, ctx.k):
            return False
    return True


def in_interval_by_length(w: MonomialMatrix, ctx: IntervalCtx) -> bool:
    return length(w) + length(mul(inv(w), ctx.delta)) == ctx.height


def in_right_interval(w: MonomialMatrix, ctx: IntervalCtx) -> bool:
    """``w`` right-divides lambda^k, via the bubble criterion on ``inv(w)``.

    v right-divides d exactly when inv(v) left-divides inv(d), and
    inv(lambda^k) = lambda^-k.
    """
    return in_interval(inv(w), IntervalCtx(ctx.n, -ctx.k))


def in_right_interval_by_length(w: MonomialMatrix, ctx: IntervalCtx) -> bool:
    return length(mul(ctx.delta, inv(w))) + length(w) == ctx.height


def balance_witness(w: MonomialMatrix, sample: Iterable[MonomialMatrix]) -> MonomialMatrix | None:
    """First sampled element dividing ``w`` on exactly one side, if any."""
    for v in sample:
        if left_divides(v, w) != right_divides(v, w):
            return v
    return None


def classify_balanced_maxlen(w: MonomialMatrix) -> int | None:
    """k if ``w == lambda^k``, None for any other element of maximal length."""
    if not is_max_length(w):
        raise ValueError("element is not of maximal length")
    k = w.exps[1]
    if w == lambda_power(w.n, k):
        return k
    return None


def complement_right(a: MonomialMatrix, ctx: IntervalCtx) -> MonomialMatrix:
    ctx.require(a)
    return mul(inv(a), ctx.delta)


def complement_left(a: MonomialMatrix, ctx: IntervalCtx) -> MonomialMatrix:
    ctx.require(a)
    return mul(ctx.delta, inv(a))


def common_atoms(a: MonomialMatrix, b: MonomialMatrix, ctx: IntervalCtx) -> DescentSet:
    ctx.require(a, b)
    return left_descents(a).intersect(left_descents(b))


def _pick_atom(atoms: DescentSet, tie: int) -> Generator:
    if atoms.s_part:
        return S(min(atoms.s_part))
    if atoms.t_mode == ONE:
        return T(atoms.t_index)
    return T(tie)


def _greedy_gcd(a: MonomialMatrix, b: MonomialMatrix, tie: int) -> MonomialMatrix:
    # gcd(a, b) = x * gcd(x^-1 a, x^-1 b) for any common atom x
    d = MonomialMatrix.identity(a.n)
    while True:
        atoms = left_descents(a).intersect(left_descents(b))
        if atoms.is_empty():
            return d
        x = generator_matrix(_pick_atom(atoms, tie), a.n)
        d = mul(d, x)
        a = mul(x, a)
        b = mul(x, b)


def meet_left(a: MonomialMatrix, b: MonomialMatrix, ctx: IntervalCtx) -> MonomialMatrix:
    ctx.require(a, b)
    return _greedy_gcd(a, b, ctx.k)


def meet_right(a: MonomialMatrix, b: MonomialMatrix, ctx: IntervalCtx) -> MonomialMatrix:
    ctx.require(a, b)
    # inverses live in [1, lambda^-k]
    return inv(_greedy_gcd(inv(a), inv(b), -ctx.k))


def join_left(a: MonomialMatrix, b: MonomialMatrix, ctx: IntervalCtx) -> MonomialMatrix:
    """Least element of [1, lambda^k] left-divisible by both ``a`` and ``b``."""
    ca, cb = complement_right(a, ctx), complement_right(b, ctx)
    return mul(ctx.delta, inv(meet_right(ca, cb, ctx)))


def join_right(a: MonomialMatrix, b: MonomialMatrix, ctx: IntervalCtx) -> MonomialMatrix:
    """Least element of [1, lambda^k] right-divisible by both ``a`` and ``b``."""
    ca, cb = complement_left(a, ctx), complement_left(b, ctx)
    return mul(inv(meet_left(ca, cb, ctx)), ctx.delta)


# -- enumeration helpers ------------------------------------------------------


def left_divisors(a: MonomialMatrix, t_range: range) -> set[MonomialMatrix]:
    """Left divisors of ``a`` whose t-letters stay in ``t_range`` where free.

    A divisor set containing the all-t descent class is infinite; that class
    is expanded only over ``t_range``.
    """
    seen = {MonomialMatrix.identity(a.n)}
    stack = list(seen)
    while stack:
        v = stack.pop()
        rest = mul(inv(v), a)
        for g in left_descents(rest).sample(t_range):
            nxt = mul(v, generator_matrix(g, a.n))
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def right_divisors(a: MonomialMatrix, t_range: range) -> set[MonomialMatrix]:
    return {inv(v) for v in left_divisors(inv(a), t_range)}


def random_simple(ctx: IntervalCtx, rng: random.Random, t_spread: int = 4) -> MonomialMatrix:
    """Random walk up from the identity inside [1, lambda^k]."""
    a = ctx.identity
    t_range = range(ctx.k - t_spread, ctx.k + t_spread + 1)
    for _ in range(rng.randint(0, ctx.height)):
        atoms = left_descents(mul(inv(a), ctx.delta)).sample(t_range)
        if not atoms:
            break
        a = mul(a, generator_matrix(rng.choice(atoms), ctx.n))
    return a


def _label(w: MonomialMatrix) -> str:
    return format_word(reduced_expression(w)) or "1"


def atom_graph_dot(a: MonomialMatrix, ctx: IntervalCtx, name: str = "atoms") -> str:
    """DOT digraph of the left divisors of a simple, edges labelled by atoms.

    Wherever every t_i is available at once the family is drawn as one
    collapsed node ``t[*]`` and not expanded further.
    """
    ctx.require(a)
    nodes: dict[MonomialMatrix, str] = {}
    edges: list[tuple[str, str, str]] = []
    collapsed = 0

    def node_id(v):
        if v not in nodes:
            nodes[v] = f"v{len(nodes)}"
        return nodes[v]

    queue = [ctx.identity]
    node_id(ctx.identity)
    done = set()
    extra_nodes = []
    while queue:
        v = queue.pop(0)
        if v in done:
            continue
        done.add(v)
        atoms = left_descents(mul(inv(v), a))
        for j in sorted(atoms.s_part):
            nxt = mul(v, generator_matrix(S(j), ctx.n))
            edges.append((node_id(v), node_id(nxt), f"s{j}"))
            queue.append(nxt)
        if atoms.t_mode == ONE:
            nxt = mul(v, generator_matrix(T(atoms.t_index), ctx.n))
            edges.append((node_id(v), node_id(nxt), f"t[{atoms.t_index}]"))
            queue.append(nxt)
        elif atoms.t_mode == ALL:
            cid = f"c{collapsed}"
            collapsed += 1
            extra_nodes.append(cid)
            edges.append((node_id(v), cid, "t[*]"))

    lines = [f"digraph {name} {{"]
    for v, nid in nodes.items():
        lines.append(f'  {nid} [label="{_label(v)}"];')
    for cid in extra_nodes:
        lines.append(f'  {cid} [label="t[*]", shape=box, style=dashed];')
    for src, dst, lab in edges:
        lines.append(f'  {src} -> {dst} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines)
