"""Bridges between presentations, and relation-suite verification.

* rewriting the generators t_i as words in t_0, t_1 (the two-generator
  presentation of Shi),
* the homomorphism from the positive Artin monoid of type B_{n-1},
* the relabelling t_i -> t_-i between the k = 1 and k = -1 structures.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Callable

from .garside import GroupElement, equals, from_group_word
from .interval import IntervalCtx, join_left
from .monomial import (
    Generator,
    GroupWord,
    S,
    T,
    eval_word,
    free_reduce,
    generator_matrix,
    inverse_word,
    word,
)
from .presentations import (
    BLetter,
    PresentationRelation,
    VerificationReport,
    b_type_garside_word,
    b_type_relations,
    bword,
    cll_relations,
    format_bword,
    monoid_relations,
    quadratic_relations,
    shi_relations,
)


@lru_cache(maxsize=None)
def cll_t_as_shi_word(i: int) -> GroupWord:
    """t_i written over t_0, t_1 using t_i t_{i-1} = t_1 t_0."""
    if i in (0, 1):
        return word(T(i))
    head = word(T(1), T(0))
    if i > 1:
        # t_i = t_1 t_0 t_{i-1}^-1
        return free_reduce(head + inverse_word(cll_t_as_shi_word(i - 1)))
    # t_i = t_{i+1}^-1 t_1 t_0
    return free_reduce(inverse_word(cll_t_as_shi_word(i + 1)) + head)


def _relation_report(relations, ctx: IntervalCtx, report: VerificationReport, matrices=True):
    for rel in relations:
        ok_nf = equals(from_group_word(rel.lhs, ctx), from_group_word(rel.rhs, ctx))
        report.add(f"[{rel.family}] {rel}", ok_nf, "" if ok_nf else "normal forms differ")
        if matrices:
            ok_m = eval_word(rel.lhs, ctx.n) == eval_word(rel.rhs, ctx.n)
            report.add(f"[{rel.family}] {rel} in G", ok_m, "" if ok_m else "matrices differ")


def _quadratic_report(n: int, t_indices, report: VerificationReport):
    for rel in quadratic_relations(n, t_indices):
        ok = eval_word(rel.lhs, n) == eval_word(rel.rhs, n)
        report.add(f"[quadratic] {rel} in G", ok)


def verify_cll(n: int, bound: int) -> VerificationReport:
    """Relations of the infinite-generator presentation, checked with k = 1."""
    ctx = IntervalCtx(n, 1)
    report = VerificationReport(f"cll n={n} bound={bound}")
    _relation_report(cll_relations(n, bound), ctx, report)
    _quadratic_report(n, range(-bound, bound + 1), report)
    return report


def verify_shi(n: int, bound: int) -> VerificationReport:
    """Two-t-generator relations, and the t_i rewriting, checked with k = 1."""
    ctx = IntervalCtx(n, 1)
    report = VerificationReport(f"shi n={n} bound={bound}")
    _relation_report(shi_relations(n), ctx, report)
    _quadratic_report(n, (0, 1), report)
    for i in range(-bound, bound + 1):
        w = cll_t_as_shi_word(i)
        ok_m = eval_word(w, n) == generator_matrix(T(i), n)
        report.add(f"t[{i}] as t[0],t[1] word projects to t_{i}", ok_m)
        ok_nf = equals(from_group_word(w, ctx), from_group_word(word(T(i)), ctx))
        report.add(f"t[{i}] as t[0],t[1] word equals t[{i}]", ok_nf)
    return report


# -- type B --------------------------------------------------------------------


def _default_q1(ctx: IntervalCtx) -> GroupWord:
    return word(T(ctx.k), T(0))


def phi_word(bw, ctx: IntervalCtx, q1_image: GroupWord | None = None) -> GroupWord:
    q1 = _default_q1(ctx) if q1_image is None else q1_image
    out: list = []
    for m, e in bw:
        if not 1 <= m <= ctx.n - 1:
            raise ValueError(f"q{m} is not a generator for rank {ctx.n - 1}")
        img = q1 if m == 1 else word(S(m + 1))
        out.extend(img if e > 0 else inverse_word(img))
    return tuple(out)


def phi(bw, ctx: IntervalCtx, q1_image: GroupWord | None = None) -> GroupElement:
    """Image of a type-B braid word: q_1 -> t_k t_0, q_m -> s_{m+1}."""
    return from_group_word(phi_word(bw, ctx, q1_image), ctx)


def _b_apply(w: tuple[int, ...], m: int) -> tuple[int, ...]:
    # right action of q_m on a signed permutation in window form
    w = list(w)
    if m == 1:
        w[0] = -w[0]
    else:
        w[m - 2], w[m - 1] = w[m - 1], w[m - 2]
    return tuple(w)


@lru_cache(maxsize=None)
def _b_group(rank: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Every element of W(B_rank) with a reduced word (BFS)."""
    start = tuple(range(1, rank + 1))
    words = {start: ()}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for m in range(1, rank + 1):
            nxt = _b_apply(w, m)
            if nxt not in words:
                words[nxt] = words[w] + (m,)
                queue.append(nxt)
    return words


def _b_from_word(ms, rank: int) -> tuple[int, ...]:
    w = tuple(range(1, rank + 1))
    for m in ms:
        w = _b_apply(w, m)
    return w


def lcm_b(x: int, y: int, rank: int) -> tuple[BLetter, ...]:
    """Least common multiple of q_x, q_y in the type-B Coxeter weak order."""
    words = _b_group(rank)

    def has_left_descent(w_word, m):
        shorter = _b_from_word((m,) + w_word, rank)
        return len(words[shorter]) < len(w_word)

    best = None
    for _, w_word in words.items():
        if has_left_descent(w_word, x) and has_left_descent(w_word, y):
            if best is None or len(w_word) < len(best):
                best = w_word
    return bword(*best)


def verify_phi(ctx: IntervalCtx, q1_image: GroupWord | None = None) -> VerificationReport:
    rank = ctx.n - 1
    report = VerificationReport(f"phi n={ctx.n} k={ctx.k}")
    for rel in b_type_relations(rank):
        ok = equals(phi(rel.lhs, ctx, q1_image), phi(rel.rhs, ctx, q1_image))
        report.add(f"phi preserves {rel}", ok)

    def as_simple(g: GroupElement):
        if g.delta_exp == 0 and len(g.factors) == 1:
            return g.factors[0]
        if g.delta_exp == 1 and not g.factors:
            return ctx.delta
        return None

    for x in range(1, rank + 1):
        for y in range(x + 1, rank + 1):
            px = as_simple(phi(bword(x), ctx, q1_image))
            py = as_simple(phi(bword(y), ctx, q1_image))
            lcm = lcm_b(x, y, rank)
            target = phi(lcm, ctx, q1_image)
            if px is None or py is None:
                report.add(f"phi(q{x}) v phi(q{y}) = phi({format_bword(lcm)})", False,
                           "generator image is not a simple")
                continue
            joined = GroupElement.canonical(ctx, 0, [join_left(px, py, ctx)])
            report.add(f"phi(q{x}) v phi(q{y}) = phi({format_bword(lcm)})", equals(joined, target))
    garside = phi(b_type_garside_word(rank), ctx, q1_image)
    report.add("phi(type-B Garside element) = Delta", equals(garside, GroupElement.delta(ctx)))
    return report


# -- relabelling between structures --------------------------------------------

LetterMap = Callable[[Generator], Generator]


def negate_t(g: Generator) -> Generator:
    return T(-g.index) if g.kind == "t" else g


def _map_word(w: GroupWord, f: LetterMap) -> GroupWord:
    return tuple((f(g), e) for g, e in w)


def verify_transfer(n: int, source_k: int, target_k: int, bound: int,
                    letter_map: LetterMap = negate_t) -> VerificationReport:
    """Send each defining relation of the source monoid through ``letter_map``
    and check that it holds in the target structure."""
    ctx = IntervalCtx(n, target_k)
    report = VerificationReport(f"transfer k={source_k} -> k={target_k} n={n}")
    for rel in monoid_relations(n, source_k, bound):
        mapped = PresentationRelation(_map_word(rel.lhs, letter_map), _map_word(rel.rhs, letter_map), rel.family)
        ok = equals(from_group_word(mapped.lhs, ctx), from_group_word(mapped.rhs, ctx))
        report.add(f"{rel}  ->  {mapped}", ok)
    return report


def verify_k_iso(n: int, bound: int) -> VerificationReport:
    """t_i -> t_-i carries the k = -1 relations onto k = 1 relations and back."""
    report = VerificationReport(f"k-iso n={n} bound={bound}")
    for src, dst in ((-1, 1), (1, -1)):
        sub = verify_transfer(n, src, dst, bound, negate_t)
        report.checks.extend(sub.checks)
    return report
