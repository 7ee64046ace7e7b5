"""Greedy normal forms in the interval monoid of [1, lambda^k] and its group.

A group element is stored as ``Delta^m x_1 ... x_r`` where the x_i are
simples (elements of [1, lambda^k]), no x_i is trivial, x_1 != Delta, and
each adjacent pair is left-weighted: the only common left divisor of the
complement of x_i and x_{i+1} is 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geodesic import lambda_power, reduced_expression
from .interval import IntervalCtx, complement_right, in_interval, meet_left
from .monomial import (
    Generator,
    GroupWord,
    MonomialMatrix,
    format_word,
    generator_matrix,
    inv,
    mul,
    product,
)
from .presentations import PresentationRelation, VerificationReport, monoid_relations


def tau(w: MonomialMatrix, ctx: IntervalCtx, power: int = 1) -> MonomialMatrix:
    """Conjugation ``Delta^-p w Delta^p``; maps simples to simples."""
    if power == 0:
        return w
    d = lambda_power(ctx.n, ctx.k * power)
    out = mul(mul(inv(d), w), d)
    assert in_interval(out, ctx) or not in_interval(w, ctx), "tau left the interval"
    return out


def is_left_weighted(u: MonomialMatrix, v: MonomialMatrix, ctx: IntervalCtx) -> bool:
    return meet_left(complement_right(u, ctx), v, ctx).is_identity()


def left_weighted_pair(u: MonomialMatrix, v: MonomialMatrix, ctx: IntervalCtx):
    """Slide the largest possible left part of ``v`` into ``u``."""
    w = meet_left(complement_right(u, ctx), v, ctx)
    if w.is_identity():
        return u, v
    return mul(u, w), mul(inv(w), v)


def normal_form(factors, ctx: IntervalCtx) -> tuple[MonomialMatrix, ...]:
    """Left-greedy normal form of a product of simples (leading Deltas kept).

    Repeated left-to-right passes of ``left_weighted_pair``; each change
    makes the sequence of factor lengths lexicographically larger, so the
    loop terminates.
    """
    ctx.require(*factors)
    fs = [f for f in factors if not f.is_identity()]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            u, v = left_weighted_pair(fs[i], fs[i + 1], ctx)
            if u != fs[i]:
                fs[i], fs[i + 1] = u, v
                changed = True
        fs = [f for f in fs if not f.is_identity()]
    return tuple(fs)


def _append_simple(fs: list[MonomialMatrix], s: MonomialMatrix, ctx: IntervalCtx) -> list[MonomialMatrix]:
    # single right-to-left sweep; fs must already be left-weighted
    fs = fs + [s]
    for i in range(len(fs) - 2, -1, -1):
        u, v = left_weighted_pair(fs[i], fs[i + 1], ctx)
        if u == fs[i]:
            break
        fs[i], fs[i + 1] = u, v
    return [f for f in fs if not f.is_identity()]


@dataclass(frozen=True)
class GroupElement:
    ctx: IntervalCtx
    delta_exp: int
    factors: tuple[MonomialMatrix, ...]

    @classmethod
    def identity(cls, ctx: IntervalCtx) -> GroupElement:
        return cls(ctx, 0, ())

    @classmethod
    def canonical(cls, ctx: IntervalCtx, delta_exp: int, factors) -> GroupElement:
        fs = list(normal_form(factors, ctx))
        while fs and fs[0] == ctx.delta:
            fs.pop(0)
            delta_exp += 1
        return cls(ctx, delta_exp, tuple(fs))

    @classmethod
    def delta(cls, ctx: IntervalCtx, power: int = 1) -> GroupElement:
        return cls(ctx, power, ())

    def _strip(self, fs: list[MonomialMatrix], m: int) -> GroupElement:
        delta = self.ctx.delta
        while fs and fs[0] == delta:
            fs.pop(0)
            m += 1
        return GroupElement(self.ctx, m, tuple(fs))

    def times_simple(self, s: MonomialMatrix) -> GroupElement:
        self.ctx.require(s)
        if s.is_identity():
            return self
        return self._strip(_append_simple(list(self.factors), s, self.ctx), self.delta_exp)

    def times_simple_inverse(self, s: MonomialMatrix) -> GroupElement:
        # s^-1 = (s^-1 Delta) Delta^-1, then move Delta^-1 to the front
        g = self.times_simple(complement_right(s, self.ctx))
        return g.times_delta(-1)

    def times_delta(self, p: int) -> GroupElement:
        # Delta^m X Delta^p = Delta^(m+p) tau^p(X)
        fs = tuple(tau(f, self.ctx, p) for f in self.factors)
        return GroupElement(self.ctx, self.delta_exp + p, fs)

    def times_letter(self, g: Generator, sign: int) -> GroupElement:
        m = generator_matrix(g, self.ctx.n)
        return self.times_simple(m) if sign > 0 else self.times_simple_inverse(m)

    def __mul__(self, other: GroupElement) -> GroupElement:
        if other.ctx != self.ctx:
            raise ValueError("cannot mix interval contexts")
        out = self.times_delta(other.delta_exp)
        for f in other.factors:
            out = out.times_simple(f)
        return out

    def inverse(self) -> GroupElement:
        out = GroupElement.identity(self.ctx)
        for f in reversed(self.factors):
            out = out.times_simple_inverse(f)
        return out.times_delta(-self.delta_exp)

    def project(self) -> MonomialMatrix:
        """Image in G(oo,oo,n)."""
        n = self.ctx.n
        head = MonomialMatrix.identity(n)
        if self.delta_exp:
            head = lambda_power(n, self.ctx.k * self.delta_exp)
        return mul(head, product(self.factors, n))

    def is_positive(self) -> bool:
        return self.delta_exp >= 0

    def __str__(self):
        return format_normal_form(self)


def format_normal_form(g: GroupElement) -> str:
    parts = [f"Δ^{g.delta_exp}"]
    parts.extend(format_word(reduced_expression(f)) for f in g.factors)
    return " | ".join(parts)


def from_group_word(w: GroupWord, ctx: IntervalCtx) -> GroupElement:
    out = GroupElement.identity(ctx)
    for g, e in w:
        out = out.times_letter(g, e)
    return out


def positive_normal_form(w: GroupWord, ctx: IntervalCtx) -> tuple[MonomialMatrix, ...]:
    """Normal form (leading Deltas included) of a positive word."""
    if any(e < 0 for _, e in w):
        raise ValueError("word has inverse letters")
    return normal_form([generator_matrix(g, ctx.n) for g, _ in w], ctx)


def equals(g1: GroupElement, g2: GroupElement) -> bool:
    if g1.ctx != g2.ctx:
        raise ValueError("cannot compare elements of different interval contexts")
    return g1.delta_exp == g2.delta_exp and g1.factors == g2.factors


def word_problem(w1: GroupWord, w2: GroupWord, ctx: IntervalCtx) -> bool:
    return equals(from_group_word(w1, ctx), from_group_word(w2, ctx))


def verify_relations(relations, ctx: IntervalCtx, suite: str = "relations") -> VerificationReport:
    report = VerificationReport(suite)
    for rel in relations:
        lhs = from_group_word(rel.lhs, ctx)
        rhs = from_group_word(rel.rhs, ctx)
        ok = equals(lhs, rhs)
        report.add(f"[{rel.family}] {rel}", ok, "" if ok else f"{lhs}  vs  {rhs}")
    return report


def verify_monoid_relations(
    ctx: IntervalCtx, index_bound: int, extra: list[PresentationRelation] | tuple = ()
) -> VerificationReport:
    """Check every defining relation (t-indices within the bound) by normal forms."""
    if index_bound < 1:
        raise ValueError("index_bound must be >= 1")
    rels = monoid_relations(ctx.n, ctx.k, index_bound) + list(extra)
    return verify_relations(rels, ctx, suite=f"monoid n={ctx.n} k={ctx.k}")
