"""Defining relations of the presentations in play, plus a report type.

Families:

* ``braid-A``: s_i s_j s_i = s_j s_i s_j for |i - j| = 1
* ``commuting``: s_i s_j = s_j s_i (|i - j| > 1) and s_j t_i = t_i s_j (j >= 4)
* ``s-t braid``: s_3 t_i s_3 = t_i s_3 t_i
* ``dual-free``: t_i t_{i-k} = t_j t_{j-k}
* ``shi``: the extra length-6 relation between s_3, t_1, t_0
* ``quadratic``: g g = 1 (only in G(oo,oo,n))
* ``B-type``: relations of the Artin group of type B on q_1..q_r
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .monomial import GroupWord, Letter, S, T, format_word, word


@dataclass(frozen=True)
class PresentationRelation:
    lhs: tuple
    rhs: tuple
    family: str

    def __str__(self):
        fmt = format_bword if self.family == "B-type" else format_word
        return f"{fmt(self.lhs) or '1'} = {fmt(self.rhs) or '1'}"


def braid_s_relations(n: int) -> list[PresentationRelation]:
    rels = []
    for i in range(3, n + 1):
        for j in range(i + 1, n + 1):
            if j == i + 1:
                rels.append(PresentationRelation(
                    word(S(i), S(j), S(i)), word(S(j), S(i), S(j)), "braid-A"))
            else:
                rels.append(PresentationRelation(
                    word(S(i), S(j)), word(S(j), S(i)), "commuting"))
    return rels


def st_relations(n: int, t_indices: Iterable[int]) -> list[PresentationRelation]:
    rels = []
    for i in t_indices:
        if n >= 3:
            rels.append(PresentationRelation(
                word(S(3), T(i), S(3)), word(T(i), S(3), T(i)), "s-t braid"))
        for j in range(4, n + 1):
            rels.append(PresentationRelation(
                word(S(j), T(i)), word(T(i), S(j)), "commuting"))
    return rels


def dual_free_relations(k: int, bound: int) -> list[PresentationRelation]:
    """t_i t_{i-k} = t_j t_{j-k} for leading indices -bound <= i < j <= bound."""
    idx = range(-bound, bound + 1)
    return [
        PresentationRelation(word(T(i), T(i - k)), word(T(j), T(j - k)), "dual-free")
        for i in idx
        for j in idx
        if i < j
    ]


def monoid_relations(n: int, k: int, bound: int) -> list[PresentationRelation]:
    """Defining relations of the positive monoid attached to lambda^k."""
    return (
        braid_s_relations(n)
        + st_relations(n, range(-bound, bound + 1))
        + dual_free_relations(k, bound)
    )


def cll_relations(n: int, bound: int) -> list[PresentationRelation]:
    return monoid_relations(n, 1, bound)


def shi_relations(n: int) -> list[PresentationRelation]:
    rels = braid_s_relations(n) + st_relations(n, (0, 1))
    if n >= 3:
        lhs = word(S(3), T(1), T(0), S(3), T(1), T(0))
        rhs = word(T(1), T(0), S(3), T(1), T(0), S(3))
        rels.append(PresentationRelation(lhs, rhs, "shi"))
    return rels


def quadratic_relations(n: int, t_indices: Iterable[int]) -> list[PresentationRelation]:
    gens = [T(i) for i in t_indices] + [S(j) for j in range(3, n + 1)]
    return [PresentationRelation(word(g, g), (), "quadratic") for g in gens]


def relator(rel: PresentationRelation) -> GroupWord:
    """The word lhs * rhs^-1, trivial in the group."""
    return tuple(rel.lhs) + tuple((g, -e) for g, e in reversed(rel.rhs))


# -- type B words: letters (m, +-1) for q_m ----------------------------------

BLetter = tuple[int, int]


def bword(*ms: int) -> tuple[BLetter, ...]:
    return tuple((m, 1) for m in ms)


def format_bword(w: Iterable[BLetter]) -> str:
    return " ".join(f"q{m}" + ("^-1" if e < 0 else "") for m, e in w)


def b_type_relations(rank: int) -> list[PresentationRelation]:
    """Artin relations of type B on q_1..q_rank (q_1, q_2 joined by a 4-edge)."""
    rels = []
    for a in range(1, rank + 1):
        for b in range(a + 1, rank + 1):
            if a == 1 and b == 2:
                lhs, rhs = bword(1, 2, 1, 2), bword(2, 1, 2, 1)
            elif b == a + 1:
                lhs, rhs = bword(a, b, a), bword(b, a, b)
            else:
                lhs, rhs = bword(a, b), bword(b, a)
            rels.append(PresentationRelation(lhs, rhs, "B-type"))
    return rels


def b_type_garside_word(rank: int) -> tuple[BLetter, ...]:
    """q_1 (q_2 q_1 q_2) ... (q_r ... q_2 q_1 q_2 ... q_r)."""
    letters = []
    for m in range(1, rank + 1):
        letters.extend(range(m, 0, -1))
        letters.extend(range(2, m + 1))
    return bword(*letters)


# -- random rewriting in the positive monoid ---------------------------------


def _moves(w: Sequence[Letter], n: int, k: int):
    """Yield (start, stop, replacement_factory) for each applicable rewrite."""
    gens = [g for g, _ in w]
    for p in range(len(gens)):
        a = gens[p]
        b = gens[p + 1] if p + 1 < len(gens) else None
        c = gens[p + 2] if p + 2 < len(gens) else None
        if b is None:
            continue
        if c is not None and a == c:
            if a.kind == "s" and b.kind == "s" and abs(a.index - b.index) == 1:
                yield p, p + 3, lambda rng, a=a, b=b: word(b, a, b)
            if a == S(3) and b.kind == "t":
                yield p, p + 3, lambda rng, a=a, b=b: word(b, a, b)
            if a.kind == "t" and b == S(3):
                yield p, p + 3, lambda rng, a=a, b=b: word(b, a, b)
        if a.kind == "s" and b.kind == "s" and abs(a.index - b.index) > 1:
            yield p, p + 2, lambda rng, a=a, b=b: word(b, a)
        if (a.kind == "s" and a.index >= 4 and b.kind == "t") or (
            a.kind == "t" and b.kind == "s" and b.index >= 4
        ):
            yield p, p + 2, lambda rng, a=a, b=b: word(b, a)
        if a.kind == "t" and b.kind == "t" and b.index == a.index - k:
            def fresh(rng, a=a):
                m = a.index + rng.randint(-4, 4)
                return word(T(m), T(m - k))
            yield p, p + 2, fresh


def random_relation_move(w: GroupWord, n: int, k: int, rng: random.Random) -> GroupWord:
    """Apply one randomly chosen defining relation of the monoid to ``w``."""
    moves = list(_moves(w, n, k))
    if not moves:
        return w
    start, stop, repl = rng.choice(moves)
    return tuple(w[:start]) + repl(rng) + tuple(w[stop:])


# -- reports -----------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.__dict__ for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "")
                 for c in self.checks]
        lines.append(f"{self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)} passed")
        return "\n".join(lines)
