"""Exact arithmetic in G(oo,oo,n).

Elements are n x n monomial matrices whose nonzero entries are integer
powers of a formal parameter x, with the product of the entries equal to 1.
A matrix is stored as a pair ``(perm, exps)``: row ``i`` has its nonzero
entry ``x**exps[i-1]`` in column ``perm[i-1]`` (rows and columns 1-based).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class WordParseError(ValueError):
    """Raised on malformed word text; carries the offending token and offset."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


@dataclass(frozen=True, slots=True)
class MonomialMatrix:
    n: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"dimension must be >= 2, got {self.n}")
        if len(self.perm) != self.n or len(self.exps) != self.n:
            raise ValueError("perm and exps must have length n")
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError(f"perm {self.perm} is not a permutation of 1..{self.n}")
        if sum(self.exps) != 0:
            raise ValueError(f"exponent sum must be 0, got {sum(self.exps)}")

    @classmethod
    def identity(cls, n: int) -> MonomialMatrix:
        return cls(n, tuple(range(1, n + 1)), (0,) * n)

    @classmethod
    def diagonal(cls, exps: Sequence[int]) -> MonomialMatrix:
        n = len(exps)
        return cls(n, tuple(range(1, n + 1)), tuple(exps))

    @classmethod
    def from_rows(cls, rows: Sequence[tuple[int, int]]) -> MonomialMatrix:
        """Build from ``[(column, exponent), ...]`` listed row by row."""
        return cls(len(rows), tuple(c for c, _ in rows), tuple(e for _, e in rows))

    def entry(self, i: int, c: int) -> int | None:
        """Exponent of the entry at ``[i, c]``, or None when that entry is 0."""
        if self.perm[i - 1] == c:
            return self.exps[i - 1]
        return None

    def is_identity(self) -> bool:
        return self.is_diagonal() and not any(self.exps)

    def is_diagonal(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm, 1))

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        return mul(self, other)

    def __repr__(self):
        return f"MonomialMatrix(n={self.n}, perm={self.perm}, exps={self.exps})"

    def pretty(self) -> str:
        """Dense rendering, one row per line."""
        lines = []
        for i in range(self.n):
            cells = []
            for c in range(1, self.n + 1):
                if self.perm[i] != c:
                    cells.append("0")
                else:
                    e = self.exps[i]
                    cells.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
            lines.append("  ".join(f"{cell:>5}" for cell in cells))
        return "\n".join(lines)


def mul(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    perm = tuple(b.perm[p - 1] for p in a.perm)
    exps = tuple(e + b.exps[p - 1] for p, e in zip(a.perm, a.exps))
    return MonomialMatrix(a.n, perm, exps)


def inv(a: MonomialMatrix) -> MonomialMatrix:
    perm = [0] * a.n
    exps = [0] * a.n
    for i, (p, e) in enumerate(zip(a.perm, a.exps), 1):
        perm[p - 1] = i
        exps[p - 1] = -e
    return MonomialMatrix(a.n, tuple(perm), tuple(exps))


def product(mats: Iterable[MonomialMatrix], n: int) -> MonomialMatrix:
    out = MonomialMatrix.identity(n)
    for m in mats:
        out = mul(out, m)
    return out


# -- generators and words ---------------------------------------------------


@dataclass(frozen=True, slots=True, order=True)
class Generator:
    """``t_i`` (kind 't', any integer index) or ``s_j`` (kind 's', j >= 3)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("t", "s"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "s" and self.index < 3:
            raise ValueError(f"s_j needs j >= 3, got s{self.index}")

    def __str__(self):
        return f"t[{self.index}]" if self.kind == "t" else f"s{self.index}"


def T(i: int) -> Generator:
    return Generator("t", i)


def S(j: int) -> Generator:
    # s_2 is an alias of t_0
    if j == 2:
        return T(0)
    return Generator("s", j)


# A letter is (generator, +1 | -1); a word is a tuple of letters.
Letter = tuple[Generator, int]
GroupWord = tuple[Letter, ...]


def word(*gens: Generator) -> GroupWord:
    """Positive word from generators."""
    return tuple((g, 1) for g in gens)


def inverse_word(w: GroupWord) -> GroupWord:
    return tuple((g, -e) for g, e in reversed(w))


def is_positive(w: GroupWord) -> bool:
    return all(e == 1 for _, e in w)


def free_reduce(w: Iterable[Letter]) -> GroupWord:
    out: list[Letter] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def check_letter(g: Generator, n: int):
    if g.kind == "s" and g.index > n:
        raise ValueError(f"{g} is not a generator for n={n} (need 3 <= j <= {n})")


def generator_matrix(g: Generator, n: int) -> MonomialMatrix:
    check_letter(g, n)
    perm = list(range(1, n + 1))
    exps = [0] * n
    if g.kind == "t":
        perm[0], perm[1] = 2, 1
        exps[0], exps[1] = -g.index, g.index
    else:
        j = g.index
        perm[j - 2], perm[j - 1] = j, j - 1
    return MonomialMatrix(n, tuple(perm), tuple(exps))


def eval_word(w: Iterable[Letter], n: int) -> MonomialMatrix:
    """Image in G(oo,oo,n); generators are involutions so signs are ignored."""
    out = MonomialMatrix.identity(n)
    for g, _ in w:
        out = mul(out, generator_matrix(g, n))
    return out


# -- text formats -----------------------------------------------------------

_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"^(?:t\[(?P<t>[+-]?\d+)\]|s(?P<s>\d+))(?P<inv>\^-1)?$")


def parse_word(text: str, n: int | None = None) -> GroupWord:
    """Parse whitespace-separated letters such as ``t[-1]^-1 s3 t[2]``."""
    letters = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        lm = _LETTER.match(tok)
        if lm is None:
            raise WordParseError("unrecognised token", tok, m.start())
        if lm.group("t") is not None:
            g = T(int(lm.group("t")))
        else:
            j = int(lm.group("s"))
            if j < 3 or (n is not None and j > n):
                hi = "n" if n is None else str(n)
                raise WordParseError(f"s-index outside 3..{hi}", tok, m.start())
            g = Generator("s", j)
        letters.append((g, -1 if lm.group("inv") else 1))
    return tuple(letters)


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(str(g) + ("^-1" if e < 0 else "") for g, e in w)


def matrix_to_json(m: MonomialMatrix) -> dict:
    return {"n": m.n, "perm": list(m.perm), "exps": list(m.exps)}


def matrix_from_json(data: dict | str) -> MonomialMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return MonomialMatrix(int(data["n"]), tuple(data["perm"]), tuple(data["exps"]))
    except KeyError as err:
        raise ValueError(f"matrix JSON is missing field {err}") from None
