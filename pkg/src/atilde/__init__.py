"""Interval Garside structures for the affine Artin group of type A~_{n-1}.

Computation happens in G(oo,oo,n), the group of monomial matrices with
entries x^k (x formal) whose entries multiply to 1.
"""
from .garside import GroupElement, from_group_word, normal_form, word_problem
from .geodesic import lambda_power, left_descents, length, reduced_expression
from .interval import IntervalCtx, in_interval, join_left, join_right, meet_left, meet_right
from .monomial import (
    Generator,
    MonomialMatrix,
    S,
    T,
    eval_word,
    format_word,
    generator_matrix,
    inv,
    mul,
    parse_word,
)

__all__ = [
    "Generator",
    "GroupElement",
    "IntervalCtx",
    "MonomialMatrix",
    "S",
    "T",
    "eval_word",
    "format_word",
    "from_group_word",
    "generator_matrix",
    "in_interval",
    "inv",
    "join_left",
    "join_right",
    "lambda_power",
    "left_descents",
    "length",
    "meet_left",
    "meet_right",
    "mul",
    "normal_form",
    "parse_word",
    "reduced_expression",
    "word_problem",
]
