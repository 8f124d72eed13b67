"""Emerson-Lei acceptance conditions over transition colours.

A condition is a positive Boolean formula over the atoms ``Inf(c)`` (colour
c appears infinitely often) and ``Fin(c)`` (colour c appears finitely
often).  A set of colours M, read as "the colours seen infinitely often
along a run", satisfies the formula under the usual inductive reading.
Buchi acceptance is the special case ``Inf(0)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "Acc",
    "Inf",
    "Fin",
    "And",
    "Or",
    "satisfies",
    "shift",
    "leaf_colours",
    "conjoin",
    "disjoin",
    "format_acc",
    "parse_acc",
    "to_dnf",
    "DNF_LIMIT",
]


@dataclass(frozen=True)
class Inf:
    colour: int


@dataclass(frozen=True)
class Fin:
    colour: int


@dataclass(frozen=True)
class And:
    left: "Acc"
    right: "Acc"


@dataclass(frozen=True)
class Or:
    left: "Acc"
    right: "Acc"


Acc = Union[Inf, Fin, And, Or]

# DNF conversion refuses to produce more disjuncts than this.
DNF_LIMIT = 4096


def satisfies(colours, cond: Acc) -> bool:
    """Decide whether the infinitely-occurring colour set satisfies cond."""
    if isinstance(cond, Inf):
        return cond.colour in colours
    if isinstance(cond, Fin):
        return cond.colour not in colours
    if isinstance(cond, And):
        return satisfies(colours, cond.left) and satisfies(colours, cond.right)
    if isinstance(cond, Or):
        return satisfies(colours, cond.left) or satisfies(colours, cond.right)
    raise TypeError(f"not an acceptance condition: {cond!r}")


def shift(cond: Acc, offset: int) -> Acc:
    """Rename every colour c to c + offset."""
    if isinstance(cond, Inf):
        return Inf(cond.colour + offset)
    if isinstance(cond, Fin):
        return Fin(cond.colour + offset)
    if isinstance(cond, And):
        return And(shift(cond.left, offset), shift(cond.right, offset))
    if isinstance(cond, Or):
        return Or(shift(cond.left, offset), shift(cond.right, offset))
    raise TypeError(f"not an acceptance condition: {cond!r}")


def leaf_colours(cond: Acc) -> frozenset[int]:
    if isinstance(cond, (Inf, Fin)):
        return frozenset((cond.colour,))
    return leaf_colours(cond.left) | leaf_colours(cond.right)


def conjoin(conds: Iterable[Acc]) -> Acc:
    """Left fold of And; at least one conjunct is required."""
    items = list(conds)
    if not items:
        raise ValueError("cannot conjoin zero conditions")
    out = items[0]
    for c in items[1:]:
        out = And(out, c)
    return out


def disjoin(conds: Iterable[Acc]) -> Acc:
    items = list(conds)
    if not items:
        raise ValueError("cannot disjoin zero conditions")
    out = items[0]
    for c in items[1:]:
        out = Or(out, c)
    return out


def format_acc(cond: Acc) -> str:
    """Render in HOA syntax; & binds tighter than |."""
    if isinstance(cond, Inf):
        return f"Inf({cond.colour})"
    if isinstance(cond, Fin):
        return f"Fin({cond.colour})"
    if isinstance(cond, And):
        return f"{_fmt_and_arg(cond.left)} & {_fmt_and_arg(cond.right)}"
    if isinstance(cond, Or):
        return f"{format_acc(cond.left)} | {format_acc(cond.right)}"
    raise TypeError(f"not an acceptance condition: {cond!r}")


def _fmt_and_arg(cond: Acc) -> str:
    if isinstance(cond, Or):
        return f"({format_acc(cond)})"
    return format_acc(cond)


_ACC_TOKEN = re.compile(r"\s*(Inf|Fin|\(|\)|&|\||\d+|[tf]\b)")


def parse_acc(text: str) -> Acc:
    """Parse an HOA acceptance formula (Inf/Fin atoms, & and |, parens).

    The constant formulas t and f have no counterpart here and are
    rejected.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _ACC_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"bad acceptance formula near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()

    def parse_or(i):
        node, i = parse_and(i)
        while i < len(tokens) and tokens[i] == "|":
            rhs, i = parse_and(i + 1)
            node = Or(node, rhs)
        return node, i

    def parse_and(i):
        node, i = parse_atom(i)
        while i < len(tokens) and tokens[i] == "&":
            rhs, i = parse_atom(i + 1)
            node = And(node, rhs)
        return node, i

    def parse_atom(i):
        if i >= len(tokens):
            raise ValueError("truncated acceptance formula")
        tok = tokens[i]
        if tok in ("Inf", "Fin"):
            if i + 3 >= len(tokens) or tokens[i + 1] != "(" or tokens[i + 3] != ")":
                raise ValueError(f"malformed {tok} atom in acceptance formula")
            if not tokens[i + 2].isdigit():
                raise ValueError(f"acceptance set must be a plain index, got {tokens[i + 2]!r}")
            atom = Inf(int(tokens[i + 2])) if tok == "Inf" else Fin(int(tokens[i + 2]))
            return atom, i + 4
        if tok == "(":
            node, i = parse_or(i + 1)
            if i >= len(tokens) or tokens[i] != ")":
                raise ValueError("unbalanced parentheses in acceptance formula")
            return node, i + 1
        if tok in ("t", "f"):
            raise ValueError(f"constant acceptance {tok!r} is not supported")
        raise ValueError(f"unexpected token {tok!r} in acceptance formula")

    node, i = parse_or(0)
    if i != len(tokens):
        raise ValueError(f"trailing tokens in acceptance formula: {tokens[i:]!r}")
    return node


def to_dnf(cond: Acc) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Disjunctive normal form as (fin_colours, inf_colours) pairs.

    Raises ValueError when the result would exceed DNF_LIMIT disjuncts.
    """
    if isinstance(cond, Inf):
        return [(frozenset(), frozenset((cond.colour,)))]
    if isinstance(cond, Fin):
        return [(frozenset((cond.colour,)), frozenset())]
    if isinstance(cond, Or):
        out = to_dnf(cond.left) + to_dnf(cond.right)
        if len(out) > DNF_LIMIT:
            raise ValueError(f"acceptance condition DNF exceeds {DNF_LIMIT} disjuncts")
        return out
    if isinstance(cond, And):
        left = to_dnf(cond.left)
        right = to_dnf(cond.right)
        if len(left) * len(right) > DNF_LIMIT:
            raise ValueError(f"acceptance condition DNF exceeds {DNF_LIMIT} disjuncts")
        return [(fl | fr, il | ir) for fl, il in left for fr, ir in right]
    raise TypeError(f"not an acceptance condition: {cond!r}")
