"""Young diagrams inside an n x m rectangle.

A partition is a plain tuple ``(l1, ..., ln)`` with ``m >= l1 >= ... >= ln >= 0``.
Rows of the rectangle are numbered 1..n from the top, columns 1..m from the
left, and the diagram sits in the bottom-left corner, so row ``i`` holds
``lam[n - i]`` boxes.  Use :meth:`RectConfig.boxes_in_row` rather than
re-deriving that reversal.

Roots ``+-(e_i - d_j)`` are 1-based, like the box coordinates they label.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import NamedTuple

from .errors import InvalidPartition, InvalidWord, NonCoprimeConfig, NotACorner, PredicateViolated

Partition = tuple


class Root(NamedTuple):
    """The isotropic root ``sign * (e_i - d_j)``; ``sign`` is +1 or -1."""

    i: int
    j: int
    sign: int = 1

    def __neg__(self):
        return Root(self.i, self.j, -self.sign)

    @property
    def positive(self):
        return Root(self.i, self.j, 1)

    def label(self):
        return f"{'+' if self.sign > 0 else '-'}e{self.i}-d{self.j}"

    def to_json(self):
        return {"i": self.i, "j": self.j, "sign": "+" if self.sign > 0 else "-"}

    @classmethod
    def from_json(cls, obj):
        sign = obj.get("sign", "+")
        if sign not in ("+", "-"):
            raise ValueError(f"bad root sign {sign!r}")
        return cls(int(obj["i"]), int(obj["j"]), 1 if sign == "+" else -1)

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class RectConfig:
    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)) or self.n < 1 or self.m < 1:
            raise ValueError(f"rectangle needs n, m >= 1, got {self.n}x{self.m}")

    @property
    def coprime(self):
        return gcd(self.n, self.m) == 1

    def require_coprime(self):
        if not self.coprime:
            raise NonCoprimeConfig(f"n={self.n} and m={self.m} are not coprime")

    @cached_property
    def partitions(self):
        """All diagrams in the rectangle, sorted."""
        parts = []
        for combo in itertools.combinations_with_replacement(range(self.m + 1), self.n):
            parts.append(tuple(sorted(combo, reverse=True)))
        return tuple(sorted(parts))

    @cached_property
    def positive_roots(self):
        return tuple(Root(i, j, 1) for i in range(1, self.n + 1) for j in range(1, self.m + 1))

    @cached_property
    def signed_roots(self):
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    def validate(self, lam):
        lam = tuple(lam)
        if len(lam) != self.n:
            raise InvalidPartition(f"expected {self.n} parts, got {lam}")
        for p in lam:
            if not isinstance(p, int) or p < 0 or p > self.m:
                raise InvalidPartition(f"part {p!r} outside [0, {self.m}] in {lam}")
        if any(lam[k] < lam[k + 1] for k in range(self.n - 1)):
            raise InvalidPartition(f"{lam} is not weakly decreasing")
        return lam

    def validate_root(self, alpha):
        if not (1 <= alpha.i <= self.n and 1 <= alpha.j <= self.m and alpha.sign in (1, -1)):
            raise ValueError(f"root {alpha} does not label a box of the {self.n}x{self.m} rectangle")
        return alpha

    def boxes_in_row(self, lam, i):
        """Number of boxes of ``lam`` in row ``i`` (1 = top row)."""
        return lam[self.n - i]

    def contains_box(self, lam, i, j):
        return lam[self.n - i] >= j

    def empty(self):
        return (0,) * self.n

    def full(self):
        return (self.m,) * self.n

    def transport(self, alpha, i, j):
        """Apply ``eta**i nu**j`` to a root: ``e_r - d_s -> e_{r+j} - d_{s-i}`` (cyclic)."""
        return Root((alpha.i - 1 + j) % self.n + 1, (alpha.j - 1 - i) % self.m + 1, alpha.sign)


def size(lam):
    return sum(lam)


def dual(cfg, lam):
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, cfg.m + 1))


def to_word(cfg, lam):
    """Labels of the upper border of ``lam``, top-left to bottom-right."""
    out = []
    prev = 0
    for i in range(1, cfg.n + 1):
        row = cfg.boxes_in_row(lam, i)
        out.append("r" * (row - prev))
        out.append("d")
        prev = row
    out.append("r" * (cfg.m - prev))
    return "".join(out)


def from_word(cfg, word):
    if len(word) != cfg.n + cfg.m or word.count("r") != cfg.m or word.count("d") != cfg.n:
        raise InvalidWord(f"{word!r} needs {cfg.m} r's and {cfg.n} d's")
    rows = []
    seen = 0
    for letter in word:
        if letter == "r":
            seen += 1
        else:
            rows.append(seen)
    return tuple(reversed(rows))


def is_outer_corner(cfg, lam, i, j, lam_dual=None):
    lam_dual = lam_dual or dual(cfg, lam)
    return lam[cfg.n - i] == j - 1 and lam_dual[j - 1] == cfg.n - i


def is_inner_corner(cfg, lam, i, j, lam_dual=None):
    lam_dual = lam_dual or dual(cfg, lam)
    return lam[cfg.n - i] == j and lam_dual[j - 1] == cfg.n + 1 - i


def in_domain(cfg, lam, alpha):
    """True iff ``lam`` is in X_alpha (outer corner for +, inner corner for -)."""
    if alpha.sign > 0:
        return is_outer_corner(cfg, lam, alpha.i, alpha.j)
    return is_inner_corner(cfg, lam, alpha.i, alpha.j)


def corners(cfg, lam, sign=1):
    """Roots ``alpha`` of the given sign with ``lam`` in X_alpha, sorted by row."""
    lam_dual = dual(cfg, lam)
    found = []
    for i in range(1, cfg.n + 1):
        row = lam[cfg.n - i]
        if sign > 0:
            j = row + 1
            if j <= cfg.m and lam_dual[j - 1] == cfg.n - i:
                found.append(Root(i, j, 1))
        else:
            j = row
            if j >= 1 and lam_dual[j - 1] == cfg.n + 1 - i:
                found.append(Root(i, j, -1))
    return found


def outer_corners(cfg, lam):
    """The set z(lam) of positive roots whose box is an outer corner."""
    return frozenset(corners(cfg, lam, 1))


def apply_t(cfg, lam, alpha):
    if not in_domain(cfg, lam, alpha):
        kind = "outer" if alpha.sign > 0 else "inner"
        raise NotACorner(f"box e{alpha.i}-d{alpha.j} is not an {kind} corner of {lam}")
    k = cfg.n - alpha.i
    return lam[:k] + (lam[k] + alpha.sign,) + lam[k + 1:]


class RowColFlags(NamedTuple):
    row_full: bool
    row_empty: bool
    col_full: bool
    col_empty: bool


def row_col_predicates(cfg, lam):
    lam_dual = dual(cfg, lam)
    return RowColFlags(
        row_full=lam[0] == cfg.m,
        row_empty=lam[-1] == 0,
        col_full=lam_dual[0] == cfg.n,
        col_empty=lam_dual[-1] == 0,
    )


def drop_row(cfg, lam):
    if lam[0] != cfg.m:
        raise PredicateViolated(f"{lam} is not row full")
    return lam[1:] + (0,)


def add_row(cfg, lam):
    if lam[-1] != 0:
        raise PredicateViolated(f"{lam} is not row empty")
    return (cfg.m,) + lam[:-1]


def drop_col(cfg, lam):
    if lam[-1] == 0:
        raise PredicateViolated(f"{lam} is not column full")
    return tuple(p - 1 for p in lam)


def add_col(cfg, lam):
    if lam[0] == cfg.m:
        raise PredicateViolated(f"{lam} is not column empty")
    return tuple(p + 1 for p in lam)


class PseudoFlags(NamedTuple):
    has_outer_pseudo: bool
    is_reduced: bool


def hook_shape(cfg):
    """The diagram (m, 1^(n-1))."""
    return (cfg.m,) + (1,) * (cfg.n - 1)


def contains(outer, inner):
    return all(a >= b for a, b in zip(outer, inner))


def pseudo_flags(cfg, lam):
    # (m, 1^(n-1)) inside lam: bottom row full and every row non-empty
    has_outer = contains(lam, hook_shape(cfg))
    reduced = lam[-1] == 0 and lam[0] < cfg.m
    return PseudoFlags(has_outer, reduced)


def root_above(alpha):
    """The box directly above ``alpha``, or None in the top row."""
    return Root(alpha.i - 1, alpha.j, 1) if alpha.i > 1 else None


def root_right(cfg, alpha):
    return Root(alpha.i, alpha.j + 1, 1) if alpha.j < cfg.m else None


def corner_step_expectation(cfg, lam, alpha):
    """Predicted change of the outer-corner set when the box ``alpha`` is added.

    Returns ``(kept, gained)``: ``kept`` is z(lam) without ``alpha`` and
    ``gained`` the subset of {box above, box to the right} that become outer
    corners, read off from ``lam`` alone.
    """
    n = cfg.n
    i, j = alpha.i, alpha.j
    lam_dual = dual(cfg, lam)
    kept = outer_corners(cfg, lam) - {alpha.positive}
    gained = set()
    right = root_right(cfg, alpha)
    if right is not None and lam_dual[j] == n - i:
        gained.add(right)
    up = root_above(alpha)
    if up is not None and lam[n + 1 - i] == j - 1:
        gained.add(up)
    return kept, frozenset(gained)
