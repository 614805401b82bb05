"""The Sergeev-Veselov action of the isotropic groupoid on integer supervectors.

A supervector ``(a_1..a_n | b_1..b_m)`` pairs with ``e_i - d_j`` to ``a_i - b_j``.
For the parameter ``kappa = -p/q`` the positive morphism at ``e_i - d_j`` is
defined on ``a_i - b_j = 0`` and adds ``q`` to ``a_i`` and ``p`` to ``b_j``;
its inverse is defined on ``a_i - b_j = q - p``.  A positive parameter
``+p/q`` is handled as ``-(-p)/q``, i.e. ``b_j`` moves by ``-p``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from . import classes as cl
from . import diagrams as dg
from .diagrams import Root
from .errors import AmbiguousPath, NotOnHyperplane


@dataclass(frozen=True, order=True)
class SuperVector:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))

    def translate(self, c):
        """Add ``c`` to every coordinate."""
        return SuperVector(tuple(x + c for x in self.a), tuple(x + c for x in self.b))

    @property
    def max_abs(self):
        return max(map(abs, self.a + self.b))

    def to_json(self):
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(int(x) for x in obj["a"]), tuple(int(x) for x in obj["b"]))

    @classmethod
    def from_flat(cls, values, n):
        values = tuple(values)
        return cls(values[:n], values[n:])

    def __str__(self):
        return "(" + ",".join(map(str, self.a)) + "|" + ",".join(map(str, self.b)) + ")"


_KAPPA_RE = re.compile(r"^\s*([+-]?)\s*(\d+)\s*/\s*(\d+)\s*$")


@dataclass(frozen=True)
class Kappa:
    """``kappa = sign * p / q`` held exactly."""

    p: int
    q: int
    sign: int = -1

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("kappa needs p, q >= 1")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"kappa {self.p}/{self.q} is not in lowest terms")
        if self.sign not in (1, -1):
            raise ValueError("kappa sign must be +1 or -1")

    @classmethod
    def parse(cls, text):
        match = _KAPPA_RE.match(text)
        if not match:
            raise ValueError(f"cannot parse kappa {text!r}; expected e.g. -3/2")
        sign, p, q = match.groups()
        return cls(int(p), int(q), -1 if sign == "-" else 1)

    @classmethod
    def default(cls, cfg):
        """``kappa = -m/n``."""
        return cls(cfg.m, cfg.n, -1)

    @property
    def b_step(self):
        return self.p if self.sign < 0 else -self.p

    @property
    def neg_threshold(self):
        """The pairing value on the hyperplane of a negative morphism."""
        return self.q - self.b_step

    def is_special(self, cfg):
        return self.p <= cfg.m and self.q <= cfg.n

    def negative_special(self, cfg):
        return self.sign < 0 and self.is_special(cfg)

    @property
    def value(self):
        return Fraction(self.sign * self.p, self.q)

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}{self.p}/{self.q}"


def form(lam_vec, alpha):
    return alpha.sign * (lam_vec.a[alpha.i - 1] - lam_vec.b[alpha.j - 1])


def in_pi(lam_vec, alpha, kappa):
    v = lam_vec.a[alpha.i - 1] - lam_vec.b[alpha.j - 1]
    return v == 0 if alpha.sign > 0 else v == kappa.neg_threshold


def apply_tau(lam_vec, alpha, kappa):
    if not in_pi(lam_vec, alpha, kappa):
        raise NotOnHyperplane(f"{lam_vec} is not on the hyperplane of {alpha} for kappa {kappa}")
    a = list(lam_vec.a)
    b = list(lam_vec.b)
    a[alpha.i - 1] += alpha.sign * kappa.q
    b[alpha.j - 1] += alpha.sign * kappa.b_step
    return SuperVector(tuple(a), tuple(b))


def rotate_nu(lam_vec, power=1):
    """Entry i of the a-block becomes ``a_{i-power}`` (indices mod n)."""
    a = lam_vec.a
    s = power % len(a)
    return SuperVector(a[-s:] + a[:-s] if s else a, lam_vec.b)


def rotate_eta(lam_vec, power=1):
    """Entry j of the b-block becomes ``b_{j+power}`` (indices mod m)."""
    b = lam_vec.b
    s = power % len(b)
    return SuperVector(lam_vec.a, b[s:] + b[:s])


def base_point(cfg):
    n, m = cfg.n, cfg.m
    return SuperVector(tuple(m * (n - i) for i in range(1, n + 1)),
                       tuple(n * (j - 1) for j in range(1, m + 1)))


def build_x(cfg, lam):
    cfg.require_coprime()
    lam = cfg.validate(lam)
    n, m = cfg.n, cfg.m
    lam_dual = dg.dual(cfg, lam)
    a = tuple(m * (n - i) + n * lam[n - i] for i in range(1, n + 1))
    b = tuple(n * (j - 1) + m * lam_dual[j - 1] for j in range(1, m + 1))
    return SuperVector(a, b)


def build_x_hat(cfg, lam, k, decomposition=None):
    """``eta^-i nu^-j x(lam) + (i*n + j*m)`` where ``k = i*n + j*m``."""
    cfg.require_coprime()
    cl.check_k(k)
    if decomposition is None:
        i, j = cl.decompose(cfg, k)
    else:
        i, j = decomposition
        if i * cfg.n + j * cfg.m != k:
            raise ValueError(f"({i}, {j}) does not decompose k={k}")
    vec = rotate_eta(rotate_nu(build_x(cfg, lam), -j), -i)
    return vec.translate(k)


def x_hat(cfg, c):
    """Image of an equivalence class (computed at its canonical member)."""
    return build_x_hat(cfg, c.canonical.lam, c.canonical.k)


def matrix(lam_vec):
    return tuple(tuple(x - y for y in lam_vec.b) for x in lam_vec.a)


class AugMatrix(NamedTuple):
    core: tuple
    left: tuple
    top: tuple

    def render(self, zeros_only=False):
        """Plain-text block layout: top row holds the b-block, left column the a-block."""
        cells = [[str(v) if (v == 0 or not zeros_only) else "." for v in row] for row in self.core]
        width = max(len(s) for s in [*map(str, self.left), *map(str, self.top),
                                     *(c for row in cells for c in row)])
        fmt = lambda s: s.rjust(width)  # noqa: E731
        lines = [fmt("") + " || " + " ".join(fmt(str(t)) for t in self.top)]
        lines.append("=" * len(lines[0]))
        for left, row in zip(self.left, cells):
            lines.append(fmt(str(left)) + " || " + " ".join(fmt(c) for c in row))
        return "\n".join(lines)


def aug_matrix(lam_vec):
    return AugMatrix(matrix(lam_vec), lam_vec.a, lam_vec.b)


def zeros(lam_vec):
    """Positive roots ``alpha`` with ``(Lambda, alpha) = 0``."""
    return frozenset(Root(i + 1, j + 1, 1)
                     for i, x in enumerate(lam_vec.a)
                     for j, y in enumerate(lam_vec.b) if x == y)


def supporting_paths(cfg, lam_vec):
    """Diagrams whose outer corners cover the most zeros of A(Lambda), and that count."""
    zs = zeros(lam_vec)
    best, best_count = [], -1
    for mu in cfg.partitions:
        count = len(zs & dg.outer_corners(cfg, mu))
        if count > best_count:
            best, best_count = [mu], count
        elif count == best_count:
            best.append(mu)
    return best, best_count


def recover_a(cfg, lam_vec):
    """The diagram under the descending path supporting the most zeros of A(Lambda).

    Ties between supporting paths go to the diagram containing all the others.
    A(Lambda) cannot tell the base point from ``x((m^n)) = Lambda_0 + mn``; for
    that zero pattern the borders decide.
    """
    shift = matches_up_to_translation(lam_vec, base_point(cfg))
    if shift is not None:
        return cfg.full() if shift == cfg.m * cfg.n else cfg.empty()
    best, _ = supporting_paths(cfg, lam_vec)
    tops = [mu for mu in best if all(dg.contains(mu, nu) for nu in best)]
    if len(tops) != 1:
        maximal = [mu for mu in best if not any(nu != mu and dg.contains(nu, mu) for nu in best)]
        raise AmbiguousPath(f"{len(maximal)} maximal supporting paths for {lam_vec}: {maximal}")
    return tops[0]


def supported_zeros(cfg, lam_vec):
    """Z(Lambda): the zeros sitting at outer corners of recover_a(Lambda)."""
    return zeros(lam_vec) & dg.outer_corners(cfg, recover_a(cfg, lam_vec))


def matches_up_to_translation(lam_vec, other):
    """``c`` with ``lam_vec == other + c`` on every coordinate, else None."""
    if len(lam_vec.a) != len(other.a) or len(lam_vec.b) != len(other.b):
        return None
    diffs = {x - y for x, y in zip(lam_vec.a + lam_vec.b, other.a + other.b)}
    return diffs.pop() if len(diffs) == 1 else None


def residue_check(cfg, lam_vec):
    return ({x % cfg.n for x in lam_vec.a} == set(range(cfg.n))
            and {y % cfg.m for y in lam_vec.b} == set(range(cfg.m)))


def svdeg(cfg, lam_vec):
    return Fraction(sum(lam_vec.a), cfg.n) - Fraction(cfg.m * (cfg.n - 1), 2)


def svdeg_right(cfg, lam_vec):
    return Fraction(sum(lam_vec.b), cfg.m) - Fraction(cfg.n * (cfg.m - 1), 2)


def zero_pattern_ok(lam_vec):
    """At most one zero of A(Lambda) in each row and each column."""
    zs = zeros(lam_vec)
    rows = [z.i for z in zs]
    cols = [z.j for z in zs]
    return len(set(rows)) == len(rows) and len(set(cols)) == len(cols)


def moves(lam_vec, kappa, roots):
    """``(alpha, target)`` for every root in ``roots`` whose morphism is defined at ``lam_vec``."""
    out = []
    for alpha in roots:
        if in_pi(lam_vec, alpha, kappa):
            out.append((alpha, apply_tau(lam_vec, alpha, kappa)))
    return out


def step_recurrence_violations(cfg, lam, alpha):
    """Compare zero sets and corner sets across one positive step ``lam -> t_alpha(lam)``.

    Checks, for ``Lambda = x(lam)`` and ``Lambda* = tau_alpha(Lambda)``:
    Z and z agree before and after the step; both evolve as
    ``(old - {alpha}) | gained`` where ``gained`` is predicted from ``lam``
    (box above iff ``lam_{n+2-i} = j-1``, box to the right iff
    ``lam'_{j+1} = n-i``); and every other zero of A(Lambda*) sharing a row or
    column with ``alpha`` is one of the two allowed collisions.
    Returns a list of human-readable violations (empty when all hold).
    """
    n, m = cfg.n, cfg.m
    kappa = Kappa.default(cfg)
    i, j = alpha.i, alpha.j
    vec = build_x(cfg, lam)
    lam_star = dg.apply_t(cfg, lam, alpha)
    vec_star = apply_tau(vec, alpha, kappa)
    bad = []
    if vec_star != build_x(cfg, lam_star):
        bad.append("tau does not match x on the step")
    z_old, z_new = dg.outer_corners(cfg, lam), dg.outer_corners(cfg, lam_star)
    big_old, big_new = supported_zeros(cfg, vec), supported_zeros(cfg, vec_star)
    kept, gained = dg.corner_step_expectation(cfg, lam, alpha)
    allowed = {r for r in (dg.root_above(alpha), dg.root_right(cfg, alpha)) if r is not None}
    for name, old, new in (("z", z_old, z_new), ("Z", big_old, big_new)):
        rest = old - {alpha}
        if not rest <= new:
            bad.append(f"{name}: lost {sorted(rest - new)}")
        if not new <= rest | allowed:
            bad.append(f"{name}: unexpected {sorted(new - rest - allowed)}")
        if new != kept | gained:
            bad.append(f"{name}: got {sorted(new)}, predicted {sorted(kept | gained)}")
    if big_old != z_old or big_new != z_new:
        bad.append("Z and z disagree")
    lam_dual = dg.dual(cfg, lam)
    star_has_hook = dg.contains(lam_star, dg.hook_shape(cfg))
    for beta in zeros(vec_star):
        if beta.i == i and beta.j != j:
            row_a = beta.j == j + 1 and lam_dual[j - 1] == lam_dual[j]
            row_b = ((i, j) == (n, m) and (beta.i, beta.j) == (n, 1)
                     and lam_dual[0] == n and lam_dual[m - 1] == 0 and star_has_hook)
            if not (row_a or row_b):
                bad.append(f"row collision at {beta}")
        elif beta.j == j and beta.i != i:
            col_a = beta.i == i - 1 and lam[n - i] == lam[n + 1 - i]
            col_b = ((i, j) == (1, 1) and (beta.i, beta.j) == (n, 1)
                     and lam[0] == m and lam[n - 1] == 0 and star_has_hook)
            if not (col_a or col_b):
                bad.append(f"column collision at {beta}")
    return bad
