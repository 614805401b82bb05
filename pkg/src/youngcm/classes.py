"""Labelled diagrams ``(lam, k)``, their equivalence classes and the groupoid action on them.

``(lam, k) ~ (lam minus bottom row, k + m)`` when the bottom row is full, and
``(lam, k) ~ (lam minus first column, k + n)`` when the first column is full.
For coprime ``n, m`` every class has exactly ``m + n`` members, obtained by
rotating the border word of ``lam``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from . import diagrams as dg
from .diagrams import Root
from .errors import CapExceeded, KOutOfRange, NotComparable, NotInDomain

K_LIMIT = 2 ** 40


class LabeledDiagram(NamedTuple):
    lam: tuple
    k: int

    @property
    def degree(self):
        return sum(self.lam) + self.k

    def to_json(self):
        return {"lambda": list(self.lam), "k": self.k}


@dataclass(frozen=True, order=True)
class EquivClass:
    """A class ``[lam, k]``; equality, hashing and ordering go through ``canonical``.

    ``members`` lists all m+n pairs in rotation order starting at ``canonical``.
    """

    canonical: LabeledDiagram
    members: tuple = field(compare=False, repr=False)

    @property
    def degree(self):
        return self.canonical.degree

    def to_json(self):
        return self.canonical.to_json()

    def __str__(self):
        lam = ",".join(map(str, self.canonical.lam))
        return f"[({lam}), {self.canonical.k}]"


def check_k(k):
    if abs(k) > K_LIMIT:
        raise KOutOfRange(f"|k| = {abs(k)} exceeds {K_LIMIT}")
    return k


def rotate_once(cfg, word, k):
    """Move the first letter to the end; ``d`` shifts k by -m, ``r`` by +n."""
    head = word[0]
    return word[1:] + head, (k - cfg.m if head == "d" else k + cfg.n)


def closed_form_k(cfg, word, k0, steps):
    """Closed form for k after ``steps`` rotations of ``word``."""
    prefix = word[:steps]
    return k0 + cfg.n * prefix.count("r") - cfg.m * prefix.count("d")


def rotation_orbit(cfg, lam, k):
    """All ``(word, k)`` pairs reached by m+n rotations, starting from ``(w(lam), k)``."""
    word = dg.to_word(cfg, lam)
    out = [(word, k)]
    for _ in range(cfg.n + cfg.m - 1):
        word, k = rotate_once(cfg, word, k)
        out.append((word, k))
    return out


@lru_cache(maxsize=1 << 16)
def _class_of(cfg, lam, k):
    orbit = rotation_orbit(cfg, lam, k)
    start = min(range(len(orbit)), key=lambda t: (orbit[t][1], orbit[t][0]))
    orbit = orbit[start:] + orbit[:start]
    members = tuple(LabeledDiagram(dg.from_word(cfg, w), kk) for w, kk in orbit)
    return EquivClass(members[0], members)


def enumerate_class(cfg, lam, k=0):
    cfg.require_coprime()
    lam = cfg.validate(lam)
    return _class_of(cfg, lam, check_k(k))


def class_of(cfg, s):
    return enumerate_class(cfg, s.lam, s.k)


def decompose(cfg, k):
    """The unique ``(i, j)`` with ``k = i*n + j*m`` and ``0 <= i < m``."""
    cfg.require_coprime()
    if cfg.m == 1:
        return 0, k
    i = (k * pow(cfg.n, -1, cfg.m)) % cfg.m
    return i, (k - i * cfg.n) // cfg.m


class Witness(NamedTuple):
    member: LabeledDiagram
    i: int
    j: int
    beta: Root


def scan_order(c):
    """Members in rotation order, starting from the one with k nearest zero.

    Starting there means a class built from (lam, 0) is tried at lam first.
    """
    start = min(range(len(c.members)), key=lambda t: (abs(c.members[t].k), -c.members[t].k))
    return c.members[start:] + c.members[:start]


def witnesses(cfg, c, alpha, shift=0):
    """Every member of ``c`` at which ``alpha`` acts, in rotation order.

    ``shift`` replaces the canonical decomposition ``(i, j)`` by
    ``(i + shift*m, j - shift*n)``; the outcome must not depend on it.
    """
    out = []
    for s in scan_order(c):
        i, j = decompose(cfg, s.k)
        i, j = i + shift * cfg.m, j - shift * cfg.n
        beta = cfg.transport(alpha, i, j)
        if dg.in_domain(cfg, s.lam, beta):
            out.append(Witness(s, i, j, beta))
    return out


def class_domain(cfg, c, alpha):
    cfg.require_coprime()
    cfg.validate_root(alpha)
    for w in witnesses(cfg, c, alpha):
        return w
    return None


def apply_at(cfg, w):
    """The class reached by acting at a given witness."""
    return enumerate_class(cfg, dg.apply_t(cfg, w.member.lam, w.beta), w.member.k)


def apply_T(cfg, c, alpha):
    w = class_domain(cfg, c, alpha)
    if w is None:
        raise NotInDomain(f"{alpha} does not act on {c}")
    return apply_at(cfg, w)


def moves(cfg, c, sign=None):
    """``(alpha, target)`` for every signed root acting on ``c``."""
    roots = cfg.signed_roots if sign is None else [a for a in cfg.signed_roots if a.sign == sign]
    out = []
    for alpha in roots:
        w = class_domain(cfg, c, alpha)
        if w is not None:
            out.append((alpha, apply_at(cfg, w)))
    return out


def classes_of_degree(cfg, d):
    cfg.require_coprime()
    found = {enumerate_class(cfg, lam, d - sum(lam)) for lam in cfg.partitions}
    return sorted(found)


def classes_in_window(cfg, lo, hi):
    out = []
    for d in range(lo, hi + 1):
        out.extend(classes_of_degree(cfg, d))
    return out


def poset_leq(cfg, lower, upper, search_cap=100_000):
    """A chain of positive roots carrying ``lower`` to ``upper``.

    Breadth-first over positive moves; every positive move raises the degree
    by one, so the search never leaves degrees ``<= upper.degree``.
    """
    cfg.require_coprime()
    if lower == upper:
        return []
    if lower.degree >= upper.degree:
        raise NotComparable(f"{lower} and {upper}: degrees {lower.degree} >= {upper.degree}")
    parent = {lower: None}
    queue = deque([lower])
    while queue:
        c = queue.popleft()
        if c.degree >= upper.degree:
            continue
        for alpha, t in moves(cfg, c, sign=1):
            if t in parent:
                continue
            parent[t] = (c, alpha)
            if t == upper:
                chain = []
                while parent[t] is not None:
                    t, a = parent[t]
                    chain.append(a)
                return chain[::-1]
            if len(parent) > search_cap:
                raise CapExceeded(f"poset search visited more than {search_cap} classes")
            queue.append(t)
    raise NotComparable(f"{upper} is not above {lower}")


def follow_chain(cfg, c, chain):
    for alpha in chain:
        c = apply_T(cfg, c, alpha)
    return c


def archimedean_K(cfg, k):
    """K with ``[lam, k] <= [empty, K*m*n]``, built from the decomposition of k."""
    i, j = decompose(cfg, k)
    k0 = -(-i // cfg.m)
    k1 = -(-j // cfg.n)
    return k0 + k1 + 1
