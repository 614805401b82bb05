"""Brute-force reference implementations on explicit box sets.

Boxes are (row, column) pairs, rows numbered from the top.  Nothing here
imports the package's diagram code, so these stay independent of it.
"""
import itertools


def boxes(n, m, lam):
    return {(i, j) for i in range(1, n + 1) for j in range(1, lam[n - i] + 1)}


def is_diagram(n, m, box_set):
    """Bottom-left justified: each box has its left neighbour and the box below it."""
    for i, j in box_set:
        if not (1 <= i <= n and 1 <= j <= m):
            return False
        if j > 1 and (i, j - 1) not in box_set:
            return False
        if i < n and (i + 1, j) not in box_set:
            return False
    return True


def from_boxes(n, box_set):
    return tuple(sum(1 for (i, _) in box_set if i == n + 1 - k) for k in range(1, n + 1))


def all_diagrams(n, m):
    out = []
    for combo in itertools.product(range(m + 1), repeat=n):
        if all(combo[k] >= combo[k + 1] for k in range(n - 1)):
            out.append(tuple(combo))
    return out


def dual(n, m, lam):
    bs = boxes(n, m, lam)
    return tuple(sum(1 for (_, j) in bs if j == col) for col in range(1, m + 1))


def corners(n, m, lam):
    """(outer, inner) as sets of (i, j)."""
    bs = boxes(n, m, lam)
    outer, inner = set(), set()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if (i, j) in bs:
                if is_diagram(n, m, bs - {(i, j)}):
                    inner.add((i, j))
            elif is_diagram(n, m, bs | {(i, j)}):
                outer.add((i, j))
    return outer, inner


def diagram_of_word(n, m, word):
    """Box (i, j) is in the diagram iff the j-th 'r' comes after fewer than i 'd's."""
    bs = set()
    downs = 0
    col = 0
    for letter in word:
        if letter == "d":
            downs += 1
        else:
            col += 1
            for i in range(downs + 1, n + 1):
                bs.add((i, col))
    return from_boxes(n, bs)


def class_closure(n, m, lam, k):
    """Close {(lam, k)} under the generating moves of the relation."""
    start = (tuple(lam), k)
    seen = {start}
    todo = [start]
    while todo:
        lam, k = todo.pop()
        nbrs = []
        if lam[0] == m:
            nbrs.append((lam[1:] + (0,), k + m))
        if lam[-1] == 0:
            nbrs.append(((m,) + lam[:-1], k - m))
        if lam[-1] > 0:
            nbrs.append((tuple(p - 1 for p in lam), k + n))
        if lam[0] < m:
            nbrs.append((tuple(p + 1 for p in lam), k - n))
        for s in nbrs:
            if s not in seen:
                seen.add(s)
                todo.append(s)
    return seen


def x_by_chain(n, m, lam):
    """x(lam) by walking from the empty diagram and adding n to a_i, m to b_j per box."""
    a = [m * (n - i) for i in range(1, n + 1)]
    b = [n * (j - 1) for j in range(1, m + 1)]
    cur = (0,) * n
    while cur != tuple(lam):
        outer, _ = corners(n, m, cur)
        # any outer corner that stays inside lam
        i, j = min(c for c in outer if j_fits(c, n, lam))
        assert a[i - 1] == b[j - 1]
        a[i - 1] += n
        b[j - 1] += m
        bs = boxes(n, m, cur) | {(i, j)}
        cur = from_boxes(n, bs)
    return tuple(a), tuple(b)


def j_fits(c, n, lam):
    i, j = c
    return lam[n - i] >= j
