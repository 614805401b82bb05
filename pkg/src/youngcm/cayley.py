"""Orbit enumeration and Cayley graphs for the three actions.

A *functor* here is any object with ``moves(v)`` returning ``(label, target)``
pairs in a fixed order, and ``magnitude(v)`` used for the coordinate cap.
Vertices must be hashable and totally ordered; all output is sorted by vertex
order so it does not depend on traversal or thread scheduling.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import classes as cl
from . import diagrams as dg
from . import svaction as sv
from .errors import WindowEmpty

CLOSED = "Closed"
CAP_EXCEEDED = "CapExceeded"

DEFAULT_MAX_VERTICES = 200_000
DEFAULT_MAX_COORD = 10 ** 6


class DiagramFunctor:
    """The action on diagrams in the rectangle by adding and removing corners."""

    name = "F"

    def __init__(self, cfg):
        self.cfg = cfg

    def moves(self, lam):
        out = []
        for alpha in self.cfg.signed_roots:
            if dg.in_domain(self.cfg, lam, alpha):
                out.append((alpha, dg.apply_t(self.cfg, lam, alpha)))
        return out

    def magnitude(self, lam):
        return max(lam)

    def degree(self, lam):
        return sum(lam)


class ClassFunctor:
    """The extended action on equivalence classes ``[lam, k]``."""

    name = "classes"

    def __init__(self, cfg):
        cfg.require_coprime()
        self.cfg = cfg

    def moves(self, c):
        return cl.moves(self.cfg, c)

    def magnitude(self, c):
        return abs(c.canonical.k)

    def degree(self, c):
        return c.degree


class SVFunctor:
    """The Sergeev-Veselov action for a parameter kappa, optionally on a sub-rectangle of roots."""

    name = "SV"

    def __init__(self, cfg, kappa=None, base=None):
        self.cfg = cfg
        self.kappa = kappa or sv.Kappa.default(cfg)
        self.base = base
        if base is None:
            self.roots = cfg.signed_roots
        else:
            n2, m2 = base
            if not (1 <= n2 <= cfg.n and 1 <= m2 <= cfg.m):
                raise ValueError(f"restricted base {base} does not fit in {cfg.n}x{cfg.m}")
            self.roots = tuple(a for a in cfg.signed_roots if a.i <= n2 and a.j <= m2)

    def moves(self, vec):
        return sv.moves(vec, self.kappa, self.roots)

    def magnitude(self, vec):
        return vec.max_abs

    def degree(self, vec):
        return sv.svdeg(self.cfg, vec)


@dataclass
class OrbitReport:
    status: str
    vertex_count: int
    max_coordinate: int
    edge_count: int = 0
    witnesses: object = None

    def to_json(self):
        out = {"status": self.status, "vertex_count": self.vertex_count,
               "max_coordinate": self.max_coordinate, "edge_count": self.edge_count}
        if self.witnesses is not None:
            out["witnesses"] = self.witnesses
        return out


@dataclass
class CayleyGraph:
    vertices: tuple
    edges: tuple
    report: OrbitReport = None
    # targets that should have been vertices but were not (window graphs only)
    strays: tuple = field(default=())

    def vertex_set(self):
        return frozenset(self.vertices)

    def edge_set(self):
        return frozenset(self.edges)

    def missing_reverse_edges(self):
        es = self.edge_set()
        return sorted(e for e in es if (e[1], e[0], -e[2]) not in es)


def _expand(functor, frontier, threads):
    if threads > 1 and len(frontier) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(functor.moves, frontier))
    return [functor.moves(v) for v in frontier]


def orbit_bfs(seed, functor, max_vertices=DEFAULT_MAX_VERTICES,
              max_abs_coordinate=DEFAULT_MAX_COORD, threads=1):
    """Level-synchronous BFS closure of ``seed``.

    Stops with status CapExceeded as soon as a new vertex would exceed either
    cap; the graph then holds the vertices accepted so far and the edges among
    them.
    """
    visited = {seed}
    edges = set()
    frontier = [seed]
    status = CLOSED
    max_coord = functor.magnitude(seed)
    while frontier and status == CLOSED:
        frontier.sort()
        nxt = []
        for v, out in zip(frontier, _expand(functor, frontier, threads)):
            for label, w in out:
                if w not in visited:
                    mag = functor.magnitude(w)
                    if mag > max_abs_coordinate or len(visited) >= max_vertices:
                        status = CAP_EXCEEDED
                        continue
                    visited.add(w)
                    nxt.append(w)
                    max_coord = max(max_coord, mag)
                edges.add((v, w, label))
        frontier = nxt
    if status == CAP_EXCEEDED:
        edges = {e for e in edges if e[0] in visited and e[1] in visited}
    vertices = tuple(sorted(visited))
    edge_list = tuple(sorted(edges))
    report = OrbitReport(status, len(vertices), max_coord, len(edge_list))
    return CayleyGraph(vertices, edge_list, report), report


def is_closed(graph, functor):
    """Every move from every vertex lands in the vertex set."""
    vs = graph.vertex_set()
    return all(w in vs for v in graph.vertices for _, w in functor.moves(v))


def window_graph(cfg, side, lo, hi):
    """The slice of the class or SV Cayley graph with degrees in ``[lo, hi]``.

    The SV slice takes its vertices from the images of the class vertices and
    computes its edges by applying the SV morphisms directly; any SV target
    that lands inside the window without being a vertex is kept in ``strays``.
    """
    if lo > hi:
        raise WindowEmpty(f"degree window [{lo}, {hi}] is empty")
    cfg.require_coprime()
    class_vertices = cl.classes_in_window(cfg, lo, hi)
    if not class_vertices:
        raise WindowEmpty(f"no classes with degree in [{lo}, {hi}]")
    if side == "classes":
        functor = ClassFunctor(cfg)
        vertices = class_vertices
    elif side == "SV":
        functor = SVFunctor(cfg)
        vertices = sorted({sv.x_hat(cfg, c) for c in class_vertices})
    else:
        raise ValueError(f"unknown side {side!r}")
    vs = set(vertices)
    edges, strays = set(), set()
    for v in vertices:
        for label, w in functor.moves(v):
            if w in vs:
                edges.add((v, w, label))
            elif lo <= functor.degree(w) <= hi:
                strays.add(w)
    return CayleyGraph(tuple(vertices), tuple(sorted(edges)), strays=tuple(sorted(strays)))


@dataclass
class EquivarianceReport:
    ok: bool
    vertex_count: int
    edge_count: int
    mismatch: str = None

    def to_json(self):
        return {"ok": self.ok, "vertex_count": self.vertex_count,
                "edge_count": self.edge_count, "mismatch": self.mismatch}


def check_equivariant_iso(cfg, g_classes, g_orbit):
    """Check that x-hat maps the class graph onto the SV graph, vertex for vertex and label for label."""
    image = {c: sv.x_hat(cfg, c) for c in g_classes.vertices}
    nv, ne = len(g_classes.vertices), len(g_classes.edges)

    def fail(msg):
        return EquivarianceReport(False, nv, ne, msg)

    seen = {}
    for c, vec in image.items():
        if vec in seen:
            return fail(f"x-hat not injective: {seen[vec]} and {c} both map to {vec}")
        seen[vec] = c
    orbit_vs = g_orbit.vertex_set()
    for c in g_classes.vertices:
        if image[c] not in orbit_vs:
            return fail(f"x-hat({c}) = {image[c]} is not an SV vertex")
    if len(orbit_vs) != nv:
        extra = sorted(orbit_vs - set(image.values()))
        return fail(f"SV vertex {extra[0]} has no preimage")
    if g_orbit.strays:
        return fail(f"SV morphism leaves the vertex set inside the window at {g_orbit.strays[0]}")
    mapped = {(image[s], image[t], a) for s, t, a in g_classes.edges}
    orbit_es = g_orbit.edge_set()
    for e in sorted(mapped):
        if e not in orbit_es:
            return fail(f"class edge maps to {e[0]} -> {e[1]} [{e[2]}], absent on the SV side")
    for e in sorted(orbit_es - mapped):
        return fail(f"SV edge {e[0]} -> {e[1]} [{e[2]}] has no class preimage")
    return EquivarianceReport(True, nv, ne)


@dataclass
class ScanRow:
    n: int
    m: int
    kappa: str
    base: tuple
    seed: sv.SuperVector
    status: str
    vertex_count: int

    def to_json(self):
        return {"n": self.n, "m": self.m, "kappa": self.kappa,
                "base": list(self.base) if self.base else None,
                "seed": self.seed.to_json(), "status": self.status,
                "vertex_count": self.vertex_count}


def random_seeds(cfg, count, rng, lo=-20, hi=20):
    return [sv.SuperVector(tuple(rng.randint(lo, hi) for _ in range(cfg.n)),
                           tuple(rng.randint(lo, hi) for _ in range(cfg.m)))
            for _ in range(count)]


def scan_finiteness(cells, seeds_per_cell=0, seeds=None, max_vertices=DEFAULT_MAX_VERTICES,
                    max_abs_coordinate=DEFAULT_MAX_COORD, prng_seed=0, threads=1):
    """Run orbit BFS for every cell and seed.

    A cell is ``(n, m, p, q, sign)`` or ``(n, m, p, q, sign, n2, m2)``, the
    last two restricting the roots to ``i <= n2, j <= m2``.  Random seeds
    come from ``random.Random(prng_seed)`` and are drawn from [-20, 20].
    """
    rng = random.Random(prng_seed)
    rows = []
    for cell in cells:
        n, m, p, q, sign = cell[:5]
        base = tuple(cell[5:7]) if len(cell) > 5 else None
        cfg = dg.RectConfig(n, m)
        kappa = sv.Kappa(p, q, sign)
        functor = SVFunctor(cfg, kappa, base)
        cell_seeds = list(seeds or []) + random_seeds(cfg, seeds_per_cell, rng)
        for seed in cell_seeds:
            _, report = orbit_bfs(seed, functor, max_vertices, max_abs_coordinate, threads)
            rows.append(ScanRow(n, m, str(kappa), base, seed, report.status, report.vertex_count))
    return rows


def conjecture_scan(cfg, graph, seed=None):
    """Look for a translate ``Lambda_0 + c`` of the base point among the orbit vertices.

    Returns ``{"witness": ..., "translation": c, "near_misses": [...]}``; a
    near miss is a vertex whose a- and b-blocks are permutations of those of
    some translate of the base point.  No witness within the cap proves nothing.
    """
    base = sv.base_point(cfg)
    order = list(graph.vertices)
    if seed is not None and seed in graph.vertex_set():
        order.remove(seed)
        order.insert(0, seed)
    witness = None
    near = []
    target_a, target_b = sorted(base.a), sorted(base.b)
    for vec in order:
        c = sv.matches_up_to_translation(vec, base)
        if c is not None:
            if witness is None:
                witness = (vec, c)
            continue
        shift = min(vec.a + vec.b) - min(base.a + base.b)
        if (sorted(x - shift for x in vec.a) == target_a
                and sorted(x - shift for x in vec.b) == target_b):
            near.append((vec, shift))
    return {
        "witness": None if witness is None else {"vector": witness[0].to_json(),
                                                 "translation": witness[1]},
        "near_misses": [{"vector": v.to_json(), "translation": c} for v, c in near[:20]],
        "near_miss_count": len(near),
    }


def vertex_json(v):
    if isinstance(v, tuple):
        return list(v)
    return v.to_json()


def to_json(graph, extra=None):
    out = {
        "vertices": [vertex_json(v) for v in graph.vertices],
        "edges": [{"src": vertex_json(s), "dst": vertex_json(t), "label": a.to_json()}
                  for s, t, a in graph.edges],
        "report": graph.report.to_json() if graph.report else {},
    }
    if extra:
        out["report"].update(extra)
    return out


def to_dot(graph, name="cayley"):
    """DOT text: nodes ``v0, v1, ...`` in vertex order, labelled by their JSON."""
    ids = {v: f"v{k}" for k, v in enumerate(graph.vertices)}
    lines = [f"digraph {name} {{"]
    for v in graph.vertices:
        label = json.dumps(vertex_json(v), separators=(",", ":")).replace('"', '\\"')
        lines.append(f'  {ids[v]} [label="{label}"];')
    for s, t, a in graph.edges:
        lines.append(f'  {ids[s]} -> {ids[t]} [label="{a.label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def reachable_within(seed, functor, lo, hi):
    """Vertices reachable from ``seed`` without leaving degrees ``[lo, hi]``."""
    seen = {seed}
    stack = [seed]
    while stack:
        v = stack.pop()
        for _, w in functor.moves(v):
            if w not in seen and lo <= functor.degree(w) <= hi:
                seen.add(w)
                stack.append(w)
    return seen
