import json

import pytest
from hypothesis import given, settings, strategies as st

from youngcm import RectConfig, Root
from youngcm import cayley as cy
from youngcm import classes as cl
from youngcm import svaction as sv
from youngcm.errors import WindowEmpty
from youngcm.svaction import Kappa, SuperVector

L0 = SuperVector((3, 0), (0, 2, 4))
L1 = SuperVector((3, 2), (3, 2, 4))


def test_diagram_orbit_closed(cfg23):
    g, rep = cy.orbit_bfs((0, 0), cy.DiagramFunctor(cfg23))
    assert rep.status == "Closed" and rep.vertex_count == 10
    assert set(g.vertices) == set(cfg23.partitions)
    assert not g.missing_reverse_edges()


def test_diagram_orbit_closed_34(cfg34):
    g, rep = cy.orbit_bfs((0, 0, 0), cy.DiagramFunctor(cfg34))
    assert rep.status == "Closed" and rep.vertex_count == 35


def test_sv_negative_special_exceeds_cap(cfg23):
    _, rep = cy.orbit_bfs(L0, cy.SVFunctor(cfg23), max_vertices=2000)
    assert rep.status == "CapExceeded"
    _, rep = cy.orbit_bfs(L0, cy.SVFunctor(cfg23), max_abs_coordinate=40)
    assert rep.status == "CapExceeded" and rep.max_coordinate <= 40


def test_sv_positive_kappa_closed(cfg23):
    f = cy.SVFunctor(cfg23, Kappa(3, 2, 1))
    g, rep = cy.orbit_bfs(L0, f)
    assert rep.status == "Closed"
    assert cy.is_closed(g, f)


def test_class_orbit_caps(cfg23):
    e = cl.enumerate_class(cfg23, (0, 0), 0)
    _, rep = cy.orbit_bfs(e, cy.ClassFunctor(cfg23), max_vertices=500)
    assert rep.status == "CapExceeded"


def test_bfs_deterministic_across_threads(cfg23):
    outs = []
    for threads in (1, 2, 4):
        g, rep = cy.orbit_bfs(L0, cy.SVFunctor(cfg23), max_vertices=3000, threads=threads)
        outs.append(json.dumps(cy.to_json(g), sort_keys=True))
    assert outs[0] == outs[1] == outs[2]


def test_sv_orbit_invariants(cfg23):
    f = cy.SVFunctor(cfg23)
    g, _ = cy.orbit_bfs(L0, f, max_vertices=3000)
    for v in g.vertices:
        assert sv.residue_check(cfg23, v)
        assert sv.zero_pattern_ok(v)
    for s, t, a in g.edges:
        assert f.degree(t) - f.degree(s) == a.sign


def test_window_examples(cfg23):
    g = cy.window_graph(cfg23, "classes", 0, 0)
    assert cl.enumerate_class(cfg23, (0, 0), 0) in g.vertices
    g = cy.window_graph(cfg23, "classes", 0, 1)
    e = cl.enumerate_class(cfg23, (0, 0), 0)
    up = cl.enumerate_class(cfg23, (1, 0), 0)
    assert (e, up, Root(2, 1)) in g.edge_set()
    gs = cy.window_graph(cfg23, "SV", 0, 1)
    assert (L0, L1, Root(2, 1)) in gs.edge_set()
    assert not gs.strays


def test_window_empty(cfg23):
    with pytest.raises(WindowEmpty):
        cy.window_graph(cfg23, "classes", 3, 2)
    with pytest.raises(ValueError):
        cy.window_graph(cfg23, "bogus", 0, 1)


@pytest.mark.parametrize("n,m,lo,hi", [(2, 3, 0, 6), (3, 4, 0, 5), (2, 5, -2, 3), (3, 5, 0, 2)])
def test_equivariant_iso(n, m, lo, hi):
    cfg = RectConfig(n, m)
    gc = cy.window_graph(cfg, "classes", lo, hi)
    gs = cy.window_graph(cfg, "SV", lo, hi)
    rep = cy.check_equivariant_iso(cfg, gc, gs)
    assert rep.ok, rep.mismatch
    assert not gc.missing_reverse_edges() and not gs.missing_reverse_edges()


def test_single_vertex_window(cfg23):
    gc = cy.window_graph(cfg23, "classes", 0, 0)
    gs = cy.window_graph(cfg23, "SV", 0, 0)
    assert cy.check_equivariant_iso(cfg23, gc, gs).ok
    e = cl.enumerate_class(cfg23, (0, 0), 0)
    assert sv.x_hat(cfg23, e) == L0 in gs.vertex_set()


def test_equivariance_detects_tampering(cfg23):
    gc = cy.window_graph(cfg23, "classes", 0, 2)
    gs = cy.window_graph(cfg23, "SV", 0, 2)
    dropped = cy.CayleyGraph(gs.vertices, gs.edges[1:])
    rep = cy.check_equivariant_iso(cfg23, gc, dropped)
    assert not rep.ok and rep.mismatch
    fewer = cy.CayleyGraph(gs.vertices[1:], gs.edges)
    assert not cy.check_equivariant_iso(cfg23, gc, fewer).ok


def test_window_transitive_via_chains(cfg23):
    # any two classes in a window both lie below a common [empty, K*mn]
    cs = cl.classes_in_window(cfg23, 0, 3)
    tops = [cl.enumerate_class(cfg23, (0, 0), cl.archimedean_K(cfg23, c.canonical.k) * 6) for c in cs]
    top = max(tops, key=lambda c: c.degree)
    for c in cs:
        assert cl.follow_chain(cfg23, c, cl.poset_leq(cfg23, c, top)) == top


def test_scan_examples():
    rows = cy.scan_finiteness([(2, 3, 3, 2, 1)], seeds_per_cell=50, prng_seed=7)
    assert len(rows) == 50 and all(r.status == "Closed" for r in rows)
    rows = cy.scan_finiteness([(2, 3, 3, 2, -1, 2, 2)], seeds=[L0])
    assert rows[0].status == "Closed"
    rows = cy.scan_finiteness([(2, 3, 3, 2, -1)], seeds=[L0], max_vertices=1000)
    assert rows[0].status == "CapExceeded"


def test_scan_reproducible():
    a = cy.scan_finiteness([(2, 3, 1, 2, 1)], seeds_per_cell=5, prng_seed=3)
    b = cy.scan_finiteness([(2, 3, 1, 2, 1)], seeds_per_cell=5, prng_seed=3)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]


def test_restricted_base_validation(cfg23):
    with pytest.raises(ValueError):
        cy.SVFunctor(cfg23, base=(3, 1))


def test_conjecture_scan_examples(cfg23):
    g, _ = cy.orbit_bfs(L0, cy.SVFunctor(cfg23), max_vertices=500)
    out = cy.conjecture_scan(cfg23, g, L0)
    assert out["witness"] == {"vector": L0.to_json(), "translation": 0}
    seed = L0.translate(7)
    g, _ = cy.orbit_bfs(seed, cy.SVFunctor(cfg23), max_vertices=500)
    assert cy.conjecture_scan(cfg23, g, seed)["witness"]["translation"] == 7


def test_exports(cfg23):
    g = cy.window_graph(cfg23, "SV", 0, 1)
    dot = cy.to_dot(g)
    assert dot.startswith("digraph cayley {") and dot.rstrip().endswith("}")
    assert '[label="+e2-d1"]' in dot
    assert dot.count("->") == len(g.edges)
    js = cy.to_json(g)
    assert len(js["vertices"]) == len(g.vertices)
    assert {"src", "dst", "label"} == set(js["edges"][0])
    json.dumps(js)
    gc = cy.window_graph(cfg23, "classes", 0, 1)
    json.dumps(cy.to_json(gc))


def test_reachable_within(cfg23):
    got = cy.reachable_within(L0, cy.SVFunctor(cfg23), 0, 6)
    gs = cy.window_graph(cfg23, "SV", 0, 6)
    assert got == gs.vertex_set()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=5, max_size=5), st.sampled_from([(3, 2), (1, 2), (1, 1), (2, 1)]))
def test_positive_kappa_orbits_close(vals, pq):
    cfg = RectConfig(2, 3)
    seed = SuperVector.from_flat(vals, 2)
    f = cy.SVFunctor(cfg, Kappa(*pq, 1))
    g, rep = cy.orbit_bfs(seed, f, max_vertices=20000)
    assert rep.status == "Closed"
    assert not g.missing_reverse_edges()
