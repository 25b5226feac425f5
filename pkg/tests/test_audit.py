import itertools
import json
from importlib import resources

import pytest

from graphdegen.audit import (AuditReport, HypothesisViolated, NoClauseHolds,
                              audit_structure, cycles_of_length,
                              intersecting_five_cycles, is_good_cycle)
from graphdegen.graphs import Graph, complete_graph, cycle_graph
from graphdegen.reduction import synthetic_host
from graphdegen.configs import catalog
from graphdegen.rotation import RotationSystem, faces


def load_fixture(name):
    files = resources.files("graphdegen.data.plane")
    g = Graph.from_edge_list_text(files.joinpath(f"{name}.edges").read_text())
    rot = RotationSystem.from_text(g, files.joinpath(f"{name}.rot").read_text())
    return g, rot


def fixture_index():
    files = resources.files("graphdegen.data.plane")
    return json.loads(files.joinpath("_index.json").read_text())


def test_fixture_corpus_size():
    rows = sum(len(r["theorems"]) for r in fixture_index())
    assert len(fixture_index()) >= 10
    assert rows >= 12


def test_all_fixtures_yield_clauses():
    for row in fixture_index():
        g, rot = load_fixture(row["name"])
        for theorem in row["theorems"]:
            rep = audit_structure(g, rot, row["outer_cycle"], theorem)
            assert isinstance(rep, AuditReport)
            assert rep.clause
            assert rep.satisfied[0][0] == rep.clause


def test_fixture_witnesses_are_valid():
    for row in fixture_index():
        g, rot = load_fixture(row["name"])
        for theorem in row["theorems"]:
            rep = audit_structure(g, rot, row["outer_cycle"], theorem)
            boundary = set(row["outer_cycle"])
            if rep.clause == "all-on-outer-cycle":
                assert set(rep.witness) == set(range(g.n))
            elif rep.clause == "internal-3minus-vertex":
                v = rep.witness
                assert v not in boundary and g.degree(v) <= 3
            elif rep.clause.startswith("match-"):
                assert all(h not in boundary for h in rep.witness["mapping"])


def test_kite_lantern_carries_pattern_clause():
    g, rot = load_fixture("kite-lantern")
    row = [r for r in fixture_index() if r["name"] == "kite-lantern"][0]
    rep = audit_structure(g, rot, row["outer_cycle"], "plane-3456")
    assert any(c == "match-kite" for c, _ in rep.satisfied)
    rep = audit_structure(g, rot, row["outer_cycle"], "intersecting-5")
    assert any(c == "match-kite" for c, _ in rep.satisfied)


def test_triangle_and_k4_clauses():
    g, rot = load_fixture("triangle")
    rep = audit_structure(g, rot, [0, 1, 2], "intersecting-5")
    assert rep.clause == "all-on-outer-cycle"
    g, rot = load_fixture("k4")
    rep = audit_structure(g, rot, [0, 1, 2], "intersecting-5")
    assert rep.clause == "internal-3minus-vertex" and rep.witness == 3


def test_hypothesis_violation_w5():
    # the 5-wheel contains the first short-cycle pattern
    w5 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                              (0, 5), (1, 5), (2, 5), (3, 5), (4, 5)])
    rot = RotationSystem.from_lists(
        w5, [[1, 5, 4], [2, 5, 0], [3, 5, 1], [4, 5, 2], [0, 5, 3],
             [0, 1, 2, 3, 4]])
    with pytest.raises(HypothesisViolated):
        audit_structure(w5, rot, [0, 1, 5], "plane-3456")


def _rot_from_coords(g, pos):
    import math
    rows = []
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v),
                      key=lambda u: math.atan2(pos[u][1] - pos[v][1],
                                               pos[u][0] - pos[v][0]))
        rows.append(nbrs)
    return RotationSystem.from_lists(g, rows)


def test_hypothesis_violation_intersecting_cycles():
    # two 5-cycles sharing the edge 2-3; a triangle face supplies the outer
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                             (2, 5), (5, 6), (6, 7), (7, 3), (0, 2)])
    pair = intersecting_five_cycles(g)
    assert pair is not None
    rot = _rot_from_coords(g, {
        0: (0, 1), 1: (-0.95, 0.31), 2: (-0.59, -0.81), 3: (0.59, -0.81),
        4: (0.95, 0.31), 5: (-0.8, -1.8), 6: (0, -2.3), 7: (0.8, -1.8)})
    with pytest.raises(HypothesisViolated):
        audit_structure(g, rot, [0, 1, 2], "intersecting-5")


def test_bad_outer_cycle_rejected():
    w4 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3),
                              (0, 4), (1, 4), (2, 4), (3, 4)])
    rot = RotationSystem.from_lists(
        w4, [[1, 4, 3], [2, 4, 0], [3, 4, 1], [0, 4, 2], [0, 1, 2, 3]])
    # the rim is a bad 4-cycle: the hub has four neighbors on it
    assert not is_good_cycle(w4, [0, 1, 2, 3])
    with pytest.raises(HypothesisViolated):
        audit_structure(w4, rot, [0, 1, 2, 3], "plane-3456")


def test_toroidal_audit_on_f35_host():
    cat = catalog()
    host, _ = synthetic_host(cat["f35"])
    rep = audit_structure(host, None, None, "toroidal-345")
    assert rep.clause == "min-degree-3"  # the stubs come first
    assert any(c == "match-f35" for c, _ in rep.satisfied)


def test_toroidal_audit_4_regular():
    # K4,4 is 4-regular and triangle-free, so both forbidden patterns and
    # the configuration clauses stay empty
    g = Graph.from_edges(8, [(a, b) for a in range(4) for b in range(4, 8)])
    rep = audit_structure(g, None, None, "toroidal-345")
    assert rep.clause == "4-regular"


def test_toroidal_hypothesis_violation():
    # triangle sharing an edge with a 4-cycle
    g = Graph.from_edges(5, [(0, 4), (4, 1), (1, 2), (2, 3), (3, 0), (0, 1)])
    with pytest.raises(HypothesisViolated):
        audit_structure(g, None, None, "toroidal-345")


def brute_five_cycles(g):
    out = set()
    for verts in itertools.permutations(range(g.n), 5):
        if verts[0] != min(verts):
            continue
        if verts[1] > verts[-1]:
            continue
        if all(g.has_edge(verts[i], verts[(i + 1) % 5]) for i in range(5)):
            out.add(verts)
    return out


def test_five_cycle_detector_matches_brute(rng):
    for _ in range(25):
        n = rng.randrange(5, 9)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        got = set(cycles_of_length(g, 5))
        want = brute_five_cycles(g)
        assert got == want
        inter = intersecting_five_cycles(g)
        pairs_exist = any(
            set(a) & set(b) for a, b in itertools.combinations(want, 2))
        assert (inter is not None) == pairs_exist


def test_good_cycle_examples():
    assert is_good_cycle(complete_graph(3), [0, 1, 2])
    w4 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3),
                              (0, 4), (1, 4), (2, 4), (3, 4)])
    assert not is_good_cycle(w4, [0, 1, 2, 3])
    assert is_good_cycle(w4, [0, 4, 2, 1])
