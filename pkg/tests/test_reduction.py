import itertools
import random

import pytest

from graphdegen.configs import Configuration, Match, catalog
from graphdegen.covers import Cover, find_sfdt, is_sfdt
from graphdegen.degeneracy import replay
from graphdegen.graphs import Graph, complete_graph
from graphdegen.reduction import (CertBudgetExceeded, ConditionViolated,
                                  CounterexampleFound, NoExtension,
                                  certify_reducible_sfdt,
                                  certify_reducible_sfdt_game,
                                  certify_reducible_sfdt_product,
                                  certify_reducible_weak,
                                  execute_weak_script,
                                  extend_sfdt_over_config,
                                  minimal_budget_vectors, sfdt_case_counts,
                                  synthetic_host)

CAT = catalog()


def host_and_budget(name):
    cfg = CAT[name]
    host, match = synthetic_host(cfg)
    budget = {v: 3 - cfg.external[v] for v in range(cfg.n)}
    return cfg, host, match, budget


# -- weak scripts ---------------------------------------------------------------

def test_kite_script_replays():
    cfg, host, match, budget = host_and_budget("kite")
    steps = execute_weak_script(host, budget, match, cfg)
    assert [s.kind for s in steps] == ["delete_save", "delete", "delete", "delete"]
    assert steps[0].u == 0 and steps[0].w == 3


def test_rc1_script_shape():
    cfg, host, match, budget = host_and_budget("rc-1")
    steps = execute_weak_script(host, budget, match, cfg)
    assert len(steps) == 5
    assert sum(1 for s in steps if s.kind == "delete_save") == 1


def test_script_rejects_wrong_tail_degree():
    # a host where the script tail has degree five violates the conditions
    cfg = CAT["kite"]
    edges = list(cfg.pattern.edges())
    nxt = cfg.n
    for v in range(cfg.n):
        for _ in range(cfg.external[v]):
            edges.append((v, nxt))
            nxt += 1
    edges.append((3, nxt))  # one extra stub on the script tail
    host = Graph.from_edges(nxt + 1, edges)
    match = Match(cfg.name, tuple(range(cfg.n)))
    budget = {0: 2, 1: 1, 2: 2, 3: 0}
    with pytest.raises(ConditionViolated) as err:
        execute_weak_script(host, budget, match, cfg)
    assert err.value.clause in ("tail-degree", "residual-budget", "pair-gap")


def test_script_rejects_wrong_budget():
    cfg, host, match, budget = host_and_budget("kite")
    budget[0] += 1
    with pytest.raises(ConditionViolated) as err:
        execute_weak_script(host, budget, match, cfg)
    assert err.value.clause == "residual-budget"


def test_all_catalog_scripts_replay():
    for name, cfg in CAT.items():
        if not cfg.is_reducible():
            continue
        cfg2, host, match, budget = host_and_budget(name)
        steps = execute_weak_script(host, budget, match, cfg)
        state = replay(
            cfg.pattern,
            [budget[v] for v in range(cfg.n)],
            [type(s)(s.kind, s.u, s.w) for s in steps],
        )
        assert state.is_empty()


# -- weak certificates ------------------------------------------------------------

def test_certify_weak_catalog():
    for name in ["kite", "f35", "rc-b", "rc-3a", "rc-7b"]:
        cert = certify_reducible_weak(CAT[name])
        assert cert["game_search"] == "confirmed"


def test_certify_weak_rejects_k5():
    doc = {
        "name": "k5-test",
        "vertices": [{"id": i, "degree": 4, "external": 0} for i in range(5)],
        "edges": [list(e) for e in itertools.combinations(range(5), 2)],
        "non_edges": [],
        "script": {"order": [0, 1, 2, 3, 4], "save_pairs": [[1, 5]]},
    }
    cfg = Configuration.from_doc(doc)
    with pytest.raises(CounterexampleFound) as err:
        certify_reducible_weak(cfg)
    assert err.value.detail["game-search"] == "stuck"


def test_certify_weak_idempotent():
    a = certify_reducible_weak(CAT["rc-2a"])
    b = certify_reducible_weak(CAT["rc-2a"])
    assert a == b


# -- budget machinery --------------------------------------------------------------

def test_minimal_budget_vectors():
    vecs = minimal_budget_vectors(2, 4)
    assert len(vecs) == 10
    assert all(sum(v) == 2 and max(v) <= 2 for v in vecs)
    assert len(minimal_budget_vectors(3, 4)) == 16
    assert len(minimal_budget_vectors(4, 4)) == 19


# -- transversal certificates --------------------------------------------------------

def test_certify_sfdt_game_full_catalog():
    for name, cfg in CAT.items():
        if not cfg.is_reducible():
            continue
        cert = certify_reducible_sfdt(cfg, k=4, mode="game")
        assert cert["mode"] == "sfdt-game"
        assert cert["cases"] == cert["covers"] * cert["budget_vectors"]


def test_certify_sfdt_product_and_game_agree_on_kite():
    game = certify_reducible_sfdt(CAT["kite"], k=4, mode="game")
    prod = certify_reducible_sfdt(CAT["kite"], k=4, mode="product")
    assert prod["cases"] == game["cases"] == 14745600


def test_certify_sfdt_product_budget_guard():
    with pytest.raises(CertBudgetExceeded):
        certify_reducible_sfdt_product(CAT["rc-3a"], k=4, max_cases=1000)


def test_certify_sfdt_negative_control():
    doc = CAT["kite"].to_doc()
    doc["name"] = "kite-broken"
    doc["edges"].append([1, 3])
    doc["non_edges"] = []
    for v in doc["vertices"]:
        v["external"] = v["degree"] - 3
    broken = Configuration.from_doc(doc)
    with pytest.raises(CounterexampleFound):
        certify_reducible_sfdt(broken, k=4, mode="game")
    with pytest.raises(CounterexampleFound) as err:
        certify_reducible_sfdt_product(broken, k=4)
    detail = err.value.detail
    # the reported counterexample really has no transversal
    cover, fvec = Cover.from_json(detail["cover"])
    assert find_sfdt(cover, fvec) is None


def test_certify_sfdt_idempotent():
    a = certify_reducible_sfdt(CAT["rc-5a"], k=4, mode="game")
    b = certify_reducible_sfdt(CAT["rc-5a"], k=4, mode="game")
    assert a == b


def test_tiny_config_product_exhausts():
    # a path pattern with generous externals: full sweep agrees with game
    doc = {
        "name": "toy-triangle",
        "vertices": [{"id": 0, "degree": 3, "external": 1},
                     {"id": 1, "degree": 4, "external": 2},
                     {"id": 2, "degree": 4, "external": 2}],
        "edges": [[0, 1], [1, 2], [0, 2]],
        "non_edges": [],
        "script": {"order": [0, 1, 2], "save_pairs": [[1, 3]]},
    }
    cfg = Configuration.from_doc(doc)
    prod = certify_reducible_sfdt_product(cfg, k=4)
    game = certify_reducible_sfdt_game(cfg, k=4)
    assert game.certified
    assert prod["cases"] == prod["covers"] * prod["budget_vectors"]


# -- extension over a matched configuration ---------------------------------------

def random_full_cover(g, s, rng):
    matchings = {}
    for e in g.edges():
        perm = list(range(s))
        rng.shuffle(perm)
        matchings[e] = [(i, perm[i]) for i in range(s)]
    return Cover.build(g, s, matchings)


def minimal_budget_row(rng, total, s):
    row = [0] * s
    need = total
    while need:
        i = rng.randrange(s)
        if row[i] < 2:
            row[i] += 1
            need -= 1
    return tuple(row)


def test_extend_over_config_sweep(rng):
    # host = configuration plus stubs; any outside transversal extends
    for name in ["kite", "rc-1", "rc1-a"]:
        cfg = CAT[name]
        host, match = synthetic_host(cfg)
        greedy_seen = 0
        for _ in range(25):
            cover = random_full_cover(host, 4, rng)
            f = []
            for v in range(host.n):
                f.append(minimal_budget_row(rng, 4, 4))
            f = tuple(f)
            outside = {
                v: next(j for j in range(4) if f[v][j] >= 1)
                for v in range(cfg.n, host.n)
            }
            full, path = extend_sfdt_over_config(cover, f, match, cfg, outside)
            assert is_sfdt(cover, f, full)
            assert all(full[v] == outside[v] for v in outside)
            greedy_seen += path == "greedy"
        assert greedy_seen >= 15, name  # the greedy path must carry the load


def test_extend_over_config_rejects_low_budget(rng):
    cfg = CAT["kite"]
    host, match = synthetic_host(cfg)
    cover = random_full_cover(host, 4, rng)
    f = [minimal_budget_row(rng, 4, 4) for _ in range(host.n)]
    f[0] = (1, 1, 1, 0)  # sum 3 < 4 at a matched vertex
    outside = {v: 0 for v in range(cfg.n, host.n)}
    with pytest.raises(NoExtension):
        extend_sfdt_over_config(cover, tuple(f), match, cfg, outside)


def test_extend_over_config_needs_full_outside(rng):
    cfg = CAT["kite"]
    host, match = synthetic_host(cfg)
    cover = random_full_cover(host, 4, rng)
    f = tuple(minimal_budget_row(rng, 4, 4) for _ in range(host.n))
    with pytest.raises(NoExtension):
        extend_sfdt_over_config(cover, f, match, cfg, {})
