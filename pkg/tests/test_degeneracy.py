import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphdegen.degeneracy import (GameState, IllegalMove, NotAdjacent,
                                   RemovalStep, degeneracy, delete,
                                   delete_save, f_removing_order,
                                   is_strictly_f_degenerate,
                                   is_weakly_deg_minus_one_degenerate,
                                   is_weakly_f_degenerate, replay,
                                   weak_degeneracy)
from graphdegen.graphs import (Graph, complete_graph, connected_graphs,
                               cycle_graph, induced_subgraph, is_gdp_tree,
                               path_graph, petersen_graph)


def brute_strictly_degenerate(g, f):
    """Oracle: every nonempty subgraph has a vertex of degree below budget."""
    vals = f if not isinstance(f, int) else [f] * g.n
    for mask in range(1, 1 << g.n):
        verts = [v for v in range(g.n) if (mask >> v) & 1]
        ok = False
        for v in verts:
            d = sum(1 for u in verts if u != v and g.has_edge(u, v))
            if d < vals[v]:
                ok = True
                break
        if not ok:
            return False
    return True


def naive_weak_game(g, vals):
    """Oracle: plain recursion over Delete/DeleteSave without shedding."""

    def rec(verts, bud):
        if not verts:
            return True
        for u in verts:
            nbrs = [w for w in verts if w != u and g.has_edge(u, w)]
            if all(bud[w] >= 1 for w in nbrs):
                nb = dict(bud)
                for w in nbrs:
                    nb[w] -= 1
                if rec([v for v in verts if v != u], nb):
                    return True
            for w in nbrs:
                if bud[u] > bud[w] and all(bud[x] >= 1 for x in nbrs if x != w):
                    nb = dict(bud)
                    for x in nbrs:
                        if x != w:
                            nb[x] -= 1
                    if rec([v for v in verts if v != u], nb):
                        return True
        return False

    return rec(list(range(g.n)), {v: vals[v] for v in range(g.n)})


# -- strict side --------------------------------------------------------------

def test_removing_order_single_vertex():
    g = Graph.from_edges(1, [])
    assert f_removing_order(g, 1) == [0]


def test_removing_order_k2_unit_budget_absent():
    assert f_removing_order(complete_graph(2), 1) is None


def _brute_has_removing_order(g, f):
    vals = f if not isinstance(f, int) else [f] * g.n
    for perm in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(sum(1 for u in g.neighbors(v) if pos[u] > pos[v]) < vals[v]
               for v in perm):
            return True
    return False


def test_removing_order_c4_brute_force():
    # oracle first: all 4! orders; C4 at budget 2 has none (each first
    # vertex keeps both neighbors), at budget 3 the greedy finds one
    g = cycle_graph(4)
    for budget in (2, 3):
        order = f_removing_order(g, budget)
        assert (order is not None) == _brute_has_removing_order(g, budget)
        if order is not None:
            pos = {v: i for i, v in enumerate(order)}
            for v in order:
                assert sum(1 for u in g.neighbors(v)
                           if pos[u] > pos[v]) < budget


def test_removing_order_greedy_complete(rng):
    # greedy succeeds exactly when some order exists
    for _ in range(40):
        n = rng.randrange(1, 6)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        f = [rng.randrange(0, 4) for _ in range(n)]
        assert (f_removing_order(g, f) is not None) == \
            _brute_has_removing_order(g, f)


def test_strictly_degenerate_examples():
    assert not is_strictly_f_degenerate(complete_graph(3), 2)
    assert is_strictly_f_degenerate(complete_graph(3), 3)
    assert not is_strictly_f_degenerate(petersen_graph(), 3)
    assert is_strictly_f_degenerate(petersen_graph(), 4)


def test_strictly_degenerate_matches_brute(rng):
    for _ in range(60):
        n = rng.randrange(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        f = [rng.randrange(0, 4) for _ in range(n)]
        assert is_strictly_f_degenerate(g, f) == brute_strictly_degenerate(g, f)


def test_degeneracy_values():
    for n in range(1, 7):
        assert degeneracy(complete_graph(n)) == n - 1
    assert degeneracy(path_graph(5)) == 1
    assert degeneracy(petersen_graph()) == 3


# -- game moves ---------------------------------------------------------------

def test_delete_isolated_always_legal():
    g = Graph.from_edges(2, [])
    s = GameState.initial(g, 0)
    s = delete(s, 0)
    assert not s.alive(0) and s.alive(1)


def test_delete_k2_zero_budget_illegal():
    s = GameState.initial(complete_graph(2), 0)
    with pytest.raises(IllegalMove):
        delete(s, 0)


def test_delete_k2_mixed_budget():
    s = GameState.initial(complete_graph(2), {0: 0, 1: 1})
    s2 = delete(s, 0)
    assert s2.budget[1] == 0


def test_delete_save_k2():
    s = GameState.initial(complete_graph(2), {0: 1, 1: 0})
    s2 = delete_save(s, 0, 1)
    s3 = delete(s2, 1)
    assert s3.is_empty()


def test_delete_save_equal_budgets_illegal():
    s = GameState.initial(complete_graph(2), 1)
    with pytest.raises(IllegalMove):
        delete_save(s, 0, 1)


def test_delete_save_star_illegal():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    s = GameState.initial(star, {0: 2, 1: 0, 2: 0, 3: 0})
    with pytest.raises(IllegalMove):
        delete_save(s, 0, 1)  # other leaves would go negative


def test_delete_save_requires_adjacency():
    g = path_graph(3)
    s = GameState.initial(g, 2)
    with pytest.raises(NotAdjacent):
        delete_save(s, 0, 2)


# -- exact game ---------------------------------------------------------------

def test_weakly_degenerate_examples():
    assert not is_weakly_f_degenerate(complete_graph(2), 0)
    assert not is_weakly_f_degenerate(cycle_graph(5), 1)
    assert is_weakly_f_degenerate(cycle_graph(5), 2)
    assert not is_weakly_f_degenerate(complete_graph(4), 2)


def test_weak_game_matches_naive_oracle(rng):
    for _ in range(40):
        n = rng.randrange(1, 6)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        vals = [rng.randrange(0, 4) for _ in range(n)]
        assert is_weakly_f_degenerate(g, vals) == naive_weak_game(g, vals)


def test_weak_degeneracy_values():
    assert weak_degeneracy(Graph.from_edges(3, [])) == 0
    for n in range(2, 7):
        assert weak_degeneracy(complete_graph(n)) == n - 1
    for n in range(3, 9):
        assert weak_degeneracy(cycle_graph(n)) == 2


def test_weak_at_most_classic():
    for n in range(1, 8):
        for g in connected_graphs(n) if n <= 6 else []:
            assert weak_degeneracy(g) <= degeneracy(g)


def test_witness_soundness(rng):
    for _ in range(25):
        n = rng.randrange(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        d = weak_degeneracy(g)
        ok, steps = is_weakly_f_degenerate(g, d, witness=True)
        assert ok
        assert replay(g, d, steps).is_empty()


def test_deg_minus_one_examples():
    assert not is_weakly_deg_minus_one_degenerate(complete_graph(4))
    k4_minus = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_weakly_deg_minus_one_degenerate(k4_minus)
    assert not is_weakly_deg_minus_one_degenerate(cycle_graph(7))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 21 - 1), st.data())
def test_monotonicity_in_budget(mask, data):
    # if the game is winnable under f, it stays winnable under any f' >= f
    n = 7
    pairs = list(itertools.combinations(range(n), 2))
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    g = Graph.from_edges(n, edges)
    f = [data.draw(st.integers(0, 3)) for _ in range(n)]
    bump = [data.draw(st.integers(0, 2)) for _ in range(n)]
    f2 = [a + b for a, b in zip(f, bump)]
    if is_weakly_f_degenerate(g, f):
        assert is_weakly_f_degenerate(g, f2)


def delete_only_removable(g, vals):
    """Oracle: the game restricted to Delete moves, memoized."""
    memo = {}

    def rec(mask, bud):
        if mask == 0:
            return True
        key = (mask, bud)
        if key in memo:
            return memo[key]
        res = False
        for u in range(g.n):
            if not (mask >> u) & 1:
                continue
            nbrs = [w for w in range(g.n)
                    if (mask >> w) & 1 and g.has_edge(u, w)]
            if all(bud[w] >= 1 for w in nbrs):
                nb = list(bud)
                for w in nbrs:
                    nb[w] -= 1
                if rec(mask & ~(1 << u), tuple(nb)):
                    res = True
                    break
        memo[key] = res
        return res

    return rec((1 << g.n) - 1, tuple(vals))


def test_delete_only_equivalence(rng):
    # removable by Delete alone under f <=> strictly (f+1)-degenerate
    for _ in range(80):
        n = rng.randrange(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        f = [rng.randrange(0, 4) for _ in range(n)]
        lhs = delete_only_removable(g, f)
        rhs = is_strictly_f_degenerate(g, [x + 1 for x in f])
        assert lhs == rhs


def test_brooks_type_small():
    for n in range(1, 6):
        for g in connected_graphs(n):
            assert is_weakly_deg_minus_one_degenerate(g) == (not is_gdp_tree(g))


def test_gallai_type_components():
    # if G is not weakly (h-1)-degenerate but G - U is, with U the vertices
    # of degree h, then each component of G[U] is a GDP-tree
    for n in range(2, 6):
        for g in connected_graphs(n):
            maxdeg = max(g.degrees())
            for h in range(1, maxdeg + 1):
                if is_weakly_f_degenerate(g, h - 1):
                    continue
                u_set = [v for v in range(g.n) if g.degree(v) == h]
                if not u_set:
                    continue
                rest = [v for v in range(g.n) if v not in u_set]
                sub_rest, _ = induced_subgraph(g, rest)
                budget = [h - 1] * sub_rest.n
                if rest and not is_weakly_f_degenerate(sub_rest, budget):
                    continue
                sub_u, _ = induced_subgraph(g, u_set)
                for comp in sub_u.component_masks():
                    verts = [v for v in range(sub_u.n) if (comp >> v) & 1]
                    cg, _ = induced_subgraph(sub_u, verts)
                    assert is_gdp_tree(cg)
