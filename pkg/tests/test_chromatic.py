import itertools

from graphdegen.chromatic import (chromatic_number, is_k_choosable,
                                  list_chromatic_number)
from graphdegen.graphs import (Graph, complete_graph, connected_graphs,
                               cycle_graph, path_graph, petersen_graph)


def brute_colorable(g, k):
    for combo in itertools.product(range(k), repeat=g.n):
        if all(combo[u] != combo[v] for u, v in g.edges()):
            return True
    return False


def test_chromatic_values():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(cycle_graph(6)) == 2
    assert chromatic_number(petersen_graph()) == 3


def test_chromatic_matches_brute(rng):
    for _ in range(50):
        n = rng.randrange(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        k = chromatic_number(g)
        assert brute_colorable(g, k)
        if k > 1:
            assert not brute_colorable(g, k - 1)


def pool_choosable(g, k):
    """The literal definition: every assignment of k-lists from a pool of
    size k*n admits a proper coloring. Tiny graphs only."""
    pool = range(k * g.n)
    lists = list(itertools.combinations(pool, k))
    for combo in itertools.product(lists, repeat=g.n):
        ok = False
        for pick in itertools.product(*combo):
            if all(pick[u] != pick[v] for u, v in g.edges()):
                ok = True
                break
        if not ok:
            return False
    return True


def test_choosable_matches_pool_enumeration():
    # the color-type quotient agrees with the literal pool enumeration
    cases = [
        (path_graph(2), 1), (path_graph(2), 2),
        (path_graph(3), 1), (path_graph(3), 2),
        (complete_graph(3), 2),
        (cycle_graph(4), 2),
    ]
    for g, k in cases:
        assert is_k_choosable(g, k) == pool_choosable(g, k), (g.edges(), k)


def test_list_chromatic_values():
    assert list_chromatic_number(cycle_graph(5)) == 3
    assert list_chromatic_number(cycle_graph(4)) == 2
    assert list_chromatic_number(complete_graph(4)) == 4
    # theta graph on 5 vertices is the classic 2-choosable exception
    k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert list_chromatic_number(k23) == 2
    # while these bipartite graphs need three colors on lists
    k24 = Graph.from_edges(6, [(0, 2), (0, 3), (0, 4), (0, 5),
                               (1, 2), (1, 3), (1, 4), (1, 5)])
    assert list_chromatic_number(k24) == 3
    k33 = Graph.from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5),
                               (2, 3), (2, 4), (2, 5)])
    assert list_chromatic_number(k33) == 3


def test_greedy_shortcut_is_exact():
    k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    for g in [cycle_graph(4), cycle_graph(5), complete_graph(4),
              path_graph(4), k23]:
        assert list_chromatic_number(g, greedy_shortcut=True) == \
            list_chromatic_number(g, greedy_shortcut=False)


def test_choosable_witness_is_uncolorable():
    k33 = Graph.from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5),
                               (2, 3), (2, 4), (2, 5)])
    ok, bad = is_k_choosable(k33, 2, witness=True)
    assert not ok and bad is not None
    types, mult = bad
    # expand into explicit lists and verify no proper coloring exists
    colors = []
    for t, m in zip(types, mult):
        colors.extend([t] * m)
    lists = [[ci for ci, t in enumerate(colors) if (t >> v) & 1]
             for v in range(6)]
    assert all(len(lst) == 2 for lst in lists)
    for pick in itertools.product(*lists):
        assert any(pick[u] == pick[v] for u, v in k33.edges())


def test_chain_on_all_small_graphs():
    from graphdegen.covers import dp_chromatic_number
    from graphdegen.degeneracy import degeneracy, weak_degeneracy
    for n in range(1, 5):
        for g in connected_graphs(n):
            chi = chromatic_number(g)
            chl = list_chromatic_number(g)
            chdp = dp_chromatic_number(g, greedy_cert=False)
            wd = weak_degeneracy(g)
            d = degeneracy(g)
            assert chi <= chl <= chdp <= wd + 1 <= d + 1, g.edges()
