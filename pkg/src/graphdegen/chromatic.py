"""Exact chromatic and list-chromatic numbers on tiny graphs.

Plumbing for the inequality-chain checks: plain backtracking for chi, and an
exhaustive adversary enumeration for choosability. List assignments are
enumerated up to color relabeling as multisets of "color types" (the set of
vertices carrying the color); two colors with disjoint types can always be
merged into one harder assignment, so only pairwise-intersecting families
need checking.
"""

from __future__ import annotations

from .graphs import Graph


def chromatic_number(g: Graph):
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def colorable(k):
        colors = [-1] * n

        def rec(i, used_max):
            if i == n:
                return True
            v = order[i]
            forbidden = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
            # colors beyond the first unused one are interchangeable
            for c in range(min(k, used_max + 2)):
                if c in forbidden:
                    continue
                colors[v] = c
                if rec(i + 1, max(used_max, c)):
                    return True
                colors[v] = -1
            return False

        return rec(0, -1)

    k = 1
    while not colorable(k):
        k += 1
    return k


def is_k_choosable(g: Graph, k, witness=False, greedy_shortcut=False):
    """Exhaustive decision of k-choosability.

    List assignments are enumerated (in the kernel) as multisets of color
    types with per-vertex multiplicity sums equal to k, restricted to
    pairwise intersecting type families: merging two disjoint-type colors
    only makes an assignment harder to color, so a failing assignment exists
    in the restricted family whenever one exists at all.

    With greedy_shortcut a (k-1)-degenerate graph is accepted outright
    (coloring along a removing order always leaves a free list color);
    exact either way, only the certificate differs.
    """
    if g.m == 0:
        return (True, None) if witness else True
    if greedy_shortcut and not witness:
        from .degeneracy import degeneracy
        if degeneracy(g) <= k - 1:
            return True
    from . import kernels
    ok, bad = kernels.choosable_check(g.n, list(g.adj), k)
    if witness:
        return ok, bad
    return ok


def list_chromatic_number(g: Graph, greedy_shortcut=False):
    k = 1
    while not is_k_choosable(g, k, greedy_shortcut=greedy_shortcut):
        k += 1
    return k
