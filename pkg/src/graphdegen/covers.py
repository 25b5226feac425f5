"""Covers, matching assignments, and strictly f-degenerate transversals.

A cover places a fan of s slots over every vertex and joins fans along edges
by partial matchings; a transversal picks one slot per vertex. The solver
asks for a transversal whose induced subgraph of the cover is strictly
f-degenerate (delegating the degeneracy test to the game-free peel).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from . import kernels
from .kernels import pure as _pure_kernels
from .degeneracy import is_strictly_f_degenerate
from .graphs import Graph, GraphError


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class Cover:
    base: Graph
    s: int
    matchings: tuple  # ((u, v), pairs) sorted; pairs = tuple of (i, j), 0-based

    @staticmethod
    def build(base: Graph, s, matchings):
        """matchings: dict (u, v) with u < v -> iterable of (i, j) slot pairs."""
        if s < 1:
            raise CoverError("fan size must be at least 1")
        edge_set = {(u, v) for u, v in base.edges()}
        items = []
        for (u, v), pairs in sorted(matchings.items()):
            if (u, v) not in edge_set:
                raise CoverError(f"matching on non-edge ({u}, {v})")
            if u >= v:
                raise CoverError("matching keys must be written (u, v) with u < v")
            pl = sorted(tuple(p) for p in pairs)
            us = [i for i, _ in pl]
            vs = [j for _, j in pl]
            if len(set(us)) != len(us) or len(set(vs)) != len(vs):
                raise CoverError(f"pairs on edge ({u}, {v}) do not form a matching")
            for i, j in pl:
                if not (0 <= i < s and 0 <= j < s):
                    raise CoverError(f"slot out of range on edge ({u}, {v})")
            items.append(((u, v), tuple(pl)))
        return Cover(base, s, tuple(items))

    @staticmethod
    def identity(base: Graph, s):
        return Cover.build(base, s, {e: [(i, i) for i in range(s)] for e in base.edges()})

    @staticmethod
    def from_permutations(base: Graph, s, perm_by_edge):
        """Full cover given one permutation per edge: (u,i) ~ (v, perm[i])."""
        return Cover.build(
            base, s,
            {e: [(i, p[i]) for i in range(s)] for e, p in perm_by_edge.items()})

    def fan_index(self, v, i):
        return v * self.s + i

    def fan_adjacency(self):
        """Bitmask adjacency over the n*s fan vertices."""
        tot = self.base.n * self.s
        h = [0] * tot
        for (u, v), pairs in self.matchings:
            for i, j in pairs:
                a = self.fan_index(u, i)
                b = self.fan_index(v, j)
                h[a] |= 1 << b
                h[b] |= 1 << a
        return h

    def matched(self, u, i, v, j):
        if u > v:
            u, v, i, j = v, u, j, i
        for (a, b), pairs in self.matchings:
            if (a, b) == (u, v):
                return (i, j) in pairs
        return False

    def relabel(self, sigma):
        """Gauge change: per-vertex slot permutations sigma[v]."""
        new = {}
        for (u, v), pairs in self.matchings:
            new[(u, v)] = [(sigma[u][i], sigma[v][j]) for i, j in pairs]
        return Cover.build(self.base, self.s, new)

    # -- JSON format (fan indices 1-based on disk) ---------------------------

    def to_json(self, f=None):
        doc = {
            "n": self.base.n,
            "s": self.s,
            "edges": [
                {"u": u, "v": v, "pairs": [[i + 1, j + 1] for i, j in pairs]}
                for (u, v), pairs in self.matchings
            ],
        }
        if f is not None:
            doc["f"] = [list(f[v]) for v in range(self.base.n)]
        return json.dumps(doc, indent=1)

    @staticmethod
    def from_json(text):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise CoverError(f"bad cover JSON: {e}") from None
        for key in ("n", "s", "edges"):
            if key not in doc:
                raise CoverError(f"cover JSON missing field {key!r}")
        n, s = doc["n"], doc["s"]
        edges = [(e["u"], e["v"]) for e in doc["edges"]]
        base = Graph.from_edges(n, edges)
        matchings = {
            (e["u"], e["v"]): [(i - 1, j - 1) for i, j in e["pairs"]]
            for e in doc["edges"]
        }
        cover = Cover.build(base, s, matchings)
        fvec = None
        if "f" in doc:
            fvec = validate_fvector(cover, doc["f"])
        return cover, fvec


def validate_fvector(cover: Cover, f, lo=0, hi=None):
    """Budget on the fan vertices: one row of s values per base vertex."""
    if len(f) != cover.base.n:
        raise CoverError("budget must cover exactly the fan vertex set")
    rows = []
    for v, row in enumerate(f):
        row = tuple(row)
        if len(row) != cover.s:
            raise CoverError(f"budget row {v} must have {cover.s} entries")
        for x in row:
            if x < lo or (hi is not None and x > hi):
                raise CoverError(f"budget value {x} out of range at vertex {v}")
        rows.append(row)
    return tuple(rows)


def validate_transversal(cover: Cover, choice):
    choice = list(choice)
    if len(choice) != cover.base.n:
        raise CoverError("transversal must pick one slot per vertex")
    for v, i in enumerate(choice):
        if not 0 <= i < cover.s:
            raise CoverError(f"invalid fan index {i} at vertex {v}")
    return choice


def transversal_subgraph(cover: Cover, choice):
    """Graph on the base ids with u ~ v iff the chosen slots are matched."""
    choice = validate_transversal(cover, choice)
    edges = []
    for (u, v), pairs in cover.matchings:
        if (choice[u], choice[v]) in pairs:
            edges.append((u, v))
    return Graph.from_edges(cover.base.n, edges)


def is_sfdt(cover: Cover, f, choice):
    f = validate_fvector(cover, f)
    choice = validate_transversal(cover, choice)
    sub = transversal_subgraph(cover, choice)
    budgets = [f[v][choice[v]] for v in range(cover.base.n)]
    return is_strictly_f_degenerate(sub, budgets)


def _sfdt_search(n, s, hadj, fvals, order, fixed):
    # the compiled kernel packs fans into one machine word; larger covers
    # fall back to the pure lane (arbitrary-width masks)
    if n * s <= 64:
        return kernels.sfdt_search(n, s, hadj, fvals, order, fixed)
    return _pure_kernels.sfdt_search(n, s, hadj, fvals, order, fixed)


def _search_order(cover: Cover, f):
    """Fail-first: most constrained vertices (sum f - degree) first."""
    n = cover.base.n
    return sorted(range(n), key=lambda v: (sum(f[v]) - cover.base.degree(v), v))


def find_sfdt(cover: Cover, f):
    """A strictly f-degenerate transversal, or None; exact backtracking."""
    f = validate_fvector(cover, f)
    hadj = cover.fan_adjacency()
    fvals = [f[v][i] for v in range(cover.base.n) for i in range(cover.s)]
    order = _search_order(cover, f)
    return _sfdt_search(cover.base.n, cover.s, hadj, fvals, order,
                        [-1] * cover.base.n)


def extend_sfdt(cover: Cover, f, fixed):
    """Complete a partial transversal (dict v -> slot) to a full SFDT.

    The fixed part must itself be strictly f-degenerate on its own fans;
    acceptance always re-checks the full transversal.
    """
    f = validate_fvector(cover, f)
    n = cover.base.n
    for v, i in fixed.items():
        if not (0 <= v < n and 0 <= i < cover.s):
            raise CoverError(f"invalid fixed choice {v} -> {i}")
    if fixed:
        w = sorted(fixed)
        sub, idx = _restrict(cover, f, w)
        if not is_sfdt(sub[0], sub[1], [fixed[v] for v in w]):
            raise CoverError("fixed part is not strictly f-degenerate")
    hadj = cover.fan_adjacency()
    fvals = [f[v][i] for v in range(n) for i in range(cover.s)]
    fix = [fixed.get(v, -1) for v in range(n)]
    order = [v for v in range(n) if v in fixed]
    order += [v for v in _search_order(cover, f) if v not in fixed]
    res = _sfdt_search(n, cover.s, hadj, fvals, order, fix)
    if res is not None and not is_sfdt(cover, f, res):
        raise AssertionError("search returned a non-SFDT transversal")
    return res


def _restrict(cover: Cover, f, vertices):
    """Cover and budget induced on a vertex subset (old ids -> position)."""
    idx = {v: i for i, v in enumerate(vertices)}
    base, _ = _induced(cover.base, vertices)
    matchings = {}
    for (u, v), pairs in cover.matchings:
        if u in idx and v in idx:
            a, b = idx[u], idx[v]
            if a < b:
                matchings[(a, b)] = pairs
            else:
                matchings[(b, a)] = [(j, i) for i, j in pairs]
    sub = Cover.build(base, cover.s, matchings)
    fsub = tuple(f[v] for v in vertices)
    return (sub, fsub), idx


def _induced(g: Graph, vertices):
    from .graphs import induced_subgraph
    return induced_subgraph(g, vertices)


# ---------------------------------------------------------------------------
# reductions: list coloring and forested coloring as SFDT instances
# ---------------------------------------------------------------------------

def cover_from_lists(g: Graph, lists):
    """List coloring as a cover: slots name list colors, matchings join
    equal colors across edges, budgets are 1 on real slots and 0 on padding."""
    if any(len(lists[v]) == 0 for v in range(g.n)):
        raise CoverError("empty color list")
    s = max(len(lists[v]) for v in range(g.n))
    slot_color = [sorted(lists[v]) for v in range(g.n)]
    matchings = {}
    for u, v in g.edges():
        pairs = []
        for i, cu in enumerate(slot_color[u]):
            for j, cv in enumerate(slot_color[v]):
                if cu == cv:
                    pairs.append((i, j))
        matchings[(u, v)] = pairs
    cover = Cover.build(g, s, matchings)
    f = tuple(
        tuple(1 if i < len(slot_color[v]) else 0 for i in range(s))
        for v in range(g.n)
    )
    return cover, f


def cover_for_forested(g: Graph, k):
    """Partition into k forests as a cover: identity matchings, budget 2
    everywhere (a graph is strictly 2-degenerate iff it is a forest)."""
    if k < 1:
        raise CoverError("need at least one color class")
    cover = Cover.identity(g, k)
    f = tuple(tuple(2 for _ in range(k)) for _ in range(g.n))
    return cover, f


# ---------------------------------------------------------------------------
# DP-chromatic number
# ---------------------------------------------------------------------------

def spanning_tree_flags(g: Graph):
    """Edge flags, True for a BFS spanning forest edge."""
    edges = g.edges()
    idx = {e: i for i, e in enumerate(edges)}
    flags = [False] * len(edges)
    seen = set()
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    key = (u, v) if u < v else (v, u)
                    flags[idx[key]] = True
                    queue.append(v)
    return edges, flags


def _conjugacy_reps(s):
    """One permutation index per conjugacy class of S_s (global fan
    relabeling maps any cover to one whose first co-tree matching is one of
    these)."""
    perms = [tuple(p) for p in permutations(range(s))]

    def cycle_type(p):
        seen = [False] * s
        t = []
        for v in range(s):
            if seen[v]:
                continue
            c = 0
            while not seen[v]:
                seen[v] = True
                v = p[v]
                c += 1
            t.append(c)
        return tuple(sorted(t))

    reps = {}
    for i, p in enumerate(perms):
        reps.setdefault(cycle_type(p), i)
    return sorted(reps.values())


def cover_space_size(g: Graph, s):
    """Number of gauge-fixed full covers enumerated for fan size s."""
    edges, flags = spanning_tree_flags(g)
    cot = sum(1 for t in flags if not t)
    if cot == 0:
        return 1
    import math
    fact = math.factorial(s)
    return len(_conjugacy_reps(s)) * fact ** (cot - 1)


class BudgetExceeded(RuntimeError):
    pass


def dp_universal_ok(g: Graph, k, max_covers=None):
    """True iff every full cover with fan size k admits an independent
    transversal; tree matchings fixed to identity, first co-tree edge over
    conjugacy-class representatives (sound by global relabeling)."""
    edges, flags = spanning_tree_flags(g)
    reps = _conjugacy_reps(k)
    status, checked, failing = kernels.dp_universal(
        g.n, k, edges, flags, reps, max_covers)
    if status == 2:
        raise BudgetExceeded(
            f"cover space for s={k} exceeds the configured budget")
    return status == 0


def dp_chromatic_number(g: Graph, max_covers=10_000_000_000, greedy_cert=True):
    """Smallest k such that every cover with fan size k and unit budgets has
    an independent transversal. Exact-or-refuse: raises BudgetExceeded when
    the gauge-fixed cover space is too large.

    With greedy_cert, k = degeneracy + 1 is accepted without enumeration:
    coloring along a removing order leaves a free slot at every vertex
    whatever the matchings do, for every cover. Exact either way.
    """
    if g.n == 0:
        return 0
    from .degeneracy import degeneracy
    cap = degeneracy(g) + 1
    k = 1
    while True:
        if greedy_cert and k == cap:
            return k
        if dp_universal_ok(g, k, max_covers):
            return k
        k += 1
        if k > g.n:
            raise AssertionError("unreachable: chi_DP is at most n")
