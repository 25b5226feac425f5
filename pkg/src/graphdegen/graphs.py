"""Simple undirected graphs on dense integer ids, with bitset adjacency.

The Graph is the universe for every invariant in this package. Vertices are
0..n-1; adjacency is stored as one bitmask per vertex, which keeps the
search kernels branch-free and makes induced subgraphs cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple  # bitmask per vertex

    @staticmethod
    def from_edges(n, edges):
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    # -- basic accessors ----------------------------------------------------

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def neighbors(self, v):
        m = self.adj[v]
        out = []
        while m:
            out.append((m & -m).bit_length() - 1)
            m &= m - 1
        return out

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    @property
    def m(self):
        return sum(self.degree(v) for v in range(self.n)) // 2

    def degrees(self):
        return [self.degree(v) for v in range(self.n)]

    # -- components / connectivity -------------------------------------------

    def component_masks(self):
        seen = 0
        comps = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                rest = frontier
                while rest:
                    u = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    nxt |= self.adj[u] & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.component_masks()) == 1

    def add_edge(self, u, v):
        if self.has_edge(u, v) or u == v:
            raise GraphError("edge already present or loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    # -- text format ----------------------------------------------------------

    def to_edge_list_text(self):
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_edge_list_text(text):
        lines = text.splitlines()
        if not lines:
            raise GraphError("empty edge-list file (line 1)")
        head = lines[0].split()
        if len(head) != 2:
            raise GraphError("line 1: expected 'n m'")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise GraphError("line 1: expected integers 'n m'") from None
        edges = []
        for i, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"line {i}: expected 'u v'")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphError(f"line {i}: expected integers 'u v'") from None
            if not u < v:
                raise GraphError(f"line {i}: edges must be written u v with u < v")
            edges.append((u, v))
        if len(edges) != m:
            raise GraphError(f"edge count mismatch: header says {m}, found {len(edges)}")
        try:
            return Graph.from_edges(n, edges)
        except GraphError as e:
            raise GraphError(str(e)) from None


def induced_subgraph(g: Graph, vertices):
    """Induced subgraph plus the old-id -> new-id mapping (sorted order)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex id {v}")
    idx = {v: i for i, v in enumerate(vs)}
    edges = [(idx[u], idx[v]) for u, v in g.edges() if u in idx and v in idx]
    return Graph.from_edges(len(vs), edges), idx


def blocks(g: Graph):
    """Biconnected components as sorted vertex lists (isolated vertices give
    singleton blocks). Standard lowpoint DFS."""
    n = g.n
    num = [0] * n
    low = [0] * n
    counter = [0]
    stack = []
    out = []

    def dfs(v, parent):
        counter[0] += 1
        num[v] = low[v] = counter[0]
        for w in g.neighbors(v):
            if num[w] == 0:
                stack.append((v, w))
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= num[v]:
                    comp = set()
                    while True:
                        e = stack.pop()
                        comp.update(e)
                        if e == (v, w):
                            break
                    out.append(sorted(comp))
            elif w != parent and num[w] < num[v]:
                stack.append((v, w))
                low[v] = min(low[v], num[w])

    for v in range(n):
        if num[v] == 0:
            dfs(v, -1)
            if g.degree(v) == 0:
                out.append([v])
    out.sort()
    return out


def _is_cycle_graph(g: Graph):
    return (g.n >= 3 and g.is_connected()
            and all(g.degree(v) == 2 for v in range(g.n)))


def _is_complete_graph(g: Graph):
    return g.m == g.n * (g.n - 1) // 2


def is_gdp_tree(g: Graph):
    """True iff every block induces a cycle or a complete graph (K1 and K2
    count as complete). Requires a connected graph."""
    if not g.is_connected():
        raise GraphError("is_gdp_tree needs a connected graph")
    for blk in blocks(g):
        sub, _ = induced_subgraph(g, blk)
        if not (_is_complete_graph(sub) or _is_cycle_graph(sub)):
            return False
    return True


# ---------------------------------------------------------------------------
# small-graph generation (used by tests and the chain command)
# ---------------------------------------------------------------------------

def _iso_invariant(g: Graph):
    per_vertex = sorted(
        (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))
        for v in range(g.n)
    )
    return (g.n, g.m, tuple(per_vertex))


def are_isomorphic(g1: Graph, g2: Graph):
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    n = g1.n
    mapping = [-1] * n
    used = [False] * n

    def rec(v):
        if v == n:
            return True
        for w in range(n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for u in range(v):
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(v + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return rec(0)


def connected_graphs(n):
    """All connected graphs on n vertices, one per isomorphism class.

    Labeled enumeration deduplicated by a degree-profile invariant plus
    explicit isomorphism tests inside each bucket; fine up to n = 7.
    """
    if n == 1:
        yield Graph.from_edges(1, [])
        return
    pairs = list(combinations(range(n), 2))
    buckets = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph.from_edges(n, edges)
        if not g.is_connected():
            continue
        inv = _iso_invariant(g)
        reps = buckets.setdefault(inv, [])
        if any(are_isomorphic(g, r) for r in reps):
            continue
        reps.append(g)
        yield g


def random_connected_graph(n, rng, p=0.5):
    pairs = list(combinations(range(n), 2))
    while True:
        edges = [e for e in pairs if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g


# small named graphs, handy in tests and fixtures

def complete_graph(n):
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
