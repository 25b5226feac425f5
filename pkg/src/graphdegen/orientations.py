"""Orientations, circulation counting, and Alon-Tarsi numbers.

diff(D) counts spanning sub-circulations by parity (even minus odd); a
k-AT orientation needs diff nonzero and max out-degree below k. Counting is
combinatorial (arc-subset search with imbalance pruning), never algebraic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import Graph, GraphError

MAX_DIFF_ARCS = 30  # 2^30 subsets is the exact-search ceiling


class OrientationError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: tuple  # one (u, v) per underlying edge, meaning u -> v

    @staticmethod
    def build(base: Graph, arcs):
        arcs = [tuple(a) for a in arcs]
        seen = set()
        for u, v in arcs:
            e = (min(u, v), max(u, v))
            if not base.has_edge(u, v):
                raise OrientationError(f"arc ({u}, {v}) is not an underlying edge")
            if e in seen:
                raise OrientationError(f"edge {e} oriented twice")
            seen.add(e)
        if len(arcs) != base.m:
            raise OrientationError("every underlying edge needs exactly one direction")
        return Orientation(base, tuple(sorted(arcs)))

    def out_degree(self, v):
        return sum(1 for a, _ in self.arcs if a == v)

    def in_degree(self, v):
        return sum(1 for _, b in self.arcs if b == v)

    def max_out_degree(self):
        return max((self.out_degree(v) for v in range(self.base.n)), default=0)

    def to_text(self):
        lines = [f"{self.base.n} {self.base.m}"]
        lines += [f"{u} {v}" for u, v in self.arcs]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text):
        g = Graph.from_edge_list_text(
            "\n".join(
                line if i == 0 else f"{min(map(int, line.split()))} {max(map(int, line.split()))}"
                for i, line in enumerate(text.splitlines()) if line.strip()
            )
        )
        arcs = []
        for line in text.splitlines()[1:]:
            if line.strip():
                u, v = map(int, line.split())
                arcs.append((u, v))
        return Orientation.build(g, arcs)


def is_circulation(n, arcs):
    """Balance check on an explicit arc set (empty arc sets qualify)."""
    imb = [0] * n
    for u, v in arcs:
        imb[u] += 1
        imb[v] -= 1
    return all(x == 0 for x in imb)


def circulations(n, arcs):
    """All balanced arc subsets, by brute force (test oracle)."""
    m = len(arcs)
    out = []
    for mask in range(1 << m):
        sub = [arcs[i] for i in range(m) if (mask >> i) & 1]
        if is_circulation(n, sub):
            out.append(mask)
    return out


def diff_value(ort_or_arcs, n=None):
    """diff = (# even sub-circulations) - (# odd ones); exact."""
    if isinstance(ort_or_arcs, Orientation):
        arcs = list(ort_or_arcs.arcs)
        n = ort_or_arcs.base.n
    else:
        arcs = list(ort_or_arcs)
        if n is None:
            raise ValueError("vertex count required for a raw arc list")
    if len(arcs) > MAX_DIFF_ARCS:
        raise BudgetExceeded(f"diff supports at most {MAX_DIFF_ARCS} arcs exactly")
    even, odd = kernels.diff_counts(n, arcs)
    return even - odd


def is_k_at_orientation(ort: Orientation, k):
    if k < 1:
        raise ValueError("k must be at least 1")
    return ort.max_out_degree() < k and diff_value(ort) != 0


def _component_edge_groups(g: Graph):
    groups = []
    for comp in g.component_masks():
        groups.append([(u, v) for u, v in g.edges() if (comp >> u) & 1])
    return groups


def at_number(g: Graph, max_edges=24):
    """Exact Alon-Tarsi number by orientation scan with out-degree pruning.

    Components are independent: diff multiplies and the out-degree maximum
    splits, so the answer is the max over components.
    """
    if g.m == 0:
        return 1
    if g.m > max_edges:
        raise BudgetExceeded(f"at_number scan supports at most {max_edges} edges")
    best_total = 1
    for edges in _component_edge_groups(g):
        if not edges:
            continue
        me = len(edges)
        outdeg = [0] * g.n
        arcs = [None] * me

        def scan(i, cap):
            # orientation with max out-degree <= cap and diff != 0?
            if i == me:
                return diff_value(arcs, g.n) != 0
            u, v = edges[i]
            for a, b in ((u, v), (v, u)):
                if outdeg[a] < cap:
                    outdeg[a] += 1
                    arcs[i] = (a, b)
                    if scan(i + 1, cap):
                        outdeg[a] -= 1
                        return True
                    outdeg[a] -= 1
            arcs[i] = None
            return False

        # iterative deepening on the allowed out-degree
        d = 1
        while not scan(0, d):
            d += 1
        best_total = max(best_total, d + 1)
    return best_total


def diff_product(ort: Orientation, x1, x2):
    """Both sides of the one-way-cut product identity: diff of the whole
    digraph, and the product of the two induced sides."""
    x1, x2 = set(x1), set(x2)
    if x1 & x2 or (x1 | x2) != set(range(ort.base.n)):
        raise OrientationError("parts must partition the vertex set")
    for u, v in ort.arcs:
        if u in x2 and v in x1:
            raise OrientationError(
                f"arc ({u}, {v}) crosses against the cut; all arcs must go X1 -> X2")
    lhs = diff_value(ort)
    a1 = [(u, v) for u, v in ort.arcs if u in x1 and v in x1]
    a2 = [(u, v) for u, v in ort.arcs if u in x2 and v in x2]
    rhs = diff_value(a1, ort.base.n) * diff_value(a2, ort.base.n)
    return lhs, rhs


def find_boundary_sink_orientation(g: Graph, cycle_vertices, k, max_edges=24):
    """Orientation of G minus the edges inside the cycle's vertex set, with
    every edge touching that set directed into it, max out-degree < k and
    diff nonzero; None when the exhaustive scan finds none."""
    cyc = set(cycle_vertices)
    for v in cyc:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex id {v}")
    forced = []
    free = []
    for u, v in g.edges():
        if u in cyc and v in cyc:
            continue  # removed: edge inside the cycle's vertex set
        if v in cyc:
            forced.append((u, v))
        elif u in cyc:
            forced.append((v, u))
        else:
            free.append((u, v))
    if len(forced) + len(free) > max_edges:
        raise BudgetExceeded("orientation scan too large")
    outdeg = [0] * g.n
    for u, _ in forced:
        outdeg[u] += 1
    if any(outdeg[v] >= k for v in range(g.n)):
        return None
    arcs = list(forced) + [None] * len(free)

    def scan(i):
        if i == len(free):
            if diff_value(arcs, g.n) != 0:
                return True
            return False
        u, v = free[i]
        for a, b in ((u, v), (v, u)):
            if outdeg[a] + 1 < k:
                outdeg[a] += 1
                arcs[len(forced) + i] = (a, b)
                if scan(i + 1):
                    return True
                outdeg[a] -= 1
        arcs[len(forced) + i] = None
        return False

    if scan(0):
        sub = Graph.from_edges(g.n, [(min(u, v), max(u, v)) for u, v in arcs])
        return Orientation.build(sub, arcs)
    return None
