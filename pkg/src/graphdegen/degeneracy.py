"""Strict f-degeneracy and the weak-degeneracy removal game.

Strict side: removing orders and the classic degeneracy peel. Weak side: the
two legal moves (Delete and DeleteSave), exact game search with a
transposition table, weak degeneracy, and the Brooks-type (deg-1) check.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import Graph, GraphError


class IllegalMove(ValueError):
    pass


class NotAdjacent(IllegalMove):
    pass


def _normalize_budget(g: Graph, f):
    """Budget as a list indexed by vertex; accepts dict, sequence or int."""
    if isinstance(f, int):
        vals = [f] * g.n
    elif isinstance(f, dict):
        if set(f) != set(range(g.n)):
            raise GraphError("budget must be defined on exactly the vertex set")
        vals = [f[v] for v in range(g.n)]
    else:
        vals = list(f)
        if len(vals) != g.n:
            raise GraphError("budget must be defined on exactly the vertex set")
    if any(x < 0 for x in vals):
        raise GraphError("budget values must be nonnegative")
    return vals


# ---------------------------------------------------------------------------
# strict side
# ---------------------------------------------------------------------------

def f_removing_order(g: Graph, f):
    """Greedy removing order (each vertex has < f(v) later neighbors), or
    None when no such order exists. Lowest eligible id goes first."""
    vals = _normalize_budget(g, f)
    return kernels.peel_order(list(g.adj), vals)


def is_strictly_f_degenerate(g: Graph, f):
    vals = _normalize_budget(g, f)
    return kernels.strict_peel(list(g.adj), vals)


def degeneracy(g: Graph):
    """Least d such that every subgraph has a vertex of degree <= d."""
    if g.n == 0:
        return 0
    d = 0
    while not kernels.strict_peel(list(g.adj), [d + 1] * g.n):
        d += 1
    return d


# ---------------------------------------------------------------------------
# weak-degeneracy game
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RemovalStep:
    kind: str          # "delete" | "delete_save"
    u: int
    w: int | None = None

    def __post_init__(self):
        if self.kind not in ("delete", "delete_save"):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if (self.kind == "delete_save") != (self.w is not None):
            raise ValueError("delete_save steps carry a save vertex, delete steps do not")


@dataclass(frozen=True)
class GameState:
    graph: Graph
    remaining: int     # bitmask
    budget: tuple

    @staticmethod
    def initial(g: Graph, f):
        vals = _normalize_budget(g, f)
        return GameState(g, (1 << g.n) - 1, tuple(vals))

    def alive(self, v):
        return bool((self.remaining >> v) & 1)

    def is_empty(self):
        return self.remaining == 0


def delete(state: GameState, u):
    """Delete u; every remaining neighbor loses one budget unit. Illegal if
    a neighbor is already at zero."""
    if not state.alive(u):
        raise IllegalMove(f"vertex {u} not in the remaining graph")
    g = state.graph
    bud = list(state.budget)
    rest = g.adj[u] & state.remaining
    while rest:
        w = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if bud[w] == 0:
            raise IllegalMove(f"delete({u}) would drive the budget of {w} negative")
        bud[w] -= 1
    return GameState(g, state.remaining & ~(1 << u), tuple(bud))


def delete_save(state: GameState, u, w):
    """Delete u sparing w; legal only when budget(u) > budget(w)."""
    if not state.alive(u):
        raise IllegalMove(f"vertex {u} not in the remaining graph")
    if not state.alive(w) or not state.graph.has_edge(u, w):
        raise NotAdjacent(f"{u} and {w} must be adjacent remaining vertices")
    if state.budget[u] <= state.budget[w]:
        raise IllegalMove(
            f"delete_save({u}, {w}) needs budget({u}) > budget({w}); "
            f"have {state.budget[u]} <= {state.budget[w]}")
    g = state.graph
    bud = list(state.budget)
    rest = g.adj[u] & state.remaining & ~(1 << w)
    while rest:
        x = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if bud[x] == 0:
            raise IllegalMove(f"delete_save({u}, {w}) would drive the budget of {x} negative")
        bud[x] -= 1
    return GameState(g, state.remaining & ~(1 << u), tuple(bud))


def apply_step(state: GameState, step: RemovalStep):
    if step.kind == "delete":
        return delete(state, step.u)
    return delete_save(state, step.u, step.w)


def replay(g: Graph, f, steps):
    """Replay a step list from the initial state; raises on any illegal move,
    returns the final state."""
    state = GameState.initial(g, f)
    for step in steps:
        state = apply_step(state, step)
    return state


def _witness_search(g: Graph, vals):
    """Witness-producing variant of the game search (pure Python; the kernel
    answers the plain decision faster)."""
    n = g.n
    memo = {}

    def key_of(mask, bud):
        return (mask, tuple(b if (mask >> v) & 1 else 0 for v, b in enumerate(bud)))

    def rec(mask, bud):
        if mask == 0:
            return []
        key = key_of(mask, bud)
        if key in memo:
            return memo[key]
        verts = [v for v in range(n) if (mask >> v) & 1]
        result = None
        for u in verts:
            nbrs = g.adj[u] & mask
            rest, ok = nbrs, True
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if bud[w] == 0:
                    ok = False
                    break
            if ok:
                nb = list(bud)
                rest = nbrs
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    nb[w] -= 1
                tail = rec(mask & ~(1 << u), tuple(nb))
                if tail is not None:
                    result = [RemovalStep("delete", u)] + tail
                    break
        if result is None:
            for u in verts:
                rest0 = g.adj[u] & mask
                while rest0:
                    w = (rest0 & -rest0).bit_length() - 1
                    rest0 &= rest0 - 1
                    if bud[u] <= bud[w]:
                        continue
                    nbrs = g.adj[u] & mask & ~(1 << w)
                    rest, ok = nbrs, True
                    while rest:
                        x = (rest & -rest).bit_length() - 1
                        rest &= rest - 1
                        if bud[x] == 0:
                            ok = False
                            break
                    if not ok:
                        continue
                    nb = list(bud)
                    rest = nbrs
                    while rest:
                        x = (rest & -rest).bit_length() - 1
                        rest &= rest - 1
                        nb[x] -= 1
                    tail = rec(mask & ~(1 << u), tuple(nb))
                    if tail is not None:
                        result = [RemovalStep("delete_save", u, w)] + tail
                        break
                if result is not None:
                    break
        memo[key] = result
        return result

    return rec((1 << n) - 1, tuple(vals))


def is_weakly_f_degenerate(g: Graph, f, witness=False, max_states=None):
    """Exact decision of the removal game; with witness=True also returns a
    replayable step list (or None)."""
    vals = _normalize_budget(g, f)
    ok = kernels.weak_game(list(g.adj), vals, max_states=max_states)
    if not witness:
        return ok
    if not ok:
        return False, None
    steps = _witness_search(g, vals)
    assert steps is not None
    return True, steps


def weak_degeneracy(g: Graph, max_states=None):
    """Least d with the constant-d game winnable; capped by degeneracy."""
    if g.n == 0:
        return 0
    cap = degeneracy(g)
    for d in range(cap + 1):
        if kernels.weak_game(list(g.adj), [d] * g.n, max_states=max_states):
            return d
    raise AssertionError("unreachable: the delete-only game wins at d = degeneracy")


def is_weakly_deg_minus_one_degenerate(g: Graph):
    """The Brooks-type budget f(v) = d(v) - 1.

    Budgets are nonnegative by definition, so an isolated vertex (only the
    one-vertex graph, among connected inputs) makes the budget invalid and
    the answer False; that is the complete-block side of the equivalence
    with GDP-trees.
    """
    if not g.is_connected():
        raise GraphError("is_weakly_deg_minus_one_degenerate needs a connected graph")
    vals = [g.degree(v) - 1 for v in range(g.n)]
    if any(x < 0 for x in vals):
        return False
    return kernels.weak_game(list(g.adj), vals)
