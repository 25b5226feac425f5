"""Plane rotation systems and face traversal.

Embeddings are inputs, never computed: a rotation system lists each vertex's
neighbors in cyclic order, faces come from the next-edge rule, and anything
whose face count violates Euler's formula for the plane is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError


class RotationError(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    order: tuple  # per vertex, tuple of neighbor ids in cyclic order

    @staticmethod
    def from_lists(g: Graph, lists):
        if len(lists) != g.n:
            raise RotationError(f"rotation has {len(lists)} rows, graph has {g.n} vertices")
        for v, row in enumerate(lists):
            if sorted(row) != sorted(g.neighbors(v)):
                raise RotationError(
                    f"rotation row {v} is not a permutation of the neighbors of {v}")
        return RotationSystem(tuple(tuple(row) for row in lists))

    def next_after(self, v, u):
        """Neighbor following u in the cyclic order at v."""
        row = self.order[v]
        i = row.index(u)
        return row[(i + 1) % len(row)]

    def to_text(self):
        return "\n".join(" ".join(str(u) for u in row) for row in self.order) + "\n"

    @staticmethod
    def from_text(g: Graph, text):
        rows = []
        for i, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                rows.append([int(x) for x in line.split()])
            except ValueError:
                raise RotationError(f"line {i}: expected integer neighbor ids") from None
        if len(rows) != g.n:
            raise RotationError(f"rotation file has {len(rows)} rows, graph has {g.n} vertices")
        return RotationSystem.from_lists(g, rows)


@dataclass(frozen=True)
class FaceWalk:
    arcs: tuple  # closed sequence of directed edges (u, v)

    def __len__(self):
        return len(self.arcs)

    def vertices(self):
        return [u for u, _ in self.arcs]

    def vertex_set(self):
        return frozenset(u for u, _ in self.arcs)


def faces(g: Graph, rot: RotationSystem):
    """Face walks of the embedding; rejects rotations that fail Euler's
    formula for the plane (torus data is out of scope, not reinterpreted)."""
    if not g.is_connected():
        raise RotationError("face traversal needs a connected graph")
    darts = {(u, v) for u in range(g.n) for v in g.neighbors(u)}
    out = []
    while darts:
        start = min(darts)
        walk = []
        cur = start
        while True:
            walk.append(cur)
            darts.discard(cur)
            u, v = cur
            cur = (v, rot.next_after(v, u))
            if cur == start:
                break
            if cur not in darts:
                raise RotationError("face walk does not close; inconsistent rotation")
        out.append(FaceWalk(tuple(walk)))
    total = sum(len(f) for f in out)
    if total != 2 * g.m:
        raise RotationError("face traversal did not cover every directed edge")
    if g.n - g.m + len(out) != 2:
        raise RotationError(
            f"Euler check failed: n - m + f = {g.n - g.m + len(out)}, expected 2 "
            "(not a plane rotation system)")
    return out
