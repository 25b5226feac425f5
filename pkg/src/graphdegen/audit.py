"""Structure-theorem auditors.

Given a graph satisfying one of the three structural hypotheses, report
which disjunct of the corresponding structure statement holds, with a
witness. Hypotheses are checked first (forbidden-pattern scans, the
intersecting-5-cycle scan, the good-cycle test on the designated outer
face); a hypothesis failure and a no-clause outcome raise distinct errors,
and the latter must never fire on valid inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .configs import catalog, find_matches, has_match
from .graphs import Graph, GraphError
from .rotation import FaceWalk, RotationSystem, faces

THEOREMS = ("plane-3456", "toroidal-345", "intersecting-5")

_FORBIDDEN = {
    "plane-3456": ["cyc3456-a", "cyc3456-b", "cyc3456-c", "cyc3456-d",
                   "cyc3456-e", "cyc3456-f", "cyc3456-g", "cyc3456-h"],
    "toroidal-345": ["tor345-a", "tor345-b"],
}

_INTERNAL_PATTERNS = {
    "plane-3456": ["kite", "f35"],
    "intersecting-5": ["kite", "f35", "rc1-a", "rc-1", "rc-2a", "rc-2b"],
}


class HypothesisViolated(ValueError):
    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(reason)


class NoClauseHolds(RuntimeError):
    pass


@dataclass
class AuditReport:
    theorem: str
    clause: str          # first satisfied clause
    witness: object
    satisfied: list = field(default_factory=list)  # all satisfied clauses


def cycles_of_length(g: Graph, length):
    """All simple cycles of the given length, as canonical vertex tuples."""
    out = set()

    def rec(path, seen):
        last = path[-1]
        if len(path) == length:
            if g.has_edge(last, path[0]):
                cyc = path
                best = None
                for i in range(length):
                    rot = cyc[i:] + cyc[:i]
                    for cand in (tuple(rot), tuple(rot[:1] + rot[1:][::-1])):
                        if best is None or cand < best:
                            best = cand
                out.add(best)
            return
        for u in g.neighbors(last):
            if u > path[0] and u not in seen:
                rec(path + [u], seen | {u})

    for v in range(g.n):
        rec([v], {v})
    return sorted(out)


def intersecting_five_cycles(g: Graph):
    """A pair of distinct 5-cycles sharing a vertex, or None."""
    fives = cycles_of_length(g, 5)
    for i in range(len(fives)):
        for j in range(i + 1, len(fives)):
            if set(fives[i]) & set(fives[j]):
                return fives[i], fives[j]
    return None


def is_good_cycle(g: Graph, cycle):
    """A 4-or-shorter cycle is good when no vertex of G has four neighbors
    on it."""
    cyc = list(cycle)
    if len(cyc) > 4:
        return False
    for v in range(g.n):
        if sum(1 for u in cyc if g.has_edge(v, u)) >= 4:
            return False
    return True


def _check_cycle(g: Graph, cycle):
    cyc = list(cycle)
    if len(set(cyc)) != len(cyc):
        raise GraphError("outer walk is not a simple cycle")
    for i, v in enumerate(cyc):
        if not g.has_edge(v, cyc[(i + 1) % len(cyc)]):
            raise GraphError("outer vertices do not form a cycle")


def _outer_cycle(g: Graph, rot, outer):
    if isinstance(outer, FaceWalk):
        return [u for u, _ in outer.arcs]
    return list(outer)


def audit_structure(g: Graph, rot: RotationSystem | None, outer, theorem):
    """Report the first satisfied disjunct of the named structure statement.

    plane-3456    hypotheses: plane rotation, connected, none of the eight
                  short-cycle patterns anywhere, outer a good 4-minus-cycle.
                  Clauses: all vertices on the outer cycle; an internal
                  3-minus-vertex; an internal induced kite; an internal
                  induced f35.
    toroidal-345  abstract graph (no embedding checked), none of the two
                  forbidden patterns. Clauses: minimum degree at most 3;
                  an f35 match; an rc-a/b/c match; 4-regular.
    intersecting-5 hypotheses: plane rotation, connected, no two 5-cycles
                  sharing a vertex, outer a triangle. Clauses: all vertices
                  on the triangle; an internal 3-minus-vertex; an internal
                  induced match of kite/f35/rc1-a/rc-1/rc-2a/rc-2b.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem identifier {theorem!r}")
    cat = catalog()
    satisfied = []

    if theorem == "toroidal-345":
        for name in _FORBIDDEN[theorem]:
            ms = find_matches(g, cat[name], limit=1)
            if ms:
                raise HypothesisViolated(
                    f"forbidden pattern {name} present", ms[0])
        if g.n and min(g.degrees()) <= 3:
            v = min(range(g.n), key=lambda x: (g.degree(x), x))
            satisfied.append(("min-degree-3", v))
        for name in ["f35", "rc-a", "rc-b", "rc-c"]:
            ms = find_matches(g, cat[name], limit=1)
            if ms:
                satisfied.append((f"match-{name}", ms[0]))
        if g.n and all(g.degree(v) == 4 for v in range(g.n)):
            satisfied.append(("4-regular", None))
        if not satisfied:
            raise NoClauseHolds(
                "no structural clause holds; this falsifies the statement")
        return AuditReport(theorem, satisfied[0][0], satisfied[0][1], satisfied)

    # plane theorems need the embedding and the outer cycle
    if rot is None or outer is None:
        raise GraphError(f"{theorem} needs a rotation system and an outer face")
    if not g.is_connected():
        raise HypothesisViolated("graph must be connected")
    faces(g, rot)  # validates the plane rotation (Euler)
    cyc = _outer_cycle(g, rot, outer)
    _check_cycle(g, cyc)

    if theorem == "plane-3456":
        for name in _FORBIDDEN[theorem]:
            ms = find_matches(g, cat[name], limit=1)
            if ms:
                raise HypothesisViolated(
                    f"forbidden pattern {name} present", ms[0])
        if len(cyc) > 4 or not is_good_cycle(g, cyc):
            raise HypothesisViolated("outer cycle must be a good 4-minus-cycle")
    else:  # intersecting-5
        bad = intersecting_five_cycles(g)
        if bad is not None:
            raise HypothesisViolated("two intersecting 5-cycles", bad)
        if len(cyc) != 3:
            raise HypothesisViolated("outer cycle must be a triangle")

    boundary = set(cyc)
    if boundary == set(range(g.n)):
        satisfied.append(("all-on-outer-cycle", tuple(sorted(boundary))))
    internal = [v for v in range(g.n) if v not in boundary]
    small = [v for v in internal if g.degree(v) <= 3]
    if small:
        satisfied.append(("internal-3minus-vertex", small[0]))
    for name in _INTERNAL_PATTERNS[theorem]:
        ms = find_matches(g, cat[name], boundary=boundary, limit=1)
        if ms:
            satisfied.append((f"match-{name}", ms[0]))
    if not satisfied:
        raise NoClauseHolds(
            "no structural clause holds; this falsifies the statement")
    return AuditReport(theorem, satisfied[0][0], satisfied[0][1], satisfied)
