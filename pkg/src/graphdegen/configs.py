"""The configuration catalog and the constrained pattern matcher.

A configuration is a pattern graph whose vertices may carry an exact host
degree, an exact count of neighbors outside the matched set, and required
non-edges; reducible entries also carry an ordered reduction script with
nested save-pairs. Matching is injective, edge-preserving, and honors all
constraints; for fully-constrained patterns the degree and external counts
force the match to be induced.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources

from .graphs import Graph


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Script:
    order: tuple       # vertex ids in deletion order
    save_pairs: tuple  # (r, m) 1-based positions into order, r < m


@dataclass(frozen=True)
class Configuration:
    name: str
    pattern: Graph
    degree: tuple      # exact host degree per vertex, or None
    external: tuple    # exact outside-neighbor count per vertex, or None
    non_edges: tuple   # host pairs required absent
    script: Script | None

    @property
    def n(self):
        return self.pattern.n

    def is_reducible(self):
        return self.script is not None

    @staticmethod
    def from_doc(doc):
        n = len(doc["vertices"])
        ids = [v["id"] for v in doc["vertices"]]
        if sorted(ids) != list(range(n)):
            raise ConfigError(f"{doc.get('name')}: vertex ids must be 0..n-1")
        pattern = Graph.from_edges(n, [tuple(e) for e in doc["edges"]])
        deg = [None] * n
        ext = [None] * n
        for v in doc["vertices"]:
            deg[v["id"]] = v["degree"]
            ext[v["id"]] = v["external"]
        for i in range(n):
            if deg[i] is not None and ext[i] is not None:
                if ext[i] != deg[i] - pattern.degree(i):
                    raise ConfigError(
                        f"{doc.get('name')}: vertex {i} degree/external mismatch")
        non_edges = tuple(tuple(sorted(e)) for e in doc["non_edges"])
        for u, v in non_edges:
            if pattern.has_edge(u, v):
                raise ConfigError(f"{doc.get('name')}: non-edge ({u},{v}) is an edge")
        script = None
        if doc["script"] is not None:
            order = tuple(doc["script"]["order"])
            if sorted(order) != list(range(n)):
                raise ConfigError(f"{doc.get('name')}: script must cover all vertices")
            pairs = tuple(tuple(p) for p in doc["script"]["save_pairs"])
            for r, m in pairs:
                if not 1 <= r < m <= n:
                    raise ConfigError(f"{doc.get('name')}: bad save pair ({r},{m})")
                if not pattern.has_edge(order[r - 1], order[m - 1]):
                    raise ConfigError(
                        f"{doc.get('name')}: save pair ({r},{m}) is not an edge")
            script = Script(order, pairs)
        return Configuration(doc["name"], pattern, tuple(deg), tuple(ext),
                             non_edges, script)

    def to_doc(self):
        return {
            "name": self.name,
            "vertices": [
                {"id": i, "degree": self.degree[i], "external": self.external[i]}
                for i in range(self.n)
            ],
            "edges": [list(e) for e in self.pattern.edges()],
            "non_edges": [list(e) for e in self.non_edges],
            "script": None if self.script is None else {
                "order": list(self.script.order),
                "save_pairs": [list(p) for p in self.script.save_pairs],
            },
        }


def _data_text(name):
    return resources.files("graphdegen.data.configs").joinpath(name).read_text()


_CATALOG = None


def catalog():
    """All catalog entries in index order, name -> Configuration."""
    global _CATALOG
    if _CATALOG is None:
        names = json.loads(_data_text("_index.json"))
        out = {}
        for name in names:
            out[name] = Configuration.from_doc(json.loads(_data_text(f"{name}.json")))
        _CATALOG = out
    return dict(_CATALOG)


def catalog_checksum():
    """Digest over the canonical serialization; pinned by the test suite so
    silent catalog edits fail loudly."""
    h = hashlib.sha256()
    for name, cfg in sorted(catalog().items()):
        h.update(json.dumps(cfg.to_doc(), sort_keys=True).encode())
    return h.hexdigest()


@dataclass(frozen=True)
class Match:
    config: str
    mapping: tuple  # pattern vertex i -> host vertex mapping[i]


def find_matches(g: Graph, cfg: Configuration, boundary=(), limit=None):
    """All constraint-satisfying injective embeddings, in lexicographic order
    of the mapped host ids.

    Constraints: pattern edges map to host edges; required non-edges absent;
    exact degree and exact outside-neighbor counts hold where declared; no
    matched vertex lies in the boundary set.
    """
    bset = set(boundary)
    n = cfg.n
    host_deg = g.degrees()
    pat = cfg.pattern
    out = []
    mapping = [-1] * n
    used = set()

    # candidate host vertices per pattern vertex (static filters)
    cands = []
    for i in range(n):
        cs = []
        for h in range(g.n):
            if h in bset:
                continue
            if cfg.degree[i] is not None and host_deg[h] != cfg.degree[i]:
                continue
            if host_deg[h] < pat.degree(i):
                continue
            cs.append(h)
        cands.append(cs)

    order = sorted(range(n), key=lambda i: (len(cands[i]), -pat.degree(i)))

    def ok_partial(i, h):
        for j in range(n):
            hj = mapping[j]
            if hj < 0 or j == i:
                continue
            if pat.has_edge(i, j) and not g.has_edge(h, hj):
                return False
            if (min(i, j), max(i, j)) in cfg.non_edges and g.has_edge(h, hj):
                return False
        return True

    def final_check():
        mapped = set(mapping)
        for i in range(n):
            if cfg.external[i] is None:
                continue
            h = mapping[i]
            outside = sum(1 for u in g.neighbors(h) if u not in mapped)
            if outside != cfg.external[i]:
                return False
        return True

    def rec(k):
        if limit is not None and len(out) >= limit:
            return
        if k == n:
            if final_check():
                out.append(Match(cfg.name, tuple(mapping)))
            return
        i = order[k]
        for h in cands[i]:
            if h in used:
                continue
            if not ok_partial(i, h):
                continue
            mapping[i] = h
            used.add(h)
            rec(k + 1)
            used.discard(h)
            mapping[i] = -1

    rec(0)
    out.sort(key=lambda match: match.mapping)
    if limit is not None:
        out = out[:limit]
    return out


def has_match(g: Graph, cfg: Configuration, boundary=()):
    return bool(find_matches(g, cfg, boundary, limit=1))
