"""Regenerate the configuration catalog data files.

Authoring tool: encodes the configuration transcriptions (pattern graphs,
degree and external-degree constraints, required non-edges, reduction
scripts) and writes one JSON file per entry plus the ordered index.
Run from the repository root:  python tools/gen_catalog.py
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "graphdegen", "data", "configs")

# (name, n, edges, degrees, externals, non_edges, order, save_pairs)
# degrees/externals: None means unconstrained (forbidden-pattern vertices)
REDUCIBLE = [
    ("kite", 4,
     [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
     [4, 4, 4, 4], [1, 2, 1, 2], [(1, 3)],
     [0, 1, 2, 3], [(1, 4)]),

    ("f35", 6,
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 3)],
     [4, 4, 4, 4, 4, 4], [2, 1, 2, 1, 2, 2], [],
     [1, 0, 5, 4, 3, 2], [(1, 6)]),

    ("rc-a", 7,
     [(0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
     [5, 4, 4, 4, 4, 4, 4], [1, 2, 1, 2, 2, 1, 2], [],
     [0, 1, 2, 3, 4, 5, 6], [(1, 7)]),

    ("rc-b", 9,
     [(0, 1), (0, 4), (0, 5), (0, 8), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
      (6, 7), (7, 8)],
     [5, 4, 4, 4, 4, 4, 4, 4, 4], [1, 2, 2, 2, 1, 1, 2, 2, 2], [],
     [0, 1, 2, 3, 4, 5, 6, 7, 8], [(1, 9)]),

    ("rc-c", 10,
     [(0, 1), (0, 2), (0, 5), (0, 6), (0, 9), (1, 2), (2, 3), (3, 4), (4, 5),
      (5, 6), (6, 7), (7, 8), (8, 9)],
     [6, 4, 4, 4, 4, 4, 4, 4, 4, 4], [1, 2, 1, 2, 2, 1, 1, 2, 2, 2], [],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10)]),

    ("rc1-a", 7,
     [(0, 1), (0, 3), (0, 6), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)],
     [4, 5, 4, 4, 4, 4, 4], [1, 2, 2, 0, 2, 2, 2], [],
     [0, 1, 2, 3, 4, 5, 6], [(1, 7)]),

    ("rc-1", 5,
     [(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (3, 4)],
     [4, 5, 4, 4, 4], [1, 2, 2, 0, 2], [(1, 4), (2, 4)],
     [0, 1, 2, 3, 4], [(1, 5)]),

    ("rc-2a", 7,
     [(0, 6), (0, 2), (0, 5), (1, 2), (1, 4), (1, 3), (2, 5), (2, 3), (3, 4),
      (5, 6)],
     [4, 4, 5, 4, 4, 4, 4], [1, 1, 1, 1, 2, 1, 2], [(2, 4)],
     [0, 1, 2, 3, 4, 5, 6], [(1, 7), (2, 5)]),

    ("rc-2b", 7,
     [(2, 3), (3, 5), (5, 6), (6, 0), (0, 3), (3, 4), (4, 1), (1, 2), (0, 5),
      (3, 1)],
     [4, 4, 4, 5, 4, 4, 4], [1, 1, 2, 0, 2, 1, 2], [(2, 4)],
     [0, 1, 2, 3, 4, 5, 6], [(1, 7), (2, 5)]),

    ("rc-3a", 8,
     [(6, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 2), (5, 3), (1, 0), (0, 7),
      (7, 6), (6, 1), (6, 0)],
     [4, 4, 4, 5, 4, 4, 5, 4], [1, 2, 1, 2, 2, 0, 0, 2], [(3, 6), (4, 6)],
     [0, 1, 2, 3, 4, 5, 6, 7], [(1, 8), (3, 7)]),

    ("rc-3b", 8,
     [(5, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 1), (4, 2), (0, 7), (7, 6),
      (6, 5), (5, 0), (0, 6)],
     [4, 4, 5, 4, 4, 5, 4, 4], [1, 1, 2, 2, 0, 1, 1, 2], [(2, 5), (3, 5)],
     [0, 1, 2, 3, 4, 5, 6, 7], [(1, 8), (2, 6)]),

    ("rc-3c", 8,
     [(4, 1), (1, 0), (0, 7), (7, 6), (6, 4), (6, 1), (6, 0), (3, 2), (2, 5),
      (5, 4), (4, 3), (4, 2)],
     [4, 5, 4, 4, 5, 4, 4, 4], [1, 2, 1, 2, 0, 2, 0, 2], [(3, 5)],
     [0, 1, 2, 3, 4, 5, 6, 7], [(1, 8), (3, 6)]),

    ("rc-3d", 8,
     [(3, 1), (1, 0), (0, 7), (7, 6), (6, 3), (6, 1), (6, 0), (2, 5), (5, 4),
      (4, 3), (3, 2), (2, 4)],
     [4, 5, 4, 5, 4, 4, 4, 4], [1, 2, 1, 1, 1, 2, 0, 2], [(3, 5)],
     [0, 1, 2, 3, 4, 5, 6, 7], [(1, 8), (3, 6)]),

    ("rc-4a", 10,
     [(0, 9), (9, 8), (8, 4), (4, 0), (0, 8), (1, 7), (7, 6), (6, 3), (3, 1),
      (1, 6), (4, 3), (3, 2), (2, 5), (5, 4), (4, 2)],
     [4, 4, 4, 5, 5, 4, 4, 4, 4, 4], [1, 1, 1, 1, 0, 2, 1, 2, 1, 2],
     [(3, 5)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10), (2, 8), (3, 6)]),

    ("rc-4b", 10,
     [(0, 9), (9, 8), (8, 5), (5, 0), (0, 8), (2, 1), (1, 7), (7, 4), (4, 2),
      (4, 1), (5, 4), (4, 3), (3, 6), (6, 5), (5, 3)],
     [4, 4, 4, 4, 5, 5, 4, 4, 4, 4], [1, 1, 2, 1, 0, 0, 2, 2, 1, 2],
     [(4, 6)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10), (2, 8), (4, 7)]),

    ("rc-4c", 10,
     [(9, 0), (0, 5), (5, 2), (2, 3), (3, 1), (1, 7), (7, 6), (6, 3), (3, 4),
      (4, 5), (5, 8), (8, 9), (0, 8), (2, 4), (1, 6)],
     [4, 4, 4, 5, 4, 5, 4, 4, 4, 4], [1, 1, 1, 1, 1, 1, 1, 2, 1, 2],
     [(3, 5)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10), (2, 8), (3, 6)]),

    ("rc-4d", 10,
     [(9, 0), (0, 4), (4, 3), (3, 2), (2, 1), (1, 7), (7, 6), (6, 2), (2, 5),
      (5, 4), (4, 8), (8, 9), (0, 8), (4, 2), (1, 6)],
     [4, 4, 5, 4, 5, 4, 4, 4, 4, 4], [1, 1, 0, 2, 0, 2, 1, 2, 1, 2],
     [(3, 5)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10), (2, 8), (3, 6)]),

    ("rc-5a", 10,
     [(0, 1), (1, 6), (6, 3), (3, 4), (4, 2), (2, 8), (8, 7), (7, 4), (4, 5),
      (5, 6), (6, 9), (9, 0), (0, 6), (3, 5), (2, 7)],
     [4, 4, 4, 4, 5, 4, 5, 4, 4, 4], [1, 2, 1, 1, 1, 1, 0, 1, 2, 2],
     [],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10), (3, 9), (4, 7)]),

    ("rc-5b", 10,
     [(0, 1), (1, 7), (7, 4), (4, 5), (5, 3), (3, 2), (2, 8), (8, 5), (5, 6),
      (6, 7), (7, 9), (9, 0), (0, 7), (4, 6), (5, 2)],
     [4, 4, 4, 4, 4, 5, 4, 5, 4, 4], [1, 2, 1, 2, 1, 0, 1, 0, 2, 2],
     [],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], [(1, 10), (3, 9), (5, 8)]),

    ("rc-6a", 11,
     [(8, 4), (4, 5), (5, 6), (6, 7), (7, 8), (7, 4), (7, 5), (3, 2), (2, 9),
      (9, 8), (8, 3), (8, 2), (1, 0), (0, 10), (10, 6), (6, 1), (0, 6)],
     [4, 4, 4, 4, 4, 5, 5, 4, 5, 4, 4], [1, 2, 1, 2, 1, 2, 0, 0, 0, 2, 2],
     [(5, 8), (6, 8)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10], [(1, 11), (3, 10), (5, 9)]),

    ("rc-6b", 11,
     [(7, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 3), (6, 4), (2, 9), (9, 8),
      (8, 7), (7, 2), (2, 8), (1, 0), (0, 10), (10, 5), (5, 1), (0, 5)],
     [4, 4, 4, 4, 5, 5, 4, 5, 4, 4, 4], [1, 2, 1, 1, 2, 0, 0, 1, 1, 2, 2],
     [(4, 7), (5, 7)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10], [(1, 11), (3, 10), (4, 8)]),

    ("rc-7a", 11,
     [(7, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 3), (6, 4), (2, 1), (1, 8),
      (8, 7), (7, 2), (7, 1), (0, 10), (10, 9), (9, 5), (5, 0), (0, 9)],
     [4, 4, 4, 4, 5, 5, 4, 5, 4, 4, 4], [1, 1, 2, 1, 2, 1, 0, 0, 2, 1, 2],
     [(4, 7), (5, 7)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10], [(1, 11), (2, 9), (4, 8)]),

    ("rc-7b", 11,
     [(6, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 2), (5, 3), (1, 8), (8, 7),
      (7, 6), (6, 1), (1, 7), (0, 10), (10, 9), (9, 4), (4, 0), (0, 9)],
     [4, 4, 4, 5, 5, 4, 5, 4, 4, 4, 4], [1, 1, 1, 2, 1, 0, 1, 1, 2, 1, 2],
     [(3, 6), (4, 6)],
     [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10], [(1, 11), (2, 9), (3, 7)]),
]

# forbidden patterns: no degree constraints, no script
FORBIDDEN = [
    # triangle sharing structure with 4- and 5-cycles (hypothesis family of
    # the plain SFDT theorem on 5-minus-cycle-restricted plane graphs)
    ("tri45-a", 5,
     [(0, 4), (4, 1), (1, 2), (2, 3), (3, 0), (0, 1)]),
    ("tri45-b", 8,
     [(0, 5), (5, 7), (7, 4), (4, 6), (6, 1), (1, 2), (2, 3), (3, 0), (0, 4),
      (4, 1), (4, 5)]),
    ("tri45-c", 8,
     [(0, 7), (7, 5), (5, 4), (4, 6), (6, 1), (1, 2), (2, 3), (3, 0), (5, 0),
      (0, 4), (4, 1)]),
    # pairwise adjacent 3-/4-/5-/6-cycle patterns (plane hypothesis family)
    ("cyc3456-a", 6,
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4)]),
    ("cyc3456-b", 6,
     [(0, 1), (1, 2), (2, 4), (4, 5), (5, 3), (3, 0), (0, 2), (4, 3)]),
    ("cyc3456-c", 6,
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (3, 0), (0, 4)]),
    ("cyc3456-d", 8,
     [(1, 3), (3, 5), (5, 2), (2, 6), (6, 4), (4, 7), (7, 1), (3, 0), (0, 4),
      (1, 0), (0, 2)]),
    ("cyc3456-e", 7,
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 1), (5, 6), (6, 1)]),
    ("cyc3456-f", 8,
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 1), (5, 7), (7, 6),
      (6, 1)]),
    ("cyc3456-g", 9,
     [(1, 2), (2, 3), (3, 4), (4, 0), (0, 1), (0, 2), (0, 3), (3, 5), (5, 6),
      (6, 7), (7, 8), (8, 2)]),
    ("cyc3456-h", 9,
     [(1, 2), (2, 3), (3, 4), (4, 0), (0, 1), (0, 2), (0, 3), (2, 5), (5, 6),
      (6, 7), (7, 8), (8, 1)]),
    # pairwise adjacent 3-/4-/5-cycle patterns (abstract/toroidal family)
    ("tor345-a", 5,
     [(0, 4), (4, 1), (1, 2), (2, 3), (3, 0), (0, 1)]),
    ("tor345-b", 7,
     [(0, 6), (6, 5), (5, 4), (4, 1), (1, 2), (2, 3), (3, 0), (5, 0), (0, 4)]),
]


def entry(name, n, edges, degrees=None, externals=None, non_edges=(), order=None,
          save_pairs=None):
    vertices = []
    for i in range(n):
        vertices.append({
            "id": i,
            "degree": None if degrees is None else degrees[i],
            "external": None if externals is None else externals[i],
        })
    doc = {
        "name": name,
        "vertices": vertices,
        "edges": [sorted(e) for e in edges],
        "non_edges": [sorted(e) for e in non_edges],
        "script": None if order is None else {
            "order": list(order),
            "save_pairs": [list(p) for p in save_pairs],
        },
    }
    return doc


def main():
    os.makedirs(OUT, exist_ok=True)
    index = []
    for row in REDUCIBLE:
        name, n, edges, degrees, externals, non_edges, order, pairs = row
        doc = entry(name, n, edges, degrees, externals, non_edges, order, pairs)
        index.append(name)
        with open(os.path.join(OUT, f"{name}.json"), "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    for name, n, edges in FORBIDDEN:
        doc = entry(name, n, edges)
        index.append(name)
        with open(os.path.join(OUT, f"{name}.json"), "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    with open(os.path.join(OUT, "_index.json"), "w") as fh:
        json.dump(index, fh, indent=1)
        fh.write("\n")
    print(f"wrote {len(index)} configurations")


if __name__ == "__main__":
    main()
