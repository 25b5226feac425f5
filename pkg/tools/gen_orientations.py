"""Regenerate the certified outward-orientation fixtures.

Each record fixes, for a reducible configuration, an orientation of the
pattern edges plus the count of outward arcs per vertex (edges into the
rest of the host always leave the configuration). The suite checks the
proof obligations: max out-degree (pattern + outward) at most 3, nonzero
circulation difference on the pattern arcs, and outward counts matching
the configuration's external degrees.
Run from the repository root: python tools/gen_orientations.py
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "graphdegen", "data",
                   "orientations")

# name, config, arcs (pattern ids, u -> v), outward counts per vertex
ORIENTATIONS = [
    ("kite-outward", "kite",
     [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
     [1, 2, 1, 2]),
    ("f35-outward", "f35",
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 3)],
     [2, 1, 2, 1, 2, 2]),
    ("rc1-a-outward", "rc1-a",
     [(3, 2), (2, 1), (1, 0), (0, 6), (6, 5), (5, 4), (4, 3), (0, 3), (3, 1)],
     [1, 2, 2, 0, 2, 2, 2]),
    ("rc-1-outward", "rc-1",
     [(4, 3), (3, 2), (2, 1), (1, 0), (0, 4), (0, 3), (3, 1)],
     [1, 2, 2, 0, 2]),
    ("rc-2a-outward", "rc-2a",
     [(1, 2), (2, 3), (3, 4), (4, 1), (2, 0), (0, 6), (6, 5), (5, 2), (0, 5),
      (1, 3)],
     [1, 1, 1, 1, 2, 1, 2]),
    ("rc-2b-outward", "rc-2b",
     [(2, 3), (3, 4), (4, 1), (1, 2), (3, 0), (0, 6), (6, 5), (5, 3), (0, 5),
      (3, 1)],
     [1, 1, 2, 0, 2, 1, 2]),
]


def main():
    os.makedirs(OUT, exist_ok=True)
    index = []
    for name, config, arcs, outward in ORIENTATIONS:
        doc = {
            "name": name,
            "config": config,
            "arcs": [list(a) for a in arcs],
            "outward": outward,
        }
        with open(os.path.join(OUT, f"{name}.json"), "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        index.append(name)
    with open(os.path.join(OUT, "_index.json"), "w") as fh:
        json.dump(index, fh, indent=1)
        fh.write("\n")
    print(f"wrote {len(index)} orientation fixtures")


if __name__ == "__main__":
    main()
