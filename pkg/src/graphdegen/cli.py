"""Batch front end: parse inputs, dispatch computations, emit reports.

Exit codes: 0 success; 1 mathematical negative on decision commands (no
transversal, no match, counterexample, chain violated, falsifying audit);
2 input error; 3 search budget exceeded. Reports are JSON on stdout under
--json, a terse table otherwise, and deterministic for fixed inputs and
flags up to the timing field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import covers as covers_mod
from . import kernels
from .audit import AuditReport, HypothesisViolated, NoClauseHolds, audit_structure
from .chromatic import chromatic_number, list_chromatic_number
from .configs import catalog, find_matches
from .covers import BudgetExceeded, Cover, dp_chromatic_number, find_sfdt
from .degeneracy import (degeneracy, is_strictly_f_degenerate,
                         is_weakly_f_degenerate, weak_degeneracy)
from .graphs import Graph, GraphError, connected_graphs, random_connected_graph
from .orientations import BudgetExceeded as OrientationBudgetExceeded
from .orientations import Orientation, at_number, diff_value
from .reduction import (CertBudgetExceeded, CounterexampleFound,
                        certify_reducible_sfdt, certify_reducible_weak)
from .rotation import RotationError, RotationSystem, faces

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(ValueError):
    pass


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None


def _digest(blobs):
    h = hashlib.sha256()
    for b in blobs:
        h.update(b)
    return h.hexdigest()


def _load_graph(path):
    data = _read(path)
    try:
        return Graph.from_edge_list_text(data.decode()), data
    except (GraphError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from None


def _emit(args, command, digest, results, t0, code=EXIT_OK):
    report = {
        "command": command,
        "input_digest": digest,
        "results": results,
        "timing_ms": int((time.time() - t0) * 1000),
    }
    if args.json:
        print(json.dumps(report, indent=1, sort_keys=True))
    else:
        for k, v in results.items():
            print(f"{k}: {v}")
    return code


def _parse_budget(spec, n):
    parts = spec.split(",")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"bad budget spec {spec!r}") from None
    if len(vals) == 1:
        return vals[0]
    if len(vals) != n:
        raise InputError(f"budget needs 1 or {n} values, got {len(vals)}")
    return vals


def cmd_degeneracy(args, t0):
    g, raw = _load_graph(args.graph)
    return _emit(args, "degeneracy", _digest([raw]), {"degeneracy": degeneracy(g)}, t0)


def cmd_weak_degeneracy(args, t0):
    g, raw = _load_graph(args.graph)
    wd = weak_degeneracy(g, max_states=args.max_states)
    results = {"weak_degeneracy": wd}
    if args.witness:
        ok, steps = is_weakly_f_degenerate(g, wd, witness=True)
        results["witness"] = [
            {"op": s.kind, "u": s.u, **({"save": s.w} if s.w is not None else {})}
            for s in steps
        ]
    return _emit(args, "weak-degeneracy", _digest([raw]), results, t0)


def cmd_strict_check(args, t0):
    g, raw = _load_graph(args.graph)
    budget = _parse_budget(args.budget, g.n)
    ok = is_strictly_f_degenerate(g, budget)
    return _emit(args, "strict-check", _digest([raw]),
                 {"strictly_f_degenerate": ok}, t0,
                 EXIT_OK if ok else EXIT_NEGATIVE)


def cmd_dp_chromatic(args, t0):
    g, raw = _load_graph(args.graph)
    k = dp_chromatic_number(g, max_covers=args.max_covers)
    return _emit(args, "dp-chromatic", _digest([raw]), {"dp_chromatic": k}, t0)


def cmd_sfdt(args, t0):
    raw = _read(args.cover)
    try:
        cover, fvec = Cover.from_json(raw.decode())
    except Exception as e:
        raise InputError(f"{args.cover}: {e}") from None
    if fvec is None:
        raise InputError(f"{args.cover}: cover JSON carries no budget field")
    res = find_sfdt(cover, fvec)
    if res is None:
        return _emit(args, "sfdt", _digest([raw]),
                     {"sfdt": None}, t0, EXIT_NEGATIVE)
    return _emit(args, "sfdt", _digest([raw]),
                 {"sfdt": [i + 1 for i in res]}, t0)


def cmd_at_number(args, t0):
    g, raw = _load_graph(args.graph)
    return _emit(args, "at-number", _digest([raw]), {"at_number": at_number(g)}, t0)


def cmd_diff(args, t0):
    raw = _read(args.orientation)
    try:
        ort = Orientation.from_text(raw.decode())
    except Exception as e:
        raise InputError(f"{args.orientation}: {e}") from None
    return _emit(args, "diff", _digest([raw]), {"diff": diff_value(ort)}, t0)


def cmd_detect(args, t0):
    g, raw = _load_graph(args.graph)
    cat = catalog()
    if args.config not in cat:
        raise InputError(f"unknown configuration name {args.config!r}")
    boundary = [int(x) for x in args.boundary.split(",")] if args.boundary else []
    ms = find_matches(g, cat[args.config], boundary=boundary)
    results = {"config": args.config, "matches": [list(m.mapping) for m in ms]}
    return _emit(args, "detect", _digest([raw]), results, t0,
                 EXIT_OK if ms else EXIT_NEGATIVE)


def cmd_certify(args, t0):
    cat = catalog()
    if args.config not in cat:
        raise InputError(f"unknown configuration name {args.config!r}")
    cfg = cat[args.config]
    results = {}
    sides = []
    if args.side in ("weak", "both"):
        sides.append("weak")
    if args.side in ("sfdt", "both"):
        sides.append("sfdt")
    try:
        for side in sides:
            if side == "weak":
                results["weak"] = certify_reducible_weak(cfg)
            else:
                results["sfdt"] = certify_reducible_sfdt(
                    cfg, k=args.k, mode=args.mode, max_cases=args.max_covers,
                    workers=args.workers)
    except CounterexampleFound as e:
        results["counterexample"] = e.detail
        return _emit(args, "certify", _digest([]), results, t0, EXIT_NEGATIVE)
    return _emit(args, "certify", _digest([]), results, t0)


def cmd_audit(args, t0):
    g, raw = _load_graph(args.graph)
    blobs = [raw]
    rot = None
    outer = None
    if args.rotation:
        rot_raw = _read(args.rotation)
        blobs.append(rot_raw)
        try:
            rot = RotationSystem.from_text(g, rot_raw.decode())
        except RotationError as e:
            raise InputError(f"{args.rotation}: {e}") from None
        fs = faces(g, rot)
        if args.outer_face is not None:
            if not 0 <= args.outer_face < len(fs):
                raise InputError(f"outer face index {args.outer_face} out of range")
            outer = fs[args.outer_face]
    if outer is None and args.boundary:
        outer = [int(x) for x in args.boundary.split(",")]
    try:
        rep = audit_structure(g, rot, outer, args.theorem)
    except HypothesisViolated as e:
        return _emit(args, "audit", _digest(blobs),
                     {"hypothesis_violated": str(e)}, t0, EXIT_INPUT)
    except NoClauseHolds as e:
        return _emit(args, "audit", _digest(blobs),
                     {"no_clause_holds": str(e)}, t0, EXIT_NEGATIVE)
    results = {
        "theorem": rep.theorem,
        "clause": rep.clause,
        "witness": _witness_json(rep.witness),
        "satisfied": [[c, _witness_json(w)] for c, w in rep.satisfied],
    }
    return _emit(args, "audit", _digest(blobs), results, t0)


def _witness_json(w):
    if w is None:
        return None
    if hasattr(w, "mapping"):
        return {"config": w.config, "mapping": list(w.mapping)}
    if isinstance(w, tuple):
        return list(w)
    return w


def cmd_chain(args, t0):
    rows = []
    holds = True
    graphs = []
    for n in range(1, args.max_n + 1):
        for g in connected_graphs(n):
            graphs.append(g)
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        graphs.append(random_connected_graph(args.sample_n, rng))
    for g in graphs:
        chi = chromatic_number(g)
        chl = list_chromatic_number(g, greedy_shortcut=True)
        try:
            chdp = dp_chromatic_number(g, max_covers=args.max_covers)
        except BudgetExceeded:
            return _emit(args, "chain", _digest([]),
                         {"error": "cover budget exceeded"}, t0, EXIT_BUDGET)
        wd = weak_degeneracy(g)
        d = degeneracy(g)
        ok = chi <= chl <= chdp <= wd + 1 <= d + 1
        holds = holds and ok
        rows.append({
            "n": g.n, "m": g.m, "chi": chi, "chi_list": chl, "chi_dp": chdp,
            "wd_plus_1": wd + 1, "d_plus_1": d + 1, "holds": ok,
        })
    results = {"graphs": len(rows), "chain_holds": holds, "rows": rows}
    if not args.json:
        print(f"{'n':>2} {'m':>3} {'chi':>4} {'ch_l':>4} {'chDP':>4} "
              f"{'wd+1':>4} {'d+1':>4}  holds")
        for r in rows:
            print(f"{r['n']:>2} {r['m']:>3} {r['chi']:>4} {r['chi_list']:>4} "
                  f"{r['chi_dp']:>4} {r['wd_plus_1']:>4} {r['d_plus_1']:>4}  "
                  f"{r['holds']}")
        print(f"chain holds: {holds}")
        report = {"command": "chain", "input_digest": _digest([]),
                  "results": {"graphs": len(rows), "chain_holds": holds},
                  "timing_ms": int((time.time() - t0) * 1000)}
        return EXIT_OK if holds else EXIT_NEGATIVE
    return _emit(args, "chain", _digest([]), results, t0,
                 EXIT_OK if holds else EXIT_NEGATIVE)


def build_parser():
    p = argparse.ArgumentParser(
        prog="graphdegen",
        description="exact graph-coloring invariants: weak degeneracy, "
                    "DP-covers, Alon-Tarsi orientations, reducible "
                    "configurations")
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("degeneracy", help="classic degeneracy of a graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_degeneracy)

    sp = sub.add_parser("weak-degeneracy", help="exact weak degeneracy")
    sp.add_argument("graph")
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--max-states", type=int, default=50_000_000)
    sp.set_defaults(func=cmd_weak_degeneracy)

    sp = sub.add_parser("strict-check", help="strict f-degeneracy decision")
    sp.add_argument("graph")
    sp.add_argument("--budget", required=True,
                    help="constant, or one value per vertex (comma separated)")
    sp.set_defaults(func=cmd_strict_check)

    sp = sub.add_parser("dp-chromatic", help="DP-chromatic number")
    sp.add_argument("graph")
    sp.add_argument("--max-covers", type=int, default=10_000_000_000)
    sp.set_defaults(func=cmd_dp_chromatic)

    sp = sub.add_parser("sfdt", help="strictly f-degenerate transversal of a cover")
    sp.add_argument("cover", help="cover JSON with budget field")
    sp.set_defaults(func=cmd_sfdt)

    sp = sub.add_parser("at-number", help="exact Alon-Tarsi number")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_at_number)

    sp = sub.add_parser("diff", help="even-minus-odd circulation count")
    sp.add_argument("orientation")
    sp.set_defaults(func=cmd_diff)

    sp = sub.add_parser("detect", help="find catalog configurations in a graph")
    sp.add_argument("graph")
    sp.add_argument("--config", required=True)
    sp.add_argument("--boundary", default="",
                    help="comma-separated vertex ids excluded from matches")
    sp.set_defaults(func=cmd_detect)

    sp = sub.add_parser("certify", help="reducibility certificates")
    sp.add_argument("--config", required=True)
    sp.add_argument("--k", type=int, default=4)
    sp.add_argument("--side", choices=["weak", "sfdt", "both"], default="both")
    sp.add_argument("--mode", choices=["auto", "product", "game"], default="auto")
    sp.add_argument("--max-covers", type=int, default=20_000_000_000)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("audit", help="structure-theorem audit")
    sp.add_argument("graph")
    sp.add_argument("--theorem", required=True,
                    choices=["plane-3456", "toroidal-345", "intersecting-5"])
    sp.add_argument("--rotation", help="rotation-system file")
    sp.add_argument("--outer-face", type=int, default=None,
                    help="index into the face list")
    sp.add_argument("--boundary", default="",
                    help="explicit outer cycle as comma-separated ids")
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("chain", help="chi <= chi_list <= chi_DP <= wd+1 <= d+1")
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--samples", type=int, default=0)
    sp.add_argument("--sample-n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-covers", type=int, default=10_000_000_000)
    sp.set_defaults(func=cmd_chain)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    t0 = time.time()
    try:
        return args.func(args, t0)
    except InputError as e:
        print(json.dumps({"error": str(e)}) if args.json else f"error: {e}",
              file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, OrientationBudgetExceeded, CertBudgetExceeded,
            kernels.StateBudgetExceeded) as e:
        print(json.dumps({"error": str(e)}) if args.json else f"error: {e}",
              file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
