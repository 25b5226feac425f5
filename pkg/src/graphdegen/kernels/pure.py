"""Pure-Python kernels.

Reference implementations of the hot inner loops. The compiled extension in
``_core.pyx`` mirrors this module function-for-function; the selector in
``__init__`` picks whichever is available (or whatever ``GRAPHDEGEN_PURE``
forces). Everything here works on plain integers: adjacency is a list of
bitmasks, one per vertex.
"""

from __future__ import annotations

from itertools import permutations

BACKEND = "pure"


def popcount(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# strict f-degeneracy (greedy peel)
# ---------------------------------------------------------------------------

def strict_peel(adj, budgets):
    """True iff every subgraph has a vertex of degree < budget.

    Equivalent to the existence of a removing order; the greedy peel is
    exhaustive because removability is monotone under vertex deletion.
    """
    n = len(adj)
    alive = (1 << n) - 1
    deg = [popcount(adj[v]) for v in range(n)]
    stack = [v for v in range(n) if deg[v] < budgets[v]]
    removed = 0
    in_stack = set(stack)
    while stack:
        v = stack.pop()
        if not (alive >> v) & 1:
            continue
        alive &= ~(1 << v)
        removed += 1
        rest = adj[v] & alive
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            deg[u] -= 1
            if deg[u] < budgets[u] and u not in in_stack:
                stack.append(u)
                in_stack.add(u)
        in_stack.discard(v)
    return removed == n


def peel_order(adj, budgets):
    """Removing order (lowest id first among eligible), or None."""
    n = len(adj)
    alive = (1 << n) - 1
    deg = [popcount(adj[v]) for v in range(n)]
    order = []
    for _ in range(n):
        pick = -1
        for v in range(n):
            if (alive >> v) & 1 and deg[v] < budgets[v]:
                pick = v
                break
        if pick < 0:
            return None
        order.append(pick)
        alive &= ~(1 << pick)
        rest = adj[pick] & alive
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            deg[u] -= 1
    return order


# ---------------------------------------------------------------------------
# weak-degeneracy game (Delete / DeleteSave), memoized exact search
# ---------------------------------------------------------------------------

class StateBudgetExceeded(RuntimeError):
    pass


def weak_game(adj, budgets, max_states=None):
    """Decide the Delete/DeleteSave removal game exactly.

    State is (alive mask, budget tuple); the memo stores wins and losses.
    A vertex whose budget covers its remaining degree can be postponed to
    the very end, which removes it from the game entirely: its own budget
    survives all decrements and, deleted last, it decrements nobody.
    Raises StateBudgetExceeded when the memo outgrows max_states.
    """
    n = len(adj)
    memo = {}

    def shed(mask, bud):
        # drop vertices with budget >= current degree (order-insensitive)
        changed = True
        while changed:
            changed = False
            rest = mask
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if bud[v] >= popcount(adj[v] & mask):
                    mask &= ~(1 << v)
                    changed = True
        return mask

    def rec(mask, bud):
        mask = shed(mask, bud)
        if mask == 0:
            return True
        key = (mask, tuple(bud[v] if (mask >> v) & 1 else 0 for v in range(n)))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if max_states is not None and len(memo) >= max_states:
            raise StateBudgetExceeded(f"game search exceeded {max_states} states")
        verts = []
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            verts.append(v)
        result = False
        # Delete moves
        for u in verts:
            nbrs = adj[u] & mask
            ok = True
            r = nbrs
            while r:
                w = (r & -r).bit_length() - 1
                r &= r - 1
                if bud[w] == 0:
                    ok = False
                    break
            if not ok:
                continue
            nb = list(bud)
            r = nbrs
            while r:
                w = (r & -r).bit_length() - 1
                r &= r - 1
                nb[w] -= 1
            nb[u] = 0
            if rec(mask & ~(1 << u), tuple(nb)):
                result = True
                break
        if not result:
            # DeleteSave moves, largest budget gap first
            moves = []
            for u in verts:
                r = adj[u] & mask
                while r:
                    w = (r & -r).bit_length() - 1
                    r &= r - 1
                    if bud[u] > bud[w]:
                        moves.append((bud[w] - bud[u], u, w))
            moves.sort()
            for _, u, w in moves:
                nbrs = adj[u] & mask & ~(1 << w)
                ok = True
                r = nbrs
                while r:
                    x = (r & -r).bit_length() - 1
                    r &= r - 1
                    if bud[x] == 0:
                        ok = False
                        break
                if not ok:
                    continue
                nb = list(bud)
                r = nbrs
                while r:
                    x = (r & -r).bit_length() - 1
                    r &= r - 1
                    nb[x] -= 1
                nb[u] = 0
                if rec(mask & ~(1 << u), tuple(nb)):
                    result = True
                    break
        memo[key] = result
        return result

    start = tuple(budgets)
    return rec((1 << n) - 1, start)


# ---------------------------------------------------------------------------
# circulation counting: diff = #even - #odd spanning sub-circulations
# ---------------------------------------------------------------------------

def diff_counts(n, arcs):
    """(even, odd) counts of arc subsets balanced at every vertex.

    DFS over arcs with per-vertex imbalance, pruned by the number of
    remaining arcs incident to each vertex.
    """
    m = len(arcs)
    rem = [0] * n
    for u, v in arcs:
        rem[u] += 1
        rem[v] += 1
    imb = [0] * n
    counts = [0, 0]

    def rec(i, sz):
        if i == m:
            if all(x == 0 for x in imb):
                counts[sz & 1] += 1
            return
        u, v = arcs[i]
        rem[u] -= 1
        rem[v] -= 1
        if abs(imb[u]) <= rem[u] and abs(imb[v]) <= rem[v]:
            rec(i + 1, sz)
        imb[u] += 1
        imb[v] -= 1
        if abs(imb[u]) <= rem[u] and abs(imb[v]) <= rem[v]:
            rec(i + 1, sz + 1)
        imb[u] -= 1
        imb[v] += 1
        rem[u] += 1
        rem[v] += 1

    rec(0, 0)
    return counts[0], counts[1]


# ---------------------------------------------------------------------------
# choosability: adversary enumeration over color-type multisets
# ---------------------------------------------------------------------------

def _types_colorable(adj, instances, n):
    """Proper coloring where every vertex uses an instance whose type
    contains it; DP over instances with the uncolored set as state."""
    memo = {}

    def rec(idx, uncolored):
        if uncolored == 0:
            return True
        if idx == len(instances):
            return False
        key = (idx, uncolored)
        hit = memo.get(key)
        if hit is not None:
            return hit
        avail = instances[idx] & uncolored
        # enumerate independent subsets of avail
        verts = []
        rest = avail
        while rest:
            verts.append((rest & -rest).bit_length() - 1)
            rest &= rest - 1
        subs = [0]
        for v in verts:
            subs += [x | (1 << v) for x in subs if not (adj[v] & x)]
        res = False
        for sub in subs:
            if rec(idx + 1, uncolored & ~sub):
                res = True
                break
        memo[key] = res
        return res

    return rec(0, (1 << n) - 1)


def choosable_check(n, adj, k):
    """Exhaustive k-choosability via pairwise-intersecting type multisets.

    Returns (ok, witness) where witness is (types, mults) for the first
    uncolorable list assignment found, else None.
    """
    if all(a == 0 for a in adj):
        return True, None
    all_types = sorted(range(1, 1 << n), key=lambda t: (-bin(t).count("1"), t))
    ntypes = len(all_types)
    suffix = [[0] * n for _ in range(ntypes + 1)]
    for pos in range(ntypes - 1, -1, -1):
        t = all_types[pos]
        for v in range(n):
            suffix[pos][v] = suffix[pos + 1][v] + (k if (t >> v) & 1 else 0)

    chosen_types = []
    chosen_mult = []
    need = [k] * n
    bad = []

    def rec(pos):
        if all(x == 0 for x in need):
            instances = []
            for t, m in zip(chosen_types, chosen_mult):
                instances.extend([t] * m)
            if not _types_colorable(adj, instances, n):
                bad.append((list(chosen_types), list(chosen_mult)))
                return False
            return True
        for p in range(pos, ntypes):
            if any(need[v] > suffix[p][v] for v in range(n)):
                return True
            t = all_types[p]
            if not all(t & ct for ct in chosen_types):
                continue
            cap = min(need[v] for v in range(n) if (t >> v) & 1)
            if cap == 0:
                continue
            chosen_types.append(t)
            for m in range(1, cap + 1):
                chosen_mult.append(m)
                for v in range(n):
                    if (t >> v) & 1:
                        need[v] -= m
                ok = rec(p + 1)
                for v in range(n):
                    if (t >> v) & 1:
                        need[v] += m
                chosen_mult.pop()
                if not ok:
                    chosen_types.pop()
                    return False
            chosen_types.pop()
        return True

    ok = rec(0)
    return ok, (bad[0] if bad else None)


# ---------------------------------------------------------------------------
# independent transversals over covers (DP-coloring core)
# ---------------------------------------------------------------------------

def independent_transversal(n, s, edges, perm_ids, perms):
    """True iff some transversal avoids every matching edge.

    ``edges[i]`` is (u, v); the matching joins (u, j) ~ (v, perm[j]) where
    perm = perms[perm_ids[i]].
    """
    nbr = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        p = perms[perm_ids[i]]
        nbr[u].append((v, p, False))
        nbr[v].append((u, p, True))
    order = sorted(range(n), key=lambda v: -len(nbr[v]))
    assign = [-1] * n

    def rec2(idx):
        if idx == n:
            return True
        v = order[idx]
        for j in range(s):
            ok = True
            for u, p, inv in nbr[v]:
                if assign[u] < 0:
                    continue
                ju = assign[u]
                if (not inv and p[j] == ju) or (inv and p[ju] == j):
                    ok = False
                    break
            if ok:
                assign[v] = j
                if rec2(idx + 1):
                    return True
                assign[v] = -1
        return False

    return rec2(0)


def dp_universal(n, s, edges, tree_flags, first_reps, max_covers):
    """Check that every full cover with fan size s admits an independent
    transversal.

    Tree edges carry the identity matching; the first co-tree edge ranges
    over conjugacy-class representatives only (a global fan relabeling maps
    any cover to one of these), the rest over all permutations.

    Returns (status, covers_checked, failing) with status 0 = all covers ok,
    1 = failing cover found, 2 = budget exceeded.
    """
    perms = [list(p) for p in permutations(range(s))]
    cot = [i for i, t in enumerate(tree_flags) if not t]
    n_cot = len(cot)
    total = 1
    for i in range(n_cot):
        total *= len(first_reps) if i == 0 else len(perms)
    if max_covers is not None and total > max_covers:
        return 2, 0, None
    ident = perms.index(list(range(s)))
    perm_ids = [ident] * len(edges)
    checked = 0

    def rec(i):
        nonlocal checked
        if i == n_cot:
            checked += 1
            if not independent_transversal(n, s, edges, perm_ids, perms):
                return list(perm_ids)
            return None
        choices = first_reps if i == 0 else range(len(perms))
        for pid in choices:
            perm_ids[cot[i]] = pid
            bad = rec(i + 1)
            if bad is not None:
                return bad
        return None

    bad = rec(0)
    if bad is not None:
        return 1, checked, bad
    return 0, checked, None


# ---------------------------------------------------------------------------
# SFDT search over explicit cover adjacency
# ---------------------------------------------------------------------------

def sfdt_search(n, s, hadj, fvals, order, fixed):
    """Find a strictly f-degenerate transversal, or None.

    hadj: bitmasks over the n*s fan vertices (vertex v, slot j -> index
    v*s + j). fvals: budget per fan vertex. order: vertex visit order.
    fixed[v] >= 0 pins the slot choice.
    """
    choice = [-1] * n

    def partial_ok(chosen):
        # peel the induced subgraph on chosen fan vertices
        alive = set(chosen)
        bud = {x: fvals[x] for x in alive}
        changed = True
        while changed and alive:
            changed = False
            for x in list(alive):
                d = 0
                for y in alive:
                    if y != x and (hadj[x] >> y) & 1:
                        d += 1
                if d < bud[x]:
                    alive.discard(x)
                    changed = True
        return not alive

    chosen = []

    def rec(idx):
        if idx == n:
            return True
        v = order[idx]
        slots = [fixed[v]] if fixed[v] >= 0 else [
            j for j in sorted(range(s), key=lambda j: -fvals[v * s + j])
            if fvals[v * s + j] > 0
        ]
        for j in slots:
            x = v * s + j
            if fvals[x] <= 0 and fixed[v] < 0:
                continue
            chosen.append(x)
            if partial_ok(chosen) and rec(idx + 1):
                return True
            chosen.pop()
        return False

    if rec(0):
        for i, v in enumerate(order):
            choice[v] = chosen[i] - v * s
        return choice
    return None


# ---------------------------------------------------------------------------
# certification sweep, product mode
# ---------------------------------------------------------------------------

def _min_thresholds(t, radj, phi):
    """Minimal per-vertex budgets certifying the peel of the R-graph.

    Derived from an elimination order of the successful peel: each vertex
    needs (degree among not-yet-removed) + 1.
    """
    alive = (1 << t) - 1
    tau = [0] * t
    for _ in range(t):
        pick = -1
        for v in range(t):
            if (alive >> v) & 1 and popcount(radj[v] & alive) < phi[v]:
                pick = v
                break
        if pick < 0:
            return None
        tau[pick] = popcount(radj[pick] & alive) + 1
        alive &= ~(1 << pick)
    return tau


def sfdt_product_sweep(t, s, edges, tree_flags, first_reps, budget_options,
                       max_cases):
    """Exhaustive (cover x minimal-budget) sweep for a pattern.

    budget_options[v] is the list of minimal residual vectors (s-tuples) for
    vertex v. Returns (status, cases, detail): status 0 certified,
    1 counterexample (detail = (perm_ids, budget_ids)), 2 budget exceeded.
    """
    perms = [list(p) for p in permutations(range(s))]
    ident = perms.index(list(range(s)))
    m = len(edges)
    cot = [i for i, fl in enumerate(tree_flags) if not fl]
    n_budgets = 1
    for opts in budget_options:
        n_budgets *= len(opts)
    n_covers = 1
    for i in range(len(cot)):
        n_covers *= len(first_reps) if i == 0 else len(perms)
    if max_cases is not None and n_budgets * n_covers > max_cases:
        return 2, 0, None

    perm_ids = [ident] * m
    cases = 0

    def run_cover():
        nonlocal cases
        # fan adjacency for this cover
        hadj = [0] * (t * s)
        for i, (u, v) in enumerate(edges):
            p = perms[perm_ids[i]]
            for j in range(s):
                a = u * s + j
                b = v * s + p[j]
                hadj[a] |= 1 << b
                hadj[b] |= 1 << a
        cache = []  # (R, tau) pairs

        bud_ids = [0] * t
        fvals = [0] * (t * s)

        def bud_rec(v):
            nonlocal cases
            if v == t:
                cases += 1
                for R, tau in cache:
                    if all(fvals[u * s + R[u]] >= tau[u] for u in range(t)):
                        return None
                R = sfdt_search(t, s, hadj, fvals, list(range(t)), [-1] * t)
                if R is None:
                    return (list(perm_ids), list(bud_ids))
                radj = [0] * t
                for u in range(t):
                    for w in range(u + 1, t):
                        if (hadj[u * s + R[u]] >> (w * s + R[w])) & 1:
                            radj[u] |= 1 << w
                            radj[w] |= 1 << u
                phi = [fvals[u * s + R[u]] for u in range(t)]
                tau = _min_thresholds(t, radj, phi)
                cache.insert(0, (R, tau))
                if len(cache) > 24:
                    cache.pop()
                return None
            for bi, opt in enumerate(budget_options[v]):
                bud_ids[v] = bi
                for j in range(s):
                    fvals[v * s + j] = opt[j]
                bad = bud_rec(v + 1)
                if bad is not None:
                    return bad
            return None

        return bud_rec(0)

    def cover_rec(i):
        if i == len(cot):
            return run_cover()
        choices = first_reps if i == 0 else range(len(perms))
        for pid in choices:
            perm_ids[cot[i]] = pid
            bad = cover_rec(i + 1)
            if bad is not None:
                return bad
        return None

    bad = cover_rec(0)
    if bad is not None:
        return 1, cases, bad
    return 0, cases, None
