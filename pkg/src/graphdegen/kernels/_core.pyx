# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors kernels/pure.py function-for-function."""

from itertools import permutations

from libc.stdint cimport uint64_t, int64_t
from libc.string cimport memcpy, memset

BACKEND = "cython"

DEF MAXN = 64
DEF MAXFAN = 64
DEF MAXT = 12
DEF MAXS = 8
DEF MAXEDGES = 64
DEF CACHESZ = 24


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _ctz(uint64_t x) nogil:
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


# ---------------------------------------------------------------------------
# strict f-degeneracy
# ---------------------------------------------------------------------------

def strict_peel(adj, budgets):
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("kernel supports at most 64 vertices")
    cdef uint64_t cadj[MAXN]
    cdef int deg[MAXN]
    cdef int bud[MAXN]
    cdef int i, v, u, removed
    cdef uint64_t alive, rest
    for i in range(n):
        cadj[i] = adj[i]
        bud[i] = budgets[i]
        deg[i] = _popcount(cadj[i])
    alive = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1
    removed = 0
    cdef int progress = 1
    while progress:
        progress = 0
        for v in range(n):
            if (alive >> v) & 1 and deg[v] < bud[v]:
                alive &= ~(<uint64_t>1 << v)
                removed += 1
                progress = 1
                rest = cadj[v] & alive
                while rest:
                    u = _ctz(rest)
                    rest &= rest - 1
                    deg[u] -= 1
    return removed == n


def peel_order(adj, budgets):
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("kernel supports at most 64 vertices")
    cdef uint64_t cadj[MAXN]
    cdef int deg[MAXN]
    cdef int bud[MAXN]
    cdef int i, v, u, pick
    cdef uint64_t alive, rest
    for i in range(n):
        cadj[i] = adj[i]
        bud[i] = budgets[i]
        deg[i] = _popcount(cadj[i])
    alive = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1
    order = []
    for i in range(n):
        pick = -1
        for v in range(n):
            if (alive >> v) & 1 and deg[v] < bud[v]:
                pick = v
                break
        if pick < 0:
            return None
        order.append(pick)
        alive &= ~(<uint64_t>1 << pick)
        rest = cadj[pick] & alive
        while rest:
            u = _ctz(rest)
            rest &= rest - 1
            deg[u] -= 1
    return order


# ---------------------------------------------------------------------------
# weak-degeneracy game
# ---------------------------------------------------------------------------

cdef uint64_t _shed(uint64_t mask, int* bud, uint64_t* cadj):
    cdef int changed = 1, v
    cdef uint64_t rest
    while changed:
        changed = 0
        rest = mask
        while rest:
            v = _ctz(rest)
            rest &= rest - 1
            if bud[v] >= _popcount(cadj[v] & mask):
                mask &= ~(<uint64_t>1 << v)
                changed = 1
    return mask


class StateBudgetExceeded(RuntimeError):
    pass


cdef bint _weak_rec(uint64_t mask, int* bud, uint64_t* cadj, int n, dict memo,
                    long max_states):
    mask = _shed(mask, bud, cadj)
    if mask == 0:
        return True
    cdef unsigned char keybuf[MAXN + 8]
    cdef int i
    for i in range(8):
        keybuf[i] = <unsigned char>((mask >> (8 * i)) & 0xFF)
    cdef int nv = 0
    cdef int verts[MAXN]
    cdef uint64_t rest = mask
    cdef int v, u, w
    while rest:
        v = _ctz(rest)
        rest &= rest - 1
        verts[nv] = v
        nv += 1
    for i in range(n):
        keybuf[8 + i] = <unsigned char>bud[i] if (mask >> i) & 1 else 0
    key = (<bytes>keybuf[:8 + n])
    hit = memo.get(key)
    if hit is not None:
        return hit
    if max_states >= 0 and len(memo) >= max_states:
        raise StateBudgetExceeded(f"game search exceeded {max_states} states")
    cdef int nb[MAXN]
    cdef uint64_t nbrs, r
    cdef bint ok, result = False
    cdef int iv
    # Delete moves
    for iv in range(nv):
        u = verts[iv]
        nbrs = cadj[u] & mask
        ok = True
        r = nbrs
        while r:
            w = _ctz(r)
            r &= r - 1
            if bud[w] == 0:
                ok = False
                break
        if not ok:
            continue
        memcpy(nb, bud, n * sizeof(int))
        r = nbrs
        while r:
            w = _ctz(r)
            r &= r - 1
            nb[w] -= 1
        nb[u] = 0
        if _weak_rec(mask & ~(<uint64_t>1 << u), nb, cadj, n, memo, max_states):
            result = True
            break
    cdef int jw
    if not result:
        moves = []
        for iv in range(nv):
            u = verts[iv]
            r = cadj[u] & mask
            while r:
                w = _ctz(r)
                r &= r - 1
                if bud[u] > bud[w]:
                    moves.append((bud[w] - bud[u], u, w))
        moves.sort()
        for mv in moves:
            u = mv[1]
            jw = mv[2]
            nbrs = cadj[u] & mask & ~(<uint64_t>1 << jw)
            ok = True
            r = nbrs
            while r:
                w = _ctz(r)
                r &= r - 1
                if bud[w] == 0:
                    ok = False
                    break
            if not ok:
                continue
            memcpy(nb, bud, n * sizeof(int))
            r = nbrs
            while r:
                w = _ctz(r)
                r &= r - 1
                nb[w] -= 1
            nb[u] = 0
            if _weak_rec(mask & ~(<uint64_t>1 << u), nb, cadj, n, memo, max_states):
                result = True
                break
    memo[key] = result
    return result


def weak_game(adj, budgets, max_states=None):
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("kernel supports at most 64 vertices")
    cdef uint64_t cadj[MAXN]
    cdef int bud[MAXN]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
        bud[i] = budgets[i]
        if bud[i] > 255:
            raise ValueError("budget too large for kernel")
    memo = {}
    cdef long cap = -1 if max_states is None else max_states
    return _weak_rec((<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1,
                     bud, cadj, n, memo, cap)


# ---------------------------------------------------------------------------
# circulation counting
# ---------------------------------------------------------------------------

cdef void _diff_rec(int i, int sz, int m, int n, int* au, int* av,
                    int* rem, int* imb, int64_t* counts):
    cdef int u, v, x, allz
    if i == m:
        allz = 1
        for x in range(n):
            if imb[x] != 0:
                allz = 0
                break
        if allz:
            counts[sz & 1] += 1
        return
    u = au[i]
    v = av[i]
    rem[u] -= 1
    rem[v] -= 1
    cdef int iu = imb[u] if imb[u] >= 0 else -imb[u]
    cdef int ivv = imb[v] if imb[v] >= 0 else -imb[v]
    if iu <= rem[u] and ivv <= rem[v]:
        _diff_rec(i + 1, sz, m, n, au, av, rem, imb, counts)
    imb[u] += 1
    imb[v] -= 1
    iu = imb[u] if imb[u] >= 0 else -imb[u]
    ivv = imb[v] if imb[v] >= 0 else -imb[v]
    if iu <= rem[u] and ivv <= rem[v]:
        _diff_rec(i + 1, sz + 1, m, n, au, av, rem, imb, counts)
    imb[u] -= 1
    imb[v] += 1
    rem[u] += 1
    rem[v] += 1


def diff_counts(n, arcs):
    cdef int m = len(arcs)
    if m > MAXEDGES or n > MAXN:
        raise ValueError("digraph too large for kernel")
    cdef int au[MAXEDGES]
    cdef int av[MAXEDGES]
    cdef int rem[MAXN]
    cdef int imb[MAXN]
    cdef int64_t counts[2]
    cdef int i
    memset(rem, 0, n * sizeof(int))
    memset(imb, 0, n * sizeof(int))
    counts[0] = 0
    counts[1] = 0
    for i in range(m):
        au[i] = arcs[i][0]
        av[i] = arcs[i][1]
        rem[au[i]] += 1
        rem[av[i]] += 1
    _diff_rec(0, 0, m, <int>n, au, av, rem, imb, counts)
    return counts[0], counts[1]


# ---------------------------------------------------------------------------
# choosability: adversary enumeration over color-type multisets
# ---------------------------------------------------------------------------

DEF MAXTYPES = 4096
DEF MAXINST = 64

cdef struct ChooseCtx:
    int n
    int k
    int ntypes
    uint64_t adj[MAXN]
    int types[MAXTYPES]
    int* suffix          # (ntypes+1) * n
    int chosen_t[MAXINST]
    int chosen_m[MAXINST]
    int n_chosen
    int need[MAXN]
    int inst[MAXINST]
    int n_inst
    signed char* memo    # (n_inst+1) * 2^n tri-state


cdef bint _types_colorable_rec(ChooseCtx* c, int idx, uint64_t uncolored):
    if uncolored == 0:
        return True
    if idx == c.n_inst:
        return False
    cdef long key = idx * (1 << c.n) + <long>uncolored
    if c.memo[key] != 0:
        return c.memo[key] > 0
    cdef uint64_t avail = (<uint64_t>c.inst[idx]) & uncolored
    # enumerate independent subsets of avail
    cdef uint64_t subs[4096]
    cdef int nsubs = 1, i, v
    cdef uint64_t rest = avail, newsub
    subs[0] = 0
    cdef int base
    while rest:
        v = _ctz(rest)
        rest &= rest - 1
        base = nsubs
        for i in range(base):
            if not (c.adj[v] & subs[i]):
                if nsubs < 4096:
                    subs[nsubs] = subs[i] | (<uint64_t>1 << v)
                    nsubs += 1
    cdef bint res = False
    for i in range(nsubs):
        if _types_colorable_rec(c, idx + 1, uncolored & ~subs[i]):
            res = True
            break
    c.memo[key] = 1 if res else -1
    return res


cdef object _choose_rec(ChooseCtx* c, int pos, int* suffix):
    cdef int v, p, t, cap, m, i, all_zero
    all_zero = 1
    for v in range(c.n):
        if c.need[v] != 0:
            all_zero = 0
            break
    if all_zero:
        c.n_inst = 0
        for i in range(c.n_chosen):
            for m in range(c.chosen_m[i]):
                c.inst[c.n_inst] = c.chosen_t[i]
                c.n_inst += 1
        memset(c.memo, 0, (c.n_inst + 1) * (1 << c.n))
        if not _types_colorable_rec(c, 0, (<uint64_t>1 << c.n) - 1):
            return ([c.chosen_t[i] for i in range(c.n_chosen)],
                    [c.chosen_m[i] for i in range(c.n_chosen)])
        return None
    cdef int bad_suffix, ok_type
    cdef object res
    for p in range(pos, c.ntypes):
        bad_suffix = 0
        for v in range(c.n):
            if c.need[v] > suffix[p * c.n + v]:
                bad_suffix = 1
                break
        if bad_suffix:
            return None
        t = c.types[p]
        ok_type = 1
        for i in range(c.n_chosen):
            if not (t & c.chosen_t[i]):
                ok_type = 0
                break
        if not ok_type:
            continue
        cap = c.k + 1
        for v in range(c.n):
            if (t >> v) & 1 and c.need[v] < cap:
                cap = c.need[v]
        if cap == 0:
            continue
        c.chosen_t[c.n_chosen] = t
        c.n_chosen += 1
        for m in range(1, cap + 1):
            c.chosen_m[c.n_chosen - 1] = m
            for v in range(c.n):
                if (t >> v) & 1:
                    c.need[v] -= m
            res = _choose_rec(c, p + 1, suffix)
            for v in range(c.n):
                if (t >> v) & 1:
                    c.need[v] += m
            if res is not None:
                c.n_chosen -= 1
                return res
        c.n_chosen -= 1
    return None


def choosable_check(n, adj, k):
    cdef int cn = n, ck = k
    if cn > 12:
        raise ValueError("choosability kernel supports at most 12 vertices")
    cdef ChooseCtx c
    cdef int i, v, pos
    c.n = cn
    c.k = ck
    cdef int edgeless = 1
    for i in range(cn):
        c.adj[i] = adj[i]
        if adj[i]:
            edgeless = 0
    if edgeless:
        return True, None
    types_py = sorted(range(1, 1 << cn), key=lambda t: (-bin(t).count("1"), t))
    c.ntypes = len(types_py)
    if c.ntypes > MAXTYPES:
        raise ValueError("too many color types")
    for i in range(c.ntypes):
        c.types[i] = types_py[i]
    import array
    suf = array.array("i", [0] * ((c.ntypes + 1) * cn))
    for pos in range(c.ntypes - 1, -1, -1):
        for v in range(cn):
            suf[pos * cn + v] = suf[(pos + 1) * cn + v] + \
                (ck if (types_py[pos] >> v) & 1 else 0)
    memobuf = array.array("b", bytes((MAXINST + 1) * (1 << cn)))
    cdef int[::1] mv_suf = suf
    cdef signed char[::1] mv_memo = memobuf
    c.memo = &mv_memo[0]
    c.n_chosen = 0
    for v in range(cn):
        c.need[v] = ck
    res = _choose_rec(&c, 0, &mv_suf[0])
    if res is None:
        return True, None
    return False, res


# ---------------------------------------------------------------------------
# independent transversals / DP-coloring universality
# ---------------------------------------------------------------------------

cdef bint _indep_rec(int idx, int n, int s, int* order, int* assign,
                     int* inc_cnt, int* inc_flat, int* ptab):
    # inc_flat packs (other, perm_id, inv) triples per vertex
    if idx == n:
        return True
    cdef int v = order[idx]
    cdef int j, kk, u, ju, pid, inv
    cdef bint ok
    for j in range(s):
        ok = True
        for kk in range(inc_cnt[v]):
            u = inc_flat[3 * (v * MAXEDGES + kk)]
            pid = inc_flat[3 * (v * MAXEDGES + kk) + 1]
            inv = inc_flat[3 * (v * MAXEDGES + kk) + 2]
            ju = assign[u]
            if ju < 0:
                continue
            if inv == 0:
                if ptab[pid * MAXS + j] == ju:
                    ok = False
                    break
            else:
                if ptab[pid * MAXS + ju] == j:
                    ok = False
                    break
        if ok:
            assign[v] = j
            if _indep_rec(idx + 1, n, s, order, assign, inc_cnt, inc_flat, ptab):
                return True
            assign[v] = -1
    return False


def independent_transversal(n, s, edges, perm_ids, perms):
    cdef int cn = n, cs = s
    cdef int m = len(edges)
    if cn > MAXN or m > MAXEDGES or cs > MAXS:
        raise ValueError("cover too large for kernel")
    cdef int nperms = len(perms)
    import array
    pt = array.array("i", [0] * (nperms * MAXS))
    cdef int i, j
    for i in range(nperms):
        for j in range(cs):
            pt[i * MAXS + j] = perms[i][j]
    inc_c = array.array("i", [0] * cn)
    inc_f = array.array("i", [0] * (3 * cn * MAXEDGES))
    cdef int u, v
    for i in range(m):
        u = edges[i][0]
        v = edges[i][1]
        inc_f[3 * (u * MAXEDGES + inc_c[u])] = v
        inc_f[3 * (u * MAXEDGES + inc_c[u]) + 1] = perm_ids[i]
        inc_f[3 * (u * MAXEDGES + inc_c[u]) + 2] = 0
        inc_c[u] += 1
        inc_f[3 * (v * MAXEDGES + inc_c[v])] = u
        inc_f[3 * (v * MAXEDGES + inc_c[v]) + 1] = perm_ids[i]
        inc_f[3 * (v * MAXEDGES + inc_c[v]) + 2] = 1
        inc_c[v] += 1
    order_py = sorted(range(cn), key=lambda x: -inc_c[x])
    cdef int corder[MAXN]
    cdef int assign[MAXN]
    for i in range(cn):
        corder[i] = order_py[i]
        assign[i] = -1
    cdef int[::1] mv_pt = pt
    cdef int[::1] mv_ic = inc_c
    cdef int[::1] mv_if = inc_f
    return _indep_rec(0, cn, cs, corder, assign, &mv_ic[0], &mv_if[0], &mv_pt[0])


def dp_universal(n, s, edges, tree_flags, first_reps, max_covers):
    """Status 0: every cover admits an independent transversal; 1: failing
    cover found; 2: cover budget exceeded."""
    import array
    cdef int cn = n, cs = s
    cdef int m = len(edges)
    if cn > MAXN or m > MAXEDGES or cs > MAXS:
        raise ValueError("cover too large for kernel")
    perms_py = [list(p) for p in permutations(range(cs))]
    cdef int nperms = len(perms_py)
    pt = array.array("i", [0] * (nperms * MAXS))
    cdef int i, j
    for i in range(nperms):
        for j in range(cs):
            pt[i * MAXS + j] = perms_py[i][j]
    cot_py = [i for i, t in enumerate(tree_flags) if not t]
    cdef int n_cot = len(cot_py)
    total = 1
    for i in range(n_cot):
        total *= len(first_reps) if i == 0 else nperms
    if max_covers is not None and total > max_covers:
        return 2, 0, None
    cdef int ident = perms_py.index(list(range(cs)))

    # incidence tables, perm id per edge updated in place
    eu = array.array("i", [e[0] for e in edges])
    ev = array.array("i", [e[1] for e in edges])
    pid_arr = array.array("i", [ident] * m)
    inc_c = array.array("i", [0] * cn)
    inc_v = array.array("i", [0] * (cn * MAXEDGES))   # other endpoint
    inc_e = array.array("i", [0] * (cn * MAXEDGES))   # edge index
    inc_d = array.array("i", [0] * (cn * MAXEDGES))   # inv flag
    cdef int u, v
    for i in range(m):
        u = eu[i]
        v = ev[i]
        inc_v[u * MAXEDGES + inc_c[u]] = v
        inc_e[u * MAXEDGES + inc_c[u]] = i
        inc_d[u * MAXEDGES + inc_c[u]] = 0
        inc_c[u] += 1
        inc_v[v * MAXEDGES + inc_c[v]] = u
        inc_e[v * MAXEDGES + inc_c[v]] = i
        inc_d[v * MAXEDGES + inc_c[v]] = 1
        inc_c[v] += 1
    order_py = sorted(range(cn), key=lambda x: -inc_c[x])
    cdef int corder[MAXN]
    for i in range(cn):
        corder[i] = order_py[i]
    cot = array.array("i", cot_py)
    reps = array.array("i", list(first_reps))
    cdef int nreps = len(first_reps)
    cdef int[::1] mv_pt = pt
    cdef int[::1] mv_pid = pid_arr
    cdef int[::1] mv_ic = inc_c
    cdef int[::1] mv_iv = inc_v
    cdef int[::1] mv_ie = inc_e
    cdef int[::1] mv_id = inc_d
    cdef int[::1] mv_cot = cot
    cdef int[::1] mv_reps = reps

    cdef int64_t checked = 0
    cdef int level = 0
    cdef int idx[MAXEDGES]
    cdef int assign[MAXN]
    for i in range(n_cot):
        idx[i] = 0
    cdef bint done = n_cot == 0
    cdef bint found
    # odometer over co-tree permutation choices
    while True:
        for i in range(n_cot):
            mv_pid[mv_cot[i]] = mv_reps[idx[i]] if i == 0 else idx[i]
        for i in range(cn):
            assign[i] = -1
        checked += 1
        found = _indep_rec2(0, cn, cs, corder, assign, &mv_ic[0], &mv_iv[0],
                            &mv_ie[0], &mv_id[0], &mv_pid[0], &mv_pt[0])
        if not found:
            return 1, checked, [mv_pid[mv_cot[i]] for i in range(n_cot)]
        if n_cot == 0:
            break
        level = n_cot - 1
        while level >= 0:
            idx[level] += 1
            if idx[level] < (nreps if level == 0 else nperms):
                break
            idx[level] = 0
            level -= 1
        if level < 0:
            break
    return 0, checked, None


cdef bint _indep_rec2(int idx, int n, int s, int* order, int* assign,
                      int* inc_cnt, int* inc_v, int* inc_e, int* inc_d,
                      int* pid, int* ptab):
    if idx == n:
        return True
    cdef int v = order[idx]
    cdef int j, kk, u, ju, p, inv
    cdef bint ok
    for j in range(s):
        ok = True
        for kk in range(inc_cnt[v]):
            u = inc_v[v * MAXEDGES + kk]
            ju = assign[u]
            if ju < 0:
                continue
            p = pid[inc_e[v * MAXEDGES + kk]]
            inv = inc_d[v * MAXEDGES + kk]
            if inv == 0:
                if ptab[p * MAXS + j] == ju:
                    ok = False
                    break
            else:
                if ptab[p * MAXS + ju] == j:
                    ok = False
                    break
        if ok:
            assign[v] = j
            if _indep_rec2(idx + 1, n, s, order, assign, inc_cnt, inc_v,
                           inc_e, inc_d, pid, ptab):
                return True
            assign[v] = -1
    return False


# ---------------------------------------------------------------------------
# SFDT search over explicit cover adjacency
# ---------------------------------------------------------------------------

cdef bint _peel_masks(int cnt, uint64_t* adjm, int* budv, uint64_t alive) nogil:
    # peel: remove fan vertices with (degree among alive) < budget
    cdef int progress = 1, x, d
    cdef uint64_t rest, r2
    while progress and alive:
        progress = 0
        rest = alive
        while rest:
            x = _ctz(rest)
            rest &= rest - 1
            d = _popcount(adjm[x] & alive)
            if d < budv[x]:
                alive &= ~(<uint64_t>1 << x)
                progress = 1
    return alive == 0


cdef bint _sfdt_rec(int idx, int n, int s, uint64_t* hadj, int* fvals,
                    int* order, int* fixed, int* choice, uint64_t chosen_mask,
                    int* budv):
    if idx == n:
        return True
    cdef int v = order[idx]
    cdef int j, x
    for j in range(s):
        if fixed[v] >= 0 and j != fixed[v]:
            continue
        x = v * s + j
        if fvals[x] <= 0 and fixed[v] < 0:
            continue
        budv[x] = fvals[x]
        if _peel_masks(n * s, hadj, budv, chosen_mask | (<uint64_t>1 << x)):
            choice[v] = j
            if _sfdt_rec(idx + 1, n, s, hadj, fvals, order, fixed, choice,
                         chosen_mask | (<uint64_t>1 << x), budv):
                return True
            choice[v] = -1
    return False


def sfdt_search(n, s, hadj, fvals, order, fixed):
    cdef int cn = n, cs = s
    cdef int tot = cn * cs
    if tot > MAXFAN:
        raise ValueError("cover too large for kernel (max 64 fan vertices)")
    cdef uint64_t ch[MAXFAN]
    cdef int cf[MAXFAN]
    cdef int budv[MAXFAN]
    cdef int corder[MAXN]
    cdef int cfixed[MAXN]
    cdef int choice[MAXN]
    cdef int i
    for i in range(tot):
        ch[i] = hadj[i]
        cf[i] = fvals[i]
        budv[i] = 0
    for i in range(cn):
        corder[i] = order[i]
        cfixed[i] = fixed[i]
        choice[i] = -1
    # visit higher-budget slots first
    if _sfdt_rec(0, cn, cs, ch, cf, corder, cfixed, choice, 0, budv):
        return [choice[i] for i in range(cn)]
    return None


# ---------------------------------------------------------------------------
# certification sweep, product mode
# ---------------------------------------------------------------------------

def sfdt_product_sweep(t, s, edges, tree_flags, first_reps, budget_options,
                       max_cases):
    import array
    cdef int ct = t, cs = s
    cdef int m = len(edges)
    if ct * cs > MAXFAN or ct > MAXT or m > MAXEDGES:
        raise ValueError("pattern too large for kernel")
    perms_py = [list(p) for p in permutations(range(cs))]
    cdef int nperms = len(perms_py)
    cdef int ident = perms_py.index(list(range(cs)))
    cot_py = [i for i, fl in enumerate(tree_flags) if not fl]
    cdef int n_cot = len(cot_py)

    n_budgets = 1
    for opts in budget_options:
        n_budgets *= len(opts)
    n_covers = 1
    for i_ in range(n_cot):
        n_covers *= len(first_reps) if i_ == 0 else nperms
    if max_cases is not None and n_budgets * n_covers > max_cases:
        return 2, 0, None

    pt = array.array("i", [0] * (nperms * MAXS))
    cdef int i, j
    for i in range(nperms):
        for j in range(cs):
            pt[i * MAXS + j] = perms_py[i][j]
    eu = array.array("i", [e[0] for e in edges])
    ev = array.array("i", [e[1] for e in edges])
    cot = array.array("i", cot_py)
    reps = array.array("i", list(first_reps))
    cdef int nreps = len(reps)
    # budgets flattened: opt_vals[v][k][j]
    nopt = array.array("i", [len(o) for o in budget_options])
    maxopt = max(len(o) for o in budget_options)
    ov = array.array("i", [0] * (ct * maxopt * cs))
    for i in range(ct):
        for k in range(len(budget_options[i])):
            for j in range(cs):
                ov[(i * maxopt + k) * cs + j] = budget_options[i][k][j]

    cdef int[::1] mv_pt = pt
    cdef int[::1] mv_eu = eu
    cdef int[::1] mv_ev = ev
    cdef int[::1] mv_cot = cot
    cdef int[::1] mv_reps = reps
    cdef int[::1] mv_nopt = nopt
    cdef int[::1] mv_ov = ov
    cdef int cmaxopt = maxopt

    cdef uint64_t hadj[MAXFAN]
    cdef int fvals[MAXFAN]
    cdef int budv[MAXFAN]
    cdef int corder[MAXN]
    cdef int cfixed[MAXN]
    cdef int choice[MAXN]
    cdef int cov_idx[MAXEDGES]
    cdef int bud_idx[MAXT]
    cdef int cache_R[CACHESZ][MAXT]
    cdef int cache_tau[CACHESZ][MAXT]
    cdef int cache_len
    cdef int64_t cases = 0
    cdef int level, u, v, a, b, ci, ok, x, w, d, pick
    cdef uint64_t radj[MAXT]
    cdef uint64_t aliveT
    cdef int phi[MAXT]

    for i in range(ct):
        corder[i] = i
        cfixed[i] = -1
    for i in range(n_cot):
        cov_idx[i] = 0

    while True:
        # build fan adjacency for this cover
        for i in range(ct * cs):
            hadj[i] = 0
        for i in range(m):
            u = mv_eu[i]
            v = mv_ev[i]
            ci = ident
            for j in range(n_cot):
                if mv_cot[j] == i:
                    ci = mv_reps[cov_idx[j]] if j == 0 else cov_idx[j]
                    break
            for j in range(cs):
                a = u * cs + j
                b = v * cs + mv_pt[ci * MAXS + j]
                hadj[a] |= <uint64_t>1 << b
                hadj[b] |= <uint64_t>1 << a
        cache_len = 0
        # odometer over budget choices
        for i in range(ct):
            bud_idx[i] = 0
        while True:
            cases += 1
            for i in range(ct):
                for j in range(cs):
                    fvals[i * cs + j] = mv_ov[(i * cmaxopt + bud_idx[i]) * cs + j]
            ok = 0
            for ci in range(cache_len):
                ok = 1
                for i in range(ct):
                    if fvals[i * cs + cache_R[ci][i]] < cache_tau[ci][i]:
                        ok = 0
                        break
                if ok:
                    break
            if not ok:
                for i in range(ct):
                    choice[i] = -1
                for i in range(ct * cs):
                    budv[i] = 0
                if not _sfdt_rec(0, ct, cs, hadj, fvals, corder, cfixed,
                                 choice, 0, budv):
                    return 1, cases, (
                        [(mv_reps[cov_idx[j]] if j == 0 else cov_idx[j])
                         for j in range(n_cot)],
                        [bud_idx[i] for i in range(ct)])
                # minimal thresholds from an elimination order of the R-graph
                for i in range(ct):
                    radj[i] = 0
                for u in range(ct):
                    for w in range(u + 1, ct):
                        if (hadj[u * cs + choice[u]] >> (w * cs + choice[w])) & 1:
                            radj[u] |= <uint64_t>1 << w
                            radj[w] |= <uint64_t>1 << u
                for i in range(ct):
                    phi[i] = fvals[i * cs + choice[i]]
                aliveT = (<uint64_t>1 << ct) - 1
                if cache_len < CACHESZ:
                    cache_len += 1
                for ci in range(cache_len - 1, 0, -1):
                    for i in range(ct):
                        cache_R[ci][i] = cache_R[ci - 1][i]
                        cache_tau[ci][i] = cache_tau[ci - 1][i]
                for i in range(ct):
                    cache_R[0][i] = choice[i]
                for i in range(ct):
                    pick = -1
                    for w in range(ct):
                        if (aliveT >> w) & 1 and _popcount(radj[w] & aliveT) < phi[w]:
                            pick = w
                            break
                    # pick >= 0 guaranteed: the search verified the peel
                    cache_tau[0][pick] = _popcount(radj[pick] & aliveT) + 1
                    aliveT &= ~(<uint64_t>1 << pick)
            # advance budget odometer
            level = ct - 1
            while level >= 0:
                bud_idx[level] += 1
                if bud_idx[level] < mv_nopt[level]:
                    break
                bud_idx[level] = 0
                level -= 1
            if level < 0:
                break
        # advance cover odometer
        if n_cot == 0:
            break
        level = n_cot - 1
        while level >= 0:
            cov_idx[level] += 1
            if cov_idx[level] < (nreps if level == 0 else nperms):
                break
            cov_idx[level] = 0
            level -= 1
        if level < 0:
            break
    return 0, cases, None
