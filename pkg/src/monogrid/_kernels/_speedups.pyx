# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled search kernels.

Exact mirror of ``pure.py``: same branching rules, pruning bounds, node
accounting and status codes, so the two backends are interchangeable and
return identical numbers and witnesses.  All searches run without the GIL;
candidate sets live in per-call malloc'd word arrays.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t, int64_t

BACKEND_NAME = "cython"

cdef enum:
    TIME_CHECK_MASK = 4095

cdef extern from *:
    """
    #include <time.h>
    static inline int mg_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int mg_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    static double mg_monotonic(void) {
        struct timespec ts;
        clock_gettime(CLOCK_MONOTONIC, &ts);
        return ts.tv_sec + ts.tv_nsec * 1e-9;
    }
    """
    int mg_popcount(unsigned long long x) nogil
    int mg_ctz(unsigned long long x) nogil
    double mg_monotonic() nogil


# -- word-array bitset helpers ----------------------------------------------

cdef inline int words_popcount(const uint64_t* a, int nw) nogil:
    cdef int j, total = 0
    for j in range(nw):
        total += mg_popcount(a[j])
    return total


cdef inline bint words_is_zero(const uint64_t* a, int nw) nogil:
    cdef int j
    for j in range(nw):
        if a[j]:
            return 0
    return 1


cdef inline int words_first_bit(const uint64_t* a, int nw) nogil:
    cdef int j
    for j in range(nw):
        if a[j]:
            return j * 64 + mg_ctz(a[j])
    return -1


cdef inline void words_clear_bit(uint64_t* a, int v) nogil:
    a[v >> 6] &= ~((<uint64_t>1) << (v & 63))


cdef inline void words_set_bit(uint64_t* a, int v) nogil:
    a[v >> 6] |= (<uint64_t>1) << (v & 63)


cdef inline int and_popcount(const uint64_t* a, const uint64_t* b, int nw) nogil:
    cdef int j, total = 0
    for j in range(nw):
        total += mg_popcount(a[j] & b[j])
    return total


# -- shared search context ---------------------------------------------------

cdef struct Ctx:
    const uint64_t* adj     # nv rows of nw words
    int nv
    int nw
    uint64_t* levels        # 4 buffers per recursion level
    uint64_t* scratch       # 2 * nw (clique cover)
    int64_t nodes
    int64_t node_limit
    double deadline
    int status              # 0 ok, 1 node budget, 2 time budget
    int target
    int best
    unsigned long long count
    uint64_t* sols          # cap * nw, or NULL
    long long cap
    long long stored
    uint64_t* found         # witness buffer, or NULL
    int found_flag


cdef inline bint tick(Ctx* c) nogil:
    c.nodes += 1
    if c.node_limit >= 0 and c.nodes > c.node_limit:
        c.status = 1
        return 1
    if (c.nodes & TIME_CHECK_MASK) == 0 and mg_monotonic() > c.deadline:
        c.status = 2
        return 1
    return 0


cdef int clique_cover(Ctx* c, const uint64_t* p) nogil:
    """Greedy clique cover size of p; upper bound for alpha(p)."""
    cdef uint64_t* r = c.scratch
    cdef uint64_t* cand = c.scratch + c.nw
    cdef const uint64_t* row
    cdef int v, u, j, bound = 0
    memcpy(r, p, c.nw * 8)
    while True:
        v = words_first_bit(r, c.nw)
        if v < 0:
            break
        words_clear_bit(r, v)
        row = c.adj + v * c.nw
        for j in range(c.nw):
            cand[j] = row[j] & r[j]
        while True:
            u = words_first_bit(cand, c.nw)
            if u < 0:
                break
            words_clear_bit(r, u)
            row = c.adj + u * c.nw
            for j in range(c.nw):
                cand[j] &= row[j]
        bound += 1
    return bound


cdef int scan(Ctx* c, const uint64_t* p, uint64_t* iso) nogil:
    """Isolated-vertex mask and branch vertex (max degree, lowest index)."""
    cdef int j, b, v, deg, branch = -1, branch_deg = 0
    cdef uint64_t w
    memset(iso, 0, c.nw * 8)
    for j in range(c.nw):
        w = p[j]
        while w:
            b = mg_ctz(w)
            w &= w - 1
            v = j * 64 + b
            deg = and_popcount(c.adj + v * c.nw, p, c.nw)
            if deg == 0:
                iso[j] |= (<uint64_t>1) << b
            elif deg > branch_deg:
                branch_deg = deg
                branch = v
    return branch


# -- maximum independent set kernels -----------------------------------------

cdef void alpha_rec(Ctx* c, const uint64_t* p_in, int size, int depth) nogil:
    if tick(c):
        return
    cdef int nw = c.nw
    cdef uint64_t* A = c.levels + depth * 4 * nw
    cdef uint64_t* B = A + nw
    cdef uint64_t* iso = A + 2 * nw
    cdef const uint64_t* row
    cdef int j, branch
    branch = scan(c, p_in, iso)
    size += words_popcount(iso, nw)
    for j in range(nw):
        A[j] = p_in[j] & ~iso[j]
    if words_is_zero(A, nw):
        if size > c.best:
            c.best = size
        return
    if size + words_popcount(A, nw) <= c.best:
        return
    if size + clique_cover(c, A) <= c.best:
        return
    row = c.adj + branch * nw
    for j in range(nw):
        B[j] = A[j] & ~row[j]
    words_clear_bit(B, branch)
    alpha_rec(c, B, size + 1, depth + 1)
    if c.status:
        return
    words_clear_bit(A, branch)
    alpha_rec(c, A, size, depth + 1)


cdef void count_rec(Ctx* c, const uint64_t* p_in, int size, int depth) nogil:
    if tick(c):
        return
    cdef int nw = c.nw
    cdef uint64_t* A = c.levels + depth * 4 * nw
    cdef uint64_t* B = A + nw
    cdef uint64_t* iso = A + 2 * nw
    cdef const uint64_t* row
    cdef int j, branch
    branch = scan(c, p_in, iso)
    size += words_popcount(iso, nw)
    for j in range(nw):
        A[j] = p_in[j] & ~iso[j]
    if words_is_zero(A, nw):
        if size == c.target:
            c.count += 1
        return
    if size + words_popcount(A, nw) < c.target:
        return
    if size + clique_cover(c, A) < c.target:
        return
    row = c.adj + branch * nw
    for j in range(nw):
        B[j] = A[j] & ~row[j]
    words_clear_bit(B, branch)
    count_rec(c, B, size + 1, depth + 1)
    if c.status:
        return
    words_clear_bit(A, branch)
    count_rec(c, A, size, depth + 1)


cdef void enum_rec(Ctx* c, const uint64_t* p_in, const uint64_t* cur_in,
                   int size, int depth) nogil:
    if tick(c):
        return
    cdef int nw = c.nw
    cdef uint64_t* A = c.levels + depth * 4 * nw
    cdef uint64_t* B = A + nw
    cdef uint64_t* iso = A + 2 * nw
    cdef uint64_t* cur = A + 3 * nw
    cdef const uint64_t* row
    cdef int j, branch
    branch = scan(c, p_in, iso)
    size += words_popcount(iso, nw)
    for j in range(nw):
        A[j] = p_in[j] & ~iso[j]
        cur[j] = cur_in[j] | iso[j]
    if words_is_zero(A, nw):
        if size == c.target:
            c.count += 1
            if c.stored < c.cap:
                memcpy(c.sols + c.stored * nw, cur, nw * 8)
                c.stored += 1
        return
    if size + words_popcount(A, nw) < c.target:
        return
    if size + clique_cover(c, A) < c.target:
        return
    row = c.adj + branch * nw
    for j in range(nw):
        B[j] = A[j] & ~row[j]
    words_clear_bit(B, branch)
    words_set_bit(cur, branch)
    enum_rec(c, B, cur, size + 1, depth + 1)
    words_clear_bit(cur, branch)
    if c.status:
        return
    words_clear_bit(A, branch)
    enum_rec(c, A, cur, size, depth + 1)


cdef void first_rec(Ctx* c, const uint64_t* p_in, const uint64_t* cur_in,
                    int size, int depth) nogil:
    if tick(c):
        return
    cdef int nw = c.nw
    cdef uint64_t* A = c.levels + depth * 4 * nw
    cdef uint64_t* B = A + nw
    cdef uint64_t* iso = A + 2 * nw
    cdef uint64_t* cur = A + 3 * nw
    cdef const uint64_t* row
    cdef int j, v, branch
    branch = scan(c, p_in, iso)
    size += words_popcount(iso, nw)
    for j in range(nw):
        A[j] = p_in[j] & ~iso[j]
        cur[j] = cur_in[j] | iso[j]
    if size >= c.target:
        memcpy(c.found, cur, nw * 8)
        c.found_flag = 1
        return
    if words_is_zero(A, nw):
        return
    if size + words_popcount(A, nw) < c.target:
        return
    if size + clique_cover(c, A) < c.target:
        return
    v = words_first_bit(A, nw)
    row = c.adj + v * nw
    for j in range(nw):
        B[j] = A[j] & ~row[j]
    words_clear_bit(B, v)
    words_set_bit(cur, v)
    first_rec(c, B, cur, size + 1, depth + 1)
    words_clear_bit(cur, v)
    if c.status or c.found_flag:
        return
    words_clear_bit(A, v)
    first_rec(c, A, cur, size, depth + 1)


# -- python-facing wrappers ---------------------------------------------------

cdef object words_to_mask(const uint64_t* a, int nw):
    cdef int j
    mask = 0
    for j in range(nw):
        mask |= int(a[j]) << (64 * j)
    return mask


cdef void mask_to_words(object mask, uint64_t* out, int nw):
    cdef int j
    for j in range(nw):
        out[j] = <uint64_t>((mask >> (64 * j)) & 0xFFFFFFFFFFFFFFFF)


cdef class _Workspace:
    """Owns the malloc'd buffers for one kernel call."""
    cdef uint64_t* levels
    cdef uint64_t* scratch
    cdef uint64_t* masks     # p, cur, found
    cdef uint64_t* sols

    def __cinit__(self, int nv, int nw, long long cap):
        self.levels = <uint64_t*>malloc(4 * (nv + 2) * nw * sizeof(uint64_t))
        self.scratch = <uint64_t*>malloc(2 * nw * sizeof(uint64_t))
        self.masks = <uint64_t*>malloc(3 * nw * sizeof(uint64_t))
        self.sols = NULL
        if cap > 0:
            self.sols = <uint64_t*>malloc(cap * nw * sizeof(uint64_t))
        if (self.levels == NULL or self.scratch == NULL or self.masks == NULL
                or (cap > 0 and self.sols == NULL)):
            raise MemoryError()

    def __dealloc__(self):
        free(self.levels)
        free(self.scratch)
        free(self.masks)
        free(self.sols)


cdef Ctx make_ctx(const uint64_t[:, ::1] adj, int nv, int nw, _Workspace ws,
                  long long node_limit, double seconds):
    cdef Ctx c
    c.adj = &adj[0, 0]
    c.nv = nv
    c.nw = nw
    c.levels = ws.levels
    c.scratch = ws.scratch
    c.nodes = 0
    c.node_limit = node_limit
    c.deadline = mg_monotonic() + seconds
    c.status = 0
    c.target = 0
    c.best = 0
    c.count = 0
    c.sols = ws.sols
    c.cap = 0
    c.stored = 0
    c.found = NULL
    c.found_flag = 0
    return c


def mis_alpha(g, p_mask, int base, int best, node_limit, seconds):
    cdef const uint64_t[:, ::1] adj = g.adjacency
    cdef int nv = g.n_vertices
    cdef int nw = g.words
    if nv == 0:
        return max(best, base), 1, 0
    cdef _Workspace ws = _Workspace(nv, nw, 0)
    cdef Ctx c = make_ctx(adj, nv, nw, ws, node_limit, seconds)
    c.best = best
    cdef uint64_t* p = ws.masks
    mask_to_words(p_mask, p, nw)
    cdef int b = base
    with nogil:
        alpha_rec(&c, p, b, 0)
    return c.best, c.nodes, c.status


def mis_count(g, p_mask, int base, int target, node_limit, seconds):
    cdef const uint64_t[:, ::1] adj = g.adjacency
    cdef int nv = g.n_vertices
    cdef int nw = g.words
    if nv == 0:
        return (1 if base == target else 0), 1, 0
    cdef _Workspace ws = _Workspace(nv, nw, 0)
    cdef Ctx c = make_ctx(adj, nv, nw, ws, node_limit, seconds)
    c.target = target
    cdef uint64_t* p = ws.masks
    mask_to_words(p_mask, p, nw)
    cdef int b = base
    with nogil:
        count_rec(&c, p, b, 0)
    return int(c.count), c.nodes, c.status


def mis_enumerate(g, p_mask, base_mask, int target, cap, node_limit, seconds):
    cdef const uint64_t[:, ::1] adj = g.adjacency
    cdef int nv = g.n_vertices
    cdef int nw = g.words
    cdef long long cap_c = cap
    if nv == 0:
        if target == 0:
            return ([0] if cap_c > 0 else []), 1, 1, 0
        return [], 0, 1, 0
    cdef _Workspace ws = _Workspace(nv, nw, cap_c)
    cdef Ctx c = make_ctx(adj, nv, nw, ws, node_limit, seconds)
    c.target = target
    c.cap = cap_c
    cdef uint64_t* p = ws.masks
    cdef uint64_t* cur = ws.masks + nw
    mask_to_words(p_mask, p, nw)
    mask_to_words(base_mask, cur, nw)
    cdef int b = words_popcount(cur, nw)
    with nogil:
        enum_rec(&c, p, cur, b, 0)
    sols = [words_to_mask(c.sols + i * nw, nw) for i in range(c.stored)]
    return sols, int(c.count), c.nodes, c.status


def mis_first(g, p_mask, base_mask, int target, node_limit, seconds):
    cdef const uint64_t[:, ::1] adj = g.adjacency
    cdef int nv = g.n_vertices
    cdef int nw = g.words
    if nv == 0:
        return (0 if target <= 0 else None), 1, 0
    cdef _Workspace ws = _Workspace(nv, nw, 0)
    cdef Ctx c = make_ctx(adj, nv, nw, ws, node_limit, seconds)
    c.target = target
    cdef uint64_t* p = ws.masks
    cdef uint64_t* cur = ws.masks + nw
    c.found = ws.masks + 2 * nw
    mask_to_words(p_mask, p, nw)
    mask_to_words(base_mask, cur, nw)
    cdef int b = words_popcount(cur, nw)
    with nogil:
        first_rec(&c, p, cur, b, 0)
    found = words_to_mask(c.found, nw) if c.found_flag else None
    return found, c.nodes, c.status


# -- minimum (independent) dominating set -------------------------------------

cdef struct DomCtx:
    const uint64_t* adj
    uint64_t* closed
    uint64_t* full
    int nv
    int nw
    uint64_t* levels     # 4 buffers per level
    uint64_t* chosen
    uint64_t* best_set
    uint64_t* blocked
    int64_t nodes
    int64_t node_limit
    double deadline
    int status
    int best
    bint independent


cdef inline bint dom_tick(DomCtx* c) nogil:
    c.nodes += 1
    if c.node_limit >= 0 and c.nodes > c.node_limit:
        c.status = 1
        return 1
    if (c.nodes & TIME_CHECK_MASK) == 0 and mg_monotonic() > c.deadline:
        c.status = 2
        return 1
    return 0


cdef void dom_rec(DomCtx* c, const uint64_t* banned_in, const uint64_t* covered_in,
                  int size, int depth) nogil:
    if dom_tick(c):
        return
    cdef int nw = c.nw
    cdef int j, k, b, u, w, pick, pick_count, count, lb
    cdef bint covered_all = 1, overlap
    cdef uint64_t word
    cdef const uint64_t* crow
    for j in range(nw):
        if covered_in[j] != c.full[j]:
            covered_all = 0
            break
    if covered_all:
        if size < c.best:
            c.best = size
            memcpy(c.best_set, c.chosen, nw * 8)
        return
    if size + 1 >= c.best:
        return
    pick = -1
    pick_count = c.nv + 1
    for j in range(nw):
        word = c.full[j] & ~covered_in[j]
        while word:
            b = mg_ctz(word)
            word &= word - 1
            u = j * 64 + b
            crow = c.closed + u * nw
            count = 0
            for k in range(nw):
                count += mg_popcount(crow[k] & ~banned_in[k])
            if count == 0:
                return
            if count < pick_count:
                pick_count = count
                pick = u
    # greedy packing lower bound over uncovered vertices
    lb = 0
    memset(c.blocked, 0, nw * 8)
    for j in range(nw):
        word = c.full[j] & ~covered_in[j]
        while word:
            b = mg_ctz(word)
            word &= word - 1
            u = j * 64 + b
            crow = c.closed + u * nw
            overlap = 0
            for k in range(nw):
                if crow[k] & ~banned_in[k] & c.blocked[k]:
                    overlap = 1
                    break
            if not overlap:
                lb += 1
                for k in range(nw):
                    c.blocked[k] |= crow[k] & ~banned_in[k]
    if size + lb >= c.best:
        return
    cdef uint64_t* ban_iter = c.levels + depth * 4 * nw
    cdef uint64_t* ban_child = ban_iter + nw
    cdef uint64_t* cov_child = ban_iter + 2 * nw
    cdef uint64_t* cand = ban_iter + 3 * nw
    memcpy(ban_iter, banned_in, nw * 8)
    crow = c.closed + pick * nw
    for j in range(nw):
        cand[j] = crow[j] & ~banned_in[j]
    for j in range(nw):
        word = cand[j]
        while word:
            b = mg_ctz(word)
            word &= word - 1
            w = j * 64 + b
            for k in range(nw):
                ban_child[k] = ban_iter[k]
                cov_child[k] = covered_in[k] | c.closed[w * nw + k]
                if c.independent:
                    ban_child[k] |= c.adj[w * nw + k]
            words_set_bit(ban_child, w)
            words_set_bit(c.chosen, w)
            dom_rec(c, ban_child, cov_child, size + 1, depth + 1)
            words_clear_bit(c.chosen, w)
            if c.status:
                return
            words_set_bit(ban_iter, w)


def dominating(g, independent, int best, best_mask, node_limit, seconds):
    cdef const uint64_t[:, ::1] adj = g.adjacency
    cdef int nv = g.n_vertices
    cdef int nw = g.words
    if nv == 0:
        return best, best_mask, 1, 0
    cdef DomCtx c
    cdef uint64_t* block = <uint64_t*>malloc(
        (nv * nw + 4 * (nv + 2) * nw + 6 * nw) * sizeof(uint64_t))
    if block == NULL:
        raise MemoryError()
    c.adj = &adj[0, 0]
    c.nv = nv
    c.nw = nw
    c.closed = block
    c.levels = block + nv * nw
    c.full = c.levels + 4 * (nv + 2) * nw
    c.chosen = c.full + nw
    c.best_set = c.chosen + nw
    c.blocked = c.best_set + nw
    c.nodes = 0
    c.node_limit = node_limit
    c.deadline = mg_monotonic() + seconds
    c.status = 0
    c.best = best
    c.independent = 1 if independent else 0
    cdef int v, j
    for v in range(nv):
        for j in range(nw):
            c.closed[v * nw + j] = adj[v, j]
        words_set_bit(c.closed + v * nw, v)
    memset(c.full, 0, nw * 8)
    for v in range(nv):
        words_set_bit(c.full, v)
    memset(c.chosen, 0, nw * 8)
    mask_to_words(best_mask, c.best_set, nw)
    cdef uint64_t* banned0 = c.blocked + nw
    cdef uint64_t* covered0 = banned0 + nw
    memset(banned0, 0, nw * 8)
    memset(covered0, 0, nw * 8)
    try:
        with nogil:
            dom_rec(&c, banned0, covered0, 0, 0)
        return c.best, words_to_mask(c.best_set, nw), c.nodes, c.status
    finally:
        free(block)
