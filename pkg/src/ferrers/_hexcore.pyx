# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hex kernels. Same interface and results as ``_hexcore_py``."""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    WHITE = 0
    BLACK = 1
    CORNER = -1

cdef enum:
    OK = 0
    REPEATED_VERTEX = 1
    STEP_BOUND = 2
    BAD_EXIT = 3
    CHAIN_INVALID = 4
    NO_WINNER = 5
    DISAGREE = 6

_REASONS = {
    REPEATED_VERTEX: "path revisits a vertex",
    STEP_BOUND: "path exceeds the edge bound",
    BAD_EXIT: "path left through an unexpected corner",
    CHAIN_INVALID: "witness chain does not validate",
    NO_WINNER: "oracle finds no winner",
    DISAGREE: "oracle disagrees with traced winner",
}


cpdef int edge_bound(int n, int m):
    return 6 * n * m - (n * (m - 1) + (n - 1) * m + (n - 1) * (m - 1))


cdef struct Work:
    int n, m, w, size, bound
    int *ext
    int *stamp        # per vertex id
    int *mark         # per extended cell
    int generation
    int *lefts
    int *rights
    int *path         # 3 ints per visited vertex
    int nlefts, nrights, nverts
    int *chain
    int nchain
    int *stack
    int winner


cdef Work *work_new(int n, int m) except NULL:
    cdef Work *wk = <Work *> calloc(1, sizeof(Work))
    if wk == NULL:
        raise MemoryError()
    wk.n = n
    wk.m = m
    wk.w = m + 2
    wk.size = (n + 2) * (m + 2)
    wk.bound = edge_bound(n, m)
    wk.ext = <int *> calloc(wk.size, sizeof(int))
    wk.stamp = <int *> calloc(2 * wk.size, sizeof(int))
    wk.mark = <int *> calloc(wk.size, sizeof(int))
    wk.lefts = <int *> malloc((wk.bound + 4) * sizeof(int))
    wk.rights = <int *> malloc((wk.bound + 4) * sizeof(int))
    wk.path = <int *> malloc(3 * (wk.bound + 4) * sizeof(int))
    wk.chain = <int *> malloc((wk.bound + 4) * sizeof(int))
    wk.stack = <int *> malloc(wk.size * sizeof(int))
    if (wk.ext == NULL or wk.stamp == NULL or wk.mark == NULL or wk.lefts == NULL
            or wk.rights == NULL or wk.path == NULL or wk.chain == NULL or wk.stack == NULL):
        work_free(wk)
        raise MemoryError()
    return wk


cdef void work_free(Work *wk):
    free(wk.ext)
    free(wk.stamp)
    free(wk.mark)
    free(wk.lefts)
    free(wk.rights)
    free(wk.path)
    free(wk.chain)
    free(wk.stack)
    free(wk)


cdef void extend(Work *wk, const char *cells):
    cdef int n = wk.n, m = wk.m, w = wk.w, r, c
    for c in range(1, m + 1):
        wk.ext[c] = BLACK
        wk.ext[(n + 1) * w + c] = BLACK
    for r in range(1, n + 1):
        wk.ext[r * w] = WHITE
        wk.ext[r * w + m + 1] = WHITE
        for c in range(1, m + 1):
            wk.ext[r * w + c] = BLACK if cells[(r - 1) * m + (c - 1)] else WHITE
    wk.ext[0] = CORNER
    wk.ext[m + 1] = CORNER
    wk.ext[(n + 1) * w] = CORNER
    wk.ext[(n + 1) * w + m + 1] = CORNER


cdef inline int vertex_id(int a, int b, int c):
    cdef int t
    if a > b:
        t = a; a = b; b = t
    if b > c:
        t = b; b = c; c = t
    if a > b:
        t = a; a = b; b = t
    return 2 * a + 1 if b - a == 1 else 2 * a


cdef int trace_c(Work *wk, const char *cells):
    cdef int n = wk.n, m = wk.m, w = wk.w
    cdef int deltas[6]
    cdef int left, right, ahead, d, i, v, colour, k, start, end
    cdef int *seq
    cdef int nseq
    deltas[0] = 1
    deltas[1] = 1 - w
    deltas[2] = -w
    deltas[3] = -1
    deltas[4] = w - 1
    deltas[5] = w
    extend(wk, cells)
    wk.generation += 1
    left = (n + 1) * w + m
    right = n * w + m + 1
    wk.lefts[0] = left
    wk.rights[0] = right
    wk.nlefts = 1
    wk.nrights = 1
    wk.nverts = 0
    wk.nchain = 0
    wk.winner = -1
    while True:
        d = right - left
        i = 0
        while deltas[i] != d:
            i += 1
        ahead = left + deltas[(i + 1) % 6]
        v = vertex_id(left, right, ahead)
        if wk.stamp[v] == wk.generation:
            return REPEATED_VERTEX
        wk.stamp[v] = wk.generation
        if wk.nverts > wk.bound:
            return STEP_BOUND
        wk.path[3 * wk.nverts] = left
        wk.path[3 * wk.nverts + 1] = right
        wk.path[3 * wk.nverts + 2] = ahead
        wk.nverts += 1
        colour = wk.ext[ahead]
        if colour == CORNER:
            break
        if colour == BLACK:
            left = ahead
            wk.lefts[wk.nlefts] = left
            wk.nlefts += 1
        else:
            right = ahead
            wk.rights[wk.nrights] = right
            wk.nrights += 1

    if ahead == m + 1:
        wk.winner = BLACK
        seq = wk.lefts
        nseq = wk.nlefts
        start = 0
        for k in range(nseq):
            if seq[k] // w == n + 1:
                start = k
        end = nseq
        for k in range(start + 1, nseq):
            if seq[k] // w == 0:
                end = k
                break
    elif ahead == (n + 1) * w:
        wk.winner = WHITE
        seq = wk.rights
        nseq = wk.nrights
        start = 0
        for k in range(nseq):
            if seq[k] % w == m + 1:
                start = k
        end = nseq
        for k in range(start + 1, nseq):
            if seq[k] % w == 0:
                end = k
                break
    else:
        return BAD_EXIT
    for k in range(start + 1, end):
        if wk.mark[seq[k]] != wk.generation:
            wk.mark[seq[k]] = wk.generation
            wk.chain[wk.nchain] = seq[k]
            wk.nchain += 1
    return OK


cdef int offsets_r[6]
cdef int offsets_c[6]
offsets_r[:] = [0, 0, 1, -1, -1, 1]
offsets_c[:] = [1, -1, 0, 0, 1, -1]


cdef bint connected_c(Work *wk, const char *cells, int colour):
    # visited flags live in wk.mark under a fresh generation, indexed by board cell
    cdef int n = wk.n, m = wk.m, r, c, rr, cc, k, top = 0, x, col
    wk.generation += 1
    if colour == BLACK:
        for c in range(m):
            if (cells[c] != 0) == colour:
                wk.mark[c] = wk.generation
                wk.stack[top] = c
                top += 1
    else:
        for r in range(n):
            if (cells[r * m] != 0) == colour:
                wk.mark[r * m] = wk.generation
                wk.stack[top] = r * m
                top += 1
    while top > 0:
        top -= 1
        x = wk.stack[top]
        r = x // m
        c = x % m
        if (colour == BLACK and r == n - 1) or (colour == WHITE and c == m - 1):
            return True
        for k in range(6):
            rr = r + offsets_r[k]
            cc = c + offsets_c[k]
            if 0 <= rr < n and 0 <= cc < m:
                x = rr * m + cc
                if wk.mark[x] != wk.generation and (cells[x] != 0) == colour:
                    wk.mark[x] = wk.generation
                    wk.stack[top] = x
                    top += 1
    return False


cdef bint chain_valid_c(Work *wk, const char *cells, int colour):
    # chain cells are extended indices; members are flagged with gen, visited with gen + 1
    cdef int n = wk.n, m = wk.m, w = wk.w, k, x, r, c, rr, cc, top = 0, y
    cdef int member, seen
    if wk.nchain == 0:
        return False
    wk.generation += 2
    member = wk.generation - 1
    seen = wk.generation
    for k in range(wk.nchain):
        x = wk.chain[k]
        r = x // w
        c = x % w
        if r < 1 or r > n or c < 1 or c > m:
            return False
        if (cells[(r - 1) * m + (c - 1)] != 0) != colour:
            return False
        wk.mark[x] = member
    for k in range(wk.nchain):
        x = wk.chain[k]
        if (colour == BLACK and x // w == 1) or (colour == WHITE and x % w == 1):
            wk.mark[x] = seen
            wk.stack[top] = x
            top += 1
    while top > 0:
        top -= 1
        x = wk.stack[top]
        r = x // w
        c = x % w
        if (colour == BLACK and r == n) or (colour == WHITE and c == m):
            return True
        for k in range(6):
            rr = r + offsets_r[k]
            cc = c + offsets_c[k]
            if 1 <= rr <= n and 1 <= cc <= m:
                y = rr * w + cc
                if wk.mark[y] == member:
                    wk.mark[y] = seen
                    wk.stack[top] = y
                    top += 1
    return False


cdef int check_c(Work *wk, const char *cells, bint corrupt):
    cdef int status = trace_c(wk, cells)
    cdef int winner
    cdef bint black, white
    if status != OK:
        return status
    winner = wk.winner
    if not chain_valid_c(wk, cells, winner):
        return CHAIN_INVALID
    black = connected_c(wk, cells, BLACK)
    white = connected_c(wk, cells, WHITE)
    if corrupt:
        black = False
        white = False
    if not (black or white):
        return NO_WINNER
    if not (black if winner == BLACK else white):
        return DISAGREE
    return OK


cdef bytes _cells_bytes(int n, int m, cells):
    cdef bytearray buf = bytearray(n * m)
    cdef int i
    if len(cells) != n * m:
        raise ValueError(f"expected {n * m} cells, got {len(cells)}")
    for i in range(n * m):
        buf[i] = 1 if cells[i] else 0
    return bytes(buf)


def trace(int n, int m, cells):
    cdef bytes buf = _cells_bytes(n, m, cells)
    cdef Work *wk = work_new(n, m)
    cdef int status, k, w = m + 2
    try:
        status = trace_c(wk, buf)
        vertices = [
            tuple(sorted((wk.path[3 * k], wk.path[3 * k + 1], wk.path[3 * k + 2])))
            for k in range(wk.nverts)
        ]
        if status != OK:
            return status, -1, vertices, []
        chain = [wk.chain[k] for k in range(wk.nchain)]
        return status, wk.winner, vertices, chain
    finally:
        work_free(wk)


def connected(int n, int m, cells, int colour):
    cdef bytes buf = _cells_bytes(n, m, cells)
    cdef Work *wk = work_new(n, m)
    try:
        return bool(connected_c(wk, buf, colour))
    finally:
        work_free(wk)


def chain_valid(int n, int m, cells, chain, int colour):
    cdef bytes buf = _cells_bytes(n, m, cells)
    cdef Work *wk = work_new(n, m)
    cdef int w = m + 2
    try:
        members = []
        for r, c in chain:
            if not (1 <= r <= n and 1 <= c <= m):
                return False
            if r * w + c not in members:
                members.append(r * w + c)
        for k, x in enumerate(members):
            wk.chain[k] = x
        wk.nchain = len(members)
        return bool(chain_valid_c(wk, buf, colour))
    finally:
        work_free(wk)


def check(int n, int m, cells, bint corrupt=False):
    cdef bytes buf = _cells_bytes(n, m, cells)
    cdef Work *wk = work_new(n, m)
    cdef int status
    try:
        status = check_c(wk, buf, corrupt)
    finally:
        work_free(wk)
    return _REASONS.get(status)


def bits_to_cells(int n, int m, index):
    return [(index >> i) & 1 for i in range(n * m)]


def sweep(int n, int m, long long lo, long long hi, bint corrupt=False):
    if n * m > 62:
        raise ValueError("exhaustive sweeps need n*m <= 62")
    cdef Work *wk = work_new(n, m)
    cdef char *cells = <char *> malloc(n * m)
    cdef long long index
    cdef int i, status, size = n * m
    failures = []
    try:
        for index in range(lo, hi):
            for i in range(size):
                cells[i] = (index >> i) & 1
            status = check_c(wk, cells, corrupt)
            if status != OK:
                failures.append((index, _REASONS[status]))
    finally:
        free(cells)
        work_free(wk)
    return failures
