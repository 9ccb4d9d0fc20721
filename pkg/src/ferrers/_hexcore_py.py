"""Pure-Python hex kernels; ``_hexcore.pyx`` mirrors this file line for line.

Boards live on an extended (n+2) x (m+2) grid, flat index ``r * (m+2) + c``.
Row 0 and row n+1 are the Black borders, column 0 and column m+1 the White
borders; the four corner cells are marked ``CORNER``. ``cells`` arguments are
row-major sequences of n*m values, 1 for Black and 0 for White.
"""

WHITE, BLACK, CORNER = 0, 1, -1

OK, REPEATED_VERTEX, STEP_BOUND, BAD_EXIT = 0, 1, 2, 3


def edge_bound(n, m):
    """Number of distinct hexagon sides belonging to board cells."""
    shared = n * (m - 1) + (n - 1) * m + (n - 1) * (m - 1)
    return 6 * n * m - shared


def extend(n, m, cells):
    w = m + 2
    ext = [0] * ((n + 2) * w)
    for c in range(1, m + 1):
        ext[c] = BLACK
        ext[(n + 1) * w + c] = BLACK
    for r in range(1, n + 1):
        ext[r * w] = WHITE
        ext[r * w + m + 1] = WHITE
        for c in range(1, m + 1):
            ext[r * w + c] = BLACK if cells[(r - 1) * m + (c - 1)] else WHITE
    for idx in (0, m + 1, (n + 1) * w, (n + 1) * w + m + 1):
        ext[idx] = CORNER
    return ext


def trace(n, m, cells):
    """Walk hexagon sides keeping Black on the left and White on the right.

    Returns ``(status, winner, vertices, chain)``. ``vertices`` lists the
    visited corners as sorted triples of the extended-grid cells meeting
    there; ``chain`` holds the extended indices of the winner's cells along
    the path, from one of its sides to the other.
    """
    w = m + 2
    ext = extend(n, m, cells)
    deltas = (1, 1 - w, -w, -1, w - 1, w)
    left = (n + 1) * w + m  # south border, next to the south-east junction
    right = n * w + m + 1  # east border
    lefts, rights = [left], [right]
    vertices = []
    seen = set()
    bound = edge_bound(n, m)
    status = OK
    while True:
        i = deltas.index(right - left)
        ahead = left + deltas[(i + 1) % 6]
        v = tuple(sorted((left, right, ahead)))
        if v in seen:
            status = REPEATED_VERTEX
            break
        seen.add(v)
        vertices.append(v)
        if len(vertices) - 1 > bound:
            status = STEP_BOUND
            break
        colour = ext[ahead]
        if colour == CORNER:
            break
        if colour == BLACK:
            left = ahead  # turn right
            lefts.append(left)
        else:
            right = ahead  # turn left
            rights.append(right)

    if status != OK:
        return status, -1, vertices, []
    if ahead == m + 1:  # north-east junction
        winner, seq = BLACK, lefts
        start = [k for k, x in enumerate(seq) if x // w == n + 1][-1]
        stop = [k for k, x in enumerate(seq) if x // w == 0]
    elif ahead == (n + 1) * w:  # south-west junction
        winner, seq = WHITE, rights
        start = [k for k, x in enumerate(seq) if x % w == m + 1][-1]
        stop = [k for k, x in enumerate(seq) if x % w == 0]
    else:
        return BAD_EXIT, -1, vertices, []
    end = next((k for k in stop if k > start), len(seq))
    chain = []
    for x in seq[start + 1 : end]:
        if x not in chain:
            chain.append(x)
    return OK, winner, vertices, chain


_OFFSETS = ((0, 1), (0, -1), (1, 0), (-1, 0), (-1, 1), (1, -1))


def connected(n, m, cells, colour):
    """Breadth-first search over board cells of one colour.

    Black must join row 1 to row n, White column 1 to column m.
    """
    def col(r, c):
        return 1 if cells[(r - 1) * m + (c - 1)] else 0

    if colour == BLACK:
        frontier = [(1, c) for c in range(1, m + 1) if col(1, c) == colour]
    else:
        frontier = [(r, 1) for r in range(1, n + 1) if col(r, 1) == colour]
    seen = set(frontier)
    while frontier:
        r, c = frontier.pop()
        if (colour == BLACK and r == n) or (colour == WHITE and c == m):
            return True
        for dr, dc in _OFFSETS:
            rr, cc = r + dr, c + dc
            if 1 <= rr <= n and 1 <= cc <= m and (rr, cc) not in seen and col(rr, cc) == colour:
                seen.add((rr, cc))
                frontier.append((rr, cc))
    return False


def chain_valid(n, m, cells, chain, colour):
    """Check a claimed winning chain of (row, col) cells without trusting the tracer."""
    if not chain:
        return False
    members = set(chain)
    for r, c in members:
        if not (1 <= r <= n and 1 <= c <= m):
            return False
        if (1 if cells[(r - 1) * m + (c - 1)] else 0) != colour:
            return False
    if colour == BLACK:
        starts = [x for x in members if x[0] == 1]
        goal = lambda x: x[0] == n
    else:
        starts = [x for x in members if x[1] == 1]
        goal = lambda x: x[1] == m
    seen = set(starts)
    frontier = list(starts)
    while frontier:
        r, c = frontier.pop()
        if goal((r, c)):
            return True
        for dr, dc in _OFFSETS:
            nb = (r + dr, c + dc)
            if nb in members and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return False


def check(n, m, cells, corrupt=False):
    """Run the tracer and every independent check; return None or a failure reason."""
    status, winner, vertices, chain = trace(n, m, cells)
    if status == REPEATED_VERTEX:
        return "path revisits a vertex"
    if status == STEP_BOUND:
        return "path exceeds the edge bound"
    if status == BAD_EXIT:
        return "path left through an unexpected corner"
    w = m + 2
    rc = [(x // w, x % w) for x in chain]
    if not chain_valid(n, m, cells, rc, winner):
        return "witness chain does not validate"
    black = connected(n, m, cells, BLACK)
    white = connected(n, m, cells, WHITE)
    if corrupt:
        black = white = False
    if not (black or white):
        return "oracle finds no winner"
    if not (black if winner == BLACK else white):
        return "oracle disagrees with traced winner"
    return None


def bits_to_cells(n, m, index):
    return [(index >> i) & 1 for i in range(n * m)]


def sweep(n, m, lo, hi, corrupt=False):
    """Check colourings ``lo <= index < hi``; cell i is Black iff bit i is set."""
    failures = []
    for index in range(lo, hi):
        reason = check(n, m, bits_to_cells(n, m, index), corrupt)
        if reason is not None:
            failures.append((index, reason))
    return failures
