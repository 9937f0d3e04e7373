"""Immutable bitset-backed simple graphs with graph6 interchange.

Adjacency is stored as one integer bitmask per vertex, so degree and
common-neighbourhood queries reduce to single bitwise operations.  All
operations return new graphs; nothing mutates in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..order-1.

    ``rows[v]`` has bit u set exactly when {u, v} is an edge.  The matrix
    must be symmetric and loop-free; this is validated on construction.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if n < 0:
            raise ValueError("order must be nonnegative")
        if len(self.rows) != n:
            raise ValueError("rows length must equal order")
        cols = [0] * n
        for v, row in enumerate(self.rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {v} references vertices outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            w = row
            while w:
                u = (w & -w).bit_length() - 1
                cols[u] |= 1 << v
                w &= w - 1
        if tuple(cols) != self.rows:
            raise ValueError("adjacency is not symmetric")

    # -- queries ----------------------------------------------------------

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.order):
            w = self.rows[v] >> (v + 1) << (v + 1)
            while w:
                u = (w & -w).bit_length() - 1
                yield (v, u)
                w &= w - 1

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside 0..{order - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))


# -- basic families --------------------------------------------------------


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("order must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(m: int) -> Graph:
    """Star of order m: vertex 0 joined to the m-1 others."""
    if m < 2:
        raise ValueError("star needs at least 2 vertices")
    return Graph.from_edges(m, [(0, i) for i in range(1, m)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    shift = 0
    for g in graphs:
        rows.extend(r << shift for r in g.rows)
        shift += g.order
    return Graph(shift, tuple(rows))


# -- pure operations --------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Append a false twin of v: same open neighbourhood, not adjacent to v."""
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
    n = g.order
    twin_row = g.rows[v]
    rows = [r | (((twin_row >> u) & 1) << n) for u, r in enumerate(g.rows)]
    rows.append(twin_row)
    return Graph(n + 1, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled by ascending original index."""
    members = sorted(set(vertices))
    for v in members:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
    pos = {v: i for i, v in enumerate(members)}
    rows = [0] * len(members)
    for v in members:
        w = g.rows[v]
        while w:
            u = (w & -w).bit_length() - 1
            if u in pos:
                rows[pos[v]] |= 1 << pos[u]
            w &= w - 1
    return Graph(len(members), tuple(rows))


def relabeled(g: Graph, labeling: Iterable[int]) -> Graph:
    """Relabel so that new vertex i is old vertex labeling[i]."""
    lab = list(labeling)
    if sorted(lab) != list(range(g.order)):
        raise ValueError("labeling must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(lab)}
    rows = [0] * g.order
    for i, v in enumerate(lab):
        w = g.rows[v]
        while w:
            u = (w & -w).bit_length() - 1
            rows[i] |= 1 << pos[u]
            w &= w - 1
    return Graph(g.order, tuple(rows))


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise ValueError("degree of the empty graph is undefined")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.order == 0:
        raise ValueError("degree of the empty graph is undefined")
    return max(g.degrees())


def degree_into_set(g: Graph, v: int, members: Iterable[int]) -> int:
    """Number of neighbours of v inside ``members`` (v itself is ignored)."""
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
    mask = 0
    for u in members:
        if not 0 <= u < g.order:
            raise ValueError(f"vertex {u} outside 0..{g.order - 1}")
        mask |= 1 << u
    return (g.rows[v] & mask).bit_count()


# -- exact independence -----------------------------------------------------


def _max_independent_size(rows: tuple[int, ...], pool: int) -> int:
    """Largest independent set inside the bitmask ``pool``; exact branch and bound."""
    best = 0

    def dfs(p: int, size: int) -> None:
        nonlocal best
        if size + p.bit_count() <= best:
            return
        if p == 0:
            best = size
            return
        # branch on the most constrained vertex left in the pool
        v, vdeg = -1, -1
        w = p
        while w:
            u = (w & -w).bit_length() - 1
            d = (rows[u] & p).bit_count()
            if d > vdeg:
                v, vdeg = u, d
            w &= w - 1
        if vdeg == 0:
            best = size + p.bit_count()
            return
        dfs(p & ~rows[v] & ~(1 << v), size + 1)
        dfs(p & ~(1 << v), size)

    dfs(pool, 0)
    return best


def independence_number(g: Graph) -> int:
    return _max_independent_size(g.rows, (1 << g.order) - 1)


def alpha_with_vertex(g: Graph, v: int) -> int:
    """Largest independent set forced to contain v."""
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
    pool = ((1 << g.order) - 1) & ~g.rows[v] & ~(1 << v)
    return 1 + _max_independent_size(g.rows, pool)


def independent_set_with(g: Graph, v: int, size: int) -> list[int] | None:
    """Some independent set of exactly ``size`` vertices containing v, or None.

    Same branch-and-bound as the counting search, but carries the members so
    callers get a witness.  Far faster than generic pattern matching when the
    target pattern has no edges.
    """
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
    if size < 1:
        raise ValueError("size must be positive")
    if size > g.order:
        return None
    rows = g.rows
    chosen = [v]

    def dfs(p: int) -> bool:
        if len(chosen) == size:
            return True
        need = size - len(chosen)
        if p.bit_count() < need:
            return False
        u, udeg = -1, -1
        w = p
        while w:
            c = (w & -w).bit_length() - 1
            d = (rows[c] & p).bit_count()
            if d > udeg:
                u, udeg = c, d
            w &= w - 1
        if udeg == 0:
            w = p
            while w and len(chosen) < size:
                chosen.append((w & -w).bit_length() - 1)
                w &= w - 1
            return True
        chosen.append(u)
        if dfs(p & ~rows[u] & ~(1 << u)):
            return True
        chosen.pop()
        return dfs(p & ~(1 << u))

    pool = ((1 << g.order) - 1) & ~rows[v] & ~(1 << v)
    if dfs(pool):
        return sorted(chosen)
    return None


# -- structure detectors -----------------------------------------------------


def is_empty_graph(g: Graph) -> bool:
    return all(r == 0 for r in g.rows)


def is_complete_graph(g: Graph) -> bool:
    return all(r.bit_count() == g.order - 1 for r in g.rows)


def star_center(g: Graph) -> int | None:
    """Index of a star center if g is a star of order >= 2, else None."""
    if g.order < 2 or g.edge_count() != g.order - 1:
        return None
    for v in range(g.order):
        if g.degree(v) == g.order - 1:
            return v
    return None


# -- graph6 ------------------------------------------------------------------

_G6_MAX_ORDER = 258047  # largest order expressible with the three-byte size prefix


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > _G6_MAX_ORDER:
        raise ValueError(f"graph6 supports order at most {_G6_MAX_ORDER}")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    chars = []
    acc, nbits = 0, 0
    for v in range(1, n):
        col = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(63 + acc))
                acc, nbits = 0, 0
    if nbits:
        chars.append(chr(63 + (acc << (6 - nbits))))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    data = s.encode("ascii", errors="replace")
    pos = 0

    def take(why: str) -> int:
        nonlocal pos
        if pos >= len(data):
            raise Graph6Error(f"truncated graph6 string: missing {why}", pos)
        b = data[pos]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte out of graph6 range 63..126 in {why}", pos)
        pos += 1
        return b - 63

    first = take("size header")
    if first == 63:  # '~': multi-byte order prefix
        if pos < len(data) and data[pos] == 126:
            raise Graph6Error("order beyond the three-byte size prefix is unsupported", pos)
        n = 0
        for _ in range(3):
            n = (n << 6) | take("size header")
    else:
        n = first
    need = (n * (n - 1) // 2 + 5) // 6
    rows = [0] * n
    bit_index = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for _ in range(need):
        at = pos
        value = take("edge data")
        for k in range(5, -1, -1):
            bit = (value >> k) & 1
            if bit_index < len(pairs):
                if bit:
                    u, v = pairs[bit_index]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            elif bit:
                raise Graph6Error("nonzero padding bits", at)
            bit_index += 1
    if pos != len(data):
        raise Graph6Error("trailing garbage after graph6 data", pos)
    return Graph(n, tuple(rows))
