"""Bitmask-backed undirected simple graphs, graph6 / edge-list I/O, enumeration.

Vertices are integers ``0..n-1`` and every vertex set is an integer bitmask,
so the set algebra the game solver leans on (union, complement, popcount)
stays single-word for every graph this package targets (order <= 64).
Graphs are immutable: the mutating operations return new instances, which
makes sharing across worker processes and transposition tables safe.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

MAX_VERTICES = 64

#: Exhaustive labeled-graph enumeration refuses larger orders (2^21 graphs at 7).
ENUM_GRAPH_LIMIT = 7

#: Labeled-tree enumeration refuses larger orders (8^6 trees at 8).
ENUM_TREE_LIMIT = 8


def mask_from(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids set in ``mask``, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for order-{n} graph")


def _check_edge(n: int, u: int, v: int) -> None:
    _check_vertex(n, u)
    _check_vertex(n, v)
    if u == v:
        raise ValueError(f"self-loop {u}-{v} rejected")


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighborhood N(v) as a bitmask, ``closed[v]`` the
    closed neighborhood N[v], and ``full_mask`` the all-vertices mask.
    """

    __slots__ = ("n", "adj", "closed", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"graph order must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise ValueError(f"order {n} exceeds the {MAX_VERTICES}-vertex limit")
        adj = [0] * n
        for u, v in edges:
            _check_edge(n, u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        self.full_mask = (1 << n) - 1

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g.closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        g.full_mask = (1 << n) - 1
        return g

    # -- queries ---------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ordered pairs (u, v) with u < v, lexicographically."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for v in bits(rest):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        _check_edge(self.n, u, v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self.n, v)
        return tuple(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        """N[v] = N(v) plus v itself, as a bitmask."""
        _check_vertex(self.n, v)
        return self.closed[v]

    def is_connected(self) -> bool:
        """True iff the graph has one component; orders 0 and 1 count."""
        if self.n <= 1:
            return True
        adj = self.adj
        reached = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~reached
            reached |= frontier
        return reached == self.full_mask

    def check_valid(self) -> None:
        """Raise ValueError if adjacency symmetry or loop-freeness is broken."""
        for u, a in enumerate(self.adj):
            if a >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            if a & ~self.full_mask:
                raise ValueError(f"adjacency of {u} references vertices >= {self.n}")
            for v in bits(a):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric edge {u}-{v}")

    # -- mutation (returns new graphs) ------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """Graph with edge u-v added; adding an existing edge is a no-op."""
        _check_edge(self.n, u, v)
        if self.adj[u] >> v & 1:
            return self
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_adj(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Graph with edge u-v removed; the edge must be present."""
        _check_edge(self.n, u, v)
        if not self.adj[u] >> v & 1:
            raise ValueError(f"edge {u}-{v} not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._from_adj(self.n, tuple(adj))

    def remove_vertex(self, v: int) -> tuple["Graph", dict[int, int]]:
        """Graph with v removed plus the old-id -> new-id relabeling.

        Vertices above v shift down by one so the bitmasks stay dense.
        """
        _check_vertex(self.n, v)
        low = (1 << v) - 1

        def squeeze(mask: int) -> int:
            return (mask & low) | (mask >> (v + 1)) << v

        adj = tuple(
            squeeze(self.adj[u]) for u in range(self.n) if u != v
        )
        relabel = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        return Graph._from_adj(self.n - 1, adj), relabel

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# -- graph6 ---------------------------------------------------------------
#
# Short form only: one header byte n+63 (n <= 62), then the upper-triangle
# adjacency bits in column order x01, x02, x12, x03, x13, x23, ... packed
# big-endian into 6-bit groups, each offset by 63 into printable ASCII.


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError(f"graph6 short form supports order <= 62, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(data: str | bytes) -> Graph:
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ValueError(f"graph6 data is not ASCII: {exc}") from None
    data = data.rstrip("\r\n")
    if not data:
        raise ValueError("empty graph6 string")
    head = ord(data[0])
    if head == 126:
        raise ValueError("long-form graph6 (order > 62) not supported")
    if not 63 <= head <= 125:
        raise ValueError(f"malformed graph6 header byte {head}")
    n = head - 63
    payload = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(payload) < nbytes:
        raise ValueError(
            f"truncated graph6 payload: need {nbytes} bytes for order {n}, got {len(payload)}"
        )
    if len(payload) > nbytes:
        raise ValueError(f"trailing data after graph6 payload for order {n}")
    adj = [0] * n
    idx = 0
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for ch in payload:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ValueError(f"graph6 byte {ord(ch)} out of range [63, 126]")
        for k in range(5, -1, -1):
            if idx >= nbits:
                break
            if val >> k & 1:
                i, j = next(pairs)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            else:
                next(pairs)
            idx += 1
    return Graph._from_adj(n, tuple(adj))


# -- plain-text edge list ---------------------------------------------------
#
# First line "n m", then m lines "u v" with 0-based endpoints. Blank lines
# and lines starting with "#" are ignored.


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ValueError("edge list has no header line")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: header must be 'n m', got {header!r}") from None
    if m != len(rows) - 1:
        raise ValueError(f"header declares {m} edges but {len(rows) - 1} edge lines follow")
    edges = []
    seen = set()
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge line must be 'u v', got {line!r}") from None
        _check_edge(n, u, v)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {u}-{v}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


# -- exhaustive enumeration --------------------------------------------------


def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, in ascending edge-mask order.

    Bit i of the mask is pair i of ``itertools.combinations(range(n), 2)``.
    """
    if not 0 <= n <= ENUM_GRAPH_LIMIT:
        raise ValueError(f"labeled-graph enumeration limited to n <= {ENUM_GRAPH_LIMIT}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = _graph_from_edge_mask(n, pairs, mask)
        if connected_only and not g.is_connected():
            continue
        yield g


def _graph_from_edge_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        mask ^= low
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._from_adj(n, tuple(adj))


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices via Pruefer decoding."""
    if not 1 <= n <= ENUM_TREE_LIMIT:
        raise ValueError(f"labeled-tree enumeration limited to 1 <= n <= {ENUM_TREE_LIMIT}")
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq, n)


def tree_from_pruefer(seq: tuple[int, ...], n: int) -> Graph:
    """Decode a Pruefer sequence (length n-2, entries in [0, n)) to its tree."""
    if len(seq) != n - 2:
        raise ValueError(f"Pruefer sequence for order {n} must have length {n - 2}")
    degree = [1] * n
    for s in seq:
        _check_vertex(n, s)
        degree[s] += 1
    adj = [0] * n
    for s in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                adj[leaf] |= 1 << s
                adj[s] |= 1 << leaf
                degree[leaf] -= 1
                degree[s] -= 1
                break
    u, v = (w for w in range(n) if degree[w] == 1)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._from_adj(n, tuple(adj))
