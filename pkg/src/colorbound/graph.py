"""Immutable simple undirected graphs with bitset adjacency and graph6 I/O.

Vertices are always 0..n-1.  Adjacency is stored as one int bitmask per
vertex, which keeps every neighborhood query a couple of machine-word
operations for the n <= 64 range this library supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(ValueError):
    """Malformed graph6 text; message carries the byte offset."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]  # rows[u] = bitmask of neighbors of u

    def __post_init__(self) -> None:
        if not (0 <= self.n <= MAX_VERTICES):
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references vertices outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in range(u):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- queries ---------------------------------------------------------

    def check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise GraphError(f"vertex {u} out of range 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        self.check_vertex(u)
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> frozenset[int]:
        self.check_vertex(u)
        return frozenset(_bits(self.rows[u]))

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        self.check_vertex(u)
        return frozenset(_bits(self.rows[u] | (1 << u)))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for u in range(self.n) for v in _bits(self.rows[u] & ((1 << u) - 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    # -- derived graphs --------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full & ~row & ~(1 << u)) for u, row in enumerate(self.rows)))

    def induced(self, members: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `members`; also returns new-index -> old-vertex map."""
        order = sorted(set(members))
        for v in order:
            self.check_vertex(v)
        pos = {old: new for new, old in enumerate(order)}
        rows = []
        for old in order:
            row = 0
            for w in _bits(self.rows[old]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return Graph(len(order), tuple(rows)), tuple(order)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex u renamed to perm[u]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        rows = [0] * self.n
        for u, row in enumerate(self.rows):
            for v in _bits(row):
                rows[p[u]] |= 1 << p[v]
        return Graph(self.n, tuple(rows))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= self.rows[u]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in increasing order."""
    return _bits(mask)


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not (0 <= n <= MAX_VERTICES):
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# -- graph6 ------------------------------------------------------------------
#
# Standard graph6: order byte(s), then the upper triangle in column-major
# order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian 6 bits per byte,
# each byte offset by 63.  Orders 0..62 use a single byte; 63..64 use the
# '~' long form.


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    out = []
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = acc << 1 | (g.rows[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return head + "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error("empty graph6 line at byte 0")
    for off, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise Graph6Error(f"malformed graph6 character {ch!r} at byte {off}")
    if s[0] == "~":
        if len(s) < 4:
            raise Graph6Error(f"truncated graph6 order field at byte {len(s)}")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
        body_off = 4
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        body_off = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 order {n} exceeds supported maximum {MAX_VERTICES} at byte 0")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated graph6 bit stream at byte {body_off + len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing garbage at byte {body_off + need}")
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(body[idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    # padding bits must be zero for a bit-exact encoding
    if nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error(f"nonzero padding bits at byte {body_off + need - 1}")
    return Graph(n, tuple(rows))
