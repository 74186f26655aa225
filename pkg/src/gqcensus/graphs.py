"""Simple undirected graphs with bitset adjacency, metrics and text formats."""

from __future__ import annotations

import json
from typing import Any, Iterable, Iterator, Sequence

INF = 0xFFFF  # distance sentinel for disconnected pairs


class GraphFormatError(ValueError):
    """Malformed graph6/sparse6/JSON input; carries a byte position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at byte {position})")
        self.position = position


class Graph:
    """Immutable simple undirected graph.

    Adjacency is a tuple of int bitsets (row v has bit u set iff v~u).
    Optional vertex labels ride alongside and are ignored by all
    isomorphism-invariant algorithms.
    """

    __slots__ = ("n", "rows", "labels", "_dist", "_canon")

    def __init__(self, n: int, rows: Sequence[int], labels: Sequence[Any] | None = None):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        if len(rows) != n:
            raise ValueError("adjacency row count mismatch")
        for v, row in enumerate(rows):
            if row >> n:
                raise ValueError("adjacency bits out of range")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in range(v + 1, n):
                if ((rows[v] >> u) & 1) != ((rows[u] >> v) & 1):
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "_dist", None)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- construction --------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[Any] | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                continue  # simple-graph convention: drop loops
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows, labels)

    # -- basic queries --------------------------------------------------

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.rows[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.rows[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    yield (v, u)
                row >>= 1
                u += 1

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def is_regular(self) -> bool:
        return self.n == 0 or len({self.degree(v) for v in range(self.n)}) == 1

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.rows[v] == full ^ (1 << v) for v in range(self.n))

    # -- metrics ----------------------------------------------------------

    def bfs_distances(self, source: int) -> list[int]:
        dist = [INF] * self.n
        dist[source] = 0
        seen = 1 << source
        frontier = 1 << source
        d = 0
        while frontier:
            nxt = 0
            row = frontier
            while row:
                low = row & -row
                nxt |= self.rows[low.bit_length() - 1]
                row ^= low
            nxt &= ~seen
            d += 1
            row = nxt
            while row:
                low = row & -row
                dist[low.bit_length() - 1] = d
                row ^= low
            seen |= nxt
            frontier = nxt
        return dist

    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs shortest path matrix (cached)."""
        if self._dist is None:
            mat = tuple(tuple(self.bfs_distances(v)) for v in range(self.n))
            object.__setattr__(self, "_dist", mat)
        return self._dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return INF not in self.distances()[0]

    def diameter(self) -> int:
        """Maximum distance; INF when disconnected."""
        if self.n <= 1:
            return 0
        best = 0
        for row in self.distances():
            m = max(row)
            if m == INF:
                return INF
            best = max(best, m)
        return best

    def girth(self) -> int:
        """Length of the shortest cycle; INF for forests."""
        best = INF
        for src in range(self.n):
            dist = [INF] * self.n
            parent = [-1] * self.n
            dist[src] = 0
            queue = [src]
            qi = 0
            while qi < len(queue):
                v = queue[qi]
                qi += 1
                if 2 * dist[v] >= best - 1:
                    break
                for u in self.neighbors(v):
                    if dist[u] == INF:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        queue.append(u)
                    elif u != parent[v] and parent[u] != v:
                        best = min(best, dist[v] + dist[u] + 1)
        return best

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """A 2-coloring (per connected component) or None if odd cycle."""
        color = [-1] * self.n
        for src in range(self.n):
            if color[src] != -1:
                continue
            color[src] = 0
            queue = [src]
            qi = 0
            while qi < len(queue):
                v = queue[qi]
                qi += 1
                for u in self.neighbors(v):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return None
        side0 = tuple(v for v in range(self.n) if color[v] == 0)
        side1 = tuple(v for v in range(self.n) if color[v] == 1)
        return side0, side1

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [full ^ self.rows[v] ^ (1 << v) for v in range(self.n)]
        return Graph(self.n, rows, self.labels)

    def bipartite_complement(self, bipartition: tuple[Sequence[int], Sequence[int]]
                             ) -> "Graph":
        """Toggle edges across the given bipartition only."""
        side0, side1 = bipartition
        if sorted(list(side0) + list(side1)) != list(range(self.n)):
            raise ValueError("bipartition must cover every vertex exactly once")
        m0 = sum(1 << v for v in side0)
        m1 = sum(1 << v for v in side1)
        for v in side0:
            if self.rows[v] & m0:
                raise ValueError("edge inside a bipartition side")
        rows = []
        for v in range(self.n):
            other = m1 if v in set(side0) else m0
            rows.append(self.rows[v] ^ other)
        return Graph(self.n, rows, self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            adj = self.rows[v]
            while adj:
                low = adj & -adj
                row |= 1 << perm[low.bit_length() - 1]
                adj ^= low
            rows[perm[v]] = row
        labels = None
        if self.labels is not None:
            labels = [None] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
        return Graph(self.n, rows, labels)

    def disjoint_union(self, other: "Graph") -> "Graph":
        rows = list(self.rows) + [r << self.n for r in other.rows]
        return Graph(self.n + other.n, rows)

    # -- interchange -------------------------------------------------------

    def to_json(self) -> str:
        adj = [sorted(self.neighbors(v)) for v in range(self.n)]
        payload: dict[str, Any] = {"n": self.n, "adj": adj}
        if self.labels is not None:
            payload["labels"] = [str(x) for x in self.labels]
        return json.dumps(payload, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Graph":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"invalid JSON: {e.msg}", e.pos) from e
        if not isinstance(payload, dict) or "n" not in payload or "adj" not in payload:
            raise GraphFormatError("JSON graph needs 'n' and 'adj' keys")
        n = payload["n"]
        edges = [(v, u) for v, nbrs in enumerate(payload["adj"]) for u in nbrs]
        return Graph.from_edges(n, edges, payload.get("labels"))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- graph6 / sparse6 ---------------------------------------------------------

def _g6_size_bytes(n: int) -> bytes:
    if n < 0 or n > 68719476735:
        raise ValueError("vertex count out of graph6 range")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)])


def _g6_read_size(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise GraphFormatError("empty graph6 input", pos)
    c = data[pos]
    if c != 126:
        if not 63 <= c <= 126:
            raise GraphFormatError("invalid graph6 size byte", pos)
        return c - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk = data[pos + 2:pos + 8]
        if len(chunk) != 6:
            raise GraphFormatError("truncated graph6 size", pos)
        n = 0
        for c in chunk:
            n = (n << 6) | (c - 63)
        return n, pos + 8
    chunk = data[pos + 1:pos + 4]
    if len(chunk) != 3:
        raise GraphFormatError("truncated graph6 size", pos)
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, pos + 4


def encode_graph6(g: Graph) -> str:
    """Standard graph6 line (no header, no trailing newline)."""
    bits = []
    for u in range(1, g.n):
        for v in range(u):
            bits.append(1 if g.has_edge(v, u) else 0)
    out = bytearray(_g6_size_bytes(g.n))
    for i in range(0, len(bits), 6):
        chunk = bits[i:i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def encode_sparse6(g: Graph) -> str:
    """Standard sparse6 line (':' prefix)."""
    n = g.n
    k = max(1, (n - 1).bit_length()) if n > 1 else 1
    bits: list[int] = []

    def push(val: int, width: int) -> None:
        for s in range(width - 1, -1, -1):
            bits.append((val >> s) & 1)

    cur = 0
    for v, u in sorted((max(a, b), min(a, b)) for a, b in g.edges()):
        if v == cur:
            push(0, 1)
            push(u, k)
        elif v == cur + 1:
            cur = v
            push(1, 1)
            push(u, k)
        else:
            cur = v
            push(1, 1)
            push(v, k)
            push(0, 1)
            push(u, k)
    # pad with 1s; when n = 2^k a long pad starting at a small cur could be
    # misread as an edge group by other decoders, so lead with a 0 bit then
    rem = (-len(bits)) % 6
    if rem:
        if n == (1 << k) and rem > k and cur < n - 1:
            bits.extend([0] + [1] * (rem - 1))
        else:
            bits.extend([1] * rem)
    out = bytearray(b":" + _g6_size_bytes(n))
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def _decode_sparse6(data: bytes) -> Graph:
    n, pos = _g6_read_size(data, 1)
    k = max(1, (n - 1).bit_length()) if n > 1 else 1
    bits: list[int] = []
    for i in range(pos, len(data)):
        c = data[i]
        if not 63 <= c <= 126:
            raise GraphFormatError("invalid sparse6 byte", i)
        for s in range(5, -1, -1):
            bits.append((c - 63 >> s) & 1)
    edges = []
    cur = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        i += 1
        x = 0
        for _ in range(k):
            x = (x << 1) | bits[i]
            i += 1
        if b:
            cur += 1
        if cur >= n or x > cur:
            if x >= n:
                break
            cur = x
        elif x == cur:
            pass  # loop: ignored (simple graphs)
        else:
            edges.append((x, cur))
    return Graph.from_edges(n, edges)


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 or sparse6 line; headers tolerated."""
    s = text.strip()
    for header in (">>graph6<<", ">>sparse6<<"):
        if s.startswith(header):
            s = s[len(header):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise GraphFormatError("empty input", 0)
    if data[0:1] == b":":
        return _decode_sparse6(data)
    n, pos = _g6_read_size(data, 0)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {need}", pos)
    bits = []
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise GraphFormatError("invalid graph6 byte", pos + i)
        for s_ in range(5, -1, -1):
            bits.append((c - 63 >> s_) & 1)
    edges = []
    idx = 0
    for u in range(1, n):
        for v in range(u):
            if bits[idx]:
                edges.append((v, u))
            idx += 1
    return Graph.from_edges(n, edges)


def encode_auto(g: Graph) -> str:
    """graph6, or sparse6 when the graph is large and sparse enough."""
    if g.n > 62:
        s6 = encode_sparse6(g)
        g6 = encode_graph6(g)
        if len(s6) < len(g6):
            return s6
    return encode_graph6(g)
