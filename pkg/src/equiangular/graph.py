"""Simple undirected graphs with bitset adjacency, named generators and graph6 I/O."""

from __future__ import annotations

import itertools
import random
from collections import deque
from typing import Iterable, Sequence

from .errors import EmptyEdgeSet, InvalidParameters, MalformedGraph6

MAX_ORDER = 1 << 16


class Graph:
    """Immutable simple graph on vertices ``0..order-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u ~ v``.
    """

    __slots__ = ("order", "adj")

    def __init__(self, order: int, adj: Sequence[int]):
        if not 1 <= order <= MAX_ORDER:
            raise InvalidParameters(f"order must be in [1, {MAX_ORDER}], got {order}")
        adj = tuple(adj)
        if len(adj) != order:
            raise InvalidParameters("adjacency length does not match order")
        full = (1 << order) - 1
        for v, row in enumerate(adj):
            if row >> v & 1:
                raise InvalidParameters(f"loop at vertex {v}")
            if row & ~full:
                raise InvalidParameters(f"vertex {v} has a neighbour out of range")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise InvalidParameters(f"asymmetric adjacency between {v} and {u}")
        self.order = order
        self.adj = adj

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise InvalidParameters(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParameters(f"edge ({u}, {v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    @classmethod
    def _unchecked(cls, order: int, adj: Sequence[int]) -> Graph:
        g = object.__new__(cls)
        g.order = order
        g.adj = tuple(adj)
        return g

    @classmethod
    def from_adjacency_matrix(cls, m) -> Graph:
        n = len(m)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if m[i][j]]
        for i in range(n):
            for j in range(n):
                if bool(m[i][j]) != bool(m[j][i]) or (i == j and m[i][j]):
                    raise InvalidParameters("adjacency matrix must be symmetric with zero diagonal")
        return cls.from_edges(n, edges)

    # -- queries -------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def number_of_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_regular(self, k: int | None = None) -> bool:
        d = self.degrees()
        return all(x == d[0] for x in d) and (k is None or d[0] == k)

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.order)] for row in self.adj]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.order):
            if seen >> s & 1:
                continue
            comp_mask = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp_mask
                comp_mask |= nxt
            seen |= comp_mask
            comps.append(list(_bits(comp_mask)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph._unchecked(len(vertices), adj)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise InvalidParameters("relabelling must be a permutation")
        adj = [0] * self.order
        for v in range(self.order):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph._unchecked(self.order, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return hash((self.order, self.adj))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.number_of_edges()}, g6={graph6_encode(self)!r})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- transformations --------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph._unchecked(g.order, [(~row & full) & ~(1 << v) for v, row in enumerate(g.adj)])


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex i is the i-th edge of ``g`` in lexicographic order."""
    edges = g.edges()
    if not edges:
        raise EmptyEdgeSet("line graph of a graph without edges")
    incident: list[int] = [0] * g.order
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph._unchecked(len(edges), adj)


def disjoint_union(g: Graph, t: int) -> Graph:
    """``t`` copies of ``g``; copy ``c`` occupies vertices ``c*n .. c*n+n-1``."""
    if t < 1:
        raise InvalidParameters("copy count t must be >= 1")
    n = g.order
    return Graph(n * t, [row << (c * n) for c in range(t) for row in g.adj])


def union(*graphs: Graph) -> Graph:
    adj = []
    offset = 0
    for h in graphs:
        adj.extend(row << offset for row in h.adj)
        offset += h.order
    return Graph(offset, adj)


# -- generators ------------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph._unchecked(n, [full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (P_n)."""
    if n < 1:
        raise InvalidParameters("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, connection_set: Iterable[int]) -> Graph:
    conn = {s % n for s in connection_set}
    if n < 1 or 0 in conn:
        raise InvalidParameters("circulant needs n >= 1 and a connection set avoiding 0")
    conn |= {(-s) % n for s in conn}
    return Graph.from_edges(n, [(i, (i + s) % n) for i in range(n) for s in conn if i < (i + s) % n])


def kneser(m: int, k: int) -> Graph:
    """Kneser graph K(m, k): k-subsets of range(m), adjacent when disjoint.

    Vertices are the subsets in ``itertools.combinations`` order.
    """
    if k < 1 or m < 2 * k:
        raise InvalidParameters("kneser(m, k) needs k >= 1 and m >= 2k")
    subsets = [frozenset(c) for c in itertools.combinations(range(m), k)]
    edges = [(i, j) for i, j in itertools.combinations(range(len(subsets)), 2)
             if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def random_regular(n: int, k: int, seed: int, *, connected: bool = False,
                   max_tries: int = 100_000) -> Graph:
    """Random k-regular graph from the pairing model, rejecting loops and multi-edges.

    Deterministic for a given seed. Not uniform for large k; cubic graphs are
    the intended use. With ``connected=True`` disconnected samples are also
    rejected (drawn from the same random stream).
    """
    if n < 1 or k < 0 or k >= n or (n * k) % 2:
        raise InvalidParameters(f"no simple {k}-regular graph on {n} vertices")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(k)]
    for _ in range(max_tries):
        rng.shuffle(points)
        adj = [0] * n
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or adj[u] >> v & 1:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if not ok:
            continue
        g = Graph._unchecked(n, adj)
        if connected and not g.is_connected():
            continue
        return g
    raise InvalidParameters(f"pairing model failed after {max_tries} tries")


# -- graph6 ----------------------------------------------------------------


def _n_encode(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """graph6 string (no ``>>graph6<<`` header, no newline)."""
    n = g.order
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6))
    return _n_encode(n) + body


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6("graph6 characters must lie in range 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedGraph6("truncated graph6 order field")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise MalformedGraph6("truncated graph6 order field")
        n = 0
        for v in vals[1:4]:
            n = n << 6 | v
        body = vals[4:]
    if n == 0:
        raise MalformedGraph6("graphs must have at least one vertex")
    if n > MAX_ORDER:
        raise MalformedGraph6(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph._unchecked(n, adj)


_NAMED = {
    "petersen": petersen,
}


def parse_graph(spec: str) -> Graph:
    """Build a graph from a short textual description.

    Accepted forms: ``petersen``, ``complete:N`` / ``KN``, ``path:N``, ``cycle:N``,
    ``empty:N``, ``star:K``, ``kneser:M:K``, ``circulant:N:s1,s2,..``,
    ``random-regular:N:K:SEED`` (``random-regular-connected:..`` rejects
    disconnected samples), ``union:T:SPEC`` and otherwise a graph6 string.
    """
    s = spec.strip()
    low = s.lower()
    try:
        if low in _NAMED:
            return _NAMED[low]()
        if low.startswith("k") and low[1:].isdigit():
            return complete(int(low[1:]))
        if ":" in s:
            head, *args = s.split(":")
            head = head.lower()
            if head == "union":
                return disjoint_union(parse_graph(":".join(args[1:])), int(args[0]))
            if head == "complete":
                return complete(int(args[0]))
            if head == "path":
                return path(int(args[0]))
            if head == "cycle":
                return cycle(int(args[0]))
            if head == "empty":
                return empty(int(args[0]))
            if head == "star":
                return star(int(args[0]))
            if head == "kneser":
                return kneser(int(args[0]), int(args[1]))
            if head == "circulant":
                return circulant(int(args[0]), [int(x) for x in args[1].split(",") if x])
            if head in ("random-regular", "random-regular-connected"):
                return random_regular(int(args[0]), int(args[1]), int(args[2]),
                                      connected=head.endswith("connected"))
            raise InvalidParameters(f"unknown graph family {head!r}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, InvalidParameters):
            raise
        raise InvalidParameters(f"bad graph description {spec!r}: {exc}") from exc
    return graph6_decode(s)
