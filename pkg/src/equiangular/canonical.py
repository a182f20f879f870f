"""Canonical forms for small graphs and enumeration up to isomorphism.

The canonical form is the lexicographically smallest adjacency code over all
vertex orders reachable by colour refinement plus individualisation. Branches
are pruned by orbits of automorphisms discovered on the way (two leaves with
equal codes give an automorphism). Adequate for the orders used here (n <= 10),
not a general isomorphism engine.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, _bits


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition, label-independently."""
    n = len(adj)
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for k in keys:
                new_cells.append([v for v in cell if sig[v] == k])
        cells = new_cells
        if not changed or len(cells) == n:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for i in range(1, len(order)):
        row = adj[order[i]]
        for j in range(i):
            code = code << 1 | (row >> order[j] & 1)
    return code


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self) -> tuple[int, list[int]]:
        degs = [row.bit_count() for row in self.adj]
        cells = [[v for v in range(self.n) if degs[v] == d] for d in sorted(set(degs))]
        self._visit(_refine(self.adj, cells), [])
        return self.best_code, self.best_order

    def _visit(self, cells: list[list[int]], fixed: list[int]) -> None:
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            code = _code(self.adj, order)
            if self.best_code is None or code < self.best_code:
                self.best_code, self.best_order = code, order
            elif code == self.best_code:
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.automorphisms.append(perm)
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        explored: list[int] = []
        for v in sorted(target):
            if explored and self._same_orbit(v, explored, fixed):
                continue
            explored.append(v)
            split = cells[:idx] + [[v], [u for u in target if u != v]] + cells[idx + 1:]
            self._visit(_refine(self.adj, split), fixed + [v])

    def _same_orbit(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        gens = [p for p in self.automorphisms if all(p[w] == w for w in fixed)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in explored)


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, order)``: isomorphic graphs share ``code``.

    ``order[i]`` is the vertex of ``g`` placed at canonical position ``i``.
    """
    if g.order == 1:
        return 0, (0,)
    code, order = _Search(g.adj).run()
    return code, tuple(order)


def canonical_code(g: Graph) -> int:
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_form(g)
    pos = [0] * g.order
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and sorted(g.degrees()) == sorted(h.degrees()) \
        and canonical_code(g) == canonical_code(h)


@lru_cache(maxsize=None)
def graphs_up_to_isomorphism(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by adding a vertex, with every possible neighbourhood, to each class
    on ``n - 1`` vertices. Ordered by canonical code.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (Graph(1, [0]),)
    found: dict[int, Graph] = {}
    for h in graphs_up_to_isomorphism(n - 1):
        for nbhd in range(1 << (n - 1)):
            adj = list(h.adj) + [nbhd]
            for u in _bits(nbhd):
                adj[u] |= 1 << (n - 1)
            g = Graph._unchecked(n, adj)
            code, _ = canonical_form(g)
            if code not in found:
                found[code] = canonical_graph(g)
    return tuple(found[c] for c in sorted(found))


def connected_graphs_up_to_isomorphism(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in graphs_up_to_isomorphism(n) if g.is_connected())
