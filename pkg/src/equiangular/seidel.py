"""Seidel matrices, exact Seidel spectra, switching and switching-class keys.

Convention: S(G) = J - I - 2A(G), i.e. -1 on edges, +1 on non-edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterable

from .canonical import canonical_code
from .errors import OrderTooLarge
from .exact import (
    AlgebraicNumber,
    IntPoly,
    as_algebraic,
    charpoly,
    charpoly_mod2,
    root_multiplicity,
)
from .graph import Graph, _bits

SWITCHING_KEY_LIMIT = 10


@dataclass(frozen=True)
class SeidelMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __neg__(self):
        return SeidelMatrix(tuple(tuple(-v for v in row) for row in self.entries))

    def shifted(self, k: int) -> list[list[int]]:
        """``S + k*I`` as a plain integer matrix."""
        return [[v + (k if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(self.entries)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def seidel(g: Graph) -> SeidelMatrix:
    n = g.order
    return SeidelMatrix(tuple(
        tuple(0 if i == j else (-1 if g.adj[i] >> j & 1 else 1) for j in range(n))
        for i in range(n)
    ))


def _block(g: Graph) -> list[list[int]]:
    """-I - 2A(g): the diagonal block of S - J for one component."""
    n = g.order
    return [[-1 if i == j else (-2 if g.adj[i] >> j & 1 else 0) for j in range(n)] for i in range(n)]


@lru_cache(maxsize=4096)
def _component_polys(h: Graph) -> tuple[IntPoly, IntPoly]:
    return charpoly(_block(h)), charpoly(seidel(h))


def seidel_charpoly(g: Graph) -> list[tuple[IntPoly, int]]:
    """Factored det(xI - S(g)) as ``[(poly, exponent), ...]``.

    Write S = J + B with B block diagonal over the components H_k, blocks
    C_k = -I - 2A(H_k). The matrix determinant lemma gives
    det(xI - S) = det(xI - B) - j^T adj(xI - B) j, and per component
    j^T adj(xI - C_k) j = phi_{C_k} - phi_{S(H_k)}. Grouping components with
    equal polynomial pairs (t_k copies each):

        prod_k phi_k^(t_k - 1) * [prod_k phi_k - sum_k t_k w_k prod_{j!=k} phi_j]

    so large unions of small graphs never need a large determinant.
    """
    comps = g.components()
    if len(comps) == 1:
        return [(charpoly(seidel(g)), 1)]
    groups: dict[tuple[IntPoly, IntPoly], int] = {}
    for comp in comps:
        h = g.induced_subgraph(comp)
        key = _component_polys(h)
        groups[key] = groups.get(key, 0) + 1
    types = list(groups.items())
    factors: list[tuple[IntPoly, int]] = []
    for (phi, _), t in types:
        if t > 1:
            factors.append((phi, t - 1))
    prod_all = IntPoly((1,))
    for (phi, _), _t in types:
        prod_all = prod_all * phi
    bracket = prod_all
    for k, ((phi_k, psi_k), t_k) in enumerate(types):
        others = IntPoly((1,))
        for j, ((phi_j, _), _t) in enumerate(types):
            if j != k:
                others = others * phi_j
        bracket = bracket - (phi_k - psi_k) * others * t_k
    factors.append((bracket, 1))
    return factors


def expand(factors: Iterable[tuple[IntPoly, int]]) -> IntPoly:
    out = IntPoly((1,))
    for p, e in factors:
        out = out * p**e
    return out


def seidel_eigen_multiplicity(g: Graph, a) -> int:
    a = as_algebraic(a)
    return sum(e * root_multiplicity(p, a) for p, e in seidel_charpoly(g) if p.degree >= 1)


def seidel_spectrum(g: Graph) -> list[tuple[AlgebraicNumber, int]]:
    """Distinct Seidel eigenvalues in increasing order with multiplicities."""
    factors = seidel_charpoly(g)
    roots: list[AlgebraicNumber] = []
    for p, _ in factors:
        for r in AlgebraicNumber.real_roots(p):
            if not any(r.compare(s) == 0 for s in roots):
                roots.append(r)
    roots.sort(key=cmp_to_key(lambda x, y: int(x.compare(y))))
    out = []
    for r in roots:
        mult = sum(e * root_multiplicity(p, r) for p, e in factors)
        out.append((r, mult))
    return out


def seidel_min_eigenvalue(g: Graph) -> AlgebraicNumber:
    """Least Seidel eigenvalue, exactly."""
    best: AlgebraicNumber | None = None
    for p, _ in seidel_charpoly(g):
        if p.degree < 1:
            continue
        r = AlgebraicNumber.smallest_root(p)
        if best is None or r.compare(best) < 0:
            best = r
    if best is None:
        raise ValueError("empty spectrum")
    return best


def seidel_max_eigenvalue(g: Graph) -> AlgebraicNumber:
    best: AlgebraicNumber | None = None
    for p, _ in seidel_charpoly(g):
        if p.degree < 1:
            continue
        r = AlgebraicNumber.largest_root(p)
        if best is None or r.compare(best) > 0:
            best = r
    return best


# -- switching ---------------------------------------------------------------


def switch(g: Graph, subset: Iterable[int]) -> Graph:
    """Toggle every pair between ``subset`` and its complement."""
    mask = 0
    for v in subset:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    full = (1 << g.order) - 1
    other = full & ~mask
    adj = [row ^ (other if mask >> v & 1 else mask) for v, row in enumerate(g.adj)]
    return Graph._unchecked(g.order, adj)


def isolate_vertex(g: Graph, v: int) -> Graph:
    """The unique graph in the switching class of ``g`` where ``v`` is isolated."""
    return switch(g, list(_bits(g.adj[v])))


def switching_canonical(g: Graph) -> tuple[int, int]:
    """Key constant on switching-isomorphism classes (complete invariant).

    For each vertex v, switch v to be isolated, canonically label the rest,
    and keep the smallest code.
    """
    n = g.order
    if n > SWITCHING_KEY_LIMIT:
        raise OrderTooLarge(f"switching keys are limited to n <= {SWITCHING_KEY_LIMIT}")
    if n == 1:
        return (1, 0)
    best = None
    for v in range(n):
        h = isolate_vertex(g, v)
        rest = h.induced_subgraph([u for u in range(n) if u != v])
        code = canonical_code(rest)
        if best is None or code < best:
            best = code
    return (n, best)


def parity_identity_check(g: Graph) -> bool:
    """charpoly(-S(g)) and charpoly(J - I) agree modulo 2."""
    n = g.order
    j_minus_i = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    return charpoly_mod2(-seidel(g)) == charpoly_mod2(j_minus_i)
