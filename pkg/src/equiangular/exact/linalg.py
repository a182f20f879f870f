"""Exact linear algebra over Z, Q and GF(2)."""

from __future__ import annotations

from functools import lru_cache
from math import comb, isqrt
from typing import Sequence

import numpy as np

from .algebraic import AlgebraicNumber, as_algebraic, count_roots, root_multiplicity
from .poly import GF2Poly, IntPoly, cldivmod, clmul

IntMatrix = Sequence[Sequence[int]]

# Primes below 2**25: products fit in 50 bits, so a dot product of up to
# 2**13 such products stays inside int64.
_PRIME_CEILING = 1 << 25
_MAX_DOT = 1 << 13


def _as_rows(m) -> list[list[int]]:
    rows = [[int(v) for v in row] for row in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    for d in range(2, isqrt(k) + 1):
        if k % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """The i-th prime below the ceiling, counting downwards."""
    p = _PRIME_CEILING - 1 if i == 0 else _prime(i - 1) - 2
    while not _is_prime(p):
        p -= 2
    return p


def _charpoly_bound(rows: list[list[int]]) -> int:
    """Bound on |coefficient| of det(xI - M).

    Coefficient k is an elementary symmetric function of the eigenvalues,
    each bounded by the largest absolute row sum B, so |c_k| <= C(n,k) B^k.
    """
    n = len(rows)
    b = max((sum(abs(v) for v in r) for r in rows), default=0)
    return max(comb(n, k) * b**k for k in range(n + 1))


def _hessenberg_charpoly_mod(rows: list[list[int]], p: int) -> np.ndarray:
    """Ascending coefficients of det(xI - M) mod p via Hessenberg reduction."""
    n = len(rows)
    h = np.array(rows, dtype=np.int64) % p
    for k in range(n - 2):
        col = h[k + 1:, k]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        r = k + 1 + int(nz[0])
        if r != k + 1:
            h[[r, k + 1], :] = h[[k + 1, r], :]
            h[:, [r, k + 1]] = h[:, [k + 1, r]]
        piv = int(h[k + 1, k])
        inv = pow(piv, p - 2, p)
        u = (h[k + 2:, k] * inv) % p
        if not u.any():
            continue
        # Row ops R_i -= u_i R_{k+1}, then column op C_{k+1} += sum_i u_i C_i.
        h[k + 2:, :] = (h[k + 2:, :] - (u[:, None] * h[k + 1, :][None, :]) % p) % p
        h[:, k + 1] = (h[:, k + 1] + _matvec_mod(h[:, k + 2:], u, p)) % p
    # det(xI - H) for upper Hessenberg H by the standard recurrence.
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        cur = np.zeros(n + 1, dtype=np.int64)
        prev = polys[k - 1]
        cur[1:] = prev[:-1]
        cur = (cur - (h[k - 1, k - 1] * prev) % p) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = (prod * int(h[i, i - 1])) % p
            if prod == 0:
                break
            c = (int(h[i - 1, k - 1]) * prod) % p
            if c:
                cur = (cur - (c * polys[i - 1]) % p) % p
        polys[k] = cur
    return polys[n]


def _matvec_mod(a: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros(a.shape[0], dtype=np.int64)
    for s in range(0, a.shape[1], _MAX_DOT):
        out = (out + (a[:, s:s + _MAX_DOT] @ v[s:s + _MAX_DOT]) % p) % p
    return out


def charpoly(m: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(xI - m) of a square integer matrix.

    Computed modulo enough word-sized primes to exceed the a-priori
    coefficient bound, then lifted by Chinese remaindering into symmetric
    residues. The result is exact.
    """
    rows = _as_rows(m)
    n = len(rows)
    if n == 0:
        return IntPoly((1,))
    if n > _MAX_DOT:
        raise ValueError(f"matrix dimension {n} exceeds {_MAX_DOT}")
    bound = 2 * _charpoly_bound(rows) + 1
    modulus = 1
    coeffs = [0] * (n + 1)
    i = 0
    while modulus < bound:
        p = _prime(i)
        i += 1
        residues = _hessenberg_charpoly_mod(rows, p)
        # CRT: x = a mod M, x = r mod p.
        minv = pow(modulus % p, p - 2, p)
        for j in range(n + 1):
            a = coeffs[j]
            t = ((int(residues[j]) - a) * minv) % p
            coeffs[j] = a + modulus * t
        modulus *= p
    half = modulus // 2
    return IntPoly(c - modulus if c > half else c for c in coeffs)


def charpoly_mod2(m: IntMatrix) -> GF2Poly:
    """det(xI - m) over GF(2), by fraction-free elimination in GF(2)[x].

    Shares no code with ``charpoly``; the two are cross-checks of each other.
    """
    rows = _as_rows(m)
    n = len(rows)
    # Entries of xI - M as packed GF(2)[x] polynomials (bit i = x^i).
    a = [[(rows[i][j] & 1) ^ (2 if i == j else 0) for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return GF2Poly(0)
            a[k], a[swap] = a[swap], a[k]
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = clmul(piv, row_i[j]) ^ clmul(aik, row_k[j])
                q, r = cldivmod(num, prev)
                if r:
                    raise ArithmeticError("non-exact Bareiss step over GF(2)[x]")
                row_i[j] = q
            row_i[k] = 0
        prev = piv
    return GF2Poly(prev if n else 1)


def rank_exact(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    a = [[int(v) for v in row] for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for c in range(ncols):
        piv_row = next((r for r in range(rank, nrows) if a[r][c]), None)
        if piv_row is None:
            continue
        a[rank], a[piv_row] = a[piv_row], a[rank]
        piv = a[rank][c]
        for r in range(rank + 1, nrows):
            arc = a[r][c]
            row_r, row_p = a[r], a[rank]
            for j in range(c + 1, ncols):
                row_r[j] = (piv * row_r[j] - arc * row_p[j]) // prev
            row_r[c] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def eigen_multiplicity(m: IntMatrix, a) -> int:
    """Multiplicity of ``a`` as an eigenvalue of the symmetric integer matrix ``m``."""
    a = as_algebraic(a)
    return root_multiplicity(charpoly(m), a)


def rank_shifted(m: IntMatrix, beta) -> int:
    """Rank of ``m + beta*I`` for algebraic ``beta``: n minus the multiplicity of -beta."""
    beta = as_algebraic(beta)
    n = len(m)
    return n - eigen_multiplicity(m, -beta)


def is_totally_real_algebraic_integer(p: IntPoly) -> bool:
    """True iff ``p`` is monic up to sign and all of its roots are real."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if abs(p.lc) != 1:
        return False
    q = p.squarefree()
    if q.degree < 1:
        return True
    return count_roots(q, None, None) == q.degree


__all__ = [
    "AlgebraicNumber",
    "IntMatrix",
    "charpoly",
    "charpoly_mod2",
    "eigen_multiplicity",
    "is_totally_real_algebraic_integer",
    "rank_exact",
    "rank_shifted",
]
