"""Explicit line systems from certified graphs, and graphs back from lines.

Given a graph with smallest Seidel eigenvalue >= -beta, the matrix
M = I + S/beta is positive semidefinite of rank d = n - mult(-beta); any
factorisation M = V V^T gives n unit vectors in R^d with pairwise inner
products +-1/beta. Conversely the sign pattern of the inner products of an
equiangular set recovers a graph, up to switching.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .certificates import RBoundCert
from .errors import AmbiguousSign, FactorizationResidual
from .exact import AlgebraicNumber
from .graph import Graph
from .seidel import seidel

DEFAULT_TOLERANCE = 1e-9


def default_tolerance(n: int) -> float:
    """1e-9 up to 100 vectors, growing linearly in n beyond that."""
    return DEFAULT_TOLERANCE if n <= 100 else DEFAULT_TOLERANCE * n / 100


@dataclass
class LineSystem:
    dim: int
    alpha: Fraction | AlgebraicNumber
    vectors: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def alpha_float(self) -> float:
        return float(self.alpha.copy() if isinstance(self.alpha, AlgebraicNumber) else self.alpha)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in self.vectors:
            w.writerow(f"{x:.17g}" for x in row)
        return buf.getvalue()

    def to_json(self) -> dict[str, Any]:
        if isinstance(self.alpha, AlgebraicNumber):
            alpha = self.alpha.to_json()
        else:
            alpha = str(Fraction(self.alpha))
        return {
            "dim": self.dim,
            "alpha": alpha,
            "tolerance": self.tolerance,
            "vectors": [[float(x) for x in row] for row in self.vectors],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any] | str) -> LineSystem:
        if isinstance(data, str):
            data = json.loads(data)
        a = data["alpha"]
        alpha = AlgebraicNumber.from_json(a) if isinstance(a, dict) else Fraction(a)
        vecs = np.array(data["vectors"], dtype=float).reshape(-1, int(data["dim"]))
        return cls(int(data["dim"]), alpha, vecs, float(data.get("tolerance", DEFAULT_TOLERANCE)))

    @classmethod
    def from_csv(cls, text: str, alpha, tolerance: float = DEFAULT_TOLERANCE) -> LineSystem:
        rows = [[float(x) for x in r] for r in csv.reader(io.StringIO(text)) if r]
        vecs = np.array(rows, dtype=float)
        return cls(vecs.shape[1], alpha, vecs, tolerance)


@dataclass
class LinesReport:
    n: int
    dim: int
    max_norm_deviation: float
    max_cosine_deviation: float
    tolerance: float
    worst_pair: tuple[int, int] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_norm_deviation <= self.tolerance and self.max_cosine_deviation <= self.tolerance

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return (f"{status}: {self.n} vectors in R^{self.dim}, "
                f"max |norm - 1| = {self.max_norm_deviation:.3e}, "
                f"max ||cos| - alpha| = {self.max_cosine_deviation:.3e}, tolerance {self.tolerance:.1e}")


def _alpha_for(beta: AlgebraicNumber) -> Fraction | AlgebraicNumber:
    return beta.as_fraction() ** -1 if beta.is_rational else beta.reciprocal()


def realize_lines(cert: RBoundCert, tolerance: float | None = None) -> LineSystem:
    """Unit vectors realising the certificate's graph as equiangular lines."""
    n, d = cert.n, cert.d
    alpha = _alpha_for(cert.beta)
    tol = default_tolerance(n) if tolerance is None else tolerance
    a = float(alpha.copy()) if isinstance(alpha, AlgebraicNumber) else float(alpha)
    if n == 1:
        return LineSystem(1, alpha, np.ones((1, 1)), tol)
    s = np.array(seidel(cert.graph).tolist(), dtype=float)
    m = np.eye(n) + a * s
    w, v = np.linalg.eigh(m)
    idx = np.argsort(-w, kind="stable")[:d]
    w, v = w[idx], v[:, idx]
    if d and w[-1] <= 0:
        raise FactorizationResidual(f"Gram matrix has only {int((w > 0).sum())} positive eigenvalues, need {d}")
    # Fix each eigenvector's sign so its largest-magnitude entry is positive.
    for j in range(v.shape[1]):
        k = int(np.argmax(np.abs(v[:, j])))
        if v[k, j] < 0:
            v[:, j] = -v[:, j]
    vecs = v * np.sqrt(w) + 0.0  # + 0.0 turns -0.0 into 0.0 for clean exports
    ls = LineSystem(d, alpha, vecs, tol)
    rep = verify_lines(ls)
    if not rep.passed:
        raise FactorizationResidual(str(rep))
    return ls


def verify_lines(ls: LineSystem) -> LinesReport:
    vecs = np.asarray(ls.vectors, dtype=float)
    n = len(vecs)
    if n == 0:
        return LinesReport(0, ls.dim, 0.0, 0.0, ls.tolerance)
    gram = vecs @ vecs.T
    norm_dev = float(np.max(np.abs(np.sqrt(np.diag(gram)) - 1)))
    cos_dev, worst = 0.0, None
    if n > 1:
        off = np.abs(np.abs(gram) - ls.alpha_float)
        np.fill_diagonal(off, 0.0)
        k = int(np.argmax(off))
        cos_dev = float(off.flat[k])
        worst = divmod(k, n)
    notes = []
    if vecs.shape[1] != ls.dim:
        notes.append(f"vectors have {vecs.shape[1]} coordinates but dim is {ls.dim}")
        norm_dev = max(norm_dev, float("inf"))
    return LinesReport(n, ls.dim, norm_dev, cos_dev, ls.tolerance, worst, notes)


def graph_from_lines(ls: LineSystem) -> Graph:
    """Graph whose edges are the pairs with negative inner product."""
    vecs = np.asarray(ls.vectors, dtype=float)
    n = len(vecs)
    gram = vecs @ vecs.T
    alpha = ls.alpha_float
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            x = gram[i, j]
            if abs(x) <= ls.tolerance and alpha > ls.tolerance:
                raise AmbiguousSign(f"inner product of vectors {i} and {j} is {x:.3e}, indistinguishable from 0")
            if x < 0:
                edges.append((i, j))
    return Graph.from_edges(n, edges)
