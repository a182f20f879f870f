"""Exhaustive computation of R_beta(n) over switching classes, and parity audits.

R_beta(n) is the least rank of S(G) + beta*I over graphs G on n vertices whose
Seidel spectrum lies in [-beta, oo). The Seidel spectrum is constant on a
switching class, so one representative per class suffices. Every class
contains a graph with vertex n-1 isolated, so representatives are generated
from isomorphism classes on n-1 vertices plus an isolated vertex.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .canonical import graphs_up_to_isomorphism
from .errors import InvalidParameters, OrderTooLarge
from .exact import AlgebraicNumber, IntPoly, Ordering, as_algebraic, compare, root_multiplicity
from .graph import Graph, graph6_decode, graph6_encode
from .seidel import (
    SWITCHING_KEY_LIMIT,
    expand,
    parity_identity_check,
    seidel_charpoly,
    switching_canonical,
)

# Number of switching classes (two-graphs) on n vertices, n = 1..10.
SWITCHING_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 7, 6: 16, 7: 54, 8: 243, 9: 2038, 10: 33120}


@dataclass
class RTableEntry:
    beta: AlgebraicNumber
    n: int
    value: int | None
    witness: Graph | None
    classes_scanned: int

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def value_text(self) -> str:
        return "infeasible" if self.value is None else str(self.value)

    def to_json(self) -> dict:
        return {
            "beta": self.beta.to_json(),
            "n": self.n,
            "value": self.value,
            "witness": None if self.witness is None else graph6_encode(self.witness),
            "classes_scanned": self.classes_scanned,
        }

    @classmethod
    def from_json(cls, data: dict) -> RTableEntry:
        w = data.get("witness")
        return cls(AlgebraicNumber.from_json(data["beta"]), int(data["n"]), data["value"],
                   None if w is None else graph6_decode(w), int(data["classes_scanned"]))


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters("n must be a positive integer")
    if n > SWITCHING_KEY_LIMIT:
        raise OrderTooLarge(f"exhaustive search is limited to n <= {SWITCHING_KEY_LIMIT}")


@lru_cache(maxsize=None)
def _switching_representatives(n: int) -> tuple[tuple[tuple[int, int], Graph], ...]:
    found: dict[tuple[int, int], Graph] = {}
    for h in graphs_up_to_isomorphism(n - 1):
        g = Graph._unchecked(n, list(h.adj) + [0])
        key = switching_canonical(g)
        if key not in found:
            found[key] = g
    return tuple(sorted(found.items()))


def enumerate_switching_classes(n: int) -> Iterator[Graph]:
    """One representative per switching class on ``n`` vertices, in key order.

    Cost grows quickly: n = 9 and n = 10 take minutes to hours in pure Python.
    """
    if n < 2:
        raise InvalidParameters("switching classes are enumerated for n >= 2")
    _check_order(n)
    for _, g in _switching_representatives(n):
        yield g


def _rank_if_admissible(g: Graph, beta: AlgebraicNumber) -> int | None:
    """rank(S + beta I) if the Seidel spectrum is >= -beta, else None."""
    minus_beta = -beta
    factors = [(p, e) for p, e in seidel_charpoly(g) if p.degree >= 1]
    for p, _ in factors:
        if compare(AlgebraicNumber.smallest_root(p), minus_beta) == Ordering.LT:
            return None
    return g.order - sum(e * root_multiplicity(p, minus_beta) for p, e in factors)


def _scan_chunk(args) -> tuple[int | None, tuple[int, int] | None, str | None, int]:
    beta_json, items = args
    beta = AlgebraicNumber.from_json(beta_json)
    best = None
    for key, g6 in items:
        g = graph6_decode(g6)
        r = _rank_if_admissible(g, beta)
        if r is not None and (best is None or (r, key) < best[:2]):
            best = (r, key, g6)
    if best is None:
        return None, None, None, len(items)
    return best[0], best[1], best[2], len(items)


def _chunks(seq: list, k: int) -> list[list]:
    k = max(1, min(k, len(seq)))
    size, extra = divmod(len(seq), k)
    out, start = [], 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        out.append(seq[start:end])
        start = end
    return out


def compute_R(beta, n: int, workers: int = 1) -> RTableEntry:
    """Exact R_beta(n) with a witness; ``value`` is None when no graph qualifies.

    With ``workers > 1`` the representative list is split into contiguous
    chunks scanned in separate processes; partial minima are merged by
    (value, switching key), so the result does not depend on the worker count.
    """
    beta = as_algebraic(beta)
    _check_order(n)
    if n == 1:
        g = Graph(1, [0])
        return RTableEntry(beta, 1, _rank_if_admissible(g, beta), g, 1)
    reps = [(key, graph6_encode(g)) for key, g in _switching_representatives(n)]
    payload = beta.copy().to_json()
    chunks = _chunks(reps, workers)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, [(payload, c) for c in chunks]))
    else:
        parts = [_scan_chunk((payload, c)) for c in chunks]
    scanned = sum(p[3] for p in parts)
    feasible = [p for p in parts if p[0] is not None]
    if not feasible:
        return RTableEntry(beta, n, None, None, scanned)
    value, _, g6, _ = min(feasible, key=lambda p: (p[0], p[1]))
    return RTableEntry(beta, n, value, graph6_decode(g6), scanned)


def r_table(beta, n_lo: int, n_hi: int, workers: int = 1, out_path: str | None = None,
            resume: bool = False) -> list[RTableEntry]:
    """compute_R for n_lo..n_hi, optionally appended to a JSON-lines file."""
    beta = as_algebraic(beta)
    if n_lo > n_hi:
        raise InvalidParameters("empty range of orders")
    done: dict[int, RTableEntry] = {}
    if resume and out_path and os.path.exists(out_path):
        for e in load_entries(out_path):
            if compare(e.beta, beta) == Ordering.EQ:
                done[e.n] = e
    entries = []
    for n in range(n_lo, n_hi + 1):
        if n in done:
            entries.append(done[n])
            continue
        e = compute_R(beta, n, workers)
        entries.append(e)
        if out_path:
            with open(out_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(e.to_json()) + "\n")
    return entries


def load_entries(path: str) -> list[RTableEntry]:
    with open(path, encoding="utf-8") as fh:
        return [RTableEntry.from_json(json.loads(line)) for line in fh if line.strip()]


def render_table(entries: Iterable[RTableEntry]) -> str:
    rows = [("n", "R", "classes", "witness")]
    for e in entries:
        rows.append((str(e.n), e.value_text(), str(e.classes_scanned),
                     "-" if e.witness is None else graph6_encode(e.witness)))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# -- parity audits ------------------------------------------------------------


@dataclass
class AuditRow:
    n: int
    graphs: int
    parity_failures: int = 0
    even_eigenvalue_failures: int = 0
    never_eigenvalue_failures: int = 0

    @property
    def failures(self) -> int:
        return self.parity_failures + self.even_eigenvalue_failures + self.never_eigenvalue_failures


@dataclass
class AuditReport:
    rows: list[AuditRow] = field(default_factory=list)
    failing_graphs: list[tuple[str, str]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.graphs for r in self.rows)

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.rows)

    def render(self) -> str:
        head = ("n", "classes", "parity", "even-eig", "never-eig")
        body = [(str(r.n), str(r.graphs), str(r.parity_failures), str(r.even_eigenvalue_failures),
                 str(r.never_eigenvalue_failures)) for r in self.rows]
        widths = [max(len(x[i]) for x in [head] + body) for i in range(5)]
        fmt = lambda r: "  ".join(c.rjust(w) for c, w in zip(r, widths))  # noqa: E731
        lines = [fmt(head), fmt(tuple("-" * w for w in widths))] + [fmt(r) for r in body]
        if self.passed:
            lines.append(f"all {self.total} isomorphism classes pass")
        else:
            lines.append(f"{sum(r.failures for r in self.rows)} failures among {self.total} classes")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _sqrt2() -> AlgebraicNumber:
    return AlgebraicNumber.sqrt(2)


def even_eigenvalue_ok(poly: IntPoly, n: int) -> bool:
    """Even integer Seidel eigenvalues: none for even n, multiplicity <= 1 for odd n."""
    limit = 0 if n % 2 == 0 else 1
    for e in range(-n, n + 1):
        if e % 2 == 0 and poly.sign_at(Fraction(e)) == 0:
            if root_multiplicity(poly, AlgebraicNumber.from_rational(e)) > limit:
                return False
    return True


def parity_audit(max_n: int, min_n: int = 1) -> AuditReport:
    """Check the mod-2 identity and its consequences on every graph up to ``max_n``."""
    if max_n > 8:
        raise OrderTooLarge("parity audit is limited to n <= 8")
    report = AuditReport()
    for n in range(min_n, max_n + 1):
        row = AuditRow(n, 0)
        for g in graphs_up_to_isomorphism(n):
            row.graphs += 1
            poly = expand(seidel_charpoly(g))
            bad = []
            if not parity_identity_check(g):
                row.parity_failures += 1
                bad.append("parity")
            if not even_eigenvalue_ok(poly, n):
                row.even_eigenvalue_failures += 1
                bad.append("even eigenvalue")
            if root_multiplicity(poly, _sqrt2()) or root_multiplicity(poly, AlgebraicNumber.from_rational(Fraction(3, 2))):
                row.never_eigenvalue_failures += 1
                bad.append("never eigenvalue")
            if bad:
                report.failing_graphs.append((graph6_encode(g), ", ".join(bad)))
        report.rows.append(row)
    return report
