"""Acceptance criteria 1-9, each printed as one PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest.
"""

from __future__ import annotations

import os
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from equiangular.canonical import connected_graphs_up_to_isomorphism  # noqa: E402
from equiangular.certificates import verify  # noqa: E402
from equiangular.constructions import (  # noqa: E402
    certify,
    line_graph_complement_cert,
    shearer_graph,
    spectral_radius,
    tau_threshold,
    theorem1_pipeline,
    union_cert,
)
from equiangular.exact import Ordering, compare  # noqa: E402
from equiangular.graph import complete, disjoint_union, kneser, petersen, random_regular  # noqa: E402
from equiangular.realize import realize_lines, verify_lines  # noqa: E402
from equiangular.search import compute_R, parity_audit  # noqa: E402
from equiangular.seidel import (  # noqa: E402
    seidel,
    seidel_eigen_multiplicity,
    seidel_spectrum,
    switching_canonical,
)
from oracles import brute_force_R  # noqa: E402


def criterion_1():
    t0 = time.perf_counter()
    g = kneser(8, 2)
    spectrum = [(a.as_fraction() if a.is_rational else a, m) for a, m in seidel_spectrum(g)]
    exact_ok = spectrum == [(-3, 21), (9, 7)]
    ev = np.sort(np.linalg.eigvalsh(np.array(seidel(g).tolist(), dtype=float)))
    float_ok = np.max(np.abs(ev - np.array([-3.0] * 21 + [9.0] * 7))) <= 1e-9
    cert = certify(g, 3)
    ls = realize_lines(cert)
    rep = verify_lines(ls)
    lines_ok = ls.vectors.shape == (28, 7) and rep.max_cosine_deviation <= 1e-9 and rep.max_norm_deviation <= 1e-9
    elapsed = time.perf_counter() - t0
    ok = exact_ok and float_ok and cert.d == 7 and lines_ok and elapsed < 10
    return ok, (f"spectrum {{9^7, -3^21}} exact={exact_ok} float={float_ok}; d={cert.d}; "
                f"28 lines in R^7, max ||cos|-1/3|={rep.max_cosine_deviation:.1e}; {elapsed:.2f}s")


def criterion_2():
    t0 = time.perf_counter()
    cases = [(2, petersen()),
             (3, random_regular(14, 3, seed=1, connected=True)),
             (4, random_regular(18, 3, seed=1, connected=True))]
    parts, ok = [], True
    for k, g in cases:
        c = line_graph_complement_cert(g)
        good = (compare(c.min_eig, 6 - 6 * k) == Ordering.EQ and c.multiplicity == 1
                and c.d == 6 * k + 2 and c.n == 6 * k + 3)
        ok &= good
        parts.append(f"n'={k}: min={c.min_eig} mult={c.multiplicity} d={c.d}")
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 30, "; ".join(parts) + f"; {elapsed:.2f}s"


def criterion_3():
    eps = Fraction(1, 10**4)
    parts, ok = [], True
    for lam in (Fraction(21, 10), Fraction(5, 2), Fraction(3)):
        t0 = time.perf_counter()
        g = shearer_graph(lam, eps)
        rho = spectral_radius(g)
        good = (g.is_connected() and compare(rho, lam) != Ordering.GT
                and compare(rho, lam - eps) == Ordering.GT)
        elapsed = time.perf_counter() - t0
        ok &= good and elapsed < 60
        parts.append(f"lambda={lam}: n={g.order} rho={float(rho):.8f} ({elapsed:.2f}s)")
    return ok, "; ".join(parts)


def criterion_4():
    t0 = time.perf_counter()
    tau, i, t = tau_threshold(), 6, 16
    nc = theorem1_pipeline(tau, i, t)
    n_i = nc.n // t
    eta_bound = Fraction(t - 1, t * n_i - t + 1)
    beta = nc.alpha.reciprocal()         # 1/alpha
    inv_tau = tau.reciprocal()           # 1/tau
    gap_ok = (compare(beta, inv_tau) != Ordering.GT
              and compare(beta, inv_tau - Fraction(2, 2**i)) != Ordering.LT)
    gap = float(inv_tau.copy()) - float(beta.copy())
    verify(nc)
    elapsed = time.perf_counter() - t0
    ok = nc.eta >= eta_bound > 0 and gap_ok
    return ok, (f"n_i={n_i}, lines={nc.n}, d={nc.d}, eta={nc.eta} >= {eta_bound}; "
                f"|1/alpha - 1/tau| = {gap:.5f} <= {2 / 2**i:.5f}; re-verified; {elapsed:.2f}s")


_AUDIT = {}


def _audit():
    if "report" not in _AUDIT:
        t0 = time.perf_counter()
        _AUDIT["report"] = parity_audit(7)
        _AUDIT["seconds"] = time.perf_counter() - t0
    return _AUDIT["report"], _AUDIT["seconds"]


def criterion_5():
    report, seconds = _audit()
    fails = sum(r.parity_failures for r in report.rows)
    return fails == 0 and seconds < 300, f"{report.total} isomorphism classes (n<=7), {fails} failures; {seconds:.1f}s"


def criterion_6():
    report, _ = _audit()
    fails = sum(r.even_eigenvalue_failures for r in report.rows)
    return fails == 0, f"{report.total} isomorphism classes (n<=7), {fails} even-eigenvalue violations"


def criterion_7():
    report, _ = _audit()
    fails = sum(r.never_eigenvalue_failures for r in report.rows)
    return fails == 0, f"{report.total} isomorphism classes (n<=7), sqrt(2) and 3/2 never eigenvalues ({fails} failures)"


def criterion_8():
    t0 = time.perf_counter()
    values = {n: compute_R(3, n).value for n in range(2, 7)}
    oracle = {n: brute_force_R(3.0, n, Fraction(3)) for n in range(2, 7)}
    e = compute_R(3, 4)
    witness_ok = switching_canonical(e.witness) == switching_canonical(disjoint_union(complete(2), 2))
    ok = values == oracle and e.value == 3 and witness_ok
    return ok, (f"R_3(2..6) = {list(values.values())}, brute force {list(oracle.values())}; "
                f"R_3(4) witness in class of 2K_2: {witness_ok}; {time.perf_counter() - t0:.1f}s")


def criterion_9():
    checked, ok = 0, True
    for n in range(1, 7):
        for g in connected_graphs_up_to_isomorphism(n):
            beta = spectral_radius(g).affine(2, 1)
            for t in (2, 3):
                mult = seidel_eigen_multiplicity(disjoint_union(g, t), -beta)
                d = union_cert(g, t).d
                ok &= mult >= t - 1 and d <= t * n - t + 1
                checked += 1
    return ok, f"{checked} (graph, t) pairs over connected graphs with n<=6, t in {{2,3}}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _report(k: int, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {detail}"


@pytest.mark.parametrize("k", range(1, 10))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _report(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        results.append(ok)
        print(_report(k, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
