import json
import random
from fractions import Fraction

import pytest

from equiangular.errors import InvalidParameters, OrderTooLarge
from equiangular.exact import AlgebraicNumber
from equiangular.graph import complete, disjoint_union, graph6_encode
from equiangular.search import (
    SWITCHING_CLASS_COUNTS,
    _scan_chunk,
    _switching_representatives,
    compute_R,
    enumerate_switching_classes,
    load_entries,
    parity_audit,
    r_table,
    render_table,
)
from equiangular.seidel import switching_canonical
from oracles import brute_force_R, brute_force_switching_classes


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_class_counts_match_union_find(n):
    reps = list(enumerate_switching_classes(n))
    assert len(reps) == brute_force_switching_classes(n) == SWITCHING_CLASS_COUNTS[n]
    assert len({switching_canonical(g) for g in reps}) == len(reps)


@pytest.mark.parametrize("n", [7, 8])
def test_class_counts_larger(n):
    assert len(list(enumerate_switching_classes(n))) == SWITCHING_CLASS_COUNTS[n]


def test_enumeration_limits():
    with pytest.raises(OrderTooLarge):
        list(enumerate_switching_classes(11))
    with pytest.raises(InvalidParameters):
        list(enumerate_switching_classes(1))


def test_enumeration_is_deterministic():
    assert list(enumerate_switching_classes(6)) == list(enumerate_switching_classes(6))


def test_compute_R_examples():
    assert compute_R(3, 2).value == 2
    e = compute_R(3, 4)
    assert e.value == 3
    assert switching_canonical(e.witness) == switching_canonical(disjoint_union(complete(2), 2))
    for n in range(2, 8):
        assert compute_R(Fraction(3, 2), n).value == n


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_compute_R_matches_brute_force(n):
    assert compute_R(3, n).value == brute_force_R(3.0, n, Fraction(3))


@pytest.mark.parametrize("beta", [Fraction(1), Fraction(5), Fraction(9, 4)])
def test_compute_R_other_betas_match_brute_force(beta):
    for n in range(2, 6):
        assert compute_R(beta, n).value == brute_force_R(float(beta), n, beta)


def test_infeasible_small_beta():
    e = compute_R(Fraction(1, 2), 3)
    assert e.value is None and e.witness is None and e.classes_scanned == 2
    assert e.value_text() == "infeasible"


def test_worker_count_does_not_change_result():
    a = compute_R(3, 7, workers=1)
    b = compute_R(3, 7, workers=3)
    assert (a.value, a.witness) == (b.value, b.witness)


def test_merge_is_order_independent():
    reps = [(k, graph6_encode(g)) for k, g in _switching_representatives(6)]
    beta = AlgebraicNumber.from_rational(3).to_json()
    whole = _scan_chunk((beta, reps))
    rng = random.Random(0)
    for _ in range(5):
        rng.shuffle(reps)
        cut = rng.randint(1, len(reps) - 1)
        parts = [_scan_chunk((beta, reps[:cut])), _scan_chunk((beta, reps[cut:]))]
        best = min((p for p in parts if p[0] is not None), key=lambda p: (p[0], p[1]))
        assert best[:3] == whole[:3]


def test_r_table_parity_and_sqrt2():
    four = r_table(4, 2, 7)
    for e in four:
        if e.n % 2 == 0:
            assert e.value == e.n
        else:
            assert e.n - 1 <= e.value <= e.n
    assert all(e.value == e.n for e in r_table(AlgebraicNumber.sqrt(2), 2, 7))
    threes = [e.value for e in r_table(3, 2, 7)]
    gaps = [n - v for n, v in zip(range(2, 8), threes)]
    assert gaps == sorted(gaps)


def test_r_table_persistence_and_resume(tmp_path):
    out = tmp_path / "r.jsonl"
    first = r_table(3, 2, 4, out_path=str(out))
    assert len(out.read_text().splitlines()) == 3
    again = r_table(3, 2, 5, out_path=str(out), resume=True)
    lines = out.read_text().splitlines()
    assert len(lines) == 4 and json.loads(lines[-1])["n"] == 5
    assert [e.value for e in again[:3]] == [e.value for e in first]
    loaded = load_entries(str(out))
    assert [e.n for e in loaded] == [2, 3, 4, 5]
    assert "witness" in render_table(loaded)


def test_parity_audit_summary():
    report = parity_audit(5)
    assert report.passed and report.total == 52
    assert "all 52 isomorphism classes pass" in report.render()
