from fractions import Fraction

import numpy as np
import pytest

from equiangular.canonical import connected_graphs_up_to_isomorphism
from equiangular.constructions import certify, line_graph_complement_cert, union_cert
from equiangular.errors import AmbiguousSign
from equiangular.graph import complete, disjoint_union, empty, kneser, path, petersen
from equiangular.realize import LineSystem, graph_from_lines, realize_lines, verify_lines
from equiangular.seidel import seidel, seidel_min_eigenvalue, switch, switching_canonical
from oracles import closed_form_28_lines


def gram_cos_dev(v, alpha):
    g = v @ v.T
    off = np.abs(np.abs(g) - alpha)
    np.fill_diagonal(off, 0)
    return off.max()


def test_two_k2_realization():
    ls = realize_lines(certify(disjoint_union(complete(2), 2), 3))
    assert ls.vectors.shape == (4, 3)
    assert verify_lines(ls).passed
    assert gram_cos_dev(ls.vectors, 1 / 3) < 1e-12


def test_kneser_realization_and_closed_form_oracle():
    cert = certify(kneser(8, 2), 3)
    ls = realize_lines(cert)
    assert ls.vectors.shape == (28, 7) and ls.alpha == Fraction(1, 3)
    assert verify_lines(ls).passed
    oracle = closed_form_28_lines()
    assert gram_cos_dev(oracle, 1 / 3) < 1e-12
    # Oracle vectors follow the Kneser vertex order, so the recovered graph is exactly kneser(8, 2).
    assert graph_from_lines(LineSystem(7, Fraction(1, 3), oracle)) == cert.graph
    assert switching_equivalent_labelled(graph_from_lines(ls), cert.graph)


def switching_equivalent_labelled(g, h):
    """True iff switching g at some vertex set gives exactly h (same labels)."""
    flip = [v for v in range(g.order) if v and g.has_edge(0, v) != h.has_edge(0, v)]
    return switch(g, flip) == h


def test_single_vertex():
    ls = realize_lines(certify(empty(1), 1))
    assert ls.vectors.shape == (1, 1) and verify_lines(ls).passed


def test_verify_lines_detects_perturbation():
    ls = realize_lines(certify(kneser(8, 2), 3))
    bad = ls.vectors.copy()
    bad[3] = bad[3] + 1e-3 * np.eye(7)[0]
    rep = verify_lines(LineSystem(7, ls.alpha, bad, ls.tolerance))
    assert not rep.passed
    assert 1e-4 < max(rep.max_norm_deviation, rep.max_cosine_deviation) < 1e-2


def test_orthonormal_pair_is_degenerate_equiangular():
    rep = verify_lines(LineSystem(2, Fraction(0), np.eye(2)))
    assert rep.passed


def test_mercedes_configuration():
    angles = [np.pi / 2 + k * 2 * np.pi / 3 for k in range(3)]
    v = np.array([[np.cos(a), np.sin(a)] for a in angles])
    g = graph_from_lines(LineSystem(2, Fraction(1, 2), v))
    assert switching_canonical(g) == switching_canonical(complete(3))
    assert float(seidel_min_eigenvalue(g)) >= -2 - 1e-12


def test_ambiguous_sign():
    v = np.array([[1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(AmbiguousSign):
        graph_from_lines(LineSystem(2, Fraction(1, 3), v))


def test_round_trip_switching_class_on_small_graphs():
    for n in range(2, 7):
        for g in connected_graphs_up_to_isomorphism(n):
            beta = -seidel_min_eigenvalue(g)
            if beta.compare(0) != 1:
                continue
            cert = certify(g, beta)
            ls = realize_lines(cert)
            assert verify_lines(ls).passed
            assert switching_canonical(graph_from_lines(ls)) == switching_canonical(g)
            gram = np.eye(n) + ls.alpha_float * np.array(seidel(g).tolist(), dtype=float)
            ev = np.linalg.eigvalsh(gram)
            assert ev[0] >= -1e-9
            assert int((ev > 1e-6 * n).sum()) == cert.d


def test_irrational_alpha_realization():
    cert = union_cert(path(3), 3)  # beta = 2 sqrt 2 + 1
    ls = realize_lines(cert)
    assert verify_lines(ls).passed
    assert abs(ls.alpha_float - 1 / (2 * np.sqrt(2) + 1)) < 1e-15


def test_exports_round_trip():
    ls = realize_lines(line_graph_complement_cert(petersen()))
    back = LineSystem.from_csv(ls.to_csv(), ls.alpha, ls.tolerance)
    assert np.array_equal(back.vectors, ls.vectors)
    back = LineSystem.from_json(ls.to_json())
    assert np.array_equal(back.vectors, ls.vectors) and back.alpha == ls.alpha
    cert = union_cert(path(3), 2)
    ls2 = realize_lines(cert)
    assert verify_lines(LineSystem.from_json(ls2.to_json())).passed
