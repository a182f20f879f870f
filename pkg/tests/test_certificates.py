import json
from fractions import Fraction

import pytest

from equiangular.certificates import NBoundCert, RBoundCert, load_certificate, verify
from equiangular.constructions import certify, line_graph_complement_cert, n_from_r, union_cert
from equiangular.errors import VerificationError
from equiangular.exact import AlgebraicNumber
from equiangular.graph import kneser, path, petersen


def round_trip(cert):
    return load_certificate(json.dumps(cert.to_json()))


def test_json_schema_fields():
    data = certify(kneser(8, 2), 3).to_json()
    assert data["schema"] == 1 and data["kind"] == "R-bound"
    assert set(data) >= {"graph6", "beta", "n", "d", "multiplicity", "min_eig", "provenance"}
    assert set(data["beta"]) == {"poly", "interval"}
    assert all(isinstance(c, str) for c in data["beta"]["poly"])


def test_round_trip_and_verify():
    for cert in (certify(kneser(8, 2), 3), line_graph_complement_cert(petersen()), union_cert(path(3), 4)):
        back = round_trip(cert)
        assert isinstance(back, RBoundCert)
        assert (back.n, back.d, back.multiplicity) == (cert.n, cert.d, cert.multiplicity)
        verify(back)
    nc = round_trip(n_from_r(union_cert(path(3), 4), 10))
    assert isinstance(nc, NBoundCert)
    verify(nc)


def tamper(cert, **changes):
    data = cert.to_json()
    data.update(changes)
    return data


@pytest.mark.parametrize("changes,message", [
    ({"d": 6}, "rank mismatch"),
    ({"multiplicity": 20}, "multiplicity mismatch"),
    ({"n": 27}, "order mismatch"),
    ({"beta": AlgebraicNumber.from_rational(Fraction(3, 2)).to_json()}, "eigenvalue threshold"),
    ({"min_eig": AlgebraicNumber.from_rational(-2).to_json()}, "min eigenvalue mismatch"),
    ({"schema": 2}, "schema"),
])
def test_tampered_r_certificates_fail(changes, message):
    cert = certify(kneser(8, 2), 3)
    with pytest.raises(VerificationError, match=message):
        verify(tamper(cert, **changes))


def test_tampered_n_certificate_fails():
    nc = n_from_r(certify(kneser(8, 2), 3), 7)
    with pytest.raises(VerificationError, match="eta mismatch"):
        verify(tamper(nc, eta="2"))
    with pytest.raises(VerificationError, match="dimension"):
        verify(tamper(nc, d=6, eta=str(Fraction(28, 6) - 1)))
    with pytest.raises(VerificationError, match="alpha mismatch"):
        verify(tamper(nc, alpha=AlgebraicNumber.from_rational(Fraction(1, 5)).to_json()))


def test_malformed_certificates():
    with pytest.raises(VerificationError):
        load_certificate({"schema": 1, "kind": "mystery"})
    with pytest.raises(VerificationError):
        load_certificate({"schema": 1, "kind": "R-bound", "graph6": "A_"})
