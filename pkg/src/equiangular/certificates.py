"""Certificate types, their JSON form, and exact re-verification.

A certificate is re-verified from its graph6 string and exact algebraic
data alone; no stored spectral quantity is trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import EquiangularError, VerificationError
from .exact import AlgebraicNumber, IntPoly, Ordering, compare
from .graph import Graph, graph6_decode, graph6_encode
from .seidel import seidel_eigen_multiplicity, seidel_min_eigenvalue

SCHEMA_VERSION = 1


def _frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class RBoundCert:
    """Witness for R_beta(n) <= d: a graph whose Seidel spectrum is >= -beta."""

    graph: Graph
    beta: AlgebraicNumber
    n: int
    d: int
    min_eig: AlgebraicNumber
    multiplicity: int
    provenance: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    @property
    def slack(self) -> Fraction:
        """1 - d/n: the relative rank saving."""
        return 1 - Fraction(self.d, self.n)

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "R-bound",
            "graph6": graph6_encode(self.graph),
            "n": self.n,
            "d": self.d,
            "beta": self.beta.to_json(),
            "min_eig": self.min_eig.to_json(),
            "multiplicity": self.multiplicity,
            "provenance": list(self.provenance),
            "flags": list(self.flags),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> RBoundCert:
        _check_header(data, "R-bound")
        try:
            return cls(
                graph=graph6_decode(data["graph6"]),
                beta=AlgebraicNumber.from_json(data["beta"]),
                n=int(data["n"]),
                d=int(data["d"]),
                min_eig=AlgebraicNumber.from_json(data["min_eig"]),
                multiplicity=int(data["multiplicity"]),
                provenance=list(data.get("provenance", [])),
                flags=list(data.get("flags", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise VerificationError(f"malformed certificate: {exc}") from exc


@dataclass
class NBoundCert:
    """Witness for N_alpha(d) >= n, obtained from an R-bound certificate."""

    alpha: AlgebraicNumber
    d: int
    n: int
    witness: RBoundCert
    eta: Fraction
    provenance: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "N-bound",
            "alpha": self.alpha.to_json(),
            "d": self.d,
            "n": self.n,
            "eta": _frac_str(self.eta),
            "witness": self.witness.to_json(),
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> NBoundCert:
        _check_header(data, "N-bound")
        try:
            return cls(
                alpha=AlgebraicNumber.from_json(data["alpha"]),
                d=int(data["d"]),
                n=int(data["n"]),
                witness=RBoundCert.from_json(data["witness"]),
                eta=Fraction(data["eta"]),
                provenance=list(data.get("provenance", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, VerificationError):
                raise
            raise VerificationError(f"malformed certificate: {exc}") from exc


@dataclass
class ShearerCert:
    """A connected graph with lambda - epsilon < rho(G) <= lambda."""

    graph: Graph
    lam: AlgebraicNumber
    epsilon: Fraction
    rho: AlgebraicNumber
    provenance: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "shearer",
            "graph6": graph6_encode(self.graph),
            "lambda": self.lam.to_json(),
            "epsilon": _frac_str(self.epsilon),
            "rho": self.rho.to_json(),
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ShearerCert:
        _check_header(data, "shearer")
        try:
            return cls(
                graph=graph6_decode(data["graph6"]),
                lam=AlgebraicNumber.from_json(data["lambda"]),
                epsilon=Fraction(data["epsilon"]),
                rho=AlgebraicNumber.from_json(data["rho"]),
                provenance=list(data.get("provenance", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise VerificationError(f"malformed certificate: {exc}") from exc


def _check_header(data: dict[str, Any], kind: str) -> None:
    if data.get("schema") != SCHEMA_VERSION:
        raise VerificationError(f"schema: expected {SCHEMA_VERSION}, got {data.get('schema')!r}")
    if data.get("kind") != kind:
        raise VerificationError(f"kind: expected {kind!r}, got {data.get('kind')!r}")


def load_certificate(data: dict[str, Any] | str):
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind == "R-bound":
        return RBoundCert.from_json(data)
    if kind == "N-bound":
        return NBoundCert.from_json(data)
    if kind == "shearer":
        return ShearerCert.from_json(data)
    raise VerificationError(f"unknown certificate kind {kind!r}")


# -- verification ----------------------------------------------------------


def verify_r_cert(cert: RBoundCert) -> None:
    """Re-derive every field of an R-bound certificate; raise on the first failure."""
    g = cert.graph
    if cert.n != g.order:
        raise VerificationError(f"order mismatch: n={cert.n} but graph has {g.order} vertices")
    minus_beta = -cert.beta
    min_eig = seidel_min_eigenvalue(g)
    if compare(min_eig, minus_beta) == Ordering.LT:
        raise VerificationError(
            f"eigenvalue threshold: smallest Seidel eigenvalue {float(min_eig):.12g} < -beta = {float(minus_beta):.12g}")
    if compare(min_eig, cert.min_eig) != Ordering.EQ:
        raise VerificationError("min eigenvalue mismatch")
    mult = seidel_eigen_multiplicity(g, minus_beta)
    if mult != cert.multiplicity:
        raise VerificationError(f"multiplicity mismatch: computed {mult}, stated {cert.multiplicity}")
    if cert.d != g.order - mult:
        raise VerificationError(f"rank mismatch: rank(S + beta I) = {g.order - mult}, stated d = {cert.d}")


def verify_n_cert(cert: NBoundCert) -> None:
    verify_r_cert(cert.witness)
    w = cert.witness
    if compare(cert.alpha, w.beta.reciprocal()) != Ordering.EQ:
        raise VerificationError("alpha mismatch: alpha must equal 1/beta of the witness")
    if cert.n != w.n:
        raise VerificationError(f"line count mismatch: n={cert.n}, witness n={w.n}")
    if cert.d < w.d:
        raise VerificationError(f"dimension: d={cert.d} is below the witness rank {w.d}")
    if cert.eta != Fraction(cert.n, cert.d) - 1:
        raise VerificationError(f"eta mismatch: expected {_frac_str(Fraction(cert.n, cert.d) - 1)}")


def verify_shearer_cert(cert: ShearerCert) -> None:
    from .constructions import spectral_radius

    g = cert.graph
    if not g.is_connected():
        raise VerificationError("shearer graph is not connected")
    if cert.epsilon <= 0:
        raise VerificationError("epsilon must be positive")
    rho = spectral_radius(g)
    if compare(rho, cert.rho) != Ordering.EQ:
        raise VerificationError("spectral radius mismatch")
    if compare(rho, cert.lam) == Ordering.GT:
        raise VerificationError("spectral radius above lambda")
    if compare(rho, cert.lam - cert.epsilon) != Ordering.GT:
        raise VerificationError("spectral radius not within epsilon of lambda")


def verify(cert) -> None:
    if isinstance(cert, dict):
        cert = load_certificate(cert)
    try:
        if isinstance(cert, RBoundCert):
            verify_r_cert(cert)
        elif isinstance(cert, NBoundCert):
            verify_n_cert(cert)
        elif isinstance(cert, ShearerCert):
            verify_shearer_cert(cert)
        else:
            raise VerificationError(f"cannot verify {type(cert).__name__}")
    except VerificationError:
        raise
    except (EquiangularError, ValueError, ArithmeticError) as exc:
        raise VerificationError(f"verification aborted: {exc}") from exc


__all__ = [
    "IntPoly",
    "NBoundCert",
    "RBoundCert",
    "SCHEMA_VERSION",
    "ShearerCert",
    "load_certificate",
    "verify",
    "verify_n_cert",
    "verify_r_cert",
    "verify_shearer_cert",
]
