"""Certificate-producing constructions.

* ``certify``: rank certificate for a single graph and threshold beta.
* ``shearer_graph``: a caterpillar whose spectral radius lies in
  (lambda - eps, lambda], for any lambda >= sqrt(2 + sqrt 5).
* ``union_cert``: t disjoint copies of a connected graph at beta = 2*rho + 1.
* ``line_graph_complement_cert``: complements of line graphs of cubic graphs.
* ``n_from_r`` / ``theorem1_pipeline``: turn rank bounds into line counts.

Everything is decided by exact arithmetic; floats appear only in messages.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import gcd

from .certificates import NBoundCert, RBoundCert, ShearerCert
from .errors import (
    BelowThreshold,
    BudgetExhausted,
    DimensionTooSmall,
    Disconnected,
    EigenvalueBelowThreshold,
    InvalidParameters,
    NotCubic,
    VerificationError,
    WrongOrder,
)
from .exact import AlgebraicNumber, IntPoly, Ordering, as_algebraic, charpoly, compare
from .graph import Graph, complement, disjoint_union, line_graph
from .seidel import seidel_eigen_multiplicity, seidel_min_eigenvalue

DEFAULT_MAX_STEPS = 200_000


def spectral_radius(g: Graph) -> AlgebraicNumber:
    """Largest adjacency eigenvalue, as an exact algebraic number."""
    return AlgebraicNumber.largest_root(charpoly(g.adjacency_matrix()))


def shearer_threshold() -> AlgebraicNumber:
    """sqrt(2 + sqrt 5), the largest root of x^4 - 4x^2 - 1."""
    return AlgebraicNumber.largest_root(IntPoly((-1, 0, -4, 0, 1)))


def tau_threshold() -> AlgebraicNumber:
    """1 / (1 + 2*sqrt(2 + sqrt 5)), the largest admissible tau."""
    return shearer_threshold().affine(2, 1).reciprocal()


# -- rank certificates ------------------------------------------------------


def certify(g: Graph, beta, provenance: list[str] | None = None) -> RBoundCert:
    """Certificate that R_beta(n) <= rank(S(g) + beta I)."""
    beta = as_algebraic(beta)
    minus_beta = -beta
    min_eig = seidel_min_eigenvalue(g)
    if compare(min_eig, minus_beta) == Ordering.LT:
        raise EigenvalueBelowThreshold(
            f"smallest Seidel eigenvalue {float(min_eig):.12g} is below -beta = {float(minus_beta):.12g}")
    mult = seidel_eigen_multiplicity(g, minus_beta)
    return RBoundCert(
        graph=g, beta=beta, n=g.order, d=g.order - mult, min_eig=min_eig,
        multiplicity=mult, provenance=list(provenance or ["certify"]),
    )


def union_cert(g: Graph, t: int) -> RBoundCert:
    """Certificate for t disjoint copies of connected ``g`` at beta = 2*rho(g) + 1."""
    if not isinstance(t, int) or t < 2:
        raise InvalidParameters("union_cert needs t >= 2 copies")
    if not g.is_connected():
        raise Disconnected("union_cert needs a connected graph")
    beta = spectral_radius(g).affine(2, 1)
    cert = certify(disjoint_union(g, t), beta, provenance=["union_cert"])
    if cert.d > t * g.order - t + 1:
        raise VerificationError(f"union bound violated: d={cert.d} > {t * g.order - t + 1}")
    return cert


def line_graph_complement_cert(g: Graph) -> RBoundCert:
    """Certificate for the complement of the line graph of a cubic graph.

    For a cubic graph on 4k+2 vertices (k >= 2) the expected smallest Seidel
    eigenvalue is 6 - 6k with multiplicity one. The computed multiplicity is
    reported; a value other than one is recorded in ``flags``.
    """
    if not g.is_regular(3):
        raise NotCubic("graph is not 3-regular")
    if g.order % 4 != 2 or g.order < 10:
        raise WrongOrder(f"order {g.order} is not 4k+2 with k >= 2")
    k = (g.order - 2) // 4
    h = complement(line_graph(g))
    cert = certify(h, 6 * k - 6, provenance=["line_graph_complement_cert"])
    if cert.multiplicity != 1:
        cert.flags.append(f"multiplicity of {6 - 6 * k} is {cert.multiplicity}, expected 1")
    if compare(cert.min_eig, 6 - 6 * k) != Ordering.EQ:
        cert.flags.append(f"smallest eigenvalue is {float(cert.min_eig):.12g}, expected {6 - 6 * k}")
    return cert


def n_from_r(cert: RBoundCert, target_d: int) -> NBoundCert:
    """Convert R_beta(n) <= d into N_{1/beta}(target_d) >= n."""
    if target_d < cert.d:
        raise DimensionTooSmall(f"target dimension {target_d} is below the certified rank {cert.d}")
    return NBoundCert(
        alpha=cert.beta.reciprocal(), d=target_d, n=cert.n, witness=cert,
        eta=Fraction(cert.n, target_d) - 1,
        provenance=list(cert.provenance) + ["n_from_r"],
    )


def theorem1_pipeline(tau, i: int, t: int) -> NBoundCert:
    """Lines with cosine close to ``tau`` and more lines than dimensions.

    lambda = (1/tau - 1)/2, a caterpillar with rho in (lambda - 2^-i, lambda],
    then ``t`` copies of it certified at beta = 2*rho + 1.
    """
    tau = as_algebraic(tau)
    if not isinstance(i, int) or i < 1:
        raise InvalidParameters("i must be a positive integer")
    if not isinstance(t, int) or t < 2:
        raise InvalidParameters("t must be an integer >= 2")
    if compare(tau, 0) != Ordering.GT:
        raise InvalidParameters("tau must be positive")
    lam = tau.reciprocal().affine(Fraction(1, 2), Fraction(-1, 2))
    if compare(lam, shearer_threshold()) == Ordering.LT:
        raise BelowThreshold(
            f"tau = {float(tau):.12g} exceeds 1/(1 + 2*sqrt(2 + sqrt 5)) ~ {float(tau_threshold()):.12g}")
    g = shearer_graph(lam, Fraction(1, 2**i))
    cert = union_cert(g, t)
    cert.provenance = ["shearer_graph", "union_cert"]
    out = n_from_r(cert, cert.d)
    out.provenance = ["theorem1_pipeline", "shearer_graph", "union_cert", "n_from_r"]
    return out


# -- arithmetic in Q(lambda) -----------------------------------------------


class _Field:
    """Exact arithmetic and signs in Q[x]/(p) evaluated at x = lambda.

    Elements are tuples of Fraction coefficients in ascending degree, reduced
    modulo the defining polynomial of lambda. Only ring operations are used
    (quotients are carried as numerator/denominator pairs), so the defining
    polynomial need not be irreducible.
    """

    def __init__(self, lam: AlgebraicNumber):
        self.lam = lam.copy()
        if lam.is_rational:
            self.mod = (-lam.as_fraction(), Fraction(1))
        else:
            lc = Fraction(lam.poly.lc)
            self.mod = tuple(Fraction(c) / lc for c in lam.poly.coeffs)
        self.deg = len(self.mod) - 1

    def const(self, c) -> tuple:
        return self.reduce([Fraction(c)])

    def gen(self) -> tuple:
        return self.reduce([Fraction(0), Fraction(1)])

    def reduce(self, a) -> tuple:
        a = list(a)
        d = self.deg
        for k in range(len(a) - 1, d - 1, -1):
            c = a[k]
            if c:
                for j in range(d):
                    a[k - d + j] -= c * self.mod[j]
            a[k] = Fraction(0)
        a = a[:d] + [Fraction(0)] * (d - len(a))
        return tuple(a)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self.reduce(out)

    def sign(self, a) -> int:
        if not any(a):
            return 0
        return self.lam.sign_of(IntPoly.from_fractions(a))


def _normalize(f: _Field, num, den):
    """Rescale a fraction num/den by a positive rational to keep entries small."""
    lcm = 1
    for c in num + den:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in num + den]
    g = 0
    for v in ints:
        g = gcd(g, v)
    scale = Fraction(lcm, g or 1)
    return tuple(c * scale for c in num), tuple(c * scale for c in den)


class _Quadratic:
    """Fixed points y_- <= y_+ of y -> x - 1/y for an element x >= 2 of the field."""

    def __init__(self, f: _Field, x):
        self.f, self.x = f, x

    def _parts(self, y):
        f = self.f
        num, den = y
        # sign(y - x/2) and sign(y^2 - x*y + 1), denominators cleared.
        half = f.sign(f.sub(f.add(num, num), f.mul(self.x, den))) * f.sign(den)
        quad = f.sign(f.add(f.sub(f.mul(num, num), f.mul(self.x, f.mul(num, den))), f.mul(den, den)))
        return half, quad

    def at_least_lower(self, y) -> bool:
        half, quad = self._parts(y)
        return half >= 0 or quad <= 0

    def below_upper(self, y) -> bool:
        half, quad = self._parts(y)
        return not (half >= 0 and quad >= 0)


@dataclass
class ShearerResult:
    graph: Graph
    rho: AlgebraicNumber
    leaves: list[int]
    bare_prefix: int
    steps: int


def _caterpillar(leaves: list[int]) -> Graph:
    k = len(leaves)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, r in enumerate(leaves):
        for _ in range(r):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def shearer_construction(lam, eps, max_steps: int = DEFAULT_MAX_STEPS) -> ShearerResult:
    """Grow a caterpillar with lam - eps < rho <= lam.

    Pivots of the elimination along the spine, run at ``lam`` (values y) and at
    ``mu = lam - eps`` (values z), decide everything:

    * rho <= mu  iff every z is positive except possibly the last, which is >= 0;
    * a leaf is kept only while y >= y_-(lam), the smaller fixed point of
      y -> lam - 1/y, which keeps an infinite bare continuation below lam and
      hence rho <= lam;
    * growth stops at the first tree with rho > mu.

    At lam = sqrt(2 + sqrt 5) exactly the greedy can settle into a bare tail that
    never crosses mu. Trials with a leafless spine prefix of length m = 0, 1, ...
    are tried in turn; a trial is abandoned as soon as its tail is provably bare
    and its z value sits at or above y_-(mu).
    """
    lam = as_algebraic(lam)
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidParameters("epsilon must be positive")
    order = compare(lam, shearer_threshold())
    if order == Ordering.LT:
        raise BelowThreshold(f"lambda = {float(lam):.12g} is below sqrt(2 + sqrt 5) ~ 2.058171")
    at_threshold = order == Ordering.EQ

    f = _Field(lam)
    L = f.gen()
    mu = f.sub(L, f.const(eps))
    lam_fp = _Quadratic(f, L)
    mu_fp = _Quadratic(f, mu) if f.sign(f.sub(mu, f.const(2))) >= 0 else None
    L2, mu2 = f.mul(L, L), f.mul(mu, mu)

    def step(x, x2, prev, r):
        """Pivot x - r/x - 1/prev as a num/den pair (prev None for the first vertex)."""
        rr = f.const(r)
        if prev is None:
            return _normalize(f, f.sub(x2, rr), x)
        pn, pd = prev
        num = f.sub(f.mul(f.sub(x2, rr), pn), f.mul(x, pd))
        return _normalize(f, num, f.mul(x, pn))

    def sign_of_pair(p) -> int:
        return f.sign(p[0]) * f.sign(p[1])

    steps = 0
    for m in count():
        leaves: list[int] = []
        y_prev = z_prev = None
        done = False
        abandoned = False
        while not done:
            steps += 1
            if steps > max_steps:
                raise BudgetExhausted(f"no graph found within {max_steps} spine steps")
            if z_prev is not None and sign_of_pair(z_prev) <= 0:
                # z_prev == 0: the previous tree had rho == mu exactly, any extension exceeds it.
                leaves.append(0)
                done = True
                break
            r = 0
            y = step(L, L2, y_prev, 0)
            z = step(mu, mu2, z_prev, 0)
            if sign_of_pair(z) < 0:
                leaves.append(0)
                done = True
                break
            if len(leaves) >= m:
                while True:
                    y_try = step(L, L2, y_prev, r + 1)
                    if not lam_fp.at_least_lower(y_try):
                        break
                    r += 1
                    y = y_try
                    z = step(mu, mu2, z_prev, r)
                    if sign_of_pair(z) < 0:
                        done = True
                        break
            leaves.append(r)
            if done:
                break
            if (at_threshold and len(leaves) > m and lam_fp.below_upper(y)
                    and mu_fp is not None and mu_fp.at_least_lower(z)):
                abandoned = True
                break
            y_prev, z_prev = y, z
        if abandoned:
            continue
        g = _caterpillar(leaves)
        rho = spectral_radius(g)
        if compare(rho, lam) == Ordering.GT or compare(rho, lam - eps) != Ordering.GT:
            raise VerificationError(
                f"caterpillar {leaves} failed exact check: rho = {float(rho):.15g}")
        return ShearerResult(graph=g, rho=rho, leaves=leaves, bare_prefix=m, steps=steps)
    raise AssertionError("unreachable")


def shearer_graph(lam, eps, max_steps: int = DEFAULT_MAX_STEPS) -> Graph:
    """A connected graph G with lam - eps < rho(G) <= lam."""
    return shearer_construction(lam, eps, max_steps).graph


def shearer_cert(lam, eps, max_steps: int = DEFAULT_MAX_STEPS) -> ShearerCert:
    lam = as_algebraic(lam)
    res = shearer_construction(lam, eps, max_steps)
    return ShearerCert(graph=res.graph, lam=lam, epsilon=Fraction(eps), rho=res.rho,
                       provenance=["shearer_graph"])
