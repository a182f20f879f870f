"""Real algebraic numbers as (square-free polynomial, isolating interval).

Every decision here (sign, comparison, root membership) is made with Sturm
sequences and interval bisection over the rationals. Floating point is used
only in ``__float__``.

An ``AlgebraicNumber`` holds a primitive square-free defining polynomial and
either an exact rational point ``lo == hi`` (the number is rational) or an
open interval ``(lo, hi)`` whose endpoints are not roots and which contains
exactly one root. The interval is a refinement cache: refining it does not
change the number, so instances behave as values.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from .poly import IntPoly, poly_gcd

Rational = Union[int, Fraction]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence of ``p`` (primitive scaling keeps every sign intact)."""
    chain = [p, p.derivative()]
    if chain[1].is_zero():
        return chain[:1]
    while True:
        a, b = chain[-2], chain[-1]
        _, r, m = a.pseudo_divmod(b)
        if r.is_zero():
            break
        # lc(b)**m * a = q*b + r, so rem(a, b) has the sign of r / lc(b)**m.
        if b.lc < 0 and m % 2 == 1:
            r = -r
        g = r.content()
        chain.append(IntPoly(-c // g for c in r.coeffs))
    return chain


def _sign_changes(signs) -> int:
    last = 0
    count = 0
    for s in signs:
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _variations_at(chain: list[IntPoly], x: Fraction) -> int:
    return _sign_changes(q.sign_at(x) for q in chain)


def _variations_at_inf(chain: list[IntPoly], positive: bool) -> int:
    signs = []
    for q in chain:
        s = (q.lc > 0) - (q.lc < 0)
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _sign_changes(signs)


def count_roots(p: IntPoly, lo: Fraction | None, hi: Fraction | None,
                chain: list[IntPoly] | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``None`` endpoints stand for -inf / +inf.
    """
    if p.degree <= 0:
        return 0
    if chain is None:
        chain = sturm_chain(p)
    vlo = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, lo)
    vhi = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, hi)
    return vlo - vhi


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every root lies strictly inside ``(-B, B)``."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return Fraction(m, lc) + 1


# ---------------------------------------------------------------------------
# AlgebraicNumber


class AlgebraicNumber:
    __slots__ = ("poly", "_lo", "_hi", "_chain")

    def __init__(self, poly: IntPoly, lo: Rational, hi: Rational, *, _trusted: bool = False):
        lo, hi = Fraction(lo), Fraction(hi)
        if _trusted:
            self.poly, self._lo, self._hi, self._chain = poly, lo, hi, None
            return
        if poly.degree < 1:
            raise ValueError("defining polynomial must have positive degree")
        if lo > hi:
            raise ValueError("empty isolating interval")
        p = poly.squarefree()
        self._chain = None
        if lo == hi:
            if p.sign_at(lo) != 0:
                raise ValueError(f"{lo} is not a root of {poly}")
            self._set_rational(lo)
            return
        self.poly, self._lo, self._hi = p, lo, hi
        n_open = count_roots(p, lo, hi, self._sturm()) - (p.sign_at(hi) == 0)
        if n_open != 1:
            raise ValueError("interval does not isolate exactly one root")
        self._shrink_off_endpoints()
        if self.poly.degree == 1:
            self._set_rational(Fraction(-self.poly[0], self.poly[1]))
        else:
            self._detect_rational()

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rational(cls, q: Rational) -> AlgebraicNumber:
        q = Fraction(q)
        return cls(IntPoly((-q.numerator, q.denominator)), q, q, _trusted=True)

    @classmethod
    def sqrt(cls, q: Rational) -> AlgebraicNumber:
        """Positive square root of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative number")
        if q == 0:
            return cls.from_rational(0)
        p = IntPoly((-q.numerator, 0, q.denominator))
        return cls.largest_root(p)

    @classmethod
    def real_roots(cls, p: IntPoly) -> list[AlgebraicNumber]:
        """All distinct real roots of ``p`` in increasing order."""
        if p.is_zero():
            raise ValueError("zero polynomial has no isolated roots")
        q = p.squarefree()
        if q.degree < 1:
            return []
        chain = sturm_chain(q)
        b = root_bound(q)
        out: list[AlgebraicNumber] = []
        stack = [(-b, b, count_roots(q, -b, b, chain))]
        while stack:
            lo, hi, k = stack.pop()
            if k == 0:
                continue
            if k == 1:
                out.append(cls._isolated(q, lo, hi, chain))
                continue
            mid = (lo + hi) / 2
            left = count_roots(q, lo, mid, chain)
            stack.append((mid, hi, k - left))
            stack.append((lo, mid, left))
        out.sort(key=lambda a: a._hi)
        return out

    @classmethod
    def largest_root(cls, p: IntPoly) -> AlgebraicNumber:
        roots = cls._extreme_roots(p, largest=True)
        if roots is None:
            raise ValueError(f"{p} has no real roots")
        return roots

    @classmethod
    def smallest_root(cls, p: IntPoly) -> AlgebraicNumber:
        roots = cls._extreme_roots(p, largest=False)
        if roots is None:
            raise ValueError(f"{p} has no real roots")
        return roots

    @classmethod
    def _extreme_roots(cls, p: IntPoly, largest: bool):
        q = p.squarefree()
        if q.degree < 1:
            return None
        chain = sturm_chain(q)
        b = root_bound(q)
        lo, hi = -b, b
        k = count_roots(q, lo, hi, chain)
        if k == 0:
            return None
        # Bisect, always keeping the extreme root inside (lo, hi].
        while k > 1:
            mid = (lo + hi) / 2
            upper = count_roots(q, mid, hi, chain)
            if largest:
                if upper >= 1:
                    lo, k = mid, upper
                else:
                    hi = mid
            else:
                if k - upper >= 1:
                    hi, k = mid, k - upper
                else:
                    lo = mid
        return cls._isolated(q, lo, hi, chain)

    @classmethod
    def _isolated(cls, q: IntPoly, lo: Fraction, hi: Fraction, chain) -> AlgebraicNumber:
        """Build from a square-free ``q`` with exactly one root in ``(lo, hi]``."""
        while True:
            if q.sign_at(hi) == 0:
                return cls.from_rational(hi)
            if q.sign_at(lo) != 0:
                break
            mid = (lo + hi) / 2
            if count_roots(q, lo, mid, chain) == 1:
                hi = mid
            else:
                lo = mid
        a = cls(q, lo, hi, _trusted=True)
        a._chain = chain
        if q.degree == 1:
            a._set_rational(Fraction(-q[0], q[1]))
        else:
            a._detect_rational()
        return a

    # -- internal state -------------------------------------------------

    def _set_rational(self, q: Fraction) -> None:
        self.poly = IntPoly((-q.numerator, q.denominator))
        self._lo = self._hi = q
        self._chain = None

    def _sturm(self) -> list[IntPoly]:
        if self._chain is None:
            self._chain = sturm_chain(self.poly)
        return self._chain

    def _shrink_off_endpoints(self) -> None:
        """Exactly one root lies in the open interval; move the endpoints off roots."""
        p = self.poly
        while p.sign_at(self._lo) == 0 or p.sign_at(self._hi) == 0:
            mid = (self._lo + self._hi) / 2
            if p.sign_at(mid) == 0:
                self._set_rational(mid)
                return
            if count_roots(p, self._lo, mid, self._sturm()) == 1:
                self._hi = mid
            else:
                self._lo = mid

    def _detect_rational(self) -> None:
        """Collapse to an exact point if the isolated root is rational.

        A rational root of a primitive integer polynomial has the form k/lc,
        so once the interval is shorter than 1/|lc| there is one candidate.
        """
        if self.is_rational:
            return
        lc = abs(self.poly.lc)
        self.refine_to(Fraction(1, 2 * lc))
        if self.is_rational:
            return
        k = -((-self._lo.numerator * lc) // self._lo.denominator)  # ceil(lo * lc)
        cand = Fraction(k, lc)
        if cand < self._hi and self.poly.sign_at(cand) == 0:
            self._set_rational(cand)

    # -- queries --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._lo == self._hi

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return self._lo

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    @property
    def degree(self) -> int:
        return self.poly.degree

    def refine(self) -> None:
        """Halve the isolating interval."""
        if self.is_rational:
            return
        p = self.poly
        mid = (self._lo + self._hi) / 2
        s_mid = p.sign_at(mid)
        if s_mid == 0:
            self._set_rational(mid)
        elif s_mid == p.sign_at(self._lo):
            self._lo = mid
        else:
            self._hi = mid

    def refine_to(self, width: Fraction) -> None:
        while not self.is_rational and self._hi - self._lo > width:
            self.refine()

    def approx(self, width: Rational = Fraction(1, 10**20)) -> Fraction:
        self.refine_to(Fraction(width))
        return (self._lo + self._hi) / 2

    def __float__(self):
        return float(self.approx(Fraction(1, 2**60)))

    def is_root_of(self, q: IntPoly) -> bool:
        if q.is_zero():
            return True
        if self.is_rational:
            return q.sign_at(self._lo) == 0
        g = poly_gcd(self.poly, q)
        if g.degree < 1:
            return False
        # g divides poly, so its only candidate root in (lo, hi) is self.
        return count_roots(g, self._lo, self._hi) >= 1

    def sign_of(self, q: IntPoly) -> int:
        """Exact sign of ``q`` evaluated at this number."""
        if q.is_zero():
            return 0
        if self.is_rational:
            return q.sign_at(self._lo)
        if q.degree >= self.poly.degree:
            r = q.rem(self.poly)
            q = IntPoly.from_fractions(r) if r else IntPoly()
            if q.is_zero():
                return 0
        if q.degree == 0:
            return (q.lc > 0) - (q.lc < 0)
        if self.is_root_of(q):
            return 0
        chain = sturm_chain(q.squarefree())
        while count_roots(chain[0], self._lo, self._hi, chain) or q.sign_at(self._hi) == 0:
            self.refine()
            if self.is_rational:
                return q.sign_at(self._lo)
        return q.sign_at(self._hi)

    # -- comparison -----------------------------------------------------

    def compare(self, other: AlgebraicNumber | Rational) -> Ordering:
        b = _coerce(other)
        a = self
        if a.is_rational and b.is_rational:
            x, y = a._lo, b._lo
            return Ordering((x > y) - (x < y))
        if a.is_rational:
            return Ordering(-b._compare_to_rational(a._lo))
        if b.is_rational:
            return a._compare_to_rational(b._lo)
        while True:
            if a._hi <= b._lo:
                return Ordering.LT
            if b._hi <= a._lo:
                return Ordering.GT
            lo = max(a._lo, b._lo)
            hi = min(a._hi, b._hi)
            g = poly_gcd(a.poly, b.poly)
            if g.degree >= 1 and count_roots(g, lo, hi) >= 1:
                return Ordering.EQ
            # Distinct: refining both eventually separates them.
            a.refine()
            b.refine()
            if a.is_rational or b.is_rational:
                return a.compare(b)

    def _compare_to_rational(self, q: Fraction) -> Ordering:
        if q <= self._lo:
            return Ordering.GT
        if q >= self._hi:
            return Ordering.LT
        s = self.poly.sign_at(q)
        if s == 0:
            # The interval holds exactly one root, and it is q.
            self._set_rational(q)
            return Ordering.EQ
        if s == self.poly.sign_at(self._lo):
            self._lo = q
            return Ordering.GT
        self._hi = q
        return Ordering.LT

    def __eq__(self, other):
        try:
            return self.compare(other) == Ordering.EQ
        except TypeError:
            return NotImplemented

    __hash__ = None  # equal numbers may carry different intervals

    def __lt__(self, other):
        return self.compare(other) == Ordering.LT

    def __le__(self, other):
        return self.compare(other) != Ordering.GT

    def __gt__(self, other):
        return self.compare(other) == Ordering.GT

    def __ge__(self, other):
        return self.compare(other) != Ordering.LT

    # -- arithmetic with rationals --------------------------------------

    def affine(self, u: Rational, v: Rational) -> AlgebraicNumber:
        """The number ``u*self + v`` for rationals ``u != 0`` and ``v``."""
        u, v = Fraction(u), Fraction(v)
        if u == 0:
            return AlgebraicNumber.from_rational(v)
        if self.is_rational:
            return AlgebraicNumber.from_rational(u * self._lo + v)
        q = self.poly.compose_affine(u, v)
        lo, hi = u * self._lo + v, u * self._hi + v
        if lo > hi:
            lo, hi = hi, lo
        return AlgebraicNumber(q, lo, hi, _trusted=True)

    def __neg__(self):
        return self.affine(-1, 0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.affine(1, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.affine(1, -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.affine(-1, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.affine(other, 0)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.affine(1 / Fraction(other), 0)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.reciprocal() * other
        return NotImplemented

    def reciprocal(self) -> AlgebraicNumber:
        if self.is_rational:
            if self._lo == 0:
                raise ZeroDivisionError("reciprocal of zero")
            return AlgebraicNumber.from_rational(1 / self._lo)
        while self._lo < 0 < self._hi:
            if self.poly.sign_at(Fraction(0)) == 0:
                raise ZeroDivisionError("reciprocal of zero")
            self.refine()
        q = self.poly.reverse().primitive()
        return AlgebraicNumber(q, 1 / self._hi, 1 / self._lo, _trusted=True)

    # -- serialisation --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "interval": [_frac_json(self._lo), _frac_json(self._hi)],
        }

    @classmethod
    def from_json(cls, data: dict) -> AlgebraicNumber:
        poly = IntPoly.from_json(data["poly"])
        lo, hi = (_frac_from_json(x) for x in data["interval"])
        return cls(poly, lo, hi)

    def __repr__(self):
        if self.is_rational:
            return f"AlgebraicNumber({self._lo})"
        return f"AlgebraicNumber(root of {self.poly} in ({self._lo}, {self._hi}) ~ {float(self.copy()):.12g})"

    def __str__(self):
        if self.is_rational:
            return str(self._lo)
        return f"{float(self.copy()):.12g} (root of {self.poly})"

    def copy(self) -> AlgebraicNumber:
        a = AlgebraicNumber(self.poly, self._lo, self._hi, _trusted=True)
        a._chain = self._chain
        return a


def _coerce(x) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicNumber.from_rational(x)
    raise TypeError(f"cannot compare AlgebraicNumber with {type(x).__name__}")


def as_algebraic(x) -> AlgebraicNumber:
    """Coerce ints, Fractions and AlgebraicNumbers to an AlgebraicNumber."""
    return _coerce(x)


def compare(a, b) -> Ordering:
    return _coerce(a).compare(b)


def _frac_json(q: Fraction) -> list[str]:
    return [str(q.numerator), str(q.denominator)]


def _frac_from_json(x) -> Fraction:
    if isinstance(x, (list, tuple)):
        return Fraction(int(x[0]), int(x[1]))
    return Fraction(x)


def root_multiplicity(f: IntPoly, a: AlgebraicNumber) -> int:
    """Multiplicity of ``a`` as a root of ``f`` (0 when it is not a root).

    Repeatedly divides ``f`` by the square-free common factor that still
    vanishes at ``a``; no factorisation into irreducibles is needed.
    """
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial is undefined")
    if a.is_rational:
        q = a.as_fraction()
        lin = IntPoly((-q.numerator, q.denominator))
        m = 0
        while f.degree >= 1:
            try:
                f = f.exact_div(lin)
            except ArithmeticError:
                break
            m += 1
        return m
    m = 0
    carrier = a.poly
    while f.degree >= 1:
        g = poly_gcd(f, carrier)
        if g.degree < 1 or count_roots(g, a._lo, a._hi) == 0:
            break
        m += 1
        carrier = g
        f = f.primitive().exact_div(g)
    return m
