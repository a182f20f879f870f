"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending order: ``coeffs[i]`` multiplies ``x**i``.
All arithmetic is exact. GCDs are taken over the rationals and returned as
primitive integer polynomials with a positive leading coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Sequence


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficients required, got {a!r}")
        self.coeffs = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def from_fractions(cls, coeffs: Sequence[Fraction]) -> IntPoly:
        """Clear denominators; the result is a positive multiple of the input."""
        den = 1
        for c in coeffs:
            den = den * Fraction(c).denominator // igcd(den, Fraction(c).denominator)
        return cls(int(Fraction(c) * den) for c in coeffs)

    # -- basic properties -----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        return reduce(igcd, self.coeffs, 0)

    def primitive(self) -> IntPoly:
        """Primitive part, normalised to a positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        raise TypeError(f"cannot combine IntPoly with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Sign of the value at a rational point, using integer arithmetic only."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        acc = 0
        dpow = 1
        # Homogenised Horner: sum c_i num^i den^(deg-i); den > 0 keeps the sign.
        for c in reversed(self.coeffs):
            acc = acc * num + c * dpow
            dpow *= den
        return (acc > 0) - (acc < 0)

    def compose_affine(self, u: Fraction, v: Fraction) -> IntPoly:
        """Primitive integer polynomial vanishing at ``u*r + v`` for every root ``r``.

        That is, a positive multiple of ``p((y - v) / u)``.
        """
        u, v = Fraction(u), Fraction(v)
        if u == 0:
            raise ZeroDivisionError("affine map with zero slope")
        # y -> (y - v)/u, expanded by Horner over Q[y].
        lin = [-v / u, 1 / u]
        acc: list[Fraction] = [Fraction(0)]
        for c in reversed(self.coeffs):
            nxt = [Fraction(0)] * (len(acc) + 1)
            for i, a in enumerate(acc):
                nxt[i] += a * lin[0]
                nxt[i + 1] += a * lin[1]
            nxt[0] += c
            acc = nxt
        return IntPoly.from_fractions(acc).primitive()

    def reverse(self) -> IntPoly:
        """``x**deg * p(1/x)``; roots are the reciprocals of the nonzero roots."""
        c = list(self.coeffs)
        while c and c[0] == 0:
            c.pop(0)
        return IntPoly(reversed(c))

    def negate_x(self) -> IntPoly:
        """``p(-x)``."""
        return IntPoly(-c if i & 1 else c for i, c in enumerate(self.coeffs))

    # -- division -------------------------------------------------------

    def pseudo_divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly, int]:
        """Return ``(q, r, m)`` with ``lc(other)**m * self == q*other + r``."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        if len(r) - 1 < db:
            return IntPoly(), IntPoly(r), 0
        m = len(r) - 1 - db + 1
        q = [0] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            top = r[k + db]
            q = [c * lb for c in q]
            r = [c * lb for c in r]
            q[k] += top
            if top:
                for j in range(db + 1):
                    r[k + j] -= top * b[j]
        return IntPoly(q), IntPoly(r[:db]), m

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient when ``other`` divides ``self`` with integral quotient."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return IntPoly()
        q = [0] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            top = r[k + db]
            if top % lb:
                raise ArithmeticError("inexact polynomial division")
            c = top // lb
            q[k] = c
            if c:
                for j in range(db + 1):
                    r[k + j] -= c * b[j]
        if any(r[:db]):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(q)

    def divides(self, other: IntPoly) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def rem(self, other: IntPoly) -> list[Fraction]:
        """Remainder over Q as a list of Fractions (ascending)."""
        r = [Fraction(c) for c in self.coeffs]
        db = other.degree
        lb = other.lc
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            if c:
                for j in range(db + 1):
                    r[k + j] -= c * other.coeffs[j]
        return r[:db] if db > 0 else []

    # -- gcd and friends ------------------------------------------------

    def gcd(self, other: IntPoly) -> IntPoly:
        return poly_gcd(self, other)

    def squarefree(self) -> IntPoly:
        """Primitive square-free part (product of distinct irreducible factors)."""
        if self.degree <= 0:
            return IntPoly((1,)) if self.coeffs else IntPoly()
        g = poly_gcd(self, self.derivative())
        return self.primitive().exact_div(g) if g.degree > 0 else self.primitive()

    def mod2(self) -> GF2Poly:
        return GF2Poly(sum(1 << i for i, c in enumerate(self.coeffs) if c & 1))

    # -- presentation ---------------------------------------------------

    def __repr__(self):
        return f"IntPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "x" if i == 1 else f"x^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPoly:
        return cls(int(c) for c in data)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """GCD over Q via the primitive polynomial remainder sequence."""
    if not a.coeffs:
        return b.primitive()
    if not b.coeffs:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b.coeffs:
        if b.degree == 0:
            return IntPoly((1,))
        _, r, _ = a.pseudo_divmod(b)
        a, b = b, r.primitive()
    return a.primitive()


class GF2Poly:
    """Polynomial over GF(2) packed into an int: bit ``i`` is the ``x**i`` coefficient."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        self.bits = bits

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def __eq__(self, other):
        return isinstance(other, GF2Poly) and self.bits == other.bits

    def __hash__(self):
        return hash(("gf2", self.bits))

    def __add__(self, other):
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        return GF2Poly(clmul(self.bits, other.bits))

    def __pow__(self, k: int):
        result, base = 1, self.bits
        while k:
            if k & 1:
                result = clmul(result, base)
            base = clmul(base, base)
            k >>= 1
        return GF2Poly(result)

    def __repr__(self):
        if not self.bits:
            return "GF2Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            if self.bits >> i & 1:
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return "GF2Poly(" + " + ".join(terms) + ")"


def clmul(a: int, b: int) -> int:
    """Carry-less product (multiplication in GF(2)[x])."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def cldivmod(a: int, b: int) -> tuple[int, int]:
    """Division with remainder in GF(2)[x]."""
    if not b:
        raise ZeroDivisionError("GF(2) polynomial division by zero")
    q = 0
    db = b.bit_length()
    while a and a.bit_length() >= db:
        s = a.bit_length() - db
        q ^= 1 << s
        a ^= b << s
    return q, a
