"""Dense univariate polynomials over an exact coefficient ring, and rational
functions over Q.

``Poly`` is generic: coefficients only need exact +, -, *, equality with 0/1,
and (where a field is required) division.  In this kernel the coefficient
rings are Fraction, Cyclo, and Poly-over-Fraction never nests further.

``RatFunc`` keeps the canonical form: gcd(num, den) trivial and den monic, so
``==`` on the stored representation is cross-multiplication equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm

from .errors import ExactDivisionError, PoleError
from .scalars import Cyclo


class Poly:
    """Coefficients lowest degree first; the zero polynomial stores ()."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        """The generator of Q[x] (rational coefficients)."""
        return cls((Fraction(0), Fraction(1)))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ExactDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        if not self.coeffs:
            return hash(0)
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        if isinstance(other, (int, Fraction, Cyclo)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly((Fraction(1),))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return Poly((other,))
        return None

    # -- evaluation, calculus ------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    # -- field-coefficient operations -----------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        return self * inv

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        if other.is_zero:
            raise ExactDivisionError("polynomial division by zero")
        lead = other.leading
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            if len(rem) < len(other.coeffs) + k:
                continue
            c = rem[len(other.coeffs) + k - 1] * inv
            if c == 0:
                continue
            quot[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def _clear_to_int(p: Poly):
    """Primitive integer coefficient list of a Fraction-coefficient poly."""
    den = 1
    for c in p.coeffs:
        den = _int_lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    content = 0
    for c in ints:
        content = _int_gcd(content, abs(c))
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _int_primitive(ints):
    content = 0
    for c in ints:
        content = _int_gcd(content, abs(c))
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over a coefficient field.

    Over Q a primitive polynomial-remainder sequence on integer-cleared
    coefficients keeps intermediate growth down; other fields use plain
    monic Euclid (only small degrees reach that path here).
    """
    if p.is_zero and q.is_zero:
        raise ExactDivisionError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    rational = all(isinstance(c, (int, Fraction)) for c in p.coeffs + q.coeffs)
    if not rational:
        a, b = p, q
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()
    a, b = _clear_to_int(p), _clear_to_int(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b, made primitive
        r = list(a)
        lead = b[-1]
        shift = len(r) - len(b)
        r = [c * lead ** (shift + 1) for c in r]
        while len(r) >= len(b) and r:
            factor, rem0 = divmod(r[-1], b[-1])
            assert rem0 == 0
            k = len(r) - len(b)
            for i, c in enumerate(b):
                r[k + i] -= factor * c
            while r and r[-1] == 0:
                r.pop()
        a, b = b, _int_primitive(r)
    return Poly([Fraction(c) for c in a]).monic()


def poly_divides(d: Poly, p: Poly) -> bool:
    """Exact divisibility test over a field."""
    if d.is_zero:
        return p.is_zero
    return (p % d).is_zero


class RatFunc:
    """Rational function num/den over Q in canonical form (den monic, coprime)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly((Fraction(num),))
        if den is None:
            den = Poly((Fraction(1),))
        elif not isinstance(den, Poly):
            den = Poly((Fraction(den),))
        if den.is_zero:
            raise ExactDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly(), Poly((Fraction(1),))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                inv = Fraction(1) / Fraction(lead)
                num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def from_scalar(cls, q) -> "RatFunc":
        return cls(Poly((Fraction(q),)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.from_scalar(other)
        if isinstance(other, Poly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ExactDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if self.is_zero:
                raise ExactDivisionError("negative power of zero")
            return RatFunc(self.den ** (-exponent), self.num ** (-exponent))
        return RatFunc(self.num ** exponent, self.den ** exponent)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_scalar(other)
        return None

    def eval(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole at x = {x}", at=x)
        return self.num(x) / d

def ratfunc_eval(f: RatFunc, x) -> Fraction:
    """Exact evaluation; raises PoleError at zeros of the denominator."""
    return f.eval(x)
