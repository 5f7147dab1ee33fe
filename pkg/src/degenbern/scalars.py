"""Exact scalars: arbitrary-precision rationals and polynomials in λ.

Everything in this package is computed over one of two coefficient
domains: plain rationals with λ fixed to a rational value, or the
polynomial ring Q[λ] with λ kept symbolic.  A :class:`Domain` object
pins that choice and is threaded through every series and table
constructor.  Values from different domains never meet inside one
computation; trying to mix them raises :class:`DomainError`.

No floats anywhere.  Equality of results is always exact equality of
reduced rationals or of coefficient tuples.
"""

from __future__ import annotations

import numbers
import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


class DomainError(ValueError):
    """A value was used in a coefficient domain it does not belong to."""


def rational_from_string(s: str) -> Rational:
    """Parse ``"p"`` or ``"p/q"`` into an exact reduced rational.

    Only decimal integers and integer ratios are accepted; the float and
    decimal notations that :class:`fractions.Fraction` would otherwise
    parse are rejected so no approximate value can slip in.

    >>> rational_from_string("2/4")
    Fraction(1, 2)
    >>> rational_from_string("-3")
    Fraction(-3, 1)
    """
    text = s.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not an integer or integer ratio: {s!r}")
    if "/" in text and text.split("/", 1)[1].lstrip("0") == "":
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    return Rational(text)


def rational_to_string(q) -> str:
    """Render a rational as ``p/q``, or just ``p`` when the denominator is 1."""
    q = Rational(q)
    return str(q)


def _is_rational(value) -> bool:
    return isinstance(value, numbers.Rational)


class LambdaPoly:
    """A polynomial in λ with exact rational coefficients.

    Coefficients are stored ascending by power and kept canonical:
    trailing zeros are stripped and the zero polynomial has an empty
    coefficient tuple.  Instances are immutable and support ring
    arithmetic with each other and with rational constants.  Division is
    allowed only by nonzero rational constants.

    >>> p = 1 + 3 * LAMBDA
    >>> str(p)
    '1+3*λ'
    >>> p.evaluate(Rational(0))
    Fraction(1, 1)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value) -> "LambdaPoly":
        return cls((Rational(value),))

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in λ; the zero polynomial reports -1."""
        return len(self._coeffs) - 1

    @property
    def constant_term(self) -> Rational:
        return self._coeffs[0] if self._coeffs else Rational(0)

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coefficient(self, i: int) -> Rational:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Rational(0)

    def evaluate(self, x) -> Rational:
        """Evaluate at a rational point by Horner's rule."""
        x = Rational(x)
        acc = Rational(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shifted_down(self, i: int) -> "LambdaPoly":
        """Divide by λ**i, requiring the lowest i coefficients to vanish.

        This is the only way the package ever realizes a λ-power in a
        denominator: the division must be exact, anything else is a bug
        in the caller's formula and raises ArithmeticError.
        """
        if i < 0:
            raise ValueError("negative shift")
        if i == 0:
            return self
        if any(self._coeffs[:i]):
            raise ArithmeticError(
                f"polynomial {self} is not divisible by λ^{i}"
            )
        return LambdaPoly(self._coeffs[i:])

    # ring arithmetic ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LambdaPoly):
            a, b = self._coeffs, other._coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] = out[i] + c
            return LambdaPoly(out)
        if _is_rational(other):
            return self + LambdaPoly.constant(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, LambdaPoly) or _is_rational(other):
            return self + (-other if isinstance(other, LambdaPoly)
                           else LambdaPoly.constant(-Rational(other)))
        return NotImplemented

    def __rsub__(self, other):
        if _is_rational(other):
            return LambdaPoly.constant(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LambdaPoly):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return LambdaPoly()
            out = [Rational(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
            return LambdaPoly(out)
        if _is_rational(other):
            if not other:
                return LambdaPoly()
            return LambdaPoly(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        # constraint from the arithmetic contract: polynomials divide
        # only by nonzero rational constants
        if _is_rational(other):
            if not other:
                raise ZeroDivisionError("division of λ-polynomial by zero")
            return self * (Rational(1) / Rational(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a nonnegative integer")
        result = LambdaPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self._coeffs == other._coeffs
        if _is_rational(other):
            return self.is_constant and self.constant_term == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_term)
        return hash(self._coeffs)

    # rendering ------------------------------------------------------

    def __str__(self):
        return render_poly_text(self)

    def __repr__(self):
        return f"LambdaPoly<{render_poly_text(self)}>"

    def latex(self) -> str:
        return render_poly_latex(self)


LAMBDA = LambdaPoly((0, 1))


def poly_eval(p, x) -> Rational:
    """Evaluate a LambdaPoly at a rational point.

    Rational scalars pass through unchanged so code that is generic over
    the two domains can evaluate whatever it holds.
    """
    if isinstance(p, LambdaPoly):
        return p.evaluate(x)
    if _is_rational(p):
        return Rational(p)
    raise TypeError(f"cannot evaluate {type(p).__name__} at a point")


Scalar = Union[Rational, LambdaPoly]


# ---------------------------------------------------------------------------
# domains


class Domain:
    """Marker for the active coefficient domain.

    ``lam`` is λ as a value of the domain, ``zero``/``one`` the ring
    units, and :meth:`coerce` embeds raw inputs (ints, rationals, and in
    the symbolic case polynomials) or raises :class:`DomainError`.
    """

    is_symbolic: bool

    @property
    def lam(self) -> Scalar:
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        raise NotImplementedError

    @property
    def one(self) -> Scalar:
        raise NotImplementedError

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


class SymbolicDomain(Domain):
    """Coefficients in Q[λ], λ kept symbolic."""

    is_symbolic = True

    @property
    def lam(self) -> LambdaPoly:
        return LAMBDA

    @property
    def zero(self) -> LambdaPoly:
        return LambdaPoly()

    @property
    def one(self) -> LambdaPoly:
        return LambdaPoly.constant(1)

    def coerce(self, value) -> LambdaPoly:
        if isinstance(value, LambdaPoly):
            return value
        if _is_rational(value):
            return LambdaPoly.constant(value)
        raise DomainError(
            f"cannot use {type(value).__name__} in the symbolic domain"
        )

    def describe(self) -> str:
        return "sym"

    def __eq__(self, other):
        return isinstance(other, SymbolicDomain)

    def __hash__(self):
        return hash("sym-domain")

    def __repr__(self):
        return "SymbolicDomain()"


class EvaluatedDomain(Domain):
    """Coefficients in Q, with λ fixed to a rational value."""

    is_symbolic = False

    def __init__(self, lam_value):
        self._lam = Rational(lam_value)

    @property
    def lam(self) -> Rational:
        return self._lam

    @property
    def zero(self) -> Rational:
        return Rational(0)

    @property
    def one(self) -> Rational:
        return Rational(1)

    def coerce(self, value) -> Rational:
        if isinstance(value, LambdaPoly):
            raise DomainError(
                "symbolic polynomial used in an evaluated domain; "
                "evaluate it explicitly first"
            )
        if _is_rational(value):
            return Rational(value)
        raise DomainError(
            f"cannot use {type(value).__name__} in an evaluated domain"
        )

    def describe(self) -> str:
        return rational_to_string(self._lam)

    def __eq__(self, other):
        return isinstance(other, EvaluatedDomain) and other._lam == self._lam

    def __hash__(self):
        return hash(("eval-domain", self._lam))

    def __repr__(self):
        return f"EvaluatedDomain({self._lam!r})"


SYMBOLIC = SymbolicDomain()


def domain_from_string(s: str) -> Domain:
    """``"sym"`` gives the symbolic domain, ``"p/q"`` an evaluated one."""
    if s.strip() == "sym":
        return SYMBOLIC
    return EvaluatedDomain(rational_from_string(s))


# ---------------------------------------------------------------------------
# canonical rendering and serialization
#
# Wire forms are part of the output contract: a rational is the string
# "p/q" (just "p" for denominator 1), a polynomial is the ascending list
# of such strings.  Text and LaTeX renderings are canonical so emitted
# documents are byte-reproducible.


def render_poly_text(p: LambdaPoly) -> str:
    """Canonical plain-text form, ascending powers: ``-1/6+1/6*λ^2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        if i == 0:
            mag = rational_to_string(abs(c))
        else:
            lam = "λ" if i == 1 else f"λ^{i}"
            mag = lam if abs(c) == 1 else f"{rational_to_string(abs(c))}*{lam}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, mag))
    first_sign, first_mag = parts[0]
    out = (first_sign if first_sign == "-" else "") + first_mag
    for sign, mag in parts[1:]:
        out += sign + mag
    return out


def _latex_rational(q, strip_one: bool = False) -> str:
    q = Rational(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    if strip_one and q == 1:
        return sign
    if q.denominator == 1:
        return f"{sign}{q.numerator}"
    return f"{sign}\\frac{{{q.numerator}}}{{{q.denominator}}}"


def render_poly_latex(p: LambdaPoly) -> str:
    """Canonical LaTeX form, ascending powers: ``2+9\\lambda+7\\lambda^{2}``."""
    if not p.coeffs:
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(_latex_rational(c))
        else:
            lam = "\\lambda" if i == 1 else f"\\lambda^{{{i}}}"
            terms.append(_latex_rational(c, strip_one=True) + lam)
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def scalar_to_text(v) -> str:
    if isinstance(v, LambdaPoly):
        return render_poly_text(v)
    return rational_to_string(v)


def scalar_to_latex(v) -> str:
    if isinstance(v, LambdaPoly):
        return render_poly_latex(v)
    return _latex_rational(v)


def scalar_to_json(v):
    """JSON form: ``"p/q"`` for rationals, ascending string list for polys."""
    if isinstance(v, LambdaPoly):
        return [rational_to_string(c) for c in v.coeffs]
    return rational_to_string(v)


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, str):
        return rational_from_string(obj)
    if isinstance(obj, list):
        return LambdaPoly(rational_from_string(c) for c in obj)
    raise ValueError(f"not a serialized scalar: {obj!r}")
