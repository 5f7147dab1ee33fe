"""Truncated formal power series and Laurent series over an exact domain.

A :class:`TruncatedSeries` knows its coefficients exactly for all
exponents below an explicit order M and knows nothing beyond.  Every
operation propagates the smallest justified order rather than silently
claiming precision, and differentiation always costs exactly one known
exponent.  A :class:`LaurentSeries` is t**(-pole) times a truncated
series body and follows the same bookkeeping.

The named constructors at the bottom build the generating functions the
rest of the package feeds on: the binomial series (1+t)**λ, the
λ-deformed exponential, the λ-deformed logarithm divided by t, and the
reciprocal-logarithm Laurent series whose body coefficients carry the
second-kind Bernoulli values.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Iterable

from .scalars import (
    Domain,
    DomainError,
    EvaluatedDomain,
    LambdaPoly,
    Rational,
    Scalar,
)


class NonInvertibleConstantTerm(ArithmeticError):
    """Constant term is zero (or not a unit): the reciprocal is not a
    power series.  Callers that expect a pole should use LaurentSeries."""


class TruncatedSeries:
    """Power series known exactly through order-1.

    ``coeffs`` shorter than ``order`` are padded with exact zeros, which
    is the right reading for polynomial input; passing more coefficients
    than the order claims is an error.
    """

    __slots__ = ("_domain", "_coeffs")

    def __init__(self, domain: Domain, coeffs: Iterable = (), order: int | None = None):
        cs = [domain.coerce(c) for c in coeffs]
        if order is not None:
            if len(cs) > order:
                raise ValueError(
                    f"{len(cs)} coefficients claim more than order {order}"
                )
            cs.extend(domain.zero for _ in range(order - len(cs)))
        self._domain = domain
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, domain: Domain, coeffs: tuple) -> "TruncatedSeries":
        s = object.__new__(cls)
        s._domain = domain
        s._coeffs = coeffs
        return s

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> Scalar:
        if 0 <= n < len(self._coeffs):
            return self._coeffs[n]
        raise IndexError(
            f"coefficient of t^{n} is beyond truncation order {self.order}"
        )

    def _check(self, other: "TruncatedSeries"):
        if self._domain != other._domain:
            raise DomainError("series from different λ-domains")

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            m = min(self.order, other.order)
            return TruncatedSeries._raw(
                self._domain,
                tuple(self._coeffs[i] + other._coeffs[i] for i in range(m)),
            )
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        return NotImplemented

    def __neg__(self):
        return TruncatedSeries._raw(self._domain, tuple(-c for c in self._coeffs))

    def scale(self, scalar) -> "TruncatedSeries":
        s = self._domain.coerce(scalar)
        return TruncatedSeries._raw(self._domain, tuple(c * s for c in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            m = min(self.order, other.order)
            zero = self._domain.zero
            out = [zero] * m
            for i, ca in enumerate(self._coeffs[:m]):
                if not ca:
                    continue
                for j in range(m - i):
                    cb = other._coeffs[j]
                    if cb:
                        out[i + j] += ca * cb
            return TruncatedSeries._raw(self._domain, tuple(out))
        try:
            return self.scale(other)
        except DomainError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers need a nonnegative integer")
        result = one_series(self._domain, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs an invertible constant term."""
        if self.order == 0:
            raise ValueError("cannot invert a series of order 0")
        a0 = self._coeffs[0]
        inv0 = _invert_constant(a0, self._domain)
        out = [inv0]
        for n in range(1, self.order):
            acc = self._domain.zero
            for k in range(1, n + 1):
                ak = self._coeffs[k]
                if ak:
                    acc = acc + ak * out[n - k]
            out.append(-(inv0 * acc))
        return TruncatedSeries._raw(self._domain, tuple(out))

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dt; the result order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate a series of order 0")
        return TruncatedSeries._raw(
            self._domain,
            tuple((n + 1) * self._coeffs[n + 1] for n in range(self.order - 1)),
        )

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries._raw(self._domain, self._coeffs[:order])

    def __eq__(self, other):
        """Coefficientwise equality over the common known range."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self._domain != other._domain:
            return False
        m = min(self.order, other.order)
        return self._coeffs[:m] == other._coeffs[:m]

    __hash__ = None

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        if self.order > 6:
            shown += ", ..."
        return f"TruncatedSeries[order={self.order}]({shown})"


def _invert_constant(a0, domain: Domain):
    if isinstance(a0, LambdaPoly):
        if not a0.is_constant or not a0:
            raise NonInvertibleConstantTerm(
                f"constant term {a0} is not an invertible constant"
            )
        return LambdaPoly.constant(Rational(1) / a0.constant_term)
    if not a0:
        raise NonInvertibleConstantTerm("constant term is zero")
    return Rational(1) / a0


class LaurentSeries:
    """t**(-pole) times a truncated series body, pole >= 0.

    Canonical form: either the pole is 0 or the body has a nonzero
    constant term; the constructor renormalizes.  Coefficients are known
    for every exponent e with -pole <= e <= top_exponent, and exponents
    below -pole are exact zeros.  Equality compares the overlap of the
    two known windows.
    """

    __slots__ = ("_pole", "_body")

    def __init__(self, pole: int, body: TruncatedSeries):
        if pole < 0:
            raise ValueError("pole order must be nonnegative")
        cs = body.coeffs
        # strip known zero leading coefficients into the pole; afterwards
        # either pole == 0, or the body leads with a nonzero, or the body
        # is empty (an object about which nothing nonzero is known)
        k = 0
        while k < pole and k < len(cs) and not cs[k]:
            k += 1
        if k:
            pole -= k
            cs = cs[k:]
        self._pole = pole
        self._body = TruncatedSeries._raw(body.domain, cs)

    @classmethod
    def from_series(cls, s: TruncatedSeries) -> "LaurentSeries":
        return cls(0, s)

    @property
    def pole(self) -> int:
        return self._pole

    @property
    def body(self) -> TruncatedSeries:
        return self._body

    @property
    def domain(self) -> Domain:
        return self._body.domain

    @property
    def top_exponent(self) -> int:
        """Largest exponent whose coefficient is known."""
        return self._body.order - 1 - self._pole

    def coefficient(self, e: int) -> Scalar:
        """Coefficient of t**e; exact zero below the pole, error above
        the known window."""
        idx = e + self._pole
        if idx < 0:
            return self.domain.zero
        if idx < self._body.order:
            return self._body.coeffs[idx]
        raise IndexError(
            f"coefficient of t^{e} is beyond the known window "
            f"(top {self.top_exponent})"
        )

    def _check(self, other: "LaurentSeries"):
        if self.domain != other.domain:
            raise DomainError("Laurent series from different λ-domains")

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LaurentSeries):
            self._check(other)
            p = max(self._pole, other._pole)
            a = _pad_low(self._body, p - self._pole)
            b = _pad_low(other._body, p - other._pole)
            return LaurentSeries(p, a + b)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, LaurentSeries):
            return self + (-other)
        return NotImplemented

    def __neg__(self):
        return LaurentSeries(self._pole, -self._body)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            self._check(other)
            return LaurentSeries(self._pole + other._pole, self._body * other._body)
        try:
            return self.scale(other)
        except DomainError:
            return NotImplemented

    __rmul__ = __mul__

    def scale(self, scalar) -> "LaurentSeries":
        return LaurentSeries(self._pole, self._body.scale(scalar))

    def __pow__(self, exponent: int) -> "LaurentSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Laurent powers need a nonnegative integer")
        result = LaurentSeries(0, one_series(self.domain, self._body.order))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shifted(self, k: int) -> "LaurentSeries":
        """Multiply by t**k (k may be negative)."""
        if k <= self._pole:
            return LaurentSeries(self._pole - k, self._body)
        return LaurentSeries(0, _pad_low(self._body, k - self._pole))

    def derivative(self) -> "LaurentSeries":
        """d/dt of t**(-p) G as t**(-(p+1)) (t G' - p G).

        Both ingredients are computable through the body order, so the
        known window shrinks by exactly one exponent, matching the
        series rule.
        """
        g = self._body.coeffs
        if not g:
            raise ValueError("cannot differentiate an order-0 body")
        p = self._pole
        body = tuple(k * g[k] - p * g[k] for k in range(len(g)))
        return LaurentSeries(p + 1, TruncatedSeries._raw(self.domain, body))

    # comparison -------------------------------------------------------

    def _window(self, other: "LaurentSeries") -> tuple[int, int]:
        lo = -max(self._pole, other._pole)
        hi = min(self.top_exponent, other.top_exponent)
        return lo, hi

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.domain != other.domain:
            return False
        lo, hi = self._window(other)
        return all(
            self.coefficient(e) == other.coefficient(e) for e in range(lo, hi + 1)
        )

    __hash__ = None

    def is_zero_with_witness(self):
        """(True, None) if every known coefficient vanishes, else
        (False, first offending exponent)."""
        for e in range(-self._pole, self.top_exponent + 1):
            if self.coefficient(e):
                return False, e
        return True, None

    def __repr__(self):
        return f"LaurentSeries[pole={self._pole}, top={self.top_exponent}]"


def _pad_low(body: TruncatedSeries, k: int) -> TruncatedSeries:
    """Prepend k exact zero coefficients (multiply the body by t**k
    while lowering the pole by k keeps the object and window intact)."""
    if k == 0:
        return body
    zero = body.domain.zero
    return TruncatedSeries._raw(body.domain, (zero,) * k + body.coeffs)


# ---------------------------------------------------------------------------
# named constructors


def zero_series(domain: Domain, order: int) -> TruncatedSeries:
    return TruncatedSeries._raw(domain, (domain.zero,) * order)


def one_series(domain: Domain, order: int) -> TruncatedSeries:
    if order == 0:
        return zero_series(domain, 0)
    return TruncatedSeries._raw(domain, (domain.one,) + (domain.zero,) * (order - 1))


def polynomial_series(domain: Domain, coeffs: Iterable, order: int) -> TruncatedSeries:
    """A polynomial regarded as a series: absent coefficients are exact
    zeros, so any order is justified."""
    return TruncatedSeries(domain, coeffs, order)


def one_plus_t_power(domain: Domain, exponent: int, order: int) -> TruncatedSeries:
    """(1+t)**exponent for any integer exponent, exactly known."""
    if exponent >= 0:
        return polynomial_series(
            domain,
            (comb(exponent, j) for j in range(min(exponent + 1, order))),
            order,
        )
    return TruncatedSeries(
        domain,
        ((-1) ** j * comb(-exponent + j - 1, j) for j in range(order)),
        order,
    )


def binom_lambda_series(domain: Domain, order: int) -> TruncatedSeries:
    """(1+t)**λ: coefficient of t^n is the falling product of λ over n
    steps divided by n!."""
    lam = domain.lam
    coeffs = []
    acc = domain.one
    for n in range(order):
        if n:
            acc = acc * (lam - (n - 1))
        coeffs.append(acc / factorial(n))
    return TruncatedSeries._raw(domain, tuple(coeffs))


def degenerate_exp_series(domain: Domain, order: int) -> TruncatedSeries:
    """(1+λt)**(1/λ): coefficient of t^n is (1)(1-λ)(1-2λ)...(1-(n-1)λ)/n!,
    which stays polynomial in λ."""
    lam = domain.lam
    coeffs = []
    acc = domain.one
    for n in range(order):
        if n:
            acc = acc * (domain.one - (n - 1) * lam)
        coeffs.append(acc / factorial(n))
    return TruncatedSeries._raw(domain, tuple(coeffs))


def _require_deformed(domain: Domain, what: str):
    if not domain.is_symbolic and not domain.lam:
        raise DomainError(
            f"{what} is undefined at λ = 0; classical values come from the "
            "dedicated classical routes or from evaluating symbolic results"
        )


def degenerate_log_over_t_series(domain: Domain, order: int) -> TruncatedSeries:
    """((1+t)**λ - 1)/(λ t), the λ-deformed log of (1+t) divided by t.

    Coefficient of t^m is (λ-1)(λ-2)...(λ-m) / ((m+1) m!); the division
    by λ cancels symbolically, so coefficients are polynomial in λ.
    The λ = 0 point is excluded by definition of the deformation.
    """
    _require_deformed(domain, "the deformed logarithm series")
    lam = domain.lam
    coeffs = []
    acc = domain.one
    for m in range(order):
        if m:
            acc = acc * (lam - m)
        coeffs.append(acc / ((m + 1) * factorial(m)))
    return TruncatedSeries._raw(domain, tuple(coeffs))


def classical_log_over_t_series(order: int, domain: Domain | None = None) -> TruncatedSeries:
    """log(1+t)/t: coefficient of t^m is (-1)^m/(m+1)."""
    if domain is None:
        domain = EvaluatedDomain(0)
    return TruncatedSeries(
        domain,
        (Rational(-1 if m % 2 else 1, m + 1) for m in range(order)),
        order,
    )


def degenerate_log_reciprocal(domain: Domain, order: int) -> LaurentSeries:
    """1 / deformed-log(1+t) as a Laurent series with a simple pole.

    The body is the reciprocal of :func:`degenerate_log_over_t_series`,
    so n! times body coefficient n is the n-th second-kind Bernoulli
    value for the domain's λ.
    """
    return LaurentSeries(1, degenerate_log_over_t_series(domain, order).reciprocal())


def classical_log_reciprocal(order: int, domain: Domain | None = None) -> LaurentSeries:
    """1 / log(1+t), the λ = 0 counterpart, with a simple pole."""
    return LaurentSeries(1, classical_log_over_t_series(order, domain).reciprocal())
