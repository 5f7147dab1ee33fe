"""Second-kind Bernoulli values for the λ-deformation, by four
independent routes, plus their higher-order generalization and the
classical λ -> 0 numbers.

The defining generating function is t / deformed-log(1+t): value n is
n! times its t^n coefficient and is a λ-polynomial of degree at most n.
The first values are 1, (1-λ)/2, (λ²-1)/6.  Every route refuses an
evaluated domain with λ = 0; the classical numbers 1, 1/2, -1/6, 1/4...
are reached through :func:`classical_row` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import Domain, DomainError, Rational, Scalar, poly_eval, SYMBOLIC
from .series import (
    classical_log_over_t_series,
    degenerate_log_over_t_series,
)
from .combinatorics import (
    binomial,
    falling_factorial,
    generalized_falling,
    scaled_degenerate_stirling,
    stirling1_signed,
)
from .ode_coeffs import CoeffTable, coeff_triangle

MULTINOMIAL_CAP = 24

EXPLICIT_FORMS = ("a_form", "stirling_form", "falling_form")


@dataclass(frozen=True)
class BernoulliRow:
    """Values 0..n of one computation route, tagged with where they came
    from so mixed-provenance comparisons stay visible."""

    domain: Domain
    order_r: int
    provenance: str
    values: tuple[Scalar, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def value(self, n: int) -> Scalar:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"row holds n = 0..{self.n_max}, got {n}")
        return self.values[n]


def _require_deformed(domain: Domain):
    if not domain.is_symbolic and not domain.lam:
        raise DomainError(
            "second-kind Bernoulli routes are undefined at λ = 0; "
            "use classical_row for the limit values"
        )


def row_via_series(n_max: int, domain: Domain) -> BernoulliRow:
    """n! times the coefficients of the reciprocal of the deformed
    log-over-t series.  This is the reference route."""
    _require_deformed(domain)
    body = degenerate_log_over_t_series(domain, n_max + 1).reciprocal()
    values = tuple(body[n] * math.factorial(n) for n in range(n_max + 1))
    return BernoulliRow(domain, 1, "series", values)


def row_via_recurrence(n_max: int, domain: Domain) -> BernoulliRow:
    """Triangular inversion of the defining series, value by value:

    b_0 = 1,   b_n = - sum_{l<n} C(n,l) (λ-1)_(n-l) b_l / (n-l+1).
    """
    _require_deformed(domain)
    lam = domain.lam
    fall = [domain.one]
    for m in range(1, n_max + 1):
        fall.append(fall[-1] * (lam - m))
    values = [domain.one]
    for n in range(1, n_max + 1):
        acc = domain.zero
        for l in range(n):
            acc = acc + binomial(n, l) * fall[n - l] * values[l] / (n - l + 1)
        values.append(domain.coerce(-acc))
    return BernoulliRow(domain, 1, "recurrence", tuple(values))


def value_via_multinomial(n: int, domain: Domain) -> Scalar:
    """Alternating sum over all compositions of n.

    Expanding the reciprocal geometrically gives, for each composition
    (m_1..m_k) of n into positive parts, the term
    (-1)^k n! prod_j (λ-1)_(m_j) / ((m_j + 1) m_j!).
    The walk visits every composition leaf once with an accumulated
    product; cost is Theta(2^n), capped to keep the CLI honest.
    """
    _require_deformed(domain)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MULTINOMIAL_CAP:
        raise ValueError(
            f"multinomial route is exponential; n = {n} exceeds the cap "
            f"of {MULTINOMIAL_CAP}"
        )
    lam = domain.lam
    # weights[m] = -(λ-1)_m / ((m+1) m!); the sign folds in (-1)^k
    weights = [None]
    fall = domain.one
    for m in range(1, n + 1):
        fall = fall * (lam - m)
        weights.append(fall * Rational(-1, (m + 1) * math.factorial(m)))
    bucket = [domain.zero]

    def walk(remaining: int, acc):
        if remaining == 0:
            bucket[0] = bucket[0] + acc
            return
        for m in range(1, remaining + 1):
            walk(remaining - m, acc * weights[m])

    walk(n, domain.one)
    return domain.coerce(bucket[0] * math.factorial(n))


def row_via_multinomial(n_max: int, domain: Domain) -> BernoulliRow:
    """Whole row from one walk of the shared composition tree.

    Every part sequence with sum <= n_max is a composition of its own
    running total, so a single depth-first walk visits each composition
    of each n exactly once and banks its product at the node, instead of
    growing a separate tree per n.
    """
    _require_deformed(domain)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > MULTINOMIAL_CAP:
        raise ValueError(
            f"multinomial route is exponential; n = {n_max} exceeds the cap "
            f"of {MULTINOMIAL_CAP}"
        )
    lam = domain.lam
    weights = [None]
    fall = domain.one
    for m in range(1, n_max + 1):
        fall = fall * (lam - m)
        weights.append(fall * Rational(-1, (m + 1) * math.factorial(m)))
    buckets = [domain.one] + [domain.zero] * n_max

    def walk(total: int, acc) -> None:
        for m in range(1, n_max - total + 1):
            branch = acc * weights[m]
            buckets[total + m] = buckets[total + m] + branch
            walk(total + m, branch)

    walk(0, domain.one)
    values = tuple(buckets[n] * math.factorial(n) for n in range(n_max + 1))
    return BernoulliRow(domain, 1, "multinomial", values)


def value_via_explicit(n: int, domain: Domain, form: str = "a_form") -> Scalar:
    """One value from the closed forms that couple the Bernoulli row to
    the derivative-family coefficient triangle (n >= 1).

    form "a_form" consumes triangle rows n and n-1 directly;
    form "stirling_form" replaces them by scaled second-kind Stirling
    values; form "falling_form" unwinds everything into alternating
    falling-factorial sums with a verified λ-power shift.
    """
    _require_deformed(domain)
    if n < 1:
        raise ValueError("explicit forms start at n = 1")
    if form == "a_form":
        return _explicit_a_form(n, domain, None)
    if form == "stirling_form":
        return _explicit_stirling_form(n, domain)
    if form == "falling_form":
        return _explicit_falling_form(n, domain)
    raise ValueError(f"unknown form {form!r}")


def row_via_explicit(n_max: int, domain: Domain, form: str = "a_form") -> BernoulliRow:
    _require_deformed(domain)
    table = coeff_triangle(n_max, domain) if form == "a_form" else None
    values: list[Scalar] = [domain.one]
    for n in range(1, n_max + 1):
        if form == "a_form":
            values.append(_explicit_a_form(n, domain, table))
        else:
            values.append(value_via_explicit(n, domain, form))
    return BernoulliRow(domain, 1, "explicit", tuple(values))


def _deformed_one_falling(domain: Domain, n: int):
    """(1)(1-λ)(1-2λ)...(1-(n-1)λ)."""
    return generalized_falling(domain.one, n, domain.lam)


def _explicit_a_form(n: int, domain: Domain, table: CoeffTable | None) -> Scalar:
    if table is None or table.n_max < n:
        table = coeff_triangle(n, domain)
    total = _deformed_one_falling(domain, n + 1) / (n + 1)
    for i in range(n):
        # i runs to n-1 only, so row n-1 access stays in range
        weight = _deformed_one_falling(domain, i + 1) / math.factorial(i + 1)
        bracket = table.value(i, n) - n * table.value(i, n - 1)
        total = total + weight * bracket
    return domain.coerce(-total if n % 2 else total)


def _explicit_stirling_form(n: int, domain: Domain) -> Scalar:
    lam = domain.lam
    # the k loop below runs once per i; hoist the scaled values out of it
    combos = []
    for k in range(n + 1):
        scaled_n = scaled_degenerate_stirling(n, k, domain)
        scaled_n1 = scaled_degenerate_stirling(n - 1, k, domain) if k <= n - 1 else domain.zero
        combos.append(scaled_n + n * scaled_n1)
    lam_powers = [domain.one]
    for _ in range(n):
        lam_powers.append(lam_powers[-1] * lam)
    total = _deformed_one_falling(domain, n + 1) / (n + 1)
    if n % 2:
        total = -total
    for i in range(n):
        weight = _deformed_one_falling(domain, i + 1) / math.factorial(i + 1)
        inner = domain.zero
        for k in range(i, n + 1):
            term = math.factorial(k) * binomial(k, i) * lam_powers[k - i] * combos[k]
            inner = inner + term if k % 2 == 0 else inner - term
        total = total + weight * inner
    return domain.coerce(total)


def _explicit_falling_form(n: int, domain: Domain) -> Scalar:
    lam = domain.lam
    if not domain.is_symbolic and not lam:
        raise DomainError("falling form divides by λ powers; no value at λ = 0")
    total = _deformed_one_falling(domain, n + 1) / (n + 1)
    if n % 2:
        total = -total
    for i in range(n):
        inner = domain.zero
        cni = binomial(n, i)
        for l in range(n + 1):
            term = (cni * binomial(n, l)) * falling_factorial(l * lam, n)
            inner = inner + term if l % 2 == 0 else inner - term
        for k in range(i, n):
            cki = binomial(k, i)
            for l in range(k + 1):
                term = (cki * binomial(k, l)) * falling_factorial(l * lam + 1, n)
                inner = inner + term if l % 2 == 0 else inner - term
        if domain.is_symbolic:
            inner = inner.shifted_down(i)
        else:
            inner = inner / lam**i
        weight = _deformed_one_falling(domain, i + 1) / math.factorial(i + 1)
        total = total + weight * inner
    return domain.coerce(total)


def row_higher_order(r: int, n_max: int, domain: Domain) -> BernoulliRow:
    """Values of order r: n! times the coefficients of the r-th power of
    the reciprocal deformed log-over-t series."""
    _require_deformed(domain)
    if r < 1:
        raise ValueError("order r must be >= 1")
    body = degenerate_log_over_t_series(domain, n_max + 1).reciprocal() ** r
    values = tuple(body[n] * math.factorial(n) for n in range(n_max + 1))
    return BernoulliRow(domain, r, "series", values)


def convolution_row(r: int, n_max: int, domain: Domain) -> BernoulliRow:
    """Order-r values as the r-fold binomial convolution of the order-1
    row; independent cross-check for :func:`row_higher_order`."""
    _require_deformed(domain)
    if r < 1:
        raise ValueError("order r must be >= 1")
    base = row_via_recurrence(n_max, domain).values
    acc = base
    for _ in range(r - 1):
        acc = tuple(
            sum(
                (binomial(n, m) * acc[m] * base[n - m] for m in range(n + 1)),
                start=domain.zero,
            )
            for n in range(n_max + 1)
        )
    return BernoulliRow(domain, r, "convolution", acc)


# ---------------------------------------------------------------------------
# classical values


def classical_row(n_max: int, route: str = "limit") -> list[Rational]:
    """Classical second-kind Bernoulli numbers 1, 1/2, -1/6, 1/4, ...

    Route "limit" evaluates the symbolic deformation at λ = 0; route
    "stirling" uses the closed sum over signed first-kind Stirling
    numbers, sum_i (-1)^i (s(n,i) + n s(n-1,i)) / (i+1).
    """
    if route == "limit":
        sym = row_via_series(n_max, SYMBOLIC)
        return [poly_eval(v, Rational(0)) for v in sym.values]
    if route == "stirling":
        table = stirling1_signed(n_max)
        out = []
        for n in range(n_max + 1):
            acc = Rational(0)
            for i in range(n + 1):
                combo = table.value(n, i)
                if n >= 1 and i <= n - 1:
                    combo += n * table.value(n - 1, i)
                term = Rational(combo, i + 1)
                acc = acc + term if i % 2 == 0 else acc - term
            out.append(acc)
        return out
    raise ValueError(f"unknown route {route!r}")


def classical_series_row(n_max: int) -> list[Rational]:
    """Same numbers straight from 1/log(1+t) at pole distance one; mostly
    useful as yet another cross-check in tests."""
    body = classical_log_over_t_series(n_max + 1).reciprocal()
    return [body[n] * math.factorial(n) for n in range(n_max + 1)]
