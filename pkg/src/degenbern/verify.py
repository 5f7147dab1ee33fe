"""Mechanical verification of the identity families tying everything
together: the closed derivative family of F = 1/deformed-log(1+t), its
λ -> 0 derivative expansions, the convolution identity of the
coefficient triangle, the higher-order reconstruction of the Bernoulli
row, the cancellation of its singular part, and the cross-route
agreement suites.

Every check is an exact coefficient comparison of truncated series or
λ-polynomials; there are no tolerances.  Each verifier returns an
:class:`IdentityReport` whose ``compared`` field pins down the exact
window that was checked, so a "pass" is a precise finite statement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import (
    Domain,
    Rational,
    SYMBOLIC,
    poly_eval,
    scalar_to_json,
)
from .series import (
    LaurentSeries,
    classical_log_reciprocal,
    degenerate_log_over_t_series,
    degenerate_log_reciprocal,
    one_plus_t_power,
    polynomial_series,
)
from .combinatorics import (
    bell_partial,
    binomial,
    degenerate_stirling2,
    falling_factorial,
    scaled_degenerate_stirling,
    stirling1_signed,
)
from .ode_coeffs import (
    CoeffTable,
    coeff_explicit_falling,
    coeff_explicit_stirling,
    coeff_limit_at_zero,
    coeff_triangle,
    coeff_unrolled_recurrence,
)
from . import bernoulli


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check.

    ``witness`` holds the first offending position and both side values
    when the check fails; ``compared`` records what was actually
    compared; ``details`` carries per-identity extras (for the
    higher-order reconstruction: how the two readings of the third-sum
    factorial weight fared).
    """

    identity: str
    parameters: dict
    verdict: bool
    witness: dict | None = None
    compared: dict | None = None
    details: dict | None = None

    @property
    def passed(self) -> bool:
        return self.verdict

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "parameters": self.parameters,
            "verdict": "pass" if self.verdict else "fail",
            "compared": self.compared,
            "witness": self.witness,
            "details": self.details,
        }


def _laurent_report(
    identity: str, params: dict, lhs: LaurentSeries, rhs: LaurentSeries, details=None
) -> IdentityReport:
    lo = -max(lhs.pole, rhs.pole)
    hi = min(lhs.top_exponent, rhs.top_exponent)
    ok, bad = (lhs - rhs).is_zero_with_witness()
    witness = None
    if not ok:
        witness = {
            "exponent": bad,
            "lhs": scalar_to_json(lhs.coefficient(bad)),
            "rhs": scalar_to_json(rhs.coefficient(bad)),
        }
    compared = {"exponent_low": lo, "exponent_high": hi}
    return IdentityReport(identity, params, ok, witness, compared, details)


# ---------------------------------------------------------------------------
# the closed derivative family


def verify_ode(
    N: int, order: int, domain: Domain = SYMBOLIC, coeffs: CoeffTable | None = None
) -> IdentityReport:
    """Check (-1)^N (1+t)^N F^(N) = sum_i c_i(N) F^(i+1) exactly, where
    the c_i(N) are the coefficient-triangle entries.

    F is built at truncation order ``order + N`` so that after N
    derivative applications the comparison still covers ``order``
    meaningful coefficients starting at exponent -(N+1).
    """
    if N < 1:
        raise ValueError("the derivative family starts at N = 1")
    if order < 2:
        raise ValueError("order too small to compare anything")
    F = degenerate_log_reciprocal(domain, order + N)
    deriv = F
    for _ in range(N):
        deriv = deriv.derivative()
    window = deriv.body.order
    lhs = deriv * LaurentSeries.from_series(
        one_plus_t_power(domain, N, window)
    )
    if N % 2:
        lhs = -lhs
    table = coeffs if coeffs is not None else coeff_triangle(N, domain)
    power = F
    rhs = None
    for i in range(N + 1):
        term = power.scale(table.value(i, N))
        rhs = term if rhs is None else rhs + term
        if i < N:
            power = power * F
    params = {"N": N, "order": order, "lambda": domain.describe()}
    return _laurent_report("ode_family", params, lhs, rhs)


def verify_convolution(
    n: int, domain: Domain = SYMBOLIC, coeffs: CoeffTable | None = None
) -> IdentityReport:
    """Check, for every 1 <= j <= n, the convolution identity

    sum_{i=1}^{j} w_{j-i} (c_{n-i}(n) - n c_{n-i}(n-1))
        = c_{n-j}(n) - n! w_j,

    with weights w_m = (1)(1-λ)...(1-(m-1)λ)/m!.
    """
    if n < 1:
        raise ValueError("the convolution identity starts at n = 1")
    table = coeffs if coeffs is not None else coeff_triangle(n, domain)
    lam = domain.lam
    weights = [domain.one]
    for m in range(1, n + 1):
        weights.append(weights[-1] * (domain.one - (m - 1) * lam) / m)
    ok = True
    witness = None
    for j in range(1, n + 1):
        lhs = domain.zero
        for i in range(1, j + 1):
            bracket = table.value(n - i, n) - n * table.value(n - i, n - 1)
            lhs = lhs + weights[j - i] * bracket
        rhs = table.value(n - j, n) - math.factorial(n) * weights[j]
        if lhs != rhs:
            ok = False
            witness = {
                "j": j,
                "lhs": scalar_to_json(domain.coerce(lhs)),
                "rhs": scalar_to_json(domain.coerce(rhs)),
            }
            break
    params = {"n": n, "lambda": domain.describe()}
    compared = {"j_low": 1, "j_high": n}
    return IdentityReport("cor_3_4", params, ok, witness, compared)


# ---------------------------------------------------------------------------
# classical derivative expansions (λ = 0)


def verify_classical_derivative(N: int, order: int, which: str = "eq41") -> IdentityReport:
    """Check the N-th derivative expansion of 1/log(1+t) ("eq41") or of
    t/log(1+t) ("eq42") against its first-kind-Stirling closed form."""
    if N < 1:
        raise ValueError("derivative expansions start at N = 1")
    if order < 2:
        raise ValueError("order too small to compare anything")
    if which not in ("eq41", "eq42"):
        raise ValueError(f"unknown identity {which!r}")
    F0 = classical_log_reciprocal(order + N)
    domain = F0.domain
    window = F0.body.order
    table = stirling1_signed(N)
    inv = LaurentSeries.from_series(one_plus_t_power(domain, N, window).reciprocal())

    target = F0 if which == "eq41" else F0.shifted(1)
    deriv = target
    for _ in range(N):
        deriv = deriv.derivative()
    lhs = deriv

    rhs = None
    power = F0
    for k in range(N + 1):
        sign = -1 if k % 2 else 1
        if which == "eq41":
            weight = Rational(sign * math.factorial(k) * table.value(N, k))
            term = power.scale(weight)
        else:
            s_here = table.value(N, k)
            s_prev = table.value(N - 1, k) if k <= N - 1 else 0
            poly = polynomial_series(
                domain,
                (N * s_prev, s_here + N * s_prev),
                window,
            )
            term = (power * LaurentSeries.from_series(poly)).scale(
                Rational(sign * math.factorial(k))
            )
        rhs = term if rhs is None else rhs + term
        if k < N:
            power = power * F0
    rhs = rhs * inv
    identity = "eq_41" if which == "eq41" else "eq_42"
    params = {"N": N, "order": order, "lambda": "0"}
    return _laurent_report(identity, params, lhs, rhs)


# ---------------------------------------------------------------------------
# higher-order reconstruction and its singular part


class HigherOrderContext:
    """Shared tables for the reconstruction sums: the coefficient
    triangle through row max_N and the order-r Bernoulli rows through
    index max_index for every 1 <= r <= max_N + 1."""

    def __init__(self, domain: Domain, max_N: int, max_index: int):
        if max_N < 1:
            raise ValueError("need max_N >= 1")
        self.domain = domain
        self.coeffs = coeff_triangle(max_N, domain)
        base = degenerate_log_over_t_series(domain, max_index + 1).reciprocal()
        rows = {}
        power = base
        for r in range(1, max_N + 2):
            rows[r] = tuple(
                power[n] * math.factorial(n) for n in range(max_index + 1)
            )
            if r <= max_N:
                power = power * base
        self._rows = rows
        self.max_N = max_N
        self.max_index = max_index

    def b(self, r: int, idx: int):
        return self._rows[r][idx]


def _ensure_ctx(ctx, domain, N, top_index):
    if ctx is None:
        return HigherOrderContext(domain, N, top_index)
    if ctx.max_N < N or ctx.max_index < top_index or ctx.domain != domain:
        raise ValueError("context too small for the requested parameters")
    return ctx


def _sum12(j: int, N: int, ctx: HigherOrderContext, domain: Domain):
    """First two reconstruction sums for coefficient index j; for j >= 0
    the smooth-part weight j!/(...)! applies, for j < 0 the weight is
    1/(...)! (the singular-part normalization)."""
    jw = math.factorial(j) if j >= 0 else 1
    aN = ctx.coeffs.row(N)
    aN1 = ctx.coeffs.row(N - 1)
    total = domain.zero
    for l in range(-N, j + 1):
        c = binomial(N + j - l - 1, j - l)
        if not c:
            continue
        sign = -1 if (N + j + l) % 2 else 1
        cs = c * sign
        for i in range(max(0, -l), N + 1):
            w = Rational(cs * jw, math.factorial(l + i))
            total = total + w * aN[i] * ctx.b(i + 1, l + i)
        for i in range(max(0, -l - 1), N):
            w = Rational(cs * N * jw, math.factorial(l + i + 1))
            total = total - w * aN1[i] * ctx.b(i + 1, l + i + 1)
    return total


def _sum3(j: int, N: int, ctx: HigherOrderContext, domain: Domain, printed: bool):
    """Third reconstruction sum.  ``printed=False`` uses the weight
    j!/(l+i)! that the derivation produces; ``printed=True`` uses the
    j!/(l+1)! variant that appears in the final printed statement (with
    the reciprocal factorial of a negative integer read as zero)."""
    jw = math.factorial(j) if j >= 0 else 1
    aN1 = ctx.coeffs.row(N - 1)
    total = domain.zero
    for l in range(-(N - 1), j + 1):
        c = binomial(N + j - l - 1, j - l)
        if not c:
            continue
        sign = -1 if (N + j + l) % 2 else 1
        cs = c * sign * N
        for i in range(max(0, -l), N):
            if printed:
                if l + 1 < 0:
                    continue
                w = Rational(cs * jw, math.factorial(l + 1))
            else:
                w = Rational(cs * jw, math.factorial(l + i))
            total = total - w * aN1[i] * ctx.b(i + 1, l + i)
    return total


def verify_higher_order(
    j: int, N: int, domain: Domain = SYMBOLIC, ctx: HigherOrderContext | None = None
) -> IdentityReport:
    """Check that the three reconstruction sums rebuild value j+N of the
    order-1 row from rows of order up to N+1 (j >= 0, N >= 1).

    The third sum's factorial weight is read as j!/(l+i)!, which is what
    the underlying expansion produces; the report's details record
    whether the weaker printed reading j!/(l+1)! also reproduces the
    value, so the discrepancy between the two stays visible.
    """
    if j < 0 or N < 1:
        raise ValueError("need j >= 0 and N >= 1")
    ctx = _ensure_ctx(ctx, domain, N, j + N)
    expected = ctx.b(1, j + N)
    s12 = _sum12(j, N, ctx, domain)
    rhs = s12 + _sum3(j, N, ctx, domain, printed=False)
    rhs_printed = s12 + _sum3(j, N, ctx, domain, printed=True)
    ok = rhs == expected
    witness = None
    if not ok:
        witness = {
            "index": j + N,
            "lhs": scalar_to_json(domain.coerce(expected)),
            "rhs": scalar_to_json(domain.coerce(rhs)),
        }
    params = {"j": j, "N": N, "lambda": domain.describe()}
    details = {
        "third_sum_weight": "j!/(l+i)!",
        "printed_weight_variant_matches": bool(rhs_printed == expected),
    }
    return IdentityReport("thm_4_1", params, ok, witness, None, details)


def verify_singular(
    j: int, N: int, domain: Domain = SYMBOLIC, ctx: HigherOrderContext | None = None
) -> IdentityReport:
    """Check that the full singular part at exponent j vanishes:
    N >= 2, -(N-1) <= j <= -1."""
    if N < 2 or not (-(N - 1) <= j <= -1):
        raise ValueError("singular exponents are -(N-1) <= j <= -1 for N >= 2")
    ctx = _ensure_ctx(ctx, domain, N, j + N)
    value = _sum12(j, N, ctx, domain) + _sum3(j, N, ctx, domain, printed=False)
    ok = not value
    witness = None
    if not ok:
        witness = {"j": j, "value": scalar_to_json(domain.coerce(value))}
    params = {"j": j, "N": N, "lambda": domain.describe()}
    return IdentityReport("cor_4_2", params, ok, witness, None)


# ---------------------------------------------------------------------------
# cross-route agreement suites


def verify_route_agreement_a(N_max: int, domain: Domain = SYMBOLIC) -> IdentityReport:
    """All entry routes of the coefficient triangle agree with the
    recurrence reference."""
    table = coeff_triangle(N_max, domain)
    skip_falling = (not domain.is_symbolic) and not domain.lam
    ok = True
    witness = None
    for N in range(1, N_max + 1):
        for i in range(N + 1):
            ref = table.value(i, N)
            candidates = {"stirling": coeff_explicit_stirling(i, N, domain)}
            if not skip_falling:
                candidates["falling"] = coeff_explicit_falling(i, N, domain)
            if 1 <= i <= N - 1:
                candidates["unrolled"] = coeff_unrolled_recurrence(i, N, domain)
            for route, val in candidates.items():
                if val != ref:
                    ok = False
                    witness = {
                        "i": i,
                        "N": N,
                        "route": route,
                        "reference": scalar_to_json(domain.coerce(ref)),
                        "value": scalar_to_json(domain.coerce(val)),
                    }
                    break
            if not ok:
                break
        if not ok:
            break
    params = {"max_N": N_max, "lambda": domain.describe()}
    details = {"skipped_routes": ["falling"]} if skip_falling else None
    return IdentityReport("a_routes", params, ok, witness, None, details)


def verify_route_agreement_b(
    n_max: int, domain: Domain = SYMBOLIC, multinomial_cap: int = 14
) -> IdentityReport:
    """All Bernoulli-row routes agree with the series reference, and the
    higher-order rows match their convolution cross-check."""
    ref = bernoulli.row_via_series(n_max, domain).values
    ok = True
    witness = None

    def check(route: str, n: int, value) -> bool:
        nonlocal ok, witness
        if value != ref[n]:
            ok = False
            witness = {
                "n": n,
                "route": route,
                "reference": scalar_to_json(domain.coerce(ref[n])),
                "value": scalar_to_json(domain.coerce(value)),
            }
            return False
        return True

    rec = bernoulli.row_via_recurrence(n_max, domain).values
    for n in range(n_max + 1):
        if not check("recurrence", n, rec[n]):
            break
    multi_top = min(n_max, multinomial_cap)
    if ok:
        multi = bernoulli.row_via_multinomial(multi_top, domain).values
        for n in range(multi_top + 1):
            if not check("multinomial", n, multi[n]):
                break
    if ok:
        for form in bernoulli.EXPLICIT_FORMS:
            row = bernoulli.row_via_explicit(n_max, domain, form).values
            for n in range(n_max + 1):
                if not check(form, n, row[n]):
                    break
            if not ok:
                break
    higher_top = min(n_max, 10)
    if ok:
        for r in (2, 3):
            direct = bernoulli.row_higher_order(r, higher_top, domain).values
            conv = bernoulli.convolution_row(r, higher_top, domain).values
            for n in range(higher_top + 1):
                if direct[n] != conv[n]:
                    ok = False
                    witness = {
                        "n": n,
                        "route": f"order_{r}_convolution",
                        "reference": scalar_to_json(domain.coerce(direct[n])),
                        "value": scalar_to_json(domain.coerce(conv[n])),
                    }
                    break
            if not ok:
                break
    params = {
        "max_n": n_max,
        "multinomial_max_n": multi_top,
        "lambda": domain.describe(),
    }
    return IdentityReport("b_routes", params, ok, witness, None)


def verify_route_agreement_bell(n_max: int = 10) -> IdentityReport:
    """Partition-sum and generating-function Bell values agree, both on
    an integer argument family and on the λ-polynomial family used by
    the scaled Stirling bridge."""
    ok = True
    witness = None
    lam = SYMBOLIC.lam
    for n in range(n_max + 1):
        for k in range(n + 1):
            m = max(n - k + 1, 0)
            families = {
                "integers": [Rational(i + 1) for i in range(m)],
                "deformed": [
                    falling_factorial(lam - 1, i) if i else SYMBOLIC.one
                    for i in range(m)
                ],
            }
            for fam, xs in families.items():
                lhs = bell_partial(n, k, xs, via="partition_sum")
                rhs = bell_partial(n, k, xs, via="generating_function")
                if lhs != rhs:
                    ok = False
                    witness = {
                        "n": n,
                        "k": k,
                        "family": fam,
                        "partition_sum": scalar_to_json(SYMBOLIC.coerce(lhs)),
                        "generating_function": scalar_to_json(SYMBOLIC.coerce(rhs)),
                    }
                    break
            if not ok:
                break
        if not ok:
            break
    return IdentityReport("bell_routes", {"max_n": n_max}, ok, witness, None)


def verify_route_agreement_stirling(
    n_max: int, domain: Domain = SYMBOLIC
) -> IdentityReport:
    """Both deformed second-kind triangle routes agree, and both scaled
    value routes agree."""
    ok = True
    witness = None
    gf = degenerate_stirling2(n_max, domain, via="generating_function")
    bell = degenerate_stirling2(n_max, domain, via="bell_formula")
    for n in range(n_max + 1):
        for k in range(n + 1):
            if gf.value(n, k) != bell.value(n, k):
                ok = False
                witness = {
                    "n": n,
                    "k": k,
                    "triangle": "degenerate_second",
                    "generating_function": scalar_to_json(domain.coerce(gf.value(n, k))),
                    "bell_formula": scalar_to_json(domain.coerce(bell.value(n, k))),
                }
                break
        if not ok:
            break
    skip_gf_scaled = (not domain.is_symbolic) and not domain.lam
    if ok and not skip_gf_scaled:
        for N in range(n_max + 1):
            for k in range(N + 1):
                a = scaled_degenerate_stirling(N, k, domain, via="bell_formula")
                b = scaled_degenerate_stirling(N, k, domain, via="generating_function")
                if a != b:
                    ok = False
                    witness = {
                        "N": N,
                        "k": k,
                        "triangle": "scaled",
                        "bell_formula": scalar_to_json(domain.coerce(a)),
                        "generating_function": scalar_to_json(domain.coerce(b)),
                    }
                    break
            if not ok:
                break
    params = {"max_n": n_max, "lambda": domain.describe()}
    details = {"skipped_routes": ["scaled generating_function"]} if skip_gf_scaled else None
    return IdentityReport("stirling_routes", params, ok, witness, None, details)


def verify_stirling_limit(n_max: int) -> IdentityReport:
    """λ -> 0 bridges: scaled second-kind values land on the signed
    first-kind triangle, and the coefficient triangle's constant terms
    are (-1)^(N+i) i! s(N, i)."""
    s1 = stirling1_signed(n_max)
    table = coeff_triangle(n_max, SYMBOLIC)
    ok = True
    witness = None
    for N in range(n_max + 1):
        for k in range(N + 1):
            scaled = scaled_degenerate_stirling(N, k, SYMBOLIC)
            limit = poly_eval(scaled, Rational(0))
            if limit != s1.value(N, k):
                ok = False
                witness = {
                    "N": N,
                    "k": k,
                    "kind": "scaled_to_first",
                    "limit": scalar_to_json(limit),
                    "expected": scalar_to_json(Rational(s1.value(N, k))),
                }
                break
        if not ok:
            break
    if ok:
        for N in range(1, n_max + 1):
            for i in range(N + 1):
                const = poly_eval(table.value(i, N), Rational(0))
                expected = coeff_limit_at_zero(i, N, s1)
                if const != expected:
                    ok = False
                    witness = {
                        "N": N,
                        "i": i,
                        "kind": "coeff_constant_term",
                        "limit": scalar_to_json(const),
                        "expected": scalar_to_json(expected),
                    }
                    break
            if not ok:
                break
    return IdentityReport("stirling_limit", {"max_n": n_max}, ok, witness, None)


# ---------------------------------------------------------------------------
# the whole battery


def verify_all(
    N_max: int = 8,
    n_max: int = 12,
    order: int | None = None,
    domain: Domain = SYMBOLIC,
    max_j: int = 8,
) -> list[IdentityReport]:
    """Run every identity family and agreement suite; deterministic
    report order.  ``order`` defaults to 2 max(N_max, n_max) + 8."""
    if order is None:
        order = 2 * max(N_max, n_max) + 8
    reports: list[IdentityReport] = []
    coeffs = coeff_triangle(max(N_max, n_max), domain)
    for N in range(1, N_max + 1):
        reports.append(verify_ode(N, order, domain, coeffs))
    for n in range(1, n_max + 1):
        reports.append(verify_convolution(n, domain, coeffs))
    for N in range(1, N_max + 1):
        reports.append(verify_classical_derivative(N, order, "eq41"))
    for n in range(1, n_max + 1):
        reports.append(verify_classical_derivative(n, order, "eq42"))
    ctx = HigherOrderContext(domain, N_max, max_j + N_max)
    for N in range(1, N_max + 1):
        for j in range(max_j + 1):
            reports.append(verify_higher_order(j, N, domain, ctx))
    for N in range(2, N_max + 1):
        for j in range(-(N - 1), 0):
            reports.append(verify_singular(j, N, domain, ctx))
    reports.append(verify_route_agreement_a(min(N_max, 10), domain))
    reports.append(verify_route_agreement_b(min(n_max, 12), domain))
    reports.append(verify_route_agreement_bell(min(n_max, 10)))
    reports.append(verify_route_agreement_stirling(min(n_max, 12), domain))
    reports.append(verify_stirling_limit(min(n_max, 12)))
    return reports
