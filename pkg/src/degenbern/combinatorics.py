"""Combinatorial building blocks: factorial products, Stirling triangles,
and exponential partial Bell polynomials.

Where downstream identity checks need a cross-check, two genuinely
independent computation routes are provided (a closed summation formula
and a generating-function coefficient extraction); the tests and the
verify module insist the routes agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .scalars import Domain, LambdaPoly, Rational, Scalar
from .series import TruncatedSeries, degenerate_exp_series, one_series, zero_series


def binomial(n: int, k: int) -> int:
    """C(n, k) with the usual convention of 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (m_1! m_2! ... m_k!) for parts summing to n."""
    if any(m < 0 for m in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = math.factorial(n)
    for m in parts:
        out //= math.factorial(m)
    return out


def falling_factorial(x, n: int):
    """x (x-1) (x-2) ... (x-n+1); empty product 1 for n = 0.

    Works for any ring scalar: ints, rationals, λ-polynomials.
    """
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    acc = None
    for j in range(n):
        term = x - j
        acc = term if acc is None else acc * term
    return acc if acc is not None else 1


def generalized_falling(x, n: int, lam):
    """x (x-λ) (x-2λ) ... (x-(n-1)λ), the λ-deformed falling factorial."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    acc = None
    for j in range(n):
        term = x - j * lam
        acc = term if acc is None else acc * term
    return acc if acc is not None else 1


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-tuples of positive integers summing to n, lexicographic."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Stirling triangles


@dataclass(frozen=True)
class StirlingTable:
    """Triangle of values for 0 <= k <= n <= n_max.

    kind is "first_signed" (integer entries) or "degenerate_second"
    (entries in the active domain).  Out-of-triangle lookups return 0,
    the standard convention the summation formulas rely on.
    """

    kind: str
    n_max: int
    rows: tuple[tuple[Scalar, ...], ...]

    def value(self, n: int, k: int) -> Scalar:
        if n < 0 or n > self.n_max:
            raise ValueError(f"row {n} outside table (n_max={self.n_max})")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]


def stirling1_signed(n_max: int) -> StirlingTable:
    """Signed Stirling numbers of the first kind.

    Built from s(n+1, k) = s(n, k-1) - n s(n, k); row n lists the
    coefficients of the falling factorial x(x-1)...(x-n+1) in x.
    """
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k <= n else 0

        rows.append(tuple(at(k - 1) - n * at(k) for k in range(n + 2)))
    return StirlingTable("first_signed", n_max, tuple(rows))


def degenerate_stirling2(
    n_max: int, domain: Domain, via: str = "generating_function"
) -> StirlingTable:
    """λ-deformed Stirling triangle of the second kind.

    Route "generating_function" reads n! [t^n] (e_λ(t) - 1)^k / k! off
    the deformed exponential; route "bell_formula" uses the alternating
    binomial sum over deformed falling factorials.  Both give the same
    polynomials; verify and the tests compare them.
    """
    if via == "generating_function":
        return _deg_stirling2_gf(n_max, domain)
    if via == "bell_formula":
        return _deg_stirling2_bell(n_max, domain)
    raise ValueError(f"unknown route {via!r}")


def _deg_stirling2_gf(n_max: int, domain: Domain) -> StirlingTable:
    order = n_max + 1
    e_minus_1 = degenerate_exp_series(domain, order) - one_series(domain, order)
    cols = [one_series(domain, order)]
    for _ in range(n_max):
        cols.append(cols[-1] * e_minus_1)
    rows = []
    for n in range(n_max + 1):
        row = []
        for k in range(n + 1):
            row.append(cols[k][n] * Rational(math.factorial(n), math.factorial(k)))
        rows.append(tuple(row))
    return StirlingTable("degenerate_second", n_max, tuple(rows))


def _deg_stirling2_bell(n_max: int, domain: Domain) -> StirlingTable:
    lam = domain.lam
    rows = []
    for n in range(n_max + 1):
        row = []
        for k in range(n + 1):
            acc = domain.zero
            for l in range(k + 1):
                term = binomial(k, l) * generalized_falling(
                    domain.coerce(l), n, lam
                )
                acc = acc + term if l % 2 == 0 else acc - term
            sign = -1 if k % 2 else 1
            row.append(acc * Rational(sign, math.factorial(k)))
        rows.append(tuple(row))
    return StirlingTable("degenerate_second", n_max, tuple(rows))


# ---------------------------------------------------------------------------
# partial Bell polynomials


def _block_count_vectors(n: int, k: int, m: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative (i_1..i_m) with sum k and weighted sum n, lexicographic."""

    def rec(pos: int, k_left: int, n_left: int):
        if pos == m:
            if k_left == 0 and n_left == 0:
                yield ()
            return
        size = pos + 1
        hi = min(k_left, n_left // size)
        for i in range(hi + 1):
            for rest in rec(pos + 1, k_left - i, n_left - size * i):
                yield (i,) + rest

    yield from rec(0, k, n)


def bell_partial(n: int, k: int, xs: Sequence, via: str = "partition_sum"):
    """Partial Bell polynomial B_{n,k} at the argument list xs.

    xs supplies x_1 .. x_{n-k+1} (ring scalars of any one domain).
    Route "partition_sum" enumerates block-count vectors directly;
    route "generating_function" extracts n! [t^n] (sum x_i t^i/i!)^k / k!.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    # the k = 0 and k > n values reference no arguments at all
    zero = xs[0] * 0 if len(xs) else Rational(0)
    if k == 0:
        return zero + 1 if n == 0 else zero
    if k > n:
        return zero
    need = n - k + 1
    if len(xs) < need:
        raise ValueError(f"need {need} arguments, got {len(xs)}")
    if via == "partition_sum":
        return _bell_partition_sum(n, k, xs)
    if via == "generating_function":
        return _bell_generating_function(n, k, xs)
    raise ValueError(f"unknown route {via!r}")


def _bell_partition_sum(n: int, k: int, xs: Sequence):
    m = max(n - k + 1, 0)
    total = None
    for counts in _block_count_vectors(n, k, m):
        denom = 1
        prod = None
        for idx, i in enumerate(counts):
            if not i:
                continue
            size = idx + 1
            denom *= math.factorial(i) * math.factorial(size) ** i
            p = xs[idx] ** i
            prod = p if prod is None else prod * p
        term = Rational(math.factorial(n), denom)
        if prod is not None:
            term = prod * term
        total = term if total is None else total + term
    return total if total is not None else Rational(0)


def _bell_generating_function(n: int, k: int, xs: Sequence):
    # the exponents below k and above n never contribute, but building the
    # full series keeps this route visibly independent of the other one
    order = n + 1
    coeffs = [Rational(0)]
    for i in range(1, order):
        if i <= len(xs):
            coeffs.append(xs[i - 1] * Rational(1, math.factorial(i)))
        else:
            coeffs.append(Rational(0))
    inner_pow_k = _power_of_list(coeffs, k, order)
    return inner_pow_k[n] * Rational(math.factorial(n), math.factorial(k))


def _power_of_list(coeffs: list, k: int, order: int) -> list:
    """k-th power of a coefficient list, truncated; plain convolution so
    this route shares nothing with the TruncatedSeries implementation."""
    result = [Rational(0)] * order
    result[0] = Rational(1)
    for _ in range(k):
        nxt = [Rational(0)] * order
        for i, c in enumerate(result):
            if not c:
                continue
            for j in range(order - i):
                d = coeffs[j]
                if d:
                    nxt[i + j] = nxt[i + j] + c * d
        result = nxt
    return result


def bell_scaling_check(n: int, k: int, a, b, xs: Sequence) -> bool:
    """Does B_{n,k}(a b x_1, a b^2 x_2, ...) = a^k b^n B_{n,k}(x_1, x_2, ...)
    hold for these arguments?  Both sides are computed by partition sums."""
    scaled = [xs[i] * (a * b ** (i + 1)) for i in range(len(xs))]
    lhs = _bell_partition_sum(n, k, scaled)
    rhs = _bell_partition_sum(n, k, xs) * (a**k) * (b**n)
    return lhs == rhs


def scaled_degenerate_stirling(
    N: int, k: int, domain: Domain, via: str = "bell_formula"
):
    """λ^(N-k) times the 1/λ-deformed Stirling number of the second kind,
    realized without ever leaving Q[λ].

    Route "bell_formula" evaluates the partial Bell polynomial at
    1, (λ-1), (λ-1)(λ-2), ...; route "generating_function" reads
    N!/k! [t^(N-k)] of the k-th power of the deformed log-over-t series,
    where the λ powers cancel exactly.  At λ = 0 the values are the
    signed first-kind Stirling numbers.
    """
    if k < 0 or N < 0 or k > N:
        return domain.zero
    if via == "bell_formula":
        lam = domain.lam
        xs = [
            falling_factorial(lam - 1, i - 1) if i > 1 else domain.one
            for i in range(1, N - k + 2)
        ]
        return domain.coerce(bell_partial(N, k, xs, via="partition_sum"))
    if via == "generating_function":
        from .series import degenerate_log_over_t_series

        if N == k == 0:
            return domain.one
        s = degenerate_log_over_t_series(domain, N - k + 1)
        value = (s**k)[N - k] * Rational(math.factorial(N), math.factorial(k))
        return domain.coerce(value)
    raise ValueError(f"unknown route {via!r}")
