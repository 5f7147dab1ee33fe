"""The triangle of coefficients that closes the derivative family of the
reciprocal deformed logarithm.

Row N holds the N+1 scalars c_0..c_N with

    (-1)^N (1+t)^N F^(N) = sum_i c_i F^(i+1),     F = 1/log-deformed(1+t).

Row 1 is (λ, 1) and the triangle grows by the two-term recurrence
implemented in :func:`coeff_triangle`.  Three more routes compute single
entries independently (a double alternating sum over λ-multiples, a sum
over scaled second-kind Stirling values, and an unrolled one-index
recurrence); the verify module and the tests force all four to agree.
Entry (i, N) is a λ-polynomial of degree N - i whose constant term is
(-1)^(N+i) i! times the signed first-kind Stirling number s(N, i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import Domain, DomainError, Rational, Scalar
from .combinatorics import (
    StirlingTable,
    binomial,
    falling_factorial,
    scaled_degenerate_stirling,
    stirling1_signed,
)


@dataclass(frozen=True)
class CoeffTable:
    """Rows 0..n_max of the coefficient triangle; row 0 is the
    convention row (1,) that the summation identities rely on."""

    domain: Domain
    rows: tuple[tuple[Scalar, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def value(self, i: int, N: int) -> Scalar:
        if N < 0 or N > self.n_max:
            raise ValueError(f"row {N} outside table (n_max={self.n_max})")
        if i < 0 or i > N:
            raise ValueError(f"entry {i} outside row {N}")
        return self.rows[N][i]

    def row(self, N: int) -> tuple[Scalar, ...]:
        if N < 0 or N > self.n_max:
            raise ValueError(f"row {N} outside table (n_max={self.n_max})")
        return self.rows[N]


def coeff_triangle(n_max: int, domain: Domain) -> CoeffTable:
    """Reference route: grow the triangle row by row.

    From row N to row N+1: the left edge picks up a factor N + λ, the
    right edge a factor N + 1, and interior entry i is
    (N + (i+1) λ) row[i] + i row[i-1].
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    lam = domain.lam
    rows = [(domain.one,)]
    if n_max >= 1:
        rows.append((domain.coerce(lam), domain.one))
    for N in range(1, n_max):
        row = rows[-1]
        new = [(N + lam) * row[0]]
        for i in range(1, N + 1):
            new.append((N + (i + 1) * lam) * row[i] + i * row[i - 1])
        new.append(domain.coerce((N + 1) * row[N]))
        rows.append(tuple(domain.coerce(v) for v in new))
    return CoeffTable(domain, tuple(rows))


def coeff_explicit_falling(i: int, N: int, domain: Domain) -> Scalar:
    """Closed form as a double alternating sum.

    (-1)^N λ^(-i) sum_{k=i}^{N} sum_{l=0}^{k} (-1)^l C(k,i) C(k,l) (λl)_N,
    where (x)_N is the plain falling factorial.  The inner sum is always
    divisible by λ^i; symbolically the division is a verified coefficient
    shift, at a fixed rational λ it is ordinary division.  At λ = 0 the
    expression is 0/0, so that point must go through another route.
    """
    _check_entry(i, N)
    lam = domain.lam
    if not domain.is_symbolic and not lam:
        raise DomainError(
            "the alternating-sum route divides by λ^i and has no value at "
            "λ = 0; use the recurrence or Stirling route there"
        )
    falling_cache = {}

    def lam_l_falling(l: int):
        if l not in falling_cache:
            falling_cache[l] = falling_factorial(l * lam, N)
        return falling_cache[l]

    inner = domain.zero
    for k in range(i, N + 1):
        cki = binomial(k, i)
        if not cki:
            continue
        for l in range(k + 1):
            term = (cki * binomial(k, l)) * lam_l_falling(l)
            inner = inner + term if l % 2 == 0 else inner - term
    if domain.is_symbolic:
        shifted = inner.shifted_down(i)
    else:
        shifted = inner / lam**i
    return -shifted if N % 2 else shifted


def coeff_explicit_stirling(i: int, N: int, domain: Domain) -> Scalar:
    """Closed form through scaled second-kind Stirling values:

    (-1)^N sum_{k=i}^{N} (-1)^k k! C(k,i) λ^(k-i) [λ^(N-k) S-deformed(N,k)].
    """
    _check_entry(i, N)
    lam = domain.lam
    acc = domain.zero
    for k in range(i, N + 1):
        scaled = scaled_degenerate_stirling(N, k, domain)
        coeff = math.factorial(k) * binomial(k, i)
        term = coeff * lam ** (k - i) * scaled
        acc = acc + term if k % 2 == 0 else acc - term
    return domain.coerce(-acc if N % 2 else acc)


def coeff_unrolled_recurrence(i: int, N: int, domain: Domain) -> Scalar:
    """Interior entries by unrolling the triangle recurrence in N only.

    Valid for 1 <= i <= N-1.  The recursion bottoms out at the closed
    left-edge product (N + λ - 1)(N + λ - 2)...(λ), so this route never
    touches :func:`coeff_triangle`.
    """
    if not (1 <= i <= N - 1):
        raise ValueError("unrolled recurrence is defined for 1 <= i <= N-1")
    memo: dict[tuple[int, int], Scalar] = {}
    return _unrolled(i, N, domain, memo)


def _unrolled(i: int, N: int, domain: Domain, memo: dict) -> Scalar:
    if i == 0:
        # left edge closed form
        return falling_factorial(N + domain.lam - 1, N)
    key = (i, N)
    if key in memo:
        return memo[key]
    lam = domain.lam
    base = N + (i + 1) * lam - 1
    value = math.factorial(i) * falling_factorial(base, N - i)
    tail = domain.zero
    for l in range(N - i):
        tail = tail + falling_factorial(base, l) * _unrolled(
            i - 1, N - l - 1, domain, memo
        )
    value = value + i * tail
    value = domain.coerce(value)
    memo[key] = value
    return value


def coeff_limit_at_zero(i: int, N: int, table: StirlingTable | None = None) -> Rational:
    """The λ -> 0 value of entry (i, N): (-1)^(N+i) i! s(N, i)."""
    _check_entry(i, N)
    if table is None:
        table = stirling1_signed(N)
    if table.kind != "first_signed" or table.n_max < N:
        raise ValueError("need a signed first-kind table covering row N")
    sign = -1 if (N + i) % 2 else 1
    return Rational(sign * math.factorial(i) * table.value(N, i))


def _check_entry(i: int, N: int):
    if N < 1:
        raise ValueError("rows start at N = 1 (row 0 is the convention row)")
    if not 0 <= i <= N:
        raise ValueError(f"entry {i} outside row {N}")
