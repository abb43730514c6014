"""Legendre polynomials, their iterated antiderivatives, and kernel-moment coefficients.

The table holds three exact families on [-1, 1], all built once and shared:

* ``P[k]``: the classical Legendre polynomials, constructed by the Bonnet
  recurrence (k+1) P_{k+1} = (2k+1) t P_k - k P_{k-1} from P_0 = 1, P_1 = t.
  The Rodrigues form (d/dt)^k (t^2-1)^k / (2^k k!) is kept as an independent
  cross-check, not as the constructor.
* ``p_low[k]`` (k >= 2): the Rodrigues expression differentiated only k-2
  times, i.e. a second antiderivative of P_k with both integration constants
  fixed by the construction. Satisfies p_low[k]'' = P[k] exactly.
* ``gamma[k]``: polynomials in the kernel point x giving the Legendre
  expansion coefficients of |t - x|:

      gamma_k(x) = integral(P_k(t) |t - x| dt) / integral(P_k(t)^2 dt)

  which in closed form is (x^2+1)/2 for k = 0, (x^3-3x)/2 for k = 1, and
  (2k+1) p_low[k](x) for k >= 2.

``check_identities`` re-derives every closed form above from scratch in
exact arithmetic and reports the first counterexample if any; it is the
tamper check that backs the verification CLI.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .polyalg import (
    ONE,
    Polynomial,
    T,
    abs_kernel_integral,
    definite_integral,
    monomial,
    poly,
)

_SAMPLE_SEED = 0x5EED


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)..., with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def sample_points(count: int, seed: int = _SAMPLE_SEED) -> list[Fraction]:
    """Deterministic pseudo-random rationals strictly inside (-1, 1)."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        den = rng.randint(2, 64)
        num = rng.randint(-den + 1, den - 1)
        q = Fraction(num, den)
        if q not in points:
            points.append(q)
    return points


@dataclass(frozen=True)
class LegendreTable:
    """Immutable family table up to ``max_degree``; safe to share across threads."""

    max_degree: int
    P: tuple[Polynomial, ...]
    p_low: tuple[Optional[Polynomial], ...]
    gamma: tuple[Polynomial, ...]


def _rodrigues_core(k: int, order: int) -> Polynomial:
    # (d/dt)^order (t^2 - 1)^k / (2^k k!), expanded exactly
    base = (T * T - 1) ** k
    for _ in range(order):
        base = base.derivative()
    return base / (2**k * factorial(k))


def rodrigues_polynomial(k: int) -> Polynomial:
    """P_k from the Rodrigues form, by direct expansion (the cross-check route)."""
    return _rodrigues_core(k, k)


def build_table(max_degree: int) -> LegendreTable:
    """Build the exact table for all degrees 0..max_degree (max_degree >= 2)."""
    if max_degree < 2:
        raise ValueError(f"max_degree must be >= 2, got {max_degree}")
    P = [ONE, T]
    for k in range(1, max_degree):
        nxt = ((2 * k + 1) * T * P[k] - k * P[k - 1]) / (k + 1)
        P.append(nxt)
    p_low: list[Optional[Polynomial]] = [None, None]
    for k in range(2, max_degree + 1):
        p_low.append(_rodrigues_core(k, k - 2))
    gamma = [
        poly([Fraction(1, 2), 0, Fraction(1, 2)]),
        poly([0, Fraction(-3, 2), 0, Fraction(1, 2)]),
    ]
    for k in range(2, max_degree + 1):
        gamma.append(p_low[k] * (2 * k + 1))
    return LegendreTable(max_degree, tuple(P), tuple(p_low), tuple(gamma))


_cache_lock = threading.Lock()
_cached_table: Optional[LegendreTable] = None


def shared_table(min_degree: int) -> LegendreTable:
    """Cached table of degree >= min_degree, grown lazily as larger degrees are asked for."""
    global _cached_table
    need = max(min_degree, 2)
    with _cache_lock:
        if _cached_table is None or _cached_table.max_degree < need:
            _cached_table = build_table(need)
        return _cached_table


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    max_degree: int
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Optional[IdentityCheck]:
        return next((c for c in self.checks if not c.ok), None)

    def lines(self) -> list[str]:
        return [
            f"{'PASS' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks
        ]


def _central_value(k: int) -> Fraction:
    # P_k(0): 0 for odd k, 1 for k=0, (-1)^n (2n-1)!!/(2n)!! for k=2n
    if k % 2 == 1:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    n = k // 2
    return Fraction((-1) ** n * double_factorial(2 * n - 1), double_factorial(2 * n))


def _central_value_low(k: int) -> Fraction:
    # p_k(0): 0 for odd k >= 3, 1/8 for k=2, (-1)^(n-1) (2n-3)!!/(2n+2)!! for k=2n >= 4
    if k % 2 == 1:
        return Fraction(0)
    if k == 2:
        return Fraction(1, 8)
    n = k // 2
    return Fraction((-1) ** (n - 1) * double_factorial(2 * n - 3), double_factorial(2 * n + 2))


def check_identities(
    table: LegendreTable, xs: Optional[Sequence[Fraction]] = None
) -> IdentityReport:
    """Exhaustively re-check every closed-form identity the table is built on.

    All checks run in exact arithmetic over every degree k <= max_degree
    (pairwise checks over every valid pair). ``xs`` gives the kernel points
    used for the |t - x| moment checks; defaults to 10 deterministic
    rationals in (-1, 1). Failures are data in the report, never raised.
    """
    if xs is None:
        xs = sample_points(10)
    K = table.max_degree
    checks: list[IdentityCheck] = []

    def run(name: str, fail_detail: Optional[str]):
        checks.append(
            IdentityCheck(name, fail_detail is None, fail_detail or "")
        )

    def first_bad(pairs):
        for label, got, want in pairs:
            if got != want:
                return f"{label}: got {got}, want {want}"
        return None

    run(
        "degree and leading coefficient of P_k",
        first_bad(
            (f"k={k}", (table.P[k].degree, table.P[k].coeffs[-1]),
             (k, Fraction(factorial(2 * k), 2**k * factorial(k) ** 2)))
            for k in range(K + 1)
        ),
    )
    run(
        "recurrence P_k matches Rodrigues expansion",
        first_bad((f"k={k}", table.P[k], rodrigues_polynomial(k)) for k in range(K + 1)),
    )
    run(
        "endpoint values P_k(-1) = (-1)^k, P_k(1) = 1",
        first_bad(
            (f"k={k}", (table.P[k](-1), table.P[k](1)), (Fraction((-1) ** k), Fraction(1)))
            for k in range(K + 1)
        ),
    )
    run(
        "endpoint derivatives P_k'(+-1) = +-(-1)^(k-1) k(k+1)/2",
        first_bad(
            (
                f"k={k}",
                (table.P[k].derivative()(-1), table.P[k].derivative()(1)),
                (
                    Fraction((-1) ** (k + 1) * k * (k + 1), 2),
                    Fraction(k * (k + 1), 2),
                ),
            )
            for k in range(K + 1)
        ),
    )
    run(
        "central values P_k(0) via double factorials",
        first_bad((f"k={k}", table.P[k](0), _central_value(k)) for k in range(K + 1)),
    )
    run(
        "central values p_k(0) via double factorials",
        first_bad((f"k={k}", table.p_low[k](0), _central_value_low(k)) for k in range(2, K + 1)),
    )
    run(
        "orthogonality: integral of P_j P_k is 0 or 2/(2k+1)",
        first_bad(
            (
                f"j={j},k={k}",
                definite_integral(table.P[j] * table.P[k], -1, 1),
                Fraction(2, 2 * k + 1) if j == k else Fraction(0),
            )
            for k in range(K + 1)
            for j in range(k + 1)
        ),
    )
    run(
        "derivative norm: integral of P_k'^2 = k(k+1)",
        first_bad(
            (f"k={k}", definite_integral(table.P[k].derivative() ** 2, -1, 1), Fraction(k * (k + 1)))
            for k in range(K + 1)
        ),
    )
    run(
        "derivative orthogonality: integral of P_k' P_{k+1}' = 0",
        first_bad(
            (f"k={k}", definite_integral(table.P[k].derivative() * table.P[k + 1].derivative(), -1, 1), Fraction(0))
            for k in range(K)
        ),
    )
    run(
        "second derivative p_k'' = P_k",
        first_bad(
            (f"k={k}", table.p_low[k].derivative().derivative(), table.P[k])
            for k in range(2, K + 1)
        ),
    )

    def kernel_closed_form(k: int, x: Fraction) -> Fraction:
        if k == 0:
            return x * x + 1
        if k == 1:
            return x**3 / 3 - x
        return 2 * table.p_low[k](x)

    run(
        "kernel moments: integral of P_k(t)|t-x| matches closed forms",
        first_bad(
            (f"k={k},x={x}", abs_kernel_integral(table.P[k], x), kernel_closed_form(k, x))
            for k in range(K + 1)
            for x in xs
        ),
    )
    run(
        "gamma_k equals kernel moment over squared norm",
        first_bad(
            (
                f"k={k},x={x}",
                table.gamma[k](x),
                abs_kernel_integral(table.P[k], x) / definite_integral(table.P[k] * table.P[k], -1, 1),
            )
            for k in range(K + 1)
            for x in xs
        ),
    )
    return IdentityReport(K, tuple(checks))
